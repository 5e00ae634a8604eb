//! Based maps between extended index sets `{0, e, 1..m} -> {0, e, 1..n}`.

use std::fmt;

use thiserror::Error;

/// A point of an extended index set. `Zero` and `E` are the two basepoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Point {
    Zero,
    E,
    At(usize),
}

impl Point {
    pub fn index(self) -> Option<usize> {
        match self {
            Point::At(k) => Some(k),
            _ => None,
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Zero => write!(f, "0"),
            Point::E => write!(f, "e"),
            Point::At(k) => write!(f, "{k}"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("image {image} of {index} is outside 1..{target}")]
    OutOfRange {
        index: usize,
        image: usize,
        target: usize,
    },
    #[error("cannot compose: inner map lands in {inner_target} points, outer map starts from {outer_source}")]
    NotComposable {
        inner_target: usize,
        outer_source: usize,
    },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// `images[i - 1]` is the image of `i`; `0 -> 0` and `e -> e` are implicit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtMap {
    target: usize,
    images: Vec<Point>,
}

impl ExtMap {
    pub fn new(target: usize, images: Vec<Point>) -> Result<Self, MapError> {
        for (i, p) in images.iter().enumerate() {
            if let Point::At(k) = *p {
                if k == 0 || k > target {
                    return Err(MapError::OutOfRange {
                        index: i + 1,
                        image: k,
                        target,
                    });
                }
            }
        }
        Ok(ExtMap { target, images })
    }

    pub fn identity(n: usize) -> Self {
        ExtMap {
            target: n,
            images: (1..=n).map(Point::At).collect(),
        }
    }

    /// The map `i -> perm[i - 1]` for a permutation written with 1-based values.
    pub fn from_indices(target: usize, indices: &[usize]) -> Result<Self, MapError> {
        Self::new(target, indices.iter().map(|&k| Point::At(k)).collect())
    }

    pub fn source(&self) -> usize {
        self.images.len()
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn images(&self) -> &[Point] {
        &self.images
    }

    /// Image of the index `i` (1-based).
    pub fn image(&self, i: usize) -> Point {
        self.images[i - 1]
    }

    pub fn apply(&self, p: Point) -> Point {
        match p {
            Point::At(i) => self.images[i - 1],
            other => other,
        }
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &ExtMap) -> Result<ExtMap, MapError> {
        if inner.target != self.source() {
            return Err(MapError::NotComposable {
                inner_target: inner.target,
                outer_source: self.source(),
            });
        }
        Ok(ExtMap {
            target: self.target,
            images: inner.images.iter().map(|&p| self.apply(p)).collect(),
        })
    }

    /// No index is sent to a basepoint.
    pub fn is_effective(&self) -> bool {
        self.images.iter().all(|p| matches!(p, Point::At(_)))
    }

    /// Injective as a map of extended sets, hence effective.
    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target + 1];
        for p in &self.images {
            match *p {
                Point::At(k) if !seen[k] => seen[k] = true,
                _ => return false,
            }
        }
        true
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target + 1];
        for p in &self.images {
            if let Point::At(k) = *p {
                seen[k] = true;
            }
        }
        seen[1..].iter().all(|&b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.source() == self.target && self.is_injective()
    }

    /// Surjective and strictly increasing on the indices not sent to a basepoint.
    pub fn is_singular(&self) -> bool {
        let mut next = 1;
        for p in &self.images {
            if let Point::At(k) = *p {
                if k != next {
                    return false;
                }
                next += 1;
            }
        }
        next == self.target + 1
    }

    /// The unique factorisation `self = p ∘ σ` with `σ` singular and `p` effective.
    pub fn canonical_decompose(&self) -> (ExtMap, ExtMap) {
        let mut sigma = Vec::with_capacity(self.images.len());
        let mut p = Vec::new();
        for &img in &self.images {
            match img {
                Point::At(_) => {
                    p.push(img);
                    sigma.push(Point::At(p.len()));
                }
                base => sigma.push(base),
            }
        }
        let k = p.len();
        (
            ExtMap {
                target: k,
                images: sigma,
            },
            ExtMap {
                target: self.target,
                images: p,
            },
        )
    }

    /// `φ_1 ⊕ ... ⊕ φ_k`: block `i` of the source goes to block `i` of the target.
    pub fn block_sum(maps: &[ExtMap], target_arities: &[usize]) -> Result<ExtMap, MapError> {
        if maps.len() != target_arities.len() {
            return Err(MapError::SizeMismatch(format!(
                "{} maps but {} target arities",
                maps.len(),
                target_arities.len()
            )));
        }
        let mut images = Vec::new();
        let mut offset = 0;
        for (i, (m, &r)) in maps.iter().zip(target_arities).enumerate() {
            if m.target != r {
                return Err(MapError::SizeMismatch(format!(
                    "map {} lands in {} points, expected {}",
                    i + 1,
                    m.target,
                    r
                )));
            }
            images.extend(m.images.iter().map(|&p| match p {
                Point::At(k) => Point::At(k + offset),
                base => base,
            }));
            offset += r;
        }
        Ok(ExtMap {
            target: offset,
            images,
        })
    }

    /// Width of source block `t` when target block `s` has width `arities[s - 1]`:
    /// blocks over `0` are empty and blocks over `e` have width one.
    pub fn pulled_back_widths(&self, arities: &[usize]) -> Result<Vec<usize>, MapError> {
        if arities.len() != self.target {
            return Err(MapError::SizeMismatch(format!(
                "{} arities for a map into {} points",
                arities.len(),
                self.target
            )));
        }
        Ok(self
            .images
            .iter()
            .map(|p| match *p {
                Point::Zero => 0,
                Point::E => 1,
                Point::At(s) => arities[s - 1],
            })
            .collect())
    }

    /// Sends source block `t` identically onto target block `self(t)`; blocks over `e`
    /// go to `e`. For singular maps without zeros this is the map written `ψ̃`.
    pub fn block_expand(&self, arities: &[usize]) -> Result<ExtMap, MapError> {
        let widths = self.pulled_back_widths(arities)?;
        let mut offsets = Vec::with_capacity(arities.len());
        let mut acc = 0;
        for &a in arities {
            offsets.push(acc);
            acc += a;
        }
        let mut images = Vec::new();
        for (p, w) in self.images.iter().zip(widths) {
            for u in 1..=w {
                images.push(match *p {
                    Point::Zero => Point::Zero,
                    Point::E => Point::E,
                    Point::At(s) => Point::At(offsets[s - 1] + u),
                });
            }
        }
        Ok(ExtMap {
            target: acc,
            images,
        })
    }

    /// `ψ̃` for a singular `ψ` that sends no index to `0`.
    pub fn psi_tilde(&self, arities: &[usize]) -> Result<ExtMap, MapError> {
        if !self.is_singular() {
            return Err(MapError::Precondition(format!("{self} is not singular")));
        }
        if self.images.contains(&Point::Zero) {
            return Err(MapError::Precondition(format!("{self} sends an index to 0")));
        }
        self.block_expand(arities)
    }

    /// Every based map `m -> n`, in lexicographic order of image sequences.
    pub fn all(m: usize, n: usize) -> MapIter {
        MapIter::new(m, n, false)
    }

    /// Every effective map `m -> n`.
    pub fn all_effective(m: usize, n: usize) -> MapIter {
        MapIter::new(m, n, true)
    }

    /// The bijections of `1..n`.
    pub fn permutations(n: usize) -> Vec<ExtMap> {
        ExtMap::all_effective(n, n)
            .filter(ExtMap::is_injective)
            .collect()
    }
}

impl fmt::Display for ExtMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}->{}", i + 1, p)?;
        }
        write!(f, "}}")
    }
}

/// Mixed-radix counter over image sequences.
pub struct MapIter {
    target: usize,
    digits: Vec<usize>,
    base: usize,
    effective: bool,
    done: bool,
}

impl MapIter {
    fn new(m: usize, n: usize, effective: bool) -> Self {
        let base = if effective { n } else { n + 2 };
        MapIter {
            target: n,
            digits: vec![0; m],
            base,
            effective,
            done: m > 0 && base == 0,
        }
    }

    fn point(&self, d: usize) -> Point {
        if self.effective {
            Point::At(d + 1)
        } else {
            match d {
                0 => Point::Zero,
                1 => Point::E,
                k => Point::At(k - 1),
            }
        }
    }
}

impl Iterator for MapIter {
    type Item = ExtMap;

    fn next(&mut self) -> Option<ExtMap> {
        if self.done {
            return None;
        }
        let images = self.digits.iter().map(|&d| self.point(d)).collect();
        let out = ExtMap {
            target: self.target,
            images,
        };
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.base {
                break;
            }
            self.digits[i] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn map(target: usize, imgs: &[&str]) -> ExtMap {
        let images = imgs
            .iter()
            .map(|s| match *s {
                "0" => Point::Zero,
                "e" => Point::E,
                k => Point::At(k.parse().unwrap()),
            })
            .collect();
        ExtMap::new(target, images).unwrap()
    }

    #[test]
    fn decomposition_of_mixed_map() {
        let phi = map(2, &["e", "1", "2", "1", "0"]);
        let (sigma, p) = phi.canonical_decompose();
        assert_eq!(sigma, map(3, &["e", "1", "2", "3", "0"]));
        assert_eq!(p, map(2, &["1", "2", "1"]));
        assert!(sigma.is_singular());
        assert!(p.is_effective());
        assert_eq!(p.after(&sigma).unwrap(), phi);
    }

    #[test]
    fn decomposition_edge_cases() {
        let eff = map(3, &["3", "1", "3"]);
        let (s, p) = eff.canonical_decompose();
        assert_eq!(s, ExtMap::identity(3));
        assert_eq!(p, eff);
        let sing = map(2, &["0", "1", "e", "2"]);
        let (s, p) = sing.canonical_decompose();
        assert_eq!(s, sing);
        assert_eq!(p, ExtMap::identity(2));
    }

    #[test]
    fn block_sums() {
        let id1 = ExtMap::identity(1);
        assert_eq!(
            ExtMap::block_sum(&[id1.clone(), id1.clone()], &[1, 1]).unwrap(),
            ExtMap::identity(2)
        );
        assert_eq!(
            ExtMap::block_sum(&[map(1, &["0"]), id1.clone()], &[1, 1]).unwrap(),
            map(2, &["0", "2"])
        );
        assert_eq!(
            ExtMap::block_sum(&[map(1, &["e", "1"]), id1], &[1, 1]).unwrap(),
            map(2, &["e", "1", "2"])
        );
        assert!(ExtMap::block_sum(&[map(2, &["1"])], &[1]).is_err());
    }

    #[test]
    fn psi_tilde_examples() {
        assert_eq!(
            ExtMap::identity(2).psi_tilde(&[2, 3]).unwrap(),
            ExtMap::identity(5)
        );
        assert_eq!(
            map(1, &["e", "1"]).psi_tilde(&[2]).unwrap(),
            map(2, &["e", "1", "2"])
        );
        assert_eq!(
            map(1, &["1", "e"]).psi_tilde(&[1]).unwrap(),
            map(1, &["1", "e"])
        );
        assert!(map(1, &["0", "1"]).psi_tilde(&[1]).is_err());
        assert!(map(2, &["2", "1"]).psi_tilde(&[1, 1]).is_err());
    }

    #[test]
    fn iterator_counts() {
        assert_eq!(ExtMap::all(3, 2).count(), 64);
        assert_eq!(ExtMap::all_effective(3, 2).count(), 8);
        assert_eq!(ExtMap::all(0, 3).count(), 1);
        assert_eq!(ExtMap::all_effective(2, 0).count(), 0);
        assert_eq!(ExtMap::permutations(3).len(), 6);
    }

    #[test]
    fn display() {
        assert_eq!(map(2, &["e", "1", "0"]).to_string(), "{1->e, 2->1, 3->0}");
        assert_eq!(ExtMap::identity(0).to_string(), "{}");
    }
}
