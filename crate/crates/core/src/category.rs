//! The index category: objects are polynomials, a morphism `(f, φ, g)` is a based
//! map with `φ_* f = g`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::map::{ExtMap, MapError, Point};
use crate::poly::{
    enumerate_r, push_forward, special_of_type, substitute, Monomial, PolyError, RPoly,
};

/// Largest candidate-map count a hom search will walk.
pub const HOM_BUDGET: u64 = 10_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CategoryError {
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error("search budget exceeded: {candidates} candidate maps or search steps (limit {limit})")]
    Budget { candidates: u64, limit: u64 },
    #[error("arity {0} is above the cap for this operation")]
    ArityCap(usize),
    #[error("{0} is not special")]
    NotSpecial(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RMorphism {
    source: RPoly,
    map: ExtMap,
    target: RPoly,
}

impl RMorphism {
    pub fn validate(f: &RPoly, phi: &ExtMap, g: &RPoly) -> Result<Self, CategoryError> {
        if phi.source() != f.arity() || phi.target() != g.arity() {
            return Err(CategoryError::NotAMorphism(format!(
                "map {} -> {} does not connect arities {} and {}",
                phi.source(),
                phi.target(),
                f.arity(),
                g.arity()
            )));
        }
        let image = substitute(phi, f)?;
        if image != g.to_intpoly() {
            return Err(CategoryError::NotAMorphism(match image.violation() {
                Some(v) => format!("substitution gives {image} ({v})"),
                None => format!("substitution gives {image}, not {g}"),
            }));
        }
        Ok(RMorphism {
            source: f.clone(),
            map: phi.clone(),
            target: g.clone(),
        })
    }

    /// Pushes `f` forward along `phi`, failing when the image leaves `R`.
    pub fn along(f: &RPoly, phi: &ExtMap) -> Result<Self, CategoryError> {
        let g = push_forward(phi, f)
            .map_err(|e| CategoryError::NotAMorphism(format!("{} along {phi}: {e}", f)))?;
        Ok(RMorphism {
            source: f.clone(),
            map: phi.clone(),
            target: g,
        })
    }

    pub fn identity(f: &RPoly) -> Self {
        RMorphism {
            source: f.clone(),
            map: ExtMap::identity(f.arity()),
            target: f.clone(),
        }
    }

    pub fn source(&self) -> &RPoly {
        &self.source
    }

    pub fn map(&self) -> &ExtMap {
        &self.map
    }

    pub fn target(&self) -> &RPoly {
        &self.target
    }

    pub fn is_effective(&self) -> bool {
        self.map.is_effective()
    }

    pub fn is_singular(&self) -> bool {
        self.map.is_singular()
    }

    /// Effective between non-degenerate objects.
    pub fn is_nondegenerate_class(&self) -> bool {
        self.is_effective() && self.source.is_nondegenerate() && self.target.is_nondegenerate()
    }

    /// `self ∘ inner`.
    pub fn after(&self, inner: &RMorphism) -> Result<RMorphism, CategoryError> {
        if inner.target != self.source {
            return Err(CategoryError::NotAMorphism(format!(
                "{} does not end where {} starts",
                inner, self
            )));
        }
        Ok(RMorphism {
            source: inner.source.clone(),
            map: self.map.after(&inner.map)?,
            target: self.target.clone(),
        })
    }

    /// The factorisation through the singular part, `(σ-morphism, p-morphism)`.
    pub fn canonical_decompose(&self) -> (RMorphism, RMorphism) {
        let (sigma, p) = self.map.canonical_decompose();
        let first = RMorphism::along(&self.source, &sigma)
            .expect("singular parts of morphisms stay in R");
        let second = RMorphism {
            source: first.target.clone(),
            map: p,
            target: self.target.clone(),
        };
        (first, second)
    }

    pub fn lambda_maps(&self) -> LambdaMaps {
        induced_lambda_maps(self)
    }
}

impl fmt::Display for RMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} |{}| {}", self.source, self.map, self.target)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomClass {
    All,
    Effective,
    /// Effective maps between non-degenerate objects.
    NonDegenerate,
}

fn candidate_count(m: usize, per_index: usize) -> u64 {
    (0..m).fold(1u64, |acc, _| acc.saturating_mul(per_index as u64))
}

struct HomSearch<'a> {
    source: &'a RPoly,
    target: &'a RPoly,
    candidates: Vec<Point>,
    /// Monomials of the source indexed by their largest variable.
    completing: Vec<Vec<usize>>,
    images: Vec<Point>,
    used: Vec<bool>,
    found: Vec<ExtMap>,
    stop_after: Option<usize>,
    steps: u64,
}

impl HomSearch<'_> {
    /// Image of a completed source monomial: `Ok(None)` when it is killed,
    /// `Ok(Some(pos))` for a target monomial, `Err` when no valid image exists.
    fn monomial_image(&self, m: &Monomial) -> Result<Option<usize>, ()> {
        let mut key = Vec::with_capacity(m.degree());
        for &i in m.support() {
            match self.images[i - 1] {
                Point::Zero => return Ok(None),
                Point::E => {}
                Point::At(k) => key.push(k),
            }
        }
        if key.is_empty() {
            return Err(());
        }
        key.sort_unstable();
        if key.windows(2).any(|w| w[0] == w[1]) {
            return Err(());
        }
        match self.target.position(&Monomial::from_sorted(key)) {
            Some(pos) if !self.used[pos] => Ok(Some(pos)),
            _ => Err(()),
        }
    }

    fn done(&self) -> bool {
        self.steps > HOM_BUDGET || self.stop_after.is_some_and(|k| self.found.len() >= k)
    }

    fn run(&mut self, v: usize) {
        if self.done() {
            return;
        }
        if v > self.source.arity() {
            if self.used.iter().all(|&b| b) {
                self.found.push(
                    ExtMap::new(self.target.arity(), self.images.clone())
                        .expect("candidates are in range"),
                );
            }
            return;
        }
        for c in 0..self.candidates.len() {
            self.steps += 1;
            self.images[v - 1] = self.candidates[c];
            let mut marked = Vec::new();
            let mut ok = true;
            for &mi in &self.completing[v] {
                match self.monomial_image(&self.source.monomials()[mi]) {
                    Ok(None) => {}
                    Ok(Some(pos)) => {
                        self.used[pos] = true;
                        marked.push(pos);
                    }
                    Err(()) => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                self.run(v + 1);
            }
            for pos in marked {
                self.used[pos] = false;
            }
            if self.done() {
                return;
            }
        }
    }
}

fn search_maps(
    f: &RPoly,
    g: &RPoly,
    class: HomClass,
    stop_after: Option<usize>,
) -> Result<Vec<ExtMap>, CategoryError> {
    if class == HomClass::NonDegenerate && !(f.is_nondegenerate() && g.is_nondegenerate()) {
        return Ok(Vec::new());
    }
    let n = g.arity();
    let mut candidates = Vec::new();
    if class == HomClass::All {
        candidates.push(Point::Zero);
        candidates.push(Point::E);
    }
    candidates.extend((1..=n).map(Point::At));
    let mut completing = vec![Vec::new(); f.arity() + 1];
    for (i, m) in f.monomials().iter().enumerate() {
        completing[m.max_index()].push(i);
    }
    let mut search = HomSearch {
        source: f,
        target: g,
        candidates,
        completing,
        images: vec![Point::Zero; f.arity()],
        used: vec![false; g.len()],
        found: Vec::new(),
        stop_after,
        steps: 0,
    };
    search.run(1);
    if search.steps > HOM_BUDGET {
        return Err(CategoryError::Budget {
            candidates: search.steps,
            limit: HOM_BUDGET,
        });
    }
    Ok(search.found)
}

/// Every morphism `f -> g` in the given class, in lexicographic order of maps.
pub fn enumerate_hom(
    f: &RPoly,
    g: &RPoly,
    class: HomClass,
) -> Result<Vec<RMorphism>, CategoryError> {
    Ok(search_maps(f, g, class, None)?
        .into_iter()
        .map(|map| RMorphism {
            source: f.clone(),
            map,
            target: g.clone(),
        })
        .collect())
}

pub fn has_hom(f: &RPoly, g: &RPoly, class: HomClass) -> Result<bool, CategoryError> {
    Ok(!search_maps(f, g, class, Some(1))?.is_empty())
}

pub fn automorphisms(f: &RPoly) -> Result<Vec<RMorphism>, CategoryError> {
    enumerate_hom(f, f, HomClass::Effective)
}

/// The maps a morphism induces on monomial listings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaMaps {
    /// `φ′`: for each position in `Λ_target`, the position in `Λ_source` mapping onto it.
    pub prime: Vec<usize>,
    /// `φ_J`: for the target monomial at position `t` and each position `s` in
    /// `Γ_J`, the position in `Γ_{φ′J}` of the variable sent to `Γ_J[s]`.
    pub restrictions: Vec<Vec<usize>>,
    /// `φ̃` for effective morphisms: source position to target position.
    pub tilde: Option<Vec<usize>>,
}

pub fn induced_lambda_maps(m: &RMorphism) -> LambdaMaps {
    let g = &m.target;
    let mut prime = vec![usize::MAX; g.len()];
    let mut restrictions = vec![Vec::new(); g.len()];
    let mut tilde = Vec::with_capacity(m.source.len());
    for (q, mono) in m.source.monomials().iter().enumerate() {
        let mut pairs = Vec::new();
        let mut killed = false;
        for (pos, &i) in mono.support().iter().enumerate() {
            match m.map.image(i) {
                Point::Zero => killed = true,
                Point::E => {}
                Point::At(k) => pairs.push((k, pos)),
            }
        }
        if killed {
            tilde.push(usize::MAX);
            continue;
        }
        pairs.sort_unstable();
        let key = Monomial::from_sorted(pairs.iter().map(|&(k, _)| k).collect());
        let t = g.position(&key).expect("valid morphisms hit target monomials");
        prime[t] = q;
        restrictions[t] = pairs.into_iter().map(|(_, pos)| pos).collect();
        tilde.push(t);
    }
    LambdaMaps {
        prime,
        restrictions,
        tilde: m.is_effective().then_some(tilde),
    }
}

/// The special object of `f`'s component with the block assignment sending block
/// `j` to the `j`-th monomial of `f` listed by size, ties in Λ-order.
pub fn special_rep_morphism(f: &RPoly) -> RMorphism {
    let special = special_of_type(&f.type_of()).expect("types of polynomials are valid");
    let mut listing: Vec<&Monomial> = f.monomials().iter().collect();
    listing.sort_by_key(|m| m.degree());
    let images = listing
        .iter()
        .flat_map(|m| m.support().iter().map(|&i| Point::At(i)))
        .collect();
    let map = ExtMap::new(f.arity(), images).expect("supports lie in range");
    RMorphism::validate(&special, &map, f).expect("block assignment is a morphism")
}

/// One connected component of the effective subcategory met by `R(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub specials: Vec<RPoly>,
    pub members: Vec<RPoly>,
}

/// Union-find over effective morphisms among `R(n)` objects and their specials.
pub fn connected_components(n: usize) -> Result<Vec<Component>, CategoryError> {
    if n > 3 {
        return Err(CategoryError::ArityCap(n));
    }
    let objects = enumerate_r(n)?;
    let mut index: BTreeMap<RPoly, usize> = BTreeMap::new();
    let mut all: Vec<RPoly> = Vec::new();
    let mut intern = |p: &RPoly, all: &mut Vec<RPoly>| -> usize {
        *index.entry(p.clone()).or_insert_with(|| {
            all.push(p.clone());
            all.len() - 1
        })
    };
    let mut edges = Vec::new();
    for f in &objects {
        let a = intern(f, &mut all);
        for phi in ExtMap::all_effective(n, n) {
            if let Ok(g) = push_forward(&phi, f) {
                let b = intern(&g, &mut all);
                edges.push((a, b));
            }
        }
        let rep = special_rep_morphism(f);
        let s = intern(rep.source(), &mut all);
        edges.push((s, a));
    }
    let mut parent: Vec<usize> = (0..all.len()).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Component> = BTreeMap::new();
    for (i, p) in all.iter().enumerate() {
        let r = find(&mut parent, i);
        let c = groups.entry(r).or_insert_with(|| Component {
            specials: Vec::new(),
            members: Vec::new(),
        });
        if p.is_special() {
            c.specials.push(p.clone());
        }
        if p.arity() == n {
            c.members.push(p.clone());
        }
    }
    let mut out: Vec<Component> = groups.into_values().collect();
    for c in &mut out {
        c.specials.sort();
        c.members.sort();
    }
    out.sort_by(|a, b| a.specials.cmp(&b.specials));
    Ok(out)
}

/// Non-degenerate objects of `f`'s component with arity at least `level`.
pub fn filtration(f: &RPoly, level: usize) -> Result<Vec<RPoly>, CategoryError> {
    if !f.is_special() {
        return Err(CategoryError::NotSpecial(f.to_string()));
    }
    let top = f.arity();
    let lowest = f.type_of().sizes().last().copied().unwrap_or(0);
    let mut out = BTreeSet::new();
    for a in level.max(lowest)..=top {
        let count = candidate_count(top, a);
        if count > HOM_BUDGET {
            return Err(CategoryError::Budget {
                candidates: count,
                limit: HOM_BUDGET,
            });
        }
        for phi in ExtMap::all_effective(top, a) {
            if !phi.is_surjective() {
                continue;
            }
            if let Ok(g) = push_forward(&phi, f) {
                out.insert(g);
            }
        }
    }
    Ok(out.into_iter().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(arity: usize, s: &[&[usize]]) -> RPoly {
        RPoly::from_supports(arity, s).unwrap()
    }

    fn map(target: usize, imgs: &[&str]) -> ExtMap {
        ExtMap::new(
            target,
            imgs.iter()
                .map(|s| match *s {
                    "0" => Point::Zero,
                    "e" => Point::E,
                    k => Point::At(k.parse().unwrap()),
                })
                .collect(),
        )
        .unwrap()
    }

    fn worked() -> RMorphism {
        RMorphism::validate(
            &p(5, &[&[1, 2, 3], &[1, 4], &[5]]),
            &map(2, &["e", "1", "2", "1", "0"]),
            &p(2, &[&[1, 2], &[1]]),
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        let m = worked();
        assert!(!m.is_effective() && !m.is_singular());
        let id = RMorphism::validate(&RPoly::unit(), &ExtMap::identity(1), &RPoly::unit()).unwrap();
        assert!(id.is_effective() && id.is_singular());
        let bad = RMorphism::validate(
            &p(2, &[&[1], &[2]]),
            &map(1, &["1", "1"]),
            &RPoly::unit(),
        );
        assert!(matches!(bad, Err(CategoryError::NotAMorphism(_))));
    }

    #[test]
    fn hom_counts() {
        let a1 = RPoly::unit();
        assert_eq!(enumerate_hom(&a1, &a1, HomClass::All).unwrap().len(), 1);
        let sum = p(2, &[&[1], &[2]]);
        assert_eq!(enumerate_hom(&sum, &sum, HomClass::All).unwrap().len(), 2);
        let prod = p(2, &[&[1, 2]]);
        assert_eq!(enumerate_hom(&prod, &prod, HomClass::All).unwrap().len(), 2);
    }

    #[test]
    fn hom_search_agrees_with_brute_force() {
        for m in 0..=2 {
            for n in 0..=2 {
                for f in enumerate_r(m).unwrap() {
                    for g in enumerate_r(n).unwrap() {
                        let brute: Vec<ExtMap> = ExtMap::all(m, n)
                            .filter(|phi| RMorphism::validate(&f, phi, &g).is_ok())
                            .collect();
                        let fast: Vec<ExtMap> = enumerate_hom(&f, &g, HomClass::All)
                            .unwrap()
                            .into_iter()
                            .map(|x| x.map)
                            .collect();
                        assert_eq!(brute, fast, "{f} -> {g}");
                    }
                }
            }
        }
    }

    #[test]
    fn budget_guard() {
        let r = enumerate_hom(&RPoly::zero(12), &p(4, &[&[1], &[2], &[3], &[4]]), HomClass::All);
        assert!(matches!(r, Err(CategoryError::Budget { .. })));
    }

    #[test]
    fn lambda_maps_of_worked_example() {
        let lm = worked().lambda_maps();
        // Λ_target = ({1}, {1,2}); Λ_source = ({5}, {1,4}, {1,2,3}).
        assert_eq!(lm.prime, vec![1, 2]);
        // φ_{1}: 1 -> 4 (position 1 of {1,4}); φ_{1,2}: 1 -> 2, 2 -> 3.
        assert_eq!(lm.restrictions, vec![vec![1], vec![1, 2]]);
        assert!(lm.tilde.is_none());
        let sum = p(2, &[&[1], &[2]]);
        let swap = RMorphism::validate(&sum, &map(2, &["2", "1"]), &sum).unwrap();
        assert_eq!(swap.lambda_maps().tilde, Some(vec![1, 0]));
    }

    #[test]
    fn decomposition_of_morphisms() {
        let (s, q) = worked().canonical_decompose();
        assert_eq!(s.target(), &p(3, &[&[1, 2], &[3]]));
        assert_eq!(q.after(&s).unwrap(), worked());
    }

    #[test]
    fn special_representatives() {
        let rep = special_rep_morphism(&p(5, &[&[1, 2, 3], &[1, 4], &[5]]));
        assert_eq!(rep.source(), &p(6, &[&[1], &[2, 3], &[4, 5, 6]]));
        assert_eq!(rep.map(), &map(5, &["5", "1", "4", "1", "2", "3"]));
        let rep = special_rep_morphism(&p(2, &[&[1, 2], &[1]]));
        assert_eq!(rep.map(), &map(2, &["1", "1", "2"]));
        let rep = special_rep_morphism(&RPoly::zero(2));
        assert_eq!(rep.source(), &RPoly::zero(0));
        let s = p(3, &[&[1], &[2, 3]]);
        assert_eq!(special_rep_morphism(&s).map(), &ExtMap::identity(3));
    }

    #[test]
    fn components_small() {
        let c1 = connected_components(1).unwrap();
        assert_eq!(c1.len(), 2);
        let c2 = connected_components(2).unwrap();
        for c in &c2 {
            assert_eq!(c.specials.len(), 1);
            let t = c.specials[0].type_of();
            assert!(c.members.iter().all(|m| m.type_of() == t));
        }
        assert!(connected_components(4).is_err());
    }

    #[test]
    fn filtration_levels() {
        let f = p(2, &[&[1], &[2]]);
        assert_eq!(filtration(&f, 2).unwrap(), vec![f.clone()]);
        assert!(filtration(&f, 3).unwrap().is_empty());
        let g = p(3, &[&[1], &[2, 3]]);
        let lvl2 = filtration(&g, 2).unwrap();
        assert!(lvl2.contains(&p(2, &[&[1], &[1, 2]])));
        assert!(lvl2.contains(&p(2, &[&[2], &[1, 2]])));
        assert_eq!(lvl2.iter().filter(|h| h.arity() == 3).count(), 3);
        assert_eq!(lvl2.len(), 5);
        assert_eq!(filtration(&g, 0).unwrap(), lvl2);
        assert!(filtration(&p(2, &[&[1, 2], &[1]]), 0).is_err());
        assert_eq!(filtration(&RPoly::zero(0), 0).unwrap(), vec![RPoly::zero(0)]);
    }
}
