//! The wreath category `F≀F`, its polynomial assignment, and the category of
//! ring operators it induces from a ring operad.
//!
//! Slots `(h, j)` of an object `(n, S)` are listed `j`-major:
//! `(1,1), .., (s_1,1), (1,2), .., (s_n,n)`.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::category::RMorphism;
use crate::map::{ExtMap, Point};
use crate::operad::{DiscreteAlgebra, OperadError, Report, RingOperad, Section};
use crate::poly::{compose, substitute, ExtPoly, Monomial, PolyError, RPoly};
use crate::text::{Cursor, TextError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WreathError {
    #[error("object mismatch: {0}")]
    ObjectMismatch(String),
    #[error("invalid morphism: {0}")]
    Invalid(String),
    #[error("index mismatch: {0}")]
    IndexMismatch(String),
    #[error("arity mismatch: expected {expected} inputs, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("not a morphism of Π≀Π")]
    NotPiWrPi,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Operad(#[from] OperadError),
    #[error(transparent)]
    Text(#[from] TextError),
}

/// `(n, S)` with `S = (s_1, .., s_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FFObject {
    pub s: Vec<usize>,
}

impl FFObject {
    pub fn new(s: Vec<usize>) -> Self {
        FFObject { s }
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    /// `|S| = s_1 + .. + s_n`.
    pub fn total(&self) -> usize {
        self.s.iter().sum()
    }

    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.s
            .iter()
            .map(|&x| {
                let o = acc;
                acc += x;
                o
            })
            .collect()
    }

    /// Every `(h, j)` in slot order.
    pub fn slots(&self) -> Vec<(usize, usize)> {
        self.s
            .iter()
            .enumerate()
            .flat_map(|(j, &sj)| (1..=sj).map(move |h| (h, j + 1)))
            .collect()
    }
}

impl fmt::Display for FFObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.s.iter().map(ToString::to_string).collect();
        write!(f, "({}:[{}])", self.n(), s.join(","))
    }
}

/// `(φ, d_1, .., d_n)`; `d_j` is keyed by tuples over `φ⁻¹(j)` in increasing order,
/// with non-basepoint coordinates only, and the empty tuple standing for `1_*`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FFMorphism {
    source: FFObject,
    target: FFObject,
    phi: Vec<usize>,
    d: Vec<BTreeMap<Vec<usize>, usize>>,
}

fn tuples(ranges: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &r in ranges {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=r).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

impl FFMorphism {
    pub fn new(
        source: FFObject,
        target: FFObject,
        phi: Vec<usize>,
        d: Vec<BTreeMap<Vec<usize>, usize>>,
    ) -> Result<Self, WreathError> {
        if phi.len() != source.n() {
            return Err(WreathError::Invalid(format!(
                "phi has {} entries for a source of length {}",
                phi.len(),
                source.n()
            )));
        }
        if let Some(&bad) = phi.iter().find(|&&p| p > target.n()) {
            return Err(WreathError::Invalid(format!("phi value {bad} exceeds {}", target.n())));
        }
        if d.len() != target.n() {
            return Err(WreathError::Invalid(format!(
                "{} components d_j for a target of length {}",
                d.len(),
                target.n()
            )));
        }
        let m = FFMorphism { source, target, phi, d };
        for j in 1..=m.target.n() {
            let expected = tuples(&m.widths(j));
            let dj = &m.d[j - 1];
            if let Some(t) = expected.iter().find(|t| !dj.contains_key(*t)) {
                return Err(WreathError::Invalid(format!("d{j} has no value at {}", tuple_text(t))));
            }
            if dj.len() != expected.len() {
                let extra = dj.keys().find(|k| !expected.contains(k)).expect("extra key");
                return Err(WreathError::Invalid(format!("d{j} has a stray key {}", tuple_text(extra))));
            }
            let sj = m.target.s[j - 1];
            if let Some((t, v)) = dj.iter().find(|(_, &v)| v > sj) {
                return Err(WreathError::Invalid(format!("d{j}{} = {v} exceeds {sj}", tuple_text(t))));
            }
        }
        Ok(m)
    }

    pub fn identity(obj: &FFObject) -> Self {
        let d = obj
            .s
            .iter()
            .map(|&sj| (1..=sj).map(|k| (vec![k], k)).collect())
            .collect();
        FFMorphism {
            source: obj.clone(),
            target: obj.clone(),
            phi: (1..=obj.n()).collect(),
            d,
        }
    }

    pub fn source(&self) -> &FFObject {
        &self.source
    }

    pub fn target(&self) -> &FFObject {
        &self.target
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn d(&self, j: usize) -> &BTreeMap<Vec<usize>, usize> {
        &self.d[j - 1]
    }

    /// `φ⁻¹(j)` in increasing order.
    pub fn preimage(&self, j: usize) -> Vec<usize> {
        (1..=self.phi.len()).filter(|&i| self.phi[i - 1] == j).collect()
    }

    fn widths(&self, j: usize) -> Vec<usize> {
        self.preimage(j).iter().map(|&i| self.source.s[i - 1]).collect()
    }

    pub fn is_pi_wr_pi(&self) -> bool {
        let injective = |values: &mut dyn Iterator<Item = usize>| {
            let mut seen = std::collections::HashSet::new();
            values.filter(|&v| v != 0).all(|v| seen.insert(v))
        };
        injective(&mut self.phi.iter().copied()) && self.d.iter().all(|dj| injective(&mut dj.values().copied()))
    }

    /// `f_{φ,d,h,j}` for every slot of the target, over `|R|` variables.
    pub fn polynomial_assignment(&self) -> Result<Vec<ExtPoly>, WreathError> {
        let width = self.source.total();
        let offsets = self.source.offsets();
        let mut out = Vec::new();
        for (h, j) in self.target.slots() {
            let pre = self.preimage(j);
            let dj = &self.d[j - 1];
            if pre.is_empty() {
                out.push(if dj[&Vec::new()] == h {
                    ExtPoly::One
                } else {
                    ExtPoly::Poly(RPoly::zero(width))
                });
                continue;
            }
            let monomials = dj
                .iter()
                .filter(|(_, &v)| v == h)
                .map(|(t, _)| {
                    let vars = pre.iter().zip(t).map(|(&i, &k)| offsets[i - 1] + k).collect();
                    Monomial::new(vars)
                })
                .collect::<Result<Vec<_>, _>>()?;
            out.push(ExtPoly::Poly(RPoly::new(width, monomials)?));
        }
        Ok(out)
    }
}

fn tuple_text(t: &[usize]) -> String {
    let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for FFMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let phi: Vec<String> = self
            .phi
            .iter()
            .enumerate()
            .map(|(i, p)| format!("{}->{p}", i + 1))
            .collect();
        write!(f, "{} -> {} : phi={{{}}}", self.source, self.target, phi.join(", "))?;
        for (j, dj) in self.d.iter().enumerate() {
            let entries: Vec<String> = dj.iter().map(|(t, v)| format!("{}->{v}", tuple_text(t))).collect();
            write!(f, "; d{}={{{}}}", j + 1, entries.join(", "))?;
        }
        Ok(())
    }
}

/// `outer ∘ inner`.
pub fn ff_compose(outer: &FFMorphism, inner: &FFMorphism) -> Result<FFMorphism, WreathError> {
    if inner.target != outer.source {
        return Err(WreathError::ObjectMismatch(format!(
            "inner target {} is not outer source {}",
            inner.target, outer.source
        )));
    }
    let phi: Vec<usize> = inner
        .phi
        .iter()
        .map(|&p| if p == 0 { 0 } else { outer.phi[p - 1] })
        .collect();
    let mut d = Vec::with_capacity(outer.target.n());
    for j in 1..=outer.target.n() {
        let pre: Vec<usize> = (1..=phi.len()).filter(|&i| phi[i - 1] == j).collect();
        let widths: Vec<usize> = pre.iter().map(|&i| inner.source.s[i - 1]).collect();
        let mids = outer.preimage(j);
        let mut dj = BTreeMap::new();
        for t in tuples(&widths) {
            let mut mid = Vec::with_capacity(mids.len());
            for &i2 in &mids {
                let key: Vec<usize> = pre
                    .iter()
                    .zip(&t)
                    .filter(|(&i, _)| inner.phi[i - 1] == i2)
                    .map(|(_, &k)| k)
                    .collect();
                mid.push(inner.d[i2 - 1][&key]);
            }
            let v = if mid.contains(&0) { 0 } else { outer.d[j - 1][&mid] };
            dj.insert(t, v);
        }
        d.push(dj);
    }
    Ok(FFMorphism {
        source: inner.source.clone(),
        target: outer.target.clone(),
        phi,
        d,
    })
}

/// How inner slots are laid out before folding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layout {
    /// `|Q|` variables per polynomial slot, one per marker slot.
    Compact,
    /// `|Q|` variables per slot, then one per marker slot at the end.
    Padded,
}

/// `f_{φ,d,h,j}` applied to the inner assignment, with the folding map back to `|Q|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fold {
    pub composite: RPoly,
    pub psi: ExtMap,
}

impl Fold {
    /// `ψ_*` of the composite, which may be the marker `1`.
    pub fn folded(&self) -> Result<ExtPoly, WreathError> {
        let p = substitute(&self.psi, &self.composite)?;
        if p.is_one() {
            Ok(ExtPoly::One)
        } else {
            Ok(ExtPoly::Poly(p.to_rpoly()?))
        }
    }
}

/// The unfolded composite for the outer slot at `slot`, or `None` at a marker.
pub fn fold(outer: &FFMorphism, inner: &FFMorphism, slot: usize, layout: Layout) -> Result<Option<Fold>, WreathError> {
    if inner.target != outer.source {
        return Err(WreathError::ObjectMismatch(format!(
            "inner target {} is not outer source {}",
            inner.target, outer.source
        )));
    }
    let outer_family = outer.polynomial_assignment()?;
    let f = match outer_family.get(slot) {
        None => return Err(WreathError::IndexMismatch(format!("no slot {slot}"))),
        Some(ExtPoly::One) => return Ok(None),
        Some(ExtPoly::Poly(f)) => f,
    };
    let inner_family = inner.polynomial_assignment()?;
    let q = inner.source.total();
    let args: Vec<RPoly> = inner_family
        .iter()
        .map(|p| match p {
            ExtPoly::Poly(p) => p.clone(),
            ExtPoly::One => RPoly::unit(),
        })
        .collect();
    let compact = compose(f, &args)?;
    let mut psi = Vec::new();
    let mut embed = Vec::new();
    let markers = inner_family.iter().filter(|p| **p == ExtPoly::One).count();
    let mut seen_markers = 0;
    for (t, p) in inner_family.iter().enumerate() {
        match p {
            ExtPoly::Poly(_) => {
                psi.extend((1..=q).map(Point::At));
                embed.extend((1..=q).map(|v| Point::At(t * q + v)));
            }
            ExtPoly::One => {
                psi.push(Point::E);
                seen_markers += 1;
                embed.push(Point::At(inner_family.len() * q + seen_markers));
            }
        }
    }
    match layout {
        Layout::Compact => Ok(Some(Fold {
            composite: compact,
            psi: ExtMap::new(q, psi).map_err(|e| WreathError::Invalid(e.to_string()))?,
        })),
        Layout::Padded => {
            let total = inner_family.len() * q + markers;
            let embed = ExtMap::new(total, embed).map_err(|e| WreathError::Invalid(e.to_string()))?;
            let composite = crate::poly::push_forward(&embed, &compact)?;
            let psi: Vec<Point> = (1..=total)
                .map(|p| if p <= inner_family.len() * q { Point::At((p - 1) % q + 1) } else { Point::E })
                .collect();
            Ok(Some(Fold {
                composite,
                psi: ExtMap::new(q, psi).map_err(|e| WreathError::Invalid(e.to_string()))?,
            }))
        }
    }
}

/// Checks `f_{(φ,d)(φ',d'),h,j} = ψ_* f_{φ,d,h,j}(f_{φ',d',..})` slot by slot.
pub fn verify_assignment_functoriality(outer: &FFMorphism, inner: &FFMorphism) -> Result<Report, WreathError> {
    let composite = ff_compose(outer, inner)?;
    let expected = composite.polynomial_assignment()?;
    let outer_family = outer.polynomial_assignment()?;
    let mut sections = Vec::new();
    for (idx, (h, j)) in outer.target.slots().into_iter().enumerate() {
        let mut sec = Section::new(&format!("f[{h},{j}]"));
        sec.instances = 1;
        let got = match fold(outer, inner, idx, Layout::Compact)? {
            None => outer_family[idx].clone(),
            Some(fold) => fold.folded()?,
        };
        if got != expected[idx] {
            sec.fail(|| format!("composite assigns {} but folding gives {got}", expected[idx]));
        }
        sections.push(sec);
    }
    Ok(Report {
        title: format!("assignment of {} after {}", outer.target, inner.source),
        sections,
    })
}

/// An element of `ε⁻¹(φ, d)`: one entry per target slot, `None` at markers.
pub type Family<E> = Vec<Option<E>>;

fn check_family<E>(m: &FFMorphism, family: &Family<E>) -> Result<Vec<ExtPoly>, WreathError> {
    let polys = m.polynomial_assignment()?;
    if polys.len() != family.len() {
        return Err(WreathError::IndexMismatch(format!(
            "{} elements for {} slots",
            family.len(),
            polys.len()
        )));
    }
    for (t, (p, x)) in polys.iter().zip(family).enumerate() {
        if (*p == ExtPoly::One) != x.is_none() {
            return Err(WreathError::IndexMismatch(format!("slot {} is {p}", t + 1)));
        }
    }
    Ok(polys)
}

/// Composition in the category of ring operators: `η` at inner markers, `γ`, then `ψ_*`.
pub fn tilde_compose<C: RingOperad>(
    op: &C,
    outer: &FFMorphism,
    outer_elems: &Family<C::Elem>,
    inner: &FFMorphism,
    inner_elems: &Family<C::Elem>,
) -> Result<Family<C::Elem>, WreathError> {
    let outer_polys = check_family(outer, outer_elems)?;
    let inner_polys = check_family(inner, inner_elems)?;
    let unit_poly = RPoly::unit();
    let eta = op.unit();
    let args: Vec<(&RPoly, &C::Elem)> = inner_polys
        .iter()
        .zip(inner_elems)
        .map(|(p, x)| match (p, x) {
            (ExtPoly::Poly(p), Some(x)) => (p, x),
            _ => (&unit_poly, &eta),
        })
        .collect();
    let mut out = Vec::with_capacity(outer_polys.len());
    for (idx, (p, x)) in outer_polys.iter().zip(outer_elems).enumerate() {
        let (ExtPoly::Poly(f), Some(x)) = (p, x) else {
            out.push(None);
            continue;
        };
        let fold = fold(outer, inner, idx, Layout::Compact)?.expect("polynomial slot");
        if fold.folded()? == ExtPoly::One {
            out.push(None);
            continue;
        }
        let composed = op.gamma(f, x, &args)?;
        let m = RMorphism::along(&fold.composite, &fold.psi).map_err(OperadError::from)?;
        out.push(Some(op.act(&m, &composed)?));
    }
    Ok(out)
}

/// The image of a `Π≀Π` morphism under the functor induced by `η`.
pub fn unit_family<C: RingOperad>(op: &C, m: &FFMorphism) -> Result<Family<C::Elem>, WreathError> {
    if !m.is_pi_wr_pi() {
        return Err(WreathError::NotPiWrPi);
    }
    let width = m.source.total();
    m.polynomial_assignment()?
        .into_iter()
        .map(|p| match p {
            ExtPoly::One => Ok(None),
            ExtPoly::Poly(p) if p.is_zero() => {
                let c = op.component(&p)?;
                c.into_iter()
                    .next()
                    .map(Some)
                    .ok_or_else(|| WreathError::Operad(OperadError::MissingComponent(p.to_string())))
            }
            ExtPoly::Poly(p) => {
                let k = p.monomials()[0].support()[0];
                let phi = ExtMap::new(width, vec![Point::At(k)]).map_err(|e| WreathError::Invalid(e.to_string()))?;
                let along = RMorphism::along(&RPoly::unit(), &phi).map_err(OperadError::from)?;
                Ok(Some(op.act(&along, &op.unit())?))
            }
        })
        .collect()
}

/// `νX(α)`: `X^{r_1} × .. × X^{r_m} → X^{s_1} × .. × X^{s_n}` on flattened tuples.
pub fn nu_evaluate<C: RingOperad, A: DiscreteAlgebra<C>>(
    alg: &A,
    m: &FFMorphism,
    elems: &Family<C::Elem>,
    xs: &[usize],
) -> Result<Vec<usize>, WreathError> {
    if xs.len() != m.source.total() {
        return Err(WreathError::ArityMismatch {
            expected: m.source.total(),
            got: xs.len(),
        });
    }
    let polys = check_family(m, elems)?;
    polys
        .iter()
        .zip(elems)
        .map(|(p, x)| match (p, x) {
            (ExtPoly::Poly(f), Some(x)) => Ok(alg.theta(f, x, xs)?),
            _ => Ok(alg.one()),
        })
        .collect()
}

fn parse_object(c: &mut Cursor) -> Result<FFObject, TextError> {
    c.expect('(')?;
    let n = c.number()?;
    c.expect(':')?;
    c.expect('[')?;
    let mut s = Vec::new();
    if !c.eat(']') {
        loop {
            s.push(c.number()?);
            if c.eat(']') {
                break;
            }
            c.expect(',')?;
        }
    }
    if s.len() != n {
        return c.error(format!("object declares length {n} but lists {} entries", s.len()));
    }
    c.expect(')')?;
    Ok(FFObject { s })
}

pub fn parse_ff_object(text: &str) -> Result<FFObject, TextError> {
    let mut c = Cursor::new(text);
    let o = parse_object(&mut c)?;
    c.finish()?;
    Ok(o)
}

fn parse_tuple(c: &mut Cursor) -> Result<Vec<usize>, TextError> {
    c.expect('(')?;
    let mut t = Vec::new();
    if !c.eat(')') {
        loop {
            t.push(c.number()?);
            if c.eat(')') {
                break;
            }
            c.expect(',')?;
        }
    }
    Ok(t)
}

/// `(2:[2,1]) -> (1:[1]) : phi={1->1, 2->1}; d1={(1,1)->1, (2,1)->1}`.
pub fn parse_ff_morphism(text: &str) -> Result<FFMorphism, WreathError> {
    let mut c = Cursor::new(text);
    let source = parse_object(&mut c)?;
    c.expect_str("->")?;
    let target = parse_object(&mut c)?;
    c.expect(':')?;
    c.expect_str("phi")?;
    c.expect('=')?;
    c.expect('{')?;
    let mut phi = vec![None; source.n()];
    if !c.eat('}') {
        loop {
            let col = c.column();
            let i = c.number()?;
            c.expect_str("->")?;
            let v = c.number()?;
            match phi.get_mut(i.wrapping_sub(1)) {
                None => return Err(TextError::Syntax { column: col, message: format!("phi key {i} out of range") }.into()),
                Some(Some(_)) => return Err(TextError::Syntax { column: col, message: format!("duplicate phi key {i}") }.into()),
                Some(slot) => *slot = Some(v),
            }
            if c.eat('}') {
                break;
            }
            c.expect(',')?;
        }
    }
    let phi: Vec<usize> = match phi.iter().position(Option::is_none) {
        Some(i) => return Err(TextError::Semantic(format!("phi has no value at {}", i + 1)).into()),
        None => phi.into_iter().flatten().collect(),
    };
    let mut d = Vec::with_capacity(target.n());
    for j in 1..=target.n() {
        c.expect(';')?;
        c.expect_str(&format!("d{j}"))?;
        c.expect('=')?;
        c.expect('{')?;
        let mut dj = BTreeMap::new();
        if !c.eat('}') {
            loop {
                let col = c.column();
                let t = parse_tuple(&mut c)?;
                c.expect_str("->")?;
                let v = c.number()?;
                if dj.insert(t.clone(), v).is_some() {
                    return Err(TextError::Syntax { column: col, message: format!("duplicate key {}", tuple_text(&t)) }.into());
                }
                if c.eat('}') {
                    break;
                }
                c.expect(',')?;
            }
        }
        d.push(dj);
    }
    c.finish()?;
    FFMorphism::new(source, target, phi, d)
}
