//! Square-free multilinear polynomials with 0/1 coefficients and no constant term.
//!
//! `R(n)` is the set of such polynomials in `n` variables. Monomials are kept in
//! Λ-order: lexicographic on 0/1 exponent tuples, index 1 most significant.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::map::{ExtMap, Point};

/// Largest `n` for which `R(n)` is enumerated.
pub const ENUMERATION_CAP: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("not in R: {0}")]
    NotInR(Violation),
    #[error("R({0}) is not enumerable (cap is {ENUMERATION_CAP})")]
    ArityCap(usize),
    #[error("invalid type signature: {0}")]
    InvalidSignature(String),
    #[error("variable x{index} is outside 1..{arity}")]
    VariableOutOfRange { index: usize, arity: usize },
}

/// The membership condition that a polynomial breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DuplicateMonomial(String),
    Coefficient { monomial: String, coefficient: i64 },
    Square(String),
    ConstantTerm(i64),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateMonomial(m) => write!(f, "duplicate monomial {m}"),
            Violation::Coefficient {
                monomial,
                coefficient,
            } => write!(f, "coefficient {coefficient} on {monomial}"),
            Violation::Square(m) => write!(f, "square factor in {m}"),
            Violation::ConstantTerm(c) => write!(f, "constant term {c}"),
        }
    }
}

fn product_text(vars: &[usize]) -> String {
    if vars.is_empty() {
        return "1".to_string();
    }
    vars.iter()
        .map(|v| format!("x{v}"))
        .collect::<Vec<_>>()
        .join("*")
}

/// A non-empty square-free monic monomial, stored as its increasing support.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<usize>);

impl Monomial {
    /// Sorts the indices; repeated indices are a square and are rejected.
    pub fn new(mut support: Vec<usize>) -> Result<Self, PolyError> {
        support.sort_unstable();
        if support.is_empty() {
            return Err(PolyError::NotInR(Violation::ConstantTerm(1)));
        }
        if support.windows(2).any(|w| w[0] == w[1]) {
            return Err(PolyError::NotInR(Violation::Square(product_text(&support))));
        }
        if support[0] == 0 {
            return Err(PolyError::VariableOutOfRange { index: 0, arity: 0 });
        }
        Ok(Monomial(support))
    }

    pub(crate) fn from_sorted(support: Vec<usize>) -> Self {
        debug_assert!(!support.is_empty() && support.windows(2).all(|w| w[0] < w[1]));
        Monomial(support)
    }

    /// `Γ_I`: the support in increasing order.
    pub fn support(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn max_index(&self) -> usize {
        *self.0.last().expect("monomials are non-empty")
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Position of `i` inside `Γ_I` (0-based).
    pub fn position(&self, i: usize) -> Option<usize> {
        self.0.binary_search(&i).ok()
    }
}

impl Ord for Monomial {
    /// Λ-order. At the first differing position the support holding the smaller
    /// index has a 1 earlier in its exponent tuple and is the larger monomial; a
    /// proper prefix is the smaller one.
    fn cmp(&self, other: &Self) -> Ordering {
        lambda_cmp(&self.0, &other.0)
    }
}

fn lambda_cmp(x: &[usize], y: &[usize]) -> Ordering {
    for (a, b) in x.iter().zip(y) {
        match a.cmp(b) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    x.len().cmp(&y.len())
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&product_text(&self.0))
    }
}

/// An element of `R(n)`. The monomials are distinct and kept in Λ-order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RPoly {
    arity: usize,
    monomials: Vec<Monomial>,
}

impl RPoly {
    pub fn new(arity: usize, mut monomials: Vec<Monomial>) -> Result<Self, PolyError> {
        for m in &monomials {
            if m.max_index() > arity {
                return Err(PolyError::VariableOutOfRange {
                    index: m.max_index(),
                    arity,
                });
            }
        }
        monomials.sort();
        if let Some(w) = monomials.windows(2).find(|w| w[0] == w[1]) {
            return Err(PolyError::NotInR(Violation::DuplicateMonomial(
                w[0].to_string(),
            )));
        }
        Ok(RPoly { arity, monomials })
    }

    /// Convenience constructor from raw supports.
    pub fn from_supports(arity: usize, supports: &[&[usize]]) -> Result<Self, PolyError> {
        let monomials = supports
            .iter()
            .map(|s| Monomial::new(s.to_vec()))
            .collect::<Result<Vec<_>, _>>()?;
        RPoly::new(arity, monomials)
    }

    pub fn zero(arity: usize) -> Self {
        RPoly {
            arity,
            monomials: Vec::new(),
        }
    }

    /// The single variable `a_{i,n}`.
    pub fn var(arity: usize, i: usize) -> Self {
        assert!(1 <= i && i <= arity, "x{i} outside 1..{arity}");
        RPoly {
            arity,
            monomials: vec![Monomial(vec![i])],
        }
    }

    /// `a_{1,1}`, the unit object.
    pub fn unit() -> Self {
        RPoly::var(1, 1)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// `Λ_f`.
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Number of monomials, `|Λ_f|`.
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Position of a monomial in `Λ_f`.
    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.monomials.binary_search(m).ok()
    }

    /// Every variable occurs in some monomial.
    pub fn is_nondegenerate(&self) -> bool {
        let mut seen = vec![false; self.arity + 1];
        for m in &self.monomials {
            for &i in m.support() {
                seen[i] = true;
            }
        }
        seen[1..].iter().all(|&b| b)
    }

    /// Total number of variable occurrences, summed over monomials.
    pub fn occurrences(&self) -> usize {
        self.monomials.iter().map(Monomial::degree).sum()
    }

    pub fn type_of(&self) -> TypeSignature {
        let mut sizes: Vec<usize> = self.monomials.iter().map(Monomial::degree).collect();
        sizes.sort_unstable();
        TypeSignature { sizes }
    }

    pub fn is_special(&self) -> bool {
        special_of_type(&self.type_of()).is_ok_and(|s| &s == self)
    }

    pub fn to_intpoly(&self) -> IntPoly {
        let mut p = IntPoly::zero(self.arity);
        for m in &self.monomials {
            p.add_term(m.0.clone(), 1);
        }
        p
    }
}

impl PartialOrd for RPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for RPoly {
    /// Arity, then monomial count, then Λ-lexicographic on the monomial lists.
    fn cmp(&self, other: &Self) -> Ordering {
        self.arity
            .cmp(&other.arity)
            .then(self.monomials.len().cmp(&other.monomials.len()))
            .then_with(|| self.monomials.cmp(&other.monomials))
    }
}

impl fmt::Display for RPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({}): ", self.arity)?;
        if self.monomials.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.monomials.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// An integer polynomial. Keys are sorted index multisets, so squares are
/// representable and a constant is the empty key.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPoly {
    arity: usize,
    terms: BTreeMap<Vec<usize>, i64>,
}

impl IntPoly {
    pub fn zero(arity: usize) -> Self {
        IntPoly {
            arity,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(arity: usize, c: i64) -> Self {
        let mut p = IntPoly::zero(arity);
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(arity: usize, i: usize) -> Self {
        let mut p = IntPoly::zero(arity);
        p.add_term(vec![i], 1);
        p
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], i64)> {
        self.terms.iter().map(|(k, &c)| (k.as_slice(), c))
    }

    pub fn coefficient(&self, key: &[usize]) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, mut key: Vec<usize>, c: i64) {
        if c == 0 {
            return;
        }
        key.sort_unstable();
        match self.terms.entry(key) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut out = self.clone();
        for (k, &c) in &other.terms {
            out.add_term(k.clone(), c);
        }
        out.arity = self.arity.max(other.arity);
        out
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        let mut out = IntPoly::zero(self.arity.max(other.arity));
        for (a, &ca) in &self.terms {
            for (b, &cb) in &other.terms {
                let mut key = a.clone();
                key.extend_from_slice(b);
                out.add_term(key, ca * cb);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(&[]) == 1
    }

    /// The first membership condition that fails, if any.
    pub fn violation(&self) -> Option<Violation> {
        for (k, &c) in &self.terms {
            if k.is_empty() {
                return Some(Violation::ConstantTerm(c));
            }
            if k.windows(2).any(|w| w[0] == w[1]) {
                return Some(Violation::Square(product_text(k)));
            }
            if c != 1 {
                return Some(Violation::Coefficient {
                    monomial: product_text(k),
                    coefficient: c,
                });
            }
        }
        None
    }

    pub fn is_member(&self) -> bool {
        self.violation().is_none()
    }

    pub fn to_rpoly(&self) -> Result<RPoly, PolyError> {
        if let Some(v) = self.violation() {
            return Err(PolyError::NotInR(v));
        }
        RPoly::new(
            self.arity,
            self.terms
                .keys()
                .map(|k| Monomial::from_sorted(k.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "R({}): ", self.arity)?;
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| lambda_cmp(a.0, b.0));
        for (i, (k, &c)) in terms.into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (c, k.is_empty()) {
                (c, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{}", product_text(k))?,
                (c, false) => write!(f, "{c}*{}", product_text(k))?,
            }
        }
        Ok(())
    }
}

/// Membership in `R(n)`: multilinear, 0/1 coefficients, no constant term.
pub fn is_member(p: &IntPoly) -> bool {
    p.is_member()
}

/// The monomial-count / sizes invariant `(l; k_1, ..., k_l)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeSignature {
    sizes: Vec<usize>,
}

impl TypeSignature {
    pub fn new(sizes: Vec<usize>) -> Result<Self, PolyError> {
        if sizes.contains(&0) {
            return Err(PolyError::InvalidSignature("sizes must be positive".into()));
        }
        if sizes.windows(2).any(|w| w[0] > w[1]) {
            return Err(PolyError::InvalidSignature(
                "sizes must be non-decreasing".into(),
            ));
        }
        Ok(TypeSignature { sizes })
    }

    pub fn l(&self) -> usize {
        self.sizes.len()
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    /// Arity of the special object of this type.
    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }
}

impl fmt::Display for TypeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.sizes.iter().map(ToString::to_string).collect();
        write!(f, "({};{})", self.sizes.len(), sizes.join(","))
    }
}

/// `a_1⋯a_{k_1} + a_{k_1+1}⋯a_{k_1+k_2} + ...`.
pub fn special_of_type(sig: &TypeSignature) -> Result<RPoly, PolyError> {
    let sig = TypeSignature::new(sig.sizes.clone())?;
    let mut next = 1;
    let mut monomials = Vec::with_capacity(sig.l());
    for &k in sig.sizes() {
        monomials.push(Monomial::from_sorted((next..next + k).collect()));
        next += k;
    }
    RPoly::new(sig.total(), monomials)
}

pub fn lambda_of(f: &RPoly) -> &[Monomial] {
    f.monomials()
}

pub fn gamma_of(m: &Monomial) -> &[usize] {
    m.support()
}

/// A polynomial argument or the unit marker `1`, which occupies no variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtPoly {
    Poly(RPoly),
    One,
}

impl ExtPoly {
    pub fn width(&self) -> usize {
        match self {
            ExtPoly::Poly(p) => p.arity(),
            ExtPoly::One => 0,
        }
    }

    pub fn as_poly(&self) -> Option<&RPoly> {
        match self {
            ExtPoly::Poly(p) => Some(p),
            ExtPoly::One => None,
        }
    }
}

impl fmt::Display for ExtPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtPoly::Poly(p) => write!(f, "{p}"),
            ExtPoly::One => write!(f, "1"),
        }
    }
}

/// Expands `g(args)` monomial by monomial; `None` arguments are the constant 1.
/// Returns the supports produced, possibly with repeats and empty supports.
fn expand(g: &RPoly, args: &[Option<&RPoly>]) -> Result<(usize, Vec<Vec<usize>>), PolyError> {
    if args.len() != g.arity {
        return Err(PolyError::ArityMismatch {
            expected: g.arity,
            got: args.len(),
        });
    }
    let mut offsets = Vec::with_capacity(args.len());
    let mut total = 0;
    for a in args {
        offsets.push(total);
        total += a.map_or(0, RPoly::arity);
    }
    let mut out = Vec::new();
    for m in &g.monomials {
        let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
        for &i in m.support() {
            let Some(arg) = args[i - 1] else { continue };
            let off = offsets[i - 1];
            let mut next = Vec::with_capacity(partial.len() * arg.len());
            for p in &partial {
                for q in &arg.monomials {
                    let mut v = p.clone();
                    v.extend(q.support().iter().map(|x| x + off));
                    next.push(v);
                }
            }
            partial = next;
            if partial.is_empty() {
                break;
            }
        }
        out.extend(partial);
    }
    Ok((total, out))
}

/// `g(f_1, ..., f_k)` with the variables of `f_t` shifted past those of earlier blocks.
pub fn compose(g: &RPoly, args: &[RPoly]) -> Result<RPoly, PolyError> {
    let refs: Vec<Option<&RPoly>> = args.iter().map(Some).collect();
    let (arity, supports) = expand(g, &refs)?;
    RPoly::new(arity, supports.into_iter().map(Monomial::from_sorted).collect())
}

/// As [`compose`], but [`ExtPoly::One`] arguments substitute the constant 1.
/// The result may be the constant 1 itself.
pub fn extended_compose(g: &RPoly, args: &[ExtPoly]) -> Result<ExtPoly, PolyError> {
    let refs: Vec<Option<&RPoly>> = args.iter().map(ExtPoly::as_poly).collect();
    let (arity, mut supports) = expand(g, &refs)?;
    supports.sort();
    if let Some(w) = supports.windows(2).find(|w| w[0] == w[1]) {
        return Err(PolyError::NotInR(Violation::DuplicateMonomial(
            product_text(&w[0]),
        )));
    }
    if supports.first().is_some_and(Vec::is_empty) {
        if supports.len() == 1 {
            return Ok(ExtPoly::One);
        }
        return Err(PolyError::NotInR(Violation::ConstantTerm(1)));
    }
    Ok(ExtPoly::Poly(RPoly::new(
        arity,
        supports.into_iter().map(Monomial::from_sorted).collect(),
    )?))
}

/// `f(a_{φ(1)}, ..., a_{φ(m)})` with `a_0 = 0` and `a_e = 1`, fully expanded.
pub fn substitute(phi: &ExtMap, f: &RPoly) -> Result<IntPoly, PolyError> {
    if phi.source() != f.arity {
        return Err(PolyError::ArityMismatch {
            expected: phi.source(),
            got: f.arity,
        });
    }
    let mut out = IntPoly::zero(phi.target());
    'monomials: for m in &f.monomials {
        let mut key = Vec::with_capacity(m.degree());
        for &i in m.support() {
            match phi.image(i) {
                Point::Zero => continue 'monomials,
                Point::E => {}
                Point::At(k) => key.push(k),
            }
        }
        out.add_term(key, 1);
    }
    Ok(out)
}

/// `φ_* f` when it lies in `R(n)`.
pub fn push_forward(phi: &ExtMap, f: &RPoly) -> Result<RPoly, PolyError> {
    substitute(phi, f)?.to_rpoly()
}

/// Every element of `R(n)`, ordered by monomial count and then Λ-lexicographically.
pub fn enumerate_r(n: usize) -> Result<Vec<RPoly>, PolyError> {
    if n > ENUMERATION_CAP {
        return Err(PolyError::ArityCap(n));
    }
    let mut supports: Vec<Monomial> = (1u32..(1 << n))
        .map(|mask| {
            Monomial::from_sorted((0..n).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect())
        })
        .collect();
    supports.sort();
    let count = 1usize << supports.len();
    let mut out = Vec::with_capacity(count);
    for mask in 0..count {
        let monomials = supports
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, m)| m.clone())
            .collect();
        out.push(RPoly {
            arity: n,
            monomials,
        });
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(arity: usize, s: &[&[usize]]) -> RPoly {
        RPoly::from_supports(arity, s).unwrap()
    }

    #[test]
    fn lambda_order_matches_worked_listing() {
        let f = p(5, &[&[1, 2, 3], &[1, 4], &[5]]);
        let listing: Vec<&[usize]> = f.monomials().iter().map(|m| m.support()).collect();
        assert_eq!(listing, vec![&[5][..], &[1, 4], &[1, 2, 3]]);
        let g = p(2, &[&[1, 2], &[1]]);
        let listing: Vec<&[usize]> = g.monomials().iter().map(|m| m.support()).collect();
        assert_eq!(listing, vec![&[1][..], &[1, 2]]);
        let h = p(2, &[&[1], &[2]]);
        assert_eq!(h.to_string(), "R(2): x2 + x1");
    }

    #[test]
    fn membership_conditions() {
        assert!(p(2, &[&[1, 2], &[1]]).to_intpoly().is_member());
        let mut two = IntPoly::zero(1);
        two.add_term(vec![1], 2);
        assert!(!two.is_member());
        let plus_one = IntPoly::var(1, 1).add(&IntPoly::constant(1, 1));
        assert_eq!(plus_one.violation(), Some(Violation::ConstantTerm(1)));
        let sq = IntPoly::var(1, 1).mul(&IntPoly::var(1, 1));
        assert!(matches!(sq.violation(), Some(Violation::Square(_))));
    }

    #[test]
    fn compose_examples() {
        let g = p(2, &[&[1], &[1, 2]]);
        let out = compose(&g, &[g.clone(), p(2, &[&[1, 2]])]).unwrap();
        assert_eq!(out, p(4, &[&[1], &[1, 3, 4], &[1, 2], &[1, 2, 3, 4]]));
        let listing: Vec<&[usize]> = out.monomials().iter().map(|m| m.support()).collect();
        assert_eq!(listing, vec![&[1][..], &[1, 3, 4], &[1, 2], &[1, 2, 3, 4]]);
        let f = p(3, &[&[1, 3], &[2]]);
        assert_eq!(compose(&RPoly::unit(), &[f.clone()]).unwrap(), f);
        assert_eq!(
            compose(&p(2, &[&[1, 2]]), &[RPoly::zero(1), RPoly::unit()]).unwrap(),
            RPoly::zero(2)
        );
        assert!(matches!(
            compose(&g, &[g.clone()]),
            Err(PolyError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn extended_compose_examples() {
        let g = p(2, &[&[1, 2]]);
        assert_eq!(
            extended_compose(&g, &[ExtPoly::Poly(RPoly::unit()), ExtPoly::One]).unwrap(),
            ExtPoly::Poly(RPoly::unit())
        );
        let g = p(3, &[&[1, 2, 3], &[1, 2]]);
        let err = extended_compose(
            &g,
            &[
                ExtPoly::Poly(p(2, &[&[1], &[2]])),
                ExtPoly::Poly(RPoly::unit()),
                ExtPoly::One,
            ],
        );
        assert!(matches!(err, Err(PolyError::NotInR(Violation::DuplicateMonomial(_)))));
        assert_eq!(
            extended_compose(&p(1, &[&[1]]), &[ExtPoly::One]).unwrap(),
            ExtPoly::One
        );
    }

    #[test]
    fn substitute_examples() {
        let f = p(5, &[&[1, 2, 3], &[1, 4], &[5]]);
        let phi = ExtMap::new(
            2,
            vec![Point::E, Point::At(1), Point::At(2), Point::At(1), Point::Zero],
        )
        .unwrap();
        assert_eq!(push_forward(&phi, &f).unwrap(), p(2, &[&[1, 2], &[1]]));
        let sigma = ExtMap::new(
            3,
            vec![Point::E, Point::At(1), Point::At(2), Point::At(3), Point::Zero],
        )
        .unwrap();
        assert_eq!(push_forward(&sigma, &f).unwrap(), p(3, &[&[1, 2], &[3]]));
        let fold = ExtMap::from_indices(1, &[1, 1]).unwrap();
        let doubled = substitute(&fold, &p(2, &[&[1], &[2]])).unwrap();
        assert_eq!(doubled.coefficient(&[1]), 2);
        assert!(!doubled.is_member());
    }

    #[test]
    fn nondegeneracy_and_types() {
        assert!(p(2, &[&[1, 2], &[1]]).is_nondegenerate());
        assert!(!p(2, &[&[1]]).is_nondegenerate());
        assert!(RPoly::zero(0).is_nondegenerate());
        assert!(!RPoly::zero(1).is_nondegenerate());
        let f = p(5, &[&[1, 2, 3], &[1, 4], &[5]]);
        assert_eq!(f.type_of().to_string(), "(3;1,2,3)");
        assert_eq!(RPoly::zero(3).type_of().to_string(), "(0;)");
        assert_eq!(p(2, &[&[1], &[2]]).type_of().sizes(), &[1, 1]);
    }

    #[test]
    fn specials() {
        let s = special_of_type(&TypeSignature::new(vec![1, 2]).unwrap()).unwrap();
        assert_eq!(s, p(3, &[&[1], &[2, 3]]));
        let s = special_of_type(&TypeSignature::new(vec![1, 2, 3]).unwrap()).unwrap();
        assert_eq!(s, p(6, &[&[1], &[2, 3], &[4, 5, 6]]));
        assert!(s.is_special() && s.is_nondegenerate());
        assert!(TypeSignature::new(vec![2, 1]).is_err());
        assert!(TypeSignature::new(vec![0]).is_err());
        assert!(p(2, &[&[2], &[1]]).is_special());
        assert!(!p(2, &[&[1, 2], &[1]]).is_special());
    }

    #[test]
    fn small_enumerations() {
        let r1 = enumerate_r(1).unwrap();
        assert_eq!(r1, vec![RPoly::zero(1), RPoly::unit()]);
        assert_eq!(enumerate_r(0).unwrap(), vec![RPoly::zero(0)]);
        assert_eq!(enumerate_r(2).unwrap().len(), 8);
        assert!(matches!(enumerate_r(5), Err(PolyError::ArityCap(5))));
    }
}
