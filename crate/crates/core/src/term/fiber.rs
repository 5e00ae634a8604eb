//! Exact enumeration of the terms over a polynomial.
//!
//! A canonical term over a 0/1 polynomial splits at its root either as a sum
//! of two terms over complementary monomial sets, or as a product of two terms
//! over disjoint variable sets whose monomial sets multiply out to the target.
//! Both splits strictly shrink `#variables + #monomials`, so the recursion
//! terminates and every fiber is finite.

use std::collections::HashMap;

use super::{plus, times, Mode, Term};
use crate::poly::RPoly;

type Shape = Vec<Vec<usize>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fiber {
    pub poly: RPoly,
    pub mode: Mode,
    pub bound: usize,
    /// Members with at most `bound` leaves, sorted.
    pub terms: Vec<Term>,
    /// No member has between `bound + 1` and `bound + 2` leaves.
    pub stable: bool,
}

/// `3 · (variable occurrences) + 4`.
pub fn default_bound(f: &RPoly) -> usize {
    3 * f.occurrences() + 4
}

fn shape_of(f: &RPoly) -> Shape {
    let mut s: Shape = f.monomials().iter().map(|m| m.support().to_vec()).collect();
    s.sort();
    s
}

fn normalized(mut s: Shape) -> Shape {
    s.sort();
    s.dedup();
    s
}

fn split(shape: &Shape, mask: u64) -> (Shape, Shape) {
    let mut a = Vec::new();
    let mut b = Vec::new();
    for (i, m) in shape.iter().enumerate() {
        if mask >> i & 1 == 1 {
            a.push(m.clone());
        } else {
            b.push(m.clone());
        }
    }
    (a, b)
}

fn variables(shape: &Shape) -> Vec<usize> {
    let mut v: Vec<usize> = shape.iter().flatten().copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

#[derive(Default)]
struct Enumerator {
    sym: HashMap<Shape, Vec<Term>>,
    nf: HashMap<Shape, Vec<Term>>,
    summands: HashMap<Shape, Vec<Term>>,
}

impl Enumerator {
    fn sym(&mut self, shape: &Shape) -> Vec<Term> {
        if let Some(t) = self.sym.get(shape) {
            return t.clone();
        }
        let mut out = Vec::new();
        match shape.as_slice() {
            [] => out.push(Term::Zero),
            [m] if m.is_empty() => out.push(Term::One),
            [m] if m.len() == 1 => out.push(Term::Var(m[0])),
            _ => {
                let k = shape.len();
                for mask in 1..(1u64 << k) - 1 {
                    let (a, b) = split(shape, mask);
                    let left = self.sym(&a);
                    let right = self.sym(&b);
                    for x in &left {
                        for y in &right {
                            out.push(plus(x.clone(), y.clone()));
                        }
                    }
                }
                let vars = variables(shape);
                for mask in 1..(1u64 << vars.len()) - 1 {
                    let in_s = |i: &usize| mask >> vars.binary_search(i).unwrap() & 1 == 1;
                    let q = normalized(
                        shape
                            .iter()
                            .map(|m| m.iter().copied().filter(|i| in_s(i)).collect())
                            .collect(),
                    );
                    let r = normalized(
                        shape
                            .iter()
                            .map(|m| m.iter().copied().filter(|i| !in_s(i)).collect())
                            .collect(),
                    );
                    if q.len() * r.len() != shape.len() {
                        continue;
                    }
                    let left = self.sym(&q);
                    let right = self.sym(&r);
                    for x in &left {
                        for y in &right {
                            out.push(times(x.clone(), y.clone()));
                        }
                    }
                }
            }
        }
        self.sym.insert(shape.clone(), out.clone());
        out
    }

    /// Reduced terms whose root is not a sum.
    fn summands(&mut self, shape: &Shape) -> Vec<Term> {
        if let Some(t) = self.summands.get(shape) {
            return t.clone();
        }
        let mut out = Vec::new();
        match shape.as_slice() {
            [m] if m.is_empty() => out.push(Term::One),
            [m] if m.len() == 1 => out.push(Term::Var(m[0])),
            _ => {}
        }
        if !shape.is_empty() && !(shape.len() == 1 && shape[0].len() == 1) {
            for x in variables(shape) {
                if shape.iter().all(|m| m.contains(&x)) {
                    let rest = normalized(
                        shape
                            .iter()
                            .map(|m| m.iter().copied().filter(|&i| i != x).collect())
                            .collect(),
                    );
                    for r in self.nf(&rest) {
                        out.push(times(Term::Var(x), r));
                    }
                }
            }
        }
        self.summands.insert(shape.clone(), out.clone());
        out
    }

    fn nf(&mut self, shape: &Shape) -> Vec<Term> {
        if let Some(t) = self.nf.get(shape) {
            return t.clone();
        }
        if shape.is_empty() {
            return vec![Term::Zero];
        }
        let mut out = self.summands(shape);
        let k = shape.len();
        for mask in 1..(1u64 << k) - 1 {
            let (a, b) = split(shape, mask);
            let heads = self.summands(&a);
            if heads.is_empty() {
                continue;
            }
            let tails = self.nf(&b);
            for s in &heads {
                for t in &tails {
                    out.push(plus(s.clone(), t.clone()));
                }
            }
        }
        self.nf.insert(shape.clone(), out.clone());
        out
    }
}

/// Every member of the fiber over `f`, without a leaf bound.
pub(crate) fn full_fiber(f: &RPoly, mode: Mode) -> Vec<Term> {
    let mut e = Enumerator::default();
    let shape = shape_of(f);
    let mut out = match mode {
        Mode::Sym => e.sym(&shape),
        Mode::Biperm => e.nf(&shape),
    };
    out.sort();
    out
}

/// Members of the fiber over `f` with at most `bound` leaves, with the
/// stability flag comparing bounds `bound` and `bound + 2`.
pub fn enumerate_fiber(f: &RPoly, mode: Mode, bound: usize) -> Fiber {
    let all = full_fiber(f, mode);
    let stable = !all
        .iter()
        .any(|t| (bound + 1..=bound + 2).contains(&t.leaves()));
    let terms = all.into_iter().filter(|t| t.leaves() <= bound).collect();
    Fiber {
        poly: f.clone(),
        mode,
        bound,
        terms,
        stable,
    }
}
