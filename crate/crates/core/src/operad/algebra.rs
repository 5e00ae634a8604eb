//! Algebras over a ring operad on a finite carrier `{0, .., size - 1}`.

use std::collections::HashMap;

use super::check::{tuples, CheckConfig, Ctx};
use super::{OperadError, Report, RingOperad, Section};
use crate::map::Point;
use crate::poly::{compose, RPoly};

pub trait DiscreteAlgebra<O: RingOperad> {
    fn size(&self) -> usize;

    /// The point that `0` goes to.
    fn zero(&self) -> usize;

    /// The point that `e` goes to.
    fn one(&self) -> usize;

    /// `θ(α; x_1, ..., x_n)` for `α ∈ C(f)` and `n` the arity of `f`.
    fn theta(&self, f: &RPoly, alpha: &O::Elem, xs: &[usize]) -> Result<usize, OperadError>;

    fn render(&self, a: usize) -> String {
        a.to_string()
    }
}

/// A finite rig on `{0, .., size - 1}`; multiplication need not commute.
pub trait FiniteRig {
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn one(&self) -> usize;
    fn add(&self, a: usize, b: usize) -> usize;
    fn mul(&self, a: usize, b: usize) -> usize;

    fn render(&self, a: usize) -> String {
        a.to_string()
    }
}

/// `{0, 1}` with `or` and `and`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BooleanRig;

impl FiniteRig for BooleanRig {
    fn size(&self) -> usize {
        2
    }
    fn zero(&self) -> usize {
        0
    }
    fn one(&self) -> usize {
        1
    }
    fn add(&self, a: usize, b: usize) -> usize {
        a | b
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        a & b
    }
}

/// 2×2 Boolean matrices, bit `2r + c` holding entry `(r, c)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct MatrixRig;

impl FiniteRig for MatrixRig {
    fn size(&self) -> usize {
        16
    }
    fn zero(&self) -> usize {
        0
    }
    fn one(&self) -> usize {
        0b1001
    }
    fn add(&self, a: usize, b: usize) -> usize {
        a | b
    }
    fn mul(&self, a: usize, b: usize) -> usize {
        let at = |m: usize, r: usize, c: usize| m >> (2 * r + c) & 1;
        let mut out = 0;
        for r in 0..2 {
            for c in 0..2 {
                let v = (0..2).any(|k| at(a, r, k) & at(b, k, c) == 1);
                out |= (v as usize) << (2 * r + c);
            }
        }
        out
    }
    fn render(&self, a: usize) -> String {
        format!("[{}{};{}{}]", a & 1, a >> 1 & 1, a >> 2 & 1, a >> 3 & 1)
    }
}

/// Evaluates `f` itself: a sum over monomials in canonical order of the
/// products of their variables in increasing order. The operad element is ignored.
#[derive(Clone, Copy, Debug, Default)]
pub struct RigAlgebra<R>(pub R);

pub(crate) fn eval_poly<R: FiniteRig>(rig: &R, f: &RPoly, xs: &[usize]) -> usize {
    f.monomials().iter().fold(rig.zero(), |acc, m| {
        let p = m
            .support()
            .iter()
            .fold(rig.one(), |p, &i| rig.mul(p, xs[i - 1]));
        rig.add(acc, p)
    })
}

impl<O: RingOperad, R: FiniteRig> DiscreteAlgebra<O> for RigAlgebra<R> {
    fn size(&self) -> usize {
        self.0.size()
    }
    fn zero(&self) -> usize {
        self.0.zero()
    }
    fn one(&self) -> usize {
        self.0.one()
    }
    fn theta(&self, f: &RPoly, _alpha: &O::Elem, xs: &[usize]) -> Result<usize, OperadError> {
        Ok(eval_poly(&self.0, f, xs))
    }
    fn render(&self, a: usize) -> String {
        self.0.render(a)
    }
}

/// An explicit `θ` table, tabulated from another algebra and then editable.
#[derive(Clone, Debug)]
pub struct TableAlgebra<O: RingOperad> {
    size: usize,
    zero: usize,
    one: usize,
    table: HashMap<(RPoly, O::Elem, Vec<usize>), usize>,
}

impl<O: RingOperad> TableAlgebra<O> {
    pub fn tabulate<A: DiscreteAlgebra<O>>(op: &O, alg: &A, cap: usize) -> Result<Self, OperadError> {
        let mut cfg = CheckConfig::new(cap);
        cfg.budget = u64::MAX;
        let mut ctx = Ctx::new(op, &cfg)?;
        let mut table = HashMap::new();
        for f in ctx.objects() {
            for alpha in ctx.comp(&f)?.iter() {
                for xs in carrier_tuples(alg.size(), f.arity()) {
                    let v = alg.theta(&f, alpha, &xs)?;
                    table.insert((f.clone(), alpha.clone(), xs), v);
                }
            }
        }
        Ok(TableAlgebra {
            size: alg.size(),
            zero: alg.zero(),
            one: alg.one(),
            table,
        })
    }

    pub fn set(&mut self, f: &RPoly, alpha: &O::Elem, xs: &[usize], value: usize) {
        self.table.insert((f.clone(), alpha.clone(), xs.to_vec()), value);
    }
}

impl<O: RingOperad> DiscreteAlgebra<O> for TableAlgebra<O> {
    fn size(&self) -> usize {
        self.size
    }
    fn zero(&self) -> usize {
        self.zero
    }
    fn one(&self) -> usize {
        self.one
    }
    fn theta(&self, f: &RPoly, alpha: &O::Elem, xs: &[usize]) -> Result<usize, OperadError> {
        self.table
            .get(&(f.clone(), alpha.clone(), xs.to_vec()))
            .copied()
            .ok_or_else(|| OperadError::MissingEntry(format!("theta over {f} at {xs:?}")))
    }
}

pub(crate) fn carrier_tuples(size: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..size).map(move |a| {
                    let mut t = t.clone();
                    t.push(a);
                    t
                })
            })
            .collect();
    }
    out
}

/// Checks the unit, equivariance and associativity diagrams of an algebra on
/// every instance within the cap.
pub fn validate_algebra<O: RingOperad, A: DiscreteAlgebra<O>>(
    op: &O,
    alg: &A,
    cfg: &CheckConfig,
) -> Result<Report, OperadError> {
    let mut ctx = Ctx::new(op, cfg)?;
    let objects = ctx.objects();
    let morphisms = ctx.morphisms(&objects);
    let show = |xs: &[usize]| {
        let v: Vec<String> = xs.iter().map(|&a| alg.render(a)).collect();
        format!("({})", v.join(", "))
    };

    let mut unit = Section::new("unit");
    let eta = op.unit();
    for a in 0..alg.size() {
        ctx.budget.tick()?;
        unit.instances += 1;
        let v = alg.theta(&RPoly::unit(), &eta, &[a])?;
        if v != a {
            unit.fail(|| format!("θ(η; {}) = {}", alg.render(a), alg.render(v)));
        }
    }

    let mut equi = Section::new("equivariance");
    for f in &objects {
        let cf = ctx.comp(f)?;
        for m in &morphisms[f] {
            let n = m.target().arity();
            for alpha in cf.iter() {
                let moved = op.act(m, alpha)?;
                for xs in carrier_tuples(alg.size(), n) {
                    ctx.budget.tick()?;
                    equi.instances += 1;
                    let pulled: Vec<usize> = m
                        .map()
                        .images()
                        .iter()
                        .map(|p| match *p {
                            Point::Zero => alg.zero(),
                            Point::E => alg.one(),
                            Point::At(k) => xs[k - 1],
                        })
                        .collect();
                    let lhs = alg.theta(m.target(), &moved, &xs)?;
                    let rhs = alg.theta(f, alpha, &pulled)?;
                    if lhs != rhs {
                        equi.fail(|| {
                            format!(
                                "{m}, α = {}, x = {}: θ(φ_*α; x) = {} but θ(α; φ^*x) = {}",
                                op.render(alpha),
                                show(&xs),
                                alg.render(lhs),
                                alg.render(rhs)
                            )
                        });
                    }
                }
            }
        }
    }

    let mut assoc = Section::new("associativity");
    let cap = ctx.cap;
    for g in &objects {
        for fs in tuples(&objects, g.arity(), cap) {
            let composite = compose(g, &fs)?;
            if !ctx.allowed(&composite) {
                continue;
            }
            let mut lists = vec![ctx.comp(g)?];
            for f in &fs {
                lists.push(ctx.comp(f)?);
            }
            let total = composite.arity();
            let mut failure = None;
            let budget = &mut ctx.budget;
            super::check::for_each_choice(&lists, |pick| {
                let args: Vec<(&RPoly, &O::Elem)> = fs.iter().zip(pick[1..].iter().copied()).collect();
                let composed = op.gamma(g, pick[0], &args)?;
                for xs in carrier_tuples(alg.size(), total) {
                    budget.tick()?;
                    assoc.instances += 1;
                    let mut inner = Vec::with_capacity(fs.len());
                    let mut start = 0;
                    for (f, beta) in &args {
                        inner.push(alg.theta(f, beta, &xs[start..start + f.arity()])?);
                        start += f.arity();
                    }
                    let lhs = alg.theta(&composite, &composed, &xs)?;
                    let rhs = alg.theta(g, pick[0], &inner)?;
                    if lhs != rhs && failure.is_none() {
                        failure = Some(format!(
                            "g = {g}, α = {}, x = {}: θ(γ(α; β); x) = {} but θ(α; θ(β; x)) = {}",
                            op.render(pick[0]),
                            show(&xs),
                            alg.render(lhs),
                            alg.render(rhs)
                        ));
                    }
                }
                Ok(())
            })?;
            if let Some(msg) = failure {
                assoc.fail(|| msg);
            }
        }
    }

    Ok(Report {
        title: format!("algebra diagrams over {} at cap {}", op.name(), ctx.cap),
        sections: vec![unit, equi, assoc],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::strict_operad;

    #[test]
    fn boolean_rig_over_strict() {
        let r = validate_algebra(&strict_operad(), &RigAlgebra(BooleanRig), &CheckConfig::new(3)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn point_carrier() {
        struct Point1;
        impl FiniteRig for Point1 {
            fn size(&self) -> usize {
                1
            }
            fn zero(&self) -> usize {
                0
            }
            fn one(&self) -> usize {
                0
            }
            fn add(&self, _: usize, _: usize) -> usize {
                0
            }
            fn mul(&self, _: usize, _: usize) -> usize {
                0
            }
        }
        let r = validate_algebra(&strict_operad(), &RigAlgebra(Point1), &CheckConfig::new(2)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn noncommutative_rig_breaks_equivariance() {
        let r = validate_algebra(&strict_operad(), &RigAlgebra(MatrixRig), &CheckConfig::new(2)).unwrap();
        assert!(r.section("equivariance").unwrap().failed(), "{r}");
        assert!(!r.section("unit").unwrap().failed());
    }

    #[test]
    fn corrupted_table_is_caught() {
        let op = strict_operad();
        let mut t = TableAlgebra::tabulate(&op, &RigAlgebra(BooleanRig), 2).unwrap();
        assert!(validate_algebra(&op, &t, &CheckConfig::new(2)).unwrap().passed());
        let f = RPoly::from_supports(2, &[&[1, 2]]).unwrap();
        t.set(&f, &(), &[1, 1], 0);
        let r = validate_algebra(&op, &t, &CheckConfig::new(2)).unwrap();
        assert!(!r.passed(), "{r}");
    }
}
