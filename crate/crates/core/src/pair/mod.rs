//! Classical operads, operad pairs, and the ring operad `R_{C,G}` they determine.

mod table;

use std::fmt::{self, Debug};
use std::hash::Hash;

use crate::category::{induced_lambda_maps, RMorphism};
use crate::operad::{DiscreteAlgebra, OperadError, Report, RingOperad, Section};
use crate::poly::{compose, Monomial, RPoly};

pub use table::{TableFiniteOperad, TablePair};

/// A symmetric operad with finite components `O(j)`.
pub trait FiniteOperad {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn name(&self) -> String;

    /// Largest `j` with `O(j)` available, if bounded.
    fn cap(&self) -> Option<usize> {
        None
    }

    fn elements(&self, j: usize) -> Result<Vec<Self::Elem>, OperadError>;

    fn arity(&self, c: &Self::Elem) -> usize;

    fn identity(&self) -> Self::Elem;

    /// `c·σ`, the operation `(y_1, .., y_j) ↦ c(y_σ(1), .., y_σ(j))`; `sigma` lists `σ(1), .., σ(j)`.
    fn act(&self, c: &Self::Elem, sigma: &[usize]) -> Result<Self::Elem, OperadError>;

    /// `γ̃(c; d_1, .., d_k)`.
    fn compose(&self, c: &Self::Elem, args: &[Self::Elem]) -> Result<Self::Elem, OperadError>;

    fn render(&self, c: &Self::Elem) -> String {
        format!("{c:?}")
    }

    fn nullary(&self) -> Result<Self::Elem, OperadError> {
        match self.elements(0)?.as_slice() {
            [z] => Ok(z.clone()),
            other => Err(OperadError::Invalid(format!(
                "{} has {} nullary elements; restriction needs exactly one",
                self.name(),
                other.len()
            ))),
        }
    }
}

/// One point in every arity; an element is its arity.
#[derive(Clone, Copy, Debug, Default)]
pub struct TerminalOperad;

impl FiniteOperad for TerminalOperad {
    type Elem = usize;

    fn name(&self) -> String {
        "terminal".into()
    }
    fn elements(&self, j: usize) -> Result<Vec<usize>, OperadError> {
        Ok(vec![j])
    }
    fn arity(&self, c: &usize) -> usize {
        *c
    }
    fn identity(&self) -> usize {
        1
    }
    fn act(&self, c: &usize, _sigma: &[usize]) -> Result<usize, OperadError> {
        Ok(*c)
    }
    fn compose(&self, _c: &usize, args: &[usize]) -> Result<usize, OperadError> {
        Ok(args.iter().sum())
    }
    fn render(&self, c: &usize) -> String {
        format!("*{c}")
    }
}

/// The associative operad: `τ ∈ Σ_j` is the word `x_τ(1) ⋯ x_τ(j)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct SigmaOperad;

fn permutations(j: usize) -> Vec<Vec<usize>> {
    if j == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(j - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, j);
            out.push(q);
        }
    }
    out.sort();
    out
}

impl FiniteOperad for SigmaOperad {
    type Elem = Vec<usize>;

    fn name(&self) -> String {
        "sigma".into()
    }
    fn cap(&self) -> Option<usize> {
        Some(6)
    }
    fn elements(&self, j: usize) -> Result<Vec<Vec<usize>>, OperadError> {
        if j > 6 {
            return Err(OperadError::CapExceeded { arity: j, cap: 6 });
        }
        Ok(permutations(j))
    }
    fn arity(&self, c: &Vec<usize>) -> usize {
        c.len()
    }
    fn identity(&self) -> Vec<usize> {
        vec![1]
    }
    fn act(&self, c: &Vec<usize>, sigma: &[usize]) -> Result<Vec<usize>, OperadError> {
        if sigma.len() != c.len() {
            return Err(OperadError::Invalid(format!(
                "permutation of {} points on an arity {} element",
                sigma.len(),
                c.len()
            )));
        }
        Ok(c.iter().map(|&t| sigma[t - 1]).collect())
    }
    fn compose(&self, c: &Vec<usize>, args: &[Vec<usize>]) -> Result<Vec<usize>, OperadError> {
        if args.len() != c.len() {
            return Err(OperadError::Invalid(format!(
                "{} arguments for an arity {} element",
                args.len(),
                c.len()
            )));
        }
        let mut offsets = Vec::with_capacity(args.len());
        let mut total = 0;
        for a in args {
            offsets.push(total);
            total += a.len();
        }
        let offsets = &offsets;
        Ok(c.iter()
            .flat_map(|&t| args[t - 1].iter().map(move |&v| v + offsets[t - 1]))
            .collect())
    }
    fn render(&self, c: &Vec<usize>) -> String {
        let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

/// `u^*: O(m) → O(k)` for an injection `u` given by its images `u(1), .., u(k)` in `1..=m`.
pub fn restriction<O: FiniteOperad>(op: &O, u: &[usize], c: &O::Elem) -> Result<O::Elem, OperadError> {
    let m = op.arity(c);
    let mut hit = vec![false; m];
    for &t in u {
        if t == 0 || t > m || hit[t - 1] {
            return Err(OperadError::Invalid(format!("{u:?} is not an injection into 1..{m}")));
        }
        hit[t - 1] = true;
    }
    let d = if hit.iter().all(|&h| h) {
        c.clone()
    } else {
        let z = op.nullary()?;
        let args: Vec<O::Elem> = hit
            .iter()
            .map(|&h| if h { op.identity() } else { z.clone() })
            .collect();
        op.compose(c, &args)?
    };
    let mut sorted: Vec<usize> = u.to_vec();
    sorted.sort_unstable();
    let rank = |t: usize| sorted.binary_search(&t).expect("in image") + 1;
    let mut sigma = vec![0; u.len()];
    for (s, &t) in u.iter().enumerate() {
        sigma[rank(t) - 1] = s + 1;
    }
    if sigma.iter().enumerate().all(|(i, &s)| s == i + 1) {
        Ok(d)
    } else {
        op.act(&d, &sigma)
    }
}

/// An additive and a multiplicative operad with the distributivity action `λ`.
pub trait OperadPair {
    type Add: FiniteOperad;
    type Mul: FiniteOperad;

    fn name(&self) -> String {
        format!("({}, {})", self.additive().name(), self.multiplicative().name())
    }

    fn additive(&self) -> &Self::Add;

    fn multiplicative(&self) -> &Self::Mul;

    /// `λ(g; c_1, .., c_k) ∈ C(j_1 ⋯ j_k)`, inputs indexed by tuples in lexicographic order.
    fn lambda(
        &self,
        g: &<Self::Mul as FiniteOperad>::Elem,
        cs: &[<Self::Add as FiniteOperad>::Elem],
    ) -> Result<<Self::Add as FiniteOperad>::Elem, OperadError>;
}

/// A pair whose additive operad is terminal, so `λ` is forced.
#[derive(Clone, Copy, Debug, Default)]
pub struct TerminalPair<M>(pub M);

impl<M: FiniteOperad> OperadPair for TerminalPair<M> {
    type Add = TerminalOperad;
    type Mul = M;

    fn additive(&self) -> &TerminalOperad {
        &TerminalOperad
    }

    fn multiplicative(&self) -> &M {
        &self.0
    }

    fn lambda(&self, _g: &M::Elem, cs: &[usize]) -> Result<usize, OperadError> {
        Ok(cs.iter().product())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RcgElem<A, M> {
    pub add: A,
    /// One factor per monomial, in canonical order.
    pub mul: Vec<M>,
}

type AddElem<P> = <<P as OperadPair>::Add as FiniteOperad>::Elem;
type MulElem<P> = <<P as OperadPair>::Mul as FiniteOperad>::Elem;

/// The ring operad with `R(f) = C(|Λ_f|) × Π_{I ∈ Λ_f} G(|Γ_I|)`.
#[derive(Clone, Debug)]
pub struct Rcg<P>(pub P);

pub fn build_rcg<P: OperadPair>(pair: P) -> Rcg<P> {
    Rcg(pair)
}

/// `(|Λ_f|, [|Γ_I| for I in Λ_f])`.
pub fn component_signature(f: &RPoly) -> (usize, Vec<usize>) {
    (f.len(), f.monomials().iter().map(Monomial::degree).collect())
}

fn product_of<E: Clone>(lists: &[Vec<E>]) -> Vec<Vec<E>> {
    let mut out = vec![Vec::new()];
    for l in lists {
        let mut next = Vec::with_capacity(out.len() * l.len());
        for prefix in &out {
            for e in l {
                let mut p = prefix.clone();
                p.push(e.clone());
                next.push(p);
            }
        }
        out = next;
    }
    out
}

impl<P: OperadPair> Rcg<P> {
    /// The composite monomials of `f(g_1, .., g_k)` in generation order: each
    /// `I ∈ Λ_f`, then each tuple `(J_i)_{i ∈ Γ_I}` lexicographically.
    fn generation(f: &RPoly, gs: &[&RPoly]) -> Vec<(usize, Vec<usize>, Monomial)> {
        let mut offsets = Vec::with_capacity(gs.len());
        let mut total = 0;
        for g in gs {
            offsets.push(total);
            total += g.arity();
        }
        let mut out = Vec::new();
        for (p, mono) in f.monomials().iter().enumerate() {
            let ranges: Vec<Vec<usize>> = mono
                .support()
                .iter()
                .map(|&i| (0..gs[i - 1].len()).collect())
                .collect();
            for pick in product_of(&ranges) {
                let mut vars = Vec::new();
                for (&i, &q) in mono.support().iter().zip(&pick) {
                    let o = offsets[i - 1];
                    vars.extend(gs[i - 1].monomials()[q].support().iter().map(|v| v + o));
                }
                vars.sort_unstable();
                out.push((p, pick, Monomial::new(vars).expect("blocks are disjoint")));
            }
        }
        out
    }
}

/// The operad arities met by `γ` on `R(f) × R(g_1) × .. × R(g_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSignature {
    pub composite: RPoly,
    /// `|Λ_f|` followed by the arity of each `λ` output, one per monomial of `f`.
    pub c_inputs: Vec<usize>,
    pub c_output: usize,
    /// For each composite monomial in canonical order, the arities fed to `γ̃` in `G` and its output.
    pub g_layer: Vec<(Vec<usize>, usize)>,
}

pub fn composition_signature(f: &RPoly, gs: &[RPoly]) -> Result<CompositionSignature, OperadError> {
    let composite = compose(f, gs)?;
    let refs: Vec<&RPoly> = gs.iter().collect();
    let mut c_inputs = vec![f.len()];
    for mono in f.monomials() {
        c_inputs.push(mono.support().iter().map(|&i| gs[i - 1].len()).product());
    }
    let mut g_layer = vec![(Vec::new(), 0); composite.len()];
    for (p, pick, mono) in Rcg::<TerminalPair<TerminalOperad>>::generation(f, &refs) {
        let support = f.monomials()[p].support();
        let mut inputs = vec![support.len()];
        inputs.extend(support.iter().zip(&pick).map(|(&i, &q)| gs[i - 1].monomials()[q].degree()));
        let pos = composite.position(&mono).expect("generated monomials lie in the composite");
        g_layer[pos] = (inputs, mono.degree());
    }
    Ok(CompositionSignature {
        c_output: composite.len(),
        composite,
        c_inputs,
        g_layer,
    })
}

impl fmt::Display for CompositionSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let layer = |letter: char, ins: &[usize], out: usize| {
            let parts: Vec<String> = ins.iter().map(|a| format!("{letter}({a})")).collect();
            format!("{} -> {letter}({out})", parts.join(" x "))
        };
        writeln!(f, "composite {}", self.composite)?;
        writeln!(f, "C layer: {}", layer('C', &self.c_inputs, self.c_output))?;
        for (ins, out) in &self.g_layer {
            writeln!(f, "G layer: {}", layer('G', ins, *out))?;
        }
        Ok(())
    }
}

impl<P: OperadPair> RingOperad for Rcg<P> {
    type Elem = RcgElem<AddElem<P>, MulElem<P>>;

    fn name(&self) -> String {
        format!("R{}", self.0.name())
    }

    fn component(&self, f: &RPoly) -> Result<Vec<Self::Elem>, OperadError> {
        let (l, sizes) = component_signature(f);
        let adds = self.0.additive().elements(l)?;
        let muls: Vec<Vec<MulElem<P>>> = sizes
            .iter()
            .map(|&k| self.0.multiplicative().elements(k))
            .collect::<Result<_, _>>()?;
        let mut out = Vec::new();
        for a in &adds {
            for m in product_of(&muls) {
                out.push(RcgElem {
                    add: a.clone(),
                    mul: m,
                });
            }
        }
        Ok(out)
    }

    fn unit(&self) -> Self::Elem {
        RcgElem {
            add: self.0.additive().identity(),
            mul: vec![self.0.multiplicative().identity()],
        }
    }

    fn act(&self, m: &RMorphism, x: &Self::Elem) -> Result<Self::Elem, OperadError> {
        let lm = induced_lambda_maps(m);
        let u: Vec<usize> = lm.prime.iter().map(|p| p + 1).collect();
        let add = restriction(self.0.additive(), &u, &x.add)?;
        let mul = lm
            .prime
            .iter()
            .zip(&lm.restrictions)
            .map(|(&p, r)| {
                let u: Vec<usize> = r.iter().map(|q| q + 1).collect();
                restriction(self.0.multiplicative(), &u, &x.mul[p])
            })
            .collect::<Result<_, _>>()?;
        Ok(RcgElem { add, mul })
    }

    fn gamma(
        &self,
        f: &RPoly,
        x: &Self::Elem,
        args: &[(&RPoly, &Self::Elem)],
    ) -> Result<Self::Elem, OperadError> {
        let (c_op, g_op) = (self.0.additive(), self.0.multiplicative());
        let gs: Vec<&RPoly> = args.iter().map(|(g, _)| *g).collect();
        let owned: Vec<RPoly> = gs.iter().map(|g| (*g).clone()).collect();
        let composite = compose(f, &owned)?;
        let mut lambdas = Vec::with_capacity(f.len());
        for (p, mono) in f.monomials().iter().enumerate() {
            let cs: Vec<AddElem<P>> = mono.support().iter().map(|&i| args[i - 1].1.add.clone()).collect();
            lambdas.push(self.0.lambda(&x.mul[p], &cs)?);
        }
        let add = c_op.compose(&x.add, &lambdas)?;
        let generated = Self::generation(f, &gs);
        let mut mul = vec![None; generated.len()];
        let mut sigma = Vec::with_capacity(generated.len());
        for (p, pick, mono) in generated {
            let support = f.monomials()[p].support();
            let inner: Vec<MulElem<P>> = support
                .iter()
                .zip(&pick)
                .map(|(&i, &q)| args[i - 1].1.mul[q].clone())
                .collect();
            let value = g_op.compose(&x.mul[p], &inner)?;
            let pos = composite
                .position(&mono)
                .ok_or_else(|| OperadError::Invalid(format!("{mono} is not a monomial of {composite}")))?;
            mul[pos] = Some(value);
            sigma.push(pos + 1);
        }
        let add = if sigma.iter().enumerate().all(|(i, &s)| s == i + 1) {
            add
        } else {
            c_op.act(&add, &sigma)?
        };
        Ok(RcgElem {
            add,
            mul: mul.into_iter().map(|m| m.expect("every position generated once")).collect(),
        })
    }

    fn render(&self, x: &Self::Elem) -> String {
        let (c, g) = (self.0.additive(), self.0.multiplicative());
        let muls: Vec<String> = x.mul.iter().map(|m| g.render(m)).collect();
        format!("{}|{}", c.render(&x.add), muls.join(","))
    }
}

/// Unit, associativity and action laws of a finite operad up to arity `cap`.
pub fn check_finite_operad<O: FiniteOperad>(op: &O, cap: usize) -> Result<Report, OperadError> {
    let mut unit = Section::new("unit");
    let mut assoc = Section::new("associativity");
    let mut action = Section::new("action");
    let mut equi = Section::new("equivariance");
    let id = op.identity();
    let elems: Vec<Vec<O::Elem>> = (0..=cap).map(|j| op.elements(j)).collect::<Result<_, _>>()?;
    for (j, list) in elems.iter().enumerate() {
        let perms = permutations(j);
        for c in list {
            unit.instances += 1;
            let right = op.compose(c, &vec![id.clone(); j])?;
            let left = op.compose(&id, std::slice::from_ref(c))?;
            if &right != c || &left != c {
                unit.fail(|| op.render(c).to_string());
            }
            for s in &perms {
                for t in &perms {
                    action.instances += 1;
                    let st: Vec<usize> = s.iter().map(|&i| t[i - 1]).collect();
                    let lhs = op.act(&op.act(c, s)?, t)?;
                    let rhs = op.act(c, &st)?;
                    if lhs != rhs {
                        action.fail(|| format!("{} with {s:?} then {t:?}", op.render(c)));
                    }
                }
            }
        }
    }
    let arity_tuples = |k: usize, max: usize| -> Vec<Vec<usize>> {
        product_of(&vec![(0..=max).collect::<Vec<_>>(); k])
            .into_iter()
            .filter(|t| t.iter().sum::<usize>() <= max)
            .collect()
    };
    for k in 0..=cap {
        for c in &elems[k] {
            for ar in arity_tuples(k, cap) {
                let lists: Vec<Vec<O::Elem>> = ar.iter().map(|&a| elems[a].clone()).collect();
                for ds in product_of(&lists) {
                    let cd = op.compose(c, &ds)?;
                    let total: usize = ar.iter().sum();
                    for br in arity_tuples(total, cap) {
                        let blists: Vec<Vec<O::Elem>> = br.iter().map(|&a| elems[a].clone()).collect();
                        for es in product_of(&blists) {
                            assoc.instances += 1;
                            let lhs = op.compose(&cd, &es)?;
                            let mut inner = Vec::with_capacity(k);
                            let mut start = 0;
                            for (d, &a) in ds.iter().zip(&ar) {
                                inner.push(op.compose(d, &es[start..start + a])?);
                                start += a;
                            }
                            let rhs = op.compose(c, &inner)?;
                            if lhs != rhs {
                                assoc.fail(|| format!("{} over {:?}", op.render(c), ar));
                            }
                        }
                    }
                    for s in permutations(k) {
                        equi.instances += 1;
                        let lhs = op.compose(&op.act(c, &s)?, &ds)?;
                        let permuted: Vec<O::Elem> = s.iter().map(|&t| ds[t - 1].clone()).collect();
                        let rhs = op.act(&op.compose(c, &permuted)?, &block_permutation(&s, &ar))?;
                        if lhs != rhs {
                            equi.fail(|| format!("{} with {s:?} over {:?}", op.render(c), ar));
                        }
                    }
                }
            }
        }
    }
    Ok(Report {
        title: format!("operad laws for {} up to arity {cap}", op.name()),
        sections: vec![unit, assoc, action, equi],
    })
}

/// Lists, block by block in the order `s(1), .., s(k)`, the original positions
/// of blocks of sizes `arities`.
fn block_permutation(s: &[usize], arities: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(arities.len());
    let mut total = 0;
    for a in arities {
        offsets.push(total);
        total += a;
    }
    let offsets = &offsets;
    s.iter()
        .flat_map(|&t| (1..=arities[t - 1]).map(move |r| offsets[t - 1] + r))
        .collect()
}

/// An algebra over an operad pair on `{0, .., size - 1}`.
pub trait PairAlgebra<P: OperadPair> {
    fn size(&self) -> usize;
    fn zero(&self) -> usize;
    fn one(&self) -> usize;
    fn theta_add(&self, c: &AddElem<P>, xs: &[usize]) -> Result<usize, OperadError>;
    fn theta_mul(&self, g: &MulElem<P>, xs: &[usize]) -> Result<usize, OperadError>;
}

/// A rig with commutative addition over `(terminal, Σ)`: sums, and products in word order.
#[derive(Clone, Copy, Debug, Default)]
pub struct RigPairAlgebra<R>(pub R);

impl<R: crate::operad::FiniteRig> PairAlgebra<TerminalPair<SigmaOperad>> for RigPairAlgebra<R> {
    fn size(&self) -> usize {
        self.0.size()
    }
    fn zero(&self) -> usize {
        self.0.zero()
    }
    fn one(&self) -> usize {
        self.0.one()
    }
    fn theta_add(&self, _c: &usize, xs: &[usize]) -> Result<usize, OperadError> {
        Ok(xs.iter().fold(self.0.zero(), |a, &x| self.0.add(a, x)))
    }
    fn theta_mul(&self, g: &Vec<usize>, xs: &[usize]) -> Result<usize, OperadError> {
        Ok(g.iter().fold(self.0.one(), |a, &t| self.0.mul(a, xs[t - 1])))
    }
}

/// The `R_{C,G}`-algebra of a pair algebra: multiply within each monomial, then add.
pub struct FromPair<'a, P, A>(pub &'a P, pub A);

impl<P: OperadPair, A: PairAlgebra<P>> DiscreteAlgebra<Rcg<P>> for FromPair<'_, P, A> {
    fn size(&self) -> usize {
        self.1.size()
    }
    fn zero(&self) -> usize {
        self.1.zero()
    }
    fn one(&self) -> usize {
        self.1.one()
    }
    fn theta(
        &self,
        f: &RPoly,
        alpha: &RcgElem<AddElem<P>, MulElem<P>>,
        xs: &[usize],
    ) -> Result<usize, OperadError> {
        let mut ys = Vec::with_capacity(f.len());
        for (mono, g) in f.monomials().iter().zip(&alpha.mul) {
            let block: Vec<usize> = mono.support().iter().map(|&i| xs[i - 1]).collect();
            ys.push(self.1.theta_mul(g, &block)?);
        }
        self.1.theta_add(&alpha.add, &ys)
    }
}

/// The pair algebra of an `R_{C,G}`-algebra, restricting along `a_1 + .. + a_j`
/// and `a_1 ⋯ a_j`.
pub struct ToPair<'a, P, A>(pub &'a P, pub A);

impl<P: OperadPair, A: DiscreteAlgebra<Rcg<P>>> PairAlgebra<P> for ToPair<'_, P, A> {
    fn size(&self) -> usize {
        self.1.size()
    }
    fn zero(&self) -> usize {
        self.1.zero()
    }
    fn one(&self) -> usize {
        self.1.one()
    }
    fn theta_add(&self, c: &AddElem<P>, xs: &[usize]) -> Result<usize, OperadError> {
        let j = xs.len();
        let supports: Vec<Vec<usize>> = (1..=j).map(|i| vec![i]).collect();
        let refs: Vec<&[usize]> = supports.iter().map(Vec::as_slice).collect();
        let f = RPoly::from_supports(j, &refs)?;
        let alpha = RcgElem {
            add: c.clone(),
            mul: vec![self.0.multiplicative().identity(); j],
        };
        self.1.theta(&f, &alpha, xs)
    }
    /// The empty product has no polynomial in `R(0)`; it is sent to the image of `e`.
    fn theta_mul(&self, g: &MulElem<P>, xs: &[usize]) -> Result<usize, OperadError> {
        let j = xs.len();
        if j == 0 {
            return Ok(self.1.one());
        }
        let all: Vec<usize> = (1..=j).collect();
        let f = RPoly::from_supports(j, &[&all])?;
        let alpha = RcgElem {
            add: self.0.additive().identity(),
            mul: vec![g.clone()],
        };
        self.1.theta(&f, &alpha, xs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::{ExtMap, Point};
    use crate::operad::{check_axioms, strict_operad, CheckConfig};

    fn p(arity: usize, s: &[&[usize]]) -> RPoly {
        RPoly::from_supports(arity, s).unwrap()
    }

    #[test]
    fn sigma_restriction_is_relabelled_subsequence() {
        let op = SigmaOperad;
        for m in 0..=4 {
            for tau in op.elements(m).unwrap() {
                for k in 0..=m {
                    for u in product_of(&vec![(1..=m).collect::<Vec<_>>(); k]) {
                        let mut s = u.clone();
                        s.sort_unstable();
                        s.dedup();
                        if s.len() != k {
                            continue;
                        }
                        let expected: Vec<usize> = tau
                            .iter()
                            .filter_map(|v| u.iter().position(|t| t == v).map(|s| s + 1))
                            .collect();
                        assert_eq!(restriction(&op, &u, &tau).unwrap(), expected, "{tau:?} {u:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn restriction_examples() {
        let op = SigmaOperad;
        assert_eq!(restriction(&op, &[1, 2], &vec![2, 1]).unwrap(), vec![2, 1]);
        for tau in op.elements(2).unwrap() {
            assert_eq!(restriction(&op, &[2], &tau).unwrap(), vec![1]);
        }
        assert_eq!(restriction(&TerminalOperad, &[3, 1], &4).unwrap(), 2);
    }

    #[test]
    fn finite_operad_laws() {
        for r in [check_finite_operad(&SigmaOperad, 3), check_finite_operad(&TerminalOperad, 3)] {
            let r = r.unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn worked_component_signature() {
        let f = p(5, &[&[1, 2, 3], &[1, 4], &[5]]);
        assert_eq!(component_signature(&f), (3, vec![1, 2, 3]));
        let rcg = build_rcg(TerminalPair(SigmaOperad));
        assert_eq!(rcg.component(&f).unwrap().len(), 12);
    }

    #[test]
    fn worked_action_factors() {
        let f = p(5, &[&[1, 2, 3], &[1, 4], &[5]]);
        let phi = ExtMap::new(
            2,
            vec![Point::E, Point::At(1), Point::At(2), Point::At(1), Point::Zero],
        )
        .unwrap();
        let m = RMorphism::along(&f, &phi).unwrap();
        let rcg = build_rcg(TerminalPair(SigmaOperad));
        let x = RcgElem {
            add: 3,
            mul: vec![vec![1], vec![2, 1], vec![3, 1, 2]],
        };
        let y = rcg.act(&m, &x).unwrap();
        // x1*x4 restricts along 1 -> 4 to [1]; x3*x1*x2 along (2, 3) keeps x3 before x2.
        assert_eq!(y, RcgElem { add: 2, mul: vec![vec![1], vec![2, 1]] });
    }

    #[test]
    fn swap_exchanges_factors() {
        let f = p(2, &[&[1], &[2]]);
        let swap = RMorphism::along(&f, &ExtMap::from_indices(2, &[2, 1]).unwrap()).unwrap();
        let pair = TerminalPair(SigmaOperad);
        let rcg = build_rcg(pair);
        let x = RcgElem { add: 2, mul: vec![vec![1], vec![1]] };
        assert_eq!(rcg.act(&swap, &x).unwrap(), x);
    }

    #[test]
    fn worked_composite_shuffle() {
        let f = p(2, &[&[1], &[1, 2]]);
        let g2 = p(2, &[&[1, 2]]);
        let rcg = build_rcg(TerminalPair(SigmaOperad));
        let x = RcgElem { add: 2, mul: vec![vec![1], vec![2, 1]] };
        let b1 = RcgElem { add: 2, mul: vec![vec![1], vec![1, 2]] };
        let b2 = RcgElem { add: 1, mul: vec![vec![2, 1]] };
        let out = rcg.gamma(&f, &x, &[(&f, &b1), (&g2, &b2)]).unwrap();
        let composite = compose(&f, &[f.clone(), g2.clone()]).unwrap();
        assert_eq!(component_signature(&composite), (4, vec![1, 3, 2, 4]));
        assert_eq!(out.add, 4);
        assert_eq!(
            out.mul,
            vec![vec![1], vec![3, 2, 1], vec![1, 2], vec![4, 3, 1, 2]]
        );
    }

    #[test]
    fn terminal_pair_is_strict() {
        let rcg = build_rcg(TerminalPair(TerminalOperad));
        let r = check_axioms(&rcg, &CheckConfig::new(2)).unwrap();
        assert!(r.passed(), "{r}");
        for n in 0..=2 {
            for f in crate::poly::enumerate_r(n).unwrap() {
                assert_eq!(rcg.component(&f).unwrap().len(), strict_operad().component(&f).unwrap().len());
            }
        }
    }

    #[test]
    fn sigma_pair_axioms() {
        let r = check_axioms(&build_rcg(TerminalPair(SigmaOperad)), &CheckConfig::new(2)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn pair_algebra_round_trip() {
        use crate::operad::{validate_algebra, MatrixRig, TableAlgebra};
        let pair = TerminalPair(SigmaOperad);
        let rcg = build_rcg(pair);
        let alg = FromPair(&pair, RigPairAlgebra(MatrixRig));
        let r = validate_algebra(&rcg, &alg, &CheckConfig::new(2)).unwrap();
        assert!(r.passed(), "{r}");

        let back = ToPair(&pair, FromPair(&pair, RigPairAlgebra(MatrixRig)));
        let rig = RigPairAlgebra(MatrixRig);
        for j in 0..=3 {
            for xs in crate::operad::algebra::carrier_tuples(16, j) {
                assert_eq!(back.theta_add(&j, &xs).unwrap(), rig.theta_add(&j, &xs).unwrap());
                for g in SigmaOperad.elements(j).unwrap() {
                    assert_eq!(back.theta_mul(&g, &xs).unwrap(), rig.theta_mul(&g, &xs).unwrap());
                }
            }
        }

        let table = TableAlgebra::tabulate(&rcg, &alg, 2).unwrap();
        let rebuilt = FromPair(&pair, ToPair(&pair, table.clone()));
        for n in 0..=2 {
            // Rebuilding needs the sum of |Λ_f| inputs, which the table holds up to two.
            for f in crate::poly::enumerate_r(n).unwrap().into_iter().filter(|f| f.len() <= 2) {
                for a in rcg.component(&f).unwrap() {
                    for xs in crate::operad::algebra::carrier_tuples(16, n) {
                        assert_eq!(rebuilt.theta(&f, &a, &xs).unwrap(), table.theta(&f, &a, &xs).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn worked_composition_signature() {
        let f = p(2, &[&[1], &[1, 2]]);
        let g2 = p(2, &[&[1, 2]]);
        let sig = composition_signature(&f, &[f.clone(), g2]).unwrap();
        assert_eq!(sig.c_inputs, vec![2, 2, 2]);
        assert_eq!(sig.c_output, 4);
        assert_eq!(
            sig.g_layer,
            vec![(vec![1, 1], 1), (vec![2, 1, 2], 3), (vec![1, 2], 2), (vec![2, 2, 2], 4)]
        );
        assert!(sig.to_string().contains("G layer: G(2) x G(1) x G(2) -> G(3)"));
    }
}
