//! Terms of the free `{+, ×}`-algebra with units and nullity, and its
//! bipermutative quotient.

mod fiber;
mod moves;
mod operad;

use std::fmt;

use thiserror::Error;

use crate::map::{ExtMap, Point};
use crate::poly::{IntPoly, RPoly};

pub use fiber::{default_bound, enumerate_fiber, Fiber};
pub use moves::{connectivity_check, generator_moves, terminal_representative, Connectivity, Move};
pub use operad::{sset_operad, SSetOperad};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("term uses x{index} but only {arity} arguments were given")]
    ArityMismatch { index: usize, arity: usize },
    #[error("{0} is not reduced")]
    NotReduced(String),
    #[error("fiber of {poly} is not stable at bound {bound}")]
    FiberNotStable { poly: String, bound: usize },
}

/// Which quotient of the free algebra a fiber lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// `A_n`: units and nullity only.
    Sym,
    /// `A′_n`: additionally strict associativity and right distributivity.
    Biperm,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Zero,
    One,
    Var(usize),
    Plus(Box<Term>, Box<Term>),
    Times(Box<Term>, Box<Term>),
}

pub fn plus(a: Term, b: Term) -> Term {
    Term::Plus(Box::new(a), Box::new(b))
}

pub fn times(a: Term, b: Term) -> Term {
    Term::Times(Box::new(a), Box::new(b))
}

impl Term {
    pub fn leaves(&self) -> usize {
        match self {
            Term::Plus(a, b) | Term::Times(a, b) => a.leaves() + b.leaves(),
            _ => 1,
        }
    }

    pub fn max_var(&self) -> usize {
        match self {
            Term::Var(i) => *i,
            Term::Plus(a, b) | Term::Times(a, b) => a.max_var().max(b.max_var()),
            _ => 0,
        }
    }

    fn map_vars(&self, f: &impl Fn(usize) -> Term) -> Term {
        match self {
            Term::Var(i) => f(*i),
            Term::Plus(a, b) => plus(a.map_vars(f), b.map_vars(f)),
            Term::Times(a, b) => times(a.map_vars(f), b.map_vars(f)),
            leaf => leaf.clone(),
        }
    }

    pub fn shifted(&self, by: usize) -> Term {
        self.map_vars(&|i| Term::Var(i + by))
    }

    /// No unit or nullity rewrite applies.
    pub fn is_canonical(&self) -> bool {
        fn inner(t: &Term) -> bool {
            match t {
                Term::Zero => false,
                Term::Plus(a, b) => inner(a) && inner(b),
                Term::Times(a, b) => {
                    **a != Term::One && **b != Term::One && inner(a) && inner(b)
                }
                _ => true,
            }
        }
        *self == Term::Zero || inner(self)
    }

    /// Normal form for `A′_n`: products have a variable on the left and no unit on
    /// the right, no zero operands, and sums nest to the right.
    pub fn is_reduced(&self) -> bool {
        fn inner(t: &Term) -> bool {
            match t {
                Term::Zero => false,
                Term::Plus(a, b) => !matches!(**a, Term::Plus(..)) && inner(a) && inner(b),
                Term::Times(a, b) => {
                    matches!(**a, Term::Var(_)) && **b != Term::One && inner(b)
                }
                _ => true,
            }
        }
        *self == Term::Zero || inner(self)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Zero => write!(f, "0"),
            Term::One => write!(f, "1"),
            Term::Var(i) => write!(f, "x{i}"),
            Term::Plus(a, b) => write!(f, "({a} + {b})"),
            Term::Times(a, b) => write!(f, "({a} * {b})"),
        }
    }
}

/// Applies `0 + x = x + 0 = x`, `0 × x = x × 0 = 0` and `1 × x = x × 1 = x` everywhere.
pub fn reduce_a(t: &Term) -> Term {
    match t {
        Term::Plus(a, b) => {
            let (a, b) = (reduce_a(a), reduce_a(b));
            match (a, b) {
                (Term::Zero, x) | (x, Term::Zero) => x,
                (a, b) => plus(a, b),
            }
        }
        Term::Times(a, b) => {
            let (a, b) = (reduce_a(a), reduce_a(b));
            match (a, b) {
                (Term::Zero, _) | (_, Term::Zero) => Term::Zero,
                (Term::One, x) | (x, Term::One) => x,
                (a, b) => times(a, b),
            }
        }
        leaf => leaf.clone(),
    }
}

/// The image in `N[a_1, ..., a_n]`.
pub fn project(t: &Term, arity: usize) -> IntPoly {
    match t {
        Term::Zero => IntPoly::zero(arity),
        Term::One => IntPoly::constant(arity, 1),
        Term::Var(i) => IntPoly::var(arity, *i),
        Term::Plus(a, b) => project(a, arity).add(&project(b, arity)),
        Term::Times(a, b) => project(a, arity).mul(&project(b, arity)),
    }
}

/// Relabels variables along `φ`, with `0` and `e` becoming `0` and `1`, then reduces.
pub fn act_map(phi: &ExtMap, t: &Term) -> Term {
    reduce_a(&t.map_vars(&|i| match phi.image(i) {
        Point::Zero => Term::Zero,
        Point::E => Term::One,
        Point::At(k) => Term::Var(k),
    }))
}

/// Substitutes argument `t` (of the given arity) for `x_t`, shifting each
/// argument past the earlier blocks, then reduces.
pub fn compose_terms(g: &Term, args: &[(usize, Term)]) -> Result<Term, TermError> {
    if g.max_var() > args.len() {
        return Err(TermError::ArityMismatch {
            index: g.max_var(),
            arity: args.len(),
        });
    }
    let mut shifted = Vec::with_capacity(args.len());
    let mut offset = 0;
    for (arity, t) in args {
        shifted.push(t.shifted(offset));
        offset += arity;
    }
    Ok(reduce_a(&g.map_vars(&|i| shifted[i - 1].clone())))
}

fn append_sum(a: Term, b: Term) -> Term {
    match a {
        Term::Plus(a1, a2) => plus(*a1, append_sum(*a2, b)),
        a => plus(a, b),
    }
}

/// Product of two reduced, non-zero, non-unit terms.
fn multiply(a: Term, b: Term) -> Term {
    match a {
        Term::One => b,
        Term::Plus(a1, a2) => append_sum(multiply(*a1, b.clone()), multiply(*a2, b)),
        Term::Times(v, rest) => times(*v, multiply(*rest, b)),
        v => times(v, b),
    }
}

/// The reduced representative of the class of `t` in `A′_n`.
pub fn normalize_biperm(t: &Term) -> Term {
    match t {
        Term::Plus(a, b) => match (normalize_biperm(a), normalize_biperm(b)) {
            (Term::Zero, x) | (x, Term::Zero) => x,
            (a, b) => append_sum(a, b),
        },
        Term::Times(a, b) => match (normalize_biperm(a), normalize_biperm(b)) {
            (Term::Zero, _) | (_, Term::Zero) => Term::Zero,
            (Term::One, x) | (x, Term::One) => x,
            (a, b) => multiply(a, b),
        },
        leaf => leaf.clone(),
    }
}

/// The section `s`: a reduced term viewed in `A_n`.
pub fn section_s(r: &Term) -> Result<Term, TermError> {
    if r.is_reduced() {
        Ok(r.clone())
    } else {
        Err(TermError::NotReduced(r.to_string()))
    }
}

pub fn fiber_member(t: &Term, f: &RPoly, mode: Mode) -> bool {
    let shape = match mode {
        Mode::Sym => t.is_canonical(),
        Mode::Biperm => t.is_reduced(),
    };
    shape && t.max_var() <= f.arity() && project(t, f.arity()) == f.to_intpoly()
}

/// Single applications of the bipermutative relations, left to right and right
/// to left, at every position. Used to test strategy independence of the normal form.
pub fn biperm_rewrites(t: &Term) -> Vec<Term> {
    fn at_root(t: &Term) -> Vec<Term> {
        let mut out = Vec::new();
        match t {
            Term::Plus(a, b) => {
                if let Term::Plus(x, y) = &**a {
                    out.push(plus((**x).clone(), plus((**y).clone(), (**b).clone())));
                }
                if let Term::Plus(y, z) = &**b {
                    out.push(plus(plus((**a).clone(), (**y).clone()), (**z).clone()));
                }
                if let (Term::Times(x, z1), Term::Times(y, z2)) = (&**a, &**b) {
                    if z1 == z2 {
                        out.push(times(plus((**x).clone(), (**y).clone()), (**z1).clone()));
                    }
                }
                if **a == Term::Zero {
                    out.push((**b).clone());
                }
                if **b == Term::Zero {
                    out.push((**a).clone());
                }
            }
            Term::Times(a, b) => {
                if let Term::Times(x, y) = &**a {
                    out.push(times((**x).clone(), times((**y).clone(), (**b).clone())));
                }
                if let Term::Times(y, z) = &**b {
                    out.push(times(times((**a).clone(), (**y).clone()), (**z).clone()));
                }
                if let Term::Plus(x, y) = &**a {
                    out.push(plus(
                        times((**x).clone(), (**b).clone()),
                        times((**y).clone(), (**b).clone()),
                    ));
                }
                if **a == Term::One {
                    out.push((**b).clone());
                }
                if **b == Term::One {
                    out.push((**a).clone());
                }
                if **a == Term::Zero || **b == Term::Zero {
                    out.push(Term::Zero);
                }
            }
            _ => {}
        }
        out
    }
    let mut out = at_root(t);
    match t {
        Term::Plus(a, b) => {
            out.extend(biperm_rewrites(a).into_iter().map(|x| plus(x, (**b).clone())));
            out.extend(biperm_rewrites(b).into_iter().map(|y| plus((**a).clone(), y)));
        }
        Term::Times(a, b) => {
            out.extend(biperm_rewrites(a).into_iter().map(|x| times(x, (**b).clone())));
            out.extend(biperm_rewrites(b).into_iter().map(|y| times((**a).clone(), y)));
        }
        _ => {}
    }
    out
}
