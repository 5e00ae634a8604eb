//! Generator moves on canonical terms and reachability of the terminal representative.

use std::collections::{HashMap, VecDeque};

use super::fiber::enumerate_fiber;
use super::{plus, reduce_a, times, Mode, Term, TermError};
use crate::poly::RPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub name: &'static str,
    /// Path from the root, `l` for left child and `r` for right child.
    pub position: String,
    pub result: Term,
}

fn root_moves(t: &Term) -> Vec<(&'static str, Term)> {
    let mut out = Vec::new();
    match t {
        Term::Times(a, b) => {
            if let Term::Times(x, y) = &**a {
                out.push(("alpha", times((**x).clone(), times((**y).clone(), (**b).clone()))));
            }
            if let Term::Times(y, z) = &**b {
                out.push(("alpha^-1", times(times((**a).clone(), (**y).clone()), (**z).clone())));
            }
            out.push(("gamma", times((**b).clone(), (**a).clone())));
            if let Term::Plus(y, z) = &**b {
                out.push((
                    "delta",
                    plus(
                        times((**a).clone(), (**y).clone()),
                        times((**a).clone(), (**z).clone()),
                    ),
                ));
            }
            if let Term::Plus(x, y) = &**a {
                out.push((
                    "delta#",
                    plus(
                        times((**x).clone(), (**b).clone()),
                        times((**y).clone(), (**b).clone()),
                    ),
                ));
            }
        }
        Term::Plus(a, b) => {
            if let Term::Plus(x, y) = &**a {
                out.push(("alpha'", plus((**x).clone(), plus((**y).clone(), (**b).clone()))));
            }
            if let Term::Plus(y, z) = &**b {
                out.push(("alpha'^-1", plus(plus((**a).clone(), (**y).clone()), (**z).clone())));
            }
            out.push(("gamma'", plus((**b).clone(), (**a).clone())));
        }
        _ => {}
    }
    out
}

fn collect(t: &Term, path: &mut String, rebuild: &dyn Fn(Term) -> Term, out: &mut Vec<Move>) {
    for (name, r) in root_moves(t) {
        out.push(Move {
            name,
            position: path.clone(),
            result: rebuild(r),
        });
    }
    match t {
        Term::Plus(a, b) | Term::Times(a, b) => {
            let is_plus = matches!(t, Term::Plus(..));
            let join = move |x: Term, y: Term| if is_plus { plus(x, y) } else { times(x, y) };
            let b2 = (**b).clone();
            path.push('l');
            collect(a, path, &|x| rebuild(join(x, b2.clone())), out);
            path.pop();
            let a2 = (**a).clone();
            path.push('r');
            collect(b, path, &|y| rebuild(join(a2.clone(), y)), out);
            path.pop();
        }
        _ => {}
    }
}

/// Single applications of `α`, `α′`, `γ`, `γ′`, `δ`, `δ#` and the inverses of
/// `α` and `α′` at every position, each followed by unit and nullity reduction.
/// Unit isomorphisms act trivially on canonical terms and moves that return the
/// same term are dropped.
pub fn generator_moves(t: &Term) -> Vec<Move> {
    let mut out = Vec::new();
    collect(t, &mut String::new(), &|x| x, &mut out);
    for m in &mut out {
        m.result = reduce_a(&m.result);
    }
    out.retain(|m| &m.result != t);
    out
}

/// Monomials ordered by their ascending supports, summed left-parenthesized,
/// each a left-parenthesized product of ascending variables.
pub fn terminal_representative(f: &RPoly) -> Term {
    let mut monomials: Vec<&[usize]> = f.monomials().iter().map(|m| m.support()).collect();
    monomials.sort();
    let mut sum: Option<Term> = None;
    for m in monomials {
        let mut it = m.iter().map(|&i| Term::Var(i));
        let first = it.next().expect("monomials are non-empty");
        let prod = it.fold(first, times);
        sum = Some(match sum {
            None => prod,
            Some(s) => plus(s, prod),
        });
    }
    sum.unwrap_or(Term::Zero)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connectivity {
    pub poly: RPoly,
    pub terminal: Term,
    pub vertices: usize,
    pub edges: usize,
    pub unreached: Vec<Term>,
}

impl Connectivity {
    pub fn connected(&self) -> bool {
        self.unreached.is_empty()
    }
}

/// Undirected reachability of the terminal representative over the move graph
/// of the symmetric fiber.
pub fn connectivity_check(f: &RPoly, bound: usize) -> Result<Connectivity, TermError> {
    let fiber = enumerate_fiber(f, Mode::Sym, bound);
    if !fiber.stable {
        return Err(TermError::FiberNotStable {
            poly: f.to_string(),
            bound,
        });
    }
    let index: HashMap<&Term, usize> = fiber.terms.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut adj = vec![Vec::new(); fiber.terms.len()];
    let mut edges = 0;
    for (i, t) in fiber.terms.iter().enumerate() {
        for m in generator_moves(t) {
            if let Some(&j) = index.get(&m.result) {
                adj[i].push(j);
                adj[j].push(i);
                edges += 1;
            }
        }
    }
    let terminal = terminal_representative(f);
    let mut seen = vec![false; fiber.terms.len()];
    if let Some(&start) = index.get(&terminal) {
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        while let Some(i) = queue.pop_front() {
            for &j in &adj[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
    }
    let unreached = fiber
        .terms
        .iter()
        .zip(&seen)
        .filter(|(_, &s)| !s)
        .map(|(t, _)| t.clone())
        .collect();
    Ok(Connectivity {
        poly: f.clone(),
        terminal,
        vertices: fiber.terms.len(),
        edges,
        unreached,
    })
}
