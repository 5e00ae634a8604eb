//! Discrete ring operads: a component set per polynomial, an action of every
//! morphism, a unit in `C(a_1)` and composition maps `γ`.

pub(crate) mod algebra;
mod check;
mod einfty;
pub(crate) mod table;

use std::fmt::Debug;
use std::hash::Hash;

use thiserror::Error;

use crate::category::{CategoryError, RMorphism};
use crate::map::MapError;
use crate::poly::{PolyError, RPoly};

pub use algebra::{validate_algebra, BooleanRig, DiscreteAlgebra, FiniteRig, MatrixRig, RigAlgebra, TableAlgebra};
pub use check::{check_axioms, CheckConfig};
pub use einfty::{check_einfty_set, compute_l};
pub use table::{FixtureError, TableOperad};

/// Default instance budget for exhaustive checks.
pub const DEFAULT_BUDGET: u64 = 100_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperadError {
    #[error("no component declared for {0}")]
    MissingComponent(String),
    #[error("missing table entry: {0}")]
    MissingEntry(String),
    #[error("{element} is not an element of C({poly})")]
    NotInComponent { element: String, poly: String },
    #[error("arity {arity} exceeds the cap {cap}")]
    CapExceeded { arity: usize, cap: usize },
    #[error("budget of {0} instances exhausted")]
    Budget(u64),
    #[error("fiber of {poly} is not stable at bound {bound}")]
    FiberNotStable { poly: String, bound: usize },
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Category(#[from] CategoryError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Map(#[from] MapError),
}

pub trait RingOperad {
    type Elem: Clone + Eq + Hash + Ord + Debug;

    fn name(&self) -> String;

    /// Largest arity on which the operad is defined, if bounded.
    fn cap(&self) -> Option<usize> {
        None
    }

    fn component(&self, f: &RPoly) -> Result<Vec<Self::Elem>, OperadError>;

    /// `η ∈ C(a_1)`.
    fn unit(&self) -> Self::Elem;

    /// `φ_*` applied to `x ∈ C(source)`.
    fn act(&self, m: &RMorphism, x: &Self::Elem) -> Result<Self::Elem, OperadError>;

    /// `γ(x; β_1, ..., β_k)` for `x ∈ C(g)` and `β_t ∈ C(f_t)`, landing in `C(g(f_1, ..., f_k))`.
    fn gamma(
        &self,
        g: &RPoly,
        x: &Self::Elem,
        args: &[(&RPoly, &Self::Elem)],
    ) -> Result<Self::Elem, OperadError>;

    fn render(&self, x: &Self::Elem) -> String {
        format!("{x:?}")
    }
}

/// Counts instances and stops at a fixed limit.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: u64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget { limit, used: 0 }
    }

    pub fn tick(&mut self) -> Result<(), OperadError> {
        self.used += 1;
        if self.used > self.limit {
            Err(OperadError::Budget(self.limit))
        } else {
            Ok(())
        }
    }

    pub fn used(&self) -> u64 {
        self.used
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// Outcome of one diagram or condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub status: Status,
    pub instances: u64,
    /// The first violating instance, when the status is `Fail`.
    pub violation: Option<String>,
}

impl Section {
    pub fn new(name: &str) -> Self {
        Section {
            name: name.to_string(),
            status: Status::Pass,
            instances: 0,
            violation: None,
        }
    }

    pub fn not_applicable(name: &str, why: &str) -> Self {
        Section {
            name: name.to_string(),
            status: Status::NotApplicable,
            instances: 0,
            violation: Some(why.to_string()),
        }
    }

    /// Records a failure; only the first one is kept.
    pub fn fail(&mut self, msg: impl FnOnce() -> String) {
        if self.status != Status::Fail {
            self.status = Status::Fail;
            self.violation = Some(msg());
        }
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub title: String,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.sections.iter().all(|s| s.status != Status::Fail)
    }

    pub fn section(&self, name: &str) -> Option<&Section> {
        self.sections.iter().find(|s| s.name == name)
    }
}

impl std::fmt::Display for Report {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "{}", self.title)?;
        for s in &self.sections {
            let tag = match s.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::NotApplicable => "n/a",
            };
            write!(f, "  {tag:4} {} ({} instances)", s.name, s.instances)?;
            if let Some(v) = &s.violation {
                write!(f, ": {v}")?;
            }
            writeln!(f)?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Every component a single point.
#[derive(Clone, Copy, Debug, Default)]
pub struct StrictOperad;

impl RingOperad for StrictOperad {
    type Elem = ();

    fn name(&self) -> String {
        "strict".into()
    }

    fn component(&self, _f: &RPoly) -> Result<Vec<()>, OperadError> {
        Ok(vec![()])
    }

    fn unit(&self) {}

    fn act(&self, _m: &RMorphism, _x: &()) -> Result<(), OperadError> {
        Ok(())
    }

    fn gamma(&self, _g: &RPoly, _x: &(), _args: &[(&RPoly, &())]) -> Result<(), OperadError> {
        Ok(())
    }

    fn render(&self, _x: &()) -> String {
        "*".into()
    }
}

pub fn strict_operad() -> StrictOperad {
    StrictOperad
}

/// Componentwise product of two ring operads.
#[derive(Clone, Debug)]
pub struct Product<A, B>(pub A, pub B);

impl<A: RingOperad, B: RingOperad> RingOperad for Product<A, B> {
    type Elem = (A::Elem, B::Elem);

    fn name(&self) -> String {
        format!("{} x {}", self.0.name(), self.1.name())
    }

    fn cap(&self) -> Option<usize> {
        match (self.0.cap(), self.1.cap()) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn component(&self, f: &RPoly) -> Result<Vec<Self::Elem>, OperadError> {
        let xs = self.0.component(f)?;
        let ys = self.1.component(f)?;
        let mut out = Vec::with_capacity(xs.len() * ys.len());
        for x in &xs {
            for y in &ys {
                out.push((x.clone(), y.clone()));
            }
        }
        Ok(out)
    }

    fn unit(&self) -> Self::Elem {
        (self.0.unit(), self.1.unit())
    }

    fn act(&self, m: &RMorphism, x: &Self::Elem) -> Result<Self::Elem, OperadError> {
        Ok((self.0.act(m, &x.0)?, self.1.act(m, &x.1)?))
    }

    fn gamma(
        &self,
        g: &RPoly,
        x: &Self::Elem,
        args: &[(&RPoly, &Self::Elem)],
    ) -> Result<Self::Elem, OperadError> {
        let left: Vec<(&RPoly, &A::Elem)> = args.iter().map(|(f, e)| (*f, &e.0)).collect();
        let right: Vec<(&RPoly, &B::Elem)> = args.iter().map(|(f, e)| (*f, &e.1)).collect();
        Ok((self.0.gamma(g, &x.0, &left)?, self.1.gamma(g, &x.1, &right)?))
    }

    fn render(&self, x: &Self::Elem) -> String {
        format!("({}, {})", self.0.render(&x.0), self.1.render(&x.1))
    }
}

pub fn product<A: RingOperad, B: RingOperad>(a: A, b: B) -> Product<A, B> {
    Product(a, b)
}

/// Delegates to an inner operad except for one overridden `γ` value.
pub struct Patched<O: RingOperad> {
    pub inner: O,
    pub g: RPoly,
    pub x: O::Elem,
    pub args: Vec<(RPoly, O::Elem)>,
    pub value: O::Elem,
}

impl<O: RingOperad> RingOperad for Patched<O> {
    type Elem = O::Elem;

    fn name(&self) -> String {
        format!("{} (patched)", self.inner.name())
    }

    fn cap(&self) -> Option<usize> {
        self.inner.cap()
    }

    fn component(&self, f: &RPoly) -> Result<Vec<Self::Elem>, OperadError> {
        self.inner.component(f)
    }

    fn unit(&self) -> Self::Elem {
        self.inner.unit()
    }

    fn act(&self, m: &RMorphism, x: &Self::Elem) -> Result<Self::Elem, OperadError> {
        self.inner.act(m, x)
    }

    fn gamma(
        &self,
        g: &RPoly,
        x: &Self::Elem,
        args: &[(&RPoly, &Self::Elem)],
    ) -> Result<Self::Elem, OperadError> {
        let hit = g == &self.g
            && x == &self.x
            && args.len() == self.args.len()
            && args
                .iter()
                .zip(&self.args)
                .all(|((f, e), (pf, pe))| *f == pf && *e == pe);
        if hit {
            Ok(self.value.clone())
        } else {
            self.inner.gamma(g, x, args)
        }
    }

    fn render(&self, x: &Self::Elem) -> String {
        self.inner.render(x)
    }
}
