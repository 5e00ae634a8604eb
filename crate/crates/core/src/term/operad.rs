//! The term operads: components are fibers, structure maps are substitution.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::fiber::{default_bound, enumerate_fiber};
use super::{act_map, compose_terms, normalize_biperm, Mode, Term};
use crate::category::RMorphism;
use crate::operad::{OperadError, RingOperad};
use crate::poly::RPoly;

#[derive(Debug)]
pub struct SSetOperad {
    mode: Mode,
    fibers: RwLock<HashMap<RPoly, Arc<Vec<Term>>>>,
}

pub fn sset_operad(mode: Mode) -> SSetOperad {
    SSetOperad {
        mode,
        fibers: RwLock::new(HashMap::new()),
    }
}

impl SSetOperad {
    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn fiber(&self, f: &RPoly) -> Result<Arc<Vec<Term>>, OperadError> {
        if let Some(t) = self.fibers.read().expect("fiber cache").get(f) {
            return Ok(t.clone());
        }
        let bound = default_bound(f);
        let fiber = enumerate_fiber(f, self.mode, bound);
        if !fiber.stable {
            return Err(OperadError::FiberNotStable {
                poly: f.to_string(),
                bound,
            });
        }
        let terms = Arc::new(fiber.terms);
        self.fibers
            .write()
            .expect("fiber cache")
            .insert(f.clone(), terms.clone());
        Ok(terms)
    }

    fn finish(&self, t: Term) -> Term {
        match self.mode {
            Mode::Sym => t,
            Mode::Biperm => normalize_biperm(&t),
        }
    }
}

impl RingOperad for SSetOperad {
    type Elem = Term;

    fn name(&self) -> String {
        match self.mode {
            Mode::Sym => "sset".into(),
            Mode::Biperm => "pset".into(),
        }
    }

    fn component(&self, f: &RPoly) -> Result<Vec<Term>, OperadError> {
        Ok(self.fiber(f)?.as_ref().clone())
    }

    fn unit(&self) -> Term {
        Term::Var(1)
    }

    fn act(&self, m: &RMorphism, x: &Term) -> Result<Term, OperadError> {
        Ok(self.finish(act_map(m.map(), x)))
    }

    fn gamma(
        &self,
        g: &RPoly,
        x: &Term,
        args: &[(&RPoly, &Term)],
    ) -> Result<Term, OperadError> {
        if args.len() != g.arity() {
            return Err(OperadError::Invalid(format!(
                "{} arguments for an arity {} operation",
                args.len(),
                g.arity()
            )));
        }
        let args: Vec<(usize, Term)> = args.iter().map(|(f, t)| (f.arity(), (*t).clone())).collect();
        let t = compose_terms(x, &args).map_err(|e| OperadError::Invalid(e.to_string()))?;
        Ok(self.finish(t))
    }

    fn render(&self, x: &Term) -> String {
        x.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{check_axioms, CheckConfig};

    #[test]
    fn unit_component() {
        for mode in [Mode::Sym, Mode::Biperm] {
            let op = sset_operad(mode);
            assert_eq!(op.component(&RPoly::unit()).unwrap(), vec![Term::Var(1)]);
        }
    }

    #[test]
    fn axioms_at_cap_one() {
        for mode in [Mode::Sym, Mode::Biperm] {
            let r = check_axioms(&sset_operad(mode), &CheckConfig::new(1)).unwrap();
            assert!(r.passed(), "{r}");
        }
    }
}
