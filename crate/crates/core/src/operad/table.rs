//! Table-backed operads read from fixture files.
//!
//! ```text
//! name two-points
//! cap 2
//! component R(1): x1 = {u}
//! component R(2): x2 + x1 = {p, q}
//! unit u
//! gamma p (u, u) = q
//! act R(2): x2 + x1 |{1->2, 2->1}| R(2): x2 + x1 : p -> q
//! ```
//!
//! Every component up to the cap is declared. Element names are unique across
//! components. Rows are optional where the target component is a single point or
//! the morphism is an identity.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use thiserror::Error;

use super::check::{tuples, CheckConfig, Ctx};
use super::{OperadError, RingOperad};
use crate::category::RMorphism;
use crate::map::ExtMap;
use crate::poly::{compose, RPoly};
use crate::text::{parse_morphism, parse_poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message} in row `{row}`")]
pub struct FixtureError {
    pub line: usize,
    pub row: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableOperad {
    name: String,
    cap: usize,
    components: BTreeMap<RPoly, Vec<String>>,
    owner: HashMap<String, RPoly>,
    unit: String,
    gamma: BTreeMap<(String, Vec<String>), String>,
    act: BTreeMap<(ExtMap, String), String>,
}

pub(crate) fn valid_name(s: &str) -> bool {
    !s.is_empty() && !s.chars().any(|c| c.is_whitespace() || ",()=:{}|".contains(c))
}

pub(crate) fn names(list: &str) -> Result<Vec<String>, String> {
    let list = list.trim();
    if list.is_empty() {
        return Ok(Vec::new());
    }
    list.split(',')
        .map(|s| {
            let s = s.trim();
            if valid_name(s) {
                Ok(s.to_string())
            } else {
                Err(format!("invalid element name '{s}'"))
            }
        })
        .collect()
}

pub(crate) fn bracketed(s: &str, open: char, close: char) -> Result<(&str, &str), String> {
    let s = s.trim();
    let rest = s
        .strip_prefix(open)
        .ok_or_else(|| format!("expected '{open}'"))?;
    let end = rest.find(close).ok_or_else(|| format!("expected '{close}'"))?;
    Ok((&rest[..end], rest[end + 1..].trim()))
}

impl TableOperad {
    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        let mut t = TableOperad {
            name: "table".into(),
            cap: 0,
            components: BTreeMap::new(),
            owner: HashMap::new(),
            unit: String::new(),
            gamma: BTreeMap::new(),
            act: BTreeMap::new(),
        };
        let mut cap_seen = false;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| FixtureError {
                line: i + 1,
                row: line.to_string(),
                message,
            };
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "name" => t.name = rest.to_string(),
                "cap" => {
                    t.cap = rest.parse().map_err(|_| err(format!("invalid cap '{rest}'")))?;
                    cap_seen = true;
                }
                "component" => {
                    let (poly, list) = rest
                        .split_once('=')
                        .ok_or_else(|| err("expected '='".into()))?;
                    let f = parse_poly(poly).map_err(|e| err(e.to_string()))?;
                    if f.arity() > t.cap {
                        return Err(err(format!("arity {} exceeds the cap {}", f.arity(), t.cap)));
                    }
                    let (inner, tail) = bracketed(list, '{', '}').map_err(err)?;
                    if !tail.is_empty() {
                        return Err(err(format!("unexpected '{tail}'")));
                    }
                    let elts = names(inner).map_err(err)?;
                    if t.components.contains_key(&f) {
                        return Err(err(format!("component of {f} declared twice")));
                    }
                    for e in &elts {
                        if t.owner.insert(e.clone(), f.clone()).is_some() {
                            return Err(err(format!("element '{e}' declared twice")));
                        }
                    }
                    t.components.insert(f, elts);
                }
                "unit" => {
                    if t.owner.get(rest) != Some(&RPoly::unit()) {
                        return Err(err(format!("'{rest}' is not an element of C(R(1): x1)")));
                    }
                    t.unit = rest.to_string();
                }
                "gamma" => {
                    let (x, tail) = rest
                        .split_once('(')
                        .ok_or_else(|| err("expected '('".into()))?;
                    let (args, tail) = tail
                        .split_once(')')
                        .ok_or_else(|| err("expected ')'".into()))?;
                    let value = tail
                        .trim()
                        .strip_prefix('=')
                        .ok_or_else(|| err("expected '='".into()))?
                        .trim();
                    let x = x.trim();
                    let args = names(args).map_err(err)?;
                    let g = t.owner_of(x).map_err(err)?;
                    if args.len() != g.arity() {
                        return Err(err(format!(
                            "{} arguments for an element of C({g})",
                            args.len()
                        )));
                    }
                    let fs: Vec<RPoly> = args
                        .iter()
                        .map(|a| t.owner_of(a))
                        .collect::<Result<_, _>>()
                        .map_err(err)?;
                    let composite = compose(&g, &fs).map_err(|e| err(e.to_string()))?;
                    t.check_member(value, &composite).map_err(err)?;
                    t.gamma.insert((x.to_string(), args), value.to_string());
                }
                "act" => {
                    let (morphism, map) = rest
                        .rsplit_once(':')
                        .ok_or_else(|| err("expected ':'".into()))?;
                    let (from, to) = map
                        .split_once("->")
                        .ok_or_else(|| err("expected '->'".into()))?;
                    let (from, to) = (from.trim(), to.trim());
                    let m = parse_morphism(morphism).map_err(|e| err(e.to_string()))?;
                    t.check_member(from, m.source()).map_err(err)?;
                    t.check_member(to, m.target()).map_err(err)?;
                    t.act.insert((m.map().clone(), from.to_string()), to.to_string());
                }
                other => return Err(err(format!("unknown row kind '{other}'"))),
            }
        }
        let end = FixtureError {
            line: text.lines().count(),
            row: String::new(),
            message: String::new(),
        };
        if !cap_seen {
            return Err(FixtureError {
                message: "missing cap row".into(),
                ..end
            });
        }
        if t.unit.is_empty() {
            return Err(FixtureError {
                message: "missing unit row".into(),
                ..end
            });
        }
        Ok(t)
    }

    fn owner_of(&self, x: &str) -> Result<RPoly, String> {
        self.owner
            .get(x)
            .cloned()
            .ok_or_else(|| format!("unknown element '{x}'"))
    }

    fn check_member(&self, x: &str, f: &RPoly) -> Result<(), String> {
        let c = self
            .components
            .get(f)
            .ok_or_else(|| format!("no component declared for {f}"))?;
        if c.iter().any(|e| e == x) {
            Ok(())
        } else {
            Err(format!("'{x}' is not an element of C({f})"))
        }
    }

    /// Replaces one `γ` row, for mutation tests.
    pub fn set_gamma(&mut self, x: &str, args: &[&str], value: &str) {
        self.gamma.insert(
            (x.to_string(), args.iter().map(|s| s.to_string()).collect()),
            value.to_string(),
        );
    }

    pub fn gamma_rows(&self) -> impl Iterator<Item = (&str, &[String], &str)> {
        self.gamma
            .iter()
            .map(|((x, args), v)| (x.as_str(), args.as_slice(), v.as_str()))
    }

    pub fn elements(&self, f: &RPoly) -> Option<&[String]> {
        self.components.get(f).map(Vec::as_slice)
    }

    /// Tabulates a rule-backed operad on every object of arity at most `cap`,
    /// naming elements `c1, c2, ...` in object order.
    pub fn materialize<O: RingOperad>(op: &O, cap: usize) -> Result<Self, OperadError> {
        let mut cfg = CheckConfig::new(cap);
        cfg.budget = u64::MAX;
        let mut ctx = Ctx::new(op, &cfg)?;
        let objects = ctx.objects();
        let mut t = TableOperad {
            name: op.name(),
            cap: ctx.cap,
            components: BTreeMap::new(),
            owner: HashMap::new(),
            unit: String::new(),
            gamma: BTreeMap::new(),
            act: BTreeMap::new(),
        };
        let mut name_of: HashMap<(RPoly, O::Elem), String> = HashMap::new();
        for f in &objects {
            let mut list = Vec::new();
            for x in ctx.comp(f)?.iter() {
                let n = format!("c{}", t.owner.len() + 1);
                t.owner.insert(n.clone(), f.clone());
                name_of.insert((f.clone(), x.clone()), n.clone());
                list.push(n);
            }
            t.components.insert(f.clone(), list);
        }
        let lookup = |f: &RPoly, x: &O::Elem| {
            name_of
                .get(&(f.clone(), x.clone()))
                .cloned()
                .ok_or_else(|| OperadError::NotInComponent {
                    element: op.render(x),
                    poly: f.to_string(),
                })
        };
        t.unit = lookup(&RPoly::unit(), &op.unit())?;
        for (f, list) in ctx.morphisms(&objects) {
            for m in list {
                if t.components[m.target()].len() < 2 || m.map() == &ExtMap::identity(f.arity()) {
                    continue;
                }
                for x in ctx.comp(&f)?.iter() {
                    let y = op.act(&m, x)?;
                    t.act.insert((m.map().clone(), lookup(&f, x)?), lookup(m.target(), &y)?);
                }
            }
        }
        for g in &objects {
            for fs in tuples(&objects, g.arity(), t.cap) {
                let composite = compose(g, &fs)?;
                if t.components[&composite].len() < 2 {
                    continue;
                }
                let mut lists = vec![ctx.comp(g)?];
                for f in &fs {
                    lists.push(ctx.comp(f)?);
                }
                super::check::for_each_choice(&lists, |pick| {
                    let args: Vec<(&RPoly, &O::Elem)> = fs.iter().zip(pick[1..].iter().copied()).collect();
                    let v = op.gamma(g, pick[0], &args)?;
                    let key_args = fs
                        .iter()
                        .zip(&pick[1..])
                        .map(|(f, x)| lookup(f, x))
                        .collect::<Result<Vec<_>, _>>()?;
                    t.gamma.insert((lookup(g, pick[0])?, key_args), lookup(&composite, &v)?);
                    Ok(())
                })?;
            }
        }
        Ok(t)
    }
}

impl RingOperad for TableOperad {
    type Elem = String;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn cap(&self) -> Option<usize> {
        Some(self.cap)
    }

    fn component(&self, f: &RPoly) -> Result<Vec<String>, OperadError> {
        self.components
            .get(f)
            .cloned()
            .ok_or_else(|| OperadError::MissingComponent(f.to_string()))
    }

    fn unit(&self) -> String {
        self.unit.clone()
    }

    fn act(&self, m: &RMorphism, x: &String) -> Result<String, OperadError> {
        if m.source() == m.target() && m.map() == &ExtMap::identity(m.source().arity()) {
            return Ok(x.clone());
        }
        let target = self.component(m.target())?;
        if target.len() == 1 {
            return Ok(target[0].clone());
        }
        self.act
            .get(&(m.map().clone(), x.clone()))
            .cloned()
            .ok_or_else(|| OperadError::MissingEntry(format!("act {m} : {x}")))
    }

    fn gamma(
        &self,
        g: &RPoly,
        x: &String,
        args: &[(&RPoly, &String)],
    ) -> Result<String, OperadError> {
        let fs: Vec<RPoly> = args.iter().map(|(f, _)| (*f).clone()).collect();
        let composite = compose(g, &fs)?;
        let target = self.component(&composite)?;
        if target.len() == 1 {
            return Ok(target[0].clone());
        }
        let key = (x.clone(), args.iter().map(|(_, e)| (*e).clone()).collect::<Vec<_>>());
        self.gamma.get(&key).cloned().ok_or_else(|| {
            OperadError::MissingEntry(format!("gamma {} ({})", x, key.1.join(", ")))
        })
    }

    fn render(&self, x: &String) -> String {
        x.clone()
    }
}

impl fmt::Display for TableOperad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name {}", self.name)?;
        writeln!(f, "cap {}", self.cap)?;
        for (p, elts) in &self.components {
            writeln!(f, "component {p} = {{{}}}", elts.join(", "))?;
        }
        writeln!(f, "unit {}", self.unit)?;
        for ((x, args), v) in &self.gamma {
            writeln!(f, "gamma {x} ({}) = {v}", args.join(", "))?;
        }
        for ((map, x), y) in &self.act {
            let src = &self.owner[x];
            let tgt = &self.owner[y];
            writeln!(f, "act {src} |{map}| {tgt} : {x} -> {y}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{check_axioms, strict_operad};
    use crate::term::{sset_operad, Mode};

    const SMALL: &str = "\
name two
cap 1
component R(0): 0 = {z}
component R(1): 0 = {o}
component R(1): x1 = {u}
unit u
";

    #[test]
    fn parse_small_fixture() {
        let t = TableOperad::parse(SMALL).unwrap();
        assert_eq!(t.component(&RPoly::unit()).unwrap(), vec!["u".to_string()]);
        let r = check_axioms(&t, &CheckConfig::new(1)).unwrap();
        assert!(r.passed(), "{r}");
        assert_eq!(TableOperad::parse(&t.to_string()).unwrap(), t);
    }

    #[test]
    fn malformed_rows_are_named() {
        let bad = format!("{SMALL}gamma u (u, u) = u\n");
        let e = TableOperad::parse(&bad).unwrap_err();
        assert_eq!(e.line, 7);
        assert!(e.to_string().contains("gamma u (u, u) = u"), "{e}");
        let e = TableOperad::parse("cap 1\nfrobnicate\n").unwrap_err();
        assert!(e.message.contains("unknown row kind"), "{e}");
        let e = TableOperad::parse("cap 1\ncomponent R(1): x1 = {a b}\n").unwrap_err();
        assert!(e.message.contains("invalid element name"), "{e}");
    }

    #[test]
    fn materialized_strict_matches() {
        let t = TableOperad::materialize(&strict_operad(), 2).unwrap();
        assert!(t.gamma.is_empty() && t.act.is_empty());
        assert!(check_axioms(&t, &CheckConfig::new(2)).unwrap().passed());
    }

    #[test]
    fn materialized_sset_round_trips_and_detects_corruption() {
        let mut t = TableOperad::materialize(&sset_operad(Mode::Sym), 2).unwrap();
        let back = TableOperad::parse(&t.to_string()).unwrap();
        assert_eq!(back, t);
        assert!(check_axioms(&t, &CheckConfig::new(2)).unwrap().passed());
        let (x, args, v) = t
            .gamma_rows()
            .find(|(_, args, _)| args.len() == 2)
            .map(|(x, a, v)| (x.to_string(), a.to_vec(), v.to_string()))
            .unwrap();
        let owner = t.owner[&v].clone();
        let other = t.components[&owner].iter().find(|e| **e != v).unwrap().clone();
        let arg_refs: Vec<&str> = args.iter().map(String::as_str).collect();
        t.set_gamma(&x, &arg_refs, &other);
        assert!(!check_axioms(&t, &CheckConfig::new(2)).unwrap().passed());
    }
}
