//! Table-backed operads and operad pairs read from fixture files.
//!
//! ```text
//! name example
//! cap 2
//! add component 0 = {z}
//! add component 1 = {i}
//! add component 2 = {s}
//! add unit i
//! mul component 0 = {u}
//! mul component 1 = {j}
//! mul component 2 = {p, q}
//! mul unit j
//! mul sigma 2 [2,1] : p -> q
//! mul sigma 2 [2,1] : q -> p
//! mul gamma p (j, u) = j
//! ```
//!
//! Both operads are declared up to the shared cap. Rows are optional where the
//! target is a single point, the permutation is an identity, or a unit law
//! determines the value. Remaining `gamma`, `sigma` and `lambda` rows are
//! looked up, and a missing row is an error at use.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::{permutations, product_of, FiniteOperad, OperadPair};
use crate::operad::table::{bracketed, names};
use crate::operad::{FixtureError, OperadError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFiniteOperad {
    name: String,
    cap: usize,
    components: Vec<Vec<String>>,
    arity: HashMap<String, usize>,
    unit: String,
    gamma: BTreeMap<(String, Vec<String>), String>,
    sigma: BTreeMap<(Vec<usize>, String), String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TablePair {
    name: String,
    add: TableFiniteOperad,
    mul: TableFiniteOperad,
    lambda: BTreeMap<(String, Vec<String>), String>,
}

fn empty(name: &str, cap: usize) -> TableFiniteOperad {
    TableFiniteOperad {
        name: name.to_string(),
        cap,
        components: vec![Vec::new(); cap + 1],
        arity: HashMap::new(),
        unit: String::new(),
        gamma: BTreeMap::new(),
        sigma: BTreeMap::new(),
    }
}

fn parse_perm(s: &str) -> Result<Vec<usize>, String> {
    let (inner, tail) = bracketed(s, '[', ']')?;
    if !tail.is_empty() {
        return Err(format!("unexpected '{tail}'"));
    }
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let p: Vec<usize> = inner
        .split(',')
        .map(|t| t.trim().parse().map_err(|_| format!("invalid permutation entry '{}'", t.trim())))
        .collect::<Result<_, _>>()?;
    let mut sorted = p.clone();
    sorted.sort_unstable();
    if sorted != (1..=p.len()).collect::<Vec<_>>() {
        return Err(format!("{p:?} is not a permutation"));
    }
    Ok(p)
}

/// Splits `x (a, b) = v` into its three parts.
fn application(rest: &str) -> Result<(String, Vec<String>, String), String> {
    let (x, tail) = rest.split_once('(').ok_or("expected '('")?;
    let (args, tail) = tail.split_once(')').ok_or("expected ')'")?;
    let value = tail.trim().strip_prefix('=').ok_or("expected '='")?.trim();
    let x = x.trim();
    if x.is_empty() || value.is_empty() {
        return Err("expected an element name".into());
    }
    Ok((x.to_string(), names(args)?, value.to_string()))
}

impl TableFiniteOperad {
    fn arity_of(&self, x: &str) -> Result<usize, String> {
        self.arity
            .get(x)
            .copied()
            .ok_or_else(|| format!("unknown {} element '{x}'", self.name))
    }

    fn row(&mut self, kind: &str, rest: &str) -> Result<(), String> {
        match kind {
            "component" => {
                let (j, list) = rest.split_once('=').ok_or("expected '='")?;
                let j: usize = j.trim().parse().map_err(|_| format!("invalid arity '{}'", j.trim()))?;
                if j > self.cap {
                    return Err(format!("arity {j} exceeds the cap {}", self.cap));
                }
                let (inner, tail) = bracketed(list, '{', '}')?;
                if !tail.is_empty() {
                    return Err(format!("unexpected '{tail}'"));
                }
                if !self.components[j].is_empty() {
                    return Err(format!("component {j} declared twice"));
                }
                let elts = names(inner)?;
                if elts.is_empty() {
                    return Err(format!("component {j} is empty"));
                }
                for e in &elts {
                    if self.arity.insert(e.clone(), j).is_some() {
                        return Err(format!("element '{e}' declared twice"));
                    }
                }
                self.components[j] = elts;
            }
            "unit" => {
                if self.arity.get(rest) != Some(&1) {
                    return Err(format!("'{rest}' is not an element of component 1"));
                }
                self.unit = rest.to_string();
            }
            "gamma" => {
                let (x, args, value) = application(rest)?;
                if self.arity_of(&x)? != args.len() {
                    return Err(format!("{} arguments for '{x}'", args.len()));
                }
                let mut total = 0;
                for a in &args {
                    total += self.arity_of(a)?;
                }
                if self.arity_of(&value)? != total {
                    return Err(format!("'{value}' is not in component {total}"));
                }
                self.gamma.insert((x, args), value);
            }
            "sigma" => {
                let (head, map) = rest.rsplit_once(':').ok_or("expected ':'")?;
                let (j, perm) = head.trim().split_once(char::is_whitespace).ok_or("expected a permutation")?;
                let j: usize = j.parse().map_err(|_| format!("invalid arity '{j}'"))?;
                let perm = parse_perm(perm)?;
                if perm.len() != j {
                    return Err(format!("permutation of {} points in arity {j}", perm.len()));
                }
                let (from, to) = map.split_once("->").ok_or("expected '->'")?;
                let (from, to) = (from.trim(), to.trim());
                if self.arity_of(from)? != j || self.arity_of(to)? != j {
                    return Err(format!("'{from}' and '{to}' must lie in component {j}"));
                }
                self.sigma.insert((perm, from.to_string()), to.to_string());
            }
            other => return Err(format!("unknown row kind '{other}'")),
        }
        Ok(())
    }

    fn finish(&self) -> Result<(), String> {
        if let Some(j) = self.components.iter().position(Vec::is_empty) {
            return Err(format!("{} component {j} is not declared", self.name));
        }
        if self.unit.is_empty() {
            return Err(format!("missing {} unit row", self.name));
        }
        Ok(())
    }

    /// Tabulates a finite operad up to `cap`, naming elements `<prefix>1, <prefix>2, ...`.
    pub fn materialize<O: FiniteOperad>(op: &O, cap: usize, prefix: &str) -> Result<Self, OperadError> {
        let mut t = empty(&op.name(), cap);
        let mut name_of: HashMap<O::Elem, String> = HashMap::new();
        let mut elems = Vec::with_capacity(cap + 1);
        for j in 0..=cap {
            let list = op.elements(j)?;
            for x in &list {
                let n = format!("{prefix}{}", t.arity.len() + 1);
                t.arity.insert(n.clone(), j);
                name_of.insert(x.clone(), n.clone());
                t.components[j].push(n);
            }
            elems.push(list);
        }
        let lookup = |x: &O::Elem| {
            name_of
                .get(x)
                .cloned()
                .ok_or_else(|| OperadError::Invalid(format!("{} is not tabulated", op.render(x))))
        };
        t.unit = lookup(&op.identity())?;
        for (j, list) in elems.iter().enumerate() {
            if list.len() < 2 {
                continue;
            }
            for s in permutations(j).into_iter().skip(1) {
                for x in list {
                    t.sigma.insert((s.clone(), lookup(x)?), lookup(&op.act(x, &s)?)?);
                }
            }
        }
        let id = op.identity();
        for (k, list) in elems.iter().enumerate() {
            for c in list {
                if *c == id {
                    continue;
                }
                let arities = product_of(&vec![(0..=cap).collect::<Vec<_>>(); k]);
                for ar in arities.into_iter().filter(|a| a.iter().sum::<usize>() <= cap) {
                    let total: usize = ar.iter().sum();
                    if elems[total].len() < 2 {
                        continue;
                    }
                    let lists: Vec<Vec<O::Elem>> = ar.iter().map(|&a| elems[a].clone()).collect();
                    for args in product_of(&lists) {
                        if args.iter().all(|a| *a == id) {
                            continue;
                        }
                        let v = op.compose(c, &args)?;
                        let keys = args.iter().map(&lookup).collect::<Result<Vec<_>, _>>()?;
                        t.gamma.insert((lookup(c)?, keys), lookup(&v)?);
                    }
                }
            }
        }
        Ok(t)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, prefix: &str) -> fmt::Result {
        for (j, list) in self.components.iter().enumerate() {
            writeln!(f, "{prefix} component {j} = {{{}}}", list.join(", "))?;
        }
        writeln!(f, "{prefix} unit {}", self.unit)?;
        for ((perm, from), to) in &self.sigma {
            let p: Vec<String> = perm.iter().map(ToString::to_string).collect();
            writeln!(f, "{prefix} sigma {} [{}] : {from} -> {to}", perm.len(), p.join(","))?;
        }
        for ((x, args), v) in &self.gamma {
            writeln!(f, "{prefix} gamma {x} ({}) = {v}", args.join(", "))?;
        }
        Ok(())
    }
}

impl FiniteOperad for TableFiniteOperad {
    type Elem = String;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn cap(&self) -> Option<usize> {
        Some(self.cap)
    }

    fn elements(&self, j: usize) -> Result<Vec<String>, OperadError> {
        self.components
            .get(j)
            .cloned()
            .ok_or(OperadError::CapExceeded { arity: j, cap: self.cap })
    }

    fn arity(&self, c: &String) -> usize {
        self.arity[c]
    }

    fn identity(&self) -> String {
        self.unit.clone()
    }

    fn act(&self, c: &String, sigma: &[usize]) -> Result<String, OperadError> {
        let j = self.arity(c);
        if sigma.len() != j {
            return Err(OperadError::Invalid(format!("permutation of {} points on '{c}'", sigma.len())));
        }
        if self.components[j].len() == 1 || sigma.iter().enumerate().all(|(i, &s)| s == i + 1) {
            return Ok(c.clone());
        }
        self.sigma
            .get(&(sigma.to_vec(), c.clone()))
            .cloned()
            .ok_or_else(|| OperadError::MissingEntry(format!("{} sigma {sigma:?} on {c}", self.name)))
    }

    fn compose(&self, c: &String, args: &[String]) -> Result<String, OperadError> {
        if args.len() != self.arity(c) {
            return Err(OperadError::Invalid(format!("{} arguments for '{c}'", args.len())));
        }
        let total: usize = args.iter().map(|a| self.arity(a)).sum();
        if total > self.cap {
            return Err(OperadError::CapExceeded { arity: total, cap: self.cap });
        }
        if self.components[total].len() == 1 {
            return Ok(self.components[total][0].clone());
        }
        if *c == self.unit {
            return Ok(args[0].clone());
        }
        if args.iter().all(|a| *a == self.unit) {
            return Ok(c.clone());
        }
        self.gamma
            .get(&(c.clone(), args.to_vec()))
            .cloned()
            .ok_or_else(|| OperadError::MissingEntry(format!("{} gamma {c} ({})", self.name, args.join(", "))))
    }

    fn render(&self, c: &String) -> String {
        c.clone()
    }
}

impl TablePair {
    pub fn parse(text: &str) -> Result<Self, FixtureError> {
        let mut name = String::from("table");
        let mut ops: Option<(TableFiniteOperad, TableFiniteOperad)> = None;
        let mut lambda = BTreeMap::new();
        let mut pending = Vec::new();
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
                "name" => name = rest.to_string(),
                "cap" => {
                    if ops.is_some() {
                        return Err(err("cap declared twice".into()));
                    }
                    let cap: usize = rest.parse().map_err(|_| err(format!("invalid cap '{rest}'")))?;
                    ops = Some((empty("additive", cap), empty("multiplicative", cap)));
                }
                "add" | "mul" => {
                    let (add, mul) = ops.as_mut().ok_or_else(|| err("cap must come first".into()))?;
                    let op = if key == "add" { add } else { mul };
                    let (kind, rest) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                    op.row(kind, rest.trim()).map_err(err)?;
                }
                "lambda" => {
                    let (g, cs, v) = application(rest).map_err(err)?;
                    pending.push((i + 1, line.to_string()));
                    lambda.insert((g, cs), v);
                }
                other => return Err(err(format!("unknown row kind '{other}'"))),
            }
        }
        let last = text.lines().count();
        let (add, mul) = ops.ok_or_else(|| FixtureError {
            line: last,
            row: String::new(),
            message: "missing cap row".into(),
        })?;
        for op in [&add, &mul] {
            op.finish().map_err(|message| FixtureError {
                line: last,
                row: String::new(),
                message,
            })?;
        }
        for ((g, cs), v) in &lambda {
            let check = || -> Result<(), String> {
                if mul.arity_of(g)? != cs.len() {
                    return Err(format!("{} additive inputs for '{g}'", cs.len()));
                }
                let mut total = 1;
                for c in cs {
                    total *= add.arity_of(c)?;
                }
                if add.arity_of(v)? != total {
                    return Err(format!("'{v}' is not in additive component {total}"));
                }
                Ok(())
            };
            if let Err(message) = check() {
                let (line, row) = pending
                    .iter()
                    .find(|(_, r)| r.contains(g.as_str()) && r.contains(v.as_str()))
                    .cloned()
                    .unwrap_or((last, String::new()));
                return Err(FixtureError { line, row, message });
            }
        }
        Ok(TablePair { name, add, mul, lambda })
    }

    /// Tabulates a pair up to `cap`; `λ` rows cover every input within the cap.
    pub fn materialize<P: OperadPair>(pair: &P, cap: usize) -> Result<Self, OperadError> {
        let (c_op, g_op) = (pair.additive(), pair.multiplicative());
        let mut add = TableFiniteOperad::materialize(c_op, cap, "c")?;
        let mut mul = TableFiniteOperad::materialize(g_op, cap, "g")?;
        add.name = "additive".into();
        mul.name = "multiplicative".into();
        let c_name: HashMap<_, _> = (0..=cap)
            .flat_map(|j| c_op.elements(j).unwrap_or_default())
            .zip(add.components.iter().flatten().cloned())
            .collect();
        let mut lambda = BTreeMap::new();
        for k in 0..=cap {
            for (g, gname) in g_op.elements(k)?.into_iter().zip(&mul.components[k]) {
                let arities = product_of(&vec![(0..=cap).collect::<Vec<_>>(); k]);
                for ar in arities {
                    let total: usize = ar.iter().product();
                    if total > cap || add.components[total].len() < 2 {
                        continue;
                    }
                    let lists: Vec<Vec<_>> = ar
                        .iter()
                        .map(|&a| c_op.elements(a))
                        .collect::<Result<_, _>>()?;
                    for cs in product_of(&lists) {
                        let v = pair.lambda(&g, &cs)?;
                        let keys: Vec<String> = cs.iter().map(|c| c_name[c].clone()).collect();
                        lambda.insert((gname.clone(), keys), c_name[&v].clone());
                    }
                }
            }
        }
        Ok(TablePair {
            name: pair.name(),
            add,
            mul,
            lambda,
        })
    }

    /// Replaces one multiplicative `σ` row, for mutation tests.
    pub fn set_mul_sigma(&mut self, perm: &[usize], from: &str, to: &str) {
        self.mul.sigma.insert((perm.to_vec(), from.to_string()), to.to_string());
    }
}

impl OperadPair for TablePair {
    type Add = TableFiniteOperad;
    type Mul = TableFiniteOperad;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn additive(&self) -> &TableFiniteOperad {
        &self.add
    }

    fn multiplicative(&self) -> &TableFiniteOperad {
        &self.mul
    }

    fn lambda(&self, g: &String, cs: &[String]) -> Result<String, OperadError> {
        let total: usize = cs.iter().map(|c| self.add.arity(c)).product();
        if total > self.add.cap {
            return Err(OperadError::CapExceeded { arity: total, cap: self.add.cap });
        }
        if self.add.components[total].len() == 1 {
            return Ok(self.add.components[total][0].clone());
        }
        self.lambda
            .get(&(g.clone(), cs.to_vec()))
            .cloned()
            .ok_or_else(|| OperadError::MissingEntry(format!("lambda {g} ({})", cs.join(", "))))
    }
}

impl fmt::Display for TablePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "name {}", self.name)?;
        writeln!(f, "cap {}", self.add.cap)?;
        self.add.write(f, "add")?;
        self.mul.write(f, "mul")?;
        for ((g, cs), v) in &self.lambda {
            writeln!(f, "lambda {g} ({}) = {v}", cs.join(", "))?;
        }
        Ok(())
    }
}
