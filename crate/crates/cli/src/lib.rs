//! Command dispatch for the `ringop` binary.
//!
//! Every subcommand returns an [`Output`]: the exit status, the text written to
//! stdout and, on usage errors, the message written to stderr. With `--json`
//! the same data is emitted as one JSON document.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ringop::category::{connected_components, enumerate_hom, filtration, special_rep_morphism, HomClass};
use ringop::operad::{
    check_axioms, check_einfty_set, strict_operad, validate_algebra, BooleanRig, CheckConfig, DiscreteAlgebra,
    MatrixRig, OperadError, Report, RigAlgebra, RingOperad, Status, TableOperad,
};
use ringop::pair::{
    build_rcg, composition_signature, component_signature, FromPair, OperadPair, RigPairAlgebra, SigmaOperad,
    TablePair, TerminalOperad, TerminalPair,
};
use ringop::poly::{compose, enumerate_r, RPoly};
use ringop::term::{
    connectivity_check, default_bound, enumerate_fiber, normalize_biperm, project, reduce_a, sset_operad, Mode,
};
use ringop::text::{parse_intpoly, parse_morphism, parse_poly, parse_term};
use ringop::wreath::{
    ff_compose, fold, nu_evaluate, parse_ff_morphism, verify_assignment_functoriality, FFMorphism, Family, Layout,
};

#[derive(Parser, Debug)]
#[command(name = "ringop", version, about = "Finite models of ring operads over square-free polynomials")]
pub struct Cli {
    /// Emit one JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand, Debug)]
enum Group {
    /// Polynomials in R(n).
    #[command(subcommand)]
    Poly(PolyCmd),
    /// The index category.
    #[command(subcommand)]
    Cat(CatCmd),
    /// Axiom, E-infinity and algebra checks.
    #[command(subcommand)]
    Check(CheckCmd),
    /// Ring operads built from operad pairs.
    #[command(subcommand)]
    Rcg(RcgCmd),
    /// Terms of the free {+,*}-algebras.
    #[command(subcommand)]
    Term(TermCmd),
    /// The wreath category and its polynomial assignment.
    #[command(subcommand)]
    Fwrf(FwrfCmd),
}

#[derive(Subcommand, Debug)]
enum PolyCmd {
    /// List R(n) in canonical order.
    Enumerate {
        #[arg(long)]
        arity: usize,
    },
    /// Decide membership in R(n) of an integer polynomial.
    Member { poly: String },
    /// Compose g(f_1, .., f_k).
    Compose { g: String, args: Vec<String> },
    /// Print the type (l; k_1, .., k_l).
    Type { poly: String },
    /// Print the special object of the component and the morphism to the input.
    Special { poly: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ClassArg {
    All,
    Effective,
    Nondegenerate,
}

#[derive(Subcommand, Debug)]
enum CatCmd {
    /// List morphisms f -> g.
    Hom {
        source: String,
        target: String,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
    },
    /// Factor a morphism as effective after singular.
    Decompose { morphism: String },
    /// Connected components of the effective subcategory in arity n.
    Components {
        #[arg(long)]
        arity: usize,
    },
    /// Objects of the filtration of a special object up to a level.
    Filtration {
        poly: String,
        #[arg(long)]
        level: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Builtin {
    Strict,
    Sset,
    Pset,
    RcgTerminal,
    RcgSigma,
}

#[derive(Args, Debug)]
struct OperadSource {
    /// A built-in ring operad.
    #[arg(long, value_enum, conflicts_with_all = ["fixture", "pair"])]
    builtin: Option<Builtin>,
    /// A ring operad fixture file.
    #[arg(long, conflicts_with = "pair")]
    fixture: Option<PathBuf>,
    /// An operad pair fixture file, checked through its ring operad.
    #[arg(long)]
    pair: Option<PathBuf>,
    #[arg(long, default_value_t = 2)]
    cap: usize,
    #[arg(long)]
    budget: Option<u64>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum AlgebraArg {
    Boolean,
    Matrix,
    /// Sums and ordered products of 2x2 Boolean matrices; needs `--builtin rcg-sigma`.
    PairMatrix,
}

#[derive(Subcommand, Debug)]
enum CheckCmd {
    /// Functoriality, unit, associativity, equivariance and naturality.
    Axioms(OperadSource),
    /// The set-level E-infinity conditions.
    Einfty(OperadSource),
    /// Algebra diagrams for a finite rig.
    Algebra {
        #[command(flatten)]
        source: OperadSource,
        #[arg(long, value_enum, default_value = "boolean")]
        algebra: AlgebraArg,
    },
}

#[derive(Args, Debug)]
struct PairSource {
    /// `terminal,terminal`, `terminal,sigma`, or a pair fixture file.
    #[arg(long, default_value = "terminal,sigma")]
    pair: String,
}

#[derive(Subcommand, Debug)]
enum RcgCmd {
    /// Signature and elements of R(f).
    Component {
        poly: String,
        #[command(flatten)]
        pair: PairSource,
    },
    /// The action of a morphism, element by element.
    Act {
        morphism: String,
        #[command(flatten)]
        pair: PairSource,
    },
    /// The arities met by composition into g(f_1, .., f_k).
    Compose {
        g: String,
        args: Vec<String>,
        #[command(flatten)]
        pair: PairSource,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Sym,
    Biperm,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Sym => Mode::Sym,
            ModeArg::Biperm => Mode::Biperm,
        }
    }
}

#[derive(Subcommand, Debug)]
enum TermCmd {
    /// Reduce a term, or bring it to bipermutative normal form.
    Normalize {
        term: String,
        #[arg(long, value_enum, default_value = "sym")]
        mode: ModeArg,
    },
    /// The integer polynomial of a term.
    Project {
        term: String,
        #[arg(long)]
        arity: Option<usize>,
    },
    /// The terms over a polynomial, up to a leaf bound.
    Fiber {
        poly: String,
        #[arg(long, value_enum, default_value = "sym")]
        mode: ModeArg,
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Connectivity of a fiber under the generator moves.
    Connect {
        poly: String,
        #[arg(long)]
        bound: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum FwrfCmd {
    /// The polynomial assigned to each target slot.
    Assign { morphism: String },
    /// Compose two morphisms, outer after inner.
    Compose { outer: String, inner: String },
    /// Check that the assignment of a composite is the folded composite of assignments.
    Verify {
        outer: Option<String>,
        inner: Option<String>,
        /// Use the built-in composable pair (2:[2,2]) -> (2:[2,1]) -> (1:[1]).
        #[arg(long, conflicts_with_all = ["outer", "inner"])]
        sample: bool,
    },
    /// Evaluate a morphism on a finite rig over the strict operad.
    Nu {
        morphism: String,
        #[arg(long, value_enum, default_value = "boolean")]
        algebra: AlgebraArg,
        /// Comma-separated carrier points.
        #[arg(long, default_value = "")]
        input: String,
    },
}

/// Exit status and streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Outcome {
    passed: bool,
    text: String,
    json: Value,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { passed: true, text, json }
    }
}

type Res = Result<Outcome, String>;

pub const SAMPLE_OUTER: &str = "(2:[2,1]) -> (1:[1]) : phi={1->1, 2->1}; d1={(1,1)->1, (2,1)->1}";
pub const SAMPLE_INNER: &str =
    "(2:[2,2]) -> (2:[2,1]) : phi={1->1, 2->1}; d1={(1,1)->1, (1,2)->2, (2,1)->0, (2,2)->1}; d2={()->1}";

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Output { status: 0, stdout: text, stderr: String::new() }
            } else {
                Output { status: 2, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli.group) {
        Ok(o) => {
            let stdout = if cli.json {
                let mut v = o.json;
                if let Value::Object(map) = &mut v {
                    map.insert("passed".into(), Value::Bool(o.passed));
                }
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json values serialize"))
            } else {
                o.text
            };
            Output {
                status: if o.passed { 0 } else { 1 },
                stdout,
                stderr: String::new(),
            }
        }
        Err(msg) => Output {
            status: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn dispatch(g: &Group) -> Res {
    match g {
        Group::Poly(c) => poly_cmd(c),
        Group::Cat(c) => cat_cmd(c),
        Group::Check(c) => check_cmd(c),
        Group::Rcg(c) => rcg_cmd(c),
        Group::Term(c) => term_cmd(c),
        Group::Fwrf(c) => fwrf_cmd(c),
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

fn poly(text: &str) -> Result<RPoly, String> {
    parse_poly(text).map_err(err)
}

fn lines<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| format!("{x}\n")).collect()
}

fn strings<T: std::fmt::Display>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn poly_cmd(c: &PolyCmd) -> Res {
    match c {
        PolyCmd::Enumerate { arity } => {
            let all = enumerate_r(*arity).map_err(err)?;
            Ok(Outcome::ok(
                lines(&all),
                json!({ "arity": arity, "count": all.len(), "polys": strings(&all) }),
            ))
        }
        PolyCmd::Member { poly } => {
            let p = parse_intpoly(poly).map_err(err)?;
            let canonical = p.to_string();
            match p.violation() {
                None => Ok(Outcome::ok(
                    format!("member {canonical}\n"),
                    json!({ "poly": canonical, "member": true }),
                )),
                Some(v) => Ok(Outcome {
                    passed: false,
                    text: format!("not in R: {v}\n"),
                    json: json!({ "poly": canonical, "member": false, "violation": v.to_string() }),
                }),
            }
        }
        PolyCmd::Compose { g, args } => {
            let g = poly(g)?;
            let fs = args.iter().map(|a| poly(a)).collect::<Result<Vec<_>, _>>()?;
            let c = compose(&g, &fs).map_err(err)?;
            Ok(Outcome::ok(format!("{c}\n"), json!({ "composite": c.to_string() })))
        }
        PolyCmd::Type { poly: p } => {
            let f = poly(p)?;
            let t = f.type_of();
            Ok(Outcome::ok(format!("{t}\n"), json!({ "poly": f.to_string(), "type": t.to_string() })))
        }
        PolyCmd::Special { poly: p } => {
            let f = poly(p)?;
            let m = special_rep_morphism(&f);
            Ok(Outcome::ok(
                format!("special {}\nmorphism {m}\n", m.source()),
                json!({ "special": m.source().to_string(), "morphism": m.to_string() }),
            ))
        }
    }
}

fn cat_cmd(c: &CatCmd) -> Res {
    match c {
        CatCmd::Hom { source, target, class } => {
            let (f, g) = (poly(source)?, poly(target)?);
            let class = match class {
                ClassArg::All => HomClass::All,
                ClassArg::Effective => HomClass::Effective,
                ClassArg::Nondegenerate => HomClass::NonDegenerate,
            };
            let homs = enumerate_hom(&f, &g, class).map_err(err)?;
            let maps: Vec<String> = homs.iter().map(|m| m.map().to_string()).collect();
            Ok(Outcome::ok(
                lines(&maps),
                json!({ "source": f.to_string(), "target": g.to_string(), "count": maps.len(), "maps": maps }),
            ))
        }
        CatCmd::Decompose { morphism } => {
            let m = parse_morphism(morphism).map_err(err)?;
            let (p, sigma) = m.canonical_decompose();
            Ok(Outcome::ok(
                format!("singular {sigma}\neffective {p}\n"),
                json!({ "morphism": m.to_string(), "singular": sigma.to_string(), "effective": p.to_string() }),
            ))
        }
        CatCmd::Components { arity } => {
            let comps = connected_components(*arity).map_err(err)?;
            let mut text = String::new();
            let mut out = Vec::new();
            for c in &comps {
                let t = c.members.first().map(|f| f.type_of().to_string()).unwrap_or_default();
                text.push_str(&format!(
                    "type {t}: special {}; {} members\n",
                    strings(&c.specials).join(", "),
                    c.members.len()
                ));
                out.push(json!({ "type": t, "specials": strings(&c.specials), "members": strings(&c.members) }));
            }
            Ok(Outcome::ok(text, json!({ "arity": arity, "components": out })))
        }
        CatCmd::Filtration { poly: p, level } => {
            let f = poly(p)?;
            let objs = filtration(&f, *level).map_err(err)?;
            Ok(Outcome::ok(
                lines(&objs),
                json!({ "special": f.to_string(), "level": level, "objects": strings(&objs) }),
            ))
        }
    }
}

fn report_json(r: &Report) -> Value {
    let sections: Vec<Value> = r
        .sections
        .iter()
        .map(|s| {
            json!({
                "name": s.name,
                "status": match s.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::NotApplicable => "n/a",
                },
                "instances": s.instances,
                "violation": s.violation,
            })
        })
        .collect();
    json!({ "title": r.title, "sections": sections })
}

fn report_outcome(r: Result<Report, OperadError>) -> Res {
    match r {
        Ok(r) => Ok(Outcome {
            passed: r.passed(),
            text: format!("{r}\n"),
            json: report_json(&r),
        }),
        Err(e @ OperadError::Budget(_)) => Ok(Outcome {
            passed: false,
            text: format!("{e}\n"),
            json: json!({ "error": e.to_string() }),
        }),
        Err(e) => Err(e.to_string()),
    }
}

/// Something to run against a ring operad chosen at run time.
trait OperadTask {
    fn run<O: RingOperad>(self, op: &O) -> Res;
}

fn with_operad<T: OperadTask>(src: &OperadSource, task: T) -> Res {
    if let Some(path) = &src.fixture {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let op = TableOperad::parse(&text).map_err(err)?;
        return task.run(&op);
    }
    if let Some(path) = &src.pair {
        let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        let pair = TablePair::parse(&text).map_err(err)?;
        return task.run(&build_rcg(pair));
    }
    match src.builtin {
        None => Err("one of --builtin, --fixture or --pair is required".into()),
        Some(Builtin::Strict) => task.run(&strict_operad()),
        Some(Builtin::Sset) => task.run(&sset_operad(Mode::Sym)),
        Some(Builtin::Pset) => task.run(&sset_operad(Mode::Biperm)),
        Some(Builtin::RcgTerminal) => task.run(&build_rcg(TerminalPair(TerminalOperad))),
        Some(Builtin::RcgSigma) => task.run(&build_rcg(TerminalPair(SigmaOperad))),
    }
}

fn config(src: &OperadSource) -> CheckConfig {
    let mut cfg = CheckConfig::new(src.cap);
    if let Some(b) = src.budget {
        cfg.budget = b;
    }
    cfg
}

struct Axioms(CheckConfig);
impl OperadTask for Axioms {
    fn run<O: RingOperad>(self, op: &O) -> Res {
        report_outcome(check_axioms(op, &self.0))
    }
}

struct Einfty(CheckConfig);
impl OperadTask for Einfty {
    fn run<O: RingOperad>(self, op: &O) -> Res {
        report_outcome(check_einfty_set(op, &self.0))
    }
}

struct Algebra(CheckConfig, AlgebraArg);
impl OperadTask for Algebra {
    fn run<O: RingOperad>(self, op: &O) -> Res {
        match self.1 {
            AlgebraArg::Boolean => report_outcome(validate_algebra(op, &RigAlgebra(BooleanRig), &self.0)),
            AlgebraArg::Matrix => report_outcome(validate_algebra(op, &RigAlgebra(MatrixRig), &self.0)),
            AlgebraArg::PairMatrix => Err("--algebra pair-matrix needs --builtin rcg-sigma".into()),
        }
    }
}

fn check_cmd(c: &CheckCmd) -> Res {
    match c {
        CheckCmd::Axioms(src) => with_operad(src, Axioms(config(src))),
        CheckCmd::Einfty(src) => with_operad(src, Einfty(config(src))),
        CheckCmd::Algebra { source, algebra } => {
            if let (AlgebraArg::PairMatrix, Some(Builtin::RcgSigma)) = (algebra, source.builtin) {
                let pair = TerminalPair(SigmaOperad);
                let alg = FromPair(&pair, RigPairAlgebra(MatrixRig));
                return report_outcome(validate_algebra(&build_rcg(pair), &alg, &config(source)));
            }
            with_operad(source, Algebra(config(source), *algebra))
        }
    }
}

/// Something to run against an operad pair chosen at run time.
trait PairTask {
    fn run<P: OperadPair + Clone>(self, pair: P) -> Res;
}

fn with_pair<T: PairTask>(src: &PairSource, task: T) -> Res {
    match src.pair.as_str() {
        "terminal,terminal" => task.run(TerminalPair(TerminalOperad)),
        "terminal,sigma" => task.run(TerminalPair(SigmaOperad)),
        path => {
            let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
            task.run(TablePair::parse(&text).map_err(err)?)
        }
    }
}

struct ComponentTask(RPoly);
impl PairTask for ComponentTask {
    fn run<P: OperadPair + Clone>(self, pair: P) -> Res {
        let rcg = build_rcg(pair);
        let (l, sizes) = component_signature(&self.0);
        let mut factors = vec![format!("C({l})")];
        factors.extend(sizes.iter().map(|k| format!("G({k})")));
        let sig = factors.join(" x ");
        let elems: Vec<String> = rcg.component(&self.0).map_err(err)?.iter().map(|x| rcg.render(x)).collect();
        let listing: Vec<String> = self.0.monomials().iter().map(ToString::to_string).collect();
        Ok(Outcome::ok(
            format!(
                "monomials {}\ncomponent {sig}\n{} elements\n{}",
                listing.join(" < "),
                elems.len(),
                lines(&elems)
            ),
            json!({ "poly": self.0.to_string(), "monomials": listing, "signature": sig, "elements": elems }),
        ))
    }
}

struct ActTask(ringop::category::RMorphism);
impl PairTask for ActTask {
    fn run<P: OperadPair + Clone>(self, pair: P) -> Res {
        let rcg = build_rcg(pair);
        let lm = self.0.lambda_maps();
        let mut text = format!("morphism {}\n", self.0);
        let mut maps = Vec::new();
        for (t, (&p, r)) in lm.prime.iter().zip(&lm.restrictions).enumerate() {
            let target = &self.0.target().monomials()[t];
            let source = &self.0.source().monomials()[p];
            let images: Vec<String> = r.iter().map(|q| source.support()[*q].to_string()).collect();
            let line = format!("{source} <- {target}: {}", images.join(","));
            text.push_str(&format!("restrict {line}\n"));
            maps.push(line);
        }
        let mut table = Vec::new();
        for x in rcg.component(self.0.source()).map_err(err)? {
            let y = rcg.act(&self.0, &x).map_err(err)?;
            let row = format!("{} -> {}", rcg.render(&x), rcg.render(&y));
            text.push_str(&row);
            text.push('\n');
            table.push(row);
        }
        Ok(Outcome::ok(
            text,
            json!({ "morphism": self.0.to_string(), "restrictions": maps, "action": table }),
        ))
    }
}

fn rcg_cmd(c: &RcgCmd) -> Res {
    match c {
        RcgCmd::Component { poly: p, pair } => with_pair(pair, ComponentTask(poly(p)?)),
        RcgCmd::Act { morphism, pair } => with_pair(pair, ActTask(parse_morphism(morphism).map_err(err)?)),
        RcgCmd::Compose { g, args, pair: _ } => {
            let g = poly(g)?;
            let fs = args.iter().map(|a| poly(a)).collect::<Result<Vec<_>, _>>()?;
            let sig = composition_signature(&g, &fs).map_err(err)?;
            let g_layer: Vec<Value> = sig.g_layer.iter().map(|(i, o)| json!({ "inputs": i, "output": o })).collect();
            Ok(Outcome::ok(
                sig.to_string(),
                json!({
                    "composite": sig.composite.to_string(),
                    "c_layer": { "inputs": sig.c_inputs, "output": sig.c_output },
                    "g_layer": g_layer,
                }),
            ))
        }
    }
}

fn term_cmd(c: &TermCmd) -> Res {
    match c {
        TermCmd::Normalize { term, mode } => {
            let t = parse_term(term).map_err(err)?;
            let n = match mode {
                ModeArg::Sym => reduce_a(&t),
                ModeArg::Biperm => normalize_biperm(&t),
            };
            Ok(Outcome::ok(format!("{n}\n"), json!({ "term": t.to_string(), "normal": n.to_string() })))
        }
        TermCmd::Project { term, arity } => {
            let t = parse_term(term).map_err(err)?;
            let n = arity.unwrap_or_else(|| t.max_var());
            if t.max_var() > n {
                return Err(format!("x{} exceeds the arity {n}", t.max_var()));
            }
            let p = project(&t, n);
            let member = p.is_member();
            Ok(Outcome::ok(
                format!("{p}\n"),
                json!({ "term": t.to_string(), "projection": p.to_string(), "member": member }),
            ))
        }
        TermCmd::Fiber { poly: p, mode, bound } => {
            let f = poly(p)?;
            let b = bound.unwrap_or_else(|| default_bound(&f));
            let fiber = enumerate_fiber(&f, (*mode).into(), b);
            let head = format!(
                "{} terms with at most {b} leaves; {}\n",
                fiber.terms.len(),
                if fiber.stable { "stable" } else { "not stable" }
            );
            Ok(Outcome::ok(
                head + &lines(&fiber.terms),
                json!({ "poly": f.to_string(), "bound": b, "stable": fiber.stable, "terms": strings(&fiber.terms) }),
            ))
        }
        TermCmd::Connect { poly: p, bound } => {
            let f = poly(p)?;
            let b = bound.unwrap_or_else(|| default_bound(&f));
            let c = connectivity_check(&f, b).map_err(err)?;
            let ok = c.connected();
            Ok(Outcome {
                passed: ok,
                text: format!(
                    "terminal {}\n{} vertices, {} edges, {} unreached\n{}",
                    c.terminal,
                    c.vertices,
                    c.edges,
                    c.unreached.len(),
                    if ok { "connected\n" } else { "NOT connected\n" }
                ),
                json: json!({
                    "poly": f.to_string(),
                    "terminal": c.terminal.to_string(),
                    "vertices": c.vertices,
                    "edges": c.edges,
                    "unreached": strings(&c.unreached),
                }),
            })
        }
    }
}

fn ff(text: &str) -> Result<FFMorphism, String> {
    parse_ff_morphism(text).map_err(err)
}

fn assignment_lines(m: &FFMorphism) -> Result<(String, Vec<Value>), String> {
    let family = m.polynomial_assignment().map_err(err)?;
    let mut text = String::new();
    let mut out = Vec::new();
    for ((h, j), p) in m.target().slots().into_iter().zip(&family) {
        text.push_str(&format!("f[{h},{j}] = {p}\n"));
        out.push(json!({ "h": h, "j": j, "poly": p.to_string() }));
    }
    Ok((text, out))
}

fn strict_family(m: &FFMorphism) -> Result<Family<()>, String> {
    Ok(m.polynomial_assignment()
        .map_err(err)?
        .iter()
        .map(|p| p.as_poly().map(|_| ()))
        .collect())
}

fn nu_with<A: DiscreteAlgebra<ringop::operad::StrictOperad>>(alg: &A, m: &FFMorphism, input: &str) -> Res {
    let xs: Vec<usize> = if input.trim().is_empty() {
        Vec::new()
    } else {
        input
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| format!("invalid input point '{}'", s.trim())))
            .collect::<Result<_, _>>()?
    };
    if let Some(&bad) = xs.iter().find(|&&x| x >= alg.size()) {
        return Err(format!("input point {bad} is outside a carrier of size {}", alg.size()));
    }
    let ys = nu_evaluate(alg, m, &strict_family(m)?, &xs).map_err(err)?;
    let show = |v: &[usize]| v.iter().map(|&a| alg.render(a)).collect::<Vec<_>>().join(",");
    Ok(Outcome::ok(
        format!("({}) -> ({})\n", show(&xs), show(&ys)),
        json!({ "morphism": m.to_string(), "input": xs, "output": ys }),
    ))
}

fn fwrf_cmd(c: &FwrfCmd) -> Res {
    match c {
        FwrfCmd::Assign { morphism } => {
            let m = ff(morphism)?;
            let (text, out) = assignment_lines(&m)?;
            Ok(Outcome::ok(text, json!({ "morphism": m.to_string(), "assignment": out })))
        }
        FwrfCmd::Compose { outer, inner } => {
            let (o, i) = (ff(outer)?, ff(inner)?);
            let c = ff_compose(&o, &i).map_err(err)?;
            let (text, out) = assignment_lines(&c)?;
            Ok(Outcome::ok(
                format!("{c}\n{text}"),
                json!({ "composite": c.to_string(), "assignment": out }),
            ))
        }
        FwrfCmd::Verify { outer, inner, sample } => {
            let (o, i) = match (outer, inner, sample) {
                (_, _, true) => (ff(SAMPLE_OUTER)?, ff(SAMPLE_INNER)?),
                (Some(o), Some(i), false) => (ff(o)?, ff(i)?),
                _ => return Err("give OUTER and INNER, or --sample".into()),
            };
            let report = verify_assignment_functoriality(&o, &i).map_err(err)?;
            let composite = ff_compose(&o, &i).map_err(err)?;
            let (assign_text, assign) = assignment_lines(&composite)?;
            let mut text = format!("composite {composite}\n{assign_text}");
            let mut folds = Vec::new();
            for idx in 0..o.target().slots().len() {
                if let Some(fd) = fold(&o, &i, idx, Layout::Padded).map_err(err)? {
                    text.push_str(&format!("unfolded {}\npsi {}\n", fd.composite, fd.psi));
                    folds.push(json!({ "unfolded": fd.composite.to_string(), "psi": fd.psi.to_string() }));
                }
            }
            text.push_str(&format!("{report}\n"));
            Ok(Outcome {
                passed: report.passed(),
                text,
                json: json!({
                    "composite": composite.to_string(),
                    "assignment": assign,
                    "folds": folds,
                    "report": report_json(&report),
                }),
            })
        }
        FwrfCmd::Nu { morphism, algebra, input } => {
            let m = ff(morphism)?;
            match algebra {
                AlgebraArg::Boolean => nu_with(&RigAlgebra(BooleanRig), &m, input),
                AlgebraArg::Matrix => nu_with(&RigAlgebra(MatrixRig), &m, input),
                AlgebraArg::PairMatrix => Err("fwrf nu evaluates over the strict operad; use boolean or matrix".into()),
            }
        }
    }
}
