//! The acceptance suite. Runs every criterion, prints one line each, and exits
//! non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use ringop::category::{automorphisms, enumerate_hom, has_hom, special_rep_morphism, HomClass, RMorphism};
use ringop::map::{ExtMap, Point};
use ringop::operad::{check_axioms, check_einfty_set, strict_operad, CheckConfig, Report, RingOperad, Status};
use ringop::pair::{build_rcg, component_signature, composition_signature, SigmaOperad, TerminalOperad, TerminalPair};
use ringop::poly::{compose, enumerate_r, special_of_type, IntPoly, Monomial, RPoly, TypeSignature};
use ringop::term::{
    biperm_rewrites, connectivity_check, default_bound, enumerate_fiber, normalize_biperm, plus, project, reduce_a,
    section_s, sset_operad, terminal_representative, times, Mode, Term,
};
use ringop::text::{parse_poly, parse_term};
use ringop::wreath::{ff_compose, fold, parse_ff_morphism, Layout};
use ringop_cli::{SAMPLE_INNER, SAMPLE_OUTER};

const ENUMERATE_LIMIT: Duration = Duration::from_secs(10);
const CLOSURE_LIMIT: Duration = Duration::from_secs(60);
const SPECIALS_LIMIT: Duration = Duration::from_secs(120);
const RANDOM_TERMS: usize = 10_000;
const EXHAUSTIVE_LEAVES: usize = 6;
const CONFLUENCE_LEAVES: usize = 5;
const CAP: usize = 2;
const SEED: u64 = 0x5eed_0001;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<Duration, String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))?;
    Ok(t)
}

fn p(arity: usize, supports: &[&[usize]]) -> RPoly {
    RPoly::from_supports(arity, supports).unwrap()
}

fn supports(f: &RPoly) -> Vec<Vec<usize>> {
    f.monomials().iter().map(|m| m.support().to_vec()).collect()
}

fn cardinality() -> Outcome {
    let start = Instant::now();
    let mut counts = Vec::new();
    for n in 0..=4 {
        let out = ringop_cli::run(["ringop", "poly", "enumerate", "--arity", &n.to_string()]);
        ensure(out.status == 0, || format!("exit {} for n = {n}", out.status))?;
        counts.push(out.stdout.lines().count());
    }
    let expected: Vec<usize> = (0..=4u32).map(|n| 1usize << ((1usize << n) - 1)).collect();
    ensure(counts == [1, 2, 8, 128, 32768] && counts == expected, || format!("counts {counts:?}"))?;
    let t = within(start, ENUMERATE_LIMIT)?;
    Ok(format!("counts {counts:?} in {t:.2?}"))
}

/// The composite as an integer polynomial, multiplied out monomial by monomial.
fn expand(g: &RPoly, args: &[RPoly]) -> IntPoly {
    let mut offsets = vec![0];
    for a in args {
        offsets.push(offsets.last().unwrap() + a.arity());
    }
    let n = *offsets.last().unwrap();
    let shifted: Vec<IntPoly> = args
        .iter()
        .zip(&offsets)
        .map(|(a, off)| {
            let mut q = IntPoly::zero(n);
            for m in a.monomials() {
                q.add_term(m.support().iter().map(|i| i + off).collect(), 1);
            }
            q
        })
        .collect();
    let mut out = IntPoly::zero(n);
    for m in g.monomials() {
        let mut term = IntPoly::constant(n, 1);
        for &i in m.support() {
            term = term.mul(&shifted[i - 1]);
        }
        out = out.add(&term);
    }
    out
}

fn closure() -> Outcome {
    let start = Instant::now();
    let args: Vec<RPoly> = (0..=2).flat_map(|n| enumerate_r(n).unwrap()).collect();
    let mut checked = 0;
    for g in enumerate_r(2).unwrap() {
        for a in &args {
            for b in &args {
                let pair = [a.clone(), b.clone()];
                let product = expand(&g, &pair);
                ensure(product.is_member(), || format!("{g} ({a}, {b}) gives {product}"))?;
                let c = compose(&g, &pair).map_err(|e| e.to_string())?;
                ensure(c.to_intpoly() == product, || format!("compose disagrees on {g} ({a}, {b})"))?;
                checked += 1;
            }
        }
    }
    let t = within(start, CLOSURE_LIMIT)?;
    Ok(format!("{checked} composites in R in {t:.2?}"))
}

fn worked_pair_example() -> Outcome {
    // Part (1).
    let f = p(5, &[&[1, 2, 3], &[1, 4], &[5]]);
    let g = p(2, &[&[1, 2], &[1]]);
    ensure(supports(&f) == [vec![5], vec![1, 4], vec![1, 2, 3]], || format!("Λ_f {:?}", supports(&f)))?;
    ensure(supports(&g) == [vec![1], vec![1, 2]], || format!("Λ_g {:?}", supports(&g)))?;
    let phi = ExtMap::new(2, vec![Point::E, Point::At(1), Point::At(2), Point::At(1), Point::Zero]).unwrap();
    let m = RMorphism::validate(&f, &phi, &g).map_err(|e| e.to_string())?;
    let lm = m.lambda_maps();
    let prime: Vec<Vec<usize>> = lm.prime.iter().map(|&i| f.monomials()[i].support().to_vec()).collect();
    ensure(prime == [vec![1, 4], vec![1, 2, 3]], || format!("φ′ {prime:?}"))?;
    let restricted: Vec<Vec<usize>> = lm
        .restrictions
        .iter()
        .zip(&lm.prime)
        .map(|(r, &i)| r.iter().map(|&q| f.monomials()[i].support()[q]).collect())
        .collect();
    ensure(restricted == [vec![4], vec![2, 3]], || format!("φ_J {restricted:?}"))?;

    // Factors listed in the order the monomials are written.
    let written = |h: &RPoly, order: &[&[usize]]| -> String {
        let (l, sizes) = component_signature(h);
        let mut parts = vec![format!("C({l})")];
        for s in order {
            let i = h.position(&Monomial::new(s.to_vec()).unwrap()).unwrap();
            parts.push(format!("G({})", sizes[i]));
        }
        parts.join(" x ")
    };
    let sig_f = written(&f, &[&[1, 2, 3], &[1, 4], &[5]]);
    let sig_g = written(&g, &[&[1, 2], &[1]]);
    ensure(sig_f == "C(3) x G(3) x G(2) x G(1)", || format!("R(f) = {sig_f}"))?;
    ensure(sig_g == "C(2) x G(2) x G(1)", || format!("R(g) = {sig_g}"))?;
    let rcg = build_rcg(TerminalPair(SigmaOperad));
    let size = rcg.component(&f).map_err(|e| e.to_string())?.len();
    ensure(size == 6 * 2, || format!("|R(f)| = {size}"))?;

    // Part (2).
    let f2 = p(2, &[&[1], &[1, 2]]);
    let g2 = p(2, &[&[1, 2]]);
    let sig = composition_signature(&f2, &[f2.clone(), g2]).map_err(|e| e.to_string())?;
    let composite = sig.composite.to_string();
    ensure(composite == "R(4): x1 + x1*x3*x4 + x1*x2 + x1*x2*x3*x4", || composite.clone())?;
    let (l, sizes) = component_signature(&sig.composite);
    ensure((l, sizes.as_slice()) == (4, &[1, 3, 2, 4][..]), || format!("R(composite) {l} {sizes:?}"))?;
    let expected_g: Vec<(Vec<usize>, usize)> =
        vec![(vec![1, 1], 1), (vec![2, 1, 2], 3), (vec![1, 2], 2), (vec![2, 2, 2], 4)];
    ensure(sig.g_layer == expected_g, || format!("G layer {:?}", sig.g_layer))?;
    ensure(sig.c_inputs == [2, 2, 2] && sig.c_output == 4, || {
        format!("C layer {:?} -> {}", sig.c_inputs, sig.c_output)
    })?;
    Ok(format!("{sig_f}; {composite}"))
}

fn worked_wreath_example() -> Outcome {
    let outer = parse_ff_morphism(SAMPLE_OUTER).map_err(|e| e.to_string())?;
    let inner = parse_ff_morphism(SAMPLE_INNER).map_err(|e| e.to_string())?;
    let show = |m: &ringop::wreath::FFMorphism| -> Result<Vec<String>, String> {
        Ok(m.polynomial_assignment().map_err(|e| e.to_string())?.iter().map(ToString::to_string).collect())
    };
    let assigned: Vec<String> = show(&outer)?.into_iter().chain(show(&inner)?).collect();
    let expected = ["R(3): x2*x3 + x1*x3", "R(4): x2*x4 + x1*x3", "R(4): x1*x4", "1"];
    ensure(assigned == expected, || format!("assigned {assigned:?}"))?;
    let c = ff_compose(&outer, &inner).map_err(|e| e.to_string())?;
    let composite = show(&c)?;
    ensure(composite == ["R(4): x2*x4 + x1*x4 + x1*x3"], || format!("composite {composite:?}"))?;
    let fd = fold(&outer, &inner, 0, Layout::Padded).map_err(|e| e.to_string())?.ok_or("no fold")?;
    ensure(fd.psi.source() == 13 && fd.psi.target() == 4, || format!("ψ {}", fd.psi))?;
    for k in 1..=12 {
        let want = Point::At((k - 1) % 4 + 1);
        ensure(fd.psi.image(k) == want, || format!("ψ({k}) = {:?}", fd.psi.image(k)))?;
    }
    ensure(fd.psi.image(13) == Point::E, || format!("ψ(13) = {:?}", fd.psi.image(13)))?;
    let folded = fd.folded().map_err(|e| e.to_string())?;
    ensure(folded.as_poly() == Some(&p(4, &[&[1, 3], &[2, 4], &[1, 4]])), || format!("folded {folded}"))?;
    Ok(format!("{} ; ψ = {}", composite[0], fd.psi))
}

/// Every special of type `(l; k_1 <= .. <= k_l)` with sizes at most `max`.
fn specials(l: usize, max: usize) -> Vec<RPoly> {
    fn go(l: usize, lo: usize, max: usize, acc: &mut Vec<usize>, out: &mut Vec<RPoly>) {
        if acc.len() == l {
            out.push(special_of_type(&TypeSignature::new(acc.clone()).unwrap()).unwrap());
            return;
        }
        for k in lo..=max {
            acc.push(k);
            go(l, k, max, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(l, 1, max, &mut Vec::new(), &mut out);
    out
}

fn special_objects() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for n in 0..=3 {
        for f in enumerate_r(n).unwrap() {
            let l = f.len();
            let candidates: Vec<RPoly> = (l.saturating_sub(1)..=l + 1).flat_map(|k| specials(k, 3)).collect();
            let mut hits = Vec::new();
            for s in &candidates {
                if has_hom(s, &f, HomClass::Effective).map_err(|e| e.to_string())? {
                    hits.push(s.clone());
                }
            }
            ensure(hits.len() == 1, || format!("{f}: {} specials map to it", hits.len()))?;
            let rep = special_rep_morphism(&f);
            let again = RMorphism::validate(rep.source(), rep.map(), rep.target()).map_err(|e| e.to_string())?;
            ensure(again.is_effective() && rep.target() == &f && rep.source() == &hits[0], || {
                format!("{f}: representative {rep}")
            })?;
            count += 1;
        }
    }
    let t = within(start, SPECIALS_LIMIT)?;
    Ok(format!("{count} objects, one special each, in {t:.2?}"))
}

fn surjectivity() -> Outcome {
    let objs: Vec<RPoly> = (0..=3).flat_map(|n| enumerate_r(n).unwrap()).collect();
    let mut count = 0;
    for f in objs.iter().filter(|f| f.is_nondegenerate()) {
        for g in &objs {
            let maps: Vec<ExtMap> = ExtMap::all_effective(f.arity(), g.arity())
                .filter(|phi| RMorphism::validate(f, phi, g).is_ok())
                .collect();
            let fast: Vec<ExtMap> = enumerate_hom(f, g, HomClass::Effective)
                .map_err(|e| e.to_string())?
                .iter()
                .map(|m| m.map().clone())
                .collect();
            ensure(maps == fast, || format!("effective homs {f} -> {g} disagree"))?;
            for phi in maps {
                ensure(g.is_nondegenerate() == phi.is_surjective(), || format!("{f} |{phi}| {g}"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} effective morphisms, no exceptions"))
}

fn decomposition() -> Outcome {
    let mut count = 0;
    for m in 0..=4 {
        for n in 0..=4 {
            for phi in ExtMap::all(m, n) {
                let (sigma, q) = phi.canonical_decompose();
                ensure(sigma.is_singular() && q.is_effective(), || format!("{phi}: factors {sigma}, {q}"))?;
                ensure(q.after(&sigma).ok().as_ref() == Some(&phi), || format!("{phi}: product differs"))?;
                let mut found = 0;
                for k in 0..=m {
                    for s in ExtMap::all(m, k).filter(ExtMap::is_singular) {
                        for e in ExtMap::all_effective(k, n) {
                            if e.after(&s).ok().as_ref() == Some(&phi) {
                                found += 1;
                            }
                        }
                    }
                }
                ensure(found == 1, || format!("{phi}: {found} factorisations"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} maps, each with exactly one factorisation"))
}

fn automorphism_lemma() -> Outcome {
    let targets: Vec<RPoly> = (0..=3).flat_map(|n| enumerate_r(n).unwrap()).collect();
    let mut pairs = 0;
    for l in 0..=3 {
        for f in specials(l, 3) {
            let auts = automorphisms(&f).map_err(|e| e.to_string())?;
            for g in &targets {
                let homs = enumerate_hom(&f, g, HomClass::Effective).map_err(|e| e.to_string())?;
                for a in &homs {
                    for b in &homs {
                        let related = auts.iter().any(|s| a.after(s).ok().as_ref() == Some(b));
                        ensure(related, || format!("{} and {} into {g}", a.map(), b.map()))?;
                        pairs += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} pairs related by automorphisms"))
}

fn sections_pattern(r: &Report) -> Vec<(String, Status)> {
    r.sections.iter().map(|s| (s.name[..3].to_string(), s.status)).collect()
}

fn einfty() -> Outcome {
    let cfg = CheckConfig::new(CAP);
    for mode in [Mode::Sym, Mode::Biperm] {
        let r = check_einfty_set(&sset_operad(mode), &cfg).map_err(|e| e.to_string())?;
        let failed: Vec<&str> = r.sections.iter().filter(|s| s.failed()).map(|s| s.name.as_str()).collect();
        ensure(failed.is_empty(), || format!("{mode:?} fails {failed:?}"))?;
        for k in ["(2)", "(3)", "(4)", "(5)"] {
            let s = r.sections.iter().find(|s| s.name.starts_with(k)).ok_or(format!("{k} missing"))?;
            ensure(s.status == Status::Pass && s.instances > 0, || format!("{mode:?} {k} not exercised"))?;
        }
    }
    let r = check_einfty_set(&strict_operad(), &cfg).map_err(|e| e.to_string())?;
    let pattern = sections_pattern(&r);
    let want = [
        ("(1)", Status::NotApplicable),
        ("(2)", Status::Pass),
        ("(3)", Status::Pass),
        ("(4)", Status::Fail),
        ("(5)", Status::Pass),
    ];
    let want: Vec<(String, Status)> = want.iter().map(|(a, b)| (a.to_string(), *b)).collect();
    ensure(pattern == want, || format!("strict pattern {pattern:?}"))?;
    let four = r.section("(4) effective maps act freely").ok_or("(4) missing")?;
    let v = four.violation.clone().unwrap_or_default();
    ensure(
        v.contains("f = R(2): x2 + x1") && v.contains("{1->1, 2->2}") && v.contains("{1->2, 2->1}"),
        || format!("counterexample {v}"),
    )?;
    Ok("symmetric and bipermutative fibers pass (2)-(5); strict fails (4) at x1 + x2, id vs swap".into())
}

fn axioms() -> Outcome {
    let cfg = CheckConfig::new(CAP);
    let reports = [
        check_axioms(&strict_operad(), &cfg),
        check_axioms(&sset_operad(Mode::Sym), &cfg),
        check_axioms(&sset_operad(Mode::Biperm), &cfg),
        check_axioms(&build_rcg(TerminalPair(TerminalOperad)), &cfg),
        check_axioms(&build_rcg(TerminalPair(SigmaOperad)), &cfg),
    ];
    for r in reports {
        let r = r.map_err(|e| e.to_string())?;
        ensure(r.passed(), || r.to_string())?;
    }
    let strict = strict_operad();
    let rcg = build_rcg(TerminalPair(TerminalOperad));
    let objs: Vec<RPoly> = (0..=CAP).flat_map(|n| enumerate_r(n).unwrap()).collect();
    for f in &objs {
        let a = strict.component(f).map_err(|e| e.to_string())?.len();
        let b = rcg.component(f).map_err(|e| e.to_string())?.len();
        ensure(a == 1 && b == 1, || format!("{f}: {a} vs {b} elements"))?;
        for g in &objs {
            for m in enumerate_hom(f, g, HomClass::All).map_err(|e| e.to_string())? {
                let x = rcg.component(f).map_err(|e| e.to_string())?.remove(0);
                rcg.act(&m, &x).map_err(|e| format!("{m}: {e}"))?;
            }
        }
    }
    for g in enumerate_r(2).unwrap() {
        for a in &objs {
            for b in &objs {
                let x = rcg.component(&g).map_err(|e| e.to_string())?.remove(0);
                let ya = rcg.component(a).map_err(|e| e.to_string())?.remove(0);
                let yb = rcg.component(b).map_err(|e| e.to_string())?.remove(0);
                rcg.gamma(&g, &x, &[(a, &ya), (b, &yb)]).map_err(|e| e.to_string())?;
                strict.gamma(&g, &(), &[(a, &()), (b, &())]).map_err(|e| e.to_string())?;
            }
        }
    }
    Ok(format!("five operads pass at cap {CAP}; terminal pair has singleton components like strict"))
}

/// Every binary tree with `k` leaves and labelled nodes; leaves are placeholders.
fn shapes(k: usize) -> Vec<Term> {
    if k == 1 {
        return vec![Term::Var(0)];
    }
    let mut out = Vec::new();
    for left in 1..k {
        for a in shapes(left) {
            for b in shapes(k - left) {
                out.push(plus(a.clone(), b.clone()));
                out.push(times(a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Leaf words over `0`, `1` and variables numbered in order of first appearance.
fn labellings(k: usize) -> Vec<Vec<Term>> {
    fn go(k: usize, used: usize, acc: &mut Vec<Term>, out: &mut Vec<Vec<Term>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for t in [Term::Zero, Term::One] {
            acc.push(t);
            go(k, used, acc, out);
            acc.pop();
        }
        for v in 1..=used + 1 {
            acc.push(Term::Var(v));
            go(k, used.max(v), acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(k, 0, &mut Vec::new(), &mut out);
    out
}

fn fill(shape: &Term, leaves: &mut impl Iterator<Item = Term>) -> Term {
    match shape {
        Term::Plus(a, b) => {
            let a = fill(a, leaves);
            plus(a, fill(b, leaves))
        }
        Term::Times(a, b) => {
            let a = fill(a, leaves);
            times(a, fill(b, leaves))
        }
        _ => leaves.next().unwrap(),
    }
}

/// Every term with at most `max` leaves, up to renaming of variables.
fn for_each_term(max: usize, mut visit: impl FnMut(&Term) -> Result<(), String>) -> Result<usize, String> {
    let mut count = 0;
    for k in 1..=max {
        let words = labellings(k);
        for s in shapes(k) {
            for w in &words {
                let t = fill(&s, &mut w.iter().cloned());
                visit(&t)?;
                count += 1;
            }
        }
    }
    Ok(count)
}

fn random_term(rng: &mut StdRng, leaves: usize, vars: usize) -> Term {
    if leaves == 1 {
        return match rng.gen_range(0..10) {
            0 => Term::Zero,
            1 | 2 => Term::One,
            _ => Term::Var(rng.gen_range(1..=vars)),
        };
    }
    let left = rng.gen_range(1..leaves);
    let a = random_term(rng, left, vars);
    let b = random_term(rng, leaves - left, vars);
    if rng.gen_bool(0.5) {
        plus(a, b)
    } else {
        times(a, b)
    }
}

fn random_terms() -> Vec<Term> {
    let mut rng = StdRng::seed_from_u64(SEED);
    (0..RANDOM_TERMS)
        .map(|_| {
            let leaves = rng.gen_range(1..=14);
            random_term(&mut rng, leaves, 5)
        })
        .collect()
}

fn rewriting_laws(t: &Term) -> Result<(), String> {
    let n = t.max_var();
    let r = reduce_a(t);
    ensure(r.is_canonical() && reduce_a(&r) == r, || format!("reduce_A not idempotent at {t}"))?;
    ensure(project(&r, n) == project(t, n), || format!("reduce_A changes projection of {t}"))?;
    let b = normalize_biperm(t);
    ensure(b.is_reduced() && normalize_biperm(&b) == b, || format!("normalize not idempotent at {t}"))?;
    ensure(project(&b, n) == project(t, n), || format!("normalize changes projection of {t}"))?;
    let s = section_s(&b).map_err(|e| e.to_string())?;
    ensure(normalize_biperm(&s) == b, || format!("ν∘s differs at {b}"))
}

fn confluent(t: &Term) -> Result<(), String> {
    let direct = normalize_biperm(t);
    for u in biperm_rewrites(t) {
        ensure(normalize_biperm(&u) == direct, || format!("{t} => {u} changes the normal form"))?;
    }
    Ok(())
}

fn rewriting() -> Outcome {
    let exhaustive = for_each_term(EXHAUSTIVE_LEAVES, rewriting_laws)?;
    let witnessed = for_each_term(CONFLUENCE_LEAVES, confluent)?;
    let random = random_terms();
    for t in &random {
        rewriting_laws(t)?;
        confluent(t)?;
    }
    Ok(format!(
        "{exhaustive} terms with <= {EXHAUSTIVE_LEAVES} leaves, {} random; confluence on {witnessed} + {} terms",
        random.len(),
        random.len()
    ))
}

fn connectivity() -> Outcome {
    let mut checked = 0;
    let mut unstable = Vec::new();
    for f in enumerate_r(2).unwrap() {
        let bound = default_bound(&f);
        if !enumerate_fiber(&f, Mode::Sym, bound).stable {
            unstable.push(f.to_string());
            continue;
        }
        let c = connectivity_check(&f, bound).map_err(|e| e.to_string())?;
        ensure(c.connected(), || format!("{f}: {} unreached", c.unreached.len()))?;
        ensure(c.terminal == terminal_representative(&f), || format!("{f}: terminal {}", c.terminal))?;
        checked += 1;
    }
    ensure(checked > 0, || "no stable fibers".into())?;
    let skipped = if unstable.is_empty() { String::new() } else { format!("; unstable: {}", unstable.join(", ")) };
    Ok(format!("{checked} of 8 fibers connected to the terminal term{skipped}"))
}

fn round_trip() -> Outcome {
    let mut polys = 0;
    for f in enumerate_r(2).unwrap() {
        let s = f.to_string();
        let back = parse_poly(&s).map_err(|e| e.to_string())?;
        ensure(back == f && back.to_string() == s, || format!("{s} reprints differently"))?;
        polys += 1;
    }
    let terms = random_terms();
    for t in &terms {
        let s = t.to_string();
        let back = parse_term(&s).map_err(|e| e.to_string())?;
        ensure(&back == t && back.to_string() == s, || format!("{s} reprints differently"))?;
    }
    let seen: BTreeSet<String> = terms.iter().map(ToString::to_string).collect();
    Ok(format!("{polys} polynomials, {} random terms ({} distinct)", terms.len(), seen.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("cardinality of R(n), n <= 4", cardinality),
        ("closure of R under composition", closure),
        ("pair ring operad worked example", worked_pair_example),
        ("wreath assignment worked example", worked_wreath_example),
        ("unique special object per component", special_objects),
        ("non-degenerate target iff surjective", surjectivity),
        ("canonical decomposition", decomposition),
        ("effective maps from specials differ by automorphisms", automorphism_lemma),
        ("set-level E-infinity pattern", einfty),
        ("ring operad axioms", axioms),
        ("term rewriting", rewriting),
        ("coherence connectivity", connectivity),
        ("parse/print round trip", round_trip),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let t = start.elapsed();
        match result {
            Ok(detail) => println!("[PASS] {:>2} {name}: {detail} ({t:.2?})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {:>2} {name}: {why} ({t:.2?})", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
