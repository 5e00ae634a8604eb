//! Exhaustive instantiation of the ring-operad diagrams within an arity cap.

use std::collections::HashMap;
use std::rc::Rc;

use super::{Budget, OperadError, Report, RingOperad, Section, DEFAULT_BUDGET};
use crate::category::RMorphism;
use crate::map::{ExtMap, Point};
use crate::poly::{compose, enumerate_r, push_forward, RPoly};

#[derive(Clone, Copy, Debug)]
pub struct CheckConfig {
    pub cap: usize,
    pub budget: u64,
    /// Skip every instance touching a polynomial with more monomials than this.
    pub max_monomials: Option<usize>,
}

impl CheckConfig {
    pub fn new(cap: usize) -> Self {
        CheckConfig {
            cap,
            budget: DEFAULT_BUDGET,
            max_monomials: None,
        }
    }
}

pub(crate) struct Ctx<'a, O: RingOperad> {
    pub op: &'a O,
    pub cap: usize,
    pub max_monomials: Option<usize>,
    pub budget: Budget,
    comps: HashMap<RPoly, Rc<Vec<O::Elem>>>,
}

impl<'a, O: RingOperad> Ctx<'a, O> {
    pub fn new(op: &'a O, cfg: &CheckConfig) -> Result<Self, OperadError> {
        if cfg.cap > 3 {
            return Err(OperadError::CapExceeded {
                arity: cfg.cap,
                cap: 3,
            });
        }
        let cap = op.cap().map_or(cfg.cap, |c| c.min(cfg.cap));
        Ok(Ctx {
            op,
            cap,
            max_monomials: cfg.max_monomials,
            budget: Budget::new(cfg.budget),
            comps: HashMap::new(),
        })
    }

    pub fn allowed(&self, f: &RPoly) -> bool {
        f.arity() <= self.cap && self.max_monomials.is_none_or(|k| f.len() <= k)
    }

    pub fn comp(&mut self, f: &RPoly) -> Result<Rc<Vec<O::Elem>>, OperadError> {
        if let Some(c) = self.comps.get(f) {
            return Ok(c.clone());
        }
        let c = Rc::new(self.op.component(f)?);
        self.comps.insert(f.clone(), c.clone());
        Ok(c)
    }

    pub fn objects(&self) -> Vec<RPoly> {
        (0..=self.cap)
            .flat_map(|n| enumerate_r(n).expect("cap is at most 3"))
            .filter(|f| self.allowed(f))
            .collect()
    }

    /// Every morphism between allowed objects, grouped by source.
    pub fn morphisms(&self, objects: &[RPoly]) -> HashMap<RPoly, Vec<RMorphism>> {
        let mut out: HashMap<RPoly, Vec<RMorphism>> = HashMap::new();
        for f in objects {
            let list = out.entry(f.clone()).or_default();
            for n in 0..=self.cap {
                for phi in ExtMap::all(f.arity(), n) {
                    if let Ok(g) = push_forward(&phi, f) {
                        if self.allowed(&g) {
                            list.push(RMorphism::validate(f, &phi, &g).expect("pushed forward"));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn render_all(&self, xs: &[&O::Elem]) -> String {
        let parts: Vec<String> = xs.iter().map(|x| self.op.render(x)).collect();
        format!("({})", parts.join(", "))
    }

    /// `γ` with argument polynomials and elements given side by side.
    pub fn gamma(
        &self,
        g: &RPoly,
        x: &O::Elem,
        fs: &[RPoly],
        xs: &[&O::Elem],
    ) -> Result<O::Elem, OperadError> {
        let args: Vec<(&RPoly, &O::Elem)> = fs.iter().zip(xs.iter().copied()).collect();
        self.op.gamma(g, x, &args)
    }
}

/// Every sequence of `count` objects whose arities sum to at most `max_total`.
pub(crate) fn tuples(objects: &[RPoly], count: usize, max_total: usize) -> Vec<Vec<RPoly>> {
    if count == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for f in objects.iter().filter(|f| f.arity() <= max_total) {
        for mut rest in tuples(objects, count - 1, max_total - f.arity()) {
            rest.insert(0, f.clone());
            out.push(rest);
        }
    }
    out
}

/// Calls `visit` on every choice of one element per list.
pub(crate) fn for_each_choice<E, F>(lists: &[Rc<Vec<E>>], mut visit: F) -> Result<(), OperadError>
where
    F: FnMut(&[&E]) -> Result<(), OperadError>,
{
    if lists.iter().any(|l| l.is_empty()) {
        return Ok(());
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        let pick: Vec<&E> = lists.iter().zip(&idx).map(|(l, &i)| &l[i]).collect();
        visit(&pick)?;
        let mut k = lists.len();
        loop {
            if k == 0 {
                return Ok(());
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < lists[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// Runs `body`, turning non-budget errors into a recorded failure.
fn guarded<F>(section: &mut Section, what: impl Fn() -> String, body: F) -> Result<(), OperadError>
where
    F: FnOnce() -> Result<(), OperadError>,
{
    match body() {
        Ok(()) => Ok(()),
        Err(OperadError::Budget(n)) => Err(OperadError::Budget(n)),
        Err(e) => {
            section.fail(|| format!("{}: {e}", what()));
            Ok(())
        }
    }
}

fn blocks(fs: &[RPoly]) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(fs.len());
    let mut start = 0;
    for f in fs {
        out.push((start, start + f.arity()));
        start += f.arity();
    }
    out
}

fn zero_components<O: RingOperad>(ctx: &mut Ctx<O>) -> Result<Section, OperadError> {
    let mut s = Section::new("zero components");
    for n in 0..=ctx.cap {
        ctx.budget.tick()?;
        s.instances += 1;
        let z = RPoly::zero(n);
        let size = ctx.comp(&z)?.len();
        if size != 1 {
            s.fail(|| format!("C({z}) has {size} elements"));
        }
    }
    Ok(s)
}

fn functoriality<O: RingOperad>(
    ctx: &mut Ctx<O>,
    objects: &[RPoly],
    morphisms: &HashMap<RPoly, Vec<RMorphism>>,
) -> Result<Section, OperadError> {
    let mut s = Section::new("functoriality");
    for f in objects {
        let cf = ctx.comp(f)?;
        for x in cf.iter() {
            ctx.budget.tick()?;
            s.instances += 1;
            let id = RMorphism::identity(f);
            let y = ctx.op.act(&id, x)?;
            if &y != x {
                s.fail(|| format!("identity of {f} moves {}", ctx.op.render(x)));
            }
        }
        for m1 in &morphisms[f] {
            let cg = ctx.comp(m1.target())?;
            for x in cf.iter() {
                ctx.budget.tick()?;
                s.instances += 1;
                let y = match ctx.op.act(m1, x) {
                    Ok(y) => y,
                    Err(OperadError::Budget(n)) => return Err(OperadError::Budget(n)),
                    Err(e) => {
                        s.fail(|| format!("action of {m1} on {}: {e}", ctx.op.render(x)));
                        continue;
                    }
                };
                if !cg.contains(&y) {
                    s.fail(|| {
                        format!(
                            "action of {m1} sends {} outside the target component",
                            ctx.op.render(x)
                        )
                    });
                    continue;
                }
                for m2 in &morphisms[m1.target()] {
                    ctx.budget.tick()?;
                    s.instances += 1;
                    let both = m2.after(m1)?;
                    let what = || format!("{m2} after {m1} on {}", ctx.op.render(x));
                    guarded(&mut s, what, || {
                        let lhs = ctx.op.act(&both, x)?;
                        let rhs = ctx.op.act(m2, &y)?;
                        if lhs != rhs {
                            return Err(OperadError::Invalid(format!(
                                "composite gives {}, stepwise gives {}",
                                ctx.op.render(&lhs),
                                ctx.op.render(&rhs)
                            )));
                        }
                        Ok(())
                    })?;
                }
            }
        }
    }
    Ok(s)
}

fn unit<O: RingOperad>(ctx: &mut Ctx<O>, objects: &[RPoly]) -> Result<Section, OperadError> {
    let mut s = Section::new("unit");
    let a1 = RPoly::unit();
    let eta = ctx.op.unit();
    if !ctx.comp(&a1)?.contains(&eta) {
        s.fail(|| "unit is not an element of C(a1)".to_string());
        return Ok(s);
    }
    for g in objects {
        let cg = ctx.comp(g)?;
        for x in cg.iter() {
            ctx.budget.tick()?;
            s.instances += 2;
            let units: Vec<RPoly> = vec![a1.clone(); g.arity()];
            let etas: Vec<&O::Elem> = vec![&eta; g.arity()];
            let what = || format!("g = {g}, x = {}", ctx.op.render(x));
            guarded(&mut s, what, || {
                let right = ctx.gamma(g, x, &units, &etas)?;
                if &right != x {
                    return Err(OperadError::Invalid(format!(
                        "γ(x; η, ..., η) = {}",
                        ctx.op.render(&right)
                    )));
                }
                let left = ctx.op.gamma(&a1, &eta, &[(g, x)])?;
                if &left != x {
                    return Err(OperadError::Invalid(format!(
                        "γ(η; x) = {}",
                        ctx.op.render(&left)
                    )));
                }
                Ok(())
            })?;
        }
    }
    Ok(s)
}

fn associativity<O: RingOperad>(
    ctx: &mut Ctx<O>,
    objects: &[RPoly],
) -> Result<Section, OperadError> {
    let mut s = Section::new("associativity");
    let cap = ctx.cap;
    for g in objects {
        for fs in tuples(objects, g.arity(), cap) {
            let big_g = compose(g, &fs)?;
            if !ctx.allowed(&big_g) {
                continue;
            }
            let fblocks = blocks(&fs);
            for hs in tuples(objects, big_g.arity(), cap) {
                let top = compose(&big_g, &hs)?;
                let inner: Vec<RPoly> = fs
                    .iter()
                    .zip(&fblocks)
                    .map(|(f, &(a, b))| compose(f, &hs[a..b]))
                    .collect::<Result<_, _>>()?;
                if !ctx.allowed(&top) || !inner.iter().all(|p| ctx.allowed(p)) {
                    continue;
                }
                let mut lists = vec![ctx.comp(g)?];
                for f in &fs {
                    lists.push(ctx.comp(f)?);
                }
                for h in &hs {
                    lists.push(ctx.comp(h)?);
                }
                let k = fs.len();
                let mut failure = None;
                for_each_choice(&lists, |pick| {
                    if failure.is_some() {
                        return Ok(());
                    }
                    ctx.budget.tick()?;
                    s.instances += 1;
                    let (alpha, rest) = (pick[0], &pick[1..]);
                    let (betas, deltas) = rest.split_at(k);
                    let outcome = (|| {
                        let gb = ctx.gamma(g, alpha, &fs, betas)?;
                        let lhs = ctx.gamma(&big_g, &gb, &hs, deltas)?;
                        let mut eps = Vec::with_capacity(k);
                        for (t, &(a, b)) in fblocks.iter().enumerate() {
                            eps.push(ctx.gamma(&fs[t], betas[t], &hs[a..b], &deltas[a..b])?);
                        }
                        let eps_refs: Vec<&O::Elem> = eps.iter().collect();
                        let rhs = ctx.gamma(g, alpha, &inner, &eps_refs)?;
                        Ok::<_, OperadError>((lhs, rhs))
                    })();
                    match outcome {
                        Err(OperadError::Budget(n)) => return Err(OperadError::Budget(n)),
                        Err(e) => failure = Some(format!("{}: {e}", describe_assoc(ctx, g, alpha, &fs, betas, &hs, deltas))),
                        Ok((lhs, rhs)) if lhs != rhs => {
                            failure = Some(format!(
                                "{}: γ(γ(α; β); δ) = {} but γ(α; γ(β; δ)) = {}",
                                describe_assoc(ctx, g, alpha, &fs, betas, &hs, deltas),
                                ctx.op.render(&lhs),
                                ctx.op.render(&rhs)
                            ))
                        }
                        Ok(_) => {}
                    }
                    Ok(())
                })?;
                if let Some(msg) = failure {
                    s.fail(|| msg);
                }
            }
        }
    }
    Ok(s)
}

fn describe_assoc<O: RingOperad>(
    ctx: &Ctx<O>,
    g: &RPoly,
    alpha: &O::Elem,
    fs: &[RPoly],
    betas: &[&O::Elem],
    hs: &[RPoly],
    deltas: &[&O::Elem],
) -> String {
    let polys = |ps: &[RPoly]| {
        let v: Vec<String> = ps.iter().map(ToString::to_string).collect();
        format!("[{}]", v.join("; "))
    };
    format!(
        "g = {g}, α = {}, f = {}, β = {}, h = {}, δ = {}",
        ctx.op.render(alpha),
        polys(fs),
        ctx.render_all(betas),
        polys(hs),
        ctx.render_all(deltas)
    )
}

fn equivariance<O: RingOperad>(
    ctx: &mut Ctx<O>,
    objects: &[RPoly],
    morphisms: &HashMap<RPoly, Vec<RMorphism>>,
) -> Result<Section, OperadError> {
    let mut s = Section::new("equivariance");
    let cap = ctx.cap;
    let a1 = RPoly::unit();
    let z0 = RPoly::zero(0);
    let eta = ctx.op.unit();
    let zero_elt = ctx.comp(&z0)?.first().cloned().ok_or_else(|| {
        OperadError::MissingComponent(z0.to_string())
    })?;
    for gm in objects {
        for psi in &morphisms[gm] {
            let gn = psi.target();
            for fs in tuples(objects, gn.arity(), cap) {
                let arities: Vec<usize> = fs.iter().map(RPoly::arity).collect();
                let widths = psi.map().pulled_back_widths(&arities)?;
                if widths.iter().sum::<usize>() > cap {
                    continue;
                }
                let pulled: Vec<RPoly> = psi
                    .map()
                    .images()
                    .iter()
                    .map(|p| match *p {
                        Point::Zero => z0.clone(),
                        Point::E => a1.clone(),
                        Point::At(k) => fs[k - 1].clone(),
                    })
                    .collect();
                let lhs_poly = compose(gn, &fs)?;
                let rhs_src = compose(gm, &pulled)?;
                if !ctx.allowed(&lhs_poly) || !ctx.allowed(&rhs_src) {
                    continue;
                }
                let big_psi = psi.map().block_expand(&arities)?;
                let big = match RMorphism::validate(&rhs_src, &big_psi, &lhs_poly) {
                    Ok(m) => m,
                    Err(e) => {
                        s.fail(|| format!("block map of {psi} over {:?}: {e}", arities));
                        continue;
                    }
                };
                let mut lists = vec![ctx.comp(gm)?];
                for f in &fs {
                    lists.push(ctx.comp(f)?);
                }
                let mut failure = None;
                for_each_choice(&lists, |pick| {
                    if failure.is_some() {
                        return Ok(());
                    }
                    ctx.budget.tick()?;
                    s.instances += 1;
                    let (alpha, betas) = (pick[0], &pick[1..]);
                    let pulled_elts: Vec<&O::Elem> = psi
                        .map()
                        .images()
                        .iter()
                        .map(|p| match *p {
                            Point::Zero => &zero_elt,
                            Point::E => &eta,
                            Point::At(k) => betas[k - 1],
                        })
                        .collect();
                    let outcome = (|| {
                        let moved = ctx.op.act(psi, alpha)?;
                        let lhs = ctx.gamma(gn, &moved, &fs, betas)?;
                        let inner = ctx.gamma(gm, alpha, &pulled, &pulled_elts)?;
                        let rhs = ctx.op.act(&big, &inner)?;
                        Ok::<_, OperadError>((lhs, rhs))
                    })();
                    let what = || {
                        format!(
                            "ψ = {psi}, α = {}, β = {}",
                            ctx.op.render(alpha),
                            ctx.render_all(betas)
                        )
                    };
                    match outcome {
                        Err(OperadError::Budget(n)) => return Err(OperadError::Budget(n)),
                        Err(e) => failure = Some(format!("{}: {e}", what())),
                        Ok((lhs, rhs)) if lhs != rhs => {
                            failure = Some(format!(
                                "{}: γ(ψ_*α; β) = {} but Ψ_*γ(α; ψ^*β) = {}",
                                what(),
                                ctx.op.render(&lhs),
                                ctx.op.render(&rhs)
                            ))
                        }
                        Ok(_) => {}
                    }
                    Ok(())
                })?;
                if let Some(msg) = failure {
                    s.fail(|| msg);
                }
            }
        }
    }
    Ok(s)
}

/// Tuples of morphisms with source arities summing to at most `src_cap` and
/// target arities summing to at most `tgt_cap`.
fn morphism_tuples(
    all: &[RMorphism],
    count: usize,
    src_cap: usize,
    tgt_cap: usize,
) -> Vec<Vec<&RMorphism>> {
    if count == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for m in all {
        let (a, b) = (m.source().arity(), m.target().arity());
        if a > src_cap || b > tgt_cap {
            continue;
        }
        for mut rest in morphism_tuples(all, count - 1, src_cap - a, tgt_cap - b) {
            rest.insert(0, m);
            out.push(rest);
        }
    }
    out
}

fn naturality<O: RingOperad>(
    ctx: &mut Ctx<O>,
    objects: &[RPoly],
    morphisms: &HashMap<RPoly, Vec<RMorphism>>,
) -> Result<Section, OperadError> {
    let mut s = Section::new("naturality");
    let cap = ctx.cap;
    let mut all: Vec<RMorphism> = morphisms.values().flatten().cloned().collect();
    all.sort();
    for g in objects {
        for ms in morphism_tuples(&all, g.arity(), cap, cap) {
            let fs: Vec<RPoly> = ms.iter().map(|m| m.source().clone()).collect();
            let hs: Vec<RPoly> = ms.iter().map(|m| m.target().clone()).collect();
            let src = compose(g, &fs)?;
            let tgt = compose(g, &hs)?;
            if !ctx.allowed(&src) || !ctx.allowed(&tgt) {
                continue;
            }
            let maps: Vec<ExtMap> = ms.iter().map(|m| m.map().clone()).collect();
            let harities: Vec<usize> = hs.iter().map(RPoly::arity).collect();
            let sum = ExtMap::block_sum(&maps, &harities)?;
            let big = match RMorphism::validate(&src, &sum, &tgt) {
                Ok(m) => m,
                Err(e) => {
                    s.fail(|| format!("block sum over g = {g}: {e}"));
                    continue;
                }
            };
            let mut lists = vec![ctx.comp(g)?];
            for f in &fs {
                lists.push(ctx.comp(f)?);
            }
            let mut failure = None;
            for_each_choice(&lists, |pick| {
                if failure.is_some() {
                    return Ok(());
                }
                ctx.budget.tick()?;
                s.instances += 1;
                let (alpha, betas) = (pick[0], &pick[1..]);
                let outcome = (|| {
                    let moved: Vec<O::Elem> = ms
                        .iter()
                        .zip(betas)
                        .map(|(m, b)| ctx.op.act(m, b))
                        .collect::<Result<_, _>>()?;
                    let moved_refs: Vec<&O::Elem> = moved.iter().collect();
                    let lhs = ctx.gamma(g, alpha, &hs, &moved_refs)?;
                    let inner = ctx.gamma(g, alpha, &fs, betas)?;
                    let rhs = ctx.op.act(&big, &inner)?;
                    Ok::<_, OperadError>((lhs, rhs))
                })();
                let what = || {
                    let names: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
                    format!(
                        "g = {g}, α = {}, morphisms [{}], β = {}",
                        ctx.op.render(alpha),
                        names.join("; "),
                        ctx.render_all(betas)
                    )
                };
                match outcome {
                    Err(OperadError::Budget(n)) => return Err(OperadError::Budget(n)),
                    Err(e) => failure = Some(format!("{}: {e}", what())),
                    Ok((lhs, rhs)) if lhs != rhs => {
                        failure = Some(format!(
                            "{}: γ(α; φ_*β) = {} but (⊕φ)_*γ(α; β) = {}",
                            what(),
                            ctx.op.render(&lhs),
                            ctx.op.render(&rhs)
                        ))
                    }
                    Ok(_) => {}
                }
                Ok(())
            })?;
            if let Some(msg) = failure {
                s.fail(|| msg);
            }
        }
    }
    Ok(s)
}

/// Checks every ring-operad diagram on all instances within the cap.
pub fn check_axioms<O: RingOperad>(op: &O, cfg: &CheckConfig) -> Result<Report, OperadError> {
    let mut ctx = Ctx::new(op, cfg)?;
    let objects = ctx.objects();
    let morphisms = ctx.morphisms(&objects);
    let sections = vec![
        zero_components(&mut ctx)?,
        functoriality(&mut ctx, &objects, &morphisms)?,
        unit(&mut ctx, &objects)?,
        associativity(&mut ctx, &objects)?,
        equivariance(&mut ctx, &objects, &morphisms)?,
        naturality(&mut ctx, &objects, &morphisms)?,
    ];
    Ok(Report {
        title: format!("ring operad axioms for {} at cap {}", op.name(), ctx.cap),
        sections,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operad::{strict_operad, Patched, Product, StrictOperad};

    #[test]
    fn strict_passes_at_cap_two() {
        let r = check_axioms(&strict_operad(), &CheckConfig::new(2)).unwrap();
        assert!(r.passed(), "{r}");
        assert!(r.sections.iter().all(|s| s.instances > 0), "{r}");
    }

    #[test]
    fn product_of_stricts_passes() {
        let r = check_axioms(&Product(StrictOperad, StrictOperad), &CheckConfig::new(2)).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = CheckConfig {
            cap: 2,
            budget: 10,
            max_monomials: None,
        };
        assert!(matches!(
            check_axioms(&strict_operad(), &cfg),
            Err(OperadError::Budget(10))
        ));
    }

    #[test]
    fn tuples_respect_total_arity() {
        let objs: Vec<RPoly> = (0..=2).flat_map(|n| enumerate_r(n).unwrap()).collect();
        let ts = tuples(&objs, 2, 2);
        assert!(ts.iter().all(|t| t.iter().map(RPoly::arity).sum::<usize>() <= 2));
        // (0,0):1, (0,1):2, (1,0):2, (1,1):4, (0,2):8, (2,0):8
        assert_eq!(ts.len(), 25);
    }

    #[test]
    fn patched_strict_is_still_strict() {
        let p = Patched {
            inner: StrictOperad,
            g: RPoly::unit(),
            x: (),
            args: vec![(RPoly::unit(), ())],
            value: (),
        };
        assert!(check_axioms(&p, &CheckConfig::new(1)).unwrap().passed());
    }
}
