//! Set-level readings of the E∞ conditions and the saturation sets `L(f, n)`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use super::check::{CheckConfig, Ctx};
use super::{OperadError, Report, RingOperad, Section};
use crate::category::{enumerate_hom, filtration, HomClass, RMorphism};
use crate::poly::{special_of_type, RPoly};

/// Sums of variables before products: arity, then largest monomial, then canonical order.
fn scan_key(f: &RPoly) -> (usize, usize, RPoly) {
    let top = f.monomials().iter().map(|m| m.degree()).max().unwrap_or(0);
    (f.arity(), top, f.clone())
}

fn effective_morphisms(
    objects: &[RPoly],
    nondegenerate_source: bool,
) -> Result<Vec<RMorphism>, OperadError> {
    let mut out = Vec::new();
    for f in objects {
        if nondegenerate_source && !f.is_nondegenerate() {
            continue;
        }
        for g in objects {
            out.extend(enumerate_hom(f, g, HomClass::Effective)?);
        }
    }
    Ok(out)
}

fn condition_two<O: RingOperad>(
    ctx: &mut Ctx<O>,
    morphisms: &[RMorphism],
) -> Result<Section, OperadError> {
    let mut s = Section::new("(2) injective maps act bijectively");
    for m in morphisms.iter().filter(|m| m.map().is_injective()) {
        ctx.budget.tick()?;
        s.instances += 1;
        let src = ctx.comp(m.source())?;
        let tgt = ctx.comp(m.target())?;
        let image: BTreeSet<O::Elem> = src
            .iter()
            .map(|x| ctx.op.act(m, x))
            .collect::<Result<_, _>>()?;
        let target: BTreeSet<O::Elem> = tgt.iter().cloned().collect();
        if image.len() != src.len() || image != target {
            s.fail(|| {
                format!(
                    "{m}: |C(source)| = {}, |image| = {}, |C(target)| = {}",
                    src.len(),
                    image.len(),
                    tgt.len()
                )
            });
        }
    }
    Ok(s)
}

/// Images of each element of `C(h)` along the non-degenerate morphisms `h -> f`.
fn images_into<O: RingOperad>(
    ctx: &mut Ctx<O>,
    h: &RPoly,
    f: &RPoly,
) -> Result<Vec<BTreeSet<O::Elem>>, OperadError> {
    let homs = enumerate_hom(h, f, HomClass::NonDegenerate)?;
    let ch = ctx.comp(h)?;
    let mut out = Vec::with_capacity(ch.len());
    for beta in ch.iter() {
        let mut set = BTreeSet::new();
        for psi in &homs {
            ctx.budget.tick()?;
            set.insert(ctx.op.act(psi, beta)?);
        }
        out.push(set);
    }
    Ok(out)
}

enum Witness {
    Found,
    Missing { truncated: bool },
}

fn find_witness<O: RingOperad>(
    ctx: &mut Ctx<O>,
    (f1, a1): (&RPoly, &O::Elem),
    (f2, a2): (&RPoly, &O::Elem),
) -> Result<Witness, OperadError> {
    if f1 == f2 && a1 == a2 {
        return Ok(Witness::Found);
    }
    let special = special_of_type(&f1.type_of())?;
    let level = f1.arity().max(f2.arity());
    let mut truncated = false;
    for h in filtration(&special, level)? {
        if ctx.op.cap().is_some_and(|c| h.arity() > c) {
            truncated = true;
            continue;
        }
        let to1 = images_into(ctx, &h, f1)?;
        let to2 = images_into(ctx, &h, f2)?;
        if to1
            .iter()
            .zip(&to2)
            .any(|(s1, s2)| s1.contains(a1) && s2.contains(a2))
        {
            return Ok(Witness::Found);
        }
    }
    Ok(Witness::Missing { truncated })
}

fn condition_three<O: RingOperad>(
    ctx: &mut Ctx<O>,
    objects: &[RPoly],
    morphisms: &[RMorphism],
) -> Result<Section, OperadError> {
    let mut s = Section::new("(3) coincidences lift to a common source");
    for g in objects.iter().filter(|g| g.is_nondegenerate()) {
        let mut by_value: BTreeMap<O::Elem, Vec<(RPoly, O::Elem)>> = BTreeMap::new();
        for m in morphisms
            .iter()
            .filter(|m| m.target() == g && m.source().is_nondegenerate())
        {
            for a in ctx.comp(m.source())?.iter() {
                let v = ctx.op.act(m, a)?;
                let list = by_value.entry(v).or_default();
                let key = (m.source().clone(), a.clone());
                if !list.contains(&key) {
                    list.push(key);
                }
            }
        }
        for (value, list) in &by_value {
            for i in 0..list.len() {
                for j in i + 1..list.len() {
                    ctx.budget.tick()?;
                    s.instances += 1;
                    let (f1, a1) = &list[i];
                    let (f2, a2) = &list[j];
                    if let Witness::Missing { truncated } = find_witness(ctx, (f1, a1), (f2, a2))? {
                        s.fail(|| {
                            format!(
                                "{} in C({f1}) and {} in C({f2}) both reach {} in C({g}) but no common source exists{}",
                                ctx.op.render(a1),
                                ctx.op.render(a2),
                                ctx.op.render(value),
                                if truncated { " (search truncated at the operad cap)" } else { "" }
                            )
                        });
                    }
                }
            }
        }
    }
    Ok(s)
}

fn condition_four<O: RingOperad>(
    ctx: &mut Ctx<O>,
    objects: &[RPoly],
) -> Result<Section, OperadError> {
    let mut s = Section::new("(4) effective maps act freely");
    for f in objects.iter().filter(|f| f.is_nondegenerate()) {
        let cf = ctx.comp(f)?;
        for g in objects {
            let homs = enumerate_hom(f, g, HomClass::Effective)?;
            if homs.len() < 2 {
                continue;
            }
            for a in cf.iter() {
                let mut seen: HashMap<O::Elem, &RMorphism> = HashMap::new();
                for m in &homs {
                    ctx.budget.tick()?;
                    s.instances += 1;
                    let v = ctx.op.act(m, a)?;
                    if let Some(prev) = seen.get(&v) {
                        s.fail(|| {
                            format!(
                                "f = {f}, φ1 = {}, φ2 = {}, α = {}: both give {} in C({g})",
                                prev.map(),
                                m.map(),
                                ctx.op.render(a),
                                ctx.op.render(&v)
                            )
                        });
                    } else {
                        seen.insert(v, m);
                    }
                }
            }
        }
    }
    Ok(s)
}

fn condition_five<O: RingOperad>(
    ctx: &mut Ctx<O>,
    morphisms: &[RMorphism],
) -> Result<Section, OperadError> {
    let mut s = Section::new("(5) non-degenerate morphisms act injectively");
    for m in morphisms.iter().filter(|m| m.is_nondegenerate_class()) {
        ctx.budget.tick()?;
        s.instances += 1;
        let src = ctx.comp(m.source())?;
        let mut seen: HashMap<O::Elem, &O::Elem> = HashMap::new();
        for x in src.iter() {
            let v = ctx.op.act(m, x)?;
            if let Some(prev) = seen.insert(v.clone(), x) {
                s.fail(|| {
                    format!(
                        "{m}: {} and {} both go to {}",
                        ctx.op.render(prev),
                        ctx.op.render(x),
                        ctx.op.render(&v)
                    )
                });
            }
        }
    }
    Ok(s)
}

/// Conditions (2) to (5) read on sets; (1) has no set-level content.
pub fn check_einfty_set<O: RingOperad>(op: &O, cfg: &CheckConfig) -> Result<Report, OperadError> {
    let mut ctx = Ctx::new(op, cfg)?;
    let mut objects = ctx.objects();
    objects.sort_by_key(scan_key);
    let effective = effective_morphisms(&objects, false)?;
    let sections = vec![
        Section::not_applicable(
            "(1) components contractible",
            "contractibility has no set-level reading",
        ),
        condition_two(&mut ctx, &effective)?,
        condition_three(&mut ctx, &objects, &effective)?,
        condition_four(&mut ctx, &objects)?,
        condition_five(&mut ctx, &effective)?,
    ];
    Ok(Report {
        title: format!("set-level E-infinity conditions for {} at cap {}", op.name(), ctx.cap),
        sections,
    })
}

/// `L(f, n)`: for each arity-`n` object `g` of the component of the special `f`,
/// the elements of `C(g)` reached from objects of arity at least `n + 1`.
pub fn compute_l<O: RingOperad>(
    op: &O,
    f: &RPoly,
    n: usize,
) -> Result<Vec<(RPoly, Vec<O::Elem>)>, OperadError> {
    let level: Vec<RPoly> = filtration(f, n)?
        .into_iter()
        .filter(|g| g.arity() == n)
        .collect();
    let higher = filtration(f, n + 1)?;
    let mut out = Vec::with_capacity(level.len());
    for g in level {
        let mut hit = BTreeSet::new();
        for h in &higher {
            let homs = enumerate_hom(h, &g, HomClass::NonDegenerate)?;
            if homs.is_empty() {
                continue;
            }
            for beta in op.component(h)? {
                for m in &homs {
                    hit.insert(op.act(m, &beta)?);
                }
            }
        }
        out.push((g, hit.into_iter().collect()));
    }
    Ok(out)
}
