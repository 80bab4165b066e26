//! Lax functors between example double categories.

use super::carriers::PosetCategory;
use super::spans::spans_with_payloads;
use super::squares::square_with_payloads;
use crate::dblfunctor::LaxDoubleFunctor;
use crate::doublecat::{DoubleCategory, HorId, SquareId};
use crate::error::{Error, Result};
use crate::fincat::{FinFunctor, ObjId};
use crate::twosided::TwoSidedDispFunctor;
use std::collections::HashMap;
use std::sync::Arc;

/// The comparison square over identities from `a` to `b`, which must exist.
fn globular(e: &DoubleCategory, x: ObjId, y: ObjId, a: HorId, b: HorId) -> Result<SquareId> {
    let v = e.vertical();
    e.squares()
        .find(v.id(x), v.id(y), a, b)
        .ok_or_else(|| Error::InvalidInput(format!("no square from {a} to {b} over identities")))
}

/// Fills in squares and comparisons for a functor between thin double
/// categories once the action on horizontal morphisms is known.
fn thin_functor(d: Arc<DoubleCategory>, e: Arc<DoubleCategory>, v: FinFunctor, on_hor: Vec<HorId>) -> Result<LaxDoubleFunctor> {
    let on_sq = (0..d.square_count())
        .map(|s| {
            let m = d.square(s);
            e.squares()
                .find(v.mor(m.f1), v.mor(m.f2), on_hor[m.src], on_hor[m.tgt])
                .ok_or_else(|| Error::InvalidInput(format!("square {s} has no image")))
        })
        .collect::<Result<Vec<_>>>()?;
    let squares = TwoSidedDispFunctor::new(d.squares().clone(), e.squares().clone(), v.clone(), v.clone(), on_hor.clone(), on_sq)?;
    let id_comparison = (0..d.vertical().object_count())
        .map(|x| globular(&e, v.obj(x), v.obj(x), e.hid(v.obj(x)), on_hor[d.hid(x)]))
        .collect::<Result<Vec<_>>>()?;
    let mut comp = Vec::new();
    for (h, k, hk) in d.hcomp_table().defined() {
        let (x, z) = (v.obj(d.hor(h).0), v.obj(d.hor(k).1));
        let src = e.hcomp(on_hor[h], on_hor[k]).ok_or_else(|| Error::NotComposable(format!("images of {h} and {k}")))?;
        comp.push((h, k, globular(&e, x, z, src, on_hor[hk])?));
    }
    LaxDoubleFunctor::new(d, e, squares, id_comparison, comp)
}

/// The strict functor between double categories of commuting squares
/// induced by an ordinary functor.
pub fn square_functor(f: &FinFunctor) -> Result<LaxDoubleFunctor> {
    let dom = square_with_payloads(f.dom())?;
    let cod = square_with_payloads(f.cod())?;
    let index: HashMap<_, _> = cod.objects.iter().enumerate().map(|(h, &m)| (m, h)).collect();
    let on_hor = dom.objects.iter().map(|&m| index[&f.mor(m)]).collect();
    thin_functor(Arc::new(dom.double), Arc::new(cod.double), f.clone(), on_hor)
}

/// On spans over a meet-semilattice, replaces the apex of `x <- z -> y` by
/// `x ∧ y`. The composition comparison `x ∧ y ∧ z <= x ∧ z` is generally not
/// invertible, so the functor is lax but not strong.
pub fn saturation_functor(p: &PosetCategory) -> Result<LaxDoubleFunctor> {
    let poset = p.poset();
    let spans = spans_with_payloads(p)?;
    let c = p.category();
    let index: HashMap<_, _> = spans.objects.iter().enumerate().map(|(h, &legs)| (legs, h)).collect();
    let on_hor = spans
        .objects
        .iter()
        .map(|&(_, l, r)| {
            let (x, y) = (c.tgt(l), c.tgt(r));
            let m = poset.meet(x, y).ok_or_else(|| Error::PullbackUnavailable(format!("{x} and {y} have no meet")))?;
            let legs = (m, p.arrow(m, x).expect("meet is below x"), p.arrow(m, y).expect("meet is below y"));
            Ok(index[&legs])
        })
        .collect::<Result<Vec<_>>>()?;
    let d = Arc::new(spans.double);
    let v = FinFunctor::identity(c.clone());
    thin_functor(d.clone(), d, v, on_hor)
}
