//! Builds a double category from payload-level descriptions of its horizontal structure.

use super::{DoubleCategory, HorizontalTables, StructuralSquare};
use crate::error::Result;
use crate::fincat::{MorId, ObjId};
use crate::twosided::{build, DisplayedSpec};
use std::collections::HashMap;
use std::sync::Arc;

/// A square given by payloads: its top, bottom and witness.
pub(crate) struct SqCtx<'a, O, W> {
    pub src: &'a O,
    pub tgt: &'a O,
    pub wit: &'a W,
}

/// Horizontal structure on a [`DisplayedSpec`] whose two bases coincide.
///
/// Unitor and associator methods return the structural square and its inverse.
pub(crate) trait DoubleSpec: DisplayedSpec {
    fn hor_identity(&self, x: ObjId) -> Result<Self::Obj>;
    fn hor_identity_square(&self, v: MorId) -> Result<Self::Wit>;
    /// `h ⊙ k` for `h : x -|-> y` and `k : y -|-> z`.
    fn hor_compose(&self, xyz: [ObjId; 3], h: &Self::Obj, k: &Self::Obj) -> Result<Self::Obj>;
    fn hor_compose_square(&self, s: SqCtx<'_, Self::Obj, Self::Wit>, t: SqCtx<'_, Self::Obj, Self::Wit>) -> Result<Self::Wit>;
    fn lunitor(&self, xy: [ObjId; 2], h: &Self::Obj) -> Result<(Self::Wit, Self::Wit)>;
    fn runitor(&self, xy: [ObjId; 2], h: &Self::Obj) -> Result<(Self::Wit, Self::Wit)>;
    fn associator(&self, xs: [ObjId; 4], hs: [&Self::Obj; 3]) -> Result<(Self::Wit, Self::Wit)>;
}

/// An assembled double category with the payload of every horizontal morphism.
pub(crate) struct Assembled<O> {
    pub double: DoubleCategory,
    pub objects: Vec<O>,
}

pub(crate) fn assemble<S: DoubleSpec>(spec: &S) -> Result<DoubleCategory> {
    Ok(assemble_with_payloads(spec)?.double)
}

pub(crate) fn assemble_with_payloads<S: DoubleSpec>(spec: &S) -> Result<Assembled<S::Obj>> {
    let mut built = build(spec)?;
    let d = &built.cat;
    let v = spec.base1().clone();
    let (nh, ns) = (d.object_count(), d.morphism_count());
    let hor = |h: usize| d.object(h);

    let hid_obj = (0..v.object_count())
        .map(|x| built.need_obj(x, x, &spec.hor_identity(x)?))
        .collect::<Result<Vec<_>>>()?;
    let hid_sq = (0..v.morphism_count())
        .map(|f| built.need_sq(hid_obj[v.src(f)], hid_obj[v.tgt(f)], f, f, &spec.hor_identity_square(f)?))
        .collect::<Result<Vec<_>>>()?;

    let mut starting: Vec<Vec<usize>> = vec![Vec::new(); v.object_count()];
    for h in 0..nh {
        starting[hor(h).x1].push(h);
    }
    let mut comp = HashMap::new();
    let mut hcomp_obj = Vec::new();
    for h in 0..nh {
        let (x, y) = (hor(h).x1, hor(h).x2);
        for &k in &starting[y] {
            let z = hor(k).x2;
            let o = spec.hor_compose([x, y, z], &built.objects[h], &built.objects[k])?;
            let hk = built.need_obj(x, z, &o)?;
            comp.insert((h, k), hk);
            hcomp_obj.push((h, k, hk));
        }
    }

    let mut left_of: Vec<Vec<usize>> = vec![Vec::new(); v.morphism_count()];
    for s in 0..ns {
        left_of[d.morphism(s).f1].push(s);
    }
    let ctx = |s: usize| {
        let m = d.morphism(s);
        SqCtx { src: &built.objects[m.src], tgt: &built.objects[m.tgt], wit: &built.wits[s] }
    };
    let mut hcomp_sq = Vec::new();
    for s in 0..ns {
        let ms = d.morphism(s);
        for &t in &left_of[ms.f2] {
            let mt = d.morphism(t);
            let w = spec.hor_compose_square(ctx(s), ctx(t))?;
            let st = built.need_sq(comp[&(ms.src, mt.src)], comp[&(ms.tgt, mt.tgt)], ms.f1, mt.f2, &w)?;
            hcomp_sq.push((s, t, st));
        }
    }

    let structural = |src: usize, tgt: usize, f1: MorId, f2: MorId, (w, winv): (S::Wit, S::Wit)| -> Result<StructuralSquare> {
        Ok(StructuralSquare { sq: built.need_sq(src, tgt, f1, f2, &w)?, inv: built.need_sq(tgt, src, f1, f2, &winv)? })
    };
    let mut lunitor = Vec::with_capacity(nh);
    let mut runitor = Vec::with_capacity(nh);
    for h in 0..nh {
        let (x, y) = (hor(h).x1, hor(h).x2);
        let (ix, iy) = (v.id(x), v.id(y));
        let o = &built.objects[h];
        lunitor.push(structural(comp[&(hid_obj[x], h)], h, ix, iy, spec.lunitor([x, y], o)?)?);
        runitor.push(structural(comp[&(h, hid_obj[y])], h, ix, iy, spec.runitor([x, y], o)?)?);
    }

    let mut associator = Vec::new();
    for &(a, b, ab) in &hcomp_obj {
        for &c in &starting[hor(b).x2] {
            let xs = [hor(a).x1, hor(b).x1, hor(c).x1, hor(c).x2];
            let src = comp[&(a, comp[&(b, c)])];
            let tgt = comp[&(ab, c)];
            let hs = [&built.objects[a], &built.objects[b], &built.objects[c]];
            let st = structural(src, tgt, v.id(xs[0]), v.id(xs[3]), spec.associator(xs, hs)?)?;
            associator.push(((a, b, c), st));
        }
    }

    let tables = HorizontalTables { hid_obj, hid_sq, hcomp_obj, hcomp_sq, lunitor, runitor, associator };
    let objects = std::mem::take(&mut built.objects);
    let double = DoubleCategory::new(Arc::new(built.cat), tables)?;
    Ok(Assembled { double, objects })
}
