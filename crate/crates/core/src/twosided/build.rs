//! Turns a description of displayed objects and squares as payloads into tables.

use super::{DispMor, DispMorId, DispObj, DispObjId, TwoSidedDispCat};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, MorId, ObjId};
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

/// Displayed data given by payloads: the displayed objects over each base
/// pair and the witnesses for each candidate square.
pub(crate) trait DisplayedSpec {
    type Obj: Clone + Eq + Hash + Debug;
    type Wit: Clone + Eq + Hash + Debug;

    fn base1(&self) -> &Arc<FinCategory>;
    fn base2(&self) -> &Arc<FinCategory>;
    /// Displayed objects over `(x1, x2)`, already in canonical order.
    fn objects_over(&self, x1: ObjId, x2: ObjId) -> Vec<Self::Obj>;
    /// Witnesses of squares `src -> tgt` over `(f1, f2)`, in canonical order.
    fn squares(&self, f1: MorId, f2: MorId, src: &Self::Obj, tgt: &Self::Obj) -> Vec<Self::Wit>;
    fn identity(&self, a: &Self::Obj) -> Self::Wit;
    fn compose(&self, s: &Self::Wit, t: &Self::Wit) -> Option<Self::Wit>;
}

/// Tables built from a [`DisplayedSpec`] together with the payload of every cell.
pub(crate) struct Built<O, W> {
    pub cat: TwoSidedDispCat,
    pub objects: Vec<O>,
    pub wits: Vec<W>,
    obj_index: HashMap<(ObjId, ObjId, O), DispObjId>,
    sq_index: HashMap<(DispObjId, DispObjId, MorId, MorId, W), DispMorId>,
}

impl<O: Clone + Eq + Hash, W: Clone + Eq + Hash> Built<O, W> {
    pub fn obj_id(&self, x1: ObjId, x2: ObjId, o: &O) -> Option<DispObjId> {
        self.obj_index.get(&(x1, x2, o.clone())).copied()
    }

    pub fn sq_id(&self, src: DispObjId, tgt: DispObjId, f1: MorId, f2: MorId, w: &W) -> Option<DispMorId> {
        self.sq_index.get(&(src, tgt, f1, f2, w.clone())).copied()
    }

    /// Looks up a displayed object or reports that the construction left its carrier.
    pub fn need_obj(&self, x1: ObjId, x2: ObjId, o: &O) -> Result<DispObjId>
    where
        O: Debug,
    {
        self.obj_id(x1, x2, o)
            .ok_or_else(|| Error::InvalidInput(format!("constructed cell {o:?} over ({x1}, {x2}) is not among the displayed objects")))
    }

    pub fn need_sq(&self, src: DispObjId, tgt: DispObjId, f1: MorId, f2: MorId, w: &W) -> Result<DispMorId>
    where
        W: Debug,
    {
        self.sq_id(src, tgt, f1, f2, w).ok_or_else(|| {
            Error::InvalidInput(format!("constructed square {w:?} from {src} to {tgt} over ({f1}, {f2}) is not among the squares"))
        })
    }
}

pub(crate) fn build<S: DisplayedSpec>(spec: &S) -> Result<Built<S::Obj, S::Wit>> {
    let (b1, b2) = (spec.base1().clone(), spec.base2().clone());
    let mut objects = Vec::new();
    let mut payloads = Vec::new();
    let mut by_pair: Vec<Vec<DispObjId>> = vec![Vec::new(); b1.object_count() * b2.object_count()];
    let mut obj_index = HashMap::new();
    for x1 in 0..b1.object_count() {
        for x2 in 0..b2.object_count() {
            for o in spec.objects_over(x1, x2) {
                let id = objects.len();
                if obj_index.insert((x1, x2, o.clone()), id).is_some() {
                    return Err(Error::InvalidInput(format!("displayed object {o:?} listed twice")));
                }
                objects.push(DispObj { x1, x2 });
                payloads.push(o);
                by_pair[x1 * b2.object_count() + x2].push(id);
            }
        }
    }

    let mut morphisms = Vec::new();
    let mut wits = Vec::new();
    let mut sq_index = HashMap::new();
    for a in 0..objects.len() {
        let DispObj { x1, x2 } = objects[a];
        for y1 in 0..b1.object_count() {
            let h1 = b1.hom_vec(x1, y1);
            if h1.is_empty() {
                continue;
            }
            for y2 in 0..b2.object_count() {
                let h2 = b2.hom_vec(x2, y2);
                if h2.is_empty() {
                    continue;
                }
                for &b in &by_pair[y1 * b2.object_count() + y2] {
                    for &f1 in &h1 {
                        for &f2 in &h2 {
                            for w in spec.squares(f1, f2, &payloads[a], &payloads[b]) {
                                let id = morphisms.len();
                                sq_index.insert((a, b, f1, f2, w.clone()), id);
                                morphisms.push(DispMor { f1, f2, src: a, tgt: b });
                                wits.push(w);
                            }
                        }
                    }
                }
            }
        }
    }

    let mut identity = Vec::with_capacity(objects.len());
    for a in 0..objects.len() {
        let o = objects[a];
        let w = spec.identity(&payloads[a]);
        let id = sq_index
            .get(&(a, a, b1.id(o.x1), b2.id(o.x2), w.clone()))
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("identity square {w:?} on {a} is not among the squares")))?;
        identity.push(id);
    }

    let mut cat = TwoSidedDispCat::new(b1.clone(), b2.clone(), objects, morphisms, identity, [])?;
    let pairs: Vec<(usize, usize)> = cat.table().iter().map(|(s, t, _)| (s, t)).collect();
    for (s, t) in pairs {
        let (ms, mt) = (cat.morphism(s), cat.morphism(t));
        let entry = match (b1.compose(ms.f1, mt.f1), b2.compose(ms.f2, mt.f2), spec.compose(&wits[s], &wits[t])) {
            (Some(g1), Some(g2), Some(w)) => sq_index.get(&(ms.src, mt.tgt, g1, g2, w)).copied(),
            _ => None,
        };
        cat.set_composite(s, t, entry);
    }
    Ok(Built { cat, objects: payloads, wits, obj_index, sq_index })
}
