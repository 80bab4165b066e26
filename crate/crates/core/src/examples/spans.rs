//! Spans composed by chosen pullbacks and structured cospans composed by chosen pushouts.
//!
//! Unitors, associators and composite squares are the maps given by the
//! universal property, found by searching for the mediating morphism.

use crate::doublecat::{assemble, assemble_with_payloads, Assembled, DoubleCategory, DoubleSpec, SqCtx};
use crate::error::{Error, Result};
use crate::fincat::{find_comediator, find_mediator, ChosenPullbacks, ChosenPushouts, Cocone, Cone, FinCategory, FinFunctor, MorId, ObjId};
use crate::twosided::{CospanSpec, DisplayedSpec, Legs, SpanSpec};
use std::sync::Arc;

fn comp(c: &FinCategory, f: MorId, g: MorId) -> Result<MorId> {
    c.compose(f, g).ok_or_else(|| Error::NotComposable(format!("{f}·{g} is missing from the composition table")))
}

fn mediator(c: &FinCategory, cone: &Cone, w: ObjId, a: MorId, b: MorId) -> Result<MorId> {
    find_mediator(c, cone, w, a, b)
        .ok_or_else(|| Error::PullbackUnavailable(format!("no map from {w} into the pullback {} through ({a}, {b})", cone.apex)))
}

fn comediator(c: &FinCategory, cocone: &Cocone, w: ObjId, a: MorId, b: MorId) -> Result<MorId> {
    find_comediator(c, cocone, w, a, b)
        .ok_or_else(|| Error::PushoutUnavailable(format!("no map from the pushout {} to {w} through ({a}, {b})", cocone.apex)))
}

macro_rules! delegate_displayed {
    ($outer:ty, $field:ident) => {
        impl DisplayedSpec for $outer {
            type Obj = Legs;
            type Wit = MorId;

            fn base1(&self) -> &Arc<FinCategory> {
                self.$field.base1()
            }

            fn base2(&self) -> &Arc<FinCategory> {
                self.$field.base2()
            }

            fn objects_over(&self, x: ObjId, y: ObjId) -> Vec<Legs> {
                self.$field.objects_over(x, y)
            }

            fn squares(&self, f1: MorId, f2: MorId, src: &Legs, tgt: &Legs) -> Vec<MorId> {
                self.$field.squares(f1, f2, src, tgt)
            }

            fn identity(&self, a: &Legs) -> MorId {
                self.$field.identity(a)
            }

            fn compose(&self, s: &MorId, t: &MorId) -> Option<MorId> {
                self.$field.compose(s, t)
            }
        }
    };
}

struct SpanDouble<'a> {
    spans: SpanSpec,
    p: &'a dyn ChosenPullbacks,
}

delegate_displayed!(SpanDouble<'_>, spans);

impl SpanDouble<'_> {
    fn c(&self) -> &FinCategory {
        &self.spans.c
    }

    /// The pullback cone over which `h ⊙ k` is formed.
    fn cone(&self, h: &Legs, k: &Legs) -> Result<Cone> {
        self.p.pullback(h.2, k.1)
    }

    fn composite(&self, h: &Legs, k: &Legs) -> Result<(Cone, Legs)> {
        let cone = self.cone(h, k)?;
        let legs = (cone.apex, comp(self.c(), cone.left, h.1)?, comp(self.c(), cone.right, k.2)?);
        Ok((cone, legs))
    }
}

impl DoubleSpec for SpanDouble<'_> {
    fn hor_identity(&self, x: ObjId) -> Result<Legs> {
        let i = self.c().id(x);
        Ok((x, i, i))
    }

    fn hor_identity_square(&self, v: MorId) -> Result<MorId> {
        Ok(v)
    }

    fn hor_compose(&self, _: [ObjId; 3], h: &Legs, k: &Legs) -> Result<Legs> {
        Ok(self.composite(h, k)?.1)
    }

    fn hor_compose_square(&self, s: SqCtx<'_, Legs, MorId>, t: SqCtx<'_, Legs, MorId>) -> Result<MorId> {
        let c = self.c();
        let top = self.cone(s.src, t.src)?;
        let bottom = self.cone(s.tgt, t.tgt)?;
        mediator(c, &bottom, top.apex, comp(c, top.left, *s.wit)?, comp(c, top.right, *t.wit)?)
    }

    fn lunitor(&self, [x, _]: [ObjId; 2], h: &Legs) -> Result<(MorId, MorId)> {
        let c = self.c();
        let cone = self.p.pullback(c.id(x), h.1)?;
        let inv = mediator(c, &cone, h.0, h.1, c.id(h.0))?;
        Ok((cone.right, inv))
    }

    fn runitor(&self, [_, y]: [ObjId; 2], h: &Legs) -> Result<(MorId, MorId)> {
        let c = self.c();
        let cone = self.p.pullback(h.2, c.id(y))?;
        let inv = mediator(c, &cone, h.0, c.id(h.0), h.2)?;
        Ok((cone.left, inv))
    }

    fn associator(&self, _: [ObjId; 4], [h1, h2, h3]: [&Legs; 3]) -> Result<(MorId, MorId)> {
        let c = self.c();
        let (p23, h23) = self.composite(h2, h3)?;
        let (p12, h12) = self.composite(h1, h2)?;
        let src = self.cone(h1, &h23)?;
        let tgt = self.cone(&h12, h3)?;
        let u = mediator(c, &p12, src.apex, src.left, comp(c, src.right, p23.left)?)?;
        let alpha = mediator(c, &tgt, src.apex, u, comp(c, src.right, p23.right)?)?;
        let u = mediator(c, &p23, tgt.apex, comp(c, tgt.left, p12.right)?, tgt.right)?;
        let inv = mediator(c, &src, tgt.apex, comp(c, tgt.left, p12.left)?, u)?;
        Ok((alpha, inv))
    }
}

/// Spans `x <- z -> y` over the category of `p`, composed by its chosen pullbacks.
pub fn spans_double_cat(p: &dyn ChosenPullbacks) -> Result<DoubleCategory> {
    assemble(&SpanDouble { spans: SpanSpec { c: p.category().clone() }, p })
}

pub(crate) fn spans_with_payloads(p: &dyn ChosenPullbacks) -> Result<Assembled<Legs>> {
    assemble_with_payloads(&SpanDouble { spans: SpanSpec { c: p.category().clone() }, p })
}

struct CospanDouble<'a> {
    cospans: CospanSpec,
    p: &'a dyn ChosenPushouts,
}

delegate_displayed!(CospanDouble<'_>, cospans);

impl CospanDouble<'_> {
    fn c(&self) -> &FinCategory {
        self.cospans.l.cod()
    }

    fn cocone(&self, h: &Legs, k: &Legs) -> Result<Cocone> {
        self.p.pushout(h.2, k.1)
    }

    fn composite(&self, h: &Legs, k: &Legs) -> Result<(Cocone, Legs)> {
        let q = self.cocone(h, k)?;
        let legs = (q.apex, comp(self.c(), h.1, q.left)?, comp(self.c(), k.2, q.right)?);
        Ok((q, legs))
    }
}

impl DoubleSpec for CospanDouble<'_> {
    fn hor_identity(&self, x: ObjId) -> Result<Legs> {
        let lx = self.cospans.l.obj(x);
        let i = self.c().id(lx);
        Ok((lx, i, i))
    }

    fn hor_identity_square(&self, v: MorId) -> Result<MorId> {
        Ok(self.cospans.l.mor(v))
    }

    fn hor_compose(&self, _: [ObjId; 3], h: &Legs, k: &Legs) -> Result<Legs> {
        Ok(self.composite(h, k)?.1)
    }

    fn hor_compose_square(&self, s: SqCtx<'_, Legs, MorId>, t: SqCtx<'_, Legs, MorId>) -> Result<MorId> {
        let c = self.c();
        let top = self.cocone(s.src, t.src)?;
        let bottom = self.cocone(s.tgt, t.tgt)?;
        comediator(c, &top, bottom.apex, comp(c, *s.wit, bottom.left)?, comp(c, *t.wit, bottom.right)?)
    }

    fn lunitor(&self, _: [ObjId; 2], h: &Legs) -> Result<(MorId, MorId)> {
        let c = self.c();
        let q = self.p.pushout(c.id(c.src(h.1)), h.1)?;
        let lambda = comediator(c, &q, h.0, h.1, c.id(h.0))?;
        Ok((lambda, q.right))
    }

    fn runitor(&self, _: [ObjId; 2], h: &Legs) -> Result<(MorId, MorId)> {
        let c = self.c();
        let q = self.p.pushout(h.2, c.id(c.src(h.2)))?;
        let rho = comediator(c, &q, h.0, c.id(h.0), h.2)?;
        Ok((rho, q.left))
    }

    fn associator(&self, _: [ObjId; 4], [h1, h2, h3]: [&Legs; 3]) -> Result<(MorId, MorId)> {
        let c = self.c();
        let (q23, h23) = self.composite(h2, h3)?;
        let (q12, h12) = self.composite(h1, h2)?;
        let src = self.cocone(h1, &h23)?;
        let tgt = self.cocone(&h12, h3)?;
        let u = comediator(c, &q23, tgt.apex, comp(c, q12.right, tgt.left)?, tgt.right)?;
        let alpha = comediator(c, &src, tgt.apex, comp(c, q12.left, tgt.left)?, u)?;
        let u = comediator(c, &q12, src.apex, src.left, comp(c, q23.left, src.right)?)?;
        let inv = comediator(c, &tgt, src.apex, u, comp(c, q23.right, src.right)?)?;
        Ok((alpha, inv))
    }
}

/// Cospans `L x -> z <- L y` composed by the chosen pushouts of `p`, whose
/// category must be the codomain of `l`.
pub fn structured_cospans_double_cat(l: &FinFunctor, p: &dyn ChosenPushouts) -> Result<DoubleCategory> {
    if **l.cod() != **p.category() {
        return Err(Error::BoundaryMismatch("the pushouts are chosen in a category other than the codomain of L".into()));
    }
    assemble(&CospanDouble { cospans: CospanSpec { l: l.clone() }, p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::{is_strict, validate_double_category};
    use crate::examples::{finset_skeleton_of, poset_category, Poset};
    use crate::fincat::{is_iso, MapClass};
    use crate::twosided::disp_iso;

    fn cospan_payloads(p: &dyn ChosenPushouts) -> Assembled<Legs> {
        let l = FinFunctor::identity(p.category().clone());
        assemble_with_payloads(&CospanDouble { cospans: CospanSpec { l }, p }).unwrap()
    }

    #[test]
    fn span_composites_are_meets() {
        for poset in [Poset::diamond(), Poset::chain(3), Poset::subsets(2)] {
            let pc = poset_category(&poset);
            let a = spans_with_payloads(&pc).unwrap();
            assert!(validate_double_category(&a.double).is_empty());
            for (h, k, hk) in a.double.hcomp_table().defined() {
                let want = poset.meet(a.objects[h].0, a.objects[k].0).unwrap();
                assert_eq!(a.objects[hk].0, want);
            }
        }
    }

    #[test]
    fn cospan_composites_are_joins() {
        for poset in [Poset::diamond(), Poset::chain(3)] {
            let pc = poset_category(&poset);
            let a = cospan_payloads(&pc);
            assert!(validate_double_category(&a.double).is_empty());
            for (h, k, hk) in a.double.hcomp_table().defined() {
                let want = poset.join(a.objects[h].0, a.objects[k].0).unwrap();
                assert_eq!(a.objects[hk].0, want);
            }
        }
    }

    #[test]
    fn span_apex_counts_matching_pairs() {
        let c = finset_skeleton_of(2, MapClass::INJECTIVE, 4).unwrap();
        let a = spans_with_payloads(&c).unwrap();
        for (h, k, hk) in a.double.hcomp_table().defined() {
            let (f, g) = (c.map(a.objects[h].2), c.map(a.objects[k].1));
            let mut pairs = 0;
            for i in 0..f.dom() {
                for j in 0..g.dom() {
                    pairs += usize::from(f.apply(i) == g.apply(j));
                }
            }
            assert_eq!(c.size(a.objects[hk].0), pairs);
        }
        // the chosen pullbacks themselves, on sets up to 3
        let c = finset_skeleton_of(3, MapClass::INJECTIVE, 4).unwrap();
        let cat = c.category();
        for f in 0..cat.morphism_count() {
            for g in (0..cat.morphism_count()).filter(|&g| cat.tgt(g) == cat.tgt(f)) {
                let cone = c.pullback(f, g).unwrap();
                let pairs = (0..c.map(f).dom())
                    .flat_map(|i| (0..c.map(g).dom()).map(move |j| (i, j)))
                    .filter(|&(i, j)| c.map(f).apply(i) == c.map(g).apply(j))
                    .count();
                assert_eq!(c.size(cone.apex), pairs);
            }
        }
    }

    fn classes(n: usize, glue: impl Iterator<Item = (usize, usize)>) -> usize {
        // naive relabelling: merge label classes until stable
        let mut label: Vec<usize> = (0..n).collect();
        let glue: Vec<_> = glue.collect();
        loop {
            let mut changed = false;
            for &(a, b) in &glue {
                let (la, lb) = (label[a], label[b]);
                if la != lb {
                    let (lo, hi) = (la.min(lb), la.max(lb));
                    label.iter_mut().filter(|l| **l == hi).for_each(|l| *l = lo);
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        label.sort_unstable();
        label.dedup();
        label.len()
    }

    #[test]
    fn cospan_apex_counts_classes() {
        let c = finset_skeleton_of(2, MapClass::SURJECTIVE, 4).unwrap();
        let a = cospan_payloads(&c);
        for (h, k, hk) in a.double.hcomp_table().defined() {
            let (f, g) = (c.map(a.objects[h].2), c.map(a.objects[k].1));
            let na = f.cod();
            let want = classes(na + g.cod(), (0..f.dom()).map(|i| (f.apply(i), na + g.apply(i))));
            assert_eq!(c.size(a.objects[hk].0), want);
        }
        let c = finset_skeleton_of(3, MapClass::SURJECTIVE, 4).unwrap();
        let cat = c.category();
        for f in 0..cat.morphism_count() {
            for g in (0..cat.morphism_count()).filter(|&g| cat.src(g) == cat.src(f)) {
                let q = c.pushout(f, g).unwrap();
                let (f, g) = (c.map(f), c.map(g));
                let want = classes(f.cod() + g.cod(), (0..f.dom()).map(|i| (f.apply(i), f.cod() + g.apply(i))));
                assert_eq!(c.size(q.apex), want);
            }
        }
    }

    #[test]
    fn unitors_are_isomorphisms() {
        let c = finset_skeleton_of(2, MapClass::INJECTIVE, 4).unwrap();
        let a = spans_with_payloads(&c).unwrap();
        let d = &a.double;
        for h in 0..d.hor_count() {
            let (l, r) = (d.lunitor(h), d.runitor(h));
            assert!(disp_iso(d.squares(), l.sq) && disp_iso(d.squares(), r.sq));
            // the apex map of the pullback along an identity
            let apex = |k: usize| a.objects[k].0;
            let rho_src = d.square(r.sq).src;
            assert_eq!(c.size(apex(rho_src)), c.size(apex(h)));
            assert!(c.category().hom(apex(rho_src), apex(h)).any(|m| is_iso(c.category(), m)));
        }
        assert!(!is_strict(d).holds());
    }

    #[test]
    fn identity_cospan_is_idempotent_up_to_unitor() {
        let c = finset_skeleton_of(2, MapClass::SURJECTIVE, 4).unwrap();
        let a = cospan_payloads(&c);
        let d = &a.double;
        for x in 0..d.vertical().object_count() {
            let i = d.hid(x);
            let ii = d.hcomp(i, i).unwrap();
            let l = d.lunitor(i);
            let m = d.square(l.sq);
            assert_eq!((m.src, m.tgt), (ii, i));
            assert!(disp_iso(d.squares(), l.sq));
        }
    }
}
