//! The arrow, comma, span, structured cospan and lens displayed categories.

use super::build::{build, DisplayedSpec};
use super::TwoSidedDispCat;
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinFunctor, FinMap, FinSetCategory, MorId, ObjId};
use std::sync::Arc;

pub(crate) struct ArrowSpec {
    pub c: Arc<FinCategory>,
}

impl DisplayedSpec for ArrowSpec {
    type Obj = MorId;
    type Wit = ();

    fn base1(&self) -> &Arc<FinCategory> {
        &self.c
    }

    fn base2(&self) -> &Arc<FinCategory> {
        &self.c
    }

    fn objects_over(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        self.c.hom_vec(x, y)
    }

    fn squares(&self, f: MorId, g: MorId, phi1: &MorId, phi2: &MorId) -> Vec<()> {
        let commutes = self.c.compose(f, *phi2).is_some() && self.c.compose(f, *phi2) == self.c.compose(*phi1, g);
        if commutes {
            vec![()]
        } else {
            vec![]
        }
    }

    fn identity(&self, _: &MorId) {}

    fn compose(&self, _: &(), _: &()) -> Option<()> {
        Some(())
    }
}

/// Displayed objects over `(x, y)` are morphisms `x -> y`; a square over
/// `(f, g)` from `p` to `q` exists exactly when `f·q = p·g`.
pub fn make_arrow(c: &Arc<FinCategory>) -> TwoSidedDispCat {
    build(&ArrowSpec { c: c.clone() }).expect("arrow construction is closed").cat
}

struct CommaSpec {
    f: FinFunctor,
    g: FinFunctor,
}

impl DisplayedSpec for CommaSpec {
    type Obj = MorId;
    type Wit = ();

    fn base1(&self) -> &Arc<FinCategory> {
        self.f.dom()
    }

    fn base2(&self) -> &Arc<FinCategory> {
        self.g.dom()
    }

    fn objects_over(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        self.f.cod().hom_vec(self.f.obj(x), self.g.obj(y))
    }

    fn squares(&self, a: MorId, b: MorId, phi1: &MorId, phi2: &MorId) -> Vec<()> {
        let c = self.f.cod();
        let lhs = c.compose(self.f.mor(a), *phi2);
        if lhs.is_some() && lhs == c.compose(*phi1, self.g.mor(b)) {
            vec![()]
        } else {
            vec![]
        }
    }

    fn identity(&self, _: &MorId) {}

    fn compose(&self, _: &(), _: &()) -> Option<()> {
        Some(())
    }
}

/// Displayed objects over `(x, y)` are morphisms `F x -> G y`; squares over
/// `(a, b)` are proofs of `F a·q = p·G b`.
pub fn make_comma(f: &FinFunctor, g: &FinFunctor) -> Result<TwoSidedDispCat> {
    if !crate::fincat::same_category(f.cod(), g.cod()) {
        return Err(Error::CodomainMismatch { left: f.cod().object_count(), right: g.cod().object_count() });
    }
    build(&CommaSpec { f: f.clone(), g: g.clone() }).map(|b| b.cat)
}

/// A span `x <-left- apex -right-> y` or a cospan `x -left-> apex <-right- y`.
pub type Legs = (ObjId, MorId, MorId);

pub(crate) struct SpanSpec {
    pub c: Arc<FinCategory>,
}

impl DisplayedSpec for SpanSpec {
    type Obj = Legs;
    type Wit = MorId;

    fn base1(&self) -> &Arc<FinCategory> {
        &self.c
    }

    fn base2(&self) -> &Arc<FinCategory> {
        &self.c
    }

    fn objects_over(&self, x: ObjId, y: ObjId) -> Vec<Legs> {
        let mut out = Vec::new();
        for z in 0..self.c.object_count() {
            for p in self.c.hom(z, x) {
                for q in self.c.hom(z, y) {
                    out.push((z, p, q));
                }
            }
        }
        out
    }

    fn squares(&self, f: MorId, g: MorId, s1: &Legs, s2: &Legs) -> Vec<MorId> {
        let c = &self.c;
        c.hom(s1.0, s2.0)
            .filter(|&h| {
                c.compose(h, s2.1).is_some()
                    && c.compose(h, s2.1) == c.compose(s1.1, f)
                    && c.compose(h, s2.2).is_some()
                    && c.compose(h, s2.2) == c.compose(s1.2, g)
            })
            .collect()
    }

    fn identity(&self, s: &Legs) -> MorId {
        self.c.id(s.0)
    }

    fn compose(&self, h: &MorId, k: &MorId) -> Option<MorId> {
        self.c.compose(*h, *k)
    }
}

/// Displayed objects over `(x, y)` are spans `x <- z -> y`; squares over
/// `(f, g)` are apex maps making both sides commute.
pub fn make_spans(c: &Arc<FinCategory>) -> TwoSidedDispCat {
    build(&SpanSpec { c: c.clone() }).expect("span construction is closed").cat
}

pub(crate) struct CospanSpec {
    pub l: FinFunctor,
}

impl DisplayedSpec for CospanSpec {
    type Obj = Legs;
    type Wit = MorId;

    fn base1(&self) -> &Arc<FinCategory> {
        self.l.dom()
    }

    fn base2(&self) -> &Arc<FinCategory> {
        self.l.dom()
    }

    fn objects_over(&self, x: ObjId, y: ObjId) -> Vec<Legs> {
        let c = self.l.cod();
        let (lx, ly) = (self.l.obj(x), self.l.obj(y));
        let mut out = Vec::new();
        for z in 0..c.object_count() {
            for p in c.hom(lx, z) {
                for q in c.hom(ly, z) {
                    out.push((z, p, q));
                }
            }
        }
        out
    }

    fn squares(&self, f: MorId, g: MorId, s1: &Legs, s2: &Legs) -> Vec<MorId> {
        let c = self.l.cod();
        let (lf, lg) = (self.l.mor(f), self.l.mor(g));
        c.hom(s1.0, s2.0)
            .filter(|&h| {
                c.compose(s1.1, h).is_some()
                    && c.compose(s1.1, h) == c.compose(lf, s2.1)
                    && c.compose(s1.2, h).is_some()
                    && c.compose(s1.2, h) == c.compose(lg, s2.2)
            })
            .collect()
    }

    fn identity(&self, s: &Legs) -> MorId {
        self.l.cod().id(s.0)
    }

    fn compose(&self, h: &MorId, k: &MorId) -> Option<MorId> {
        self.l.cod().compose(*h, *k)
    }
}

/// Displayed objects over `(x, y)` are cospans `L x -> z <- L y`; squares
/// are apex maps making both sides commute.
pub fn make_struct_cospans(l: &FinFunctor) -> TwoSidedDispCat {
    build(&CospanSpec { l: l.clone() }).expect("cospan construction is closed").cat
}

/// A lens from `s` to `v`: `get : s -> v` and `put : v × s -> s`, where the
/// pair `(c, a)` of `v × s` sits at index `c * |s| + a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Lens {
    pub get: FinMap,
    pub put: FinMap,
}

impl Lens {
    pub fn put_at(&self, c: usize, a: usize) -> usize {
        self.put.apply(c * self.put.cod() + a)
    }

    /// `get = id`, `put = first projection`.
    pub fn identity(n: usize) -> Lens {
        Lens { get: FinMap::identity(n), put: FinMap::from_fn(n * n, n, |i| i / n.max(1)) }
    }
}

/// put-get, get-put and put-put.
pub fn lens_laws_hold(l: &Lens) -> bool {
    let s = l.get.dom();
    let v = l.get.cod();
    if l.put.dom() != v * s || l.put.cod() != s {
        return false;
    }
    let put_get = (0..v).all(|c| (0..s).all(|a| l.get.apply(l.put_at(c, a)) == c));
    let get_put = (0..s).all(|a| l.put_at(l.get.apply(a), a) == a);
    let put_put = (0..v).all(|c2| (0..v).all(|c| (0..s).all(|a| l.put_at(c2, l.put_at(c, a)) == l.put_at(c2, a))));
    put_get && get_put && put_put
}

pub(crate) struct LensSpec<'a> {
    pub c: &'a FinSetCategory,
}

impl DisplayedSpec for LensSpec<'_> {
    type Obj = Lens;
    type Wit = ();

    fn base1(&self) -> &Arc<FinCategory> {
        self.c.category()
    }

    fn base2(&self) -> &Arc<FinCategory> {
        self.c.category()
    }

    fn objects_over(&self, s: ObjId, v: ObjId) -> Vec<Lens> {
        let (ns, nv) = (self.c.size(s), self.c.size(v));
        let mut out = Vec::new();
        for get in FinMap::all(ns, nv) {
            for put in FinMap::all(nv * ns, ns) {
                let l = Lens { get: get.clone(), put };
                if lens_laws_hold(&l) {
                    out.push(l);
                }
            }
        }
        out
    }

    fn squares(&self, f1: MorId, f2: MorId, l1: &Lens, l2: &Lens) -> Vec<()> {
        let (f1, f2) = (self.c.map(f1), self.c.map(f2));
        let (s1, v1) = (l1.get.dom(), l1.get.cod());
        let get_ok = (0..s1).all(|a| f2.apply(l1.get.apply(a)) == l2.get.apply(f1.apply(a)));
        let put_ok =
            (0..v1).all(|c| (0..s1).all(|a| f1.apply(l1.put_at(c, a)) == l2.put_at(f2.apply(c), f1.apply(a))));
        if get_ok && put_ok {
            vec![()]
        } else {
            vec![]
        }
    }

    fn identity(&self, _: &Lens) {}

    fn compose(&self, _: &(), _: &()) -> Option<()> {
        Some(())
    }
}

/// Displayed objects over `(s, v)` are lawful lenses; squares over
/// `(f1, f2)` are proofs that `get1·f2 = f1·get2` and `put1·f1 = (f2 × f1)·put2`.
pub fn make_lenses(c: &FinSetCategory) -> Result<TwoSidedDispCat> {
    if !c.limits().products {
        return Err(Error::MissingProducts);
    }
    build(&LensSpec { c }).map(|b| b.cat)
}
