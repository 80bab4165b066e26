//! Two-sided displayed categories: displayed objects over pairs of base
//! objects, displayed morphisms over pairs of base morphisms.
//!
//! Dependent equality of displayed morphisms is checked as "same boundary,
//! then same id". With strict base tables no transport is ever needed.

mod build;
mod constructions;

pub(crate) use build::{build, DisplayedSpec};
pub use constructions::{lens_laws_hold, Legs, make_arrow, make_comma, make_lenses, make_spans, make_struct_cospans, Lens};
pub(crate) use constructions::{ArrowSpec, CospanSpec, LensSpec, SpanSpec};

use crate::error::{check_index, check_len, Error, Result};
use crate::fincat::{find_inverse, same_category, FinCategory, FinFunctor, FinNatTrans, MorId, ObjId};
use crate::report::{law, Decision, LawReport, Outcome};
use crate::table::{Edge, PairTable};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::Arc;

pub type DispObjId = usize;
pub type DispMorId = usize;

/// The base pair a displayed object lies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DispObj {
    pub x1: ObjId,
    pub x2: ObjId,
}

/// A displayed morphism's full boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DispMor {
    pub f1: MorId,
    pub f2: MorId,
    pub src: DispObjId,
    pub tgt: DispObjId,
}

#[derive(Clone, Debug)]
pub struct TwoSidedDispCat {
    base1: Arc<FinCategory>,
    base2: Arc<FinCategory>,
    objects: Vec<DispObj>,
    morphisms: Vec<DispMor>,
    identity: Vec<DispMorId>,
    comp: PairTable,
    between: HashMap<(DispObjId, DispObjId), Vec<DispMorId>>,
}

impl PartialEq for TwoSidedDispCat {
    fn eq(&self, other: &Self) -> bool {
        *self.base1 == *other.base1
            && *self.base2 == *other.base2
            && self.objects == other.objects
            && self.morphisms == other.morphisms
            && self.identity == other.identity
            && self.comp == other.comp
    }
}

impl Eq for TwoSidedDispCat {}

impl TwoSidedDispCat {
    /// Builds a displayed category from its tables, checking only index validity.
    pub fn new(
        base1: Arc<FinCategory>,
        base2: Arc<FinCategory>,
        objects: Vec<DispObj>,
        morphisms: Vec<DispMor>,
        identity: Vec<DispMorId>,
        comp: impl IntoIterator<Item = (DispMorId, DispMorId, DispMorId)>,
    ) -> Result<Self> {
        for o in &objects {
            check_index("disp_objects.x1", o.x1, base1.object_count())?;
            check_index("disp_objects.x2", o.x2, base2.object_count())?;
        }
        for m in &morphisms {
            check_index("disp_morphisms.f1", m.f1, base1.morphism_count())?;
            check_index("disp_morphisms.f2", m.f2, base2.morphism_count())?;
            check_index("disp_morphisms.src", m.src, objects.len())?;
            check_index("disp_morphisms.tgt", m.tgt, objects.len())?;
        }
        check_len("disp_id", objects.len(), identity.len())?;
        for &i in &identity {
            check_index("disp_id", i, morphisms.len())?;
        }
        let edges = morphisms.iter().map(|m| Edge::new(m.src, m.tgt)).collect();
        let mut table = PairTable::new(objects.len(), edges)?;
        for (s, t, st) in comp {
            check_index("disp_comp", st, morphisms.len())?;
            table.insert("disp_comp", s, t, st)?;
        }
        let mut between: HashMap<(DispObjId, DispObjId), Vec<DispMorId>> = HashMap::new();
        for (i, m) in morphisms.iter().enumerate() {
            between.entry((m.src, m.tgt)).or_default().push(i);
        }
        Ok(TwoSidedDispCat { base1, base2, objects, morphisms, identity, comp: table, between })
    }

    /// No displayed objects at all.
    pub fn empty_over(base1: Arc<FinCategory>, base2: Arc<FinCategory>) -> Self {
        TwoSidedDispCat::new(base1, base2, vec![], vec![], vec![], []).expect("empty displayed data")
    }

    pub fn base1(&self) -> &Arc<FinCategory> {
        &self.base1
    }

    pub fn base2(&self) -> &Arc<FinCategory> {
        &self.base2
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn object(&self, a: DispObjId) -> DispObj {
        self.objects[a]
    }

    pub fn objects(&self) -> &[DispObj] {
        &self.objects
    }

    pub fn morphism(&self, s: DispMorId) -> DispMor {
        self.morphisms[s]
    }

    pub fn morphisms(&self) -> &[DispMor] {
        &self.morphisms
    }

    pub fn id(&self, a: DispObjId) -> DispMorId {
        self.identity[a]
    }

    pub fn identities(&self) -> &[DispMorId] {
        &self.identity
    }

    /// `s` then `t`, if the table has an entry.
    pub fn compose(&self, s: DispMorId, t: DispMorId) -> Option<DispMorId> {
        self.comp.get(s, t)
    }

    pub fn table(&self) -> &PairTable {
        &self.comp
    }

    /// Displayed morphisms out of `a`, in index order.
    pub fn out(&self, a: DispObjId) -> &[DispMorId] {
        self.comp.out(a)
    }

    /// Displayed morphisms `a -> b`, in index order.
    pub fn between(&self, a: DispObjId, b: DispObjId) -> &[DispMorId] {
        self.between.get(&(a, b)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Least-index displayed morphism with the given boundary.
    pub fn find(&self, f1: MorId, f2: MorId, a: DispObjId, b: DispObjId) -> Option<DispMorId> {
        self.between(a, b).iter().copied().find(|&s| {
            let m = self.morphisms[s];
            m.f1 == f1 && m.f2 == f2
        })
    }

    /// Displayed objects over `(x1, x2)`, in index order.
    pub fn objects_over(&self, x1: ObjId, x2: ObjId) -> impl Iterator<Item = DispObjId> + '_ {
        (0..self.objects.len()).filter(move |&a| self.objects[a] == DispObj { x1, x2 })
    }

    /// Composite of a path, `None` if any step is missing.
    pub fn compose_path(&self, path: &[Option<DispMorId>]) -> Option<DispMorId> {
        let (first, rest) = path.split_first()?;
        rest.iter().try_fold((*first)?, |acc, s| self.compose(acc, (*s)?))
    }

    /// Compares two (possibly missing) displayed morphisms: boundaries first, then ids.
    pub fn compare(&self, lhs: Option<DispMorId>, rhs: Option<DispMorId>) -> Outcome {
        match (lhs, rhs) {
            (Some(a), Some(b)) => {
                if self.morphisms[a] != self.morphisms[b] {
                    Outcome::BoundaryMismatch
                } else if a != b {
                    Outcome::Fails
                } else {
                    Outcome::Holds
                }
            }
            _ => Outcome::Undefined,
        }
    }

    /// Overwrites one composition entry. Used to build deliberately broken inputs.
    pub fn set_composite(&mut self, s: DispMorId, t: DispMorId, st: Option<DispMorId>) {
        self.comp.set(s, t, st);
    }
}

/// Checks typing, unit laws and associativity of displayed composition.
pub fn validate_twosided(d: &TwoSidedDispCat) -> LawReport {
    let mut r = LawReport::new();
    let mtyping = r.law(law::TWOSIDED_MORPHISM_TYPING);
    let id_typing = r.law(law::TWOSIDED_IDENTITY_TYPING);
    let defined = r.law(law::TWOSIDED_COMP_DEFINED);
    let typing = r.law(law::TWOSIDED_COMP_TYPING);
    let left = r.law(law::TWOSIDED_LEFT_UNIT);
    let right = r.law(law::TWOSIDED_RIGHT_UNIT);
    let assoc = r.law(law::TWOSIDED_ASSOC);
    let (b1, b2) = (&*d.base1, &*d.base2);

    for (s, m) in d.morphisms.iter().enumerate() {
        let (a, b) = (d.objects[m.src], d.objects[m.tgt]);
        let ok = b1.src(m.f1) == a.x1 && b1.tgt(m.f1) == b.x1 && b2.src(m.f2) == a.x2 && b2.tgt(m.f2) == b.x2;
        r.check(mtyping, ok, || (vec![s], format!("square {s} over ({}, {}) from {} to {}", m.f1, m.f2, m.src, m.tgt)));
    }
    for (a, o) in d.objects.iter().enumerate() {
        let i = d.identity[a];
        let m = d.morphisms[i];
        let ok = m.src == a && m.tgt == a && m.f1 == b1.id(o.x1) && m.f2 == b2.id(o.x2);
        r.check(id_typing, ok, || (vec![a], format!("id({a}) = {i} over ({}, {}) from {} to {}", m.f1, m.f2, m.src, m.tgt)));
    }
    for &(s, t, st) in d.comp.stray() {
        r.fail(defined, vec![s, t], Outcome::Fails, format!("entry {st} stored for non-composable pair"));
    }
    for (s, t, st) in d.comp.iter() {
        let Some(st) = st else {
            r.fail(defined, vec![s, t], Outcome::Undefined, "composable pair has no entry".into());
            continue;
        };
        r.pass(defined);
        let (ms, mt, m) = (d.morphisms[s], d.morphisms[t], d.morphisms[st]);
        let ok = m.src == ms.src
            && m.tgt == mt.tgt
            && Some(m.f1) == b1.compose(ms.f1, mt.f1)
            && Some(m.f2) == b2.compose(ms.f2, mt.f2);
        r.check(typing, ok, || (vec![s, t], format!("{s}·{t} = {st} over ({}, {}) from {} to {}", m.f1, m.f2, m.src, m.tgt)));
    }
    for s in 0..d.morphisms.len() {
        let m = d.morphisms[s];
        let l = d.compose(d.identity[m.src], s);
        r.record(left, d.compare(l, Some(s)), || (vec![s], format!("id·{s} = {l:?}")));
        let rr = d.compose(s, d.identity[m.tgt]);
        r.record(right, d.compare(rr, Some(s)), || (vec![s], format!("{s}·id = {rr:?}")));
    }
    for s in 0..d.morphisms.len() {
        for &t in d.out(d.morphisms[s].tgt) {
            let st = d.compose(s, t);
            for &u in d.out(d.morphisms[t].tgt) {
                let lhs = st.and_then(|st| d.compose(st, u));
                let rhs = d.compose(t, u).and_then(|tu| d.compose(s, tu));
                r.record(assoc, d.compare(lhs, rhs), || {
                    (vec![s, t, u], format!("({s}·{t})·{u} = {lhs:?}, {s}·({t}·{u}) = {rhs:?}"))
                });
            }
        }
    }
    r
}

/// The category of triples with its two projections to the bases.
pub fn total_category(d: &TwoSidedDispCat) -> (FinCategory, FinFunctor, FinFunctor) {
    let arrows = d.morphisms.iter().map(|m| Edge::new(m.src, m.tgt)).collect();
    let total = FinCategory::new(d.objects.len(), arrows, d.identity.clone(), d.comp.defined())
        .expect("displayed tables are index-valid");
    let total = Arc::new(total);
    let p1 = FinFunctor::new(
        total.clone(),
        d.base1.clone(),
        d.objects.iter().map(|o| o.x1).collect(),
        d.morphisms.iter().map(|m| m.f1).collect(),
    )
    .expect("projection tables are index-valid");
    let p2 = FinFunctor::new(
        total.clone(),
        d.base2.clone(),
        d.objects.iter().map(|o| o.x2).collect(),
        d.morphisms.iter().map(|m| m.f2).collect(),
    )
    .expect("projection tables are index-valid");
    ((*total).clone(), p1, p2)
}

/// All inverses of `s` over the inverses of its base morphisms.
pub fn disp_inverses(d: &TwoSidedDispCat, s: DispMorId) -> Result<Vec<DispMorId>> {
    let m = d.morphisms[s];
    let g1 = find_inverse(&d.base1, m.f1).ok_or(Error::BaseNotIso { side: 1, morphism: m.f1 })?;
    let g2 = find_inverse(&d.base2, m.f2).ok_or(Error::BaseNotIso { side: 2, morphism: m.f2 })?;
    Ok(d.between(m.tgt, m.src)
        .iter()
        .copied()
        .filter(|&t| {
            let mt = d.morphisms[t];
            mt.f1 == g1
                && mt.f2 == g2
                && d.compose(s, t) == Some(d.identity[m.src])
                && d.compose(t, s) == Some(d.identity[m.tgt])
        })
        .collect())
}

/// Least-index displayed inverse of `s`, if any.
pub fn is_disp_iso(d: &TwoSidedDispCat, s: DispMorId) -> Result<Option<DispMorId>> {
    Ok(disp_inverses(d, s)?.first().copied())
}

/// Whether `s` is a displayed isomorphism; false when its base morphisms are not isos.
pub fn disp_iso(d: &TwoSidedDispCat, s: DispMorId) -> bool {
    matches!(is_disp_iso(d, s), Ok(Some(_)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "clause")]
pub enum TwoSidedUnivalenceFailure {
    /// Two different displayed objects over the same base pair are joined
    /// by a displayed iso over identities.
    DistinctObjectsIsomorphic { src: DispObjId, tgt: DispObjId, iso: DispMorId },
    /// A displayed object does not have exactly one displayed iso to itself over identities.
    SelfIsosNotUnique { object: DispObjId, isos: Vec<DispMorId> },
}

/// Set-level univalence: displayed isos over identities exist exactly between
/// equal displayed objects, and then uniquely.
pub fn is_univalent_twosided(d: &TwoSidedDispCat) -> Decision<TwoSidedUnivalenceFailure> {
    for a in 0..d.objects.len() {
        let o = d.objects[a];
        let (i1, i2) = (d.base1.id(o.x1), d.base2.id(o.x2));
        let mut self_isos = Vec::new();
        for &s in d.out(a) {
            let m = d.morphisms[s];
            if m.f1 != i1 || m.f2 != i2 || !disp_iso(d, s) {
                continue;
            }
            if m.tgt != a {
                return Decision::Fails(TwoSidedUnivalenceFailure::DistinctObjectsIsomorphic { src: a, tgt: m.tgt, iso: s });
            }
            self_isos.push(s);
        }
        if self_isos.len() != 1 {
            return Decision::Fails(TwoSidedUnivalenceFailure::SelfIsosNotUnique { object: a, isos: self_isos });
        }
    }
    Decision::Holds
}

fn same_disp(a: &Arc<TwoSidedDispCat>, b: &Arc<TwoSidedDispCat>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A displayed functor over a pair of base functors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSidedDispFunctor {
    dom: Arc<TwoSidedDispCat>,
    cod: Arc<TwoSidedDispCat>,
    base1: FinFunctor,
    base2: FinFunctor,
    on_obj: Vec<DispObjId>,
    on_mor: Vec<DispMorId>,
}

impl TwoSidedDispFunctor {
    pub fn new(
        dom: Arc<TwoSidedDispCat>,
        cod: Arc<TwoSidedDispCat>,
        base1: FinFunctor,
        base2: FinFunctor,
        on_obj: Vec<DispObjId>,
        on_mor: Vec<DispMorId>,
    ) -> Result<Self> {
        if !same_category(base1.dom(), &dom.base1)
            || !same_category(base2.dom(), &dom.base2)
            || !same_category(base1.cod(), &cod.base1)
            || !same_category(base2.cod(), &cod.base2)
        {
            return Err(Error::BoundaryMismatch("base functors do not match the displayed categories".into()));
        }
        check_len("on_disp_obj", dom.object_count(), on_obj.len())?;
        check_len("on_disp_mor", dom.morphism_count(), on_mor.len())?;
        for &a in &on_obj {
            check_index("on_disp_obj", a, cod.object_count())?;
        }
        for &s in &on_mor {
            check_index("on_disp_mor", s, cod.morphism_count())?;
        }
        Ok(TwoSidedDispFunctor { dom, cod, base1, base2, on_obj, on_mor })
    }

    pub fn identity(d: Arc<TwoSidedDispCat>) -> Self {
        TwoSidedDispFunctor {
            base1: FinFunctor::identity(d.base1.clone()),
            base2: FinFunctor::identity(d.base2.clone()),
            on_obj: (0..d.object_count()).collect(),
            on_mor: (0..d.morphism_count()).collect(),
            dom: d.clone(),
            cod: d,
        }
    }

    pub fn dom(&self) -> &Arc<TwoSidedDispCat> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<TwoSidedDispCat> {
        &self.cod
    }

    pub fn base1(&self) -> &FinFunctor {
        &self.base1
    }

    pub fn base2(&self) -> &FinFunctor {
        &self.base2
    }

    pub fn obj(&self, a: DispObjId) -> DispObjId {
        self.on_obj[a]
    }

    pub fn mor(&self, s: DispMorId) -> DispMorId {
        self.on_mor[s]
    }

    pub fn on_obj(&self) -> &[DispObjId] {
        &self.on_obj
    }

    pub fn on_mor(&self) -> &[DispMorId] {
        &self.on_mor
    }

    /// `self` then `g`.
    pub fn then(&self, g: &TwoSidedDispFunctor) -> Result<TwoSidedDispFunctor> {
        if !same_disp(&self.cod, &g.dom) {
            return Err(Error::BoundaryMismatch("codomain of the first functor is not the domain of the second".into()));
        }
        Ok(TwoSidedDispFunctor {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            base1: self.base1.then(&g.base1)?,
            base2: self.base2.then(&g.base2)?,
            on_obj: self.on_obj.iter().map(|&a| g.on_obj[a]).collect(),
            on_mor: self.on_mor.iter().map(|&s| g.on_mor[s]).collect(),
        })
    }
}

/// Checks typing over the base functors and preservation of identities and composition.
pub fn validate_disp_functor(f: &TwoSidedDispFunctor) -> LawReport {
    let mut r = LawReport::new();
    let otyping = r.law(law::DISP_FUNCTOR_OBJECT_TYPING);
    let mtyping = r.law(law::DISP_FUNCTOR_MORPHISM_TYPING);
    let ident = r.law(law::DISP_FUNCTOR_IDENTITY);
    let comp = r.law(law::DISP_FUNCTOR_COMPOSITION);
    let (d, e) = (&*f.dom, &*f.cod);
    for a in 0..d.object_count() {
        let (o, fo) = (d.objects[a], e.objects[f.obj(a)]);
        let ok = fo.x1 == f.base1.obj(o.x1) && fo.x2 == f.base2.obj(o.x2);
        r.check(otyping, ok, || (vec![a], format!("F({a}) = {} over ({}, {})", f.obj(a), fo.x1, fo.x2)));
    }
    for s in 0..d.morphism_count() {
        let (m, fm) = (d.morphisms[s], e.morphisms[f.mor(s)]);
        let ok = fm.f1 == f.base1.mor(m.f1)
            && fm.f2 == f.base2.mor(m.f2)
            && fm.src == f.obj(m.src)
            && fm.tgt == f.obj(m.tgt);
        r.check(mtyping, ok, || {
            (vec![s], format!("F({s}) = {} over ({}, {}) from {} to {}", f.mor(s), fm.f1, fm.f2, fm.src, fm.tgt))
        });
    }
    for a in 0..d.object_count() {
        let lhs = Some(f.mor(d.identity[a]));
        let rhs = Some(e.identity[f.obj(a)]);
        r.record(ident, e.compare(lhs, rhs), || (vec![a], format!("F(id {a}) = {lhs:?}, id(F {a}) = {rhs:?}")));
    }
    for (s, t, st) in d.comp.iter() {
        let Some(st) = st else { continue };
        let lhs = Some(f.mor(st));
        let rhs = e.compose(f.mor(s), f.mor(t));
        r.record(comp, e.compare(lhs, rhs), || (vec![s, t], format!("F({s}·{t}) = {lhs:?}, F{s}·F{t} = {rhs:?}")));
    }
    r
}

/// A displayed natural transformation over a pair of base transformations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoSidedDispNatTrans {
    dom: TwoSidedDispFunctor,
    cod: TwoSidedDispFunctor,
    base1: FinNatTrans,
    base2: FinNatTrans,
    component: Vec<DispMorId>,
}

impl TwoSidedDispNatTrans {
    pub fn new(
        dom: TwoSidedDispFunctor,
        cod: TwoSidedDispFunctor,
        base1: FinNatTrans,
        base2: FinNatTrans,
        component: Vec<DispMorId>,
    ) -> Result<Self> {
        if !same_disp(&dom.dom, &cod.dom) || !same_disp(&dom.cod, &cod.cod) {
            return Err(Error::BoundaryMismatch("displayed functors are not parallel".into()));
        }
        if *base1.dom() != dom.base1 || *base1.cod() != cod.base1 || *base2.dom() != dom.base2 || *base2.cod() != cod.base2 {
            return Err(Error::BoundaryMismatch("base transformations do not match the displayed functors".into()));
        }
        check_len("component", dom.dom.object_count(), component.len())?;
        for &s in &component {
            check_index("component", s, dom.cod.morphism_count())?;
        }
        Ok(TwoSidedDispNatTrans { dom, cod, base1, base2, component })
    }

    pub fn identity(f: &TwoSidedDispFunctor) -> Self {
        let component = f.on_obj.iter().map(|&a| f.cod.identity[a]).collect();
        TwoSidedDispNatTrans {
            dom: f.clone(),
            cod: f.clone(),
            base1: FinNatTrans::identity(&f.base1),
            base2: FinNatTrans::identity(&f.base2),
            component,
        }
    }

    pub fn dom(&self) -> &TwoSidedDispFunctor {
        &self.dom
    }

    pub fn cod(&self) -> &TwoSidedDispFunctor {
        &self.cod
    }

    pub fn base1(&self) -> &FinNatTrans {
        &self.base1
    }

    pub fn base2(&self) -> &FinNatTrans {
        &self.base2
    }

    pub fn at(&self, a: DispObjId) -> DispMorId {
        self.component[a]
    }

    pub fn components(&self) -> &[DispMorId] {
        &self.component
    }
}

/// Checks component typing and displayed naturality `F s·t(b) = t(a)·G s`.
pub fn validate_disp_nat_trans(t: &TwoSidedDispNatTrans) -> LawReport {
    let mut r = LawReport::new();
    let typing = r.law(law::DISP_NAT_TRANS_TYPING);
    let nat = r.law(law::DISP_NAT_TRANS_NATURALITY);
    let (d, e) = (&*t.dom.dom, &*t.dom.cod);
    for a in 0..d.object_count() {
        let o = d.objects[a];
        let m = e.morphisms[t.at(a)];
        let ok = m.f1 == t.base1.at(o.x1) && m.f2 == t.base2.at(o.x2) && m.src == t.dom.obj(a) && m.tgt == t.cod.obj(a);
        r.check(typing, ok, || (vec![a], format!("component {} over ({}, {}) from {} to {}", t.at(a), m.f1, m.f2, m.src, m.tgt)));
    }
    for s in 0..d.morphism_count() {
        let m = d.morphisms[s];
        let lhs = e.compose(t.dom.mor(s), t.at(m.tgt));
        let rhs = e.compose(t.at(m.src), t.cod.mor(s));
        r.record(nat, e.compare(lhs, rhs), || (vec![s], format!("F{s}·t = {lhs:?}, t·G{s} = {rhs:?}")));
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow_of(c: FinCategory) -> TwoSidedDispCat {
        make_arrow(&Arc::new(c))
    }

    #[test]
    fn empty_displayed_data_is_valid_and_univalent() {
        let c = Arc::new(FinCategory::walking_arrow());
        let d = TwoSidedDispCat::empty_over(c.clone(), c);
        assert!(validate_twosided(&d).is_empty());
        assert!(is_univalent_twosided(&d).holds());
        assert_eq!(total_category(&d).0.object_count(), 0);
    }

    #[test]
    fn arrow_over_walking_arrow() {
        let d = arrow_of(FinCategory::walking_arrow());
        assert_eq!(d.object_count(), 3);
        assert!(validate_twosided(&d).is_empty());
        assert!(is_univalent_twosided(&d).holds());
    }

    #[test]
    fn mistyped_composite_is_reported_once() {
        let mut d = arrow_of(FinCategory::walking_arrow());
        // find a composable pair whose composite differs from some other square
        let (s, t, st) = d.table().iter().find(|(_, _, v)| v.is_some()).map(|(s, t, v)| (s, t, v.unwrap())).unwrap();
        let other = (0..d.morphism_count()).find(|&x| d.morphism(x) != d.morphism(st)).unwrap();
        d.set_composite(s, t, Some(other));
        let r = validate_twosided(&d);
        let typing: Vec<_> = r.violations().iter().filter(|v| v.law == law::TWOSIDED_COMP_TYPING).collect();
        assert_eq!(typing.len(), 1);
        assert_eq!(typing[0].witness, vec![s, t]);
    }

    #[test]
    fn identities_are_their_own_inverses() {
        let d = arrow_of(FinCategory::walking_iso());
        for a in 0..d.object_count() {
            assert_eq!(is_disp_iso(&d, d.id(a)).unwrap(), Some(d.id(a)));
        }
        for s in 0..d.morphism_count() {
            assert!(disp_inverses(&d, s).unwrap().len() <= 1);
        }
        let w = arrow_of(FinCategory::walking_arrow());
        let s = (0..w.morphism_count()).find(|&s| w.morphism(s).f1 == 2).unwrap();
        assert!(matches!(is_disp_iso(&w, s), Err(Error::BaseNotIso { side: 1, morphism: 2 })));
    }

    #[test]
    fn parallel_isomorphic_objects_break_univalence() {
        let t = Arc::new(FinCategory::terminal());
        let objects = vec![DispObj { x1: 0, x2: 0 }; 2];
        let m = |src, tgt| DispMor { f1: 0, f2: 0, src, tgt };
        let morphisms = vec![m(0, 0), m(1, 1), m(0, 1), m(1, 0)];
        let ends = [(0, 0), (1, 1), (0, 1), (1, 0)];
        let idx = |a: usize, b: usize| ends.iter().position(|&e| e == (a, b)).unwrap();
        let mut comp = Vec::new();
        for s in 0..4 {
            for t in 0..4 {
                if ends[s].1 == ends[t].0 {
                    comp.push((s, t, idx(ends[s].0, ends[t].1)));
                }
            }
        }
        let d = TwoSidedDispCat::new(t.clone(), t, objects, morphisms, vec![0, 1], comp).unwrap();
        assert!(validate_twosided(&d).is_empty());
        assert_eq!(
            is_univalent_twosided(&d),
            Decision::Fails(TwoSidedUnivalenceFailure::DistinctObjectsIsomorphic { src: 0, tgt: 1, iso: 2 })
        );
    }

    #[test]
    fn identity_functor_and_transformation() {
        let d = Arc::new(arrow_of(FinCategory::walking_arrow()));
        let f = TwoSidedDispFunctor::identity(d);
        assert!(validate_disp_functor(&f).is_empty());
        let t = TwoSidedDispNatTrans::identity(&f);
        assert!(validate_disp_nat_trans(&t).is_empty());
        let mut bad = f.clone();
        bad.on_mor[0] = 1;
        assert!(!validate_disp_functor(&bad).is_empty());
        let mut badt = t.clone();
        badt.component[1] = badt.component[0];
        let r = validate_disp_nat_trans(&badt);
        assert!(r.violations().iter().any(|v| v.law == law::DISP_NAT_TRANS_TYPING && v.witness == vec![1]));
    }
}
