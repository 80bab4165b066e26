//! Finite categories given by explicit tables, with functors, natural
//! transformations and the isomorphism and equivalence searches built on them.
//!
//! Composition is diagrammatic throughout: `compose(f, g)` is "f then g" and
//! is defined when `tgt f = src g`.

mod finset;
mod limits;

pub use finset::{
    finset_product, finset_pullback, finset_pushout, FinMap, FinSetCategory, FinSetObj, MapClass, Product,
    Pullback, Pushout, Summand,
};
pub use limits::{
    find_comediator, find_mediator, verify_pullback, verify_pushout, ChosenLimits, ChosenPullbacks, ChosenPushouts,
    Cocone, Cone,
};

use crate::error::{check_index, check_len, Error, Result};
use crate::report::{law, Decision, LawReport, Outcome};
use crate::table::{Edge, PairTable};
use serde::Serialize;
use std::sync::Arc;

pub type ObjId = usize;
pub type MorId = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCategory {
    comp: PairTable,
    identity: Vec<MorId>,
}

impl FinCategory {
    /// Builds a category from its tables. Only index validity is checked
    /// here; the category laws are checked by [`validate_category`].
    pub fn new(
        objects: usize,
        arrows: Vec<Edge>,
        identity: Vec<MorId>,
        comp: impl IntoIterator<Item = (MorId, MorId, MorId)>,
    ) -> Result<Self> {
        check_len("id", objects, identity.len())?;
        let m = arrows.len();
        for &i in &identity {
            check_index("id", i, m)?;
        }
        let mut table = PairTable::new(objects, arrows)?;
        for (f, g, fg) in comp {
            check_index("comp", fg, m)?;
            table.insert("comp", f, g, fg)?;
        }
        Ok(FinCategory { comp: table, identity })
    }

    /// Builds a category whose composite of each composable pair is given by `compose`.
    pub fn from_fn(
        objects: usize,
        arrows: Vec<Edge>,
        identity: Vec<MorId>,
        compose: impl Fn(MorId, MorId) -> Option<MorId>,
    ) -> Result<Self> {
        let mut c = FinCategory::new(objects, arrows, identity, [])?;
        let m = c.morphism_count();
        let pairs: Vec<(usize, usize)> = c.comp.iter().map(|(f, g, _)| (f, g)).collect();
        for (f, g) in pairs {
            if let Some(fg) = compose(f, g) {
                check_index("comp", fg, m)?;
                c.comp.set(f, g, Some(fg));
            }
        }
        Ok(c)
    }

    /// The category with one object and one morphism.
    pub fn terminal() -> Self {
        FinCategory::new(1, vec![Edge::new(0, 0)], vec![0], [(0, 0, 0)]).expect("terminal category")
    }

    /// The category with no objects.
    pub fn empty() -> Self {
        FinCategory::new(0, vec![], vec![], []).expect("empty category")
    }

    /// `n` objects and only identities.
    pub fn discrete(n: usize) -> Self {
        let arrows = (0..n).map(|x| Edge::new(x, x)).collect();
        FinCategory::from_fn(n, arrows, (0..n).collect(), |f, g| (f == g).then_some(f)).expect("discrete category")
    }

    /// Objects 0 and 1 with identities 0, 1 and one arrow 2 : 0 -> 1.
    pub fn walking_arrow() -> Self {
        let arrows = vec![Edge::new(0, 0), Edge::new(1, 1), Edge::new(0, 1)];
        FinCategory::new(2, arrows, vec![0, 1], [(0, 0, 0), (1, 1, 1), (0, 2, 2), (2, 1, 2)]).expect("walking arrow")
    }

    /// Two objects with exactly one morphism between any two of them
    /// (identities 0, 1; `2 : 0 -> 1` and its inverse `3 : 1 -> 0`).
    pub fn walking_iso() -> Self {
        let arrows = vec![Edge::new(0, 0), Edge::new(1, 1), Edge::new(0, 1), Edge::new(1, 0)];
        let hom = |a: usize, b: usize| match (a, b) {
            (0, 0) => 0,
            (1, 1) => 1,
            (0, 1) => 2,
            _ => 3,
        };
        let ends: Vec<Edge> = arrows.clone();
        FinCategory::from_fn(2, arrows, vec![0, 1], move |f, g| Some(hom(ends[f].src, ends[g].tgt)))
            .expect("walking iso")
    }

    pub fn object_count(&self) -> usize {
        self.comp.node_count()
    }

    pub fn morphism_count(&self) -> usize {
        self.comp.edge_count()
    }

    pub fn arrow(&self, f: MorId) -> Edge {
        self.comp.edge(f)
    }

    pub fn arrows(&self) -> &[Edge] {
        self.comp.edges()
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.comp.edge(f).src
    }

    pub fn tgt(&self, f: MorId) -> ObjId {
        self.comp.edge(f).tgt
    }

    pub fn id(&self, x: ObjId) -> MorId {
        self.identity[x]
    }

    pub fn identities(&self) -> &[MorId] {
        &self.identity
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.src(f)] == f
    }

    /// `f` then `g`, if the table has an entry.
    pub fn compose(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.comp.get(f, g)
    }

    /// Morphisms out of `x`, in index order.
    pub fn out(&self, x: ObjId) -> &[MorId] {
        self.comp.out(x)
    }

    /// Morphisms `x -> y`, in index order.
    pub fn hom(&self, x: ObjId, y: ObjId) -> impl Iterator<Item = MorId> + '_ {
        self.comp.out(x).iter().copied().filter(move |&f| self.tgt(f) == y)
    }

    pub fn hom_vec(&self, x: ObjId, y: ObjId) -> Vec<MorId> {
        self.hom(x, y).collect()
    }

    pub fn table(&self) -> &PairTable {
        &self.comp
    }

    /// Overwrites one composition entry. Used to build deliberately broken inputs.
    pub fn set_composite(&mut self, f: MorId, g: MorId, fg: Option<MorId>) {
        self.comp.set(f, g, fg);
    }

    /// Overwrites one identity entry. Used to build deliberately broken inputs.
    pub fn set_identity(&mut self, x: ObjId, f: MorId) {
        self.identity[x] = f;
    }

    /// All stored composition entries `(f, g, f·g)`, including ones for
    /// pairs that are not composable.
    pub fn composition_entries(&self) -> impl Iterator<Item = (MorId, MorId, MorId)> + '_ {
        self.comp.defined()
    }
}

/// Checks identity typing, composition domain and typing, unit laws and associativity.
pub fn validate_category(c: &FinCategory) -> LawReport {
    let mut r = LawReport::new();
    let id_typing = r.law(law::CATEGORY_IDENTITY_TYPING);
    let defined = r.law(law::CATEGORY_COMP_DEFINED);
    let typing = r.law(law::CATEGORY_COMP_TYPING);
    let left = r.law(law::CATEGORY_LEFT_UNIT);
    let right = r.law(law::CATEGORY_RIGHT_UNIT);
    let assoc = r.law(law::CATEGORY_ASSOC);

    for x in 0..c.object_count() {
        let i = c.id(x);
        let e = c.arrow(i);
        r.check(id_typing, e.src == x && e.tgt == x, || {
            (vec![x], format!("id({x}) = {i} : {} -> {}", e.src, e.tgt))
        });
    }
    for &(f, g, fg) in c.table().stray() {
        r.fail(defined, vec![f, g], Outcome::Fails, format!("entry {fg} stored for non-composable pair"));
    }
    for (f, g, fg) in c.table().iter() {
        match fg {
            None => r.fail(defined, vec![f, g], Outcome::Undefined, "composable pair has no entry".into()),
            Some(fg) => {
                r.pass(defined);
                let ok = c.src(fg) == c.src(f) && c.tgt(fg) == c.tgt(g);
                r.check(typing, ok, || {
                    let e = c.arrow(fg);
                    (vec![f, g], format!("{f}·{g} = {fg} : {} -> {}, expected {} -> {}", e.src, e.tgt, c.src(f), c.tgt(g)))
                });
            }
        }
    }
    for f in 0..c.morphism_count() {
        let (x, y) = (c.src(f), c.tgt(f));
        let (ix, iy) = (c.id(x), c.id(y));
        let l = c.compose(ix, f);
        r.record(left, eq_outcome(l, f), || (vec![f], format!("id({x})·{f} = {l:?}")));
        let rr = c.compose(f, iy);
        r.record(right, eq_outcome(rr, f), || (vec![f], format!("{f}·id({y}) = {rr:?}")));
    }
    for f in 0..c.morphism_count() {
        for &g in c.out(c.tgt(f)) {
            let fg = c.compose(f, g);
            for &h in c.out(c.tgt(g)) {
                let lhs = fg.and_then(|fg| c.compose(fg, h));
                let rhs = c.compose(g, h).and_then(|gh| c.compose(f, gh));
                let outcome = match (lhs, rhs) {
                    (Some(a), Some(b)) if a == b => Outcome::Holds,
                    (Some(_), Some(_)) => Outcome::Fails,
                    _ => Outcome::Undefined,
                };
                r.record(assoc, outcome, || (vec![f, g, h], format!("({f}·{g})·{h} = {lhs:?}, {f}·({g}·{h}) = {rhs:?}")));
            }
        }
    }
    r
}

fn eq_outcome(value: Option<usize>, expected: usize) -> Outcome {
    match value {
        None => Outcome::Undefined,
        Some(v) if v == expected => Outcome::Holds,
        Some(_) => Outcome::Fails,
    }
}

/// Least-index two-sided inverse of `f`.
pub fn find_inverse(c: &FinCategory, f: MorId) -> Option<MorId> {
    let (x, y) = (c.src(f), c.tgt(f));
    c.hom(y, x).find(|&g| c.compose(f, g) == Some(c.id(x)) && c.compose(g, f) == Some(c.id(y)))
}

pub fn is_iso(c: &FinCategory, f: MorId) -> bool {
    find_inverse(c, f).is_some()
}

/// A non-identity isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct NonIdentityIso {
    pub morphism: MorId,
    pub inverse: MorId,
    pub src: ObjId,
    pub tgt: ObjId,
}

/// Whether every isomorphism is an identity. The witness is the least-index
/// isomorphism that is not.
pub fn is_gaunt(c: &FinCategory) -> Decision<NonIdentityIso> {
    for f in 0..c.morphism_count() {
        if c.is_identity(f) {
            continue;
        }
        if let Some(g) = find_inverse(c, f) {
            return Decision::Fails(NonIdentityIso { morphism: f, inverse: g, src: c.src(f), tgt: c.tgt(f) });
        }
    }
    Decision::Holds
}

pub(crate) fn same_category(a: &Arc<FinCategory>, b: &Arc<FinCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinFunctor {
    dom: Arc<FinCategory>,
    cod: Arc<FinCategory>,
    on_obj: Vec<ObjId>,
    on_mor: Vec<MorId>,
}

impl FinFunctor {
    pub fn new(dom: Arc<FinCategory>, cod: Arc<FinCategory>, on_obj: Vec<ObjId>, on_mor: Vec<MorId>) -> Result<Self> {
        check_len("on_obj", dom.object_count(), on_obj.len())?;
        check_len("on_mor", dom.morphism_count(), on_mor.len())?;
        for &x in &on_obj {
            check_index("on_obj", x, cod.object_count())?;
        }
        for &f in &on_mor {
            check_index("on_mor", f, cod.morphism_count())?;
        }
        Ok(FinFunctor { dom, cod, on_obj, on_mor })
    }

    pub fn identity(c: Arc<FinCategory>) -> Self {
        let on_obj = (0..c.object_count()).collect();
        let on_mor = (0..c.morphism_count()).collect();
        FinFunctor { dom: c.clone(), cod: c, on_obj, on_mor }
    }

    /// Sends everything to the object `x` and its identity.
    pub fn constant(dom: Arc<FinCategory>, cod: Arc<FinCategory>, x: ObjId) -> Result<Self> {
        check_index("constant object", x, cod.object_count())?;
        let on_obj = vec![x; dom.object_count()];
        let on_mor = vec![cod.id(x); dom.morphism_count()];
        Ok(FinFunctor { dom, cod, on_obj, on_mor })
    }

    pub fn dom(&self) -> &Arc<FinCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<FinCategory> {
        &self.cod
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.on_obj[x]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.on_mor[f]
    }

    pub fn on_obj(&self) -> &[ObjId] {
        &self.on_obj
    }

    pub fn on_mor(&self) -> &[MorId] {
        &self.on_mor
    }

    /// `self` then `g`.
    pub fn then(&self, g: &FinFunctor) -> Result<FinFunctor> {
        if !same_category(&self.cod, &g.dom) {
            return Err(Error::BoundaryMismatch("codomain of the first functor is not the domain of the second".into()));
        }
        Ok(FinFunctor {
            dom: self.dom.clone(),
            cod: g.cod.clone(),
            on_obj: self.on_obj.iter().map(|&x| g.on_obj[x]).collect(),
            on_mor: self.on_mor.iter().map(|&f| g.on_mor[f]).collect(),
        })
    }
}

/// Checks preservation of source/target, identities and composition.
pub fn validate_functor(f: &FinFunctor) -> LawReport {
    let mut r = LawReport::new();
    let typing = r.law(law::FUNCTOR_TYPING);
    let ident = r.law(law::FUNCTOR_IDENTITY);
    let comp = r.law(law::FUNCTOR_COMPOSITION);
    let (c, d) = (&*f.dom, &*f.cod);
    for m in 0..c.morphism_count() {
        let fm = f.mor(m);
        let ok = d.src(fm) == f.obj(c.src(m)) && d.tgt(fm) == f.obj(c.tgt(m));
        r.check(typing, ok, || {
            (vec![m], format!("F({m}) = {fm} : {} -> {}, expected {} -> {}", d.src(fm), d.tgt(fm), f.obj(c.src(m)), f.obj(c.tgt(m))))
        });
    }
    for x in 0..c.object_count() {
        let got = f.mor(c.id(x));
        let want = d.id(f.obj(x));
        r.check(ident, got == want, || (vec![x], format!("F(id {x}) = {got}, id(F {x}) = {want}")));
    }
    for (a, b, ab) in c.table().iter() {
        let Some(ab) = ab else { continue };
        let lhs = f.mor(ab);
        let rhs = d.compose(f.mor(a), f.mor(b));
        r.record(comp, eq_outcome(rhs, lhs), || (vec![a, b], format!("F({a}·{b}) = {lhs}, F{a}·F{b} = {rhs:?}")));
    }
    r
}

/// Why a functor fails to be an equivalence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "clause")]
pub enum EquivalenceFailure {
    /// Two distinct morphisms `x -> y` have the same image.
    NotFaithful { x: ObjId, y: ObjId, f: MorId, g: MorId },
    /// A morphism `F x -> F y` is not the image of any `x -> y`.
    NotFull { x: ObjId, y: ObjId, missing: MorId },
    /// No image object is isomorphic to `object`.
    NotEssentiallySurjective { object: ObjId },
}

/// Fully faithful and essentially surjective.
pub fn is_equivalence(f: &FinFunctor) -> Decision<EquivalenceFailure> {
    let (c, d) = (&*f.dom, &*f.cod);
    let mut seen = vec![usize::MAX; d.morphism_count()];
    for x in 0..c.object_count() {
        for y in 0..c.object_count() {
            let mut image = Vec::new();
            for m in c.hom(x, y) {
                let fm = f.mor(m);
                if seen[fm] != usize::MAX {
                    return Decision::Fails(EquivalenceFailure::NotFaithful { x, y, f: seen[fm], g: m });
                }
                seen[fm] = m;
                image.push(fm);
            }
            if let Some(missing) = d.hom(f.obj(x), f.obj(y)).find(|t| !image.contains(t)) {
                return Decision::Fails(EquivalenceFailure::NotFull { x, y, missing });
            }
            for fm in image {
                seen[fm] = usize::MAX;
            }
        }
    }
    for object in 0..d.object_count() {
        let reached = (0..c.object_count()).any(|x| d.hom(f.obj(x), object).any(|m| is_iso(d, m)));
        if !reached {
            return Decision::Fails(EquivalenceFailure::NotEssentiallySurjective { object });
        }
    }
    Decision::Holds
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinNatTrans {
    dom: FinFunctor,
    cod: FinFunctor,
    component: Vec<MorId>,
}

impl FinNatTrans {
    pub fn new(dom: FinFunctor, cod: FinFunctor, component: Vec<MorId>) -> Result<Self> {
        if !same_category(&dom.dom, &cod.dom) || !same_category(&dom.cod, &cod.cod) {
            return Err(Error::BoundaryMismatch("functors are not parallel".into()));
        }
        check_len("component", dom.dom.object_count(), component.len())?;
        for &m in &component {
            check_index("component", m, dom.cod.morphism_count())?;
        }
        Ok(FinNatTrans { dom, cod, component })
    }

    pub fn identity(f: &FinFunctor) -> Self {
        let component = f.on_obj.iter().map(|&x| f.cod.id(x)).collect();
        FinNatTrans { dom: f.clone(), cod: f.clone(), component }
    }

    pub fn dom(&self) -> &FinFunctor {
        &self.dom
    }

    pub fn cod(&self) -> &FinFunctor {
        &self.cod
    }

    pub fn at(&self, x: ObjId) -> MorId {
        self.component[x]
    }

    pub fn components(&self) -> &[MorId] {
        &self.component
    }

    /// Componentwise `self` then `other`; `None` if a composite is missing.
    pub fn then(&self, other: &FinNatTrans) -> Option<FinNatTrans> {
        let d = &self.dom.cod;
        let component = self
            .component
            .iter()
            .zip(&other.component)
            .map(|(&a, &b)| d.compose(a, b))
            .collect::<Option<Vec<_>>>()?;
        Some(FinNatTrans { dom: self.dom.clone(), cod: other.cod.clone(), component })
    }
}

/// Checks component typing and naturality `F f·t(y) = t(x)·G f`.
pub fn validate_nat_trans(t: &FinNatTrans) -> LawReport {
    let mut r = LawReport::new();
    let typing = r.law(law::NAT_TRANS_TYPING);
    let nat = r.law(law::NAT_TRANS_NATURALITY);
    let (c, d) = (&*t.dom.dom, &*t.dom.cod);
    for x in 0..c.object_count() {
        let m = t.at(x);
        let ok = d.src(m) == t.dom.obj(x) && d.tgt(m) == t.cod.obj(x);
        r.check(typing, ok, || (vec![x], format!("component {m} : {} -> {}", d.src(m), d.tgt(m))));
    }
    for f in 0..c.morphism_count() {
        let (x, y) = (c.src(f), c.tgt(f));
        let lhs = d.compose(t.dom.mor(f), t.at(y));
        let rhs = d.compose(t.at(x), t.cod.mor(f));
        let outcome = match (lhs, rhs) {
            (Some(a), Some(b)) if a == b => Outcome::Holds,
            (Some(_), Some(_)) => Outcome::Fails,
            _ => Outcome::Undefined,
        };
        r.record(nat, outcome, || (vec![f], format!("F{f}·t({y}) = {lhs:?}, t({x})·G{f} = {rhs:?}")));
    }
    r
}
