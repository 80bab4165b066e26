//! Lax double functors, double transformations and the invertibility and
//! equivalence deciders built on them.
//!
//! A lax functor `F : D -> E` carries comparison squares
//! `phi(x) : hid(F x) -> F(hid x)` and `phi(h, k) : F h ⊙ F k -> F(h ⊙ k)`,
//! both over identities. They need not be invertible.

use crate::doublecat::{DoubleCategory, HorId, SquareId};
use crate::error::{check_index, check_len, Error, Result};
use crate::fincat::{find_inverse, is_equivalence, validate_functor, EquivalenceFailure, FinFunctor, FinNatTrans, MorId, ObjId};
use crate::report::{law, Decision, LawReport, Outcome};
use crate::twosided::{disp_iso, validate_disp_functor, validate_disp_nat_trans, DispMor, TwoSidedDispCat, TwoSidedDispFunctor, TwoSidedDispNatTrans};
use serde::Serialize;
use std::sync::Arc;

fn same_double(a: &Arc<DoubleCategory>, b: &Arc<DoubleCategory>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

fn same_disp(a: &Arc<TwoSidedDispCat>, b: &Arc<TwoSidedDispCat>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxDoubleFunctor {
    dom: Arc<DoubleCategory>,
    cod: Arc<DoubleCategory>,
    squares: TwoSidedDispFunctor,
    id_comparison: Vec<SquareId>,
    /// Indexed by the slots of the domain's horizontal composition table.
    comp_comparison: Vec<Option<SquareId>>,
}

impl LaxDoubleFunctor {
    /// Checks index validity only; the laws are checked by [`validate_lax_functor`].
    /// Pairs left out of `comp_comparison` are reported by the validator.
    pub fn new(
        dom: Arc<DoubleCategory>,
        cod: Arc<DoubleCategory>,
        squares: TwoSidedDispFunctor,
        id_comparison: Vec<SquareId>,
        comp_comparison: impl IntoIterator<Item = (HorId, HorId, SquareId)>,
    ) -> Result<Self> {
        if !same_disp(squares.dom(), dom.squares()) || !same_disp(squares.cod(), cod.squares()) {
            return Err(Error::BoundaryMismatch("square functor does not run between the given double categories".into()));
        }
        if squares.base1() != squares.base2() {
            return Err(Error::BoundaryMismatch("square functor must lie over one vertical functor on both sides".into()));
        }
        check_len("id_comparison", dom.vertical().object_count(), id_comparison.len())?;
        for &s in &id_comparison {
            check_index("id_comparison", s, cod.square_count())?;
        }
        let table = dom.hcomp_table();
        let mut comp = vec![None; table.pair_count()];
        for (h, k, s) in comp_comparison {
            check_index("comp_comparison", s, cod.square_count())?;
            let slot = table
                .slot(h, k)
                .ok_or_else(|| Error::NotComposable(format!("comparison given for non-adjacent pair ({h}, {k})")))?;
            if comp[slot].replace(s).is_some() {
                return Err(Error::DuplicateEntry { table: "comp_comparison", key: vec![h, k] });
            }
        }
        Ok(LaxDoubleFunctor { dom, cod, squares, id_comparison, comp_comparison: comp })
    }

    pub fn dom(&self) -> &Arc<DoubleCategory> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<DoubleCategory> {
        &self.cod
    }

    pub fn vertical(&self) -> &FinFunctor {
        self.squares.base1()
    }

    pub fn squares(&self) -> &TwoSidedDispFunctor {
        &self.squares
    }

    pub fn obj(&self, x: ObjId) -> ObjId {
        self.vertical().obj(x)
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.vertical().mor(f)
    }

    pub fn hor(&self, h: HorId) -> HorId {
        self.squares.obj(h)
    }

    pub fn sq(&self, s: SquareId) -> SquareId {
        self.squares.mor(s)
    }

    pub fn id_comparison(&self, x: ObjId) -> SquareId {
        self.id_comparison[x]
    }

    pub fn id_comparisons(&self) -> &[SquareId] {
        &self.id_comparison
    }

    pub fn comp_comparison(&self, h: HorId, k: HorId) -> Option<SquareId> {
        self.comp_comparison[self.dom.hcomp_table().slot(h, k)?]
    }

    /// `(h, k, phi(h, k))` for every adjacent pair of the domain, in table order.
    pub fn comp_comparisons(&self) -> impl Iterator<Item = (HorId, HorId, Option<SquareId>)> + '_ {
        self.dom.hcomp_table().iter().zip(&self.comp_comparison).map(|((h, k, _), &s)| (h, k, s))
    }

    pub fn set_id_comparison(&mut self, x: ObjId, s: SquareId) {
        self.id_comparison[x] = s;
    }

    pub fn set_comp_comparison(&mut self, h: HorId, k: HorId, s: Option<SquareId>) {
        let slot = self.dom.hcomp_table().slot(h, k).expect("adjacent pair");
        self.comp_comparison[slot] = s;
    }
}

/// Checks the vertical functor, the square functor, typing and naturality of
/// both comparison families and their coherence with unitors and associator.
pub fn validate_lax_functor(f: &LaxDoubleFunctor) -> LawReport {
    let mut r = validate_functor(f.vertical());
    r.merge(validate_disp_functor(&f.squares));
    let (d, e) = (&*f.dom, &*f.cod);
    let ev = e.vertical();
    let id_typing = r.law(law::LAX_ID_TYPING);
    let defined = r.law(law::LAX_COMP_DEFINED);
    let comp_typing = r.law(law::LAX_COMP_TYPING);
    let id_nat = r.law(law::LAX_ID_NATURALITY);
    let comp_nat = r.law(law::LAX_COMP_NATURALITY);
    let lunitor = r.law(law::LAX_LUNITOR);
    let runitor = r.law(law::LAX_RUNITOR);
    let assoc = r.law(law::LAX_ASSOCIATOR);
    let v = |a: Option<SquareId>, b: Option<SquareId>| e.vcomp(a?, b?);
    let h = |a: Option<SquareId>, b: Option<SquareId>| e.hcomp_sq(a?, b?);
    let cmp = |lhs: Option<SquareId>, rhs: Option<SquareId>| e.squares().compare(lhs, rhs);
    let detail = |lhs: Option<SquareId>, rhs: Option<SquareId>| format!("lhs {lhs:?}, rhs {rhs:?}");

    for x in 0..d.vertical().object_count() {
        let fx = f.obj(x);
        let want = DispMor { f1: ev.id(fx), f2: ev.id(fx), src: e.hid(fx), tgt: f.hor(d.hid(x)) };
        let got = e.square(f.id_comparison(x));
        r.check(id_typing, got == want, || (vec![x], format!("phi({x}) = {} with boundary {got:?}", f.id_comparison(x))));
    }
    for (a, b, s) in f.comp_comparisons() {
        let Some(s) = s else {
            r.fail(defined, vec![a, b], Outcome::Undefined, "adjacent pair has no comparison".into());
            continue;
        };
        r.pass(defined);
        let (x, z) = (f.obj(d.hor(a).0), f.obj(d.hor(b).1));
        let src = e.hcomp(f.hor(a), f.hor(b));
        let tgt = d.hcomp(a, b).map(|ab| f.hor(ab));
        let got = e.square(s);
        let ok = (Some(got.src), Some(got.tgt), got.f1, got.f2) == (src, tgt, ev.id(x), ev.id(z));
        r.check(comp_typing, ok, || (vec![a, b], format!("phi({a}, {b}) = {s} with boundary {got:?}")));
    }
    let dv = d.vertical();
    for g in 0..dv.morphism_count() {
        let (x, y) = (dv.src(g), dv.tgt(g));
        let lhs = e.vcomp(e.hid_sq(f.mor(g)), f.id_comparison(y));
        let rhs = e.vcomp(f.id_comparison(x), f.sq(d.hid_sq(g)));
        r.record(id_nat, cmp(lhs, rhs), || (vec![g], detail(lhs, rhs)));
    }
    for s in 0..d.square_count() {
        let ms = d.square(s);
        for &t in d.squares_left_of(ms.f2) {
            let mt = d.square(t);
            let lhs = v(e.hcomp_sq(f.sq(s), f.sq(t)), f.comp_comparison(ms.tgt, mt.tgt));
            let rhs = v(f.comp_comparison(ms.src, mt.src), d.hcomp_sq(s, t).map(|st| f.sq(st)));
            r.record(comp_nat, cmp(lhs, rhs), || (vec![s, t], detail(lhs, rhs)));
        }
    }
    for a in 0..d.hor_count() {
        let (x, y) = d.hor(a);
        let fa = f.hor(a);
        let lhs = v(
            v(e.hcomp_sq(f.id_comparison(x), e.vid(fa)), f.comp_comparison(d.hid(x), a)),
            Some(f.sq(d.lunitor(a).sq)),
        );
        let rhs = Some(e.lunitor(fa).sq);
        r.record(lunitor, cmp(lhs, rhs), || (vec![a], detail(lhs, rhs)));
        let lhs = v(
            v(e.hcomp_sq(e.vid(fa), f.id_comparison(y)), f.comp_comparison(a, d.hid(y))),
            Some(f.sq(d.runitor(a).sq)),
        );
        let rhs = Some(e.runitor(fa).sq);
        r.record(runitor, cmp(lhs, rhs), || (vec![a], detail(lhs, rhs)));
    }
    for ((a, b, c), st) in d.associator_entries() {
        let (fa, fb, fc) = (f.hor(a), f.hor(b), f.hor(c));
        let phi = |p: Option<HorId>, q: Option<HorId>| f.comp_comparison(p?, q?);
        let (bc, ab) = (d.hcomp(b, c), d.hcomp(a, b));
        let lhs = v(v(h(Some(e.vid(fa)), phi(Some(b), Some(c))), phi(Some(a), bc)), Some(f.sq(st.sq)));
        let rhs = v(
            v(e.associator(fa, fb, fc).map(|s| s.sq), h(phi(Some(a), Some(b)), Some(e.vid(fc)))),
            phi(ab, Some(c)),
        );
        r.record(assoc, cmp(lhs, rhs), || (vec![a, b, c], detail(lhs, rhs)));
    }
    r
}

/// A comparison square that is not invertible.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "comparison")]
pub enum StrongFailure {
    Identity { object: ObjId, square: SquareId },
    Composition { h: HorId, k: HorId, square: SquareId },
    /// The composition comparison for `(h, k)` is missing.
    Missing { h: HorId, k: HorId },
}

/// Every comparison square is a displayed isomorphism.
pub fn is_strong(f: &LaxDoubleFunctor) -> Decision<StrongFailure> {
    let e = f.cod.squares();
    for (object, &square) in f.id_comparison.iter().enumerate() {
        if !disp_iso(e, square) {
            return Decision::Fails(StrongFailure::Identity { object, square });
        }
    }
    for (h, k, s) in f.comp_comparisons() {
        match s {
            None => return Decision::Fails(StrongFailure::Missing { h, k }),
            Some(square) if !disp_iso(e, square) => return Decision::Fails(StrongFailure::Composition { h, k, square }),
            Some(_) => {}
        }
    }
    Decision::Holds
}

/// The identity functor with identity comparisons.
pub fn identity_functor(d: &Arc<DoubleCategory>) -> LaxDoubleFunctor {
    let id_comparison = (0..d.vertical().object_count()).map(|x| d.vid(d.hid(x))).collect();
    let comp = d.hcomp_table().iter().map(|(_, _, hk)| hk.map(|hk| d.vid(hk))).collect();
    LaxDoubleFunctor {
        dom: d.clone(),
        cod: d.clone(),
        squares: TwoSidedDispFunctor::identity(d.squares().clone()),
        id_comparison,
        comp_comparison: comp,
    }
}

/// `f` then `g`, with comparisons `phi_g(F -)·G(phi_f(-))`.
pub fn compose_functors(f: &LaxDoubleFunctor, g: &LaxDoubleFunctor) -> Result<LaxDoubleFunctor> {
    if !same_double(&f.cod, &g.dom) {
        return Err(Error::BoundaryMismatch("codomain of the first functor is not the domain of the second".into()));
    }
    let k = &*g.cod;
    let squares = f.squares.then(&g.squares)?;
    let id_comparison = (0..f.dom.vertical().object_count())
        .map(|x| {
            k.vcomp(g.id_comparison(f.obj(x)), g.sq(f.id_comparison(x)))
                .ok_or_else(|| Error::NotComposable(format!("identity comparisons at {x} do not compose")))
        })
        .collect::<Result<Vec<_>>>()?;
    let comp_comparison = f
        .comp_comparisons()
        .map(|(a, b, s)| {
            let gs = g.comp_comparison(f.hor(a), f.hor(b))?;
            k.vcomp(gs, g.sq(s?))
        })
        .collect();
    Ok(LaxDoubleFunctor { dom: f.dom.clone(), cod: g.cod.clone(), squares, id_comparison, comp_comparison })
}

/// A transformation `F => G` of lax functors: a vertical transformation
/// together with a square `t(h) : F h -> G h` over `(t x, t y)` for every `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleTransformation {
    dom: LaxDoubleFunctor,
    cod: LaxDoubleFunctor,
    squares: TwoSidedDispNatTrans,
}

impl DoubleTransformation {
    pub fn new(dom: LaxDoubleFunctor, cod: LaxDoubleFunctor, vertical: Vec<MorId>, squares: Vec<SquareId>) -> Result<Self> {
        if !same_double(&dom.dom, &cod.dom) || !same_double(&dom.cod, &cod.cod) {
            return Err(Error::BoundaryMismatch("lax functors are not parallel".into()));
        }
        let t = FinNatTrans::new(dom.vertical().clone(), cod.vertical().clone(), vertical)?;
        let sq = TwoSidedDispNatTrans::new(dom.squares.clone(), cod.squares.clone(), t.clone(), t, squares)?;
        Ok(DoubleTransformation { dom, cod, squares: sq })
    }

    pub fn identity(f: &LaxDoubleFunctor) -> Self {
        DoubleTransformation { dom: f.clone(), cod: f.clone(), squares: TwoSidedDispNatTrans::identity(&f.squares) }
    }

    pub fn dom(&self) -> &LaxDoubleFunctor {
        &self.dom
    }

    pub fn cod(&self) -> &LaxDoubleFunctor {
        &self.cod
    }

    pub fn vertical(&self) -> &FinNatTrans {
        self.squares.base1()
    }

    pub fn squares(&self) -> &TwoSidedDispNatTrans {
        &self.squares
    }

    pub fn at_obj(&self, x: ObjId) -> MorId {
        self.vertical().at(x)
    }

    pub fn at_hor(&self, h: HorId) -> SquareId {
        self.squares.at(h)
    }

    /// `self` then `other`, componentwise. `None` when a composite is missing.
    pub fn then(&self, other: &DoubleTransformation) -> Option<DoubleTransformation> {
        if self.cod != other.dom {
            return None;
        }
        let e = &*self.dom.cod;
        let vertical = (0..self.dom.dom.vertical().object_count())
            .map(|x| e.vertical().compose(self.at_obj(x), other.at_obj(x)))
            .collect::<Option<Vec<_>>>()?;
        let squares = (0..self.dom.dom.hor_count())
            .map(|h| e.vcomp(self.at_hor(h), other.at_hor(h)))
            .collect::<Option<Vec<_>>>()?;
        DoubleTransformation::new(self.dom.clone(), other.cod.clone(), vertical, squares).ok()
    }
}

/// Naturality of both parts and compatibility with the comparison squares.
pub fn validate_transformation(t: &DoubleTransformation) -> LawReport {
    let (f, g) = (&t.dom, &t.cod);
    let (d, e) = (&*f.dom, &*f.cod);
    let mut r = crate::fincat::validate_nat_trans(t.vertical());
    r.merge(validate_disp_nat_trans(&t.squares));
    let id_compat = r.law(law::TRANSFORMATION_ID);
    let comp_compat = r.law(law::TRANSFORMATION_COMP);
    let cmp = |lhs: Option<SquareId>, rhs: Option<SquareId>| e.squares().compare(lhs, rhs);
    for x in 0..d.vertical().object_count() {
        let lhs = e.vcomp(f.id_comparison(x), t.at_hor(d.hid(x)));
        let rhs = e.vcomp(e.hid_sq(t.at_obj(x)), g.id_comparison(x));
        r.record(id_compat, cmp(lhs, rhs), || (vec![x], format!("lhs {lhs:?}, rhs {rhs:?}")));
    }
    for (a, b, ab) in d.hcomp_table().iter() {
        let lhs = f.comp_comparison(a, b).zip(ab).and_then(|(p, ab)| e.vcomp(p, t.at_hor(ab)));
        let rhs = e.hcomp_sq(t.at_hor(a), t.at_hor(b)).zip(g.comp_comparison(a, b)).and_then(|(s, p)| e.vcomp(s, p));
        r.record(comp_compat, cmp(lhs, rhs), || (vec![a, b], format!("lhs {lhs:?}, rhs {rhs:?}")));
    }
    r
}

/// A component of a transformation without an inverse.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "component")]
pub enum NonInvertibleComponent {
    Vertical { object: ObjId, morphism: MorId },
    Square { horizontal: HorId, square: SquareId },
}

/// Invertible exactly when every vertical and every square component is.
pub fn is_invertible_2cell(t: &DoubleTransformation) -> Decision<NonInvertibleComponent> {
    let e = &*t.dom.cod;
    for (object, &morphism) in t.vertical().components().iter().enumerate() {
        if find_inverse(e.vertical(), morphism).is_none() {
            return Decision::Fails(NonInvertibleComponent::Vertical { object, morphism });
        }
    }
    for (horizontal, &square) in t.squares.components().iter().enumerate() {
        if !disp_iso(e.squares(), square) {
            return Decision::Fails(NonInvertibleComponent::Square { horizontal, square });
        }
    }
    Decision::Holds
}

/// The first clause of the adjoint-equivalence criterion that fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum AdjointEquivalenceFailure {
    NotStrong(StrongFailure),
    Vertical(EquivalenceFailure),
    /// Two squares with the same boundary have the same image.
    SquaresNotFaithful { first: SquareId, second: SquareId },
    /// A square between images with an image boundary is not itself an image.
    SquaresNotFull { top: HorId, bottom: HorId, missing: SquareId },
    /// No image of a horizontal morphism is isomorphic to `horizontal`.
    NotEssentiallySurjective { horizontal: HorId },
}

/// Strong, with an equivalence as vertical part, bijective on squares with a
/// given boundary and essentially surjective on horizontal morphisms up to
/// squares that are displayed isomorphisms.
pub fn is_adjoint_equivalence(f: &LaxDoubleFunctor) -> Decision<AdjointEquivalenceFailure> {
    if let Decision::Fails(w) = is_strong(f) {
        return Decision::Fails(AdjointEquivalenceFailure::NotStrong(w));
    }
    if let Decision::Fails(w) = is_equivalence(f.vertical()) {
        return Decision::Fails(AdjointEquivalenceFailure::Vertical(w));
    }
    let (d, e) = (&*f.dom, &*f.cod);
    let (ds, es) = (d.squares(), e.squares());
    for top in 0..d.hor_count() {
        for bottom in 0..d.hor_count() {
            let mut images: Vec<(DispMor, SquareId, SquareId)> = Vec::new();
            for &s in ds.between(top, bottom) {
                let fs = f.sq(s);
                if let Some(&(_, first, _)) = images.iter().find(|(_, _, img)| *img == fs) {
                    return Decision::Fails(AdjointEquivalenceFailure::SquaresNotFaithful { first, second: s });
                }
                images.push((d.square(s), s, fs));
            }
            let (ft, fb) = (f.hor(top), f.hor(bottom));
            let dv = d.vertical();
            let (x, y) = d.hor(top);
            let (x2, y2) = d.hor(bottom);
            for &m in es.between(ft, fb) {
                let em = e.square(m);
                let boundary_is_image = dv.hom(x, x2).any(|v| f.mor(v) == em.f1) && dv.hom(y, y2).any(|w| f.mor(w) == em.f2);
                if boundary_is_image && !images.iter().any(|&(_, _, img)| img == m) {
                    return Decision::Fails(AdjointEquivalenceFailure::SquaresNotFull { top, bottom, missing: m });
                }
            }
        }
    }
    for horizontal in 0..e.hor_count() {
        let reached = (0..d.hor_count()).any(|h| es.between(f.hor(h), horizontal).iter().any(|&s| disp_iso(es, s)));
        if !reached {
            return Decision::Fails(AdjointEquivalenceFailure::NotEssentiallySurjective { horizontal });
        }
    }
    Decision::Holds
}
