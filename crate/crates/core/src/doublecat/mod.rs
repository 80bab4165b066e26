//! Pseudo double categories assembled in layers over a two-sided displayed category.
//!
//! A horizontal morphism `h : x -|-> y` is a displayed object over `(x, y)`.
//! A square `s : h -> k` over `(v, w)` is a displayed morphism with left
//! boundary `v`, right boundary `w`, top `h` and bottom `k`. Vertical
//! composition of squares is displayed composition.

mod assemble;
mod laws;
mod unfolded;

pub(crate) use assemble::{assemble, assemble_with_payloads, Assembled, DoubleSpec, SqCtx};
pub use laws::validate_double_category;
pub use unfolded::{from_unfolded, to_unfolded, UnfoldedDoubleCat};

use crate::error::{check_index, check_len, Error, Result};
use crate::fincat::{is_gaunt, same_category, FinCategory, MorId, NonIdentityIso, ObjId};
use crate::report::Decision;
use crate::table::{Edge, PairTable, TripleTable};
use crate::twosided::{is_univalent_twosided, DispMor, DispMorId, DispObjId, TwoSidedDispCat, TwoSidedUnivalenceFailure};
use serde::Serialize;
use std::sync::Arc;

pub type HorId = DispObjId;
pub type SquareId = DispMorId;

/// A unitor or associator square with its stored inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StructuralSquare {
    pub sq: SquareId,
    pub inv: SquareId,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleCategory {
    squares: Arc<TwoSidedDispCat>,
    hid_obj: Vec<HorId>,
    hid_sq: Vec<SquareId>,
    hcomp_obj: PairTable,
    hcomp_sq: PairTable,
    lunitor: Vec<StructuralSquare>,
    runitor: Vec<StructuralSquare>,
    associator: TripleTable<StructuralSquare>,
}

/// The tables of a double category beyond its squares, as lists of entries.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HorizontalTables {
    pub hid_obj: Vec<HorId>,
    pub hid_sq: Vec<SquareId>,
    pub hcomp_obj: Vec<(HorId, HorId, HorId)>,
    pub hcomp_sq: Vec<(SquareId, SquareId, SquareId)>,
    pub lunitor: Vec<StructuralSquare>,
    pub runitor: Vec<StructuralSquare>,
    pub associator: Vec<((HorId, HorId, HorId), StructuralSquare)>,
}

impl DoubleCategory {
    /// Assembles a double category, checking index validity and that every
    /// unitor and associator entry is present. Laws are checked by
    /// [`validate_double_category`].
    pub fn new(squares: Arc<TwoSidedDispCat>, t: HorizontalTables) -> Result<Self> {
        if !same_category(squares.base1(), squares.base2()) {
            return Err(Error::BoundaryMismatch("squares must lie over the same vertical category on both sides".into()));
        }
        let v = squares.base1().clone();
        let nh = squares.object_count();
        let ns = squares.morphism_count();
        check_len("hid_obj", v.object_count(), t.hid_obj.len())?;
        check_len("hid_sq", v.morphism_count(), t.hid_sq.len())?;
        check_len("lunitor", nh, t.lunitor.len())?;
        check_len("runitor", nh, t.runitor.len())?;
        for &h in &t.hid_obj {
            check_index("hid_obj", h, nh)?;
        }
        for &s in &t.hid_sq {
            check_index("hid_sq", s, ns)?;
        }
        for u in t.lunitor.iter().chain(&t.runitor) {
            check_index("unitor", u.sq, ns)?;
            check_index("unitor", u.inv, ns)?;
        }
        let hor_edges = squares.objects().iter().map(|o| Edge::new(o.x1, o.x2)).collect();
        let mut hcomp_obj = PairTable::new(v.object_count(), hor_edges)?;
        for (h, k, hk) in t.hcomp_obj {
            check_index("hcomp_obj", hk, nh)?;
            hcomp_obj.insert("hcomp_obj", h, k, hk)?;
        }
        let sq_edges = squares.morphisms().iter().map(|m| Edge::new(m.f1, m.f2)).collect();
        let mut hcomp_sq = PairTable::new(v.morphism_count(), sq_edges)?;
        for (s, u, su) in t.hcomp_sq {
            check_index("hcomp_sq", su, ns)?;
            hcomp_sq.insert("hcomp_sq", s, u, su)?;
        }
        let mut associator = TripleTable::new(&hcomp_obj);
        for ((a, b, c), st) in t.associator {
            check_index("associator", st.sq, ns)?;
            check_index("associator", st.inv, ns)?;
            for h in [a, b, c] {
                check_index("associator", h, nh)?;
            }
            let slot = associator.slot(&hcomp_obj, a, b, c).ok_or_else(|| {
                Error::NotComposable(format!("associator entry for ({a}, {b}, {c}), which are not adjacent"))
            })?;
            if associator.get_slot(slot).is_some() {
                return Err(Error::DuplicateEntry { table: "associator", key: vec![a, b, c] });
            }
            associator.set_slot(slot, Some(st));
        }
        if let Some(((a, b, c), _)) = associator.iter(&hcomp_obj).find(|(_, e)| e.is_none()) {
            return Err(Error::InvalidInput(format!("associator has no entry for ({a}, {b}, {c})")));
        }
        Ok(DoubleCategory {
            squares,
            hid_obj: t.hid_obj,
            hid_sq: t.hid_sq,
            hcomp_obj,
            hcomp_sq,
            lunitor: t.lunitor,
            runitor: t.runitor,
            associator,
        })
    }

    /// The double category with no objects.
    pub fn empty() -> Self {
        let c = Arc::new(FinCategory::empty());
        DoubleCategory::new(Arc::new(TwoSidedDispCat::empty_over(c.clone(), c)), HorizontalTables::default())
            .expect("empty double category")
    }

    pub fn vertical(&self) -> &Arc<FinCategory> {
        self.squares.base1()
    }

    pub fn squares(&self) -> &Arc<TwoSidedDispCat> {
        &self.squares
    }

    pub fn hor_count(&self) -> usize {
        self.squares.object_count()
    }

    pub fn square_count(&self) -> usize {
        self.squares.morphism_count()
    }

    /// Source and target of a horizontal morphism.
    pub fn hor(&self, h: HorId) -> (ObjId, ObjId) {
        let o = self.squares.object(h);
        (o.x1, o.x2)
    }

    /// Boundary of a square: left `f1`, right `f2`, top `src`, bottom `tgt`.
    pub fn square(&self, s: SquareId) -> DispMor {
        self.squares.morphism(s)
    }

    pub fn hid(&self, x: ObjId) -> HorId {
        self.hid_obj[x]
    }

    pub fn hid_sq(&self, v: MorId) -> SquareId {
        self.hid_sq[v]
    }

    pub fn vid(&self, h: HorId) -> SquareId {
        self.squares.id(h)
    }

    pub fn vcomp(&self, s: SquareId, t: SquareId) -> Option<SquareId> {
        self.squares.compose(s, t)
    }

    pub fn hcomp(&self, h: HorId, k: HorId) -> Option<HorId> {
        self.hcomp_obj.get(h, k)
    }

    pub fn hcomp_sq(&self, s: SquareId, t: SquareId) -> Option<SquareId> {
        self.hcomp_sq.get(s, t)
    }

    pub fn lunitor(&self, h: HorId) -> StructuralSquare {
        self.lunitor[h]
    }

    pub fn runitor(&self, h: HorId) -> StructuralSquare {
        self.runitor[h]
    }

    pub fn associator(&self, a: HorId, b: HorId, c: HorId) -> Option<StructuralSquare> {
        self.associator.get(&self.hcomp_obj, a, b, c).copied()
    }

    /// Horizontal morphisms starting at `x`.
    pub fn hor_out(&self, x: ObjId) -> &[HorId] {
        self.hcomp_obj.out(x)
    }

    /// Squares whose left boundary is `v`.
    pub fn squares_left_of(&self, v: MorId) -> &[SquareId] {
        self.hcomp_sq.out(v)
    }

    pub fn hcomp_table(&self) -> &PairTable {
        &self.hcomp_obj
    }

    pub fn hcomp_sq_table(&self) -> &PairTable {
        &self.hcomp_sq
    }

    pub(crate) fn associator_table(&self) -> &TripleTable<StructuralSquare> {
        &self.associator
    }

    /// All associator entries in slot order.
    pub fn associator_entries(&self) -> impl Iterator<Item = ((HorId, HorId, HorId), StructuralSquare)> + '_ {
        self.associator.iter(&self.hcomp_obj).filter_map(|(k, e)| e.map(|e| (k, *e)))
    }

    /// The horizontal tables as entry lists.
    pub fn horizontal_tables(&self) -> HorizontalTables {
        HorizontalTables {
            hid_obj: self.hid_obj.clone(),
            hid_sq: self.hid_sq.clone(),
            hcomp_obj: self.hcomp_obj.defined().collect(),
            hcomp_sq: self.hcomp_sq.defined().collect(),
            lunitor: self.lunitor.clone(),
            runitor: self.runitor.clone(),
            associator: self.associator_entries().collect(),
        }
    }

    // Mutators for building deliberately broken inputs.

    pub fn set_lunitor(&mut self, h: HorId, st: StructuralSquare) {
        self.lunitor[h] = st;
    }

    pub fn set_runitor(&mut self, h: HorId, st: StructuralSquare) {
        self.runitor[h] = st;
    }

    pub fn set_associator(&mut self, a: HorId, b: HorId, c: HorId, st: StructuralSquare) {
        let slot = self.associator.slot(&self.hcomp_obj, a, b, c).expect("adjacent triple");
        self.associator.set_slot(slot, Some(st));
    }

    pub fn set_hcomp_sq(&mut self, s: SquareId, t: SquareId, st: Option<SquareId>) {
        self.hcomp_sq.set(s, t, st);
    }

    pub fn set_hcomp(&mut self, h: HorId, k: HorId, hk: Option<HorId>) {
        self.hcomp_obj.set(h, k, hk);
    }

    pub fn set_hid_sq(&mut self, v: MorId, s: SquareId) {
        self.hid_sq[v] = s;
    }
}

fn describe_hor(d: &DoubleCategory, h: HorId) -> String {
    let (x, y) = d.hor(h);
    format!("{h} : {x} -|-> {y}")
}

/// `h ⊙ k`, or an error naming the mismatched boundary.
pub fn hcomp(d: &DoubleCategory, h: HorId, k: HorId) -> Result<HorId> {
    check_index("horizontal morphism", h, d.hor_count())?;
    check_index("horizontal morphism", k, d.hor_count())?;
    if d.hor(h).1 != d.hor(k).0 {
        return Err(Error::NotComposable(format!(
            "target {} of {} is not the source {} of {}",
            d.hor(h).1,
            describe_hor(d, h),
            d.hor(k).0,
            describe_hor(d, k)
        )));
    }
    d.hcomp(h, k).ok_or_else(|| Error::NotComposable(format!("no composite stored for ({h}, {k})")))
}

/// Horizontal composite of squares, or an error naming the mismatched boundary.
pub fn hcomp_sq(d: &DoubleCategory, s: SquareId, t: SquareId) -> Result<SquareId> {
    check_index("square", s, d.square_count())?;
    check_index("square", t, d.square_count())?;
    let (ms, mt) = (d.square(s), d.square(t));
    if ms.f2 != mt.f1 {
        return Err(Error::NotComposable(format!(
            "right boundary {} of square {s} is not the left boundary {} of square {t}",
            ms.f2, mt.f1
        )));
    }
    d.hcomp_sq(s, t).ok_or_else(|| Error::NotComposable(format!("no composite stored for ({s}, {t})")))
}

/// Vertical composite of squares, or an error naming the mismatched boundary.
pub fn vcomp_sq(d: &DoubleCategory, s: SquareId, t: SquareId) -> Result<SquareId> {
    check_index("square", s, d.square_count())?;
    check_index("square", t, d.square_count())?;
    let (ms, mt) = (d.square(s), d.square(t));
    if ms.tgt != mt.src {
        return Err(Error::NotComposable(format!(
            "bottom {} of square {s} is not the top {} of square {t}",
            ms.tgt, mt.src
        )));
    }
    d.vcomp(s, t).ok_or_else(|| Error::NotComposable(format!("no composite stored for ({s}, {t})")))
}

/// A unitor or associator entry that is not an identity square.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "table")]
pub enum NonIdentityStructure {
    Lunitor { h: HorId, sq: SquareId },
    Runitor { h: HorId, sq: SquareId },
    Associator { h1: HorId, h2: HorId, h3: HorId, sq: SquareId },
}

/// Whether all unitors and associators are identity squares.
pub fn is_strict(d: &DoubleCategory) -> Decision<NonIdentityStructure> {
    let is_id = |s: SquareId| {
        let m = d.square(s);
        m.src == m.tgt && d.vid(m.src) == s
    };
    for h in 0..d.hor_count() {
        let sq = d.lunitor[h].sq;
        if !is_id(sq) {
            return Decision::Fails(NonIdentityStructure::Lunitor { h, sq });
        }
    }
    for h in 0..d.hor_count() {
        let sq = d.runitor[h].sq;
        if !is_id(sq) {
            return Decision::Fails(NonIdentityStructure::Runitor { h, sq });
        }
    }
    for ((h1, h2, h3), st) in d.associator_entries() {
        if !is_id(st.sq) {
            return Decision::Fails(NonIdentityStructure::Associator { h1, h2, h3, sq: st.sq });
        }
    }
    Decision::Holds
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "part")]
pub enum DoubleUnivalenceFailure {
    Vertical(NonIdentityIso),
    Squares(TwoSidedUnivalenceFailure),
}

/// The vertical category is gaunt and the squares are univalent.
pub fn check_univalent_double(d: &DoubleCategory) -> Decision<DoubleUnivalenceFailure> {
    if let Decision::Fails(w) = is_gaunt(d.vertical()) {
        return Decision::Fails(DoubleUnivalenceFailure::Vertical(w));
    }
    is_univalent_twosided(&d.squares).map(DoubleUnivalenceFailure::Squares)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{finset_skeleton_of, kleisli_double_cat, poset_category, spans_double_cat, square_double_cat, Poset, PowersetMonad};
    use crate::fincat::MapClass;
    use crate::twosided::disp_iso;

    fn injective_spans() -> DoubleCategory {
        spans_double_cat(&finset_skeleton_of(2, MapClass::INJECTIVE, 4).unwrap()).unwrap()
    }

    #[test]
    fn empty_double_category() {
        let d = DoubleCategory::empty();
        assert!(validate_double_category(&d).is_empty());
        assert!(check_univalent_double(&d).holds());
        assert!(is_strict(&d).holds());
        assert_eq!(from_unfolded(&to_unfolded(&d).unwrap()).unwrap(), d);
    }

    #[test]
    fn unfolded_round_trips() {
        let arrow = square_double_cat(&Arc::new(FinCategory::walking_arrow())).unwrap();
        let kleisli = kleisli_double_cat(&PowersetMonad, &crate::fincat::FinSetCategory::new(vec![2], MapClass::ALL, 4).unwrap()).unwrap();
        for d in [arrow, kleisli] {
            let u = to_unfolded(&d).unwrap();
            assert_eq!(from_unfolded(&u).unwrap(), d);
            assert_eq!(to_unfolded(&from_unfolded(&u).unwrap()).unwrap(), u);
        }
    }

    #[test]
    fn invalid_input_is_not_unfolded() {
        let mut d = injective_spans();
        let h = (0..d.hor_count()).find(|&h| d.lunitor(h).sq != d.lunitor(h).inv).unwrap_or(0);
        let st = d.lunitor(h);
        d.set_lunitor(h, StructuralSquare { sq: st.inv, inv: st.sq });
        assert!(matches!(to_unfolded(&d), Err(Error::LawViolation { .. })));
    }

    #[test]
    fn vertical_identity_is_neutral() {
        let d = injective_spans();
        for s in 0..d.square_count() {
            let m = d.square(s);
            assert_eq!(vcomp_sq(&d, s, d.vid(m.tgt)).unwrap(), s);
            assert_eq!(vcomp_sq(&d, d.vid(m.src), s).unwrap(), s);
        }
    }

    #[test]
    fn unitor_after_identity_composite() {
        let d = injective_spans();
        for h in 0..d.hor_count() {
            let (x, y) = d.hor(h);
            let ih = hcomp(&d, d.hid(x), h).unwrap();
            let l = d.square(d.lunitor(h).sq);
            assert_eq!((l.src, l.tgt), (ih, h));
            assert_eq!((l.f1, l.f2), (d.vertical().id(x), d.vertical().id(y)));
        }
    }

    #[test]
    fn mismatched_boundaries_are_named() {
        let d = square_double_cat(poset_category(&Poset::chain(3)).category()).unwrap();
        let (h, k) = (0..d.hor_count())
            .flat_map(|h| (0..d.hor_count()).map(move |k| (h, k)))
            .find(|&(h, k)| d.hor(h).1 != d.hor(k).0)
            .unwrap();
        let Err(Error::NotComposable(msg)) = hcomp(&d, h, k) else { panic!("composed non-adjacent morphisms") };
        assert!(msg.contains(&format!("target {}", d.hor(h).1)), "{msg}");
        assert!(matches!(hcomp(&d, 0, d.hor_count()), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn non_iso_associator_breaks_pentagon() {
        let base = injective_spans();
        let sq = base.squares().clone();
        let mut found = false;
        'entries: for ((a, b, c), st) in base.associator_entries() {
            for alt in (0..base.square_count()).filter(|&s| !disp_iso(&sq, s)) {
                let mut d = base.clone();
                d.set_associator(a, b, c, StructuralSquare { sq: alt, inv: st.inv });
                let r = validate_double_category(&d);
                if !r.mentions(crate::report::law::PENTAGON) {
                    continue;
                }
                let names = r.failing_laws();
                assert!(names.contains(&crate::report::law::ASSOCIATOR_ISO) || names.contains(&crate::report::law::ASSOCIATOR_TYPING));
                let entry = [a, b, c];
                assert!(r
                    .violations()
                    .iter()
                    .filter(|v| [crate::report::law::ASSOCIATOR_ISO, crate::report::law::ASSOCIATOR_TYPING].contains(&v.law))
                    .all(|v| v.witness.starts_with(&entry)));
                found = true;
                break 'entries;
            }
        }
        assert!(found);
    }

    #[test]
    fn automorphism_breaks_univalence() {
        let d = square_double_cat(&Arc::new(crate::examples::cyclic_group(2))).unwrap();
        match check_univalent_double(&d) {
            Decision::Fails(DoubleUnivalenceFailure::Vertical(w)) => assert_eq!(w.morphism, 1),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn strictness() {
        assert!(is_strict(&square_double_cat(poset_category(&Poset::diamond()).category()).unwrap()).holds());
        assert!(!is_strict(&injective_spans()).holds());
    }
}
