//! The law suite, run one layer at a time.

use super::{DoubleCategory, HorId, SquareId, StructuralSquare};
use crate::fincat::validate_category;
use crate::report::{law, LawReport, LawSlot, Outcome};
use crate::twosided::{validate_twosided, DispMor};

/// Checks every law instance enumerable from the tables: the vertical
/// category, the squares, horizontal identities and composition with
/// interchange, the unitors and associator, then triangle and pentagon.
pub fn validate_double_category(d: &DoubleCategory) -> LawReport {
    let mut r = validate_category(d.vertical());
    r.merge(validate_twosided(d.squares()));
    let mut c = Checker { d, r };
    c.horizontal_identity();
    c.horizontal_composition();
    c.interchange();
    c.unitors();
    c.associator();
    c.triangle();
    c.pentagon();
    c.r
}

struct Checker<'a> {
    d: &'a DoubleCategory,
    r: LawReport,
}

impl Checker<'_> {
    fn v(&self, a: Option<SquareId>, b: Option<SquareId>) -> Option<SquareId> {
        self.d.vcomp(a?, b?)
    }

    fn h(&self, a: Option<SquareId>, b: Option<SquareId>) -> Option<SquareId> {
        self.d.hcomp_sq(a?, b?)
    }

    fn hor(&self, a: Option<HorId>, b: Option<HorId>) -> Option<HorId> {
        self.d.hcomp(a?, b?)
    }

    fn compare(&self, lhs: Option<SquareId>, rhs: Option<SquareId>) -> Outcome {
        self.d.squares().compare(lhs, rhs)
    }

    fn record_eq<F>(&mut self, slot: LawSlot, lhs: Option<SquareId>, rhs: Option<SquareId>, witness: F)
    where
        F: FnOnce() -> Vec<usize>,
    {
        let outcome = self.compare(lhs, rhs);
        self.r.record(slot, outcome, || (witness(), format!("lhs {lhs:?}, rhs {rhs:?}")));
    }

    fn horizontal_identity(&mut self) {
        let d = self.d;
        let v = d.vertical();
        let obj = self.r.law(law::HID_OBJECT_TYPING);
        let sq = self.r.law(law::HID_SQUARE_TYPING);
        let ident = self.r.law(law::HID_IDENTITY);
        let comp = self.r.law(law::HID_COMPOSITION);
        for x in 0..v.object_count() {
            let h = d.hid(x);
            self.r.check(obj, d.hor(h) == (x, x), || (vec![x], format!("hid({x}) = {h} : {:?}", d.hor(h))));
        }
        for f in 0..v.morphism_count() {
            let s = d.hid_sq(f);
            let want = DispMor { f1: f, f2: f, src: d.hid(v.src(f)), tgt: d.hid(v.tgt(f)) };
            let got = d.square(s);
            self.r.check(sq, got == want, || (vec![f], format!("hid_sq({f}) = {s} with boundary {got:?}")));
        }
        for x in 0..v.object_count() {
            let lhs = Some(d.hid_sq(v.id(x)));
            let rhs = Some(d.vid(d.hid(x)));
            self.record_eq(ident, lhs, rhs, || vec![x]);
        }
        for (f, g, fg) in v.table().iter() {
            let lhs = fg.map(|fg| d.hid_sq(fg));
            let rhs = d.vcomp(d.hid_sq(f), d.hid_sq(g));
            self.record_eq(comp, lhs, rhs, || vec![f, g]);
        }
    }

    fn horizontal_composition(&mut self) {
        let d = self.d;
        let defined = self.r.law(law::HCOMP_DEFINED);
        let typing = self.r.law(law::HCOMP_OBJECT_TYPING);
        let sq_defined = self.r.law(law::HCOMP_SQUARE_DEFINED);
        let sq_typing = self.r.law(law::HCOMP_SQUARE_TYPING);
        let ident = self.r.law(law::HCOMP_IDENTITY);

        for &(h, k, hk) in d.hcomp_table().stray() {
            self.r.fail(defined, vec![h, k], Outcome::Fails, format!("entry {hk} stored for non-adjacent pair"));
        }
        for (h, k, hk) in d.hcomp_table().iter() {
            let Some(hk) = hk else {
                self.r.fail(defined, vec![h, k], Outcome::Undefined, "adjacent pair has no composite".into());
                continue;
            };
            self.r.pass(defined);
            let want = (d.hor(h).0, d.hor(k).1);
            self.r.check(typing, d.hor(hk) == want, || (vec![h, k], format!("{h}⊙{k} = {hk} : {:?}", d.hor(hk))));
        }

        for &(s, t, st) in d.hcomp_sq_table().stray() {
            self.r.fail(sq_defined, vec![s, t], Outcome::Fails, format!("entry {st} stored for non-adjacent pair"));
        }
        for (s, t, st) in d.hcomp_sq_table().iter() {
            let Some(st) = st else {
                self.r.fail(sq_defined, vec![s, t], Outcome::Undefined, "adjacent squares have no composite".into());
                continue;
            };
            self.r.pass(sq_defined);
            let (ms, mt, m) = (d.square(s), d.square(t), d.square(st));
            let want = (Some(m.src), Some(m.tgt), m.f1, m.f2);
            let got = (d.hcomp(ms.src, mt.src), d.hcomp(ms.tgt, mt.tgt), ms.f1, mt.f2);
            self.r.check(sq_typing, want == got, || (vec![s, t], format!("hsq({s}, {t}) = {st} with boundary {m:?}")));
        }

        for (h, k, hk) in d.hcomp_table().iter() {
            let lhs = d.hcomp_sq(d.vid(h), d.vid(k));
            let rhs = hk.map(|hk| d.vid(hk));
            self.record_eq(ident, lhs, rhs, || vec![h, k]);
        }
    }

    fn interchange(&mut self) {
        let d = self.d;
        let slot = self.r.law(law::INTERCHANGE);
        let sq = d.squares();
        for s1 in 0..d.square_count() {
            let m1 = d.square(s1);
            for &s2 in d.squares_left_of(m1.f2) {
                let m2 = d.square(s2);
                let top = d.hcomp_sq(s1, s2);
                for &t1 in sq.out(m1.tgt) {
                    let n1 = d.square(t1);
                    let left = d.vcomp(s1, t1);
                    for &t2 in sq.out(m2.tgt) {
                        if d.square(t2).f1 != n1.f2 {
                            continue;
                        }
                        let lhs = self.h(left, d.vcomp(s2, t2));
                        let rhs = self.v(top, d.hcomp_sq(t1, t2));
                        self.record_eq(slot, lhs, rhs, || vec![s1, s2, t1, t2]);
                    }
                }
            }
        }
    }

    /// Records typing and iso-ness of one structural square.
    fn structural(&mut self, typing: LawSlot, iso: LawSlot, key: Vec<usize>, st: StructuralSquare, src: Option<HorId>, tgt: HorId) {
        let d = self.d;
        let (x, y) = d.hor(tgt);
        let v = d.vertical();
        let (ix, iy) = (v.id(x), v.id(y));
        let Some(src) = src else {
            self.r.fail(typing, key, Outcome::Undefined, "source of the structural square is not defined".into());
            return;
        };
        let ok = d.square(st.sq) == DispMor { f1: ix, f2: iy, src, tgt }
            && d.square(st.inv) == DispMor { f1: ix, f2: iy, src: tgt, tgt: src };
        self.r.check(typing, ok, || {
            (key.clone(), format!("square {} and inverse {} over {:?}, expected {src} -> {tgt}", st.sq, st.inv, d.square(st.sq)))
        });
        let a = self.compare(d.vcomp(st.sq, st.inv), Some(d.vid(src)));
        let b = self.compare(d.vcomp(st.inv, st.sq), Some(d.vid(tgt)));
        let outcome = if a != Outcome::Holds { a } else { b };
        self.r.record(iso, outcome, || (key, format!("square {} with stored inverse {}", st.sq, st.inv)));
    }

    fn unitors(&mut self) {
        let d = self.d;
        let lt = self.r.law(law::LUNITOR_TYPING);
        let li = self.r.law(law::LUNITOR_ISO);
        let ln = self.r.law(law::LUNITOR_NATURALITY);
        let rt = self.r.law(law::RUNITOR_TYPING);
        let ri = self.r.law(law::RUNITOR_ISO);
        let rn = self.r.law(law::RUNITOR_NATURALITY);
        for h in 0..d.hor_count() {
            let (x, y) = d.hor(h);
            self.structural(lt, li, vec![h], d.lunitor(h), d.hcomp(d.hid(x), h), h);
            self.structural(rt, ri, vec![h], d.runitor(h), d.hcomp(h, d.hid(y)), h);
        }
        for s in 0..d.square_count() {
            let m = d.square(s);
            let lhs = self.v(d.hcomp_sq(d.hid_sq(m.f1), s), Some(d.lunitor(m.tgt).sq));
            let rhs = d.vcomp(d.lunitor(m.src).sq, s);
            self.record_eq(ln, lhs, rhs, || vec![s]);
            let lhs = self.v(d.hcomp_sq(s, d.hid_sq(m.f2)), Some(d.runitor(m.tgt).sq));
            let rhs = d.vcomp(d.runitor(m.src).sq, s);
            self.record_eq(rn, lhs, rhs, || vec![s]);
        }
    }

    fn associator(&mut self) {
        let d = self.d;
        let typing = self.r.law(law::ASSOCIATOR_TYPING);
        let iso = self.r.law(law::ASSOCIATOR_ISO);
        let nat = self.r.law(law::ASSOCIATOR_NATURALITY);
        for ((a, b, c), st) in d.associator_entries() {
            let src = self.hor(Some(a), d.hcomp(b, c));
            let tgt = self.hor(d.hcomp(a, b), Some(c));
            match tgt {
                Some(tgt) => self.structural(typing, iso, vec![a, b, c], st, src, tgt),
                None => self.r.fail(typing, vec![a, b, c], Outcome::Undefined, "target of the associator is not defined".into()),
            }
        }
        let alpha = |a: HorId, b: HorId, c: HorId| d.associator(a, b, c).map(|s| s.sq);
        for s1 in 0..d.square_count() {
            let m1 = d.square(s1);
            for &s2 in d.squares_left_of(m1.f2) {
                let m2 = d.square(s2);
                let s12 = d.hcomp_sq(s1, s2);
                for &s3 in d.squares_left_of(m2.f2) {
                    let m3 = d.square(s3);
                    let lhs = self.v(self.h(Some(s1), d.hcomp_sq(s2, s3)), alpha(m1.tgt, m2.tgt, m3.tgt));
                    let rhs = self.v(alpha(m1.src, m2.src, m3.src), self.h(s12, Some(s3)));
                    self.record_eq(nat, lhs, rhs, || vec![s1, s2, s3]);
                }
            }
        }
    }

    fn triangle(&mut self) {
        let d = self.d;
        let slot = self.r.law(law::TRIANGLE);
        for (h, k, _) in d.hcomp_table().iter() {
            let y = d.hor(h).1;
            let lhs = d.hcomp_sq(d.vid(h), d.lunitor(k).sq);
            let alpha = d.associator(h, d.hid(y), k).map(|s| s.sq);
            let rhs = self.v(alpha, d.hcomp_sq(d.runitor(h).sq, d.vid(k)));
            self.record_eq(slot, lhs, rhs, || vec![h, k]);
        }
    }

    fn pentagon(&mut self) {
        let d = self.d;
        let slot = self.r.law(law::PENTAGON);
        let alpha = |a: Option<HorId>, b: Option<HorId>, c: Option<HorId>| d.associator(a?, b?, c?).map(|s| s.sq);
        let vid = |h: Option<HorId>| h.map(|h| d.vid(h));
        for ((h1, h2, h3), _) in d.associator_table().iter(d.hcomp_table()) {
            let (h12, h23) = (d.hcomp(h1, h2), d.hcomp(h2, h3));
            let a123 = alpha(Some(h1), Some(h2), Some(h3));
            for &h4 in d.hor_out(d.hor(h3).1) {
                let h34 = d.hcomp(h3, h4);
                let lhs = self.v(alpha(Some(h1), Some(h2), h34), alpha(h12, Some(h3), Some(h4)));
                let rhs = self.v(
                    self.v(self.h(vid(Some(h1)), alpha(Some(h2), Some(h3), Some(h4))), alpha(Some(h1), h23, Some(h4))),
                    self.h(a123, vid(Some(h4))),
                );
                self.record_eq(slot, lhs, rhs, || vec![h1, h2, h3, h4]);
            }
        }
    }
}
