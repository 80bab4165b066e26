//! Law reports and the registry of law names.
//!
//! Every validator walks the instances of each law it knows about and
//! records them in a [`LawReport`]. Passing instances are only counted;
//! failing ones are kept with the ids that identify the instance.

use serde::Serialize;
use std::fmt;

/// Which presentation layer a law belongs to. Reports keep laws in layer order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Layer {
    Category,
    Functor,
    TwoSided,
    HorizontalIdentity,
    HorizontalComposition,
    Structural,
    Coherence,
    LaxFunctor,
    Transformation,
    Monad,
}

/// A registered law: its name, layer and the equation it checks.
///
/// Composition is written diagrammatically: `f·g` is "f then g". `hsq` is
/// horizontal composition of squares, `hid_sq` the horizontal identity square
/// on a vertical morphism and `vid` the vertical identity square.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct LawInfo {
    pub name: &'static str,
    pub layer: Layer,
    pub statement: &'static str,
    /// True when the equation is the usual textbook form chosen here rather
    /// than one transcribed from a displayed diagram.
    pub standard_form: bool,
}

macro_rules! laws {
    ($( $id:ident = $name:literal, $layer:ident, $std:literal, $stmt:literal; )*) => {
        /// Law names, usable as keys into [`REGISTRY`].
        pub mod law {
            $( pub const $id: &str = $name; )*
        }
        /// All laws known to the validators, in layer order.
        pub const REGISTRY: &[LawInfo] = &[
            $( LawInfo { name: $name, layer: Layer::$layer, statement: $stmt, standard_form: $std }, )*
        ];
    };
}

laws! {
    CATEGORY_IDENTITY_TYPING = "category.identity_typing", Category, false, "id(x) : x -> x";
    CATEGORY_COMP_DEFINED = "category.comp_defined", Category, false, "f·g defined exactly when tgt f = src g";
    CATEGORY_COMP_TYPING = "category.comp_typing", Category, false, "f·g : src f -> tgt g";
    CATEGORY_LEFT_UNIT = "category.left_unit", Category, false, "id(src f)·f = f";
    CATEGORY_RIGHT_UNIT = "category.right_unit", Category, false, "f·id(tgt f) = f";
    CATEGORY_ASSOC = "category.assoc", Category, false, "(f·g)·h = f·(g·h)";

    FUNCTOR_TYPING = "functor.typing", Functor, false, "F f : F(src f) -> F(tgt f)";
    FUNCTOR_IDENTITY = "functor.identity", Functor, false, "F(id x) = id(F x)";
    FUNCTOR_COMPOSITION = "functor.composition", Functor, false, "F(f·g) = F f·F g";
    NAT_TRANS_TYPING = "nat_trans.typing", Functor, false, "t(x) : F x -> G x";
    NAT_TRANS_NATURALITY = "nat_trans.naturality", Functor, false, "F f·t(y) = t(x)·G f";

    TWOSIDED_MORPHISM_TYPING = "twosided.morphism_typing", TwoSided, false, "a square over (f1, f2) runs between displayed objects over the endpoints of f1 and f2";
    TWOSIDED_IDENTITY_TYPING = "twosided.identity_typing", TwoSided, false, "id(a) : a -> a over (id, id)";
    TWOSIDED_COMP_DEFINED = "twosided.comp_defined", TwoSided, false, "s·t defined exactly when tgt s = src t";
    TWOSIDED_COMP_TYPING = "twosided.comp_typing", TwoSided, false, "s·t : src s -> tgt t over (f1·g1, f2·g2)";
    TWOSIDED_LEFT_UNIT = "twosided.left_unit", TwoSided, false, "id·s = s";
    TWOSIDED_RIGHT_UNIT = "twosided.right_unit", TwoSided, false, "s·id = s";
    TWOSIDED_ASSOC = "twosided.assoc", TwoSided, false, "(s·t)·u = s·(t·u)";

    DISP_FUNCTOR_OBJECT_TYPING = "disp_functor.object_typing", Functor, false, "F a lies over (F1 x1, F2 x2)";
    DISP_FUNCTOR_MORPHISM_TYPING = "disp_functor.morphism_typing", Functor, false, "F s : F(src s) -> F(tgt s) over (F1 f1, F2 f2)";
    DISP_FUNCTOR_IDENTITY = "disp_functor.identity", Functor, false, "F(id a) = id(F a)";
    DISP_FUNCTOR_COMPOSITION = "disp_functor.composition", Functor, false, "F(s·t) = F s·F t";
    DISP_NAT_TRANS_TYPING = "disp_nat_trans.typing", Functor, false, "t(a) : F a -> G a over (t1 x1, t2 x2)";
    DISP_NAT_TRANS_NATURALITY = "disp_nat_trans.naturality", Functor, false, "F s·t(b) = t(a)·G s";

    HID_OBJECT_TYPING = "hid.object_typing", HorizontalIdentity, false, "hid(x) : x -|-> x";
    HID_SQUARE_TYPING = "hid.square_typing", HorizontalIdentity, false, "hid_sq(v) : hid(x) -> hid(y) over (v, v)";
    HID_IDENTITY = "hid.identity", HorizontalIdentity, false, "hid_sq(id x) = vid(hid x)";
    HID_COMPOSITION = "hid.composition", HorizontalIdentity, false, "hid_sq(v·w) = hid_sq(v)·hid_sq(w)";

    HCOMP_DEFINED = "hcomp.defined", HorizontalComposition, false, "h⊙k defined exactly when h and k are adjacent";
    HCOMP_OBJECT_TYPING = "hcomp.object_typing", HorizontalComposition, false, "h⊙k : x -|-> z for h : x -|-> y, k : y -|-> z";
    HCOMP_SQUARE_DEFINED = "hcomp.square_defined", HorizontalComposition, false, "hsq(s, t) defined exactly when s and t are adjacent";
    HCOMP_SQUARE_TYPING = "hcomp.square_typing", HorizontalComposition, false, "hsq(s, t) : h⊙k -> h'⊙k' over (left s, right t)";
    HCOMP_IDENTITY = "hcomp.identity", HorizontalComposition, false, "hsq(vid h, vid k) = vid(h⊙k)";
    INTERCHANGE = "interchange", HorizontalComposition, false, "hsq(s1·t1, s2·t2) = hsq(s1, s2)·hsq(t1, t2)";

    LUNITOR_TYPING = "lunitor.typing", Structural, false, "lambda(h) : hid(x)⊙h -> h over (id, id), with inverse typed the other way";
    LUNITOR_ISO = "lunitor.iso", Structural, false, "lambda(h)·lambda_inv(h) = vid and lambda_inv(h)·lambda(h) = vid";
    LUNITOR_NATURALITY = "lunitor.naturality", Structural, true, "hsq(hid_sq v, s)·lambda(k) = lambda(h)·s for s : h -> k over (v, w)";
    RUNITOR_TYPING = "runitor.typing", Structural, false, "rho(h) : h⊙hid(y) -> h over (id, id), with inverse typed the other way";
    RUNITOR_ISO = "runitor.iso", Structural, false, "rho(h)·rho_inv(h) = vid and rho_inv(h)·rho(h) = vid";
    RUNITOR_NATURALITY = "runitor.naturality", Structural, true, "hsq(s, hid_sq w)·rho(k) = rho(h)·s for s : h -> k over (v, w)";
    ASSOCIATOR_TYPING = "associator.typing", Structural, false, "alpha(h1, h2, h3) : h1⊙(h2⊙h3) -> (h1⊙h2)⊙h3 over (id, id), with inverse typed the other way";
    ASSOCIATOR_ISO = "associator.iso", Structural, false, "alpha·alpha_inv = vid and alpha_inv·alpha = vid";
    ASSOCIATOR_NATURALITY = "associator.naturality", Structural, true, "hsq(s1, hsq(s2, s3))·alpha(k1, k2, k3) = alpha(h1, h2, h3)·hsq(hsq(s1, s2), s3)";

    TRIANGLE = "triangle", Coherence, false, "hsq(vid h, lambda(k)) = alpha(h, hid y, k)·hsq(rho(h), vid k)";
    PENTAGON = "pentagon", Coherence, false, "alpha(h1, h2, h3⊙h4)·alpha(h1⊙h2, h3, h4) = hsq(vid h1, alpha(h2, h3, h4))·alpha(h1, h2⊙h3, h4)·hsq(alpha(h1, h2, h3), vid h4)";

    LAX_ID_TYPING = "lax.id_comparison.typing", LaxFunctor, false, "phi(x) : hid(F x) -> F(hid x) over (id, id)";
    LAX_COMP_DEFINED = "lax.comp_comparison.defined", LaxFunctor, false, "phi(h, k) given for every adjacent pair";
    LAX_COMP_TYPING = "lax.comp_comparison.typing", LaxFunctor, false, "phi(h, k) : F h⊙F k -> F(h⊙k) over (id, id)";
    LAX_ID_NATURALITY = "lax.id_comparison.naturality", LaxFunctor, true, "hid_sq(F v)·phi(y) = phi(x)·F(hid_sq v)";
    LAX_COMP_NATURALITY = "lax.comp_comparison.naturality", LaxFunctor, true, "hsq(F s, F t)·phi(h', k') = phi(h, k)·F(hsq(s, t))";
    LAX_LUNITOR = "lax.lunitor", LaxFunctor, true, "hsq(phi(x), vid F h)·phi(hid x, h)·F(lambda h) = lambda(F h)";
    LAX_RUNITOR = "lax.runitor", LaxFunctor, true, "hsq(vid F h, phi(y))·phi(h, hid y)·F(rho h) = rho(F h)";
    LAX_ASSOCIATOR = "lax.associator", LaxFunctor, true, "hsq(vid F h1, phi(h2, h3))·phi(h1, h2⊙h3)·F(alpha) = alpha(F h1, F h2, F h3)·hsq(phi(h1, h2), vid F h3)·phi(h1⊙h2, h3)";

    TRANSFORMATION_ID = "transformation.id_compat", Transformation, true, "phi_F(x)·t(hid x) = hid_sq(t x)·phi_G(x)";
    TRANSFORMATION_COMP = "transformation.comp_compat", Transformation, true, "phi_F(h, k)·t(h⊙k) = hsq(t h, t k)·phi_G(h, k)";

    MONAD_FUNCTOR_IDENTITY = "monad.functor_identity", Monad, false, "T(id) = id";
    MONAD_FUNCTOR_COMPOSITION = "monad.functor_composition", Monad, false, "T(f·g) = T f·T g";
    MONAD_UNIT_NATURALITY = "monad.unit_naturality", Monad, false, "eta·T f = f·eta";
    MONAD_MULT_NATURALITY = "monad.mult_naturality", Monad, false, "mu·T f = T T f·mu";
    MONAD_LEFT_UNIT = "monad.left_unit", Monad, false, "eta(T x)·mu(x) = id";
    MONAD_RIGHT_UNIT = "monad.right_unit", Monad, false, "T(eta x)·mu(x) = id";
    MONAD_ASSOC = "monad.assoc", Monad, false, "mu(T x)·mu(x) = T(mu x)·mu(x)";
}

/// Looks up a registered law by name.
pub fn law_info(name: &str) -> Option<&'static LawInfo> {
    REGISTRY.iter().find(|l| l.name == name)
}

/// How an instance of an equation came out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Holds,
    /// Both sides are defined and well typed but differ.
    Fails,
    /// Some composite on one side is missing from the tables.
    Undefined,
    /// Both sides exist but their boundaries differ. This means a lower
    /// layer is already broken, so it is reported apart from `Fails`.
    BoundaryMismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub law: &'static str,
    pub witness: Vec<usize>,
    pub kind: Outcome,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}", self.law, self.witness)?;
        match self.kind {
            Outcome::Undefined => write!(f, " undefined")?,
            Outcome::BoundaryMismatch => write!(f, " boundary mismatch")?,
            _ => {}
        }
        if !self.detail.is_empty() {
            write!(f, ": {}", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub law: &'static str,
    pub checked: u64,
    pub failed: u64,
    /// Instances that exist but were too large to enumerate.
    pub skipped: u64,
}

/// Handle to a law's tally inside a report.
#[derive(Clone, Copy, Debug)]
pub struct LawSlot(usize);

/// Outcome of running a validator.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    tallies: Vec<Tally>,
    violations: Vec<Violation>,
}

impl LawReport {
    pub fn new() -> Self {
        Self::default()
    }

    /// Registers `name` (if new) and returns its slot.
    pub fn law(&mut self, name: &'static str) -> LawSlot {
        if let Some(i) = self.tallies.iter().position(|t| t.law == name) {
            return LawSlot(i);
        }
        self.tallies.push(Tally { law: name, checked: 0, failed: 0, skipped: 0 });
        LawSlot(self.tallies.len() - 1)
    }

    pub fn pass(&mut self, slot: LawSlot) {
        self.tallies[slot.0].checked += 1;
    }

    pub fn skip(&mut self, slot: LawSlot, count: u64) {
        self.tallies[slot.0].skipped += count;
    }

    pub fn fail(&mut self, slot: LawSlot, witness: Vec<usize>, kind: Outcome, detail: String) {
        let t = &mut self.tallies[slot.0];
        t.checked += 1;
        t.failed += 1;
        self.violations.push(Violation { law: t.law, witness, kind, detail });
    }

    /// Records a boolean instance; the witness is only built on failure.
    pub fn check<F>(&mut self, slot: LawSlot, ok: bool, witness: F)
    where
        F: FnOnce() -> (Vec<usize>, String),
    {
        self.record(slot, if ok { Outcome::Holds } else { Outcome::Fails }, witness);
    }

    pub fn record<F>(&mut self, slot: LawSlot, outcome: Outcome, witness: F)
    where
        F: FnOnce() -> (Vec<usize>, String),
    {
        if outcome == Outcome::Holds {
            self.pass(slot);
        } else {
            let (w, d) = witness();
            self.fail(slot, w, outcome, d);
        }
    }

    /// Appends another report, keeping the order of first appearance.
    pub fn merge(&mut self, other: LawReport) {
        for t in other.tallies {
            let slot = self.law(t.law);
            let mine = &mut self.tallies[slot.0];
            mine.checked += t.checked;
            mine.failed += t.failed;
            mine.skipped += t.skipped;
        }
        self.violations.extend(other.violations);
    }

    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn tallies(&self) -> &[Tally] {
        &self.tallies
    }

    pub fn tally(&self, law: &str) -> Option<&Tally> {
        self.tallies.iter().find(|t| t.law == law)
    }

    pub fn instances_checked(&self) -> u64 {
        self.tallies.iter().map(|t| t.checked).sum()
    }

    /// Names of the laws with at least one violation, in report order.
    pub fn failing_laws(&self) -> Vec<&'static str> {
        self.tallies.iter().filter(|t| t.failed > 0).map(|t| t.law).collect()
    }

    pub fn mentions(&self, law: &str) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    /// Violations sorted by law name, then witness ids.
    pub fn sorted_violations(&self) -> Vec<&Violation> {
        let mut v: Vec<&Violation> = self.violations.iter().collect();
        v.sort_by(|a, b| a.law.cmp(b.law).then_with(|| a.witness.cmp(&b.witness)));
        v
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut tallies = self.tallies.clone();
        tallies.sort_by(|a, b| a.law.cmp(b.law));
        serde_json::json!({
            "ok": self.is_empty(),
            "instances": self.instances_checked(),
            "violations": self.sorted_violations(),
            "laws": tallies,
        })
    }

    /// First violation rendered as text, for error messages.
    pub(crate) fn first_violation(&self) -> String {
        self.violations.first().map(|v| v.to_string()).unwrap_or_default()
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tallies {
            write!(f, "{:<34} {:>10} checked", t.law, t.checked)?;
            if t.failed > 0 {
                write!(f, ", {} failed", t.failed)?;
            }
            if t.skipped > 0 {
                write!(f, ", {} skipped", t.skipped)?;
            }
            writeln!(f)?;
        }
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        if self.is_empty() {
            writeln!(f, "all {} instances hold", self.instances_checked())?;
        } else {
            writeln!(f, "{} violation(s)", self.violations.len())?;
        }
        Ok(())
    }
}

/// A yes/no decision with a witness explaining a negative answer.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Decision<W> {
    Holds,
    Fails(W),
}

impl<W> Decision<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Decision::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Decision::Holds => None,
            Decision::Fails(w) => Some(w),
        }
    }

    pub fn map<V>(self, f: impl FnOnce(W) -> V) -> Decision<V> {
        match self {
            Decision::Holds => Decision::Holds,
            Decision::Fails(w) => Decision::Fails(f(w)),
        }
    }
}
