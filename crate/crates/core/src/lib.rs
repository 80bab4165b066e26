//! Finite pseudo double categories.
//!
//! A double category is assembled in layers: a vertical [`FinCategory`], a
//! [`TwoSidedDispCat`] of horizontal morphisms and squares over it, then
//! horizontal identities and composition, then unitor and associator squares.
//! Every layer comes with an exhaustive validator that returns a
//! [`LawReport`].

pub mod dblfunctor;
pub mod doublecat;
pub mod error;
pub mod examples;
pub mod fincat;
pub mod json;
pub mod report;
pub mod table;
pub mod twosided;

pub use doublecat::{validate_double_category, DoubleCategory};
pub use error::{Error, Result};
pub use fincat::{FinCategory, FinFunctor, FinNatTrans, MorId, ObjId};
pub use report::{Decision, LawReport, Outcome};
pub use twosided::{DispMorId, DispObjId, TwoSidedDispCat};
