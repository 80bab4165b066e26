//! The five example double categories and the carriers they are built on.

mod carriers;
mod functors;
mod kleisli;
mod lenses;
mod monad;
mod spans;
mod squares;

pub use carriers::{cyclic_group, finset_skeleton, finset_skeleton_of, monoid_category, poset_category, Poset, PosetCategory};
pub use functors::{saturation_functor, square_functor};
pub use kleisli::{kleisli_compose, kleisli_double_cat, kleisli_extension};
pub use lenses::{compose_lenses, lenses_double_cat};
pub use monad::{lift_map, mult_map, unit_map, validate_monad, ExceptionMonad, FinSetMonad, IdentityMonad, PowersetMonad, ASSOC_LIMIT};
pub use spans::{spans_double_cat, structured_cospans_double_cat};
pub use squares::square_double_cat;
