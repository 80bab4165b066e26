//! Chosen pullbacks and pushouts, and exhaustive checks of their universal properties.

use super::{FinCategory, MorId, ObjId};
use crate::error::Result;
use serde::Serialize;
use std::sync::Arc;

/// Which limits a computed category provides.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ChosenLimits {
    pub products: bool,
    pub pullbacks: bool,
    pub pushouts: bool,
}

/// A pullback cone `A <-left- apex -right-> B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cone {
    pub apex: ObjId,
    pub left: MorId,
    pub right: MorId,
}

/// A pushout cocone `A -left-> apex <-right- B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cocone {
    pub apex: ObjId,
    pub left: MorId,
    pub right: MorId,
}

pub trait ChosenPullbacks {
    fn category(&self) -> &Arc<FinCategory>;
    /// The chosen pullback of `A -f-> C <-g- B`.
    fn pullback(&self, f: MorId, g: MorId) -> Result<Cone>;
}

pub trait ChosenPushouts {
    fn category(&self) -> &Arc<FinCategory>;
    /// The chosen pushout of `A <-f- C -g-> B`.
    fn pushout(&self, f: MorId, g: MorId) -> Result<Cocone>;
}

/// Least-index `m : w -> apex` with `m·left = a` and `m·right = b`.
pub fn find_mediator(c: &FinCategory, cone: &Cone, w: ObjId, a: MorId, b: MorId) -> Option<MorId> {
    c.hom(w, cone.apex)
        .find(|&m| c.compose(m, cone.left) == Some(a) && c.compose(m, cone.right) == Some(b))
}

/// Least-index `m : apex -> w` with `left·m = a` and `right·m = b`.
pub fn find_comediator(c: &FinCategory, cocone: &Cocone, w: ObjId, a: MorId, b: MorId) -> Option<MorId> {
    c.hom(cocone.apex, w)
        .find(|&m| c.compose(cocone.left, m) == Some(a) && c.compose(cocone.right, m) == Some(b))
}

/// Checks that `cone` commutes over `f, g` and that every cone in `c` factors
/// through it uniquely.
pub fn verify_pullback(c: &FinCategory, f: MorId, g: MorId, cone: &Cone) -> bool {
    if c.compose(cone.left, f).is_none() || c.compose(cone.left, f) != c.compose(cone.right, g) {
        return false;
    }
    let (a, b) = (c.src(f), c.src(g));
    (0..c.object_count()).all(|w| {
        c.hom(w, a).all(|p| {
            c.hom(w, b).all(|q| {
                if c.compose(p, f) != c.compose(q, g) {
                    return true;
                }
                let n = c
                    .hom(w, cone.apex)
                    .filter(|&m| c.compose(m, cone.left) == Some(p) && c.compose(m, cone.right) == Some(q))
                    .count();
                n == 1
            })
        })
    })
}

/// Dual of [`verify_pullback`].
pub fn verify_pushout(c: &FinCategory, f: MorId, g: MorId, cocone: &Cocone) -> bool {
    if c.compose(f, cocone.left).is_none() || c.compose(f, cocone.left) != c.compose(g, cocone.right) {
        return false;
    }
    let (a, b) = (c.tgt(f), c.tgt(g));
    (0..c.object_count()).all(|w| {
        c.hom(a, w).all(|p| {
            c.hom(b, w).all(|q| {
                if c.compose(f, p) != c.compose(g, q) {
                    return true;
                }
                let n = c
                    .hom(cocone.apex, w)
                    .filter(|&m| c.compose(cocone.left, m) == Some(p) && c.compose(cocone.right, m) == Some(q))
                    .count();
                n == 1
            })
        })
    })
}
