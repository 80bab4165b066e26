//! Carrier categories: finite-set skeletons, posets and monoids.

use crate::error::{Error, Result};
use crate::fincat::{ChosenPullbacks, ChosenPushouts, Cocone, Cone, FinCategory, FinSetCategory, MapClass, MorId, ObjId};
use crate::table::Edge;
use std::sync::Arc;

/// Finite sets of sizes `0..=n` with all functions between them.
pub fn finset_skeleton(n: usize, bound: usize) -> Result<FinSetCategory> {
    finset_skeleton_of(n, MapClass::ALL, bound)
}

/// Finite sets of sizes `0..=n` with the functions of `class`.
pub fn finset_skeleton_of(n: usize, class: MapClass, bound: usize) -> Result<FinSetCategory> {
    if n > bound {
        return Err(Error::ObjectOutOfBounds { size: n, bound });
    }
    FinSetCategory::new((0..=n).collect(), class, bound)
}

/// A finite partial order, `leq[x * n + y]` meaning `x <= y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
}

impl Poset {
    /// Checks reflexivity, antisymmetry and transitivity.
    pub fn new(n: usize, leq: Vec<bool>) -> Result<Self> {
        if leq.len() != n * n {
            return Err(Error::LengthMismatch { table: "leq", expected: n * n, found: leq.len() });
        }
        let p = Poset { n, leq };
        for x in 0..n {
            if !p.leq(x, x) {
                return Err(Error::InvalidInput(format!("relation is not reflexive at {x}")));
            }
            for y in 0..n {
                if x != y && p.leq(x, y) && p.leq(y, x) {
                    return Err(Error::InvalidInput(format!("relation is not antisymmetric at ({x}, {y})")));
                }
                for z in 0..n {
                    if p.leq(x, y) && p.leq(y, z) && !p.leq(x, z) {
                        return Err(Error::InvalidInput(format!("relation is not transitive at ({x}, {y}, {z})")));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Builds the order from a predicate.
    pub fn from_fn(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        Poset::new(n, (0..n * n).map(|i| leq(i / n, i % n)).collect())
    }

    /// `0 < 1 < ... < n-1`.
    pub fn chain(n: usize) -> Self {
        Poset::from_fn(n, |x, y| x <= y).expect("chain")
    }

    /// Subsets of a `k`-element set under inclusion, as bitmasks.
    pub fn subsets(k: usize) -> Self {
        Poset::from_fn(1 << k, |x, y| x & !y == 0).expect("subset lattice")
    }

    /// The diamond `0 < 1, 2, 3 < 4` with 1, 2, 3 pairwise incomparable.
    pub fn diamond() -> Self {
        Poset::from_fn(5, |x, y| x == y || x == 0 || y == 4).expect("diamond")
    }

    /// The divisors of `n`, ordered by divisibility, listed in increasing order.
    pub fn divisors(n: usize) -> Self {
        let d: Vec<usize> = (1..=n).filter(|k| n.is_multiple_of(*k)).collect();
        Poset::from_fn(d.len(), |x, y| d[y].is_multiple_of(d[x])).expect("divisor lattice")
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x * self.n + y]
    }

    /// Greatest lower bound, when it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        let lower: Vec<usize> = (0..self.n).filter(|&z| self.leq(z, x) && self.leq(z, y)).collect();
        lower.iter().copied().find(|&m| lower.iter().all(|&z| self.leq(z, m)))
    }

    /// Least upper bound, when it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        let upper: Vec<usize> = (0..self.n).filter(|&z| self.leq(x, z) && self.leq(y, z)).collect();
        upper.iter().copied().find(|&m| upper.iter().all(|&z| self.leq(m, z)))
    }

    /// The order with `<=` reversed.
    pub fn opposite(&self) -> Self {
        Poset::from_fn(self.n, |x, y| self.leq(y, x)).expect("opposite of a poset")
    }
}

/// A poset viewed as a category: one morphism `x -> y` exactly when `x <= y`.
/// Pullbacks are meets and pushouts are joins.
#[derive(Clone, Debug)]
pub struct PosetCategory {
    poset: Poset,
    cat: Arc<FinCategory>,
    index: Vec<Option<MorId>>,
}

impl PosetCategory {
    pub fn new(poset: Poset) -> Self {
        let n = poset.len();
        let mut arrows = Vec::new();
        let mut index = vec![None; n * n];
        for x in 0..n {
            for y in 0..n {
                if poset.leq(x, y) {
                    index[x * n + y] = Some(arrows.len());
                    arrows.push(Edge::new(x, y));
                }
            }
        }
        let identity = (0..n).map(|x| index[x * n + x].expect("reflexive")).collect();
        let ends = arrows.clone();
        let cat = FinCategory::from_fn(n, arrows, identity, |f, g| index[ends[f].src * n + ends[g].tgt])
            .expect("poset category");
        PosetCategory { poset, cat: Arc::new(cat), index }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    /// The morphism `x -> y`, if `x <= y`.
    pub fn arrow(&self, x: ObjId, y: ObjId) -> Option<MorId> {
        self.index[x * self.poset.len() + y]
    }
}

/// The category of a finite poset.
pub fn poset_category(p: &Poset) -> PosetCategory {
    PosetCategory::new(p.clone())
}

impl ChosenPullbacks for PosetCategory {
    fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    fn pullback(&self, f: MorId, g: MorId) -> Result<Cone> {
        let (a, b) = (self.cat.src(f), self.cat.src(g));
        if self.cat.tgt(f) != self.cat.tgt(g) {
            return Err(Error::CodomainMismatch { left: self.cat.tgt(f), right: self.cat.tgt(g) });
        }
        let m = self.poset.meet(a, b).ok_or_else(|| Error::PullbackUnavailable(format!("{a} and {b} have no meet")))?;
        Ok(Cone { apex: m, left: self.arrow(m, a).expect("meet below"), right: self.arrow(m, b).expect("meet below") })
    }
}

impl ChosenPushouts for PosetCategory {
    fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    fn pushout(&self, f: MorId, g: MorId) -> Result<Cocone> {
        let (a, b) = (self.cat.tgt(f), self.cat.tgt(g));
        if self.cat.src(f) != self.cat.src(g) {
            return Err(Error::DomainMismatch { left: self.cat.src(f), right: self.cat.src(g) });
        }
        let j = self.poset.join(a, b).ok_or_else(|| Error::PushoutUnavailable(format!("{a} and {b} have no join")))?;
        Ok(Cocone { apex: j, left: self.arrow(a, j).expect("join above"), right: self.arrow(b, j).expect("join above") })
    }
}

/// The one-object category of a monoid with multiplication `table[a * n + b] = a·b`.
/// The unit is found by search and becomes the identity morphism.
pub fn monoid_category(n: usize, table: &[usize]) -> Result<FinCategory> {
    if table.len() != n * n {
        return Err(Error::LengthMismatch { table: "monoid", expected: n * n, found: table.len() });
    }
    if let Some(&bad) = table.iter().find(|&&v| v >= n) {
        return Err(Error::IndexOutOfRange { table: "monoid", index: bad, len: n });
    }
    let mul = |a: usize, b: usize| table[a * n + b];
    let unit = (0..n)
        .find(|&e| (0..n).all(|a| mul(e, a) == a && mul(a, e) == a))
        .ok_or_else(|| Error::InvalidInput("multiplication has no unit".into()))?;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                    return Err(Error::InvalidInput(format!("multiplication is not associative at ({a}, {b}, {c})")));
                }
            }
        }
    }
    FinCategory::from_fn(1, vec![Edge::new(0, 0); n], vec![unit], |f, g| Some(mul(f, g)))
}

/// The cyclic group of order `n` as a one-object category.
pub fn cyclic_group(n: usize) -> FinCategory {
    let table: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    monoid_category(n, &table).expect("cyclic group")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{is_gaunt, validate_category, verify_pullback, verify_pushout};

    #[test]
    fn skeleton_counts() {
        let s = finset_skeleton(0, 4).unwrap();
        assert_eq!((s.category().object_count(), s.category().morphism_count()), (1, 1));
        let s = finset_skeleton(2, 4).unwrap();
        let two = s.object_of_size(2).unwrap();
        assert_eq!(s.category().hom(two, two).count(), 4);
        assert!(matches!(finset_skeleton(5, 4), Err(Error::ObjectOutOfBounds { size: 5, bound: 4 })));
    }

    #[test]
    fn chain_counts() {
        let c = poset_category(&Poset::chain(3));
        assert_eq!(c.category().morphism_count(), 6);
        assert!(validate_category(c.category()).is_empty());
        assert!(is_gaunt(c.category()).holds());
    }

    #[test]
    fn meets_and_joins_are_limits() {
        let c = poset_category(&Poset::diamond());
        let cat = c.category();
        for f in 0..cat.morphism_count() {
            for g in 0..cat.morphism_count() {
                if cat.tgt(f) == cat.tgt(g) {
                    let cone = c.pullback(f, g).unwrap();
                    assert!(verify_pullback(cat, f, g, &cone));
                }
                if cat.src(f) == cat.src(g) {
                    let cocone = c.pushout(f, g).unwrap();
                    assert!(verify_pushout(cat, f, g, &cocone));
                }
            }
        }
    }

    #[test]
    fn posets_reject_cycles() {
        assert!(Poset::from_fn(2, |_, _| true).is_err());
        let v = Poset::from_fn(3, |x, y| x == y || (x == 0 && y > 0)).unwrap();
        assert_eq!(v.meet(1, 2), Some(0));
        assert_eq!(v.join(1, 2), None);
    }

    #[test]
    fn monoids() {
        let z2 = cyclic_group(2);
        assert!(validate_category(&z2).is_empty());
        assert!(!is_gaunt(&z2).holds());
        assert!(monoid_category(2, &[0, 0, 0, 0]).is_err());
    }
}
