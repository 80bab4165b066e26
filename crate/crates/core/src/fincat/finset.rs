//! Finite sets, functions between them, and the categories of finite sets
//! that the computed examples live in.

use super::limits::{ChosenLimits, ChosenPullbacks, ChosenPushouts, Cocone, Cone};
use super::{FinCategory, MorId, ObjId};
use crate::error::{Error, Result};
use crate::table::Edge;
use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Arc;

/// A function `{0..dom} -> {0..cod}` stored as its table of values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinMap {
    table: Vec<usize>,
    cod: usize,
}

impl FinMap {
    pub fn new(table: Vec<usize>, cod: usize) -> Result<Self> {
        if let Some(&v) = table.iter().find(|&&v| v >= cod) {
            return Err(Error::IndexOutOfRange { table: "map value", index: v, len: cod });
        }
        Ok(FinMap { table, cod })
    }

    pub fn identity(n: usize) -> Self {
        FinMap { table: (0..n).collect(), cod: n }
    }

    pub fn from_fn(dom: usize, cod: usize, f: impl Fn(usize) -> usize) -> Self {
        let table: Vec<usize> = (0..dom).map(f).collect();
        debug_assert!(table.iter().all(|&v| v < cod));
        FinMap { table, cod }
    }

    pub fn dom(&self) -> usize {
        self.table.len()
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    pub fn apply(&self, i: usize) -> usize {
        self.table[i]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// `self` then `g`.
    pub fn then(&self, g: &FinMap) -> Result<FinMap> {
        if self.cod != g.dom() {
            return Err(Error::DomainMismatch { left: self.cod, right: g.dom() });
        }
        Ok(FinMap { table: self.table.iter().map(|&i| g.table[i]).collect(), cod: g.cod })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        self.table.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod];
        for &v in &self.table {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_monotone(&self) -> bool {
        self.table.windows(2).all(|w| w[0] <= w[1])
    }

    /// All functions `dom -> cod`, in lexicographic order of their tables.
    pub fn all(dom: usize, cod: usize) -> impl Iterator<Item = FinMap> {
        let mut next = if dom == 0 || cod > 0 { Some(vec![0; dom]) } else { None };
        std::iter::from_fn(move || {
            let current = next.take()?;
            let mut succ = current.clone();
            let mut i = dom;
            while i > 0 {
                i -= 1;
                succ[i] += 1;
                if succ[i] < cod {
                    next = Some(succ);
                    break;
                }
                succ[i] = 0;
            }
            Some(FinMap { table: current, cod })
        })
    }
}

/// A finite set as an explicit list of distinct elements.
#[derive(Clone, Debug)]
pub struct FinSetObj<T> {
    elems: Vec<T>,
    index: HashMap<T, usize>,
}

impl<T: Clone + Eq + Hash> PartialEq for FinSetObj<T> {
    fn eq(&self, other: &Self) -> bool {
        self.elems == other.elems
    }
}

impl<T: Clone + Eq + Hash + std::fmt::Debug> FinSetObj<T> {
    pub fn new(elems: Vec<T>) -> Result<Self> {
        let mut index = HashMap::with_capacity(elems.len());
        for (i, e) in elems.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!("duplicate element {e:?}")));
            }
        }
        Ok(FinSetObj { elems, index })
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elems
    }

    pub fn index_of(&self, e: &T) -> Option<usize> {
        self.index.get(e).copied()
    }
}

impl FinSetObj<usize> {
    /// The set `{0, .., n-1}`.
    pub fn range(n: usize) -> Self {
        FinSetObj::new((0..n).collect()).expect("distinct")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Pullback {
    /// Pairs `(a, b)` with `f(a) = g(b)`, in lexicographic order.
    pub apex: FinSetObj<(usize, usize)>,
    pub left: FinMap,
    pub right: FinMap,
}

/// Pullback of `f : A -> C` and `g : B -> C`.
pub fn finset_pullback(f: &FinMap, g: &FinMap) -> Result<Pullback> {
    if f.cod() != g.cod() {
        return Err(Error::CodomainMismatch { left: f.cod(), right: g.cod() });
    }
    let mut pairs = Vec::new();
    for a in 0..f.dom() {
        for b in 0..g.dom() {
            if f.apply(a) == g.apply(b) {
                pairs.push((a, b));
            }
        }
    }
    let left = FinMap { table: pairs.iter().map(|p| p.0).collect(), cod: f.dom() };
    let right = FinMap { table: pairs.iter().map(|p| p.1).collect(), cod: g.dom() };
    Ok(Pullback { apex: FinSetObj::new(pairs)?, left, right })
}

/// An element of a disjoint union `A ⊔ B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summand {
    Left(usize),
    Right(usize),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Pushout {
    /// One representative per class: its least element, with `Left` before `Right`.
    pub apex: FinSetObj<Summand>,
    pub left: FinMap,
    pub right: FinMap,
}

/// Pushout of `f : C -> A` and `g : C -> B`: `A ⊔ B` modulo `f(c) ~ g(c)`.
pub fn finset_pushout(f: &FinMap, g: &FinMap) -> Result<Pushout> {
    if f.dom() != g.dom() {
        return Err(Error::DomainMismatch { left: f.dom(), right: g.dom() });
    }
    let (na, nb) = (f.cod(), g.cod());
    let mut parent: Vec<usize> = (0..na + nb).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for c in 0..f.dom() {
        let (a, b) = (find(&mut parent, f.apply(c)), find(&mut parent, na + g.apply(c)));
        // keep the smaller element as root so roots are class minima
        if a < b {
            parent[b] = a;
        } else if b < a {
            parent[a] = b;
        }
    }
    let mut class_of_root = vec![usize::MAX; na + nb];
    let mut reps = Vec::new();
    let mut class = Vec::with_capacity(na + nb);
    for x in 0..na + nb {
        let r = find(&mut parent, x);
        if class_of_root[r] == usize::MAX {
            class_of_root[r] = reps.len();
            reps.push(if r < na { Summand::Left(r) } else { Summand::Right(r - na) });
        }
        class.push(class_of_root[r]);
    }
    let q = reps.len();
    let left = FinMap { table: class[..na].to_vec(), cod: q };
    let right = FinMap { table: class[na..].to_vec(), cod: q };
    Ok(Pushout { apex: FinSetObj::new(reps)?, left, right })
}

#[derive(Clone, Debug)]
pub struct Product<T, U> {
    /// Pairs in lexicographic order: `(i, j)` sits at `i * |b| + j`.
    pub apex: FinSetObj<(T, U)>,
    pub left: FinMap,
    pub right: FinMap,
}

impl<T, U> Product<T, U> {
    /// The map `w -> a × b` with components `f` and `g`.
    pub fn pair(&self, f: &FinMap, g: &FinMap) -> Result<FinMap> {
        if f.dom() != g.dom() {
            return Err(Error::DomainMismatch { left: f.dom(), right: g.dom() });
        }
        let (na, nb) = (self.left.cod(), self.right.cod());
        if f.cod() != na || g.cod() != nb {
            return Err(Error::CodomainMismatch { left: f.cod(), right: na });
        }
        Ok(FinMap::from_fn(f.dom(), na * nb, |w| f.apply(w) * nb + g.apply(w)))
    }
}

pub fn finset_product<T, U>(a: &FinSetObj<T>, b: &FinSetObj<U>) -> Product<T, U>
where
    T: Clone + Eq + Hash + std::fmt::Debug,
    U: Clone + Eq + Hash + std::fmt::Debug,
{
    let (na, nb) = (a.len(), b.len());
    let mut elems = Vec::with_capacity(na * nb);
    for x in a.elements() {
        for y in b.elements() {
            elems.push((x.clone(), y.clone()));
        }
    }
    Product {
        apex: FinSetObj::new(elems).expect("pairs of distinct elements are distinct"),
        left: FinMap::from_fn(na * nb, na, |i| i / nb),
        right: FinMap::from_fn(na * nb, nb, |i| i % nb),
    }
}

/// Which functions count as morphisms in a [`FinSetCategory`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MapClass {
    pub injective: bool,
    pub surjective: bool,
    pub monotone: bool,
}

impl MapClass {
    pub const ALL: MapClass = MapClass { injective: false, surjective: false, monotone: false };
    pub const INJECTIVE: MapClass = MapClass { injective: true, surjective: false, monotone: false };
    pub const SURJECTIVE: MapClass = MapClass { injective: false, surjective: true, monotone: false };
    pub const MONOTONE: MapClass = MapClass { injective: false, surjective: false, monotone: true };
    pub const MONOTONE_INJECTIVE: MapClass = MapClass { injective: true, surjective: false, monotone: true };
    pub const MONOTONE_SURJECTIVE: MapClass = MapClass { injective: false, surjective: true, monotone: true };

    pub fn contains(&self, f: &FinMap) -> bool {
        (!self.injective || f.is_injective())
            && (!self.surjective || f.is_surjective())
            && (!self.monotone || f.is_monotone())
    }

    pub fn name(&self) -> &'static str {
        match (self.monotone, self.injective, self.surjective) {
            (false, false, false) => "all",
            (false, true, false) => "injective",
            (false, false, true) => "surjective",
            (false, true, true) => "bijective",
            (true, false, false) => "monotone",
            (true, true, false) => "monotone-injective",
            (true, false, true) => "monotone-surjective",
            (true, true, true) => "monotone-bijective",
        }
    }
}

/// A category whose objects are finite sets `{0..n}` of pairwise distinct
/// sizes and whose morphisms are the functions of a given class.
///
/// Morphisms are numbered by source object, then target object, then the
/// lexicographic order of their tables.
#[derive(Clone, Debug)]
pub struct FinSetCategory {
    cat: Arc<FinCategory>,
    sizes: Vec<usize>,
    maps: Vec<FinMap>,
    class: MapClass,
    bound: usize,
    lookup: HashMap<FinMap, MorId>,
}

impl PartialEq for FinSetCategory {
    fn eq(&self, other: &Self) -> bool {
        self.sizes == other.sizes && self.class == other.class && self.bound == other.bound
    }
}

impl FinSetCategory {
    pub fn new(sizes: Vec<usize>, class: MapClass, bound: usize) -> Result<Self> {
        for (i, &n) in sizes.iter().enumerate() {
            if n > bound {
                return Err(Error::ObjectOutOfBounds { size: n, bound });
            }
            if sizes[..i].contains(&n) {
                return Err(Error::InvalidInput(format!("carrier size {n} listed twice")));
            }
        }
        let mut arrows = Vec::new();
        let mut maps = Vec::new();
        for (x, &m) in sizes.iter().enumerate() {
            for (y, &n) in sizes.iter().enumerate() {
                for f in FinMap::all(m, n).filter(|f| class.contains(f)) {
                    arrows.push(Edge::new(x, y));
                    maps.push(f);
                }
            }
        }
        let lookup: HashMap<FinMap, MorId> = maps.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        let identity = sizes.iter().map(|&n| lookup[&FinMap::identity(n)]).collect();
        let cat = FinCategory::from_fn(sizes.len(), arrows, identity, |f, g| {
            maps[f].then(&maps[g]).ok().and_then(|h| lookup.get(&h).copied())
        })?;
        Ok(FinSetCategory { cat: Arc::new(cat), sizes, maps, class, bound, lookup })
    }

    pub fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    pub fn size(&self, x: ObjId) -> usize {
        self.sizes[x]
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn map(&self, f: MorId) -> &FinMap {
        &self.maps[f]
    }

    pub fn morphism_of(&self, f: &FinMap) -> Option<MorId> {
        self.lookup.get(f).copied()
    }

    pub fn object_of_size(&self, n: usize) -> Option<ObjId> {
        self.sizes.iter().position(|&m| m == n)
    }

    pub fn class(&self) -> MapClass {
        self.class
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    /// Products are synthesized as new carriers, so they exist whenever all
    /// functions are morphisms. Pullbacks need injective projections to stay in
    /// an injective class; pushouts need surjective injections likewise.
    pub fn limits(&self) -> ChosenLimits {
        let c = self.class;
        ChosenLimits {
            products: c == MapClass::ALL,
            pullbacks: !c.surjective && (c.injective || !c.monotone),
            pushouts: !c.injective && (c.surjective || !c.monotone),
        }
    }

    fn object_for(&self, n: usize) -> Result<ObjId, String> {
        if n > self.bound {
            return Err(format!("carrier of size {n} exceeds the bound {}", self.bound));
        }
        self.object_of_size(n).ok_or_else(|| format!("no object of size {n}"))
    }
}

impl ChosenPullbacks for FinSetCategory {
    fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    fn pullback(&self, f: MorId, g: MorId) -> Result<Cone> {
        if !self.limits().pullbacks {
            return Err(Error::PullbackUnavailable(format!("{} maps", self.class.name())));
        }
        let p = finset_pullback(&self.maps[f], &self.maps[g])?;
        let n = p.apex.len();
        if n > self.bound {
            return Err(Error::ObjectOutOfBounds { size: n, bound: self.bound });
        }
        let apex = self.object_for(n).map_err(Error::PullbackUnavailable)?;
        let proj = |m: &FinMap| {
            self.morphism_of(m).ok_or_else(|| Error::PullbackUnavailable(format!("projection {:?} is not a morphism", m.table())))
        };
        Ok(Cone { apex, left: proj(&p.left)?, right: proj(&p.right)? })
    }
}

impl ChosenPushouts for FinSetCategory {
    fn category(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    fn pushout(&self, f: MorId, g: MorId) -> Result<Cocone> {
        if !self.limits().pushouts {
            return Err(Error::PushoutUnavailable(format!("{} maps", self.class.name())));
        }
        let p = finset_pushout(&self.maps[f], &self.maps[g])?;
        let n = p.apex.len();
        if n > self.bound {
            return Err(Error::ObjectOutOfBounds { size: n, bound: self.bound });
        }
        let apex = self.object_for(n).map_err(Error::PushoutUnavailable)?;
        let inj = |m: &FinMap| {
            self.morphism_of(m).ok_or_else(|| Error::PushoutUnavailable(format!("injection {:?} is not a morphism", m.table())))
        };
        Ok(Cocone { apex, left: inj(&p.left)?, right: inj(&p.right)? })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::validate_category;

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(FinMap::all(2, 3).count(), 9);
        assert_eq!(FinMap::all(0, 0).count(), 1);
        assert_eq!(FinMap::all(2, 0).count(), 0);
        let tables: Vec<_> = FinMap::all(2, 2).map(|f| f.table().to_vec()).collect();
        assert_eq!(tables, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn pullback_examples() {
        let id3 = FinMap::identity(3);
        assert_eq!(finset_pullback(&id3, &id3).unwrap().apex.len(), 3);
        let c2 = FinMap::new(vec![0, 0], 1).unwrap();
        let c3 = FinMap::new(vec![0, 0, 0], 1).unwrap();
        assert_eq!(finset_pullback(&c2, &c3).unwrap().apex.len(), 6);
        let swap = FinMap::new(vec![1, 0], 2).unwrap();
        let p = finset_pullback(&FinMap::identity(2), &swap).unwrap();
        assert_eq!(p.apex.elements(), &[(0, 1), (1, 0)]);
        assert!(matches!(finset_pullback(&id3, &swap), Err(Error::CodomainMismatch { .. })));
    }

    #[test]
    fn pushout_examples() {
        let e2 = FinMap::new(vec![], 2).unwrap();
        let e3 = FinMap::new(vec![], 3).unwrap();
        assert_eq!(finset_pushout(&e2, &e3).unwrap().apex.len(), 5);
        let id = FinMap::identity(3);
        assert_eq!(finset_pushout(&id, &id).unwrap().apex.len(), 3);
        let f = FinMap::new(vec![0], 2).unwrap();
        let g = FinMap::new(vec![1], 2).unwrap();
        let p = finset_pushout(&f, &g).unwrap();
        assert_eq!(p.apex.len(), 3);
        assert_eq!(p.left.then(&FinMap::identity(3)).unwrap().apply(0), p.right.apply(1));
        assert!(matches!(finset_pushout(&f, &id), Err(Error::DomainMismatch { .. })));
    }

    #[test]
    fn product_examples() {
        let a = FinSetObj::range(2);
        let b = FinSetObj::range(3);
        let p = finset_product(&a, &b);
        assert_eq!(p.apex.len(), 6);
        assert!(finset_product(&FinSetObj::range(0), &b).apex.is_empty());
        assert_eq!(finset_product(&FinSetObj::range(1), &b).apex.len(), 3);
        let f = FinMap::new(vec![1, 0], 2).unwrap();
        let g = FinMap::new(vec![2, 2], 3).unwrap();
        let h = p.pair(&f, &g).unwrap();
        assert_eq!(h.then(&p.left).unwrap(), f);
        assert_eq!(h.then(&p.right).unwrap(), g);
    }

    #[test]
    fn finset_categories_are_categories() {
        for class in [MapClass::ALL, MapClass::INJECTIVE, MapClass::SURJECTIVE, MapClass::MONOTONE] {
            let c = FinSetCategory::new(vec![0, 1, 2, 3], class, 4).unwrap();
            assert!(validate_category(c.category()).is_empty(), "{}", class.name());
        }
        let c = FinSetCategory::new(vec![2], MapClass::ALL, 4).unwrap();
        assert_eq!(c.category().morphism_count(), 4);
        assert!(matches!(FinSetCategory::new(vec![5], MapClass::ALL, 4), Err(Error::ObjectOutOfBounds { .. })));
    }

    #[test]
    fn chosen_pullbacks_respect_bound_and_class() {
        let c = FinSetCategory::new(vec![0, 1, 2], MapClass::ALL, 2).unwrap();
        let cat = c.category().clone();
        // two constant maps 2 -> 1 have a pullback of size 4
        let k = c.morphism_of(&FinMap::new(vec![0, 0], 1).unwrap()).unwrap();
        assert!(matches!(c.pullback(k, k), Err(Error::ObjectOutOfBounds { size: 4, bound: 2 })));
        let inj = FinSetCategory::new(vec![0, 1, 2], MapClass::INJECTIVE, 2).unwrap();
        for f in 0..inj.category().morphism_count() {
            for g in 0..inj.category().morphism_count() {
                if inj.category().tgt(f) == inj.category().tgt(g) {
                    let cone = inj.pullback(f, g).unwrap();
                    assert!(crate::fincat::verify_pullback(inj.category(), f, g, &cone));
                }
            }
        }
        let _ = cat;
    }
}
