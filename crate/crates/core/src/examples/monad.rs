//! Monads on finite sets, given elementwise.
//!
//! The elements of `T n` are `0..carrier(n)`. A monad has to act on every
//! function between finite sets, not just the morphisms of some chosen
//! category, because Kleisli composition applies `T` to maps `y -> T z`.

use crate::error::{Error, Result};
use crate::fincat::{FinMap, FinSetCategory};
use crate::report::{law, LawReport};

pub trait FinSetMonad {
    fn name(&self) -> String;
    /// `|T n|`, or `None` when it does not fit in a `usize`.
    fn carrier(&self, n: usize) -> Option<usize>;
    /// `T(f)(t)` for `t` in `T(dom f)`.
    fn map_at(&self, f: &FinMap, t: usize) -> usize;
    /// `eta_n(x)`.
    fn unit_at(&self, n: usize, x: usize) -> usize;
    /// `mu_n(tt)` for `tt` in `T(T n)`.
    fn mult_at(&self, n: usize, tt: usize) -> usize;
}

fn carrier_of(m: &(impl FinSetMonad + ?Sized), n: usize) -> Result<usize> {
    m.carrier(n).ok_or(Error::ObjectOutOfBounds { size: n, bound: usize::BITS as usize })
}

/// `T(f)` as a function `T(dom f) -> T(cod f)`.
pub fn lift_map(m: &(impl FinSetMonad + ?Sized), f: &FinMap) -> Result<FinMap> {
    let (a, b) = (carrier_of(m, f.dom())?, carrier_of(m, f.cod())?);
    Ok(FinMap::from_fn(a, b, |t| m.map_at(f, t)))
}

/// `eta_n` as a function.
pub fn unit_map(m: &(impl FinSetMonad + ?Sized), n: usize) -> Result<FinMap> {
    Ok(FinMap::from_fn(n, carrier_of(m, n)?, |x| m.unit_at(n, x)))
}

/// `mu_n` as a function.
pub fn mult_map(m: &(impl FinSetMonad + ?Sized), n: usize) -> Result<FinMap> {
    let t = carrier_of(m, n)?;
    Ok(FinMap::from_fn(carrier_of(m, t)?, t, |tt| m.mult_at(n, tt)))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IdentityMonad;

impl FinSetMonad for IdentityMonad {
    fn name(&self) -> String {
        "identity".into()
    }

    fn carrier(&self, n: usize) -> Option<usize> {
        Some(n)
    }

    fn map_at(&self, f: &FinMap, t: usize) -> usize {
        f.apply(t)
    }

    fn unit_at(&self, _: usize, x: usize) -> usize {
        x
    }

    fn mult_at(&self, _: usize, tt: usize) -> usize {
        tt
    }
}

/// Subsets as bitmasks: bit `i` of `t` says whether `i` is in the subset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct PowersetMonad;

impl FinSetMonad for PowersetMonad {
    fn name(&self) -> String {
        "powerset".into()
    }

    fn carrier(&self, n: usize) -> Option<usize> {
        (n < usize::BITS as usize - 1).then(|| 1usize << n)
    }

    fn map_at(&self, f: &FinMap, t: usize) -> usize {
        bits(t).fold(0, |acc, i| acc | 1 << f.apply(i))
    }

    fn unit_at(&self, _: usize, x: usize) -> usize {
        1 << x
    }

    fn mult_at(&self, _: usize, tt: usize) -> usize {
        bits(tt).fold(0, |acc, t| acc | t)
    }
}

/// Indices of the set bits of `t`, in increasing order.
pub(crate) fn bits(mut t: usize) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (t != 0).then(|| {
            let i = t.trailing_zeros() as usize;
            t &= t - 1;
            i
        })
    })
}

/// `T n = n + e`: values `0..n` followed by `e` exceptions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExceptionMonad {
    pub exceptions: usize,
}

impl FinSetMonad for ExceptionMonad {
    fn name(&self) -> String {
        format!("exception({})", self.exceptions)
    }

    fn carrier(&self, n: usize) -> Option<usize> {
        n.checked_add(self.exceptions)
    }

    fn map_at(&self, f: &FinMap, t: usize) -> usize {
        if t < f.dom() {
            f.apply(t)
        } else {
            f.cod() + (t - f.dom())
        }
    }

    fn unit_at(&self, _: usize, x: usize) -> usize {
        x
    }

    fn mult_at(&self, n: usize, tt: usize) -> usize {
        let t = n + self.exceptions;
        if tt < t {
            tt
        } else {
            n + (tt - t)
        }
    }
}

/// Largest `|T T T n|` for which associativity is checked exhaustively.
pub const ASSOC_LIMIT: usize = 1 << 20;

/// Checks the functor, naturality, unit and associativity laws of `m` on the
/// objects and morphisms of `c`. Associativity at `n` is counted as skipped
/// when `T T T n` has more than [`ASSOC_LIMIT`] elements.
pub fn validate_monad(m: &(impl FinSetMonad + ?Sized), c: &FinSetCategory) -> Result<LawReport> {
    let mut r = LawReport::new();
    let fid = r.law(law::MONAD_FUNCTOR_IDENTITY);
    let fcomp = r.law(law::MONAD_FUNCTOR_COMPOSITION);
    let unat = r.law(law::MONAD_UNIT_NATURALITY);
    let mnat = r.law(law::MONAD_MULT_NATURALITY);
    let left = r.law(law::MONAD_LEFT_UNIT);
    let right = r.law(law::MONAD_RIGHT_UNIT);
    let assoc = r.law(law::MONAD_ASSOC);
    let cat = c.category();

    for x in 0..cat.object_count() {
        let n = c.size(x);
        let t = carrier_of(m, n)?;
        let id = lift_map(m, &FinMap::identity(n))?;
        r.check(fid, id == FinMap::identity(t), || (vec![x], format!("T(id) = {:?}", id.table())));
        let eta = unit_map(m, n)?;
        let teta = lift_map(m, &eta)?;
        for e in 0..t {
            let l = m.mult_at(n, m.unit_at(t, e));
            r.check(left, l == e, || (vec![x, e], format!("mu(eta(T x)({e})) = {l}")));
            let rr = m.mult_at(n, teta.apply(e));
            r.check(right, rr == e, || (vec![x, e], format!("mu(T(eta)({e})) = {rr}")));
        }
        let tt = carrier_of(m, t)?;
        match m.carrier(tt).filter(|&ttt| ttt <= ASSOC_LIMIT) {
            Some(ttt) => {
                let mu = mult_map(m, n)?;
                for e in 0..ttt {
                    let a = m.mult_at(n, m.mult_at(t, e));
                    let b = m.mult_at(n, m.map_at(&mu, e));
                    r.check(assoc, a == b, || (vec![x, e], format!("mu(mu(T x)) gives {a}, mu(T(mu)) gives {b}")));
                }
            }
            None => r.skip(assoc, 1),
        }
    }

    for f in 0..cat.morphism_count() {
        let (x, y) = (cat.src(f), cat.tgt(f));
        let (n, k) = (c.size(x), c.size(y));
        let fm = c.map(f);
        let tf = lift_map(m, fm)?;
        for a in 0..n {
            let l = tf.apply(m.unit_at(n, a));
            let rr = m.unit_at(k, fm.apply(a));
            r.check(unat, l == rr, || (vec![f, a], format!("T(f)(eta({a})) = {l}, eta(f({a})) = {rr}")));
        }
        let t = carrier_of(m, n)?;
        for e in 0..carrier_of(m, t)? {
            let l = tf.apply(m.mult_at(n, e));
            let rr = m.mult_at(k, m.map_at(&tf, e));
            r.check(mnat, l == rr, || (vec![f, e], format!("T(f)(mu({e})) = {l}, mu(T T f({e})) = {rr}")));
        }
    }

    for (f, g, _) in cat.table().iter() {
        let fg = c.map(f).then(c.map(g))?;
        let lhs = lift_map(m, &fg)?;
        let rhs = lift_map(m, c.map(f))?.then(&lift_map(m, c.map(g))?)?;
        r.check(fcomp, lhs == rhs, || (vec![f, g], format!("T(f·g) = {:?}, T f·T g = {:?}", lhs.table(), rhs.table())));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::finset_skeleton;

    #[test]
    fn built_in_monads_are_lawful() {
        let c = finset_skeleton(2, 4).unwrap();
        for m in [&IdentityMonad as &dyn FinSetMonad, &PowersetMonad, &ExceptionMonad { exceptions: 1 }] {
            let r = validate_monad(m, &c).unwrap();
            assert!(r.is_empty(), "{}: {r}", m.name());
            assert_eq!(r.tally(law::MONAD_ASSOC).unwrap().skipped, 0);
        }
    }

    #[test]
    fn large_associativity_is_skipped() {
        let c = finset_skeleton(3, 4).unwrap();
        let r = validate_monad(&PowersetMonad, &c).unwrap();
        assert!(r.is_empty());
        assert_eq!(r.tally(law::MONAD_ASSOC).unwrap().skipped, 1);
    }

    struct Broken;

    impl FinSetMonad for Broken {
        fn name(&self) -> String {
            "broken".into()
        }
        fn carrier(&self, n: usize) -> Option<usize> {
            PowersetMonad.carrier(n)
        }
        fn map_at(&self, f: &FinMap, t: usize) -> usize {
            PowersetMonad.map_at(f, t)
        }
        fn unit_at(&self, _: usize, _: usize) -> usize {
            0
        }
        fn mult_at(&self, n: usize, tt: usize) -> usize {
            PowersetMonad.mult_at(n, tt)
        }
    }

    #[test]
    fn broken_unit_is_caught() {
        let c = finset_skeleton(1, 4).unwrap();
        let r = validate_monad(&Broken, &c).unwrap();
        assert!(r.mentions(law::MONAD_LEFT_UNIT));
    }

    #[test]
    fn bit_iteration() {
        assert_eq!(bits(0b1011).collect::<Vec<_>>(), vec![0, 1, 3]);
        assert_eq!(bits(0).count(), 0);
    }
}
