//! Horizontal morphisms `x -|-> y` are functions `x -> T y`.

use super::monad::{lift_map, validate_monad, FinSetMonad};
use crate::doublecat::{assemble, DoubleCategory, DoubleSpec, SqCtx};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, FinMap, FinSetCategory, MorId, ObjId};
use crate::twosided::DisplayedSpec;
use std::sync::Arc;

fn carrier(m: &(impl FinSetMonad + ?Sized), n: usize) -> Result<usize> {
    m.carrier(n).ok_or(Error::ObjectOutOfBounds { size: n, bound: usize::BITS as usize })
}

/// `k* = T(k)·mu_z : T y -> T z` for `k : y -> T z`.
pub fn kleisli_extension(m: &(impl FinSetMonad + ?Sized), k: &FinMap, z: usize) -> Result<FinMap> {
    let tz = carrier(m, z)?;
    if k.cod() != tz {
        return Err(Error::CodomainMismatch { left: k.cod(), right: tz });
    }
    let tk = lift_map(m, k)?;
    Ok(FinMap::from_fn(tk.dom(), tz, |t| m.mult_at(z, tk.apply(t))))
}

/// Kleisli composite `h·k*` of `h : x -> T y` and `k : y -> T z`.
pub fn kleisli_compose(m: &(impl FinSetMonad + ?Sized), h: &FinMap, k: &FinMap, z: usize) -> Result<FinMap> {
    h.then(&kleisli_extension(m, k, z)?)
}

struct KleisliSpec<'a, M: ?Sized> {
    c: &'a FinSetCategory,
    m: &'a M,
    cat: Arc<FinCategory>,
}

impl<M: FinSetMonad + ?Sized> KleisliSpec<'_, M> {
    fn as_map(&self, h: &[usize], y: ObjId) -> Result<FinMap> {
        FinMap::new(h.to_vec(), carrier(self.m, self.c.size(y))?)
    }
}

impl<M: FinSetMonad + ?Sized> DisplayedSpec for KleisliSpec<'_, M> {
    type Obj = Vec<usize>;
    type Wit = ();

    fn base1(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    fn base2(&self) -> &Arc<FinCategory> {
        &self.cat
    }

    fn objects_over(&self, x: ObjId, y: ObjId) -> Vec<Vec<usize>> {
        let t = self.m.carrier(self.c.size(y)).expect("carrier checked at construction");
        FinMap::all(self.c.size(x), t).map(|f| f.table().to_vec()).collect()
    }

    fn squares(&self, f: MorId, g: MorId, h: &Vec<usize>, k: &Vec<usize>) -> Vec<()> {
        let (f, g) = (self.c.map(f), self.c.map(g));
        let ok = (0..f.dom()).all(|a| k[f.apply(a)] == self.m.map_at(g, h[a]));
        if ok {
            vec![()]
        } else {
            vec![]
        }
    }

    fn identity(&self, _: &Vec<usize>) {}

    fn compose(&self, _: &(), _: &()) -> Option<()> {
        Some(())
    }
}

impl<M: FinSetMonad + ?Sized> DoubleSpec for KleisliSpec<'_, M> {
    fn hor_identity(&self, x: ObjId) -> Result<Vec<usize>> {
        let n = self.c.size(x);
        Ok((0..n).map(|a| self.m.unit_at(n, a)).collect())
    }

    fn hor_identity_square(&self, _: MorId) -> Result<()> {
        Ok(())
    }

    fn hor_compose(&self, [_, y, z]: [ObjId; 3], h: &Vec<usize>, k: &Vec<usize>) -> Result<Vec<usize>> {
        let h = self.as_map(h, y)?;
        let k = self.as_map(k, z)?;
        Ok(kleisli_compose(self.m, &h, &k, self.c.size(z))?.table().to_vec())
    }

    fn hor_compose_square(&self, _: SqCtx<'_, Vec<usize>, ()>, _: SqCtx<'_, Vec<usize>, ()>) -> Result<()> {
        Ok(())
    }

    fn lunitor(&self, _: [ObjId; 2], _: &Vec<usize>) -> Result<((), ())> {
        Ok(((), ()))
    }

    fn runitor(&self, _: [ObjId; 2], _: &Vec<usize>) -> Result<((), ())> {
        Ok(((), ()))
    }

    fn associator(&self, _: [ObjId; 4], _: [&Vec<usize>; 3]) -> Result<((), ())> {
        Ok(((), ()))
    }
}

/// The Kleisli double category of `m` over the finite sets of `c`: squares
/// over `(f, g)` from `h` to `k` exist exactly when `f·k = h·T g`, horizontal
/// identities are the units and horizontal composition is Kleisli composition.
pub fn kleisli_double_cat(m: &(impl FinSetMonad + ?Sized), c: &FinSetCategory) -> Result<DoubleCategory> {
    for &n in c.sizes() {
        let t = carrier(m, n)?;
        carrier(m, t)?;
    }
    let r = validate_monad(m, c)?;
    if !r.is_empty() {
        let first = r.violations()[0].to_string();
        return Err(Error::MonadLawViolation { count: r.violations().len(), first });
    }
    assemble(&KleisliSpec { c, m, cat: c.category().clone() })
}
