use crate::doublecat::{assemble, DoubleCategory, DoubleSpec, SqCtx};
use crate::error::{Error, Result};
use crate::fincat::{FinMap, FinSetCategory, MorId, ObjId};
use crate::twosided::{Lens, LensSpec};

/// `get = get1·get2` and `put(c, a) = put1(put2(c, get1 a), a)`.
pub fn compose_lenses(l1: &Lens, l2: &Lens) -> Result<Lens> {
    let get = l1.get.then(&l2.get)?;
    let (s, w) = (l1.get.dom(), l2.get.cod());
    let put = FinMap::from_fn(w * s, s, |i| {
        let (c, a) = (i / s, i % s);
        l1.put_at(l2.put_at(c, l1.get.apply(a)), a)
    });
    Ok(Lens { get, put })
}

impl DoubleSpec for LensSpec<'_> {
    fn hor_identity(&self, x: ObjId) -> Result<Lens> {
        Ok(Lens::identity(self.c.size(x)))
    }

    fn hor_identity_square(&self, _: MorId) -> Result<()> {
        Ok(())
    }

    fn hor_compose(&self, _: [ObjId; 3], h: &Lens, k: &Lens) -> Result<Lens> {
        compose_lenses(h, k)
    }

    fn hor_compose_square(&self, _: SqCtx<'_, Lens, ()>, _: SqCtx<'_, Lens, ()>) -> Result<()> {
        Ok(())
    }

    fn lunitor(&self, _: [ObjId; 2], _: &Lens) -> Result<((), ())> {
        Ok(((), ()))
    }

    fn runitor(&self, _: [ObjId; 2], _: &Lens) -> Result<((), ())> {
        Ok(((), ()))
    }

    fn associator(&self, _: [ObjId; 4], _: [&Lens; 3]) -> Result<((), ())> {
        Ok(((), ()))
    }
}

/// Lawful lenses between the finite sets of `c`, which needs all functions
/// so that `v × s` and the projections are available.
pub fn lenses_double_cat(c: &FinSetCategory) -> Result<DoubleCategory> {
    if !c.limits().products {
        return Err(Error::MissingProducts);
    }
    assemble(&LensSpec { c })
}
