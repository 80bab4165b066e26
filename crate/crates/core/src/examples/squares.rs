use crate::doublecat::{assemble, assemble_with_payloads, Assembled, DoubleCategory, DoubleSpec, SqCtx};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, MorId, ObjId};
use crate::twosided::ArrowSpec;
use std::sync::Arc;

impl DoubleSpec for ArrowSpec {
    fn hor_identity(&self, x: ObjId) -> Result<MorId> {
        Ok(self.c.id(x))
    }

    fn hor_identity_square(&self, _: MorId) -> Result<()> {
        Ok(())
    }

    fn hor_compose(&self, _: [ObjId; 3], h: &MorId, k: &MorId) -> Result<MorId> {
        self.c.compose(*h, *k).ok_or_else(|| Error::NotComposable(format!("{h}·{k} is missing")))
    }

    fn hor_compose_square(&self, _: SqCtx<'_, MorId, ()>, _: SqCtx<'_, MorId, ()>) -> Result<()> {
        Ok(())
    }

    fn lunitor(&self, _: [ObjId; 2], _: &MorId) -> Result<((), ())> {
        Ok(((), ()))
    }

    fn runitor(&self, _: [ObjId; 2], _: &MorId) -> Result<((), ())> {
        Ok(((), ()))
    }

    fn associator(&self, _: [ObjId; 4], _: [&MorId; 3]) -> Result<((), ())> {
        Ok(((), ()))
    }
}

/// Horizontal morphisms are the morphisms of `c`, composed as in `c`;
/// a square exists exactly when its boundary commutes.
pub fn square_double_cat(c: &Arc<FinCategory>) -> Result<DoubleCategory> {
    assemble(&ArrowSpec { c: c.clone() })
}

pub(crate) fn square_with_payloads(c: &Arc<FinCategory>) -> Result<Assembled<MorId>> {
    assemble_with_payloads(&ArrowSpec { c: c.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::doublecat::{check_univalent_double, is_strict, validate_double_category};
    use crate::examples::{poset_category, Poset};

    #[test]
    fn terminal() {
        let d = square_double_cat(&Arc::new(FinCategory::terminal())).unwrap();
        assert_eq!((d.vertical().object_count(), d.hor_count(), d.square_count()), (1, 1, 1));
        assert!(validate_double_category(&d).is_empty());
    }

    #[test]
    fn horizontal_morphisms_are_the_morphisms() {
        let c = Arc::new(FinCategory::walking_arrow());
        let a = square_with_payloads(&c).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                let over: Vec<_> = a.double.squares().objects_over(x, y).map(|h| a.objects[h]).collect();
                assert_eq!(over, c.hom_vec(x, y));
            }
        }
    }

    #[test]
    fn four_element_poset() {
        let d = square_double_cat(poset_category(&Poset::diamond()).category()).unwrap();
        assert!(validate_double_category(&d).is_empty());
        assert!(is_strict(&d).holds());
        assert!(check_univalent_double(&d).holds());
    }
}
