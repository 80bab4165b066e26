//! The flat presentation: one field per data item of a double category.

use super::{validate_double_category, DoubleCategory, HorId, HorizontalTables, SquareId, StructuralSquare};
use crate::error::{Error, Result};
use crate::fincat::{FinCategory, ObjId};
use crate::report::LawReport;
use crate::twosided::{DispMor, DispObj, TwoSidedDispCat};
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnfoldedDoubleCat {
    pub vertical: Arc<FinCategory>,
    /// Source and target of each horizontal morphism.
    pub horizontal: Vec<(ObjId, ObjId)>,
    pub hor_identity: Vec<HorId>,
    pub hor_composition: BTreeMap<(HorId, HorId), HorId>,
    pub squares: Vec<DispMor>,
    pub square_vid: Vec<SquareId>,
    pub square_vcomp: BTreeMap<(SquareId, SquareId), SquareId>,
    /// Horizontal identity square on each vertical morphism.
    pub square_hid: Vec<SquareId>,
    pub square_hcomp: BTreeMap<(SquareId, SquareId), SquareId>,
    pub lunitor: Vec<StructuralSquare>,
    pub runitor: Vec<StructuralSquare>,
    pub associator: BTreeMap<(HorId, HorId, HorId), StructuralSquare>,
}

fn reject(r: &LawReport) -> Result<()> {
    if r.is_empty() {
        Ok(())
    } else {
        Err(Error::LawViolation { count: r.violations().len(), first: r.first_violation() })
    }
}

pub fn to_unfolded(d: &DoubleCategory) -> Result<UnfoldedDoubleCat> {
    reject(&validate_double_category(d))?;
    let sq = d.squares();
    let t = d.horizontal_tables();
    Ok(UnfoldedDoubleCat {
        vertical: d.vertical().clone(),
        horizontal: sq.objects().iter().map(|o| (o.x1, o.x2)).collect(),
        hor_identity: t.hid_obj,
        hor_composition: t.hcomp_obj.into_iter().map(|(h, k, hk)| ((h, k), hk)).collect(),
        squares: sq.morphisms().to_vec(),
        square_vid: sq.identities().to_vec(),
        square_vcomp: sq.table().defined().map(|(s, t, st)| ((s, t), st)).collect(),
        square_hid: t.hid_sq,
        square_hcomp: t.hcomp_sq.into_iter().map(|(s, u, su)| ((s, u), su)).collect(),
        lunitor: t.lunitor,
        runitor: t.runitor,
        associator: t.associator.into_iter().collect(),
    })
}

pub fn from_unfolded(u: &UnfoldedDoubleCat) -> Result<DoubleCategory> {
    let v = u.vertical.clone();
    let objects = u.horizontal.iter().map(|&(x1, x2)| DispObj { x1, x2 }).collect();
    let squares = TwoSidedDispCat::new(
        v.clone(),
        v,
        objects,
        u.squares.clone(),
        u.square_vid.clone(),
        u.square_vcomp.iter().map(|(&(s, t), &st)| (s, t, st)),
    )?;
    let tables = HorizontalTables {
        hid_obj: u.hor_identity.clone(),
        hid_sq: u.square_hid.clone(),
        hcomp_obj: u.hor_composition.iter().map(|(&(h, k), &hk)| (h, k, hk)).collect(),
        hcomp_sq: u.square_hcomp.iter().map(|(&(s, t), &st)| (s, t, st)).collect(),
        lunitor: u.lunitor.clone(),
        runitor: u.runitor.clone(),
        associator: u.associator.iter().map(|(&k, &st)| (k, st)).collect(),
    };
    let d = DoubleCategory::new(Arc::new(squares), tables)?;
    reject(&validate_double_category(&d))?;
    Ok(d)
}
