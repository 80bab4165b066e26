//! The `dblcat/1` JSON encoding.
//!
//! One flat document describes a category, a two-sided displayed category
//! over it, or a whole double category; the higher layers are simply extra
//! keys. Displayed objects and morphisms are run-length encoded by boundary:
//! an entry with `count: n` stands for `n` consecutive ids with that boundary.
//!
//! A displayed category over two different bases stores the second base
//! under `base2`; when absent, both bases are the top-level category.

use crate::dblfunctor::LaxDoubleFunctor;
use crate::doublecat::{DoubleCategory, HorizontalTables, StructuralSquare};
use crate::error::{Error, Result};
use crate::fincat::FinCategory;
use crate::table::Edge;
use crate::twosided::{DispMor, DispObj, TwoSidedDispCat, TwoSidedDispFunctor};
use crate::FinFunctor;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub const SCHEMA: &str = "dblcat/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Category,
    Twosided,
    Double,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismEntry {
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CompEntry {
    pub f: usize,
    pub g: usize,
    pub fg: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CategoryJson {
    pub objects: usize,
    pub morphisms: Vec<MorphismEntry>,
    pub id: Vec<usize>,
    pub comp: Vec<CompEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DispObjectRun {
    pub x1: usize,
    pub x2: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DispMorphismRun {
    pub f1: usize,
    pub f2: usize,
    pub src: usize,
    pub tgt: usize,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SquareCompEntry {
    pub s: usize,
    pub t: usize,
    pub st: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HorCompEntry {
    pub h: usize,
    pub k: usize,
    pub hk: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitorEntry {
    pub h: usize,
    pub sq: usize,
    pub inv: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AssociatorEntry {
    pub h1: usize,
    pub h2: usize,
    pub h3: usize,
    pub sq: usize,
    pub inv: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComparisonEntry {
    pub h: usize,
    pub k: usize,
    pub sq: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Document {
    pub schema: String,
    pub objects: usize,
    pub morphisms: Vec<MorphismEntry>,
    pub id: Vec<usize>,
    pub comp: Vec<CompEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base2: Option<CategoryJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disp_objects: Option<Vec<DispObjectRun>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disp_morphisms: Option<Vec<DispMorphismRun>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disp_id: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disp_comp: Option<Vec<SquareCompEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hid_obj: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hid_sq: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hcomp_obj: Option<Vec<HorCompEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hcomp_sq: Option<Vec<SquareCompEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lunitor: Option<Vec<UnitorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runitor: Option<Vec<UnitorEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub associator: Option<Vec<AssociatorEntry>>,
}

fn encode_category(c: &FinCategory) -> CategoryJson {
    CategoryJson {
        objects: c.object_count(),
        morphisms: c.arrows().iter().map(|e| MorphismEntry { src: e.src, tgt: e.tgt }).collect(),
        id: c.identities().to_vec(),
        comp: c.composition_entries().map(|(f, g, fg)| CompEntry { f, g, fg }).collect(),
    }
}

fn decode_category(c: &CategoryJson) -> Result<FinCategory> {
    let arrows = c.morphisms.iter().map(|m| Edge::new(m.src, m.tgt)).collect();
    FinCategory::new(c.objects, arrows, c.id.clone(), c.comp.iter().map(|e| (e.f, e.g, e.fg)))
}

/// Groups consecutive equal items into `(item, count)` runs.
fn runs<T: PartialEq + Copy>(items: &[T]) -> Vec<(T, usize)> {
    let mut out: Vec<(T, usize)> = Vec::new();
    for &x in items {
        match out.last_mut() {
            Some((y, n)) if *y == x => *n += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

fn missing(key: &str) -> Error {
    Error::Json(format!("missing key \"{key}\""))
}

impl Document {
    pub fn from_category(c: &FinCategory) -> Self {
        let CategoryJson { objects, morphisms, id, comp } = encode_category(c);
        Document {
            schema: SCHEMA.into(),
            objects,
            morphisms,
            id,
            comp,
            base2: None,
            disp_objects: None,
            disp_morphisms: None,
            disp_id: None,
            disp_comp: None,
            hid_obj: None,
            hid_sq: None,
            hcomp_obj: None,
            hcomp_sq: None,
            lunitor: None,
            runitor: None,
            associator: None,
        }
    }

    pub fn from_twosided(d: &TwoSidedDispCat) -> Self {
        let mut doc = Document::from_category(d.base1());
        if **d.base1() != **d.base2() {
            doc.base2 = Some(encode_category(d.base2()));
        }
        doc.disp_objects = Some(runs(d.objects()).into_iter().map(|(o, count)| DispObjectRun { x1: o.x1, x2: o.x2, count }).collect());
        doc.disp_morphisms = Some(
            runs(d.morphisms())
                .into_iter()
                .map(|(m, count)| DispMorphismRun { f1: m.f1, f2: m.f2, src: m.src, tgt: m.tgt, count })
                .collect(),
        );
        doc.disp_id = Some(d.identities().to_vec());
        doc.disp_comp = Some(d.table().defined().map(|(s, t, st)| SquareCompEntry { s, t, st }).collect());
        doc
    }

    pub fn from_double(d: &DoubleCategory) -> Self {
        let mut doc = Document::from_twosided(d.squares());
        let t = d.horizontal_tables();
        let unitor = |u: &[StructuralSquare]| u.iter().enumerate().map(|(h, s)| UnitorEntry { h, sq: s.sq, inv: s.inv }).collect();
        doc.hid_obj = Some(t.hid_obj);
        doc.hid_sq = Some(t.hid_sq);
        doc.hcomp_obj = Some(t.hcomp_obj.into_iter().map(|(h, k, hk)| HorCompEntry { h, k, hk }).collect());
        doc.hcomp_sq = Some(t.hcomp_sq.into_iter().map(|(s, t, st)| SquareCompEntry { s, t, st }).collect());
        doc.lunitor = Some(unitor(&t.lunitor));
        doc.runitor = Some(unitor(&t.runitor));
        doc.associator = Some(
            t.associator
                .into_iter()
                .map(|((h1, h2, h3), s)| AssociatorEntry { h1, h2, h3, sq: s.sq, inv: s.inv })
                .collect(),
        );
        doc
    }

    /// The deepest layer the document describes.
    pub fn level(&self) -> Level {
        if self.hid_obj.is_some() || self.hcomp_obj.is_some() || self.associator.is_some() {
            Level::Double
        } else if self.disp_objects.is_some() || self.disp_morphisms.is_some() {
            Level::Twosided
        } else {
            Level::Category
        }
    }

    pub fn category(&self) -> Result<FinCategory> {
        decode_category(&CategoryJson {
            objects: self.objects,
            morphisms: self.morphisms.clone(),
            id: self.id.clone(),
            comp: self.comp.clone(),
        })
    }

    pub fn twosided(&self) -> Result<TwoSidedDispCat> {
        let base1 = Arc::new(self.category()?);
        let base2 = match &self.base2 {
            Some(c) => Arc::new(decode_category(c)?),
            None => base1.clone(),
        };
        let objects = self
            .disp_objects
            .as_ref()
            .ok_or_else(|| missing("disp_objects"))?
            .iter()
            .flat_map(|r| std::iter::repeat_n(DispObj { x1: r.x1, x2: r.x2 }, r.count))
            .collect();
        let morphisms = self
            .disp_morphisms
            .as_ref()
            .ok_or_else(|| missing("disp_morphisms"))?
            .iter()
            .flat_map(|r| std::iter::repeat_n(DispMor { f1: r.f1, f2: r.f2, src: r.src, tgt: r.tgt }, r.count))
            .collect();
        let identity = self.disp_id.clone().ok_or_else(|| missing("disp_id"))?;
        let comp = self.disp_comp.as_ref().ok_or_else(|| missing("disp_comp"))?;
        TwoSidedDispCat::new(base1, base2, objects, morphisms, identity, comp.iter().map(|e| (e.s, e.t, e.st)))
    }

    pub fn double(&self) -> Result<DoubleCategory> {
        if self.base2.is_some() {
            return Err(Error::BoundaryMismatch("a double category has a single vertical category".into()));
        }
        let squares = Arc::new(self.twosided()?);
        let unitor = |key: &str, u: &Option<Vec<UnitorEntry>>| -> Result<Vec<StructuralSquare>> {
            let u = u.as_ref().ok_or_else(|| missing(key))?;
            let mut out = vec![None; squares.object_count()];
            for e in u {
                let slot = out
                    .get_mut(e.h)
                    .ok_or(Error::IndexOutOfRange { table: "unitor", index: e.h, len: squares.object_count() })?;
                if slot.replace(StructuralSquare { sq: e.sq, inv: e.inv }).is_some() {
                    return Err(Error::DuplicateEntry { table: "unitor", key: vec![e.h] });
                }
            }
            out.into_iter()
                .enumerate()
                .map(|(h, s)| s.ok_or_else(|| Error::Json(format!("{key} has no entry for horizontal morphism {h}"))))
                .collect()
        };
        let tables = HorizontalTables {
            hid_obj: self.hid_obj.clone().ok_or_else(|| missing("hid_obj"))?,
            hid_sq: self.hid_sq.clone().ok_or_else(|| missing("hid_sq"))?,
            hcomp_obj: self.hcomp_obj.as_ref().ok_or_else(|| missing("hcomp_obj"))?.iter().map(|e| (e.h, e.k, e.hk)).collect(),
            hcomp_sq: self.hcomp_sq.as_ref().ok_or_else(|| missing("hcomp_sq"))?.iter().map(|e| (e.s, e.t, e.st)).collect(),
            lunitor: unitor("lunitor", &self.lunitor)?,
            runitor: unitor("runitor", &self.runitor)?,
            associator: self
                .associator
                .as_ref()
                .ok_or_else(|| missing("associator"))?
                .iter()
                .map(|e| ((e.h1, e.h2, e.h3), StructuralSquare { sq: e.sq, inv: e.inv }))
                .collect(),
        };
        DoubleCategory::new(squares, tables)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(format!("line {} column {}: {e}", e.line(), e.column())))
}

fn check_schema(schema: &str) -> Result<()> {
    if schema != SCHEMA {
        return Err(Error::Json(format!("unsupported schema \"{schema}\", expected \"{SCHEMA}\"")));
    }
    Ok(())
}

pub fn parse_document(text: &str) -> Result<Document> {
    let doc: Document = parse_json(text)?;
    check_schema(&doc.schema)?;
    Ok(doc)
}

/// A lax functor file. `dom` and `cod` are paths to double-category
/// documents, relative to the functor file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FunctorDocument {
    pub schema: String,
    pub dom: String,
    pub cod: String,
    pub on_obj: Vec<usize>,
    pub on_mor: Vec<usize>,
    pub on_disp_obj: Vec<usize>,
    pub on_disp_mor: Vec<usize>,
    pub id_comparison: Vec<usize>,
    pub comp_comparison: Vec<ComparisonEntry>,
}

impl FunctorDocument {
    pub fn from_functor(f: &LaxDoubleFunctor, dom: &str, cod: &str) -> Self {
        FunctorDocument {
            schema: SCHEMA.into(),
            dom: dom.into(),
            cod: cod.into(),
            on_obj: f.vertical().on_obj().to_vec(),
            on_mor: f.vertical().on_mor().to_vec(),
            on_disp_obj: f.squares().on_obj().to_vec(),
            on_disp_mor: f.squares().on_mor().to_vec(),
            id_comparison: f.id_comparisons().to_vec(),
            comp_comparison: f.comp_comparisons().filter_map(|(h, k, s)| Some(ComparisonEntry { h, k, sq: s? })).collect(),
        }
    }

    /// Builds the functor once its domain and codomain have been loaded.
    pub fn resolve(&self, dom: Arc<DoubleCategory>, cod: Arc<DoubleCategory>) -> Result<LaxDoubleFunctor> {
        let v = FinFunctor::new(dom.vertical().clone(), cod.vertical().clone(), self.on_obj.clone(), self.on_mor.clone())?;
        let squares = TwoSidedDispFunctor::new(
            dom.squares().clone(),
            cod.squares().clone(),
            v.clone(),
            v,
            self.on_disp_obj.clone(),
            self.on_disp_mor.clone(),
        )?;
        let comp = self.comp_comparison.iter().map(|e| (e.h, e.k, e.sq));
        LaxDoubleFunctor::new(dom, cod, squares, self.id_comparison.clone(), comp)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

pub fn parse_functor_document(text: &str) -> Result<FunctorDocument> {
    let doc: FunctorDocument = parse_json(text)?;
    check_schema(&doc.schema)?;
    Ok(doc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{poset_category, square_double_cat, Poset};

    #[test]
    fn double_round_trip() {
        let p = poset_category(&Poset::diamond());
        let d = square_double_cat(p.category()).unwrap();
        let text = Document::from_double(&d).to_json_string();
        let back = parse_document(&text).unwrap();
        assert_eq!(back.level(), Level::Double);
        assert_eq!(back.double().unwrap(), d);
    }

    #[test]
    fn unknown_keys_and_schema_are_rejected() {
        let text = Document::from_category(&FinCategory::terminal()).to_json_string();
        let extra = text.replacen('{', "{\"extra\": 1,", 1);
        assert!(matches!(parse_document(&extra), Err(Error::Json(_))));
        let wrong = text.replace(SCHEMA, "dblcat/0");
        assert!(matches!(parse_document(&wrong), Err(Error::Json(_))));
        assert!(parse_document(&text[..text.len() / 2]).is_err());
    }

    #[test]
    fn empty_category_round_trips() {
        let text = Document::from_category(&FinCategory::empty()).to_json_string();
        assert_eq!(parse_document(&text).unwrap().category().unwrap(), FinCategory::empty());
    }
}
