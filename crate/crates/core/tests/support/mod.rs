//! Brute-force enumerators and oracles shared by the integration tests.
//!
//! Nothing here calls the deciders under test: inverses and weak inverses are
//! found by exhaustive search over all candidate transformations.

#![allow(dead_code)]

use dblcat::dblfunctor::{compose_functors, identity_functor, validate_lax_functor, validate_transformation, DoubleTransformation, LaxDoubleFunctor};
use dblcat::doublecat::{DoubleCategory, HorizontalTables, StructuralSquare};
use dblcat::fincat::{validate_functor, FinCategory, FinFunctor};
use dblcat::table::Edge;
use dblcat::twosided::{DispMor, DispObj, TwoSidedDispCat, TwoSidedDispFunctor};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;

/// Cartesian product of candidate lists, as index vectors.
pub fn product(choices: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for c in choices {
        let mut next = Vec::with_capacity(out.len() * c.len());
        for prefix in &out {
            for &x in c {
                let mut p = prefix.clone();
                p.push(x);
                next.push(p);
            }
        }
        out = next;
    }
    out
}

/// Every functor `c -> d`, found by trying all assignments.
pub fn all_functors(c: &Arc<FinCategory>, d: &Arc<FinCategory>) -> Vec<FinFunctor> {
    let objs = vec![(0..d.object_count()).collect::<Vec<_>>(); c.object_count()];
    let mut out = Vec::new();
    for on_obj in product(&objs) {
        let mors: Vec<Vec<usize>> = (0..c.morphism_count()).map(|f| d.hom_vec(on_obj[c.src(f)], on_obj[c.tgt(f)])).collect();
        for on_mor in product(&mors) {
            let f = FinFunctor::new(c.clone(), d.clone(), on_obj.clone(), on_mor).unwrap();
            if validate_functor(&f).is_empty() {
                out.push(f);
            }
        }
    }
    out
}

fn squares_with(e: &DoubleCategory, f1: usize, f2: usize, src: usize, tgt: usize) -> Vec<usize> {
    e.squares().between(src, tgt).iter().copied().filter(|&s| {
        let m = e.square(s);
        m.f1 == f1 && m.f2 == f2
    }).collect()
}

/// Every lax functor `d -> e`. Candidates are generated boundary-correct and
/// then filtered by the law suite.
pub fn all_lax_functors(d: &Arc<DoubleCategory>, e: &Arc<DoubleCategory>) -> Vec<LaxDoubleFunctor> {
    let mut out = Vec::new();
    for v in all_functors(d.vertical(), e.vertical()) {
        let hor_choices: Vec<Vec<usize>> = (0..d.hor_count())
            .map(|h| {
                let (x, y) = d.hor(h);
                e.squares().objects_over(v.obj(x), v.obj(y)).collect()
            })
            .collect();
        for on_hor in product(&hor_choices) {
            let sq_choices: Vec<Vec<usize>> = (0..d.square_count())
                .map(|s| {
                    let m = d.square(s);
                    squares_with(e, v.mor(m.f1), v.mor(m.f2), on_hor[m.src], on_hor[m.tgt])
                })
                .collect();
            let ev = e.vertical();
            let id_choices: Vec<Vec<usize>> = (0..d.vertical().object_count())
                .map(|x| {
                    let fx = v.obj(x);
                    squares_with(e, ev.id(fx), ev.id(fx), e.hid(fx), on_hor[d.hid(x)])
                })
                .collect();
            let pairs: Vec<(usize, usize, usize)> = d.hcomp_table().defined().collect();
            let comp_choices: Vec<Vec<usize>> = pairs
                .iter()
                .map(|&(h, k, hk)| match e.hcomp(on_hor[h], on_hor[k]) {
                    Some(src) => {
                        let (x, z) = (v.obj(d.hor(h).0), v.obj(d.hor(k).1));
                        squares_with(e, ev.id(x), ev.id(z), src, on_hor[hk])
                    }
                    None => vec![],
                })
                .collect();
            for on_sq in product(&sq_choices) {
                let squares = TwoSidedDispFunctor::new(d.squares().clone(), e.squares().clone(), v.clone(), v.clone(), on_hor.clone(), on_sq)
                    .unwrap();
                for ids in product(&id_choices) {
                    for comps in product(&comp_choices) {
                        let comp = pairs.iter().zip(&comps).map(|(&(h, k, _), &s)| (h, k, s));
                        let f = LaxDoubleFunctor::new(d.clone(), e.clone(), squares.clone(), ids.clone(), comp).unwrap();
                        if validate_lax_functor(&f).is_empty() {
                            out.push(f);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Every transformation `f => g`.
pub fn all_transformations(f: &LaxDoubleFunctor, g: &LaxDoubleFunctor) -> Vec<DoubleTransformation> {
    let d = f.dom();
    let e = f.cod();
    let ev = e.vertical();
    let vchoices: Vec<Vec<usize>> = (0..d.vertical().object_count()).map(|x| ev.hom_vec(f.obj(x), g.obj(x))).collect();
    let mut out = Vec::new();
    for vert in product(&vchoices) {
        let schoices: Vec<Vec<usize>> = (0..d.hor_count())
            .map(|h| {
                let (x, y) = d.hor(h);
                squares_with(e, vert[x], vert[y], f.hor(h), g.hor(h))
            })
            .collect();
        for sq in product(&schoices) {
            let Ok(t) = DoubleTransformation::new(f.clone(), g.clone(), vert.clone(), sq) else { continue };
            if validate_transformation(&t).is_empty() {
                out.push(t);
            }
        }
    }
    out
}

/// Searches all transformations `g => f` for a two-sided inverse of `t`.
pub fn brute_inverse(t: &DoubleTransformation) -> Option<DoubleTransformation> {
    let (f, g) = (t.dom(), t.cod());
    let id_f = DoubleTransformation::identity(f);
    let id_g = DoubleTransformation::identity(g);
    all_transformations(g, f)
        .into_iter()
        .find(|s| t.then(s).as_ref() == Some(&id_f) && s.then(t).as_ref() == Some(&id_g))
}

/// Some transformation `a => b` that has a brute-force inverse.
pub fn brute_iso(a: &LaxDoubleFunctor, b: &LaxDoubleFunctor) -> Option<DoubleTransformation> {
    all_transformations(a, b).into_iter().find(|t| brute_inverse(t).is_some())
}

/// A lax functor `g : e -> d` with `f;g ≅ id` and `g;f ≅ id`, by search.
pub fn brute_weak_inverse(f: &LaxDoubleFunctor) -> Option<LaxDoubleFunctor> {
    let (d, e) = (f.dom(), f.cod());
    let (id_d, id_e) = (identity_functor(d), identity_functor(e));
    all_lax_functors(e, d).into_iter().find(|g| {
        let fg = compose_functors(f, g).unwrap();
        let gf = compose_functors(g, f).unwrap();
        brute_iso(&id_d, &fg).is_some() && brute_iso(&id_e, &gf).is_some()
    })
}

fn inverse_perm(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

fn shuffled(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Permutes every index of `d` and returns the relabeled copy together with
/// the isomorphism `d -> copy`.
pub fn relabel(d: &Arc<DoubleCategory>, seed: u64) -> (Arc<DoubleCategory>, LaxDoubleFunctor) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let v = d.vertical();
    let po = shuffled(v.object_count(), &mut rng);
    let pm = shuffled(v.morphism_count(), &mut rng);
    let ph = shuffled(d.hor_count(), &mut rng);
    let ps = shuffled(d.square_count(), &mut rng);
    let (im, ih, is) = (inverse_perm(&pm), inverse_perm(&ph), inverse_perm(&ps));
    let io = inverse_perm(&po);

    let arrows = (0..v.morphism_count()).map(|f| Edge::new(po[v.src(im[f])], po[v.tgt(im[f])])).collect();
    let ids = (0..v.object_count()).map(|x| pm[v.id(io[x])]).collect();
    let comp: Vec<_> = v.composition_entries().map(|(f, g, fg)| (pm[f], pm[g], pm[fg])).collect();
    let w = Arc::new(FinCategory::new(v.object_count(), arrows, ids, comp).unwrap());

    let sq = d.squares();
    let objects = (0..d.hor_count())
        .map(|h| {
            let (x, y) = d.hor(ih[h]);
            DispObj { x1: po[x], x2: po[y] }
        })
        .collect();
    let morphisms = (0..d.square_count())
        .map(|s| {
            let m = d.square(is[s]);
            DispMor { f1: pm[m.f1], f2: pm[m.f2], src: ph[m.src], tgt: ph[m.tgt] }
        })
        .collect();
    let disp_id = (0..d.hor_count()).map(|h| ps[sq.id(ih[h])]).collect();
    let disp_comp: Vec<_> = sq.table().defined().map(|(s, t, st)| (ps[s], ps[t], ps[st])).collect();
    let sq2 = Arc::new(TwoSidedDispCat::new(w.clone(), w.clone(), objects, morphisms, disp_id, disp_comp).unwrap());

    let t = d.horizontal_tables();
    let perm_st = |s: StructuralSquare| StructuralSquare { sq: ps[s.sq], inv: ps[s.inv] };
    let tables = HorizontalTables {
        hid_obj: (0..v.object_count()).map(|x| ph[t.hid_obj[io[x]]]).collect(),
        hid_sq: (0..v.morphism_count()).map(|f| ps[t.hid_sq[im[f]]]).collect(),
        hcomp_obj: t.hcomp_obj.iter().map(|&(h, k, hk)| (ph[h], ph[k], ph[hk])).collect(),
        hcomp_sq: t.hcomp_sq.iter().map(|&(s, u, su)| (ps[s], ps[u], ps[su])).collect(),
        lunitor: (0..d.hor_count()).map(|h| perm_st(t.lunitor[ih[h]])).collect(),
        runitor: (0..d.hor_count()).map(|h| perm_st(t.runitor[ih[h]])).collect(),
        associator: t.associator.iter().map(|&((a, b, c), s)| ((ph[a], ph[b], ph[c]), perm_st(s))).collect(),
    };
    let e = Arc::new(DoubleCategory::new(sq2.clone(), tables).unwrap());

    let vf = FinFunctor::new(v.clone(), w, po.clone(), pm.clone()).unwrap();
    let sf = TwoSidedDispFunctor::new(d.squares().clone(), sq2, vf.clone(), vf, ph.clone(), ps.clone()).unwrap();
    let id_comparison = (0..v.object_count()).map(|x| ps[d.vid(d.hid(x))]).collect();
    let comp = d.hcomp_table().defined().map(|(h, k, hk)| (h, k, ps[d.vid(hk)]));
    let f = LaxDoubleFunctor::new(d.clone(), e.clone(), sf, id_comparison, comp).unwrap();
    (e, f)
}

/// The double category on `c` whose only horizontal morphisms are identities
/// and whose squares are the morphisms of `c`.
pub fn vertical_only(c: &Arc<FinCategory>) -> Arc<DoubleCategory> {
    let objects = (0..c.object_count()).map(|x| DispObj { x1: x, x2: x }).collect();
    let morphisms = (0..c.morphism_count()).map(|f| DispMor { f1: f, f2: f, src: c.src(f), tgt: c.tgt(f) }).collect();
    let ids = c.identities().to_vec();
    let comp: Vec<_> = c.composition_entries().collect();
    let sq = Arc::new(TwoSidedDispCat::new(c.clone(), c.clone(), objects, morphisms, ids.clone(), comp.clone()).unwrap());
    let unit = |x: usize| StructuralSquare { sq: c.id(x), inv: c.id(x) };
    let tables = HorizontalTables {
        hid_obj: (0..c.object_count()).collect(),
        hid_sq: (0..c.morphism_count()).collect(),
        hcomp_obj: (0..c.object_count()).map(|x| (x, x, x)).collect(),
        hcomp_sq: (0..c.morphism_count()).map(|f| (f, f, f)).collect(),
        lunitor: (0..c.object_count()).map(unit).collect(),
        runitor: (0..c.object_count()).map(unit).collect(),
        associator: (0..c.object_count()).map(|x| ((x, x, x), unit(x))).collect(),
    };
    Arc::new(DoubleCategory::new(sq, tables).unwrap())
}
