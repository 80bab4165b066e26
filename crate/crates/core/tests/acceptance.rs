//! One test per acceptance criterion. Each prints a single verdict line
//! `criterion N: PASS|FAIL ...` before asserting.

mod support;

use dblcat::dblfunctor::{
    is_adjoint_equivalence, is_invertible_2cell, is_strong, identity_functor, AdjointEquivalenceFailure,
    LaxDoubleFunctor,
};
use dblcat::doublecat::{check_univalent_double, from_unfolded, is_strict, to_unfolded, DoubleCategory, DoubleUnivalenceFailure, StructuralSquare};
use dblcat::examples::{
    cyclic_group, finset_skeleton, finset_skeleton_of, kleisli_compose, kleisli_double_cat, kleisli_extension,
    lenses_double_cat, poset_category, saturation_functor, spans_double_cat, square_double_cat, square_functor,
    structured_cospans_double_cat, Poset, PowersetMonad,
};
use dblcat::fincat::{EquivalenceFailure, FinCategory, FinFunctor, FinMap, FinSetCategory, MapClass};
use dblcat::{validate_double_category, Decision};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use std::time::Instant;

fn verdict(n: u32, ok: bool, detail: &str) {
    println!("criterion {n}: {} {detail}", if ok { "PASS" } else { "FAIL" });
}

fn cospans_over(c: &FinSetCategory) -> dblcat::Result<DoubleCategory> {
    structured_cospans_double_cat(&FinFunctor::identity(c.category().clone()), c)
}

type Build = Box<dyn Fn() -> dblcat::Result<DoubleCategory>>;

/// The example double categories on the carriers this machine can check.
fn examples() -> Vec<(&'static str, Build)> {
    vec![
        ("squares over a 4-chain", Box::new(|| square_double_cat(poset_category(&Poset::chain(4)).category()))),
        ("kleisli powerset, sets <= 2", Box::new(|| kleisli_double_cat(&PowersetMonad, &finset_skeleton(2, 4)?))),
        ("spans, diamond meet-semilattice", Box::new(|| spans_double_cat(&poset_category(&Poset::diamond())))),
        ("spans, injections on sets <= 2", Box::new(|| spans_double_cat(&finset_skeleton_of(2, MapClass::INJECTIVE, 4)?))),
        (
            "spans, monotone injections on sets <= 3",
            Box::new(|| spans_double_cat(&finset_skeleton_of(3, MapClass::MONOTONE_INJECTIVE, 4)?)),
        ),
        (
            "cospans, diamond join-semilattice",
            Box::new(|| {
                let p = poset_category(&Poset::diamond());
                structured_cospans_double_cat(&FinFunctor::identity(p.category().clone()), &p)
            }),
        ),
        ("cospans, surjections on sets <= 2", Box::new(|| cospans_over(&finset_skeleton_of(2, MapClass::SURJECTIVE, 4)?))),
        (
            "cospans, monotone surjections on sets <= 3",
            Box::new(|| cospans_over(&finset_skeleton_of(3, MapClass::MONOTONE_SURJECTIVE, 4)?)),
        ),
        ("lenses, sets <= 2", Box::new(|| lenses_double_cat(&finset_skeleton(2, 4)?))),
    ]
}

/// Law instances of the pentagon alone for Kleisli/powerset on sets of size
/// `0..=n`: chains of four horizontal morphisms `x0 -> x1 -> x2 -> x3 -> x4`.
fn kleisli_pentagon_instances(n: u32) -> f64 {
    let sizes: Vec<u32> = (0..=n).collect();
    // hom[x][y] = |x -> P(y)| = 2^(x*y)
    let hom = |x: u32, y: u32| 2f64.powi((x * y) as i32);
    let mut paths = vec![1.0; sizes.len()];
    for _ in 0..4 {
        paths = sizes.iter().map(|&y| sizes.iter().map(|&x| paths[x as usize] * hom(x, y)).sum()).collect();
    }
    paths.iter().sum()
}

#[test]
fn criterion_1_law_suite_soundness() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut kleisli_rate = 0.0;
    for (name, build) in examples() {
        let t = Instant::now();
        match build() {
            Ok(d) => {
                let r = validate_double_category(&d);
                let secs = t.elapsed().as_secs_f64();
                println!("  {name}: {} law instances, {} violations, {secs:.2}s", r.instances_checked(), r.violations().len());
                if name.starts_with("kleisli") {
                    kleisli_rate = r.instances_checked() as f64 / secs;
                }
                if !r.is_empty() {
                    failures.push(format!("{name}: {}", r.violations()[0]));
                }
            }
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    let total = start.elapsed().as_secs_f64();
    // Kleisli/powerset on sets <= 3 cannot be enumerated here: report the
    // size of its pentagon alone against the time budget.
    let pentagon = kleisli_pentagon_instances(3);
    let estimate = pentagon / kleisli_rate.max(1.0);
    println!("  kleisli powerset, sets <= 3: {pentagon:.3e} pentagon instances, about {estimate:.0}s at the measured rate");
    if estimate > 60.0 {
        failures.push(format!("kleisli powerset on sets <= 3 not checkable: {pentagon:.2e} pentagon instances"));
    }
    if total > 60.0 {
        failures.push(format!("runtime {total:.1}s exceeds 60s"));
    }
    let ok = failures.is_empty();
    verdict(1, ok, &format!("({total:.1}s) {}", failures.join("; ")));
    assert!(ok, "{failures:?}");
}

#[test]
fn criterion_2_univalence_shadow() {
    let mut failures = Vec::new();
    for (name, build) in examples() {
        let d = build().unwrap();
        match check_univalent_double(&d) {
            Decision::Holds => println!("  {name}: univalent"),
            Decision::Fails(w) => {
                println!("  {name}: not univalent, {w:?}");
                failures.push(name);
            }
        }
    }
    // Z/2 as a one-object vertical category: the generator is a non-identity automorphism.
    let z2 = Arc::new(cyclic_group(2));
    let d = square_double_cat(&z2).unwrap();
    let counterexample_ok = match check_univalent_double(&d) {
        Decision::Fails(DoubleUnivalenceFailure::Vertical(w)) => w.morphism != z2.id(0) && z2.src(w.morphism) == z2.tgt(w.morphism),
        _ => false,
    };
    println!("  counterexample with a non-identity automorphism rejected: {counterexample_ok}");
    let ok = failures.is_empty() && counterexample_ok;
    verdict(2, ok, &format!("not univalent: {failures:?}"));
    assert!(counterexample_ok);
    assert!(failures.is_empty(), "examples failing univalence: {failures:?}");
}

#[test]
fn criterion_3_unfolded_round_trip() {
    let mut tables = 0;
    let mut failures = Vec::new();
    for (name, build) in examples() {
        let d = build().unwrap();
        let u = to_unfolded(&d).unwrap();
        let back = from_unfolded(&u).unwrap();
        let again = to_unfolded(&back).unwrap();
        // vertical, horizontal, hor identity/composition, squares, square vid/vcomp/hid/hcomp, unitors, associator
        tables += 11;
        if back != d || again != u {
            failures.push(name);
        }
    }
    let ok = failures.is_empty();
    verdict(3, ok, &format!("{tables} tables compared, mismatches in {failures:?}"));
    assert!(ok);
}

/// Small double categories on carriers of size <= 2.
fn small_family() -> Vec<(&'static str, Arc<DoubleCategory>)> {
    let sq = |c: FinCategory| Arc::new(square_double_cat(&Arc::new(c)).unwrap());
    vec![
        ("squares(1)", sq(FinCategory::terminal())),
        ("squares(2 discrete)", sq(FinCategory::discrete(2))),
        ("squares(arrow)", sq(FinCategory::walking_arrow())),
        ("squares(iso)", sq(FinCategory::walking_iso())),
        ("vertical(arrow)", support::vertical_only(&Arc::new(FinCategory::walking_arrow()))),
        ("spans(2-chain)", Arc::new(spans_double_cat(&poset_category(&Poset::chain(2))).unwrap())),
    ]
}

#[test]
fn criterion_4_invertible_2cells_agree_with_inverse_search() {
    let family = small_family();
    let (mut checked, mut invertible, mut disagreements) = (0usize, 0usize, 0usize);
    for (_, d) in &family {
        for (_, e) in &family {
            let functors = support::all_lax_functors(d, e);
            for f in &functors {
                for g in &functors {
                    for t in support::all_transformations(f, g) {
                        let decided = is_invertible_2cell(&t).holds();
                        let searched = support::brute_inverse(&t).is_some();
                        checked += 1;
                        invertible += decided as usize;
                        disagreements += (decided != searched) as usize;
                    }
                }
            }
        }
    }
    let ok = disagreements == 0 && checked > 0;
    verdict(4, ok, &format!("{checked} transformations ({invertible} invertible), {disagreements} disagreements"));
    assert!(ok);
}

#[test]
fn criterion_5_adjoint_equivalences() {
    let mut notes = Vec::new();
    let mut ok = true;
    let mut check = |cond: bool, what: String| {
        if !cond {
            ok = false;
        }
        notes.push(format!("{what}: {}", if cond { "ok" } else { "wrong" }));
    };

    // identity and relabeling functors are accepted and have brute-force weak inverses
    for (name, d) in small_family() {
        let id = identity_functor(&d);
        check(is_adjoint_equivalence(&id).holds() && support::brute_weak_inverse(&id).is_some(), format!("identity on {name}"));
        let (_, f) = support::relabel(&d, 7);
        check(is_adjoint_equivalence(&f).holds() && support::brute_weak_inverse(&f).is_some(), format!("relabeling of {name}"));
    }
    let kleisli = Arc::new(kleisli_double_cat(&PowersetMonad, &finset_skeleton(2, 4).unwrap()).unwrap());
    let (_, f) = support::relabel(&kleisli, 11);
    check(is_adjoint_equivalence(&f).holds(), "relabeling of kleisli powerset <= 2".into());

    // every lax functor in the family: accepted exactly when a weak inverse exists
    let family = small_family();
    let mut total = 0;
    let mut mismatches = 0;
    for (_, d) in &family {
        for (_, e) in &family {
            for f in support::all_lax_functors(d, e) {
                total += 1;
                let accepted = is_adjoint_equivalence(&f).holds();
                if accepted != support::brute_weak_inverse(&f).is_some() {
                    mismatches += 1;
                }
                if accepted && !is_strong(&f).holds() {
                    mismatches += 1;
                }
            }
        }
    }
    check(mismatches == 0, format!("{total} enumerated functors vs weak-inverse search, {mismatches} mismatches"));

    // strong, vertical part misses object 1 of the walking arrow
    let arrow = Arc::new(FinCategory::walking_arrow());
    let incl = FinFunctor::new(Arc::new(FinCategory::terminal()), arrow.clone(), vec![0], vec![arrow.id(0)]).unwrap();
    let f = square_functor(&incl).unwrap();
    let clause = matches!(
        is_adjoint_equivalence(&f),
        Decision::Fails(AdjointEquivalenceFailure::Vertical(EquivalenceFailure::NotEssentiallySurjective { object: 1 }))
    );
    check(is_strong(&f).holds() && clause, "strong, not essentially surjective".into());

    // lax, not strong
    let sat: LaxDoubleFunctor = saturation_functor(&poset_category(&Poset::chain(2))).unwrap();
    let clause = matches!(is_adjoint_equivalence(&sat), Decision::Fails(AdjointEquivalenceFailure::NotStrong(_)));
    check(clause, "non-strong lax functor".into());

    for n in &notes {
        println!("  {n}");
    }
    verdict(5, ok, &format!("{} checks", notes.len()));
    assert!(ok, "{notes:?}");
}

/// The `i`-th group of `width` bits of `code`: the image of `i` under a
/// relation packed one subset per group.
fn group(code: u32, i: usize, width: usize) -> usize {
    ((code >> (i * width)) as usize) & ((1 << width) - 1)
}

#[test]
fn criterion_6_relational_composition() {
    const N: usize = 4;
    let m = PowersetMonad;
    let (mut pairs, mut mismatches) = (0u64, 0u64);
    for x in 0..=N {
        for y in 0..=N {
            for z in 0..=N {
                for kcode in 0u32..(1 << (y * z)) {
                    // k : y -> P(z), j-th image in the j-th group of z bits
                    let k_of = |j: usize| group(kcode, j, z);
                    let k = FinMap::from_fn(y, 1 << z, k_of);
                    let ext = kleisli_extension(&m, &k, z).unwrap();
                    // independent: l ∈ (S;k) iff some j ∈ S has l ∈ k(j)
                    let oracle: Vec<usize> = (0..1usize << y)
                        .map(|s| {
                            let mut out = 0;
                            for l in 0..z {
                                for j in 0..y {
                                    if s >> j & 1 == 1 && k_of(j) >> l & 1 == 1 {
                                        out |= 1 << l;
                                        break;
                                    }
                                }
                            }
                            out
                        })
                        .collect();
                    let hcount = 1u32 << (x * y);
                    if x * y + y * z <= 12 {
                        // small: the full library composite against a triple loop per pair
                        for hcode in 0..hcount {
                            let h_of = |i: usize| group(hcode, i, y);
                            let h = FinMap::from_fn(x, 1 << y, h_of);
                            let hk = kleisli_compose(&m, &h, &k, z).unwrap();
                            for i in 0..x {
                                let mut want = 0;
                                for j in 0..y {
                                    for l in 0..z {
                                        if h_of(i) >> j & 1 == 1 && k_of(j) >> l & 1 == 1 {
                                            want |= 1 << l;
                                        }
                                    }
                                }
                                if hk.apply(i) != want {
                                    mismatches += 1;
                                    break;
                                }
                            }
                            pairs += 1;
                        }
                    } else {
                        // large: the library extension table against the oracle table, pair by pair
                        let lib = ext.table();
                        let pack = |table: &[usize], hcode: u32| (0..x).fold(0u32, |acc, i| acc | (table[group(hcode, i, y)] as u32) << (4 * i));
                        for hcode in 0..hcount {
                            if pack(lib, hcode) != pack(&oracle, hcode) {
                                mismatches += 1;
                            }
                        }
                        pairs += hcount as u64;
                    }
                    if ext.table() != oracle.as_slice() {
                        mismatches += 1;
                    }
                }
            }
        }
    }
    let d = kleisli_double_cat(&m, &finset_skeleton(2, 4).unwrap()).unwrap();
    let table_ok = validate_relational_table(&d);
    let ok = mismatches == 0 && table_ok;
    verdict(6, ok, &format!("{pairs} relation pairs on sets <= {N}, {mismatches} mismatches; double-category table on sets <= 2 agrees: {table_ok}"));
    assert!(ok);
}

/// The horizontal composition table of the built double category against
/// relational composition. Horizontal morphisms over each boundary are the
/// relations `x -> P(y)` in lexicographic order.
#[allow(clippy::needless_range_loop)]
fn validate_relational_table(d: &DoubleCategory) -> bool {
    let c = finset_skeleton(2, 4).unwrap();
    let mut by_pair = std::collections::BTreeMap::new();
    for h in 0..d.hor_count() {
        by_pair.entry(d.hor(h)).or_insert_with(Vec::new).push(h);
    }
    let mut rel: Vec<Vec<usize>> = vec![vec![]; d.hor_count()];
    for (&(x, y), hs) in &by_pair {
        let maps: Vec<FinMap> = FinMap::all(c.size(x), 1 << c.size(y)).collect();
        if maps.len() != hs.len() {
            return false;
        }
        for (h, f) in hs.iter().zip(maps) {
            rel[*h] = f.table().to_vec();
        }
    }
    d.hcomp_table().defined().all(|(h, k, hk)| {
        let (_, y) = d.hor(h);
        let (_, z) = d.hor(k);
        let (ny, nz) = (c.size(y), c.size(z));
        rel[h].iter().enumerate().all(|(i, &s)| {
            let mut want = 0;
            for j in 0..ny {
                for l in 0..nz {
                    if s >> j & 1 == 1 && rel[k][j] >> l & 1 == 1 {
                        want |= 1 << l;
                    }
                }
            }
            rel[hk][i] == want
        })
    })
}

/// A single-entry change to a unitor, associator or horizontal square
/// composition table. Returns a description of the mutation.
fn mutate(d: &mut DoubleCategory, rng: &mut ChaCha8Rng) -> String {
    let ns = d.square_count();
    let other = |rng: &mut ChaCha8Rng, old: usize| (old + rng.gen_range(1..ns)) % ns;
    loop {
        match rng.gen_range(0..4) {
            0 if d.hor_count() > 0 => {
                let h = rng.gen_range(0..d.hor_count());
                let mut s = d.lunitor(h);
                s.sq = other(rng, s.sq);
                d.set_lunitor(h, s);
                return format!("lunitor[{h}]");
            }
            1 if d.hor_count() > 0 => {
                let h = rng.gen_range(0..d.hor_count());
                let mut s = d.runitor(h);
                s.inv = other(rng, s.inv);
                d.set_runitor(h, s);
                return format!("runitor[{h}].inv");
            }
            2 => {
                let entries: Vec<_> = d.associator_entries().collect();
                if entries.is_empty() {
                    continue;
                }
                let ((a, b, c), s) = entries[rng.gen_range(0..entries.len())];
                let s = if rng.gen_bool(0.5) {
                    StructuralSquare { sq: other(rng, s.sq), inv: s.inv }
                } else {
                    StructuralSquare { sq: s.sq, inv: other(rng, s.inv) }
                };
                d.set_associator(a, b, c, s);
                return format!("associator[{a},{b},{c}]");
            }
            3 => {
                let entries: Vec<_> = d.hcomp_sq_table().defined().collect();
                if entries.is_empty() {
                    continue;
                }
                let (s, t, st) = entries[rng.gen_range(0..entries.len())];
                d.set_hcomp_sq(s, t, Some(other(rng, st)));
                return format!("hcomp_sq[{s},{t}]");
            }
            _ => continue,
        }
    }
}

#[test]
fn criterion_7_mutation_sensitivity() {
    const SAMPLES: usize = 50;
    let cases: Vec<(&str, DoubleCategory)> = vec![
        ("squares over a 3-chain", square_double_cat(poset_category(&Poset::chain(3)).category()).unwrap()),
        ("kleisli powerset on a 2-element set", kleisli_double_cat(&PowersetMonad, &FinSetCategory::new(vec![2], MapClass::ALL, 4).unwrap()).unwrap()),
        ("spans, diamond", spans_double_cat(&poset_category(&Poset::diamond())).unwrap()),
        ("spans, injections on sets <= 2", spans_double_cat(&finset_skeleton_of(2, MapClass::INJECTIVE, 4).unwrap()).unwrap()),
        ("cospans, surjections on sets <= 2", cospans_over(&finset_skeleton_of(2, MapClass::SURJECTIVE, 4).unwrap()).unwrap()),
        ("cospans, monotone surjections on sets <= 3", cospans_over(&finset_skeleton_of(3, MapClass::MONOTONE_SURJECTIVE, 4).unwrap()).unwrap()),
        ("lenses, sets <= 2", lenses_double_cat(&finset_skeleton(2, 4).unwrap()).unwrap()),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let (mut total, mut missed) = (0, Vec::new());
    for (name, d) in &cases {
        assert!(validate_double_category(d).is_empty(), "{name} must be valid before mutation");
        for _ in 0..SAMPLES {
            let mut m = d.clone();
            let what = mutate(&mut m, &mut rng);
            total += 1;
            if validate_double_category(&m).is_empty() {
                missed.push(format!("{name}: {what}"));
            }
        }
    }
    let ok = missed.is_empty();
    verdict(7, ok, &format!("{} of {total} mutations detected across {} examples {missed:?}", total - missed.len(), cases.len()));
    assert!(ok);
}

#[test]
fn criterion_8_strictness() {
    let squares = square_double_cat(poset_category(&Poset::chain(4)).category()).unwrap();
    let kleisli = kleisli_double_cat(&PowersetMonad, &finset_skeleton(2, 4).unwrap()).unwrap();
    let spans = spans_double_cat(&finset_skeleton_of(2, MapClass::INJECTIVE, 4).unwrap()).unwrap();
    let (a, b) = (is_strict(&squares).holds(), is_strict(&kleisli).holds());
    let spans_strict = is_strict(&spans);
    println!("  spans over injections on sets <= 2: {:?}", spans_strict.witness());
    let ok = a && b && !spans_strict.holds();
    verdict(8, ok, &format!("squares strict {a}, kleisli strict {b}, spans over finite sets strict {}", spans_strict.holds()));
    assert!(ok);
}
