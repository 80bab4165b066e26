//! Prints the size of each example double category and how long its law
//! suite takes. `cargo run --release --example survey -- 2` sets the finite
//! set size (at most 2 for the Kleisli and lens examples).

use dblcat::doublecat::{check_univalent_double, is_strict, DoubleCategory};
use dblcat::examples::{
    finset_skeleton, finset_skeleton_of, kleisli_double_cat, lenses_double_cat, poset_category, spans_double_cat, square_double_cat,
    structured_cospans_double_cat, Poset, PowersetMonad,
};
use dblcat::fincat::{FinFunctor, FinSetCategory, MapClass};
use dblcat::validate_double_category;
use std::time::Instant;

fn cospans(c: &FinSetCategory) -> dblcat::Result<DoubleCategory> {
    structured_cospans_double_cat(&FinFunctor::identity(c.category().clone()), c)
}

fn run(name: &str, build: impl FnOnce() -> dblcat::Result<DoubleCategory>) {
    let start = Instant::now();
    let d = match build() {
        Ok(d) => d,
        Err(e) => return println!("{name:<32} error: {e}"),
    };
    let built = start.elapsed();
    let r = validate_double_category(&d);
    let checked = start.elapsed() - built;
    println!(
        "{name:<32} {:>6} {:>8} {:>12} {:>10.2?} {:>10.2?}  {:<5} {:<6} {}",
        d.hor_count(),
        d.square_count(),
        r.instances_checked(),
        built,
        checked,
        r.is_empty(),
        is_strict(&d).holds(),
        check_univalent_double(&d).holds()
    );
}

fn main() -> dblcat::Result<()> {
    let n: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(2);
    let small = n.min(2);
    println!("{:<32} {:>6} {:>8} {:>12} {:>10} {:>10}  {:<5} {:<6} univalent", "example", "hor", "squares", "instances", "build", "laws", "ok", "strict");
    run("squares, 4-chain", || square_double_cat(poset_category(&Poset::chain(4)).category()));
    run("kleisli powerset", || kleisli_double_cat(&PowersetMonad, &finset_skeleton(small, 4)?));
    run("spans, diamond", || spans_double_cat(&poset_category(&Poset::diamond())));
    run("spans, injections", || spans_double_cat(&finset_skeleton_of(small, MapClass::INJECTIVE, 4)?));
    run("spans, monotone injections", || spans_double_cat(&finset_skeleton_of(n, MapClass::MONOTONE_INJECTIVE, 4)?));
    let diamond = poset_category(&Poset::diamond());
    run("cospans, diamond", || structured_cospans_double_cat(&FinFunctor::identity(diamond.category().clone()), &diamond));
    run("cospans, surjections", || cospans(&finset_skeleton_of(small, MapClass::SURJECTIVE, 4)?));
    run("cospans, monotone surjections", || cospans(&finset_skeleton_of(n, MapClass::MONOTONE_SURJECTIVE, 4)?));
    run("lenses", || lenses_double_cat(&finset_skeleton(small, 4)?));
    Ok(())
}
