//! Betti numbers from a minimal resolution against Koszul homology.

mod common;

use common::assert_betti_matches_koszul;
use curvereg::resolution::{min_free_resolution, ModuleKind};
use curvereg::{Ideal, PrimeField, Ring};

fn compare(r: &Ring<PrimeField>, gens: &[&str]) {
    let i = Ideal::parse(r, gens).unwrap();
    let b = min_free_resolution(&i, ModuleKind::Quotient).unwrap().betti_table();
    assert_betti_matches_koszul(&i, &b, &format!("{gens:?}"));
}

#[test]
fn resolution_matches_koszul_homology() {
    let r4 = Ring::new(PrimeField::default(), 4).unwrap();
    compare(&r4, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
    compare(&r4, &["x2", "x3"]);
    compare(&r4, &["x0*x1 - x2*x3", "x0^2 - x3^2", "x1^3"]);
    compare(&r4, &["x3", "x1*x2"]);
    let r3 = Ring::new(PrimeField::default(), 3).unwrap();
    compare(&r3, &["x0^2", "x0*x1"]);
    compare(&r3, &["x0^2 - x1*x2", "x1^2 - x0*x2 + x2^2"]);
    compare(&r3, &["x0*x1", "x0*x2", "x1*x2"]);
    compare(&r3, &["x2*x0", "x2*x1", "x0*x1*(x0 - x1)*(x0 - 2*x1)"]);
    let r5 = Ring::new(PrimeField::default(), 5).unwrap();
    compare(&r5, &["x0*x4", "x1*x3 - x2^2", "x0*x1", "x3*x4"]);
}
