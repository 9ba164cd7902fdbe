//! Reduced Gröbner bases, Hilbert series and Betti tables of four fixed
//! curves against stored canonical text. Set `CURVEREG_BLESS=1` to rewrite
//! the files.

mod common;

use common::{assert_betti_matches_koszul, canonical, golden_cases, golden_path, hilbert_by_counting};
use curvereg::hilbert::hilbert_series;
use curvereg::resolution::{min_free_resolution, ModuleKind};
use curvereg::verify::P3Case;
use curvereg::{Ideal, PrimeField};

fn check(name: &str, i: &Ideal<PrimeField>) {
    let betti = min_free_resolution(i, ModuleKind::Quotient).unwrap().betti_table();
    assert_betti_matches_koszul(i, &betti, name);
    let h = hilbert_series(i).unwrap();
    for d in 0..12 {
        assert_eq!(h.function(d), hilbert_by_counting(i, d as u32), "H({d}) of {name}");
    }
    let text = canonical(name, i, &betti);
    let path = golden_path(name);
    if std::env::var_os("CURVEREG_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
    }
    let stored = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(text, stored, "{name} differs from {}", path.display());
}

#[test]
fn golden_cases_match_stored_text() {
    for (name, i) in golden_cases() {
        check(name, &i);
    }
}

#[test]
fn two_conics_is_a_complete_intersection() {
    let c = P3Case::TwoConics.build(PrimeField::default()).unwrap();
    let ci = Ideal::parse(c.ring(), &["x0*x3", "x1*x2 - x0^2 - x3^2"]).unwrap();
    assert!(c.ideal().same_ideal(&ci).unwrap());
}
