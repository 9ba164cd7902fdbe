#![allow(dead_code)]

//! Betti numbers from a minimal resolution against Koszul homology:
//! `β_{i,j}(S/I) = dim H_i(K(x_0..x_n) ⊗ S/I)_j`, computed by ranks of
//! matrices over graded pieces.

use curvereg::linalg::{rank, Matrix};
use curvereg::{Field, Ideal, Monomial, PrimeField};

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

pub fn koszul_betti(i: &Ideal<PrimeField>, hom: usize, deg: i64) -> u64 {
    let r = i.ring();
    let f = r.field();
    let n = r.nvars();
    let gb = i.gb();
    let lms = gb.lead_monomials();
    let standard = |d: i64| -> Vec<Monomial> {
        if d < 0 {
            return vec![];
        }
        r.monomials_of_degree(d as u32).into_iter().filter(|m| !lms.iter().any(|l| l.divides(m))).collect()
    };
    // matrix of d_k : K_{k,deg} -> K_{k-1,deg}
    let dmat = |k: usize| -> (usize, usize, usize) {
        let src_b = standard(deg - k as i64);
        let dst_b = if k == 0 { vec![] } else { standard(deg - k as i64 + 1) };
        let src_s = subsets(n, k);
        let dst_s = if k == 0 { vec![] } else { subsets(n, k - 1) };
        let rows = dst_s.len() * dst_b.len();
        let cols = src_s.len() * src_b.len();
        if k == 0 || rows == 0 || cols == 0 {
            return (rows, cols, 0);
        }
        let mut m = Matrix::zeros(f, rows, cols);
        for (si, s) in src_s.iter().enumerate() {
            for (bi, b) in src_b.iter().enumerate() {
                let col = si * src_b.len() + bi;
                for (pos, &v) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(pos);
                    let ri = dst_s.iter().position(|t| *t == rest).unwrap();
                    let prod = r.term(f.one(), b.mul(&Monomial::var(n, v)));
                    let nf = gb.normal_form(&prod).unwrap();
                    for (mono, c) in nf.terms() {
                        let bj = dst_b.iter().position(|x| x == mono).unwrap();
                        let c = if pos % 2 == 0 { *c } else { f.neg(c) };
                        let row = ri * dst_b.len() + bj;
                        m.data[row][col] = f.add(&m.data[row][col], &c);
                    }
                }
            }
        }
        (rows, cols, rank(f, &m))
    };
    let (_, dim_k, rank_out) = dmat(hom);
    let (_, _, rank_in) = dmat(hom + 1);
    (dim_k - rank_out - rank_in) as u64
}

/// `dim_K (S/I)_d` by counting standard monomials of the Gröbner basis.
pub fn hilbert_by_counting(i: &Ideal<PrimeField>, d: u32) -> i64 {
    let lms = i.gb().lead_monomials();
    i.ring().monomials_of_degree(d).into_iter().filter(|m| !lms.iter().any(|l| l.divides(m))).count() as i64
}

/// Every Betti number of `S/I` against Koszul homology, for internal
/// degrees up to two past the largest nonzero entry.
pub fn assert_betti_matches_koszul(i: &Ideal<PrimeField>, table: &curvereg::resolution::BettiTable, what: &str) {
    let top = table.entries().map(|(_, j, _)| j).max().unwrap_or(0) + 2;
    for hom in 0..=i.ring().nvars() {
        for deg in 0..=top {
            assert_eq!(table.get(hom, deg), koszul_betti(i, hom, deg), "β_{{{hom},{deg}}} of {what}");
        }
    }
}

/// The canonical text stored for a golden case.
pub fn canonical(name: &str, i: &Ideal<PrimeField>, betti: &curvereg::resolution::BettiTable) -> String {
    let h = curvereg::hilbert::hilbert_series(i).unwrap();
    format!(
        "# {name}\n## reduced groebner basis (grevlex)\n{}## hilbert series numerator\n{}\n## hilbert series\n{}\n## betti table of S/I\n{}\n",
        i.gb().render(),
        h.render_numerator(),
        h.render_reduced(),
        betti.render()
    )
}

pub fn golden_path(name: &str) -> std::path::PathBuf {
    std::path::PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.txt"))
}

/// The four kernel-regression cases: a line, the twisted cubic and the
/// two-conic complete intersection in `P^3`, and the `m = 4` construction.
pub fn golden_cases() -> Vec<(&'static str, Ideal<PrimeField>)> {
    use curvereg::curves::{no_secant_curve, rational_normal_curve};
    use curvereg::verify::P3Case;
    let f = PrimeField::default();
    let p3 = curvereg::Ring::projective(f.clone(), 3).unwrap();
    let rows = [vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 0], vec![0, 0, 0, 1]];
    vec![
        ("line", Ideal::parse(&p3, &["x2", "x3"]).unwrap()),
        ("twisted_cubic", rational_normal_curve(&p3, 3, &rows).unwrap().ideal().clone()),
        ("two_conics", P3Case::TwoConics.build(f.clone()).unwrap().ideal().clone()),
        ("no_secant_4", no_secant_curve(f, 4).unwrap().curve.ideal().clone()),
    ]
}
