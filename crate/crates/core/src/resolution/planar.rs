//! Hilbert–Burch diagonal degrees and extremal lines for subschemes of `P^2`.

use alloc::string::String;
use alloc::vec::Vec;

use num_rational::Ratio;
use serde::Serialize;

use super::{minimal_generators, regularity, BettiTable};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::{dim_deg, from_numerator};
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};

/// Degrees of a Hilbert–Burch resolution
/// `0 -> ⊕ S(-b_i) -> ⊕ S(-a_i) -> S`, optionally with every generator
/// carrying a common factor of degree `d_curve`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagonalDegrees {
    /// `a_1 >= ... >= a_{t+1}`
    pub a: Vec<i64>,
    /// `b_1 >= ... >= b_t`
    pub b: Vec<i64>,
    pub e: Vec<i64>,
    pub f: Vec<i64>,
    pub d_curve: i64,
    /// `Σ_{i<=j} e_i f_j`
    pub diagonal_sum: i64,
    /// `reg(I) = max(a_1, b_1 - 1)`
    pub regularity: i64,
    /// Identities that failed, empty when all hold.
    pub failures: Vec<String>,
}

impl DiagonalDegrees {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `hilbert_burch_degrees` from the Betti table of `S/I` over `K[x0,x1,x2]`.
///
/// `d_curve = 0` is the finite case: the degree of the scheme read off the
/// table must equal `Σ_{i<=j} e_i f_j`. For `d_curve > 0` the Hilbert
/// polynomial must be `d s + 1 - (d-1)(d-2)/2 + Σ e_i f_j`.
pub fn hilbert_burch_degrees(table: &BettiTable, d_curve: i64) -> Result<DiagonalDegrees> {
    let shape = |msg: &str| Error::Shape(alloc::format!("{msg}; table:\n{}", table.render()));
    if table.total(0) != 1 || table.get(0, 0) != 1 {
        return Err(shape("F_0 must be S"));
    }
    if table.length() > 2 {
        return Err(shape("length exceeds 2"));
    }
    let a = table.twists(1);
    let b = table.twists(2);
    if a.is_empty() || a.len() != b.len() + 1 {
        return Err(shape("need t+1 generators and t syzygies"));
    }
    if d_curve < 0 || (d_curve == 0 && b.is_empty()) {
        return Err(shape("a principal ideal is a plane curve and needs d_curve > 0"));
    }
    let t = b.len();
    let e: Vec<i64> = (0..t).map(|i| b[i] - a[i]).collect();
    let f: Vec<i64> = (0..t).map(|i| a[i] - a[i + 1] + e[i]).collect();
    let mut failures = Vec::new();
    for i in 0..t {
        if e[i] < 1 {
            failures.push(alloc::format!("e_{} = {} < 1", i + 1, e[i]));
        }
        if f[i] < 1 {
            failures.push(alloc::format!("f_{} = {} < 1", i + 1, f[i]));
        }
        if f[i] < e[i] {
            failures.push(alloc::format!("f_{} < e_{}", i + 1, i + 1));
        }
        if i + 1 < t && f[i] < e[i + 1] {
            failures.push(alloc::format!("f_{} < e_{}", i + 1, i + 2));
        }
    }
    for i in 0..=t {
        let expect: i64 = e[..i].iter().sum::<i64>() + f[i..].iter().sum::<i64>() + d_curve;
        if a[i] != expect {
            failures.push(alloc::format!("a_{} = {} but the diagonal formula gives {}", i + 1, a[i], expect));
        }
    }
    if b.iter().sum::<i64>() + d_curve != a.iter().sum::<i64>() {
        failures.push(String::from("Σ b_i + d != Σ a_i"));
    }
    let mut diagonal_sum = 0;
    for i in 0..t {
        for j in i..t {
            diagonal_sum += e[i] * f[j];
        }
    }
    let hd = from_numerator(3, table.alternating_numerator());
    if d_curve == 0 {
        if hd.krull_dim != 1 {
            failures.push(alloc::format!("expected a finite scheme, Krull dimension is {}", hd.krull_dim));
        } else if hd.degree != diagonal_sum {
            failures.push(alloc::format!("degree {} != Σ e_i f_j = {}", hd.degree, diagonal_sum));
        }
    } else if hd.krull_dim != 2 {
        failures.push(alloc::format!("expected a curve, Krull dimension is {}", hd.krull_dim));
    } else {
        let hp = hd.polynomial();
        let d = d_curve;
        for s in 0..3 {
            let expect = Ratio::from_integer(d * s + 1 - (d - 1) * (d - 2) / 2 + diagonal_sum);
            if hp.eval(s) != expect {
                failures.push(alloc::format!("Hilbert polynomial at {s} is {} not {}", hp.eval(s), expect));
            }
        }
    }
    let regularity = if t == 0 { a[0] } else { a[0].max(b[0] - 1) };
    Ok(DiagonalDegrees { a, b, e, f, d_curve, diagonal_sum, regularity, failures })
}

/// A line of `P^2` and the length of its intersection with the scheme.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtremalLine<F: Field> {
    pub form: Polynomial<F>,
    pub secant_degree: i64,
    /// How the line was found.
    pub method: &'static str,
}

/// Degree of `V(I) ∩ V(l)`, or `None` if the intersection is not finite.
fn line_section_degree<F: Field>(ideal: &Ideal<F>, l: &Polynomial<F>) -> Result<Option<i64>> {
    let sum = ideal.add_gens(core::slice::from_ref(l))?;
    let (dim, deg) = dim_deg(&sum)?;
    Ok(match dim {
        -1 => Some(0),
        0 => Some(deg),
        _ => None,
    })
}

/// Greatest common divisor of two nonzero homogeneous polynomials, monic,
/// via `lcm = generator of (f) ∩ (g)`.
pub fn poly_gcd<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>) -> Result<Polynomial<F>> {
    let ring = f.ring();
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    if f.is_constant() || g.is_constant() {
        return Ok(ring.one());
    }
    let lcm = Ideal::new(ring, alloc::vec![f.clone()])?.intersect(&Ideal::new(ring, alloc::vec![g.clone()])?)?;
    let basis = lcm.gb().basis();
    if basis.len() != 1 {
        return Err(Error::Internal("intersection of principal ideals is not principal".into()));
    }
    let prod = f.mul(g)?;
    prod.exact_div(&basis[0]).map(|q| q.monic()).ok_or_else(|| Error::Internal("lcm does not divide f*g".into()))
}

/// Rational points of a finite scheme in `P^2` over a finite field, by
/// projecting from `e2` and lifting each root.
pub fn rational_points<F: Field>(ideal: &Ideal<F>) -> Result<Vec<Vec<F::Elem>>> {
    let ring = ideal.ring();
    let field = ring.field();
    let Some(q) = field.size() else {
        return Err(Error::InvalidField("rational points need a finite field".into()));
    };
    if ring.nvars() != 3 {
        return Err(Error::InvalidArgument("rational points are computed in P^2 only".into()));
    }
    let gens = ideal.gb().basis().to_vec();
    let vanishes = |pt: &[F::Elem], gs: &[Polynomial<F>]| -> Result<bool> {
        for g in gs {
            if !field.is_zero(&g.eval(pt)?) {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let proj = ideal.eliminate(&[2])?.gb().basis().to_vec();
    if proj.is_empty() {
        return Err(Error::InfiniteIntersection("projection from e2 is not finite".into()));
    }
    let (zero, one) = (field.zero(), field.one());
    let mut roots: Vec<(F::Elem, F::Elem)> = Vec::new();
    if vanishes(&[zero.clone(), one.clone(), zero.clone()], &proj)? {
        roots.push((zero.clone(), one.clone()));
    }
    for i in 0..q {
        let t = field.element(i);
        if vanishes(&[one.clone(), t.clone(), zero.clone()], &proj)? {
            roots.push((one.clone(), t));
        }
    }
    let mut pts = Vec::new();
    let e2 = alloc::vec![zero.clone(), zero.clone(), one.clone()];
    if vanishes(&e2, &gens)? {
        pts.push(e2);
    }
    for (a, b) in roots {
        for i in 0..q {
            let p = alloc::vec![a.clone(), b.clone(), field.element(i)];
            if vanishes(&p, &gens)? {
                pts.push(p);
            }
        }
    }
    Ok(pts)
}

/// The line through two distinct points of `P^2`.
fn line_through<F: Field>(ideal: &Ideal<F>, p: &[F::Elem], q: &[F::Elem]) -> Result<Polynomial<F>> {
    let f = ideal.ring().field();
    let c = |i: usize, j: usize| f.sub(&f.mul(&p[i], &q[j]), &f.mul(&p[j], &q[i]));
    ideal.ring().linear_form(&[c(1, 2), c(2, 0), c(0, 1)]).map(|l| l.monic())
}

/// Some linear form vanishing at `p`.
fn form_through<F: Field>(ideal: &Ideal<F>, p: &[F::Elem]) -> Result<Polynomial<F>> {
    let f = ideal.ring().field();
    let k = (0..3).find(|&i| !f.is_zero(&p[i])).expect("projective point");
    let j = (k + 1) % 3;
    // p_k x_j - p_j x_k
    let mut c = alloc::vec![f.zero(); 3];
    c[j] = p[k].clone();
    c[k] = f.neg(&p[j]);
    ideal.ring().linear_form(&c)
}

/// `find_extremal_line_planar` for a finite scheme `X ⊂ P^2`, or a plane
/// curve with finitely many extra points.
///
/// Finite `X` of degree `d`: a linear form in `I_X` is returned when `X` is
/// collinear; when `reg(I_X) = d - 1` and `d >= 5` the two quadric generators
/// share a linear factor `m`, and the line `m` meets `X` in degree `d - 1`;
/// for `d = 3` a line through a length-2 subscheme is returned. The case
/// `d = 4` has no such line in general and returns `None`.
///
/// `D ∪ Y` with `I = (g m, g h)`: returns `m`, or `h` when `m` divides `g`.
///
/// The reported `secant_degree` is recomputed from the ideal; callers compare
/// it with what they need.
pub fn find_extremal_line_planar<F: Field>(ideal: &Ideal<F>) -> Result<Option<ExtremalLine<F>>> {
    if ideal.nvars() != 3 {
        return Err(Error::InvalidArgument(alloc::format!("expected an ideal of P^2, got {} variables", ideal.nvars())));
    }
    ideal.require_homogeneous()?;
    let sat = ideal.saturate()?;
    if sat.is_unit() {
        return Ok(None);
    }
    let (dim, d) = dim_deg(&sat)?;
    let found = |form: Polynomial<F>, method: &'static str| -> Result<Option<ExtremalLine<F>>> {
        Ok(line_section_degree(&sat, &form)?.map(|secant_degree| ExtremalLine { form: form.monic(), secant_degree, method }))
    };
    match dim {
        0 => {
            if let Some(l) = sat.basis_in_degree(1).into_iter().next() {
                return found(l, "collinear");
            }
            let reg = regularity(&sat)?;
            if reg != d - 1 {
                return Ok(None);
            }
            if d >= 5 {
                let quadrics: Vec<Polynomial<F>> = minimal_generators(&sat)?.into_iter().filter(|g| g.degree() == Some(2)).collect();
                if quadrics.len() != 2 {
                    return Ok(None);
                }
                let m = poly_gcd(&quadrics[0], &quadrics[1])?;
                if m.degree() != Some(1) {
                    return Ok(None);
                }
                return found(m, "common factor of the quadric generators");
            }
            if d == 3 {
                if sat.ring().field().size().is_none() {
                    return Ok(None);
                }
                let pts = rational_points(&sat)?;
                if pts.len() >= 2 {
                    return found(line_through(&sat, &pts[0], &pts[1])?, "line through two points");
                }
                if let Some(p) = pts.first() {
                    // a non-reduced point: its length-2 subscheme spans the line
                    let nbhd = sat.sum(&point_ideal_squared(sat.ring(), p)?)?.saturate()?;
                    let form = match nbhd.basis_in_degree(1).into_iter().next() {
                        Some(l) => l,
                        None => form_through(&sat, p)?,
                    };
                    return found(form, "tangent line at a non-reduced point");
                }
            }
            Ok(None)
        }
        1 => {
            let gens = minimal_generators(&sat)?;
            if gens.len() != 2 {
                return Ok(None);
            }
            let g = poly_gcd(&gens[0], &gens[1])?;
            for k in 0..2 {
                let Some(q) = gens[k].exact_div(&g) else { continue };
                if q.degree() == Some(1) && g.exact_div(&q).is_none() {
                    let method = if k == 0 { "linear factor of the lower generator" } else { "alternate linear generator" };
                    return found(q, method);
                }
            }
            Ok(None)
        }
        _ => Err(Error::InvalidArgument("expected a finite scheme or a curve in P^2".into())),
    }
}

/// Two linear forms cutting out a point of `P^2`.
fn point_forms<F: Field>(ring: &Ring<F>, p: &[F::Elem]) -> Result<Vec<Polynomial<F>>> {
    let f = ring.field();
    let k = (0..3).find(|&i| !f.is_zero(&p[i])).expect("projective point");
    let mut forms = Vec::new();
    for j in (0..3).filter(|&j| j != k) {
        let mut c = alloc::vec![f.zero(); 3];
        c[j] = p[k].clone();
        c[k] = f.neg(&p[j]);
        forms.push(ring.linear_form(&c)?);
    }
    Ok(forms)
}

fn point_ideal_squared<F: Field>(ring: &Ring<F>, p: &[F::Elem]) -> Result<Ideal<F>> {
    let forms = point_forms(ring, p)?;
    let mut gens = Vec::new();
    for i in 0..forms.len() {
        for j in i..forms.len() {
            gens.push(forms[i].mul(&forms[j])?);
        }
    }
    Ideal::new(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::resolution::{min_free_resolution, ModuleKind};

    fn p2() -> Ring<PrimeField> {
        Ring::new(PrimeField::default(), 3).unwrap()
    }

    fn points(r: &Ring<PrimeField>, pts: &[[i64; 3]]) -> Ideal<PrimeField> {
        let f = r.field();
        let mut acc = Ideal::unit(r);
        for p in pts {
            let e: Vec<u32> = p.iter().map(|&v| f.from_i64(v)).collect();
            acc = acc.intersect(&Ideal::new(r, point_forms(r, &e).unwrap()).unwrap()).unwrap();
        }
        acc
    }

    fn table(i: &Ideal<PrimeField>) -> BettiTable {
        min_free_resolution(i, ModuleKind::Quotient).unwrap().betti_table()
    }

    #[test]
    fn diagonal_degrees_of_small_schemes() {
        let r = p2();
        let three = points(&r, &[[1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        let dd = hilbert_burch_degrees(&table(&three), 0).unwrap();
        assert_eq!((dd.a.clone(), dd.b.clone(), dd.e.clone(), dd.f.clone(), dd.diagonal_sum), (alloc::vec![3, 1], alloc::vec![4], alloc::vec![1], alloc::vec![3], 3));
        assert!(dd.holds(), "{:?}", dd.failures);

        let four = points(&r, &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]);
        let dd = hilbert_burch_degrees(&table(&four), 0).unwrap();
        assert_eq!((dd.e.clone(), dd.f.clone(), dd.diagonal_sum, dd.regularity), (alloc::vec![2], alloc::vec![2], 4, 3));

        let one = points(&r, &[[1, 2, 3]]);
        let dd = hilbert_burch_degrees(&table(&one), 0).unwrap();
        assert_eq!((dd.e.clone(), dd.f.clone(), dd.diagonal_sum), (alloc::vec![1], alloc::vec![1], 1));
    }

    #[test]
    fn shape_errors() {
        let b = BettiTable::from_degrees(&[alloc::vec![0], alloc::vec![1, 1, 1], alloc::vec![2, 2, 2], alloc::vec![3]]);
        assert!(matches!(hilbert_burch_degrees(&b, 0), Err(Error::Shape(_))));
        let conic = BettiTable::from_degrees(&[alloc::vec![0], alloc::vec![2]]);
        assert!(hilbert_burch_degrees(&conic, 0).is_err());
        let dd = hilbert_burch_degrees(&conic, 2).unwrap();
        assert!(dd.holds(), "{:?}", dd.failures);
    }

    #[test]
    fn gcd_of_quadrics() {
        let r = p2();
        let f = r.parse("x0*x1 + x0*x2").unwrap();
        let g = r.parse("x0^2 - x0*x2").unwrap();
        assert_eq!(poly_gcd(&f, &g).unwrap().render(), "x0");
        let h = r.parse("x1^2 - x0*x2").unwrap();
        assert!(poly_gcd(&f, &h).unwrap().is_constant());
    }

    #[test]
    fn collinear_and_near_collinear() {
        let r = p2();
        let three = points(&r, &[[1, 0, 0], [0, 1, 0], [1, 1, 0]]);
        let line = find_extremal_line_planar(&three).unwrap().unwrap();
        assert_eq!((line.form.render(), line.secant_degree), ("x2".into(), 3));

        let five = points(&r, &[[1, 0, 0], [0, 1, 0], [1, 1, 0], [1, 2, 0], [0, 0, 1]]);
        assert_eq!(regularity(&five).unwrap(), 4);
        let line = find_extremal_line_planar(&five).unwrap().unwrap();
        assert_eq!((line.form.render(), line.secant_degree), ("x2".into(), 4));

        let four = points(&r, &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]]);
        assert_eq!(regularity(&four).unwrap(), 3);
        assert!(find_extremal_line_planar(&four).unwrap().is_none());

        let tri = points(&r, &[[1, 0, 0], [0, 1, 0], [0, 0, 1]]);
        let line = find_extremal_line_planar(&tri).unwrap().unwrap();
        assert_eq!(line.secant_degree, 2);
    }

    #[test]
    fn curve_plus_point() {
        let r = p2();
        // a conic plus a point off it
        let conic = Ideal::parse(&r, &["x0*x2 - x1^2"]).unwrap();
        let pt = points(&r, &[[1, 0, 1]]);
        let x = conic.intersect(&pt).unwrap();
        let dd = hilbert_burch_degrees(&table(&x), 2).unwrap();
        assert!(dd.holds(), "{:?}", dd.failures);
        let line = find_extremal_line_planar(&x).unwrap().unwrap();
        assert!(line.secant_degree >= 3, "{line:?}");
    }
}
