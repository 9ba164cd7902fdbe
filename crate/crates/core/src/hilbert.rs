//! Hilbert series, Hilbert function and polynomial, dimension and degree,
//! and the saturation degree.
//!
//! Everything is read off the leading-term ideal of the grevlex basis: for a
//! homogeneous ideal, `S/I` and `S/in(I)` have the same Hilbert function.

use alloc::vec::Vec;

use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::Monomial;

/// Integer polynomial in `t`, coefficient of `t^k` at index `k`.
pub type IntPoly = Vec<i64>;

/// Hilbert data of `S/I`, with `S` the ambient ring in `n + 1` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertData {
    pub nvars: usize,
    /// `Q(t)` with `HS(t) = Q(t) / (1-t)^{nvars}`.
    pub numerator: IntPoly,
    /// `P(t)` with `HS(t) = P(t) / (1-t)^d` and `P(1) != 0`.
    pub reduced: IntPoly,
    /// Krull dimension `d` of `S/I`.
    pub krull_dim: usize,
    /// `P(1)`.
    pub degree: i64,
}

/// A univariate polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPoly(pub Vec<Ratio<i64>>);

impl RationalPoly {
    pub fn eval(&self, s: i64) -> Ratio<i64> {
        let mut acc = Ratio::from_integer(0);
        for c in self.0.iter().rev() {
            acc = acc * Ratio::from_integer(s) + *c;
        }
        acc
    }

    /// Text such as `3*t + 1`.
    pub fn render(&self) -> alloc::string::String {
        let mut parts: Vec<alloc::string::String> = Vec::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if *c.numer() == 0 {
                continue;
            }
            let coeff = if c.is_integer() { alloc::format!("{}", c.numer()) } else { alloc::format!("{}/{}", c.numer(), c.denom()) };
            parts.push(match k {
                0 => coeff,
                _ => {
                    let var = if k == 1 { alloc::string::String::from("t") } else { alloc::format!("t^{k}") };
                    if coeff == "1" {
                        var
                    } else if coeff == "-1" {
                        alloc::format!("-{var}")
                    } else {
                        alloc::format!("{coeff}*{var}")
                    }
                }
            });
        }
        if parts.is_empty() {
            return "0".into();
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl HilbertData {
    /// `dim_K (S/I)_d`.
    pub fn function(&self, d: i64) -> i64 {
        if d < 0 {
            return 0;
        }
        let n = self.nvars as i64;
        self.numerator
            .iter()
            .enumerate()
            .filter(|(k, _)| (*k as i64) <= d)
            .map(|(k, q)| q * binomial(d - k as i64 + n - 1, n - 1))
            .sum()
    }

    pub fn polynomial(&self) -> RationalPoly {
        let dim = self.krull_dim;
        if dim == 0 {
            return RationalPoly(Vec::new());
        }
        // sum_k p_k * C(s - k + dim - 1, dim - 1) as a polynomial in s
        let mut acc = alloc::vec![Ratio::from_integer(0i64); dim];
        for (k, p) in self.reduced.iter().enumerate() {
            if *p == 0 {
                continue;
            }
            let mut term = alloc::vec![Ratio::from_integer(*p)];
            for i in 1..dim as i64 {
                // multiply by (s - k + i) / i
                let shift = Ratio::new(i - k as i64, i);
                let scale = Ratio::new(1, i);
                let mut next = alloc::vec![Ratio::from_integer(0); term.len() + 1];
                for (j, c) in term.iter().enumerate() {
                    next[j] += *c * shift;
                    next[j + 1] += *c * scale;
                }
                term = next;
            }
            for (j, c) in term.into_iter().enumerate() {
                acc[j] += c;
            }
        }
        while acc.last().is_some_and(|c| *c.numer() == 0) {
            acc.pop();
        }
        RationalPoly(acc)
    }

    /// Degrees `d >= bound` have `function(d) == polynomial(d)`.
    pub fn polynomial_bound(&self) -> i64 {
        (self.reduced.len() as i64 - 1) - self.krull_dim as i64 + 1
    }

    /// `(projective dimension, degree)`; `(-1, 0)` encodes the empty scheme.
    pub fn dim_deg(&self) -> (i64, i64) {
        (self.krull_dim as i64 - 1, self.degree)
    }

    /// The series numerator rendered as `1 - 3*t^2 + 2*t^3`.
    pub fn render_numerator(&self) -> alloc::string::String {
        render_intpoly(&self.numerator)
    }

    pub fn render_reduced(&self) -> alloc::string::String {
        alloc::format!("({})/(1-t)^{}", render_intpoly(&self.reduced), self.krull_dim)
    }
}

pub fn render_intpoly(p: &[i64]) -> alloc::string::String {
    let mut s = alloc::string::String::new();
    for (k, &c) in p.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let (neg, a) = (c < 0, c.unsigned_abs());
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        match k {
            0 => s.push_str(&alloc::format!("{a}")),
            _ => {
                if a != 1 {
                    s.push_str(&alloc::format!("{a}*"));
                }
                s.push('t');
                if k > 1 {
                    s.push_str(&alloc::format!("^{k}"));
                }
            }
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn trim(p: &mut IntPoly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn sub_poly(a: &[i64], b: &[i64]) -> IntPoly {
    let mut r = alloc::vec![0; a.len().max(b.len())];
    for (i, v) in a.iter().enumerate() {
        r[i] += v;
    }
    for (i, v) in b.iter().enumerate() {
        r[i] -= v;
    }
    trim(&mut r);
    r
}

fn mul_poly(a: &[i64], b: &[i64]) -> IntPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut r = alloc::vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            r[i + j] += x * y;
        }
    }
    trim(&mut r);
    r
}

/// `p / (1 - t)` when exact.
fn div_one_minus_t(p: &[i64]) -> Option<IntPoly> {
    if p.is_empty() {
        return Some(Vec::new());
    }
    if p.iter().sum::<i64>() != 0 {
        return None;
    }
    let mut q = Vec::with_capacity(p.len() - 1);
    let mut acc = 0;
    for c in &p[..p.len() - 1] {
        acc += c;
        q.push(acc);
    }
    trim(&mut q);
    Some(q)
}

fn one_minus_t_pow(k: u32) -> IntPoly {
    let mut p = alloc::vec![0; k as usize + 1];
    p[0] = 1;
    p[k as usize] -= 1;
    p
}

/// Removes generators divisible by others.
fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens.iter() {
        if !out.iter().any(|g| g.divides(m)) {
            out.push(*m);
        }
    }
    *gens = out;
}

/// Numerator `N(J)` of the Hilbert series of `S/J` over `(1-t)^{nvars}` for a
/// monomial ideal `J`, by the pivot recursion
/// `N(J) = N(J + (p)) + t^{deg p} N(J : p)`.
pub fn monomial_numerator(gens: &[Monomial]) -> IntPoly {
    let mut g = gens.to_vec();
    minimalize(&mut g);
    numerator_rec(g)
}

fn numerator_rec(gens: Vec<Monomial>) -> IntPoly {
    if gens.is_empty() {
        return alloc::vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return Vec::new();
    }
    // pairwise coprime generators form a regular sequence
    let mut used = 0u32;
    let mut coprime = true;
    for m in &gens {
        let mask: u32 = (0..m.nvars()).filter(|&i| m.exp(i) > 0).fold(0, |a, i| a | (1 << i));
        if used & mask != 0 {
            coprime = false;
            break;
        }
        used |= mask;
    }
    if coprime {
        return gens.iter().fold(alloc::vec![1], |acc, m| mul_poly(&acc, &one_minus_t_pow(m.degree())));
    }
    // pivot on the variable occurring in most generators
    let n = gens[0].nvars();
    let mut counts = [0usize; crate::monomial::MAX_VARS];
    for m in &gens {
        for (i, c) in counts.iter_mut().enumerate().take(n) {
            if m.exp(i) > 0 {
                *c += 1;
            }
        }
    }
    let v = (0..n).max_by_key(|&i| (counts[i], core::cmp::Reverse(i))).expect("nonempty");
    let mut exps: Vec<u32> = gens.iter().map(|m| m.exp(v)).filter(|&e| e > 0).collect();
    exps.sort_unstable();
    let e = exps[(exps.len() - 1) / 2];
    let mut pe = alloc::vec![0u32; n];
    pe[v] = e;
    let pivot = Monomial::from_exponents(&pe).expect("small exponent");

    let mut plus = gens.clone();
    plus.push(pivot);
    minimalize(&mut plus);
    let mut colon: Vec<Monomial> = gens.iter().map(|m| pivot.gcd(m).quotient_of(m)).collect();
    minimalize(&mut colon);

    let a = numerator_rec(plus);
    let b = numerator_rec(colon);
    let mut shifted = alloc::vec![0; e as usize];
    shifted.extend(b);
    let mut r = alloc::vec![0; a.len().max(shifted.len())];
    for (i, x) in a.iter().enumerate() {
        r[i] += x;
    }
    for (i, x) in shifted.iter().enumerate() {
        r[i] += x;
    }
    trim(&mut r);
    r
}

/// Hilbert data from a series numerator over `(1-t)^{nvars}`.
pub fn from_numerator(nvars: usize, numerator: IntPoly) -> HilbertData {
    let mut reduced = numerator.clone();
    let mut dim = nvars;
    while dim > 0 {
        match div_one_minus_t(&reduced) {
            Some(q) if !reduced.is_empty() => {
                reduced = q;
                dim -= 1;
            }
            _ => break,
        }
    }
    let degree = reduced.iter().sum();
    HilbertData { nvars, numerator, reduced, krull_dim: dim, degree }
}

/// `hilbert_series`: Hilbert data of `S/I` for a proper homogeneous ideal.
pub fn hilbert_series<F: Field>(ideal: &Ideal<F>) -> Result<&HilbertData> {
    if let Some(h) = ideal.hilbert_cache().get() {
        return Ok(h);
    }
    ideal.require_homogeneous()?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("Hilbert series of S/(1)".into()));
    }
    let lms = ideal.gb().lead_monomials();
    let data = from_numerator(ideal.nvars(), monomial_numerator(&lms));
    Ok(ideal.hilbert_cache().get_or_init(|| alloc::boxed::Box::new(data)))
}

/// `hilbert_function`: `dim_K (S/I)_d` (zero for the unit ideal).
pub fn hilbert_function<F: Field>(ideal: &Ideal<F>, d: i64) -> Result<i64> {
    if ideal.is_unit() {
        return Ok(0);
    }
    Ok(hilbert_series(ideal)?.function(d))
}

/// `hilbert_polynomial`.
pub fn hilbert_polynomial<F: Field>(ideal: &Ideal<F>) -> Result<RationalPoly> {
    Ok(hilbert_series(ideal)?.polynomial())
}

/// `dim_deg`: projective dimension of `V(I)` and its degree. The unit ideal
/// gives the empty scheme `(-1, 0)`.
pub fn dim_deg<F: Field>(ideal: &Ideal<F>) -> Result<(i64, i64)> {
    if ideal.is_unit() {
        return Ok((-1, 0));
    }
    Ok(hilbert_series(ideal)?.dim_deg())
}

/// `saturation_degree`: the first degree from which `I` and `I^sat` agree,
/// clamped to `0` for saturated ideals. Computed exactly from the two Hilbert
/// series: their difference over `(1-t)^{n+1}` is the (finite) Hilbert series
/// of `I^sat / I`.
pub fn saturation_degree<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    ideal.require_homogeneous()?;
    let sat = ideal.saturate()?;
    saturation_degree_with(ideal, &sat)
}

/// As [`saturation_degree`], with the saturation supplied by the caller.
pub fn saturation_degree_with<F: Field>(ideal: &Ideal<F>, sat: &Ideal<F>) -> Result<i64> {
    let n = ideal.nvars();
    let num_i = if ideal.is_unit() { Vec::new() } else { hilbert_series(ideal)?.numerator.clone() };
    let num_s = if sat.is_unit() { Vec::new() } else { hilbert_series(sat)?.numerator.clone() };
    let mut diff = sub_poly(&num_i, &num_s);
    for _ in 0..n {
        diff = div_one_minus_t(&diff).ok_or_else(|| Error::Internal("I^sat/I has infinite length".into()))?;
    }
    if diff.iter().any(|&c| c < 0) {
        return Err(Error::Internal("I^sat does not contain I".into()));
    }
    Ok(diff.len() as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::poly::Ring;
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring<PrimeField> {
        Ring::new(PrimeField::default(), n).unwrap()
    }

    fn id(r: &Ring<PrimeField>, gens: &[&str]) -> Ideal<PrimeField> {
        Ideal::parse(r, gens).unwrap()
    }

    /// Counts standard monomials of degree `d` directly.
    fn brute_hf(i: &Ideal<PrimeField>, d: u32) -> i64 {
        let lms = i.gb().lead_monomials();
        i.ring().monomials_of_degree(d).iter().filter(|m| !lms.iter().any(|l| l.divides(m))).count() as i64
    }

    #[test]
    fn basic_series() {
        let r = ring(4);
        let z = Ideal::zero(&r);
        let h = hilbert_series(&z).unwrap();
        assert_eq!((h.numerator.clone(), h.krull_dim, h.degree), (alloc::vec![1], 4, 1));
        let x0 = id(&r, &["x0"]);
        let h = hilbert_series(&x0).unwrap();
        assert_eq!(h.numerator, alloc::vec![1, -1]);
        assert!(matches!(hilbert_series(&Ideal::unit(&r)), Err(Error::UnitIdeal(_))));
    }

    #[test]
    fn twisted_cubic_series() {
        let r = ring(4);
        let tc = id(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        let h = hilbert_series(&tc).unwrap();
        assert_eq!(h.reduced, alloc::vec![1, 2]);
        assert_eq!(h.krull_dim, 2);
        for d in 0..6 {
            assert_eq!(h.function(d), brute_hf(&tc, d as u32));
            assert_eq!(h.function(d), 3 * d + 1);
        }
        assert_eq!(hilbert_function(&tc, 2).unwrap(), 7);
        assert_eq!(hilbert_polynomial(&tc).unwrap().render(), "3*t + 1");
        assert_eq!(dim_deg(&tc).unwrap(), (1, 3));
    }

    #[test]
    fn small_functions_and_polynomials() {
        let r5 = ring(5);
        assert_eq!(hilbert_function(&Ideal::zero(&r5), 1).unwrap(), 5);
        let m = Ideal::maximal(&r5);
        assert_eq!(hilbert_function(&m, 3).unwrap(), 0);
        let line = id(&r5, &["x2", "x3", "x4"]);
        assert_eq!(hilbert_polynomial(&line).unwrap().render(), "t + 1");
        let point = id(&r5, &["x1", "x2", "x3", "x4"]);
        assert_eq!(hilbert_polynomial(&point).unwrap().render(), "1");
        assert_eq!(dim_deg(&point).unwrap(), (0, 1));
        assert_eq!(dim_deg(&Ideal::unit(&r5)).unwrap(), (-1, 0));
    }

    #[test]
    fn saturation_degrees() {
        let r = ring(2);
        assert_eq!(saturation_degree(&id(&r, &["x0^2", "x0*x1"])).unwrap(), 2);
        assert_eq!(saturation_degree(&id(&r, &["x0^2", "x0*x1", "x1^2"])).unwrap(), 2);
        let r4 = ring(4);
        let tc = id(&r4, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        assert_eq!(saturation_degree(&tc).unwrap(), 0);
    }

    #[test]
    fn rational_polynomial_render() {
        let p = RationalPoly(alloc::vec![Ratio::new(1, 2), Ratio::from_integer(-1), Ratio::new(3, 2)]);
        assert_eq!(p.render(), "3/2*t^2 - t + 1/2");
    }

    fn monomials(n: usize) -> impl Strategy<Value = Vec<Vec<u32>>> {
        proptest::collection::vec(proptest::collection::vec(0u32..4, n), 1..6)
    }

    proptest! {
        #[test]
        fn monomial_numerator_matches_count(gens in monomials(3)) {
            let r = ring(3);
            let ms: Vec<Monomial> = gens.iter().map(|e| Monomial::from_exponents(e).unwrap()).collect();
            let h = from_numerator(3, monomial_numerator(&ms));
            for d in 0..9u32 {
                let count = r.monomials_of_degree(d).iter().filter(|m| !ms.iter().any(|g| g.divides(m))).count() as i64;
                prop_assert_eq!(h.function(d as i64), count);
            }
            if !ms.iter().any(|m| m.is_one()) {
                let hp = h.polynomial();
                for d in h.polynomial_bound().max(0)..h.polynomial_bound().max(0) + 5 {
                    prop_assert_eq!(hp.eval(d), Ratio::from_integer(h.function(d)));
                }
            }
        }

        #[test]
        fn order_independent(c in proptest::collection::vec(-3i64..4, 20)) {
            let r = ring(3);
            let cubic = r.monomials_of_degree(2);
            let mk = |off: usize| r.from_terms(cubic.iter().enumerate().map(|(i, m)| (*m, r.field().from_i64(c[(i + off) % 20]))).collect());
            let i = Ideal::new(&r, alloc::vec![mk(0), mk(7)]).unwrap();
            let lex = i.gb_in(crate::monomial::MonomialOrder::lex());
            let lms = i.gb().lead_monomials();
            let a = monomial_numerator(&lms);
            let b = monomial_numerator(&lex.lead_monomials());
            prop_assert_eq!(a, b);
        }
    }
}
