//! Projective linear subspaces, spans, the bound `Ξ`, secant degrees and
//! extremal-secant tests.

use alloc::string::String;
use alloc::vec::Vec;

use rand_core::RngCore;
use serde::Serialize;

use crate::curves::Curve;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::dim_deg;
use crate::ideal::Ideal;
use crate::linalg::{nullspace, rank, rref, Matrix};
use crate::poly::{Polynomial, Ring};
use crate::resolution::regularity;

/// A projective linear subspace of `P^n`, stored as the reduced row echelon
/// form of the linear forms vanishing on it.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearSubspace<F: Field> {
    ring: Ring<F>,
    rows: Vec<Vec<F::Elem>>,
}

impl<F: Field> LinearSubspace<F> {
    /// The subspace cut out by the linear forms with these coefficient rows.
    pub fn from_rows(ring: &Ring<F>, rows: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = ring.nvars();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidArgument(alloc::format!("linear form rows must have length {n}")));
        }
        let mut m = Matrix::from_rows(rows, n);
        rref(ring.field(), &mut m);
        Ok(LinearSubspace { ring: ring.clone(), rows: m.data })
    }

    /// The subspace cut out by linear polynomials.
    pub fn from_forms(ring: &Ring<F>, forms: &[Polynomial<F>]) -> Result<Self> {
        let n = ring.nvars();
        let f = ring.field();
        let mut rows = Vec::with_capacity(forms.len());
        for p in forms {
            if p.is_zero() {
                continue;
            }
            if p.degree() != Some(1) || !p.is_homogeneous() {
                return Err(Error::InvalidArgument(alloc::format!("{} is not a linear form", p.render())));
            }
            let mut row = alloc::vec![f.zero(); n];
            for (m, c) in p.terms() {
                let v = (0..n).find(|&i| m.exp(i) == 1).expect("degree one");
                row[v] = c.clone();
            }
            rows.push(row);
        }
        Self::from_rows(ring, rows)
    }

    /// The span of points given by homogeneous coordinates.
    pub fn from_points(ring: &Ring<F>, points: &[Vec<F::Elem>]) -> Result<Self> {
        let n = ring.nvars();
        if points.iter().any(|p| p.len() != n) {
            return Err(Error::InvalidArgument(alloc::format!("points must have {n} coordinates")));
        }
        let rows = if points.is_empty() {
            (0..n).map(|i| unit_vector(ring.field(), n, i)).collect()
        } else {
            nullspace(ring.field(), &Matrix::from_rows(points.to_vec(), n))
        };
        Self::from_rows(ring, rows)
    }

    /// All of `P^n`.
    pub fn whole(ring: &Ring<F>) -> Self {
        LinearSubspace { ring: ring.clone(), rows: Vec::new() }
    }

    /// The line through two distinct points.
    pub fn line(ring: &Ring<F>, p: &[F::Elem], q: &[F::Elem]) -> Result<Self> {
        let l = Self::from_points(ring, &[p.to_vec(), q.to_vec()])?;
        if l.dim() != 1 {
            return Err(Error::InvalidArgument("a line needs two distinct points".into()));
        }
        Ok(l)
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    /// Projective dimension, `-1` for the empty subspace.
    pub fn dim(&self) -> i64 {
        self.ring.nvars() as i64 - 1 - self.rows.len() as i64
    }

    pub fn codim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<F::Elem>] {
        &self.rows
    }

    pub fn forms(&self) -> Vec<Polynomial<F>> {
        self.rows.iter().map(|r| self.ring.linear_form(r).expect("row length")).collect()
    }

    /// The (saturated, prime) ideal of the subspace.
    pub fn ideal(&self) -> Ideal<F> {
        Ideal::new(&self.ring, self.forms()).expect("same ring").assume_saturated()
    }

    /// A basis of the points of the subspace (vectors in `K^{n+1}`).
    pub fn points(&self) -> Vec<Vec<F::Elem>> {
        if self.rows.is_empty() {
            let n = self.ring.nvars();
            return (0..n).map(|i| unit_vector(self.ring.field(), n, i)).collect();
        }
        nullspace(self.ring.field(), &Matrix::from_rows(self.rows.clone(), self.ring.nvars()))
    }

    pub fn contains_point(&self, p: &[F::Elem]) -> bool {
        let f = self.ring.field();
        self.rows.iter().all(|r| f.is_zero(&dot(f, r, p)))
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &LinearSubspace<F>) -> bool {
        other.points().iter().all(|p| self.contains_point(p))
    }

    /// `subspace_meet`: the intersection, from the union of the forms.
    pub fn meet(&self, other: &LinearSubspace<F>) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Self::from_rows(&self.ring, rows)
    }

    /// The smallest subspace containing both.
    pub fn join(&self, other: &LinearSubspace<F>) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        let mut pts = self.points();
        pts.extend(other.points());
        Self::from_points(&self.ring, &pts)
    }

    /// A uniformly random point of the subspace.
    pub fn random_point(&self, rng: &mut dyn RngCore) -> Vec<F::Elem> {
        let f = self.ring.field();
        let basis = self.points();
        loop {
            let mut p = alloc::vec![f.zero(); self.ring.nvars()];
            for b in &basis {
                let c = f.random(rng);
                for (x, y) in p.iter_mut().zip(b) {
                    *x = f.add(x, &f.mul(&c, y));
                }
            }
            if p.iter().any(|x| !f.is_zero(x)) {
                return p;
            }
        }
    }

    /// A random `k`-dimensional subspace inside this one.
    pub fn random_subspace(&self, k: i64, rng: &mut dyn RngCore) -> Result<Self> {
        if k > self.dim() || k < 0 {
            return Err(Error::InvalidArgument(alloc::format!("no {k}-dimensional subspace in a {}-dimensional one", self.dim())));
        }
        loop {
            let pts: Vec<Vec<F::Elem>> = (0..=k).map(|_| self.random_point(rng)).collect();
            let s = Self::from_points(&self.ring, &pts)?;
            if s.dim() == k {
                return Ok(s);
            }
        }
    }

    pub fn render(&self) -> String {
        let forms: Vec<String> = self.forms().iter().map(|f| f.render()).collect();
        alloc::format!("V({})", forms.join(", "))
    }
}

/// Coordinates on a linear subspace `Λ` of dimension `k`: `u_0, ..., u_k`
/// with `x = Σ u_j p_j` for a fixed basis `p_j` of `Λ`.
#[derive(Clone, Debug)]
pub struct SubspaceChart<F: Field> {
    subspace: LinearSubspace<F>,
    basis: Vec<Vec<F::Elem>>,
    local: Ring<F>,
}

impl<F: Field> SubspaceChart<F> {
    pub fn new(subspace: &LinearSubspace<F>) -> Result<Self> {
        if subspace.dim() < 0 {
            return Err(Error::InvalidArgument("empty subspace has no coordinates".into()));
        }
        let basis = subspace.points();
        let local = Ring::new(subspace.ring().field().clone(), basis.len())?;
        Ok(SubspaceChart { subspace: subspace.clone(), basis, local })
    }

    pub fn subspace(&self) -> &LinearSubspace<F> {
        &self.subspace
    }

    /// The coordinate ring of `Λ`.
    pub fn local_ring(&self) -> &Ring<F> {
        &self.local
    }

    /// The ideal of `V(I) ∩ Λ` in the coordinates of `Λ` (not saturated).
    pub fn restrict(&self, ideal: &Ideal<F>) -> Result<Ideal<F>> {
        let n = ideal.nvars();
        let images: Vec<Polynomial<F>> = (0..n)
            .map(|i| self.local.linear_form(&self.basis.iter().map(|p| p[i].clone()).collect::<Vec<_>>()))
            .collect::<Result<_>>()?;
        let mut gens = Vec::new();
        for g in ideal.gens() {
            let r = g.substitute(&images)?;
            if !r.is_zero() {
                gens.push(r);
            }
        }
        Ideal::new(&self.local, gens)
    }

    /// The ambient point with local coordinates `u`.
    pub fn point(&self, u: &[F::Elem]) -> Vec<F::Elem> {
        let f = self.local.field();
        let mut x = alloc::vec![f.zero(); self.subspace.ring().nvars()];
        for (c, p) in u.iter().zip(&self.basis) {
            for (xi, pi) in x.iter_mut().zip(p) {
                *xi = f.add(xi, &f.mul(c, pi));
            }
        }
        x
    }

    /// The subspace of `Λ` cut out by local linear forms.
    pub fn subspace_of(&self, forms: &[Polynomial<F>]) -> Result<LinearSubspace<F>> {
        let local = LinearSubspace::from_forms(&self.local, forms)?;
        let pts: Vec<Vec<F::Elem>> = local.points().iter().map(|u| self.point(u)).collect();
        LinearSubspace::from_points(self.subspace.ring(), &pts)
    }
}

fn unit_vector<F: Field>(f: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = alloc::vec![f.zero(); n];
    v[i] = f.one();
    v
}

pub(crate) fn dot<F: Field>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> F::Elem {
    a.iter().zip(b).fold(f.zero(), |acc, (x, y)| f.add(&acc, &f.mul(x, y)))
}

/// Rank of a list of vectors.
pub fn vector_rank<F: Field>(f: &F, vs: &[Vec<F::Elem>]) -> usize {
    if vs.is_empty() {
        return 0;
    }
    rank(f, &Matrix::from_rows(vs.to_vec(), vs[0].len()))
}

/// `span`: the smallest linear subspace containing `V(I)`, cut out by the
/// linear forms of `I^sat`.
pub fn span<F: Field>(ideal: &Ideal<F>) -> Result<LinearSubspace<F>> {
    let sat = if ideal.is_known_saturated() { ideal.clone() } else { ideal.saturate()? };
    if sat.is_unit() {
        let n = ideal.nvars();
        return LinearSubspace::from_rows(ideal.ring(), (0..n).map(|i| unit_vector(ideal.ring().field(), n, i)).collect());
    }
    LinearSubspace::from_forms(ideal.ring(), &sat.basis_in_degree(1))
}

/// `Ξ = degree - span_dim + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct XiValue {
    pub degree: i64,
    pub span_dim: i64,
    pub xi: i64,
}

impl XiValue {
    pub fn new(degree: i64, span_dim: i64) -> Self {
        XiValue { degree, span_dim, xi: degree - span_dim + 2 }
    }
}

/// `Ξ` of the one-dimensional scheme defined by `ideal`.
pub fn xi_of_ideal<F: Field>(ideal: &Ideal<F>) -> Result<XiValue> {
    let (dim, deg) = dim_deg(ideal)?;
    if dim != 1 {
        return Err(Error::NotACurve(alloc::format!("projective dimension {dim}")));
    }
    Ok(XiValue::new(deg, span(ideal)?.dim()))
}

/// `xi`.
pub fn xi<F: Field>(curve: &Curve<F>) -> Result<XiValue> {
    xi_of_ideal(curve.ideal())
}

/// `(projective dimension, degree)` of `V(I) ∩ Λ`, from the Hilbert series of
/// `I + I_Λ` (which has the same Hilbert polynomial as its saturation).
pub fn section_dim_deg<F: Field>(ideal: &Ideal<F>, lambda: &LinearSubspace<F>) -> Result<(i64, i64)> {
    let sum = ideal.add_gens(&lambda.forms())?;
    dim_deg(&sum)
}

/// The first component lying inside `lambda`, if any.
pub fn component_in<F: Field>(curve: &Curve<F>, lambda: &LinearSubspace<F>) -> Result<Option<String>> {
    let li = lambda.ideal();
    for c in curve.components() {
        if c.ideal().contains_ideal(&li)? {
            return Ok(Some(c.label().into()));
        }
    }
    Ok(None)
}

/// `secant_degree`: the length of `C ∩ Λ`.
pub fn secant_degree<F: Field>(curve: &Curve<F>, lambda: &LinearSubspace<F>) -> Result<i64> {
    if let Some(c) = component_in(curve, lambda)? {
        return Err(Error::ComponentInSubspace(alloc::format!("component {c} lies in {}", lambda.render())));
    }
    match section_dim_deg(curve.ideal(), lambda)? {
        (-1, _) => Ok(0),
        (0, d) => Ok(d),
        (k, _) => Err(Error::InfiniteIntersection(alloc::format!("intersection has dimension {k}"))),
    }
}

/// Outcome of [`is_extremal_secant`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalCheck {
    pub extremal: bool,
    pub secant_degree: Option<i64>,
    /// `reg` of the ideal of `C ∩ Λ`: its degree when `Λ` is a line.
    pub section_regularity: Option<i64>,
    pub xi: i64,
    pub diagnostic: Option<String>,
}

/// `is_extremal_secant`: `C ∩ Λ` is finite and `reg(C ∩ Λ) = Ξ(C)`.
pub fn is_extremal_secant<F: Field>(curve: &Curve<F>, lambda: &LinearSubspace<F>) -> Result<ExtremalCheck> {
    let xi = curve.xi()?.xi;
    let not = |diag: String| ExtremalCheck { extremal: false, secant_degree: None, section_regularity: None, xi, diagnostic: Some(diag) };
    let deg = match secant_degree(curve, lambda) {
        Ok(d) => d,
        Err(Error::ComponentInSubspace(m)) | Err(Error::InfiniteIntersection(m)) => return Ok(not(m)),
        Err(e) => return Err(e),
    };
    if deg == 0 {
        return Ok(ExtremalCheck { secant_degree: Some(0), ..not("empty intersection".into()) });
    }
    let reg = if lambda.dim() == 1 {
        deg
    } else {
        let sat = curve.ideal().add_gens(&lambda.forms())?.saturate()?;
        regularity(&sat)?
    };
    Ok(ExtremalCheck { extremal: reg == xi, secant_degree: Some(deg), section_regularity: Some(reg), xi, diagnostic: None })
}

/// Result of [`check_linear_section_bound`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearSectionReport {
    pub subspace_dim: i64,
    pub degree: i64,
    /// `deg(C) - n + 1 + dim(Λ)`
    pub bound: i64,
    pub holds: bool,
    /// For each sampled hyperplane `H`: whether `C ∩ H` spans `H`.
    pub hyperplane_sections_nondegenerate: Vec<bool>,
}

/// `check_linear_section_bound` for a connected curve nondegenerate in
/// `P^n`, plus `samples` random hyperplane sections tested for
/// nondegeneracy.
pub fn check_linear_section_bound<F: Field>(
    curve: &Curve<F>,
    lambda: &LinearSubspace<F>,
    samples: usize,
    rng: &mut dyn RngCore,
) -> Result<LinearSectionReport> {
    let ring = curve.ideal().ring();
    let n = ring.nvars() as i64 - 1;
    let x = curve.xi()?;
    if x.span_dim != n {
        return Err(Error::Degenerate(alloc::format!("curve spans a {}-plane in P^{n}", x.span_dim)));
    }
    if !curve.is_connected() {
        return Err(Error::InvalidArgument("curve is not connected".into()));
    }
    let degree = secant_degree(curve, lambda)?;
    let bound = x.degree - n + 1 + lambda.dim();
    let whole = LinearSubspace::whole(ring);
    let mut hyper = Vec::new();
    let mut attempts = 0;
    while hyper.len() < samples && attempts < 10 * samples + 10 {
        attempts += 1;
        let h = whole.random_subspace(n - 1, rng)?;
        if component_in(curve, &h)?.is_some() {
            continue;
        }
        let sat = curve.ideal().add_gens(&h.forms())?.saturate()?;
        hyper.push(span(&sat)?.dim() == n - 1);
    }
    Ok(LinearSectionReport { subspace_dim: lambda.dim(), degree, bound, holds: degree <= bound, hyperplane_sections_nondegenerate: hyper })
}
