//! Seeded generators of test instances.

use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::curves::{
    no_secant_curve, plane_curve_component, plane_curve_in_coords, points_ideal, random_connected_curve, rnc_from_columns, tree,
    twisted_config, Budget, Component, Curve, RandomCurve, TreeSpec,
};
use crate::error::Result;
use crate::field::Field;
use crate::geometry::LinearSubspace;
use crate::ideal::Ideal;
use crate::poly::{Polynomial, Ring};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn below(rng: &mut ChaCha8Rng, n: usize) -> usize {
    (rng.next_u32() as usize) % n.max(1)
}

fn random_vec<F: Field>(f: &F, n: usize, rng: &mut dyn RngCore) -> Vec<F::Elem> {
    loop {
        let v: Vec<F::Elem> = (0..n).map(|_| f.random(rng)).collect();
        if v.iter().any(|a| !f.is_zero(a)) {
            return v;
        }
    }
}

fn combine<F: Field>(f: &F, a: &F::Elem, p: &[F::Elem], b: &F::Elem, q: &[F::Elem]) -> Vec<F::Elem> {
    p.iter().zip(q).map(|(x, y)| f.add(&f.mul(a, x), &f.mul(b, y))).collect()
}

/// A dense random form of degree `d`.
pub fn random_form<F: Field>(ring: &Ring<F>, d: u32, rng: &mut dyn RngCore) -> Polynomial<F> {
    let f = ring.field();
    loop {
        let terms = ring.monomials_of_degree(d).into_iter().map(|m| (m, f.random(rng))).collect();
        let p = ring.from_terms(terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// The line of `P^2` through two distinct points.
fn line_through<F: Field>(ring: &Ring<F>, p: &[F::Elem], q: &[F::Elem]) -> Result<Polynomial<F>> {
    let f = ring.field();
    let c = |a: usize, b: usize| f.sub(&f.mul(&p[a], &q[b]), &f.mul(&p[b], &q[a]));
    ring.linear_form(&[c(1, 2), c(2, 0), c(0, 1)])
}

/// Finite point configurations in `P^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PlanarFamily {
    /// `d` points on a line.
    Collinear(usize),
    /// `d - 1` points on a line plus one point off it.
    CollinearPlusOne(usize),
    /// Four points in general position.
    FourGeneral,
    /// Two to five collinear points plus at most one more.
    Random,
}

/// Distinct points on the line through `p` and `q`.
fn points_on_line<F: Field>(f: &F, p: &[F::Elem], q: &[F::Elem], k: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<F::Elem>> {
    let mut ts: Vec<F::Elem> = Vec::new();
    let mut out = alloc::vec![p.to_vec()];
    while out.len() < k {
        let t = f.random(rng);
        if ts.contains(&t) {
            continue;
        }
        ts.push(t.clone());
        out.push(combine(f, &t, p, &f.one(), q));
    }
    out
}

/// The reduced scheme of a planar point family, for a seed.
pub fn planar_points<F: Field>(field: F, family: PlanarFamily, seed: u64) -> Result<Ideal<F>> {
    let ring = Ring::projective(field, 2)?;
    let f = ring.field().clone();
    let mut r = rng(seed);
    let (p, q) = (random_vec(&f, 3, &mut r), random_vec(&f, 3, &mut r));
    let pts = match family {
        PlanarFamily::Collinear(d) => points_on_line(&f, &p, &q, d, &mut r),
        PlanarFamily::CollinearPlusOne(d) => {
            let mut v = points_on_line(&f, &p, &q, d.saturating_sub(1).max(1), &mut r);
            let l = line_through(&ring, &p, &q)?;
            loop {
                let o = random_vec(&f, 3, &mut r);
                if !f.is_zero(&l.eval(&o)?) {
                    v.push(o);
                    break;
                }
            }
            v
        }
        PlanarFamily::FourGeneral => {
            let mut v: Vec<Vec<F::Elem>> = (0..3).map(|i| (0..3).map(|j| if i == j { f.one() } else { f.zero() }).collect()).collect();
            v.push(alloc::vec![f.one(), f.one(), f.one()]);
            v
        }
        PlanarFamily::Random => {
            let k = 2 + below(&mut r, 4);
            let mut v = points_on_line(&f, &p, &q, k, &mut r);
            for _ in 0..below(&mut r, 2) {
                v.push(random_vec(&f, 3, &mut r));
            }
            v
        }
    };
    points_ideal(&ring, &pts)
}

/// A plane curve `D` (a product of lines or a conic) and a finite scheme `Y`
/// in `P^2`, some of whose points may lie on `D`.
pub fn curve_plus_points<F: Field>(field: F, seed: u64) -> Result<(Polynomial<F>, Ideal<F>)> {
    let ring = Ring::projective(field, 2)?;
    let f = ring.field().clone();
    let mut r = rng(seed);
    let mut on_d: Vec<Vec<F::Elem>> = Vec::new();
    let form = if below(&mut r, 2) == 0 {
        let d = 1 + below(&mut r, 3);
        let mut form = ring.one();
        for _ in 0..d {
            let (p, q) = (random_vec(&f, 3, &mut r), random_vec(&f, 3, &mut r));
            let l = line_through(&ring, &p, &q)?;
            if l.is_zero() {
                continue;
            }
            form = form.mul(&l)?;
            on_d.push(combine(&f, &f.random(&mut r), &p, &f.random(&mut r), &q));
        }
        form
    } else {
        for _ in 0..3 {
            let (s, t) = (f.random(&mut r), f.random(&mut r));
            on_d.push(alloc::vec![f.mul(&s, &s), f.mul(&t, &t), f.mul(&s, &t)]);
        }
        ring.parse("x0*x1 - x2^2")?
    };
    let form = if form.is_constant() { ring.parse("x0")? } else { form };
    let mut pts: Vec<Vec<F::Elem>> = Vec::new();
    for p in on_d {
        if p.iter().any(|a| !f.is_zero(a)) && below(&mut r, 2) == 0 {
            pts.push(p);
        }
    }
    for _ in 0..1 + below(&mut r, 3) {
        pts.push(random_vec(&f, 3, &mut r));
    }
    Ok((form, points_ideal(&ring, &pts)?))
}

/// Two finite reduced schemes in `P^2` or `P^3` sharing some points.
pub fn finite_pair<F: Field>(field: F, seed: u64) -> Result<(Ideal<F>, Ideal<F>)> {
    let mut r = rng(seed);
    let n = 2 + below(&mut r, 2);
    let ring = Ring::projective(field, n)?;
    let f = ring.field().clone();
    let shared: Vec<Vec<F::Elem>> = (0..below(&mut r, 3)).map(|_| random_vec(&f, n + 1, &mut r)).collect();
    let mut x = shared.clone();
    let mut y = shared;
    for _ in 0..1 + below(&mut r, 4) {
        x.push(random_vec(&f, n + 1, &mut r));
    }
    for _ in 0..1 + below(&mut r, 4) {
        y.push(random_vec(&f, n + 1, &mut r));
    }
    Ok((points_ideal(&ring, &x)?, points_ideal(&ring, &y)?))
}

/// A curve ideal in `P^n`: a random rational normal curve of degree `n`, or
/// a complete intersection of `n - 1` random forms of degree at most 2.
fn random_curve_ideal<F: Field>(ring: &Ring<F>, r: &mut ChaCha8Rng) -> Result<Ideal<F>> {
    let n = ring.nvars() - 1;
    let f = ring.field();
    if below(r, 2) == 0 {
        loop {
            let cols: Vec<Vec<F::Elem>> = (0..=n).map(|_| random_vec(f, n + 1, r)).collect();
            if let Ok(c) = rnc_from_columns(ring, cols) {
                return Ok(c.ideal().clone());
            }
        }
    }
    let gens = (0..n - 1).map(|_| random_form(ring, 1 + below(r, 2) as u32, r)).collect();
    Ideal::new(ring, gens)
}

/// Two curve ideals in `P^2 .. P^4`, so that `dim S/(I+J) <= 1`.
pub fn caviglia_pair<F: Field>(field: F, seed: u64) -> Result<(Ideal<F>, Ideal<F>)> {
    let mut r = rng(seed);
    let n = 2 + below(&mut r, 3);
    let ring = Ring::projective(field, n)?;
    Ok((random_curve_ideal(&ring, &mut r)?, random_curve_ideal(&ring, &mut r)?))
}

/// A homogeneous ideal that is usually not saturated: `J · m^k`, `J`
/// intersected with a monomial `m`-primary ideal, or a monomial
/// `m`-primary ideal alone.
pub fn nonsaturated_ideal<F: Field>(field: F, seed: u64) -> Result<Ideal<F>> {
    let mut r = rng(seed);
    let n = 2 + below(&mut r, 2);
    let ring = Ring::projective(field, n)?;
    let f = ring.field().clone();
    let primary = |r: &mut ChaCha8Rng| -> Result<Ideal<F>> {
        let gens = (0..=n)
            .map(|i| {
                let mut e = alloc::vec![0u32; n + 1];
                e[i] = 1 + below(r, 3) as u32;
                ring.monomial(&e)
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&ring, gens)
    };
    let pts: Vec<Vec<F::Elem>> = (0..1 + below(&mut r, 3)).map(|_| random_vec(&f, n + 1, &mut r)).collect();
    let j = points_ideal(&ring, &pts)?;
    match below(&mut r, 3) {
        0 => {
            let k = 1 + below(&mut r, 2) as u32;
            let mut gens = Vec::new();
            for g in j.gens() {
                for m in ring.monomials_of_degree(k) {
                    gens.push(g.mul_monomial(&m));
                }
            }
            Ideal::new(&ring, gens)
        }
        1 => j.intersect(&primary(&mut r)?),
        _ => primary(&mut r),
    }
}

/// A random tree of rational normal curves of total degree at least 2,
/// spanning its ambient space.
pub fn random_tree<F: Field>(field: F, seed: u64) -> Result<Curve<F>> {
    let mut spec = TreeSpec::random(seed, 4, 8);
    let mut salt = seed;
    while spec.total_degree() < 2 {
        salt = salt.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        spec = TreeSpec::random(salt, 4, 8);
    }
    let ring = Ring::projective(field, spec.total_degree())?;
    tree(&ring, &spec)
}

/// A random connected curve of at most four rational normal curves.
pub fn random_curve<F: Field>(field: F, seed: u64) -> Result<RandomCurve<F>> {
    random_connected_curve(field, seed, Budget { max_components: 4, max_degree: 8, max_ambient: 6 })
}

/// Named pairs `(C, D)` of connected curves that meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureCase {
    /// The conic and the twisted cubic of the twisted configuration.
    TwistedSplit,
    /// `F` and `G ∪ E ∪ K` from the `m = 4` construction.
    NoSecantSplit,
    /// A line and a twisted cubic through one of its points.
    CubicPlusLine,
    /// A plane cubic and a plane quartic in planes meeting in a point.
    PlaneCubicPlusQuartic,
    /// A line plus a conic, against a plane cubic through the line's plane.
    LineInTree,
    /// A conic meeting a twisted cubic of `P^3` in one point.
    CubicPlusConicP3,
    /// A conic meeting a twisted cubic of `P^3` in two points.
    CubicPlusConicP3TwoPoints,
    /// Two twisted cubics of `P^4` whose spans meet in a plane.
    TwoCubicsP4,
}

impl StructureCase {
    pub const ALL: [StructureCase; 8] = [
        StructureCase::TwistedSplit,
        StructureCase::NoSecantSplit,
        StructureCase::CubicPlusLine,
        StructureCase::PlaneCubicPlusQuartic,
        StructureCase::LineInTree,
        StructureCase::CubicPlusConicP3,
        StructureCase::CubicPlusConicP3TwoPoints,
        StructureCase::TwoCubicsP4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            StructureCase::TwistedSplit => "twisted_split",
            StructureCase::NoSecantSplit => "no_secant_split",
            StructureCase::CubicPlusLine => "cubic_plus_line",
            StructureCase::PlaneCubicPlusQuartic => "plane_cubic_plus_quartic",
            StructureCase::LineInTree => "line_in_tree",
            StructureCase::CubicPlusConicP3 => "cubic_plus_conic_p3",
            StructureCase::CubicPlusConicP3TwoPoints => "cubic_plus_conic_p3_two_points",
            StructureCase::TwoCubicsP4 => "two_cubics_p4",
        }
    }

    pub fn build<F: Field>(self, field: F) -> Result<(Curve<F>, Curve<F>)> {
        match self {
            StructureCase::TwistedSplit => {
                let t = twisted_config(field)?;
                Ok((t.conic, t.cubic))
            }
            StructureCase::NoSecantSplit => {
                let g = no_secant_curve(field, 4)?;
                Ok((g.curve.subcurve_by_labels(&["F"])?, g.curve.subcurve_by_labels(&["G", "E", "K"])?))
            }
            StructureCase::CubicPlusLine => {
                let ring = Ring::projective(field, 4)?;
                let cubic = twisted_cubic(&ring)?;
                let line = single(&ring, rnc_from_columns(&ring, alloc::vec![unit(&ring, 0), unit(&ring, 4)])?)?;
                Ok((line, single(&ring, cubic)?))
            }
            StructureCase::PlaneCubicPlusQuartic => {
                let ring = Ring::projective(field, 4)?;
                let cubic = plane_curve_component(&plane(&ring, "x3", "x4")?, &ring.parse("x0^3 + x1^3 + x0*x1*x2")?)?;
                let quartic = plane_curve_component(&plane(&ring, "x0", "x1")?, &ring.parse("x3^4 + x4^4 + x2*x3^3 + x2^2*x4^2")?)?;
                Ok((single(&ring, cubic)?, single(&ring, quartic)?))
            }
            StructureCase::LineInTree => {
                let ring = Ring::projective(field, 4)?;
                let line = rnc_from_columns(&ring, alloc::vec![unit(&ring, 0), unit(&ring, 1)])?.with_label("L");
                let conic = plane_curve_component(&plane(&ring, "x1", "x2")?, &ring.parse("x3^2 - x0*x4")?)?;
                let cubic = plane_curve_component(&plane(&ring, "x3", "x4")?, &ring.parse("x0^3 + x1^3 + x2^3")?)?;
                Ok((Curve::from_components(&ring, alloc::vec![line, conic])?, single(&ring, cubic)?))
            }
            StructureCase::CubicPlusConicP3 | StructureCase::CubicPlusConicP3TwoPoints => {
                let ring = Ring::projective(field, 3)?;
                let (c, d) = cubic_plus_conic(&ring, self == StructureCase::CubicPlusConicP3TwoPoints)?;
                Ok((single(&ring, c)?, single(&ring, d)?))
            }
            StructureCase::TwoCubicsP4 => {
                let ring = Ring::projective(field, 4)?;
                let f = ring.field().clone();
                let t = twisted_cubic(&ring)?;
                let e4 = unit(&ring, 4);
                let pts = cubic_points(&ring);
                let p2e4: Vec<F::Elem> = pts[1].iter().zip(&e4).map(|(a, b)| f.add(a, b)).collect();
                let t2 = rnc_from_columns(&ring, alloc::vec![pts[0].clone(), p2e4, pts[2].clone(), e4])?.with_label("T2");
                Ok((single(&ring, t)?, single(&ring, t2)?))
            }
        }
    }
}

/// Connected curves in `P^3` without linear components.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum P3Case {
    /// A twisted cubic plus a conic meeting it once.
    CubicPlusConic,
    /// A twisted cubic plus a conic meeting it twice.
    CubicPlusConicTwoPoints,
    /// Two conics in different planes meeting in two points.
    TwoConics,
    /// A plane quartic and a conic meeting in one point.
    QuarticPlusConic,
    /// A twisted cubic.
    TwistedCubic,
}

impl P3Case {
    pub const ALL: [P3Case; 5] = [P3Case::CubicPlusConic, P3Case::CubicPlusConicTwoPoints, P3Case::TwoConics, P3Case::QuarticPlusConic, P3Case::TwistedCubic];

    pub fn name(self) -> &'static str {
        match self {
            P3Case::CubicPlusConic => "cubic_plus_conic",
            P3Case::CubicPlusConicTwoPoints => "cubic_plus_conic_two_points",
            P3Case::TwoConics => "two_conics",
            P3Case::QuarticPlusConic => "quartic_plus_conic",
            P3Case::TwistedCubic => "twisted_cubic",
        }
    }

    pub fn build<F: Field>(self, field: F) -> Result<Curve<F>> {
        let ring = Ring::projective(field, 3)?;
        let comps = match self {
            P3Case::CubicPlusConic | P3Case::CubicPlusConicTwoPoints => {
                let (c, d) = cubic_plus_conic(&ring, self == P3Case::CubicPlusConicTwoPoints)?;
                alloc::vec![c, d]
            }
            P3Case::TwoConics => alloc::vec![
                plane_curve_component(&LinearSubspace::from_forms(&ring, &[ring.parse("x3")?])?, &ring.parse("x1*x2 - x0^2")?)?.with_label("A"),
                plane_curve_component(&LinearSubspace::from_forms(&ring, &[ring.parse("x0")?])?, &ring.parse("x1*x2 - x3^2")?)?.with_label("B"),
            ],
            P3Case::QuarticPlusConic => alloc::vec![
                plane_curve_component(&LinearSubspace::from_forms(&ring, &[ring.parse("x3")?])?, &ring.parse("x0^4 + x0*x1^3 + x1*x2^3 + x2^4")?)?
                    .with_label("Q"),
                plane_curve_component(&LinearSubspace::from_forms(&ring, &[ring.parse("x0")?])?, &ring.parse("x1*x2 - x3^2")?)?.with_label("B"),
            ],
            P3Case::TwistedCubic => alloc::vec![twisted_cubic(&ring)?],
        };
        Curve::from_components(&ring, comps)
    }
}

fn unit<F: Field>(ring: &Ring<F>, i: usize) -> Vec<F::Elem> {
    let f = ring.field();
    (0..ring.nvars()).map(|j| if i == j { f.one() } else { f.zero() }).collect()
}

fn single<F: Field>(ring: &Ring<F>, c: Component<F>) -> Result<Curve<F>> {
    Curve::from_components(ring, alloc::vec![c])
}

fn plane<F: Field>(ring: &Ring<F>, a: &str, b: &str) -> Result<LinearSubspace<F>> {
    LinearSubspace::from_forms(ring, &[ring.parse(a)?, ring.parse(b)?])
}

/// `[s^3 : s^2 t : s t^2 : t^3]` in the first four coordinates.
fn twisted_cubic<F: Field>(ring: &Ring<F>) -> Result<Component<F>> {
    Ok(rnc_from_columns(ring, (0..4).map(|i| unit(ring, i)).collect())?.with_label("T"))
}

/// The points `[t^3 : t^2 : t : 1]` of the twisted cubic for `t = 1, 2, 3`.
fn cubic_points<F: Field>(ring: &Ring<F>) -> Vec<Vec<F::Elem>> {
    let f = ring.field();
    (1..=3i64)
        .map(|t| (0..ring.nvars()).map(|i| if i < 4 { f.from_i64(t.pow(3 - i as u32)) } else { f.zero() }).collect())
        .collect()
}

/// The twisted cubic and a conic in the plane through three of its points,
/// meeting it in one or two of them.
fn cubic_plus_conic<F: Field>(ring: &Ring<F>, two_points: bool) -> Result<(Component<F>, Component<F>)> {
    let pts = cubic_points(ring);
    let r3 = Ring::projective(ring.field().clone(), 2)?;
    let form = if two_points { "x2^2 + x0*x1 + 2*x0*x2 + 3*x1*x2" } else { "x1^2 + x2^2 + x0*x1 + x0*x2" };
    let conic = plane_curve_in_coords(ring, &[pts[0].clone(), pts[1].clone(), pts[2].clone()], &r3.parse(form)?)?.with_label("C");
    Ok((twisted_cubic(ring)?, conic))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::hilbert::dim_deg;

    #[test]
    fn cases_meet() {
        for case in StructureCase::ALL {
            let (c, d) = case.build(PrimeField::default()).unwrap();
            assert!(c.is_connected() && d.is_connected(), "{}", case.name());
            assert!(dim_deg(&c.ideal().sum(d.ideal()).unwrap()).unwrap().0 >= 0, "{}", case.name());
        }
        for case in P3Case::ALL {
            assert!(case.build(PrimeField::default()).unwrap().is_connected(), "{}", case.name());
        }
    }

    #[test]
    fn conic_meets_cubic_as_designed() {
        let ring = Ring::projective(PrimeField::default(), 3).unwrap();
        for (two, want) in [(false, 1), (true, 2)] {
            let (t, c) = cubic_plus_conic(&ring, two).unwrap();
            let cap = t.ideal().sum(c.ideal()).unwrap().saturate().unwrap();
            assert_eq!(dim_deg(&cap).unwrap(), (0, want));
        }
    }

    #[test]
    fn planar_families_have_the_right_degree() {
        let f = PrimeField::default();
        for (fam, d) in [(PlanarFamily::Collinear(5), 5), (PlanarFamily::CollinearPlusOne(6), 6), (PlanarFamily::FourGeneral, 4)] {
            assert_eq!(dim_deg(&planar_points(f.clone(), fam, 3).unwrap()).unwrap(), (0, d));
        }
    }
}
