//! Curve constructions: lines, rational normal curves, plane curves, unions,
//! trees of rational curves, the fixed configurations studied by the checks,
//! and seeded random connected curves.

use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_core::RngCore;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{dot, span, vector_rank, xi_of_ideal, LinearSubspace, XiValue};
use crate::hilbert::dim_deg;
use crate::ideal::Ideal;
use crate::linalg::{nullspace, solve, Matrix};
use crate::poly::{Polynomial, Ring};

/// What a component is known to be by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    Line,
    RationalNormal { degree: u32 },
    PlaneCurve { degree: u32 },
}

/// An irreducible (by construction) component of a curve.
#[derive(Clone, Debug)]
pub struct Component<F: Field> {
    ideal: Ideal<F>,
    kind: ComponentKind,
    label: String,
    degree: i64,
    span: LinearSubspace<F>,
    /// Columns `c_k` of a parametrization `[s:t] -> Σ c_k s^{d-k} t^k`.
    param: Option<Vec<Vec<F::Elem>>>,
}

impl<F: Field> Component<F> {
    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn kind(&self) -> ComponentKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn span(&self) -> &LinearSubspace<F> {
        &self.span
    }

    pub fn with_label(mut self, label: &str) -> Self {
        self.label = label.into();
        self
    }

    /// The point with parameter `[s:t]` of a rational component.
    pub fn point_at(&self, s: &F::Elem, t: &F::Elem) -> Option<Vec<F::Elem>> {
        let cols = self.param.as_ref()?;
        let f = self.ideal.ring().field();
        let d = cols.len() - 1;
        let mut p = alloc::vec![f.zero(); cols[0].len()];
        for (k, c) in cols.iter().enumerate() {
            let mut w = f.one();
            for _ in 0..d - k {
                w = f.mul(&w, s);
            }
            for _ in 0..k {
                w = f.mul(&w, t);
            }
            for (x, y) in p.iter_mut().zip(c) {
                *x = f.add(x, &f.mul(&w, y));
            }
        }
        Some(p)
    }
}

/// A reduced curve: the intersection of its component ideals, with the
/// incidence graph of the components.
#[derive(Clone, Debug)]
pub struct Curve<F: Field> {
    ideal: Ideal<F>,
    components: Vec<Component<F>>,
    edges: Vec<(usize, usize)>,
    tree: bool,
}

impl<F: Field> Curve<F> {
    /// Builds the union of the given components.
    pub fn from_components(ring: &Ring<F>, components: Vec<Component<F>>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Construction("a curve needs at least one component".into()));
        }
        for (i, a) in components.iter().enumerate() {
            ring.check_same(a.ideal.ring())?;
            for b in &components[..i] {
                if a.ideal.same_ideal(&b.ideal)? {
                    return Err(Error::SharedComponent(alloc::format!("{} and {} coincide", b.label, a.label)));
                }
            }
        }
        let mut ideal = components[0].ideal.clone();
        for c in &components[1..] {
            ideal = ideal.intersect(&c.ideal)?;
        }
        let mut edges = Vec::new();
        for i in 0..components.len() {
            for j in i + 1..components.len() {
                let sum = components[i].ideal.sum(&components[j].ideal)?;
                if dim_deg(&sum)?.0 >= 0 {
                    edges.push((i, j));
                }
            }
        }
        Ok(Curve { ideal: ideal.assume_saturated(), components, edges, tree: false })
    }

    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn ring(&self) -> &Ring<F> {
        self.ideal.ring()
    }

    pub fn components(&self) -> &[Component<F>] {
        &self.components
    }

    pub fn component(&self, label: &str) -> Option<&Component<F>> {
        self.components.iter().find(|c| c.label == label)
    }

    /// Pairs of components that meet.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `is_connected`.
    pub fn is_connected(&self) -> bool {
        let n = self.components.len();
        let mut seen = alloc::vec![false; n];
        let mut stack = alloc::vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v { b } else if b == v { a } else { continue };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Whether the curve was built as a linearly normal tree of rational
    /// curves.
    pub fn is_tree(&self) -> bool {
        self.tree
    }

    pub fn degree(&self) -> Result<i64> {
        Ok(dim_deg(&self.ideal)?.1)
    }

    pub fn span(&self) -> Result<LinearSubspace<F>> {
        span(&self.ideal)
    }

    pub fn xi(&self) -> Result<XiValue> {
        xi_of_ideal(&self.ideal)
    }

    pub fn has_linear_component(&self) -> bool {
        self.components.iter().any(|c| c.degree == 1)
    }

    /// The union of the components with the given indices.
    pub fn subcurve(&self, indices: &[usize]) -> Result<Curve<F>> {
        let comps = indices.iter().map(|&i| self.components[i].clone()).collect();
        Curve::from_components(self.ring(), comps)
    }

    /// The union of the components with the given labels.
    pub fn subcurve_by_labels(&self, labels: &[&str]) -> Result<Curve<F>> {
        let mut idx = Vec::new();
        for l in labels {
            idx.push(
                self.components
                    .iter()
                    .position(|c| c.label == *l)
                    .ok_or_else(|| Error::InvalidArgument(alloc::format!("no component {l}")))?,
            );
        }
        self.subcurve(&idx)
    }
}

/// `linear_subspace_ideal`.
pub fn linear_subspace_ideal<F: Field>(ring: &Ring<F>, forms: &[Polynomial<F>]) -> Result<Ideal<F>> {
    Ok(LinearSubspace::from_forms(ring, forms)?.ideal())
}

/// A line component through two distinct points.
pub fn line_component<F: Field>(ring: &Ring<F>, p: &[F::Elem], q: &[F::Elem]) -> Result<Component<F>> {
    if vector_rank(ring.field(), &[p.to_vec(), q.to_vec()]) != 2 {
        return Err(Error::Construction("a line needs two distinct points".into()));
    }
    rnc_from_columns(ring, alloc::vec![p.to_vec(), q.to_vec()])
}

/// `linear_curve`.
pub fn linear_curve<F: Field>(ring: &Ring<F>, p: &[F::Elem], q: &[F::Elem]) -> Result<Curve<F>> {
    Curve::from_components(ring, alloc::vec![line_component(ring, p, q)?])
}

/// The rational normal curve `[s:t] -> Σ_k cols[k] s^{d-k} t^k`, with ideal
/// the linear forms vanishing on the span plus the 2x2 minors of the Hankel
/// matrix in span coordinates.
pub fn rnc_from_columns<F: Field>(ring: &Ring<F>, cols: Vec<Vec<F::Elem>>) -> Result<Component<F>> {
    let n = ring.nvars();
    let f = ring.field();
    if cols.len() < 2 || cols.iter().any(|c| c.len() != n) {
        return Err(Error::Construction(alloc::format!("need at least two columns of length {n}")));
    }
    let d = cols.len() - 1;
    let a = Matrix::from_rows(cols.clone(), n);
    if vector_rank(f, &cols) != d + 1 {
        return Err(Error::Construction(alloc::format!("degree-{d} map has rank below {}", d + 1)));
    }
    let mut gens: Vec<Polynomial<F>> = nullspace(f, &a).iter().map(|r| ring.linear_form(r)).collect::<Result<_>>()?;
    // y_k = b_k . x with b_k . cols[j] = δ_kj
    let mut ys = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let mut rhs = alloc::vec![f.zero(); d + 1];
        rhs[k] = f.one();
        let b = solve(f, &a, &rhs).ok_or_else(|| Error::Internal("no left inverse".into()))?;
        ys.push(ring.linear_form(&b)?);
    }
    for i in 0..d {
        for j in i + 1..d {
            gens.push(ys[i].mul(&ys[j + 1])?.sub(&ys[i + 1].mul(&ys[j])?)?);
        }
    }
    let ideal = Ideal::new(ring, gens)?.assume_saturated();
    let kind = if d == 1 { ComponentKind::Line } else { ComponentKind::RationalNormal { degree: d as u32 } };
    let label = if d == 1 { String::from("line") } else { alloc::format!("rnc{d}") };
    let span = LinearSubspace::from_points(ring, &cols)?;
    Ok(Component { ideal, kind, label, degree: d as i64, span, param: Some(cols) })
}

/// `rational_normal_curve`: `rows[i]` holds the coefficients of `x_i` in
/// `s^d, s^{d-1} t, ..., t^d`.
pub fn rational_normal_curve<F: Field>(ring: &Ring<F>, degree: usize, rows: &[Vec<F::Elem>]) -> Result<Curve<F>> {
    if rows.len() != ring.nvars() || rows.iter().any(|r| r.len() != degree + 1) {
        return Err(Error::Construction(alloc::format!(
            "expected {} rows of length {}",
            ring.nvars(),
            degree + 1
        )));
    }
    let cols = (0..=degree).map(|k| rows.iter().map(|r| r[k].clone()).collect()).collect();
    Curve::from_components(ring, alloc::vec![rnc_from_columns(ring, cols)?])
}

/// A plane curve component `Π ∩ V(form)`, the form given in ambient
/// coordinates.
pub fn plane_curve_component<F: Field>(plane: &LinearSubspace<F>, form: &Polynomial<F>) -> Result<Component<F>> {
    let ring = plane.ring();
    if plane.dim() != 2 {
        return Err(Error::Construction(alloc::format!("expected a 2-plane, got dimension {}", plane.dim())));
    }
    let form = form.to_ring(ring)?;
    if form.is_zero() || !form.is_homogeneous() || form.is_constant() {
        return Err(Error::Construction("plane curve needs a nonconstant homogeneous form".into()));
    }
    let pi = plane.ideal();
    if pi.contains(&form)? {
        return Err(Error::Construction(alloc::format!("{} vanishes on the plane", form.render())));
    }
    let ideal = pi.add_gens(&[form])?;
    let (dim, degree) = dim_deg(&ideal)?;
    if dim != 1 {
        return Err(Error::Internal("plane section is not a curve".into()));
    }
    let span = span(&ideal)?;
    let ideal = ideal.assume_saturated();
    let kind = if degree == 1 { ComponentKind::Line } else { ComponentKind::PlaneCurve { degree: degree as u32 } };
    Ok(Component { ideal, kind, label: alloc::format!("plane{degree}"), degree, span, param: None })
}

/// `plane_curve`: the ambient-form variant.
pub fn plane_curve<F: Field>(plane: &LinearSubspace<F>, form: &Polynomial<F>) -> Result<Curve<F>> {
    Curve::from_components(plane.ring(), alloc::vec![plane_curve_component(plane, form)?])
}

/// A plane curve given by a form in coordinates `(u0, u1, u2)` on the plane
/// spanned by three points, `x = u0 p0 + u1 p1 + u2 p2`.
pub fn plane_curve_in_coords<F: Field>(ring: &Ring<F>, points: &[Vec<F::Elem>; 3], form: &Polynomial<F>) -> Result<Component<F>> {
    let f = ring.field();
    let n = ring.nvars();
    if form.ring().nvars() != 3 {
        return Err(Error::Construction("plane coordinates need a form in three variables".into()));
    }
    let pts = points.to_vec();
    if vector_rank(f, &pts) != 3 {
        return Err(Error::Construction("the three points do not span a plane".into()));
    }
    let a = Matrix::from_rows(pts.clone(), n);
    let mut us = Vec::with_capacity(3);
    for k in 0..3 {
        let mut rhs = alloc::vec![f.zero(); 3];
        rhs[k] = f.one();
        let b = solve(f, &a, &rhs).ok_or_else(|| Error::Internal("no left inverse".into()))?;
        us.push(ring.linear_form(&b)?);
    }
    let lifted = form.substitute(&us)?;
    let plane = LinearSubspace::from_points(ring, &pts)?;
    plane_curve_component(&plane, &lifted)
}

/// `curve_union`: fails if two parts share a component.
pub fn curve_union<F: Field>(parts: &[&Curve<F>]) -> Result<Curve<F>> {
    let Some(first) = parts.first() else {
        return Err(Error::Construction("empty union".into()));
    };
    let comps = parts.iter().flat_map(|c| c.components.iter().cloned()).collect();
    Curve::from_components(first.ring(), comps)
}

/// One gluing step of a tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeStep {
    /// Degree of the new rational normal curve.
    pub degree: usize,
    /// Component to glue to and the parameter `[s:t]` of the gluing point on
    /// it; `None` for the first component.
    pub attach: Option<(usize, [i64; 2])>,
}

/// A linearly normal tree of rational curves. Each new component spans the
/// gluing point plus fresh coordinate directions, so its span meets the span
/// of the earlier components in exactly that point. A seed, if given,
/// applies a random change of coordinates to the whole configuration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TreeSpec {
    pub steps: Vec<TreeStep>,
    #[serde(default)]
    pub seed: Option<u64>,
}

impl TreeSpec {
    pub fn total_degree(&self) -> usize {
        self.steps.iter().map(|s| s.degree).sum()
    }

    /// A random tree with at most `max_components` components whose total
    /// degree fits in `P^{max_ambient}`.
    pub fn random(seed: u64, max_components: usize, max_ambient: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = 1 + (rng.next_u32() as usize) % max_components.max(1);
        let mut steps = Vec::new();
        let mut used = 0;
        for i in 0..k {
            let room = max_ambient.saturating_sub(used).min(3);
            if room == 0 {
                break;
            }
            let d = 1 + (rng.next_u32() as usize) % room;
            let attach = if i == 0 {
                None
            } else {
                let c = (rng.next_u32() as usize) % i;
                let s = 1 + (rng.next_u32() % 50) as i64;
                let t = (rng.next_u32() % 50) as i64;
                Some((c, [s, t]))
            };
            steps.push(TreeStep { degree: d, attach });
            used += d;
        }
        TreeSpec { steps, seed: Some(rng.next_u64()) }
    }
}

/// Random invertible `n x n` matrix.
fn random_invertible<F: Field>(f: &F, n: usize, rng: &mut dyn RngCore) -> Vec<Vec<F::Elem>> {
    loop {
        let m: Vec<Vec<F::Elem>> = (0..n).map(|_| (0..n).map(|_| f.random(rng)).collect()).collect();
        if vector_rank(f, &m) == n {
            return m;
        }
    }
}

fn apply<F: Field>(f: &F, m: &[Vec<F::Elem>], v: &[F::Elem]) -> Vec<F::Elem> {
    m.iter().map(|row| dot(f, row, v)).collect()
}

/// `tree`: builds and verifies a linearly normal tree of rational curves.
pub fn tree<F: Field>(ring: &Ring<F>, spec: &TreeSpec) -> Result<Curve<F>> {
    let f = ring.field();
    let n = ring.nvars();
    if spec.steps.is_empty() {
        return Err(Error::Construction("empty tree".into()));
    }
    if spec.total_degree() + 1 > n {
        return Err(Error::Construction(alloc::format!("total degree {} does not fit in P^{}", spec.total_degree(), n - 1)));
    }
    let change = match spec.seed {
        Some(s) => random_invertible(f, n, &mut ChaCha8Rng::seed_from_u64(s)),
        None => (0..n).map(|i| (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect()).collect(),
    };
    let unit = |i: usize| -> Vec<F::Elem> { (0..n).map(|j| if i == j { f.one() } else { f.zero() }).collect() };
    let mut next = 0;
    let mut comps: Vec<Component<F>> = Vec::new();
    for (k, step) in spec.steps.iter().enumerate() {
        let mut cols = Vec::new();
        match step.attach {
            None if k == 0 => {}
            Some((c, [s, t])) if c < comps.len() => {
                let p = comps[c].point_at(&f.from_i64(s), &f.from_i64(t)).ok_or_else(|| Error::Internal("component without parametrization".into()))?;
                if p.iter().all(|x| f.is_zero(x)) {
                    return Err(Error::Construction(alloc::format!("step {k}: parameter [{s}:{t}] is not a point")));
                }
                cols.push(p);
            }
            _ => return Err(Error::Construction(alloc::format!("step {k}: bad attachment {:?}", step.attach))),
        }
        while cols.len() < step.degree + 1 {
            cols.push(apply(f, &change, &unit(next)));
            next += 1;
        }
        let comp = rnc_from_columns(ring, cols)?.with_label(&alloc::format!("T{k}"));
        if k > 0 {
            let old = Curve::from_components(ring, comps.clone())?;
            let meet = old.span()?.meet(comp.span())?;
            let scheme = old.ideal().sum(comp.ideal())?;
            let (dim, deg) = dim_deg(&scheme)?;
            if meet.dim() != 0 || (dim, deg) != (0, 1) {
                return Err(Error::Construction(alloc::format!(
                    "step {k}: span meet has dimension {}, scheme intersection has (dim, deg) = ({dim}, {deg})",
                    meet.dim()
                )));
            }
        }
        comps.push(comp);
    }
    let mut c = Curve::from_components(ring, comps)?;
    c.tree = true;
    Ok(c)
}

/// The degree-`(m+2)` curve `E ∪ F ∪ G ∪ K` in `P^4` together with its
/// named pieces.
#[derive(Clone, Debug)]
pub struct NoSecantCurve<F: Field> {
    pub m: usize,
    pub curve: Curve<F>,
    /// 2-planes `L = V(x3, x4)`, `M = V(x0, x4)`, `N = V(x1, x3)`.
    pub l: LinearSubspace<F>,
    pub mm: LinearSubspace<F>,
    pub n: LinearSubspace<F>,
    /// The line `K = V(x2, x3, x4)`.
    pub k: LinearSubspace<F>,
    /// `P = e1 = K ∩ M`, `Q = e0 = K ∩ N`.
    pub p: Vec<F::Elem>,
    pub q: Vec<F::Elem>,
}

/// `no_secant_curve`: `E = V(x3, x4, x0^{m-3} + x1^{m-3} + x2^{m-3})`,
/// `F = V(x0, x4, x2^2 - x1 x3)`, `G = V(x1, x3, x2^2 - x0 x4)`,
/// `K = V(x2, x3, x4)`. Every incidence condition the construction relies on
/// is checked here.
pub fn no_secant_curve<F: Field>(field: F, m: usize) -> Result<NoSecantCurve<F>> {
    if m < 4 {
        return Err(Error::Construction(alloc::format!("m = {m} < 4")));
    }
    let ring = Ring::projective(field, 4)?;
    let f = ring.field().clone();
    let plane = |a: &str, b: &str| -> Result<LinearSubspace<F>> { LinearSubspace::from_forms(&ring, &[ring.parse(a)?, ring.parse(b)?]) };
    let l = plane("x3", "x4")?;
    let mm = plane("x0", "x4")?;
    let n = plane("x1", "x3")?;
    let k = LinearSubspace::from_forms(&ring, &[ring.parse("x2")?, ring.parse("x3")?, ring.parse("x4")?])?;
    let e = |i: usize| -> Vec<F::Elem> { (0..5).map(|j| if i == j { f.one() } else { f.zero() }).collect() };
    let (p, q) = (e(1), e(0));
    let fail = |what: &str| Err(Error::Construction(alloc::format!("no_secant_curve({m}): {what}")));

    let (ml, nl, mn) = (mm.meet(&l)?, n.meet(&l)?, mm.meet(&n)?);
    if ml.dim() != 1 || nl.dim() != 1 || ml == nl {
        return fail("M and N must meet L in distinct lines");
    }
    if mn.dim() != 0 || !mn.contains_point(&e(2)) {
        return fail("M and N must meet in the single point e2");
    }
    if !l.contains(&k) || k.meet(&mm)? != LinearSubspace::from_points(&ring, &[p.clone()])? || k.meet(&n)? != LinearSubspace::from_points(&ring, &[q.clone()])? {
        return fail("K must lie in L and meet M in P and N in Q");
    }

    let exp = m - 3;
    let e_form = ring.parse(&alloc::format!("x0^{exp} + x1^{exp} + x2^{exp}"))?;
    let ec = plane_curve_component(&l, &e_form)?.with_label("E");
    let fc = plane_curve_component(&mm, &ring.parse("x2^2 - x1*x3")?)?.with_label("F");
    let gc = plane_curve_component(&n, &ring.parse("x2^2 - x0*x4")?)?.with_label("G");
    let kc = line_component(&ring, &q, &p)?.with_label("K");

    let point_ideal = |pt: &[F::Elem]| LinearSubspace::from_points(&ring, &[pt.to_vec()]).map(|s| s.ideal());
    let (ip, iq) = (point_ideal(&p)?, point_ideal(&q)?);
    for (c, pt, ipt, name) in [(&fc, &p, &ip, "F"), (&gc, &q, &iq, "G")] {
        let section = c.ideal().add_gens(&l.forms())?.saturate()?;
        let sq = ipt.gens().iter().flat_map(|a| ipt.gens().iter().map(move |b| a.mul(b))).collect::<Result<Vec<_>>>()?;
        let double = dim_deg(&section)? == (0, 2) && section.contains_ideal(&Ideal::new(&ring, sq)?)?;
        if !double || !k.contains_point(pt) {
            return fail(&alloc::format!("{name} must meet L in a double point on K"));
        }
    }
    if f.is_zero(&e_form.eval(&p)?) || f.is_zero(&e_form.eval(&q)?) {
        return fail("E must avoid P and Q");
    }
    if ec.ideal().contains_ideal(&k.ideal())? {
        return fail("E must not contain K");
    }
    let curve = Curve::from_components(&ring, alloc::vec![ec, fc, gc, kc])?;
    Ok(NoSecantCurve { m, curve, l, mm, n, k, p, q })
}

/// The conic-plus-twisted-cubic configuration in `P^4`.
#[derive(Clone, Debug)]
pub struct TwistedConfig<F: Field> {
    /// `C ∪ D`.
    pub curve: Curve<F>,
    /// The conic `C`.
    pub conic: Curve<F>,
    /// The twisted cubic `D`.
    pub cubic: Curve<F>,
    /// `L = line(e0, e3)`, an extremal secant.
    pub l: LinearSubspace<F>,
    /// `M = line([1:1:1:1:0], [1:0:0:1:0])`, a 2-secant.
    pub m: LinearSubspace<F>,
    /// `Π = V(x1 - x2, x0 - x3)`, the span of `C`.
    pub plane: LinearSubspace<F>,
}

/// `twisted_config`: `D = [s^3 : s^2 t : s t^2 : t^3 : 0]`,
/// `C = {uv = w^2}` under `(u, v, w) -> [u+v : v : v : u+v : w]`.
///
/// The span of `C` meets the span `V(x4)` of `D` in the line `M`, not in a
/// plane; this is asserted.
pub fn twisted_config<F: Field>(field: F) -> Result<TwistedConfig<F>> {
    let ring = Ring::projective(field, 4)?;
    let f = ring.field().clone();
    let v = |xs: [i64; 5]| -> Vec<F::Elem> { xs.iter().map(|&x| f.from_i64(x)).collect() };
    let d_cols = alloc::vec![v([1, 0, 0, 0, 0]), v([0, 1, 0, 0, 0]), v([0, 0, 1, 0, 0]), v([0, 0, 0, 1, 0])];
    let dc = rnc_from_columns(&ring, d_cols)?.with_label("D");
    let r3 = Ring::projective(f.clone(), 2)?;
    let cc = plane_curve_in_coords(&ring, &[v([1, 0, 0, 1, 0]), v([1, 1, 1, 1, 0]), v([0, 0, 0, 0, 1])], &r3.parse("x0*x1 - x2^2")?)?.with_label("C");
    let l = LinearSubspace::line(&ring, &v([1, 0, 0, 0, 0]), &v([0, 0, 0, 1, 0]))?;
    let m = LinearSubspace::line(&ring, &v([1, 1, 1, 1, 0]), &v([1, 0, 0, 1, 0]))?;
    let plane = LinearSubspace::from_forms(&ring, &[ring.parse("x1 - x2")?, ring.parse("x0 - x3")?])?;
    let fail = |what: &str| Err(Error::Construction(alloc::format!("twisted_config: {what}")));

    if *cc.span() != plane {
        return fail("the conic must span Π");
    }
    if !plane.contains(&m) {
        return fail("M must lie in Π");
    }
    if dim_deg(&dc.ideal().add_gens(&m.forms())?)? != (0, 1) {
        return fail("M must meet D in a single reduced point");
    }
    if cc.span().meet(dc.span())? != m {
        return fail("span(C) ∩ span(D) must be M");
    }
    for (other, name) in [(dc.ideal().clone(), "D"), (l.ideal(), "L")] {
        if dim_deg(&cc.ideal().sum(&other)?)? != (0, 1) {
            return fail(&alloc::format!("C must meet {name} in one point"));
        }
    }
    let conic = Curve::from_components(&ring, alloc::vec![cc.clone()])?;
    let cubic = Curve::from_components(&ring, alloc::vec![dc.clone()])?;
    let curve = Curve::from_components(&ring, alloc::vec![cc, dc])?;
    Ok(TwistedConfig { curve, conic, cubic, l, m, plane })
}

/// Size limits for [`random_connected_curve`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Budget {
    pub max_components: usize,
    pub max_degree: usize,
    pub max_ambient: usize,
}

/// A seeded random connected curve and the span-meet dimension recorded at
/// each gluing.
#[derive(Clone, Debug)]
pub struct RandomCurve<F: Field> {
    pub curve: Curve<F>,
    pub gluing_dims: Vec<i64>,
}

/// `random_connected_curve`: rational normal curves of degree at most 3,
/// each glued through a point of an earlier component, with span meets of
/// dimension 0, 1 or 2.
pub fn random_connected_curve<F: Field>(field: F, seed: u64, budget: Budget) -> Result<RandomCurve<F>> {
    if budget.max_components == 0 || budget.max_degree == 0 || budget.max_ambient < 2 {
        return Err(Error::InvalidArgument(alloc::format!("unusable budget {budget:?}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let amb = 2 + (rng.next_u32() as usize) % (budget.max_ambient - 1);
    let ring = Ring::projective(field, amb)?;
    let f = ring.field().clone();
    let whole = LinearSubspace::whole(&ring);
    let ncomp = 1 + (rng.next_u32() as usize) % budget.max_components;
    for _attempt in 0..20 {
        let mut comps: Vec<Component<F>> = Vec::new();
        let mut dims = Vec::new();
        let mut used = 0;
        let mut ok = true;
        for k in 0..ncomp {
            let room = budget.max_degree.saturating_sub(used).min(3).min(amb);
            if room == 0 {
                break;
            }
            let d = 1 + (rng.next_u32() as usize) % room;
            let mut placed = false;
            for _try in 0..10 {
                let mut cols: Vec<Vec<F::Elem>> = Vec::new();
                let mut old_span = None;
                if k > 0 {
                    let host = &comps[(rng.next_u32() as usize) % comps.len()];
                    let (s, t) = (f.random(&mut rng), f.random(&mut rng));
                    let Some(p) = host.point_at(&s, &t) else { continue };
                    if p.iter().all(|x| f.is_zero(x)) {
                        continue;
                    }
                    cols.push(p);
                    let mut span = comps[0].span().clone();
                    for c in &comps[1..] {
                        span = span.join(c.span())?;
                    }
                    let extra = ((rng.next_u32() % 3) as usize).min(d);
                    for _ in 1..=extra {
                        cols.push(span.random_point(&mut rng));
                    }
                    old_span = Some(span);
                }
                while cols.len() < d + 1 {
                    cols.push(whole.random_point(&mut rng));
                }
                let Ok(comp) = rnc_from_columns(&ring, cols) else { continue };
                if let Some(span) = &old_span {
                    let meet = span.meet(comp.span())?.dim();
                    if meet > 2 {
                        continue;
                    }
                    dims.push(meet);
                }
                comps.push(comp.with_label(&alloc::format!("R{k}")));
                used += d;
                placed = true;
                break;
            }
            if !placed {
                ok = false;
                break;
            }
        }
        if !ok || comps.is_empty() {
            continue;
        }
        match Curve::from_components(&ring, comps) {
            Ok(curve) if curve.is_connected() => return Ok(RandomCurve { curve, gluing_dims: dims }),
            Ok(_) | Err(Error::SharedComponent(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Construction(alloc::format!("no connected curve for seed {seed} within {budget:?}")))
}

/// The reduced union of points given by coordinates, as an intersection of
/// point ideals.
pub fn points_ideal<F: Field>(ring: &Ring<F>, points: &[Vec<F::Elem>]) -> Result<Ideal<F>> {
    let mut acc = Ideal::unit(ring).assume_saturated();
    for p in points {
        let pi = LinearSubspace::from_points(ring, &[p.clone()])?;
        if pi.dim() != 0 {
            return Err(Error::InvalidArgument("the zero vector is not a point".into()));
        }
        acc = acc.intersect(&pi.ideal())?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::resolution::regularity;

    fn p(n: usize) -> Ring<PrimeField> {
        Ring::projective(PrimeField::default(), n).unwrap()
    }

    #[test]
    fn lines() {
        let r = p(4);
        let k = linear_curve(&r, &[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]).unwrap();
        assert_eq!(k.ideal().gb().render(), "x4\nx3\nx2\n");
        let l = linear_curve(&r, &[1, 0, 0, 0, 0], &[0, 0, 0, 1, 0]).unwrap();
        assert_eq!(l.ideal().gb().render(), "x4\nx2\nx1\n");
        assert!(linear_curve(&r, &[1, 0, 0, 0, 0], &[1, 0, 0, 0, 0]).is_err());
        assert_eq!(k.xi().unwrap().xi, 2);
    }

    #[test]
    fn twisted_cubic_from_rows() {
        let r = p(4);
        let rows = alloc::vec![
            alloc::vec![1, 0, 0, 0],
            alloc::vec![0, 1, 0, 0],
            alloc::vec![0, 0, 1, 0],
            alloc::vec![0, 0, 0, 1],
            alloc::vec![0, 0, 0, 0],
        ];
        let c = rational_normal_curve(&r, 3, &rows).unwrap();
        let expect = Ideal::parse(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3", "x4"]).unwrap();
        assert!(c.ideal().same_ideal(&expect).unwrap());
        assert_eq!(dim_deg(c.ideal()).unwrap(), (1, 3));
        let bad = alloc::vec![alloc::vec![1, 0, 0, 0]; 5];
        assert!(rational_normal_curve(&r, 3, &bad).is_err());
    }

    #[test]
    fn unions_and_connectivity() {
        let r = p(3);
        let a = linear_curve(&r, &[1, 0, 0, 0], &[0, 1, 0, 0]).unwrap();
        let b = linear_curve(&r, &[1, 0, 0, 0], &[0, 0, 1, 0]).unwrap();
        let u = curve_union(&[&a, &b]).unwrap();
        assert!(u.ideal().same_ideal(&Ideal::parse(&r, &["x3", "x1*x2"]).unwrap()).unwrap());
        assert!(u.is_connected());
        let c = linear_curve(&r, &[0, 0, 1, 0], &[0, 0, 0, 1]).unwrap();
        let skew = curve_union(&[&a, &c]).unwrap();
        assert!(!skew.is_connected());
        assert_eq!(skew.degree().unwrap(), 2);
        assert!(matches!(curve_union(&[&a, &u]), Err(Error::SharedComponent(_))));
    }

    #[test]
    fn trees() {
        let r = p(4);
        let spec = TreeSpec {
            steps: alloc::vec![TreeStep { degree: 1, attach: None }, TreeStep { degree: 2, attach: Some((0, [1, 1])) }],
            seed: None,
        };
        let t = tree(&r, &spec).unwrap();
        assert!(t.is_tree() && t.is_connected());
        assert_eq!(t.xi().unwrap().xi, 2);
        assert_eq!(regularity(t.ideal()).unwrap(), 2);
        let seeded = TreeSpec { seed: Some(3), ..spec };
        assert_eq!(tree(&r, &seeded).unwrap().xi().unwrap().xi, 2);
    }

    #[test]
    fn coplanar_line_and_conic_is_not_a_tree() {
        let r = p(3);
        let line = line_component(&r, &[1, 0, 0, 0], &[0, 1, 0, 0]).unwrap();
        let plane = LinearSubspace::from_forms(&r, &[r.parse("x3").unwrap()]).unwrap();
        let conic = plane_curve_component(&plane, &r.parse("x0*x1 - x2^2").unwrap()).unwrap();
        assert!(line.span().meet(conic.span()).unwrap().dim() >= 1);
        let spec = TreeSpec { steps: alloc::vec![TreeStep { degree: 2, attach: None }, TreeStep { degree: 2, attach: Some((0, [1, 0])) }], seed: None };
        assert!(tree(&r, &spec).is_err());
    }

    #[test]
    fn plane_curves_in_the_fixed_coordinates() {
        let r = p(4);
        let l = LinearSubspace::from_forms(&r, &[r.parse("x3").unwrap(), r.parse("x4").unwrap()]).unwrap();
        let k = plane_curve(&l, &r.parse("x2").unwrap()).unwrap();
        assert!(k.ideal().same_ideal(&Ideal::parse(&r, &["x2", "x3", "x4"]).unwrap()).unwrap());
        assert!(plane_curve(&l, &r.parse("x3").unwrap()).is_err());
    }

    #[test]
    fn no_secant_four() {
        let g = no_secant_curve(PrimeField::default(), 4).unwrap();
        let x = g.curve.xi().unwrap();
        assert_eq!((x.degree, x.span_dim, x.xi), (6, 4, 4));
        assert!(g.curve.is_connected());
        assert!(no_secant_curve(PrimeField::default(), 3).is_err());
    }

    #[test]
    fn twisted_configuration() {
        let t = twisted_config(PrimeField::default()).unwrap();
        let x = t.curve.xi().unwrap();
        assert_eq!((x.degree, x.span_dim, x.xi), (5, 4, 3));
        assert!(t.curve.is_connected());
    }

    #[test]
    fn random_curves_are_connected_and_deterministic() {
        let b = Budget { max_components: 3, max_degree: 6, max_ambient: 5 };
        for seed in 0..4 {
            let a = random_connected_curve(PrimeField::default(), seed, b).unwrap();
            let c = random_connected_curve(PrimeField::default(), seed, b).unwrap();
            assert!(a.curve.is_connected());
            assert!(a.curve.ideal().same_ideal(c.curve.ideal()).unwrap());
            assert!(a.gluing_dims.iter().all(|&d| (0..=2).contains(&d)));
        }
    }
}
