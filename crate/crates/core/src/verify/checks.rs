use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{Builder, CheckReport, Relation};
use crate::curves::{curve_union, Curve};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{check_linear_section_bound, component_in, is_extremal_secant, LinearSubspace, SubspaceChart};
use crate::hilbert::{dim_deg, hilbert_polynomial, saturation_degree_with};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::resolution::{find_extremal_line_planar, hilbert_burch_degrees, min_free_resolution, rational_points, regularity, regularity_crosscheck, ModuleKind};

use Relation::*;

fn reg_or_zero<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    if ideal.is_unit() {
        Ok(0)
    } else {
        regularity(ideal)
    }
}

fn saturated<F: Field>(ideal: &Ideal<F>) -> Result<Ideal<F>> {
    if ideal.is_known_saturated() {
        Ok(ideal.clone())
    } else {
        ideal.saturate()
    }
}

/// A line `Λ' ⊂ Λ` with `deg(Λ' ∩ X)` maximal among the candidates the
/// planar extraction produces, for a scheme `X` inside the 2-plane `Λ`.
pub fn planar_extremal_line<F: Field>(x: &Ideal<F>, plane: &LinearSubspace<F>) -> Result<Option<(LinearSubspace<F>, &'static str)>> {
    if plane.dim() != 2 {
        return Err(Error::InvalidArgument(alloc::format!("expected a 2-plane, got dimension {}", plane.dim())));
    }
    let chart = SubspaceChart::new(plane)?;
    let local = chart.restrict(x)?;
    if local.is_zero() {
        return Ok(None);
    }
    match find_extremal_line_planar(&local)? {
        Some(l) => Ok(Some((chart.subspace_of(&[l.form])?, l.method))),
        None => Ok(None),
    }
}

/// `check_main_theorem`: `reg(I_C) <= Ξ(C)` for a connected curve.
pub fn check_main_theorem<F: Field>(instance: &str, c: &Curve<F>) -> Result<CheckReport> {
    let mut b = Builder::new("main_theorem", instance);
    b.ideal("I_C", c.ideal());
    b.q("components", c.components().len());
    if !c.is_connected() {
        return Ok(b.inapplicable("curve is not connected"));
    }
    let x = c.xi()?;
    let reg = regularity(c.ideal())?;
    let comp_deg: i64 = c.components().iter().map(|k| k.degree()).sum();
    b.q("degree", x.degree);
    b.q("span_dim", x.span_dim);
    b.q("xi", x.xi);
    b.q("reg", reg);
    b.q("maximal", reg == x.xi);
    b.rel("reg(I_C) <= xi(C)", reg, Le, x.xi);
    b.rel("xi(C) >= 2", x.xi, Ge, 2);
    b.rel("deg(C) = sum of component degrees", x.degree, Eq, comp_deg);
    Ok(b.finish())
}

/// `check_caviglia`: for `dim S/(I+J) <= 1`, `reg(I+J) <= reg I + reg J - 1`
/// and `reg(I ∩ J) <= reg I + reg J`.
pub fn check_caviglia<F: Field>(instance: &str, i: &Ideal<F>, j: &Ideal<F>) -> Result<CheckReport> {
    let mut b = Builder::new("caviglia", instance);
    b.ideal("I", i);
    b.ideal("J", j);
    for (name, id) in [("I", i), ("J", j)] {
        if id.is_zero() || id.is_unit() {
            return Err(Error::InvalidArgument(alloc::format!("{name} must be a nonzero proper ideal")));
        }
    }
    let sum = i.sum(j)?;
    let krull = dim_deg(&sum)?.0 + 1;
    b.q("krull_dim_sum", krull);
    if krull > 1 {
        return Ok(b.inapplicable("dim S/(I+J) > 1"));
    }
    let (ri, rj) = (regularity(i)?, regularity(j)?);
    let rs = reg_or_zero(&sum)?;
    let rc = regularity(&i.intersect(j)?)?;
    b.q("reg_i", ri);
    b.q("reg_j", rj);
    b.q("reg_sum", rs);
    b.q("reg_intersection", rc);
    b.rel("reg(I+J) <= reg(I) + reg(J) - 1", rs, Le, ri + rj - 1);
    b.rel("reg(I∩J) <= reg(I) + reg(J)", rc, Le, ri + rj);
    Ok(b.finish())
}

/// `check_intadd`: `deg(X ∪ Y) = deg X + deg Y - deg(X ∩ Y)` for finite
/// schemes, with the union as ideal intersection and the intersection as
/// the saturated sum.
pub fn check_intadd<F: Field>(instance: &str, x: &Ideal<F>, y: &Ideal<F>) -> Result<CheckReport> {
    let mut b = Builder::new("intadd", instance);
    b.ideal("I_X", x);
    b.ideal("I_Y", y);
    let (dx, gx) = dim_deg(x)?;
    let (dy, gy) = dim_deg(y)?;
    if dx > 0 || dy > 0 {
        return Err(Error::InvalidArgument("both schemes must be finite".into()));
    }
    let gu = dim_deg(&x.intersect(y)?)?.1;
    let gc = dim_deg(&x.sum(y)?.saturate()?)?.1;
    b.q("deg_x", gx);
    b.q("deg_y", gy);
    b.q("deg_union", gu);
    b.q("deg_intersection", gc);
    b.rel("deg(X∪Y) = deg X + deg Y - deg(X∩Y)", gu, Eq, gx + gy - gc);
    Ok(b.finish())
}

/// `check_xi_sum`: `Ξ(C∪D) = Ξ(C) + Ξ(D) + dim(Span C ∩ Span D) - 2`.
pub fn check_xi_sum<F: Field>(instance: &str, c: &Curve<F>, d: &Curve<F>) -> Result<CheckReport> {
    let mut b = Builder::new("xi_sum", instance);
    b.ideal("I_C", c.ideal());
    b.ideal("I_D", d.ideal());
    let u = curve_union(&[c, d])?;
    let meet = c.span()?.meet(&d.span()?)?.dim();
    let (xc, xd, xu) = (c.xi()?, d.xi()?, u.xi()?);
    b.q("xi_c", xc.xi);
    b.q("xi_d", xd.xi);
    b.q("xi_union", xu.xi);
    b.q("span_meet_dim", meet);
    b.q("deg_union", xu.degree);
    b.rel("xi(C∪D) = xi(C) + xi(D) + dim(Span C ∩ Span D) - 2", xu.xi, Eq, xc.xi + xd.xi + meet - 2);
    b.rel("deg(C∪D) = deg C + deg D", xu.degree, Eq, xc.degree + xd.degree);
    Ok(b.finish())
}

/// `check_mincur`: on a connected curve, tree ⇒ `Ξ = 2` ⇒ `reg <= 2`, and
/// `reg <= 2` ⇒ `Ξ = 2`. Trees are recognized by their construction tag.
pub fn check_mincur<F: Field>(instance: &str, c: &Curve<F>) -> Result<CheckReport> {
    let mut b = Builder::new("mincur", instance);
    b.ideal("I_C", c.ideal());
    if !c.is_connected() {
        return Ok(b.inapplicable("curve is not connected"));
    }
    let x = c.xi()?;
    let reg = regularity(c.ideal())?;
    let tree = c.is_tree();
    let line = c.components().len() == 1 && x.degree == 1;
    b.q("tree", tree);
    b.q("xi", x.xi);
    b.q("reg", reg);
    b.q("line", line);
    b.implies("tree => xi = 2", tree, x.xi == 2);
    b.implies("xi = 2 => reg <= 2", x.xi == 2, reg <= 2);
    b.implies("reg <= 2 => xi = 2", reg <= 2, x.xi == 2);
    b.implies("reg = 1 => C is a line", reg == 1, line);
    Ok(b.finish())
}

/// Regularity and `Ξ` of a curve, and whether they agree.
struct RegXi {
    xi: i64,
    degree: i64,
    reg: i64,
}

impl RegXi {
    fn of<F: Field>(c: &Curve<F>) -> Result<Self> {
        let x = c.xi()?;
        Ok(RegXi { xi: x.xi, degree: x.degree, reg: regularity(c.ideal())? })
    }

    fn maximal(&self) -> bool {
        self.reg == self.xi
    }
}

/// `check_structure_props`: the structure statements for a union `C ∪ D`
/// of intersecting connected curves, dispatched on
/// `d = dim(Span C ∩ Span D)`.
///
/// Trees are recognized by `Ξ = 2`, which characterizes them among
/// connected curves.
pub fn check_structure_props<F: Field>(instance: &str, c: &Curve<F>, d: &Curve<F>) -> Result<CheckReport> {
    let mut b = Builder::new("structure_props", instance);
    b.ideal("I_C", c.ideal());
    b.ideal("I_D", d.ideal());
    if !c.is_connected() || !d.is_connected() {
        return Ok(b.inapplicable("C and D must be connected"));
    }
    let (cap_dim, cap_deg) = dim_deg(&c.ideal().sum(d.ideal())?)?;
    if cap_dim < 0 {
        return Ok(b.inapplicable("C and D do not meet"));
    }
    let u = match curve_union(&[c, d]) {
        Ok(u) => u,
        Err(Error::SharedComponent(m)) => return Ok(b.inapplicable(&alloc::format!("shared component: {m}"))),
        Err(e) => return Err(e),
    };
    let lam = c.span()?.meet(&d.span()?)?;
    let dim = lam.dim();
    let (rc, rd, ru) = (RegXi::of(c)?, RegXi::of(d)?, RegXi::of(&u)?);
    b.input("span_meet", lam.render());
    b.q("span_meet_dim", dim);
    b.q("deg_intersection", cap_deg);
    b.q("xi_c", rc.xi);
    b.q("xi_d", rd.xi);
    b.q("xi_union", ru.xi);
    b.q("reg_c", rc.reg);
    b.q("reg_d", rd.reg);
    b.q("reg_union", ru.reg);
    b.q("maximal", ru.maximal());
    b.implies("C∪D maximal => dim(Span C ∩ Span D) <= 2", ru.maximal(), dim <= 2);
    let is_line = |r: &RegXi, k: &Curve<F>| k.components().len() == 1 && r.degree == 1;

    match dim {
        0 => {
            b.q("case", "disjoint spans");
            let (sc, (sd, big)) = if rc.xi <= rd.xi { (&rc, (&rd, d)) } else { (&rd, (&rc, c)) };
            let rhs = sc.xi == 2 && (is_line(sd, big) || sd.maximal());
            b.iff("C∪D maximal <=> C is a tree and D is a line or maximal", ru.maximal(), rhs);
            b.note("C is the part with the smaller xi");
        }
        1 => {
            let (lc, ld) = (component_in(c, &lam)?.is_some(), component_in(d, &lam)?.is_some());
            if !lc && !ld {
                b.q("case", "line meet outside the curve");
                if rc.xi == 2 || rd.xi == 2 {
                    return Ok(b.inapplicable("C or D is a tree (xi = 2)"));
                }
                let ext = is_extremal_secant(&u, &lam)?;
                b.q("meet_line_secant_degree", ext.secant_degree.unwrap_or(-1));
                b.iff("C∪D maximal <=> Span C ∩ Span D is an extremal secant", ru.maximal(), ext.extremal);
                if ru.maximal() {
                    let (ec, ed) = (is_extremal_secant(c, &lam)?, is_extremal_secant(d, &lam)?);
                    b.holds("maximal => deg(C∩D) = 1", cap_deg == 1);
                    b.holds("maximal => the meet line is extremal for C", ec.extremal);
                    b.holds("maximal => the meet line is extremal for D", ed.extremal);
                }
            } else {
                b.q("case", "line meet inside the curve");
                let (rt, (rother, other)) = if lc { (&rc, (&rd, d)) } else { (&rd, (&rc, c)) };
                let pts = lam.points();
                let line = crate::curves::linear_curve(c.ring(), &pts[0], &pts[1])?;
                let ld_curve = curve_union(&[&line, other])?;
                let rld = RegXi::of(&ld_curve)?;
                b.q("xi_line_union", rld.xi);
                b.q("reg_line_union", rld.reg);
                b.iff("C∪D maximal <=> C is a tree and L∪D is maximal", ru.maximal(), rt.xi == 2 && rld.maximal());
                b.implies("L∪D maximal => D maximal", rld.maximal(), rother.maximal());
                b.note("C is the part containing the line L = Span C ∩ Span D");
            }
        }
        2 => {
            let inside = |k: &Curve<F>| -> Result<usize> {
                let li = lam.ideal();
                let mut n = 0;
                for comp in k.components() {
                    if comp.ideal().contains_ideal(&li)? {
                        n += 1;
                    }
                }
                Ok(n)
            };
            let (nc, nd) = (inside(c)?, inside(d)?);
            let li = lam.ideal();
            let section = if nc == 0 && nd == 0 {
                b.q("case", "plane meet, no component inside");
                c.ideal().sum(&li)?.intersect(&d.ideal().sum(&li)?)?.saturate()?
            } else if nc == 0 && nd == d.components().len() {
                b.q("case", "plane meet, D inside");
                c.ideal().sum(&li)?.intersect(d.ideal())?.saturate()?
            } else if nd == 0 && nc == c.components().len() {
                b.q("case", "plane meet, C inside");
                d.ideal().sum(&li)?.intersect(c.ideal())?.saturate()?
            } else {
                return Ok(b.inapplicable("components of the curves lie partly inside the span intersection"));
            };
            let found = planar_extremal_line(&section, &lam)?;
            let mut extremal = false;
            if let Some((line, method)) = &found {
                let ext = is_extremal_secant(&u, line)?;
                b.input("candidate_line", line.render());
                b.q("candidate_method", *method);
                b.q("candidate_secant_degree", ext.secant_degree.unwrap_or(-1));
                extremal = ext.extremal;
            }
            b.iff("C∪D maximal <=> an extremal secant line in the span intersection is found", ru.maximal(), extremal);
        }
        _ => {
            b.q("case", "span meet of dimension >= 3");
        }
    }
    Ok(b.finish())
}

/// Every split of the components into two nonempty connected parts, as
/// index sets `(part, complement)` with the first component in `part`.
fn connected_splits<F: Field>(c: &Curve<F>) -> Result<Vec<(Curve<F>, Curve<F>)>> {
    let k = c.components().len();
    let mut out = Vec::new();
    if k < 2 || k > 12 {
        return Ok(out);
    }
    for mask in 1u32..(1 << k) - 1 {
        if mask & 1 == 0 {
            continue;
        }
        let a: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
        let bb: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 0).collect();
        let (ca, cb) = (c.subcurve(&a)?, c.subcurve(&bb)?);
        if ca.is_connected() && cb.is_connected() {
            out.push((ca, cb));
        }
    }
    Ok(out)
}

/// `check_p3_theorem`: a connected curve in `P^3` without linear components
/// has maximal regularity only if `Ξ = 3` or an extremal secant line
/// exists. The line is searched for through the span intersections of the
/// connected splits and through planar extraction on `samples` seeded
/// hyperplane sections. When the curve is maximal every connected part of
/// a split is checked to be a line or maximal.
pub fn check_p3_theorem<F: Field>(instance: &str, c: &Curve<F>, seed: u64, samples: usize) -> Result<CheckReport> {
    let mut b = Builder::new("p3_theorem", instance).seed(Some(seed));
    b.ideal("I_C", c.ideal());
    if c.ring().nvars() != 4 {
        return Err(Error::InvalidArgument("the curve must lie in P^3".into()));
    }
    if c.has_linear_component() {
        return Ok(b.inapplicable("curve has a linear component"));
    }
    if !c.is_connected() {
        return Ok(b.inapplicable("curve is not connected"));
    }
    let r = RegXi::of(c)?;
    b.q("xi", r.xi);
    b.q("reg", r.reg);
    b.q("maximal", r.maximal());
    b.rel("reg <= xi", r.reg, Le, r.xi);
    if !r.maximal() {
        b.q("branch", "not maximal");
        return Ok(b.finish());
    }
    if r.xi == 3 {
        b.q("branch", "xi = 3");
    } else {
        b.q("branch", "extremal secant search");
        let mut candidates: Vec<(LinearSubspace<F>, String)> = Vec::new();
        let span = c.span()?;
        let splits = connected_splits(c)?;
        if span.dim() == 2 {
            let chart = SubspaceChart::new(&span)?;
            let u = chart.local_ring();
            for v in 0..3 {
                let line = chart.subspace_of(&[u.var(v)])?;
                candidates.push((line, "line in the plane of C".into()));
            }
        } else {
            for (pa, pb) in &splits {
                let lam = pa.span()?.meet(&pb.span()?)?;
                match lam.dim() {
                    1 => candidates.push((lam, "span intersection of a split".into())),
                    2 => {
                        let li = lam.ideal();
                        let x = pa.ideal().sum(&li)?.intersect(&pb.ideal().sum(&li)?)?.saturate()?;
                        if let Some((line, m)) = planar_extremal_line(&x, &lam)? {
                            candidates.push((line, alloc::format!("split plane: {m}")));
                        }
                    }
                    _ => {}
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = c.ring().field();
            let mut on_curve: Vec<Vec<F::Elem>> = Vec::new();
            for comp in c.components() {
                for _ in 0..3 {
                    if let Some(p) = comp.point_at(&f.random(&mut rng), &f.random(&mut rng)) {
                        if p.iter().any(|a| !f.is_zero(a)) {
                            on_curve.push(p);
                        }
                    }
                }
            }
            for i in 0..on_curve.len() {
                for j in i + 1..on_curve.len() {
                    if let Ok(chord) = LinearSubspace::line(c.ring(), &on_curve[i], &on_curve[j]) {
                        candidates.push((chord, "chord through sampled points".into()));
                    }
                }
            }
            let whole = LinearSubspace::whole(c.ring());
            let mut tries = 0;
            let mut taken = 0;
            while taken < samples && tries < 4 * samples + 4 {
                tries += 1;
                let h = if on_curve.len() >= 3 && tries % 2 == 1 {
                    let k = on_curve.len();
                    let idx = [(tries / 2) % k, (tries / 2 + 1) % k, (tries / 2 + 2) % k];
                    LinearSubspace::from_points(c.ring(), &idx.map(|i| on_curve[i].clone()))?
                } else {
                    whole.random_subspace(2, &mut rng)?
                };
                if h.dim() != 2 {
                    continue;
                }
                if component_in(c, &h)?.is_some() {
                    continue;
                }
                taken += 1;
                let z = c.ideal().add_gens(&h.forms())?.saturate()?;
                if let Some((line, m)) = planar_extremal_line(&z, &h)? {
                    candidates.push((line, alloc::format!("hyperplane section: {m}")));
                }
            }
        }
        let mut found = None;
        for (line, how) in &candidates {
            let ext = is_extremal_secant(c, line)?;
            if ext.extremal {
                found = Some((line.render(), how.clone(), ext.secant_degree.unwrap_or(-1)));
                break;
            }
        }
        b.q("candidates", candidates.len());
        if let Some((line, how, deg)) = &found {
            b.input("extremal_line", line.clone());
            b.q("extremal_line_method", how.clone());
            b.q("extremal_line_degree", *deg);
        }
        b.holds("maximal and xi != 3 => an extremal secant line is found", found.is_some());
    }
    let splits = connected_splits(c)?;
    let mut bad = 0i64;
    let mut parts = 0i64;
    for (pa, pb) in &splits {
        for p in [pa, pb] {
            parts += 1;
            let rp = RegXi::of(p)?;
            let line = p.components().len() == 1 && rp.degree == 1;
            if !(line || rp.maximal()) {
                bad += 1;
            }
        }
    }
    b.q("split_parts_checked", parts);
    b.rel("connected parts of a maximal curve that are neither lines nor maximal", bad, Eq, 0);
    Ok(b.finish())
}

/// Lines through pairs of rational points of a finite scheme in `P^2` and
/// the largest secant degree among them; `None` over an infinite field or
/// with fewer than two points.
fn best_pair_line<F: Field>(sat: &Ideal<F>) -> Result<Option<i64>> {
    if sat.ring().field().size().is_none() {
        return Ok(None);
    }
    let pts = rational_points(sat)?;
    if pts.len() < 2 {
        return Ok(None);
    }
    let f = sat.ring().field();
    let mut best = 0;
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let (p, q) = (&pts[i], &pts[j]);
            let c = |a: usize, b: usize| f.sub(&f.mul(&p[a], &q[b]), &f.mul(&p[b], &q[a]));
            let l = sat.ring().linear_form(&[c(1, 2), c(2, 0), c(0, 1)])?;
            let (dim, deg) = dim_deg(&sat.add_gens(&[l])?)?;
            if dim == 0 {
                best = best.max(deg);
            }
        }
    }
    Ok(Some(best))
}

/// `check_finite_in_plane` for a finite scheme `X ⊂ P^2` of degree `d`:
/// `reg X <= d`; `reg X = d` ⇒ `X` collinear; `reg X = d - 1`, `d != 4` ⇒
/// a line meeting `X` in degree `d - 1` is found.
pub fn check_finite_in_plane<F: Field>(instance: &str, ideal: &Ideal<F>) -> Result<CheckReport> {
    let mut b = Builder::new("finite_in_plane", instance);
    b.ideal("I_X", ideal);
    if ideal.nvars() != 3 {
        return Err(Error::InvalidArgument("expected an ideal of P^2".into()));
    }
    let sat = saturated(ideal)?;
    let (dim, d) = dim_deg(&sat)?;
    if dim != 0 {
        return Err(Error::InvalidArgument(alloc::format!("not a nonempty finite scheme (dimension {dim})")));
    }
    let reg = regularity(&sat)?;
    let collinear = !sat.basis_in_degree(1).is_empty();
    let line = find_extremal_line_planar(&sat)?;
    let line_deg = line.as_ref().map(|l| l.secant_degree).unwrap_or(-1);
    b.q("degree", d);
    b.q("reg", reg);
    b.q("collinear", collinear);
    b.q("line_secant_degree", line_deg);
    if let Some(l) = &line {
        b.input("line", l.form.render());
        b.q("line_method", l.method);
    }
    if let Some(best) = best_pair_line(&sat)? {
        b.q("best_pair_line_degree", best);
    }
    b.rel("reg(X) <= deg(X)", reg, Le, d);
    b.implies("reg = d => X is collinear", reg == d, collinear);
    b.implies("reg = d - 1 and d != 4 => a (d-1)-secant line is found", reg == d - 1 && d != 4, line_deg == d - 1);
    Ok(b.finish())
}

/// `check_hilbert_burch`: the diagonal-degree identities of the
/// Hilbert–Burch resolution of `S/I` for `I ⊂ K[x0, x1, x2]`, with
/// `d_curve` the degree of the curve part (0 for finite schemes).
pub fn check_hilbert_burch<F: Field>(instance: &str, ideal: &Ideal<F>, d_curve: i64) -> Result<CheckReport> {
    let mut b = Builder::new("hilbert_burch", instance);
    b.ideal("I", ideal);
    b.input("d_curve", d_curve.to_string());
    if ideal.nvars() != 3 {
        return Err(Error::InvalidArgument("expected an ideal of P^2".into()));
    }
    let sat = saturated(ideal)?;
    let table = min_free_resolution(&sat, ModuleKind::Quotient)?.betti_table();
    let dd = hilbert_burch_degrees(&table, d_curve)?;
    let reg = regularity(&sat)?;
    let (dim, deg) = dim_deg(&sat)?;
    b.q("a", dd.a.clone());
    b.q("b", dd.b.clone());
    b.q("e", dd.e.clone());
    b.q("f", dd.f.clone());
    b.q("diagonal_sum", dd.diagonal_sum);
    b.q("reg", reg);
    b.q("degree", deg);
    for f in &dd.failures {
        b.note(f.clone());
    }
    b.rel("failed diagonal-degree identities", dd.failures.len() as i64, Eq, 0);
    b.rel("reg(I) = max(a_1, b_1 - 1)", reg, Eq, dd.regularity);
    let (e, f) = (&dd.e, &dd.f);
    for i in 0..e.len() {
        b.rel(&alloc::format!("e_{} >= 1", i + 1), e[i], Ge, 1);
        b.rel(&alloc::format!("f_{} >= e_{}", i + 1, i + 1), f[i], Ge, e[i]);
        if i + 1 < e.len() {
            b.rel(&alloc::format!("f_{} >= e_{}", i + 1, i + 2), f[i], Ge, e[i + 1]);
        }
    }
    if d_curve == 0 {
        b.rel("dim X = 0", dim, Eq, 0);
        b.rel("deg X = sum_{i<=j} e_i f_j", deg, Eq, dd.diagonal_sum);
    } else {
        let hp = hilbert_polynomial(&sat)?;
        let dc = d_curve;
        for s in 0..4 {
            let want = dc * s + 1 - (dc - 1) * (dc - 2) / 2 + dd.diagonal_sum;
            let got = hp.eval(s);
            b.rel(&alloc::format!("HP({s}) = d*{s} + 1 - (d-1)(d-2)/2 + sum e_i f_j"), *got.numer(), Eq, want * *got.denom());
        }
    }
    Ok(b.finish())
}

/// `check_not_so_finite` for a plane curve `D = V(form)` and a finite
/// scheme `Y` in `P^2`: `reg(D ∪ Y) <= d + deg Y - deg(D ∩ Y)`; with
/// equality and `deg(D ∩ Y) = 1` a line meeting `D ∪ Y` in degree
/// `d + deg Y - 1` is found.
pub fn check_not_so_finite<F: Field>(instance: &str, form: &Polynomial<F>, y: &Ideal<F>) -> Result<CheckReport> {
    let mut b = Builder::new("not_so_finite", instance);
    let ring = y.ring();
    b.input("D", form.render());
    b.ideal("I_Y", y);
    if ring.nvars() != 3 {
        return Err(Error::InvalidArgument("expected P^2".into()));
    }
    let d = form.degree().filter(|&k| k > 0 && form.is_homogeneous()).ok_or_else(|| Error::InvalidArgument("D needs a nonconstant form".into()))? as i64;
    let dd = Ideal::new(ring, alloc::vec![form.clone()])?;
    let ysat = saturated(y)?;
    let (ydim, ydeg) = dim_deg(&ysat)?;
    if ydim > 0 {
        return Err(Error::InvalidArgument("Y must be finite".into()));
    }
    let cap = dim_deg(&dd.sum(&ysat)?.saturate()?)?.1;
    let x = dd.intersect(&ysat)?.saturate()?;
    let reg = regularity(&x)?;
    let bound = d + ydeg - cap;
    b.q("d", d);
    b.q("deg_y", ydeg);
    b.q("deg_intersection", cap);
    b.q("reg", reg);
    b.rel("reg(D∪Y) <= d + deg Y - deg(D∩Y)", reg, Le, bound);
    if reg == bound && cap == 1 {
        let line = find_extremal_line_planar(&x)?;
        let ld = line.as_ref().map(|l| l.secant_degree).unwrap_or(-1);
        if let Some(l) = &line {
            b.input("line", l.form.render());
        }
        b.q("line_secant_degree", ld);
        b.rel("equality with deg(D∩Y) = 1 => a line meets D∪Y in d + deg Y - 1", ld, Eq, d + ydeg - 1);
    }
    Ok(b.finish())
}

/// `reg(I) = max(reg(I^sat), sat(I))`, with `reg((1)) := 0`.
pub fn check_regularity_from_saturation<F: Field>(instance: &str, ideal: &Ideal<F>) -> Result<CheckReport> {
    let mut b = Builder::new("regularity_from_saturation", instance);
    b.ideal("I", ideal);
    let reg = regularity(ideal)?;
    let sat = ideal.saturate()?;
    let reg_sat = reg_or_zero(&sat)?;
    let sdeg = saturation_degree_with(ideal, &sat)?;
    b.q("reg", reg);
    b.q("reg_saturation", reg_sat);
    b.q("saturation_degree", sdeg);
    let cross = regularity_crosscheck(ideal)?;
    b.q("saturated_to_unit", sat.is_unit());
    b.q("crosscheck", cross);
    b.rel("reg(I) = max(reg(I^sat), sat(I))", reg, Eq, reg_sat.max(sdeg));
    b.rel("reg(I) = regularity_crosscheck(I)", reg, Eq, cross);
    Ok(b.finish())
}

/// `sat(I ∩ J) <= max(sat I, sat J)`.
pub fn check_saturation_of_intersection<F: Field>(instance: &str, i: &Ideal<F>, j: &Ideal<F>) -> Result<CheckReport> {
    let mut b = Builder::new("saturation_of_intersection", instance);
    b.ideal("I", i);
    b.ideal("J", j);
    let sd = |k: &Ideal<F>| -> Result<i64> { saturation_degree_with(k, &k.saturate()?) };
    let (si, sj) = (sd(i)?, sd(j)?);
    let sc = sd(&i.intersect(j)?)?;
    b.q("sat_i", si);
    b.q("sat_j", sj);
    b.q("sat_intersection", sc);
    b.rel("sat(I∩J) <= max(sat I, sat J)", sc, Le, si.max(sj));
    Ok(b.finish())
}

/// `check_linear_section_bound` as a report: `deg(C ∩ Λ) <= deg C - n + 1 +
/// dim Λ` and nondegenerate hyperplane sections.
pub fn check_linear_section<F: Field>(instance: &str, c: &Curve<F>, lambda: &LinearSubspace<F>, samples: usize, seed: u64) -> Result<CheckReport> {
    let mut b = Builder::new("linear_section", instance).seed(Some(seed));
    b.ideal("I_C", c.ideal());
    b.input("subspace", lambda.render());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let r = check_linear_section_bound(c, lambda, samples, &mut rng)?;
    let nondeg = r.hyperplane_sections_nondegenerate.iter().filter(|&&x| x).count();
    b.q("subspace_dim", r.subspace_dim);
    b.q("degree", r.degree);
    b.q("bound", r.bound);
    b.q("hyperplanes", r.hyperplane_sections_nondegenerate.len());
    b.rel("deg(C∩Λ) <= deg C - n + 1 + dim Λ", r.degree, Le, r.bound);
    b.rel("nondegenerate hyperplane sections", nondeg as i64, Eq, r.hyperplane_sections_nondegenerate.len() as i64);
    Ok(b.finish())
}
