use alloc::string::String;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Builder, CheckReport, Relation};
use crate::curves::{no_secant_curve, twisted_config, Curve, NoSecantCurve};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::geometry::{is_extremal_secant, LinearSubspace};
use crate::hilbert::dim_deg;
use crate::monomial::Monomial;
use crate::resolution::{min_free_resolution, regularity, ModuleKind};

use Relation::*;

/// Tally of secant degrees over a family of test lines.
#[derive(Default)]
struct Tally {
    tested: i64,
    max: i64,
    min: i64,
    extremal: i64,
    worst: Option<String>,
}

impl Tally {
    fn add(&mut self, deg: i64, extremal: bool, line: &str) {
        if self.tested == 0 || deg > self.max {
            self.max = deg;
            self.worst = Some(line.into());
        }
        if self.tested == 0 || deg < self.min {
            self.min = deg;
        }
        self.tested += 1;
        self.extremal += extremal as i64;
    }
}

/// Secant degree and extremality of `lambda` for `c`, with `-1` when the
/// intersection is not finite.
fn secant<F: Field>(c: &Curve<F>, lambda: &LinearSubspace<F>) -> Result<(i64, bool)> {
    let e = is_extremal_secant(c, lambda)?;
    Ok((e.secant_degree.unwrap_or(-1), e.extremal))
}

/// Points on the pieces of the construction, parametrized by `[s:t]`.
fn piece_point<F: Field>(f: &F, piece: usize, s: &F::Elem, t: &F::Elem) -> Vec<F::Elem> {
    let z = f.zero();
    let (ss, st, tt) = (f.mul(s, s), f.mul(s, t), f.mul(t, t));
    match piece {
        0 => alloc::vec![s.clone(), t.clone(), z.clone(), z.clone(), z],
        1 => alloc::vec![z.clone(), ss, st, tt, z],
        2 => alloc::vec![ss, z.clone(), st, z, tt],
        _ => {
            let w = f.sub(&f.zero(), &f.add(s, t));
            alloc::vec![s.clone(), t.clone(), w, z.clone(), z]
        }
    }
}

fn piece_name(piece: usize) -> &'static str {
    ["K", "F", "G", "E"][piece]
}

fn random_nonzero<F: Field>(f: &F, rng: &mut dyn RngCore) -> F::Elem {
    loop {
        let a = f.random(rng);
        if !f.is_zero(&a) {
            return a;
        }
    }
}

/// Forms of degree `<= m - 1` in `I_C`, restricted to `L = V(x3, x4)`, are
/// divisible by `x2^2`. Returns the number of Gröbner basis elements that
/// violate this.
fn double_line_violations<F: Field>(g: &NoSecantCurve<F>) -> Result<i64> {
    let ring = g.curve.ring();
    let mut images = ring.vars();
    images[3] = ring.zero();
    images[4] = ring.zero();
    let x2sq = Monomial::from_exponents(&[0, 0, 2, 0, 0])?;
    let mut bad = 0;
    for p in g.curve.ideal().gb().basis() {
        if p.degree().map_or(true, |d| d as usize >= g.m) {
            continue;
        }
        let r = p.substitute(&images)?;
        if r.terms().iter().any(|(mono, _)| !x2sq.divides(mono)) {
            bad += 1;
        }
    }
    Ok(bad)
}

/// `check_construction`: the basic invariants of the degree-`(m+2)` curve
/// in `P^4`, the secant degrees of its special lines and of `lines` sampled
/// lines, the absence of extremal secant lines and 2-planes, and the
/// hyperplane sections used to bound its regularity.
pub fn check_construction<F: Field>(field: F, m: usize, seed: u64, lines: usize) -> Result<CheckReport> {
    let g = no_secant_curve(field, m)?;
    let c = &g.curve;
    let ring = c.ring().clone();
    let f = ring.field().clone();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mi = m as i64;
    let mut b = Builder::new("construction", &alloc::format!("no_secant m={m}")).seed(Some(seed));
    b.ideal("I_C", c.ideal());

    let x = c.xi()?;
    let table = min_free_resolution(c.ideal(), ModuleKind::Ideal)?.betti_table();
    let reg = table.regularity();
    let beta = table.get(0, mi) as i64;
    b.q("degree", x.degree);
    b.q("span_dim", x.span_dim);
    b.q("xi", x.xi);
    b.q("reg", reg);
    b.q("beta_0_m", beta);
    b.input("betti", table.render());
    b.rel("deg C = m + 2", x.degree, Eq, mi + 2);
    b.rel("C spans P^4", x.span_dim, Eq, 4);
    b.rel("xi(C) = m", x.xi, Eq, mi);
    b.rel("reg(I_C) = m", reg, Eq, mi);
    b.rel("a minimal generator of degree m", beta, Ge, 1);
    b.rel("low-degree generators restricted to L divisible by x2^2 (violations)", double_line_violations(&g)?, Eq, 0);

    let v = |xs: [i64; 5]| -> Vec<F::Elem> { xs.iter().map(|&a| f.from_i64(a)).collect() };
    let mut extremal_lines = 0;
    let h_p = LinearSubspace::line(&ring, &v([0, 1, 0, 0, 0]), &v([0, 0, 1, 0, 0]))?;
    let (d, e) = secant(c, &h_p)?;
    extremal_lines += e as i64;
    b.rel("deg(C ∩ line(P, e2)) = m - 1", d, Eq, mi - 1);
    let generic = LinearSubspace::from_forms(&ring, &[ring.parse("x3")?, ring.parse("x4")?, ring.parse("x2 - x0 - 2*x1")?])?;
    let (d, e) = secant(c, &generic)?;
    extremal_lines += e as i64;
    b.rel("deg(C ∩ V(x3, x4, x2 - x0 - 2x1)) = m - 2", d, Eq, mi - 2);
    let (_, e) = secant(c, &g.k)?;
    extremal_lines += e as i64;

    let per_family = 5;
    let (mut through_p, mut off_pq, mut in_mn) = (Tally::default(), Tally::default(), Tally::default());
    let mut guard = 0;
    while (through_p.tested < per_family || off_pq.tested < per_family) && guard < 200 {
        guard += 1;
        let a = g.l.random_point(&mut rng);
        let line = match LinearSubspace::line(&ring, &g.p, &a) {
            Ok(l) if l.dim() == 1 && l != g.k => l,
            _ => continue,
        };
        if through_p.tested < per_family {
            let (d, e) = secant(c, &line)?;
            through_p.add(d, e, &line.render());
        }
        let other = LinearSubspace::line(&ring, &a, &g.l.random_point(&mut rng))?;
        if other.dim() == 1 && !other.contains_point(&g.p) && !other.contains_point(&g.q) && off_pq.tested < per_family {
            let (d, e) = secant(c, &other)?;
            off_pq.add(d, e, &other.render());
        }
    }
    guard = 0;
    while in_mn.tested < 2 * per_family && guard < 200 {
        guard += 1;
        let plane = if in_mn.tested % 2 == 0 { &g.mm } else { &g.n };
        let line = plane.random_subspace(1, &mut rng)?;
        if g.l.contains(&line) {
            continue;
        }
        let (d, e) = secant(c, &line)?;
        in_mn.add(d, e, &line.render());
    }
    for (t, name) in [(&through_p, "lines in L through P"), (&off_pq, "lines in L avoiding P and Q"), (&in_mn, "lines in M or N")] {
        b.q(&alloc::format!("{name}: tested"), t.tested);
        extremal_lines += t.extremal;
    }
    b.rel("lines in L through P: sampled count", through_p.tested, Eq, per_family);
    b.rel("lines in L through P: min secant degree = m - 1", through_p.min, Eq, mi - 1);
    b.rel("lines in L through P: max secant degree = m - 1", through_p.max, Eq, mi - 1);
    b.rel("lines in L avoiding P and Q: sampled count", off_pq.tested, Eq, per_family);
    b.rel("lines in L avoiding P and Q: min secant degree = m - 2", off_pq.min, Eq, mi - 2);
    b.rel("lines in L avoiding P and Q: max secant degree = m - 2", off_pq.max, Eq, mi - 2);
    b.rel("lines in M or N off L: secant degree <= 3", in_mn.max, Le, 3);

    let pieces = if m == 4 { 4 } else { 3 };
    let whole = LinearSubspace::whole(&ring);
    let mut off = Tally::default();
    guard = 0;
    while (off.tested as usize) < lines && guard < 20 * lines + 20 {
        guard += 1;
        let line = if off.tested % 2 == 0 {
            let i = (rng.next_u32() as usize) % pieces;
            let j = (i + 1 + (rng.next_u32() as usize) % (pieces - 1)) % pieces;
            let p = piece_point(&f, i, &random_nonzero(&f, &mut rng), &random_nonzero(&f, &mut rng));
            let q = piece_point(&f, j, &random_nonzero(&f, &mut rng), &random_nonzero(&f, &mut rng));
            match LinearSubspace::line(&ring, &p, &q) {
                Ok(l) if l.dim() == 1 => l,
                _ => continue,
            }
        } else {
            whole.random_subspace(1, &mut rng)?
        };
        if g.l.contains(&line) || g.mm.contains(&line) || g.n.contains(&line) {
            continue;
        }
        let (d, e) = secant(c, &line)?;
        off.add(d, e, &line.render());
    }
    extremal_lines += off.extremal;
    b.q("lines off L, M, N: tested", off.tested);
    b.q("lines off L, M, N: max secant degree", off.max);
    if let Some(w) = &off.worst {
        b.input("lines off L, M, N: worst line", w.clone());
    }
    b.rel("lines off L, M, N: sampled count", off.tested, Eq, lines as i64);
    b.rel("lines off L, M, N: secant degree <= 3", off.max, Le, 3);
    b.rel("extremal secant lines found", extremal_lines, Eq, 0);

    let mut planes = Tally::default();
    guard = 0;
    while planes.tested < 3 && guard < 50 {
        guard += 1;
        let pts: Vec<Vec<F::Elem>> = (0..3).map(|i| piece_point(&f, i, &random_nonzero(&f, &mut rng), &random_nonzero(&f, &mut rng))).collect();
        let plane = LinearSubspace::from_points(&ring, &pts)?;
        if plane.dim() != 2 {
            continue;
        }
        let (d, e) = secant(c, &plane)?;
        if d < 0 {
            continue;
        }
        planes.add(d, e, &plane.render());
    }
    b.q("2-planes through K, F, G: tested", planes.tested);
    b.rel("2-planes through K, F, G: degree <= xi + 1", planes.max, Le, x.xi + 1);
    b.rel("2-planes through K, F, G: extremal", planes.extremal, Eq, 0);
    b.note(alloc::format!("pieces used for chords: {}", (0..pieces).map(piece_name).collect::<Vec<_>>().join(", ")));

    let efk = c.subcurve_by_labels(&["E", "F", "K"])?;
    let gi = c.component("G").ok_or_else(|| Error::Internal("missing G".into()))?.ideal().clone();
    let x4 = ring.var(4);
    let mut hyper = 0;
    guard = 0;
    while hyper < 2 && guard < 50 {
        guard += 1;
        let coeffs: Vec<F::Elem> = (0..5).map(|_| f.random(&mut rng)).collect();
        if f.is_zero(&coeffs[0]) {
            continue;
        }
        let h = ring.linear_form(&coeffs)?;
        let hs = core::slice::from_ref(&h);
        hyper += 1;
        let tag = |s: &str| alloc::format!("hyperplane {hyper}: {s}");
        let xs = efk.ideal().add_gens(hs)?.saturate()?;
        let ys = gi.add_gens(hs)?.saturate()?;
        let (_, deg_x) = dim_deg(&xs)?;
        let (_, deg_y) = dim_deg(&ys)?;
        let y_on_o = dim_deg(&ys.add_gens(core::slice::from_ref(&x4))?)?.0;
        let union = xs.intersect(&ys)?;
        let section = c.ideal().add_gens(hs)?.saturate()?;
        let (reg_x, reg_u) = (regularity(&xs)?, regularity(&union)?);
        b.input(&tag("h"), h.render());
        b.holds(&tag("X lies in O = H ∩ V(x4)"), xs.contains(&x4)?);
        b.rel(&tag("deg X >= 2"), deg_x, Ge, 2);
        b.rel(&tag("deg Y = 2"), deg_y, Eq, 2);
        b.rel(&tag("Y ∩ O is empty (dimension)"), y_on_o, Eq, -1);
        b.rel(&tag("reg(X ∪ Y) <= reg X"), reg_u, Le, reg_x);
        b.holds(&tag("X ∪ Y = C ∩ H"), union.same_ideal(&section)?);
        let o = LinearSubspace::from_forms(&ring, &[h.clone(), x4.clone()])?;
        let hh = LinearSubspace::from_forms(&ring, hs)?;
        b.holds(&tag("O is not extremal"), !secant(c, &o)?.1);
        b.holds(&tag("H is not extremal"), !secant(c, &hh)?.1);
    }
    Ok(b.finish())
}

/// `check_twisted_config`: the conic-plus-twisted-cubic union has
/// `Ξ = reg = 3`, `L` is an extremal 3-secant and `M` a non-extremal
/// 2-secant.
pub fn check_twisted_config<F: Field>(field: F) -> Result<CheckReport> {
    let t = twisted_config(field)?;
    let mut b = Builder::new("twisted_config", "conic + twisted cubic");
    b.ideal("I_C", t.curve.ideal());
    let x = t.curve.xi()?;
    let reg = regularity(t.curve.ideal())?;
    let el = is_extremal_secant(&t.curve, &t.l)?;
    let em = is_extremal_secant(&t.curve, &t.m)?;
    let meet = t.conic.span()?.meet(&t.cubic.span()?)?;
    b.q("xi", x.xi);
    b.q("reg", reg);
    b.q("span_meet_dim", meet.dim());
    b.rel("xi = 3", x.xi, Eq, 3);
    b.rel("reg = 3", reg, Eq, 3);
    b.rel("deg(C ∩ L) = 3", el.secant_degree.unwrap_or(-1), Eq, 3);
    b.holds("L is an extremal secant", el.extremal);
    b.rel("deg(C ∩ M) = 2", em.secant_degree.unwrap_or(-1), Eq, 2);
    b.holds("M is not an extremal secant", !em.extremal);
    b.holds("Span(conic) ∩ Span(cubic) = M", meet == t.m);
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;

    #[test]
    fn points_lie_on_their_pieces() {
        let g = no_secant_curve(PrimeField::default(), 4).unwrap();
        let f = PrimeField::default();
        for piece in 0..4 {
            let p = piece_point(&f, piece, &3, &5);
            let comp = g.curve.component(piece_name(piece)).unwrap();
            for gen in comp.ideal().gens() {
                assert!(f.is_zero(&gen.eval(&p).unwrap()), "{}", piece_name(piece));
            }
        }
    }

    #[test]
    fn twisted_config_passes() {
        let r = check_twisted_config(PrimeField::default()).unwrap();
        assert_eq!(r.verdict, super::super::Verdict::Pass, "{r:#?}");
    }
}
