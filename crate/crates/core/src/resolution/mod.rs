//! Minimal graded free resolutions, Betti tables and regularity.
//!
//! A (usually non-minimal) resolution of `S/I` is built level by level with
//! Schreyer's construction: the S-pairs of a Gröbner basis, reduced to zero
//! with recorded quotients, are a Gröbner basis of the syzygy module for the
//! induced order. Constant entries are then pivoted away, from the last map
//! backwards, to reach the minimal resolution.

mod betti;
mod planar;

pub use betti::BettiTable;
pub use planar::{find_extremal_line_planar, hilbert_burch_degrees, poly_gcd, rational_points, DiagonalDegrees, ExtremalLine};

use alloc::vec::Vec;
use core::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::hilbert::saturation_degree_with;
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

/// Which module a resolution resolves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ModuleKind {
    /// `S/I`, with `F_0 = S`.
    Quotient,
    /// `I` itself, with `F_0` mapping onto the minimal generators.
    Ideal,
}

/// A homogeneous matrix over `S`, stored by columns as sparse `(row, entry)`
/// lists sorted by row.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedMatrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    pub columns: Vec<Vec<(usize, Polynomial<F>)>>,
}

impl<F: Field> GradedMatrix<F> {
    pub fn entry(&self, r: usize, c: usize) -> Option<&Polynomial<F>> {
        self.columns[c].iter().find(|(i, _)| *i == r).map(|(_, p)| p)
    }

    /// `self * other`, or `None` on a shape mismatch.
    pub fn compose(&self, other: &GradedMatrix<F>, ring: &Ring<F>) -> Option<GradedMatrix<F>> {
        if self.cols != other.rows {
            return None;
        }
        let columns = other
            .columns
            .iter()
            .map(|col| {
                let mut acc: Vec<Polynomial<F>> = alloc::vec![ring.zero(); self.rows];
                for (k, b) in col {
                    for (r, a) in &self.columns[*k] {
                        acc[*r] = acc[*r].add_unchecked(&a.mul_unchecked(b));
                    }
                }
                acc.into_iter().enumerate().filter(|(_, p)| !p.is_zero()).collect()
            })
            .collect();
        Some(GradedMatrix { rows: self.rows, cols: other.cols, columns })
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_empty())
    }
}

/// A graded free resolution `0 <- M <- F_0 <- F_1 <- ... <- F_L`.
#[derive(Clone, Debug)]
pub struct Resolution<F: Field> {
    ring: Ring<F>,
    kind: ModuleKind,
    /// `degrees[i]` lists the twists `a` of the summands `S(-a)` of `F_i`.
    degrees: Vec<Vec<i64>>,
    /// `maps[i]: F_{i+1} -> F_i`.
    maps: Vec<GradedMatrix<F>>,
}

impl<F: Field> Resolution<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn kind(&self) -> ModuleKind {
        self.kind
    }

    pub fn degrees(&self) -> &[Vec<i64>] {
        &self.degrees
    }

    pub fn maps(&self) -> &[GradedMatrix<F>] {
        &self.maps
    }

    pub fn length(&self) -> usize {
        self.degrees.len().saturating_sub(1)
    }

    /// `betti_table`.
    pub fn betti_table(&self) -> BettiTable {
        BettiTable::from_degrees(&self.degrees)
    }

    /// Consecutive maps compose to zero.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[0].compose(&w[1], &self.ring).is_some_and(|m| m.is_zero()))
    }

    /// No entry of any map is a nonzero constant.
    pub fn is_minimal(&self) -> bool {
        self.maps.iter().all(|m| m.columns.iter().all(|c| c.iter().all(|(_, p)| !p.is_constant())))
    }
}

#[derive(Clone)]
struct MTerm<E> {
    comp: u32,
    mono: Monomial,
    total: Monomial,
    coeff: E,
}

/// Schreyer order: compare total monomials, then smaller component index
/// wins.
#[inline]
fn mcmp<E>(order: &MonomialOrder, a: &MTerm<E>, b: &MTerm<E>) -> Ordering {
    order.cmp(&a.total, &b.total).then_with(|| b.comp.cmp(&a.comp))
}

/// `a + s * q * b` for module vectors sorted descending.
fn madd<F: Field>(field: &F, order: &MonomialOrder, a: &[MTerm<F::Elem>], s: &F::Elem, q: &Monomial, b: &[MTerm<F::Elem>]) -> Vec<MTerm<F::Elem>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let scaled = |t: &MTerm<F::Elem>| MTerm { comp: t.comp, mono: t.mono.mul(q), total: t.total.mul(q), coeff: field.mul(s, &t.coeff) };
    while i < a.len() && j < b.len() {
        let bj = scaled(&b[j]);
        match mcmp(order, &a[i], &bj) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push(bj);
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].coeff, &bj.coeff);
                if !field.is_zero(&c) {
                    out.push(MTerm { coeff: c, ..bj });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push(scaled(t));
    }
    out
}

/// One level of the frame: generators of a submodule of the previous free
/// module, forming a Gröbner basis for the Schreyer order there.
struct Level<E> {
    elems: Vec<Vec<MTerm<E>>>,
}

impl<E> Level<E> {
    fn lead(&self, k: usize) -> &MTerm<E> {
        &self.elems[k][0]
    }
}

/// Puts generators in the order Schreyer's termination argument needs:
/// grouped by leading component, and within a group by descending lex order
/// of the leading monomial.
fn sort_level<E>(elems: &mut [Vec<MTerm<E>>]) {
    let lex = MonomialOrder::lex();
    elems.sort_by(|a, b| a[0].comp.cmp(&b[0].comp).then_with(|| lex.cmp(&b[0].mono, &a[0].mono)));
}

/// Builds the next level from the S-pairs of `prev`, each pair pruned to the
/// minimal generators of the colon ideals of leading monomials.
fn next_level<F: Field>(field: &F, order: &MonomialOrder, prev: &Level<F::Elem>, prev_comps: usize) -> Result<Level<F::Elem>> {
    let r = prev.elems.len();
    let mut by_comp: Vec<Vec<usize>> = alloc::vec![Vec::new(); prev_comps];
    for k in 0..r {
        by_comp[prev.lead(k).comp as usize].push(k);
    }
    let totals: Vec<Monomial> = (0..r).map(|k| prev.lead(k).total).collect();
    let mut out = Vec::new();
    for i in 0..r {
        let li = prev.lead(i);
        let mut quots: Vec<(Monomial, usize)> = by_comp[li.comp as usize]
            .iter()
            .filter(|&&j| j > i)
            .map(|&j| (li.mono.lcm(&prev.lead(j).mono).checked_div(&li.mono).expect("lcm"), j))
            .collect();
        quots.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then(a.1.cmp(&b.1)));
        let mut minimal: Vec<(Monomial, usize)> = Vec::new();
        for (q, j) in quots {
            if !minimal.iter().any(|(m, _)| m.divides(&q)) {
                minimal.push((q, j));
            }
        }
        for (qi, j) in minimal {
            let lj = prev.lead(j);
            let qj = lj.mono.quotient_of(&li.mono.mul(&qi));
            // s = qi * v_i - qj * v_j (both monic)
            let a = madd(field, order, &[], &field.one(), &qi, &prev.elems[i][1..]);
            let mut s = madd(field, order, &a, &field.neg(&field.one()), &qj, &prev.elems[j][1..]);
            let mut syz: Vec<MTerm<F::Elem>> = alloc::vec![
                MTerm { comp: i as u32, mono: qi, total: qi.mul(&totals[i]), coeff: field.one() },
                MTerm { comp: j as u32, mono: qj, total: qj.mul(&totals[j]), coeff: field.neg(&field.one()) },
            ];
            while let Some(t) = s.first() {
                let reducer = by_comp[t.comp as usize].iter().copied().find(|&k| prev.lead(k).mono.divides(&t.mono));
                let Some(k) = reducer else {
                    return Err(Error::Internal("S-pair does not reduce to zero; input is not a Gröbner basis".into()));
                };
                let q = prev.lead(k).mono.quotient_of(&t.mono);
                let c = t.coeff.clone();
                s = madd(field, order, &s[1..], &field.neg(&c), &q, &prev.elems[k][1..]);
                syz.push(MTerm { comp: k as u32, mono: q, total: q.mul(&totals[k]), coeff: field.neg(&c) });
            }
            syz.sort_by(|a, b| mcmp(order, b, a));
            let mut merged: Vec<MTerm<F::Elem>> = Vec::with_capacity(syz.len());
            for t in syz {
                match merged.last_mut() {
                    Some(l) if l.comp == t.comp && l.mono == t.mono => l.coeff = field.add(&l.coeff, &t.coeff),
                    _ => merged.push(t),
                }
            }
            merged.retain(|t| !field.is_zero(&t.coeff));
            debug_assert!(merged[0].comp == i as u32 && merged[0].mono == qi, "Schreyer leading term");
            out.push(merged);
        }
    }
    sort_level(&mut out);
    Ok(Level { elems: out })
}

/// Mutable resolution data used during minimalization.
struct Frame<F: Field> {
    /// degrees of F_0..F_L
    degrees: Vec<Vec<i64>>,
    alive: Vec<Vec<bool>>,
    /// maps[l]: F_{l+1} -> F_l, by columns
    maps: Vec<Vec<Vec<(usize, Polynomial<F>)>>>,
}

impl<F: Field> Frame<F> {
    fn find_unit(&self, l: usize) -> Option<(usize, usize)> {
        for (c, col) in self.maps[l].iter().enumerate() {
            if !self.alive[l + 1][c] {
                continue;
            }
            for (r, p) in col {
                if self.alive[l][*r] && p.is_constant() {
                    return Some((*r, c));
                }
            }
        }
        None
    }

    /// Splits off the summand pair `F_{l+1}[c] -> F_l[r]` joined by a unit.
    fn pivot(&mut self, field: &F, l: usize, r: usize, c: usize) {
        let pivot_col = core::mem::take(&mut self.maps[l][c]);
        let u = pivot_col.iter().find(|(i, _)| *i == r).expect("pivot entry").1.terms()[0].1.clone();
        let uinv = field.inv(&u);
        for (cc, col) in self.maps[l].iter_mut().enumerate() {
            if cc == c || !self.alive[l + 1][cc] {
                continue;
            }
            let Some(pos) = col.iter().position(|(i, _)| *i == r) else { continue };
            let factor = col[pos].1.scale(&uinv);
            // col -= factor * pivot_col
            let mut merged: Vec<(usize, Polynomial<F>)> = Vec::with_capacity(col.len() + pivot_col.len());
            let (mut a, mut b) = (0, 0);
            let old = core::mem::take(col);
            while a < old.len() || b < pivot_col.len() {
                let ra = old.get(a).map(|t| t.0).unwrap_or(usize::MAX);
                let rb = pivot_col.get(b).map(|t| t.0).unwrap_or(usize::MAX);
                match ra.cmp(&rb) {
                    Ordering::Less => {
                        merged.push(old[a].clone());
                        a += 1;
                    }
                    Ordering::Greater => {
                        merged.push((rb, factor.mul_unchecked(&pivot_col[b].1).neg()));
                        b += 1;
                    }
                    Ordering::Equal => {
                        let v = old[a].1.sub_unchecked(&factor.mul_unchecked(&pivot_col[b].1));
                        if !v.is_zero() {
                            merged.push((ra, v));
                        }
                        a += 1;
                        b += 1;
                    }
                }
            }
            merged.retain(|(i, _)| *i != r);
            *col = merged;
        }
        self.alive[l + 1][c] = false;
        self.alive[l][r] = false;
        for col in self.maps[l].iter_mut() {
            col.retain(|(i, _)| *i != r);
        }
        if l + 1 < self.maps.len() {
            for col in self.maps[l + 1].iter_mut() {
                col.retain(|(i, _)| *i != c);
            }
        }
        if l > 0 {
            self.maps[l - 1][r].clear();
        }
    }

    fn minimalize(&mut self, field: &F) {
        for l in (0..self.maps.len()).rev() {
            while let Some((r, c)) = self.find_unit(l) {
                self.pivot(field, l, r, c);
            }
        }
    }

    /// Drops dead summands and sorts each free module by degree.
    fn compact(self, ring: &Ring<F>, kind: ModuleKind) -> Resolution<F> {
        let levels = self.degrees.len();
        // new index for each alive summand, sorted by (degree, old index)
        let mut perm: Vec<Vec<Option<usize>>> = Vec::with_capacity(levels);
        let mut degrees: Vec<Vec<i64>> = Vec::with_capacity(levels);
        for l in 0..levels {
            let mut idx: Vec<usize> = (0..self.degrees[l].len()).filter(|&k| self.alive[l][k]).collect();
            idx.sort_by_key(|&k| (self.degrees[l][k], k));
            let mut p = alloc::vec![None; self.degrees[l].len()];
            for (new, &old) in idx.iter().enumerate() {
                p[old] = Some(new);
            }
            degrees.push(idx.iter().map(|&k| self.degrees[l][k]).collect());
            perm.push(p);
        }
        let mut maps = Vec::new();
        for (l, cols) in self.maps.into_iter().enumerate() {
            let mut new_cols: Vec<Vec<(usize, Polynomial<F>)>> = alloc::vec![Vec::new(); degrees[l + 1].len()];
            for (c, col) in cols.into_iter().enumerate() {
                if let Some(nc) = perm[l + 1][c] {
                    let mut v: Vec<(usize, Polynomial<F>)> =
                        col.into_iter().filter_map(|(r, p)| perm[l][r].map(|nr| (nr, p))).collect();
                    v.sort_by_key(|t| t.0);
                    new_cols[nc] = v;
                }
            }
            maps.push(GradedMatrix { rows: degrees[l].len(), cols: degrees[l + 1].len(), columns: new_cols });
        }
        while degrees.len() > 1 && degrees.last().is_some_and(|d| d.is_empty()) {
            degrees.pop();
            maps.pop();
        }
        let (degrees, maps) = match kind {
            ModuleKind::Quotient => (degrees, maps),
            ModuleKind::Ideal => {
                let mut d = degrees;
                d.remove(0);
                let mut m = maps;
                if !m.is_empty() {
                    m.remove(0);
                }
                (d, m)
            }
        };
        Resolution { ring: ring.clone(), kind, degrees, maps }
    }
}

/// `min_free_resolution` of `S/I` or of `I`, for a proper homogeneous ideal.
pub fn min_free_resolution<F: Field>(ideal: &Ideal<F>, kind: ModuleKind) -> Result<Resolution<F>> {
    ideal.require_homogeneous()?;
    if ideal.is_unit() {
        return Err(Error::UnitIdeal("resolution of S/(1)".into()));
    }
    let ring = ideal.ring().clone();
    let grevlex_ring = ring.with_order(MonomialOrder::grevlex());
    let gb = ideal.gb_in(MonomialOrder::grevlex());
    let field = ring.field();
    let order = *grevlex_ring.order();

    let mut levels: Vec<Level<F::Elem>> = Vec::new();
    let mut first: Vec<Vec<MTerm<F::Elem>>> = gb
        .basis()
        .iter()
        .map(|g| g.terms().iter().map(|(m, c)| MTerm { comp: 0, mono: *m, total: *m, coeff: c.clone() }).collect())
        .collect();
    sort_level(&mut first);
    if !first.is_empty() {
        levels.push(Level { elems: first });
    }
    while let Some(last) = levels.last() {
        let comps = if levels.len() == 1 { 1 } else { levels[levels.len() - 2].elems.len() };
        let next = next_level(field, &order, last, comps)?;
        if next.elems.is_empty() {
            break;
        }
        if levels.len() > ring.nvars() + 1 {
            return Err(Error::Internal("resolution longer than the number of variables".into()));
        }
        levels.push(next);
    }

    let mut degrees: Vec<Vec<i64>> = alloc::vec![alloc::vec![0]];
    let mut maps = Vec::new();
    for level in &levels {
        degrees.push(level.elems.iter().map(|v| v[0].total.degree() as i64).collect());
        let cols = level
            .elems
            .iter()
            .map(|v| {
                let mut by_row: Vec<(usize, Vec<(Monomial, F::Elem)>)> = Vec::new();
                for t in v {
                    match by_row.iter_mut().find(|(r, _)| *r == t.comp as usize) {
                        Some((_, ts)) => ts.push((t.mono, t.coeff.clone())),
                        None => by_row.push((t.comp as usize, alloc::vec![(t.mono, t.coeff.clone())])),
                    }
                }
                let mut col: Vec<(usize, Polynomial<F>)> =
                    by_row.into_iter().map(|(r, ts)| (r, grevlex_ring.from_terms(ts).to_ring(&ring).expect("same variables"))).collect();
                col.sort_by_key(|t| t.0);
                col
            })
            .collect();
        maps.push(cols);
    }
    let alive = degrees.iter().map(|d| alloc::vec![true; d.len()]).collect();
    let mut frame = Frame { degrees, alive, maps };
    frame.minimalize(field);
    Ok(frame.compact(&ring, kind))
}

/// `regularity_of_quotient`: `reg(S/I)`.
pub fn regularity_of_quotient<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal("regularity of the zero ideal".into()));
    }
    let res = min_free_resolution(ideal, ModuleKind::Quotient)?;
    Ok(res.betti_table().regularity())
}

/// `regularity`: `reg(I) = reg(S/I) + 1` for a nonzero proper ideal.
pub fn regularity<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    Ok(regularity_of_quotient(ideal)? + 1)
}

/// `regularity_crosscheck`: `max(reg(I^sat), sat(I))`, with `reg((1)) := 0`
/// when `I` saturates to the unit ideal.
pub fn regularity_crosscheck<F: Field>(ideal: &Ideal<F>) -> Result<i64> {
    let sat = ideal.saturate()?;
    let reg_sat = if sat.is_unit() { 0 } else { regularity(&sat)? };
    let s = saturation_degree_with(ideal, &sat)?;
    Ok(reg_sat.max(s))
}

/// Minimal generators of a homogeneous ideal (the columns of the first map of
/// its minimal resolution), sorted by degree.
pub fn minimal_generators<F: Field>(ideal: &Ideal<F>) -> Result<Vec<Polynomial<F>>> {
    if ideal.is_zero() {
        return Ok(Vec::new());
    }
    let res = min_free_resolution(ideal, ModuleKind::Quotient)?;
    Ok(res.maps.first().map(|m| m.columns.iter().map(|c| c[0].1.clone()).collect()).unwrap_or_default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::hilbert::hilbert_series;

    fn ring(n: usize) -> Ring<PrimeField> {
        Ring::new(PrimeField::default(), n).unwrap()
    }

    fn id(r: &Ring<PrimeField>, gens: &[&str]) -> Ideal<PrimeField> {
        Ideal::parse(r, gens).unwrap()
    }

    fn check(i: &Ideal<PrimeField>) -> Resolution<PrimeField> {
        let res = min_free_resolution(i, ModuleKind::Quotient).unwrap();
        assert!(res.is_complex());
        assert!(res.is_minimal());
        let mut num = res.betti_table().alternating_numerator();
        let mut h = hilbert_series(i).unwrap().numerator.clone();
        while num.last() == Some(&0) {
            num.pop();
        }
        while h.last() == Some(&0) {
            h.pop();
        }
        assert_eq!(num, h);
        res
    }

    #[test]
    fn koszul_of_two_variables() {
        let r = ring(4);
        let res = check(&id(&r, &["x2", "x3"]));
        assert_eq!(res.degrees(), &[alloc::vec![0], alloc::vec![1, 1], alloc::vec![2]]);
        let b = res.betti_table();
        assert_eq!((b.get(1, 1), b.get(2, 2)), (2, 1));
    }

    #[test]
    fn twisted_cubic_betti() {
        let r = ring(4);
        let i = id(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        let b = check(&i).betti_table();
        assert_eq!((b.get(0, 0), b.get(1, 2), b.get(2, 3)), (1, 3, 2));
        assert_eq!(regularity(&i).unwrap(), 2);
    }

    #[test]
    fn conic_complete_intersection() {
        let r = ring(3);
        let i = id(&r, &["x0^2 - x1*x2", "x1^2 - x0*x2 + x2^2"]);
        let res = check(&i);
        assert_eq!(res.degrees(), &[alloc::vec![0], alloc::vec![2, 2], alloc::vec![4]]);
    }

    #[test]
    fn regularity_examples() {
        let r = ring(5);
        assert_eq!(regularity(&id(&r, &["x2", "x3", "x4"])).unwrap(), 1);
        let r2 = ring(2);
        let i = id(&r2, &["x0^2", "x0*x1"]);
        let res = check(&i);
        assert_eq!(res.degrees(), &[alloc::vec![0], alloc::vec![2, 2], alloc::vec![3]]);
        assert_eq!(regularity(&i).unwrap(), 2);
        assert_eq!(regularity_crosscheck(&i).unwrap(), 2);
        let m2 = id(&r2, &["x0^2", "x0*x1", "x1^2"]);
        assert_eq!(regularity(&m2).unwrap(), 2);
        assert_eq!(regularity_crosscheck(&m2).unwrap(), 2);
        assert!(matches!(regularity(&Ideal::zero(&r2)), Err(Error::ZeroIdeal(_))));
        assert!(matches!(regularity(&Ideal::unit(&r2)), Err(Error::UnitIdeal(_))));
    }

    #[test]
    fn ideal_module_shift() {
        let r = ring(4);
        let i = id(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        let res = min_free_resolution(&i, ModuleKind::Ideal).unwrap();
        let b = res.betti_table();
        assert_eq!((b.get(0, 2), b.get(1, 3)), (3, 2));
        assert_eq!(b.regularity(), 2);
    }

    #[test]
    fn non_minimal_frames_are_pruned() {
        // grevlex basis has more elements than minimal generators here
        let r = ring(4);
        let i = id(&r, &["x0*x1 - x2*x3", "x0^2 - x3^2", "x1^3"]);
        let res = check(&i);
        let mingens = minimal_generators(&i).unwrap();
        assert_eq!(mingens.len(), res.degrees()[1].len());
        let gb = i.gb().basis().len();
        assert!(gb >= mingens.len());
    }
}
