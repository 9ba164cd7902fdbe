//! Ideals and their arithmetic: sum, intersection, quotient, saturation,
//! elimination.

use alloc::vec::Vec;

use once_cell::race::OnceBox;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{buchberger, ReducedGB};
use crate::hilbert::HilbertData;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{Polynomial, Ring};

/// An ideal given by generators, with a write-once cache of its reduced
/// Gröbner basis for the ring's order and of its Hilbert data. Concurrent
/// readers see either no cache or a complete one.
pub struct Ideal<F: Field> {
    ring: Ring<F>,
    gens: Vec<Polynomial<F>>,
    saturated: bool,
    gb: OnceBox<ReducedGB<F>>,
    hilbert: OnceBox<HilbertData>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            saturated: self.saturated,
            gb: self.gb.clone(),
            hilbert: self.hilbert.clone(),
        }
    }
}

impl<F: Field> core::fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&g.render())?;
        }
        f.write_str(")")
    }
}

impl<F: Field> Ideal<F> {
    /// The ideal generated by `gens` (zero generators are dropped). The
    /// generators may come from any ring with the same variables.
    pub fn new(ring: &Ring<F>, gens: Vec<Polynomial<F>>) -> Result<Self> {
        let mut out = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.is_zero() {
                out.push(g.to_ring(ring)?);
            }
        }
        Ok(Self::raw(ring, out))
    }

    fn raw(ring: &Ring<F>, gens: Vec<Polynomial<F>>) -> Self {
        Ideal { ring: ring.clone(), gens, saturated: false, gb: OnceBox::new(), hilbert: OnceBox::new() }
    }

    /// Builds from a reduced basis already known for the ring's order.
    pub(crate) fn from_gb(gb: ReducedGB<F>) -> Self {
        let ring = gb.ring().clone();
        let id = Self::raw(&ring, gb.basis().to_vec());
        let _ = id.gb.set(alloc::boxed::Box::new(gb));
        id
    }

    pub fn parse(ring: &Ring<F>, gens: &[&str]) -> Result<Self> {
        let polys = gens.iter().map(|s| ring.parse(s)).collect::<Result<Vec<_>>>()?;
        Self::new(ring, polys)
    }

    pub fn zero(ring: &Ring<F>) -> Self {
        Self::raw(ring, Vec::new())
    }

    pub fn unit(ring: &Ring<F>) -> Self {
        Self::raw(ring, alloc::vec![ring.one()])
    }

    /// The irrelevant ideal `(x_0, ..., x_n)`.
    pub fn maximal(ring: &Ring<F>) -> Self {
        Self::raw(ring, ring.vars())
    }

    /// Marks the ideal as known to be saturated with respect to the
    /// irrelevant ideal. Callers vouch for the claim (constructions, results
    /// of `saturate`, intersections of saturated ideals).
    pub fn assume_saturated(mut self) -> Self {
        self.saturated = true;
        self
    }

    pub fn is_known_saturated(&self) -> bool {
        self.saturated
    }

    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial<F>] {
        &self.gens
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// The reduced Gröbner basis for the ring's order, computed once.
    pub fn gb(&self) -> &ReducedGB<F> {
        self.gb.get_or_init(|| alloc::boxed::Box::new(buchberger(&self.ring, &self.gens).expect("generators live in the ring")))
    }

    /// Reduced basis for another order on the same variables (not cached).
    pub fn gb_in(&self, order: MonomialOrder) -> ReducedGB<F> {
        if order == *self.ring.order() {
            return self.gb().clone();
        }
        let r = self.ring.with_order(order);
        // a basis for the cached order is usually a smaller starting point
        let start: &[Polynomial<F>] = match self.gb.get() {
            Some(g) => g.basis(),
            None => &self.gens,
        };
        buchberger(&r, start).expect("same variables")
    }

    pub(crate) fn hilbert_cache(&self) -> &OnceBox<HilbertData> {
        &self.hilbert
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gb().is_unit_ideal()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    pub fn require_homogeneous(&self) -> Result<()> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(Error::NotHomogeneous(alloc::format!("{self:?}")))
        }
    }

    /// `ideal_member`.
    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        self.gb().contains(f)
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals (compares reduced bases).
    pub fn same_ideal(&self, other: &Ideal<F>) -> Result<bool> {
        self.ring.check_same(&other.ring)?;
        Ok(self.gb().basis() == other.gb().basis())
    }

    /// Minimal-degree homogeneous piece: generators of degree `d` in the reduced
    /// basis.
    pub fn basis_in_degree(&self, d: u32) -> Vec<Polynomial<F>> {
        self.gb().basis().iter().filter(|g| g.degree() == Some(d)).cloned().collect()
    }

    /// `ideal_sum`.
    pub fn sum(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.ring.check_same(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self::raw(&self.ring, gens))
    }

    pub fn add_gens(&self, extra: &[Polynomial<F>]) -> Result<Ideal<F>> {
        let mut gens = self.gens.clone();
        for g in extra {
            if !g.is_zero() {
                gens.push(g.to_ring(&self.ring)?);
            }
        }
        Ok(Self::raw(&self.ring, gens))
    }

    /// `ideal_intersect`: eliminates an auxiliary variable `t` from
    /// `t*I + (1-t)*J`. The intersection of two ideals marked saturated is
    /// marked saturated.
    pub fn intersect(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.ring.check_same(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let saturated = self.saturated && other.saturated;
        if self.is_unit() {
            return Ok(other.clone());
        }
        if other.is_unit() {
            return Ok(self.clone());
        }
        let n = self.nvars();
        let ext = self.ring.extended("_t", MonomialOrder::eliminating(n + 1, &[n])?)?;
        let map: Vec<usize> = (0..n).collect();
        let t = ext.var(n);
        let one_minus_t = ext.one().sub_unchecked(&t);
        let mut gens = Vec::new();
        for g in self.gb().basis() {
            gens.push(g.remap(&ext, &map).mul_unchecked(&t));
        }
        for g in other.gb().basis() {
            gens.push(g.remap(&ext, &map).mul_unchecked(&one_minus_t));
        }
        let gb = buchberger(&ext, &gens)?;
        let kept = eliminated_part(&gb, &[n], &self.ring, n);
        let mut out = self.with_basis_from_elimination(kept)?;
        out.saturated = saturated;
        Ok(out)
    }

    /// Wraps polynomials that form the reduced basis for the restriction of an
    /// elimination order. That restriction is grevlex on the remaining
    /// variables, so the cache is filled only when the ring order is plain
    /// grevlex.
    fn with_basis_from_elimination(&self, polys: Vec<Polynomial<F>>) -> Result<Ideal<F>> {
        if *self.ring.order() == MonomialOrder::grevlex() {
            let gb = buchberger(&self.ring, &polys)?;
            debug_assert_eq!(gb.basis().len(), polys.len());
            Ok(Self::from_gb(gb))
        } else {
            Self::new(&self.ring, polys)
        }
    }

    /// `(I : f)` for a single polynomial: `(I ∩ (f)) / f`.
    pub fn quotient_poly(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        let f = f.to_ring(&self.ring)?;
        if f.is_zero() {
            return Err(Error::ZeroIdeal("quotient by the zero polynomial".into()));
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        if let Some(v) = as_variable(&f) {
            if self.is_homogeneous() && *self.ring.order() == MonomialOrder::grevlex() {
                return self.quotient_var_power(v, false);
            }
        }
        let principal = Ideal::new(&self.ring, alloc::vec![f.clone()])?;
        let inter = self.intersect(&principal)?;
        let gens: Vec<Polynomial<F>> = inter
            .gb()
            .basis()
            .iter()
            .map(|g| g.exact_div(&f).ok_or_else(|| Error::Internal("intersection element not divisible".into())))
            .collect::<Result<_>>()?;
        Ideal::new(&self.ring, gens)
    }

    /// `ideal_quotient`: `(I : J) = ∩_j (I : g_j)` over generators of `J`.
    pub fn quotient(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        self.ring.check_same(&other.ring)?;
        if other.is_zero() {
            return Err(Error::ZeroIdeal("quotient by the zero ideal".into()));
        }
        let mut acc: Option<Ideal<F>> = None;
        for g in other.gb().basis() {
            let q = self.quotient_poly(g)?;
            acc = Some(match acc {
                None => q,
                Some(a) => a.intersect(&q)?,
            });
        }
        Ok(acc.expect("nonzero ideal has generators"))
    }

    /// `(I : x_v)` or `(I : x_v^∞)` for homogeneous `I` by the divide-out
    /// trick: in grevlex with `x_v` last, `x_v` divides a basis element iff it
    /// divides its leading monomial, and dividing it out yields a basis of the
    /// quotient.
    fn quotient_var_power(&self, v: usize, infinite: bool) -> Result<Ideal<F>> {
        let n = self.nvars();
        let gb = self.gb_in(MonomialOrder::grevlex_with_last(n, v));
        let xv = Monomial::var(n, v);
        let mut changed = false;
        let gens: Vec<Polynomial<F>> = gb
            .basis()
            .iter()
            .map(|g| {
                let mut g = g.clone();
                loop {
                    if g.is_constant() {
                        break;
                    }
                    match g.div_monomial(&xv) {
                        Some(h) => {
                            changed = true;
                            g = h;
                            if !infinite {
                                break;
                            }
                        }
                        None => break,
                    }
                }
                g
            })
            .collect();
        if !changed {
            return Ok(self.clone());
        }
        Ideal::new(&self.ring, gens)
    }

    /// `(I : x_v^∞)`.
    pub fn saturate_var(&self, v: usize) -> Result<Ideal<F>> {
        if self.is_homogeneous() && *self.ring.order() == MonomialOrder::grevlex() {
            return self.quotient_var_power(v, true);
        }
        self.saturate_by_poly(&self.ring.var(v))
    }

    /// `(I : f^∞)` by iterated quotients.
    pub fn saturate_by_poly(&self, f: &Polynomial<F>) -> Result<Ideal<F>> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient_poly(f)?;
            if next.same_ideal(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `saturate`: `(I : J^∞)` by iterating `ideal_quotient` until stable.
    pub fn saturate_by(&self, other: &Ideal<F>) -> Result<Ideal<F>> {
        let mut cur = self.clone();
        loop {
            let next = cur.quotient(other)?;
            if next.same_ideal(&cur)? {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// `saturate` with respect to the irrelevant ideal. Homogeneous inputs use
    /// `I^sat = ∩_j (I : x_j^∞)`, each factor by the divide-out trick; other
    /// inputs fall back to the iterated quotient.
    pub fn saturate(&self) -> Result<Ideal<F>> {
        if self.saturated {
            return Ok(self.clone());
        }
        if !self.is_homogeneous() || *self.ring.order() != MonomialOrder::grevlex() {
            return Ok(self.saturate_by(&Ideal::maximal(&self.ring))?.assume_saturated());
        }
        if self.is_unit() {
            return Ok(Self::unit(&self.ring).assume_saturated());
        }
        let mut acc: Option<Ideal<F>> = None;
        for v in 0..self.nvars() {
            let q = self.saturate_var(v)?;
            if q.is_unit() {
                // (I : x_v^∞) = (1) adds nothing to the intersection
                continue;
            }
            acc = Some(match acc {
                None => q,
                Some(a) => {
                    if q.contains_ideal(&a)? {
                        a
                    } else if a.contains_ideal(&q)? {
                        q
                    } else {
                        a.intersect(&q)?
                    }
                }
            });
        }
        Ok(acc.unwrap_or_else(|| Self::unit(&self.ring)).assume_saturated())
    }

    /// `eliminate`: `I ∩ K[remaining variables]`, as an ideal of the same ring.
    pub fn eliminate(&self, vars: &[usize]) -> Result<Ideal<F>> {
        let n = self.nvars();
        if vars.iter().any(|&v| v >= n) {
            return Err(Error::InvalidArgument(alloc::format!("variables {vars:?} out of range")));
        }
        if vars.is_empty() {
            return Ok(Self::from_gb(self.gb().clone()));
        }
        let r = self.ring.with_order(MonomialOrder::eliminating(n, vars)?);
        let gb = buchberger(&r, &self.gens)?;
        let kept = eliminated_part(&gb, vars, &self.ring, n);
        self.with_basis_from_elimination(kept)
    }
}

/// Basis elements free of `vars`, moved to `target` (the first `n` variables).
fn eliminated_part<F: Field>(gb: &ReducedGB<F>, vars: &[usize], target: &Ring<F>, n: usize) -> Vec<Polynomial<F>> {
    let map: Vec<usize> = (0..gb.ring().nvars()).map(|i| i.min(n.saturating_sub(1))).collect();
    gb.basis()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0)))
        .map(|g| if gb.ring().nvars() == n { g.to_ring(target).expect("same variables") } else { g.remap(target, &map[..]) })
        .collect()
}

fn as_variable<F: Field>(f: &Polynomial<F>) -> Option<usize> {
    if f.len() != 1 {
        return None;
    }
    let (m, _) = &f.terms()[0];
    if m.degree() != 1 {
        return None;
    }
    (0..m.nvars()).find(|&i| m.exp(i) == 1)
}
