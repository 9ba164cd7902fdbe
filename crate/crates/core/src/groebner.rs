//! Buchberger's algorithm, normal forms and membership.
//!
//! Pairs are selected by the normal strategy (smallest sugar, then smallest lcm)
//! and pruned with the Gebauer–Möller criteria. The result is always the
//! reduced basis: monic, fully tail-reduced, sorted by ascending leading
//! monomial.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Result;
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{add_scaled, Polynomial, Ring, Term};

/// The reduced Gröbner basis of an ideal for the order of `ring`. An empty
/// basis is the zero ideal; the basis `[1]` is the unit ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct ReducedGB<F: Field> {
    ring: Ring<F>,
    basis: Vec<Polynomial<F>>,
}

impl<F: Field> ReducedGB<F> {
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        self.ring.order()
    }

    /// Basis elements, ascending by leading monomial.
    pub fn basis(&self) -> &[Polynomial<F>] {
        &self.basis
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.basis.len() == 1 && self.basis[0].is_constant()
    }

    pub fn lead_monomials(&self) -> Vec<Monomial> {
        self.basis.iter().map(|g| *g.lead_monomial().expect("nonzero basis element")).collect()
    }

    /// `normal_form`: the unique remainder of `f` modulo the basis.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        let f = f.to_ring(&self.ring)?;
        let refs: Vec<&[Term<F::Elem>]> = self.basis.iter().map(|g| g.terms()).collect();
        let r = reduce_full(self.ring.field(), self.ring.order(), f.terms().to_vec(), &refs);
        Ok(self.ring.from_sorted(r))
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Canonical text, one basis element per line.
    pub fn render(&self) -> alloc::string::String {
        let mut s = alloc::string::String::new();
        for g in &self.basis {
            s.push_str(&g.render());
            s.push('\n');
        }
        s
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Elem<E> {
    terms: Vec<Term<E>>,
    lm: Monomial,
    sugar: u32,
}

/// `buchberger`: the reduced Gröbner basis of the ideal generated by `gens`
/// with respect to the order of `ring`. Generators may live in any ring with
/// the same variables; they are re-sorted. An empty (or all-zero) generator
/// list gives the zero ideal, not an error.
pub fn buchberger<F: Field>(ring: &Ring<F>, gens: &[Polynomial<F>]) -> Result<ReducedGB<F>> {
    let field = ring.field();
    let order = ring.order();
    let mut input: Vec<Vec<Term<F::Elem>>> = Vec::new();
    for g in gens {
        let g = g.to_ring(ring)?;
        if g.is_zero() {
            continue;
        }
        if g.is_constant() {
            return Ok(ReducedGB { ring: ring.clone(), basis: alloc::vec![ring.one()] });
        }
        input.push(make_monic(field, g.terms().to_vec()));
    }
    // Small generators first keeps early reductions cheap and the run
    // deterministic regardless of caller ordering quirks.
    input.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0).then(a.len().cmp(&b.len())));

    let mut elems: Vec<Elem<F::Elem>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    for terms in input {
        let refs: Vec<&[Term<F::Elem>]> =
            elems.iter().zip(&active).filter(|(_, a)| **a).map(|(e, _)| e.terms.as_slice()).collect();
        let r = reduce_full(field, order, terms, &refs);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(ReducedGB { ring: ring.clone(), basis: alloc::vec![ring.one()] });
        }
        let sugar = r.iter().map(|t| t.0.degree()).max().unwrap_or(0);
        insert(&mut elems, &mut active, &mut pairs, make_monic(field, r), sugar);
    }

    while !pairs.is_empty() {
        // normal strategy with sugar
        let mut best = 0;
        for k in 1..pairs.len() {
            let (a, b) = (&pairs[k], &pairs[best]);
            let c = a.sugar.cmp(&b.sugar).then_with(|| order.cmp(&a.lcm, &b.lcm)).then((a.i, a.j).cmp(&(b.i, b.j)));
            if c == Ordering::Less {
                best = k;
            }
        }
        let p = pairs.swap_remove(best);
        let s = spoly(field, order, &elems[p.i], &elems[p.j], &p.lcm);
        let refs: Vec<&[Term<F::Elem>]> = elems.iter().map(|e| e.terms.as_slice()).collect();
        let r = reduce_top(field, order, s, &refs);
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(ReducedGB { ring: ring.clone(), basis: alloc::vec![ring.one()] });
        }
        insert(&mut elems, &mut active, &mut pairs, make_monic(field, r), p.sugar);
    }

    let mut basis: Vec<Vec<Term<F::Elem>>> =
        elems.into_iter().zip(active).filter(|(_, a)| *a).map(|(e, _)| e.terms).collect();
    interreduce(field, order, &mut basis);
    Ok(ReducedGB { ring: ring.clone(), basis: basis.into_iter().map(|t| ring.from_sorted(t)).collect() })
}

/// Adds `h` to the basis, updating the pair set with the Gebauer–Möller
/// criteria.
fn insert<E: Clone>(elems: &mut Vec<Elem<E>>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>, terms: Vec<Term<E>>, sugar: u32) {
    let h = elems.len();
    let lh = terms[0].0;
    let new: Vec<Pair> = (0..h)
        .filter(|&g| active[g])
        .map(|g| {
            let lcm = elems[g].lm.lcm(&lh);
            let s = (elems[g].sugar + lcm.degree() - elems[g].lm.degree()).max(sugar + lcm.degree() - lh.degree());
            Pair { i: g, j: h, lcm, sugar: s }
        })
        .collect();

    // chain criterion on the new pairs: drop (g,h) when another new pair's lcm
    // properly divides its lcm; among pairs with equal lcm keep at most one,
    // and none if any of them is coprime.
    let coprime: Vec<bool> = new.iter().map(|p| elems[p.i].lm.is_coprime(&lh)).collect();
    let mut keep = alloc::vec![true; new.len()];
    for a in 0..new.len() {
        for b in 0..new.len() {
            if a == b {
                continue;
            }
            let (la, lb) = (&new[a].lcm, &new[b].lcm);
            if lb.divides(la) && (lb != la || coprime[b] || (b < a && !coprime[a])) {
                keep[a] = false;
                break;
            }
        }
    }
    // old pairs made redundant by h
    pairs.retain(|p| {
        !(lh.divides(&p.lcm) && elems[p.i].lm.lcm(&lh) != p.lcm && elems[p.j].lm.lcm(&lh) != p.lcm)
    });
    // product criterion
    for ((p, k), c) in new.into_iter().zip(keep).zip(coprime) {
        if k && !c {
            pairs.push(p);
        }
    }
    for g in 0..h {
        if active[g] && lh.divides(&elems[g].lm) {
            active[g] = false;
        }
    }
    elems.push(Elem { terms, lm: lh, sugar });
    active.push(true);
}

fn spoly<F: Field>(field: &F, order: &MonomialOrder, f: &Elem<F::Elem>, g: &Elem<F::Elem>, lcm: &Monomial) -> Vec<Term<F::Elem>> {
    let mf = f.lm.quotient_of(lcm);
    let mg = g.lm.quotient_of(lcm);
    let a = add_scaled(field, order, &[], &field.one(), &mf, &f.terms[1..]);
    add_scaled(field, order, &a, &field.neg(&field.one()), &mg, &g.terms[1..])
}

pub(crate) fn make_monic<F: Field>(field: &F, mut terms: Vec<Term<F::Elem>>) -> Vec<Term<F::Elem>> {
    if let Some((_, c)) = terms.first() {
        if !field.is_one(c) {
            let inv = field.inv(c);
            for t in &mut terms {
                t.1 = field.mul(&t.1, &inv);
            }
        }
    }
    terms
}

fn find_reducer<E>(m: &Monomial, basis: &[&[Term<E>]]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for (k, g) in basis.iter().enumerate() {
        if g[0].0.divides(m) && best.is_none_or(|b| basis[b].len() > g.len()) {
            best = Some(k);
        }
    }
    best
}

/// Reduces until the leading term is not divisible by any basis leading term.
/// Basis elements must be monic.
pub(crate) fn reduce_top<F: Field>(
    field: &F,
    order: &MonomialOrder,
    mut f: Vec<Term<F::Elem>>,
    basis: &[&[Term<F::Elem>]],
) -> Vec<Term<F::Elem>> {
    while let Some((m, c)) = f.first() {
        let Some(k) = find_reducer(m, basis) else { break };
        let g = basis[k];
        let q = g[0].0.quotient_of(m);
        f = add_scaled(field, order, &f[1..], &field.neg(c), &q, &g[1..]);
    }
    f
}

/// Full reduction: no term of the result is divisible by a basis leading
/// term. Basis elements must be monic.
pub(crate) fn reduce_full<F: Field>(
    field: &F,
    order: &MonomialOrder,
    mut f: Vec<Term<F::Elem>>,
    basis: &[&[Term<F::Elem>]],
) -> Vec<Term<F::Elem>> {
    let mut out: Vec<Term<F::Elem>> = Vec::new();
    let mut start = 0;
    while start < f.len() {
        let (m, c) = &f[start];
        match find_reducer(m, basis) {
            None => {
                start += 1;
            }
            Some(k) => {
                let g = basis[k];
                let q = g[0].0.quotient_of(m);
                let c = field.neg(c);
                out.extend_from_slice(&f[..start]);
                f = add_scaled(field, order, &f[start + 1..], &c, &q, &g[1..]);
                start = 0;
            }
        }
    }
    out.extend(f);
    out
}

/// Turns a Gröbner basis into the reduced one (in place), sorted ascending by
/// leading monomial.
pub(crate) fn interreduce<F: Field>(field: &F, order: &MonomialOrder, basis: &mut Vec<Vec<Term<F::Elem>>>) {
    basis.retain(|g| !g.is_empty());
    basis.sort_by(|a, b| order.cmp(&a[0].0, &b[0].0));
    // minimal basis: drop elements whose leading monomial is divisible by another
    let lms: Vec<Monomial> = basis.iter().map(|g| g[0].0).collect();
    let mut keep = alloc::vec![true; basis.len()];
    for i in 0..lms.len() {
        for j in 0..lms.len() {
            if i != j && keep[j] && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut min: Vec<Vec<Term<F::Elem>>> =
        core::mem::take(basis).into_iter().zip(keep).filter(|(_, k)| *k).map(|(g, _)| make_monic(field, g)).collect();
    for i in 0..min.len() {
        let g = core::mem::take(&mut min[i]);
        let head = g[0].clone();
        let refs: Vec<&[Term<F::Elem>]> =
            min.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, h)| h.as_slice()).collect();
        let mut tail = reduce_full(field, order, g[1..].to_vec(), &refs);
        let mut r = alloc::vec![head];
        r.append(&mut tail);
        min[i] = r;
    }
    *basis = min;
}

/// `ideal_member` at the level of generator lists.
pub fn ideal_member<F: Field>(f: &Polynomial<F>, gb: &ReducedGB<F>) -> Result<bool> {
    gb.contains(f)
}

/// All S-pairs of `gb` reduce to zero (the Buchberger criterion). Used as a
/// test oracle.
pub fn spairs_reduce_to_zero<F: Field>(gb: &ReducedGB<F>) -> bool {
    let field = gb.ring.field();
    let order = gb.ring.order();
    let elems: Vec<Elem<F::Elem>> = gb
        .basis
        .iter()
        .map(|g| Elem { terms: g.terms().to_vec(), lm: *g.lead_monomial().unwrap(), sugar: 0 })
        .collect();
    let refs: Vec<&[Term<F::Elem>]> = elems.iter().map(|e| e.terms.as_slice()).collect();
    for i in 0..elems.len() {
        for j in i + 1..elems.len() {
            let lcm = elems[i].lm.lcm(&elems[j].lm);
            let s = spoly(field, order, &elems[i], &elems[j], &lcm);
            if !reduce_full(field, order, s, &refs).is_empty() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring<PrimeField> {
        Ring::new(PrimeField::default(), n).unwrap()
    }

    fn gb(r: &Ring<PrimeField>, gens: &[&str]) -> ReducedGB<PrimeField> {
        let g: Vec<_> = gens.iter().map(|s| r.parse(s).unwrap()).collect();
        buchberger(r, &g).unwrap()
    }

    fn rendered(g: &ReducedGB<PrimeField>) -> Vec<alloc::string::String> {
        g.basis().iter().map(|p| p.render()).collect()
    }

    #[test]
    fn small_examples() {
        let r = ring(2);
        assert_eq!(rendered(&gb(&r, &["x0 + x1", "x1"])), ["x1", "x0"]);
        assert_eq!(rendered(&gb(&r, &["x0^2", "x0*x1 + x1^2"])), ["x0*x1 + x1^2", "x0^2", "x1^3"]);
        assert!(gb(&r, &[]).is_zero_ideal());
        assert!(gb(&r, &["x0 + 1", "x0"]).is_unit_ideal());
    }

    #[test]
    fn twisted_cubic_is_its_own_basis() {
        let r = ring(4);
        let g = gb(&r, &["x1^2 - x0*x2", "x1*x2 - x0*x3", "x2^2 - x1*x3"]);
        assert_eq!(g.basis().len(), 3);
        assert!(spairs_reduce_to_zero(&g));
        assert!(g.contains(&r.parse("x0*x3 - x1*x2").unwrap()).unwrap());
        assert!(g.normal_form(&r.parse("x1^2 - x0*x2").unwrap()).unwrap().is_zero());
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(2).with_order(MonomialOrder::lex());
        let g = gb(&r, &["x0 - x1"]);
        assert_eq!(g.normal_form(&r.parse("x0^2").unwrap()).unwrap().render(), "x1^2");
        let r = ring(2);
        let g = gb(&r, &["x1"]);
        assert_eq!(g.normal_form(&r.var(0)).unwrap().render(), "x0");
        let g = gb(&r, &["x0", "x1"]);
        assert!(ideal_member(&r.var(0), &g).unwrap());
        let r3 = ring(3);
        let g = gb(&r3, &["x0", "x1"]);
        assert!(!ideal_member(&r3.var(2), &g).unwrap());
    }

    fn random_gens(r: &Ring<PrimeField>, spec: &[Vec<(Vec<u32>, i64)>]) -> Vec<Polynomial<PrimeField>> {
        spec.iter()
            .map(|ts| {
                r.from_terms(
                    ts.iter().map(|(e, c)| (Monomial::from_exponents(e).unwrap(), r.field().from_i64(*c))).collect(),
                )
            })
            .collect()
    }

    fn gens_strategy() -> impl Strategy<Value = Vec<Vec<(Vec<u32>, i64)>>> {
        proptest::collection::vec(
            proptest::collection::vec((proptest::collection::vec(0u32..3, 3), -4i64..5), 1..4),
            1..4,
        )
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn basis_properties(spec in gens_strategy()) {
            let r = ring(3);
            let gens = random_gens(&r, &spec);
            let g = buchberger(&r, &gens).unwrap();
            prop_assert!(spairs_reduce_to_zero(&g));
            for f in &gens {
                prop_assert!(g.contains(f).unwrap());
            }
            // idempotent
            let again = buchberger(&r, g.basis()).unwrap();
            prop_assert_eq!(&again, &g);
            // reduced: no term of an element divisible by another leading monomial
            let lms = g.lead_monomials();
            for (i, p) in g.basis().iter().enumerate() {
                prop_assert!(r.field().is_one(p.lead_coeff().unwrap()));
                for (m, _) in p.terms() {
                    for (j, l) in lms.iter().enumerate() {
                        prop_assert!(i == j || !l.divides(m));
                    }
                }
            }
        }

        #[test]
        fn homogeneous_in_homogeneous_out(c in proptest::collection::vec(-3i64..4, 12)) {
            let r = ring(3);
            let quad = r.monomials_of_degree(2);
            let mk = |off: usize| r.from_terms(quad.iter().enumerate().map(|(i, m)| (*m, r.field().from_i64(c[(i + off) % 12]))).collect());
            let g = buchberger(&r, &[mk(0), mk(5)]).unwrap();
            for p in g.basis() {
                prop_assert!(p.is_homogeneous());
            }
        }
    }
}
