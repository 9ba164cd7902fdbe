//! Exponent vectors and monomial orders.

use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Hard limit on the number of ring variables, including the auxiliary
/// elimination variable.
pub const MAX_VARS: usize = 16;

/// A monomial `x_0^{a_0} ... x_{n}^{a_n}` with a cached total degree and a bit mask
/// of the variables that occur, used to reject divisibility tests quickly.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
    mask: u16,
    nvars: u8,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        debug_assert!(nvars <= MAX_VARS);
        Monomial { exps: [0; MAX_VARS], deg: 0, mask: 0, nvars: nvars as u8 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m.mask = 1 << i;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables(exps.len()));
        }
        let mut m = Self::one(exps.len());
        for (i, &e) in exps.iter().enumerate() {
            let e = u16::try_from(e).map_err(|_| Error::InvalidArgument(alloc::format!("exponent {e} too large")))?;
            m.exps[i] = e;
            m.deg += e as u32;
            if e > 0 {
                m.mask |= 1 << i;
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        for i in 0..self.nvars as usize {
            r.exps[i] += other.exps[i];
        }
        r.deg += other.deg;
        r.mask |= other.mask;
        r
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        if self.mask & !other.mask != 0 || self.deg > other.deg {
            return false;
        }
        (0..self.nvars as usize).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `other / self`, assuming `self | other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let mut r = *other;
        let mut mask = 0u16;
        for i in 0..self.nvars as usize {
            r.exps[i] -= self.exps[i];
            if r.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        r.deg -= self.deg;
        r.mask = mask;
        r
    }

    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor.divides(self).then(|| divisor.quotient_of(self))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        let mut deg = 0;
        for i in 0..self.nvars as usize {
            r.exps[i] = r.exps[i].max(other.exps[i]);
            deg += r.exps[i] as u32;
        }
        r.deg = deg;
        r.mask |= other.mask;
        r
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut r = *self;
        let mut deg = 0;
        let mut mask = 0u16;
        for i in 0..self.nvars as usize {
            r.exps[i] = r.exps[i].min(other.exps[i]);
            deg += r.exps[i] as u32;
            if r.exps[i] > 0 {
                mask |= 1 << i;
            }
        }
        r.deg = deg;
        r.mask = mask;
        r
    }

    #[inline]
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.mask & other.mask == 0
    }

    /// Same exponents, viewed in a ring with `nvars` variables (dropping or
    /// zero-padding trailing variables).
    pub fn resized(&self, nvars: usize) -> Monomial {
        let mut r = Monomial::one(nvars);
        for i in 0..nvars.min(self.nvars as usize) {
            r.exps[i] = self.exps[i];
        }
        r.deg = r.exps[..nvars].iter().map(|&e| e as u32).sum();
        r.mask = (0..nvars).filter(|&i| r.exps[i] > 0).fold(0, |m, i| m | (1 << i));
        r
    }

    /// Monomial with the exponents permuted: variable `i` of `self` becomes
    /// variable `map[i]` of the result.
    pub fn remap(&self, map: &[usize], nvars: usize) -> Monomial {
        let mut r = Monomial::one(nvars);
        for i in 0..self.nvars as usize {
            let e = self.exps[i];
            if e > 0 {
                r.exps[map[i]] += e;
                r.mask |= 1 << map[i];
            }
        }
        r.deg = self.deg;
        r
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
    /// Product order: the first `k` positions form a block compared first (by
    /// grevlex), then the remaining positions (by grevlex). Eliminates the first
    /// block.
    Block(u8),
}

/// A monomial order together with an optional variable permutation:
/// position `i` of the order looks at variable `perm[i]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    perm: Option<[u8; MAX_VARS]>,
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.perm {
            None => write!(f, "{:?}", self.kind),
            Some(p) => write!(f, "{:?}{:?}", self.kind, &p[..]),
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        Self::grevlex()
    }
}

impl MonomialOrder {
    pub const fn grevlex() -> Self {
        MonomialOrder { kind: OrderKind::Grevlex, perm: None }
    }

    pub const fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: None }
    }

    pub fn block(k: usize) -> Self {
        MonomialOrder { kind: OrderKind::Block(k as u8), perm: None }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// Reorders the variables: `positions[i]` is the variable compared at
    /// position `i`. `positions` must be a permutation of `0..len`.
    pub fn with_permutation(mut self, positions: &[usize]) -> Result<Self> {
        let n = positions.len();
        if n > MAX_VARS {
            return Err(Error::TooManyVariables(n));
        }
        let mut seen = [false; MAX_VARS];
        let mut p = [0u8; MAX_VARS];
        for (i, &v) in positions.iter().enumerate() {
            if v >= n || seen[v] {
                return Err(Error::InvalidArgument(alloc::format!("not a permutation: {positions:?}")));
            }
            seen[v] = true;
            p[i] = v as u8;
        }
        for (i, slot) in p.iter_mut().enumerate().skip(n) {
            *slot = i as u8;
        }
        self.perm = Some(p);
        Ok(self)
    }

    /// Grevlex with variable `v` moved to the last (cheapest) position.
    pub fn grevlex_with_last(nvars: usize, v: usize) -> Self {
        let mut pos: alloc::vec::Vec<usize> = (0..nvars).filter(|&i| i != v).collect();
        pos.push(v);
        Self::grevlex().with_permutation(&pos).expect("valid permutation")
    }

    /// Block order eliminating the variables in `vars` (compared first).
    pub fn eliminating(nvars: usize, vars: &[usize]) -> Result<Self> {
        let mut pos: alloc::vec::Vec<usize> = vars.to_vec();
        pos.extend((0..nvars).filter(|i| !vars.contains(i)));
        Self::block(vars.len()).with_permutation(&pos)
    }

    /// Is `v` in the eliminated block of this order?
    pub fn eliminates(&self, v: usize) -> bool {
        match self.kind {
            OrderKind::Block(k) => (0..k as usize).any(|i| self.position_var(i) == v),
            _ => false,
        }
    }

    #[inline]
    fn position_var(&self, i: usize) -> usize {
        match &self.perm {
            None => i,
            Some(p) => p[i] as usize,
        }
    }

    /// Total order comparison; no dimension check.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.nvars as usize;
        match (self.kind, &self.perm) {
            (OrderKind::Grevlex, None) => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                for i in (0..n).rev() {
                    if a.exps[i] != b.exps[i] {
                        return b.exps[i].cmp(&a.exps[i]);
                    }
                }
                Ordering::Equal
            }
            (OrderKind::Grevlex, Some(p)) => {
                if a.deg != b.deg {
                    return a.deg.cmp(&b.deg);
                }
                revlex_tail(a, b, p, 0, n)
            }
            (OrderKind::Lex, _) => {
                for i in 0..n {
                    let v = self.position_var(i);
                    if a.exps[v] != b.exps[v] {
                        return a.exps[v].cmp(&b.exps[v]);
                    }
                }
                Ordering::Equal
            }
            (OrderKind::Block(k), _) => {
                let identity;
                let p = match &self.perm {
                    Some(p) => p,
                    None => {
                        identity = identity_perm();
                        &identity
                    }
                };
                let k = k as usize;
                let block_deg = |m: &Monomial| -> u32 { (0..k).map(|i| m.exps[p[i] as usize] as u32).sum() };
                let (da, db) = (block_deg(a), block_deg(b));
                if da != db {
                    return da.cmp(&db);
                }
                let o = revlex_tail(a, b, p, 0, k);
                if o != Ordering::Equal {
                    return o;
                }
                let (ra, rb) = (a.deg - da, b.deg - db);
                if ra != rb {
                    return ra.cmp(&rb);
                }
                revlex_tail(a, b, p, k, n)
            }
        }
    }

    /// Order comparison with a dimension check.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.nvars != b.nvars {
            return Err(Error::RingMismatch(alloc::format!(
                "monomials in {} and {} variables",
                a.nvars, b.nvars
            )));
        }
        Ok(self.cmp(a, b))
    }
}

fn identity_perm() -> [u8; MAX_VARS] {
    let mut p = [0u8; MAX_VARS];
    for (i, slot) in p.iter_mut().enumerate() {
        *slot = i as u8;
    }
    p
}

#[inline]
fn revlex_tail(a: &Monomial, b: &Monomial, p: &[u8; MAX_VARS], lo: usize, hi: usize) -> Ordering {
    for i in (lo..hi).rev() {
        let v = p[i] as usize;
        if a.exps[v] != b.exps[v] {
            return b.exps[v].cmp(&a.exps[v]);
        }
    }
    Ordering::Equal
}

/// `mono_cmp`: compares two monomials of the same ring in `order`.
pub fn mono_cmp(order: &MonomialOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    order.compare(a, b)
}
