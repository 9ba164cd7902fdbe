//! Coefficient fields.
//!
//! Every computation in the crate is exact. Two fields are provided: a word-size
//! prime field (the default, `F_32003`) and the rationals, which exist to
//! cross-check results that look characteristic-sensitive.

use alloc::string::String;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand_core::RngCore;

use crate::error::{Error, Result};

/// The default characteristic.
pub const DEFAULT_PRIME: u32 = 32003;

/// An exact field, given as a context object; elements are plain values and all
/// arithmetic goes through the context.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// `num / den`, or `None` when `den` vanishes in the field.
    fn from_ratio(&self, num: i64, den: i64) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Characteristic, `0` for the rationals.
    fn characteristic(&self) -> u64;
    /// Number of elements, when finite.
    fn size(&self) -> Option<u64>;
    /// The `i`-th element in a fixed enumeration, for `i < size()`.
    fn element(&self, i: u64) -> Self::Elem;
    /// A uniformly random nonzero-biased element. Finite fields sample the whole
    /// field, the rationals sample small integers.
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;
    /// Writes `a` in canonical form (symmetric residues for prime fields).
    fn fmt_elem(&self, a: &Self::Elem, f: &mut dyn fmt::Write) -> fmt::Result;
    /// Sign-aware split used by the polynomial printer: `(negative, |a|)`.
    fn split_sign(&self, a: &Self::Elem) -> (bool, Self::Elem);
    fn name(&self) -> String;

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }
    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }
    fn elem_to_string(&self, a: &Self::Elem) -> String {
        let mut s = String::new();
        let _ = self.fmt_elem(a, &mut s);
        s
    }
}

/// `F_p` for a prime `p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p >= (1 << 31) {
            return Err(Error::InvalidField(alloc::format!("prime {p} too large (must be < 2^31)")));
        }
        if !is_prime(p) {
            return Err(Error::InvalidField(alloc::format!("{p} is not prime")));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    #[inline]
    fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
}

impl Default for PrimeField {
    fn default() -> Self {
        PrimeField { p: DEFAULT_PRIME }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        self.reduce(v)
    }
    fn from_ratio(&self, num: i64, den: i64) -> Option<u32> {
        let d = self.reduce(den);
        if d == 0 {
            return None;
        }
        Some(self.mul(&self.reduce(num), &self.inv(&d)))
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a + *b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero in F_{}", self.p);
        // extended Euclid
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        self.reduce(t0)
    }
    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn size(&self) -> Option<u64> {
        Some(self.p as u64)
    }
    fn element(&self, i: u64) -> u32 {
        (i % self.p as u64) as u32
    }
    fn random(&self, rng: &mut dyn RngCore) -> u32 {
        (rng.next_u64() % self.p as u64) as u32
    }
    fn fmt_elem(&self, a: &u32, f: &mut dyn fmt::Write) -> fmt::Result {
        let (neg, abs) = self.split_sign(a);
        if neg {
            write!(f, "-{abs}")
        } else {
            write!(f, "{abs}")
        }
    }
    fn split_sign(&self, a: &u32) -> (bool, u32) {
        if *a > self.p / 2 {
            (true, self.p - a)
        } else {
            (false, *a)
        }
    }
    fn name(&self) -> String {
        alloc::format!("F_{}", self.p)
    }
}

/// The field of rational numbers with arbitrary-precision numerators and
/// denominators.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_ratio(&self, num: i64, den: i64) -> Option<BigRational> {
        if den == 0 {
            return None;
        }
        Some(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        assert!(!a.is_zero(), "inverse of zero in QQ");
        a.recip()
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn size(&self) -> Option<u64> {
        None
    }
    fn element(&self, i: u64) -> BigRational {
        self.from_i64(i as i64)
    }
    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        let v = (rng.next_u64() % 41) as i64 - 20;
        self.from_i64(v)
    }
    fn fmt_elem(&self, a: &BigRational, f: &mut dyn fmt::Write) -> fmt::Result {
        if a.denom().is_one() {
            write!(f, "{}", a.numer())
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())
        }
    }
    fn split_sign(&self, a: &BigRational) -> (bool, BigRational) {
        (a.is_negative(), a.abs())
    }
    fn name(&self) -> String {
        String::from("QQ")
    }
}

/// Small-integer view of a field element, when one exists. Used when comparing
/// results across the two fields.
pub fn rational_to_i64(a: &BigRational) -> Option<i64> {
    if a.denom().is_one() {
        a.numer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check() {
        assert!(PrimeField::new(32003).is_ok());
        assert!(matches!(PrimeField::new(32004), Err(Error::InvalidField(_))));
        assert!(PrimeField::new(1).is_err());
    }

    #[test]
    fn fp_inverse_roundtrip() {
        let f = PrimeField::default();
        for a in [1u32, 2, 3, 16001, 32002, 12345] {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.from_ratio(1, 2).map(|h| f.mul(&h, &2)), Some(1));
        assert_eq!(f.from_i64(-1), 32002);
        assert_eq!(f.elem_to_string(&32002), "-1");
    }

    #[test]
    fn rationals_basic() {
        let q = Rationals;
        let half = q.from_ratio(1, 2).unwrap();
        assert_eq!(q.add(&half, &half), q.one());
        assert_eq!(q.elem_to_string(&q.neg(&half)), "-1/2");
    }
}
