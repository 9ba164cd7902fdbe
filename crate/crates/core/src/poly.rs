//! Polynomial rings `K[x_0, ..., x_n]` and their elements.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::monomial::{Monomial, MonomialOrder, MAX_VARS};

/// A term `c * m`.
pub type Term<E> = (Monomial, E);

#[derive(Debug, PartialEq)]
struct RingData<F: Field> {
    field: F,
    nvars: usize,
    order: MonomialOrder,
    names: Vec<String>,
}

/// A polynomial ring with a fixed field, variable count, variable names and
/// monomial order. Cheap to clone.
#[derive(Clone)]
pub struct Ring<F: Field> {
    data: Arc<RingData<F>>,
}

impl<F: Field> PartialEq for Ring<F> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data) || self.data == other.data
    }
}

impl<F: Field> fmt::Debug for Ring<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({:?})", self.data.field.name(), self.data.names.join(","), self.data.order)
    }
}

impl<F: Field> Ring<F> {
    /// `K[x0, ..., x_{nvars-1}]` with grevlex.
    pub fn new(field: F, nvars: usize) -> Result<Self> {
        let names = (0..nvars).map(|i| alloc::format!("x{i}")).collect();
        Self::with_names(field, names, MonomialOrder::grevlex())
    }

    /// The homogeneous coordinate ring of `P^n`.
    pub fn projective(field: F, n: usize) -> Result<Self> {
        Self::new(field, n + 1)
    }

    pub fn with_names(field: F, names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        if names.is_empty() {
            return Err(Error::InvalidArgument("ring needs at least one variable".into()));
        }
        Ok(Ring { data: Arc::new(RingData { field, nvars: names.len(), order, names }) })
    }

    /// Same field and variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        if order == self.data.order {
            return self.clone();
        }
        Ring {
            data: Arc::new(RingData {
                field: self.data.field.clone(),
                nvars: self.data.nvars,
                order,
                names: self.data.names.clone(),
            }),
        }
    }

    /// This ring with one extra variable appended (named `name`), ordered by
    /// `order`.
    pub fn extended(&self, name: &str, order: MonomialOrder) -> Result<Self> {
        let mut names = self.data.names.clone();
        names.push(name.to_string());
        Self::with_names(self.data.field.clone(), names, order)
    }

    #[inline]
    pub fn field(&self) -> &F {
        &self.data.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.data.nvars
    }

    #[inline]
    pub fn order(&self) -> &MonomialOrder {
        &self.data.order
    }

    pub fn names(&self) -> &[String] {
        &self.data.names
    }

    /// Same variables and field (orders may differ).
    pub fn compatible(&self, other: &Self) -> bool {
        self.data.nvars == other.data.nvars && self.data.field == other.data.field && self.data.names == other.data.names
    }

    pub fn check_same(&self, other: &Self) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch(alloc::format!("{self:?} vs {other:?}")))
        }
    }

    pub fn zero(&self) -> Polynomial<F> {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    pub fn one(&self) -> Polynomial<F> {
        self.constant(self.field().one())
    }

    pub fn constant(&self, c: F::Elem) -> Polynomial<F> {
        self.term(c, Monomial::one(self.nvars()))
    }

    pub fn from_i64(&self, c: i64) -> Polynomial<F> {
        self.constant(self.field().from_i64(c))
    }

    pub fn var(&self, i: usize) -> Polynomial<F> {
        assert!(i < self.nvars(), "variable index {i} out of range");
        self.term(self.field().one(), Monomial::var(self.nvars(), i))
    }

    pub fn vars(&self) -> Vec<Polynomial<F>> {
        (0..self.nvars()).map(|i| self.var(i)).collect()
    }

    pub fn term(&self, c: F::Elem, m: Monomial) -> Polynomial<F> {
        if self.field().is_zero(&c) {
            return self.zero();
        }
        Polynomial { ring: self.clone(), terms: alloc::vec![(m, c)] }
    }

    pub fn monomial(&self, exps: &[u32]) -> Result<Polynomial<F>> {
        if exps.len() != self.nvars() {
            return Err(Error::RingMismatch(alloc::format!(
                "{} exponents for {} variables",
                exps.len(),
                self.nvars()
            )));
        }
        Ok(self.term(self.field().one(), Monomial::from_exponents(exps)?))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(&self, terms: Vec<Term<F::Elem>>) -> Polynomial<F> {
        let mut terms = terms;
        normalize_terms(self.field(), self.order(), &mut terms);
        Polynomial { ring: self.clone(), terms }
    }

    /// Wraps a term list that is already sorted, duplicate-free and zero-free.
    pub(crate) fn from_sorted(&self, terms: Vec<Term<F::Elem>>) -> Polynomial<F> {
        debug_assert!(terms.windows(2).all(|w| self.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial { ring: self.clone(), terms }
    }

    /// A linear form `sum c_i x_i`.
    pub fn linear_form(&self, coeffs: &[F::Elem]) -> Result<Polynomial<F>> {
        if coeffs.len() != self.nvars() {
            return Err(Error::RingMismatch(alloc::format!(
                "{} coefficients for {} variables",
                coeffs.len(),
                self.nvars()
            )));
        }
        let n = self.nvars();
        let terms = coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())).collect();
        Ok(self.from_terms(terms))
    }

    /// All monomials of degree `d`, in descending order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut exps = alloc::vec![0u32; self.nvars()];
        fill_monomials(&mut exps, 0, d, &mut out);
        out.sort_by(|a, b| self.order().cmp(b, a));
        out
    }

    /// Parses a polynomial in this ring's variable names, e.g. `x1^2 - x0*x2`.
    pub fn parse(&self, text: &str) -> Result<Polynomial<F>> {
        Parser { ring: self, src: text.as_bytes(), pos: 0 }.parse_all()
    }
}

fn fill_monomials(exps: &mut [u32], i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 == exps.len() {
        exps[i] = left;
        out.push(Monomial::from_exponents(exps).expect("within limits"));
        return;
    }
    for e in (0..=left).rev() {
        exps[i] = e;
        fill_monomials(exps, i + 1, left - e, out);
    }
    exps[i] = 0;
}

/// Sorts descending, merges equal monomials, drops zeros.
pub(crate) fn normalize_terms<F: Field>(field: &F, order: &MonomialOrder, terms: &mut Vec<Term<F::Elem>>) {
    terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
    let mut out: Vec<Term<F::Elem>> = Vec::with_capacity(terms.len());
    for (m, c) in terms.drain(..) {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
            _ => {
                if let Some((_, lc)) = out.last() {
                    if field.is_zero(lc) {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if let Some((_, lc)) = out.last() {
        if field.is_zero(lc) {
            out.pop();
        }
    }
    *terms = out;
}

/// `a + s * m * b` for sorted term lists, where `s` is a scalar and `m` a
/// monomial multiplier. The core merge used by reduction.
pub(crate) fn add_scaled<F: Field>(
    field: &F,
    order: &MonomialOrder,
    a: &[Term<F::Elem>],
    s: &F::Elem,
    m: &Monomial,
    b: &[Term<F::Elem>],
) -> Vec<Term<F::Elem>> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let bm = m.mul(&b[j].0);
        match order.cmp(&a[i].0, &bm) {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((bm, field.mul(s, &b[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = field.add(&a[i].1, &field.mul(s, &b[j].1));
                if !field.is_zero(&c) {
                    out.push((bm, c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    for t in &b[j..] {
        out.push((m.mul(&t.0), field.mul(s, &t.1)));
    }
    out
}

/// An element of a [`Ring`]: terms strictly descending in the ring's order,
/// no zero coefficients.
#[derive(Clone)]
pub struct Polynomial<F: Field> {
    ring: Ring<F>,
    terms: Vec<Term<F::Elem>>,
}

impl<F: Field> PartialEq for Polynomial<F> {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl<F: Field> Eq for Polynomial<F> {}

impl<F: Field> fmt::Debug for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl<F: Field> Polynomial<F> {
    #[inline]
    pub fn ring(&self) -> &Ring<F> {
        &self.ring
    }

    #[inline]
    pub fn terms(&self) -> &[Term<F::Elem>] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn lead_coeff(&self) -> Option<&F::Elem> {
        self.terms.first().map(|t| &t.1)
    }

    /// Maximal total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.0.degree()).max()
    }

    /// True when all terms share one degree (vacuously for zero).
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Coefficient of `m`.
    pub fn coeff(&self, m: &Monomial) -> F::Elem {
        let order = self.ring.order();
        match self.terms.binary_search_by(|(t, _)| order.cmp(m, t)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => self.ring.field().zero(),
        }
    }

    /// Scaled so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.lead_coeff() {
            None => self.clone(),
            Some(c) if self.ring.field().is_one(c) => self.clone(),
            Some(c) => self.scale(&self.ring.field().inv(c)),
        }
    }

    pub fn scale(&self, s: &F::Elem) -> Self {
        let f = self.ring.field();
        if f.is_zero(s) {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (*m, f.mul(c, s))).collect() }
    }

    pub fn neg(&self) -> Self {
        let f = self.ring.field();
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(m, c)| (*m, f.neg(c))).collect() }
    }

    /// `self * c * m`.
    pub fn mul_term(&self, c: &F::Elem, m: &Monomial) -> Self {
        let f = self.ring.field();
        if f.is_zero(c) {
            return self.ring.zero();
        }
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, d)| (t.mul(m), f.mul(c, d))).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial { ring: self.ring.clone(), terms: self.terms.iter().map(|(t, d)| (t.mul(m), d.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.add_unchecked(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.sub_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &Self) -> Self {
        let f = self.ring.field();
        let one = Monomial::one(self.ring.nvars());
        let terms = add_scaled(f, self.ring.order(), &self.terms, &f.one(), &one, &other.terms);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub(crate) fn sub_unchecked(&self, other: &Self) -> Self {
        let f = self.ring.field();
        let one = Monomial::one(self.ring.nvars());
        let terms = add_scaled(f, self.ring.order(), &self.terms, &f.neg(&f.one()), &one, &other.terms);
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `poly_mul`: the exact product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.ring.check_same(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let (small, big) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let f = self.ring.field();
        let order = self.ring.order();
        let mut acc: Vec<Term<F::Elem>> = Vec::new();
        for (m, c) in &small.terms {
            acc = add_scaled(f, order, &acc, c, m, &big.terms);
        }
        Polynomial { ring: self.ring.clone(), terms: acc }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = self.ring.one();
        for _ in 0..e {
            r = r.mul_unchecked(self);
        }
        r
    }

    /// `poly_eval`: value at a point.
    pub fn eval(&self, point: &[F::Elem]) -> Result<F::Elem> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::RingMismatch(alloc::format!("point of length {} in {} variables", point.len(), n)));
        }
        let f = self.ring.field();
        let mut acc = f.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (i, p) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    v = f.mul(&v, p);
                }
            }
            acc = f.add(&acc, &v);
        }
        Ok(acc)
    }

    /// Substitutes `images[i]` for `x_i`. The images may live in another ring
    /// over the same field.
    pub fn substitute(&self, images: &[Polynomial<F>]) -> Result<Polynomial<F>> {
        let n = self.ring.nvars();
        if images.len() != n {
            return Err(Error::RingMismatch(alloc::format!("{} images for {} variables", images.len(), n)));
        }
        let target = images[0].ring().clone();
        for im in images {
            target.check_same(im.ring())?;
        }
        let maxdeg: Vec<u32> = (0..n).map(|i| self.terms.iter().map(|(m, _)| m.exp(i)).max().unwrap_or(0)).collect();
        let powers: Vec<Vec<Polynomial<F>>> = (0..n)
            .map(|i| {
                let mut v = alloc::vec![target.one()];
                for k in 0..maxdeg[i] as usize {
                    let next = v[k].mul_unchecked(&images[i]);
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut t = target.constant(c.clone());
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    t = t.mul_unchecked(&pw[e]);
                }
            }
            acc = acc.add_unchecked(&t);
        }
        Ok(acc)
    }

    /// The same polynomial viewed in `ring`, which must have the same
    /// variables (possibly a different order).
    pub fn to_ring(&self, ring: &Ring<F>) -> Result<Polynomial<F>> {
        if !self.ring.compatible(ring) {
            return Err(Error::RingMismatch(alloc::format!("{:?} vs {:?}", self.ring, ring)));
        }
        if self.ring.order() == ring.order() {
            return Ok(Polynomial { ring: ring.clone(), terms: self.terms.clone() });
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| ring.order().cmp(&b.0, &a.0));
        Ok(Polynomial { ring: ring.clone(), terms })
    }

    /// Re-indexes variables: `x_i` becomes variable `map[i]` of `ring`.
    pub fn remap(&self, ring: &Ring<F>, map: &[usize]) -> Polynomial<F> {
        let n = ring.nvars();
        let terms = self.terms.iter().map(|(m, c)| (m.remap(map, n), c.clone())).collect();
        ring.from_terms(terms)
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect(),
        }
    }

    /// Exact division by a monomial; `None` if some term is not divisible.
    pub fn div_monomial(&self, m: &Monomial) -> Option<Self> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, c) in &self.terms {
            terms.push((t.checked_div(m)?, c.clone()));
        }
        Some(Polynomial { ring: self.ring.clone(), terms })
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let f = self.ring.field();
        let order = self.ring.order();
        let (dm, dc) = d.terms.first()?;
        let dinv = f.inv(dc);
        let mut rest = self.terms.clone();
        let mut q: Vec<Term<F::Elem>> = Vec::new();
        while let Some((m, c)) = rest.first() {
            let qm = m.checked_div(dm)?;
            let qc = f.mul(c, &dinv);
            rest = add_scaled(f, order, &rest[1..], &f.neg(&qc), &qm, &d.terms[1..]);
            q.push((qm, qc));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: q })
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.ring.nvars()),
            Some((m0, _)) => it.fold(*m0, |g, (m, _)| g.gcd(m)),
        }
    }

    /// Canonical text: terms in descending order, `^` exponents, explicit `*`.
    pub fn render(&self) -> String {
        let f = self.ring.field();
        let names = self.ring.names();
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = f.split_sign(c);
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let unit = f.is_one(&abs);
            if !unit || m.is_one() {
                let _ = f.fmt_elem(&abs, &mut s);
                if !m.is_one() {
                    s.push('*');
                }
            }
            let mut first = true;
            for (i, name) in names.iter().enumerate() {
                let e = m.exp(i);
                if e == 0 {
                    continue;
                }
                if !first {
                    s.push('*');
                }
                first = false;
                s.push_str(name);
                if e > 1 {
                    let _ = fmt::Write::write_fmt(&mut s, format_args!("^{e}"));
                }
            }
        }
        s
    }
}

struct Parser<'a, F: Field> {
    ring: &'a Ring<F>,
    src: &'a [u8],
    pos: usize,
}

impl<F: Field> Parser<'_, F> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_all(mut self) -> Result<Polynomial<F>> {
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let p = self.expr()?;
        if self.peek().is_some() {
            return self.err(alloc::format!("unexpected character '{}'", self.src[self.pos] as char));
        }
        Ok(p)
    }

    fn expr(&mut self) -> Result<Polynomial<F>> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                self.term()?.neg()
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add_unchecked(&self.term()?);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.sub_unchecked(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial<F>> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.mul_unchecked(&self.factor()?);
                }
                Some(b'/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.integer()?;
                    let fd = self.ring.field().from_i64(d);
                    if self.ring.field().is_zero(&fd) {
                        self.pos = at;
                        return self.err("division by zero");
                    }
                    acc = acc.scale(&self.ring.field().inv(&fd));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<Polynomial<F>> {
        let base = self.atom()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let e = self.integer()?;
            if !(0..=1000).contains(&e) {
                return self.err("exponent out of range");
            }
            return Ok(base.pow(e as u32));
        }
        Ok(base)
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        text.parse::<i64>().or_else(|_| {
            self.pos = start;
            self.err("integer too large")
        })
    }

    fn atom(&mut self) -> Result<Polynomial<F>> {
        match self.peek() {
            None => self.err("unexpected end of input"),
            Some(b'(') => {
                self.pos += 1;
                let p = self.expr()?;
                if self.peek() != Some(b')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(p)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.integer()?;
                Ok(self.ring.from_i64(v))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
                    self.pos += 1;
                }
                let ident = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii ident");
                match self.ring.names().iter().position(|n| n == ident) {
                    Some(i) => Ok(self.ring.var(i)),
                    None => {
                        self.pos = start;
                        self.err(alloc::format!("unknown variable '{ident}'"))
                    }
                }
            }
            Some(c) => self.err(alloc::format!("unexpected character '{}'", c as char)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use proptest::prelude::*;

    fn ring(n: usize) -> Ring<PrimeField> {
        Ring::new(PrimeField::default(), n).unwrap()
    }

    #[test]
    fn mul_examples() {
        let r = ring(3);
        let f = r.parse("x0 + x1").unwrap();
        assert_eq!(f.mul(&f).unwrap().render(), "x0^2 + 2*x0*x1 + x1^2");
        assert!(f.mul(&r.zero()).unwrap().is_zero());
        let x2 = r.var(2);
        assert_eq!(x2.pow(2).mul(&x2).unwrap().render(), "x2^3");
    }

    #[test]
    fn eval_examples() {
        let r = ring(5);
        let f = PrimeField::default();
        let e1 = [0, 1, 0, 0, 0];
        assert_eq!(r.parse("x2^2 - x1*x3").unwrap().eval(&e1).unwrap(), 0);
        assert_eq!(r.var(0).eval(&[1, 0, 0, 0, 0]).unwrap(), 1);
        assert_eq!(r.parse("x0 + x1 + x2").unwrap().eval(&e1).unwrap(), f.one());
        assert!(r.var(0).eval(&[1, 0]).is_err());
    }

    #[test]
    fn render_signs_and_parse_roundtrip() {
        let r = ring(4);
        for s in ["x1^2 - x0*x2", "-x0 + 3", "-2*x0*x3^4 + x1 - 1", "0"] {
            assert_eq!(r.parse(s).unwrap().render(), s);
        }
        assert_eq!(r.parse("(x0 - x1)^2 - x0^2").unwrap().render(), "-2*x0*x1 + x1^2");
    }

    #[test]
    fn parse_errors_have_positions() {
        let r = ring(3);
        assert_eq!(r.parse("x0 + y").unwrap_err(), Error::Parse { pos: 5, msg: "unknown variable 'y'".into() });
        assert!(matches!(r.parse("x0 +"), Err(Error::Parse { pos: 4, .. })));
        assert!(matches!(r.parse("(x0"), Err(Error::Parse { .. })));
    }

    #[test]
    fn ring_mismatch() {
        let a = ring(3);
        let b = ring(4);
        assert!(matches!(a.var(0).mul(&b.var(0)), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn substitute_linear_map() {
        let r = ring(3);
        let f = r.parse("x0*x1 - x2^2").unwrap();
        let im = [r.parse("x0 + x1").unwrap(), r.var(1), r.var(2)];
        assert_eq!(f.substitute(&im).unwrap().render(), "x0*x1 + x1^2 - x2^2");
    }

    #[test]
    fn exact_division() {
        let r = ring(3);
        let a = r.parse("x0 - x1").unwrap();
        let b = r.parse("x0^2 + x1*x2 - 3*x2^2").unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab.exact_div(&a), Some(b.clone()));
        assert_eq!(ab.exact_div(&b), Some(a));
        assert_eq!(b.exact_div(&r.var(0)), None);
    }

    fn small_poly(n: usize) -> impl Strategy<Value = Vec<(Vec<u32>, i64)>> {
        proptest::collection::vec((proptest::collection::vec(0u32..3, n), -5i64..6), 0..5)
    }

    fn build<F: Field>(r: &Ring<F>, t: &[(Vec<u32>, i64)]) -> Polynomial<F> {
        let terms = t
            .iter()
            .map(|(e, c)| (Monomial::from_exponents(e).unwrap(), r.field().from_i64(*c)))
            .collect();
        r.from_terms(terms)
    }

    proptest! {
        #[test]
        fn fp_and_q_agree_on_small_inputs(a in small_poly(3), b in small_poly(3)) {
            let rp = ring(3);
            let rq = Ring::new(Rationals, 3).unwrap();
            let (fp, gp) = (build(&rp, &a), build(&rp, &b));
            let (fq, gq) = (build(&rq, &a), build(&rq, &b));
            // coefficients stay far below p, so the symmetric renderings agree
            prop_assert_eq!(fp.mul(&gp).unwrap().render(), fq.mul(&gq).unwrap().render());
            prop_assert_eq!(fp.add(&gp).unwrap().render(), fq.add(&gq).unwrap().render());
        }

        #[test]
        fn homogeneous_products(d1 in 0u32..4, d2 in 0u32..4, c in proptest::collection::vec(-3i64..4, 10)) {
            let r = ring(3);
            let pick = |d: u32, off: usize| {
                let ms = r.monomials_of_degree(d);
                let terms = ms.iter().enumerate().map(|(i, m)| (*m, r.field().from_i64(c[(i + off) % c.len()]))).collect();
                r.from_terms(terms)
            };
            let (f, g) = (pick(d1, 0), pick(d2, 3));
            let h = f.mul(&g).unwrap();
            prop_assert!(h.is_homogeneous());
            if !h.is_zero() {
                prop_assert_eq!(h.degree(), Some(d1 + d2));
            }
        }
    }
}
