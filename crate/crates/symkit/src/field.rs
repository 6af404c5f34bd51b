//! Exact arithmetic in GF(p^m) for small primes p.
//!
//! A field is described by its characteristic `p`, extension degree `m`
//! and a monic irreducible modulus f(x); elements are coefficient
//! vectors in the residue basis {1, α, …, α^{m−1}} where α = x mod f(x).
//! Coefficients are stored densely so that odd characteristics (p = 3)
//! work the same as the binary case.
//!
//! Supported field sizes are capped at p^m ≤ 2⁶⁴.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Trial-division primality test; inputs stay far below the range where
/// this would matter.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization by trial division, as (prime, exponent) pairs in
/// ascending order.
pub fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            out.push((p, e));
        }
    };
    let mut e = 0;
    while n % 2 == 0 {
        n /= 2;
        e += 1;
    }
    push(2, e);
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        push(d, e);
        d += 2;
    }
    if n > 1 {
        push(n, 1);
    }
    out
}

fn mod_pow_u64(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut result = 1u128;
    let m = modulus as u128;
    let mut b = (base % modulus) as u128;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result as u64
}

fn mod_inv_u64(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    mod_pow_u64(a, p - 2, p)
}

// ---------------------------------------------------------------------------
// Polynomials over F_p
// ---------------------------------------------------------------------------

/// Polynomial over F_p, stored constant-term first with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<u64>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly { coeffs: Vec::new() }
    }

    pub fn from_coeffs(coeffs: &[u64]) -> Poly {
        let mut c = coeffs.to_vec();
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { coeffs: c }
    }

    pub fn constant(c: u64) -> Poly {
        Poly::from_coeffs(&[c])
    }

    pub fn x() -> Poly {
        Poly {
            coeffs: vec![0, 1],
        }
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Value of the coefficient vector read as a base-p integer, constant
    /// term least significant. Defines the "lexicographically smallest"
    /// ordering used by the polynomial searches.
    fn lex_value(&self, p: u64) -> u128 {
        let mut v = 0u128;
        for &c in self.coeffs.iter().rev() {
            v = v * p as u128 + c as u128;
        }
        v
    }

    /// Render with `var` as the indeterminate, e.g. `x^2 + 2*x + 2`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => var.to_string(),
                (1, c) => format!("{c}*{var}"),
                (i, 1) => format!("{var}^{i}"),
                (i, c) => format!("{c}*{var}^{i}"),
            };
            terms.push(term);
        }
        terms.join(" + ")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self)
    }
}

fn poly_add(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.coeffs.len().max(b.coeffs.len());
    let mut out = vec![0u64; n];
    for (i, o) in out.iter_mut().enumerate() {
        *o = (a.coeff(i) + b.coeff(i)) % p;
    }
    Poly::from_coeffs(&out)
}

fn poly_scale(a: &Poly, s: u64, p: u64) -> Poly {
    let out: Vec<u64> = a
        .coeffs
        .iter()
        .map(|&c| ((c as u128 * s as u128) % p as u128) as u64)
        .collect();
    Poly::from_coeffs(&out)
}

fn poly_mul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_zero() || b.is_zero() {
        return Poly::zero();
    }
    let mut out = vec![0u64; a.coeffs.len() + b.coeffs.len() - 1];
    for (i, &ai) in a.coeffs.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.coeffs.iter().enumerate() {
            let prod = (ai as u128 * bj as u128) % p as u128;
            out[i + j] = ((out[i + j] as u128 + prod) % p as u128) as u64;
        }
    }
    Poly::from_coeffs(&out)
}

/// Quotient and remainder of `a / b`; `b` must be nonzero.
fn poly_divrem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    assert!(!b.is_zero(), "division by zero polynomial");
    let db = b.degree().unwrap();
    let lead_inv = mod_inv_u64(*b.coeffs.last().unwrap(), p);
    let mut rem = a.coeffs.clone();
    let mut quot = vec![0u64; a.coeffs.len().saturating_sub(db)];
    while rem.len() > db {
        let i = rem.len() - 1;
        let c = rem[i];
        if c != 0 {
            let q = ((c as u128 * lead_inv as u128) % p as u128) as u64;
            quot[i - db] = q;
            for (j, &bj) in b.coeffs.iter().enumerate() {
                let sub = ((q as u128 * bj as u128) % p as u128) as u64;
                rem[i - db + j] = ((rem[i - db + j] + p) - sub) % p;
            }
        }
        rem.pop();
    }
    (Poly::from_coeffs(&quot), Poly::from_coeffs(&rem))
}

/// Extended Euclid: returns (g, s) with s·a ≡ g (mod f) and g the monic gcd.
fn poly_ext_gcd(a: &Poly, f: &Poly, p: u64) -> (Poly, Poly) {
    let mut r0 = f.clone();
    let mut r1 = a.clone();
    let mut s0 = Poly::zero();
    let mut s1 = Poly::constant(1);
    while !r1.is_zero() {
        let (q, r) = poly_divrem(&r0, &r1, p);
        let s = poly_add(&s0, &poly_scale(&poly_mul(&q, &s1, p), p - 1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // Normalize the gcd to be monic.
    let lead = *r0.coeffs.last().expect("gcd of nonzero inputs");
    let inv = mod_inv_u64(lead, p);
    (poly_scale(&r0, inv, p), poly_scale(&s0, inv, p))
}

/// True iff `f` is irreducible over F_p, by trial division against every
/// monic polynomial of degree at most deg(f)/2.
pub fn is_irreducible(p: u64, f: &Poly) -> bool {
    let Some(deg) = f.degree() else {
        return false;
    };
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        let count = (p as u128).pow(d as u32);
        for idx in 0..count {
            let g = monic_from_index(p, d, idx);
            let (_, rem) = poly_divrem(f, &g, p);
            if rem.is_zero() {
                return false;
            }
        }
    }
    true
}

/// The monic degree-`d` polynomial whose non-leading coefficients are the
/// base-p digits of `idx`, constant term least significant.
fn monic_from_index(p: u64, d: usize, mut idx: u128) -> Poly {
    let mut coeffs = vec![0u64; d + 1];
    for c in coeffs.iter_mut().take(d) {
        *c = (idx % p as u128) as u64;
        idx /= p as u128;
    }
    coeffs[d] = 1;
    Poly { coeffs }
}

fn check_field_size(p: u64, m: usize) -> Result<u128> {
    if !is_prime_u64(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    if m == 0 {
        return Err(Error::InvalidArgument("extension degree must be ≥ 1".into()));
    }
    let mut size = 1u128;
    for _ in 0..m {
        size = size.checked_mul(p as u128).filter(|&s| s <= 1u128 << 64).ok_or_else(|| {
            Error::TooLarge(format!("field size {p}^{m} exceeds 2^64"))
        })?;
    }
    Ok(size)
}

/// The lexicographically smallest monic irreducible polynomial of degree
/// `m` over F_p (coefficients read as base-p digits, constant term least
/// significant).
pub fn find_irreducible(p: u64, m: usize) -> Result<Poly> {
    let size = check_field_size(p, m)?;
    for idx in 0..size {
        let f = monic_from_index(p, m, idx);
        if is_irreducible(p, &f) {
            return Ok(f);
        }
    }
    unreachable!("irreducible polynomials exist for every degree");
}

/// The lexicographically smallest monic irreducible polynomial of degree
/// `m` over F_p whose residue class α = x mod f(x) generates the
/// multiplicative group, i.e. has order p^m − 1.
pub fn find_primitive(p: u64, m: usize) -> Result<Poly> {
    let size = check_field_size(p, m)?;
    let q_minus_1 = (size - 1) as u64;
    let prime_factors = factor_u64(q_minus_1);
    for idx in 0..size {
        let f = monic_from_index(p, m, idx);
        if !is_irreducible(p, &f) {
            continue;
        }
        let field = Field::from_parts_unchecked(p, m, f.clone());
        let alpha = field.alpha();
        if alpha.is_zero() {
            continue;
        }
        let primitive = prime_factors
            .iter()
            .all(|&(q, _)| !alpha.pow(q_minus_1 / q).is_one());
        if primitive {
            return Ok(f);
        }
    }
    unreachable!("primitive polynomials exist for every prime power");
}

// ---------------------------------------------------------------------------
// Fields and elements
// ---------------------------------------------------------------------------

#[derive(Debug, PartialEq, Eq)]
struct FieldSpec {
    p: u64,
    m: usize,
    modulus: Poly,
}

/// A concrete GF(p^m), cheap to clone and share.
#[derive(Clone)]
pub struct Field {
    spec: Arc<FieldSpec>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.spec, &other.spec) || *self.spec == *other.spec
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GF({}^{}) mod {}",
            self.spec.p, self.spec.m, self.spec.modulus
        )
    }
}

impl Field {
    /// Build a field from an explicit monic irreducible modulus.
    pub fn new(p: u64, m: usize, modulus: Poly) -> Result<Field> {
        check_field_size(p, m)?;
        if modulus.degree() != Some(m) || !modulus.is_monic() {
            return Err(Error::InvalidArgument(format!(
                "modulus must be monic of degree {m}, got {modulus}"
            )));
        }
        if modulus.coeffs().iter().any(|&c| c >= p) {
            return Err(Error::InvalidArgument(
                "modulus coefficients must lie in [0, p)".into(),
            ));
        }
        if !is_irreducible(p, &modulus) {
            return Err(Error::InvalidArgument(format!(
                "modulus {modulus} is reducible over F_{p}"
            )));
        }
        Ok(Field::from_parts_unchecked(p, m, modulus))
    }

    fn from_parts_unchecked(p: u64, m: usize, modulus: Poly) -> Field {
        Field {
            spec: Arc::new(FieldSpec { p, m, modulus }),
        }
    }

    /// Field with the smallest irreducible modulus for (p, m).
    pub fn with_smallest_irreducible(p: u64, m: usize) -> Result<Field> {
        Ok(Field::from_parts_unchecked(p, m, find_irreducible(p, m)?))
    }

    /// Field with the smallest primitive modulus for (p, m); `alpha()` then
    /// generates the multiplicative group.
    pub fn with_smallest_primitive(p: u64, m: usize) -> Result<Field> {
        Ok(Field::from_parts_unchecked(p, m, find_primitive(p, m)?))
    }

    pub fn p(&self) -> u64 {
        self.spec.p
    }

    pub fn m(&self) -> usize {
        self.spec.m
    }

    pub fn modulus(&self) -> &Poly {
        &self.spec.modulus
    }

    /// p^m − 1, the order of the multiplicative group.
    pub fn group_size(&self) -> u64 {
        let mut size = 1u128;
        for _ in 0..self.spec.m {
            size *= self.spec.p as u128;
        }
        (size - 1) as u64
    }

    /// Element from a coefficient slice (coefficient of αⁱ at index i);
    /// values are reduced mod p, missing high coefficients are zero.
    pub fn element(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.spec.m {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for extension degree {}",
                coeffs.len(),
                self.spec.m
            )));
        }
        let mut c = vec![0u64; self.spec.m];
        for (dst, &src) in c.iter_mut().zip(coeffs) {
            *dst = src % self.spec.p;
        }
        Ok(FieldElement {
            field: self.clone(),
            coeffs: c,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            field: self.clone(),
            coeffs: vec![0; self.spec.m],
        }
    }

    pub fn one(&self) -> FieldElement {
        let mut coeffs = vec![0; self.spec.m];
        coeffs[0] = 1;
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// The residue class α = x mod f(x). For m = 1 this reduces to the
    /// constant −a₀.
    pub fn alpha(&self) -> FieldElement {
        let mut coeffs = vec![0; self.spec.m];
        if self.spec.m == 1 {
            coeffs[0] = (self.spec.p - self.spec.modulus.coeff(0)) % self.spec.p;
        } else {
            coeffs[1] = 1;
        }
        FieldElement {
            field: self.clone(),
            coeffs,
        }
    }

    /// Iterate all p^m elements in lexicographic coefficient order.
    /// Intended for small fields; the iterator is lazy.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        let p = self.spec.p as u128;
        let m = self.spec.m;
        let total: u128 = (0..m).fold(1u128, |acc, _| acc * p);
        (0..total).map(move |mut idx| {
            let mut coeffs = vec![0u64; m];
            for c in coeffs.iter_mut() {
                *c = (idx % p) as u64;
                idx /= p;
            }
            FieldElement {
                field: self.clone(),
                coeffs,
            }
        })
    }
}

/// An element of a [`Field`], as a length-m coefficient vector over F_p.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    coeffs: Vec<u64>,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    fn check_same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(other)?;
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(other)?;
        let p = self.field.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| ((a + p) - b) % p)
            .collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(other)?;
        let p = self.field.p() as u128;
        let m = self.field.m();
        let modulus = self.field.modulus();
        // Schoolbook product followed by top-down reduction against the
        // monic modulus: x^m ≡ −(a₀ + a₁x + ⋯ + a_{m−1}x^{m−1}).
        let mut work = vec![0u128; 2 * m - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                work[i + j] = (work[i + j] + a as u128 * b as u128) % p;
            }
        }
        for i in (m..2 * m - 1).rev() {
            let c = work[i];
            if c == 0 {
                continue;
            }
            work[i] = 0;
            for j in 0..m {
                let f = modulus.coeff(j) as u128;
                if f != 0 {
                    let sub = c * f % p;
                    work[i - m + j] = (work[i - m + j] + p - sub) % p;
                }
            }
        }
        let coeffs = work[..m].iter().map(|&c| c as u64).collect();
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let p = self.field.p();
        let a = Poly::from_coeffs(&self.coeffs);
        let (g, s) = poly_ext_gcd(&a, self.field.modulus(), p);
        debug_assert_eq!(g, Poly::constant(1), "modulus is irreducible");
        let (_, s) = poly_divrem(&s, self.field.modulus(), p);
        let mut coeffs = vec![0u64; self.field.m()];
        for (i, c) in coeffs.iter_mut().enumerate() {
            *c = s.coeff(i);
        }
        Ok(FieldElement {
            field: self.field.clone(),
            coeffs,
        })
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(&self, mut e: u64) -> FieldElement {
        let mut result = self.field.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        result
    }

    /// The Frobenius image a^p.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.field.p())
    }

    /// Multiplicative order: the smallest r ≥ 1 with aʳ = 1. Computed by
    /// factoring p^m − 1 and dividing out primes, not by iteration.
    pub fn order(&self) -> Result<u64> {
        if self.is_zero() {
            return Err(Error::ZeroInverse);
        }
        let mut r = self.field.group_size();
        for (q, _) in factor_u64(r) {
            while r % q == 0 && self.pow(r / q).is_one() {
                r /= q;
            }
        }
        Ok(r)
    }

    /// Trace down to the subfield F_{p^s}: Σ a^{p^{s·i}} for
    /// i = 0 .. m/s − 1. `s` must divide m. With s = 1 this is the
    /// absolute trace, an element of the prime subfield.
    pub fn trace(&self, subfield_degree: usize) -> Result<FieldElement> {
        let m = self.field.m();
        if subfield_degree == 0 || m % subfield_degree != 0 {
            return Err(Error::InvalidArgument(format!(
                "subfield degree {subfield_degree} does not divide {m}"
            )));
        }
        let mut acc = self.clone();
        let mut term = self.clone();
        for _ in 1..m / subfield_degree {
            for _ in 0..subfield_degree {
                term = term.frobenius();
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Render as a polynomial in alpha, highest power first.
    pub fn display(&self) -> String {
        Poly::from_coeffs(&self.coeffs).display_with("alpha")
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn f9() -> Field {
        Field::with_smallest_primitive(3, 2).unwrap()
    }

    fn f16() -> Field {
        Field::with_smallest_primitive(2, 4).unwrap()
    }

    // Oracle: f is reducible iff it is a product of two monic polynomials
    // of lower degree. Uses its own multiplication so it shares no code
    // path with the division-based check in `is_irreducible`.
    fn oracle_is_irreducible(p: u64, f: &Poly) -> bool {
        fn mul_naive(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
            let mut out = vec![0u64; a.len() + b.len() - 1];
            for (i, &ai) in a.iter().enumerate() {
                for (j, &bj) in b.iter().enumerate() {
                    out[i + j] = (out[i + j] + ai * bj) % p;
                }
            }
            out
        }
        let deg = f.degree().unwrap();
        let mut target = vec![0u64; deg + 1];
        for (i, t) in target.iter_mut().enumerate() {
            *t = f.coeff(i);
        }
        for d in 1..=deg / 2 {
            let gs = (p as u128).pow(d as u32);
            let hs = (p as u128).pow((deg - d) as u32);
            for gi in 0..gs {
                let g = monic_from_index(p, d, gi);
                for hi in 0..hs {
                    let h = monic_from_index(p, deg - d, hi);
                    if mul_naive(g.coeffs(), h.coeffs(), p) == target {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn find_irreducible_smallest() {
        assert_eq!(find_irreducible(2, 1).unwrap(), Poly::x());
        assert_eq!(
            find_irreducible(2, 2).unwrap(),
            Poly::from_coeffs(&[1, 1, 1])
        );
        assert_eq!(
            find_irreducible(2, 4).unwrap(),
            Poly::from_coeffs(&[1, 1, 0, 0, 1])
        );
    }

    #[test]
    fn find_primitive_known_moduli() {
        assert_eq!(
            find_primitive(2, 2).unwrap(),
            Poly::from_coeffs(&[1, 1, 1]),
            "x^2 + x + 1"
        );
        assert_eq!(
            find_primitive(2, 4).unwrap(),
            Poly::from_coeffs(&[1, 1, 0, 0, 1]),
            "x^4 + x + 1"
        );
        assert_eq!(
            find_primitive(3, 2).unwrap(),
            Poly::from_coeffs(&[2, 1, 1]),
            "x^2 + x + 2"
        );
    }

    #[test]
    fn returned_polynomials_are_irreducible_by_oracle() {
        for m in 1..=12 {
            let f = find_irreducible(2, m).unwrap();
            assert!(oracle_is_irreducible(2, &f), "degree {m}: {f}");
            let f = find_primitive(2, m).unwrap();
            assert!(oracle_is_irreducible(2, &f), "degree {m}: {f}");
        }
        for m in 1..=6 {
            let f = find_irreducible(3, m).unwrap();
            assert!(oracle_is_irreducible(3, &f), "degree {m}: {f}");
        }
    }

    #[test]
    fn irreducible_ordering_is_lexicographic() {
        // Every smaller candidate (as a base-p value) must be reducible.
        for (p, m) in [(2u64, 4usize), (3, 2), (3, 3)] {
            let f = find_irreducible(p, m).unwrap();
            let value = f.lex_value(p);
            for idx in 0..value {
                let g = monic_from_index(p, m, idx);
                assert!(!is_irreducible(p, &g), "{g} precedes {f}");
            }
        }
    }

    #[test]
    fn f9_power_table() {
        // Successive powers of alpha in GF(9) with modulus x^2 + x + 2.
        let field = f9();
        assert_eq!(field.modulus(), &Poly::from_coeffs(&[2, 1, 1]));
        let alpha = field.alpha();
        let expected: [&[u64]; 8] = [
            &[0, 1], // alpha
            &[1, 2], // 2*alpha + 1
            &[2, 2], // 2*alpha + 2
            &[2, 0], // 2
            &[0, 2], // 2*alpha
            &[2, 1], // alpha + 2
            &[1, 1], // alpha + 1
            &[1, 0], // 1
        ];
        let mut acc = field.one();
        for (k, want) in expected.iter().enumerate() {
            acc = acc.mul(&alpha).unwrap();
            assert_eq!(acc.coeffs(), *want, "alpha^{}", k + 1);
            assert_eq!(acc, alpha.pow(k as u64 + 1));
        }
        assert_eq!(alpha.pow(4), field.element(&[2]).unwrap());
        assert!(alpha.pow(8).is_one());
    }

    #[test]
    fn inverse_of_every_nonzero_element() {
        for field in [f9(), f16(), Field::with_smallest_primitive(2, 6).unwrap()] {
            let q_minus_2 = field.group_size() - 1;
            for a in field.elements().filter(|a| !a.is_zero()) {
                let inv = a.inv().unwrap();
                assert!(a.mul(&inv).unwrap().is_one());
                // Cross-check the Euclid route against the power route.
                assert_eq!(inv, a.pow(q_minus_2));
            }
        }
        assert_eq!(f9().zero().inv(), Err(Error::ZeroInverse));
    }

    #[test]
    fn mismatched_fields_rejected() {
        let a = f9().alpha();
        let b = f16().alpha();
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&b), Err(Error::FieldMismatch));
        // Structurally equal fields are compatible even if separately built.
        let g = Field::new(3, 2, Poly::from_coeffs(&[2, 1, 1])).unwrap();
        assert!(g.alpha().add(&f9().alpha()).is_ok());
    }

    #[test]
    fn orders() {
        assert_eq!(f9().alpha().order().unwrap(), 8);
        assert_eq!(f9().one().order().unwrap(), 1);
        assert_eq!(f9().zero().order(), Err(Error::ZeroInverse));

        // alpha^5 in GF(16): order 15 / gcd(5, 15) = 3; confirm by
        // repeated multiplication.
        let a = f16().alpha().pow(5);
        assert_eq!(a.order().unwrap(), 3);
        let mut acc = a.clone();
        let mut naive = 1;
        while !acc.is_one() {
            acc = acc.mul(&a).unwrap();
            naive += 1;
        }
        assert_eq!(naive, 3);
    }

    #[test]
    fn primitive_alpha_order_is_maximal() {
        for field in [f9(), f16(), Field::with_smallest_primitive(2, 8).unwrap()] {
            let alpha = field.alpha();
            let n = field.group_size();
            assert!(alpha.pow(n).is_one());
            for r in 1..n {
                if n % r == 0 {
                    assert!(!alpha.pow(r).is_one(), "alpha^{r} = 1 in {field:?}");
                }
            }
        }
    }

    #[test]
    fn trace_in_f16() {
        let field = f16();
        assert!(field.zero().trace(1).unwrap().is_zero());

        // Oracle: sum the Frobenius orbit by direct multiplication.
        let frob_sum = |a: &FieldElement| {
            let mut acc = a.clone();
            let mut term = a.clone();
            for _ in 1..4 {
                term = term.mul(&term).unwrap(); // squaring applies Frobenius
                acc = acc.add(&term).unwrap();
            }
            acc
        };
        let alpha = field.alpha();
        let t = alpha.trace(1).unwrap();
        assert_eq!(t, frob_sum(&alpha));
        assert!(t.is_zero());

        let a3 = alpha.pow(3);
        let t3 = a3.trace(1).unwrap();
        assert_eq!(t3, frob_sum(&a3));
        assert!(t3.is_one());

        assert!(alpha.trace(3).is_err(), "3 does not divide 4");
        assert!(alpha.trace(2).is_ok());
    }

    #[test]
    fn trace_lands_in_prime_subfield_and_respects_frobenius() {
        let mut checked = 0;
        for field in [
            Field::with_smallest_primitive(2, 10).unwrap(),
            f9(),
            Field::with_smallest_primitive(3, 3).unwrap(),
        ] {
            for a in field.elements() {
                let t = a.trace(1).unwrap();
                assert!(t.coeffs()[1..].iter().all(|&c| c == 0), "trace not scalar");
                assert_eq!(a.frobenius().trace(1).unwrap(), t);
                checked += 1;
            }
        }
        assert!(checked >= 1000);
    }

    #[test]
    fn field_axioms_on_random_triples() {
        let mut rng = StdRng::seed_from_u64(0x5ca1ab1e);
        for field in [f9(), f16(), Field::with_smallest_primitive(5, 2).unwrap()] {
            let random_el = |rng: &mut StdRng| {
                let coeffs: Vec<u64> = (0..field.m()).map(|_| rng.random_range(0..field.p())).collect();
                field.element(&coeffs).unwrap()
            };
            for _ in 0..300 {
                let a = random_el(&mut rng);
                let b = random_el(&mut rng);
                let c = random_el(&mut rng);
                let ab_c = a.mul(&b).unwrap().mul(&c).unwrap();
                let a_bc = a.mul(&b.mul(&c).unwrap()).unwrap();
                assert_eq!(ab_c, a_bc, "associativity");
                let left = a.mul(&b.add(&c).unwrap()).unwrap();
                let right = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
                assert_eq!(left, right, "distributivity");
                assert!(a.sub(&a).unwrap().is_zero(), "additive inverse");
                if !a.is_zero() {
                    assert!(a.mul(&a.inv().unwrap()).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn display_formats() {
        let field = f9();
        assert_eq!(field.alpha().pow(2).display(), "2*alpha + 1");
        assert_eq!(field.alpha().pow(4).display(), "2");
        assert_eq!(field.alpha().display(), "alpha");
        assert_eq!(field.zero().display(), "0");
        assert_eq!(Poly::from_coeffs(&[1, 1, 0, 0, 1]).to_string(), "x^4 + x + 1");
    }

    #[test]
    fn invalid_field_parameters() {
        assert!(Field::new(4, 2, Poly::from_coeffs(&[1, 1, 1])).is_err());
        assert!(Field::new(2, 2, Poly::from_coeffs(&[1, 0, 1])).is_err()); // (x+1)^2
        assert!(Field::new(2, 0, Poly::constant(1)).is_err());
        assert!(matches!(
            check_field_size(2, 65),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn factoring_utilities() {
        assert_eq!(factor_u64(720), vec![(2, 4), (3, 2), (5, 1)]);
        assert_eq!(factor_u64(65535), vec![(3, 1), (5, 1), (17, 1), (257, 1)]);
        assert_eq!(factor_u64(1), vec![]);
        assert!(is_prime_u64(2) && is_prime_u64(257) && !is_prime_u64(1) && !is_prime_u64(63));
    }
}
