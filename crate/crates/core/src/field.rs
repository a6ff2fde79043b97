//! Prime fields F_q and their extensions F_{q^m}.
//!
//! Elements are stored as a single integer whose little-endian base-q digits
//! are the coefficients of the residue polynomial, i.e. the coordinates in the
//! polynomial basis `1, g, ..., g^{m-1}` where `g` is the class of `x`.
//! The base field F_q sits inside F_{q^m} as the integers `0..q`.

use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of some [`FieldCtx`], integer encoded.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct Elem(pub u64);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u64> for Elem {
    fn from(v: u64) -> Self {
        Elem(v)
    }
}

/// Arithmetic context for F_{q^m}, q prime.
///
/// Immutable and `Copy`; every operation is a pure function of its inputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    q: u64,
    m: u32,
    modulus: u64,
    order: u64,
}

impl FieldCtx {
    /// Builds F_{q^m} with the modulus chosen by [`find_modulus`].
    pub fn new(q: u64, m: u32) -> Result<Self> {
        let modulus = find_modulus(q, m)?;
        Ok(Self::from_parts(q, m, modulus))
    }

    /// The prime field F_q.
    pub fn prime(q: u64) -> Result<Self> {
        Self::new(q, 1)
    }

    /// Builds F_{q^m} from an explicit modulus, checking it is monic,
    /// of degree m and irreducible.
    pub fn with_modulus(q: u64, m: u32, modulus: u64) -> Result<Self> {
        check_params(q, m)?;
        let coeffs = poly::from_int(modulus, q);
        if coeffs.len() != m as usize + 1 || coeffs[m as usize] != 1 {
            return Err(Error::InvalidModulus(modulus));
        }
        if !poly::is_irreducible(&coeffs, q) {
            return Err(Error::InvalidModulus(modulus));
        }
        Ok(Self::from_parts(q, m, modulus))
    }

    fn from_parts(q: u64, m: u32, modulus: u64) -> Self {
        FieldCtx {
            q,
            m,
            modulus,
            order: q.pow(m),
        }
    }

    /// Characteristic (the base prime).
    #[inline]
    pub fn q(&self) -> u64 {
        self.q
    }

    /// Extension degree over F_q.
    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Number of elements, q^m.
    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The base field F_q of this context.
    pub fn base(&self) -> FieldCtx {
        FieldCtx::from_parts(self.q, 1, self.q)
    }

    #[inline]
    pub fn is_base(&self) -> bool {
        self.m == 1
    }

    /// True when `a` lies in the prime subfield.
    #[inline]
    pub fn in_base_field(&self, a: Elem) -> bool {
        a.0 < self.q
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        a.0 < self.order
    }

    pub fn check(&self, a: Elem) -> Result<Elem> {
        if self.contains(a) {
            Ok(a)
        } else {
            Err(Error::InvalidElement {
                value: a.0,
                order: self.order,
            })
        }
    }

    /// The class of `x`, written `g` in docs (only distinct from a base element when m > 1).
    pub fn generator(&self) -> Elem {
        if self.m == 1 {
            // x reduces to 0 modulo the linear modulus x
            Elem(0)
        } else {
            Elem(self.q)
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.order).map(Elem)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.q == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.m == 1 {
            return Elem(((a.0 as u128 + b.0 as u128) % self.q as u128) as u64);
        }
        self.digitwise(a, b, |x, y, q| (x + y) % q)
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.q == 2 {
            return Elem(a.0 ^ b.0);
        }
        if self.m == 1 {
            return Elem(((a.0 as u128 + (self.q - b.0) as u128) % self.q as u128) as u64);
        }
        self.digitwise(a, b, |x, y, q| (x + q - y) % q)
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.sub(Elem::ZERO, a)
    }

    fn digitwise(&self, a: Elem, b: Elem, op: impl Fn(u64, u64, u64) -> u64) -> Elem {
        let q = self.q;
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0u64;
        let mut place = 1u64;
        for i in 0..self.m {
            let d = op(x % q, y % q, q);
            out += d * place;
            x /= q;
            y /= q;
            if i + 1 < self.m {
                place *= q;
            }
        }
        Elem(out)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if self.q == 2 {
            return Elem(mul_gf2(a.0, b.0, self.m, self.modulus));
        }
        if self.m == 1 {
            return Elem(((a.0 as u128 * b.0 as u128) % self.q as u128) as u64);
        }
        let pa = poly::from_int(a.0, self.q);
        let pb = poly::from_int(b.0, self.q);
        let f = poly::from_int(self.modulus, self.q);
        Elem(poly::to_int(&poly::mulmod(&pa, &pb, &f, self.q), self.q))
    }

    /// Multiplicative inverse; `inv(0)` is an error.
    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.q == 2 {
            return Ok(Elem(inv_gf2(a.0, self.modulus)));
        }
        Ok(self.pow(a, self.order - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Coefficients of `a` in the polynomial basis, length m.
    pub fn expand(&self, a: Elem) -> Vec<u64> {
        let mut v = a.0;
        (0..self.m)
            .map(|_| {
                let d = v % self.q;
                v /= self.q;
                d
            })
            .collect()
    }

    /// Inverse of [`FieldCtx::expand`]; digits must be reduced mod q.
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<Elem> {
        if coeffs.len() != self.m as usize {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coefficients, got {}",
                self.m,
                coeffs.len()
            )));
        }
        let mut v = 0u64;
        for &c in coeffs.iter().rev() {
            if c >= self.q {
                return Err(Error::InvalidElement {
                    value: c,
                    order: self.q,
                });
            }
            v = v * self.q + c;
        }
        Ok(Elem(v))
    }

    pub fn sample_uniform<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        Elem(rng.gen_range(0..self.order))
    }

    pub fn sample_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        Elem(rng.gen_range(1..self.order))
    }
}

fn check_params(q: u64, m: u32) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if m == 0 {
        return Err(Error::InvalidDegree);
    }
    // the modulus encoding needs q^(m+1) to fit
    if q.checked_pow(m + 1).is_none() {
        return Err(Error::FieldTooLarge { q, m });
    }
    Ok(())
}

/// Smallest (by integer encoding) monic irreducible polynomial of degree m over F_q.
pub fn find_modulus(q: u64, m: u32) -> Result<u64> {
    check_params(q, m)?;
    let lead = q.pow(m);
    (0..lead)
        .map(|tail| lead + tail)
        .find(|&enc| poly::is_irreducible(&poly::from_int(enc, q), q))
        .ok_or(Error::InvalidModulus(lead))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) {
        return false;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[inline]
fn mul_gf2(mut a: u64, mut b: u64, m: u32, modulus: u64) -> u64 {
    let top = 1u64 << m;
    let mut r = 0u64;
    while b != 0 {
        if b & 1 != 0 {
            r ^= a;
        }
        b >>= 1;
        a <<= 1;
        if a & top != 0 {
            a ^= modulus;
        }
    }
    r
}

#[inline]
fn degree(v: u64) -> i32 {
    63 - v.leading_zeros() as i32
}

/// Binary-field inversion by the polynomial extended Euclidean algorithm.
/// Invariant: `a*g1 = u` and `a*g2 = v` modulo the field modulus.
fn inv_gf2(a: u64, modulus: u64) -> u64 {
    let (mut u, mut v) = (a, modulus);
    let (mut g1, mut g2) = (1u64, 0u64);
    while u != 1 {
        let mut j = degree(u) - degree(v);
        if j < 0 {
            std::mem::swap(&mut u, &mut v);
            std::mem::swap(&mut g1, &mut g2);
            j = -j;
        }
        u ^= v << j;
        g1 ^= g2 << j;
    }
    g1
}

/// Dense polynomials over F_q as little-endian coefficient vectors without
/// trailing zeros (the zero polynomial is empty).
pub(crate) mod poly {
    pub fn from_int(mut v: u64, q: u64) -> Vec<u64> {
        let mut out = Vec::new();
        while v > 0 {
            out.push(v % q);
            v /= q;
        }
        out
    }

    pub fn to_int(p: &[u64], q: u64) -> u64 {
        p.iter().rev().fold(0u64, |acc, &c| acc * q + c)
    }

    fn trim(p: &mut Vec<u64>) {
        while p.last() == Some(&0) {
            p.pop();
        }
    }

    #[inline]
    fn mulq(a: u64, b: u64, q: u64) -> u64 {
        ((a as u128 * b as u128) % q as u128) as u64
    }

    fn inv_mod(a: u64, q: u64) -> u64 {
        let mut base = a % q;
        let mut e = q - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mulq(acc, base, q);
            }
            base = mulq(base, base, q);
            e >>= 1;
        }
        acc
    }

    pub fn mul(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + mulq(x, y, q)) % q;
            }
        }
        trim(&mut out);
        out
    }

    /// Remainder of `a` modulo a nonzero `f`.
    pub fn rem(a: &[u64], f: &[u64], q: u64) -> Vec<u64> {
        let mut r = a.to_vec();
        trim(&mut r);
        let df = f.len() - 1;
        let lead_inv = inv_mod(f[df], q);
        while r.len() > df {
            let top = r.len() - 1;
            let c = mulq(r[top], lead_inv, q);
            let shift = top - df;
            for (i, &fc) in f.iter().enumerate() {
                let t = mulq(c, fc, q);
                r[shift + i] = (r[shift + i] + q - t) % q;
            }
            trim(&mut r);
        }
        r
    }

    pub fn mulmod(a: &[u64], b: &[u64], f: &[u64], q: u64) -> Vec<u64> {
        rem(&mul(a, b, q), f, q)
    }

    pub fn sub(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
        let len = a.len().max(b.len());
        let mut out: Vec<u64> = (0..len)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + q - y) % q
            })
            .collect();
        trim(&mut out);
        out
    }

    pub fn gcd(a: &[u64], b: &[u64], q: u64) -> Vec<u64> {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        trim(&mut x);
        trim(&mut y);
        while !y.is_empty() {
            let r = rem(&x, &y, q);
            x = y;
            y = r;
        }
        x
    }

    pub fn powmod(base: &[u64], mut e: u64, f: &[u64], q: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        let mut b = rem(base, f, q);
        while e > 0 {
            if e & 1 == 1 {
                acc = mulmod(&acc, &b, f, q);
            }
            b = mulmod(&b, &b, f, q);
            e >>= 1;
        }
        acc
    }

    /// Ben-Or test: a degree-m polynomial is irreducible iff
    /// gcd(f, x^{q^i} - x) = 1 for every 1 <= i <= m/2.
    pub fn is_irreducible(f: &[u64], q: u64) -> bool {
        if f.len() < 2 {
            return false;
        }
        let m = f.len() - 1;
        let x = vec![0u64, 1];
        let mut h = rem(&x, f, q);
        for _ in 0..m / 2 {
            h = powmod(&h, q, f, q);
            let g = gcd(f, &sub(&h, &x, q), q);
            if g.len() > 1 {
                return false;
            }
        }
        true
    }
}
