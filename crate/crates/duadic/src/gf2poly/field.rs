//! GF(2^m) arithmetic backed by a primitive polynomial.
//!
//! Field elements are polynomial residues of degree < m packed into a
//! `u32`. For m <= 16 a log/antilog table pair is built once per
//! context; larger fields fall back to carry-less multiplication with
//! on-the-fly reduction.

use std::fmt;

use crate::cosets::CyclotomicCoset;
use crate::error::{Error, Result};

use super::poly::BinaryPolynomial;

const TABLE_LIMIT: u32 = 16;

/// GF(2^m) defined by a primitive modulus; `n = 2^m - 1`.
///
/// Immutable after construction and safe to share across threads. The
/// residue of `x` is a primitive element, written `alpha` throughout.
pub struct FieldContext {
    m: u32,
    n: u64,
    modulus: BinaryPolynomial,
    modulus_mask: u64,
    backend: Backend,
}

enum Backend {
    /// `exp[i] = alpha^i` for `i < 2n` and `log[alpha^i] = i`.
    Tables { exp: Vec<u32>, log: Vec<u32> },
    Clmul,
}

impl FieldContext {
    /// Field defined by the lexicographically smallest primitive
    /// polynomial of degree m.
    pub fn new(m: u32) -> Result<Self> {
        Self::with_modulus(m, default_primitive_poly(m)?)
    }

    /// Field defined by an explicit primitive modulus of degree m.
    pub fn with_modulus(m: u32, modulus: BinaryPolynomial) -> Result<Self> {
        if !(2..=32).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        if modulus.degree() != Some(m as usize) {
            return Err(Error::DegreeMismatch {
                expected: m as usize,
                got: modulus.degree().map_or(0, |d| d),
            });
        }
        if !is_primitive(&modulus, m) {
            return Err(Error::NotPrimitive(modulus.to_string()));
        }
        let n = (1u64 << m) - 1;
        let modulus_mask = modulus.limbs()[0];
        let backend = if m <= TABLE_LIMIT {
            let mut exp = vec![0u32; 2 * n as usize];
            let mut log = vec![0u32; n as usize + 1];
            let mut cur: u64 = 1;
            for i in 0..n as usize {
                exp[i] = cur as u32;
                exp[i + n as usize] = cur as u32;
                log[cur as usize] = i as u32;
                cur <<= 1;
                if cur >> m & 1 == 1 {
                    cur ^= modulus_mask;
                }
            }
            debug_assert_eq!(cur, 1, "alpha must have order n");
            Backend::Tables { exp, log }
        } else {
            Backend::Clmul
        };
        Ok(Self {
            m,
            n,
            modulus,
            modulus_mask,
            backend,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Multiplicative group order, 2^m - 1; also the code length.
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn modulus(&self) -> &BinaryPolynomial {
        &self.modulus
    }

    /// Product of two field elements.
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.backend {
            Backend::Tables { exp, log } => {
                exp[log[a as usize] as usize + log[b as usize] as usize]
            }
            Backend::Clmul => self.reduce(clmul(a, b)),
        }
    }

    /// `alpha^e` for any exponent (reduced mod n).
    pub fn alpha_pow(&self, e: u64) -> u32 {
        let e = (e % self.n) as usize;
        match &self.backend {
            Backend::Tables { exp, .. } => exp[e],
            Backend::Clmul => {
                let mut acc: u32 = 1;
                let mut base: u32 = 2;
                let mut e = e as u64;
                while e > 0 {
                    if e & 1 == 1 {
                        acc = self.mul(acc, base);
                    }
                    base = self.mul(base, base);
                    e >>= 1;
                }
                acc
            }
        }
    }

    fn reduce(&self, mut v: u64) -> u32 {
        let m = self.m;
        let mut bit = 63 - v.leading_zeros().min(63);
        while v >> m != 0 {
            if v >> bit & 1 == 1 {
                v ^= self.modulus_mask << (bit - m);
            }
            bit -= 1;
        }
        v as u32
    }
}

impl fmt::Debug for FieldContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldContext")
            .field("m", &self.m)
            .field("n", &self.n)
            .field("modulus", &self.modulus.to_string())
            .finish()
    }
}

fn clmul(a: u32, b: u32) -> u64 {
    let mut out = 0u64;
    let mut a = a as u64;
    let mut b = b as u64;
    if a.count_ones() > b.count_ones() {
        std::mem::swap(&mut a, &mut b);
    }
    while a != 0 {
        let bit = a.trailing_zeros();
        a &= a - 1;
        out ^= b << bit;
    }
    out
}

/// The lexicographically smallest primitive polynomial of degree m,
/// reading the coefficient vector as an integer. Deterministic.
pub fn default_primitive_poly(m: u32) -> Result<BinaryPolynomial> {
    if !(2..=32).contains(&m) {
        return Err(Error::UnsupportedDegree(m));
    }
    // The constant term must be 1, otherwise x divides the candidate.
    let base = 1u64 << m;
    let mut mask = base + 1;
    while mask < base << 1 {
        let p = BinaryPolynomial::from_mask(mask);
        if is_primitive(&p, m) {
            return Ok(p);
        }
        mask += 2;
    }
    unreachable!("primitive polynomials exist for every degree")
}

/// True iff `p` is irreducible of degree m and the residue of `x`
/// generates the full multiplicative group of order 2^m - 1.
pub fn is_primitive(p: &BinaryPolynomial, m: u32) -> bool {
    if p.degree() != Some(m as usize) || !p.coeff(0) {
        return false;
    }
    if m == 1 {
        return true;
    }
    let x = BinaryPolynomial::x_pow(1);
    // Rabin irreducibility: x^(2^m) == x mod p, and for every prime
    // divisor l of m, gcd(x^(2^(m/l)) - x, p) = 1.
    let frob = |e: u32| -> BinaryPolynomial {
        let mut acc = x.rem(p).expect("nonzero modulus");
        for _ in 0..e {
            acc = acc.mulmod(&acc, p).expect("nonzero modulus");
        }
        acc
    };
    if frob(m) != x {
        return false;
    }
    for l in prime_divisors(m as u64) {
        let sub = frob(m / l as u32) + x.clone();
        if !sub.gcd(p).is_one() {
            return false;
        }
    }
    // Order check: x^((2^m-1)/q) != 1 for every prime q | 2^m - 1.
    let n = (1u64 << m) - 1;
    for q in prime_divisors(n) {
        let pow = x.powmod(n / q, p).expect("nonzero modulus");
        if pow.is_one() {
            return false;
        }
    }
    true
}

fn prime_divisors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= v {
        if v.is_multiple_of(d) {
            out.push(d);
            while v.is_multiple_of(d) {
                v /= d;
            }
        }
        d += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

/// The minimal polynomial of `alpha^s` over GF(2): the product of
/// `(x - alpha^j)` over the cyclotomic coset of s. All coefficients of
/// the product must land back in GF(2).
pub fn minimal_polynomial(ctx: &FieldContext, coset: &CyclotomicCoset) -> Result<BinaryPolynomial> {
    if coset.n() != ctx.n() {
        return Err(Error::ModulusMismatch {
            expected: ctx.n(),
            got: coset.n(),
        });
    }
    // Coefficients over GF(2^m); one linear factor per coset member.
    let mut coeffs: Vec<u32> = Vec::with_capacity(coset.len() + 1);
    coeffs.push(1);
    for &j in coset.members() {
        let root = ctx.alpha_pow(j);
        coeffs.push(0);
        for i in (1..coeffs.len()).rev() {
            coeffs[i] = coeffs[i - 1] ^ ctx.mul(root, coeffs[i]);
        }
        coeffs[0] = ctx.mul(root, coeffs[0]);
    }
    let mut out = BinaryPolynomial::zero();
    for (i, &c) in coeffs.iter().enumerate() {
        match c {
            0 => {}
            1 => out.flip_coeff(i),
            _ => return Err(Error::NonBinaryCoefficient { m: ctx.m() }),
        }
    }
    Ok(out)
}
