//! Polynomials over GF(2), bit-packed into 64-bit limbs.
//!
//! Bit `i` of the limb sequence is the coefficient of `x^i`, so the
//! constant term sits in the least significant bit of limb 0. The zero
//! polynomial is the empty limb vector and reports degree `None`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use crate::error::{Error, Result};

/// A polynomial over GF(2) with bit-packed coefficients.
///
/// Nonzero values keep no trailing zero limbs, so the leading
/// coefficient is always the top set bit of the last limb.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BinaryPolynomial {
    limbs: Vec<u64>,
}

impl BinaryPolynomial {
    pub fn zero() -> Self {
        Self { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { limbs: vec![1] }
    }

    /// The monomial `x^e`.
    pub fn x_pow(e: usize) -> Self {
        let mut limbs = vec![0u64; e / 64 + 1];
        limbs[e / 64] = 1u64 << (e % 64);
        Self { limbs }
    }

    /// `x^n + 1`, the modulus of the cyclic-code quotient ring.
    pub fn x_n_plus_one(n: usize) -> Self {
        let mut p = Self::x_pow(n);
        p.flip_coeff(0);
        p
    }

    /// Builds a polynomial from the low bits of an integer mask
    /// (bit i = coefficient of x^i).
    pub fn from_mask(mask: u64) -> Self {
        let mut p = Self { limbs: vec![mask] };
        p.normalize();
        p
    }

    /// Builds a polynomial with ones exactly at the given exponents.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut p = Self::zero();
        for &e in exponents {
            p.flip_coeff(e);
        }
        p
    }

    /// Parses a hexadecimal coefficient mask (most significant digit
    /// first, bit i = coefficient of x^i).
    pub fn from_hex(s: &str) -> Option<Self> {
        let s = s.trim().trim_start_matches("0x");
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_hexdigit()) {
            return None;
        }
        let mut limbs = Vec::with_capacity(s.len() / 16 + 1);
        let bytes = s.as_bytes();
        let mut end = bytes.len();
        while end > 0 {
            let start = end.saturating_sub(16);
            let chunk = std::str::from_utf8(&bytes[start..end]).ok()?;
            limbs.push(u64::from_str_radix(chunk, 16).ok()?);
            end = start;
        }
        let mut p = Self { limbs };
        p.normalize();
        Some(p)
    }

    /// Hexadecimal coefficient mask, most significant digit first.
    /// The zero polynomial prints as `"0"`.
    pub fn to_hex(&self) -> String {
        match self.limbs.split_last() {
            None => "0".to_string(),
            Some((last, rest)) => {
                let mut s = format!("{last:x}");
                for limb in rest.iter().rev() {
                    s.push_str(&format!("{limb:016x}"));
                }
                s
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        let last = self.limbs.last()?;
        Some((self.limbs.len() - 1) * 64 + (63 - last.leading_zeros() as usize))
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / 64)
            .is_some_and(|limb| limb >> (i % 64) & 1 == 1)
    }

    pub fn flip_coeff(&mut self, i: usize) {
        if i / 64 >= self.limbs.len() {
            self.limbs.resize(i / 64 + 1, 0);
        }
        self.limbs[i / 64] ^= 1u64 << (i % 64);
        self.normalize();
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> u64 {
        self.limbs.iter().map(|l| l.count_ones() as u64).sum()
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    /// `self * x^shift`.
    pub fn shl(&self, shift: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let words = shift / 64;
        let bits = shift % 64;
        let mut limbs = vec![0u64; self.limbs.len() + words + 1];
        for (i, &l) in self.limbs.iter().enumerate() {
            limbs[i + words] |= l << bits;
            if bits > 0 {
                limbs[i + words + 1] |= l >> (64 - bits);
            }
        }
        let mut p = Self { limbs };
        p.normalize();
        p
    }

    /// Quotient and remainder with `degree(remainder) < degree(divisor)`.
    pub fn divmod(&self, divisor: &Self) -> Result<(Self, Self)> {
        let d = divisor.degree().ok_or(Error::DivisionByZero)?;
        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(rd) = rem.degree() {
            if rd < d {
                break;
            }
            let shift = rd - d;
            quot.flip_coeff(shift);
            rem += divisor.shl(shift);
        }
        Ok((quot, rem))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divmod(divisor)?.1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.rem(self) {
            Ok(r) => r.is_zero(),
            Err(_) => false,
        }
    }

    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a
    }

    /// `self * other mod modulus`.
    pub fn mulmod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        (self.clone() * other.clone()).rem(modulus)
    }

    /// `self^e mod modulus` by square and multiply.
    pub fn powmod(&self, mut e: u64, modulus: &Self) -> Result<Self> {
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one().rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, modulus)?;
            }
            base = base.mulmod(&base, modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

impl AddAssign<&BinaryPolynomial> for BinaryPolynomial {
    fn add_assign(&mut self, rhs: &BinaryPolynomial) {
        if rhs.limbs.len() > self.limbs.len() {
            self.limbs.resize(rhs.limbs.len(), 0);
        }
        for (a, b) in self.limbs.iter_mut().zip(rhs.limbs.iter()) {
            *a ^= b;
        }
        self.normalize();
    }
}

impl AddAssign for BinaryPolynomial {
    fn add_assign(&mut self, rhs: BinaryPolynomial) {
        *self += &rhs;
    }
}

impl Add for BinaryPolynomial {
    type Output = BinaryPolynomial;
    fn add(mut self, rhs: BinaryPolynomial) -> BinaryPolynomial {
        self += &rhs;
        self
    }
}

impl Mul for BinaryPolynomial {
    type Output = BinaryPolynomial;

    /// Carry-less schoolbook product.
    fn mul(self, rhs: BinaryPolynomial) -> BinaryPolynomial {
        &self * &rhs
    }
}

impl Mul for &BinaryPolynomial {
    type Output = BinaryPolynomial;

    fn mul(self, rhs: &BinaryPolynomial) -> BinaryPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BinaryPolynomial::zero();
        }
        let (short, long) = if self.limbs.len() <= rhs.limbs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = vec![0u64; self.limbs.len() + rhs.limbs.len()];
        for (i, &limb) in short.limbs.iter().enumerate() {
            let mut l = limb;
            while l != 0 {
                let bit = l.trailing_zeros() as usize;
                l &= l - 1;
                for (j, &other) in long.limbs.iter().enumerate() {
                    out[i + j] ^= other << bit;
                    if bit > 0 {
                        out[i + j + 1] ^= other >> (64 - bit);
                    }
                }
            }
        }
        let mut p = BinaryPolynomial { limbs: out };
        p.normalize();
        p
    }
}

impl fmt::Display for BinaryPolynomial {
    /// Conventional sparse form, e.g. `x^7 + x + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(deg) = self.degree() else {
            return write!(f, "0");
        };
        let mut first = true;
        for e in (0..=deg).rev() {
            if !self.coeff(e) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "1")?,
                1 => write!(f, "x")?,
                _ => write!(f, "x^{e}")?,
            }
        }
        Ok(())
    }
}
