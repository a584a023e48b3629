//! Cyclic codes from defining sets: generator polynomials and
//! matrices, duals, even-weight subcodes, and parity-extended views.

mod matrix;

pub use matrix::{BinaryMatrix, BitVec};

use std::sync::{Arc, OnceLock};

use serde::Serialize;

use crate::cosets::{cyclotomic_coset, DefiningSet};
use crate::error::{Error, Result};
use crate::gf2poly::{minimal_polynomial, BinaryPolynomial, FieldContext};

/// A binary cyclic code of length n = 2^m - 1, carried by its defining
/// set and generator polynomial. Immutable after construction.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    ctx: Arc<FieldContext>,
    defining_set: DefiningSet,
    generator: BinaryPolynomial,
    dimension: usize,
}

impl CyclicCode {
    /// Builds the code whose generator is the product of the minimal
    /// polynomials of `alpha^i` over the cosets inside T.
    pub fn from_defining_set(ctx: Arc<FieldContext>, t: DefiningSet) -> Result<Self> {
        if t.n() != ctx.n() {
            return Err(Error::ModulusMismatch {
                expected: ctx.n(),
                got: t.n(),
            });
        }
        if let Some(witness) = t.conjugate_closure_witness() {
            return Err(Error::NotConjugateClosed {
                n: t.n(),
                witness,
            });
        }
        let mut generator = BinaryPolynomial::one();
        let mut seen = DefiningSet::empty(t.n());
        for i in t.iter() {
            if seen.contains(i) {
                continue;
            }
            let coset = cyclotomic_coset(i, t.n())?;
            seen = seen.union(&DefiningSet::from_residues(t.n(), coset.members().iter().copied()));
            generator = generator * minimal_polynomial(&ctx, &coset)?;
        }
        let n = ctx.n() as usize;
        let dimension = n - t.len() as usize;
        debug_assert_eq!(generator.degree().unwrap_or(0), t.len() as usize);
        debug_assert!(generator.divides(&BinaryPolynomial::x_n_plus_one(n)));
        Ok(Self {
            ctx,
            defining_set: t,
            generator,
            dimension,
        })
    }

    pub fn n(&self) -> usize {
        self.ctx.n() as usize
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generator(&self) -> &BinaryPolynomial {
        &self.generator
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn field(&self) -> &Arc<FieldContext> {
        &self.ctx
    }

    /// Multiplies the message polynomial by the generator. No reduction
    /// occurs: deg(m) < k and deg(g) = n - k keep the product below n.
    pub fn encode(&self, message: &BitVec) -> Result<BitVec> {
        if message.len() != self.dimension {
            return Err(Error::MessageLength {
                expected: self.dimension,
                got: message.len(),
            });
        }
        let mut mp = BinaryPolynomial::zero();
        for (i, bit) in message.iter().enumerate() {
            if bit {
                mp.flip_coeff(i);
            }
        }
        let c = mp * self.generator.clone();
        let mut packed = vec![0u64; self.n().div_ceil(64)];
        let limbs = c.limbs();
        packed[..limbs.len()].copy_from_slice(limbs);
        Ok(BitVec::from_words(self.n(), packed))
    }

    /// Membership: the generator divides the word polynomial.
    pub fn contains(&self, word: &BitVec) -> Result<bool> {
        if word.len() != self.n() {
            return Err(Error::WordLength {
                expected: self.n(),
                got: word.len(),
            });
        }
        let mut wp = BinaryPolynomial::zero();
        for (i, bit) in word.iter().enumerate() {
            if bit {
                wp.flip_coeff(i);
            }
        }
        Ok(self.generator.divides(&wp))
    }

    /// Generator matrix: cyclic-shift form (`systematic = false`, row j
    /// holds x^j g(x)) or reduced row echelon form.
    pub fn generator_matrix(&self, systematic: bool) -> BinaryMatrix {
        let cyclic = self.cyclic_form_matrix();
        if !systematic {
            return cyclic;
        }
        self.systematic_form(&(0..self.n()).collect::<Vec<_>>()).matrix
    }

    fn cyclic_form_matrix(&self) -> BinaryMatrix {
        let n = self.n();
        let k = self.dimension;
        let mut m = BinaryMatrix::zeros(k, n);
        let gdeg = n - k;
        for j in 0..k {
            for e in 0..=gdeg {
                if self.generator.coeff(e) {
                    m.set(j, e + j, true);
                }
            }
        }
        m
    }

    /// Row reduction with an explicit pivot-column preference order;
    /// the pivot record doubles as the information set.
    pub fn systematic_form(&self, column_preference: &[usize]) -> SystematicForm {
        let mut matrix = self.cyclic_form_matrix();
        let pivots = matrix.rref_by_preference(column_preference);
        debug_assert_eq!(pivots.len(), self.dimension);
        SystematicForm { matrix, pivots }
    }

    /// The dual code: defining set -(Z_n \ T) mod n, equivalently the
    /// reciprocal of the check polynomial.
    pub fn dual(&self) -> Self {
        let n = self.ctx.n();
        let t_dual = DefiningSet::from_residues(
            n,
            (0..n)
                .filter(|&i| !self.defining_set.contains(i))
                .map(|i| (n - i) % n),
        );
        let dual = Self::from_defining_set(Arc::clone(&self.ctx), t_dual)
            .expect("negated complement of a conjugate-closed set is conjugate-closed");
        // The matrix-level cross-check is quadratic; keep it to sizes
        // where it is free.
        debug_assert!(self.n() > 1024 || dual_orthogonality_spot_check(self, &dual));
        dual
    }

    /// The even-weight subcode: defining set T with 0 adjoined,
    /// dimension k - 1. Errors if the code is already even-like.
    pub fn even_weight_subcode(&self) -> Result<Self> {
        if self.defining_set.contains(0) {
            return Err(Error::AlreadyEvenLike);
        }
        Self::from_defining_set(Arc::clone(&self.ctx), self.defining_set.with(0))
    }

    /// Length n + 1 view with an overall parity coordinate appended.
    pub fn extend(&self) -> ExtendedCodeView {
        let matrix = self.cyclic_form_matrix().with_parity_column();
        ExtendedCodeView {
            base: self.clone(),
            matrix,
            pairwise_even: OnceLock::new(),
        }
    }

    /// Machine-readable summary of the code and its extended view.
    pub fn record(&self) -> CodeRecord {
        let ext = self.extend();
        CodeRecord {
            n: self.n(),
            k: self.dimension,
            defining_set_size: self.defining_set.len(),
            generator_hex: self.generator.to_hex(),
            properties: CodeProperties {
                self_dual_extended: ext.is_self_dual(),
                doubly_even_extended: ext.is_doubly_even(),
            },
        }
    }
}

/// Debug-only sanity check: a handful of dual basis rows must be
/// orthogonal to the primal basis.
fn dual_orthogonality_spot_check(code: &CyclicCode, dual: &CyclicCode) -> bool {
    let g = code.generator_matrix(false);
    let h = dual.generator_matrix(false);
    g.product_with_transpose_is_zero(&h)
}

/// Systematic generator matrix plus the pivot columns that make up its
/// information set.
#[derive(Debug, Clone)]
pub struct SystematicForm {
    pub matrix: BinaryMatrix,
    pub pivots: Vec<usize>,
}

/// A cyclic code extended by one overall parity coordinate. Every row
/// of the generator matrix has even weight.
#[derive(Debug)]
pub struct ExtendedCodeView {
    base: CyclicCode,
    matrix: BinaryMatrix,
    pairwise_even: OnceLock<bool>,
}

impl ExtendedCodeView {
    pub fn base(&self) -> &CyclicCode {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.base.n() + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dimension(&self) -> usize {
        self.base.dimension()
    }

    pub fn generator_matrix(&self) -> &BinaryMatrix {
        &self.matrix
    }

    /// Self-duality: dimension is half the length and G Gᵀ = 0.
    pub fn is_self_dual(&self) -> bool {
        2 * self.dimension() == self.len() && self.pairwise_intersections_even()
    }

    /// All codeword weights divisible by 4, certified at the basis
    /// level: every row weight is 0 mod 4 and every pair of rows meets
    /// in an even number of coordinates. In characteristic 2 this
    /// suffices for the whole code.
    pub fn is_doubly_even(&self) -> bool {
        (0..self.matrix.rows()).all(|i| self.matrix.row_weight(i).is_multiple_of(4))
            && self.pairwise_intersections_even()
    }

    fn pairwise_intersections_even(&self) -> bool {
        *self
            .pairwise_even
            .get_or_init(|| pairwise_even(&self.matrix, cfg!(feature = "parallel")))
    }
}

fn and_weight(a: &[u64], b: &[u64]) -> u64 {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as u64).sum()
}

#[cfg(feature = "parallel")]
fn pairwise_even(m: &BinaryMatrix, parallel: bool) -> bool {
    use rayon::prelude::*;
    let check_row = |i: usize| (i..m.rows()).all(|j| and_weight(m.row(i), m.row(j)).is_multiple_of(2));
    if parallel {
        (0..m.rows()).into_par_iter().all(check_row)
    } else {
        (0..m.rows()).all(check_row)
    }
}

#[cfg(not(feature = "parallel"))]
fn pairwise_even(m: &BinaryMatrix, _parallel: bool) -> bool {
    (0..m.rows()).all(|i| (i..m.rows()).all(|j| and_weight(m.row(i), m.row(j)) % 2 == 0))
}

/// JSON-facing summary record.
#[derive(Debug, Clone, Serialize)]
pub struct CodeRecord {
    pub n: usize,
    pub k: usize,
    pub defining_set_size: u64,
    pub generator_hex: String,
    pub properties: CodeProperties,
}

#[derive(Debug, Clone, Serialize)]
pub struct CodeProperties {
    pub self_dual_extended: bool,
    pub doubly_even_extended: bool,
}
