//! Exact and certified minimum-distance computation.
//!
//! [`exhaustive_min_weight`] walks all 2^k codewords in Gray-code
//! order and is the ground-truth oracle for small dimensions.
//! [`brouwer_zimmermann`] certifies larger codes by enumerating
//! low-weight messages over a chain of information sets, growing a
//! proven lower bound round by round until it meets the best witness.

mod bz;
mod engine;

pub use bz::{brouwer_zimmermann, brouwer_zimmermann_with, BzOptions};

use serde::{Deserialize, Serialize};

use crate::cyclic::{BitVec, CyclicCode};
use crate::error::{Error, Result};

use engine::{gray_span_scan, pack_rows, Minima, Progress};

/// Restricts which codeword weights a search minimizes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityFilter {
    All,
    OddOnly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateStatus {
    /// lower == upper: the distance is exact.
    Certified,
    /// The work budget ran out; `lower..=upper` brackets the distance.
    Partial,
}

/// Outcome of a distance computation. The witness attains `upper` and
/// lies in the code; `lower` is proven for every nonzero codeword.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DistanceCertificate {
    pub n: usize,
    pub k: usize,
    pub lower: u64,
    pub upper: u64,
    pub status: CertificateStatus,
    pub witness_hex: String,
    pub evaluations: u64,
    pub seconds: f64,
    #[serde(skip, default = "empty_witness")]
    pub witness: BitVec,
}

fn empty_witness() -> BitVec {
    BitVec::zeros(0)
}

impl DistanceCertificate {
    pub fn is_certified(&self) -> bool {
        self.status == CertificateStatus::Certified
    }

    /// Rehydrates the witness from its hex form (after deserializing).
    pub fn decode_witness(&mut self) {
        if self.witness.len() != self.n {
            if let Some(poly) = crate::gf2poly::BinaryPolynomial::from_hex(&self.witness_hex) {
                let mut words = vec![0u64; self.n.div_ceil(64)];
                let limbs = poly.limbs();
                let take = limbs.len().min(words.len());
                words[..take].copy_from_slice(&limbs[..take]);
                self.witness = BitVec::from_words(self.n, words);
            }
        }
    }
}

/// Controls for the exhaustive engine.
#[derive(Debug, Clone)]
pub struct ExhaustiveOptions {
    /// Refuse dimensions above this (2^k words get enumerated).
    pub dimension_cap: usize,
    pub parallel: bool,
    /// Log a progress line every this many evaluations; 0 disables.
    pub progress_every: u64,
}

impl Default for ExhaustiveOptions {
    fn default() -> Self {
        Self {
            dimension_cap: 28,
            parallel: cfg!(feature = "parallel"),
            progress_every: 100_000_000,
        }
    }
}

/// Exact minimum weight (optionally over odd-weight words only) by
/// enumerating all 2^k codewords with single-row Gray updates.
pub fn exhaustive_min_weight(code: &CyclicCode, parity: ParityFilter) -> Result<DistanceCertificate> {
    exhaustive_min_weight_with(code, parity, &ExhaustiveOptions::default())
}

pub fn exhaustive_min_weight_with(
    code: &CyclicCode,
    parity: ParityFilter,
    opts: &ExhaustiveOptions,
) -> Result<DistanceCertificate> {
    let k = code.dimension();
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    if k > opts.dimension_cap {
        return Err(Error::DimensionAboveCap {
            k,
            cap: opts.dimension_cap,
        });
    }
    if parity == ParityFilter::OddOnly && code.defining_set().contains(0) {
        return Err(Error::AlreadyEvenLike);
    }
    let started = std::time::Instant::now();
    let matrix = code.generator_matrix(false);
    let progress = Progress::new(opts.progress_every, "exhaustive scan");
    let best = dispatch_gray(&matrix, opts.parallel, &progress);
    let n = code.n();
    let (weight, words) = match parity {
        ParityFilter::All => (best.any, best.any_words),
        ParityFilter::OddOnly => (best.odd, best.odd_words),
    };
    debug_assert_ne!(weight, u32::MAX, "a nonzero code has nonzero words");
    let witness = BitVec::from_words(n, trimmed(words, n));
    debug_assert_eq!(witness.weight(), weight as u64);
    debug_assert!(code.contains(&witness).unwrap_or(false));
    Ok(DistanceCertificate {
        n,
        k,
        lower: weight as u64,
        upper: weight as u64,
        status: CertificateStatus::Certified,
        witness_hex: witness.to_hex(),
        evaluations: (1u64 << k) - 1,
        seconds: started.elapsed().as_secs_f64(),
        witness,
    })
}

/// Width-erased minima: the fixed-width kernels run behind a dispatch
/// on the row stride.
pub(crate) struct ErasedMinima {
    pub any: u32,
    pub any_words: Vec<u64>,
    pub odd: u32,
    pub odd_words: Vec<u64>,
}

impl<const W: usize> From<Minima<W>> for ErasedMinima {
    fn from(m: Minima<W>) -> Self {
        Self {
            any: m.any,
            any_words: m.any_word.to_vec(),
            odd: m.odd,
            odd_words: m.odd_word.to_vec(),
        }
    }
}

fn trimmed(mut words: Vec<u64>, n: usize) -> Vec<u64> {
    words.truncate(n.div_ceil(64));
    words.resize(n.div_ceil(64), 0);
    words
}

fn dispatch_gray(matrix: &crate::cyclic::BinaryMatrix, parallel: bool, progress: &Progress) -> ErasedMinima {
    macro_rules! go {
        ($w:literal) => {{
            let rows = pack_rows::<$w>(matrix);
            gray_span_scan::<$w, true>(&rows, parallel, progress).into()
        }};
    }
    match matrix.stride() {
        1 => go!(1),
        2 => go!(2),
        3..=4 => go!(4),
        5..=8 => go!(8),
        9..=16 => go!(16),
        _ => gray_span_scan_dyn(matrix, progress),
    }
}

/// Fallback for very long codes; the exhaustive engine is rarely the
/// right tool there, but stays correct.
fn gray_span_scan_dyn(matrix: &crate::cyclic::BinaryMatrix, progress: &Progress) -> ErasedMinima {
    let k = matrix.rows() as u32;
    let stride = matrix.stride();
    let mut word = vec![0u64; stride];
    let mut best = ErasedMinima {
        any: u32::MAX,
        any_words: vec![0; stride],
        odd: u32::MAX,
        odd_words: vec![0; stride],
    };
    for i in 1u64..1 << k {
        let row = matrix.row(i.trailing_zeros() as usize);
        let mut w = 0u32;
        for (a, b) in word.iter_mut().zip(row) {
            *a ^= b;
            w += a.count_ones();
        }
        if w < best.any {
            best.any = w;
            best.any_words.copy_from_slice(&word);
        }
        if w & 1 == 1 && w < best.odd {
            best.odd = w;
            best.odd_words.copy_from_slice(&word);
        }
    }
    progress.add((1u64 << k) - 1);
    best
}

/// Smallest codeword weight found by sampling `trials` random
/// information sets and reading off the weight-1 and weight-2 message
/// codewords. Reproducible: trial j draws from a stream-j ChaCha
/// generator seeded with `seed`, so the result is independent of
/// thread interleaving and trial order.
pub fn random_information_set_upper(code: &CyclicCode, trials: u64, seed: u64) -> Result<u64> {
    random_information_set_upper_with(code, trials, seed, cfg!(feature = "parallel"))
        .map(|(w, _, _)| w as u64)
}

pub fn random_information_set_upper_with(
    code: &CyclicCode,
    trials: u64,
    seed: u64,
    parallel: bool,
) -> Result<(u32, BitVec, u64)> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    if code.dimension() == 0 {
        return Err(Error::ZeroDimension);
    }
    let run = |t: u64| -> (u32, BitVec) { one_random_trial(code, seed, t) };
    let (weight, witness) = reduce_trials(trials, run, parallel);
    let k = code.dimension() as u64;
    let evals = trials * (k + k * (k - 1) / 2);
    debug_assert!(code.contains(&witness).unwrap_or(false));
    Ok((weight, witness, evals))
}

fn one_random_trial(code: &CyclicCode, seed: u64, trial: u64) -> (u32, BitVec) {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut perm: Vec<usize> = (0..code.n()).collect();
    perm.shuffle(&mut rng);
    let sys = code.systematic_form(&perm);
    let m = &sys.matrix;
    let k = m.rows();
    let mut best = (u32::MAX, 0usize, usize::MAX);
    for i in 0..k {
        let w = m.row_weight(i) as u32;
        if w < best.0 {
            best = (w, i, usize::MAX);
        }
    }
    for i in 0..k {
        let ri = m.row(i);
        for j in i + 1..k {
            let w: u32 = ri
                .iter()
                .zip(m.row(j))
                .map(|(a, b)| (a ^ b).count_ones())
                .sum();
            if w < best.0 {
                best = (w, i, j);
            }
        }
    }
    let mut witness = m.row_vec(best.1);
    if best.2 != usize::MAX {
        witness.xor_assign(&m.row_vec(best.2));
    }
    (best.0, witness)
}

#[cfg(feature = "parallel")]
fn reduce_trials<F>(trials: u64, run: F, parallel: bool) -> (u32, BitVec)
where
    F: Fn(u64) -> (u32, BitVec) + Sync,
{
    use rayon::prelude::*;
    let pick = |a: (u32, u64, BitVec), b: (u32, u64, BitVec)| {
        if (b.0, b.1) < (a.0, a.1) {
            b
        } else {
            a
        }
    };
    let ranked = |t: u64| {
        let (w, v) = run(t);
        (w, t, v)
    };
    let best = if parallel {
        (0..trials)
            .into_par_iter()
            .map(ranked)
            .reduce_with(pick)
            .expect("at least one trial")
    } else {
        (0..trials).map(ranked).reduce(pick).expect("at least one trial")
    };
    (best.0, best.2)
}

#[cfg(not(feature = "parallel"))]
fn reduce_trials<F>(trials: u64, run: F, _parallel: bool) -> (u32, BitVec)
where
    F: Fn(u64) -> (u32, BitVec) + Sync,
{
    let pick = |a: (u32, u64, BitVec), b: (u32, u64, BitVec)| {
        if (b.0, b.1) < (a.0, a.1) {
            b
        } else {
            a
        }
    };
    let ranked = |t: u64| {
        let (w, v) = run(t);
        (w, t, v)
    };
    let best = (0..trials).map(ranked).reduce(pick).expect("at least one trial");
    (best.0, best.2)
}

/// Exact minimum odd weight when the dimension permits exhaustion;
/// otherwise a budgeted certified search whose partial status is
/// carried in the certificate.
pub fn min_odd_weight(code: &CyclicCode) -> Result<DistanceCertificate> {
    if code.defining_set().contains(0) {
        return Err(Error::AlreadyEvenLike);
    }
    let exhaustive_opts = ExhaustiveOptions::default();
    if code.dimension() <= exhaustive_opts.dimension_cap {
        exhaustive_min_weight_with(code, ParityFilter::OddOnly, &exhaustive_opts)
    } else {
        brouwer_zimmermann_with(
            code,
            &BzOptions {
                parity: ParityFilter::OddOnly,
                ..Default::default()
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cosets::{weight_defining_set, DefiningSet};
    use crate::gf2poly::FieldContext;
    use std::sync::Arc;

    fn code(m: u32, t: &[u64]) -> CyclicCode {
        let ctx = Arc::new(FieldContext::new(m).unwrap());
        let n = ctx.n();
        CyclicCode::from_defining_set(ctx, DefiningSet::from_residues(n, t.iter().copied()))
            .unwrap()
    }

    #[test]
    fn hamming_distance_three() {
        let cert = exhaustive_min_weight(&code(3, &[1, 2, 4]), ParityFilter::All).unwrap();
        assert_eq!((cert.lower, cert.upper), (3, 3));
        assert!(cert.is_certified());
        assert_eq!(cert.witness.weight(), 3);
        assert_eq!(cert.evaluations, 15);
    }

    #[test]
    fn simplex_distance_four() {
        let cert = exhaustive_min_weight(&code(3, &[0, 1, 2, 4]), ParityFilter::All).unwrap();
        assert_eq!(cert.upper, 4);
    }

    #[test]
    fn duadic_m5_distance_and_odd_distance() {
        let t = weight_defining_set(6, 5, &[0, 1, 2]).unwrap();
        let ctx = Arc::new(FieldContext::new(5).unwrap());
        let c = CyclicCode::from_defining_set(ctx, t).unwrap();
        let cert = exhaustive_min_weight(&c, ParityFilter::All).unwrap();
        assert!(cert.upper >= 5);
        let odd = exhaustive_min_weight(&c, ParityFilter::OddOnly).unwrap();
        assert!(odd.upper * odd.upper - odd.upper + 1 >= 31);
        assert!(odd.upper % 2 == 1);
        assert!(odd.upper >= cert.upper);
    }

    #[test]
    fn odd_filter_rejects_even_codes() {
        let c = code(3, &[0]);
        assert!(matches!(
            exhaustive_min_weight(&c, ParityFilter::OddOnly),
            Err(Error::AlreadyEvenLike)
        ));
    }

    #[test]
    fn dimension_cap_enforced() {
        let c = code(5, &[0]);
        let opts = ExhaustiveOptions {
            dimension_cap: 10,
            ..Default::default()
        };
        assert!(matches!(
            exhaustive_min_weight_with(&c, ParityFilter::All, &opts),
            Err(Error::DimensionAboveCap { .. })
        ));
    }

    #[test]
    fn min_odd_weight_examples() {
        let cert = min_odd_weight(&code(3, &[1, 2, 4])).unwrap();
        assert_eq!(cert.upper, 3);
        // All-ones word caps the odd minimum at n.
        let t = weight_defining_set(6, 5, &[0, 3, 4]).unwrap();
        let ctx = Arc::new(FieldContext::new(5).unwrap());
        let c = CyclicCode::from_defining_set(ctx, t).unwrap();
        let cert = min_odd_weight(&c).unwrap();
        assert!(cert.upper <= 31);
        assert!(cert.upper % 2 == 1);
    }

    #[test]
    fn random_upper_is_deterministic_and_sound() {
        let t = weight_defining_set(6, 5, &[0, 1, 3]).unwrap();
        let ctx = Arc::new(FieldContext::new(5).unwrap());
        let c = CyclicCode::from_defining_set(ctx, t).unwrap();
        let a = random_information_set_upper(&c, 50, 7).unwrap();
        let b = random_information_set_upper(&c, 50, 7).unwrap();
        assert_eq!(a, b);
        // Upper bound really is a codeword weight, hence at least d.
        let exact = exhaustive_min_weight(&c, ParityFilter::All).unwrap();
        assert!(a >= exact.upper);
        // Sequential and parallel paths agree.
        let (seq, _, _) = random_information_set_upper_with(&c, 50, 7, false).unwrap();
        assert_eq!(seq as u64, a);
        assert!(random_information_set_upper(&c, 0, 1).is_err());
    }

    #[test]
    fn certificate_json_round_trip() {
        let cert = exhaustive_min_weight(&code(3, &[1, 2, 4]), ParityFilter::All).unwrap();
        let json = serde_json::to_string(&cert).unwrap();
        let mut back: DistanceCertificate = serde_json::from_str(&json).unwrap();
        back.decode_witness();
        assert_eq!(back.upper, cert.upper);
        assert_eq!(back.witness_hex, cert.witness_hex);
        assert_eq!(back.witness, cert.witness);
        assert!(json.contains("\"status\":\"certified\""));
    }
}
