//! Certified minimum distance by information-set enumeration.
//!
//! A chain of systematic generator matrices is built greedily: each
//! round of elimination pivots on columns untouched by earlier sets,
//! reusing old columns only to complete the row space (the number of
//! reused pivots is the set's rank deficiency). After enumerating all
//! messages of weight <= r over every set, any codeword not yet seen
//! has weight at least sum_j max(0, r + 1 - deficiency_j); the search
//! stops when that bound reaches the best witness weight.

use std::sync::atomic::{AtomicU64, Ordering};

use super::engine::{binomial_saturating, enumerate_weight_class, pack_rows, Progress};
use super::{
    random_information_set_upper_with, CertificateStatus, DistanceCertificate, ErasedMinima,
    ParityFilter,
};
use crate::cyclic::{BinaryMatrix, BitVec, CyclicCode};
use crate::error::{Error, Result};

/// Controls for the certified search.
#[derive(Debug, Clone)]
pub struct BzOptions {
    /// Work limit in codeword evaluations. A round never starts unless
    /// it fits, so partial results are round-aligned and deterministic.
    pub budget: u64,
    /// Random information-set trials used to seed the upper bound.
    pub seed_trials: u64,
    pub seed: u64,
    /// Minimize over all words or odd-weight words only.
    pub parity: ParityFilter,
    pub parallel: bool,
    /// Log a progress line every this many evaluations; 0 disables.
    pub progress_every: u64,
}

impl Default for BzOptions {
    fn default() -> Self {
        Self {
            budget: 100_000_000_000,
            seed_trials: 1_000,
            seed: 1,
            parity: ParityFilter::All,
            parallel: cfg!(feature = "parallel"),
            progress_every: 100_000_000,
        }
    }
}

struct InfoSet {
    matrix: BinaryMatrix,
    deficiency: u64,
}

/// Greedy chain: systematize on fresh columns while they contribute
/// any rank. Sets whose deficiency exceeds any reachable round are
/// dropped; a set only strengthens the bound from round deficiency
/// onward, and enumerating it before that is pure cost. Any subset of
/// sets yields a sound bound.
const MAX_USEFUL_DEFICIENCY: u64 = 16;

fn information_set_chain(code: &CyclicCode) -> Vec<InfoSet> {
    let n = code.n();
    let k = code.dimension();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    loop {
        let fresh: Vec<usize> = (0..n).filter(|&c| !used[c]).collect();
        if fresh.is_empty() {
            break;
        }
        let mut preference = fresh.clone();
        preference.extend((0..n).filter(|&c| used[c]));
        let sys = code.systematic_form(&preference);
        let fresh_rank = sys.pivots.iter().filter(|&&p| !used[p]).count();
        if fresh_rank == 0 {
            break;
        }
        for &p in &sys.pivots {
            used[p] = true;
        }
        let deficiency = (k - fresh_rank) as u64;
        if deficiency > MAX_USEFUL_DEFICIENCY && !sets.is_empty() {
            continue;
        }
        sets.push(InfoSet {
            matrix: sys.matrix,
            deficiency,
        });
    }
    sets
}

/// Proven weight of any codeword not reached by messages of weight
/// <= completed_round over every information set.
fn chain_lower_bound(sets: &[InfoSet], completed_round: u64) -> u64 {
    sets.iter()
        .map(|s| (completed_round + 1).saturating_sub(s.deficiency))
        .sum()
}

/// Certified minimum distance with default options.
pub fn brouwer_zimmermann(code: &CyclicCode) -> Result<DistanceCertificate> {
    brouwer_zimmermann_with(code, &BzOptions::default())
}

pub fn brouwer_zimmermann_with(code: &CyclicCode, opts: &BzOptions) -> Result<DistanceCertificate> {
    let k = code.dimension();
    let n = code.n();
    if k == 0 {
        return Err(Error::ZeroDimension);
    }
    if opts.parity == ParityFilter::OddOnly && code.defining_set().contains(0) {
        return Err(Error::AlreadyEvenLike);
    }
    let started = std::time::Instant::now();
    let mut evaluations = 0u64;

    // Witness seeding. The enumeration also finds light words, but a
    // good starting upper bound lets certification stop at the exact
    // round where the chain bound crosses it.
    let mut best_any: (u32, BitVec) = (u32::MAX, BitVec::zeros(n));
    let mut best_odd: (u32, BitVec) = (u32::MAX, BitVec::zeros(n));
    if opts.seed_trials > 0 {
        let (w, witness, evals) =
            random_information_set_upper_with(code, opts.seed_trials, opts.seed, opts.parallel)?;
        evaluations += evals;
        record(&mut best_any, &mut best_odd, w, witness);
    }

    let sets = information_set_chain(code);
    debug_assert!(!sets.is_empty());
    let progress = Progress::new(opts.progress_every, "information-set enumeration");
    let shared_upper = AtomicU64::new(target_upper(opts.parity, &best_any, &best_odd) as u64);

    let mut completed = 0u64;
    let mut certified = false;
    for round in 1..=k as u64 {
        let lower_if_stopped = chain_lower_bound(&sets, completed);
        if lower_if_stopped >= target_upper(opts.parity, &best_any, &best_odd) as u64 {
            certified = true;
            break;
        }
        let round_cost = binomial_saturating(k as u64, round).saturating_mul(sets.len() as u64);
        if evaluations.saturating_add(round_cost) > opts.budget {
            break;
        }
        log::info!(
            "round {round}: {} evaluations over {} information sets (upper {})",
            round_cost,
            sets.len(),
            shared_upper.load(Ordering::Relaxed)
        );
        for set in &sets {
            let found = dispatch_round(&set.matrix, round as usize, opts.parallel, &progress);
            let (w, words) = (found.any, found.any_words);
            if w != u32::MAX {
                record(
                    &mut best_any,
                    &mut best_odd,
                    w,
                    BitVec::from_words(n, trim(words, n)),
                );
            }
            if found.odd != u32::MAX {
                record(
                    &mut best_any,
                    &mut best_odd,
                    found.odd,
                    BitVec::from_words(n, trim(found.odd_words, n)),
                );
            }
            shared_upper.fetch_min(
                target_upper(opts.parity, &best_any, &best_odd) as u64,
                Ordering::Relaxed,
            );
        }
        evaluations += round_cost;
        completed = round;
        if chain_lower_bound(&sets, completed) >= target_upper(opts.parity, &best_any, &best_odd) as u64 {
            certified = true;
            break;
        }
    }
    // Exhausting every round is also a certification: all messages
    // enumerated.
    if completed == k as u64 {
        certified = true;
    }

    let upper = target_upper(opts.parity, &best_any, &best_odd) as u64;
    let witness = match opts.parity {
        ParityFilter::All => best_any.1.clone(),
        ParityFilter::OddOnly => best_odd.1.clone(),
    };
    let lower = if certified {
        upper
    } else {
        chain_lower_bound(&sets, completed).max(1).min(upper)
    };
    debug_assert!(upper == u64::from(u32::MAX) || code.contains(&witness).unwrap_or(false));
    Ok(DistanceCertificate {
        n,
        k,
        lower,
        upper,
        status: if certified {
            CertificateStatus::Certified
        } else {
            CertificateStatus::Partial
        },
        witness_hex: witness.to_hex(),
        evaluations,
        seconds: started.elapsed().as_secs_f64(),
        witness,
    })
}

fn record(best_any: &mut (u32, BitVec), best_odd: &mut (u32, BitVec), w: u32, witness: BitVec) {
    if w < best_any.0 {
        *best_any = (w, witness.clone());
    }
    if w & 1 == 1 && w < best_odd.0 {
        *best_odd = (w, witness);
    }
}

fn target_upper(parity: ParityFilter, best_any: &(u32, BitVec), best_odd: &(u32, BitVec)) -> u32 {
    match parity {
        ParityFilter::All => best_any.0,
        ParityFilter::OddOnly => best_odd.0,
    }
}

fn trim(mut words: Vec<u64>, n: usize) -> Vec<u64> {
    words.truncate(n.div_ceil(64));
    words.resize(n.div_ceil(64), 0);
    words
}

fn dispatch_round(
    matrix: &BinaryMatrix,
    round: usize,
    parallel: bool,
    progress: &Progress,
) -> ErasedMinima {
    macro_rules! go {
        ($w:literal) => {{
            let rows = pack_rows::<$w>(matrix);
            enumerate_weight_class::<$w, true>(&rows, round, parallel, progress).into()
        }};
    }
    match matrix.stride() {
        1 => go!(1),
        2 => go!(2),
        3..=4 => go!(4),
        5..=8 => go!(8),
        9..=16 => go!(16),
        _ => round_dyn(matrix, round, progress),
    }
}

/// Slice-based fallback for very long codes (partial certificates at
/// large m); combinations enumerated the same way, accumulator heap-
/// allocated per recursion level.
fn round_dyn(matrix: &BinaryMatrix, round: usize, progress: &Progress) -> ErasedMinima {
    let stride = matrix.stride();
    let mut best = ErasedMinima {
        any: u32::MAX,
        any_words: vec![0; stride],
        odd: u32::MAX,
        odd_words: vec![0; stride],
    };
    let mut scratch = vec![0u64; stride * (round + 1)];
    let k = matrix.rows();
    fn rec(
        matrix: &BinaryMatrix,
        scratch: &mut Vec<u64>,
        level: usize,
        t: usize,
        hi: usize,
        best: &mut ErasedMinima,
    ) {
        let stride = matrix.stride();
        if t == 0 {
            let acc = &scratch[level * stride..(level + 1) * stride];
            let w: u32 = acc.iter().map(|x| x.count_ones()).sum();
            if w < best.any {
                best.any = w;
                best.any_words.copy_from_slice(acc);
            }
            if w & 1 == 1 && w < best.odd {
                best.odd = w;
                best.odd_words.copy_from_slice(acc);
            }
            return;
        }
        for c in t - 1..hi {
            let (head, tail) = scratch.split_at_mut((level + 1) * stride);
            let src = &head[level * stride..];
            let dst = &mut tail[..stride];
            for (d, (s, r)) in dst.iter_mut().zip(src.iter().zip(matrix.row(c))) {
                *d = s ^ r;
            }
            rec(matrix, scratch, level + 1, t - 1, c, best);
        }
    }
    rec(matrix, &mut scratch, 0, round, k, &mut best);
    progress.add(binomial_saturating(k as u64, round as u64));
    best
}
