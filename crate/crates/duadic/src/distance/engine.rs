//! Enumeration kernels shared by the distance engines.
//!
//! Codewords are fixed-width arrays of u64 words so the inner loops
//! stay in registers. Every kernel exists in a sequential form and, in
//! parallel builds, a sharded rayon form with a deterministic
//! min-reduction: candidates compare by (weight, shard rank), so the
//! result is independent of thread interleaving.

use std::sync::atomic::{AtomicU64, Ordering};

#[inline(always)]
pub(crate) fn xor_words<const W: usize>(a: [u64; W], b: &[u64; W]) -> [u64; W] {
    let mut out = a;
    for i in 0..W {
        out[i] ^= b[i];
    }
    out
}

#[inline(always)]
pub(crate) fn word_weight<const W: usize>(a: &[u64; W]) -> u32 {
    a.iter().map(|w| w.count_ones()).sum()
}

/// Running minima over enumerated codewords: the lightest word seen,
/// and the lightest odd-weight word when odd tracking is on. `rank`
/// orders shards so that reductions break weight ties toward the
/// earliest shard in enumeration order.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Minima<const W: usize> {
    rank: u64,
    pub any: u32,
    any_rank: u64,
    pub any_word: [u64; W],
    pub odd: u32,
    odd_rank: u64,
    pub odd_word: [u64; W],
}

impl<const W: usize> Minima<W> {
    pub fn new(rank: u64) -> Self {
        Self {
            rank,
            any: u32::MAX,
            any_rank: u64::MAX,
            any_word: [0; W],
            odd: u32::MAX,
            odd_rank: u64::MAX,
            odd_word: [0; W],
        }
    }

    /// Records a nonzero codeword. Strict improvement only, so the
    /// first minimal word in shard order is kept.
    #[inline(always)]
    pub fn consider<const ODD: bool>(&mut self, word: [u64; W]) {
        let w = word_weight(&word);
        if w < self.any {
            self.any = w;
            self.any_rank = self.rank;
            self.any_word = word;
        }
        if ODD && w & 1 == 1 && w < self.odd {
            self.odd = w;
            self.odd_rank = self.rank;
            self.odd_word = word;
        }
    }

    pub fn merge(mut self, other: Self) -> Self {
        if (other.any, other.any_rank) < (self.any, self.any_rank) {
            self.any = other.any;
            self.any_rank = other.any_rank;
            self.any_word = other.any_word;
        }
        if (other.odd, other.odd_rank) < (self.odd, self.odd_rank) {
            self.odd = other.odd;
            self.odd_rank = other.odd_rank;
            self.odd_word = other.odd_word;
        }
        self.rank = self.rank.min(other.rank);
        self
    }
}

/// Progress reporting for long enumerations: shards add their
/// evaluation counts and a log line appears whenever the running total
/// crosses a multiple of `every`.
pub(crate) struct Progress {
    done: AtomicU64,
    every: u64,
    label: &'static str,
}

impl Progress {
    pub fn new(every: u64, label: &'static str) -> Self {
        Self {
            done: AtomicU64::new(0),
            every,
            label,
        }
    }

    pub fn add(&self, evals: u64) {
        if self.every == 0 {
            return;
        }
        let before = self.done.fetch_add(evals, Ordering::Relaxed);
        let after = before + evals;
        if before / self.every != after / self.every {
            log::info!("{}: {} evaluations", self.label, after);
        }
    }
}

/// All size-t index sets over rows[..hi], xored onto `acc`; the last
/// level reads rows straight into the weight check without writing
/// the accumulator back.
fn combos_from<const W: usize, const ODD: bool>(
    rows: &[[u64; W]],
    acc: [u64; W],
    t: usize,
    hi: usize,
    best: &mut Minima<W>,
) {
    if t == 1 {
        for row in &rows[..hi] {
            best.consider::<ODD>(xor_words(acc, row));
        }
        return;
    }
    for c in t - 1..hi {
        combos_from::<W, ODD>(rows, xor_words(acc, &rows[c]), t - 1, c, best);
    }
}

/// One weight class of the information-set enumeration: every message
/// of weight exactly r over the given generator rows.
pub(crate) fn enumerate_weight_class<const W: usize, const ODD: bool>(
    rows: &[[u64; W]],
    r: usize,
    parallel: bool,
    progress: &Progress,
) -> Minima<W> {
    let k = rows.len();
    debug_assert!(r >= 1 && r <= k);
    match r {
        1 => {
            let mut best = Minima::new(0);
            for row in rows {
                best.consider::<ODD>(*row);
            }
            progress.add(k as u64);
            best
        }
        2 => {
            let shards: Vec<usize> = (1..k).collect();
            let run = |(rank, &j1): (usize, &usize)| {
                let mut best = Minima::new(rank as u64);
                combos_from::<W, ODD>(rows, rows[j1], 1, j1, &mut best);
                progress.add(j1 as u64);
                best
            };
            reduce_shards(&shards, run, parallel)
        }
        _ => {
            let mut shards: Vec<(usize, usize)> = Vec::new();
            for j1 in r - 1..k {
                for j2 in r - 2..j1 {
                    shards.push((j1, j2));
                }
            }
            let run = |(rank, &(j1, j2)): (usize, &(usize, usize))| {
                let mut best = Minima::new(rank as u64);
                let acc = xor_words(rows[j1], &rows[j2]);
                combos_from::<W, ODD>(rows, acc, r - 2, j2, &mut best);
                progress.add(binomial_saturating(j2 as u64, r as u64 - 2));
                best
            };
            reduce_shards(&shards, run, parallel)
        }
    }
}

/// Every codeword in the row span, visited in Gray-code order over the
/// 2^k messages so each step is one row xor. The zero word is skipped.
pub(crate) fn gray_span_scan<const W: usize, const ODD: bool>(
    rows: &[[u64; W]],
    parallel: bool,
    progress: &Progress,
) -> Minima<W> {
    let k = rows.len() as u32;
    let total: u64 = 1u64 << k;
    let chunk_count = if parallel {
        // Enough chunks for stealing; each chunk pays one O(k) setup.
        (total >> 16).clamp(1, 1024)
    } else {
        1
    };
    let chunk_len = total / chunk_count;
    let shards: Vec<u64> = (0..chunk_count).collect();
    let run = |(rank, &chunk): (usize, &u64)| {
        let start = chunk * chunk_len;
        let end = if chunk + 1 == chunk_count {
            total
        } else {
            start + chunk_len
        };
        let mut best = Minima::new(rank as u64);
        // Codeword for the Gray code of `start`.
        let mut word = [0u64; W];
        let gray = start ^ (start >> 1);
        for b in 0..k {
            if gray >> b & 1 == 1 {
                word = xor_words(word, &rows[b as usize]);
            }
        }
        if start > 0 {
            best.consider::<ODD>(word);
        }
        for i in start + 1..end {
            word = xor_words(word, &rows[i.trailing_zeros() as usize]);
            best.consider::<ODD>(word);
        }
        progress.add(end - start);
        best
    };
    reduce_shards(&shards, run, parallel)
}

#[cfg(feature = "parallel")]
fn reduce_shards<T, F, const W: usize>(shards: &[T], run: F, parallel: bool) -> Minima<W>
where
    T: Sync,
    F: Fn((usize, &T)) -> Minima<W> + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        shards
            .par_iter()
            .enumerate()
            .map(run)
            .reduce(|| Minima::new(u64::MAX), Minima::merge)
    } else {
        shards
            .iter()
            .enumerate()
            .map(run)
            .fold(Minima::new(u64::MAX), Minima::merge)
    }
}

#[cfg(not(feature = "parallel"))]
fn reduce_shards<T, F, const W: usize>(shards: &[T], run: F, _parallel: bool) -> Minima<W>
where
    T: Sync,
    F: Fn((usize, &T)) -> Minima<W> + Sync + Send,
{
    shards
        .iter()
        .enumerate()
        .map(run)
        .fold(Minima::new(u64::MAX), Minima::merge)
}

pub(crate) fn binomial_saturating(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128);
        acc /= (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Packs matrix rows into fixed-width arrays, padding high words with
/// zeros.
pub(crate) fn pack_rows<const W: usize>(m: &crate::cyclic::BinaryMatrix) -> Vec<[u64; W]> {
    assert!(m.stride() <= W);
    (0..m.rows())
        .map(|i| {
            let mut row = [0u64; W];
            row[..m.stride()].copy_from_slice(m.row(i));
            row
        })
        .collect()
}
