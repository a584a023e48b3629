//! Combinatorics in Z_n for n = 2^m - 1: 2-cyclotomic cosets, base-2
//! weight classes, the weight-class defining sets T[r,m,S], and the
//! splitting scan that finds duadic pairs.

use serde::Serialize;

use crate::error::{Error, Result};

/// Residues below this modulus are kept as sorted arrays; defining
/// sets over larger moduli switch to a bitmap.
const BITMAP_THRESHOLD: u64 = 1 << 20;

/// Orbit of a residue under doubling mod n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    n: u64,
    members: Vec<u64>,
}

impl CyclotomicCoset {
    /// Smallest member.
    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// Number of ones in the binary expansion; the base-2 weight w_2(i).
pub fn base2_weight(i: u64) -> u32 {
    i.count_ones()
}

/// The 2-cyclotomic coset of s modulo odd n.
pub fn cyclotomic_coset(s: u64, n: u64) -> Result<CyclotomicCoset> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    let s = s % n;
    let mut members = vec![s];
    let mut cur = s * 2 % n;
    while cur != s {
        members.push(cur);
        cur = cur * 2 % n;
    }
    members.sort_unstable();
    Ok(CyclotomicCoset { n, members })
}

/// All 2-cyclotomic cosets mod n, ordered by representative. Their
/// sizes sum to n.
pub fn all_cosets(n: u64) -> Result<Vec<CyclotomicCoset>> {
    if n.is_multiple_of(2) {
        return Err(Error::EvenModulus(n));
    }
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let coset = cyclotomic_coset(s, n)?;
        for &x in coset.members() {
            seen[x as usize] = true;
        }
        out.push(coset);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum SetRepr {
    Sorted(Vec<u64>),
    Bitmap { words: Vec<u64>, count: u64 },
}

/// A subset of Z_n identifying the roots of a cyclic code. Conjugate
/// closure (closure under doubling) is required by code constructors
/// but not by the container itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    n: u64,
    repr: SetRepr,
}

impl DefiningSet {
    /// Builds a set over Z_n from arbitrary residues (deduplicated).
    pub fn from_residues(n: u64, residues: impl IntoIterator<Item = u64>) -> Self {
        if n < BITMAP_THRESHOLD {
            let mut members: Vec<u64> = residues.into_iter().map(|i| i % n).collect();
            members.sort_unstable();
            members.dedup();
            Self {
                n,
                repr: SetRepr::Sorted(members),
            }
        } else {
            let mut words = vec![0u64; (n as usize).div_ceil(64)];
            let mut count = 0u64;
            for i in residues {
                let i = (i % n) as usize;
                if words[i / 64] >> (i % 64) & 1 == 0 {
                    words[i / 64] |= 1 << (i % 64);
                    count += 1;
                }
            }
            Self {
                n,
                repr: SetRepr::Bitmap { words, count },
            }
        }
    }

    pub fn empty(n: u64) -> Self {
        Self::from_residues(n, std::iter::empty())
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn len(&self) -> u64 {
        match &self.repr {
            SetRepr::Sorted(v) => v.len() as u64,
            SetRepr::Bitmap { count, .. } => *count,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn contains(&self, i: u64) -> bool {
        let i = i % self.n;
        match &self.repr {
            SetRepr::Sorted(v) => v.binary_search(&i).is_ok(),
            SetRepr::Bitmap { words, .. } => words[i as usize / 64] >> (i % 64) & 1 == 1,
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        let (sorted, words): (Option<&[u64]>, Option<&[u64]>) = match &self.repr {
            SetRepr::Sorted(v) => (Some(v), None),
            SetRepr::Bitmap { words, .. } => (None, Some(words)),
        };
        sorted
            .into_iter()
            .flatten()
            .copied()
            .chain(words.into_iter().flat_map(|ws| {
                ws.iter().enumerate().flat_map(|(wi, &w)| {
                    (0..64)
                        .filter(move |b| w >> b & 1 == 1)
                        .map(move |b| (wi * 64 + b) as u64)
                })
            }))
    }

    pub fn members(&self) -> Vec<u64> {
        self.iter().collect()
    }

    /// Membership bitmap, one bit per residue; used by the bound scans.
    pub fn to_bitmap(&self) -> Vec<u64> {
        match &self.repr {
            SetRepr::Bitmap { words, .. } => words.clone(),
            SetRepr::Sorted(v) => {
                let mut words = vec![0u64; (self.n as usize).div_ceil(64)];
                for &i in v {
                    words[i as usize / 64] |= 1 << (i % 64);
                }
                words
            }
        }
    }

    /// True iff membership is preserved by doubling mod n.
    pub fn is_conjugate_closed(&self) -> bool {
        self.iter().all(|i| self.contains(i * 2 % self.n))
    }

    /// First member whose double is missing, if any.
    pub fn conjugate_closure_witness(&self) -> Option<u64> {
        self.iter().find(|&i| !self.contains(i * 2 % self.n))
    }

    /// The complement Z_n \ self.
    pub fn complement(&self) -> Self {
        Self::from_residues(self.n, (0..self.n).filter(|&i| !self.contains(i)))
    }

    /// Set union.
    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        Self::from_residues(self.n, self.iter().chain(other.iter()))
    }

    /// Inserts one residue.
    pub fn with(&self, i: u64) -> Self {
        Self::from_residues(self.n, self.iter().chain(std::iter::once(i % self.n)))
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        let (small, large) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        small.iter().all(|i| !large.contains(i))
    }
}

impl Serialize for DefiningSet {
    /// Serializes as the sorted member array.
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// A splitting of Z_n: two conjugate-closed halves of Z_n \ {0}
/// swapped by multiplication with the unit mu.
#[derive(Debug, Clone)]
pub struct Splitting {
    pub s1: DefiningSet,
    pub s2: DefiningSet,
    pub mu: u64,
}

impl Splitting {
    pub fn new(s1: DefiningSet, s2: DefiningSet, mu: u64) -> Result<Self> {
        if !is_splitting(&s1, &s2, mu) {
            return Err(Error::NotASplitting(s1.n()));
        }
        Ok(Self { s1, s2, mu })
    }
}

/// The weight-class defining set T[r,m,S] =
/// {1 <= i <= n-1 : w_2(i) mod r in S} over n = 2^m - 1.
///
/// Conjugate-closed by construction: doubling mod n rotates the m-bit
/// expansion and so preserves the base-2 weight.
pub fn weight_defining_set(r: u32, m: u32, s: &[u32]) -> Result<DefiningSet> {
    if m < 3 {
        return Err(Error::WeightSetDegreeTooSmall(m));
    }
    if m > 32 {
        return Err(Error::UnsupportedDegree(m));
    }
    let classes = normalize_classes(r, s)?;
    let n = (1u64 << m) - 1;
    let mut mask = 0u64;
    for &c in &classes {
        // Relevant weights for 1..=n-1 are 1..=m-1.
        let mut w = c;
        if w == 0 {
            w += r;
        }
        while w < m {
            mask |= 1 << w;
            w += r;
        }
    }
    Ok(DefiningSet::from_residues(
        n,
        (1..n).filter(|&i| mask >> base2_weight(i) & 1 == 1),
    ))
}

fn normalize_classes(r: u32, s: &[u32]) -> Result<Vec<u32>> {
    if r < 2 {
        return Err(Error::DegenerateWeightClasses { r, got: s.to_vec() });
    }
    let mut classes: Vec<u32> = s.to_vec();
    classes.sort_unstable();
    classes.dedup();
    if classes.is_empty()
        || classes.len() as u32 >= r
        || classes.iter().any(|&c| c >= r)
    {
        return Err(Error::DegenerateWeightClasses { r, got: s.to_vec() });
    }
    Ok(classes)
}

/// The complement of S inside Z_r, sorted.
pub fn complement_classes(r: u32, s: &[u32]) -> Vec<u32> {
    (0..r).filter(|c| !s.contains(c)).collect()
}

/// {1 <= i <= n-1 : w_2(i) <= max_weight} over n = 2^m - 1: the
/// defining set of the punctured Reed-Muller code of order
/// m - max_weight - 1.
pub fn low_weight_defining_set(m: u32, max_weight: u32) -> Result<DefiningSet> {
    if m < 3 {
        return Err(Error::WeightSetDegreeTooSmall(m));
    }
    if m > 32 {
        return Err(Error::UnsupportedDegree(m));
    }
    let n = (1u64 << m) - 1;
    Ok(DefiningSet::from_residues(
        n,
        (1..n).filter(|&i| base2_weight(i) <= max_weight),
    ))
}

/// {u * t mod n : t in T} for a unit u.
pub fn scale_set(t: &DefiningSet, u: u64) -> Result<DefiningSet> {
    let n = t.n();
    let u = u % n;
    if gcd(u, n) != 1 {
        return Err(Error::NotAUnit { u, n });
    }
    Ok(DefiningSet::from_residues(
        n,
        t.iter().map(|i| mulmod(i, u, n)),
    ))
}

/// True iff (s1, s2, mu) is a splitting of Z_n: disjoint conjugate-
/// closed halves covering Z_n \ {0}, swapped by the unit mu.
pub fn is_splitting(s1: &DefiningSet, s2: &DefiningSet, mu: u64) -> bool {
    let n = s1.n();
    if s2.n() != n || gcd(mu % n, n) != 1 {
        return false;
    }
    if s1.len() + s2.len() != n - 1 || s1.contains(0) || s2.contains(0) {
        return false;
    }
    if !s1.is_disjoint(s2) {
        return false;
    }
    if !s1.is_conjugate_closed() || !s2.is_conjugate_closed() {
        return false;
    }
    // Union is forced by the cardinality, disjointness, and 0-freeness
    // checks above; what remains is the mu swap.
    s1.iter().all(|i| s2.contains(mulmod(i, mu, n))) && s2.iter().all(|i| s1.contains(mulmod(i, mu, n)))
}

/// One duadic pair found by the scan, keyed by the lexicographically
/// smaller of (S, complement).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub r: u32,
    pub m: u32,
    pub s: Vec<u32>,
    pub s_bar: Vec<u32>,
    pub mu: u64,
}

/// Scan controls. `mu_any` widens the swap-unit search from -1 to all
/// units mod n, reporting the smallest unit that works.
#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub mu_any: bool,
    pub parallel: bool,
}

impl Default for ScanOptions {
    fn default() -> Self {
        Self {
            mu_any: false,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

/// Finds all size-r/2 class sets S (up to complementation) for which
/// (T[r,m,S], T[r,m,S-bar], mu) splits Z_n, with mu = -1. Results are
/// ordered by lexicographic S.
pub fn duadic_scan(r: u32, m: u32) -> Result<Vec<ScanRecord>> {
    duadic_scan_with(r, m, &ScanOptions::default())
}

pub fn duadic_scan_with(r: u32, m: u32, opts: &ScanOptions) -> Result<Vec<ScanRecord>> {
    if !r.is_multiple_of(2) || m % 2 != 1 {
        return Err(Error::ScanParity { r, m });
    }
    if m < 3 {
        return Err(Error::WeightSetDegreeTooSmall(m));
    }
    let candidates: Vec<Vec<u32>> = half_subsets(r)
        .into_iter()
        .filter(|s| *s <= complement_classes(r, s))
        .collect();
    let check = |s: &Vec<u32>| -> Result<Option<ScanRecord>> {
        let s_bar = complement_classes(r, s);
        let t1 = weight_defining_set(r, m, s)?;
        let t2 = weight_defining_set(r, m, &s_bar)?;
        let n = t1.n();
        let mu = if opts.mu_any {
            match smallest_swap_unit(&t1, &t2) {
                Some(mu) => mu,
                None => return Ok(None),
            }
        } else {
            n - 1
        };
        Ok(is_splitting(&t1, &t2, mu).then(|| ScanRecord {
            r,
            m,
            s: s.clone(),
            s_bar,
            mu,
        }))
    };
    let results: Vec<Option<ScanRecord>> = run_scan(&candidates, check, opts.parallel)?;
    Ok(results.into_iter().flatten().collect())
}

#[cfg(feature = "parallel")]
fn run_scan<F>(candidates: &[Vec<u32>], check: F, parallel: bool) -> Result<Vec<Option<ScanRecord>>>
where
    F: Fn(&Vec<u32>) -> Result<Option<ScanRecord>> + Sync + Send,
{
    use rayon::prelude::*;
    if parallel {
        // Candidate order is preserved by the indexed collect, so the
        // merge is deterministic.
        candidates.par_iter().map(check).collect()
    } else {
        candidates.iter().map(check).collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn run_scan<F>(candidates: &[Vec<u32>], check: F, _parallel: bool) -> Result<Vec<Option<ScanRecord>>>
where
    F: Fn(&Vec<u32>) -> Result<Option<ScanRecord>> + Sync + Send,
{
    candidates.iter().map(check).collect()
}

fn half_subsets(r: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << r {
        if mask.count_ones() == r / 2 {
            out.push((0..r).filter(|&c| mask >> c & 1 == 1).collect());
        }
    }
    out.sort();
    out
}

/// Smallest unit mu with mu*s1 = s2 and mu*s2 = s1, if any. Rejection
/// is O(1) expected per candidate, so the scan is near-linear in n.
fn smallest_swap_unit(s1: &DefiningSet, s2: &DefiningSet) -> Option<u64> {
    let n = s1.n();
    if s1.len() != s2.len() {
        return None;
    }
    (1..n)
        .filter(|&mu| gcd(mu, n) == 1)
        .find(|&mu| {
            s1.iter().all(|i| s2.contains(mulmod(i, mu, n)))
                && s2.iter().all(|i| s1.contains(mulmod(i, mu, n)))
        })
}

/// Weight-class pairs (canonical representative per complement pair)
/// whose codes are known to split Z_{2^m-1} for r = 6, keyed by the
/// residue of odd m mod 6. Reference data for the scan verifier.
pub fn reference_splitting_classes(m: u32) -> Option<[[u32; 3]; 4]> {
    match m % 6 {
        1 => Some([[0, 2, 3], [0, 2, 4], [0, 3, 5], [0, 4, 5]]),
        3 => Some([[0, 1, 4], [0, 1, 5], [0, 2, 4], [0, 2, 5]]),
        5 => Some([[0, 1, 2], [0, 1, 3], [0, 2, 4], [0, 3, 4]]),
        _ => None,
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn mulmod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

/// Inverse of a unit mod n.
pub(crate) fn modinv(u: u64, n: u64) -> Option<u64> {
    let (mut old_r, mut r) = (u as i128, n as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(n as i128) as u64)
}
