//! Exact minimum-distance search, capability estimation and syndrome-table
//! decoding.
//!
//! The workhorse is a Gray-code scan of a code's message space: each step
//! XORs one generator row into the current codeword, so a full enumeration
//! of 2^K codewords costs 2^K word-XORs plus popcounts. The scan is
//! partitioned into contiguous Gray ranges processed by independent rayon
//! workers that share the current minimum through an atomic.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::gf2::{BitMatrix, BitVec};
use crate::symplectic::{StabilizerCode, SymplecticVector};
use crate::{Error, Result};

/// Knobs for the enumeration kernels.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Maximum number of codewords to enumerate before giving up on an
    /// exact answer.
    pub budget: u64,
    /// Worker count; `None` uses the rayon default.
    pub threads: Option<usize>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            budget: 1 << 28,
            threads: None,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: u64) -> Self {
        SearchOptions {
            budget,
            ..Default::default()
        }
    }

    fn run<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        match self.threads {
            None => f(),
            Some(t) => rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build()
                .expect("thread pool")
                .install(f),
        }
    }
}

/// Outcome of a distance scan. When `exact` is false the space was not
/// fully enumerated and `value` is only the best value seen, reported as a
/// lower-bound-only answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DistanceResult {
    pub value: usize,
    pub exact: bool,
    pub enumerated: u64,
}

const GRAY_CHUNK: u64 = 1 << 16;

/// Rows of a generator packed for scanning: X and Z halves side by side.
/// Classical codes use a zero Z half so weight = generalized weight.
struct PackedRows {
    words: usize,
    xs: Vec<u64>,
    zs: Vec<u64>,
    k: usize,
}

impl PackedRows {
    fn from_symplectic(gen: &BitMatrix, n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        let k = gen.n_rows();
        let mut xs = vec![0u64; k * words];
        let mut zs = vec![0u64; k * words];
        for i in 0..k {
            let row = gen.row(i);
            for j in 0..n {
                if row.get(j) {
                    xs[i * words + j / 64] |= 1 << (j % 64);
                }
                if row.get(n + j) {
                    zs[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        PackedRows { words, xs, zs, k }
    }

    fn from_classical(gen: &BitMatrix) -> Self {
        let n = gen.n_cols();
        let words = n.div_ceil(64).max(1);
        let k = gen.n_rows();
        let mut xs = vec![0u64; k * words];
        for i in 0..k {
            for (w, &word) in gen.row_words(i).iter().enumerate() {
                xs[i * words + w] = word;
            }
        }
        PackedRows {
            words,
            xs,
            zs: vec![0u64; k * words],
            k,
        }
    }
}

/// Membership test for the stabilizer row space, used to exclude S̄ from
/// the dual scan. Precomputed as a hash set for r <= 24, otherwise tested
/// by Gaussian reduction per candidate.
enum Membership {
    Nothing,
    Set1(HashSet<(u64, u64)>),
    SetW(HashSet<Box<[u64]>>),
    Solve {
        rows_x: Vec<Vec<u64>>,
        rows_z: Vec<Vec<u64>>,
        pivots: Vec<usize>,
        n: usize,
    },
}

const MEMBERSHIP_SET_MAX_R: usize = 24;

impl Membership {
    fn for_stabilizer(code: &StabilizerCode) -> Membership {
        let h = code.h();
        let n = code.n();
        let r = code.r();
        let packed = PackedRows::from_symplectic(&h.to_wide(), n);
        if r <= MEMBERSHIP_SET_MAX_R {
            if packed.words == 1 {
                let mut set = HashSet::with_capacity(1 << r);
                let (mut cx, mut cz) = (0u64, 0u64);
                set.insert((cx, cz));
                for i in 1u64..(1 << r) {
                    let b = i.trailing_zeros() as usize;
                    cx ^= packed.xs[b];
                    cz ^= packed.zs[b];
                    set.insert((cx, cz));
                }
                Membership::Set1(set)
            } else {
                let w = packed.words;
                let mut set = HashSet::with_capacity(1 << r);
                let mut cur = vec![0u64; 2 * w];
                set.insert(cur.clone().into_boxed_slice());
                for i in 1u64..(1 << r) {
                    let b = i.trailing_zeros() as usize;
                    for j in 0..w {
                        cur[j] ^= packed.xs[b * w + j];
                        cur[w + j] ^= packed.zs[b * w + j];
                    }
                    set.insert(cur.clone().into_boxed_slice());
                }
                Membership::SetW(set)
            }
        } else {
            let rref = h.to_wide().rref();
            let w = n.div_ceil(64).max(1);
            let mut rows_x = Vec::with_capacity(rref.rank);
            let mut rows_z = Vec::with_capacity(rref.rank);
            for i in 0..rref.rank {
                let row = rref.matrix.row(i);
                let mut x = vec![0u64; w];
                let mut z = vec![0u64; w];
                for j in 0..n {
                    if row.get(j) {
                        x[j / 64] |= 1 << (j % 64);
                    }
                    if row.get(n + j) {
                        z[j / 64] |= 1 << (j % 64);
                    }
                }
                rows_x.push(x);
                rows_z.push(z);
            }
            Membership::Solve {
                rows_x,
                rows_z,
                pivots: rref.pivot_cols,
                n,
            }
        }
    }

    #[inline]
    fn contains1(&self, cx: u64, cz: u64) -> bool {
        match self {
            Membership::Nothing => false,
            Membership::Set1(set) => set.contains(&(cx, cz)),
            Membership::SetW(_) => unreachable!("wide set with single-word scan"),
            Membership::Solve {
                rows_x,
                rows_z,
                pivots,
                n,
            } => {
                let (mut x, mut z) = (cx, cz);
                for (i, &p) in pivots.iter().enumerate() {
                    let bit = if p < *n {
                        (x >> p) & 1
                    } else {
                        (z >> (p - n)) & 1
                    };
                    if bit == 1 {
                        x ^= rows_x[i][0];
                        z ^= rows_z[i][0];
                    }
                }
                x == 0 && z == 0
            }
        }
    }

    fn contains_wide(&self, cx: &[u64], cz: &[u64]) -> bool {
        match self {
            Membership::Nothing => false,
            Membership::Set1(_) => unreachable!("single-word set with wide scan"),
            Membership::SetW(set) => {
                let mut key = Vec::with_capacity(cx.len() + cz.len());
                key.extend_from_slice(cx);
                key.extend_from_slice(cz);
                set.contains(key.as_slice())
            }
            Membership::Solve {
                rows_x,
                rows_z,
                pivots,
                n,
            } => {
                let mut x = cx.to_vec();
                let mut z = cz.to_vec();
                for (i, &p) in pivots.iter().enumerate() {
                    let c = if p < *n { p } else { p - n };
                    let word = if p < *n {
                        x[c / 64]
                    } else {
                        z[c / 64]
                    };
                    if (word >> (c % 64)) & 1 == 1 {
                        for j in 0..x.len() {
                            x[j] ^= rows_x[i][j];
                            z[j] ^= rows_z[i][j];
                        }
                    }
                }
                x.iter().all(|&w| w == 0) && z.iter().all(|&w| w == 0)
            }
        }
    }
}

struct ScanSetup<'a> {
    rows: &'a PackedRows,
    member: &'a Membership,
    best: &'a AtomicUsize,
    stop_at: usize,
}

/// Scan Gray indices `[lo, hi)` with single-word rows.
fn scan_range_w1(s: &ScanSetup, lo: u64, hi: u64) {
    let rx = &s.rows.xs;
    let rz = &s.rows.zs;
    let gray = lo ^ (lo >> 1);
    let (mut cx, mut cz) = (0u64, 0u64);
    for b in 0..s.rows.k {
        if (gray >> b) & 1 == 1 {
            cx ^= rx[b];
            cz ^= rz[b];
        }
    }
    let mut local_best = s.best.load(Ordering::Relaxed);
    macro_rules! consider {
        () => {
            let w = (cx | cz).count_ones() as usize;
            if w < local_best && !s.member.contains1(cx, cz) {
                let prev = s.best.fetch_min(w, Ordering::Relaxed);
                local_best = prev.min(w);
            }
        };
    }
    if lo != 0 {
        consider!();
    }
    let mut i = lo + 1;
    while i < hi {
        let block_end = hi.min(i.saturating_add(GRAY_CHUNK));
        while i < block_end {
            let b = i.trailing_zeros() as usize;
            cx ^= rx[b];
            cz ^= rz[b];
            consider!();
            i += 1;
        }
        local_best = local_best.min(s.best.load(Ordering::Relaxed));
        if local_best <= s.stop_at {
            return;
        }
    }
}

/// Scan Gray indices `[lo, hi)` with multi-word rows.
fn scan_range_wide(s: &ScanSetup, lo: u64, hi: u64) {
    let w = s.rows.words;
    let gray = lo ^ (lo >> 1);
    let mut cx = vec![0u64; w];
    let mut cz = vec![0u64; w];
    for b in 0..s.rows.k {
        if (gray >> b) & 1 == 1 {
            for j in 0..w {
                cx[j] ^= s.rows.xs[b * w + j];
                cz[j] ^= s.rows.zs[b * w + j];
            }
        }
    }
    let mut local_best = s.best.load(Ordering::Relaxed);
    macro_rules! consider {
        () => {
            let weight: u32 = cx.iter().zip(&cz).map(|(a, b)| (a | b).count_ones()).sum();
            let weight = weight as usize;
            if weight < local_best && !s.member.contains_wide(&cx, &cz) {
                let prev = s.best.fetch_min(weight, Ordering::Relaxed);
                local_best = prev.min(weight);
            }
        };
    }
    if lo != 0 {
        consider!();
    }
    let mut i = lo + 1;
    while i < hi {
        let block_end = hi.min(i.saturating_add(GRAY_CHUNK));
        while i < block_end {
            let b = i.trailing_zeros() as usize;
            for j in 0..w {
                cx[j] ^= s.rows.xs[b * w + j];
                cz[j] ^= s.rows.zs[b * w + j];
            }
            consider!();
            i += 1;
        }
        local_best = local_best.min(s.best.load(Ordering::Relaxed));
        if local_best <= s.stop_at {
            return;
        }
    }
}

/// Enumerate the row space of `rows` (excluding zero), tracking the minimum
/// accepted weight. `stop_at` aborts early once the minimum can no longer
/// matter to the caller.
fn min_weight_scan(
    rows: &PackedRows,
    member: &Membership,
    opts: &SearchOptions,
    stop_at: usize,
) -> DistanceResult {
    let max_weight = rows.words * 64 + 1;
    let total: u64 = if rows.k >= 63 { u64::MAX } else { 1u64 << rows.k };
    let budget = opts.budget.max(1);
    let exact_possible = total - 1 <= budget;
    let limit = if exact_possible { total } else { budget + 1 };
    let best = AtomicUsize::new(max_weight);
    let setup = ScanSetup {
        rows,
        member,
        best: &best,
        stop_at,
    };
    opts.run(|| {
        let n_chunks: u64 = if limit <= 2 * GRAY_CHUNK {
            1
        } else {
            (rayon::current_num_threads() as u64 * 8).min((limit - 1) / GRAY_CHUNK + 1)
        };
        let chunk_len = (limit - 1).div_ceil(n_chunks);
        (0..n_chunks).into_par_iter().for_each(|c| {
            let lo = 1 + c * chunk_len;
            let hi = limit.min(lo.saturating_add(chunk_len));
            if lo < hi {
                if rows.words == 1 {
                    scan_range_w1(&setup, lo, hi);
                } else {
                    scan_range_wide(&setup, lo, hi);
                }
            }
        });
    });
    let value = best.load(Ordering::Relaxed);
    DistanceResult {
        value,
        exact: exact_possible && value > stop_at,
        enumerated: limit - 1,
    }
}

/// Minimum Hamming weight of a nonzero word in the row space of `gen`.
pub fn min_weight_rowspace(gen: &BitMatrix, opts: &SearchOptions) -> Result<DistanceResult> {
    if gen.n_rows() == 0 {
        return Err(Error::InvalidDimension { k: 0 });
    }
    let rows = PackedRows::from_classical(gen);
    Ok(min_weight_scan(&rows, &Membership::Nothing, opts, 0))
}

/// Minimum distance of the classical code whose parity-check matrix is
/// `hp`, by exhaustive enumeration of its codewords.
pub fn classical_min_distance(hp: &BitMatrix, opts: &SearchOptions) -> Result<DistanceResult> {
    let gen = hp.kernel_basis();
    min_weight_rowspace(&gen, opts)
}

/// Exact quantum minimum distance: the minimum generalized weight over the
/// symplectic dual minus the stabilizer row space. For k = 0 codes the dual
/// equals the stabilizer and the minimum runs over its nonzero words.
pub fn quantum_min_distance(code: &StabilizerCode, opts: &SearchOptions) -> DistanceResult {
    quantum_min_distance_floored(code, opts, 0)
}

/// As [`quantum_min_distance`] but aborting as soon as the minimum is known
/// to be `<= stop_at`; used by searches that only care whether a candidate
/// beats the incumbent. A result with `exact: false` either ran out of
/// budget or hit the floor.
pub fn quantum_min_distance_floored(
    code: &StabilizerCode,
    opts: &SearchOptions,
    stop_at: usize,
) -> DistanceResult {
    let rows = PackedRows::from_symplectic(code.g_dual(), code.n());
    let member = if code.k() == 0 {
        Membership::Nothing
    } else {
        Membership::for_stabilizer(code)
    };
    min_weight_scan(&rows, &member, opts, stop_at)
}

fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::ZERO;
    }
    let mut out = BigUint::from(1u32);
    for i in 0..k.min(n - k) {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// Number of correctable error operators of weight above `t` guaranteed by
/// the syndrome assignment: all `X_a Z_b` with `w(a) + w(b) <= 2 t_star`
/// whose generalized weight exceeds `t`. Exact integer arithmetic; returns
/// zero when the sum is empty (`t >= 2 t_star`).
pub fn additional_count(n: usize, t: usize, t_star: usize) -> BigUint {
    let mut total = BigUint::ZERO;
    let upper = 2 * t_star;
    for l in (t + 1)..=upper.max(t) {
        if l > upper {
            break;
        }
        for m_y in 0..=(upper - l) {
            if m_y > l {
                break;
            }
            let term =
                binomial(n, l) * binomial(l, m_y) * BigUint::from(2u32).pow((l - m_y) as u32);
            total += term;
        }
    }
    total
}

fn for_each_combination(n: usize, k: usize, f: &mut impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    if k == 0 {
        f(&[]);
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        // advance to the next lexicographic k-combination of {0..n-1}
        let mut i = k - 1;
        while idx[i] == i + n - k {
            if i == 0 {
                return;
            }
            i -= 1;
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Closed-form size of [`enumerate_correctable`]'s output.
pub fn correctable_set_size(n: usize, t_star: usize) -> BigUint {
    let mut total = BigUint::ZERO;
    for j in 0..=(2 * t_star) {
        for a in 0..=j.min(n) {
            let b = j - a;
            if b > n {
                continue;
            }
            total += binomial(n, a) * binomial(n, b);
        }
    }
    total
}

/// All error vectors with `w(u) + w(v) <= 2 t_star`, the set guaranteed
/// unique syndromes by a distance-`4 t_star + 1` check matrix. Includes the
/// zero vector.
pub fn enumerate_correctable(
    n: usize,
    t_star: usize,
    opts: &SearchOptions,
) -> Result<Vec<SymplecticVector>> {
    let size = correctable_set_size(n, t_star);
    if size > BigUint::from(opts.budget) {
        return Err(Error::BudgetExceeded {
            enumerated: 0,
            best: 0,
        });
    }
    let mut out = Vec::new();
    for j in 0..=(2 * t_star) {
        for a in 0..=j.min(n) {
            let b = j - a;
            if b > n {
                continue;
            }
            for_each_combination(n, a, &mut |us| {
                let mut u = BitVec::zeros(n);
                for &p in us {
                    u.set(p, true);
                }
                for_each_combination(n, b, &mut |vs| {
                    let mut v = BitVec::zeros(n);
                    for &p in vs {
                        v.set(p, true);
                    }
                    out.push(SymplecticVector::new(u.clone(), v).expect("equal lengths"));
                });
            });
        }
    }
    Ok(out)
}

/// All error vectors of generalized weight at most `t`: every support of
/// size `<= t` with an X, Y or Z on each supported qubit. Includes zero.
pub fn enumerate_weight_at_most(n: usize, t: usize) -> Vec<SymplecticVector> {
    let mut out = Vec::new();
    for l in 0..=t.min(n) {
        for_each_combination(n, l, &mut |support| {
            // three choices per supported position: X = 1, Z = 2, Y = 3
            let mut choice = vec![0usize; l];
            loop {
                let mut u = BitVec::zeros(n);
                let mut v = BitVec::zeros(n);
                for (c, &p) in choice.iter().zip(support) {
                    let kind = c + 1;
                    if kind & 1 == 1 {
                        u.set(p, true);
                    }
                    if kind & 2 == 2 {
                        v.set(p, true);
                    }
                }
                out.push(SymplecticVector::new(u, v).expect("equal lengths"));
                let mut i = 0;
                loop {
                    if i == l {
                        return;
                    }
                    choice[i] += 1;
                    if choice[i] < 3 {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
            }
        });
    }
    out
}

/// Outcome of a syndrome-distinctness check.
#[derive(Clone, Debug)]
pub enum Uniqueness {
    Distinct,
    Collision(SymplecticVector, SymplecticVector),
}

impl Uniqueness {
    pub fn is_distinct(&self) -> bool {
        matches!(self, Uniqueness::Distinct)
    }
}

/// Check that all listed errors have pairwise distinct syndromes under
/// `code`'s check matrix; on failure returns one colliding pair.
pub fn verify_syndrome_uniqueness(
    code: &StabilizerCode,
    errors: &[SymplecticVector],
) -> Result<Uniqueness> {
    let mut seen: HashMap<BitVec, usize> = HashMap::with_capacity(errors.len());
    for (i, e) in errors.iter().enumerate() {
        let s = code.h().syndrome(e)?;
        if let Some(&j) = seen.get(&s) {
            return Ok(Uniqueness::Collision(errors[j].clone(), e.clone()));
        }
        seen.insert(s, i);
    }
    Ok(Uniqueness::Distinct)
}

/// An injective map from syndromes to correctable-error representatives.
#[derive(Clone, Debug)]
pub struct DecoderTable {
    t_star: usize,
    syndrome_len: usize,
    entries: HashMap<BitVec, SymplecticVector>,
}

impl DecoderTable {
    pub fn t_star(&self) -> usize {
        self.t_star
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn syndrome_len(&self) -> usize {
        self.syndrome_len
    }

    /// The stored representative for `s`, or `None` for a detected but
    /// uncorrectable syndrome.
    pub fn decode(&self, s: &BitVec) -> Result<Option<&SymplecticVector>> {
        if s.len() != self.syndrome_len {
            return Err(Error::SyndromeWidthMismatch {
                expected: self.syndrome_len,
                got: s.len(),
            });
        }
        Ok(self.entries.get(s))
    }
}

/// Build a decoder table from an explicit error list. Every error must have
/// `w(u) + w(v) <= 2 t_star`; a syndrome collision is a hard error because
/// it contradicts the uniqueness guarantee the table realizes.
pub fn build_decoder_from_errors(
    code: &StabilizerCode,
    errors: &[SymplecticVector],
    t_star: usize,
) -> Result<DecoderTable> {
    let mut entries: HashMap<BitVec, SymplecticVector> = HashMap::with_capacity(errors.len());
    for e in errors {
        debug_assert!(e.u().count_ones() + e.v().count_ones() <= 2 * t_star);
        let s = code.h().syndrome(e)?;
        if let Some(prev) = entries.get(&s) {
            return Err(Error::SyndromeCollision {
                first: prev.pauli_label(),
                second: e.pauli_label(),
            });
        }
        entries.insert(s, e.clone());
    }
    Ok(DecoderTable {
        t_star,
        syndrome_len: code.r(),
        entries,
    })
}

/// Decoder over the full `w(u) + w(v) <= 2 t_star` correctable set.
pub fn build_decoder(
    code: &StabilizerCode,
    t_star: usize,
    opts: &SearchOptions,
) -> Result<DecoderTable> {
    let errors = enumerate_correctable(code.n(), t_star, opts)?;
    build_decoder_from_errors(code, &errors, t_star)
}

/// Capability estimate of a code from the classical distances of its check
/// matrix, with the Y-distance refinement applied when it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapabilityReport {
    /// Classical minimum distance d' of `[H_X | H_Z]` as a parity check.
    pub d_classical: usize,
    pub d_x: usize,
    pub d_z: usize,
    pub d_y: usize,
    pub t_star: usize,
    /// True when the even-d' refinement `d' >= 4 t_star` was usable because
    /// the Y code has distance `>= 2 t_star + 1`.
    pub corollary_applied: bool,
    /// Quantum capability floor((d-1)/2) from the best-known distance.
    pub t: usize,
    pub additional_count: BigUint,
}

/// Compute d', the X/Z/Y parity-check distances, the capability estimate
/// t*, and the count of extra correctable errors beyond weight t.
///
/// Uses the construction-supplied d' when the code carries one; otherwise
/// the classical search must complete within budget or the error is
/// propagated (a truncated value cannot certify a capability).
pub fn estimate_capability(
    code: &StabilizerCode,
    opts: &SearchOptions,
) -> Result<CapabilityReport> {
    let exact_or_err = |r: DistanceResult| -> Result<usize> {
        if r.exact {
            Ok(r.value)
        } else {
            Err(Error::BudgetExceeded {
                enumerated: r.enumerated,
                best: r.value,
            })
        }
    };
    let d_classical = match code.d_classical() {
        Some(d) => d,
        None => exact_or_err(classical_min_distance(&code.h().to_wide(), opts)?)?,
    };
    let d_x = exact_or_err(classical_min_distance(code.h().hx(), opts)?)?;
    let d_z = exact_or_err(classical_min_distance(code.h().hz(), opts)?)?;
    let h_y = code.h().hx().xor(code.h().hz())?;
    let d_y = exact_or_err(classical_min_distance(&h_y, opts)?)?;

    let t4 = d_classical / 4;
    let (t_star, corollary_applied) = if d_classical % 4 == 0 && t4 >= 1 && d_y > 2 * t4 {
        (t4, true)
    } else {
        ((d_classical.max(1) - 1) / 4, false)
    };
    let t = code.t().unwrap_or(t_star);
    let additional = additional_count(code.n(), t, t_star);
    Ok(CapabilityReport {
        d_classical,
        d_x,
        d_z,
        d_y,
        t_star,
        corollary_applied,
        t,
        additional_count: additional,
    })
}
