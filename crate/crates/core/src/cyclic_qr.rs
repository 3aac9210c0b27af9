//! Circulant stabilizer codes, quadratic-residue codes and the palindromic
//! k = 1 construction.
//!
//! Quadratic-residue generator matrices come from idempotent circulants,
//! which avoids factoring x^p - 1; the claimed ranks and duality relations
//! are verified computationally on construction.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::constructions::css;
use crate::distance::{quantum_min_distance, quantum_min_distance_floored, SearchOptions};
use crate::gf2::{BitMatrix, BitVec};
use crate::symplectic::{CheckMatrix, StabilizerCode};
use crate::{Error, Result};

/// The n x n circulant of `g`: row i is `g` rotated right i positions.
pub fn circulant(g: &BitVec, n: usize) -> Result<BitMatrix> {
    if g.len() != n {
        return Err(Error::DimensionMismatch {
            context: "circulant generator length",
            expected: n,
            got: g.len(),
        });
    }
    let rows: Vec<BitVec> = (0..n).map(|i| g.rotate_right(i)).collect();
    BitMatrix::from_rows(&rows)
}

fn run_distance(code: &mut StabilizerCode, opts: &SearchOptions) {
    let d = quantum_min_distance(code, opts);
    if d.exact {
        if code.d_lower().is_none() {
            code.set_d_lower(d.value);
        }
        code.set_d_exact(d.value);
    }
}

/// Stabilizer code with `H_X = circ(g1)`, `H_Z = circ(g2)`, reduced to an
/// independent row set. The commutativity of the full circulant pair is
/// checked, then the distance module fills in the exact distance when the
/// budget allows.
pub fn circulant_code(g1: &BitVec, g2: &BitVec, opts: &SearchOptions) -> Result<StabilizerCode> {
    let n = g1.len();
    if g2.len() != n {
        return Err(Error::DimensionMismatch {
            context: "circulant generator pair",
            expected: n,
            got: g2.len(),
        });
    }
    let hx = circulant(g1, n)?;
    let hz = circulant(g2, n)?;
    let full = CheckMatrix::new(hx, hz)?;
    if !full.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let wide = full.to_wide();
    let reduced = wide.select_rows(&wide.row_basis_indices());
    let mut code = StabilizerCode::new(
        CheckMatrix::from_wide(&reduced)?,
        format!("circulant(n={n})"),
    )?;
    run_distance(&mut code, opts);
    Ok(code)
}

/// Best code found by a circulant generator-pair search.
#[derive(Clone, Debug)]
pub struct CirculantSearchResult {
    pub g1: BitVec,
    pub g2: BitVec,
    pub d: usize,
    pub candidates: u64,
}

fn rotate_mask(v: u64, s: usize, n: usize) -> u64 {
    if s == 0 {
        return v;
    }
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    ((v << s) | (v >> (n - s))) & mask
}

/// Lexicographically-smallest rotations of each cyclic class, ascending.
/// Rotating both generators together relabels the code, so one of them can
/// be restricted to class representatives.
fn necklace_reps(n: usize) -> Vec<u64> {
    let mut reps = Vec::new();
    'outer: for v in 0u64..(1 << n) {
        for s in 1..n {
            if rotate_mask(v, s, n) < v {
                continue 'outer;
            }
        }
        reps.push(v);
    }
    reps
}

fn bitvec_from_mask(v: u64, n: usize) -> BitVec {
    BitVec::from_fn(n, |i| (v >> i) & 1 == 1)
}

/// Commutativity of `[circ(g1) | circ(g2)]` reduces to symmetry of the
/// cross-correlation: entry (i, j) of `H_X H_Z^T` is `g1 . rot_(j-i)(g2)`.
fn circulant_pair_commutes(g1: u64, g2: u64, n: usize) -> bool {
    let f = |s: usize| (g1 & rotate_mask(g2, s, n)).count_ones() & 1;
    (1..n).all(|s| f(s) == f(n - s))
}

fn circulant_pair_rank(g1: u64, g2: u64, n: usize) -> usize {
    let mut rows: Vec<u64> = (0..n)
        .map(|i| rotate_mask(g1, i, n) | (rotate_mask(g2, i, n) << n))
        .collect();
    let mut rank = 0;
    for col in 0..2 * n {
        let Some(pivot) = (rank..n).find(|&r| (rows[r] >> col) & 1 == 1) else {
            continue;
        };
        rows.swap(rank, pivot);
        for r in 0..n {
            if r != rank && (rows[r] >> col) & 1 == 1 {
                rows[r] ^= rows[rank];
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

/// Search generator-vector pairs for the best exact distance at the target
/// dimension. The space is reduced by cyclic equivalence of `g1`; when the
/// reduced space fits the budget it is scanned in full (a definite
/// answer), otherwise `budget` seeded random pairs are drawn.
pub fn circulant_search(
    n: usize,
    k_target: usize,
    budget: u64,
    seed: u64,
    opts: &SearchOptions,
) -> Result<Option<CirculantSearchResult>> {
    assert!((2..=28).contains(&n), "generator vectors are packed into u64");
    let reps = necklace_reps(n);
    let space = reps.len() as u64 * (1u64 << n);
    let mut best: Option<CirculantSearchResult> = None;
    let mut candidates = 0u64;
    let consider = |g1: u64, g2: u64, best: &mut Option<CirculantSearchResult>| -> Result<()> {
        if !circulant_pair_commutes(g1, g2, n) {
            return Ok(());
        }
        if n - circulant_pair_rank(g1, g2, n) != k_target {
            return Ok(());
        }
        let g1v = bitvec_from_mask(g1, n);
        let g2v = bitvec_from_mask(g2, n);
        let hx = circulant(&g1v, n)?;
        let hz = circulant(&g2v, n)?;
        let wide = hx.hstack(&hz)?;
        let reduced = wide.select_rows(&wide.row_basis_indices());
        let code = StabilizerCode::new(CheckMatrix::from_wide(&reduced)?, "circulant-search")?;
        let floor = best.as_ref().map_or(0, |b| b.d);
        let result = quantum_min_distance_floored(&code, opts, floor);
        if result.exact && best.as_ref().is_none_or(|b| result.value > b.d) {
            *best = Some(CirculantSearchResult {
                g1: g1v,
                g2: g2v,
                d: result.value,
                candidates: 0,
            });
        }
        Ok(())
    };
    if space <= budget {
        for &g1 in &reps {
            for g2 in 0u64..(1 << n) {
                candidates += 1;
                consider(g1, g2, &mut best)?;
            }
        }
    } else {
        let mut rng = ChaCha12Rng::seed_from_u64(seed);
        for _ in 0..budget {
            let g1: u64 = rng.random_range(0..(1u64 << n));
            let g2: u64 = rng.random_range(0..(1u64 << n));
            candidates += 1;
            consider(g1, g2, &mut best)?;
        }
    }
    Ok(best.map(|mut b| {
        b.candidates = candidates;
        b
    }))
}

/// Quadratic residues and non-residues mod an odd prime.
#[derive(Clone, Debug)]
pub struct QrData {
    pub p: u64,
    pub residues: Vec<u64>,
    pub nonresidues: Vec<u64>,
    /// +1 when p = 4j+1, -1 when p = 4j-1.
    pub case_mod4: i8,
    /// 2 is a residue exactly when p = 8m +- 1; required for binary QR codes.
    pub two_is_residue: bool,
}

fn is_odd_prime(p: u64) -> bool {
    if p < 3 || p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Squares of the nonzero residues mod p, and their complement.
pub fn quadratic_residues(p: u64) -> Result<QrData> {
    if !is_odd_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut is_residue = vec![false; p as usize];
    for l in 1..p {
        is_residue[((l * l) % p) as usize] = true;
    }
    let residues: Vec<u64> = (1..p).filter(|&j| is_residue[j as usize]).collect();
    let nonresidues: Vec<u64> = (1..p).filter(|&j| !is_residue[j as usize]).collect();
    Ok(QrData {
        p,
        two_is_residue: is_residue[2],
        case_mod4: if p % 4 == 1 { 1 } else { -1 },
        residues,
        nonresidues,
    })
}

impl QrData {
    /// Indicator vector of the residue set: bit j set iff j is a residue.
    pub fn residue_indicator(&self) -> BitVec {
        let set: Vec<bool> = (0..self.p)
            .map(|j| self.residues.binary_search(&j).is_ok())
            .collect();
        BitVec::from_fn(self.p as usize, |i| set[i])
    }

    pub fn nonresidue_indicator(&self) -> BitVec {
        let set: Vec<bool> = (0..self.p)
            .map(|j| self.nonresidues.binary_search(&j).is_ok())
            .collect();
        BitVec::from_fn(self.p as usize, |i| set[i])
    }
}

/// Full-rank generator matrices of the four QR codes, derived from their
/// idempotents.
#[derive(Clone, Debug)]
pub struct QrGenerators {
    pub data: QrData,
    /// The [p, (p+1)/2] code Q.
    pub gen_q: BitMatrix,
    /// The [p, (p-1)/2] even-like subcode of Q.
    pub gen_q_bar: BitMatrix,
    pub gen_n: BitMatrix,
    pub gen_n_bar: BitMatrix,
}

fn indicator_sum(p: u64, with_one: bool, set: &[u64]) -> BitVec {
    BitVec::from_fn(p as usize, |i| {
        let mut bit = with_one && i == 0;
        if set.binary_search(&(i as u64)).is_ok() {
            bit = !bit;
        }
        bit
    })
}

fn span_of_circulant(f: &BitVec, p: usize, add_all_ones: bool) -> Result<BitMatrix> {
    let circ = circulant(f, p)?;
    let full = if add_all_ones {
        circ.vstack(&BitMatrix::from_rows(&[BitVec::from_fn(p, |_| true)])?)?
    } else {
        circ
    };
    Ok(full.select_rows(&full.row_basis_indices()))
}

/// Generators of Q, Q-bar, N, N-bar from the case-appropriate idempotents.
/// Verifies the claimed ranks and the duality relations
/// (`Q-perp = Q-bar, N-perp = N-bar` for p = 4j-1;
///  `Q-perp = N-bar, N-perp = Q-bar` for p = 4j+1).
pub fn qr_generator_matrices(p: u64) -> Result<QrGenerators> {
    let data = quadratic_residues(p)?;
    if !data.two_is_residue {
        return Err(Error::TwoNotResidue(p));
    }
    let pu = p as usize;
    // idempotents of the even-like subcodes
    let (f_q, f_n) = if data.case_mod4 == -1 {
        (
            indicator_sum(p, true, &data.nonresidues),
            indicator_sum(p, true, &data.residues),
        )
    } else {
        (
            indicator_sum(p, false, &data.nonresidues),
            indicator_sum(p, false, &data.residues),
        )
    };
    let gen_q_bar = span_of_circulant(&f_q, pu, false)?;
    let gen_q = span_of_circulant(&f_q, pu, true)?;
    let gen_n_bar = span_of_circulant(&f_n, pu, false)?;
    let gen_n = span_of_circulant(&f_n, pu, true)?;
    let expected_bar = (pu - 1) / 2;
    for (name, m, expected) in [
        ("Q", &gen_q, expected_bar + 1),
        ("Q-bar", &gen_q_bar, expected_bar),
        ("N", &gen_n, expected_bar + 1),
        ("N-bar", &gen_n_bar, expected_bar),
    ] {
        if m.n_rows() != expected {
            return Err(Error::BoundViolation(format!(
                "QR code {name} has rank {} instead of {expected} for p = {p}",
                m.n_rows()
            )));
        }
    }
    let (q_dual, n_dual) = if data.case_mod4 == -1 {
        (&gen_q_bar, &gen_n_bar)
    } else {
        (&gen_n_bar, &gen_q_bar)
    };
    if !gen_q.mul_transpose(q_dual)?.is_zero() || !gen_n.mul_transpose(n_dual)?.is_zero() {
        return Err(Error::BoundViolation(format!(
            "QR duality relation failed for p = {p}"
        )));
    }
    Ok(QrGenerators {
        data,
        gen_q,
        gen_q_bar,
        gen_n,
        gen_n_bar,
    })
}

fn integer_sqrt_ceil(p: u64) -> usize {
    let mut s = (p as f64).sqrt() as u64;
    while s * s < p {
        s += 1;
    }
    while s >= 1 && (s - 1) * (s - 1) >= p {
        s -= 1;
    }
    s as usize
}

/// The [[p, 1, d]] CSS code from the quadratic-residue dual pair, for
/// p = 8m +- 1. The distance satisfies d >= sqrt(p), strengthened to
/// d^2 - d + 1 >= p when p = 4j-1; both are verified when the search
/// produces the exact distance.
pub fn qr_css(p: u64, opts: &SearchOptions) -> Result<StabilizerCode> {
    let gens = qr_generator_matrices(p)?;
    // C_1 = Q with its dual as parity check; C_2 = the even-like subcode
    // Q-bar, which lies in Q in both residue classes
    let h1 = if gens.data.case_mod4 == -1 {
        &gens.gen_q_bar
    } else {
        &gens.gen_n_bar
    };
    let mut code = css(&gens.gen_q_bar, h1, None, opts)?;
    if code.k() != 1 {
        return Err(Error::InvalidDimension {
            k: code.k() as isize,
        });
    }
    run_distance(&mut code, opts);
    if let Some(d) = code.d_exact() {
        if d < integer_sqrt_ceil(p) {
            return Err(Error::BoundViolation(format!(
                "QR CSS distance {d} below sqrt({p})"
            )));
        }
        if gens.data.case_mod4 == -1 && (d * d - d + 1) < p as usize {
            return Err(Error::BoundViolation(format!(
                "QR CSS distance {d} violates d^2 - d + 1 >= {p}"
            )));
        }
    }
    retag(&mut code, format!("qr-css(p={p})"));
    Ok(code)
}

fn retag(code: &mut StabilizerCode, tag: String) {
    // construction_tag is provenance; rebuilding the struct just for the
    // label would re-run validation, so patch it in place
    *code = StabilizerCode::with_dual(code.h().clone(), code.g_dual().clone(), tag)
        .map(|mut fresh| {
            if let Some(d) = code.d_lower() {
                fresh.set_d_lower(d);
            }
            if let Some(d) = code.d_classical() {
                fresh.set_d_classical(d);
            }
            if let Some(d) = code.d_exact() {
                fresh.set_d_exact(d);
            }
            fresh
        })
        .expect("already-validated code");
}

fn extend_with_parity(m: &BitMatrix) -> BitMatrix {
    BitMatrix::from_fn(m.n_rows(), m.n_cols() + 1, |i, j| {
        if j < m.n_cols() {
            m.get(i, j)
        } else {
            m.row(i).count_ones() % 2 == 1
        }
    })
}

/// The [[p+1, 0, d]] CSS code from extended quadratic-residue codes, for
/// p = 8m +- 1. Checks the distance congruence (d = 0 or 3 mod 4 for
/// p = 4j-1; d even for p = 4j+1) when the search is exact.
pub fn extended_qr_css(p: u64, opts: &SearchOptions) -> Result<StabilizerCode> {
    let gens = qr_generator_matrices(p)?;
    // C_1 = C_2 = the extended code Q-hat; its dual is Q-hat itself for
    // p = 4j-1 and N-hat for p = 4j+1, giving the parity-check side
    let ext_q = extend_with_parity(&gens.gen_q);
    let h1 = if gens.data.case_mod4 == -1 {
        ext_q.clone()
    } else {
        extend_with_parity(&gens.gen_n)
    };
    let mut code = css(&ext_q, &h1, None, opts)?;
    if code.k() != 0 {
        return Err(Error::InvalidDimension {
            k: code.k() as isize,
        });
    }
    run_distance(&mut code, opts);
    if let Some(d) = code.d_exact() {
        let ok = if gens.data.case_mod4 == -1 {
            d % 4 == 0 || d % 4 == 3
        } else {
            d % 2 == 0
        };
        if !ok {
            return Err(Error::BoundViolation(format!(
                "extended QR distance {d} has the wrong residue mod 4 for p = {p}"
            )));
        }
    }
    retag(&mut code, format!("extended-qr-css(p={p})"));
    Ok(code)
}

/// The [[p, 1, d]] circulant code with `H_X` and `H_Z` the circulants of
/// the residue and non-residue indicators, for p = 4j+1. Both blocks are
/// symmetric, `H_X + H_Z = J - I`, and the rank is p - 1; all three facts
/// are verified on construction.
pub fn qr_circulant(p: u64, opts: &SearchOptions) -> Result<StabilizerCode> {
    let data = quadratic_residues(p)?;
    if data.case_mod4 != 1 {
        return Err(Error::WrongResidueClass {
            p,
            expected: "1",
            modulus: 4,
        });
    }
    let pu = p as usize;
    let hx = circulant(&data.residue_indicator(), pu)?;
    let hz = circulant(&data.nonresidue_indicator(), pu)?;
    if !hx.is_symmetric() || !hz.is_symmetric() {
        return Err(Error::BoundViolation(format!(
            "circulant indicator blocks are not symmetric for p = {p}"
        )));
    }
    let h_y = hx.xor(&hz)?;
    let j_minus_i =
        BitMatrix::from_fn(pu, pu, |i, j| i != j);
    if h_y != j_minus_i {
        return Err(Error::BoundViolation(format!(
            "H_X + H_Z differs from J - I for p = {p}"
        )));
    }
    let full = CheckMatrix::new(hx, hz)?;
    if !full.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let wide = full.to_wide();
    if wide.rank() != pu - 1 {
        return Err(Error::BoundViolation(format!(
            "QR circulant rank {} differs from p - 1 for p = {p}",
            wide.rank()
        )));
    }
    let reduced = wide.select_rows(&wide.row_basis_indices());
    let mut code = StabilizerCode::new(
        CheckMatrix::from_wide(&reduced)?,
        format!("qr-circulant(p={p})"),
    )?;
    run_distance(&mut code, opts);
    Ok(code)
}

/// An [[n, 1]] code from a palindromic vector: `a_0 = 0`,
/// `a_i = a_(n-i)`. `H_X` is the identity-plus-last-column block and
/// `(H_Z)_(i,j) = a_(j+1) + a_(i-j)` (indices mod n); the identically-zero
/// last row is dropped, leaving rank n - 1.
pub fn k1_code(a: &BitVec, opts: &SearchOptions) -> Result<StabilizerCode> {
    let n = a.len();
    if n < 2 || a.get(0) {
        return Err(Error::SymmetryViolated);
    }
    for i in 1..n {
        if a.get(i) != a.get(n - i) {
            return Err(Error::SymmetryViolated);
        }
    }
    let hx = BitMatrix::from_fn(n, n, |i, j| i < n - 1 && (j == i || j == n - 1));
    let hz = BitMatrix::from_fn(n, n, |i, j| a.get((j + 1) % n) ^ a.get((n + i - j) % n));
    for j in 0..n {
        debug_assert!(!hz.get(n - 1, j), "last row must vanish by symmetry");
    }
    let h = CheckMatrix::new(hx, hz)?;
    let wide = h.to_wide();
    let kept = wide.select_rows(&(0..n - 1).collect::<Vec<_>>());
    if kept.rank() != n - 1 {
        return Err(Error::RankDeficient {
            rank: kept.rank(),
            rows: n - 1,
        });
    }
    let mut code = StabilizerCode::new(CheckMatrix::from_wide(&kept)?, format!("k1(n={n})"))?;
    run_distance(&mut code, opts);
    Ok(code)
}
