//! Generic stabilizer-code builders from classical parity-check and
//! generator matrices: CSS and its enlargement, the three block
//! constructions, the permuted u|u+v construction and the search for
//! column permutations that make a parity-check matrix commutative.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::distance::{min_weight_rowspace, SearchOptions};
use crate::gf2::{BitMatrix, Permutation};
use crate::symplectic::{CheckMatrix, StabilizerCode};
use crate::{Error, Result};

fn expect_cols(m: &BitMatrix, n: usize, context: &'static str) -> Result<()> {
    if m.n_cols() != n {
        return Err(Error::DimensionMismatch {
            context,
            expected: n,
            got: m.n_cols(),
        });
    }
    Ok(())
}

fn row_basis(m: &BitMatrix) -> BitMatrix {
    m.select_rows(&m.row_basis_indices())
}

fn exact_min_weight(gen: &BitMatrix, opts: &SearchOptions) -> Result<usize> {
    let r = min_weight_rowspace(gen, opts)?;
    if r.exact {
        Ok(r.value)
    } else {
        Err(Error::BudgetExceeded {
            enumerated: r.enumerated,
            best: r.value,
        })
    }
}

/// CSS construction from a generator of the inner code and a parity check
/// of the outer code: `H = [G_2 O; O H_1]`.
///
/// Requires the subcode condition `h1 * g2^T = O` (the inner code lies in
/// the outer code). Inputs may carry dependent rows; they are reduced to
/// row bases first. `known_distances` supplies `(d(C_1), d(C_2^perp))`;
/// when absent both are computed exhaustively.
pub fn css(
    g2: &BitMatrix,
    h1: &BitMatrix,
    known_distances: Option<(usize, usize)>,
    opts: &SearchOptions,
) -> Result<StabilizerCode> {
    let n = g2.n_cols();
    expect_cols(h1, n, "css parity check")?;
    let g2 = row_basis(g2);
    let h1 = row_basis(h1);
    if !h1.mul_transpose(&g2)?.is_zero() {
        return Err(Error::SubcodeViolated);
    }
    let hx = g2.vstack(&BitMatrix::zeros(h1.n_rows(), n))?;
    let hz = BitMatrix::zeros(g2.n_rows(), n).vstack(&h1)?;
    let mut code = StabilizerCode::new(CheckMatrix::new(hx, hz)?, "css")?;
    let (d1, d2_dual) = match known_distances {
        Some(pair) => pair,
        None => (
            exact_min_weight(&h1.kernel_basis(), opts)?,
            exact_min_weight(&g2.kernel_basis(), opts)?,
        ),
    };
    let d = d1.min(d2_dual);
    code.set_d_lower(d);
    code.set_d_classical(d);
    Ok(code)
}

/// The enlargement of a CSS code built on a dual-containing code `C_1`
/// extended to `C_2`: three generator blocks with the mixing matrix
/// `Q = (H_3 G_3^T)(P^T)^-1 (H_3 G_3^T)^-1`.
///
/// `g1` generates `C_1`, `g3` holds the `k_2 - k_1` extension rows, `h2` is
/// a parity check of `C_2` and `h3` the rows completing it to a parity
/// check of `C_1`. `p` must be nonsingular with `I + p` nonsingular, which
/// rules out `k_2 - k_1 = 1` entirely. Distance bound:
/// `min(d_1, ceil(3 d_2 / 2))`.
pub fn enlarged_css(
    g1: &BitMatrix,
    g3: &BitMatrix,
    h2: &BitMatrix,
    h3: &BitMatrix,
    p: &BitMatrix,
    known_distances: Option<(usize, usize)>,
    opts: &SearchOptions,
) -> Result<StabilizerCode> {
    let n = g1.n_cols();
    expect_cols(g3, n, "enlargement rows")?;
    expect_cols(h2, n, "enlarged parity check")?;
    expect_cols(h3, n, "enlarged parity completion")?;
    let width = g3.n_rows();
    if p.n_rows() != width || p.n_cols() != width || h3.n_rows() != width {
        return Err(Error::DimensionMismatch {
            context: "enlargement width",
            expected: width,
            got: p.n_rows(),
        });
    }
    if width == 1 {
        return Err(Error::EnlargementTooNarrow);
    }
    // C_1 must contain its dual: the full parity check of C_1 is self-orthogonal
    let h1 = h2.vstack(h3)?;
    if !h1.mul_transpose(&h1)?.is_zero() {
        return Err(Error::SubcodeViolated);
    }
    if p.inverse().is_err() {
        return Err(Error::SingularP);
    }
    let i_plus_p = p.xor(&BitMatrix::identity(width))?;
    if i_plus_p.inverse().is_err() {
        return Err(Error::SingularIdentityPlusP);
    }
    let pairing = h3.mul_transpose(g3)?;
    let Ok(pairing_inv) = pairing.inverse() else {
        return Err(Error::SingularPairing);
    };
    let pt_inv = p.transpose().inverse().expect("P nonsingular");
    let q = pairing.mul(&pt_inv)?.mul(&pairing_inv)?;

    let qh3 = q.mul(h3)?;
    let zeros_h2 = BitMatrix::zeros(h2.n_rows(), n);
    let hx = h2.vstack(&zeros_h2)?.vstack(&qh3)?;
    let hz = zeros_h2.vstack(h2)?.vstack(h3)?;

    let zeros_g1 = BitMatrix::zeros(g1.n_rows(), n);
    let gx = g1.vstack(&zeros_g1)?.vstack(g3)?;
    let gz = zeros_g1.vstack(g1)?.vstack(&p.mul(g3)?)?;
    let g_dual = gx.hstack(&gz)?;

    let mut code = StabilizerCode::with_dual(CheckMatrix::new(hx, hz)?, g_dual, "enlarged-css")?;
    let (d1, d2) = match known_distances {
        Some(pair) => pair,
        None => (
            exact_min_weight(g1, opts)?,
            exact_min_weight(&g1.vstack(g3)?, opts)?,
        ),
    };
    code.set_d_lower(d1.min(3 * d2 / 2 + usize::from(d2 % 2 != 0)));
    Ok(code)
}

/// Construction from two mutually orthogonal parity checks:
/// `H = [H_1 O; O H_2]`, a pure-X block over `C_1` and a pure-Z block over
/// `C_2`. CSS is the special case `H_1 = G_2`.
pub fn construction_i(
    h1: &BitMatrix,
    h2: &BitMatrix,
    known_distances: Option<(usize, usize)>,
    opts: &SearchOptions,
) -> Result<StabilizerCode> {
    let n = h1.n_cols().max(h2.n_cols());
    expect_cols(h1, n, "construction I h1")
        .or_else(|_| if h1.n_rows() == 0 { Ok(()) } else { Err(Error::DimensionMismatch { context: "construction I h1", expected: n, got: h1.n_cols() }) })?;
    expect_cols(h2, n, "construction I h2")?;
    let h1 = if h1.n_rows() == 0 {
        BitMatrix::zeros(0, n)
    } else {
        row_basis(h1)
    };
    let h2 = row_basis(h2);
    if h1.n_rows() > 0 && !h1.mul_transpose(&h2)?.is_zero() {
        return Err(Error::OrthogonalityViolated);
    }
    let k1 = n - h1.n_rows();
    let k2 = n - h2.n_rows();
    let k = k1 as isize + k2 as isize - n as isize;
    if k <= 0 {
        return Err(Error::InvalidDimension { k });
    }
    let hx = h1.vstack(&BitMatrix::zeros(h2.n_rows(), n))?;
    let hz = BitMatrix::zeros(h1.n_rows(), n).vstack(&h2)?;
    let mut code = StabilizerCode::new(CheckMatrix::new(hx, hz)?, "construction-i")?;
    let (d1, d2) = match known_distances {
        Some(pair) => pair,
        None => {
            let d1 = if h1.n_rows() == 0 {
                1
            } else {
                exact_min_weight(&h1.kernel_basis(), opts)?
            };
            (d1, exact_min_weight(&h2.kernel_basis(), opts)?)
        }
    };
    let d = d1.min(d2);
    code.set_d_lower(d);
    code.set_d_classical(d);
    Ok(code)
}

/// Construction from two generator matrices side by side: `H = [G_1 | G_2]`.
/// Commutativity is checked, not assumed; dependent rows are reduced away.
/// The distance is left to the search module.
pub fn construction_ii(g1: &BitMatrix, g2: &BitMatrix) -> Result<StabilizerCode> {
    let n = g1.n_cols();
    expect_cols(g2, n, "construction II g2")?;
    if g1.n_rows() != g2.n_rows() {
        return Err(Error::DimensionMismatch {
            context: "construction II row counts",
            expected: g1.n_rows(),
            got: g2.n_rows(),
        });
    }
    let wide = g1.hstack(g2)?;
    let h = CheckMatrix::from_wide(&wide)?;
    if !h.is_commutative() {
        return Err(Error::NotCommutative);
    }
    let reduced = wide.select_rows(&wide.row_basis_indices());
    StabilizerCode::new(CheckMatrix::from_wide(&reduced)?, "construction-ii")
}

/// The u|u+v construction on parity checks: `H = [H_2 H_2; H_1 O]` with
/// `h1 * h2^T = O` required.
pub fn construction_iii(
    h1: &BitMatrix,
    h2: &BitMatrix,
    known_distances: Option<(usize, usize)>,
    opts: &SearchOptions,
) -> Result<StabilizerCode> {
    let n = h2.n_cols();
    if h1.n_rows() > 0 {
        expect_cols(h1, n, "construction III h1")?;
    }
    let h1 = if h1.n_rows() == 0 {
        BitMatrix::zeros(0, n)
    } else {
        row_basis(h1)
    };
    let h2 = row_basis(h2);
    if h1.n_rows() > 0 && !h1.mul_transpose(&h2)?.is_zero() {
        return Err(Error::OrthogonalityViolated);
    }
    let hx = h2.vstack(&h1)?;
    let hz = h2.vstack(&BitMatrix::zeros(h1.n_rows(), n))?;
    let mut code = StabilizerCode::new(CheckMatrix::new(hx, hz)?, "construction-iii")?;
    let (d1, d2) = match known_distances {
        Some(pair) => pair,
        None => {
            let d1 = if h1.n_rows() == 0 {
                1
            } else {
                exact_min_weight(&h1.kernel_basis(), opts)?
            };
            (d1, exact_min_weight(&h2.kernel_basis(), opts)?)
        }
    };
    code.set_d_lower(d1.min(d2));
    Ok(code)
}

/// Pass/fail record for the three assumptions of the permuted u|u+v
/// construction, evaluated computationally.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UuvConditionReport {
    /// `H_1 P H_1^T = H_1 P^T H_1^T`
    pub commutation_symmetric: bool,
    /// `H_1 P H_2^T = O`
    pub cross_orthogonal: bool,
    /// `C_1 P = C_1`
    pub c1_fixed: bool,
    /// `C_2 P = C_2`
    pub c2_fixed: bool,
    /// `u G_3 P != u G_3` for every nonzero `u`
    pub extension_moved: bool,
}

impl UuvConditionReport {
    pub fn all_pass(&self) -> bool {
        self.commutation_symmetric
            && self.cross_orthogonal
            && self.c1_fixed
            && self.c2_fixed
            && self.extension_moved
    }

    /// The number (8, 9 or 10) of the first failed condition group.
    pub fn first_failure(&self) -> Option<u8> {
        if !self.commutation_symmetric || !self.cross_orthogonal {
            Some(8)
        } else if !self.c1_fixed || !self.c2_fixed {
            Some(9)
        } else if !self.extension_moved {
            Some(10)
        } else {
            None
        }
    }
}

fn rowspace_contains_all(space: &BitMatrix, rows: &BitMatrix) -> Result<bool> {
    for i in 0..rows.n_rows() {
        if space.solve_left(&rows.row(i))?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Evaluate the three permuted-u|u+v assumptions for codes `C_1 subset C_2`
/// given as parity checks `h1, h2`, a generator `g1` of `C_1` and the
/// extension rows `g3` completing it to a generator of `C_2`.
pub fn uuv_conditions(
    h1: &BitMatrix,
    h2: &BitMatrix,
    g1: &BitMatrix,
    g3: &BitMatrix,
    p: &Permutation,
) -> Result<UuvConditionReport> {
    let n = h1.n_cols();
    expect_cols(h2, n, "uuv h2")?;
    expect_cols(g1, n, "uuv g1")?;
    expect_cols(g3, n, "uuv g3")?;
    if p.len() != n {
        return Err(Error::DimensionMismatch {
            context: "uuv permutation",
            expected: n,
            got: p.len(),
        });
    }
    let g2 = g3.vstack(g1)?;
    // the generator/parity pairs must describe the same codes
    if !h1.mul_transpose(g1)?.is_zero()
        || !h2.mul_transpose(&g2)?.is_zero()
        || g1.rank() + h1.rank() != n
        || g2.rank() + h2.rank() != n
        || g2.rank() != g1.n_rows() + g3.n_rows()
    {
        return Err(Error::InconsistentCodePair);
    }
    let h1p = h1.permute_columns(p)?;
    let commutation_symmetric = h1p.mul_transpose(h1)?.is_symmetric();
    let cross_orthogonal = h1p.mul_transpose(h2)?.is_zero();
    let c1_fixed = rowspace_contains_all(g1, &g1.permute_columns(p)?)?;
    let c2_fixed = rowspace_contains_all(&g2, &g2.permute_columns(p)?)?;
    // condition (10) as a kernel computation: u(G_3 P + G_3) = 0 only for u = 0
    let moved = g3.permute_columns(p)?.xor(g3)?;
    let extension_moved = moved.rank() == g3.n_rows();
    Ok(UuvConditionReport {
        commutation_symmetric,
        cross_orthogonal,
        c1_fixed,
        c2_fixed,
        extension_moved,
    })
}

/// The permuted u|u+v construction: `H = [H_1 H_1P; H_2 O]`, valid when
/// all three condition groups hold, with distance bound
/// `min(d_1, ceil(3 d_2 / 2))`.
pub fn permuted_uuv(
    h1: &BitMatrix,
    h2: &BitMatrix,
    g1: &BitMatrix,
    g3: &BitMatrix,
    p: &Permutation,
    known_distances: Option<(usize, usize)>,
    opts: &SearchOptions,
) -> Result<StabilizerCode> {
    let report = uuv_conditions(h1, h2, g1, g3, p)?;
    if let Some(which) = report.first_failure() {
        return Err(Error::UuvCondition(which));
    }
    let n = h1.n_cols();
    let h1p = h1.permute_columns(p)?;
    let hx = h1.vstack(h2)?;
    let hz = h1p.vstack(&BitMatrix::zeros(h2.n_rows(), n))?;

    let g1p = g1.permute_columns(p)?;
    let g3p = g3.permute_columns(p)?;
    let gx = g3p.vstack(&g1p)?.vstack(&g1p)?;
    let gz = g3.vstack(g1)?.vstack(&BitMatrix::zeros(g1.n_rows(), n))?;
    let g_dual = gx.hstack(&gz)?;

    let mut code = StabilizerCode::with_dual(CheckMatrix::new(hx, hz)?, g_dual, "permuted-uuv")?;
    let (d1, d2) = match known_distances {
        Some(pair) => pair,
        None => (
            exact_min_weight(g1, opts)?,
            exact_min_weight(&g3.vstack(g1)?, opts)?,
        ),
    };
    code.set_d_lower(d1.min(3 * d2 / 2 + usize::from(d2 % 2 != 0)));
    Ok(code)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PermSearchMode {
    Exhaustive,
    Random,
}

/// Outcome of the effective-permutation search. Only the exhaustive mode
/// can return `NoneExists`; the random mode gives up with `NoneFound`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PermSearchOutcome {
    Found(Permutation),
    NoneFound,
    NoneExists,
}

/// HP is commutative iff the induced pairing of columns into symplectic
/// pairs cancels: pair `{a, b}` contributes `H[i,a]H[j,b] + H[i,b]H[j,a]`
/// to constraint `(i, j)`, independent of pair order and placement.
fn matching_contribution(h: &BitMatrix, a: usize, b: usize, i: usize, j: usize) -> bool {
    (h.get(i, a) && h.get(j, b)) ^ (h.get(i, b) && h.get(j, a))
}

fn matching_to_permutation(pairs: &[(usize, usize)], n: usize) -> Permutation {
    let mut image = vec![0usize; 2 * n];
    for (slot, &(a, b)) in pairs.iter().enumerate() {
        image[a] = slot;
        image[b] = slot + n;
    }
    Permutation::new(image).expect("pairs form a perfect matching")
}

fn matching_dfs(
    h: &BitMatrix,
    n: usize,
    used: &mut [bool],
    pairs: &mut Vec<(usize, usize)>,
    partial: &mut [bool],
) -> Option<Permutation> {
    let r = h.n_rows();
    let Some(a) = used.iter().position(|&u| !u) else {
        if partial.iter().all(|&x| !x) {
            return Some(matching_to_permutation(pairs, n));
        }
        return None;
    };
    used[a] = true;
    for b in a + 1..2 * n {
        if used[b] {
            continue;
        }
        used[b] = true;
        let mut touched = Vec::new();
        for i in 0..r {
            for j in i + 1..r {
                if matching_contribution(h, a, b, i, j) {
                    partial[i * r + j] ^= true;
                    touched.push(i * r + j);
                }
            }
        }
        pairs.push((a, b));
        if let Some(found) = matching_dfs(h, n, used, pairs, partial) {
            return Some(found);
        }
        pairs.pop();
        for idx in touched {
            partial[idx] ^= true;
        }
        used[b] = false;
    }
    used[a] = false;
    None
}

/// Search for a column permutation P making `hp * P` commutative.
///
/// Exhaustive mode (widths up to 12 columns) enumerates symplectic column
/// pairings — commutativity of `HP` depends only on which columns end up
/// paired — and so can certify `NoneExists`. Random mode draws seeded
/// Fisher-Yates shuffles until the budget runs out.
pub fn find_effective_permutation(
    hp: &BitMatrix,
    mode: PermSearchMode,
    budget: u64,
    seed: u64,
) -> Result<PermSearchOutcome> {
    if !hp.n_cols().is_multiple_of(2) {
        return Err(Error::DimensionMismatch {
            context: "effective permutation search",
            expected: hp.n_cols() + 1,
            got: hp.n_cols(),
        });
    }
    let n = hp.n_cols() / 2;
    let commutes_under = |perm: &Permutation| -> Result<bool> {
        let permuted = hp.permute_columns(perm)?;
        Ok(CheckMatrix::from_wide(&permuted)?.is_commutative())
    };
    match mode {
        PermSearchMode::Exhaustive => {
            if hp.n_cols() > 12 {
                return Err(Error::ExhaustiveSearchTooLarge { cols: hp.n_cols() });
            }
            let identity = Permutation::identity(2 * n);
            if commutes_under(&identity)? {
                return Ok(PermSearchOutcome::Found(identity));
            }
            let r = hp.n_rows();
            let mut used = vec![false; 2 * n];
            let mut partial = vec![false; r * r];
            let mut pairs = Vec::with_capacity(n);
            match matching_dfs(hp, n, &mut used, &mut pairs, &mut partial) {
                Some(p) => {
                    debug_assert!(commutes_under(&p)?);
                    Ok(PermSearchOutcome::Found(p))
                }
                None => Ok(PermSearchOutcome::NoneExists),
            }
        }
        PermSearchMode::Random => {
            if budget == 0 {
                return Ok(PermSearchOutcome::NoneFound);
            }
            let identity = Permutation::identity(2 * n);
            if commutes_under(&identity)? {
                return Ok(PermSearchOutcome::Found(identity));
            }
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let mut image: Vec<usize> = (0..2 * n).collect();
            for _ in 0..budget {
                image.shuffle(&mut rng);
                let perm = Permutation::new(image.clone()).expect("shuffle is a bijection");
                if commutes_under(&perm)? {
                    return Ok(PermSearchOutcome::Found(perm));
                }
            }
            Ok(PermSearchOutcome::NoneFound)
        }
    }
}
