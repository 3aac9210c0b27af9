//! The Pauli-to-binary correspondence: symplectic vectors, check matrices,
//! commutativity, symplectic duals and the syndrome map.
//!
//! An n-qubit Pauli operator maps to a pair of n-bit vectors `(u, v)` — its
//! X part and Z part. Columns are always ordered X block first, Z block
//! second; the symplectic form acts by swapping the halves.

use std::fmt;

use crate::gf2::{parse_matrix, BitMatrix, BitVec};
use crate::{Error, Result};

/// The binary image `(u, v)` of a Pauli operator: `u` marks X components,
/// `v` marks Z components; a position set in both is a Y.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymplecticVector {
    u: BitVec,
    v: BitVec,
}

impl SymplecticVector {
    pub fn new(u: BitVec, v: BitVec) -> Result<Self> {
        if u.len() != v.len() {
            return Err(Error::DimensionMismatch {
                context: "symplectic vector halves",
                expected: u.len(),
                got: v.len(),
            });
        }
        Ok(SymplecticVector { u, v })
    }

    pub fn zero(n: usize) -> Self {
        SymplecticVector {
            u: BitVec::zeros(n),
            v: BitVec::zeros(n),
        }
    }

    /// Parse a label over the alphabet I, X, Y, Z; qubit `j` is character `j`.
    pub fn parse_pauli(label: &str) -> Result<Self> {
        if label.is_empty() {
            return Err(Error::EmptyPauliLabel);
        }
        let n = label.chars().count();
        let mut u = BitVec::zeros(n);
        let mut v = BitVec::zeros(n);
        for (j, c) in label.chars().enumerate() {
            match c {
                'I' => {}
                'X' => u.set(j, true),
                'Z' => v.set(j, true),
                'Y' => {
                    u.set(j, true);
                    v.set(j, true);
                }
                other => return Err(Error::IllegalPauliChar(other)),
            }
        }
        Ok(SymplecticVector { u, v })
    }

    /// Inverse of [`parse_pauli`](Self::parse_pauli).
    pub fn pauli_label(&self) -> String {
        (0..self.n())
            .map(|j| match (self.u.get(j), self.v.get(j)) {
                (false, false) => 'I',
                (true, false) => 'X',
                (false, true) => 'Z',
                (true, true) => 'Y',
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.u.len()
    }

    pub fn u(&self) -> &BitVec {
        &self.u
    }

    pub fn v(&self) -> &BitVec {
        &self.v
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// `(u1,v1) * (u2,v2) = u1.v2 + v1.u2`; zero iff the Paulis commute.
    pub fn symplectic_product(&self, other: &SymplecticVector) -> Result<bool> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch {
                context: "symplectic product",
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(self.u.dot(&other.v) ^ self.v.dot(&other.u))
    }

    /// Weight of the underlying Pauli operator: `w(u OR v)`.
    pub fn generalized_weight(&self) -> usize {
        self.u.or(&self.v).count_ones()
    }

    pub fn xor(&self, other: &SymplecticVector) -> SymplecticVector {
        SymplecticVector {
            u: self.u.xor(&other.u),
            v: self.v.xor(&other.v),
        }
    }

    /// The concatenated 2n-bit form `[u | v]`.
    pub fn to_wide(&self) -> BitVec {
        self.u.concat(&self.v)
    }

    pub fn from_wide(wide: &BitVec) -> Result<Self> {
        if !wide.len().is_multiple_of(2) {
            return Err(Error::DimensionMismatch {
                context: "wide symplectic vector",
                expected: wide.len() + 1,
                got: wide.len(),
            });
        }
        let (u, v) = wide.split_at(wide.len() / 2);
        Ok(SymplecticVector { u, v })
    }
}

impl fmt::Display for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pauli_label())
    }
}

impl fmt::Debug for SymplecticVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.u, self.v)
    }
}

/// A Pauli operator `i^c X_u Z_v`. The phase exponent is bookkeeping for
/// display only; no operation in the crate depends on it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliOperator {
    pub phase_exponent: u8,
    pub vector: SymplecticVector,
}

impl PauliOperator {
    pub fn new(phase_exponent: u8, vector: SymplecticVector) -> Self {
        PauliOperator {
            phase_exponent: phase_exponent % 4,
            vector,
        }
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase_exponent {
            0 => "",
            1 => "i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}{}", self.vector)
    }
}

/// An r x 2n binary check matrix `[H_X | H_Z]`, one generator per row.
#[derive(Clone, PartialEq, Eq)]
pub struct CheckMatrix {
    hx: BitMatrix,
    hz: BitMatrix,
}

impl CheckMatrix {
    pub fn new(hx: BitMatrix, hz: BitMatrix) -> Result<Self> {
        if hx.n_rows() != hz.n_rows() || hx.n_cols() != hz.n_cols() {
            return Err(Error::DimensionMismatch {
                context: "check matrix halves",
                expected: hx.n_rows() * hx.n_cols(),
                got: hz.n_rows() * hz.n_cols(),
            });
        }
        Ok(CheckMatrix { hx, hz })
    }

    /// Split a width-2n matrix down the middle.
    pub fn from_wide(wide: &BitMatrix) -> Result<Self> {
        if !wide.n_cols().is_multiple_of(2) {
            return Err(Error::DimensionMismatch {
                context: "wide check matrix",
                expected: wide.n_cols() + 1,
                got: wide.n_cols(),
            });
        }
        let n = wide.n_cols() / 2;
        Ok(CheckMatrix {
            hx: wide.col_range(0, n),
            hz: wide.col_range(n, 2 * n),
        })
    }

    pub fn n(&self) -> usize {
        self.hx.n_cols()
    }

    pub fn r(&self) -> usize {
        self.hx.n_rows()
    }

    pub fn hx(&self) -> &BitMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BitMatrix {
        &self.hz
    }

    /// The full `[H_X | H_Z]` form.
    pub fn to_wide(&self) -> BitMatrix {
        self.hx.hstack(&self.hz).expect("halves have equal rows")
    }

    /// `H * Lambda = [H_Z | H_X]` (the symplectic form swaps halves).
    pub fn lambda_wide(&self) -> BitMatrix {
        self.hz.hstack(&self.hx).expect("halves have equal rows")
    }

    pub fn row_sym(&self, i: usize) -> SymplecticVector {
        SymplecticVector {
            u: self.hx.row(i),
            v: self.hz.row(i),
        }
    }

    pub fn rank(&self) -> usize {
        self.to_wide().rank()
    }

    /// The commutative condition `H_X H_Z^T + H_Z H_X^T = O`; equivalently
    /// `H_X H_Z^T` is symmetric.
    pub fn is_commutative(&self) -> bool {
        self.hx
            .mul_transpose(&self.hz)
            .expect("equal widths")
            .is_symmetric()
    }

    /// Error syndrome `H * Lambda * e^T`: bit i is the symplectic product of
    /// row i with `e`. Zero exactly when `e` commutes with every generator.
    pub fn syndrome(&self, e: &SymplecticVector) -> Result<BitVec> {
        if e.n() != self.n() {
            return Err(Error::DimensionMismatch {
                context: "syndrome",
                expected: self.n(),
                got: e.n(),
            });
        }
        Ok(BitVec::from_fn(self.r(), |i| {
            self.hx.row(i).dot(e.v()) ^ self.hz.row(i).dot(e.u())
        }))
    }

    /// Parse the check-matrix text format: the gf2 matrix format with a
    /// mandatory '|' between the X and Z halves.
    pub fn parse(text: &str) -> Result<Self> {
        let (wide, split) = parse_matrix(text)?;
        let Some(split) = split else {
            return Err(Error::MissingSeparator);
        };
        if wide.n_cols() != 2 * split {
            return Err(Error::DimensionMismatch {
                context: "check matrix halves",
                expected: 2 * split,
                got: wide.n_cols(),
            });
        }
        CheckMatrix::from_wide(&wide)
    }

    pub fn to_text(&self) -> String {
        self.to_wide().to_text(Some(self.n()))
    }
}

impl fmt::Debug for CheckMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CheckMatrix {}x2*{}\n{}",
            self.r(),
            self.n(),
            self.to_text()
        )
    }
}

/// Full-rank generator matrix of the symplectic dual of `h`'s row space:
/// the kernel of `H * Lambda`, of rank `2n - r`. Satisfies `H Λ G^T = O`.
pub fn dual_generator(h: &CheckMatrix) -> Result<BitMatrix> {
    let wide = h.to_wide();
    let rank = wide.rank();
    if rank < h.r() {
        return Err(Error::RankDeficient { rank, rows: h.r() });
    }
    Ok(h.lambda_wide().kernel_basis())
}

/// An `[[n, k, d]]` stabilizer code: a commutative full-rank check matrix
/// together with a generator of its symplectic dual and whatever distance
/// information the construction supplied.
#[derive(Clone, Debug)]
pub struct StabilizerCode {
    h: CheckMatrix,
    g_dual: BitMatrix,
    d_lower: Option<usize>,
    d_exact: Option<usize>,
    d_classical: Option<usize>,
    construction_tag: String,
}

impl StabilizerCode {
    /// Validate `h` (independent rows, commutative) and derive the dual
    /// generator from the kernel of `H * Lambda`.
    pub fn new(h: CheckMatrix, construction_tag: impl Into<String>) -> Result<Self> {
        let g_dual = dual_generator(&h)?;
        let code = StabilizerCode {
            h,
            g_dual,
            d_lower: None,
            d_exact: None,
            d_classical: None,
            construction_tag: construction_tag.into(),
        };
        code.check_invariants()?;
        Ok(code)
    }

    /// As [`new`](Self::new) but with a caller-supplied dual generator,
    /// which is verified against the duality condition and for full rank.
    pub fn with_dual(
        h: CheckMatrix,
        g_dual: BitMatrix,
        construction_tag: impl Into<String>,
    ) -> Result<Self> {
        let rank = h.to_wide().rank();
        if rank < h.r() {
            return Err(Error::RankDeficient { rank, rows: h.r() });
        }
        let expected = 2 * h.n() - h.r();
        if g_dual.n_cols() != 2 * h.n() || g_dual.n_rows() != expected {
            return Err(Error::DimensionMismatch {
                context: "dual generator shape",
                expected,
                got: g_dual.n_rows(),
            });
        }
        if g_dual.rank() != expected {
            return Err(Error::RankDeficient {
                rank: g_dual.rank(),
                rows: expected,
            });
        }
        let code = StabilizerCode {
            h,
            g_dual,
            d_lower: None,
            d_exact: None,
            d_classical: None,
            construction_tag: construction_tag.into(),
        };
        code.check_invariants()?;
        Ok(code)
    }

    pub fn n(&self) -> usize {
        self.h.n()
    }

    pub fn k(&self) -> usize {
        self.n() - self.r()
    }

    pub fn r(&self) -> usize {
        self.h.r()
    }

    pub fn h(&self) -> &CheckMatrix {
        &self.h
    }

    pub fn g_dual(&self) -> &BitMatrix {
        &self.g_dual
    }

    pub fn d_lower(&self) -> Option<usize> {
        self.d_lower
    }

    pub fn d_exact(&self) -> Option<usize> {
        self.d_exact
    }

    pub fn d_classical(&self) -> Option<usize> {
        self.d_classical
    }

    pub fn construction_tag(&self) -> &str {
        &self.construction_tag
    }

    /// Best-known error-correcting capability `floor((d-1)/2)`, from the
    /// exact distance when available, else the construction lower bound.
    pub fn t(&self) -> Option<usize> {
        self.d_exact.or(self.d_lower).map(|d| (d.max(1) - 1) / 2)
    }

    /// Syndrome-assignment capability `floor((d'-1)/4)` from the classical
    /// distance of the check matrix, when known.
    pub fn t_star(&self) -> Option<usize> {
        self.d_classical.map(|d| (d.max(1) - 1) / 4)
    }

    pub fn set_d_lower(&mut self, d: usize) {
        self.d_lower = Some(d);
    }

    pub fn set_d_exact(&mut self, d: usize) {
        debug_assert!(self.d_lower.is_none_or(|lo| d >= lo));
        self.d_exact = Some(d);
    }

    pub fn set_d_classical(&mut self, d: usize) {
        self.d_classical = Some(d);
    }

    /// Re-validate the defining identities: independent commuting
    /// generators and `H Λ G^T = O` with a full-rank dual that contains
    /// the row space of `h`.
    pub fn check_invariants(&self) -> Result<()> {
        let wide = self.h.to_wide();
        let rank = wide.rank();
        if rank < self.r() {
            return Err(Error::RankDeficient {
                rank,
                rows: self.r(),
            });
        }
        if !self.h.is_commutative() {
            return Err(Error::NotCommutative);
        }
        if !self.h.lambda_wide().mul_transpose(&self.g_dual)?.is_zero() {
            return Err(Error::InconsistentCodePair);
        }
        // self-orthogonality: every generator lies in the dual
        for i in 0..self.r() {
            if self.g_dual.solve_left(&wide.row(i))?.is_none() {
                return Err(Error::InconsistentCodePair);
            }
        }
        if let (Some(lo), Some(ex)) = (self.d_lower, self.d_exact) {
            if ex < lo {
                return Err(Error::BoundViolation(format!(
                    "exact distance {ex} below construction bound {lo}"
                )));
            }
        }
        Ok(())
    }
}

#[cfg(test)]
pub(crate) fn five_qubit_check() -> CheckMatrix {
    CheckMatrix::parse("10010|01100\n01001|00110\n10100|00011\n01010|10001\n").unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn five_qubit() -> CheckMatrix {
        five_qubit_check()
    }

    #[test]
    fn parse_pauli_five_qubit_generator() {
        let g1 = SymplecticVector::parse_pauli("XZZXI").unwrap();
        assert_eq!(g1.u().to_string(), "10010");
        assert_eq!(g1.v().to_string(), "01100");
        assert_eq!(g1.pauli_label(), "XZZXI");
    }

    #[test]
    fn parse_pauli_identity_and_y() {
        let id = SymplecticVector::parse_pauli("IIIII").unwrap();
        assert!(id.is_zero());
        let yy = SymplecticVector::parse_pauli("YY").unwrap();
        assert_eq!(yy.u().to_string(), "11");
        assert_eq!(yy.v().to_string(), "11");
    }

    #[test]
    fn parse_pauli_rejects_bad_input() {
        assert!(matches!(
            SymplecticVector::parse_pauli("XQZ"),
            Err(Error::IllegalPauliChar('Q'))
        ));
        assert!(matches!(
            SymplecticVector::parse_pauli(""),
            Err(Error::EmptyPauliLabel)
        ));
    }

    #[test]
    fn product_of_vector_with_itself_is_zero() {
        for seed in 0..10u64 {
            let m = BitMatrix::random(1, 16, 0.5, seed).unwrap();
            let x = SymplecticVector::from_wide(&m.row(0)).unwrap();
            assert!(!x.symplectic_product(&x).unwrap());
        }
    }

    #[test]
    fn product_examples() {
        let a = SymplecticVector::new(
            BitVec::from_binary_str("10").unwrap(),
            BitVec::from_binary_str("01").unwrap(),
        )
        .unwrap();
        let b = SymplecticVector::new(
            BitVec::from_binary_str("01").unwrap(),
            BitVec::from_binary_str("10").unwrap(),
        )
        .unwrap();
        assert!(!a.symplectic_product(&b).unwrap());

        let x1 = SymplecticVector::parse_pauli("XIIII").unwrap();
        let g4 = SymplecticVector::parse_pauli("ZXIXZ").unwrap();
        assert!(x1.symplectic_product(&g4).unwrap());
    }

    #[test]
    fn generalized_weight_examples() {
        assert_eq!(SymplecticVector::zero(5).generalized_weight(), 0);
        let x = SymplecticVector::new(
            BitVec::from_binary_str("110").unwrap(),
            BitVec::from_binary_str("011").unwrap(),
        )
        .unwrap();
        assert_eq!(x.generalized_weight(), 3);
        let g1 = SymplecticVector::parse_pauli("XZZXI").unwrap();
        assert_eq!(g1.generalized_weight(), 4);
    }

    #[test]
    fn generalized_weight_bounds() {
        for seed in 0..40u64 {
            let m = BitMatrix::random(1, 24, 0.4, seed).unwrap();
            let x = SymplecticVector::from_wide(&m.row(0)).unwrap();
            let total = x.u().count_ones() + x.v().count_ones();
            let gw = x.generalized_weight();
            assert!(gw <= total);
            assert!(total <= 2 * gw);
        }
    }

    #[test]
    fn five_qubit_is_commutative_rank_four() {
        let h = five_qubit();
        assert!(h.is_commutative());
        assert_eq!(h.rank(), 4);
    }

    #[test]
    fn identity_halves_commute() {
        let h = CheckMatrix::new(BitMatrix::identity(3), BitMatrix::identity(3)).unwrap();
        assert!(h.is_commutative());
    }

    #[test]
    fn x_and_z_on_same_qubit_do_not_commute() {
        let h = CheckMatrix::new(
            BitMatrix::from_binary_rows(&["1", "0"]),
            BitMatrix::from_binary_rows(&["0", "1"]),
        )
        .unwrap();
        assert!(!h.is_commutative());
    }

    #[test]
    fn pairwise_row_products_vanish_for_commutative_matrices() {
        let h = five_qubit();
        for i in 0..h.r() {
            for j in 0..h.r() {
                assert!(!h.row_sym(i).symplectic_product(&h.row_sym(j)).unwrap());
            }
        }
    }

    #[test]
    fn dual_of_five_qubit() {
        let h = five_qubit();
        let g = dual_generator(&h).unwrap();
        assert_eq!(g.n_rows(), 6);
        assert_eq!(g.n_cols(), 10);
        assert_eq!(g.rank(), 6);
        assert!(h.lambda_wide().mul_transpose(&g).unwrap().is_zero());
    }

    #[test]
    fn dual_of_pure_x_generators_has_zero_z_part() {
        let n = 4;
        let h = CheckMatrix::new(BitMatrix::identity(n), BitMatrix::zeros(n, n)).unwrap();
        let g = dual_generator(&h).unwrap();
        assert_eq!(g.n_rows(), n);
        for i in 0..g.n_rows() {
            let row = SymplecticVector::from_wide(&g.row(i)).unwrap();
            assert!(row.v().is_zero());
        }
    }

    #[test]
    fn dual_rejects_dependent_rows() {
        let wide = BitMatrix::from_binary_rows(&["1010", "1010"]);
        let h = CheckMatrix::from_wide(&wide).unwrap();
        assert!(matches!(
            dual_generator(&h),
            Err(Error::RankDeficient { rank: 1, rows: 2 })
        ));
    }

    #[test]
    fn syndrome_of_zero_error_is_zero() {
        let h = five_qubit();
        let s = h.syndrome(&SymplecticVector::zero(5)).unwrap();
        assert!(s.is_zero());
    }

    #[test]
    fn syndrome_of_x1_on_five_qubit() {
        let h = five_qubit();
        let s = h
            .syndrome(&SymplecticVector::parse_pauli("XIIII").unwrap())
            .unwrap();
        assert_eq!(s.to_string(), "0001");
    }

    #[test]
    fn syndrome_is_additive() {
        let h = five_qubit();
        for seed in 0..50u64 {
            let m = BitMatrix::random(2, 10, 0.5, seed).unwrap();
            let e1 = SymplecticVector::from_wide(&m.row(0)).unwrap();
            let e2 = SymplecticVector::from_wide(&m.row(1)).unwrap();
            let lhs = h.syndrome(&e1.xor(&e2)).unwrap();
            let rhs = h.syndrome(&e1).unwrap().xor(&h.syndrome(&e2).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn check_matrix_columns_are_basis_error_syndromes() {
        let h = five_qubit();
        let wide = h.to_wide();
        let n = h.n();
        for j in 0..n {
            let mut label: Vec<char> = vec!['I'; n];
            label[j] = 'Z';
            let e = SymplecticVector::parse_pauli(&label.iter().collect::<String>()).unwrap();
            let s = h.syndrome(&e).unwrap();
            for i in 0..h.r() {
                assert_eq!(s.get(i), wide.get(i, j));
            }
            label[j] = 'X';
            let e = SymplecticVector::parse_pauli(&label.iter().collect::<String>()).unwrap();
            let s = h.syndrome(&e).unwrap();
            for i in 0..h.r() {
                assert_eq!(s.get(i), wide.get(i, n + j));
            }
        }
    }

    #[test]
    fn stabilizer_code_from_five_qubit() {
        let code = StabilizerCode::new(five_qubit(), "five-qubit").unwrap();
        assert_eq!(code.n(), 5);
        assert_eq!(code.k(), 1);
        assert_eq!(code.r(), 4);
        code.check_invariants().unwrap();
    }

    #[test]
    fn stabilizer_code_rejects_anticommuting_generators() {
        let h = CheckMatrix::new(
            BitMatrix::from_binary_rows(&["1", "0"]),
            BitMatrix::from_binary_rows(&["0", "1"]),
        )
        .unwrap();
        assert!(matches!(
            StabilizerCode::new(h, "bad"),
            Err(Error::NotCommutative)
        ));
    }

    #[test]
    fn pauli_operator_display() {
        let v = SymplecticVector::parse_pauli("XYZ").unwrap();
        assert_eq!(PauliOperator::new(0, v.clone()).to_string(), "XYZ");
        assert_eq!(PauliOperator::new(1, v.clone()).to_string(), "iXYZ");
        assert_eq!(PauliOperator::new(2, v.clone()).to_string(), "-XYZ");
        assert_eq!(PauliOperator::new(3, v).to_string(), "-iXYZ");
    }

    #[test]
    fn check_matrix_text_round_trip() {
        let h = five_qubit();
        let text = h.to_text();
        assert_eq!(CheckMatrix::parse(&text).unwrap(), h);
        assert!(matches!(
            CheckMatrix::parse("1010\n0101\n"),
            Err(Error::MissingSeparator)
        ));
    }
}

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn arb_sym(n: usize) -> impl Strategy<Value = SymplecticVector> {
        proptest::collection::vec(any::<bool>(), 2 * n).prop_map(move |bits| {
            SymplecticVector::new(
                BitVec::from_fn(n, |i| bits[i]),
                BitVec::from_fn(n, |i| bits[n + i]),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn every_vector_commutes_with_itself(x in arb_sym(12)) {
            prop_assert!(!x.symplectic_product(&x).unwrap());
        }

        #[test]
        fn product_is_symmetric(x in arb_sym(9), y in arb_sym(9)) {
            prop_assert_eq!(
                x.symplectic_product(&y).unwrap(),
                y.symplectic_product(&x).unwrap()
            );
        }

        #[test]
        fn generalized_weight_bracket(x in arb_sym(16)) {
            let total = x.u().count_ones() + x.v().count_ones();
            let gw = x.generalized_weight();
            prop_assert!(gw <= total);
            prop_assert!(total <= 2 * gw);
        }

        #[test]
        fn pauli_label_round_trips(x in arb_sym(10)) {
            let label = x.pauli_label();
            prop_assert_eq!(SymplecticVector::parse_pauli(&label).unwrap(), x);
        }

        #[test]
        fn syndrome_is_a_homomorphism(e1 in arb_sym(5), e2 in arb_sym(5)) {
            let h = super::five_qubit_check();
            let lhs = h.syndrome(&e1.xor(&e2)).unwrap();
            let rhs = h.syndrome(&e1).unwrap().xor(&h.syndrome(&e2).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
