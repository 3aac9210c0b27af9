use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("matrix is singular over GF(2)")]
    Singular,
    #[error("probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("matrix text contains no rows")]
    EmptyMatrix,
    #[error("check matrix text is missing the '|' separator")]
    MissingSeparator,
    #[error("permutation image {0:?} is not a bijection")]
    NotAPermutation(Vec<usize>),
    #[error("illegal Pauli character {0:?} (expected I, X, Y or Z)")]
    IllegalPauliChar(char),
    #[error("Pauli label is empty")]
    EmptyPauliLabel,
    #[error("check matrix rows are dependent: rank {rank} < {rows} rows")]
    RankDeficient { rank: usize, rows: usize },
    #[error("check matrix violates the commutative condition")]
    NotCommutative,
    #[error("subcode condition violated: h1 * g2^T != O")]
    SubcodeViolated,
    #[error("orthogonality condition violated: h1 * h2^T != O")]
    OrthogonalityViolated,
    #[error("invalid code dimension k = {k}")]
    InvalidDimension { k: isize },
    #[error("enlargement matrix P is singular")]
    SingularP,
    #[error("enlargement matrix I + P is singular")]
    SingularIdentityPlusP,
    #[error("pairing matrix H3 * G3^T is singular")]
    SingularPairing,
    #[error("no 1x1 matrix P over GF(2) has both P and I + P nonsingular")]
    EnlargementTooNarrow,
    #[error("permuted u|u+v condition ({0}) failed")]
    UuvCondition(u8),
    #[error("generator and parity-check matrices do not describe the same code")]
    InconsistentCodePair,
    #[error("exhaustive permutation search limited to 12 columns, got {cols}")]
    ExhaustiveSearchTooLarge { cols: usize },
    #[error("enumeration budget exceeded: {enumerated} words inspected, best value {best}")]
    BudgetExceeded { enumerated: u64, best: usize },
    #[error("distinct errors {first} and {second} share a syndrome")]
    SyndromeCollision { first: String, second: String },
    #[error("syndrome width {got} does not match table width {expected}")]
    SyndromeWidthMismatch { expected: usize, got: usize },
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("p = {p} is not congruent to {expected} (mod {modulus})")]
    WrongResidueClass {
        p: u64,
        expected: &'static str,
        modulus: u64,
    },
    #[error("2 is not a quadratic residue mod {0}; no binary QR code exists")]
    TwoNotResidue(u64),
    #[error("vector violates a_0 = 0 and a_i = a_(n-i)")]
    SymmetryViolated,
    #[error("Reed-Muller order r = {r} out of range for m = {m}")]
    RmOrderOutOfRange { r: i32, m: u32 },
    #[error("quantum Reed-Muller code requires r >= 1 and m >= 2r, got r = {r}, m = {m}")]
    RmParamsOutOfRange { r: i32, m: u32 },
    #[error("a theorem-guaranteed bound failed: {0}")]
    BoundViolation(String),
    #[error("unknown bound name {0:?}")]
    UnknownBound(String),
    #[error("argument {value} is outside [0, 1]")]
    OutOfRange { value: f64 },
    #[error("grid must have at least 2 points, got {0}")]
    GridTooSmall(usize),
}

impl Error {
    /// Stable machine-readable discriminant for CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::Singular => "singular",
            Error::InvalidProbability(_) => "invalid-probability",
            Error::Parse { .. } => "parse",
            Error::EmptyMatrix => "empty-matrix",
            Error::MissingSeparator => "missing-separator",
            Error::NotAPermutation(_) => "not-a-permutation",
            Error::IllegalPauliChar(_) => "illegal-pauli-char",
            Error::EmptyPauliLabel => "empty-pauli-label",
            Error::RankDeficient { .. } => "rank-deficient",
            Error::NotCommutative => "not-commutative",
            Error::SubcodeViolated => "subcode-violated",
            Error::OrthogonalityViolated => "orthogonality-violated",
            Error::InvalidDimension { .. } => "invalid-dimension",
            Error::SingularP => "singular-p",
            Error::SingularIdentityPlusP => "singular-i-plus-p",
            Error::SingularPairing => "singular-pairing",
            Error::EnlargementTooNarrow => "enlargement-too-narrow",
            Error::UuvCondition(_) => "uuv-condition",
            Error::InconsistentCodePair => "inconsistent-code-pair",
            Error::ExhaustiveSearchTooLarge { .. } => "exhaustive-too-large",
            Error::BudgetExceeded { .. } => "budget-exceeded",
            Error::SyndromeCollision { .. } => "syndrome-collision",
            Error::SyndromeWidthMismatch { .. } => "syndrome-width-mismatch",
            Error::NotPrime(_) => "not-prime",
            Error::WrongResidueClass { .. } => "wrong-residue-class",
            Error::TwoNotResidue(_) => "two-not-residue",
            Error::SymmetryViolated => "symmetry-violated",
            Error::RmOrderOutOfRange { .. } => "rm-order-out-of-range",
            Error::RmParamsOutOfRange { .. } => "rm-params-out-of-range",
            Error::BoundViolation(_) => "bound-violation",
            Error::UnknownBound(_) => "unknown-bound",
            Error::OutOfRange { .. } => "out-of-range",
            Error::GridTooSmall(_) => "grid-too-small",
        }
    }
}
