//! The versioned JSON report form of a stabilizer code.

use serde::Serialize;

use crate::distance::CapabilityReport;
use crate::symplectic::StabilizerCode;

/// Schema version embedded in every CLI report envelope; golden files pin it.
pub const SCHEMA_VERSION: u32 = 1;

/// Serialized form of a [`StabilizerCode`]: parameters, distance knowledge,
/// provenance tag and both matrices in the repo text format (rows as
/// `"xpart|zpart"` strings).
#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub d_lower: Option<usize>,
    pub d_exact: Option<usize>,
    pub d_classical: Option<usize>,
    pub t: Option<usize>,
    pub t_star: Option<usize>,
    pub construction_tag: String,
    pub h: Vec<String>,
    pub g_dual: Vec<String>,
}

impl From<&StabilizerCode> for CodeReport {
    fn from(code: &StabilizerCode) -> Self {
        let n = code.n();
        CodeReport {
            n,
            k: code.k(),
            r: code.r(),
            d_lower: code.d_lower(),
            d_exact: code.d_exact(),
            d_classical: code.d_classical(),
            t: code.t(),
            t_star: code.t_star(),
            construction_tag: code.construction_tag().to_string(),
            h: code.h().to_wide().to_row_strings(Some(n)),
            g_dual: code.g_dual().to_row_strings(Some(n)),
        }
    }
}

/// Serialized capability estimate; the exact additional-error count is a
/// decimal string since it exceeds 64 bits for long codes.
#[derive(Clone, Debug, Serialize)]
pub struct CapabilitySection {
    pub d_classical: usize,
    pub d_x: usize,
    pub d_z: usize,
    pub d_y: usize,
    pub t_star: usize,
    pub corollary_applied: bool,
    pub t: usize,
    pub additional_count: String,
    /// Theorem-3 surplus condition: extra correctable errors exist beyond
    /// weight t exactly when t < 2 t*.
    pub additional_surplus: bool,
}

impl From<&CapabilityReport> for CapabilitySection {
    fn from(cap: &CapabilityReport) -> Self {
        CapabilitySection {
            d_classical: cap.d_classical,
            d_x: cap.d_x,
            d_z: cap.d_z,
            d_y: cap.d_y,
            t_star: cap.t_star,
            corollary_applied: cap.corollary_applied,
            t: cap.t,
            additional_count: cap.additional_count.to_string(),
            additional_surplus: cap.t < 2 * cap.t_star,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::five_qubit_check;

    #[test]
    fn report_round_trips_matrix_text() {
        let code = StabilizerCode::new(five_qubit_check(), "five-qubit").unwrap();
        let report = CodeReport::from(&code);
        assert_eq!(report.n, 5);
        assert_eq!(report.k, 1);
        assert_eq!(report.h[0], "10010|01100");
        assert_eq!(report.g_dual.len(), 6);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"construction_tag\":\"five-qubit\""));
    }
}
