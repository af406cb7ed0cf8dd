//! Built-in case registry.
//!
//! Ships the two cases C-47 and C-55 with their parameter multisets,
//! witness words, the preserved symplectic forms pinned entry-for-entry,
//! and the expected verification data (determinants and transvection image
//! vectors). The witness words are embedded verbatim with SHA-256 checksums
//! so the one-time transcription stays test-guarded.

use num_bigint::BigInt;

use crate::certify::{Certificate, Expected};
use crate::exact::{ExactMatrix, ExactVector};
use crate::hypergeo::{build_case, HyperCase, HypergeoError, ParameterMultiset};

/// Witness word for C-47, freely reduced, length 93.
pub const WITNESS_C47: &str = "bbbbbaabbbbbbAAbbbbbbaabbbbbbAAbbbbbbAAbbbbbbABaBaaBBBBBBAAAbAbaaBaBaBaBaBAAAAAAABaBaBBaBabaa";
/// SHA-256 of [`WITNESS_C47`].
pub const WITNESS_C47_SHA256: &str =
    "6b0461150a23c1ffe34b872e6dc2a445db4d5d73ad9977d03a38c638ae6705f5";

/// Witness word for C-55, freely reduced, length 49.
pub const WITNESS_C55: &str = "baaaabaaaabaaaabaaaabaaaabaaaabaaaaaBABaBABAAbaaB";
/// SHA-256 of [`WITNESS_C55`].
pub const WITNESS_C55_SHA256: &str =
    "e2ab5e22b612e89b3d725ca31fe7ebb621692f29f4f13d28ab34c632b6eb7ae6";

const ALPHA_C47: &str = "0,0,1/5,2/5,3/5,4/5";
const BETA_C47: &str = "1/2,1/2,1/3,1/3,2/3,2/3";
const ALPHA_C55: &str = "0,0,1/8,3/8,5/8,7/8";
const BETA_C55: &str = "1/2,1/2,1/12,5/12,7/12,11/12";

const OMEGA_C47: [[i64; 6]; 6] = [
    [0, 29, -50, 51, -28, 1],
    [-29, 0, 29, -50, 51, -28],
    [50, -29, 0, 29, -50, 51],
    [-51, 50, -29, 0, 29, -50],
    [28, -51, 50, -29, 0, 29],
    [-1, 28, -51, 50, -29, 0],
];

const OMEGA_C55: [[i64; 6]; 6] = [
    [0, 1, 6, 3, 4, 5],
    [-1, 0, 1, 6, 3, 4],
    [-6, -1, 0, 1, 6, 3],
    [-3, -6, -1, 0, 1, 6],
    [-4, -3, -6, -1, 0, 1],
    [-5, -4, -3, -6, -1, 0],
];

const DET_OMEGA_C47: i64 = 1679616;
const DET_OMEGA_C55: i64 = 4096;

const X1_C47: [i64; 6] = [-5, -8, -10, -8, -5, 0];
const X2_C47: [i64; 6] = [
    491566906334,
    537748595482,
    224774947812,
    73905511690,
    -18977654566,
    0,
];
const X1_C55: [i64; 6] = [-4, 1, 2, 1, -4, 0];
const X2_C55: [i64; 6] = [40999920, -275447328, -132048384, 236325024, 314749968, 0];

/// Labels of the built-in cases.
pub fn builtin_labels() -> &'static [&'static str] {
    &["C-47", "C-55"]
}

/// Builds a built-in case from its embedded parameters.
pub fn builtin_case(label: &str) -> Result<HyperCase, HypergeoError> {
    let (alpha, beta) = match label {
        "C-47" => (ALPHA_C47, BETA_C47),
        "C-55" => (ALPHA_C55, BETA_C55),
        _ => {
            return Err(HypergeoError::InvalidParameter(format!(
                "unknown case label '{label}' (built-in: {})",
                builtin_labels().join(", ")
            )))
        }
    };
    build_case(
        label,
        ParameterMultiset::parse(alpha)?,
        ParameterMultiset::parse(beta)?,
    )
}

/// The pinned symplectic form of a built-in case.
pub fn pinned_omega(label: &str) -> Option<ExactMatrix> {
    let rows = match label {
        "C-47" => &OMEGA_C47,
        "C-55" => &OMEGA_C55,
        _ => return None,
    };
    let rows: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    Some(ExactMatrix::from_int_rows(&rows))
}

/// The full built-in certificate: case parameters, witness word, pinned
/// form, and expected verification values.
pub fn builtin_certificate(label: &str) -> Option<Certificate> {
    let (alpha, beta, word, det, x1, x2) = match label {
        "C-47" => (
            ALPHA_C47,
            BETA_C47,
            WITNESS_C47,
            DET_OMEGA_C47,
            &X1_C47,
            &X2_C47,
        ),
        "C-55" => (
            ALPHA_C55,
            BETA_C55,
            WITNESS_C55,
            DET_OMEGA_C55,
            &X1_C55,
            &X2_C55,
        ),
        _ => return None,
    };
    Some(Certificate {
        label: label.to_string(),
        alpha: ParameterMultiset::parse(alpha).expect("embedded parameters parse"),
        beta: ParameterMultiset::parse(beta).expect("embedded parameters parse"),
        word: word.to_string(),
        omega: pinned_omega(label),
        expected: Some(Expected {
            det_omega: Some(BigInt::from(det)),
            x1: Some(ExactVector::from_integers(x1.as_slice())),
            x2: Some(ExactVector::from_integers(x2.as_slice())),
            omega: pinned_omega(label),
        }),
    })
}
