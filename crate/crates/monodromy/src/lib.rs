//! Exact-arithmetic toolkit for degree-six symplectic hypergeometric
//! monodromy groups.
//!
//! The crate has two halves. The exact half ([`exact`], [`hypergeo`],
//! [`words`], [`certify`]) builds monodromy groups from rational parameter
//! multisets, evaluates words in the generators, and verifies arithmeticity
//! certificates — commuting Ω-orthogonal transvections produced by a witness
//! word — with arbitrary-precision rational arithmetic and zero
//! floating-point content. The numeric half ([`limitset`]) approximates the
//! proximal limit set of a group by enumerating freely reduced words applied
//! to the attracting fixed line of a loxodromic element, and projects the
//! resulting point cloud to something plottable.
//!
//! Two cases, `C-47` and `C-55`, ship built in; see [`registry`]. Every
//! major capability has a runnable example under `examples/`, and the
//! `monodromy` binary exposes the same operations as subcommands.

pub mod certify;
pub mod exact;
pub mod hypergeo;
pub mod limitset;
pub mod registry;
pub mod words;

pub use certify::{verify_certificate, Certificate, VerificationReport};
pub use exact::{ExactMatrix, ExactVector, IntPoly};
pub use hypergeo::{build_case, HyperCase, ParameterMultiset};
pub use words::Word;
