//! Exact-arithmetic toolkit for the weak Lefschetz property of level Artinian
//! monomial almost complete intersections in three variables.
//!
//! The ideals studied are `(x^{α+t}, y^{β+t}, z^{γ+t}, x^α y^β z^γ)` with
//! `0 ≤ α ≤ β ≤ γ` and `t > 0`.  The crate decides the weak Lefschetz
//! property by a banded binomial determinant, cross-validates against exact
//! rank computation of the multiplication maps, evaluates the closed-form
//! determinants of the diagonal and extremal families, computes Hilbert
//! functions two independent ways, classifies their peak shape, and counts
//! lozenge tilings of hexagons to realize the tiling correspondence of the
//! extremal determinants.
//!
//! All arithmetic is exact; there is no floating point anywhere.

pub mod conjecture;
pub mod error;
pub mod exactmath;
pub mod ideal;
pub mod lefschetz;
pub mod tilings;

pub use conjecture::{
    predict, scan, CharacteristicVerdicts, ConjectureCheck, Prediction, ProofStatus, ScanBox,
    ScanRow,
};
pub use error::{Error, Result};
pub use exactmath::{
    binomial, det_exact, factor_bounded, hyperfactorial, is_prime, toeplitz_binomial_det,
    Factorization,
};
pub use ideal::{
    classify, hilbert_from_resolution, hilbert_oracle, socle_degree, unimodality, CaseLabel,
    FreeResolution, HilbertFunction, MaciParams, UnimodalityReport,
};
pub use lefschetz::{
    build_matrix_m, char_bound, criterion_applies, det_closed_diag, det_closed_gamma_max,
    det_closed_t_min, det_m, failing_characteristics, multiplication_rank_profile,
    wlp_by_determinant, wlp_direct, Characteristic, DegreeRank, FailingCharacteristics, MatrixM,
    RankProfile, WlpMethod, WlpVerdict, WlpWitness,
};
pub use tilings::{
    correspondence_gamma_max, correspondence_t_min, lozenge_count, lozenge_count_oracle,
    lozenge_count_oracle_bounded, HexagonSides, DEFAULT_ENUMERATION_BOUND,
};
