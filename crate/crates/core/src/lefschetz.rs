//! The determinant criterion for the weak Lefschetz property: the banded
//! binomial matrix whose determinant modulo the field characteristic decides
//! the property, its closed-form evaluations, and an independent check by
//! exact rank computation of the multiplication maps ×(x+y+z).

use std::collections::HashMap;

use num_bigint::BigInt;

use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactmath::{
    binomial, det_exact, exact_div, factor_bounded, hyperfactorial, is_prime, rank_mod_prime,
    rank_rational, Factorization,
};
use crate::ideal::{hilbert_oracle, monomial_survives, CaseLabel, MaciParams};

/// Field characteristic: zero or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(c: u64) -> Result<Self> {
        if c != 0 && !is_prime(c) {
            return Err(Error::InvalidParameters(format!(
                "characteristic must be 0 or a prime, got {c}"
            )));
        }
        Ok(Characteristic(c))
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl std::fmt::Display for Characteristic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The square integer matrix of the determinant criterion, of size
/// `n = t + (α + β − 2γ)/3`.  The top block has `t − σ/3` rows with entries
/// `C(γ, σ/3 + i − j)`; the bottom block has `(2(α+β) − γ)/3` rows with
/// entries `C(γ+t, β+t+1−k−j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixM {
    entries: Vec<Vec<BigInt>>,
    top_rows: usize,
    bottom_rows: usize,
}

impl MatrixM {
    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn top_rows(&self) -> usize {
        self.top_rows
    }

    pub fn bottom_rows(&self) -> usize {
        self.bottom_rows
    }
}

/// Checks the criterion's hypotheses: α ≥ 1, 3 | σ, γ ≤ 2(α+β), t ≥ σ/3.
/// The two sporadic tuples satisfy them and are accepted.
fn check_criterion_hypotheses(p: MaciParams) -> Result<()> {
    if p.alpha() == 0 {
        return Err(Error::Inapplicable(
            "determinant criterion requires α ≥ 1".into(),
        ));
    }
    if p.sigma() % 3 != 0 {
        return Err(Error::Inapplicable(
            "determinant criterion requires 3 | α + β + γ".into(),
        ));
    }
    if p.gamma() > 2 * (p.alpha() + p.beta()) {
        return Err(Error::Inapplicable(
            "determinant criterion requires γ ≤ 2(α + β)".into(),
        ));
    }
    if 3 * p.t() < p.sigma() {
        return Err(Error::Inapplicable(
            "determinant criterion requires t ≥ σ/3".into(),
        ));
    }
    Ok(())
}

/// `true` when the determinant criterion covers the tuple.
pub fn criterion_applies(p: MaciParams) -> bool {
    check_criterion_hypotheses(p).is_ok()
}

/// Builds the criterion matrix.  `n` may be zero (both blocks empty).
pub fn build_matrix_m(p: MaciParams) -> Result<MatrixM> {
    check_criterion_hypotheses(p)?;
    let (a, b, g, t) = (
        p.alpha() as i64,
        p.beta() as i64,
        p.gamma() as i64,
        p.t() as i64,
    );
    let third = (a + b + g) / 3;
    let top = (t - third) as usize;
    let bottom = ((2 * (a + b) - g) / 3) as usize;
    let n = top + bottom;
    let mut entries = Vec::with_capacity(n);
    for i in 1..=top as i64 {
        entries.push(
            (1..=n as i64)
                .map(|j| binomial(g as u64, third + i - j))
                .collect(),
        );
    }
    for k in 1..=bottom as i64 {
        entries.push(
            (1..=n as i64)
                .map(|j| binomial((g + t) as u64, b + t + 1 - k - j))
                .collect(),
        );
    }
    Ok(MatrixM {
        entries,
        top_rows: top,
        bottom_rows: bottom,
    })
}

/// Exact determinant of the criterion matrix.
pub fn det_m(p: MaciParams) -> Result<BigInt> {
    let m = build_matrix_m(p)?;
    det_exact(m.entries())
}

/// Closed form for α = β = γ ∈ {1, 2, 3}, t ≥ α.
pub fn det_closed_diag(p: MaciParams) -> Result<BigInt> {
    let a = p.alpha();
    if !(p.beta() == a && p.gamma() == a && (1..=3).contains(&a)) {
        return Err(Error::Inapplicable(
            "closed form requires α = β = γ ∈ {1, 2, 3}".into(),
        ));
    }
    if p.t() < a {
        return Err(Error::Inapplicable(format!(
            "closed form requires t ≥ {a}"
        )));
    }
    let t = BigInt::from(p.t());
    let even = p.t() % 2 == 0;
    let det = match (a, even) {
        (1, true) => BigInt::zero(),
        (1, false) => BigInt::from(2),
        (2, true) => -(&t * &t) * (&t + 3),
        (2, false) => (&t + 2) * (&t + 2) * (&t - 1),
        (3, true) => BigInt::zero(),
        (3, false) => {
            let num: BigInt =
                (&t - 1) * (&t - 1) * (&t + 1) * (&t + 2) * (&t + 4) * (&t + 4);
            -exact_div(num, &BigInt::from(4))
        }
        _ => unreachable!(),
    };
    Ok(det)
}

/// Closed form for the extremal case γ = 2(α + β):
/// `H(δ)H(α+β)²H(γ+δ) / (H(γ)H(t)²)` with δ = t − (α+β).  Always positive.
pub fn det_closed_gamma_max(p: MaciParams) -> Result<BigInt> {
    let (a, b, g, t) = (
        p.alpha() as u64,
        p.beta() as u64,
        p.gamma() as u64,
        p.t() as u64,
    );
    if a < 1 {
        return Err(Error::Inapplicable("closed form requires α ≥ 1".into()));
    }
    if g != 2 * (a + b) {
        return Err(Error::Inapplicable(
            "closed form requires γ = 2(α + β)".into(),
        ));
    }
    if t < a + b {
        return Err(Error::Inapplicable(
            "closed form requires t ≥ α + β".into(),
        ));
    }
    let delta = t - (a + b);
    let hab = hyperfactorial(a + b);
    let ht = hyperfactorial(t);
    let num = hyperfactorial(delta) * &hab * &hab * hyperfactorial(g + delta);
    let den = hyperfactorial(g) * &ht * &ht;
    Ok(exact_div(num, &den))
}

/// Closed form for the extremal case t = σ/3:
/// `(−1)^C(λ,2) H(2t−γ)H(2t−β)H(2t−α)H(σ) / (H(α+t)H(β+t)H(γ+t))`
/// with λ = (2(α+β) − γ)/3.  Never zero.
pub fn det_closed_t_min(p: MaciParams) -> Result<BigInt> {
    let (a, b, g, t) = (
        p.alpha() as u64,
        p.beta() as u64,
        p.gamma() as u64,
        p.t() as u64,
    );
    let sigma = a + b + g;
    if a < 1 {
        return Err(Error::Inapplicable("closed form requires α ≥ 1".into()));
    }
    if g > 2 * (a + b) {
        return Err(Error::Inapplicable(
            "closed form requires γ ≤ 2(α + β)".into(),
        ));
    }
    if sigma % 3 != 0 {
        return Err(Error::Inapplicable(
            "closed form requires 3 | α + β + γ".into(),
        ));
    }
    if 3 * t != sigma {
        return Err(Error::Inapplicable("closed form requires t = σ/3".into()));
    }
    let lambda = (2 * (a + b) - g) / 3;
    let num = hyperfactorial(2 * t - g)
        * hyperfactorial(2 * t - b)
        * hyperfactorial(2 * t - a)
        * hyperfactorial(sigma);
    let den = hyperfactorial(a + t) * hyperfactorial(b + t) * hyperfactorial(g + t);
    let det = exact_div(num, &den);
    // sign (−1)^C(λ,2)
    if lambda.saturating_sub(1) * lambda / 2 % 2 == 1 {
        Ok(-det)
    } else {
        Ok(det)
    }
}

/// Effective characteristic bound for the two extremal families: every prime
/// ≥ the bound is guaranteed not to divide the determinant, so the property
/// holds in those characteristics.  Returns `t + α + β` when γ = 2(α+β),
/// else `σ` when t = σ/3.
pub fn char_bound(p: MaciParams) -> Result<u64> {
    if det_closed_gamma_max(p).is_ok() {
        return Ok((p.t() + p.alpha() + p.beta()) as u64);
    }
    if det_closed_t_min(p).is_ok() {
        return Ok(p.sigma() as u64);
    }
    Err(Error::Inapplicable(
        "characteristic bound covers only γ = 2(α + β) or t = σ/3".into(),
    ))
}

/// How a property verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WlpMethod {
    Determinant,
    ClosedForm,
    DirectRank,
    KnownCase,
}

impl std::fmt::Display for WlpMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            WlpMethod::Determinant => "determinant",
            WlpMethod::ClosedForm => "closed_form",
            WlpMethod::DirectRank => "direct_rank",
            WlpMethod::KnownCase => "known_case",
        };
        f.write_str(s)
    }
}

/// Supporting evidence attached to a verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WlpWitness {
    Determinant(BigInt),
    Profile(RankProfile),
    Case(CaseLabel),
}

/// Whether the property holds, how that was decided, and the evidence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WlpVerdict {
    pub holds: bool,
    pub method: WlpMethod,
    pub characteristic: Characteristic,
    pub witness: WlpWitness,
}

/// Decides the property by the determinant criterion: it holds iff
/// `det M ≢ 0` modulo the characteristic (nonzero, in characteristic zero).
pub fn wlp_by_determinant(p: MaciParams, characteristic: Characteristic) -> Result<WlpVerdict> {
    let det = det_m(p)?;
    let holds = if characteristic.is_zero() {
        !det.is_zero()
    } else {
        !(&det % BigInt::from(characteristic.value())).is_zero()
    };
    Ok(WlpVerdict {
        holds,
        method: WlpMethod::Determinant,
        characteristic,
        witness: WlpWitness::Determinant(det),
    })
}

/// The characteristics in which the property fails, as the bounded prime
/// factorization of the determinant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailingCharacteristics {
    /// `det M = 0`: the property fails over every field.
    EveryCharacteristic,
    /// `det M ≠ 0`: the listed primes ≤ bound are exactly the failing
    /// characteristics up to the bound.
    Bounded(Factorization),
}

/// Factors the determinant up to `bound`; the listed primes are exactly the
/// characteristics ≤ bound where the property fails.
pub fn failing_characteristics(p: MaciParams, bound: u64) -> Result<FailingCharacteristics> {
    let det = det_m(p)?;
    if det.is_zero() {
        return Ok(FailingCharacteristics::EveryCharacteristic);
    }
    Ok(FailingCharacteristics::Bounded(factor_bounded(
        &det, bound,
    )?))
}

/// Rank of one multiplication map ×(x+y+z) between consecutive degrees.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeRank {
    pub degree: u32,
    /// h(d), the source dimension.
    pub source_dim: u64,
    /// h(d+1), the target dimension.
    pub target_dim: u64,
    pub rank: u64,
}

impl DegreeRank {
    pub fn has_deficit(&self) -> bool {
        self.rank < self.source_dim.min(self.target_dim)
    }
}

/// Ranks of every multiplication map from degree 0 up to the socle degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankProfile {
    pub characteristic: Characteristic,
    pub degrees: Vec<DegreeRank>,
}

impl RankProfile {
    pub fn deficit_degrees(&self) -> Vec<u32> {
        self.degrees
            .iter()
            .filter(|r| r.has_deficit())
            .map(|r| r.degree)
            .collect()
    }

    pub fn first_deficit(&self) -> Option<u32> {
        self.degrees.iter().find(|r| r.has_deficit()).map(|r| r.degree)
    }
}

fn degree_basis(p: MaciParams, d: u32) -> Vec<(u32, u32, u32)> {
    let mut basis = Vec::new();
    for a in 0..=d.min(p.alpha() + p.t() - 1) {
        for b in 0..=(d - a).min(p.beta() + p.t() - 1) {
            let c = d - a - b;
            if monomial_survives(p, a, b, c) {
                basis.push((a, b, c));
            }
        }
    }
    basis
}

/// Matrix of ×(x+y+z): `[R/I]_d → [R/I]_{d+1}` in the monomial bases; rows
/// are target monomials, columns source monomials, entries 0/1.
fn multiplication_matrix(p: MaciParams, d: u32) -> (Vec<Vec<i64>>, usize, usize) {
    let source = degree_basis(p, d);
    let target = degree_basis(p, d + 1);
    let index: HashMap<(u32, u32, u32), usize> = target
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, i))
        .collect();
    let mut rows = vec![vec![0i64; source.len()]; target.len()];
    for (col, &(a, b, c)) in source.iter().enumerate() {
        for product in [(a + 1, b, c), (a, b + 1, c), (a, b, c + 1)] {
            if let Some(&row) = index.get(&product) {
                rows[row][col] = 1;
            }
        }
    }
    (rows, target.len(), source.len())
}

/// Exact ranks of every multiplication map ×(x+y+z), over ℚ for
/// characteristic zero or over the prime field otherwise.  Per-degree
/// computations are independent and run in parallel; the result order is
/// deterministic.
pub fn multiplication_rank_profile(p: MaciParams, characteristic: Characteristic) -> RankProfile {
    let h = hilbert_oracle(p);
    let e = h.socle_degree();
    let degrees: Vec<DegreeRank> = (0..e)
        .into_par_iter()
        .map(|d| {
            let (rows, target_dim, source_dim) = multiplication_matrix(p, d);
            let rank = if characteristic.is_zero() {
                rank_rational(&rows)
            } else {
                rank_mod_prime(&rows, characteristic.value())
            };
            DegreeRank {
                degree: d,
                source_dim: source_dim as u64,
                target_dim: target_dim as u64,
                rank: rank as u64,
            }
        })
        .collect();
    RankProfile {
        characteristic,
        degrees,
    }
}

/// Decides the property directly: it holds iff no multiplication map has a
/// rank deficit.
pub fn wlp_direct(p: MaciParams, characteristic: Characteristic) -> WlpVerdict {
    let profile = multiplication_rank_profile(p, characteristic);
    WlpVerdict {
        holds: profile.first_deficit().is_none(),
        method: WlpMethod::DirectRank,
        characteristic,
        witness: WlpWitness::Profile(profile),
    }
}
