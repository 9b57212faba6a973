//! The conjectured classification as an executable predictor, with
//! proof-status flags per branch, and a batch scanner that compares the
//! prediction, the determinant criterion, and the direct rank computation.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::{
    classify, hilbert_from_resolution, unimodality, CaseLabel, MaciParams, UnimodalityReport,
};
use crate::lefschetz::{
    criterion_applies, det_m, wlp_by_determinant, wlp_direct, Characteristic,
};

/// How firmly a predicted verdict is established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProofStatus {
    /// Backed by a published proof.
    Proved,
    /// Verified by direct computation (the two sporadic tuples).
    Computed,
    /// Open: the prediction is conjectural.
    Conjectured,
}

impl std::fmt::Display for ProofStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ProofStatus::Proved => "PROVED",
            ProofStatus::Computed => "COMPUTED",
            ProofStatus::Conjectured => "CONJECTURED",
        };
        f.write_str(s)
    }
}

/// Predicted verdict for characteristic zero, with the branch that fired.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub wlp_holds: bool,
    pub status: ProofStatus,
    pub label: CaseLabel,
    /// The sub-condition that decided the branch.
    pub condition: String,
}

/// Failure predicate of the generic branch in its compact form:
/// t even, σ odd, and α = β or β = γ.
pub fn compact_failure_conditions(p: MaciParams) -> bool {
    p.t() % 2 == 0
        && p.sigma() % 2 == 1
        && (p.alpha() == p.beta() || p.beta() == p.gamma())
}

/// The same predicate in its original three-subcondition form; equivalent to
/// the compact form whenever 3 | σ, which the scanner asserts.
pub fn original_failure_conditions(p: MaciParams) -> bool {
    let (a, b, g) = (p.alpha(), p.beta(), p.gamma());
    if p.t() % 2 != 0 {
        return false;
    }
    let d = g - a;
    (a % 2 == 0 && a == b && d % 6 == 3)
        || (a % 2 == 1 && a == b && d % 6 == 0)
        || (a % 2 == 1 && b == g && d % 3 == 0)
}

/// Predicts the characteristic-zero verdict from the classification alone.
pub fn predict(p: MaciParams) -> Prediction {
    let label = classify(p);
    match label {
        CaseLabel::AlphaZero => holds_proved(label, "α = 0"),
        CaseLabel::SigmaNotDivThree => holds_proved(label, "3 ∤ σ"),
        CaseLabel::GammaDominant => holds_proved(label, "γ > 2(α + β)"),
        CaseLabel::TSmall => holds_proved(label, "t < σ/3"),
        CaseLabel::Exceptional => Prediction {
            wlp_holds: false,
            status: ProofStatus::Computed,
            label,
            condition: "sporadic tuple".into(),
        },
        CaseLabel::CaseThree => {
            if compact_failure_conditions(p) {
                let equality = if p.alpha() == p.beta() {
                    "α = β"
                } else {
                    "β = γ"
                };
                Prediction {
                    wlp_holds: false,
                    status: ProofStatus::Proved,
                    label,
                    condition: format!("t even, σ odd, {equality}"),
                }
            } else {
                let blocker = if p.t() % 2 != 0 {
                    "t odd"
                } else if p.sigma() % 2 == 0 {
                    "σ even"
                } else {
                    "α < β < γ"
                };
                Prediction {
                    wlp_holds: true,
                    status: ProofStatus::Conjectured,
                    label,
                    condition: blocker.into(),
                }
            }
        }
    }
}

fn holds_proved(label: CaseLabel, condition: &str) -> Prediction {
    Prediction {
        wlp_holds: true,
        status: ProofStatus::Proved,
        label,
        condition: condition.into(),
    }
}

/// Inclusive parameter ranges for a scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanBox {
    pub alpha: (u32, u32),
    pub beta: (u32, u32),
    pub gamma: (u32, u32),
    pub t: (u32, u32),
}

impl ScanBox {
    pub fn new(alpha: (u32, u32), beta: (u32, u32), gamma: (u32, u32), t: (u32, u32)) -> Result<Self> {
        for (name, (lo, hi)) in [("α", alpha), ("β", beta), ("γ", gamma), ("t", t)] {
            if lo > hi {
                return Err(Error::InvalidParameters(format!(
                    "empty range for {name}: {lo}..{hi}"
                )));
            }
        }
        if t.0 == 0 {
            return Err(Error::InvalidParameters("requires t ≥ 1".into()));
        }
        Ok(ScanBox {
            alpha,
            beta,
            gamma,
            t,
        })
    }

    /// Admissible tuples in lexicographic order.
    fn tuples(&self) -> Vec<MaciParams> {
        let mut out = Vec::new();
        for a in self.alpha.0..=self.alpha.1 {
            for b in self.beta.0.max(a)..=self.beta.1 {
                for g in self.gamma.0.max(b)..=self.gamma.1 {
                    for t in self.t.0..=self.t.1 {
                        if let Ok(p) = MaciParams::new(a, b, g, t) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

/// Outcome of comparing a characteristic-zero prediction against the direct
/// computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConjectureCheck {
    Consistent,
    Counterexample,
    /// Characteristic zero was not among the requested characteristics.
    Unchecked,
}

impl std::fmt::Display for ConjectureCheck {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ConjectureCheck::Consistent => "consistent",
            ConjectureCheck::Counterexample => "COUNTEREXAMPLE",
            ConjectureCheck::Unchecked => "unchecked",
        };
        f.write_str(s)
    }
}

/// Verdicts for one requested characteristic.  The determinant columns are
/// present only where the criterion applies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicVerdicts {
    pub characteristic: Characteristic,
    pub determinant_holds: Option<bool>,
    pub direct_holds: bool,
    /// `Some(true)` iff both methods were run and coincide.
    pub agreement: Option<bool>,
}

/// One scanned tuple: prediction, determinant, per-characteristic verdicts,
/// and Hilbert-function peak data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub params: MaciParams,
    pub prediction: Prediction,
    /// Determinant of the criterion matrix, where the criterion applies.
    pub determinant: Option<BigInt>,
    pub verdicts: Vec<CharacteristicVerdicts>,
    pub socle_degree: u32,
    pub peak_start: u32,
    pub peak_length: u32,
    /// The fixed-shape resolution is minimal exactly when α > 0.
    pub resolution_minimal: bool,
    pub conjecture_check: ConjectureCheck,
}

/// Scans every admissible tuple in the box, in lexicographic order.  Rows are
/// computed in parallel; output order and content are deterministic.
pub fn scan(box_: ScanBox, characteristics: &[Characteristic]) -> Result<Vec<ScanRow>> {
    let tuples = box_.tuples();
    let rows: Vec<Result<ScanRow>> = tuples
        .into_par_iter()
        .map(|p| scan_row(p, characteristics))
        .collect();
    rows.into_iter().collect()
}

fn scan_row(p: MaciParams, characteristics: &[Characteristic]) -> Result<ScanRow> {
    let prediction = predict(p);
    if prediction.label == CaseLabel::CaseThree
        && compact_failure_conditions(p) != original_failure_conditions(p)
    {
        return Err(Error::Internal(format!(
            "compact and original failure conditions disagree at {p}"
        )));
    }
    let applicable = criterion_applies(p);
    let determinant = if applicable { Some(det_m(p)?) } else { None };
    let verdicts: Vec<CharacteristicVerdicts> = characteristics
        .iter()
        .map(|&c| {
            let determinant_holds = if applicable {
                Some(wlp_by_determinant(p, c)?.holds)
            } else {
                None
            };
            let direct_holds = wlp_direct(p, c).holds;
            Ok(CharacteristicVerdicts {
                characteristic: c,
                determinant_holds,
                direct_holds,
                agreement: determinant_holds.map(|d| d == direct_holds),
            })
        })
        .collect::<Result<_>>()?;
    let report = unimodality(&hilbert_from_resolution(p));
    let UnimodalityReport::PeakedStrictlyUnimodal {
        peak_start,
        peak_length,
        socle_degree,
    } = report
    else {
        return Err(Error::Internal(format!(
            "Hilbert function of {p} is not peaked strictly unimodal"
        )));
    };
    let conjecture_check = match verdicts
        .iter()
        .find(|v| v.characteristic.is_zero())
        .map(|v| v.direct_holds)
    {
        Some(direct) if direct == prediction.wlp_holds => ConjectureCheck::Consistent,
        Some(_) => ConjectureCheck::Counterexample,
        None => ConjectureCheck::Unchecked,
    };
    Ok(ScanRow {
        params: p,
        prediction,
        determinant,
        verdicts,
        socle_degree,
        peak_start,
        peak_length,
        resolution_minimal: p.alpha() > 0,
        conjecture_check,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    fn params(a: u32, b: u32, g: u32, t: u32) -> MaciParams {
        MaciParams::new(a, b, g, t).unwrap()
    }

    #[test]
    fn predict_examples() {
        let p = predict(params(1, 1, 1, 2));
        assert!(!p.wlp_holds);
        assert_eq!(p.status, ProofStatus::Proved);

        let p = predict(params(2, 9, 13, 9));
        assert!(!p.wlp_holds);
        assert_eq!(p.status, ProofStatus::Computed);

        let p = predict(params(2, 9, 13, 12));
        assert!(p.wlp_holds);
        assert_eq!(p.status, ProofStatus::Conjectured);
        assert_eq!(p.condition, "σ even");
    }

    #[test]
    fn predict_part_one_branches() {
        for (p, label) in [
            (params(0, 1, 2, 2), CaseLabel::AlphaZero),
            (params(1, 1, 2, 2), CaseLabel::SigmaNotDivThree),
            (params(1, 1, 7, 2), CaseLabel::GammaDominant),
            (params(2, 2, 2, 1), CaseLabel::TSmall),
        ] {
            let pr = predict(p);
            assert!(pr.wlp_holds);
            assert_eq!(pr.status, ProofStatus::Proved);
            assert_eq!(pr.label, label);
        }
    }

    #[test]
    fn failure_condition_forms_agree() {
        for a in 1..=6u32 {
            for b in a..=6 {
                for g in b..=6 {
                    for t in 1..=6 {
                        let p = params(a, b, g, t);
                        if classify(p) != CaseLabel::CaseThree {
                            continue;
                        }
                        assert_eq!(
                            compact_failure_conditions(p),
                            original_failure_conditions(p),
                            "{p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn scan_single_tuple() {
        let box_ = ScanBox::new((1, 1), (1, 1), (1, 1), (2, 2)).unwrap();
        let chars = [
            Characteristic::ZERO,
            Characteristic::new(2).unwrap(),
        ];
        let rows = scan(box_, &chars).unwrap();
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!(row.determinant.as_ref().map(|d| d.is_zero()), Some(true));
        for v in &row.verdicts {
            assert_eq!(v.determinant_holds, Some(false));
            assert!(!v.direct_holds);
            assert_eq!(v.agreement, Some(true));
        }
        assert_eq!(row.conjecture_check, ConjectureCheck::Consistent);
        assert_eq!((row.peak_start, row.peak_length), (2, 2));
    }

    #[test]
    fn scan_empty_box_and_malformed_ranges() {
        // A box admitting no tuple with α ≤ β ≤ γ.
        let box_ = ScanBox::new((3, 3), (1, 1), (1, 1), (1, 1)).unwrap();
        assert!(scan(box_, &[Characteristic::ZERO]).unwrap().is_empty());
        assert!(ScanBox::new((2, 1), (0, 1), (0, 1), (1, 1)).is_err());
        assert!(ScanBox::new((0, 1), (0, 1), (0, 1), (0, 1)).is_err());
    }

    #[test]
    fn scan_desk_box_predictions_match_direct() {
        let box_ = ScanBox::new((0, 3), (0, 3), (0, 3), (1, 4)).unwrap();
        let rows = scan(box_, &[Characteristic::ZERO]).unwrap();
        assert!(!rows.is_empty());
        for row in &rows {
            if matches!(
                row.prediction.status,
                ProofStatus::Proved | ProofStatus::Computed
            ) {
                assert_eq!(
                    row.prediction.wlp_holds, row.verdicts[0].direct_holds,
                    "{}",
                    row.params
                );
            }
            assert_ne!(row.conjecture_check, ConjectureCheck::Counterexample);
            for v in &row.verdicts {
                assert_ne!(v.agreement, Some(false), "{}", row.params);
            }
        }
        // Deterministic order: lexicographic in (α, β, γ, t).
        let mut sorted = rows.clone();
        sorted.sort_by_key(|r| r.params);
        assert!(rows.iter().zip(&sorted).all(|(a, b)| a == b));
    }

    #[test]
    fn scan_deterministic_across_thread_counts() {
        let box_ = ScanBox::new((0, 2), (0, 2), (1, 3), (1, 3)).unwrap();
        let chars = [Characteristic::ZERO, Characteristic::new(2).unwrap()];
        let baseline = scan(box_, &chars).unwrap();
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| scan(box_, &chars).unwrap());
        assert_eq!(baseline, single);
    }

    #[test]
    fn scan_unchecked_without_characteristic_zero() {
        let box_ = ScanBox::new((1, 1), (1, 1), (1, 1), (3, 3)).unwrap();
        let rows = scan(box_, &[Characteristic::new(2).unwrap()]).unwrap();
        assert_eq!(rows[0].conjecture_check, ConjectureCheck::Unchecked);
    }
}
