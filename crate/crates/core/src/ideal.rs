//! The parameter family `I = (x^{α+t}, y^{β+t}, z^{γ+t}, x^α y^β z^γ)`,
//! its free resolution, Hilbert function (two independent routes), and the
//! peaked-strictly-unimodal classification of that Hilbert function.

use std::fmt;

use crate::error::{Error, Result};


/// Parameters `(α, β, γ, t)` with `0 ≤ α ≤ β ≤ γ` and `t > 0`.
///
/// The all-zero exponent triple is rejected: it would make the fourth
/// generator the unit monomial and the quotient the zero ring, which has no
/// Hilbert function in the sense used here.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MaciParams {
    alpha: u32,
    beta: u32,
    gamma: u32,
    t: u32,
}

impl MaciParams {
    pub fn new(alpha: u32, beta: u32, gamma: u32, t: u32) -> Result<Self> {
        if !(alpha <= beta && beta <= gamma) {
            return Err(Error::InvalidParameters(format!(
                "requires α ≤ β ≤ γ, got ({alpha}, {beta}, {gamma})"
            )));
        }
        if t == 0 {
            return Err(Error::InvalidParameters("requires t > 0".into()));
        }
        if gamma == 0 {
            return Err(Error::InvalidParameters(
                "requires α + β + γ > 0 (otherwise the ideal is the unit ideal)".into(),
            ));
        }
        Ok(MaciParams {
            alpha,
            beta,
            gamma,
            t,
        })
    }

    pub fn alpha(&self) -> u32 {
        self.alpha
    }
    pub fn beta(&self) -> u32 {
        self.beta
    }
    pub fn gamma(&self) -> u32 {
        self.gamma
    }
    pub fn t(&self) -> u32 {
        self.t
    }

    /// σ = α + β + γ.
    pub fn sigma(&self) -> u32 {
        self.alpha + self.beta + self.gamma
    }
}

impl fmt::Display for MaciParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {}, {})",
            self.alpha, self.beta, self.gamma, self.t
        )
    }
}

/// Branch of the conjectured classification a parameter tuple falls in.
/// Exactly one label applies; the part-(i) tests are tried in order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseLabel {
    /// (i)(a): α = 0.
    AlphaZero,
    /// (i)(b): σ not divisible by 3.
    SigmaNotDivThree,
    /// (i)(c): γ > 2(α + β).
    GammaDominant,
    /// (i)(d): t < σ/3.
    TSmall,
    /// (ii): one of the two sporadic tuples (2,9,13,9), (3,7,14,9).
    Exceptional,
    /// (iii): everything else, the determinant-criterion regime.
    CaseThree,
}

impl CaseLabel {
    /// `true` for the four branches where the property is known to hold.
    pub fn is_part_one(self) -> bool {
        matches!(
            self,
            CaseLabel::AlphaZero
                | CaseLabel::SigmaNotDivThree
                | CaseLabel::GammaDominant
                | CaseLabel::TSmall
        )
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseLabel::AlphaZero => "I_A",
            CaseLabel::SigmaNotDivThree => "I_B",
            CaseLabel::GammaDominant => "I_C",
            CaseLabel::TSmall => "I_D",
            CaseLabel::Exceptional => "EXCEPTIONAL",
            CaseLabel::CaseThree => "CASE_III",
        };
        f.write_str(s)
    }
}

/// The two sporadic tuples that fail the property in characteristic zero.
pub const EXCEPTIONAL_TUPLES: [(u32, u32, u32, u32); 2] = [(2, 9, 13, 9), (3, 7, 14, 9)];

/// Assigns the classification label, trying the part-(i) conditions in order
/// α = 0, 3 ∤ σ, γ > 2(α+β), t < σ/3 before the sporadic and generic cases.
pub fn classify(p: MaciParams) -> CaseLabel {
    if p.alpha == 0 {
        return CaseLabel::AlphaZero;
    }
    if p.sigma() % 3 != 0 {
        return CaseLabel::SigmaNotDivThree;
    }
    if p.gamma > 2 * (p.alpha + p.beta) {
        return CaseLabel::GammaDominant;
    }
    if 3 * p.t < p.sigma() {
        return CaseLabel::TSmall;
    }
    if EXCEPTIONAL_TUPLES.contains(&(p.alpha, p.beta, p.gamma, p.t)) {
        return CaseLabel::Exceptional;
    }
    CaseLabel::CaseThree
}

/// Twists of the length-three free resolution
/// `0 → F₃ → F₂ → F₁ → R → R/I → 0`.  Minimal exactly when α > 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeResolution {
    /// (homological degree, twists) for F₁, F₂, F₃.
    pub modules: Vec<(usize, Vec<u32>)>,
}

impl FreeResolution {
    pub fn of(p: MaciParams) -> Self {
        let (a, b, g, t) = (p.alpha, p.beta, p.gamma, p.t);
        let sigma = p.sigma();
        let f1 = vec![sigma, a + t, b + t, g + t];
        let f2 = vec![
            sigma + t,
            sigma + t,
            sigma + t,
            a + b + 2 * t,
            a + g + 2 * t,
            b + g + 2 * t,
        ];
        let f3 = vec![sigma + 2 * t; 3];
        FreeResolution {
            modules: vec![(1, f1), (2, f2), (3, f3)],
        }
    }
}

/// Hilbert function of `R/I`: `values[d] = h(d)` for `0 ≤ d ≤ e`, where `e`
/// is the socle degree (the last nonzero value).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertFunction {
    values: Vec<u64>,
}

impl HilbertFunction {
    /// Wraps a value table.  `h(0)` must be 1 and the last entry nonzero.
    pub fn from_values(values: Vec<u64>) -> Result<Self> {
        if values.first() != Some(&1) {
            return Err(Error::InvalidParameters("requires h(0) = 1".into()));
        }
        if values.last() == Some(&0) {
            return Err(Error::InvalidParameters(
                "requires h(e) > 0 at the top degree".into(),
            ));
        }
        Ok(HilbertFunction { values })
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    /// h(d), zero beyond the socle degree.
    pub fn value(&self, d: u32) -> u64 {
        self.values.get(d as usize).copied().unwrap_or(0)
    }

    /// Largest degree with a nonzero value.
    pub fn socle_degree(&self) -> u32 {
        (self.values.len() - 1) as u32
    }
}

/// `C(m+2, 2)` for `m ≥ 0`, zero otherwise: the Hilbert function of the
/// polynomial ring in three variables, shifted.
fn c2(m: i64) -> i64 {
    if m < 0 {
        0
    } else {
        (m + 2) * (m + 1) / 2
    }
}

/// Hilbert function via the alternating sum over the free resolution.
/// The resolution is exact for every admissible tuple (minimal only for
/// α > 0), so this agrees with the monomial count.
pub fn hilbert_from_resolution(p: MaciParams) -> HilbertFunction {
    let (a, b, g, t) = (
        p.alpha as i64,
        p.beta as i64,
        p.gamma as i64,
        p.t as i64,
    );
    let sigma = a + b + g;
    let h = |d: i64| -> i64 {
        c2(d) - c2(d - sigma) - c2(d - a - t) - c2(d - b - t) - c2(d - g - t)
            + 3 * c2(d - sigma - t)
            + c2(d - a - b - 2 * t)
            + c2(d - a - g - 2 * t)
            + c2(d - b - g - 2 * t)
            - 3 * c2(d - sigma - 2 * t)
    };
    let mut values = Vec::new();
    for d in 0..=sigma + 2 * t {
        let v = h(d);
        assert!(v >= 0, "Hilbert value must be non-negative at degree {d}");
        values.push(v as u64);
    }
    while values.last() == Some(&0) {
        values.pop();
    }
    HilbertFunction::from_values(values).expect("resolution route yields a valid Hilbert function")
}

/// Membership of the monomial x^a y^b z^c in the standard basis of `[R/I]_d`.
pub(crate) fn monomial_survives(p: MaciParams, a: u32, b: u32, c: u32) -> bool {
    a < p.alpha + p.t
        && b < p.beta + p.t
        && c < p.gamma + p.t
        && !(a >= p.alpha && b >= p.beta && c >= p.gamma)
}

/// Hilbert function by direct monomial enumeration; the independent oracle
/// for the resolution route.
pub fn hilbert_oracle(p: MaciParams) -> HilbertFunction {
    let mut values = Vec::new();
    let mut d = 0u32;
    loop {
        let mut count = 0u64;
        for a in 0..=d.min(p.alpha + p.t - 1) {
            for b in 0..=(d - a).min(p.beta + p.t - 1) {
                let c = d - a - b;
                if monomial_survives(p, a, b, c) {
                    count += 1;
                }
            }
        }
        if count == 0 {
            break;
        }
        values.push(count);
        d += 1;
    }
    HilbertFunction::from_values(values).expect("oracle yields a valid Hilbert function")
}

/// Socle degree `e = α + β + γ + 2t − 3`.  Only valid for α ≥ 1, where the
/// resolution is minimal; for α = 0 use the top degree of the Hilbert
/// function instead.
pub fn socle_degree(p: MaciParams) -> Result<u32> {
    if p.alpha == 0 {
        return Err(Error::Inapplicable(
            "socle degree formula requires α ≥ 1; use the Hilbert function's top degree".into(),
        ));
    }
    Ok(p.sigma() + 2 * p.t - 3)
}

/// Shape report for a Hilbert function: strictly increasing, then a plateau
/// of equal peaks, then strictly decreasing, or the first degree where that
/// pattern breaks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnimodalityReport {
    PeakedStrictlyUnimodal {
        /// First peak degree `s`.
        peak_start: u32,
        /// Number of consecutive equal peaks (≥ 1).
        peak_length: u32,
        socle_degree: u32,
    },
    Violation {
        first_violation_degree: u32,
        socle_degree: u32,
    },
}

impl UnimodalityReport {
    pub fn is_peaked_strictly_unimodal(&self) -> bool {
        matches!(self, UnimodalityReport::PeakedStrictlyUnimodal { .. })
    }

    pub fn peak_start(&self) -> Option<u32> {
        match self {
            UnimodalityReport::PeakedStrictlyUnimodal { peak_start, .. } => Some(*peak_start),
            UnimodalityReport::Violation { .. } => None,
        }
    }

    pub fn peak_length(&self) -> Option<u32> {
        match self {
            UnimodalityReport::PeakedStrictlyUnimodal { peak_length, .. } => Some(*peak_length),
            UnimodalityReport::Violation { .. } => None,
        }
    }

    pub fn first_violation_degree(&self) -> Option<u32> {
        match self {
            UnimodalityReport::PeakedStrictlyUnimodal { .. } => None,
            UnimodalityReport::Violation {
                first_violation_degree,
                ..
            } => Some(*first_violation_degree),
        }
    }

    pub fn socle_degree(&self) -> u32 {
        match self {
            UnimodalityReport::PeakedStrictlyUnimodal { socle_degree, .. }
            | UnimodalityReport::Violation { socle_degree, .. } => *socle_degree,
        }
    }
}

/// Scans the difference sequence of `h` and classifies it as
/// (+)* (0)* (−)* or reports the first violating degree.  A single maximum
/// counts as a plateau of length one.
pub fn unimodality(h: &HilbertFunction) -> UnimodalityReport {
    #[derive(PartialEq, Clone, Copy)]
    enum Phase {
        Up,
        Flat,
        Down,
    }
    let values = h.values();
    let e = h.socle_degree();
    let mut phase = Phase::Up;
    let mut peak_start = 0u32;
    let mut peak_length = 1u32;
    for d in 0..values.len() - 1 {
        let diff = values[d + 1] as i64 - values[d] as i64;
        let violated = match (phase, diff.signum()) {
            (Phase::Up, 1) => {
                peak_start = (d + 1) as u32;
                false
            }
            (Phase::Up, 0) => {
                phase = Phase::Flat;
                peak_length += 1;
                false
            }
            (Phase::Flat, 0) => {
                peak_length += 1;
                false
            }
            (Phase::Up | Phase::Flat, -1) => {
                phase = Phase::Down;
                false
            }
            (Phase::Down, -1) => false,
            _ => true,
        };
        if violated {
            return UnimodalityReport::Violation {
                first_violation_degree: d as u32,
                socle_degree: e,
            };
        }
    }
    UnimodalityReport::PeakedStrictlyUnimodal {
        peak_start,
        peak_length,
        socle_degree: e,
    }
}
