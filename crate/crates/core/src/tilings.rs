//! Lozenge tilings of hexagons with 120° angles: the hyperfactorial product
//! formula, an independent dynamic-programming enumeration, and the
//! correspondence between tiling counts and the extremal determinants.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{exact_div, hyperfactorial};
use crate::ideal::MaciParams;
use crate::lefschetz::{det_closed_gamma_max, det_closed_t_min, det_m};

/// Side lengths `(a, b, c)` of a hexagon with sides `a, b, c, a, b, c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HexagonSides {
    a: u32,
    b: u32,
    c: u32,
}

impl HexagonSides {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::InvalidParameters(
                "requires side lengths a, b, c ≥ 1".into(),
            ));
        }
        Ok(HexagonSides { a, b, c })
    }

    pub fn a(&self) -> u32 {
        self.a
    }
    pub fn b(&self) -> u32 {
        self.b
    }
    pub fn c(&self) -> u32 {
        self.c
    }
}

/// Largest side length the enumeration oracle accepts by default.
pub const DEFAULT_ENUMERATION_BOUND: u32 = 6;

/// `H(a)H(b)H(c)H(a+b+c) / (H(a+b)H(a+c)H(b+c))`; degenerate sides give 1
/// (the empty tiling), matching the empty-matrix determinant convention.
fn macmahon(a: u64, b: u64, c: u64) -> BigInt {
    let num =
        hyperfactorial(a) * hyperfactorial(b) * hyperfactorial(c) * hyperfactorial(a + b + c);
    let den = hyperfactorial(a + b) * hyperfactorial(a + c) * hyperfactorial(b + c);
    exact_div(num, &den)
}

/// Number of lozenge tilings of the `(a, b, c)`-hexagon, by the product
/// formula.
pub fn lozenge_count(h: &HexagonSides) -> BigInt {
    macmahon(h.a as u64, h.b as u64, h.c as u64)
}

/// Independent tiling count by dynamic programming with the default side
/// bound.
pub fn lozenge_count_oracle(h: &HexagonSides) -> Result<BigInt> {
    lozenge_count_oracle_bounded(h, DEFAULT_ENUMERATION_BOUND)
}

/// Tilings of the `(a, b, c)`-hexagon are in bijection with monotone integer
/// arrays in an `a × b` grid with entries ≤ c (stacks of unit cubes in an
/// `a × b × c` box).  The enumeration sweeps the grid column by column,
/// propagating weakly decreasing boundary columns; each step sums over the
/// entrywise-dominating predecessor states.
pub fn lozenge_count_oracle_bounded(h: &HexagonSides, bound: u32) -> Result<BigInt> {
    if h.a > bound || h.b > bound || h.c > bound {
        return Err(Error::Inapplicable(format!(
            "enumeration is limited to sides ≤ {bound}; use the product formula instead"
        )));
    }
    let states = decreasing_tuples(h.a as usize, h.c);
    let mut counts = vec![BigInt::one(); states.len()];
    for _ in 1..h.b {
        counts = states
            .iter()
            .map(|s| {
                let mut acc = BigInt::zero();
                for (i, s_prev) in states.iter().enumerate() {
                    if dominates(s_prev, s) {
                        acc += &counts[i];
                    }
                }
                acc
            })
            .collect();
    }
    Ok(counts.into_iter().sum())
}

/// All weakly decreasing tuples of the given length with entries in `0..=cap`.
fn decreasing_tuples(len: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len);
    fn rec(out: &mut Vec<Vec<u32>>, current: &mut Vec<u32>, len: usize, max: u32) {
        if current.len() == len {
            out.push(current.clone());
            return;
        }
        for v in (0..=max).rev() {
            current.push(v);
            rec(out, current, len, v);
            current.pop();
        }
    }
    rec(&mut out, &mut current, len, cap);
    out
}

fn dominates(x: &[u32], y: &[u32]) -> bool {
    x.iter().zip(y).all(|(a, b)| a >= b)
}

/// Checks `|det M| = #tilings of the (α+β, t−α−β, α+β)-hexagon` in the
/// extremal case γ = 2(α+β); requires t > α+β so the hexagon is proper.
pub fn correspondence_gamma_max(p: MaciParams) -> Result<bool> {
    det_closed_gamma_max(p)?;
    if p.t() <= p.alpha() + p.beta() {
        return Err(Error::Inapplicable(
            "correspondence requires t > α + β (nondegenerate hexagon)".into(),
        ));
    }
    let ab = p.alpha() + p.beta();
    let hexagon = HexagonSides::new(ab, p.t() - ab, ab)?;
    Ok(det_m(p)?.abs() == lozenge_count(&hexagon))
}

/// Checks `|det M| = #tilings of the (2t−α, 2t−β, 2t−γ)-hexagon` in the
/// extremal case t = σ/3; requires γ < 2(α+β) so the hexagon is proper.
pub fn correspondence_t_min(p: MaciParams) -> Result<bool> {
    det_closed_t_min(p)?;
    if p.gamma() >= 2 * (p.alpha() + p.beta()) {
        return Err(Error::Inapplicable(
            "correspondence requires γ < 2(α + β) (nondegenerate hexagon)".into(),
        ));
    }
    let hexagon = HexagonSides::new(
        2 * p.t() - p.alpha(),
        2 * p.t() - p.beta(),
        2 * p.t() - p.gamma(),
    )?;
    Ok(det_m(p)?.abs() == lozenge_count(&hexagon))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::toeplitz_binomial_det;

    fn hexagon(a: u32, b: u32, c: u32) -> HexagonSides {
        HexagonSides::new(a, b, c).unwrap()
    }

    fn params(a: u32, b: u32, g: u32, t: u32) -> MaciParams {
        MaciParams::new(a, b, g, t).unwrap()
    }

    #[test]
    fn sides_must_be_positive() {
        assert!(HexagonSides::new(0, 1, 1).is_err());
        assert!(HexagonSides::new(1, 1, 1).is_ok());
    }

    #[test]
    fn lozenge_count_examples() {
        assert_eq!(lozenge_count(&hexagon(1, 1, 1)), BigInt::from(2));
        assert_eq!(lozenge_count(&hexagon(2, 4, 3)), BigInt::from(490));
    }

    #[test]
    fn lozenge_count_symmetric() {
        for a in 1..=4u32 {
            for b in 1..=4 {
                for c in 1..=4 {
                    let base = lozenge_count(&hexagon(a, b, c));
                    for (x, y, z) in [
                        (a, c, b),
                        (b, a, c),
                        (b, c, a),
                        (c, a, b),
                        (c, b, a),
                    ] {
                        assert_eq!(lozenge_count(&hexagon(x, y, z)), base);
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(lozenge_count_oracle(&hexagon(1, 1, 1)).unwrap(), BigInt::from(2));
        assert_eq!(lozenge_count_oracle(&hexagon(1, 1, 2)).unwrap(), BigInt::from(3));
        assert_eq!(lozenge_count_oracle(&hexagon(2, 2, 2)).unwrap(), BigInt::from(20));
        assert!(lozenge_count_oracle(&hexagon(7, 1, 1)).is_err());
        assert!(lozenge_count_oracle_bounded(&hexagon(7, 1, 1), 7).is_ok());
    }

    #[test]
    fn formula_matches_oracle() {
        for a in 1..=4u32 {
            for b in 1..=4 {
                for c in 1..=4 {
                    let h = hexagon(a, b, c);
                    assert_eq!(
                        lozenge_count(&h),
                        lozenge_count_oracle(&h).unwrap(),
                        "({a}, {b}, {c})"
                    );
                }
            }
        }
    }

    #[test]
    fn count_matches_toeplitz_determinant() {
        // (a, b, c) = (n, B, T−B) turns the banded binomial determinant into
        // a tiling count.
        for t in 2u64..=10 {
            for b in 1..t {
                for n in 1u64..=5 {
                    let h = hexagon(n as u32, b as u32, (t - b) as u32);
                    assert_eq!(
                        lozenge_count(&h),
                        toeplitz_binomial_det(t, b, n).unwrap(),
                        "T={t} B={b} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn correspondence_gamma_max_examples() {
        assert!(correspondence_gamma_max(params(1, 1, 4, 3)).unwrap());
        assert!(correspondence_gamma_max(params(1, 1, 4, 4)).unwrap());
        assert!(correspondence_gamma_max(params(1, 2, 6, 4)).unwrap());
        // Degenerate hexagon (t = α+β) is rejected.
        assert!(correspondence_gamma_max(params(1, 1, 4, 2)).is_err());
    }

    #[test]
    fn correspondence_t_min_examples() {
        assert!(correspondence_t_min(params(1, 1, 1, 1)).unwrap());
        assert!(correspondence_t_min(params(2, 2, 2, 2)).unwrap());
        assert!(correspondence_t_min(params(1, 2, 3, 2)).unwrap());
        // γ = 2(α+β) degenerates the hexagon.
        assert!(correspondence_t_min(params(1, 1, 4, 2)).is_err());
    }
}
