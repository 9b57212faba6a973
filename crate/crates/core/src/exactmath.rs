//! Exact integer arithmetic: hyperfactorials, binomials, fraction-free
//! determinants and ranks, and bounded trial-division factoring.
//!
//! Everything here is exact; no floating point appears anywhere in the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Hyperfactorial `H(n) = 0! · 1! · … · (n-1)!`, with `H(0) = 1`.
///
/// Note the product stops at `n - 1`.
pub fn hyperfactorial(n: u64) -> BigInt {
    let mut factorial = BigInt::one();
    let mut acc = BigInt::one();
    for i in 1..n {
        factorial *= i;
        acc *= &factorial;
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Exact determinant of a square integer matrix by fraction-free (Bareiss)
/// elimination with full pivoting.  The empty matrix has determinant 1.
pub fn det_exact(rows: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidParameters(
            "determinant requires a square matrix".into(),
        ));
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut m = rows.to_vec();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some((pi, pj)) = find_pivot(&m, k) else {
            return Ok(BigInt::zero());
        };
        if pi != k {
            m.swap(pi, k);
            negate = !negate;
        }
        if pj != k {
            for row in m.iter_mut() {
                row.swap(pj, k);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                // Bareiss: division by the previous pivot is exact.
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

fn find_pivot(m: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    for i in k..m.len() {
        for j in k..m[i].len() {
            if !m[i][j].is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}

/// Determinant of the `n × n` Toeplitz matrix with entry `(i, j) = C(T, B+i-j)`,
/// evaluated by the hyperfactorial product
/// `H(n)H(B)H(T-B)H(T+n) / (H(B+n)H(T-B+n)H(T))`.
pub fn toeplitz_binomial_det(t: u64, b: u64, n: u64) -> Result<BigInt> {
    if b > t {
        return Err(Error::InvalidParameters(format!(
            "requires T ≥ B ≥ 0, got T = {t}, B = {b}"
        )));
    }
    let num = hyperfactorial(n) * hyperfactorial(b) * hyperfactorial(t - b) * hyperfactorial(t + n);
    let den = hyperfactorial(b + n) * hyperfactorial(t - b + n) * hyperfactorial(t);
    Ok(exact_div(num, &den))
}

/// Exact quotient; panics if the division leaves a remainder (all callers
/// divide quantities that are integral by construction).
pub(crate) fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    assert!(r.is_zero(), "division expected to be exact");
    q
}

/// A partial factorization: sign · cofactor · Π primeᵉ reconstructs the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    /// Strictly increasing primes with positive exponents, all ≤ the search bound.
    pub prime_powers: Vec<(u64, u32)>,
    /// Unfactored residual; has no prime factor ≤ the bound.
    pub cofactor: BigInt,
    /// Primality of the cofactor when it fits in machine range; `None` when it
    /// is too large to test deterministically.
    pub cofactor_is_prime: Option<bool>,
}

impl Factorization {
    /// Reassembles sign · cofactor · Π primeᵉ.
    pub fn reconstruct(&self) -> BigInt {
        let mut acc = self.cofactor.clone();
        for &(p, e) in &self.prime_powers {
            acc *= BigInt::from(p).pow(e);
        }
        if self.sign < 0 {
            -acc
        } else {
            acc
        }
    }

    pub fn primes(&self) -> Vec<u64> {
        self.prime_powers.iter().map(|&(p, _)| p).collect()
    }
}

/// Extracts every prime factor ≤ `bound` by trial division.  The residual is
/// returned unfactored, flagged prime only when a deterministic test applies.
pub fn factor_bounded(value: &BigInt, bound: u64) -> Result<Factorization> {
    if value.is_zero() {
        return Err(Error::InvalidParameters("cannot factor zero".into()));
    }
    let sign = if value.is_negative() { -1 } else { 1 };
    let mut rest = value.abs();
    let mut prime_powers = Vec::new();
    let mut divide_out = |rest: &mut BigInt, p: u64| {
        let big_p = BigInt::from(p);
        let mut exp = 0u32;
        loop {
            let (q, r) = rest.div_rem(&big_p);
            if !r.is_zero() {
                break;
            }
            *rest = q;
            exp += 1;
        }
        if exp > 0 {
            prime_powers.push((p, exp));
        }
    };
    if bound >= 2 {
        divide_out(&mut rest, 2);
    }
    if bound >= 3 {
        divide_out(&mut rest, 3);
    }
    // Candidates 6k ± 1; composites are skipped for free because their prime
    // parts were already divided out.
    let mut p = 5u64;
    while p <= bound {
        divide_out(&mut rest, p);
        if p + 2 <= bound {
            divide_out(&mut rest, p + 2);
        }
        p += 6;
    }
    let cofactor_is_prime = if rest.is_one() {
        Some(false)
    } else {
        u64::try_from(&rest).ok().map(is_prime)
    };
    Ok(Factorization {
        sign,
        prime_powers,
        cofactor: rest,
        cofactor_is_prime,
    })
}

/// Deterministic Miller–Rabin primality test, valid for all `u64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This base set is deterministic for every n < 2^64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Rank of an integer matrix over ℚ, by fraction-free elimination.  Tries a
/// fixed-width pass first and falls back to big integers if any intermediate
/// overflows; both routes are exact.
pub(crate) fn rank_rational(rows: &[Vec<i64>]) -> usize {
    rank_bareiss_i128(rows).unwrap_or_else(|| rank_bareiss_bigint(rows))
}

fn rank_bareiss_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let nr = rows.len();
    let nc = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for k in 0..nr.min(nc) {
        let mut pivot = None;
        'search: for i in k..nr {
            for j in k..nc {
                if m[i][j] != 0 {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(pi, k);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(pj, k);
            }
        }
        for i in k + 1..nr {
            for j in k + 1..nc {
                let t = m[i][j]
                    .checked_mul(m[k][k])?
                    .checked_sub(m[i][k].checked_mul(m[k][j])?)?;
                m[i][j] = t / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
        rank += 1;
    }
    Some(rank)
}

fn rank_bareiss_bigint(rows: &[Vec<i64>]) -> usize {
    let nr = rows.len();
    let nc = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for k in 0..nr.min(nc) {
        let mut pivot = None;
        'search: for i in k..nr {
            for j in k..nc {
                if !m[i][j].is_zero() {
                    pivot = Some((i, j));
                    break 'search;
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        m.swap(pi, k);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(pj, k);
            }
        }
        for i in k + 1..nr {
            for j in k + 1..nc {
                let t = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = t / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
        rank += 1;
    }
    rank
}

/// Rank of an integer matrix over the prime field F_p.
pub(crate) fn rank_mod_prime(rows: &[Vec<i64>], p: u64) -> usize {
    let nr = rows.len();
    let nc = rows.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..nc {
        let Some(pi) = (row..nr).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(pi, row);
        let inv = pow_mod(m[row][col], p - 2, p);
        for i in row + 1..nr {
            if m[i][col] == 0 {
                continue;
            }
            let f = mul_mod(m[i][col], inv, p);
            for j in col..nc {
                let sub = mul_mod(f, m[row][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        rank += 1;
        row += 1;
        if row == nr {
            break;
        }
    }
    rank
}
