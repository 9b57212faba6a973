//! Property-based invariants over randomized inputs.

use num_bigint::BigInt;
use proptest::prelude::*;

use lefschetz_core::{
    binomial, det_exact, factor_bounded, hilbert_from_resolution, hilbert_oracle, lozenge_count,
    unimodality, HexagonSides, MaciParams,
};

proptest! {
    #[test]
    fn factorization_reconstructs_input(v in prop::num::i128::ANY, bound in 2u64..5000) {
        prop_assume!(v != 0);
        let value = BigInt::from(v);
        let f = factor_bounded(&value, bound).unwrap();
        prop_assert_eq!(f.reconstruct(), value);
        for w in f.prime_powers.windows(2) {
            prop_assert!(w[0].0 < w[1].0);
        }
    }

    #[test]
    fn binomial_symmetry_and_pascal(n in 0u64..60, k in -5i64..65) {
        prop_assert_eq!(binomial(n, k), binomial(n, n as i64 - k));
        if n > 0 {
            let pascal = binomial(n - 1, k - 1) + binomial(n - 1, k);
            prop_assert_eq!(binomial(n, k), pascal);
        }
    }

    #[test]
    fn determinant_transpose_invariant(
        entries in prop::collection::vec(-20i64..=20, 16)
    ) {
        let m: Vec<Vec<BigInt>> = (0..4)
            .map(|i| (0..4).map(|j| BigInt::from(entries[4 * i + j])).collect())
            .collect();
        let mt: Vec<Vec<BigInt>> = (0..4)
            .map(|i| (0..4).map(|j| m[j][i].clone()).collect())
            .collect();
        prop_assert_eq!(det_exact(&m).unwrap(), det_exact(&mt).unwrap());
    }

    #[test]
    fn determinant_row_swap_negates(
        entries in prop::collection::vec(-20i64..=20, 9)
    ) {
        let m: Vec<Vec<BigInt>> = (0..3)
            .map(|i| (0..3).map(|j| BigInt::from(entries[3 * i + j])).collect())
            .collect();
        let mut swapped = m.clone();
        swapped.swap(0, 2);
        prop_assert_eq!(det_exact(&m).unwrap(), -det_exact(&swapped).unwrap());
    }

    #[test]
    fn lozenge_count_permutation_invariant(a in 1u32..=15, b in 1u32..=15, c in 1u32..=15) {
        let reference = lozenge_count(&HexagonSides::new(a, b, c).unwrap());
        for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
            prop_assert_eq!(
                &lozenge_count(&HexagonSides::new(x, y, z).unwrap()),
                &reference
            );
        }
    }

    #[test]
    fn hilbert_routes_agree_and_are_unimodal(
        alpha in 0u32..=6, db in 0u32..=4, dg in 0u32..=4, t in 1u32..=6
    ) {
        let beta = alpha + db;
        let gamma = beta + dg;
        prop_assume!(gamma > 0);
        let p = MaciParams::new(alpha, beta, gamma, t).unwrap();
        let h = hilbert_oracle(p);
        prop_assert_eq!(&hilbert_from_resolution(p), &h);
        prop_assert!(unimodality(&h).is_peaked_strictly_unimodal());
    }
}
