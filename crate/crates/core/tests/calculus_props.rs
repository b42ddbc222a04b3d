use proptest::prelude::*;
use semicount::calculus::unordered_bracketings;
use semicount::{delta_add, delta_mul, delta_spectrum, tree_delta, CompTree, DeltaMode, Op};

proptest! {
    #[test]
    fn deltas_commute(x in 0u64..1 << 30, y in 0u64..1 << 30) {
        for mode in [DeltaMode::TwoArg, DeltaMode::Collapse] {
            prop_assert_eq!(delta_add(&x, &y, mode), delta_add(&y, &x, mode));
            prop_assert_eq!(delta_mul(&x, &y, mode), delta_mul(&y, &x, mode));
        }
    }

    #[test]
    fn two_arg_addition_telescopes(leaves in prop::collection::vec(1u64..10_000, 1..6)) {
        let sum: u64 = leaves.iter().sum();
        let expect = (sum as f64).log2() - leaves.iter().map(|v| (*v as f64).log2()).sum::<f64>();
        for e in unordered_bracketings(&leaves, Op::Add) {
            let r = tree_delta(&CompTree::new(e, DeltaMode::TwoArg));
            prop_assert!((r.total - expect).abs() < 1e-9);
            prop_assert_eq!(r.result, sum);
        }
    }

    #[test]
    fn multiplication_spectrum_is_flat(leaves in prop::collection::vec(2u64..1000, 1..6)) {
        let s = delta_spectrum(&leaves, Op::Mul, DeltaMode::TwoArg).unwrap();
        prop_assert_eq!(s.lines.len(), 1);
        prop_assert!(s.lines[0].total.abs() < 1e-9);
    }
}

#[test]
fn spectrum_counts_are_double_factorials() {
    let leaves = [3u64, 5, 8, 13, 21, 34, 55];
    let mut expect = 1u64;
    for n in 2..=7 {
        expect *= 2 * n as u64 - 3;
        let s = delta_spectrum(&leaves[..n], Op::Add, DeltaMode::Collapse).unwrap();
        assert_eq!(s.tree_count, expect, "n = {n}");
    }
}
