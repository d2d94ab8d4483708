use bigsub_core::oracle::{add_digitwise, strip_leading_zeros, subtract_digitwise};
use bigsub_core::{
    borrow_from_left, compare_magnitude, format_magnitude, parse_magnitude, partition_limbs,
    subtract_parallel, subtract_sequential, subtract_sequential_with_stats, Magnitude,
    SignedMagnitude, WideMagnitude,
};
use proptest::prelude::*;

const BASE: u64 = 1_000_000_000_000_000_000;

fn digit_string(max_len: usize) -> impl Strategy<Value = String> {
    proptest::string::string_regex(&format!("[0-9]{{1,{max_len}}}")).unwrap()
}

fn canonical_string(max_len: usize) -> impl Strategy<Value = String> {
    proptest::string::string_regex(&format!("(0|[1-9][0-9]{{0,{}}})", max_len - 1)).unwrap()
}

/// Digit strings biased toward long runs of 0s and 9s, which stress borrow chains.
fn chainy_string(max_len: usize) -> impl Strategy<Value = String> {
    proptest::string::string_regex(&format!("[1-9](0{{0,40}}|9{{0,40}}|[0-9]{{0,5}}){{0,{max_len}}}"))
        .unwrap()
}

fn ordered(x: String, y: String) -> (String, String) {
    let (mx, my) = (parse_magnitude::<u64>(&x).unwrap(), parse_magnitude::<u64>(&y).unwrap());
    if compare_magnitude(&mx, &my).is_lt() {
        (y, x)
    } else {
        (x, y)
    }
}

/// Value of a limb sequence as a decimal string, computed digit-wise.
fn limb_value(limbs: &[u64]) -> String {
    let mut acc = "0".to_string();
    for &l in limbs {
        let shifted = format!("{acc}{}", "0".repeat(18));
        acc = add_digitwise(&shifted, &l.to_string()).unwrap();
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn parse_format_round_trip(s in canonical_string(200)) {
        let m: Magnitude = parse_magnitude(&s).unwrap();
        prop_assert_eq!(format_magnitude(&m), s);
    }

    #[test]
    fn parse_absorbs_leading_zeros(s in digit_string(120)) {
        let stripped = strip_leading_zeros(&s);
        let m: Magnitude = parse_magnitude(&s).unwrap();
        prop_assert_eq!(&m, &parse_magnitude::<u64>(stripped).unwrap());
        prop_assert!(m.limbs().iter().all(|&l| l < BASE));
        prop_assert!(m.limb_count() == 1 || m.limbs()[0] != 0);
    }

    #[test]
    fn compare_matches_string_order(x in digit_string(60), y in digit_string(60)) {
        let (sx, sy) = (strip_leading_zeros(&x), strip_leading_zeros(&y));
        let expected = sx.len().cmp(&sy.len()).then_with(|| sx.cmp(sy));
        let got = compare_magnitude(
            &parse_magnitude::<u64>(&x).unwrap(),
            &parse_magnitude::<u64>(&y).unwrap(),
        );
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn sequential_matches_oracle(x in chainy_string(8), y in chainy_string(8)) {
        let (a, b) = ordered(x, y);
        let r = subtract_sequential::<u64>(&parse_magnitude(&a).unwrap(), &parse_magnitude(&b).unwrap())
            .unwrap();
        prop_assert_eq!(format_magnitude(&r), subtract_digitwise(&a, &b).unwrap());
    }

    #[test]
    fn parallel_matches_sequential(x in chainy_string(8), y in chainy_string(8), workers in 1usize..9) {
        let (a, b) = ordered(x, y);
        let (ma, mb) = (parse_magnitude::<u64>(&a).unwrap(), parse_magnitude::<u64>(&b).unwrap());
        let seq = subtract_sequential(&ma, &mb).unwrap();
        let (par, stats) = subtract_parallel(&ma, &mb, workers).unwrap();
        prop_assert_eq!(par.limbs(), seq.limbs());
        prop_assert!(stats.iterations >= 1 && stats.iterations <= ma.limb_count());
    }

    #[test]
    fn word_types_agree(x in chainy_string(6), y in chainy_string(6)) {
        let (a, b) = ordered(x, y);
        let u = subtract_sequential::<u64>(&parse_magnitude(&a).unwrap(), &parse_magnitude(&b).unwrap()).unwrap();
        let i: SignedMagnitude = subtract_parallel(&parse_magnitude(&a).unwrap(), &parse_magnitude(&b).unwrap(), 3).unwrap().0;
        let w: WideMagnitude = subtract_sequential(&parse_magnitude(&a).unwrap(), &parse_magnitude(&b).unwrap()).unwrap();
        prop_assert_eq!(format_magnitude(&u), format_magnitude(&i));
        prop_assert_eq!(format_magnitude(&u), format_magnitude(&w));
    }

    #[test]
    fn identities(s in canonical_string(150)) {
        let m: Magnitude = parse_magnitude(&s).unwrap();
        prop_assert_eq!(subtract_sequential(&m, &Magnitude::zero()).unwrap(), m.clone());
        prop_assert!(subtract_sequential(&m, &m).unwrap().is_zero());
    }

    #[test]
    fn oracle_round_trip(x in digit_string(80), y in digit_string(80)) {
        let (a, b) = ordered(x, y);
        let diff = subtract_digitwise(&a, &b).unwrap();
        prop_assert_eq!(add_digitwise(&diff, &b).unwrap(), strip_leading_zeros(&a));
    }

    #[test]
    fn borrow_from_left_preserves_value(
        mut work in proptest::collection::vec(prop_oneof![Just(0u64), 0..BASE], 2..10),
        pick in any::<prop::sample::Index>(),
    ) {
        let i = 1 + pick.index(work.len() - 1);
        prop_assume!(work[..i].iter().any(|&l| l != 0));
        let before = limb_value(&work);
        borrow_from_left(&mut work, i).unwrap();
        prop_assert_eq!(limb_value(&work), before);
        prop_assert!(work[i] < 2 * BASE);
        prop_assert!(work.iter().enumerate().all(|(j, &l)| j == i || l < BASE));
    }

    #[test]
    fn partition_covers_evenly(n in 1usize..500, workers in 1usize..40) {
        let chunks = partition_limbs(n, workers);
        prop_assert_eq!(chunks.len(), workers.min(n));
        let mut next = 0;
        for (id, c) in chunks.iter().enumerate() {
            prop_assert_eq!(c.worker_id, id);
            prop_assert_eq!(c.limb_range.start, next);
            next = c.limb_range.end;
        }
        prop_assert_eq!(next, n);
        let sizes: Vec<_> = chunks.iter().map(|c| c.limb_range.len()).collect();
        prop_assert!(sizes.iter().max().unwrap() - sizes.iter().min().unwrap() <= 1);
    }

    #[test]
    fn borrow_free_inputs_take_one_pass(limbs in proptest::collection::vec((0..BASE, 0..BASE), 1..40)) {
        let a: Vec<u64> = limbs.iter().map(|&(x, y)| x.max(y)).collect();
        let b: Vec<u64> = limbs.iter().map(|&(x, y)| x.min(y)).collect();
        let (ma, mb) = (Magnitude::from_limbs(a.clone()).unwrap(), Magnitude::from_limbs(b).unwrap());
        prop_assume!(ma.limb_count() == a.len());
        let (_, stats) = subtract_parallel(&ma, &mb, 4).unwrap();
        prop_assert_eq!(stats.iterations, 1);
        let (_, seq) = subtract_sequential_with_stats(&ma, &mb).unwrap();
        prop_assert_eq!(seq.limb_subtractions, a.len());
        prop_assert_eq!(seq.borrows, 0);
    }
}
