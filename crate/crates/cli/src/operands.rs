use bigsub_core::{compare_magnitude, parse_magnitude, Magnitude};

use crate::rng::SplitMix64;

/// Draws a decimal string of exactly `digits` characters with no leading
/// zero, unless `digits == 1`.
pub fn gen_operand(digits: usize, rng: &mut SplitMix64) -> String {
    assert!(digits >= 1, "operand needs at least one digit");
    let mut s = String::with_capacity(digits);
    let lead = if digits == 1 {
        rng.next_u64() % 10
    } else {
        1 + rng.next_u64() % 9
    };
    s.push(char::from(b'0' + lead as u8));
    for _ in 1..digits {
        s.push(char::from(b'0' + (rng.next_u64() % 10) as u8));
    }
    s
}

/// Draws `a` then `b`, swapping them if needed so that `a >= b`.
pub fn gen_ordered_pair(digits_a: usize, digits_b: usize, rng: &mut SplitMix64) -> (String, String) {
    let a = gen_operand(digits_a, rng);
    let b = gen_operand(digits_b, rng);
    let ma: Magnitude = parse_magnitude(&a).expect("generated digits");
    let mb: Magnitude = parse_magnitude(&b).expect("generated digits");
    if compare_magnitude(&ma, &mb).is_lt() {
        (b, a)
    } else {
        (a, b)
    }
}
