mod common;

use nodal_core::macaulay::{
    gotzmann_polynomial, is_o_sequence, lower_bound_profile, lower_shadow, macaulay_expansion, upper_growth, HVector,
};
use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

#[test]
fn spec_examples() {
    assert_eq!(macaulay_expansion(&big(7), 3).unwrap().to_string(), "eps = [1, 1, -1]");
    assert_eq!(upper_growth(&big(5), 2).unwrap(), big(7));
    let s = lower_shadow(&big(7), 3).unwrap();
    assert_eq!((s.value.clone(), s.strict), (big(5), false));
    let s = lower_shadow(&big(1), 5).unwrap();
    assert_eq!((s.value, s.strict), (big(1), false));
    assert_eq!(lower_bound_profile(5, 7, 3).unwrap(), 4);
    assert_eq!(lower_bound_profile(9, 7, 3).unwrap(), 5);
    assert_eq!(lower_bound_profile(15, 7, 2).unwrap(), 5);
    assert!(lower_bound_profile(16, 7, 2).is_err());
    let g = gotzmann_polynomial(&big(8), 7).unwrap();
    assert_eq!(g.polynomial_string().unwrap(), "t + 1");
    assert_eq!(g.dimension, BigInt::from(1));
    assert_eq!(gotzmann_polynomial(&big(0), 5).unwrap().dimension, BigInt::from(-1));
}

#[test]
fn shadow_at_base_six_is_strict() {
    // 6 = binom(6,6) + ... + binom(1,1): e_1 = 0, so the bound 5 is strict
    let s = lower_shadow(&big(6), 6).unwrap();
    assert_eq!((s.value, s.strict), (big(5), true));
    assert_eq!(common::lex_segment_oracle(6, 6).1, 6);
    let g = gotzmann_polynomial(&big(6), 6).unwrap();
    assert_eq!(g.polynomial_string().unwrap(), "6");
    assert_eq!(g.dimension, BigInt::from(0));
}

#[test]
fn o_sequence_examples() {
    let check = |s: &str| is_o_sequence(&HVector::parse(s).unwrap());
    assert_eq!(check("1,2,3,0,1").first_violation, Some(4));
    assert!(check("1,2,3,0,0").ok);
    assert_eq!(check("1,2,3,0,2").first_violation, Some(4));
}

proptest! {
    #[test]
    fn expansion_round_trip(c in 0u64..1_000_000, d in 1usize..=12) {
        let e = macaulay_expansion(&big(c), d).unwrap();
        prop_assert_eq!(e.value(), big(c));
        let coeffs: Vec<i64> = e.coefficients().iter().map(|x| x.to_i64().unwrap()).collect();
        prop_assert!(coeffs.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(coeffs.iter().all(|&x| x >= -1));
    }

    #[test]
    fn growth_and_shadow_are_monotone(c in 0u64..5000, extra in 0u64..50, d in 2usize..=9) {
        prop_assert!(upper_growth(&big(c), d).unwrap() <= upper_growth(&big(c + extra), d).unwrap());
        prop_assert!(lower_shadow(&big(c), d).unwrap().value <= lower_shadow(&big(c + extra), d).unwrap().value);
    }

    #[test]
    fn shadow_chain_dominates_profile(d in 2u64..=10, hh in 0u64..=21, k_off in 0u64..=10) {
        let h = hh.min(2 * d + 1);
        let k = d - k_off.min(d);
        let mut v = h;
        let mut base = d;
        while base > k && base >= 2 {
            let s = lower_shadow(&big(v), base as usize).unwrap();
            v = s.value.to_u64().unwrap() + u64::from(s.strict);
            base -= 1;
        }
        if base == k {
            prop_assert!(v >= lower_bound_profile(h, d, k).unwrap());
        }
    }

    #[test]
    fn oracle_agreement(c in 0usize..=60, d in 2usize..=5) {
        let (up, down) = common::lex_segment_oracle(c, d);
        prop_assert_eq!(upper_growth(&BigUint::from(c), d).unwrap().to_u64().unwrap(), up);
        let s = lower_shadow(&BigUint::from(c), d).unwrap();
        prop_assert_eq!(s.value.to_u64().unwrap() + u64::from(s.strict), down);
    }
}
