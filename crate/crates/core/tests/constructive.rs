//! Property tests for the constructive path.

use polysum::constructive::{
    congruences_hold, decompose, identity_3b4, identity_general, inequalities_hold,
    interval_length_check, select_ab, split, BoundOptions, ConstructError, DecomposeOptions,
    Method,
};
use polysum::polygonal::{verify_witness, Scheme};
use proptest::prelude::*;

// Smallest valid `a` at or after a point in the admissible window for `b`, if any.
fn admissible_a(scheme: Scheme, b: u64, pick: u64) -> Option<u64> {
    let w = scheme.weight() as u64;
    let lo = b * b / w + 1;
    let hi = (b * b + 2 * b + w).div_ceil(w - 1) - 1;
    if lo > hi {
        return None;
    }
    let start = lo + pick % (hi - lo + 1);
    (start..=hi)
        .chain(lo..start)
        .find(|&a| inequalities_hold(scheme, a, b) && congruences_hold(scheme, a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn splits_hit_both_moments(s in 0usize..4, b in 1u64..5_000_000, pick in any::<u64>()) {
        let scheme = Scheme::ALL[s];
        if let Some(a) = admissible_a(scheme, b, pick) {
            let q = split(scheme, a, b).unwrap();
            let (sq, lin) = q.moments(scheme);
            prop_assert_eq!((sq, lin), (a as u128, b as u128));
        }
    }

    #[test]
    fn general_identity(v in proptest::array::uniform8(any::<i64>())) {
        prop_assert!(identity_general(v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7]));
    }

    #[test]
    fn weighted_identity(b in any::<i64>(), v in proptest::array::uniform4(any::<i64>())) {
        prop_assert!(identity_3b4(b, v[0], v[1], v[2], v[3]));
    }

    #[test]
    fn random_large_n(s in 0usize..4, m in 3u32..40, n in 0u64..1_000_000_000_000_000) {
        let scheme = Scheme::ALL[s];
        prop_assume!(scheme.applicable(m));
        let n = n.max(scheme.bound(m, false) as u64);
        let d = decompose(m, n, scheme, DecomposeOptions::default()).unwrap();
        prop_assert_eq!(d.method, Method::Constructive);
        prop_assert!(verify_witness(&d.witness));
        prop_assert!(d.pair.unwrap().check());
    }
}

fn length_threshold(scheme: Scheme, m: u64, l: u64) -> u64 {
    match scheme {
        Scheme::S1111 => 7 * l * l * m * m * m,
        Scheme::S1122 | Scheme::S1113 => 11 * l * m * m * (l * m + 1),
        Scheme::S1124 => 3 * l * m * m * (5 * l * m + 12),
    }
}

#[test]
fn length_lemma_at_its_threshold() {
    for scheme in Scheme::ALL {
        for m in 3..60u32 {
            for l in 1..14u32 {
                if scheme == Scheme::S1124 && l * m < 20 {
                    continue;
                }
                let t = length_threshold(scheme, m as u64, l as u64);
                for n in [t, t + 1, t + 7 * m as u64, 3 * t + 11] {
                    assert_eq!(
                        interval_length_check(scheme, m, n, l),
                        Ok(true),
                        "{scheme} m={m} l={l} N={n}"
                    );
                }
                assert!(matches!(
                    interval_length_check(scheme, m, t - 1, l),
                    Err(ConstructError::PreconditionViolated(_))
                ));
            }
        }
    }
}

#[test]
fn short_products_are_rejected() {
    assert!(matches!(
        interval_length_check(Scheme::S1124, 3, u64::MAX / 2, 6),
        Err(ConstructError::PreconditionViolated(_))
    ));
}

#[test]
fn sharp_odd_bound_sweeps() {
    let opts = BoundOptions {
        sharp_odd_bound: true,
    };
    for m in [3u32, 5, 7, 9, 11] {
        let bound = Scheme::S1122.bound(m, true) as u64;
        assert_eq!(bound, 418 * (m as u64).pow(3));
        for n in bound..bound + 5000 {
            let pair = select_ab(Scheme::S1122, m, n, opts).unwrap();
            assert!(pair.check(), "m={m} N={n}");
        }
    }
}
