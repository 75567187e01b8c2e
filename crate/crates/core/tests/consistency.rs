use moduli_core::moduli::{all_intervals, certificate, optimal_parameters, IntervalLabel};
use moduli_core::natcohom::hilbert_profile;
use moduli_core::{curve_invariants, determinantal_curve, hypersurface, BigInt, Rational};
use proptest::prelude::*;

#[test]
fn optimal_certificate_matches_curve_invariants() {
    for delta in 4..=40 {
        let opt = optimal_parameters(delta).unwrap();
        let inv = curve_invariants(&determinantal_curve(opt.s).unwrap());
        let cert = certificate(delta, opt.s, opt.sigma).unwrap();
        assert!(cert.good, "delta {delta}");
        assert_eq!(cert.c2, opt.c2_min);
        assert_eq!(inv.s_of_c, opt.s);
    }
}

#[test]
fn good_tail_starts_at_optimal_c2() {
    for delta in 4..=60 {
        let opt = optimal_parameters(delta).unwrap();
        let tail = IntervalLabel::GoodTail.interval(delta).unwrap();
        assert_eq!(tail.min_integer(), opt.c2_min);
        assert!(tail.upper.is_none());
    }
}

#[test]
fn core_types_round_trip_through_json() {
    let intervals = all_intervals(31).unwrap();
    let text = serde_json::to_string(&intervals).unwrap();
    assert_eq!(
        serde_json::from_str::<Vec<moduli_core::ComponentInterval>>(&text).unwrap(),
        intervals
    );

    let curve = determinantal_curve(7).unwrap();
    let text = serde_json::to_string(&curve).unwrap();
    assert_eq!(
        serde_json::from_str::<moduli_core::DeterminantalCurve>(&text).unwrap(),
        curve
    );

    let profile =
        hilbert_profile(&hypersurface(6).unwrap(), &BigInt::from(10_000), -4, 10).unwrap();
    let text = serde_json::to_string(&profile).unwrap();
    assert_eq!(
        serde_json::from_str::<moduli_core::NaturalCohomologyProfile>(&text).unwrap(),
        profile
    );
}

#[test]
fn big_values_serialize_as_strings() {
    let interval = IntervalLabel::TwoComponent.interval(29).unwrap();
    let value: serde_json::Value = serde_json::to_value(&interval).unwrap();
    assert!(value["lower"].is_string());
    assert_eq!(
        value["lower"]
            .as_str()
            .unwrap()
            .parse::<Rational>()
            .unwrap(),
        interval.lower
    );
}

proptest! {
    #[test]
    fn contains_agrees_with_integer_bounds(delta in 4i64..200, offset in -5i64..5) {
        for iv in all_intervals(delta).unwrap() {
            let lo = iv.min_integer();
            prop_assert!(iv.contains(&lo) || iv.is_empty());
            let probe = &lo + offset;
            let inside = iv.contains(&probe);
            let expected = probe >= lo && iv.max_integer().map_or(true, |hi| probe <= hi);
            prop_assert_eq!(inside, expected);
        }
    }

    #[test]
    fn natural_profile_euler_characteristic(delta in 4i64..30, extra in 1u32..5000, n in -10i64..30) {
        let surface = hypersurface(delta).unwrap();
        let c2 = BigInt::from(3 * i64::pow(delta, 3)) + extra;
        let profile = hilbert_profile(&surface, &c2, n, n).unwrap();
        let row = &profile.rows[0];
        prop_assert_eq!(&row.h0 - &row.h1 + &row.h2, surface.chi_e(&c2, n));
        prop_assert!(row.nonzero_count() <= 1);
    }
}
