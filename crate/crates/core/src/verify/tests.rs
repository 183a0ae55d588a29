use super::*;
use crate::numbers::binomial;

fn ints(v: &[i64]) -> Vec<Integer> {
    v.iter().map(|&x| Integer::from(x)).collect()
}

fn assert_clean(r: &VerificationReport) {
    assert!(r.passed(), "{}: {:?}", r.battery, r.violations);
    assert!(r.cases_run > 0, "{} ran nothing", r.battery);
}

#[test]
fn multisets_count_by_stars_and_bars() {
    for r in 0..5usize {
        for high in 2..6i64 {
            let sets = multisets(r, 2, high);
            assert_eq!(
                Integer::from(sets.len()),
                binomial(high - 2 + r as i64, r as i64)
            );
            assert!(sets.iter().all(|s| s.windows(2).all(|w| w[0] <= w[1])));
        }
    }
}

#[test]
fn battery_names_round_trip() {
    for b in Battery::ALL {
        assert_eq!(b.name().parse::<Battery>().unwrap(), b);
    }
    assert!(matches!(
        "nope".parse::<Battery>(),
        Err(ConfigError::UnknownBattery(_))
    ));
}

#[test]
fn config_validation() {
    let bad = VerifyConfig {
        max_degree: Some(1),
        ..VerifyConfig::default()
    };
    assert!(matches!(
        Battery::Ci.run(&bad),
        Err(ConfigError::TooSmall {
            flag: "--max-degree",
            ..
        })
    ));
    let bad = VerifyConfig {
        trials: Some(0),
        ..VerifyConfig::default()
    };
    assert!(Battery::Laws.run(&bad).is_err());
    let bad = VerifyConfig {
        max_n: Some(21),
        ..VerifyConfig::default()
    };
    assert!(matches!(
        Battery::Squarefree.run(&bad),
        Err(ConfigError::TooManyVariables { n: 21, cap: 20 })
    ));
    let bad = VerifyConfig {
        max_vars: 29,
        ..VerifyConfig::default()
    };
    assert_eq!(bad.validate(), Err(ConfigError::CapTooHigh(29)));
}

#[test]
fn ci_recursion_worked_case() {
    // (1+t)(1+t+t^2) = (1+t)^2 + t^2 (1+t)
    let j = HilbertFunction::complete_intersection(2, &[2, 3]).unwrap();
    assert_eq!(
        j,
        HilbertFunction::from_pairs(&[(0, 1), (1, 2), (2, 2), (3, 1)]).unwrap()
    );
    let i = HilbertFunction::complete_intersection(2, &[2, 2]).unwrap();
    let jp = HilbertFunction::complete_intersection(1, &[2]).unwrap();
    assert_eq!(i.add(&jp.shift(-2)), j);
    assert!(check_ci_recursion(2, &[2, 3]).is_empty());
    assert!(check_ci_recursion(1, &[4]).is_empty());
    assert!(check_ci_recursion(6, &[2, 5, 3]).is_empty());
}

#[test]
fn coro_worked_cases() {
    let a = HilbertFunction::complete_intersection(2, &[2]).unwrap();
    let b = HilbertFunction::complete_intersection(2, &[2, 3]).unwrap();
    assert_eq!(a.values(0, 2).unwrap(), b.values(0, 2).unwrap());
    let a = HilbertFunction::complete_intersection(3, &[]).unwrap();
    let b = HilbertFunction::complete_intersection(3, &[4, 4, 4]).unwrap();
    assert_eq!(a.values(0, 3).unwrap(), ints(&[1, 3, 6, 10]));
    assert_eq!(b.values(0, 3).unwrap(), ints(&[1, 3, 6, 10]));
    assert_ne!(a.coefficient(4), b.coefficient(4));
}

#[test]
fn free_worked_cases() {
    let h = HilbertFunction::free_module(2, &[0, 0, -1]).unwrap();
    assert_eq!(qdepth::qdepth(&h).unwrap().qdepth, 2);
    let h = HilbertFunction::free_module(3, &[1, -1]).unwrap();
    assert_eq!(qdepth::qdepth(&h).unwrap().qdepth, 2);
}

#[test]
fn extension_worked_cases() {
    let one = HilbertFunction::from_pairs(&[(0, 1)]).unwrap();
    assert_eq!(qdepth::qdepth(&one.extend()).unwrap().qdepth, 1);
    for n in 1..6 {
        let s = HilbertFunction::polynomial_ring(n).unwrap();
        assert_eq!(s.extend(), HilbertFunction::polynomial_ring(n + 1).unwrap());
    }
}

#[test]
fn parity_identity_by_hand() {
    // h = {0:1, 1:2}: extend gives 1, 3, 3, 3, ...; β_2^2 = 3 - 1*3 + 1 = 1 = h(0)
    let h = HilbertFunction::from_pairs(&[(0, 1), (1, 2)]).unwrap();
    assert_eq!(qdepth::beta(&h.extend(), 2, 2).unwrap(), Integer::from(1));
    assert_eq!(qdepth::beta(&h.extend(), 1, 1).unwrap(), Integer::from(2));
}

#[test]
fn small_batteries_pass() {
    assert_clean(&verify_poly_ring(12));
    assert_clean(&verify_ci(4, 4));
    assert_clean(&verify_ci_recursion(40, 9, 6));
    assert_clean(&verify_ci_truncation(4, 4));
    assert_clean(&verify_free(40, 9, 6));
    assert_clean(&verify_extension(60, 9));
    assert_clean(&verify_laws(60, 9));
    assert_clean(&verify_squarefree(40, 9, 7, 20));
    assert_clean(&verify_ci_example());
}

#[test]
fn ci_case_count_matches_formula() {
    let r = verify_ci(6, 5);
    let expected: i64 = (1..=6i64)
        .flat_map(|n| (0..=n).map(|r| binomial(3 + r, r).to_string().parse::<i64>().unwrap()))
        .sum();
    assert_eq!(r.cases_run as i64, expected);
    assert_clean(&r);
}

#[test]
fn reports_are_reproducible() {
    let json = |seed| serde_json::to_string(&verify_laws(30, seed)).unwrap();
    assert_eq!(json(4), json(4));
    let run = |seed| {
        let cfg = VerifyConfig {
            seed,
            trials: Some(25),
            ..VerifyConfig::default()
        };
        serde_json::to_string(&Battery::Squarefree.run(&cfg).unwrap()).unwrap()
    };
    assert_eq!(run(2), run(2));
}
