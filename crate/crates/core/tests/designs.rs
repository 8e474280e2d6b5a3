mod common;

use common::*;
use harmonic_codes::designs::*;
use harmonic_codes::gf2::{catalog, weight_distribution, Word};
use proptest::prelude::*;

#[test]
fn steiner_systems() {
    let e8 = catalog("e8").unwrap();
    assert_eq!(lambda_of(&Design::from_shell(&e8, 4).unwrap(), 3).unwrap(), Some(1));
    let g24 = catalog("g24").unwrap();
    assert_eq!(lambda_of(&Design::from_shell(&g24, 12).unwrap(), 5).unwrap(), Some(48));
    assert_eq!(lambda_of(&Design::from_shell(&g24, 8).unwrap(), 5).unwrap(), Some(1));
    assert_eq!(lambda_of(&Design::from_shell(&g24, 8).unwrap(), 6).unwrap(), None);
}

#[test]
fn criteria_agree_on_every_shell() {
    for name in ["e8", "g24"] {
        let c = catalog(name).unwrap();
        for (w, _) in weight_distribution(&c).unwrap().nonzero() {
            if w == 0 || w == c.length() {
                continue;
            }
            let d = Design::from_shell(&c, w).unwrap();
            for t in 1..=w.min(7) {
                let counted = lambda_of(&d, t).unwrap().is_some();
                assert_eq!(counted, is_design_harmonic(&d, t).unwrap(), "{name} w={w} t={t}");
                assert_eq!(counted, moment_check(&d, t).unwrap(), "{name} w={w} t={t}");
            }
        }
    }
}

#[test]
fn assmus_mattson_reports() {
    let g24 = assmus_mattson_report(&catalog("g24").unwrap()).unwrap();
    let weights: Vec<usize> = g24.iter().map(|r| r.weight).collect();
    assert_eq!(weights, vec![8, 12, 16, 24]);
    for r in &g24[..3] {
        assert_eq!(r.verified_t, 5);
        assert_eq!(r.extra_vanishing_degree, Some(7));
    }
    let rm25 = assmus_mattson_report(&catalog("rm25").unwrap()).unwrap();
    assert!(rm25.iter().filter(|r| r.weight < 32).all(|r| r.verified_t >= 3));
    let json = serde_json::to_value(&g24[0]).unwrap();
    assert_eq!(json["shellSize"], 759);
    assert_eq!(json["verifiedT"], 5);
}

#[test]
fn extremality() {
    assert!(extremal_check(&catalog("g24").unwrap()).unwrap());
    assert!(extremal_check(&catalog("rm25").unwrap()).unwrap());
    assert!(extremal_check(&catalog("e8").unwrap()).unwrap());
    assert!(!extremal_check(&catalog("sd24-6d4").unwrap()).unwrap());
    assert!(extremal_check(&catalog("d8").unwrap()).is_err());
    assert!(sigma(12).is_err());
    assert_eq!(extremal_bound(72), 16);
}

#[test]
fn complete_designs() {
    for n in 1..=8 {
        for w in 0..=n {
            let blocks: Vec<Word> = (0u128..1 << n)
                .filter(|v| v.count_ones() as usize == w)
                .map(|v| Word::from_bits(v, n).unwrap())
                .collect();
            let d = Design::new(n, w, blocks).unwrap();
            for t in 0..=w {
                assert_eq!(lambda_of(&d, t).unwrap(), Some(binom(n - t, w - t)));
                assert!(is_design_harmonic(&d, t).unwrap());
            }
        }
    }
}

fn design_strategy() -> impl Strategy<Value = (usize, usize, Vec<u128>)> {
    (2usize..=8)
        .prop_flat_map(|n| (Just(n), 1..=n))
        .prop_flat_map(|(n, w)| {
            let all: Vec<u128> = (0u128..1 << n).filter(|v| v.count_ones() as usize == w).collect();
            let len = all.len();
            (Just(n), Just(w), proptest::sample::subsequence(all, 0..=len))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn counting_and_harmonic_criteria_agree((n, w, blocks) in design_strategy()) {
        let d = Design::new(n, w, blocks.iter().map(|&b| Word::from_bits(b, n).unwrap()).collect()).unwrap();
        for t in 1..=w {
            let counted = lambda_of(&d, t).unwrap().is_some();
            prop_assert_eq!(counted, is_design_harmonic(&d, t).unwrap(), "t={}", t);
            prop_assert_eq!(counted, moment_check(&d, t).unwrap(), "t={}", t);
        }
    }
}
