mod common;

use common::*;
use harmonic_codes::discrete::{is_harmonic, specht_basis, DiscretePoly};
use harmonic_codes::gf2::{catalog, shell, LinearCode, Word};
use harmonic_codes::hwe::*;
use harmonic_codes::poly::{HPoly, RatPoly};
use harmonic_codes::zonal::ZonalHarmonic;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::Rng;

/// Σ_{c∈C} q(c) x^{n−wt c} y^{wt c} by direct evaluation over every codeword.
fn brute_enumerator(code: &LinearCode, q: &DiscretePoly) -> RatPoly {
    let n = code.length();
    let mut c = vec![BigRational::zero(); n + 1];
    for w in naive_codewords(code) {
        c[w.count_ones() as usize] += q.evaluate_bits(w);
    }
    HPoly::new(c)
}

/// A random integer combination of a few polytabloids of degree d.
fn random_harmonic(r: &mut impl Rng, n: usize, d: usize) -> DiscretePoly {
    let basis = specht_basis(n, d);
    let mut q = DiscretePoly::zero(n, d);
    for _ in 0..4 {
        let t = &basis[r.gen_range(0..basis.len())];
        q = q.add(&t.to_poly().scale(&rat(r.gen_range(-3..=3)))).unwrap();
    }
    q
}

fn zonal(cbar: &Word, d: usize) -> DiscretePoly {
    ZonalHarmonic::new(cbar.len(), cbar.weight(), d).unwrap().as_discrete_poly(cbar).unwrap()
}

#[test]
fn generalized_macwilliams_for_e8_and_g24() {
    let mut r = rng(11);
    for name in ["e8", "g24"] {
        let c = catalog(name).unwrap();
        let n = c.length();
        // A non-codeword reference: a minimal word with one coordinate flipped.
        let m = shell(&c, if n == 8 { 4 } else { 8 }).unwrap()[0];
        let cbar = m.with(n - 1, !m.get(n - 1));
        for d in 1..=4.min(cbar.weight()) {
            let q = zonal(&cbar, d);
            let rep = generalized_macwilliams_check(&c, &q).unwrap();
            assert!(rep.holds, "{name} zonal d={d}: {:?}", rep.diff());
        }
        for i in 0..20 {
            let d = 1 + i % 3;
            let q = random_harmonic(&mut r, n, d);
            assert!(generalized_macwilliams_check(&c, &q).unwrap().holds, "{name} random d={d}");
        }
    }
}

#[test]
fn direct_form_agrees() {
    let mut r = rng(12);
    let e8 = catalog("e8").unwrap();
    for d in 1..=3 {
        let q = random_harmonic(&mut r, 8, d);
        assert!(generalized_macwilliams_direct_check(&e8, &q).unwrap());
    }
    let non_harmonic = DiscretePoly::monomial(8, 1);
    assert!(!is_harmonic(&non_harmonic));
    assert!(!generalized_macwilliams_check(&e8, &non_harmonic).unwrap().holds);
}

#[test]
fn zonal_enumerator_matches_expansion() {
    let g24 = catalog("g24").unwrap();
    let cbar = shell(&g24, 12).unwrap()[3];
    for d in 1..=4 {
        let fast = zonal_weight_enumerator(&g24, &cbar, d).unwrap();
        assert_eq!(fast, harmonic_weight_enumerator(&g24, &zonal(&cbar, d)).unwrap());
    }
}

#[test]
fn bachoc_decompositions_roundtrip() {
    let g24 = catalog("g24").unwrap();
    let rm25 = catalog("rm25").unwrap();
    let mut seen_nonzero = 0;
    for (c, cbar) in [
        (g24.clone(), Word::from_support(24, &[0, 3, 5, 6, 9, 10, 14]).unwrap()),
        (rm25.clone(), Word::from_support(32, &[1, 2, 4, 8, 16, 31, 7, 11]).unwrap()),
    ] {
        for d in 1..=cbar.weight().min(7) {
            let w = zonal_weight_enumerator(&c, &cbar, d).unwrap();
            let b = bachoc_decompose(&w, d).unwrap();
            assert_eq!(b.psi_index, d % 4);
            if w.is_zero() {
                assert!(b.coefficients.is_empty());
                continue;
            }
            seen_nonzero += 1;
            let back = recompose_principal(&b.coefficients, d, c.length() - 2 * d).times_xy_power(d);
            assert_eq!(back, w, "d={d}");
        }
    }
    assert!(seen_nonzero > 0);
    assert!(principal_module_decompose(&RatPoly::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, 1]), 2).is_err());
}

#[test]
fn extremal_codes_have_vanishing_low_degree_enumerators() {
    let g24 = catalog("g24").unwrap();
    let cbar = Word::from_support(24, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]).unwrap();
    for d in [1, 2, 3, 4, 5, 7] {
        assert!(zonal_weight_enumerator(&g24, &cbar, d).unwrap().is_zero(), "d={d}");
    }
    assert!(!zonal_weight_enumerator(&g24, &cbar, 6).unwrap().is_zero());
    let table = WordTable::from_code(&g24).unwrap();
    assert!(first_nonvanishing_polytabloid(&table, 24, 5).is_none());
    assert!(first_nonvanishing_polytabloid(&table, 24, 6).is_some());
}

fn small_code() -> impl Strategy<Value = (LinearCode, u64)> {
    (2usize..=10, 0usize..=6, any::<u64>()).prop_map(|(n, g, seed)| (random_code(&mut rng(seed), n, g), seed))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumerator_matches_brute_force((c, seed) in small_code()) {
        let n = c.length();
        let mut r = rng(seed ^ 0xabc);
        let d = r.gen_range(0..=n / 2);
        let q = if d == 0 { DiscretePoly::constant(n, rat(1)) } else { random_harmonic(&mut r, n, d) };
        prop_assert_eq!(harmonic_weight_enumerator(&c, &q).unwrap(), brute_enumerator(&c, &q));
    }

    #[test]
    fn generalized_macwilliams_on_random_codes((c, seed) in small_code()) {
        let n = c.length();
        let mut r = rng(seed ^ 0xdef);
        let d = r.gen_range(1..=n / 2);
        let q = random_harmonic(&mut r, n, d);
        let rep = generalized_macwilliams_check(&c, &q).unwrap();
        prop_assert!(rep.holds, "{:?}", rep.diff());
        prop_assert!(generalized_macwilliams_direct_check(&c, &q).unwrap());
    }

    #[test]
    fn self_dual_enumerators_are_divisible(parts in proptest::collection::vec(any::<bool>(), 1..=3), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let i2 = LinearCode::span(2, &["11".parse().unwrap()]).unwrap();
        let e8 = catalog("e8").unwrap();
        let mut c = if parts[0] { e8.clone() } else { i2.clone() };
        for &p in &parts[1..] {
            c = c.direct_sum(if p { &e8 } else { &i2 }).unwrap();
        }
        let n = c.length();
        let mut r = rng(seed);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut r);
        let moved: Vec<Word> = c
            .generators()
            .iter()
            .map(|g| Word::from_support(n, &g.support().iter().map(|&j| perm[j]).collect::<Vec<_>>()).unwrap())
            .collect();
        let c = LinearCode::span(n, &moved).unwrap();
        prop_assert!(c.is_self_dual());
        let d = r.gen_range(1..=n / 2);
        let w = harmonic_weight_enumerator(&c, &random_harmonic(&mut r, n, d)).unwrap();
        let q = divide_by_xyd(&w, d).unwrap();
        prop_assert_eq!(q.times_xy_power(d), w);
    }
}
