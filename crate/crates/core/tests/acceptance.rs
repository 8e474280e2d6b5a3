//! One PASS/FAIL line per acceptance criterion, with wall time against its limit.

mod common;

use common::*;
use harmonic_codes::config;
use harmonic_codes::designs::{is_design_harmonic, lambda_of, moment_check, sigma, Design};
use harmonic_codes::discrete::{apply_x, commutator_checks, harmonic_dimension, specht_basis, DiscretePoly};
use harmonic_codes::euclid;
use harmonic_codes::gf2::{catalog, joint_distribution, weight_distribution, JointDistribution, Word, LENGTH24_FIXTURES};
use harmonic_codes::hwe::{generalized_macwilliams_check, WordTable};
use harmonic_codes::poly::gleason::{delta_i, extremal_type_ii_enumerator, phi, psi, x2_plus_y2, xi};
use harmonic_codes::poly::{macwilliams_transform, RatPoly};
use harmonic_codes::tetrad::{coordinate_cover_check, koch_classify, KOCH_LIST};
use harmonic_codes::zonal::{qdk, ZonalHarmonic};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rayon::prelude::*;
use std::time::{Duration, Instant};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn c1() -> Outcome {
    let mono = |a: usize, b: usize| RatPoly::monomial(a + b, b, rat(1));
    let x4y4 = RatPoly::from_ints(&[1, 0, 0, 0, -1]);
    let x8y8 = RatPoly::from_ints(&[1, 0, 0, 0, 0, 0, 0, 0, -1]);
    let octic = RatPoly::from_ints(&[1, 0, 0, 0, -34, 0, 0, 0, 1]);
    ensure(phi() == RatPoly::from_ints(&[1, 0, 0, 0, 14, 0, 0, 0, 1]), "φ")?;
    ensure(xi() == &mono(4, 4) * &x4y4.pow(4), "ξ")?;
    ensure(delta_i() == &mono(2, 2) * &RatPoly::from_ints(&[1, 0, -1]).pow(2), "δ")?;
    ensure(psi(0) == RatPoly::constant(rat(1)), "ψ0")?;
    ensure(psi(1) == &(&(&mono(3, 3) * &x4y4.pow(2)) * &x8y8) * &octic, "ψ1")?;
    ensure(psi(2) == &mono(2, 2) * &x4y4.pow(2), "ψ2")?;
    ensure(psi(3) == &(&mono(1, 1) * &x8y8) * &octic, "ψ3")?;
    ensure(psi(2).pow(2) == xi(), "ψ2² = ξ")?;
    ensure(psi(1) == &psi(2) * &psi(3), "ψ1 = ψ2ψ3")?;
    ensure(psi(3).pow(2) == &psi(2) * &(&phi().pow(3) - &xi().scale(&rat(108))), "ψ3² = ψ2(φ³−108ξ)")?;
    ensure(phi() == &x2_plus_y2().pow(4) - &delta_i().scale(&rat(4)), "φ = (x²+y²)⁴ − 4δ")?;
    Ok("7 generators, 4 identities".into())
}

fn c2() -> Outcome {
    let mut r = rng(2024);
    for i in 0..100 {
        let n = r.gen_range(1..=16);
        let g = r.gen_range(0..=n);
        let c = random_code(&mut r, n, g);
        let w = RatPoly::from_counts(&weight_distribution(&c).map_err(e)?.counts);
        let wd = RatPoly::from_counts(&weight_counts(n, &naive_dual_words(&c)));
        let t = macwilliams_transform(&w, &(BigInt::from(1) << c.dimension())).map_err(e)?;
        ensure(t == wd, format!("code {i}: n={n} k={}", c.dimension()))?;
    }
    Ok("100 random codes, n ≤ 16".into())
}

fn c3() -> Outcome {
    let mut slices = 0;
    for n in 1..=10 {
        for d in 0..=n {
            ensure(commutator_checks(n, d).map_err(e)?, format!("commutators n={n} d={d}"))?;
            slices += 1;
        }
    }
    for n in 1..=16usize {
        for d in 0..=n / 2 {
            let expected = binom(n, d) - if d > 0 { binom(n, d - 1) } else { 0 };
            ensure(harmonic_dimension(n, d).map_err(e)? as u64 == expected, format!("dim n={n} d={d}"))?;
        }
    }
    Ok(format!("{slices} commutator slices, dims for n ≤ 16"))
}

fn c4() -> Outcome {
    let mut checked = 0u64;
    for n in 1..=10usize {
        let results: Vec<Result<u64, String>> = (0u128..1 << n)
            .into_par_iter()
            .map(|cbar| {
                let wc = cbar.count_ones() as usize;
                let mut count = 0;
                for d in 0..=4.min(wc) {
                    for k in 0..=d {
                        let mut f: Vec<i64> = (0u128..1 << n)
                            .map(|s| ((s & cbar).count_ones() as usize == k && (s & !cbar).count_ones() as usize == d - k) as i64)
                            .collect();
                        walsh_hadamard(&mut f);
                        let mut cache = std::collections::HashMap::new();
                        for (v, &b) in f.iter().enumerate() {
                            let v = v as u128;
                            let key = (v.count_ones() as usize, (v & cbar).count_ones() as usize);
                            let got = *cache.entry(key).or_insert_with(|| i64::try_from(qdk(n, wc, d, k, key.0, key.1).unwrap()).unwrap());
                            if got != b {
                                return Err(format!("n={n} c̄={cbar:b} d={d} k={k} v={v:b}"));
                            }
                            count += 1;
                        }
                    }
                }
                Ok(count)
            })
            .collect();
        for r in results {
            checked += r?;
        }
    }
    let mut zonals = 0;
    for n in 1..=12usize {
        for wc in 1..=n {
            let cbar = Word::from_bits((1u128 << wc) - 1, n).map_err(e)?;
            for d in 1..=wc {
                let p = ZonalHarmonic::new(n, wc, d).map_err(e)?.as_discrete_poly(&cbar).map_err(e)?;
                ensure(apply_x(&p).map_err(e)?.is_zero(), format!("X̃′Z n={n} wc={wc} d={d}"))?;
                zonals += 1;
            }
        }
    }
    Ok(format!("{checked} (v, c̄, d, k) evaluations, {zonals} zonal harmonics"))
}

fn random_harmonic(r: &mut impl Rng, n: usize, d: usize) -> DiscretePoly {
    let basis = specht_basis(n, d);
    let mut q = DiscretePoly::zero(n, d);
    for _ in 0..4 {
        let t = &basis[r.gen_range(0..basis.len())];
        q = q.add(&t.to_poly().scale(&rat(r.gen_range(-3..=3)))).unwrap();
    }
    q
}

fn c5() -> Outcome {
    let mut r = rng(5);
    for name in ["e8", "g24"] {
        let c = catalog(name).map_err(e)?;
        let n = c.length();
        let cbar = Word::from_support(n, &(0..n / 2 + 1).collect::<Vec<_>>()).map_err(e)?;
        for d in 1..=4 {
            let q = ZonalHarmonic::new(n, cbar.weight(), d).map_err(e)?.as_discrete_poly(&cbar).map_err(e)?;
            let rep = generalized_macwilliams_check(&c, &q).map_err(e)?;
            ensure(rep.holds, format!("{name} zonal d={d} differs at {:?}", rep.diff()))?;
        }
        for i in 0..20 {
            let d = 1 + i % 3;
            let q = random_harmonic(&mut r, n, d);
            ensure(generalized_macwilliams_check(&c, &q).map_err(e)?.holds, format!("{name} random q #{i}"))?;
        }
    }
    Ok("e8, g24: zonal d = 1..4 and 20 random harmonics each".into())
}

fn zonal_from_joint(joint: &JointDistribution, z: &ZonalHarmonic) -> Result<bool, String> {
    for (w, row) in joint.counts.iter().enumerate() {
        let mut sum = BigRational::zero();
        for (j, &k) in row.iter().enumerate() {
            if k > 0 {
                sum += z.evaluate(w, j).map_err(e)? * BigRational::from_integer(k.into());
            }
        }
        if !sum.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn c6() -> Outcome {
    let mut polys = 0usize;
    for name in ["e8", "g24"] {
        let c = catalog(name).map_err(e)?;
        let n = c.length();
        let s = sigma(n).map_err(e)?;
        let table = WordTable::from_code(&c).map_err(e)?;
        for d in (1..=s).chain([s + 2]).filter(|&d| d <= n / 2) {
            let basis = specht_basis(n, d);
            polys += basis.len();
            let ok = basis.par_iter().all(|t| table.polytabloid_sums(t).iter().all(|&(_, v)| v == 0));
            ensure(ok, format!("{name} degree {d}"))?;
        }
    }
    let qr48 = catalog("qr48").map_err(e)?;
    let refs = [qr48.generators()[0], Word::from_support(48, &(0..16).collect::<Vec<_>>()).map_err(e)?];
    let mut six = Vec::new();
    for cbar in &refs {
        let joint = joint_distribution(&qr48, cbar).map_err(e)?;
        for d in [1, 2, 3, 4, 5, 7] {
            let z = ZonalHarmonic::new(48, cbar.weight(), d).map_err(e)?;
            ensure(zonal_from_joint(&joint, &z)?, format!("qr48 zonal d={d} wc={}", cbar.weight()))?;
        }
        six.push(zonal_from_joint(&joint, &ZonalHarmonic::new(48, cbar.weight(), 6).map_err(e)?)?);
    }
    Ok(format!("{polys} polytabloids on e8/g24; qr48 zonal d ∈ {{1..5, 7}} (d = 6 vanishing: {six:?})"))
}

fn c7() -> Outcome {
    let l1 = lambda_of(&Design::from_shell(&catalog("e8").map_err(e)?, 4).map_err(e)?, 3).map_err(e)?;
    ensure(l1 == Some(1), format!("λ(e8, 4, 3) = {l1:?}"))?;
    let l2 = lambda_of(&Design::from_shell(&catalog("g24").map_err(e)?, 12).map_err(e)?, 5).map_err(e)?;
    ensure(l2 == Some(48), format!("λ(g24, 12, 5) = {l2:?}"))?;
    let mut pairs = 0;
    for name in ["e8", "g24"] {
        let c = catalog(name).map_err(e)?;
        for (w, _) in weight_distribution(&c).map_err(e)?.nonzero() {
            if w == 0 || w == c.length() {
                continue;
            }
            let d = Design::from_shell(&c, w).map_err(e)?;
            for t in 1..=w.min(7) {
                let counted = lambda_of(&d, t).map_err(e)?.is_some();
                ensure(counted == is_design_harmonic(&d, t).map_err(e)?, format!("{name} w={w} t={t}"))?;
                ensure(counted == moment_check(&d, t).map_err(e)?, format!("{name} w={w} t={t} moments"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("λ = 1, 48; {pairs} (shell, t) pairs agree"))
}

fn c8() -> Outcome {
    let mut labels = Vec::new();
    for name in LENGTH24_FIXTURES {
        let c = catalog(name).map_err(e)?;
        let label = koch_classify(&c).map_err(e)?;
        ensure(KOCH_LIST.contains(&label.as_str()), format!("{name}: {label}"))?;
        ensure(coordinate_cover_check(&c).map_err(e)?, format!("{name}: cover"))?;
        labels.push(label);
    }
    Ok(labels.join(", "))
}

fn c9() -> Outcome {
    let mut notes = Vec::new();
    let qr48 = catalog("qr48").map_err(e)?;
    let start = Instant::now();
    let dist = weight_distribution(&qr48).map_err(e)?;
    let dt = start.elapsed();
    ensure(dist.total() == 1 << 24, "qr48 word count")?;
    let extremal = extremal_type_ii_enumerator(48).map_err(e)?.1;
    ensure(RatPoly::from_counts(&dist.counts) == extremal, "qr48 enumerator is not the extremal one")?;
    ensure(dt < Duration::from_secs(120), format!("qr48 enumeration took {dt:?}"))?;
    notes.push(format!("2^24 words enumerated in {:.2}s", dt.as_secs_f64()));
    for name in ["e8", "g24", "qr48"] {
        let start = Instant::now();
        let r = config::generated_by_minimal_weight(&catalog(name).map_err(e)?).map_err(e)?;
        ensure(r.deficit() == 0, format!("{name}: deficit {}", r.deficit()))?;
        if name == "qr48" {
            let dt = start.elapsed();
            ensure(dt < Duration::from_secs(120), format!("qr48 took {dt:?}"))?;
            notes.push(format!("qr48 generated by its {} weight-12 words ({:.2}s)", 17296, dt.as_secs_f64()));
        }
    }
    for (n, ss) in [(48usize, [16usize, 20, 24, 28]), (72, [20, 24, 28, 32])] {
        for s in ss {
            let sys = config::intersection_system(n, s).map_err(e)?;
            let closed = config::closed_form_determinant(n, s as i64).map_err(e)?;
            ensure(sys.determinant == closed, format!("n={n} s={s}: {} vs {closed}", sys.determinant))?;
        }
        ensure(config::verify_no_integer_roots(n).map_err(e)?, format!("n={n} numerator has an integer root"))?;
    }
    ensure(extremal.coeff(12) == rat(17296), "A_12 at n = 48")?;
    notes.push("8 determinants match, no integer roots".into());
    Ok(notes.join("; "))
}

fn c10() -> Outcome {
    let t = euclid::construction_a_theta(&catalog("e8").map_err(e)?, 3).map_err(e)?;
    let c = t.integer_coefficients().map_err(e)?;
    ensure(c == [1, 240, 2160, 6720].map(BigInt::from).to_vec(), format!("θ_e8 = {t}"))?;
    let ext = euclid::extremal_theta(24, 3).map_err(e)?;
    let a = euclid::express_in_e4_delta(&ext, 24).map_err(e)?;
    ensure(a == vec![rat(1), rat(-720)], format!("a = {a:?}"))?;
    ensure(ext.coeff(2) == &rat(196560), format!("q² = {}", ext.coeff(2)))?;
    let n = euclid::e8_shell_system();
    ensure(n.to_vec() == [14, 64, 84, 64, 14].map(BigInt::from).to_vec(), format!("{n:?}"))?;
    Ok("θ_e8 = E4, a1 = −720, 196560, (14, 64, 84, 64, 14)".into())
}

fn main() {
    let criteria: [(u32, &str, u64, fn() -> Outcome); 10] = [
        (1, "Gleason generators and identities", 1, c1),
        (2, "MacWilliams on random codes", 5, c2),
        (3, "sl2 relations and harmonic dimensions", 30, c3),
        (4, "zonal evaluator and X̃′Z = 0", 60, c4),
        (5, "generalized MacWilliams", 60, c5),
        (6, "extremal vanishing", 180, c6),
        (7, "designs", 60, c7),
        (8, "Koch tetrad systems", 30, c8),
        (9, "configuration", 120, c9),
        (10, "lattice arithmetic", 10, c10),
    ];
    let mut failed = 0;
    for (id, what, limit, f) in criteria {
        let start = Instant::now();
        let out = f();
        let dt = start.elapsed().as_secs_f64();
        let (status, detail) = match out {
            Ok(d) if dt <= limit as f64 => ("PASS", d),
            Ok(d) => ("FAIL", format!("over time limit: {d}")),
            Err(d) => ("FAIL", d),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {id:>2}: {status} [{dt:.2}s / {limit}s] {what}: {detail}");
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
