//! Regenerates the text fixtures under `fixtures/`.
//!
//! Usage: cargo run -p harmonic-codes --example gen_fixtures -- <fixture dir>
//!
//! The length-24 tetrad fixtures start from a direct sum of tetrad codes and add
//! random glue vectors from the dual, keeping the code doubly even and rejecting
//! any coset that contains a weight-4 word, until the code is self-dual.

use harmonic_codes::gf2::{
    codewords, d_code, extended_qr, reed_muller, render_generator_matrix, simplex7, CodeType, LinearCode, Word,
};
use harmonic_codes::tetrad::koch_classify;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;

enum Part {
    D(usize),
    E7,
    E8,
}

fn part_code(p: &Part) -> LinearCode {
    match p {
        Part::D(m) => d_code(m / 2).unwrap(),
        Part::E7 => simplex7().unwrap(),
        Part::E8 => reed_muller(1, 3).unwrap(),
    }
}

fn try_glue(start: &LinearCode, rng: &mut ChaCha8Rng) -> Option<LinearCode> {
    let n = start.length();
    let mut code = start.clone();
    while 2 * code.dimension() < n {
        let dual = code.dual().generators();
        let words = codewords(&code).unwrap();
        let mut found = None;
        for _ in 0..4000 {
            let v = dual.iter().filter(|_| rng.gen_bool(0.5)).fold(0u128, |a, g| a ^ g.bits());
            if v.count_ones() % 4 != 0 || code.contains(&Word::from_bits(v, n).unwrap()).unwrap() {
                continue;
            }
            if words.iter().all(|c| (c ^ v).count_ones() != 4) {
                found = Some(v);
                break;
            }
        }
        code = code.add_generators(&[Word::from_bits(found?, n).unwrap()]).unwrap();
    }
    Some(code)
}

fn glued(parts: &[Part], seed: u64) -> LinearCode {
    let mut base = part_code(&parts[0]);
    for p in &parts[1..] {
        base = base.direct_sum(&part_code(p)).unwrap();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if let Some(c) = try_glue(&base, &mut rng) {
            assert_eq!(c.classify_type(), CodeType::TypeII);
            return c;
        }
    }
}

fn main() {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "crates/core/fixtures".into()));
    let write = |name: &str, code: &LinearCode| {
        std::fs::write(dir.join(format!("{name}.txt")), render_generator_matrix(code)).unwrap();
        println!("{name}: [{}, {}]", code.length(), code.dimension());
    };
    write("e7", &simplex7().unwrap());
    write("e8", &reed_muller(1, 3).unwrap());
    write("g24", &extended_qr(23).unwrap());
    write("rm25", &reed_muller(2, 5).unwrap());

    use Part::*;
    let systems: Vec<(&str, Vec<Part>)> = vec![
        ("6d4", vec![D(4), D(4), D(4), D(4), D(4), D(4)]),
        ("4d6", vec![D(6), D(6), D(6), D(6)]),
        ("3d8", vec![D(8), D(8), D(8)]),
        ("2d12", vec![D(12), D(12)]),
        ("d24", vec![D(24)]),
        ("2e7+d10", vec![E7, E7, D(10)]),
        ("e8+d16", vec![E8, D(16)]),
        ("3e8", vec![E8, E8, E8]),
    ];
    for (label, parts) in systems {
        let code = glued(&parts, 24);
        assert_eq!(koch_classify(&code).unwrap(), label);
        write(&format!("sd24-{label}"), &code);
    }
}
