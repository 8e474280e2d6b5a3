//! Named codes. Most are stored as text fixtures under `fixtures/`; see the
//! README there for how each matrix was produced. `qr48` and `d<2k>` are built
//! on demand.

use super::code::LinearCode;
use super::format::parse_generator_matrix;
use super::word::Word;
use crate::error::{Error, Result};
use std::path::Path;

const FIXTURES: &[(&str, &str)] = &[
    ("e7", include_str!("../../fixtures/e7.txt")),
    ("e8", include_str!("../../fixtures/e8.txt")),
    ("g24", include_str!("../../fixtures/g24.txt")),
    ("rm25", include_str!("../../fixtures/rm25.txt")),
    ("sd24-6d4", include_str!("../../fixtures/sd24-6d4.txt")),
    ("sd24-4d6", include_str!("../../fixtures/sd24-4d6.txt")),
    ("sd24-3d8", include_str!("../../fixtures/sd24-3d8.txt")),
    ("sd24-2d12", include_str!("../../fixtures/sd24-2d12.txt")),
    ("sd24-d24", include_str!("../../fixtures/sd24-d24.txt")),
    ("sd24-2e7+d10", include_str!("../../fixtures/sd24-2e7+d10.txt")),
    ("sd24-e8+d16", include_str!("../../fixtures/sd24-e8+d16.txt")),
    ("sd24-3e8", include_str!("../../fixtures/sd24-3e8.txt")),
];

/// The bundled self-dual Type II codes of length 24, one per tetrad system in
/// Koch's list (g24 covers the empty system).
pub const LENGTH24_FIXTURES: &[&str] =
    &["g24", "sd24-6d4", "sd24-4d6", "sd24-3d8", "sd24-2d12", "sd24-d24", "sd24-2e7+d10", "sd24-e8+d16", "sd24-3e8"];

pub fn catalog_names() -> Vec<String> {
    let mut v: Vec<String> = FIXTURES.iter().map(|(n, _)| n.to_string()).collect();
    v.push("qr48".into());
    v.push("d<2k>".into());
    v
}

pub fn catalog(name: &str) -> Result<LinearCode> {
    catalog_in(name, None)
}

/// Looks `name` up, preferring `<dir>/<name>.txt` when a fixture directory is given.
pub fn catalog_in(name: &str, dir: Option<&Path>) -> Result<LinearCode> {
    if let Some(dir) = dir {
        let p = dir.join(format!("{name}.txt"));
        if p.is_file() {
            let text = std::fs::read_to_string(&p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            return parse_generator_matrix(&text);
        }
    }
    if let Some((_, text)) = FIXTURES.iter().find(|(n, _)| *n == name) {
        return parse_generator_matrix(text);
    }
    if name == "qr48" {
        return extended_qr(47);
    }
    if let Some(m) = name.strip_prefix('d').and_then(|r| r.parse::<usize>().ok()) {
        if m >= 2 && m % 2 == 0 && m <= 128 {
            return d_code(m / 2);
        }
    }
    Err(Error::UnknownCode(name.to_string()))
}

/// d_{2k}: words of length 2k constant on each coordinate pair {2i, 2i+1} with
/// an even number of pairs set. Dimension k−1, spanned by adjacent pair unions.
pub fn d_code(k: usize) -> Result<LinearCode> {
    let n = 2 * k;
    let gens = (0..k.saturating_sub(1))
        .map(|i| Word::from_support(n, &[2 * i, 2 * i + 1, 2 * i + 2, 2 * i + 3]))
        .collect::<Result<Vec<_>>>()?;
    if k == 0 {
        return Err(Error::UnsupportedLength(0));
    }
    LinearCode::from_basis(n, &gens)
}

/// Reed–Muller RM(r, m): evaluations of polynomials of degree ≤ r on F₂^m.
/// Coordinate x ∈ 0..2^m; the monomial Π_{i∈T} x_i is the word {x : x ⊇ T}.
pub fn reed_muller(r: usize, m: usize) -> Result<LinearCode> {
    let n = 1usize << m;
    let mut gens = Vec::new();
    for t in 0u32..(1 << m) {
        if t.count_ones() as usize <= r {
            let sup: Vec<usize> = (0..n).filter(|&x| x as u32 & t == t).collect();
            gens.push(Word::from_support(n, &sup)?);
        }
    }
    LinearCode::from_basis(n, &gens)
}

/// The [7,3,4] simplex code: coordinates are the nonzero points of F₂³.
pub fn simplex7() -> Result<LinearCode> {
    let gens = (0..3)
        .map(|i| Word::from_support(7, &(1..8usize).filter(|x| x >> i & 1 == 1).map(|x| x - 1).collect::<Vec<_>>()))
        .collect::<Result<Vec<_>>>()?;
    LinearCode::from_basis(7, &gens)
}

fn is_prime(p: usize) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Extended quadratic-residue code of prime length p ≡ −1 mod 8: the cyclic
/// code spanned by the shifts of the residue indicator, extended by an overall
/// parity coordinate.
pub fn extended_qr(p: usize) -> Result<LinearCode> {
    if !is_prime(p) || p % 8 != 7 || p + 1 > 128 {
        return Err(Error::Precondition(format!("extended QR needs a prime p ≡ 7 mod 8 with p < 128, got {p}")));
    }
    let residues: Vec<usize> = (1..p).map(|x| x * x % p).collect();
    let base: u128 = residues.iter().fold(0, |m, &r| m | 1 << r);
    let rot = |s: usize| -> u128 {
        let full = (1u128 << p) - 1;
        ((base << s) | (base >> ((p - s) % p))) & full
    };
    let cyclic = LinearCode::from_raw_rows(p, (0..p).map(rot).collect());
    let ext: Vec<u128> = cyclic
        .generators()
        .iter()
        .map(|g| g.bits() | ((g.weight() as u128 & 1) << p))
        .collect();
    Ok(LinearCode::from_raw_rows(p + 1, ext))
}
