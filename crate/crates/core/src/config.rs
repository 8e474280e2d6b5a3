//! Configuration results: generation by minimal-weight words, and the
//! intersection-number systems for hypothetical extremal codes of length 48
//! and 72 whose quotient C/⟨C_δ⟩ is nontrivial.

use crate::designs::{extremal_bound, sigma};
use crate::error::{Error, Result};
use crate::gf2::{min_weight, subcode_generated_by_shell, LinearCode};
use crate::linalg;
use crate::poly::gleason::extremal_type_ii_enumerator;
use crate::zonal::ZonalHarmonic;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GenerationReport {
    pub min_weight: Option<usize>,
    pub code_dimension: usize,
    pub span_dimension: usize,
}

impl GenerationReport {
    pub fn deficit(&self) -> usize {
        self.code_dimension - self.span_dimension
    }

    pub fn generated(&self) -> bool {
        self.deficit() == 0
    }
}

/// Compares dim ⟨C_δ⟩ with dim C, δ the minimum weight.
pub fn generated_by_minimal_weight(code: &LinearCode) -> Result<GenerationReport> {
    let mw = min_weight(code)?;
    let span_dimension = match mw {
        Some(w) => subcode_generated_by_shell(code, w)?.dimension(),
        None => 0,
    };
    Ok(GenerationReport { min_weight: mw, code_dimension: code.dimension(), span_dimension })
}

/// A_δ of the extremal Type II enumerator of length n.
pub fn extremal_min_weight_count(n: usize) -> Result<BigInt> {
    let (_, w) = extremal_type_ii_enumerator(n)?;
    let a = w.coeff(extremal_bound(n));
    Ok(a.to_integer())
}

/// Rows L_t[j] = Z_t(n, wc = s, wv = δ, wj = j) for the listed degrees and intersections.
pub fn zonal_rows(n: usize, s: usize, delta: usize, degrees: &[usize], js: &[usize]) -> Result<Vec<Vec<BigRational>>> {
    degrees
        .iter()
        .map(|&t| {
            let z = ZonalHarmonic::new(n, s, t)?;
            js.iter().map(|&j| z.evaluate(delta, j)).collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionSystem {
    pub n: usize,
    pub s: usize,
    pub delta: usize,
    /// Intersection sizes j of the unknowns N_j.
    pub unknowns: Vec<usize>,
    /// Degree of the zonal harmonic behind each row; None for the counting row.
    pub row_degrees: Vec<Option<usize>>,
    pub matrix: Vec<Vec<BigRational>>,
    pub rhs: Vec<BigRational>,
    /// Rows kept in the square augmented system (a prefix of the rows).
    pub square_rows: usize,
    /// Determinant of the square augmented matrix [matrix | rhs] on the kept rows.
    pub determinant: BigRational,
}

/// Builds the system for n ∈ {48, 72} and reference weight δ < s ≤ n − δ; `s`
/// must be a multiple of 4 unless `allow_any_even` is set.
pub fn intersection_system_with(n: usize, s: usize, allow_any_even: bool) -> Result<IntersectionSystem> {
    if n != 48 && n != 72 {
        return Err(Error::Precondition(format!("intersection systems are built for n ∈ {{48, 72}}, got {n}")));
    }
    let delta = extremal_bound(n);
    let sig = sigma(n)?;
    // For s > n − δ some intersections j ≤ δ/2 are infeasible and the rows degenerate.
    if s <= delta || s > n - delta || s % 2 != 0 || (!allow_any_even && s % 4 != 0) {
        return Err(Error::Precondition(format!(
            "need δ = {delta} < s ≤ {} with s ≡ 0 mod 4 (or even), got {s}",
            n - delta
        )));
    }
    let unknowns: Vec<usize> = (0..=delta / 2).step_by(2).collect();
    let mut degrees: Vec<usize> = (1..=sig).collect();
    degrees.push(sig + 2);
    let a_delta = BigRational::from_integer(extremal_min_weight_count(n)?);
    let mut matrix = vec![vec![BigRational::from_integer(1.into()); unknowns.len()]];
    let mut rhs = vec![a_delta];
    let mut row_degrees = vec![None];
    for (t, row) in degrees.iter().zip(zonal_rows(n, s, delta, &degrees, &unknowns)?) {
        matrix.push(row);
        rhs.push(BigRational::zero());
        row_degrees.push(Some(*t));
    }
    let square_rows = unknowns.len() + 1;
    let aug: Vec<Vec<BigRational>> = matrix[..square_rows]
        .iter()
        .zip(&rhs)
        .map(|(r, b)| r.iter().cloned().chain([b.clone()]).collect())
        .collect();
    let determinant = linalg::determinant(&aug);
    Ok(IntersectionSystem { n, s, delta, unknowns, row_degrees, matrix, rhs, square_rows, determinant })
}

pub fn intersection_system(n: usize, s: usize) -> Result<IntersectionSystem> {
    intersection_system_with(n, s, false)
}

/// Numerator of the closed-form determinant, coefficients in increasing degree.
pub fn numerator_polynomial(n: usize) -> Result<Vec<BigInt>> {
    let c: &[i64] = match n {
        48 => &[-20736, 4906, -396, 11],
        72 => &[3650496, -800440, 67410, -2600, 39],
        _ => return Err(Error::Precondition(format!("closed forms are known for n ∈ {{48, 72}}, got {n}"))),
    };
    Ok(c.iter().map(|&x| BigInt::from(x)).collect())
}

fn prefactor(n: usize) -> BigInt {
    let f: &[(u64, u32)] = if n == 48 {
        &[(2, 26), (3, 5), (5, 2), (7, 1), (11, 2), (23, 2), (43, 1), (47, 1)]
    } else {
        &[(2, 42), (3, 5), (5, 2), (7, 2), (11, 2), (13, 1), (17, 3), (23, 2), (67, 2), (71, 1)]
    };
    f.iter().fold(BigInt::from(1), |acc, &(p, e)| acc * BigInt::from(p).pow(e))
}

pub fn eval_poly(c: &[BigInt], s: &BigInt) -> BigInt {
    c.iter().rev().fold(BigInt::zero(), |acc, a| acc * s + a)
}

/// The closed-form determinant prefactor · numerator(s) / (s^r · Π_{k=1..r} (s−k)^{r−k+1}),
/// with r = 3 for n = 48 and r = 4 for n = 72.
pub fn closed_form_determinant(n: usize, s: i64) -> Result<BigRational> {
    let num = numerator_polynomial(n)?;
    let r: i64 = if n == 48 { 3 } else { 4 };
    let mut den = BigInt::from(1);
    for k in 1..=r {
        den *= BigInt::from(s - k).pow((r - k + 1) as u32);
    }
    den *= BigInt::from(s).pow(r as u32);
    if den.is_zero() {
        return Err(Error::Precondition(format!("closed form has a pole at s = {s}")));
    }
    Ok(BigRational::new(prefactor(n) * eval_poly(&num, &BigInt::from(s)), den))
}

/// All integer roots, by testing 0 and ± every divisor of the lowest nonzero coefficient.
pub fn integer_roots(c: &[BigInt]) -> Vec<BigInt> {
    let mut roots = Vec::new();
    let Some(low) = c.iter().position(|a| !a.is_zero()) else { return roots };
    if low > 0 {
        roots.push(BigInt::zero());
    }
    let c0 = c[low].abs();
    let reduced = &c[low..];
    let limit = c0.sqrt();
    let mut d = BigInt::from(1);
    let mut divisors = Vec::new();
    while d <= limit {
        if c0.is_multiple_of(&d) {
            divisors.push(d.clone());
            divisors.push(&c0 / &d);
        }
        d += 1;
    }
    divisors.sort();
    divisors.dedup();
    for d in divisors {
        for r in [d.clone(), -d] {
            if eval_poly(reduced, &r).is_zero() {
                roots.push(r);
            }
        }
    }
    roots.sort();
    roots
}

pub fn verify_no_integer_roots(n: usize) -> Result<bool> {
    Ok(integer_roots(&numerator_polynomial(n)?).is_empty())
}

/// Renders the numerator like `11s^3 - 396s^2 + 4906s - 20736`.
pub fn render_numerator(c: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, a) in c.iter().enumerate().rev() {
        if a.is_zero() {
            continue;
        }
        let mag = a.abs();
        let sign = if a.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if a.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(&format!(" {sign} "));
        }
        let m = if mag == BigInt::from(1) && i > 0 { String::new() } else { mag.to_string() };
        out.push_str(&match i {
            0 => mag.to_string(),
            1 => format!("{m}s"),
            _ => format!("{m}s^{i}"),
        });
    }
    out
}

/// N_j for j = 0..=δ: the distribution of wt(c ∩ c̄) over codewords of weight δ.
pub fn measured_intersections(code: &LinearCode, cfixed: &crate::gf2::Word, delta: usize) -> Result<Vec<u64>> {
    let joint = crate::gf2::joint_distribution(code, cfixed)?;
    Ok((0..=delta).map(|j| joint.get(delta, j)).collect())
}

/// Whether the measured N_j satisfy Σ_j N_j = A_δ and Σ_j N_j Z_t(δ, j) = 0 for the given degrees.
pub fn rows_hold(n: usize, s: usize, delta: usize, a_delta: u64, counts: &[u64], degrees: &[usize]) -> Result<bool> {
    if counts.iter().sum::<u64>() != a_delta {
        return Ok(false);
    }
    let js: Vec<usize> = (0..counts.len()).filter(|&j| counts[j] > 0).collect();
    let rows = zonal_rows(n, s, delta, degrees, &js)?;
    Ok(rows.iter().all(|row| {
        row.iter()
            .zip(&js)
            .fold(BigRational::zero(), |acc, (z, &j)| acc + z * BigRational::from_integer(counts[j].into()))
            .is_zero()
    }))
}
