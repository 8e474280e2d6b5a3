//! The operators X̃′, Ỹ′, H̃′ on the monomial basis.

use super::poly::DiscretePoly;
use crate::combinatorics::{bits, low_mask, subsets_of_size};
use crate::error::{Error, Result};
use num_rational::BigRational;
use std::collections::HashMap;

/// X̃′: m(S) ↦ Σ_{j∈S} m(S∖{j}).
pub fn apply_x(q: &DiscretePoly) -> Result<DiscretePoly> {
    if q.degree() == 0 {
        return Err(Error::Precondition("X̃′ maps degree 0 to the zero space".into()));
    }
    let mut out = DiscretePoly::zero(q.n(), q.degree() - 1);
    for (s, c) in q.terms() {
        for j in bits(*s) {
            out.add_term(s & !(1 << j), c.clone());
        }
    }
    Ok(out)
}

/// Like `apply_x`, but X̃′ of a constant is the zero polynomial of degree 0.
pub(crate) fn apply_x_or_zero(q: &DiscretePoly) -> DiscretePoly {
    if q.degree() == 0 {
        DiscretePoly::zero(q.n(), 0)
    } else {
        apply_x(q).expect("degree ≥ 1")
    }
}

/// Ỹ′: m(S) ↦ Σ_{j∉S} m(S ∪ {j}).
pub fn apply_y(q: &DiscretePoly) -> Result<DiscretePoly> {
    if q.degree() == q.n() {
        return Err(Error::Precondition("Ỹ′ maps degree n to the zero space".into()));
    }
    let full = low_mask(q.n());
    let mut out = DiscretePoly::zero(q.n(), q.degree() + 1);
    for (s, c) in q.terms() {
        for j in bits(full & !s) {
            out.add_term(s | 1 << j, c.clone());
        }
    }
    Ok(out)
}

/// H̃′: multiplication by n − 2d.
pub fn apply_h(q: &DiscretePoly) -> DiscretePoly {
    let factor = q.n() as i64 - 2 * q.degree() as i64;
    q.scale(&BigRational::from_integer(factor.into()))
}

type Sparse = HashMap<u128, i64>;

fn x_image(s: u128) -> Sparse {
    bits(s).map(|j| (s & !(1 << j), 1)).collect()
}

fn y_image(s: u128, full: u128) -> Sparse {
    bits(full & !s).map(|j| (s | 1 << j, 1)).collect()
}

fn x_of(v: &Sparse) -> Sparse {
    let mut out = Sparse::new();
    for (s, c) in v {
        for j in bits(*s) {
            *out.entry(s & !(1 << j)).or_default() += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn y_of(v: &Sparse, full: u128) -> Sparse {
    let mut out = Sparse::new();
    for (s, c) in v {
        for j in bits(full & !s) {
            *out.entry(s | 1 << j).or_default() += c;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn scaled(v: &Sparse, f: i64) -> Sparse {
    v.iter().filter(|_| f != 0).map(|(s, c)| (*s, c * f)).collect()
}

fn diff(a: &Sparse, b: &Sparse) -> Sparse {
    let mut out = a.clone();
    for (s, c) in b {
        *out.entry(*s).or_default() -= c;
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Column-by-column check of [X̃′,Ỹ′] = H̃′, [H̃′,X̃′] = 2X̃′ and
/// [H̃′,Ỹ′] = −2Ỹ′ on the degree-d slice, with integer arithmetic.
pub fn commutator_checks(n: usize, d: usize) -> Result<bool> {
    if n > 24 || d > n {
        return Err(Error::Precondition(format!("commutator check needs d ≤ n ≤ 24, got n={n} d={d}")));
    }
    let full = low_mask(n);
    let h = |deg: i64| n as i64 - 2 * deg;
    let d = d as i64;
    for s in subsets_of_size(n, d as usize) {
        let e: Sparse = [(s, 1)].into_iter().collect();
        let xy = x_of(&y_image(s, full));
        let yx = y_of(&x_image(s), full);
        if diff(&xy, &yx) != scaled(&e, h(d)) {
            return Ok(false);
        }
        let x = x_image(s);
        if diff(&scaled(&x, h(d - 1)), &scaled(&x, h(d))) != scaled(&x, 2) {
            return Ok(false);
        }
        let y = y_image(s, full);
        if diff(&scaled(&y, h(d + 1)), &scaled(&y, h(d))) != scaled(&y, -2) {
            return Ok(false);
        }
    }
    Ok(true)
}
