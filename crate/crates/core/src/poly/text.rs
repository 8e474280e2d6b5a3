//! Text form of rational homogeneous polynomials: terms `c * x^a y^b` joined by
//! ` + `, where c is an exact rational such as `-42` or `3/5`.

use super::hpoly::{HPoly, RatPoly};
use crate::error::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn render(p: &RatPoly) -> String {
    let n = p.degree();
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(w, c)| format!("{c} * x^{} y^{w}", n - w))
        .collect();
    if terms.is_empty() {
        format!("0 * x^{n} y^0")
    } else {
        terms.join(" + ")
    }
}

fn bad(msg: String) -> Error {
    Error::Parse { line: 1, msg }
}

pub fn parse(s: &str) -> Result<RatPoly> {
    let mut terms: Vec<(BigRational, usize, usize)> = Vec::new();
    for t in s.split(" + ") {
        let t = t.trim();
        let (c, mono) = t.split_once('*').ok_or_else(|| bad(format!("term {t:?} lacks `*`")))?;
        let c: BigRational = c.trim().parse().map_err(|_| bad(format!("bad coefficient in {t:?}")))?;
        let mut parts = mono.split_whitespace();
        let mut exp = |var: &str| -> Result<usize> {
            let p = parts.next().ok_or_else(|| bad(format!("term {t:?} lacks {var}^k")))?;
            p.strip_prefix(var)
                .and_then(|r| r.strip_prefix('^'))
                .and_then(|e| e.parse().ok())
                .ok_or_else(|| bad(format!("bad factor {p:?} in {t:?}")))
        };
        let a = exp("x")?;
        let b = exp("y")?;
        if parts.next().is_some() {
            return Err(bad(format!("trailing input in {t:?}")));
        }
        terms.push((c, a, b));
    }
    let n = terms[0].1 + terms[0].2;
    if terms.iter().any(|(_, a, b)| a + b != n) {
        return Err(bad("terms of different degrees".into()));
    }
    let mut p = HPoly::zero(n);
    for (c, _, b) in terms {
        p = &p + &HPoly::monomial(n, b, c);
    }
    Ok(p)
}

/// Human-oriented form such as `x^8 + 14x^4y^4 + y^8`.
pub fn pretty(p: &RatPoly) -> String {
    let n = p.degree();
    let mut out = String::new();
    for (w, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigRational::zero();
        let mag = if neg { -c.clone() } else { c.clone() };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match (n - w, w) {
            (0, 0) => String::new(),
            (a, b) => {
                let f = |v: &str, e: usize| match e {
                    0 => String::new(),
                    1 => v.to_string(),
                    e => format!("{v}^{e}"),
                };
                format!("{}{}", f("x", a), f("y", b))
            }
        };
        if mag.is_one() && !mono.is_empty() {
            out.push_str(&mono);
        } else if mag.is_integer() || mono.is_empty() {
            out.push_str(&format!("{mag}{mono}"));
        } else {
            out.push_str(&format!("({mag}){mono}"));
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

/// Inverse of [`pretty`] for nonzero polynomials; spaces are ignored.
pub fn parse_pretty(s: &str) -> Result<RatPoly> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<(BigRational, usize, usize)> = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let neg = rest.starts_with('-');
        if neg || rest.starts_with('+') {
            rest = &rest[1..];
        } else if !terms.is_empty() {
            return Err(bad(format!("expected + or - before {rest:?}")));
        }
        let end = rest[1.min(rest.len())..].find(['+', '-']).map_or(rest.len(), |i| i + 1);
        let (t, tail) = rest.split_at(end);
        rest = tail;
        let (num, mono) = match t.strip_prefix('(') {
            Some(inner) => inner.split_once(')').ok_or_else(|| bad(format!("unclosed ( in {t:?}")))?,
            None => t.split_at(t.find(['x', 'y']).unwrap_or(t.len())),
        };
        let mut c: BigRational = if num.is_empty() {
            BigRational::one()
        } else {
            num.parse().map_err(|_| bad(format!("bad coefficient in {t:?}")))?
        };
        if neg {
            c = -c;
        }
        let (mut a, mut b, mut m) = (0, 0, mono);
        for (var, slot) in [('x', &mut a), ('y', &mut b)] {
            if let Some(r) = m.strip_prefix(var) {
                let digits = r.strip_prefix('^').map(|e| e.find(|ch: char| !ch.is_ascii_digit()).map_or(e, |i| &e[..i]));
                *slot = match digits {
                    Some(d) => d.parse().map_err(|_| bad(format!("bad exponent in {t:?}")))?,
                    None => 1,
                };
                m = &r[digits.map_or(0, |d| d.len() + 1)..];
            }
        }
        if !m.is_empty() {
            return Err(bad(format!("trailing input {m:?} in {t:?}")));
        }
        terms.push((c, a, b));
    }
    let n = terms.first().map(|t| t.1 + t.2).ok_or_else(|| bad("empty polynomial".into()))?;
    if terms.iter().any(|(_, a, b)| a + b != n) {
        return Err(bad("terms of different degrees".into()));
    }
    let mut p = HPoly::zero(n);
    for (c, _, b) in terms {
        p = &p + &HPoly::monomial(n, b, c);
    }
    Ok(p)
}
