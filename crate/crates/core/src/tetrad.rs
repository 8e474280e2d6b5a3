//! Tetrad systems: the weight-4 words of a doubly even code, split into
//! connected components by shared support.

use crate::discrete::DiscretePoly;
use crate::error::{Error, Result};
use crate::hwe::WordTable;
use crate::gf2::{shell, CodeType, LinearCode, Word};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ComponentLabel {
    /// d_m on m coordinates.
    D(usize),
    E7,
    E8,
    Unknown,
}

impl ComponentLabel {
    pub fn name(&self, m: usize) -> String {
        match self {
            ComponentLabel::D(m) => format!("d{m}"),
            ComponentLabel::E7 => "e7".into(),
            ComponentLabel::E8 => "e8".into(),
            ComponentLabel::Unknown => format!("?{m}"),
        }
    }

    /// Sorting key for the rendered multiset: e8, e7, then d_m by decreasing m.
    fn order(&self) -> (u8, std::cmp::Reverse<usize>) {
        match self {
            ComponentLabel::E8 => (0, std::cmp::Reverse(0)),
            ComponentLabel::E7 => (1, std::cmp::Reverse(0)),
            ComponentLabel::D(m) => (2, std::cmp::Reverse(*m)),
            ComponentLabel::Unknown => (3, std::cmp::Reverse(0)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TetradComponent {
    pub support: Word,
    pub tetrads: Vec<Word>,
    pub label: ComponentLabel,
}

impl TetradComponent {
    pub fn size(&self) -> usize {
        self.support.weight()
    }

    /// η = |tetrads| / m.
    pub fn tetrad_number(&self) -> BigRational {
        BigRational::new(self.tetrads.len().into(), self.size().into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TetradSystem {
    pub length: usize,
    pub tetrads: Vec<Word>,
    pub components: Vec<TetradComponent>,
}

fn label_for(m: usize, count: usize) -> ComponentLabel {
    match (m, count) {
        (7, 7) => ComponentLabel::E7,
        (8, 14) => ComponentLabel::E8,
        (m, c) if m % 2 == 0 && m >= 4 && c == (m / 2) * (m / 2 - 1) / 2 => ComponentLabel::D(m),
        _ => ComponentLabel::Unknown,
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn tetrad_system(code: &LinearCode) -> Result<TetradSystem> {
    if !code.is_doubly_even() {
        return Err(Error::Precondition("tetrad systems need a doubly even code".into()));
    }
    let n = code.length();
    let tetrads = shell(code, 4)?;
    let mut parent: Vec<usize> = (0..n).collect();
    for t in &tetrads {
        let s = t.support();
        for &j in &s[1..] {
            let (a, b) = (find(&mut parent, s[0]), find(&mut parent, j));
            parent[a] = b;
        }
    }
    let mut groups: BTreeMap<usize, Vec<Word>> = BTreeMap::new();
    for t in &tetrads {
        let r = find(&mut parent, t.support()[0]);
        groups.entry(r).or_default().push(*t);
    }
    let mut components: Vec<TetradComponent> = groups
        .into_values()
        .map(|ts| {
            let bits = ts.iter().fold(0u128, |m, t| m | t.bits());
            let support = Word::from_bits(bits, n).expect("support within length");
            let label = label_for(support.weight(), ts.len());
            TetradComponent { support, tetrads: ts, label }
        })
        .collect();
    components.sort_by_key(|c| c.support.bits().trailing_zeros());
    Ok(TetradSystem { length: n, tetrads, components })
}

impl TetradSystem {
    /// Multiset label such as `2e7+d10`; the empty system renders as `∅`.
    pub fn label(&self) -> String {
        if self.components.is_empty() {
            return "∅".into();
        }
        let mut counts: BTreeMap<((u8, std::cmp::Reverse<usize>), String), usize> = BTreeMap::new();
        for c in &self.components {
            *counts.entry((c.label.order(), c.label.name(c.size()))).or_default() += 1;
        }
        counts
            .into_iter()
            .map(|((_, name), k)| if k == 1 { name } else { format!("{k}{name}") })
            .collect::<Vec<_>>()
            .join("+")
    }

    /// Number of tetrads containing coordinate j, for every j.
    pub fn coordinate_counts(&self) -> Vec<usize> {
        let mut v = vec![0; self.length];
        for t in &self.tetrads {
            for j in t.support() {
                v[j] += 1;
            }
        }
        v
    }
}

/// The nine tetrad systems that occur for Type II codes of length 24.
pub const KOCH_LIST: [&str; 9] = ["∅", "6d4", "4d6", "3d8", "2d12", "d24", "2e7+d10", "3e8", "e8+d16"];

pub fn koch_classify(code: &LinearCode) -> Result<String> {
    if code.length() != 24 || code.classify_type() != CodeType::TypeII {
        return Err(Error::Precondition("Koch classification needs a Type II code of length 24".into()));
    }
    let label = tetrad_system(code)?.label();
    if KOCH_LIST.contains(&label.as_str()) {
        Ok(label)
    } else {
        Err(Error::OutsideKochList(label))
    }
}

/// Q_j = n·(−1)^{v_j} − Σ_k (−1)^{v_k}, a degree-1 harmonic.
pub fn q_j(n: usize, j: usize) -> DiscretePoly {
    let mut p = DiscretePoly::zero(n, 1);
    for k in 0..n {
        let c = if k == j { n as i64 - 1 } else { -1 };
        p.add_term(1 << k, BigRational::from_integer(c.into()));
    }
    p
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub tetrads: usize,
    /// Number of tetrads containing each coordinate.
    pub per_coordinate: Vec<usize>,
    /// Every coordinate is covered |C₄|/6 times (or C₄ is empty).
    pub counting: bool,
    /// W_{C,Q_j} = 0 for every coordinate j.
    pub harmonic: bool,
}

impl CoverReport {
    pub fn holds(&self) -> bool {
        self.counting && self.harmonic
    }
}

pub fn cover_report(code: &LinearCode) -> Result<CoverReport> {
    if code.length() != 24 || !code.is_doubly_even() {
        return Err(Error::Precondition("the tetrad cover condition needs a doubly even code of length 24".into()));
    }
    let system = tetrad_system(code)?;
    let per_coordinate = system.coordinate_counts();
    let t = system.tetrads.len();
    let counting = t == 0 || (t % 6 == 0 && per_coordinate.iter().all(|&c| c == t / 6));
    let table = WordTable::from_code(code)?;
    let harmonic = (0..24).all(|j| table.enumerator(&q_j(24, j)).is_zero());
    Ok(CoverReport { tetrads: t, per_coordinate, counting, harmonic })
}

pub fn coordinate_cover_check(code: &LinearCode) -> Result<bool> {
    Ok(cover_report(code)?.holds())
}
