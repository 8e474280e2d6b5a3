//! JSON output records. Field names are camelCase; exact rationals are strings.

use harmonic_codes::config::GenerationReport;
use harmonic_codes::designs::ShellReport;
use harmonic_codes::gf2::{CodeRecord, CodeSummary};
use harmonic_codes::poly::PolyRecord;
use harmonic_codes::tetrad::CoverReport;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CodeInfo {
    #[serde(flatten)]
    pub summary: CodeSummary,
    pub enumerator: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct MacWilliamsOut {
    pub holds: bool,
    pub transform: PolyRecord,
    pub dual_enumerator: PolyRecord,
    pub diff: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ZonalOut {
    pub degree: usize,
    pub cbar: String,
    pub enumerator: PolyRecord,
    pub vanishes: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HweCheckOut {
    pub degree: usize,
    pub cbar: String,
    pub holds: bool,
    pub diff: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BachocOut {
    pub degree: usize,
    pub cbar: String,
    pub psi_index: usize,
    pub coefficients: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DesignCheckOut {
    pub weight: usize,
    pub t: usize,
    pub blocks: usize,
    pub lambda: Option<u64>,
    pub harmonic: bool,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DesignReportOut {
    pub sigma: usize,
    pub extremal: bool,
    pub shells: Vec<ShellReport>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComponentOut {
    pub label: String,
    pub size: usize,
    pub tetrads: usize,
    pub tetrad_number: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TetradOut {
    pub label: String,
    pub in_koch_list: bool,
    pub components: Vec<ComponentOut>,
}

pub type CoverOut = CoverReport;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DeterminantCheck {
    pub s: usize,
    pub determinant: String,
    pub closed_form: String,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ConfigVerifyOut {
    pub n: usize,
    pub delta: usize,
    pub a_delta: String,
    pub numerator: String,
    pub integer_roots: Vec<String>,
    pub checks: Vec<DeterminantCheck>,
    pub verified: bool,
}

pub type GeneratedOut = GenerationReport;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GleasonBasisOut {
    pub phi: String,
    pub xi: String,
    pub delta: String,
    pub x2_plus_y2: String,
    pub psi: Vec<String>,
    pub identities_hold: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TypeITermOut {
    pub a: usize,
    pub b: usize,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "group", rename_all = "camelCase")]
pub enum GleasonDecomposeOut {
    /// W = Σ a_k φ^{m−3k} ξ^k.
    #[serde(rename = "II")]
    TypeII { coefficients: Vec<String> },
    /// W = Σ c (x²+y²)^a δ^b.
    #[serde(rename = "I")]
    TypeI { terms: Vec<TypeITermOut> },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ThetaOut {
    pub order: usize,
    /// Coefficients of q^0 … q^order; present when every exponent is integral.
    pub coefficients: Option<Vec<String>>,
    /// Coefficients of q^{m/4}, m = 0 … 4·order.
    pub quarter_coefficients: Vec<String>,
    pub e4_delta: Option<Vec<String>>,
}

pub type DualOut = CodeRecord;
