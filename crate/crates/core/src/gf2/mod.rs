//! Binary words, linear codes over GF(2), enumeration and the code catalog.

mod catalog;
mod code;
mod enumerate;
mod format;
mod word;

pub use catalog::{
    catalog, catalog_in, catalog_names, d_code, extended_qr, reed_muller, simplex7, LENGTH24_FIXTURES,
};
pub use code::{CodeType, LinearCode};
pub use enumerate::{
    codewords, fold_codewords, joint_distribution, min_weight, shell, subcode_generated_by_shell,
    weight_distribution, JointDistribution, WeightDistribution, MAX_ENUM_DIM,
};
pub use format::{parse_generator_matrix, render_generator_matrix, CodeRecord, CodeSummary};
pub use word::{Word, MAX_LEN};

