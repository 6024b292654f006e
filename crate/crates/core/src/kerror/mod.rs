//! k-error linear complexity: exhaustive search, closed-form theorem values
//! and bounds, and comparison of the two.

mod search;
mod theorem;
mod verify;
mod witness;

use std::fmt;

use serde::Serialize;

pub use search::{
    klc_exhaustive, klc_exhaustive_with, pattern_count, spectrum, SearchConfig, Spectrum, Truncation,
    DEFAULT_BUDGET,
};
pub use theorem::{klc_theorem, Field, TheoremSpec, TheoremVariant};
pub use verify::{verify_theorem, Status, VerificationReport, VerifyRow};
pub use witness::{apply_error, fp_error_witness};

/// How a spectrum value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    ClosedForm,
    LowerBound,
    UpperBound,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Exhaustive => "exhaustive",
            Method::ClosedForm => "closed_form",
            Method::LowerBound => "lower_bound",
            Method::UpperBound => "upper_bound",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SpectrumPoint {
    pub k: usize,
    pub lc: usize,
    pub method: Method,
}
