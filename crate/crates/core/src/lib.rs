//! Polynomial quotients modulo `p`, the binary and `p`-ary sequences built
//! from their cyclotomic classes, and the linear and k-error linear
//! complexity of those sequences.

pub mod cli;
pub mod error;
pub mod kerror;
pub mod lincomp;
pub mod polyring;
pub mod quotients;
pub mod seqgen;

pub use error::{Error, Result};
pub use kerror::{
    klc_exhaustive, klc_theorem, spectrum, verify_theorem, Method, SearchConfig, SpectrumPoint, TheoremSpec,
    TheoremVariant,
};
pub use lincomp::{lc_berlekamp_massey, lc_bivariate, lc_f2_structured, lc_fp_multiplicity, lc_gcd};
pub use quotients::{ClassSet, PrimeParams};
pub use seqgen::PeriodicSequence;
