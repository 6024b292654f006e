use serde::Serialize;

use super::{klc_theorem, spectrum, Method, SearchConfig, TheoremSpec};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Match,
    Mismatch,
    BoundHolds,
    BoundViolated,
    NoClaim,
}

impl Status {
    pub fn ok(self) -> bool {
        !matches!(self, Status::Mismatch | Status::BoundViolated)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub sequence: String,
    pub k: usize,
    pub exhaustive: usize,
    pub claim: Option<usize>,
    pub method: Option<Method>,
    pub status: Status,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub field: String,
    pub p: u64,
    pub w: u64,
    pub index_set: String,
    pub k_max: usize,
    pub rows: Vec<VerifyRow>,
    /// Whether all checked sequences share one spectrum; set when the
    /// statement covers more than one sequence.
    pub spectra_identical: Option<bool>,
    pub passed: bool,
}

/// Compare the theorem against exhaustive search for `k = 0..=k_max`
/// (default: the largest weight among the sequences involved).
pub fn verify_theorem(
    spec: &TheoremSpec,
    k_max: Option<usize>,
    cfg: &SearchConfig,
) -> Result<VerificationReport> {
    let seqs = spec.sequences()?;
    let k_max = k_max.unwrap_or_else(|| seqs.iter().map(|s| s.weight()).max().unwrap_or(0));
    let mut rows = Vec::new();
    let mut spectra = Vec::new();
    for seq in &seqs {
        let sp = spectrum(seq, k_max, cfg);
        if let Some(t) = sp.truncated {
            return Err(Error::Budget { required: t.required, budget: t.budget });
        }
        for pt in &sp.points {
            let row = match klc_theorem(spec, pt.k) {
                Ok(claim) => {
                    let status = match claim.method {
                        Method::ClosedForm | Method::Exhaustive => {
                            if claim.lc == pt.lc { Status::Match } else { Status::Mismatch }
                        }
                        Method::LowerBound => {
                            if pt.lc >= claim.lc { Status::BoundHolds } else { Status::BoundViolated }
                        }
                        Method::UpperBound => {
                            if pt.lc <= claim.lc { Status::BoundHolds } else { Status::BoundViolated }
                        }
                    };
                    VerifyRow {
                        sequence: seq.label().to_string(),
                        k: pt.k,
                        exhaustive: pt.lc,
                        claim: Some(claim.lc),
                        method: Some(claim.method),
                        status,
                    }
                }
                Err(Error::NoClaim { .. }) => VerifyRow {
                    sequence: seq.label().to_string(),
                    k: pt.k,
                    exhaustive: pt.lc,
                    claim: None,
                    method: None,
                    status: Status::NoClaim,
                },
                Err(e) => return Err(e),
            };
            rows.push(row);
        }
        spectra.push(sp.values());
    }
    let spectra_identical = (spectra.len() > 1).then(|| spectra.windows(2).all(|w| w[0] == w[1]));
    let passed = rows.iter().all(|r| r.status.ok()) && spectra_identical.unwrap_or(true);
    let params = spec.params();
    Ok(VerificationReport {
        theorem: spec.variant().to_string(),
        field: spec.field().to_string(),
        p: params.p(),
        w: params.w(),
        index_set: spec.index_set().to_string(),
        k_max,
        rows,
        spectra_identical,
        passed,
    })
}
