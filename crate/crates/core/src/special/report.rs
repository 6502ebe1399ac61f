use serde::{Deserialize, Serialize};

use super::exponents::{SpecialExponentReport, Verdicts};
use crate::coeff::RatFunc;
use crate::rootsys::Family;

/// JSON form of a [`SpecialExponentReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDoc {
    #[serde(rename = "type")]
    pub family: Family,
    pub rank: usize,
    pub exponents: Vec<Vec<RatFunc>>,
    pub spectral: Vec<Vec<RatFunc>>,
    pub x: Option<RatFunc>,
    pub y: Option<RatFunc>,
    pub a: RatFunc,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub verdicts: Option<Verdicts>,
}

impl From<&SpecialExponentReport> for ReportDoc {
    fn from(r: &SpecialExponentReport) -> Self {
        ReportDoc {
            family: r.spec.family,
            rank: r.spec.rank,
            exponents: r.exponents.iter().map(|m| m.0.clone()).collect(),
            spectral: r.spectral.iter().map(|m| m.0.clone()).collect(),
            x: r.x.clone(),
            y: r.y.clone(),
            a: r.a_value.clone(),
            verdicts: r.verdicts.clone(),
        }
    }
}
