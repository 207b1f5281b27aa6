//! Claim reports: one checked inequality instance together with the data
//! needed to recompute it.

use serde::{Deserialize, Serialize};

use crate::bandlimited::Spectrum;
use crate::circle::Poly;
use crate::rearrange::CosineSeries;
use crate::sets::{ArcUnion, IntervalUnion};
use crate::trig::TrigConfig;

/// Margins at or below this are treated as satisfied unless a caller picks
/// another tolerance.
pub const DEFAULT_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimId {
    LemmaSinCluster,
    LemmaHBound,
    ThmFiniteContinuous,
    ThmMainContinuous,
    ThmDiscrete,
    ThmImprov,
    Montgomery20,
}

impl ClaimId {
    pub const ALL: [ClaimId; 7] = [
        ClaimId::LemmaSinCluster,
        ClaimId::LemmaHBound,
        ClaimId::ThmFiniteContinuous,
        ClaimId::ThmMainContinuous,
        ClaimId::ThmDiscrete,
        ClaimId::ThmImprov,
        ClaimId::Montgomery20,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::LemmaSinCluster => "lemma_sin_cluster",
            ClaimId::LemmaHBound => "lemma_h_bound",
            ClaimId::ThmFiniteContinuous => "thm_finite_continuous",
            ClaimId::ThmMainContinuous => "thm_main_continuous",
            ClaimId::ThmDiscrete => "thm_discrete",
            ClaimId::ThmImprov => "thm_improv",
            ClaimId::Montgomery20 => "montgomery20",
        }
    }
}

impl std::fmt::Display for ClaimId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for ClaimId {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| crate::Error::Config(format!("unknown claim id {s:?}")))
    }
}

/// The instance a report was computed from.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A polynomial on an arc union (`thm_discrete`, `thm_improv`).
    Discrete {
        poly: Poly,
        omega: ArcUnion,
        #[serde(default)]
        override_hypothesis: bool,
    },
    /// A cosine series on an arc union (`montgomery20`).
    Cosine {
        series: CosineSeries,
        omega: ArcUnion,
    },
    /// A sampled spectrum on a time set (`thm_finite_continuous`, `thm_main_continuous`).
    Continuous {
        spectrum: Spectrum,
        tset: IntervalUnion,
        #[serde(default)]
        override_hypothesis: bool,
    },
    /// Endpoints for the h-function bound (`lemma_h_bound`).
    Trig { config: TrigConfig },
    /// A point for the two-residue-class sine bound (`lemma_sin_cluster`).
    SinSum { x: Vec<f64>, grid: usize },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: ClaimId,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs - rhs`; positive means the claimed inequality fails.
    pub margin: f64,
    pub satisfied: bool,
    pub tol: f64,
    pub witness: Witness,
    /// `lhs / rhs`, recorded by the rearrangement checkers.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ratio: Option<f64>,
}

impl ClaimReport {
    pub fn new(claim_id: ClaimId, lhs: f64, rhs: f64, tol: f64, witness: Witness) -> Self {
        let margin = lhs - rhs;
        ClaimReport {
            claim_id,
            lhs,
            rhs,
            margin,
            satisfied: margin <= tol,
            tol,
            witness,
            ratio: None,
        }
    }

    pub fn with_ratio(mut self) -> Self {
        self.ratio = Some(if self.rhs != 0.0 {
            self.lhs / self.rhs
        } else if self.lhs == 0.0 {
            1.0
        } else {
            f64::MAX
        });
        self
    }

    pub fn is_violation(&self) -> bool {
        !self.satisfied
    }
}
