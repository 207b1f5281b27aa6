//! Seeded campaigns over the claim checkers, validity maps over parameter
//! grids, and certificate re-checking.
//!
//! Trial `i` of a campaign with seed `s` draws from stream `i` of the ChaCha
//! generator keyed by `s`, so every trial is reproducible on its own and the
//! report does not depend on the number of worker threads.

use std::f64::consts::{PI, TAU};
use std::time::Instant;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bandlimited::{
    beat_aligned_tset, check_thm_finite, check_thm_main, edge_rectangles, make_spectrum, Spectrum,
};
use crate::circle::{check_thm_discrete, Poly};
use crate::error::{Error, Result};
use crate::numeric::{pairwise_sum, rel_diff};
use crate::rearrange::{check_montgomery20, check_thm_improv, montgomery_embed, CosineSeries};
use crate::report::{ClaimId, ClaimReport, Witness};
use crate::rng::{seeded, LabRng};
use crate::sets::{normalize_intervals, random_union_with, ArcUnion, IntervalUnion};
use crate::trig::{check_lemma_h, check_lemma_sin_cluster, TrigConfig};

/// Agreement required between a certificate and its recomputation.
pub const RECHECK_TOL: f64 = 1e-9;
const MAX_TRIALS: u64 = 10_000_000;
const DEFAULT_NODES: usize = 256;
const DEFAULT_GRID: usize = 2000;
/// Rectangle width of the structured continuous family, as a fraction of `W`.
const EDGE_WIDTH_FRAC: f64 = 0.02;

/// Claim-specific parameters. Ranges are closed `[lo, hi]` and sampled
/// uniformly per trial.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    /// Polynomial degree (`thm_discrete`, `thm_improv`) or cosine order (`montgomery20`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degree: Option<[usize; 2]>,
    /// Half-measure `δ` of the arc union.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<[f64; 2]>,
    /// Largest number of arcs or intervals in a generated set.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_max: Option<usize>,
    /// Interleave the peak-aligned families with the random ones.
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub structured: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bandwidth: Option<[f64; 2]>,
    /// The product `W·T`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wt: Option<[f64; 2]>,
    /// Quadrature nodes per spectrum.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nodes: Option<usize>,
    /// Number of endpoint pairs (`lemma_h_bound`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<[usize; 2]>,
    /// Budget `L` (`lemma_h_bound`, `lemma_sin_cluster`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub length: Option<[f64; 2]>,
    /// Number of variables (`lemma_sin_cluster`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vars: Option<[usize; 2]>,
    /// Scan resolution of the two-class maximum (`lemma_sin_cluster`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub grid: Option<usize>,
    /// Evaluate this instance in every trial instead of generating one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Campaign {
    pub claim_id: ClaimId,
    pub trials: u64,
    pub seed: u64,
    #[serde(default)]
    pub hypothesis_override: bool,
    #[serde(default = "default_tol")]
    pub tol: f64,
    pub params: Params,
}

fn default_tol() -> f64 {
    crate::report::DEFAULT_TOL
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MarginStats {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub campaign: Campaign,
    pub violations: Vec<ClaimReport>,
    pub worst_margin: f64,
    pub stats: MarginStats,
    /// Largest `lhs / rhs` over trials whose checker records a ratio.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub worst_ratio: Option<f64>,
    /// Wall time; 0 unless timing was requested.
    pub runtime_ms: u64,
}

fn check_range<T: PartialOrd + Copy + std::fmt::Debug>(
    name: &str,
    v: Option<[T; 2]>,
    ok: impl Fn(T) -> bool,
) -> Result<[T; 2]> {
    let r = v.ok_or_else(|| Error::Config(format!("params.{name} is required for this claim")))?;
    if !(r[0] <= r[1]) || !ok(r[0]) || !ok(r[1]) {
        return Err(Error::Config(format!(
            "params.{name} = {r:?} is not a valid range"
        )));
    }
    Ok(r)
}

fn positive_finite(x: f64) -> bool {
    x > 0.0 && x.is_finite()
}

fn witness_matches(claim: ClaimId, w: &Witness) -> bool {
    matches!(
        (claim, w),
        (
            ClaimId::ThmDiscrete | ClaimId::ThmImprov,
            Witness::Discrete { .. }
        ) | (ClaimId::Montgomery20, Witness::Cosine { .. })
            | (
                ClaimId::ThmMainContinuous | ClaimId::ThmFiniteContinuous,
                Witness::Continuous { .. }
            )
            | (ClaimId::LemmaHBound, Witness::Trig { .. })
            | (ClaimId::LemmaSinCluster, Witness::SinSum { .. })
    )
}

impl Campaign {
    pub fn from_json(text: &str) -> Result<Self> {
        let c: Campaign = serde_json::from_str(text)
            .map_err(|e| Error::Config(format!("campaign config: {e}")))?;
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 || self.trials > MAX_TRIALS {
            return Err(Error::Config(format!(
                "trials must lie in 1..={MAX_TRIALS}, got {}",
                self.trials
            )));
        }
        if !positive_finite(self.tol) {
            return Err(Error::Config(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        let p = &self.params;
        if let Some(w) = &p.fixed_witness {
            if !witness_matches(self.claim_id, w) {
                return Err(Error::Config(format!(
                    "fixed_witness kind does not fit {}",
                    self.claim_id
                )));
            }
            return Ok(());
        }
        if p.r_max == Some(0) {
            return Err(Error::Config("params.r_max must be at least 1".into()));
        }
        match self.claim_id {
            ClaimId::ThmDiscrete | ClaimId::ThmImprov | ClaimId::Montgomery20 => {
                let deg = check_range("degree", p.degree, |_| true)?;
                let delta = check_range("delta", p.delta, |d| positive_finite(d) && d <= PI)?;
                if self.claim_id == ClaimId::ThmImprov && even_degrees(deg).is_none() {
                    return Err(Error::Config(format!(
                        "params.degree = {deg:?} contains no even degree >= 2"
                    )));
                }
                if self.claim_id == ClaimId::Montgomery20 && deg[0] == 0 {
                    return Err(Error::Config(
                        "params.degree (cosine order) must be at least 1".into(),
                    ));
                }
                let top = if self.claim_id == ClaimId::Montgomery20 {
                    0
                } else {
                    deg[1]
                };
                if !self.hypothesis_override && top as f64 * delta[1] > PI * (1.0 + 1e-12) {
                    return Err(Error::Config(format!(
                        "degree {} with δ = {} breaks n·δ <= π; set hypothesis_override to probe it",
                        deg[1], delta[1]
                    )));
                }
            }
            ClaimId::ThmMainContinuous | ClaimId::ThmFiniteContinuous => {
                check_range("bandwidth", p.bandwidth, positive_finite)?;
                let wt = check_range("wt", p.wt, positive_finite)?;
                if !self.hypothesis_override && wt[1] > 1.0 + 1e-12 {
                    return Err(Error::Config(format!(
                        "W·T up to {} breaks W·T <= 1; set hypothesis_override to probe it",
                        wt[1]
                    )));
                }
                if p.nodes.is_some_and(|n| n < 8) {
                    return Err(Error::Config("params.nodes must be at least 8".into()));
                }
            }
            ClaimId::LemmaHBound => {
                check_range("r", p.r, |r| r >= 1)?;
                check_range("length", p.length, |l: f64| l >= 0.0 && l.is_finite())?;
            }
            ClaimId::LemmaSinCluster => {
                check_range("vars", p.vars, |n| n >= 1)?;
                check_range("length", p.length, f64::is_finite)?;
                if p.grid.is_some_and(|g| g < 100) {
                    return Err(Error::Config("params.grid must be at least 100".into()));
                }
            }
        }
        Ok(())
    }

    fn r_max(&self) -> usize {
        self.params.r_max.unwrap_or(1)
    }

    fn nodes(&self) -> usize {
        self.params.nodes.unwrap_or(DEFAULT_NODES)
    }
}

fn even_degrees(deg: [usize; 2]) -> Option<(usize, usize)> {
    let lo = deg[0].max(2).div_ceil(2);
    let hi = deg[1] / 2;
    (lo <= hi).then_some((lo, hi))
}

fn draw_usize(rng: &mut LabRng, r: [usize; 2]) -> usize {
    rng.gen_range(r[0]..=r[1])
}

fn draw_f64(rng: &mut LabRng, r: [f64; 2]) -> f64 {
    if r[0] == r[1] {
        r[0]
    } else {
        rng.gen_range(r[0]..=r[1])
    }
}

fn random_complex(rng: &mut LabRng) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// `r` random arcs of total measure `2δ`, randomly rotated.
fn random_arcs(rng: &mut LabRng, delta: f64, r_max: usize) -> Result<ArcUnion> {
    if delta >= PI * (1.0 - 1e-12) {
        return Ok(ArcUnion::full_circle());
    }
    let r = rng.gen_range(1..=r_max);
    let u = random_union_with(rng, r, 2.0 * delta, (0.0, TAU))
        .or_else(|_| random_union_with(rng, 1, 2.0 * delta, (0.0, TAU)))?;
    let theta = rng.gen_range(0.0..TAU);
    Ok(ArcUnion::new(u.parts())?.rotated(theta))
}

/// `m` arcs of half-length `δ/m` centred on the peaks `2πj/n` of `|1 + z^n|`.
fn peak_arcs(n: usize, delta: f64, m: usize) -> Result<ArcUnion> {
    let half = delta / m as f64;
    let raw: Vec<(f64, f64)> = (0..m)
        .map(|j| {
            let c = TAU * j as f64 / n.max(1) as f64;
            (c - half, c + half)
        })
        .collect();
    ArcUnion::new(&raw)
}

fn one_plus_zn(n: usize) -> Poly {
    let mut c = vec![Complex64::new(0.0, 0.0); n + 1];
    c[0] += 1.0;
    c[n] += 1.0;
    Poly::new(c)
}

fn random_cosine(rng: &mut LabRng, order: usize) -> Result<CosineSeries> {
    CosineSeries::new((0..=order).map(|_| rng.gen_range(-1.0..1.0)).collect())
}

/// A smooth random spectrum: low-order profile times a random modulation.
fn random_spectrum(rng: &mut LabRng, w: f64, n: usize) -> Result<Spectrum> {
    let c: Vec<Complex64> = (0..4).map(|_| random_complex(rng)).collect();
    let shift = rng.gen_range(-3.0..3.0) / w;
    make_spectrum(
        w,
        |x| {
            let y = x / w;
            (c[0] + c[1] * y + c[2] * (3.0 * y).cos() + c[3] * y * y)
                * Complex64::from_polar(1.0, TAU * shift * x)
        },
        n,
    )
}

fn scale_to_measure(u: &IntervalUnion, t: f64) -> Result<IntervalUnion> {
    let s = t / u.measure();
    let raw: Vec<(f64, f64)> = u.parts().iter().map(|&(a, b)| (a * s, b * s)).collect();
    normalize_intervals(&raw)
}

/// Sub-level set of a random trigonometric sum, sampled and rescaled to
/// measure `t`.
fn level_set(rng: &mut LabRng, t: f64, r_max: usize) -> Result<IntervalUnion> {
    let freqs: Vec<(f64, f64)> = (0..3)
        .map(|_| {
            (
                rng.gen_range(0.5..(1.0 + r_max as f64)),
                rng.gen_range(0.0..TAU),
            )
        })
        .collect();
    let level = rng.gen_range(-0.5..0.5);
    let samples: Vec<(f64, bool)> = (0..=256)
        .map(|i| {
            let x = -1.0 + 2.0 * i as f64 / 256.0;
            let v: f64 = freqs
                .iter()
                .map(|&(f, ph)| (PI * f * x + ph).cos())
                .sum::<f64>()
                / 3.0;
            (x, v > level)
        })
        .collect();
    let mut u = crate::sets::from_indicator(&samples)?;
    if u.len() > r_max {
        // keep the r_max longest pieces
        let mut parts = u.parts().to_vec();
        parts.sort_by(|a, b| (b.1 - b.0).total_cmp(&(a.1 - a.0)));
        parts.truncate(r_max);
        u = normalize_intervals(&parts)?;
    }
    if u.is_empty() {
        return Ok(IntervalUnion::centered(t));
    }
    scale_to_measure(&u, t)
}

fn generate(c: &Campaign, trial: u64) -> Result<ClaimReport> {
    let p = &c.params;
    if let Some(w) = &p.fixed_witness {
        return evaluate_witness(c.claim_id, w, c.tol);
    }
    let mut rng = seeded(c.seed, trial);
    let structured = p.structured && trial.is_multiple_of(2);
    let over = c.hypothesis_override;
    let r_max = c.r_max();
    match c.claim_id {
        ClaimId::ThmDiscrete => {
            let n = draw_usize(&mut rng, p.degree.unwrap());
            let delta = draw_f64(&mut rng, p.delta.unwrap());
            if structured {
                let omega = peak_arcs(n, delta, n.clamp(1, r_max))?;
                check_thm_discrete(&one_plus_zn(n), &omega, c.tol, over)
            } else {
                let poly =
                    Poly::with_trailing_zeros((0..=n).map(|_| random_complex(&mut rng)).collect());
                let omega = random_arcs(&mut rng, delta, r_max)?;
                check_thm_discrete(&poly, &omega, c.tol, over)
            }
        }
        ClaimId::ThmImprov => {
            let (lo, hi) = even_degrees(p.degree.unwrap()).unwrap();
            let k = rng.gen_range(lo..=hi);
            let delta = draw_f64(&mut rng, p.delta.unwrap());
            if structured {
                let omega = peak_arcs(2 * k, delta, (2 * k).min(r_max))?;
                check_thm_improv(&one_plus_zn(2 * k), &omega, c.tol, over)
            } else {
                let poly = montgomery_embed(&random_cosine(&mut rng, k)?);
                let omega = random_arcs(&mut rng, delta, r_max)?;
                check_thm_improv(&poly, &omega, c.tol, over)
            }
        }
        ClaimId::Montgomery20 => {
            let k = draw_usize(&mut rng, p.degree.unwrap());
            let delta = draw_f64(&mut rng, p.delta.unwrap());
            if structured {
                let mut a = vec![0.0; k + 1];
                a[k] = 1.0;
                let omega = peak_arcs(2 * k, delta, (2 * k).min(r_max))?;
                check_montgomery20(&CosineSeries::new(a)?, &omega, c.tol)
            } else {
                let f = random_cosine(&mut rng, k)?;
                let omega = random_arcs(&mut rng, delta, r_max)?;
                check_montgomery20(&f, &omega, c.tol)
            }
        }
        ClaimId::ThmMainContinuous | ClaimId::ThmFiniteContinuous => {
            let w = draw_f64(&mut rng, p.bandwidth.unwrap());
            let t = draw_f64(&mut rng, p.wt.unwrap()) / w;
            let n = c.nodes();
            let (s, tset) = if structured {
                let width = EDGE_WIDTH_FRAC * w;
                (
                    edge_rectangles(w, width, n)?,
                    beat_aligned_tset(w, width, t, r_max.min(2))?,
                )
            } else {
                let s = random_spectrum(&mut rng, w, n)?;
                let tset = if c.claim_id == ClaimId::ThmMainContinuous {
                    level_set(&mut rng, t, r_max)?
                } else {
                    let r = rng.gen_range(1..=r_max);
                    let half = t + 2.0 / w;
                    random_union_with(&mut rng, r, t, (-half, half))?
                };
                (s, tset)
            };
            if c.claim_id == ClaimId::ThmMainContinuous {
                check_thm_main(&s, &tset, c.tol, over)
            } else {
                check_thm_finite(&s, &tset, c.tol, over)
            }
        }
        ClaimId::LemmaHBound => {
            let r = draw_usize(&mut rng, p.r.unwrap());
            let length = draw_f64(&mut rng, p.length.unwrap());
            let config = if structured {
                let a0 = rng.gen_range(0.0..TAU);
                TrigConfig::new(vec![a0; r], vec![a0 + length / r as f64; r])?
            } else {
                let a: Vec<f64> = (0..r).map(|_| rng.gen_range(0.0..TAU)).collect();
                let w: Vec<f64> = (0..r).map(|_| rng.gen_range(0.05..1.0)).collect();
                let ws: f64 = w.iter().sum();
                let mut b: Vec<f64> = a.iter().zip(&w).map(|(a, w)| a + length * w / ws).collect();
                // close the budget exactly on the last pair
                let used: f64 = (0..r - 1).map(|k| b[k] - a[k]).sum();
                b[r - 1] = a[r - 1] + (length - used);
                TrigConfig::new(a, b)?
            };
            Ok(check_lemma_h(&config, c.tol))
        }
        ClaimId::LemmaSinCluster => {
            let n = draw_usize(&mut rng, p.vars.unwrap());
            let length = draw_f64(&mut rng, p.length.unwrap());
            let grid = p.grid.unwrap_or(DEFAULT_GRID);
            let x: Vec<f64> = if structured {
                let k = rng.gen_range(0..n);
                let y = rng.gen_range(0.0..TAU);
                let rest = (length - k as f64 * y) / (n - k) as f64;
                (0..n).map(|i| if i < k { y } else { rest }).collect()
            } else {
                let u: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..TAU)).collect();
                let shift = (length - u.iter().sum::<f64>()) / n as f64;
                u.iter().map(|v| v + shift).collect()
            };
            check_lemma_sin_cluster(&x, grid, c.tol)
        }
    }
}

fn summarize(campaign: &Campaign, reports: Vec<ClaimReport>) -> CampaignReport {
    let margins: Vec<f64> = reports.iter().map(|r| r.margin).collect();
    let min = margins.iter().copied().fold(f64::INFINITY, f64::min);
    let max = margins.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let mean = pairwise_sum(&margins) / margins.len() as f64;
    let worst_ratio = reports
        .iter()
        .filter_map(|r| r.ratio)
        .fold(None, |acc: Option<f64>, v| {
            Some(acc.map_or(v, |a| a.max(v)))
        });
    CampaignReport {
        campaign: campaign.clone(),
        violations: reports
            .into_iter()
            .filter(ClaimReport::is_violation)
            .collect(),
        worst_margin: max,
        stats: MarginStats { min, max, mean },
        worst_ratio,
        runtime_ms: 0,
    }
}

/// Runs every trial and gathers the violations in trial order.
pub fn run_campaign(c: &Campaign) -> Result<CampaignReport> {
    c.validate()?;
    let reports: Vec<ClaimReport> = (0..c.trials)
        .into_par_iter()
        .map(|i| {
            generate(c, i).map_err(|e| Error::Trial {
                trial: i,
                source: Box::new(e),
            })
        })
        .collect::<Result<_>>()?;
    Ok(summarize(c, reports))
}

/// As [`run_campaign`], with `runtime_ms` filled in. Timed reports are not
/// byte-reproducible.
pub fn run_campaign_timed(c: &Campaign) -> Result<CampaignReport> {
    let start = Instant::now();
    let mut report = run_campaign(c)?;
    report.runtime_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

/// Dispatches a witness to the checker of `claim`.
pub fn evaluate_witness(claim: ClaimId, witness: &Witness, tol: f64) -> Result<ClaimReport> {
    match (claim, witness) {
        (
            ClaimId::ThmDiscrete,
            Witness::Discrete {
                poly,
                omega,
                override_hypothesis,
            },
        ) => check_thm_discrete(poly, omega, tol, *override_hypothesis),
        (
            ClaimId::ThmImprov,
            Witness::Discrete {
                poly,
                omega,
                override_hypothesis,
            },
        ) => check_thm_improv(poly, omega, tol, *override_hypothesis),
        (ClaimId::Montgomery20, Witness::Cosine { series, omega }) => {
            check_montgomery20(series, omega, tol)
        }
        (
            ClaimId::ThmMainContinuous,
            Witness::Continuous {
                spectrum,
                tset,
                override_hypothesis,
            },
        ) => check_thm_main(spectrum, tset, tol, *override_hypothesis),
        (
            ClaimId::ThmFiniteContinuous,
            Witness::Continuous {
                spectrum,
                tset,
                override_hypothesis,
            },
        ) => check_thm_finite(spectrum, tset, tol, *override_hypothesis),
        (ClaimId::LemmaHBound, Witness::Trig { config }) => Ok(check_lemma_h(config, tol)),
        (ClaimId::LemmaSinCluster, Witness::SinSum { x, grid }) => {
            check_lemma_sin_cluster(x, *grid, tol)
        }
        _ => Err(Error::Config(format!(
            "witness kind does not fit claim {claim}"
        ))),
    }
}

fn agrees(a: f64, b: f64) -> bool {
    (a - b).abs() <= RECHECK_TOL || rel_diff(a, b, 0.0) <= RECHECK_TOL
}

/// Recomputes a certificate from its witness. True iff `lhs` and `rhs` agree
/// with the recorded values to `1e-9` (absolute or relative), the recorded
/// margin is `lhs - rhs`, and the satisfied flag matches the margin.
pub fn recheck(cert: &ClaimReport) -> Result<bool> {
    if !positive_finite(cert.tol) {
        return Err(Error::Config(format!(
            "certificate tol must be positive, got {}",
            cert.tol
        )));
    }
    let fresh = evaluate_witness(cert.claim_id, &cert.witness, cert.tol)?;
    let consistent =
        agrees(cert.margin, cert.lhs - cert.rhs) && cert.satisfied == (cert.margin <= cert.tol);
    Ok(consistent && agrees(fresh.lhs, cert.lhs) && agrees(fresh.rhs, cert.rhs))
}

/// One grid cell: the two swept parameters, fixed for every trial.
///
/// | claim | param1 | param2 |
/// |---|---|---|
/// | `thm_discrete`, `thm_improv` | degree | δ |
/// | `montgomery20` | cosine order | δ |
/// | `thm_*_continuous` | W | T |
/// | `lemma_h_bound` | r | L |
/// | `lemma_sin_cluster` | variables | L |
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MapCell(pub f64, pub f64);

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapConfig {
    pub template: Campaign,
    pub cells: Vec<MapCell>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MapRow {
    pub claim: ClaimId,
    pub param1: f64,
    pub param2: f64,
    pub trials: u64,
    pub violations: usize,
    pub worst_margin: f64,
    pub runtime_ms: u64,
}

pub const MAP_CSV_HEADER: &str = "claim,param1,param2,trials,violations,worst_margin,runtime_ms";

fn as_count(x: f64, name: &str) -> Result<usize> {
    if x >= 0.0 && x.fract() == 0.0 && x < 1e9 {
        Ok(x as usize)
    } else {
        Err(Error::Config(format!(
            "{name} must be a nonnegative integer, got {x}"
        )))
    }
}

/// The template with both swept parameters pinned to the cell.
pub fn cell_campaign(template: &Campaign, cell: MapCell) -> Result<Campaign> {
    let mut c = template.clone();
    let MapCell(p1, p2) = cell;
    let p = &mut c.params;
    match c.claim_id {
        ClaimId::ThmDiscrete | ClaimId::ThmImprov | ClaimId::Montgomery20 => {
            let n = as_count(p1, "degree")?;
            p.degree = Some([n, n]);
            p.delta = Some([p2, p2]);
        }
        ClaimId::ThmMainContinuous | ClaimId::ThmFiniteContinuous => {
            p.bandwidth = Some([p1, p1]);
            p.wt = Some([p1 * p2, p1 * p2]);
        }
        ClaimId::LemmaHBound => {
            let r = as_count(p1, "r")?;
            p.r = Some([r, r]);
            p.length = Some([p2, p2]);
        }
        ClaimId::LemmaSinCluster => {
            let n = as_count(p1, "vars")?;
            p.vars = Some([n, n]);
            p.length = Some([p2, p2]);
        }
    }
    c.validate()?;
    Ok(c)
}

/// One campaign per cell, in cell order.
pub fn validity_map(template: &Campaign, cells: &[MapCell], timing: bool) -> Result<Vec<MapRow>> {
    if cells.is_empty() {
        return Err(Error::Config("validity map needs at least one cell".into()));
    }
    cells
        .iter()
        .map(|&cell| {
            let c = cell_campaign(template, cell)?;
            let rep = if timing {
                run_campaign_timed(&c)?
            } else {
                run_campaign(&c)?
            };
            Ok(MapRow {
                claim: c.claim_id,
                param1: cell.0,
                param2: cell.1,
                trials: c.trials,
                violations: rep.violations.len(),
                worst_margin: rep.worst_margin,
                runtime_ms: rep.runtime_ms,
            })
        })
        .collect()
}

/// Shortest round-trip decimal, as in the JSON output; non-finite values
/// are left empty.
fn fmt_f64(x: f64) -> String {
    if x.is_finite() {
        serde_json::to_string(&x).expect("finite f64 serializes")
    } else {
        String::new()
    }
}

pub fn map_to_csv(rows: &[MapRow]) -> String {
    let mut out = String::from(MAP_CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{}\n",
            r.claim,
            fmt_f64(r.param1),
            fmt_f64(r.param2),
            r.trials,
            r.violations,
            fmt_f64(r.worst_margin),
            r.runtime_ms
        ));
    }
    out
}
