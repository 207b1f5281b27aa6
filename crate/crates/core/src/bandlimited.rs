//! Bandlimited functions represented by their spectra on a Gauss–Legendre
//! grid over `[-W/2, W/2]`.
//!
//! With `f(t) = ∫ f̂(ω) e^{2πiωt} dω`, the energy of `f` on a time set `𝒯` is
//! the quadratic form `∫∫ f̂(ω) conj(f̂(η)) K(ω - η) dω dη` with
//! `K(u) = ∫_𝒯 e^{2πiut} dt`. The kernel is exact for finite interval unions;
//! the only approximation is the quadrature in frequency.

use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{gauss_legendre_on, pairwise_sum, sinc};
use crate::report::{ClaimId, ClaimReport, Witness};
use crate::sets::IntervalUnion;

/// Quadrature samples of `f̂` on `[-W/2, W/2]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawSpectrum", into = "RawSpectrum")]
pub struct Spectrum {
    bandwidth: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    values: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct RawSpectrum {
    #[serde(rename = "W")]
    w: f64,
    nodes: Vec<f64>,
    weights: Vec<f64>,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl TryFrom<RawSpectrum> for Spectrum {
    type Error = Error;
    fn try_from(raw: RawSpectrum) -> Result<Self> {
        if raw.re.len() != raw.im.len() {
            return Err(Error::MalformedInput(
                "spectrum re/im lengths differ".into(),
            ));
        }
        let values = raw
            .re
            .iter()
            .zip(&raw.im)
            .map(|(&r, &i)| Complex64::new(r, i))
            .collect();
        Spectrum::from_parts(raw.w, raw.nodes, raw.weights, values)
    }
}

impl From<Spectrum> for RawSpectrum {
    fn from(s: Spectrum) -> Self {
        RawSpectrum {
            w: s.bandwidth,
            re: s.values.iter().map(|c| c.re).collect(),
            im: s.values.iter().map(|c| c.im).collect(),
            nodes: s.nodes,
            weights: s.weights,
        }
    }
}

impl Spectrum {
    /// Validates and assembles a spectrum from explicit samples.
    pub fn from_parts(
        bandwidth: f64,
        nodes: Vec<f64>,
        weights: Vec<f64>,
        values: Vec<Complex64>,
    ) -> Result<Self> {
        if !(bandwidth > 0.0) || !bandwidth.is_finite() {
            return Err(Error::Domain(format!(
                "bandwidth must be positive, got {bandwidth}"
            )));
        }
        if nodes.is_empty() || nodes.len() != weights.len() || nodes.len() != values.len() {
            return Err(Error::MalformedInput(format!(
                "spectrum needs equally many nodes, weights and values (got {}, {}, {})",
                nodes.len(),
                weights.len(),
                values.len()
            )));
        }
        let half = 0.5 * bandwidth;
        let slack = 1e-12 * bandwidth;
        if nodes
            .iter()
            .any(|&x| !x.is_finite() || x < -half - slack || x > half + slack)
            || nodes.windows(2).any(|p| !(p[0] < p[1]))
        {
            return Err(Error::MalformedInput(
                "spectrum nodes must be strictly increasing inside [-W/2, W/2]".into(),
            ));
        }
        if weights.iter().any(|&w| !(w > 0.0) || !w.is_finite()) {
            return Err(Error::MalformedInput(
                "quadrature weights must be positive".into(),
            ));
        }
        let wsum: f64 = weights.iter().sum();
        if (wsum - bandwidth).abs() > 1e-12 * bandwidth {
            return Err(Error::MalformedInput(format!(
                "quadrature weights sum to {wsum}, expected W = {bandwidth}"
            )));
        }
        if values
            .iter()
            .any(|v| !v.re.is_finite() || !v.im.is_finite())
        {
            return Err(Error::MalformedInput("non-finite spectrum value".into()));
        }
        Ok(Spectrum {
            bandwidth,
            nodes,
            weights,
            values,
        })
    }

    pub fn bandwidth(&self) -> f64 {
        self.bandwidth
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Same grid, new values.
    pub fn with_values(&self, values: Vec<Complex64>) -> Result<Self> {
        Spectrum::from_parts(
            self.bandwidth,
            self.nodes.clone(),
            self.weights.clone(),
            values,
        )
    }

    /// `f(t) = Σ_j w_j f̂(ω_j) e^{2πiω_j t}`.
    pub fn eval_time(&self, t: f64) -> Complex64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .zip(&self.values)
            .map(|((&x, &w), &v)| v * w * Complex64::from_polar(1.0, 2.0 * PI * x * t))
            .sum()
    }
}

fn check_band(bandwidth: f64, n: usize) -> Result<()> {
    if !(bandwidth > 0.0) || !bandwidth.is_finite() {
        return Err(Error::Domain(format!(
            "bandwidth must be positive, got {bandwidth}"
        )));
    }
    if n < 2 {
        return Err(Error::Domain(format!(
            "need at least 2 quadrature nodes, got {n}"
        )));
    }
    Ok(())
}

/// Samples `profile` at the `n`-point Gauss–Legendre nodes of `[-W/2, W/2]`.
pub fn make_spectrum<F>(bandwidth: f64, profile: F, n: usize) -> Result<Spectrum>
where
    F: Fn(f64) -> Complex64,
{
    check_band(bandwidth, n)?;
    let (nodes, weights) = gauss_legendre_on(n, -0.5 * bandwidth, 0.5 * bandwidth);
    let values = nodes.iter().map(|&x| profile(x)).collect();
    Spectrum::from_parts(bandwidth, nodes, weights, values)
}

/// Composite Gauss–Legendre sampling with panel edges at `breaks`, for
/// profiles that are smooth only between those points. About `n` nodes in
/// total are split across panels in proportion to their length, at least two
/// per panel.
pub fn make_spectrum_panels<F>(
    bandwidth: f64,
    breaks: &[f64],
    profile: F,
    n: usize,
) -> Result<Spectrum>
where
    F: Fn(f64) -> Complex64,
{
    check_band(bandwidth, n)?;
    let half = 0.5 * bandwidth;
    let mut edges = vec![-half];
    let mut inner: Vec<f64> = breaks.to_vec();
    inner.sort_by(f64::total_cmp);
    for b in inner {
        if !(b > -half && b < half) {
            return Err(Error::Domain(format!(
                "panel break {b} outside (-W/2, W/2)"
            )));
        }
        if b > *edges.last().unwrap() {
            edges.push(b);
        }
    }
    edges.push(half);
    let panels = edges.len() - 1;
    let share: Vec<f64> = edges
        .windows(2)
        .map(|e| n as f64 * (e[1] - e[0]) / bandwidth)
        .collect();
    let mut counts: Vec<usize> = share.iter().map(|&s| (s.floor() as usize).max(2)).collect();
    let mut assigned: usize = counts.iter().sum();
    // largest remainder, deterministic by panel index
    let mut order: Vec<usize> = (0..panels).collect();
    order.sort_by(|&i, &j| {
        (share[j] - share[j].floor())
            .total_cmp(&(share[i] - share[i].floor()))
            .then(i.cmp(&j))
    });
    let mut k = 0;
    while assigned < n {
        counts[order[k % panels]] += 1;
        assigned += 1;
        k += 1;
    }
    let mut nodes = Vec::with_capacity(assigned);
    let mut weights = Vec::with_capacity(assigned);
    for (e, &c) in edges.windows(2).zip(&counts) {
        let (x, w) = gauss_legendre_on(c, e[0], e[1]);
        nodes.extend(x);
        weights.extend(w);
    }
    let values = nodes.iter().map(|&x| profile(x)).collect();
    Spectrum::from_parts(bandwidth, nodes, weights, values)
}

/// `K(u) = Σ_p ∫_{a_p}^{b_p} e^{2πiut} dt`.
pub fn time_kernel(u: f64, tset: &IntervalUnion) -> Complex64 {
    tset.parts()
        .iter()
        .map(|&(a, b)| {
            let len = b - a;
            Complex64::from_polar(len * sinc(PI * u * len), PI * u * (a + b))
        })
        .sum()
}

/// `Σ_j w_j |f̂(ω_j)|²`, the Plancherel norm of the sampled function.
pub fn norm_sq(s: &Spectrum) -> f64 {
    s.weights
        .iter()
        .zip(&s.values)
        .map(|(&w, v)| w * v.norm_sqr())
        .sum()
}

/// `∫_𝒯 |f(t)|² dt` as the quadratic form of the spectrum samples.
pub fn time_energy(s: &Spectrum, tset: &IntervalUnion) -> f64 {
    if tset.is_empty() {
        return 0.0;
    }
    let wv: Vec<Complex64> = s
        .weights
        .iter()
        .zip(&s.values)
        .map(|(&w, &v)| v * w)
        .collect();
    let rows: Vec<Complex64> = (0..s.len())
        .into_par_iter()
        .map(|j| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (x, &node) in wv.iter().zip(&s.nodes) {
                acc += x.conj() * time_kernel(s.nodes[j] - node, tset);
            }
            wv[j] * acc
        })
        .collect();
    let re: Vec<f64> = rows.iter().map(|c| c.re).collect();
    let energy = pairwise_sum(&re);
    debug_assert!({
        let im: Vec<f64> = rows.iter().map(|c| c.im).collect();
        pairwise_sum(&im).abs() <= 1e-8 * norm_sq(s).max(f64::MIN_POSITIVE)
    });
    energy
}

/// Fraction of the energy inside `tset`.
pub fn concentration(s: &Spectrum, tset: &IntervalUnion) -> Result<f64> {
    let total = norm_sq(s);
    if total == 0.0 {
        return Err(Error::Degenerate(
            "concentration of the zero spectrum".into(),
        ));
    }
    Ok(time_energy(s, tset) / total)
}

/// Spectrum of `g` with `ĝ = |f̂|`; the norm is unchanged.
pub fn modulus_spectrum(s: &Spectrum) -> Spectrum {
    Spectrum {
        bandwidth: s.bandwidth,
        nodes: s.nodes.clone(),
        weights: s.weights.clone(),
        values: s
            .values
            .iter()
            .map(|v| Complex64::new(v.norm(), 0.0))
            .collect(),
    }
}

/// Whether `W·T <= 1` up to a relative slack of `1e-12`.
pub fn continuous_hypothesis_holds(bandwidth: f64, measure: f64) -> bool {
    bandwidth * measure <= 1.0 + 1e-12
}

fn check_continuous(
    claim: ClaimId,
    s: &Spectrum,
    tset: &IntervalUnion,
    tol: f64,
    override_hypothesis: bool,
) -> Result<ClaimReport> {
    let t = tset.measure();
    if !override_hypothesis && !continuous_hypothesis_holds(s.bandwidth, t) {
        return Err(Error::Hypothesis {
            claim: claim.as_str(),
            detail: format!(
                "W·T = {} > 1 (W = {}, T = {t})",
                s.bandwidth * t,
                s.bandwidth
            ),
        });
    }
    if norm_sq(s) == 0.0 {
        return Err(Error::Degenerate(
            "continuous check of the zero spectrum".into(),
        ));
    }
    let lhs = time_energy(s, tset);
    let rhs = time_energy(&modulus_spectrum(s), &IntervalUnion::centered(t));
    Ok(ClaimReport::new(
        claim,
        lhs,
        rhs,
        tol,
        Witness::Continuous {
            spectrum: s.clone(),
            tset: tset.clone(),
            override_hypothesis,
        },
    )
    .with_ratio())
}

/// Energy of `f` on `tset` against the energy of `g` (`ĝ = |f̂|`) on the
/// centred interval of the same measure, for a general time set.
pub fn check_thm_main(
    s: &Spectrum,
    tset: &IntervalUnion,
    tol: f64,
    override_hypothesis: bool,
) -> Result<ClaimReport> {
    check_continuous(
        ClaimId::ThmMainContinuous,
        s,
        tset,
        tol,
        override_hypothesis,
    )
}

/// As [`check_thm_main`], labelled for time sets given directly as finite
/// unions of intervals.
pub fn check_thm_finite(
    s: &Spectrum,
    tset: &IntervalUnion,
    tol: f64,
    override_hypothesis: bool,
) -> Result<ClaimReport> {
    check_continuous(
        ClaimId::ThmFiniteContinuous,
        s,
        tset,
        tol,
        override_hypothesis,
    )
}

/// Two nonnegative rectangles of width `width` flush with the band edges,
/// sampled with panel breaks at the rectangle edges.
pub fn edge_rectangles(bandwidth: f64, width: f64, n: usize) -> Result<Spectrum> {
    let half = 0.5 * bandwidth;
    if !(width > 0.0 && width < half) {
        return Err(Error::Domain(format!(
            "rectangle width {width} must lie in (0, W/2)"
        )));
    }
    let inner = half - width;
    make_spectrum_panels(
        bandwidth,
        &[-inner, inner],
        |x| Complex64::new(if x.abs() >= inner { 1.0 } else { 0.0 }, 0.0),
        n,
    )
}

/// The two-window time set aligned with the beat of [`edge_rectangles`]:
/// `r` intervals of length `T/r` centred at `k/(2c)`, `c` the rectangle
/// centre frequency.
pub fn beat_aligned_tset(
    bandwidth: f64,
    width: f64,
    measure: f64,
    r: usize,
) -> Result<IntervalUnion> {
    let c = 0.5 * bandwidth - 0.5 * width;
    let len = measure / r as f64;
    let raw: Vec<(f64, f64)> = (0..r)
        .map(|k| {
            let centre = k as f64 / (2.0 * c);
            (centre - 0.5 * len, centre + 0.5 * len)
        })
        .collect();
    crate::sets::normalize_intervals(&raw)
}
