//! Central rearrangement of nonnegative coefficients, the Toeplitz form it
//! maximizes, and the cosine-series embedding used to compare against the
//! factor-20 rearrangement bound.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circle::{arc_energy, gate_discrete, Poly};
use crate::error::{Error, Result};
use crate::numeric::sinc;
use crate::report::{ClaimId, ClaimReport, Witness};
use crate::sets::ArcUnion;

/// Longest input accepted by [`brute_force_best_permutation`] (8! = 40320).
pub const MAX_BRUTE_FORCE_LEN: usize = 8;

/// Weights `s_0 = 2δ`, `s_ν = 2 sin(νδ)/ν`, so that
/// `∫_{-δ}^{δ} |P|² = Σ_{l,m} a_l ā_m s_{|l-m|}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzWeights {
    pub n: usize,
    pub delta: f64,
    pub s: Vec<f64>,
}

impl ToeplitzWeights {
    /// Whether `s_0 >= s_1 >= ... >= s_n >= 0` up to rounding.
    pub fn is_decreasing_nonneg(&self) -> bool {
        self.s.windows(2).all(|w| w[1] <= w[0] + 1e-15) && self.s.iter().all(|&x| x >= -1e-15)
    }
}

pub fn toeplitz_weights(n: usize, delta: f64) -> ToeplitzWeights {
    let s = (0..=n)
        .map(|nu| 2.0 * delta * sinc(nu as f64 * delta))
        .collect();
    ToeplitzWeights { n, delta, s }
}

/// `∫_{-δ}^{δ} |P(e^{iθ})|² dθ` through the Toeplitz weights.
pub fn interval_energy_form(p: &Poly, delta: f64) -> f64 {
    let a = p.coeffs();
    let w = toeplitz_weights(a.len() - 1, delta);
    let mut acc = 0.0;
    for (l, al) in a.iter().enumerate() {
        for (m, am) in a.iter().enumerate() {
            acc += (al * am.conj()).re * w.s[l.abs_diff(m)];
        }
    }
    acc
}

/// Positions `0..=n` in the order they receive decreasing values: the centre
/// first, then alternating right and left of it.
fn central_positions(n: usize) -> Vec<usize> {
    let len = n + 1;
    let mut order = Vec::with_capacity(len);
    if n.is_multiple_of(2) {
        let c = n / 2;
        order.push(c);
        for k in 1..=c {
            order.push(c + k);
            order.push(c - k);
        }
    } else {
        let (lo, hi) = (n / 2, n / 2 + 1);
        for k in 0..=lo {
            order.push(hi + k);
            order.push(lo - k);
        }
    }
    debug_assert_eq!(order.len(), len);
    order
}

/// Places the largest entry at the central index, the next to its right, the
/// next to its left, and so on. Equal values keep their input order.
pub fn hlp_order(coeffs: &[f64]) -> Result<Poly> {
    if coeffs.is_empty() {
        return Err(Error::Domain("empty coefficient list".into()));
    }
    if let Some(x) = coeffs.iter().find(|x| !(**x >= 0.0) || !x.is_finite()) {
        return Err(Error::Domain(format!(
            "central rearrangement needs nonnegative coefficients, got {x}"
        )));
    }
    let mut ranked: Vec<usize> = (0..coeffs.len()).collect();
    ranked.sort_by(|&i, &j| coeffs[j].total_cmp(&coeffs[i]));
    let mut out = vec![Complex64::new(0.0, 0.0); coeffs.len()];
    for (pos, idx) in central_positions(coeffs.len() - 1).into_iter().zip(ranked) {
        out[pos] = Complex64::new(coeffs[idx], 0.0);
    }
    Ok(Poly::with_trailing_zeros(out))
}

/// Exhaustive maximum of [`interval_energy_form`] over all orderings of
/// `coeffs`. Returns the first maximizing arrangement in Heap's order.
pub fn brute_force_best_permutation(coeffs: &[f64], delta: f64) -> Result<(Poly, f64)> {
    if coeffs.len() > MAX_BRUTE_FORCE_LEN {
        return Err(Error::SizeGuard {
            len: coeffs.len(),
            max: MAX_BRUTE_FORCE_LEN,
        });
    }
    if coeffs.is_empty() {
        return Err(Error::Domain("empty coefficient list".into()));
    }
    let eval = |xs: &[f64]| {
        let p = Poly::with_trailing_zeros(xs.iter().map(|&x| Complex64::new(x, 0.0)).collect());
        let v = interval_energy_form(&p, delta);
        (p, v)
    };
    let mut xs = coeffs.to_vec();
    let mut best = eval(&xs);
    // Heap's algorithm, iterative form.
    let n = xs.len();
    let mut c = vec![0usize; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                xs.swap(0, i);
            } else {
                xs.swap(c[i], i);
            }
            let cand = eval(&xs);
            if cand.1 > best.1 {
                best = cand;
            }
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(best)
}

/// `f(x) = Σ a_k cos(kx)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawCosine")]
pub struct CosineSeries {
    pub a: Vec<f64>,
}

#[derive(Deserialize)]
struct RawCosine {
    a: Vec<f64>,
}

impl TryFrom<RawCosine> for CosineSeries {
    type Error = Error;
    fn try_from(raw: RawCosine) -> Result<Self> {
        if raw.a.iter().any(|x| !x.is_finite()) {
            return Err(Error::MalformedInput(
                "non-finite cosine coefficient".into(),
            ));
        }
        CosineSeries::new(raw.a)
    }
}

impl CosineSeries {
    pub fn new(a: Vec<f64>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::MalformedInput(
                "cosine series needs at least one coefficient".into(),
            ));
        }
        Ok(CosineSeries { a })
    }

    pub fn order(&self) -> usize {
        self.a.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.a
            .iter()
            .enumerate()
            .map(|(k, &ak)| ak * (k as f64 * x).cos())
            .sum()
    }

    /// Moduli of the coefficients sorted in decreasing order.
    pub fn decreasing_rearrangement(&self) -> CosineSeries {
        let mut a: Vec<f64> = self.a.iter().map(|x| x.abs()).collect();
        a.sort_by(|x, y| y.total_cmp(x));
        CosineSeries { a }
    }
}

/// The symmetric degree-`2n` polynomial
/// `½(a_n + a_{n-1} z + ... + 2a_0 z^n + ... + a_n z^{2n})` with
/// `|P(e^{ix})| = |f(x)|`.
pub fn montgomery_embed(f: &CosineSeries) -> Poly {
    let n = f.order();
    let coeffs = (0..=2 * n)
        .map(|k| {
            let v = if k == n {
                f.a[0]
            } else {
                0.5 * f.a[k.abs_diff(n)]
            };
            Complex64::new(v, 0.0)
        })
        .collect();
    Poly::with_trailing_zeros(coeffs)
}

/// Compares `∫_Ω |P|²` with `∫_{-δ}^{δ} |P*|²`, `P*` the central
/// rearrangement of the coefficient moduli of `P`.
pub fn check_thm_improv(
    p: &Poly,
    omega: &ArcUnion,
    tol: f64,
    override_hypothesis: bool,
) -> Result<ClaimReport> {
    if p.is_zero() {
        return Err(Error::Degenerate(
            "rearrangement check of the zero polynomial".into(),
        ));
    }
    let delta = omega.half_measure();
    gate_discrete(ClaimId::ThmImprov, p.degree(), delta, override_hypothesis)?;
    let moduli: Vec<f64> = p.coeffs().iter().map(|c| c.norm()).collect();
    let star = hlp_order(&moduli)?;
    let lhs = arc_energy(p, omega);
    let rhs = interval_energy_form(&star, delta);
    Ok(ClaimReport::new(
        ClaimId::ThmImprov,
        lhs,
        rhs,
        tol,
        Witness::Discrete {
            poly: p.clone(),
            omega: omega.clone(),
            override_hypothesis,
        },
    )
    .with_ratio())
}

/// The factor-20 bound for cosine series: `∫_Ω |f|² <= 20 ∫_{-δ}^{δ} |f**|²`.
/// The recorded ratio is `lhs` over the unscaled rearranged energy, i.e. the
/// factor the instance actually needs.
pub fn check_montgomery20(f: &CosineSeries, omega: &ArcUnion, tol: f64) -> Result<ClaimReport> {
    if f.a.iter().all(|&x| x == 0.0) {
        return Err(Error::Degenerate(
            "factor-20 check of the zero series".into(),
        ));
    }
    let delta = omega.half_measure();
    let lhs = arc_energy(&montgomery_embed(f), omega);
    let base = interval_energy_form(&montgomery_embed(&f.decreasing_rearrangement()), delta);
    let mut report = ClaimReport::new(
        ClaimId::Montgomery20,
        lhs,
        20.0 * base,
        tol,
        Witness::Cosine {
            series: f.clone(),
            omega: omega.clone(),
        },
    );
    report.ratio = Some(if base > 0.0 { lhs / base } else { f64::MAX });
    Ok(report)
}
