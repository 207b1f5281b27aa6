//! The extremal trigonometric quantity
//! `h = (Σ sin B_p - sin A_p)² + (Σ cos B_p - cos A_p)²` under the budget
//! `Σ (B_p - A_p) = L`, its claimed bound `4 sin²(L/2)`, optimizers that
//! probe that bound, and residue-class diagnostics for sums of sines.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::report::{ClaimId, ClaimReport, Witness};
use crate::rng::seeded;

const ASCENT_STEP: f64 = 0.1;
const ASCENT_ITERS: usize = 500;
const ASCENT_GRAD_TOL: f64 = 1e-10;

/// Paired endpoints `(A_p, B_p)`, `p = 1..r`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTrig", into = "RawTrig")]
pub struct TrigConfig {
    a: Vec<f64>,
    b: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct RawTrig {
    #[serde(rename = "A")]
    a: Vec<f64>,
    #[serde(rename = "B")]
    b: Vec<f64>,
}

impl TryFrom<RawTrig> for TrigConfig {
    type Error = Error;
    fn try_from(raw: RawTrig) -> Result<Self> {
        TrigConfig::new(raw.a, raw.b)
    }
}

impl From<TrigConfig> for RawTrig {
    fn from(c: TrigConfig) -> Self {
        RawTrig { a: c.a, b: c.b }
    }
}

impl TrigConfig {
    pub fn new(a: Vec<f64>, b: Vec<f64>) -> Result<Self> {
        if a.is_empty() || a.len() != b.len() {
            return Err(Error::MalformedInput(format!(
                "need equally many A and B endpoints, at least one (got {} and {})",
                a.len(),
                b.len()
            )));
        }
        if a.iter().chain(&b).any(|x| !x.is_finite()) {
            return Err(Error::MalformedInput("non-finite endpoint".into()));
        }
        Ok(TrigConfig { a, b })
    }

    /// `(A, ..., A)` and `(A, ..., A, A + L)`, where `h` meets the claimed bound.
    pub fn canonical(r: usize, start: f64, length: f64) -> Self {
        let a = vec![start; r.max(1)];
        let mut b = a.clone();
        *b.last_mut().unwrap() += length;
        TrigConfig { a, b }
    }

    pub fn a(&self) -> &[f64] {
        &self.a
    }

    pub fn b(&self) -> &[f64] {
        &self.b
    }

    pub fn r(&self) -> usize {
        self.a.len()
    }

    /// `L = Σ (B_p - A_p)`.
    pub fn length(&self) -> f64 {
        self.a.iter().zip(&self.b).map(|(a, b)| b - a).sum()
    }

    pub fn shifted(&self, s: f64) -> Self {
        TrigConfig {
            a: self.a.iter().map(|x| x + s).collect(),
            b: self.b.iter().map(|x| x + s).collect(),
        }
    }
}

pub fn h_value(c: &TrigConfig) -> f64 {
    let (mut s, mut co) = (0.0, 0.0);
    for (a, b) in c.a.iter().zip(&c.b) {
        s += b.sin() - a.sin();
        co += b.cos() - a.cos();
    }
    s * s + co * co
}

/// `|Σ_p e^{iB_p} - e^{iA_p}|²`, equal to [`h_value`].
pub fn h_value_complex(c: &TrigConfig) -> f64 {
    c.a.iter()
        .zip(&c.b)
        .map(|(&a, &b)| Complex64::from_polar(1.0, b) - Complex64::from_polar(1.0, a))
        .sum::<Complex64>()
        .norm_sqr()
}

/// `4 sin²(L/2)`.
pub fn claimed_bound(length: f64) -> f64 {
    let s = (0.5 * length).sin();
    4.0 * s * s
}

pub fn check_lemma_h(c: &TrigConfig, tol: f64) -> ClaimReport {
    ClaimReport::new(
        ClaimId::LemmaHBound,
        h_value(c),
        claimed_bound(c.length()),
        tol,
        Witness::Trig { config: c.clone() },
    )
}

/// Free coordinates `A_1..A_r, B_1..B_{r-1}`; `B_r` closes the budget.
fn assemble(x: &[f64], r: usize, length: f64) -> TrigConfig {
    let a = x[..r].to_vec();
    let mut b = x[r..].to_vec();
    let used: f64 = (0..r - 1).map(|p| b[p] - a[p]).sum();
    b.push(a[r - 1] + length - used);
    TrigConfig { a, b }
}

fn gradient(x: &[f64], r: usize, length: f64) -> Vec<f64> {
    let c = assemble(x, r, length);
    let z: Complex64 =
        c.a.iter()
            .zip(&c.b)
            .map(|(&a, &b)| Complex64::from_polar(1.0, b) - Complex64::from_polar(1.0, a))
            .sum();
    let i = Complex64::new(0.0, 1.0);
    let d = |theta: f64| 2.0 * (z.conj() * i * Complex64::from_polar(1.0, theta)).re;
    let g_last = d(c.b[r - 1]);
    let mut g = Vec::with_capacity(2 * r - 1);
    for p in 0..r {
        g.push(-d(c.a[p]) + g_last);
    }
    for p in 0..r - 1 {
        g.push(d(c.b[p]) - g_last);
    }
    g
}

fn ascend(mut x: Vec<f64>, r: usize, length: f64) -> (Vec<f64>, f64) {
    let mut value = h_value(&assemble(&x, r, length));
    for _ in 0..ASCENT_ITERS {
        let g = gradient(&x, r, length);
        let gnorm = g.iter().map(|v| v * v).sum::<f64>().sqrt();
        if gnorm < ASCENT_GRAD_TOL {
            break;
        }
        let mut step = ASCENT_STEP;
        let mut moved = false;
        while step > 1e-14 {
            let cand: Vec<f64> = x.iter().zip(&g).map(|(xi, gi)| xi + step * gi).collect();
            let v = h_value(&assemble(&cand, r, length));
            if v > value {
                x = cand;
                value = v;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if !moved {
            break;
        }
    }
    (x, value)
}

/// Best `h` found by gradient ascent from `restarts` seeded starts under the
/// budget `Σ (B - A) = L`. Restart 0 starts from the canonical equality
/// point, so the result is never below the claimed bound's equality value.
/// Values above the claimed bound are returned as found.
pub fn multistart_max_h(r: usize, length: f64, restarts: usize, seed: u64) -> (TrigConfig, f64) {
    let r = r.max(1);
    let restarts = restarts.max(1);
    let runs: Vec<(usize, Vec<f64>, f64)> = (0..restarts)
        .into_par_iter()
        .map(|k| {
            let start: Vec<f64> = if k == 0 {
                let c = TrigConfig::canonical(r, 0.0, length);
                c.a.iter().chain(&c.b[..r - 1]).copied().collect()
            } else {
                let mut rng = seeded(seed, k as u64);
                (0..2 * r - 1).map(|_| rng.gen_range(0.0..TAU)).collect()
            };
            let (x, v) = ascend(start, r, length);
            (k, x, v)
        })
        .collect();
    let (_, x, v) = runs
        .into_iter()
        .fold(None::<(usize, Vec<f64>, f64)>, |best, run| match best {
            Some(b) if b.2 >= run.2 => Some(b),
            _ => Some(run),
        })
        .expect("at least one restart");
    (assemble(&x, r, length), v)
}

/// Number of distinct residues of `x` modulo `2π` when points within `tol`
/// of each other (around the circle) are merged.
pub fn residue_clusters(x: &[f64], tol: f64) -> usize {
    if x.is_empty() {
        return 0;
    }
    let mut y: Vec<f64> = x
        .iter()
        .map(|v| {
            let r = v.rem_euclid(TAU);
            if r >= TAU {
                0.0
            } else {
                r
            }
        })
        .collect();
    y.sort_by(f64::total_cmp);
    let mut gaps = y.windows(2).filter(|w| w[1] - w[0] > tol).count();
    if y[0] + TAU - y[y.len() - 1] > tol {
        gaps += 1;
    }
    gaps.max(1)
}

fn golden_max<F: Fn(f64) -> f64>(f: F, mut lo: f64, mut hi: f64, iters: usize) -> (f64, f64) {
    let phi = 0.5 * (5f64.sqrt() - 1.0);
    let mut x1 = hi - phi * (hi - lo);
    let mut x2 = lo + phi * (hi - lo);
    let (mut f1, mut f2) = (f(x1), f(x2));
    for _ in 0..iters {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + phi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - phi * (hi - lo);
            f1 = f(x1);
        }
    }
    if f1 > f2 {
        (x1, f1)
    } else {
        (x2, f2)
    }
}

/// Maximum of `|Σ sin x_i|` over points of `n` variables with
/// `Σ x_i = L` whose values fall in at most two residue classes mod `2π`:
/// `k` copies of `y` and `n - k` copies of `y'`, `k y + (n-k) y' = L + 2πm`.
/// Each `(k, m)` branch is scanned on `grid` points and the best cell is
/// refined by golden-section search.
pub fn max_sum_sin_reduced(n: usize, length: f64, grid: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("need at least one variable".into()));
    }
    if grid < 100 {
        return Err(Error::Domain(format!(
            "grid must have at least 100 points, got {grid}"
        )));
    }
    let nf = n as f64;
    let mut best = 0.0f64;
    let span = n as i64;
    for m in -span..=span {
        let budget = length + TAU * m as f64;
        // single class
        best = best.max((nf * (budget / nf).sin()).abs());
        for k in 1..n {
            let (kf, rest) = (k as f64, (n - k) as f64);
            let f = |y: f64| (kf * y.sin() + rest * ((budget - kf * y) / rest).sin()).abs();
            let h = TAU / grid as f64;
            let (mut arg, mut val) = (0.0, f(0.0));
            for i in 1..grid {
                let y = i as f64 * h;
                let v = f(y);
                if v > val {
                    val = v;
                    arg = y;
                }
            }
            let (_, refined) = golden_max(f, arg - h, arg + h, 80);
            best = best.max(val).max(refined);
        }
    }
    Ok(best)
}

/// `|Σ sin x_i|` at the given point against the two-class maximum for the
/// same `n` and `L = Σ x_i`.
pub fn check_lemma_sin_cluster(x: &[f64], grid: usize, tol: f64) -> Result<ClaimReport> {
    if x.iter().any(|v| !v.is_finite()) {
        return Err(Error::MalformedInput("non-finite variable".into()));
    }
    let lhs = x.iter().map(|v| v.sin()).sum::<f64>().abs();
    let rhs = max_sum_sin_reduced(x.len(), x.iter().sum(), grid)?;
    Ok(ClaimReport::new(
        ClaimId::LemmaSinCluster,
        lhs,
        rhs,
        tol,
        Witness::SinSum {
            x: x.to_vec(),
            grid,
        },
    ))
}
