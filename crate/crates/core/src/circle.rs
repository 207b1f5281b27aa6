//! Complex polynomials on the unit circle and their exact energies over arc
//! unions.
//!
//! Every arc integral `∫_α^β e^{iνθ} dθ` is evaluated in the phase-symmetric
//! form `(β-α) e^{iν(α+β)/2} sinc(ν(β-α)/2)`, which has no cancellation for
//! short arcs and needs no special case for `ν = 0`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::sinc;
use crate::report::{ClaimId, ClaimReport, Witness};
use crate::sets::ArcUnion;

/// `P(z) = Σ a_k z^k`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPoly", into = "RawPoly")]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

#[derive(Serialize, Deserialize)]
struct RawPoly {
    re: Vec<f64>,
    im: Vec<f64>,
}

impl TryFrom<RawPoly> for Poly {
    type Error = Error;
    fn try_from(raw: RawPoly) -> Result<Self> {
        if raw.re.len() != raw.im.len() {
            return Err(Error::MalformedInput(format!(
                "polynomial has {} real and {} imaginary parts",
                raw.re.len(),
                raw.im.len()
            )));
        }
        if raw.re.iter().chain(&raw.im).any(|x| !x.is_finite()) {
            return Err(Error::MalformedInput("non-finite coefficient".into()));
        }
        Ok(Poly::new(
            raw.re
                .iter()
                .zip(&raw.im)
                .map(|(&r, &i)| Complex64::new(r, i))
                .collect(),
        ))
    }
}

impl From<Poly> for RawPoly {
    fn from(p: Poly) -> Self {
        RawPoly {
            re: p.coeffs.iter().map(|c| c.re).collect(),
            im: p.coeffs.iter().map(|c| c.im).collect(),
        }
    }
}

impl Poly {
    /// Trailing zero coefficients are trimmed; the zero polynomial keeps one
    /// coefficient.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.len() > 1
            && coeffs
                .last()
                .is_some_and(|c| *c == Complex64::new(0.0, 0.0))
        {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(Complex64::new(0.0, 0.0));
        }
        Poly { coeffs }
    }

    /// Keeps trailing zeros, so the degree is `coeffs.len() - 1` as given.
    pub fn with_trailing_zeros(coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            return Self::new(coeffs);
        }
        Poly { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut c = vec![Complex64::new(0.0, 0.0); k + 1];
        c[k] = Complex64::new(1.0, 0.0);
        Poly { coeffs: c }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.norm_sqr() == 0.0)
    }

    /// `P(e^{iθ})`.
    pub fn eval_on_circle(&self, theta: f64) -> Complex64 {
        let z = Complex64::from_polar(1.0, theta);
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * z + a)
    }
}

/// `Σ_parts ∫ e^{iνθ} dθ` over the arcs.
pub(crate) fn arc_moment(omega: &ArcUnion, nu: f64) -> Complex64 {
    omega
        .parts()
        .iter()
        .map(|&(a, b)| {
            let len = b - a;
            Complex64::from_polar(len * sinc(0.5 * nu * len), 0.5 * nu * (a + b))
        })
        .sum()
}

/// `∫_Ω |P(e^{iθ})|² dθ`.
pub fn arc_energy(p: &Poly, omega: &ArcUnion) -> f64 {
    let a = p.coeffs();
    let n = a.len();
    let moments: Vec<Complex64> = (0..n).map(|nu| arc_moment(omega, nu as f64)).collect();
    let mut acc = Complex64::new(0.0, 0.0);
    for (l, al) in a.iter().enumerate() {
        for (m, am) in a.iter().enumerate() {
            let mom = if l >= m {
                moments[l - m]
            } else {
                moments[m - l].conj()
            };
            acc += al * am.conj() * mom;
        }
    }
    debug_assert!(
        acc.im.abs() <= 1e-10 * norm_sq(p).max(f64::MIN_POSITIVE),
        "imaginary residue {} in arc energy",
        acc.im
    );
    acc.re
}

/// `∫_0^{2π} |P|² = 2π Σ|a_k|²`.
pub fn norm_sq(p: &Poly) -> f64 {
    TAU * p.coeffs().iter().map(|c| c.norm_sqr()).sum::<f64>()
}

/// Fraction of the energy of `p` that lies on `omega`.
pub fn concentration(p: &Poly, omega: &ArcUnion) -> Result<f64> {
    let total = norm_sq(p);
    if total == 0.0 {
        return Err(Error::Degenerate(
            "concentration of the zero polynomial".into(),
        ));
    }
    Ok(arc_energy(p, omega) / total)
}

/// `Q(z) = Σ |a_k| z^k`.
pub fn modulus_poly(p: &Poly) -> Poly {
    Poly::with_trailing_zeros(
        p.coeffs()
            .iter()
            .map(|c| Complex64::new(c.norm(), 0.0))
            .collect(),
    )
}

/// Coefficients `a_k e^{ikθ}`, so that `rotate_poly(p, θ)(e^{iφ}) = p(e^{i(φ+θ)})`
/// and the energy of the result on `Ω` equals the energy of `p` on `Ω + θ`.
pub fn rotate_poly(p: &Poly, theta: f64) -> Poly {
    Poly::with_trailing_zeros(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(k, &a)| a * Complex64::from_polar(1.0, k as f64 * theta))
            .collect(),
    )
}

/// Whether `n δ <= π`, with a relative slack of `1e-12` for rounding in `δ`.
pub fn discrete_hypothesis_holds(degree: usize, delta: f64) -> bool {
    degree as f64 * delta <= PI * (1.0 + 1e-12)
}

pub(crate) fn gate_discrete(
    claim: ClaimId,
    degree: usize,
    delta: f64,
    override_hypothesis: bool,
) -> Result<()> {
    if override_hypothesis || discrete_hypothesis_holds(degree, delta) {
        Ok(())
    } else {
        Err(Error::Hypothesis {
            claim: claim.as_str(),
            detail: format!(
                "n·δ = {} > π (n = {degree}, δ = {delta})",
                degree as f64 * delta
            ),
        })
    }
}

/// Compares `∫_Ω |P|²` against `∫_{-δ}^{δ} |Q|²` where `Q` has the moduli of
/// the coefficients of `P` and `|Ω| = 2δ`.
pub fn check_thm_discrete(
    p: &Poly,
    omega: &ArcUnion,
    tol: f64,
    override_hypothesis: bool,
) -> Result<ClaimReport> {
    let delta = omega.half_measure();
    gate_discrete(ClaimId::ThmDiscrete, p.degree(), delta, override_hypothesis)?;
    let lhs = arc_energy(p, omega);
    let rhs = arc_energy(&modulus_poly(p), &ArcUnion::centered(delta));
    Ok(ClaimReport::new(
        ClaimId::ThmDiscrete,
        lhs,
        rhs,
        tol,
        Witness::Discrete {
            poly: p.clone(),
            omega: omega.clone(),
            override_hypothesis,
        },
    ))
}
