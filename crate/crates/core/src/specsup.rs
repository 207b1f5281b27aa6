//! Supremum concentration through Hermitian concentration matrices.
//!
//! For a polynomial with coefficient vector `v` the concentration on `Ω` is
//! the Rayleigh quotient `v* M v / v* v` of the Toeplitz matrix
//! `M_lm = (1/2π) ∫_Ω e^{i(m-l)θ} dθ`; for a spectrum sampled on a Gauss
//! grid it is the Rayleigh quotient of the Nyström matrix
//! `M_jk = √(w_j w_k) K(ω_k - ω_j)` at `v_j = √w_j f̂(ω_j)`. The largest
//! eigenvalue is the best concentration any such function can reach.

use std::f64::consts::{PI, TAU};

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bandlimited::time_kernel;
use crate::circle::arc_moment;
use crate::error::{Error, Result};
use crate::numeric::gauss_legendre_on;
use crate::rng::seeded;
use crate::sets::{random_union_with, ArcUnion, IntervalUnion};

const EIGEN_RESIDUAL: f64 = 1e-10;
const EIGEN_MAX_ITERS: usize = 100_000;
/// Iterations between stall checks; the residual must halve within a window.
const STALL_WINDOW: usize = 2_000;
/// Local-search evaluations per restart in [`search_extremal_set`].
const SEARCH_CHUNK: usize = 40;

/// Where a concentration matrix came from.
#[derive(Debug, Clone, PartialEq)]
pub enum MatrixOrigin {
    Circle {
        omega: ArcUnion,
        degree: usize,
    },
    Continuous {
        tset: IntervalUnion,
        bandwidth: f64,
        nodes: Vec<f64>,
        weights: Vec<f64>,
    },
}

/// A Hermitian matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcMatrix {
    dim: usize,
    entries: Vec<Complex64>,
    origin: MatrixOrigin,
}

impl ConcMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn origin(&self) -> &MatrixOrigin {
        &self.origin
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        self.entries
            .chunks(self.dim)
            .map(|row| row.iter().zip(v).map(|(m, x)| m * x).sum())
            .collect()
    }

    /// `v* M v / v* v`.
    pub fn rayleigh(&self, v: &[Complex64]) -> f64 {
        let mv = self.apply(v);
        let num: Complex64 = v.iter().zip(&mv).map(|(x, y)| x.conj() * y).sum();
        num.re / v.iter().map(|x| x.norm_sqr()).sum::<f64>()
    }

    /// Largest `|M_jk - conj(M_kj)|`.
    pub fn hermitian_defect(&self) -> f64 {
        let mut worst = 0.0f64;
        for j in 0..self.dim {
            for k in 0..self.dim {
                worst = worst.max((self.get(j, k) - self.get(k, j).conj()).norm());
            }
        }
        worst
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EigenResult {
    pub lambda: f64,
    pub vector: Vec<Complex64>,
    /// `‖Mv - λv‖₂` for the unit vector `v`.
    pub residual: f64,
}

/// Toeplitz matrix of `Ω` for polynomials of degree `<= n`.
pub fn circle_conc_matrix(omega: &ArcUnion, n: usize) -> ConcMatrix {
    let dim = n + 1;
    let moments: Vec<Complex64> = (0..dim)
        .map(|nu| arc_moment(omega, nu as f64) / TAU)
        .collect();
    let mut entries = Vec::with_capacity(dim * dim);
    for l in 0..dim {
        for m in 0..dim {
            entries.push(if m >= l {
                moments[m - l]
            } else {
                moments[l - m].conj()
            });
        }
    }
    ConcMatrix {
        dim,
        entries,
        origin: MatrixOrigin::Circle {
            omega: omega.clone(),
            degree: n,
        },
    }
}

/// Nyström matrix of `tset` for spectra on the `n`-point Gauss grid of
/// `[-W/2, W/2]`. The rule must resolve `e^{2πiωt}` over the time set
/// (roughly `n` well above `π W max|t|`), otherwise the quadratic form is not
/// a concentration and its eigenvalues can exceed one.
pub fn continuous_conc_matrix(
    tset: &IntervalUnion,
    bandwidth: f64,
    n: usize,
) -> Result<ConcMatrix> {
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
    let (nodes, weights) = gauss_legendre_on(n, -0.5 * bandwidth, 0.5 * bandwidth);
    let mut entries = vec![Complex64::new(0.0, 0.0); n * n];
    for j in 0..n {
        for k in j..n {
            let v = time_kernel(nodes[k] - nodes[j], tset) * (weights[j] * weights[k]).sqrt();
            entries[j * n + k] = v;
            entries[k * n + j] = v.conj();
        }
    }
    Ok(ConcMatrix {
        dim: n,
        entries,
        origin: MatrixOrigin::Continuous {
            tset: tset.clone(),
            bandwidth,
            nodes,
            weights,
        },
    })
}

fn normalize(v: &mut [Complex64]) -> f64 {
    let norm = v.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
    norm
}

/// Dominant eigenpair by power iteration on `M + I`.
///
/// Concentration matrices have spectrum in `[0, 1]`, so the shift makes the
/// top eigenvalue dominant in modulus. The start vector is fixed, so results
/// are reproducible; the returned vector has its largest entry real positive.
/// When the top of the spectrum is clustered (many eigenvalues within `1e-6`
/// of each other) the iteration stalls; it then falls back to a dense
/// Hermitian eigendecomposition.
pub fn top_eigenpair(m: &ConcMatrix) -> Result<EigenResult> {
    let n = m.dim;
    if n == 0 {
        return Err(Error::Domain("empty matrix".into()));
    }
    // Positive, but not constant: a constant start is orthogonal to the
    // antisymmetric eigenvectors of symmetric sets.
    let mut v: Vec<Complex64> = (0..n)
        .map(|k| {
            let t = (k as f64 + 1.0) * 0.618_033_988_749_895;
            Complex64::new(1.0 + 0.25 * t.fract(), 0.1 * (t * 1.7).fract())
        })
        .collect();
    normalize(&mut v);
    let mut best = f64::INFINITY;
    let mut checkpoint = f64::INFINITY;
    for iter in 0..EIGEN_MAX_ITERS {
        let mv = m.apply(&v);
        let (lambda, residual) = rayleigh_residual(&v, &mv);
        best = best.min(residual);
        if residual < EIGEN_RESIDUAL {
            return Ok(EigenResult {
                lambda,
                vector: fix_phase(v),
                residual,
            });
        }
        if iter > 0 && iter % STALL_WINDOW == 0 {
            if best > 0.5 * checkpoint {
                return dense_top(m, best);
            }
            checkpoint = best;
        }
        let mut next: Vec<Complex64> = mv.iter().zip(&v).map(|(y, x)| y + x).collect();
        if normalize(&mut next) == 0.0 {
            return dense_top(m, best);
        }
        v = next;
    }
    dense_top(m, best)
}

fn rayleigh_residual(v: &[Complex64], mv: &[Complex64]) -> (f64, f64) {
    let lambda: f64 = v.iter().zip(mv).map(|(x, y)| (x.conj() * y).re).sum();
    let residual = mv
        .iter()
        .zip(v)
        .map(|(y, x)| (y - x * lambda).norm_sqr())
        .sum::<f64>()
        .sqrt();
    (lambda, residual)
}

fn dense_top(m: &ConcMatrix, power_residual: f64) -> Result<EigenResult> {
    let n = m.dim;
    let mat = DMatrix::from_fn(n, n, |j, k| {
        // exact Hermitian symmetrization
        0.5 * (m.get(j, k) + m.get(k, j).conj())
    });
    let eig = SymmetricEigen::new(mat);
    let top = eig.eigenvalues.iter().enumerate().fold(0, |best, (i, &l)| {
        if l > eig.eigenvalues[best] {
            i
        } else {
            best
        }
    });
    let mut v: Vec<Complex64> = eig.eigenvectors.column(top).iter().copied().collect();
    normalize(&mut v);
    let (lambda, residual) = rayleigh_residual(&v, &m.apply(&v));
    if residual < EIGEN_RESIDUAL {
        Ok(EigenResult {
            lambda,
            vector: fix_phase(v),
            residual,
        })
    } else {
        Err(Error::Convergence {
            iterations: EIGEN_MAX_ITERS,
            residual: residual.min(power_residual),
        })
    }
}

fn fix_phase(mut v: Vec<Complex64>) -> Vec<Complex64> {
    let mut arg = 0;
    for (i, x) in v.iter().enumerate() {
        if x.norm() > v[arg].norm() * (1.0 + 1e-12) {
            arg = i;
        }
    }
    let phase = v[arg] / v[arg].norm();
    if v[arg].norm() > 0.0 {
        v.iter_mut().for_each(|x| *x /= phase);
        v[arg] = Complex64::new(v[arg].re, 0.0);
    }
    v
}

/// Largest concentration on `Ω` over all polynomials of degree `<= n`.
pub fn sup_concentration(omega: &ArcUnion, n: usize) -> Result<f64> {
    Ok(top_eigenpair(&circle_conc_matrix(omega, n))?.lambda)
}

/// Outcome of [`search_extremal_set`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub set: ArcUnion,
    pub lambda: f64,
    pub interval_lambda: f64,
    /// `lambda - interval_lambda`; positive would mean a non-interval set beats
    /// the interval of the same measure.
    pub gap: f64,
    pub seed: u64,
    pub budget: usize,
}

fn arcs_from(parts: &[(f64, f64)]) -> ArcUnion {
    let raw: Vec<(f64, f64)> = parts
        .iter()
        .map(|&(c, l)| (c - 0.5 * l, c + 0.5 * l))
        .collect();
    ArcUnion::new(&raw).expect("finite arcs")
}

/// Randomized search for the arc union of measure `2δ` with at most `r_max`
/// arcs that maximizes the degree-`n` supremum concentration. Each restart
/// draws a random union and then tries single-arc shifts and length transfers
/// between arcs, keeping a move only when it raises `λ_max` by more than
/// `1e-12`. `budget` bounds the number of eigenvalue evaluations.
pub fn search_extremal_set(
    n: usize,
    delta: f64,
    r_max: usize,
    budget: usize,
    seed: u64,
) -> Result<SearchResult> {
    if !(delta > 0.0) || !delta.is_finite() {
        return Err(Error::Domain(format!(
            "half-measure must be positive, got {delta}"
        )));
    }
    if r_max == 0 {
        return Err(Error::Domain("r_max must be at least 1".into()));
    }
    let interval = ArcUnion::centered(delta.min(PI));
    let interval_lambda = sup_concentration(&interval, n)?;
    let total = 2.0 * delta;
    let mut best = (interval.clone(), interval_lambda);
    if budget > 0 && total < TAU * (1.0 - 1e-9) {
        let restarts = budget.div_ceil(SEARCH_CHUNK);
        let runs: Vec<Result<(ArcUnion, f64)>> = (0..restarts)
            .into_par_iter()
            .map(|k| {
                let evals = SEARCH_CHUNK.min(budget - k * SEARCH_CHUNK);
                local_search(n, total, r_max, evals, seed, k as u64)
            })
            .collect();
        for run in runs {
            let (set, lambda) = run?;
            if lambda > best.1 + 1e-12 {
                best = (set, lambda);
            }
        }
    }
    Ok(SearchResult {
        gap: best.1 - interval_lambda,
        set: best.0,
        lambda: best.1,
        interval_lambda,
        seed,
        budget,
    })
}

fn local_search(
    n: usize,
    total: f64,
    r_max: usize,
    evals: usize,
    seed: u64,
    stream: u64,
) -> Result<(ArcUnion, f64)> {
    let mut rng = seeded(seed, stream);
    let r = rng.gen_range(1..=r_max);
    let placed = random_union_with(&mut rng, r, total, (0.0, TAU))?;
    let mut parts: Vec<(f64, f64)> = placed
        .parts()
        .iter()
        .map(|&(a, b)| (0.5 * (a + b), b - a))
        .collect();
    let mut set = arcs_from(&parts);
    let mut lambda = sup_concentration(&set, n)?;
    let mut used = 1;
    let mut step = 0.5;
    while used < evals {
        let mut cand = parts.clone();
        let i = rng.gen_range(0..cand.len());
        if cand.len() > 1 && rng.gen_bool(0.5) {
            let mut j = rng.gen_range(0..cand.len() - 1);
            if j >= i {
                j += 1;
            }
            let t = rng.gen_range(-step..step) * cand[i].1.min(cand[j].1);
            cand[i].1 += t;
            cand[j].1 -= t;
        } else {
            cand[i].0 += rng.gen_range(-step..step);
        }
        used += 1;
        if cand.iter().any(|&(_, l)| l <= 0.0) {
            continue;
        }
        let next = arcs_from(&cand);
        if next.components() != cand.len() || (next.measure() - total).abs() > 1e-12 {
            step *= 0.8;
            continue;
        }
        let l = sup_concentration(&next, n)?;
        if l > lambda + 1e-12 {
            parts = cand;
            set = next;
            lambda = l;
        } else {
            step = (step * 0.9).max(1e-3);
        }
    }
    Ok((set, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circle::{concentration, Poly};
    use rand::Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn d2_set() -> ArcUnion {
        ArcUnion::new(&[(-PI / 8.0, PI / 8.0), (7.0 * PI / 8.0, 9.0 * PI / 8.0)]).unwrap()
    }

    /// Largest root of the characteristic polynomial of a real symmetric 3×3
    /// matrix, by the trigonometric formula.
    fn sym3_top(a: [[f64; 3]; 3]) -> f64 {
        let p1 = a[0][1].powi(2) + a[0][2].powi(2) + a[1][2].powi(2);
        let q = (a[0][0] + a[1][1] + a[2][2]) / 3.0;
        let p2 = (a[0][0] - q).powi(2) + (a[1][1] - q).powi(2) + (a[2][2] - q).powi(2) + 2.0 * p1;
        let p = (p2 / 6.0).sqrt();
        let mut b = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                b[i][j] = (a[i][j] - if i == j { q } else { 0.0 }) / p;
            }
        }
        let det = b[0][0] * (b[1][1] * b[2][2] - b[1][2] * b[2][1])
            - b[0][1] * (b[1][0] * b[2][2] - b[1][2] * b[2][0])
            + b[0][2] * (b[1][0] * b[2][1] - b[1][1] * b[2][0]);
        let phi = (det / 2.0).clamp(-1.0, 1.0).acos() / 3.0;
        q + 2.0 * p * phi.cos()
    }

    #[test]
    fn circle_matrix_examples() {
        let omega = d2_set();
        let m = circle_conc_matrix(&omega, 0);
        assert!((m.get(0, 0).re - omega.half_measure() / PI).abs() < 1e-15);

        let delta = 0.7;
        let m = circle_conc_matrix(&ArcUnion::centered(delta), 1);
        assert!((m.get(0, 0) - c(delta / PI, 0.0)).norm() < 1e-15);
        assert!((m.get(0, 1) - c(delta.sin() / PI, 0.0)).norm() < 1e-15);
        assert!((m.get(1, 0) - c(delta.sin() / PI, 0.0)).norm() < 1e-15);

        let m = circle_conc_matrix(&ArcUnion::full_circle(), 4);
        for j in 0..5 {
            for k in 0..5 {
                let expect = if j == k { 1.0 } else { 0.0 };
                assert!((m.get(j, k) - c(expect, 0.0)).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn rayleigh_quotient_is_concentration() {
        let mut rng = seeded(51, 0);
        for _ in 0..500 {
            let n = rng.gen_range(0..10);
            let a = rng.gen_range(0.0..TAU);
            let omega =
                ArcUnion::new(&[(a, a + rng.gen_range(0.1..2.0)), (a + 3.0, a + 3.5)]).unwrap();
            let v: Vec<Complex64> = (0..=n)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            let m = circle_conc_matrix(&omega, n);
            let conc = concentration(&Poly::with_trailing_zeros(v.clone()), &omega).unwrap();
            assert!((m.rayleigh(&v) - conc).abs() < 1e-10);
            assert!(m.hermitian_defect() < 1e-14);
        }
    }

    #[test]
    fn continuous_matrix_examples() {
        // A time set wide relative to the band but still resolved by the grid.
        let m = continuous_conc_matrix(&IntervalUnion::interval(-10.0, 10.0).unwrap(), 1.0, 128)
            .unwrap();
        let e = top_eigenpair(&m).unwrap();
        assert!((e.lambda - 1.0).abs() < 1e-3);
        assert!(m.hermitian_defect() < 1e-14);

        let m = continuous_conc_matrix(&IntervalUnion::empty(), 1.0, 16).unwrap();
        assert!((0..16).all(|j| (0..16).all(|k| m.get(j, k) == c(0.0, 0.0))));

        assert!(continuous_conc_matrix(&IntervalUnion::empty(), 0.0, 16).is_err());
        assert!(continuous_conc_matrix(&IntervalUnion::empty(), 1.0, 1).is_err());
    }

    #[test]
    fn continuous_rayleigh_of_flat_vector_is_concentration() {
        use crate::bandlimited::{concentration as conc_t, make_spectrum};
        let t = IntervalUnion::interval(-0.3, 0.4)
            .unwrap()
            .union(&IntervalUnion::interval(1.0, 1.2).unwrap());
        let m = continuous_conc_matrix(&t, 1.3, 64).unwrap();
        let s = make_spectrum(1.3, |_| c(1.0, 0.0), 64).unwrap();
        let v: Vec<Complex64> = s.weights().iter().map(|w| c(w.sqrt(), 0.0)).collect();
        assert!((m.rayleigh(&v) - conc_t(&s, &t).unwrap()).abs() < 1e-8);
    }

    #[test]
    fn prolate_top_eigenvalue_converges_for_unit_time_bandwidth() {
        let t = IntervalUnion::centered(1.0);
        let l: Vec<f64> = [64, 128, 256]
            .iter()
            .map(|&n| {
                top_eigenpair(&continuous_conc_matrix(&t, 1.0, n).unwrap())
                    .unwrap()
                    .lambda
            })
            .collect();
        assert!((l[1] - l[0]).abs() < 1e-10 && (l[2] - l[1]).abs() < 1e-10);
        // golden value of the top prolate eigenvalue at WT = 1
        assert!((l[2] - 0.783_368_789_210_000).abs() < 1e-10, "{}", l[2]);
    }

    #[test]
    fn top_eigenpair_examples() {
        let omega = ArcUnion::centered(0.4);
        let e = top_eigenpair(&circle_conc_matrix(&omega, 0)).unwrap();
        assert!((e.lambda - 0.4 / PI).abs() < 1e-15);

        for &delta in &[0.1, 0.7, 1.5, 2.5, 3.0] {
            let e = top_eigenpair(&circle_conc_matrix(&ArcUnion::centered(delta), 1)).unwrap();
            assert!((e.lambda - (delta + delta.sin()) / PI).abs() < 1e-10);
            assert!(e.residual < 1e-10);
            let norm: f64 = e.vector.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt();
            assert!((norm - 1.0).abs() < 1e-12);
        }

        let e = top_eigenpair(&circle_conc_matrix(&ArcUnion::full_circle(), 3)).unwrap();
        assert!((e.lambda - 1.0).abs() < 1e-12);
    }

    #[test]
    fn antisymmetric_top_eigenvector_is_found() {
        // Arcs at ±π/2: the best quadratic is 1 - z², whose coefficient vector
        // is orthogonal to every constant vector.
        let omega = ArcUnion::new(&[
            (PI / 2.0 - 0.3, PI / 2.0 + 0.3),
            (-PI / 2.0 - 0.3, -PI / 2.0 + 0.3),
        ])
        .unwrap();
        let m = circle_conc_matrix(&omega, 2);
        let e = top_eigenpair(&m).unwrap();
        let v = [c(1.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)];
        assert!(e.lambda >= m.rayleigh(&v) - 1e-12);
        let mut rng = seeded(52, 0);
        for _ in 0..1000 {
            let v: Vec<Complex64> = (0..3)
                .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                .collect();
            assert!(m.rayleigh(&v) <= e.lambda + 1e-9);
        }
    }

    #[test]
    fn sup_concentration_examples() {
        let delta = 0.9;
        let s = sup_concentration(&ArcUnion::centered(delta), 1).unwrap();
        assert!((s - (delta + delta.sin()) / PI).abs() < 1e-10);
        let c1 = concentration(&Poly::from_real(&[1.0, 1.0]), &ArcUnion::centered(delta)).unwrap();
        assert!((s - c1).abs() < 1e-10);
        assert!((sup_concentration(&ArcUnion::full_circle(), 5).unwrap() - 1.0).abs() < 1e-12);

        let d2 = sup_concentration(&d2_set(), 2).unwrap();
        let m = circle_conc_matrix(&d2_set(), 2);
        let real = |j, k| m.get(j, k).re;
        let a = [
            [real(0, 0), real(0, 1), real(0, 2)],
            [real(1, 0), real(1, 1), real(1, 2)],
            [real(2, 0), real(2, 1), real(2, 2)],
        ];
        assert!(m.entries.iter().all(|x| x.im.abs() < 1e-15));
        assert!((d2 - sym3_top(a)).abs() < 1e-10);
        assert!((d2 - 0.47508).abs() < 1e-5);

        let t = [0.25, (PI / 4.0).sin() / PI, 1.0 / (2.0 * PI)];
        let toe = [[t[0], t[1], t[2]], [t[1], t[0], t[1]], [t[2], t[1], t[0]]];
        let interval = sup_concentration(&ArcUnion::centered(PI / 4.0), 2).unwrap();
        assert!((interval - sym3_top(toe)).abs() < 1e-10);
        assert!((interval - 0.6577).abs() < 1e-4);
        assert!(interval > d2);
    }

    #[test]
    fn sup_dominates_random_polynomials() {
        let mut rng = seeded(53, 0);
        for _ in 0..200 {
            let n = rng.gen_range(0..8);
            let a = rng.gen_range(0.0..TAU);
            let omega = ArcUnion::new(&[
                (a, a + rng.gen_range(0.1..2.0)),
                (a + 3.0, a + 3.0 + rng.gen_range(0.0..1.0)),
            ])
            .unwrap();
            let sup = sup_concentration(&omega, n).unwrap();
            assert!(sup >= omega.measure() / TAU - 1e-9 && sup <= 1.0 + 1e-9);
            for _ in 0..5 {
                let p = Poly::with_trailing_zeros(
                    (0..=n)
                        .map(|_| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                        .collect(),
                );
                assert!(concentration(&p, &omega).unwrap() <= sup + 1e-9);
            }
        }
    }

    #[test]
    fn search_examples() {
        let r = search_extremal_set(3, 0.5, 2, 0, 1).unwrap();
        assert_eq!(r.set, ArcUnion::centered(0.5));
        assert_eq!(r.gap, 0.0);

        let r = search_extremal_set(2, PI / 4.0, 2, 400, 3).unwrap();
        assert!((r.set.measure() - PI / 2.0).abs() < 1e-12);
        assert!((sup_concentration(&r.set, 2).unwrap() - r.lambda).abs() < 1e-12);
        assert!(r.gap <= 1e-9, "gap {}", r.gap);
        assert_eq!(r, search_extremal_set(2, PI / 4.0, 2, 400, 3).unwrap());

        for seed in 0..3 {
            let r = search_extremal_set(1, 1.1, 3, 200, seed).unwrap();
            assert!(r.gap <= 1e-9);
        }
    }
}
