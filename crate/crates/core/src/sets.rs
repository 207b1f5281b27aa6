//! Canonical finite unions of intervals on the line and arcs on the circle.
//!
//! Both types keep their parts half-open, sorted, disjoint and non-touching,
//! so two unions covering the same set compare equal.

use std::f64::consts::TAU;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rng::seeded;

/// A canonical disjoint union of finite half-open intervals `[a, b)`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "RawIntervals", into = "RawIntervals")]
pub struct IntervalUnion {
    parts: Vec<(f64, f64)>,
}

#[derive(Serialize, Deserialize)]
struct RawIntervals {
    parts: Vec<[f64; 2]>,
}

impl TryFrom<RawIntervals> for IntervalUnion {
    type Error = Error;
    fn try_from(raw: RawIntervals) -> Result<Self> {
        let pairs: Vec<(f64, f64)> = raw.parts.iter().map(|p| (p[0], p[1])).collect();
        normalize_intervals(&pairs)
    }
}

impl From<IntervalUnion> for RawIntervals {
    fn from(u: IntervalUnion) -> Self {
        RawIntervals {
            parts: u.parts.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

/// Sorts, merges overlapping or touching parts and drops empty ones.
pub fn normalize_intervals(raw: &[(f64, f64)]) -> Result<IntervalUnion> {
    let mut parts = Vec::with_capacity(raw.len());
    for &(a, b) in raw {
        if !a.is_finite() || !b.is_finite() {
            return Err(Error::MalformedInput(format!(
                "non-finite interval endpoint in ({a}, {b})"
            )));
        }
        if a > b {
            return Err(Error::MalformedInput(format!(
                "interval ({a}, {b}) has a > b"
            )));
        }
        if a < b {
            parts.push((a, b));
        }
    }
    Ok(IntervalUnion {
        parts: merge_sorted(parts),
    })
}

fn merge_sorted(mut parts: Vec<(f64, f64)>) -> Vec<(f64, f64)> {
    parts.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.total_cmp(&y.1)));
    let mut out: Vec<(f64, f64)> = Vec::with_capacity(parts.len());
    for (a, b) in parts {
        match out.last_mut() {
            Some(last) if a <= last.1 => last.1 = last.1.max(b),
            _ => out.push((a, b)),
        }
    }
    out
}

impl IntervalUnion {
    pub fn empty() -> Self {
        Self::default()
    }

    /// The single interval `[a, b)`.
    pub fn interval(a: f64, b: f64) -> Result<Self> {
        normalize_intervals(&[(a, b)])
    }

    /// `[-len/2, len/2)`.
    pub fn centered(len: f64) -> Self {
        Self::interval(-0.5 * len, 0.5 * len).expect("finite nonnegative length")
    }

    pub fn parts(&self) -> &[(f64, f64)] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn measure(&self) -> f64 {
        self.parts.iter().map(|&(a, b)| b - a).sum()
    }

    pub fn contains(&self, t: f64) -> bool {
        self.parts.iter().any(|&(a, b)| a <= t && t < b)
    }

    pub fn shifted(&self, s: f64) -> Self {
        let raw: Vec<_> = self.parts.iter().map(|&(a, b)| (a + s, b + s)).collect();
        normalize_intervals(&raw).expect("shift of a canonical union")
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut all = self.parts.clone();
        all.extend_from_slice(&other.parts);
        IntervalUnion {
            parts: merge_sorted(all),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() && j < other.parts.len() {
            let (a1, b1) = self.parts[i];
            let (a2, b2) = other.parts[j];
            let lo = a1.max(a2);
            let hi = b1.min(b2);
            if lo < hi {
                out.push((lo, hi));
            }
            if b1 < b2 {
                i += 1;
            } else {
                j += 1;
            }
        }
        IntervalUnion {
            parts: merge_sorted(out),
        }
    }

    /// `self ∖ other`.
    pub fn difference(&self, other: &Self) -> Self {
        let mut out = Vec::new();
        for &(a, b) in &self.parts {
            let mut cur = a;
            for &(c, d) in &other.parts {
                if d <= cur || c >= b {
                    continue;
                }
                if c > cur {
                    out.push((cur, c));
                }
                cur = cur.max(d);
                if cur >= b {
                    break;
                }
            }
            if cur < b {
                out.push((cur, b));
            }
        }
        IntervalUnion {
            parts: merge_sorted(out),
        }
    }

    pub fn symmetric_difference(&self, other: &Self) -> Self {
        self.difference(other).union(&other.difference(self))
    }
}

/// `(u ∖ v) ∪ (v ∖ u)`.
pub fn symmetric_difference(u: &IntervalUnion, v: &IntervalUnion) -> IntervalUnion {
    u.symmetric_difference(v)
}

/// Turns a sorted run of indicator samples into intervals: each maximal run of
/// `inside` samples becomes `[t_first, t_after_last)`. A run reaching the last
/// sample is closed at that sample.
pub fn from_indicator(samples: &[(f64, bool)]) -> Result<IntervalUnion> {
    if samples.len() < 2 {
        return Err(Error::MalformedInput(
            "indicator needs at least two samples".into(),
        ));
    }
    if samples.windows(2).any(|w| !(w[0].0 < w[1].0)) {
        return Err(Error::MalformedInput(
            "indicator samples must be strictly increasing in t".into(),
        ));
    }
    let mut raw = Vec::new();
    let mut start: Option<f64> = None;
    for &(t, inside) in samples {
        match (inside, start) {
            (true, None) => start = Some(t),
            (false, Some(s)) => {
                raw.push((s, t));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        raw.push((s, samples[samples.len() - 1].0));
    }
    normalize_intervals(&raw)
}

/// `r` disjoint intervals of total length `total` placed inside `window`,
/// deterministic in `seed`.
pub fn random_union(r: usize, total: f64, window: (f64, f64), seed: u64) -> Result<IntervalUnion> {
    let mut rng = seeded(seed, 0);
    random_union_with(&mut rng, r, total, window)
}

pub(crate) fn random_union_with<R: Rng>(
    rng: &mut R,
    r: usize,
    total: f64,
    window: (f64, f64),
) -> Result<IntervalUnion> {
    let (lo, hi) = window;
    if r == 0 || !(total > 0.0) || !total.is_finite() || !(hi > lo) {
        return Err(Error::Infeasible(format!(
            "random union needs r >= 1, total > 0 and a proper window (r={r}, total={total}, window=({lo}, {hi}))"
        )));
    }
    let slack = (hi - lo) - total;
    if slack < 0.0 || (r > 1 && slack <= 0.0) {
        return Err(Error::Infeasible(format!(
            "window of width {} cannot hold {r} disjoint parts of total length {total}",
            hi - lo
        )));
    }
    let lens: Vec<f64> = (0..r).map(|_| rng.gen_range(0.25..1.0)).collect();
    let lsum: f64 = lens.iter().sum();
    // r+1 gaps; interior gaps are kept strictly positive so parts never merge.
    let gaps: Vec<f64> = (0..=r).map(|_| rng.gen_range(0.1..1.0)).collect();
    let gsum: f64 = gaps.iter().sum();

    let mut parts = Vec::with_capacity(r);
    let mut cursor = lo + slack * gaps[0] / gsum;
    let mut used = 0.0;
    for k in 0..r {
        let len = if k + 1 == r {
            total - used
        } else {
            total * lens[k] / lsum
        };
        used += len;
        let b = (cursor + len).min(hi);
        parts.push((cursor, b));
        cursor = b + slack * gaps[k + 1] / gsum;
    }
    let u = normalize_intervals(&parts)?;
    if u.len() != r || (u.measure() - total).abs() > 1e-12 * total.max(1.0) {
        return Err(Error::Infeasible(format!(
            "could not place {r} separated parts of length {total} in ({lo}, {hi}) at double precision"
        )));
    }
    Ok(u)
}

/// A canonical union of arcs `[α, β)` with `0 <= α < β <= 2π`.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "RawArcs", into = "RawArcs")]
pub struct ArcUnion {
    parts: Vec<(f64, f64)>,
}

#[derive(Serialize, Deserialize)]
struct RawArcs {
    arcs: Vec<[f64; 2]>,
}

impl TryFrom<RawArcs> for ArcUnion {
    type Error = Error;
    fn try_from(raw: RawArcs) -> Result<Self> {
        let pairs: Vec<(f64, f64)> = raw.arcs.iter().map(|p| (p[0], p[1])).collect();
        ArcUnion::new(&pairs)
    }
}

impl From<ArcUnion> for RawArcs {
    fn from(u: ArcUnion) -> Self {
        RawArcs {
            arcs: u.parts.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl ArcUnion {
    /// Builds a union from arcs given by angle pairs `(α, β)` with `α <= β`
    /// anywhere on the real line. Arcs longer than `2π` cover the circle.
    pub fn new(raw: &[(f64, f64)]) -> Result<Self> {
        let mut parts = Vec::with_capacity(raw.len() + 1);
        for &(a, b) in raw {
            if !a.is_finite() || !b.is_finite() {
                return Err(Error::MalformedInput(format!(
                    "non-finite arc endpoint in ({a}, {b})"
                )));
            }
            if a > b {
                return Err(Error::MalformedInput(format!("arc ({a}, {b}) has α > β")));
            }
            let len = b - a;
            if len == 0.0 {
                continue;
            }
            if len >= TAU {
                return Ok(Self::full_circle());
            }
            let start = a.rem_euclid(TAU);
            // rem_euclid may round up to exactly TAU
            let start = if start >= TAU { 0.0 } else { start };
            let end = start + len;
            if end > TAU {
                parts.push((start, TAU));
                parts.push((0.0, end - TAU));
            } else {
                parts.push((start, end));
            }
        }
        parts.retain(|&(a, b)| a < b);
        Ok(ArcUnion {
            parts: merge_sorted(parts),
        })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn full_circle() -> Self {
        ArcUnion {
            parts: vec![(0.0, TAU)],
        }
    }

    /// The symmetric arc `(-δ, δ)`.
    pub fn centered(delta: f64) -> Self {
        Self::new(&[(-delta, delta)]).expect("finite half-width")
    }

    pub fn parts(&self) -> &[(f64, f64)] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn measure(&self) -> f64 {
        self.parts.iter().map(|&(a, b)| b - a).sum()
    }

    /// Half the measure, the `δ` with `|Ω| = 2δ`.
    pub fn half_measure(&self) -> f64 {
        0.5 * self.measure()
    }

    /// `Ω + θ`.
    pub fn rotated(&self, theta: f64) -> Self {
        let raw: Vec<_> = self
            .parts
            .iter()
            .map(|&(a, b)| (a + theta, b + theta))
            .collect();
        Self::new(&raw).expect("rotation of a canonical union")
    }

    /// Number of connected components on the circle (an arc split at 0 counts once).
    pub fn components(&self) -> usize {
        let n = self.parts.len();
        if n >= 2 && self.parts[0].0 == 0.0 && self.parts[n - 1].1 == TAU {
            n - 1
        } else {
            n
        }
    }
}
