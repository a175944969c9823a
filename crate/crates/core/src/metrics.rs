//! Evaluation metrics: normal angle error, vertex distances, curvature
//! histograms with their KL divergence, and the average convergence slope.

use serde::Serialize;
use thiserror::Error;

use crate::curvature::{face_normals, CurvatureField};
use crate::filter::FilterTrace;
use crate::{TriangleMesh, Vec3};

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("meshes do not share connectivity")]
    ConnectivityMismatch,
    #[error("vertex counts differ: {0} vs {1}")]
    CountMismatch(usize, usize),
    #[error("no samples to bin")]
    EmptyField,
    #[error("histograms use different bin edges")]
    EdgeMismatch,
    #[error("histogram needs at least 2 bins, got {0}")]
    TooFewBins(usize),
    #[error("clip percentile must lie in (0, 100], got {0}")]
    BadPercentile(f64),
    #[error("trace {index} has {len} entries, at least 4 are needed")]
    TraceTooShort { index: usize, len: usize },
    #[error("no usable slope terms ({skipped} skipped)")]
    AcsUndefined { skipped: usize },
}

/// Mean angle between corresponding face normals, in degrees.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AngleError {
    pub degrees: f64,
    /// Faces degenerate in either mesh, left out of the mean.
    pub excluded_faces: usize,
}

/// Mean over faces of `∠(n_processed, n_original)` via atan2, in degrees.
pub fn msae(processed: &TriangleMesh, original: &TriangleMesh) -> Result<AngleError, MetricsError> {
    if processed.faces() != original.faces() {
        return Err(MetricsError::ConnectivityMismatch);
    }
    let p = face_normals(processed);
    let o = face_normals(original);
    let mut sum = 0.0;
    let mut count = 0usize;
    for f in 0..processed.face_count() {
        if p.degenerate[f] || o.degenerate[f] {
            continue;
        }
        let (a, b) = (p.normals[f], o.normals[f]);
        sum += a.cross(&b).norm().atan2(a.dot(&b));
        count += 1;
    }
    let degrees = if count == 0 {
        0.0
    } else {
        (sum / count as f64).to_degrees()
    };
    Ok(AngleError {
        degrees,
        excluded_faces: processed.face_count() - count,
    })
}

/// Mean and max Euclidean distance between same-index vertices.
pub fn vertex_distances(a: &TriangleMesh, b: &TriangleMesh) -> Result<(f64, f64), MetricsError> {
    vertex_distances_of(a.vertices(), b.vertices(), |_| true)
}

/// Like [`vertex_distances`], restricted to the vertices accepted by `keep`.
pub fn vertex_distances_of(
    a: &[Vec3],
    b: &[Vec3],
    keep: impl Fn(usize) -> bool,
) -> Result<(f64, f64), MetricsError> {
    if a.len() != b.len() {
        return Err(MetricsError::CountMismatch(a.len(), b.len()));
    }
    let mut sum = 0.0;
    let mut max = 0.0f64;
    let mut count = 0usize;
    for (i, (p, q)) in a.iter().zip(b).enumerate() {
        if keep(i) {
            let d = (p - q).norm();
            sum += d;
            max = max.max(d);
            count += 1;
        }
    }
    let mean = if count == 0 { 0.0 } else { sum / count as f64 };
    Ok((mean, max))
}

pub const DEFAULT_BINS: usize = 200;
pub const DEFAULT_CLIP_PERCENTILE: f64 = 99.0;
/// Additive smoothing applied to both distributions before the KL sum.
pub const KLD_EPSILON: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    /// `bins + 1` strictly ascending edges.
    pub bin_edges: Vec<f64>,
    /// Probability per bin, summing to 1.
    pub probs: Vec<f64>,
}

impl Histogram {
    /// Uniform bins over `[-range, range]`; samples outside land in the end bins.
    pub fn symmetric(samples: &[f64], range: f64, bins: usize) -> Result<Self, MetricsError> {
        if bins < 2 {
            return Err(MetricsError::TooFewBins(bins));
        }
        let edges = (0..=bins)
            .map(|i| -range + 2.0 * range * i as f64 / bins as f64)
            .collect();
        Self::with_edges(samples, edges)
    }

    /// Bins `samples` on the given edges, clamping out-of-range values.
    pub fn with_edges(samples: &[f64], bin_edges: Vec<f64>) -> Result<Self, MetricsError> {
        let bins = bin_edges.len().saturating_sub(1);
        if bins < 2 {
            return Err(MetricsError::TooFewBins(bins));
        }
        if samples.is_empty() {
            return Err(MetricsError::EmptyField);
        }
        let mut counts = vec![0usize; bins];
        for &s in samples {
            // First edge strictly greater than s, minus one; clamped.
            let upper = bin_edges.partition_point(|&e| e <= s);
            let bin = upper.saturating_sub(1).min(bins - 1);
            counts[bin] += 1;
        }
        let total = samples.len() as f64;
        Ok(Self {
            bin_edges,
            probs: counts.into_iter().map(|c| c as f64 / total).collect(),
        })
    }

    pub fn bins(&self) -> usize {
        self.probs.len()
    }
}

/// Nearest-rank percentile of `values` (`p` in (0, 100]).
pub fn percentile(values: &[f64], p: f64) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let rank = ((p / 100.0) * sorted.len() as f64).ceil() as usize;
    Some(sorted[rank.clamp(1, sorted.len()) - 1])
}

/// Half-width of the symmetric histogram range for a curvature field:
/// the `clip_percentile` of `|K|` over interior vertices, or 1 if that is 0.
pub fn curvature_range(field: &CurvatureField, clip_percentile: f64) -> Result<f64, MetricsError> {
    if !(clip_percentile > 0.0 && clip_percentile <= 100.0) {
        return Err(MetricsError::BadPercentile(clip_percentile));
    }
    let magnitudes: Vec<f64> = field.interior_values().map(f64::abs).collect();
    let c = percentile(&magnitudes, clip_percentile).ok_or(MetricsError::EmptyField)?;
    Ok(if c > 0.0 && c.is_finite() { c } else { 1.0 })
}

/// Histogram of interior-vertex curvature over `[-c, c]`, `c` from [`curvature_range`].
pub fn curvature_histogram(
    field: &CurvatureField,
    bins: usize,
    clip_percentile: f64,
) -> Result<Histogram, MetricsError> {
    let range = curvature_range(field, clip_percentile)?;
    let samples: Vec<f64> = field.interior_values().collect();
    Histogram::symmetric(&samples, range, bins)
}

/// Histogram of interior-vertex curvature on existing edges (for comparing
/// a test mesh against a reference histogram).
pub fn curvature_histogram_on(
    field: &CurvatureField,
    bin_edges: &[f64],
) -> Result<Histogram, MetricsError> {
    let samples: Vec<f64> = field.interior_values().collect();
    Histogram::with_edges(&samples, bin_edges.to_vec())
}

/// `KL(p ‖ q)` in nats, after adding [`KLD_EPSILON`] to every bin of both
/// and renormalizing.
pub fn kld(p: &Histogram, q: &Histogram) -> Result<f64, MetricsError> {
    if p.bin_edges != q.bin_edges {
        return Err(MetricsError::EdgeMismatch);
    }
    let smooth = |h: &Histogram| -> Vec<f64> {
        let total: f64 = h.probs.iter().map(|x| x + KLD_EPSILON).sum();
        h.probs.iter().map(|x| (x + KLD_EPSILON) / total).collect()
    };
    let (ps, qs) = (smooth(p), smooth(q));
    let sum: f64 = ps.iter().zip(&qs).map(|(a, b)| a * (a / b).ln()).sum();
    Ok(sum.max(0.0))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConvergenceSlope {
    pub value: f64,
    /// Slope terms averaged into `value`.
    pub terms: usize,
    /// Terms dropped because an energy difference was zero or not finite.
    pub skipped: usize,
}

/// Average convergence slope over energy traces.
///
/// With `E(t)` the trace entry after `t` sweeps (`E(0)` the input), each
/// term for `t = 2..N-1` is
/// `log10(|E(t+1) − E(t)| / |E(t) − E(t−1)|) / (log10(t+1) − log10(t))`,
/// the log-log slope of the successive energy decrements. The result is
/// the mean over all usable terms of all traces.
pub fn acs(traces: &[FilterTrace]) -> Result<ConvergenceSlope, MetricsError> {
    let mut sum = 0.0;
    let mut terms = 0usize;
    let mut skipped = 0usize;
    for (index, trace) in traces.iter().enumerate() {
        let e = &trace.gce_per_iteration;
        if e.len() < 4 {
            return Err(MetricsError::TraceTooShort {
                index,
                len: e.len(),
            });
        }
        let n = e.len() - 1;
        for t in 2..n {
            let before = (e[t] - e[t - 1]).abs();
            let after = (e[t + 1] - e[t]).abs();
            let slope = (after / before).log10() / ((t as f64 + 1.0).log10() - (t as f64).log10());
            if before == 0.0 || after == 0.0 || !slope.is_finite() {
                skipped += 1;
            } else {
                sum += slope;
                terms += 1;
            }
        }
    }
    if terms == 0 {
        return Err(MetricsError::AcsUndefined { skipped });
    }
    Ok(ConvergenceSlope {
        value: sum / terms as f64,
        terms,
        skipped,
    })
}
