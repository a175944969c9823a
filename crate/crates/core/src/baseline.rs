//! Umbrella-operator Laplacian and Taubin λ|μ smoothing, used as reference
//! smoothers. Boundary and non-manifold vertices stay fixed.

use serde::Serialize;
use thiserror::Error;

use crate::{MeshTopology, TriangleMesh, Vec3};

#[derive(Debug, Error, PartialEq)]
pub enum BaselineError {
    #[error("lambda must lie in (0, 1], got {0}")]
    BadLambda(f64),
    #[error("mu must be 0 or below -lambda ({lambda}), got {mu}")]
    BadMu { lambda: f64, mu: f64 },
}

pub const DEFAULT_LAPLACIAN_ITERATIONS: usize = 10;
pub const DEFAULT_LAMBDA: f64 = 0.5;
pub const DEFAULT_MU: f64 = -0.53;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LaplacianParams {
    pub iterations: usize,
    pub lambda: f64,
}

impl Default for LaplacianParams {
    fn default() -> Self {
        Self {
            iterations: DEFAULT_LAPLACIAN_ITERATIONS,
            lambda: DEFAULT_LAMBDA,
        }
    }
}

/// One Jacobi umbrella pass: `v ← v + factor·(centroid(ring) − v)`.
fn umbrella_pass(positions: &[Vec3], topology: &MeshTopology, factor: f64) -> Vec<Vec3> {
    (0..positions.len())
        .map(|v| {
            let p = positions[v];
            let ring = topology.neighbors(v);
            if !topology.is_interior(v) || ring.is_empty() {
                return p;
            }
            let centroid = ring.iter().map(|&u| positions[u]).sum::<Vec3>() / ring.len() as f64;
            p + (centroid - p) * factor
        })
        .collect()
}

/// `iterations` umbrella passes with step `lambda` in `[0, 1]`.
/// `lambda = 0` returns the input unchanged.
pub fn laplacian_smooth(
    mesh: &TriangleMesh,
    topology: &MeshTopology,
    iterations: usize,
    lambda: f64,
) -> Result<TriangleMesh, BaselineError> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(BaselineError::BadLambda(lambda));
    }
    let mut positions = mesh.vertices().to_vec();
    if lambda > 0.0 {
        for _ in 0..iterations {
            positions = umbrella_pass(&positions, topology, lambda);
        }
    }
    Ok(mesh.with_positions(positions))
}

/// Taubin smoothing: each iteration is a `lambda` pass followed by a `mu`
/// pass. `mu = 0` reduces to [`laplacian_smooth`]; otherwise `mu < -lambda`.
pub fn taubin_smooth(
    mesh: &TriangleMesh,
    topology: &MeshTopology,
    iterations: usize,
    lambda: f64,
    mu: f64,
) -> Result<TriangleMesh, BaselineError> {
    if !(lambda > 0.0 && lambda <= 1.0) {
        return Err(BaselineError::BadLambda(lambda));
    }
    if !(mu == 0.0 || mu < -lambda) {
        return Err(BaselineError::BadMu { lambda, mu });
    }
    let mut positions = mesh.vertices().to_vec();
    for _ in 0..iterations {
        positions = umbrella_pass(&positions, topology, lambda);
        if mu != 0.0 {
            positions = umbrella_pass(&positions, topology, mu);
        }
    }
    Ok(mesh.with_positions(positions))
}
