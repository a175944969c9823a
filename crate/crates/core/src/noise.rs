//! Seeded Gaussian vertex noise scaled by the mean edge length.
//!
//! Samples come from ChaCha8 seeded with `seed_from_u64(seed)` and standard
//! normals drawn with `rand_distr::StandardNormal`, one draw per vertex
//! (along the normal) or three (isotropic), in vertex order. The stream is
//! sequential, so outputs are reproducible across platforms and runs.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;
use thiserror::Error;

use crate::curvature::vertex_normals;
use crate::mesh::{mean_edge_length, MeshError};
use crate::{MeshTopology, TriangleMesh, Vec3};

#[derive(Debug, Error)]
pub enum NoiseError {
    #[error("noise factor must be finite and non-negative, got {0}")]
    BadSigma(f64),
    #[error(transparent)]
    Mesh(#[from] MeshError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NoiseMode {
    /// Scalar offset along the unit vertex normal.
    #[default]
    AlongNormal,
    /// Independent offset on each coordinate.
    Isotropic,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct NoiseConfig {
    /// Standard deviation as a multiple of the mean edge length.
    pub sigma_factor: f64,
    pub seed: u64,
    pub mode: NoiseMode,
}

impl NoiseConfig {
    pub fn new(sigma_factor: f64, seed: u64) -> Self {
        Self {
            sigma_factor,
            seed,
            mode: NoiseMode::AlongNormal,
        }
    }

    pub fn with_mode(mut self, mode: NoiseMode) -> Self {
        self.mode = mode;
        self
    }
}

/// Returns a copy of `mesh` with zero-mean Gaussian offsets of standard
/// deviation `sigma_factor · e_l`. Vertices without a usable normal still
/// consume their draw but are not moved in `AlongNormal` mode.
pub fn add_noise(
    mesh: &TriangleMesh,
    topology: &MeshTopology,
    config: &NoiseConfig,
) -> Result<TriangleMesh, NoiseError> {
    if !(config.sigma_factor >= 0.0 && config.sigma_factor.is_finite()) {
        return Err(NoiseError::BadSigma(config.sigma_factor));
    }
    let sigma = config.sigma_factor * mean_edge_length(mesh)?;
    if sigma == 0.0 {
        return Ok(mesh.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut sample = || -> f64 { StandardNormal.sample(&mut rng) };
    let positions = match config.mode {
        NoiseMode::AlongNormal => {
            let normals = vertex_normals(mesh, topology).normals;
            mesh.vertices()
                .iter()
                .zip(&normals)
                .map(|(p, n)| p + n * (sigma * sample()))
                .collect()
        }
        NoiseMode::Isotropic => mesh
            .vertices()
            .iter()
            .map(|p| {
                let offset = Vec3::new(sample(), sample(), sample());
                p + offset * sigma
            })
            .collect(),
    };
    Ok(mesh.with_positions(positions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn zero_sigma_is_identity() {
        let mesh = generate::icosphere(2).unwrap();
        let topo = MeshTopology::build(&mesh);
        let out = add_noise(&mesh, &topo, &NoiseConfig::new(0.0, 9)).unwrap();
        assert_eq!(out, mesh);
    }

    #[test]
    fn same_seed_same_output() {
        let mesh = generate::icosphere(2).unwrap();
        let topo = MeshTopology::build(&mesh);
        for mode in [NoiseMode::AlongNormal, NoiseMode::Isotropic] {
            let cfg = NoiseConfig::new(0.3, 42).with_mode(mode);
            let a = add_noise(&mesh, &topo, &cfg).unwrap();
            let b = add_noise(&mesh, &topo, &cfg).unwrap();
            assert_eq!(a, b);
            assert_ne!(a, mesh);
            let c = add_noise(&mesh, &topo, &NoiseConfig::new(0.3, 43).with_mode(mode)).unwrap();
            assert_ne!(a, c);
        }
    }

    #[test]
    fn normal_offsets_have_requested_spread() {
        let mesh = generate::icosphere(5).unwrap();
        assert!(mesh.vertex_count() >= 10_000);
        let topo = MeshTopology::build(&mesh);
        let e_l = mean_edge_length(&mesh).unwrap();
        let noisy = add_noise(&mesh, &topo, &NoiseConfig::new(0.3, 7)).unwrap();
        let normals = vertex_normals(&mesh, &topo).normals;
        let offsets: Vec<f64> = noisy
            .vertices()
            .iter()
            .zip(mesh.vertices())
            .zip(&normals)
            .map(|((q, p), n)| (q - p).dot(n))
            .collect();
        let n = offsets.len() as f64;
        let mean = offsets.iter().sum::<f64>() / n;
        let sd = (offsets.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)).sqrt();
        assert!(
            (sd / (0.3 * e_l) - 1.0).abs() < 0.05,
            "sd {sd} vs {}",
            0.3 * e_l
        );
        // Every offset is along the normal.
        for ((q, p), nrm) in noisy.vertices().iter().zip(mesh.vertices()).zip(&normals) {
            assert!((q - p).cross(nrm).norm() < 1e-12);
        }
    }

    #[test]
    fn negative_sigma_rejected() {
        let mesh = generate::icosphere(0).unwrap();
        let topo = MeshTopology::build(&mesh);
        assert!(matches!(
            add_noise(&mesh, &topo, &NoiseConfig::new(-0.1, 1)),
            Err(NoiseError::BadSigma(_))
        ));
    }
}
