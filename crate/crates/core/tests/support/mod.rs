#![allow(dead_code)]

pub mod oracle;

use gcf_core::noise::{add_noise, NoiseConfig, NoiseMode};
use gcf_core::{generate, MeshTopology, TriangleMesh, Vec3};

/// Small meshes (at most 200 vertices) with seeded random perturbations.
pub fn random_small_mesh(seed: u64) -> TriangleMesh {
    let base = match seed % 4 {
        0 => generate::icosphere(2).unwrap(),
        1 => generate::cube(4).unwrap(),
        2 => generate::grid(10, 0.2).unwrap(),
        _ => generate::cylinder(12, 6).unwrap(),
    };
    let topo = MeshTopology::build(&base);
    let sigma = 0.05 + 0.1 * ((seed / 4) % 4) as f64;
    let config = NoiseConfig::new(sigma, seed).with_mode(NoiseMode::Isotropic);
    add_noise(&base, &topo, &config).unwrap()
}

pub fn max_coordinate_difference(a: &[Vec3], b: &[Vec3]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(p, q)| (p - q).amax())
        .fold(0.0, f64::max)
}
