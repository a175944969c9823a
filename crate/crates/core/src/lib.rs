//! Gaussian curvature filtering for triangle meshes.
//!
//! The filter moves each interior vertex along its reversed differential
//! coordinate by the smallest absolute projection of its one-ring edges onto
//! a set of local normals. Vertices sitting on planes, creases, corners or
//! developable patches have a zero projection and stay put, so the filter
//! smooths noise while keeping sharp features.
//!
//! Updates are scheduled by a greedy vertex coloring: vertices of one color
//! share no edge and can be moved concurrently. With the `parallel` feature
//! (on by default) each color class is processed on a rayon pool; without it
//! every pass runs sequentially. Both paths produce bitwise identical output.
//!
//! ```
//! use gcf_core::{generate, filter::{gcf_filter, FilterConfig}, coloring::greedy_domain_decomposition, MeshTopology};
//!
//! let mesh = generate::icosphere(2).unwrap();
//! let topology = MeshTopology::build(&mesh);
//! let coloring = greedy_domain_decomposition(&topology);
//! let (smoothed, _) = gcf_filter(&mesh, &topology, &coloring, &FilterConfig::new(5)).unwrap();
//! assert_eq!(smoothed.face_count(), mesh.face_count());
//! ```

pub mod baseline;
pub mod coloring;
pub mod curvature;
pub mod exec;
pub mod filter;
pub mod generate;
pub mod mesh;
pub mod metrics;
pub mod noise;

pub use mesh::{MeshError, MeshStats, MeshTopology, TriangleMesh};

/// Double-precision 3-vector used for positions, edges and normals.
pub type Vec3 = nalgebra::Vector3<f64>;
