//! The Gaussian curvature filter.
//!
//! One step visits the color classes of a [`DomainColoring`] in ascending
//! label order. Every interior vertex `v` of the class moves to
//!
//! ```text
//! v' = v + d · δ,   δ = −(v − centroid(ring)) / |v − centroid(ring)|
//! d  = min |⟨n, u − v⟩|  over n ∈ {n_v, n_1..n_m}, u ∈ ring
//! ```
//!
//! where `n_v` is the area-weighted vertex normal and `n_k` is the unit
//! normal spanned by the ring neighbors on either side of the k-th neighbor.
//! If any of those normals is orthogonal to any ring edge (planes, creases,
//! corners, developable strips) `d` is zero and the vertex stays put.
//!
//! Within a class all vertices read the positions as they stood when the
//! class started; classes run one after another on the shared position
//! array. Vertices of one class are never adjacent and each update only
//! reads its own ring, so the result does not depend on how the class is
//! split across workers.

use thiserror::Error;

use crate::coloring::DomainColoring;
use crate::curvature::{curvature_at, gaussian_curvature_energy, vertex_normal_at};
use crate::exec::{ExecError, Execution, Executor};
use crate::mesh::{mean_edge_length, MeshError};
use crate::{MeshTopology, TriangleMesh, Vec3};

/// Relative scale (times `e_l`, or `e_l²` for areas) under which a
/// differential coordinate or a neighbor normal counts as zero.
pub const DEGENERACY_TOLERANCE: f64 = 1e-14;

#[derive(Debug, Error)]
pub enum FilterError {
    #[error("iteration count must be at least 1")]
    ZeroIterations,
    #[error("topology has {topology} vertices but the mesh has {mesh}")]
    TopologyMismatch { mesh: usize, topology: usize },
    #[error("coloring covers {coloring} vertices but the mesh has {mesh}")]
    ColoringMismatch { mesh: usize, coloring: usize },
    #[error(transparent)]
    Mesh(#[from] MeshError),
    #[error(transparent)]
    Exec(#[from] ExecError),
}

/// Every normal in the candidate set was degenerate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("vertex {0} has no usable normal in its neighborhood")]
pub struct DegenerateNeighborhood(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct FilterConfig {
    /// Number of full sweeps. The only parameter of the filter.
    pub iterations: usize,
    /// Worker count; 0 picks the available parallelism, 1 runs sequentially.
    pub threads: usize,
    /// Record the interior curvature energy before and after every sweep.
    pub capture_trace: bool,
}

impl FilterConfig {
    pub fn new(iterations: usize) -> Self {
        Self {
            iterations,
            threads: 0,
            capture_trace: false,
        }
    }

    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }

    pub fn with_trace(mut self, capture: bool) -> Self {
        self.capture_trace = capture;
        self
    }
}

/// Interior curvature energy per sweep; entry 0 is the input mesh.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct FilterTrace {
    pub gce_per_iteration: Vec<f64>,
}

/// Reversed, normalized differential coordinate of `v`.
///
/// `None` if `v` has no neighbors or sits within `1e-14·e_l` of its ring centroid.
pub fn moving_direction(
    v: usize,
    positions: &[Vec3],
    topology: &MeshTopology,
    mean_edge: f64,
) -> Option<Vec3> {
    let ring = topology.neighbors(v);
    if ring.is_empty() {
        return None;
    }
    let mut centroid = Vec3::zeros();
    for &u in ring {
        centroid += positions[u];
    }
    centroid /= ring.len() as f64;
    let delta = positions[v] - centroid;
    let norm = delta.norm();
    if norm < DEGENERACY_TOLERANCE * mean_edge {
        None
    } else {
        Some(-delta / norm)
    }
}

/// Unit normal at the k-th entry of a closed `ring`, spanned by the edges to
/// its cyclic predecessor and successor. `None` when those edges are collinear.
pub fn neighbor_normal(
    ring: &[usize],
    k: usize,
    positions: &[Vec3],
    mean_edge: f64,
) -> Option<Vec3> {
    let m = ring.len();
    let here = positions[ring[k]];
    let prev = positions[ring[(k + m - 1) % m]];
    let next = positions[ring[(k + 1) % m]];
    let cross = (prev - here).cross(&(next - here));
    let norm = cross.norm();
    if norm < DEGENERACY_TOLERANCE * mean_edge * mean_edge {
        None
    } else {
        Some(cross / norm)
    }
}

/// Smallest `|⟨n, u − v⟩|` over the vertex normal plus every neighbor normal
/// and every ring edge of `v`. Expects `v` to be interior.
pub fn min_projection_distance(
    v: usize,
    positions: &[Vec3],
    topology: &MeshTopology,
    vertex_normal: Option<Vec3>,
    mean_edge: f64,
) -> Result<f64, DegenerateNeighborhood> {
    let ring = topology.neighbors(v);
    let center = positions[v];
    let mut best = f64::INFINITY;
    let mut any_normal = false;
    let mut project = |n: &Vec3| {
        any_normal = true;
        for &u in ring {
            let d = n.dot(&(positions[u] - center)).abs();
            if d < best {
                best = d;
            }
        }
    };
    if let Some(n) = vertex_normal {
        project(&n);
    }
    for k in 0..ring.len() {
        if let Some(n) = neighbor_normal(ring, k, positions, mean_edge) {
            project(&n);
        }
    }
    if any_normal {
        Ok(best)
    } else {
        Err(DegenerateNeighborhood(v))
    }
}

/// New position of `v` for one filter update. Boundary, non-manifold and
/// degenerate vertices return their current position unchanged.
pub fn updated_position(
    v: usize,
    positions: &[Vec3],
    faces: &[[usize; 3]],
    topology: &MeshTopology,
    mean_edge: f64,
) -> Vec3 {
    let current = positions[v];
    if !topology.is_interior(v) {
        return current;
    }
    let Some(direction) = moving_direction(v, positions, topology, mean_edge) else {
        return current;
    };
    let normal = vertex_normal_at(positions, faces, topology, v);
    match min_projection_distance(v, positions, topology, normal, mean_edge) {
        Ok(distance) => current + direction * distance,
        Err(_) => current,
    }
}

/// A filter bound to one mesh connectivity and update schedule.
#[derive(Debug)]
pub struct GaussianCurvatureFilter<'a> {
    faces: &'a [[usize; 3]],
    topology: &'a MeshTopology,
    /// Domains restricted to the vertices that can move.
    schedule: Vec<Vec<usize>>,
    mean_edge: f64,
    executor: Executor,
}

impl<'a> GaussianCurvatureFilter<'a> {
    /// `mesh` fixes the connectivity and the length scale `e_l` used by all
    /// degeneracy tolerances.
    pub fn new(
        mesh: &'a TriangleMesh,
        topology: &'a MeshTopology,
        coloring: &DomainColoring,
        execution: Execution,
    ) -> Result<Self, FilterError> {
        if topology.vertex_count() != mesh.vertex_count() {
            return Err(FilterError::TopologyMismatch {
                mesh: mesh.vertex_count(),
                topology: topology.vertex_count(),
            });
        }
        if coloring.labels().len() != mesh.vertex_count() {
            return Err(FilterError::ColoringMismatch {
                mesh: mesh.vertex_count(),
                coloring: coloring.labels().len(),
            });
        }
        let schedule = coloring
            .domains()
            .iter()
            .map(|d| {
                d.iter()
                    .copied()
                    .filter(|&v| topology.is_interior(v))
                    .collect::<Vec<_>>()
            })
            .filter(|d| !d.is_empty())
            .collect();
        Ok(Self {
            faces: mesh.faces(),
            topology,
            schedule,
            mean_edge: mean_edge_length(mesh)?,
            executor: Executor::new(execution)?,
        })
    }

    pub fn mean_edge_length(&self) -> f64 {
        self.mean_edge
    }

    pub fn workers(&self) -> usize {
        self.executor.workers()
    }

    /// One sweep over all domains, in place.
    pub fn step(&self, positions: &mut [Vec3]) {
        for domain in &self.schedule {
            let snapshot: &[Vec3] = positions;
            let updates = self.executor.map(domain, |v| {
                updated_position(v, snapshot, self.faces, self.topology, self.mean_edge)
            });
            for (&v, p) in domain.iter().zip(updates) {
                positions[v] = p;
            }
        }
    }

    /// Interior curvature energy at `positions`.
    pub fn energy(&self, positions: &[Vec3]) -> f64 {
        let field = curvature_at(positions, self.faces, self.topology, &self.executor);
        gaussian_curvature_energy(&field, false)
    }

    /// Runs `iterations` sweeps, optionally tracing the energy.
    pub fn run(
        &self,
        positions: &mut [Vec3],
        iterations: usize,
        trace: bool,
    ) -> Option<FilterTrace> {
        let mut gce = trace.then(|| {
            let mut v = Vec::with_capacity(iterations + 1);
            v.push(self.energy(positions));
            v
        });
        for _ in 0..iterations {
            self.step(positions);
            if let Some(g) = gce.as_mut() {
                g.push(self.energy(positions));
            }
        }
        gce.map(|gce_per_iteration| FilterTrace { gce_per_iteration })
    }
}

/// One sequential sweep; `e_l` is taken from `mesh`.
pub fn gcf_step(
    mesh: &TriangleMesh,
    topology: &MeshTopology,
    coloring: &DomainColoring,
) -> Result<TriangleMesh, FilterError> {
    let filter = GaussianCurvatureFilter::new(mesh, topology, coloring, Execution::Sequential)?;
    let mut positions = mesh.vertices().to_vec();
    filter.step(&mut positions);
    Ok(mesh.with_positions(positions))
}

/// Applies `config.iterations` sweeps to a copy of `mesh`.
pub fn gcf_filter(
    mesh: &TriangleMesh,
    topology: &MeshTopology,
    coloring: &DomainColoring,
    config: &FilterConfig,
) -> Result<(TriangleMesh, Option<FilterTrace>), FilterError> {
    if config.iterations == 0 {
        return Err(FilterError::ZeroIterations);
    }
    let execution = Execution::from_thread_count(config.threads);
    let filter = GaussianCurvatureFilter::new(mesh, topology, coloring, execution)?;
    let mut positions = mesh.vertices().to_vec();
    let trace = filter.run(&mut positions, config.iterations, config.capture_trace);
    Ok((mesh.with_positions(positions), trace))
}
