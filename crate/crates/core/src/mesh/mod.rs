//! Triangle mesh storage, file I/O and one-ring topology.

mod io;
mod topology;

pub use io::{
    load_mesh, load_mesh_data, parse_mesh, save_mesh, save_mesh_data, write_mesh, MeshData,
    MeshFormat,
};
pub use topology::MeshTopology;

use thiserror::Error;

use crate::Vec3;

#[derive(Debug, Error)]
pub enum MeshError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("face {face} references vertex {index}, but the mesh has {count} vertices")]
    Index {
        face: usize,
        index: i64,
        count: usize,
    },
    #[error("face {face} repeats vertex {index}")]
    DegenerateFace { face: usize, index: usize },
    #[error("unsupported format: {0}")]
    UnsupportedFormat(String),
    #[error("{0}")]
    FormatCapability(String),
    #[error("attribute length {got} does not match vertex count {expected}")]
    AttributeLength { expected: usize, got: usize },
    #[error("mesh has no faces")]
    EmptyMesh,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Indexed triangle mesh. Face indices are 0-based and always in range.
#[derive(Debug, Clone, PartialEq)]
pub struct TriangleMesh {
    vertices: Vec<Vec3>,
    faces: Vec<[usize; 3]>,
}

impl TriangleMesh {
    /// Builds a mesh, rejecting out-of-range indices and faces that repeat a vertex.
    pub fn new(vertices: Vec<Vec3>, faces: Vec<[usize; 3]>) -> Result<Self, MeshError> {
        let count = vertices.len();
        for (f, face) in faces.iter().enumerate() {
            for &index in face {
                if index >= count {
                    return Err(MeshError::Index {
                        face: f,
                        index: index as i64,
                        count,
                    });
                }
            }
            if face[0] == face[1] || face[0] == face[2] {
                return Err(MeshError::DegenerateFace {
                    face: f,
                    index: face[0],
                });
            }
            if face[1] == face[2] {
                return Err(MeshError::DegenerateFace {
                    face: f,
                    index: face[1],
                });
            }
        }
        Ok(Self { vertices, faces })
    }

    pub fn vertices(&self) -> &[Vec3] {
        &self.vertices
    }

    pub fn faces(&self) -> &[[usize; 3]] {
        &self.faces
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    /// Returns a mesh with the same connectivity and new positions.
    ///
    /// # Panics
    ///
    /// Panics if `positions` does not have one entry per vertex.
    pub fn with_positions(&self, positions: Vec<Vec3>) -> Self {
        assert_eq!(
            positions.len(),
            self.vertices.len(),
            "position count must match vertex count"
        );
        Self {
            vertices: positions,
            faces: self.faces.clone(),
        }
    }

    /// Applies `f` to every vertex position.
    pub fn map_positions(&self, f: impl Fn(&Vec3) -> Vec3) -> Self {
        self.with_positions(self.vertices.iter().map(f).collect())
    }

    /// Unique undirected edges as `(lo, hi)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges: Vec<(usize, usize)> = self
            .faces
            .iter()
            .flat_map(|f| [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])])
            .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    pub fn stats(&self) -> Result<MeshStats, MeshError> {
        MeshStats::compute(self)
    }
}

/// Summary sizes and the mean edge length `e_l` that scales every tolerance.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct MeshStats {
    pub mean_edge_length: f64,
    pub vertex_count: usize,
    pub face_count: usize,
    pub edge_count: usize,
    pub boundary_vertex_count: usize,
}

impl MeshStats {
    pub fn compute(mesh: &TriangleMesh) -> Result<Self, MeshError> {
        let mean_edge_length = mean_edge_length(mesh)?;
        let topology = MeshTopology::build(mesh);
        Ok(Self {
            mean_edge_length,
            vertex_count: mesh.vertex_count(),
            face_count: mesh.face_count(),
            edge_count: mesh.edges().len(),
            boundary_vertex_count: (0..mesh.vertex_count())
                .filter(|&v| topology.is_boundary(v))
                .count(),
        })
    }
}

/// Mean length over unique undirected edges.
pub fn mean_edge_length(mesh: &TriangleMesh) -> Result<f64, MeshError> {
    if mesh.faces.is_empty() {
        return Err(MeshError::EmptyMesh);
    }
    let edges = mesh.edges();
    let total: f64 = edges
        .iter()
        .map(|&(a, b)| (mesh.vertices[a] - mesh.vertices[b]).norm())
        .sum();
    Ok(total / edges.len() as f64)
}
