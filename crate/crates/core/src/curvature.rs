//! Angular-deficit Gaussian curvature, curvature energy and normals.

use std::f64::consts::PI;

use crate::exec::Executor;
use crate::{MeshTopology, TriangleMesh, Vec3};

/// Faces whose edge cross product is below this fraction of `|e1|·|e2|`
/// (sine of the corner angle) are treated as degenerate.
const DEGENERATE_SINE: f64 = 1e-14;

/// Relative magnitude under which an area-weighted normal sum is degenerate.
const DEGENERATE_NORMAL: f64 = 1e-14;

/// Unit normals and areas of every face.
#[derive(Debug, Clone)]
pub struct FaceGeometry {
    pub normals: Vec<Vec3>,
    pub areas: Vec<f64>,
    /// Zero-area faces; their normal is the zero vector.
    pub degenerate: Vec<bool>,
}

impl FaceGeometry {
    pub fn degenerate_count(&self) -> usize {
        self.degenerate.iter().filter(|&&d| d).count()
    }
}

/// Unit normal and area of one face, or `None` for the normal if degenerate.
#[inline]
pub(crate) fn face_normal_area(positions: &[Vec3], face: [usize; 3]) -> (Option<Vec3>, f64) {
    let a = positions[face[0]];
    let e1 = positions[face[1]] - a;
    let e2 = positions[face[2]] - a;
    let cross = e1.cross(&e2);
    let norm = cross.norm();
    let area = 0.5 * norm;
    if norm <= DEGENERATE_SINE * e1.norm() * e2.norm() || norm == 0.0 {
        (None, area)
    } else {
        (Some(cross / norm), area)
    }
}

pub fn face_normals(mesh: &TriangleMesh) -> FaceGeometry {
    let n = mesh.face_count();
    let mut geometry = FaceGeometry {
        normals: Vec::with_capacity(n),
        areas: Vec::with_capacity(n),
        degenerate: Vec::with_capacity(n),
    };
    for &face in mesh.faces() {
        let (normal, area) = face_normal_area(mesh.vertices(), face);
        geometry.normals.push(normal.unwrap_or_else(Vec3::zeros));
        geometry.areas.push(area);
        geometry.degenerate.push(normal.is_none());
    }
    geometry
}

/// Area-weighted vertex normal `normalize(Σ A_j n_j)` over the incident faces
/// of `v`, evaluated at `positions`. `None` when the sum vanishes.
pub(crate) fn vertex_normal_at(
    positions: &[Vec3],
    faces: &[[usize; 3]],
    topology: &MeshTopology,
    v: usize,
) -> Option<Vec3> {
    let mut sum = Vec3::zeros();
    let mut max_area = 0.0f64;
    for &f in topology.vertex_faces(v) {
        if let (Some(normal), area) = face_normal_area(positions, faces[f]) {
            sum += normal * area;
            max_area = max_area.max(area);
        }
    }
    let norm = sum.norm();
    if max_area == 0.0 || norm < DEGENERATE_NORMAL * max_area {
        None
    } else {
        Some(sum / norm)
    }
}

#[derive(Debug, Clone)]
pub struct VertexNormals {
    pub normals: Vec<Vec3>,
    /// Vertices with a vanishing weighted sum; their normal is zero.
    pub degenerate: Vec<bool>,
}

pub fn vertex_normals(mesh: &TriangleMesh, topology: &MeshTopology) -> VertexNormals {
    let (normals, degenerate) = (0..mesh.vertex_count())
        .map(
            |v| match vertex_normal_at(mesh.vertices(), mesh.faces(), topology, v) {
                Some(n) => (n, false),
                None => (Vec3::zeros(), true),
            },
        )
        .unzip();
    VertexNormals {
        normals,
        degenerate,
    }
}

/// Interior angle at `a` in triangle `(a, b, c)`.
#[inline]
pub fn corner_angle(a: &Vec3, b: &Vec3, c: &Vec3) -> f64 {
    let u = b - a;
    let w = c - a;
    u.cross(&w).norm().atan2(u.dot(&w))
}

/// Per-vertex angular deficit, one-ring area and Gaussian curvature.
#[derive(Debug, Clone)]
pub struct CurvatureField {
    /// `deficit / ring_area`, or 0 where the ring has no area.
    pub k: Vec<f64>,
    /// Sum of the areas of the incident triangles.
    pub ring_area: Vec<f64>,
    /// `2π − Σ θ` over incident triangles.
    pub deficit: Vec<f64>,
    /// Manifold, non-boundary vertices. Only these enter the default energy.
    pub interior: Vec<bool>,
}

impl CurvatureField {
    pub fn len(&self) -> usize {
        self.k.len()
    }

    pub fn is_empty(&self) -> bool {
        self.k.is_empty()
    }

    /// Curvature values of interior vertices, in index order.
    pub fn interior_values(&self) -> impl Iterator<Item = f64> + '_ {
        self.k
            .iter()
            .zip(&self.interior)
            .filter(|(_, &i)| i)
            .map(|(&k, _)| k)
    }

    pub fn total_deficit(&self) -> f64 {
        self.deficit.iter().sum()
    }
}

fn vertex_curvature(
    positions: &[Vec3],
    faces: &[[usize; 3]],
    topology: &MeshTopology,
    v: usize,
) -> (f64, f64, f64) {
    let mut angle_sum = 0.0;
    let mut area = 0.0;
    for &f in topology.vertex_faces(v) {
        let face = faces[f];
        let p = face.iter().position(|&x| x == v).expect("vertex in face");
        let a = positions[v];
        let b = positions[face[(p + 1) % 3]];
        let c = positions[face[(p + 2) % 3]];
        angle_sum += corner_angle(&a, &b, &c);
        area += 0.5 * (b - a).cross(&(c - a)).norm();
    }
    let deficit = 2.0 * PI - angle_sum;
    let k = if area > 0.0 { deficit / area } else { 0.0 };
    (k, area, deficit)
}

pub(crate) fn curvature_at(
    positions: &[Vec3],
    faces: &[[usize; 3]],
    topology: &MeshTopology,
    executor: &Executor,
) -> CurvatureField {
    let values = executor.map_range(positions.len(), |v| {
        vertex_curvature(positions, faces, topology, v)
    });
    let mut field = CurvatureField {
        k: Vec::with_capacity(values.len()),
        ring_area: Vec::with_capacity(values.len()),
        deficit: Vec::with_capacity(values.len()),
        interior: (0..positions.len())
            .map(|v| topology.is_interior(v))
            .collect(),
    };
    for (k, area, deficit) in values {
        field.k.push(k);
        field.ring_area.push(area);
        field.deficit.push(deficit);
    }
    field
}

pub fn gaussian_curvature(mesh: &TriangleMesh, topology: &MeshTopology) -> CurvatureField {
    curvature_at(
        mesh.vertices(),
        mesh.faces(),
        topology,
        &Executor::sequential(),
    )
}

/// Σ|K| over vertices; boundary and non-manifold vertices only when asked.
pub fn gaussian_curvature_energy(field: &CurvatureField, include_boundary: bool) -> f64 {
    field
        .k
        .iter()
        .zip(&field.interior)
        .filter(|(_, &interior)| include_boundary || interior)
        .map(|(k, _)| k.abs())
        .sum()
}

/// Euler characteristic `V − E + F`.
pub fn euler_characteristic(mesh: &TriangleMesh) -> i64 {
    mesh.vertex_count() as i64 - mesh.edges().len() as i64 + mesh.face_count() as i64
}
