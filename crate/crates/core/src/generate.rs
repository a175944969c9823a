//! Procedural test meshes. Closed meshes are wound counter-clockwise seen
//! from outside, so face normals point outward.

use std::collections::HashMap;
use std::f64::consts::PI;

use thiserror::Error;

use crate::{TriangleMesh, Vec3};

#[derive(Debug, Error, PartialEq)]
pub enum GenerateError {
    #[error("bad resolution: {0}")]
    BadResolution(String),
}

fn require(ok: bool, what: impl FnOnce() -> String) -> Result<(), GenerateError> {
    if ok {
        Ok(())
    } else {
        Err(GenerateError::BadResolution(what()))
    }
}

fn build(vertices: Vec<Vec3>, faces: Vec<[usize; 3]>) -> TriangleMesh {
    TriangleMesh::new(vertices, faces).expect("generator emits valid indices")
}

/// Regular tetrahedron with the given edge length, centered at the origin.
pub fn tetrahedron(edge: f64) -> TriangleMesh {
    let s = edge / (2.0 * 2f64.sqrt());
    build(
        vec![
            Vec3::new(s, s, s),
            Vec3::new(s, -s, -s),
            Vec3::new(-s, s, -s),
            Vec3::new(-s, -s, s),
        ],
        vec![[0, 1, 2], [0, 3, 1], [0, 2, 3], [1, 3, 2]],
    )
}

/// Unit-radius icosphere: an icosahedron with each face split into four
/// `subdivisions` times, every new vertex projected onto the sphere.
/// Has `10·4^s + 2` vertices and `20·4^s` faces.
pub fn icosphere(subdivisions: u32) -> Result<TriangleMesh, GenerateError> {
    require(subdivisions <= 10, || {
        format!("icosphere subdivision {subdivisions} exceeds 10")
    })?;
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let mut vertices: Vec<Vec3> = [
        (-1.0, phi, 0.0),
        (1.0, phi, 0.0),
        (-1.0, -phi, 0.0),
        (1.0, -phi, 0.0),
        (0.0, -1.0, phi),
        (0.0, 1.0, phi),
        (0.0, -1.0, -phi),
        (0.0, 1.0, -phi),
        (phi, 0.0, -1.0),
        (phi, 0.0, 1.0),
        (-phi, 0.0, -1.0),
        (-phi, 0.0, 1.0),
    ]
    .iter()
    .map(|&(x, y, z)| Vec3::new(x, y, z).normalize())
    .collect();
    let mut faces: Vec<[usize; 3]> = vec![
        [0, 11, 5],
        [0, 5, 1],
        [0, 1, 7],
        [0, 7, 10],
        [0, 10, 11],
        [1, 5, 9],
        [5, 11, 4],
        [11, 10, 2],
        [10, 7, 6],
        [7, 1, 8],
        [3, 9, 4],
        [3, 4, 2],
        [3, 2, 6],
        [3, 6, 8],
        [3, 8, 9],
        [4, 9, 5],
        [2, 4, 11],
        [6, 2, 10],
        [8, 6, 7],
        [9, 8, 1],
    ];
    for _ in 0..subdivisions {
        let mut midpoints: HashMap<(usize, usize), usize> =
            HashMap::with_capacity(faces.len() * 3 / 2);
        let mut next = Vec::with_capacity(faces.len() * 4);
        let mut midpoint = |a: usize, b: usize, vertices: &mut Vec<Vec3>| -> usize {
            let key = if a < b { (a, b) } else { (b, a) };
            *midpoints.entry(key).or_insert_with(|| {
                vertices.push(((vertices[a] + vertices[b]) * 0.5).normalize());
                vertices.len() - 1
            })
        };
        for &[a, b, c] in &faces {
            let ab = midpoint(a, b, &mut vertices);
            let bc = midpoint(b, c, &mut vertices);
            let ca = midpoint(c, a, &mut vertices);
            next.extend([[a, ab, ca], [b, bc, ab], [c, ca, bc], [ab, bc, ca]]);
        }
        faces = next;
    }
    Ok(build(vertices, faces))
}

/// Unit circle sampled at `segments` angles, shared by the ring generators
/// so that every ring of a column has bitwise identical x/y direction.
fn circle(segments: usize) -> Vec<(f64, f64)> {
    (0..segments)
        .map(|i| {
            let t = 2.0 * PI * i as f64 / segments as f64;
            (t.cos(), t.sin())
        })
        .collect()
}

/// Appends quads between consecutive rings (each `segments` long, starting
/// at the given offsets), split along the `(k,i)-(k+1,i+1)` diagonal.
fn stitch_rings(lower: usize, upper: usize, segments: usize, faces: &mut Vec<[usize; 3]>) {
    for i in 0..segments {
        let j = (i + 1) % segments;
        faces.push([lower + i, lower + j, upper + j]);
        faces.push([lower + i, upper + j, upper + i]);
    }
}

/// Closed cylinder of radius 1 and height 2 around the z axis: `stacks + 1`
/// rings of `segments` vertices plus one center vertex per cap.
pub fn cylinder(segments: usize, stacks: usize) -> Result<TriangleMesh, GenerateError> {
    require(segments >= 3, || {
        format!("cylinder needs >= 3 segments, got {segments}")
    })?;
    require(stacks >= 1, || {
        format!("cylinder needs >= 1 stack, got {stacks}")
    })?;
    let (radius, height) = (1.0, 2.0);
    let dirs = circle(segments);
    let mut vertices = Vec::with_capacity(segments * (stacks + 1) + 2);
    for k in 0..=stacks {
        let z = -0.5 * height + height * k as f64 / stacks as f64;
        vertices.extend(
            dirs.iter()
                .map(|&(c, s)| Vec3::new(radius * c, radius * s, z)),
        );
    }
    let bottom = vertices.len();
    vertices.push(Vec3::new(0.0, 0.0, -0.5 * height));
    let top = vertices.len();
    vertices.push(Vec3::new(0.0, 0.0, 0.5 * height));

    let mut faces = Vec::with_capacity(2 * segments * (stacks + 1));
    for k in 0..stacks {
        stitch_rings(k * segments, (k + 1) * segments, segments, &mut faces);
    }
    let last = stacks * segments;
    for i in 0..segments {
        let j = (i + 1) % segments;
        faces.push([bottom, j, i]);
        faces.push([top, last + i, last + j]);
    }
    Ok(build(vertices, faces))
}

/// Closed cone of base radius 1 and height 1.5 with its apex on +z:
/// `stacks` rings from the base up, the apex, and a base-cap center.
pub fn cone(segments: usize, stacks: usize) -> Result<TriangleMesh, GenerateError> {
    require(segments >= 3, || {
        format!("cone needs >= 3 segments, got {segments}")
    })?;
    require(stacks >= 1, || {
        format!("cone needs >= 1 stack, got {stacks}")
    })?;
    let (radius, height) = (1.0, 1.5);
    let dirs = circle(segments);
    let mut vertices = Vec::with_capacity(segments * stacks + 2);
    for k in 0..stacks {
        let t = k as f64 / stacks as f64;
        let r = radius * (1.0 - t);
        vertices.extend(
            dirs.iter()
                .map(|&(c, s)| Vec3::new(r * c, r * s, height * t)),
        );
    }
    let apex = vertices.len();
    vertices.push(Vec3::new(0.0, 0.0, height));
    let base = vertices.len();
    vertices.push(Vec3::zeros());

    let mut faces = Vec::with_capacity(2 * segments * stacks);
    for k in 0..stacks - 1 {
        stitch_rings(k * segments, (k + 1) * segments, segments, &mut faces);
    }
    let last = (stacks - 1) * segments;
    for i in 0..segments {
        let j = (i + 1) % segments;
        faces.push([last + i, last + j, apex]);
        faces.push([base, j, i]);
    }
    Ok(build(vertices, faces))
}

/// Cube `[-1, 1]^3` with an `n × n` grid on every face.
///
/// Cells are split toward the face center ("union jack"), so for `n >= 2`
/// every cube corner lies on a cell diagonal and all three of its face
/// planes show up among the neighbor normals of its ring.
/// Has `6n² + 2` vertices and `12n²` faces.
pub fn cube(n: usize) -> Result<TriangleMesh, GenerateError> {
    require(n >= 1, || "cube needs >= 1 cell per edge".to_string())?;
    let mut index: HashMap<[usize; 3], usize> = HashMap::with_capacity(6 * n * n + 2);
    let mut vertices = Vec::with_capacity(6 * n * n + 2);
    let mut faces = Vec::with_capacity(12 * n * n);
    let coord = |i: usize| -1.0 + 2.0 * i as f64 / n as f64;
    for axis in 0..3 {
        let (u, v) = ((axis + 1) % 3, (axis + 2) % 3);
        for side in [0, n] {
            let mut id = |i: usize, j: usize| -> usize {
                let mut key = [0; 3];
                key[axis] = side;
                key[u] = i;
                key[v] = j;
                *index.entry(key).or_insert_with(|| {
                    vertices.push(Vec3::new(coord(key[0]), coord(key[1]), coord(key[2])));
                    vertices.len() - 1
                })
            };
            // e_u × e_v = +e_axis, so the low side needs reversed winding.
            let flip = side == 0;
            for j in 0..n {
                for i in 0..n {
                    let (a, b, c, d) = (id(i, j), id(i + 1, j), id(i + 1, j + 1), id(i, j + 1));
                    let tris = if (i < n / 2) == (j < n / 2) {
                        [[a, b, c], [a, c, d]]
                    } else {
                        [[a, b, d], [b, c, d]]
                    };
                    for [x, y, z] in tris {
                        faces.push(if flip { [x, z, y] } else { [x, y, z] });
                    }
                }
            }
        }
    }
    Ok(build(vertices, faces))
}

/// Planar `n × n` grid in `z = 0` with cell size `spacing`, each cell split
/// along its `(i,j)-(i+1,j+1)` diagonal. Has `(n+1)²` vertices and `2n²` faces.
pub fn grid(n: usize, spacing: f64) -> Result<TriangleMesh, GenerateError> {
    require(n >= 1, || "grid needs >= 1 cell".to_string())?;
    require(spacing > 0.0 && spacing.is_finite(), || {
        format!("grid spacing must be positive, got {spacing}")
    })?;
    let id = |i: usize, j: usize| j * (n + 1) + i;
    let vertices = (0..=n)
        .flat_map(|j| (0..=n).map(move |i| Vec3::new(i as f64 * spacing, j as f64 * spacing, 0.0)))
        .collect();
    let mut faces = Vec::with_capacity(2 * n * n);
    for j in 0..n {
        for i in 0..n {
            faces.push([id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
            faces.push([id(i, j), id(i + 1, j + 1), id(i, j + 1)]);
        }
    }
    Ok(build(vertices, faces))
}
