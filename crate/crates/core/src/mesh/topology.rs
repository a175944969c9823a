use super::TriangleMesh;

/// Per-vertex one-ring connectivity in compressed row form.
///
/// For a vertex whose incident faces form a single fan, `neighbors` lists the
/// ring in walk order: a closed cycle for interior vertices, an open chain
/// whose endpoints lie on boundary edges otherwise. Vertices with broken fans
/// get their adjacent vertices sorted by index and `is_manifold_fan = false`.
#[derive(Debug, Clone)]
pub struct MeshTopology {
    ring_offsets: Vec<usize>,
    rings: Vec<usize>,
    face_offsets: Vec<usize>,
    vertex_faces: Vec<usize>,
    boundary: Vec<bool>,
    manifold: Vec<bool>,
}

impl MeshTopology {
    pub fn build(mesh: &TriangleMesh) -> Self {
        let n = mesh.vertex_count();
        let faces = mesh.faces();

        let mut face_offsets = vec![0usize; n + 1];
        for face in faces {
            for &v in face {
                face_offsets[v + 1] += 1;
            }
        }
        for i in 0..n {
            face_offsets[i + 1] += face_offsets[i];
        }
        let mut vertex_faces = vec![0usize; face_offsets[n]];
        let mut cursor = face_offsets.clone();
        for (f, face) in faces.iter().enumerate() {
            for &v in face {
                vertex_faces[cursor[v]] = f;
                cursor[v] += 1;
            }
        }

        let mut ring_offsets = Vec::with_capacity(n + 1);
        ring_offsets.push(0);
        let mut rings = Vec::with_capacity(face_offsets[n] + n);
        let mut boundary = vec![false; n];
        let mut manifold = vec![false; n];
        let mut wedges = Vec::new();
        for v in 0..n {
            wedges.clear();
            wedges.extend(
                vertex_faces[face_offsets[v]..face_offsets[v + 1]]
                    .iter()
                    .map(|&f| wedge(faces[f], v)),
            );
            match walk_fan(&wedges) {
                Fan::Closed(ring) => {
                    manifold[v] = true;
                    rings.extend(ring);
                }
                Fan::Open(ring) => {
                    manifold[v] = true;
                    boundary[v] = true;
                    rings.extend(ring);
                }
                Fan::Broken => {
                    let mut adjacent: Vec<usize> =
                        wedges.iter().flat_map(|&(a, b)| [a, b]).collect();
                    adjacent.sort_unstable();
                    adjacent.dedup();
                    rings.extend(adjacent);
                }
            }
            ring_offsets.push(rings.len());
        }

        Self {
            ring_offsets,
            rings,
            face_offsets,
            vertex_faces,
            boundary,
            manifold,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.boundary.len()
    }

    /// The one-ring of `v` (see the type docs for ordering).
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.rings[self.ring_offsets[v]..self.ring_offsets[v + 1]]
    }

    /// Incident faces of `v`, in ascending face index.
    pub fn vertex_faces(&self, v: usize) -> &[usize] {
        &self.vertex_faces[self.face_offsets[v]..self.face_offsets[v + 1]]
    }

    pub fn is_boundary(&self, v: usize) -> bool {
        self.boundary[v]
    }

    pub fn is_manifold_fan(&self, v: usize) -> bool {
        self.manifold[v]
    }

    /// Manifold and not on the boundary: the vertices the filter may move.
    pub fn is_interior(&self, v: usize) -> bool {
        self.manifold[v] && !self.boundary[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count())
            .map(|v| self.neighbors(v).len())
            .max()
            .unwrap_or(0)
    }
}

/// The two other corners of `face` as seen from `v`, in winding order.
fn wedge(face: [usize; 3], v: usize) -> (usize, usize) {
    let p = face.iter().position(|&x| x == v).expect("vertex in face");
    (face[(p + 1) % 3], face[(p + 2) % 3])
}

enum Fan {
    Closed(Vec<usize>),
    Open(Vec<usize>),
    Broken,
}

/// Chains the wedges around a vertex into a single fan if possible.
///
/// Each wedge joins two spoke vertices. The fan is a manifold iff every spoke
/// joins at most two wedges and all wedges are reached by one walk.
fn walk_fan(wedges: &[(usize, usize)]) -> Fan {
    if wedges.is_empty() {
        return Fan::Broken;
    }
    // Spoke degrees; rings are small so linear scans beat hashing here.
    let mut spokes: Vec<(usize, u32)> = Vec::with_capacity(wedges.len() + 1);
    for &(a, b) in wedges {
        for s in [a, b] {
            match spokes.iter_mut().find(|(x, _)| *x == s) {
                Some((_, d)) => *d += 1,
                None => spokes.push((s, 1)),
            }
        }
    }
    if spokes.iter().any(|&(_, d)| d > 2) {
        return Fan::Broken;
    }
    let ends: Vec<usize> = spokes
        .iter()
        .filter(|&&(_, d)| d == 1)
        .map(|&(s, _)| s)
        .collect();

    let (start, first_wedge) = match ends.len() {
        0 => (wedges[0].0, 0),
        2 => {
            // Prefer the endpoint that keeps the walk consistent with winding.
            let w = wedges
                .iter()
                .position(|&(a, _)| a == ends[0] || a == ends[1]);
            match w {
                Some(w) => (wedges[w].0, w),
                None => {
                    let w = wedges
                        .iter()
                        .position(|&(a, b)| a == ends[0] || b == ends[0])
                        .expect("endpoint has a wedge");
                    (ends[0], w)
                }
            }
        }
        _ => return Fan::Broken,
    };

    let mut used = vec![false; wedges.len()];
    let mut ring = Vec::with_capacity(wedges.len() + 1);
    ring.push(start);
    let mut current = start;
    let mut w = first_wedge;
    loop {
        used[w] = true;
        let (a, b) = wedges[w];
        let next = if a == current { b } else { a };
        match wedges
            .iter()
            .enumerate()
            .find(|&(i, &(x, y))| !used[i] && (x == next || y == next))
        {
            Some((i, _)) => {
                ring.push(next);
                current = next;
                w = i;
            }
            None => {
                if ends.is_empty() {
                    if next != start {
                        return Fan::Broken;
                    }
                } else {
                    ring.push(next);
                }
                break;
            }
        }
    }
    if used.iter().any(|&u| !u) {
        return Fan::Broken;
    }
    if ends.is_empty() {
        Fan::Closed(ring)
    } else {
        Fan::Open(ring)
    }
}
