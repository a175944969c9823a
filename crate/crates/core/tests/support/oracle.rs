//! Straightforward reimplementation of one filter sweep. Shares no code with
//! the library beyond the vector type: rings, boundaries and normals are
//! rebuilt here by scanning the face list.

use gcf_core::Vec3;
use std::collections::HashMap;

const TOL: f64 = 1e-14;

fn mean_edge(faces: &[[usize; 3]]) -> impl Fn(&[Vec3]) -> f64 + '_ {
    move |p: &[Vec3]| {
        let mut seen = std::collections::BTreeSet::new();
        for f in faces {
            for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
                seen.insert((a.min(b), a.max(b)));
            }
        }
        seen.iter().map(|&(a, b)| (p[a] - p[b]).norm()).sum::<f64>() / seen.len() as f64
    }
}

/// Cyclic ring of `v`, or `None` if `v` is on the boundary or its fan is
/// not a single closed loop.
fn closed_ring(
    v: usize,
    faces: &[[usize; 3]],
    edge_faces: &HashMap<(usize, usize), usize>,
) -> Option<Vec<usize>> {
    let mut next: HashMap<usize, usize> = HashMap::new();
    for f in faces {
        for i in 0..3 {
            if f[i] == v {
                let a = f[(i + 1) % 3];
                let b = f[(i + 2) % 3];
                if next.insert(a, b).is_some() {
                    return None;
                }
            }
        }
    }
    if next.is_empty() {
        return None;
    }
    for &u in next.keys() {
        if edge_faces[&(v.min(u), v.max(u))] != 2 {
            return None;
        }
    }
    let start = *next.keys().min().unwrap();
    let mut ring = vec![start];
    let mut cur = next[&start];
    while cur != start {
        ring.push(cur);
        cur = *next.get(&cur)?;
        if ring.len() > next.len() {
            return None;
        }
    }
    (ring.len() == next.len()).then_some(ring)
}

fn update(v: usize, ring: &[usize], p: &[Vec3], faces: &[[usize; 3]], el: f64) -> Vec3 {
    let m = ring.len();
    let centroid = ring.iter().fold(Vec3::zeros(), |s, &u| s + p[u]) / m as f64;
    let delta = p[v] - centroid;
    if delta.norm() < TOL * el {
        return p[v];
    }
    let direction = -delta / delta.norm();

    let mut normals = Vec::new();
    let mut sum = Vec3::zeros();
    let mut max_area: f64 = 0.0;
    for f in faces.iter().filter(|f| f.contains(&v)) {
        let c = (p[f[1]] - p[f[0]]).cross(&(p[f[2]] - p[f[0]]));
        sum += c / 2.0;
        max_area = max_area.max(c.norm() / 2.0);
    }
    if sum.norm() >= TOL * max_area {
        normals.push(sum.normalize());
    }
    for k in 0..m {
        let here = p[ring[k]];
        let a = p[ring[(k + m - 1) % m]] - here;
        let b = p[ring[(k + 1) % m]] - here;
        let c = a.cross(&b);
        if c.norm() >= TOL * el * el {
            normals.push(c.normalize());
        }
    }
    if normals.is_empty() {
        return p[v];
    }
    let mut d = f64::INFINITY;
    for n in &normals {
        for &u in ring {
            d = d.min(n.dot(&(p[u] - p[v])).abs());
        }
    }
    p[v] + direction * d
}

/// One sweep over color classes in ascending label order. Within a class
/// every update reads the positions from the start of that class.
pub fn sweep(positions: &[Vec3], faces: &[[usize; 3]], color_of: &[usize]) -> Vec<Vec3> {
    let el = mean_edge(faces)(positions);
    let mut edge_faces: HashMap<(usize, usize), usize> = HashMap::new();
    for f in faces {
        for (a, b) in [(f[0], f[1]), (f[1], f[2]), (f[2], f[0])] {
            *edge_faces.entry((a.min(b), a.max(b))).or_default() += 1;
        }
    }
    let rings: Vec<Option<Vec<usize>>> = (0..positions.len())
        .map(|v| closed_ring(v, faces, &edge_faces))
        .collect();
    let colors = color_of.iter().max().map_or(0, |c| c + 1);
    let mut p = positions.to_vec();
    for c in 0..colors {
        let snapshot = p.clone();
        for v in 0..p.len() {
            if color_of[v] != c {
                continue;
            }
            if let Some(ring) = &rings[v] {
                p[v] = update(v, ring, &snapshot, faces, el);
            }
        }
    }
    p
}
