//! Greedy domain decomposition: a vertex coloring whose color classes are
//! independent sets, so every class can be updated concurrently.

use crate::MeshTopology;

/// Color label per vertex and the vertex lists of each color class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DomainColoring {
    color_of: Vec<usize>,
    domains: Vec<Vec<usize>>,
}

impl DomainColoring {
    /// Groups vertices by label. Each domain lists its vertices in ascending order.
    pub fn from_labels(color_of: Vec<usize>) -> Self {
        let k = color_of.iter().max().map_or(0, |&c| c + 1);
        let mut domains = vec![Vec::new(); k];
        for (v, &c) in color_of.iter().enumerate() {
            domains[c].push(v);
        }
        Self { color_of, domains }
    }

    /// Every vertex in one domain.
    ///
    /// This is not a proper coloring: a filter pass over it reads all
    /// neighbors from the start-of-pass state (Jacobi iteration). Used as the
    /// undecomposed reference schedule.
    pub fn single_domain(vertex_count: usize) -> Self {
        Self::from_labels(vec![0; vertex_count])
    }

    pub fn color_of(&self, v: usize) -> usize {
        self.color_of[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.color_of
    }

    pub fn domains(&self) -> &[Vec<usize>] {
        &self.domains
    }

    /// Number of domains `k`.
    pub fn len(&self) -> usize {
        self.domains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domains.is_empty()
    }

    /// First edge whose endpoints share a color, if any.
    pub fn conflict(&self, topology: &MeshTopology) -> Option<(usize, usize)> {
        (0..topology.vertex_count()).find_map(|v| {
            topology
                .neighbors(v)
                .iter()
                .find(|&&u| self.color_of[u] == self.color_of[v])
                .map(|&u| (v, u))
        })
    }

    pub fn is_proper(&self, topology: &MeshTopology) -> bool {
        self.conflict(topology).is_none()
    }
}

/// Visits vertices in index order and gives each the smallest color not
/// already used by a colored neighbor. Uses at most `max_degree + 1` colors.
pub fn greedy_domain_decomposition(topology: &MeshTopology) -> DomainColoring {
    let n = topology.vertex_count();
    let mut color_of = vec![usize::MAX; n];
    let mut taken: Vec<bool> = Vec::new();
    for v in 0..n {
        let ring = topology.neighbors(v);
        taken.clear();
        taken.resize(ring.len() + 1, false);
        for &u in ring {
            let c = color_of[u];
            if c < taken.len() {
                taken[c] = true;
            }
        }
        color_of[v] = taken.iter().position(|&t| !t).expect("a free color exists");
    }
    DomainColoring::from_labels(color_of)
}
