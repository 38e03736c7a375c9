//! Graphs with a designated set of protected ("pure") vertices.
//!
//! The adjacency matrix is symmetric with zero diagonal; each row is stored
//! as a neighbor bitmask so neighborhoods of vertex subsets are XOR folds.

use crate::bits::VertexSet;
use crate::error::{Error, Result};
use crate::pauli::PauliOperator;
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    // adj[a] = bitmask of neighbors of a
    adj: Vec<u64>,
    pure: VertexSet,
}

/// On-disk form: `{"vertices": n, "edges": [[a,b],...], "pure": [v,...]}`.
#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default)]
    pure: Vec<usize>,
}

impl Graph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)], pure: &[usize]) -> Result<Self> {
        if vertex_count > crate::bits::MAX_UNIVERSE {
            return Err(Error::InvalidGraph(format!(
                "{vertex_count} vertices exceeds the supported maximum of {}",
                crate::bits::MAX_UNIVERSE
            )));
        }
        let mut adj = vec![0u64; vertex_count];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= vertex_count || b >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "edges[{i}] = [{a},{b}]: vertex outside 0..{vertex_count}"
                )));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("edges[{i}] = [{a},{b}]: loop")));
            }
            if adj[a] >> b & 1 == 1 {
                return Err(Error::InvalidGraph(format!(
                    "edges[{i}] = [{a},{b}]: duplicate edge"
                )));
            }
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let mut pure_set = VertexSet::empty(vertex_count);
        for (i, &v) in pure.iter().enumerate() {
            if v >= vertex_count {
                return Err(Error::InvalidGraph(format!(
                    "pure[{i}] = {v}: vertex outside 0..{vertex_count}"
                )));
            }
            if pure_set.contains(v) {
                return Err(Error::InvalidGraph(format!(
                    "pure[{i}] = {v}: duplicate entry"
                )));
            }
            pure_set.insert(v);
        }
        Ok(Graph {
            vertex_count,
            adj,
            pure: pure_set,
        })
    }

    /// Builds a graph from a full adjacency row table (used by the
    /// adjacency reconstruction solver, which already guarantees symmetry).
    pub(crate) fn from_adjacency_rows(adj: Vec<u64>, pure: VertexSet) -> Self {
        let vertex_count = adj.len();
        debug_assert!(pure.universe() == vertex_count);
        for (a, &row) in adj.iter().enumerate() {
            debug_assert_eq!(row >> a & 1, 0, "diagonal must be zero");
            for (b, &other) in adj.iter().enumerate() {
                debug_assert_eq!(row >> b & 1, other >> a & 1, "adjacency must be symmetric");
            }
        }
        Graph {
            vertex_count,
            adj,
            pure,
        }
    }

    /// Star graph: vertex 0 is the center, joined to every other vertex.
    pub fn star(leaves: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (1..=leaves).map(|j| (0, j)).collect();
        Self::new(leaves + 1, &edges, &[])
    }

    pub fn with_pure(mut self, pure: &[usize]) -> Result<Self> {
        let mut pure_set = VertexSet::empty(self.vertex_count);
        for &v in pure {
            if v >= self.vertex_count {
                return Err(Error::InvalidGraph(format!("pure vertex {v} out of range")));
            }
            pure_set.insert(v);
        }
        self.pure = pure_set;
        Ok(self)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: GraphJson = serde_json::from_str(s)?;
        Self::new(raw.vertices, &raw.edges, &raw.pure)
    }

    pub fn to_json_string(&self) -> String {
        let raw = GraphJson {
            vertices: self.vertex_count,
            edges: self.edges(),
            pure: self.pure.vertices(),
        };
        serde_json::to_string(&raw).expect("graph serialization cannot fail")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn pure_set(&self) -> VertexSet {
        self.pure
    }

    /// Vertices exposed to noise: the complement of the pure set.
    pub fn noisy_set(&self) -> VertexSet {
        self.pure.complement()
    }

    pub fn noisy_count(&self) -> usize {
        self.vertex_count - self.pure.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Edge list with a < b, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.vertex_count {
            for b in (a + 1)..self.vertex_count {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.vertex_count, self.adj[v])
    }

    /// Neighborhood of a subset: the symmetric difference of the member
    /// neighborhoods (GF(2) matrix-vector product with the adjacency).
    pub fn set_neighborhood(&self, s: &VertexSet) -> VertexSet {
        assert_eq!(
            s.universe(),
            self.vertex_count,
            "subset over wrong universe"
        );
        let mut bits = 0u64;
        for v in s.iter() {
            bits ^= self.adj[v];
        }
        VertexSet::from_bits(self.vertex_count, bits)
    }

    /// The vertex stabilizer `G_a = X_a ∏_{b ∈ N_a} Z_b`.
    pub fn vertex_stabilizer(&self, a: usize) -> PauliOperator {
        PauliOperator::new(
            VertexSet::singleton(self.vertex_count, a),
            self.neighborhood(a),
            0,
        )
    }

    /// The exact product `G_S = ∏_{a ∈ S} G_a` in ascending vertex order,
    /// phase included. The x-support is `S` and the z-support is `N_S`.
    pub fn stabilizer(&self, s: &VertexSet) -> PauliOperator {
        assert_eq!(s.universe(), self.vertex_count);
        let mut acc = PauliOperator::identity(self.vertex_count);
        for a in s.iter() {
            acc = acc.mul(&self.vertex_stabilizer(a));
        }
        debug_assert_eq!(acc.x_support(), *s);
        debug_assert_eq!(acc.z_support(), self.set_neighborhood(s));
        acc
    }

    /// Reduces the error `X_ω Z_δ` acting on graph-state basis vectors to a
    /// pure phase flip: returns `Ω = δ △ N_ω`.
    ///
    /// As operators, `X_ω Z_δ = i^{-p_ω} G_ω Z_Ω` where `i^{p_ω}` is the
    /// accumulated phase of the stabilizer product `G_ω`; on a basis state
    /// `|Γ_C⟩` the residual scalar relative to `Z_Ω |Γ_C⟩` is
    /// `i^{-p_ω} (-1)^{|ω∩Ω|} (-1)^{|ω∩C|}`.
    pub fn reduce_error(&self, omega: &VertexSet, delta: &VertexSet) -> VertexSet {
        delta.sym_diff(&self.set_neighborhood(omega))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?}, pure={})",
            self.vertex_count,
            self.edges(),
            self.pure
        )
    }
}
