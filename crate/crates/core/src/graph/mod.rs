//! Finite simple graphs and the surgeries performed on them.
//!
//! Vertices are positive integers. Edges are unordered pairs stored as
//! `(a, b)` with `a < b`, kept sorted lexicographically; the position of an
//! edge in that order is its *edge index*, and every matrix, monomial and
//! simplicial complex in the crate is indexed by it.

mod contract;
mod io;
mod iso;
mod walk;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};

pub use contract::{
    connect_by_edge, contract_edge, contract_path, contract_walk, split_at_bridge,
    triangle_sequence, triangle_sequence_listing, ContractionResult,
};
pub use io::GraphFile;
pub use iso::{find_isomorphism, is_isomorphic};
pub use walk::{enumerate_paths, is_path, is_simple_path, Path, Walk};

pub type Vertex = u32;

/// An undirected edge with `0 < .0 < .1`.
pub type Edge = (Vertex, Vertex);

/// Orders an endpoint pair so that the smaller id comes first.
pub fn edge(a: Vertex, b: Vertex) -> Edge {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    vertices: Vec<Vertex>,
    edges: Vec<Edge>,
    adjacency: BTreeMap<Vertex, BTreeSet<Vertex>>,
}

impl SimpleGraph {
    /// Builds a graph, rejecting loops, repeated edges (in either
    /// orientation), repeated vertices, vertex id 0 and dangling endpoints.
    pub fn new(
        vertices: impl IntoIterator<Item = Vertex>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let mut adjacency: BTreeMap<Vertex, BTreeSet<Vertex>> = BTreeMap::new();
        for v in vertices {
            if v == 0 {
                return Err(Error::InvalidGraph("vertex ids must be positive".into()));
            }
            if adjacency.insert(v, BTreeSet::new()).is_some() {
                return Err(Error::InvalidGraph(format!("vertex {v} listed twice")));
            }
        }
        let mut edge_set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            for v in [a, b] {
                if !adjacency.contains_key(&v) {
                    return Err(Error::InvalidGraph(format!(
                        "edge {{{a}, {b}}} uses undeclared vertex {v}"
                    )));
                }
            }
            if !edge_set.insert(edge(a, b)) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{a}, {b}}}")));
            }
            adjacency.get_mut(&a).unwrap().insert(b);
            adjacency.get_mut(&b).unwrap().insert(a);
        }
        Ok(Self {
            vertices: adjacency.keys().copied().collect(),
            edges: edge_set.into_iter().collect(),
            adjacency,
        })
    }

    /// Graph whose vertex set is exactly the set of edge endpoints.
    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let edges: Vec<Edge> = edges.into_iter().collect();
        let vertices: BTreeSet<Vertex> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
        Self::new(vertices, edges)
    }

    /// Same as [`SimpleGraph::new`] but silently merges repeated edges and
    /// drops loops. Used by contractions.
    pub(crate) fn new_merging(vertices: BTreeSet<Vertex>, edges: impl IntoIterator<Item = Edge>) -> Self {
        let edges: BTreeSet<Edge> = edges
            .into_iter()
            .filter(|&(a, b)| a != b)
            .map(|(a, b)| edge(a, b))
            .collect();
        Self::new(vertices, edges).expect("merged edge set is simple")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn max_vertex(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        self.adjacency.contains_key(&v)
    }

    pub fn contains_edge(&self, a: Vertex, b: Vertex) -> bool {
        self.adjacency.get(&a).is_some_and(|n| n.contains(&b))
    }

    /// Position of `{a, b}` in the canonical edge order.
    pub fn edge_index(&self, a: Vertex, b: Vertex) -> Option<usize> {
        self.edges.binary_search(&edge(a, b)).ok()
    }

    /// Row of `v` in the incidence matrix.
    pub fn vertex_index(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Endpoints of edge `j` as incidence-matrix row indices.
    pub fn edge_rows(&self, j: usize) -> (usize, usize) {
        let (a, b) = self.edges[j];
        (self.vertex_index(a).unwrap(), self.vertex_index(b).unwrap())
    }

    pub fn neighbors(&self, x: Vertex) -> Result<&BTreeSet<Vertex>> {
        self.adjacency.get(&x).ok_or(Error::UnknownVertex(x))
    }

    pub fn degree(&self, x: Vertex) -> Result<usize> {
        self.neighbors(x).map(BTreeSet::len)
    }

    /// Edge indices incident to each vertex, by row.
    pub fn incident_edges(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count()];
        for j in 0..self.edge_count() {
            let (a, b) = self.edge_rows(j);
            out[a].push(j);
            out[b].push(j);
        }
        out
    }

    pub fn components(&self) -> Vec<BTreeSet<Vertex>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.vertices {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(v) = queue.pop_front() {
                comp.insert(v);
                for &u in &self.adjacency[&v] {
                    if seen.insert(u) {
                        queue.push_back(u);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// A graph with no vertices counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first two-colouring.
    pub fn is_bipartite(&self) -> bool {
        let mut colour: BTreeMap<Vertex, bool> = BTreeMap::new();
        for &start in &self.vertices {
            if colour.contains_key(&start) {
                continue;
            }
            colour.insert(start, false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[&v];
                for &u in &self.adjacency[&v] {
                    match colour.get(&u) {
                        Some(&cu) if cu == c => return false,
                        Some(_) => {}
                        None => {
                            colour.insert(u, !c);
                            queue.push_back(u);
                        }
                    }
                }
            }
        }
        true
    }

    /// Codimension of the edge ring: `|E| - |V|`, plus one when bipartite.
    pub fn codim(&self) -> Result<usize> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let bonus = usize::from(self.is_bipartite());
        // connected: |E| >= |V| - 1, and |E| >= |V| once there is an odd cycle
        Ok((self.edge_count() + bonus).saturating_sub(self.vertex_count()))
    }

    /// Vertex-by-edge 0/1 matrix, rows in vertex order, columns in edge order.
    pub fn incidence_matrix(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0i64; self.edge_count()]; self.vertex_count()];
        for j in 0..self.edge_count() {
            let (a, b) = self.edge_rows(j);
            m[a][j] = 1;
            m[b][j] = 1;
        }
        m
    }

    /// Image of an edge exponent vector under the incidence map.
    pub fn degree_of(&self, exponents: &[u32]) -> Vec<u32> {
        let mut out = vec![0u32; self.vertex_count()];
        for (j, &e) in exponents.iter().enumerate() {
            if e > 0 {
                let (a, b) = self.edge_rows(j);
                out[a] += e;
                out[b] += e;
            }
        }
        out
    }

    /// Graph with vertices renamed by `map`; unmapped vertices keep their id.
    pub fn relabel(&self, map: &BTreeMap<Vertex, Vertex>) -> Result<Self> {
        let f = |v: Vertex| map.get(&v).copied().unwrap_or(v);
        Self::new(
            self.vertices.iter().map(|&v| f(v)),
            self.edges.iter().map(|&(a, b)| (f(a), f(b))),
        )
    }

    /// Shifts every vertex id by `offset`.
    pub fn shifted(&self, offset: Vertex) -> Self {
        Self::new(
            self.vertices.iter().map(|&v| v + offset),
            self.edges.iter().map(|&(a, b)| (a + offset, b + offset)),
        )
        .expect("shifting preserves simplicity")
    }

    pub fn without_edge(&self, a: Vertex, b: Vertex) -> Result<Self> {
        let e = edge(a, b);
        if self.edge_index(a, b).is_none() {
            return Err(Error::NotAnEdge(a, b));
        }
        Self::new(
            self.vertices.iter().copied(),
            self.edges.iter().copied().filter(|&f| f != e),
        )
    }

    pub fn induced(&self, keep: &BTreeSet<Vertex>) -> Self {
        Self::new(
            self.vertices.iter().copied().filter(|v| keep.contains(v)),
            self.edges
                .iter()
                .copied()
                .filter(|(a, b)| keep.contains(a) && keep.contains(b)),
        )
        .expect("induced subgraph of a simple graph is simple")
    }
}

impl fmt::Display for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V={:?} E=[", self.vertices)?;
        for (i, (a, b)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}-{b}")?;
        }
        write!(f, "]")
    }
}
