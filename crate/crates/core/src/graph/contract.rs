use std::collections::{BTreeMap, BTreeSet};

use super::{edge, is_path, Edge, Path, SimpleGraph, Vertex, Walk};
use crate::error::{Error, Result};

/// Outcome of collapsing a vertex set to a single fresh vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionResult {
    pub graph: SimpleGraph,
    /// `χ`: old vertex id to new vertex id.
    pub map: BTreeMap<Vertex, Vertex>,
    /// The vertex absorbing the contracted set.
    pub new_vertex: Vertex,
}

impl ContractionResult {
    pub fn image(&self, v: Vertex) -> Vertex {
        self.map[&v]
    }

    fn identity(g: &SimpleGraph, v: Vertex) -> Self {
        Self {
            graph: g.clone(),
            map: g.vertices().iter().map(|&x| (x, x)).collect(),
            new_vertex: v,
        }
    }
}

/// Replaces `set` by the vertex `max(V) + 1`; parallel edges merge and
/// edges inside `set` disappear.
fn collapse(g: &SimpleGraph, set: &BTreeSet<Vertex>) -> ContractionResult {
    let y = g.max_vertex().unwrap_or(0) + 1;
    let map: BTreeMap<Vertex, Vertex> = g
        .vertices()
        .iter()
        .map(|&v| (v, if set.contains(&v) { y } else { v }))
        .collect();
    let vertices: BTreeSet<Vertex> = map.values().copied().collect();
    let edges = g.edges().iter().map(|&(a, b)| (map[&a], map[&b]));
    ContractionResult { graph: SimpleGraph::new_merging(vertices, edges), map, new_vertex: y }
}

pub fn contract_edge(g: &SimpleGraph, a: Vertex, b: Vertex) -> Result<ContractionResult> {
    if !g.contains_edge(a, b) {
        return Err(Error::NotAnEdge(a, b));
    }
    Ok(collapse(g, &BTreeSet::from([a, b])))
}

/// Contracts every edge of `p`. A length-zero path leaves `g` unchanged.
pub fn contract_path(g: &SimpleGraph, p: &Path) -> Result<ContractionResult> {
    if !is_path(g, p.as_walk()) {
        return Err(Error::NotAPath("not a path of this graph".into()));
    }
    Ok(contract_vertex_run(g, p.vertices()))
}

/// Contracts every edge of a walk with pairwise distinct vertices; unlike
/// [`contract_path`], internal vertices may have any degree. Edges joining
/// two contracted vertices off the walk become loops and are dropped.
pub fn contract_walk(g: &SimpleGraph, w: &Walk) -> Result<ContractionResult> {
    w.check_in(g)?;
    if !w.has_distinct_vertices() {
        return Err(Error::NotAWalk("contracted walks must not repeat vertices".into()));
    }
    Ok(contract_vertex_run(g, w.vertices()))
}

fn contract_vertex_run(g: &SimpleGraph, vertices: &[Vertex]) -> ContractionResult {
    if vertices.len() == 1 {
        return ContractionResult::identity(g, vertices[0]);
    }
    collapse(g, &vertices.iter().copied().collect())
}

/// `G1 -e- G2`: disjoint union of two connected graphs plus the bridge `{x, y}`.
pub fn connect_by_edge(
    g1: &SimpleGraph,
    x: Vertex,
    g2: &SimpleGraph,
    y: Vertex,
) -> Result<(SimpleGraph, Edge)> {
    if let Some(&v) = g1.vertices().iter().find(|v| g2.contains_vertex(**v)) {
        return Err(Error::OverlappingVertices(v));
    }
    if !g1.contains_vertex(x) {
        return Err(Error::UnknownVertex(x));
    }
    if !g2.contains_vertex(y) {
        return Err(Error::UnknownVertex(y));
    }
    if !g1.is_connected() || !g2.is_connected() {
        return Err(Error::Disconnected);
    }
    let g = SimpleGraph::new(
        g1.vertices().iter().chain(g2.vertices()).copied(),
        g1.edges().iter().chain(g2.edges()).copied().chain([(x, y)]),
    )?;
    Ok((g, edge(x, y)))
}

/// Recovers `(G1, G2)` when `g = G1 -e- G2` with `e = {a, b}`, `a ∈ G1`.
/// Fails unless removing `e` leaves exactly two connected pieces.
pub fn split_at_bridge(g: &SimpleGraph, a: Vertex, b: Vertex) -> Result<(SimpleGraph, SimpleGraph)> {
    let rest = g.without_edge(a, b)?;
    let comps = rest.components();
    if comps.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "removing {{{a}, {b}}} leaves {} components, not 2",
            comps.len()
        )));
    }
    let (ca, cb) = if comps[0].contains(&a) { (&comps[0], &comps[1]) } else { (&comps[1], &comps[0]) };
    Ok((rest.induced(ca), rest.induced(cb)))
}

/// `T_n`: triangles on `{x_{2i-1}, x_{2i}, x_{2i+1}}` for `1 <= i <= n`.
pub fn triangle_sequence(n: u32) -> Result<SimpleGraph> {
    if n == 0 {
        return Err(Error::InvalidArgument("a triangle sequence needs n >= 1".into()));
    }
    let edges = (1..=n).flat_map(|i| {
        let (a, b, c) = (2 * i - 1, 2 * i, 2 * i + 1);
        [(a, b), (b, c), (c, a)]
    });
    SimpleGraph::new(1..=2 * n + 1, edges)
}

/// Edge indices of `T_n` in the order the triangles are listed,
/// `{x1,x2}, {x2,x3}, {x3,x1}, {x3,x4}, ...`.
pub fn triangle_sequence_listing(t: &SimpleGraph, n: u32) -> Vec<usize> {
    (1..=n)
        .flat_map(|i| {
            let (a, b, c) = (2 * i - 1, 2 * i, 2 * i + 1);
            [(a, b), (b, c), (c, a)]
        })
        .map(|(a, b)| t.edge_index(a, b).expect("edge of T_n"))
        .collect()
}
