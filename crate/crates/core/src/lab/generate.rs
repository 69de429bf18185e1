//! Seeded random instances for the theorem checks.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Surgery;
use crate::graph::{connect_by_edge, edge, enumerate_paths, Edge, SimpleGraph, Vertex};

/// Independent stream for instance `k` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, k: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k);
    rng
}

/// Erdős–Rényi `G(n, p)` on `1..=n`, resampled until connected with at
/// most `max_edges` edges.
pub fn connected_gnp(rng: &mut impl Rng, n: u32, p: f64, max_edges: usize) -> SimpleGraph {
    assert!(n >= 1 && max_edges + 1 >= n as usize, "no connected graph fits");
    loop {
        let edges: Vec<Edge> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        if edges.len() > max_edges {
            continue;
        }
        let g = SimpleGraph::new(1..=n, edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// A random connected bipartite graph on `1..=n`.
pub fn connected_bipartite(rng: &mut impl Rng, n: u32, p: f64, max_edges: usize) -> SimpleGraph {
    loop {
        let side: Vec<bool> = (0..=n).map(|_| rng.gen_bool(0.5)).collect();
        let edges: Vec<Edge> = (1..=n)
            .flat_map(|a| (a + 1..=n).map(move |b| (a, b)))
            .filter(|&(a, b)| side[a as usize] != side[b as usize])
            .filter(|_| rng.gen_bool(p))
            .collect();
        if edges.len() > max_edges {
            continue;
        }
        let g = SimpleGraph::new(1..=n, edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}

/// Replaces `{a, b}` by `a - y - b` with a fresh vertex `y`.
pub fn subdivide(g: &SimpleGraph, a: Vertex, b: Vertex) -> SimpleGraph {
    let y = g.max_vertex().unwrap_or(0) + 1;
    let edges = g.edges().iter().copied().filter(|&e| e != edge(a, b)).chain([edge(a, y), edge(y, b)]);
    SimpleGraph::new(g.vertices().iter().copied().chain([y]), edges).expect("subdivision")
}

/// A connected graph with an even path of positive length, and that path.
/// When `g(n, p)` has none, a random edge is subdivided.
pub fn even_path_instance(rng: &mut impl Rng, vertices: (u32, u32), p: f64, max_edges: usize) -> (SimpleGraph, Surgery) {
    loop {
        let n = rng.gen_range(vertices.0..=vertices.1);
        let mut g = connected_gnp(rng, n, p, max_edges - 1);
        let mut paths: Vec<Vec<Vertex>> = even_paths(&g);
        if paths.is_empty() || rng.gen_bool(0.25) {
            let &(a, b) = g.edges().choose(rng).expect("an edge");
            g = subdivide(&g, a, b);
            paths = even_paths(&g);
        }
        if let Some(p) = paths.choose(rng) {
            return (g, Surgery::Path(p.clone()));
        }
    }
}

fn even_paths(g: &SimpleGraph) -> Vec<Vec<Vertex>> {
    enumerate_paths(g).into_iter().filter(|p| p.is_even()).map(|p| p.vertices().to_vec()).collect()
}

/// A random connected `H` with a path `q` of length `4..=6` glued on
/// (between two vertices of `H`, or hanging from one), and an even `p`
/// inside `q` with `|q| >= |p| + 2`.
pub fn long_path_instance(rng: &mut impl Rng, host_vertices: (u32, u32), p: f64, max_edges: usize) -> (SimpleGraph, Surgery) {
    let n = rng.gen_range(host_vertices.0..=host_vertices.1);
    let len = rng.gen_range(4..=6usize);
    let h = connected_gnp(rng, n, p, max_edges.saturating_sub(len).max(n as usize - 1));
    let a = rng.gen_range(1..=n);
    let hanging = n < 2 || rng.gen_bool(0.25);
    let b = if hanging {
        None
    } else {
        let others: Vec<Vertex> = (1..=n).filter(|&v| v != a).collect();
        Some(*others.choose(rng).unwrap())
    };
    // fresh interior vertices, plus a fresh end when hanging
    let fresh = (len - 1 + usize::from(hanging)) as u32;
    let mut q: Vec<Vertex> = vec![a];
    q.extend(n + 1..=n + fresh);
    if let Some(b) = b {
        q.push(b);
    }
    let mut edges: BTreeSet<Edge> = h.edges().iter().copied().collect();
    edges.extend(q.windows(2).map(|w| edge(w[0], w[1])));
    let g = SimpleGraph::new(1..=n + fresh, edges).expect("valid edges");
    let plen = if len >= 6 && rng.gen_bool(0.3) { 4 } else { 2 };
    let start = rng.gen_range(0..=len - plen);
    let path = q[start..=start + plen].to_vec();
    (g, Surgery::PathIn { p: path, q })
}

/// `G1 -e- G2` with random connected parts; `bipartite_left` forces `G1`
/// bipartite.
pub fn connected_by_edge_instance(
    rng: &mut impl Rng,
    part_vertices: (u32, u32),
    p: f64,
    max_edges: usize,
    bipartite_left: bool,
) -> (SimpleGraph, Surgery) {
    let budget = (max_edges - 1) / 2;
    let n1 = rng.gen_range(part_vertices.0..=part_vertices.1);
    let n2 = rng.gen_range(part_vertices.0..=part_vertices.1);
    let g1 = if bipartite_left {
        connected_bipartite(rng, n1, p.max(0.5), budget.max(n1 as usize - 1))
    } else {
        connected_gnp(rng, n1, p, budget.max(n1 as usize - 1))
    };
    let g2 = connected_gnp(rng, n2, p, budget.max(n2 as usize - 1)).shifted(n1);
    let x = rng.gen_range(1..=n1);
    let y = n1 + rng.gen_range(1..=n2);
    let (g, _) = connect_by_edge(&g1, x, &g2, y).expect("disjoint connected parts");
    (g, Surgery::Edge(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{is_path, Path, Walk};

    #[test]
    fn generators_respect_their_contracts() {
        for k in 0..40 {
            let mut rng = instance_rng(7, k);
            let g = connected_gnp(&mut rng, 6, 0.4, 10);
            assert!(g.is_connected() && g.edge_count() <= 10);
            let b = connected_bipartite(&mut rng, 6, 0.5, 10);
            assert!(b.is_connected() && b.is_bipartite());

            let (g, s) = even_path_instance(&mut rng, (4, 8), 0.35, 12);
            assert!(g.edge_count() <= 12 && g.is_connected());
            let Surgery::Path(p) = s else { panic!() };
            assert!(Path::new(&g, p.clone()).unwrap().is_even());

            let (g, s) = long_path_instance(&mut rng, (3, 5), 0.5, 13);
            let Surgery::PathIn { p, q } = s else { panic!() };
            assert!(is_path(&g, &Walk::new(&g, q.clone()).unwrap()), "{g} {q:?}");
            assert!(q.len() >= p.len() + 2);

            let (g, s) = connected_by_edge_instance(&mut rng, (2, 5), 0.5, 12, true);
            let Surgery::Edge(x, y) = s else { panic!() };
            assert!(g.contains_edge(x, y) && g.is_connected());
        }
    }

    #[test]
    fn streams_are_reproducible() {
        let a = connected_gnp(&mut instance_rng(1, 3), 7, 0.4, 12);
        let b = connected_gnp(&mut instance_rng(1, 3), 7, 0.4, 12);
        assert_eq!(a, b);
    }
}
