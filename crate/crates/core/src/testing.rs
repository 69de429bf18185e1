//! Shared fixtures and proptest strategies for unit tests.

use std::collections::BTreeSet;

use proptest::prelude::*;

use crate::graph::{edge, SimpleGraph, Vertex};

pub fn cycle(n: Vertex) -> SimpleGraph {
    SimpleGraph::from_edges((1..=n).map(|i| (i, i % n + 1))).unwrap()
}

/// Graph of the ex-2.9 fixture.
pub fn two_triangles_two_paths() -> SimpleGraph {
    SimpleGraph::from_edges([
        (1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6),
        (1, 7), (7, 8), (8, 4), (1, 9), (9, 10), (10, 4),
    ])
    .unwrap()
}


pub fn arb_connected_graph(max_vertices: u32) -> impl Strategy<Value = SimpleGraph> {
    (3..=max_vertices)
        .prop_flat_map(|n| {
            let tree = proptest::collection::vec(any::<prop::sample::Index>(), (n - 1) as usize);
            let extra = proptest::collection::vec((1..=n, 1..=n), 0..(2 * n as usize));
            (Just(n), tree, extra)
        })
        .prop_map(|(n, tree, extra)| {
            let mut edges = BTreeSet::new();
            for (i, parent) in tree.iter().enumerate() {
                let v = i as u32 + 2;
                let p = parent.index(v as usize - 1) as u32 + 1;
                edges.insert(edge(v, p));
            }
            for (a, b) in extra {
                if a != b {
                    edges.insert(edge(a, b));
                }
            }
            SimpleGraph::new(1..=n, edges).unwrap()
        })
}

