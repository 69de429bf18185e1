use std::collections::{BTreeMap, BTreeSet};

use super::{SimpleGraph, Vertex};

/// Degree plus the sorted degrees of the neighbours: an isomorphism
/// invariant used to prune candidate images.
fn signature(g: &SimpleGraph, v: Vertex) -> (usize, Vec<usize>) {
    let nbrs = g.neighbors(v).unwrap();
    let mut degs: Vec<usize> = nbrs.iter().map(|&u| g.degree(u).unwrap()).collect();
    degs.sort_unstable();
    (nbrs.len(), degs)
}

/// Backtracking search for a vertex bijection `g -> h` preserving adjacency.
pub fn find_isomorphism(g: &SimpleGraph, h: &SimpleGraph) -> Option<BTreeMap<Vertex, Vertex>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let sig_g: BTreeMap<Vertex, _> = g.vertices().iter().map(|&v| (v, signature(g, v))).collect();
    let sig_h: BTreeMap<Vertex, _> = h.vertices().iter().map(|&v| (v, signature(h, v))).collect();
    let mut multiset_g: Vec<_> = sig_g.values().cloned().collect();
    let mut multiset_h: Vec<_> = sig_h.values().cloned().collect();
    multiset_g.sort();
    multiset_h.sort();
    if multiset_g != multiset_h {
        return None;
    }

    // visit g's vertices breadth-first so each new vertex has a mapped neighbour
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut seen = BTreeSet::new();
    for &root in g.vertices() {
        if !seen.insert(root) {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &u in g.neighbors(v).unwrap() {
                if seen.insert(u) {
                    queue.push_back(u);
                }
            }
        }
    }

    fn extend(
        depth: usize,
        order: &[Vertex],
        g: &SimpleGraph,
        h: &SimpleGraph,
        sig_g: &BTreeMap<Vertex, (usize, Vec<usize>)>,
        sig_h: &BTreeMap<Vertex, (usize, Vec<usize>)>,
        map: &mut BTreeMap<Vertex, Vertex>,
        used: &mut BTreeSet<Vertex>,
    ) -> bool {
        let Some(&v) = order.get(depth) else { return true };
        for &w in h.vertices() {
            if used.contains(&w) || sig_g[&v] != sig_h[&w] {
                continue;
            }
            let consistent = map
                .iter()
                .all(|(&a, &b)| g.contains_edge(a, v) == h.contains_edge(b, w));
            if !consistent {
                continue;
            }
            map.insert(v, w);
            used.insert(w);
            if extend(depth + 1, order, g, h, sig_g, sig_h, map, used) {
                return true;
            }
            map.remove(&v);
            used.remove(&w);
        }
        false
    }

    let mut map = BTreeMap::new();
    let mut used = BTreeSet::new();
    extend(0, &order, g, h, &sig_g, &sig_h, &mut map, &mut used).then_some(map)
}

pub fn is_isomorphic(g: &SimpleGraph, h: &SimpleGraph) -> bool {
    find_isomorphism(g, h).is_some_and(|map| g.relabel_onto(&map, h))
}

impl SimpleGraph {
    /// Whether renaming by `map` turns `self` into exactly `other`.
    fn relabel_onto(&self, map: &BTreeMap<Vertex, Vertex>, other: &SimpleGraph) -> bool {
        let edges: BTreeSet<_> = self
            .edges()
            .iter()
            .map(|&(a, b)| super::edge(map[&a], map[&b]))
            .collect();
        edges.len() == other.edge_count() && edges.iter().all(|&(a, b)| other.contains_edge(a, b))
    }
}
