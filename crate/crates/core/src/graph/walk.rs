use std::collections::BTreeSet;

use super::{SimpleGraph, Vertex};
use crate::error::{Error, Result};

/// A vertex sequence `(x0, ..., xk)` with consecutive vertices adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Walk {
    vertices: Vec<Vertex>,
}

impl Walk {
    pub fn new(g: &SimpleGraph, vertices: Vec<Vertex>) -> Result<Self> {
        let w = Self { vertices };
        w.check_in(g)?;
        Ok(w)
    }

    /// Checks that this vertex sequence is a walk of `g`.
    pub fn check_in(&self, g: &SimpleGraph) -> Result<()> {
        let Some(&first) = self.vertices.first() else {
            return Err(Error::NotAWalk("empty vertex sequence".into()));
        };
        if !g.contains_vertex(first) {
            return Err(Error::UnknownVertex(first));
        }
        for pair in self.vertices.windows(2) {
            if !g.contains_edge(pair[0], pair[1]) {
                return Err(Error::NotAWalk(format!("{} and {} are not adjacent", pair[0], pair[1])));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        *self.vertices.last().unwrap()
    }

    pub fn is_closed(&self) -> bool {
        self.first() == self.last()
    }

    pub fn is_even(&self) -> bool {
        self.len() % 2 == 0
    }

    pub fn has_distinct_vertices(&self) -> bool {
        let set: BTreeSet<_> = self.vertices.iter().collect();
        set.len() == self.vertices.len()
    }

    /// Edge indices `(e1, ..., ek)` in `g`.
    pub fn edge_indices(&self, g: &SimpleGraph) -> Vec<usize> {
        self.vertices
            .windows(2)
            .map(|p| g.edge_index(p[0], p[1]).expect("walk edges belong to the graph"))
            .collect()
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Self { vertices }
    }

    /// `self || other`; the last vertex of `self` must start `other`.
    pub fn concat(&self, other: &Walk) -> Result<Self> {
        if self.last() != other.first() {
            return Err(Error::NotAWalk(format!(
                "cannot join a walk ending at {} to one starting at {}",
                self.last(),
                other.first()
            )));
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        Ok(Self { vertices })
    }
}

/// A walk with distinct vertices whose internal vertices have degree two
/// in the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path(Walk);

impl Path {
    pub fn new(g: &SimpleGraph, vertices: Vec<Vertex>) -> Result<Self> {
        let w = Walk::new(g, vertices)?;
        Self::from_walk(g, w)
    }

    pub fn from_walk(g: &SimpleGraph, w: Walk) -> Result<Self> {
        if !w.has_distinct_vertices() {
            return Err(Error::NotAPath("repeated vertex".into()));
        }
        if !is_path(g, &w) {
            return Err(Error::NotAPath("an internal vertex has degree other than 2".into()));
        }
        Ok(Self(w))
    }

    pub fn as_walk(&self) -> &Walk {
        &self.0
    }

    pub fn vertices(&self) -> &[Vertex] {
        self.0.vertices()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.0.is_even()
    }

    pub fn endpoints(&self) -> (Vertex, Vertex) {
        (self.0.first(), self.0.last())
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.reversed())
    }

    /// Whether the vertex sequence of `self` occurs contiguously in that of
    /// `other`, in either orientation.
    pub fn is_contained_in(&self, other: &Path) -> bool {
        let (p, q) = (self.vertices(), other.vertices());
        if p.len() > q.len() {
            return false;
        }
        let rev: Vec<Vertex> = p.iter().rev().copied().collect();
        q.windows(p.len()).any(|win| win == p || win == rev.as_slice())
    }
}

/// Distinct vertices and every internal vertex of degree 2 in `g`.
pub fn is_path(g: &SimpleGraph, w: &Walk) -> bool {
    if w.check_in(g).is_err() || !w.has_distinct_vertices() {
        return false;
    }
    let vs = w.vertices();
    vs.len() < 3 || vs[1..vs.len() - 1].iter().all(|&x| matches!(g.degree(x), Ok(2)))
}

/// `N(x) ∩ N(x') ⊆ p` for the endpoints `x, x'` of `p`.
pub fn is_simple_path(g: &SimpleGraph, p: &Path) -> bool {
    let (x, y) = p.endpoints();
    let (Ok(nx), Ok(ny)) = (g.neighbors(x), g.neighbors(y)) else {
        return false;
    };
    let on_path: BTreeSet<Vertex> = p.vertices().iter().copied().collect();
    nx.intersection(ny).all(|v| on_path.contains(v))
}

/// Every path of length at least one, each listed once with its first
/// vertex smaller than its last.
pub fn enumerate_paths(g: &SimpleGraph) -> Vec<Path> {
    fn extend(g: &SimpleGraph, current: &mut Vec<Vertex>, out: &mut Vec<Path>) {
        let last = *current.last().unwrap();
        if current.len() >= 2 && current[0] < last {
            out.push(Path(Walk { vertices: current.clone() }));
        }
        // only a degree-2 vertex may become internal
        if current.len() >= 2 && !matches!(g.degree(last), Ok(2)) {
            return;
        }
        for &next in g.neighbors(last).unwrap() {
            if current.contains(&next) {
                continue;
            }
            current.push(next);
            extend(g, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    for &v in g.vertices() {
        extend(g, &mut vec![v], &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testing::cycle;

    /// Host graph of the bold-walk figures: a triangle at x1 and two
    /// routes x1-x7-x8-x4 and x1-x9-x10-x4.
    fn figure_host() -> SimpleGraph {
        SimpleGraph::from_edges([
            (1, 2), (2, 3), (3, 1), (1, 7), (7, 8), (8, 4), (4, 10), (10, 9), (9, 1),
        ])
        .unwrap()
    }

    #[test]
    fn bold_walks_that_are_not_paths() {
        let g = figure_host();
        let a = Walk::new(&g, vec![2, 1, 9, 10, 4]).unwrap();
        let b = Walk::new(&g, vec![7, 1, 9]).unwrap();
        assert!(!is_path(&g, &a));
        assert!(!is_path(&g, &b));
    }

    #[test]
    fn bold_walks_that_are_paths() {
        let g = figure_host();
        let a = Path::new(&g, vec![4, 10, 9, 1]).unwrap();
        let b = Path::new(&g, vec![7, 8, 4, 10, 9]).unwrap();
        assert!(is_simple_path(&g, &a));
        assert!(!is_simple_path(&g, &b));
    }

    #[test]
    fn single_edge_is_a_path() {
        let g = figure_host();
        for &(a, b) in g.edges() {
            assert!(is_path(&g, &Walk::new(&g, vec![a, b]).unwrap()));
        }
    }

    #[test]
    fn length_two_path_in_c4_is_not_simple() {
        let g = cycle(4);
        let p = Path::new(&g, vec![1, 2, 3]).unwrap();
        // 2 and 4 are both common neighbours of 1 and 3
        assert!(!is_simple_path(&g, &p));
    }

    #[test]
    fn walk_constructor_rejects_non_adjacent() {
        let g = cycle(4);
        assert!(Walk::new(&g, vec![1, 3]).is_err());
        assert!(Walk::new(&g, vec![]).is_err());
        assert!(Path::new(&g, vec![1, 2, 1]).is_err());
    }

    #[test]
    fn concat_and_reverse() {
        let g = cycle(4);
        let a = Walk::new(&g, vec![1, 2, 3]).unwrap();
        let b = Walk::new(&g, vec![3, 4, 1]).unwrap();
        let c = a.concat(&b).unwrap();
        assert_eq!(c.vertices(), &[1, 2, 3, 4, 1]);
        assert!(c.is_closed() && c.is_even());
        assert!(b.concat(&b).is_err());
        assert_eq!(a.reversed().vertices(), &[3, 2, 1]);
    }

    #[test]
    fn containment_either_orientation() {
        let g = SimpleGraph::from_edges([(1, 2), (2, 3), (3, 4), (4, 5)]).unwrap();
        let q = Path::new(&g, vec![1, 2, 3, 4, 5]).unwrap();
        assert!(Path::new(&g, vec![4, 3, 2]).unwrap().is_contained_in(&q));
        assert!(Path::new(&g, vec![2, 3, 4]).unwrap().is_contained_in(&q));
        assert!(!q.is_contained_in(&Path::new(&g, vec![2, 3, 4]).unwrap()));
    }

    #[test]
    fn enumerated_paths_satisfy_predicate() {
        let g = figure_host();
        let paths = enumerate_paths(&g);
        assert!(paths.iter().all(|p| is_path(&g, p.as_walk())));
        // every edge appears as a length-one path
        assert_eq!(paths.iter().filter(|p| p.len() == 1).count(), g.edge_count());
        assert!(paths.iter().any(|p| p.vertices() == [1, 9, 10, 4]));
    }
}
