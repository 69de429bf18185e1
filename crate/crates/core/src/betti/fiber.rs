use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::Semigroup;
use crate::graph::SimpleGraph;
use crate::homology::{Face, SimplicialComplex};

/// `Δ_s = {F ⊆ E : s - φ(e_F) ∈ Im φ}` on edge indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberComplex {
    pub s: Vec<u32>,
    pub complex: SimplicialComplex,
}

pub fn fiber_complex(g: &SimpleGraph, s: &[u32]) -> FiberComplex {
    fiber_complex_with(g, s, &mut Semigroup::new(g))
}

/// Same, reusing a membership memo.
pub fn fiber_complex_with(g: &SimpleGraph, s: &[u32], sg: &mut Semigroup) -> FiberComplex {
    assert!(g.edge_count() <= 64, "faces are 64-bit masks");
    let complex = if sg.contains(s) {
        let rows: Vec<(usize, usize)> = (0..g.edge_count()).map(|j| g.edge_rows(j)).collect();
        let mut faces = HashSet::new();
        let mut residual = s.to_vec();
        collect(&rows, 0, 0, &mut residual, sg, &mut faces);
        let facets = faces.iter().copied().filter(|&f| {
            (0..rows.len()).all(|j| f >> j & 1 == 1 || !faces.contains(&(f | 1 << j)))
        });
        SimplicialComplex::from_facets(facets)
    } else {
        SimplicialComplex::void()
    };
    FiberComplex { s: s.to_vec(), complex }
}

/// Faces extending `f` by edges of index at least `from`; faces are
/// downward closed, so a non-face prunes its whole subtree.
fn collect(
    rows: &[(usize, usize)],
    from: usize,
    f: Face,
    residual: &mut Vec<u32>,
    sg: &mut Semigroup,
    faces: &mut HashSet<Face>,
) {
    faces.insert(f);
    for j in from..rows.len() {
        let (a, b) = rows[j];
        if residual[a] == 0 || residual[b] == 0 {
            continue;
        }
        residual[a] -= 1;
        residual[b] -= 1;
        if sg.contains(residual) {
            collect(rows, j + 1, f | 1 << j, residual, sg, faces);
        }
        residual[a] += 1;
        residual[b] += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::{face, Field};
    use crate::testing::cycle;

    #[test]
    fn fiber_examples() {
        let c4 = cycle(4);
        assert_eq!(fiber_complex(&c4, &[0; 4]).complex, SimplicialComplex::empty_face());
        assert!(fiber_complex(&c4, &[1, 0, 1, 0]).complex.is_void());
        // edges (1,2),(1,4),(2,3),(3,4): perfect matchings {0,3} and {1,2}
        let d = fiber_complex(&c4, &[1; 4]).complex;
        assert_eq!(d.facets(), &[face(&[1, 2]), face(&[0, 3])]);
        assert_eq!(d.reduced_homology(Field::default()).get(0), 1);
    }
}
