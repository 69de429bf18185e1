//! Simplicial complexes on at most 64 labels and their reduced homology.

mod linalg;

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use linalg::{rank, SparseColumn};

/// A face as a bitmask over labels `0..64`.
pub type Face = u64;

pub fn face(labels: &[usize]) -> Face {
    labels.iter().fold(0, |acc, &l| acc | (1u64 << l))
}

pub fn labels(f: Face) -> Vec<usize> {
    (0..64).filter(|&l| f >> l & 1 == 1).collect()
}

/// Coefficient field for homology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Field {
    Prime(u32),
    Rational,
}

impl Default for Field {
    fn default() -> Self {
        Field::Prime(32003)
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" | "q" | "Q" | "rational" => Ok(Field::Rational),
            _ => {
                let p: u32 = s.parse().map_err(|_| Error::InvalidArgument(format!("unknown field {s:?}")))?;
                let prime = p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0);
                if !prime || p > 1 << 31 {
                    return Err(Error::InvalidArgument(format!("{p} is not a usable prime")));
                }
                Ok(Field::Prime(p))
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Prime(p) => write!(f, "GF({p})"),
            Field::Rational => f.write_str("Q"),
        }
    }
}

/// Facet antichain; downward closure implied. No facets is the void
/// complex, the single facet `∅` is the complex `{∅}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
}

impl SimplicialComplex {
    pub fn void() -> Self {
        Self { facets: Vec::new() }
    }

    /// `{∅}`.
    pub fn empty_face() -> Self {
        Self { facets: vec![0] }
    }

    pub fn simplex(f: Face) -> Self {
        Self { facets: vec![f] }
    }

    /// Keeps the inclusion-maximal sets.
    pub fn from_facets(faces: impl IntoIterator<Item = Face>) -> Self {
        let mut all: Vec<Face> = faces.into_iter().collect();
        all.sort_by_key(|f| std::cmp::Reverse(f.count_ones()));
        all.dedup();
        let mut facets: Vec<Face> = Vec::new();
        for f in all {
            if !facets.iter().any(|&g| f & !g == 0) {
                facets.push(f);
            }
        }
        facets.sort_unstable();
        Self { facets }
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `-1` for `{∅}`.
    pub fn dimension(&self) -> Option<i32> {
        self.facets.iter().map(|f| f.count_ones() as i32 - 1).max()
    }

    pub fn vertex_set(&self) -> Face {
        self.facets.iter().fold(0, |a, &f| a | f)
    }

    pub fn contains(&self, f: Face) -> bool {
        self.facets.iter().any(|&g| f & !g == 0)
    }

    /// All faces, grouped by size.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        let Some(dim) = self.dimension() else { return Vec::new() };
        let mut levels: Vec<HashSet<Face>> = vec![HashSet::new(); (dim + 2) as usize];
        for &f in &self.facets {
            levels[f.count_ones() as usize].insert(f);
        }
        for size in (1..levels.len()).rev() {
            let current: Vec<Face> = levels[size].iter().copied().collect();
            for f in current {
                let mut rest = f;
                while rest != 0 {
                    let bit = rest & rest.wrapping_neg();
                    levels[size - 1].insert(f & !bit);
                    rest &= !bit;
                }
            }
        }
        levels
            .into_iter()
            .map(|l| {
                let mut v: Vec<Face> = l.into_iter().collect();
                v.sort_unstable();
                v
            })
            .collect()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::from_facets(self.facets.iter().chain(&other.facets).copied())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        Self::from_facets(self.facets.iter().flat_map(|&f| other.facets.iter().map(move |&g| f & g)))
    }

    /// A label lying in every facet (the least one), if any.
    pub fn is_cone(&self) -> Option<usize> {
        let common = self.facets.iter().fold(u64::MAX, |a, &f| a & f);
        (!self.is_void() && common != 0).then(|| common.trailing_zeros() as usize)
    }

    pub fn reduced_homology(&self, field: Field) -> HomologyProfile {
        reduced_homology(self, field)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_void() {
            return f.write_str("void");
        }
        let parts: Vec<String> = self
            .facets
            .iter()
            .map(|&g| format!("{{{}}}", labels(g).iter().map(|l| l.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "<{}>", parts.join(" "))
    }
}

/// `A * Δ`: facets `A ∪ F`; the cone over the void complex is the simplex on `A`.
pub fn cone(a: Face, delta: &SimplicialComplex) -> Result<SimplicialComplex> {
    if a == 0 {
        return Err(Error::InvalidArgument("cone over an empty label set".into()));
    }
    if delta.is_void() {
        return Ok(SimplicialComplex::simplex(a));
    }
    Ok(SimplicialComplex::from_facets(delta.facets.iter().map(|&f| f | a)))
}

/// `dim H̃_i` for `i = -1, 0, 1, ...`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: Field,
    /// `dims[k]` is `dim H̃_{k-1}`.
    dims: Vec<usize>,
}

impl HomologyProfile {
    pub fn get(&self, i: i32) -> usize {
        usize::try_from(i + 1).ok().and_then(|k| self.dims.get(k)).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    /// Nonzero entries as `(i, dim H̃_i)`.
    pub fn nonzero(&self) -> BTreeMap<i32, usize> {
        self.dims
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(k, &d)| (k as i32 - 1, d))
            .collect()
    }

    pub fn zero(field: Field) -> Self {
        Self { field, dims: Vec::new() }
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.nonzero().iter().map(|(i, d)| format!("H~{i}={d}")).collect();
        if parts.is_empty() {
            write!(f, "acyclic over {}", self.field)
        } else {
            write!(f, "{} over {}", parts.join(" "), self.field)
        }
    }
}

/// Boundary matrix from faces of size `k` to faces of size `k - 1`.
pub fn boundary_columns(faces: &[Face], lower: &[Face]) -> Vec<SparseColumn> {
    let index: std::collections::HashMap<Face, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    faces
        .iter()
        .map(|&f| {
            let mut col: SparseColumn = labels(f)
                .iter()
                .enumerate()
                .map(|(pos, &l)| (index[&(f & !(1u64 << l))], if pos % 2 == 0 { 1 } else { -1 }))
                .collect();
            col.sort_unstable();
            col
        })
        .collect()
}

pub fn reduced_homology(delta: &SimplicialComplex, field: Field) -> HomologyProfile {
    if delta.is_void() {
        return HomologyProfile::zero(field);
    }
    let levels = delta.faces_by_size();
    // ranks[k] = rank of the boundary from size-k faces to size-(k-1) faces
    let ranks: Vec<usize> = (0..levels.len())
        .into_par_iter()
        .map(|k| if k == 0 { 0 } else { rank(&boundary_columns(&levels[k], &levels[k - 1]), field) })
        .collect();
    let dims = (0..levels.len())
        .map(|k| levels[k].len() - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0))
        .collect();
    HomologyProfile { field, dims }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets([face(&[0, 1]), face(&[1, 2]), face(&[0, 2])])
    }

    #[test]
    fn homology_examples() {
        let h = hollow_triangle().reduced_homology(Field::default());
        assert_eq!(h.nonzero(), BTreeMap::from([(1, 1)]));
        let h = SimplicialComplex::empty_face().reduced_homology(Field::Rational);
        assert_eq!(h.nonzero(), BTreeMap::from([(-1, 1)]));
        let two_points = SimplicialComplex::from_facets([face(&[0]), face(&[1])]);
        assert_eq!(two_points.reduced_homology(Field::default()).nonzero(), BTreeMap::from([(0, 1)]));
        assert!(SimplicialComplex::void().reduced_homology(Field::default()).is_acyclic());
        assert!(SimplicialComplex::simplex(face(&[0, 1, 2])).reduced_homology(Field::Rational).is_acyclic());
        // the octahedron boundary is a 2-sphere
        let oct = SimplicialComplex::from_facets(
            [[0, 2, 4], [0, 2, 5], [0, 3, 4], [0, 3, 5], [1, 2, 4], [1, 2, 5], [1, 3, 4], [1, 3, 5]].map(|f| face(&f)),
        );
        assert_eq!(oct.reduced_homology(Field::Rational).nonzero(), BTreeMap::from([(2, 1)]));
    }

    #[test]
    fn projective_plane_depends_on_the_field() {
        // six-vertex triangulation of RP^2
        let rp2 = SimplicialComplex::from_facets(
            [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1], [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]]
                .map(|f| face(&f)),
        );
        assert!(rp2.reduced_homology(Field::Rational).is_acyclic());
        assert_eq!(rp2.reduced_homology(Field::Prime(2)).nonzero(), BTreeMap::from([(1, 1), (2, 1)]));
    }

    #[test]
    fn cone_examples() {
        let two_points = SimplicialComplex::from_facets([face(&[0]), face(&[1])]);
        let c = cone(face(&[5]), &two_points).unwrap();
        assert_eq!(c.facets(), &[face(&[0, 5]), face(&[1, 5])]);
        assert_eq!(cone(face(&[1, 2]), &SimplicialComplex::empty_face()).unwrap(), SimplicialComplex::simplex(face(&[1, 2])));
        assert_eq!(cone(face(&[1, 2]), &SimplicialComplex::void()).unwrap(), SimplicialComplex::simplex(face(&[1, 2])));
        assert!(cone(face(&[7]), &hollow_triangle()).unwrap().reduced_homology(Field::default()).is_acyclic());
        assert!(cone(0, &hollow_triangle()).is_err());
        assert_eq!(hollow_triangle().is_cone(), None);
        assert_eq!(SimplicialComplex::simplex(face(&[1, 2, 3])).is_cone(), Some(1));
        assert_eq!(c.is_cone(), Some(5));
    }

    #[test]
    fn union_and_intersection() {
        let t = hollow_triangle();
        assert_eq!(t.union(&SimplicialComplex::void()), t);
        assert_eq!(t.intersection(&t), t);
        let a = SimplicialComplex::simplex(face(&[0, 1, 2]));
        let b = SimplicialComplex::simplex(face(&[1, 2, 3]));
        assert!(a.union(&b).reduced_homology(Field::default()).is_acyclic());
        assert_eq!(a.intersection(&b), SimplicialComplex::simplex(face(&[1, 2])));
        assert_eq!("exact".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("8".parse::<Field>().is_err());
    }

    fn arb_complex(labels: usize) -> impl Strategy<Value = SimplicialComplex> {
        proptest::collection::vec(1u64..(1 << labels), 0..6).prop_map(SimplicialComplex::from_facets)
    }

    proptest! {
        #[test]
        fn fields_agree_and_euler_characteristic(d in arb_complex(7)) {
            let q = d.reduced_homology(Field::Rational);
            let p = d.reduced_homology(Field::default());
            prop_assert_eq!(&q.dims, &p.dims);
            // reduced Euler characteristic from faces equals that from homology
            let levels = d.faces_by_size();
            let chi: i64 = levels.iter().enumerate().map(|(k, l)| if k % 2 == 1 { l.len() as i64 } else { -(l.len() as i64) }).sum();
            let chi_h: i64 = q.dims.iter().enumerate().map(|(k, &x)| if k % 2 == 1 { x as i64 } else { -(x as i64) }).sum();
            prop_assert_eq!(chi, chi_h);
        }

        #[test]
        fn cones_are_acyclic(d in arb_complex(6), a in 1u64..8) {
            prop_assert!(cone(a << 6, &d).unwrap().reduced_homology(Field::default()).is_acyclic());
        }

        #[test]
        fn union_of_acyclic_pair(d1 in arb_complex(6), d2 in arb_complex(6), a in 0usize..7, b in 0usize..7) {
            // cones over a label outside the complex (or a vertex of it) are acyclic
            let c1 = cone(1 << a, &d1).unwrap();
            let c2 = cone(1 << b, &d2).unwrap();
            let u = c1.union(&c2).reduced_homology(Field::default());
            let i = c1.intersection(&c2).reduced_homology(Field::default());
            for k in 1..8 {
                prop_assert_eq!(u.get(k), i.get(k - 1));
            }
        }

        #[test]
        fn three_part_complexes_ignore_the_cone_labels(
            d1 in arb_complex(5), d2 in arb_complex(5), d3 in arb_complex(5),
            parts in proptest::collection::vec(0u8..3, 6),
        ) {
            // labels 5..10 split into A, B, rest; labels 10..15 into A', B', rest
            let split = |offset: usize, p: &[u8]| {
                let mut ab = (1u64 << (offset + 3), 1u64 << (offset + 4));
                for (k, &x) in p.iter().enumerate() {
                    match x { 0 => ab.0 |= 1 << (offset + k), 1 => ab.1 |= 1 << (offset + k), _ => {} }
                }
                ab
            };
            let (a, b) = split(5, &parts[..3]);
            let (a2, b2) = split(10, &parts[3..]);
            let build = |a: Face, b: Face| {
                cone(a, &d1).unwrap().union(&cone(b, &d2).unwrap()).union(&cone(a | b, &d3).unwrap())
            };
            let h = build(a, b).reduced_homology(Field::default());
            let h2 = build(a2, b2).reduced_homology(Field::default());
            for k in 1..8 {
                prop_assert_eq!(h.get(k), h2.get(k));
            }
        }
    }
}
