//! Even closed walks of a graph and their binomials `f_w = e_{w+} - e_{w-}`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::binomial::EdgeMonomial;
use crate::error::{Error, Result};
use crate::graph::{ContractionResult, Path, SimpleGraph, Vertex};

/// A closed walk of even length whose binomial is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClosedEvenWalk {
    /// `x0, ..., x_{2k}` with `x0 == x_{2k}`.
    vertices: Vec<Vertex>,
    edges: Vec<usize>,
    nvars: usize,
}

impl ClosedEvenWalk {
    pub fn new(g: &SimpleGraph, vertices: Vec<Vertex>) -> Result<Self> {
        let w = crate::graph::Walk::new(g, vertices)?;
        if !w.is_closed() || !w.is_even() || w.is_empty() {
            return Err(Error::NotAWalk("expected a closed walk of positive even length".into()));
        }
        let edges = w.edge_indices(g);
        let walk = Self { vertices: w.vertices().to_vec(), edges, nvars: g.edge_count() };
        if walk.plus() == walk.minus() {
            return Err(Error::NotAWalk("walk has a zero binomial".into()));
        }
        Ok(walk)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// `(e1, ..., e_{2k})` as indices into the canonical edge order.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// `e_{w+}`: product of the edges in odd positions.
    pub fn plus(&self) -> EdgeMonomial {
        EdgeMonomial::from_indices(self.nvars, self.edges.iter().step_by(2).copied())
    }

    /// `e_{w-}`: product of the edges in even positions.
    pub fn minus(&self) -> EdgeMonomial {
        EdgeMonomial::from_indices(self.nvars, self.edges.iter().skip(1).step_by(2).copied())
    }

    /// Largest number of times one edge is traversed.
    pub fn max_edge_multiplicity(&self) -> u32 {
        let m = EdgeMonomial::from_indices(self.nvars, self.edges.iter().copied());
        m.exponents().iter().copied().max().unwrap_or(0)
    }

    /// Least rotation or reflection of the cyclic edge sequence.
    pub fn canonical_edges(&self) -> Vec<usize> {
        canonical_cycle(&self.edges)
    }

    /// Same cyclic vertex sequence up to rotation and reflection.
    pub fn is_rotation_of(&self, other: &Self) -> bool {
        let a = &self.vertices[..self.len()];
        let b = &other.vertices[..other.len()];
        a.len() == b.len() && canonical_cycle(a) == canonical_cycle(b)
    }
}

impl fmt::Display for ClosedEvenWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(|v| format!("x{v}")).collect();
        write!(f, "({})", vs.join(","))
    }
}

fn canonical_cycle<T: Ord + Copy>(seq: &[T]) -> Vec<T> {
    let n = seq.len();
    let mut best: Option<Vec<T>> = None;
    let rev: Vec<T> = seq.iter().rev().copied().collect();
    for s in [seq, rev.as_slice()] {
        for r in 0..n {
            let cand: Vec<T> = s[r..].iter().chain(&s[..r]).copied().collect();
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap_or_default()
}

/// `plus - minus`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WalkBinomial {
    pub plus: EdgeMonomial,
    pub minus: EdgeMonomial,
}

impl WalkBinomial {
    pub fn swapped(&self) -> Self {
        Self { plus: self.minus.clone(), minus: self.plus.clone() }
    }

    /// Sign normalisation: the plus side is the larger exponent vector, so
    /// `e1*e3 - e2*e4` rather than its negative.
    pub fn normalized(&self) -> Self {
        if self.plus >= self.minus {
            self.clone()
        } else {
            self.swapped()
        }
    }

    pub fn degree(&self) -> u32 {
        self.plus.degree()
    }

    /// `M_G (plus - minus) = 0`.
    pub fn is_in_kernel(&self, g: &SimpleGraph) -> bool {
        g.degree_of(self.plus.exponents()) == g.degree_of(self.minus.exponents())
    }

    /// `e_{v+} | e_{w+}` and `e_{v-} | e_{w-}` for `v = self`, `w = other`,
    /// in either orientation of `self`.
    pub fn divides(&self, other: &Self) -> bool {
        let straight = self.plus.divides(&other.plus) && self.minus.divides(&other.minus);
        let crossed = self.minus.divides(&other.plus) && self.plus.divides(&other.minus);
        straight || crossed
    }
}

impl fmt::Display for WalkBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

/// `f_w`, checked to lie in the kernel of `φ_G`.
pub fn walk_binomial(g: &SimpleGraph, w: &ClosedEvenWalk) -> Result<WalkBinomial> {
    let b = WalkBinomial { plus: w.plus(), minus: w.minus() };
    if b.plus.nvars() != g.edge_count() || b.plus.degree() != b.minus.degree() || !b.is_in_kernel(g) {
        return Err(Error::InvariantBreach(format!("binomial of {w} is not in the toric ideal")));
    }
    Ok(b)
}

/// No other walk in `all` has a binomial dividing that of `w`.
pub fn is_primitive(w: &ClosedEvenWalk, all: &[ClosedEvenWalk]) -> bool {
    let bw = WalkBinomial { plus: w.plus(), minus: w.minus() }.normalized();
    all.iter().all(|v| {
        let bv = WalkBinomial { plus: v.plus(), minus: v.minus() }.normalized();
        bv == bw || !bv.divides(&bw)
    })
}

/// Every primitive even closed walk, one per binomial (up to sign).
///
/// Depth-first search over walks starting at their least edge, each edge
/// used at most twice. Walks are cut as soon as they cannot be primitive:
/// an edge seen at both parities, or a vertex revisited after an even
/// number of steps.
pub fn enumerate_primitive_walks(g: &SimpleGraph) -> Vec<ClosedEvenWalk> {
    let n = g.edge_count();
    let found: Vec<Vec<Vertex>> = (0..n)
        .into_par_iter()
        .flat_map_iter(|e0| {
            let (a, b) = g.edges()[e0];
            let mut out = Vec::new();
            for (s, t) in [(a, b), (b, a)] {
                let mut search = WalkSearch::new(g, e0);
                search.run(s, t, &mut out);
            }
            out
        })
        .collect();

    let mut by_binomial: BTreeMap<WalkBinomial, ClosedEvenWalk> = BTreeMap::new();
    for vs in found {
        let w = ClosedEvenWalk::new(g, vs).expect("search emits closed even walks");
        let key = WalkBinomial { plus: w.plus(), minus: w.minus() }.normalized();
        match by_binomial.get(&key) {
            Some(old) if old.canonical_edges() <= w.canonical_edges() => {}
            _ => {
                by_binomial.insert(key, w);
            }
        }
    }
    let keys: Vec<&WalkBinomial> = by_binomial.keys().collect();
    let mut primitive: Vec<ClosedEvenWalk> = by_binomial
        .iter()
        .filter(|(k, _)| !keys.iter().any(|v| v != k && v.divides(k)))
        .map(|(_, w)| w.clone())
        .collect();
    primitive.sort_by_key(|w| (w.len(), w.canonical_edges()));
    primitive
}

struct WalkSearch<'a> {
    g: &'a SimpleGraph,
    min_edge: usize,
    uses: Vec<u8>,
    parity: Vec<Option<usize>>,
    seen_at: BTreeMap<Vertex, Vec<usize>>,
    vertices: Vec<Vertex>,
}

impl<'a> WalkSearch<'a> {
    fn new(g: &'a SimpleGraph, min_edge: usize) -> Self {
        Self {
            g,
            min_edge,
            uses: vec![0; g.edge_count()],
            parity: vec![None; g.edge_count()],
            seen_at: BTreeMap::new(),
            vertices: Vec::new(),
        }
    }

    fn run(&mut self, s: Vertex, t: Vertex, out: &mut Vec<Vec<Vertex>>) {
        self.push(s, None);
        self.push(t, Some(self.min_edge));
        self.extend(out);
    }

    fn push(&mut self, v: Vertex, e: Option<usize>) {
        if let Some(e) = e {
            let pos = self.vertices.len() - 1;
            self.uses[e] += 1;
            self.parity[e] = Some(pos % 2);
        }
        self.seen_at.entry(v).or_default().push(self.vertices.len());
        self.vertices.push(v);
    }

    fn pop(&mut self, e: usize) {
        let v = self.vertices.pop().unwrap();
        self.seen_at.get_mut(&v).unwrap().pop();
        self.uses[e] -= 1;
        if self.uses[e] == 0 {
            self.parity[e] = None;
        }
    }

    fn extend(&mut self, out: &mut Vec<Vec<Vertex>>) {
        let start = self.vertices[0];
        let here = *self.vertices.last().unwrap();
        let pos = self.vertices.len() - 1;
        let len = pos + 1;
        let nbrs: Vec<Vertex> = self.g.neighbors(here).unwrap().iter().copied().collect();
        for nb in nbrs {
            let e = self.g.edge_index(here, nb).unwrap();
            if e < self.min_edge || self.uses[e] == 2 || self.parity[e].is_some_and(|p| p != pos % 2) {
                continue;
            }
            if nb == start && len % 2 == 0 {
                self.push(nb, Some(e));
                out.push(self.vertices.clone());
                self.pop(e);
                continue;
            }
            let earlier = self.seen_at.get(&nb).map_or(&[][..], |v| v.as_slice());
            if earlier.iter().any(|&i| (len - i) % 2 == 0) {
                continue;
            }
            self.push(nb, Some(e));
            self.extend(out);
            self.pop(e);
        }
    }
}

/// `w/p` in `G/p`: the edges of `p` are dropped and the rest mapped by `χ`.
/// `Ok(None)` when the image degenerates (length 0 or 2, or a zero binomial).
pub fn contract_walk_image(
    g: &SimpleGraph,
    w: &ClosedEvenWalk,
    p: &Path,
    c: &ContractionResult,
) -> Result<Option<ClosedEvenWalk>> {
    let len = w.len();
    let cyc = &w.vertices()[..len];
    let p_edges = p.as_walk().edge_indices(g);
    let on_p: Vec<bool> = w.edges().iter().map(|e| p_edges.contains(e)).collect();

    for i in 0..len {
        let (a, b) = (cyc[i], cyc[(i + 1) % len]);
        if !on_p[i] && c.image(a) == c.image(b) {
            return Err(Error::NotAWalk(format!("{w} uses the edge {{{a}, {b}}} joining two vertices of p")));
        }
    }
    // p-edges must come in whole traversals of p or its reverse
    if on_p.iter().all(|&b| b) {
        return Err(Error::InvariantBreach(format!("{w} lies inside p")));
    }
    let first_off = on_p.iter().position(|&b| !b).unwrap();
    let mut i = first_off;
    for _ in 0..len {
        if on_p[i] && !on_p[(i + len - 1) % len] {
            let mut run = vec![cyc[i]];
            let mut j = i;
            while on_p[j] {
                j = (j + 1) % len;
                run.push(cyc[j]);
            }
            let t = p.len();
            let fwd = p.vertices();
            let ok = (run.len() - 1) % t == 0
                && (0..(run.len() - 1) / t).all(|k| {
                    let seg = &run[k * t..=(k + 1) * t];
                    seg == fwd || seg.iter().rev().eq(fwd.iter())
                });
            if !ok {
                return Err(Error::InvariantBreach(format!("{w} enters p without traversing it")));
            }
        }
        i = (i + 1) % len;
    }

    let mut image: Vec<Vertex> = (0..len).filter(|&i| !on_p[i]).map(|i| c.image(cyc[i])).collect();
    if image.len() % 2 == 1 {
        return Err(Error::InvariantBreach(format!("image of {w} has odd length")));
    }
    if image.len() <= 2 {
        return Ok(None);
    }
    image.push(image[0]);
    match ClosedEvenWalk::new(&c.graph, image) {
        Ok(v) => Ok(Some(v)),
        Err(Error::NotAWalk(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// An even closed walk `w` of `G` with `w/p = v`, built by replacing each
/// visit of the contracted vertex with `x0`, `x_{2t}`, `p` or `p^r`.
pub fn lift_walk(g: &SimpleGraph, p: &Path, c: &ContractionResult, v: &ClosedEvenWalk) -> Result<ClosedEvenWalk> {
    let y = c.new_vertex;
    let (x0, xt) = p.endpoints();
    let n0 = g.neighbors(x0)?;
    let nt = g.neighbors(xt)?;
    let len = v.len();
    let cyc = &v.vertices()[..len];
    let mut out = Vec::new();
    for i in 0..len {
        if cyc[i] != y {
            out.push(cyc[i]);
            continue;
        }
        let (x, x2) = (cyc[(i + len - 1) % len], cyc[(i + 1) % len]);
        if n0.contains(&x) && n0.contains(&x2) {
            out.push(x0);
        } else if nt.contains(&x) && nt.contains(&x2) {
            out.push(xt);
        } else if n0.contains(&x) && nt.contains(&x2) {
            out.extend_from_slice(p.vertices());
        } else if nt.contains(&x) && n0.contains(&x2) {
            out.extend(p.vertices().iter().rev());
        } else {
            return Err(Error::InvariantBreach(format!("cannot lift the visit of x{y} in {v}")));
        }
    }
    out.push(out[0]);
    ClosedEvenWalk::new(g, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{contract_path, enumerate_paths, triangle_sequence};
    use crate::testing::{arb_connected_graph, cycle, two_triangles_two_paths};
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    /// Every closed even walk of length at most `max_len`, by brute force.
    fn all_closed_even_walks(g: &SimpleGraph, max_len: usize) -> Vec<ClosedEvenWalk> {
        fn go(g: &SimpleGraph, cur: &mut Vec<Vertex>, max_len: usize, out: &mut Vec<ClosedEvenWalk>) {
            let len = cur.len() - 1;
            if len > 0 && len % 2 == 0 && cur[0] == *cur.last().unwrap() {
                if let Ok(w) = ClosedEvenWalk::new(g, cur.clone()) {
                    out.push(w);
                }
            }
            if len == max_len {
                return;
            }
            let last = *cur.last().unwrap();
            for &nb in g.neighbors(last).unwrap() {
                cur.push(nb);
                go(g, cur, max_len, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        for &v in g.vertices() {
            go(g, &mut vec![v], max_len, &mut out);
        }
        out
    }

    /// Normalised binomials of the primitive walks found by brute force.
    fn brute_primitive_binomials(g: &SimpleGraph, max_len: usize) -> BTreeSet<WalkBinomial> {
        let all = all_closed_even_walks(g, max_len);
        let bins: BTreeSet<WalkBinomial> =
            all.iter().map(|w| WalkBinomial { plus: w.plus(), minus: w.minus() }.normalized()).collect();
        bins.iter().filter(|b| !bins.iter().any(|v| v != *b && v.divides(b))).cloned().collect()
    }

    fn enumerated_binomials(g: &SimpleGraph) -> BTreeSet<WalkBinomial> {
        enumerate_primitive_walks(g)
            .iter()
            .map(|w| walk_binomial(g, w).unwrap().normalized())
            .collect()
    }

    #[test]
    fn small_graphs() {
        assert!(enumerate_primitive_walks(&cycle(3)).is_empty());
        let c4 = enumerate_primitive_walks(&cycle(4));
        assert_eq!(c4.len(), 1);
        assert_eq!(c4[0].len(), 4);
        let bowtie = enumerate_primitive_walks(&triangle_sequence(2).unwrap());
        assert_eq!(bowtie.len(), 1);
        assert_eq!(bowtie[0].len(), 6);
        let b = walk_binomial(&triangle_sequence(2).unwrap(), &bowtie[0]).unwrap();
        assert_eq!(b.degree(), 3);
        assert!(b.plus.is_squarefree() && b.minus.is_squarefree());
        let tree = SimpleGraph::from_edges([(1, 2), (2, 3), (2, 4)]).unwrap();
        assert!(enumerate_primitive_walks(&tree).is_empty());
    }

    #[test]
    fn c4_binomial_text() {
        let g = cycle(4);
        // edges: 0={1,2} 1={1,4} 2={2,3} 3={3,4}
        let w = ClosedEvenWalk::new(&g, vec![1, 2, 3, 4, 1]).unwrap();
        assert_eq!(walk_binomial(&g, &w).unwrap().to_string(), "e1*e4 - e2*e3");
        assert!(is_primitive(&w, &enumerate_primitive_walks(&g)));
        let doubled = ClosedEvenWalk::new(&g, vec![1, 2, 3, 4, 1, 2, 3, 4, 1]).unwrap();
        assert!(!is_primitive(&doubled, &[w.clone(), doubled.clone()]));
        // (a,b,a) and (a,b,a,b,a) have zero binomials
        assert!(ClosedEvenWalk::new(&g, vec![1, 2, 1]).is_err());
        assert!(ClosedEvenWalk::new(&g, vec![1, 2, 1, 2, 1]).is_err());
    }

    #[test]
    fn k4_quadrics_are_primitive() {
        let k4 = SimpleGraph::from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
        let walks = enumerate_primitive_walks(&k4);
        assert_eq!(walks.len(), 3);
        for w in &walks {
            assert_eq!(w.len(), 4);
            assert!(is_primitive(w, &walks));
        }
    }

    #[test]
    fn matches_brute_force_on_fixtures() {
        let graphs = [
            cycle(4),
            cycle(6),
            triangle_sequence(2).unwrap(),
            triangle_sequence(3).unwrap(),
            SimpleGraph::from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 4)]).unwrap(),
            SimpleGraph::from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap(),
        ];
        for g in graphs {
            let bound = 2 * g.edge_count();
            assert_eq!(enumerated_binomials(&g), brute_primitive_binomials(&g, bound.min(12)), "{g}");
        }
    }

    #[test]
    fn example_graph_walks_in_kernel() {
        let g = two_triangles_two_paths();
        let walks = enumerate_primitive_walks(&g);
        assert!(!walks.is_empty());
        for w in &walks {
            assert!(w.max_edge_multiplicity() <= 2);
            assert!(walk_binomial(&g, w).unwrap().is_in_kernel(&g));
        }
    }

    #[test]
    fn image_cases() {
        let g = two_triangles_two_paths();
        let p = Path::new(&g, vec![1, 9, 10]).unwrap();
        let c = contract_path(&g, &p).unwrap();
        for w in enumerate_primitive_walks(&g) {
            let uses_p = w.edges().contains(&g.edge_index(1, 9).unwrap());
            let image = contract_walk_image(&g, &w, &p, &c).unwrap().expect("nondegenerate");
            if !uses_p {
                let mapped: Vec<Vertex> = w.vertices().iter().map(|&v| c.image(v)).collect();
                assert_eq!(image.vertices(), mapped.as_slice());
            } else {
                assert_eq!(image.len(), w.len() - 2 * w.edges().iter().filter(|&&e| e == g.edge_index(1, 9).unwrap()).count());
            }
        }
        // C4 with a length-2 path: the image is a 2-cycle
        let c4 = cycle(4);
        let p = Path::new(&c4, vec![1, 2, 3]).unwrap();
        let c = contract_path(&c4, &p).unwrap();
        let w = ClosedEvenWalk::new(&c4, vec![1, 2, 3, 4, 1]).unwrap();
        assert_eq!(contract_walk_image(&c4, &w, &p, &c).unwrap(), None);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn enumeration_invariants(g in arb_connected_graph(7)) {
            prop_assume!(g.edge_count() <= 10);
            let walks = enumerate_primitive_walks(&g);
            for w in &walks {
                prop_assert!(w.max_edge_multiplicity() <= 2);
                let b = walk_binomial(&g, w).unwrap();
                prop_assert!(b.plus.is_coprime(&b.minus));
                prop_assert!(is_primitive(w, &walks));
            }
            if g.edge_count() <= 7 {
                prop_assert_eq!(enumerated_binomials(&g), brute_primitive_binomials(&g, 2 * g.edge_count()));
            }
        }

        #[test]
        fn contraction_images_and_lifts(g in arb_connected_graph(8)) {
            prop_assume!(g.edge_count() <= 11);
            let walks = enumerate_primitive_walks(&g);
            for p in enumerate_paths(&g).into_iter().filter(|p| p.is_even()) {
                let (a, b) = p.endpoints();
                let c = contract_path(&g, &p).unwrap();
                for w in &walks {
                    match contract_walk_image(&g, w, &p, &c) {
                        Ok(Some(v)) => prop_assert!(v.len() % 2 == 0),
                        Ok(None) => {}
                        // only a chord between the ends of p can map to a loop
                        Err(Error::NotAWalk(_)) => prop_assert!(g.contains_edge(a, b)),
                        Err(e) => prop_assert!(false, "{}", e),
                    }
                }
                for v in enumerate_primitive_walks(&c.graph) {
                    let w = lift_walk(&g, &p, &c, &v).unwrap();
                    let back = contract_walk_image(&g, &w, &p, &c).unwrap().unwrap();
                    prop_assert!(back.is_rotation_of(&v));
                }
            }
        }
    }
}
