//! Graphs of the worked examples with their expected total Betti numbers.

use crate::error::{Error, Result};
use crate::graph::{contract_edge, contract_path, contract_walk, Edge, Path, SimpleGraph, Walk};

#[derive(Clone, Debug)]
pub struct Fixture {
    /// e.g. `ex-2.8-G`, `fig-10-G/e`.
    pub id: String,
    pub graph: SimpleGraph,
    pub expected: Vec<usize>,
    /// How the graph was obtained.
    pub provenance: &'static str,
}

/// Example ids accepted by [`example`].
pub const EXAMPLE_IDS: [&str; 7] = ["ex-2.8", "ex-2.9", "ex-2.10", "ex-2.11", "fig-10", "fig-11", "fig-12"];

fn graph(edges: &[Edge]) -> SimpleGraph {
    SimpleGraph::from_edges(edges.iter().copied()).expect("fixture graph")
}

fn fixture(id: &str, graph: SimpleGraph, expected: &[usize], provenance: &'static str) -> Fixture {
    Fixture { id: id.to_string(), graph, expected: expected.to_vec(), provenance }
}

pub fn ex_2_8_g() -> SimpleGraph {
    graph(&[
        (1, 2), (2, 3), (1, 3), (3, 4), (3, 5), (5, 6), (4, 6), (6, 7), (6, 8), (7, 8),
        (4, 9), (5, 9), (4, 10), (10, 11), (5, 11),
    ])
}

pub fn ex_2_9_g() -> SimpleGraph {
    graph(&[
        (1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 7), (7, 8), (4, 8), (1, 9), (9, 10), (4, 10),
    ])
}

pub fn ex_2_10_g() -> SimpleGraph {
    graph(&[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (1, 7), (7, 8), (4, 8), (1, 9), (4, 9)])
}

pub fn ex_2_11_g() -> SimpleGraph {
    graph(&[
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (2, 5), (1, 7), (1, 8), (7, 9), (8, 9), (9, 10),
        (9, 11), (10, 11),
    ])
}

/// Shared right half of the three edge-contraction figures.
fn fig_10_g() -> SimpleGraph {
    graph(&[
        (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 8), (2, 8), (2, 9), (3, 9), (5, 10), (5, 11), (10, 11),
        (5, 12), (6, 12),
    ])
}

fn fig_11_g() -> SimpleGraph {
    graph(&[
        (1, 3), (2, 3), (1, 8), (3, 8), (2, 9), (3, 9), (3, 4), (4, 5), (5, 6), (5, 10), (5, 11), (10, 11),
        (5, 12), (6, 12),
    ])
}

fn fig_12_g() -> SimpleGraph {
    graph(&[
        (1, 2), (2, 3), (1, 8), (2, 8), (2, 9), (3, 9), (3, 4), (4, 5), (5, 6), (5, 12), (6, 12), (6, 10),
        (6, 13), (10, 13),
    ])
}

fn path(g: &SimpleGraph, vs: &[u32]) -> Path {
    Path::new(g, vs.to_vec()).expect("fixture path")
}

/// The graphs of one example, in the order their tables are printed.
pub fn example(id: &str) -> Result<Vec<Fixture>> {
    let text = "edge list printed in the text";
    let figure = "transcribed from the figure";
    let derived = "computed surgery on the previous graph";
    Ok(match id {
        "ex-2.8" => {
            let g = ex_2_8_g();
            let g2 = contract_edge(&g, 10, 11)?.graph;
            vec![
                fixture("ex-2.8-G", g, &[1, 8, 18, 16, 5], figure),
                fixture("ex-2.8-G'", g2, &[1, 9, 19, 9, 1], derived),
            ]
        }
        "ex-2.9" => {
            let g = ex_2_9_g();
            let gp = contract_path(&g, &path(&g, &[1, 9, 10]))?.graph;
            vec![fixture("ex-2.9-G", g, &[1, 4, 4, 1], text), fixture("ex-2.9-G/p", gp, &[1, 2, 1], derived)]
        }
        "ex-2.10" => {
            let g = ex_2_10_g();
            let gp = contract_path(&g, &path(&g, &[1, 9, 4]))?.graph;
            vec![fixture("ex-2.10-G'", g, &[1, 4, 4, 1], text), fixture("ex-2.10-G'/p'", gp, &[1, 3, 2], derived)]
        }
        "ex-2.11" => {
            let g = ex_2_11_g();
            let w = Walk::new(&g, vec![1, 2, 3])?;
            let g2 = contract_walk(&g, &w)?.graph;
            vec![fixture("ex-2.11-G", g, &[1, 3, 3, 1], text), fixture("ex-2.11-G'", g2, &[1, 8, 15, 10, 2], derived)]
        }
        "fig-10" | "fig-11" | "fig-12" => {
            let (g, tables): (SimpleGraph, [&[usize]; 3]) = match id {
                "fig-10" => (fig_10_g(), [&[1, 6, 9, 4], &[1, 6, 9, 4], &[1, 6, 8, 3]]),
                "fig-11" => (fig_11_g(), [&[1, 6, 9, 4], &[1, 6, 8, 3], &[1, 6, 8, 3]]),
                _ => (fig_12_g(), [&[1, 6, 9, 4], &[1, 6, 9, 4], &[1, 6, 9, 4]]),
            };
            let ge = contract_edge(&g, 3, 4)?.graph;
            let gee = contract_path(&g, &path(&g, &[3, 4, 5]))?.graph;
            vec![
                fixture(&format!("{id}-G"), g, tables[0], figure),
                fixture(&format!("{id}-G/e"), ge, tables[1], derived),
                fixture(&format!("{id}-G/(e,e')"), gee, tables[2], derived),
            ]
        }
        _ => return Err(Error::UnknownExample(id.to_string())),
    })
}

/// Every fixture of every example.
pub fn all_fixtures() -> Vec<Fixture> {
    EXAMPLE_IDS.iter().flat_map(|id| example(id).expect("known id")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;

    #[test]
    fn fixture_shapes() {
        let all = all_fixtures();
        assert_eq!(all.len(), 17);
        for f in &all {
            assert!(f.graph.is_connected(), "{}", f.id);
            assert!(f.graph.vertex_count() <= 13 && f.graph.edge_count() <= 15, "{}", f.id);
        }
        assert!(example("ex-9.9").is_err());
    }

    #[test]
    fn ex_2_10_is_a_contraction_of_ex_2_9() {
        let g = ex_2_9_g();
        let g2 = contract_edge(&g, 9, 10).unwrap().graph;
        assert!(is_isomorphic(&g2, &ex_2_10_g()));
    }
}
