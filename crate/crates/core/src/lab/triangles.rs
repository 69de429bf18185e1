//! Sequences of triangles `T_n` and their edge-connected pairs.

use crate::betti::{betti_table, candidate_degrees, BettiOptions};
use crate::binomial::{OrderKind, TermOrder};
use crate::error::Result;
use crate::graph::{connect_by_edge, contract_edge, triangle_sequence, triangle_sequence_listing, SimpleGraph, Vertex};

use super::CheckReport;

/// Degree-2 vertices with a degree-2 neighbour.
pub fn attachment_vertices(g: &SimpleGraph) -> Vec<Vertex> {
    let deg2 = |v: Vertex| g.degree(v).map_or(false, |d| d == 2);
    g.vertices()
        .iter()
        .copied()
        .filter(|&v| deg2(v) && g.neighbors(v).unwrap().iter().any(|&u| deg2(u)))
        .collect()
}

/// Totals of `S / in(I_{T_k})` for lex with `e1 > e2 > ...` in listing order.
pub fn lex_initial_totals(k: u32) -> Result<Vec<usize>> {
    let t = triangle_sequence(k)?;
    let ord = TermOrder::new(OrderKind::Lex, triangle_sequence_listing(&t, k))?;
    Ok(candidate_degrees(&t, &ord)?.monomial_totals())
}

/// Parts (a)–(c) of the triangle-sequence remark for all `n, m >= 1` with
/// `n + m <= max_total`, over every admissible connecting edge.
pub fn triangle_study(max_total: u32, opts: &BettiOptions) -> Result<Vec<CheckReport>> {
    let mut reports = Vec::new();
    for n in 1..=max_total {
        let t = triangle_sequence(n)?;
        let tab = betti_table(&t, opts)?;
        let mut r = CheckReport::new("remark-4.6a", format!("T_{n}"), &t);
        r.conclusion = Some(tab.cm && tab.codim + 1 == n as usize);
        r.notes.push(format!(
            "CM {}, codim {}, Krull dimension {} (the remark says Krull dimension {})",
            tab.cm,
            tab.codim,
            tab.krull_dim,
            n as i64 - 1
        ));
        r.tables.insert("T_n".into(), tab.totals);
        reports.push(r);
    }
    for total in 2..=max_total {
        let whole = betti_table(&triangle_sequence(total)?, opts)?.totals;
        let initial = lex_initial_totals(total)?;
        for n in 1..total {
            let m = total - n;
            let tn = triangle_sequence(n)?;
            let tm = triangle_sequence(m)?.shifted(2 * n + 1);
            for &x in &attachment_vertices(&tn) {
                for &y in &attachment_vertices(&tm) {
                    let (g, _) = connect_by_edge(&tn, x, &tm, y)?;
                    let tab = betti_table(&g, opts)?;
                    let contracted = betti_table(&contract_edge(&g, x, y)?.graph, opts)?;
                    let instance = format!("T_{n} -e- T_{m}, e={{{x},{y}}}");

                    let mut b = CheckReport::new("remark-4.6b", instance.clone(), &g);
                    b.conclusion = Some(tab.cm);
                    b.tables.insert("G".into(), tab.totals.clone());
                    reports.push(b);

                    let mut c = CheckReport::new("remark-4.6c", instance, &g);
                    c.conclusion = Some(tab.totals == contracted.totals && tab.totals == whole && whole == initial);
                    c.tables.insert("G".into(), tab.totals);
                    c.tables.insert("G/e".into(), contracted.totals);
                    c.tables.insert("T_n+m".into(), whole.clone());
                    c.tables.insert("in(T_n+m)".into(), initial.clone());
                    reports.push(c);
                }
            }
        }
    }
    Ok(reports)
}
