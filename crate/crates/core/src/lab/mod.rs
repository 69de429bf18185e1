//! Reproduction harness: example fixtures, theorem checks and random search.

mod check;
mod complexes;
mod fixtures;
mod generate;
mod report;
mod search;
mod triangles;

use crate::betti::{betti_table, BettiOptions, BettiTable};
use crate::error::Result;

pub use check::{check, convolve, dominates, union_ideal, Claim, Surgery};
pub use complexes::{check_gluing, random_complex, GluingLemma};
pub use fixtures::{all_fixtures, example, Fixture, EXAMPLE_IDS};
pub use generate::{
    connected_bipartite, connected_by_edge_instance, connected_gnp, even_path_instance, instance_rng,
    long_path_instance, subdivide,
};
pub use report::{persist_counterexamples, read_reports, CheckReport, ReportSink};
pub use search::{random_search, search_instance, SearchOutcome, SearchSpec};
pub use triangles::{attachment_vertices, lex_initial_totals, triangle_study};

/// Tables of every graph of one example against the printed totals.
pub fn reproduce(id: &str, opts: &BettiOptions) -> Result<(CheckReport, Vec<(Fixture, BettiTable)>)> {
    let fixtures = example(id)?;
    let mut report = CheckReport::new(id, id, &fixtures[0].graph);
    let mut tables = Vec::new();
    let mut all_match = true;
    for f in fixtures {
        let t = betti_table(&f.graph, opts)?;
        if t.totals != f.expected {
            all_match = false;
            report.notes.push(format!("{}: expected {:?}, computed {:?}", f.id, f.expected, t.totals));
        }
        report.tables.insert(f.id.clone(), t.totals.clone());
        tables.push((f, t));
    }
    report.conclusion = Some(all_match);
    Ok((report, tables))
}
