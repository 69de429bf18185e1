use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use super::{candidate_degrees, fiber_complex_with, Semigroup, Shortcuts};
use crate::binomial::TermOrder;
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::homology::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Only the candidate degrees read off `in(I_G)`.
    Guided,
    /// Every `s ∈ Im φ` with `|s| <= 2 * max_degree`.
    Exhaustive { max_degree: u32 },
}

#[derive(Clone, Copy, Debug)]
pub struct BettiOptions {
    pub field: Field,
    pub mode: Mode,
    pub shortcuts: bool,
}

impl Default for BettiOptions {
    fn default() -> Self {
        Self { field: Field::default(), mode: Mode::Guided, shortcuts: true }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    /// `i -> s -> β_{i,s}`, nonzero entries only.
    pub multigraded: BTreeMap<usize, BTreeMap<Vec<u32>, usize>>,
    /// `(i, j) -> β_{i,j}` with `j = |s| / 2`.
    pub graded: BTreeMap<(usize, u32), usize>,
    pub totals: Vec<usize>,
    pub nvars: usize,
    pub codim: usize,
    pub pd: usize,
    pub depth: usize,
    pub krull_dim: usize,
    pub cm: bool,
    pub gorenstein: bool,
    pub field: Field,
    pub warnings: Vec<String>,
}

impl BettiTable {
    fn assemble(g: &SimpleGraph, entries: Vec<(usize, Vec<u32>, usize)>, field: Field) -> Result<Self> {
        let mut multigraded: BTreeMap<usize, BTreeMap<Vec<u32>, usize>> = BTreeMap::new();
        let mut graded = BTreeMap::new();
        for (i, s, b) in entries {
            let j = s.iter().sum::<u32>() / 2;
            *graded.entry((i, j)).or_insert(0) += b;
            multigraded.entry(i).or_default().insert(s, b);
        }
        let pd = multigraded.keys().max().copied().unwrap_or(0);
        let totals: Vec<usize> = (0..=pd).map(|i| multigraded.get(&i).map_or(0, |m| m.values().sum())).collect();
        let codim = g.codim()?;
        let n = g.edge_count();
        let cm = pd == codim;
        Ok(Self {
            multigraded,
            graded,
            gorenstein: cm && totals[pd] == 1,
            totals,
            nvars: n,
            codim,
            pd,
            depth: n - pd,
            krull_dim: n - codim,
            cm,
            field,
            warnings: Vec::new(),
        })
    }

    pub fn total(&self, i: usize) -> usize {
        self.totals.get(i).copied().unwrap_or(0)
    }

    pub fn at(&self, i: usize, s: &[u32]) -> usize {
        self.multigraded.get(&i).and_then(|m| m.get(s)).copied().unwrap_or(0)
    }

    /// Every multidegree carrying some `β_{i,s} != 0`.
    pub fn support(&self) -> BTreeSet<Vec<u32>> {
        self.multigraded.values().flat_map(|m| m.keys().cloned()).collect()
    }

    pub fn to_json(&self) -> Value {
        let graded: serde_json::Map<String, Value> =
            self.graded.iter().map(|(&(i, j), &b)| (format!("{i},{j}"), json!(b))).collect();
        let multigraded: serde_json::Map<String, Value> = self
            .multigraded
            .iter()
            .map(|(i, m)| (i.to_string(), m.iter().map(|(s, b)| json!({"s": s, "beta": b})).collect()))
            .collect();
        json!({
            "totals": self.totals,
            "graded": graded,
            "multigraded": multigraded,
            "codim": self.codim,
            "pd": self.pd,
            "depth": self.depth,
            "krull_dim": self.krull_dim,
            "cm": self.cm,
            "gorenstein": self.gorenstein,
            "field": self.field.to_string(),
            "warnings": self.warnings,
        })
    }
}

impl fmt::Display for BettiTable {
    /// The coarse table, one row per `j`, one column per `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = 6;
        write!(f, "{:>4} |", "j\\i")?;
        for i in 0..=self.pd {
            write!(f, "{i:>width$}")?;
        }
        writeln!(f)?;
        let js: BTreeSet<u32> = self.graded.keys().map(|&(_, j)| j).collect();
        for j in js {
            write!(f, "{j:>4} |")?;
            for i in 0..=self.pd {
                match self.graded.get(&(i, j)) {
                    Some(b) => write!(f, "{b:>width$}")?,
                    None => write!(f, "{:>width$}", ".")?,
                }
            }
            writeln!(f)?;
        }
        write!(f, "{:>4} |", "tot")?;
        for b in &self.totals {
            write!(f, "{b:>width$}")?;
        }
        writeln!(f)?;
        write!(
            f,
            "codim {}  pd {}  depth {}  dim {}  CM {}  Gorenstein {}  over {}",
            self.codim, self.pd, self.depth, self.krull_dim, self.cm, self.gorenstein, self.field
        )
    }
}

/// `β_{i,s}(K[G])` for all `i >= 0` at one multidegree, via `Δ_s`.
pub fn betti_at(g: &SimpleGraph, s: &[u32], field: Field) -> Vec<usize> {
    let h = fiber_complex_with(g, s, &mut Semigroup::new(g)).complex.reduced_homology(field);
    let mut out: Vec<usize> = (0..=g.edge_count() as i32).map(|j| h.get(j - 1)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Elements of `Im φ` with `|s| = 2k` for `k = 1..=max_degree`, by levels.
pub fn image_up_to(g: &SimpleGraph, max_degree: u32) -> Vec<Vec<u32>> {
    let rows: Vec<(usize, usize)> = (0..g.edge_count()).map(|j| g.edge_rows(j)).collect();
    let mut level: HashSet<Vec<u32>> = HashSet::from([vec![0; g.vertex_count()]]);
    let mut out = Vec::new();
    for _ in 0..max_degree {
        let next: HashSet<Vec<u32>> = level
            .par_iter()
            .flat_map_iter(|s| {
                rows.iter().map(move |&(a, b)| {
                    let mut t = s.clone();
                    t[a] += 1;
                    t[b] += 1;
                    t
                })
            })
            .collect();
        let mut sorted: Vec<Vec<u32>> = next.iter().cloned().collect();
        sorted.sort();
        out.extend(sorted);
        level = next;
    }
    out
}

/// Betti numbers of `K[G]` from the fiber complexes `Δ_s`.
pub fn betti_table(g: &SimpleGraph, opts: &BettiOptions) -> Result<BettiTable> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() > 64 {
        return Err(Error::InvalidArgument("at most 64 edges are supported".into()));
    }
    let n = g.edge_count();
    let zero = vec![0u32; g.vertex_count()];
    // β_{0,0} = dim H̃_{-1}({∅})
    let base = betti_at(g, &zero, opts.field);
    if base != [1] {
        return Err(Error::InvariantBreach(format!("Δ_0 gives {base:?}, expected [1]")));
    }

    let guided = candidate_degrees(g, &TermOrder::degrevlex(n))?.degrees;
    let mut warnings = Vec::new();
    let degrees: Vec<Vec<u32>> = match opts.mode {
        Mode::Guided => guided.into_iter().collect(),
        Mode::Exhaustive { max_degree } => {
            let top = guided.iter().map(|s| s.iter().sum::<u32>() / 2).max().unwrap_or(0);
            if top > max_degree {
                warnings.push(format!(
                    "exhaustive bound {max_degree} is below the candidate support degree {top}; table may be incomplete"
                ));
            }
            image_up_to(g, max_degree)
        }
    };

    let shortcuts = Shortcuts::new(g);
    let entries: Vec<(usize, Vec<u32>, usize)> = degrees
        .par_iter()
        .map_init(
            || Semigroup::new(g),
            |sg, s| {
                if opts.shortcuts && shortcuts.verdict(s).is_some() {
                    return Vec::new();
                }
                sg.clear_memo();
                let h = fiber_complex_with(g, s, sg).complex.reduced_homology(opts.field);
                h.nonzero().into_iter().filter(|&(j, _)| j >= 0).map(|(j, d)| (j as usize + 1, s.clone(), d)).collect()
            },
        )
        .flatten()
        .collect();
    let mut all = vec![(0, zero, 1)];
    all.extend(entries);
    let mut table = BettiTable::assemble(g, all, opts.field)?;
    table.warnings = warnings;
    Ok(table)
}

/// Guided table with default options.
pub fn betti_numbers(g: &SimpleGraph) -> Result<BettiTable> {
    betti_table(g, &BettiOptions::default())
}
