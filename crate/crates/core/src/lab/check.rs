//! Hypothesis-then-conclusion checks of the contraction theorems.

use std::fmt;
use std::str::FromStr;

use crate::betti::{betti_table, BettiOptions, BettiTable};
use crate::binomial::{buchberger, minimal_generators, toric_ideal, BinomialIdeal, EdgeMonomial, TermOrder};
use crate::error::{Error, Result};
use crate::graph::{contract_edge, contract_path, is_simple_path, split_at_bridge, Path, SimpleGraph, Vertex};

use super::CheckReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    /// Even path contraction lowers every total Betti number.
    Thm25,
    /// Not CM after an even simple contraction implies not CM before.
    Cor26,
    /// Equality when `p ⊂ q` with `|q| >= |p| + 2`.
    Thm27,
    /// Even simple contraction keeps the codimension.
    Lem23,
    /// `β_1` survives contracting the connecting edge.
    Thm42,
    /// Bipartite side: `I_G = I_G1 + I_G2` and Künneth.
    Prop43,
    /// Is `β_i(G) >= β_i(G/e)` for graphs connected by `e`?
    Q45,
}

impl Claim {
    pub const ALL: [Claim; 7] =
        [Claim::Thm25, Claim::Cor26, Claim::Thm27, Claim::Lem23, Claim::Thm42, Claim::Prop43, Claim::Q45];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Thm25 => "thm-2.5",
            Claim::Cor26 => "cor-2.6",
            Claim::Thm27 => "thm-2.7",
            Claim::Lem23 => "lem-2.3",
            Claim::Thm42 => "thm-4.2",
            Claim::Prop43 => "prop-4.3",
            Claim::Q45 => "question-4.5",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown claim {s:?}")))
    }
}

/// The surgery a claim is checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Surgery {
    Path(Vec<Vertex>),
    PathIn { p: Vec<Vertex>, q: Vec<Vertex> },
    Edge(Vertex, Vertex),
}

impl fmt::Display for Surgery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = |v: &[Vertex]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Surgery::Path(p) => write!(f, "p=({})", seq(p)),
            Surgery::PathIn { p, q } => write!(f, "p=({}) q=({})", seq(p), seq(q)),
            Surgery::Edge(a, b) => write!(f, "e={{{a},{b}}}"),
        }
    }
}

fn table(g: &SimpleGraph, opts: &BettiOptions) -> Result<BettiTable> {
    betti_table(g, opts)
}

/// Componentwise `a >= b`, padding with zeros.
pub fn dominates(a: &[usize], b: &[usize]) -> bool {
    (0..a.len().max(b.len())).all(|i| a.get(i).copied().unwrap_or(0) >= b.get(i).copied().unwrap_or(0))
}

/// `Σ_{a+b=i} x_a y_b`.
pub fn convolve(x: &[usize], y: &[usize]) -> Vec<usize> {
    let mut out = vec![0; x.len() + y.len() - 1];
    for (a, &xa) in x.iter().enumerate() {
        for (b, &yb) in y.iter().enumerate() {
            out[a + b] += xa * yb;
        }
    }
    out
}

fn even_simple_path(g: &SimpleGraph, vs: &[Vertex]) -> std::result::Result<Path, String> {
    let p = Path::new(g, vs.to_vec()).map_err(|e| e.to_string())?;
    if !p.is_even() || p.is_empty() {
        return Err(format!("path of length {} is not even and nonempty", p.len()));
    }
    if !is_simple_path(g, &p) {
        return Err("endpoints share a neighbour off the path".into());
    }
    Ok(p)
}

/// `I_G1 + I_G2` inside the variables of `g`, as a Gröbner basis.
pub fn union_ideal(g: &SimpleGraph, parts: &[&SimpleGraph]) -> Result<BinomialIdeal> {
    let n = g.edge_count();
    let ord = TermOrder::degrevlex(n);
    let mut pairs = Vec::new();
    for h in parts {
        let embed = |m: &EdgeMonomial| {
            let mut e = vec![0u32; n];
            for (j, &x) in m.exponents().iter().enumerate() {
                let (a, b) = h.edges()[j];
                e[g.edge_index(a, b).expect("subgraph edge")] = x;
            }
            EdgeMonomial(e)
        };
        for b in toric_ideal(h)?.generators() {
            pairs.push((embed(&b.lead), embed(&b.trail)));
        }
    }
    Ok(buchberger(&BinomialIdeal::new(n, ord.clone(), pairs)?, &ord))
}

/// Checks `claim` on `g`. Graph-level failures of the hypotheses come back
/// as a report with `hypotheses_met = false`, never as an error.
pub fn check(claim: Claim, g: &SimpleGraph, surgery: &Surgery, opts: &BettiOptions) -> Result<CheckReport> {
    let mut r = CheckReport::new(claim.id(), surgery.to_string(), g);
    if !g.is_connected() {
        return Ok(r.unmet("graph is disconnected"));
    }
    match (claim, surgery) {
        (Claim::Thm25, Surgery::Path(vs)) => {
            let p = match Path::new(g, vs.clone()) {
                Ok(p) if p.is_even() && !p.is_empty() => p,
                Ok(p) => return Ok(r.unmet(format!("path of length {} is not even", p.len()))),
                Err(e) => return Ok(r.unmet(e.to_string())),
            };
            let gp = contract_path(g, &p)?.graph;
            let (t, tp) = (table(g, opts)?, table(&gp, opts)?);
            r.conclusion = Some(dominates(&t.totals, &tp.totals));
            r.tables.insert("G".into(), t.totals);
            r.tables.insert("G/p".into(), tp.totals);
        }
        (Claim::Cor26 | Claim::Lem23, Surgery::Path(vs)) => {
            let p = match even_simple_path(g, vs) {
                Ok(p) => p,
                Err(why) => return Ok(r.unmet(why)),
            };
            let gp = contract_path(g, &p)?.graph;
            if claim == Claim::Lem23 {
                let (c, cp) = (g.codim()?, gp.codim()?);
                r.notes.push(format!("codim(G) = {c}, codim(G/p) = {cp}"));
                r.conclusion = Some(c == cp);
            } else {
                let (t, tp) = (table(g, opts)?, table(&gp, opts)?);
                r.notes.push(format!("CM(G) = {}, CM(G/p) = {}", t.cm, tp.cm));
                r.conclusion = Some(tp.cm || !t.cm);
                r.tables.insert("G".into(), t.totals);
                r.tables.insert("G/p".into(), tp.totals);
            }
        }
        (Claim::Thm27, Surgery::PathIn { p, q }) => {
            let p = match even_simple_path(g, p) {
                Ok(p) => p,
                Err(why) => return Ok(r.unmet(why)),
            };
            let q = match Path::new(g, q.clone()) {
                Ok(q) => q,
                Err(e) => return Ok(r.unmet(format!("q: {e}"))),
            };
            if !p.is_contained_in(&q) {
                return Ok(r.unmet("p is not a subpath of q"));
            }
            if q.len() < p.len() + 2 {
                return Ok(r.unmet(format!("|q| = {} < |p| + 2 = {}", q.len(), p.len() + 2)));
            }
            let gp = contract_path(g, &p)?.graph;
            let (t, tp) = (table(g, opts)?, table(&gp, opts)?);
            let equal = t.totals == tp.totals;
            let cm = t.cm == tp.cm;
            let gor = t.gorenstein == tp.gorenstein;
            r.notes.push(format!("CM {} / {}, Gorenstein {} / {}", t.cm, tp.cm, t.gorenstein, tp.gorenstein));
            r.conclusion = Some(equal && cm && gor);
            r.tables.insert("G".into(), t.totals);
            r.tables.insert("G/p".into(), tp.totals);
        }
        (Claim::Thm42 | Claim::Prop43 | Claim::Q45, &Surgery::Edge(x, y)) => {
            let (g1, g2) = match split_at_bridge(g, x, y) {
                Ok(parts) => parts,
                Err(e) => return Ok(r.unmet(format!("not connected by this edge: {e}"))),
            };
            if claim == Claim::Prop43 && !g1.is_bipartite() && !g2.is_bipartite() {
                return Ok(r.unmet("neither side is bipartite"));
            }
            let ge = contract_edge(g, x, y)?.graph;
            let (t, te) = (table(g, opts)?, table(&ge, opts)?);
            match claim {
                Claim::Thm42 => {
                    let gens = minimal_generators(&toric_ideal(g)?).len();
                    let gens_e = minimal_generators(&toric_ideal(&ge)?).len();
                    r.notes.push(format!("minimal generators {gens} / {gens_e}"));
                    if gens != t.total(1) || gens_e != te.total(1) {
                        r.notes.push("minimal generator count differs from β1".into());
                    }
                    r.conclusion = Some(t.total(1) == te.total(1));
                }
                Claim::Prop43 => {
                    let (t1, t2) = (table(&g1, opts)?, table(&g2, opts)?);
                    let conv = convolve(&t1.totals, &t2.totals);
                    let whole = toric_ideal(g)?;
                    let sum = union_ideal(g, &[&g1, &g2])?;
                    let same_ideal = whole.contains_ideal(&sum)? && sum.contains_ideal(&whole)?;
                    r.notes.push(format!("I_G = I_G1 + I_G2: {same_ideal}; convolution {conv:?}"));
                    r.conclusion = Some(same_ideal && conv == t.totals && t.totals == te.totals);
                    r.tables.insert("G1".into(), t1.totals);
                    r.tables.insert("G2".into(), t2.totals);
                }
                _ => {
                    let deltas: Vec<i64> = (0..t.totals.len().max(te.totals.len()))
                        .map(|i| t.total(i) as i64 - te.total(i) as i64)
                        .collect();
                    r.notes.push(format!("β(G) - β(G/e) = {deltas:?}"));
                    r.conclusion = Some(deltas.iter().all(|&d| d >= 0));
                }
            }
            r.tables.insert("G".into(), t.totals);
            r.tables.insert("G/e".into(), te.totals);
        }
        (c, s) => return Err(Error::InvalidArgument(format!("{c} does not take the surgery {s}"))),
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lab::fixtures::{ex_2_9_g, example};
    use crate::testing::cycle;

    #[test]
    fn helpers() {
        assert_eq!(convolve(&[1, 1], &[1, 2, 1]), vec![1, 3, 3, 1]);
        assert!(dominates(&[1, 4, 4, 1], &[1, 2, 1]));
        assert!(!dominates(&[1, 2], &[1, 2, 1]));
        assert_eq!("thm-2.7".parse::<Claim>().unwrap(), Claim::Thm27);
        assert!("thm-9".parse::<Claim>().is_err());
    }

    #[test]
    fn path_contraction_on_a_fixture() {
        let r = check(Claim::Thm25, &ex_2_9_g(), &Surgery::Path(vec![1, 9, 10]), &BettiOptions::default()).unwrap();
        assert_eq!(r.conclusion, Some(true));
        assert_eq!(r.tables["G"], vec![1, 4, 4, 1]);
        assert_eq!(r.tables["G/p"], vec![1, 2, 1]);
        let r = check(Claim::Lem23, &ex_2_9_g(), &Surgery::Path(vec![1, 9, 10]), &BettiOptions::default()).unwrap();
        assert_eq!(r.conclusion, Some(true));
        // |q| = |p| + 1 only
        let r = check(
            Claim::Thm27,
            &ex_2_9_g(),
            &Surgery::PathIn { p: vec![1, 9, 10], q: vec![1, 9, 10, 4] },
            &BettiOptions::default(),
        )
        .unwrap();
        assert!(!r.hypotheses_met);
    }

    #[test]
    fn bowtie_breaks_the_codimension_lemma() {
        let bowtie = SimpleGraph::from_edges([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = check(Claim::Lem23, &bowtie, &Surgery::Path(vec![1, 2, 3]), &BettiOptions::default()).unwrap();
        assert!(r.is_counterexample());
    }

    #[test]
    fn edge_claims_on_figure_ten() {
        let g = example("fig-10").unwrap().remove(0).graph;
        let r = check(Claim::Thm42, &g, &Surgery::Edge(3, 4), &BettiOptions::default()).unwrap();
        assert_eq!(r.conclusion, Some(true));
        assert_eq!(r.tables["G"][1], 6);
        let r = check(Claim::Prop43, &g, &Surgery::Edge(3, 4), &BettiOptions::default()).unwrap();
        assert!(!r.hypotheses_met);
        let r = check(Claim::Thm42, &cycle(5), &Surgery::Edge(1, 2), &BettiOptions::default()).unwrap();
        assert!(!r.hypotheses_met);
        assert!(check(Claim::Thm42, &g, &Surgery::Path(vec![3, 4]), &BettiOptions::default()).is_err());
    }

    #[test]
    fn bipartite_side_decomposes() {
        // C4 on 1..4 joined to a triangle on 5..7
        let g = SimpleGraph::from_edges([(1, 2), (2, 3), (3, 4), (1, 4), (4, 5), (5, 6), (6, 7), (5, 7)]).unwrap();
        let r = check(Claim::Prop43, &g, &Surgery::Edge(4, 5), &BettiOptions::default()).unwrap();
        assert_eq!(r.conclusion, Some(true), "{r:?}");
        assert_eq!(r.tables["G"], vec![1, 1]);
    }
}
