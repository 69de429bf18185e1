use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::EdgeMonomial;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Lex,
    DegRevLex,
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(Self::Lex),
            "degrevlex" | "grevlex" => Ok(Self::DegRevLex),
            other => Err(Error::InvalidArgument(format!("unknown term order {other:?}"))),
        }
    }
}

/// A monomial order on `K[e1, ..., en]`. `priority[0]` is the largest
/// variable, `priority[n-1]` the smallest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TermOrder {
    pub kind: OrderKind,
    priority: Vec<usize>,
}

impl TermOrder {
    pub fn new(kind: OrderKind, priority: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; priority.len()];
        for &j in &priority {
            if j >= priority.len() || std::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidArgument(format!("{priority:?} is not a permutation")));
            }
        }
        Ok(Self { kind, priority })
    }

    /// `e1 > e2 > ... > en`.
    pub fn standard(kind: OrderKind, n: usize) -> Self {
        Self { kind, priority: (0..n).collect() }
    }

    pub fn lex(n: usize) -> Self {
        Self::standard(OrderKind::Lex, n)
    }

    pub fn degrevlex(n: usize) -> Self {
        Self::standard(OrderKind::DegRevLex, n)
    }

    pub fn nvars(&self) -> usize {
        self.priority.len()
    }

    pub fn priority(&self) -> &[usize] {
        &self.priority
    }

    /// Degrevlex with `e_j` the smallest variable, others in standard order.
    pub fn degrevlex_last(n: usize, j: usize) -> Self {
        let priority = (0..n).filter(|&k| k != j).chain([j]).collect();
        Self { kind: OrderKind::DegRevLex, priority }
    }

    pub fn cmp(&self, a: &EdgeMonomial, b: &EdgeMonomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => {
                for &j in &self.priority {
                    match a[j].cmp(&b[j]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                if da != db {
                    return da.cmp(&db);
                }
                for &j in self.priority.iter().rev() {
                    match a[j].cmp(&b[j]) {
                        Ordering::Equal => continue,
                        o => return o.reverse(),
                    }
                }
                Ordering::Equal
            }
        }
    }
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            OrderKind::Lex => "lex",
            OrderKind::DegRevLex => "degrevlex",
        };
        let vars: Vec<String> = self.priority.iter().map(|j| format!("e{}", j + 1)).collect();
        write!(f, "{name} {}", vars.join(" > "))
    }
}
