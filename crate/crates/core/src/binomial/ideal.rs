use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{EdgeMonomial, TermOrder};
use crate::error::{Error, Result};

/// `lead - trail` with `lead > trail` in the order it was built for.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Binomial {
    pub lead: EdgeMonomial,
    pub trail: EdgeMonomial,
}

impl Binomial {
    /// `±(a - b)` oriented by `ord`; `None` when `a == b`.
    pub fn new(a: EdgeMonomial, b: EdgeMonomial, ord: &TermOrder) -> Option<Self> {
        match ord.cmp(&a, &b) {
            Ordering::Greater => Some(Self { lead: a, trail: b }),
            Ordering::Less => Some(Self { lead: b, trail: a }),
            Ordering::Equal => None,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.lead.degree() == self.trail.degree()
    }

    pub fn degree(&self) -> u32 {
        self.lead.degree().max(self.trail.degree())
    }

    fn reoriented(&self, ord: &TermOrder) -> Self {
        Self::new(self.lead.clone(), self.trail.clone(), ord).expect("distinct terms")
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

/// Support bitmask; a cheap divisibility prefilter.
fn mask(m: &EdgeMonomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a > 0)
        .fold(0u64, |acc, (j, _)| acc | (1u64 << (j % 64)))
}

/// Reduces monomials by a fixed list of binomials.
struct Reducer<'a> {
    basis: &'a [Binomial],
    masks: Vec<u64>,
}

impl<'a> Reducer<'a> {
    fn new(basis: &'a [Binomial]) -> Self {
        Self { basis, masks: basis.iter().map(|b| mask(&b.lead)).collect() }
    }

    /// Since every reduction step replaces a monomial by a monomial, the
    /// remainder of a monomial is again a monomial.
    fn normal_form(&self, m: &EdgeMonomial) -> EdgeMonomial {
        let mut m = m.clone();
        let mut mm = mask(&m);
        'outer: loop {
            for (b, &bm) in self.basis.iter().zip(&self.masks) {
                if bm & !mm != 0 {
                    continue;
                }
                if let Some(q) = m.div(&b.lead) {
                    m = q.mul(&b.trail);
                    mm = mask(&m);
                    continue 'outer;
                }
            }
            return m;
        }
    }
}

/// A binomial ideal, optionally carrying a Gröbner basis for `order`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinomialIdeal {
    nvars: usize,
    order: TermOrder,
    generators: Vec<Binomial>,
    groebner: bool,
}

impl BinomialIdeal {
    /// The ideal generated by the differences `a - b`; zero differences are dropped.
    pub fn new(
        nvars: usize,
        order: TermOrder,
        pairs: impl IntoIterator<Item = (EdgeMonomial, EdgeMonomial)>,
    ) -> Result<Self> {
        if order.nvars() != nvars {
            return Err(Error::InvalidArgument(format!(
                "order on {} variables used with {nvars} variables",
                order.nvars()
            )));
        }
        let mut generators = Vec::new();
        for (a, b) in pairs {
            if a.nvars() != nvars || b.nvars() != nvars {
                return Err(Error::InvalidArgument("monomial with the wrong number of variables".into()));
            }
            if let Some(bin) = Binomial::new(a, b, &order) {
                if !generators.contains(&bin) {
                    generators.push(bin);
                }
            }
        }
        Ok(Self { nvars, order, generators, groebner: false })
    }

    pub fn zero(nvars: usize, order: TermOrder) -> Self {
        Self { nvars, order, generators: Vec::new(), groebner: true }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn generators(&self) -> &[Binomial] {
        &self.generators
    }

    pub fn is_groebner(&self) -> bool {
        self.groebner
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    fn require_groebner(&self) -> Result<()> {
        if self.groebner {
            Ok(())
        } else {
            Err(Error::MissingGroebnerBasis)
        }
    }

    /// Normal form of a monomial.
    pub fn normal_form(&self, m: &EdgeMonomial) -> Result<EdgeMonomial> {
        self.require_groebner()?;
        Ok(Reducer::new(&self.generators).normal_form(m))
    }

    /// Normal forms of many monomials, sharing the prefilter.
    pub fn normal_forms<'m>(&self, ms: impl IntoIterator<Item = &'m EdgeMonomial>) -> Result<Vec<EdgeMonomial>> {
        self.require_groebner()?;
        let r = Reducer::new(&self.generators);
        Ok(ms.into_iter().map(|m| r.normal_form(m)).collect())
    }

    /// Remainder of `a - b`: zero (`None`) iff it lies in the ideal.
    pub fn reduce(&self, a: &EdgeMonomial, b: &EdgeMonomial) -> Result<Option<Binomial>> {
        self.require_groebner()?;
        let r = Reducer::new(&self.generators);
        Ok(Binomial::new(r.normal_form(a), r.normal_form(b), &self.order))
    }

    pub fn contains(&self, a: &EdgeMonomial, b: &EdgeMonomial) -> Result<bool> {
        Ok(self.reduce(a, b)?.is_none())
    }

    /// Every generator of `other` reduces to zero here.
    pub fn contains_ideal(&self, other: &BinomialIdeal) -> Result<bool> {
        self.require_groebner()?;
        let r = Reducer::new(&self.generators);
        Ok(other.generators.iter().all(|b| r.normal_form(&b.lead) == r.normal_form(&b.trail)))
    }

    /// Leading monomials of the Gröbner basis, minimal and sorted.
    pub fn leading_monomials(&self) -> Result<Vec<EdgeMonomial>> {
        self.require_groebner()?;
        let mut leads: Vec<EdgeMonomial> = self.generators.iter().map(|b| b.lead.clone()).collect();
        leads.sort_by(|a, b| (a.degree(), a).cmp(&(b.degree(), b)));
        leads.dedup();
        let minimal = leads
            .iter()
            .filter(|m| !leads.iter().any(|d| d != *m && d.divides(m)))
            .cloned()
            .collect();
        Ok(minimal)
    }
}

impl fmt::Display for BinomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|b| b.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// Normal form of `m` modulo a Gröbner basis.
pub fn normal_form(m: &EdgeMonomial, gb: &BinomialIdeal) -> Result<EdgeMonomial> {
    gb.normal_form(m)
}

/// Reduced Gröbner basis of `ideal` for `ord`.
pub fn buchberger(ideal: &BinomialIdeal, ord: &TermOrder) -> BinomialIdeal {
    let input: Vec<Binomial> = ideal.generators.iter().map(|b| b.reoriented(ord)).collect();
    let basis = reduced_basis(groebner_basis(input, ord), ord);
    BinomialIdeal { nvars: ideal.nvars, order: ord.clone(), generators: basis, groebner: true }
}

fn groebner_basis(input: Vec<Binomial>, ord: &TermOrder) -> Vec<Binomial> {
    let mut basis: Vec<Binomial> = Vec::new();
    // pending pairs keyed by (lcm degree, i, j)
    let mut queue: BTreeSet<(u32, usize, usize)> = BTreeSet::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();

    fn add(
        b: Binomial,
        basis: &mut Vec<Binomial>,
        queue: &mut BTreeSet<(u32, usize, usize)>,
        pending: &mut HashSet<(usize, usize)>,
    ) {
        let k = basis.len();
        for (i, other) in basis.iter().enumerate() {
            let deg = b.lead.lcm(&other.lead).degree();
            queue.insert((deg, i, k));
            pending.insert((i, k));
        }
        basis.push(b);
    }

    for b in input {
        let r = Reducer::new(&basis);
        if let Some(b) = Binomial::new(r.normal_form(&b.lead), r.normal_form(&b.trail), ord) {
            add(b, &mut basis, &mut queue, &mut pending);
        }
    }

    while let Some((_, i, j)) = queue.pop_first() {
        pending.remove(&(i, j));
        let (bi, bj) = (&basis[i], &basis[j]);
        if bi.lead.is_coprime(&bj.lead) {
            continue;
        }
        let l = bi.lead.lcm(&bj.lead);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead.divides(&l)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let si = l.div(&bi.lead).unwrap().mul(&bi.trail);
        let sj = l.div(&bj.lead).unwrap().mul(&bj.trail);
        let r = Reducer::new(&basis);
        if let Some(b) = Binomial::new(r.normal_form(&si), r.normal_form(&sj), ord) {
            add(b, &mut basis, &mut queue, &mut pending);
        }
    }
    basis
}

/// Minimal leads, fully reduced trails, sorted.
fn reduced_basis(basis: Vec<Binomial>, ord: &TermOrder) -> Vec<Binomial> {
    let mut minimal: Vec<Binomial> = Vec::new();
    for (i, b) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(k, c)| {
            k != i && c.lead.divides(&b.lead) && (c.lead != b.lead || k < i)
        });
        if !redundant {
            minimal.push(b.clone());
        }
    }
    let snapshot = minimal.clone();
    let r = Reducer::new(&snapshot);
    for b in &mut minimal {
        b.trail = r.normal_form(&b.trail);
    }
    minimal.sort_by(|a, b| ord.cmp(&a.lead, &b.lead));
    minimal
}

/// `I : e_j^∞` for a homogeneous binomial ideal: Gröbner basis with `e_j`
/// last in degrevlex, then strip the `e_j` powers.
pub fn saturate_variable(ideal: &BinomialIdeal, j: usize) -> Result<BinomialIdeal> {
    if j >= ideal.nvars {
        return Err(Error::InvalidArgument(format!("no variable e{}", j + 1)));
    }
    if let Some(b) = ideal.generators.iter().find(|b| !b.is_homogeneous()) {
        return Err(Error::InvalidArgument(format!("{b} is not homogeneous")));
    }
    let ord = TermOrder::degrevlex_last(ideal.nvars, j);
    let gb = buchberger(ideal, &ord);
    let stripped: Vec<Binomial> = gb
        .generators
        .iter()
        .map(|b| {
            let k = b.lead.exponents()[j].min(b.trail.exponents()[j]);
            let mut p = EdgeMonomial::one(ideal.nvars);
            p.0[j] = k;
            Binomial { lead: b.lead.div(&p).unwrap(), trail: b.trail.div(&p).unwrap() }
        })
        .collect();
    Ok(BinomialIdeal {
        nvars: ideal.nvars,
        order: ord.clone(),
        generators: reduced_basis(stripped, &ord),
        groebner: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(v: &[u32]) -> EdgeMonomial {
        EdgeMonomial(v.to_vec())
    }

    fn c4_ideal(ord: TermOrder) -> BinomialIdeal {
        BinomialIdeal::new(4, ord, [(m(&[1, 0, 1, 0]), m(&[0, 1, 0, 1]))]).unwrap()
    }

    #[test]
    fn normal_form_examples() {
        let ord = TermOrder::degrevlex(4);
        let gb = buchberger(&c4_ideal(ord.clone()), &ord);
        assert_eq!(gb.generators().len(), 1);
        assert_eq!(gb.generators()[0].lead, m(&[1, 0, 1, 0]));
        assert_eq!(gb.normal_form(&m(&[1, 0, 1, 0])).unwrap(), m(&[0, 1, 0, 1]));
        assert_eq!(gb.normal_form(&m(&[0, 1, 0, 1])).unwrap(), m(&[0, 1, 0, 1]));
        assert!(gb.contains(&m(&[1, 0, 1, 0]), &m(&[0, 1, 0, 1])).unwrap());
        assert!(matches!(c4_ideal(ord).normal_form(&m(&[1, 0, 0, 0])), Err(Error::MissingGroebnerBasis)));
    }

    #[test]
    fn s_pair_adds_third_difference() {
        // three monomials of one fibre: m1 - m2, m2 - m3 gives m1 - m3
        let (m1, m2, m3) = (m(&[1, 0, 0, 0, 0, 1]), m(&[0, 1, 0, 0, 1, 0]), m(&[0, 0, 1, 1, 0, 0]));
        let ord = TermOrder::lex(6);
        let ideal = BinomialIdeal::new(6, ord.clone(), [(m1.clone(), m2.clone()), (m2.clone(), m3.clone())]).unwrap();
        let gb = buchberger(&ideal, &ord);
        assert!(gb.contains(&m1, &m3).unwrap());
        assert!(gb.generators().iter().any(|b| b.lead == m1 && b.trail == m3));
    }

    #[test]
    fn saturation_examples() {
        let ord = TermOrder::degrevlex(3);
        let i = BinomialIdeal::new(3, ord.clone(), [(m(&[1, 1, 0]), m(&[1, 0, 1]))]).unwrap();
        let s = saturate_variable(&i, 0).unwrap();
        assert_eq!(s.generators().len(), 1);
        assert_eq!((s.generators()[0].lead.clone(), s.generators()[0].trail.clone()), (m(&[0, 1, 0]), m(&[0, 0, 1])));
        // variable not appearing: unchanged
        let c4 = BinomialIdeal::new(5, TermOrder::degrevlex(5), [(m(&[1, 0, 1, 0, 0]), m(&[0, 1, 0, 1, 0]))]).unwrap();
        let s = saturate_variable(&c4, 4).unwrap();
        assert_eq!(s.generators().len(), 1);
        assert!(s.contains(&m(&[1, 0, 1, 0, 0]), &m(&[0, 1, 0, 1, 0])).unwrap());
        let bad = BinomialIdeal::new(2, TermOrder::lex(2), [(m(&[2, 0]), m(&[0, 1]))]).unwrap();
        assert!(saturate_variable(&bad, 0).is_err());
    }
}
