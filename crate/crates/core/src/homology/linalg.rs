//! Ranks of sparse integer matrices over `GF(p)` or `Q`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Field;

/// A column as `(row, value)` pairs sorted by row, values in `{-1, 0, 1}`
/// or small integers.
pub type SparseColumn = Vec<(usize, i64)>;

pub fn rank(columns: &[SparseColumn], field: Field) -> usize {
    match field {
        Field::Prime(p) => rank_mod_p(columns, p as u64),
        Field::Rational => rank_rational(columns),
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let mut result = 1u64;
    let (mut base, mut exp) = (a % p, p - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}

/// Column reduction keyed on the lowest nonzero row.
fn rank_mod_p(columns: &[SparseColumn], p: u64) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, u64)>> = HashMap::new();
    for col in columns {
        let mut c: Vec<(usize, u64)> = col
            .iter()
            .map(|&(r, v)| (r, v.rem_euclid(p as i64) as u64))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(low, lv)) = c.last() {
            let Some(piv) = pivots.get(&low) else { break };
            // c -= (lv / piv_low) * piv
            let factor = lv * inv_mod(piv.last().unwrap().1, p) % p;
            c = axpy_mod(&c, piv, p - factor, p);
        }
        if let Some(&(low, _)) = c.last() {
            pivots.insert(low, c);
        }
    }
    pivots.len()
}

/// `a + f * b` mod `p`, merging sorted sparse vectors.
fn axpy_mod(a: &[(usize, u64)], b: &[(usize, u64)], f: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i]);
            i += 1;
        } else if take_b {
            out.push((b[j].0, f * b[j].1 % p));
            j += 1;
        } else {
            let v = (a[i].1 + f * b[j].1) % p;
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out.retain(|&(_, v)| v != 0);
    out
}

/// Fraction-free column reduction over `Z`, dividing out the content of
/// every new column.
fn rank_rational(columns: &[SparseColumn]) -> usize {
    let mut pivots: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for col in columns {
        let mut c: Vec<(usize, BigInt)> =
            col.iter().filter(|&&(_, v)| v != 0).map(|&(r, v)| (r, BigInt::from(v))).collect();
        while let Some((low, lv)) = c.last().cloned() {
            let Some(piv) = pivots.get(&low) else { break };
            let pv = piv.last().unwrap().1.clone();
            let g = lv.gcd(&pv);
            // (pv/g) * c - (lv/g) * piv
            c = combine(&c, &(&pv / &g), piv, &(-(&lv / &g)));
            normalize(&mut c);
        }
        if let Some((low, _)) = c.last() {
            pivots.insert(*low, c);
        }
    }
    pivots.len()
}

fn combine(a: &[(usize, BigInt)], fa: &BigInt, b: &[(usize, BigInt)], fb: &BigInt) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push((a[i].0, fa * &a[i].1));
            i += 1;
        } else if take_b {
            out.push((b[j].0, fb * &b[j].1));
            j += 1;
        } else {
            out.push((a[i].0, fa * &a[i].1 + fb * &b[j].1));
            i += 1;
            j += 1;
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

fn normalize(c: &mut [(usize, BigInt)]) {
    let content = c.iter().fold(BigInt::zero(), |acc, (_, v)| acc.gcd(v));
    if content > BigInt::one() {
        for (_, v) in c.iter_mut() {
            *v = &*v / &content;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn dense_to_columns(m: &[Vec<i64>]) -> Vec<SparseColumn> {
        let cols = m.first().map_or(0, |r| r.len());
        (0..cols)
            .map(|j| (0..m.len()).filter(|&i| m[i][j] != 0).map(|i| (i, m[i][j])).collect())
            .collect()
    }

    /// Rank over `Q` by dense Gaussian elimination on rationals as `f64`
    /// with exact small-integer inputs; used only on tiny matrices.
    fn dense_rank(m: &[Vec<i64>]) -> usize {
        let mut a: Vec<Vec<f64>> = m.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
        let (rows, cols) = (a.len(), a.first().map_or(0, |r| r.len()));
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).max_by(|&i, &j| a[i][c].abs().partial_cmp(&a[j][c].abs()).unwrap()) else {
                break;
            };
            if a[p][c].abs() < 1e-9 {
                continue;
            }
            a.swap(rank, p);
            for i in 0..rows {
                if i != rank {
                    let f = a[i][c] / a[rank][c];
                    for k in 0..cols {
                        a[i][k] -= f * a[rank][k];
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn small_ranks() {
        let m = vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]];
        assert_eq!(rank(&dense_to_columns(&m), Field::Rational), 3);
        // over GF(2) the same matrix is singular
        assert_eq!(rank(&dense_to_columns(&m), Field::Prime(2)), 2);
        assert_eq!(rank(&dense_to_columns(&m), Field::Prime(32003)), 3);
        assert_eq!(rank(&[], Field::Rational), 0);
        assert_eq!(rank(&[vec![], vec![]], Field::Prime(7)), 0);
    }

    proptest! {
        #[test]
        fn agrees_with_dense_elimination(m in proptest::collection::vec(proptest::collection::vec(-2i64..=2, 5), 1..6)) {
            let cols = dense_to_columns(&m);
            let r = dense_rank(&m);
            prop_assert_eq!(rank(&cols, Field::Rational), r);
            prop_assert_eq!(rank(&cols, Field::Prime(32003)), r);
        }
    }
}
