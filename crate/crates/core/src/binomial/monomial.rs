use std::fmt;

use serde::{Deserialize, Serialize};

/// Exponent vector over the edge variables `e1, ..., en`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeMonomial(pub Vec<u32>);

impl EdgeMonomial {
    pub fn one(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn variable(n: usize, j: usize) -> Self {
        let mut m = Self::one(n);
        m.0[j] = 1;
        m
    }

    /// Product of the listed variables, with repetition.
    pub fn from_indices(n: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut m = Self::one(n);
        for j in indices {
            m.0[j] += 1;
        }
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&j| self.0[j] > 0).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&a| a <= 1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Self) -> Option<Self> {
        other.divides(self).then(|| Self(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }
}

impl fmt::Display for EdgeMonomial {
    /// `e1*e3^2`, 1-based; the unit monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, &a) in self.0.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "e{}", j + 1)?;
            if a > 1 {
                write!(f, "^{a}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = EdgeMonomial(vec![1, 0, 2]);
        let b = EdgeMonomial(vec![0, 1, 1]);
        assert_eq!(a.mul(&b), EdgeMonomial(vec![1, 1, 3]));
        assert_eq!(a.lcm(&b), EdgeMonomial(vec![1, 1, 2]));
        assert_eq!(a.gcd(&b), EdgeMonomial(vec![0, 0, 1]));
        assert_eq!(a.div(&b), None);
        assert_eq!(a.mul(&b).div(&b), Some(a.clone()));
        assert_eq!(a.degree(), 3);
        assert!(!a.is_coprime(&b));
        assert!(EdgeMonomial::variable(3, 1).is_coprime(&a));
    }

    #[test]
    fn display() {
        assert_eq!(EdgeMonomial(vec![1, 0, 2]).to_string(), "e1*e3^2");
        assert_eq!(EdgeMonomial::one(4).to_string(), "1");
    }
}
