//! Integer chains over the graded generator basis of a complex.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Coeff = BigInt;

/// A finitely supported integer combination of the generators of one degree.
///
/// Coefficients are keyed by generator index within that degree; the ambient
/// complex is implicit. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    degree: usize,
    coeffs: BTreeMap<usize, Coeff>,
}

impl Chain {
    pub fn zero(degree: usize) -> Self {
        Chain { degree, coeffs: BTreeMap::new() }
    }

    /// The chain consisting of a single generator with coefficient 1.
    pub fn unit(degree: usize, gen: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(gen, Coeff::one());
        Chain { degree, coeffs }
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, Coeff)>,
    {
        let mut c = Chain::zero(degree);
        for (gen, coeff) in terms {
            c.add_term(gen, coeff);
        }
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, gen: usize) -> Coeff {
        self.coeffs.get(&gen).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &Coeff)> {
        self.coeffs.iter().map(|(&g, c)| (g, c))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coeffs.keys().copied()
    }

    pub fn add_term(&mut self, gen: usize, coeff: Coeff) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(gen).or_insert_with(Coeff::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&gen);
        }
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.values().all(|c| c.is_positive())
    }

    /// Positive part: the terms with positive coefficient.
    pub fn pos_part(&self) -> Chain {
        Chain {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(_, c)| c.is_positive())
                .map(|(&g, c)| (g, c.clone()))
                .collect(),
        }
    }

    /// Negative part, returned with positive coefficients: self = pos - neg.
    pub fn neg_part(&self) -> Chain {
        Chain {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(_, c)| c.is_negative())
                .map(|(&g, c)| (g, -c.clone()))
                .collect(),
        }
    }

    /// Sum of all coefficients. On degree 0 this is the augmentation.
    pub fn coeff_sum(&self) -> Coeff {
        self.coeffs.values().fold(Coeff::zero(), |a, b| a + b)
    }

    pub fn scaled(&self, k: &Coeff) -> Chain {
        if k.is_zero() {
            return Chain::zero(self.degree);
        }
        Chain {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(&g, c)| (g, c * k)).collect(),
        }
    }
}

impl Add<&Chain> for &Chain {
    type Output = Chain;
    fn add(self, rhs: &Chain) -> Chain {
        debug_assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (g, c) in rhs.coeffs.iter() {
            out.add_term(*g, c.clone());
        }
        out
    }
}

impl Sub<&Chain> for &Chain {
    type Output = Chain;
    fn sub(self, rhs: &Chain) -> Chain {
        debug_assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (g, c) in rhs.coeffs.iter() {
            out.add_term(*g, -c.clone());
        }
        out
    }
}

impl Neg for &Chain {
    type Output = Chain;
    fn neg(self) -> Chain {
        Chain {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|(&g, c)| (g, -c.clone())).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parts_are_disjoint_and_recompose() {
        let c = Chain::from_terms(1, [(0, Coeff::from(2)), (1, Coeff::from(-3)), (2, Coeff::from(1))]);
        let pos = c.pos_part();
        let neg = c.neg_part();
        assert!(pos.is_positive() && neg.is_positive());
        assert!(pos.support().all(|g| neg.coeff(g).is_zero()));
        assert_eq!(&pos - &neg, c);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let mut c = Chain::unit(0, 3);
        c.add_term(3, Coeff::from(-1));
        assert!(c.is_zero());
        assert_eq!(c, Chain::zero(0));
    }
}
