//! Cohomology of O_P³(n) and of finite direct sums of line bundles on P³.
//!
//! Only the four-line table for P³ is needed: h¹ and h² always vanish, h⁰
//! counts monomials and h³ is dual to h⁰.

use crate::arith::{binom_poly, binom_trunc, BigInt};
use crate::error::{Error, Result};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub const TOP_INDEX: usize = 3;

fn check_index(i: usize) -> Result<()> {
    if i > TOP_INDEX {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: TOP_INDEX,
        });
    }
    Ok(())
}

/// hⁱ(P³, O(n)).
pub fn h_line(i: usize, n: i64) -> Result<BigInt> {
    check_index(i)?;
    Ok(match i {
        0 => binom_trunc(n + 3, 3),
        3 => binom_trunc(-n - 1, 3),
        _ => BigInt::zero(),
    })
}

/// χ(O_P³(n)) = (n+1)(n+2)(n+3)/6, evaluated as a polynomial.
pub fn chi_line(n: i64) -> BigInt {
    binom_poly(n + 3, 3)
}

/// A direct sum ⊕ O(twist)^multiplicity. The empty sum is the zero sheaf.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct FreeSheafSum {
    terms: Vec<(i64, u64)>,
}

impl FreeSheafSum {
    pub fn new(terms: impl IntoIterator<Item = (i64, u64)>) -> Result<Self> {
        let terms: Vec<_> = terms.into_iter().collect();
        if let Some(&(twist, _)) = terms.iter().find(|(_, m)| *m == 0) {
            return Err(Error::ZeroMultiplicity { twist });
        }
        Ok(Self { terms })
    }

    /// O(twist)^multiplicity.
    pub fn single(twist: i64, multiplicity: u64) -> Result<Self> {
        Self::new([(twist, multiplicity)])
    }

    pub fn terms(&self) -> &[(i64, u64)] {
        &self.terms
    }

    pub fn rank(&self) -> u64 {
        self.terms.iter().map(|&(_, m)| m).sum()
    }

    /// hⁱ(F(n)) by additivity over summands.
    pub fn h(&self, i: usize, n: i64) -> Result<BigInt> {
        check_index(i)?;
        let mut total = BigInt::zero();
        for &(twist, mult) in &self.terms {
            total += h_line(i, twist + n)? * mult;
        }
        Ok(total)
    }

    /// χ(F(n)) from the polynomial binomial, never from truncated h's.
    pub fn chi(&self, n: i64) -> BigInt {
        self.terms
            .iter()
            .map(|&(twist, mult)| chi_line(twist + n) * mult)
            .sum()
    }
}

pub fn h_free_sum(i: usize, sum: &FreeSheafSum, n: i64) -> Result<BigInt> {
    sum.h(i, n)
}

pub fn chi_free_sum(sum: &FreeSheafSum, n: i64) -> BigInt {
    sum.chi(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;

    #[test]
    fn line_examples() {
        assert_eq!(h_line(0, 2).unwrap(), big(10));
        assert_eq!(h_line(3, -4).unwrap(), big(1));
        for n in -10..=10 {
            assert_eq!(h_line(1, n).unwrap(), big(0));
            assert_eq!(h_line(2, n).unwrap(), big(0));
        }
    }

    #[test]
    fn index_out_of_range() {
        assert_eq!(
            h_line(4, 0),
            Err(Error::IndexOutOfRange { index: 4, max: 3 })
        );
        let f = FreeSheafSum::single(0, 1).unwrap();
        assert!(f.h(7, 0).is_err());
    }

    #[test]
    fn free_sum_examples() {
        let f = FreeSheafSum::single(-2, 3).unwrap();
        assert_eq!(h_free_sum(0, &f, 2).unwrap(), big(3));
        let g = FreeSheafSum::single(-4, 1).unwrap();
        assert_eq!(chi_free_sum(&g, 0), big(-1));
        let s = 3;
        let a = FreeSheafSum::single(-s - 1, s as u64).unwrap();
        assert_eq!(h_free_sum(3, &a, s - 3).unwrap(), big(3));
    }

    #[test]
    fn empty_sum_is_zero_sheaf() {
        let z = FreeSheafSum::default();
        assert_eq!(z.rank(), 0);
        assert_eq!(z.h(0, 5).unwrap(), big(0));
        assert_eq!(z.chi(-7), big(0));
    }

    #[test]
    fn zero_multiplicity_rejected() {
        assert_eq!(
            FreeSheafSum::new([(1, 2), (-3, 0)]),
            Err(Error::ZeroMultiplicity { twist: -3 })
        );
    }

    #[test]
    fn serre_duality_and_euler_characteristic() {
        for n in -30..=30 {
            for i in 0..=3 {
                assert_eq!(
                    h_line(i, n).unwrap(),
                    h_line(3 - i, -n - 4).unwrap(),
                    "i={i} n={n}"
                );
            }
            let alt = h_line(0, n).unwrap() - h_line(1, n).unwrap() + h_line(2, n).unwrap()
                - h_line(3, n).unwrap();
            assert_eq!(alt, chi_line(n), "n={n}");
        }
    }

    #[test]
    fn h0_non_decreasing() {
        for n in -10..40 {
            assert!(h_line(0, n).unwrap() <= h_line(0, n + 1).unwrap());
        }
    }
}
