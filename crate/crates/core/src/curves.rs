//! Determinantal curves in P³ and the cohomology of their ideal sheaves.
//!
//! A determinantal curve C of index s is cut out by the maximal minors of a
//! general s × (s+1) matrix of linear forms, so its ideal sheaf has the
//! resolution
//!
//! ```text
//! 0 → O(−s−1)^s → O(−s)^(s+1) → J_C → 0.
//! ```
//!
//! All cohomology of J_C(n) and O_C(n) below is read off this resolution
//! together with 0 → J_C → O_P³ → O_C → 0.

use crate::arith::{big, BigInt};
use crate::error::{Error, Result};
use crate::p3cohom::{h_line, FreeSheafSum};
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A twist bound that may be infinite (t(C) for arithmetically
/// Cohen–Macaulay curves).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TwistBound {
    Finite(i64),
    Infinite,
}

impl TwistBound {
    /// `value < self`, with every integer below `Infinite`.
    pub fn exceeds(self, value: i64) -> bool {
        match self {
            TwistBound::Finite(b) => value < b,
            TwistBound::Infinite => true,
        }
    }

    /// `value <= self`.
    pub fn at_least(self, value: i64) -> bool {
        match self {
            TwistBound::Finite(b) => value <= b,
            TwistBound::Infinite => true,
        }
    }
}

impl fmt::Display for TwistBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistBound::Finite(b) => write!(f, "{b}"),
            TwistBound::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeterminantalCurve {
    pub s: i64,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub degree: BigInt,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub genus: BigInt,
    /// Syzygy term O(−s−1)^s.
    pub syzygies: FreeSheafSum,
    /// Generator term O(−s)^(s+1).
    pub generators: FreeSheafSum,
}

/// The determinantal curve of index `s` (s = 1 is a line, s = 2 a twisted
/// cubic, s = 3 a canonical sextic of genus 3).
pub fn determinantal_curve(s: i64) -> Result<DeterminantalCurve> {
    if s < 1 {
        return Err(Error::InvalidS(s));
    }
    let syzygies = FreeSheafSum::single(-s - 1, s as u64)?;
    let generators = FreeSheafSum::single(-s, (s + 1) as u64)?;
    let chi_ideal = generators.chi(0) - syzygies.chi(0);
    let chi_structure = BigInt::from(1) - chi_ideal;
    let genus = BigInt::from(1) - chi_structure;
    let degree = big(s * (s + 1) / 2);
    Ok(DeterminantalCurve {
        s,
        degree,
        genus,
        syzygies,
        generators,
    })
}

impl DeterminantalCurve {
    /// χ(J_C(n)) from the resolution.
    pub fn chi_ideal(&self, n: i64) -> BigInt {
        self.generators.chi(n) - self.syzygies.chi(n)
    }

    /// χ(O_C(n)) = d·n + 1 − g.
    pub fn chi_structure(&self, n: i64) -> BigInt {
        &self.degree * n + 1 - &self.genus
    }

    fn h0_ideal(&self, n: i64) -> BigInt {
        // H⁰ is left exact, so the syzygy map stays injective on global
        // sections and the difference is a dimension.
        let h = self.generators.h(0, n).unwrap() - self.syzygies.h(0, n).unwrap();
        assert!(
            h >= BigInt::zero(),
            "negative h0(J_C({n})) for s = {}",
            self.s
        );
        h
    }

    /// hⁱ(P³, J_C(n)).
    ///
    /// h¹ vanishes identically (the curve is ACM); h² is routed through
    /// h¹(O_C(n)) and h³ equals h³(O_P³(n)).
    pub fn h_ideal(&self, i: usize, n: i64) -> Result<BigInt> {
        match i {
            0 => Ok(self.h0_ideal(n)),
            1 => Ok(BigInt::zero()),
            2 => self.h_structure(1, n),
            3 => h_line(3, n),
            _ => Err(Error::IndexOutOfRange { index: i, max: 3 }),
        }
    }

    /// hⁱ(C, O_C(n)) for i ∈ {0, 1}.
    pub fn h_structure(&self, i: usize, n: i64) -> Result<BigInt> {
        let h0 = h_line(0, n)? - self.h0_ideal(n);
        match i {
            0 => Ok(h0),
            1 => {
                let h1 = h0 - self.chi_structure(n);
                assert!(
                    h1 >= BigInt::zero(),
                    "negative h1(O_C({n})) for s = {}",
                    self.s
                );
                Ok(h1)
            }
            _ => Err(Error::IndexOutOfRange { index: i, max: 1 }),
        }
    }
}

pub fn h_ideal(curve: &DeterminantalCurve, i: usize, n: i64) -> Result<BigInt> {
    curve.h_ideal(i, n)
}

pub fn h_curve_structure(curve: &DeterminantalCurve, i: usize, n: i64) -> Result<BigInt> {
    curve.h_structure(i, n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveInvariants {
    /// Least twist carrying a surface through C.
    pub s_of_c: i64,
    /// Largest twist with h¹(O_C(e)) ≠ 0.
    pub e_of_c: i64,
    /// h¹(J_C(t)) = 0 for all t below this bound.
    pub t_of_c: TwistBound,
    /// H⁰(N*_C(τ)) = 0 for τ below this bound.
    pub nstar_bound: i64,
    /// H⁰(J_C²(τ)) = 0 for τ below this bound.
    pub jsq_bound: i64,
}

/// Scans the cohomology tables for s(C), e(C), t(C) and attaches the
/// conormal and square-ideal vanishing bounds known for determinantal curves.
pub fn curve_invariants(curve: &DeterminantalCurve) -> CurveInvariants {
    let s = curve.s;

    let s_of_c = (0..)
        .find(|&n| !curve.h0_ideal(n).is_zero())
        .expect("h0(J_C(n)) is eventually nonzero");

    // h¹(O_C(n)) = 0 once n·d > 2g − 2.
    let genus = curve.genus.to_i64().expect("genus fits in i64");
    let degree = curve.degree.to_i64().expect("degree fits in i64");
    let start = ((2 * genus - 2).div_euclid(degree) + 1).max(s);
    let e_of_c = (i64::MIN..=start)
        .rev()
        .find(|&n| !curve.h_structure(1, n).unwrap().is_zero())
        .expect("h1(O_C(n)) is nonzero for n very negative");

    for n in -5..=3 * s {
        assert!(curve.h_ideal(1, n).unwrap().is_zero());
    }

    CurveInvariants {
        s_of_c,
        e_of_c,
        t_of_c: TwistBound::Infinite,
        nstar_bound: s,
        jsq_bound: 2 * s,
    }
}
