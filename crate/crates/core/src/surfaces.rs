//! Riemann–Roch numerics of a polarized surface X with K_X = O_X(k).

use crate::arith::{big, binom_poly, is_even, BigInt};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceNumerics {
    /// H² for the polarization H = O_X(1).
    pub h_square: i64,
    /// Canonical twist: K_X = O_X(k).
    pub k: i64,
    /// χ(O_X).
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub chi0: BigInt,
    /// Degree δ when the surface is a hypersurface in P³.
    pub degree: Option<i64>,
}

impl SurfaceNumerics {
    /// A general polarized surface. Adjunction forces H·(H + K) to be even,
    /// which is what keeps χ(O_X(n)) integral.
    pub fn new(h_square: i64, k: i64, chi0: impl Into<BigInt>) -> Result<Self> {
        if h_square < 1 {
            return Err(Error::InvalidSurface(format!(
                "H^2 = {h_square} must be positive"
            )));
        }
        if !is_even(h_square * (1 + k)) {
            return Err(Error::InvalidSurface(format!(
                "H^2 (1 + k) = {} must be even",
                h_square * (1 + k)
            )));
        }
        Ok(Self {
            h_square,
            k,
            chi0: chi0.into(),
            degree: None,
        })
    }

    /// χ(O_X(n)) = χ(O_X) + H²·n(n−k)/2.
    pub fn chi_ox(&self, n: i64) -> BigInt {
        let twice = big(self.h_square) * n * (n - self.k);
        &self.chi0 + twice / 2
    }

    /// 4c₂ − 3χ(O_X).
    pub fn expected_dim(&self, c2: &BigInt) -> BigInt {
        c2 * 4 - &self.chi0 * 3
    }

    /// χ(E(n)) = 2χ(O_X(n)) − c₂ for rank 2, c₁ = 0.
    pub fn chi_e(&self, c2: &BigInt, n: i64) -> BigInt {
        self.chi_ox(n) * 2 - c2
    }
}

/// Numerics of a smooth degree-δ surface in P³: H² = δ, K = O(δ−4) and
/// χ(O_X) = 1 + C(δ−1, 3) from 0 → O(−δ) → O → O_X → 0.
pub fn hypersurface(delta: i64) -> Result<SurfaceNumerics> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    Ok(SurfaceNumerics {
        h_square: delta,
        k: delta - 4,
        chi0: binom_poly(delta - 1, 3) + 1,
        degree: Some(delta),
    })
}

/// χ(O_X(n)) for a hypersurface via restriction: χ(O_P³(n)) − χ(O_P³(n−δ)).
pub fn chi_ox_by_restriction(delta: i64, n: i64) -> BigInt {
    binom_poly(n + 3, 3) - binom_poly(n - delta + 3, 3)
}

pub fn chi_ox(surface: &SurfaceNumerics, n: i64) -> BigInt {
    surface.chi_ox(n)
}

pub fn expected_dim(surface: &SurfaceNumerics, c2: &BigInt) -> BigInt {
    surface.expected_dim(c2)
}

pub fn chi_e(surface: &SurfaceNumerics, c2: &BigInt, n: i64) -> BigInt {
    surface.chi_e(c2, n)
}
