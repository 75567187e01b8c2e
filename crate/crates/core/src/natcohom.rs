//! Natural cohomology of the general bundle on the constructed component.
//!
//! E has natural cohomology when, for every twist n, at most one of
//! h⁰(E(n)), h¹(E(n)), h²(E(n)) is nonzero. Once that holds the whole table
//! follows from χ(E(n)) = 2χ(O_X(n)) − c₂ and Serre duality
//! hⁱ(E(n)) = h²⁻ⁱ(E(k − n)).

use crate::arith::{
    big, is_even, next_integer_above, positive_part, ratio, rational_from_int, BigInt, Rational,
};
use crate::error::{Error, Result};
use crate::surfaces::{hypersurface, SurfaceNumerics};
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Smallest integer strictly above 3δ/2 − 4.
pub fn beta_for_hypersurface(delta: i64) -> Result<i64> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    let beta = next_integer_above(&ratio(3 * delta - 8, 2))
        .to_i64()
        .expect("beta fits in i64");
    let closed = if is_even(delta) {
        3 * delta / 2 - 3
    } else {
        (3 * delta - 7) / 2
    };
    assert_eq!(beta, closed);
    assert!(2 * beta >= delta - 4);
    Ok(beta)
}

/// γ = 2χ(O_X(β)); requires β ≥ k/2.
pub fn gamma(surface: &SurfaceNumerics, beta: i64) -> Result<BigInt> {
    if 2 * beta < surface.k {
        return Err(Error::BetaBelowHalfCanonical { beta, k: surface.k });
    }
    Ok(surface.chi_ox(beta) * 2)
}

/// (13δ³ − 24δ² + 8δ)/12, the value of 2χ(O_X(t)) at t = 3δ/2 − 3.
pub fn thm_a1_threshold(delta: i64) -> Result<Rational> {
    let surface = hypersurface(delta)?;
    let d = big(delta);
    let numer = &d * &d * &d * 13 - &d * &d * 24 + &d * 8;
    let threshold = ratio(numer, 12);

    if is_even(delta) {
        let at_bound = surface.chi_ox(3 * delta / 2 - 3) * 2;
        assert_eq!(rational_from_int(at_bound), threshold, "delta = {delta}");
    }
    let g = gamma(&surface, beta_for_hypersurface(delta)?)?;
    assert!(
        rational_from_int(g) <= threshold,
        "gamma above threshold at delta = {delta}"
    );
    Ok(threshold)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileRow {
    pub n: i64,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub h0: BigInt,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub h1: BigInt,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub h2: BigInt,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub chi: BigInt,
}

impl ProfileRow {
    pub fn nonzero_count(&self) -> usize {
        [&self.h0, &self.h1, &self.h2]
            .iter()
            .filter(|h| !h.is_zero())
            .count()
    }

    /// (h², h¹, h⁰) in place of (h⁰, h¹, h²).
    pub fn reversed(&self) -> (BigInt, BigInt, BigInt) {
        (self.h2.clone(), self.h1.clone(), self.h0.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NaturalCohomologyProfile {
    pub surface: SurfaceNumerics,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub c2: BigInt,
    pub beta: i64,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub gamma: BigInt,
    pub rows: Vec<ProfileRow>,
}

impl NaturalCohomologyProfile {
    pub fn row(&self, n: i64) -> Option<&ProfileRow> {
        self.rows.iter().find(|r| r.n == n)
    }
}

/// Predicted (h⁰, h¹, h²) of E(n) for n ∈ n_min..=n_max on a hypersurface,
/// with β from [`beta_for_hypersurface`].
pub fn hilbert_profile(
    surface: &SurfaceNumerics,
    c2: &BigInt,
    n_min: i64,
    n_max: i64,
) -> Result<NaturalCohomologyProfile> {
    let delta = surface.degree.ok_or_else(|| {
        Error::InvalidSurface("beta must be supplied for a non-hypersurface".into())
    })?;
    hilbert_profile_with_beta(surface, beta_for_hypersurface(delta)?, c2, n_min, n_max)
}

/// As [`hilbert_profile`] with a caller-supplied β ≥ k/2 (any surface with
/// K_X = O_X(k)). Refuses c₂ ≤ γ, where no natural-cohomology guarantee exists.
pub fn hilbert_profile_with_beta(
    surface: &SurfaceNumerics,
    beta: i64,
    c2: &BigInt,
    n_min: i64,
    n_max: i64,
) -> Result<NaturalCohomologyProfile> {
    if n_min > n_max {
        return Err(Error::EmptyRange { n_min, n_max });
    }
    let gamma = gamma(surface, beta)?;
    if c2 <= &gamma {
        return Err(Error::NoNaturalCohomologyGuarantee {
            c2: c2.clone(),
            gamma,
        });
    }
    let k = surface.k;
    if is_even(k) {
        let chi = surface.chi_e(c2, k / 2);
        if chi.is_positive() {
            return Err(Error::PositiveMidpoint { n: k / 2, chi });
        }
    }

    let upper_half = |n: i64| {
        let chi = surface.chi_e(c2, n);
        (positive_part(&chi), positive_part(&-&chi), BigInt::zero())
    };
    let rows = (n_min..=n_max)
        .map(|n| {
            let (h0, h1, h2) = if 2 * n >= k {
                upper_half(n)
            } else {
                let (d0, d1, d2) = upper_half(k - n);
                (d2, d1, d0)
            };
            let chi = surface.chi_e(c2, n);
            assert_eq!(&h0 - &h1 + &h2, chi, "chi bookkeeping at n = {n}");
            ProfileRow { n, h0, h1, h2, chi }
        })
        .collect();

    Ok(NaturalCohomologyProfile {
        surface: surface.clone(),
        c2: c2.clone(),
        beta,
        gamma,
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_profile(n_min: i64, n_max: i64) -> NaturalCohomologyProfile {
        hilbert_profile(&hypersurface(4).unwrap(), &big(41), n_min, n_max).unwrap()
    }

    fn triple(r: &ProfileRow) -> (BigInt, BigInt, BigInt) {
        (r.h0.clone(), r.h1.clone(), r.h2.clone())
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta_for_hypersurface(4), Ok(3));
        assert_eq!(beta_for_hypersurface(5), Ok(4));
        assert_eq!(beta_for_hypersurface(6), Ok(6));
        assert!(beta_for_hypersurface(3).is_err());
    }

    #[test]
    fn gamma_examples() {
        let k3 = hypersurface(4).unwrap();
        assert_eq!(gamma(&k3, 3), Ok(big(40)));
        assert_eq!(gamma(&k3, 2), Ok(big(20)));
        assert_eq!(gamma(&hypersurface(6).unwrap(), 6), Ok(big(166)));
        assert_eq!(
            gamma(&hypersurface(8).unwrap(), 1),
            Err(Error::BetaBelowHalfCanonical { beta: 1, k: 4 })
        );
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(thm_a1_threshold(4), Ok(rational_from_int(40)));
        assert_eq!(thm_a1_threshold(6), Ok(rational_from_int(166)));
        assert_eq!(thm_a1_threshold(5), Ok(ratio(355, 4)));
    }

    #[test]
    fn threshold_dominates_gamma() {
        for delta in 4..=60 {
            let x = hypersurface(delta).unwrap();
            let g = rational_from_int(gamma(&x, beta_for_hypersurface(delta).unwrap()).unwrap());
            let t = thm_a1_threshold(delta).unwrap();
            assert!(g <= t);
            assert_eq!(g == t, delta % 2 == 0, "delta={delta}");
        }
    }

    #[test]
    fn k3_rows() {
        let p = k3_profile(-2, 6);
        assert_eq!(p.rows.len(), 9);
        assert_eq!(triple(p.row(3).unwrap()), (big(0), big(1), big(0)));
        assert_eq!(triple(p.row(0).unwrap()), (big(0), big(37), big(0)));
        assert_eq!(triple(p.row(5).unwrap()), (big(63), big(0), big(0)));
        assert!(p.rows.iter().all(|r| r.nonzero_count() == 1));
    }

    #[test]
    fn refuses_below_gamma() {
        let k3 = hypersurface(4).unwrap();
        assert_eq!(
            hilbert_profile(&k3, &big(40), 0, 3),
            Err(Error::NoNaturalCohomologyGuarantee {
                c2: big(40),
                gamma: big(40)
            })
        );
        assert_eq!(
            hilbert_profile(&k3, &big(41), 3, 2),
            Err(Error::EmptyRange { n_min: 3, n_max: 2 })
        );
    }

    #[test]
    fn generic_surface_needs_beta() {
        let s = SurfaceNumerics::new(2, 1, 3).unwrap();
        assert!(hilbert_profile(&s, &big(100), 0, 3).is_err());
        let p = hilbert_profile_with_beta(&s, 3, &big(100), -4, 6).unwrap();
        for r in &p.rows {
            let dual = p.row(s.k - r.n);
            if let Some(d) = dual {
                assert_eq!(triple(r), d.reversed());
            }
        }
    }

    #[test]
    fn duality_and_monotone_transition() {
        for delta in 4..=12 {
            let x = hypersurface(delta).unwrap();
            let g = gamma(&x, beta_for_hypersurface(delta).unwrap()).unwrap();
            for extra in [1, 7, 100] {
                let c2 = &g + extra;
                let p = hilbert_profile(&x, &c2, -3 * delta, 3 * delta).unwrap();
                for r in &p.rows {
                    assert!(r.nonzero_count() <= 1);
                    assert_eq!(&r.h0 - &r.h1 + &r.h2, x.chi_e(&c2, r.n));
                    if let Some(d) = p.row(x.k - r.n) {
                        assert_eq!(triple(r), d.reversed());
                    }
                }
                // Above k/2: h¹ block, then h⁰ block, never back.
                let upper: Vec<_> = p.rows.iter().filter(|r| 2 * r.n >= x.k).collect();
                let crossover = upper
                    .iter()
                    .position(|r| !r.h0.is_zero())
                    .unwrap_or(upper.len());
                assert!(upper[..crossover]
                    .iter()
                    .all(|r| r.h0.is_zero() && r.h2.is_zero()));
                assert!(upper[crossover..].iter().all(|r| !r.h0.is_zero()));
            }
        }
    }
}
