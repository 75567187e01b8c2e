//! Exact numerics for moduli of rank-2 vector bundles on smooth surfaces of
//! degree δ in projective 3-space.
//!
//! The crate is organised bottom-up:
//!
//! - [`arith`]: big integers, exact rationals and the two binomial conventions.
//! - [`p3cohom`]: cohomology of line bundles and free sums on P³.
//! - [`curves`]: determinantal curves and the cohomology of their ideal sheaves.
//! - [`surfaces`]: Riemann–Roch numerics of a polarized surface.
//! - [`moduli`]: Serre-construction certificates and c₂ interval catalog.
//! - [`natcohom`]: natural-cohomology thresholds and Hilbert profiles.
//! - [`oracle`]: brute-force finite-field checks of the resolution formulas.

pub mod arith;
pub mod curves;
mod error;
pub mod moduli;
pub mod natcohom;
pub mod oracle;
pub mod p3cohom;
pub mod surfaces;

pub use arith::{binom_poly, binom_trunc, BigInt, Rational};
pub use curves::{
    curve_invariants, determinantal_curve, CurveInvariants, DeterminantalCurve, TwistBound,
};
pub use error::{Error, Result};
pub use moduli::{
    certificate, min_delta_nonempty, optimal_parameters, ComponentInterval,
    ConstructionCertificate, IntervalLabel, OptimalParameters, Parity,
};
pub use natcohom::{
    beta_for_hypersurface, gamma, hilbert_profile, thm_a1_threshold, NaturalCohomologyProfile,
    ProfileRow,
};
pub use p3cohom::FreeSheafSum;
pub use surfaces::{hypersurface, SurfaceNumerics};
