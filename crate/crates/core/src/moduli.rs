//! Serre-construction certificates and the catalog of c₂ intervals.
//!
//! A rank-2 bundle E with c₁ = 0 is built as an extension
//! 0 → O_X(−σ) → E → J_{P/X}(σ) → 0 where P = C ∩ X for a curve C ⊂ P³.
//! [`certificate`] evaluates the seven sufficient conditions on (δ, C, σ)
//! under which E exists, is stable and lies on a good component, and
//! reports c₂(E) = δ(d − σ²) with the expected dimension.

use crate::arith::{big, ceil, floor, is_even, ratio, rational_from_int, BigInt, Rational};
use crate::curves::{curve_invariants, determinantal_curve, CurveInvariants, DeterminantalCurve};
use crate::error::{Error, Result};
use crate::surfaces::hypersurface;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Default cap on materialized integer points of an interval.
pub const DEFAULT_POINT_CAP: u64 = 1_000_000;

/// Horizon of the degree searches. Every upper endpoint minus lower endpoint
/// is a cubic in δ with positive leading coefficient, so no interval turns
/// empty again past a few dozen; 1000 leaves a wide margin.
pub const SEARCH_LIMIT: i64 = 1_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionCertificate {
    pub delta: i64,
    pub s: i64,
    pub sigma: i64,
    /// 2σ − 4 ≤ e(C)
    pub cond_a: bool,
    /// σ < s(C) and σ − δ < t(C)
    pub cond_b: bool,
    /// δ − 4 < 2σ
    pub cond_c: bool,
    /// δ − 4 < s(C)
    pub cond_d: bool,
    /// 2σ − 4 ≤ t(C)
    pub cond_e: bool,
    /// H⁰(J_C²(2σ + δ − 4)) = 0
    pub cond_f: bool,
    /// H⁰(N*_C(2σ − 4)) = 0
    pub cond_g: bool,
    pub stable: bool,
    pub good: bool,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub c2: BigInt,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub exp_dim: BigInt,
}

impl ConstructionCertificate {
    pub fn conditions(&self) -> [(char, bool); 7] {
        [
            ('a', self.cond_a),
            ('b', self.cond_b),
            ('c', self.cond_c),
            ('d', self.cond_d),
            ('e', self.cond_e),
            ('f', self.cond_f),
            ('g', self.cond_g),
        ]
    }
}

/// Evaluates the construction conditions for arbitrary curve data of degree
/// `degree` with invariants `inv`. Failed conditions are reported, not raised.
pub fn certificate_for_curve(
    delta: i64,
    sigma: i64,
    s_label: i64,
    degree: &BigInt,
    inv: &CurveInvariants,
) -> Result<ConstructionCertificate> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    if sigma < 1 {
        return Err(Error::InvalidSigma(sigma));
    }
    let twice_minus_4 = 2 * sigma - 4;
    let cond_a = twice_minus_4 <= inv.e_of_c;
    let cond_b = sigma < inv.s_of_c && inv.t_of_c.exceeds(sigma - delta);
    let cond_c = delta - 4 < 2 * sigma;
    let cond_d = delta - 4 < inv.s_of_c;
    let cond_e = inv.t_of_c.at_least(twice_minus_4);
    let cond_f = 2 * sigma + delta - 4 < inv.jsq_bound;
    let cond_g = twice_minus_4 < inv.nstar_bound;
    let good = cond_a && cond_b && cond_c && cond_d && cond_e && cond_f && cond_g;

    let c2 = (degree - big(sigma) * sigma) * delta;
    let exp_dim = hypersurface(delta)?.expected_dim(&c2);
    Ok(ConstructionCertificate {
        delta,
        s: s_label,
        sigma,
        cond_a,
        cond_b,
        cond_c,
        cond_d,
        cond_e,
        cond_f,
        cond_g,
        stable: cond_b,
        good,
        c2,
        exp_dim,
    })
}

/// Certificate for the determinantal curve of index `s`.
pub fn certificate(delta: i64, s: i64, sigma: i64) -> Result<ConstructionCertificate> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    let curve = determinantal_curve(s)?;
    if sigma < 1 {
        return Err(Error::InvalidSigma(sigma));
    }
    let inv = curve_invariants(&curve);
    certificate_for_curve(delta, sigma, s, &curve.degree, &inv)
}

/// Sufficient condition for H⁰(X, J_{P/X}(τ)) = 0, P = C ∩ X:
/// H⁰(J_C(τ)) = H¹(J_C(τ − δ)) = 0.
pub fn points_ideal_vanishes(curve: &DeterminantalCurve, delta: i64, tau: i64) -> bool {
    curve.h_ideal(0, tau).unwrap().is_zero() && curve.h_ideal(1, tau - delta).unwrap().is_zero()
}

/// Sufficient condition for H⁰(X, J²_{P/X}(n)) = 0: H¹(J_C(n − δ)) = 0,
/// H⁰(J_C²(n)) = 0 and H⁰(N*_C(n − δ)) = 0.
pub fn points_ideal_square_vanishes(curve: &DeterminantalCurve, delta: i64, n: i64) -> bool {
    let inv = curve_invariants(curve);
    curve.h_ideal(1, n - delta).unwrap().is_zero()
        && n < inv.jsq_bound
        && n - delta < inv.nstar_bound
}

/// H⁰(E(τ)) = 0 for the extension built from C with parameter σ, provided
/// τ < σ and the points ideal vanishes in degree σ + τ.
pub fn twisted_sections_vanish(
    curve: &DeterminantalCurve,
    delta: i64,
    sigma: i64,
    tau: i64,
) -> bool {
    tau < sigma && points_ideal_vanishes(curve, delta, sigma + tau)
}

/// H⁰(E) = 0, which on a Picard-rank-one surface makes E stable.
pub fn stability_by_vanishing(curve: &DeterminantalCurve, delta: i64, sigma: i64) -> bool {
    twisted_sections_vanish(curve, delta, sigma, 0)
}

/// Goodness criterion: δ − 4 < 2σ, H⁰(J_{P/X}(δ − 4)) = 0 and
/// H⁰(J²_{P/X}(2σ + δ − 4)) = 0, each discharged through the curve.
pub fn goodness_by_vanishing(curve: &DeterminantalCurve, delta: i64, sigma: i64) -> bool {
    delta - 4 < 2 * sigma
        && points_ideal_vanishes(curve, delta, delta - 4)
        && points_ideal_square_vanishes(curve, delta, 2 * sigma + delta - 4)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OptimalParameters {
    pub delta: i64,
    pub s: i64,
    pub sigma: i64,
    #[serde(with = "crate::arith::serde_str::bigint")]
    pub c2_min: BigInt,
}

/// s = δ − 2 (δ even) or δ − 3 (δ odd), σ = s/2, giving the smallest c₂ of
/// the determinantal construction: c₂ = δσ(σ + 1).
pub fn optimal_parameters(delta: i64) -> Result<OptimalParameters> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    let s = if is_even(delta) { delta - 2 } else { delta - 3 };
    let sigma = s / 2;
    let c2_min = big(delta) * sigma * (sigma + 1);

    let closed_form = if is_even(delta) {
        big(delta) * delta * (delta - 2) / 4
    } else {
        big(delta) * (delta - 1) * (delta - 3) / 4
    };
    assert_eq!(c2_min, closed_form, "c2_min closed form at delta = {delta}");

    let cert = certificate(delta, s, sigma)?;
    assert!(cert.good, "optimal construction fails at delta = {delta}");
    assert_eq!(cert.c2, c2_min);

    Ok(OptimalParameters {
        delta,
        s,
        sigma,
        c2_min,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: i64) -> Self {
        if is_even(n) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    fn first_degree(self) -> i64 {
        match self {
            Parity::Even => 4,
            Parity::Odd => 5,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalLabel {
    /// [c₂_min, ∞): good components, propagated by c₂ ↦ c₂ + 1.
    GoodTail,
    /// Components of dimension above the expected one (points in general
    /// position, σ = 1).
    Ogrady,
    /// Good component and a larger one coexist, parity-dependent lower bound.
    TwoComponent,
    /// Same, with the lower bound δ³/4 − δ²/2 used for every δ.
    UniformTwoComponent,
    /// Larger component only known to contain semistable bundles.
    SemistableTwoComponent,
    /// c₁ = 1 analogue of the two-component range.
    OddC1TwoComponent,
}

impl IntervalLabel {
    pub const ALL: [IntervalLabel; 6] = [
        IntervalLabel::GoodTail,
        IntervalLabel::Ogrady,
        IntervalLabel::TwoComponent,
        IntervalLabel::UniformTwoComponent,
        IntervalLabel::SemistableTwoComponent,
        IntervalLabel::OddC1TwoComponent,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            IntervalLabel::GoodTail => "good_tail",
            IntervalLabel::Ogrady => "ogrady",
            IntervalLabel::TwoComponent => "two_component",
            IntervalLabel::UniformTwoComponent => "uniform_two_component",
            IntervalLabel::SemistableTwoComponent => "semistable_two_component",
            IntervalLabel::OddC1TwoComponent => "odd_c1_two_component",
        }
    }

    pub fn interval(self, delta: i64) -> Result<ComponentInterval> {
        match self {
            IntervalLabel::GoodTail => good_tail_interval(delta),
            IntervalLabel::Ogrady => ogrady_interval(delta),
            IntervalLabel::TwoComponent => two_component_interval(delta),
            IntervalLabel::UniformTwoComponent => uniform_two_component_interval(delta),
            IntervalLabel::SemistableTwoComponent => semistable_interval(delta),
            IntervalLabel::OddC1TwoComponent => odd_c1_interval(delta),
        }
    }
}

impl fmt::Display for IntervalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IntervalLabel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        IntervalLabel::ALL
            .into_iter()
            .find(|l| l.as_str() == s)
            .ok_or_else(|| format!("unknown interval label `{s}`"))
    }
}

/// A range of c₂ values with exact endpoints. `upper == None` means +∞.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentInterval {
    pub label: IntervalLabel,
    pub delta: i64,
    #[serde(with = "crate::arith::serde_str::rational")]
    pub lower: Rational,
    pub lower_closed: bool,
    #[serde(with = "crate::arith::serde_str::option_rational")]
    pub upper: Option<Rational>,
    pub upper_closed: bool,
    /// Whether the degree hypothesis of the underlying existence result holds.
    pub hypothesis_met: bool,
    /// The larger component is not known to contain stable bundles.
    pub stable_unknown: bool,
}

impl ComponentInterval {
    fn half_open(label: IntervalLabel, delta: i64, lower: Rational, upper: Rational) -> Self {
        ComponentInterval {
            label,
            delta,
            lower,
            lower_closed: true,
            upper: Some(upper),
            upper_closed: false,
            hypothesis_met: true,
            stable_unknown: false,
        }
    }

    /// Smallest integer in the interval (ignoring the upper end).
    pub fn min_integer(&self) -> BigInt {
        if self.lower_closed {
            ceil(&self.lower)
        } else {
            floor(&self.lower) + 1
        }
    }

    /// Largest integer below the upper end, `None` when unbounded.
    pub fn max_integer(&self) -> Option<BigInt> {
        self.upper.as_ref().map(|u| {
            if self.upper_closed {
                floor(u)
            } else {
                ceil(u) - 1
            }
        })
    }

    pub fn is_empty(&self) -> bool {
        matches!(self.max_integer(), Some(max) if max < self.min_integer())
    }

    /// Number of integer points, `None` when infinite.
    pub fn count(&self) -> Option<BigInt> {
        self.max_integer().map(|max| {
            let n = max - self.min_integer() + 1;
            if n < BigInt::zero() {
                BigInt::zero()
            } else {
                n
            }
        })
    }

    pub fn contains(&self, c2: &BigInt) -> bool {
        let q = rational_from_int(c2.clone());
        let above = if self.lower_closed {
            q >= self.lower
        } else {
            q > self.lower
        };
        let below = match &self.upper {
            None => true,
            Some(u) if self.upper_closed => &q <= u,
            Some(u) => &q < u,
        };
        above && below
    }

    /// Integer points in increasing order, generated on demand.
    pub fn iter_integers(&self) -> impl Iterator<Item = BigInt> + '_ {
        let max = self.max_integer();
        let mut next = self.min_integer();
        std::iter::from_fn(move || {
            if matches!(&max, Some(m) if &next > m) {
                return None;
            }
            let out = next.clone();
            next += BigInt::one();
            Some(out)
        })
    }

    /// All integer points, refusing intervals with more than `cap` of them.
    pub fn integer_points(&self, cap: u64) -> Result<Vec<BigInt>> {
        match self.count() {
            Some(n) if n <= big(cap as i64) => Ok(self.iter_integers().collect()),
            _ => Err(Error::TooManyPoints { cap }),
        }
    }
}

fn cubic(delta: i64, coeffs: [i64; 4]) -> BigInt {
    let d = big(delta);
    coeffs.iter().fold(BigInt::zero(), |acc, &c| acc * &d + c)
}

/// ⅓(δ³ − 9δ² + 26δ − 3): upper end shared by the ogrady and two-component ranges.
fn ogrady_upper(delta: i64) -> Rational {
    ratio(cubic(delta, [1, -9, 26, -3]), 3)
}

/// c₂_min of the good construction: δ³/4 − δ²/2 (even), δ³/4 − δ² + ¾δ (odd).
fn good_lower(delta: i64) -> Rational {
    if is_even(delta) {
        ratio(cubic(delta, [1, -2, 0, 0]), 4)
    } else {
        ratio(cubic(delta, [1, -4, 3, 0]), 4)
    }
}

pub fn good_tail_interval(delta: i64) -> Result<ComponentInterval> {
    let params = optimal_parameters(delta)?;
    Ok(ComponentInterval {
        label: IntervalLabel::GoodTail,
        delta,
        lower: rational_from_int(params.c2_min),
        lower_closed: true,
        upper: None,
        upper_closed: false,
        hypothesis_met: true,
        stable_unknown: false,
    })
}

/// ⅙(δ³ − 7δ) < c₂ < ⅓(δ³ − 9δ² + 26δ − 3), valid for δ ≥ 14.
pub fn ogrady_interval(delta: i64) -> Result<ComponentInterval> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    Ok(ComponentInterval {
        label: IntervalLabel::Ogrady,
        delta,
        lower: ratio(cubic(delta, [1, 0, -7, 0]), 6),
        lower_closed: false,
        upper: Some(ogrady_upper(delta)),
        upper_closed: false,
        hypothesis_met: delta >= 14,
        stable_unknown: false,
    })
}

pub fn two_component_interval(delta: i64) -> Result<ComponentInterval> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    let mut iv = ComponentInterval::half_open(
        IntervalLabel::TwoComponent,
        delta,
        good_lower(delta),
        ogrady_upper(delta),
    );
    iv.hypothesis_met = delta >= 14;
    Ok(iv)
}

pub fn uniform_two_component_interval(delta: i64) -> Result<ComponentInterval> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    let lower = ratio(cubic(delta, [1, -2, 0, 0]), 4);
    let mut iv = ComponentInterval::half_open(
        IntervalLabel::UniformTwoComponent,
        delta,
        lower,
        ogrady_upper(delta),
    );
    iv.hypothesis_met = delta >= 14;
    Ok(iv)
}

/// Lower end as for the good construction, upper ⅓(δ³ − 6δ² + 11δ − 3).
pub fn semistable_interval(delta: i64) -> Result<ComponentInterval> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    let upper = ratio(cubic(delta, [1, -6, 11, -3]), 3);
    let mut iv = ComponentInterval::half_open(
        IntervalLabel::SemistableTwoComponent,
        delta,
        good_lower(delta),
        upper,
    );
    iv.stable_unknown = true;
    Ok(iv)
}

/// c₁ = 1: δ(δ−1)²/4 (odd) or δ(δ−2)²/4 (even) ≤ c₂ < ⅙(2δ³ − 15δ² + 37δ − 6).
pub fn odd_c1_interval(delta: i64) -> Result<ComponentInterval> {
    if delta < 4 {
        return Err(Error::DegreeTooSmall(delta));
    }
    let shift = if is_even(delta) { 2 } else { 1 };
    let lower = ratio(big(delta) * (delta - shift) * (delta - shift), 4);
    let upper = ratio(cubic(delta, [2, -15, 37, -6]), 6);
    Ok(ComponentInterval::half_open(
        IntervalLabel::OddC1TwoComponent,
        delta,
        lower,
        upper,
    ))
}

pub fn all_intervals(delta: i64) -> Result<Vec<ComponentInterval>> {
    IntervalLabel::ALL
        .into_iter()
        .map(|l| l.interval(delta))
        .collect()
}

fn nonempty_at(label: IntervalLabel, delta: i64) -> bool {
    match label {
        // [c₂_min, ∞) always has integers.
        IntervalLabel::GoodTail => true,
        _ => !label
            .interval(delta)
            .map(|iv| iv.is_empty())
            .unwrap_or(true),
    }
}

/// Smallest δ ≥ 4 of the given parity whose `label` interval has an integer.
///
/// Small degrees can produce isolated hits (the c₁ = 1 range at δ = 4 is
/// [4, 5)); [`min_delta_nonempty`] is the threshold from which on the range
/// stays nonempty.
pub fn first_delta_nonempty(label: IntervalLabel, parity: Parity) -> Result<i64> {
    (parity.first_degree()..=SEARCH_LIMIT)
        .step_by(2)
        .find(|&delta| nonempty_at(label, delta))
        .ok_or(Error::SearchExhausted {
            limit: SEARCH_LIMIT,
        })
}

/// Smallest δ₀ ≥ 4 of the given parity such that the `label` interval is
/// nonempty for every δ ≥ δ₀ of that parity (checked up to [`SEARCH_LIMIT`]).
pub fn min_delta_nonempty(label: IntervalLabel, parity: Parity) -> Result<i64> {
    let degrees: Vec<i64> = (parity.first_degree()..=SEARCH_LIMIT).step_by(2).collect();
    if !nonempty_at(label, *degrees.last().expect("nonempty search range")) {
        return Err(Error::SearchExhausted {
            limit: SEARCH_LIMIT,
        });
    }
    let last_empty = degrees
        .iter()
        .rev()
        .find(|&&delta| !nonempty_at(label, delta));
    Ok(last_empty.map_or(parity.first_degree(), |d| d + 2))
}

/// Threshold over both parities: smallest δ₀ with every δ ≥ δ₀ nonempty.
pub fn min_delta_nonempty_any(label: IntervalLabel) -> Result<i64> {
    let even = min_delta_nonempty(label, Parity::Even)?;
    let odd = min_delta_nonempty(label, Parity::Odd)?;
    // The two thresholds have opposite parity, so the degree just below the
    // later one belongs to the earlier tail.
    Ok(even.max(odd) - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdRow {
    pub label: IntervalLabel,
    /// `None` when the search ranges over both parities.
    pub parity: Option<Parity>,
    pub min_delta: i64,
}

/// Parity thresholds of the two-component, semistable and c₁ = 1 ranges,
/// plus the first degree with a nonempty ogrady range and the first degree
/// (either parity) for the uniform two-component range.
pub fn threshold_table() -> Result<Vec<ThresholdRow>> {
    let mut rows = Vec::new();
    for (label, parities) in [
        (IntervalLabel::TwoComponent, [Parity::Even, Parity::Odd]),
        (
            IntervalLabel::SemistableTwoComponent,
            [Parity::Even, Parity::Odd],
        ),
        (
            IntervalLabel::OddC1TwoComponent,
            [Parity::Odd, Parity::Even],
        ),
    ] {
        for parity in parities {
            rows.push(ThresholdRow {
                label,
                parity: Some(parity),
                min_delta: min_delta_nonempty(label, parity)?,
            });
        }
    }
    for label in [IntervalLabel::Ogrady, IntervalLabel::UniformTwoComponent] {
        rows.push(ThresholdRow {
            label,
            parity: None,
            min_delta: min_delta_nonempty_any(label)?,
        });
    }
    Ok(rows)
}
