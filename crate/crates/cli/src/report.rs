//! Report payloads and their tabular view.
//!
//! Every command produces a [`Report`]. JSON serializes the report as a single
//! object; text and CSV render the same [`Table`]s, so all three formats carry
//! identical numbers.

use moduli_core::arith::serde_str;
use moduli_core::curves::{CurveInvariants, DeterminantalCurve};
use moduli_core::moduli::{
    ComponentInterval, ConstructionCertificate, OptimalParameters, ThresholdRow,
};
use moduli_core::natcohom::NaturalCohomologyProfile;
use moduli_core::oracle::OracleVote;
use moduli_core::{BigInt, Rational, SurfaceNumerics};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const FORMAT_VERSION: &str = "moduli-numerics/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub format: String,
    pub command: String,
    pub input: BTreeMap<String, String>,
    pub result: Payload,
}

impl Report {
    pub fn new(command: &str, input: BTreeMap<String, String>, result: Payload) -> Self {
        Report {
            format: FORMAT_VERSION.to_string(),
            command: command.to_string(),
            input,
            result,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Surface(SurfaceReport),
    Curve(CurveReport),
    Construct(ConstructReport),
    Intervals(IntervalsReport),
    Thresholds(ThresholdsReport),
    Natural(NaturalCohomologyProfile),
    Verify(VerifyReport),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiRow {
    pub n: i64,
    #[serde(with = "serde_str::bigint")]
    pub chi_ox: BigInt,
    #[serde(with = "serde_str::bigint")]
    pub chi_restriction: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceReport {
    pub surface: SurfaceNumerics,
    pub beta: i64,
    #[serde(with = "serde_str::bigint")]
    pub gamma: BigInt,
    #[serde(with = "serde_str::rational")]
    pub natural_threshold: Rational,
    pub rows: Vec<ChiRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRow {
    pub n: i64,
    /// hⁱ(J_C(n)) for i = 0..3.
    #[serde(with = "bigint_array")]
    pub h_ideal: [BigInt; 4],
    /// hⁱ(O_C(n)) for i = 0, 1.
    #[serde(with = "bigint_pair")]
    pub h_curve: [BigInt; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveReport {
    pub curve: DeterminantalCurve,
    pub invariants: CurveInvariants,
    pub rows: Vec<CurveRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructReport {
    pub certificate: ConstructionCertificate,
    /// Present when (s, σ) were taken from the optimal construction.
    pub optimal: Option<OptimalParameters>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalRow {
    pub interval: ComponentInterval,
    pub empty: bool,
    #[serde(with = "serde_str::bigint")]
    pub min_integer: BigInt,
    #[serde(with = "serde_str::option_bigint")]
    pub max_integer: Option<BigInt>,
    #[serde(with = "serde_str::option_bigint")]
    pub count: Option<BigInt>,
}

impl From<ComponentInterval> for IntervalRow {
    fn from(interval: ComponentInterval) -> Self {
        IntervalRow {
            empty: interval.is_empty(),
            min_integer: interval.min_integer(),
            max_integer: interval.max_integer(),
            count: interval.count(),
            interval,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalsReport {
    pub delta: i64,
    pub intervals: Vec<IntervalRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThresholdsReport {
    pub rows: Vec<ThresholdRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub prime: u64,
    pub seeds: Vec<u64>,
    pub votes: Vec<OracleVote>,
    pub all_agree: bool,
}

mod bigint_array {
    use super::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt; 4], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[BigInt; 4], D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let parsed: Vec<BigInt> = raw
            .iter()
            .map(|x| x.parse().map_err(D::Error::custom))
            .collect::<Result<_, _>>()?;
        parsed
            .try_into()
            .map_err(|_| D::Error::custom("expected 4 entries"))
    }
}

mod bigint_pair {
    use super::BigInt;
    use serde::{de::Error as _, Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt; 2], s: S) -> Result<S::Ok, S::Error> {
        v.iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<[BigInt; 2], D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let parsed: Vec<BigInt> = raw
            .iter()
            .map(|x| x.parse().map_err(D::Error::custom))
            .collect::<Result<_, _>>()?;
        parsed
            .try_into()
            .map_err(|_| D::Error::custom("expected 2 entries"))
    }
}

/// A titled table of string cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    fn new(title: &str, headers: &[&str]) -> Self {
        Table {
            title: title.to_string(),
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    fn key_values(title: &str, pairs: Vec<(&str, String)>) -> Self {
        let mut t = Table::new(title, &["field", "value"]);
        for (k, v) in pairs {
            t.push(vec![k.to_string(), v]);
        }
        t
    }
}

fn opt<T: ToString>(v: &Option<T>, none: &str) -> String {
    v.as_ref()
        .map_or_else(|| none.to_string(), ToString::to_string)
}

impl Payload {
    pub fn tables(&self) -> Vec<Table> {
        match self {
            Payload::Surface(r) => {
                let mut summary = vec![
                    ("h_square", r.surface.h_square.to_string()),
                    ("k", r.surface.k.to_string()),
                    ("chi0", r.surface.chi0.to_string()),
                    ("beta", r.beta.to_string()),
                    ("gamma", r.gamma.to_string()),
                    ("natural_threshold", r.natural_threshold.to_string()),
                ];
                if let Some(d) = r.surface.degree {
                    summary.insert(0, ("delta", d.to_string()));
                }
                let mut rows = Table::new("chi(O_X(n))", &["n", "chi_ox", "chi_restriction"]);
                for row in &r.rows {
                    rows.push(vec![
                        row.n.to_string(),
                        row.chi_ox.to_string(),
                        row.chi_restriction.to_string(),
                    ]);
                }
                vec![Table::key_values("surface", summary), rows]
            }
            Payload::Curve(r) => {
                let inv = &r.invariants;
                let summary = Table::key_values(
                    "determinantal curve",
                    vec![
                        ("s", r.curve.s.to_string()),
                        ("degree", r.curve.degree.to_string()),
                        ("genus", r.curve.genus.to_string()),
                        ("s_of_c", inv.s_of_c.to_string()),
                        ("e_of_c", inv.e_of_c.to_string()),
                        ("t_of_c", inv.t_of_c.to_string()),
                        ("nstar_bound", inv.nstar_bound.to_string()),
                        ("jsq_bound", inv.jsq_bound.to_string()),
                    ],
                );
                let mut rows = Table::new(
                    "cohomology",
                    &["n", "h0_j", "h1_j", "h2_j", "h3_j", "h0_oc", "h1_oc"],
                );
                for row in &r.rows {
                    let mut cells = vec![row.n.to_string()];
                    cells.extend(
                        row.h_ideal
                            .iter()
                            .chain(&row.h_curve)
                            .map(ToString::to_string),
                    );
                    rows.push(cells);
                }
                vec![summary, rows]
            }
            Payload::Construct(r) => {
                let c = &r.certificate;
                let mut pairs = vec![
                    ("delta", c.delta.to_string()),
                    ("s", c.s.to_string()),
                    ("sigma", c.sigma.to_string()),
                ];
                let names = [
                    "cond_a", "cond_b", "cond_c", "cond_d", "cond_e", "cond_f", "cond_g",
                ];
                for (name, (_, ok)) in names.iter().zip(c.conditions()) {
                    pairs.push((name, ok.to_string()));
                }
                pairs.extend([
                    ("stable", c.stable.to_string()),
                    ("good", c.good.to_string()),
                    ("c2", c.c2.to_string()),
                    ("exp_dim", c.exp_dim.to_string()),
                ]);
                if let Some(o) = &r.optimal {
                    pairs.push(("c2_min", o.c2_min.to_string()));
                }
                vec![Table::key_values("certificate", pairs)]
            }
            Payload::Intervals(r) => {
                let mut t = Table::new(
                    "intervals",
                    &[
                        "label",
                        "lower",
                        "lower_closed",
                        "upper",
                        "upper_closed",
                        "empty",
                        "min_integer",
                        "max_integer",
                        "count",
                        "hypothesis_met",
                        "stable_unknown",
                    ],
                );
                for row in &r.intervals {
                    let iv = &row.interval;
                    t.push(vec![
                        iv.label.to_string(),
                        iv.lower.to_string(),
                        iv.lower_closed.to_string(),
                        opt(&iv.upper, "inf"),
                        iv.upper_closed.to_string(),
                        row.empty.to_string(),
                        row.min_integer.to_string(),
                        opt(&row.max_integer, "inf"),
                        opt(&row.count, "inf"),
                        iv.hypothesis_met.to_string(),
                        iv.stable_unknown.to_string(),
                    ]);
                }
                vec![t]
            }
            Payload::Thresholds(r) => {
                let mut t = Table::new("thresholds", &["label", "parity", "min_delta"]);
                for row in &r.rows {
                    t.push(vec![
                        row.label.to_string(),
                        opt(&row.parity, "any"),
                        row.min_delta.to_string(),
                    ]);
                }
                vec![t]
            }
            Payload::Natural(p) => {
                let summary = Table::key_values(
                    "natural cohomology",
                    vec![
                        ("h_square", p.surface.h_square.to_string()),
                        ("k", p.surface.k.to_string()),
                        ("c2", p.c2.to_string()),
                        ("beta", p.beta.to_string()),
                        ("gamma", p.gamma.to_string()),
                    ],
                );
                let mut t = Table::new("profile", &["n", "h0", "h1", "h2", "chi"]);
                for r in &p.rows {
                    t.push(vec![
                        r.n.to_string(),
                        r.h0.to_string(),
                        r.h1.to_string(),
                        r.h2.to_string(),
                        r.chi.to_string(),
                    ]);
                }
                vec![summary, t]
            }
            Payload::Verify(r) => {
                let mut t = Table::new(
                    "oracle votes",
                    &[
                        "quantity", "s", "n", "p", "expected", "values", "seeds", "redraws",
                        "agrees",
                    ],
                );
                for v in &r.votes {
                    let join = |it: Vec<String>| it.join(" ");
                    t.push(vec![
                        v.quantity.clone(),
                        v.s.to_string(),
                        v.n.to_string(),
                        v.p.to_string(),
                        v.expected.to_string(),
                        join(v.draws.iter().map(|d| d.value.to_string()).collect()),
                        join(v.draws.iter().map(|d| d.seed.to_string()).collect()),
                        v.draws
                            .iter()
                            .map(|d| d.rejected.len())
                            .sum::<usize>()
                            .to_string(),
                        v.agrees.to_string(),
                    ]);
                }
                vec![t]
            }
        }
    }
}
