//! Sequence tables for the command-line layer, as JSON or CSV.

use std::fmt;
use std::str::FromStr;

use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::bell::{bell_polynomial, incomplete_bell_partition, stirling2_triangle, BellArgs};
use crate::degenerate::{
    degen_bernoulli_table_by_binomial_expansion, degen_bernoulli_table_by_mersenne_recurrence,
    degen_bernoulli_table_by_series, dimorphic_mersenne_table, gff_table, mersenne,
};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::poly::BivarPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    FallingFactorial,
    DegenBernoulli,
    DimorphicMersenne,
    Mersenne,
    Stirling2,
    BellTriangle,
    Phi,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::FallingFactorial,
        Family::DegenBernoulli,
        Family::DimorphicMersenne,
        Family::Mersenne,
        Family::Stirling2,
        Family::BellTriangle,
        Family::Phi,
    ];

    pub fn cli_name(self) -> &'static str {
        match self {
            Family::FallingFactorial => "gff",
            Family::DegenBernoulli => "beta",
            Family::DimorphicMersenne => "dimorphic",
            Family::Mersenne => "mersenne",
            Family::Stirling2 => "stirling2",
            Family::BellTriangle => "bell-triangle",
            Family::Phi => "phi",
        }
    }

    fn is_triangle(self) -> bool {
        matches!(self, Family::Stirling2 | Family::BellTriangle)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.cli_name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.cli_name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown family `{s}`")))
    }
}

/// Which construction produces β_n(x).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BernoulliMethod {
    #[default]
    Series,
    BinomialExpansion,
    MersenneRecurrence,
}

impl BernoulliMethod {
    pub fn tag(self) -> &'static str {
        match self {
            BernoulliMethod::Series => "series",
            BernoulliMethod::BinomialExpansion => "binomial-expansion",
            BernoulliMethod::MersenneRecurrence => "mersenne-recurrence",
        }
    }

    pub fn table(self, n_max: usize) -> Vec<BivarPoly> {
        match self {
            BernoulliMethod::Series => degen_bernoulli_table_by_series(&BivarPoly::x(), n_max),
            BernoulliMethod::BinomialExpansion => {
                degen_bernoulli_table_by_binomial_expansion(n_max)
            }
            BernoulliMethod::MersenneRecurrence => {
                degen_bernoulli_table_by_mersenne_recurrence(n_max)
            }
        }
    }
}

impl FromStr for BernoulliMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            BernoulliMethod::Series,
            BernoulliMethod::BinomialExpansion,
            BernoulliMethod::MersenneRecurrence,
        ]
        .into_iter()
        .find(|m| m.tag() == s)
        .ok_or_else(|| Error::Usage(format!("unknown method `{s}`")))
    }
}

mod decimal {
    use num::BigInt;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for x in v {
                seq.serialize_element(&x.to_string())?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<String>::deserialize(d)?
                .into_iter()
                .map(|s| s.parse().map_err(D::Error::custom))
                .collect()
        }
    }
}

/// One table entry: an integer, a triangle row, or a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableValue {
    Integer(#[serde(with = "decimal")] BigInt),
    Row(#[serde(with = "decimal::vec")] Vec<BigInt>),
    Poly(BivarPoly),
}

impl fmt::Display for TableValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableValue::Integer(v) => write!(f, "{v}"),
            TableValue::Poly(p) => write!(f, "{p}"),
            TableValue::Row(r) => {
                let cells: Vec<String> = r.iter().map(|v| v.to_string()).collect();
                f.write_str(&cells.join(","))
            }
        }
    }
}

/// Values of one family for indices `from..=to`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegenSequenceTable {
    pub family: Family,
    pub method: String,
    pub from: usize,
    pub to: usize,
    pub values: Vec<TableValue>,
}

impl DegenSequenceTable {
    pub fn build(family: Family, n_max: usize, method: BernoulliMethod, exec: Execution) -> Self {
        let (method, values): (&str, Vec<TableValue>) = match family {
            Family::FallingFactorial => ("product", polys(gff_table(&BivarPoly::x(), n_max))),
            Family::DegenBernoulli => (method.tag(), polys(method.table(n_max))),
            Family::DimorphicMersenne => (
                "falling-factorial-difference",
                polys(dimorphic_mersenne_table(n_max)),
            ),
            Family::Mersenne => (
                "power-of-two",
                (0..=n_max)
                    .map(|n| TableValue::Integer(mersenne(n as u32)))
                    .collect(),
            ),
            Family::Stirling2 => (
                "triangle-recurrence",
                stirling2_triangle(n_max)
                    .into_iter()
                    .map(TableValue::Row)
                    .collect(),
            ),
            Family::BellTriangle => ("partition-sum", bell_ones_triangle(n_max, exec)),
            Family::Phi => (
                "stirling-sum",
                exec.map((0..=n_max).collect(), bell_polynomial)
                    .into_iter()
                    .map(TableValue::Poly)
                    .collect(),
            ),
        };
        DegenSequenceTable {
            family,
            method: method.to_string(),
            from: 0,
            to: n_max,
            values,
        }
    }

    /// Compact JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("table serializes");
        s.push('\n');
        s
    }

    /// CSV with a header row. Triangles use one column per k, zero-filled
    /// past the diagonal; other families use `n,value`.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        if self.family.is_triangle() {
            let header: Vec<String> = (0..=self.to).map(|k| format!("k={k}")).collect();
            out.push_str(&format!("n,{}\n", header.join(",")));
            for (i, value) in self.values.iter().enumerate() {
                let TableValue::Row(row) = value else {
                    unreachable!("triangle families hold rows")
                };
                let mut cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                cells.resize(self.to + 1, "0".to_string());
                out.push_str(&format!("{},{}\n", self.from + i, cells.join(",")));
            }
        } else {
            out.push_str("n,value\n");
            for (i, value) in self.values.iter().enumerate() {
                out.push_str(&format!("{},{}\n", self.from + i, value));
            }
        }
        out
    }
}

fn polys(values: Vec<BivarPoly>) -> Vec<TableValue> {
    values.into_iter().map(TableValue::Poly).collect()
}

/// Rows of `B_{n,k}(1, ..., 1)` for `0 <= k <= n <= n_max`.
fn bell_ones_triangle(n_max: usize, exec: Execution) -> Vec<TableValue> {
    let ones = BellArgs::repeated(BivarPoly::one(), n_max);
    let pairs: Vec<(usize, usize)> = (0..=n_max)
        .flat_map(|n| (0..=n).map(move |k| (n, k)))
        .collect();
    let values = exec.map(pairs, |(n, k)| {
        incomplete_bell_partition(n, k, &ones)
            .expect("enough arguments")
            .as_integer()
            .expect("integer arguments give integers")
    });
    let mut it = values.into_iter();
    (0..=n_max)
        .map(|n| TableValue::Row(it.by_ref().take(n + 1).collect()))
        .collect()
}
