//! Fixed-point tables: for each representation family of a target, which
//! prime element orders fix a nonzero vector.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::arith::prime_divisors;
use crate::error::{Error, Result};
use crate::groupkit::GroupSpec;
use crate::smallgraph::Prime;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointRow {
    pub label: String,
    pub has_fixed_points: BTreeMap<Prime, bool>,
}

impl FixedPointRow {
    /// Primes whose elements fix a vector in this representation.
    pub fn fixed(&self) -> BTreeSet<Prime> {
        self.has_fixed_points.iter().filter(|(_, &y)| y).map(|(&p, _)| p).collect()
    }

    pub fn all_true(&self) -> bool {
        self.has_fixed_points.values().all(|&y| y)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedPointTable {
    /// T, or 2.T written as `SL2 q=…`.
    pub target: GroupSpec,
    /// 0 for ordinary representations, otherwise the Brauer characteristic.
    pub characteristic: u64,
    pub rows: Vec<FixedPointRow>,
}

impl FixedPointTable {
    pub fn row(&self, label: &str) -> Option<&FixedPointRow> {
        self.rows.iter().find(|r| r.label == label)
    }

    /// The primes every row must mention: π(T) minus the characteristic.
    pub fn key_primes(&self) -> BTreeSet<Prime> {
        let order = self.target.analytic_order().unwrap_or(1);
        prime_divisors(order).into_iter().filter(|&p| p != self.characteristic).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let keys = self.key_primes();
        for r in &self.rows {
            let got: BTreeSet<Prime> = r.has_fixed_points.keys().copied().collect();
            if got != keys {
                return Err(Error::InvalidParameter(format!(
                    "row {} of the {} table (characteristic {}) mentions {:?}, expected {:?}",
                    r.label, self.target, self.characteristic, got, keys
                )));
            }
        }
        if !self.rows.iter().any(FixedPointRow::all_true) {
            return Err(Error::InvalidParameter(format!(
                "the {} table (characteristic {}) has no all-yes row",
                self.target, self.characteristic
            )));
        }
        Ok(())
    }

    pub fn parse(text: &str) -> Result<FixedPointTable> {
        let mut target = None;
        let mut characteristic = None;
        let mut rows = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let err = |msg: String| Error::Parse { line: line_no, msg };
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(v) = line.strip_prefix("target:") {
                target = Some(v.trim().parse::<GroupSpec>().map_err(|e| err(e.to_string()))?);
            } else if let Some(v) = line.strip_prefix("characteristic:") {
                characteristic = Some(v.trim().parse::<u64>().map_err(|_| err(format!("bad characteristic {v:?}")))?);
            } else if let Some(v) = line.strip_prefix("row ") {
                let (label, body) = v.split_once(':').ok_or_else(|| err("row needs `label:`".into()))?;
                let mut map = BTreeMap::new();
                for tok in body.split_whitespace() {
                    let (p, yn) = tok.split_once('=').ok_or_else(|| err(format!("bad entry {tok:?}")))?;
                    let p: Prime = p.parse().map_err(|_| err(format!("bad prime {p:?}")))?;
                    let yes = match yn.to_ascii_lowercase().as_str() {
                        "yes" | "y" => true,
                        "no" | "n" => false,
                        other => return Err(err(format!("expected yes/no, got {other:?}"))),
                    };
                    if map.insert(p, yes).is_some() {
                        return Err(err(format!("prime {p} listed twice")));
                    }
                }
                rows.push(FixedPointRow { label: label.trim().to_string(), has_fixed_points: map });
            } else {
                return Err(err(format!("unrecognized line {line:?}")));
            }
        }
        let table = FixedPointTable {
            target: target.ok_or_else(|| Error::Parse { line: 0, msg: "missing target:".into() })?,
            characteristic: characteristic
                .ok_or_else(|| Error::Parse { line: 0, msg: "missing characteristic:".into() })?,
            rows,
        };
        table.validate().map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
        Ok(table)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "target: {}", self.target).unwrap();
        writeln!(s, "characteristic: {}", self.characteristic).unwrap();
        for r in &self.rows {
            write!(s, "row {}:", r.label).unwrap();
            for (p, y) in &r.has_fixed_points {
                write!(s, " {p}={}", if *y { "yes" } else { "no" }).unwrap();
            }
            s.push('\n');
        }
        s
    }
}

/// Every table shipped with the crate, as (file name, contents).
pub const BUILTIN_TABLES: &[(&str, &str)] = &[
    ("psl2_16_p0.tbl", include_str!("../../tables/psl2_16_p0.tbl")),
    ("psl2_16_p2.tbl", include_str!("../../tables/psl2_16_p2.tbl")),
    ("psl2_16_p3.tbl", include_str!("../../tables/psl2_16_p3.tbl")),
    ("psl2_16_p5.tbl", include_str!("../../tables/psl2_16_p5.tbl")),
    ("psl2_16_p17.tbl", include_str!("../../tables/psl2_16_p17.tbl")),
    ("psl2_27_p0.tbl", include_str!("../../tables/psl2_27_p0.tbl")),
    ("sl2_27_p0.tbl", include_str!("../../tables/sl2_27_p0.tbl")),
    ("psl2_49_p0.tbl", include_str!("../../tables/psl2_49_p0.tbl")),
    ("sl2_49_p0.tbl", include_str!("../../tables/sl2_49_p0.tbl")),
    ("psl2_11_p0.tbl", include_str!("../../tables/psl2_11_p0.tbl")),
    ("sl2_11_p0.tbl", include_str!("../../tables/sl2_11_p0.tbl")),
    ("psl2_11_p2.tbl", include_str!("../../tables/psl2_11_p2.tbl")),
    ("psl2_11_p3.tbl", include_str!("../../tables/psl2_11_p3.tbl")),
    ("psl2_11_p5.tbl", include_str!("../../tables/psl2_11_p5.tbl")),
    ("psl2_11_p11.tbl", include_str!("../../tables/psl2_11_p11.tbl")),
    ("psl2_19_p0.tbl", include_str!("../../tables/psl2_19_p0.tbl")),
    ("sl2_19_p0.tbl", include_str!("../../tables/sl2_19_p0.tbl")),
    ("psl2_19_p2.tbl", include_str!("../../tables/psl2_19_p2.tbl")),
    ("psl2_19_p3.tbl", include_str!("../../tables/psl2_19_p3.tbl")),
    ("psl2_19_p5.tbl", include_str!("../../tables/psl2_19_p5.tbl")),
    ("psl2_19_p19.tbl", include_str!("../../tables/psl2_19_p19.tbl")),
    ("psl2_23_p0.tbl", include_str!("../../tables/psl2_23_p0.tbl")),
    ("sl2_23_p0.tbl", include_str!("../../tables/sl2_23_p0.tbl")),
    ("psl2_23_p2.tbl", include_str!("../../tables/psl2_23_p2.tbl")),
    ("psl2_23_p3.tbl", include_str!("../../tables/psl2_23_p3.tbl")),
    ("psl2_23_p11.tbl", include_str!("../../tables/psl2_23_p11.tbl")),
    ("psl2_23_p23.tbl", include_str!("../../tables/psl2_23_p23.tbl")),
    ("psl2_25_p0.tbl", include_str!("../../tables/psl2_25_p0.tbl")),
    ("sl2_25_p0.tbl", include_str!("../../tables/sl2_25_p0.tbl")),
    ("psl2_81_p0.tbl", include_str!("../../tables/psl2_81_p0.tbl")),
    ("sl2_81_p0.tbl", include_str!("../../tables/sl2_81_p0.tbl")),
    ("psl2_81_p2.tbl", include_str!("../../tables/psl2_81_p2.tbl")),
];

/// All shipped tables, parsed.
pub fn builtin_tables() -> Vec<FixedPointTable> {
    BUILTIN_TABLES
        .iter()
        .map(|(name, text)| {
            FixedPointTable::parse(text).unwrap_or_else(|e| panic!("shipped table {name} is malformed: {e}"))
        })
        .collect()
}

/// The shipped table for `target` in `characteristic` (0 = ordinary).
pub fn lookup(target: &GroupSpec, characteristic: u64) -> Result<FixedPointTable> {
    builtin_tables()
        .into_iter()
        .find(|t| &t.target == target && t.characteristic == characteristic)
        .ok_or_else(|| Error::MissingTable(format!("{target}, characteristic {characteristic}")))
}
