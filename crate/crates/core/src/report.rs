//! Text, CSV and JSON emitters for count tables.
//!
//! Integers are always written as exact decimals (never floats) since the
//! counts leave the 64-bit range quickly. JSON is written by hand so those
//! integers stay bare numbers.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::One;

use crate::graphs::{classify, GraphClass};
use crate::model::{MoveGraph, Peg, PAIRS};
use crate::recurrence::{
    closed_form_chord, closed_form_cycle, closed_form_linear, conjecture_values, eval_move_counts,
    ConjectureValues, RecurrenceError,
};

/// Outcome of checking one table row against the class's closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormFlag {
    Match,
    Mismatch,
    /// The graph class has no closed form (five-edge class).
    NotAvailable,
}

impl ClosedFormFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            ClosedFormFlag::Match => "match",
            ClosedFormFlag::Mismatch => "mismatch",
            ClosedFormFlag::NotAvailable => "n/a",
        }
    }
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub n: usize,
    /// In the order of [`PAIRS`].
    pub counts: [BigUint; 6],
    pub closed_form: ClosedFormFlag,
}

#[derive(Debug, Clone)]
pub struct TableReport {
    pub graph: MoveGraph,
    pub class: Option<GraphClass>,
    pub rows: Vec<TableRow>,
}

pub const TABLE_CSV_HEADER: &str = "n,N12,N21,N13,N31,N23,N32";
const COLUMN_NAMES: [&str; 6] = ["N12", "N21", "N13", "N31", "N23", "N32"];

/// Closed-form value for pair `(from, to)` of the canonical member of
/// `class`. `None` for the five-edge class, or when a formula fails to be
/// a non-negative integer.
pub fn canonical_closed_form(class: GraphClass, from: Peg, to: Peg, n: usize) -> Option<BigUint> {
    let n32 = n as u32;
    match class {
        GraphClass::Complete => Some((BigUint::one() << n) - BigUint::one()),
        GraphClass::Linear => closed_form_linear(from, to, n32).ok(),
        GraphClass::Cycle => closed_form_cycle(from, to, n32)
            .ok()?
            .to_integer()?
            .to_biguint(),
        GraphClass::Chord => closed_form_chord(from, to, n32)
            .ok()?
            .to_integer()?
            .to_biguint(),
        GraphClass::FiveEdge => None,
    }
}

/// Closed-form value for any labelled member of a class, by relabelling the
/// pair back onto the canonical member.
pub fn closed_form_for(graph: MoveGraph, from: Peg, to: Peg, n: usize) -> Option<BigUint> {
    let (class, perm) = classify(graph)?;
    let back = |p: Peg| Peg::from_index(perm.iter().position(|&q| q == p).expect("permutation"));
    canonical_closed_form(class, back(from), back(to), n)
}

pub fn table_report(graph: MoveGraph, n_max: usize) -> Result<TableReport, RecurrenceError> {
    let table = eval_move_counts(graph, n_max)?;
    let class = classify(graph).map(|(c, _)| c);
    let rows = (0..=n_max)
        .map(|n| {
            let counts = table.row(n).clone();
            let closed_form = match class {
                Some(GraphClass::FiveEdge) | None => ClosedFormFlag::NotAvailable,
                Some(_) => {
                    let all = PAIRS.iter().zip(&counts).all(|(&(from, to), value)| {
                        closed_form_for(graph, from, to, n).as_ref() == Some(value)
                    });
                    if all {
                        ClosedFormFlag::Match
                    } else {
                        ClosedFormFlag::Mismatch
                    }
                }
            };
            TableRow {
                n,
                counts,
                closed_form,
            }
        })
        .collect();
    Ok(TableReport { graph, class, rows })
}

impl TableReport {
    pub fn closed_forms_ok(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.closed_form != ClosedFormFlag::Mismatch)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(TABLE_CSV_HEADER);
        out.push('\n');
        for row in &self.rows {
            let _ = write!(out, "{}", row.n);
            for v in &row.counts {
                let _ = write!(out, ",{v}");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_plain(&self) -> String {
        let class = self
            .class
            .map_or("unclassified".to_string(), |c| c.to_string());
        let mut out = format!("graph {} ({class})\n", self.graph);
        let width = self
            .rows
            .iter()
            .flat_map(|r| r.counts.iter())
            .map(|v| v.to_string().len())
            .max()
            .unwrap_or(1)
            .max(3);
        let _ = write!(out, "{:>4}", "n");
        for name in COLUMN_NAMES {
            let _ = write!(out, " {name:>width$}");
        }
        out.push_str("  closed-form\n");
        for row in &self.rows {
            let _ = write!(out, "{:>4}", row.n);
            for v in &row.counts {
                let _ = write!(out, " {:>width$}", v.to_string());
            }
            let _ = writeln!(out, "  {}", row.closed_form.as_str());
        }
        out
    }

    pub fn to_json(&self) -> String {
        let class = self
            .class
            .map_or("null".to_string(), |c| format!("\"{c}\""));
        let mut out = format!(
            "{{\"graph\":\"{}\",\"class\":{class},\"rows\":[",
            self.graph
        );
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{{\"n\":{}", row.n);
            for (name, v) in COLUMN_NAMES.iter().zip(&row.counts) {
                let _ = write!(out, ",\"{name}\":{v}");
            }
            let _ = write!(out, ",\"closed_form\":\"{}\"}}", row.closed_form.as_str());
        }
        out.push_str("]}");
        out
    }
}

pub const AB_CSV_HEADER: &str = "n,a,b";

/// `a_n`, `b_n` table for a placement distance.
pub fn ab_table(n_max: usize, distance: u32) -> Result<ConjectureValues, RecurrenceError> {
    conjecture_values(n_max, distance)
}

pub fn ab_to_csv(values: &ConjectureValues) -> String {
    let mut out = String::from(AB_CSV_HEADER);
    out.push('\n');
    for (n, (a, b)) in values.a.iter().zip(&values.b).enumerate() {
        let _ = writeln!(out, "{n},{a},{b}");
    }
    out
}

pub fn ab_to_json(values: &ConjectureValues) -> String {
    let mut out = format!("{{\"distance\":{},\"rows\":[", values.distance);
    for (n, (a, b)) in values.a.iter().zip(&values.b).enumerate() {
        if n > 0 {
            out.push(',');
        }
        let _ = write!(out, "{{\"n\":{n},\"a\":{a},\"b\":{b}}}");
    }
    out.push_str("]}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_table_row_three() {
        let report = table_report(MoveGraph::linear(), 3).unwrap();
        let csv = report.to_csv();
        assert_eq!(csv.lines().next(), Some(TABLE_CSV_HEADER));
        // N12 N21 N13 N31 N23 N32 at n=3
        assert_eq!(csv.lines().nth(4), Some("3,13,13,13,13,26,26"));
        assert!(report.closed_forms_ok());
        assert!(report
            .rows
            .iter()
            .all(|r| r.closed_form == ClosedFormFlag::Match));
    }

    #[test]
    fn json_keeps_big_integers_exact() {
        let report = table_report(MoveGraph::complete(), 70).unwrap();
        let json = report.to_json();
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed["rows"].as_array().unwrap().len(), 71);
        assert!(json.contains("\"N12\":1180591620717411303423"));
    }

    #[test]
    fn relabelled_members_use_the_class_formula() {
        for g in crate::graphs::strongly_connected_graphs() {
            let report = table_report(g, 12).unwrap();
            assert!(report.closed_forms_ok(), "graph {g}");
        }
    }

    #[test]
    fn five_edge_has_no_closed_form() {
        let report = table_report(MoveGraph::five_edge(), 3).unwrap();
        assert!(report
            .rows
            .iter()
            .all(|r| r.closed_form == ClosedFormFlag::NotAvailable));
    }

    #[test]
    fn ab_csv() {
        let v = ab_table(4, 1).unwrap();
        assert_eq!(ab_to_csv(&v), "n,a,b\n0,0,0\n1,1,1\n2,3,2\n3,5,4\n4,9,6\n");
        let parsed: serde_json::Value = serde_json::from_str(&ab_to_json(&v)).unwrap();
        assert_eq!(parsed["rows"][4]["a"], 9);
    }
}
