//! Reference tables: subgraphs of `K_{3,3}` (`t33`), the three 7-vertex graphs
//! related by single edge removals (`t1`) and theta graphs on 7 to 10
//! vertices (`t3`).

use std::io::{Read, Write};

use clap::ValueEnum;
use qeclab_core::closed_form::{qec_almost_complete_bipartite, qec_complete_bipartite, qec_path};
use qeclab_core::{qec_numeric, DistanceMatrix, FamilySpec, Graph, QeClass};
use serde::Serialize;

use crate::numfmt::fmt_sig;
use crate::report::parse_class;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TableId {
    T33,
    T1,
    T3,
}

impl TableId {
    pub fn name(self) -> &'static str {
        match self {
            TableId::T33 => "t33",
            TableId::T1 => "t1",
            TableId::T3 => "t3",
        }
    }
}

const EXACT: f64 = 1e-8;
const APPROX: f64 = 5e-4;
const ZERO_NUMERIC: f64 = 1e-6;

pub struct TableEntry {
    pub label: String,
    pub descriptor: String,
    pub graph: Graph,
    pub expected: f64,
    pub tolerance: f64,
    pub closed_form: Option<f64>,
}

/// `K_{3,3}` subgraph on top `1, 2, 3` and bottom `4, 5, 6` (ids shifted by one).
fn k33_sub(edges: &[(usize, usize)]) -> Graph {
    Graph::new(6, edges.iter().map(|&(u, v)| (u - 1, v - 1))).expect("table graph")
}

fn seven(edges: &[(usize, usize)]) -> Graph {
    Graph::new(7, edges.iter().map(|&(u, v)| (u - 1, v - 1))).expect("table graph")
}

fn edge_text(g: &Graph) -> String {
    g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect::<Vec<_>>().join(" ")
}

pub fn entries(id: TableId) -> Vec<TableEntry> {
    let sqrt = f64::sqrt;
    let entry = |label: &str, graph: Graph, expected: f64, tolerance: f64, closed_form: Option<f64>| TableEntry {
        label: label.into(),
        descriptor: edge_text(&graph),
        graph,
        expected,
        tolerance,
        closed_form,
    };
    match id {
        TableId::T33 => {
            let acb = |t| qec_almost_complete_bipartite(t, 3, 3, 1e-14).ok();
            vec![
                entry(
                    "73",
                    k33_sub(&[(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (1, 6), (2, 6), (3, 6)]),
                    1.0,
                    EXACT,
                    qec_complete_bipartite(3, 3).ok(),
                ),
                entry(
                    "55",
                    k33_sub(&[(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (3, 5), (1, 6), (2, 6)]),
                    (sqrt(17.0) - 3.0) / 2.0,
                    EXACT,
                    acb(1),
                ),
                entry("36", k33_sub(&[(1, 4), (1, 5), (2, 4), (2, 5), (3, 4), (1, 6), (2, 6)]), 0.408, APPROX, None),
                entry("35", k33_sub(&[(1, 4), (1, 5), (2, 4), (3, 4), (3, 5), (1, 6), (2, 6)]), 0.0, EXACT, acb(2)),
                entry("19", k33_sub(&[(1, 5), (2, 4), (3, 4), (3, 5), (1, 6), (2, 6)]), 0.0, EXACT, acb(3)),
                entry("18", k33_sub(&[(1, 4), (1, 5), (2, 4), (3, 4), (1, 6), (2, 6)]), 0.0, EXACT, None),
                entry("15", k33_sub(&[(1, 4), (1, 5), (2, 4), (3, 5), (1, 6), (2, 6)]), 0.0, EXACT, None),
                entry(
                    "6",
                    k33_sub(&[(1, 5), (2, 4), (3, 5), (1, 6), (2, 6)]),
                    2.0 * sqrt(3.0) - 4.0,
                    EXACT,
                    qec_path(6).ok(),
                ),
                entry("5", k33_sub(&[(1, 4), (1, 5), (3, 4), (1, 6), (2, 6)]), -0.4648, APPROX, None),
                entry("3", k33_sub(&[(1, 4), (1, 5), (2, 4), (3, 4), (1, 6)]), -0.4385, APPROX, None),
            ]
        }
        TableId::T1 => vec![
            entry(
                "left",
                seven(&[(1, 5), (1, 6), (1, 7), (2, 6), (2, 7), (3, 5), (3, 7), (4, 5), (4, 6)]),
                0.0,
                EXACT,
                None,
            ),
            entry(
                "middle",
                seven(&[(1, 5), (1, 6), (1, 7), (2, 5), (2, 7), (3, 5), (3, 6), (4, 5), (4, 6)]),
                0.5149,
                APPROX,
                None,
            ),
            entry(
                "right",
                seven(&[(1, 6), (1, 7), (2, 5), (2, 7), (3, 5), (3, 6), (4, 5), (4, 6)]),
                0.5529,
                APPROX,
                None,
            ),
        ],
        TableId::T3 => [
            (2, 3, 3, 0.0, ZERO_NUMERIC),
            (1, 4, 4, -0.1569, APPROX),
            (1, 4, 5, 0.0, ZERO_NUMERIC),
            (2, 3, 5, 0.0, ZERO_NUMERIC),
            (1, 4, 6, -0.1240, APPROX),
            (1, 5, 5, 0.0, ZERO_NUMERIC),
        ]
        .into_iter()
        .map(|(a, b, c, expected, tolerance)| {
            let spec = FamilySpec::Theta(a, b, c);
            TableEntry {
                label: format!("({a},{b},{c})"),
                descriptor: spec.to_string(),
                graph: spec.generate().expect("theta"),
                expected,
                tolerance,
                closed_form: None,
            }
        })
        .collect(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TableRow {
    pub table: String,
    pub label: String,
    pub descriptor: String,
    pub n: usize,
    pub edges: usize,
    pub qec_numeric: f64,
    pub qec_closed_form: Option<f64>,
    pub expected: f64,
    pub tolerance: f64,
    pub class: QeClass,
    /// Numeric value within tolerance of the reference value, and of the closed form if any.
    pub matches: bool,
}

pub const TABLE_HEADER: [&str; 11] = [
    "table",
    "label",
    "descriptor",
    "n",
    "edges",
    "qec_numeric",
    "qec_closed_form",
    "expected",
    "tolerance",
    "class",
    "match",
];

pub fn compute(id: TableId, tol: f64, class_tol: f64) -> Result<Vec<TableRow>, CliError> {
    entries(id)
        .into_iter()
        .map(|e| {
            let d = DistanceMatrix::from_graph(&e.graph)?;
            let value = qec_numeric(&d, tol)?.value;
            let matches = (value - e.expected).abs() <= e.tolerance
                && e.closed_form.is_none_or(|c| (c - value).abs() <= e.tolerance);
            Ok(TableRow {
                table: id.name().into(),
                label: e.label,
                descriptor: e.descriptor,
                n: e.graph.n(),
                edges: e.graph.edge_count(),
                qec_numeric: value,
                qec_closed_form: e.closed_form,
                expected: e.expected,
                tolerance: e.tolerance,
                class: QeClass::from_qec(value, class_tol),
                matches,
            })
        })
        .collect()
}

pub fn write_table_csv<W: Write>(rows: &[TableRow], w: W) -> Result<(), csv::Error> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(TABLE_HEADER)?;
    for r in rows {
        out.write_record([
            r.table.clone(),
            r.label.clone(),
            r.descriptor.clone(),
            r.n.to_string(),
            r.edges.to_string(),
            fmt_sig(r.qec_numeric),
            r.qec_closed_form.map(fmt_sig).unwrap_or_default(),
            fmt_sig(r.expected),
            fmt_sig(r.tolerance),
            r.class.to_string(),
            r.matches.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_table_csv<R: Read>(r: R) -> Result<Vec<TableRow>, csv::Error> {
    let bad =
        |what: &str| csv::Error::from(std::io::Error::new(std::io::ErrorKind::InvalidData, format!("bad {what}")));
    csv::Reader::from_reader(r)
        .records()
        .map(|rec| {
            let rec = rec?;
            let s = |i: usize| rec.get(i).ok_or_else(|| bad(TABLE_HEADER[i]));
            let f = |i: usize| s(i)?.parse::<f64>().map_err(|_| bad(TABLE_HEADER[i]));
            let u = |i: usize| s(i)?.parse::<usize>().map_err(|_| bad(TABLE_HEADER[i]));
            Ok(TableRow {
                table: s(0)?.into(),
                label: s(1)?.into(),
                descriptor: s(2)?.into(),
                n: u(3)?,
                edges: u(4)?,
                qec_numeric: f(5)?,
                qec_closed_form: if s(6)?.is_empty() { None } else { Some(f(6)?) },
                expected: f(7)?,
                tolerance: f(8)?,
                class: parse_class(s(9)?).ok_or_else(|| bad("class"))?,
                matches: s(10)?.parse().map_err(|_| bad("match"))?,
            })
        })
        .collect()
}
