//! Single-graph reports: the JSON document, aligned text and CSV rows.

use std::io::{Read, Write};
use std::time::Duration;

use qeclab_core::classify::PrimaryStatus;
use qeclab_core::closed_form::{qec_almost_complete_bipartite, qec_complete_bipartite, qec_path};
use qeclab_core::{ClassificationReport, FamilySpec, QeClass, Quintuple};
use serde::{Deserialize, Serialize};

use crate::numfmt::fmt_sig;

/// Closed-form QE constant for families that have one.
pub fn closed_form_for(spec: &FamilySpec, tol: f64) -> Option<f64> {
    match *spec {
        FamilySpec::Path(n) => qec_path(n).ok(),
        FamilySpec::CompleteBipartite(m, n) => qec_complete_bipartite(m.min(n), m.max(n)).ok(),
        FamilySpec::AlmostCompleteBipartite { t, m, n } => qec_almost_complete_bipartite(t, m, n, tol).ok(),
        FamilySpec::Crown(m) => qec_almost_complete_bipartite(m, m, m, tol).ok(),
        _ => None,
    }
}

/// `Some(agrees)` when a closed form is present.
pub fn agreement(numeric: f64, closed: Option<f64>, tol: f64) -> Option<bool> {
    closed.map(|c| (c - numeric).abs() <= tol)
}

/// Output of `analyze --format json`; shape fixed by `schema/report.schema.json`.
#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeDocument<'a> {
    pub descriptor: &'a str,
    pub report: &'a ClassificationReport,
    pub qec_closed_form: Option<f64>,
    pub closed_form_agrees: Option<bool>,
    pub consistent: bool,
    pub seconds: f64,
}

/// One flat summary line per analyzed graph.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub descriptor: String,
    pub n: usize,
    pub edges: usize,
    pub qec_numeric: f64,
    pub qec_closed_form: Option<f64>,
    pub class: QeClass,
    pub tanaka: Option<String>,
    pub modified_tanaka: Option<String>,
    pub primary: String,
    /// Closed form disagrees with the numeric value, or a consistency flag failed.
    pub flagged: bool,
    pub seconds: f64,
}

pub const REPORT_HEADER: [&str; 11] = [
    "descriptor",
    "n",
    "edges",
    "qec_numeric",
    "qec_closed_form",
    "class",
    "tanaka",
    "modified_tanaka",
    "primary",
    "flagged",
    "seconds",
];

fn quintuple_text(q: &Option<Quintuple>) -> Option<String> {
    q.map(|q| q.v.iter().map(usize::to_string).collect::<Vec<_>>().join(" "))
}

fn primary_label(p: &PrimaryStatus) -> String {
    match p {
        PrimaryStatus::Primary => "primary".into(),
        PrimaryStatus::NonPrimary { .. } => "non-primary".into(),
        PrimaryStatus::NotApplicable => "not-applicable".into(),
        PrimaryStatus::Skipped { .. } => "skipped".into(),
    }
}

impl ReportRow {
    pub fn new(
        descriptor: &str,
        report: &ClassificationReport,
        closed: Option<f64>,
        tol: f64,
        elapsed: Duration,
    ) -> Self {
        let agrees = agreement(report.qec.value, closed, tol).unwrap_or(true);
        ReportRow {
            descriptor: descriptor.into(),
            n: report.n,
            edges: report.edges,
            qec_numeric: report.qec.value,
            qec_closed_form: closed,
            class: report.qe_class,
            tanaka: quintuple_text(&report.tanaka),
            modified_tanaka: quintuple_text(&report.modified_tanaka),
            primary: primary_label(&report.primary_status),
            flagged: !agrees || !report.consistent(),
            seconds: elapsed.as_secs_f64(),
        }
    }

    fn record(&self) -> Vec<String> {
        vec![
            self.descriptor.clone(),
            self.n.to_string(),
            self.edges.to_string(),
            fmt_sig(self.qec_numeric),
            self.qec_closed_form.map(fmt_sig).unwrap_or_default(),
            self.class.to_string(),
            self.tanaka.clone().unwrap_or_default(),
            self.modified_tanaka.clone().unwrap_or_default(),
            self.primary.clone(),
            self.flagged.to_string(),
            fmt_sig(self.seconds),
        ]
    }

    fn from_record(r: &csv::StringRecord) -> Result<Self, csv::Error> {
        let bad =
            |what: &str| csv::Error::from(std::io::Error::new(std::io::ErrorKind::InvalidData, format!("bad {what}")));
        let get = |i: usize| r.get(i).ok_or_else(|| bad(REPORT_HEADER[i]));
        let opt = |s: &str| (!s.is_empty()).then(|| s.to_string());
        let float = |i: usize| get(i)?.parse::<f64>().map_err(|_| bad(REPORT_HEADER[i]));
        Ok(ReportRow {
            descriptor: get(0)?.into(),
            n: get(1)?.parse().map_err(|_| bad("n"))?,
            edges: get(2)?.parse().map_err(|_| bad("edges"))?,
            qec_numeric: float(3)?,
            qec_closed_form: match get(4)? {
                "" => None,
                s => Some(s.parse().map_err(|_| bad("qec_closed_form"))?),
            },
            class: parse_class(get(5)?).ok_or_else(|| bad("class"))?,
            tanaka: opt(get(6)?),
            modified_tanaka: opt(get(7)?),
            primary: get(8)?.into(),
            flagged: get(9)?.parse().map_err(|_| bad("flagged"))?,
            seconds: float(10)?,
        })
    }
}

pub fn parse_class(s: &str) -> Option<QeClass> {
    match s {
        "QE" => Some(QeClass::Qe),
        "nonQE" => Some(QeClass::NonQe),
        _ => None,
    }
}

pub fn write_report_csv<W: Write>(rows: &[ReportRow], w: W) -> Result<(), csv::Error> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(REPORT_HEADER)?;
    for row in rows {
        out.write_record(row.record())?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_report_csv<R: Read>(r: R) -> Result<Vec<ReportRow>, csv::Error> {
    csv::Reader::from_reader(r).records().map(|rec| ReportRow::from_record(&rec?)).collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Aligned `key  value` lines for the terminal.
pub fn render_text(doc: &AnalyzeDocument<'_>) -> String {
    let r = doc.report;
    let quint = |q: &Option<Quintuple>| match q {
        Some(q) => format!("{:?}  (r={}, j={}, h={})", q.v, q.cert.r, q.cert.j, q.cert.h),
        None => "none".into(),
    };
    let failed: Vec<&str> = r.consistency_flags.iter().filter(|f| !f.passed).map(|f| f.name.as_str()).collect();
    let mut lines: Vec<(&str, String)> = vec![
        ("graph", doc.descriptor.into()),
        ("vertices", r.n.to_string()),
        ("edges", r.edges.to_string()),
        ("bipartite", yes_no(r.bipartite).into()),
        ("qec", fmt_sig(r.qec.value)),
        ("class", r.qe_class.to_string()),
    ];
    if let Some(c) = doc.qec_closed_form {
        let agree = if doc.closed_form_agrees == Some(true) { "agrees" } else { "DISAGREES" };
        lines.push(("closed form", format!("{}  ({agree})", fmt_sig(c))));
    }
    lines.extend([
        ("tanaka quintuple", quint(&r.tanaka)),
        ("modified quintuple", quint(&r.modified_tanaka)),
        ("djokovic", yes_no(r.djokovic_embeddable).into()),
        (
            "pi scan",
            format!(
                "{} points, {} not PSD, worst q={} (min eigenvalue {})",
                r.pi_scan.points,
                r.pi_scan.failing,
                fmt_sig(r.pi_scan.worst_q),
                fmt_sig(r.pi_scan.worst_min_eigenvalue)
            ),
        ),
        ("primary", r.primary_status.to_string()),
        ("consistency", if failed.is_empty() { "ok".into() } else { format!("FAILED: {}", failed.join(", ")) }),
        ("time", format!("{}s", fmt_sig(doc.seconds))),
    ]);
    let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    lines.iter().map(|(k, v)| format!("{k:<width$}  {v}\n")).collect()
}
