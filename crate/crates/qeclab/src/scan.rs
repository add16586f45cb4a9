//! Theta-graph scan: predicted, conjectured and numeric class side by side.

use std::io::{Read, Write};

use qeclab_core::classify::{theta_predict, ThetaVerdict};
use qeclab_core::quintuple::find;
use qeclab_core::{qec_numeric, DistanceMatrix, FamilySpec, QeClass, QuintupleKind};
use rayon::prelude::*;

use crate::numfmt::fmt_sig;
use crate::report::parse_class;
use crate::CliError;

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub alpha: usize,
    pub beta: usize,
    pub gamma: usize,
    pub n: usize,
    pub verdict: ThetaVerdict,
    pub conjectured: QeClass,
    pub qec: f64,
    pub numeric_class: QeClass,
    pub standard_quintuple: bool,
    pub modified_quintuple: bool,
    /// `None` for the open region.
    pub verdict_agrees: Option<bool>,
    pub conjecture_agrees: bool,
}

impl ScanRow {
    /// Rows the caller should report loudly.
    pub fn is_finding(&self) -> bool {
        !self.conjecture_agrees || self.verdict_agrees == Some(false)
    }
}

/// Sorted `α ≤ β ≤ γ` with `α + β + γ ≤ max_sum`, in lexicographic order.
/// `Θ(1,1,γ)` has a double edge and is skipped.
pub fn triples(max_sum: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=max_sum / 3 {
        for b in a..=(max_sum - a) / 2 {
            for c in b..=max_sum - a - b {
                if !(a == 1 && b == 1) {
                    out.push((a, b, c));
                }
            }
        }
    }
    out
}

fn verdict_text(v: ThetaVerdict) -> &'static str {
    match v {
        ThetaVerdict::Qe => "QE",
        ThetaVerdict::NonQe => "nonQE",
        ThetaVerdict::Unknown => "unknown",
    }
}

fn parse_verdict(s: &str) -> Option<ThetaVerdict> {
    match s {
        "QE" => Some(ThetaVerdict::Qe),
        "nonQE" => Some(ThetaVerdict::NonQe),
        "unknown" => Some(ThetaVerdict::Unknown),
        _ => None,
    }
}

pub fn scan_one(a: usize, b: usize, c: usize, tol: f64, class_tol: f64) -> Result<ScanRow, CliError> {
    let g = FamilySpec::Theta(a, b, c).generate()?;
    let d = DistanceMatrix::from_graph(&g)?;
    let qec = qec_numeric(&d, tol)?.value;
    let numeric_class = QeClass::from_qec(qec, class_tol);
    let p = theta_predict(a, b, c)?;
    let verdict_agrees = match p.verdict {
        ThetaVerdict::Qe => Some(numeric_class == QeClass::Qe),
        ThetaVerdict::NonQe => Some(numeric_class == QeClass::NonQe),
        ThetaVerdict::Unknown => None,
    };
    Ok(ScanRow {
        alpha: a,
        beta: b,
        gamma: c,
        n: g.n(),
        verdict: p.verdict,
        conjectured: p.conjectured,
        qec,
        numeric_class,
        standard_quintuple: find(&g, &d, QuintupleKind::Standard)?.is_some(),
        modified_quintuple: find(&g, &d, QuintupleKind::Modified)?.is_some(),
        verdict_agrees,
        conjecture_agrees: p.conjectured == numeric_class,
    })
}

/// Runs in parallel; rows come back in [`triples`] order.
pub fn scan(max_sum: usize, tol: f64, class_tol: f64) -> Result<Vec<ScanRow>, CliError> {
    triples(max_sum).into_par_iter().map(|(a, b, c)| scan_one(a, b, c, tol, class_tol)).collect()
}

pub const SCAN_HEADER: [&str; 12] = [
    "alpha",
    "beta",
    "gamma",
    "n",
    "verdict",
    "conjectured",
    "qec",
    "numeric_class",
    "standard_quintuple",
    "modified_quintuple",
    "verdict_agrees",
    "conjecture_agrees",
];

pub fn write_scan_csv<W: Write>(rows: &[ScanRow], w: W) -> Result<(), csv::Error> {
    let mut out = csv::Writer::from_writer(w);
    out.write_record(SCAN_HEADER)?;
    for r in rows {
        out.write_record([
            r.alpha.to_string(),
            r.beta.to_string(),
            r.gamma.to_string(),
            r.n.to_string(),
            verdict_text(r.verdict).into(),
            r.conjectured.to_string(),
            fmt_sig(r.qec),
            r.numeric_class.to_string(),
            r.standard_quintuple.to_string(),
            r.modified_quintuple.to_string(),
            r.verdict_agrees.map(|b| b.to_string()).unwrap_or_default(),
            r.conjecture_agrees.to_string(),
        ])?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_scan_csv<R: Read>(r: R) -> Result<Vec<ScanRow>, csv::Error> {
    let bad =
        |what: &str| csv::Error::from(std::io::Error::new(std::io::ErrorKind::InvalidData, format!("bad {what}")));
    csv::Reader::from_reader(r)
        .records()
        .map(|rec| {
            let rec = rec?;
            let s = |i: usize| rec.get(i).ok_or_else(|| bad(SCAN_HEADER[i]));
            let u = |i: usize| s(i)?.parse::<usize>().map_err(|_| bad(SCAN_HEADER[i]));
            let b = |i: usize| s(i)?.parse::<bool>().map_err(|_| bad(SCAN_HEADER[i]));
            let class = |i: usize| parse_class(s(i)?).ok_or_else(|| bad(SCAN_HEADER[i]));
            Ok(ScanRow {
                alpha: u(0)?,
                beta: u(1)?,
                gamma: u(2)?,
                n: u(3)?,
                verdict: parse_verdict(s(4)?).ok_or_else(|| bad("verdict"))?,
                conjectured: class(5)?,
                qec: s(6)?.parse().map_err(|_| bad("qec"))?,
                numeric_class: class(7)?,
                standard_quintuple: b(8)?,
                modified_quintuple: b(9)?,
                verdict_agrees: if s(10)?.is_empty() { None } else { Some(b(10)?) },
                conjecture_agrees: b(11)?,
            })
        })
        .collect()
}
