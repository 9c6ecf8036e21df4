//! Serialization of golden rows and sweep output to JSON, CSV and TeX.
//!
//! The CSV schema for golden rows mirrors the golden files exactly, so an
//! exported table re-parses to the same rows. Candidate CSV is the flat
//! invariant tuple with a fixed header; candidate JSON carries every field
//! plus the filter trail, with keys in lexicographic order.

use crate::catalog::{
    candidate_tuple, golden_tuples, BEntry, GoldenRow, RowData, Structural, TableId,
};
use crate::config::SweepConfig;
use crate::rat::fmt_q;
use crate::sweep::{CandidateCase, Family};
use serde_json::json;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Csv,
    Tex,
}

impl ExportFormat {
    pub fn parse(s: &str) -> Option<ExportFormat> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Some(ExportFormat::Json),
            "csv" => Some(ExportFormat::Csv),
            "tex" => Some(ExportFormat::Tex),
            _ => None,
        }
    }
}

#[derive(Debug, Error)]
pub enum ExportError {
    #[error("csv write error: {0}")]
    Csv(#[from] csv::Error),
    #[error("csv buffer error: {0}")]
    Buffer(String),
}

fn csv_to_string(writer: csv::Writer<Vec<u8>>) -> Result<String, ExportError> {
    let bytes = writer.into_inner().map_err(|e| ExportError::Buffer(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| ExportError::Buffer(e.to_string()))
}

// ---------------------------------------------------------------------------
// golden rows
// ---------------------------------------------------------------------------

/// Exports golden rows of one table; the CSV output mirrors the golden file
/// schema field for field.
pub fn export_golden(
    rows: &[GoldenRow],
    table: TableId,
    format: ExportFormat,
    cfg: &SweepConfig,
) -> Result<String, ExportError> {
    match format {
        ExportFormat::Csv => golden_csv(rows, table),
        ExportFormat::Json => Ok(golden_json(rows, table)),
        ExportFormat::Tex => Ok(golden_tex(rows, table, cfg)),
    }
}

fn b_fields(b: &BEntry) -> (String, String) {
    match b {
        BEntry::Curve { deg, genus } => (fmt_q(*deg), fmt_q(*genus)),
        BEntry::Point => ("-".into(), "-".into()),
    }
}

fn golden_csv(rows: &[GoldenRow], table: TableId) -> Result<String, ExportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    match table {
        TableId::A1 => w.write_record(["g", "model"])?,
        TableId::A2 => w.write_record([
            "no", "k3", "kf2", "model", "db", "gb", "alpha", "beta", "half", "open",
        ])?,
        TableId::A3 => w.write_record([
            "no", "k3", "d", "c1", "c2", "model", "db", "gb", "alpha", "beta", "half",
        ])?,
        TableId::A4 => {
            w.write_record(["no", "k3", "y", "dc", "gc", "model", "db", "gb", "alpha", "beta"])?
        }
        TableId::A5 => {
            w.write_record(["no", "k3", "y", "case", "model", "db", "gb", "alpha", "beta"])?
        }
    }
    for row in rows.iter().filter(|r| r.table == table) {
        match &row.data {
            RowData::Mukai { g, model } => w.write_record([g.to_string(), model.clone()])?,
            RowData::DivpointFamily { model } => w.write_record([
                row.no.to_string(),
                "r(r-r')^2*H3".into(),
                "V_{r,d}".into(),
                "r*r'*H3".into(),
                "(2+r*r'^2*H3)/2".into(),
                model.clone(),
                "-".into(),
                "-".into(),
                "r'".into(),
                "1".into(),
            ])?,
            RowData::Fixed(f) => {
                let (db, gb) = b_fields(&f.b);
                let half = f.half.map(|k| k.to_string()).unwrap_or_default();
                match &f.structural {
                    Structural::DelPezzo { kf2 } => w.write_record([
                        row.no.to_string(),
                        f.k3.to_string(),
                        kf2.to_string(),
                        f.model.clone(),
                        db,
                        gb,
                        fmt_q(f.alpha),
                        fmt_q(f.beta),
                        half,
                        if f.open_existence { "open".into() } else { String::new() },
                    ])?,
                    Structural::Conic { d, c1, c2 } => w.write_record([
                        row.no.to_string(),
                        f.k3.to_string(),
                        d.to_string(),
                        c1.to_string(),
                        c2.to_string(),
                        f.model.clone(),
                        db,
                        gb,
                        fmt_q(f.alpha),
                        fmt_q(f.beta),
                        half,
                    ])?,
                    Structural::BlowupCurve { r, h3, d, g_c } => w.write_record([
                        row.no.to_string(),
                        f.k3.to_string(),
                        crate::catalog::y_label(*r, *h3),
                        d.to_string(),
                        g_c.to_string(),
                        f.model.clone(),
                        db,
                        gb,
                        fmt_q(f.alpha),
                        fmt_q(f.beta),
                    ])?,
                    Structural::BlowupPoint { r, h3, case } => w.write_record([
                        row.no.to_string(),
                        f.k3.to_string(),
                        crate::catalog::y_label(*r, *h3),
                        case.label().to_string(),
                        f.model.clone(),
                        db,
                        gb,
                        fmt_q(f.alpha),
                        fmt_q(f.beta),
                    ])?,
                }
            }
        }
    }
    csv_to_string(w)
}

fn golden_json(rows: &[GoldenRow], table: TableId) -> String {
    let items: Vec<serde_json::Value> = rows
        .iter()
        .filter(|r| r.table == table)
        .map(|row| match &row.data {
            RowData::Mukai { g, model } => json!({ "g": g, "model": model }),
            RowData::DivpointFamily { model } => json!({
                "no": row.no,
                "parametric": true,
                "model": model,
            }),
            RowData::Fixed(f) => {
                let (db, gb) = b_fields(&f.b);
                let mut v = json!({
                    "no": row.no,
                    "k3": f.k3,
                    "model": f.model,
                    "dB": db,
                    "gB": gb,
                    "alpha": fmt_q(f.alpha),
                    "beta": fmt_q(f.beta),
                    "half_anticanonical": f.half,
                    "open_existence": f.open_existence,
                });
                let obj = v.as_object_mut().unwrap();
                match &f.structural {
                    Structural::DelPezzo { kf2 } => {
                        obj.insert("kf2".into(), json!(kf2));
                    }
                    Structural::Conic { d, c1, c2 } => {
                        obj.insert("d".into(), json!(d));
                        obj.insert("c1".into(), json!(c1));
                        obj.insert("c2".into(), json!(c2));
                    }
                    Structural::BlowupCurve { r, h3, d, g_c } => {
                        obj.insert("y".into(), json!(crate::catalog::y_label(*r, *h3)));
                        obj.insert("dC".into(), json!(d));
                        obj.insert("gC".into(), json!(g_c));
                    }
                    Structural::BlowupPoint { r, h3, case } => {
                        obj.insert("y".into(), json!(crate::catalog::y_label(*r, *h3)));
                        obj.insert("case".into(), json!(case.label()));
                    }
                }
                v
            }
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "table": table.label(), "rows": items })).unwrap()
}

fn tex_escape(s: &str) -> String {
    s.replace('&', "\\&").replace('_', "\\_")
}

fn golden_tex(rows: &[GoldenRow], table: TableId, _cfg: &SweepConfig) -> String {
    let (header, spec): (&str, &str) = match table {
        TableId::A1 => ("$g$ & Anticanonical model", "l|p{11.5cm}|"),
        TableId::A2 => (
            "No. & $({-}K_X)^3$ & $K_F^2$ & $X'$ & $d_B/g_B$ & $(\\alpha, \\beta)$",
            "c||c||c||p{6cm}|c||c|",
        ),
        TableId::A3 => (
            "No. & $({-}K_X)^3$ & $d$ & $(c_1,c_2)$ & $X'$ & $d_B/g_B$ & $(\\alpha, \\beta)$",
            "c||c||c|c||p{5cm}|c||c|",
        ),
        TableId::A4 => (
            "No. & $({-}K_X)^3$ & $Y$ & $d/g_C$ & $X'$ & $d/g_B$ & $(\\alpha, \\beta)$",
            "c||c||c|p{1.1cm}||p{4.6cm}|c||c|",
        ),
        TableId::A5 => (
            "No. & $({-}K_X)^3$ & $Y$ & $(E, -E|_E)$ & $X'$ & $d/g_B$ & $(\\alpha, \\beta)$",
            "c||c||c|c||p{5cm}|c||c|",
        ),
    };
    let mut lines = Vec::new();
    lines.push(format!("\\begin{{tabular}}{{{spec}}}"));
    lines.push(format!("  {header}\\\\\\hline"));
    for row in rows.iter().filter(|r| r.table == table) {
        let cells: Vec<String> = match &row.data {
            RowData::Mukai { g, model } => vec![format!("${g}$"), tex_escape(model)],
            RowData::DivpointFamily { model } => vec![
                row.no.to_string(),
                "$r(r{-}r')^2H^3$".into(),
                "$V_{r,d}$".into(),
                "$rr'H^3/\\frac{2+rr'^2H^3}{2}$".into(),
                tex_escape(model),
                "--".into(),
                "$(r', 1)$".into(),
            ],
            RowData::Fixed(f) => {
                let b = match &f.b {
                    BEntry::Curve { deg, genus } => format!("${}/{}$", fmt_q(*deg), fmt_q(*genus)),
                    BEntry::Point => "--".into(),
                };
                let ab = format!("$({}, {})$", fmt_q(f.alpha), fmt_q(f.beta));
                let model = match f.half {
                    Some(k) => format!("{} \\hfill $({k})$", tex_escape(&f.model)),
                    None => tex_escape(&f.model),
                };
                let model = if f.open_existence { format!("{model} \\hfill $(?)$") } else { model };
                match &f.structural {
                    Structural::DelPezzo { kf2 } => vec![
                        row.no.to_string(),
                        format!("${}$", f.k3),
                        format!("${kf2}$"),
                        model,
                        b,
                        ab,
                    ],
                    Structural::Conic { d, c1, c2 } => vec![
                        row.no.to_string(),
                        format!("${}$", f.k3),
                        format!("${d}$"),
                        format!("$({c1},{c2})$"),
                        model,
                        b,
                        ab,
                    ],
                    Structural::BlowupCurve { r, h3, d, g_c } => vec![
                        row.no.to_string(),
                        format!("${}$", f.k3),
                        format!("${}$", tex_escape(&crate::catalog::y_label(*r, *h3))),
                        format!("${d}/{g_c}$"),
                        model,
                        b,
                        ab,
                    ],
                    Structural::BlowupPoint { r, h3, case } => vec![
                        row.no.to_string(),
                        format!("${}$", f.k3),
                        format!("${}$", tex_escape(&crate::catalog::y_label(*r, *h3))),
                        format!("$({})$", case.label().replace('_', ", ")),
                        model,
                        b,
                        ab,
                    ],
                }
            }
        };
        lines.push(format!("  {}\\\\", cells.join(" & ")));
    }
    lines.push("\\hline".into());
    lines.push("\\end{tabular}".into());
    lines.join("\n") + "\n"
}

// ---------------------------------------------------------------------------
// candidates
// ---------------------------------------------------------------------------

/// Exports surviving candidates of one family.
pub fn export_candidates(
    candidates: &[CandidateCase],
    family: Family,
    format: ExportFormat,
) -> Result<String, ExportError> {
    match format {
        ExportFormat::Csv => candidates_csv(candidates, family),
        ExportFormat::Json => Ok(candidates_json(candidates, family)),
        ExportFormat::Tex => Ok(candidates_tex(candidates, family)),
    }
}

fn tuple_header(family: Family) -> &'static [&'static str] {
    match family {
        Family::DelPezzo => &["k3", "kf2", "dB", "gB", "alpha", "beta", "half", "open"],
        Family::Conic => &["k3", "d", "c1", "c2", "dB", "gB", "alpha", "beta", "half"],
        Family::BlowupCurve => &["k3", "r", "h3", "dC", "gC", "dB", "gB", "alpha", "beta"],
        Family::BlowupPoint => &["k3", "r", "h3", "case", "dB", "gB", "alpha", "beta"],
    }
}

fn candidates_csv(candidates: &[CandidateCase], family: Family) -> Result<String, ExportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(tuple_header(family))?;
    for c in candidates.iter().filter(|c| c.verdict.is_surviving()) {
        if let Some(t) = candidate_tuple(c) {
            w.write_record(t.fields.iter().map(|(_, v)| v.as_str()))?;
        }
    }
    csv_to_string(w)
}

fn candidates_json(candidates: &[CandidateCase], family: Family) -> String {
    let items: Vec<serde_json::Value> = candidates
        .iter()
        .filter(|c| c.family == family)
        .map(|c| {
            let derived = c.derived.map(|d| {
                let (db, gb) = match d.b {
                    crate::invariants::BLocus::Curve { deg, genus } => {
                        (fmt_q(deg), fmt_q(genus))
                    }
                    crate::invariants::BLocus::Point => ("-".into(), "-".into()),
                };
                json!({
                    "k3": fmt_q(d.k3),
                    "epsilon": fmt_q(d.epsilon),
                    "kd2": fmt_q(d.kd2),
                    "d3": fmt_q(d.d3),
                    "dB": db,
                    "gB": gb,
                    "gX": fmt_q(d.gx),
                })
            });
            let trail: Vec<serde_json::Value> = c
                .trail
                .iter()
                .map(|s| json!({ "filter": s.filter, "detail": s.detail, "pass": s.pass }))
                .collect();
            json!({
                "id": c.id(),
                "family": c.family.code(),
                "verdict": c.verdict.label(),
                "derived": derived,
                "half_anticanonical": c.flags.half_anticanonical,
                "open_existence": c.flags.open_existence,
                "trail": trail,
            })
        })
        .collect();
    serde_json::to_string_pretty(&json!({ "family": family.code(), "cases": items })).unwrap()
}

fn candidates_tex(candidates: &[CandidateCase], family: Family) -> String {
    let header = tuple_header(family);
    let mut lines = Vec::new();
    lines.push(format!("\\begin{{tabular}}{{{}}}", "c|".repeat(header.len())));
    lines.push(format!("  {}\\\\\\hline", header.join(" & ")));
    for c in candidates.iter().filter(|c| c.verdict.is_surviving()) {
        if let Some(t) = candidate_tuple(c) {
            let cells: Vec<String> =
                t.fields.iter().map(|(_, v)| format!("${}$", tex_escape(v))).collect();
            lines.push(format!("  {}\\\\", cells.join(" & ")));
        }
    }
    lines.push("\\end{tabular}".into());
    lines.join("\n") + "\n"
}

/// Golden tuples rendered as CSV (used by the verify machinery for display).
pub fn golden_tuples_csv(
    rows: &[GoldenRow],
    table: TableId,
    cfg: &SweepConfig,
) -> Result<String, ExportError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let mut first = true;
    for (_, t) in golden_tuples(rows, table, cfg) {
        if first {
            w.write_record(t.fields.iter().map(|(k, _)| k.as_str()))?;
            first = false;
        }
        w.write_record(t.fields.iter().map(|(_, v)| v.as_str()))?;
    }
    csv_to_string(w)
}
