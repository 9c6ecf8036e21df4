//! Golden encodings of the appendix tables, the loader, and the diff engine
//! comparing sweep output against golden rows on exact invariant tuples.

use crate::config::SweepConfig;
use crate::invariants::{divpoint_row, BLocus};
use crate::lattice::PointCase;
use crate::rat::{fmt_q, parse_q, Q};
use crate::sweep::{CandidateCase, Family, FamilyParams};
use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("io error reading {file}: {source}")]
    Io { file: String, source: std::io::Error },
    #[error("{file}:{line}: {msg}")]
    Parse { file: String, line: u64, msg: String },
    #[error("row {table}-{no}: {msg}")]
    Invariant { table: TableId, no: u32, msg: String },
}

/// The five appendix tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TableId {
    A1,
    A2,
    A3,
    A4,
    A5,
}

impl TableId {
    pub fn label(&self) -> &'static str {
        match self {
            TableId::A1 => "A1",
            TableId::A2 => "A2",
            TableId::A3 => "A3",
            TableId::A4 => "A4",
            TableId::A5 => "A5",
        }
    }

    pub fn parse(s: &str) -> Option<TableId> {
        match s.to_ascii_uppercase().as_str() {
            "A1" => Some(TableId::A1),
            "A2" => Some(TableId::A2),
            "A3" => Some(TableId::A3),
            "A4" => Some(TableId::A4),
            "A5" => Some(TableId::A5),
            _ => None,
        }
    }

    pub fn file_name(&self) -> &'static str {
        match self {
            TableId::A1 => "mukai.csv",
            TableId::A2 => "del_pezzo.csv",
            TableId::A3 => "conic.csv",
            TableId::A4 => "blowup_curve.csv",
            TableId::A5 => "blowup_point.csv",
        }
    }

    pub fn family(&self) -> Option<Family> {
        match self {
            TableId::A1 => None,
            TableId::A2 => Some(Family::DelPezzo),
            TableId::A3 => Some(Family::Conic),
            TableId::A4 => Some(Family::BlowupCurve),
            TableId::A5 => Some(Family::BlowupPoint),
        }
    }

    pub fn of_family(family: Family) -> TableId {
        match family {
            Family::DelPezzo => TableId::A2,
            Family::Conic => TableId::A3,
            Family::BlowupCurve => TableId::A4,
            Family::BlowupPoint => TableId::A5,
        }
    }
}

impl fmt::Display for TableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Degree/genus of B, or a point image.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BEntry {
    Curve { deg: Q, genus: Q },
    Point,
}

impl BEntry {
    fn from_locus(b: BLocus) -> BEntry {
        match b {
            BLocus::Curve { deg, genus } => BEntry::Curve { deg, genus },
            BLocus::Point => BEntry::Point,
        }
    }

    fn deg_str(&self) -> String {
        match self {
            BEntry::Curve { deg, .. } => fmt_q(*deg),
            BEntry::Point => "-".into(),
        }
    }

    fn genus_str(&self) -> String {
        match self {
            BEntry::Curve { genus, .. } => fmt_q(*genus),
            BEntry::Point => "-".into(),
        }
    }
}

/// Table-specific structural data of a fixed golden row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Structural {
    DelPezzo { kf2: i64 },
    Conic { d: i64, c1: i64, c2: i64 },
    BlowupCurve { r: i64, h3: i64, d: i64, g_c: i64 },
    BlowupPoint { r: i64, h3: i64, case: PointCase },
}

/// A fully numeric golden row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedRow {
    pub k3: i64,
    pub structural: Structural,
    pub model: String,
    pub b: BEntry,
    pub alpha: Q,
    pub beta: Q,
    pub open_existence: bool,
    pub half: Option<i64>,
}

/// Payload of one golden row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowData {
    /// A row of the genus-keyed metadata table.
    Mukai { g: i64, model: String },
    Fixed(FixedRow),
    /// The parametric D-to-point family row, expanded at diff time.
    DivpointFamily { model: String },
}

/// One row of an appendix table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub table: TableId,
    pub no: u32,
    pub data: RowData,
}

// ---------------------------------------------------------------------------
// index/degree label handling
// ---------------------------------------------------------------------------

/// Renders the target label from (index, degree).
pub fn y_label(r: i64, h3: i64) -> String {
    match (r, h3) {
        (3, 2) => "Q_3".into(),
        (4, 1) => "P_3".into(),
        _ => format!("V_{{{r},{h3}}}"),
    }
}

/// Parses a target label back to (index, degree).
pub fn parse_y_label(s: &str) -> Result<(i64, i64), String> {
    match s {
        "Q_3" => Ok((3, 2)),
        "P_3" => Ok((4, 1)),
        _ => {
            let inner = s
                .strip_prefix("V_{")
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| format!("bad target label {s:?}"))?;
            let (r, d) = inner.split_once(',').ok_or_else(|| format!("bad target label {s:?}"))?;
            let r = r.trim().parse().map_err(|_| format!("bad index in {s:?}"))?;
            let d = d.trim().parse().map_err(|_| format!("bad degree in {s:?}"))?;
            Ok((r, d))
        }
    }
}

// ---------------------------------------------------------------------------
// loading
// ---------------------------------------------------------------------------

/// Loads all five golden tables from a directory.
pub fn load_golden(dir: &Path) -> Result<Vec<GoldenRow>, CatalogError> {
    let mut rows = Vec::new();
    for table in [TableId::A1, TableId::A2, TableId::A3, TableId::A4, TableId::A5] {
        rows.extend(load_table(&dir.join(table.file_name()), table)?);
    }
    Ok(rows)
}

/// Loads one golden table; empty files yield empty lists.
pub fn load_table(path: &Path, table: TableId) -> Result<Vec<GoldenRow>, CatalogError> {
    let file = path.display().to_string();
    let text = std::fs::read_to_string(path)
        .map_err(|source| CatalogError::Io { file: file.clone(), source })?;
    parse_table(&text, table, &file)
}

/// Parses golden CSV text.
pub fn parse_table(text: &str, table: TableId, file: &str) -> Result<Vec<GoldenRow>, CatalogError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(false)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for result in reader.records() {
        let record = result.map_err(|e| CatalogError::Parse {
            file: file.to_string(),
            line: e.position().map(|p| p.line()).unwrap_or(0),
            msg: e.to_string(),
        })?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        let row = parse_record(&record, table)
            .map_err(|msg| CatalogError::Parse { file: file.to_string(), line, msg })?;
        if let RowData::Fixed(fixed) = &row.data {
            if fixed.k3 <= 0 || fixed.k3 % 2 != 0 {
                return Err(CatalogError::Invariant {
                    table,
                    no: row.no,
                    msg: format!("anticanonical cube {} must be a positive even integer", fixed.k3),
                });
            }
        }
        rows.push(row);
    }
    Ok(rows)
}

fn parse_record(record: &csv::StringRecord, table: TableId) -> Result<GoldenRow, String> {
    let field = |i: usize| -> Result<&str, String> {
        record.get(i).map(str::trim).ok_or_else(|| format!("missing field {i}"))
    };
    let int = |i: usize| -> Result<i64, String> {
        field(i)?.parse().map_err(|_| format!("field {i} ({:?}) not an integer", field(i).unwrap()))
    };
    let rat = |i: usize| -> Result<Q, String> { parse_q(field(i)?) };
    let b_entry = |di: usize, gi: usize| -> Result<BEntry, String> {
        if field(di)? == "-" {
            Ok(BEntry::Point)
        } else {
            Ok(BEntry::Curve { deg: rat(di)?, genus: rat(gi)? })
        }
    };
    let half = |i: usize| -> Result<Option<i64>, String> {
        let v = field(i)?;
        if v.is_empty() {
            Ok(None)
        } else {
            v.parse().map(Some).map_err(|_| format!("bad half flag {v:?}"))
        }
    };

    match table {
        TableId::A1 => Ok(GoldenRow {
            table,
            // keyed by genus, not a running number
            no: int(0)? as u32,
            data: RowData::Mukai { g: int(0)?, model: field(1)?.to_string() },
        }),
        TableId::A2 => Ok(GoldenRow {
            table,
            no: int(0)? as u32,
            data: RowData::Fixed(FixedRow {
                k3: int(1)?,
                structural: Structural::DelPezzo { kf2: int(2)? },
                model: field(3)?.to_string(),
                b: b_entry(4, 5)?,
                alpha: rat(6)?,
                beta: rat(7)?,
                half: half(8)?,
                open_existence: field(9)? == "open",
            }),
        }),
        TableId::A3 => Ok(GoldenRow {
            table,
            no: int(0)? as u32,
            data: RowData::Fixed(FixedRow {
                k3: int(1)?,
                structural: Structural::Conic { d: int(2)?, c1: int(3)?, c2: int(4)? },
                model: field(5)?.to_string(),
                b: b_entry(6, 7)?,
                alpha: rat(8)?,
                beta: rat(9)?,
                half: half(10)?,
                open_existence: false,
            }),
        }),
        TableId::A4 => {
            let no = int(0)? as u32;
            if field(1)?.parse::<i64>().is_err() {
                // the parametric family row carries formulas, not numbers
                return Ok(GoldenRow {
                    table,
                    no,
                    data: RowData::DivpointFamily { model: field(5)?.to_string() },
                });
            }
            let (r, h3) = parse_y_label(field(2)?)?;
            Ok(GoldenRow {
                table,
                no,
                data: RowData::Fixed(FixedRow {
                    k3: int(1)?,
                    structural: Structural::BlowupCurve { r, h3, d: int(3)?, g_c: int(4)? },
                    model: field(5)?.to_string(),
                    b: b_entry(6, 7)?,
                    alpha: rat(8)?,
                    beta: rat(9)?,
                    half: None,
                    open_existence: false,
                }),
            })
        }
        TableId::A5 => {
            let (r, h3) = parse_y_label(field(2)?)?;
            let case = match field(3)? {
                "P2_O1" => PointCase::P2O1,
                "P2_O2" => PointCase::P2O2,
                "QUADRIC" => PointCase::Quadric,
                other => return Err(format!("unknown point case {other:?}")),
            };
            Ok(GoldenRow {
                table,
                no: int(0)? as u32,
                data: RowData::Fixed(FixedRow {
                    k3: int(1)?,
                    structural: Structural::BlowupPoint { r, h3, case },
                    model: field(4)?.to_string(),
                    b: b_entry(5, 6)?,
                    alpha: rat(7)?,
                    beta: rat(8)?,
                    half: None,
                    open_existence: false,
                }),
            })
        }
    }
}

// ---------------------------------------------------------------------------
// invariant tuples and diff
// ---------------------------------------------------------------------------

/// Canonical comparable rendering of a row's invariant data.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InvariantTuple {
    pub fields: Vec<(String, String)>,
}

impl fmt::Display for InvariantTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> =
            self.fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
        f.write_str(&rendered.join(" "))
    }
}

fn tuple(fields: Vec<(&str, String)>) -> InvariantTuple {
    InvariantTuple { fields: fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect() }
}

/// Tuple of a fixed golden row.
pub fn golden_tuple(row: &FixedRow) -> InvariantTuple {
    let common = |mut head: Vec<(&'static str, String)>, row: &FixedRow| {
        head.push(("dB", row.b.deg_str()));
        head.push(("gB", row.b.genus_str()));
        head.push(("alpha", fmt_q(row.alpha)));
        head.push(("beta", fmt_q(row.beta)));
        head
    };
    match &row.structural {
        Structural::DelPezzo { kf2 } => {
            let mut fields =
                common(vec![("k3", row.k3.to_string()), ("kf2", kf2.to_string())], row);
            fields.push(("half", row.half.map(|k| k.to_string()).unwrap_or_else(|| "-".into())));
            fields.push(("open", if row.open_existence { "yes" } else { "no" }.into()));
            tuple(fields)
        }
        Structural::Conic { d, c1, c2 } => {
            let mut fields = common(
                vec![
                    ("k3", row.k3.to_string()),
                    ("d", d.to_string()),
                    ("c1", c1.to_string()),
                    ("c2", c2.to_string()),
                ],
                row,
            );
            fields.push(("half", row.half.map(|k| k.to_string()).unwrap_or_else(|| "-".into())));
            tuple(fields)
        }
        Structural::BlowupCurve { r, h3, d, g_c } => tuple(common(
            vec![
                ("k3", row.k3.to_string()),
                ("r", r.to_string()),
                ("h3", h3.to_string()),
                ("dC", d.to_string()),
                ("gC", g_c.to_string()),
            ],
            row,
        )),
        Structural::BlowupPoint { r, h3, case } => tuple(common(
            vec![
                ("k3", row.k3.to_string()),
                ("r", r.to_string()),
                ("h3", h3.to_string()),
                ("case", case.label().to_string()),
            ],
            row,
        )),
    }
}

/// Tuple of a surviving candidate; `None` when the candidate carries no
/// derived invariants (possible only in ledger-off runs).
pub fn candidate_tuple(c: &CandidateCase) -> Option<InvariantTuple> {
    let derived = c.derived.as_ref()?;
    let b = BEntry::from_locus(derived.b);
    let k3 = fmt_q(derived.k3);
    let half = c.flags.half_anticanonical.map(|k| k.to_string()).unwrap_or_else(|| "-".into());
    match &c.params {
        FamilyParams::DelPezzo(p) => Some(tuple(vec![
            ("k3", k3),
            ("kf2", p.kf2.to_string()),
            ("dB", b.deg_str()),
            ("gB", b.genus_str()),
            ("alpha", fmt_q(p.alpha)),
            ("beta", fmt_q(p.beta)),
            ("half", half),
            ("open", if c.flags.open_existence { "yes" } else { "no" }.into()),
        ])),
        FamilyParams::Conic(p) => Some(tuple(vec![
            ("k3", k3),
            ("d", p.d.to_string()),
            ("c1", p.c1?.to_string()),
            ("c2", p.c2?.to_string()),
            ("dB", b.deg_str()),
            ("gB", b.genus_str()),
            ("alpha", fmt_q(p.alpha)),
            ("beta", fmt_q(p.beta)),
            ("half", half),
        ])),
        FamilyParams::BlowupCurve(p) => Some(tuple(vec![
            ("k3", k3),
            ("r", p.r.to_string()),
            ("h3", p.h3.to_string()),
            ("dC", p.d.to_string()),
            ("gC", p.g_c?.to_string()),
            ("dB", b.deg_str()),
            ("gB", b.genus_str()),
            ("alpha", p.alpha.to_string()),
            ("beta", p.beta.to_string()),
        ])),
        FamilyParams::BlowupPoint(p) => Some(tuple(vec![
            ("k3", k3),
            ("r", p.r.to_string()),
            ("h3", p.h3.to_string()),
            ("case", p.case.label().to_string()),
            ("dB", b.deg_str()),
            ("gB", b.genus_str()),
            ("alpha", fmt_q(p.alpha)),
            ("beta", fmt_q(p.beta?)),
        ])),
    }
}

/// Golden tuples of one table, with the parametric family row expanded over
/// the configured index/degree grid.
pub fn golden_tuples(
    rows: &[GoldenRow],
    table: TableId,
    cfg: &SweepConfig,
) -> Vec<(String, InvariantTuple)> {
    let mut out = Vec::new();
    for row in rows.iter().filter(|r| r.table == table) {
        match &row.data {
            RowData::Fixed(fixed) => {
                out.push((format!("{}-{}", table.label(), row.no), golden_tuple(fixed)))
            }
            RowData::DivpointFamily { .. } => {
                for (&r, degrees) in &cfg.fano_degrees {
                    if r < 2 {
                        continue;
                    }
                    for &h3 in degrees {
                        for rprime in 1..r {
                            let data = divpoint_row(r, rprime, h3).expect("valid divpoint data");
                            out.push((
                                format!("{}-{} (r={r}, r'={rprime}, H^3={h3})", table.label(), row.no),
                                tuple(vec![
                                    ("k3", data.k3.to_string()),
                                    ("r", r.to_string()),
                                    ("h3", h3.to_string()),
                                    ("dC", data.d.to_string()),
                                    ("gC", data.g_c.to_string()),
                                    ("dB", "-".into()),
                                    ("gB", "-".into()),
                                    ("alpha", rprime.to_string()),
                                    ("beta", "1".into()),
                                ]),
                            ));
                        }
                    }
                }
            }
            RowData::Mukai { .. } => {}
        }
    }
    out
}

/// Per-table comparison of sweep output against golden rows.
#[derive(Debug, Clone, Default)]
pub struct DiffReport {
    pub matched: Vec<(String, String)>,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
    pub field_mismatches: Vec<String>,
    pub warnings: Vec<String>,
}

impl DiffReport {
    pub fn is_clean(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty() && self.field_mismatches.is_empty()
    }
}

/// Symmetric multiset difference of tuples: returns (only in a, only in b).
pub fn diff_tuples(
    a: &[InvariantTuple],
    b: &[InvariantTuple],
) -> (Vec<InvariantTuple>, Vec<InvariantTuple>) {
    let mut counts: BTreeMap<&InvariantTuple, i64> = BTreeMap::new();
    for t in a {
        *counts.entry(t).or_insert(0) += 1;
    }
    for t in b {
        *counts.entry(t).or_insert(0) -= 1;
    }
    let mut only_a = Vec::new();
    let mut only_b = Vec::new();
    for (t, n) in counts {
        for _ in 0..n.max(0) {
            only_a.push(t.clone());
        }
        for _ in 0..(-n).max(0) {
            only_b.push(t.clone());
        }
    }
    (only_a, only_b)
}

/// Diffs the surviving candidates of one family against the golden rows of
/// the matching table. Matching is exact on the invariant tuple; model text
/// is metadata and never fails a diff.
pub fn diff(
    candidates: &[CandidateCase],
    golden: &[GoldenRow],
    family: Family,
    cfg: &SweepConfig,
) -> DiffReport {
    let table = TableId::of_family(family);
    let golden_list = golden_tuples(golden, table, cfg);

    let mut cand_list: Vec<(String, InvariantTuple)> = Vec::new();
    for c in candidates.iter().filter(|c| c.verdict.is_surviving()) {
        match candidate_tuple(c) {
            Some(t) => cand_list.push((c.id(), t)),
            None => cand_list.push((c.id(), tuple(vec![("underived", c.id())]))),
        }
    }

    let (only_golden, only_cand) = diff_tuples(
        &golden_list.iter().map(|(_, t)| t.clone()).collect::<Vec<_>>(),
        &cand_list.iter().map(|(_, t)| t.clone()).collect::<Vec<_>>(),
    );

    let mut report = DiffReport::default();
    let names_of = |tuples: &[InvariantTuple], list: &[(String, InvariantTuple)]| -> Vec<String> {
        let mut used = vec![false; list.len()];
        tuples
            .iter()
            .map(|t| {
                for (i, (name, lt)) in list.iter().enumerate() {
                    if !used[i] && lt == t {
                        used[i] = true;
                        return format!("{name}: {t}");
                    }
                }
                t.to_string()
            })
            .collect()
    };
    report.missing = names_of(&only_golden, &golden_list);
    report.extra = names_of(&only_cand, &cand_list);

    // describe near-misses at field level
    for g in &only_golden {
        for c in &only_cand {
            let anchor = |t: &InvariantTuple, keys: &[&str]| {
                t.fields
                    .iter()
                    .filter(|(k, _)| keys.contains(&k.as_str()))
                    .cloned()
                    .collect::<Vec<_>>()
            };
            let keys = ["k3", "alpha", "beta", "case", "r", "h3"];
            if anchor(g, &keys) == anchor(c, &keys) {
                let diffs: Vec<String> = g
                    .fields
                    .iter()
                    .zip(&c.fields)
                    .filter(|((gk, gv), (ck, cv))| gk == ck && gv != cv)
                    .map(|((k, gv), (_, cv))| format!("{k}: golden {gv} vs produced {cv}"))
                    .collect();
                if !diffs.is_empty() {
                    report.field_mismatches.push(diffs.join(", "));
                }
            }
        }
    }

    let mut missing_pool = only_golden.clone();
    report.matched = golden_list
        .iter()
        .filter_map(|(name, t)| {
            if let Some(pos) = missing_pool.iter().position(|m| m == t) {
                missing_pool.remove(pos);
                None
            } else {
                Some((name.clone(), t.to_string()))
            }
        })
        .collect();
    report
}

/// Mukai metadata: model description keyed by the genus of X.
pub fn mukai_model(rows: &[GoldenRow], g: i64) -> Option<&str> {
    rows.iter().find_map(|row| match &row.data {
        RowData::Mukai { g: rg, model } if *rg == g => Some(model.as_str()),
        _ => None,
    })
}
