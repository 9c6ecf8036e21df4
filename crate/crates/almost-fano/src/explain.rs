//! Derivation-chain printer: given a table-row identifier, re-runs the
//! family sweep, locates the matching candidate, and renders every formula
//! evaluation and filter verdict along its trail.

use crate::catalog::{
    candidate_tuple, golden_tuples, mukai_model, GoldenRow, RowData, TableId,
};
use crate::config::SweepConfig;
use crate::invariants::BLocus;
use crate::rat::fmt_q;
use crate::sweep::{enumerate, ledger::Ledger, CandidateCase};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ExplainError {
    #[error("bad case identifier {0:?}; expected <table>-<row>, e.g. A4-5")]
    BadId(String),
    #[error("no golden row {0}")]
    NoSuchRow(String),
    #[error("no sweep candidate matches golden row {0}")]
    NoMatch(String),
}

/// Renders the derivation of the golden row named `case_id` (e.g. "A4-5").
pub fn explain(
    case_id: &str,
    golden: &[GoldenRow],
    cfg: &SweepConfig,
    ledger: &Ledger,
) -> Result<String, ExplainError> {
    let (table_str, no_str) = case_id
        .split_once('-')
        .ok_or_else(|| ExplainError::BadId(case_id.to_string()))?;
    let table =
        TableId::parse(table_str).ok_or_else(|| ExplainError::BadId(case_id.to_string()))?;
    let no: u32 = no_str.parse().map_err(|_| ExplainError::BadId(case_id.to_string()))?;

    if table == TableId::A1 {
        let model = mukai_model(golden, no as i64)
            .ok_or_else(|| ExplainError::NoSuchRow(case_id.to_string()))?;
        return Ok(format!("case A1 (g = {no})\n  anticanonical model: {model}\n"));
    }

    let row = golden
        .iter()
        .find(|r| r.table == table && r.no == no)
        .ok_or_else(|| ExplainError::NoSuchRow(case_id.to_string()))?;
    let family = table.family().expect("numeric table");
    let candidates = enumerate(family, cfg, ledger);

    let mut out = String::new();
    match &row.data {
        RowData::Fixed(fixed) => {
            let want = crate::catalog::golden_tuple(fixed);
            let matched = candidates
                .iter()
                .filter(|c| c.verdict.is_surviving())
                .find(|c| candidate_tuple(c).as_ref() == Some(&want))
                .ok_or_else(|| ExplainError::NoMatch(case_id.to_string()))?;
            render_candidate(&mut out, case_id, matched, Some(&fixed.model), golden);
        }
        RowData::DivpointFamily { model } => {
            // expand the parametric row over the configured grid
            let instances = golden_tuples(std::slice::from_ref(row), table, cfg);
            out.push_str(&format!("case {case_id}: parametric family, {} instances\n", instances.len()));
            for (name, t) in instances {
                let matched = candidates
                    .iter()
                    .filter(|c| c.verdict.is_surviving())
                    .find(|c| candidate_tuple(c).as_ref() == Some(&t))
                    .ok_or_else(|| ExplainError::NoMatch(name.clone()))?;
                render_candidate(&mut out, &name, matched, Some(model), golden);
                out.push('\n');
            }
        }
        RowData::Mukai { .. } => unreachable!("handled above"),
    }
    Ok(out)
}

fn render_candidate(
    out: &mut String,
    case_id: &str,
    c: &CandidateCase,
    model: Option<&str>,
    golden: &[GoldenRow],
) {
    out.push_str(&format!("case {case_id} ({})\n", c.family.code()));
    out.push_str(&format!("  parameters: {}\n", c.id()));
    out.push_str(&format!("  verdict: {}\n", c.verdict.label()));
    if let Some(d) = &c.derived {
        out.push_str(&format!(
            "  invariants: (-K_X)^3 = {}, K.D^2 = {}, D^3 = {}, g(X) = {}\n",
            fmt_q(d.k3),
            fmt_q(d.kd2),
            fmt_q(d.d3),
            fmt_q(d.gx)
        ));
        match d.b {
            BLocus::Curve { deg, genus } => out.push_str(&format!(
                "  image curve B: degree {}, genus {}\n",
                fmt_q(deg),
                fmt_q(genus)
            )),
            BLocus::Point => out.push_str("  D is contracted to a point\n"),
        }
        // Mukai-range rows display the genus-keyed model metadata
        if d.k3 >= crate::rat::qi(10) && model.map(|m| m.contains("(M)")).unwrap_or(false) {
            if let Some(meta) =
                d.gx.is_integer().then(|| mukai_model(golden, d.gx.to_integer())).flatten()
            {
                out.push_str(&format!("  genus-{} model: {meta}\n", fmt_q(d.gx)));
            }
        }
    }
    if let Some(k) = c.flags.half_anticanonical {
        out.push_str(&format!("  anticanonical model is the image of |-(1/{k})K_X|\n"));
    }
    if c.flags.open_existence {
        out.push_str("  existence of this case is open\n");
    }
    if let Some(m) = model {
        out.push_str(&format!("  anticanonical model: {m}\n"));
    }
    out.push_str("  trail:\n");
    for step in &c.trail {
        out.push_str(&format!(
            "    [{}] {:<24} {}\n",
            if step.pass { "pass" } else { "FAIL" },
            step.filter,
            step.detail
        ));
    }
}
