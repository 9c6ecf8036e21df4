//! The geometric-exclusion ledger.
//!
//! Some case eliminations rest on geometric arguments (very-ampleness,
//! normal bundles, covers, plane curves) that an arithmetic engine cannot
//! rederive. Those eliminations are recorded as ledger entries: an id, a
//! parameter matcher, the source anchor with a verbatim quote, and a
//! one-line summary. Sweeps consult the ledger at the point where the case
//! analysis invokes the argument; audit runs disable it and check that every
//! extra survivor is matched by an entry.

use super::{Family, FamilyParams};
use crate::rat::{parse_q, Q};
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LedgerError {
    #[error("io error reading ledger: {0}")]
    Io(#[from] std::io::Error),
    #[error("ledger parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Conjunction of `field in {values}` clauses over a candidate's parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matcher {
    clauses: Vec<(String, Vec<Q>)>,
}

impl Matcher {
    /// Parses `key=v`, `key=v1|v2`, clauses separated by commas.
    pub fn parse(s: &str) -> Result<Matcher, String> {
        let mut clauses = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let (key, vals) =
                part.split_once('=').ok_or_else(|| format!("clause {part:?} lacks '='"))?;
            let values = vals
                .split('|')
                .map(parse_q)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| format!("clause {part:?}: {e}"))?;
            clauses.push((key.trim().to_string(), values));
        }
        if clauses.is_empty() {
            return Err("empty matcher".into());
        }
        Ok(Matcher { clauses })
    }

    pub fn matches(&self, params: &FamilyParams) -> bool {
        self.clauses.iter().all(|(key, values)| {
            params.field(key).map(|v| values.contains(&v)).unwrap_or(false)
        })
    }

    pub fn render(&self) -> String {
        self.clauses
            .iter()
            .map(|(k, vs)| {
                let vals =
                    vs.iter().map(|v| crate::rat::fmt_q(*v)).collect::<Vec<_>>().join("|");
                format!("{k}={vals}")
            })
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// One recorded geometric elimination.
#[derive(Debug, Clone)]
pub struct LedgerEntry {
    pub id: String,
    pub family: Family,
    pub matcher: Matcher,
    pub anchor: String,
    pub summary: String,
}

/// The full ledger, ordered as in the data file.
#[derive(Debug, Clone, Default)]
pub struct Ledger {
    entries: Vec<LedgerEntry>,
}

impl Ledger {
    pub fn empty() -> Ledger {
        Ledger { entries: Vec::new() }
    }

    pub fn entries(&self) -> &[LedgerEntry] {
        &self.entries
    }

    pub fn get(&self, id: &str) -> Option<&LedgerEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// First entry of the family matching the given parameters.
    pub fn first_match(&self, family: Family, params: &FamilyParams) -> Option<&LedgerEntry> {
        self.entries
            .iter()
            .find(|e| e.family == family && e.matcher.matches(params))
    }

    /// Parses the structured text format: blocks starting with `[entry]`,
    /// `key = value` lines, `#` comments.
    pub fn parse(text: &str) -> Result<Ledger, LedgerError> {
        let mut entries = Vec::new();
        let mut current: Option<(usize, PartialEntry)> = None;
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if line == "[entry]" {
                if let Some((l, p)) = current.take() {
                    entries.push(p.finish(l)?);
                }
                current = Some((lineno, PartialEntry::default()));
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(LedgerError::Parse {
                line: lineno,
                msg: format!("expected key = value, got {line:?}"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            let (_, partial) = current.as_mut().ok_or(LedgerError::Parse {
                line: lineno,
                msg: "field outside of an [entry] block".into(),
            })?;
            match key {
                "id" => partial.id = Some(value.to_string()),
                "family" => {
                    partial.family = Some(Family::parse(value).ok_or(LedgerError::Parse {
                        line: lineno,
                        msg: format!("unknown family {value:?}"),
                    })?)
                }
                "match" => {
                    partial.matcher = Some(Matcher::parse(value).map_err(|msg| {
                        LedgerError::Parse { line: lineno, msg }
                    })?)
                }
                "anchor" => partial.anchor = Some(value.to_string()),
                "summary" => partial.summary = Some(value.to_string()),
                other => {
                    return Err(LedgerError::Parse {
                        line: lineno,
                        msg: format!("unknown field {other:?}"),
                    })
                }
            }
        }
        if let Some((l, p)) = current.take() {
            entries.push(p.finish(l)?);
        }
        Ok(Ledger { entries })
    }

    pub fn load(path: &Path) -> Result<Ledger, LedgerError> {
        let text = std::fs::read_to_string(path)?;
        Ledger::parse(&text)
    }
}

#[derive(Default)]
struct PartialEntry {
    id: Option<String>,
    family: Option<Family>,
    matcher: Option<Matcher>,
    anchor: Option<String>,
    summary: Option<String>,
}

impl PartialEntry {
    fn finish(self, line: usize) -> Result<LedgerEntry, LedgerError> {
        let missing = |msg: &str| LedgerError::Parse { line, msg: format!("entry missing {msg}") };
        Ok(LedgerEntry {
            id: self.id.ok_or_else(|| missing("id"))?,
            family: self.family.ok_or_else(|| missing("family"))?,
            matcher: self.matcher.ok_or_else(|| missing("match"))?,
            anchor: self.anchor.ok_or_else(|| missing("anchor"))?,
            summary: self.summary.ok_or_else(|| missing("summary"))?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::qi;
    use crate::sweep::BcPoint;

    #[test]
    fn parse_and_match() {
        let text = "\
# comment
[entry]
id = bc-test
family = bc
match = r=3, beta=2, d=8|9
anchor = somewhere: \"a quote\"
summary = a summary
";
        let ledger = Ledger::parse(text).unwrap();
        assert_eq!(ledger.entries().len(), 1);
        let p = FamilyParams::BlowupCurve(BcPoint {
            r: 3,
            h3: 2,
            beta: 2,
            eps: 2,
            alpha: 4,
            d: 8,
            g_c: Some(3),
            k3: Some(qi(10)),
            rprime: None,
        });
        assert!(ledger.first_match(Family::BlowupCurve, &p).is_some());
        assert!(ledger.first_match(Family::Conic, &p).is_none());
        let q = FamilyParams::BlowupCurve(BcPoint {
            d: 7,
            ..match &p {
                FamilyParams::BlowupCurve(b) => b.clone(),
                _ => unreachable!(),
            }
        });
        assert!(ledger.first_match(Family::BlowupCurve, &q).is_none());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Ledger::parse("[entry]\nid = x\n").unwrap_err();
        assert!(matches!(err, LedgerError::Parse { line: 1, .. }));
        let err = Ledger::parse("stray = line\n").unwrap_err();
        assert!(matches!(err, LedgerError::Parse { line: 1, .. }));
    }
}
