//! Sweep configuration: grid bounds and the index/degree table of the
//! smooth rank-1 targets, read from a plain-text `key = value` file.

use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("io error reading config: {0}")]
    Io(#[from] std::io::Error),
    #[error("config parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Bounds and structural tables for the four sweeps. The bounds are strictly
/// larger than anything the filters admit; the structural tables (fiber
/// degrees, the index/degree list) encode classification facts, not bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepConfig {
    pub alpha_max: i64,
    pub beta_max: i64,
    pub d_max: i64,
    pub gc_max: i64,
    pub kf2_max: i64,
    pub c1_min: i64,
    pub c1_max: i64,
    pub c2_max: i64,
    /// Upper bound on H^3 where the blowdown target may be singular and
    /// the smooth-target degree table does not apply.
    pub h3_max: i64,
    /// Allowed (index, H^3) of the smooth rank-1 blowdown targets.
    pub fano_degrees: BTreeMap<i64, Vec<i64>>,
    /// When false, geometric-exclusion entries are skipped (audit runs).
    pub use_ledger: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            alpha_max: 12,
            beta_max: 6,
            d_max: 24,
            gc_max: 30,
            kf2_max: 9,
            c1_min: -8,
            c1_max: 8,
            c2_max: 40,
            h3_max: 24,
            fano_degrees: BTreeMap::from([
                (1, vec![2, 4, 6, 8, 10, 12, 14, 16, 18, 22]),
                (2, vec![1, 2, 3, 4, 5]),
                (3, vec![2]),
                (4, vec![1]),
            ]),
            use_ledger: true,
        }
    }
}

impl SweepConfig {
    /// Numeric bounds scaled by `factor` (grid-independence check). The
    /// structural tables are classification data and are left alone.
    pub fn scaled(&self, factor: i64) -> SweepConfig {
        SweepConfig {
            alpha_max: self.alpha_max * factor,
            beta_max: self.beta_max * factor,
            d_max: self.d_max * factor,
            gc_max: self.gc_max * factor,
            kf2_max: self.kf2_max * factor,
            c1_min: self.c1_min * factor,
            c1_max: self.c1_max * factor,
            c2_max: self.c2_max * factor,
            h3_max: self.h3_max * factor,
            fano_degrees: self.fano_degrees.clone(),
            use_ledger: self.use_ledger,
        }
    }

    pub fn without_ledger(&self) -> SweepConfig {
        SweepConfig { use_ledger: false, ..self.clone() }
    }

    /// Parses `key = value` lines; ranges as `lo..hi`, lists comma-separated.
    pub fn parse(text: &str) -> Result<SweepConfig, ConfigError> {
        let mut cfg = SweepConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or(ConfigError::Parse {
                line: lineno,
                msg: format!("expected key = value, got {line:?}"),
            })?;
            let (key, value) = (key.trim(), value.trim());
            let int = |v: &str| -> Result<i64, ConfigError> {
                v.parse().map_err(|_| ConfigError::Parse {
                    line: lineno,
                    msg: format!("expected integer, got {v:?}"),
                })
            };
            let list = |v: &str| -> Result<Vec<i64>, ConfigError> {
                if let Some((lo, hi)) = v.split_once("..") {
                    Ok((int(lo.trim())?..=int(hi.trim())?).collect())
                } else {
                    v.split(',').map(|x| int(x.trim())).collect()
                }
            };
            match key {
                "alpha_max" => cfg.alpha_max = int(value)?,
                "beta_max" => cfg.beta_max = int(value)?,
                "d_max" => cfg.d_max = int(value)?,
                "gc_max" => cfg.gc_max = int(value)?,
                "kf2_max" => cfg.kf2_max = int(value)?,
                "c2_max" => cfg.c2_max = int(value)?,
                "h3_max" => cfg.h3_max = int(value)?,
                "c1_range" => {
                    let (lo, hi) = value.split_once("..").ok_or(ConfigError::Parse {
                        line: lineno,
                        msg: format!("c1_range wants lo..hi, got {value:?}"),
                    })?;
                    cfg.c1_min = int(lo.trim())?;
                    cfg.c1_max = int(hi.trim())?;
                }
                "fano_r1" => {
                    cfg.fano_degrees.insert(1, list(value)?);
                }
                "fano_r2" => {
                    cfg.fano_degrees.insert(2, list(value)?);
                }
                "fano_r3" => {
                    cfg.fano_degrees.insert(3, list(value)?);
                }
                "fano_r4" => {
                    cfg.fano_degrees.insert(4, list(value)?);
                }
                other => {
                    return Err(ConfigError::Parse {
                        line: lineno,
                        msg: format!("unknown key {other:?}"),
                    })
                }
            }
        }
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<SweepConfig, ConfigError> {
        let text = std::fs::read_to_string(path)?;
        SweepConfig::parse(&text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_overrides_defaults() {
        let cfg = SweepConfig::parse("alpha_max = 20\nfano_r2 = 1..5\nc1_range = -4..4\n").unwrap();
        assert_eq!(cfg.alpha_max, 20);
        assert_eq!(cfg.fano_degrees[&2], vec![1, 2, 3, 4, 5]);
        assert_eq!((cfg.c1_min, cfg.c1_max), (-4, 4));
        assert_eq!(cfg.beta_max, SweepConfig::default().beta_max);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(SweepConfig::parse("alpha_max: 3").is_err());
        assert!(SweepConfig::parse("unknown = 1").is_err());
        assert!(SweepConfig::parse("alpha_max = x").is_err());
    }

    #[test]
    fn scaling_keeps_structural_tables() {
        let cfg = SweepConfig::default();
        let big = cfg.scaled(2);
        assert_eq!(big.alpha_max, 24);
        assert_eq!(big.fano_degrees, cfg.fano_degrees);
    }
}
