//! Family sweeps over finite parameter grids.
//!
//! Each sweep walks its family's Diophantine grid, applies the numeric
//! filters in the order of the case analysis, consults the geometric
//! exclusion ledger for eliminations that rest on non-arithmetic arguments,
//! and emits one `CandidateCase` per grid point with the full filter trail.

pub mod audit;
pub mod blowup_curve;
pub mod blowup_point;
pub mod conic;
pub mod del_pezzo;
pub mod ledger;

use crate::config::SweepConfig;
use crate::invariants::DerivedInvariants;
use crate::lattice::PointCase;
use crate::rat::{fmt_q, Q};
use ledger::Ledger;

/// The four extremal-contraction families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    DelPezzo,
    Conic,
    BlowupCurve,
    BlowupPoint,
}

impl Family {
    pub fn code(&self) -> &'static str {
        match self {
            Family::DelPezzo => "dp",
            Family::Conic => "cb",
            Family::BlowupCurve => "bc",
            Family::BlowupPoint => "bp",
        }
    }

    pub fn parse(s: &str) -> Option<Family> {
        match s {
            "dp" => Some(Family::DelPezzo),
            "cb" => Some(Family::Conic),
            "bc" => Some(Family::BlowupCurve),
            "bp" => Some(Family::BlowupPoint),
            _ => None,
        }
    }

    pub const ALL: [Family; 4] =
        [Family::DelPezzo, Family::Conic, Family::BlowupCurve, Family::BlowupPoint];
}

/// Grid coordinates of one del Pezzo fibration candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpPoint {
    /// Splitting exponents when the fibration is a plane bundle.
    pub a1a2: Option<(i64, i64)>,
    pub alpha: Q,
    pub beta: Q,
    pub kf2: i64,
    pub k3: Option<Q>,
}

/// Grid coordinates of one conic bundle candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CbPoint {
    /// Bundle-branch data (normalized c1, divisor pair (a, b), minimal twist).
    pub bundle: Option<(i64, i64, i64, i64)>,
    pub alpha: Q,
    pub beta: Q,
    pub d: i64,
    pub c1: Option<i64>,
    pub c2: Option<i64>,
    pub k3: Option<Q>,
    /// Set on the fixed rows injected from the non-spanned catalog.
    pub catalog: Option<u32>,
}

/// Grid coordinates of one curve-blowup candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BcPoint {
    pub r: i64,
    pub h3: i64,
    pub beta: i64,
    pub eps: i64,
    pub alpha: i64,
    pub d: i64,
    pub g_c: Option<i64>,
    pub k3: Option<Q>,
    /// Set for members of the D-to-point family (the value of r').
    pub rprime: Option<i64>,
}

/// Grid coordinates of one point-blowup candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BpPoint {
    pub case: PointCase,
    pub r: i64,
    pub h3: i64,
    pub alpha: Q,
    pub beta: Option<Q>,
    pub k3: Option<Q>,
}

/// Family-tagged grid coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyParams {
    DelPezzo(DpPoint),
    Conic(CbPoint),
    BlowupCurve(BcPoint),
    BlowupPoint(BpPoint),
}

impl FamilyParams {
    /// Named field lookup used by ledger matchers.
    pub fn field(&self, name: &str) -> Option<Q> {
        use crate::rat::qi;
        match self {
            FamilyParams::DelPezzo(p) => match name {
                "alpha" => Some(p.alpha),
                "beta" => Some(p.beta),
                "kf2" => Some(qi(p.kf2)),
                "a1" => p.a1a2.map(|(a1, _)| qi(a1)),
                "a2" => p.a1a2.map(|(_, a2)| qi(a2)),
                "k3" => p.k3,
                _ => None,
            },
            FamilyParams::Conic(p) => match name {
                "alpha" => Some(p.alpha),
                "beta" => Some(p.beta),
                "d" => Some(qi(p.d)),
                "a" => p.bundle.map(|(_, a, _, _)| qi(a)),
                "b" => p.bundle.map(|(_, _, b, _)| qi(b)),
                "lambda" => p.bundle.map(|(_, _, _, l)| qi(l)),
                "c1" => p.c1.map(qi).or(p.bundle.map(|(c1, _, _, _)| qi(c1))),
                "c2" => p.c2.map(qi),
                "k3" => p.k3,
                _ => None,
            },
            FamilyParams::BlowupCurve(p) => match name {
                "r" => Some(qi(p.r)),
                "h3" => Some(qi(p.h3)),
                "beta" => Some(qi(p.beta)),
                "eps" => Some(qi(p.eps)),
                "alpha" => Some(qi(p.alpha)),
                "d" => Some(qi(p.d)),
                "gc" => p.g_c.map(qi),
                "k3" => p.k3,
                "rprime" => p.rprime.map(qi),
                _ => None,
            },
            FamilyParams::BlowupPoint(p) => match name {
                "case" => Some(qi(match p.case {
                    PointCase::P2O1 => 1,
                    PointCase::P2O2 => 2,
                    PointCase::Quadric => 3,
                })),
                "r" => Some(qi(p.r)),
                "h3" => Some(qi(p.h3)),
                "alpha" => Some(p.alpha),
                "beta" => p.beta,
                "k3" => p.k3,
                _ => None,
            },
        }
    }

    /// Stable short identifier for a grid point.
    pub fn id(&self) -> String {
        match self {
            FamilyParams::DelPezzo(p) => {
                if let Some((a1, a2)) = p.a1a2 {
                    format!("dp bundle({a1},{a2})")
                } else {
                    format!("dp alpha={} beta={} kf2={}", fmt_q(p.alpha), fmt_q(p.beta), p.kf2)
                }
            }
            FamilyParams::Conic(p) => {
                if let Some(no) = p.catalog {
                    format!("cb catalog-{no}")
                } else if let Some((c1, a, b, l)) = p.bundle {
                    format!("cb bundle c1={c1} (a,b)=({a},{b}) lambda={l}")
                } else {
                    format!("cb alpha={} beta={} d={}", fmt_q(p.alpha), fmt_q(p.beta), p.d)
                }
            }
            FamilyParams::BlowupCurve(p) => {
                if let Some(rp) = p.rprime {
                    format!("bc point r={} r'={rp} h3={}", p.r, p.h3)
                } else {
                    format!(
                        "bc r={} h3={} beta={} eps={} d={}",
                        p.r, p.h3, p.beta, p.eps, p.d
                    )
                }
            }
            FamilyParams::BlowupPoint(p) => {
                format!(
                    "bp {} r={} h3={} alpha={}",
                    p.case.label(),
                    p.r,
                    p.h3,
                    fmt_q(p.alpha)
                )
            }
        }
    }
}

/// Outcome of one grid point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accepted,
    /// Survives every known obstruction, but existence is open.
    ExistenceOpen,
    /// Eliminated by an arithmetic filter.
    ExcludedNumeric(String),
    /// Eliminated by a ledger entry (geometric argument, recorded not rederived).
    ExcludedLedger(String),
}

impl Verdict {
    pub fn is_surviving(&self) -> bool {
        matches!(self, Verdict::Accepted | Verdict::ExistenceOpen)
    }

    pub fn label(&self) -> String {
        match self {
            Verdict::Accepted => "accepted".into(),
            Verdict::ExistenceOpen => "existence-open".into(),
            Verdict::ExcludedNumeric(id) => format!("excluded-numeric({id})"),
            Verdict::ExcludedLedger(id) => format!("excluded-ledger({id})"),
        }
    }
}

/// One evaluated filter with its rendered equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrailStep {
    pub filter: String,
    pub detail: String,
    pub pass: bool,
}

/// Display annotations attached to a surviving row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RowFlags {
    pub open_existence: bool,
    /// The anticanonical model is the image of |-(1/k) K_X|.
    pub half_anticanonical: Option<i64>,
}

/// One grid point with its derivation record.
#[derive(Debug, Clone)]
pub struct CandidateCase {
    pub family: Family,
    pub params: FamilyParams,
    pub derived: Option<DerivedInvariants>,
    pub verdict: Verdict,
    pub trail: Vec<TrailStep>,
    pub flags: RowFlags,
}

impl CandidateCase {
    pub fn id(&self) -> String {
        self.params.id()
    }

    /// Displayed degree/genus of B (degree rescaled by the half-anticanonical
    /// flag where the fibration geometry descends it).
    pub fn displayed_b(&self) -> Option<crate::invariants::BLocus> {
        self.derived.map(|d| d.b)
    }
}

/// Trail builder shared by the sweeps.
#[derive(Debug, Default)]
pub struct Trail {
    steps: Vec<TrailStep>,
}

impl Trail {
    pub fn new() -> Self {
        Trail { steps: Vec::new() }
    }

    pub fn pass(&mut self, filter: &str, detail: String) {
        self.steps.push(TrailStep { filter: filter.to_string(), detail, pass: true });
    }

    pub fn fail(&mut self, filter: &str, detail: String) -> Verdict {
        self.steps.push(TrailStep { filter: filter.to_string(), detail, pass: false });
        Verdict::ExcludedNumeric(filter.to_string())
    }

    pub fn ledger(&mut self, entry: &ledger::LedgerEntry) -> Verdict {
        self.steps.push(TrailStep {
            filter: entry.id.clone(),
            detail: format!("ledger: {}", entry.summary),
            pass: false,
        });
        Verdict::ExcludedLedger(entry.id.clone())
    }

    pub fn into_steps(self) -> Vec<TrailStep> {
        self.steps
    }
}

/// Sort key required of every sweep's output: family, k3, alpha, beta, H3, d.
pub fn sort_candidates(cands: &mut [CandidateCase]) {
    cands.sort_by(|x, y| candidate_key(x).cmp(&candidate_key(y)));
}

fn candidate_key(c: &CandidateCase) -> (Family, Q, Q, Q, Q, Q, String) {
    let get = |name: &str| c.params.field(name).unwrap_or_else(Q::zero);
    use num_traits::Zero;
    let k3 = c.derived.map(|d| d.k3).or_else(|| c.params.field("k3")).unwrap_or_else(Q::zero);
    (c.family, k3, get("alpha"), get("beta"), get("h3"), get("d"), c.id())
}

/// Runs the requested family sweep.
pub fn enumerate(family: Family, cfg: &SweepConfig, ledger: &Ledger) -> Vec<CandidateCase> {
    let mut out = match family {
        Family::DelPezzo => del_pezzo::enumerate(cfg, ledger),
        Family::Conic => conic::enumerate(cfg, ledger),
        Family::BlowupCurve => blowup_curve::enumerate(cfg, ledger),
        Family::BlowupPoint => blowup_point::enumerate(cfg, ledger),
    };
    sort_candidates(&mut out);
    out
}

/// Surviving rows (accepted or existence-open) of a sweep.
pub fn surviving(cands: &[CandidateCase]) -> Vec<&CandidateCase> {
    cands.iter().filter(|c| c.verdict.is_surviving()).collect()
}
