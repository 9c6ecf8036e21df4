//! Sweep of the curve-blowup family.
//!
//! The grid ranges over the index/degree table of the smooth rank-1 targets,
//! beta and the fiber defect eps; the curve degree d is the free axis and
//! the curve genus is solved from the divisor relations. Degree-one and
//! degree-two curves bypass the minimum-degree and beta bounds (they are
//! settled by their own arithmetic); the ambient complete-intersection
//! residuals apply for beta >= 2 away from the degree-one cases. The members
//! with D contracted to a point form a separate parametric sub-sweep.

use super::ledger::Ledger;
use super::{BcPoint, CandidateCase, Family, FamilyParams, RowFlags, Trail, Verdict};
use crate::config::SweepConfig;
use crate::invariants::{
    bc_ci_residual, bc_invariants, divpoint_row, genus_ok, ruled_surface_d3_holds, BLocus,
    BlowupCurveParams, CiConstraint,
};
use crate::rat::{fmt_q, is_pos_even, qi, Q};
use num_traits::Signed;

pub fn enumerate(cfg: &SweepConfig, ledger: &Ledger) -> Vec<CandidateCase> {
    let mut out = Vec::new();
    for (&r, degrees) in &cfg.fano_degrees {
        for &h3 in degrees {
            for beta in 1..=cfg.beta_max {
                for eps in [1i64, 2] {
                    let alpha = beta * r - eps;
                    if alpha <= 0 || alpha > cfg.alpha_max {
                        continue;
                    }
                    for d in 1..=cfg.d_max {
                        out.push(curve_candidate(cfg, ledger, r, h3, beta, eps, alpha, d));
                    }
                }
            }
        }
    }
    divpoint_sweep(cfg, &mut out);
    out
}

fn rejected(params: FamilyParams, trail: Trail, verdict: Verdict) -> CandidateCase {
    CandidateCase {
        family: Family::BlowupCurve,
        params,
        derived: None,
        verdict,
        trail: trail.into_steps(),
        flags: RowFlags::default(),
    }
}

#[allow(clippy::too_many_arguments)]
fn curve_candidate(
    cfg: &SweepConfig,
    ledger: &Ledger,
    r: i64,
    h3: i64,
    beta: i64,
    eps: i64,
    alpha: i64,
    d: i64,
) -> CandidateCase {
    let mut trail = Trail::new();
    let k3q = qi(eps) * qi(r * r * h3 - d) / qi(beta);
    let mk_params = |g_c: Option<i64>| {
        FamilyParams::BlowupCurve(BcPoint {
            r,
            h3,
            beta,
            eps,
            alpha,
            d,
            g_c,
            k3: Some(k3q),
            rprime: None,
        })
    };
    let params = mk_params(None);

    let rel = format!(
        "beta*(-K)^3 = eps*(r^2*H^3 - d): (-K)^3 = {eps}*({} - {d})/{beta} = {}",
        r * r * h3,
        fmt_q(k3q)
    );
    if !k3q.is_integer() {
        let v = trail.fail("bc-degree-relation", rel);
        return rejected(params, trail, v);
    }
    trail.pass("bc-degree-relation", rel);
    if !is_pos_even(k3q) {
        let v = trail.fail(
            "anticanonical-evenness",
            format!("(-K)^3 = {} not a positive even integer", fmt_q(k3q)),
        );
        return rejected(params, trail, v);
    }
    trail.pass("anticanonical-evenness", format!("(-K)^3 = {}", fmt_q(k3q)));
    let k3 = k3q.to_integer();

    // genus relation: beta(2 g_C - 2) = (beta r + alpha) d - alpha r^2 H^3
    let gcq = (qi((beta * r + alpha) * d - alpha * r * r * h3) + qi(2 * beta)) / qi(2 * beta);
    let rel = format!(
        "beta*(2g_C - 2) = (beta*r + alpha)*d - alpha*r^2*H^3: g_C = {}",
        fmt_q(gcq)
    );
    if !gcq.is_integer() {
        let v = trail.fail("bc-genus-relation", rel);
        return rejected(params, trail, v);
    }
    trail.pass("bc-genus-relation", rel);
    if gcq.is_negative() {
        let v = trail.fail("genus-c-nonnegative", format!("g_C = {}", fmt_q(gcq)));
        return rejected(params, trail, v);
    }
    let g_c = gcq.to_integer();
    let params = mk_params(Some(g_c));

    if d <= 2 && g_c != 0 {
        let v = trail.fail(
            "smallcurve-rational",
            format!("a smooth curve of degree {d} is rational, but g_C = {g_c}"),
        );
        return rejected(params, trail, v);
    }

    // nefness and bigness of -K on the exceptional divisor
    let det = format!("2g_C - 2 = {} < rd = {} and d = {d} < r^2 H^3 = {}", 2 * g_c - 2, r * d, r * r * h3);
    if !(2 * g_c - 2 < r * d && d < r * r * h3) {
        let v = trail.fail("bc-nef-bounds", det);
        return rejected(params, trail, v);
    }
    trail.pass("bc-nef-bounds", det);

    if d >= 3 {
        if r == 1 && h3 < 10 {
            let v = trail.fail(
                "min-degree-index1",
                format!("index 1 needs H^3 >= 10 beyond lines and conics, got {h3}"),
            );
            return rejected(params, trail, v);
        }
        let beta_ok = beta <= 3 || (beta == 4 && k3 == 2 && eps == r);
        let det = format!("beta = {beta} with (-K)^3 = {k3}, eps = {eps}, r = {r}");
        if !beta_ok {
            let v = trail.fail("beta-bound", det);
            return rejected(params, trail, v);
        }
        trail.pass("beta-bound", det);
    }

    let kd2 = eps * (alpha * r * h3 - beta * d);
    let det = format!("K.D^2 = eps*(alpha*r*H^3 - beta*d) = {kd2}");
    if kd2 <= 0 {
        let v = trail.fail("kd2-positive", det);
        return rejected(params, trail, v);
    }
    trail.pass("kd2-positive", det);

    let p = BlowupCurveParams { r, h3, d, g_c, alpha, beta };
    let inv = bc_invariants(&p).expect("relations verified above");

    if eps == 2 {
        let required = qi(4 * d) - qi(48 * alpha) / qi(r);
        let det = format!(
            "ruled surface over B: D^3 = {} must equal 4d - 48 alpha/r = {}",
            fmt_q(inv.d3),
            fmt_q(required)
        );
        if !ruled_surface_d3_holds(&p, &inv) {
            let v = trail.fail("ruled-surface-d3", det);
            return rejected(params, trail, v);
        }
        trail.pass("ruled-surface-d3", det);
    }

    let (deg_b, g_b) = inv.b.deg_genus().expect("curve image");
    let det = format!("g_B = {}", fmt_q(g_b));
    if !genus_ok(g_b) {
        let v = trail.fail("genus-b-integral", det);
        return rejected(params, trail, v);
    }
    trail.pass("genus-b-integral", det);

    // ambient-model residuals: valid for beta >= 2 away from degree-one curves
    if beta >= 2 && (d >= 3 || (r == 1 && d == 2)) {
        if let Some(verdict) = ci_filter(&mut trail, k3, eps, h3, beta, deg_b, g_b) {
            return rejected(params, trail, verdict);
        }
    }

    if cfg.use_ledger {
        if let Some(e) = ledger.first_match(Family::BlowupCurve, &params) {
            let v = trail.ledger(e);
            return rejected(params, trail, v);
        }
    }

    CandidateCase {
        family: Family::BlowupCurve,
        params,
        derived: Some(inv),
        verdict: Verdict::Accepted,
        trail: trail.into_steps(),
        flags: RowFlags::default(),
    }
}

/// Applies the complete-intersection / double-cover residuals for small
/// anticanonical cubes; the two shapes for cube 6 are tried disjunctively.
fn ci_filter(
    trail: &mut Trail,
    k3: i64,
    eps: i64,
    h3: i64,
    beta: i64,
    deg_b: Q,
    g_b: Q,
) -> Option<Verdict> {
    let constraints = CiConstraint::for_cube(k3);
    if constraints.is_empty() {
        return None;
    }
    let mut details = Vec::new();
    for c in constraints {
        let res = bc_ci_residual(k3, *c, eps, h3, beta, deg_b, g_b).expect("cube matches");
        details.push(format!("{}: residual {}", c.label(), fmt_q(res)));
        if res == qi(0) {
            trail.pass(c.label(), details.join("; "));
            return None;
        }
    }
    let filter = constraints[0].label();
    Some(trail.fail(filter, details.join("; ")))
}

fn divpoint_sweep(cfg: &SweepConfig, out: &mut Vec<CandidateCase>) {
    for (&r, degrees) in &cfg.fano_degrees {
        if r < 2 {
            continue;
        }
        for &h3 in degrees {
            for rprime in 1..r {
                let row = divpoint_row(r, rprime, h3).expect("valid divpoint parameters");
                let mut trail = Trail::new();
                trail.pass(
                    "bc-point-family",
                    format!(
                        "C complete intersection of a degree-{rprime} surface with an anticanonical member: \
                         d = {}, g_C = {}, (-K)^3 = {}",
                        row.d, row.g_c, row.k3
                    ),
                );
                trail.pass("bc-point-beta", "divisor-to-point contraction forces beta = 1".into());
                let params = FamilyParams::BlowupCurve(BcPoint {
                    r,
                    h3,
                    beta: 1,
                    eps: r - rprime,
                    alpha: rprime,
                    d: row.d,
                    g_c: Some(row.g_c),
                    k3: Some(qi(row.k3)),
                    rprime: Some(rprime),
                });
                out.push(CandidateCase {
                    family: Family::BlowupCurve,
                    params,
                    derived: Some(row.derived()),
                    verdict: Verdict::Accepted,
                    trail: trail.into_steps(),
                    flags: RowFlags::default(),
                });
            }
        }
    }
}

/// Degree-one curve on an index-2 target of degree at most 2: eliminating
/// the genus relation leaves (4 H^3 - 3) beta = 4 H^3 - 1. Returns the
/// coefficient pair; a case survives only if beta is a positive integer.
pub fn line_beta_equation_r2(h3: i64) -> (i64, i64) {
    (4 * h3 - 3, 4 * h3 - 1)
}

/// Brute-force solutions of the three divisor relations for a curve blowup
/// whose divisor would be contracted to a point with beta = 2. The case
/// analysis shows there are none; the audit test asserts emptiness.
pub fn divpoint_beta2_solutions(cfg: &SweepConfig) -> Vec<(i64, i64, i64, i64, i64)> {
    let mut sols = Vec::new();
    for (&r, degrees) in &cfg.fano_degrees {
        if r < 2 {
            continue;
        }
        for &h3 in degrees {
            for alpha in 1..r {
                for d in 1..=cfg.d_max {
                    for g_c in 0..=cfg.gc_max {
                        let k3 = r * r * r * h3 - 2 * r * d + 2 * g_c - 2;
                        let e2 = alpha * r * r * h3 - (alpha + 2 * r) * d + 4 * g_c - 4;
                        let e3 = alpha * alpha * r * h3 - 4 * alpha * d + 8 * g_c - 8;
                        if [2, 4, 8].contains(&k3) && e2 == 0 && e3 == 0 {
                            sols.push((r, h3, alpha, d, g_c));
                        }
                    }
                }
            }
        }
    }
    sols
}
