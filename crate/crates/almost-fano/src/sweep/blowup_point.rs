//! Sweep of the point-blowup family.
//!
//! Three sub-sweeps, one per exceptional-divisor type. On the smooth-target
//! case the index is 1 or 2 (blowing up a point on the index-3 or index-4
//! target is already Fano) and the degree comes from the rank-1 table; on
//! the two singular-target cases the degree is a free axis. Each case
//! carries its own beta relation, allowed fiber defects, genus route, and
//! ambient-model residuals.

use super::ledger::Ledger;
use super::{BpPoint, CandidateCase, Family, FamilyParams, RowFlags, Trail, Verdict};
use crate::config::SweepConfig;
use crate::invariants::{bp_ci_residual, bp_invariants, genus_ok, BlowupPointParams};
use crate::lattice::PointCase;
use crate::rat::{fmt_q, is_pos_even, q, qi, Q};

pub fn enumerate(cfg: &SweepConfig, ledger: &Ledger) -> Vec<CandidateCase> {
    let mut out = Vec::new();
    // smooth target: plane with normal degree one
    for (&r, degrees) in &cfg.fano_degrees {
        if r > 2 {
            continue;
        }
        for &h3 in degrees {
            for alpha in 1..=cfg.alpha_max {
                out.push(smooth_candidate(cfg, ledger, r, h3, alpha));
            }
        }
    }
    // singular targets: free degree axis
    for r in 1..=4 {
        for h3 in 1..=cfg.h3_max {
            let mut a = 1;
            while a <= 2 * cfg.alpha_max {
                out.push(gorenstein2_candidate(cfg, ledger, r, h3, q(a, 2)));
                a += 1;
            }
            for alpha in 1..=cfg.alpha_max {
                out.push(quadric_candidate(cfg, ledger, r, h3, alpha));
            }
        }
    }
    out
}

fn rejected(params: FamilyParams, trail: Trail, verdict: Verdict) -> CandidateCase {
    CandidateCase {
        family: Family::BlowupPoint,
        params,
        derived: None,
        verdict,
        trail: trail.into_steps(),
        flags: RowFlags::default(),
    }
}

fn accepted(params: FamilyParams, trail: Trail, inv: crate::invariants::DerivedInvariants) -> CandidateCase {
    CandidateCase {
        family: Family::BlowupPoint,
        params,
        derived: Some(inv),
        verdict: Verdict::Accepted,
        trail: trail.into_steps(),
        flags: RowFlags::default(),
    }
}

fn smooth_candidate(
    cfg: &SweepConfig,
    ledger: &Ledger,
    r: i64,
    h3: i64,
    alpha: i64,
) -> CandidateCase {
    let case = PointCase::P2O1;
    let mut trail = Trail::new();
    let k3q = qi(r * r * r * h3 - 8);
    let mk = |beta: Option<Q>| {
        FamilyParams::BlowupPoint(BpPoint { case, r, h3, alpha: qi(alpha), beta, k3: Some(k3q) })
    };
    let params = mk(None);

    let det = format!("(-K)^3 = r^3 H^3 - 8 = {}", fmt_q(k3q));
    if !is_pos_even(k3q) {
        let v = trail.fail("anticanonical-evenness", det);
        return rejected(params, trail, v);
    }
    trail.pass("anticanonical-evenness", det);
    let k3 = k3q.to_integer();

    let epsq = qi(alpha) * k3q / qi(4);
    let det = format!("eps = alpha*(-K)^3/4 = {}", fmt_q(epsq));
    if !epsq.is_integer() || ![1, 2, 4].contains(&epsq.to_integer()) {
        let v = trail.fail("bp-fiber-defect", det);
        return rejected(params, trail, v);
    }
    trail.pass("bp-fiber-defect", det);
    let eps = epsq.to_integer();

    let betaq = qi(alpha * r * r * h3) / qi(4);
    let det = format!("beta = alpha*r^2*H^3/4 = {}", fmt_q(betaq));
    if !betaq.is_integer() {
        let v = trail.fail("bp-beta-integral", det);
        return rejected(params, trail, v);
    }
    trail.pass("bp-beta-integral", det);
    let beta = betaq.to_integer();
    let params = mk(Some(betaq));

    // bounds from the branch-divisor and Jacobian-ideal arguments
    let beta_ok = match k3 {
        2 => beta <= 6 || (beta == 7 && r <= eps),
        4 | 8 => beta <= 6,
        _ => true,
    };
    let det = format!("beta = {beta} with (-K)^3 = {k3}");
    if !beta_ok {
        let v = trail.fail("bp-beta-bound", det);
        return rejected(params, trail, v);
    }
    trail.pass("bp-beta-bound", det);

    let inv = bp_invariants(&BlowupPointParams { case, r, h3, alpha: qi(alpha), beta: betaq })
        .expect("beta relation holds by construction");
    let (deg_b, g_b) = inv.b.deg_genus().expect("curve image");
    let det = format!("g_B = {}", fmt_q(g_b));
    if !genus_ok(g_b) || deg_b <= qi(0) {
        let v = trail.fail("genus-b-integral", det);
        return rejected(params, trail, v);
    }
    trail.pass("genus-b-integral", det);

    // ambient-model residuals; for cube 8 the Veronese double cover is the
    // alternative model when its parity and beta constraints hold
    if [2, 4, 8].contains(&k3) {
        let res = bp_ci_residual(k3, qi(eps), h3, betaq, deg_b, g_b).expect("supported cube");
        let veronese_ok =
            k3 == 8 && (beta <= 3 || (beta == 4 && r <= eps && (eps - r) % 2 == 0));
        let filter = match k3 {
            2 => "bp-ci-double-cover",
            4 => "bp-ci-quartic",
            _ => "bp-ci-three-quadrics",
        };
        let det = format!("residual {}{}", fmt_q(res), if veronese_ok { "; Veronese cover admissible" } else { "" });
        if res != qi(0) && !veronese_ok {
            let v = trail.fail(filter, det);
            return rejected(params, trail, v);
        }
        trail.pass(filter, det);
    }

    if cfg.use_ledger {
        if let Some(e) = ledger.first_match(Family::BlowupPoint, &params) {
            let v = trail.ledger(e);
            return rejected(params, trail, v);
        }
    }
    accepted(params, trail, inv)
}

fn gorenstein2_candidate(
    cfg: &SweepConfig,
    ledger: &Ledger,
    r: i64,
    h3: i64,
    alpha: Q,
) -> CandidateCase {
    let case = PointCase::P2O2;
    let mut trail = Trail::new();
    let k3q = qi(r * r * r * h3 - 4) / qi(8);
    let betaq = alpha * qi(r * r * h3) / qi(4);
    let params = FamilyParams::BlowupPoint(BpPoint {
        case,
        r,
        h3,
        alpha,
        beta: Some(betaq),
        k3: Some(k3q),
    });

    let det = format!("(-K)^3 = (r^3 H^3 - 4)/8 = {}", fmt_q(k3q));
    if !is_pos_even(k3q) {
        let v = trail.fail("anticanonical-evenness", det);
        return rejected(params, trail, v);
    }
    trail.pass("anticanonical-evenness", det);

    let epsq = qi(4) * alpha * k3q;
    let det = format!("eps = 2(beta r - alpha) = 4 alpha (-K)^3 = {}", fmt_q(epsq));
    if !epsq.is_integer() || ![1, 2, 4].contains(&epsq.to_integer()) {
        let v = trail.fail("bp-fiber-defect", det);
        return rejected(params, trail, v);
    }
    trail.pass("bp-fiber-defect", det);

    let inv = bp_invariants(&BlowupPointParams { case, r, h3, alpha, beta: betaq })
        .expect("beta relation holds by construction");
    let (_, g_b) = inv.b.deg_genus().expect("curve image");
    let det = format!("g_B = {} from K_D^2 = 8(1 - g_B)", fmt_q(g_b));
    if !genus_ok(g_b) {
        let v = trail.fail("genus-b-integral", det);
        return rejected(params, trail, v);
    }
    trail.pass("genus-b-integral", det);

    if cfg.use_ledger {
        if let Some(e) = ledger.first_match(Family::BlowupPoint, &params) {
            let v = trail.ledger(e);
            return rejected(params, trail, v);
        }
    }
    accepted(params, trail, inv)
}

fn quadric_candidate(
    cfg: &SweepConfig,
    ledger: &Ledger,
    r: i64,
    h3: i64,
    alpha: i64,
) -> CandidateCase {
    let case = PointCase::Quadric;
    let mut trail = Trail::new();
    let k3q = qi(r * r * r * h3 - 2);
    let betaq = qi(alpha * r * r * h3) / qi(2);
    let params = FamilyParams::BlowupPoint(BpPoint {
        case,
        r,
        h3,
        alpha: qi(alpha),
        beta: Some(betaq),
        k3: Some(k3q),
    });

    let det = format!("(-K)^3 = r^3 H^3 - 2 = {}", fmt_q(k3q));
    if !is_pos_even(k3q) {
        let v = trail.fail("anticanonical-evenness", det);
        return rejected(params, trail, v);
    }
    trail.pass("anticanonical-evenness", det);

    let det = format!("beta = alpha*r^2*H^3/2 = {}", fmt_q(betaq));
    if !betaq.is_integer() {
        let v = trail.fail("bp-beta-integral", det);
        return rejected(params, trail, v);
    }
    trail.pass("bp-beta-integral", det);

    let epsq = qi(alpha) * k3q / qi(2);
    let det = format!("eps = alpha*(-K)^3/2 = {}", fmt_q(epsq));
    if !epsq.is_integer() || ![1, 2].contains(&epsq.to_integer()) {
        let v = trail.fail("bp-fiber-defect", det);
        return rejected(params, trail, v);
    }
    trail.pass("bp-fiber-defect", det);

    let inv = bp_invariants(&BlowupPointParams { case, r, h3, alpha: qi(alpha), beta: betaq })
        .expect("beta relation holds by construction");
    let (_, g_b) = inv.b.deg_genus().expect("curve image");
    let det = format!("g_B = {}", fmt_q(g_b));
    if !genus_ok(g_b) {
        let v = trail.fail("genus-b-integral", det);
        return rejected(params, trail, v);
    }
    trail.pass("genus-b-integral", det);

    if cfg.use_ledger {
        if let Some(e) = ledger.first_match(Family::BlowupPoint, &params) {
            let v = trail.ledger(e);
            return rejected(params, trail, v);
        }
    }
    accepted(params, trail, inv)
}
