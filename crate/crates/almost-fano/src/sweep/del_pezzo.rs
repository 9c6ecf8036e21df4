//! Sweep of the del Pezzo fibration family.
//!
//! Three branches: the plane-bundle case (two splitting types, one of which
//! contracts only a curve), the integer-alpha case over fiber degrees 1..8
//! with beta in {1, 2}, and the half-integer branch on quadric fibrations.
//! The degree relation alpha (-K)^3 = beta K_F^2 drives everything; the
//! beta = 2 branch is cross-checked by two independent genus computations.

use super::ledger::Ledger;
use super::{CandidateCase, DpPoint, Family, FamilyParams, RowFlags, Trail, Verdict};
use crate::config::SweepConfig;
use crate::invariants::{
    dp_consistency, dp_genus_beta1, dp_genus_beta2, genus_ok, BLocus, DerivedInvariants,
};
use crate::rat::{fmt_q, is_pos_even, q, qi, Q};

pub fn enumerate(cfg: &SweepConfig, ledger: &Ledger) -> Vec<CandidateCase> {
    let mut out = Vec::new();
    plane_bundle_branch(cfg, ledger, &mut out);
    integer_branch(cfg, ledger, &mut out);
    half_integer_branch(cfg, ledger, &mut out);
    out
}

fn rejected(params: FamilyParams, flags: RowFlags, trail: Trail, verdict: Verdict) -> CandidateCase {
    CandidateCase {
        family: Family::DelPezzo,
        params,
        derived: None,
        verdict,
        trail: trail.into_steps(),
        flags,
    }
}

/// K.D^2 in the basis (-K, F): D = alpha(-K) - beta F gives
/// K.D^2 = -alpha^2 (-K)^3 + 2 alpha beta K_F^2.
fn dp_kd2(alpha: Q, beta: Q, kf2: i64, k3: Q) -> Q {
    -alpha * alpha * k3 + qi(2) * alpha * beta * qi(kf2)
}

/// D^3 in the same basis: alpha^3 (-K)^3 - 3 alpha^2 beta K_F^2.
fn dp_d3(alpha: Q, beta: Q, kf2: i64, k3: Q) -> Q {
    alpha * alpha * alpha * k3 - qi(3) * alpha * alpha * beta * qi(kf2)
}

/// Degree of B displayed in the appendix: the anticanonical-model degree
/// K.D^2 / 2, rescaled by the half-anticanonical flag on the beta = 2 branch
/// (there the fibers embed and the divisibility descends to B; on the
/// beta = 1 branch the tabulated degree is the unscaled one).
fn displayed_deg(raw: Q, beta: Q, half: Option<i64>) -> Q {
    match half {
        Some(k) if beta == qi(2) => raw / qi(k),
        _ => raw,
    }
}

fn plane_bundle_branch(cfg: &SweepConfig, ledger: &Ledger, out: &mut Vec<CandidateCase>) {
    // Nefness of -K forces a1 + a2 = 2 on the normalized splitting.
    for (a1, a2) in [(2i64, 0i64), (1, 1)] {
        let mut trail = Trail::new();
        trail.pass("dp-plane-bundle-nef", format!("a1 + a2 = 2: ({a1}, {a2})"));
        // -K = 3 zeta and zeta^3 = c1 = 2, so (-K)^3 = 27 * 2.
        let k3 = qi(54);
        let kf2 = 9;
        let beta = qi(2);
        let alpha = beta * qi(kf2) / k3;
        let params = FamilyParams::DelPezzo(DpPoint {
            a1a2: Some((a1, a2)),
            alpha,
            beta,
            kf2,
            k3: Some(k3),
        });
        trail.pass(
            "dp-degree-relation",
            format!("alpha*(-K)^3 = beta*K_F^2: {}*{} = 2*9", fmt_q(alpha), fmt_q(k3)),
        );
        // -K is three times the tautological class
        let flags = RowFlags { open_existence: false, half_anticanonical: Some(3) };
        if cfg.use_ledger {
            if let Some(e) = ledger.first_match(Family::DelPezzo, &params) {
                let verdict = trail.ledger(e);
                out.push(rejected(params, flags, trail, verdict));
                continue;
            }
        }
        let kd2 = dp_kd2(alpha, beta, kf2, k3);
        let (_, g_b) = dp_genus_beta2(alpha, k3);
        trail.pass("dp-genus-adjunction", format!("g(B) = {}", fmt_q(g_b)));
        let derived = DerivedInvariants {
            k3,
            epsilon: qi(0),
            kd2,
            d3: dp_d3(alpha, beta, kf2, k3),
            b: BLocus::Curve {
                deg: displayed_deg(kd2 / qi(2), beta, flags.half_anticanonical),
                genus: g_b,
            },
            gx: k3 / qi(2) + qi(1),
        };
        out.push(CandidateCase {
            family: Family::DelPezzo,
            params,
            derived: Some(derived),
            verdict: Verdict::Accepted,
            trail: trail.into_steps(),
            flags,
        });
    }
}

fn integer_branch(cfg: &SweepConfig, ledger: &Ledger, out: &mut Vec<CandidateCase>) {
    for kf2 in 1..=cfg.kf2_max.min(8) {
        // no del Pezzo fibration has fiber degree 7
        if kf2 == 7 {
            continue;
        }
        for beta in [1i64, 2] {
            for alpha in 1..=cfg.alpha_max {
                out.push(integer_candidate(cfg, ledger, kf2, beta, alpha));
            }
        }
    }
}

fn integer_candidate(
    cfg: &SweepConfig,
    ledger: &Ledger,
    kf2: i64,
    beta: i64,
    alpha: i64,
) -> CandidateCase {
    let mut trail = Trail::new();
    let k3 = qi(beta) * qi(kf2) / qi(alpha);
    let params = FamilyParams::DelPezzo(DpPoint {
        a1a2: None,
        alpha: qi(alpha),
        beta: qi(beta),
        kf2,
        k3: Some(k3),
    });
    let mut flags = RowFlags::default();

    let rel = format!("(-K)^3 = beta*K_F^2/alpha = {beta}*{kf2}/{alpha} = {}", fmt_q(k3));
    if !k3.is_integer() {
        let v = trail.fail("dp-degree-relation", rel);
        return rejected(params, flags, trail, v);
    }
    trail.pass("dp-degree-relation", rel);
    if !is_pos_even(k3) {
        let v = trail.fail(
            "anticanonical-evenness",
            format!("(-K)^3 = {} not a positive even integer", fmt_q(k3)),
        );
        return rejected(params, flags, trail, v);
    }
    trail.pass("anticanonical-evenness", format!("(-K)^3 = {}", fmt_q(k3)));

    let g_b = if beta == 2 {
        if k3 > qi(16) || k3 == qi(14) {
            let v = trail.fail(
                "dp-cube-bound",
                format!("(-K)^3 = {} outside 2..16 minus 14", fmt_q(k3)),
            );
            return rejected(params, flags, trail, v);
        }
        trail.pass("dp-cube-bound", format!("(-K)^3 = {} <= 16, != 14", fmt_q(k3)));
        if alpha >= 2 {
            let res = dp_consistency(alpha, k3);
            let detail = format!(
                "(alpha^3 - alpha)/12*(-K)^3 - 2 alpha + 2 = {} (alpha = {alpha})",
                fmt_q(res)
            );
            if res != qi(0) {
                let v = trail.fail("dp-genus-consistency", detail);
                return rejected(params, flags, trail, v);
            }
            trail.pass("dp-genus-consistency", detail);
        }
        let (g_sections, g_adjunction) = dp_genus_beta2(qi(alpha), k3);
        trail.pass(
            "dp-genus-cross-check",
            format!(
                "sections route {} = adjunction route {}",
                fmt_q(g_sections),
                fmt_q(g_adjunction)
            ),
        );
        debug_assert_eq!(g_sections, g_adjunction);
        g_adjunction
    } else {
        let g = dp_genus_beta1(qi(alpha), k3);
        trail.pass("dp-genus-sections", format!("g(B) = {}", fmt_q(g)));
        // For alpha = 3, 4 the image of B is the complete intersection of two
        // degree-(K_F^2/2) surfaces, whose genus must match the computed one.
        if alpha == 3 || alpha == 4 {
            let m = kf2 / 2;
            let g_ci = qi(1 + m * m * (m - 2));
            let detail = format!(
                "computed g(B) = {} vs complete-intersection genus {} (two degree-{m} surfaces)",
                fmt_q(g),
                fmt_q(g_ci)
            );
            if g != g_ci {
                let v = trail.fail("dp-ci-genus", detail);
                return rejected(params, flags, trail, v);
            }
            trail.pass("dp-ci-genus", detail);
        }
        g
    };

    if !genus_ok(g_b) {
        let v = trail.fail(
            "genus-b-integral",
            format!("g(B) = {} not a nonnegative integer", fmt_q(g_b)),
        );
        return rejected(params, flags, trail, v);
    }

    // quadric fibrations with beta = 2 have 2-divisible -K
    flags.half_anticanonical = if kf2 == 8 && beta == 2 { Some(2) } else { None };
    flags.open_existence = beta == 2 && alpha == 1 && (kf2 == 5 || kf2 == 6);

    if cfg.use_ledger {
        if let Some(e) = ledger.first_match(Family::DelPezzo, &params) {
            let v = trail.ledger(e);
            return rejected(params, flags, trail, v);
        }
    }

    let kd2 = dp_kd2(qi(alpha), qi(beta), kf2, k3);
    let deg = displayed_deg(kd2 / qi(2), qi(beta), flags.half_anticanonical);
    trail.pass(
        "dp-degree-of-b",
        format!("K.D^2 = {}, displayed degree {}", fmt_q(kd2), fmt_q(deg)),
    );
    let derived = DerivedInvariants {
        k3,
        epsilon: qi(0),
        kd2,
        d3: dp_d3(qi(alpha), qi(beta), kf2, k3),
        b: BLocus::Curve { deg, genus: g_b },
        gx: k3 / qi(2) + qi(1),
    };
    let verdict = if flags.open_existence { Verdict::ExistenceOpen } else { Verdict::Accepted };
    CandidateCase {
        family: Family::DelPezzo,
        params,
        derived: Some(derived),
        verdict,
        trail: trail.into_steps(),
        flags,
    }
}

fn half_integer_branch(cfg: &SweepConfig, ledger: &Ledger, out: &mut Vec<CandidateCase>) {
    if cfg.kf2_max < 8 {
        return;
    }
    // non-integral alpha only occurs on quadric fibrations
    let kf2 = 8;
    let mut atilde = 1;
    while atilde <= 2 * cfg.alpha_max {
        let alpha = q(atilde, 2);
        for beta in [qi(2), qi(1), q(1, 2)] {
            out.push(half_integer_candidate(cfg, ledger, kf2, alpha, beta));
        }
        atilde += 2;
    }
}

fn half_integer_candidate(
    cfg: &SweepConfig,
    ledger: &Ledger,
    kf2: i64,
    alpha: Q,
    beta: Q,
) -> CandidateCase {
    let mut trail = Trail::new();
    let k3 = beta * qi(kf2) / alpha;
    let params = FamilyParams::DelPezzo(DpPoint { a1a2: None, alpha, beta, kf2, k3: Some(k3) });
    // -K = 2L with L the tautological class of the direct image
    let flags = RowFlags { open_existence: false, half_anticanonical: Some(2) };

    let rel = format!(
        "(-K)^3 = beta*K_F^2/alpha = {}*8/{} = {}",
        fmt_q(beta),
        fmt_q(alpha),
        fmt_q(k3)
    );
    if !is_pos_even(k3) {
        let v = trail.fail("dp-degree-relation", rel);
        return rejected(params, flags, trail, v);
    }
    trail.pass("dp-degree-relation", rel);

    if cfg.use_ledger {
        if let Some(e) = ledger.first_match(Family::DelPezzo, &params) {
            let v = trail.ledger(e);
            return rejected(params, flags, trail, v);
        }
    }
    if beta == q(1, 2) {
        // ghost of the half-integer-beta point when the ledger is off
        return CandidateCase {
            family: Family::DelPezzo,
            params,
            derived: None,
            verdict: Verdict::Accepted,
            trail: trail.into_steps(),
            flags,
        };
    }

    let g_b = if beta == qi(2) { dp_genus_beta2(alpha, k3).1 } else { dp_genus_beta1(alpha, k3) };
    trail.pass("dp-genus", format!("g(B) = {}", fmt_q(g_b)));
    if !genus_ok(g_b) {
        let v = trail.fail("genus-b-integral", format!("g(B) = {}", fmt_q(g_b)));
        return rejected(params, flags, trail, v);
    }
    let kd2 = dp_kd2(alpha, beta, kf2, k3);
    let deg = displayed_deg(kd2 / qi(2), beta, flags.half_anticanonical);
    trail.pass(
        "dp-degree-of-b",
        format!("K.D^2 = {}, displayed degree {}", fmt_q(kd2), fmt_q(deg)),
    );
    let derived = DerivedInvariants {
        k3,
        epsilon: qi(0),
        kd2,
        d3: dp_d3(alpha, beta, kf2, k3),
        b: BLocus::Curve { deg, genus: g_b },
        gx: k3 / qi(2) + qi(1),
    };
    CandidateCase {
        family: Family::DelPezzo,
        params,
        derived: Some(derived),
        verdict: Verdict::Accepted,
        trail: trail.into_steps(),
        flags,
    }
}
