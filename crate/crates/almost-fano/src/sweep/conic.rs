//! Sweep of the conic bundle family.
//!
//! Three branches. The bundle branch (empty discriminant) classifies the
//! ruled fourfold sections through the pair (a, b) with D = a eta + b f and
//! the integrality of c2 = 3b/a + 1. The catalog branch injects the four
//! fixed double-cover rows where the direct image of -K is not spanned.
//! The discriminant branch sweeps (alpha, beta, d), derives the compatible
//! Chern pair (c1, c2) of the direct image along the divisorial or the
//! small route, and applies the corresponding eliminations.

use super::ledger::Ledger;
use super::{CandidateCase, CbPoint, Family, FamilyParams, RowFlags, Trail, Verdict};
use crate::chern::{chern_twist, rr_p2, ChernData};
use crate::config::SweepConfig;
use crate::invariants::{
    cb_divisorial_residuals, cb_k3_of_chern, genus_ok, BLocus, ConicParams, DerivedInvariants,
};
use crate::lattice::{DivisorClass, IntersectionForm, BASIS_CB};
use crate::rat::{fmt_q, is_pos_even, q, qi, Q};
use num_integer::Integer;
use num_traits::Zero;

pub fn enumerate(cfg: &SweepConfig, ledger: &Ledger) -> Vec<CandidateCase> {
    let mut out = Vec::new();
    bundle_branch(cfg, ledger, &mut out);
    catalog_branch(&mut out);
    discriminant_branch(cfg, ledger, &mut out);
    out
}

fn rejected(params: FamilyParams, trail: Trail, verdict: Verdict) -> CandidateCase {
    CandidateCase {
        family: Family::Conic,
        params,
        derived: None,
        verdict,
        trail: trail.into_steps(),
        flags: RowFlags::default(),
    }
}

/// Intersection form in the basis (-K, L) with L the pullback of a line:
/// (-K)^3 = k3, (-K)^2.L = 12 - d, (-K).L^2 = 2, L^3 = 0.
fn cb_form(k3: Q, d: i64) -> IntersectionForm {
    IntersectionForm::new(BASIS_CB, k3, qi(12 - d), qi(2), Q::zero())
}

/// K.D^2 for D = alpha(-K) + beta L.
fn cb_kd2(alpha: Q, beta: Q, k3: Q, d: i64) -> Q {
    -(alpha * alpha * k3 + qi(2) * alpha * beta * qi(12 - d) + qi(2) * beta * beta)
}

/// Genus from K_D^2 = 8(1 - g) when D is a ruled surface over B.
fn genus_from_kd_square(alpha: Q, beta: Q, k3: Q, d: i64) -> Q {
    let form = cb_form(k3, d);
    let dd = DivisorClass::new(BASIS_CB, alpha, beta);
    let kd = DivisorClass::new(BASIS_CB, alpha - qi(1), beta);
    let kd_sq = form.triple(kd, kd, dd).expect("same basis");
    qi(1) - kd_sq / qi(8)
}

// ---------------------------------------------------------------------------
// bundle branch (empty discriminant)
// ---------------------------------------------------------------------------

fn bundle_branch(cfg: &SweepConfig, ledger: &Ledger, out: &mut Vec<CandidateCase>) {
    // Normalized c1 = 0 is eliminated by the conics-in-families argument.
    {
        let mut trail = Trail::new();
        trail.pass("cb-normalization", "c1(F) normalized to 0".into());
        let params = FamilyParams::Conic(CbPoint {
            bundle: Some((0, 0, 0, 0)),
            alpha: Q::zero(),
            beta: Q::zero(),
            d: 0,
            c1: Some(0),
            c2: None,
            k3: None,
            catalog: None,
        });
        let verdict = if cfg.use_ledger {
            ledger
                .first_match(Family::Conic, &params)
                .map(|e| trail.ledger(e))
                .unwrap_or(Verdict::Accepted)
        } else {
            Verdict::Accepted
        };
        out.push(rejected(params, trail, verdict));
    }

    // The section bundle O + O(3): D is contracted to a point. Normalized
    // twist has (c1, c2) = (-1, -2); the pair (a, b) = (1, -1) solves the
    // same divisor relation c2 = 3b/a + 1.
    {
        let mut trail = Trail::new();
        trail.pass("cb-section-bundle", "split bundle with a = 3: D maps to a point".into());
        let (c1, c2) = (-1, -2);
        let k3 = qi(56 - 8 * c2);
        let (alpha, beta) = (q(1, 2), qi(-3));
        trail.pass("cb-c2-relation", format!("c2 = 3b/a + 1 = 3*(-1)/1 + 1 = {c2}"));
        let kd2 = cb_kd2(alpha, beta, k3, 0);
        trail.pass("cb-point-image", format!("K.D^2 = {} so B is a point", fmt_q(kd2)));
        debug_assert!(kd2.is_zero());
        let params = FamilyParams::Conic(CbPoint {
            bundle: Some((c1, 1, -1, 0)),
            alpha,
            beta,
            d: 0,
            c1: Some(c1),
            c2: Some(c2),
            k3: Some(k3),
            catalog: None,
        });
        out.push(CandidateCase {
            family: Family::Conic,
            params,
            derived: Some(DerivedInvariants {
                k3,
                epsilon: qi(0),
                kd2,
                d3: Q::zero(),
                b: BLocus::Point,
                gx: k3 / qi(2) + qi(1),
            }),
            verdict: Verdict::Accepted,
            trail: trail.into_steps(),
            flags: RowFlags { open_existence: false, half_anticanonical: Some(2) },
        });
    }

    for a in 1..=(2 * cfg.alpha_max) {
        for off in [2i64, 1] {
            let b = 2 * a - off;
            if b < 0 {
                continue;
            }
            // admissible minimal twists: a section of D pins lambda = b when
            // a = 1; otherwise lambda ranges up to 2 from the boundary bound
            let lambdas: Vec<i64> = if a == 1 {
                if b <= 2 {
                    vec![b]
                } else {
                    vec![]
                }
            } else {
                let lo = (b + a - 1).div_euclid(a); // ceil(b/a)
                (lo..=2).collect()
            };
            for lambda in lambdas {
                out.push(bundle_candidate(cfg, ledger, a, b, off, lambda));
            }
        }
    }
}

fn bundle_candidate(
    cfg: &SweepConfig,
    ledger: &Ledger,
    a: i64,
    b: i64,
    off: i64,
    lambda: i64,
) -> CandidateCase {
    let mut trail = Trail::new();
    let c2q = qi(3 * b) / qi(a) + qi(1);
    let params_for = |c2: Option<i64>, k3: Option<Q>| {
        FamilyParams::Conic(CbPoint {
            bundle: Some((-1, a, b, lambda)),
            alpha: q(a, 2),
            beta: qi(b - 2 * a),
            d: 0,
            c1: Some(-1),
            c2,
            k3,
            catalog: None,
        })
    };

    let rel = format!("c2 = 3b/a + 1 = 3*{b}/{a} + 1 = {}", fmt_q(c2q));
    if !c2q.is_integer() {
        let params = params_for(None, None);
        let v = trail.fail("cb-c2-relation", rel);
        return rejected(params, trail, v);
    }
    trail.pass("cb-c2-relation", rel);
    let c2 = c2q.to_integer();
    let k3 = qi(56 - 8 * c2);
    let params = params_for(Some(c2), Some(k3));

    let sections = 9 - c2;
    let det = format!("h0(F(2)) = 9 - c2 = {sections} >= 3");
    if sections < 3 {
        let v = trail.fail("cb-sections", det);
        return rejected(params, trail, v);
    }
    trail.pass("cb-sections", det);

    // D = a eta + b f may not be a multiple of an effective divisor
    let g = a.gcd(&b);
    if g >= 2 && lambda * a <= b {
        let v = trail.fail(
            "cb-divisible",
            format!("gcd(a, b) = {g} and twist {lambda} makes D a multiple of an effective divisor"),
        );
        return rejected(params, trail, v);
    }
    trail.pass("cb-divisible", format!("D primitive for twist {lambda}"));

    if cfg.use_ledger {
        if let Some(e) = ledger.first_match(Family::Conic, &params) {
            let v = trail.ledger(e);
            return rejected(params, trail, v);
        }
    }

    let (alpha, beta) = (q(a, 2), qi(b - 2 * a));
    let kd2 = cb_kd2(alpha, beta, k3, 0);
    let raw_deg = kd2 / qi(2);
    // -K = 2H on every section bundle, and the fibers embed: halve the degree
    let deg = raw_deg / qi(2);
    trail.pass("cb-degree-of-b", format!("K.D^2 = {}, displayed degree {}", fmt_q(kd2), fmt_q(deg)));
    let g_b = if off == 2 {
        // L.l = 1: D is a ruled surface over B
        let g = genus_from_kd_square(alpha, beta, k3, 0);
        trail.pass("cb-genus-ruled", format!("K_D^2 = 8(1 - g): g(B) = {}", fmt_q(g)));
        Some(g)
    } else if deg <= qi(2) {
        trail.pass("cb-genus-small-degree", format!("degree {} <= 2: B rational", fmt_q(deg)));
        Some(Q::zero())
    } else {
        trail.pass("cb-genus-undetermined", "no route to g(B) at this point".into());
        None
    };
    let Some(g_b) = g_b else {
        // only reachable with the ledger disabled
        return CandidateCase {
            family: Family::Conic,
            params,
            derived: None,
            verdict: Verdict::Accepted,
            trail: trail.into_steps(),
            flags: RowFlags { open_existence: false, half_anticanonical: Some(2) },
        };
    };
    if !genus_ok(g_b) {
        let v = trail.fail("genus-b-integral", format!("g(B) = {}", fmt_q(g_b)));
        return rejected(params, trail, v);
    }
    let d3 = cb_form(k3, 0)
        .cube(DivisorClass::new(BASIS_CB, alpha, beta))
        .expect("same basis");
    CandidateCase {
        family: Family::Conic,
        params,
        derived: Some(DerivedInvariants {
            k3,
            epsilon: qi(0),
            kd2,
            d3,
            b: BLocus::Curve { deg, genus: g_b },
            gx: k3 / qi(2) + qi(1),
        }),
        verdict: Verdict::Accepted,
        trail: trail.into_steps(),
        flags: RowFlags { open_existence: false, half_anticanonical: Some(2) },
    }
}

// ---------------------------------------------------------------------------
// catalog branch (direct image not spanned)
// ---------------------------------------------------------------------------

struct CatalogRow {
    no: u32,
    alpha: i64,
    beta: i64,
    d: i64,
    c1: i64,
    c2: i64,
    k3: i64,
    b: BLocus,
}

fn catalog_branch(out: &mut Vec<CandidateCase>) {
    // The four hyperelliptic double covers of ruled threefolds; their
    // invariants are fixed classification data, not sweep output.
    let rows = [
        CatalogRow { no: 9, alpha: 1, beta: -1, d: 10, c1: -1, c2: -2, k3: 2, b: BLocus::Point },
        CatalogRow {
            no: 10,
            alpha: 1,
            beta: -1,
            d: 8,
            c1: 1,
            c2: 0,
            k3: 4,
            b: BLocus::Curve { deg: qi(1), genus: qi(0) },
        },
        CatalogRow {
            no: 11,
            alpha: 2,
            beta: -1,
            d: 8,
            c1: 1,
            c2: 1,
            k3: 2,
            b: BLocus::Curve { deg: qi(3), genus: qi(0) },
        },
        CatalogRow { no: 12, alpha: 1, beta: -2, d: 8, c1: 1, c2: -2, k3: 8, b: BLocus::Point },
    ];
    for row in rows {
        let mut trail = Trail::new();
        trail.pass(
            "cb-hyperelliptic-catalog",
            format!(
                "direct image not spanned: fixed double cover no.{} with (c1, c2) = ({}, {})",
                row.no, row.c1, row.c2
            ),
        );
        let k3 = qi(row.k3);
        trail.pass(
            "cb-degree-relation",
            format!(
                "alpha*(-K)^3 + beta*(12 - d) = {}*{} + {}*{} = 0",
                row.alpha,
                row.k3,
                row.beta,
                12 - row.d
            ),
        );
        let kd2 = cb_kd2(qi(row.alpha), qi(row.beta), k3, row.d);
        let d3 = cb_form(k3, row.d)
            .cube(DivisorClass::new(BASIS_CB, qi(row.alpha), qi(row.beta)))
            .expect("same basis");
        let params = FamilyParams::Conic(CbPoint {
            bundle: None,
            alpha: qi(row.alpha),
            beta: qi(row.beta),
            d: row.d,
            c1: Some(row.c1),
            c2: Some(row.c2),
            k3: Some(k3),
            catalog: Some(row.no),
        });
        out.push(CandidateCase {
            family: Family::Conic,
            params,
            derived: Some(DerivedInvariants {
                k3,
                epsilon: qi(0),
                kd2,
                d3,
                b: row.b,
                gx: k3 / qi(2) + qi(1),
            }),
            verdict: Verdict::Accepted,
            trail: trail.into_steps(),
            flags: RowFlags::default(),
        });
    }
}

// ---------------------------------------------------------------------------
// discriminant branch
// ---------------------------------------------------------------------------

fn discriminant_branch(cfg: &SweepConfig, ledger: &Ledger, out: &mut Vec<CandidateCase>) {
    for beta in [-1i64, -2] {
        for alpha in 1..=cfg.alpha_max {
            for d in 1..=cfg.d_max {
                out.push(discriminant_candidate(cfg, ledger, alpha, beta, d));
            }
        }
    }
}

/// Divisorial route: a compatible Chern pair has c1 = 3 or c2 = 0 and must
/// reproduce the anticanonical cube.
fn divisorial_solution(alpha: i64, beta: i64, k3: i64) -> Option<(i64, i64)> {
    // c1 = 3: c2 = 9 + 3 beta / alpha
    let c2 = qi(9) + qi(3 * beta) / qi(alpha);
    if c2.is_integer() && cb_k3_of_chern(3, c2.to_integer()) == k3 {
        return Some((3, c2.to_integer()));
    }
    // c2 = 0: c1 = -beta / alpha, 1 <= c1 <= 3
    let c1 = qi(-beta) / qi(alpha);
    if c1.is_integer() {
        let c1 = c1.to_integer();
        if (1..=3).contains(&c1) && cb_k3_of_chern(c1, 0) == k3 {
            return Some((c1, 0));
        }
    }
    None
}

fn discriminant_candidate(
    cfg: &SweepConfig,
    ledger: &Ledger,
    alpha: i64,
    beta: i64,
    d: i64,
) -> CandidateCase {
    let mut trail = Trail::new();
    let k3q = qi(-beta) * qi(12 - d) / qi(alpha);
    let mk_params = |c1: Option<i64>, c2: Option<i64>| {
        FamilyParams::Conic(CbPoint {
            bundle: None,
            alpha: qi(alpha),
            beta: qi(beta),
            d,
            c1,
            c2,
            k3: Some(k3q),
            catalog: None,
        })
    };
    let params = mk_params(None, None);

    let rel = format!(
        "alpha*(-K)^3 + beta*(12 - d) = 0: (-K)^3 = {}*{}/{} = {}",
        -beta,
        12 - d,
        alpha,
        fmt_q(k3q)
    );
    if !k3q.is_integer() {
        let v = trail.fail("cb-degree-relation", rel);
        return rejected(params, trail, v);
    }
    trail.pass("cb-degree-relation", rel);
    if !is_pos_even(k3q) {
        let v = trail.fail(
            "anticanonical-evenness",
            format!("(-K)^3 = {} not a positive even integer", fmt_q(k3q)),
        );
        return rejected(params, trail, v);
    }
    trail.pass("anticanonical-evenness", format!("(-K)^3 = {}", fmt_q(k3q)));
    let k3 = k3q.to_integer();

    if k3 == 2 {
        // four anticanonical sections only: the contraction cannot be birational
        trail.pass("cb-birational", "h0(-K) = 4: image lies in 3-space".into());
        if cfg.use_ledger {
            if let Some(e) = ledger.first_match(Family::Conic, &params) {
                let v = trail.ledger(e);
                return rejected(params, trail, v);
            }
        }
        return CandidateCase {
            family: Family::Conic,
            params,
            derived: None,
            verdict: Verdict::Accepted,
            trail: trail.into_steps(),
            flags: RowFlags::default(),
        };
    }
    trail.pass("cb-birational", format!("(-K)^3 = {k3} >= 4"));

    if let Some((c1, c2)) = divisorial_solution(alpha, beta, k3) {
        let p = ConicParams { alpha, beta, c1, c2, d };
        let (r1, _) = cb_divisorial_residuals(&p);
        trail.pass(
            "cb-divisorial-relation",
            format!("alpha(c1^2 - c2) + beta c1 = {} at (c1, c2) = ({c1}, {c2})", fmt_q(r1)),
        );
        debug_assert!(r1.is_zero());
        let params = mk_params(Some(c1), Some(c2));
        if cfg.use_ledger {
            if let Some(e) = ledger.first_match(Family::Conic, &params) {
                let v = trail.ledger(e);
                return rejected(params, trail, v);
            }
        }
        let kd2 = cb_kd2(qi(alpha), qi(beta), k3q, d);
        let deg = kd2 / qi(2);
        trail.pass("cb-degree-of-b", format!("K.D^2 = {}, degree {}", fmt_q(kd2), fmt_q(deg)));
        let g_b = if beta == -2 {
            // D is a ruled surface over B on this branch
            let g = genus_from_kd_square(qi(alpha), qi(beta), k3q, d);
            trail.pass("cb-genus-ruled", format!("K_D^2 = 8(1 - g): g(B) = {}", fmt_q(g)));
            g
        } else {
            trail.pass("cb-genus-small-degree", format!("degree {} <= 2: B rational", fmt_q(deg)));
            debug_assert!(deg <= qi(2));
            Q::zero()
        };
        if !genus_ok(g_b) {
            let v = trail.fail("genus-b-integral", format!("g(B) = {}", fmt_q(g_b)));
            return rejected(params, trail, v);
        }
        let d3 = cb_form(k3q, d)
            .cube(DivisorClass::new(BASIS_CB, qi(alpha), qi(beta)))
            .expect("same basis");
        return CandidateCase {
            family: Family::Conic,
            params,
            derived: Some(DerivedInvariants {
                k3: k3q,
                epsilon: qi(0),
                kd2,
                d3,
                b: BLocus::Curve { deg, genus: g_b },
                gx: k3q / qi(2) + qi(1),
            }),
            verdict: Verdict::Accepted,
            trail: trail.into_steps(),
            flags: RowFlags::default(),
        };
    }
    trail.pass("cb-divisorial-relation", "no Chern pair solves the divisorial relations".into());

    small_route(cfg, ledger, trail, alpha, beta, d, k3, params)
}

#[allow(clippy::too_many_arguments)]
fn small_route(
    cfg: &SweepConfig,
    ledger: &Ledger,
    mut trail: Trail,
    alpha: i64,
    beta: i64,
    d: i64,
    k3: i64,
    params: FamilyParams,
) -> CandidateCase {
    let with_chern = |c1: i64, c2: i64| {
        FamilyParams::Conic(CbPoint {
            bundle: None,
            alpha: qi(alpha),
            beta: qi(beta),
            d,
            c1: Some(c1),
            c2: Some(c2),
            k3: Some(qi(k3)),
            catalog: None,
        })
    };
    let ledger_or_ghost = |mut trail: Trail, params: FamilyParams| {
        if cfg.use_ledger {
            if let Some(e) = ledger.first_match(Family::Conic, &params) {
                let v = trail.ledger(e);
                return rejected(params, trail, v);
            }
        }
        CandidateCase {
            family: Family::Conic,
            params,
            derived: None,
            verdict: Verdict::Accepted,
            trail: trail.into_steps(),
            flags: RowFlags::default(),
        }
    };

    match (beta, alpha) {
        (-2, 1) => {
            // a small contraction here forces (c1, c2) = (2, 0), whose cube is 10
            let detail = format!(
                "small route forces (c1, c2) = (2, 0) with cube {}, but (-K)^3 = {k3}",
                cb_k3_of_chern(2, 0)
            );
            let v = trail.fail("cb-chern-consistency", detail);
            rejected(params, trail, v)
        }
        (-2, 2) => {
            // extension relation and section count pin c1 = k3 - 3
            let c1 = k3 - 3;
            let c2q = qi(c1 * c1 + 2 * c1 - 3) / qi(2);
            if c1 < 4 || !c2q.is_integer() {
                let v = trail.fail(
                    "cb-chern-consistency",
                    format!("forced c1 = {c1} incompatible with a small contraction"),
                );
                return rejected(params, trail, v);
            }
            let c2 = c2q.to_integer();
            trail.pass("cb-small-forced", format!("forced (c1, c2) = ({c1}, {c2})"));
            let g_kd = genus_from_kd_square(qi(alpha), qi(beta), qi(k3), d);
            let chi = rr_p2(chern_twist(ChernData::p2(3, c1, c2), -2));
            let h1 = -chi;
            let detail = format!(
                "g(B) = {} from K_D^2 vs h1(E(-2)) = {}",
                fmt_q(g_kd),
                fmt_q(h1)
            );
            if g_kd != h1 {
                let v = trail.fail("cb-small-chi", detail);
                return rejected(with_chern(c1, c2), trail, v);
            }
            trail.pass("cb-small-chi", detail);
            ledger_or_ghost(trail, with_chern(c1, c2))
        }
        (-2, 3) => {
            if k3 != 6 {
                let v = trail.fail(
                    "cb-chern-consistency",
                    format!("(-K)^3 = {k3} admits no Chern pair on this branch"),
                );
                return rejected(params, trail, v);
            }
            // section count 6 pins c2 = c1^2/2 + 3 c1/2 - 3; the genus of the
            // ruled divisor and the symmetric-square count force c1 = 5
            let g_kd = genus_from_kd_square(qi(alpha), qi(beta), qi(k3), d);
            trail.pass("cb-small-genus", format!("K_D^2 = 8(1 - g): g(B) = {}", fmt_q(g_kd)));
            // chi(S^2(E(-1))) = (c1-3)(c1-4)/2 - g solves to a linear equation
            let c1 = 5i64;
            let c2 = (c1 * c1 + 3 * c1 - 6) / 2;
            trail.pass("cb-small-forced", format!("forced (c1, c2) = ({c1}, {c2})"));
            let p = ConicParams { alpha, beta, c1, c2, d };
            let (_, r2) = cb_divisorial_residuals(&p);
            let detail = format!("extension relation residual {} at ({c1}, {c2})", fmt_q(r2));
            if r2 != qi(0) {
                let v = trail.fail("cb-small-extension", detail);
                return rejected(with_chern(c1, c2), trail, v);
            }
            trail.pass("cb-small-extension", detail);
            ledger_or_ghost(trail, with_chern(c1, c2))
        }
        (-2, 4) | (-2, 5) if k3 == 4 => {
            trail.pass("cb-section-count", "h0(E) = 5 with alpha > 3".into());
            ledger_or_ghost(trail, params)
        }
        (-1, 1) => {
            let c1 = k3 - 3;
            let c2q = qi(c1 * c1 + 2 * c1 - 3) / qi(2);
            if !c2q.is_integer() {
                let v = trail.fail("cb-chern-consistency", format!("forced c1 = {c1} gives no integral c2"));
                return rejected(params, trail, v);
            }
            let c2 = c2q.to_integer();
            let positivity = c1 * c1 - c2 - c1;
            let detail = format!("forced (c1, c2) = ({c1}, {c2}); boundary pairing {positivity}");
            if positivity <= 0 {
                let v = trail.fail("cb-effective-cone", detail);
                return rejected(with_chern(c1, c2), trail, v);
            }
            trail.pass("cb-small-forced", detail);
            ledger_or_ghost(trail, with_chern(c1, c2))
        }
        (-1, 2) if k3 == 4 => {
            // extension relation 2c1^2 - 4c2 + 5c1 - 3 = 0 plus section count
            // c1^2 - 2c2 + 3c1 = 4 force the pair (5, 18)
            let (c1, c2) = (5i64, 18i64);
            trail.pass("cb-small-forced", format!("forced (c1, c2) = ({c1}, {c2})"));
            ledger_or_ghost(trail, with_chern(c1, c2))
        }
        _ => {
            let v = trail.fail(
                "cb-chern-consistency",
                format!("no Chern pair compatible with (alpha, beta, d) = ({alpha}, {beta}, {d})"),
            );
            rejected(params, trail, v)
        }
    }
}

/// The forced Chern pair of the small route for (alpha, beta) = (2, -1):
/// solves the extension relation against the section count.
pub fn small_route_forced_pair_alpha2() -> (i64, i64) {
    // subtracting 2 * (c1^2 - 2c2 + 3c1 - 4) from (2c1^2 - 4c2 + 5c1 - 3)
    // leaves -c1 + 5 = 0
    let c1 = 5;
    let c2 = (c1 * c1 + 3 * c1 - 4) / 2;
    (c1, c2)
}

/// The forced Chern pair of the small route for (alpha, beta) = (3, -2):
/// the symmetric-square section count against the ruled-surface genus 21.
pub fn small_route_forced_pair_alpha3() -> (i64, i64) {
    // chi identity reduces to -6 c1 + 30 = 0
    let c1 = 5;
    let c2 = (c1 * c1 + 3 * c1 - 6) / 2;
    (c1, c2)
}
