//! Closed-form evaluators for the derived invariants of each contraction
//! family: anticanonical cube, epsilon, K.D^2, D^3, degree and genus of the
//! contracted-image curve B, and the family-specific genus and consistency
//! relations that drive the elimination filters.

use crate::lattice::PointCase;
use crate::rat::{fmt_q, is_int, q, qi, Q};
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantError {
    #[error("anticanonical cube must be a positive even integer, got {0}")]
    BadAnticanonicalCube(String),
    #[error("relation {relation} violated: {lhs} != {rhs}")]
    RelationViolated { relation: &'static str, lhs: String, rhs: String },
    #[error("unsupported anticanonical cube {0} for this constraint")]
    UnsupportedCube(i64),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
}

/// Image of the contracted divisor in the anticanonical model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BLocus {
    /// D maps onto a curve of the given degree and genus.
    Curve { deg: Q, genus: Q },
    /// D maps to a point.
    Point,
}

impl BLocus {
    pub fn deg_genus(&self) -> Option<(Q, Q)> {
        match self {
            BLocus::Curve { deg, genus } => Some((*deg, *genus)),
            BLocus::Point => None,
        }
    }
}

/// The derived numerical data of one candidate threefold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DerivedInvariants {
    /// (-K_X)^3.
    pub k3: Q,
    /// epsilon, the normalized positivity defect of D against the fibers.
    pub epsilon: Q,
    /// K_X . D^2.
    pub kd2: Q,
    /// D^3.
    pub d3: Q,
    /// Degree and genus of B = image of D, or a point.
    pub b: BLocus,
    /// Genus of X: (-K_X)^3 / 2 + 1.
    pub gx: Q,
}

/// Genus of X from the anticanonical cube: g = k3/2 + 1.
pub fn x_genus(k3: i64) -> Result<i64, InvariantError> {
    if k3 <= 0 || k3 % 2 != 0 {
        return Err(InvariantError::BadAnticanonicalCube(k3.to_string()));
    }
    Ok(k3 / 2 + 1)
}

// ---------------------------------------------------------------------------
// del Pezzo fibrations
// ---------------------------------------------------------------------------

/// Parameters of a del Pezzo fibration candidate: D = -alpha K_X - beta F.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DelPezzoParams {
    pub alpha: Q,
    pub beta: Q,
    /// Anticanonical degree of the general fiber; 7 never occurs.
    pub kf2: i64,
}

/// Anticanonical cube from the degree relation alpha (-K)^3 = beta K_F^2.
pub fn dp_k3(p: &DelPezzoParams) -> Q {
    assert!(!p.alpha.is_zero());
    p.beta * qi(p.kf2) / p.alpha
}

/// Residual of the consistency relation between the two genus computations
/// on the beta = 2 branch: (alpha^3 - alpha)/12 * k3 - 2 alpha + 2.
/// Vanishes identically for alpha = 1.
pub fn dp_consistency(alpha: i64, k3: Q) -> Q {
    q(alpha * alpha * alpha - alpha, 12) * k3 - qi(2 * alpha) + qi(2)
}

/// The two independent genus computations for B on the beta = 2 branch:
/// the section-count route and the adjunction route. They agree exactly
/// when `dp_consistency` vanishes.
pub fn dp_genus_beta2(alpha: Q, k3: Q) -> (Q, Q) {
    let g_sections =
        (alpha * alpha * alpha / qi(3) - alpha * alpha / qi(4) - alpha / qi(12)) * k3
            - qi(2) * alpha
            + qi(3);
    let g_adjunction = alpha * alpha * (alpha - qi(1)) / qi(4) * k3 + qi(1);
    (g_sections, g_adjunction)
}

/// Genus of B on the beta = 1 branch (section-count route; the adjunction
/// route is unavailable there because D_F covers B twice).
pub fn dp_genus_beta1(alpha: Q, k3: Q) -> Q {
    k3 * (alpha * alpha * alpha / qi(3) - alpha * alpha / qi(4) - alpha / qi(12))
        - qi(2) * alpha
        + qi(2)
}

// ---------------------------------------------------------------------------
// conic bundles
// ---------------------------------------------------------------------------

/// Parameters of a conic bundle candidate with nonempty discriminant:
/// D = alpha(-K_X) + phi^* O(beta), discriminant degree d, and the Chern
/// numbers of the direct image of -K_X.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConicParams {
    pub alpha: i64,
    /// -1 or -2.
    pub beta: i64,
    pub c1: i64,
    pub c2: i64,
    /// Degree of the discriminant curve.
    pub d: i64,
}

/// Anticanonical cube from alpha (-K)^3 + beta (12 - d) = 0.
pub fn cb_k3(p: &ConicParams) -> Q {
    assert!(p.alpha >= 1);
    qi(-p.beta) * qi(12 - p.d) / qi(p.alpha)
}

/// Residuals of the two relations a divisorial extension of D must satisfy:
/// alpha(c1^2 - c2) + beta c1 = 0 and
/// 2 alpha (c1^2 - c2) + (alpha(3 - c1) + 2 beta) c1 + (3 - c1) beta = 0.
pub fn cb_divisorial_residuals(p: &ConicParams) -> (Q, Q) {
    let (a, b, c1, c2) = (qi(p.alpha), qi(p.beta), qi(p.c1), qi(p.c2));
    let disc = c1 * c1 - c2;
    let r1 = a * disc + b * c1;
    let r2 = qi(2) * a * disc + (a * (qi(3) - c1) + qi(2) * b) * c1 + (qi(3) - c1) * b;
    (r1, r2)
}

/// Anticanonical cube of the fourfold ambient P(E) data, expressed through
/// the Chern numbers: 2(c1^2 - c2) + (3 - c1) c1. Used to cross-check a
/// candidate (c1, c2) against the cube computed from (alpha, beta, d).
pub fn cb_k3_of_chern(c1: i64, c2: i64) -> i64 {
    2 * (c1 * c1 - c2) + (3 - c1) * c1
}

// ---------------------------------------------------------------------------
// blowdown to a curve
// ---------------------------------------------------------------------------

/// Parameters of a curve-blowup candidate: X is the blowup of a rank-1 Fano
/// threefold of index `r`, degree `h3`, along a curve of degree `d` and
/// genus `g_c`; D = alpha phi^*H - beta E.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowupCurveParams {
    pub r: i64,
    pub h3: i64,
    pub d: i64,
    pub g_c: i64,
    pub alpha: i64,
    pub beta: i64,
}

impl BlowupCurveParams {
    pub fn epsilon(&self) -> i64 {
        self.beta * self.r - self.alpha
    }
}

/// Closed-form invariants for a curve blowup. Verifies the three divisor
/// relations before returning; a violation is an error naming the relation.
pub fn bc_invariants(p: &BlowupCurveParams) -> Result<DerivedInvariants, InvariantError> {
    let (r, h3, d, g_c) = (p.r, p.h3, p.d, p.g_c);
    let (alpha, beta) = (p.alpha, p.beta);
    if beta <= 0 || alpha <= 0 {
        return Err(InvariantError::BadParameter(format!(
            "alpha, beta must be positive, got ({alpha}, {beta})"
        )));
    }
    let eps = p.epsilon();
    let k3 = qi(r * r * r * h3 - 2 * r * d + 2 * g_c - 2);

    // degree relation: beta (-K)^3 = eps (r^2 H^3 - d)
    let lhs1 = qi(beta) * k3;
    let rhs1 = qi(eps) * qi(r * r * h3 - d);
    if lhs1 != rhs1 {
        return Err(InvariantError::RelationViolated {
            relation: "degree relation",
            lhs: fmt_q(lhs1),
            rhs: fmt_q(rhs1),
        });
    }
    // genus relation: beta (2 g_C - 2) = (beta r + alpha) d - alpha r^2 H^3
    let lhs3 = qi(beta) * qi(2 * g_c - 2);
    let rhs3 = qi((beta * r + alpha) * d - alpha * r * r * h3);
    if lhs3 != rhs3 {
        return Err(InvariantError::RelationViolated {
            relation: "genus relation",
            lhs: fmt_q(lhs3),
            rhs: fmt_q(rhs3),
        });
    }

    let kd2 = qi(eps) * qi(alpha * r * h3 - beta * d);
    let d3 = qi(alpha * alpha * alpha * h3)
        + qi(beta * beta) * qi(beta * r - 3 * alpha) * qi(d)
        + qi(2 * beta * beta * beta) * qi(g_c - 1);
    let deg_b = kd2 / qi(2);
    let g_b = qi(1) - qi(2 * alpha) / qi(r) + qi(eps * d) / qi(12) - kd2 / qi(4) - d3 / qi(6);
    Ok(DerivedInvariants {
        k3,
        epsilon: qi(eps),
        kd2,
        d3,
        b: BLocus::Curve { deg: deg_b, genus: g_b },
        gx: k3 / qi(2) + qi(1),
    })
}

/// Which displayed complete-intersection (or double-cover) constraint a
/// small-cube candidate is tested against. The two shapes for cube 6 are
/// tried disjunctively because the intersection type is not known a priori.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CiConstraint {
    /// Cube 2: double cover of the projective space.
    DoubleCover,
    /// Cube 4: quartic model.
    Quartic,
    /// Cube 6: type (cubic through B twice, quadric through B once).
    QuadricCubicA,
    /// Cube 6: type (cubic through B once, quadric through B twice).
    QuadricCubicB,
    /// Cube 8: three quadrics.
    ThreeQuadrics,
}

impl CiConstraint {
    pub fn cube(&self) -> i64 {
        match self {
            CiConstraint::DoubleCover => 2,
            CiConstraint::Quartic => 4,
            CiConstraint::QuadricCubicA | CiConstraint::QuadricCubicB => 6,
            CiConstraint::ThreeQuadrics => 8,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            CiConstraint::DoubleCover => "ci-double-cover",
            CiConstraint::Quartic => "ci-quartic",
            CiConstraint::QuadricCubicA => "ci-quadric-cubic-a",
            CiConstraint::QuadricCubicB => "ci-quadric-cubic-b",
            CiConstraint::ThreeQuadrics => "ci-three-quadrics",
        }
    }

    pub fn for_cube(k3: i64) -> &'static [CiConstraint] {
        match k3 {
            2 => &[CiConstraint::DoubleCover],
            4 => &[CiConstraint::Quartic],
            6 => &[CiConstraint::QuadricCubicA, CiConstraint::QuadricCubicB],
            8 => &[CiConstraint::ThreeQuadrics],
            _ => &[],
        }
    }
}

/// Residual eps^3 H^3 - RHS of the selected ambient-model constraint for a
/// curve blowup. A small-cube candidate survives iff some admissible
/// constraint has residual zero.
pub fn bc_ci_residual(
    k3: i64,
    which: CiConstraint,
    eps: i64,
    h3: i64,
    beta: i64,
    deg_b: Q,
    g_b: Q,
) -> Result<Q, InvariantError> {
    if which.cube() != k3 {
        return Err(InvariantError::UnsupportedCube(k3));
    }
    let b3 = qi(beta * beta * beta);
    let rhs = match which {
        CiConstraint::DoubleCover => qi(2) * b3 - qi(6 * beta - 8) * deg_b + qi(4) * (g_b - qi(1)),
        CiConstraint::Quartic => qi(4) * b3 - qi(6 * beta - 6) * deg_b + qi(4) * (g_b - qi(1)),
        CiConstraint::QuadricCubicA => {
            qi(6) * b3 - qi(6 * beta - 5) * deg_b + qi(4) * (g_b - qi(1))
        }
        CiConstraint::QuadricCubicB => {
            qi(6) * b3 - qi(6 * beta - 4) * deg_b + qi(4) * (g_b - qi(1))
        }
        CiConstraint::ThreeQuadrics => {
            qi(8) * b3 - qi(6 * beta - 4) * deg_b + qi(4) * (g_b - qi(1))
        }
    };
    Ok(qi(eps * eps * eps * h3) - rhs)
}

// ---------------------------------------------------------------------------
// blowdown to a point
// ---------------------------------------------------------------------------

/// Parameters of a point-blowup candidate; beta is determined by the case
/// relation and is verified by `bp_invariants`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowupPointParams {
    pub case: PointCase,
    pub r: i64,
    pub h3: i64,
    pub alpha: Q,
    pub beta: Q,
}

/// Closed-form invariants for a point blowup. The case relation between
/// beta, alpha, r, H^3 is verified; epsilon and the genus of B follow the
/// case's own formulas (for the quadric and 2-Gorenstein cases with fiber
/// degree one, the genus comes from K_D^2 = 8(1 - g_B)).
pub fn bp_invariants(p: &BlowupPointParams) -> Result<DerivedInvariants, InvariantError> {
    let (r, h3) = (qi(p.r), qi(p.h3));
    let (alpha, beta) = (p.alpha, p.beta);
    let check = |relation: &'static str, lhs: Q, rhs: Q| -> Result<(), InvariantError> {
        if lhs != rhs {
            Err(InvariantError::RelationViolated { relation, lhs: fmt_q(lhs), rhs: fmt_q(rhs) })
        } else {
            Ok(())
        }
    };
    match p.case {
        PointCase::P2O1 => {
            check("beta relation", beta, alpha * r * r * h3 / qi(4))?;
            let k3 = r * r * r * h3 - qi(8);
            let eps = beta * r - qi(2) * alpha;
            let kd2 = alpha * alpha * r * h3 / qi(8) * k3;
            let d3 = alpha * alpha * alpha * h3 - beta * beta * beta;
            let g_b = qi(1) - qi(2) * alpha / r
                + alpha * alpha * h3 * (qi(3) * r - qi(2) * alpha) / qi(12)
                + beta * beta * (beta - qi(3)) / qi(6);
            Ok(DerivedInvariants {
                k3,
                epsilon: eps,
                kd2,
                d3,
                b: BLocus::Curve { deg: kd2 / qi(2), genus: g_b },
                gx: k3 / qi(2) + qi(1),
            })
        }
        PointCase::P2O2 => {
            check("beta relation", qi(4) * beta, alpha * r * r * h3)?;
            let k3 = (r * r * r * h3 - qi(4)) / qi(8);
            let eps = qi(2) * (beta * r - alpha);
            let kd2 = qi(2) * beta * beta - r * alpha * alpha * h3 / qi(2);
            let d3 = alpha * alpha * alpha * h3 - qi(4) * beta * beta * beta;
            // fiber degree one: D is a ruled surface over B
            let g_b = qi(1) - (qi(2) * kd2 + d3) / qi(8);
            Ok(DerivedInvariants {
                k3,
                epsilon: eps,
                kd2,
                d3,
                b: BLocus::Curve { deg: kd2 / qi(2), genus: g_b },
                gx: k3 / qi(2) + qi(1),
            })
        }
        PointCase::Quadric => {
            check("beta relation", beta, alpha * r * r * h3 / qi(2))?;
            let k3 = r * r * r * h3 - qi(2);
            let eps = beta * r - alpha;
            let kd2 = alpha * alpha * r * h3 / qi(2) * k3;
            let d3 = alpha * alpha * alpha * h3 - qi(2) * beta * beta * beta;
            let deg_b = kd2 / qi(2);
            let g_b = if eps == qi(2) {
                // fiber degree one: ruled surface over B
                qi(1) - (qi(2) * kd2 + d3) / qi(8)
            } else {
                // epsilon = 1 leaves a degree-2 image, hence a rational curve
                debug_assert!(deg_b <= qi(2));
                Q::zero()
            };
            Ok(DerivedInvariants {
                k3,
                epsilon: eps,
                kd2,
                d3,
                b: BLocus::Curve { deg: deg_b, genus: g_b },
                gx: k3 / qi(2) + qi(1),
            })
        }
    }
}

/// Residual of the ambient-model constraint for a point blowup on the
/// smooth-target case, keyed by the anticanonical cube (2, 4 or 8).
pub fn bp_ci_residual(
    k3: i64,
    eps: Q,
    h3: i64,
    beta: Q,
    deg_b: Q,
    g_b: Q,
) -> Result<Q, InvariantError> {
    let b3 = beta * beta * beta;
    let rhs = match k3 {
        2 => qi(2) * b3 - qi(8) * (qi(3) * beta - qi(8)) * deg_b + qi(32) * (g_b - qi(1)),
        4 => qi(4) * b3 - qi(24) * (beta - qi(2)) * deg_b + qi(32) * (g_b - qi(1)),
        8 => qi(8) * b3 - qi(8) * (qi(3) * beta - qi(4)) * deg_b + qi(32) * (g_b - qi(1)),
        other => return Err(InvariantError::UnsupportedCube(other)),
    };
    Ok(eps * eps * eps * qi(h3) - rhs)
}

// ---------------------------------------------------------------------------
// blowdown of a curve with D contracted to a point
// ---------------------------------------------------------------------------

/// One member of the family where a curve blowup has its divisor contracted
/// to a point: C is the complete intersection of a surface of degree r' < r
/// with an anticanonical member.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivpointRow {
    pub r: i64,
    pub rprime: i64,
    pub h3: i64,
    pub k3: i64,
    pub d: i64,
    pub g_c: i64,
    pub alpha: i64,
    pub beta: i64,
}

/// Invariants of the D-to-point family member for (r, r', H^3).
pub fn divpoint_row(r: i64, rprime: i64, h3: i64) -> Result<DivpointRow, InvariantError> {
    if !(1 <= rprime && rprime < r) {
        return Err(InvariantError::BadParameter(format!("need 1 <= r' < r, got r'={rprime}, r={r}")));
    }
    let k3 = r * (r - rprime) * (r - rprime) * h3;
    let d = r * rprime * h3;
    let two_gc = 2 + r * rprime * rprime * h3;
    if two_gc % 2 != 0 {
        return Err(InvariantError::BadParameter(format!(
            "genus of C not integral for (r, r', H^3) = ({r}, {rprime}, {h3})"
        )));
    }
    Ok(DivpointRow { r, rprime, h3, k3, d, g_c: two_gc / 2, alpha: rprime, beta: 1 })
}

impl DivpointRow {
    pub fn derived(&self) -> DerivedInvariants {
        let k3 = qi(self.k3);
        // D = r' phi*H - E, so D^3 = r'^3 H^3 - 3 r' d + (r d + 2 g_C - 2)
        DerivedInvariants {
            k3,
            epsilon: qi(self.r - self.rprime),
            kd2: Q::zero(),
            d3: qi(self.alpha * self.alpha * self.alpha * self.h3 - 3 * self.alpha * self.d
                + self.r * self.d
                + 2 * self.g_c
                - 2),
            b: BLocus::Point,
            gx: k3 / qi(2) + qi(1),
        }
    }
}

/// K_D^2 of the contracted divisor: 2 K.D^2 + D^3.
pub fn kd_square(inv: &DerivedInvariants) -> Q {
    qi(2) * inv.kd2 + inv.d3
}

/// True if the curve-blowup invariants satisfy the ruled-surface identity
/// D^3 = 2 eps d - 48 alpha / r required when eps = 2.
pub fn ruled_surface_d3_holds(p: &BlowupCurveParams, inv: &DerivedInvariants) -> bool {
    inv.d3 == qi(2 * p.epsilon() * p.d) - qi(48 * p.alpha) / qi(p.r)
}

/// Convenience: a rational that must be a nonnegative integer to survive
/// a genus filter.
pub fn genus_ok(g: Q) -> bool {
    is_int(g) && !g.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn x_genus_examples() {
        assert_eq!(x_genus(2).unwrap(), 2);
        assert_eq!(x_genus(4).unwrap(), 3);
        assert_eq!(x_genus(22).unwrap(), 12);
        assert!(x_genus(3).is_err());
        assert!(x_genus(0).is_err());
        assert!(x_genus(-2).is_err());
    }

    #[test]
    fn dp_k3_examples() {
        let k3 = |a: Q, b: i64, kf2: i64| dp_k3(&DelPezzoParams { alpha: a, beta: qi(b), kf2 });
        assert_eq!(k3(qi(1), 2, 4), qi(8));
        assert_eq!(k3(q(1, 2), 2, 8), qi(32));
        assert_eq!(k3(qi(3), 2, 3), qi(2));
    }

    #[test]
    fn dp_consistency_examples() {
        for k3 in [2, 4, 8, 16] {
            assert_eq!(dp_consistency(1, qi(k3)), qi(0));
        }
        assert_eq!(dp_consistency(2, qi(4)), qi(0));
        assert_eq!(dp_consistency(3, qi(2)), qi(0));
        assert_ne!(dp_consistency(2, qi(2)), qi(0));
    }

    #[test]
    fn dp_genus_examples() {
        assert_eq!(dp_genus_beta2(qi(2), qi(4)), (qi(5), qi(5)));
        assert_eq!(dp_genus_beta2(qi(3), qi(2)), (qi(10), qi(10)));
        assert_eq!(dp_genus_beta2(qi(1), qi(8)), (qi(1), qi(1)));
        assert_eq!(dp_genus_beta1(qi(1), qi(4)), qi(0));
        assert_eq!(dp_genus_beta1(qi(2), qi(2)), qi(1));
        assert_eq!(dp_genus_beta1(qi(3), qi(2)), qi(9));
        assert_eq!(dp_genus_beta1(qi(4), qi(2)), qi(28));
    }

    #[test]
    fn cb_k3_examples() {
        let p = |alpha, beta, d| ConicParams { alpha, beta, c1: 0, c2: 0, d };
        assert_eq!(cb_k3(&p(1, -1, 8)), qi(4));
        assert_eq!(cb_k3(&p(1, -2, 7)), qi(10));
        assert_eq!(cb_k3(&p(3, -2, 3)), qi(6));
    }

    #[test]
    fn cb_divisorial_examples() {
        let res = |alpha, beta, c1, c2| {
            cb_divisorial_residuals(&ConicParams { alpha, beta, c1, c2, d: 0 })
        };
        assert_eq!(res(1, -1, 3, 6), (qi(0), qi(0)));
        assert_eq!(res(2, -2, 3, 6).0, qi(0));
        assert_eq!(res(1, -1, 1, 1).0, qi(-1));
        // the forced small-branch pair for alpha = 3, beta = -2 fails the
        // extension relation with residual exactly 2
        assert_eq!(res(3, -2, 5, 17).1, qi(2));
    }

    #[test]
    fn bc_invariants_table_rows() {
        let inv = bc_invariants(&BlowupCurveParams { r: 2, h3: 2, d: 2, g_c: 0, alpha: 1, beta: 1 })
            .unwrap();
        assert_eq!(inv.k3, qi(6));
        assert_eq!(inv.epsilon, qi(1));
        assert_eq!(inv.kd2, qi(2));
        assert_eq!(inv.d3, qi(-2));
        assert_eq!(inv.b, BLocus::Curve { deg: qi(1), genus: qi(0) });

        let inv = bc_invariants(&BlowupCurveParams { r: 4, h3: 1, d: 7, g_c: 6, alpha: 2, beta: 1 })
            .unwrap();
        assert_eq!(inv.k3, qi(18));
        assert_eq!(inv.epsilon, qi(2));
        assert_eq!(inv.b, BLocus::Curve { deg: qi(1), genus: qi(0) });

        // the index-2 degree-4 target blown up along a (10, 6)-curve
        let inv = bc_invariants(&BlowupCurveParams { r: 2, h3: 4, d: 10, g_c: 6, alpha: 5, beta: 3 })
            .unwrap();
        assert_eq!(inv.k3, qi(2));
        assert_eq!(inv.b, BLocus::Curve { deg: qi(5), genus: qi(1) });
    }

    #[test]
    fn bc_invariants_rejects_inconsistent_data() {
        let err = bc_invariants(&BlowupCurveParams { r: 2, h3: 2, d: 2, g_c: 1, alpha: 1, beta: 1 })
            .unwrap_err();
        match err {
            InvariantError::RelationViolated { relation, .. } => {
                assert_eq!(relation, "genus relation")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn bc_ci_residual_examples() {
        // the accepted quartic row on the quadric threefold
        let r = bc_ci_residual(4, CiConstraint::Quartic, 1, 2, 2, qi(5), qi(1)).unwrap();
        assert_eq!(r, qi(0));
        // quartic constraint fails for the degree-12 index-1 configuration
        let r = bc_ci_residual(4, CiConstraint::Quartic, 1, 12, 3, qi(3), qi(0)).unwrap();
        assert_ne!(r, qi(0));
        // double-cover constraint fails at (eps, H3, beta) = (1, 3, 3)
        let r = bc_ci_residual(2, CiConstraint::DoubleCover, 1, 3, 3, qi(6), qi(3)).unwrap();
        assert_eq!(r, qi(1));
        assert!(bc_ci_residual(10, CiConstraint::Quartic, 1, 1, 1, qi(1), qi(0)).is_err());
    }

    #[test]
    fn bp_invariants_table_rows() {
        let inv = bp_invariants(&BlowupPointParams {
            case: PointCase::P2O1,
            r: 2,
            h3: 3,
            alpha: qi(1),
            beta: qi(3),
        })
        .unwrap();
        assert_eq!(inv.k3, qi(16));
        assert_eq!(inv.epsilon, qi(4));
        assert_eq!(inv.kd2, qi(12));
        assert_eq!(inv.b, BLocus::Curve { deg: qi(6), genus: qi(1) });

        let inv = bp_invariants(&BlowupPointParams {
            case: PointCase::Quadric,
            r: 1,
            h3: 4,
            alpha: qi(1),
            beta: qi(2),
        })
        .unwrap();
        assert_eq!(inv.k3, qi(2));
        assert_eq!(inv.epsilon, qi(1));
        assert_eq!(inv.b, BLocus::Curve { deg: qi(2), genus: qi(0) });

        let inv = bp_invariants(&BlowupPointParams {
            case: PointCase::P2O2,
            r: 1,
            h3: 20,
            alpha: q(1, 2),
            beta: q(5, 2),
        })
        .unwrap();
        assert_eq!(inv.k3, qi(2));
        assert_eq!(inv.kd2, qi(10));
        assert_eq!(inv.b, BLocus::Curve { deg: qi(5), genus: qi(6) });

        // beta relation is verified
        assert!(bp_invariants(&BlowupPointParams {
            case: PointCase::P2O1,
            r: 2,
            h3: 3,
            alpha: qi(1),
            beta: qi(2),
        })
        .is_err());
    }

    #[test]
    fn bp_ci_residual_examples() {
        assert_ne!(bp_ci_residual(4, qi(1), 12, qi(3), qi(3), qi(0)).unwrap(), qi(0));
        assert_ne!(bp_ci_residual(2, qi(1), 10, qi(5), qi(5), qi(2)).unwrap(), qi(0));
        assert_ne!(bp_ci_residual(8, qi(2), 16, qi(4), qi(8), qi(3)).unwrap(), qi(0));
        assert!(bp_ci_residual(6, qi(1), 1, qi(1), qi(1), qi(0)).is_err());
    }

    #[test]
    fn divpoint_examples() {
        let row = divpoint_row(2, 1, 2).unwrap();
        assert_eq!((row.k3, row.d, row.g_c), (4, 4, 3));
        let row = divpoint_row(3, 1, 2).unwrap();
        assert_eq!((row.k3, row.d, row.g_c), (24, 6, 4));
        let row = divpoint_row(4, 2, 1).unwrap();
        assert_eq!((row.k3, row.d, row.g_c), (16, 8, 5));
        assert!(divpoint_row(2, 2, 1).is_err());
    }
}
