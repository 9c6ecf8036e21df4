//! Rank-2 Picard lattices: divisor classes and trilinear intersection forms.
//!
//! A divisor class is a pair of rational coordinates over a named two-element
//! basis; an intersection form is the symmetric trilinear form determined by
//! the four monomial triple products of the basis pair. The two blowup
//! geometries used by the enumeration sweeps get dedicated constructors.

use crate::rat::{qi, Q};
use num_traits::Zero;
use std::fmt;
use thiserror::Error;

/// Names the ordered basis a lattice computation works in. Classes over
/// different bases never mix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BasisId(pub &'static str);

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

/// Basis (pullback of the fundamental divisor, exceptional divisor) on a
/// blowup of a rank-1 Fano threefold.
pub const BASIS_BLOWUP: BasisId = BasisId("(phi*H, E)");
/// Basis (-K_X, fiber) on a del Pezzo fibration over the line.
pub const BASIS_DP: BasisId = BasisId("(-K, F)");
/// Basis (-K_X, pullback of a line) on a conic bundle over the plane.
pub const BASIS_CB: BasisId = BasisId("(-K, L)");

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("basis mismatch: {0} vs {1}")]
    BasisMismatch(BasisId, BasisId),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
}

/// A divisor class: two rational coordinates over a named basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DivisorClass {
    pub basis: BasisId,
    pub coeffs: (Q, Q),
}

impl DivisorClass {
    pub fn new(basis: BasisId, a: Q, b: Q) -> Self {
        DivisorClass { basis, coeffs: (a, b) }
    }

    pub fn scale(self, t: Q) -> Self {
        DivisorClass::new(self.basis, self.coeffs.0 * t, self.coeffs.1 * t)
    }

    pub fn try_add(self, other: Self) -> Result<Self, LatticeError> {
        if self.basis != other.basis {
            return Err(LatticeError::BasisMismatch(self.basis, other.basis));
        }
        Ok(DivisorClass::new(
            self.basis,
            self.coeffs.0 + other.coeffs.0,
            self.coeffs.1 + other.coeffs.1,
        ))
    }

    pub fn try_sub(self, other: Self) -> Result<Self, LatticeError> {
        self.try_add(other.scale(qi(-1)))
    }
}

impl std::ops::Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, other: Self) -> Self {
        self.try_add(other).expect("divisor class addition across bases")
    }
}

impl std::ops::Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, other: Self) -> Self {
        self.try_sub(other).expect("divisor class subtraction across bases")
    }
}

impl std::ops::Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> Self {
        self.scale(qi(-1))
    }
}

/// Symmetric trilinear intersection form on a rank-2 lattice, stored as the
/// four monomial triple products B1^3, B1^2 B2, B1 B2^2, B2^3.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntersectionForm {
    pub basis: BasisId,
    pub t300: Q,
    pub t210: Q,
    pub t120: Q,
    pub t030: Q,
}

impl IntersectionForm {
    pub fn new(basis: BasisId, t300: Q, t210: Q, t120: Q, t030: Q) -> Self {
        IntersectionForm { basis, t300, t210, t120, t030 }
    }

    /// Trilinear triple product of three classes. Symmetric in its arguments.
    pub fn triple(
        &self,
        d1: DivisorClass,
        d2: DivisorClass,
        d3: DivisorClass,
    ) -> Result<Q, LatticeError> {
        for d in [&d1, &d2, &d3] {
            if d.basis != self.basis {
                return Err(LatticeError::BasisMismatch(self.basis, d.basis));
            }
        }
        let (a1, b1) = d1.coeffs;
        let (a2, b2) = d2.coeffs;
        let (a3, b3) = d3.coeffs;
        Ok(a1 * a2 * a3 * self.t300
            + (a1 * a2 * b3 + a1 * b2 * a3 + b1 * a2 * a3) * self.t210
            + (a1 * b2 * b3 + b1 * a2 * b3 + b1 * b2 * a3) * self.t120
            + b1 * b2 * b3 * self.t030)
    }

    /// Cube of a single class.
    pub fn cube(&self, d: DivisorClass) -> Result<Q, LatticeError> {
        self.triple(d, d, d)
    }

    /// Square of `d1` against `d2`.
    pub fn square(&self, d1: DivisorClass, d2: DivisorClass) -> Result<Q, LatticeError> {
        self.triple(d1, d1, d2)
    }
}

/// Exceptional-divisor type of a point blowdown, written as the pair
/// (E, O_E(-E)).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointCase {
    /// (P^2, O(1)); the target is smooth.
    P2O1,
    /// (P^2, O(2)); the target is 2-Gorenstein.
    P2O2,
    /// (quadric, O(1)); the target is Gorenstein.
    Quadric,
}

impl PointCase {
    pub fn label(&self) -> &'static str {
        match self {
            PointCase::P2O1 => "P2_O1",
            PointCase::P2O2 => "P2_O2",
            PointCase::Quadric => "QUADRIC",
        }
    }

    /// Cube of the exceptional divisor for this case.
    pub fn e_cube(&self) -> i64 {
        match self {
            PointCase::P2O1 => 1,
            PointCase::P2O2 => 4,
            PointCase::Quadric => 2,
        }
    }
}

/// Intersection form in the basis (phi*H, E) on the blowup of a rank-1 Fano
/// threefold of index `r` and degree `h3` along a smooth curve of degree `d`
/// and genus `g_c`.
///
/// The monomials are H^3 = h3, H^2.E = 0, H.E^2 = -d and
/// E^3 = -(r d + 2 g_c - 2); the sign of E^3 is fixed so that the cube of
/// r phi*H - E equals r^3 H^3 - 2 r d + 2 g_c - 2.
pub fn blowup_curve_form(r: i64, h3: i64, d: i64, g_c: i64) -> Result<IntersectionForm, LatticeError> {
    if !(1..=4).contains(&r) {
        return Err(LatticeError::BadParameter(format!("index r = {r} not in 1..=4")));
    }
    if h3 < 1 || d < 1 || g_c < 0 {
        return Err(LatticeError::BadParameter(format!(
            "need H^3 >= 1, d >= 1, g_C >= 0; got ({h3}, {d}, {g_c})"
        )));
    }
    Ok(IntersectionForm::new(
        BASIS_BLOWUP,
        qi(h3),
        Q::zero(),
        qi(-d),
        qi(-(r * d + 2 * g_c - 2)),
    ))
}

/// Intersection form in the basis (phi*H, E) on the blowup of a rank-1 Fano
/// threefold of degree `h3` at a point, with E^3 determined by the case.
pub fn blowup_point_form(case: PointCase, h3: i64) -> Result<IntersectionForm, LatticeError> {
    if h3 < 1 {
        return Err(LatticeError::BadParameter(format!("need H^3 >= 1, got {h3}")));
    }
    Ok(IntersectionForm::new(
        BASIS_BLOWUP,
        qi(h3),
        Q::zero(),
        Q::zero(),
        qi(case.e_cube()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::q;

    fn cls(a: i64, b: i64) -> DivisorClass {
        DivisorClass::new(BASIS_BLOWUP, qi(a), qi(b))
    }

    #[test]
    fn anticanonical_cube_on_curve_blowup() {
        // index 2, degree 2, blown up along a conic
        let f = blowup_curve_form(2, 2, 2, 0).unwrap();
        let mk = cls(2, -1);
        assert_eq!(f.cube(mk).unwrap(), qi(6));
        // H^2.E vanishes
        let h = cls(1, 0);
        let e = cls(0, 1);
        assert_eq!(f.triple(h, h, e).unwrap(), qi(0));
        // (H - E)^3 expands to H^3 + 3 H.E^2 - E^3
        assert_eq!(f.cube(cls(1, -1)).unwrap(), qi(-2));
    }

    #[test]
    fn e_cube_values() {
        assert_eq!(blowup_curve_form(2, 2, 2, 0).unwrap().t030, qi(-2));
        // septic of genus 6 on the projective space
        let f = blowup_curve_form(4, 1, 7, 6).unwrap();
        assert_eq!(f.cube(cls(4, -1)).unwrap(), qi(18));
        // degree-1 curve, genus 0, index 1
        assert_eq!(blowup_curve_form(1, 2, 1, 0).unwrap().t030, qi(1));
    }

    #[test]
    fn point_blowup_cubes() {
        let f = blowup_point_form(PointCase::P2O1, 2).unwrap();
        assert_eq!(f.cube(cls(2, -2)).unwrap(), qi(8));
        let f = blowup_point_form(PointCase::Quadric, 4).unwrap();
        assert_eq!(f.cube(cls(1, -1)).unwrap(), qi(2));
        let f = blowup_point_form(PointCase::P2O2, 20).unwrap();
        assert_eq!(f.cube(cls(1, -1)).unwrap() / qi(8), qi(2));
        // same number computed with honest half-integer coordinates
        let half = DivisorClass::new(BASIS_BLOWUP, q(1, 2), q(-1, 2));
        assert_eq!(f.cube(half).unwrap(), qi(2));
    }

    #[test]
    fn basis_mismatch_is_reported() {
        let f = blowup_curve_form(2, 2, 2, 0).unwrap();
        let foreign = DivisorClass::new(BASIS_DP, qi(1), qi(0));
        let err = f.triple(foreign, foreign, foreign).unwrap_err();
        assert_eq!(err, LatticeError::BasisMismatch(BASIS_BLOWUP, BASIS_DP));
        let msg = err.to_string();
        assert!(msg.contains("(phi*H, E)") && msg.contains("(-K, F)"));
    }

    #[test]
    fn parameter_range() {
        assert!(blowup_curve_form(5, 1, 1, 0).is_err());
        assert!(blowup_curve_form(1, 0, 1, 0).is_err());
        assert!(blowup_curve_form(1, 1, 1, -1).is_err());
        assert!(blowup_point_form(PointCase::P2O1, 0).is_err());
    }
}
