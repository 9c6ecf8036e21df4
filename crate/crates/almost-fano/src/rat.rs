//! Exact rational scalars.
//!
//! Every numeric quantity in this crate is an exact rational; no floating
//! point is used anywhere. Half-integers occur as first-class values (the
//! quadric-fibration branch and the 2-Gorenstein point blowdown both need
//! coefficients in (1/2)Z), so the scalar type is a rational, not an integer.

use num_rational::Rational64;
use num_traits::{Signed, Zero};

/// The universal scalar: an exact rational in lowest terms, denominator > 0.
pub type Q = Rational64;

/// Rational from numerator and denominator.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(num, den)
}

/// Rational from an integer.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

/// True if `x` is an integer.
pub fn is_int(x: Q) -> bool {
    x.is_integer()
}

/// True if `x` is a nonnegative integer.
pub fn is_nonneg_int(x: Q) -> bool {
    x.is_integer() && !x.is_negative()
}

/// True if `x` is a positive even integer.
pub fn is_pos_even(x: Q) -> bool {
    x.is_integer() && x.is_positive() && x.to_integer() % 2 == 0
}

/// Renders `p/q`, or plain `p` for integers.
pub fn fmt_q(x: Q) -> String {
    if x.is_integer() {
        x.to_integer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_q(s: &str) -> Result<Q, String> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
        let d: i64 = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
        if d == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Q::new(n, d))
    } else {
        let n: i64 = s.parse().map_err(|_| format!("bad rational {s:?}"))?;
        Ok(qi(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let x = q(6, -4);
        assert_eq!(*x.numer(), -3);
        assert_eq!(*x.denom(), 2);
        assert_eq!(fmt_q(x), "-3/2");
        assert_eq!(fmt_q(qi(7)), "7");
    }

    #[test]
    fn parse_roundtrip() {
        for s in ["5", "-3", "1/2", "-7/3", "22"] {
            let v = parse_q(s).unwrap();
            assert_eq!(fmt_q(v), s);
        }
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn evenness_predicate() {
        assert!(is_pos_even(qi(2)));
        assert!(!is_pos_even(qi(3)));
        assert!(!is_pos_even(qi(0)));
        assert!(!is_pos_even(q(1, 2)));
        assert!(!is_pos_even(qi(-4)));
    }
}
