//! Chern data of bundles on the line and the plane, with the
//! Euler-characteristic evaluators the case analysis relies on.
//!
//! Only chi-level information is needed: rank, c1, c2. The closed form for
//! the second symmetric power of a rank-3 bundle was derived once from the
//! splitting principle (six Chern roots 2a, 2b, 2c, a+b, a+c, b+c) and is
//! frozen here; the derivation oracle lives in the test suite.

use crate::rat::{q, qi, Q};
use thiserror::Error;

/// Base surface or curve carrying the bundle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Base {
    P1,
    P2,
}

/// Rank and the first two Chern numbers of a bundle; `c2` is ignored on P^1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChernData {
    pub base: Base,
    pub rank: i64,
    pub c1: i64,
    pub c2: i64,
}

impl ChernData {
    pub fn p2(rank: i64, c1: i64, c2: i64) -> Self {
        assert!(rank >= 1, "rank must be positive");
        ChernData { base: Base::P2, rank, c1, c2 }
    }

    pub fn p1(rank: i64, c1: i64) -> Self {
        assert!(rank >= 1, "rank must be positive");
        ChernData { base: Base::P1, rank, c1, c2: 0 }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChernError {
    #[error("symmetric square closed form requires rank 3 on P2, got rank {0}")]
    NeedRank3(i64),
}

/// Twist by O(t): c1 shifts by rank*t; on the plane c2 picks up
/// (rank-1) t c1 + C(rank,2) t^2.
pub fn chern_twist(c: ChernData, t: i64) -> ChernData {
    match c.base {
        Base::P1 => ChernData { c1: c.c1 + c.rank * t, ..c },
        Base::P2 => ChernData {
            c1: c.c1 + c.rank * t,
            c2: c.c2 + (c.rank - 1) * t * c.c1 + c.rank * (c.rank - 1) / 2 * t * t,
            ..c
        },
    }
}

/// Whitney sum of Chern data (used by additivity tests).
pub fn whitney_sum(a: ChernData, b: ChernData) -> ChernData {
    assert_eq!(a.base, b.base, "summands must live on the same base");
    ChernData {
        base: a.base,
        rank: a.rank + b.rank,
        c1: a.c1 + b.c1,
        c2: a.c2 + b.c2 + a.c1 * b.c1,
    }
}

/// Chern data of S^2 of a rank-3 bundle on the plane:
/// rank 6, c1 -> 4 c1, c2 -> 5 c1^2 + 5 c2.
pub fn sym2_chern_rank3(c: ChernData) -> Result<ChernData, ChernError> {
    if c.base != Base::P2 || c.rank != 3 {
        return Err(ChernError::NeedRank3(c.rank));
    }
    Ok(ChernData::p2(6, 4 * c.c1, 5 * c.c1 * c.c1 + 5 * c.c2))
}

/// Riemann-Roch on the plane: chi = rank + (3/2) c1 + (c1^2 - 2 c2)/2.
pub fn rr_p2(c: ChernData) -> Q {
    assert_eq!(c.base, Base::P2);
    qi(c.rank) + q(3, 2) * qi(c.c1) + q(1, 2) * qi(c.c1 * c.c1 - 2 * c.c2)
}

/// Riemann-Roch on the line: chi = c1 + rank.
pub fn rr_p1(rank: i64, c1: i64) -> i64 {
    c1 + rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twist_examples() {
        let c = chern_twist(ChernData::p2(2, -1, 4), 2);
        assert_eq!((c.rank, c.c1, c.c2), (2, 3, 6));
        let c = ChernData::p2(3, 5, 7);
        assert_eq!(chern_twist(c, 0), c);
        assert_eq!(chern_twist(ChernData::p1(2, 2), 1).c1, 4);
    }

    #[test]
    fn rr_p2_examples() {
        // chi of O(2) on the plane
        assert_eq!(rr_p2(ChernData::p2(1, 2, 0)), qi(6));
        // rank-2 bundle with c1 = -1, twisted by 2: chi = 9 - c2
        for c2 in 0..=10 {
            let tw = chern_twist(ChernData::p2(2, -1, c2), 2);
            assert_eq!(rr_p2(tw), qi(9 - c2));
        }
        // a rank-3 bundle with chi = 6 forces c2 = c1^2/2 + 3 c1/2 - 3
        for c1 in -4..=6 {
            let forced = q(1, 2) * qi(c1 * c1) + q(3, 2) * qi(c1) - qi(3);
            if forced.is_integer() {
                let c2 = forced.to_integer();
                assert_eq!(rr_p2(ChernData::p2(3, c1, c2)), qi(6));
            }
        }
    }

    #[test]
    fn rr_p1_examples() {
        // O(2) + O^d has rank d+1, c1 = 2, chi = d+3
        for d in 0..=10 {
            assert_eq!(rr_p1(d + 1, 2), d + 3);
        }
        assert_eq!(rr_p1(1, -1), 0);
        assert_eq!(rr_p1(4, 2), 6);
    }

    #[test]
    fn sym2_trivial_and_rank_guard() {
        let s = sym2_chern_rank3(ChernData::p2(3, 0, 0)).unwrap();
        assert_eq!((s.rank, s.c1, s.c2), (6, 0, 0));
        assert_eq!(sym2_chern_rank3(ChernData::p2(2, 0, 0)), Err(ChernError::NeedRank3(2)));
    }

    #[test]
    fn sym2_of_twist_reproduces_chi_identity() {
        // chi(S^2(E(-1))) = 3 c1^2 - 2 c1 - 5 c2 over a full grid
        for c1 in -3..=5 {
            for c2 in 0..=20 {
                let e = ChernData::p2(3, c1, c2);
                let s = sym2_chern_rank3(chern_twist(e, -1)).unwrap();
                assert_eq!(rr_p2(s), qi(3 * c1 * c1 - 2 * c1 - 5 * c2), "at ({c1},{c2})");
            }
        }
    }
}
