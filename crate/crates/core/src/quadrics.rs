//! Closed-form Hodge-Deligne polynomials of quadrics.
//!
//! `a_r`, `b_r`, `c_r` are the Hodge-Deligne polynomials of the rank-r
//! quadric {x_1^2 + ... + x_r^2 = 0} in P^(r+1), P^r and P^(r-1)
//! respectively; `d_r` is the affine quadric {x_1^2 + ... + x_r^2 + 1 = 0}
//! in A^r. The r = 1 conventions a_1 = w + 1, b_1 = 1, c_1 = 0 extend the
//! projective kinds and are what makes the surface case (m = 3) work with
//! the same stratum tables as higher dimensions.

use thiserror::Error;

use crate::exactalg::Polynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuadricKind {
    A,
    B,
    C,
    DAffine,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QuadricError {
    #[error("quadric rank must be >= 1, got {0}")]
    RankOutOfRange(i64),
    #[error("the affine quadric d_r is only defined for r >= 2")]
    AffineRankOne,
}

/// `1 + w + ... + w^(a-1)`, with the empty sum for `a = 0`.
fn geom(a: i64) -> Polynomial {
    assert!(a >= 0);
    Polynomial::new(vec![num_bigint::BigInt::from(1); a as usize])
}

/// Hodge-Deligne polynomial of the selected quadric of rank `r`.
pub fn quadric_hodge(kind: QuadricKind, r: i64) -> Result<Polynomial, QuadricError> {
    if r < 1 {
        return Err(QuadricError::RankOutOfRange(r));
    }
    if r == 1 && kind == QuadricKind::DAffine {
        return Err(QuadricError::AffineRankOne);
    }
    let even = r % 2 == 0;
    Ok(match kind {
        // a_1 = w + 1, b_1 = 1, c_1 = 0 coincide with the odd-r rows.
        QuadricKind::A => {
            if even {
                &geom(r + 1) + &Polynomial::monomial(1, (r / 2 + 1) as usize)
            } else {
                geom(r + 1)
            }
        }
        QuadricKind::B => {
            if even {
                &geom(r) + &Polynomial::monomial(1, (r / 2) as usize)
            } else {
                geom(r)
            }
        }
        QuadricKind::C => {
            if even {
                &geom(r - 1) + &Polynomial::monomial(1, (r / 2 - 1) as usize)
            } else {
                geom(r - 1)
            }
        }
        QuadricKind::DAffine => {
            if even {
                &Polynomial::monomial(1, (r - 1) as usize)
                    - &Polynomial::monomial(1, (r / 2 - 1) as usize)
            } else {
                &Polynomial::monomial(1, (r - 1) as usize)
                    + &Polynomial::monomial(1, ((r - 1) / 2) as usize)
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(coeffs)
    }

    #[test]
    fn anchor_values() {
        assert_eq!(quadric_hodge(QuadricKind::A, 2).unwrap(), p(&[1, 1, 2]));
        assert_eq!(quadric_hodge(QuadricKind::DAffine, 2).unwrap(), p(&[-1, 1]));
        assert_eq!(quadric_hodge(QuadricKind::DAffine, 3).unwrap(), p(&[0, 1, 1]));
        assert_eq!(quadric_hodge(QuadricKind::C, 5).unwrap(), p(&[1, 1, 1, 1]));
    }

    #[test]
    fn rank_one_conventions() {
        assert_eq!(quadric_hodge(QuadricKind::A, 1).unwrap(), p(&[1, 1]));
        assert_eq!(quadric_hodge(QuadricKind::B, 1).unwrap(), p(&[1]));
        assert_eq!(quadric_hodge(QuadricKind::C, 1).unwrap(), Polynomial::zero());
        assert_eq!(
            quadric_hodge(QuadricKind::DAffine, 1),
            Err(QuadricError::AffineRankOne)
        );
        assert_eq!(
            quadric_hodge(QuadricKind::A, 0),
            Err(QuadricError::RankOutOfRange(0))
        );
    }

    // The closed forms are the implementation; the recursions from the
    // construction of the quadrics are the independent oracle.

    #[test]
    fn affine_recursion_oracle() {
        // d_r = w*d_(r-2) + (w-1)*w^(r-2)
        let w = p(&[0, 1]);
        for r in 4..=40 {
            let expected = &(&w * &quadric_hodge(QuadricKind::DAffine, r - 2).unwrap())
                + &(&p(&[-1, 1]) * &Polynomial::monomial(1, (r - 2) as usize));
            assert_eq!(quadric_hodge(QuadricKind::DAffine, r).unwrap(), expected, "d_{r}");
        }
    }

    #[test]
    fn ladder_oracles() {
        // a_r = a_(r-1) + w^2*d_(r-1); the analogous ladders for b and c
        // step down one power of w at a time.
        for r in 3..=40 {
            let d_prev = quadric_hodge(QuadricKind::DAffine, r - 1).unwrap();
            let a = &quadric_hodge(QuadricKind::A, r - 1).unwrap()
                + &(&Polynomial::monomial(1, 2) * &d_prev);
            assert_eq!(quadric_hodge(QuadricKind::A, r).unwrap(), a, "a_{r}");
            let b = &quadric_hodge(QuadricKind::B, r - 1).unwrap()
                + &(&Polynomial::monomial(1, 1) * &d_prev);
            assert_eq!(quadric_hodge(QuadricKind::B, r).unwrap(), b, "b_{r}");
            let c = &quadric_hodge(QuadricKind::C, r - 1).unwrap() + &d_prev;
            assert_eq!(quadric_hodge(QuadricKind::C, r).unwrap(), c, "c_{r}");
        }
    }

    #[test]
    fn euler_values_of_c() {
        for r in 2..=20i64 {
            let chi = quadric_hodge(QuadricKind::C, r).unwrap().eval_at_one();
            let expected = if r % 2 == 0 { r } else { r - 1 };
            assert_eq!(chi, BigInt::from(expected), "chi(c_{r})");
        }
    }
}
