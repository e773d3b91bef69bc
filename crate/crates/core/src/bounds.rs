//! Closed-form bounds and inequalities behind the k-matching decomposition
//! result: the intersecting-family edge bound, the minimum-edge-count chain,
//! the clique-factor degree condition, and the binomial ratio inequality.
//! All verdicts use exact integer or rational arithmetic; floating point is
//! never consulted.

use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use num::traits::One;
use num::{BigInt, BigRational, BigUint};

/// The threshold n0(k, r) = k*r*(k+r-2) + 2r - 1 above which the k-matching
/// formula and its extremal characterization are proved.
pub fn n_zero(k: usize, r: usize) -> usize {
    assert!(k >= 1 && r >= 2, "n0 needs k >= 1 and r >= 2");
    k * r * (k + r - 2) + 2 * r - 1
}

/// Upper bound on the edge count of an r-graph on n vertices with matching
/// number k: C(n,r) - C(n-k,r). `applicable` records whether the hypothesis
/// n >= (2k+1)r - k holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FranklBound {
    pub value: BigUint,
    pub applicable: bool,
}

pub fn frankl_bound(n: usize, r: usize, k: usize) -> FranklBound {
    let value = binomial(n, r) - binomial(n.saturating_sub(k), r);
    let applicable = n + k >= (2 * k + 1) * r;
    FranklBound { value, applicable }
}

/// Lower bound on the edge count of an extremal graph:
/// C(n,r) - (k-1) * [C(n,r) - C(n-k+1,r)]. May be negative for small n and is
/// returned unchanged; callers compare, never clamp.
pub fn lower_bound_e(n: usize, r: usize, k: usize) -> BigInt {
    assert!(k >= 1, "lower bound needs k >= 1");
    let c = BigInt::from(binomial(n, r));
    let c_red = BigInt::from(binomial((n + 1).saturating_sub(k), r));
    &c - BigInt::from(k - 1) * (&c - c_red)
}

/// The degree condition k*C(n-r,r) + (k-1)*C(n-k+1,r) >= (2k-2)*C(n,r),
/// evaluated exactly.
pub fn degree_condition_inequality(n: usize, r: usize, k: usize) -> bool {
    assert!(k >= 1, "degree condition needs k >= 1");
    let lhs = binomial(n.saturating_sub(r), r) * k
        + binomial((n + 1).saturating_sub(k), r) * (k - 1);
    let rhs = binomial(n, r) * (2 * k - 2);
    lhs >= rhs
}

/// Checks C(n-t,r)/C(n,r) >= ((n-t-r+1)/(n-r+1))^r >= 1 - rt/(n-r+1) with
/// exact rationals. Requires r >= t >= 0 and n >= r + t.
pub fn ratio_inequality_check(n: usize, r: usize, t: usize) -> Result<bool> {
    if t > r || n < r + t {
        return Err(Error::InvalidParameter(format!(
            "ratio inequality needs r >= t >= 0 and n >= r+t, got n={n} r={r} t={t}"
        )));
    }
    let lhs = BigRational::new(
        BigInt::from(binomial(n - t, r)),
        BigInt::from(binomial(n, r)),
    );
    let base = BigRational::new(
        BigInt::from(n - t - r + 1),
        BigInt::from(n - r + 1),
    );
    let mid = num::pow::pow(base, r);
    let low = BigRational::one()
        - BigRational::new(BigInt::from(r * t), BigInt::from(n - r + 1));
    Ok(lhs >= mid && mid >= low)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::traits::ToPrimitive;

    #[test]
    fn n_zero_values() {
        assert_eq!(n_zero(2, 2), 11);
        assert_eq!(n_zero(3, 2), 21);
        for r in 2..8 {
            assert_eq!(n_zero(1, r), r * (r - 1) + 2 * r - 1);
        }
    }

    #[test]
    fn frankl_examples() {
        let b = frankl_bound(11, 2, 1);
        assert_eq!(b.value.to_usize(), Some(10));
        assert!(b.applicable); // 11 >= 3*2-1
        let b = frankl_bound(21, 2, 2);
        assert_eq!(b.value.to_usize(), Some(39));
        assert!(b.applicable);
        for (n, r) in [(6, 2), (9, 3)] {
            assert_eq!(frankl_bound(n, r, 0).value.to_usize(), Some(0));
        }
        assert!(!frankl_bound(6, 3, 1).applicable); // 6 < 3*3-1
    }

    #[test]
    fn lower_bound_examples() {
        assert_eq!(lower_bound_e(11, 2, 2), BigInt::from(45));
        assert_eq!(lower_bound_e(21, 2, 3), BigInt::from(132));
        // k = 1: the bracket vanishes
        assert_eq!(lower_bound_e(9, 3, 1), BigInt::from(84));
        // negative values returned unchanged
        assert_eq!(lower_bound_e(5, 2, 3), BigInt::from(-4));
    }

    #[test]
    fn degree_condition_examples() {
        // 2*36 + 45 = 117 >= 110
        assert!(degree_condition_inequality(11, 2, 2));
        for n in 2..40 {
            assert!(degree_condition_inequality(n, 2, 1)); // rhs is zero
        }
    }

    #[test]
    fn degree_condition_at_thresholds() {
        for k in 2..=6 {
            for r in 2..=6 {
                let n = n_zero(k, r);
                assert!(
                    degree_condition_inequality(n, r, k),
                    "degree condition fails at n0 for (k={k}, r={r})"
                );
            }
        }
    }

    #[test]
    fn ratio_examples() {
        assert!(ratio_inequality_check(11, 2, 2).unwrap()); // 36/55 >= 0.64 >= 0.6
        for n in 2..30 {
            assert!(ratio_inequality_check(n, 2, 0).unwrap()); // all sides 1
        }
        assert!(ratio_inequality_check(5, 3, 3).is_err()); // n < r+t
        assert!(ratio_inequality_check(10, 2, 3).is_err()); // t > r
    }

    #[test]
    fn ratio_sweep_small() {
        for r in 1..=4usize {
            for t in 0..=r {
                for n in (r + t).max(r)..=60 {
                    assert!(
                        ratio_inequality_check(n, r, t).unwrap(),
                        "ratio inequality fails at (n={n}, r={r}, t={t})"
                    );
                }
            }
        }
    }
}
