//! Exact overflow-checked integer arithmetic.

use crate::error::{Error, Result};

/// Binomial coefficient `C(n, k)` as an exact `u64`, with the convention
/// `C(n, k) = 0` whenever `k > n`.
///
/// Intermediate products run in `u128`; a result that does not fit in 64
/// bits is an [`Error::Overflow`], never a wrapped value.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        // acc * (n-k+i) is divisible by i at every step.
        acc = acc
            .checked_mul(u128::from(n - k + i))
            .ok_or(Error::Overflow)?
            / u128::from(i);
    }
    u64::try_from(acc).map_err(|_| Error::Overflow)
}

pub(crate) fn add(a: u64, b: u64) -> Result<u64> {
    a.checked_add(b).ok_or(Error::Overflow)
}

pub(crate) fn mul(a: u64, b: u64) -> Result<u64> {
    a.checked_mul(b).ok_or(Error::Overflow)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2).unwrap(), 10);
        assert_eq!(binomial(5, 3).unwrap(), 10);
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(7, 0).unwrap(), 1);
        assert_eq!(binomial(7, 7).unwrap(), 1);
    }

    #[test]
    fn zero_above_diagonal() {
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(0, 1).unwrap(), 0);
    }

    #[test]
    fn large_but_representable() {
        assert_eq!(binomial(1000, 2).unwrap(), 499_500);
        assert_eq!(binomial(20, 10).unwrap(), 184_756);
        // C(67, 33) is close to the top of the u64 range.
        assert_eq!(binomial(67, 33).unwrap(), 14_226_520_737_620_288_370);
    }

    #[test]
    fn overflow_is_an_error() {
        assert_eq!(binomial(68, 34), Err(Error::Overflow));
    }

    #[test]
    fn pascal_identity_spot_checks() {
        for n in 1..40u64 {
            for k in 1..=n {
                let lhs = binomial(n, k).unwrap();
                let rhs = binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap();
                assert_eq!(lhs, rhs, "Pascal at ({n},{k})");
            }
        }
    }
}
