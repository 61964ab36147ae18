//! Closed forms for the smallest positive integer of a given length in base
//! `g`.

use num_bigint::BigInt;
use num_traits::{pow, One};

use super::{check_base, expand, GAdicExpansion};
use crate::error::{Error, Result};

/// The integers that drive the closed form for `(g, k)`.
///
/// For odd `g`, `half = (g-1)/2`, `q = ⌊k / half⌋` and `r = k mod half`. For
/// even `g`, `half = g/2`, `r = k mod (g-1)` and `q` counts the repeated
/// `(-half, -(half-1))` digit pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LambdaParams {
    pub base: u32,
    pub k: u64,
    pub half: i64,
    pub q: u64,
    pub r: u64,
    pub a: i64,
    pub b: i64,
}

impl LambdaParams {
    pub fn new(base: u32, k: u64) -> Result<Self> {
        check_base(base)?;
        if k < 1 {
            return Err(Error::InvalidLength(k));
        }
        let g = u64::from(base);
        Ok(if g % 2 == 1 {
            let half = (g - 1) / 2;
            let q = 2 * k / (g - 1);
            let r = k % half;
            let (a, b) = if r == 0 {
                (half as i64, 0)
            } else {
                (-(half as i64), r as i64)
            };
            Self {
                base,
                k,
                half: half as i64,
                q,
                r,
                a,
                b,
            }
        } else {
            let half = g / 2;
            let r = k % (g - 1);
            let q = if r == 0 { k / (g - 1) - 1 } else { k / (g - 1) };
            let a = if r == 0 || r > half { half } else { r } as i64;
            let b = if r == 0 {
                half as i64 - 1
            } else if r > half {
                (r - half) as i64
            } else {
                0
            };
            Self {
                base,
                k,
                half: half as i64,
                q,
                r,
                a,
                b,
            }
        })
    }

    fn value(&self) -> BigInt {
        let g = BigInt::from(self.base);
        let a = BigInt::from(self.a);
        let b = BigInt::from(self.b);
        if self.base % 2 == 1 {
            if self.q == 0 {
                // Single digit r.
                return b;
            }
            let lower = pow(g.clone(), (self.q - 1) as usize);
            let upper = &lower * &g;
            (BigInt::one() - &lower) / 2 + a * lower + b * upper
        } else {
            let lower = pow(g.clone(), (2 * self.q) as usize);
            let upper = &lower * &g;
            let half = BigInt::from(self.half);
            half * (BigInt::one() - &lower) / (&g + 1) + a * lower + b * upper
        }
    }

    fn digits(&self) -> Vec<i64> {
        let half = self.half;
        let mut digits = Vec::new();
        if self.base % 2 == 1 {
            if self.r == 0 {
                digits.extend(std::iter::repeat_n(-half, self.q as usize - 1));
                digits.push(half);
            } else {
                digits.extend(std::iter::repeat_n(-half, self.q as usize));
                digits.push(self.r as i64);
            }
        } else {
            for _ in 0..self.q {
                digits.push(-half);
                digits.push(-(half - 1));
            }
            let r = self.r as i64;
            if r == 0 {
                digits.extend([half, half - 1]);
            } else if r > half {
                digits.extend([half, r - half]);
            } else {
                digits.push(r);
            }
        }
        // Base 2 pairs carry a zero second digit.
        while digits.last() == Some(&0) {
            digits.pop();
        }
        digits
    }
}

/// Smallest positive integer whose length in base `g` is exactly `k`.
///
/// The result is re-expanded before being returned; a mismatch is reported
/// as [`Error::LambdaSelfCheck`].
pub fn lambda(base: u32, k: u64) -> Result<BigInt> {
    let params = LambdaParams::new(base, k)?;
    let value = params.value();
    let actual = expand(&value, base)?.length();
    if actual != k {
        return Err(Error::LambdaSelfCheck {
            base,
            k,
            value,
            actual,
        });
    }
    Ok(value)
}

/// The explicit digit pattern of [`lambda`]`(g, k)`.
pub fn lambda_digits(base: u32, k: u64) -> Result<GAdicExpansion> {
    let params = LambdaParams::new(base, k)?;
    GAdicExpansion::from_digits(base, params.digits())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_spot_values() {
        assert_eq!(lambda(2, 5).unwrap(), BigInt::from(171));
        assert_eq!(lambda(3, 4).unwrap(), BigInt::from(14));
        assert_eq!(lambda(5, 3).unwrap(), BigInt::from(3));
        assert_eq!(lambda(19, 20).unwrap(), BigInt::from(542));
        assert_eq!(lambda(2, 20).unwrap(), BigInt::from(183_251_937_963u64));
        assert_eq!(lambda(29, 20).unwrap(), BigInt::from(160));
    }

    #[test]
    fn length_one_is_one() {
        for g in 2..200 {
            assert_eq!(lambda(g, 1).unwrap(), BigInt::one());
        }
    }

    #[test]
    fn digit_patterns() {
        assert_eq!(lambda_digits(3, 4).unwrap().digits(), &[-1, -1, -1, 1]);
        assert_eq!(lambda_digits(5, 5).unwrap().digits(), &[-2, -2, 1]);
        assert_eq!(lambda_digits(2, 3).unwrap().digits(), &[-1, 0, -1, 0, 1]);
    }

    #[test]
    fn digits_match_expansion() {
        for g in 2..30 {
            for k in 1..40 {
                let pattern = lambda_digits(g, k).unwrap();
                let value = lambda(g, k).unwrap();
                assert_eq!(pattern.value(), &value, "g={g} k={k}");
                assert_eq!(&expand(&value, g).unwrap(), &pattern, "g={g} k={k}");
            }
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert_eq!(lambda(1, 3), Err(Error::InvalidBase(1)));
        assert_eq!(lambda(4, 0), Err(Error::InvalidLength(0)));
        assert!(lambda_digits(0, 1).is_err());
    }

    #[test]
    fn even_params() {
        // g = 4, k = 6: r = 0, so q = 1 and the top pair is (2, 1).
        let p = LambdaParams::new(4, 6).unwrap();
        assert_eq!((p.q, p.r, p.a, p.b), (1, 0, 2, 1));
        // g = 6, k = 9: r = 4 > 3.
        let p = LambdaParams::new(6, 9).unwrap();
        assert_eq!((p.q, p.r, p.a, p.b), (1, 4, 3, 1));
    }
}
