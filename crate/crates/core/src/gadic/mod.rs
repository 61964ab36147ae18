//! Minimal signed-digit expansions in base `g` and the word length they
//! induce on the Cayley graph of the integers generated by `{±g^i}`.
//!
//! Every integer has exactly one expansion `n = Σ ε_i g^i` whose digits obey
//! the following constraints:
//!
//! * odd `g`: `|ε_i| ≤ (g-1)/2`;
//! * even `g`: `|ε_i| ≤ g/2`, and a digit of magnitude `g/2` must be followed
//!   by a digit of strictly smaller magnitude and the same sign (or zero).
//!
//! The sum of the digit magnitudes is the distance from `0` to `n` in the
//! graph, which is what [`g_length`] returns.

mod lambda;

pub use lambda::{lambda, lambda_digits, LambdaParams};

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The unique minimal expansion of an integer in base `g`.
///
/// `digits[0]` is the coefficient of `g^0`. Zero is represented by an empty
/// digit sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GAdicExpansion {
    base: u32,
    digits: Vec<i64>,
    value: BigInt,
}

impl GAdicExpansion {
    /// Builds an expansion from raw digits without checking the digit
    /// constraints; see [`validate`]. Trailing (most significant) zeros are
    /// kept as given so that `validate` can report them.
    pub fn from_digits(base: u32, digits: Vec<i64>) -> Result<Self> {
        check_base(base)?;
        let value = evaluate(base, &digits);
        Ok(Self {
            base,
            digits,
            value,
        })
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn digits(&self) -> &[i64] {
        &self.digits
    }

    /// The integer this expansion represents.
    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// Sum of the absolute digit values.
    pub fn length(&self) -> u64 {
        self.digits.iter().map(|d| d.unsigned_abs()).sum()
    }

    /// Digit at position `i`, zero beyond the top digit.
    pub fn digit(&self, i: usize) -> i64 {
        self.digits.get(i).copied().unwrap_or(0)
    }
}

impl fmt::Display for GAdicExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str("]")
    }
}

/// A broken digit constraint reported by [`validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Violation {
    /// `|digit|` exceeds `(g-1)/2` (odd `g`) or `g/2` (even `g`).
    DigitOutOfRange {
        index: usize,
        digit: i64,
        bound: i64,
    },
    /// The most significant digit is zero.
    LeadingZero,
    /// A digit of magnitude `g/2` is followed by another of magnitude `g/2`.
    TieFollowedByTie { index: usize },
    /// A digit of magnitude `g/2` is followed by a digit of opposite sign.
    TieSignConflict { index: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DigitOutOfRange {
                index,
                digit,
                bound,
            } => write!(f, "digit {digit} at position {index} exceeds bound {bound}"),
            Violation::LeadingZero => f.write_str("most significant digit is zero"),
            Violation::TieFollowedByTie { index } => write!(
                f,
                "half-base digit at position {index} is followed by another half-base digit"
            ),
            Violation::TieSignConflict { index } => write!(
                f,
                "half-base digit at position {index} is followed by a digit of opposite sign"
            ),
        }
    }
}

/// Largest admissible digit magnitude for base `g`.
pub fn digit_bound(base: u32) -> i64 {
    if base.is_multiple_of(2) {
        i64::from(base / 2)
    } else {
        i64::from((base - 1) / 2)
    }
}

/// Lists every digit constraint `e` breaks. Empty iff `e` is the minimal
/// expansion of its value.
pub fn validate(e: &GAdicExpansion) -> Vec<Violation> {
    let mut out = Vec::new();
    let bound = digit_bound(e.base);
    let even = e.base.is_multiple_of(2);

    if e.digits.last() == Some(&0) {
        out.push(Violation::LeadingZero);
    }
    for (index, &digit) in e.digits.iter().enumerate() {
        if digit.abs() > bound {
            out.push(Violation::DigitOutOfRange {
                index,
                digit,
                bound,
            });
            continue;
        }
        if even && digit.abs() == bound {
            let next = e.digit(index + 1);
            if next.abs() >= bound {
                out.push(Violation::TieFollowedByTie { index });
            }
            if digit * next < 0 {
                out.push(Violation::TieSignConflict { index });
            }
        }
    }
    out
}

/// Computes the minimal expansion of `n` in base `g`.
///
/// Digits are peeled off from the bottom using the balanced remainder. For
/// even `g` the remainder `g/2` is ambiguous; `+g/2` is chosen exactly when
/// the quotient it leaves has a next digit in `[0, g/2)`, which is the only
/// way the adjacency rule can hold for that choice.
pub fn expand(n: &BigInt, base: u32) -> Result<GAdicExpansion> {
    check_base(base)?;
    let digits = match n.to_i128() {
        Some(small) => expand_small(small, base),
        None => expand_big(n, base),
    };
    Ok(GAdicExpansion {
        base,
        digits,
        value: n.clone(),
    })
}

/// Word length of `n` on the Cayley graph generated by `{±g^i}`.
pub fn g_length(n: &BigInt, base: u32) -> Result<u64> {
    expand(n, base).map(|e| e.length())
}

/// Orders `m` and `n` using only their expansions: the first digit position
/// (from the top) where they differ decides.
pub fn compare_by_digits(m: &BigInt, n: &BigInt, base: u32) -> Result<Ordering> {
    let em = expand(m, base)?;
    let en = expand(n, base)?;
    let top = em.digits.len().max(en.digits.len());
    for t in (0..top).rev() {
        match em.digit(t).cmp(&en.digit(t)) {
            Ordering::Equal => continue,
            other => return Ok(other),
        }
    }
    Ok(Ordering::Equal)
}

pub(crate) fn check_base(base: u32) -> Result<()> {
    if base < 2 {
        Err(Error::InvalidBase(u64::from(base)))
    } else {
        Ok(())
    }
}

fn evaluate(base: u32, digits: &[i64]) -> BigInt {
    let g = BigInt::from(base);
    digits
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, &d| acc * &g + BigInt::from(d))
}

/// Picks the digit for residue `r ∈ [0, g)`. `next_residue_after_plus`
/// yields the residue mod `g` of the quotient left by choosing `+g/2`; it is
/// only consulted at the even tie.
fn balanced_digit(r: i64, g: i64, next_residue_after_plus: impl FnOnce() -> i64) -> i64 {
    let twice = 2 * r;
    if twice < g {
        r
    } else if twice > g {
        r - g
    } else {
        let half = g / 2;
        if next_residue_after_plus() < half {
            half
        } else {
            -half
        }
    }
}

fn expand_small(mut n: i128, base: u32) -> Vec<i64> {
    let g = i128::from(base);
    let mut digits = Vec::new();
    while n != 0 {
        let r = n.rem_euclid(g);
        let d = balanced_digit(r as i64, g as i64, || ((n - r) / g).rem_euclid(g) as i64);
        digits.push(d);
        n = (n - i128::from(d)) / g;
    }
    digits
}

fn expand_big(n: &BigInt, base: u32) -> Vec<i64> {
    let g = BigInt::from(base);
    let gi = i64::from(base);
    let mut rest = n.clone();
    let mut digits = Vec::new();
    while !rest.is_zero() {
        let r = rest.mod_floor(&g).to_i64().expect("residue below base");
        let d = balanced_digit(r, gi, || {
            ((&rest - r) / &g)
                .mod_floor(&g)
                .to_i64()
                .expect("residue below base")
        });
        digits.push(d);
        rest = (rest - d) / &g;
        if let Some(small) = rest.to_i128() {
            digits.extend(expand_small(small, base));
            break;
        }
    }
    digits
}

/// Same as [`g_length`] for machine-sized `n`.
pub fn g_length_i64(n: i64, base: u32) -> Result<u64> {
    check_base(base)?;
    Ok(expand_small(i128::from(n), base)
        .iter()
        .map(|d| d.unsigned_abs())
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn worked_example_base_five() {
        let e = expand(&big(46), 5).unwrap();
        assert_eq!(e.digits(), &[1, -1, 2]);
        assert_eq!(e.length(), 4);
        assert_eq!(e.to_string(), "[1, -1, 2]");
    }

    #[test]
    fn zero_is_empty() {
        for g in 2..20 {
            let e = expand(&big(0), g).unwrap();
            assert!(e.digits().is_empty());
            assert_eq!(e.length(), 0);
        }
    }

    #[test]
    fn eleven_in_base_two_overshoots() {
        let e = expand(&big(11), 2).unwrap();
        assert_eq!(e.digits(), &[-1, 0, -1, 0, 1]);
        assert_eq!(g_length(&big(11), 2).unwrap(), 3);
        assert_eq!(g_length(&big(3), 2).unwrap(), 2);
    }

    #[test]
    fn negation_flips_digits() {
        let e = expand(&big(-46), 5).unwrap();
        assert_eq!(e.digits(), &[-1, 1, -2]);
    }

    #[test]
    fn single_digit_values() {
        for g in (3..41).step_by(2) {
            for n in 0..=((g - 1) / 2) {
                assert_eq!(g_length(&big(n as i64), g).unwrap(), n as u64);
            }
        }
    }

    #[test]
    fn rejects_small_base() {
        assert_eq!(expand(&big(5), 1), Err(Error::InvalidBase(1)));
        assert_eq!(expand(&big(5), 0), Err(Error::InvalidBase(0)));
        assert!(compare_by_digits(&big(1), &big(2), 1).is_err());
    }

    #[test]
    fn validate_examples() {
        let bad = GAdicExpansion::from_digits(5, vec![3]).unwrap();
        assert_eq!(
            validate(&bad),
            vec![Violation::DigitOutOfRange {
                index: 0,
                digit: 3,
                bound: 2
            }]
        );
        let adjacent = GAdicExpansion::from_digits(2, vec![1, 1]).unwrap();
        assert_eq!(
            validate(&adjacent),
            vec![Violation::TieFollowedByTie { index: 0 }]
        );
        let ok = GAdicExpansion::from_digits(5, vec![1, -1, 2]).unwrap();
        assert!(validate(&ok).is_empty());
        assert_eq!(ok.value(), &big(46));

        let sign = GAdicExpansion::from_digits(4, vec![2, -1]).unwrap();
        assert_eq!(
            validate(&sign),
            vec![Violation::TieSignConflict { index: 0 }]
        );
        let lead = GAdicExpansion::from_digits(3, vec![1, 0]).unwrap();
        assert_eq!(validate(&lead), vec![Violation::LeadingZero]);
    }

    #[test]
    fn big_and_small_paths_agree() {
        let huge: BigInt = BigInt::from(3u8).pow(100) - 12345;
        for g in [2u32, 3, 4, 7, 10, 19] {
            let e = expand(&huge, g).unwrap();
            assert_eq!(evaluate(g, e.digits()), huge);
            assert!(validate(&e).is_empty());
            let neg = expand(&-&huge, g).unwrap();
            let flipped: Vec<i64> = e.digits().iter().map(|d| -d).collect();
            assert_eq!(neg.digits(), flipped.as_slice());
        }
    }

    #[test]
    fn compare_small_cases() {
        assert_eq!(
            compare_by_digits(&big(46), &big(47), 5).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            compare_by_digits(&big(9), &big(9), 4).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            compare_by_digits(&big(-3), &big(-30), 2).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn i64_length_matches() {
        for n in -500..500 {
            for g in 2..9 {
                assert_eq!(g_length_i64(n, g).unwrap(), g_length(&big(n), g).unwrap());
            }
        }
    }
}
