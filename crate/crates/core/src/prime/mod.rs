//! Primality, prime powers, integer roots, factorization and prime
//! enumeration.
//!
//! Everything below `2^64` is decided exactly: Miller-Rabin with a fixed
//! witness set is a proof in that range. Larger inputs get a strong
//! probable-prime verdict (a configurable number of strong bases followed by
//! a strong Lucas test), and the verdict type says so.

mod factor;
mod primality;
mod sieve;

pub use factor::{factor, factor_with_budget, Factorization, DEFAULT_RHO_BUDGET};
pub use primality::is_prime_u64;
pub use sieve::{primes_up_to, PrimePowerTable};

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Number of strong probable-prime bases used beyond `2^64` by default.
pub const DEFAULT_STRONG_ROUNDS: u32 = 64;

/// Primes below 1000.
pub(crate) static SMALL_PRIMES: [u64; 168] = small_primes();

const fn small_primes() -> [u64; 168] {
    let mut out = [0u64; 168];
    let mut count = 0;
    let mut n = 2u64;
    while count < 168 {
        let mut d = 2;
        let mut prime = true;
        while d * d <= n {
            if n.is_multiple_of(d) {
                prime = false;
                break;
            }
            d += 1;
        }
        if prime {
            out[count] = n;
            count += 1;
        }
        n += 1;
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Composite,
    Prime,
    ProbablePrime,
}

/// How much a [`PrimalityVerdict`] can be trusted.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certainty {
    /// Exact: either a compositeness witness or the deterministic range.
    Deterministic,
    /// Passed `strong_rounds` strong bases plus a strong Lucas test.
    Probabilistic { strong_rounds: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimalityVerdict {
    pub status: Primality,
    pub certainty: Certainty,
}

impl PrimalityVerdict {
    /// True for both `Prime` and `ProbablePrime`.
    pub fn passes(&self) -> bool {
        self.status != Primality::Composite
    }
}

impl fmt::Display for PrimalityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.status, self.certainty) {
            (Primality::Composite, _) => f.write_str("composite"),
            (Primality::Prime, _) => f.write_str("prime"),
            (Primality::ProbablePrime, Certainty::Probabilistic { strong_rounds }) => {
                write!(
                    f,
                    "probable-prime ({strong_rounds} strong rounds + strong Lucas)"
                )
            }
            (Primality::ProbablePrime, Certainty::Deterministic) => f.write_str("probable-prime"),
        }
    }
}

/// Primality of `n` with the default number of strong rounds.
pub fn is_prime(n: &BigInt) -> PrimalityVerdict {
    is_prime_with_rounds(n, DEFAULT_STRONG_ROUNDS)
}

pub fn is_prime_with_rounds(n: &BigInt, strong_rounds: u32) -> PrimalityVerdict {
    let deterministic = |prime: bool| PrimalityVerdict {
        status: if prime {
            Primality::Prime
        } else {
            Primality::Composite
        },
        certainty: Certainty::Deterministic,
    };
    if n.is_negative() {
        return deterministic(false);
    }
    if let Some(small) = n.to_u64() {
        return deterministic(is_prime_u64(small));
    }
    if primality::big_probable_prime(n, strong_rounds) {
        PrimalityVerdict {
            status: Primality::ProbablePrime,
            certainty: Certainty::Probabilistic {
                strong_rounds: strong_rounds.max(1),
            },
        }
    } else {
        deterministic(false)
    }
}

pub(crate) fn passes_primality(n: &BigInt) -> bool {
    is_prime(n).passes()
}

/// `⌊n^(1/k)⌋` for machine words.
pub fn iroot_u64(n: u64, k: u32) -> u64 {
    assert!(k >= 1, "root index must be positive");
    if k == 1 || n < 2 {
        return n;
    }
    if k >= 64 {
        return 1;
    }
    let mut r = (n as f64).powf(1.0 / f64::from(k)).round() as u64;
    let fits = |r: u64| match (r as u128).checked_pow(k) {
        Some(p) => p <= n as u128,
        None => false,
    };
    while r > 0 && !fits(r) {
        r -= 1;
    }
    while fits(r + 1) {
        r += 1;
    }
    r
}

/// `⌊n^(1/k)⌋` for arbitrary non-negative `n`.
pub fn integer_kth_root(n: &BigInt, k: u32) -> Result<BigInt> {
    if n.is_negative() {
        return Err(Error::OutOfRange {
            value: n.clone(),
            min: BigInt::zero(),
        });
    }
    if k == 0 {
        return Err(Error::InvalidLength(0));
    }
    Ok(match n.to_u64() {
        Some(small) => BigInt::from(iroot_u64(small, k)),
        None => n.nth_root(k),
    })
}

/// `n = p^k` with `p` prime and `k ≥ 1`, or the unit `1 = p^0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PrimePowerWitness {
    One,
    Power { base: BigInt, exponent: u32 },
}

impl PrimePowerWitness {
    pub fn value(&self) -> BigInt {
        match self {
            PrimePowerWitness::One => BigInt::one(),
            PrimePowerWitness::Power { base, exponent } => {
                num_traits::pow(base.clone(), *exponent as usize)
            }
        }
    }

    /// The prime base, `None` for the unit.
    pub fn base(&self) -> Option<&BigInt> {
        match self {
            PrimePowerWitness::One => None,
            PrimePowerWitness::Power { base, .. } => Some(base),
        }
    }

    pub fn exponent(&self) -> u32 {
        match self {
            PrimePowerWitness::One => 0,
            PrimePowerWitness::Power { exponent, .. } => *exponent,
        }
    }
}

impl fmt::Display for PrimePowerWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimePowerWitness::One => f.write_str("1"),
            PrimePowerWitness::Power { base, exponent: 1 } => write!(f, "{base}"),
            PrimePowerWitness::Power { base, exponent } => write!(f, "{base}^{exponent}"),
        }
    }
}

/// `Some((p, k))` iff `n = p^k` with `p` prime and `k ≥ 1`.
///
/// Small prime factors are divided out first; otherwise exponents are tried
/// from the largest feasible one downwards.
pub fn prime_power_u64(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    for &p in SMALL_PRIMES.iter().take(54) {
        if n.is_multiple_of(p) {
            let mut rest = n / p;
            let mut e = 1;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            return (rest == 1).then_some((p, e));
        }
    }
    // No factor below 257: any proper power has a root of at least 257.
    if n < 257 * 257 {
        return Some((n, 1));
    }
    let max_k = n.ilog(257);
    for k in (2..=max_k).rev() {
        let r = iroot_u64(n, k);
        if (r as u128).pow(k) == n as u128 {
            return is_prime_u64(r).then_some((r, k));
        }
    }
    is_prime_u64(n).then_some((n, 1))
}

/// Decides whether `n ≥ 1` is `1` or a prime power.
pub fn is_prime_power(n: &BigInt) -> Option<PrimePowerWitness> {
    if n.is_one() {
        return Some(PrimePowerWitness::One);
    }
    if n < &BigInt::one() {
        return None;
    }
    if let Some(small) = n.to_u64() {
        return prime_power_u64(small).map(|(p, k)| PrimePowerWitness::Power {
            base: BigInt::from(p),
            exponent: k,
        });
    }
    for &p in SMALL_PRIMES.iter() {
        if (n % p).is_zero() {
            let pb = BigInt::from(p);
            let mut rest = n / &pb;
            let mut e = 1;
            while (&rest % p).is_zero() {
                rest /= &pb;
                e += 1;
            }
            return rest.is_one().then_some(PrimePowerWitness::Power {
                base: pb,
                exponent: e,
            });
        }
    }
    // Every prime factor exceeds 1000.
    let max_k = (n.bits() as f64 / 1009f64.log2()).floor() as u32;
    for k in (2..=max_k).rev() {
        let r = n.nth_root(k);
        if num_traits::pow(r.clone(), k as usize) == *n {
            return is_prime_power(&r).and_then(|w| match w {
                PrimePowerWitness::Power { base, exponent } => Some(PrimePowerWitness::Power {
                    base,
                    exponent: exponent * k,
                }),
                PrimePowerWitness::One => None,
            });
        }
    }
    passes_primality(n).then(|| PrimePowerWitness::Power {
        base: n.clone(),
        exponent: 1,
    })
}

/// True when `|n|` is `1` or a prime power (the signed generators of the
/// all-primes Cayley graph).
pub fn is_signed_prime_power(n: &BigInt) -> bool {
    !n.is_zero() && is_prime_power(&n.abs()).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn small_prime_table() {
        assert_eq!(SMALL_PRIMES[0], 2);
        assert_eq!(SMALL_PRIMES[53], 251);
        assert_eq!(SMALL_PRIMES[167], 997);
    }

    #[test]
    fn verdicts() {
        assert_eq!(is_prime(&big(2)).status, Primality::Prime);
        assert_eq!(is_prime(&big(58_164_433)).status, Primality::Composite);
        let m: BigInt = "47867742232066880047611079".parse().unwrap();
        let v = is_prime(&m);
        assert_eq!(v.status, Primality::ProbablePrime);
        assert_eq!(
            v.certainty,
            Certainty::Probabilistic {
                strong_rounds: DEFAULT_STRONG_ROUNDS
            }
        );
        assert_eq!(is_prime(&BigInt::from(-7)).status, Primality::Composite);
        assert_eq!(is_prime(&big(0)).status, Primality::Composite);
        assert_eq!(is_prime(&big(1)).status, Primality::Composite);
    }

    #[test]
    fn big_mersenne() {
        let m127 = num_traits::pow(big(2), 127) - 1u32;
        assert!(is_prime(&m127).passes());
        let m128 = num_traits::pow(big(2), 128) - 1u32;
        assert!(!is_prime(&m128).passes());
        // 2^67 - 1 = 193707721 * 761838257287
        let m67 = num_traits::pow(big(2), 67) - 1u32;
        assert!(!is_prime(&m67).passes());
    }

    #[test]
    fn roots() {
        assert_eq!(integer_kth_root(&big(27), 3).unwrap(), big(3));
        assert_eq!(integer_kth_root(&big(26), 3).unwrap(), big(2));
        let e28 = num_traits::pow(big(10), 28);
        assert_eq!(
            integer_kth_root(&e28, 2).unwrap(),
            num_traits::pow(big(10), 14)
        );
        assert_eq!(iroot_u64(u64::MAX, 2), 4_294_967_295);
        assert_eq!(iroot_u64(u64::MAX, 63), 2);
        assert_eq!(iroot_u64(u64::MAX, 64), 1);
        assert!(integer_kth_root(&BigInt::from(-8), 3).is_err());
    }

    #[test]
    fn prime_powers() {
        let w = |p: u64, k: u32| {
            Some(PrimePowerWitness::Power {
                base: big(p),
                exponent: k,
            })
        };
        assert_eq!(is_prime_power(&big(8)), w(2, 3));
        assert_eq!(is_prime_power(&big(121)), w(11, 2));
        assert_eq!(is_prime_power(&big(1)), Some(PrimePowerWitness::One));
        assert_eq!(is_prime_power(&big(6)), None);
        assert_eq!(is_prime_power(&big(0)), None);
        // 1009^6 has no small factor and needs the root search.
        assert_eq!(is_prime_power(&num_traits::pow(big(1009), 6)), w(1009, 6));
        let p = big(1_000_000_007);
        assert_eq!(is_prime_power(&(&p * &p * &p)), w(1_000_000_007, 3));
        assert_eq!(is_prime_power(&(&p * &p * &p * big(1_000_000_009))), None);
        let m_plus_2n: BigInt = "133014037665409087128068994259".parse().unwrap();
        assert_eq!(is_prime_power(&m_plus_2n), None);
        // (257 * 263)^2 is a square of a composite.
        assert_eq!(prime_power_u64(257 * 263 * 257 * 263), None);
        assert_eq!(prime_power_u64(65537 * 65537), Some((65537, 2)));
    }
}
