//! Word lengths over the generating set of all signed prime powers
//! (including `±1 = ±p^0`).
//!
//! Every integer has length at most 4: small values are prime powers, odd
//! values above 5 are sums of three primes, and an even value is one away
//! from an odd one. Most integers do much better. Ruling out length 2 for
//! an odd `n` means showing that no `|n ± 2^j|` is a prime power, which can
//! only be checked up to an exponent cap; such results are reported as
//! candidates, never as certificates, unless `n` lies in Sun's residue class.

mod restricted;
mod sieve3;
mod sun;

pub use restricted::{restricted_prime_length, RestrictedLength};
pub use sieve3::{is_length3_candidate, sieve_length3_candidates};
pub use sun::{
    sun_class_member, sun_class_member_with, verify_sun_example, verify_sun_example_with, SunCheck,
    SunConstants, SunExample, SunReport,
};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::prime::{is_prime_power, is_prime_u64, passes_primality, PrimePowerWitness};

/// Exponent cap on `2^j` for single queries.
pub const DEFAULT_TWO_POWER_CAP: u32 = 64;
/// Exponent cap on `2^j` for bulk sieving.
pub const DEFAULT_SIEVE_CAP: u32 = 40;
/// How far the even-value searches scan for their first term.
pub const DEFAULT_PRIME_SEARCH_BOUND: u64 = 10_000_000;

/// Search limits for the length searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Largest `j` tried in `n ± 2^j`.
    pub two_power_cap: u32,
    /// Largest first prime tried in sum and difference searches.
    pub prime_search_bound: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            two_power_cap: DEFAULT_TWO_POWER_CAP,
            prime_search_bound: DEFAULT_PRIME_SEARCH_BOUND,
        }
    }
}

impl Caps {
    pub fn with_two_power_cap(two_power_cap: u32) -> Self {
        Self {
            two_power_cap,
            ..Self::default()
        }
    }
}

/// A signed generator `±p^a` (`a = 0` gives `±1`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub negative: bool,
    pub power: PrimePowerWitness,
}

impl Term {
    /// The generator equal to `v`, if `v` is one.
    pub fn from_value(v: &BigInt) -> Option<Term> {
        if v.is_zero() {
            return None;
        }
        is_prime_power(&v.abs()).map(|power| Term {
            negative: v.is_negative(),
            power,
        })
    }

    pub fn value(&self) -> BigInt {
        let v = self.power.value();
        if self.negative {
            -v
        } else {
            v
        }
    }

    /// Re-checks that the stored witness really is `±1` or `±p^a` with `p`
    /// prime.
    pub fn is_valid(&self) -> bool {
        match &self.power {
            PrimePowerWitness::One => true,
            PrimePowerWitness::Power { base, exponent } => *exponent >= 1 && passes_primality(base),
        }
    }

    fn negated(mut self) -> Term {
        self.negative = !self.negative;
        self
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.negative { '-' } else { '+' };
        write!(f, "{sign}{}", self.power)
    }
}

fn term(v: impl Into<BigInt>) -> Term {
    let v = v.into();
    Term::from_value(&v).expect("caller passes a signed prime power")
}

fn negate_all(terms: Vec<Term>) -> Vec<Term> {
    terms.into_iter().map(Term::negated).collect()
}

/// What the reported bound is known to be.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthEvidence {
    /// The bound is the length.
    Exact,
    /// The value lies in Sun's residue class and is not a prime power, so
    /// no two-term witness exists and the length is exactly 3.
    SunCertified,
    /// No shorter witness was found within the caps.
    Candidate { two_power_cap: u32 },
}

/// Upper bound on the prime-power length of `n` with a witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLengthReport {
    pub n: BigInt,
    pub upper_bound: usize,
    pub witness: Vec<Term>,
    pub evidence: LengthEvidence,
    pub caps: Caps,
}

impl PLengthReport {
    /// The witness sums to `n`, has `upper_bound` terms, and every term is
    /// a genuine signed prime power.
    pub fn is_valid(&self) -> bool {
        self.witness.len() == self.upper_bound
            && self.witness.iter().map(Term::value).sum::<BigInt>() == self.n
            && self.witness.iter().all(Term::is_valid)
    }

    pub fn witness_string(&self) -> String {
        self.witness
            .iter()
            .map(Term::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PLengthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match self.evidence {
            LengthEvidence::Exact => "exact".to_string(),
            LengthEvidence::SunCertified => "exact (Sun residue class)".to_string(),
            LengthEvidence::Candidate { two_power_cap } => {
                format!("upper bound; candidate, shorter forms excluded up to 2^{two_power_cap}")
            }
        };
        write!(
            f,
            "n = {}\nlength <= {} [{}]\nwitness: {}",
            self.n,
            self.upper_bound,
            status,
            self.witness_string()
        )
    }
}

/// `n` itself as a single signed generator.
pub fn length1_witness(n: &BigInt) -> Option<Term> {
    Term::from_value(n)
}

/// A two-term witness for `n`, searched within `caps`.
///
/// For odd `n` exactly one of the two terms is even, hence a power of two
/// `2^j` with `j ≥ 1`; the search covers `n = ±2^j + t` for every
/// `0 ≤ j ≤ cap`. For even `n` a sum of two primes is tried first, then
/// differences `n = t - p`. `None` only means nothing was found within the
/// caps.
pub fn length2_witness(n: &BigInt, caps: &Caps) -> Option<[Term; 2]> {
    if n.is_zero() {
        return None;
    }
    if n.is_odd() {
        return odd_length2(n, caps.two_power_cap);
    }
    if n.is_negative() {
        return length2_witness(&-n, caps).map(|[a, b]| [a.negated(), b.negated()]);
    }
    even_length2(n, caps)
}

fn odd_length2(n: &BigInt, cap: u32) -> Option<[Term; 2]> {
    let mut pw = BigInt::one();
    for _ in 0..=cap {
        let below = n - &pw;
        if let Some(t) = Term::from_value(&below) {
            return Some([term(pw.clone()), t]);
        }
        let above = n + &pw;
        if let Some(t) = Term::from_value(&above) {
            return Some([term(-pw.clone()), t]);
        }
        pw <<= 1;
    }
    None
}

fn even_length2(n: &BigInt, caps: &Caps) -> Option<[Term; 2]> {
    // n ≥ 2 and even.
    if let Ok((p, q)) = goldbach_pair_bounded(n, caps.prime_search_bound) {
        return Some([term(p), term(q)]);
    }
    // n = t - p with p an odd prime.
    let mut p = 3u64;
    while p <= caps.prime_search_bound {
        if is_prime_u64(p) {
            if let Some(t) = Term::from_value(&(n + p)) {
                return Some([t, term(-BigInt::from(p))]);
            }
        }
        p += 2;
    }
    None
}

fn goldbach_pair_u64(n: u64, bound: u64) -> Option<(u64, u64)> {
    if is_prime_u64(n - 2) {
        return Some((2, n - 2));
    }
    let mut p = 3;
    while p <= n / 2 && p <= bound {
        if is_prime_u64(p) && is_prime_u64(n - p) {
            return Some((p, n - p));
        }
        p += 2;
    }
    None
}

fn goldbach_pair_bounded(n: &BigInt, bound: u64) -> Result<(BigInt, BigInt)> {
    if n.is_odd() || n < &BigInt::from(4) {
        return Err(Error::NotGoldbachInput(n.clone()));
    }
    if let Some(small) = n.to_u64() {
        return goldbach_pair_u64(small, bound)
            .map(|(p, q)| (BigInt::from(p), BigInt::from(q)))
            .ok_or_else(|| Error::NotFound(n.clone()));
    }
    // 2 + (n - 2) needs n - 2 prime; n - 2 is even and huge here, so skip it.
    let mut p = 3u64;
    while p <= bound {
        if is_prime_u64(p) {
            let q = n - p;
            if passes_primality(&q) {
                return Ok((BigInt::from(p), q));
            }
        }
        p += 2;
    }
    Err(Error::NotFound(n.clone()))
}

/// The pair of primes `p ≤ q` with `p + q = n` and `p` smallest.
///
/// Below `2^64` both primes are proven; above it `q` is a probable prime.
pub fn goldbach_pair(n: &BigInt) -> Result<(BigInt, BigInt)> {
    goldbach_pair_bounded(n, u64::MAX)
}

/// Primes `p ≤ q ≤ r` with `p + q + r = n` for odd `n > 5`: `3` plus the
/// Goldbach pair of `n - 3`.
pub fn three_prime_decomposition(n: &BigInt) -> Result<(BigInt, BigInt, BigInt)> {
    if n.is_even() || n <= &BigInt::from(5) {
        return Err(Error::NotTernaryInput(n.clone()));
    }
    let (q, r) = goldbach_pair(&(n - 3u32))?;
    let mut parts = [BigInt::from(3), q, r];
    parts.sort();
    let [a, b, c] = parts;
    Ok((a, b, c))
}

fn three_prime_terms(n: &BigInt) -> Result<Vec<Term>> {
    if n.is_negative() {
        return three_prime_terms(&-n).map(negate_all);
    }
    let (a, b, c) = three_prime_decomposition(n)?;
    Ok(vec![term(a), term(b), term(c)])
}

/// Shortest witness found for `n ≠ 0`, never longer than four terms.
pub fn plength_upper(n: &BigInt, caps: &Caps) -> Result<PLengthReport> {
    if n.is_zero() {
        return Err(Error::ZeroInput);
    }
    let report = |witness: Vec<Term>, evidence| PLengthReport {
        n: n.clone(),
        upper_bound: witness.len(),
        witness,
        evidence,
        caps: *caps,
    };
    if let Some(t) = length1_witness(n) {
        return Ok(report(vec![t], LengthEvidence::Exact));
    }
    if let Some(pair) = length2_witness(n, caps) {
        return Ok(report(pair.to_vec(), LengthEvidence::Exact));
    }
    let beyond_two = if n.is_odd() && sun_class_member(&n.abs()) {
        LengthEvidence::SunCertified
    } else {
        LengthEvidence::Candidate {
            two_power_cap: caps.two_power_cap,
        }
    };
    if n.is_odd() {
        // |n| ≤ 5 is always a prime power, so the ternary form applies.
        return Ok(report(three_prime_terms(n)?, beyond_two));
    }
    // Even: ±1 plus a two-term witness of the odd neighbour.
    for s in [1i32, -1] {
        let rest = n - s;
        if let Some(pair) = odd_length2(&rest, caps.two_power_cap) {
            let mut w = vec![term(s)];
            w.extend(pair);
            return Ok(report(w, beyond_two));
        }
    }
    let candidate = LengthEvidence::Candidate {
        two_power_cap: caps.two_power_cap,
    };
    let s = if n.is_positive() { 1 } else { -1 };
    let mut w = vec![term(s)];
    w.extend(three_prime_terms(&(n - s))?);
    Ok(report(w, candidate))
}
