use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{passes_primality, primes_up_to};
use crate::error::{Error, Result};

/// Iterations allowed per Pollard rho split before giving up.
pub const DEFAULT_RHO_BUDGET: u64 = 10_000_000;

const TRIAL_BOUND: u64 = 1 << 16;

fn trial_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| primes_up_to(TRIAL_BOUND))
}

/// Prime factorization as an ordered map `prime -> exponent`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Factorization(BTreeMap<BigInt, u32>);

impl Factorization {
    fn insert(&mut self, p: BigInt, e: u32) {
        *self.0.entry(p).or_insert(0) += e;
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BigInt, u32)> {
        self.0.iter().map(|(p, &e)| (p, e))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, p: &BigInt) -> u32 {
        self.0.get(p).copied().unwrap_or(0)
    }

    /// `Π p^e`.
    pub fn product(&self) -> BigInt {
        self.iter().fold(BigInt::one(), |acc, (p, e)| {
            acc * num_traits::pow(p.clone(), e as usize)
        })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (p, e)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Factors `n ≥ 2` with the default rho budget.
pub fn factor(n: &BigInt) -> Result<Factorization> {
    factor_with_budget(n, DEFAULT_RHO_BUDGET)
}

/// Trial division below `2^16`, then Brent's variant of Pollard rho on what
/// remains. Each split may use at most `budget` iterations.
pub fn factor_with_budget(n: &BigInt, budget: u64) -> Result<Factorization> {
    let two = BigInt::from(2);
    if n < &two {
        return Err(Error::OutOfRange {
            value: n.clone(),
            min: two,
        });
    }
    let mut out = Factorization::default();
    let mut rest = n.clone();
    for &p in trial_primes() {
        if (&rest % p).is_zero() {
            let pb = BigInt::from(p);
            let mut e = 0;
            while (&rest % p).is_zero() {
                rest /= &pb;
                e += 1;
            }
            out.insert(pb, e);
        }
        if rest.is_one() {
            return Ok(out);
        }
        if BigInt::from(p * p) > rest {
            break;
        }
    }
    if rest.is_one() {
        return Ok(out);
    }

    let mut pending = vec![rest];
    while let Some(m) = pending.pop() {
        if m.is_one() {
            continue;
        }
        if m.to_u64().is_some_and(|s| s < TRIAL_BOUND * TRIAL_BOUND) || passes_primality(&m) {
            // Below 2^32 with no factor under 2^16 means prime.
            out.insert(m, 1);
            continue;
        }
        let d = rho_split(&m, budget)?;
        let other = &m / &d;
        pending.push(d);
        pending.push(other);
    }
    Ok(out)
}

/// Finds a nontrivial divisor of composite `n` (odd, no factor below 2^16).
fn rho_split(n: &BigInt, budget: u64) -> Result<BigInt> {
    let mut spent = 0u64;
    let mut charge = |k: u64| {
        spent += k;
        if spent > budget {
            Err(Error::RhoBudgetExhausted {
                n: n.clone(),
                budget,
            })
        } else {
            Ok(())
        }
    };
    const BATCH: u64 = 128;
    for c in 1u32.. {
        let f = |x: &BigInt| (x * x + c) % n;
        let mut y = BigInt::from(2);
        let mut x = y.clone();
        let mut ys = y.clone();
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut r = 1u64;
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            charge(r)?;
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let steps = BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    q = (q * (&x - &y).mod_floor(n)) % n;
                }
                charge(steps)?;
                g = q.gcd(n);
                k += steps;
            }
            r *= 2;
        }
        if g == *n {
            // Batched product collapsed; walk back one step at a time.
            loop {
                ys = f(&ys);
                charge(1)?;
                g = (&x - &ys).gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return Ok(g);
        }
    }
    unreachable!("rho constant search is unbounded")
}
