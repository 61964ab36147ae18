use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::prime::{is_prime_power, prime_power_u64, PrimePowerTable};

/// The dense table never grows past this many entries unless the range
/// itself is larger.
const TABLE_FLOOR: u64 = 1 << 25;

const CHUNK: usize = 4096;

/// `1` or a prime power, for a value that may exceed `u64`.
fn unit_or_prime_power(v: u128, table: Option<&PrimePowerTable>) -> bool {
    if let Ok(small) = u64::try_from(v) {
        if let Some(hit) = table.and_then(|t| t.contains(small)) {
            return hit;
        }
        return small == 1 || prime_power_u64(small).is_some();
    }
    is_prime_power(&BigInt::from(v)).is_some()
}

/// Largest exponent for which `n + 2^j` still fits in a `u128`.
const U128_EXPONENTS: u32 = 126;

fn survives(n: u64, cap: u32, table: Option<&PrimePowerTable>) -> bool {
    let n128 = u128::from(n);
    if unit_or_prime_power(n128, table) {
        return false;
    }
    for j in 0..=cap.min(U128_EXPONENTS) {
        let pw = 1u128 << j;
        let below = n128.abs_diff(pw);
        if below != 0 && unit_or_prime_power(below, table) {
            return false;
        }
        if unit_or_prime_power(n128 + pw, table) {
            return false;
        }
    }
    if cap > U128_EXPONENTS {
        let n = BigInt::from(n);
        let mut pw = BigInt::from(1) << (U128_EXPONENTS + 1);
        for _ in U128_EXPONENTS + 1..=cap {
            if is_prime_power(&(&pw - &n)).is_some() || is_prime_power(&(&pw + &n)).is_some() {
                return false;
            }
            pw <<= 1;
        }
    }
    true
}

/// True when odd `n` is neither `±1` nor `±` a prime power and no
/// `|n ± 2^j|` with `0 ≤ j ≤ cap` is `1` or a prime power.
pub fn is_length3_candidate(n: &BigInt, cap: u32) -> bool {
    let n = n.abs();
    if !n.bit(0) {
        return false;
    }
    if let Some(small) = n.to_u64() {
        return survives(small, cap, None);
    }
    if is_prime_power(&n).is_some() {
        return false;
    }
    let mut pw = BigInt::from(1);
    for _ in 0..=cap {
        let below = (&n - &pw).abs();
        if below.bits() > 0 && is_prime_power(&below).is_some() {
            return false;
        }
        if is_prime_power(&(&n + &pw)).is_some() {
            return false;
        }
        pw <<= 1;
    }
    true
}

/// All odd `n ∈ [lo, hi]` that survive [`is_length3_candidate`] with the
/// given cap, in ascending order.
///
/// A prime-power table covering `[0, hi + 2^j]` for the small `j` is built
/// once and shared; larger `|n ± 2^j|` are tested directly. The range is
/// split into chunks processed on a pool of `threads` workers.
pub fn sieve_length3_candidates(lo: u64, hi: u64, cap: u32, threads: usize) -> Result<Vec<u64>> {
    if lo.is_multiple_of(2) || hi.is_multiple_of(2) || lo > hi {
        return Err(Error::InvalidSieveRange { lo, hi });
    }
    if threads == 0 {
        return Err(Error::InvalidConfig(
            "thread count must be at least 1".into(),
        ));
    }
    let ceiling = TABLE_FLOOR.max(hi.saturating_mul(4));
    let limit = (0..=cap.min(63))
        .map(|j| hi.saturating_add(1u64 << j))
        .take_while(|&l| l <= ceiling)
        .last()
        .unwrap_or(hi);
    let table = PrimePowerTable::new(limit);

    let odds: Vec<u64> = (lo..=hi).step_by(2).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    let survivors = pool.install(|| {
        odds.par_chunks(CHUNK)
            .flat_map_iter(|chunk| {
                chunk
                    .iter()
                    .copied()
                    .filter(|&n| survives(n, cap, Some(&table)))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>()
    });
    Ok(survivors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plength::{length1_witness, length2_witness, Caps};

    #[test]
    fn frontier_survives() {
        assert_eq!(
            sieve_length3_candidates(58_164_433, 58_164_433, 64, 1).unwrap(),
            vec![58_164_433]
        );
        assert!(is_length3_candidate(&BigInt::from(58_164_433), 64));
    }

    #[test]
    fn prime_powers_never_survive() {
        let out = sieve_length3_candidates(3, 3, 10, 1).unwrap();
        assert!(out.is_empty());
        let out = sieve_length3_candidates(2187, 2187, 10, 2).unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn bad_ranges() {
        assert!(sieve_length3_candidates(4, 9, 10, 1).is_err());
        assert!(sieve_length3_candidates(9, 3, 10, 1).is_err());
        assert!(sieve_length3_candidates(3, 9, 10, 0).is_err());
    }

    #[test]
    fn agrees_with_witness_search() {
        // With a tiny cap plenty of small values survive; the sieve must
        // flag exactly those without one- or two-term witnesses.
        let cap = 2;
        let caps = Caps::with_two_power_cap(cap);
        let survivors = sieve_length3_candidates(1, 4001, cap, 3).unwrap();
        for n in (1..=4001u64).step_by(2) {
            let b = BigInt::from(n);
            let expected = length1_witness(&b).is_none() && length2_witness(&b, &caps).is_none();
            assert_eq!(survivors.binary_search(&n).is_ok(), expected, "{n}");
            assert_eq!(is_length3_candidate(&b, cap), expected, "{n}");
        }
        assert!(!survivors.is_empty());
    }

    #[test]
    fn large_cap_goes_past_u64() {
        // 2^64 + n does not fit a machine word; the u128 path must still run.
        assert!(!is_length3_candidate(&BigInt::from(3u32), 70));
        assert!(is_length3_candidate(&BigInt::from(58_164_433), 70));
    }

    #[test]
    fn caps_beyond_u128() {
        // 34561 first meets a prime at 2^48 + 34561; larger caps must not
        // resurrect it.
        let n = BigInt::from(34_561);
        assert!(is_length3_candidate(&n, 47));
        assert!(!is_length3_candidate(&n, 48));
        assert!(!is_length3_candidate(&n, 200));
        assert!(sieve_length3_candidates(34_561, 34_561, 200, 1)
            .unwrap()
            .is_empty());
    }
}
