use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::SMALL_PRIMES;

/// Witness set that makes Miller-Rabin exact for every `n < 3.3·10^24`.
const DETERMINISTIC_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Exact primality for machine words.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in SMALL_PRIMES.iter().take(12) {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    if n < 41 * 41 {
        return true;
    }
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    'witness: for &a in &DETERMINISTIC_BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Strong probable-prime test of odd `n > 2` to base `a`.
pub(crate) fn strong_probable_prime(n: &BigInt, a: &BigInt) -> bool {
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut x = a.modpow(&d, n);
    if x.is_one() || x == n_minus_1 {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return true;
        }
    }
    false
}

/// Jacobi symbol `(a / n)` for odd positive `n`.
pub(crate) fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            a >>= tz;
            let n_mod_8 = (&n % 8u32).to_u32().unwrap_or(0);
            if tz % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
                result = -result;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32() == Some(3) && (&n % 4u32).to_u32() == Some(3) {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    if x.is_odd() {
        (x + n) >> 1
    } else {
        x >> 1
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
/// `n` must be odd, greater than 2 and not a perfect square.
pub(crate) fn strong_lucas_probable_prime(n: &BigInt) -> bool {
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            0 if d.abs() != *n => return false,
            _ => {}
        }
        d = if d.is_positive() {
            -(d + 2u32)
        } else {
            -(d - 2u32)
        };
    }
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d) / 4;

    let n_plus_1 = n + 1u32;
    let s = n_plus_1.trailing_zeros().unwrap_or(0);
    let odd = &n_plus_1 >> s;

    let q_mod = q.mod_floor(n);
    let d_mod = d.mod_floor(n);
    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q_mod.clone();
    let bits = odd.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v) % n;
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        qk = (&qk * &qk) % n;
        if odd.bit(i) {
            let pu_v = &p * &u + &v;
            let du_pv = &d_mod * &u + &p * &v;
            u = half_mod(pu_v.mod_floor(n), n);
            v = half_mod(du_pv.mod_floor(n), n);
            qk = (&qk * &q_mod) % n;
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk) % n;
    }
    false
}

pub(crate) fn is_perfect_square(n: &BigInt) -> bool {
    let r = n.sqrt();
    &r * &r == *n
}

/// Probable-prime test for `n` beyond the machine-word range: trial
/// division, `rounds` strong bases, then a strong Lucas test.
pub(crate) fn big_probable_prime(n: &BigInt, rounds: u32) -> bool {
    if n.is_even() {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        if (n % p).is_zero() {
            return false;
        }
    }
    let rounds = rounds.max(1) as usize;
    for &p in SMALL_PRIMES.iter().take(rounds) {
        if !strong_probable_prime(n, &BigInt::from(p)) {
            return false;
        }
    }
    if rounds > SMALL_PRIMES.len() {
        // Extra bases past the small-prime table: consecutive integers.
        let mut a = BigInt::from(*SMALL_PRIMES.last().unwrap() + 2);
        for _ in SMALL_PRIMES.len()..rounds {
            if !strong_probable_prime(n, &a) {
                return false;
            }
            a += 2u32;
        }
    }
    if is_perfect_square(n) {
        return false;
    }
    strong_lucas_probable_prime(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jacobi_small() {
        // (2/7) = 1, (3/7) = -1, (5/21) = 1, (7/15) = -1
        let j = |a: i64, n: i64| jacobi(&BigInt::from(a), &BigInt::from(n));
        assert_eq!(j(2, 7), 1);
        assert_eq!(j(3, 7), -1);
        assert_eq!(j(5, 21), 1);
        assert_eq!(j(7, 15), -1);
        assert_eq!(j(-7, 5), -1);
        assert_eq!(j(-1, 5), 1);
        assert_eq!(j(6, 9), 0);
    }

    #[test]
    fn lucas_agrees_with_exact_test() {
        for n in (5u64..20_000).step_by(2) {
            let big = BigInt::from(n);
            if is_perfect_square(&big) {
                continue;
            }
            if is_prime_u64(n) {
                assert!(strong_lucas_probable_prime(&big), "{n}");
            }
        }
        // Strong base-2 pseudoprimes are caught by the Lucas half.
        for psp in [2047u64, 3277, 4033, 4681, 8321, 15841, 29341, 42799] {
            let big = BigInt::from(psp);
            assert!(strong_probable_prime(&big, &BigInt::from(2)), "{psp}");
            assert!(!strong_lucas_probable_prime(&big), "{psp}");
        }
    }

    #[test]
    fn carmichael_numbers_are_composite() {
        for n in [561u64, 1105, 1729, 2465, 2821, 6601, 8911, 3_215_031_751] {
            assert!(!is_prime_u64(n));
            assert!(!big_probable_prime(&BigInt::from(n), 64));
        }
    }
}
