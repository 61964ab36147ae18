use gadic::plength::{goldbach_pair, three_prime_decomposition};
use gadic::prime::{
    factor, integer_kth_root, is_prime, is_prime_power, primes_up_to, PrimePowerWitness,
};
use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use proptest::prelude::*;

/// Plain sieve of Eratosthenes, kept deliberately naive.
fn naive_sieve(n: usize) -> Vec<bool> {
    let mut is = vec![true; n + 1];
    is[0] = false;
    if n >= 1 {
        is[1] = false;
    }
    let mut i = 2;
    while i * i <= n {
        if is[i] {
            let mut j = i * i;
            while j <= n {
                is[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    is
}

fn trial_division(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

#[test]
fn prime_counts() {
    let primes = primes_up_to(1_000_000);
    assert_eq!(primes.len(), 78_498);
    let sieve = naive_sieve(1_000_000);
    let expected: Vec<u64> = (0..=1_000_000u64).filter(|&n| sieve[n as usize]).collect();
    assert_eq!(primes, expected);
}

#[test]
fn primality_matches_sieve() {
    let sieve = naive_sieve(1_000_000);
    for n in 0..=1_000_000u64 {
        assert_eq!(
            is_prime(&BigInt::from(n)).passes(),
            sieve[n as usize],
            "{n}"
        );
    }
}

#[test]
fn prime_powers_match_direct_search() {
    let sieve = naive_sieve(100_000);
    let mut expected = vec![false; 100_001];
    for (p, &prime) in sieve.iter().enumerate() {
        if prime {
            let mut q = p;
            while q <= 100_000 {
                expected[q] = true;
                q *= p;
            }
        }
    }
    for n in 2..=100_000u64 {
        let w = is_prime_power(&BigInt::from(n));
        assert_eq!(w.is_some(), expected[n as usize], "{n}");
        if let Some(w) = w {
            assert_eq!(w.value(), BigInt::from(n));
            assert!(sieve[w.base().unwrap().to_usize().unwrap()]);
        }
    }
    assert_eq!(is_prime_power(&BigInt::one()), Some(PrimePowerWitness::One));
}

#[test]
fn goldbach_for_even_numbers() {
    let sieve = naive_sieve(1_000_000);
    for n in (4..=1_000_000u64).step_by(2) {
        let (p, q) = goldbach_pair(&BigInt::from(n)).unwrap();
        let (p, q) = (p.to_usize().unwrap(), q.to_usize().unwrap());
        assert!(sieve[p] && sieve[q] && p + q == n as usize && p <= q, "{n}");
        // The smallest prime that works is the one reported.
        assert!((2..p).all(|r| !(sieve[r] && sieve[n as usize - r])), "{n}");
    }
}

#[test]
fn three_primes_for_odd_numbers() {
    let sieve = naive_sieve(100_000);
    for n in (7..=100_000u64).step_by(2) {
        let (p, q, r) = three_prime_decomposition(&BigInt::from(n)).unwrap();
        let parts = [p, q, r].map(|x| x.to_usize().unwrap());
        assert!(parts.iter().all(|&x| sieve[x]), "{n}");
        assert_eq!(parts.iter().sum::<usize>(), n as usize);
    }
}

#[test]
fn known_factorizations() {
    let f = factor(&BigInt::from(58_164_433u64)).unwrap();
    assert_eq!(f.to_string(), "4889 * 11897");
    let m: BigInt = "133014037665409087128068994259".parse().unwrap();
    assert_eq!(
        factor(&m).unwrap().to_string(),
        "23 * 299723 * 19295212676140402555471"
    );
    let f = factor(&BigInt::from(u64::MAX)).unwrap();
    assert_eq!(f.to_string(), "3 * 5 * 17 * 257 * 641 * 65537 * 6700417");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn primality_matches_trial_division(n in 0u64..(1 << 40)) {
        prop_assert_eq!(is_prime(&BigInt::from(n)).passes(), trial_division(n));
    }

    #[test]
    fn factor_products(n in 2u64..u64::MAX) {
        let b = BigInt::from(n);
        let f = factor(&b).unwrap();
        prop_assert_eq!(f.product(), b);
        for (p, _) in f.iter() {
            prop_assert!(is_prime(p).passes());
        }
    }

    #[test]
    fn powers_of_primes_are_detected(i in 0usize..2000, k in 1u32..6) {
        let p = primes_up_to(20_000)[i];
        let v = BigInt::from(p).pow(k);
        let w = is_prime_power(&v).unwrap();
        prop_assert_eq!(w.base(), Some(&BigInt::from(p)));
        prop_assert_eq!(w.exponent(), k);
    }

    #[test]
    fn roots_bracket(n in any::<u128>(), k in 1u32..9) {
        let b = BigInt::from(n);
        let r = integer_kth_root(&b, k).unwrap();
        prop_assert!(r.pow(k) <= b);
        prop_assert!((r + 1u32).pow(k) > b);
    }
}

#[test]
fn random_composites_are_not_prime_powers() {
    // Fixed pseudo-random values p^e * q with distinct primes p, q.
    let primes = primes_up_to(1 << 20);
    let mut state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state
    };
    for _ in 0..10_000 {
        let a = primes[(next() % primes.len() as u64) as usize];
        let b = primes[(next() % primes.len() as u64) as usize];
        if a == b {
            continue;
        }
        let e = (next() % 3 + 1) as u32;
        let n = BigInt::from(a).pow(e) * b;
        assert!(is_prime_power(&n).is_none(), "{n}");
        assert!(!is_prime(&n).passes());
    }
}
