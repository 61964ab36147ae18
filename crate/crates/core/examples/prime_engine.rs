//! Primality verdicts, prime-power detection, roots and factoring.

use gadic::prime::{factor, integer_kth_root, is_prime, is_prime_power, primes_up_to};
use num_bigint::BigInt;

fn main() -> gadic::Result<()> {
    println!("pi(10^6) = {}", primes_up_to(1_000_000).len());

    for s in [
        "18446744073709551557",
        "170141183460469231731687303715884105727",
        "47867742232066880047611079",
        "3215031751",
    ] {
        let n: BigInt = s.parse().unwrap();
        println!("{n}: {}", is_prime(&n));
    }

    for n in [1u64, 243, 1 << 40, 58_164_433, 7_u64.pow(22)] {
        let b = BigInt::from(n);
        match is_prime_power(&b) {
            Some(w) => println!("{n} = {w}"),
            None => println!("{n} is not a prime power"),
        }
    }

    let big = BigInt::from(10).pow(40) + 7u32;
    println!("cube root of 10^40 + 7 is {}", integer_kth_root(&big, 3)?);

    for s in [
        "58164433",
        "133014037665409087128068994259",
        "18446744073709551615",
    ] {
        let n: BigInt = s.parse().unwrap();
        println!("{n} = {}", factor(&n)?);
    }
    Ok(())
}
