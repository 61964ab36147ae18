//! Lengths when some primes are removed from the generating set.
//!
//!     cargo run --example restricted_primes -- 2,3,5

use gadic::plength::{restricted_prime_length, Caps};
use num_bigint::BigInt;

fn main() -> gadic::Result<()> {
    let excluded: Vec<u64> = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "2,3".into())
        .split(',')
        .map(|s| s.trim().parse().expect("prime"))
        .collect();
    let caps = Caps::default();
    for n in [7i64, 8, 12, 97, 210, -1001, 65_536] {
        let r = restricted_prime_length(&BigInt::from(n), &excluded, &caps)?;
        let terms: Vec<String> = r.witness.iter().map(ToString::to_string).collect();
        println!("{n:>6}: length <= {}  {}", r.bound, terms.join(" "));
    }
    Ok(())
}
