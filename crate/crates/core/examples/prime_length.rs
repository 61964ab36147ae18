//! Prime-power lengths: witnesses, Goldbach pairs and three-prime sums.
//!
//!     cargo run --example prime_length -- 58164433

use gadic::plength::{goldbach_pair, plength_upper, three_prime_decomposition, Caps};
use num_bigint::BigInt;

fn main() -> gadic::Result<()> {
    let caps = Caps::default();
    let inputs: Vec<BigInt> = match std::env::args().nth(1) {
        Some(s) => vec![s.parse().expect("integer")],
        None => [1i64, 6, -35, 2047, 4093, 58_164_433]
            .into_iter()
            .map(BigInt::from)
            .collect(),
    };
    for n in &inputs {
        println!("{}\n", plength_upper(n, &caps)?);
    }

    let (p, q) = goldbach_pair(&BigInt::from(1_000_000))?;
    println!("1000000 = {p} + {q}");
    let (p, q, r) = three_prime_decomposition(&BigInt::from(999_999))?;
    println!("999999 = {p} + {q} + {r}");
    Ok(())
}
