//! Minimal g-adic expansions, lengths and digit-wise comparison.
//!
//!     cargo run --example expansions -- 46 5

use gadic::gadic::{compare_by_digits, expand, g_length, validate};
use num_bigint::BigInt;

fn main() -> gadic::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: BigInt = args
        .next()
        .map_or(46.into(), |s| s.parse().expect("integer"));
    let g: u32 = args.next().map_or(5, |s| s.parse().expect("base"));

    let e = expand(&n, g)?;
    println!("[{n}]_{g} = {e}  (least significant digit first)");
    println!("length {}", e.length());
    assert!(validate(&e).is_empty());

    // Negation flips every digit; multiplying by g shifts.
    println!("[{}]_{g} = {}", -&n, expand(&-&n, g)?);
    println!("[{}]_{g} = {}", &n * g, expand(&(&n * g), g)?);

    // Even bases need the tie rule: with g = 4 the digit 2 cannot be
    // followed by a digit of opposite sign.
    for m in [2, 6, 10, -10, 42] {
        let b = BigInt::from(m);
        println!("[{m}]_4 = {}  length {}", expand(&b, 4)?, g_length(&b, 4)?);
    }

    let m = &n + 1u32;
    println!("{n} vs {m} by digits: {:?}", compare_by_digits(&n, &m, g)?);
    Ok(())
}
