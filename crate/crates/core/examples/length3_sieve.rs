//! Bulk search for odd integers with no two-term prime-power form among
//! `n ± 2^j`, run twice to show how the exponent cap matters.
//!
//!     cargo run --release --example length3_sieve -- 999999 4

use gadic::plength::sieve_length3_candidates;

fn main() -> gadic::Result<()> {
    let mut args = std::env::args().skip(1);
    let hi: u64 = args
        .next()
        .map_or(999_999, |s| s.parse().expect("odd bound"));
    let threads: usize = args.next().map_or(4, |s| s.parse().expect("threads"));

    for cap in [40, 64, 185] {
        let found = sieve_length3_candidates(3, hi, cap, threads)?;
        let head: Vec<String> = found.iter().take(8).map(u64::to_string).collect();
        println!("cap 2^{cap}: {} candidates {}", found.len(), head.join(" "));
    }
    Ok(())
}
