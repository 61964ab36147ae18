//! Smallest positive integers of each g-length, and the table for primes
//! below 30.
//!
//!     cargo run --example lambda_table -- csv

use gadic::dataset::{emit_lambda_table, TableSpec};
use gadic::gadic::{lambda, lambda_digits};

fn main() -> gadic::Result<()> {
    let format = std::env::args().nth(1).unwrap_or_else(|| "text".into());
    let spec = TableSpec {
        format: format.parse()?,
        ..TableSpec::default()
    };
    print!("{}", emit_lambda_table(&spec)?);

    // The closed form also yields the digits directly.
    for (g, k) in [(2, 5), (10, 7), (19, 20)] {
        println!(
            "lambda_{g}({k}) = {} = {}",
            lambda(g, k)?,
            lambda_digits(g, k)?
        );
    }
    Ok(())
}
