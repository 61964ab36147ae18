//! OEIS b-files for the lambda sequences, with a parse round trip.
//!
//!     cargo run --example bfile -- 19 30

use gadic::dataset::{emit_bfile, format_bfile, parse_bfile};

fn main() -> gadic::Result<()> {
    let mut args = std::env::args().skip(1);
    let g: u32 = args.next().map_or(2, |s| s.parse().expect("base"));
    let count: u64 = args.next().map_or(20, |s| s.parse().expect("count"));

    let records = emit_bfile(g, count)?;
    let text = format!(
        "# lambda_{g}(n), n = 1..{count}\n{}",
        format_bfile(&records)
    );
    print!("{text}");
    assert_eq!(parse_bfile(&text)?, records);
    Ok(())
}
