//! Writes the figure datasets as CSV into a directory (default `target/figures`).

use std::fs;
use std::path::PathBuf;

use gadic::dataset::{emit_length_histogram, emit_length_vs_g, length_vs_g_csv};
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = PathBuf::from(
        std::env::args()
            .nth(1)
            .unwrap_or_else(|| "target/figures".into()),
    );
    fs::create_dir_all(&dir)?;

    let rows = emit_length_vs_g(&BigInt::from(20_233_509), 2, 100)?;
    fs::write(dir.join("length_vs_g.csv"), length_vs_g_csv(&rows))?;
    let (g, len) = rows.iter().max_by_key(|r| r.1).unwrap();
    println!(
        "length_vs_g.csv: {} rows, longest {len} at g = {g}",
        rows.len()
    );

    let h = emit_length_histogram(19, 10_000)?;
    fs::write(dir.join("lengths_base19.csv"), h.to_csv())?;
    println!(
        "lengths_base19.csv: {} points, overlay {:?}",
        h.points.len(),
        h.overlay
            .iter()
            .map(|(k, v)| format!("({v}, {k})"))
            .collect::<Vec<_>>()
    );
    Ok(())
}
