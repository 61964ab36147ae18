//! Breadth-first word lengths for a few generating sets, compared against
//! the closed forms where those exist.

use gadic::cayley::{bfs_lengths, oracle_lambda, shortest_path, GeneratingSet};
use gadic::gadic::{g_length_i64, lambda};

fn main() -> gadic::Result<()> {
    let s2: GeneratingSet = "g:2".parse()?;
    let table = bfs_lengths(&s2, -16, 16, 4)?;
    println!(
        "{s2}: length of 3 is {:?}, of 11 is {:?}",
        table.get(3),
        table.get(11)
    );
    println!("a geodesic to 11: {:?}", shortest_path(&s2, 11, 4)?);

    for g in 2..=12u32 {
        let set = GeneratingSet::Base(u64::from(g));
        let table = bfs_lengths(&set, -2000, 2000, 4)?;
        let agree = table
            .iter()
            .all(|(n, len)| u64::from(len) == g_length_i64(n, g).unwrap());
        let l4 = oracle_lambda(&set, 4, 5000, 4)?;
        println!("g = {g:>2}: oracle agrees on [-2000, 2000]: {agree}; lambda(4) = {l4:?} (closed form {})", lambda(g, 4)?);
    }

    // No closed form here; the oracle is the only source.
    let mixed: GeneratingSet = "primes:2,3".parse()?;
    for k in 1..=5 {
        println!(
            "{mixed}: first n at length {k} is {:?}",
            oracle_lambda(&mixed, k, 5000, 4)?
        );
    }

    let primes = GeneratingSet::all_primes();
    let table = bfs_lengths(&primes, -1000, 1000, 4)?;
    println!(
        "{primes}: longest length on [-1000, 1000] is {}",
        table.max_length()
    );
    Ok(())
}
