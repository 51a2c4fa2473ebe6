//! Brute-force listings of both families, straight from the definitions.
//!
//! ```bash
//! cargo run -p schreier --example enumerate_families -- 6 1 2
//! ```

use std::env;

use schreier::{enumerate_interval_schreier, enumerate_spq, Ratio};

fn main() -> schreier::Result<()> {
    let args: Vec<u64> = env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (n, p, q) = match args[..] {
        [n, p, q] => (n, p, q),
        _ => (5, 1, 2),
    };

    let ratio = Ratio::new(p, q)?;
    let spq = enumerate_spq(n, ratio)?;
    println!("S^{{{ratio}}}_{n}: {} sets", spq.len());
    for f in &spq.members {
        println!("  {f}");
    }

    let intervals = enumerate_interval_schreier(n, p)?;
    println!(
        "intervals in [1, {n}] with {p}·min F ≥ |F|: {}",
        intervals.len()
    );
    for f in &intervals.members {
        println!("  {f}");
    }
    Ok(())
}
