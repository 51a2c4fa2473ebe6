//! Schreier sets with `max F = n` are counted by the Fibonacci numbers, and
//! changing the ratio `p/q` gives higher-order recurrences.
//!
//! ```bash
//! cargo run -p schreier --example fibonacci_schreier
//! ```

use schreier::{count_spq_recurrence, enumerate_spq, sequence_spq, Ratio};

fn main() -> schreier::Result<()> {
    let fib = Ratio::new(1, 1)?;
    for n in 1..=6 {
        let listing = enumerate_spq(n, fib)?;
        let members: Vec<String> = listing.members.iter().map(|f| f.to_string()).collect();
        println!("|S_{n}| = {}: {}", listing.len(), members.join(" "));
    }
    println!("|S_100| = {}", count_spq_recurrence(100, fib));

    for (p, q) in [(2, 1), (3, 1), (1, 2), (1, 3), (3, 2)] {
        let seq = sequence_spq(15, Ratio::new(p, q)?);
        let values: Vec<String> = seq.from_one().iter().map(|v| v.to_string()).collect();
        println!("p/q = {p}/{q}: {}", values.join(", "));
    }
    Ok(())
}
