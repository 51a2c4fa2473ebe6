//! Three independent ways to get |S^{p/q}_n|: walk every subset, run the
//! linear recurrence, or sum binomials over the smallest element.
//!
//! ```bash
//! cargo run --release -p schreier --example recurrence_vs_oracle
//! ```

use std::time::Instant;

use schreier::{count_spq_bruteforce, count_spq_direct, count_spq_recurrence, Ratio};

fn main() -> schreier::Result<()> {
    let ratio = Ratio::new(3, 2)?;
    println!("n\toracle\trecurrence\tdirect\toracle_ms");
    for n in (4..=24).step_by(4) {
        let start = Instant::now();
        let oracle = count_spq_bruteforce(n, ratio)?;
        let ms = start.elapsed().as_secs_f64() * 1e3;
        let rec = count_spq_recurrence(n, ratio);
        let direct = count_spq_direct(n, ratio);
        assert!(oracle == rec && rec == direct);
        println!("{n}\t{oracle}\t{rec}\t{direct}\t{ms:.3}");
    }

    let start = Instant::now();
    let big = count_spq_recurrence(10_000, ratio);
    println!(
        "n = 10000: {} digits in {:?}",
        big.to_string().len(),
        start.elapsed()
    );
    match count_spq_bruteforce(10_000, ratio) {
        Err(e) => println!("oracle: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
