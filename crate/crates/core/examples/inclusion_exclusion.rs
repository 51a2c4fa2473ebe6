//! Reassembling |S^{p/q}_n| from the sets containing the window and the
//! inclusion–exclusion layers of sets avoiding part of it.
//!
//! ```bash
//! cargo run -p schreier --example inclusion_exclusion
//! ```

use schreier::{binomial, inclusion_exclusion_decomposition, sequence_spq, Ratio};

fn main() -> schreier::Result<()> {
    for (p, q, n) in [(1, 1, 9), (1, 2, 10), (2, 3, 12), (1, 4, 14)] {
        let ratio = Ratio::new(p, q)?;
        let d = inclusion_exclusion_decomposition(n, ratio)?;
        let seq = sequence_spq(n, ratio);
        println!("p/q = {ratio}, n = {n}");
        println!(
            "  |A| = {}  (|S_{}| = {})",
            d.a_count,
            n - p - q,
            seq.values()[(n - p - q) as usize]
        );
        for (i, layer) in (1..).zip(&d.layer_sums) {
            let sign = if i % 2 == 1 { '+' } else { '-' };
            println!(
                "  {sign} layer {i}: {layer}  (C({q},{i})·|S_{}| = {})",
                n - i,
                binomial(q, i as i64) * &seq.values()[(n - i) as usize]
            );
        }
        println!(
            "  = {}  (recurrence: {})",
            d.assembled,
            seq.values()[n as usize]
        );
    }
    Ok(())
}
