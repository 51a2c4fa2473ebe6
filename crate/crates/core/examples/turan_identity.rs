//! Intervals F ⊆ [n] with p·min F ≥ |F| are exactly as numerous as the
//! edges of the Turán graph T(n+1, p+1).
//!
//! ```bash
//! cargo run -p schreier --example turan_identity
//! ```

use schreier::{verify_turan_identity, TuranSpec};

fn main() -> schreier::Result<()> {
    let spec = TuranSpec::new(7, 3)?;
    println!(
        "T(7,3): parts {:?}, residue {}, {} edges",
        spec.part_sizes,
        spec.residue,
        spec.edge_count()
    );
    let edges: Vec<String> = spec
        .edges()
        .take(8)
        .map(|(u, v)| format!("{u}-{v}"))
        .collect();
    println!("  first edges: {}", edges.join(" "));

    println!("n\tp\tsum\tclosed\tenum\tT-formula\tT-graph\tpass");
    for (n, p) in [(1, 1), (3, 2), (4, 2), (4, 4), (10, 3), (25, 4), (120, 7)] {
        let r = verify_turan_identity(n, p)?;
        println!(
            "{n}\t{p}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.interval_sum,
            r.interval_closed,
            r.interval_enumerated.expect("enumerated"),
            r.turan_formula,
            r.turan_construction,
            r.pass
        );
    }
    Ok(())
}
