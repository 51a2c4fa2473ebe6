//! The relabelings that prove the recurrence, run on a concrete instance.
//!
//! ```bash
//! cargo run -p schreier --example proof_bijections
//! ```

use schreier::bijections::{check_gap_bijection, check_window_bijection, contains_window};
use schreier::{enumerate_spq, phi_a, phi_g, psi_map, GapSet, Ratio};

fn main() -> schreier::Result<()> {
    let ratio = Ratio::new(1, 2)?;
    let n = 7;
    let members = enumerate_spq(n, ratio)?.members;

    for gaps in GapSet::all(n, ratio)? {
        let psi = psi_map(&gaps);
        println!("G = {:?}, psi = {:?}", gaps.members(), psi.pairs());
        for f in members
            .iter()
            .filter(|f| gaps.members().iter().all(|&g| !f.contains(g)))
        {
            println!("  {f} -> {}", phi_g(f, &gaps)?);
        }
        let check = check_gap_bijection(&gaps)?;
        println!(
            "  bijection onto S_{}: {} = {}",
            gaps.target_n(),
            check.domain,
            check.codomain
        );
    }

    println!("window map, A -> S_{}:", n - ratio.p() - ratio.q());
    for f in members.iter().filter(|f| contains_window(f, ratio, n)) {
        println!("  {f} -> {}", phi_a(f, ratio, n)?);
    }
    let check = check_window_bijection(n, ratio)?;
    println!("  bijection: {} = {}", check.domain, check.codomain);
    Ok(())
}
