//! Run every verification grid at its default bounds, in parallel, then
//! rerun the recurrence grid with a corrupted base case to show a failure.
//!
//! ```bash
//! cargo run --release -p schreier --example verify_grids
//! ```

use schreier::verify::{run_suite, run_suite_with_fault, Fault, Suite};

fn main() -> schreier::Result<()> {
    let mut all = true;
    for suite in Suite::ALL {
        let report = run_suite(suite, suite.default_bounds())?;
        all &= report.pass();
        println!("{report}");
    }
    println!("{}", if all { "all suites pass" } else { "FAILURES" });

    println!("\nwith |S_1| off by one:");
    let broken = run_suite_with_fault(
        Suite::Recurrence,
        Suite::Recurrence.default_bounds(),
        Fault::BaseCaseOffByOne,
    )?;
    println!("{broken}");
    Ok(())
}
