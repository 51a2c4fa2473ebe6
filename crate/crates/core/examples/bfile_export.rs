//! Export a sequence as an OEIS b-file and read it back.
//!
//! ```bash
//! cargo run -p schreier --example bfile_export -- 1 2 500 b_schreier_1_2.txt
//! ```

use std::{env, fs};

use schreier::bfile::BFile;
use schreier::{sequence_spq, Ratio};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = env::args().skip(1).collect();
    let num = |i: usize, default: u64| args.get(i).and_then(|a| a.parse().ok()).unwrap_or(default);
    let (p, q, n_max) = (num(0, 1), num(1, 2), num(2, 40));
    let ratio = Ratio::new(p, q)?;

    let seq = sequence_spq(n_max, ratio);
    let bfile = BFile::from_values(1, seq.from_one().iter().cloned())
        .with_comment(format!("|S^{{{p}/{q}}}_n|, n = 1..{n_max}"));
    let text = bfile.render();

    match args.get(3) {
        Some(path) => {
            fs::write(path, &text)?;
            let back = BFile::parse(&fs::read_to_string(path)?)?;
            assert_eq!(back, bfile);
            println!("wrote {} terms to {path}", back.lines.len());
        }
        None => print!("{text}"),
    }
    Ok(())
}
