//! Exhaustive check of every invariant on small groups.
//!
//!     cargo run --release --example sweep -- 3 5

use std::time::Instant;

use inner_rgroups::sweep::{run_sweep, SweepConfig, CHECKS};

fn main() {
    let mut args = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer"));
    let max_k = args.next().unwrap_or(3) as usize;
    let max_rank = args.next().unwrap_or(4);
    let start = Instant::now();
    match run_sweep(&SweepConfig { max_k, max_rank }) {
        Ok(s) => {
            println!(
                "{} scenarios, {} pairs in {:.2?}",
                s.scenarios,
                s.pairs,
                start.elapsed()
            );
            for c in CHECKS {
                println!("  {c:<24} {}", s.count(c));
            }
        }
        Err(f) => {
            eprintln!("{}", serde_json::to_string_pretty(&f.to_json()).unwrap());
            std::process::exit(3);
        }
    }
}
