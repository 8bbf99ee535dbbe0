//! Load a scenario (or pair) document and print the report the CLI prints.
//!
//!     cargo run --example scenario_file -- crates/core/scenarios/d1_even_d2.json

use inner_rgroups::cli::{load_scenarios, ScenarioReport};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/scenarios/c3_repeated_reducible.json"
        )
        .into()
    });
    let text = std::fs::read_to_string(&path).expect("readable scenario file");
    let scenarios = match load_scenarios(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    for sc in &scenarios {
        let report = ScenarioReport::compute(sc).expect("supported scenario");
        print!("{}", report.to_text());
        println!();
    }
}
