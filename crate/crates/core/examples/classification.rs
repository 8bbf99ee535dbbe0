//! Inner forms of each classical family and their maximal Levi subgroups.
//!
//!     cargo run --example classification -- D1 6

use inner_rgroups::groupdata::{enumerate_inner_forms, enumerate_maximal_levis, Family};

fn main() {
    let mut args = std::env::args().skip(1);
    let family: Family = args
        .next()
        .as_deref()
        .unwrap_or("C")
        .parse()
        .expect("family");
    let rank: u32 = args.next().map_or(4, |r| r.parse().expect("rank"));

    for g in enumerate_inner_forms(family, rank) {
        println!("{g}: {}", g.display_name());
        for d in enumerate_maximal_levis(&g) {
            let note = if d.rgroup_supported {
                ""
            } else {
                "  [no R-group]"
            };
            println!(
                "    {:<8} m={} {}{note}",
                d.levi.blocks_display(),
                d.levi.m,
                d.name
            );
        }
    }
}
