//! Ellipticity by the fixed-space criterion, the closed-form criterion, and
//! the component count.

use inner_rgroups::elliptic::elliptic_report;
use inner_rgroups::groupdata::{Family, GroupDatum, LeviDatum};
use inner_rgroups::repdatum::SigmaDatum;
use inner_rgroups::rgroup::knapp_stein;

fn main() {
    let d = GroupDatum::quasi_split(Family::D1, 5);
    let levi = LeviDatum::new(vec![1, 1, 1], 2, 1);
    for (a, b, c) in [
        (true, true, true),
        (false, false, true),
        (false, false, false),
    ] {
        for fixes in [false, true] {
            let s = SigmaDatum::new(&["a", "b", "c"])
                .self_dual("a", a)
                .self_dual("b", b)
                .self_dual("c", c)
                .with_c0_fixes_tau(fixes);
            let r = knapp_stein(&d, &levi, &s).unwrap();
            let e = elliptic_report(&d, &levi, &s, &r).unwrap();
            println!(
                "reducible {:?} c0 fixes tau {:<5}  R {}  d2 {:?}  elliptic {:<5} herb {:?}  witness {}  components {}",
                [a, b, c],
                fixes,
                r.iso_type(),
                e.d2,
                e.elliptic,
                e.herb_elliptic,
                e.witness.as_ref().map_or("-".into(), |w| r.context.label(w)),
                e.component_count
            );
        }
    }
}
