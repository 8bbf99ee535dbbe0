//! `W_M` as signed block permutations: elements, roots and the action on a
//! datum.

use inner_rgroups::groupdata::{Family, GroupDatum, LeviDatum};
use inner_rgroups::repdatum::SigmaDatum;
use inner_rgroups::rootdata::reduced_roots;
use inner_rgroups::weylgroup::{act_on_root, fixed_space_dim, WeylContext};

fn main() {
    // GL_1 x GL_1 x GL_2 x SO_4 inside split SO_12
    let group = GroupDatum::quasi_split(Family::D1, 6);
    let levi = LeviDatum::new(vec![1, 1, 2], 2, 1);
    let ctx = WeylContext::new(&group, &levi).unwrap();
    let roots = reduced_roots(&group, &levi).unwrap();

    let elements = ctx.elements();
    println!("|W_M| = {}", elements.len());
    println!(
        "roots: {}",
        roots
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    );

    let s = SigmaDatum::new(&["a", "b", "c"])
        .self_dual("a", true)
        .dual_pair("b", "b~")
        .self_dual("c", false)
        .with_c0_fixes_tau(false);
    println!();
    println!("{:<20} {:>5}  {:<12} image of a12", "w", "fix", "w.sigma");
    for w in &elements {
        let moved = ctx.act_on_sigma(w, &s);
        println!(
            "{:<20} {:>5}  {:<12} {}",
            ctx.label(w),
            fixed_space_dim(w),
            moved.classes.join(","),
            act_on_root(w, &roots[0])
        );
    }
}
