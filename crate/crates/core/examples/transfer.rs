//! A datum on an inner form against its quasi-split partner, and what a
//! corrupted partner looks like.

use inner_rgroups::groupdata::{Family, GroupDatum, InnerVariant, LeviDatum};
use inner_rgroups::repdatum::{ScenarioPair, SigmaDatum};
use inner_rgroups::rgroup::transfer_check;

fn main() {
    // GL_1(D_2) x GL_1(D_2) x SU^+_2(D_2) inside the inner form of Sp_12
    let inner = GroupDatum::inner(Family::C, 6, InnerVariant::Unique);
    let levi = LeviDatum::new(vec![2, 2], 2, 2);
    let s = SigmaDatum::new(&["a", "b"])
        .self_dual("a", true)
        .self_dual("b", true);
    let pair = ScenarioPair::matched(inner, levi, s);

    let rep = transfer_check(&pair).unwrap();
    println!(
        "{} vs {}: {}",
        pair.quasi_split.group,
        pair.inner.group,
        rep.to_json()
    );

    let mut bad = pair.clone();
    bad.inner.sigma.reducible.insert("b".into(), false);
    let rep = transfer_check(&bad).unwrap();
    println!("with b made irreducible on the inner side:");
    for d in &rep.details {
        println!("  {d}");
    }
}
