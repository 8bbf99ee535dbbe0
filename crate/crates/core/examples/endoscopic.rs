//! The three R-groups of one parameter: Knapp-Stein, endoscopic and Arthur.

use inner_rgroups::groupdata::{Family, GroupDatum, LeviDatum};
use inner_rgroups::repdatum::SigmaDatum;
use inner_rgroups::rgroup::{arthur_side, endoscopic_side, knapp_stein};

fn main() {
    let group = GroupDatum::quasi_split(Family::B, 4);
    let levi = LeviDatum::new(vec![1, 1, 1], 1, 1);
    let phi = SigmaDatum::new(&["a", "a", "b"])
        .self_dual("a", true)
        .self_dual("b", false);

    let ks = knapp_stein(&group, &levi, &phi).unwrap();
    let en = endoscopic_side(&group, &levi, &phi).unwrap();
    let ar = arthur_side(&group, &levi, &phi, Some(&phi)).unwrap();
    for (name, r) in [("R_sigma", &ks), ("R_phi", &en), ("R_phi,sigma", &ar)] {
        println!(
            "{name:<12} |W| {:>2}  |W^o| {:>2}  {}  {:?}",
            r.w_sigma.len(),
            r.w_prime.len(),
            r.iso_type(),
            r.labels(&r.r_group)
        );
    }
    assert_eq!(ks.r_group, en.r_group);
    assert_eq!(ks.r_group, ar.r_group);
}
