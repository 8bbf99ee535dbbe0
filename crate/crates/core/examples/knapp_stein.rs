//! Brute-force R-group next to its closed form.

use inner_rgroups::groupdata::{Family, GroupDatum, LeviDatum};
use inner_rgroups::repdatum::SigmaDatum;
use inner_rgroups::rgroup::{closed_form, knapp_stein};

fn show(title: &str, group: GroupDatum, levi: LeviDatum, s: SigmaDatum) {
    let r = knapp_stein(&group, &levi, &s).unwrap();
    let cf = closed_form(&group, &levi, &s).unwrap();
    println!("{title}");
    println!(
        "  {} ({}), blocks {} m {}",
        group,
        group.display_name(),
        levi.blocks_display(),
        levi.m
    );
    println!(
        "  |W_M| {}  |W(sigma)| {}  |W'| {}",
        r.weyl_order,
        r.w_sigma.len(),
        r.w_prime.len()
    );
    println!(
        "  Delta' = {{{}}}",
        r.delta_prime
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );
    println!(
        "  R = {}  generated by {:?}",
        r.iso_type(),
        r.labels(&r.generators)
    );
    println!(
        "  closed form: Z2^{} generated by {:?}",
        cf.iso_exponent,
        r.labels(&cf.generators)
    );
    println!();
}

fn main() {
    let c = |n| GroupDatum::quasi_split(Family::C, n);
    show(
        "one reducible self-dual block",
        c(2),
        LeviDatum::new(vec![1], 1, 1),
        SigmaDatum::new(&["a"]).self_dual("a", true),
    );
    show(
        "a repeated class: the reflection a12 swallows one sign change",
        c(3),
        LeviDatum::new(vec![1, 1], 1, 1),
        SigmaDatum::new(&["a", "a"]).self_dual("a", true),
    );
    show(
        "two classes, one repeated",
        c(3),
        LeviDatum::new(vec![1, 1, 1], 0, 1),
        SigmaDatum::new(&["a", "b", "b"])
            .self_dual("a", true)
            .self_dual("b", true),
    );
    show(
        "even orthogonal, odd blocks pair up",
        GroupDatum::quasi_split(Family::D1, 5),
        LeviDatum::new(vec![1, 1, 1], 2, 1),
        SigmaDatum::new(&["a", "b", "c"])
            .self_dual("a", false)
            .self_dual("b", false)
            .self_dual("c", true)
            .with_c0_fixes_tau(false),
    );
}
