//! Inner forms and maximal Levi subgroups for ranks 2..=6 against the
//! hand-encoded tables in `tests/golden/`.

use inner_rgroups::cli::{main_from, Output};

const FAMILIES: [&str; 4] = ["B", "C", "D1", "D2"];

fn enumerate(extra: &[&str]) -> String {
    let mut out = String::new();
    for family in FAMILIES {
        for rank in 2..=6 {
            let rank = rank.to_string();
            let args = ["inner-rgroups", "enumerate", family, &rank];
            let o: Output = main_from(args.iter().chain(extra).copied());
            assert_eq!(o.code, 0, "{}", o.stderr);
            out += &o.stdout;
        }
    }
    out
}

#[test]
fn forms_table() {
    assert_eq!(enumerate(&["--forms"]), include_str!("golden/forms.txt"));
}

#[test]
fn maximal_levi_table() {
    assert_eq!(
        enumerate(&["--levis", "--maximal"]),
        include_str!("golden/maximal_levis.txt")
    );
}

#[test]
fn special_residual_names_present() {
    let table = include_str!("golden/maximal_levis.txt");
    for name in [
        "SL_1(D_2)",
        "PSL_1(D_2)",
        "PSL_1(D_4)",
        "SU^+_2(D_2)",
        "SU^-_2(D_2)",
        "GL_3(D_2)",
        "SL_2(D_2)/Z_2",
        "E^x",
    ] {
        assert!(table.contains(name), "{name}");
    }
}
