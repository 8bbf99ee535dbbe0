//! Classical group types, their inner forms, and the F-Levi subgroups each
//! form admits.
//!
//! A quasi-split group of rank `n` has a standard Levi subgroup for every
//! composition `(n_1, ..., n_k)` of `n - m`. A non-quasi-split inner form only
//! admits the Levis obtained by deleting white vertices of its Satake
//! diagram; each diagram is encoded here as a set of admissible cut points
//! along `1..=n` plus optional terminal cuts at the branch end.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Violation;

/// Root-system family of the quasi-split group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    /// `SO_{2n+1}`.
    B,
    /// `Sp_{2n}`.
    C,
    /// Split `SO_{2n}`.
    D1,
    /// Quasi-split `SO*_{2n}` attached to a quadratic extension `E/F`.
    D2,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::B, Family::C, Family::D1, Family::D2];

    /// Even orthogonal families, where block sign changes interact with `c0`.
    pub fn is_even_orthogonal(self) -> bool {
        matches!(self, Family::D1 | Family::D2)
    }

    pub fn min_rank(self) -> u32 {
        if self.is_even_orthogonal() {
            2
        } else {
            1
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::B => "B",
            Family::C => "C",
            Family::D1 => "D1",
            Family::D2 => "D2",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D1" | "d1" => Ok(Family::D1),
            "D2" | "d2" => Ok(Family::D2),
            _ => Err(format!("unknown family `{s}` (expected B, C, D1 or D2)")),
        }
    }
}

/// Which Satake diagram a non-quasi-split form carries.
///
/// `Unique` is the only inner form for `B`, `C` and `D2` (the diagram for `C`
/// and `D2` depends on the rank parity). Split `SO_{2n}` has two: the `Any`
/// diagram and one chosen by the parity of `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InnerVariant {
    Unique,
    Any,
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Form {
    QuasiSplit,
    Inner(InnerVariant),
}

impl Form {
    pub fn is_quasi_split(self) -> bool {
        matches!(self, Form::QuasiSplit)
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::QuasiSplit => "quasi-split",
            Form::Inner(InnerVariant::Unique) => "inner",
            Form::Inner(InnerVariant::Any) => "inner-any",
            Form::Inner(InnerVariant::Odd) => "inner-odd",
            Form::Inner(InnerVariant::Even) => "inner-even",
        })
    }
}

impl FromStr for Form {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quasi-split" | "split" => Ok(Form::QuasiSplit),
            "inner" => Ok(Form::Inner(InnerVariant::Unique)),
            "inner-any" => Ok(Form::Inner(InnerVariant::Any)),
            "inner-odd" => Ok(Form::Inner(InnerVariant::Odd)),
            "inner-even" => Ok(Form::Inner(InnerVariant::Even)),
            _ => Err(format!(
                "unknown form `{s}` (expected quasi-split, inner, inner-any, inner-odd or inner-even)"
            )),
        }
    }
}

impl TryFrom<String> for Form {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Form> for String {
    fn from(f: Form) -> Self {
        f.to_string()
    }
}

/// A classical group of given family and rank, in a specific inner form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDatum {
    pub family: Family,
    pub rank: u32,
    pub form: Form,
}

impl GroupDatum {
    pub fn quasi_split(family: Family, rank: u32) -> Self {
        Self {
            family,
            rank,
            form: Form::QuasiSplit,
        }
    }

    pub fn inner(family: Family, rank: u32, variant: InnerVariant) -> Self {
        Self {
            family,
            rank,
            form: Form::Inner(variant),
        }
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.rank < self.family.min_rank() {
            out.push(Violation::new(
                "group.rank",
                format!(
                    "rank {} is below the minimum {} for family {}",
                    self.rank,
                    self.family.min_rank(),
                    self.family
                ),
            ));
            return out;
        }
        let n = self.rank;
        match (self.family, self.form) {
            (_, Form::QuasiSplit) => {}
            (Family::B | Family::C | Family::D2, Form::Inner(InnerVariant::Unique)) => {}
            (Family::D1, Form::Inner(InnerVariant::Any)) => {}
            (Family::D1, Form::Inner(InnerVariant::Odd)) => {
                if n.is_multiple_of(2) {
                    out.push(Violation::new(
                        "group.form",
                        "the odd-rank inner form of split SO_2n needs odd rank",
                    ));
                }
            }
            (Family::D1, Form::Inner(InnerVariant::Even)) => {
                if n % 2 == 1 {
                    out.push(Violation::new(
                        "group.form",
                        "the even-rank inner form of split SO_2n needs even rank",
                    ));
                }
            }
            (fam, form) => out.push(Violation::new(
                "group.form",
                format!("family {fam} has no inner form `{form}`"),
            )),
        }
        out
    }

    /// Degree `d` of the division algebra over which GL blocks are taken.
    pub fn required_ddeg(&self) -> u8 {
        match (self.family, self.form) {
            (_, Form::QuasiSplit) => 1,
            (Family::B, _) | (Family::D1, Form::Inner(InnerVariant::Any)) => 1,
            _ => 2,
        }
    }

    /// Printable name of the rank-`m` group of the same type as this one.
    pub fn residual_name(&self, m: u32) -> String {
        let odd_rank = self.rank % 2 == 1;
        match (self.family, self.form) {
            (Family::B, Form::QuasiSplit) => format!("SO_{}", 2 * m + 1),
            (Family::C, Form::QuasiSplit) => format!("Sp_{}", 2 * m),
            (Family::D1, Form::QuasiSplit) => format!("SO_{}", 2 * m),
            (Family::D2, Form::QuasiSplit) => format!("SO*_{}", 2 * m),
            (Family::B, _) if m == 1 => "PSL_1(D_2)".into(),
            (Family::C, _) if odd_rank && m == 1 => "SL_1(D_2)".into(),
            (Family::C, _) if !odd_rank => format!("SU^+_{m}(D_2)"),
            (Family::D1, Form::Inner(InnerVariant::Any)) if m == 2 => {
                "(SL_1(D_2) x SL_1(D_2))/Z_2".into()
            }
            (Family::D1, Form::Inner(InnerVariant::Any)) if m == 3 => "SL_2(D_2)/Z_2".into(),
            (Family::D1, Form::Inner(InnerVariant::Odd)) if m == 3 => "PSL_1(D_4)".into(),
            (Family::D1, Form::Inner(InnerVariant::Even)) => format!("SU^-_{m}(D_2)"),
            _ => format!("G'({m})"),
        }
    }

    pub fn display_name(&self) -> String {
        self.residual_name(self.rank)
    }
}

impl fmt::Display for GroupDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.family, self.rank, self.form)
    }
}

/// Shape `GL_{n_1} x ... x GL_{n_k} x G_-(m)` of a Levi subgroup.
///
/// `blocks` holds sizes over the base `GL`, i.e. `n_i = ddeg * m_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LeviDatum {
    pub blocks: Vec<u32>,
    pub m: u32,
    pub ddeg: u8,
}

impl LeviDatum {
    pub fn new(blocks: Vec<u32>, m: u32, ddeg: u8) -> Self {
        Self { blocks, m, ddeg }
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks_display(&self) -> String {
        if self.blocks.is_empty() {
            "-".into()
        } else {
            self.blocks
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

/// Residual factor of an inner-form Levi when it is not `G'_-(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Residual {
    Standard,
    /// `E^x` left over after deleting `alpha_{n-1}` in the odd `2D_n` diagram.
    Torus,
    /// Nothing printed: deleting `alpha_n` in the odd `2D_n` diagram.
    Bare,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LeviDescription {
    pub group: GroupDatum,
    pub levi: LeviDatum,
    pub name: String,
    pub maximal: bool,
    pub rgroup_supported: bool,
}

impl LeviDescription {
    /// One golden-file line: `family rank form : blocks | m | ddeg | display-name`.
    pub fn golden_line(&self) -> String {
        let mut name = self.name.clone();
        if !self.rgroup_supported {
            name.push_str(" (unsupported-for-rgroup)");
        }
        format!(
            "{} : {} | {} | {} | {}",
            self.group,
            self.levi.blocks_display(),
            self.levi.m,
            self.levi.ddeg,
            name
        )
    }
}

fn gl_name(n_i: u32, ddeg: u8) -> String {
    if ddeg == 2 {
        format!("GL_{}(D_2)", n_i / 2)
    } else {
        format!("GL_{n_i}(F)")
    }
}

fn describe(group: GroupDatum, levi: LeviDatum, residual: Residual) -> LeviDescription {
    let mut factors: Vec<String> = levi.blocks.iter().map(|&b| gl_name(b, levi.ddeg)).collect();
    match residual {
        Residual::Standard if levi.m > 0 => factors.push(group.residual_name(levi.m)),
        Residual::Torus => factors.push("E^x".into()),
        _ => {}
    }
    let rgroup_supported = residual == Residual::Standard && rgroup_supported(&group, &levi);
    LeviDescription {
        group,
        // In split SO_{2n}, GL_{n-1} x SO_2 comes from deleting both fork roots.
        maximal: levi.k() == 1 && !(group.family == Family::D1 && levi.m == 1),
        name: factors.join(" x "),
        levi,
        rgroup_supported,
    }
}

/// The quasi-split form followed by every non-quasi-split inner form.
pub fn enumerate_inner_forms(family: Family, rank: u32) -> Vec<GroupDatum> {
    let mut out = vec![GroupDatum::quasi_split(family, rank)];
    match family {
        Family::B | Family::C | Family::D2 => {
            out.push(GroupDatum::inner(family, rank, InnerVariant::Unique))
        }
        Family::D1 => {
            out.push(GroupDatum::inner(family, rank, InnerVariant::Any));
            let parity = if rank % 2 == 1 {
                InnerVariant::Odd
            } else {
                InnerVariant::Even
            };
            out.push(GroupDatum::inner(family, rank, parity));
        }
    }
    out.retain(|g| g.validate().is_empty());
    out
}

/// Satake data of one inner form: white vertices that cut the chain into GL
/// blocks, and terminal cuts at the branch end.
struct Diagram {
    cuts: Vec<u32>,
    /// `(last block boundary, m, residual)` for each terminal white vertex.
    terminals: Vec<(u32, u32, Residual)>,
}

fn diagram(group: &GroupDatum) -> Diagram {
    let n = group.rank;
    let every = |step: u32, upto: u32| (1..=upto).filter(|i| i % step == 0).collect::<Vec<_>>();
    let odd = n % 2 == 1;
    match (group.family, group.form) {
        (_, Form::QuasiSplit) => unreachable!("quasi-split forms are enumerated directly"),
        (Family::B, _) => Diagram {
            cuts: every(1, n.saturating_sub(1)),
            terminals: vec![],
        },
        (Family::C, _) if odd => Diagram {
            cuts: every(2, n - 1),
            terminals: vec![],
        },
        (Family::C, _) => Diagram {
            cuts: every(2, n - 2),
            terminals: vec![(n, 0, Residual::Standard)],
        },
        (Family::D1, Form::Inner(InnerVariant::Any)) => Diagram {
            cuts: every(1, n - 2),
            terminals: vec![],
        },
        (Family::D1, Form::Inner(InnerVariant::Odd)) => Diagram {
            cuts: every(2, n.saturating_sub(3)),
            terminals: vec![],
        },
        (Family::D1, _) => Diagram {
            cuts: every(2, n - 2),
            terminals: vec![(n, 0, Residual::Standard)],
        },
        (Family::D2, _) if odd => Diagram {
            cuts: every(2, n.saturating_sub(3)),
            terminals: vec![(n - 1, 1, Residual::Torus), (n - 1, 1, Residual::Bare)],
        },
        (Family::D2, _) => Diagram {
            cuts: every(2, n - 2),
            terminals: vec![],
        },
    }
}

fn compositions(total: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn boundaries_to_blocks(bounds: &[u32]) -> Vec<u32> {
    let mut prev = 0;
    bounds
        .iter()
        .map(|&b| {
            let size = b - prev;
            prev = b;
            size
        })
        .collect()
}

/// Every F-Levi subgroup of `group`, sorted by `(blocks, m, name)`.
pub fn enumerate_levis(group: &GroupDatum) -> Vec<LeviDescription> {
    let n = group.rank;
    let mut out = Vec::new();
    if group.form.is_quasi_split() {
        let min_m = if group.family == Family::D2 { 1 } else { 0 };
        for m in min_m..=n {
            for blocks in compositions(n - m) {
                out.push(describe(
                    *group,
                    LeviDatum::new(blocks, m, 1),
                    Residual::Standard,
                ));
            }
        }
    } else {
        let ddeg = group.required_ddeg();
        let dia = diagram(group);
        let c = dia.cuts.len();
        for mask in 0u64..(1 << c) {
            let bounds: Vec<u32> = (0..c)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| dia.cuts[i])
                .collect();
            let last = bounds.last().copied().unwrap_or(0);
            let blocks = boundaries_to_blocks(&bounds);
            out.push(describe(
                *group,
                LeviDatum::new(blocks, n - last, ddeg),
                Residual::Standard,
            ));
            for &(end, m, residual) in &dia.terminals {
                let mut b = bounds.clone();
                b.push(end);
                out.push(describe(
                    *group,
                    LeviDatum::new(boundaries_to_blocks(&b), m, ddeg),
                    residual,
                ));
            }
        }
    }
    out.sort_by(|a, b| (&a.levi, &a.name).cmp(&(&b.levi, &b.name)));
    out
}

pub fn enumerate_maximal_levis(group: &GroupDatum) -> Vec<LeviDescription> {
    enumerate_levis(group)
        .into_iter()
        .filter(|d| d.maximal)
        .collect()
}

/// Checks that `levi` is an F-Levi subgroup of `group`.
pub fn validate_levi(group: &GroupDatum, levi: &LeviDatum) -> Result<(), Vec<Violation>> {
    let mut out = group.validate();
    if !out.is_empty() {
        return Err(out);
    }
    let n = group.rank;
    if levi.blocks.contains(&0) {
        out.push(Violation::new(
            "levi.blocks",
            "block sizes must be positive",
        ));
    }
    let total: u64 = levi.blocks.iter().map(|&b| u64::from(b)).sum::<u64>() + u64::from(levi.m);
    if total != u64::from(n) {
        out.push(Violation::new(
            "levi.blocks",
            format!("block sizes plus m sum to {total}, expected rank {n}"),
        ));
    }
    let ddeg = group.required_ddeg();
    if levi.ddeg != ddeg {
        out.push(Violation::new(
            "levi.ddeg",
            format!(
                "form `{}` requires ddeg {ddeg}, got {}",
                group.form, levi.ddeg
            ),
        ));
    }
    if !out.is_empty() {
        return Err(out);
    }

    let m = levi.m;
    let odd = n % 2 == 1;
    if levi.ddeg == 2 {
        for (i, &b) in levi.blocks.iter().enumerate() {
            if b % 2 == 1 {
                out.push(Violation::new(
                    format!("levi.blocks[{i}]"),
                    format!(
                        "block size {b} is odd but GL blocks are taken over D_2 (black vertex)"
                    ),
                ));
            }
        }
    }
    let residual_ok = match (group.family, group.form) {
        (Family::D2, Form::QuasiSplit) => m >= 1,
        (_, Form::QuasiSplit) => true,
        (Family::B, _) => m >= 1,
        (Family::C, _) if odd => m % 2 == 1,
        (Family::C, _) => m.is_multiple_of(2),
        (Family::D1, Form::Inner(InnerVariant::Any)) => m >= 2,
        (Family::D1, Form::Inner(InnerVariant::Odd)) => m >= 3 && m % 2 == 1,
        (Family::D1, _) => m.is_multiple_of(2),
        (Family::D2, _) if odd => m % 2 == 1,
        (Family::D2, _) => m >= 2 && m.is_multiple_of(2),
    };
    if !residual_ok {
        out.push(Violation::new(
            "levi.m",
            format!("residual rank {m} is not reachable by deleting white vertices of {group}"),
        ));
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// False for the odd-rank `2D_n` inner-form Levis whose rank-one residual
/// factor is not a group of the same type (`E^x` or nothing at all).
pub fn rgroup_supported(group: &GroupDatum, levi: &LeviDatum) -> bool {
    !(group.family == Family::D2
        && !group.form.is_quasi_split()
        && group.rank % 2 == 1
        && levi.m == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(g: &GroupDatum) -> Vec<String> {
        enumerate_levis(g).into_iter().map(|d| d.name).collect()
    }

    #[test]
    fn inner_form_counts() {
        assert_eq!(enumerate_inner_forms(Family::B, 3).len(), 2);
        assert_eq!(
            enumerate_inner_forms(Family::D1, 4),
            vec![
                GroupDatum::quasi_split(Family::D1, 4),
                GroupDatum::inner(Family::D1, 4, InnerVariant::Any),
                GroupDatum::inner(Family::D1, 4, InnerVariant::Even),
            ]
        );
        let c2 = enumerate_inner_forms(Family::C, 2);
        assert_eq!(c2.len(), 2);
        assert_eq!(c2[1].display_name(), "SU^+_2(D_2)");
    }

    #[test]
    fn special_residual_factors() {
        let c3 = GroupDatum::inner(Family::C, 3, InnerVariant::Unique);
        assert!(names(&c3).contains(&"GL_1(D_2) x SL_1(D_2)".to_string()));
        let b4 = GroupDatum::inner(Family::B, 4, InnerVariant::Unique);
        assert!(names(&b4).contains(&"GL_3(F) x PSL_1(D_2)".to_string()));
        let d2 = GroupDatum::inner(Family::D2, 4, InnerVariant::Unique);
        assert!(names(&d2).contains(&"GL_1(D_2) x G'(2)".to_string()));
        let d1 = GroupDatum::inner(Family::D1, 5, InnerVariant::Odd);
        assert!(names(&d1).contains(&"GL_1(D_2) x PSL_1(D_4)".to_string()));
    }

    #[test]
    fn odd_2d_torus_levi_is_flagged() {
        let g = GroupDatum::inner(Family::D2, 5, InnerVariant::Unique);
        let flagged: Vec<_> = enumerate_levis(&g)
            .into_iter()
            .filter(|d| !d.rgroup_supported)
            .map(|d| d.name)
            .collect();
        assert!(flagged.contains(&"GL_2(D_2) x E^x".to_string()));
        assert!(flagged.contains(&"GL_2(D_2)".to_string()));
    }

    #[test]
    fn validate_examples() {
        let c3 = GroupDatum::inner(Family::C, 3, InnerVariant::Unique);
        assert!(validate_levi(&c3, &LeviDatum::new(vec![2], 1, 2)).is_ok());
        let err = validate_levi(&c3, &LeviDatum::new(vec![1], 2, 2)).unwrap_err();
        assert!(err.iter().any(|v| v.field == "levi.blocks[0]"));
        let sp4 = GroupDatum::quasi_split(Family::C, 2);
        assert!(validate_levi(&sp4, &LeviDatum::new(vec![1, 1], 0, 1)).is_ok());
        assert!(validate_levi(&sp4, &LeviDatum::new(vec![1, 1], 0, 2)).is_err());
        assert!(validate_levi(&sp4, &LeviDatum::new(vec![1, 2], 0, 1)).is_err());
    }

    #[test]
    fn quasi_split_counts_match_parabolic_classes() {
        // 2^n standard parabolics for B, C and split D; 2^(n-1) for 2D_n.
        for n in 2..=4 {
            for fam in [Family::B, Family::C, Family::D1] {
                assert_eq!(
                    enumerate_levis(&GroupDatum::quasi_split(fam, n)).len(),
                    1 << n
                );
            }
            assert_eq!(
                enumerate_levis(&GroupDatum::quasi_split(Family::D2, n)).len(),
                1 << (n - 1)
            );
        }
    }

    #[test]
    fn validation_agrees_with_enumeration() {
        for n in 2..=7 {
            for fam in Family::ALL {
                for g in enumerate_inner_forms(fam, n) {
                    let listed: Vec<LeviDatum> =
                        enumerate_levis(&g).into_iter().map(|d| d.levi).collect();
                    for m in 0..=n {
                        for blocks in compositions(n - m) {
                            for ddeg in [1, 2] {
                                let l = LeviDatum::new(blocks.clone(), m, ddeg);
                                assert_eq!(
                                    validate_levi(&g, &l).is_ok(),
                                    listed.contains(&l),
                                    "{g} {l:?}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn form_strings_round_trip() {
        for s in [
            "quasi-split",
            "inner",
            "inner-any",
            "inner-odd",
            "inner-even",
        ] {
            assert_eq!(s.parse::<Form>().unwrap().to_string(), s);
        }
        assert!("outer".parse::<Form>().is_err());
    }
}
