//! The abstract inducing datum `sigma = sigma_1 (x) ... (x) sigma_k (x) tau`.
//!
//! Nothing here is a representation. Each `sigma_i` is a class label, the
//! contragredient is an involution on labels, and the only analytic inputs
//! are two oracles: whether `c0 tau ~ tau`, and whether the rank-one
//! induction from a self-dual `sigma_i (x) tau` reduces. The same type
//! serves as an L-parameter `phi_1 + ... + phi_k + phi_-`: matched packets
//! share every predicate the engine consults.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::groupdata::{validate_levi, Form, GroupDatum, LeviDatum};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SigmaDatum {
    /// One label per GL block; equal labels mean equivalent representations.
    pub classes: Vec<String>,
    /// Contragredient on the declared label set.
    pub dual: BTreeMap<String, String>,
    /// `c0 tau ~ tau`. Absent is read as `false`; ignored for types B and C.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c0_fixes_tau: Option<bool>,
    /// Rank-one reducibility, keyed by self-dual labels only.
    #[serde(default)]
    pub reducible: BTreeMap<String, bool>,
    /// Whether `tau` has been replaced by `c0 tau` by a Weyl action.
    #[serde(skip)]
    pub tau_twisted: bool,
}

impl SigmaDatum {
    /// A datum with the given block labels and no duality declared yet.
    pub fn new<S: AsRef<str>>(classes: &[S]) -> Self {
        Self {
            classes: classes.iter().map(|s| s.as_ref().to_string()).collect(),
            dual: BTreeMap::new(),
            c0_fixes_tau: None,
            reducible: BTreeMap::new(),
            tau_twisted: false,
        }
    }

    /// Declares `label` self-dual with the given rank-one reducibility.
    pub fn self_dual(mut self, label: &str, reducible: bool) -> Self {
        self.dual.insert(label.into(), label.into());
        self.reducible.insert(label.into(), reducible);
        self
    }

    /// Declares `a` and `b` mutually contragredient (and not self-dual).
    pub fn dual_pair(mut self, a: &str, b: &str) -> Self {
        self.dual.insert(a.into(), b.into());
        self.dual.insert(b.into(), a.into());
        self
    }

    pub fn with_c0_fixes_tau(mut self, fixes: bool) -> Self {
        self.c0_fixes_tau = Some(fixes);
        self
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn dual_of<'a>(&'a self, label: &'a str) -> &'a str {
        self.dual.get(label).map(String::as_str).unwrap_or(label)
    }

    pub fn is_self_dual(&self, label: &str) -> bool {
        self.dual.get(label).is_some_and(|d| d == label)
    }

    pub fn fixes_tau(&self) -> bool {
        self.c0_fixes_tau.unwrap_or(false)
    }

    pub fn reducible_flag(&self, label: &str) -> Result<bool> {
        self.reducible
            .get(label)
            .copied()
            .ok_or_else(|| Error::MissingReducibility(label.to_string()))
    }
}

pub fn validate_sigma(
    group: &GroupDatum,
    levi: &LeviDatum,
    s: &SigmaDatum,
) -> Result<(), Vec<Violation>> {
    validate_levi(group, levi)?;
    let mut out = Vec::new();
    if s.k() != levi.k() {
        out.push(Violation::new(
            "sigma.classes",
            format!("{} labels for {} blocks", s.k(), levi.k()),
        ));
        return Err(out);
    }
    for (a, b) in &s.dual {
        match s.dual.get(b) {
            Some(back) if back == a => {}
            Some(back) => out.push(Violation::new(
                "sigma.dual",
                format!("not an involution: {a} -> {b} -> {back}"),
            )),
            None => out.push(Violation::new(
                "sigma.dual",
                format!("{a} -> {b} but {b} has no dual declared"),
            )),
        }
    }
    for (i, c) in s.classes.iter().enumerate() {
        if !s.dual.contains_key(c) {
            out.push(Violation::new(
                format!("sigma.classes[{i}]"),
                format!("label `{c}` is not declared in the dual table"),
            ));
        }
    }
    for i in 0..s.k() {
        for j in i + 1..s.k() {
            let (ci, cj) = (&s.classes[i], &s.classes[j]);
            if levi.blocks[i] != levi.blocks[j] {
                if ci == cj {
                    out.push(Violation::new(
                        "sigma.classes",
                        format!(
                            "blocks {} and {} share label `{ci}` but have sizes {} and {}",
                            i + 1,
                            j + 1,
                            levi.blocks[i],
                            levi.blocks[j]
                        ),
                    ));
                } else if s.dual.get(ci) == Some(cj) {
                    out.push(Violation::new(
                        "sigma.classes",
                        format!("blocks {} and {} carry dual labels `{ci}`, `{cj}` but have different sizes", i + 1, j + 1),
                    ));
                }
            }
        }
    }
    for label in s.reducible.keys() {
        if !s.is_self_dual(label) {
            out.push(Violation::new(
                format!("sigma.reducible.{label}"),
                "reducibility is only defined on self-dual labels",
            ));
        }
    }
    for (i, c) in s.classes.iter().enumerate() {
        if s.is_self_dual(c) && !s.reducible.contains_key(c) {
            out.push(Violation::new(
                format!("sigma.classes[{i}]"),
                format!("self-dual label `{c}` has no reducibility flag"),
            ));
        }
    }
    out.sort();
    out.dedup();
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Equivalence of data after a Weyl action: same labels block by block, and
/// `tau` untouched up to the isomorphism `c0 tau ~ tau` when it holds.
pub fn sigma_equal(s1: &SigmaDatum, s2: &SigmaDatum) -> bool {
    s1.classes == s2.classes
        && s1.dual == s2.dual
        && s1.reducible == s2.reducible
        && s1.c0_fixes_tau == s2.c0_fixes_tau
        && (s1.tau_twisted == s2.tau_twisted || s1.fixes_tau())
}

/// The datum of the matched member of the inner form's packet.
///
/// Matched packets share equivalences, duality and every reducibility
/// predicate, so the combinatorial datum carries over unchanged.
pub fn transfer_datum(s: &SigmaDatum) -> SigmaDatum {
    s.clone()
}

/// One input to the engine: a group, one of its Levis, and a datum on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub group: GroupDatum,
    pub levi: LeviDatum,
    pub sigma: SigmaDatum,
}

impl Scenario {
    pub fn new(group: GroupDatum, levi: LeviDatum, sigma: SigmaDatum) -> Self {
        Self { group, levi, sigma }
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        validate_sigma(&self.group, &self.levi, &self.sigma)
    }
}

/// A quasi-split scenario and an inner-form scenario sharing one parameter.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioPair {
    pub quasi_split: Scenario,
    pub inner: Scenario,
}

impl ScenarioPair {
    /// Pairs `s` on a quasi-split Levi with `transfer_datum(s)` on the
    /// inner form, whose Levi has the same block sizes and `m`.
    pub fn matched(inner_group: GroupDatum, inner_levi: LeviDatum, s: SigmaDatum) -> Self {
        let qs_group = GroupDatum {
            form: Form::QuasiSplit,
            ..inner_group
        };
        let qs_levi = LeviDatum {
            ddeg: 1,
            ..inner_levi.clone()
        };
        let t = transfer_datum(&s);
        Self {
            quasi_split: Scenario::new(qs_group, qs_levi, s),
            inner: Scenario::new(inner_group, inner_levi, t),
        }
    }

    /// Checks the pair's shape; the two data need not agree.
    pub fn check_shape(&self) -> Result<()> {
        let (q, i) = (&self.quasi_split, &self.inner);
        if q.group.family != i.group.family || q.group.rank != i.group.rank {
            return Err(Error::PairShape(format!(
                "groups {} and {} differ in family or rank",
                q.group, i.group
            )));
        }
        if !q.group.form.is_quasi_split() {
            return Err(Error::PairShape(format!("{} is not quasi-split", q.group)));
        }
        if i.group.form.is_quasi_split() {
            return Err(Error::PairShape(format!(
                "{} is not a non-quasi-split inner form",
                i.group
            )));
        }
        if q.levi.blocks != i.levi.blocks || q.levi.m != i.levi.m {
            return Err(Error::PairShape(format!(
                "levis {:?}/{} and {:?}/{} are not matched",
                q.levi.blocks, q.levi.m, i.levi.blocks, i.levi.m
            )));
        }
        Ok(())
    }
}
