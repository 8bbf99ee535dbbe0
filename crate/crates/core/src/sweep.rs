//! Exhaustive verification over small groups.
//!
//! Every supported Levi of every inner form up to a rank bound is paired with
//! every combinatorial datum on its blocks: equivalence patterns, dualities,
//! reducibility flags and the `c0` flag. Each scenario runs through the
//! brute-force engine, the closed forms, the endoscopic route and both
//! ellipticity criteria; inner-form scenarios are also transferred.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::elliptic::elliptic_report;
use crate::error::{Error, Result};
use crate::groupdata::{enumerate_inner_forms, enumerate_levis, Family, GroupDatum, LeviDatum};
use crate::repdatum::{Scenario, ScenarioPair, SigmaDatum};
use crate::rgroup::{arthur_side, closed_form, endoscopic_side, knapp_stein, transfer_check};
use crate::weylgroup::generate;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_k: usize,
    pub max_rank: u32,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            max_k: 3,
            max_rank: 4,
        }
    }
}

/// Names of the checks, in report order.
pub const CHECKS: [&str; 9] = [
    "decomposition",
    "closed_form",
    "endoscopic",
    "elliptic_herb",
    "elliptic_not_applicable",
    "components",
    "transfer",
    "transfer_elliptic",
    "negative_controls",
];

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepSummary {
    pub scenarios: usize,
    pub pairs: usize,
    /// Scenarios (or pairs) on which each check ran and passed.
    pub counts: BTreeMap<&'static str, usize>,
}

impl SweepSummary {
    fn bump(&mut self, check: &'static str) {
        *self.counts.entry(check).or_insert(0) += 1;
    }

    pub fn count(&self, check: &str) -> usize {
        self.counts.get(check).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> Value {
        let counts: BTreeMap<&str, usize> = CHECKS.iter().map(|&c| (c, self.count(c))).collect();
        json!({
            "scenarios": self.scenarios,
            "pairs": self.pairs,
            "checks": counts,
        })
    }
}

/// The first violated check, with enough to reproduce it.
#[derive(Debug, Clone)]
pub struct SweepFailure {
    pub check: &'static str,
    pub message: String,
    pub scenario: Value,
    /// Whether the engine itself failed (as opposed to a bad input).
    pub internal: bool,
}

impl SweepFailure {
    fn new(check: &'static str, message: impl Into<String>, scenario: Value) -> Self {
        Self {
            check,
            message: message.into(),
            scenario,
            internal: true,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.check,
            "message": self.message,
            "scenario": self.scenario,
        })
    }
}

fn label(i: usize) -> String {
    let letters = b"abcdefghijklmnopqrstuvwxyz";
    if i < letters.len() {
        (letters[i] as char).to_string()
    } else {
        format!("x{i}")
    }
}

/// Set partitions of `0..k` whose parts only contain blocks of one size, as
/// restricted growth strings.
fn equivalence_patterns(blocks: &[u32]) -> Vec<Vec<usize>> {
    fn go(blocks: &[u32], cur: &mut Vec<usize>, parts: usize, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == blocks.len() {
            out.push(cur.clone());
            return;
        }
        for p in 0..=parts {
            if p < parts {
                let first = cur.iter().position(|&q| q == p).expect("part is nonempty");
                if blocks[first] != blocks[i] {
                    continue;
                }
            }
            cur.push(p);
            go(blocks, cur, parts.max(p + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(blocks, &mut Vec::new(), 0, &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Duality {
    SelfDual,
    External,
    Paired(usize),
}

/// Involutions on the parts: self-dual, dual to an unused label, or swapped
/// with another part of the same block size.
fn dualities(sizes: &[u32]) -> Vec<Vec<Duality>> {
    fn go(sizes: &[u32], cur: &mut Vec<Option<Duality>>, out: &mut Vec<Vec<Duality>>) {
        let Some(p) = cur.iter().position(Option::is_none) else {
            out.push(cur.iter().map(|d| d.expect("all assigned")).collect());
            return;
        };
        for d in [Duality::SelfDual, Duality::External] {
            cur[p] = Some(d);
            go(sizes, cur, out);
        }
        for q in p + 1..sizes.len() {
            if cur[q].is_none() && sizes[q] == sizes[p] {
                cur[p] = Some(Duality::Paired(q));
                cur[q] = Some(Duality::Paired(p));
                go(sizes, cur, out);
                cur[q] = None;
            }
        }
        cur[p] = None;
    }
    let mut out = Vec::new();
    go(sizes, &mut vec![None; sizes.len()], &mut out);
    out
}

/// Every combinatorial datum on the given blocks.
pub fn sigma_assignments(blocks: &[u32], even_orthogonal: bool) -> Vec<SigmaDatum> {
    let c0_options: &[Option<bool>] = if even_orthogonal {
        &[Some(false), Some(true)]
    } else {
        &[None]
    };
    let mut out = Vec::new();
    for pattern in equivalence_patterns(blocks) {
        let parts = pattern.iter().max().map_or(0, |&p| p + 1);
        let sizes: Vec<u32> = (0..parts)
            .map(|p| {
                blocks[pattern
                    .iter()
                    .position(|&q| q == p)
                    .expect("part is nonempty")]
            })
            .collect();
        let classes: Vec<String> = pattern.iter().map(|&p| label(p)).collect();
        for duality in dualities(&sizes) {
            let mut base = SigmaDatum::new(&classes);
            let mut self_dual = Vec::new();
            for (p, d) in duality.iter().enumerate() {
                match *d {
                    Duality::SelfDual => self_dual.push(label(p)),
                    Duality::External => {
                        base = base.dual_pair(&label(p), &format!("{}~", label(p)))
                    }
                    Duality::Paired(q) if p < q => base = base.dual_pair(&label(p), &label(q)),
                    Duality::Paired(_) => {}
                }
            }
            for mask in 0..1u32 << self_dual.len() {
                let mut s = base.clone();
                for (b, l) in self_dual.iter().enumerate() {
                    s = s.self_dual(l, mask >> b & 1 == 1);
                }
                for &c0 in c0_options {
                    let mut s = s.clone();
                    s.c0_fixes_tau = c0;
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Supported `(group, levi)` shapes within the bounds.
pub fn sweep_levis(cfg: &SweepConfig) -> Vec<(GroupDatum, LeviDatum)> {
    let mut out = Vec::new();
    for family in Family::ALL {
        for rank in family.min_rank()..=cfg.max_rank {
            for group in enumerate_inner_forms(family, rank) {
                for d in enumerate_levis(&group) {
                    if d.rgroup_supported && d.levi.k() <= cfg.max_k {
                        out.push((d.group, d.levi));
                    }
                }
            }
        }
    }
    out
}

fn scenario_json(sc: &Scenario) -> Value {
    serde_json::to_value(sc).expect("scenarios serialize")
}

fn engine_failure(check: &'static str, e: Error, sc: &Scenario) -> SweepFailure {
    SweepFailure {
        internal: !e.is_user_error(),
        ..SweepFailure::new(check, e.to_string(), scenario_json(sc))
    }
}

/// Runs every single-scenario check on `sc`, returning its elliptic bit.
fn check_scenario(sc: &Scenario, summary: &mut SweepSummary) -> Result<bool, SweepFailure> {
    let (g, l, s) = (&sc.group, &sc.levi, &sc.sigma);
    let fail = |check, msg: String| SweepFailure::new(check, msg, scenario_json(sc));
    let r = knapp_stein(g, l, s).map_err(|e| engine_failure("decomposition", e, sc))?;
    summary.bump("decomposition");

    let cf = closed_form(g, l, s).map_err(|e| engine_failure("closed_form", e, sc))?;
    let cf_group = generate(l.k(), &cf.generators);
    if cf.iso_exponent != r.iso_exponent || cf_group != r.r_group {
        return Err(fail(
            "closed_form",
            format!(
                "closed form Z2^{} generated by [{}], engine Z2^{} generated by [{}]",
                cf.iso_exponent,
                r.labels(&cf.generators).join(", "),
                r.iso_exponent,
                r.labels(&r.generators).join(", ")
            ),
        ));
    }
    summary.bump("closed_form");

    let e = endoscopic_side(g, l, s).map_err(|e| engine_failure("endoscopic", e, sc))?;
    let a = arthur_side(g, l, s, Some(s)).map_err(|e| engine_failure("endoscopic", e, sc))?;
    for (name, other) in [("R_phi", &e), ("R_phi_sigma", &a)] {
        if other.r_group != r.r_group || other.w_sigma != r.w_sigma || other.w_prime != r.w_prime {
            return Err(fail(
                "endoscopic",
                format!(
                    "{name} = [{}] but R_sigma = [{}]",
                    r.labels(&other.r_group).join(", "),
                    r.labels(&r.r_group).join(", ")
                ),
            ));
        }
    }
    summary.bump("endoscopic");

    let ell = elliptic_report(g, l, s, &r).map_err(|e| engine_failure("elliptic_herb", e, sc))?;
    match ell.herb_elliptic {
        Some(h) if h != ell.elliptic => {
            return Err(fail(
                "elliptic_herb",
                format!(
                    "fixed-space criterion says {}, closed form says {h}",
                    ell.elliptic
                ),
            ))
        }
        Some(_) => summary.bump("elliptic_herb"),
        None => summary.bump("elliptic_not_applicable"),
    }

    let n = r.r_group.len();
    if (ell.component_count, ell.commuting_dim, ell.multiplicity) != (n, n, 1) {
        return Err(fail(
            "components",
            format!(
                "components ({}, {}, {}) for |R| = {n}",
                ell.component_count, ell.commuting_dim, ell.multiplicity
            ),
        ));
    }
    summary.bump("components");
    Ok(ell.elliptic)
}

fn check_pair(pair: &ScenarioPair, summary: &mut SweepSummary) -> Result<(), SweepFailure> {
    let pair_json = || json!({"pair": serde_json::to_value(pair).expect("pairs serialize")});
    let rep = transfer_check(pair).map_err(|e| SweepFailure {
        internal: !e.is_user_error(),
        ..SweepFailure::new("transfer", e.to_string(), pair_json())
    })?;
    if !rep.matched {
        return Err(SweepFailure::new(
            "transfer",
            rep.details.join("; "),
            pair_json(),
        ));
    }
    summary.bump("transfer");
    let mut bits = BTreeSet::new();
    for sc in [&pair.quasi_split, &pair.inner] {
        let r = knapp_stein(&sc.group, &sc.levi, &sc.sigma)
            .map_err(|e| engine_failure("transfer_elliptic", e, sc))?;
        bits.insert(crate::elliptic::arthur_elliptic(&r).0);
    }
    if bits.len() != 1 {
        return Err(SweepFailure::new(
            "transfer_elliptic",
            "elliptic bit differs across the pair",
            pair_json(),
        ));
    }
    summary.bump("transfer_elliptic");
    Ok(())
}

/// Corruptions of the inner side of matched pairs that must break transfer:
/// a flipped reducibility flag in types B and C, and a flipped `c0` flag in
/// even orthogonal types when an odd block carries a self-dual class.
pub fn negative_controls(cfg: &SweepConfig) -> Vec<(String, ScenarioPair)> {
    let mut out = Vec::new();
    for (group, levi) in sweep_levis(cfg) {
        if group.form.is_quasi_split() {
            continue;
        }
        let even_orth = group.family.is_even_orthogonal();
        for s in sigma_assignments(&levi.blocks, even_orth) {
            let pair = ScenarioPair::matched(group, levi.clone(), s.clone());
            if !even_orth {
                if let Some(l) = s.classes.iter().find(|c| s.is_self_dual(c)) {
                    let mut bad = pair.clone();
                    let flag = bad
                        .inner
                        .sigma
                        .reducible
                        .get_mut(l)
                        .expect("self-dual flag");
                    *flag = !*flag;
                    out.push((format!("flip reducible `{l}`"), bad));
                }
            } else if levi.m >= 1
                && (0..levi.k()).any(|i| levi.blocks[i] % 2 == 1 && s.is_self_dual(&s.classes[i]))
            {
                let mut bad = pair.clone();
                bad.inner.sigma.c0_fixes_tau = Some(!s.fixes_tau());
                out.push(("flip c0_fixes_tau".to_string(), bad));
            }
        }
    }
    out
}

/// Runs the whole sweep, stopping at the first failure.
pub fn run_sweep(cfg: &SweepConfig) -> Result<SweepSummary, SweepFailure> {
    let mut summary = SweepSummary::default();
    for (group, levi) in sweep_levis(cfg) {
        let even_orth = group.family.is_even_orthogonal();
        for s in sigma_assignments(&levi.blocks, even_orth) {
            let sc = Scenario::new(group, levi.clone(), s.clone());
            if let Err(v) = sc.validate() {
                let msg = v
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join("; ");
                return Err(SweepFailure::new("generation", msg, scenario_json(&sc)));
            }
            check_scenario(&sc, &mut summary)?;
            summary.scenarios += 1;
            if !group.form.is_quasi_split() {
                let pair = ScenarioPair::matched(group, levi.clone(), s);
                check_scenario(&pair.quasi_split, &mut SweepSummary::default())?;
                check_pair(&pair, &mut summary)?;
                summary.pairs += 1;
            }
        }
    }
    for (what, bad) in negative_controls(cfg) {
        let rep = transfer_check(&bad).map_err(|e| {
            SweepFailure::new("negative_controls", e.to_string(), json!({"pair": bad}))
        })?;
        if rep.matched {
            return Err(SweepFailure::new(
                "negative_controls",
                format!("corruption `{what}` went undetected"),
                json!({"pair": bad}),
            ));
        }
        summary.bump("negative_controls");
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn patterns_respect_block_sizes() {
        assert_eq!(equivalence_patterns(&[1, 1, 1]).len(), 5);
        assert_eq!(equivalence_patterns(&[1, 2, 1]).len(), 2);
        assert_eq!(equivalence_patterns(&[]), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn duality_involutions() {
        // two parts of equal size: 2 * 2 choices each, plus the swap
        assert_eq!(dualities(&[1, 1]).len(), 5);
        assert_eq!(dualities(&[1, 2]).len(), 4);
    }

    #[test]
    fn assignments_are_distinct_and_valid_shapes() {
        let all = sigma_assignments(&[1, 1], true);
        let distinct: BTreeSet<_> = all.iter().map(|s| format!("{s:?}")).collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|s| s.c0_fixes_tau.is_some()));
    }

    #[test]
    fn small_sweep_passes() {
        let cfg = SweepConfig {
            max_k: 2,
            max_rank: 3,
        };
        let summary = run_sweep(&cfg).unwrap_or_else(|f| panic!("{}", f.to_json()));
        assert!(summary.scenarios > 0);
        assert_eq!(summary.count("closed_form"), summary.scenarios);
    }

    #[test]
    fn k_zero_sweep() {
        let cfg = SweepConfig {
            max_k: 0,
            max_rank: 4,
        };
        let summary = run_sweep(&cfg).unwrap();
        assert!(summary.scenarios > 0);
        assert_eq!(summary.count("negative_controls"), 0);
    }
}
