//! Knapp-Stein R-groups by brute force over `W_M`.
//!
//! `W(sigma)` is the stabilizer of the datum, `Delta'` the set of reduced
//! roots whose Plancherel measure vanishes (decided by the label criteria),
//! `W'` the reflection group of `Delta'`, and `R` the elements of `W(sigma)`
//! keeping `Delta'` positive. The closed forms for `R` are evaluated
//! separately and never used to compute it.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groupdata::{rgroup_supported, GroupDatum, LeviDatum};
use crate::repdatum::{sigma_equal, validate_sigma, ScenarioPair, SigmaDatum};
use crate::rootdata::{reduced_roots, BlockRoot, RootKind};
use crate::weylgroup::{act_on_root, generate, inverse, mul, WeylContext, WeylElement};

#[derive(Debug, Clone)]
pub struct RGroupResult {
    pub context: WeylContext,
    pub weyl_order: usize,
    pub w_sigma: BTreeSet<WeylElement>,
    pub delta_prime: BTreeSet<BlockRoot>,
    pub w_prime: BTreeSet<WeylElement>,
    pub r_group: BTreeSet<WeylElement>,
    /// Sign-change generators of `R`, fewest signs and smallest indices first.
    pub generators: Vec<WeylElement>,
    /// `d` with `R ~ Z_2^d`.
    pub iso_exponent: usize,
    pub decomposition_ok: bool,
}

impl RGroupResult {
    pub fn k(&self) -> usize {
        self.context.k()
    }

    pub fn iso_type(&self) -> String {
        format!("Z2^{}", self.iso_exponent)
    }

    pub fn labels<'a>(&self, it: impl IntoIterator<Item = &'a WeylElement>) -> Vec<String> {
        it.into_iter().map(|w| self.context.label(w)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "weyl_order": self.weyl_order,
            "w_sigma": self.labels(&self.w_sigma),
            "delta_prime": self.delta_prime.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "w_prime": self.labels(&self.w_prime),
            "r_group": self.labels(&self.r_group),
            "generators": self.labels(&self.generators),
            "iso_type": self.iso_type(),
            "decomposition_ok": self.decomposition_ok,
        })
    }
}

fn prepare(group: &GroupDatum, levi: &LeviDatum, s: &SigmaDatum) -> Result<WeylContext> {
    validate_sigma(group, levi, s)?;
    if !rgroup_supported(group, levi) {
        return Err(Error::UnsupportedLevi(format!(
            "{:?} (m = {}) of {group}",
            levi.blocks, levi.m
        )));
    }
    WeylContext::new(group, levi)
}

fn fixes(ctx: &WeylContext, w: &WeylElement, s: &SigmaDatum) -> bool {
    sigma_equal(&ctx.act_on_sigma(w, s), s)
}

/// `W(sigma) = { w in W_M : w sigma ~ sigma }`.
pub fn stabilizer(
    group: &GroupDatum,
    levi: &LeviDatum,
    s: &SigmaDatum,
) -> Result<BTreeSet<WeylElement>> {
    let ctx = prepare(group, levi, s)?;
    Ok(stabilizer_in(&ctx, s))
}

fn stabilizer_in(ctx: &WeylContext, s: &SigmaDatum) -> BTreeSet<WeylElement> {
    ctx.elements()
        .into_iter()
        .filter(|w| fixes(ctx, w, s))
        .collect()
}

/// Roots `alpha` with `mu_alpha(sigma) = 0`.
pub fn delta_prime(
    group: &GroupDatum,
    levi: &LeviDatum,
    s: &SigmaDatum,
) -> Result<BTreeSet<BlockRoot>> {
    let ctx = prepare(group, levi, s)?;
    delta_prime_in(group, levi, &ctx, s)
}

fn delta_prime_in(
    group: &GroupDatum,
    levi: &LeviDatum,
    ctx: &WeylContext,
    s: &SigmaDatum,
) -> Result<BTreeSet<BlockRoot>> {
    let c = &s.classes;
    let mut out = BTreeSet::new();
    for r in reduced_roots(group, levi)? {
        let vanishes = match r.kind {
            RootKind::AlphaMinus(i, j) => c[i] == c[j],
            RootKind::BetaPlus(i, j) => s.dual_of(&c[i]) == c[j],
            RootKind::Gamma(i) => {
                let refl = WeylElement::reflection(ctx.k(), &r);
                ctx.contains(&refl) && fixes(ctx, &refl, s) && !s.reducible_flag(&c[i])?
            }
        };
        if vanishes {
            out.insert(r);
        }
    }
    Ok(out)
}

fn keeps_positive(w: &WeylElement, roots: &BTreeSet<BlockRoot>) -> bool {
    roots.iter().all(|a| act_on_root(w, a).is_positive())
}

fn inversions(w: &WeylElement, roots: &BTreeSet<BlockRoot>) -> usize {
    roots
        .iter()
        .filter(|a| !act_on_root(w, a).is_positive())
        .count()
}

/// Checks `W = R x| W'` and returns a description of the first failure.
fn check_decomposition(
    whole: &BTreeSet<WeylElement>,
    r: &BTreeSet<WeylElement>,
    w_prime: &BTreeSet<WeylElement>,
    k: usize,
) -> std::result::Result<(), String> {
    if !w_prime.is_subset(whole) {
        return Err("W' is not contained in W(sigma)".into());
    }
    if !r.is_subset(whole) {
        return Err("R is not contained in W(sigma)".into());
    }
    for x in r {
        for y in r {
            if !r.contains(&mul(x, y)) {
                return Err("R is not closed under composition".into());
            }
        }
    }
    for g in whole {
        let g_inv = inverse(g);
        for x in w_prime {
            if !w_prime.contains(&mul(&mul(g, x), &g_inv)) {
                return Err("W' is not normal in W(sigma)".into());
            }
        }
    }
    let id = WeylElement::identity(k);
    if r.intersection(w_prime).any(|x| *x != id) {
        return Err("R and W' intersect nontrivially".into());
    }
    if whole.len() != r.len() * w_prime.len() {
        return Err(format!(
            "|W(sigma)| = {} but |R| * |W'| = {} * {}",
            whole.len(),
            r.len(),
            w_prime.len()
        ));
    }
    let products: BTreeSet<_> = r
        .iter()
        .flat_map(|x| w_prime.iter().map(move |y| mul(x, y)))
        .collect();
    if &products != whole {
        return Err("R W' does not exhaust W(sigma)".into());
    }
    Ok(())
}

fn sign_mask(w: &WeylElement) -> u64 {
    w.sign_set().iter().fold(0, |acc, &i| acc | 1 << i)
}

/// Exponent and greedy generating set of an elementary abelian group of
/// pure sign changes.
fn elementary_basis(r: &BTreeSet<WeylElement>, k: usize) -> Result<(usize, Vec<WeylElement>)> {
    for x in r {
        if !x.is_pure_sign_change() {
            return Err(Error::Inconsistency(format!(
                "R contains an element with nontrivial permutation part: {:?}",
                x.perm()
            )));
        }
    }
    if !r.len().is_power_of_two() {
        return Err(Error::Inconsistency(format!(
            "|R| = {} is not a power of 2",
            r.len()
        )));
    }
    let mut candidates: Vec<&WeylElement> = r.iter().filter(|x| !x.is_identity()).collect();
    candidates.sort_by_key(|x| (x.sign_set().len(), x.sign_set()));
    let mut span: BTreeSet<u64> = BTreeSet::from([0]);
    let mut basis = Vec::new();
    for x in candidates {
        let v = sign_mask(x);
        if span.contains(&v) {
            continue;
        }
        let shifted: Vec<u64> = span.iter().map(|s| s ^ v).collect();
        span.extend(shifted);
        basis.push(WeylElement::sign_change(k, &x.sign_set()));
    }
    if span.len() != r.len() {
        return Err(Error::Inconsistency(
            "R is not spanned by its sign changes".into(),
        ));
    }
    Ok((basis.len(), basis))
}

/// Full Knapp-Stein computation with the decomposition check.
pub fn knapp_stein(group: &GroupDatum, levi: &LeviDatum, s: &SigmaDatum) -> Result<RGroupResult> {
    let ctx = prepare(group, levi, s)?;
    let k = ctx.k();
    let weyl_order = ctx.elements().len();
    let w_sigma = stabilizer_in(&ctx, s);
    let delta = delta_prime_in(group, levi, &ctx, s)?;
    let reflections: Vec<_> = delta
        .iter()
        .map(|a| WeylElement::reflection(k, a))
        .collect();
    let w_prime = generate(k, &reflections);
    let r_group: BTreeSet<_> = w_sigma
        .iter()
        .filter(|w| keeps_positive(w, &delta))
        .cloned()
        .collect();
    check_decomposition(&w_sigma, &r_group, &w_prime, k).map_err(Error::Inconsistency)?;
    let (iso_exponent, generators) = elementary_basis(&r_group, k)?;
    Ok(RGroupResult {
        context: ctx,
        weyl_order,
        w_sigma,
        delta_prime: delta,
        w_prime,
        r_group,
        generators,
        iso_exponent,
        decomposition_ok: true,
    })
}

/// `R` as predicted by the closed-form classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub iso_exponent: usize,
    pub generators: Vec<WeylElement>,
    /// Classes counted by sign changes `C_i` (all of `d` for types B, C).
    pub d1: usize,
    /// Self-dual odd-block classes entering in pairs (even orthogonal only).
    pub d2: usize,
}

/// Indices `i` in `set` with `sigma_j != sigma_i` for every `j > i`.
fn last_occurrences(set: &[usize], classes: &[String]) -> Vec<usize> {
    set.iter()
        .copied()
        .filter(|&i| !set.iter().any(|&j| j > i && classes[j] == classes[i]))
        .collect()
}

pub fn closed_form(group: &GroupDatum, levi: &LeviDatum, s: &SigmaDatum) -> Result<ClosedForm> {
    prepare(group, levi, s)?;
    let k = levi.k();
    let c = &s.classes;
    let reducible_self_dual =
        |i: usize| -> Result<bool> { Ok(s.is_self_dual(&c[i]) && s.reducible_flag(&c[i])?) };
    if !group.family.is_even_orthogonal() {
        let mut in_i = Vec::new();
        for i in 0..k {
            if reducible_self_dual(i)? {
                in_i.push(i);
            }
        }
        let gens: Vec<_> = last_occurrences(&in_i, c)
            .into_iter()
            .map(|i| WeylElement::sign_change(k, &[i]))
            .collect();
        return Ok(ClosedForm {
            iso_exponent: gens.len(),
            d1: gens.len(),
            d2: 0,
            generators: gens,
        });
    }

    // With c0 tau ~ tau and a nontrivial G_-(m), every block behaves like an
    // even one.
    let all_in_i1 = levi.m >= 1 && s.fixes_tau();
    let (mut i1, mut i2) = (Vec::new(), Vec::new());
    for (i, (size, class)) in levi.blocks.iter().zip(c).enumerate() {
        if all_in_i1 || size.is_multiple_of(2) {
            if reducible_self_dual(i)? {
                i1.push(i);
            }
        } else if s.is_self_dual(class) {
            i2.push(i);
        }
    }
    let l1 = last_occurrences(&i1, c);
    let l2 = last_occurrences(&i2, c);
    let (d1, d2) = (l1.len(), l2.len());
    let mut gens = Vec::new();
    if let Some((&anchor, rest)) = l2.split_last() {
        gens.extend(
            rest.iter()
                .map(|&i| WeylElement::sign_change(k, &[i, anchor])),
        );
    }
    gens.extend(l1.iter().map(|&i| WeylElement::sign_change(k, &[i])));
    Ok(ClosedForm {
        iso_exponent: if d2 > 0 { d1 + d2 - 1 } else { d1 },
        generators: gens,
        d1,
        d2,
    })
}

/// Whether `w` fixes the parameter `phi_1 + ... + phi_k + phi_-`, checked
/// summand by summand.
fn fixes_parameter(ctx: &WeylContext, w: &WeylElement, phi: &SigmaDatum) -> bool {
    if ctx.c0_bit(w) && !phi.fixes_tau() {
        return false;
    }
    (0..w.k()).all(|i| {
        let moved = &phi.classes[i];
        let image = if w.signs()[i] {
            phi.dual_of(moved)
        } else {
            moved.as_str()
        };
        phi.classes[w.perm()[i]] == image
    })
}

/// Roots whose reflection lies in the identity component `W_phi^o`.
fn identity_component_roots(
    group: &GroupDatum,
    levi: &LeviDatum,
    ctx: &WeylContext,
    phi: &SigmaDatum,
) -> Result<BTreeSet<BlockRoot>> {
    let mut out = BTreeSet::new();
    for r in reduced_roots(group, levi)? {
        let refl = WeylElement::reflection(ctx.k(), &r);
        if !ctx.contains(&refl) || !fixes_parameter(ctx, &refl, phi) {
            continue;
        }
        let connected = match r.kind {
            RootKind::Gamma(i) => !phi.reducible_flag(&phi.classes[i])?,
            _ => true,
        };
        if connected {
            out.insert(r);
        }
    }
    Ok(out)
}

/// `R = big / small` with each coset represented by its member inverting the
/// fewest roots of `roots`.
fn quotient(
    big: &BTreeSet<WeylElement>,
    small: &BTreeSet<WeylElement>,
    roots: &BTreeSet<BlockRoot>,
) -> Result<BTreeSet<WeylElement>> {
    let mut covered: BTreeSet<WeylElement> = BTreeSet::new();
    let mut reps = BTreeSet::new();
    for g in big {
        if covered.contains(g) {
            continue;
        }
        let coset: Vec<WeylElement> = small.iter().map(|x| mul(g, x)).collect();
        let rep = coset
            .iter()
            .min_by_key(|w| (inversions(w, roots), (*w).clone()))
            .expect("cosets are nonempty");
        if inversions(rep, roots) != 0 {
            return Err(Error::Inconsistency(
                "a coset of W_phi^o has no chamber-preserving representative".into(),
            ));
        }
        reps.insert(rep.clone());
        covered.extend(coset);
    }
    Ok(reps)
}

/// The endoscopic R-group `R_phi = W_phi / W_phi^o`, reading the datum as an
/// L-parameter.
pub fn endoscopic_side(
    group: &GroupDatum,
    levi: &LeviDatum,
    phi: &SigmaDatum,
) -> Result<RGroupResult> {
    arthur_side(group, levi, phi, None)
}

/// The Arthur R-group `R_{phi,sigma} = (W_phi n W(sigma)) / (W_phi^o n W(sigma))`.
/// With `sigma = None` this is `R_phi`.
pub fn arthur_side(
    group: &GroupDatum,
    levi: &LeviDatum,
    phi: &SigmaDatum,
    sigma: Option<&SigmaDatum>,
) -> Result<RGroupResult> {
    let ctx = prepare(group, levi, phi)?;
    let k = ctx.k();
    let all = ctx.elements();
    let mut w_phi: BTreeSet<WeylElement> = all
        .iter()
        .filter(|w| fixes_parameter(&ctx, w, phi))
        .cloned()
        .collect();
    let roots = identity_component_roots(group, levi, &ctx, phi)?;
    let reflections: Vec<_> = roots
        .iter()
        .map(|a| WeylElement::reflection(k, a))
        .collect();
    let mut w_phi_0 = generate(k, &reflections);
    if let Some(s) = sigma {
        validate_sigma(group, levi, s)?;
        let w_s = stabilizer_in(&ctx, s);
        w_phi = w_phi.intersection(&w_s).cloned().collect();
        w_phi_0 = w_phi_0.intersection(&w_s).cloned().collect();
    }
    let r = quotient(&w_phi, &w_phi_0, &roots)?;
    let decomposition_ok = w_phi.len() == r.len() * w_phi_0.len();
    if !decomposition_ok {
        return Err(Error::Inconsistency(format!(
            "|W_phi| = {} but |R_phi| * |W_phi^o| = {} * {}",
            w_phi.len(),
            r.len(),
            w_phi_0.len()
        )));
    }
    let (iso_exponent, generators) = elementary_basis(&r, k)?;
    Ok(RGroupResult {
        weyl_order: all.len(),
        context: ctx,
        w_sigma: w_phi,
        delta_prime: roots,
        w_prime: w_phi_0,
        r_group: r,
        generators,
        iso_exponent,
        decomposition_ok,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransferReport {
    pub matched: bool,
    /// One entry per differing component, e.g. `delta_prime: quasi-split only [g1]`.
    pub details: Vec<String>,
}

impl TransferReport {
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": if self.matched { "match" } else { "mismatch" },
            "details": self.details,
        })
    }
}

fn diff<T: Ord + Clone>(
    name: &str,
    a: &BTreeSet<T>,
    b: &BTreeSet<T>,
    show: impl Fn(&T) -> String,
) -> Option<String> {
    if a == b {
        return None;
    }
    let only_a: Vec<String> = a.difference(b).map(&show).collect();
    let only_b: Vec<String> = b.difference(a).map(&show).collect();
    Some(format!(
        "{name}: quasi-split only [{}], inner only [{}]",
        only_a.join(", "),
        only_b.join(", ")
    ))
}

/// Computes both sides of a matched pair and compares `Delta'`, `W(sigma)`,
/// `W'` and `R` inside the common group `S x| C`.
pub fn transfer_check(pair: &ScenarioPair) -> Result<TransferReport> {
    pair.check_shape()?;
    let q = &pair.quasi_split;
    let i = &pair.inner;
    let rq = knapp_stein(&q.group, &q.levi, &q.sigma)?;
    let ri = knapp_stein(&i.group, &i.levi, &i.sigma)?;
    let label = |w: &WeylElement| rq.context.label(w);
    let details: Vec<String> = [
        diff(
            "delta_prime",
            &rq.delta_prime,
            &ri.delta_prime,
            ToString::to_string,
        ),
        diff("w_sigma", &rq.w_sigma, &ri.w_sigma, label),
        diff("w_prime", &rq.w_prime, &ri.w_prime, label),
        diff("r_group", &rq.r_group, &ri.r_group, label),
    ]
    .into_iter()
    .flatten()
    .collect();
    Ok(TransferReport {
        matched: details.is_empty(),
        details,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groupdata::{Family, InnerVariant};

    fn sp(n: u32) -> GroupDatum {
        GroupDatum::quasi_split(Family::C, n)
    }

    fn qs_levi(blocks: &[u32], m: u32) -> LeviDatum {
        LeviDatum::new(blocks.to_vec(), m, 1)
    }

    #[test]
    fn trivial_stabilizer() {
        let s = SigmaDatum::new(&["a", "b"])
            .dual_pair("a", "a~")
            .dual_pair("b", "b~");
        let w = stabilizer(&sp(2), &qs_levi(&[1, 1], 0), &s).unwrap();
        assert_eq!(w.len(), 1);
    }

    #[test]
    fn stabilizer_orders() {
        let s = SigmaDatum::new(&["a"]).self_dual("a", true);
        assert_eq!(stabilizer(&sp(2), &qs_levi(&[1], 1), &s).unwrap().len(), 2);
        let s = SigmaDatum::new(&["a", "a"]).self_dual("a", true);
        assert_eq!(
            stabilizer(&sp(3), &qs_levi(&[1, 1], 1), &s).unwrap().len(),
            8
        );
    }

    #[test]
    fn delta_prime_criteria() {
        let s = SigmaDatum::new(&["a", "a"]).self_dual("a", true);
        let d = delta_prime(&sp(3), &qs_levi(&[1, 1], 1), &s).unwrap();
        assert!(d.contains(&BlockRoot::alpha(0, 1)));
        let red = SigmaDatum::new(&["a"]).self_dual("a", true);
        assert!(delta_prime(&sp(2), &qs_levi(&[1], 1), &red)
            .unwrap()
            .is_empty());
        let irr = SigmaDatum::new(&["a"]).self_dual("a", false);
        assert_eq!(
            delta_prime(&sp(2), &qs_levi(&[1], 1), &irr).unwrap(),
            BTreeSet::from([BlockRoot::gamma(0)])
        );
    }

    #[test]
    fn single_reducible_block() {
        let s = SigmaDatum::new(&["a"]).self_dual("a", true);
        let r = knapp_stein(&sp(2), &qs_levi(&[1], 1), &s).unwrap();
        assert_eq!(r.iso_exponent, 1);
        assert_eq!(r.generators, vec![WeylElement::sign_change(1, &[0])]);
        assert_eq!(r.w_prime.len(), 1);
    }

    #[test]
    fn repeated_reducible_class() {
        let s = SigmaDatum::new(&["a", "a"]).self_dual("a", true);
        let r = knapp_stein(&sp(3), &qs_levi(&[1, 1], 1), &s).unwrap();
        assert_eq!(r.w_sigma.len(), 8);
        assert_eq!(r.w_prime.len(), 4);
        assert_eq!(r.generators, vec![WeylElement::sign_change(2, &[1])]);
    }

    #[test]
    fn even_orthogonal_without_c0_fix_is_trivial() {
        let g = GroupDatum::quasi_split(Family::D1, 6);
        let s = SigmaDatum::new(&["a", "b"])
            .self_dual("a", true)
            .dual_pair("b", "b~")
            .with_c0_fixes_tau(false);
        let r = knapp_stein(&g, &qs_levi(&[1, 2], 3), &s).unwrap();
        assert_eq!(r.iso_exponent, 0);
        assert_eq!(
            closed_form(&g, &qs_levi(&[1, 2], 3), &s)
                .unwrap()
                .iso_exponent,
            0
        );
    }

    #[test]
    fn closed_form_generator_rule() {
        let s = SigmaDatum::new(&["a", "b", "b"])
            .self_dual("a", true)
            .self_dual("b", true);
        let cf = closed_form(&sp(3), &qs_levi(&[1, 1, 1], 0), &s).unwrap();
        assert_eq!(cf.iso_exponent, 2);
        assert_eq!(
            cf.generators,
            vec![
                WeylElement::sign_change(3, &[0]),
                WeylElement::sign_change(3, &[2])
            ]
        );
    }

    #[test]
    fn closed_form_single_odd_pair_class() {
        // d2 = 1, d1 = 0: trivial R
        let g = GroupDatum::quasi_split(Family::D1, 3);
        let s = SigmaDatum::new(&["a"]).self_dual("a", true);
        let cf = closed_form(&g, &qs_levi(&[1], 2), &s).unwrap();
        assert_eq!((cf.d1, cf.d2, cf.iso_exponent), (0, 1, 0));
    }

    #[test]
    fn group_itself() {
        let s = SigmaDatum::new::<&str>(&[]);
        let r = knapp_stein(&sp(2), &qs_levi(&[], 2), &s).unwrap();
        assert_eq!(r.iso_exponent, 0);
        assert_eq!(
            closed_form(&sp(2), &qs_levi(&[], 2), &s)
                .unwrap()
                .iso_exponent,
            0
        );
        let e = endoscopic_side(&sp(2), &qs_levi(&[], 2), &s).unwrap();
        assert_eq!(e.r_group, r.r_group);
    }

    #[test]
    fn endoscopic_matches_example() {
        let s = SigmaDatum::new(&["a"]).self_dual("a", true);
        let e = endoscopic_side(&sp(2), &qs_levi(&[1], 1), &s).unwrap();
        assert_eq!(e.iso_exponent, 1);
    }

    #[test]
    fn transfer_examples() {
        let inner = GroupDatum::inner(Family::C, 3, InnerVariant::Unique);
        let s = SigmaDatum::new(&["a"]).self_dual("a", true);
        let pair = ScenarioPair::matched(inner, LeviDatum::new(vec![2], 1, 2), s);
        assert!(transfer_check(&pair).unwrap().matched);

        let mut bad = pair.clone();
        bad.inner.sigma.reducible.insert("a".into(), false);
        let rep = transfer_check(&bad).unwrap();
        assert!(!rep.matched);
        assert!(rep.details[0].starts_with("delta_prime"));

        let g = GroupDatum::inner(Family::C, 2, InnerVariant::Unique);
        let trivial = ScenarioPair::matched(
            g,
            LeviDatum::new(vec![], 2, 2),
            SigmaDatum::new::<&str>(&[]),
        );
        assert!(transfer_check(&trivial).unwrap().matched);
    }

    #[test]
    fn unsupported_levi_is_rejected() {
        let g = GroupDatum::inner(Family::D2, 3, InnerVariant::Unique);
        let s = SigmaDatum::new(&["a"]).self_dual("a", true);
        assert!(matches!(
            knapp_stein(&g, &LeviDatum::new(vec![2], 1, 2), &s),
            Err(Error::UnsupportedLevi(_))
        ));
    }
}
