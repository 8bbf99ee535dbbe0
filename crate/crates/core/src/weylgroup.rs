//! `W_M = S x| C` as a group of signed block permutations.
//!
//! An element acts on `R^k` by `e_i -> (-1)^{signs_i} e_{perm(i)}`. The
//! permutation part only swaps blocks of equal size. Which sign vectors are
//! allowed depends on the type: every vector for B and C; for even
//! orthogonal types an even number of odd-block sign changes when `m = 0`,
//! and any vector when `m > 0`, each odd-block change then dragging along
//! one factor of the outer automorphism `c0`.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::groupdata::{validate_levi, Family, GroupDatum, LeviDatum};
use crate::repdatum::SigmaDatum;
use crate::rootdata::BlockRoot;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<bool>,
}

impl WeylElement {
    pub fn identity(k: usize) -> Self {
        Self {
            perm: (0..k).collect(),
            signs: vec![false; k],
        }
    }

    /// `None` unless `perm` is a bijection of `0..k` and `signs` has length `k`.
    pub fn from_parts(perm: Vec<usize>, signs: Vec<bool>) -> Option<Self> {
        let k = perm.len();
        let mut seen = vec![false; k];
        for &p in &perm {
            if p >= k || std::mem::replace(&mut seen[p], true) {
                return None;
            }
        }
        (signs.len() == k).then_some(Self { perm, signs })
    }

    /// Product of the sign changes `C_i` for `i` in `blocks` (0-based).
    pub fn sign_change(k: usize, blocks: &[usize]) -> Self {
        let mut w = Self::identity(k);
        for &i in blocks {
            w.signs[i] = true;
        }
        w
    }

    /// The block transposition `(ij)` (0-based).
    pub fn transposition(k: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(k);
        w.perm.swap(i, j);
        w
    }

    /// The reflection `s_r` as a signed permutation.
    pub fn reflection(k: usize, r: &BlockRoot) -> Self {
        use crate::rootdata::RootKind::*;
        match r.kind {
            AlphaMinus(i, j) => Self::transposition(k, i, j),
            BetaPlus(i, j) => {
                let mut w = Self::transposition(k, i, j);
                w.signs[i] = true;
                w.signs[j] = true;
                w
            }
            Gamma(i) => Self::sign_change(k, &[i]),
        }
    }

    pub fn k(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[bool] {
        &self.signs
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p) && !self.signs.iter().any(|&s| s)
    }

    /// True when the permutation part is trivial.
    pub fn is_pure_sign_change(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p)
    }

    pub fn sign_set(&self) -> Vec<usize> {
        (0..self.k()).filter(|&i| self.signs[i]).collect()
    }

    pub fn apply(&self, v: &[i32]) -> Vec<i32> {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm[i]] = if self.signs[i] { -x } else { x };
        }
        out
    }

    /// Disjoint nontrivial cycles of the permutation, 0-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.k()];
        let mut out = Vec::new();
        for start in 0..self.k() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![];
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.perm[i];
            }
            out.push(cycle);
        }
        out
    }
}

pub fn compose(w1: &WeylElement, w2: &WeylElement) -> Result<WeylElement> {
    if w1.k() != w2.k() {
        return Err(Error::ContextMismatch {
            expected: w1.k(),
            found: w2.k(),
        });
    }
    Ok(mul(w1, w2))
}

/// `w1 * w2` (apply `w2` first) for elements known to share `k`.
pub(crate) fn mul(w1: &WeylElement, w2: &WeylElement) -> WeylElement {
    let k = w1.k();
    let mut perm = Vec::with_capacity(k);
    let mut signs = Vec::with_capacity(k);
    for i in 0..k {
        let p = w2.perm[i];
        perm.push(w1.perm[p]);
        signs.push(w2.signs[i] ^ w1.signs[p]);
    }
    WeylElement { perm, signs }
}

pub fn inverse(w: &WeylElement) -> WeylElement {
    let k = w.k();
    let mut perm = vec![0; k];
    let mut signs = vec![false; k];
    for i in 0..k {
        perm[w.perm[i]] = i;
        signs[w.perm[i]] = w.signs[i];
    }
    WeylElement { perm, signs }
}

pub fn act_on_root(w: &WeylElement, r: &BlockRoot) -> BlockRoot {
    let v = w.apply(&r.root_vector(w.k()));
    BlockRoot::from_vector(&v).expect("signed permutations map block roots to block roots")
}

/// Dimension of `{H in R^k : wH = H}`: one per cycle with an even number of
/// sign changes.
pub fn fixed_space_dim(w: &WeylElement) -> usize {
    w.cycles()
        .into_iter()
        .filter(|c| c.iter().filter(|&&i| w.signs[i]).count() % 2 == 0)
        .count()
}

/// Subgroup generated by `gens` inside the signed permutations of `0..k`.
pub fn generate(k: usize, gens: &[WeylElement]) -> BTreeSet<WeylElement> {
    let mut seen = BTreeSet::new();
    let id = WeylElement::identity(k);
    seen.insert(id.clone());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = mul(g, &x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// The data `W_M` depends on: family, block sizes and residual rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylContext {
    family: Family,
    blocks: Vec<u32>,
    m: u32,
}

impl WeylContext {
    pub fn new(group: &GroupDatum, levi: &LeviDatum) -> Result<Self> {
        validate_levi(group, levi)?;
        Ok(Self {
            family: group.family,
            blocks: levi.blocks.clone(),
            m: levi.m,
        })
    }

    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[u32] {
        &self.blocks
    }

    fn odd_sign_changes(&self, w: &WeylElement) -> usize {
        w.sign_set()
            .into_iter()
            .filter(|&i| self.blocks[i] % 2 == 1)
            .count()
    }

    /// Whether `w` carries the outer automorphism `c0` on `G_-(m)`.
    pub fn c0_bit(&self, w: &WeylElement) -> bool {
        self.family.is_even_orthogonal() && self.m > 0 && self.odd_sign_changes(w) % 2 == 1
    }

    pub fn contains(&self, w: &WeylElement) -> bool {
        if w.k() != self.k() {
            return false;
        }
        if (0..self.k()).any(|i| self.blocks[w.perm[i]] != self.blocks[i]) {
            return false;
        }
        !(self.family.is_even_orthogonal() && self.m == 0 && self.odd_sign_changes(w) % 2 == 1)
    }

    /// All of `W_M`, in canonical order.
    pub fn elements(&self) -> Vec<WeylElement> {
        let k = self.k();
        let mut perms = Vec::new();
        let mut current = Vec::with_capacity(k);
        let mut used = vec![false; k];
        self.block_perms(&mut current, &mut used, &mut perms);
        let mut out = Vec::new();
        for p in perms {
            for mask in 0u64..(1 << k) {
                let signs = (0..k).map(|i| mask >> i & 1 == 1).collect();
                let w = WeylElement {
                    perm: p.clone(),
                    signs,
                };
                if self.contains(&w) {
                    out.push(w);
                }
            }
        }
        out.sort();
        out
    }

    fn block_perms(&self, current: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        let i = current.len();
        if i == self.k() {
            out.push(current.clone());
            return;
        }
        for j in 0..self.k() {
            if !used[j] && self.blocks[j] == self.blocks[i] {
                used[j] = true;
                current.push(j);
                self.block_perms(current, used, out);
                current.pop();
                used[j] = false;
            }
        }
    }

    /// `w . sigma`: block `perm(i)` receives `sigma_i`, dualised when `w`
    /// changes the sign of block `i`; `tau` picks up `c0` with the `c0` bit.
    pub fn act_on_sigma(&self, w: &WeylElement, s: &SigmaDatum) -> SigmaDatum {
        let mut classes = s.classes.clone();
        for i in 0..w.k() {
            let c = &s.classes[i];
            classes[w.perm[i]] = if w.signs[i] {
                s.dual_of(c).to_string()
            } else {
                c.clone()
            };
        }
        SigmaDatum {
            classes,
            tau_twisted: s.tau_twisted ^ self.c0_bit(w),
            ..s.clone()
        }
    }

    /// `perm-cycles;sign-set;c0-bit` with 1-based block indices.
    pub fn label(&self, w: &WeylElement) -> String {
        let mut out = String::new();
        let cycles: Vec<_> = w.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            out.push_str("()");
        }
        for c in cycles {
            let items: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            let _ = write!(out, "({})", items.join(" "));
        }
        let signs: Vec<String> = w.sign_set().iter().map(|i| (i + 1).to_string()).collect();
        let _ = write!(out, ";{{{}}};{}", signs.join(","), u8::from(self.c0_bit(w)));
        out
    }
}

pub fn enumerate_weyl(group: &GroupDatum, levi: &LeviDatum) -> Result<Vec<WeylElement>> {
    Ok(WeylContext::new(group, levi)?.elements())
}

#[cfg(test)]
mod tests {
    use std::ops::Neg;

    use super::*;
    use crate::rootdata::reduced_roots;

    fn ctx(family: Family, rank: u32, blocks: &[u32], m: u32) -> WeylContext {
        WeylContext::new(
            &GroupDatum::quasi_split(family, rank),
            &LeviDatum::new(blocks.to_vec(), m, 1),
        )
        .unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(ctx(Family::C, 3, &[1, 1], 1).elements().len(), 8);
        assert_eq!(ctx(Family::D1, 2, &[1, 1], 0).elements().len(), 4);
        assert_eq!(ctx(Family::D1, 6, &[1, 2], 3).elements().len(), 4);
        // one odd block with m = 0: its sign can never flip alone
        assert_eq!(ctx(Family::D1, 5, &[2, 3], 0).elements().len(), 2);
    }

    #[test]
    fn c0_bit_follows_odd_blocks() {
        let c = ctx(Family::D1, 6, &[1, 2], 3);
        assert!(c.c0_bit(&WeylElement::sign_change(2, &[0])));
        assert!(!c.c0_bit(&WeylElement::sign_change(2, &[1])));
        let c = ctx(Family::C, 3, &[1, 1], 1);
        assert!(!c.c0_bit(&WeylElement::sign_change(2, &[0])));
    }

    #[test]
    fn composition_examples() {
        let w = WeylElement::from_parts(vec![1, 2, 0], vec![true, false, true]).unwrap();
        assert!(compose(&w, &inverse(&w)).unwrap().is_identity());
        let c1 = WeylElement::sign_change(2, &[0]);
        assert!(compose(&c1, &c1).unwrap().is_identity());
        let s = WeylElement::transposition(2, 0, 1);
        let c2 = WeylElement::sign_change(2, &[1]);
        assert_eq!(compose(&s, &c1).unwrap(), compose(&c2, &s).unwrap());
        assert!(matches!(
            compose(&s, &WeylElement::identity(3)),
            Err(Error::ContextMismatch { .. })
        ));
    }

    #[test]
    fn root_action_examples() {
        let a12 = BlockRoot::alpha(0, 1);
        let s = WeylElement::transposition(2, 0, 1);
        assert_eq!(act_on_root(&s, &a12), a12.neg());
        let c2 = WeylElement::sign_change(2, &[1]);
        assert_eq!(act_on_root(&c2, &BlockRoot::beta(0, 1)), a12);
        let c12 = WeylElement::sign_change(2, &[0, 1]);
        assert_eq!(
            act_on_root(&c12, &BlockRoot::gamma(0)),
            BlockRoot::gamma(0).neg()
        );
    }

    #[test]
    fn sigma_action_examples() {
        let c = ctx(Family::C, 2, &[1, 1], 0);
        let s = SigmaDatum::new(&["a", "b"])
            .self_dual("a", true)
            .self_dual("b", false);
        assert_eq!(c.act_on_sigma(&WeylElement::identity(2), &s), s);
        assert_eq!(c.act_on_sigma(&WeylElement::sign_change(2, &[0]), &s), s);
        let swapped = c.act_on_sigma(&WeylElement::transposition(2, 0, 1), &s);
        assert_eq!(swapped.classes, vec!["b", "a"]);
    }

    #[test]
    fn fixed_space_examples() {
        assert_eq!(fixed_space_dim(&WeylElement::identity(2)), 2);
        assert_eq!(fixed_space_dim(&WeylElement::sign_change(2, &[0, 1])), 0);
        assert_eq!(fixed_space_dim(&WeylElement::transposition(2, 0, 1)), 1);
    }

    #[test]
    fn label_format() {
        let c = ctx(Family::D1, 6, &[1, 1, 2], 2);
        let w = WeylElement::from_parts(vec![1, 0, 2], vec![true, false, false]).unwrap();
        assert_eq!(c.label(&w), "(1 2);{1};1");
        assert_eq!(c.label(&WeylElement::identity(3)), "();{};0");
    }

    #[test]
    fn group_axioms_and_root_closure() {
        let cases: &[(Family, u32, &[u32], u32)] = &[
            (Family::B, 4, &[1, 1, 1, 1], 0),
            (Family::C, 4, &[1, 1, 2], 0),
            (Family::D1, 4, &[1, 1, 1, 1], 0),
            (Family::D1, 5, &[1, 1, 1], 2),
            (Family::D2, 4, &[1, 2], 1),
        ];
        for &(fam, n, blocks, m) in cases {
            let g = GroupDatum::quasi_split(fam, n);
            let l = LeviDatum::new(blocks.to_vec(), m, 1);
            let c = WeylContext::new(&g, &l).unwrap();
            let elems = c.elements();
            let set: BTreeSet<_> = elems.iter().cloned().collect();
            let roots = reduced_roots(&g, &l).unwrap();
            assert!(set.contains(&WeylElement::identity(c.k())));
            for a in &elems {
                assert!(set.contains(&inverse(a)));
                assert_eq!(fixed_space_dim(a), fixed_space_dim(&inverse(a)));
                for b in &elems {
                    let ab = mul(a, b);
                    assert!(set.contains(&ab));
                    for r in &roots {
                        let image = act_on_root(a, r);
                        assert!(roots.contains(&image) || roots.contains(&image.neg()));
                        assert_eq!(act_on_root(&ab, r), act_on_root(a, &act_on_root(b, r)));
                    }
                }
            }
        }
    }
}
