//! Reduced roots `Phi(P, A_M)` restricted to the split component, written in
//! block coordinates `e_1, ..., e_k`.
//!
//! Whatever the ambient type, every root restricts to one of `e_i - e_j`,
//! `e_i + e_j` or a multiple of `e_i`; the last kind is stored as `Gamma(i)`
//! regardless of whether it came from `e_{m_i}`, `2e_{m_i}` or
//! `e_{m_i} + e_n`.

use std::fmt;
use std::ops::Neg;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::groupdata::{validate_levi, GroupDatum, LeviDatum};

/// Root kind with 0-based block indices (`i < j` for the paired kinds).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    /// `e_i - e_j`
    AlphaMinus(usize, usize),
    /// `e_i + e_j`
    BetaPlus(usize, usize),
    /// `e_i`
    Gamma(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockRoot {
    pub kind: RootKind,
    /// `false` for the negative of the listed root.
    pub sign: bool,
}

impl BlockRoot {
    pub fn alpha(i: usize, j: usize) -> Self {
        assert!(i < j, "alpha_{{ij}} needs i < j");
        Self {
            kind: RootKind::AlphaMinus(i, j),
            sign: true,
        }
    }

    pub fn beta(i: usize, j: usize) -> Self {
        assert!(i < j, "beta_{{ij}} needs i < j");
        Self {
            kind: RootKind::BetaPlus(i, j),
            sign: true,
        }
    }

    pub fn gamma(i: usize) -> Self {
        Self {
            kind: RootKind::Gamma(i),
            sign: true,
        }
    }

    /// Largest block index the root touches, plus one.
    pub fn span(&self) -> usize {
        match self.kind {
            RootKind::AlphaMinus(_, j) | RootKind::BetaPlus(_, j) => j + 1,
            RootKind::Gamma(i) => i + 1,
        }
    }

    pub fn root_vector(&self, k: usize) -> Vec<i32> {
        let mut v = vec![0; k];
        match self.kind {
            RootKind::AlphaMinus(i, j) => {
                v[i] = 1;
                v[j] = -1;
            }
            RootKind::BetaPlus(i, j) => {
                v[i] = 1;
                v[j] = 1;
            }
            RootKind::Gamma(i) => v[i] = 1,
        }
        if !self.sign {
            v.iter_mut().for_each(|x| *x = -*x);
        }
        v
    }

    /// Lexicographic positivity: the first nonzero coordinate is positive.
    pub fn is_positive(&self) -> bool {
        self.root_vector(self.span())
            .into_iter()
            .find(|&x| x != 0)
            .is_some_and(|x| x > 0)
    }

    /// Inverse of [`BlockRoot::root_vector`]; `None` if `v` is not a block root.
    pub fn from_vector(v: &[i32]) -> Option<Self> {
        let support: Vec<(usize, i32)> = v
            .iter()
            .copied()
            .enumerate()
            .filter(|&(_, x)| x != 0)
            .collect();
        match support.as_slice() {
            [(i, s)] if s.abs() == 1 => Some(Self {
                kind: RootKind::Gamma(*i),
                sign: *s > 0,
            }),
            [(i, a), (j, b)] if a.abs() == 1 && b.abs() == 1 => {
                let kind = if a == b {
                    RootKind::BetaPlus(*i, *j)
                } else {
                    RootKind::AlphaMinus(*i, *j)
                };
                Some(Self { kind, sign: *a > 0 })
            }
            _ => None,
        }
    }
}

impl Neg for BlockRoot {
    type Output = Self;

    fn neg(self) -> Self {
        Self {
            sign: !self.sign,
            ..self
        }
    }
}

impl fmt::Display for BlockRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.sign {
            f.write_str("-")?;
        }
        match self.kind {
            RootKind::AlphaMinus(i, j) => write!(f, "a{}{}", i + 1, j + 1),
            RootKind::BetaPlus(i, j) => write!(f, "b{}{}", i + 1, j + 1),
            RootKind::Gamma(i) => write!(f, "g{}", i + 1),
        }
    }
}

impl Serialize for BlockRoot {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Whether the relative root system has a root restricting to `e_i`.
///
/// Types B and C always do. For even orthogonal types the root is
/// `e_{m_i} + e_n` when `m >= 1`; with `m = 0` only an even block carries one
/// (the Siegel-type roots inside the block), which is also exactly when the
/// sign change `C_i` alone lies in `W_M`.
pub fn has_gamma(group: &GroupDatum, levi: &LeviDatum, i: usize) -> bool {
    !group.family.is_even_orthogonal() || levi.m >= 1 || levi.blocks[i].is_multiple_of(2)
}

/// Positive reduced roots of `P` with respect to `A_M`.
pub fn reduced_roots(group: &GroupDatum, levi: &LeviDatum) -> Result<Vec<BlockRoot>> {
    validate_levi(group, levi)?;
    let k = levi.k();
    let mut out = Vec::with_capacity(k * k);
    for i in 0..k {
        for j in i + 1..k {
            out.push(BlockRoot::alpha(i, j));
            out.push(BlockRoot::beta(i, j));
        }
        if has_gamma(group, levi, i) {
            out.push(BlockRoot::gamma(i));
        }
    }
    out.sort();
    Ok(out)
}
