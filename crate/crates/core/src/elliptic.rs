//! Ellipticity of the constituents of `i_{G,M}(sigma)`.
//!
//! The groups here are semisimple, so `a_G = z = 0` and the fixed-space
//! criterion asks for some `w in R` acting on `a_M` without fixed vectors.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::groupdata::{GroupDatum, LeviDatum};
use crate::repdatum::SigmaDatum;
use crate::rgroup::{closed_form, RGroupResult};
use crate::weylgroup::{fixed_space_dim, WeylElement};

/// Dimension of the split center of the ambient group.
const SPLIT_CENTER_DIM: usize = 0;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticReport {
    pub elliptic: bool,
    pub witness: Option<WeylElement>,
    /// `None` when the closed-form criterion needs an undefined `d2`.
    pub herb_elliptic: Option<bool>,
    pub component_count: usize,
    pub commuting_dim: usize,
    pub multiplicity: usize,
    pub d2: Option<usize>,
}

impl EllipticReport {
    /// Whether the two criteria agree (vacuously when Herb's does not apply).
    pub fn consistent(&self) -> bool {
        self.herb_elliptic.is_none_or(|h| h == self.elliptic)
    }

    pub fn to_json(&self, r: &RGroupResult) -> Value {
        json!({
            "elliptic": self.elliptic,
            "witness": self.witness.as_ref().map(|w| r.context.label(w)),
            "herb_elliptic": match self.herb_elliptic {
                Some(b) => json!(b),
                None => json!("not-applicable"),
            },
            "component_count": self.component_count,
            "commuting_dim": self.commuting_dim,
            "multiplicity": self.multiplicity,
            "d2": self.d2,
        })
    }
}

/// Some `w in R` with `a_w = z`; the first such element in canonical order.
pub fn arthur_elliptic(r: &RGroupResult) -> (bool, Option<WeylElement>) {
    let witness = r
        .r_group
        .iter()
        .find(|w| fixed_space_dim(w) == SPLIT_CENTER_DIM)
        .cloned();
    (witness.is_some(), witness)
}

/// `d2` for even orthogonal groups: inequivalent self-dual classes on odd
/// blocks not absorbed by `c0`. Undefined when `m <= 1` and `c0 tau ~ tau`.
pub fn d2(group: &GroupDatum, levi: &LeviDatum, s: &SigmaDatum) -> Result<Option<usize>> {
    if !group.family.is_even_orthogonal() || (levi.m <= 1 && s.fixes_tau()) {
        return Ok(None);
    }
    Ok(Some(closed_form(group, levi, s)?.d2))
}

/// `R ~ Z_2^k`, or for even orthogonal groups `R ~ Z_2^{k-1}` with `d2`
/// positive and even.
pub fn herb_criterion(
    group: &GroupDatum,
    levi: &LeviDatum,
    s: &SigmaDatum,
    r: &RGroupResult,
) -> Result<bool> {
    let k = levi.k();
    if r.iso_exponent == k {
        return Ok(true);
    }
    if !group.family.is_even_orthogonal() || r.iso_exponent + 1 != k {
        return Ok(false);
    }
    match d2(group, levi, s)? {
        Some(d) => Ok(d > 0 && d % 2 == 0),
        None => Err(Error::D2Undefined),
    }
}

/// `(constituents, dim C(sigma), multiplicity)`; the cocycle is trivial so
/// all three come from `|R|`.
pub fn components(r: &RGroupResult) -> (usize, usize, usize) {
    (r.r_group.len(), r.r_group.len(), 1)
}

pub fn elliptic_report(
    group: &GroupDatum,
    levi: &LeviDatum,
    s: &SigmaDatum,
    r: &RGroupResult,
) -> Result<EllipticReport> {
    let (elliptic, witness) = arthur_elliptic(r);
    let herb_elliptic = match herb_criterion(group, levi, s, r) {
        Ok(b) => Some(b),
        Err(Error::D2Undefined) => None,
        Err(e) => return Err(e),
    };
    let (component_count, commuting_dim, multiplicity) = components(r);
    Ok(EllipticReport {
        elliptic,
        witness,
        herb_elliptic,
        component_count,
        commuting_dim,
        multiplicity,
        d2: d2(group, levi, s)?,
    })
}
