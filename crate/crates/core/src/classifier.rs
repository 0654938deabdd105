//! Assembly of the full module atlas of one level.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functors::{twisted_label, untwisted_label};
use crate::level::LevelParams;
use crate::module_data::{family_omega, twisted_data, LabelKey, ModuleLabel, TopDim};
use crate::rational::Rational;
use crate::smith::{coset_composition, excluded_cosets, FamilyKind};
use crate::weights::{
    canonical_orbit_rep, enumerate_relaxed_support, enumerate_surviving, z3_orbit, AffineWeight,
};

pub const SCHEMA: &str = "bp-atlas/1";

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyMember {
    pub weight: AffineWeight,
    pub j: Rational,
    #[serde(rename = "Delta")]
    pub delta: Rational,
}

/// One relaxed family, keyed by the least weight of its `z3` orbit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyRecord {
    #[serde(rename = "orbitKey")]
    pub orbit_key: AffineWeight,
    #[serde(rename = "Delta")]
    pub delta: Rational,
    pub omega: Rational,
    /// Distinguished cosets, as representatives in `[0, 1)`, ascending.
    pub excluded: [Rational; 3],
    /// Twisted charges of the members, in member order.
    #[serde(rename = "rawCharges")]
    pub raw_charges: [Rational; 3],
    pub members: [FamilyMember; 3],
}

/// A nonsplit extension `0 -> submodule -> R -> quotient -> 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExactSeqRecord {
    pub kind: FamilyKind,
    pub coset: Rational,
    #[serde(rename = "Delta")]
    pub delta: Rational,
    pub omega: Rational,
    pub submodule: LabelKey,
    pub quotient: LabelKey,
    pub source: AffineWeight,
    pub partner: AffineWeight,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Counts {
    #[serde(rename = "untwisted")]
    pub n_untwisted: u64,
    #[serde(rename = "twistedFiniteTop")]
    pub n_twisted_fdim: u64,
    #[serde(rename = "twistedInfiniteTop")]
    pub n_twisted_infdim: u64,
    #[serde(rename = "families")]
    pub n_families: u64,
}

impl Counts {
    pub fn as_tuple(&self) -> (u64, u64, u64, u64) {
        (self.n_untwisted, self.n_twisted_fdim, self.n_twisted_infdim, self.n_families)
    }
}

/// Closed-form module counts.
pub fn counts(p: &LevelParams) -> Counts {
    let (u, v) = (p.u() as u64, p.v() as u64);
    Counts {
        n_untwisted: (u - 1) * (u - 2) * v * (v - 1) / 4,
        n_twisted_fdim: (u - 1) * (u - 2) * (v - 1) / 2,
        n_twisted_infdim: (u - 1) * (u - 2) * (v - 1) * (v - 2) / 4,
        n_families: (u - 1) * (u - 2) * (v - 1) * (v - 2) / 12,
    }
}

/// `mu = [l0, l2 - u/v, l1 + u/v]`, the weight whose twisted module supplies
/// the `(-j-1, Delta)` factor of the nonsemisimple modules through `w`.
pub fn nonss_partner(w: &AffineWeight) -> Result<AffineWeight> {
    w.require_relaxed_support()?;
    let [i0, i1, i2] = w.lambda_i();
    let [f0, f1, f2] = w.lambda_f();
    AffineWeight::new(w.level(), [i0, i2, i1], [f0, f2 + 1, f1 - 1])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atlas {
    pub schema: String,
    pub level: LevelParams,
    #[serde(rename = "categoryOSemisimple")]
    pub category_o_semisimple: bool,
    #[serde(rename = "untwistedHW")]
    pub untwisted_hw: Vec<ModuleLabel>,
    #[serde(rename = "twistedHW")]
    pub twisted_hw: Vec<ModuleLabel>,
    pub families: Vec<FamilyRecord>,
    pub nonsemisimple: Vec<ExactSeqRecord>,
    pub counts: Counts,
}

impl Atlas {
    /// Counts read off the assembled lists.
    pub fn observed_counts(&self) -> Counts {
        let finite = self.twisted_hw.iter().filter(|m| m.top_dim.is_finite()).count() as u64;
        Counts {
            n_untwisted: self.untwisted_hw.len() as u64,
            n_twisted_fdim: finite,
            n_twisted_infdim: self.twisted_hw.len() as u64 - finite,
            n_families: self.families.len() as u64,
        }
    }
}

fn family_record(key: &AffineWeight) -> Result<FamilyRecord> {
    let cosets = excluded_cosets(key)?;
    let omega = family_omega(key)?;
    let members = z3_orbit(key)?.map(|w| {
        let d = twisted_data(&w);
        FamilyMember { weight: w, j: d.j, delta: d.delta }
    });
    let delta = members[0].delta;
    if members.iter().any(|m| m.delta != delta) {
        return Err(Error::InconsistentFamily(format!("{key}: members differ in Delta")));
    }
    Ok(FamilyRecord {
        orbit_key: *key,
        delta,
        omega,
        excluded: cosets.canonical,
        raw_charges: cosets.raw,
        members,
    })
}

fn exact_sequences(w: &AffineWeight) -> Result<[ExactSeqRecord; 2]> {
    let partner = nonss_partner(w)?;
    let d = twisted_data(w);
    let pd = twisted_data(&partner);
    if pd.j != -d.j - 1 || pd.delta != d.delta {
        return Err(Error::InconsistentFamily(format!(
            "{w}: partner {partner} has {pd}, expected ({}, {})",
            -d.j - 1,
            d.delta
        )));
    }
    let omega = family_omega(w)?;
    Ok([FamilyKind::Plus, FamilyKind::Minus].map(|kind| {
        let c = coset_composition(kind, d.j, d.delta);
        ExactSeqRecord {
            kind,
            coset: d.j,
            delta: d.delta,
            omega,
            submodule: c.submodule,
            quotient: c.quotient,
            source: *w,
            partner,
        }
    }))
}

pub fn build_atlas(p: &LevelParams) -> Result<Atlas> {
    let surviving = enumerate_surviving(p);
    let relaxed = enumerate_relaxed_support(p);

    let untwisted_hw: Vec<ModuleLabel> = surviving.par_iter().map(untwisted_label).collect();
    let twisted_hw: Vec<ModuleLabel> = surviving.par_iter().map(twisted_label).collect();

    let keys: Vec<AffineWeight> = relaxed
        .iter()
        .filter(|w| canonical_orbit_rep(w).map(|k| k == **w).unwrap_or(false))
        .copied()
        .collect();
    let families: Vec<FamilyRecord> =
        keys.par_iter().map(family_record).collect::<Result<_>>()?;

    let nonsemisimple: Vec<ExactSeqRecord> = relaxed
        .par_iter()
        .map(exact_sequences)
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();

    debug_assert!(twisted_hw
        .iter()
        .all(|m| (m.top_dim == TopDim::Infinite) == m.source.in_relaxed_support()));

    Ok(Atlas {
        schema: SCHEMA.to_string(),
        level: *p,
        category_o_semisimple: true,
        untwisted_hw,
        twisted_hw,
        families,
        nonsemisimple,
        counts: counts(p),
    })
}
