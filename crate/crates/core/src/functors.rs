//! Conjugation and spectral flow, acting on `(j, Delta)` pairs, on surviving
//! weights and on module labels.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::level::LevelParams;
use crate::module_data::{
    top_space_dim, twisted_data, untwisted_data, ChargeWeight, ModuleClass, ModuleLabel, Sector,
    TopDim,
};
use crate::rational::Rational;
use crate::smith::{DenseLabel, SmithScalars};
use crate::weights::AffineWeight;

/// A spectral flow parameter `ell = twice_ell / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FlowAmount {
    twice_ell: i64,
}

impl FlowAmount {
    pub fn from_twice(twice_ell: i64) -> Self {
        FlowAmount { twice_ell }
    }

    pub fn integer(ell: i64) -> Self {
        FlowAmount { twice_ell: 2 * ell }
    }

    pub const HALF: FlowAmount = FlowAmount { twice_ell: 1 };

    pub fn twice_ell(&self) -> i64 {
        self.twice_ell
    }

    pub fn ell(&self) -> Rational {
        Rational::new(self.twice_ell as i128, 2)
    }

    pub fn is_integral(&self) -> bool {
        self.twice_ell % 2 == 0
    }

    /// `floor(ell)`.
    pub fn floor(&self) -> i64 {
        self.twice_ell.div_euclid(2)
    }

    pub fn sector(&self) -> Sector {
        if self.is_integral() {
            Sector::Untwisted
        } else {
            Sector::Twisted
        }
    }
}

impl fmt::Display for FlowAmount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.ell())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0:?} is not a half-integer")]
pub struct ParseFlowError(pub String);

impl FromStr for FlowAmount {
    type Err = ParseFlowError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let x: Rational = s.parse().map_err(|_| ParseFlowError(s.to_string()))?;
        (x * 2)
            .to_integer()
            .and_then(|t| i64::try_from(t).ok())
            .map(FlowAmount::from_twice)
            .ok_or_else(|| ParseFlowError(s.to_string()))
    }
}

impl Serialize for FlowAmount {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FlowAmount {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(j, Delta) -> (j + (2k+3) ell/3, Delta + j ell + (2k+3) ell^2/6)`.
pub fn sf_weight(cw: ChargeWeight, ell: FlowAmount, p: &LevelParams) -> ChargeWeight {
    let t = p.twice_k_plus_3();
    let l = ell.ell();
    ChargeWeight::new(cw.j + t * l / 3, cw.delta + cw.j * l + t * l * l / 6)
}

pub fn conj_weight(cw: ChargeWeight) -> ChargeWeight {
    ChargeWeight::new(-cw.j, cw.delta)
}

/// Swaps the first and second labels.
pub fn conj_untwisted(w: &AffineWeight) -> AffineWeight {
    let [i0, i1, i2] = w.lambda_i();
    let [f0, f1, f2] = w.lambda_f();
    AffineWeight::new(w.level(), [i0, i2, i1], [f0, f2, f1]).expect("swap preserves survival")
}

/// The weight of the conjugate of the twisted module, when that conjugate is
/// again highest-weight (`lambdaF_1 = 0`).
pub fn conj_twisted(w: &AffineWeight) -> Option<AffineWeight> {
    let [i0, i1, i2] = w.lambda_i();
    let [f0, f1, f2] = w.lambda_f();
    (f1 == 0).then(|| {
        AffineWeight::new(w.level(), [i2, i1, i0], [f2 + 1, 0, f0 - 1]).expect("surviving image")
    })
}

/// The weight of the unit spectral flow of the untwisted module, when that
/// flow is highest-weight (`lambdaF_1 = 0`).
pub fn sf_untwisted(w: &AffineWeight) -> Option<AffineWeight> {
    let [i0, i1, i2] = w.lambda_i();
    let [f0, f1, f2] = w.lambda_f();
    (f1 == 0).then(|| {
        AffineWeight::new(w.level(), [i2, i0, i1], [f2 + 1, f0 - 1, 0]).expect("surviving image")
    })
}

/// The weight of the inverse unit flow, when highest-weight (`lambdaF_2 = 0`).
pub fn sf_untwisted_inverse(w: &AffineWeight) -> Option<AffineWeight> {
    let [i0, i1, i2] = w.lambda_i();
    let [f0, f1, f2] = w.lambda_f();
    (f2 == 0).then(|| {
        AffineWeight::new(w.level(), [i1, i2, i0], [f1 + 1, 0, f0 - 1]).expect("surviving image")
    })
}

/// `([j], Delta, omega) -> ([-j], Delta, -omega)`.
pub fn conj_relaxed(label: &DenseLabel) -> DenseLabel {
    DenseLabel::new(-label.coset_rep(), label.delta, -label.omega)
}

pub fn untwisted_label(w: &AffineWeight) -> ModuleLabel {
    let d = untwisted_data(w);
    ModuleLabel {
        sector: Sector::Untwisted,
        class: ModuleClass::HighestWeight,
        j: d.j,
        delta: d.delta,
        omega: None,
        top_dim: TopDim::Finite(1),
        source: *w,
    }
}

pub fn twisted_label(w: &AffineWeight) -> ModuleLabel {
    let d = twisted_data(w);
    ModuleLabel {
        sector: Sector::Twisted,
        class: ModuleClass::HighestWeight,
        j: d.j,
        delta: d.delta,
        omega: Some(SmithScalars::new(w.level()).omega_plus(d.j, d.delta)),
        top_dim: top_space_dim(w),
        source: *w,
    }
}

/// The conjugate of the twisted highest-weight module of `w`. Its `(j, Delta)`
/// are those of the underlying highest-weight module; `omega` is the Casimir
/// eigenvalue on the conjugate, `-omega^+`.
pub fn conjugate_twisted_label(w: &AffineWeight) -> ModuleLabel {
    let mut label = twisted_label(w);
    label.class = ModuleClass::ConjugateHighestWeight;
    label.omega = label.omega.map(|x| -x);
    label
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum OrbitStatus {
    Hw,
    Relaxed,
    NonRelaxed,
}

impl OrbitStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            OrbitStatus::Hw => "hw",
            OrbitStatus::Relaxed => "relaxed",
            OrbitStatus::NonRelaxed => "nonRelaxed",
        }
    }
}

/// The image of the original top vector under a flow that leaves the
/// lower-bounded world.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnboundedData {
    pub j: Rational,
    #[serde(rename = "Delta")]
    pub delta: Rational,
    #[serde(rename = "lowerBounded")]
    pub lower_bounded: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OrbitLabel {
    Module(ModuleLabel),
    Unbounded(UnboundedData),
}

impl OrbitLabel {
    pub fn charge_weight(&self) -> ChargeWeight {
        match self {
            OrbitLabel::Module(m) => m.charge_weight(),
            OrbitLabel::Unbounded(d) => ChargeWeight::new(d.j, d.delta),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrbitEntry {
    pub ell: FlowAmount,
    pub sector: Sector,
    pub status: OrbitStatus,
    pub label: OrbitLabel,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct OrbitTable {
    pub entries: Vec<OrbitEntry>,
}

impl OrbitTable {
    pub fn get(&self, ell: FlowAmount) -> Option<&OrbitEntry> {
        self.entries.iter().find(|e| e.ell == ell)
    }
}

/// The surviving weights `mu_n` with `sigma^n(H(w)) = H(mu_n)`, for every `n` in
/// `lo..=hi` at which the flow is highest-weight. Outside the contiguous run
/// around `0` the flows are not highest-weight.
pub fn untwisted_chain(w: &AffineWeight, lo: i64, hi: i64) -> BTreeMap<i64, AffineWeight> {
    let mut chain = BTreeMap::from([(0, *w)]);
    let mut cur = Some(*w);
    for n in 1..=hi.max(0) {
        cur = cur.and_then(|x| sf_untwisted(&x));
        match cur {
            Some(x) => chain.insert(n, x),
            None => break,
        };
    }
    let mut cur = Some(*w);
    for n in (lo.min(0)..0).rev() {
        cur = cur.and_then(|x| sf_untwisted_inverse(&x));
        match cur {
            Some(x) => chain.insert(n, x),
            None => break,
        };
    }
    chain.retain(|n, _| (lo..=hi).contains(n));
    chain
}

/// Spectral flows `sigma^ell(H(w))` for `ell = lo, lo + 1/2, ..., hi`.
///
/// At integer `n` the flow is untwisted and highest-weight exactly when the
/// chain of unit flows reaches it. At `n + 1/2` it is the twisted module of
/// `mu_n` when `mu_n` exists; failing that, if `mu_{n+1}` exists it is
/// `sigma^{-1/2}(H(mu_{n+1}))`, the conjugate of a twisted highest-weight
/// module; otherwise it is not even relaxed.
pub fn sf_orbit(w: &AffineWeight, lo: FlowAmount, hi: FlowAmount) -> OrbitTable {
    if lo > hi {
        return OrbitTable::default();
    }
    let p = w.level();
    let chain = untwisted_chain(w, lo.floor(), hi.floor() + 1);
    let base = untwisted_data(w);
    let entries = (lo.twice_ell()..=hi.twice_ell())
        .map(|t| {
            let ell = FlowAmount::from_twice(t);
            let n = ell.floor();
            let (status, label) = if ell.is_integral() {
                match chain.get(&n) {
                    Some(mu) => (OrbitStatus::Hw, OrbitLabel::Module(untwisted_label(mu))),
                    None => (OrbitStatus::NonRelaxed, unbounded(sf_weight(base, ell, &p))),
                }
            } else if let Some(mu) = chain.get(&n) {
                (OrbitStatus::Hw, OrbitLabel::Module(twisted_label(mu)))
            } else if let Some(mu) = chain.get(&(n + 1)) {
                let conj = conjugate_twisted_label(&conj_untwisted(mu));
                debug_assert_eq!(conj.top_dim, TopDim::Infinite);
                (OrbitStatus::Relaxed, OrbitLabel::Module(conj))
            } else {
                (OrbitStatus::NonRelaxed, unbounded(sf_weight(base, ell, &p)))
            };
            OrbitEntry { ell, sector: ell.sector(), status, label }
        })
        .collect();
    OrbitTable { entries }
}

fn unbounded(cw: ChargeWeight) -> OrbitLabel {
    OrbitLabel::Unbounded(UnboundedData { j: cw.j, delta: cw.delta, lower_bounded: false })
}

/// Checks an orbit table against the flow of `(j, Delta)` pairs.
///
/// Highest-weight vectors are not carried to highest-weight vectors by the
/// flow, so the check follows the chain: a twisted entry at `n + 1/2` is the
/// half flow of the untwisted entry at `n`; an untwisted entry at `n + 1` is the
/// half flow of the lowest top vector `(j - N + 1, Delta)` of the twisted entry
/// before it; a relaxed entry is the conjugate of the inverse half flow of the
/// untwisted entry after it; non-relaxed entries are flows of the original top.
pub fn check_orbit(w: &AffineWeight, table: &OrbitTable) -> Result<(), String> {
    let p = w.level();
    let base = untwisted_data(w);
    let half = FlowAmount::HALF;
    let minus_half = FlowAmount::from_twice(-1);
    let at = |ell: FlowAmount| table.get(ell);
    for e in &table.entries {
        let got = e.label.charge_weight();
        let expected = match e.status {
            OrbitStatus::NonRelaxed => Some(sf_weight(base, e.ell, &p)),
            OrbitStatus::Hw if !e.ell.is_integral() => {
                at(FlowAmount::from_twice(e.ell.twice_ell() - 1))
                    .filter(|prev| prev.status == OrbitStatus::Hw)
                    .map(|prev| sf_weight(prev.label.charge_weight(), half, &p))
            }
            OrbitStatus::Hw => match at(FlowAmount::from_twice(e.ell.twice_ell() - 1)) {
                Some(prev) if prev.status == OrbitStatus::Hw => match &prev.label {
                    OrbitLabel::Module(m) => match m.top_dim {
                        TopDim::Finite(n) => Some(sf_weight(
                            ChargeWeight::new(m.j - Rational::from(n - 1), m.delta),
                            half,
                            &p,
                        )),
                        TopDim::Infinite => {
                            return Err(format!("ell = {}: follows an infinite top", e.ell))
                        }
                    },
                    OrbitLabel::Unbounded(_) => None,
                },
                _ => None,
            },
            OrbitStatus::Relaxed => at(FlowAmount::from_twice(e.ell.twice_ell() + 1))
                .filter(|next| next.status == OrbitStatus::Hw)
                .map(|next| conj_weight(sf_weight(next.label.charge_weight(), minus_half, &p))),
        };
        if let Some(expected) = expected {
            if expected != got {
                return Err(format!("ell = {}: label {got} but flow gives {expected}", e.ell));
            }
        }
        if e.ell.twice_ell() == 0 && got != base {
            return Err(format!("ell = 0: label {got} is not the original {base}"));
        }
    }
    Ok(())
}
