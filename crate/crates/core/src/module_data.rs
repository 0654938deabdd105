//! Charges, conformal weights and top-space dimensions of the simple modules
//! attached to surviving weights, and the inverse map back to weights.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::level::LevelParams;
use crate::rational::Rational;
use crate::weights::AffineWeight;

/// Eigenvalues `(j, Delta)` of `J_0` and `L_0` on a distinguished vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ChargeWeight {
    pub j: Rational,
    #[serde(rename = "Delta")]
    pub delta: Rational,
}

impl ChargeWeight {
    pub fn new(j: Rational, delta: Rational) -> Self {
        ChargeWeight { j, delta }
    }
}

impl fmt::Display for ChargeWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.j, self.delta)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sector {
    Untwisted,
    Twisted,
}

impl Sector {
    pub fn as_str(&self) -> &'static str {
        match self {
            Sector::Untwisted => "untwisted",
            Sector::Twisted => "twisted",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ModuleClass {
    HighestWeight,
    ConjugateHighestWeight,
    RelaxedSimple,
    RelaxedPlus,
    RelaxedMinus,
}

impl ModuleClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            ModuleClass::HighestWeight => "highestWeight",
            ModuleClass::ConjugateHighestWeight => "conjugateHighestWeight",
            ModuleClass::RelaxedSimple => "relaxedSimple",
            ModuleClass::RelaxedPlus => "relaxedPlus",
            ModuleClass::RelaxedMinus => "relaxedMinus",
        }
    }
}

/// Dimension of a top space. Serialized as a number or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TopDim {
    Finite(u32),
    Infinite,
}

impl TopDim {
    pub fn is_finite(&self) -> bool {
        matches!(self, TopDim::Finite(_))
    }
}

impl fmt::Display for TopDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TopDim::Finite(n) => write!(f, "{n}"),
            TopDim::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for TopDim {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TopDim::Finite(n) => serializer.serialize_u32(*n),
            TopDim::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for TopDim {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(u32),
            S(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::N(n) => Ok(TopDim::Finite(n)),
            Raw::S(s) if s == "inf" => Ok(TopDim::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad topDim {s:?}"))),
        }
    }
}

/// A classified simple module.
///
/// Conjugate highest-weight modules carry the `(j, Delta)` of the highest-weight
/// module they are conjugate to. Relaxed classes carry a coset representative
/// in `j` and the canonical orbit weight as `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModuleLabel {
    pub sector: Sector,
    #[serde(rename = "class")]
    pub class: ModuleClass,
    pub j: Rational,
    #[serde(rename = "Delta")]
    pub delta: Rational,
    pub omega: Option<Rational>,
    #[serde(rename = "topDim")]
    pub top_dim: TopDim,
    pub source: AffineWeight,
}

impl ModuleLabel {
    pub fn charge_weight(&self) -> ChargeWeight {
        ChargeWeight::new(self.j, self.delta)
    }

    pub fn key(&self) -> LabelKey {
        LabelKey { sector: self.sector, class: self.class, j: self.j, delta: self.delta }
    }
}

/// The `(sector, class, j, Delta)` identity of a module label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LabelKey {
    pub sector: Sector,
    #[serde(rename = "class")]
    pub class: ModuleClass,
    pub j: Rational,
    #[serde(rename = "Delta")]
    pub delta: Rational,
}

impl fmt::Display for LabelKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match (self.sector, self.class) {
            (Sector::Untwisted, ModuleClass::HighestWeight) => "H",
            (Sector::Twisted, ModuleClass::HighestWeight) => "tw H",
            (Sector::Untwisted, ModuleClass::ConjugateHighestWeight) => "conj H",
            (Sector::Twisted, ModuleClass::ConjugateHighestWeight) => "conj tw H",
            (_, ModuleClass::RelaxedSimple) => "R",
            (_, ModuleClass::RelaxedPlus) => "R+",
            (_, ModuleClass::RelaxedMinus) => "R-",
        };
        write!(f, "{prefix}({}, {})", self.j, self.delta)
    }
}

/// Highest-weight data of the untwisted module:
/// `j = (l1 - l2)/3`, `Delta = [(l1 - l2)^2 - 3(l1 + l2)(2(k+1) - l1 - l2)] / (12(k+3))`.
pub fn untwisted_data(w: &AffineWeight) -> ChargeWeight {
    let p = w.level();
    let [_, l1, l2] = w.labels();
    let diff = l1 - l2;
    let sum = l1 + l2;
    let j = diff / 3;
    let delta = (diff * diff - sum * 3 * ((p.k() + 1) * 2 - sum)) / (p.shifted() * 12);
    ChargeWeight::new(j, delta)
}

/// Highest-weight data of the twisted module, the untwisted data shifted by
/// `j += (2k+3)/6`, `Delta += (l1 - l2)/6 + (2k+3)/24`.
pub fn twisted_data(w: &AffineWeight) -> ChargeWeight {
    let t = w.level().twice_k_plus_3();
    let [_, l1, l2] = w.labels();
    let base = untwisted_data(w);
    ChargeWeight::new(base.j + t / 6, base.delta + (l1 - l2) / 6 + t / 24)
}

/// Casimir eigenvalue of the relaxed family through `w`:
/// `-(2/27)(l1 - l2 + k + 3)(2 l1 + l2 - k)(l1 + 2 l2 - 2k - 3)`.
pub fn family_omega(w: &AffineWeight) -> Result<Rational> {
    w.require_relaxed_support()?;
    Ok(omega_of_labels(w))
}

pub(crate) fn omega_of_labels(w: &AffineWeight) -> Rational {
    let k = w.level().k();
    let [_, l1, l2] = w.labels();
    let a = l1 - l2 + k + 3;
    let b = l1 * 2 + l2 - k;
    let c = l1 + l2 * 2 - k * 2 - 3;
    Rational::new(-2, 27) * a * b * c
}

/// `lambdaI_1 + 1` when `lambdaF_1 = 0`, infinite otherwise.
pub fn top_space_dim(w: &AffineWeight) -> TopDim {
    if w.lambda_f()[1] == 0 {
        TopDim::Finite(w.lambda_i()[1] + 1)
    } else {
        TopDim::Infinite
    }
}

/// The surviving weight whose untwisted module has highest weight `(j, Delta)`.
///
/// With `l1 - l2 = 3j` the zeroth label solves a quadratic whose two roots are
/// `-1 +- sqrt(4(k+3)Delta + (k+1)^2 - 3j^2)`; at most one of them is surviving.
pub fn solve_weight(j: Rational, delta: Rational, p: &LevelParams) -> Result<AffineWeight> {
    let k = p.k();
    let disc = p.shifted() * delta * 4 + (k + 1) * (k + 1) - j * j * 3;
    let root = disc.sqrt().ok_or(Error::NonSquareDiscriminant(disc))?;
    for l0 in [-Rational::ONE + root, -Rational::ONE - root] {
        let l1 = (k - l0 + j * 3) / 2;
        let l2 = (k - l0 - j * 3) / 2;
        if let Some(w) = weight_from_labels(p, [l0, l1, l2]) {
            return Ok(w);
        }
    }
    Err(Error::NoSurvivingSolution { j, delta })
}

/// Splits each label as `a - (u/v) b` with `0 <= b < v` and checks survival.
pub fn weight_from_labels(p: &LevelParams, labels: [Rational; 3]) -> Option<AffineWeight> {
    let (u, v) = (p.u() as i128, p.v() as i128);
    let mut lambda_i = [0u32; 3];
    let mut lambda_f = [0u32; 3];
    for (i, x) in labels.iter().enumerate() {
        let scaled = (*x * v).to_integer()?;
        let b = (0..v).find(|b| (scaled + u * b) % v == 0)?;
        let a = (scaled + u * b) / v;
        lambda_i[i] = u32::try_from(a).ok()?;
        lambda_f[i] = b as u32;
    }
    AffineWeight::new(*p, lambda_i, lambda_f).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level::make_level;
    use crate::rational::q;
    use crate::weights::enumerate_surviving;

    fn wt(u: i64, v: i64, i: [u32; 3], f: [u32; 3]) -> AffineWeight {
        AffineWeight::new(make_level(u, v).unwrap(), i, f).unwrap()
    }

    fn cw(j: Rational, d: Rational) -> ChargeWeight {
        ChargeWeight::new(j, d)
    }

    #[test]
    fn untwisted_examples() {
        let vac = AffineWeight::vacuum(make_level(5, 2).unwrap());
        assert_eq!(untwisted_data(&vac), cw(q(0, 1), q(0, 1)));
        assert_eq!(untwisted_data(&wt(5, 2, [0, 2, 0], [1, 0, 0])), cw(q(2, 3), q(1, 3)));
        assert_eq!(untwisted_data(&wt(3, 4, [0, 0, 0], [2, 1, 0])), cw(q(-1, 4), q(-3, 8)));
    }

    #[test]
    fn twisted_examples() {
        let vac = AffineWeight::vacuum(make_level(5, 2).unwrap());
        assert_eq!(twisted_data(&vac), cw(q(1, 3), q(1, 12)));
        let vac = AffineWeight::vacuum(make_level(3, 4).unwrap());
        assert_eq!(twisted_data(&vac), cw(q(-1, 4), q(-1, 16)));
        assert_eq!(twisted_data(&wt(4, 3, [1, 0, 0], [1, 1, 0])), cw(q(-1, 2), q(-1, 8)));
    }

    #[test]
    fn omega_examples() {
        assert_eq!(family_omega(&wt(3, 4, [0, 0, 0], [1, 1, 1])).unwrap(), q(0, 1));
        assert_eq!(family_omega(&wt(5, 3, [2, 0, 0], [1, 1, 0])).unwrap(), q(0, 1));
        let vac = AffineWeight::vacuum(make_level(3, 4).unwrap());
        assert_eq!(family_omega(&vac).unwrap_err().name(), "NotRelaxedSupport");
    }

    #[test]
    fn top_dims() {
        assert_eq!(top_space_dim(&wt(5, 2, [0, 2, 0], [1, 0, 0])), TopDim::Finite(3));
        assert_eq!(top_space_dim(&wt(3, 4, [0, 0, 0], [1, 1, 1])), TopDim::Infinite);
        assert_eq!(top_space_dim(&AffineWeight::vacuum(make_level(7, 5).unwrap())), TopDim::Finite(1));
    }

    #[test]
    fn solve_examples() {
        let p = make_level(5, 2).unwrap();
        let w = solve_weight(q(2, 3), q(1, 3), &p).unwrap();
        assert_eq!((w.lambda_i(), w.lambda_f()), ([0, 2, 0], [1, 0, 0]));
        assert_eq!(solve_weight(q(0, 1), q(0, 1), &p).unwrap(), AffineWeight::vacuum(p));
        assert_eq!(solve_weight(q(0, 1), q(1, 7), &p).unwrap_err().name(), "NonSquareDiscriminant");
    }

    #[test]
    fn solve_inverts_untwisted_data() {
        for (u, v) in [(3, 2), (5, 2), (3, 4), (4, 3), (5, 3), (7, 4), (8, 5)] {
            for w in enumerate_surviving(&make_level(u, v).unwrap()) {
                let d = untwisted_data(&w);
                assert_eq!(solve_weight(d.j, d.delta, &w.level()).unwrap(), w);
            }
        }
    }

    #[test]
    fn top_dim_json() {
        assert_eq!(serde_json::to_string(&TopDim::Finite(3)).unwrap(), "3");
        assert_eq!(serde_json::to_string(&TopDim::Infinite).unwrap(), "\"inf\"");
        assert_eq!(serde_json::from_str::<TopDim>("\"inf\"").unwrap(), TopDim::Infinite);
        assert_eq!(serde_json::from_str::<TopDim>("2").unwrap(), TopDim::Finite(2));
        assert!(serde_json::from_str::<TopDim>("\"many\"").is_err());
    }
}
