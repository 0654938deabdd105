//! Admissible `sl3`-hat weights at level `k = -3 + u/v`.
//!
//! A (`w = 1`) admissible weight is `lambda = lambdaI - (u/v) lambdaF` with
//! `lambdaI` dominant integral of level `u - 3` and `lambdaF` dominant integral
//! of level `v - 1`. It survives reduction exactly when `lambdaF_0 >= 1`, and it
//! belongs to the relaxed support when in addition `lambdaF_1 >= 1`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::level::{make_level, LevelParams};
use crate::rational::Rational;

/// Three Dynkin labels `[a0, a1, a2]`.
pub type DynkinTriple = [Rational; 3];

/// A triple of natural numbers, used for both `lambdaI` and `lambdaF`.
pub type NatTriple = [u32; 3];

/// All natural triples summing to `ell`, in lexicographic order.
pub fn enumerate_dominant(ell: u32) -> Vec<NatTriple> {
    let mut out = Vec::with_capacity(((ell + 1) * (ell + 2) / 2) as usize);
    for a in 0..=ell {
        for b in 0..=ell - a {
            out.push([a, b, ell - a - b]);
        }
    }
    out
}

/// A surviving admissible weight.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "RawWeight", try_from = "RawWeight")]
pub struct AffineWeight {
    lambda_i: NatTriple,
    lambda_f: NatTriple,
    level: LevelParams,
}

impl AffineWeight {
    /// Builds a weight, rejecting anything that is not a surviving admissible
    /// weight of the given level.
    pub fn new(level: LevelParams, lambda_i: NatTriple, lambda_f: NatTriple) -> Result<Self> {
        let sum_i: i64 = lambda_i.iter().map(|&x| x as i64).sum();
        let sum_f: i64 = lambda_f.iter().map(|&x| x as i64).sum();
        if sum_i != level.u() - 3 {
            return Err(Error::NotSurviving(format!(
                "lambdaI = {lambda_i:?} sums to {sum_i}, expected u - 3 = {}",
                level.u() - 3
            )));
        }
        if sum_f != level.v() - 1 {
            return Err(Error::NotSurviving(format!(
                "lambdaF = {lambda_f:?} sums to {sum_f}, expected v - 1 = {}",
                level.v() - 1
            )));
        }
        if lambda_f[0] == 0 {
            return Err(Error::NotSurviving(format!(
                "lambdaF = {lambda_f:?} has lambdaF_0 = 0"
            )));
        }
        Ok(AffineWeight { lambda_i, lambda_f, level })
    }

    /// The vacuum weight `[k, 0, 0]`.
    pub fn vacuum(level: LevelParams) -> Self {
        AffineWeight {
            lambda_i: [(level.u() - 3) as u32, 0, 0],
            lambda_f: [(level.v() - 1) as u32, 0, 0],
            level,
        }
    }

    pub fn lambda_i(&self) -> NatTriple {
        self.lambda_i
    }

    pub fn lambda_f(&self) -> NatTriple {
        self.lambda_f
    }

    pub fn level(&self) -> LevelParams {
        self.level
    }

    /// `lambda_i = lambdaI_i - (u/v) lambdaF_i`.
    pub fn labels(&self) -> DynkinTriple {
        let ratio = self.level.shifted();
        std::array::from_fn(|i| {
            Rational::from(self.lambda_i[i]) - ratio * Rational::from(self.lambda_f[i])
        })
    }

    pub fn in_relaxed_support(&self) -> bool {
        self.lambda_f[1] >= 1
    }

    /// Fails with `NotRelaxedSupport` unless `lambdaF_1 >= 1`.
    pub fn require_relaxed_support(&self) -> Result<()> {
        if self.in_relaxed_support() {
            Ok(())
        } else {
            Err(Error::NotRelaxedSupport(self.to_string()))
        }
    }

    /// Unchecked construction for maps already proven to preserve survival.
    fn with(&self, lambda_i: NatTriple, lambda_f: NatTriple) -> Self {
        let w = AffineWeight { lambda_i, lambda_f, level: self.level };
        debug_assert!(AffineWeight::new(self.level, lambda_i, lambda_f).is_ok());
        w
    }
}

impl Ord for AffineWeight {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.lambda_i, self.lambda_f, self.level.u(), self.level.v()).cmp(&(
            other.lambda_i,
            other.lambda_f,
            other.level.u(),
            other.level.v(),
        ))
    }
}

impl PartialOrd for AffineWeight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.lambda_i;
        let [d, e, g] = self.lambda_f;
        write!(f, "[{a},{b},{c}] - u/v [{d},{e},{g}]")
    }
}

impl fmt::Debug for AffineWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineWeight({self} @ ({}, {}))", self.level.u(), self.level.v())
    }
}

#[derive(Serialize, Deserialize)]
struct RawWeight {
    #[serde(rename = "lambdaI")]
    lambda_i: NatTriple,
    #[serde(rename = "lambdaF")]
    lambda_f: NatTriple,
    labels: DynkinTriple,
}

impl From<AffineWeight> for RawWeight {
    fn from(w: AffineWeight) -> Self {
        RawWeight { lambda_i: w.lambda_i, lambda_f: w.lambda_f, labels: w.labels() }
    }
}

impl TryFrom<RawWeight> for AffineWeight {
    type Error = String;

    /// The level is not serialized with the weight; it is recovered from any
    /// label with a nonzero fractional part, `u/v = (lambdaI_i - lambda_i) / lambdaF_i`.
    fn try_from(raw: RawWeight) -> std::result::Result<Self, Self::Error> {
        let i = (0..3)
            .find(|&i| raw.lambda_f[i] > 0)
            .ok_or_else(|| "lambdaF is identically zero".to_string())?;
        let ratio = (Rational::from(raw.lambda_i[i]) - raw.labels[i]) / Rational::from(raw.lambda_f[i]);
        let level =
            make_level(ratio.numer() as i64, ratio.denom() as i64).map_err(|e| e.to_string())?;
        let w = AffineWeight::new(level, raw.lambda_i, raw.lambda_f).map_err(|e| e.to_string())?;
        if w.labels() != raw.labels {
            return Err(format!("labels {:?} do not match {w}", raw.labels));
        }
        Ok(w)
    }
}

/// The surviving weights, lexicographic in `(lambdaI, lambdaF)`.
pub fn enumerate_surviving(p: &LevelParams) -> Vec<AffineWeight> {
    let ints = enumerate_dominant((p.u() - 3) as u32);
    let fracs: Vec<NatTriple> = enumerate_dominant((p.v() - 1) as u32)
        .into_iter()
        .filter(|f| f[0] >= 1)
        .collect();
    let mut out = Vec::with_capacity(ints.len() * fracs.len());
    for &lambda_i in &ints {
        for &lambda_f in &fracs {
            out.push(AffineWeight { lambda_i, lambda_f, level: *p });
        }
    }
    out
}

/// The surviving weights with `lambdaF_1 >= 1`, in the same order.
pub fn enumerate_relaxed_support(p: &LevelParams) -> Vec<AffineWeight> {
    enumerate_surviving(p)
        .into_iter()
        .filter(AffineWeight::in_relaxed_support)
        .collect()
}

/// The order-three symmetry of the relaxed support:
/// `lambdaI -> [I2, I0, I1]`, `lambdaF -> [F2 + 1, F0, F1 - 1]`.
/// On Dynkin labels this is `[l0, l1, l2] -> [l2 - u/v, l0, l1 + u/v]`.
pub fn z3_act(w: &AffineWeight) -> Result<AffineWeight> {
    w.require_relaxed_support()?;
    let [i0, i1, i2] = w.lambda_i;
    let [f0, f1, f2] = w.lambda_f;
    Ok(w.with([i2, i0, i1], [f2 + 1, f0, f1 - 1]))
}

/// The involution `lambdaI -> [I2, I1, I0]`, `lambdaF -> [F2 + 1, F1, F0 - 1]`,
/// which fixes `Delta` and negates `omega`.
pub fn z2_act(w: &AffineWeight) -> Result<AffineWeight> {
    w.require_relaxed_support()?;
    let [i0, i1, i2] = w.lambda_i;
    let [f0, f1, f2] = w.lambda_f;
    if f0 == 0 {
        return Err(Error::NotRelaxedSupport(w.to_string()));
    }
    Ok(w.with([i2, i1, i0], [f2 + 1, f1, f0 - 1]))
}

/// The `z3_act` orbit `[w, z3(w), z3^2(w)]`.
pub fn z3_orbit(w: &AffineWeight) -> Result<[AffineWeight; 3]> {
    let a = z3_act(w)?;
    let b = z3_act(&a)?;
    Ok([*w, a, b])
}

/// The closure of `{w}` under `z3_act` and `z2_act`, sorted.
pub fn s3_orbit(w: &AffineWeight) -> Result<Vec<AffineWeight>> {
    let mut seen = BTreeSet::from([*w]);
    let mut frontier = vec![*w];
    while let Some(x) = frontier.pop() {
        for y in [z3_act(&x)?, z2_act(&x)?] {
            if seen.insert(y) {
                frontier.push(y);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Lexicographically least member of the `z3_act` orbit.
pub fn canonical_orbit_rep(w: &AffineWeight) -> Result<AffineWeight> {
    Ok(z3_orbit(w)?.into_iter().min().expect("orbit is nonempty"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn level(u: i64, v: i64) -> LevelParams {
        make_level(u, v).unwrap()
    }

    fn wt(u: i64, v: i64, i: NatTriple, f: NatTriple) -> AffineWeight {
        AffineWeight::new(level(u, v), i, f).unwrap()
    }

    #[test]
    fn dominant_enumeration() {
        assert_eq!(enumerate_dominant(0), vec![[0, 0, 0]]);
        assert_eq!(enumerate_dominant(1), vec![[0, 0, 1], [0, 1, 0], [1, 0, 0]]);
        assert_eq!(enumerate_dominant(2).len(), 6);
        for ell in 0..12 {
            let ws = enumerate_dominant(ell);
            assert_eq!(ws.len() as u32, (ell + 1) * (ell + 2) / 2);
            assert!(ws.windows(2).all(|p| p[0] < p[1]));
        }
    }

    #[test]
    fn surviving_examples() {
        let ws = enumerate_surviving(&level(3, 2));
        assert_eq!(ws.len(), 1);
        assert_eq!(ws[0].lambda_i(), [0, 0, 0]);
        assert_eq!(ws[0].lambda_f(), [1, 0, 0]);
        assert_eq!(ws[0].labels(), [q(-3, 2), q(0, 1), q(0, 1)]);
        assert_eq!(enumerate_surviving(&level(5, 2)).len(), 6);
        assert_eq!(enumerate_surviving(&level(5, 3)).len(), 18);
    }

    #[test]
    fn relaxed_support_examples() {
        assert!(enumerate_relaxed_support(&level(5, 2)).is_empty());
        let fs: Vec<NatTriple> = enumerate_relaxed_support(&level(3, 4))
            .iter()
            .map(|w| w.lambda_f())
            .collect();
        assert_eq!(fs, vec![[1, 1, 1], [1, 2, 0], [2, 1, 0]]);
        let ws = enumerate_relaxed_support(&level(5, 3));
        assert_eq!(ws.len(), 6);
        assert!(ws.iter().all(|w| w.lambda_f() == [1, 1, 0]));
    }

    #[test]
    fn z3_examples() {
        let w = wt(3, 4, [0, 0, 0], [2, 1, 0]);
        let a = z3_act(&w).unwrap();
        let b = z3_act(&a).unwrap();
        let c = z3_act(&b).unwrap();
        assert_eq!(a.lambda_f(), [1, 2, 0]);
        assert_eq!(b.lambda_f(), [1, 1, 1]);
        assert_eq!(c, w);

        let w = wt(5, 3, [2, 0, 0], [1, 1, 0]);
        let a = z3_act(&w).unwrap();
        assert_eq!((a.lambda_i(), a.lambda_f()), ([0, 2, 0], [1, 1, 0]));
    }

    #[test]
    fn z3_matches_label_map() {
        let w = wt(7, 5, [1, 3, 0], [2, 1, 1]);
        let [l0, l1, l2] = w.labels();
        let r = w.level().shifted();
        assert_eq!(z3_act(&w).unwrap().labels(), [l2 - r, l0, l1 + r]);
        let [m0, m1, m2] = z2_act(&w).unwrap().labels();
        assert_eq!([m0, m1, m2], [l2 - r, l1, l0 + r]);
    }

    #[test]
    fn z2_examples() {
        let w = wt(3, 4, [0, 0, 0], [2, 1, 0]);
        let a = z2_act(&w).unwrap();
        assert_eq!(a.lambda_f(), [1, 1, 1]);
        assert_eq!(z2_act(&a).unwrap(), w);
    }

    #[test]
    fn actions_reject_finite_top_weights() {
        let w = AffineWeight::vacuum(level(3, 4));
        assert_eq!(z3_act(&w).unwrap_err().name(), "NotRelaxedSupport");
        assert_eq!(z2_act(&w).unwrap_err().name(), "NotRelaxedSupport");
        assert!(s3_orbit(&w).is_err());
    }

    #[test]
    fn s3_orbits_of_small_models() {
        for w in enumerate_relaxed_support(&level(3, 4)) {
            assert_eq!(s3_orbit(&w).unwrap().len(), 3);
        }
        assert_eq!(s3_orbit(&wt(5, 3, [2, 0, 0], [1, 1, 0])).unwrap().len(), 3);
    }

    #[test]
    fn canonical_representative_is_orbit_minimum() {
        let w = wt(3, 4, [0, 0, 0], [2, 1, 0]);
        assert_eq!(canonical_orbit_rep(&w).unwrap().lambda_f(), [1, 1, 1]);
    }

    #[test]
    fn constructor_validation() {
        let l = level(5, 3);
        assert!(AffineWeight::new(l, [1, 1, 0], [0, 2, 0]).is_err());
        assert!(AffineWeight::new(l, [1, 0, 0], [1, 1, 0]).is_err());
        assert!(AffineWeight::new(l, [1, 1, 0], [1, 0, 0]).is_err());
        assert!(AffineWeight::new(l, [1, 1, 0], [1, 1, 0]).is_ok());
        assert_eq!(AffineWeight::vacuum(l).labels(), [l.k(), q(0, 1), q(0, 1)]);
    }

    #[test]
    fn json_shape_and_round_trip() {
        let w = wt(3, 4, [0, 0, 0], [2, 1, 0]);
        let s = serde_json::to_string(&w).unwrap();
        assert_eq!(s, r#"{"lambdaI":[0,0,0],"lambdaF":[2,1,0],"labels":["-3/2","-3/4","0"]}"#);
        assert_eq!(serde_json::from_str::<AffineWeight>(&s).unwrap(), w);
        let tampered = r#"{"lambdaI":[0,0,0],"lambdaF":[2,1,0],"labels":["-3/2","-3/4","1"]}"#;
        assert!(serde_json::from_str::<AffineWeight>(tampered).is_err());
    }
}
