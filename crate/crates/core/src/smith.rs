//! The Smith-type algebra `Z_k` generated by `J`, `G+`, `G-` and a central `L`,
//! with `[J, G+-] = +-G+-` and `[G+, G-] = f_k(J, L)`, together with the data of
//! the relaxed coherent families built from it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::level::LevelParams;
use crate::module_data::{family_omega, twisted_data, LabelKey, ModuleClass, Sector};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::weights::{z3_orbit, AffineWeight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// Level-dependent constants of `f_k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmithScalars {
    level: LevelParams,
    /// `k + 3`
    casimir_shift: Rational,
    /// `(1/8)(k+1)(2k+3)`
    const_term: Rational,
}

impl SmithScalars {
    pub fn new(level: LevelParams) -> Self {
        let k = level.k();
        SmithScalars {
            level,
            casimir_shift: k + 3,
            const_term: (k + 1) * (k * 2 + 3) / 8,
        }
    }

    pub fn level(&self) -> LevelParams {
        self.level
    }

    pub fn casimir_shift(&self) -> Rational {
        self.casimir_shift
    }

    pub fn const_term(&self) -> Rational {
        self.const_term
    }

    /// `(k+3) Delta + (1/8)(k+1)(2k+3)`, the part of `f_k` not involving `J`.
    pub fn a(&self, delta: Rational) -> Rational {
        self.casimir_shift * delta + self.const_term
    }

    /// `f_k(j, Delta) = 3j^2 - (k+3)Delta - (1/8)(k+1)(2k+3)`.
    pub fn f(&self, j: Rational, delta: Rational) -> Rational {
        j * j * 3 - self.a(delta)
    }

    /// `h^n = sum_{m<n} f_k(j - m, Delta)` in closed form:
    /// `n (n^2 - (3/2) n (2j+1) + (1/2)(6j^2 + 6j + 1) - A)`.
    pub fn h(&self, n: i64, j: Rational, delta: Rational) -> Rational {
        self.h_poly(j, delta).eval(Rational::from(n))
    }

    /// `h^n` as a cubic in `n`.
    pub fn h_poly(&self, j: Rational, delta: Rational) -> Poly {
        let c1 = (j * j * 6 + j * 6 + 1) / 2 - self.a(delta);
        let c2 = -(j * 2 + 1) * Rational::new(3, 2);
        Poly::new(vec![Rational::ZERO, c1, c2, Rational::ONE])
    }

    /// `omega^+ = (2j+1)(j(j+1) - A)`, the Casimir on a highest-weight vector.
    pub fn omega_plus(&self, j: Rational, delta: Rational) -> Rational {
        (j * 2 + 1) * (j * (j + 1) - self.a(delta))
    }

    /// `omega^- = (2j-1)(j(j-1) - A)`, the Casimir on a lowest-weight vector.
    pub fn omega_minus(&self, j: Rational, delta: Rational) -> Rational {
        (j * 2 - 1) * (j * (j - 1) - self.a(delta))
    }

    pub fn omega_pm(&self, sign: Sign, j: Rational, delta: Rational) -> Rational {
        match sign {
            Sign::Plus => self.omega_plus(j, delta),
            Sign::Minus => self.omega_minus(j, delta),
        }
    }

    /// `omega^+(i, Delta) - omega` as a cubic in `i`:
    /// `2i^3 + 3i^2 + (1 - 2A)i - A - omega`.
    pub fn omega_plus_poly(&self, delta: Rational, omega: Rational) -> Poly {
        let a = self.a(delta);
        Poly::new(vec![
            -a - omega,
            Rational::ONE - a * 2,
            Rational::from(3),
            Rational::from(2),
        ])
    }

    /// Positive-integer roots of `n -> h^n(j, Delta)`, ascending.
    pub fn h_positive_integer_roots(&self, j: Rational, delta: Rational) -> Vec<i128> {
        self.h_poly(j, delta)
            .rational_roots()
            .into_iter()
            .filter_map(|r| r.to_integer())
            .filter(|&n| n >= 1)
            .collect()
    }
}

pub fn f_k(p: &LevelParams, j: Rational, delta: Rational) -> Rational {
    SmithScalars::new(*p).f(j, delta)
}

pub fn h_k_n(p: &LevelParams, n: i64, j: Rational, delta: Rational) -> Rational {
    SmithScalars::new(*p).h(n, j, delta)
}

pub fn omega_pm(p: &LevelParams, sign: Sign, j: Rational, delta: Rational) -> Rational {
    SmithScalars::new(*p).omega_pm(sign, j, delta)
}

/// The label `([j], Delta, omega)` of a dense weight module, with the charge
/// coset stored by its representative in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DenseLabel {
    #[serde(rename = "cosetRep")]
    coset_rep: Rational,
    #[serde(rename = "Delta")]
    pub delta: Rational,
    pub omega: Rational,
}

impl DenseLabel {
    pub fn new(j: Rational, delta: Rational, omega: Rational) -> Self {
        DenseLabel { coset_rep: j.fract_part(), delta, omega }
    }

    pub fn coset_rep(&self) -> Rational {
        self.coset_rep
    }
}

impl fmt::Display for DenseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{}], {}, {})", self.coset_rep, self.delta, self.omega)
    }
}

/// A dense module is simple unless `omega = omega^+(i, Delta)` for some `i` in
/// its charge coset.
pub fn dense_is_simple(p: &LevelParams, label: &DenseLabel) -> bool {
    SmithScalars::new(*p)
        .omega_plus_poly(label.delta, label.omega)
        .rational_roots()
        .into_iter()
        .all(|r| r.fract_part() != label.coset_rep)
}

/// The three cosets at which the family through `w` degenerates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ExcludedCosets {
    /// Twisted charges of `w, z3(w), z3^2(w)` in that order.
    #[serde(rename = "rawCharges")]
    pub raw: [Rational; 3],
    /// The same charges reduced into `[0, 1)`, ascending.
    #[serde(rename = "excludedCosets")]
    pub canonical: [Rational; 3],
}

pub fn excluded_cosets(w: &AffineWeight) -> Result<ExcludedCosets> {
    let orbit = z3_orbit(w)?;
    let raw = orbit.map(|m| twisted_data(&m).j);
    let delta = twisted_data(w).delta;
    let omega = family_omega(w)?;
    let cubic = SmithScalars::new(w.level()).omega_plus_poly(delta, omega);
    if cubic != Poly::from_roots(Rational::from(2), &raw) {
        return Err(Error::InconsistentFamily(format!(
            "{w}: omega^+(i) - omega = {cubic:?} does not vanish at {raw:?}"
        )));
    }
    let mut canonical = raw.map(|j| j.fract_part());
    canonical.sort();
    if canonical[0] == canonical[1] || canonical[1] == canonical[2] {
        return Err(Error::InconsistentFamily(format!("{w}: cosets {canonical:?} collide")));
    }
    Ok(ExcludedCosets { raw, canonical })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    Semisimple,
    Plus,
    Minus,
}

impl FamilyKind {
    pub fn conjugate(self) -> Self {
        match self {
            FamilyKind::Semisimple => FamilyKind::Semisimple,
            FamilyKind::Plus => FamilyKind::Minus,
            FamilyKind::Minus => FamilyKind::Plus,
        }
    }
}

/// Composition data of a family at one distinguished coset.
///
/// For the plus family the dense module is realized on a weight vector of
/// charge `representative = j - 1`, strictly below the charge `j` of the
/// highest-weight factor; for the minus family on `j + 2`, strictly above the
/// lowest-weight factor at `j + 1`. In the semisimple case the two factors are
/// direct summands and `representative = j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CosetComposition {
    pub coset: Rational,
    pub representative: Rational,
    pub split: bool,
    pub submodule: LabelKey,
    pub quotient: LabelKey,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyDescription {
    #[serde(rename = "Delta")]
    pub delta: Rational,
    pub omega: Rational,
    #[serde(rename = "excludedCosets")]
    pub excluded_cosets: [Rational; 3],
    #[serde(rename = "rawCharges")]
    pub raw_charges: [Rational; 3],
    pub kind: FamilyKind,
    pub sequences: Vec<CosetComposition>,
}

fn twisted_key(class: ModuleClass, j: Rational, delta: Rational) -> LabelKey {
    LabelKey { sector: Sector::Twisted, class, j, delta }
}

/// Composition of a family of the given kind at raw charge `j`.
///
/// The highest-weight factor is the twisted module at `(j, Delta)`; the other
/// factor is the conjugate of the twisted highest-weight module at `(-j-1, Delta)`.
pub fn coset_composition(kind: FamilyKind, j: Rational, delta: Rational) -> CosetComposition {
    let hw = twisted_key(ModuleClass::HighestWeight, j, delta);
    let lw = twisted_key(ModuleClass::ConjugateHighestWeight, -j - 1, delta);
    match kind {
        FamilyKind::Semisimple => CosetComposition {
            coset: j,
            representative: j,
            split: true,
            submodule: lw,
            quotient: hw,
        },
        FamilyKind::Plus => CosetComposition {
            coset: j,
            representative: j - 1,
            split: false,
            submodule: lw,
            quotient: hw,
        },
        FamilyKind::Minus => CosetComposition {
            coset: j,
            representative: j + 2,
            split: false,
            submodule: hw,
            quotient: lw,
        },
    }
}

fn describe(
    delta: Rational,
    omega: Rational,
    raw: [Rational; 3],
    kind: FamilyKind,
) -> FamilyDescription {
    let mut canonical = raw.map(|j| j.fract_part());
    canonical.sort();
    FamilyDescription {
        delta,
        omega,
        excluded_cosets: canonical,
        raw_charges: raw,
        kind,
        sequences: raw.iter().map(|&j| coset_composition(kind, j, delta)).collect(),
    }
}

/// The coherent family through `w` in its semisimple, plus or minus version.
pub fn coherent_family(w: &AffineWeight, kind: FamilyKind) -> Result<FamilyDescription> {
    let cosets = excluded_cosets(w)?;
    let delta = twisted_data(w).delta;
    let omega = family_omega(w)?;
    Ok(describe(delta, omega, cosets.raw, kind))
}

impl FamilyDescription {
    /// The family obtained by conjugation: `omega` is negated, plus and minus
    /// swap and each distinguished charge `j` becomes `-j-1`.
    pub fn conjugate(&self) -> FamilyDescription {
        describe(
            self.delta,
            -self.omega,
            self.raw_charges.map(|j| -j - 1),
            self.kind.conjugate(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level::make_level;
    use crate::rational::q;
    use crate::weights::{enumerate_relaxed_support, z2_act};

    fn scalars(u: i64, v: i64) -> SmithScalars {
        SmithScalars::new(make_level(u, v).unwrap())
    }

    #[test]
    fn f_example() {
        let s = scalars(3, 4);
        assert_eq!(s.f(q(-1, 4), q(-9, 16)), q(3, 8));
        assert_eq!(s.f(q(2, 7), q(1, 3)), s.f(q(-2, 7), q(1, 3)));
        assert_eq!(s.h(1, q(2, 7), q(1, 3)), s.f(q(2, 7), q(1, 3)));
    }

    #[test]
    fn h_closed_form_matches_sum() {
        let s = scalars(7, 5);
        for (j, d) in [(q(0, 1), q(0, 1)), (q(-3, 7), q(5, 11)), (q(13, 4), q(-2, 9))] {
            let mut sum = Rational::ZERO;
            for n in 1..=20i64 {
                sum += s.f(j - Rational::from(n - 1), d);
                assert_eq!(s.h(n, j, d), sum);
            }
        }
    }

    #[test]
    fn h_on_vacuum_of_5_2() {
        let s = scalars(5, 2);
        assert_eq!(s.h_positive_integer_roots(q(1, 3), q(1, 12)), vec![1]);
    }

    #[test]
    fn omega_examples() {
        let s = scalars(3, 4);
        assert_eq!(s.omega_plus(q(-1, 4), q(-9, 16)), q(0, 1));
        assert_eq!(s.omega_plus(q(-1, 2), q(17, 5)), q(0, 1));
        for (j, d) in [(q(1, 3), q(2, 5)), (q(-7, 2), q(0, 1))] {
            assert_eq!(s.omega_minus(-j, d), -s.omega_plus(j, d));
            assert_eq!(s.omega_plus(-j - 1, d), -s.omega_plus(j, d));
            assert_eq!(s.omega_minus(j, d), s.omega_plus(j - 1, d));
        }
    }

    #[test]
    fn omega_poly_is_expanded_cubic() {
        let s = scalars(5, 3);
        let p = s.omega_plus_poly(q(1, 8), q(3, 2));
        for i in [q(0, 1), q(1, 2), q(-5, 3)] {
            assert_eq!(p.eval(i), s.omega_plus(i, q(1, 8)) - q(3, 2));
        }
    }

    #[test]
    fn dense_simplicity() {
        let p = make_level(3, 4).unwrap();
        assert!(dense_is_simple(&p, &DenseLabel::new(q(0, 1), q(-9, 16), q(0, 1))));
        assert!(!dense_is_simple(&p, &DenseLabel::new(q(3, 4), q(-9, 16), q(0, 1))));
        assert!(!dense_is_simple(&p, &DenseLabel::new(q(-1, 4), q(-9, 16), q(0, 1))));
        assert!(dense_is_simple(&p, &DenseLabel::new(q(0, 1), q(0, 1), q(1, 1))));
    }

    #[test]
    fn excluded_cosets_of_3_4() {
        let w = enumerate_relaxed_support(&make_level(3, 4).unwrap())[0];
        let ex = excluded_cosets(&w).unwrap();
        let mut raw = ex.raw.to_vec();
        raw.sort();
        assert_eq!(raw, vec![q(-3, 4), q(-1, 2), q(-1, 4)]);
        assert_eq!(ex.canonical, [q(1, 4), q(1, 2), q(3, 4)]);
    }

    #[test]
    fn plus_family_sequence_of_3_4() {
        let w = enumerate_relaxed_support(&make_level(3, 4).unwrap())[0];
        let fam = coherent_family(&w, FamilyKind::Plus).unwrap();
        let seq = fam.sequences.iter().find(|s| s.coset == q(-1, 4)).unwrap();
        assert_eq!(seq.submodule.class, ModuleClass::ConjugateHighestWeight);
        assert_eq!((seq.submodule.j, seq.submodule.delta), (q(-3, 4), q(-9, 16)));
        assert_eq!(seq.quotient.class, ModuleClass::HighestWeight);
        assert_eq!((seq.quotient.j, seq.quotient.delta), (q(-1, 4), q(-9, 16)));
    }

    #[test]
    fn conjugate_family_is_z2_image() {
        for (u, v) in [(3, 4), (4, 3), (5, 3), (5, 4), (7, 5)] {
            for w in enumerate_relaxed_support(&make_level(u, v).unwrap()) {
                let plus = coherent_family(&w, FamilyKind::Plus).unwrap();
                let conj = plus.conjugate();
                let image = coherent_family(&z2_act(&w).unwrap(), FamilyKind::Minus).unwrap();
                assert_eq!(conj.kind, FamilyKind::Minus);
                assert_eq!((conj.delta, conj.omega), (image.delta, image.omega));
                assert_eq!(conj.excluded_cosets, image.excluded_cosets);
                let mut a = conj.raw_charges;
                let mut b = image.raw_charges;
                a.sort();
                b.sort();
                assert_eq!(a, b);
            }
        }
    }
}
