//! A direct realization of `Z_k` on explicit weight bases, used to check the
//! closed forms in [`crate::smith`] independently.
//!
//! The module is generated by a weight vector `v` of charge `j`, on which `L`
//! acts as `Delta`. Basis vectors are indexed by a signed exponent `s`: `s < 0`
//! stands for `(G-)^{-s} v`, `s > 0` for `(G+)^s v`. Generators are applied by
//! rewriting with the defining relations only; no closed form for `h^n` or
//! `omega^+-` is used here.

use std::collections::BTreeMap;
use std::fmt;

use crate::level::LevelParams;
use crate::rational::Rational;
use crate::smith::SmithScalars;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    J,
    Gplus,
    Gminus,
    L,
    Omega,
}

impl Generator {
    pub const ALL: [Generator; 5] =
        [Generator::J, Generator::Gplus, Generator::Gminus, Generator::L, Generator::Omega];
}

/// The extra relation imposed on `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TopCondition {
    /// `G+ v = 0`; the basis is `(G-)^m v`, `m >= 0`.
    Verma,
    /// `Omega v = omega v` with no highest- or lowest-weight condition; the
    /// basis is two-sided.
    Dense(Rational),
}

/// A finitely supported combination of basis vectors.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct OracleVector {
    terms: BTreeMap<i64, Rational>,
}

impl OracleVector {
    pub fn zero() -> Self {
        OracleVector::default()
    }

    pub fn basis(s: i64) -> Self {
        OracleVector { terms: BTreeMap::from([(s, Rational::ONE)]) }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: i64) -> Rational {
        self.terms.get(&s).copied().unwrap_or(Rational::ZERO)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, Rational)> + '_ {
        self.terms.iter().map(|(&s, &c)| (s, c))
    }

    pub fn add_term(&mut self, s: i64, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(s).or_insert(Rational::ZERO);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&s);
        }
    }

    pub fn add_scaled(&mut self, other: &OracleVector, c: Rational) {
        for (s, x) in other.terms() {
            self.add_term(s, x * c);
        }
    }

    pub fn scaled(&self, c: Rational) -> OracleVector {
        let mut out = OracleVector::zero();
        out.add_scaled(self, c);
        out
    }
}

impl fmt::Debug for OracleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(s, c)| format!("{c}*[{s}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The module on which generators act.
#[derive(Debug, Clone, Copy)]
pub struct OracleModule {
    scalars: SmithScalars,
    j: Rational,
    delta: Rational,
    condition: TopCondition,
}

impl OracleModule {
    pub fn new(level: LevelParams, j: Rational, delta: Rational, condition: TopCondition) -> Self {
        OracleModule { scalars: SmithScalars::new(level), j, delta, condition }
    }

    pub fn j(&self) -> Rational {
        self.j
    }

    pub fn delta(&self) -> Rational {
        self.delta
    }

    /// Whether `s` indexes a basis vector.
    pub fn has_basis(&self, s: i64) -> bool {
        match self.condition {
            TopCondition::Verma => s <= 0,
            TopCondition::Dense(_) => true,
        }
    }

    fn charge(&self, s: i64) -> Rational {
        self.j + Rational::from(s)
    }

    fn f_at(&self, s: i64) -> Rational {
        self.scalars.f(self.charge(s), self.delta)
    }

    /// `G- G+ v`, forced by `Omega v = omega v` and the defining expression of
    /// `Omega` once `G+ G-` is rewritten as `G- G+ + f_k(J, L)`.
    fn gminus_gplus_on_top(&self) -> Rational {
        match self.condition {
            TopCondition::Verma => Rational::ZERO,
            TopCondition::Dense(omega) => {
                let j = self.j;
                let a = self.scalars.a(self.delta);
                (omega - self.f_at(0) - j * j * j * 2 - j + j * a * 2) / 2
            }
        }
    }

    fn gplus_basis(&self, s: i64) -> OracleVector {
        if s >= 0 {
            return match self.condition {
                TopCondition::Verma => OracleVector::zero(),
                TopCondition::Dense(_) => OracleVector::basis(s + 1),
            };
        }
        // G+ (G-)^m v = [G+, G-] (G-)^{m-1} v + G- G+ (G-)^{m-1} v
        let mut out = OracleVector::basis(s + 1).scaled(self.f_at(s + 1));
        let inner = self.gplus_basis(s + 1);
        out.add_scaled(&self.apply_gminus(&inner), Rational::ONE);
        out
    }

    fn gminus_basis(&self, s: i64) -> OracleVector {
        if s <= 0 {
            return OracleVector::basis(s - 1);
        }
        if s == 1 {
            return OracleVector::basis(0).scaled(self.gminus_gplus_on_top());
        }
        // G- (G+)^s v = G+ G- (G+)^{s-1} v - [G+, G-] (G+)^{s-1} v
        let inner = self.gminus_basis(s - 1);
        let mut out = self.apply_gplus(&inner);
        out.add_term(s - 1, -self.f_at(s - 1));
        out
    }

    fn apply_gplus(&self, x: &OracleVector) -> OracleVector {
        let mut out = OracleVector::zero();
        for (s, c) in x.terms() {
            out.add_scaled(&self.gplus_basis(s), c);
        }
        out
    }

    fn apply_gminus(&self, x: &OracleVector) -> OracleVector {
        let mut out = OracleVector::zero();
        for (s, c) in x.terms() {
            out.add_scaled(&self.gminus_basis(s), c);
        }
        out
    }

    fn apply_j(&self, x: &OracleVector) -> OracleVector {
        let mut out = OracleVector::zero();
        for (s, c) in x.terms() {
            out.add_term(s, c * self.charge(s));
        }
        out
    }

    pub fn apply(&self, gen: Generator, x: &OracleVector) -> OracleVector {
        match gen {
            Generator::J => self.apply_j(x),
            Generator::Gplus => self.apply_gplus(x),
            Generator::Gminus => self.apply_gminus(x),
            Generator::L => x.scaled(self.delta),
            Generator::Omega => {
                // G+G- + G-G+ + 2J^3 + J - 2J((k+3)L + (1/8)(k+1)(2k+3))
                let mut out = self.apply_gplus(&self.apply_gminus(x));
                out.add_scaled(&self.apply_gminus(&self.apply_gplus(x)), Rational::ONE);
                let jx = self.apply_j(x);
                let jjjx = self.apply_j(&self.apply_j(&jx));
                out.add_scaled(&jjjx, Rational::from(2));
                out.add_scaled(&jx, Rational::ONE);
                out.add_scaled(&jx, -self.scalars.a(self.delta) * 2);
                out
            }
        }
    }

    /// `(G-)^n v`, built by repeated application.
    pub fn gminus_power(&self, n: u32) -> OracleVector {
        (0..n).fold(OracleVector::basis(0), |x, _| self.apply(Generator::Gminus, &x))
    }

    /// `(G+)^n v`, built by repeated application.
    pub fn gplus_power(&self, n: u32) -> OracleVector {
        (0..n).fold(OracleVector::basis(0), |x, _| self.apply(Generator::Gplus, &x))
    }
}
