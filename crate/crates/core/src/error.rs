use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("NotCoprime: gcd({u}, {v}) = {gcd}")]
    NotCoprime { u: i64, v: i64, gcd: i64 },

    #[error("BelowAdmissible: u = {u} must be at least 3")]
    BelowAdmissible { u: i64 },

    #[error("NoReduction: v = {v} must be at least 2")]
    NoReduction { v: i64 },

    #[error("NotRelaxedSupport: weight {0} has lambdaF_1 = 0")]
    NotRelaxedSupport(String),

    #[error("NotSurviving: {0}")]
    NotSurviving(String),

    #[error("NonSquareDiscriminant: {0} is not the square of a rational")]
    NonSquareDiscriminant(Rational),

    #[error("NoSurvivingSolution: no surviving weight has (j, Delta) = ({j}, {delta})")]
    NoSurvivingSolution { j: Rational, delta: Rational },

    #[error("InconsistentFamily: {0}")]
    InconsistentFamily(String),
}

impl Error {
    /// Variant name, used as the stable error identifier on the command line.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotCoprime { .. } => "NotCoprime",
            Error::BelowAdmissible { .. } => "BelowAdmissible",
            Error::NoReduction { .. } => "NoReduction",
            Error::NotRelaxedSupport(_) => "NotRelaxedSupport",
            Error::NotSurviving(_) => "NotSurviving",
            Error::NonSquareDiscriminant(_) => "NonSquareDiscriminant",
            Error::NoSurvivingSolution { .. } => "NoSurvivingSolution",
            Error::InconsistentFamily(_) => "InconsistentFamily",
        }
    }

    pub fn is_level_error(&self) -> bool {
        matches!(
            self,
            Error::NotCoprime { .. } | Error::BelowAdmissible { .. } | Error::NoReduction { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
