//! Admissible levels `k = -3 + u/v` and the scalars derived from them.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A validated nondegenerate-or-boundary admissible level.
///
/// Only [`make_level`] builds one, so every value in circulation satisfies
/// `gcd(u, v) = 1`, `u >= 3` and `v >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawLevel")]
pub struct LevelParams {
    u: i64,
    v: i64,
    k: Rational,
    c: Rational,
}

#[derive(Deserialize)]
struct RawLevel {
    u: i64,
    v: i64,
    k: Rational,
    c: Rational,
}

impl TryFrom<RawLevel> for LevelParams {
    type Error = String;

    fn try_from(raw: RawLevel) -> std::result::Result<Self, Self::Error> {
        let level = make_level(raw.u, raw.v).map_err(|e| e.to_string())?;
        if level.k != raw.k || level.c != raw.c {
            return Err(format!(
                "level ({}, {}) has k = {}, c = {}, document says k = {}, c = {}",
                raw.u, raw.v, level.k, level.c, raw.k, raw.c
            ));
        }
        Ok(level)
    }
}

pub fn make_level(u: i64, v: i64) -> Result<LevelParams> {
    let gcd = u.gcd(&v);
    if gcd != 1 {
        return Err(Error::NotCoprime { u, v, gcd });
    }
    if u < 3 {
        return Err(Error::BelowAdmissible { u });
    }
    if v < 2 {
        return Err(Error::NoReduction { v });
    }
    let k = Rational::new(u as i128, v as i128) - 3;
    let c = central_charge_from_level(k);
    debug_assert_eq!(c, central_charge_from_uv(u, v));
    Ok(LevelParams { u, v, k, c })
}

/// `c = -(2k+3)(3k+1)/(k+3)`.
pub fn central_charge_from_level(k: Rational) -> Rational {
    -(k * 2 + 3) * (k * 3 + 1) / (k + 3)
}

/// `c = 1 - 6(u-2v)^2/(uv)`.
pub fn central_charge_from_uv(u: i64, v: i64) -> Rational {
    let (u, v) = (u as i128, v as i128);
    Rational::ONE - Rational::new(6 * (u - 2 * v) * (u - 2 * v), u * v)
}

impl LevelParams {
    pub fn u(&self) -> i64 {
        self.u
    }

    pub fn v(&self) -> i64 {
        self.v
    }

    /// The level `k`.
    pub fn k(&self) -> Rational {
        self.k
    }

    /// The central charge.
    pub fn c(&self) -> Rational {
        self.c
    }

    /// `k + 3 = u/v`.
    pub fn shifted(&self) -> Rational {
        self.k + 3
    }

    /// `2k + 3`, the coefficient that drives spectral flow.
    pub fn twice_k_plus_3(&self) -> Rational {
        self.k * 2 + 3
    }

    /// Whether simple relaxed modules with dense top spaces exist (`v >= 3`).
    pub fn relaxed_sector_exists(&self) -> bool {
        self.v >= 3
    }
}

pub fn relaxed_sector_exists(p: &LevelParams) -> bool {
    p.relaxed_sector_exists()
}
