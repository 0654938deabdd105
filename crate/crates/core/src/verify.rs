//! The verification suite run by `bp-atlas verify`.
//!
//! Every check is an exact identity over the whole enumeration for one level,
//! except the Casimir centrality check, which samples the twisted modules.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::classifier::{build_atlas, counts, nonss_partner, Atlas};
use crate::functors::{
    check_orbit, conj_twisted, conj_untwisted, conj_weight, sf_orbit, sf_untwisted, sf_weight,
    FlowAmount, OrbitStatus,
};
use crate::level::{central_charge_from_level, central_charge_from_uv, LevelParams};
use crate::module_data::{
    family_omega, solve_weight, top_space_dim, twisted_data, untwisted_data, TopDim,
};
use crate::oracle::{Generator, OracleModule, OracleVector, TopCondition};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::smith::{dense_is_simple, excluded_cosets, DenseLabel, SmithScalars};
use crate::weights::{
    enumerate_relaxed_support, enumerate_surviving, s3_orbit, z2_act, z3_act, AffineWeight,
};

/// Verma and dense modules sampled for the centrality check, each.
const CENTRALITY_SAMPLE: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub u: i64,
    pub v: i64,
    pub depth: u32,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("verify ({}, {}) depth {}\n", self.u, self.v, self.depth);
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status}  {:<28} {:>8} cases", c.name, c.checked));
            if let Some(f) = &c.failure {
                out.push_str(&format!("  {f}"));
            }
            out.push('\n');
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        out.push_str(&format!("{} checks, {failed} failed\n", self.checks.len()));
        out
    }
}

/// Runs `f` on every item in parallel and reports the first failure.
fn run_all<T: Sync>(
    name: &'static str,
    items: &[T],
    f: impl Fn(&T) -> Result<(), String> + Sync,
) -> CheckResult {
    let failure = items.par_iter().find_map_first(|x| f(x).err());
    CheckResult { name, passed: failure.is_none(), checked: items.len(), failure }
}

fn single(name: &'static str, r: Result<(), String>) -> CheckResult {
    CheckResult { name, passed: r.is_ok(), checked: 1, failure: r.err() }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn check_counts(atlas: &Atlas) -> Result<(), String> {
    let expected = counts(&atlas.level);
    let got = atlas.observed_counts();
    ensure(got == expected && atlas.counts == expected, || {
        format!("lists give {:?}, closed forms {:?}", got.as_tuple(), expected.as_tuple())
    })?;
    let relaxed = enumerate_relaxed_support(&atlas.level).len() as u64;
    ensure(relaxed == expected.n_twisted_infdim && 3 * expected.n_families == relaxed, || {
        format!("|I| = {relaxed}")
    })?;
    ensure(atlas.nonsemisimple.len() as u64 == 2 * relaxed, || {
        format!("{} exact sequences for |I| = {relaxed}", atlas.nonsemisimple.len())
    })
}

fn check_injective(atlas: &Atlas) -> Result<(), String> {
    for list in [&atlas.untwisted_hw, &atlas.twisted_hw] {
        let mut seen = HashSet::new();
        for m in list.iter() {
            if !seen.insert(m.charge_weight()) {
                return Err(format!("{:?} {} repeated", m.sector, m.charge_weight()));
            }
        }
    }
    Ok(())
}

/// Finite top dimension `N` is the least positive integer root of `h^n`; an
/// infinite top means no such root. Also checks the factorization
/// `h^n = n (n - l1 - 1)(n + l2 + 1 - u/v)`.
fn check_top_dim(w: &AffineWeight) -> Result<(), String> {
    let s = SmithScalars::new(w.level());
    let d = twisted_data(w);
    let [_, l1, l2] = w.labels();
    let h = s.h_poly(d.j, d.delta);
    let factored = Poly::from_roots(
        Rational::ONE,
        &[Rational::ZERO, l1 + 1, w.level().shifted() - l2 - 1],
    );
    ensure(h == factored, || format!("{w}: h^n = {h:?} does not factor"))?;
    let roots = s.h_positive_integer_roots(d.j, d.delta);
    ensure(roots.len() <= 3, || format!("{w}: {} positive roots", roots.len()))?;
    let from_roots = match roots.first() {
        Some(&n) => TopDim::Finite(n as u32),
        None => TopDim::Infinite,
    };
    ensure(from_roots == top_space_dim(w), || {
        format!("{w}: roots {roots:?} but top dimension {}", top_space_dim(w))
    })
}

/// `G+ (G-)^n v = h^n (G-)^{n-1} v` in the Verma module, for `n <= depth`.
fn check_oracle_h(w: &AffineWeight, depth: u32) -> Result<(), String> {
    let d = twisted_data(w);
    let s = SmithScalars::new(w.level());
    let m = OracleModule::new(w.level(), d.j, d.delta, TopCondition::Verma);
    let mut x = OracleVector::basis(0);
    for n in 1..=depth as i64 {
        x = m.apply(Generator::Gminus, &x);
        let got = m.apply(Generator::Gplus, &x);
        let expected = OracleVector::basis(1 - n).scaled(s.h(n, d.j, d.delta));
        ensure(got == expected, || format!("{w}: n = {n}: {got:?} vs {expected:?}"))?;
    }
    Ok(())
}

/// `Omega g x = g Omega x` for basis vectors with exponents up to `depth`.
pub fn check_centrality(m: &OracleModule, depth: u32) -> Result<(), String> {
    let depth = depth as i64;
    for s in -depth..=depth {
        if !m.has_basis(s) {
            continue;
        }
        let x = OracleVector::basis(s);
        let omega_x = m.apply(Generator::Omega, &x);
        for g in [Generator::J, Generator::Gplus, Generator::Gminus, Generator::L] {
            let lhs = m.apply(Generator::Omega, &m.apply(g, &x));
            let rhs = m.apply(g, &omega_x);
            ensure(lhs == rhs, || format!("[Omega, {g:?}] on basis {s} at j = {}", m.j()))?;
        }
    }
    Ok(())
}

/// Dense module at `(j0, Delta, omega)`: `G+ (G-)^{n+1} v` vanishes exactly
/// when `omega = omega^+(j0 - n - 1, Delta)`.
fn check_dense_singular(
    p: &LevelParams,
    delta: Rational,
    omega: Rational,
    charges: &[Rational; 3],
    depth: u32,
) -> Result<(), String> {
    let s = SmithScalars::new(*p);
    let cosets: BTreeSet<Rational> = charges.iter().map(|j| j.fract_part()).collect();
    let generic = (1..)
        .map(|d| Rational::new(1, 2 * d + 1))
        .find(|x| !cosets.contains(x))
        .expect("a free coset");
    let mut bases: Vec<Rational> = charges.iter().map(|&j| j + 1).collect();
    bases.push(generic);
    for j0 in bases {
        let m = OracleModule::new(*p, j0, delta, TopCondition::Dense(omega));
        let mut x = OracleVector::basis(0);
        for n in 0..depth as i64 {
            x = m.apply(Generator::Gminus, &x);
            let hw = m.apply(Generator::Gplus, &x).is_zero();
            let predicted = s.omega_plus(j0 - Rational::from(n + 1), delta) == omega;
            ensure(hw == predicted, || {
                format!("j0 = {j0}, n = {n}: singular {hw}, predicted {predicted}")
            })?;
        }
        let simple = dense_is_simple(p, &DenseLabel::new(j0, delta, omega));
        ensure(simple == (j0 == generic), || format!("j0 = {j0}: dense_is_simple = {simple}"))?;
    }
    Ok(())
}

/// The plus family at `j - 1` has a lowest-weight vector `(G+)^2 v` of charge
/// `j + 1`; the minus family at `j + 2` has a highest-weight vector `(G-)^2 v`.
fn check_family_representatives(w: &AffineWeight, depth: u32) -> Result<(), String> {
    let p = w.level();
    let d = twisted_data(w);
    let omega = family_omega(w).map_err(|e| e.to_string())?;
    let plus = OracleModule::new(p, d.j - 1, d.delta, TopCondition::Dense(omega));
    let lw = plus.gplus_power(2);
    ensure(plus.apply(Generator::Gminus, &lw).is_zero(), || {
        format!("{w}: (G+)^2 v is not lowest-weight in the plus family")
    })?;
    let mut x = OracleVector::basis(0);
    for n in 1..=depth {
        x = plus.apply(Generator::Gminus, &x);
        ensure(!plus.apply(Generator::Gplus, &x).is_zero(), || {
            format!("{w}: plus family has a highest-weight vector at depth {n}")
        })?;
    }
    let minus = OracleModule::new(p, d.j + 2, d.delta, TopCondition::Dense(omega));
    ensure(minus.apply(Generator::Gplus, &minus.gminus_power(2)).is_zero(), || {
        format!("{w}: (G-)^2 v is not highest-weight in the minus family")
    })
}

fn check_relaxed_weight(w: &AffineWeight) -> Result<(), String> {
    let p = w.level();
    let d = twisted_data(w);
    let omega = family_omega(w).map_err(|e| e.to_string())?;
    let s = SmithScalars::new(p);
    ensure(omega == s.omega_plus(d.j, d.delta), || format!("{w}: omega vs omega^+"))?;
    excluded_cosets(w).map_err(|e| e.to_string())?;

    let a = z3_act(w).map_err(|e| e.to_string())?;
    ensure(a != *w, || format!("{w}: fixed by z3"))?;
    ensure(
        twisted_data(&a).delta == d.delta && family_omega(&a) == Ok(omega),
        || format!("{w}: z3 changes (Delta, omega)"),
    )?;
    let b = z2_act(w).map_err(|e| e.to_string())?;
    ensure(
        twisted_data(&b).delta == d.delta && family_omega(&b) == Ok(-omega),
        || format!("{w}: z2 does not negate omega"),
    )?;
    ensure(z2_act(&b) == Ok(*w), || format!("{w}: z2 is not an involution"))?;

    let size = s3_orbit(w).map_err(|e| e.to_string())?.len();
    let expected = if omega.is_zero() { 3 } else { 6 };
    ensure(size == expected, || format!("{w}: S3 orbit of size {size}, omega = {omega}"))?;

    let mu = nonss_partner(w).map_err(|e| e.to_string())?;
    let md = twisted_data(&mu);
    ensure(md.j == -d.j - 1 && md.delta == d.delta, || format!("{w}: partner charge {}", md.j))?;
    ensure(nonss_partner(&mu) == Ok(*w), || format!("{w}: partner is not an involution"))
}

fn check_weight(w: &AffineWeight) -> Result<(), String> {
    let p = w.level();
    let u = untwisted_data(w);
    let t = twisted_data(w);
    ensure(t == sf_weight(u, FlowAmount::HALF, &p), || format!("{w}: twisted is not sf(1/2)"))?;
    ensure(w.labels().iter().copied().sum::<Rational>() == p.k(), || format!("{w}: labels"))?;
    let back = solve_weight(u.j, u.delta, &p).map_err(|e| format!("{w}: {e}"))?;
    ensure(back == *w, || format!("{w}: solve_weight gives {back}"))?;
    ensure(untwisted_data(&conj_untwisted(w)) == conj_weight(u), || {
        format!("{w}: untwisted conjugation")
    })?;
    if let Some(c) = conj_twisted(w) {
        let ct = twisted_data(&c);
        ensure(ct.j == w.labels()[1] - t.j && ct.delta == t.delta, || {
            format!("{w}: twisted conjugate has {ct}")
        })?;
    }
    if let Some(mu) = sf_untwisted(w) {
        let n = w.lambda_i()[1] as i64;
        let lowest = crate::module_data::ChargeWeight::new(t.j - Rational::from(n), t.delta);
        ensure(untwisted_data(&mu) == sf_weight(lowest, FlowAmount::HALF, &p), || {
            format!("{w}: sf_untwisted disagrees with the flow of the top")
        })?;
    }
    check_top_dim(w)
}

fn check_orbits(w: &AffineWeight) -> Result<(), String> {
    let lo = FlowAmount::integer(-4);
    let hi = FlowAmount::integer(4);
    let table = sf_orbit(w, lo, hi);
    check_orbit(w, &table).map_err(|e| format!("{w}: {e}"))?;
    let v = w.level().v();
    for e in &table.entries {
        if e.ell.twice_ell().abs() >= 6 && v >= 3 {
            ensure(e.status == OrbitStatus::NonRelaxed, || {
                format!("{w}: ell = {} is {}", e.ell, e.status.as_str())
            })?;
        }
        if v == 2 {
            ensure(e.status == OrbitStatus::Hw, || format!("{w}: ell = {} for v = 2", e.ell))?;
        }
    }
    Ok(())
}

fn check_family_partition(atlas: &Atlas) -> Result<(), String> {
    let relaxed: BTreeSet<AffineWeight> =
        enumerate_relaxed_support(&atlas.level).into_iter().collect();
    let mut covered = BTreeSet::new();
    for f in &atlas.families {
        for m in &f.members {
            ensure(covered.insert(m.weight), || format!("{} in two families", m.weight))?;
            ensure(m.delta == f.delta, || format!("{}: Delta differs in family", m.weight))?;
        }
        let mut reduced: Vec<Rational> = f.members.iter().map(|m| m.j.fract_part()).collect();
        reduced.sort();
        ensure(reduced == f.excluded, || format!("{}: cosets {reduced:?}", f.orbit_key))?;
    }
    ensure(covered == relaxed, || "families do not cover the relaxed support".to_string())
}

pub fn verify(p: &LevelParams, depth: u32) -> VerifyReport {
    let atlas = match build_atlas(p) {
        Ok(a) => a,
        Err(e) => {
            return VerifyReport {
                u: p.u(),
                v: p.v(),
                depth,
                checks: vec![single("build atlas", Err(e.to_string()))],
            }
        }
    };
    let surviving = enumerate_surviving(p);
    let relaxed = enumerate_relaxed_support(p);

    let mut checks = vec![
        single("counts", check_counts(&atlas)),
        single(
            "central charge",
            ensure(
                central_charge_from_level(p.k()) == central_charge_from_uv(p.u(), p.v()),
                || "closed forms disagree".to_string(),
            ),
        ),
        single("injectivity", check_injective(&atlas)),
        run_all("weight data", &surviving, check_weight),
        run_all("oracle h^n", &surviving, |w| check_oracle_h(w, depth)),
        run_all("spectral flow orbits", &surviving, check_orbits),
        run_all("relaxed weights", &relaxed, check_relaxed_weight),
        single("family partition", check_family_partition(&atlas)),
        run_all("dense singular vectors", &atlas.families, |f| {
            check_dense_singular(p, f.delta, f.omega, &f.raw_charges, depth)
        }),
        run_all("family representatives", &relaxed, |w| {
            check_family_representatives(w, depth)
        }),
    ];

    let step = (surviving.len() / CENTRALITY_SAMPLE).max(1);
    let fam_step = (atlas.families.len() / CENTRALITY_SAMPLE).max(1);
    let sample: Vec<OracleModule> = surviving
        .iter()
        .step_by(step)
        .map(|w| {
            let d = twisted_data(w);
            OracleModule::new(*p, d.j, d.delta, TopCondition::Verma)
        })
        .chain(atlas.families.iter().step_by(fam_step).map(|f| {
            OracleModule::new(*p, Rational::new(1, 3), f.delta, TopCondition::Dense(f.omega))
        }))
        .collect();
    checks.push(run_all("Casimir centrality", &sample, |m| check_centrality(m, depth)));

    VerifyReport { u: p.u(), v: p.v(), depth, checks }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level::make_level;

    #[test]
    fn small_models_pass() {
        for (u, v) in [(3, 2), (5, 2), (3, 4), (4, 3), (5, 3)] {
            let r = verify(&make_level(u, v).unwrap(), 6);
            assert!(r.passed(), "{}", r.to_text());
        }
    }

    #[test]
    fn report_text_lists_every_check() {
        let r = verify(&make_level(3, 4).unwrap(), 2);
        let text = r.to_text();
        assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), r.checks.len());
    }
}
