use bp_atlas::functors::{conj_weight, sf_orbit, sf_weight, OrbitLabel};
use bp_atlas::module_data::{family_omega, solve_weight, twisted_data, untwisted_data, ChargeWeight};
use bp_atlas::oracle::{Generator, OracleModule, OracleVector, TopCondition};
use bp_atlas::smith::SmithScalars;
use bp_atlas::weights::{enumerate_relaxed_support, enumerate_surviving, s3_orbit, z2_act, z3_act};
use bp_atlas::{make_level, q, FlowAmount, LevelParams, Rational};
use proptest::prelude::*;

fn level() -> impl Strategy<Value = LevelParams> {
    (3i64..=9, 2i64..=8).prop_filter_map("coprime", |(u, v)| make_level(u, v).ok())
}

fn relaxed_level() -> impl Strategy<Value = LevelParams> {
    (3i64..=9, 3i64..=8).prop_filter_map("coprime", |(u, v)| make_level(u, v).ok())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-50i128..=50, 1i128..=50).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn gplus_gminus_power_is_h(p in level(), j in rational(), d in rational()) {
        let s = SmithScalars::new(p);
        let m = OracleModule::new(p, j, d, TopCondition::Verma);
        let mut x = OracleVector::basis(0);
        for n in 1..=12i64 {
            let prev = x.clone();
            x = m.apply(Generator::Gminus, &x);
            prop_assert_eq!(m.apply(Generator::Gplus, &x), prev.scaled(s.h(n, j, d)));
        }
    }

    #[test]
    fn casimir_is_central(p in level(), j in rational(), d in rational(), w in rational()) {
        for cond in [TopCondition::Verma, TopCondition::Dense(w)] {
            let m = OracleModule::new(p, j, d, cond);
            for e in -10..=10i64 {
                if !m.has_basis(e) {
                    continue;
                }
                let b = OracleVector::basis(e);
                for g in Generator::ALL {
                    let lhs = m.apply(Generator::Omega, &m.apply(g, &b));
                    let rhs = m.apply(g, &m.apply(Generator::Omega, &b));
                    prop_assert_eq!(lhs, rhs, "{:?} at {}", g, e);
                }
            }
        }
    }

    #[test]
    fn casimir_eigenvalues(p in level(), j in rational(), d in rational()) {
        let s = SmithScalars::new(p);
        let m = OracleModule::new(p, j, d, TopCondition::Verma);
        let v = OracleVector::basis(0);
        prop_assert_eq!(m.apply(Generator::Omega, &v), v.scaled(s.omega_plus(j, d)));
        // a lowest-weight vector of charge j has eigenvalue omega^-
        prop_assert_eq!(s.omega_minus(j, d), -s.omega_plus(-j, d));
    }

    #[test]
    fn flow_composes(p in level(), j in rational(), d in rational(), a in -8i64..=8, b in -8i64..=8) {
        let cw = ChargeWeight::new(j, d);
        let (fa, fb) = (FlowAmount::from_twice(a), FlowAmount::from_twice(b));
        prop_assert_eq!(
            sf_weight(sf_weight(cw, fa, &p), fb, &p),
            sf_weight(cw, FlowAmount::from_twice(a + b), &p)
        );
        prop_assert_eq!(sf_weight(cw, FlowAmount::integer(0), &p), cw);
    }

    #[test]
    fn conjugation_inverts_flow(p in level(), j in rational(), d in rational(), a in -8i64..=8) {
        let cw = ChargeWeight::new(j, d);
        let fa = FlowAmount::from_twice(a);
        let lhs = conj_weight(sf_weight(cw, fa, &p));
        let rhs = sf_weight(conj_weight(cw), FlowAmount::from_twice(-a), &p);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dihedral_actions(p in relaxed_level(), idx in any::<prop::sample::Index>()) {
        let ws = enumerate_relaxed_support(&p);
        let w = ws[idx.index(ws.len())];
        let z = |x| z3_act(&x).unwrap();
        prop_assert_eq!(z(z(z(w))), w);
        let c = z2_act(&w).unwrap();
        prop_assert_eq!(z2_act(&c).unwrap(), w);
        // z2 z3 z2 = z3^-1
        prop_assert_eq!(z(z2_act(&z(c)).unwrap()), w);
        let orbit = s3_orbit(&w).unwrap();
        prop_assert!(orbit.len() == 3 || orbit.len() == 6);
        prop_assert!(orbit.contains(&w));
    }

    #[test]
    fn omega_symmetry(p in relaxed_level(), idx in any::<prop::sample::Index>()) {
        let ws = enumerate_relaxed_support(&p);
        let w = ws[idx.index(ws.len())];
        let omega = family_omega(&w).unwrap();
        let tw = twisted_data(&w);
        prop_assert_eq!(family_omega(&z3_act(&w).unwrap()).unwrap(), omega);
        prop_assert_eq!(family_omega(&z2_act(&w).unwrap()).unwrap(), -omega);
        prop_assert_eq!(SmithScalars::new(p).omega_plus(tw.j, tw.delta), omega);
    }

    #[test]
    fn weight_data_round_trips(p in level(), idx in any::<prop::sample::Index>()) {
        let ws = enumerate_surviving(&p);
        let w = ws[idx.index(ws.len())];
        let d = untwisted_data(&w);
        prop_assert_eq!(solve_weight(d.j, d.delta, &p).unwrap(), w);
        prop_assert_eq!(twisted_data(&w), sf_weight(d, FlowAmount::HALF, &p));
    }

    #[test]
    fn orbit_labels_follow_flow(p in level(), idx in any::<prop::sample::Index>()) {
        let ws = enumerate_surviving(&p);
        let w = ws[idx.index(ws.len())];
        let base = untwisted_data(&w);
        let table = sf_orbit(&w, FlowAmount::integer(-3), FlowAmount::integer(3));
        prop_assert_eq!(table.entries.len(), 13);
        for e in &table.entries {
            if let OrbitLabel::Unbounded(u) = &e.label {
                prop_assert_eq!(ChargeWeight::new(u.j, u.delta), sf_weight(base, e.ell, &p));
            }
        }
    }
}
