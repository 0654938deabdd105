//! Worked values for the individual maps at small levels.

use bp_atlas::functors::{conj_relaxed, conj_twisted, conj_untwisted, conj_weight, sf_untwisted};
use bp_atlas::module_data::{family_omega, ChargeWeight};
use bp_atlas::smith::{dense_is_simple, f_k, DenseLabel};
use bp_atlas::weights::{enumerate_dominant, s3_orbit, z2_act, z3_act};
use bp_atlas::{
    build_atlas, coherent_family, counts, enumerate_relaxed_support, enumerate_surviving,
    excluded_cosets, make_level, nonss_partner, q, relaxed_sector_exists, sf_orbit, sf_weight,
    solve_weight, top_space_dim, twisted_data, untwisted_data, AffineWeight, Error, FamilyKind,
    FlowAmount, LevelParams, OrbitStatus, TopDim,
};

fn lvl(u: i64, v: i64) -> LevelParams {
    make_level(u, v).unwrap()
}

fn wt(p: LevelParams, i: [u32; 3], f: [u32; 3]) -> AffineWeight {
    AffineWeight::new(p, i, f).unwrap()
}

#[test]
fn levels() {
    for (u, v, k, c) in [(3, 2, q(-3, 2), q(0, 1)), (5, 2, q(-1, 2), q(2, 5)), (4, 3, q(-5, 3), q(-1, 1))] {
        let p = lvl(u, v);
        assert_eq!((p.k(), p.c()), (k, c));
    }
    assert!(matches!(make_level(4, 2), Err(Error::NotCoprime { .. })));
    assert!(matches!(make_level(2, 3), Err(Error::BelowAdmissible { .. })));
    assert!(matches!(make_level(5, 1), Err(Error::NoReduction { .. })));
    assert!(!relaxed_sector_exists(&lvl(5, 2)));
    assert!(!relaxed_sector_exists(&lvl(3, 2)));
    assert!(relaxed_sector_exists(&lvl(3, 4)));
}

#[test]
fn weight_sets() {
    assert_eq!(enumerate_dominant(0), vec![[0, 0, 0]]);
    assert_eq!(enumerate_dominant(1).len(), 3);
    assert_eq!(enumerate_dominant(2).len(), 6);

    let p = lvl(3, 2);
    let ws = enumerate_surviving(&p);
    assert_eq!(ws, vec![wt(p, [0, 0, 0], [1, 0, 0])]);
    assert_eq!(ws[0].labels(), [p.k(), q(0, 1), q(0, 1)]);
    assert_eq!(enumerate_surviving(&lvl(5, 2)).len(), 6);
    assert_eq!(enumerate_surviving(&lvl(5, 3)).len(), 18);

    assert!(enumerate_relaxed_support(&lvl(5, 2)).is_empty());
    let p = lvl(3, 4);
    let mut fs: Vec<_> = enumerate_relaxed_support(&p).iter().map(|w| w.lambda_f()).collect();
    fs.sort();
    assert_eq!(fs, vec![[1, 1, 1], [1, 2, 0], [2, 1, 0]]);
    let rs = enumerate_relaxed_support(&lvl(5, 3));
    assert_eq!(rs.len(), 6);
    assert!(rs.iter().all(|w| w.lambda_f() == [1, 1, 0]));

    assert!(matches!(AffineWeight::new(p, [0, 0, 0], [0, 3, 0]), Err(Error::NotSurviving(_))));
}

#[test]
fn label_actions() {
    let p = lvl(3, 4);
    let a = wt(p, [0, 0, 0], [2, 1, 0]);
    let b = z3_act(&a).unwrap();
    assert_eq!(b.lambda_f(), [1, 2, 0]);
    assert_eq!(z3_act(&b).unwrap().lambda_f(), [1, 1, 1]);
    assert_eq!(z3_act(&z3_act(&b).unwrap()).unwrap(), a);
    assert_eq!(z2_act(&a).unwrap().lambda_f(), [1, 1, 1]);
    assert_eq!(s3_orbit(&a).unwrap().len(), 3);

    let p = lvl(5, 3);
    let w = wt(p, [2, 0, 0], [1, 1, 0]);
    assert_eq!(z3_act(&w).unwrap(), wt(p, [0, 2, 0], [1, 1, 0]));
    assert_eq!(s3_orbit(&w).unwrap().len(), 3);
    assert_eq!(family_omega(&w).unwrap(), q(0, 1));

    // not in the relaxed support
    assert!(z3_act(&AffineWeight::vacuum(p)).is_err());
}

#[test]
fn smith_scalars() {
    let p = make_level(3, 4).unwrap();
    assert_eq!(f_k(&p, q(-1, 4), q(-9, 16)), q(3, 8));

    let simple = DenseLabel::new(q(0, 1), q(-9, 16), q(0, 1));
    assert!(dense_is_simple(&p, &simple));
    let reducible = DenseLabel::new(q(3, 4), q(-9, 16), q(0, 1));
    assert!(!dense_is_simple(&p, &reducible));
    assert_eq!(conj_relaxed(&simple), simple);

    let cosets = excluded_cosets(&wt(p, [0, 0, 0], [1, 1, 1])).unwrap();
    let mut canonical = cosets.canonical.to_vec();
    canonical.sort();
    assert_eq!(canonical, vec![q(1, 4), q(1, 2), q(3, 4)]);

    let w = wt(p, [0, 0, 0], [1, 1, 1]);
    let plus = coherent_family(&w, FamilyKind::Plus).unwrap();
    let conj = plus.conjugate();
    assert_eq!(conj.kind, FamilyKind::Minus);
    assert_eq!(conj.omega, -plus.omega);
}

#[test]
fn module_data() {
    let p = lvl(5, 2);
    assert_eq!(untwisted_data(&AffineWeight::vacuum(p)), ChargeWeight::new(q(0, 1), q(0, 1)));
    let w = wt(p, [0, 2, 0], [1, 0, 0]);
    assert_eq!(untwisted_data(&w), ChargeWeight::new(q(2, 3), q(1, 3)));
    assert_eq!(top_space_dim(&w), TopDim::Finite(3));
    assert_eq!(solve_weight(q(2, 3), q(1, 3), &p).unwrap(), w);
    assert_eq!(solve_weight(q(0, 1), q(0, 1), &p).unwrap(), AffineWeight::vacuum(p));
    assert!(solve_weight(q(1, 7), q(1, 3), &p).is_err());
    assert_eq!(twisted_data(&AffineWeight::vacuum(p)), ChargeWeight::new(q(1, 3), q(1, 12)));
    assert_eq!(top_space_dim(&AffineWeight::vacuum(p)), TopDim::Finite(1));

    let p = lvl(3, 4);
    assert_eq!(untwisted_data(&wt(p, [0, 0, 0], [2, 1, 0])), ChargeWeight::new(q(-1, 4), q(-3, 8)));
    assert_eq!(twisted_data(&AffineWeight::vacuum(p)), ChargeWeight::new(q(-1, 4), q(-1, 16)));
    assert_eq!(family_omega(&wt(p, [0, 0, 0], [1, 1, 1])).unwrap(), q(0, 1));
    assert_eq!(top_space_dim(&wt(p, [0, 0, 0], [1, 1, 1])), TopDim::Infinite);

    let p = lvl(4, 3);
    assert_eq!(twisted_data(&wt(p, [1, 0, 0], [1, 1, 0])), ChargeWeight::new(q(-1, 2), q(-1, 8)));
}

#[test]
fn flows_and_conjugations() {
    let p = lvl(5, 2);
    let vac = ChargeWeight::new(q(0, 1), q(0, 1));
    assert_eq!(sf_weight(vac, FlowAmount::HALF, &p), ChargeWeight::new(q(1, 3), q(1, 12)));
    assert_eq!(sf_weight(vac, FlowAmount::integer(0), &p), vac);
    let cw = ChargeWeight::new(q(2, 3), q(1, 3));
    assert_eq!(conj_weight(cw), ChargeWeight::new(q(-2, 3), q(1, 3)));
    let c = conj_untwisted(&wt(p, [1, 1, 0], [1, 0, 0]));
    assert_eq!(c.lambda_i(), [1, 0, 1]);
    assert_eq!(untwisted_data(&c), ChargeWeight::new(q(-1, 3), q(1, 30)));

    let p = lvl(3, 4);
    let c = conj_twisted(&AffineWeight::vacuum(p)).unwrap();
    assert_eq!(c.lambda_f(), [1, 0, 2]);
    assert_eq!(twisted_data(&c), ChargeWeight::new(q(1, 4), q(-1, 16)));
    assert!(conj_twisted(&wt(p, [0, 0, 0], [2, 1, 0])).is_none());
    assert!(sf_untwisted(&wt(p, [0, 0, 0], [2, 1, 0])).is_none());

    let p = lvl(9, 2);
    let mu = sf_untwisted(&AffineWeight::vacuum(p)).unwrap();
    assert_eq!(mu.lambda_i(), [0, 6, 0]);
    assert_eq!(untwisted_data(&mu), ChargeWeight::new(q(2, 1), q(1, 1)));
}

#[test]
fn orbit_statuses_at_level_3_4() {
    let p = lvl(3, 4);
    let w = wt(p, [0, 0, 0], [1, 1, 1]);
    let table = sf_orbit(&w, FlowAmount::integer(-1), FlowAmount::integer(1));
    let statuses: Vec<_> = table.entries.iter().map(|e| e.status).collect();
    use OrbitStatus::*;
    assert_eq!(statuses, vec![NonRelaxed, Relaxed, Hw, Hw, NonRelaxed]);

    // lambdaF_2 = 0, so the backward flow is highest-weight
    let w = wt(p, [0, 0, 0], [2, 1, 0]);
    let table = sf_orbit(&w, FlowAmount::integer(-1), FlowAmount::integer(1));
    assert_eq!(table.get(FlowAmount::integer(-1)).unwrap().status, Hw);
    assert_eq!(table.get(FlowAmount::integer(1)).unwrap().status, NonRelaxed);
}

#[test]
fn atlases() {
    let a = build_atlas(&lvl(3, 2)).unwrap();
    assert_eq!((a.untwisted_hw.len(), a.twisted_hw.len(), a.families.len()), (1, 1, 0));
    let a = build_atlas(&lvl(3, 4)).unwrap();
    assert_eq!((a.untwisted_hw.len(), a.twisted_hw.len(), a.families.len(), a.nonsemisimple.len()), (6, 6, 1, 6));
    assert!(a.category_o_semisimple);
    let a = build_atlas(&lvl(5, 3)).unwrap();
    assert_eq!((a.untwisted_hw.len(), a.twisted_hw.len(), a.families.len(), a.nonsemisimple.len()), (18, 18, 2, 12));
    assert_eq!(counts(&lvl(4, 3)).as_tuple(), (9, 6, 3, 1));
}

#[test]
fn partners() {
    let p = lvl(3, 4);
    let a = wt(p, [0, 0, 0], [2, 1, 0]);
    assert_eq!(twisted_data(&nonss_partner(&a).unwrap()).j, q(-1, 2));
    let b = wt(p, [0, 0, 0], [1, 1, 1]);
    assert_eq!(twisted_data(&b).j, q(-1, 4));
    assert_eq!(twisted_data(&nonss_partner(&b).unwrap()).j, q(-3, 4));
    assert!(nonss_partner(&AffineWeight::vacuum(p)).is_err());
}
