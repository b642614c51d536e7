use std::collections::{BTreeMap, BTreeSet};

use yfock::fockrep::{Family, Kind, Op};
use yfock::partitions::Partition;
use yfock::ratfield::RatFun;
use yfock::relcheck::appendix::{check_cross_ratio, check_rank2_factorisation, cross_ratio_residual, rank2_mutant_detected};
use yfock::relcheck::{
    check_adjointness, check_relation, enumerate, run_mutation_battery, run_suite, Adj, Rel, RelationInstance, RelcheckError, Sign, Suite, GRID_SEED,
};
use yfock::symfun::jack_norm_formula;

type Vector = BTreeMap<Partition, RatFun>;

fn apply(op: &Op, v: &Vector, n: usize) -> Vector {
    let mut out = Vector::new();
    for (lam, c) in v {
        for (mu, d) in op.column(lam, n).unwrap() {
            let e = out.entry(mu).or_insert_with(RatFun::zero);
            *e = &*e + &(c * &d);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn basis(lam: &Partition) -> Vector {
    Vector::from([(lam.clone(), RatFun::one())])
}

fn sub(a: &Vector, b: &Vector) -> Vector {
    let mut out = a.clone();
    for (k, c) in b {
        let e = out.entry(k.clone()).or_insert_with(RatFun::zero);
        *e = &*e - c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn inst(rel: Rel, n: usize, degree: usize, i: usize, j: usize) -> RelationInstance {
    RelationInstance { i, j, ..RelationInstance::new(Family::AffineYangian, rel, n, degree) }
}

#[test]
fn raise_lower_on_vacuum() {
    let mut t = inst(Rel::RaiseLower, 2, 0, 0, 0);
    t.r = 1;
    let rep = check_relation(&t).unwrap();
    assert!(rep.pass);
    assert_eq!(rep.relation, "raise-lower");
    // Both sides by hand: the raising operator kills the vacuum.
    let e = basis(&Partition::empty());
    let up = Op::new(Family::AffineYangian, Kind::Raise, 0, 1);
    let down = Op::new(Family::AffineYangian, Kind::Lower, 0, 0);
    let h = Op::new(Family::AffineYangian, Kind::Cartan, 0, 1);
    assert!(sub(&apply(&up, &apply(&down, &e, 2), 2), &apply(&down, &apply(&up, &e, 2), 2)).is_empty());
    assert!(apply(&h, &e, 2).is_empty());
}

#[test]
fn cartan_weight_by_hand() {
    let n = 2;
    let h = Op::new(Family::AffineYangian, Kind::Cartan, 0, 0);
    for s in 0..=2 {
        let x = Op::new(Family::AffineYangian, Kind::Lower, 1, s);
        for lam in Partition::all_up_to(3) {
            let v = basis(&lam);
            let comm = sub(&apply(&h, &apply(&x, &v, n), n), &apply(&x, &apply(&h, &v, n), n));
            let twice: Vector = apply(&x, &v, n).into_iter().map(|(k, c)| (k, c.scale_int(2))).collect();
            assert_eq!(comm, twice, "{lam} s={s}");
        }
        let mut t = inst(Rel::CartanWeight, n, 3, 0, 1);
        t.s = s;
        t.sign = Sign::Minus;
        assert!(check_relation(&t).unwrap().pass);
    }
}

#[test]
fn serre_example() {
    let mut t = inst(Rel::Serre, 3, 4, 0, 1);
    t.serre_r = vec![0, 0];
    assert!(check_relation(&t).unwrap().pass);
    // Same element by hand: ad(x)^2 y = x x y - 2 x y x + y x x.
    let x = Op::new(Family::AffineYangian, Kind::Raise, 0, 0);
    let y = Op::new(Family::AffineYangian, Kind::Raise, 1, 0);
    for lam in Partition::all_up_to(4) {
        let v = basis(&lam);
        let xxy = apply(&x, &apply(&x, &apply(&y, &v, 3), 3), 3);
        let xyx: Vector = apply(&x, &apply(&y, &apply(&x, &v, 3), 3), 3).into_iter().map(|(k, c)| (k, c.scale_int(2))).collect();
        let yxx = apply(&y, &apply(&x, &apply(&x, &v, 3), 3), 3);
        let mut lhs = sub(&xxy, &xyx);
        for (k, c) in yxx {
            let e = lhs.entry(k).or_insert_with(RatFun::zero);
            *e = &*e + &c;
        }
        lhs.retain(|_, c| !c.is_zero());
        assert!(lhs.is_empty(), "{lam}");
    }
}

#[test]
fn adjointness_examples() {
    assert!(check_adjointness(1, 0, 2, 2).unwrap().pass);
    assert!(check_adjointness(1, 2, 4, 3).unwrap().pass);
    assert!(run_suite(Suite::Adjoint, 2, 3, 1, 1).unwrap().iter().all(|r| r.pass));
    // Norm-quotient form at degree two, norms from the closed product.
    let n = 2;
    let raise = Op::new(Family::YangianSl, Kind::Raise, 1, 0);
    let lower = Op::new(Family::YangianSl, Kind::Lower, 1, 0);
    let mu = Partition::new(vec![1]).unwrap();
    for lam in Partition::all_of_size(2) {
        let e = raise.column(&lam, n).unwrap().into_iter().find(|(p, _)| *p == mu).map(|(_, c)| c).unwrap_or_default();
        let f = lower.column(&mu, n).unwrap().into_iter().find(|(p, _)| *p == lam).map(|(_, c)| c).unwrap_or_default();
        assert!(!e.is_zero());
        assert_eq!(&e * &jack_norm_formula(&mu, n).unwrap(), &f * &jack_norm_formula(&lam, n).unwrap(), "{lam}");
    }
    assert!(check_adjointness(0, 0, 2, 2).is_err());
}

#[test]
fn appendix_checks() {
    assert!(cross_ratio_residual(1).is_zero());
    assert!(check_cross_ratio(false).pass);
    let bad = check_cross_ratio(true);
    assert!(!bad.pass);
    assert!(!bad.witness.unwrap().output.is_empty());
    assert!(check_rank2_factorisation(2, 5, GRID_SEED).pass);
    assert!(rank2_mutant_detected(2));
    let reps = run_suite(Suite::Appendix, 0, 0, 2, 1).unwrap();
    assert_eq!(reps.len(), 3);
    assert!(reps.iter().all(|r| r.pass));
}

#[test]
fn affine_lie_rank_three() {
    let reps = run_suite(Suite::AffineLie, 3, 5, 2, 0).unwrap();
    assert!(!reps.is_empty());
    assert!(reps.iter().any(|r| r.relation == "serre"));
    for r in &reps {
        assert!(r.pass, "{}", r.instance);
    }
}

#[test]
fn unsupported_and_invalid() {
    assert!(matches!(run_suite(Suite::AffineYangian, 1, 2, 1, 1), Err(RelcheckError::Unsupported(_))));
    assert!(matches!(enumerate(Family::AffineYangian, 1, 2, 1), Err(RelcheckError::Unsupported(_))));
    assert!(matches!("nope".parse::<Suite>(), Err(RelcheckError::UnknownSuite(_))));
    // N = 2 only admits the same-node and second-order shift forms.
    assert!(matches!(check_relation(&inst(Rel::Shift(Adj::Left), 2, 2, 0, 1)), Err(RelcheckError::InvalidInstance(_))));
    assert!(matches!(check_relation(&inst(Rel::ShiftRank2, 3, 2, 0, 1)), Err(RelcheckError::InvalidInstance(_))));
    assert!(matches!(check_relation(&inst(Rel::Shift(Adj::Same), 3, 2, 0, 1)), Err(RelcheckError::InvalidInstance(_))));
    assert!(matches!(check_relation(&inst(Rel::CartanCommute, 3, 2, 3, 0)), Err(RelcheckError::InvalidInstance(_))));
    let mut t = inst(Rel::Serre, 3, 2, 0, 1);
    t.serre_r = vec![0];
    assert!(matches!(check_relation(&t), Err(RelcheckError::InvalidInstance(_))));
    let rels: BTreeSet<String> = enumerate(Family::AffineYangian, 2, 2, 1).unwrap().iter().map(|i| i.rel.name()).collect();
    let want: BTreeSet<String> =
        ["cartan-commute", "raise-lower", "cartan-weight", "cartan-shift-same", "shift-same", "serre", "cartan-shift-rank2", "shift-rank2"].iter().map(|s| s.to_string()).collect();
    assert_eq!(rels, want);
}

#[test]
fn failing_report_carries_witness() {
    let mut t = inst(Rel::Shift(Adj::Left), 3, 3, 1, 0);
    t.mutation = Some(yfock::relcheck::Mutation::FlipFirst);
    t.sign = Sign::Plus;
    let rep = check_relation(&t).unwrap();
    assert_eq!(rep.pass, rep.witness.is_none());
    if let Some(w) = rep.witness {
        assert!(w.input.starts_with("b_("));
        assert_ne!(w.coeff, "0");
    }
}

/// Each mutated left/right shift relation, grouped by (relation, sign, mutation),
/// is caught somewhere by degree four; individual instances need more.
#[test]
fn mutation_battery_rank_three() {
    let reps = run_mutation_battery(3, 4, 2, 0).unwrap();
    assert_eq!(reps.len(), 324);
    let mut caught: BTreeMap<String, bool> = BTreeMap::new();
    let mut missed: BTreeMap<String, usize> = BTreeMap::new();
    for r in &reps {
        let words: Vec<&str> = r.instance.split_whitespace().collect();
        let sign = words.iter().find(|w| w.starts_with("sign=")).unwrap();
        let m = words.iter().find(|w| w.starts_with("mutation=")).unwrap();
        *caught.entry(format!("{} {sign} {m}", r.relation)).or_default() |= r.pass;
        if !r.pass {
            *missed.entry(r.relation.clone()).or_default() += 1;
        }
    }
    assert_eq!(caught.len(), 12);
    assert!(caught.values().all(|&c| c), "{caught:?}");
    assert_eq!(missed, BTreeMap::from([("shift-left".to_string(), 12), ("shift-right".to_string(), 12)]));
}

#[test]
fn deterministic_across_thread_counts() {
    let a = run_suite(Suite::AffineYangian, 3, 3, 1, 1).unwrap();
    let b = run_suite(Suite::AffineYangian, 3, 3, 1, 4).unwrap();
    assert_eq!(a, b);
    assert!(a.iter().all(|r| r.pass));
}

#[test]
fn mutation_battery_fully_caught_at_degree_six() {
    let reps = run_mutation_battery(3, 6, 2, 0).unwrap();
    let missed: Vec<&str> = reps.iter().filter(|r| !r.pass).map(|r| r.instance.as_str()).collect();
    assert!(missed.is_empty(), "{missed:?}");
}
