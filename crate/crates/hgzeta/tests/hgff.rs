mod common;

use common::XorShift;
use hgzeta::chargauss::CharTower;
use hgzeta::hgff::{
    evaluate, ghf, multi_hyper_sides, reduce_params, sheaf_trace, tghf, tghf_reduced,
    tghf_via_reduction, ParamList,
};
use proptest::prelude::*;

const PREC: u32 = 256;
const TOL: f64 = 1e-30;

#[test]
fn vanishes_at_zero() {
    let tower = CharTower::new(7, 1, 1, PREC);
    let tbl = tower.level(1).unwrap();
    let params = ParamList::new(vec![1, 2], vec![0, 3]);
    assert_eq!(tghf(&tbl, &params, tbl.field.zero()).abs().to_f64(), 0.0);
}

#[test]
fn reduction_removes_common_pairs() {
    let params = ParamList::new(vec![1, 2, 4], vec![2, 0, 4]);
    let (red, common) = reduce_params(&params, 6);
    assert_eq!(red.upper, vec![1]);
    assert_eq!(red.lower, vec![0]);
    let mut common = common;
    common.sort();
    assert_eq!(common, vec![2, 4]);
}

#[test]
fn reduced_evaluation_matches_full_transform() {
    // Evaluating with cancelled parameter pairs reproduces the full
    // transform after the ledger correction, for every argument.
    let tower = CharTower::new(7, 1, 1, PREC);
    let tbl = tower.level(1).unwrap();
    let cases = [
        ParamList::new(vec![1, 2, 4], vec![2, 0, 4]),
        ParamList::new(vec![0, 0, 3], vec![0, 1, 3]),
        ParamList::new(vec![5, 5], vec![5, 2]),
        ParamList::new(vec![1, 2, 3], vec![4, 5, 0]),
    ];
    for params in &cases {
        for x in tbl.field.units() {
            let full = tghf(&tbl, params, x);
            let via = tghf_via_reduction(&tbl, params, x);
            assert!(
                full.dist(&via).to_f64() < TOL,
                "params {params:?} at x={}",
                x.0
            );
        }
    }
}

#[test]
fn evaluate_wrapper_consistency() {
    let tower = CharTower::new(7, 1, 1, PREC);
    let tbl = tower.level(1).unwrap();
    let params = ParamList::new(vec![1, 2], vec![0, 3]);
    let x = tbl.field.from_int(3);
    let raw = evaluate(&tbl, &params, x, false);
    assert!(!raw.reduced);
    assert!(raw.value.dist(&tghf(&tbl, &params, x)).to_f64() < TOL);
    let red = evaluate(&tbl, &params, x, true);
    assert!(red.reduced);
    assert!(red.value.dist(&tghf_reduced(&tbl, &params, x)).to_f64() < TOL);
}

#[test]
fn appended_trivial_lower_parameter() {
    // The convenience form appends the trivial character to the lower list.
    let tower = CharTower::new(7, 1, 1, PREC);
    let tbl = tower.level(1).unwrap();
    let x = tbl.field.from_int(5);
    let direct = tghf(&tbl, &ParamList::new(vec![1, 2], vec![3, 0]), x);
    let viaghf = ghf(&tbl, &[1, 2], &[3], x);
    assert!(direct.dist(&viaghf).to_f64() < TOL);
}

#[test]
fn sheaf_trace_weight() {
    // For disjoint parameter lists of arity 2, the traces over the level
    // tower are power sums of Frobenius eigenvalues that are pure of weight
    // 3: every fitted base has magnitude q^{3/2}, for x ∉ {0, 1}.
    let tower = CharTower::new(13, 1, 4, PREC);
    let tbl1 = tower.level(1).unwrap();
    let params = ParamList::new(vec![1, 5], vec![2, 7]);
    let want = 13f64.powf(1.5);
    for xv in [3i64, 5, 6] {
        let x1 = tbl1.field.from_int(xv);
        let mut vals = Vec::new();
        for r in 1..=4 {
            let tblr = tower.level(r).unwrap();
            let pr = params.scaled(tblr.m() / tbl1.m(), tblr.m());
            let xr = tblr.field.embed(&tbl1.field, x1);
            vals.push(sheaf_trace(&tblr, &pr, xr));
        }
        let pairs = hgzeta::zetafac::fit_exponentials(&vals).unwrap();
        assert!(!pairs.is_empty());
        for (root, _) in pairs {
            let mag = root.abs().to_f64();
            assert!((mag - want).abs() < 1e-6 * want, "x={xv}: |β| = {mag}");
        }
    }
}

#[test]
fn transform_identity_structured_cases() {
    let mut rng = XorShift(42);
    let tower = CharTower::new(7, 1, 1, PREC);
    let tbl = tower.level(1).unwrap();
    for _ in 0..10 {
        let alphas = [2u64, 1, 3];
        let a_idx: Vec<u64> = (0..3).map(|_| rng.below(6)).collect();
        let b_idx = rng.below(6);
        let x = tbl.field.exp_gen(rng.below(6));
        let (lhs, rhs) = multi_hyper_sides(&tbl, &alphas, &a_idx, b_idx, x);
        let scale = lhs.abs().to_f64().max(1.0);
        assert!(lhs.dist(&rhs).to_f64() < TOL * scale);
    }
}

proptest! {
    #[test]
    fn reduction_identity_random(
        upper in proptest::collection::vec(0u64..6, 1..4),
        lower in proptest::collection::vec(0u64..6, 1..4),
        xk in 0u64..6,
    ) {
        let tower = CharTower::new(7, 1, 1, PREC);
        let tbl = tower.level(1).unwrap();
        let params = ParamList::new(upper, lower);
        let x = tbl.field.exp_gen(xk);
        let full = tghf(&tbl, &params, x);
        let via = tghf_via_reduction(&tbl, &params, x);
        prop_assert!(full.dist(&via).to_f64() < TOL);
    }
}
