mod common;

use common::{dwork, mixed_quartic};
use hgzeta::chargauss::CharTower;
use hgzeta::count::{brute_count, delsarte_full_count, CountMethod};
use hgzeta::error::Error;
use rug::Integer;

const BUDGET: u64 = 1_000_000_000;

#[test]
fn stratified_counts_are_consistent() {
    let cubic = dwork(2, 7);
    let tower = CharTower::new(7, 1, 2, 256);
    for lv in 1..7i64 {
        let lam = cubic.lambda_from_int(lv);
        for r in 1..=2u32 {
            let b = brute_count(&cubic, lam, r, BUDGET).unwrap();
            let d = delsarte_full_count(&cubic, lam, &tower.level(r).unwrap()).unwrap();
            assert_eq!(b.method, CountMethod::Brute);
            assert_eq!(d.method, CountMethod::Delsarte);
            assert_eq!(b.total, d.total, "λ={lv} r={r}");
            assert_eq!(b.star_part, d.star_part, "λ={lv} r={r}");
            // The two oracles agree stratum by stratum.
            let mut bt = b.per_torus.clone();
            let mut dt = d.per_torus.clone();
            bt.sort();
            dt.sort();
            bt.retain(|(_, c)| *c != 0);
            dt.retain(|(_, c)| *c != 0);
            assert_eq!(bt, dt, "λ={lv} r={r}");
            // Internal bookkeeping.
            let total: Integer = b.per_torus.iter().map(|(_, c)| c.clone()).sum();
            assert_eq!(total, b.total);
            assert_eq!(b.zero_part.clone() + &b.star_part, b.total);
        }
    }
}

#[test]
fn fermat_cubic_point_count() {
    // λ = 0 gives the Fermat cubic x³+y³+z³ in P², a genus-1 curve; at q=7
    // the cube map is 3-to-1 so the count is classical: 9 points.
    let cubic = dwork(2, 7);
    let b = brute_count(&cubic, cubic.field.zero(), 1, BUDGET).unwrap();
    assert_eq!(b.total, 9);
}

#[test]
fn counts_scale_with_lambda_equivalence() {
    // λ and λ' with λ'^α = λ^α·(unit α-th power) give isomorphic fibers when
    // λ' = ζλ for ζ^α = 1; at q = 7 and α = 3 the cube roots of unity are
    // {1, 2, 4}, so λ ∈ {1, 2, 4} all share one count.
    let cubic = dwork(2, 7);
    let counts: Vec<Integer> = [1i64, 2, 4]
        .iter()
        .map(|&v| brute_count(&cubic, cubic.lambda_from_int(v), 1, BUDGET).unwrap().total)
        .collect();
    assert_eq!(counts[0], counts[1]);
    assert_eq!(counts[0], counts[2]);
}

#[test]
fn budget_is_enforced() {
    let mixed = mixed_quartic(73);
    let lam = mixed.lambda_from_int(5);
    match brute_count(&mixed, lam, 1, 100) {
        Err(Error::BudgetExceeded(need, cap)) => {
            assert!(need > cap);
            assert_eq!(cap, 100);
        }
        other => panic!("expected budget error, got {other:?}"),
    }
}
