mod common;

use common::{dwork, family, matrix_from_cols, mixed_quartic};
use hgzeta::family::{normalize, smoothness_scan, FamilySpec, Smoothness};
use hgzeta::intlin::IntMatrix;
use rug::Integer;

#[test]
fn diagonal_family_invariants() {
    let cubic = dwork(2, 7);
    assert_eq!(cubic.alpha.alphas, vec![1, 1, 1]);
    assert_eq!(cubic.alpha.alpha_total, 3);
    assert_eq!(cubic.q(), 7);
    // C = 3³·1 = 27 ≡ 6 (mod 7).
    assert_eq!(cubic.cval, cubic.field.from_int(6));
}

#[test]
fn mixed_family_invariants() {
    let mixed = mixed_quartic(73);
    assert_eq!(mixed.alpha.alphas, vec![2, 4, 3, 3]);
    assert_eq!(mixed.alpha.alpha_total, 12);
    // C = 12^12·(2^{-2}·4^{-4}·3^{-3}·3^{-3}) = 2^14·3^6 ≡ 41 (mod 73).
    assert_eq!(mixed.cval, mixed.field.from_int(41));
}

#[test]
fn normalization_permutes_columns_into_place() {
    // The mixed quartic with its columns shuffled: the validated family must
    // come out identical (same matrix, same permuted coefficients).
    let shuffled = family(
        3,
        73,
        1,
        &[&[0, 0, 4, 0], &[4, 0, 0, 0], &[0, 0, 0, 4], &[1, 3, 0, 0]],
        &[3, 2, 5, 7],
    );
    let reference = family(
        3,
        73,
        1,
        &[&[4, 0, 0, 0], &[1, 3, 0, 0], &[0, 0, 4, 0], &[0, 0, 0, 4]],
        &[2, 7, 3, 5],
    );
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(shuffled.a.get(i, j), reference.a.get(i, j));
        }
    }
    assert_eq!(shuffled.c, reference.c);
    assert_eq!(shuffled.cval, reference.cval);
}

#[test]
fn normalize_rejects_unmatchable_matrices() {
    // No permutation puts a dominant entry on every diagonal slot.
    let a = matrix_from_cols(&[&[1, 1, 1], &[1, 1, 1], &[1, 1, 1]]);
    assert!(normalize(&a, 2).is_err());
}

#[test]
fn constructor_rejects_bad_input() {
    // Column sums must equal n+1.
    let mut a = IntMatrix::zero(3, 3);
    for i in 0..3 {
        a.set(i, i, Integer::from(2));
    }
    assert!(FamilySpec::new(2, 7, 1, a, &[1, 1, 1]).is_err());
    // Coefficients must be nonzero mod p.
    let ok = matrix_from_cols(&[&[3, 0, 0], &[0, 3, 0], &[0, 0, 3]]);
    assert!(FamilySpec::new(2, 7, 1, ok.clone(), &[7, 1, 1]).is_err());
    // p must not divide any α value (here α = 3 at p = 3).
    assert!(FamilySpec::new(2, 3, 1, ok, &[1, 1, 1]).is_err());
}

#[test]
fn admissibility() {
    let cubic = dwork(2, 7);
    let admissible: Vec<u64> = cubic
        .field
        .units()
        .filter(|&l| cubic.lambda_admissible(l))
        .map(|l| l.0)
        .collect();
    // λ³ = 6 = C exactly for λ ∈ {3, 5, 6}.
    assert_eq!(admissible, vec![1, 2, 4]);
    assert!(!cubic.lambda_admissible(cubic.field.zero()));
}

#[test]
fn smoothness_matches_admissibility_for_diagonal_cubic() {
    // The fiber is singular exactly at λ³ = C (plus the checks find the
    // singular point already over the base field here).
    let cubic = dwork(2, 7);
    for lam in cubic.field.units() {
        let scan = smoothness_scan(&cubic, lam, 2).unwrap();
        match (cubic.lambda_admissible(lam), scan) {
            (true, Smoothness::NoSingularFound(_)) => {}
            (false, Smoothness::SingularAt(_, _)) => {}
            (adm, s) => panic!("λ={}: admissible={adm} but scan={s:?}", lam.0),
        }
    }
}
