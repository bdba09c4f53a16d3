mod common;

use common::{dwork_matrix, mixed_quartic_matrix};
use hgzeta::intlin::{
    alpha_vector, check_asm2, compute_d_count, kernel_mod, kernel_reps, piece_count,
    smith_normal_form, IntMatrix,
};
use proptest::prelude::*;
use rug::Integer;

fn assert_snf_valid(a: &IntMatrix) {
    let snf = smith_normal_form(a);
    let uav = snf.u.mul(a).mul(&snf.v);
    for i in 0..a.rows {
        for j in 0..a.cols {
            let want = if i == j {
                snf.divisors[i].clone()
            } else {
                Integer::new()
            };
            assert_eq!(uav.get(i, j), &want, "U·A·V not diagonal at ({i},{j})");
        }
    }
    // Divisibility chain, zeros last.
    for w in snf.divisors.windows(2) {
        if w[1] != 0 {
            assert!(w[0] != 0, "zero divisor before a nonzero one");
            assert!(w[1].is_divisible(&w[0]), "chain broken: {} ∤ {}", w[0], w[1]);
        }
        assert!(w[0] >= 0 && w[1] >= 0);
    }
}

#[test]
fn snf_known_matrices() {
    let a = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]]);
    assert_snf_valid(&a);
    let snf = smith_normal_form(&a);
    let prod: Integer = snf.divisors.iter().product();
    assert_eq!(prod, 624); // |det A|
    assert_eq!(snf.divisors[0], 2); // gcd of the entries

    let snf = smith_normal_form(&dwork_matrix(2).minus_ones());
    let div: Vec<i64> = snf.divisors.iter().map(|d| d.to_i64().unwrap()).collect();
    assert_eq!(div, vec![1, 3, 0]);

    let snf = smith_normal_form(&mixed_quartic_matrix().minus_ones());
    let div: Vec<i64> = snf.divisors.iter().map(|d| d.to_i64().unwrap()).collect();
    assert_eq!(div, vec![1, 1, 4, 0]);
}

#[test]
fn alpha_vectors() {
    let alpha = alpha_vector(&dwork_matrix(2).minus_ones()).unwrap();
    assert_eq!(alpha.alphas, vec![1, 1, 1]);
    assert_eq!(alpha.alpha_total, 3);

    let alpha = alpha_vector(&dwork_matrix(3).minus_ones()).unwrap();
    assert_eq!(alpha.alphas, vec![1, 1, 1, 1]);
    assert_eq!(alpha.alpha_total, 4);

    let alpha = alpha_vector(&mixed_quartic_matrix().minus_ones()).unwrap();
    assert_eq!(alpha.alphas, vec![2, 4, 3, 3]);
    assert_eq!(alpha.alpha_total, 12);
}

#[test]
fn kernel_mod_solves_and_is_complete() {
    let a = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
    let sols = kernel_mod(&a, 6);
    // Brute force the kernel.
    let mut brute = Vec::new();
    for x in 0..6u64 {
        for y in 0..6u64 {
            if (2 * x) % 6 == 0 && (3 * y) % 6 == 0 {
                brute.push(vec![x, y]);
            }
        }
    }
    let mut got = sols.clone();
    got.sort();
    brute.sort();
    assert_eq!(got, brute);
}

#[test]
fn kernel_reps_structure() {
    let a = dwork_matrix(2);
    let alpha = alpha_vector(&a.minus_ones()).unwrap();
    let q = 7u64;
    let reps = kernel_reps(&a, q, &alpha).unwrap();
    assert_eq!(reps.s.len() as u64, piece_count(&a));
    assert_eq!(reps.s[0], vec![0, 0, 0]);
    for (j, s) in reps.s.iter().enumerate() {
        // Each representative lies in the kernel of the exponent matrix
        // mod q−1, and its coordinates are divisible by the α_i.
        for row in 0..3 {
            let dot: u64 = (0..3)
                .map(|col| a.get(row, col).to_u64().unwrap() * s[col])
                .sum();
            assert_eq!(dot % (q - 1), 0, "rep {j} not in kernel");
        }
        for (i, &sij) in s.iter().enumerate() {
            assert_eq!(sij % alpha.alphas[i], 0);
            assert_eq!(reps.t[j][i], sij / alpha.alphas[i]);
        }
        let total: u64 = s.iter().sum();
        assert_eq!(reps.t_total[j], total / alpha.alpha_total % (q - 1));
        assert_eq!(reps.delta[j], total % (q - 1) == 0);
    }
}

#[test]
fn kernel_reps_divisibility_failure() {
    // The mixed quartic needs 8 | q−1 for its kernel representatives.
    let a = mixed_quartic_matrix();
    let alpha = alpha_vector(&a.minus_ones()).unwrap();
    assert!(kernel_reps(&a, 13, &alpha).is_err());
    assert!(kernel_reps(&a, 73, &alpha).is_ok());
}

#[test]
fn asm2_and_counts() {
    assert!(check_asm2(&dwork_matrix(2), 7).pass);
    assert!(!check_asm2(&dwork_matrix(3), 7).pass); // needs 4 | q−1
    assert!(check_asm2(&dwork_matrix(3), 13).pass);
    assert_eq!(compute_d_count(&dwork_matrix(2)), 0);
    assert_eq!(piece_count(&dwork_matrix(2)), 3);
    assert_eq!(piece_count(&mixed_quartic_matrix()), 4);
}

proptest! {
    #[test]
    fn snf_random_matrices(entries in proptest::collection::vec(-6i64..=6, 9)) {
        let mut a = IntMatrix::zero(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                a.set(i, j, Integer::from(entries[3 * i + j]));
            }
        }
        assert_snf_valid(&a);
        // |det A| equals the product of the divisors.
        let snf = smith_normal_form(&a);
        let det = det3(&entries);
        let prod: Integer = snf.divisors.iter().product();
        prop_assert_eq!(prod, Integer::from(det.abs()));
    }

    #[test]
    fn kernel_mod_random(entries in proptest::collection::vec(0i64..=11, 4), m in 2u64..=12) {
        let mut a = IntMatrix::zero(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                a.set(i, j, Integer::from(entries[2 * i + j]));
            }
        }
        let mut brute = Vec::new();
        for x in 0..m {
            for y in 0..m {
                let r0 = (entries[0] as u64 * x + entries[1] as u64 * y) % m;
                let r1 = (entries[2] as u64 * x + entries[3] as u64 * y) % m;
                if r0 == 0 && r1 == 0 {
                    brute.push(vec![x, y]);
                }
            }
        }
        let mut got = kernel_mod(&a, m);
        got.sort();
        brute.sort();
        prop_assert_eq!(got, brute);
    }
}

fn det3(e: &[i64]) -> i64 {
    e[0] * (e[4] * e[8] - e[5] * e[7]) - e[1] * (e[3] * e[8] - e[5] * e[6])
        + e[2] * (e[3] * e[7] - e[4] * e[6])
}
