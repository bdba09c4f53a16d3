//! Shared fixtures for the integration tests.
#![allow(dead_code)] // each test target uses its own subset

use hgzeta::family::FamilySpec;
use hgzeta::intlin::IntMatrix;
use rug::Integer;

/// Build a validated family from exponent columns a_1..a_{n+1}.
pub fn family(n: usize, p: u64, f: u32, cols: &[&[i64]], c: &[i64]) -> FamilySpec {
    FamilySpec::new(n, p, f, matrix_from_cols(cols), c).unwrap()
}

/// Exponent matrix with the given columns.
pub fn matrix_from_cols(cols: &[&[i64]]) -> IntMatrix {
    let dim = cols.len();
    let mut a = IntMatrix::zero(dim, dim);
    for (i, col) in cols.iter().enumerate() {
        assert_eq!(col.len(), dim);
        for (j, &e) in col.iter().enumerate() {
            a.set(j, i, Integer::from(e));
        }
    }
    a
}

/// The diagonal deformation family x_1^{n+1} + … + x_{n+1}^{n+1} − λ·x_1…x_{n+1}.
pub fn dwork(n: usize, p: u64) -> FamilySpec {
    let dim = n + 1;
    let cols: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { dim as i64 } else { 0 }).collect())
        .collect();
    let refs: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
    family(n, p, 1, &refs, &vec![1; dim])
}

/// The quartic family x_1^4 + x_1x_2^3 + x_3^4 + x_4^4 − λ·x_1x_2x_3x_4.
pub fn mixed_quartic(p: u64) -> FamilySpec {
    family(
        3,
        p,
        1,
        &[&[4, 0, 0, 0], &[1, 3, 0, 0], &[0, 0, 4, 0], &[0, 0, 0, 4]],
        &[1, 1, 1, 1],
    )
}

/// Exponent matrix of the mixed quartic, for structural checks that do not
/// need a base field.
pub fn mixed_quartic_matrix() -> IntMatrix {
    matrix_from_cols(&[&[4, 0, 0, 0], &[1, 3, 0, 0], &[0, 0, 4, 0], &[0, 0, 0, 4]])
}

/// Diagonal exponent matrix of the degree-(n+1) Fermat deformation.
pub fn dwork_matrix(n: usize) -> IntMatrix {
    let dim = n + 1;
    let cols: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| if i == j { dim as i64 } else { 0 }).collect())
        .collect();
    let refs: Vec<&[i64]> = cols.iter().map(|c| c.as_slice()).collect();
    matrix_from_cols(&refs)
}

/// Small deterministic generator for reproducible pseudo-random test data.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }
}
