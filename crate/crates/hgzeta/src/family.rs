//! The family model: a monomial deformation
//!
//!   F_λ(T) = c_1 T^{a_1} + … + c_{n+1} T^{a_{n+1}} − λ T_1…T_{n+1}
//!
//! of a degree-(n+1) hypersurface in P^n, with structural validation
//! (diagonal normal form of the exponent matrix, coprimality of the α data
//! with q), the constant C = α^α ∏ c_i^{α_i} α_i^{−α_i}, and a brute-force
//! smoothness scan.

use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FqElem};
use crate::intlin::{alpha_vector, AlphaData, IntMatrix, Sign0};

/// A validated family instance over F_q.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub n: usize,
    pub p: u64,
    pub f: u32,
    /// Exponent matrix; column i holds the exponent vector a_i.
    pub a: IntMatrix,
    /// Coefficients c_1..c_{n+1}, as elements of F_q.
    pub c: Vec<FqElem>,
    pub alpha: AlphaData,
    /// C = α^α ∏ c_i^{α_i} / α_i^{α_i} in F_q.
    pub cval: FqElem,
    /// The base field F_q (level 1).
    pub field: FieldCtx,
}

impl FamilySpec {
    /// Validate and build a family from raw data. `c` entries are integer
    /// representatives of prime-field constants.
    pub fn new(n: usize, p: u64, f: u32, a: IntMatrix, c_raw: &[i64]) -> Result<FamilySpec> {
        let field = FieldCtx::new(p, f, 1)?;
        if a.rows != n + 1 || a.cols != n + 1 {
            return Err(Error::Config(format!(
                "exponent matrix must be {0}×{0}",
                n + 1
            )));
        }
        if c_raw.len() != n + 1 {
            return Err(Error::Config(format!("expected {} coefficients", n + 1)));
        }
        let c: Vec<FqElem> = c_raw.iter().map(|&v| field.from_int(v)).collect();
        if c.iter().any(|&ci| ci.0 == 0) {
            return Err(Error::Config("coefficients must be nonzero".into()));
        }
        for i in 0..=n {
            let col_sum: i64 = (0..=n).map(|j| a.get(j, i).to_i64().unwrap()).sum();
            if col_sum != (n + 1) as i64 {
                return Err(Error::Config(format!(
                    "column {i} sums to {col_sum}, expected {}",
                    n + 1
                )));
            }
            if (0..=n).all(|j| a.get(j, i) == &rug::Integer::from(1)) {
                return Err(Error::Config(format!(
                    "column {i} equals the deformation monomial"
                )));
            }
            if (0..=n).any(|j| a.get(j, i).neg0()) {
                return Err(Error::Config("exponents must be nonnegative".into()));
            }
        }
        let (a, perm) = normalize(&a, n)?;
        let c: Vec<FqElem> = perm.iter().map(|&i| c[i]).collect();
        let alpha = alpha_vector(&a.minus_ones())?;
        // q must be coprime to all α_i and to α.
        if alpha.alphas.iter().chain([&alpha.alpha_total]).any(|&v| v % p == 0) {
            return Err(Error::AssumptionViolation(format!(
                "p = {p} divides one of the α values"
            )));
        }
        let cval = compute_c(&field, &alpha, &c);
        Ok(FamilySpec {
            n,
            p,
            f,
            a,
            c,
            alpha,
            cval,
            field,
        })
    }

    pub fn q(&self) -> u64 {
        self.field.q
    }

    /// λ from an integer representative.
    pub fn lambda_from_int(&self, v: i64) -> FqElem {
        self.field.from_int(v)
    }

    /// True when the factorization hypotheses about λ hold: λ ≠ 0 and
    /// λ^α ≠ C.
    pub fn lambda_admissible(&self, lam: FqElem) -> bool {
        lam.0 != 0 && self.field.pow(lam, self.alpha.alpha_total as i64) != self.cval
    }
}

/// Permute columns (monomials) so each diagonal entry is n+1 or n, the normal
/// form forced by smoothness of X_0. Returns the permuted matrix and the
/// column permutation (new position ↦ old column) so coefficients can follow.
/// Fails when no permutation works.
pub fn normalize(a: &IntMatrix, n: usize) -> Result<(IntMatrix, Vec<usize>)> {
    let dim = n + 1;
    // match_col[row] = column placed at that diagonal slot
    let mut match_col = vec![usize::MAX; dim];
    let mut used = vec![false; dim];
    fn assign(
        a: &IntMatrix,
        n: usize,
        row: usize,
        used: &mut [bool],
        match_col: &mut [usize],
    ) -> bool {
        if row == n + 1 {
            return true;
        }
        for col in 0..=n {
            if used[col] {
                continue;
            }
            let d = a.get(row, col).to_i64().unwrap();
            if d == (n + 1) as i64 || d == n as i64 {
                used[col] = true;
                match_col[row] = col;
                if assign(a, n, row + 1, used, match_col) {
                    return true;
                }
                used[col] = false;
            }
        }
        false
    }
    if !assign(a, n, 0, &mut used, &mut match_col) {
        return Err(Error::NotNormalizable);
    }
    let mut out = IntMatrix::zero(dim, dim);
    for (row, &col) in match_col.iter().enumerate() {
        for j in 0..dim {
            out.set(j, row, a.get(j, col).clone());
        }
    }
    // Off-diagonal entries must be 0 or 1, at most one 1 per row.
    for j in 0..dim {
        let mut ones = 0;
        for i in 0..dim {
            if i == j {
                continue;
            }
            match out.get(j, i).to_i64().unwrap() {
                0 => {}
                1 => ones += 1,
                _ => return Err(Error::NotNormalizable),
            }
        }
        if ones > 1 {
            return Err(Error::NotNormalizable);
        }
    }
    Ok((out, match_col))
}

/// C = α^α · ∏_i c_i^{α_i} / α_i^{α_i} evaluated in F_q.
pub fn compute_c(field: &FieldCtx, alpha: &AlphaData, c: &[FqElem]) -> FqElem {
    let at = alpha.alpha_total as i64;
    let mut acc = field.pow(field.from_int(at), at);
    for (&ci, &ai) in c.iter().zip(&alpha.alphas) {
        acc = field.mul(acc, field.pow(ci, ai as i64));
        acc = field.mul(acc, field.inv(field.pow(field.from_int(ai as i64), ai as i64)));
    }
    acc
}

/// Outcome of a singular-point scan over F_{q^s}, s ≤ bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Smoothness {
    NoSingularFound(u32),
    /// The projective representative (coordinates as field encodings) and the
    /// extension degree where F_λ and all partials vanish.
    SingularAt(Vec<u64>, u32),
}

/// Search projective representatives over F_{q^s} for s = 1..=r_bound for a
/// common zero of F_λ and all its partial derivatives.
pub fn smoothness_scan(spec: &FamilySpec, lam: FqElem, r_bound: u32) -> Result<Smoothness> {
    let dim = spec.n + 1;
    let exps: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| spec.a.get(j, i).to_i64().unwrap()).collect())
        .collect();
    for s in 1..=r_bound {
        let ext = FieldCtx::new(spec.p, spec.f, s)?;
        let c_ext: Vec<FqElem> = spec.c.iter().map(|&ci| ext.embed(&spec.field, ci)).collect();
        let lam_ext = ext.embed(&spec.field, lam);
        let mut coords = vec![FqElem(0); dim];
        // Projective representatives: first nonzero coordinate is 1.
        for lead in 0..dim {
            let free = dim - lead - 1;
            let total = (ext.size as u128).pow(free as u32);
            for code in 0..total {
                for slot in coords.iter_mut().take(lead) {
                    *slot = FqElem(0);
                }
                coords[lead] = FqElem(1);
                let mut c = code;
                for k in 0..free {
                    coords[lead + 1 + k] = FqElem((c % ext.size as u128) as u64);
                    c /= ext.size as u128;
                }
                if is_singular_at(&ext, &exps, &c_ext, lam_ext, &coords) {
                    return Ok(Smoothness::SingularAt(
                        coords.iter().map(|e| e.0).collect(),
                        s,
                    ));
                }
            }
        }
    }
    Ok(Smoothness::NoSingularFound(r_bound))
}

fn monomial(ext: &FieldCtx, exps: &[i64], coords: &[FqElem]) -> FqElem {
    let mut acc = ext.one();
    for (&e, &x) in exps.iter().zip(coords) {
        if e == 0 {
            continue;
        }
        if x.0 == 0 {
            return ext.zero();
        }
        acc = ext.mul(acc, ext.pow(x, e));
    }
    acc
}

fn is_singular_at(
    ext: &FieldCtx,
    exps: &[Vec<i64>],
    c: &[FqElem],
    lam: FqElem,
    coords: &[FqElem],
) -> bool {
    let dim = coords.len();
    // F_λ itself.
    let mut val = ext.zero();
    for (ci, ei) in c.iter().zip(exps) {
        val = ext.add(val, ext.mul(*ci, monomial(ext, ei, coords)));
    }
    let all_ones: Vec<i64> = vec![1; dim];
    val = ext.sub(val, ext.mul(lam, monomial(ext, &all_ones, coords)));
    if val.0 != 0 {
        return false;
    }
    // All partials ∂F/∂T_k.
    for k in 0..dim {
        let mut dv = ext.zero();
        for (ci, ei) in c.iter().zip(exps) {
            if ei[k] == 0 {
                continue;
            }
            let mut lowered = ei.clone();
            lowered[k] -= 1;
            let term = ext.mul(
                ext.mul(*ci, ext.from_int(ei[k])),
                monomial(ext, &lowered, coords),
            );
            dv = ext.add(dv, term);
        }
        let mut lowered = all_ones.clone();
        lowered[k] = 0;
        dv = ext.sub(dv, ext.mul(lam, monomial(ext, &lowered, coords)));
        if dv.0 != 0 {
            return false;
        }
    }
    true
}
