//! Independent point-counting oracles.
//!
//! Two counters for #X_λ(F_{q^r}): naive enumeration of projective
//! representatives, and the Delsarte character-sum formula applied per torus
//! stratum. They share no machinery beyond the field tables, so their exact
//! agreement is a strong correctness check on both.

use crate::algval::AlgValue;
use crate::chargauss::CharTable;
use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::ffield::{FieldCtx, FqElem};
use crate::intlin::{kernel_mod, IntMatrix};
use rug::ops::Pow;
use rug::Integer;

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;
/// Maximum allowed distance from an integer when rounding character sums.
pub const GAP_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMethod {
    Brute,
    Delsarte,
}

/// Point counts at one level, stratified by the set J of nonzero coordinates.
#[derive(Clone, Debug)]
pub struct CountReport {
    pub r: u32,
    pub total: Integer,
    /// Points with at least one vanishing coordinate.
    pub zero_part: Integer,
    /// Points with all coordinates nonzero.
    pub star_part: Integer,
    /// J (0-based coordinate indices) ↦ number of points supported exactly on J.
    pub per_torus: Vec<(Vec<usize>, Integer)>,
    pub method: CountMethod,
}

impl CountReport {
    fn from_strata(r: u32, dim: usize, strata: Vec<(Vec<usize>, Integer)>, method: CountMethod) -> CountReport {
        let mut total = Integer::new();
        let mut star = Integer::new();
        for (j, cnt) in &strata {
            total += cnt;
            if j.len() == dim {
                star += cnt;
            }
        }
        CountReport {
            r,
            zero_part: (&total - &star).into(),
            star_part: star,
            total,
            per_torus: strata,
            method,
        }
    }
}

/// Exact count by enumerating projective representatives (first nonzero
/// coordinate normalized to 1) over F_{q^r}.
pub fn brute_count(spec: &FamilySpec, lam: FqElem, r: u32, budget: u64) -> Result<CountReport> {
    let dim = spec.n + 1;
    let ext = FieldCtx::new(spec.p, spec.f, r)?;
    let reps = (Integer::from(ext.size).pow(dim as u32) - 1u32) / Integer::from(ext.size - 1);
    if reps > budget {
        return Err(Error::BudgetExceeded(
            reps.to_u64().unwrap_or(u64::MAX),
            budget,
        ));
    }
    let c_ext: Vec<FqElem> = spec.c.iter().map(|&ci| ext.embed(&spec.field, ci)).collect();
    let lam_ext = ext.embed(&spec.field, lam);
    let exps: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| spec.a.get(j, i).to_i64().unwrap()).collect())
        .collect();

    let mut by_mask = vec![Integer::new(); 1 << dim];
    let mut coords = vec![FqElem(0); dim];
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
            if eval_f(&ext, &exps, &c_ext, lam_ext, &coords).0 == 0 {
                let mask: usize = coords
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| x.0 != 0)
                    .map(|(i, _)| 1 << i)
                    .sum();
                by_mask[mask] += 1u32;
            }
        }
    }
    let strata = (0usize..1 << dim)
        .filter(|&mask| by_mask[mask] != 0)
        .map(|mask| {
            let j: Vec<usize> = (0..dim).filter(|i| mask >> i & 1 == 1).collect();
            (j, by_mask[mask].clone())
        })
        .collect();
    Ok(CountReport::from_strata(r, dim, strata, CountMethod::Brute))
}

fn eval_f(
    ext: &FieldCtx,
    exps: &[Vec<i64>],
    c: &[FqElem],
    lam: FqElem,
    coords: &[FqElem],
) -> FqElem {
    let mut val = ext.zero();
    for (ci, ei) in c.iter().zip(exps) {
        let mut mono = *ci;
        for (&e, &x) in ei.iter().zip(coords) {
            if e == 0 {
                continue;
            }
            if x.0 == 0 {
                mono = ext.zero();
                break;
            }
            mono = ext.mul(mono, ext.pow(x, e));
        }
        val = ext.add(val, mono);
    }
    let mut deform = lam;
    for &x in coords {
        deform = ext.mul(deform, x);
    }
    ext.sub(val, deform)
}

/// Number of zeros of f = Σ_j c_j x^{r_j} on the torus (F_{q^r}^×)^{n'},
/// by the character-sum formula
///
///   (q^r−1)^{n'}/q^r
///     + ((q^r−1)^{n'+1−N}/q^r) Σ_{χ ∈ Ker φ(R̃)} ∏_j G(χ_j^{−1}) χ_j(c_j),
///
/// with R̃ the exponent matrix extended by a row of ones. The f ≡ 0 case
/// (N = 0) returns the full torus size.
pub fn delsarte_torus_count(
    tbl: &CharTable,
    r_mat: &IntMatrix,
    coeffs: &[FqElem],
) -> Result<Integer> {
    let nvars = r_mat.rows;
    let nmons = coeffs.len();
    let m = tbl.m();
    if nmons == 0 {
        return Ok(Integer::from(m).pow(nvars as u32));
    }
    assert_eq!(r_mat.cols, nmons, "one coefficient per monomial");
    assert!(
        nmons <= nvars + 1,
        "more monomials than the formula's exponent allows"
    );
    let prec = tbl.prec;
    let r_tilde = r_mat.with_ones_row();
    let kernel = kernel_mod(&r_tilde, m);
    let mut sum = AlgValue::zero(prec);
    for k in &kernel {
        let mut term = AlgValue::one(prec);
        for (kj, &cj) in k.iter().zip(coeffs) {
            term = term * tbl.gauss(-(*kj as i64)) * tbl.char_value(*kj as i64, cj);
        }
        sum = sum + term;
    }
    let m_int = Integer::from(m);
    let lead = AlgValue::from_integer(prec, &m_int.clone().pow(nvars as u32));
    let scale = AlgValue::from_integer(prec, &m_int.pow((nvars + 1 - nmons) as u32));
    let q = AlgValue::from_int(prec, tbl.field.size as i64);
    let value = (lead + scale * sum) / q;
    value.round_checked(GAP_TOL)
}

/// Stratified Delsarte count of #X_λ(F_{q^r}): for every nonempty J the
/// restriction of F_λ to the J-torus keeps the monomials supported inside J
/// (the deformation monomial only on the full torus); each affine stratum
/// count is divided by q^r − 1.
pub fn delsarte_full_count(
    spec: &FamilySpec,
    lam: FqElem,
    tbl: &CharTable,
) -> Result<CountReport> {
    let dim = spec.n + 1;
    assert_eq!(tbl.field.p, spec.p);
    assert_eq!(tbl.field.f, spec.f);
    let ext = &tbl.field;
    let m = Integer::from(tbl.m());
    let mut strata = Vec::new();
    for mask in 1usize..1 << dim {
        let j_set: Vec<usize> = (0..dim).filter(|i| mask >> i & 1 == 1).collect();
        // Monomials supported inside J.
        let mut cols = Vec::new();
        for i in 0..dim {
            if (0..dim).all(|row| spec.a.get(row, i) == &Integer::ZERO || mask >> row & 1 == 1) {
                cols.push(i);
            }
        }
        let full = j_set.len() == dim;
        let nmons = cols.len() + usize::from(full);
        let mut r_mat = IntMatrix::zero(j_set.len(), nmons.max(1));
        let mut coeffs = Vec::with_capacity(nmons);
        for (ci, &col) in cols.iter().enumerate() {
            for (ri, &row) in j_set.iter().enumerate() {
                r_mat.set(ri, ci, spec.a.get(row, col).clone());
            }
            coeffs.push(ext.embed(&spec.field, spec.c[col]));
        }
        if full {
            for ri in 0..dim {
                r_mat.set(ri, cols.len(), Integer::from(1));
            }
            coeffs.push(ext.neg(ext.embed(&spec.field, lam)));
        }
        let affine = delsarte_torus_count(tbl, &r_mat, &coeffs)?;
        let (stratum, rem) = affine.div_rem(m.clone());
        if rem != 0 {
            return Err(Error::RoundingGap(
                format!("stratum count {stratum} with remainder {rem}"),
                "exact divisibility by q^r - 1".into(),
            ));
        }
        if stratum != 0 {
            strata.push((j_set, stratum));
        }
    }
    Ok(CountReport::from_strata(
        tbl.level(),
        dim,
        strata,
        CountMethod::Delsarte,
    ))
}
