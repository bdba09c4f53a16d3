//! Hypergeometric functions over finite fields.
//!
//! Parameters are multiplicative characters ρ^k on F_{q^r}^×, held as index
//! lists. The core object is the character-sum transform
//!
//!   H(A; B; x) = (1/(q^r−1)) Σ_χ ∏_i G(A_iχ)/G(A_i)
//!                · ∏_i G((B_iχ)^{−1})/G(B_i^{−1}) · χ((−1)^m x),
//!
//! where m is the number of upper parameters. The classical-normalization
//! wrapper [`ghf`] appends the trivial character to the lower list. Common
//! upper/lower parameters do not cancel freely; [`reduce_params`] removes
//! them as multisets and [`tghf_via_reduction`] reconstructs the unreduced
//! value from the reduced one through exact single-pair corrections.
//!
//! ```
//! use hgzeta::chargauss::CharTower;
//! use hgzeta::hgff::{tghf, tghf_via_reduction, ParamList};
//!
//! let tower = CharTower::new(7, 1, 1, 256);
//! let tbl = tower.level(1)?;
//! // One common parameter (4) between the upper and lower lists.
//! let params = ParamList::new(vec![1, 4], vec![0, 4]);
//! for x in tbl.field.units() {
//!     let full = tghf(&tbl, &params, x);
//!     let corrected = tghf_via_reduction(&tbl, &params, x);
//!     assert!(full.dist(&corrected).to_f64() < 1e-30);
//! }
//! # Ok::<(), hgzeta::Error>(())
//! ```

use crate::algval::AlgValue;
use crate::chargauss::CharTable;
use crate::ffield::FqElem;

/// Upper and lower character index lists at a single level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamList {
    pub upper: Vec<u64>,
    pub lower: Vec<u64>,
}

impl ParamList {
    pub fn new(upper: Vec<u64>, lower: Vec<u64>) -> ParamList {
        ParamList { upper, lower }
    }

    /// Reduce all indices modulo the character group order.
    pub fn normalized(&self, m: u64) -> ParamList {
        ParamList {
            upper: self.upper.iter().map(|&k| k % m).collect(),
            lower: self.lower.iter().map(|&k| k % m).collect(),
        }
    }

    /// Lift to a higher level: index scaling by (q^r−1)/(q−1).
    pub fn scaled(&self, factor: u64, m_new: u64) -> ParamList {
        let lift = |k: &u64| ((*k as u128 * factor as u128) % m_new as u128) as u64;
        ParamList {
            upper: self.upper.iter().map(lift).collect(),
            lower: self.lower.iter().map(lift).collect(),
        }
    }

    pub fn arity(&self) -> usize {
        self.upper.len()
    }
}

/// A hypergeometric value together with the data it was evaluated from.
#[derive(Clone, Debug)]
pub struct HgfValue {
    pub value: AlgValue,
    pub params: ParamList,
    pub x: FqElem,
    pub reduced: bool,
}

/// Evaluate the transform, optionally cancelling common parameters first.
pub fn evaluate(tbl: &CharTable, params: &ParamList, x: FqElem, reduce: bool) -> HgfValue {
    let (p, value) = if reduce {
        let (red, _) = reduce_params(params, tbl.m());
        let v = tghf(tbl, &red, x);
        (red, v)
    } else {
        (params.normalized(tbl.m()), tghf(tbl, params, x))
    };
    HgfValue {
        value,
        params: p,
        x,
        reduced: reduce,
    }
}

/// Remove upper/lower parameters that coincide as multisets (mod m).
/// Returns the reduced list and the removed common values.
pub fn reduce_params(params: &ParamList, m: u64) -> (ParamList, Vec<u64>) {
    let p = params.normalized(m);
    let mut lower = p.lower.clone();
    let mut upper = Vec::new();
    let mut removed = Vec::new();
    for &a in &p.upper {
        if let Some(pos) = lower.iter().position(|&b| b == a) {
            lower.remove(pos);
            removed.push(a);
        } else {
            upper.push(a);
        }
    }
    removed.sort_unstable();
    (ParamList { upper, lower }, removed)
}

/// The transform H(A; B; x) over the field of `tbl`. Value 0 at x = 0.
pub fn tghf(tbl: &CharTable, params: &ParamList, x: FqElem) -> AlgValue {
    let prec = tbl.prec;
    if tbl.field.dlog(x).is_none() {
        return AlgValue::zero(prec);
    }
    let m = tbl.m();
    // χ((−1)^arity)·χ(x) = χ((−1)^arity·x)
    let x_eff = if params.arity() % 2 == 1 {
        tbl.field.neg(x)
    } else {
        x
    };
    let mut acc = AlgValue::zero(prec);
    for k in 0..m as i64 {
        let mut term = tbl.char_value(k, x_eff);
        for &a in &params.upper {
            term = term * tbl.gauss(a as i64 + k) / tbl.gauss(a as i64);
        }
        for &b in &params.lower {
            term = term * tbl.gauss(-(b as i64 + k)) / tbl.gauss(-(b as i64));
        }
        acc = acc + term;
    }
    acc / AlgValue::from_int(prec, m as i64)
}

/// Classical-normalization hypergeometric function: the trivial character is
/// appended to the lower parameters before evaluating the transform.
pub fn ghf(tbl: &CharTable, upper: &[u64], lower: &[u64], x: FqElem) -> AlgValue {
    let mut low = lower.to_vec();
    low.push(0);
    tghf(tbl, &ParamList::new(upper.to_vec(), low), x)
}

/// H with reduced parameters: cancel common characters first, then evaluate.
pub fn tghf_reduced(tbl: &CharTable, params: &ParamList, x: FqElem) -> AlgValue {
    let (red, _) = reduce_params(params, tbl.m());
    tghf(tbl, &red, x)
}

/// Evaluate the unreduced transform through the reduced one, peeling common
/// pairs one at a time with the exact corrections
///
///   H(A,C; B,C; x) = H(A; B; x)
///       − (1/q) ∏_i G(A_iC^{−1})/G(A_i) · ∏_i G((B_iC^{−1})^{−1})/G(B_i^{−1})
///         · C((−1)^m) C^{−1}(x)                       (C non-trivial),
///   H(A,ε; B,ε; x) = q·H(A; B; x) − [x ≠ 0]            (C = ε),
///
/// where m is the arity after removing the pair. Agreement with the direct
/// sum is an internal consistency check exercised by the test suite.
pub fn tghf_via_reduction(tbl: &CharTable, params: &ParamList, x: FqElem) -> AlgValue {
    let m = tbl.m();
    let prec = tbl.prec;
    let p = params.normalized(m);
    // Find one common pair, preferring a non-trivial one.
    let common = p
        .upper
        .iter()
        .position(|a| *a % m != 0 && p.lower.contains(a))
        .or_else(|| p.upper.iter().position(|a| p.lower.contains(a)));
    let Some(ai) = common else {
        return tghf(tbl, &p, x);
    };
    let c = p.upper[ai];
    let mut rest = p.clone();
    rest.upper.remove(ai);
    let bi = rest.lower.iter().position(|&b| b == c).unwrap();
    rest.lower.remove(bi);
    let inner = tghf_via_reduction(tbl, &rest, x);
    let corr = cancellation_correction(tbl, c, &rest, x);
    if c % m == 0 {
        AlgValue::from_int(prec, tbl.field.q as i64) * inner + corr
    } else {
        inner + corr
    }
}

/// The exact correction attached to cancelling one common parameter C from
/// both sides, with `residual` the lists after the removal:
///
///   H(A,C; B,C; x) = H(A; B; x) + correction            (C non-trivial),
///   H(A,ε; B,ε; x) = q·H(A; B; x) + correction          (C = ε).
///
/// For non-trivial C the correction is the χ = C^{−1} boundary term
/// −(1/q)·∏_i G(A_iC^{−1})/G(A_i)·∏_i G((B_iC^{−1})^{−1})/G(B_i^{−1})
/// ·C((−1)^m)·C^{−1}(x); for C = ε it is −[x ≠ 0].
pub fn cancellation_correction(
    tbl: &CharTable,
    common: u64,
    residual: &ParamList,
    x: FqElem,
) -> AlgValue {
    let m = tbl.m();
    let prec = tbl.prec;
    if common % m == 0 {
        return if tbl.field.dlog(x).is_some() {
            -AlgValue::one(prec)
        } else {
            AlgValue::zero(prec)
        };
    }
    let ci = (common % m) as i64;
    let mut corr = tbl.char_value(-ci, x);
    if residual.arity() % 2 == 1 {
        corr = corr * tbl.char_value(ci, tbl.field.neg(tbl.field.one()));
    }
    for &a in &residual.upper {
        corr = corr * tbl.gauss(a as i64 - ci) / tbl.gauss(a as i64);
    }
    for &b in &residual.lower {
        corr = corr * tbl.gauss(-(b as i64 - ci)) / tbl.gauss(-(b as i64));
    }
    -corr / AlgValue::from_int(prec, tbl.field.q as i64)
}

/// Symbolic form of the reduction corrections. For level-1 `tbl` and x ≠ 0,
/// returns (e, reduced, terms) such that at every level r
///
///   H_full,r = q^{r·e}·H_red,r + Σ_k coef_k·base_k^r,
///
/// where H_full,r / H_red,r are the transforms with index-scaled parameter
/// lists and the argument embedded into F_{q^r}. Each correction lifts as an
/// exact r-th power because Gauss-sum ratios and character values of base
/// field elements do: G(χ_r)/G(χ'_r) = (−G(χ))^r/(−G(χ'))^r and
/// χ_r(x) = χ(N(x)) = χ(x)^r.
pub fn reduction_ledger(
    tbl: &CharTable,
    params: &ParamList,
    x: FqElem,
) -> (u32, ParamList, Vec<(AlgValue, i64)>) {
    assert_eq!(tbl.level(), 1, "the ledger is built from level-1 data");
    assert!(tbl.field.dlog(x).is_some(), "x must be nonzero");
    let m = tbl.m();
    let prec = tbl.prec;
    let p = params.normalized(m);
    let common = p
        .upper
        .iter()
        .position(|a| *a % m != 0 && p.lower.contains(a))
        .or_else(|| p.upper.iter().position(|a| p.lower.contains(a)));
    let Some(ai) = common else {
        return (0, p, vec![]);
    };
    let c = p.upper[ai];
    let mut rest = p.clone();
    rest.upper.remove(ai);
    let bi = rest.lower.iter().position(|&b| b == c).unwrap();
    rest.lower.remove(bi);
    let (e, red, mut terms) = reduction_ledger(tbl, &rest, x);
    let corr1 = cancellation_correction(tbl, c, &rest, x);
    if c % m == 0 {
        // H = q^r·H_rest − 1.
        let q = AlgValue::from_int(prec, tbl.field.q as i64);
        for (base, _) in &mut terms {
            *base = &*base * &q;
        }
        terms.push((AlgValue::one(prec), -1));
        (e + 1, red, terms)
    } else {
        // H = H_rest + corr with corr_r = −(−corr₁)^r.
        terms.push((-corr1, -1));
        (e, red, terms)
    }
}

/// Both sides of the multiplication identity that turns the full character
/// sum over power characters into an index-dilated transform. With
/// A_i = ρ^{a_i}, B = ρ^b, φ_β = ρ^{m/β} of order β, and α = Σ α_i:
///
///   Σ_χ ∏_i G((A_iχ)^{−α_i}) · G((Bχ)^α) · χ((−1)^α x)
///     = (q−1) ∏_i A_i(α_i^{−α_i}) · B(α^α)
///       · ∏_i { G(A_i^{−1}) ∏_{s=1}^{α_i−1} G(A_i^{−1}φ_{α_i}^s)/G(φ_{α_i}^s) }
///       · G(B) ∏_{s=1}^{α−1} G(Bφ_α^s)/G(φ_α^s)
///       · H(B[φ_α]; A_1[φ_{α_1}],…,A_{n+1}[φ_{α_{n+1}}]; α^α ∏_i α_i^{−α_i} x),
///
/// where X[φ_β] is the orbit list {Xφ_β^s}. Each α_i and α must divide q−1.
/// Returns (sum side, transform side); equality is a library invariant.
pub fn multi_hyper_sides(
    tbl: &CharTable,
    alphas: &[u64],
    a_idx: &[u64],
    b_idx: u64,
    x: FqElem,
) -> (AlgValue, AlgValue) {
    let m = tbl.m();
    let prec = tbl.prec;
    let alpha: u64 = alphas.iter().sum();
    assert!(alphas.iter().chain([&alpha]).all(|&v| m % v == 0));
    assert_eq!(alphas.len(), a_idx.len());
    let field = &tbl.field;

    // Sum side.
    let x_eff = if alpha % 2 == 1 { field.neg(x) } else { x };
    let mut lhs = AlgValue::zero(prec);
    for k in 0..m as i64 {
        let mut term = tbl.char_value(k, x_eff);
        for (&ai, &a) in alphas.iter().zip(a_idx) {
            term = term * tbl.gauss(-(ai as i64) * (a as i64 + k));
        }
        term = term * tbl.gauss(alpha as i64 * (b_idx as i64 + k));
        lhs = lhs + term;
    }

    // Transform side.
    let mut pref = AlgValue::from_int(prec, m as i64);
    for (&ai, &a) in alphas.iter().zip(a_idx) {
        let cst = field.pow(field.from_int(ai as i64), -(ai as i64));
        pref = pref * tbl.char_value(a as i64, cst);
        pref = pref * tbl.gauss(-(a as i64));
        for s in 1..ai as i64 {
            let step = s * (m / ai) as i64;
            pref = pref * tbl.gauss(-(a as i64) + step) / tbl.gauss(step);
        }
    }
    let cst = field.pow(field.from_int(alpha as i64), alpha as i64);
    pref = pref * tbl.char_value(b_idx as i64, cst);
    pref = pref * tbl.gauss(b_idx as i64);
    for s in 1..alpha as i64 {
        let step = s * (m / alpha) as i64;
        pref = pref * tbl.gauss(b_idx as i64 + step) / tbl.gauss(step);
    }
    let upper: Vec<u64> = (0..alpha).map(|s| (b_idx + s * (m / alpha)) % m).collect();
    let mut lower = Vec::new();
    for (&ai, &a) in alphas.iter().zip(a_idx) {
        for s in 0..ai {
            lower.push((a + s * (m / ai)) % m);
        }
    }
    let mut arg = field.pow(field.from_int(alpha as i64), alpha as i64);
    for &ai in alphas {
        arg = field.mul(arg, field.pow(field.from_int(ai as i64), -(ai as i64)));
    }
    arg = field.mul(arg, x);
    let rhs = pref * tghf(tbl, &ParamList::new(upper, lower), arg);
    (lhs, rhs)
}

/// Frobenius trace of the hypergeometric sheaf attached to disjoint
/// parameter lists of equal length n+1:
///
///   r ↦ ∏_i G(A_i) G(B_i) · H(A; B; x^{−1})
///
/// a pure Weil function of weight 2n+1 for x ∉ {0, 1}.
pub fn sheaf_trace(tbl: &CharTable, params: &ParamList, x: FqElem) -> AlgValue {
    assert_eq!(
        params.upper.len(),
        params.lower.len(),
        "sheaf trace requires equally many upper and lower parameters"
    );
    let mut acc = tghf(tbl, params, tbl.field.inv(x));
    for &a in &params.upper {
        acc = acc * tbl.gauss(a as i64);
    }
    for &b in &params.lower {
        acc = acc * tbl.gauss(b as i64);
    }
    acc
}
