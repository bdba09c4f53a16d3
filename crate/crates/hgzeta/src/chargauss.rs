//! Multiplicative characters, the additive character θ, and Gauss sums.
//!
//! Characters of F_{q^r}^× are powers ρ^k of the canonical generator
//! character (ρ(g) = e^{2πi/(q^r−1)}), indexed by k. Gauss sums for all k at
//! a level are precomputed in one pass: a discrete Fourier transform of
//! t ↦ θ(g^t), evaluated naively for small group orders and by Bluestein's
//! chirp-z reduction to a power-of-two FFT for large ones.

use crate::algval::{roots_of_unity, AlgValue};
use crate::error::{Error, Result};
use crate::ffield::{FieldCtx, FqElem, DEFAULT_TABLE_CAP};
use std::sync::{Arc, OnceLock};

/// χ = ρ_level^k.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CharIndex {
    pub k: u64,
    pub level: u32,
}

impl CharIndex {
    pub fn is_trivial(&self, m: u64) -> bool {
        self.k % m == 0
    }
}

pub struct CharTable {
    pub field: FieldCtx,
    pub prec: u32,
    /// e^{2πi·t/m} for t < m = q^r − 1.
    pub zeta_m: Vec<AlgValue>,
    /// e^{2πi·t/p} for t < p.
    pub zeta_p: Vec<AlgValue>,
    gauss: Vec<AlgValue>,
}

const NAIVE_DFT_LIMIT: u64 = 2048;

impl CharTable {
    pub fn new(field: FieldCtx, prec: u32) -> CharTable {
        let m = field.m;
        let zeta_m = roots_of_unity(m as usize, prec);
        let zeta_p = roots_of_unity(field.p as usize, prec);
        // v_t = θ(g^t)
        let v: Vec<AlgValue> = (0..m)
            .map(|t| zeta_p[field.trace_to_prime(field.exp_gen(t)) as usize].clone())
            .collect();
        let gauss = if m <= NAIVE_DFT_LIMIT {
            naive_dft(&v, &zeta_m)
        } else {
            bluestein_dft(&v, prec)
        };
        CharTable {
            field,
            prec,
            zeta_m,
            zeta_p,
            gauss,
        }
    }

    pub fn m(&self) -> u64 {
        self.field.m
    }

    pub fn level(&self) -> u32 {
        self.field.r
    }

    /// ρ^k(x); zero at x = 0.
    pub fn char_value(&self, k: i64, x: FqElem) -> AlgValue {
        match self.field.dlog(x) {
            None => AlgValue::zero(self.prec),
            Some(t) => {
                let m = self.m() as i128;
                let idx = (k as i128 * t as i128).rem_euclid(m) as usize;
                self.zeta_m[idx].clone()
            }
        }
    }

    /// θ(x) = e^{2πi·Tr(x)/p}.
    pub fn theta(&self, x: FqElem) -> AlgValue {
        self.zeta_p[self.field.trace_to_prime(x) as usize].clone()
    }

    /// G(ρ^k), from the precomputed table.
    pub fn gauss(&self, k: i64) -> &AlgValue {
        let idx = k.rem_euclid(self.m() as i64) as usize;
        &self.gauss[idx]
    }

    /// G(ρ^k) by a direct sum, bypassing the table (re-evaluation oracle).
    pub fn gauss_fresh(&self, k: i64) -> AlgValue {
        let mut acc = AlgValue::zero(self.prec);
        for x in self.field.units() {
            acc = acc + self.theta(x) * self.char_value(k, x);
        }
        acc
    }
}

fn naive_dft(v: &[AlgValue], zeta: &[AlgValue]) -> Vec<AlgValue> {
    let m = v.len();
    let prec = zeta[0].prec();
    (0..m)
        .map(|k| {
            let mut acc = AlgValue::zero(prec);
            for (t, vt) in v.iter().enumerate() {
                acc = acc + vt * &zeta[k * t % m];
            }
            acc
        })
        .collect()
}

/// X_k = Σ_t v_t e^{2πi·kt/m} via Bluestein: kt = (k² + t² − (k−t)²)/2.
fn bluestein_dft(v: &[AlgValue], prec: u32) -> Vec<AlgValue> {
    let m = v.len();
    let z2 = roots_of_unity(2 * m, prec); // e^{πi·s/m}
    let chirp = |s: usize| -> &AlgValue { &z2[(s * s) % (2 * m)] };
    let len = (2 * m - 1).next_power_of_two();
    let mut a = vec![AlgValue::zero(prec); len];
    let mut b = vec![AlgValue::zero(prec); len];
    for t in 0..m {
        a[t] = &v[t] * chirp(t);
        let c = chirp(t).conj();
        if t > 0 {
            b[len - t] = c.clone();
        }
        b[t] = c;
    }
    let tw = roots_of_unity(len, prec);
    fft(&mut a, &tw, false);
    fft(&mut b, &tw, false);
    for (x, y) in a.iter_mut().zip(&b) {
        *x = &*x * y;
    }
    fft(&mut a, &tw, true);
    let scale = AlgValue::from_int(prec, len as i64).recip();
    (0..m).map(|k| chirp(k) * &a[k] * &scale).collect()
}

/// In-place radix-2 FFT; `inverse` conjugates the twiddles (no scaling).
fn fft(buf: &mut [AlgValue], twiddles: &[AlgValue], inverse: bool) {
    let n = buf.len();
    debug_assert!(n.is_power_of_two());
    // Bit-reversal permutation.
    let mut j = 0usize;
    for i in 1..n {
        let mut bit = n >> 1;
        while j & bit != 0 {
            j ^= bit;
            bit >>= 1;
        }
        j |= bit;
        if i < j {
            buf.swap(i, j);
        }
    }
    let mut width = 2;
    while width <= n {
        let step = n / width;
        for start in (0..n).step_by(width) {
            for off in 0..width / 2 {
                let idx = off * step;
                let w = if inverse && idx > 0 {
                    twiddles[n - idx].clone()
                } else {
                    twiddles[idx].clone()
                };
                let u = buf[start + off].clone();
                let t = &buf[start + off + width / 2] * &w;
                buf[start + off] = &u + &t;
                buf[start + off + width / 2] = &u - &t;
            }
        }
        width <<= 1;
    }
}

/// G(ρ^k) with a CharIndex level check.
pub fn gauss_sum(tbl: &CharTable, chi: CharIndex) -> Result<AlgValue> {
    if chi.level != tbl.level() {
        return Err(Error::LevelMismatch(chi.level, tbl.level()));
    }
    Ok(tbl.gauss(chi.k as i64).clone())
}

/// χ(x) with a CharIndex level check.
pub fn eval_char(tbl: &CharTable, chi: CharIndex, x: FqElem) -> Result<AlgValue> {
    if chi.level != tbl.level() {
        return Err(Error::LevelMismatch(chi.level, tbl.level()));
    }
    Ok(tbl.char_value(chi.k as i64, x))
}

/// Lifting identity data: (−G(χ_r), (−G(χ))^r) for χ = ρ^k at level 1.
pub fn dh_lift_check(level1: &CharTable, level_r: &CharTable, k: u64) -> (AlgValue, AlgValue) {
    let scale = level_r.m() / level1.m();
    let lifted_k = (k % level1.m()) * scale;
    let lhs = -level_r.gauss(lifted_k as i64);
    let rhs = (-level1.gauss(k as i64)).powi(level_r.level() as u64 / level1.level() as u64);
    (lhs, rhs)
}

/// Multiplication identity data: (direct G(χ^β), product form) for χ = ρ^k.
pub fn dh_multiplication(tbl: &CharTable, k: i64, beta: u64) -> (AlgValue, AlgValue) {
    let m = tbl.m();
    assert!(beta > 0 && m % beta == 0, "β must divide the group order");
    let direct = tbl.gauss(k * beta as i64).clone();
    let phi = (m / beta) as i64;
    let mut rhs = tbl.gauss(k).clone();
    for s in 1..beta as i64 {
        rhs = rhs * tbl.gauss(k + s * phi) / tbl.gauss(s * phi);
    }
    // χ(β^β)
    let beta_elem = tbl.field.from_int(beta as i64);
    rhs = rhs * tbl.char_value(k, tbl.field.pow(beta_elem, beta as i64));
    (direct, rhs)
}

/// Lazily built character/Gauss tables for levels 1..=r_max over one base
/// field F_q = F_{p^f}.
pub struct CharTower {
    pub p: u64,
    pub f: u32,
    pub prec: u32,
    pub cap: u64,
    levels: Vec<OnceLock<Arc<CharTable>>>,
}

impl CharTower {
    pub fn new(p: u64, f: u32, r_max: u32, prec: u32) -> CharTower {
        CharTower::with_cap(p, f, r_max, prec, DEFAULT_TABLE_CAP)
    }

    pub fn with_cap(p: u64, f: u32, r_max: u32, prec: u32, cap: u64) -> CharTower {
        CharTower {
            p,
            f,
            prec,
            cap,
            levels: (0..r_max).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn r_max(&self) -> u32 {
        self.levels.len() as u32
    }

    pub fn level(&self, r: u32) -> Result<Arc<CharTable>> {
        assert!(r >= 1 && r <= self.r_max(), "level out of range");
        let cell = &self.levels[(r - 1) as usize];
        if let Some(t) = cell.get() {
            return Ok(t.clone());
        }
        let field = FieldCtx::with_cap(self.p, self.f, r, self.cap)?;
        let table = Arc::new(CharTable::new(field, self.prec));
        Ok(cell.get_or_init(|| table).clone())
    }
}
