//! p-adic arithmetic in W(F_q)/p^m and the unit-root pipeline.
//!
//! The ring W(F_q)/p^m is realized as (Z/p^m)[x]/(h̃) with h̃ the monic lift
//! of the residue-field modulus. The Frobenius σ fixes Z/p^m and sends x to
//! the unique root of h̃ congruent to x^p mod p (Hensel lifting); Teichmüller
//! lifts are the fixed points of t ↦ t^q.
//!
//! The hypergeometric series 𝓕(x) attached to a family has the exact integer
//! coefficients (kα)!/((kα_1)!…(kα_{n+1})!)·∏_i c̃_i^{kα_i}, so truncations
//! evaluate p-integrally; the unit root is the σ-orbit product of the
//! stabilized truncation ratio f(λ̃^{−α}) = 𝓕(λ̃^{−α})/σ(𝓕)(λ̃^{−α}).

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::ffield::{FieldCtx, FqElem};
use rug::ops::{Pow, RemRounding};
use rug::{Integer, Rational};

/// Element of W(F_q)/p^m: residue polynomial of degree < f over Z/p^m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PadicElem {
    pub coeffs: Vec<Integer>,
}

/// Arithmetic context for W(F_q)/p^m.
#[derive(Clone, Debug)]
pub struct PadicCtx {
    pub p: u64,
    /// Residue degree: q = p^f.
    pub f: usize,
    /// Precision exponent m.
    pub m: u32,
    /// p^m.
    pub pm: Integer,
    /// Monic modulus h̃, coefficients c_0..c_f with c_f = 1, lifted from the
    /// residue-field modulus.
    pub modulus: Vec<Integer>,
    /// σ(x): image of the generator under Frobenius (zero polynomial if f=1).
    frob_x: Vec<Integer>,
}

impl PadicCtx {
    /// Build the context over the level-1 field `field` at precision p^m.
    pub fn new(field: &FieldCtx, m: u32) -> PadicCtx {
        assert_eq!(field.r, 1, "the p-adic lift sits over the base field");
        let p = field.p;
        let f = field.f as usize;
        let pm = Integer::from(p).pow(m);
        let modulus: Vec<Integer> = field.modulus.iter().map(|&c| Integer::from(c)).collect();
        let mut ctx = PadicCtx {
            p,
            f,
            m,
            pm,
            modulus,
            frob_x: vec![Integer::new(); f],
        };
        if f > 1 {
            ctx.frob_x = ctx.hensel_frobenius_image();
        }
        ctx
    }

    // ----- element constructors -----

    pub fn zero(&self) -> PadicElem {
        PadicElem {
            coeffs: vec![Integer::new(); self.f],
        }
    }

    pub fn one(&self) -> PadicElem {
        self.from_int(1)
    }

    pub fn from_int(&self, v: i64) -> PadicElem {
        self.from_integer(&Integer::from(v))
    }

    pub fn from_integer(&self, v: &Integer) -> PadicElem {
        let mut e = self.zero();
        e.coeffs[0] = v.clone().rem_euc(&self.pm);
        e
    }

    /// Naive digit lift of a residue-field element (not Teichmüller).
    pub fn lift(&self, field: &FieldCtx, a: FqElem) -> PadicElem {
        assert_eq!(field.p, self.p);
        let mut e = self.zero();
        let mut enc = a.0;
        for c in e.coeffs.iter_mut() {
            *c = Integer::from(enc % self.p);
            enc /= self.p;
        }
        e
    }

    /// Reduction back to the residue field.
    pub fn residue(&self, field: &FieldCtx, a: &PadicElem) -> FqElem {
        assert_eq!(field.p, self.p);
        let mut enc = 0u64;
        for c in a.coeffs.iter().rev() {
            enc = enc * self.p + c.clone().rem_euc(Integer::from(self.p)).to_u64().unwrap();
        }
        FqElem(enc)
    }

    // ----- ring operations -----

    fn reduce(&self, a: &mut PadicElem) {
        for c in a.coeffs.iter_mut() {
            *c = c.clone().rem_euc(&self.pm);
        }
    }

    pub fn add(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let mut out = self.zero();
        for i in 0..self.f {
            out.coeffs[i] = Integer::from(&a.coeffs[i] + &b.coeffs[i]).rem_euc(&self.pm);
        }
        out
    }

    pub fn sub(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        let mut out = self.zero();
        for i in 0..self.f {
            out.coeffs[i] = Integer::from(&a.coeffs[i] - &b.coeffs[i]).rem_euc(&self.pm);
        }
        out
    }

    pub fn neg(&self, a: &PadicElem) -> PadicElem {
        self.sub(&self.zero(), a)
    }

    pub fn mul(&self, a: &PadicElem, b: &PadicElem) -> PadicElem {
        if self.f == 1 {
            let mut out = self.zero();
            out.coeffs[0] = Integer::from(&a.coeffs[0] * &b.coeffs[0]).rem_euc(&self.pm);
            return out;
        }
        let mut prod = vec![Integer::new(); 2 * self.f - 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                prod[i + j] += Integer::from(ai * bj);
            }
        }
        // Reduce by the monic modulus.
        for k in (self.f..prod.len()).rev() {
            let lead = std::mem::take(&mut prod[k]);
            if lead.cmp0() == std::cmp::Ordering::Equal {
                continue;
            }
            for (j, hj) in self.modulus.iter().enumerate().take(self.f) {
                let sub = Integer::from(&lead * hj);
                prod[k - self.f + j] -= sub;
            }
        }
        prod.truncate(self.f);
        let mut out = PadicElem { coeffs: prod };
        self.reduce(&mut out);
        out
    }

    pub fn scale(&self, a: &PadicElem, v: &Integer) -> PadicElem {
        let mut out = a.clone();
        for c in out.coeffs.iter_mut() {
            *c = Integer::from(&*c * v).rem_euc(&self.pm);
        }
        out
    }

    pub fn pow(&self, a: &PadicElem, e: u64) -> PadicElem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    pub fn is_zero(&self, a: &PadicElem) -> bool {
        a.coeffs.iter().all(|c| c.cmp0() == std::cmp::Ordering::Equal)
    }

    /// Unit test: nonzero residue mod p.
    pub fn is_unit(&self, a: &PadicElem) -> bool {
        let p = Integer::from(self.p);
        a.coeffs.iter().any(|c| c.clone().rem_euc(&p).cmp0() != std::cmp::Ordering::Equal)
    }

    /// Inverse of a unit, by Newton iteration from the mod-p inverse.
    pub fn inv(&self, a: &PadicElem) -> Result<PadicElem> {
        if !self.is_unit(a) {
            return Err(Error::PrecisionLoss);
        }
        // Inverse mod p via a^{q−2} in the residue field arithmetic.
        let q = (self.p as u128).pow(self.f as u32);
        let mut z = self.pow_mod_p(a, (q - 2) as u64);
        // z ← z(2 − az) doubles the correct precision each step.
        let two = self.from_int(2);
        let mut k = 1u32;
        while k < self.m {
            let az = self.mul(a, &z);
            z = self.mul(&z, &self.sub(&two, &az));
            k *= 2;
        }
        Ok(z)
    }

    pub fn div(&self, a: &PadicElem, b: &PadicElem) -> Result<PadicElem> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Power computed with all coefficients reduced mod p along the way.
    fn pow_mod_p(&self, a: &PadicElem, e: u64) -> PadicElem {
        let p = Integer::from(self.p);
        let red = |x: &PadicElem| {
            let mut y = x.clone();
            for c in y.coeffs.iter_mut() {
                *c = c.clone().rem_euc(&p);
            }
            y
        };
        let mut acc = self.one();
        let mut base = red(a);
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = red(&self.mul(&acc, &base));
            }
            base = red(&self.mul(&base, &base));
            e >>= 1;
        }
        acc
    }

    // ----- Frobenius and Teichmüller -----

    /// Hensel-lift the root of h̃ congruent to x^p mod p.
    fn hensel_frobenius_image(&self) -> Vec<Integer> {
        // Start from x^p in the ring (exact mod p, a root of h̃ mod p).
        let mut x = self.zero();
        x.coeffs[1] = Integer::from(1);
        let mut z = self.pow(&x, self.p);
        // Newton: z ← z − h̃(z)/h̃'(z).
        for _ in 0..self.m.ilog2() + 2 {
            let hz = self.eval_modulus(&z);
            if self.is_zero(&hz) {
                break;
            }
            let dz = self.eval_modulus_derivative(&z);
            let step = self.mul(&hz, &self.inv(&dz).expect("h̃ is separable mod p"));
            z = self.sub(&z, &step);
        }
        debug_assert!(self.is_zero(&self.eval_modulus(&z)));
        z.coeffs
    }

    fn eval_modulus(&self, z: &PadicElem) -> PadicElem {
        let mut acc = self.zero();
        for c in self.modulus.iter().rev() {
            acc = self.mul(&acc, z);
            acc = self.add(&acc, &self.from_integer(c));
        }
        acc
    }

    fn eval_modulus_derivative(&self, z: &PadicElem) -> PadicElem {
        let mut acc = self.zero();
        for (k, c) in self.modulus.iter().enumerate().skip(1).rev() {
            acc = self.mul(&acc, z);
            acc = self.add(&acc, &self.from_integer(&Integer::from(c * Integer::from(k))));
        }
        acc
    }

    /// The Frobenius σ: coefficient-wise identity on Z/p^m, x ↦ frob_x.
    pub fn frobenius(&self, a: &PadicElem) -> PadicElem {
        if self.f == 1 {
            return a.clone();
        }
        let z = PadicElem {
            coeffs: self.frob_x.clone(),
        };
        let mut acc = self.zero();
        for c in a.coeffs.iter().rev() {
            acc = self.mul(&acc, &z);
            acc = self.add(&acc, &self.from_integer(c));
        }
        acc
    }

    /// Teichmüller lift: the unique root-of-unity (or zero) lift, computed as
    /// the limit of t ↦ t^q starting from the digit lift.
    pub fn teichmuller(&self, field: &FieldCtx, a: FqElem) -> PadicElem {
        let mut t = self.lift(field, a);
        if a.0 == 0 {
            return t;
        }
        let q = field.q;
        for _ in 0..self.m {
            t = self.pow(&t, q);
        }
        t
    }

    /// Equality modulo p^k (k ≤ m).
    pub fn eq_mod(&self, a: &PadicElem, b: &PadicElem, k: u32) -> bool {
        let pk = Integer::from(self.p).pow(k);
        a.coeffs
            .iter()
            .zip(&b.coeffs)
            .all(|(x, y)| Integer::from(x - y).is_divisible(&pk))
    }

    /// Reduce an exact rational with denominator prime to p.
    pub fn from_rational(&self, r: &Rational) -> Result<PadicElem> {
        let num = self.from_integer(r.numer());
        let den = self.from_integer(r.denom());
        self.div(&num, &den)
    }
}

/// A truncated power series over W(F_q)/p^m.
#[derive(Clone, Debug)]
pub struct TruncSeries {
    pub coeffs: Vec<PadicElem>,
}

impl TruncSeries {
    pub fn eval(&self, ctx: &PadicCtx, x: &PadicElem) -> PadicElem {
        let mut acc = ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = ctx.mul(&acc, x);
            acc = ctx.add(&acc, c);
        }
        acc
    }
}

/// Streaming generator of the multinomial numbers M_k = (kα)!/∏_i (kα_i)!,
/// held as p^v·u with u a unit mod p^m, advanced by exact ratio steps with
/// powers of p stripped from numerator and denominator separately.
struct MultinomialStream {
    alphas: Vec<u64>,
    alpha: u64,
    p: u64,
    pm: Integer,
    /// Precision exponent: p^mexp = pm.
    mexp: u32,
    k: u64,
    /// Cumulative p-adic valuation of M_k (always ≥ 0: M_k is an integer).
    v: i64,
    /// Unit part of M_k mod p^m.
    u: Integer,
}

impl MultinomialStream {
    fn new(alphas: &[u64], p: u64, mexp: u32) -> MultinomialStream {
        MultinomialStream {
            alphas: alphas.to_vec(),
            alpha: alphas.iter().sum(),
            p,
            pm: Integer::from(p).pow(mexp),
            mexp,
            k: 0,
            v: 0,
            u: Integer::from(1),
        }
    }

    /// Strip powers of p from j; returns (unit part mod p^m, valuation).
    fn strip(&self, mut j: u64) -> (u64, i64) {
        let mut v = 0;
        while j % self.p == 0 {
            j /= self.p;
            v += 1;
        }
        (j, v)
    }

    /// Advance from M_k to M_{k+1}.
    fn advance(&mut self) -> Result<()> {
        let k = self.k;
        for j in k * self.alpha + 1..=(k + 1) * self.alpha {
            let (u, v) = self.strip(j);
            self.v += v;
            self.u = Integer::from(&self.u * Integer::from(u)).rem_euc(&self.pm);
        }
        for &ai in &self.alphas {
            for j in k * ai + 1..=(k + 1) * ai {
                let (u, v) = self.strip(j);
                self.v -= v;
                let inv = Integer::from(u)
                    .invert(&self.pm)
                    .map_err(|_| Error::PrecisionLoss)?;
                self.u = Integer::from(&self.u * inv).rem_euc(&self.pm);
            }
        }
        if self.v < 0 {
            return Err(Error::PrecisionLoss);
        }
        self.k += 1;
        Ok(())
    }

    /// M_k as an integer mod p^m.
    fn value(&self) -> Integer {
        if self.v as u32 >= self.mexp {
            return Integer::new();
        }
        let pv = Integer::from(self.p).pow(self.v as u32);
        Integer::from(&self.u * pv).rem_euc(&self.pm)
    }
}

/// Teichmüller lifts c̃_i of the family coefficients.
pub fn lift_coefficients(spec: &FamilySpec, ctx: &PadicCtx) -> Vec<PadicElem> {
    spec.c
        .iter()
        .map(|&ci| ctx.teichmuller(&spec.field, ci))
        .collect()
}

/// C̃ = α^α ∏_i c̃_i^{α_i} / α_i^{α_i} over W(F_q)/p^m with Teichmüller c̃_i.
pub fn lift_c_constant(spec: &FamilySpec, ctx: &PadicCtx) -> Result<PadicElem> {
    let at = spec.alpha.alpha_total;
    let mut acc = ctx.pow(&ctx.from_int(at as i64), at);
    for (ct, &ai) in lift_coefficients(spec, ctx).iter().zip(&spec.alpha.alphas) {
        acc = ctx.mul(&acc, &ctx.pow(ct, ai));
        let den = ctx.pow(&ctx.from_int(ai as i64), ai);
        acc = ctx.div(&acc, &den)?;
    }
    Ok(acc)
}

/// The series 𝓕 as an explicit truncation to `len` coefficients. The k-th
/// coefficient is (kα)!/∏(kα_i)!·∏ c̃_i^{kα_i}, an exact p-integral value.
pub fn f_series(spec: &FamilySpec, ctx: &PadicCtx, len: u64) -> Result<TruncSeries> {
    let lifts = lift_coefficients(spec, ctx);
    let mut cpow = ctx.one(); // ∏ c̃_i^{kα_i}
    let step: PadicElem = {
        let mut s = ctx.one();
        for (ct, &ai) in lifts.iter().zip(&spec.alpha.alphas) {
            s = ctx.mul(&s, &ctx.pow(ct, ai));
        }
        s
    };
    let mut stream = MultinomialStream::new(&spec.alpha.alphas, spec.p, ctx.m);
    let mut coeffs = Vec::with_capacity(len as usize);
    for k in 0..len {
        if k > 0 {
            stream.advance()?;
            cpow = ctx.mul(&cpow, &step);
        }
        coeffs.push(ctx.scale(&cpow, &stream.value()));
    }
    Ok(TruncSeries { coeffs })
}

/// Evaluate the truncation 𝓕_{1,s} (degree p^s − 1) at x.
pub fn eval_f_trunc(spec: &FamilySpec, ctx: &PadicCtx, x: &PadicElem, s: u32) -> Result<PadicElem> {
    let cut = (spec.p as u128).pow(s);
    let cut = u64::try_from(cut).map_err(|_| Error::BudgetExceeded(u64::MAX, u64::MAX))?;
    Ok(eval_f_prefixes(spec, ctx, x, &[cut])?.pop().unwrap())
}

/// Evaluate Σ_{k<K} c_k x^k for every K in `cuts` (ascending) in one pass.
fn eval_f_prefixes(
    spec: &FamilySpec,
    ctx: &PadicCtx,
    x: &PadicElem,
    cuts: &[u64],
) -> Result<Vec<PadicElem>> {
    debug_assert!(cuts.windows(2).all(|w| w[0] <= w[1]));
    let lifts = lift_coefficients(spec, ctx);
    let step: PadicElem = {
        let mut s = ctx.one();
        for (ct, &ai) in lifts.iter().zip(&spec.alpha.alphas) {
            s = ctx.mul(&s, &ctx.pow(ct, ai));
        }
        s
    };
    // y = (∏c̃_i^{α_i})·x folds the coefficient power into the argument.
    let y = ctx.mul(&step, x);
    let mut stream = MultinomialStream::new(&spec.alpha.alphas, spec.p, ctx.m);
    let mut acc = ctx.zero();
    let mut ypow = ctx.one();
    let mut out = Vec::with_capacity(cuts.len());
    let last = *cuts.last().unwrap();
    let mut ci = 0usize;
    for k in 0..last {
        while ci < cuts.len() && cuts[ci] == k {
            out.push(acc.clone());
            ci += 1;
        }
        if k > 0 {
            stream.advance()?;
            ypow = ctx.mul(&ypow, &y);
        }
        // Skip the multiplication when the coefficient vanishes mod p^m.
        if (stream.v as u32) < ctx.m {
            let term = ctx.scale(&ypow, &stream.value());
            acc = ctx.add(&acc, &term);
        }
    }
    while ci < cuts.len() {
        out.push(acc.clone());
        ci += 1;
    }
    Ok(out)
}

/// 𝓕_{1,1}(λ^{−α}) in the residue field: the ordinariness criterion value.
pub fn f11_residue(spec: &FamilySpec, lam: FqElem) -> FqElem {
    let field = &spec.field;
    assert!(lam.0 != 0);
    let x = field.pow(lam, -(spec.alpha.alpha_total as i64));
    let mut stream = MultinomialStream::new(&spec.alpha.alphas, spec.p, 1);
    let step: FqElem = {
        let mut s = field.one();
        for (&ci, &ai) in spec.c.iter().zip(&spec.alpha.alphas) {
            s = field.mul(s, field.pow(ci, ai as i64));
        }
        s
    };
    let y = field.mul(step, x);
    let mut acc = field.zero();
    let mut ypow = field.one();
    for k in 0..spec.p {
        if k > 0 {
            stream.advance().expect("multinomial numbers are integers");
            ypow = field.mul(ypow, y);
        }
        if stream.v == 0 {
            let m = field.from_int(stream.u.to_i64().unwrap());
            acc = field.add(acc, field.mul(m, ypow));
        }
    }
    acc
}

/// The two independent evaluations of the coefficient of τ^{m+1}/(m+1) in
/// the formal-group logarithm of the deformation with parameter Λ:
///
///  (a) Σ_{kα ≤ m} m!/((kα_1)!…(kα_{n+1})!(m−kα)!)·∏ c̃_i^{kα_i}·(−Λ)^{m−kα},
///  (b) (−Λ)^m · F(−m/α,…,(−m+α−1)/α; lower α_i-orbit lists; C̃Λ^{−α}),
///
/// the terminating hypergeometric sum in (b) evaluated by exact rational
/// Pochhammer products. Equality of the pair is a library invariant.
pub fn fgl_log_coefficient(
    spec: &FamilySpec,
    ctx: &PadicCtx,
    lam_lift: &PadicElem,
    m: u64,
) -> Result<(PadicElem, PadicElem)> {
    let alphas = &spec.alpha.alphas;
    let alpha = spec.alpha.alpha_total;
    let lifts = lift_coefficients(spec, ctx);
    let neg_lam = ctx.neg(lam_lift);

    // (a) multinomial form, with exact integer multinomials.
    let mut form_a = ctx.zero();
    let m_fact = Integer::from(Integer::factorial(m as u32));
    for k in 0..=(m / alpha) {
        let mut denom = Integer::from(Integer::factorial((m - k * alpha) as u32));
        for &ai in alphas {
            denom *= Integer::from(Integer::factorial((k * ai) as u32));
        }
        let multinom = Integer::from(&m_fact / &denom);
        debug_assert_eq!(Integer::from(&multinom * &denom), m_fact);
        let mut term = ctx.from_integer(&multinom);
        for (ct, &ai) in lifts.iter().zip(alphas) {
            term = ctx.mul(&term, &ctx.pow(ct, k * ai));
        }
        term = ctx.mul(&term, &ctx.pow(&neg_lam, m - k * alpha));
        form_a = ctx.add(&form_a, &term);
    }

    // (b) terminating hypergeometric form at C̃Λ^{−α}.
    let cbig = lift_c_constant(spec, ctx)?;
    let arg = ctx.mul(&cbig, &ctx.inv(&ctx.pow(lam_lift, alpha))?);
    let poch = |u: &Rational, k: u64| -> Rational {
        let mut acc = Rational::from(1);
        for i in 0..k {
            acc *= u.clone() + Rational::from(i);
        }
        acc
    };
    let mut sum = ctx.zero();
    let mut argpow = ctx.one();
    for k in 0..=(m / alpha) {
        let mut r = Rational::from(1);
        for j in 0..alpha {
            r *= poch(&Rational::from((j as i64 - m as i64, alpha as i64)), k);
        }
        for &ai in alphas {
            for j in 1..ai {
                r /= poch(&Rational::from((j as i64, ai as i64)), k);
            }
        }
        // n ones in the lower list plus the classical 1/k!: (k!)^{n+2−1}.
        let kf = Rational::from(Integer::factorial(k as u32));
        for _ in 0..alphas.len() {
            r /= kf.clone();
        }
        let term = ctx.mul(&ctx.from_rational(&r)?, &argpow);
        sum = ctx.add(&sum, &term);
        argpow = ctx.mul(&argpow, &arg);
    }
    let form_b = ctx.mul(&ctx.pow(&neg_lam, m), &sum);
    Ok((form_a, form_b))
}

/// Height-one criterion on the split-logarithm coefficient a_1: the formal
/// group has height one iff a_1 is a p-adic unit.
pub fn height_one_test(ctx: &PadicCtx, a1: &PadicElem) -> bool {
    ctx.is_unit(a1)
}

/// The p-adic unit root of X_λ at precision p^m, or None when the fiber is
/// supersingular (𝓕_{1,1}(λ^{−α}) = 0 in F_q).
///
/// When ordinary, the value is ∏_{i=0}^{f−1} σ^i(f(λ̃^{−α})) with λ̃ the
/// Teichmüller lift and f approximated by the truncation ratio
/// 𝓕_{1,m}/σ(𝓕_{1,m−1}); the ratio at the next truncation level must agree
/// mod p^m or the computation aborts with a stabilization error.
pub fn unit_root(spec: &FamilySpec, ctx: &PadicCtx, lam: FqElem) -> Result<Option<PadicElem>> {
    if lam.0 == 0 {
        return Err(Error::AssumptionViolation("λ must be nonzero".into()));
    }
    if f11_residue(spec, lam).0 == 0 {
        return Ok(None);
    }
    let m = ctx.m;
    let lam_t = ctx.teichmuller(&spec.field, lam);
    let x = ctx.inv(&ctx.pow(&lam_t, spec.alpha.alpha_total))?;
    let cuts: Vec<u64> = [m - 1, m, m + 1]
        .iter()
        .map(|&s| (spec.p as u128).pow(s))
        .map(|v| u64::try_from(v).unwrap())
        .collect();
    let vals = eval_f_prefixes(spec, ctx, &x, &cuts)?;
    let r1 = ctx.div(&vals[1], &ctx.frobenius(&vals[0]))?;
    let r2 = ctx.div(&vals[2], &ctx.frobenius(&vals[1]))?;
    if !ctx.eq_mod(&r1, &r2, m) {
        return Err(Error::Stabilization(m));
    }
    let mut unit = r1.clone();
    let mut conj = r1;
    for _ in 1..spec.f {
        conj = ctx.frobenius(&conj);
        unit = ctx.mul(&unit, &conj);
    }
    Ok(Some(unit))
}
