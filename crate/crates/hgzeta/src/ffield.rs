//! Arithmetic in F_{p^{f·r}} with full exponential, discrete-log, and trace
//! tables.
//!
//! Elements are encoded as base-p integers (coefficient vectors of residue
//! polynomials). The modulus is the lexicographically smallest monic
//! irreducible of the right degree, and the multiplicative generator is the
//! smallest primitive element whose norm down the tower hits the canonical
//! generator of each subfield, so that discrete logs are compatible between
//! levels by index scaling.

use crate::error::{Error, Result};

pub const DEFAULT_TABLE_CAP: u64 = 1 << 24;

/// Field element as its base-p integer encoding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FqElem(pub u64);

#[derive(Clone, Debug)]
pub struct FieldCtx {
    pub p: u64,
    pub f: u32,
    pub r: u32,
    /// Total degree f·r over F_p.
    pub deg: u32,
    /// q = p^f.
    pub q: u64,
    /// q^r = p^{f·r}.
    pub size: u64,
    /// Group order q^r − 1.
    pub m: u64,
    /// Monic modulus, coefficients c_0..c_deg with c_deg = 1.
    pub modulus: Vec<u64>,
    pub gen: FqElem,
    exp: Vec<u64>,
    dlog: Vec<u32>,
    trace_p: Vec<u32>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ----- dense polynomial arithmetic over F_p (construction phase only) -----

fn poly_trim(a: &mut Vec<u64>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn poly_mul_mod(a: &[u64], b: &[u64], h: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut prod = vec![0u64; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    poly_rem(&mut prod, h, p);
    prod
}

/// In-place remainder mod the monic polynomial h.
fn poly_rem(a: &mut Vec<u64>, h: &[u64], p: u64) {
    let d = h.len() - 1;
    while a.len() > d {
        let lead = *a.last().unwrap() % p;
        let shift = a.len() - 1 - d;
        if lead != 0 {
            for (k, &hk) in h.iter().enumerate().take(d) {
                let sub = (lead * hk) % p;
                let idx = shift + k;
                a[idx] = (a[idx] + p - sub) % p;
            }
        }
        a.pop();
    }
    poly_trim(a);
}

fn poly_pow_mod(base: &[u64], mut e: u64, h: &[u64], p: u64) -> Vec<u64> {
    let mut b = base.to_vec();
    let mut acc = vec![1u64];
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_mul_mod(&acc, &b, h, p);
        }
        b = poly_mul_mod(&b, &b, h, p);
        e >>= 1;
    }
    acc
}

fn poly_gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        // a mod b with b made monic first.
        let lead = *b.last().unwrap();
        let inv = mod_inverse(lead, p);
        let bm: Vec<u64> = b.iter().map(|&x| x * inv % p).collect();
        poly_rem(&mut a, &bm, p);
        std::mem::swap(&mut a, &mut b);
    }
    a
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime; Fermat.
    mod_pow(a % p, p - 2, p)
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn is_irreducible(h: &[u64], p: u64) -> bool {
    let d = (h.len() - 1) as u32;
    // x^{p^d} ≡ x mod h, and x^{p^{d/ℓ}} − x coprime to h for prime ℓ | d.
    let x = vec![0u64, 1];
    let frob = |k: u32| -> Vec<u64> {
        let mut y = x.clone();
        for _ in 0..k {
            y = poly_pow_mod(&y, p, h, p);
        }
        y
    };
    let top = frob(d);
    let mut diff = top.clone();
    diff.resize(diff.len().max(2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    poly_trim(&mut diff);
    if !diff.is_empty() {
        return false;
    }
    for l in prime_factors(d as u64) {
        let mid = frob(d / l as u32);
        let mut diff = mid.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        poly_trim(&mut diff);
        let g = poly_gcd(diff, h.to_vec(), p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

fn lowest_irreducible(p: u64, d: u32) -> Vec<u64> {
    if d == 1 {
        return vec![0, 1]; // x
    }
    let size = (p as u128).pow(d) as u64;
    for code in 0..size {
        let mut h: Vec<u64> = Vec::with_capacity(d as usize + 1);
        let mut c = code;
        for _ in 0..d {
            h.push(c % p);
            c /= p;
        }
        h.push(1);
        if is_irreducible(&h, p) {
            return h;
        }
    }
    unreachable!("irreducible polynomials of every degree exist")
}

impl FieldCtx {
    pub fn new(p: u64, f: u32, r: u32) -> Result<FieldCtx> {
        FieldCtx::with_cap(p, f, r, DEFAULT_TABLE_CAP)
    }

    pub fn with_cap(p: u64, f: u32, r: u32, cap: u64) -> Result<FieldCtx> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let deg = f * r;
        let size = (p as u128).checked_pow(deg).and_then(|s| u64::try_from(s).ok());
        let size = match size {
            Some(s) if s <= cap => s,
            Some(s) => return Err(Error::CapExceeded(s, cap)),
            None => return Err(Error::CapExceeded(u64::MAX, cap)),
        };
        let q = p.pow(f);
        let m = size - 1;
        let modulus = lowest_irreducible(p, deg);

        // Norm targets down the tower: F_p, and F_q when f > 1.
        let prime_gen = (2..p).find(|&g| {
            prime_factors(p - 1)
                .iter()
                .all(|&l| mod_pow(g, (p - 1) / l, p) != 1)
        });
        let prime_gen = prime_gen.unwrap_or(1); // p = 2 or 3

        let mut ctx = FieldCtx {
            p,
            f,
            r,
            deg,
            q,
            size,
            m,
            modulus,
            gen: FqElem(0),
            exp: Vec::new(),
            dlog: Vec::new(),
            trace_p: Vec::new(),
        };

        let norm_q_target: Option<u64> = if f > 1 && r > 1 {
            let base = FieldCtx::with_cap(p, f, 1, cap)?;
            Some(ctx.embed_from(&base, base.gen.0))
        } else {
            None
        };

        let factors = prime_factors(m);
        let mut gen = 0;
        for cand in 2..size {
            if !ctx.is_primitive_poly(cand, &factors) {
                continue;
            }
            // Norm to F_p must hit the smallest primitive root mod p.
            if p > 2 && ctx.pow_poly(cand, m / (p - 1)) != prime_gen {
                continue;
            }
            if let Some(target) = norm_q_target {
                if ctx.pow_poly(cand, m / (q - 1)) != target {
                    continue;
                }
            }
            gen = cand;
            break;
        }
        assert!(gen != 0, "primitive element with compatible norms exists");
        ctx.gen = FqElem(gen);

        // Tables.
        let gen_poly = ctx.decode(gen);
        let mut exp = Vec::with_capacity(m as usize);
        let mut dlog = vec![u32::MAX; size as usize];
        let mut cur = vec![1u64];
        for k in 0..m {
            let enc = ctx.encode(&cur);
            exp.push(enc);
            dlog[enc as usize] = k as u32;
            cur = poly_mul_mod(&cur, &gen_poly, &ctx.modulus, p);
        }
        ctx.exp = exp;
        ctx.dlog = dlog;

        // Trace to F_p by summing Frobenius conjugates.
        let mut trace_p = vec![0u32; size as usize];
        for t in 0..m {
            let mut acc = 0u64;
            let mut idx = t;
            for _ in 0..deg {
                acc = ctx.add_enc(acc, ctx.exp[idx as usize]);
                idx = ((idx as u128 * p as u128) % m as u128) as u64;
            }
            debug_assert!(acc < p, "trace lands in the prime field");
            trace_p[ctx.exp[t as usize] as usize] = acc as u32;
        }
        ctx.trace_p = trace_p;
        Ok(ctx)
    }

    fn decode(&self, mut enc: u64) -> Vec<u64> {
        let mut c = Vec::with_capacity(self.deg as usize);
        while enc > 0 {
            c.push(enc % self.p);
            enc /= self.p;
        }
        c
    }

    fn encode(&self, poly: &[u64]) -> u64 {
        let mut enc = 0u64;
        for &c in poly.iter().rev() {
            enc = enc * self.p + c;
        }
        enc
    }

    fn is_primitive_poly(&self, enc: u64, factors: &[u64]) -> bool {
        factors.iter().all(|&l| self.pow_poly(enc, self.m / l) != 1)
    }

    /// Power by polynomial arithmetic (used before tables exist).
    fn pow_poly(&self, enc: u64, e: u64) -> u64 {
        let b = self.decode(enc);
        self.encode(&poly_pow_mod(&b, e, &self.modulus, self.p))
    }

    /// Image of an element of `base` under the canonical embedding: evaluate
    /// its residue polynomial at the smallest root of base's modulus here.
    pub fn embed_from(&self, base: &FieldCtx, enc: u64) -> u64 {
        assert_eq!(base.p, self.p);
        assert_eq!(self.deg % base.deg, 0);
        if base.deg == 1 {
            return enc; // constants encode identically
        }
        let root = (0..self.size)
            .find(|&x| {
                let xp = self.decode(x);
                let mut acc: Vec<u64> = vec![];
                for &c in base.modulus.iter().rev() {
                    acc = poly_mul_mod(&acc, &xp, &self.modulus, self.p);
                    if c != 0 {
                        if acc.is_empty() {
                            acc = vec![c];
                        } else {
                            acc[0] = (acc[0] + c) % self.p;
                        }
                        poly_trim(&mut acc);
                    }
                }
                acc.is_empty()
            })
            .expect("base modulus splits in the extension");
        let rootp = self.decode(root);
        let mut acc: Vec<u64> = vec![];
        for &c in base.decode(enc).iter().rev() {
            acc = poly_mul_mod(&acc, &rootp, &self.modulus, self.p);
            if c != 0 {
                if acc.is_empty() {
                    acc = vec![c];
                } else {
                    acc[0] = (acc[0] + c) % self.p;
                }
                poly_trim(&mut acc);
            }
        }
        self.encode(&acc)
    }

    // ----- element operations -----

    pub fn zero(&self) -> FqElem {
        FqElem(0)
    }

    pub fn one(&self) -> FqElem {
        FqElem(1)
    }

    /// Constant from an integer representative (element of the prime field).
    pub fn from_int(&self, v: i64) -> FqElem {
        FqElem(v.rem_euclid(self.p as i64) as u64)
    }

    fn add_enc(&self, a: u64, b: u64) -> u64 {
        let p = self.p;
        let mut out = 0u64;
        let mut mult = 1u64;
        let (mut a, mut b) = (a, b);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * mult;
            a /= p;
            b /= p;
            mult *= p;
        }
        out
    }

    pub fn add(&self, a: FqElem, b: FqElem) -> FqElem {
        FqElem(self.add_enc(a.0, b.0))
    }

    pub fn neg(&self, a: FqElem) -> FqElem {
        let p = self.p;
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut a = a.0;
        while a > 0 {
            out += ((p - a % p) % p) * mult;
            a /= p;
            mult *= p;
        }
        FqElem(out)
    }

    pub fn sub(&self, a: FqElem, b: FqElem) -> FqElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FqElem, b: FqElem) -> FqElem {
        if a.0 == 0 || b.0 == 0 {
            return FqElem(0);
        }
        let k = (self.dlog[a.0 as usize] as u64 + self.dlog[b.0 as usize] as u64) % self.m;
        FqElem(self.exp[k as usize])
    }

    pub fn inv(&self, a: FqElem) -> FqElem {
        assert!(a.0 != 0, "inverse of zero");
        let k = (self.m - self.dlog[a.0 as usize] as u64) % self.m;
        FqElem(self.exp[k as usize])
    }

    pub fn pow(&self, a: FqElem, e: i64) -> FqElem {
        if a.0 == 0 {
            assert!(e > 0, "0^e needs e > 0");
            return FqElem(0);
        }
        let k = (self.dlog[a.0 as usize] as i128 * e as i128).rem_euclid(self.m as i128) as u64;
        FqElem(self.exp[k as usize])
    }

    pub fn dlog(&self, a: FqElem) -> Option<u64> {
        if a.0 == 0 {
            None
        } else {
            Some(self.dlog[a.0 as usize] as u64)
        }
    }

    /// g^k.
    pub fn exp_gen(&self, k: u64) -> FqElem {
        FqElem(self.exp[(k % self.m) as usize])
    }

    /// Trace to the prime field, as an integer in {0,…,p−1}.
    pub fn trace_to_prime(&self, a: FqElem) -> u64 {
        self.trace_p[a.0 as usize] as u64
    }

    /// Norm to the degree-f subfield F_q.
    pub fn norm_to_base(&self, a: FqElem) -> FqElem {
        if a.0 == 0 {
            return FqElem(0);
        }
        let k = (self.dlog[a.0 as usize] as u128 * ((self.m / (self.q - 1)) as u128))
            % self.m as u128;
        FqElem(self.exp[k as usize])
    }

    /// Canonical embedding of a subfield element by discrete-log scaling;
    /// valid because generators are norm-compatible down the tower.
    pub fn embed(&self, base: &FieldCtx, a: FqElem) -> FqElem {
        assert_eq!(base.p, self.p);
        assert_eq!(self.deg % base.deg, 0);
        match base.dlog(a) {
            None => FqElem(0),
            Some(k) => {
                let scale = self.m / base.m;
                self.exp_gen(((k as u128 * scale as u128) % self.m as u128) as u64)
            }
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FqElem> + '_ {
        (0..self.size).map(FqElem)
    }

    pub fn units(&self) -> impl Iterator<Item = FqElem> + '_ {
        self.exp.iter().map(|&e| FqElem(e))
    }
}
