//! Exact integer linear algebra: Smith normal form, kernel generators, and
//! the combinatorial data attached to the exponent matrix.

use crate::error::{Error, Result};
use rug::{Complete, Integer};
use std::collections::BTreeSet;

pub trait Sign0 {
    fn is0(&self) -> bool;
    fn pos0(&self) -> bool;
    fn neg0(&self) -> bool;
}

impl Sign0 for Integer {
    fn is0(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Equal
    }
    fn pos0(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Greater
    }
    fn neg0(&self) -> bool {
        self.cmp0() == std::cmp::Ordering::Less
    }
}

/// Dense row-major matrix with arbitrary-precision integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Integer>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "dimensions must be positive");
        IntMatrix {
            rows,
            cols,
            entries: vec![Integer::new(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Integer::from(1));
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows[0].len();
        let mut m = IntMatrix::zero(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, Integer::from(v));
            }
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Integer {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Integer) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Integer::new();
                for k in 0..self.cols {
                    acc += (self.get(i, k) * other.get(k, j)).complete();
                }
                out.set(i, j, acc);
            }
        }
        out
    }

    /// Column vector image M·x over the integers.
    pub fn apply(&self, x: &[Integer]) -> Vec<Integer> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Integer::new();
                for j in 0..self.cols {
                    acc += (self.get(i, j) * &x[j]).complete();
                }
                acc
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[a] += k·row[b]
    fn add_row(&mut self, a: usize, b: usize, k: &Integer) {
        for j in 0..self.cols {
            let delta = (self.get(b, j) * k).complete();
            self.entries[a * self.cols + j] += delta;
        }
    }

    /// col[a] += k·col[b]
    fn add_col(&mut self, a: usize, b: usize, k: &Integer) {
        for i in 0..self.rows {
            let delta = (self.get(i, b) * k).complete();
            self.entries[i * self.cols + a] += delta;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self.get(a, j).clone();
            self.set(a, j, v);
        }
    }

    /// Matrix (a_ij − 1) used for the kernel generator α.
    pub fn minus_ones(&self) -> IntMatrix {
        let mut m = self.clone();
        for e in &mut m.entries {
            *e -= 1;
        }
        m
    }

    /// Matrix with a row of ones appended.
    pub fn with_ones_row(&self) -> IntMatrix {
        let mut m = IntMatrix::zero(self.rows + 1, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for j in 0..self.cols {
            m.set(self.rows, j, Integer::from(1));
        }
        m
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> IntMatrix {
        let mut m = IntMatrix::zero(rows.len(), cols.len());
        for (ii, &i) in rows.iter().enumerate() {
            for (jj, &j) in cols.iter().enumerate() {
                m.set(ii, jj, self.get(i, j).clone());
            }
        }
        m
    }
}

#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    /// Diagonal of D in chain order (nonnegative, each dividing the next,
    /// zeros last).
    pub divisors: Vec<Integer>,
}

/// Smith normal form U·M·V = D by minimal-pivot elementary reduction.
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let lim = m.rows.min(m.cols);

    for t in 0..lim {
        loop {
            // Smallest nonzero |entry| in the trailing submatrix as pivot.
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if d.get(i, j).is0() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some((pi, pj)) => {
                            d.get(i, j).clone().abs() < d.get(pi, pj).clone().abs()
                        }
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                // Trailing block is zero; done.
                return finish(d, u, v, lim);
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut dirty = false;
            for i in t + 1..d.rows {
                if !d.get(i, t).is0() {
                    let q = -(d.get(i, t).div_rem_euc_ref(d.get(t, t)).complete().0);
                    d.add_row(i, t, &q);
                    u.add_row(i, t, &q);
                    if !d.get(i, t).is0() {
                        dirty = true;
                    }
                }
            }
            for j in t + 1..d.cols {
                if !d.get(t, j).is0() {
                    let q = -(d.get(t, j).div_rem_euc_ref(d.get(t, t)).complete().0);
                    d.add_col(j, t, &q);
                    v.add_col(j, t, &q);
                    if !d.get(t, j).is0() {
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide the rest of the submatrix.
            let mut fixed = true;
            'scan: for i in t + 1..d.rows {
                for j in t + 1..d.cols {
                    if !d.get(i, j).clone().div_rem_euc(d.get(t, t).clone()).1.is0() {
                        let one = Integer::from(1);
                        d.add_row(t, i, &one);
                        u.add_row(t, i, &one);
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d.get(t, t).neg0() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    finish(d, u, v, lim)
}

fn finish(d: IntMatrix, u: IntMatrix, v: IntMatrix, lim: usize) -> SnfResult {
    let divisors: Vec<Integer> = (0..lim).map(|t| d.get(t, t).clone().abs()).collect();
    SnfResult { u, d, v, divisors }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaData {
    pub alphas: Vec<u64>,
    pub alpha_total: u64,
}

/// Primitive positive generator of Ker(A') (rank one for a valid family).
pub fn alpha_vector(aprime: &IntMatrix) -> Result<AlphaData> {
    let snf = smith_normal_form(aprime);
    let rank = snf.divisors.iter().filter(|d| !d.is0()).count();
    let kernel_rank = aprime.cols - rank;
    if kernel_rank != 1 {
        return Err(Error::KernelRank(kernel_rank));
    }
    // Kernel basis vector = column of V at the zero-divisor position.
    let zero_pos = snf
        .divisors
        .iter()
        .position(|d| d.is0())
        .unwrap_or(snf.divisors.len());
    let mut gen: Vec<Integer> = (0..aprime.cols)
        .map(|i| snf.v.get(i, zero_pos).clone())
        .collect();
    let mut g = Integer::new();
    for x in &gen {
        g = g.gcd(x);
    }
    if !g.is0() {
        for x in &mut gen {
            *x /= &g;
        }
    }
    if gen.iter().all(|x| x.neg0()) {
        for x in &mut gen {
            *x = -x.clone();
        }
    }
    if !gen.iter().all(|x| x.pos0()) {
        return Err(Error::KernelRank(kernel_rank));
    }
    debug_assert!(aprime.apply(&gen).iter().all(|x| x.is0()));
    let alphas: Vec<u64> = gen.iter().map(|x| x.to_u64().expect("small")).collect();
    let alpha_total = alphas.iter().sum();
    Ok(AlphaData { alphas, alpha_total })
}

#[derive(Clone, Debug)]
pub struct KernelReps {
    /// Coset representatives s_j with s_0 = 0, entries in {0,…,q−2}.
    pub s: Vec<Vec<u64>>,
    /// t_ij = s_ij / α_i.
    pub t: Vec<Vec<u64>>,
    /// t_j = |s_j| / α.
    pub t_total: Vec<u64>,
    /// δ flag: |s_j| ≡ 0 mod (q−1).
    pub delta: Vec<bool>,
}

/// All solutions of M·x ≡ 0 mod modulus, via Smith normal form.
pub fn kernel_mod(m: &IntMatrix, modulus: u64) -> Vec<Vec<u64>> {
    let n = Integer::from(modulus);
    let snf = smith_normal_form(m);
    let cols = m.cols;
    // x = V·y with d_i·y_i ≡ 0: y_i ranges over (modulus/g_i)·{0..g_i−1}.
    let mut choices: Vec<Vec<u64>> = Vec::with_capacity(cols);
    for i in 0..cols {
        let di = if i < snf.divisors.len() {
            snf.divisors[i].clone()
        } else {
            Integer::new()
        };
        let g = di.gcd(&n).to_u64().expect("small");
        let step = modulus / g;
        choices.push((0..g).map(|k| k * step).collect());
    }
    let mut out = Vec::new();
    let mut y = vec![0u64; cols];
    enumerate_choices(&choices, 0, &mut y, &mut |y| {
        let x: Vec<u64> = (0..cols)
            .map(|i| {
                let mut acc = Integer::new();
                for (j, &yj) in y.iter().enumerate() {
                    acc += snf.v.get(i, j) * Integer::from(yj);
                }
                acc.div_rem_euc(n.clone()).1.to_u64().expect("small")
            })
            .collect();
        out.push(x);
    });
    out.sort();
    out.dedup();
    out
}

fn enumerate_choices(
    choices: &[Vec<u64>],
    idx: usize,
    y: &mut Vec<u64>,
    f: &mut impl FnMut(&[u64]),
) {
    if idx == choices.len() {
        f(y);
        return;
    }
    for &c in &choices[idx] {
        y[idx] = c;
        enumerate_choices(choices, idx + 1, y, f);
    }
}

/// Coset representatives of Ker(Ã mod (q−1)) modulo the line generated by α.
pub fn kernel_reps(a: &IntMatrix, q: u64, alpha: &AlphaData) -> Result<KernelReps> {
    let nvars = a.cols;
    let modulus = q - 1;
    let a_tilde = a.with_ones_row();
    let kernel = kernel_mod(&a_tilde, modulus);

    // Subgroup: multiples of α lying in the kernel.
    let mut line: BTreeSet<Vec<u64>> = BTreeSet::new();
    for k in 0..modulus {
        let v: Vec<u64> = alpha.alphas.iter().map(|&ai| (k * ai) % modulus).collect();
        if kernel.binary_search(&v).is_ok() {
            line.insert(v);
        }
    }

    let mut seen: BTreeSet<Vec<u64>> = BTreeSet::new();
    let mut cosets: Vec<Vec<Vec<u64>>> = Vec::new();
    for x in &kernel {
        if seen.contains(x) {
            continue;
        }
        let coset: Vec<Vec<u64>> = line
            .iter()
            .map(|l| {
                (0..nvars)
                    .map(|i| (x[i] + l[i]) % modulus)
                    .collect::<Vec<u64>>()
            })
            .collect();
        for c in &coset {
            seen.insert(c.clone());
        }
        cosets.push(coset);
    }

    // Per coset: lexicographically smallest representative, unless a larger
    // one is needed to satisfy the divisibility conditions on s_ij and |s_j|.
    let divisible = |s: &[u64]| -> bool {
        s.iter().zip(&alpha.alphas).all(|(&sij, &ai)| sij % ai == 0)
            && s.iter().sum::<u64>() % alpha.alpha_total == 0
    };
    let mut reps: Vec<Vec<u64>> = Vec::with_capacity(cosets.len());
    for coset in &mut cosets {
        coset.sort();
        let rep = coset
            .iter()
            .find(|s| divisible(s))
            .unwrap_or(&coset[0])
            .clone();
        reps.push(rep);
    }
    reps.sort();
    debug_assert_eq!(reps[0], vec![0u64; nvars]);

    let mut t = Vec::with_capacity(reps.len());
    let mut t_total = Vec::with_capacity(reps.len());
    let mut delta = Vec::with_capacity(reps.len());
    for (j, s) in reps.iter().enumerate() {
        for (i, (&sij, &ai)) in s.iter().zip(&alpha.alphas).enumerate() {
            if sij % ai != 0 {
                return Err(Error::Asm1Violation(format!(
                    "α_{} = {} does not divide s_{}{} = {}",
                    i + 1,
                    ai,
                    i + 1,
                    j,
                    sij
                )));
            }
        }
        let total: u64 = s.iter().sum();
        if total % alpha.alpha_total != 0 {
            return Err(Error::Asm1Violation(format!(
                "α = {} does not divide |s_{}| = {}",
                alpha.alpha_total, j, total
            )));
        }
        t.push(s.iter().zip(&alpha.alphas).map(|(&sij, &ai)| sij / ai).collect());
        t_total.push(total / alpha.alpha_total);
        delta.push(total % modulus == 0);
    }
    Ok(KernelReps {
        s: reps,
        t,
        t_total,
        delta,
    })
}

#[derive(Clone, Debug)]
pub struct Asm2Item {
    pub j_set: Vec<usize>,
    pub divisors: Vec<u64>,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct Asm2Report {
    pub items: Vec<Asm2Item>,
    pub pass: bool,
}

/// Monomial columns supported inside J (a_ij = 0 for every row i ∉ J).
pub fn columns_supported_in(a: &IntMatrix, j_set: &[usize]) -> Vec<usize> {
    let inside: BTreeSet<usize> = j_set.iter().copied().collect();
    (0..a.cols)
        .filter(|&col| (0..a.rows).all(|row| inside.contains(&row) || a.get(row, col).is0()))
        .collect()
}

/// Elementary-divisor conditions on every J-restricted exponent matrix.
pub fn check_asm2(a: &IntMatrix, q: u64) -> Asm2Report {
    let nv = a.cols;
    let min = nv.div_ceil(2);
    let mut items = Vec::new();
    let mut pass = true;
    for mask in 1u64..(1 << nv) - 1 {
        let j_set: Vec<usize> = (0..nv).filter(|i| mask >> i & 1 == 1).collect();
        if j_set.len() < min {
            continue;
        }
        let cols = columns_supported_in(a, &j_set);
        if cols.is_empty() {
            continue;
        }
        let sub = a.select(&j_set, &cols).with_ones_row();
        let snf = smith_normal_form(&sub);
        let divisors: Vec<u64> = snf
            .divisors
            .iter()
            .map(|d| d.to_u64().expect("small"))
            .collect();
        let ok = divisors
            .iter()
            .filter(|&&d| d != 0)
            .all(|&d| (q - 1) % d == 0);
        pass &= ok;
        items.push(Asm2Item {
            j_set: j_set.iter().map(|i| i + 1).collect(),
            divisors,
            pass: ok,
        });
    }
    Asm2Report { items, pass }
}

/// Number of half-size subsets J such that every monomial column keeps
/// support outside J; zero when the ambient dimension n is even.
pub fn compute_d_count(a: &IntMatrix) -> u64 {
    let nv = a.cols; // n + 1
    if nv % 2 != 0 {
        return 0; // n even
    }
    let half = nv / 2;
    let mut count = 0;
    for mask in 0u64..(1 << nv) {
        let j_set: Vec<usize> = (0..nv).filter(|i| mask >> i & 1 == 1).collect();
        if j_set.len() != half {
            continue;
        }
        let inside: BTreeSet<usize> = j_set.iter().copied().collect();
        let ok = (0..a.cols).all(|col| {
            (0..a.rows).any(|row| !inside.contains(&row) && a.get(row, col).pos0())
        });
        if ok {
            count += 1;
        }
    }
    count
}

/// d = d_1···d_n, the product of the first n elementary divisors of Ã.
pub fn piece_count(a: &IntMatrix) -> u64 {
    let snf = smith_normal_form(&a.with_ones_row());
    snf.divisors[..a.cols - 1]
        .iter()
        .map(|d| d.to_u64().expect("small"))
        .product()
}
