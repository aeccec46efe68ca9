//! Dense exact linear algebra over a field, generic over [`Field`].

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt::Debug;

use super::rational::Rational;

pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn fzero() -> Self;
    fn fone() -> Self;
    fn is_fzero(&self) -> bool;
    fn fadd(&self, other: &Self) -> Self;
    fn fsub(&self, other: &Self) -> Self;
    fn fmul(&self, other: &Self) -> Self;
    fn fneg(&self) -> Self;
    /// Multiplicative inverse; callers never pass zero.
    fn finv(&self) -> Self;
    fn from_i64(v: i64) -> Self;
}

impl Field for Rational {
    fn fzero() -> Self {
        Zero::zero()
    }
    fn fone() -> Self {
        One::one()
    }
    fn is_fzero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn fadd(&self, other: &Self) -> Self {
        self + other
    }
    fn fsub(&self, other: &Self) -> Self {
        self - other
    }
    fn fmul(&self, other: &Self) -> Self {
        self * other
    }
    fn fneg(&self) -> Self {
        -self
    }
    fn finv(&self) -> Self {
        self.recip()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }
}

/// Prime field `F_P`. `P` must be prime and below `2^32` so products fit in `u64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Fp<const P: u64>(u64);

/// The prime field used for large certificate computations.
pub type F31 = Fp<2_147_483_647>;

impl<const P: u64> Fp<P> {
    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u64)
    }
    pub fn value(&self) -> u64 {
        self.0
    }
    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.0;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn fzero() -> Self {
        Fp(0)
    }
    fn fone() -> Self {
        Fp(1 % P)
    }
    fn is_fzero(&self) -> bool {
        self.0 == 0
    }
    fn fadd(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % P)
    }
    fn fsub(&self, other: &Self) -> Self {
        Fp((self.0 + P - other.0) % P)
    }
    fn fmul(&self, other: &Self) -> Self {
        Fp(self.0 * other.0 % P)
    }
    fn fneg(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn finv(&self) -> Self {
        self.pow(P - 2)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

pub type Matrix<F> = Vec<Vec<F>>;

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns. Zero rows are dropped.
pub fn rref<F: Field>(rows: &mut Matrix<F>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_fzero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].finv();
        for x in rows[r].iter_mut() {
            *x = x.fmul(&inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_fzero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_fzero() {
                        *x = x.fsub(&f.fmul(y));
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(rows: &Matrix<F>, ncols: usize) -> usize {
    let mut m = rows.clone();
    rref(&mut m, ncols).len()
}

/// Basis of the right kernel `{x : A x = 0}` of an `nrows x ncols` matrix.
pub fn kernel<F: Field>(rows: &Matrix<F>, ncols: usize) -> Matrix<F> {
    let mut m = rows.clone();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![F::fzero(); ncols];
            v[fc] = F::fone();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = row[fc].fneg();
            }
            v
        })
        .collect()
}

/// Solves `A x = b`, returning one solution when the system is consistent.
pub fn solve<F: Field>(a: &Matrix<F>, b: &[F], ncols: usize) -> Option<Vec<F>> {
    let mut aug: Matrix<F> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let pivots = rref(&mut aug, ncols + 1);
    if pivots.last() == Some(&ncols) {
        return None;
    }
    let mut x = vec![F::fzero(); ncols];
    for (row, &pc) in aug.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

pub fn determinant<F: Field>(a: &Matrix<F>) -> F {
    let n = a.len();
    let mut m = a.clone();
    let mut det = F::fone();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_fzero()) else {
            return F::fzero();
        };
        if p != c {
            m.swap(p, c);
            det = det.fneg();
        }
        det = det.fmul(&m[c][c]);
        let inv = m[c][c].finv();
        for i in c + 1..n {
            if !m[i][c].is_fzero() {
                let f = m[i][c].fmul(&inv);
                for j in c..n {
                    let t = f.fmul(&m[c][j]);
                    m[i][j] = m[i][j].fsub(&t);
                }
            }
        }
    }
    det
}

pub fn mat_mul<F: Field>(a: &Matrix<F>, b: &Matrix<F>, inner: usize, ncols: usize) -> Matrix<F> {
    a.iter()
        .map(|row| {
            (0..ncols)
                .map(|j| {
                    let mut acc = F::fzero();
                    for k in 0..inner {
                        if !row[k].is_fzero() && !b[k][j].is_fzero() {
                            acc = acc.fadd(&row[k].fmul(&b[k][j]));
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Incrementally maintained echelon basis; used to compute ranks of spans
/// without materializing the full generator matrix.
#[derive(Clone, Debug)]
pub struct EchelonBasis<F: Field> {
    ncols: usize,
    rows: Vec<(usize, Vec<F>)>,
}

impl<F: Field> EchelonBasis<F> {
    pub fn new(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the span.
    pub fn reduce(&self, mut v: Vec<F>) -> Vec<F> {
        for (p, row) in &self.rows {
            if !v[*p].is_fzero() {
                let f = v[*p].clone();
                for (x, y) in v.iter_mut().zip(row) {
                    if !y.is_fzero() {
                        *x = x.fsub(&f.fmul(y));
                    }
                }
            }
        }
        v
    }

    pub fn contains(&self, v: Vec<F>) -> bool {
        self.reduce(v).iter().all(|x| x.is_fzero())
    }

    /// Adds `v`; returns true if it was independent of the current span.
    pub fn insert(&mut self, v: Vec<F>) -> bool {
        let v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_fzero()) else {
            return false;
        };
        let inv = v[p].finv();
        let v: Vec<F> = v.iter().map(|x| x.fmul(&inv)).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[p].is_fzero() {
                let f = row[p].clone();
                for (x, y) in row.iter_mut().zip(&v) {
                    if !y.is_fzero() {
                        *x = x.fsub(&f.fmul(y));
                    }
                }
            }
        }
        self.rows.push((p, v));
        true
    }

    /// Basis vectors with their pivot columns, fully reduced.
    pub fn basis(&self) -> &[(usize, Vec<F>)] {
        &self.rows
    }
}

/// Smith normal form `P A Q = D` of an integer matrix.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub nrows: usize,
    pub ncols: usize,
    /// Nonzero invariant factors `d_0 | d_1 | ...`, all positive.
    pub invariants: Vec<BigInt>,
    pub left: Matrix<BigInt>,
    pub right: Matrix<BigInt>,
}

fn identity_big(n: usize) -> Matrix<BigInt> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn abs_big(x: &BigInt) -> BigInt {
    if x < &BigInt::zero() {
        -x
    } else {
        x.clone()
    }
}

pub fn smith_normal_form(a: &Matrix<BigInt>, nrows: usize, ncols: usize) -> SmithForm {
    let mut m = a.clone();
    let mut left = identity_big(nrows);
    let mut right = identity_big(ncols);
    let mut t = 0;
    let mut invariants = Vec::new();
    while t < nrows.min(ncols) {
        // Pivot: smallest nonzero absolute value in the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| abs_big(&m[i][j]) < abs_big(&m[bi][bj]))
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap(t, pi);
        left.swap(t, pi);
        for row in m.iter_mut() {
            row.swap(t, pj);
        }
        for row in right.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut done = true;
            for i in t + 1..nrows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = floor_div(&m[i][t], &m[t][t]);
                row_axpy(&mut m, i, t, &q);
                row_axpy(&mut left, i, t, &q);
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    left.swap(t, i);
                    done = false;
                }
            }
            for j in t + 1..ncols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = floor_div(&m[t][j], &m[t][t]);
                col_axpy(&mut m, j, t, &q);
                col_axpy(&mut right, j, t, &q);
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    for row in right.iter_mut() {
                        row.swap(t, j);
                    }
                    done = false;
                }
            }
            if !done {
                continue;
            }
            // Enforce divisibility of the rest of the block by the pivot.
            let mut bad = None;
            'outer: for i in t + 1..nrows {
                for j in t + 1..ncols {
                    if !(&m[i][j] % &m[t][t]).is_zero() {
                        bad = Some(i);
                        break 'outer;
                    }
                }
            }
            match bad {
                Some(i) => {
                    let one = -BigInt::one();
                    row_axpy(&mut m, t, i, &one);
                    row_axpy(&mut left, t, i, &one);
                }
                None => break,
            }
        }
        if m[t][t] < BigInt::zero() {
            for x in m[t].iter_mut() {
                *x = -x.clone();
            }
            for x in left[t].iter_mut() {
                *x = -x.clone();
            }
        }
        invariants.push(m[t][t].clone());
        t += 1;
    }
    SmithForm { nrows, ncols, invariants, left, right }
}

fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    use num_integer::Integer;
    a.div_floor(b)
}

/// row_i -= q * row_t
fn row_axpy(m: &mut Matrix<BigInt>, i: usize, t: usize, q: &BigInt) {
    let src = m[t].clone();
    for (x, y) in m[i].iter_mut().zip(&src) {
        *x -= q * y;
    }
}

/// col_j -= q * col_t
fn col_axpy(m: &mut Matrix<BigInt>, j: usize, t: usize, q: &BigInt) {
    for row in m.iter_mut() {
        let y = row[t].clone();
        row[j] -= q * y;
    }
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    /// Solves `A w = x` over the integers, or over `Z[1/p]` when
    /// `invert_prime` is given (then `x` may carry `p`-power denominators).
    pub fn solve(&self, x: &[Rational], invert_prime: Option<u64>) -> Option<Vec<Rational>> {
        let y: Vec<Rational> = self
            .left
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .fold(Rational::zero(), |acc, (p, xi)| acc + Rational::from_integer(p.clone()) * xi)
            })
            .collect();
        let admissible = |q: &Rational| match invert_prime {
            None => q.is_integer(),
            Some(p) => super::rational::denominator_is_power_of(q, p),
        };
        if !x.iter().all(admissible) {
            return None;
        }
        let mut z = vec![Rational::zero(); self.ncols];
        for (t, yt) in y.iter().enumerate() {
            if t < self.rank() {
                let zt = yt / Rational::from_integer(self.invariants[t].clone());
                if !admissible(&zt) {
                    return None;
                }
                z[t] = zt;
            } else if !yt.is_zero() {
                return None;
            }
        }
        Some(
            self.right
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&z)
                        .fold(Rational::zero(), |acc, (q, zt)| acc + Rational::from_integer(q.clone()) * zt)
                })
                .collect(),
        )
    }

    /// Integer basis of the kernel `{w : A w = 0}`.
    pub fn kernel_basis(&self) -> Matrix<BigInt> {
        (self.rank()..self.ncols)
            .map(|c| self.right.iter().map(|row| row[c].clone()).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::int;
    use num_traits::Signed;

    fn bigm(rows: &[&[i64]]) -> Matrix<BigInt> {
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
    }

    fn check_smith(a: &Matrix<BigInt>, nrows: usize, ncols: usize) -> SmithForm {
        let s = smith_normal_form(a, nrows, ncols);
        let to_q = |m: &Matrix<BigInt>| -> Matrix<Rational> {
            m.iter().map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect()).collect()
        };
        let pa = mat_mul(&to_q(&s.left), &to_q(a), nrows, ncols);
        let paq = mat_mul(&pa, &to_q(&s.right), ncols, ncols);
        for i in 0..nrows {
            for j in 0..ncols {
                let expect = if i == j && i < s.rank() {
                    Rational::from_integer(s.invariants[i].clone())
                } else {
                    Rational::zero()
                };
                assert_eq!(paq[i][j], expect);
            }
        }
        for w in s.invariants.windows(2) {
            assert!((&w[1] % &w[0]).is_zero());
        }
        assert!(determinant(&to_q(&s.left)).numer().abs() == BigInt::one());
        assert!(determinant(&to_q(&s.right)).numer().abs() == BigInt::one());
        s
    }

    #[test]
    fn smith_small_examples() {
        let s = check_smith(&bigm(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]), 3, 3);
        assert_eq!(s.invariants, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let s = check_smith(&bigm(&[&[1, 1, 1]]), 1, 3);
        assert_eq!(s.invariants, vec![BigInt::from(1)]);
        assert_eq!(s.kernel_basis().len(), 2);
        let s = check_smith(&bigm(&[&[0, 0], &[0, 0]]), 2, 2);
        assert_eq!(s.rank(), 0);
    }

    #[test]
    fn smith_solve_integer_and_localized() {
        let a = bigm(&[&[2], &[4]]);
        let s = check_smith(&a, 2, 1);
        assert!(s.solve(&[int(2), int(4)], None).is_some());
        assert!(s.solve(&[int(1), int(2)], None).is_none());
        let w = s.solve(&[int(1), int(2)], Some(2)).unwrap();
        assert_eq!(w, vec![Rational::new(BigInt::from(1), BigInt::from(2))]);
        assert!(s.solve(&[int(1), int(3)], Some(2)).is_none());
    }

    #[test]
    fn rref_kernel_solve() {
        let a: Matrix<Rational> = vec![vec![int(1), int(2), int(3)], vec![int(2), int(4), int(6)]];
        assert_eq!(rank(&a, 3), 1);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let s = row.iter().zip(v).fold(int(0), |acc, (x, y)| acc + x * y);
                assert!(s.is_zero());
            }
        }
        assert!(solve(&a, &[int(1), int(3)], 3).is_none());
        assert!(solve(&a, &[int(1), int(2)], 3).is_some());
    }

    #[test]
    fn prime_field_inverse() {
        for v in 1..50 {
            let x = F31::new(v);
            assert_eq!(x.fmul(&x.finv()), F31::fone());
        }
        assert_eq!(F31::new(-1).fadd(&F31::fone()), F31::fzero());
    }

    #[test]
    fn echelon_basis_tracks_span() {
        let mut b: EchelonBasis<Rational> = EchelonBasis::new(3);
        assert!(b.insert(vec![int(1), int(1), int(0)]));
        assert!(b.insert(vec![int(0), int(1), int(1)]));
        assert!(!b.insert(vec![int(1), int(2), int(1)]));
        assert!(b.contains(vec![int(1), int(0), int(-1)]));
        assert!(!b.contains(vec![int(0), int(0), int(1)]));
        assert_eq!(b.rank(), 2);
    }
}
