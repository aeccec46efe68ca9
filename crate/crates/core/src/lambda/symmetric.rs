//! Integer polynomials in finitely many variables and the reduction of
//! symmetric ones to elementary symmetric functions.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Polynomial with integer coefficients; keys are exponent vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c.into())
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(nvars, e, BigInt::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: BigInt) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Self { nvars, terms }
    }

    /// `e_k(x_1, ..., x_n)`.
    pub fn elementary(nvars: usize, k: usize) -> Self {
        let mut p = Self::zero(nvars);
        for mask in 0u64..(1 << nvars) {
            if mask.count_ones() as usize == k {
                let e = (0..nvars).map(|i| ((mask >> i) & 1) as u32).collect();
                p.add_term(e, BigInt::one());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    fn add_term(&mut self, e: Vec<u32>, c: BigInt) {
        let entry = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.nvars), |acc, _| acc.mul(self))
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.nvars.saturating_sub(1)).all(|i| {
            self.terms.iter().all(|(e, c)| {
                let mut s = e.clone();
                s.swap(i, i + 1);
                self.terms.get(&s) == Some(c)
            })
        })
    }

    /// Substitutes `x_i ↦ values[i]` in any commutative ring given by the closures.
    pub fn evaluate<T: Clone>(
        &self,
        values: &[T],
        from_int: impl Fn(&BigInt) -> T,
        add: impl Fn(&T, &T) -> T,
        mul: impl Fn(&T, &T) -> T,
    ) -> T {
        let mut acc: Option<T> = None;
        for (e, c) in &self.terms {
            let mut term = from_int(c);
            for (v, &k) in values.iter().zip(e) {
                for _ in 0..k {
                    term = mul(&term, v);
                }
            }
            acc = Some(match acc {
                Some(a) => add(&a, &term),
                None => term,
            });
        }
        acc.unwrap_or_else(|| from_int(&BigInt::zero()))
    }
}

/// Rewrites a symmetric polynomial in `x_1..x_n` as a polynomial in
/// `e_1..e_n` (variable `i` of the result is `e_{i+1}`).
pub fn symmetric_reduce(p: &Poly) -> Result<Poly> {
    if !p.is_symmetric() {
        return Err(Error::NotSymmetric(format!("{p}")));
    }
    let n = p.nvars;
    let elementary: Vec<Poly> = (1..=n).map(|k| Poly::elementary(n, k)).collect();
    let mut rest = p.clone();
    let mut out = Poly::zero(n);
    // The lexicographically largest monomial of a symmetric polynomial has
    // non-increasing exponents a, and e_1^{a1-a2} ... e_n^{an} has the same leader.
    while let Some((lead, c)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
        let exps: Vec<u32> = (0..n).map(|i| lead[i] - if i + 1 < n { lead[i + 1] } else { 0 }).collect();
        let mut sub = Poly::constant(n, c.clone());
        for (k, &a) in exps.iter().enumerate() {
            sub = sub.mul(&elementary[k].pow(a));
        }
        rest = rest.sub(&sub);
        out.add_term(exps, c);
    }
    Ok(out)
}

/// Substitutes `e_k ↦ e_k(x)` back into a reduced polynomial.
pub fn expand_elementary(q: &Poly) -> Poly {
    let n = q.nvars;
    let elementary: Vec<Poly> = (1..=n).map(|k| Poly::elementary(n, k)).collect();
    q.evaluate(&elementary, |c| Poly::constant(n, c.clone()), Poly::add, Poly::mul)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| if k == 1 { format!("x{}", i + 1) } else { format!("x{}^{k}", i + 1) })
                    .collect();
                match (mono.is_empty(), c.is_one()) {
                    (true, _) => c.to_string(),
                    (false, true) => mono.join("*"),
                    (false, false) if *c == -BigInt::one() => format!("-{}", mono.join("*")),
                    (false, false) => format!("{c}*{}", mono.join("*")),
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `Σ_{i<p} x^i` for the variable `x_i`.
pub fn geometric_factor(nvars: usize, i: usize, p: u32) -> Poly {
    (0..p).fold(Poly::zero(nvars), |acc, k| acc.add(&Poly::var(nvars, i).pow(k)))
}

/// Checks `∏(1 - x_i^p) = ∏(1 - x_i) · ∏(1 + x_i + ... + x_i^{p-1})` in
/// `n` variables, both as polynomials and after reduction to elementary
/// symmetric functions.
pub fn cartier_identity_check(n: usize, p: u32) -> Result<bool> {
    let one = Poly::one(n);
    let mut lhs = one.clone();
    let mut lam = one.clone();
    let mut theta = one.clone();
    for i in 0..n {
        lhs = lhs.mul(&one.sub(&Poly::var(n, i).pow(p)));
        lam = lam.mul(&one.sub(&Poly::var(n, i)));
        theta = theta.mul(&geometric_factor(n, i, p));
    }
    let rhs = lam.mul(&theta);
    Ok(lhs == rhs && symmetric_reduce(&lhs)? == symmetric_reduce(&lam)?.mul(&symmetric_reduce(&theta)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn power_sum_reduces() {
        let p = Poly::var(2, 0).pow(2).add(&Poly::var(2, 1).pow(2));
        let r = symmetric_reduce(&p).unwrap();
        // e1^2 - 2 e2
        let expect = Poly::var(2, 0).pow(2).sub(&Poly::var(2, 1).mul(&Poly::constant(2, 2)));
        assert_eq!(r, expect);
        assert_eq!(expand_elementary(&r), p);
    }

    #[test]
    fn generating_product() {
        let p = Poly::one(2).add(&Poly::var(2, 0)).mul(&Poly::one(2).add(&Poly::var(2, 1)));
        let r = symmetric_reduce(&p).unwrap();
        assert_eq!(r, Poly::one(2).add(&Poly::var(2, 0)).add(&Poly::var(2, 1)));
        assert_eq!(symmetric_reduce(&Poly::elementary(3, 1)).unwrap(), Poly::var(3, 0));
    }

    #[test]
    fn rejects_non_symmetric() {
        assert!(matches!(symmetric_reduce(&Poly::var(2, 0)), Err(Error::NotSymmetric(_))));
    }

    #[test]
    fn cartier_small_cases() {
        for (n, p) in [(1, 2), (3, 3), (2, 5), (3, 2)] {
            assert!(cartier_identity_check(n, p).unwrap(), "n={n} p={p}");
        }
    }
}
