//! Polynomial rings with standard grading, sparse polynomials over any
//! [`Field`], and monomial bases per degree in graded-lex order.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

use crate::exact_arith::Field;

pub type Monomial = Vec<u32>;

/// Exponent vectors of total degree `d` in `nvars` variables, in descending
/// lexicographic order (`x_0^d` first).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() + 1 == nvars {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            rec(nvars, d - e, prefix, out);
            prefix.pop();
        }
    }
    if nvars == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(nvars, d, &mut Vec::with_capacity(nvars), &mut out);
    out
}

pub fn monomial_mul(a: &[u32], b: &[u32]) -> Monomial {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn monomial_degree(m: &[u32]) -> u32 {
    m.iter().sum()
}

/// Monomials of one degree in order, with their positions.
type DegreeBasis = Arc<(Vec<Monomial>, HashMap<Monomial, usize>)>;

/// `k[x_0, ..., x_{n-1}]` with every variable in degree one; degree bases are
/// computed on first use and cached.
#[derive(Debug)]
pub struct GradedAlgebra {
    nvars: usize,
    bases: Mutex<HashMap<u32, DegreeBasis>>,
}

impl GradedAlgebra {
    pub fn new(nvars: usize) -> Self {
        Self { nvars, bases: Mutex::new(HashMap::new()) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    fn cached(&self, d: u32) -> Arc<(Vec<Monomial>, HashMap<Monomial, usize>)> {
        let mut cache = self.bases.lock().expect("basis cache");
        cache
            .entry(d)
            .or_insert_with(|| {
                let b = monomials_of_degree(self.nvars, d);
                let idx = b.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
                Arc::new((b, idx))
            })
            .clone()
    }

    pub fn basis(&self, d: u32) -> Vec<Monomial> {
        self.cached(d).0.clone()
    }

    pub fn dim(&self, d: i64) -> usize {
        if d < 0 {
            0
        } else {
            self.cached(d as u32).0.len()
        }
    }

    pub fn index(&self, m: &[u32]) -> Option<usize> {
        self.cached(monomial_degree(m)).1.get(m).copied()
    }

    /// Coordinates of a homogeneous polynomial of degree `d` in the monomial basis.
    pub fn coordinates<F: Field>(&self, p: &Poly<F>, d: u32) -> Vec<F> {
        let mut v = vec![F::fzero(); self.dim(d as i64)];
        for (m, c) in &p.terms {
            let i = self.index(m).expect("homogeneous of the stated degree");
            v[i] = c.clone();
        }
        v
    }
}

/// Sparse polynomial.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F: Field> {
    pub nvars: usize,
    pub terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Self { nvars, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let nvars = m.len();
        let mut p = Self::zero(nvars);
        p.add_term(m, c);
        p
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        Self::monomial(m, F::fone())
    }

    /// `Σ c_i x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        coeffs.iter().enumerate().fold(Self::zero(n), |acc, (i, &c)| {
            acc.add(&Self::var(n, i).scale(&F::from_i64(c)))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_fzero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = x.fadd(&c);
                if x.is_fzero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m, x) in &self.terms {
            out.add_term(m.clone(), x.fmul(c));
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&F::fone().fneg()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(monomial_mul(a, b), x.fmul(y));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &[u32]) -> Self {
        Self { nvars: self.nvars, terms: self.terms.iter().map(|(a, c)| (monomial_mul(a, m), c.clone())).collect() }
    }

    /// Degree if homogeneous; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| monomial_degree(m));
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Renames variables: variable `i` becomes `map[i]` in a ring of `nvars` variables.
    pub fn substitute_vars(&self, map: &[usize], nvars: usize) -> Self {
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            let mut e = vec![0; nvars];
            for (i, &k) in m.iter().enumerate() {
                e[map[i]] += k;
            }
            out.add_term(e, c.clone());
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Rational;

    #[test]
    fn bases_have_binomial_sizes() {
        let a = GradedAlgebra::new(3);
        assert_eq!(a.dim(0), 1);
        assert_eq!(a.dim(2), 6);
        assert_eq!(a.dim(4), 15);
        assert_eq!(a.basis(1), vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(a.index(&[0, 0, 2]), Some(5));
    }

    #[test]
    fn arithmetic() {
        let x = Poly::<Rational>::var(2, 0);
        let y = Poly::<Rational>::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p, x.mul(&x).sub(&y.mul(&y)));
        assert_eq!(p.homogeneous_degree(), Some(2));
    }
}
