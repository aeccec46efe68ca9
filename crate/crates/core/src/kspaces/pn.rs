use num_traits::{One, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::rational::{big, binomial};
use crate::exact_arith::Rational;

/// Class in `K_0(P^n) = Z[u]/(u^{n+1})` with `u = h - 1` and `h = [O(1)]`.
/// Coefficients are rational so that localizations can be represented;
/// `n = 0` is the point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct KClassPn {
    n: usize,
    coeffs: Vec<Rational>,
}

impl KClassPn {
    pub fn new(n: usize, mut coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() > n + 1 {
            if coeffs[n + 1..].iter().any(|c| !c.is_zero()) {
                return Err(Error::DimensionMismatch(format!("u-degree exceeds {n}")));
            }
            coeffs.truncate(n + 1);
        }
        coeffs.resize(n + 1, Rational::zero());
        Ok(Self { n, coeffs })
    }

    pub fn from_ints(n: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(n, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(n: usize) -> Self {
        Self { n, coeffs: vec![Rational::zero(); n + 1] }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut x = Self::zero(n);
        x.coeffs[0] = c;
        x
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn from_int(n: usize, k: i64) -> Self {
        Self::constant(n, Rational::from_integer(k.into()))
    }

    /// `u^k`.
    pub fn u_pow(n: usize, k: usize) -> Self {
        let mut x = Self::zero(n);
        if k <= n {
            x.coeffs[k] = Rational::one();
        }
        x
    }

    /// `h^m = (1 + u)^m` for any integer `m`.
    pub fn h_pow(n: usize, m: i64) -> Self {
        Self {
            n,
            coeffs: (0..=n as i64).map(|k| big(&binomial(m, k))).collect(),
        }
    }

    /// `Σ c_m h^m`.
    pub fn from_h_terms(n: usize, terms: &[(i64, i64)]) -> Self {
        terms.iter().fold(Self::zero(n), |acc, &(m, c)| {
            acc.add(&Self::h_pow(n, m).scale(&Rational::from_integer(c.into())))
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn rank(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn is_localized_at(&self, l: u64) -> bool {
        self.coeffs
            .iter()
            .all(|c| crate::exact_arith::rational::denominator_is_power_of(c, l))
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.n, other.n, "classes on different projective spaces");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        Self { n: self.n, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        Self { n: self.n, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn neg(&self) -> Self {
        Self { n: self.n, coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self { n: self.n, coeffs: self.coeffs.iter().map(|a| a * q).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let mut c = vec![Rational::zero(); self.n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(self.n + 1 - i) {
                c[i + j] += a * b;
            }
        }
        Self { n: self.n, coeffs: c }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// Adams operation `h^m ↦ h^{km}`, i.e. `u ↦ (1+u)^k - 1`.
    pub fn psi(&self, k: i64) -> Self {
        let sub = Self::h_pow(self.n, k).sub(&Self::one(self.n));
        let mut acc = Self::zero(self.n);
        let mut power = Self::one(self.n);
        for c in &self.coeffs {
            acc = acc.add(&power.scale(c));
            power = power.mul(&sub);
        }
        acc
    }

    /// Inverse when the rank is nonzero: `c (1 + N)` with `N` nilpotent
    /// inverts as `c^{-1} Σ_k (-N)^k`.
    pub fn inverse(&self) -> Result<Self> {
        let c = self.coeffs[0].clone();
        if c.is_zero() {
            return Err(Error::NotInvertible(format!("{self} has rank 0")));
        }
        let cinv = c.recip();
        let nil = self.scale(&cinv).sub(&Self::one(self.n));
        let mut acc = Self::zero(self.n);
        let mut term = Self::one(self.n);
        let minus = nil.neg();
        for _ in 0..=self.n {
            acc = acc.add(&term);
            term = term.mul(&minus);
        }
        if !term.is_zero() {
            return Err(Error::Invariant("nilpotent part did not vanish".into()));
        }
        Ok(acc.scale(&cinv))
    }

    /// Coordinates in the basis `h^0, ..., h^n` (`u^j = (h-1)^j`).
    pub fn to_h_basis(&self) -> Vec<Rational> {
        (0..=self.n as i64)
            .map(|k| {
                (k..=self.n as i64).fold(Rational::zero(), |acc, j| {
                    let sign = if (j - k) % 2 == 0 { 1 } else { -1 };
                    acc + &self.coeffs[j as usize] * big(&(binomial(j, k) * sign))
                })
            })
            .collect()
    }

    /// Push-forward to the point, `h^m ↦ C(n+m, n)` extended linearly.
    pub fn pushforward(&self) -> Rational {
        let n = self.n as i64;
        self.coeffs.iter().enumerate().fold(Rational::zero(), |acc, (k, c)| {
            let k = k as i64;
            let fk = (0..=k).fold(num_bigint::BigInt::zero(), |s, j| {
                let sign = if (k - j) % 2 == 0 { 1 } else { -1 };
                s + binomial(k, j) * binomial(n + j, n) * sign
            });
            acc + c * big(&fk)
        })
    }

    /// The same polynomial read on `P^m` (truncating or zero-extending).
    pub fn to_space(&self, m: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(m + 1, Rational::zero());
        c.truncate(m + 1);
        Self { n: m, coeffs: c }
    }
}

/// `χ(P^n, O(m)) = C(n+m, n)` as a polynomial in `m`.
pub fn euler_characteristic(n: usize, m: i64) -> Rational {
    let n = n as i64;
    let num = (1..=n).fold(num_bigint::BigInt::one(), |acc, i| acc * (m + i));
    big(&num) / big(&crate::exact_arith::rational::factorial(n as u64))
}

impl fmt::Display for KClassPn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match k {
                0 => c.to_string(),
                1 if c.is_one() => "u".to_string(),
                1 => format!("{c}u"),
                _ if c.is_one() => format!("u^{k}"),
                _ => format!("{c}u^{k}"),
            });
        }
        if parts.is_empty() {
            return write!(f, "0");
        }
        write!(f, "{}", parts.join(" + ").replace("+ -", "- "))
    }
}

impl fmt::Debug for KClassPn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{int, ratio};

    #[test]
    fn inverse_of_h() {
        for n in 0..5 {
            let h = KClassPn::h_pow(n, 1);
            assert_eq!(h.inverse().unwrap(), KClassPn::h_pow(n, -1));
            assert_eq!(h.mul(&KClassPn::h_pow(n, -1)), KClassPn::one(n));
        }
    }

    #[test]
    fn pushforward_matches_euler_characteristic() {
        for n in 0..5 {
            for m in -6..6 {
                assert_eq!(KClassPn::h_pow(n, m).pushforward(), euler_characteristic(n, m), "n={n} m={m}");
            }
        }
        assert_eq!(KClassPn::h_pow(2, -1).pushforward(), int(0));
        assert_eq!(KClassPn::h_pow(2, -3).pushforward(), int(1));
    }

    #[test]
    fn psi_is_multiplicative_on_lines() {
        let n = 3;
        for m in -2..3 {
            for k in 1..4 {
                assert_eq!(KClassPn::h_pow(n, m).psi(k), KClassPn::h_pow(n, m * k));
            }
        }
    }

    #[test]
    fn h_basis_roundtrip() {
        let x = KClassPn::from_ints(2, &[3, -1, 4]).unwrap();
        let h = x.to_h_basis();
        let back = h.iter().enumerate().fold(KClassPn::zero(2), |acc, (m, c)| {
            acc.add(&KClassPn::h_pow(2, m as i64).scale(c))
        });
        assert_eq!(back, x);
    }

    #[test]
    fn theta_of_cotangent_on_p1() {
        // θ²(Ω_{P^1}) = 1 + h^{-2} = 2 - 2u; its inverse is (1+u)/2.
        let theta = KClassPn::one(1).add(&KClassPn::h_pow(1, -2));
        assert_eq!(theta, KClassPn::from_ints(1, &[2, -2]).unwrap());
        let inv = theta.inverse().unwrap();
        assert_eq!(inv, KClassPn::new(1, vec![ratio(1, 2).unwrap(), ratio(1, 2).unwrap()]).unwrap());
    }

    #[test]
    fn rank_zero_not_invertible() {
        assert!(KClassPn::u_pow(2, 1).inverse().is_err());
    }
}
