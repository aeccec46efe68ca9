use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

use super::linalg::{determinant, solve, Matrix};
use super::rational::{lcm_u64, totient, Rational};
use crate::error::{Error, Result};

/// Integer coefficients of the `n`-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    // x^n - 1 = prod_{d | n} Phi_d, so divide out every proper divisor.
    let mut p: Vec<BigInt> = vec![BigInt::zero(); n as usize + 1];
    p[0] = -BigInt::one();
    p[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = exact_divide(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

/// Exact division of integer polynomials by a monic divisor.
fn exact_divide(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        quot[i] = c;
    }
    debug_assert!(rem.iter().all(|x| x.is_zero()));
    quot
}

/// Element of `Q(zeta_n)` in the power basis `1, zeta, ..., zeta^(phi(n)-1)`.
///
/// Values of different orders are compared and combined by lifting both to
/// the least common multiple of the orders.
#[derive(Clone)]
pub struct Cyclotomic {
    order: u64,
    coeffs: Vec<Rational>,
    modulus: Arc<Vec<BigInt>>,
}

impl Cyclotomic {
    pub fn from_rational(q: Rational) -> Self {
        Self { order: 1, coeffs: vec![q], modulus: Arc::new(cyclotomic_polynomial(1)) }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(n: u64, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut c = vec![Rational::zero(); n as usize];
        c[e] = Rational::one();
        Self::from_power_coeffs(n, &c)
    }

    /// Reduces `sum_i c[i] zeta_n^i` (any number of terms) into canonical form.
    pub fn from_power_coeffs(n: u64, c: &[Rational]) -> Self {
        let modulus = Arc::new(cyclotomic_polynomial(n));
        Self::reduce_with(n, c, modulus)
    }

    fn reduce_with(n: u64, c: &[Rational], modulus: Arc<Vec<BigInt>>) -> Self {
        let nu = n as usize;
        let mut folded = vec![Rational::zero(); nu];
        for (i, x) in c.iter().enumerate() {
            if !x.is_zero() {
                folded[i % nu] += x;
            }
        }
        let deg = modulus.len() - 1;
        for i in (deg..nu).rev() {
            let lead = folded[i].clone();
            if lead.is_zero() {
                continue;
            }
            for (j, mj) in modulus.iter().enumerate() {
                folded[i - deg + j] -= &lead * Rational::from_integer(mj.clone());
            }
        }
        folded.truncate(deg);
        Self { order: n, coeffs: folded, modulus }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The rational value when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-expresses the element in `Q(zeta_m)`; `m` must be a multiple of the order.
    pub fn lift(&self, m: u64) -> Self {
        if m == self.order {
            return self.clone();
        }
        assert!(m.is_multiple_of(self.order), "lift to non-multiple order");
        let step = (m / self.order) as usize;
        let mut c = vec![Rational::zero(); m as usize];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[i * step] = x.clone();
        }
        Self::from_power_coeffs(m, &c)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.order == b.order {
            return (a.clone(), b.clone());
        }
        let m = lcm_u64(a.order, b.order);
        (a.lift(m), b.lift(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.order == other.order {
            let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect();
            return Self { order: self.order, coeffs, modulus: self.modulus.clone() };
        }
        let (a, b) = Self::common(self, other);
        a.add(&b)
    }

    pub fn neg(&self) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| -x).collect(),
            modulus: self.modulus.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.order != other.order {
            let (a, b) = Self::common(self, other);
            return a.mul(&b);
        }
        if self.order == 1 {
            return Self {
                order: 1,
                coeffs: vec![&self.coeffs[0] * &other.coeffs[0]],
                modulus: self.modulus.clone(),
            };
        }
        let mut prod = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        Self::reduce_with(self.order, &prod, self.modulus.clone())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|x| x * q).collect(),
            modulus: self.modulus.clone(),
        }
    }

    /// Complex conjugation `zeta -> zeta^(-1)`.
    pub fn conj(&self) -> Self {
        let n = self.order as usize;
        let mut c = vec![Rational::zero(); n];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[(n - i) % n] += x;
        }
        Self::reduce_with(self.order, &c, self.modulus.clone())
    }

    /// Matrix of multiplication by `self` in the power basis (columns are images).
    fn multiplication_matrix(&self) -> Matrix<Rational> {
        let d = self.coeffs.len();
        let mut cols = Vec::with_capacity(d);
        for k in 0..d {
            let mut c = vec![Rational::zero(); d];
            c[k] = Rational::one();
            let basis = Self { order: self.order, coeffs: c, modulus: self.modulus.clone() };
            cols.push(self.mul(&basis).coeffs);
        }
        (0..d).map(|i| (0..d).map(|j| cols[j][i].clone()).collect()).collect()
    }

    /// Field norm down to `Q`.
    pub fn norm(&self) -> Rational {
        determinant(&self.multiplication_matrix())
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.coeffs.len();
        let mut e = vec![Rational::zero(); d];
        e[0] = Rational::one();
        let x = solve(&self.multiplication_matrix(), &e, d)
            .ok_or_else(|| Error::Invariant("nonzero cyclotomic without inverse".into()))?;
        Ok(Self { order: self.order, coeffs: x, modulus: self.modulus.clone() })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Degree of the field this element is written in.
    pub fn field_degree(&self) -> u64 {
        totient(self.order)
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if i == 1 {
                        write!(f, "z{}", self.order)?;
                    } else {
                        write!(f, "z{}^{}", self.order, i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::rational::{int, ratio};

    fn poly(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(2), poly(&[1, 1]));
        assert_eq!(cyclotomic_polynomial(4), poly(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), poly(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12), poly(&[1, 0, -1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(5), poly(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn one_plus_zeta3_is_minus_zeta3_squared() {
        let lhs = Cyclotomic::one().add(&Cyclotomic::zeta_pow(3, 1));
        let rhs = Cyclotomic::zeta_pow(3, 2).neg();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for n in 2..=30u64 {
            let s = (0..n as i64).fold(Cyclotomic::zero(), |acc, k| acc.add(&Cyclotomic::zeta_pow(n, k)));
            assert!(s.is_zero(), "n = {n}");
            assert_eq!(Cyclotomic::zeta_pow(n, 1).pow(n as u32), Cyclotomic::one());
        }
    }

    #[test]
    fn mixed_orders_compare_by_lifting() {
        assert_eq!(Cyclotomic::zeta_pow(6, 2), Cyclotomic::zeta_pow(3, 1));
        assert_eq!(Cyclotomic::zeta_pow(2, 1), Cyclotomic::from_int(-1));
        let a = Cyclotomic::zeta_pow(4, 1).mul(&Cyclotomic::zeta_pow(3, 1));
        assert_eq!(a, Cyclotomic::zeta_pow(12, 7));
    }

    #[test]
    fn norm_and_inverse() {
        let x = Cyclotomic::one().sub(&Cyclotomic::zeta_pow(5, 1));
        assert_eq!(x.norm(), int(5));
        let inv = x.inverse().unwrap();
        assert_eq!(inv.mul(&x), Cyclotomic::one());
        let h = Cyclotomic::from_rational(ratio(1, 2).unwrap());
        assert_eq!(h.inverse().unwrap(), Cyclotomic::from_int(2));
        assert!(Cyclotomic::zero().inverse().is_err());
    }

    #[test]
    fn conjugation_inverts_roots() {
        for n in 1..=12u64 {
            for k in 0..n as i64 {
                let z = Cyclotomic::zeta_pow(n, k);
                assert_eq!(z.conj(), Cyclotomic::zeta_pow(n, -k));
                assert_eq!(z.mul(&z.conj()), Cyclotomic::one());
            }
        }
    }
}
