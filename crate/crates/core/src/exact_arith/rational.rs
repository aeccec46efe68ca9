use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

use crate::error::{Error, Result};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// `n / d`; errors on a zero denominator.
pub fn ratio(n: i64, d: i64) -> Result<Rational> {
    if d == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(BigInt::from(n), BigInt::from(d)))
}

pub fn checked_div(a: &Rational, b: &Rational) -> Result<Rational> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(a / b)
}

/// Integer value of `q` if it is an integer.
pub fn as_integer(q: &Rational) -> Option<BigInt> {
    if q.is_integer() {
        Some(q.to_integer())
    } else {
        None
    }
}

pub fn as_i64(q: &Rational) -> Option<i64> {
    as_integer(q).and_then(|n| n.to_i64())
}

/// Generalized binomial coefficient `C(n, k)` for any integer `n` and `k >= 0`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd_u64(k, n) == 1).count() as u64
}

/// Strips every factor `p` from `n` and returns what is left.
pub fn strip_prime(n: &BigInt, p: u64) -> BigInt {
    let p = BigInt::from(p);
    let mut n = n.abs();
    if n.is_zero() {
        return n;
    }
    while (&n % &p).is_zero() {
        n /= &p;
    }
    n
}

/// True when the denominator of `q` is a power of `p`.
pub fn denominator_is_power_of(q: &Rational, p: u64) -> bool {
    strip_prime(q.denom(), p).is_one()
}

/// Element of the localization `Z[1/l]` for a prime `l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LocalizedAtL {
    value: Rational,
    prime: u64,
}

impl LocalizedAtL {
    pub fn new(value: Rational, prime: u64) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        if !denominator_is_power_of(&value, prime) {
            return Err(Error::NotLocalized {
                value: value.to_string(),
                prime,
            });
        }
        Ok(Self { value, prime })
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::InvalidInput(format!(
                "mixing Z[1/{}] and Z[1/{}]",
                self.prime, other.prime
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        Ok(Self { value: &self.value + &other.value, prime: self.prime })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        Ok(Self { value: &self.value - &other.value, prime: self.prime })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        Ok(Self { value: &self.value * &other.value, prime: self.prime })
    }

    /// Inverse inside `Z[1/l]`; only `±l^k` are units.
    pub fn inverse(&self) -> Result<Self> {
        if self.value.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.value.recip(), self.prime)
    }
}

impl fmt::Display for LocalizedAtL {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(3, 5), BigInt::from(0));
    }

    #[test]
    fn localized_rejects_foreign_denominators() {
        assert!(LocalizedAtL::new(ratio(3, 4).unwrap(), 2).is_ok());
        assert!(LocalizedAtL::new(ratio(1, 6).unwrap(), 2).is_err());
        assert!(LocalizedAtL::new(int(1), 4).is_err());
        let x = LocalizedAtL::new(int(6), 3).unwrap();
        assert!(x.inverse().is_err());
        let y = LocalizedAtL::new(int(-9), 3).unwrap();
        assert_eq!(y.inverse().unwrap().value(), &ratio(-1, 9).unwrap());
    }

    #[test]
    fn zero_denominator_is_an_error() {
        assert_eq!(ratio(1, 0), Err(Error::DivisionByZero));
    }

    #[test]
    fn totients() {
        let t: Vec<u64> = (1..=12).map(totient).collect();
        assert_eq!(t, vec![1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }
}
