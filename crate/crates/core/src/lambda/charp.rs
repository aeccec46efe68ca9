//! Rings `Z[1/p] ⊕ I` with `I · I = 0`: `K_0` of a smooth curve after
//! inverting `p`, where the augmentation ideal squares to zero.

use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exact_arith::rational::denominator_is_power_of;
use crate::exact_arith::Rational;

/// `rank + Σ c_s · s` where the symbols `s` span a square-zero ideal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AugmentedTruncated {
    prime: u64,
    rank: Rational,
    ideal: BTreeMap<String, Rational>,
}

impl AugmentedTruncated {
    pub fn new(prime: u64, rank: Rational, ideal: &[(&str, Rational)]) -> Result<Self> {
        if !crate::exact_arith::is_prime(prime) {
            return Err(Error::NotPrime(prime));
        }
        let mut x = Self { prime, rank, ideal: BTreeMap::new() };
        for (s, c) in ideal {
            x.add_symbol(s, c.clone());
        }
        x.check_localized()?;
        Ok(x)
    }

    pub fn scalar(prime: u64, rank: Rational) -> Result<Self> {
        Self::new(prime, rank, &[])
    }

    /// The class of a line bundle `L`: rank one plus the ideal element `L - 1`.
    pub fn line(prime: u64, symbol: &str) -> Result<Self> {
        Self::new(prime, Rational::one(), &[(symbol, Rational::one())])
    }

    fn add_symbol(&mut self, s: &str, c: Rational) {
        let e = self.ideal.entry(s.to_string()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.ideal.remove(s);
        }
    }

    fn check_localized(&self) -> Result<()> {
        for c in std::iter::once(&self.rank).chain(self.ideal.values()) {
            if !denominator_is_power_of(c, self.prime) {
                return Err(Error::NotLocalized { value: c.to_string(), prime: self.prime });
            }
        }
        Ok(())
    }

    pub fn rank(&self) -> &Rational {
        &self.rank
    }

    pub fn ideal_part(&self) -> &BTreeMap<String, Rational> {
        &self.ideal
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.rank += &other.rank;
        for (s, c) in &other.ideal {
            out.add_symbol(s, c.clone());
        }
        out
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self { prime: self.prime, rank: &self.rank * q, ideal: BTreeMap::new() };
        for (s, c) in &self.ideal {
            out.add_symbol(s, c * q);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    /// `(a + x)(b + y) = ab + ay + bx` since `xy = 0`.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self { prime: self.prime, rank: &self.rank * &other.rank, ideal: BTreeMap::new() };
        for (s, c) in &other.ideal {
            out.add_symbol(s, &self.rank * c);
        }
        for (s, c) in &self.ideal {
            out.add_symbol(s, &other.rank * c);
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self { prime: self.prime, rank: Rational::one(), ideal: BTreeMap::new() }, |acc, _| {
            acc.mul(self)
        })
    }

    /// `(a + x)^{-1} = a^{-1} - a^{-2} x`; requires `a` to be a unit of `Z[1/p]`.
    pub fn inverse(&self) -> Result<Self> {
        if self.rank.is_zero() {
            return Err(Error::NotInvertible("rank zero".into()));
        }
        let inv = self.rank.recip();
        let out = Self { prime: self.prime, rank: inv.clone(), ideal: BTreeMap::new() };
        let out = out.add(&Self {
            prime: self.prime,
            rank: Rational::zero(),
            ideal: self.ideal.iter().map(|(s, c)| (s.clone(), -(c * &inv * &inv))).collect(),
        });
        out.check_localized().map_err(|_| {
            Error::NotInvertible(format!("rank {} is not a unit after inverting {}", self.rank, self.prime))
        })?;
        Ok(out)
    }

    /// Bott element of a line: `1 + L + ... + L^{p-1}`.
    pub fn bott_theta_line(&self) -> Self {
        (0..self.prime as u32).fold(Self { prime: self.prime, rank: Rational::zero(), ideal: BTreeMap::new() }, |acc, k| {
            acc.add(&self.pow(k))
        })
    }
}

impl fmt::Display for AugmentedTruncated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rank)?;
        for (s, c) in &self.ideal {
            write!(f, " + ({c})*({s} - 1)")?;
        }
        Ok(())
    }
}

/// Inverse of `θ^p(Ω)` for the cotangent line `Ω` of a curve, computed
/// directly and through `2/p - θ^p(Ω)/p^2`; both must agree.
pub fn curve_theta_inverse(p: u64) -> Result<AugmentedTruncated> {
    let omega = AugmentedTruncated::line(p, "Omega")?;
    let theta = omega.bott_theta_line();
    let direct = theta.inverse()?;
    let pq = Rational::from_integer(p.into());
    let closed = AugmentedTruncated::scalar(p, Rational::from_integer(2.into()) / &pq)?
        .sub(&theta.scale(&(Rational::one() / (&pq * &pq))));
    if direct != closed {
        return Err(Error::RouteDisagreement(format!("theta inverse {direct} vs closed form {closed}")));
    }
    if direct.mul(&theta) != AugmentedTruncated::scalar(p, Rational::one())? {
        return Err(Error::Invariant("theta inverse does not invert".into()));
    }
    Ok(direct)
}
