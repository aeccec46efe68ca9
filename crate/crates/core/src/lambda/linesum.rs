//! λ-operations on sums of line classes `χ ⊗ h^m` in `R(G) ⊗ K_0(P^n)`:
//! `λ_{-1}`, Bott elements `θ^l` and their inverses after inverting `l`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use std::sync::Arc;

use super::symmetric::{geometric_factor, symmetric_reduce, Poly};
use crate::characters::ClassFunction;
use crate::error::{Error, Result};
use crate::exact_arith::{Cyclotomic, Rational};
use crate::groups::FiniteGroup;
use crate::kspaces::{EqKClass, KClassPn};

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

/// `χ ⊗ h^m` for a one-dimensional character `χ`.
fn line_class(chi: &ClassFunction, m: i64, n: usize) -> Result<EqKClass> {
    EqKClass::rep_times_base(chi, &KClassPn::h_pow(n, m))
}

/// `Σ mult · (χ ⊗ h^twist)` with one-dimensional characters `χ`.
#[derive(Clone, Debug)]
pub struct LineSumClass {
    group: Arc<FiniteGroup>,
    n: usize,
    terms: Vec<(ClassFunction, i64, i64)>,
}

impl LineSumClass {
    pub fn new(group: &Arc<FiniteGroup>, n: usize, terms: Vec<(ClassFunction, i64, i64)>) -> Result<Self> {
        for (chi, _, _) in &terms {
            if !Arc::ptr_eq(chi.group(), group) {
                return Err(Error::GroupMismatch("line character on another group".into()));
            }
            if chi.degree() != &Cyclotomic::one() || chi.inner(chi)? != Cyclotomic::one() {
                return Err(Error::InvalidInput("line monomials need one-dimensional characters".into()));
            }
        }
        Ok(Self { group: group.clone(), n, terms })
    }

    /// Trivial action: `Σ mult · h^twist`.
    pub fn from_twists(group: &Arc<FiniteGroup>, n: usize, terms: &[(i64, i64)]) -> Result<Self> {
        let triv = ClassFunction::trivial(group);
        Self::new(group, n, terms.iter().map(|&(m, k)| (triv.clone(), m, k)).collect())
    }

    /// `[Ω_{P^n}] = (n+1) h^{-1} - 1`, from the Euler sequence.
    pub fn cotangent_pn(group: &Arc<FiniteGroup>, n: usize) -> Result<Self> {
        Self::from_twists(group, n, &[(-1, n as i64 + 1), (0, -1)])
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &[(ClassFunction, i64, i64)] {
        &self.terms
    }

    pub fn is_genuine(&self) -> bool {
        self.terms.iter().all(|t| t.2 >= 0)
    }

    pub fn rank(&self) -> i64 {
        self.terms.iter().map(|t| t.2).sum()
    }

    pub fn to_eqk(&self) -> Result<EqKClass> {
        let mut acc = EqKClass::zero(&self.group, self.n)?;
        for (chi, m, k) in &self.terms {
            acc = acc.add(&line_class(chi, *m, self.n)?.scale(&int(*k)))?;
        }
        Ok(acc)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(&self.group, &other.group) || self.n != other.n {
            return Err(Error::GroupMismatch("line sums in different rings".into()));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(Self { group: self.group.clone(), n: self.n, terms })
    }

    /// `λ_{-1}(x) = ∏ (1 - L)^{mult}`. A negative multiplicity would need
    /// `Σ_i L^i`, which does not terminate for a line, so it is rejected.
    pub fn lambda_minus_one(&self) -> Result<EqKClass> {
        let one = EqKClass::one(&self.group, self.n)?;
        let mut acc = one.clone();
        for (chi, m, k) in &self.terms {
            if *k < 0 {
                return Err(Error::NonTerminating(format!(
                    "lambda_-1 of a negative multiple of the line {chi} * h^{m}"
                )));
            }
            let factor = one.sub(&line_class(chi, *m, self.n)?)?;
            acc = acc.mul(&factor.pow(*k as u32)?)?;
        }
        Ok(acc)
    }

    /// `θ^l(x) = ∏ (1 + L + ... + L^{l-1})^{mult}`; negative multiplicities
    /// use the inverse, which needs `l` inverted.
    pub fn bott_theta(&self, l: u32) -> Result<EqKClass> {
        let mut acc = EqKClass::one(&self.group, self.n)?;
        for (chi, m, k) in &self.terms {
            let line = line_class(chi, *m, self.n)?;
            let mut factor = EqKClass::zero(&self.group, self.n)?;
            let mut power = EqKClass::one(&self.group, self.n)?;
            for _ in 0..l {
                factor = factor.add(&power)?;
                power = power.mul(&line)?;
            }
            let factor = if *k < 0 { factor.inverse()? } else { factor };
            acc = acc.mul(&factor.pow(k.unsigned_abs() as u32)?)?;
        }
        Ok(acc)
    }

    /// `θ^l(x)^{-1}`, verified to have coefficients in `Z[1/l]` and to invert `θ^l(x)`.
    pub fn bott_theta_inverse(&self, l: u32) -> Result<EqKClass> {
        let theta = self.bott_theta(l)?;
        let inv = theta.inverse()?;
        if !inv.is_localized_at(l as u64) {
            return Err(Error::NotLocalized { value: inv.to_string(), prime: l as u64 });
        }
        if inv.mul(&theta)? != EqKClass::one(&self.group, self.n)? {
            return Err(Error::Invariant("theta inverse does not invert theta".into()));
        }
        Ok(inv)
    }

    /// Coefficients of `λ_t(x) = Σ λ^k(x) t^k` up to `t^{max}` for genuine `x`.
    pub fn lambda_series(&self, max: usize) -> Result<Vec<EqKClass>> {
        let zero = EqKClass::zero(&self.group, self.n)?;
        let mut series = vec![zero; max + 1];
        series[0] = EqKClass::one(&self.group, self.n)?;
        for (chi, m, k) in &self.terms {
            if *k < 0 {
                return Err(Error::NonTerminating("lambda series of a virtual line sum".into()));
            }
            let line = line_class(chi, *m, self.n)?;
            for _ in 0..*k {
                for d in (1..=max).rev() {
                    series[d] = series[d].add(&series[d - 1].mul(&line)?)?;
                }
            }
        }
        Ok(series)
    }

    /// The same class as a representation-weighted line sum, grouping
    /// characters by twist.
    pub fn to_rep_line_sum(&self) -> Result<RepLineSum> {
        let mut by_twist: BTreeMap<i64, ClassFunction> = BTreeMap::new();
        for (chi, m, k) in &self.terms {
            let e = by_twist.entry(*m).or_insert_with(|| ClassFunction::zero(&self.group));
            *e = e.add(&chi.scale(&int(*k)))?;
        }
        RepLineSum::new(&self.group, self.n, by_twist.into_iter().map(|(m, v)| (v, m)).collect())
    }
}

/// `Σ V_j ⊗ h^{m_j}` with genuine representations `V_j`; `λ_{-1}` is computed
/// from exterior powers of the characters.
#[derive(Clone, Debug)]
pub struct RepLineSum {
    group: Arc<FiniteGroup>,
    n: usize,
    terms: Vec<(ClassFunction, i64)>,
}

impl RepLineSum {
    pub fn new(group: &Arc<FiniteGroup>, n: usize, terms: Vec<(ClassFunction, i64)>) -> Result<Self> {
        for (v, _) in &terms {
            if v.decompose()?.iter().any(|c| c < &BigInt::from(0)) {
                return Err(Error::NonTerminating(format!("lambda_-1 of the virtual representation {v:?}")));
            }
        }
        Ok(Self { group: group.clone(), n, terms })
    }

    pub fn terms(&self) -> &[(ClassFunction, i64)] {
        &self.terms
    }

    pub fn to_eqk(&self) -> Result<EqKClass> {
        let mut acc = EqKClass::zero(&self.group, self.n)?;
        for (v, m) in &self.terms {
            acc = acc.add(&EqKClass::rep_times_base(v, &KClassPn::h_pow(self.n, *m))?)?;
        }
        Ok(acc)
    }

    /// Tensor with a representation: `V_j ⊗ W` in every term.
    pub fn tensor_rep(&self, w: &ClassFunction) -> Result<Self> {
        let terms = self.terms.iter().map(|(v, m)| Ok((v.mul(w)?, *m))).collect::<Result<Vec<_>>>()?;
        Self::new(&self.group, self.n, terms)
    }

    /// `λ^k(V ⊗ h^m) = Λ^k(V) ⊗ h^{km}`, so `λ_{-1}` multiplies
    /// `Σ_k (-1)^k Λ^k(V) h^{km}` over the terms.
    pub fn lambda_minus_one(&self) -> Result<EqKClass> {
        let mut acc = EqKClass::one(&self.group, self.n)?;
        for (v, m) in &self.terms {
            let rank = v.degree().as_rational().and_then(|q| q.to_integer().to_usize()).unwrap_or(0);
            let powers = v.exterior_powers(rank)?;
            let mut factor = EqKClass::zero(&self.group, self.n)?;
            for (k, lam) in powers.iter().enumerate() {
                let term = EqKClass::rep_times_base(lam, &KClassPn::h_pow(self.n, *m * k as i64))?;
                factor = if k % 2 == 0 { factor.add(&term)? } else { factor.sub(&term)? };
            }
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }

    /// `λ^k` of the whole sum, `k = 0..=max`, from the product of the
    /// per-term `λ_t` series.
    pub fn lambda_powers(&self, max: usize) -> Result<Vec<EqKClass>> {
        let zero = EqKClass::zero(&self.group, self.n)?;
        let mut acc = vec![zero.clone(); max + 1];
        acc[0] = EqKClass::one(&self.group, self.n)?;
        for (v, m) in &self.terms {
            let powers = v.exterior_powers(max)?;
            let series: Vec<EqKClass> = powers
                .iter()
                .enumerate()
                .map(|(k, lam)| EqKClass::rep_times_base(lam, &KClassPn::h_pow(self.n, *m * k as i64)))
                .collect::<Result<_>>()?;
            let mut next = vec![zero.clone(); max + 1];
            for i in 0..=max {
                for j in 0..=max - i {
                    next[i + j] = next[i + j].add(&acc[i].mul(&series[j])?)?;
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// `θ^l` by the splitting principle: reduce `∏_i (1 + x_i + ... + x_i^{l-1})`
    /// over `rank` variables to elementary symmetric functions and substitute
    /// `e_k ↦ λ^k(x)`.
    pub fn bott_theta_symmetric(&self, l: u32) -> Result<EqKClass> {
        let rank = self
            .terms
            .iter()
            .map(|(v, _)| v.degree().as_rational().and_then(|q| q.to_integer().to_usize()).unwrap_or(0))
            .sum::<usize>();
        if rank == 0 {
            return EqKClass::one(&self.group, self.n);
        }
        let mut p = Poly::one(rank);
        for i in 0..rank {
            p = p.mul(&geometric_factor(rank, i, l));
        }
        let reduced = symmetric_reduce(&p)?;
        let lambdas = self.lambda_powers(rank)?;
        let group = self.group.clone();
        let n = self.n;
        let from_int = |c: &BigInt| {
            EqKClass::one(&group, n).expect("one").scale(&Rational::from_integer(c.clone()))
        };
        Ok(reduced.evaluate(
            &lambdas[1..],
            from_int,
            |a, b| a.add(b).expect("same ring"),
            |a, b| a.mul(b).expect("same ring"),
        ))
    }
}

/// `λ_{-1}(F ⊗ W)` for a line sum `F` with trivial action and a representation `W`.
pub fn lambda_minus_one_twisted(f: &LineSumClass, w: &ClassFunction) -> Result<EqKClass> {
    f.to_rep_line_sum()?.tensor_rep(w)?.lambda_minus_one()
}

/// `1 - [χ]` style check value: `Σ_k (-1)^k Λ^k(V)` on the point.
pub fn lambda_minus_one_rep(v: &ClassFunction) -> Result<ClassFunction> {
    let rank = v
        .degree()
        .as_rational()
        .and_then(|q| q.to_integer().to_usize())
        .ok_or_else(|| Error::InvalidInput("representation of non-integral rank".into()))?;
    let powers = v.exterior_powers(rank)?;
    let mut acc = ClassFunction::zero(v.group());
    for (k, p) in powers.iter().enumerate() {
        acc = if k % 2 == 0 { acc.add(p)? } else { acc.sub(p)? };
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::ratio;
    use crate::groups::{cyclic, symmetric};

    #[test]
    fn lambda_of_dual_hyperplane_on_p1() {
        let g = cyclic(1);
        let x = LineSumClass::from_twists(&g, 1, &[(-1, 1)]).unwrap();
        let expect = EqKClass::from_base(&g, &KClassPn::u_pow(1, 1)).unwrap();
        assert_eq!(x.lambda_minus_one().unwrap(), expect);
        let triv = LineSumClass::from_twists(&g, 1, &[(0, 1)]).unwrap();
        assert!(triv.lambda_minus_one().unwrap().is_zero());
        let neg = LineSumClass::from_twists(&g, 1, &[(0, -1)]).unwrap();
        assert!(matches!(neg.lambda_minus_one(), Err(Error::NonTerminating(_))));
    }

    #[test]
    fn lambda_of_sign_line() {
        let g = symmetric(2);
        let sgn = ClassFunction::sign(&g);
        let x = LineSumClass::new(&g, 0, vec![(sgn.clone(), 0, 1)]).unwrap();
        let expect = EqKClass::from_character(&ClassFunction::trivial(&g).sub(&sgn).unwrap(), 0).unwrap();
        assert_eq!(x.lambda_minus_one().unwrap(), expect);
        // H for l = 2 is the sign line.
        let h = ClassFunction::natural_permutation(&g).sub(&ClassFunction::trivial(&g)).unwrap();
        assert_eq!(h, sgn);
    }

    #[test]
    fn theta_examples() {
        let g = cyclic(1);
        let h = LineSumClass::from_twists(&g, 2, &[(1, 1)]).unwrap();
        let expect = EqKClass::from_base(&g, &KClassPn::h_pow(2, 0).add(&KClassPn::h_pow(2, 1))).unwrap();
        assert_eq!(h.bott_theta(2).unwrap(), expect);
        let triv = LineSumClass::from_twists(&g, 2, &[(0, 1)]).unwrap();
        assert_eq!(triv.bott_theta(5).unwrap(), EqKClass::from_base(&g, &KClassPn::from_int(2, 5)).unwrap());
        let omega = LineSumClass::from_twists(&g, 1, &[(-2, 1)]).unwrap();
        let t = omega.bott_theta(2).unwrap();
        assert_eq!(t, EqKClass::from_base(&g, &KClassPn::from_ints(1, &[2, -2]).unwrap()).unwrap());
        let inv = omega.bott_theta_inverse(2).unwrap();
        let half = ratio(1, 2).unwrap();
        assert_eq!(inv, EqKClass::from_base(&g, &KClassPn::new(1, vec![half.clone(), half]).unwrap()).unwrap());
        let empty = LineSumClass::from_twists(&g, 1, &[]).unwrap();
        assert_eq!(empty.bott_theta_inverse(3).unwrap(), EqKClass::one(&g, 1).unwrap());
    }

    #[test]
    fn product_formula_matches_exterior_powers() {
        let g = symmetric(3);
        let sgn = ClassFunction::sign(&g);
        let triv = ClassFunction::trivial(&g);
        let x = LineSumClass::new(&g, 2, vec![(sgn, 1, 2), (triv, -1, 1)]).unwrap();
        assert_eq!(x.lambda_minus_one().unwrap(), x.to_rep_line_sum().unwrap().lambda_minus_one().unwrap());
        let series = x.lambda_series(3).unwrap();
        let alt = series.iter().enumerate().fold(EqKClass::zero(&g, 2).unwrap(), |acc, (k, s)| {
            if k % 2 == 0 { acc.add(s).unwrap() } else { acc.sub(s).unwrap() }
        });
        assert_eq!(alt, x.lambda_minus_one().unwrap());
    }

    #[test]
    fn theta_by_symmetric_functions_matches_line_rule() {
        let g = symmetric(2);
        let x = LineSumClass::new(&g, 1, vec![(ClassFunction::sign(&g), 1, 1), (ClassFunction::trivial(&g), -1, 1)])
            .unwrap();
        for l in 1..=4 {
            assert_eq!(x.to_rep_line_sum().unwrap().bott_theta_symmetric(l).unwrap(), x.bott_theta(l).unwrap());
        }
    }

    #[test]
    fn sign_lambda_on_point() {
        let g = symmetric(2);
        let sgn = ClassFunction::sign(&g);
        assert_eq!(lambda_minus_one_rep(&sgn).unwrap(), ClassFunction::trivial(&g).sub(&sgn).unwrap());
    }
}
