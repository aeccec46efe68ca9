use num_bigint::BigInt;
use num_traits::Zero;
use std::fmt;
use std::sync::Arc;

use super::table::character_table;
use crate::error::{Error, Result};
use crate::exact_arith::{Cyclotomic, Rational};
use crate::groups::{Embedding, FiniteGSet, FiniteGroup};

/// Function on conjugacy classes, with values in a cyclotomic field.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(", "))
    }
}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::DimensionMismatch(format!(
                "{} values for {} classes",
                values.len(),
                group.num_classes()
            )));
        }
        Ok(Self { group, values })
    }

    pub fn from_ints(group: Arc<FiniteGroup>, values: &[i64]) -> Result<Self> {
        Self::new(group, values.iter().map(|&v| Cyclotomic::from_int(v)).collect())
    }

    /// Evaluates `f` on each class representative.
    pub fn from_element_fn(group: &Arc<FiniteGroup>, f: impl Fn(usize) -> Cyclotomic) -> Self {
        let values = group.classes().classes.iter().map(|c| f(c.representative)).collect();
        Self { group: group.clone(), values }
    }

    pub fn zero(group: &Arc<FiniteGroup>) -> Self {
        Self::constant(group, Cyclotomic::zero())
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Self::constant(group, Cyclotomic::one())
    }

    fn constant(group: &Arc<FiniteGroup>, c: Cyclotomic) -> Self {
        Self { group: group.clone(), values: vec![c; group.num_classes()] }
    }

    pub fn sign(group: &Arc<FiniteGroup>) -> Self {
        Self::from_element_fn(group, |g| Cyclotomic::from_int(group.element(g).sign()))
    }

    /// Character of the permutation representation on a finite `G`-set.
    pub fn permutation(x: &FiniteGSet) -> Self {
        let g = x.group();
        Self::from_element_fn(g, |e| Cyclotomic::from_int(x.fixed_points(e).len() as i64))
    }

    /// Character of the permutation representation on the points the group moves.
    pub fn natural_permutation(group: &Arc<FiniteGroup>) -> Self {
        Self::from_element_fn(group, |g| {
            let p = group.element(g);
            Cyclotomic::from_int((0..p.degree()).filter(|&i| p.apply(i) == i).count() as i64)
        })
    }

    pub fn regular(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order() as i64;
        Self::from_element_fn(group, |g| Cyclotomic::from_int(if g == group.identity() { n } else { 0 }))
    }

    /// The `i`-th irreducible character.
    pub fn irreducible(group: &Arc<FiniteGroup>, i: usize) -> Result<Self> {
        let t = character_table(group)?;
        if i >= t.num_irreducibles() {
            return Err(Error::OutOfRange(format!("irreducible index {i}")));
        }
        Ok(Self { group: group.clone(), values: t.row(i).to_vec() })
    }

    pub fn from_multiplicities(group: &Arc<FiniteGroup>, m: &[BigInt]) -> Result<Self> {
        let t = character_table(group)?;
        if m.len() != t.num_irreducibles() {
            return Err(Error::DimensionMismatch("multiplicity vector length".into()));
        }
        let mut values = vec![Cyclotomic::zero(); group.num_classes()];
        for (i, mi) in m.iter().enumerate() {
            if mi.is_zero() {
                continue;
            }
            let q = Rational::from_integer(mi.clone());
            for (v, x) in values.iter_mut().zip(t.row(i)) {
                *v = v.add(&x.scale(&q));
            }
        }
        Ok(Self { group: group.clone(), values })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn at_class(&self, c: usize) -> &Cyclotomic {
        &self.values[c]
    }

    pub fn at_element(&self, g: usize) -> &Cyclotomic {
        &self.values[self.group.class_of(g)]
    }

    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::GroupMismatch(format!(
                "{} vs {}",
                self.group.name(),
                other.group.name()
            )));
        }
        Ok(())
    }

    fn zip(&self, other: &Self, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self> {
        self.same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(Self { group: self.group.clone(), values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, Cyclotomic::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, Cyclotomic::sub)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, Cyclotomic::mul)
    }

    pub fn neg(&self) -> Self {
        Self { group: self.group.clone(), values: self.values.iter().map(Cyclotomic::neg).collect() }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self { group: self.group.clone(), values: self.values.iter().map(|v| v.scale(q)).collect() }
    }

    pub fn conj(&self) -> Self {
        Self { group: self.group.clone(), values: self.values.iter().map(Cyclotomic::conj).collect() }
    }

    /// `(1/|G|) Σ_c |c| f(c) conj(g(c))`; needs no character table.
    pub fn inner(&self, other: &Self) -> Result<Cyclotomic> {
        self.same_group(other)?;
        let mut acc = Cyclotomic::zero();
        for ((x, y), c) in self.values.iter().zip(&other.values).zip(&self.group.classes().classes) {
            acc = acc.add(&x.mul(&y.conj()).scale(&Rational::from_integer(c.size().into())));
        }
        Ok(acc.scale(&Rational::new(1.into(), self.group.order().into())))
    }

    /// Multiplicities of the irreducibles; errors unless they are all integers.
    pub fn decompose(&self) -> Result<Vec<BigInt>> {
        self.decompose_rational()?
            .into_iter()
            .map(|q| {
                if q.is_integer() {
                    Ok(q.to_integer())
                } else {
                    Err(Error::NotVirtualCharacter(format!("multiplicity {q} in {self}")))
                }
            })
            .collect()
    }

    /// Multiplicities as rationals; errors if one is irrational.
    pub fn decompose_rational(&self) -> Result<Vec<Rational>> {
        let t = character_table(&self.group)?;
        (0..t.num_irreducibles())
            .map(|i| {
                let ip = t.inner(&self.values, t.row(i));
                ip.as_rational()
                    .ok_or_else(|| Error::NotVirtualCharacter(format!("irrational multiplicity {ip} in {self}")))
            })
            .collect()
    }

    pub fn is_virtual_character(&self) -> bool {
        self.decompose().is_ok()
    }

    /// Adams operation `ψ^k(f)(g) = f(g^k)`.
    pub fn psi(&self, k: i64) -> Self {
        let pm = self.group.power_map(k);
        Self { group: self.group.clone(), values: pm.iter().map(|&c| self.values[c].clone()).collect() }
    }

    pub fn restrict(&self, emb: &Embedding) -> Result<Self> {
        if !Arc::ptr_eq(emb.sup(), &self.group) {
            return Err(Error::GroupMismatch("restriction along an embedding into another group".into()));
        }
        let h = emb.sub();
        Ok(Self::from_element_fn(h, |x| self.at_element(emb.image(x)).clone()))
    }

    /// Induction `(1/|H|) Σ_{x ∈ G, x^{-1} g x ∈ H} φ(x^{-1} g x)`.
    pub fn induce(&self, emb: &Embedding) -> Result<Self> {
        if !Arc::ptr_eq(emb.sub(), &self.group) {
            return Err(Error::GroupMismatch("induction from a group other than the embedded one".into()));
        }
        let g = emb.sup();
        let scale = Rational::new(1.into(), (self.group.order() as i64).into());
        Ok(Self::from_element_fn(g, |rep| {
            let mut acc = Cyclotomic::zero();
            for x in 0..g.order() {
                let y = g.conjugate(g.inv(x), rep);
                if let Some(h) = emb.preimage(y) {
                    acc = acc.add(self.at_element(h));
                }
            }
            acc.scale(&scale)
        }))
    }

    /// `Λ^k` via Newton's identity `k λ^k = Σ_{i=1..k} (-1)^{i-1} ψ^i λ^{k-i}`.
    pub fn exterior_power(&self, k: usize) -> Result<Self> {
        Ok(self.exterior_powers(k)?.pop().expect("at least one power"))
    }

    /// `[Λ^0, ..., Λ^k]`.
    pub fn exterior_powers(&self, k: usize) -> Result<Vec<Self>> {
        let mut lam = vec![Self::trivial(&self.group)];
        for j in 1..=k {
            let mut acc = Self::zero(&self.group);
            for i in 1..=j {
                let term = self.psi(i as i64).mul(&lam[j - i])?;
                acc = if i % 2 == 1 { acc.add(&term)? } else { acc.sub(&term)? };
            }
            let next = acc.scale(&Rational::new(1.into(), (j as i64).into()));
            if !next.is_virtual_character() {
                return Err(Error::NotVirtualCharacter(format!("exterior power {j} of {self} is not integral")));
            }
            lam.push(next);
        }
        Ok(lam)
    }

    /// Outer tensor product onto a product group built by [`crate::groups::product`].
    pub fn outer(&self, other: &Self, prod: &Arc<FiniteGroup>) -> Result<Self> {
        let crate::groups::GroupKind::Product { left, right, pairs } = prod.kind() else {
            return Err(Error::GroupMismatch("outer product needs a product group".into()));
        };
        if !Arc::ptr_eq(left, &self.group) || !Arc::ptr_eq(right, &other.group) {
            return Err(Error::GroupMismatch("factors do not match the product group".into()));
        }
        Ok(Self::from_element_fn(prod, |g| {
            let (a, b) = pairs[g];
            self.at_element(a).mul(other.at_element(b))
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric, young};

    fn s3_std() -> ClassFunction {
        ClassFunction::from_ints(symmetric(3), &[2, 0, -1]).unwrap()
    }

    #[test]
    fn induce_trivial_from_young() {
        let y = young(&[1, 2]);
        let emb = Embedding::inclusion(&y, &symmetric(3)).unwrap();
        let ind = ClassFunction::trivial(&y).induce(&emb).unwrap();
        assert_eq!(ind, ClassFunction::from_ints(symmetric(3), &[3, 1, 0]).unwrap());
    }

    #[test]
    fn restrict_standard_to_c3() {
        let emb = Embedding::inclusion(&cyclic(3), &symmetric(3)).unwrap();
        let r = s3_std().restrict(&emb).unwrap();
        let c3 = cyclic(3);
        // classes of C3 are its elements: identity, generator, generator^2
        let vals: Vec<Cyclotomic> = (0..3)
            .map(|k| {
                let g = match c3.kind() {
                    crate::groups::GroupKind::Cyclic { powers, .. } => powers[k],
                    _ => unreachable!(),
                };
                r.at_element(g).clone()
            })
            .collect();
        assert_eq!(vals, vec![2.into(), (-1).into(), (-1).into()]);
    }

    #[test]
    fn psi_two_of_standard() {
        assert_eq!(s3_std().psi(2), ClassFunction::from_ints(symmetric(3), &[2, 2, -1]).unwrap());
    }

    #[test]
    fn exterior_powers_of_permutation_character() {
        let p = ClassFunction::from_ints(symmetric(3), &[3, 1, 0]).unwrap();
        assert_eq!(p.exterior_power(2).unwrap(), ClassFunction::from_ints(symmetric(3), &[3, -1, 0]).unwrap());
        assert_eq!(p.exterior_power(3).unwrap(), ClassFunction::sign(&symmetric(3)));
        assert_eq!(p.exterior_power(4).unwrap(), ClassFunction::zero(&symmetric(3)));
    }

    #[test]
    fn non_integral_multiplicity_rejected() {
        let f = ClassFunction::from_ints(symmetric(3), &[1, 0, 0]).unwrap();
        assert!(matches!(f.decompose(), Err(Error::NotVirtualCharacter(_))));
    }

    #[test]
    fn group_mismatch_detected() {
        let a = ClassFunction::trivial(&symmetric(3));
        let b = ClassFunction::trivial(&symmetric(2));
        assert!(matches!(a.add(&b), Err(Error::GroupMismatch(_))));
    }
}
