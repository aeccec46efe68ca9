use num_traits::{One, Zero};
use std::fmt;
use std::sync::Arc;

use super::pn::KClassPn;
use crate::characters::{character_table, lattice_membership, ClassFunction};
use crate::error::{Error, Result};
use crate::exact_arith::{Cyclotomic, Rational};
use crate::groups::{Embedding, FiniteGroup, GroupKind};

/// Polynomial in `u` (truncated at `u^{n+1}`) with cyclotomic coefficients:
/// the value of an equivariant class at one conjugacy class.
pub type KValue = Vec<Cyclotomic>;

fn kv_mul(a: &KValue, b: &KValue) -> KValue {
    let n = a.len();
    let mut c = vec![Cyclotomic::zero(); n];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(n - i) {
            if !y.is_zero() {
                c[i + j] = c[i + j].add(&x.mul(y));
            }
        }
    }
    c
}

fn kv_from_pn(x: &KClassPn) -> KValue {
    x.coeffs().iter().map(|c| Cyclotomic::from_rational(c.clone())).collect()
}

/// Class function with values in `K_0(P^n) ⊗ Q(ζ)`.
#[derive(Clone)]
pub struct KClassFunction {
    group: Arc<FiniteGroup>,
    n: usize,
    values: Vec<KValue>,
}

impl PartialEq for KClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.n == other.n && self.values == other.values
    }
}

impl fmt::Debug for KClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for KClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(display_kvalue).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Formats a value as a polynomial in `u`.
pub fn display_kvalue(v: &KValue) -> String {
    let mut parts = Vec::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let coeff = match c.as_rational() {
            Some(q) => q.to_string(),
            None => format!("({c})"),
        };
        parts.push(match (k, coeff.as_str()) {
            (0, _) => coeff,
            (1, "1") => "u".into(),
            (1, _) => format!("{coeff}u"),
            (_, "1") => format!("u^{k}"),
            _ => format!("{coeff}u^{k}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl KClassFunction {
    pub fn new(group: Arc<FiniteGroup>, n: usize, values: Vec<KValue>) -> Result<Self> {
        if values.len() != group.num_classes() || values.iter().any(|v| v.len() != n + 1) {
            return Err(Error::DimensionMismatch("K-valued class function shape".into()));
        }
        Ok(Self { group, n, values })
    }

    /// Evaluates `f` on each class representative.
    pub fn from_element_fn(group: &Arc<FiniteGroup>, n: usize, f: impl Fn(usize) -> KValue) -> Self {
        let values = group.classes().classes.iter().map(|c| f(c.representative)).collect();
        Self { group: group.clone(), n, values }
    }

    /// Same, for values that are plain `K_0(P^n)` classes.
    pub fn from_pn_fn(group: &Arc<FiniteGroup>, n: usize, f: impl Fn(usize) -> KClassPn) -> Self {
        Self::from_element_fn(group, n, |g| kv_from_pn(&f(g)))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[KValue] {
        &self.values
    }

    pub fn at_element(&self, g: usize) -> &KValue {
        &self.values[self.group.class_of(g)]
    }

    /// The value at a class as a rational `K_0(P^n)` class, if it is one.
    pub fn pn_value(&self, class: usize) -> Option<KClassPn> {
        let c: Option<Vec<Rational>> = self.values[class].iter().map(Cyclotomic::as_rational).collect();
        KClassPn::new(self.n, c?).ok()
    }

    fn zip(&self, other: &Self, f: impl Fn(&KValue, &KValue) -> KValue) -> Result<Self> {
        if !Arc::ptr_eq(&self.group, &other.group) || self.n != other.n {
            return Err(Error::GroupMismatch("K-valued class functions on different groups".into()));
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(Self { group: self.group.clone(), n: self.n, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a.iter().zip(b).map(|(x, y)| x.sub(y)).collect())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, kv_mul)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let values = self.values.iter().map(|v| v.iter().map(|x| x.scale(q)).collect()).collect();
        Self { group: self.group.clone(), n: self.n, values }
    }

    /// Induction along an embedding, coefficientwise in `u`.
    pub fn induce(&self, emb: &Embedding) -> Result<Self> {
        if !Arc::ptr_eq(emb.sub(), &self.group) {
            return Err(Error::GroupMismatch("induction from a group other than the embedded one".into()));
        }
        let g = emb.sup();
        let scale = Rational::new(One::one(), (self.group.order() as i64).into());
        Ok(Self::from_element_fn(g, self.n, |rep| {
            let mut acc = vec![Cyclotomic::zero(); self.n + 1];
            for x in 0..g.order() {
                let y = g.conjugate(g.inv(x), rep);
                if let Some(h) = emb.preimage(y) {
                    for (a, b) in acc.iter_mut().zip(self.at_element(h)) {
                        *a = a.add(b);
                    }
                }
            }
            acc.iter().map(|a| a.scale(&scale)).collect()
        }))
    }

    pub fn restrict(&self, emb: &Embedding) -> Result<Self> {
        if !Arc::ptr_eq(emb.sup(), &self.group) {
            return Err(Error::GroupMismatch("restriction along an embedding into another group".into()));
        }
        Ok(Self::from_element_fn(emb.sub(), self.n, |h| self.at_element(emb.image(h)).clone()))
    }

    /// Coordinates in the basis `irreducible ⊗ u^k`; fails unless the
    /// multiplicities are rational.
    pub fn to_eqk(&self) -> Result<EqKClass> {
        let t = character_table(&self.group)?;
        let mut coeffs = vec![vec![Rational::zero(); self.n + 1]; t.num_irreducibles()];
        for k in 0..=self.n {
            let col: Vec<Cyclotomic> = self.values.iter().map(|v| v[k].clone()).collect();
            for (i, row) in coeffs.iter_mut().enumerate() {
                let ip = t.inner(&col, t.row(i));
                row[k] = ip.as_rational().ok_or_else(|| {
                    Error::NotVirtualCharacter(format!("irrational multiplicity {ip} at u^{k}"))
                })?;
            }
        }
        Ok(EqKClass { group: self.group.clone(), n: self.n, coeffs })
    }
}

/// Element of `R(G) ⊗ K_0(P^n)` (rational coefficients allowed for
/// localizations): `coeffs[a][k]` multiplies `χ_a ⊗ u^k`.
#[derive(Clone)]
pub struct EqKClass {
    group: Arc<FiniteGroup>,
    n: usize,
    coeffs: Vec<Vec<Rational>>,
}

impl PartialEq for EqKClass {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.n == other.n && self.coeffs == other.coeffs
    }
}

impl fmt::Debug for EqKClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for EqKClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels = character_table(&self.group).map(|t| t.labels().to_vec()).unwrap_or_default();
        let mut parts = Vec::new();
        for (a, row) in self.coeffs.iter().enumerate() {
            let pn = KClassPn::new(self.n, row.clone()).expect("row length");
            if pn.is_zero() {
                continue;
            }
            let label = labels.get(a).cloned().unwrap_or_else(|| format!("chi{a}"));
            parts.push(format!("{label}*({pn})"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl EqKClass {
    pub fn new(group: Arc<FiniteGroup>, n: usize, coeffs: Vec<Vec<Rational>>) -> Result<Self> {
        let k = character_table(&group)?.num_irreducibles();
        if coeffs.len() != k || coeffs.iter().any(|r| r.len() != n + 1) {
            return Err(Error::DimensionMismatch("coefficient matrix shape".into()));
        }
        Ok(Self { group, n, coeffs })
    }

    pub fn zero(group: &Arc<FiniteGroup>, n: usize) -> Result<Self> {
        let k = character_table(group)?.num_irreducibles();
        Ok(Self { group: group.clone(), n, coeffs: vec![vec![Rational::zero(); n + 1]; k] })
    }

    /// `χ ⊗ x` for a virtual character `χ` and a base class `x`.
    pub fn rep_times_base(chi: &ClassFunction, x: &KClassPn) -> Result<Self> {
        let m = chi.decompose_rational()?;
        let coeffs = m.iter().map(|mi| x.coeffs().iter().map(|c| mi * c).collect()).collect();
        Ok(Self { group: chi.group().clone(), n: x.n(), coeffs })
    }

    /// The base class with trivial action.
    pub fn from_base(group: &Arc<FiniteGroup>, x: &KClassPn) -> Result<Self> {
        Self::rep_times_base(&ClassFunction::trivial(group), x)
    }

    pub fn one(group: &Arc<FiniteGroup>, n: usize) -> Result<Self> {
        Self::from_base(group, &KClassPn::one(n))
    }

    pub fn from_character(chi: &ClassFunction, n: usize) -> Result<Self> {
        Self::rep_times_base(chi, &KClassPn::one(n))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Vec<Rational>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().flatten().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().flatten().all(|c| c.is_integer())
    }

    pub fn is_localized_at(&self, l: u64) -> bool {
        self.coeffs
            .iter()
            .flatten()
            .all(|c| crate::exact_arith::rational::denominator_is_power_of(c, l))
    }

    /// Coefficients flattened as `[a * (n+1) + k]`.
    pub fn flat(&self) -> Vec<Rational> {
        self.coeffs.iter().flatten().cloned().collect()
    }

    fn same(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(&self.group, &other.group) {
            return Err(Error::GroupMismatch(format!("{} vs {}", self.group.name(), other.group.name())));
        }
        if self.n != other.n {
            return Err(Error::DimensionMismatch(format!("P^{} vs P^{}", self.n, other.n)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Self { group: self.group.clone(), n: self.n, coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let coeffs = self.coeffs.iter().map(|r| r.iter().map(|x| x * q).collect()).collect();
        Self { group: self.group.clone(), n: self.n, coeffs }
    }

    pub fn values(&self) -> Result<KClassFunction> {
        let t = character_table(&self.group)?;
        let nc = self.group.num_classes();
        let mut values = vec![vec![Cyclotomic::zero(); self.n + 1]; nc];
        for (a, row) in self.coeffs.iter().enumerate() {
            for (k, c) in row.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (cl, v) in values.iter_mut().enumerate() {
                    v[k] = v[k].add(&t.row(a)[cl].scale(c));
                }
            }
        }
        Ok(KClassFunction { group: self.group.clone(), n: self.n, values })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same(other)?;
        self.values()?.mul(&other.values()?)?.to_eqk()
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one(&self.group, self.n)?;
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplies the base factor by a class with trivial action.
    pub fn mul_base(&self, x: &KClassPn) -> Result<Self> {
        self.mul(&Self::from_base(&self.group, x)?)
    }

    /// Adams operation: `ψ^k` on both tensor factors.
    pub fn psi(&self, k: i64) -> Result<Self> {
        let mut acc = Self::zero(&self.group, self.n)?;
        for (a, row) in self.coeffs.iter().enumerate() {
            let base = KClassPn::new(self.n, row.clone())?;
            if base.is_zero() {
                continue;
            }
            let chi = ClassFunction::irreducible(&self.group, a)?.psi(k);
            acc = acc.add(&Self::rep_times_base(&chi, &base.psi(k))?)?;
        }
        Ok(acc)
    }

    pub fn restrict(&self, emb: &Embedding) -> Result<Self> {
        self.values()?.restrict(emb)?.to_eqk()
    }

    pub fn induce(&self, emb: &Embedding) -> Result<Self> {
        self.values()?.induce(emb)?.to_eqk()
    }

    /// Push-forward to the point along `P^n -> pt`.
    pub fn pushforward(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|r| vec![KClassPn::new(self.n, r.clone()).expect("row length").pushforward()])
            .collect();
        Self { group: self.group.clone(), n: 0, coeffs }
    }

    /// On the point, the underlying virtual character.
    pub fn to_character(&self) -> Result<ClassFunction> {
        if self.n != 0 {
            return Err(Error::DimensionMismatch("only classes on the point are characters".into()));
        }
        let m: Vec<num_bigint::BigInt> = self
            .coeffs
            .iter()
            .map(|r| {
                if r[0].is_integer() {
                    Ok(r[0].to_integer())
                } else {
                    Err(Error::NotVirtualCharacter(format!("coefficient {}", r[0])))
                }
            })
            .collect::<Result<_>>()?;
        ClassFunction::from_multiplicities(&self.group, &m)
    }

    /// Outer tensor product onto a product group: value at `(g, h)` is `a(g) b(h)`,
    /// with base classes multiplied (both factors live on the same `P^n`).
    pub fn outer(a: &Self, b: &Self, prod: &Arc<FiniteGroup>) -> Result<Self> {
        let GroupKind::Product { left, right, pairs } = prod.kind() else {
            return Err(Error::GroupMismatch("outer product needs a product group".into()));
        };
        if !Arc::ptr_eq(left, &a.group) || !Arc::ptr_eq(right, &b.group) || a.n != b.n {
            return Err(Error::GroupMismatch("factors do not match the product group".into()));
        }
        let (va, vb) = (a.values()?, b.values()?);
        KClassFunction::from_element_fn(prod, a.n, |g| {
            let (x, y) = pairs[g];
            kv_mul(va.at_element(x), vb.at_element(y))
        })
        .to_eqk()
    }

    /// Inverse computed class by class; each value must have an invertible
    /// constant term, and the nilpotent part is inverted by a geometric series.
    pub fn inverse(&self) -> Result<Self> {
        let v = self.values()?;
        let mut out = Vec::with_capacity(v.values().len());
        for (c, val) in v.values().iter().enumerate() {
            if val[0].is_zero() {
                return Err(Error::NotInvertible(format!("value at class {c} has zero constant term")));
            }
            let c0inv = val[0].inverse()?;
            let mut nil: KValue = val.iter().map(|x| x.mul(&c0inv)).collect();
            nil[0] = Cyclotomic::zero();
            let minus: KValue = nil.iter().map(Cyclotomic::neg).collect();
            let mut acc = vec![Cyclotomic::zero(); self.n + 1];
            let mut term = vec![Cyclotomic::zero(); self.n + 1];
            term[0] = Cyclotomic::one();
            for _ in 0..=self.n {
                for (a, t) in acc.iter_mut().zip(&term) {
                    *a = a.add(t);
                }
                term = kv_mul(&term, &minus);
            }
            out.push(acc.iter().map(|x| x.mul(&c0inv)).collect());
        }
        KClassFunction::new(self.group.clone(), self.n, out)?.to_eqk()
    }

    /// The class read on `P^m` (truncating or zero-extending in `u`).
    pub fn to_space(&self, m: usize) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(m + 1, Rational::zero());
                r.truncate(m + 1);
                r
            })
            .collect();
        Self { group: self.group.clone(), n: m, coeffs }
    }
}

/// Ideal of `R(G) ⊗ K_0(P^n)` generated by finitely many classes.
#[derive(Clone, Debug)]
pub struct EqIdeal {
    group: Arc<FiniteGroup>,
    n: usize,
    generators: Vec<EqKClass>,
}

/// `x = Σ_i multipliers[i] · generators[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct EqWitness {
    pub multipliers: Vec<EqKClass>,
}

impl EqWitness {
    pub fn recombine(&self, ideal: &EqIdeal) -> Result<EqKClass> {
        let mut acc = EqKClass::zero(&ideal.group, ideal.n)?;
        for (m, g) in self.multipliers.iter().zip(&ideal.generators) {
            acc = acc.add(&m.mul(g)?)?;
        }
        Ok(acc)
    }
}

impl EqIdeal {
    pub fn new(group: &Arc<FiniteGroup>, n: usize, generators: Vec<EqKClass>) -> Result<Self> {
        for g in &generators {
            if !Arc::ptr_eq(&g.group, group) || g.n != n {
                return Err(Error::GroupMismatch("ideal generator in another ring".into()));
            }
            if !g.is_integral() {
                return Err(Error::InvalidInput(format!("generator {g} is not integral")));
            }
        }
        Ok(Self { group: group.clone(), n, generators })
    }

    /// Ideal generated by `χ ⊗ 1` for each given character.
    pub fn from_characters(group: &Arc<FiniteGroup>, n: usize, chars: &[ClassFunction]) -> Result<Self> {
        let gens = chars.iter().map(|c| EqKClass::from_character(c, n)).collect::<Result<Vec<_>>>()?;
        Self::new(group, n, gens)
    }

    pub fn generators(&self) -> &[EqKClass] {
        &self.generators
    }

    fn basis(&self) -> Result<Vec<EqKClass>> {
        let k = character_table(&self.group)?.num_irreducibles();
        let mut out = Vec::new();
        for a in 0..k {
            let chi = ClassFunction::irreducible(&self.group, a)?;
            for j in 0..=self.n {
                out.push(EqKClass::rep_times_base(&chi, &KClassPn::u_pow(self.n, j))?);
            }
        }
        Ok(out)
    }

    /// Decides membership over `Z` (or `Z[1/p]`) and returns a checked witness.
    pub fn contains(&self, x: &EqKClass, invert_prime: Option<u64>) -> Result<Option<EqWitness>> {
        x.same(&EqKClass::zero(&self.group, self.n)?)?;
        let basis = self.basis()?;
        let mut cols = Vec::new();
        for g in &self.generators {
            for b in &basis {
                cols.push(g.mul(b)?.flat());
            }
        }
        let Some(w) = lattice_membership(&cols, &x.flat(), invert_prime)? else {
            return Ok(None);
        };
        let multipliers = w
            .chunks(basis.len())
            .map(|c| {
                c.iter().zip(&basis).try_fold(EqKClass::zero(&self.group, self.n)?, |acc, (q, b)| {
                    acc.add(&b.scale(q))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let witness = EqWitness { multipliers };
        if &witness.recombine(self)? != x {
            return Err(Error::Invariant("ideal witness does not recombine to the element".into()));
        }
        Ok(Some(witness))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};

    #[test]
    fn values_roundtrip() {
        let g = symmetric(3);
        let std = ClassFunction::from_ints(g.clone(), &[2, 0, -1]).unwrap();
        let x = EqKClass::rep_times_base(&std, &KClassPn::h_pow(2, 1)).unwrap();
        assert_eq!(x.values().unwrap().to_eqk().unwrap(), x);
        assert_eq!(x.values().unwrap().pn_value(0).unwrap(), KClassPn::h_pow(2, 1).scale(&Rational::from_integer(2.into())));
    }

    #[test]
    fn multiplication_matches_characters() {
        let g = symmetric(3);
        let std = ClassFunction::from_ints(g.clone(), &[2, 0, -1]).unwrap();
        let a = EqKClass::from_character(&std, 1).unwrap();
        let sq = a.mul(&a).unwrap();
        let expect = EqKClass::from_character(&std.mul(&std).unwrap(), 1).unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn inverse_in_cyclic_ring() {
        let g = cyclic(3);
        let x = EqKClass::from_base(&g, &KClassPn::h_pow(2, 1).scale(&Rational::from_integer(3.into()))).unwrap();
        let inv = x.inverse().unwrap();
        assert_eq!(inv.mul(&x).unwrap(), EqKClass::one(&g, 2).unwrap());
        assert!(inv.is_localized_at(3));
    }

    #[test]
    fn regular_ideal_membership_with_witness() {
        let g = cyclic(3);
        let reg = ClassFunction::regular(&g);
        let ideal = EqIdeal::from_characters(&g, 1, std::slice::from_ref(&reg)).unwrap();
        let x = EqKClass::rep_times_base(&reg, &KClassPn::h_pow(1, 2)).unwrap();
        assert!(ideal.contains(&x, None).unwrap().is_some());
        let y = EqKClass::one(&g, 1).unwrap();
        assert!(ideal.contains(&y, None).unwrap().is_none());
        assert!(ideal.contains(&x.scale(&crate::exact_arith::ratio(1, 3).unwrap()), Some(3)).unwrap().is_some());
    }
}
