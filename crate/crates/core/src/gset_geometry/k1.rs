//! `τ^l` on `K_1(k) = k^×` with values in `K_1(C_l, k) = (k^×)^{Z/l}`,
//! computed through pairs `(V, β)` of a representation and a scalar
//! automorphism.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use std::fmt;

use crate::characters::ClassFunction;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, is_prime, Rational};
use crate::groups::{symmetric, young, Embedding};
use crate::kspaces::cyclic_embedding;

/// Exponents of a formal unit `β` on the isotypic components `V_0..V_{l-1}`
/// of `C_l`, where `V_j` has character `χ^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K1Element {
    pub l: usize,
    pub exponents: Vec<i64>,
}

impl K1Element {
    pub fn trivial(l: usize) -> Self {
        Self { l, exponents: vec![0; l] }
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }
}

impl fmt::Display for K1Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|e| format!("b^{e}")).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// One term `sign · [(Res_{C_l} Ind_{S_i × S_{l-i}}^{S_l}(k ⊗ k_sgn), β^i)]`
/// of the equivariant binomial expansion of `τ^l([(k, β)] - [(k, 1)])`.
#[derive(Clone, Debug)]
pub struct PairTerm {
    pub i: usize,
    pub sign: i64,
    /// Multiplicities of `V_0..V_{l-1}` in the restricted representation.
    pub multiplicities: Vec<BigInt>,
    /// Whether the `C_l`-action on `S_l / (S_i × S_{l-i})` is free, so the
    /// representation is a free `k[C_l]`-module.
    pub free: bool,
}

/// `Ind_{S_i × S_{l-i}}^{S_l}(triv ⊠ sgn)` restricted to `C_l`.
fn restricted_binomial_term(l: usize, i: usize) -> Result<ClassFunction> {
    let s = symmetric(l);
    let on_sl = if i == 0 {
        ClassFunction::sign(&s)
    } else if i == l {
        ClassFunction::trivial(&s)
    } else {
        let y = young(&[i, l - i]);
        let crate::groups::GroupKind::Product { left, right, .. } = y.kind() else {
            return Err(Error::Invariant("Young subgroup without product structure".into()));
        };
        let outer = ClassFunction::trivial(left).outer(&ClassFunction::sign(right), &y)?;
        outer.induce(&Embedding::inclusion(&y, &s)?)?
    };
    on_sl.restrict(&cyclic_embedding(l)?)
}

/// `C_l` acts freely on the `i`-subsets of `l` points (the cosets of `S_i × S_{l-i}`).
fn rotation_free_on_subsets(l: usize, i: usize) -> bool {
    (0u64..1 << l).filter(|m| m.count_ones() as usize == i).all(|m| {
        (1..l).all(|r| {
            let rotated = ((m << r) | (m >> (l - r))) & ((1 << l) - 1);
            rotated != m
        })
    })
}

/// The terms for `i = 0..=l`.
pub fn binomial_pair_terms(l: usize) -> Result<Vec<PairTerm>> {
    (0..=l)
        .map(|i| {
            let chi = restricted_binomial_term(l, i)?;
            Ok(PairTerm {
                i,
                sign: if (l - i).is_multiple_of(2) { 1 } else { -1 },
                multiplicities: chi.decompose()?,
                free: rotation_free_on_subsets(l, i),
            })
        })
        .collect()
}

/// `τ^l((k, β^e))` as exponents per isotypic component: a pair
/// `(V, β^i)` contributes `i · mult_j(V)` to the determinant on `V_j`, and the
/// pair `(k, 1)` contributes nothing.
pub fn k1_tensor_power(l: usize, e: i64) -> Result<K1Element> {
    if !is_prime(l as u64) {
        return Err(Error::NotPrime(l as u64));
    }
    let terms = binomial_pair_terms(l)?;
    let mut exponents = vec![0i64; l];
    for t in &terms {
        if t.i > 0 && t.i < l {
            let rank = binomial(l as i64, t.i as i64) / BigInt::from(l);
            if !t.free || t.multiplicities.iter().any(|m| m != &rank) {
                return Err(Error::CertificateFailure(format!(
                    "term i = {} is not the free module of rank C(l,i)/l",
                    t.i
                )));
            }
        }
        for (j, m) in t.multiplicities.iter().enumerate() {
            let m = m.to_i64().ok_or_else(|| Error::OutOfRange("multiplicity".into()))?;
            exponents[j] += t.sign * t.i as i64 * m * e;
        }
    }
    Ok(K1Element { l, exponents })
}

/// `Σ_{i=1}^{l-1} (-1)^{l-i} (1/l) C(l,i) i`.
pub fn binomial_identity_sum(l: u64) -> Rational {
    (1..l).fold(Rational::zero(), |acc, i| {
        let term = Rational::new(binomial(l as i64, i as i64) * BigInt::from(i), BigInt::from(l));
        if (l - i).is_even() {
            acc + term
        } else {
            acc - term
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_primes() {
        assert_eq!(k1_tensor_power(2, 1).unwrap().exponents, vec![1, -1]);
        assert_eq!(k1_tensor_power(3, 1).unwrap().exponents, vec![2, -1, -1]);
        assert!(k1_tensor_power(5, 0).unwrap().is_trivial());
        assert!(k1_tensor_power(4, 1).is_err());
    }

    #[test]
    fn binomial_sum() {
        for l in [2, 3, 5, 7, 11, 13] {
            assert_eq!(binomial_identity_sum(l), Rational::from_integer((-1).into()));
        }
    }
}
