//! Identities satisfied by `τ^l` on `K_0(P^n)`, each checked exactly and
//! reported as a [`CheckRecord`].

use std::sync::Arc;

use super::eqk::{EqIdeal, EqKClass, EqWitness};
use super::pn::KClassPn;
use super::tau::{
    cross_product, kunneth_pushforward, outer_tau, restrict_eqk, signed_twisted_power, tau_checked, tau_external,
    tau_internal, tau_of_integer, vector_space_trace_oracle, BundleSum, DecomposedClass, ExternalRoute,
    SubgroupSpec, TauRoute,
};
use crate::characters::ClassFunction;
use crate::check::CheckRecord;
use crate::error::{Error, Result};
use crate::groups::{cyclic, symmetric, FiniteGroup};
use crate::lambda::{lambda_minus_one_rep, LineSumClass, RepLineSum};

/// Which exterior powers of the permutation representation generate the ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealVariant {
    /// `Λ^i(O[I_l])` for `1 ≤ i ≤ l - 1`.
    ProperPowers,
    /// `Λ^i(O[I_l])` for `1 ≤ i ≤ l`; the top power is the sign character.
    AllPowers,
}

impl IdealVariant {
    pub fn top(self, l: usize) -> usize {
        match self {
            IdealVariant::ProperPowers => l.saturating_sub(1),
            IdealVariant::AllPowers => l,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            IdealVariant::ProperPowers => "i=1..l-1",
            IdealVariant::AllPowers => "i=1..l",
        }
    }
}

/// `([Λ^i(perm)])` in `R(G) ⊗ K_0(P^n)` for `G = S_l` or `C_l` acting on `l` points.
pub fn exterior_power_ideal(group: &Arc<FiniteGroup>, n: usize, variant: IdealVariant) -> Result<EqIdeal> {
    let l = group.degree();
    let powers = ClassFunction::natural_permutation(group).exterior_powers(variant.top(l))?;
    EqIdeal::from_characters(group, n, &powers[1..])
}

/// `H = perm - 1`, the reduced permutation representation.
pub fn reduced_permutation(group: &Arc<FiniteGroup>) -> Result<ClassFunction> {
    ClassFunction::natural_permutation(group).sub(&ClassFunction::trivial(group))
}

pub fn format_witness(w: &EqWitness) -> String {
    w.multipliers.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("; ")
}

fn membership(name: String, x: &EqKClass, ideal: &EqIdeal, label: &str, invert: Option<u64>) -> Result<CheckRecord> {
    let w = ideal.contains(x, invert)?;
    Ok(CheckRecord::membership(name, x, label, w.as_ref().map(format_witness)))
}

/// All four routes agree (a disagreement is an error, not a failed check).
pub fn route_agreement(x: &DecomposedClass, l: usize) -> Result<CheckRecord> {
    let reference = tau_checked(x, l)?;
    let cross = tau_internal(x, l, TauRoute::Cross)?;
    Ok(CheckRecord::equality(format!("routes tau^{l}({x})"), &cross, &reference))
}

/// `τ^l(x + y) = Σ_i τ^i(x) × τ^{l-i}(y)`.
pub fn additivity(x: &DecomposedClass, y: &DecomposedClass, l: usize) -> Result<CheckRecord> {
    let left = tau_checked(&x.add(y), l)?;
    let mut right = EqKClass::zero(&symmetric(l), x.n)?;
    for i in 0..=l {
        let a = tau_internal(x, i, TauRoute::CyclePsi)?;
        let b = tau_internal(y, l - i, TauRoute::CyclePsi)?;
        right = right.add(&cross_product(&a, &b)?)?;
    }
    Ok(CheckRecord::equality(format!("additivity tau^{l}({x} + {y})"), &left, &right))
}

/// `τ^l(xy) = τ^l(x) τ^l(y)`.
pub fn multiplicativity(x: &DecomposedClass, y: &DecomposedClass, l: usize) -> Result<CheckRecord> {
    let left = tau_checked(&x.mul(y), l)?;
    let right = tau_checked(x, l)?.mul(&tau_checked(y, l)?)?;
    Ok(CheckRecord::equality(format!("multiplicativity tau^{l}(({x})*({y}))"), &left, &right))
}

/// `τ^l(-[F]) = (-1)^l [F^{⊗l} ⊗ sgn]`.
pub fn negation(f: &BundleSum, n: usize, l: usize) -> Result<CheckRecord> {
    let left = tau_checked(&DecomposedClass::new(n, BundleSum::zero(), f.clone()), l)?;
    let right = signed_twisted_power(f, n, l)?;
    Ok(CheckRecord::equality(format!("negation tau^{l}(-[{f}]) on P^{n}"), &left, &right))
}

/// `Res_{S_i × S_j} τ^{i+j}(x) = τ^i(x) ⊠ τ^j(x)`.
pub fn restriction(x: &DecomposedClass, i: usize, j: usize) -> Result<CheckRecord> {
    let left = restrict_eqk(&tau_checked(x, i + j)?, SubgroupSpec::Young(i, j))?;
    let right = outer_tau(x, i, j)?;
    Ok(CheckRecord::equality(format!("restriction to S{i} x S{j} of tau^{}({x})", i + j), &left, &right))
}

/// `τ^l(λ_{-1}(F)) = λ_{-1}(F ⊗ O[I_l]) = λ_{-1}(F ⊗ H) λ_{-1}(F)` for a line sum `F`.
pub fn tau_of_lambda(f: &BundleSum, n: usize, l: usize) -> Result<Vec<CheckRecord>> {
    let g = symmetric(l);
    let twists: Vec<(i64, i64)> = f.terms().iter().map(|&(m, k)| (m, k as i64)).collect();
    let base = LineSumClass::from_twists(&crate::groups::cyclic(1), n, &twists)?;
    let lam_base = KClassPn::new(n, base.lambda_minus_one()?.coeffs()[0].clone())?;
    let left = tau_checked(&DecomposedClass::from_class(&lam_base)?, l)?;
    let on_g = LineSumClass::from_twists(&g, n, &twists)?.to_rep_line_sum()?;
    let middle = on_g.tensor_rep(&ClassFunction::natural_permutation(&g))?.lambda_minus_one()?;
    let right = on_g
        .tensor_rep(&reduced_permutation(&g)?)?
        .lambda_minus_one()?
        .mul(&EqKClass::from_base(&g, &lam_base)?)?;
    Ok(vec![
        CheckRecord::equality(format!("tau^{l}(lambda_-1[{f}]) = lambda_-1([{f}] O[I_l]) on P^{n}"), &left, &middle),
        CheckRecord::equality(format!("lambda_-1 multiplicativity for [{f}] (x) O[I_{l}] on P^{n}"), &middle, &right),
    ])
}

/// `Res_{C_l} τ^l(x) - ψ^l(x)` lies in `([O[I_l]])` in `R(C_l) ⊗ K_0(P^n)`.
pub fn adams_congruence(x: &DecomposedClass, l: usize) -> Result<CheckRecord> {
    let c = cyclic(l);
    let tau = restrict_eqk(&tau_checked(x, l)?, SubgroupSpec::Cyclic(l))?;
    let psi = EqKClass::from_base(&c, &x.to_class().psi(l as i64))?;
    let ideal = EqIdeal::from_characters(&c, x.n, &[ClassFunction::natural_permutation(&c)])?;
    membership(format!("tau^{l} - psi^{l} of {x} in ([O[C_{l}]])"), &tau.sub(&psi)?, &ideal, "([O[C_l]])", None)
}

/// `θ^l(F) - λ_{-1}(F ⊗ H)` lies in the exterior-power ideal of `R(S_l) ⊗ K_0(P^n)`,
/// for `F = V ⊗ h^m`.
pub fn bott_congruence(v: &ClassFunction, m: i64, n: usize, variant: IdealVariant) -> Result<CheckRecord> {
    let g = v.group().clone();
    let l = g.degree();
    let f = RepLineSum::new(&g, n, vec![(v.clone(), m)])?;
    let theta = f.bott_theta_symmetric(l as u32)?;
    let lam = f.tensor_rep(&reduced_permutation(&g)?)?.lambda_minus_one()?;
    let ideal = exterior_power_ideal(&g, n, variant)?;
    membership(
        format!("theta^{l}(V h^{m}) - lambda_-1(V h^{m} H) with V = {v} on P^{n}"),
        &theta.sub(&lam)?,
        &ideal,
        variant.label(),
        None,
    )
}

/// Push-forward of the external power `f^l_*(τ^l[O(m)])` equals `τ^l(χ(O(m)))`,
/// for both symbol expansions.
pub fn kunneth(n: usize, m: i64, l: usize) -> Result<Vec<CheckRecord>> {
    let x = DecomposedClass::line(n, m);
    let d = x.positive.pushforward(n)?;
    let right = tau_of_integer(d as i64, l)?;
    let mut out = Vec::new();
    for (route, name) in [(ExternalRoute::Compositions, "compositions"), (ExternalRoute::Binomial, "binomial")] {
        let left = kunneth_pushforward(&tau_external(&x, l, route), l, n)?;
        out.push(CheckRecord::equality(format!("kunneth {name} O({m}) on P^{n}, l={l}"), &left, &right));
    }
    Ok(out)
}

/// `S_l` acting on `W^{⊗l}` by counting fixed basis tensors, against `τ^l(d)`.
pub fn tensor_trace(d: usize, l: usize) -> Result<CheckRecord> {
    let oracle = EqKClass::from_character(&vector_space_trace_oracle(d, l)?, 0)?;
    Ok(CheckRecord::equality(format!("trace of S{l} on W^(x){l}, dim W = {d}"), &tau_of_integer(d as i64, l)?, &oracle))
}

/// `λ_{-1}(H)^k` on the point, the multiplier for a rank-`k` trivial conormal bundle.
pub fn lambda_reduced_power(l: usize, k: usize) -> Result<EqKClass> {
    let g = symmetric(l);
    if l == 0 {
        return Err(Error::OutOfRange("the reduced permutation representation needs l >= 1".into()));
    }
    EqKClass::from_character(&lambda_minus_one_rep(&reduced_permutation(&g)?)?, 0)?.pow(k as u32)
}
