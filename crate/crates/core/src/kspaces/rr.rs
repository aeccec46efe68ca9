//! Riemann-Roch type identities on `P^n`: the zero section of the trivial
//! rank-`n` bundle over the point, the Adams-Riemann-Roch formula for the
//! structure map, and its tensor-power form modulo the exterior-power ideal.

use std::sync::Arc;

use super::eqk::{EqIdeal, EqKClass};
use super::identities::{exterior_power_ideal, format_witness, lambda_reduced_power, reduced_permutation, IdealVariant};
use super::pn::{euler_characteristic, KClassPn};
use super::tau::{restrict_eqk, tau_checked, tau_of_integer, DecomposedClass, SubgroupSpec};
use crate::characters::ClassFunction;
use crate::check::CheckRecord;
use crate::error::{Error, Result};
use crate::groups::{cyclic, FiniteGroup};
use crate::lambda::{lambda_minus_one_rep, LineSumClass, RepLineSum};

/// `(1 - h^{-1})^n`, the Koszul class of the zero section of a trivial rank-`n` bundle.
pub fn koszul_class(n: usize) -> KClassPn {
    KClassPn::one(n).sub(&KClassPn::h_pow(n, -1)).pow(n as u32)
}

/// `i_*(w) = w · (1 - h^{-1})^n` for a class `w` on the point, with the
/// Koszul factor carrying the trivial action.
pub fn zero_section_pushforward(w: &EqKClass, n: usize) -> Result<EqKClass> {
    if w.n() != 0 {
        return Err(Error::DimensionMismatch(format!("zero section source must be the point, got P^{}", w.n())));
    }
    w.to_space(n).mul_base(&koszul_class(n))
}

/// Both sides of `τ^l(i_*(y)) = i_*(λ_{-1}(H)^n τ^l(y))` for an integer `y`.
pub fn closed_immersion_sides(y: i64, n: usize, l: usize) -> Result<(EqKClass, EqKClass)> {
    if l == 0 {
        return Err(Error::OutOfRange("the conormal multiplier needs l >= 1".into()));
    }
    let pushed = KClassPn::from_int(n, y).mul(&koszul_class(n));
    let left = tau_checked(&DecomposedClass::from_class(&pushed)?, l)?;
    let inner = lambda_reduced_power(l, n)?.mul(&tau_of_integer(y, l)?)?;
    let right = zero_section_pushforward(&inner, n)?;
    Ok((left, right))
}

pub fn closed_immersion(y: i64, n: usize, l: usize) -> Result<CheckRecord> {
    let (left, right) = closed_immersion_sides(y, n, l)?;
    Ok(CheckRecord::equality(format!("tau^{l}(i_*({y})) on P^{n}"), &left, &right))
}

/// Component on the trivial group.
fn base_part(x: &EqKClass) -> Result<KClassPn> {
    if x.group().order() != 1 {
        return Err(Error::GroupMismatch(format!("expected the trivial group, got {}", x.group().name())));
    }
    KClassPn::new(x.n(), x.coeffs()[0].clone())
}

/// `θ^l([Ω_{P^n}])^{-1}` with `[Ω] = (n+1) h^{-1} - 1`, coefficients in `Z[1/l]`.
pub fn cotangent_theta_inverse(n: usize, l: u32) -> Result<KClassPn> {
    base_part(&LineSumClass::cotangent_pn(&cyclic(1), n)?.bott_theta_inverse(l)?)
}

/// `ψ^l(f_*(h^m)) = f_*(θ^l(Ω)^{-1} ψ^l(h^m))` in `Z[1/l]`; Adams operations
/// act trivially on the point.
pub fn adams_riemann_roch(n: usize, m: i64, l: u32) -> Result<CheckRecord> {
    let left = euler_characteristic(n, m);
    let right = cotangent_theta_inverse(n, l)?.mul(&KClassPn::h_pow(n, m).psi(l as i64)).pushforward();
    Ok(CheckRecord::equality(format!("psi^{l} f_*(h^{m}) on P^{n}"), &left, &right))
}

fn trivial_ideal_check(name: String, x: &EqKClass, ideal: &EqIdeal, l: u64) -> Result<CheckRecord> {
    let w = ideal.contains(x, Some(l))?;
    Ok(CheckRecord::membership(name, x, "(Lambda^i O[C_l], i=1..l-1)[1/l]", w.as_ref().map(format_witness)))
}

/// `τ^l(f_* x) - f_*(θ^l(Ω)^{-1} τ^l(x))` lies in the exterior-power ideal of
/// `R(C_l)[1/l]`, for `x = h^m`.
pub fn tau_form_congruence(n: usize, m: i64, l: usize) -> Result<CheckRecord> {
    let c = cyclic(l);
    let chi = euler_characteristic(n, m);
    let chi = chi
        .to_integer()
        .try_into()
        .map_err(|_| Error::OutOfRange(format!("Euler characteristic {chi}")))?;
    let left = restrict_eqk(&tau_of_integer(chi, l)?, SubgroupSpec::Cyclic(l))?;
    let tau = restrict_eqk(&tau_checked(&DecomposedClass::line(n, m), l)?, SubgroupSpec::Cyclic(l))?;
    let right = tau.mul_base(&cotangent_theta_inverse(n, l as u32)?)?.pushforward();
    let ideal = exterior_power_ideal(&c, 0, IdealVariant::ProperPowers)?;
    trivial_ideal_check(format!("tau^{l} f_*(h^{m}) - f_*(theta^-1 tau^{l}(h^{m})) on P^{n}"), &left.sub(&right)?, &ideal, l as u64)
}

/// The multiplier behind the tensor-power form: with `Ω = Ω_+ - Ω_-`,
/// `Ω_+ = (n+1) h^{-1}` and `Ω_- = 1`, the class
/// `λ_{-1}(H ⊗ Ω_+) θ^l(Ω)^{-1} - λ_{-1}(H ⊗ Ω_-)` lies in the ideal over `C_l`.
pub fn multiplier_congruence(n: usize, l: usize) -> Result<CheckRecord> {
    let c = cyclic(l);
    let h = reduced_permutation(&c)?;
    let plus = RepLineSum::new(&c, n, vec![(h.clone(), -1); n + 1])?.lambda_minus_one()?;
    let minus = EqKClass::from_character(&lambda_minus_one_rep(&h)?, n)?;
    let theta_inv = LineSumClass::cotangent_pn(&c, n)?.bott_theta_inverse(l as u32)?;
    let diff = plus.mul(&theta_inv)?.sub(&minus)?;
    let ideal = exterior_power_ideal(&c, n, IdealVariant::ProperPowers)?;
    trivial_ideal_check(format!("Bott multiplier for Omega of P^{n}, l={l}"), &diff, &ideal, l as u64)
}

/// Whether the ideal generated by `Λ^i(perm)` over the chosen range is the
/// unit ideal.
pub fn ideal_is_unit(group: &Arc<FiniteGroup>, variant: IdealVariant, invert: Option<u64>) -> Result<bool> {
    let ideal = exterior_power_ideal(group, 0, variant)?;
    Ok(ideal.contains(&EqKClass::from_character(&ClassFunction::trivial(group), 0)?, invert)?.is_some())
}

/// `i_*` at `y = 1` in the smallest case, the class `u` with values `(0, 2u)`
/// after `τ^2`.
pub fn worked_zero_section_values() -> Result<Vec<KClassPn>> {
    let (left, right) = closed_immersion_sides(1, 1, 2)?;
    if left != right {
        return Err(Error::Invariant(format!("zero section sides differ: {left} vs {right}")));
    }
    let v = left.values()?;
    (0..left.group().num_classes())
        .map(|c| v.pn_value(c).ok_or_else(|| Error::Invariant("non-rational value".into())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{ratio, Rational};

    #[test]
    fn zero_section_examples() {
        let g = cyclic(1);
        let one = EqKClass::one(&g, 0).unwrap();
        let base = |x: EqKClass| base_part(&x).unwrap();
        assert_eq!(base(zero_section_pushforward(&one, 1).unwrap()), KClassPn::u_pow(1, 1));
        assert_eq!(base(zero_section_pushforward(&one, 2).unwrap()), KClassPn::u_pow(2, 2));
    }

    #[test]
    fn worked_instance_values() {
        let v = worked_zero_section_values().unwrap();
        assert_eq!(v, vec![KClassPn::zero(1), KClassPn::u_pow(1, 1).scale(&Rational::from_integer(2.into()))]);
    }

    #[test]
    fn closed_immersion_small() {
        for l in 1..=3 {
            for n in 0..=2 {
                for y in -2..=2 {
                    let r = closed_immersion(y, n, l).unwrap();
                    assert!(r.passed, "{r:?}");
                }
            }
        }
    }

    #[test]
    fn arr_and_inverse_rank() {
        // θ^l(Ω) has rank l^n.
        assert_eq!(cotangent_theta_inverse(1, 2).unwrap().rank(), &ratio(1, 2).unwrap());
        for n in 0..=2 {
            for m in -3..=3 {
                assert!(adams_riemann_roch(n, m, 2).unwrap().passed);
            }
        }
    }

    #[test]
    fn tau_form_small() {
        for n in 0..=1 {
            for m in 0..=2 {
                let r = tau_form_congruence(n, m, 2).unwrap();
                assert!(r.passed, "{r:?}");
            }
            assert!(multiplier_congruence(n, 3).unwrap().passed);
        }
    }
}
