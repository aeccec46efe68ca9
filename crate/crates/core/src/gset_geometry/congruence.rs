//! Tensor powers commute with push-forward along `X → pt` modulo the regular
//! representation of `C_l`, for `X` a principal `G`-set or a coset space.

use std::sync::Arc;

use super::bundle::{tau_cyclic_character, CyclicProduct, EquivariantBundle};
use crate::characters::{character_table, ClassFunction, RepIdeal, RepWitness};
use crate::check::CheckRecord;
use crate::error::{Error, Result};
use crate::groups::{all_subgroups, decompose_power_gset, Embedding, FiniteGroup, PowerDecomposition, PowerMode};

/// Which bundle is placed on the `H`-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberChoice {
    /// `O` with trivial fibers.
    TrivialLine,
    /// `O^2` with trivial fibers.
    TrivialPlane,
    /// The last irreducible of each stabilizer's table (nontrivial whenever
    /// the stabilizer is).
    StabilizerCharacter,
}

impl FiberChoice {
    pub const ALL: [FiberChoice; 3] =
        [FiberChoice::TrivialLine, FiberChoice::TrivialPlane, FiberChoice::StabilizerCharacter];

    pub fn name(self) -> &'static str {
        match self {
            FiberChoice::TrivialLine => "trivial-line",
            FiberChoice::TrivialPlane => "trivial-plane",
            FiberChoice::StabilizerCharacter => "stabilizer-character",
        }
    }

    pub fn build(self, gset: crate::groups::FiniteGSet) -> Result<EquivariantBundle> {
        match self {
            FiberChoice::TrivialLine => EquivariantBundle::trivial(gset, 1),
            FiberChoice::TrivialPlane => EquivariantBundle::trivial(gset, 2),
            FiberChoice::StabilizerCharacter => EquivariantBundle::from_fn(gset, |e| {
                let k = character_table(e.sub())?.num_irreducibles();
                ClassFunction::irreducible(e.sub(), k - 1)
            }),
        }
    }
}

fn format_rep_witness(w: &RepWitness) -> String {
    w.multipliers.iter().map(|m| m.to_string()).collect::<Vec<_>>().join("; ")
}

/// `C_l × H` with the ideal `([O[C_l]])` of its representation ring; shared by
/// every bundle on every `H`-set with the same `l` and `H`.
pub struct CyclicTarget {
    pub prod: CyclicProduct,
    pub ideal: RepIdeal,
}

impl CyclicTarget {
    pub fn new(l: usize, h: &Arc<FiniteGroup>) -> Result<Self> {
        let prod = CyclicProduct::new(l, h)?;
        let ideal = RepIdeal::new(&prod.group, vec![prod.regular_cyclic()?])?;
        Ok(Self { prod, ideal })
    }
}

/// The three comparisons for one bundle and one acting subgroup `H`:
/// decomposition route against direct enumeration of `X^l`,
/// `f^l_*(E^{⊠l}) = τ^l(f_* E)`, and the congruence
/// `τ^l(f_* E) - f_*(τ^l E) ∈ ([O[C_l]])` with its witness.
pub fn congruence_checks(
    dec: &PowerDecomposition,
    h: &Embedding,
    fiber: FiberChoice,
    label: &str,
) -> Result<Vec<CheckRecord>> {
    congruence_checks_on(dec, h, &CyclicTarget::new(dec.l(), h.sub())?, fiber, label)
}

/// [`congruence_checks`] against a prebuilt `C_l × H`.
pub fn congruence_checks_on(
    dec: &PowerDecomposition,
    h: &Embedding,
    target: &CyclicTarget,
    fiber: FiberChoice,
    label: &str,
) -> Result<Vec<CheckRecord>> {
    if !Arc::ptr_eq(&target.prod.factor, h.sub()) || target.prod.l != dec.l() {
        return Err(Error::GroupMismatch("product target built for another l or H".into()));
    }
    if !Arc::ptr_eq(h.sup(), dec.group()) {
        return Err(Error::GroupMismatch("H is not a subgroup of the decomposed group".into()));
    }
    dec.verify()?;
    let l = dec.l();
    let bundle = fiber.build(dec.gset().restrict(h)?)?;
    let prod = &target.prod;
    let direct = bundle.tensor_power_direct(prod)?;
    let decomposed = bundle.tensor_power_decomposed(prod, dec)?;
    let tau_push = tau_cyclic_character(&bundle.sections_pushforward()?, prod)?;
    let push_tau = bundle.diagonal_part(prod)?;
    let diff = tau_push.sub(&push_tau)?;
    let witness = target.ideal.contains(&diff)?;
    let tag = format!("{label}, l={l}, H={} (order {}), E={}", h.sub().name(), h.sub().order(), fiber.name());
    Ok(vec![
        CheckRecord::equality(format!("X^l decomposition vs enumeration [{tag}]"), &decomposed, &direct),
        CheckRecord::equality(format!("base change f^l_* = tau^l f_* [{tag}]"), &direct, &tau_push),
        CheckRecord::membership(
            format!("tau^l f_* - f_* tau^l in ([O[C_l]]) [{tag}]"),
            &diff,
            "([O[C_l]])",
            witness.as_ref().map(format_rep_witness),
        ),
    ])
}

/// Every mode for `G`: principal, and the coset space of each subgroup.
pub fn power_modes(g: &Arc<FiniteGroup>) -> Result<Vec<(String, PowerMode)>> {
    let mut out = vec![("principal".to_string(), PowerMode::Principal)];
    for k in all_subgroups(g)? {
        out.push((format!("coset G/K with |K| = {}", k.sub().order()), PowerMode::Coset(k)));
    }
    Ok(out)
}

/// The full grid for one group: every mode, every prime `l ≤ max_l` not
/// dividing `|G|`, every subgroup `H` and every fiber choice.
pub fn congruence_grid(g: &Arc<FiniteGroup>, max_l: usize) -> Result<Vec<CheckRecord>> {
    let subgroups = all_subgroups(g)?;
    let primes: Vec<usize> =
        (2..=max_l).filter(|&l| crate::exact_arith::is_prime(l as u64) && !g.order().is_multiple_of(l)).collect();
    let mut targets = Vec::new();
    for &l in &primes {
        targets.push(subgroups.iter().map(|h| CyclicTarget::new(l, h.sub())).collect::<Result<Vec<_>>>()?);
    }
    let mut out = Vec::new();
    for (mode_name, mode) in power_modes(g)? {
        for (&l, per_h) in primes.iter().zip(&targets) {
            let dec = decompose_power_gset(g, &mode, l)?;
            for (h, target) in subgroups.iter().zip(per_h) {
                for fiber in FiberChoice::ALL {
                    out.extend(congruence_checks_on(&dec, h, target, fiber, &format!("G={} {mode_name}", g.name()))?);
                }
            }
        }
    }
    Ok(out)
}

/// `ψ^l(Ind φ) = Ind(ψ^l φ)` in `R(G)` for `l ∤ |G|`.
pub fn induction_adams(emb: &Embedding, phi: &ClassFunction, l: usize) -> Result<CheckRecord> {
    let g = emb.sup();
    if g.order().is_multiple_of(l) {
        return Err(Error::InvalidInput(format!("l = {l} divides |G| = {}", g.order())));
    }
    let left = phi.induce(emb)?.psi(l as i64);
    let right = phi.psi(l as i64).induce(emb)?;
    Ok(CheckRecord::equality(
        format!("psi^{l} Ind from {} to {} of {phi}", emb.sub().name(), g.name()),
        &left,
        &right,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric};

    #[test]
    fn c3_principal_square() {
        let g = cyclic(3);
        let dec = decompose_power_gset(&g, &PowerMode::Principal, 2).unwrap();
        let h = Embedding::inclusion(&g, &g).unwrap();
        for r in congruence_checks(&dec, &h, FiberChoice::TrivialLine, "C3").unwrap() {
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn s3_mod_c2_fifth_power() {
        let g = symmetric(3);
        let k = all_subgroups(&g).unwrap().into_iter().find(|e| e.sub().order() == 2).unwrap();
        let dec = decompose_power_gset(&g, &PowerMode::Coset(k), 5).unwrap();
        let h = Embedding::inclusion(&g, &g).unwrap();
        for fiber in FiberChoice::ALL {
            for r in congruence_checks(&dec, &h, fiber, "S3").unwrap() {
                assert!(r.passed, "{r:?}");
            }
        }
    }

    #[test]
    fn trivial_group_is_exact() {
        let g = cyclic(1);
        let dec = decompose_power_gset(&g, &PowerMode::Principal, 3).unwrap();
        let h = Embedding::inclusion(&g, &g).unwrap();
        let r = congruence_checks(&dec, &h, FiberChoice::TrivialPlane, "1").unwrap();
        assert!(r.iter().all(|c| c.passed));
    }

    #[test]
    fn induction_formula() {
        let s3 = symmetric(3);
        let c2 = all_subgroups(&s3).unwrap().into_iter().find(|e| e.sub().order() == 2).unwrap();
        assert!(induction_adams(&c2, &ClassFunction::sign(c2.sub()), 5).unwrap().passed);
        let c4 = cyclic(4);
        let c2 = all_subgroups(&c4).unwrap().into_iter().find(|e| e.sub().order() == 2).unwrap();
        let faithful = ClassFunction::irreducible(c2.sub(), 1).unwrap();
        assert!(induction_adams(&c2, &faithful, 3).unwrap().passed);
        assert!(induction_adams(&c2, &faithful, 2).is_err());
    }
}
