//! Equivariant vector bundles on a finite `H`-set over a point, stored as one
//! stabilizer representation per orbit.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::characters::{character_table, ClassFunction};
use crate::error::{Error, Result};
use crate::exact_arith::Cyclotomic;
use crate::groups::{cyclic, product, Embedding, FiniteGSet, FiniteGroup, GroupKind, PowerDecomposition};

#[derive(Clone, Debug)]
struct OrbitFiber {
    base: usize,
    stabilizer: Embedding,
    fiber: ClassFunction,
}

/// `H`-equivariant bundle on a finite `H`-set: the fiber over the base point
/// of each orbit is a representation of that point's stabilizer.
#[derive(Clone, Debug)]
pub struct EquivariantBundle {
    gset: FiniteGSet,
    orbits: Vec<OrbitFiber>,
    orbit_of: Vec<usize>,
    /// `transversal[x] · base(orbit_of[x]) = x`.
    transversal: Vec<usize>,
}

/// Stabilizers of the orbit base points (the smallest point of each orbit).
pub fn orbit_stabilizers(gset: &FiniteGSet) -> Result<Vec<Embedding>> {
    let g = gset.group();
    gset.orbits()
        .iter()
        .map(|orbit| {
            let stab = gset.stabilizer(orbit[0]);
            let sub = g.subgroup(&format!("Stab({})", orbit[0]), &stab)?;
            Embedding::inclusion(&sub, g)
        })
        .collect()
}

impl EquivariantBundle {
    /// `fibers[i]` is a genuine representation of the `i`-th stabilizer of
    /// [`orbit_stabilizers`].
    pub fn new(gset: FiniteGSet, fibers: Vec<ClassFunction>) -> Result<Self> {
        let stabs = orbit_stabilizers(&gset)?;
        if stabs.len() != fibers.len() {
            return Err(Error::DimensionMismatch(format!("{} orbits but {} fibers", stabs.len(), fibers.len())));
        }
        let orbit_list = gset.orbits();
        let mut orbit_of = vec![0; gset.npoints()];
        for (i, orbit) in orbit_list.iter().enumerate() {
            for &x in orbit {
                orbit_of[x] = i;
            }
        }
        let mut orbits = Vec::new();
        for ((stabilizer, fiber), orbit) in stabs.into_iter().zip(fibers).zip(&orbit_list) {
            // Stabilizers are rebuilt on every call; an identical element list
            // gives identical class order.
            let fiber = if Arc::ptr_eq(fiber.group(), stabilizer.sub()) {
                fiber
            } else if fiber.group().elements() == stabilizer.sub().elements() {
                ClassFunction::new(stabilizer.sub().clone(), fiber.values().to_vec())?
            } else {
                return Err(Error::GroupMismatch("fiber is not a representation of the stabilizer".into()));
            };
            if fiber.decompose()?.iter().any(|m| m < &BigInt::from(0)) {
                return Err(Error::InvalidInput(format!("fiber {fiber} is not a genuine representation")));
            }
            orbits.push(OrbitFiber { base: orbit[0], stabilizer, fiber });
        }
        let transversal = gset.transversal();
        Ok(Self { gset, orbits, orbit_of, transversal })
    }

    /// Fibers chosen from the stabilizer embedding.
    pub fn from_fn(gset: FiniteGSet, f: impl Fn(&Embedding) -> Result<ClassFunction>) -> Result<Self> {
        let fibers = orbit_stabilizers(&gset)?.iter().map(f).collect::<Result<Vec<_>>>()?;
        Self::new(gset, fibers)
    }

    /// `O^rank` with the trivial action on fibers.
    pub fn trivial(gset: FiniteGSet, rank: i64) -> Result<Self> {
        Self::from_fn(gset, |e| Ok(ClassFunction::trivial(e.sub()).scale(&crate::exact_arith::int(rank))))
    }

    pub fn gset(&self) -> &FiniteGSet {
        &self.gset
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.gset.group()
    }

    pub fn fibers(&self) -> Vec<&ClassFunction> {
        self.orbits.iter().map(|o| &o.fiber).collect()
    }

    /// Fiberwise direct sum.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if !Arc::ptr_eq(self.group(), other.group()) || self.gset.npoints() != other.gset.npoints() {
            return Err(Error::GroupMismatch("bundles on different sets".into()));
        }
        let fibers = self
            .orbits
            .iter()
            .zip(&other.orbits)
            .map(|(a, b)| a.fiber.add(&b.fiber))
            .collect::<Result<Vec<_>>>()?;
        Self::new(self.gset.clone(), fibers)
    }

    /// Trace of `g` on the fiber over `x`; `g` must fix `x`.
    pub fn trace(&self, g: usize, x: usize) -> Result<Cyclotomic> {
        if self.gset.act(g, x) != x {
            return Err(Error::InvalidInput(format!("element {g} does not fix point {x}")));
        }
        let o = &self.orbits[self.orbit_of[x]];
        let grp = self.group();
        let t = self.transversal[x];
        let conj = grp.mul(grp.inv(t), grp.mul(g, t));
        let h = o
            .stabilizer
            .preimage(conj)
            .ok_or_else(|| Error::Invariant(format!("conjugated element does not stabilize {}", o.base)))?;
        Ok(o.fiber.at_element(h).clone())
    }

    /// `f_*(E)`: the character of `H` on `⊕_x E_x`.
    pub fn sections_pushforward(&self) -> Result<ClassFunction> {
        let g = self.group().clone();
        let values = (0..g.num_classes())
            .map(|c| {
                let rep = g.classes().classes[c].representative;
                self.gset.fixed_points(rep).iter().try_fold(Cyclotomic::zero(), |acc, &x| Ok(acc.add(&self.trace(rep, x)?)))
            })
            .collect::<Result<Vec<_>>>()?;
        ClassFunction::new(g, values)
    }
}

/// `C_l × H` with a lookup from `(rotation, h)` to element indices.
#[derive(Clone, Debug)]
pub struct CyclicProduct {
    pub l: usize,
    pub group: Arc<FiniteGroup>,
    pub factor: Arc<FiniteGroup>,
    /// `rotation_of[g]` and `factor_of[g]` for an element `g` of the product.
    rotation_of: Vec<usize>,
    factor_of: Vec<usize>,
    index: HashMap<(usize, usize), usize>,
}

impl CyclicProduct {
    pub fn new(l: usize, factor: &Arc<FiniteGroup>) -> Result<Self> {
        let c = cyclic(l);
        let group = product(&c, factor)?;
        let GroupKind::Cyclic { powers, .. } = c.kind() else {
            return Err(Error::Invariant("cyclic group without cyclic structure".into()));
        };
        let mut exponent = vec![0; c.order()];
        for (k, &g) in powers.iter().enumerate() {
            exponent[g] = k;
        }
        let GroupKind::Product { pairs, .. } = group.kind() else {
            return Err(Error::Invariant("product group without product structure".into()));
        };
        let rotation_of: Vec<usize> = pairs.iter().map(|&(a, _)| exponent[a]).collect();
        let factor_of: Vec<usize> = pairs.iter().map(|&(_, b)| b).collect();
        let index = rotation_of.iter().zip(&factor_of).enumerate().map(|(g, (&r, &h))| ((r, h), g)).collect();
        Ok(Self { l, group, factor: factor.clone(), rotation_of, factor_of, index })
    }

    pub fn split(&self, g: usize) -> (usize, usize) {
        (self.rotation_of[g], self.factor_of[g])
    }

    pub fn element(&self, rotation: usize, h: usize) -> usize {
        self.index[&(rotation % self.l, h)]
    }

    /// Class function `(c^i, h) ↦ f(i, h)`, evaluated on class representatives.
    pub fn class_function(&self, f: impl Fn(usize, usize) -> Result<Cyclotomic>) -> Result<ClassFunction> {
        let values = (0..self.group.num_classes())
            .map(|c| {
                let (i, h) = self.split(self.group.classes().classes[c].representative);
                f(i, h)
            })
            .collect::<Result<Vec<_>>>()?;
        ClassFunction::new(self.group.clone(), values)
    }

    /// `[O[C_l]] ⊠ 1`.
    pub fn regular_cyclic(&self) -> Result<ClassFunction> {
        let l = self.l as i64;
        self.class_function(|i, _| Ok(Cyclotomic::from_int(if i == 0 { l } else { 0 })))
    }

    /// `Ind_{1 × H}^{C_l × H}(w)`.
    pub fn induce_from_factor(&self, w: &ClassFunction) -> Result<ClassFunction> {
        let l = crate::exact_arith::int(self.l as i64);
        self.class_function(|i, h| Ok(if i == 0 { w.at_element(h).scale(&l) } else { Cyclotomic::zero() }))
    }
}

/// Rotation of an `l`-tuple matching the decomposition's convention: the
/// generator moves coordinate `k` to `k + 1`.
fn rotate(t: &[usize], i: usize) -> Vec<usize> {
    let l = t.len();
    (0..l).map(|k| t[(k + l - i % l) % l]).collect()
}

/// Trace of `(c^i, h)` on `E_{x_1} ⊗ ... ⊗ E_{x_l}` when it fixes the point
/// `x`; each `C_l`-cycle contributes the trace of the returning composite.
fn tuple_trace(e: &EquivariantBundle, x: &[usize], i: usize, h: usize) -> Result<Cyclotomic> {
    let l = x.len();
    let grp = e.group();
    if i.is_multiple_of(l) {
        return x.iter().try_fold(Cyclotomic::one(), |acc, &y| Ok(acc.mul(&e.trace(h, y)?)));
    }
    // l is prime, so c^i is a single l-cycle on the factors.
    e.trace(grp.pow(h, l as i64), x[0])
}

fn moved(e: &EquivariantBundle, x: &[usize], i: usize, h: usize) -> Vec<usize> {
    let hx: Vec<usize> = x.iter().map(|&y| e.gset.act(h, y)).collect();
    rotate(&hx, i)
}

impl EquivariantBundle {
    /// `f^l_*(E^{⊠l})` by brute force over every point of `X^l`.
    pub fn tensor_power_direct(&self, prod: &CyclicProduct) -> Result<ClassFunction> {
        let n = self.gset.npoints();
        let l = prod.l;
        let total = n.checked_pow(l as u32).filter(|&t| t <= 100_000).ok_or_else(|| {
            Error::OutOfRange(format!("|X|^l = {n}^{l} exceeds the enumeration bound 100000"))
        })?;
        let points: Vec<Vec<usize>> =
            (0..total).map(|mut p| (0..l).map(|_| { let d = p % n; p /= n; d }).collect()).collect();
        prod.class_function(|i, h| {
            points.iter().filter(|x| moved(self, x, i, h) == **x).try_fold(Cyclotomic::zero(), |acc, x| {
                Ok(acc.add(&tuple_trace(self, x, i, h)?))
            })
        })
    }

    /// `f_*(τ^l(E))`: the diagonal contribution.
    pub fn diagonal_part(&self, prod: &CyclicProduct) -> Result<ClassFunction> {
        let l = prod.l;
        prod.class_function(|i, h| {
            self.gset.fixed_points(h).iter().try_fold(Cyclotomic::zero(), |acc, &x| {
                Ok(acc.add(&tuple_trace(self, &vec![x; l], i, h)?))
            })
        })
    }

    /// Character of `H` on the sections over the representative points
    /// `Φ(1, m, x)`, whose `C_l`-translates fill `X^l \ Δ`.
    pub fn free_part_base(&self, dec: &PowerDecomposition) -> Result<ClassFunction> {
        let reps = dec.representative_points();
        let h_group = self.group().clone();
        let index: HashMap<&Vec<usize>, usize> = reps.iter().enumerate().map(|(i, r)| (r, i)).collect();
        let values = (0..h_group.num_classes())
            .map(|c| {
                let h = h_group.classes().classes[c].representative;
                let mut acc = Cyclotomic::zero();
                for r in &reps {
                    let hr: Vec<usize> = r.iter().map(|&y| self.gset.act(h, y)).collect();
                    if !index.contains_key(&hr) {
                        return Err(Error::CertificateFailure(format!("representative set not H-stable at {r:?}")));
                    }
                    if &hr == r {
                        acc = acc.add(&tuple_trace(self, r, 0, h)?);
                    }
                }
                Ok(acc)
            })
            .collect::<Result<Vec<_>>>()?;
        ClassFunction::new(h_group, values)
    }

    /// `f^l_*(E^{⊠l})` through `X^l = Δ(X) ⊔ C_l × M (× X)`: the diagonal part
    /// plus the class induced from `1 × H`.
    pub fn tensor_power_decomposed(&self, prod: &CyclicProduct, dec: &PowerDecomposition) -> Result<ClassFunction> {
        if dec.gset().npoints() != self.gset.npoints() || dec.l() != prod.l {
            return Err(Error::DimensionMismatch("decomposition does not match the bundle".into()));
        }
        let free = prod.induce_from_factor(&self.free_part_base(dec)?)?;
        self.diagonal_part(prod)?.add(&free)
    }
}

/// `τ^l(V)` as a character of `C_l × H`: `(c^i, h) ↦ χ(h)^l` for `i = 0`, else `χ(h^l)`.
pub fn tau_cyclic_character(v: &ClassFunction, prod: &CyclicProduct) -> Result<ClassFunction> {
    if !Arc::ptr_eq(v.group(), &prod.factor) {
        return Err(Error::GroupMismatch("character is not on the product factor".into()));
    }
    let l = prod.l;
    let g = &prod.factor;
    prod.class_function(|i, h| {
        Ok(if i == 0 { v.at_element(h).pow(l as u32) } else { v.at_element(g.pow(h, l as i64)).clone() })
    })
}

/// Number of irreducibles of `H`, so callers can fail early on groups
/// without a character table.
pub fn require_table(group: &Arc<FiniteGroup>) -> Result<usize> {
    Ok(character_table(group)?.num_irreducibles())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{all_subgroups, decompose_power_gset, symmetric, PowerMode};

    #[test]
    fn regular_sections() {
        let c3 = cyclic(3);
        let e = EquivariantBundle::trivial(FiniteGSet::left_regular(&c3), 1).unwrap();
        assert_eq!(e.sections_pushforward().unwrap(), ClassFunction::regular(&c3));
    }

    #[test]
    fn two_cosets_give_trivial_plus_sign() {
        let s3 = symmetric(3);
        let c3 = all_subgroups(&s3).unwrap().into_iter().find(|e| e.sub().order() == 3).unwrap();
        let (x, _) = FiniteGSet::cosets(&s3, &c3).unwrap();
        let e = EquivariantBundle::trivial(x, 1).unwrap();
        let expect = ClassFunction::trivial(&s3).add(&ClassFunction::sign(&s3)).unwrap();
        assert_eq!(e.sections_pushforward().unwrap(), expect);
    }

    #[test]
    fn c3_square_values() {
        let c3 = cyclic(3);
        let e = EquivariantBundle::trivial(FiniteGSet::left_regular(&c3), 1).unwrap();
        let prod = CyclicProduct::new(2, &c3).unwrap();
        let direct = e.tensor_power_direct(&prod).unwrap();
        let gamma = c3.index_of(&crate::groups::Permutation::long_cycle(3)).unwrap();
        let at = |i, h| direct.at_element(prod.element(i, h)).clone();
        let id = c3.identity();
        assert_eq!(
            vec![at(0, id), at(0, gamma), at(1, id), at(1, gamma)],
            [9, 0, 3, 0].iter().map(|&v| Cyclotomic::from_int(v)).collect::<Vec<_>>()
        );
        let dec = decompose_power_gset(&c3, &PowerMode::Principal, 2).unwrap();
        assert_eq!(e.tensor_power_decomposed(&prod, &dec).unwrap(), direct);
        let tau = tau_cyclic_character(&e.sections_pushforward().unwrap(), &prod).unwrap();
        assert_eq!(tau, direct);
    }
}
