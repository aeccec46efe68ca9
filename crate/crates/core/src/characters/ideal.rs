//! Ideal membership in representation rings by integer lattice computations,
//! and the explicit quotients used to describe those ideals.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::sync::Arc;

use super::classfn::ClassFunction;
use super::table::character_table;
use crate::error::{Error, Result};
use crate::exact_arith::{smith_normal_form, Cyclotomic, Rational};
use crate::check::CheckRecord;
use crate::groups::{cyclic, FiniteGroup, GroupKind};

/// Finds `w` with `Σ_j w_j generators[j] = target`. Coefficients are integers,
/// or lie in `Z[1/p]` when `invert_prime` is set. The witness is re-checked.
pub fn lattice_membership(
    generators: &[Vec<Rational>],
    target: &[Rational],
    invert_prime: Option<u64>,
) -> Result<Option<Vec<Rational>>> {
    let nrows = target.len();
    let ncols = generators.len();
    if generators.iter().any(|g| g.len() != nrows) {
        return Err(Error::DimensionMismatch("generator length differs from target".into()));
    }
    if ncols == 0 {
        return Ok(if target.iter().all(Zero::is_zero) { Some(vec![]) } else { None });
    }
    let mut a = vec![vec![BigInt::zero(); ncols]; nrows];
    for (j, g) in generators.iter().enumerate() {
        for (i, x) in g.iter().enumerate() {
            if !x.is_integer() {
                return Err(Error::InvalidInput(format!("generator entry {x} is not an integer")));
            }
            a[i][j] = x.to_integer();
        }
    }
    let snf = smith_normal_form(&a, nrows, ncols);
    let Some(w) = snf.solve(target, invert_prime) else {
        return Ok(None);
    };
    for (i, t) in target.iter().enumerate() {
        let s = generators.iter().zip(&w).fold(Rational::zero(), |acc, (g, c)| acc + &g[i] * c);
        if &s != t {
            return Err(Error::Invariant("lattice witness does not reproduce the target".into()));
        }
    }
    Ok(Some(w))
}

fn spanning_set(group: &Arc<FiniteGroup>, generators: &[ClassFunction]) -> Result<Vec<Vec<Rational>>> {
    let k = character_table(group)?.num_irreducibles();
    let mut cols = Vec::new();
    for g in generators {
        for a in 0..k {
            let prod = g.mul(&ClassFunction::irreducible(group, a)?)?;
            cols.push(prod.decompose()?.into_iter().map(Rational::from_integer).collect());
        }
    }
    Ok(cols)
}

/// Ideal of `R(G)` generated by finitely many virtual characters.
#[derive(Clone, Debug)]
pub struct RepIdeal {
    group: Arc<FiniteGroup>,
    generators: Vec<ClassFunction>,
    /// Multiplicity vectors of `generator · irreducible`, which span `I` over `Z`.
    span: Vec<Vec<Rational>>,
}

/// Expresses an element as `Σ_i multiplier_i · generator_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct RepWitness {
    pub multipliers: Vec<ClassFunction>,
}

impl RepIdeal {
    pub fn new(group: &Arc<FiniteGroup>, generators: Vec<ClassFunction>) -> Result<Self> {
        for g in &generators {
            if !Arc::ptr_eq(g.group(), group) {
                return Err(Error::GroupMismatch("ideal generator on another group".into()));
            }
            g.decompose()?;
        }
        let span = spanning_set(group, &generators)?;
        Ok(Self { group: group.clone(), generators, span })
    }

    pub fn generators(&self) -> &[ClassFunction] {
        &self.generators
    }

    pub fn contains(&self, x: &ClassFunction) -> Result<Option<RepWitness>> {
        let k = character_table(&self.group)?.num_irreducibles();
        let target: Vec<Rational> = x.decompose()?.into_iter().map(Rational::from_integer).collect();
        let Some(w) = lattice_membership(&self.span, &target, None)? else {
            return Ok(None);
        };
        let multipliers = w
            .chunks(k)
            .map(|c| {
                let m: Vec<BigInt> = c.iter().map(|q| q.to_integer()).collect();
                ClassFunction::from_multiplicities(&self.group, &m)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(RepWitness { multipliers }))
    }

    /// Invariant factors of the quotient `R(G)/I` as an abelian group: a list
    /// of torsion orders and the free rank.
    pub fn quotient_structure(&self) -> Result<(Vec<BigInt>, usize)> {
        let cols = &self.span;
        let k = character_table(&self.group)?.num_irreducibles();
        let a: Vec<Vec<BigInt>> =
            (0..k).map(|i| cols.iter().map(|c| c[i].to_integer()).collect()).collect();
        let snf = smith_normal_form(&a, k, cols.len());
        let torsion = snf.invariants.iter().filter(|d| !d.is_one()).cloned().collect();
        Ok((torsion, k - snf.rank()))
    }
}

fn cyclic_generator_exponents(group: &Arc<FiniteGroup>) -> Result<usize> {
    match group.kind() {
        GroupKind::Cyclic { powers, .. } => Ok(powers.len()),
        _ => Err(Error::GroupMismatch(format!("{} is not cyclic", group.name()))),
    }
}

/// The ring map `R(C_l) -> Z[ζ_l]`, `t ↦ ζ_l`, applied to a virtual character.
pub fn cyclotomic_quotient_map(x: &ClassFunction) -> Result<Cyclotomic> {
    let l = cyclic_generator_exponents(x.group())? as u64;
    let m = x.decompose()?;
    let coeffs: Vec<Rational> = m.into_iter().map(Rational::from_integer).collect();
    Ok(Cyclotomic::from_power_coeffs(l, &coeffs))
}

/// Integer basis of the kernel of `Z^l = R(C_l) -> Z[ζ_l]`, in multiplicity coordinates.
pub fn cyclotomic_quotient_kernel(l: usize) -> Vec<Vec<BigInt>> {
    let d = Cyclotomic::zeta_pow(l as u64, 0).field_degree() as usize;
    let images: Vec<Vec<Rational>> = (0..l as i64)
        .map(|j| Cyclotomic::zeta_pow(l as u64, j).coeffs().to_vec())
        .collect();
    let a: Vec<Vec<BigInt>> = (0..d)
        .map(|i| images.iter().map(|c| c[i].to_integer()).collect())
        .collect();
    smith_normal_form(&a, d, l).kernel_basis()
}

/// Class of a `F_p[C_p]`-module given by Jordan block sizes, in
/// `K_0(C_p, F_p)/([F_p[C_p]]) ≅ Z/p`. Classes are measured by composition length.
pub fn modular_dimension_quotient(blocks: &[usize], p: u64) -> Result<u64> {
    if !crate::exact_arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    for &b in blocks {
        if b == 0 || b as u64 > p {
            return Err(Error::OutOfRange(format!("Jordan block of size {b} for p = {p}")));
        }
    }
    Ok(blocks.iter().map(|&b| b as u64).sum::<u64>() % p)
}

/// Rank of a matrix over `F_p` for a small prime `p`.
fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_multiple_of(p)) else { continue };
        rows.swap(r, k);
        let inv = (1..p).find(|x| x * rows[r][c] % p == 1).expect("prime modulus");
        for k in 0..rows.len() {
            if k != r && rows[k][c] != 0 {
                let f = rows[k][c] * inv % p;
                for j in 0..ncols {
                    rows[k][j] = (rows[k][j] + p * p - f * rows[r][j] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

/// Jordan block sizes of the generator of `C_p` on the regular module
/// `F_p[C_p]`, from the ranks of `(T - 1)^k`.
pub fn regular_jordan_blocks(p: u64) -> Result<Vec<usize>> {
    if !crate::exact_arith::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = p as usize;
    // T - 1 for the cyclic shift e_i -> e_{i+1}.
    let shift_minus_one: Vec<Vec<u64>> = (0..n)
        .map(|i| (0..n).map(|j| ((j == (i + 1) % n) as u64 + p - (i == j) as u64) % p).collect())
        .collect();
    let mul = |a: &Vec<Vec<u64>>, b: &Vec<Vec<u64>>| -> Vec<Vec<u64>> {
        (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum::<u64>() % p).collect()).collect()
    };
    // ranks[k] = rank (T - 1)^k; blocks of size >= k number ranks[k-1] - ranks[k].
    let mut ranks = vec![n];
    let mut power = shift_minus_one.clone();
    for _ in 0..n {
        ranks.push(rank_mod_p(power.clone(), p));
        power = mul(&power, &shift_minus_one);
    }
    let at_least: Vec<usize> = (1..=n).map(|k| ranks[k - 1] - ranks[k]).collect();
    let mut blocks = Vec::new();
    for k in 1..=n {
        let next = if k < n { at_least[k] } else { 0 };
        for _ in 0..at_least[k - 1] - next {
            blocks.push(k);
        }
    }
    Ok(blocks)
}

/// Order of `K_0(C_p, F_p)/([F_p[C_p]])`. The only simple module is the
/// trivial one, so classes are measured by composition length and the ideal
/// is generated by the length of the regular module; the order is read off
/// the Smith form.
pub fn modular_quotient_order(p: u64) -> Result<BigInt> {
    let length: usize = regular_jordan_blocks(p)?.iter().sum();
    let snf = smith_normal_form(&vec![vec![BigInt::from(length)]], 1, 1);
    Ok(snf.invariants.iter().fold(BigInt::one(), |acc, d| acc * d))
}

/// Injectivity of `Z = K_0(pt) → R(C_l)/([regular])` over `C`, by the two
/// left inverses of `y ↦ [H] y` with `H = regular - 1`: the fixed-point map
/// `χ ↦ ⟨χ, 1⟩` vanishes on `[H]` and is the identity on trivial classes, and
/// each nontrivial isotypic projection sends `[H]` to 1. The quotient is also
/// checked to be torsion-free of rank `l - 1` with `1` outside the ideal.
pub fn trivial_injection_checks(l: usize) -> Result<Vec<CheckRecord>> {
    if !crate::exact_arith::is_prime(l as u64) {
        return Err(Error::NotPrime(l as u64));
    }
    let g = cyclic(l);
    let one = ClassFunction::trivial(&g);
    let regular = ClassFunction::regular(&g);
    let h = regular.sub(&one)?;
    let mut out = vec![
        CheckRecord::equality(format!("<H, 1> = 0 on C_{l}"), &h.inner(&one)?, &Cyclotomic::zero()),
        CheckRecord::equality(format!("<1, 1> = 1 on C_{l}"), &one.inner(&one)?, &Cyclotomic::one()),
    ];
    let m = h.decompose()?;
    for (j, mult) in m.iter().enumerate().skip(1) {
        out.push(CheckRecord::equality(format!("multiplicity of t^{j} in H on C_{l}"), mult, &BigInt::one()));
    }
    let ideal = RepIdeal::new(&g, vec![regular])?;
    let (torsion, free) = ideal.quotient_structure()?;
    out.push(CheckRecord::boolean(
        format!("R(C_{l})/([regular]) is torsion-free of rank {}", l - 1),
        torsion.is_empty() && free == l - 1,
        format!("torsion {torsion:?}, rank {free}"),
        format!("torsion [], rank {}", l - 1),
    ));
    let member = ideal.contains(&one)?.is_some();
    out.push(CheckRecord::boolean(
        format!("1 is outside ([regular]) in R(C_{l})"),
        !member,
        format!("member: {member}"),
        "member: false",
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::int;
    use crate::groups::cyclic;

    #[test]
    fn one_plus_t_maps_to_minus_zeta_squared() {
        let c3 = cyclic(3);
        let x = ClassFunction::from_multiplicities(&c3, &[1.into(), 1.into(), 0.into()]).unwrap();
        let img = cyclotomic_quotient_map(&x).unwrap();
        assert_eq!(img, Cyclotomic::zeta_pow(3, 2).neg());
    }

    #[test]
    fn regular_ideal_membership() {
        let c5 = cyclic(5);
        let ideal = RepIdeal::new(&c5, vec![ClassFunction::regular(&c5)]).unwrap();
        let three_reg = ClassFunction::regular(&c5).scale(&int(3));
        let w = ideal.contains(&three_reg).unwrap().unwrap();
        let rebuilt = w.multipliers[0].mul(&ClassFunction::regular(&c5)).unwrap();
        assert_eq!(rebuilt, three_reg);
        assert!(ideal.contains(&ClassFunction::trivial(&c5)).unwrap().is_none());
        let (torsion, free) = ideal.quotient_structure().unwrap();
        assert!(torsion.is_empty());
        assert_eq!(free, 4);
    }

    #[test]
    fn kernel_is_spanned_by_regular() {
        for l in [2usize, 3, 5, 7] {
            let k = cyclotomic_quotient_kernel(l);
            assert_eq!(k.len(), 1);
            let v = &k[0];
            assert!(v.iter().all(|x| x == &v[0]));
            assert!(v[0] == BigInt::one() || v[0] == -BigInt::one());
        }
    }

    #[test]
    fn modular_quotient() {
        assert_eq!(modular_dimension_quotient(&[2], 3).unwrap(), 2);
        assert_eq!(modular_dimension_quotient(&[3, 1], 3).unwrap(), 1);
        assert!(modular_dimension_quotient(&[4], 3).is_err());
        for p in [2u64, 3, 5] {
            assert_eq!(regular_jordan_blocks(p).unwrap(), vec![p as usize]);
            assert_eq!(modular_quotient_order(p).unwrap(), BigInt::from(p));
        }
    }

    #[test]
    fn trivial_classes_inject() {
        for l in [2, 3, 5, 7] {
            for r in trivial_injection_checks(l).unwrap() {
                assert!(r.passed, "{r:?}");
            }
        }
    }

    #[test]
    fn localized_membership() {
        let gens = vec![vec![int(2)]];
        assert!(lattice_membership(&gens, &[int(1)], None).unwrap().is_none());
        assert!(lattice_membership(&gens, &[int(1)], Some(2)).unwrap().is_some());
        assert!(lattice_membership(&gens, &[int(1)], Some(3)).unwrap().is_none());
    }
}
