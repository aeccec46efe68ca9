//! Koszul complexes `Λ^·(F) → A` of a map `ε: F = ⊕_j A(-d_j) → A`, with
//! homology dimensions per internal degree, and the contracting homotopy of
//! `Λ^·(O[I_l]) → O`.

use std::collections::BTreeMap;
use std::fmt;

use super::graded::{monomials_of_degree, GradedAlgebra, Poly};
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, mat_mul, rank, Field, Matrix};

/// Degreewise matrices of a map between graded vector spaces. Rows are images
/// of source basis vectors in target coordinates.
#[derive(Clone, Debug)]
pub struct GradedMap<F: Field> {
    pub source_dims: Vec<usize>,
    pub target_dims: Vec<usize>,
    pub matrices: Vec<Matrix<F>>,
}

impl<F: Field> GradedMap<F> {
    pub fn max_degree(&self) -> usize {
        self.matrices.len().saturating_sub(1)
    }

    pub fn rank(&self, d: usize) -> usize {
        rank(&self.matrices[d], self.target_dims[d])
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &GradedMap<F>) -> Result<GradedMap<F>> {
        if self.target_dims != next.source_dims {
            return Err(Error::DimensionMismatch("composing graded maps with different middle terms".into()));
        }
        let matrices = (0..self.matrices.len())
            .map(|d| mat_mul(&self.matrices[d], &next.matrices[d], self.target_dims[d], next.target_dims[d]))
            .collect();
        Ok(GradedMap { source_dims: self.source_dims.clone(), target_dims: next.target_dims.clone(), matrices })
    }

    pub fn is_zero(&self) -> bool {
        self.matrices.iter().all(|m| m.iter().all(|row| row.iter().all(Field::is_fzero)))
    }
}

/// Subsets of `0..m` of size `i`, as sorted index lists in lexicographic order.
pub fn subsets(m: usize, i: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, m: usize, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == i {
            out.push(cur.clone());
            return;
        }
        for k in start..m {
            cur.push(k);
            rec(k + 1, m, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, i, &mut Vec::new(), &mut out);
    out
}

/// The Koszul complex of homogeneous `f_1, ..., f_m` in `k[x_0..x_{n-1}]`;
/// generator `e_j` sits in degree `deg f_j`.
#[derive(Debug)]
pub struct KoszulComplex<F: Field> {
    ring: GradedAlgebra,
    gens: Vec<Poly<F>>,
    shifts: Vec<u32>,
}

/// `dim H_i` in internal degree `d`, indexed `[i][d]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyTable {
    pub dims: Vec<Vec<usize>>,
}

impl HomologyTable {
    pub fn max_degree(&self) -> usize {
        self.dims.first().map_or(0, |r| r.len().saturating_sub(1))
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().flatten().all(|&x| x == 0)
    }
}

impl fmt::Display for HomologyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .dims
            .iter()
            .enumerate()
            .map(|(i, r)| format!("H{i}: {}", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        write!(f, "{}", rows.join("; "))
    }
}

impl<F: Field> KoszulComplex<F> {
    /// Zero generators are allowed and get degree 1.
    pub fn new(nvars: usize, gens: Vec<Poly<F>>) -> Result<Self> {
        let mut shifts = Vec::with_capacity(gens.len());
        for g in &gens {
            if g.nvars != nvars {
                return Err(Error::DimensionMismatch(format!("generator in {} variables, ring has {nvars}", g.nvars)));
            }
            if g.is_zero() {
                shifts.push(1);
            } else {
                shifts.push(
                    g.homogeneous_degree()
                        .ok_or_else(|| Error::InvalidInput("Koszul generators must be homogeneous".into()))?,
                );
            }
        }
        Ok(Self { ring: GradedAlgebra::new(nvars), gens, shifts })
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn ring(&self) -> &GradedAlgebra {
        &self.ring
    }

    /// Basis of `(Λ^i F)_d`: pairs `(S, monomial)` with `deg m = d - Σ_{j∈S} d_j`.
    fn basis(&self, i: usize, d: u32) -> Vec<(Vec<usize>, Vec<u32>)> {
        let mut out = Vec::new();
        for s in subsets(self.gens.len(), i) {
            let shift: u32 = s.iter().map(|&j| self.shifts[j]).sum();
            if shift <= d {
                for m in monomials_of_degree(self.ring.nvars(), d - shift) {
                    out.push((s.clone(), m));
                }
            }
        }
        out
    }

    /// `d_i: Λ^i F → Λ^{i-1} F` in internal degree `d`,
    /// `e_S ↦ Σ_k (-1)^k f_{s_k} e_{S \ s_k}`.
    pub fn differential(&self, i: usize, d: u32) -> (usize, usize, Matrix<F>) {
        let source = self.basis(i, d);
        if i == 0 {
            return (source.len(), 0, vec![Vec::new(); source.len()]);
        }
        let target = self.basis(i - 1, d);
        let index: BTreeMap<(Vec<usize>, Vec<u32>), usize> =
            target.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        let rows = source
            .iter()
            .map(|(s, m)| {
                let mut row = vec![F::fzero(); target.len()];
                for (k, &j) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(k);
                    let sign = if k % 2 == 0 { F::fone() } else { F::fone().fneg() };
                    for (gm, c) in &self.gens[j].terms {
                        let mono: Vec<u32> = gm.iter().zip(m).map(|(a, b)| a + b).collect();
                        let t = index[&(rest.clone(), mono)];
                        row[t] = row[t].fadd(&c.fmul(&sign));
                    }
                }
                row
            })
            .collect();
        (source.len(), target.len(), rows)
    }

    /// `d_i` as a graded map in degrees `0..=max_degree`.
    pub fn differential_map(&self, i: usize, max_degree: u32) -> GradedMap<F> {
        let mut out = GradedMap { source_dims: vec![], target_dims: vec![], matrices: vec![] };
        for d in 0..=max_degree {
            let (s, t, m) = self.differential(i, d);
            out.source_dims.push(s);
            out.target_dims.push(t);
            out.matrices.push(m);
        }
        out
    }

    /// `d_{i-1} ∘ d_i = 0` for every `i` and degree `≤ max_degree`.
    pub fn d_squared_vanishes(&self, max_degree: u32) -> Result<bool> {
        for i in 2..=self.gens.len() {
            let comp: GradedMap<F> = self.differential_map(i, max_degree).then(&self.differential_map(i - 1, max_degree))?;
            if !comp.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `dim H_i` at `Λ^i F` in degrees `0..=max_degree`, for `i = 0..=m`.
    pub fn homology_dimensions(&self, max_degree: u32) -> HomologyTable {
        let m = self.gens.len();
        let ranks: Vec<Vec<usize>> = (0..=m + 1)
            .map(|i| {
                (0..=max_degree)
                    .map(|d| {
                        if i == 0 || i > m {
                            0
                        } else {
                            let (_, t, mat) = self.differential(i, d);
                            rank(&mat, t)
                        }
                    })
                    .collect()
            })
            .collect();
        let dims = (0..=m)
            .map(|i| {
                (0..=max_degree)
                    .map(|d| self.basis(i, d).len() - ranks[i][d as usize] - ranks[i + 1][d as usize])
                    .collect()
            })
            .collect();
        HomologyTable { dims }
    }
}

/// `dim (Λ^i E)_d` for `E = ker(F|_Z → I/I^2)` on `Z = V(I)`, when the
/// generators are linear forms: then `I` is generated by `ρ` independent
/// linear forms, `O_Z` is a polynomial ring in `n - ρ` variables and `E` is
/// free of rank `m - ρ` generated in degree one. A nonzero constant generator
/// makes the ideal the unit ideal and every group vanish.
pub fn linear_kernel_oracle<F: Field>(nvars: usize, gens: &[Poly<F>], max_degree: u32) -> Result<HomologyTable> {
    let m = gens.len();
    if gens.iter().any(|g| g.homogeneous_degree() == Some(0)) {
        return Ok(HomologyTable { dims: vec![vec![0; max_degree as usize + 1]; m + 1] });
    }
    let ring = GradedAlgebra::new(nvars);
    let mut coeffs = Vec::with_capacity(m);
    for g in gens {
        if !g.is_zero() && g.homogeneous_degree() != Some(1) {
            return Err(Error::InvalidInput("the kernel oracle needs linear or constant generators".into()));
        }
        coeffs.push(ring.coordinates(g, 1));
    }
    let rho = rank(&coeffs, nvars);
    let free = nvars - rho;
    let hilbert = |d: i64| -> i64 {
        if d < 0 {
            0
        } else if free == 0 {
            (d == 0) as i64
        } else {
            binomial(d + free as i64 - 1, d).try_into().expect("small binomial")
        }
    };
    let e_rank = (m - rho) as i64;
    let dims = (0..=m)
        .map(|i| {
            (0..=max_degree as i64)
                .map(|d| {
                    let c: i64 = binomial(e_rank, i as i64).try_into().expect("small binomial");
                    (c * hilbert(d - i as i64)) as usize
                })
                .collect()
        })
        .collect();
    Ok(HomologyTable { dims })
}

/// The Koszul complex of `ε: k^l → k`, `e_i ↦ 1`, together with the homotopy
/// `h(ω) = e_0 ∧ ω` (projection onto the first summand split by `ε`);
/// returns whether `d h + h d = id` on `Λ^i` for every `i = 0..=l`, the
/// augmentation `k` being `Λ^0`.
pub fn summation_homotopy_holds<F: Field>(l: usize) -> bool {
    // d on Λ^i: e_S ↦ Σ_k (-1)^k e_{S \ s_k}; the augmentation sends Λ^0 to 0.
    let basis: Vec<Vec<Vec<usize>>> = (0..=l).map(|i| subsets(l, i)).collect();
    let index = |i: usize, s: &[usize]| basis[i].iter().position(|t| t == s).expect("subset");
    let sign = |k: usize| if k.is_multiple_of(2) { F::fone() } else { F::fone().fneg() };
    let d = |i: usize, v: &[F]| -> Vec<F> {
        if i == 0 {
            return Vec::new();
        }
        let mut out = vec![F::fzero(); basis[i - 1].len()];
        for (c, s) in v.iter().zip(&basis[i]) {
            if c.is_fzero() {
                continue;
            }
            for k in 0..s.len() {
                let mut rest = s.clone();
                rest.remove(k);
                let t = index(i - 1, &rest);
                out[t] = out[t].fadd(&c.fmul(&sign(k)));
            }
        }
        out
    };
    let h = |i: usize, v: &[F]| -> Vec<F> {
        if i == l {
            return Vec::new();
        }
        let mut out = vec![F::fzero(); basis[i + 1].len()];
        for (c, s) in v.iter().zip(&basis[i]) {
            if c.is_fzero() || s.contains(&0) {
                continue;
            }
            let mut t = vec![0];
            t.extend(s);
            let k = index(i + 1, &t);
            out[k] = out[k].fadd(c);
        }
        out
    };
    (0..=l).all(|i| {
        (0..basis[i].len()).all(|b| {
            let mut v = vec![F::fzero(); basis[i].len()];
            v[b] = F::fone();
            let mut total = vec![F::fzero(); basis[i].len()];
            if i < l {
                for (x, y) in total.iter_mut().zip(d(i + 1, &h(i, &v))) {
                    *x = x.fadd(&y);
                }
            }
            if i > 0 {
                for (x, y) in total.iter_mut().zip(h(i - 1, &d(i, &v))) {
                    *x = x.fadd(&y);
                }
            }
            total == v
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::Rational;

    fn lin(c: &[i64]) -> Poly<Rational> {
        Poly::linear(c)
    }

    #[test]
    fn regular_sequence() {
        let k = KoszulComplex::new(2, vec![lin(&[1, 0]), lin(&[0, 1])]).unwrap();
        let t = k.homology_dimensions(4);
        assert_eq!(t.dims, vec![vec![1, 0, 0, 0, 0], vec![0; 5], vec![0; 5]]);
        assert!(k.d_squared_vanishes(4).unwrap());
    }

    #[test]
    fn redundant_generator() {
        let gens = vec![lin(&[1, 0]), lin(&[0, 1]), lin(&[1, 1])];
        let k = KoszulComplex::new(2, gens.clone()).unwrap();
        let t = k.homology_dimensions(5);
        assert_eq!(t.dims[0], vec![1, 0, 0, 0, 0, 0]);
        assert_eq!(t.dims[1], vec![0, 1, 0, 0, 0, 0]);
        assert!(t.dims[2].iter().chain(&t.dims[3]).all(|&x| x == 0));
        assert_eq!(t, linear_kernel_oracle(2, &gens, 5).unwrap());
    }

    #[test]
    fn unit_ideal_is_exact() {
        let gens = vec![Poly::constant(2, Rational::from_integer(1.into())), lin(&[1, 0])];
        let k = KoszulComplex::new(2, gens).unwrap();
        assert!(k.homology_dimensions(4).is_zero());
    }

    #[test]
    fn homotopy() {
        for l in 1..=5 {
            assert!(summation_homotopy_holds::<Rational>(l));
        }
    }
}
