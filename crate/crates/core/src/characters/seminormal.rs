//! Young's seminormal form: explicit matrices for the irreducible
//! representations of `Σ_n` on standard Young tableaux. Used as a brute-force
//! oracle for the Murnaghan-Nakayama character tables.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exact_arith::{mat_mul, Matrix, Rational};
use crate::groups::Permutation;

/// A standard tableau as the row and column of each entry `0..n`.
type Tableau = Vec<(usize, usize)>;

fn standard_tableaux(shape: &[usize]) -> Vec<Tableau> {
    let n: usize = shape.iter().sum();
    let mut out = Vec::new();
    let mut filled = vec![0usize; shape.len()];
    let mut current = Vec::with_capacity(n);
    fn go(shape: &[usize], filled: &mut [usize], current: &mut Tableau, n: usize, out: &mut Vec<Tableau>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for r in 0..shape.len() {
            let fits = filled[r] < shape[r] && (r == 0 || filled[r - 1] > filled[r]);
            if fits {
                current.push((r, filled[r]));
                filled[r] += 1;
                go(shape, filled, current, n, out);
                filled[r] -= 1;
                current.pop();
            }
        }
    }
    go(shape, &mut filled, &mut current, n, &mut out);
    out
}

fn q(x: i64) -> Rational {
    Rational::from_integer(x.into())
}

/// The irreducible representation of `Σ_n` indexed by a partition, with
/// matrices for the adjacent transpositions `s_k = (k k+1)`. Columns are
/// images of basis vectors, so `ρ(gh) = ρ(g) ρ(h)`.
#[derive(Clone, Debug)]
pub struct SeminormalRep {
    pub shape: Vec<usize>,
    pub n: usize,
    pub dim: usize,
    generators: Vec<Matrix<Rational>>,
}

impl SeminormalRep {
    pub fn new(shape: &[usize]) -> Result<Self> {
        if shape.windows(2).any(|w| w[0] < w[1]) || shape.contains(&0) {
            return Err(Error::InvalidInput(format!("{shape:?} is not a partition")));
        }
        let n: usize = shape.iter().sum();
        let tableaux = standard_tableaux(shape);
        let dim = tableaux.len();
        let index: HashMap<Tableau, usize> = tableaux.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let content = |t: &Tableau, k: usize| t[k].1 as i64 - t[k].0 as i64;
        let mut generators = Vec::with_capacity(n.saturating_sub(1));
        for k in 0..n.saturating_sub(1) {
            let mut m = vec![vec![q(0); dim]; dim];
            for (j, t) in tableaux.iter().enumerate() {
                let r = content(t, k + 1) - content(t, k);
                let inv_r = Rational::new(1.into(), r.into());
                m[j][j] = inv_r.clone();
                if r.abs() == 1 && (t[k].0 == t[k + 1].0 || t[k].1 == t[k + 1].1) {
                    continue;
                }
                let mut swapped = t.clone();
                swapped.swap(k, k + 1);
                let i = index[&swapped];
                // The partner has axial distance -r; the off-diagonal entries
                // multiply to 1 - 1/r^2.
                m[i][j] = if r > 0 { q(1) } else { q(1) - &inv_r * &inv_r };
            }
            generators.push(m);
        }
        Ok(Self { shape: shape.to_vec(), n, dim, generators })
    }

    pub fn generator(&self, k: usize) -> &Matrix<Rational> {
        &self.generators[k]
    }

    /// Checks the Coxeter presentation: `s_k^2 = 1`, `(s_k s_{k+1})^3 = 1`,
    /// and `s_i s_j = s_j s_i` for `|i - j| >= 2`.
    pub fn satisfies_relations(&self) -> bool {
        let d = self.dim;
        let id: Matrix<Rational> = (0..d).map(|i| (0..d).map(|j| q(i64::from(i == j))).collect()).collect();
        let mul = |a: &Matrix<Rational>, b: &Matrix<Rational>| mat_mul(a, b, d, d);
        let g = &self.generators;
        for i in 0..g.len() {
            if mul(&g[i], &g[i]) != id {
                return false;
            }
            if i + 1 < g.len() {
                let p = mul(&g[i], &g[i + 1]);
                if mul(&mul(&p, &p), &p) != id {
                    return false;
                }
            }
            for j in i + 2..g.len() {
                if mul(&g[i], &g[j]) != mul(&g[j], &g[i]) {
                    return false;
                }
            }
        }
        true
    }

    /// `ρ(σ)`, writing `σ` as a word in adjacent transpositions by bubble sort.
    pub fn matrix(&self, sigma: &Permutation) -> Result<Matrix<Rational>> {
        if sigma.degree() != self.n {
            return Err(Error::DimensionMismatch(format!("permutation of degree {} on Σ_{}", sigma.degree(), self.n)));
        }
        let d = self.dim;
        // σ s_{i_1} ... s_{i_m} = id, so σ = s_{i_m} ... s_{i_1}.
        let mut images = sigma.images();
        let mut word = Vec::new();
        let mut sorted = false;
        while !sorted {
            sorted = true;
            for i in 0..images.len().saturating_sub(1) {
                if images[i] > images[i + 1] {
                    images.swap(i, i + 1);
                    word.push(i);
                    sorted = false;
                }
            }
        }
        let mut m: Matrix<Rational> = (0..d).map(|i| (0..d).map(|j| q(i64::from(i == j))).collect()).collect();
        for &k in &word {
            m = mat_mul(&self.generators[k], &m, d, d);
        }
        Ok(m)
    }

    pub fn character(&self, sigma: &Permutation) -> Result<Rational> {
        let m = self.matrix(sigma)?;
        Ok((0..self.dim).fold(q(0), |acc, i| acc + &m[i][i]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::partitions;

    #[test]
    fn tableau_counts_are_hook_dimensions() {
        assert_eq!(standard_tableaux(&[2, 1]).len(), 2);
        assert_eq!(standard_tableaux(&[3, 2]).len(), 5);
        assert_eq!(standard_tableaux(&[2, 2, 1]).len(), 5);
        assert_eq!(standard_tableaux(&[3, 2, 1]).len(), 16);
    }

    #[test]
    fn presentations_hold() {
        for n in 1..=5 {
            for shape in partitions(n) {
                assert!(SeminormalRep::new(&shape).unwrap().satisfies_relations(), "{shape:?}");
            }
        }
    }

    #[test]
    fn matrices_form_a_homomorphism() {
        let rep = SeminormalRep::new(&[2, 1, 1]).unwrap();
        let a = Permutation::from_cycles(4, &[&[0, 2, 3]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[1, 3]]).unwrap();
        let ab = rep.matrix(&a.compose(&b)).unwrap();
        let prod = mat_mul(&rep.matrix(&a).unwrap(), &rep.matrix(&b).unwrap(), rep.dim, rep.dim);
        assert_eq!(ab, prod);
    }

    #[test]
    fn standard_representation_of_s3() {
        let rep = SeminormalRep::new(&[2, 1]).unwrap();
        assert_eq!(rep.character(&Permutation::long_cycle(3)).unwrap(), q(-1));
        assert_eq!(rep.character(&Permutation::from_cycles(3, &[&[0, 1]]).unwrap()).unwrap(), q(0));
    }
}
