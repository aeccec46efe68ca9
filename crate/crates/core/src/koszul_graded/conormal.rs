//! The conormal module `I/I^2` of the diagonal `Spec B → Spec B^{⊗l}` with its
//! `Σ_l`-action, compared degree by degree with `Ω_B ⊗ H`, where `H` has basis
//! `[i] - [i+1]` and `Σ_l` acts trivially on `Ω_B`.

use std::collections::BTreeMap;
use std::fmt;

use super::graded::{monomials_of_degree, Monomial, Poly};
use super::tensor::{ContentBlocks, Subquotient, TensorPower};
use crate::error::{Error, Result};
use crate::exact_arith::{rank, Matrix, Rational};
use crate::groups::{symmetric, Permutation};

/// `(I/I^2)_d` as a representation: a quotient basis per content block and the
/// action matrices of every permutation (rows are images of basis vectors).
#[derive(Clone, Debug)]
pub struct EquivariantGradedPiece {
    pub degree: u32,
    pub dim: usize,
    pub actions: Vec<(Permutation, Matrix<Rational>)>,
}

impl EquivariantGradedPiece {
    pub fn trace(&self, k: usize) -> Rational {
        let m = &self.actions[k].1;
        (0..self.dim).fold(Rational::from_integer(0.into()), |acc, i| acc + &m[i][i])
    }

    /// `ρ(στ) = ρ(σ) ρ(τ)` for all pairs (row convention: `ρ(τ)` then `ρ(σ)`).
    pub fn is_representation(&self) -> bool {
        let lookup: BTreeMap<Vec<usize>, &Matrix<Rational>> =
            self.actions.iter().map(|(p, m)| (p.images(), m)).collect();
        self.actions.iter().all(|(s, ms)| {
            self.actions.iter().all(|(t, mt)| {
                let st = s.compose(t);
                let prod = crate::exact_arith::mat_mul(mt, ms, self.dim, self.dim);
                lookup.get(&st.images()).is_some_and(|m| **m == prod)
            })
        })
    }
}

/// Per-degree outcome of the comparison.
#[derive(Clone, Debug)]
pub struct ConormalDegree {
    pub degree: u32,
    pub dim: usize,
    pub expected_dim: usize,
    /// `(permutation, trace on I/I^2, trace on Ω ⊗ H)`.
    pub characters: Vec<(Vec<usize>, Rational, Rational)>,
    pub is_representation: bool,
    pub alpha_bijective: bool,
    pub alpha_equivariant: bool,
}

impl ConormalDegree {
    pub fn passed(&self) -> bool {
        self.dim == self.expected_dim
            && self.characters.iter().all(|(_, a, b)| a == b)
            && self.is_representation
            && self.alpha_bijective
            && self.alpha_equivariant
    }
}

#[derive(Clone, Debug)]
pub struct ConormalReport {
    pub n: usize,
    pub l: usize,
    pub degrees: Vec<ConormalDegree>,
}

impl ConormalReport {
    pub fn passed(&self) -> bool {
        self.degrees.iter().all(ConormalDegree::passed)
    }
}

impl fmt::Display for ConormalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .degrees
            .iter()
            .map(|d| {
                let chars: Vec<String> = d.characters.iter().map(|(_, a, _)| a.to_string()).collect();
                format!("d={}: dim {} (expected {}), character [{}]", d.degree, d.dim, d.expected_dim, chars.join(", "))
            })
            .collect();
        write!(f, "B = k[{} vars], l = {}: {}", self.n, self.l, parts.join("; "))
    }
}

fn to_vec(blocks: &ContentBlocks, p: &Poly<Rational>) -> Result<Option<(Monomial, Vec<Rational>)>> {
    blocks.vector(p)
}

/// Expresses `[σ(i)] - [σ(i+1)]` in the basis `[j] - [j+1]`.
fn telescope(a: usize, b: usize) -> Vec<(usize, i64)> {
    if a < b {
        (a..b).map(|j| (j, 1)).collect()
    } else {
        (b..a).map(|j| (j, -1)).collect()
    }
}

/// Builds `(I/I^2)_d` for `d = 0..=max_degree` and compares it with
/// `(Ω_B ⊗ H)_d` for `B = k[x_0..x_{n-1}]`.
pub fn diagonal_conormal(n: usize, l: usize, max_degree: u32) -> Result<ConormalReport> {
    if l == 0 || n == 0 {
        return Err(Error::OutOfRange("need at least one variable and l >= 1".into()));
    }
    let tp = TensorPower::new(n, l);
    let perms: Vec<Permutation> = symmetric(l).elements().to_vec();
    let gens: Vec<Poly<Rational>> =
        (0..n).flat_map(|a| (0..l - 1).map(move |i| (a, i))).map(|(a, i)| tp.diagonal_generator(a, i)).collect();
    let products: Vec<Poly<Rational>> =
        gens.iter().enumerate().flat_map(|(k, g)| gens[k..].iter().map(move |h| g.mul(h))).collect();
    let mut degrees = Vec::new();
    for d in 0..=max_degree {
        let blocks = ContentBlocks::new(&tp, tp.monomials_total(d));
        // I^2 in degree d, block by block.
        let mut square: BTreeMap<Monomial, Vec<Vec<Rational>>> = BTreeMap::new();
        if d >= 2 {
            for m in tp.monomials_total(d - 2) {
                for p in &products {
                    if let Some((c, v)) = to_vec(&blocks, &p.mul_monomial(&m))? {
                        square.entry(c).or_default().push(v);
                    }
                }
            }
        }
        let mut quotients: BTreeMap<Monomial, Subquotient<Rational>> = BTreeMap::new();
        let mut offsets: BTreeMap<Monomial, usize> = BTreeMap::new();
        let mut dim = 0;
        for (c, ms) in &blocks.blocks {
            let size = ms.len();
            let ambient = (1..size).map(|k| {
                let mut v = vec![Rational::from_integer(0.into()); size];
                v[0] = Rational::from_integer(1.into());
                v[k] = Rational::from_integer((-1).into());
                v
            });
            let q = Subquotient::new(size, square.remove(c).unwrap_or_default(), ambient);
            offsets.insert(c.clone(), dim);
            dim += q.dim();
            quotients.insert(c.clone(), q);
        }
        // Coordinates of an element of I_d in the quotient basis.
        let coords = |p: &Poly<Rational>| -> Result<Vec<Rational>> {
            let mut out = vec![Rational::from_integer(0.into()); dim];
            if let Some((c, v)) = to_vec(&blocks, p)? {
                let local = quotients[&c]
                    .coords(v)
                    .ok_or_else(|| Error::Invariant("element outside the diagonal ideal".into()))?;
                let off = offsets[&c];
                for (k, x) in local.into_iter().enumerate() {
                    out[off + k] = x;
                }
            }
            Ok(out)
        };
        let mut basis_elements: Vec<Poly<Rational>> = Vec::with_capacity(dim);
        for (c, q) in &quotients {
            let ms = &blocks.blocks[c];
            for k in 0..q.dim() {
                let mut lift = Poly::zero(tp.nvars());
                for (x, m) in q.lift(k).iter().zip(ms) {
                    lift.add_term(m.clone(), x.clone());
                }
                basis_elements.push(lift);
            }
        }
        let mut actions = Vec::with_capacity(perms.len());
        for s in &perms {
            let m: Matrix<Rational> =
                basis_elements.iter().map(|b| coords(&tp.permute_poly(b, s))).collect::<Result<_>>()?;
            actions.push((s.clone(), m));
        }
        let piece = EquivariantGradedPiece { degree: d, dim, actions };
        let b_prev = if d == 0 { 0 } else { monomials_of_degree(n, d - 1).len() };
        let expected_dim = n * (l - 1) * b_prev;
        let characters = perms
            .iter()
            .enumerate()
            .map(|(k, s)| {
                let fixed = (0..l).filter(|&i| s.apply(i) == i).count() as i64;
                let expected = (n * b_prev) as i64 * (fixed - 1);
                (s.images(), piece.trace(k), Rational::from_integer(expected.into()))
            })
            .collect();
        // α(m dx_a ⊗ ([i] - [i+1])) = m·(x_a^{(i)} - x_a^{(i+1)}) with m in factor 0.
        let alpha = |m: &Monomial, a: usize, i: usize| tp.diagonal_generator::<Rational>(a, i).mul_monomial(&tp.place(m, 0));
        let lower = if d == 0 { Vec::new() } else { monomials_of_degree(n, d - 1) };
        let mut image_rows = Vec::new();
        let mut equivariant = true;
        for m in &lower {
            for a in 0..n {
                for i in 0..l - 1 {
                    let img = alpha(m, a, i);
                    image_rows.push(coords(&img)?);
                    for s in &perms {
                        let left = coords(&tp.permute_poly(&img, s))?;
                        let mut right = Poly::zero(tp.nvars());
                        for (j, sign) in telescope(s.apply(i), s.apply(i + 1)) {
                            right = right.add(&alpha(m, a, j).scale(&Rational::from_integer(sign.into())));
                        }
                        equivariant &= left == coords(&right)?;
                    }
                }
            }
        }
        let alpha_bijective = image_rows.len() == dim && rank(&image_rows, dim) == dim;
        degrees.push(ConormalDegree {
            degree: d,
            dim,
            expected_dim,
            characters,
            is_representation: piece.is_representation(),
            alpha_bijective,
            alpha_equivariant: equivariant,
        });
    }
    Ok(ConormalReport { n, l, degrees })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_squared_is_sign() {
        let r = diagonal_conormal(1, 2, 3).unwrap();
        assert!(r.passed(), "{r}");
        for d in &r.degrees[1..] {
            assert_eq!(d.dim, 1);
            // The swap acts by -1.
            let swap = d.characters.iter().find(|(p, _, _)| p == &vec![1, 0]).unwrap();
            assert_eq!(swap.1, Rational::from_integer((-1).into()));
        }
    }

    #[test]
    fn trivial_power() {
        let r = diagonal_conormal(2, 1, 3).unwrap();
        assert!(r.passed());
        assert!(r.degrees.iter().all(|d| d.dim == 0));
    }

    #[test]
    fn plane_squared() {
        assert!(diagonal_conormal(2, 2, 2).unwrap().passed());
    }
}
