//! Tensor powers `B^{⊗l}` of a polynomial ring and the ideal `I` of the
//! diagonal, organised in blocks by content (the sum of the exponent vectors
//! of all factors). Content is preserved by the `Σ_l`-action and by the
//! multiplication map `B^{⊗l} → B`, and every generator used below is
//! content-homogeneous, so all linear algebra happens block by block. Inside a
//! block the diagonal ideal is the sum-zero hyperplane.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use super::graded::{monomials_of_degree, Monomial, Poly};
use crate::error::{Error, Result};
use crate::exact_arith::{EchelonBasis, Field};
use crate::groups::Permutation;

/// `B^{⊗l}` for `B = k[x_0..x_{n-1}]`; `x_a` in factor `i` has index `i n + a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorPower {
    pub n: usize,
    pub l: usize,
}

impl TensorPower {
    pub fn new(n: usize, l: usize) -> Self {
        Self { n, l }
    }

    pub fn nvars(&self) -> usize {
        self.n * self.l
    }

    pub fn var(&self, factor: usize, a: usize) -> usize {
        factor * self.n + a
    }

    pub fn content(&self, m: &[u32]) -> Monomial {
        let mut c = vec![0; self.n];
        for (k, e) in m.iter().enumerate() {
            c[k % self.n] += e;
        }
        c
    }

    pub fn factor(&self, m: &[u32], i: usize) -> Monomial {
        m[i * self.n..(i + 1) * self.n].to_vec()
    }

    /// `b` placed in factor `i`.
    pub fn place(&self, b: &[u32], i: usize) -> Monomial {
        let mut m = vec![0; self.nvars()];
        m[i * self.n..(i + 1) * self.n].copy_from_slice(b);
        m
    }

    /// Concatenation of one `B`-monomial per factor.
    pub fn join(&self, parts: &[Monomial]) -> Monomial {
        parts.concat()
    }

    /// Moves factor `i` to factor `σ(i)`.
    pub fn permute(&self, m: &[u32], sigma: &Permutation) -> Monomial {
        let mut out = vec![0; self.nvars()];
        for i in 0..self.l {
            let j = sigma.apply(i);
            out[j * self.n..(j + 1) * self.n].copy_from_slice(&m[i * self.n..(i + 1) * self.n]);
        }
        out
    }

    pub fn permute_poly<F: Field>(&self, p: &Poly<F>, sigma: &Permutation) -> Poly<F> {
        let mut out = Poly::zero(self.nvars());
        for (m, c) in &p.terms {
            out.add_term(self.permute(m, sigma), c.clone());
        }
        out
    }

    /// `x_a` in factor `i` minus `x_a` in factor `i + 1`.
    pub fn diagonal_generator<F: Field>(&self, a: usize, i: usize) -> Poly<F> {
        Poly::var(self.nvars(), self.var(i, a)).sub(&Poly::var(self.nvars(), self.var(i + 1, a)))
    }

    /// All monomials of total degree `d`.
    pub fn monomials_total(&self, d: u32) -> Vec<Monomial> {
        monomials_of_degree(self.nvars(), d)
    }

    /// All monomials of multidegree `(d, ..., d)`.
    pub fn monomials_multi(&self, d: u32) -> Vec<Monomial> {
        let per = monomials_of_degree(self.n, d);
        let mut out: Vec<Monomial> = vec![vec![]];
        for _ in 0..self.l {
            out = out
                .iter()
                .flat_map(|pre| per.iter().map(move |b| [pre.as_slice(), b.as_slice()].concat()))
                .collect();
        }
        out
    }

    pub fn format_monomial(&self, m: &[u32]) -> String {
        (0..self.l)
            .map(|i| {
                let f = self.factor(m, i);
                let s: Vec<String> = f
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(a, &e)| if e == 1 { format!("x{a}") } else { format!("x{a}^{e}") })
                    .collect();
                if s.is_empty() {
                    "1".to_string()
                } else {
                    s.join("")
                }
            })
            .collect::<Vec<_>>()
            .join("⊗")
    }

    pub fn format_poly<F: Field>(&self, p: &Poly<F>) -> String {
        let mut out = String::new();
        for (k, (m, c)) in p.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            if c != &F::fone() {
                let _ = write!(out, "{c:?}·");
            }
            out.push_str(&self.format_monomial(m));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Monomials of one graded piece grouped by content.
#[derive(Clone, Debug)]
pub struct ContentBlocks {
    pub blocks: BTreeMap<Monomial, Vec<Monomial>>,
    index: HashMap<Monomial, (Monomial, usize)>,
}

impl ContentBlocks {
    pub fn new(tp: &TensorPower, monomials: Vec<Monomial>) -> Self {
        let mut blocks: BTreeMap<Monomial, Vec<Monomial>> = BTreeMap::new();
        for m in monomials {
            blocks.entry(tp.content(&m)).or_default().push(m);
        }
        let index = blocks
            .iter()
            .flat_map(|(c, ms)| ms.iter().enumerate().map(move |(k, m)| (m.clone(), (c.clone(), k))))
            .collect();
        Self { blocks, index }
    }

    pub fn dim(&self) -> usize {
        self.index.len()
    }

    /// The block and coordinates of a content-homogeneous element of this piece.
    pub fn vector<F: Field>(&self, p: &Poly<F>) -> Result<Option<(Monomial, Vec<F>)>> {
        let mut block: Option<&Monomial> = None;
        let mut v: Vec<F> = Vec::new();
        for (m, c) in &p.terms {
            let (b, k) = self
                .index
                .get(m)
                .ok_or_else(|| Error::InvalidInput("monomial outside the graded piece".into()))?;
            match block {
                None => {
                    block = Some(b);
                    v = vec![F::fzero(); self.blocks[b].len()];
                }
                Some(prev) if prev != b => {
                    return Err(Error::Invariant("element is not content-homogeneous".into()));
                }
                _ => {}
            }
            v[*k] = c.clone();
        }
        Ok(block.map(|b| (b.clone(), v)))
    }
}

/// `U/W` for subspaces `W ⊆ U` of one coordinate space, with coordinates of
/// elements of `U` in a fixed basis of the quotient.
#[derive(Clone, Debug)]
pub struct Subquotient<F: Field> {
    ncols: usize,
    sub: EchelonBasis<F>,
    reps: Vec<Vec<F>>,
    lifts: Vec<Vec<F>>,
    tracked: EchelonBasis<F>,
}

impl<F: Field> Subquotient<F> {
    pub fn new(ncols: usize, sub_gens: impl IntoIterator<Item = Vec<F>>, ambient_gens: impl IntoIterator<Item = Vec<F>>) -> Self {
        let mut sub = EchelonBasis::new(ncols);
        for v in sub_gens {
            sub.insert(v);
        }
        let mut reps = Vec::new();
        let mut lifts = Vec::new();
        let mut plain = EchelonBasis::new(ncols);
        for v in ambient_gens {
            let nf = sub.reduce(v.clone());
            if plain.insert(nf.clone()) {
                reps.push(nf);
                lifts.push(v);
            }
        }
        let k = reps.len();
        let mut tracked = EchelonBasis::new(ncols + k);
        for (i, r) in reps.iter().enumerate() {
            let mut aug = r.clone();
            aug.extend((0..k).map(|j| if i == j { F::fone() } else { F::fzero() }));
            tracked.insert(aug);
        }
        Self { ncols, sub, reps, lifts, tracked }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    /// An element of `U` whose class is the `k`-th quotient basis vector.
    pub fn lift(&self, k: usize) -> &[F] {
        &self.lifts[k]
    }

    pub fn sub_dim(&self) -> usize {
        self.sub.rank()
    }

    /// Coordinates of `v + W`; `None` when `v ∉ U`.
    pub fn coords(&self, v: Vec<F>) -> Option<Vec<F>> {
        let mut nf = self.sub.reduce(v);
        let k = self.reps.len();
        let mut out = vec![F::fzero(); k];
        for (p, row) in self.tracked.basis() {
            if *p >= self.ncols {
                continue;
            }
            let c = nf[*p].clone();
            if c.is_fzero() {
                continue;
            }
            for (x, y) in nf.iter_mut().zip(&row[..self.ncols]) {
                *x = x.fsub(&c.fmul(y));
            }
            for (x, y) in out.iter_mut().zip(&row[self.ncols..]) {
                *x = x.fadd(&c.fmul(y));
            }
        }
        nf.iter().all(Field::is_fzero).then_some(out)
    }
}

/// Rank of the span of `a - b` over pairs of coordinates: vertices touched
/// minus connected components of the graph with those edges. Exact over any
/// field.
pub fn binomial_span_rank(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    let mut rank = 0;
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rank, Rational};

    #[test]
    fn content_and_permutation() {
        let tp = TensorPower::new(2, 3);
        let m = tp.join(&[vec![1, 0], vec![0, 2], vec![1, 1]]);
        assert_eq!(tp.content(&m), vec![2, 3]);
        let cyc = Permutation::long_cycle(3);
        let moved = tp.permute(&m, &cyc);
        assert_eq!(tp.content(&moved), vec![2, 3]);
        assert_eq!(tp.factor(&moved, cyc.apply(0)), vec![1, 0]);
        assert_eq!(tp.monomials_multi(1).len(), 8);
    }

    #[test]
    fn subquotient_coordinates() {
        let q = |v: &[i64]| v.iter().map(|&x| Rational::from_integer(x.into())).collect::<Vec<_>>();
        let s = Subquotient::new(3, vec![q(&[1, -1, 0])], vec![q(&[1, -1, 0]), q(&[0, 1, -1]), q(&[1, 0, -1])]);
        assert_eq!(s.dim(), 1);
        let a = s.coords(q(&[0, 1, -1])).unwrap();
        let b = s.coords(q(&[1, 0, -1])).unwrap();
        assert_eq!(a, b);
        assert!(s.coords(q(&[1, 0, 0])).is_none());
    }

    #[test]
    fn graph_rank_matches_elimination() {
        let edges = [(0, 1), (1, 2), (0, 2), (3, 4)];
        let rows: Vec<Vec<Rational>> = edges
            .iter()
            .map(|&(a, b)| {
                let mut v = vec![Rational::from_integer(0.into()); 6];
                v[a] = Rational::from_integer(1.into());
                v[b] = Rational::from_integer((-1).into());
                v
            })
            .collect();
        assert_eq!(binomial_span_rank(6, edges), rank(&rows, 6));
    }
}
