//! Bounded-degree certificates: generation of `L^{⊠l}` on `(P^r)^l` by
//! `Σ_l`-invariant sections, and surjectivity of the maps `α` from copies of
//! `H` onto the diagonal ideal, in projective (`C_l`) and affine (`Σ_l`) form.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::graded::{monomial_mul, Monomial, Poly};
use super::tensor::{binomial_span_rank, ContentBlocks, TensorPower};
use crate::error::{Error, Result};
use crate::exact_arith::{EchelonBasis, Field};
use crate::groups::{symmetric, Permutation};

/// Choices of the greedy construction at a point of `(P^r)^l` whose `i`-th
/// coordinate has support `supports[i]` (a bitmask over `x_0..x_r`): scan the
/// coordinates in order, and take the first whose set `M` of not yet covered
/// factors where it does not vanish is nonempty. Returns `(coordinate, M)`.
pub fn greedy_choices(r: usize, supports: &[u32]) -> Result<Vec<(usize, Vec<usize>)>> {
    let l = supports.len();
    let mut covered = vec![false; l];
    let mut out = Vec::new();
    while covered.iter().any(|c| !c) {
        let pick = (0..=r).find_map(|c| {
            let m: Vec<usize> = (0..l).filter(|&i| !covered[i] && supports[i] >> c & 1 == 1).collect();
            (!m.is_empty()).then_some((c, m))
        });
        let (c, m) = pick.ok_or_else(|| Error::InvalidInput("a point with an empty support".into()))?;
        for &i in &m {
            covered[i] = true;
        }
        out.push((c, m));
    }
    Ok(out)
}

/// `s = Σ_{σ ∈ Σ_l / Σ(M_1..M_N)} ⊗_i x_{c_{r(σ^{-1}(i))}}`; distinct cosets give
/// distinct tensors, so the sum runs over the distinct images.
pub fn section_from_choices<F: Field>(tp: &TensorPower, choices: &[(usize, Vec<usize>)]) -> Poly<F> {
    let mut coordinate_at = vec![0usize; tp.l];
    for (c, m) in choices {
        for &i in m {
            coordinate_at[i] = *c;
        }
    }
    let unit = |c: usize| {
        let mut e = vec![0u32; tp.n];
        e[c] = 1;
        e
    };
    let base = tp.join(&coordinate_at.iter().map(|&c| unit(c)).collect::<Vec<_>>());
    let images: BTreeSet<Monomial> = symmetric(tp.l).elements().iter().map(|s| tp.permute(&base, s)).collect();
    let mut p = Poly::zero(tp.nvars());
    for m in images {
        p.add_term(m, F::fone());
    }
    p
}

#[derive(Clone, Debug)]
pub struct SectionsCertificate<F: Field> {
    pub r: usize,
    pub l: usize,
    pub bound: u32,
    pub sections: Vec<Poly<F>>,
    pub formatted: Vec<String>,
    pub invariant: bool,
    /// Smallest `N ≤ bound` at which every monomial of multidegree `(N..N)`
    /// lies in the ideal of the sections.
    pub certified_at: Option<u32>,
    /// A monomial outside the ideal at `N = bound`, when no certificate exists.
    pub failing_monomial: Option<String>,
}

impl<F: Field> SectionsCertificate<F> {
    pub fn passed(&self) -> bool {
        self.invariant && self.certified_at.is_some()
    }
}

impl<F: Field> fmt::Display for SectionsCertificate<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "r={}, l={}: {} sections [{}]", self.r, self.l, self.sections.len(), self.formatted.join(", "))?;
        match (self.certified_at, &self.failing_monomial) {
            (Some(n), _) => write!(f, "; generation certified at N={n}"),
            (None, Some(m)) => write!(f, "; no certificate up to N={}, {m} not reached", self.bound),
            (None, None) => write!(f, "; no certificate up to N={}", self.bound),
        }
    }
}

/// Every support pattern of a point of `(P^r)^l`, in lexicographic order.
fn support_patterns(r: usize, l: usize) -> Vec<Vec<u32>> {
    let full = (1u32 << (r + 1)) - 1;
    let mut out: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..l {
        out = out.iter().flat_map(|p| (1..=full).map(move |s| [p.as_slice(), &[s]].concat())).collect();
    }
    out
}

/// Runs the greedy construction over every support pattern (the section it
/// yields depends on a point only through the supports of its coordinates),
/// checks `Σ_l`-invariance, and searches `N = 1..=bound` for a degree at which
/// the sections generate every monomial of multidegree `(N, ..., N)`.
pub fn invariant_sections_generate<F: Field>(r: usize, l: usize, bound: u32) -> Result<SectionsCertificate<F>> {
    if l == 0 {
        return Err(Error::OutOfRange("l must be positive".into()));
    }
    let tp = TensorPower::new(r + 1, l);
    let mut sections: Vec<Poly<F>> = Vec::new();
    for pattern in support_patterns(r, l) {
        let s = section_from_choices(&tp, &greedy_choices(r, &pattern)?);
        if !sections.contains(&s) {
            sections.push(s);
        }
    }
    let perms: Vec<Permutation> = symmetric(l).elements().to_vec();
    let invariant = sections.iter().all(|s| perms.iter().all(|p| &tp.permute_poly(s, p) == s));
    let mut certified_at = None;
    let mut failing_monomial = None;
    for n in 1..=bound {
        match ideal_misses_monomial(&tp, &sections, n)? {
            None => {
                certified_at = Some(n);
                break;
            }
            Some(m) => failing_monomial = Some(tp.format_monomial(&m)),
        }
    }
    if certified_at.is_some() {
        failing_monomial = None;
    }
    let formatted = sections.iter().map(|s| tp.format_poly(s)).collect();
    Ok(SectionsCertificate { r, l, bound, sections, formatted, invariant, certified_at, failing_monomial })
}

/// A monomial of multidegree `(n..n)` outside the ideal generated by the
/// multidegree-`(1..1)` `sections`, if any.
fn ideal_misses_monomial<F: Field>(tp: &TensorPower, sections: &[Poly<F>], n: u32) -> Result<Option<Monomial>> {
    let blocks = ContentBlocks::new(tp, tp.monomials_multi(n));
    let mut spans: BTreeMap<Monomial, EchelonBasis<F>> =
        blocks.blocks.iter().map(|(c, ms)| (c.clone(), EchelonBasis::new(ms.len()))).collect();
    for m in tp.monomials_multi(n - 1) {
        for s in sections {
            if let Some((c, v)) = blocks.vector(&s.mul_monomial(&m))? {
                let span = spans.get_mut(&c).expect("block");
                if span.rank() < span.ncols() {
                    span.insert(v);
                }
            }
        }
    }
    for (c, span) in &spans {
        if span.rank() < span.ncols() {
            let ms = &blocks.blocks[c];
            for (k, m) in ms.iter().enumerate() {
                let mut e = vec![F::fzero(); ms.len()];
                e[k] = F::fone();
                if !span.contains(e) {
                    return Ok(Some(m.clone()));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlphaMode {
    /// `X = P^r`, `S^l = ⊕_d S_d^{⊗l}`, `C_l`-maps indexed by `j ∈ {0..r}^l`.
    Projective,
    /// `X = A^n`, `B^{⊗l}` with its total grading, `Σ_l`-maps per generator.
    Affine,
}

impl AlphaMode {
    pub fn name(self) -> &'static str {
        match self {
            AlphaMode::Projective => "projective",
            AlphaMode::Affine => "affine",
        }
    }
}

#[derive(Clone, Debug)]
pub struct AlphaDegree {
    pub degree: u32,
    pub ideal_dim: usize,
    pub image_dim: usize,
}

impl AlphaDegree {
    pub fn cokernel(&self) -> usize {
        self.ideal_dim - self.image_dim
    }
}

#[derive(Clone, Debug)]
pub struct AlphaReport {
    pub mode: AlphaMode,
    /// `r` in projective mode, the number of generators in affine mode.
    pub size: usize,
    pub l: usize,
    pub degrees: Vec<AlphaDegree>,
}

impl AlphaReport {
    /// Smallest degree from which the cokernel vanishes through the bound.
    pub fn surjective_from(&self) -> Option<u32> {
        let mut from = None;
        for d in self.degrees.iter().rev() {
            if d.cokernel() != 0 {
                break;
            }
            from = Some(d.degree);
        }
        from
    }

    /// The affine map is onto `I` in every degree; the projective one is onto
    /// in all degrees from some point up to the bound, which is what the
    /// sheaf statement sees.
    pub fn passed(&self) -> bool {
        match self.mode {
            AlphaMode::Affine => self.degrees.iter().all(|d| d.cokernel() == 0),
            AlphaMode::Projective => self.surjective_from().is_some(),
        }
    }

    pub fn cokernel_dims(&self) -> Vec<usize> {
        self.degrees.iter().map(AlphaDegree::cokernel).collect()
    }
}

impl fmt::Display for AlphaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.degrees.iter().map(|d| format!("d={}: {}/{}", d.degree, d.image_dim, d.ideal_dim)).collect();
        write!(f, "{} alpha, size {}, l={}: image/ideal {}", self.mode.name(), self.size, self.l, dims.join(", "))
    }
}

/// The images of `[i] - [i+1]` under all the maps `α_j`, as pairs of
/// monomials `(a, b)` standing for `a - b`.
pub fn alpha_generators(mode: AlphaMode, tp: &TensorPower) -> Vec<(Monomial, Monomial)> {
    let mut out = BTreeSet::new();
    match mode {
        AlphaMode::Projective => {
            let c = Permutation::long_cycle(tp.l);
            let tuples = tp.monomials_multi(1);
            for x in tuples {
                let mut rot = vec![x.clone()];
                for _ in 1..=tp.l {
                    let next = tp.permute(rot.last().expect("nonempty"), &c);
                    rot.push(next);
                }
                for i in 1..tp.l {
                    if rot[i] != rot[i + 1] {
                        out.insert((rot[i].clone(), rot[i + 1].clone()));
                    }
                }
            }
        }
        AlphaMode::Affine => {
            for a in 0..tp.n {
                for i in 0..tp.l.saturating_sub(1) {
                    let mut e = vec![0u32; tp.n];
                    e[a] = 1;
                    out.insert((tp.place(&e, i), tp.place(&e, i + 1)));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Dimension of `I_d` against the dimension of the image of `α` in degree `d`,
/// for `d = 1..=max_degree`. The image is spanned by the generators times all
/// monomials of degree `d - 1`; each such product is a difference of two
/// monomials of the same content, so its span is measured by connected
/// components per content block, and `I_d` is the sum-zero part of each block.
pub fn alpha_surjective(mode: AlphaMode, size: usize, l: usize, max_degree: u32) -> Result<AlphaReport> {
    if l == 0 {
        return Err(Error::OutOfRange("l must be positive".into()));
    }
    let n = match mode {
        AlphaMode::Projective => size + 1,
        AlphaMode::Affine => size,
    };
    if n == 0 {
        return Err(Error::OutOfRange("need at least one coordinate".into()));
    }
    let tp = TensorPower::new(n, l);
    let gens = alpha_generators(mode, &tp);
    let piece = |d: u32| match mode {
        AlphaMode::Projective => tp.monomials_multi(d),
        AlphaMode::Affine => tp.monomials_total(d),
    };
    let mut degrees = Vec::new();
    for d in 1..=max_degree {
        let blocks = ContentBlocks::new(&tp, piece(d));
        let mut edges: BTreeMap<Monomial, Vec<(usize, usize)>> = BTreeMap::new();
        let index = |m: &Monomial| -> Result<(Monomial, usize)> {
            let c = tp.content(m);
            let k = blocks.blocks[&c].iter().position(|x| x == m).ok_or_else(|| Error::Invariant("monomial".into()))?;
            Ok((c, k))
        };
        let block_index: BTreeMap<&Monomial, (Monomial, usize)> =
            blocks.blocks.values().flatten().map(|m| (m, index(m))).map(|(m, r)| r.map(|x| (m, x))).collect::<Result<_>>()?;
        for m in piece(d - 1) {
            for (a, b) in &gens {
                let (x, y) = (monomial_mul(a, &m), monomial_mul(b, &m));
                let (c, i) = block_index[&x].clone();
                let (_, j) = block_index[&y].clone();
                edges.entry(c).or_default().push((i, j));
            }
        }
        let mut ideal_dim = 0;
        let mut image_dim = 0;
        for (c, ms) in &blocks.blocks {
            ideal_dim += ms.len() - 1;
            image_dim += binomial_span_rank(ms.len(), edges.remove(c).unwrap_or_default());
        }
        degrees.push(AlphaDegree { degree: d, ideal_dim, image_dim });
    }
    Ok(AlphaReport { mode, size, l, degrees })
}

/// The same image dimension by dense elimination over `F`; used to
/// cross-check the component count.
pub fn alpha_image_dim_dense<F: Field>(mode: AlphaMode, size: usize, l: usize, d: u32) -> Result<usize> {
    let n = match mode {
        AlphaMode::Projective => size + 1,
        AlphaMode::Affine => size,
    };
    let tp = TensorPower::new(n, l);
    let piece = |d: u32| match mode {
        AlphaMode::Projective => tp.monomials_multi(d),
        AlphaMode::Affine => tp.monomials_total(d),
    };
    let all = piece(d);
    let index: BTreeMap<&Monomial, usize> = all.iter().enumerate().map(|(k, m)| (m, k)).collect();
    let mut span = EchelonBasis::<F>::new(all.len());
    for m in piece(d - 1) {
        for (a, b) in alpha_generators(mode, &tp) {
            let mut v = vec![F::fzero(); all.len()];
            v[index[&monomial_mul(&a, &m)]] = F::fone();
            let j = index[&monomial_mul(&b, &m)];
            v[j] = v[j].fsub(&F::fone());
            span.insert(v);
        }
    }
    Ok(span.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{Rational, F31};

    #[test]
    fn line_squared_sections() {
        let c = invariant_sections_generate::<Rational>(1, 2, 3).unwrap();
        assert_eq!(c.sections.len(), 3, "{c}");
        assert!(c.invariant);
        assert_eq!(c.certified_at, Some(2), "{c}");
    }

    #[test]
    fn one_chart() {
        let c = invariant_sections_generate::<Rational>(0, 3, 2).unwrap();
        assert_eq!(c.sections.len(), 1);
        assert_eq!(c.certified_at, Some(1));
    }

    #[test]
    fn line_cubed_sections() {
        let c = invariant_sections_generate::<F31>(1, 3, 3).unwrap();
        assert!(c.passed(), "{c}");
    }

    #[test]
    fn alpha_small() {
        let p = alpha_surjective(AlphaMode::Projective, 1, 2, 3).unwrap();
        assert!(p.passed(), "{p}");
        let a = alpha_surjective(AlphaMode::Affine, 1, 2, 4).unwrap();
        assert!(a.passed(), "{a}");
        let one = alpha_surjective(AlphaMode::Projective, 2, 1, 3).unwrap();
        assert!(one.degrees.iter().all(|d| d.ideal_dim == 0 && d.cokernel() == 0));
    }

    #[test]
    fn component_rank_matches_elimination() {
        for (mode, size, l, d) in [(AlphaMode::Projective, 1, 3, 2), (AlphaMode::Projective, 2, 2, 2), (AlphaMode::Affine, 2, 3, 2)] {
            let report = alpha_surjective(mode, size, l, d).unwrap();
            let dense = alpha_image_dim_dense::<Rational>(mode, size, l, d).unwrap();
            assert_eq!(report.degrees.last().unwrap().image_dim, dense);
        }
    }
}
