//! Tensor power operations `τ^l: K_0(P^n) -> R(S_l) ⊗ K_0(P^n)` by several
//! independent routes, external symbols `Ind(F_1^{⊠b_1} ⊠ ...)` and their
//! push-forward to the point.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::Rng;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::eqk::{EqKClass, KClassFunction};
use super::pn::KClassPn;
use crate::characters::ClassFunction;
use crate::error::{Error, Result};
use crate::exact_arith::{binomial, Rational};
use crate::groups::{compositions, cyclic, symmetric, young, Embedding};

/// Genuine sum of line bundles `Σ mult · O(twist)` on `P^n`, kept sorted by
/// twist with no zero multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct BundleSum {
    terms: Vec<(i64, u64)>,
}

impl BundleSum {
    pub fn new(terms: &[(i64, u64)]) -> Self {
        let mut merged: Vec<(i64, u64)> = Vec::new();
        let mut sorted = terms.to_vec();
        sorted.sort_unstable();
        for (m, k) in sorted {
            if k == 0 {
                continue;
            }
            match merged.last_mut() {
                Some((lm, lk)) if *lm == m => *lk += k,
                _ => merged.push((m, k)),
            }
        }
        Self { terms: merged }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn line(m: i64) -> Self {
        Self::new(&[(m, 1)])
    }

    pub fn trivial(rank: u64) -> Self {
        Self::new(&[(0, rank)])
    }

    pub fn terms(&self) -> &[(i64, u64)] {
        &self.terms
    }

    pub fn rank(&self) -> u64 {
        self.terms.iter().map(|t| t.1).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Line summands listed with repetition.
    pub fn lines(&self) -> Vec<i64> {
        self.terms.iter().flat_map(|&(m, k)| std::iter::repeat_n(m, k as usize)).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut t = self.terms.clone();
        t.extend_from_slice(&other.terms);
        Self::new(&t)
    }

    /// Tensor product of bundle sums.
    pub fn tensor(&self, other: &Self) -> Self {
        let mut t = Vec::new();
        for &(a, x) in &self.terms {
            for &(b, y) in &other.terms {
                t.push((a + b, x * y));
            }
        }
        Self::new(&t)
    }

    pub fn to_class(&self, n: usize) -> KClassPn {
        self.terms.iter().fold(KClassPn::zero(n), |acc, &(m, k)| {
            acc.add(&KClassPn::h_pow(n, m).scale(&Rational::from_integer(k.into())))
        })
    }

    /// `χ(P^n, F)`; only defined here for acyclic sums (all twists `≥ 0`).
    pub fn pushforward(&self, n: usize) -> Result<u64> {
        let mut d = BigInt::zero();
        for &(m, k) in &self.terms {
            if m < 0 {
                return Err(Error::InvalidInput(format!("O({m}) on P^{n} is not acyclic")));
            }
            d += binomial(n as i64 + m, n as i64) * k;
        }
        d.to_u64().ok_or_else(|| Error::OutOfRange("push-forward dimension too large".into()))
    }
}

impl fmt::Display for BundleSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|&(m, k)| if k == 1 { format!("O({m})") } else { format!("{k}O({m})") })
            .collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// A class `[E] - [F]` with `E`, `F` genuine; the input format of the
/// routes that work with bundles rather than classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposedClass {
    pub n: usize,
    pub positive: BundleSum,
    pub negative: BundleSum,
}

impl DecomposedClass {
    pub fn new(n: usize, positive: BundleSum, negative: BundleSum) -> Self {
        Self { n, positive, negative }
    }

    pub fn line(n: usize, m: i64) -> Self {
        Self::new(n, BundleSum::line(m), BundleSum::zero())
    }

    pub fn constant(n: usize, k: i64) -> Self {
        if k >= 0 {
            Self::new(n, BundleSum::trivial(k as u64), BundleSum::zero())
        } else {
            Self::new(n, BundleSum::zero(), BundleSum::trivial(k.unsigned_abs()))
        }
    }

    /// Splits an integral class by the signs of its coordinates in `h^0..h^n`.
    pub fn from_class(x: &KClassPn) -> Result<Self> {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for (m, c) in x.to_h_basis().iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::InvalidInput(format!("class {x} is not integral")));
            }
            let c = c.to_integer().to_i64().ok_or_else(|| Error::OutOfRange("coefficient".into()))?;
            if c > 0 {
                pos.push((m as i64, c as u64));
            } else if c < 0 {
                neg.push((m as i64, c.unsigned_abs()));
            }
        }
        Ok(Self::new(x.n(), BundleSum::new(&pos), BundleSum::new(&neg)))
    }

    pub fn to_class(&self) -> KClassPn {
        self.positive.to_class(self.n).sub(&self.negative.to_class(self.n))
    }

    pub fn neg(&self) -> Self {
        Self::new(self.n, self.negative.clone(), self.positive.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(self.n, self.positive.add(&other.positive), self.negative.add(&other.negative))
    }

    /// `(E - F)(E' - F') = (EE' + FF') - (EF' + FE')`.
    pub fn mul(&self, other: &Self) -> Self {
        let pos = self.positive.tensor(&other.positive).add(&self.negative.tensor(&other.negative));
        let neg = self.positive.tensor(&other.negative).add(&self.negative.tensor(&other.positive));
        Self::new(self.n, pos, neg)
    }
}

impl fmt::Display for DecomposedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] - [{}] on P^{}", self.positive, self.negative, self.n)
    }
}

/// Draws a class with twists in `-2..=2` and multiplicities up to `bound` on
/// each side.
pub fn random_decomposed<R: Rng>(rng: &mut R, n: usize, bound: u64) -> DecomposedClass {
    let side = |rng: &mut R| {
        let k = rng.gen_range(0..=2);
        let terms: Vec<(i64, u64)> =
            (0..k).map(|_| (rng.gen_range(-2..=2), rng.gen_range(1..=bound.max(1)))).collect();
        BundleSum::new(&terms)
    };
    let p = side(rng);
    let q = side(rng);
    DecomposedClass::new(n, p, q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TauRoute {
    /// Alternating sum over compositions `a + b_1 + ... + b_u = l`.
    Compositions,
    /// Binomial form with a sign-twisted negative block.
    Binomial,
    /// Cross products of the tensor power series of signed lines.
    Cross,
    /// Value `∏_{cycles c} ψ^{|c|}(x)` at each permutation.
    CyclePsi,
}

impl TauRoute {
    pub const ALL: [TauRoute; 4] = [TauRoute::Compositions, TauRoute::Binomial, TauRoute::Cross, TauRoute::CyclePsi];

    pub fn name(self) -> &'static str {
        match self {
            TauRoute::Compositions => "compositions",
            TauRoute::Binomial => "binomial",
            TauRoute::Cross => "cross",
            TauRoute::CyclePsi => "cycle-psi",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block {
    pub factor: BundleSum,
    pub twisted: bool,
    pub size: usize,
}

/// `mult · [Ind_{S_{b_1} × ...}^{S_l}(F_1^{⊠b_1} ⊠ ...)]` with optional sign twists per block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExternalSymbol {
    pub l: usize,
    pub blocks: Vec<Block>,
    pub mult: i64,
}

fn young_embedding(parts: &[usize]) -> Result<Arc<Embedding>> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<Embedding>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(e) = cache.lock().expect("embedding cache").get(parts) {
        return Ok(e.clone());
    }
    let l = parts.iter().sum();
    let e = Arc::new(Embedding::inclusion(&young(parts), &symmetric(l))?);
    Ok(cache.lock().expect("embedding cache").entry(parts.to_vec()).or_insert(e).clone())
}

/// Inclusion `C_l ⊂ S_l` generated by the long cycle.
pub fn cyclic_embedding(l: usize) -> Result<Embedding> {
    Embedding::inclusion(&cyclic(l), &symmetric(l))
}

impl ExternalSymbol {
    /// Drops empty blocks and sorts the rest, so permuted equal blocks coincide.
    pub fn new(blocks: Vec<Block>, mult: i64) -> Self {
        let l = blocks.iter().map(|b| b.size).sum();
        let mut blocks: Vec<Block> = blocks.into_iter().filter(|b| b.size > 0).collect();
        blocks.sort();
        Self { l, blocks, mult }
    }

    pub fn unit() -> Self {
        Self { l: 0, blocks: vec![], mult: 1 }
    }

    pub fn is_unit(&self) -> bool {
        self.l == 0 && self.mult == 1
    }

    /// Base-space value of the block factors at an element of the Young subgroup.
    fn block_value(&self, p: &crate::groups::Permutation, classes: &[KClassPn], n: usize) -> KClassPn {
        let mut acc = KClassPn::one(n);
        let mut start = 0;
        for (b, f) in self.blocks.iter().zip(classes) {
            let q = p.restrict_block(start, b.size);
            for len in q.cycle_type() {
                acc = acc.mul(&f.psi(len as i64));
            }
            if b.twisted && q.sign() < 0 {
                acc = acc.neg();
            }
            start += b.size;
        }
        acc
    }

    /// The internal class in `R(S_l) ⊗ K_0(P^n)`: induced from the Young
    /// subgroup, where the value at `p` multiplies `ψ^{|c|}(F_i)` over the
    /// cycles `c` of `p` in block `i`.
    pub fn evaluate(&self, n: usize) -> Result<EqKClass> {
        let sizes: Vec<usize> = self.blocks.iter().map(|b| b.size).collect();
        let classes: Vec<KClassPn> = self.blocks.iter().map(|b| b.factor.to_class(n)).collect();
        let emb = young_embedding(&sizes)?;
        let sub = emb.sub().clone();
        let on_young =
            KClassFunction::from_pn_fn(&sub, n, |g| self.block_value(sub.element(g), &classes, n));
        let induced = if sizes.len() == 1 { on_young } else { on_young.induce(&emb)? };
        Ok(induced.to_eqk()?.scale(&Rational::from_integer(self.mult.into())))
    }

    /// Push-forward along `(P^n)^l -> pt` for acyclic factors: each factor
    /// becomes a vector space of dimension `χ(F_i)`.
    pub fn pushforward(&self, n: usize) -> Result<ExternalSymbol> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                Ok(Block { factor: BundleSum::trivial(b.factor.pushforward(n)?), twisted: b.twisted, size: b.size })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(blocks, self.mult))
    }
}

impl fmt::Display for ExternalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| format!("({}){}^{}", b.factor, if b.twisted { "_sgn" } else { "" }, b.size))
            .collect();
        write!(f, "{}*Ind[{}]", self.mult, parts.join(" x "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExternalRoute {
    Compositions,
    Binomial,
}

/// `τ^l([E] - [F])` as a combination of external symbols.
pub fn tau_external(x: &DecomposedClass, l: usize, route: ExternalRoute) -> Vec<ExternalSymbol> {
    if l == 0 {
        return vec![ExternalSymbol::unit()];
    }
    let e = |size| Block { factor: x.positive.clone(), twisted: false, size };
    let f = |size, twisted| Block { factor: x.negative.clone(), twisted, size };
    let mut out = Vec::new();
    match route {
        ExternalRoute::Compositions => {
            for a in 0..=l {
                for comp in compositions(l - a) {
                    let sign = if comp.len() % 2 == 0 { 1 } else { -1 };
                    let mut blocks = vec![e(a)];
                    blocks.extend(comp.iter().map(|&b| f(b, false)));
                    out.push(ExternalSymbol::new(blocks, sign));
                }
            }
        }
        ExternalRoute::Binomial => {
            for i in 0..=l {
                let sign = if (l - i).is_multiple_of(2) { 1 } else { -1 };
                out.push(ExternalSymbol::new(vec![e(i), f(l - i, true)], sign));
            }
        }
    }
    out
}

/// Sum of the internal evaluations of a symbol combination.
pub fn evaluate_symbols(symbols: &[ExternalSymbol], l: usize, n: usize) -> Result<EqKClass> {
    let mut acc = EqKClass::zero(&symmetric(l), n)?;
    for s in symbols {
        if s.l != l {
            return Err(Error::DimensionMismatch(format!("symbol for S_{} in a sum for S_{l}", s.l)));
        }
        acc = acc.add(&s.evaluate(n)?)?;
    }
    Ok(acc)
}

/// `f^l_*` of a symbol combination for `f: P^n -> pt`, on acyclic factors.
pub fn kunneth_pushforward(symbols: &[ExternalSymbol], l: usize, n: usize) -> Result<EqKClass> {
    let pushed = symbols.iter().map(|s| s.pushforward(n)).collect::<Result<Vec<_>>>()?;
    evaluate_symbols(&pushed, l, 0)
}

/// Cross product `Ind_{S_i × S_j}^{S_{i+j}}(a ⊠ b)`; base classes multiply.
pub fn cross_product(a: &EqKClass, b: &EqKClass) -> Result<EqKClass> {
    let i = a.group().degree();
    let j = b.group().degree();
    if a.n() != b.n() {
        return Err(Error::DimensionMismatch("cross product of classes on different spaces".into()));
    }
    if i == 0 {
        return b.mul_base(&scalar_of(a)?);
    }
    if j == 0 {
        return a.mul_base(&scalar_of(b)?);
    }
    let emb = young_embedding(&[i, j])?;
    EqKClass::outer(a, b, emb.sub())?.induce(&emb)
}

fn scalar_of(x: &EqKClass) -> Result<KClassPn> {
    KClassPn::new(x.n(), x.coeffs()[0].clone())
}

/// `[τ^0, ..., τ^l]` of a single signed line `±O(m)`:
/// `τ^j(L) = L^j` and `τ^j(-L) = (-1)^j sgn ⊗ L^j`.
fn signed_line_series(n: usize, m: i64, negative: bool, l: usize) -> Result<Vec<EqKClass>> {
    (0..=l)
        .map(|j| {
            let g = symmetric(j);
            let base = KClassPn::h_pow(n, m * j as i64);
            if negative {
                let chi = ClassFunction::sign(&g);
                let chi = if j % 2 == 1 { chi.neg() } else { chi };
                EqKClass::rep_times_base(&chi, &base)
            } else {
                EqKClass::from_base(&g, &base)
            }
        })
        .collect()
}

fn series_mul(a: &[EqKClass], b: &[EqKClass]) -> Result<Vec<EqKClass>> {
    let l = a.len() - 1;
    (0..=l)
        .map(|k| {
            let mut acc = EqKClass::zero(&symmetric(k), a[0].n())?;
            for i in 0..=k {
                acc = acc.add(&cross_product(&a[i], &b[k - i])?)?;
            }
            Ok(acc)
        })
        .collect()
}

/// `[τ^0(x), ..., τ^l(x)]` as cross products of signed line series.
pub fn tau_series_by_cross(x: &DecomposedClass, l: usize) -> Result<Vec<EqKClass>> {
    let mut acc: Vec<EqKClass> = (0..=l)
        .map(|j| if j == 0 { EqKClass::one(&symmetric(0), x.n) } else { EqKClass::zero(&symmetric(j), x.n) })
        .collect::<Result<_>>()?;
    for (side, negative) in [(&x.positive, false), (&x.negative, true)] {
        for m in side.lines() {
            acc = series_mul(&acc, &signed_line_series(x.n, m, negative, l)?)?;
        }
    }
    Ok(acc)
}

/// `τ^l(x)` evaluated as `σ ↦ ∏_{cycles c of σ} ψ^{|c|}(x)`.
pub fn tau_cycle_psi(x: &KClassPn, l: usize) -> Result<EqKClass> {
    let g = symmetric(l);
    KClassFunction::from_pn_fn(&g, x.n(), |s| {
        g.element(s).cycle_type().iter().fold(KClassPn::one(x.n()), |acc, &len| acc.mul(&x.psi(len as i64)))
    })
    .to_eqk()
}

pub fn tau_internal(x: &DecomposedClass, l: usize, route: TauRoute) -> Result<EqKClass> {
    match route {
        TauRoute::Compositions => evaluate_symbols(&tau_external(x, l, ExternalRoute::Compositions), l, x.n),
        TauRoute::Binomial => evaluate_symbols(&tau_external(x, l, ExternalRoute::Binomial), l, x.n),
        TauRoute::Cross => Ok(tau_series_by_cross(x, l)?.pop().expect("nonempty series")),
        TauRoute::CyclePsi => tau_cycle_psi(&x.to_class(), l),
    }
}

/// Runs every route and fails with a route disagreement unless all agree.
pub fn tau_checked(x: &DecomposedClass, l: usize) -> Result<EqKClass> {
    let reference = tau_internal(x, l, TauRoute::CyclePsi)?;
    for route in [TauRoute::Compositions, TauRoute::Binomial, TauRoute::Cross] {
        let other = tau_internal(x, l, route)?;
        if other != reference {
            return Err(Error::RouteDisagreement(format!(
                "tau^{l} of {x}: {} gives {other}, cycle-psi gives {reference}",
                route.name()
            )));
        }
    }
    Ok(reference)
}

/// Brute-force `τ^l` of a genuine bundle: `E^{⊗l}` splits into tuples of line
/// summands, and `σ` has trace `Σ_{tuples fixed by σ} ∏ lines`.
pub fn tensor_power_trace_oracle(e: &BundleSum, n: usize, l: usize) -> Result<EqKClass> {
    let lines = e.lines();
    let r = lines.len();
    let g = symmetric(l);
    let total = r.checked_pow(l as u32).filter(|t| *t <= 1 << 20).ok_or_else(|| {
        Error::OutOfRange(format!("{r}^{l} tuples exceed the brute-force budget"))
    })?;
    KClassFunction::from_pn_fn(&g, n, |s| {
        let perm = g.element(s);
        let mut twists: HashMap<i64, i64> = HashMap::new();
        let mut idx = vec![0usize; l];
        for t in 0..total {
            let mut q = t;
            for slot in idx.iter_mut() {
                *slot = q % r;
                q /= r;
            }
            // σ permutes tensor slots; a tuple is fixed when it is constant on cycles.
            if (0..l).all(|k| idx[perm.apply(k)] == idx[k]) {
                *twists.entry(idx.iter().map(|&i| lines[i]).sum()).or_default() += 1;
            }
        }
        twists.iter().fold(KClassPn::zero(n), |acc, (&m, &c)| {
            acc.add(&KClassPn::h_pow(n, m).scale(&Rational::from_integer(c.into())))
        })
    })
    .to_eqk()
}

/// Character of `S_l` on `W^{⊗l}` with `dim W = d`, by counting basis tensors
/// fixed by each permutation.
pub fn vector_space_trace_oracle(d: usize, l: usize) -> Result<ClassFunction> {
    let g = symmetric(l);
    let total = d.pow(l as u32);
    let values: Vec<i64> = g
        .classes()
        .classes
        .iter()
        .map(|c| {
            let perm = g.element(c.representative);
            (0..total)
                .filter(|&t| {
                    let digits: Vec<usize> = (0..l).map(|k| t / d.pow(k as u32) % d).collect();
                    (0..l).all(|k| digits[perm.apply(k)] == digits[k])
                })
                .count() as i64
        })
        .collect();
    ClassFunction::from_ints(g, &values)
}

/// Subgroups along which τ-classes are restricted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupSpec {
    /// `S_i × S_j ⊂ S_{i+j}`.
    Young(usize, usize),
    /// `C_l ⊂ S_l`.
    Cyclic(usize),
}

impl SubgroupSpec {
    pub fn embedding(self) -> Result<Embedding> {
        match self {
            SubgroupSpec::Young(i, j) => {
                if i == 0 || j == 0 {
                    return Err(Error::InvalidInput("Young factors must be nonempty".into()));
                }
                Ok((*young_embedding(&[i, j])?).clone())
            }
            SubgroupSpec::Cyclic(l) => cyclic_embedding(l),
        }
    }
}

pub fn restrict_eqk(x: &EqKClass, spec: SubgroupSpec) -> Result<EqKClass> {
    let emb = spec.embedding()?;
    if !Arc::ptr_eq(emb.sup(), x.group()) {
        return Err(Error::GroupMismatch(format!("{spec:?} is not a subgroup of {}", x.group().name())));
    }
    x.restrict(&emb)
}

/// `τ^i(x) ⊠ τ^j(x)` as a class on `S_i × S_j`.
pub fn outer_tau(x: &DecomposedClass, i: usize, j: usize) -> Result<EqKClass> {
    let a = tau_internal(x, i, TauRoute::CyclePsi)?;
    let b = tau_internal(x, j, TauRoute::CyclePsi)?;
    let emb = young_embedding(&[i, j])?;
    EqKClass::outer(&a, &b, emb.sub())
}

/// `(-1)^l sgn ⊗ τ^l(F)`, the expected value of `τ^l(-[F])`.
pub fn signed_twisted_power(f: &BundleSum, n: usize, l: usize) -> Result<EqKClass> {
    let g = symmetric(l);
    let pow = tau_internal(&DecomposedClass::new(n, f.clone(), BundleSum::zero()), l, TauRoute::CyclePsi)?;
    let sgn = EqKClass::from_character(&ClassFunction::sign(&g), n)?;
    let twisted = pow.mul(&sgn)?;
    Ok(if l % 2 == 1 { twisted.neg() } else { twisted })
}

/// `τ^l` on the point applied to an integer, `σ ↦ d^{#cycles}`.
pub fn tau_of_integer(d: i64, l: usize) -> Result<EqKClass> {
    tau_cycle_psi(&KClassPn::from_int(0, d), l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn values_on_classes(x: &EqKClass) -> Vec<KClassPn> {
        let v = x.values().unwrap();
        (0..x.group().num_classes()).map(|c| v.pn_value(c).unwrap()).collect()
    }

    #[test]
    fn square_of_hyperplane_class() {
        let x = DecomposedClass::line(1, 1);
        let t = tau_checked(&x, 2).unwrap();
        let h2 = KClassPn::h_pow(1, 2);
        assert_eq!(values_on_classes(&t), vec![h2.clone(), h2]);
    }

    #[test]
    fn square_of_minus_one_is_sign() {
        let t = tau_checked(&DecomposedClass::constant(0, -1), 2).unwrap();
        let sgn = EqKClass::from_character(&ClassFunction::sign(&symmetric(2)), 0).unwrap();
        assert_eq!(t, sgn);
    }

    #[test]
    fn square_of_u_on_p1() {
        // u = 1 - h^{-1} on P^1.
        let x = DecomposedClass::new(1, BundleSum::trivial(1), BundleSum::line(-1));
        let t = tau_checked(&x, 2).unwrap();
        assert_eq!(values_on_classes(&t), vec![KClassPn::zero(1), KClassPn::from_ints(1, &[0, 2]).unwrap()]);
        let g = symmetric(2);
        let expect = EqKClass::rep_times_base(&ClassFunction::sign(&g), &KClassPn::h_pow(1, -2))
            .unwrap()
            .sub(&EqKClass::rep_times_base(&ClassFunction::regular(&g), &KClassPn::h_pow(1, -1)).unwrap())
            .unwrap()
            .add(&EqKClass::one(&g, 1).unwrap())
            .unwrap();
        assert_eq!(t, expect);
    }

    #[test]
    fn binomial_symbols_for_l_two() {
        let x = DecomposedClass::new(0, BundleSum::trivial(2), BundleSum::trivial(1));
        let s = tau_external(&x, 2, ExternalRoute::Binomial);
        assert_eq!(s.len(), 3);
        assert_eq!(s[0].blocks, vec![Block { factor: BundleSum::trivial(1), twisted: true, size: 2 }]);
        assert_eq!(s[1].mult, -1);
        assert_eq!(tau_external(&x, 0, ExternalRoute::Compositions), vec![ExternalSymbol::unit()]);
        assert!(tau_external(&x, 0, ExternalRoute::Binomial)[0].is_unit());
    }

    #[test]
    fn kunneth_examples() {
        let two = kunneth_pushforward(&tau_external(&DecomposedClass::line(1, 1), 2, ExternalRoute::Binomial), 2, 1)
            .unwrap();
        assert_eq!(two.to_character().unwrap().values(), ClassFunction::from_ints(symmetric(2), &[4, 2]).unwrap().values());
        let three =
            kunneth_pushforward(&tau_external(&DecomposedClass::line(1, 1), 3, ExternalRoute::Compositions), 3, 1).unwrap();
        assert_eq!(three.to_character().unwrap(), ClassFunction::from_ints(symmetric(3), &[8, 4, 2]).unwrap());
        let bad = tau_external(&DecomposedClass::line(1, -1), 2, ExternalRoute::Binomial);
        assert!(kunneth_pushforward(&bad, 2, 1).is_err());
    }

    #[test]
    fn cross_product_of_units_is_regular() {
        let one = EqKClass::one(&symmetric(1), 0).unwrap();
        let c = cross_product(&one, &one).unwrap();
        assert_eq!(c.to_character().unwrap(), ClassFunction::regular(&symmetric(2)));
        let unit = EqKClass::one(&symmetric(0), 0).unwrap();
        assert_eq!(cross_product(&c, &unit).unwrap(), c);
    }

    #[test]
    fn routes_agree_on_small_corpus() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..12 {
            let n = rng.gen_range(0..=2);
            let x = random_decomposed(&mut rng, n, 2);
            for l in 0..=3 {
                tau_checked(&x, l).unwrap();
            }
        }
    }

    #[test]
    fn trace_oracle_matches_on_genuine_bundle() {
        let e = BundleSum::new(&[(0, 1), (1, 2)]);
        for l in 1..=3 {
            let x = DecomposedClass::new(2, e.clone(), BundleSum::zero());
            assert_eq!(tensor_power_trace_oracle(&e, 2, l).unwrap(), tau_checked(&x, l).unwrap());
        }
    }

    #[test]
    fn restriction_of_regular() {
        let reg = EqKClass::from_character(&ClassFunction::regular(&symmetric(3)), 0).unwrap();
        let r = restrict_eqk(&reg, SubgroupSpec::Young(1, 2)).unwrap();
        let v = r.values().unwrap();
        assert_eq!(v.pn_value(0).unwrap(), KClassPn::from_int(0, 6));
        assert!(v.values().iter().skip(1).all(|x| x[0].is_zero()));
    }
}
