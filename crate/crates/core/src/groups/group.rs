use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use super::perm::Permutation;
use crate::characters::CharacterTable;
use crate::error::{Error, Result};

pub const DEFAULT_ENUMERATION_CAP: usize = 50_000;

/// Structural information that selects a character-table construction.
#[derive(Clone)]
pub enum GroupKind {
    /// Full symmetric group on `degree` points.
    Symmetric,
    /// Cyclic group; `powers[k]` is the element index of `generator^k`.
    Cyclic { generator: usize, powers: Vec<usize> },
    /// Direct product acting on disjoint point sets; `pairs[g]` gives the
    /// factor element indices of element `g`.
    Product { left: Arc<FiniteGroup>, right: Arc<FiniteGroup>, pairs: Vec<(usize, usize)> },
    /// No structure recognized; no character table is available.
    Generic,
}

impl fmt::Debug for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::Symmetric => write!(f, "Symmetric"),
            GroupKind::Cyclic { .. } => write!(f, "Cyclic"),
            GroupKind::Product { left, right, .. } => write!(f, "Product({}, {})", left.name(), right.name()),
            GroupKind::Generic => write!(f, "Generic"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub elements: Vec<usize>,
    /// Cycle type of the representative as a permutation.
    pub cycle_type: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.elements.len()
    }
}

#[derive(Clone, Debug)]
pub struct ConjugacyClasses {
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
}

const CAYLEY_TABLE_MAX: usize = 1024;

/// Finite group given by permutation generators, fully enumerated.
pub struct FiniteGroup {
    name: String,
    kind: GroupKind,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    /// Cayley table, built on first use for groups of order at most `CAYLEY_TABLE_MAX`.
    cayley: OnceLock<Vec<u32>>,
    classes: OnceLock<ConjugacyClasses>,
    table: OnceLock<Result<Arc<CharacterTable>>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {}, degree {})", self.name, self.order(), self.degree)
    }
}

fn enumerate(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    for g in gens {
        if g.degree() != degree {
            return Err(Error::InvalidPermutation(format!(
                "generator {g} has degree {} instead of {degree}",
                g.degree()
            )));
        }
    }
    let id = Permutation::identity(degree);
    let mut seen: HashMap<Permutation, ()> = HashMap::new();
    let mut out = vec![id.clone()];
    seen.insert(id.clone(), ());
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.compose(g);
            if !seen.contains_key(&y) {
                if out.len() >= cap {
                    return Err(Error::EnumerationCap { cap, partial: out.len() });
                }
                seen.insert(y.clone(), ());
                out.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    Ok(out)
}

impl FiniteGroup {
    fn build(name: String, degree: usize, generators: Vec<Permutation>, cap: usize) -> Result<Self> {
        let elements = enumerate(degree, &generators, cap)?;
        let index: HashMap<Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let inverses = elements.iter().map(|p| index[&p.inverse()]).collect();
        Ok(Self {
            name,
            kind: GroupKind::Generic,
            degree,
            generators,
            elements,
            index,
            inverses,
            cayley: OnceLock::new(),
            classes: OnceLock::new(),
            table: OnceLock::new(),
        })
    }

    /// Group generated by `generators` on `degree` points, with the default cap.
    pub fn from_generators(name: &str, degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::from_generators_capped(name, degree, generators, DEFAULT_ENUMERATION_CAP)
    }

    pub fn from_generators_capped(
        name: &str,
        degree: usize,
        generators: Vec<Permutation>,
        cap: usize,
    ) -> Result<Self> {
        let mut g = Self::build(name.to_string(), degree, generators, cap)?;
        g.kind = g.detect_kind();
        Ok(g)
    }

    fn detect_kind(&self) -> GroupKind {
        let n = self.order();
        if (1..=self.degree.max(1)).product::<usize>() == n && self.degree >= 1 {
            return GroupKind::Symmetric;
        }
        if let Some(g) = (0..n).find(|&g| self.element_order(g) == n) {
            return self.cyclic_kind(g);
        }
        GroupKind::Generic
    }

    fn cyclic_kind(&self, generator: usize) -> GroupKind {
        let mut powers = vec![self.identity()];
        let mut x = generator;
        while x != self.identity() {
            powers.push(x);
            x = self.mul(x, generator);
        }
        GroupKind::Cyclic { generator, powers }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of the identity; enumeration always starts there.
    pub fn identity(&self) -> usize {
        0
    }

    /// Product `a · b` (apply `b` first).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.order();
        if n <= CAYLEY_TABLE_MAX {
            let table = self.cayley.get_or_init(|| {
                (0..n * n).map(|k| self.mul_uncached(k / n, k % n) as u32).collect()
            });
            return table[a * n + b] as usize;
        }
        self.mul_uncached(a, b)
    }

    fn mul_uncached(&self, a: usize, b: usize) -> usize {
        self.index[&self.elements[a].compose(&self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut acc = self.identity();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// `x a x^{-1}`.
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.elements[a].order()
    }

    pub fn exponent(&self) -> usize {
        (0..self.order()).map(|a| self.element_order(a)).fold(1, num_integer::lcm)
    }

    pub fn classes(&self) -> &ConjugacyClasses {
        self.classes.get_or_init(|| self.compute_classes())
    }

    fn compute_classes(&self) -> ConjugacyClasses {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for g in 0..n {
            if class_of[g] != usize::MAX {
                continue;
            }
            let members: BTreeSet<usize> = (0..n).map(|x| self.conjugate(x, g)).collect();
            let id = classes.len();
            for &m in &members {
                class_of[m] = id;
            }
            classes.push(ConjugacyClass {
                representative: g,
                elements: members.into_iter().collect(),
                cycle_type: self.elements[g].cycle_type(),
            });
        }
        if matches!(self.kind, GroupKind::Symmetric) {
            // Order classes by cycle type, (1^n) first and (n) last.
            let mut order: Vec<usize> = (0..classes.len()).collect();
            order.sort_by(|&a, &b| classes[a].cycle_type.cmp(&classes[b].cycle_type));
            let mut remap = vec![0; classes.len()];
            for (new, &old) in order.iter().enumerate() {
                remap[old] = new;
            }
            let sorted = order.iter().map(|&i| classes[i].clone()).collect();
            for c in class_of.iter_mut() {
                *c = remap[*c];
            }
            return ConjugacyClasses { classes: sorted, class_of };
        }
        ConjugacyClasses { classes, class_of }
    }

    pub fn num_classes(&self) -> usize {
        self.classes().classes.len()
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.classes().class_of[g]
    }

    /// Class of `rep^k` for each class.
    pub fn power_map(&self, k: i64) -> Vec<usize> {
        self.classes()
            .classes
            .iter()
            .map(|c| self.class_of(self.pow(c.representative, k)))
            .collect()
    }

    pub fn centralizer_order(&self, class: usize) -> usize {
        self.order() / self.classes().classes[class].size()
    }

    /// Class index of the element with the given cycle type, for symmetric groups.
    pub fn class_with_cycle_type(&self, partition: &[usize]) -> Option<usize> {
        self.classes().classes.iter().position(|c| c.cycle_type == partition)
    }

    pub(crate) fn table_cell(&self) -> &OnceLock<Result<Arc<CharacterTable>>> {
        &self.table
    }

    /// Subgroup generated by the given elements of `self`.
    pub fn subgroup(self: &Arc<Self>, name: &str, gens: &[usize]) -> Result<Arc<FiniteGroup>> {
        if gens.len() == self.order() || gens.iter().collect::<BTreeSet<_>>().len() == self.order() {
            return Ok(self.clone());
        }
        let perms: Vec<Permutation> = gens.iter().map(|&g| self.elements[g].clone()).collect();
        let sub = FiniteGroup::from_generators(name, self.degree, perms)?;
        if sub.order() == self.order() {
            return Ok(self.clone());
        }
        Ok(Arc::new(sub))
    }

    /// Element indices (in `self`) of every element of a subgroup with the same degree.
    pub fn element_set(&self, sub: &FiniteGroup) -> Result<BTreeSet<usize>> {
        sub.elements
            .iter()
            .map(|p| {
                self.index_of(p)
                    .ok_or_else(|| Error::InvalidInput(format!("{p} is not in {}", self.name)))
            })
            .collect()
    }
}

/// Direct product acting on the disjoint union of the two point sets.
pub fn product(left: &Arc<FiniteGroup>, right: &Arc<FiniteGroup>) -> Result<Arc<FiniteGroup>> {
    let dl = left.degree();
    let dr = right.degree();
    let mut gens: Vec<Permutation> = left
        .generators()
        .iter()
        .map(|g| g.direct_sum(&Permutation::identity(dr)))
        .collect();
    gens.extend(right.generators().iter().map(|g| Permutation::identity(dl).direct_sum(g)));
    let name = format!("{} x {}", left.name(), right.name());
    let mut g = FiniteGroup::build(name, dl + dr, gens, DEFAULT_ENUMERATION_CAP)?;
    let pairs = g
        .elements
        .iter()
        .map(|p| {
            let a = left.index_of(&p.restrict_block(0, dl)).expect("left factor element");
            let b = right.index_of(&p.restrict_block(dl, dr)).expect("right factor element");
            (a, b)
        })
        .collect();
    g.kind = GroupKind::Product { left: left.clone(), right: right.clone(), pairs };
    Ok(Arc::new(g))
}

fn symmetric_uncached(n: usize) -> Arc<FiniteGroup> {
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(Permutation::from_cycles(n, &[&[0, 1]]).expect("transposition"));
        gens.push(Permutation::long_cycle(n));
    }
    let mut g = FiniteGroup::build(format!("S{n}"), n, gens, DEFAULT_ENUMERATION_CAP)
        .expect("symmetric group within cap");
    g.kind = GroupKind::Symmetric;
    Arc::new(g)
}

/// The symmetric group on `n` points (`n = 0` gives the trivial group of degree 0).
pub fn symmetric(n: usize) -> Arc<FiniteGroup> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<FiniteGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().expect("group cache").get(&n) {
        return g.clone();
    }
    let g = symmetric_uncached(n);
    cache.lock().expect("group cache").entry(n).or_insert(g).clone()
}

/// The cyclic group of order `n` generated by the cycle `(1 2 ... n)`.
pub fn cyclic(n: usize) -> Arc<FiniteGroup> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<FiniteGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().expect("group cache").get(&n) {
        return g.clone();
    }
    let gens = if n >= 2 { vec![Permutation::long_cycle(n)] } else { vec![] };
    let mut g = FiniteGroup::build(format!("C{n}"), n, gens, DEFAULT_ENUMERATION_CAP)
        .expect("cyclic group within cap");
    let generator = if n >= 2 { g.index_of(&Permutation::long_cycle(n)).expect("generator") } else { 0 };
    g.kind = g.cyclic_kind(generator);
    let g = Arc::new(g);
    cache.lock().expect("group cache").entry(n).or_insert(g).clone()
}

/// Young subgroup `S_{p1} x S_{p2} x ...` acting on consecutive blocks.
pub fn young(parts: &[usize]) -> Arc<FiniteGroup> {
    static CACHE: OnceLock<Mutex<HashMap<Vec<usize>, Arc<FiniteGroup>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().expect("group cache").get(parts) {
        return g.clone();
    }
    let g = match parts {
        [] => symmetric(0),
        [p] => symmetric(*p),
        [p, rest @ ..] => product(&symmetric(*p), &young(rest)).expect("young subgroup within cap"),
    };
    cache.lock().expect("group cache").entry(parts.to_vec()).or_insert(g).clone()
}

/// Injective homomorphism `sub -> sup`, given on elements.
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: Arc<FiniteGroup>,
    sup: Arc<FiniteGroup>,
    map: Vec<usize>,
    preimage: Vec<Option<usize>>,
}

impl Embedding {
    pub fn new(sub: Arc<FiniteGroup>, sup: Arc<FiniteGroup>, map: Vec<usize>) -> Result<Self> {
        if map.len() != sub.order() {
            return Err(Error::NotHomomorphism("map length differs from group order".into()));
        }
        let mut preimage = vec![None; sup.order()];
        for (h, &g) in map.iter().enumerate() {
            if g >= sup.order() {
                return Err(Error::NotHomomorphism(format!("image index {g} out of range")));
            }
            if preimage[g].is_some() {
                return Err(Error::NotHomomorphism("map is not injective".into()));
            }
            preimage[g] = Some(h);
        }
        // Multiplicativity on generators times all elements implies a homomorphism.
        for s in &sub.generators {
            let si = sub.index_of(s).expect("generator is an element");
            for h in 0..sub.order() {
                if map[sub.mul(si, h)] != sup.mul(map[si], map[h]) {
                    return Err(Error::NotHomomorphism(format!(
                        "fails on generator {s} and element {}",
                        sub.element(h)
                    )));
                }
            }
        }
        Ok(Self { sub, sup, map, preimage })
    }

    /// Inclusion of a permutation group of the same degree.
    pub fn inclusion(sub: &Arc<FiniteGroup>, sup: &Arc<FiniteGroup>) -> Result<Self> {
        if sub.degree() != sup.degree() {
            return Err(Error::NotHomomorphism(format!(
                "degrees {} and {} differ",
                sub.degree(),
                sup.degree()
            )));
        }
        let map = sub
            .elements()
            .iter()
            .map(|p| {
                sup.index_of(p)
                    .ok_or_else(|| Error::NotHomomorphism(format!("{p} not in {}", sup.name())))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(sub.clone(), sup.clone(), map)
    }

    pub fn sub(&self) -> &Arc<FiniteGroup> {
        &self.sub
    }

    pub fn sup(&self) -> &Arc<FiniteGroup> {
        &self.sup
    }

    pub fn image(&self, h: usize) -> usize {
        self.map[h]
    }

    pub fn preimage(&self, g: usize) -> Option<usize> {
        self.preimage[g]
    }
}

/// Every subgroup of `g`, as sorted element-index sets; found by closing the
/// cyclic subgroups under joins.
pub fn all_subgroup_sets(g: &FiniteGroup) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    let close = |gens: &[usize]| -> Result<BTreeSet<usize>> {
        let perms = gens.iter().map(|&x| g.element(x).clone()).collect();
        let sub = FiniteGroup::from_generators("sub", g.degree(), perms)?;
        g.element_set(&sub)
    };
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    for x in 0..n {
        found.insert(close(&[x])?.into_iter().collect());
    }
    loop {
        let current: Vec<Vec<usize>> = found.iter().cloned().collect();
        let mut added = false;
        for a in &current {
            for b in &current {
                let mut gens = a.clone();
                gens.extend(b.iter().copied());
                let j: Vec<usize> = close(&gens)?.into_iter().collect();
                if found.insert(j) {
                    added = true;
                }
            }
        }
        if !added {
            break;
        }
    }
    Ok(found.into_iter().collect())
}

/// Every subgroup of `g` as a group with its inclusion into `g`.
pub fn all_subgroups(g: &Arc<FiniteGroup>) -> Result<Vec<Embedding>> {
    all_subgroup_sets(g)?
        .into_iter()
        .enumerate()
        .map(|(i, set)| {
            let sub = if set.len() == g.order() {
                g.clone()
            } else {
                g.subgroup(&format!("{}[{i}]", g.name()), &set)?
            };
            Embedding::inclusion(&sub, g)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_orders() {
        for (n, o) in [(0, 1), (1, 1), (2, 2), (3, 6), (4, 24), (5, 120), (6, 720), (7, 5040)] {
            assert_eq!(symmetric(n).order(), o);
        }
    }

    #[test]
    fn s3_classes_by_cycle_type() {
        let g = symmetric(3);
        let cls = &g.classes().classes;
        let types: Vec<_> = cls.iter().map(|c| (c.cycle_type.clone(), c.size())).collect();
        assert_eq!(types, vec![(vec![1, 1, 1], 1), (vec![2, 1], 3), (vec![3], 2)]);
    }

    #[test]
    fn class_counts_are_partition_numbers() {
        for (n, p) in [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11), (7, 15)] {
            assert_eq!(symmetric(n).num_classes(), p);
        }
    }

    #[test]
    fn enumeration_cap_reports_partial() {
        let gens = vec![
            Permutation::from_cycles(8, &[&[0, 1]]).unwrap(),
            Permutation::long_cycle(8),
        ];
        match FiniteGroup::from_generators_capped("S8", 8, gens, 1000) {
            Err(Error::EnumerationCap { cap, partial }) => {
                assert_eq!(cap, 1000);
                assert_eq!(partial, 1000);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn subgroups_of_s3() {
        let subs = all_subgroup_sets(&symmetric(3)).unwrap();
        let mut sizes: Vec<usize> = subs.iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 2, 2, 3, 6]);
        assert_eq!(all_subgroup_sets(&cyclic(4)).unwrap().len(), 3);
    }

    #[test]
    fn product_pairs_and_young() {
        let y = young(&[2, 1]);
        assert_eq!(y.order(), 2);
        assert!(Embedding::inclusion(&y, &symmetric(3)).is_ok());
        let y = young(&[2, 2]);
        assert_eq!(y.order(), 4);
        match y.kind() {
            GroupKind::Product { pairs, .. } => assert_eq!(pairs.len(), 4),
            _ => panic!("young subgroup should be a product"),
        }
    }

    #[test]
    fn embedding_rejects_non_homomorphism() {
        let c2 = cyclic(2);
        let s2 = symmetric(2);
        assert!(Embedding::new(c2.clone(), s2.clone(), vec![1, 0]).is_err());
        assert!(Embedding::new(c2, s2, vec![0, 1]).is_ok());
    }

    #[test]
    fn detects_subgroup_kinds() {
        let s3 = symmetric(3);
        let c3 = s3.subgroup("A3", &[s3.index_of(&Permutation::long_cycle(3)).unwrap()]).unwrap();
        assert!(matches!(c3.kind(), GroupKind::Cyclic { .. }));
        assert_eq!(c3.order(), 3);
    }
}
