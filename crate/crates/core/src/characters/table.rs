use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exact_arith::{Cyclotomic, Rational};
use crate::groups::{partitions, FiniteGroup, GroupKind};

/// Irreducible characters of a finite group, one row per irreducible and one
/// column per conjugacy class (in the group's class order).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    rows: Vec<Vec<Cyclotomic>>,
    labels: Vec<String>,
    /// Partition labels when the group is a symmetric group.
    partitions: Option<Vec<Vec<usize>>>,
    /// `(left, right)` irreducible indices when the group is a product.
    factors: Option<Vec<(usize, usize)>>,
    class_sizes: Vec<usize>,
    order: usize,
}

impl CharacterTable {
    pub fn num_irreducibles(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, i: usize) -> &[Cyclotomic] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<Cyclotomic>] {
        &self.rows
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn partitions(&self) -> Option<&[Vec<usize>]> {
        self.partitions.as_deref()
    }

    pub fn factors(&self) -> Option<&[(usize, usize)]> {
        self.factors.as_deref()
    }

    /// Index of the irreducible labelled by a partition (symmetric groups only).
    pub fn index_of_partition(&self, lambda: &[usize]) -> Option<usize> {
        self.partitions.as_ref()?.iter().position(|p| p == lambda)
    }

    /// Index of the trivial character.
    pub fn trivial(&self) -> usize {
        self.rows
            .iter()
            .position(|r| r.iter().all(|v| v == &Cyclotomic::one()))
            .expect("every table contains the trivial character")
    }

    /// Degrees `χ(1)`; the identity class is always first.
    pub fn degrees(&self) -> Vec<Rational> {
        self.rows.iter().map(|r| r[0].as_rational().expect("degree is rational")).collect()
    }

    /// `(1/|G|) Σ_c |c| a(c) conj(b(c))`.
    pub fn inner(&self, a: &[Cyclotomic], b: &[Cyclotomic]) -> Cyclotomic {
        let mut acc = Cyclotomic::zero();
        for ((x, y), &s) in a.iter().zip(b).zip(&self.class_sizes) {
            acc = acc.add(&x.mul(&y.conj()).scale(&Rational::from_integer(s.into())));
        }
        acc.scale(&Rational::new(1.into(), self.order.into()))
    }

    /// Checks row and column orthogonality exactly.
    pub fn validate(&self) -> Result<()> {
        let k = self.rows.len();
        if k != self.class_sizes.len() {
            return Err(Error::Orthogonality(format!(
                "{k} irreducibles for {} classes",
                self.class_sizes.len()
            )));
        }
        for i in 0..k {
            for j in 0..k {
                let ip = self.inner(&self.rows[i], &self.rows[j]);
                let expect = Cyclotomic::from_int(i64::from(i == j));
                if ip != expect {
                    return Err(Error::Orthogonality(format!(
                        "<{}, {}> = {ip}",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        for c in 0..k {
            for d in 0..k {
                let s = (0..k).fold(Cyclotomic::zero(), |acc, i| {
                    acc.add(&self.rows[i][c].mul(&self.rows[i][d].conj()))
                });
                let expect = if c == d {
                    Cyclotomic::from_int((self.order / self.class_sizes[c]) as i64)
                } else {
                    Cyclotomic::zero()
                };
                if s != expect {
                    return Err(Error::Orthogonality(format!("columns {c}, {d} give {s}")));
                }
            }
        }
        Ok(())
    }
}

/// Memoized character table of `group`; orthogonality is verified before the
/// table is first returned.
pub fn character_table(group: &Arc<FiniteGroup>) -> Result<Arc<CharacterTable>> {
    group
        .table_cell()
        .get_or_init(|| {
            let t = build_table(group)?;
            t.validate()?;
            Ok(Arc::new(t))
        })
        .clone()
}

/// Builds and validates without consulting the cache.
pub fn character_table_uncached(group: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    let t = build_table(group)?;
    t.validate()?;
    Ok(t)
}

fn build_table(group: &Arc<FiniteGroup>) -> Result<CharacterTable> {
    let classes = &group.classes().classes;
    let class_sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
    let order = group.order();
    match group.kind() {
        GroupKind::Symmetric => {
            let n = group.degree();
            if n > 7 {
                return Err(Error::OutOfRange(format!("symmetric tables are supported for n <= 7, got {n}")));
            }
            let parts = partitions(n);
            let mut mn = MurnaghanNakayama::default();
            let rows = parts
                .iter()
                .map(|lambda| {
                    classes
                        .iter()
                        .map(|c| Cyclotomic::from_int(mn.value(lambda, &c.cycle_type)))
                        .collect()
                })
                .collect();
            let labels = parts.iter().map(|p| format!("{p:?}")).collect();
            Ok(CharacterTable {
                rows,
                labels,
                partitions: Some(parts),
                factors: None,
                class_sizes,
                order,
            })
        }
        GroupKind::Cyclic { powers, .. } => {
            let n = powers.len() as u64;
            if n > 30 {
                return Err(Error::OutOfRange(format!("cyclic tables are supported for n <= 30, got {n}")));
            }
            let mut exponent_of = vec![0i64; order];
            for (k, &g) in powers.iter().enumerate() {
                exponent_of[g] = k as i64;
            }
            let rows = (0..n as i64)
                .map(|j| {
                    classes
                        .iter()
                        .map(|c| Cyclotomic::zeta_pow(n, j * exponent_of[c.representative]))
                        .collect()
                })
                .collect();
            let labels = (0..n).map(|j| format!("t^{j}")).collect();
            Ok(CharacterTable { rows, labels, partitions: None, factors: None, class_sizes, order })
        }
        GroupKind::Product { left, right, pairs } => {
            let lt = character_table(left)?;
            let rt = character_table(right)?;
            let mut rows = Vec::new();
            let mut labels = Vec::new();
            let mut factors = Vec::new();
            for i in 0..lt.num_irreducibles() {
                for j in 0..rt.num_irreducibles() {
                    rows.push(
                        classes
                            .iter()
                            .map(|c| {
                                let (a, b) = pairs[c.representative];
                                lt.row(i)[left.class_of(a)].mul(&rt.row(j)[right.class_of(b)])
                            })
                            .collect(),
                    );
                    labels.push(format!("{} # {}", lt.label(i), rt.label(j)));
                    factors.push((i, j));
                }
            }
            Ok(CharacterTable {
                rows,
                labels,
                partitions: None,
                factors: Some(factors),
                class_sizes,
                order,
            })
        }
        GroupKind::Generic => Err(Error::UnsupportedGroup(format!(
            "{}: character tables exist for symmetric, cyclic and product groups",
            group.name()
        ))),
    }
}

/// Murnaghan-Nakayama rule on beta-sets, memoized on (beta-set, remaining cycle lengths).
#[derive(Default)]
pub struct MurnaghanNakayama {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MurnaghanNakayama {
    /// `χ^λ(μ)` where `μ` is the cycle type of the class.
    pub fn value(&mut self, lambda: &[usize], mu: &[usize]) -> i64 {
        let k = lambda.len();
        let beta: Vec<usize> = lambda.iter().enumerate().map(|(i, &p)| p + k - 1 - i).collect();
        self.go(beta, mu.to_vec())
    }

    fn go(&mut self, beta: Vec<usize>, mu: Vec<usize>) -> i64 {
        if mu.is_empty() {
            return 1;
        }
        let key = (beta.clone(), mu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = mu[0];
        let rest = mu[1..].to_vec();
        let mut total = 0;
        for (idx, &b) in beta.iter().enumerate() {
            if b < r || beta.contains(&(b - r)) {
                continue;
            }
            let between = beta.iter().filter(|&&c| c > b - r && c < b).count();
            let mut next = beta.clone();
            next[idx] = b - r;
            next.sort_unstable_by(|x, y| y.cmp(x));
            let sign = if between % 2 == 0 { 1 } else { -1 };
            total += sign * self.go(next, rest.clone());
        }
        self.memo.insert(key, total);
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, product, symmetric};

    fn ints(row: &[Cyclotomic]) -> Vec<i64> {
        row.iter()
            .map(|v| v.as_rational().unwrap().to_integer().try_into().unwrap())
            .collect()
    }

    #[test]
    fn s3_table() {
        let t = character_table(&symmetric(3)).unwrap();
        let std = t.index_of_partition(&[2, 1]).unwrap();
        assert_eq!(ints(t.row(std)), vec![2, 0, -1]);
        let sgn = t.index_of_partition(&[1, 1, 1]).unwrap();
        assert_eq!(ints(t.row(sgn)), vec![1, -1, 1]);
    }

    #[test]
    fn s4_degrees() {
        let t = character_table(&symmetric(4)).unwrap();
        let d: Vec<i64> = t.degrees().iter().map(|q| q.to_integer().try_into().unwrap()).collect();
        assert_eq!(d, vec![1, 3, 2, 3, 1]);
    }

    #[test]
    fn cyclic_and_product_tables_validate() {
        for n in 1..=12 {
            let t = character_table(&cyclic(n)).unwrap();
            assert_eq!(t.num_irreducibles(), n);
        }
        let g = product(&cyclic(5), &symmetric(3)).unwrap();
        let t = character_table(&g).unwrap();
        assert_eq!(t.num_irreducibles(), 15);
    }

    #[test]
    fn cache_is_transparent() {
        let g = symmetric(4);
        let cached = character_table(&g).unwrap();
        let fresh = character_table_uncached(&g).unwrap();
        assert_eq!(cached.rows(), fresh.rows());
    }
}
