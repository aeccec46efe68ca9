use std::fmt;

use crate::error::{Error, Result};

/// Bijection of `{0, ..., n-1}` stored as its image list. Displayed 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
            seen[i] = true;
        }
        Ok(Self(images.into_iter().map(|i| i as u32).collect()))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n as u32).collect())
    }

    /// Builds a permutation from disjoint cycles written with 0-based points.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut img: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cyc in cycles {
            for (k, &a) in cyc.iter().enumerate() {
                if a >= n || used[a] {
                    return Err(Error::InvalidPermutation(format!("bad cycle {cyc:?}")));
                }
                used[a] = true;
                img[a] = cyc[(k + 1) % cyc.len()];
            }
        }
        Self::new(img)
    }

    /// The cycle `0 -> 1 -> ... -> n-1 -> 0`.
    pub fn long_cycle(n: usize) -> Self {
        Self((0..n as u32).map(|i| (i + 1) % n as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&i| i as usize).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Self(inv)
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Cycles including fixed points, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    /// Cycle lengths in non-increasing order (a partition of the degree).
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn sign(&self) -> i64 {
        let odd = self.cycles().iter().filter(|c| c.len() % 2 == 0).count() % 2;
        if odd == 1 {
            -1
        } else {
            1
        }
    }

    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .map(Vec::len)
            .fold(1, num_integer::lcm)
    }

    /// Restriction to the block `start..start+len`, reindexed to `0..len`.
    /// Panics if the block is not invariant.
    pub fn restrict_block(&self, start: usize, len: usize) -> Self {
        Self(
            (start..start + len)
                .map(|i| {
                    let j = self.0[i] as usize;
                    assert!(j >= start && j < start + len, "block not invariant");
                    (j - start) as u32
                })
                .collect(),
        )
    }

    /// Disjoint union `self ⊔ other` acting on `degree(self) + degree(other)` points.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let shift = self.0.len() as u32;
        let mut v = self.0.clone();
        v.extend(other.0.iter().map(|&j| j + shift));
        Self(v)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_applies_right_first() {
        let a = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let b = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // (a∘b)(1) = a(2) = 2, (a∘b)(0) = a(0) = 1
        let ab = a.compose(&b);
        assert_eq!(ab.apply(0), 1);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 0);
        assert_eq!(ab.to_string(), "(1 2 3)");
    }

    #[test]
    fn cycle_type_sign_order() {
        let p = Permutation::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.cycle_type(), vec![3, 2]);
        assert_eq!(p.sign(), -1);
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert_eq!(p.pow(-1), p.inverse());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }

    #[test]
    fn block_restriction_roundtrip() {
        let a = Permutation::from_cycles(2, &[&[0, 1]]).unwrap();
        let b = Permutation::long_cycle(3);
        let s = a.direct_sum(&b);
        assert_eq!(s.restrict_block(0, 2), a);
        assert_eq!(s.restrict_block(2, 3), b);
    }
}
