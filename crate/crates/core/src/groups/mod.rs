//! Permutation groups, conjugacy classes, embeddings, finite G-sets and the
//! certified decomposition of `X^l` under `C_l × G`.

pub mod group;
pub mod gset;
pub mod perm;
pub mod power;

pub use group::{
    all_subgroups, cyclic, product, symmetric, young, ConjugacyClass, ConjugacyClasses, Embedding,
    FiniteGroup, GroupKind,
};
pub use gset::FiniteGSet;
pub use perm::Permutation;
pub use power::{decompose_power_gset, BijectionEntry, PowerDecomposition, PowerMode};

/// Partitions of `n` in lexicographically decreasing order, `(n)` first.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            prefix.push(k);
            go(n - k, k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Ordered compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_and_composition_counts() {
        let p: Vec<usize> = (0..8).map(|n| partitions(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        let c: Vec<usize> = (0..7).map(|n| compositions(n).len()).collect();
        assert_eq!(c, vec![1, 1, 2, 4, 8, 16, 32]);
        assert_eq!(partitions(3), vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
    }
}
