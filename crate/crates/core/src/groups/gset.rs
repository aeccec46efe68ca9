use std::collections::BTreeSet;
use std::sync::Arc;

use super::group::{Embedding, FiniteGroup};
use crate::error::{Error, Result};

/// Finite set with a left action of a finite group.
#[derive(Clone, Debug)]
pub struct FiniteGSet {
    group: Arc<FiniteGroup>,
    npoints: usize,
    /// `action[g][x]` is `g · x`.
    action: Vec<Vec<usize>>,
}

impl FiniteGSet {
    pub fn new(group: Arc<FiniteGroup>, npoints: usize, action: Vec<Vec<usize>>) -> Result<Self> {
        if action.len() != group.order() || action.iter().any(|a| a.len() != npoints) {
            return Err(Error::InvalidInput("action table has wrong shape".into()));
        }
        for a in &action {
            let set: BTreeSet<_> = a.iter().collect();
            if set.len() != npoints || a.iter().any(|&y| y >= npoints) {
                return Err(Error::InvalidInput("group element does not act bijectively".into()));
            }
        }
        if action[group.identity()].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::InvalidInput("identity does not act trivially".into()));
        }
        for s in group.generators() {
            let si = group.index_of(s).expect("generator is an element");
            for h in 0..group.order() {
                let sh = group.mul(si, h);
                if (0..npoints).any(|x| action[sh][x] != action[si][action[h][x]]) {
                    return Err(Error::InvalidInput("action is not compatible with multiplication".into()));
                }
            }
        }
        Ok(Self { group, npoints, action })
    }

    /// `G` acting on itself by left multiplication.
    pub fn left_regular(group: &Arc<FiniteGroup>) -> Self {
        let n = group.order();
        let action = (0..n).map(|g| (0..n).map(|x| group.mul(g, x)).collect()).collect();
        Self { group: group.clone(), npoints: n, action }
    }

    /// Left cosets `G/K` of a subgroup, with `G` acting by left multiplication.
    /// Returns the set together with one coset representative per point.
    pub fn cosets(group: &Arc<FiniteGroup>, sub: &Embedding) -> Result<(Self, Vec<usize>)> {
        if !Arc::ptr_eq(sub.sup(), group) {
            return Err(Error::GroupMismatch("subgroup is not embedded in this group".into()));
        }
        let n = group.order();
        let k: Vec<usize> = (0..sub.sub().order()).map(|h| sub.image(h)).collect();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for g in 0..n {
            if coset_of[g] != usize::MAX {
                continue;
            }
            for &h in &k {
                coset_of[group.mul(g, h)] = reps.len();
            }
            reps.push(g);
        }
        let action = (0..n)
            .map(|g| reps.iter().map(|&r| coset_of[group.mul(g, r)]).collect())
            .collect();
        Ok((Self { group: group.clone(), npoints: reps.len(), action }, reps))
    }

    /// The same set with the action restricted along an embedding.
    pub fn restrict(&self, emb: &Embedding) -> Result<Self> {
        if !Arc::ptr_eq(emb.sup(), &self.group) {
            return Err(Error::GroupMismatch("embedding target is not the acting group".into()));
        }
        let action = (0..emb.sub().order()).map(|h| self.action[emb.image(h)].clone()).collect();
        Ok(Self { group: emb.sub().clone(), npoints: self.npoints, action })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn npoints(&self) -> usize {
        self.npoints
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }

    pub fn stabilizer(&self, x: usize) -> Vec<usize> {
        (0..self.group.order()).filter(|&g| self.action[g][x] == x).collect()
    }

    pub fn fixed_points(&self, g: usize) -> Vec<usize> {
        (0..self.npoints).filter(|&x| self.action[g][x] == x).collect()
    }

    /// Orbits as sorted point lists, ordered by smallest point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.npoints];
        let mut out = Vec::new();
        for x in 0..self.npoints {
            if seen[x] {
                continue;
            }
            let orbit: BTreeSet<usize> = (0..self.group.order()).map(|g| self.action[g][x]).collect();
            for &y in &orbit {
                seen[y] = true;
            }
            out.push(orbit.into_iter().collect());
        }
        out
    }

    /// For each point, some group element carrying the orbit's smallest point to it.
    pub fn transversal(&self) -> Vec<usize> {
        let mut t = vec![usize::MAX; self.npoints];
        for orbit in self.orbits() {
            let base = orbit[0];
            for g in 0..self.group.order() {
                let y = self.action[g][base];
                if t[y] == usize::MAX {
                    t[y] = g;
                }
            }
        }
        t
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group::{all_subgroups, symmetric};

    #[test]
    fn cosets_of_s3_by_c2() {
        let g = symmetric(3);
        let subs = all_subgroups(&g).unwrap();
        let c2 = subs.iter().find(|e| e.sub().order() == 2).unwrap();
        let (x, reps) = FiniteGSet::cosets(&g, c2).unwrap();
        assert_eq!(x.npoints(), 3);
        assert_eq!(reps.len(), 3);
        assert_eq!(x.orbits().len(), 1);
        let rebuilt = FiniteGSet::new(g.clone(), 3, (0..6).map(|h| (0..3).map(|p| x.act(h, p)).collect()).collect());
        assert!(rebuilt.is_ok());
    }

    #[test]
    fn regular_action_is_free() {
        let g = symmetric(3);
        let x = FiniteGSet::left_regular(&g);
        for p in 0..6 {
            assert_eq!(x.stabilizer(p), vec![g.identity()]);
        }
    }

    #[test]
    fn bad_action_rejected() {
        let g = symmetric(2);
        assert!(FiniteGSet::new(g.clone(), 2, vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(FiniteGSet::new(g, 2, vec![vec![0, 0], vec![1, 0]]).is_err());
    }
}
