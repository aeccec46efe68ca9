//! Certified splitting of the diagonal action on `X^l` into the diagonal and a
//! free part `C_l × M (× X)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use super::group::{Embedding, FiniteGroup};
use super::gset::FiniteGSet;
use crate::error::{Error, Result};
use crate::exact_arith::is_prime;

/// Which `G`-set is raised to the `l`-th power.
#[derive(Clone, Debug)]
pub enum PowerMode {
    /// `X = G` with left multiplication; representatives are tuples
    /// `(1, g_1, ..., g_{l-1})` and points are `(g_k x)_k`.
    Principal,
    /// `X = G/K` for the embedded subgroup `K`; representatives are points of `X^l`.
    Coset(Embedding),
}

/// One row of the explicit bijection `C_l × M (× X) -> X^l \ Δ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BijectionEntry {
    pub rotation: usize,
    pub rep: usize,
    /// Base point in principal mode; always 0 in coset mode.
    pub base: usize,
    pub point: usize,
}

#[derive(Clone, Debug)]
pub struct PowerDecomposition {
    l: usize,
    principal: bool,
    gset: FiniteGSet,
    diagonal: Vec<usize>,
    reps: Vec<Vec<usize>>,
    rep_index: HashMap<Vec<usize>, usize>,
    bijection: Vec<BijectionEntry>,
    verified: OnceLock<Result<()>>,
}

fn encode(t: &[usize], n: usize) -> usize {
    t.iter().rev().fold(0, |acc, &x| acc * n + x)
}

fn decode(mut p: usize, n: usize, l: usize) -> Vec<usize> {
    (0..l)
        .map(|_| {
            let x = p % n;
            p /= n;
            x
        })
        .collect()
}

/// The generator of `C_l` moves coordinate `k` to `k + 1`.
fn rotate(t: &[usize], i: usize) -> Vec<usize> {
    let l = t.len();
    (0..l).map(|k| t[(k + l - i % l) % l]).collect()
}

impl PowerDecomposition {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn is_principal(&self) -> bool {
        self.principal
    }

    pub fn gset(&self) -> &FiniteGSet {
        &self.gset
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.gset.group()
    }

    pub fn diagonal(&self) -> &[usize] {
        &self.diagonal
    }

    pub fn reps(&self) -> &[Vec<usize>] {
        &self.reps
    }

    pub fn bijection(&self) -> &[BijectionEntry] {
        &self.bijection
    }

    pub fn num_points(&self) -> usize {
        self.gset.npoints().pow(self.l as u32)
    }

    pub fn encode(&self, t: &[usize]) -> usize {
        encode(t, self.gset.npoints())
    }

    pub fn decode(&self, p: usize) -> Vec<usize> {
        decode(p, self.gset.npoints(), self.l)
    }

    /// The point of `X^l` attached to a representative (and base point).
    pub fn rep_point(&self, rep: usize, base: usize) -> Vec<usize> {
        let m = &self.reps[rep];
        if self.principal {
            m.iter().map(|&g| self.gset.act(g, base)).collect()
        } else {
            m.clone()
        }
    }

    /// Points `Φ(1, m, x)`: one per free `C_l`-orbit, forming a `G`-stable set.
    pub fn representative_points(&self) -> Vec<Vec<usize>> {
        let bases = if self.principal { self.gset.npoints() } else { 1 };
        (0..self.reps.len())
            .flat_map(|m| (0..bases).map(move |x| (m, x)))
            .map(|(m, x)| self.rep_point(m, x))
            .collect()
    }

    fn group_tuple_conj(&self, gamma: usize, m: &[usize]) -> Vec<usize> {
        let g = self.group();
        m.iter().map(|&x| g.conjugate(gamma, x)).collect()
    }

    /// Re-checks bijectivity and equivariance point by point; the outcome is
    /// computed once and remembered.
    pub fn verify(&self) -> Result<()> {
        self.verified.get_or_init(|| self.verify_uncached()).clone()
    }

    fn verify_uncached(&self) -> Result<()> {
        let n = self.gset.npoints();
        let total = self.num_points();
        let mut hit = vec![false; total];
        for &d in &self.diagonal {
            let t = self.decode(d);
            if t.iter().any(|&x| x != t[0]) {
                return Err(Error::CertificateFailure(format!("{t:?} listed as diagonal")));
            }
            if std::mem::replace(&mut hit[d], true) {
                return Err(Error::CertificateFailure("diagonal point repeated".into()));
            }
        }
        for e in &self.bijection {
            let expect = self.encode(&rotate(&self.rep_point(e.rep, e.base), e.rotation));
            if expect != e.point {
                return Err(Error::CertificateFailure(format!("bijection row {e:?} is inconsistent")));
            }
            if std::mem::replace(&mut hit[e.point], true) {
                return Err(Error::CertificateFailure(format!(
                    "point {:?} hit twice",
                    self.decode(e.point)
                )));
            }
        }
        if let Some(p) = hit.iter().position(|&h| !h) {
            return Err(Error::CertificateFailure(format!("point {:?} not covered", self.decode(p))));
        }
        let bases = if self.principal { n } else { 1 };
        let row = |rot: usize, rep: usize, base: usize| (rot * self.reps.len() + rep) * bases + base;
        let g = self.group();
        for j in 0..self.l {
            for gamma in 0..g.order() {
                for e in &self.bijection {
                    let moved: Vec<usize> =
                        rotate(&self.decode(e.point), j).iter().map(|&x| self.gset.act(gamma, x)).collect();
                    let (new_rep, new_base) = if self.principal {
                        (self.group_tuple_conj(gamma, &self.reps[e.rep]), self.gset.act(gamma, e.base))
                    } else {
                        (self.reps[e.rep].iter().map(|&x| self.gset.act(gamma, x)).collect(), 0)
                    };
                    let Some(&ri) = self.rep_index.get(&new_rep) else {
                        return Err(Error::CertificateFailure(format!(
                            "representative set not stable: {new_rep:?}"
                        )));
                    };
                    let target = self.bijection[row((e.rotation + j) % self.l, ri, new_base)];
                    if target.point != self.encode(&moved) {
                        return Err(Error::CertificateFailure(format!(
                            "equivariance fails at rotation {j}, element {}, row {e:?}",
                            g.element(gamma)
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Splits `X^l = Δ(X) ⊔ C_l × M (× X)` with a `G`-stable representative set `M`
/// chosen greedily in lexicographic order, and verifies the result.
pub fn decompose_power_gset(
    group: &Arc<FiniteGroup>,
    mode: &PowerMode,
    l: usize,
) -> Result<PowerDecomposition> {
    if !is_prime(l as u64) {
        return Err(Error::NotPrime(l as u64));
    }
    if group.order().is_multiple_of(l) {
        return Err(Error::InvalidInput(format!("l = {l} divides |G| = {}", group.order())));
    }
    let (gset, principal) = match mode {
        PowerMode::Principal => (FiniteGSet::left_regular(group), true),
        PowerMode::Coset(k) => (FiniteGSet::cosets(group, k)?.0, false),
    };
    let n = gset.npoints();
    let total = n
        .checked_pow(l as u32)
        .filter(|&t| t <= 5_000_000)
        .ok_or_else(|| Error::OutOfRange(format!("|X|^l = {n}^{l} is too large")))?;
    let diagonal: Vec<usize> = (0..n).map(|x| encode(&vec![x; l], n)).collect();

    let reps = if principal {
        principal_reps(group, l)?
    } else {
        coset_reps(&gset, l, total)?
    };
    let rep_index: HashMap<Vec<usize>, usize> =
        reps.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let mut dec = PowerDecomposition {
        l,
        principal,
        gset,
        diagonal,
        reps,
        rep_index,
        bijection: Vec::new(),
        verified: OnceLock::new(),
    };
    let bases = if principal { n } else { 1 };
    let mut bijection = Vec::with_capacity(l * dec.reps.len() * bases);
    for rotation in 0..l {
        for rep in 0..dec.reps.len() {
            for base in 0..bases {
                let point = dec.encode(&rotate(&dec.rep_point(rep, base), rotation));
                bijection.push(BijectionEntry { rotation, rep, base, point });
            }
        }
    }
    dec.bijection = bijection;
    dec.verify()?;
    Ok(dec)
}

/// Greedy representatives for the free `C_l`-action on `G^{l-1} \ {1}`,
/// closed under conjugation.
fn principal_reps(g: &Arc<FiniteGroup>, l: usize) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    let e = g.identity();
    let space = n.pow(l as u32 - 1);
    let tuple_of = |code: usize| -> Vec<usize> {
        let mut t = vec![e];
        t.extend(decode(code, n, l - 1));
        t
    };
    let code_of = |t: &[usize]| encode(&t[1..], n);
    // Rotating the point (g_k x)_k and re-basing gives g'_k = g_{k-i} g_{l-i}^{-1}.
    let rot = |t: &[usize], i: usize| -> Vec<usize> {
        let q = rotate(t, i);
        let inv0 = g.inv(q[0]);
        q.iter().map(|&x| g.mul(x, inv0)).collect()
    };
    let mut covered = vec![false; space];
    covered[0] = true;
    let mut reps = Vec::new();
    for code in 1..space {
        if covered[code] {
            continue;
        }
        let t = tuple_of(code);
        let mut class: Vec<Vec<usize>> = (0..n)
            .map(|gamma| t.iter().map(|&x| g.conjugate(gamma, x)).collect())
            .collect();
        class.sort();
        class.dedup();
        for m in &class {
            for i in 0..l {
                let c = code_of(&rot(m, i));
                if std::mem::replace(&mut covered[c], true) {
                    return Err(Error::CertificateFailure(format!(
                        "rotation orbit of {m:?} meets an earlier representative"
                    )));
                }
            }
        }
        reps.extend(class);
    }
    Ok(reps)
}

fn coset_reps(x: &FiniteGSet, l: usize, total: usize) -> Result<Vec<Vec<usize>>> {
    let n = x.npoints();
    let g = x.group();
    let mut covered = vec![false; total];
    for p in 0..n {
        covered[encode(&vec![p; l], n)] = true;
    }
    let mut reps = Vec::new();
    for code in 0..total {
        if covered[code] {
            continue;
        }
        let t = decode(code, n, l);
        let mut orbit: Vec<Vec<usize>> =
            (0..g.order()).map(|gamma| t.iter().map(|&y| x.act(gamma, y)).collect()).collect();
        orbit.sort();
        orbit.dedup();
        for m in &orbit {
            for i in 0..l {
                let c = encode(&rotate(m, i), n);
                if std::mem::replace(&mut covered[c], true) {
                    return Err(Error::CertificateFailure(format!(
                        "rotation orbit of {m:?} meets an earlier representative"
                    )));
                }
            }
        }
        reps.extend(orbit);
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::group::{all_subgroups, cyclic, symmetric};

    #[test]
    fn c3_squared() {
        let d = decompose_power_gset(&cyclic(3), &PowerMode::Principal, 2).unwrap();
        assert_eq!(d.reps().len(), 1);
        assert_eq!(d.diagonal().len() + d.bijection().len(), 9);
    }

    #[test]
    fn s3_fifth_power_has_259_reps() {
        let d = decompose_power_gset(&symmetric(3), &PowerMode::Principal, 5).unwrap();
        assert_eq!(d.reps().len(), 259);
        assert_eq!(d.bijection().len(), 5 * 259 * 6);
    }

    #[test]
    fn coset_mode_s3_mod_c2() {
        let g = symmetric(3);
        let k = all_subgroups(&g).unwrap().into_iter().find(|e| e.sub().order() == 2).unwrap();
        let d = decompose_power_gset(&g, &PowerMode::Coset(k), 5).unwrap();
        assert_eq!(d.diagonal().len() + d.bijection().len(), 243);
        assert_eq!(d.reps().len() * 5, 240);
    }

    #[test]
    fn rejects_dividing_prime() {
        assert!(decompose_power_gset(&symmetric(3), &PowerMode::Principal, 3).is_err());
        assert!(decompose_power_gset(&cyclic(4), &PowerMode::Principal, 2).is_err());
        assert!(decompose_power_gset(&cyclic(4), &PowerMode::Principal, 4).is_err());
    }
}
