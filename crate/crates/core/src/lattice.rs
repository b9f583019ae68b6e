//! Finite complete join-semilattices.
//!
//! Elements are indices `0..n` into a label list. The order is kept as a full
//! `leq` matrix and binary joins are cached in a flat table. Bottom is the
//! empty join, top is the join of everything.

use crate::error::{Error, Result};

/// A validated finite lattice with bottom.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinLattice {
    labels: Vec<String>,
    leq: Vec<Vec<bool>>,
    join: Vec<u32>,
    bottom: usize,
    top: usize,
}

impl FinLattice {
    /// Validates an order table and computes joins, bottom and top.
    ///
    /// Binary joins plus a bottom give every finite join, so only pairs and
    /// the empty set are checked.
    pub fn validate(labels: Vec<String>, leq: Vec<Vec<bool>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::ShapeMismatch("a lattice needs at least one element".into()));
        }
        if leq.len() != n || leq.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!("leq must be {n}x{n}")));
        }
        let l = |i: usize| labels[i].clone();
        for a in 0..n {
            if !leq[a][a] {
                return Err(Error::NotAPartialOrder { law: "reflexivity", witness: vec![l(a)] });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(Error::NotAPartialOrder {
                        law: "antisymmetry",
                        witness: vec![l(a), l(b)],
                    });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b][c] && !leq[a][c] {
                        return Err(Error::NotAPartialOrder {
                            law: "transitivity",
                            witness: vec![l(a), l(b), l(c)],
                        });
                    }
                }
            }
        }
        let bottom = least_of(&leq, (0..n).collect())
            .ok_or(Error::MissingJoin { subset: vec![] })?;
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            for b in a..n {
                let ubs: Vec<usize> = (0..n).filter(|&u| leq[a][u] && leq[b][u]).collect();
                let j = least_of(&leq, ubs)
                    .ok_or_else(|| Error::MissingJoin { subset: vec![l(a), l(b)] })?;
                join[a * n + b] = j as u32;
                join[b * n + a] = j as u32;
            }
        }
        let top = (0..n).fold(bottom, |acc, x| join[acc * n + x] as usize);
        Ok(Self { labels, leq, join, bottom, top })
    }

    /// Builds a lattice from an order predicate.
    pub fn from_order<F: Fn(usize, usize) -> bool>(labels: Vec<String>, le: F) -> Result<Self> {
        let n = labels.len();
        let leq = (0..n).map(|a| (0..n).map(|b| le(a, b)).collect()).collect();
        Self::validate(labels, leq)
    }

    /// The chain `0 < 1 < ... < n-1` labelled by the given names.
    pub fn chain(labels: Vec<String>) -> Self {
        Self::from_order(labels, |a, b| a <= b).expect("a chain is a lattice")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq_table(&self) -> &[Vec<bool>] {
        &self.leq
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b] as usize
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Join of an arbitrary subset; the empty join is bottom.
    pub fn join_all<I: IntoIterator<Item = usize>>(&self, s: I) -> usize {
        s.into_iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet as the join of all common lower bounds; the empty meet is top.
    pub fn meet_all<I: IntoIterator<Item = usize>>(&self, s: I) -> usize {
        let s: Vec<usize> = s.into_iter().collect();
        self.join_all((0..self.len()).filter(|&x| s.iter().all(|&y| self.leq(x, y))))
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet_all([a, b])
    }

    /// Elements that are not bottom and not the join of what lies strictly below.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&x| {
                x != self.bottom
                    && self.join_all((0..self.len()).filter(|&y| y != x && self.leq(y, x))) != x
            })
            .collect()
    }

    /// True if `f` preserves binary joins and bottom, which on a finite
    /// lattice is the same as preserving every join.
    pub fn preserves_joins(&self, target: &FinLattice, f: &[usize]) -> bool {
        f[self.bottom] == target.bottom
            && (0..self.len()).all(|a| {
                (0..self.len()).all(|b| f[self.join(a, b)] == target.join(f[a], f[b]))
            })
    }
}

fn least_of(leq: &[Vec<bool>], set: Vec<usize>) -> Option<usize> {
    set.iter().copied().find(|&c| set.iter().all(|&u| leq[c][u]))
}

/// Every join-preserving map `l1 -> l2`, as value vectors in lexicographic order.
///
/// Monotone assignments on the join-irreducibles of `l1` are extended by
/// `f(x) = join of f(j) for irreducible j <= x` and the genuine join
/// homomorphisms are kept.
pub fn enumerate_join_preserving_maps(l1: &FinLattice, l2: &FinLattice) -> Vec<Vec<usize>> {
    let jis = l1.join_irreducibles();
    let mut out = Vec::new();
    let mut assign = vec![0usize; jis.len()];
    fn rec(
        k: usize,
        jis: &[usize],
        assign: &mut Vec<usize>,
        l1: &FinLattice,
        l2: &FinLattice,
        out: &mut Vec<Vec<usize>>,
    ) {
        if k == jis.len() {
            let f: Vec<usize> = (0..l1.len())
                .map(|x| {
                    l2.join_all(
                        jis.iter().zip(assign.iter()).filter(|(&j, _)| l1.leq(j, x)).map(|(_, &v)| v),
                    )
                })
                .collect();
            if l1.preserves_joins(l2, &f) {
                out.push(f);
            }
            return;
        }
        for v in 0..l2.len() {
            let monotone = (0..k).all(|p| {
                (!l1.leq(jis[p], jis[k]) || l2.leq(assign[p], v))
                    && (!l1.leq(jis[k], jis[p]) || l2.leq(v, assign[p]))
            });
            if monotone {
                assign[k] = v;
                rec(k + 1, jis, assign, l1, l2, out);
            }
        }
    }
    rec(0, &jis, &mut assign, l1, l2, &mut out);
    out.sort();
    out.dedup();
    out
}

pub(crate) fn labels<S: AsRef<str>>(names: &[S]) -> Vec<String> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}
