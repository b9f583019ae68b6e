//! Prenuclei, nuclei, nuclear quotients and congruences on an enumerated
//! F-semilattice.
//!
//! Operators are value tables over the host's element list (`Indexed`), so
//! the same code serves table-backed modules and powers.

use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fsemilattice::{FModule, FSemilattice};
use crate::lattice::FinLattice;
use crate::vmodule::{Indexed, Module, VModule};

/// An endomap of the host, as positions in `host.elems`.
pub type Endo = Vec<usize>;

fn show<M: Module>(h: &Indexed<M>, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| h.module.show(&h.elems[x])).collect()
}

fn join_i<M: Module>(h: &Indexed<M>, a: usize, b: usize) -> usize {
    h.idx(&h.module.join(&h.elems[a], &h.elems[b]))
}

fn leq_i<M: Module>(h: &Indexed<M>, a: usize, b: usize) -> bool {
    h.module.leq(&h.elems[a], &h.elems[b])
}

/// Checks (N1)–(N4): inflationary, monotone, `v*j(a) <= j(v*a)` and
/// `F(j(a)) <= j(F(a))`.
///
/// Monotonicity is checked on the steps `a <= a ∨ g` for generators `g`;
/// every `a <= b` is a chain of such steps.
pub fn check_prenucleus<M: FModule>(h: &Indexed<M>, j: &[usize]) -> Result<()> {
    let m = &h.module;
    let gens: Vec<usize> = m.generators().iter().map(|g| h.idx(g)).collect();
    let err = |law, xs: &[usize]| Err(Error::NotAPrenucleus { law, witness: show(h, xs) });
    for a in 0..h.len() {
        if !leq_i(h, a, j[a]) {
            return err("inflationary", &[a]);
        }
    }
    for a in 0..h.len() {
        for &g in &gens {
            if !leq_i(h, j[a], j[join_i(h, a, g)]) {
                return err("monotone", &[a, g]);
            }
        }
    }
    for a in 0..h.len() {
        let ja = &h.elems[j[a]];
        for v in 0..m.quantale().len() {
            let va = h.idx(&m.act(v, &h.elems[a]));
            if !m.leq(&m.act(v, ja), &h.elems[j[va]]) {
                return Err(Error::NotAPrenucleus {
                    law: "action",
                    witness: vec![m.quantale().label(v).to_string(), m.show(&h.elems[a])],
                });
            }
        }
        let fa = h.idx(&m.f(&h.elems[a]));
        if !m.leq(&m.f(ja), &h.elems[j[fa]]) {
            return err("F", &[a]);
        }
    }
    Ok(())
}

pub fn is_prenucleus<M: FModule>(h: &Indexed<M>, j: &[usize]) -> bool {
    check_prenucleus(h, j).is_ok()
}

/// (N1)–(N4) plus idempotence.
pub fn check_nucleus<M: FModule>(h: &Indexed<M>, j: &[usize]) -> Result<()> {
    check_prenucleus(h, j).map_err(|e| match e {
        Error::NotAPrenucleus { law, witness } => Error::NotANucleus { law, witness },
        other => other,
    })?;
    if let Some(a) = (0..h.len()).find(|&a| j[j[a]] != j[a]) {
        return Err(Error::NotANucleus { law: "idempotent", witness: show(h, &[a]) });
    }
    Ok(())
}

pub fn is_nucleus<M: FModule>(h: &Indexed<M>, j: &[usize]) -> bool {
    check_nucleus(h, j).is_ok()
}

/// Closes a pair set under `F x F` and under `(v*c, v*d)`.
pub fn saturate_pairs<M: FModule>(h: &Indexed<M>, x: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let m = &h.module;
    let mut seen: BTreeSet<(usize, usize)> = x.iter().copied().collect();
    let mut todo: Vec<(usize, usize)> = seen.iter().copied().collect();
    while let Some((c, d)) = todo.pop() {
        let (ec, ed) = (&h.elems[c], &h.elems[d]);
        let mut next = vec![(h.idx(&m.f(ec)), h.idx(&m.f(ed)))];
        for v in 0..m.quantale().len() {
            next.push((h.idx(&m.act(v, ec)), h.idx(&m.act(v, ed))));
        }
        for p in next {
            if seen.insert(p) {
                todo.push(p);
            }
        }
    }
    seen.into_iter().collect()
}

/// `j[X](a) = a ∨ ⋁{c | d <= a, (c,d) ∈ X or (d,c) ∈ X}` after saturating `X`.
pub fn prenucleus_from_pairs<M: FModule>(h: &Indexed<M>, x: &[(usize, usize)]) -> Endo {
    let sat = saturate_pairs(h, x);
    let sym: Vec<(usize, usize)> = sat.iter().flat_map(|&(c, d)| [(c, d), (d, c)]).collect();
    (0..h.len())
        .map(|a| {
            sym.iter()
                .filter(|&&(_, d)| leq_i(h, d, a))
                .fold(a, |acc, &(c, _)| join_i(h, acc, c))
        })
        .collect()
}

/// Least fixed point above each element by iterating `j` until stable.
pub fn iterate_to_fixpoint(j: &[usize]) -> Endo {
    (0..j.len())
        .map(|mut a| {
            while j[a] != a {
                a = j[a];
            }
            a
        })
        .collect()
}

/// `n(a) = ⋀{x | j(x) = x, a <= x}`.
pub fn meet_of_fixed_points<M: Module>(h: &Indexed<M>, j: &[usize]) -> Endo {
    let fixed: Vec<usize> = (0..h.len()).filter(|&x| j[x] == x).collect();
    (0..h.len())
        .map(|a| {
            let m = fixed
                .iter()
                .filter(|&&x| leq_i(h, a, x))
                .fold(h.module.top(), |acc, &x| h.module.meet(&acc, &h.elems[x]));
            h.idx(&m)
        })
        .collect()
}

/// The nucleus `n(j)` generated by a prenucleus, computed by iteration and
/// by meets of fixed points; the two must agree.
pub fn closure_of<M: FModule>(h: &Indexed<M>, j: &[usize]) -> Result<Endo> {
    check_prenucleus(h, j)?;
    let it = iterate_to_fixpoint(j);
    let mt = meet_of_fixed_points(h, j);
    if let Some(a) = (0..h.len()).find(|&a| it[a] != mt[a]) {
        return Err(Error::Invariant(format!(
            "closure strategies disagree at {}",
            h.module.show(&h.elems[a])
        )));
    }
    Ok(it)
}

/// The nuclear quotient `A_j` as a table-backed F-semilattice.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub fsl: FSemilattice,
    /// Host positions of the fixed points, in host order.
    pub fixed: Vec<usize>,
    /// For every host element, its image in the quotient carrier.
    pub projection: Vec<usize>,
}

/// Fixed points of `j` with `⋁ = j∘⋁`, `* = j∘*` and `F = j∘F`.
pub fn quotient<M: FModule>(h: &Indexed<M>, j: &[usize]) -> Result<Quotient> {
    check_nucleus(h, j)?;
    let m = &h.module;
    let fixed: Vec<usize> = (0..h.len()).filter(|&x| j[x] == x).collect();
    let pos: std::collections::HashMap<usize, usize> = fixed.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let labels = fixed.iter().map(|&x| m.show(&h.elems[x])).collect();
    let carrier = FinLattice::from_order(labels, |a, b| leq_i(h, fixed[a], fixed[b]))?;
    let q = m.quantale().clone();
    let action = (0..q.len())
        .map(|v| fixed.iter().map(|&x| pos[&j[h.idx(&m.act(v, &h.elems[x]))]]).collect())
        .collect();
    let module = VModule::validate(q, carrier, action)?;
    let f = fixed.iter().map(|&x| pos[&j[h.idx(&m.f(&h.elems[x]))]]).collect();
    let fsl = FSemilattice::validate(module, f)?;
    let projection = (0..h.len()).map(|a| pos[&j[a]]).collect();
    Ok(Quotient { fsl, fixed, projection })
}

/// Factors a map `g` (values aligned with `h.elems`) that identifies every
/// pair of the saturated `X` through `n(j[X])`.
///
/// Returns `n(j[X])` and the restriction of `g` to its fixed points.
pub fn factor_through<M: FModule, B: Module>(
    h: &Indexed<M>,
    b: &B,
    g: &[B::Elem],
    x: &[(usize, usize)],
) -> Result<(Endo, Vec<(usize, B::Elem)>)> {
    for (c, d) in saturate_pairs(h, x) {
        if g[c] != g[d] {
            return Err(Error::GDoesNotRespectX { witness: show(h, &[c, d]) });
        }
    }
    let n = closure_of(h, &prenucleus_from_pairs(h, x))?;
    let gbar: Vec<(usize, B::Elem)> =
        (0..h.len()).filter(|&a| n[a] == a).map(|a| (a, g[a].clone())).collect();
    let lookup: std::collections::HashMap<usize, &B::Elem> = gbar.iter().map(|(a, e)| (*a, e)).collect();
    if let Some(a) = (0..h.len()).find(|&a| *lookup[&n[a]] != g[a]) {
        return Err(Error::Invariant(format!(
            "g differs from its factorization at {} ({} vs {})",
            h.module.show(&h.elems[a]),
            b.show(&g[a]),
            b.show(lookup[&n[a]])
        )));
    }
    Ok((n, gbar))
}

/// A partition of the host carrier, by class id per element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub class: Vec<usize>,
}

impl Congruence {
    /// Normalizes class ids to first-occurrence order.
    pub fn new(class: Vec<usize>) -> Self {
        let mut ids = std::collections::HashMap::new();
        let class = class
            .iter()
            .map(|c| {
                let k = ids.len();
                *ids.entry(*c).or_insert(k)
            })
            .collect();
        Self { class }
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class[a] == self.class[b]
    }

    pub fn classes(&self) -> usize {
        self.class.iter().copied().collect::<HashSet<_>>().len()
    }
}

/// The kernel of `j`.
pub fn congruence_from_nucleus(j: &[usize]) -> Congruence {
    Congruence::new(j.to_vec())
}

/// Checks join, action and `F` compatibility against one representative
/// per class; symmetry and transitivity extend it to all related pairs.
pub fn check_congruence<M: FModule>(h: &Indexed<M>, t: &Congruence) -> Result<()> {
    let m = &h.module;
    let gens: Vec<usize> = m.generators().iter().map(|g| h.idx(g)).collect();
    let mut rep = std::collections::HashMap::new();
    for a in 0..h.len() {
        rep.entry(t.class[a]).or_insert(a);
    }
    for a in 0..h.len() {
        let r = rep[&t.class[a]];
        let err = |law| Err(Error::NotACongruence { law, witness: show(h, &[a, r]) });
        for &g in &gens {
            if !t.related(join_i(h, a, g), join_i(h, r, g)) {
                return err("join");
            }
        }
        for v in 0..m.quantale().len() {
            if !t.related(h.idx(&m.act(v, &h.elems[a])), h.idx(&m.act(v, &h.elems[r]))) {
                return err("action");
            }
        }
        if !t.related(h.idx(&m.f(&h.elems[a])), h.idx(&m.f(&h.elems[r]))) {
            return err("F");
        }
    }
    Ok(())
}

/// `j_θ(x) = ⋁{y | x θ y}`.
pub fn nucleus_from_congruence<M: FModule>(h: &Indexed<M>, t: &Congruence) -> Result<Endo> {
    check_congruence(h, t)?;
    let mut top: std::collections::HashMap<usize, usize> = std::collections::HashMap::new();
    for a in 0..h.len() {
        let e = top.entry(t.class[a]).or_insert(a);
        *e = join_i(h, *e, a);
    }
    Ok((0..h.len()).map(|a| top[&t.class[a]]).collect())
}

/// Wraps a table-backed F-semilattice as an indexed host.
pub fn host(h: &FSemilattice) -> Indexed<FSemilattice> {
    Indexed::from_elems(h.clone(), (0..h.len()).collect())
}

/// Shared handle for hosts used across threads.
pub type SharedHost<M> = Arc<Indexed<M>>;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example;

    #[test]
    fn identity_and_top() {
        let ex = example::Example::new();
        let h = host(&ex.h);
        let id: Endo = (0..5).collect();
        assert!(is_nucleus(&h, &id));
        assert_eq!(closure_of(&h, &id).unwrap(), id);
        let top = vec![4; 5];
        assert!(is_nucleus(&h, &top));
        let q = quotient(&h, &top).unwrap();
        assert_eq!(q.fsl.len(), 1);
        let q = quotient(&h, &id).unwrap();
        assert_eq!(q.fsl.len(), 5);
        assert_eq!(q.projection, id);
        // deflationary
        assert!(matches!(
            check_prenucleus(&h, &[0, 0, 2, 3, 4]),
            Err(Error::NotAPrenucleus { law: "inflationary", .. })
        ));
    }

    #[test]
    fn pairs_give_prenuclei() {
        let ex = example::Example::new();
        let h = host(&ex.h);
        assert_eq!(prenucleus_from_pairs(&h, &[]), (0..5).collect::<Vec<_>>());
        assert_eq!(prenucleus_from_pairs(&h, &[(4, 0)]), vec![4; 5]);
        let j = prenucleus_from_pairs(&h, &[(2, 0)]);
        assert!(is_prenucleus(&h, &j));
        let n = closure_of(&h, &j).unwrap();
        assert!(is_nucleus(&h, &n));
    }

    #[test]
    fn congruence_round_trip() {
        let ex = example::Example::new();
        let h = host(&ex.h);
        for x in [vec![], vec![(4, 0)], vec![(1, 0)], vec![(3, 2)]] {
            let n = closure_of(&h, &prenucleus_from_pairs(&h, &x)).unwrap();
            let t = congruence_from_nucleus(&n);
            assert_eq!(nucleus_from_congruence(&h, &t).unwrap(), n);
        }
        let id: Endo = (0..5).collect();
        assert_eq!(congruence_from_nucleus(&id).classes(), 5);
        // {a, b} alone is not join compatible
        let bad = Congruence::new(vec![0, 1, 1, 2, 3]);
        assert!(nucleus_from_congruence(&h, &bad).is_err());
    }

    #[test]
    fn factorization() {
        let ex = example::Example::new();
        let h = host(&ex.h);
        let g = vec![0usize; 5];
        let (n, gbar) = factor_through(&h, &ex.l, &g, &[(4, 0)]).unwrap();
        assert_eq!(n, vec![4; 5]);
        assert_eq!(gbar, vec![(4, 0)]);
        let f7 = vec![0, 0, 1, 1, 1];
        assert!(factor_through(&h, &ex.l, &f7, &[(2, 0)]).is_err());
    }
}
