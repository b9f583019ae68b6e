//! Seeded random instances drawn from curated families.
//!
//! Random tables almost never satisfy the quantale laws, so quantales come
//! from a fixed family (the two-element quantale, min-chains, Łukasiewicz
//! chains, the three-chain with a non-top unit, and `2 x 2`). Modules are a
//! quantale acting on itself, small powers, and submodules of powers
//! generated by a few random tuples. Operators `F` and homomorphisms are
//! drawn uniformly from full enumerations.

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::frames::{FrameHom, VFrame};
use crate::fsemilattice::FSemilattice;
use crate::lattice::{labels, FinLattice};
use crate::quantale::Quantale;
use crate::vmodule::{enumerate_module_homs, Module, Power, VModule};

/// Deterministic generator seeded per instance.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// The two-element quantale with `⊗ = ∧`.
pub fn two() -> Quantale {
    min_chain(2)
}

/// The chain `0 < ... < n-1` with `⊗ = min` and unit top.
pub fn min_chain(n: usize) -> Quantale {
    let l = FinLattice::chain((0..n).map(|i| i.to_string()).collect());
    let t = (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect();
    Quantale::validate(l, t, n - 1).expect("min-chains are quantales")
}

/// The chain `0 < ... < n-1` with truncated addition `max(0, a + b - (n-1))`.
pub fn lukasiewicz(n: usize) -> Quantale {
    let l = FinLattice::chain((0..n).map(|i| i.to_string()).collect());
    let t = (0..n).map(|a| (0..n).map(|b| (a + b).saturating_sub(n - 1)).collect()).collect();
    Quantale::validate(l, t, n - 1).expect("Łukasiewicz chains are quantales")
}

/// Pointwise product of two quantales.
pub fn product(p: &Quantale, q: &Quantale) -> Quantale {
    let (n, m) = (p.len(), q.len());
    let names = (0..n * m).map(|k| format!("{}{}", p.label(k / m), q.label(k % m))).collect();
    let l = FinLattice::from_order(names, |a, b| p.leq(a / m, b / m) && q.leq(a % m, b % m))
        .expect("products of lattices are lattices");
    let t = (0..n * m)
        .map(|a| (0..n * m).map(|b| p.tensor(a / m, b / m) * m + q.tensor(a % m, b % m)).collect())
        .collect();
    Quantale::validate(l, t, p.unit() * m + q.unit()).expect("products of quantales are quantales")
}

/// Binary relations on `k` points under union and relational composition,
/// with the identity as unit. Not commutative for `k >= 2`.
pub fn relations(k: usize) -> Quantale {
    let n = 1usize << (k * k);
    let names = (0..n).map(|s| format!("{s:0w$b}", w = k * k)).collect();
    let l = FinLattice::from_order(names, |a, b| a & !b == 0).expect("powerset");
    let bit = |i: usize, j: usize| 1usize << (i * k + j);
    let comp = |a: usize, b: usize| {
        let mut out = 0;
        for i in 0..k {
            for j in 0..k {
                for m in 0..k {
                    if a & bit(i, m) != 0 && b & bit(m, j) != 0 {
                        out |= bit(i, j);
                    }
                }
            }
        }
        out
    };
    let t = (0..n).map(|a| (0..n).map(|b| comp(a, b)).collect()).collect();
    let unit = (0..k).fold(0, |acc, i| acc | bit(i, i));
    Quantale::validate(l, t, unit).expect("relations form a quantale")
}

/// The curated family, each with a short name.
pub fn curated() -> Vec<(&'static str, Quantale)> {
    vec![
        ("2", two()),
        ("min3", min_chain(3)),
        ("min4", min_chain(4)),
        ("luk3", lukasiewicz(3)),
        ("luk4", lukasiewicz(4)),
        ("v3", (*crate::example::v3()).clone()),
        ("2x2", product(&two(), &two())),
    ]
}

/// Picks a curated quantale.
pub fn random_quantale(rng: &mut impl Rng) -> (&'static str, Arc<Quantale>) {
    let mut all = curated();
    let k = rng.gen_range(0..all.len());
    let (name, q) = all.swap_remove(k);
    (name, Arc::new(q))
}

/// The join- and action-closed subset generated by `seeds`, with bottom.
pub fn closure_in<M: Module>(m: &M, seeds: &[M::Elem], cap: usize) -> Option<Vec<M::Elem>> {
    let q = m.quantale().clone();
    let mut set: BTreeSet<M::Elem> = seeds.iter().cloned().collect();
    set.insert(m.bottom());
    loop {
        let cur: Vec<M::Elem> = set.iter().cloned().collect();
        let mut grew = false;
        for a in &cur {
            for b in &cur {
                grew |= set.insert(m.join(a, b));
            }
            for v in 0..q.len() {
                grew |= set.insert(m.act(v, a));
            }
        }
        if set.len() > cap {
            return None;
        }
        if !grew {
            return Some(set.into_iter().collect());
        }
    }
}

/// A submodule as a table-backed module with the induced order.
pub fn submodule<M: Module>(m: &M, elems: &[M::Elem]) -> Result<VModule> {
    let idx = |e: &M::Elem| elems.iter().position(|x| x == e).expect("closed subset");
    let names = elems.iter().map(|e| m.show(e)).collect();
    let carrier = FinLattice::from_order(names, |a, b| m.leq(&elems[a], &elems[b]))?;
    let q = m.quantale().clone();
    let action = (0..q.len()).map(|v| elems.iter().map(|e| idx(&m.act(v, e))).collect()).collect();
    VModule::validate(q, carrier, action)
}

/// A random module with at most `max` elements.
pub fn random_module(q: &Arc<Quantale>, max: usize, rng: &mut impl Rng) -> VModule {
    loop {
        let kind = rng.gen_range(0..4);
        if kind == 0 && q.len() <= max {
            return VModule::regular(q.clone());
        }
        if kind == 1 && q.len() * q.len() <= max {
            let p = Power::new(VModule::regular(q.clone()), 2);
            let elems = p.elements(max).expect("small power");
            return submodule(&p, &elems).expect("powers are modules");
        }
        let k = rng.gen_range(1..=3);
        let p = Power::new(VModule::regular(q.clone()), k);
        let all = p.elements(1 << 12).expect("small power");
        let seeds: Vec<_> = (0..rng.gen_range(1..=2)).map(|_| all.choose(rng).unwrap().clone()).collect();
        if let Some(elems) = closure_in(&p, &seeds, max) {
            if elems.len() >= 2 || rng.gen_bool(0.1) {
                return submodule(&p, &elems).expect("closed subsets are submodules");
            }
        }
    }
}

/// A lattice as a module over the two-element quantale `q`, where `0`
/// acts as the constant bottom map and `1` as the identity.
pub fn boolean_module(q: &Arc<Quantale>, l: FinLattice) -> VModule {
    assert_eq!(q.len(), 2, "the two-element quantale");
    let n = l.len();
    let action = vec![vec![l.bottom(); n], (0..n).collect()];
    VModule::validate(q.clone(), l, action).expect("every lattice is a module over 2")
}

/// `(A, F)` with `F` drawn from all module endomorphisms of `A`.
pub fn random_fsemilattice(a: &VModule, rng: &mut impl Rng) -> FSemilattice {
    let endos = enumerate_module_homs(a, a).expect("same base");
    let f = endos.choose(rng).expect("identity exists").values.clone();
    FSemilattice::validate(a.clone(), f).expect("endomorphisms are valid operators")
}

/// A frame with `n` points and uniform random `r`.
pub fn random_frame(q: &Arc<Quantale>, n: usize, rng: &mut impl Rng) -> VFrame {
    let r = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..q.len())).collect()).collect();
    VFrame::unlabeled(q.clone(), r).expect("valid indices")
}

/// A frame homomorphism out of `j1` into a fresh frame with `n2` points,
/// whose relation is raised where needed.
pub fn random_frame_hom(j1: &Arc<VFrame>, n2: usize, rng: &mut impl Rng) -> FrameHom {
    let q = j1.quantale().clone();
    let map: Vec<usize> = (0..j1.len()).map(|_| rng.gen_range(0..n2)).collect();
    let mut r: Vec<Vec<usize>> = (0..n2).map(|_| (0..n2).map(|_| rng.gen_range(0..q.len())).collect()).collect();
    for i in 0..j1.len() {
        for j in 0..j1.len() {
            let (a, b) = (map[i], map[j]);
            r[a][b] = q.join(r[a][b], j1.r(i, j));
        }
    }
    let j2 = Arc::new(VFrame::unlabeled(q, r).expect("valid indices"));
    FrameHom::new(j1.clone(), j2, map).expect("raised relation dominates")
}

/// A random lax morphism out of `h1`: a module homomorphism `f: A1 -> A2`
/// and an operator `F2` with `F2 ∘ f <= f ∘ F1`.
pub fn random_lax(h1: &FSemilattice, a2: &VModule, rng: &mut impl Rng) -> (Vec<usize>, FSemilattice) {
    let homs = enumerate_module_homs(h1.module(), a2).expect("same base");
    let f = homs.choose(rng).expect("zero map exists").values.clone();
    let endos = enumerate_module_homs(a2, a2).expect("same base");
    let ok: Vec<_> = endos
        .into_iter()
        .filter(|e| (0..h1.len()).all(|x| a2.leq(&e.values[f[x]], &f[h1.f_table()[x]])))
        .collect();
    let f2 = ok.choose(rng).expect("the zero operator qualifies").values.clone();
    (f, FSemilattice::validate(a2.clone(), f2).expect("endomorphism"))
}

/// A random module homomorphism.
pub fn random_hom(a: &VModule, b: &VModule, rng: &mut impl Rng) -> Vec<usize> {
    enumerate_module_homs(a, b).expect("same base").choose(rng).expect("zero map exists").values.clone()
}

/// A random finite lattice: a union-closed family of subsets of `0..k`
/// together with the empty set, ordered by inclusion.
pub fn random_lattice(k: usize, seeds: usize, rng: &mut impl Rng) -> FinLattice {
    let mut fam: BTreeSet<u32> = BTreeSet::new();
    fam.insert(0);
    for _ in 0..seeds {
        fam.insert(rng.gen_range(0..(1u32 << k)));
    }
    loop {
        let cur: Vec<u32> = fam.iter().copied().collect();
        let before = fam.len();
        for &a in &cur {
            for &b in &cur {
                fam.insert(a | b);
            }
        }
        if fam.len() == before {
            break;
        }
    }
    let sets: Vec<u32> = fam.into_iter().collect();
    FinLattice::from_order(labels(&sets.iter().map(|s| format!("{s:b}")).collect::<Vec<_>>()), |a, b| {
        sets[a] & !sets[b] == 0
    })
    .expect("union-closed families are lattices")
}

/// Everything one adjunction and naturality run needs.
#[derive(Clone, Debug)]
pub struct Instance {
    pub seed: u64,
    pub quantale_name: &'static str,
    pub v: Arc<Quantale>,
    pub j1: Arc<VFrame>,
    pub j2: Arc<VFrame>,
    /// Frame homomorphism `J1 -> J2`.
    pub t: FrameHom,
    pub h1: FSemilattice,
    pub h2: FSemilattice,
    /// Lax morphism `H1 -> H2`.
    pub f: Vec<usize>,
    pub l1: VModule,
    pub l2: VModule,
    /// Module homomorphism `L1 -> L2`.
    pub g: Vec<usize>,
}

/// Bounds for generated instances.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub max_module: usize,
    pub max_points: usize,
}

impl Default for Shape {
    fn default() -> Self {
        Self { max_module: 5, max_points: 3 }
    }
}

impl Instance {
    /// Draws one instance from `rng`.
    pub fn draw(seed: u64, shape: Shape, rng: &mut impl Rng) -> Self {
        let (quantale_name, v) = random_quantale(rng);
        let j1 = Arc::new(random_frame(&v, rng.gen_range(1..=shape.max_points), rng));
        let t = random_frame_hom(&j1, rng.gen_range(1..=shape.max_points), rng);
        let a1 = random_module(&v, shape.max_module, rng);
        let h1 = random_fsemilattice(&a1, rng);
        let a2 = random_module(&v, shape.max_module, rng);
        let (f, h2) = random_lax(&h1, &a2, rng);
        let l1 = random_module(&v, shape.max_module, rng);
        let l2 = random_module(&v, shape.max_module, rng);
        let g = random_hom(&l1, &l2, rng);
        Self { seed, quantale_name, v, j1, j2: t.target.clone(), t, h1, h2, f, l1, l2, g }
    }

    pub fn describe(&self) -> String {
        format!(
            "seed={} V={} |T1|={} |T2|={} |A1|={} |A2|={} |L1|={} |L2|={}",
            self.seed,
            self.quantale_name,
            self.j1.len(),
            self.j2.len(),
            self.h1.len(),
            self.h2.len(),
            self.l1.len(),
            self.l2.len()
        )
    }
}
