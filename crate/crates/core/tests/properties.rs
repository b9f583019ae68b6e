//! Algebraic invariants as property tests over seeded random instances.
//!
//! Each strategy draws a seed and builds a valid structure from it with the
//! library generators, so shrinking moves toward smaller seeds and sizes.

use std::collections::BTreeSet;
use std::sync::Arc;

use proptest::prelude::*;
use rand::Rng;
use tensalg::fsemilattice::{
    construct_fj, is_f_hom_table, is_lax_morphism_table, lift_hom_fj, restrict_along_frame_hom,
};
use tensalg::functors::{delta_element, generating_pairs, hom_frame, smear_element, Tensor};
use tensalg::generate::{self, curated};
use tensalg::lattice::enumerate_join_preserving_maps;
use tensalg::nucleus::{self, host};
use tensalg::vmodule::{check_module_laws, compose, enumerate_module_homs, is_module_hom, power_module};
use tensalg::{
    Exec, FModule, FSemilattice, FinLattice, FrameHom, Indexed, Limits, Module, Power, Quantale, VFrame, VModule,
};

fn config() -> ProptestConfig {
    ProptestConfig { cases: 48, ..ProptestConfig::default() }
}

fn quantale(k: usize) -> Arc<Quantale> {
    let all = curated();
    Arc::new(all[k % all.len()].1.clone())
}

// ---------------------------------------------------------------------------
// lattices

proptest! {
    #![proptest_config(config())]

    #[test]
    fn join_is_the_least_upper_bound(seed: u64, k in 1usize..=4) {
        let l = generate::random_lattice(k, 3, &mut generate::rng(seed));
        for a in 0..l.len() {
            for b in 0..l.len() {
                let ubs: Vec<usize> = (0..l.len()).filter(|&u| l.leq(a, u) && l.leq(b, u)).collect();
                let least: Vec<usize> = ubs.iter().copied().filter(|&u| ubs.iter().all(|&w| l.leq(u, w))).collect();
                prop_assert_eq!(least, vec![l.join(a, b)]);
            }
        }
    }

    #[test]
    fn meet_is_the_greatest_lower_bound(seed: u64, k in 1usize..=4) {
        let l = generate::random_lattice(k, 3, &mut generate::rng(seed));
        for a in 0..l.len() {
            for b in 0..l.len() {
                let lbs: Vec<usize> = (0..l.len()).filter(|&u| l.leq(u, a) && l.leq(u, b)).collect();
                let greatest: Vec<usize> = lbs.iter().copied().filter(|&u| lbs.iter().all(|&w| l.leq(w, u))).collect();
                prop_assert_eq!(greatest, vec![l.meet(a, b)]);
            }
        }
    }

    #[test]
    fn join_maps_preserve_every_subset_join(seed: u64) {
        let mut rng = generate::rng(seed);
        let l1 = small_lattice(&mut rng, 6);
        let l2 = small_lattice(&mut rng, 4);
        for f in enumerate_join_preserving_maps(&l1, &l2) {
            for mask in 0u32..1 << l1.len() {
                let s: Vec<usize> = (0..l1.len()).filter(|&x| mask >> x & 1 == 1).collect();
                prop_assert_eq!(f[l1.join_all(s.iter().copied())], l2.join_all(s.iter().map(|&x| f[x])));
            }
        }
    }

    #[test]
    fn join_maps_equal_the_all_functions_filter(seed: u64) {
        let mut rng = generate::rng(seed);
        let l1 = small_lattice(&mut rng, 4);
        let l2 = small_lattice(&mut rng, 4);
        let (n, m) = (l1.len(), l2.len());
        let mut brute = Vec::new();
        for code in 0..m.pow(n as u32) {
            let f: Vec<usize> = (0..n).map(|x| code / m.pow((n - 1 - x) as u32) % m).collect();
            let all_joins = (0u32..1 << n).all(|mask| {
                let s: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
                f[l1.join_all(s.iter().copied())] == l2.join_all(s.iter().map(|&x| f[x]))
            });
            if all_joins {
                brute.push(f);
            }
        }
        prop_assert_eq!(enumerate_join_preserving_maps(&l1, &l2), brute);
    }
}

fn small_lattice(rng: &mut impl Rng, max: usize) -> FinLattice {
    loop {
        let l = generate::random_lattice(3, rng.gen_range(1..=3), rng);
        if l.len() <= max {
            return l;
        }
    }
}

// ---------------------------------------------------------------------------
// quantales

/// Associativity, distributivity over binary and empty joins, and the unit
/// laws, by triple loops over the raw table.
fn quantale_oracle(l: &FinLattice, t: &[Vec<usize>], e: usize) -> bool {
    let n = l.len();
    let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| t[t[a][b]][c] == t[a][t[b][c]])));
    let dist = (0..n).all(|a| {
        t[a][l.bottom()] == l.bottom()
            && t[l.bottom()][a] == l.bottom()
            && (0..n).all(|b| {
                (0..n).all(|c| t[a][l.join(b, c)] == l.join(t[a][b], t[a][c]) && t[l.join(b, c)][a] == l.join(t[b][a], t[c][a]))
            })
    });
    let unit = (0..n).all(|a| t[e][a] == a && t[a][e] == a);
    assoc && dist && unit
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn residuation_is_right_adjoint(k in 0usize..7) {
        let q = quantale(k);
        for u in 0..q.len() {
            for w in 0..q.len() {
                let r = q.residuate(u, w);
                prop_assert!(q.leq(q.tensor(r, u), w));
                for v in 0..q.len() {
                    prop_assert_eq!(q.leq(q.tensor(v, u), w), q.leq(v, r));
                }
            }
        }
    }

    #[test]
    fn validation_matches_the_table_oracle(seed: u64, n in 2usize..=3) {
        let mut rng = generate::rng(seed);
        let labels: Vec<String> = (0..n).map(|k| k.to_string()).collect();
        let l = FinLattice::chain(labels);
        let t: Vec<Vec<usize>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(0..n)).collect()).collect();
        let e = rng.gen_range(0..n);
        let expected = quantale_oracle(&l, &t, e);
        prop_assert_eq!(Quantale::validate(l, t, e).is_ok(), expected);
    }
}

// ---------------------------------------------------------------------------
// modules

proptest! {
    #![proptest_config(config())]

    #[test]
    fn module_residuation_is_right_adjoint(seed: u64, k in 0usize..7) {
        let q = quantale(k);
        let a = generate::random_module(&q, 6, &mut generate::rng(seed));
        for x in 0..a.len() {
            for y in 0..a.len() {
                let r = a.residuate(&x, &y);
                for v in 0..q.len() {
                    prop_assert_eq!(a.leq(&a.act(v, &x), &y), q.leq(v, r));
                }
            }
        }
    }

    #[test]
    fn powers_satisfy_the_module_laws(seed: u64, k in 0usize..7, n in 1usize..=2) {
        let q = quantale(k);
        let a = generate::random_module(&q, 4, &mut generate::rng(seed));
        let p = power_module(a, n, 10_000).unwrap();
        let elems = p.elements(10_000).unwrap();
        prop_assert!(check_module_laws(&p, &elems).is_ok());
    }

    #[test]
    fn composites_of_homs_are_homs(seed: u64, k in 0usize..7) {
        let q = quantale(k);
        let mut rng = generate::rng(seed);
        let a = generate::random_module(&q, 5, &mut rng);
        let b = generate::random_module(&q, 5, &mut rng);
        let c = generate::random_module(&q, 5, &mut rng);
        let f = generate::random_hom(&a, &b, &mut rng);
        let g = generate::random_hom(&b, &c, &mut rng);
        prop_assert!(is_module_hom(&compose(&g, &f), &a, &c).unwrap());
    }
}

// ---------------------------------------------------------------------------
// frames

fn frame_chain(seed: u64, k: usize) -> (FrameHom, FrameHom, FrameHom) {
    let q = quantale(k);
    let mut rng = generate::rng(seed);
    let j1 = Arc::new(generate::random_frame(&q, rng.gen_range(1..=3), &mut rng));
    let s = generate::random_frame_hom(&j1, rng.gen_range(1..=3), &mut rng);
    let t = generate::random_frame_hom(&s.target, rng.gen_range(1..=3), &mut rng);
    let u = generate::random_frame_hom(&t.target, rng.gen_range(1..=3), &mut rng);
    (s, t, u)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn frame_hom_composition_is_associative_and_unital(seed: u64, k in 0usize..7) {
        let (s, t, u) = frame_chain(seed, k);
        let left = u.after(&t).unwrap().after(&s).unwrap();
        let right = u.after(&t.after(&s).unwrap()).unwrap();
        prop_assert_eq!(&left.map, &right.map);
        prop_assert_eq!(&FrameHom::identity(s.target.clone()).after(&s).unwrap().map, &s.map);
        prop_assert_eq!(&s.after(&FrameHom::identity(s.source.clone())).unwrap().map, &s.map);
    }

    #[test]
    fn raising_the_target_keeps_frame_homs(seed: u64, k in 0usize..7) {
        let (s, _, _) = frame_chain(seed, k);
        let q = s.target.quantale().clone();
        let mut rng = generate::rng(seed ^ 1);
        let n = s.target.len();
        let raised: Vec<Vec<usize>> = (0..n)
            .map(|a| (0..n).map(|b| q.join(s.target.r(a, b), rng.gen_range(0..q.len()))).collect())
            .collect();
        let target = Arc::new(VFrame::unlabeled(q, raised).unwrap());
        prop_assert!(FrameHom::new(s.source.clone(), target, s.map.clone()).is_ok());
    }
}

// ---------------------------------------------------------------------------
// F-semilattices and powers

proptest! {
    #![proptest_config(config())]

    #[test]
    fn fj_is_a_valid_fsemilattice(seed: u64, k in 0usize..7) {
        let q = quantale(k);
        let mut rng = generate::rng(seed);
        let a = generate::random_module(&q, 4, &mut rng);
        let j = Arc::new(generate::random_frame(&q, rng.gen_range(1..=2), &mut rng));
        let fp = construct_fj(a, j, 10_000).unwrap();
        let (m, elems) = VModule::materialize(&fp, 10_000).unwrap();
        let ix = Indexed::from_elems(fp.clone(), elems.clone());
        let ftab: Vec<usize> = elems.iter().map(|x| ix.idx(&fp.f(x))).collect();
        prop_assert!(FSemilattice::validate(m, ftab).is_ok());
    }

    #[test]
    fn power_lift_is_functorial(seed: u64, k in 0usize..7, n in 1usize..=3) {
        let q = quantale(k);
        let mut rng = generate::rng(seed);
        let a = generate::random_module(&q, 4, &mut rng);
        let b = generate::random_module(&q, 4, &mut rng);
        let c = generate::random_module(&q, 4, &mut rng);
        let f = generate::random_hom(&a, &b, &mut rng);
        let g = generate::random_hom(&b, &c, &mut rng);
        let gf = compose(&g, &f);
        for x in Power::new(a.clone(), n).elements(10_000).unwrap() {
            prop_assert_eq!(lift_hom_fj(|&y: &usize| y, &x), x.clone());
            let step = lift_hom_fj(|&y: &usize| g[y], &lift_hom_fj(|&y: &usize| f[y], &x));
            prop_assert_eq!(lift_hom_fj(|&y: &usize| gf[y], &x), step);
        }
    }

    #[test]
    fn restriction_is_contravariant(seed: u64, k in 0usize..7) {
        let (s, t, _) = frame_chain(seed, k);
        let q = s.source.quantale().clone();
        let a = generate::random_module(&q, 3, &mut generate::rng(seed));
        let ts = t.after(&s).unwrap();
        for x in Power::new(a, t.target.len()).elements(10_000).unwrap() {
            let direct = restrict_along_frame_hom(&ts, &x);
            let stepwise = restrict_along_frame_hom(&s, &restrict_along_frame_hom(&t, &x));
            prop_assert_eq!(direct, stepwise);
        }
    }

    #[test]
    fn composites_of_lax_morphisms_are_lax(seed: u64, k in 0usize..7) {
        let q = quantale(k);
        let mut rng = generate::rng(seed);
        let a1 = generate::random_module(&q, 5, &mut rng);
        let h1 = generate::random_fsemilattice(&a1, &mut rng);
        let a2 = generate::random_module(&q, 5, &mut rng);
        let (f, h2) = generate::random_lax(&h1, &a2, &mut rng);
        let a3 = generate::random_module(&q, 5, &mut rng);
        let (g, h3) = generate::random_lax(&h2, &a3, &mut rng);
        prop_assert!(is_lax_morphism_table(&f, &h1, &h2).unwrap());
        prop_assert!(is_lax_morphism_table(&compose(&g, &f), &h1, &h3).unwrap());
    }
}

// ---------------------------------------------------------------------------
// nuclei

fn random_pairs(n: usize, rng: &mut impl Rng) -> Vec<(usize, usize)> {
    (0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn nuclei_from_pairs(seed: u64, k in 0usize..7) {
        let q = quantale(k);
        let mut rng = generate::rng(seed);
        let a = generate::random_module(&q, 6, &mut rng);
        let h = generate::random_fsemilattice(&a, &mut rng);
        let ix = host(&h);
        let pairs = random_pairs(ix.len(), &mut rng);
        let pre = nucleus::prenucleus_from_pairs(&ix, &pairs);
        prop_assert!(nucleus::check_prenucleus(&ix, &pre).is_ok());
        prop_assert_eq!(nucleus::iterate_to_fixpoint(&pre), nucleus::meet_of_fixed_points(&ix, &pre));
        let nuc = nucleus::closure_of(&ix, &pre).unwrap();
        prop_assert!(nucleus::is_nucleus(&ix, &nuc));
        let fixed_nuc: BTreeSet<usize> = (0..ix.len()).filter(|&x| nuc[x] == x).collect();
        let fixed_pre: BTreeSet<usize> = (0..ix.len()).filter(|&x| pre[x] == x).collect();
        prop_assert_eq!(fixed_nuc, fixed_pre);
        for &(c, d) in &pairs {
            prop_assert_eq!(nuc[c], nuc[d]);
        }

        // the quotient validates and the surjection commutes with F
        let quo = nucleus::quotient(&ix, &nuc).unwrap();
        prop_assert!(is_f_hom_table(&quo.projection, &h, &quo.fsl).unwrap());

        // nuclei and congruences correspond
        let theta = nucleus::congruence_from_nucleus(&nuc);
        prop_assert!(nucleus::check_congruence(&ix, &theta).is_ok());
        prop_assert_eq!(nucleus::nucleus_from_congruence(&ix, &theta).unwrap(), nuc.clone());
        let back = nucleus::congruence_from_nucleus(&nucleus::nucleus_from_congruence(&ix, &theta).unwrap());
        prop_assert_eq!(back, theta);
    }
}

// ---------------------------------------------------------------------------
// tensor and hom frame

fn commutative(k: usize) -> Arc<Quantale> {
    let q = quantale(k);
    assert!(q.is_commutative());
    q
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn smear_is_a_join_of_deltas(seed: u64, k in 0usize..7) {
        let q = commutative(k);
        let mut rng = generate::rng(seed);
        let a = generate::random_module(&q, 5, &mut rng);
        let j = generate::random_frame(&q, rng.gen_range(1..=3), &mut rng);
        let p = Power::new(a.clone(), j.len());
        for x in 0..a.len() {
            for i in 0..j.len() {
                let joined = (0..j.len()).fold(p.bottom(), |acc, kk| {
                    p.join(&acc, &p.act(j.r(i, kk), &delta_element(&a, j.len(), &x, kk)))
                });
                prop_assert_eq!(smear_element(&a, &j, &x, i), joined);
            }
        }
    }

    #[test]
    fn tensor_collapses_the_generating_pairs(seed: u64, k in 0usize..7) {
        let q = commutative(k);
        let mut rng = generate::rng(seed);
        let a = generate::random_module(&q, 4, &mut rng);
        let h = generate::random_fsemilattice(&a, &mut rng);
        let j = Arc::new(generate::random_frame(&q, rng.gen_range(1..=2), &mut rng));
        let t = Tensor::new(j.clone(), h.clone()).unwrap();
        let elems: Vec<usize> = (0..h.len()).collect();
        for (c, d) in generating_pairs(&j, &h, &elems) {
            prop_assert_eq!(t.nucleus(&c), t.nucleus(&d));
        }
    }

    #[test]
    fn hom_frame_points_are_all_homs(seed: u64, k in 0usize..7) {
        let q = commutative(k);
        let mut rng = generate::rng(seed);
        let a = generate::random_module(&q, 5, &mut rng);
        let h = generate::random_fsemilattice(&a, &mut rng);
        let l = generate::random_module(&q, 4, &mut rng);
        let hf = hom_frame(h.clone(), l.clone(), &Limits::default(), Exec::Sequential).unwrap();
        let brute: Vec<Vec<usize>> = enumerate_module_homs(&a, &l).unwrap().into_iter().map(|m| m.values).collect();
        prop_assert_eq!(&hf.points, &brute);
        for (x, alpha) in hf.points.iter().enumerate() {
            for (y, beta) in hf.points.iter().enumerate() {
                prop_assert_eq!(hf.frame.r(x, y), hf.r_full(alpha, beta));
            }
        }
    }
}
