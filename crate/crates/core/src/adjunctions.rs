//! Units and counits of the three adjunctions, and mechanical checks of
//! their triangle identities and naturality squares.
//!
//! * `J⊗-` from F-semilattices with lax morphisms to modules is left adjoint
//!   to `(-)^J`, with unit `η` and counit `ε`.
//! * `-⊗H` from frames to modules is left adjoint to `J[H,-]`, with unit `φ`
//!   and counit `ψ`.
//! * `L^(-)` and `J[-,L]` are adjoint on the right, with units `ν` and `μ`.
//!
//! Every check recomputes both sides as value tables over the relevant
//! carrier and compares them entry by entry. A failing check carries the
//! first element where the tables differ together with both values.
//! Naturality squares whose domain is too large to enumerate are compared
//! on a join-dense generating set instead, which is exact because both sides
//! preserve joins; the check name records when that happens.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::frames::VFrame;
use crate::fsemilattice::{
    construct_fj, is_f_hom, is_lax_morphism, restrict_along_frame_hom, FModule, FSemilattice, FramePower,
    IdentityF,
};
use crate::functors::{
    forward_map, generating_pairs, hom_frame, hom_frame_contravariant, hom_frame_covariant, hom_frame_of_power,
    tensor, tensor_frame_hom, tensor_lax_hom, HomFrame, Tensor,
};
use crate::generate::{self, Instance, Shape};
use crate::nucleus;
use crate::par::{self, Exec};
use crate::vmodule::{check_module_laws, enumerate_homs, enumerate_module_homs, hom_defect, Indexed, Module, Power, VModule};
use crate::Limits;

// ---------------------------------------------------------------------------
// Reports

/// What a check is evidence for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Category {
    Triangle,
    Naturality,
    Validator,
    HomOracle,
    Nucleus,
}

/// One pointwise comparison or validator run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub category: Category,
    pub name: String,
    pub instance: String,
    pub passed: bool,
    /// First element where the two sides differ, with both values.
    pub witness: Option<String>,
}

impl Check {
    fn pass(category: Category, name: impl Into<String>, instance: &str) -> Self {
        Self { category, name: name.into(), instance: instance.to_string(), passed: true, witness: None }
    }

    fn fail(category: Category, name: impl Into<String>, instance: &str, witness: String) -> Self {
        Self { category, name: name.into(), instance: instance.to_string(), passed: false, witness: Some(witness) }
    }

    fn from_result(category: Category, name: impl Into<String>, instance: &str, r: Result<()>) -> Self {
        match r {
            Ok(()) => Self::pass(category, name, instance),
            Err(e) => Self::fail(category, name, instance, e.to_string()),
        }
    }
}

/// Totals over a report.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub instances: usize,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    /// Draws rejected for exceeding a size cap and replaced.
    pub resampled: usize,
}

/// The outcome of a batch of checks.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub seed: Option<u64>,
    pub checks: Vec<Check>,
    pub counts: Counts,
    /// Instance descriptions and resampling reasons.
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new(suite: &str, seed: Option<u64>, checks: Vec<Check>) -> Self {
        let mut r = Self { suite: suite.to_string(), seed, checks, ..Self::default() };
        r.recount();
        r
    }

    fn recount(&mut self) {
        self.counts.checks = self.checks.len();
        self.counts.passed = self.checks.iter().filter(|c| c.passed).count();
        self.counts.failed = self.counts.checks - self.counts.passed;
    }

    /// Appends another report, keeping order.
    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
        self.counts.instances += other.counts.instances;
        self.counts.resampled += other.counts.resampled;
        self.recount();
    }

    pub fn all_passed(&self) -> bool {
        self.counts.failed == 0
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    /// Checks of one category.
    pub fn of(&self, category: Category) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(move |c| c.category == category)
    }
}

/// Compares two value tables over `xs`, reporting the first difference.
fn compare<X, E: PartialEq + std::fmt::Debug>(
    category: Category,
    name: &str,
    instance: &str,
    xs: &[X],
    show: impl Fn(&X) -> String,
    lhs: impl Fn(&X) -> E,
    rhs: impl Fn(&X) -> E,
) -> Check {
    for x in xs {
        let (l, r) = (lhs(x), rhs(x));
        if l != r {
            return Check::fail(category, name, instance, format!("at {}: left {l:?}, right {r:?}", show(x)));
        }
    }
    Check::pass(category, name, instance)
}

fn describe_defect(d: crate::vmodule::HomDefect) -> String {
    let (law, w) = crate::fsemilattice::describe(d);
    format!("{law} fails at {}", w.join(", "))
}

/// Largest tensor carrier enumerated for a square or validator before
/// falling back to generators.
pub const ENUMERATION_CAP: usize = 1024;

/// Value tables over the whole carrier when it has at most `cap` elements,
/// otherwise over a join-dense generating set (flagged by the `bool`).
fn carrier_or_generators<M: Module>(m: &M, cap: usize) -> (Vec<M::Elem>, bool) {
    match m.elements(cap) {
        Ok(e) => (e, false),
        Err(_) => {
            let mut g = m.generators();
            g.push(m.bottom());
            (g, true)
        }
    }
}

fn on_generators(name: &str, gens: bool) -> String {
    if gens {
        format!("{name} (on generators)")
    } else {
        name.to_string()
    }
}

// ---------------------------------------------------------------------------
// The six transformations

/// `(η_H(x))(i) = n(j[J,H])(x_{i=})`, an element of `(J⊗H)^J`.
pub fn unit_eta<H: FModule>(t: &Tensor<H>, x: &H::Elem) -> Vec<Vec<H::Elem>> {
    (0..t.frame.len()).map(|i| t.nucleus(&t.delta(x, i))).collect()
}

/// `e_L(x̄) = ⋁_i x̄(i)(i)`. On fixed points of `n(j[J,L^J])` this is `ε_L`.
pub fn counit_eps<M: Module>(l: &M, xbar: &[Vec<M::Elem>]) -> M::Elem {
    l.join_all(xbar.iter().enumerate().map(|(i, x)| &x[i]))
}

/// `φ_J(i)`: the homomorphism `x ↦ n(j[J,H])(x_{i=})`, as values over `dom`.
pub fn unit_phi<H: FModule>(t: &Tensor<H>, dom: &Indexed<H>, i: usize) -> Vec<Vec<H::Elem>> {
    dom.elems.iter().map(|x| t.nucleus(&t.delta(x, i))).collect()
}

/// `f_L(y) = ⋁_α α(y(α))`. On fixed points of `n(j[J[H,L],H])` this is `ψ_L`.
pub fn counit_psi<D: FModule, C: Module>(hf: &HomFrame<D, C>, y: &[D::Elem]) -> C::Elem {
    hf.target.join_all(hf.points.iter().zip(y).map(|(a, x)| &a[hf.dom.idx(x)]))
}

/// `ν_J(i)`: evaluation at `i`, as values over the listed tuples.
pub fn unit_nu<E: Clone>(tuples: &[Vec<E>], i: usize) -> Vec<E> {
    tuples.iter().map(|x| x[i].clone()).collect()
}

/// `(μ_H(x))(α) = α(x)`, an element of `L^{J[H,L]}`.
pub fn unit_mu<D: FModule, C: Module>(hf: &HomFrame<D, C>, x: &D::Elem) -> Vec<C::Elem> {
    let k = hf.dom.idx(x);
    hf.points.iter().map(|a| a[k].clone()).collect()
}

/// `r(α,β) = ⋀_g (β(g) -> α(F(g)))` for every pair of the given
/// homomorphisms `D -> C`, over the generators of `D`.
pub fn relation_of_maps<D: FModule, C: Module>(d: &D, c: &C, maps: &[&dyn Fn(&D::Elem) -> C::Elem]) -> Vec<Vec<usize>> {
    let gens = d.generators();
    let fgens: Vec<D::Elem> = gens.iter().map(|g| d.f(g)).collect();
    let on_g: Vec<Vec<C::Elem>> = maps.iter().map(|m| gens.iter().map(m).collect()).collect();
    let on_fg: Vec<Vec<C::Elem>> = maps.iter().map(|m| fgens.iter().map(m).collect()).collect();
    let q = d.quantale();
    (0..maps.len())
        .map(|a| {
            (0..maps.len())
                .map(|b| (0..gens.len()).fold(q.top(), |acc, k| q.meet(acc, c.residuate(&on_g[b][k], &on_fg[a][k]))))
                .collect()
        })
        .collect()
}

fn frame_hom_check(category: Category, name: &str, inst: &str, map: &[usize], src: &VFrame, r2: &[Vec<usize>]) -> Check {
    let q = src.quantale();
    for i in 0..src.len() {
        for j in 0..src.len() {
            let s = r2[map[i]][map[j]];
            if !q.leq(src.r(i, j), s) {
                return Check::fail(
                    category,
                    name,
                    inst,
                    format!("r({i},{j}) = {} is not below {}", q.label(src.r(i, j)), q.label(s)),
                );
            }
        }
    }
    Check::pass(category, name, inst)
}

/// `e` factors through the nucleus of `J⊗H` iff it identifies every
/// generating pair; checked alongside the homomorphism laws of `e` on `A^T`.
fn factorization_check<H: FModule, C: Module>(
    name: &str,
    inst: &str,
    t: &Tensor<H>,
    base: &[H::Elem],
    c: &C,
    e: impl Fn(&[H::Elem]) -> C::Elem,
) -> Check {
    for (p, d) in generating_pairs(&t.frame, &t.h, base) {
        let (ep, ed) = (e(&p), e(&d));
        if ep != ed {
            return Check::fail(
                Category::Validator,
                name,
                inst,
                format!("pair ({}, {}) maps to {} and {}", t.show(&p), t.show(&d), c.show(&ep), c.show(&ed)),
            );
        }
    }
    Check::pass(Category::Validator, name, inst)
}

// ---------------------------------------------------------------------------
// Triangle identities

/// `ε_{J⊗H} ∘ (J⊗η_H) = id` on `J⊗H` and `(ε_L)^J ∘ η_{L^J} = id` on `L^J`,
/// plus validators for `η_H` and `ε_L`.
pub fn check_triangles_adjunction1(
    j: &Arc<VFrame>,
    h: &FSemilattice,
    l: &VModule,
    inst: &str,
    limits: &Limits,
) -> Result<CheckReport> {
    let mut out = Vec::new();
    let t = Tensor::new(j.clone(), h.clone())?;
    let tel = t.elements(limits.max_power)?;
    let tt = Tensor::new(j.clone(), FramePower::new(t.clone(), j.clone())?)?;
    out.push(compare(
        Category::Triangle,
        "adjunction 1: ε_{J⊗H} ∘ (J⊗η_H) = id",
        inst,
        &tel,
        |p| t.show(p),
        |p| {
            let lifted: Vec<Vec<Vec<usize>>> = p.iter().map(|x| unit_eta(&t, x)).collect();
            counit_eps(&t, &tt.nucleus(&lifted))
        },
        |p| p.clone(),
    ));

    let lj = FramePower::new(l.clone(), j.clone())?;
    let lel = lj.elements(limits.max_power)?;
    let t1 = Tensor::new(j.clone(), lj.clone())?;
    out.push(compare(
        Category::Triangle,
        "adjunction 1: (ε_L)^J ∘ η_{L^J} = id",
        inst,
        &lel,
        |x| lj.show(x),
        |x| unit_eta(&t1, x).iter().map(|xb| counit_eps(l, xb)).collect::<Vec<_>>(),
        |x| x.clone(),
    ));

    // η_H is a lax morphism H -> (J⊗H)^J
    let hix = Indexed::new(h.clone(), limits.max_power)?;
    let tj = FramePower::new(t.clone(), j.clone())?;
    let eta: Vec<_> = hix.elems.iter().map(|x| unit_eta(&t, x)).collect();
    out.push(Check::from_result(
        Category::Validator,
        "η_H is a lax morphism",
        inst,
        is_lax_morphism(&hix, &tj, &eta).and_then(|ok| ok.then_some(()).ok_or(Error::Invariant("η_H not lax".into()))),
    ));
    // ε_L identifies the generating pairs of J⊗L^J, so e_L = ε_L ∘ n
    out.push(factorization_check("ε_L factors through the nucleus", inst, &t1, &lel, l, |x| counit_eps(l, x)));
    let (dom, gens) = carrier_or_generators(&t1, ENUMERATION_CAP);
    if !gens {
        let dix = Indexed::from_elems(t1.clone(), dom);
        let eps: Vec<usize> = dix.elems.iter().map(|x| counit_eps(l, x)).collect();
        out.push(match hom_defect(&dix, l, &eps) {
            None => Check::pass(Category::Validator, "ε_L is a module homomorphism", inst),
            Some(d) => Check::fail(Category::Validator, "ε_L is a module homomorphism", inst, describe_defect(d)),
        });
    }
    Ok(CheckReport::new("adjunction 1", None, out))
}

/// `ψ_{J⊗H} ∘ (φ_J⊗H) = id` on `J⊗H` and `J[H,ψ_L] ∘ φ_{J[H,L]} = id` on
/// `J[H,L]`, plus validators for `φ_J` and `ψ_L`.
pub fn check_triangles_adjunction2(
    j: &Arc<VFrame>,
    h: &FSemilattice,
    l: &VModule,
    inst: &str,
    limits: &Limits,
    exec: Exec,
) -> Result<CheckReport> {
    let mut out = Vec::new();
    let t = Tensor::new(j.clone(), h.clone())?;
    let tel = t.elements(limits.max_power)?;
    let hf = hom_frame(h.clone(), t.clone(), limits, exec)?;
    let phi_vals: Vec<_> = (0..j.len()).map(|i| unit_phi(&t, &hf.dom, i)).collect();
    let phi: Vec<usize> = phi_vals
        .iter()
        .map(|v| hf.point_index(v).ok_or_else(|| Error::Invariant("φ_J(i) is not a point of J[H,J⊗H]".into())))
        .collect::<Result<_>>()?;
    let tp = Tensor::new(hf.frame.clone(), h.clone())?;
    out.push(compare(
        Category::Triangle,
        "adjunction 2: ψ_{J⊗H} ∘ (φ_J⊗H) = id",
        inst,
        &tel,
        |p| t.show(p),
        |p| counit_psi(&hf, &tp.nucleus(&forward_map(&phi, hf.len(), h, p))),
        |p| p.clone(),
    ));

    let hl = hom_frame(h.clone(), l.clone(), limits, exec)?;
    let t3 = Tensor::new(hl.frame.clone(), h.clone())?;
    let alphas: Vec<usize> = (0..hl.len()).collect();
    out.push(compare(
        Category::Triangle,
        "adjunction 2: J[H,ψ_L] ∘ φ_{J[H,L]} = id",
        inst,
        &alphas,
        |a| format!("point {a}"),
        |&a| hl.dom.elems.iter().map(|x| counit_psi(&hl, &t3.nucleus(&t3.delta(x, a)))).collect::<Vec<_>>(),
        |&a| hl.points[a].clone(),
    ));

    // φ_J: each component is a module homomorphism, and r(i,k) <= r'(φ(i),φ(k))
    let bad = phi_vals.iter().enumerate().find_map(|(i, v)| hom_defect(&hf.dom, &t, v).map(|d| (i, d)));
    out.push(match bad {
        None => Check::pass(Category::Validator, "φ_J(i) are module homomorphisms", inst),
        Some((i, d)) => Check::fail(Category::Validator, "φ_J(i) are module homomorphisms", inst, format!("i={i}: {}", describe_defect(d))),
    });
    out.push(frame_hom_check(Category::Validator, "φ_J is a frame homomorphism", inst, &phi, j, hf.frame.r_table()));
    // every point of J[H,J⊗H] and J[H,L] is a homomorphism
    out.push(points_are_homs("points of J[H,J⊗H] are module homomorphisms", inst, &hf));
    out.push(points_are_homs("points of J[H,L] are module homomorphisms", inst, &hl));
    // ψ_L identifies the generating pairs of J[H,L]⊗H
    let base = hl.dom.elems.clone();
    out.push(factorization_check("ψ_L factors through the nucleus", inst, &t3, &base, l, |y| counit_psi(&hl, y)));
    Ok(CheckReport::new("adjunction 2", None, out))
}

fn points_are_homs<D: FModule, C: Module>(name: &str, inst: &str, hf: &HomFrame<D, C>) -> Check {
    for (k, p) in hf.points.iter().enumerate() {
        if let Some(d) = hom_defect(&hf.dom, &hf.target, p) {
            return Check::fail(Category::Validator, name, inst, format!("point {k}: {}", describe_defect(d)));
        }
    }
    Check::pass(Category::Validator, name, inst)
}

/// `L^{ν_J} ∘ μ_{L^J} = id` on `L^J` and `J[μ_H,L] ∘ ν_{J[H,L]} = id` on
/// `J[H,L]`, plus validators for `ν` and `μ`.
pub fn check_triangles_adjunction3(
    j: &Arc<VFrame>,
    h: &FSemilattice,
    l: &VModule,
    inst: &str,
    limits: &Limits,
    exec: Exec,
) -> Result<CheckReport> {
    let mut out = Vec::new();
    let lj = FramePower::new(l.clone(), j.clone())?;
    let hlj = hom_frame_of_power(lj.clone(), l.clone(), limits, exec)?;
    let nu_vals: Vec<Vec<usize>> = (0..j.len()).map(|i| unit_nu(&hlj.dom.elems, i)).collect();
    let nu: Vec<usize> = nu_vals
        .iter()
        .map(|v| hlj.point_index(v).ok_or_else(|| Error::Invariant("ν_J(i) is not a point of J[L^J,L]".into())))
        .collect::<Result<_>>()?;
    out.push(compare(
        Category::Triangle,
        "adjunction 3: L^{ν_J} ∘ μ_{L^J} = id",
        inst,
        &hlj.dom.elems,
        |x| lj.show(x),
        |x| {
            let m = unit_mu(&hlj, x);
            nu.iter().map(|&k| m[k]).collect::<Vec<_>>()
        },
        |x| x.clone(),
    ));

    let hl = hom_frame(h.clone(), l.clone(), limits, exec)?;
    let mu: Vec<Vec<usize>> = hl.dom.elems.iter().map(|x| unit_mu(&hl, x)).collect();
    let alphas: Vec<usize> = (0..hl.len()).collect();
    out.push(compare(
        Category::Triangle,
        "adjunction 3: J[μ_H,L] ∘ ν_{J[H,L]} = id",
        inst,
        &alphas,
        |a| format!("point {a}"),
        // ν(α) = eval_α on L^{J[H,L]}; precomposing with μ_H gives x ↦ μ_H(x)(α)
        |&a| mu.iter().map(|m| m[a]).collect::<Vec<_>>(),
        |&a| hl.points[a].clone(),
    ));

    // ν_J is a frame homomorphism into J[L^J,L]
    out.push(frame_hom_check(Category::Validator, "ν_J is a frame homomorphism", inst, &nu, j, hlj.frame.r_table()));
    // ν_{J[H,L]}: r(α,β) <= r'(eval_α, eval_β) in J[L^{J[H,L]},L]
    let lp = FramePower::new(l.clone(), hl.frame.clone())?;
    let evals: Vec<Box<dyn Fn(&Vec<usize>) -> usize>> =
        (0..hl.len()).map(|a| Box::new(move |y: &Vec<usize>| y[a]) as Box<dyn Fn(&Vec<usize>) -> usize>).collect();
    let refs: Vec<&dyn Fn(&Vec<usize>) -> usize> = evals.iter().map(|b| b.as_ref()).collect();
    let r2 = relation_of_maps(&lp, l, &refs);
    out.push(frame_hom_check(Category::Validator, "ν_{J[H,L]} is a frame homomorphism", inst, &alphas, &hl.frame, &r2));
    // μ_H and μ_{L^J} are lax morphisms
    let hix = Indexed::new(h.clone(), limits.max_power)?;
    out.push(lax_check("μ_H is a lax morphism", inst, &hix, &lp, &mu));
    let lpj = FramePower::new(l.clone(), hlj.frame.clone())?;
    let mu_lj: Vec<Vec<usize>> = hlj.dom.elems.iter().map(|x| unit_mu(&hlj, x)).collect();
    out.push(lax_check("μ_{L^J} is a lax morphism", inst, &hlj.dom, &lpj, &mu_lj));
    out.push(points_are_homs("points of J[L^J,L] are module homomorphisms", inst, &hlj));
    Ok(CheckReport::new("adjunction 3", None, out))
}

fn lax_check<H1: FModule, H2: FModule>(name: &str, inst: &str, h1: &Indexed<H1>, h2: &H2, vals: &[H2::Elem]) -> Check {
    if let Some(d) = hom_defect(h1, h2, vals) {
        return Check::fail(Category::Validator, name, inst, describe_defect(d));
    }
    for (k, a) in h1.elems.iter().enumerate() {
        let (l, r) = (h2.f(&vals[k]), &vals[h1.idx(&h1.module.f(a))]);
        if !h2.leq(&l, r) {
            return Check::fail(
                Category::Validator,
                name,
                inst,
                format!("at {}: F(f(a)) = {} is not below f(F(a)) = {}", h1.module.show(a), h2.show(&l), h2.show(r)),
            );
        }
    }
    Check::pass(Category::Validator, name, inst)
}

// ---------------------------------------------------------------------------
// Naturality

/// The six component squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Square {
    /// `(J⊗f)^J ∘ η_{H1} = η_{H2} ∘ f` for a lax morphism `f`.
    Eta,
    /// `ε_{L2} ∘ (J⊗g^J) = g ∘ ε_{L1}` for a module homomorphism `g`.
    Eps,
    /// `J[H,t⊗H] ∘ φ_{J1} = φ_{J2} ∘ t` for a frame homomorphism `t`.
    Phi,
    /// `ψ_{L2} ∘ (J[H,g]⊗H) = g ∘ ψ_{L1}` for a module homomorphism `g`.
    Psi,
    /// `J[L^t,L] ∘ ν_{J1} = ν_{J2} ∘ t` for a frame homomorphism `t`.
    Nu,
    /// `L^{J[f,L]} ∘ μ_{H1} = μ_{H2} ∘ f` for a lax morphism `f`.
    Mu,
}

impl Square {
    pub const ALL: [Square; 6] = [Square::Eta, Square::Eps, Square::Phi, Square::Psi, Square::Nu, Square::Mu];

    pub fn name(self) -> &'static str {
        match self {
            Square::Eta => "naturality of η: (J⊗f)^J ∘ η_{H1} = η_{H2} ∘ f",
            Square::Eps => "naturality of ε: ε_{L2} ∘ (J⊗g^J) = g ∘ ε_{L1}",
            Square::Phi => "naturality of φ: J[H,t⊗H] ∘ φ_{J1} = φ_{J2} ∘ t",
            Square::Psi => "naturality of ψ: ψ_{L2} ∘ (J[H,g]⊗H) = g ∘ ψ_{L1}",
            Square::Nu => "naturality of ν: J[L^t,L] ∘ ν_{J1} = ν_{J2} ∘ t",
            Square::Mu => "naturality of μ: L^{J[f,L]} ∘ μ_{H1} = μ_{H2} ∘ f",
        }
    }
}

/// Checks one square for the morphism of the matching kind in `inst`
/// (`f` for `η` and `μ`, `g` for `ε` and `ψ`, `t` for `φ` and `ν`).
pub fn check_naturality(kind: Square, inst: &Instance, limits: &Limits, exec: Exec) -> Result<Check> {
    let d = inst.describe();
    let name = kind.name();
    let n = Category::Naturality;
    Ok(match kind {
        Square::Eta => {
            let t1 = Tensor::new(inst.j1.clone(), inst.h1.clone())?;
            let t2 = Tensor::new(inst.j1.clone(), inst.h2.clone())?;
            let xs: Vec<usize> = (0..inst.h1.len()).collect();
            compare(
                n,
                name,
                &d,
                &xs,
                |x| inst.h1.show(x),
                |&x| unit_eta(&t1, &x).iter().map(|p| tensor_lax_hom(|a: &usize| inst.f[*a], &t2, p)).collect::<Vec<_>>(),
                |&x| unit_eta(&t2, &inst.f[x]),
            )
        }
        Square::Eps => {
            let j = &inst.j1;
            let d1 = Tensor::new(j.clone(), FramePower::new(inst.l1.clone(), j.clone())?)?;
            let d2 = Tensor::new(j.clone(), FramePower::new(inst.l2.clone(), j.clone())?)?;
            let (dom, gens) = carrier_or_generators(&d1, ENUMERATION_CAP);
            let g = |x: &Vec<usize>| x.iter().map(|a| inst.g[*a]).collect::<Vec<_>>();
            compare(
                n,
                &on_generators(name, gens),
                &d,
                &dom,
                |y| d1.show(y),
                |y| counit_eps(&inst.l2, &tensor_lax_hom(g, &d2, y)),
                |y| inst.g[counit_eps(&inst.l1, y)],
            )
        }
        Square::Phi => {
            let t1 = Tensor::new(inst.j1.clone(), inst.h1.clone())?;
            let t2 = Tensor::new(inst.j2.clone(), inst.h1.clone())?;
            let dom = Indexed::new(inst.h1.clone(), limits.max_power)?;
            let is: Vec<usize> = (0..inst.j1.len()).collect();
            compare(
                n,
                name,
                &d,
                &is,
                |i| format!("point {i}"),
                |&i| unit_phi(&t1, &dom, i).iter().map(|p| tensor_frame_hom(&inst.t, &t2, p)).collect::<Vec<_>>(),
                |&i| unit_phi(&t2, &dom, inst.t.map[i]),
            )
        }
        Square::Psi => {
            let hl1 = hom_frame(inst.h1.clone(), inst.l1.clone(), limits, exec)?;
            let hl2 = hom_frame(inst.h1.clone(), inst.l2.clone(), limits, exec)?;
            let jg = hom_frame_covariant(|a: &usize| inst.g[*a], &hl1, &hl2)?;
            let d1 = Tensor::new(hl1.frame.clone(), inst.h1.clone())?;
            let d2 = Tensor::new(hl2.frame.clone(), inst.h1.clone())?;
            let (dom, gens) = carrier_or_generators(&d1, ENUMERATION_CAP);
            compare(
                n,
                &on_generators(name, gens),
                &d,
                &dom,
                |y| d1.show(y),
                |y| counit_psi(&hl2, &tensor_frame_hom(&jg, &d2, y)),
                |y| inst.g[counit_psi(&hl1, y)],
            )
        }
        Square::Nu => {
            let l2j = FramePower::new(inst.l1.clone(), inst.j2.clone())?;
            let xs = l2j.elements(limits.max_power)?;
            let is: Vec<usize> = (0..inst.j1.len()).collect();
            compare(
                n,
                name,
                &d,
                &is,
                |i| format!("point {i}"),
                // ν_{J1}(i) ∘ L^t
                |&i| xs.iter().map(|x| restrict_along_frame_hom(&inst.t, x)[i]).collect::<Vec<_>>(),
                |&i| unit_nu(&xs, inst.t.map[i]),
            )
        }
        Square::Mu => {
            let hl1 = hom_frame(inst.h1.clone(), inst.l1.clone(), limits, exec)?;
            let hl2 = hom_frame(inst.h2.clone(), inst.l1.clone(), limits, exec)?;
            let fv: Vec<usize> = hl1.dom.elems.iter().map(|&x| inst.f[x]).collect();
            let jf = hom_frame_contravariant(&fv, &hl2, &hl1)?;
            let xs = hl1.dom.elems.clone();
            compare(
                n,
                name,
                &d,
                &xs,
                |x| inst.h1.show(x),
                |x| {
                    let m = unit_mu(&hl1, x);
                    jf.map.iter().map(|&b| m[b]).collect::<Vec<_>>()
                },
                |x| unit_mu(&hl2, &inst.f[*x]),
            )
        }
    })
}

// ---------------------------------------------------------------------------
// Object validators

/// Class validators for the objects built from one instance: the power
/// `L^J` with `F^J`, the quotient `J⊗H` and its nucleus, agreement with the
/// literal construction, hom-frame points, the functorial images of the
/// instance morphisms, and the lax/strict status of `t` and `f` images.
pub fn check_objects(inst: &Instance, limits: &Limits, exec: Exec) -> Result<Vec<Check>> {
    let d = inst.describe();
    let v = Category::Validator;
    let mut out = Vec::new();
    out.push(Check::from_result(v, "L^J passes the module laws and F^J is an endomorphism", &d, {
        construct_fj(inst.l1.clone(), inst.j1.clone(), limits.max_power).map(|_| ())
    }));
    let t = Tensor::new(inst.j1.clone(), inst.h1.clone())?;
    let tel = t.elements(limits.max_power)?;
    out.push(Check::from_result(v, "J⊗H passes the module laws", &d, check_module_laws(&t, &tel)));
    let amb = Indexed::new(IdentityF(Power::new(inst.h1.clone(), inst.j1.len())), limits.max_power)?;
    let ntab: Vec<usize> = amb.elems.iter().map(|x| amb.idx(&t.nucleus(x))).collect();
    out.push(Check::from_result(v, "n(j[J,H]) is a nucleus on A^T", &d, nucleus::check_nucleus(&amb, &ntab)));
    let lit = tensor(inst.j1.clone(), inst.h1.clone(), limits)?;
    out.push(compare(
        v,
        "J⊗H agrees with the literal pair-set construction",
        &d,
        &amb.elems,
        |x| t.show(x),
        |x| t.nucleus(x),
        |x| lit.project(x),
    ));
    out.push(Check::from_result(v, "the quotient J⊗H validates as a table module", &d, lit.quotient().map(|_| ())));
    // generating pairs are collapsed
    out.push(compare(
        v,
        "n(x_{ir} ∨ F(x)_{i=}) = n(F(x)_{i=})",
        &d,
        &generating_pairs(&inst.j1, &inst.h1, &(0..inst.h1.len()).collect::<Vec<_>>()),
        |(c, e)| format!("({}, {})", t.show(c), t.show(e)),
        |(c, _)| t.nucleus(c),
        |(_, e)| t.nucleus(e),
    ));
    let hl = hom_frame(inst.h1.clone(), inst.l1.clone(), limits, exec)?;
    let brute: Vec<Vec<usize>> =
        enumerate_module_homs(inst.h1.module(), &inst.l1)?.into_iter().map(|h| h.values).collect();
    out.push(compare(v, "J[H,L] points equal the enumerated homomorphisms", &d, &[()], |_| "point list".into(), |_| hl.points.clone(), |_| brute.clone()));
    out.push(points_are_homs("points of J[H,L] are module homomorphisms", &d, &hl));
    out.push(compare(
        v,
        "J[H,L] relation equals the meet over all elements",
        &d,
        &[()],
        |_| "r table".into(),
        |_| hl.frame.r_table().to_vec(),
        |_| hl.points.iter().map(|a| hl.points.iter().map(|b| hl.r_full(a, b)).collect()).collect::<Vec<Vec<usize>>>(),
    ));
    // functorial images of the instance morphisms are morphisms of the right class
    let hl2 = hom_frame(inst.h1.clone(), inst.l2.clone(), limits, exec)?;
    out.push(Check::from_result(v, "J[H,g] is a frame homomorphism", &d, hom_frame_covariant(|a: &usize| inst.g[*a], &hl, &hl2).map(|_| ())));
    let hlf = hom_frame(inst.h2.clone(), inst.l1.clone(), limits, exec)?;
    let fv: Vec<usize> = hl.dom.elems.iter().map(|&x| inst.f[x]).collect();
    out.push(Check::from_result(v, "J[f,L] is a frame homomorphism", &d, hom_frame_contravariant(&fv, &hlf, &hl).map(|_| ())));
    let l2 = FramePower::new(inst.l1.clone(), inst.j2.clone())?;
    let l1 = FramePower::new(inst.l1.clone(), inst.j1.clone())?;
    let l2ix = Indexed::new(l2.clone(), limits.max_power)?;
    let lt: Vec<Vec<usize>> = l2ix.elems.iter().map(|x| restrict_along_frame_hom(&inst.t, x)).collect();
    out.push(lax_check("L^t is a lax morphism", &d, &l2ix, &l1, &lt));
    let t2 = Tensor::new(inst.j2.clone(), inst.h1.clone())?;
    let tix = Indexed::from_elems(t.clone(), tel.clone());
    let tv: Vec<Vec<usize>> = tel.iter().map(|p| tensor_frame_hom(&inst.t, &t2, p)).collect();
    out.push(match hom_defect(&tix, &t2, &tv) {
        None => Check::pass(v, "t⊗H is a module homomorphism", &d),
        Some(e) => Check::fail(v, "t⊗H is a module homomorphism", &d, describe_defect(e)),
    });
    let tf = Tensor::new(inst.j1.clone(), inst.h2.clone())?;
    let fv: Vec<Vec<usize>> = tel.iter().map(|p| tensor_lax_hom(|a: &usize| inst.f[*a], &tf, p)).collect();
    out.push(match hom_defect(&tix, &tf, &fv) {
        None => Check::pass(v, "J⊗f is a module homomorphism", &d),
        Some(e) => Check::fail(v, "J⊗f is a module homomorphism", &d, describe_defect(e)),
    });
    Ok(out)
}

// ---------------------------------------------------------------------------
// Suites

/// Which checks a suite runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    /// Object validators and the hom-enumeration oracle.
    Laws,
    /// Dual closure oracle on generated prenuclei.
    Nuclei,
    /// Triangle identities, naturality squares and component validators.
    Adjunctions,
    All,
}

impl std::str::FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "laws" => Ok(Suite::Laws),
            "nuclei" => Ok(Suite::Nuclei),
            "adjunctions" => Ok(Suite::Adjunctions),
            "all" => Ok(Suite::All),
            other => Err(format!("unknown suite {other:?} (expected laws, nuclei, adjunctions or all)")),
        }
    }
}

/// Parameters of a suite run.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub seed: u64,
    pub count: usize,
    pub shape: Shape,
    pub limits: Limits,
    pub exec: Exec,
    /// Draws tried per instance before giving up on size caps.
    pub max_attempts: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            seed: 7,
            count: 100,
            shape: Shape::default(),
            limits: Limits { max_points: 1024, ..Limits::default() },
            exec: Exec::default(),
            max_attempts: 20,
        }
    }
}

/// Seed of attempt `attempt` for instance `k`.
pub fn instance_seed(seed: u64, k: usize, attempt: usize) -> u64 {
    // splitmix64 finalizer over the three inputs
    let mut z = seed ^ (k as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ (attempt as u64).wrapping_mul(0xD1B5_4A32_D192_ED03);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Draws instance `k`, retrying while `run` hits a size cap.
fn with_resampling<T>(
    cfg: &SuiteConfig,
    k: usize,
    run: impl Fn(u64) -> Result<T>,
) -> (Option<T>, usize, Vec<String>, Option<(u64, Error)>) {
    let mut notes = Vec::new();
    for attempt in 0..cfg.max_attempts {
        let s = instance_seed(cfg.seed, k, attempt);
        match run(s) {
            Ok(t) => return (Some(t), attempt, notes, None),
            Err(e @ Error::SizeLimitExceeded { .. }) => notes.push(format!("instance {k} seed {s}: resampled ({e})")),
            Err(e) => return (None, attempt, notes, Some((s, e))),
        }
    }
    (None, cfg.max_attempts, notes, None)
}

fn run_instances(
    name: &str,
    cfg: &SuiteConfig,
    per: impl Fn(u64, Exec) -> Result<(String, Vec<Check>)> + Sync + Send,
) -> CheckReport {
    let inner = if cfg.exec == Exec::Parallel { Exec::Sequential } else { cfg.exec };
    let results = par::map_range(cfg.exec, cfg.count, |k| with_resampling(cfg, k, |s| per(s, inner)));
    let mut report = CheckReport::new(name, Some(cfg.seed), Vec::new());
    for (k, (res, resampled, notes, err)) in results.into_iter().enumerate() {
        report.counts.resampled += resampled;
        report.notes.extend(notes);
        match (res, err) {
            (Some((desc, checks)), _) => {
                report.counts.instances += 1;
                report.notes.push(format!("instance {k}: {desc}"));
                report.checks.extend(checks);
            }
            (None, Some((s, e))) => {
                report.counts.instances += 1;
                report.checks.push(Check::fail(Category::Validator, "instance construction", &format!("seed={s}"), e.to_string()));
            }
            (None, None) => {
                report.checks.push(Check::fail(
                    Category::Validator,
                    "instance construction",
                    &format!("instance {k}"),
                    format!("no draw within the size caps after {} attempts", cfg.max_attempts),
                ));
            }
        }
    }
    report.recount();
    report
}

/// Triangles, naturality squares and component validators on one instance.
pub fn adjunction_checks(inst: &Instance, limits: &Limits, exec: Exec) -> Result<Vec<Check>> {
    let d = inst.describe();
    let mut out = Vec::new();
    out.extend(check_triangles_adjunction1(&inst.j1, &inst.h1, &inst.l1, &d, limits)?.checks);
    out.extend(check_triangles_adjunction2(&inst.j1, &inst.h1, &inst.l1, &d, limits, exec)?.checks);
    out.extend(check_triangles_adjunction3(&inst.j1, &inst.h1, &inst.l1, &d, limits, exec)?.checks);
    for sq in Square::ALL {
        out.push(check_naturality(sq, inst, limits, exec)?);
    }
    Ok(out)
}

/// The adjunction suite over `cfg.count` seeded instances.
pub fn run_adjunctions(cfg: &SuiteConfig) -> CheckReport {
    run_instances("adjunctions", cfg, |s, exec| {
        let inst = Instance::draw(s, cfg.shape, &mut generate::rng(s));
        Ok((inst.describe(), adjunction_checks(&inst, &cfg.limits, exec)?))
    })
}

/// Object validators plus the hom-enumeration oracle.
pub fn run_laws(cfg: &SuiteConfig) -> CheckReport {
    run_instances("laws", cfg, |s, exec| {
        let inst = Instance::draw(s, cfg.shape, &mut generate::rng(s));
        let mut checks = check_objects(&inst, &cfg.limits, exec)?;
        let mut rng = generate::rng(s ^ 0x5EED);
        checks.push(hom_oracle_check(&inst.v, &mut rng, exec)?);
        Ok((inst.describe(), checks))
    })
}

/// Compares [`enumerate_module_homs`] and the generic backtracking search
/// with a filter over every function `A -> L`, on a random pair with
/// `|L|^|A| <= 10^5`.
pub fn hom_oracle_check(v: &Arc<crate::quantale::Quantale>, rng: &mut impl rand::Rng, exec: Exec) -> Result<Check> {
    let lattices = v.len() == 2 && rng.gen_bool(0.5);
    let (a, l) = loop {
        let (a, l) = if lattices {
            let a = generate::random_lattice(rng.gen_range(2..=4), rng.gen_range(1..=4), rng);
            let l = generate::random_lattice(3, rng.gen_range(1..=3), rng);
            (generate::boolean_module(v, a), generate::boolean_module(v, l))
        } else {
            (generate::random_module(v, 7, rng), generate::random_module(v, 5, rng))
        };
        if (l.len() as f64).powi(a.len() as i32) <= 1e5 {
            break (a, l);
        }
    };
    let inst = format!("V={} |A|={} |L|={}", v.len(), a.len(), l.len());
    let total = l.len().pow(a.len() as u32);
    let ix = Indexed::from_elems(a.clone(), (0..a.len()).collect());
    let mut brute = Vec::new();
    let mut f = vec![0usize; a.len()];
    for code in 0..total {
        let mut c = code;
        for x in (0..a.len()).rev() {
            f[x] = c % l.len();
            c /= l.len();
        }
        if hom_defect(&ix, &l, &f).is_none() {
            brute.push(f.clone());
        }
    }
    brute.sort();
    let filtered: Vec<Vec<usize>> = enumerate_module_homs(&a, &l)?.into_iter().map(|h| h.values).collect();
    let lix = Indexed::from_elems(l.clone(), (0..l.len()).collect());
    let generic = enumerate_homs(&ix, &lix, usize::MAX, exec)?;
    Ok(compare(
        Category::HomOracle,
        "hom enumeration equals the all-functions filter",
        &inst,
        &[0usize, 1],
        |k| ["join-map filter", "backtracking search"][*k].to_string(),
        |&k| if k == 0 { filtered.clone() } else { generic.clone() },
        |_| brute.clone(),
    ))
}

/// Random prenuclei from pair sets on random hosts: iteration and meets of
/// fixed points agree, and the closure is a nucleus whose quotient validates.
pub fn run_nuclei(cfg: &SuiteConfig) -> CheckReport {
    run_instances("nuclei", cfg, |s, _| {
        use rand::Rng;
        let mut rng = generate::rng(s);
        let (qname, v) = generate::random_quantale(&mut rng);
        let a = generate::random_module(&v, cfg.shape.max_module, &mut rng);
        let h = generate::random_fsemilattice(&a, &mut rng);
        // half the hosts are plain F-semilattices, half are powers A^J
        if rng.gen_bool(0.5) {
            let host = Indexed::new(h.clone(), cfg.limits.max_power)?;
            let desc = format!("seed={s} V={qname} host=H |A|={}", host.len());
            Ok((desc.clone(), nucleus_checks(&host, &desc, &mut rng)))
        } else {
            let j = Arc::new(generate::random_frame(&v, rng.gen_range(1..=2), &mut rng));
            let fp = FramePower::new(a.clone(), j)?;
            let host = Indexed::new(fp, cfg.limits.max_power)?;
            let desc = format!("seed={s} V={qname} host=A^J |A^T|={}", host.len());
            Ok((desc.clone(), nucleus_checks(&host, &desc, &mut rng)))
        }
    })
}

fn nucleus_checks<M: FModule>(host: &Indexed<M>, desc: &str, rng: &mut impl rand::Rng) -> Vec<Check> {
    let n = host.len();
    let pairs: Vec<(usize, usize)> = (0..rng.gen_range(1..=3)).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    let pre = nucleus::prenucleus_from_pairs(host, &pairs);
    let c = Category::Nucleus;
    let mut out = vec![Check::from_result(c, "j[X] is a prenucleus", desc, nucleus::check_prenucleus(host, &pre))];
    let it = nucleus::iterate_to_fixpoint(&pre);
    let mt = nucleus::meet_of_fixed_points(host, &pre);
    let xs: Vec<usize> = (0..n).collect();
    out.push(compare(c, "iteration equals meet of fixed points", desc, &xs, |&x| host.module.show(&host.elems[x]), |&x| it[x], |&x| mt[x]));
    match nucleus::closure_of(host, &pre) {
        Ok(nuc) => {
            out.push(Check::from_result(c, "closure passes is_nucleus", desc, nucleus::check_nucleus(host, &nuc)));
            out.push(compare(
                c,
                "closure identifies the generating pairs",
                desc,
                &pairs,
                |&(a, b)| format!("({}, {})", host.module.show(&host.elems[a]), host.module.show(&host.elems[b])),
                |&(a, _)| nuc[a],
                |&(_, b)| nuc[b],
            ));
            out.push(Check::from_result(Category::Validator, "nuclear quotient validates", desc, nucleus::quotient(host, &nuc).map(|_| ())));
        }
        Err(e) => out.push(Check::fail(c, "closure passes is_nucleus", desc, e.to_string())),
    }
    out
}

/// Runs one suite, or all three in order.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> CheckReport {
    match suite {
        Suite::Laws => run_laws(cfg),
        Suite::Nuclei => run_nuclei(cfg),
        Suite::Adjunctions => run_adjunctions(cfg),
        Suite::All => {
            let mut r = run_laws(cfg);
            r.merge(run_nuclei(cfg));
            r.merge(run_adjunctions(cfg));
            r.suite = "all".into();
            r
        }
    }
}

/// Whether a strictly commuting morphism would have been enough: the lax
/// and strict status of a map given by values over `h1.elems`.
pub fn classify<H1: FModule, H2: FModule>(h1: &Indexed<H1>, h2: &H2, values: &[H2::Elem]) -> Result<(bool, bool, bool)> {
    let lax = is_lax_morphism(h1, h2, values)?;
    let strict = is_f_hom(h1, h2, values)?;
    let mut seen = std::collections::HashSet::new();
    let injective = values.iter().all(|v| seen.insert(v));
    Ok((lax, strict, injective))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example;

    fn trivial_frame(v: &Arc<crate::quantale::Quantale>, r: usize) -> Arc<VFrame> {
        Arc::new(VFrame::unlabeled(v.clone(), vec![vec![r]]).unwrap())
    }

    #[test]
    fn worked_mu_table() {
        let ex = example::Example::new();
        let hl = hom_frame(ex.h.clone(), ex.l.clone(), &Limits::default(), Exec::Sequential).unwrap();
        let mu: Vec<Vec<usize>> = (0..5).map(|x| unit_mu(&hl, &x)).collect();
        assert_eq!(mu, vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 1], vec![0, 1, 1], vec![0, 1, 1]]);
        let hix = Indexed::new(ex.h.clone(), 100).unwrap();
        let lp = FramePower::new(ex.l.clone(), hl.frame.clone()).unwrap();
        let (lax, strict, injective) = classify(&hix, &lp, &mu).unwrap();
        assert!(lax);
        assert!(!injective);
        // F'(μ(x)) and μ(F(x)) are both (0,0,0) on {0,a} and (0,0,1) elsewhere
        assert!(strict);
    }

    #[test]
    fn worked_triangles_hold() {
        let ex = example::Example::new();
        let lim = Limits::default();
        for r in [0usize, 1, 2] {
            let j = trivial_frame(&ex.v, r);
            for rep in [
                check_triangles_adjunction1(&j, &ex.h, &ex.l, "worked example", &lim).unwrap(),
                check_triangles_adjunction2(&j, &ex.h, &ex.l, "worked example", &lim, Exec::Sequential).unwrap(),
                check_triangles_adjunction3(&j, &ex.h, &ex.l, "worked example", &lim, Exec::Sequential).unwrap(),
            ] {
                assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn eta_on_degenerate_frame_is_the_singleton_map() {
        let ex = example::Example::new();
        let zero = FSemilattice::validate(ex.a.clone(), vec![0; 5]).unwrap();
        let t = Tensor::new(trivial_frame(&ex.v, 0), zero).unwrap();
        for x in 0..5 {
            assert_eq!(unit_eta(&t, &x), vec![vec![x]]);
        }
    }

    #[test]
    fn psi_with_no_points_is_bottom() {
        // L = 1 element admits exactly one hom; an empty frame has the
        // one-element power as its tensor
        let ex = example::Example::new();
        let j = Arc::new(VFrame::unlabeled(ex.v.clone(), vec![]).unwrap());
        let t = Tensor::new(j, ex.h.clone()).unwrap();
        assert_eq!(t.elements(10).unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn small_suite_passes() {
        let cfg = SuiteConfig { count: 6, exec: Exec::Sequential, ..SuiteConfig::default() };
        for suite in [Suite::Laws, Suite::Nuclei, Suite::Adjunctions] {
            let rep = run_suite(suite, &cfg);
            assert!(rep.all_passed(), "{suite:?}: {:?}", rep.failures().collect::<Vec<_>>());
            assert!(rep.counts.checks > 0);
        }
    }

    #[test]
    fn seeds_are_spread() {
        let a = instance_seed(7, 0, 0);
        assert_ne!(a, instance_seed(7, 1, 0));
        assert_ne!(a, instance_seed(7, 0, 1));
        assert_ne!(a, instance_seed(8, 0, 0));
    }
}
