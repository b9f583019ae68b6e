//! The constructions `J⊗H` and `J[H,L]`, the special tuples `x_{i=}` and
//! `x_{ir}`, the forward operator `f^→`, and the morphism actions of both
//! functors.
//!
//! `J⊗H` comes in two forms. [`tensor`] follows the definition literally:
//! it materializes `A^T`, builds the pair set `[J,H]`, forms `j[[J,H]]` and
//! closes it. [`Tensor`] is the same quotient computed on demand: for the
//! pairs of `[J,H]` the generated prenucleus has the closed form
//! `j(p)(k) = p(k) ∨ ⋁_i r(i,k) * F_*(p(i))` with `F_*` the right adjoint of
//! `F`, so nested constructions never enumerate their ambient power.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frames::{frame_hom_defect, FrameHom, VFrame};
use crate::fsemilattice::{FModule, IdentityF};
use crate::nucleus::{self, Endo, Quotient};
use crate::par::{self, Exec};
use crate::quantale::Quantale;
use crate::vmodule::{enumerate_homs, enumerate_homs_from_power, Indexed, Module, Power};
use crate::Limits;

/// `x_{i=}`: `x` at position `i`, bottom elsewhere.
pub fn delta_element<M: Module>(a: &M, n: usize, x: &M::Elem, i: usize) -> Vec<M::Elem> {
    (0..n).map(|k| if k == i { x.clone() } else { a.bottom() }).collect()
}

/// `x_{ir}`: the tuple `j ↦ r(i,j) * x`.
pub fn smear_element<M: Module>(a: &M, j: &VFrame, x: &M::Elem, i: usize) -> Vec<M::Elem> {
    (0..j.len()).map(|k| a.act(j.r(i, k), x)).collect()
}

/// The pair set `[J,H] = {(x_{ir} ∨ F(x)_{i=}, F(x)_{i=})}` over `x ∈ A`, `i ∈ T`.
pub fn generating_pairs<H: FModule>(j: &VFrame, h: &H, elems: &[H::Elem]) -> Vec<(Vec<H::Elem>, Vec<H::Elem>)> {
    let n = j.len();
    let p = Power::new(h.clone(), n);
    let mut out = Vec::new();
    for x in elems {
        let fx = h.f(x);
        for i in 0..n {
            let d = delta_element(h, n, &fx, i);
            let c = p.join(&smear_element(h, j, x, i), &d);
            out.push((c, d));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// J⊗H on demand

/// `J⊗H` as the fixed points of `n(j[J,H])` inside `A^T`.
///
/// Joins and the action are the ambient ones followed by the nucleus;
/// meets, order, top and the right adjoint of the action are inherited.
#[derive(Clone, Debug)]
pub struct Tensor<H: FModule> {
    pub h: H,
    pub frame: Arc<VFrame>,
    power: Power<H>,
    bottom: Vec<H::Elem>,
}

impl<H: FModule> Tensor<H> {
    pub fn new(frame: Arc<VFrame>, h: H) -> Result<Self> {
        h.quantale().require_commutative()?;
        if !Arc::ptr_eq(h.quantale(), frame.quantale()) {
            return Err(Error::QuantaleMismatch);
        }
        let power = Power::new(h.clone(), frame.len());
        let mut t = Self { h, frame, bottom: power.bottom(), power };
        t.bottom = t.nucleus(&t.power.bottom());
        Ok(t)
    }

    /// The ambient power `A^T`.
    pub fn ambient(&self) -> &Power<H> {
        &self.power
    }

    /// One application of `j[J,H]`.
    pub fn prenucleus(&self, p: &[H::Elem]) -> Vec<H::Elem> {
        let n = self.frame.len();
        let up: Vec<H::Elem> = p.iter().map(|x| self.h.f_upper(x)).collect();
        (0..n)
            .map(|k| {
                (0..n).fold(p[k].clone(), |acc, i| {
                    let v = self.frame.r(i, k);
                    self.h.join(&acc, &self.h.act(v, &up[i]))
                })
            })
            .collect()
    }

    /// `n(j[J,H])`: iterate the prenucleus until stable.
    pub fn nucleus(&self, p: &[H::Elem]) -> Vec<H::Elem> {
        let mut cur = p.to_vec();
        loop {
            let next = self.prenucleus(&cur);
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    pub fn delta(&self, x: &H::Elem, i: usize) -> Vec<H::Elem> {
        self.power.delta(x, i)
    }
}

impl<H: FModule> Module for Tensor<H> {
    type Elem = Vec<H::Elem>;
    fn quantale(&self) -> &Arc<Quantale> {
        self.h.quantale()
    }
    fn bottom(&self) -> Self::Elem {
        self.bottom.clone()
    }
    fn top(&self) -> Self::Elem {
        self.power.top()
    }
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.nucleus(&self.power.join(a, b))
    }
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.power.meet(a, b)
    }
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.power.leq(a, b)
    }
    fn act(&self, v: usize, a: &Self::Elem) -> Self::Elem {
        self.nucleus(&self.power.act(v, a))
    }
    /// For a fixed point `b` the ambient adjoint is already fixed, since
    /// `v * n(u) <= n(v * u) <= n(b) = b`.
    fn act_upper(&self, v: usize, b: &Self::Elem) -> Self::Elem {
        self.power.act_upper(v, b)
    }
    fn generators(&self) -> Vec<Self::Elem> {
        let mut g: Vec<Self::Elem> = self
            .power
            .generators()
            .iter()
            .map(|x| self.nucleus(x))
            .filter(|x| *x != self.bottom)
            .collect();
        g.sort();
        g.dedup();
        g
    }
    fn show(&self, a: &Self::Elem) -> String {
        self.power.show(a)
    }
    /// `n(v * a) <= b` iff `v * a <= b` for fixed `b`.
    fn residuate(&self, a: &Self::Elem, b: &Self::Elem) -> usize {
        self.power.residuate(a, b)
    }
}

// ---------------------------------------------------------------------------
// J⊗H by definition

/// `J⊗H` built literally from the pair set on a materialized `A^T`.
#[derive(Clone, Debug)]
pub struct TensorModule<H: FModule> {
    pub frame: Arc<VFrame>,
    pub fsl: H,
    /// `A^T` as a plain module (`F` = identity), enumerated.
    pub ambient: Indexed<IdentityF<Power<H>>>,
    /// `[J,H]` as positions in `ambient.elems`.
    pub pairs: Vec<(usize, usize)>,
    /// `j[[J,H]]` after saturation.
    pub prenucleus: Endo,
    /// `n(j[[J,H]])`.
    pub nucleus: Endo,
    /// Fixed points of the nucleus, in ambient order.
    pub fixed: Vec<usize>,
}

/// Builds `J⊗H` from the pair set `[J,H]`.
pub fn tensor<H: FModule>(j: Arc<VFrame>, h: H, limits: &Limits) -> Result<TensorModule<H>> {
    h.quantale().require_commutative()?;
    if !Arc::ptr_eq(h.quantale(), j.quantale()) {
        return Err(Error::QuantaleMismatch);
    }
    let base = h.elements(limits.max_power)?;
    let ambient = Indexed::new(IdentityF(Power::new(h.clone(), j.len())), limits.max_power)?;
    let pairs: Vec<(usize, usize)> = generating_pairs(&j, &h, &base)
        .into_iter()
        .map(|(c, d)| (ambient.idx(&c), ambient.idx(&d)))
        .collect();
    let pre = nucleus::prenucleus_from_pairs(&ambient, &pairs);
    let nuc = nucleus::closure_of(&ambient, &pre)?;
    let fixed = (0..ambient.len()).filter(|&x| nuc[x] == x).collect();
    Ok(TensorModule { frame: j, fsl: h, ambient, pairs, prenucleus: pre, nucleus: nuc, fixed })
}

impl<H: FModule> TensorModule<H> {
    pub fn len(&self) -> usize {
        self.fixed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fixed.is_empty()
    }

    /// The fixed-point elements.
    pub fn elements(&self) -> Vec<Vec<H::Elem>> {
        self.fixed.iter().map(|&x| self.ambient.elems[x].clone()).collect()
    }

    /// The projection `A^T -> J⊗H`.
    pub fn project(&self, x: &[H::Elem]) -> Vec<H::Elem> {
        self.ambient.elems[self.nucleus[self.ambient.idx(&x.to_vec())]].clone()
    }

    /// The quotient as a table-backed module.
    pub fn quotient(&self) -> Result<Quotient> {
        nucleus::quotient(&self.ambient, &self.nucleus)
    }
}

// ---------------------------------------------------------------------------
// Morphism actions of J⊗(-) and (-)^J

/// `(f^→ x)(k) = ⋁{x(i) | f(i) = k}`.
pub fn forward_map<M: Module>(f: &[usize], n2: usize, a: &M, x: &[M::Elem]) -> Vec<M::Elem> {
    let mut out = vec![a.bottom(); n2];
    for (i, xi) in x.iter().enumerate() {
        out[f[i]] = a.join(&out[f[i]], xi);
    }
    out
}

/// `t⊗H`: a fixed point `p` of `J1⊗H` goes to `n2(t^→(p))`.
pub fn tensor_frame_hom<H: FModule>(t: &FrameHom, t2: &Tensor<H>, p: &[H::Elem]) -> Vec<H::Elem> {
    t2.nucleus(&forward_map(&t.map, t2.frame.len(), &t2.h, p))
}

/// `J⊗f`: a fixed point `p` of `J⊗H1` goes to `n2(f^J(p))`.
pub fn tensor_lax_hom<E1, H2: FModule>(f: impl Fn(&E1) -> H2::Elem, t2: &Tensor<H2>, p: &[E1]) -> Vec<H2::Elem> {
    t2.nucleus(&p.iter().map(f).collect::<Vec<_>>())
}

// ---------------------------------------------------------------------------
// J[H,L]

/// The frame `J[H,L]`: module homomorphisms `A -> L` with
/// `r(α,β) = ⋀_x (β(x) -> α(F(x)))`.
///
/// Points are value vectors aligned with `dom.elems`, sorted
/// lexicographically. The meet runs over the join-irreducibles of `A`: both
/// `x ↦ v * β(x)` and `x ↦ α(F(x))` preserve joins, so the inequality
/// `v <= β(x) -> α(F(x))` holds for every `x` once it holds on a join-dense
/// set.
#[derive(Clone, Debug)]
pub struct HomFrame<D: FModule, C: Module> {
    pub dom: Arc<Indexed<D>>,
    pub target: C,
    pub points: Vec<Vec<C::Elem>>,
    pub frame: Arc<VFrame>,
    gens: Vec<usize>,
    fgens: Vec<usize>,
}

impl<D: FModule, C: Module> HomFrame<D, C> {
    /// Builds the frame on the given homomorphisms (sorted on entry).
    pub fn from_points(dom: Arc<Indexed<D>>, target: C, mut points: Vec<Vec<C::Elem>>, exec: Exec) -> Result<Self> {
        points.sort();
        points.dedup();
        let q = dom.module.quantale().clone();
        let gens: Vec<usize> = dom.module.generators().iter().map(|g| dom.idx(g)).collect();
        let fgens: Vec<usize> = gens.iter().map(|&g| dom.idx(&dom.module.f(&dom.elems[g]))).collect();
        let empty = Arc::new(VFrame::unlabeled(q.clone(), vec![])?);
        let mut hf = Self { dom, target, points, frame: empty, gens, fgens };
        let n = hf.points.len();
        let r = par::map_range(exec, n, |a| (0..n).map(|b| hf.r_of(&hf.points[a], &hf.points[b])).collect());
        let labels = (0..n).map(|k| format!("p{k}")).collect();
        hf.frame = Arc::new(VFrame::validate(q, labels, r)?);
        Ok(hf)
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `r(α,β)` for any two homomorphisms `A -> L`.
    pub fn r_of(&self, alpha: &[C::Elem], beta: &[C::Elem]) -> usize {
        let q = self.dom.module.quantale();
        self.gens.iter().zip(&self.fgens).fold(q.top(), |acc, (&g, &fg)| {
            q.meet(acc, self.target.residuate(&beta[g], &alpha[fg]))
        })
    }

    /// `r(α,β)` by the meet over every element of `A`.
    pub fn r_full(&self, alpha: &[C::Elem], beta: &[C::Elem]) -> usize {
        let q = self.dom.module.quantale();
        let m = &self.dom.module;
        self.dom.elems.iter().enumerate().fold(q.top(), |acc, (x, ex)| {
            q.meet(acc, self.target.residuate(&beta[x], &alpha[self.dom.idx(&m.f(ex))]))
        })
    }

    /// `α(x)` for the point at position `alpha`.
    pub fn eval(&self, alpha: usize, x: &D::Elem) -> C::Elem {
        self.points[alpha][self.dom.idx(x)].clone()
    }

    pub fn point_index(&self, values: &[C::Elem]) -> Option<usize> {
        self.points.binary_search_by(|p| p.as_slice().cmp(values)).ok()
    }
}

/// `r(α,β) = ⋀_g (β(g) -> α(F(g)))` over the generators of `H`, for
/// homomorphisms given as functions. Exact for the reason given on
/// [`HomFrame`].
pub fn hom_r<D: FModule, C: Module>(
    h: &D,
    l: &C,
    alpha: impl Fn(&D::Elem) -> C::Elem,
    beta: impl Fn(&D::Elem) -> C::Elem,
) -> usize {
    let q = h.quantale();
    h.generators()
        .iter()
        .fold(q.top(), |acc, g| q.meet(acc, l.residuate(&beta(g), &alpha(&h.f(g)))))
}

/// `J[H,L]` by enumerating every module homomorphism `A -> L`.
pub fn hom_frame<D: FModule, C: Module>(h: D, l: C, limits: &Limits, exec: Exec) -> Result<HomFrame<D, C>> {
    h.quantale().require_commutative()?;
    let dom = Arc::new(Indexed::new(h, limits.max_power)?);
    let cod = Indexed::new(l.clone(), limits.max_power)?;
    let points = enumerate_homs(&dom, &cod, limits.max_points, exec)?;
    HomFrame::from_points(dom, l, points, exec)
}

/// `J[L^J, L]` through `Hom(L^T, L) ≅ Hom(L, L)^T`.
pub fn hom_frame_of_power<M: Module>(
    fp: crate::fsemilattice::FramePower<M>,
    l: M,
    limits: &Limits,
    exec: Exec,
) -> Result<HomFrame<crate::fsemilattice::FramePower<M>, M>> {
    fp.quantale().require_commutative()?;
    let base = Indexed::new(fp.base().clone(), limits.max_power)?;
    let cod = Indexed::new(l.clone(), limits.max_power)?;
    let n = fp.frame.len();
    let points = enumerate_homs_from_power(&base, n, &cod, limits.max_points, exec)?;
    let dom = Arc::new(Indexed::new(fp, limits.max_power)?);
    HomFrame::from_points(dom, l, points, exec)
}

/// `J[H,f]`: `α ↦ f∘α` as a point map, re-checked as a frame homomorphism.
pub fn hom_frame_covariant<D: FModule, C1: Module, C2: Module>(
    f: impl Fn(&C1::Elem) -> C2::Elem,
    j1: &HomFrame<D, C1>,
    j2: &HomFrame<D, C2>,
) -> Result<FrameHom> {
    let map = j1
        .points
        .iter()
        .map(|a| {
            let img: Vec<C2::Elem> = a.iter().map(&f).collect();
            j2.point_index(&img).ok_or_else(|| Error::Invariant("f∘α is not a point of J[H,L2]".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    checked_frame_hom(j1.frame.clone(), j2.frame.clone(), map)
}

/// `J[f,L]`: `α ↦ α∘f` for `f: H1 -> H2` given by values on `j1.dom`.
pub fn hom_frame_contravariant<D1: FModule, D2: FModule, C: Module>(
    f: &[D2::Elem],
    j2: &HomFrame<D2, C>,
    j1: &HomFrame<D1, C>,
) -> Result<FrameHom> {
    let map = j2
        .points
        .iter()
        .map(|a| {
            let img: Vec<C::Elem> = f.iter().map(|y| a[j2.dom.idx(y)].clone()).collect();
            j1.point_index(&img).ok_or_else(|| Error::Invariant("α∘f is not a point of J[H1,L]".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    checked_frame_hom(j2.frame.clone(), j1.frame.clone(), map)
}

fn checked_frame_hom(s: Arc<VFrame>, t: Arc<VFrame>, map: Vec<usize>) -> Result<FrameHom> {
    if let Some((i, j)) = frame_hom_defect(&map, &s, &t) {
        return Err(Error::Invariant(format!("not a frame homomorphism at ({i}, {j})")));
    }
    Ok(FrameHom { source: s, target: t, map })
}
