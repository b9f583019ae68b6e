//! Modules with a tense operator `F`, their strict and lax morphisms, and
//! the frame power `A^J = (A^T, F^J)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::frames::{FrameHom, VFrame};
use crate::quantale::Quantale;
use crate::vmodule::{hom_defect, size_check, Indexed, Module, Power, VModule};

/// A module with a module endomorphism `F`.
pub trait FModule: Module {
    fn f(&self, a: &Self::Elem) -> Self::Elem;
    /// The right adjoint of `F`: the largest `c` with `F(c) <= b`.
    fn f_upper(&self, b: &Self::Elem) -> Self::Elem;
}

/// A table-backed module with a table-backed `F`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FSemilattice {
    module: VModule,
    f: Arc<Vec<usize>>,
    f_up: Arc<Vec<usize>>,
}

impl FSemilattice {
    /// Checks that `f` is a module endomorphism.
    pub fn validate(module: VModule, f: Vec<usize>) -> Result<Self> {
        let n = module.len();
        if f.len() != n {
            return Err(Error::ShapeMismatch(format!("F has {} values for {n} elements", f.len())));
        }
        if let Some(&bad) = f.iter().find(|&&x| x >= n) {
            return Err(Error::BadElementIndex { what: "module", index: bad, size: n });
        }
        let ix = Indexed::from_elems(module.clone(), (0..n).collect());
        if let Some(defect) = hom_defect(&ix, &module, &f) {
            let (reason, witness) = crate::fsemilattice::describe(defect);
            return Err(Error::FNotModuleHom { reason, witness });
        }
        let c = module.carrier();
        let f_up = (0..n).map(|b| c.join_all((0..n).filter(|&x| c.leq(f[x], b)))).collect();
        Ok(Self { module, f: Arc::new(f), f_up: Arc::new(f_up) })
    }

    /// `F` = identity.
    pub fn identity(module: VModule) -> Self {
        let f = (0..module.len()).collect();
        Self::validate(module, f).expect("identity is a homomorphism")
    }

    pub fn module(&self) -> &VModule {
        &self.module
    }

    pub fn f_table(&self) -> &[usize] {
        &self.f
    }

    pub fn len(&self) -> usize {
        self.module.len()
    }

    pub fn is_empty(&self) -> bool {
        self.module.is_empty()
    }
}

pub(crate) fn describe(d: crate::vmodule::HomDefect) -> (&'static str, Vec<String>) {
    use crate::vmodule::HomDefect::*;
    match d {
        Bottom => ("bottom", vec![]),
        Join(a, b) => ("join", vec![a, b]),
        Action(v, a) => ("action", vec![v, a]),
    }
}

impl Module for FSemilattice {
    type Elem = usize;
    fn quantale(&self) -> &Arc<Quantale> {
        self.module.quantale()
    }
    fn bottom(&self) -> usize {
        self.module.bottom()
    }
    fn top(&self) -> usize {
        self.module.top()
    }
    fn join(&self, a: &usize, b: &usize) -> usize {
        self.module.join(a, b)
    }
    fn meet(&self, a: &usize, b: &usize) -> usize {
        self.module.meet(a, b)
    }
    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.module.leq(a, b)
    }
    fn act(&self, v: usize, a: &usize) -> usize {
        self.module.act(v, a)
    }
    fn act_upper(&self, v: usize, b: &usize) -> usize {
        self.module.act_upper(v, b)
    }
    fn generators(&self) -> Vec<usize> {
        self.module.generators()
    }
    fn show(&self, a: &usize) -> String {
        self.module.show(a)
    }
    fn elements(&self, cap: usize) -> Result<Vec<usize>> {
        self.module.elements(cap)
    }
    fn residuate(&self, a: &usize, b: &usize) -> usize {
        self.module.residuate(a, b)
    }
}

impl FModule for FSemilattice {
    fn f(&self, a: &usize) -> usize {
        self.f[*a]
    }
    fn f_upper(&self, b: &usize) -> usize {
        self.f_up[*b]
    }
}

/// Any module viewed with `F` = identity.
#[derive(Clone, Debug)]
pub struct IdentityF<M: Module>(pub M);

impl<M: Module> Module for IdentityF<M> {
    type Elem = M::Elem;
    fn quantale(&self) -> &Arc<Quantale> {
        self.0.quantale()
    }
    fn bottom(&self) -> M::Elem {
        self.0.bottom()
    }
    fn top(&self) -> M::Elem {
        self.0.top()
    }
    fn join(&self, a: &M::Elem, b: &M::Elem) -> M::Elem {
        self.0.join(a, b)
    }
    fn meet(&self, a: &M::Elem, b: &M::Elem) -> M::Elem {
        self.0.meet(a, b)
    }
    fn leq(&self, a: &M::Elem, b: &M::Elem) -> bool {
        self.0.leq(a, b)
    }
    fn act(&self, v: usize, a: &M::Elem) -> M::Elem {
        self.0.act(v, a)
    }
    fn act_upper(&self, v: usize, b: &M::Elem) -> M::Elem {
        self.0.act_upper(v, b)
    }
    fn generators(&self) -> Vec<M::Elem> {
        self.0.generators()
    }
    fn show(&self, a: &M::Elem) -> String {
        self.0.show(a)
    }
    fn elements(&self, cap: usize) -> Result<Vec<M::Elem>> {
        self.0.elements(cap)
    }
    fn residuate(&self, a: &M::Elem, b: &M::Elem) -> usize {
        self.0.residuate(a, b)
    }
}

impl<M: Module> FModule for IdentityF<M> {
    fn f(&self, a: &M::Elem) -> M::Elem {
        a.clone()
    }
    fn f_upper(&self, b: &M::Elem) -> M::Elem {
        b.clone()
    }
}

/// The power `A^T` with the operator `(F^J x)(i) = ⋁_k r(i,k) * x(k)`.
#[derive(Clone, Debug)]
pub struct FramePower<M: Module> {
    pub power: Power<M>,
    pub frame: Arc<VFrame>,
}

impl<M: Module> FramePower<M> {
    /// Builds `A^J` without re-validation; see [`construct_fj`].
    pub fn new(base: M, frame: Arc<VFrame>) -> Result<Self> {
        base.quantale().require_commutative()?;
        if !Arc::ptr_eq(base.quantale(), frame.quantale()) {
            return Err(Error::QuantaleMismatch);
        }
        Ok(Self { power: Power::new(base, frame.len()), frame })
    }

    pub fn base(&self) -> &M {
        &self.power.base
    }

    pub fn delta(&self, x: &M::Elem, i: usize) -> Vec<M::Elem> {
        self.power.delta(x, i)
    }
}

/// Builds `A^J = (A^T, F^J)` and re-checks the module laws and that `F^J`
/// is a module endomorphism on every element.
pub fn construct_fj<M: Module>(a: M, j: Arc<VFrame>, cap: usize) -> Result<FramePower<M>> {
    let fp = FramePower::new(a, j)?;
    let ix = Indexed::new(fp.clone(), cap)?;
    crate::vmodule::check_module_laws(&fp, &ix.elems)?;
    let fvals: Vec<_> = ix.elems.iter().map(|x| fp.f(x)).collect();
    if let Some(defect) = hom_defect(&ix, &fp, &fvals) {
        let (reason, witness) = describe(defect);
        return Err(Error::FNotModuleHom { reason, witness });
    }
    Ok(fp)
}

impl<M: Module> Module for FramePower<M> {
    type Elem = Vec<M::Elem>;
    fn quantale(&self) -> &Arc<Quantale> {
        self.power.quantale()
    }
    fn bottom(&self) -> Self::Elem {
        self.power.bottom()
    }
    fn top(&self) -> Self::Elem {
        self.power.top()
    }
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.power.join(a, b)
    }
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.power.meet(a, b)
    }
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.power.leq(a, b)
    }
    fn act(&self, v: usize, a: &Self::Elem) -> Self::Elem {
        self.power.act(v, a)
    }
    fn act_upper(&self, v: usize, b: &Self::Elem) -> Self::Elem {
        self.power.act_upper(v, b)
    }
    fn generators(&self) -> Vec<Self::Elem> {
        self.power.generators()
    }
    fn show(&self, a: &Self::Elem) -> String {
        self.power.show(a)
    }
    fn elements(&self, cap: usize) -> Result<Vec<Self::Elem>> {
        self.power.elements(cap)
    }
    fn residuate(&self, a: &Self::Elem, b: &Self::Elem) -> usize {
        self.power.residuate(a, b)
    }
}

impl<M: Module> FModule for FramePower<M> {
    fn f(&self, x: &Self::Elem) -> Self::Elem {
        let m = &self.power.base;
        let n = self.frame.len();
        (0..n)
            .map(|i| (0..n).fold(m.bottom(), |acc, k| m.join(&acc, &m.act(self.frame.r(i, k), &x[k]))))
            .collect()
    }

    /// `F^J(x) <= q` iff `r(i,k) * x(k) <= q(i)` for all `i, k`, so the
    /// adjoint is `k ↦ ⋀_i act_upper(r(i,k), q(i))`.
    fn f_upper(&self, q: &Self::Elem) -> Self::Elem {
        let m = &self.power.base;
        let n = self.frame.len();
        (0..n)
            .map(|k| (0..n).fold(m.top(), |acc, i| m.meet(&acc, &m.act_upper(self.frame.r(i, k), &q[i]))))
            .collect()
    }
}

/// Strictness test for a map given by values aligned with `h1.elems`:
/// a module homomorphism with `F2(f(a)) = f(F1(a))`.
pub fn is_f_hom<H1: FModule, H2: FModule>(h1: &Indexed<H1>, h2: &H2, values: &[H2::Elem]) -> Result<bool> {
    if !Arc::ptr_eq(h1.module.quantale(), h2.quantale()) {
        return Err(Error::QuantaleMismatch);
    }
    Ok(hom_defect(h1, h2, values).is_none()
        && h1
            .elems
            .iter()
            .enumerate()
            .all(|(i, a)| h2.f(&values[i]) == values[h1.idx(&h1.module.f(a))]))
}

/// Lax test: a module homomorphism with `F2(f(a)) <= f(F1(a))`.
pub fn is_lax_morphism<H1: FModule, H2: FModule>(
    h1: &Indexed<H1>,
    h2: &H2,
    values: &[H2::Elem],
) -> Result<bool> {
    if !Arc::ptr_eq(h1.module.quantale(), h2.quantale()) {
        return Err(Error::QuantaleMismatch);
    }
    Ok(hom_defect(h1, h2, values).is_none()
        && h1
            .elems
            .iter()
            .enumerate()
            .all(|(i, a)| h2.leq(&h2.f(&values[i]), &values[h1.idx(&h1.module.f(a))])))
}

/// Table version of [`is_f_hom`].
pub fn is_f_hom_table(f: &[usize], h1: &FSemilattice, h2: &FSemilattice) -> Result<bool> {
    is_f_hom(&Indexed::from_elems(h1.clone(), (0..h1.len()).collect()), h2, f)
}

/// Table version of [`is_lax_morphism`].
pub fn is_lax_morphism_table(f: &[usize], h1: &FSemilattice, h2: &FSemilattice) -> Result<bool> {
    is_lax_morphism(&Indexed::from_elems(h1.clone(), (0..h1.len()).collect()), h2, f)
}

/// The pointwise lift `f^J(x)(i) = f(x(i))`.
pub fn lift_hom_fj<E1, E2>(f: impl Fn(&E1) -> E2, x: &[E1]) -> Vec<E2> {
    x.iter().map(f).collect()
}

/// Precomposition `A^t(x)(i) = x(t(i))` along a frame homomorphism.
pub fn restrict_along_frame_hom<E: Clone>(t: &FrameHom, x: &[E]) -> Vec<E> {
    t.map.iter().map(|&ti| x[ti].clone()).collect()
}

/// Value vectors of a map on the enumerated domain.
pub fn tabulate<D: Module, R>(d: &Indexed<D>, f: impl Fn(&D::Elem) -> R) -> Vec<R> {
    d.elems.iter().map(f).collect()
}

/// Checks the size of `|A|^|T|` before building a power.
pub fn power_size_check(base_len: usize, n: usize, cap: usize) -> Result<()> {
    size_check("power module", (base_len as u128).saturating_pow(n as u32), cap)
}
