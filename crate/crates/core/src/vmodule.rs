//! Left modules over a quantale.
//!
//! [`Module`] is the interface every carrier implements: table-backed
//! modules ([`VModule`]), pointwise powers ([`Power`]) and the nuclear
//! quotients built in `functors`. Generic code enumerates elements only when
//! it has to and checks laws against a join-dense generator set, which is
//! exact for join-preserving maps.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::FinLattice;
use crate::par::{self, Exec};
use crate::quantale::Quantale;

/// A finite left module over a quantale.
pub trait Module: Clone + Send + Sync {
    type Elem: Clone + Eq + Ord + Hash + Debug + Send + Sync;

    fn quantale(&self) -> &Arc<Quantale>;
    fn bottom(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
    /// The action `v * a`.
    fn act(&self, v: usize, a: &Self::Elem) -> Self::Elem;
    /// The right adjoint of `v * -`: the largest `c` with `v * c <= b`.
    fn act_upper(&self, v: usize, b: &Self::Elem) -> Self::Elem;
    /// A join-dense set: every element is the join of the generators below it.
    fn generators(&self) -> Vec<Self::Elem>;
    /// Human-readable rendering of an element.
    fn show(&self, a: &Self::Elem) -> String;

    /// All elements in a deterministic order, or an error above `cap`.
    fn elements(&self, cap: usize) -> Result<Vec<Self::Elem>> {
        join_closure(self, cap)
    }

    /// Module residuation `a -> b`: the largest `v` with `v * a <= b`.
    fn residuate(&self, a: &Self::Elem, b: &Self::Elem) -> usize {
        let q = self.quantale();
        (0..q.len())
            .filter(|&v| self.leq(&self.act(v, a), b))
            .fold(q.bottom(), |acc, v| q.join(acc, v))
    }

    fn join_all<'a, I>(&self, it: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        it.into_iter().fold(self.bottom(), |acc, x| self.join(&acc, x))
    }

    fn meet_all<'a, I>(&self, it: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        it.into_iter().fold(self.top(), |acc, x| self.meet(&acc, x))
    }
}

/// Enumerates a module as the closure of bottom under joins with generators.
pub fn join_closure<M: Module>(m: &M, cap: usize) -> Result<Vec<M::Elem>> {
    let gens = m.generators();
    let mut seen: std::collections::HashSet<M::Elem> = std::collections::HashSet::new();
    let mut frontier = vec![m.bottom()];
    seen.insert(m.bottom());
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = m.join(&x, g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return Err(Error::SizeLimitExceeded {
                        what: "module carrier",
                        size: seen.len() as u128,
                        cap: cap as u128,
                    });
                }
                frontier.push(y);
            }
        }
    }
    let mut out: Vec<M::Elem> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// A module together with its enumerated carrier and an element index.
#[derive(Clone, Debug)]
pub struct Indexed<M: Module> {
    pub module: M,
    pub elems: Vec<M::Elem>,
    index: HashMap<M::Elem, usize>,
}

impl<M: Module> Indexed<M> {
    pub fn new(module: M, cap: usize) -> Result<Self> {
        let elems = module.elements(cap)?;
        Ok(Self::from_elems(module, elems))
    }

    pub fn from_elems(module: M, elems: Vec<M::Elem>) -> Self {
        let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Self { module, elems, index }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Position of an element of the carrier.
    pub fn idx(&self, e: &M::Elem) -> usize {
        *self.index.get(e).unwrap_or_else(|| panic!("{e:?} is not in the carrier"))
    }

    pub fn try_idx(&self, e: &M::Elem) -> Option<usize> {
        self.index.get(e).copied()
    }
}

// ---------------------------------------------------------------------------
// Table-backed modules

#[derive(Debug, PartialEq, Eq)]
struct VModuleData {
    quantale: Arc<Quantale>,
    carrier: FinLattice,
    action: Vec<Vec<usize>>,
    upper: Vec<Vec<usize>>,
    gens: Vec<usize>,
}

/// A module given by a carrier lattice and an action table `V x A -> A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VModule {
    inner: Arc<VModuleData>,
}

impl VModule {
    /// Validates the module laws: the action preserves joins in each
    /// argument, is associative over the tensor, and the unit acts trivially.
    pub fn validate(quantale: Arc<Quantale>, carrier: FinLattice, action: Vec<Vec<usize>>) -> Result<Self> {
        let n = carrier.len();
        if action.len() != quantale.len() || action.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("action must be {}x{n}", quantale.len())));
        }
        for row in &action {
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::BadElementIndex { what: "module", index: bad, size: n });
            }
        }
        let m = Self::unchecked(quantale, carrier, action);
        check_module_laws(&m, &(0..n).collect::<Vec<_>>())?;
        Ok(m)
    }

    fn unchecked(quantale: Arc<Quantale>, carrier: FinLattice, action: Vec<Vec<usize>>) -> Self {
        let n = carrier.len();
        let upper = (0..quantale.len())
            .map(|v| {
                (0..n)
                    .map(|b| carrier.join_all((0..n).filter(|&c| carrier.leq(action[v][c], b))))
                    .collect()
            })
            .collect();
        let gens = carrier.join_irreducibles();
        Self { inner: Arc::new(VModuleData { quantale, carrier, action, upper, gens }) }
    }

    /// The quantale acting on itself by the tensor.
    pub fn regular(quantale: Arc<Quantale>) -> Self {
        let carrier = quantale.lattice().clone();
        let action = quantale.tensor_table().to_vec();
        Self::validate(quantale, carrier, action).expect("a quantale is a module over itself")
    }

    /// Copies any enumerable module into tables.
    pub fn materialize<M: Module>(m: &M, cap: usize) -> Result<(Self, Vec<M::Elem>)> {
        let ix = Indexed::new(m.clone(), cap)?;
        let labels = ix.elems.iter().map(|e| m.show(e)).collect();
        let carrier = FinLattice::from_order(labels, |a, b| m.leq(&ix.elems[a], &ix.elems[b]))?;
        let action = (0..m.quantale().len())
            .map(|v| ix.elems.iter().map(|e| ix.idx(&m.act(v, e))).collect())
            .collect();
        let vm = Self::validate(m.quantale().clone(), carrier, action)?;
        Ok((vm, ix.elems))
    }

    pub fn carrier(&self) -> &FinLattice {
        &self.inner.carrier
    }

    pub fn len(&self) -> usize {
        self.inner.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.carrier.is_empty()
    }

    pub fn label(&self, a: usize) -> &str {
        self.inner.carrier.label(a)
    }

    pub fn action_table(&self) -> &[Vec<usize>] {
        &self.inner.action
    }

    /// The module residuation table `a -> b`.
    pub fn residuation_table(&self) -> Vec<Vec<usize>> {
        (0..self.len()).map(|a| (0..self.len()).map(|b| self.residuate(&a, &b)).collect()).collect()
    }

    /// True if both modules share the same quantale object.
    pub fn same_base(&self, other: &impl Module) -> bool {
        Arc::ptr_eq(&self.inner.quantale, other.quantale())
    }
}

impl Module for VModule {
    type Elem = usize;

    fn quantale(&self) -> &Arc<Quantale> {
        &self.inner.quantale
    }
    fn bottom(&self) -> usize {
        self.inner.carrier.bottom()
    }
    fn top(&self) -> usize {
        self.inner.carrier.top()
    }
    fn join(&self, a: &usize, b: &usize) -> usize {
        self.inner.carrier.join(*a, *b)
    }
    fn meet(&self, a: &usize, b: &usize) -> usize {
        self.inner.carrier.meet(*a, *b)
    }
    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.inner.carrier.leq(*a, *b)
    }
    fn act(&self, v: usize, a: &usize) -> usize {
        self.inner.action[v][*a]
    }
    fn act_upper(&self, v: usize, b: &usize) -> usize {
        self.inner.upper[v][*b]
    }
    fn generators(&self) -> Vec<usize> {
        self.inner.gens.clone()
    }
    fn show(&self, a: &usize) -> String {
        self.inner.carrier.label(*a).to_string()
    }
    fn elements(&self, cap: usize) -> Result<Vec<usize>> {
        size_check("module carrier", self.len() as u128, cap)?;
        Ok((0..self.len()).collect())
    }
}

pub(crate) fn size_check(what: &'static str, size: u128, cap: usize) -> Result<()> {
    if size > cap as u128 {
        Err(Error::SizeLimitExceeded { what, size, cap: cap as u128 })
    } else {
        Ok(())
    }
}

/// Checks the module laws of any module on the listed elements.
///
/// Join preservation is tested against the generators, which is exact: if
/// `h(x ∨ g) = h(x) ∨ h(g)` for every `x` and generator `g` then `h`
/// preserves every binary join.
pub fn check_module_laws<M: Module>(m: &M, elems: &[M::Elem]) -> Result<()> {
    let q = m.quantale();
    let gens = m.generators();
    let w = |xs: &[&M::Elem], vs: &[usize]| -> Vec<String> {
        vs.iter().map(|&v| q.label(v).to_string()).chain(xs.iter().map(|x| m.show(x))).collect()
    };
    let bot = m.bottom();
    for x in elems {
        if !m.leq(&bot, x) || !m.leq(x, &m.top()) {
            return Err(Error::ShapeMismatch(format!("{} escapes the bounds", m.show(x))));
        }
        for g in &gens {
            let j = m.join(x, g);
            if !m.leq(x, &j) || !m.leq(g, &j) {
                return Err(Error::ShapeMismatch(format!("join of {} and {} is not an upper bound", m.show(x), m.show(g))));
            }
        }
    }
    for v in 0..q.len() {
        if m.act(v, &bot) != bot {
            return Err(Error::ActionNotJoinPreserving { witness: w(&[&bot], &[v]) });
        }
        for x in elems {
            for g in &gens {
                if m.act(v, &m.join(x, g)) != m.join(&m.act(v, x), &m.act(v, g)) {
                    return Err(Error::ActionNotJoinPreserving { witness: w(&[x, g], &[v]) });
                }
            }
        }
    }
    for x in elems {
        if m.act(q.bottom(), x) != bot {
            return Err(Error::ActionNotJoinPreserving { witness: w(&[x], &[q.bottom()]) });
        }
        for u in 0..q.len() {
            for v in 0..q.len() {
                if m.act(q.join(u, v), x) != m.join(&m.act(u, x), &m.act(v, x)) {
                    return Err(Error::ActionNotJoinPreserving { witness: w(&[x], &[u, v]) });
                }
                if m.act(u, &m.act(v, x)) != m.act(q.tensor(u, v), x) {
                    return Err(Error::ActionNotAssociative { witness: w(&[x], &[u, v]) });
                }
            }
        }
        if m.act(q.unit(), x) != *x {
            return Err(Error::UnitActionFails { witness: w(&[x], &[]) });
        }
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Homomorphisms

/// A module homomorphism between table-backed modules.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ModuleHom {
    pub values: Vec<usize>,
}

/// Why a map fails to be a module homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomDefect {
    Bottom,
    Join(String, String),
    Action(String, String),
}

/// Checks that `values` (aligned with `d.elems`) preserves bottom, binary
/// joins and the action.
pub fn hom_defect<D: Module, C: Module>(d: &Indexed<D>, c: &C, values: &[C::Elem]) -> Option<HomDefect> {
    let m = &d.module;
    if values[d.idx(&m.bottom())] != c.bottom() {
        return Some(HomDefect::Bottom);
    }
    let gens = m.generators();
    for (i, x) in d.elems.iter().enumerate() {
        for g in &gens {
            let lhs = &values[d.idx(&m.join(x, g))];
            if *lhs != c.join(&values[i], &values[d.idx(g)]) {
                return Some(HomDefect::Join(m.show(x), m.show(g)));
            }
        }
        for v in 0..m.quantale().len() {
            if values[d.idx(&m.act(v, x))] != c.act(v, &values[i]) {
                return Some(HomDefect::Action(m.quantale().label(v).to_string(), m.show(x)));
            }
        }
    }
    None
}

/// True iff `f` is a module homomorphism `a -> b`.
pub fn is_module_hom(f: &[usize], a: &VModule, b: &VModule) -> Result<bool> {
    if !a.same_base(b) {
        return Err(Error::QuantaleMismatch);
    }
    if f.len() != a.len() {
        return Err(Error::ShapeMismatch(format!("map has {} values for {} elements", f.len(), a.len())));
    }
    if let Some(&bad) = f.iter().find(|&&x| x >= b.len()) {
        return Err(Error::BadElementIndex { what: "module", index: bad, size: b.len() });
    }
    let ix = Indexed::from_elems(a.clone(), (0..a.len()).collect());
    Ok(hom_defect(&ix, b, f).is_none())
}

/// Composite `g ∘ f` of table maps.
pub fn compose(g: &[usize], f: &[usize]) -> Vec<usize> {
    f.iter().map(|&x| g[x]).collect()
}

/// Every module homomorphism between table-backed modules, in
/// lexicographic order of value vectors.
///
/// Join-preserving maps of the carriers are enumerated first and then
/// filtered by equivariance.
pub fn enumerate_module_homs(a: &VModule, l: &VModule) -> Result<Vec<ModuleHom>> {
    if !a.same_base(l) {
        return Err(Error::QuantaleMismatch);
    }
    let q = a.quantale();
    let maps = crate::lattice::enumerate_join_preserving_maps(a.carrier(), l.carrier());
    Ok(maps
        .into_iter()
        .filter(|f| (0..q.len()).all(|v| (0..a.len()).all(|x| f[a.act(v, &x)] == l.act(v, &f[x]))))
        .map(|values| ModuleHom { values })
        .collect())
}

/// Every module homomorphism between enumerable modules, as value vectors
/// aligned with `d.elems`, in lexicographic order.
///
/// Images are assigned to the join-irreducibles of the domain in a
/// topological order, pruning on monotonicity and on equivariance as soon as
/// the relevant images are fixed. Each complete assignment is extended by
/// joins and re-checked exactly.
pub fn enumerate_homs<D: Module, C: Module>(
    d: &Indexed<D>,
    c: &Indexed<C>,
    max_homs: usize,
    exec: Exec,
) -> Result<Vec<Vec<C::Elem>>> {
    let m = &d.module;
    let cm = &c.module;
    let q = m.quantale();
    if !Arc::ptr_eq(q, cm.quantale()) {
        return Err(Error::QuantaleMismatch);
    }
    let n = d.len();
    let bot = d.idx(&m.bottom());
    let below: Vec<Vec<bool>> =
        (0..n).map(|x| (0..n).map(|y| m.leq(&d.elems[y], &d.elems[x])).collect()).collect();
    let mut jis: Vec<usize> = (0..n)
        .filter(|&x| {
            x != bot && {
                let strict = (0..n).filter(|&y| y != x && below[x][y]).map(|y| &d.elems[y]);
                m.join_all(strict) != d.elems[x]
            }
        })
        .collect();
    jis.sort_by_key(|&x| (below[x].iter().filter(|&&b| b).count(), x));
    let k = jis.len();
    // monotonicity: earlier irreducibles below each one
    let preds: Vec<Vec<usize>> =
        (0..k).map(|i| (0..i).filter(|&p| below[jis[i]][jis[p]]).collect()).collect();
    // equivariance: h(v * j) = join of h over irreducibles below v * j
    let mut checks: Vec<Vec<(usize, usize, Vec<usize>)>> = vec![Vec::new(); k];
    for i in 0..k {
        for v in 0..q.len() {
            let y = d.idx(&m.act(v, &d.elems[jis[i]]));
            let s: Vec<usize> = (0..k).filter(|&p| below[y][jis[p]]).collect();
            let level = s.iter().copied().chain([i]).max().unwrap();
            checks[level].push((i, v, s));
        }
    }
    let search = |first: usize| -> Vec<Vec<C::Elem>> {
        let mut out = Vec::new();
        let mut assign: Vec<usize> = vec![0; k];
        if k == 0 {
            if first == 0 {
                let vals = vec![cm.bottom(); n];
                if hom_defect(d, cm, &vals).is_none() {
                    out.push(vals);
                }
            }
            return out;
        }
        assign[0] = first;
        fn rec<D: Module, C: Module>(
            lvl: usize,
            assign: &mut Vec<usize>,
            ctx: &Ctx<'_, D, C>,
            out: &mut Vec<Vec<C::Elem>>,
        ) {
            let cm = &ctx.c.module;
            let ok = |assign: &Vec<usize>, lvl: usize| {
                let img = |p: usize| &ctx.c.elems[assign[p]];
                ctx.preds[lvl].iter().all(|&p| cm.leq(img(p), img(lvl)))
                    && ctx.checks[lvl].iter().all(|(i, v, s)| {
                        cm.join_all(s.iter().map(|&p| img(p))) == cm.act(*v, img(*i))
                    })
            };
            if lvl == 0 {
                if !ok(assign, 0) {
                    return;
                }
                return rec(1, assign, ctx, out);
            }
            if lvl == ctx.jis.len() {
                let vals: Vec<C::Elem> = (0..ctx.d.len())
                    .map(|x| {
                        cm.join_all(
                            (0..ctx.jis.len())
                                .filter(|&p| ctx.below[x][ctx.jis[p]])
                                .map(|p| &ctx.c.elems[assign[p]]),
                        )
                    })
                    .collect();
                if hom_defect(ctx.d, cm, &vals).is_none() {
                    out.push(vals);
                }
                return;
            }
            for cand in 0..ctx.c.len() {
                assign[lvl] = cand;
                if ok(assign, lvl) {
                    rec(lvl + 1, assign, ctx, out);
                }
            }
        }
        let ctx = Ctx { d, c, jis: &jis, below: &below, preds: &preds, checks: &checks };
        rec(0, &mut assign, &ctx, &mut out);
        out
    };
    let firsts: Vec<usize> = (0..c.len().max(1)).collect();
    let mut out: Vec<Vec<C::Elem>> = par::map(exec, &firsts, |&f| search(f)).into_iter().flatten().collect();
    out.sort();
    out.dedup();
    size_check("hom set", out.len() as u128, max_homs)?;
    Ok(out)
}

struct Ctx<'a, D: Module, C: Module> {
    d: &'a Indexed<D>,
    c: &'a Indexed<C>,
    jis: &'a [usize],
    below: &'a [Vec<bool>],
    preds: &'a [Vec<usize>],
    checks: &'a [Vec<(usize, usize, Vec<usize>)>],
}

/// Homomorphisms out of a power `M^n` through `Hom(M^n, C) ≅ Hom(M, C)^n`:
/// a tuple `(h_s)` acts as `x ↦ ⋁_s h_s(x(s))`.
///
/// Value vectors are aligned with `Power::new(base, n).elements()` and
/// returned in lexicographic order.
pub fn enumerate_homs_from_power<M: Module, C: Module>(
    base: &Indexed<M>,
    n: usize,
    c: &Indexed<C>,
    max_homs: usize,
    exec: Exec,
) -> Result<Vec<Vec<C::Elem>>> {
    let comps = enumerate_homs(base, c, max_homs, exec)?;
    size_check("hom set", (comps.len() as u128).saturating_pow(n as u32), max_homs)?;
    let b = base.len();
    let total = comps.len().pow(n as u32);
    let power_len = b.pow(n as u32);
    let cm = &c.module;
    let build = |code: usize| -> Vec<C::Elem> {
        let mut pick = vec![0; n];
        let mut r = code;
        for s in (0..n).rev() {
            pick[s] = r % comps.len();
            r /= comps.len();
        }
        (0..power_len)
            .map(|x| {
                let mut rest = x;
                let mut coords = vec![0; n];
                for s in (0..n).rev() {
                    coords[s] = rest % b;
                    rest /= b;
                }
                (0..n).fold(cm.bottom(), |acc, s| cm.join(&acc, &comps[pick[s]][coords[s]]))
            })
            .collect()
    };
    let mut out = par::map_range(exec, total, build);
    out.sort();
    Ok(out)
}

// ---------------------------------------------------------------------------
// Powers

/// The pointwise power `M^n`: tuples indexed by `0..n`.
#[derive(Clone, Debug)]
pub struct Power<M: Module> {
    pub base: M,
    pub n: usize,
}

impl<M: Module> Power<M> {
    pub fn new(base: M, n: usize) -> Self {
        Self { base, n }
    }

    /// The tuple with `x` at position `i` and bottom elsewhere.
    pub fn delta(&self, x: &M::Elem, i: usize) -> Vec<M::Elem> {
        (0..self.n).map(|k| if k == i { x.clone() } else { self.base.bottom() }).collect()
    }
}

/// The power module `A^T` for a `T` with `n` points.
pub fn power_module<M: Module>(a: M, n: usize, cap: usize) -> Result<Power<M>> {
    let b = a.elements(cap)?.len() as u128;
    size_check("power module", b.saturating_pow(n as u32), cap)?;
    Ok(Power::new(a, n))
}

impl<M: Module> Module for Power<M> {
    type Elem = Vec<M::Elem>;

    fn quantale(&self) -> &Arc<Quantale> {
        self.base.quantale()
    }
    fn bottom(&self) -> Self::Elem {
        vec![self.base.bottom(); self.n]
    }
    fn top(&self) -> Self::Elem {
        vec![self.base.top(); self.n]
    }
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.join(x, y)).collect()
    }
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.meet(x, y)).collect()
    }
    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.iter().zip(b).all(|(x, y)| self.base.leq(x, y))
    }
    fn act(&self, v: usize, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.act(v, x)).collect()
    }
    fn act_upper(&self, v: usize, b: &Self::Elem) -> Self::Elem {
        b.iter().map(|x| self.base.act_upper(v, x)).collect()
    }
    fn generators(&self) -> Vec<Self::Elem> {
        let gens = self.base.generators();
        (0..self.n).flat_map(|i| gens.iter().map(move |g| self.delta(g, i))).collect()
    }
    fn show(&self, a: &Self::Elem) -> String {
        let parts: Vec<String> = a.iter().map(|x| self.base.show(x)).collect();
        format!("({})", parts.join(","))
    }
    /// Row-major order: the first coordinate varies slowest.
    fn elements(&self, cap: usize) -> Result<Vec<Self::Elem>> {
        let base = self.base.elements(cap)?;
        size_check("power module", (base.len() as u128).saturating_pow(self.n as u32), cap)?;
        let mut out: Vec<Vec<M::Elem>> = vec![Vec::new()];
        for _ in 0..self.n {
            out = out
                .into_iter()
                .flat_map(|p| {
                    base.iter().map(move |x| {
                        let mut q = p.clone();
                        q.push(x.clone());
                        q
                    })
                })
                .collect();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example;

    #[test]
    fn worked_modules_validate() {
        let ex = example::Example::new();
        assert_eq!(ex.a.len(), 5);
        assert_eq!(ex.l.len(), 2);
        // residuation on L
        let r = ex.l.residuation_table();
        assert_eq!(r, vec![vec![2, 2], vec![0, 2]]);
        // b -> b = b on A
        assert_eq!(ex.a.residuate(&2, &2), 1);
    }

    #[test]
    fn worked_homs() {
        let ex = example::Example::new();
        let homs = enumerate_module_homs(&ex.a, &ex.l).unwrap();
        let vals: Vec<Vec<usize>> = homs.into_iter().map(|h| h.values).collect();
        assert_eq!(vals, vec![vec![0, 0, 0, 0, 0], vec![0, 0, 1, 1, 1], vec![0, 1, 1, 1, 1]]);
        // f4 = (0,0,0,1,1) fails at 1*b
        assert!(!is_module_hom(&[0, 0, 0, 1, 1], &ex.a, &ex.l).unwrap());
        assert!(is_module_hom(&[0, 0, 1, 1, 1], &ex.a, &ex.l).unwrap());
        let ia = Indexed::new(ex.a.clone(), 100).unwrap();
        let il = Indexed::new(ex.l.clone(), 100).unwrap();
        let generic = enumerate_homs(&ia, &il, 100, Exec::Sequential).unwrap();
        assert_eq!(generic, vals);
    }

    #[test]
    fn homs_into_trivial_module() {
        let ex = example::Example::new();
        let one = VModule::validate(
            ex.v.clone(),
            FinLattice::chain(vec!["0".into()]),
            vec![vec![0]; ex.v.len()],
        )
        .unwrap();
        assert_eq!(enumerate_module_homs(&ex.a, &one).unwrap().len(), 1);
    }

    #[test]
    fn power_of_example_module() {
        let ex = example::Example::new();
        let p = power_module(ex.a.clone(), 2, 1000).unwrap();
        let elems = p.elements(1000).unwrap();
        assert_eq!(elems.len(), 25);
        check_module_laws(&p, &elems).unwrap();
        let (vm, _) = VModule::materialize(&p, 1000).unwrap();
        assert_eq!(vm.len(), 25);
    }

    #[test]
    fn homs_from_power_match_generic() {
        let ex = example::Example::new();
        let il = Indexed::new(ex.l.clone(), 100).unwrap();
        let p = Power::new(ex.l.clone(), 2);
        let ip = Indexed::new(p, 100).unwrap();
        let generic = enumerate_homs(&ip, &il, 1000, Exec::Sequential).unwrap();
        let split = enumerate_homs_from_power(&il, 2, &il, 1000, Exec::Sequential).unwrap();
        assert_eq!(generic, split);
    }
}
