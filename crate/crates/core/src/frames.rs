//! V-valued relations on finite point sets and their homomorphisms.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::quantale::Quantale;

/// A finite point set with a V-valued accessibility relation `r`.
///
/// No reflexivity or transitivity is assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VFrame {
    quantale: Arc<Quantale>,
    points: Vec<String>,
    r: Vec<Vec<usize>>,
}

impl VFrame {
    pub fn validate(quantale: Arc<Quantale>, points: Vec<String>, r: Vec<Vec<usize>>) -> Result<Self> {
        let n = points.len();
        if r.len() != n || r.iter().any(|row| row.len() != n) {
            return Err(Error::ShapeMismatch(format!("r must be {n}x{n}")));
        }
        for row in &r {
            if let Some(&bad) = row.iter().find(|&&v| v >= quantale.len()) {
                return Err(Error::BadElementIndex { what: "quantale", index: bad, size: quantale.len() });
            }
        }
        Ok(Self { quantale, points, r })
    }

    /// Points labelled `t0, t1, ...`.
    pub fn unlabeled(quantale: Arc<Quantale>, r: Vec<Vec<usize>>) -> Result<Self> {
        let points = (0..r.len()).map(|i| format!("t{i}")).collect();
        Self::validate(quantale, points, r)
    }

    pub fn quantale(&self) -> &Arc<Quantale> {
        &self.quantale
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn r_table(&self) -> &[Vec<usize>] {
        &self.r
    }

    #[inline]
    pub fn r(&self, i: usize, j: usize) -> usize {
        self.r[i][j]
    }
}

/// A point map `source -> target` with `r(i,j) <= s(f(i),f(j))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameHom {
    pub source: Arc<VFrame>,
    pub target: Arc<VFrame>,
    pub map: Vec<usize>,
}

/// The first pair `(i, j)` where `r(i,j) <= s(f(i),f(j))` fails.
pub fn frame_hom_defect(f: &[usize], j1: &VFrame, j2: &VFrame) -> Option<(usize, usize)> {
    let q = j1.quantale();
    (0..j1.len())
        .flat_map(|i| (0..j1.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !q.leq(j1.r(i, j), j2.r(f[i], f[j])))
}

/// True iff `f` is a frame homomorphism `j1 -> j2`.
pub fn is_frame_hom(f: &[usize], j1: &VFrame, j2: &VFrame) -> Result<bool> {
    if !Arc::ptr_eq(j1.quantale(), j2.quantale()) {
        return Err(Error::QuantaleMismatch);
    }
    if f.len() != j1.len() {
        return Err(Error::ShapeMismatch(format!("map has {} values for {} points", f.len(), j1.len())));
    }
    if let Some(&bad) = f.iter().find(|&&x| x >= j2.len()) {
        return Err(Error::BadElementIndex { what: "frame", index: bad, size: j2.len() });
    }
    Ok(frame_hom_defect(f, j1, j2).is_none())
}

impl FrameHom {
    pub fn new(source: Arc<VFrame>, target: Arc<VFrame>, map: Vec<usize>) -> Result<Self> {
        if !is_frame_hom(&map, &source, &target)? {
            let (i, j) = frame_hom_defect(&map, &source, &target).unwrap();
            return Err(Error::CompositionMismatch(format!(
                "not a frame homomorphism at ({}, {})",
                source.points()[i],
                source.points()[j]
            )));
        }
        Ok(Self { source, target, map })
    }

    pub fn identity(j: Arc<VFrame>) -> Self {
        let map = (0..j.len()).collect();
        Self { source: j.clone(), target: j, map }
    }

    /// The composite `self ∘ f`.
    pub fn after(&self, f: &FrameHom) -> Result<FrameHom> {
        if !Arc::ptr_eq(&f.target, &self.source) && *f.target != *self.source {
            return Err(Error::CompositionMismatch("source of g is not the target of f".into()));
        }
        let map = f.map.iter().map(|&i| self.map[i]).collect();
        FrameHom::new(f.source.clone(), self.target.clone(), map)
    }
}

/// Composite `g ∘ f` of frame homomorphisms.
pub fn compose_frame_homs(g: &FrameHom, f: &FrameHom) -> Result<FrameHom> {
    g.after(f)
}

pub fn identity_frame_hom(j: Arc<VFrame>) -> FrameHom {
    FrameHom::identity(j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example;

    #[test]
    fn identity_and_top_targets() {
        let v = example::v3();
        let j = Arc::new(VFrame::unlabeled(v.clone(), vec![vec![1, 0], vec![2, 1]]).unwrap());
        assert!(is_frame_hom(&[0, 1], &j, &j).unwrap());
        let top = Arc::new(VFrame::unlabeled(v.clone(), vec![vec![2]]).unwrap());
        assert!(is_frame_hom(&[0, 0], &j, &top).unwrap());
        let zero = Arc::new(VFrame::unlabeled(v.clone(), vec![vec![0]]).unwrap());
        assert!(!is_frame_hom(&[0], &top, &zero).unwrap());
        let id = FrameHom::identity(j.clone());
        let f = FrameHom::new(j.clone(), top.clone(), vec![0, 0]).unwrap();
        assert_eq!(compose_frame_homs(&f, &id).unwrap(), f);
        let id_top = FrameHom::identity(top);
        assert_eq!(compose_frame_homs(&id_top, &f).unwrap(), f);
    }

    #[test]
    fn bad_tables_rejected() {
        let v = example::v3();
        assert!(VFrame::unlabeled(v.clone(), vec![vec![7]]).is_err());
        assert!(VFrame::unlabeled(v, vec![vec![0, 0]]).is_err());
    }
}
