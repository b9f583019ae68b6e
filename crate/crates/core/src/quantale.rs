//! Unital quantales over a finite lattice.

use crate::error::{Error, Result};
use crate::lattice::FinLattice;

/// A finite lattice with an associative, join-distributive tensor and a
/// two-sided unit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quantale {
    lattice: FinLattice,
    tensor: Vec<Vec<usize>>,
    unit: usize,
    commutative: bool,
    residual: Vec<Vec<usize>>,
}

impl Quantale {
    /// Checks associativity, distributivity over binary and empty joins in
    /// both arguments, and the unit laws.
    pub fn validate(lattice: FinLattice, tensor: Vec<Vec<usize>>, unit: usize) -> Result<Self> {
        let n = lattice.len();
        if tensor.len() != n || tensor.iter().any(|r| r.len() != n) {
            return Err(Error::ShapeMismatch(format!("tensor must be {n}x{n}")));
        }
        for row in &tensor {
            if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                return Err(Error::BadElementIndex { what: "quantale", index: bad, size: n });
            }
        }
        if unit >= n {
            return Err(Error::BadElementIndex { what: "quantale", index: unit, size: n });
        }
        let l = |i: usize| lattice.label(i).to_string();
        let t = |a: usize, b: usize| tensor[a][b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t(t(a, b), c) != t(a, t(b, c)) {
                        return Err(Error::NotAssociative { witness: vec![l(a), l(b), l(c)] });
                    }
                }
            }
        }
        let bot = lattice.bottom();
        for a in 0..n {
            if t(a, bot) != bot || t(bot, a) != bot {
                return Err(Error::NotJoinDistributive { witness: vec![l(a), l(bot)] });
            }
            for b in 0..n {
                for c in 0..n {
                    let bc = lattice.join(b, c);
                    if t(a, bc) != lattice.join(t(a, b), t(a, c))
                        || t(bc, a) != lattice.join(t(b, a), t(c, a))
                    {
                        return Err(Error::NotJoinDistributive { witness: vec![l(a), l(b), l(c)] });
                    }
                }
            }
        }
        for a in 0..n {
            if t(a, unit) != a || t(unit, a) != a {
                return Err(Error::UnitLawFails { witness: vec![l(a)] });
            }
        }
        let commutative = (0..n).all(|a| (0..n).all(|b| t(a, b) == t(b, a)));
        let residual = (0..n)
            .map(|u| (0..n).map(|w| lattice.join_all((0..n).filter(|&v| lattice.leq(t(v, u), w)))).collect())
            .collect();
        Ok(Self { lattice, tensor, unit, commutative, residual })
    }

    pub fn lattice(&self) -> &FinLattice {
        &self.lattice
    }

    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn bottom(&self) -> usize {
        self.lattice.bottom()
    }

    pub fn top(&self) -> usize {
        self.lattice.top()
    }

    pub fn label(&self, v: usize) -> &str {
        self.lattice.label(v)
    }

    pub fn tensor_table(&self) -> &[Vec<usize>] {
        &self.tensor
    }

    #[inline]
    pub fn tensor(&self, a: usize, b: usize) -> usize {
        self.tensor[a][b]
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.lattice.leq(a, b)
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lattice.join(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lattice.meet(a, b)
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// Fails with [`Error::NonCommutativeBase`] unless the tensor commutes.
    pub fn require_commutative(&self) -> Result<()> {
        if self.commutative {
            Ok(())
        } else {
            Err(Error::NonCommutativeBase)
        }
    }

    /// The right adjoint of `- ⊗ u`: the largest `v` with `v ⊗ u <= w`.
    #[inline]
    pub fn residuate(&self, u: usize, w: usize) -> usize {
        self.residual[u][w]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::example;

    #[test]
    fn diamond_table_fails_the_right_unit_law() {
        // c ⊗ b = 1 but b ⊗ c = c: b is a left unit only
        let t = example::m3_table();
        assert_eq!(t[3][2], 4);
        assert_eq!(t[2][3], 3);
        match example::m3() {
            Err(Error::UnitLawFails { witness }) => assert_eq!(witness, vec!["c".to_string()]),
            other => panic!("expected a unit-law witness, got {other:?}"),
        }
    }

    #[test]
    fn relation_quantale_is_not_commutative() {
        let r = crate::generate::relations(2);
        assert_eq!(r.len(), 16);
        assert!(!r.is_commutative());
    }

    #[test]
    fn three_chain_is_commutative() {
        let v = example::v3();
        assert!(v.is_commutative());
        assert_eq!(v.residuate(2, 1), 0);
        assert_eq!(v.residuate(1, 1), 1);
    }

    #[test]
    fn two_element_quantale() {
        let two = crate::generate::two();
        assert!(two.is_commutative());
        assert_eq!(two.residuate(0, 0), 1);
        for w in 0..2 {
            assert_eq!(two.residuate(two.unit(), w), w);
        }
    }

    #[test]
    fn broken_tables_are_rejected() {
        let c = FinLattice::chain(crate::lattice::labels(&["0", "1"]));
        // 1⊗1 = 0 with unit 1 breaks the unit law
        let e = Quantale::validate(c.clone(), vec![vec![0, 0], vec![0, 0]], 1).unwrap_err();
        assert!(matches!(e, Error::UnitLawFails { .. }));
        // 1⊗0 = 1 breaks the empty-join law
        let e = Quantale::validate(c, vec![vec![0, 1], vec![1, 1]], 1).unwrap_err();
        assert!(matches!(e, Error::NotJoinDistributive { .. }));
    }
}
