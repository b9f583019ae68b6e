//! The diamond-lattice worked example: the quantale M3, its three-element
//! subquantale, the module A with `F(x) = a * x`, and the two-element
//! module L.

use std::sync::Arc;

use crate::fsemilattice::FSemilattice;
use crate::lattice::{labels, FinLattice};
use crate::quantale::Quantale;
use crate::vmodule::VModule;

/// The diamond `0 < a, b, c < 1` with its order, indices `0..5`.
pub fn diamond() -> FinLattice {
    FinLattice::from_order(labels(&["0", "a", "b", "c", "1"]), |x, y| x == y || x == 0 || y == 4)
        .expect("the diamond is a lattice")
}

/// The tensor table of the example on the diamond, rows indexed by the
/// left argument. Not commutative: `c ⊗ b = 1` while `b ⊗ c = c`.
pub fn m3_table() -> Vec<Vec<usize>> {
    vec![
        vec![0, 0, 0, 0, 0],
        vec![0, 0, 1, 1, 1],
        vec![0, 1, 2, 3, 4],
        vec![0, 1, 4, 4, 4],
        vec![0, 1, 4, 4, 4],
    ]
}

/// Validates the table with unit `b`.
///
/// This fails: `c ⊗ b = 1`, so `b` is a left unit only. The subquantale
/// `{0, b, 1}` and everything built on it are unaffected.
pub fn m3() -> crate::Result<Quantale> {
    Quantale::validate(diamond(), m3_table(), 2)
}

/// The chain `0 < b < 1` with unit `b` and `b ⊗ 1 = 1 ⊗ 1 = 1`.
pub fn v3() -> Arc<Quantale> {
    let t = vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 2]];
    Arc::new(
        Quantale::validate(FinLattice::chain(labels(&["0", "b", "1"])), t, 1)
            .expect("the three-chain is a unital quantale"),
    )
}

/// All objects of the worked example over one shared quantale.
#[derive(Clone, Debug)]
pub struct Example {
    pub v: Arc<Quantale>,
    /// M3 as a module over the chain, acting by restriction of ⊗.
    pub a: VModule,
    /// `(A, F)` with `F(x) = a ⊗ x`.
    pub h: FSemilattice,
    pub l: VModule,
}

impl Example {
    pub fn new() -> Self {
        let m3 = m3_table();
        let v = v3();
        // chain elements 0, b, 1 sit at positions 0, 2, 4 of the diamond
        let embed = [0usize, 2, 4];
        let action = embed.iter().map(|&e| m3[e].clone()).collect();
        let a = VModule::validate(v.clone(), diamond(), action).expect("A is a module");
        let f = m3[1].clone();
        let h = FSemilattice::validate(a.clone(), f).expect("F is a module endomorphism");
        let l = VModule::validate(
            v.clone(),
            FinLattice::chain(labels(&["0", "1"])),
            vec![vec![0, 0], vec![0, 1], vec![0, 1]],
        )
        .expect("L is a module");
        Self { v, a, h, l }
    }
}

impl Default for Example {
    fn default() -> Self {
        Self::new()
    }
}
