//! Finite quantale-valued tense algebras.
//!
//! The crate works over finite unital quantales `V` and builds, on finite
//! carriers, the objects of a fuzzy tense logic: `V`-modules, `V`-frames
//! `(T, r)`, modules with a tense operator `F`, nuclei and their quotients,
//! the power `A^J`, the tensor `J⊗H` and the hom frame `J[H,L]`. The
//! [`adjunctions`] module checks the three adjunctions between these
//! constructions mechanically, by full value tables.
//!
//! Everything is immutable after validation and safe to share across
//! threads. With the `parallel` feature (default) the check suites and hom
//! enumeration can fan out over rayon; see [`par::Exec`].

// table code indexes several parallel arrays by the same position
#![allow(clippy::needless_range_loop, clippy::type_complexity)]

pub mod adjunctions;
pub mod error;
pub mod example;
pub mod frames;
pub mod fsemilattice;
pub mod functors;
pub mod generate;
pub mod lattice;
pub mod nucleus;
pub mod par;
pub mod quantale;
pub mod vmodule;

pub use error::{Error, Result};
pub use frames::{FrameHom, VFrame};
pub use fsemilattice::{FModule, FSemilattice, FramePower};
pub use functors::{HomFrame, Tensor};
pub use lattice::FinLattice;
pub use par::Exec;
pub use quantale::Quantale;
pub use vmodule::{Indexed, Module, Power, VModule};

/// Size caps for enumeration-heavy constructions.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest accepted user-supplied carrier.
    pub max_carrier: usize,
    /// Largest materialized power or quotient carrier.
    pub max_power: usize,
    /// Largest hom set used as the point set of a frame.
    pub max_points: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_carrier: 32, max_power: 100_000, max_points: 4096 }
    }
}

impl Limits {
    /// Defaults, with `TENSALG_MAX_CARRIER` overriding the carrier cap.
    pub fn from_env() -> Self {
        let mut l = Self::default();
        if let Some(n) = std::env::var("TENSALG_MAX_CARRIER").ok().and_then(|s| s.trim().parse().ok()) {
            l.max_carrier = n;
        }
        l
    }

    /// Rejects a base carrier above the cap.
    pub fn check_carrier(&self, n: usize) -> Result<()> {
        vmodule::size_check("carrier", n as u128, self.max_carrier)
    }
}
