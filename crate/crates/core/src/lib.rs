//! Exact computations for equivariant vector bundles on (isotropic) flag
//! varieties: Borel–Bott–Weil pushforwards, staircase combinatorics,
//! virtual K-classes of complexes and the exceptional blocks.

pub mod bbw;
pub mod characters;
pub mod collections;
pub mod complexes;
pub mod error;
pub mod staircase;
pub mod weights;

pub use error::{Error, Result};
