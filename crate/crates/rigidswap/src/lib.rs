//! Block-and-hole spherical polyhedra: projective self-stresses of their bar
//! frameworks, motion assignments of their body-hinge structures, gusseting,
//! and verification that swapping blocks with holes exchanges the two spaces.

pub mod bodyhinge;
pub mod conditions;
pub mod config;
pub mod document;
pub mod extensor;
pub mod fill;
pub mod fixtures;
pub mod gusset;
pub mod linalg;
pub mod poly;
pub mod rat;
pub mod statics;
pub mod swap_iso;

/// Default numeric tolerances; every threshold in the crate is one of these
/// or derives from CLI overrides.
#[derive(Clone, Copy, Debug)]
pub struct Tol {
    /// Singular values below `rank_rel` times the largest count as zero.
    pub rank_rel: f64,
    /// Residual bound, relative to the extensor scale of the framework.
    pub residual_rel: f64,
    /// Coordinatewise round-trip comparison bound.
    pub roundtrip_rel: f64,
}

impl Default for Tol {
    fn default() -> Self {
        Tol {
            rank_rel: 1e-9,
            residual_rel: 1e-8,
            roundtrip_rel: 1e-7,
        }
    }
}

impl Tol {
    pub fn with_rank_rel(rank_rel: f64) -> Self {
        Tol {
            rank_rel,
            ..Tol::default()
        }
    }
}
