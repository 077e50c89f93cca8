//! Hom-complexes of paracomplexes and finite-level equivariant periodic
//! cyclic homology.

mod complex;
mod hp;
#[cfg(test)]
mod tests;

pub use complex::{homology_ranks, ChainMap, HomComplex, HomologyRanks};
pub use hp::{
    compose_classes, forecast, hp_equivariant, hp_theta_levels, semisimple_type, semisimple_value, HpClass, HpMode,
    HpResult, LevelRow,
};
