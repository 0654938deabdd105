//! Exact classification of the simple relaxed highest-weight modules of the
//! Bershadsky-Polyakov minimal models `BP(u, v)` at level `k = -3 + u/v`.
//!
//! Start from [`make_level`], then [`build_atlas`] for the full classification
//! or the individual maps in [`module_data`], [`functors`] and [`smith`].

pub mod classifier;
pub mod error;
pub mod functors;
pub mod level;
pub mod module_data;
pub mod oracle;
pub mod poly;
pub mod rational;
pub mod render;
pub mod smith;
pub mod verify;
pub mod weights;

pub use classifier::{build_atlas, counts, nonss_partner, Atlas, Counts, ExactSeqRecord, FamilyRecord};
pub use error::{Error, Result};
pub use functors::{sf_orbit, sf_weight, FlowAmount, OrbitStatus, OrbitTable};
pub use level::{make_level, relaxed_sector_exists, LevelParams};
pub use module_data::{
    solve_weight, top_space_dim, twisted_data, untwisted_data, ChargeWeight, ModuleClass,
    ModuleLabel, Sector, TopDim,
};
pub use rational::{q, Rational};
pub use render::OutputFormat;
pub use smith::{coherent_family, excluded_cosets, FamilyKind, SmithScalars};
pub use verify::{verify, VerifyReport};
pub use weights::{enumerate_relaxed_support, enumerate_surviving, AffineWeight};
