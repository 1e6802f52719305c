//! Exact weight distributions and support designs of two families of
//! extended binary cyclic codes defined by trace forms over GF(2^m).

pub mod cli;
pub mod codebuild;
pub mod designs;
pub mod error;
pub mod gf2m;
pub mod invariance;
pub mod polyops;
pub mod spectrum;

pub use codebuild::{CodeSpec, Family, LinearCode, Workers};
pub use error::{Error, Result};
pub use gf2m::{FieldElement, FieldSpec};
pub use spectrum::WeightDistribution;
