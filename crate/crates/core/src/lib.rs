//! Small resolutions of Schubert varieties via BP decompositions.

pub mod coxeter;
pub mod bp;
pub mod error;
pub mod hecke;
pub mod resolution;

pub use coxeter::{CartanType, CoxeterGroup, Elem, ParabolicSet};
pub use error::{Error, Result};
