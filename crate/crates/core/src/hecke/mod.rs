//! Exact fiber counts of multiplication maps through the Iwahori-Hecke algebra.

mod algebra;
pub mod brute;
mod poly;
mod profile;

pub use algebra::{HeckeAlgebra, HeckeElement};
pub use brute::brute_force_profile;
pub use poly::IntPoly;
pub use profile::{
    check_identities, fiber_profile, smallness, BadCell, CellRecord, FiberProfile, ProfileReport,
    SmallnessCertificate, Verdict,
};
