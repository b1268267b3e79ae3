//! Resolution data, certification and the small-resolution search.

mod certify;
mod classify;
mod data;
mod search;
pub mod tables;

pub use certify::{certify, glue, reverse, CertifiedResolution, Route};
pub use classify::{
    classify, classify_element, expected_counts, ClassificationReport, ClassifyConfig, Counts, ElementReport, Status,
};
pub use data::{validate, ResolutionData};
pub use search::{interleave, splice, zelevinskii_applies, SearchConfig, SearchOutcome, Searcher};
pub use tables::{RowOutcome, TablesReport};
