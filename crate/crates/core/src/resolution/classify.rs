use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bp::is_smooth;
use crate::coxeter::{CoxeterGroup, Elem};
use crate::error::{Error, Result};
use crate::hecke::{HeckeAlgebra, SmallnessCertificate};

use super::search::{SearchConfig, Searcher};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Smooth,
    Small,
    /// No small resolution found within the budget; not a proof of nonexistence.
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementReport {
    pub w: String,
    pub status: Status,
    pub route: Option<String>,
    pub data: Option<Vec<Vec<usize>>>,
    pub certificate: Option<SmallnessCertificate>,
    /// For `none`: whether the bounded enumeration finished inside the budget.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exhausted: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

/// `small` counts every element with a certificate, smooth ones included.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub total: usize,
    pub small: usize,
    pub smooth: usize,
    pub none: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub system: String,
    pub budget: usize,
    pub counts: Counts,
    pub elements: Vec<ElementReport>,
}

impl ClassificationReport {
    pub fn failures(&self) -> Vec<&str> {
        self.elements
            .iter()
            .filter(|e| e.status == Status::None)
            .map(|e| e.w.as_str())
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassifyConfig {
    pub search: SearchConfig,
    /// 0 picks rayon's default.
    pub workers: usize,
    pub timings: bool,
}

impl Default for ClassifyConfig {
    fn default() -> Self {
        ClassifyConfig {
            search: SearchConfig::default(),
            workers: 0,
            timings: false,
        }
    }
}

/// Counts known for type A: every element of `A_n` for `n <= 3` is small.
pub fn expected_counts(g: &CoxeterGroup) -> Option<Counts> {
    if !g.is_type_a() {
        return None;
    }
    match g.rank() {
        4 => Some(Counts { total: 120, small: 119, smooth: 88, none: 1 }),
        5 => Some(Counts { total: 720, small: 701, smooth: 366, none: 19 }),
        r if r <= 3 => {
            let total = g.order();
            let smooth = g.elements().filter(|&w| is_smooth(g, w)).count();
            Some(Counts { total, small: total, smooth, none: 0 })
        }
        _ => None,
    }
}

pub fn classify_element(s: &Searcher<'_, '_>, w: Elem, timings: bool) -> ElementReport {
    let g = s.algebra().group();
    let start = Instant::now();
    let smooth = is_smooth(g, w);
    let out = s.search_small(w);
    let exhausted = out.resolution.is_none().then_some(out.exhausted);
    let found = out.resolution;
    let status = match (&found, smooth) {
        (Some(_), true) => Status::Smooth,
        (Some(_), false) => Status::Small,
        (None, _) => Status::None,
    };
    ElementReport {
        w: g.format(w),
        status,
        route: found.as_ref().map(|r| r.route.as_str().to_string()),
        data: found.as_ref().map(|r| r.data.to_index_lists()),
        certificate: found.map(|r| r.certificate),
        exhausted,
        millis: timings.then(|| start.elapsed().as_millis() as u64),
    }
}

/// Runs the search on every element, in parallel; the report keeps element order.
pub fn classify(g: &CoxeterGroup, cfg: ClassifyConfig) -> Result<ClassificationReport> {
    let h = HeckeAlgebra::new(g);
    let searcher = Searcher::new(&h, cfg.search);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.workers)
        .build()
        .map_err(|e| Error::Invariant(format!("thread pool: {e}")))?;
    let elements: Vec<Elem> = g.elements().collect();
    let reports: Vec<ElementReport> = pool.install(|| {
        elements
            .par_iter()
            .map(|&w| classify_element(&searcher, w, cfg.timings))
            .collect()
    });
    let mut counts = Counts {
        total: reports.len(),
        ..Counts::default()
    };
    for r in &reports {
        match r.status {
            Status::Smooth => {
                counts.smooth += 1;
                counts.small += 1;
            }
            Status::Small => counts.small += 1,
            Status::None => counts.none += 1,
        }
    }
    Ok(ClassificationReport {
        system: g.cartan_type().to_string(),
        budget: cfg.search.budget,
        counts,
        elements: reports,
    })
}
