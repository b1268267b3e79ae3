use std::fmt;

use crate::bp::FactorChain;
use crate::coxeter::{CoxeterGroup, Elem, ParabolicSet};
use crate::error::{Error, Result};
use crate::hecke::{fiber_profile, FiberProfile, HeckeAlgebra};

/// Gelfand-MacPherson resolution data `(I_0, ..., I_m)` for a target `w`; links are
/// the intersections of neighbours.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResolutionData {
    pub w: Elem,
    pub sets: Vec<ParabolicSet>,
}

impl ResolutionData {
    pub fn new(w: Elem, sets: Vec<ParabolicSet>) -> Self {
        ResolutionData { w, sets }
    }

    /// Parses `"2,3,5|1,2,4,5|2,3,5"`.
    pub fn parse(w: Elem, text: &str) -> Result<Self> {
        let sets = text
            .split('|')
            .map(|part| part.parse::<ParabolicSet>())
            .collect::<Result<Vec<_>>>()?;
        Ok(ResolutionData { w, sets })
    }

    pub fn links(&self) -> Vec<ParabolicSet> {
        self.sets.windows(2).map(|p| p[0].intersection(p[1])).collect()
    }

    pub fn chain(&self, g: &CoxeterGroup) -> Result<FactorChain> {
        FactorChain::parabolic(g, &self.sets)
    }

    pub fn first(&self) -> ParabolicSet {
        self.sets[0]
    }

    pub fn last(&self) -> ParabolicSet {
        *self.sets.last().unwrap()
    }

    /// Merges neighbours `I ⊆ I'` whenever absorbing the smaller set leaves the
    /// adjacent link unchanged, e.g. `({1},{1})` becomes `({1})`.
    pub fn normalize(&self) -> Self {
        let mut sets = self.sets.clone();
        'again: loop {
            for k in 0..sets.len().saturating_sub(1) {
                let (a, b) = (sets[k], sets[k + 1]);
                if b.is_subset(a) {
                    let keeps_link = k + 2 >= sets.len()
                        || a.intersection(sets[k + 2]) == b.intersection(sets[k + 2]);
                    if keeps_link {
                        sets.remove(k + 1);
                        continue 'again;
                    }
                }
                if a.is_subset(b) {
                    let keeps_link =
                        k == 0 || sets[k - 1].intersection(b) == sets[k - 1].intersection(a);
                    if keeps_link {
                        sets.remove(k);
                        continue 'again;
                    }
                }
            }
            break;
        }
        ResolutionData { w: self.w, sets }
    }

    pub fn reversed(&self, g: &CoxeterGroup) -> Self {
        ResolutionData {
            w: g.inverse(self.w),
            sets: self.sets.iter().rev().copied().collect(),
        }
    }

    pub fn to_index_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.iter().collect()).collect()
    }
}

impl fmt::Display for ResolutionData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.sets.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// Checks the Demazure product and exact dimension, then computes the fiber profile.
pub fn validate(h: &HeckeAlgebra<'_>, data: &ResolutionData) -> Result<FiberProfile> {
    let g = h.group();
    if data.sets.is_empty() {
        return Err(Error::InvalidChain("empty resolution data".into()));
    }
    let chain = data.chain(g)?;
    let image = chain.target(g);
    if image != data.w {
        return Err(Error::WrongImage {
            expected: g.format(data.w),
            actual: g.format(image),
        });
    }
    let total = chain.total_dimension(g);
    if total != g.length(data.w) {
        return Err(Error::DimensionMismatch {
            total,
            target: g.length(data.w),
        });
    }
    fiber_profile(h, &chain)
}
