use serde::{Deserialize, Serialize};

use crate::bp::{self, FactorChain};
use crate::coxeter::{CoxeterGroup, Elem};
use crate::error::{Error, Result};

use super::algebra::HeckeAlgebra;
use super::poly::IntPoly;

/// Fiber-count polynomials `N_u(q)` of the multiplication map of a chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberProfile {
    pub w: Elem,
    pub chain: FactorChain,
    /// Nonzero cells `(u, N_u)`, ordered by element index.
    pub cells: Vec<(Elem, IntPoly)>,
    pub total_dimension: usize,
}

impl FiberProfile {
    pub fn n(&self, u: Elem) -> IntPoly {
        self.cells
            .binary_search_by_key(&u, |c| c.0)
            .map(|i| self.cells[i].1.clone())
            .unwrap_or_default()
    }

    pub fn is_birational(&self) -> bool {
        self.n(self.w).is_one()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.cells.iter().all(|(_, p)| p.is_one())
    }

    /// Cells with positive-dimensional fibers: `(u, l(u), deg N_u)`.
    pub fn positive_fibers(&self, g: &CoxeterGroup) -> Vec<(Elem, usize, usize)> {
        self.cells
            .iter()
            .filter_map(|(u, p)| {
                let d = p.degree().unwrap_or(0);
                (d >= 1).then(|| (*u, g.length(*u), d))
            })
            .collect()
    }
}

/// Computes `N_u(q) = coeff_u(prod_i [G_{w_i}]) / prod_i pi_{J_i}(q)` and checks the
/// consistency and dimension identities.
pub fn fiber_profile(h: &HeckeAlgebra<'_>, chain: &FactorChain) -> Result<FiberProfile> {
    let g = h.group();
    chain.check_links(g)?;
    let product = h.dense_chain_product(&chain.factors);
    let w = chain.target(g);
    let profile = profile_from_product(h, chain.clone(), w, &product)?;
    check_identities(h, &profile)?;
    Ok(profile)
}

pub(crate) fn divisor(h: &HeckeAlgebra<'_>, chain: &FactorChain) -> IntPoly {
    chain
        .links
        .iter()
        .fold(IntPoly::one(), |acc, &j| &acc * &h.poincare(j))
}

pub(crate) fn profile_from_product(
    h: &HeckeAlgebra<'_>,
    chain: FactorChain,
    w: Elem,
    product: &[IntPoly],
) -> Result<FiberProfile> {
    let g = h.group();
    let div = divisor(h, &chain);
    let mut cells = Vec::new();
    for (i, c) in product.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let u = g.element_at(i).unwrap();
        let n = c.div_exact(&div).ok_or_else(|| Error::DivisionFailure { cell: g.format(u) })?;
        if !g.bruhat_leq(u, w) {
            return Err(Error::Invariant(format!(
                "cell {} lies outside [e, {}]",
                g.format(u),
                g.format(w)
            )));
        }
        cells.push((u, n));
    }
    let total_dimension = chain.total_dimension(g);
    Ok(FiberProfile {
        w,
        chain,
        cells,
        total_dimension,
    })
}

/// `sum_u N_u q^{l(u)} * prod pi_{J_i} = prod_i sum_{v <= w_i} q^{l(v)}` and
/// `max_u (deg N_u + l(u)) = total dimension`.
pub fn check_identities(h: &HeckeAlgebra<'_>, p: &FiberProfile) -> Result<()> {
    let g = h.group();
    let mut lhs = IntPoly::zero();
    for (u, n) in &p.cells {
        lhs.add_shifted(n, g.length(*u));
    }
    let lhs = &lhs * &divisor(h, &p.chain);
    let rhs = p
        .chain
        .factors
        .iter()
        .fold(IntPoly::one(), |acc, &f| &acc * &h.interval_poincare(f));
    if lhs != rhs {
        return Err(Error::Invariant(format!(
            "point-count identity fails for target {}",
            g.format(p.w)
        )));
    }
    let top = p
        .cells
        .iter()
        .map(|(u, n)| n.degree().unwrap_or(0) + g.length(*u))
        .max()
        .unwrap_or(0);
    if top != p.total_dimension {
        return Err(Error::Invariant(format!(
            "top cell dimension {top} differs from total dimension {}",
            p.total_dimension
        )));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Small,
    NotSmall,
    NotBirational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadCell {
    pub u: String,
    pub len: usize,
    pub fiber_dim: usize,
}

/// The positive-dimensional fibers of a resolution and whether each clears
/// `l(w) - l(u) > 2 deg N_u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallnessCertificate {
    pub w: String,
    pub len: usize,
    pub cells: Vec<BadCell>,
    pub verdict: Verdict,
}

impl SmallnessCertificate {
    pub fn is_small(&self) -> bool {
        self.verdict == Verdict::Small
    }

    /// First cell violating the codimension bound.
    pub fn witness(&self) -> Option<&BadCell> {
        self.cells
            .iter()
            .find(|c| self.len - c.len <= 2 * c.fiber_dim)
    }
}

/// Smallness verdict for a birational map from a smooth total space.
pub fn smallness(g: &CoxeterGroup, p: &FiberProfile) -> Result<SmallnessCertificate> {
    if !p.is_birational() {
        return Err(Error::NotAResolution(format!(
            "fiber over the open cell of {} is {}, not a point",
            g.format(p.w),
            p.n(p.w)
        )));
    }
    for &f in &p.chain.factors {
        let parabolic = g.longest(g.right_descents(f)) == f;
        let smooth = parabolic || (g.is_simply_laced() && bp::is_smooth(g, f));
        if !smooth {
            return Err(Error::NotAResolution(format!(
                "factor {} is not known to be smooth",
                g.format(f)
            )));
        }
    }
    Ok(certificate(g, p))
}

pub(crate) fn certificate(g: &CoxeterGroup, p: &FiberProfile) -> SmallnessCertificate {
    let len = g.length(p.w);
    let cells: Vec<BadCell> = p
        .positive_fibers(g)
        .into_iter()
        .map(|(u, l, d)| BadCell {
            u: g.format(u),
            len: l,
            fiber_dim: d,
        })
        .collect();
    let verdict = if !p.is_birational() {
        Verdict::NotBirational
    } else if cells.iter().all(|c| len - c.len > 2 * c.fiber_dim) {
        Verdict::Small
    } else {
        Verdict::NotSmall
    };
    SmallnessCertificate {
        w: g.format(p.w),
        len,
        cells,
        verdict,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellRecord {
    pub u: String,
    pub len: usize,
    #[serde(rename = "N")]
    pub n: Vec<i128>,
}

/// Wire form of a profile: `{"w", "cells": [{"u", "len", "N"}], "verdict"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub w: String,
    pub cells: Vec<CellRecord>,
    pub verdict: Verdict,
}

impl ProfileReport {
    pub fn new(g: &CoxeterGroup, p: &FiberProfile) -> Self {
        ProfileReport {
            w: g.format(p.w),
            cells: p
                .cells
                .iter()
                .map(|(u, n)| CellRecord {
                    u: g.format(*u),
                    len: g.length(*u),
                    n: n.coeffs().to_vec(),
                })
                .collect(),
            verdict: certificate(g, p).verdict,
        }
    }
}
