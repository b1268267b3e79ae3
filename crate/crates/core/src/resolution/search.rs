use std::collections::HashMap;

use parking_lot::RwLock;

use crate::bp::{complete_bp, is_smooth, simply_laced_factorization};
use crate::coxeter::{CoxeterGroup, Elem, ParabolicSet};
use crate::error::{Error, Result};
use crate::hecke::HeckeAlgebra;

use super::certify::{certify, glue, reverse, CertifiedResolution, Route};
use super::data::ResolutionData;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Node budget of the final exhaustive stage, per element.
    pub budget: usize,
    /// Node budget of each exhaustive sub-search inside the equivariant recursion.
    pub equivariant_budget: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            budget: 4_000_000,
            equivariant_budget: 5_000,
        }
    }
}

/// Small-resolution search over one group. The memo of equivariant results is
/// shared by all callers; every entry is a pure function of its element (fixed
/// sub-budgets), so concurrent use stays deterministic.
pub struct Searcher<'h, 'g> {
    h: &'h HeckeAlgebra<'g>,
    g: &'g CoxeterGroup,
    cfg: SearchConfig,
    equivariant_memo: RwLock<HashMap<Elem, Option<ResolutionData>>>,
}

/// Result of [`Searcher::search_small`] with the number of search nodes spent.
pub struct SearchOutcome {
    pub resolution: Option<CertifiedResolution>,
    pub nodes: usize,
    /// The final enumeration ran to completion without hitting the budget. Only
    /// meaningful without a resolution; it is still bounded to the pruned GM-form space.
    pub exhausted: bool,
}

impl<'h, 'g> Searcher<'h, 'g> {
    pub fn new(h: &'h HeckeAlgebra<'g>, cfg: SearchConfig) -> Self {
        Searcher {
            h,
            g: h.group(),
            cfg,
            equivariant_memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &'h HeckeAlgebra<'g> {
        self.h
    }

    pub fn config(&self) -> SearchConfig {
        self.cfg
    }

    /// Pipeline: smooth factorization, Zelevinskii route, complete BP and glue,
    /// equivariant recursion, bounded exhaustive search. Disconnected supports are
    /// solved per component and interleaved.
    pub fn search_small(&self, w: Elem) -> SearchOutcome {
        let g = self.g;
        let comps = g.components(g.support(w));
        if comps.len() > 1 {
            let mut parts = Vec::new();
            let mut nodes = 0;
            for c in comps {
                let piece = g.coset_decompose(w, c).1;
                let out = self.search_connected(piece);
                nodes += out.nodes;
                match out.resolution {
                    Some(r) => parts.push(r.data),
                    None => {
                        return SearchOutcome {
                            resolution: None,
                            nodes,
                            exhausted: out.exhausted,
                        }
                    }
                }
            }
            let data = interleave(w, &parts);
            let resolution = Some(
                certify(self.h, &data, Route::Components).expect("interleaved components certify"),
            );
            return SearchOutcome {
                resolution,
                nodes,
                exhausted: false,
            };
        }
        self.search_connected(w)
    }

    fn search_connected(&self, w: Elem) -> SearchOutcome {
        let g = self.g;
        let done = |r: CertifiedResolution| SearchOutcome {
            resolution: Some(r),
            nodes: 0,
            exhausted: false,
        };
        if g.is_simply_laced() && is_smooth(g, w) {
            let sets = simply_laced_factorization(g, w).expect("smooth element factors");
            let data = ResolutionData::new(w, sets);
            return done(certify(self.h, &data, Route::Smooth).expect("smooth factorization certifies"));
        }
        if zelevinskii_applies(g, w) {
            if let Some(r) = self.zelevinskii_route(w).expect("precondition checked") {
                return done(r);
            }
        }
        if g.is_type_a() {
            if let Some(r) = self.small_via_complete_bp(w).expect("complete BP route") {
                return done(r);
            }
        }
        if let Some(data) = self.equivariant(w) {
            let r = certify(self.h, &data, Route::EquivariantRecursive).expect("memo holds certified data");
            return done(r);
        }
        let mut dfs = Dfs::new(self.h, w, None, None, usize::MAX, self.cfg.budget);
        let found = dfs.run();
        SearchOutcome {
            resolution: found.map(|d| certify(self.h, &d, Route::Exhaustive).expect("dfs leaf certified")),
            nodes: dfs.spent,
            exhausted: dfs.spent < self.cfg.budget,
        }
    }

    /// Equivariant small resolution for `#tau(w) >= #sigma(w) - 1`: shortest data
    /// with `I_0 = tau(w^{-1})` and `I_m = tau(w)` that certifies small.
    pub fn zelevinskii_route(&self, w: Elem) -> Result<Option<CertifiedResolution>> {
        let g = self.g;
        if !zelevinskii_applies(g, w) {
            return Err(Error::Precondition(format!(
                "#tau({0}) < #sigma({0}) - 1",
                g.format(w)
            )));
        }
        let comps = g.components(g.support(w));
        let data = if comps.len() > 1 {
            let mut parts = Vec::new();
            for c in comps {
                match self.zelevinskii_data(g.coset_decompose(w, c).1) {
                    Some(d) => parts.push(d),
                    None => return Ok(None),
                }
            }
            interleave(w, &parts)
        } else {
            match self.zelevinskii_data(w) {
                Some(d) => d,
                None => return Ok(None),
            }
        };
        Ok(Some(certify(self.h, &data, Route::Zelevinskii)?))
    }

    fn zelevinskii_data(&self, w: Elem) -> Option<ResolutionData> {
        let g = self.g;
        if g.right_descents(w) == g.support(w) {
            return Some(ResolutionData::new(w, vec![g.support(w)]));
        }
        let (first, last) = (g.left_descents(w), g.right_descents(w));
        for max_sets in 2..=g.length(w) + 1 {
            let mut dfs = Dfs::new(self.h, w, Some(first), Some(last), max_sets, usize::MAX);
            if let Some(d) = dfs.run() {
                return Some(d);
            }
        }
        None
    }

    /// Small resolution from a complete BP decomposition of `w` (or of `w^{-1}`,
    /// then reversed): Zelevinskii data for every chain factor, glued right to left.
    pub fn small_via_complete_bp(&self, w: Elem) -> Result<Option<CertifiedResolution>> {
        let g = self.g;
        if !g.is_type_a() {
            return Err(Error::NotTypeA);
        }
        for (target, inverted) in [(w, false), (g.inverse(w), true)] {
            let Some(cbp) = complete_bp(g, target) else { continue };
            let chain = cbp.chain_factors(g);
            let mut acc: Option<CertifiedResolution> = None;
            for &f in chain.factors.iter().rev() {
                let piece = self.zelevinskii_route(f)?.ok_or_else(|| {
                    Error::Invariant(format!("no Zelevinskii resolution for factor {}", g.format(f)))
                })?;
                acc = Some(match acc {
                    None => piece,
                    Some(right) => glue(self.h, &piece, &right)?,
                });
            }
            let mut r = acc.expect("at least one factor");
            if r.data.w != target {
                return Err(Error::Invariant("glued chain misses its target".into()));
            }
            if inverted {
                r = reverse(self.h, &r)?;
                r.route = Route::CompleteBpInverse;
            } else {
                r.route = Route::CompleteBp;
            }
            return Ok(Some(r));
        }
        Ok(None)
    }

    /// Middles `w1 < w` with `w = w_{tau(w^-1)} * w1 * w_{tau(w)}` and exact dimension,
    /// longest first.
    pub fn equivariant_middles(&self, w: Elem) -> Vec<Elem> {
        let g = self.g;
        let (l, r) = (g.left_descents(w), g.right_descents(w));
        let (wl, wr) = (g.longest(l), g.longest(r));
        let mut out: Vec<Elem> = g
            .lower_interval(w)
            .into_iter()
            .filter(|&w1| {
                w1 != w
                    && g.demazure(g.demazure(wl, w1), wr) == w
                    && g.length(wl) + g.length(w1) + g.length(wr)
                        == g.length(w)
                            + g.length(g.longest(l.intersection(g.left_descents(w1))))
                            + g.length(g.longest(g.right_descents(w1).intersection(r)))
            })
            .collect();
        out.sort_by_key(|&w1| (std::cmp::Reverse(g.length(w1)), w1));
        out
    }

    /// Small resolution data with `I_0 = tau(w^{-1})`, `I_m = tau(w)`, memoized.
    pub fn equivariant(&self, w: Elem) -> Option<ResolutionData> {
        if let Some(hit) = self.equivariant_memo.read().get(&w) {
            return hit.clone();
        }
        let found = self.equivariant_uncached(w);
        self.equivariant_memo.write().entry(w).or_insert(found).clone()
    }

    fn equivariant_uncached(&self, w: Elem) -> Option<ResolutionData> {
        let g = self.g;
        let (l, r) = (g.left_descents(w), g.right_descents(w));
        if r == g.support(w) {
            return Some(ResolutionData::new(w, vec![r]));
        }
        if g.is_simply_laced() && is_smooth(g, w) {
            return simply_laced_factorization(g, w).ok().map(|s| ResolutionData::new(w, s));
        }
        if zelevinskii_applies(g, w) {
            return self.zelevinskii_data(w);
        }
        // fewest sets wins; ties go to the longer middle
        let mut best: Option<ResolutionData> = None;
        for w1 in self.equivariant_middles(w) {
            if best.as_ref().is_some_and(|b| b.sets.len() <= 2) {
                break;
            }
            if let Some(inner) = self.equivariant(w1) {
                let data = splice(w, l, &inner, r);
                if best.as_ref().is_some_and(|b| b.sets.len() <= data.sets.len()) {
                    continue;
                }
                if certify(self.h, &data, Route::EquivariantRecursive).is_ok() {
                    best = Some(data);
                }
            }
        }
        if best.is_some() {
            return best;
        }
        let mut dfs = Dfs::new(self.h, w, Some(l), Some(r), usize::MAX, self.cfg.equivariant_budget);
        dfs.run()
    }

    /// Every certified equivariant middle `w1` of `w` with its spliced data.
    pub fn all_equivariant_middles(&self, w: Elem) -> Vec<(Elem, CertifiedResolution)> {
        let g = self.g;
        let (l, r) = (g.left_descents(w), g.right_descents(w));
        let mut out = Vec::new();
        for w1 in self.equivariant_middles(w) {
            if let Some(inner) = self.equivariant(w1) {
                if let Ok(c) = certify(self.h, &splice(w, l, &inner, r), Route::EquivariantRecursive) {
                    out.push((w1, c));
                }
            }
        }
        out
    }
}

/// `(l, inner..., r)` in normal form.
pub fn splice(w: Elem, l: ParabolicSet, inner: &ResolutionData, r: ParabolicSet) -> ResolutionData {
    let mut sets = vec![l];
    sets.extend_from_slice(&inner.sets);
    sets.push(r);
    ResolutionData::new(w, sets).normalize()
}

pub fn zelevinskii_applies(g: &CoxeterGroup, w: Elem) -> bool {
    g.right_descents(w).len() + 1 >= g.support(w).len()
}

/// Combines data of elements with pairwise non-adjacent supports: run through the
/// first part's sets while the others sit at their first set, then the next part, and so on.
pub fn interleave(w: Elem, parts: &[ResolutionData]) -> ResolutionData {
    let union_at = |cur: &[usize]| {
        parts
            .iter()
            .zip(cur)
            .fold(ParabolicSet::EMPTY, |acc, (p, &i)| acc.union(p.sets[i]))
    };
    let mut cur = vec![0usize; parts.len()];
    let mut sets = vec![union_at(&cur)];
    for (k, p) in parts.iter().enumerate() {
        for i in 1..p.sets.len() {
            cur[k] = i;
            sets.push(union_at(&cur));
        }
    }
    ResolutionData::new(w, sets)
}

/// Depth-first enumeration of normal-form parabolic data for `w`, pruned by
/// exact dimension at every prefix, Bruhat reachability, left descents, and the
/// fiber-dimension lower bound supplied by every prefix.
struct Dfs<'h, 'g> {
    h: &'h HeckeAlgebra<'g>,
    g: &'g CoxeterGroup,
    w: Elem,
    len_w: usize,
    first: Option<ParabolicSet>,
    last: Option<ParabolicSet>,
    left_tau: ParabolicSet,
    right_tau: ParabolicSet,
    candidates: Vec<ParabolicSet>,
    lengths: Vec<i32>,
    max_sets: usize,
    budget: usize,
    spent: usize,
    sets: Vec<ParabolicSet>,
}

impl<'h, 'g> Dfs<'h, 'g> {
    fn new(
        h: &'h HeckeAlgebra<'g>,
        w: Elem,
        first: Option<ParabolicSet>,
        last: Option<ParabolicSet>,
        max_sets: usize,
        budget: usize,
    ) -> Self {
        let g = h.group();
        let candidates = g
            .support(w)
            .subsets()
            .filter(|s| !s.is_empty())
            .collect();
        Dfs {
            h,
            g,
            w,
            len_w: g.length(w),
            first,
            last,
            left_tau: g.left_descents(w),
            right_tau: g.right_descents(w),
            candidates,
            lengths: g.elements().map(|u| g.length(u) as i32).collect(),
            max_sets,
            budget,
            spent: 0,
            sets: Vec::new(),
        }
    }

    fn run(&mut self) -> Option<ResolutionData> {
        let g = self.g;
        if self.len_w == 0 {
            return Some(ResolutionData::new(self.w, vec![ParabolicSet::EMPTY]));
        }
        let starts: Vec<ParabolicSet> = match self.first {
            Some(f) => vec![f],
            None => self
                .candidates
                .iter()
                .copied()
                .filter(|s| s.is_subset(self.left_tau))
                .collect(),
        };
        let mut unit = vec![-1; g.order()];
        unit[g.identity().index()] = 0;
        for i0 in starts {
            if !i0.is_subset(self.left_tau) {
                continue;
            }
            let p = g.longest(i0);
            let dense = self.h.degrees_times_parabolic(&unit, i0);
            self.sets.push(i0);
            let found = self.step(p, &dense, 0);
            self.sets.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn step(&mut self, p: Elem, dense: &[i32], div_deg: i32) -> Option<ResolutionData> {
        let g = self.g;
        if self.spent >= self.budget {
            return None;
        }
        self.spent += 1;
        // a prefix fiber of dimension d over u bounds the final fiber over u from below
        for (&deg, &len_u) in dense.iter().zip(&self.lengths) {
            let d = deg - div_deg;
            if d >= 1 && self.len_w as i32 - len_u <= 2 * d {
                return None;
            }
        }
        if p == self.w {
            let last = *self.sets.last().unwrap();
            let ok_end = match self.last {
                Some(l) => l == last,
                None => last.is_subset(self.right_tau),
            };
            if !ok_end {
                return None;
            }
            let data = ResolutionData::new(self.w, self.sets.clone());
            return certify(self.h, &data, Route::Exhaustive).ok().map(|c| c.data);
        }
        if self.sets.len() >= self.max_sets {
            return None;
        }
        let k = self.sets.len();
        let prev = self.sets[k - 1];
        let before = (k >= 2).then(|| self.sets[k - 2]);
        let len_p = g.length(p);
        for idx in 0..self.candidates.len() {
            let i = self.candidates[idx];
            if i.is_subset(prev) {
                continue;
            }
            if prev.is_subset(i) && before.is_none_or(|b| b.intersection(i) == b.intersection(prev)) {
                continue;
            }
            let link = prev.intersection(i);
            let wi = g.longest(i);
            let next = g.demazure(p, wi);
            let grow = g.length(wi) - g.length(g.longest(link));
            if g.length(next) != len_p + grow || !g.bruhat_leq(next, self.w) {
                continue;
            }
            if !g.left_descents(next).is_subset(self.left_tau) {
                continue;
            }
            if next == self.w {
                let end_ok = match self.last {
                    Some(l) => l == i,
                    None => i.is_subset(self.right_tau),
                };
                if !end_ok {
                    continue;
                }
            }
            let nd = self.h.degrees_times_parabolic(dense, i);
            self.sets.push(i);
            let found = self.step(next, &nd, div_deg + g.length(g.longest(link)) as i32);
            self.sets.pop();
            if found.is_some() {
                return found;
            }
            if self.spent >= self.budget {
                return None;
            }
        }
        None
    }
}
