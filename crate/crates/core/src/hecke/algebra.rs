use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::coxeter::{CoxeterGroup, Elem, ParabolicSet};

use super::poly::IntPoly;

/// Finitely supported element of the Iwahori-Hecke algebra in the `T_w` basis.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct HeckeElement {
    terms: BTreeMap<Elem, IntPoly>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(w: Elem) -> Self {
        Self::from_terms([(w, IntPoly::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Elem, IntPoly)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (w, p) in terms {
            out.add_term(w, &p);
        }
        out
    }

    pub fn add_term(&mut self, w: Elem, p: &IntPoly) {
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(w).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn coefficient(&self, w: Elem) -> IntPoly {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Elem, &IntPoly)> {
        self.terms.iter().map(|(&w, p)| (w, p))
    }

    pub fn support(&self) -> Vec<Elem> {
        self.terms.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, p: &IntPoly) -> Self {
        Self::from_terms(self.terms().map(|(w, c)| (w, c * p)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, p) in other.terms() {
            out.add_term(w, p);
        }
        out
    }

    /// Pretty form such as `(q-1)T_[s1] + q·T_[e]`, longest elements first.
    pub fn display(&self, g: &CoxeterGroup) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by_key(|&(w, _)| (std::cmp::Reverse(g.length(w)), w));
        terms
            .iter()
            .map(|&(w, p)| {
                let label = g.reduced_word(w);
                let label = if label.is_empty() {
                    "e".to_string()
                } else {
                    label.iter().map(|s| format!("s{s}")).collect()
                };
                let nonzero = p.coeffs().iter().filter(|&&c| c != 0).count();
                let coeff = if p.is_one() {
                    String::new()
                } else if nonzero == 1 {
                    format!("{p}·")
                } else {
                    format!("({p})")
                };
                format!("{coeff}T_[{label}]")
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map()
            .entries(self.terms.iter().map(|(w, p)| (w.index(), p.to_string())))
            .finish()
    }
}

/// Minimal coset representatives of `W/W_J` and, per element, its offset
/// `l(y) - l(ymin)` inside its coset.
struct CosetTable {
    cosets: Vec<Vec<u32>>,
    offset: Vec<u16>,
}

/// Hecke algebra of a fixed group, with shared caches for Schubert classes and
/// coset tables. Caches are write-once cells, so concurrent readers never see
/// partial values and no lock is held during a multiplication.
pub struct HeckeAlgebra<'g> {
    g: &'g CoxeterGroup,
    schubert: Vec<OnceLock<Arc<HeckeElement>>>,
    cosets: Vec<OnceLock<Arc<CosetTable>>>,
    poincare: Vec<OnceLock<IntPoly>>,
}

impl<'g> HeckeAlgebra<'g> {
    pub fn new(g: &'g CoxeterGroup) -> Self {
        HeckeAlgebra {
            g,
            schubert: (0..g.order()).map(|_| OnceLock::new()).collect(),
            cosets: (0..1usize << g.rank()).map(|_| OnceLock::new()).collect(),
            poincare: (0..1usize << g.rank()).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn group(&self) -> &'g CoxeterGroup {
        self.g
    }

    /// `pi_J(q) = sum_{v in W_J} q^{l(v)}`.
    pub fn poincare(&self, j: ParabolicSet) -> IntPoly {
        self.poincare[j.bits() as usize]
            .get_or_init(|| {
                let mut p = IntPoly::zero();
                for v in self.g.parabolic_subgroup(j) {
                    p.add_shifted(&IntPoly::one(), self.g.length(v));
                }
                p
            })
            .clone()
    }

    /// `sum_{v <= w} q^{l(v)}`.
    pub fn interval_poincare(&self, w: Elem) -> IntPoly {
        let mut p = IntPoly::zero();
        for v in self.g.lower_interval(w) {
            p.add_shifted(&IntPoly::one(), self.g.length(v));
        }
        p
    }

    /// `sum_{v <= w} T_v`.
    pub fn schubert_class(&self, w: Elem) -> Arc<HeckeElement> {
        self.schubert[w.index()]
            .get_or_init(|| {
                Arc::new(HeckeElement::from_terms(
                    self.g.lower_interval(w).into_iter().map(|v| (v, IntPoly::one())),
                ))
            })
            .clone()
    }

    /// `x_J = sum_{v in W_J} T_v`.
    pub fn parabolic_class(&self, j: ParabolicSet) -> Arc<HeckeElement> {
        self.schubert_class(self.g.longest(j))
    }

    /// `h T_s`.
    pub fn mul_generator_right(&self, h: &HeckeElement, s: usize) -> HeckeElement {
        let mut d = self.to_dense(h);
        d = self.dense_times_generator(&d, s);
        self.from_dense(&d)
    }

    /// `T_s h`.
    pub fn mul_generator_left(&self, s: usize, h: &HeckeElement) -> HeckeElement {
        let g = self.g;
        let mut out = HeckeElement::zero();
        for (w, p) in h.terms() {
            let sw = g.left_mul(w, s);
            if g.length(sw) > g.length(w) {
                out.add_term(sw, p);
            } else {
                out.add_term(w, &(&p.shift(1) - p));
                out.add_term(sw, &p.shift(1));
            }
        }
        out
    }

    /// General product, folding the generators of each basis element of `b` into `a`.
    pub fn mul(&self, a: &HeckeElement, b: &HeckeElement) -> HeckeElement {
        let d = self.dense_mul(&self.to_dense(a), b);
        self.from_dense(&d)
    }

    pub(crate) fn to_dense(&self, h: &HeckeElement) -> Vec<IntPoly> {
        let mut d = vec![IntPoly::zero(); self.g.order()];
        for (w, p) in h.terms() {
            d[w.index()] = p.clone();
        }
        d
    }

    pub(crate) fn from_dense(&self, d: &[IntPoly]) -> HeckeElement {
        HeckeElement::from_terms(
            d.iter()
                .enumerate()
                .filter(|(_, p)| !p.is_zero())
                .map(|(i, p)| (self.g.element_at(i).unwrap(), p.clone())),
        )
    }

    fn dense_times_generator(&self, d: &[IntPoly], s: usize) -> Vec<IntPoly> {
        let g = self.g;
        let mut out = vec![IntPoly::zero(); d.len()];
        for (i, p) in d.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let y = g.element_at(i).unwrap();
            let ys = g.right_mul(y, s);
            if g.length(ys) > g.length(y) {
                out[ys.index()] += p;
            } else {
                out[i] += &(&p.shift(1) - p);
                out[ys.index()].add_shifted(p, 1);
            }
        }
        out
    }

    /// `d * b` for dense `d`. Basis elements of `b` are visited along a spanning
    /// tree of right multiplications so each `d T_z` costs one generator step.
    pub(crate) fn dense_mul(&self, d: &[IntPoly], b: &HeckeElement) -> Vec<IntPoly> {
        let g = self.g;
        let mut out = vec![IntPoly::zero(); g.order()];
        if b.is_empty() {
            return out;
        }
        // word-prefix tree over the support of b, closed under prefixes
        let mut need = vec![false; g.order()];
        for (z, _) in b.terms() {
            let mut cur = z;
            while !need[cur.index()] {
                need[cur.index()] = true;
                match g.right_descents(cur).min() {
                    Some(s) => cur = g.right_mul(cur, s),
                    None => break,
                }
            }
        }
        let mut children: Vec<Vec<(u32, usize)>> = vec![Vec::new(); g.order()];
        for (i, &n) in need.iter().enumerate() {
            if !n {
                continue;
            }
            let z = g.element_at(i).unwrap();
            if let Some(s) = g.right_descents(z).min() {
                children[g.right_mul(z, s).index()].push((i as u32, s));
            }
        }
        let root = g.identity();
        let mut stack: Vec<(usize, Vec<IntPoly>)> = vec![(root.index(), d.to_vec())];
        while let Some((z, dz)) = stack.pop() {
            let coeff = b.terms.get(&g.element_at(z).unwrap());
            if let Some(c) = coeff {
                for (acc, p) in out.iter_mut().zip(&dz) {
                    if !p.is_zero() {
                        *acc += &(p * c);
                    }
                }
            }
            for &(child, s) in &children[z] {
                stack.push((child as usize, self.dense_times_generator(&dz, s)));
            }
        }
        out
    }

    fn coset_table(&self, j: ParabolicSet) -> Arc<CosetTable> {
        self.cosets[j.bits() as usize]
            .get_or_init(|| {
                let g = self.g;
                let mut seen = vec![false; g.order()];
                let mut offset = vec![0u16; g.order()];
                let mut cosets = Vec::new();
                let members = g.parabolic_subgroup(j);
                for y in g.elements() {
                    if seen[y.index()] || g.coset_min(y, j) != y {
                        continue;
                    }
                    let coset: Vec<u32> = members
                        .iter()
                        .map(|&v| {
                            let x = g.multiply(y, v);
                            seen[x.index()] = true;
                            offset[x.index()] = g.length(v) as u16;
                            x.index() as u32
                        })
                        .collect();
                    cosets.push(coset);
                }
                Arc::new(CosetTable { cosets, offset })
            })
            .clone()
    }

    /// `d * x_J` using `T_y x_J = q^{l(y1)} T_{y0} x_J` for `y = y0 y1`.
    pub(crate) fn dense_times_parabolic(&self, d: &[IntPoly], j: ParabolicSet) -> Vec<IntPoly> {
        let table = self.coset_table(j);
        let mut out = vec![IntPoly::zero(); d.len()];
        for coset in &table.cosets {
            let mut acc = IntPoly::zero();
            for &y in coset {
                acc.add_shifted(&d[y as usize], table.offset[y as usize] as usize);
            }
            if acc.is_zero() {
                continue;
            }
            for &z in coset {
                out[z as usize] = acc.clone();
            }
        }
        out
    }

    /// Degrees of `d x_J`, with `-1` for zero. Exact whenever every coefficient of
    /// `d` has positive leading term (point counts), as then no leading terms cancel.
    pub(crate) fn degrees_times_parabolic(&self, d: &[i32], j: ParabolicSet) -> Vec<i32> {
        let table = self.coset_table(j);
        let mut out = vec![-1; d.len()];
        for coset in &table.cosets {
            let top = coset
                .iter()
                .filter(|&&y| d[y as usize] >= 0)
                .map(|&y| d[y as usize] + table.offset[y as usize] as i32)
                .max();
            if let Some(top) = top {
                for &z in coset {
                    out[z as usize] = top;
                }
            }
        }
        out
    }

    /// `h x_J`.
    pub fn mul_parabolic(&self, h: &HeckeElement, j: ParabolicSet) -> HeckeElement {
        self.from_dense(&self.dense_times_parabolic(&self.to_dense(h), j))
    }

    /// Product of Schubert classes of the factors; parabolic factors take the coset shortcut.
    pub(crate) fn dense_chain_product(&self, factors: &[Elem]) -> Vec<IntPoly> {
        let g = self.g;
        let mut d = vec![IntPoly::zero(); g.order()];
        d[g.identity().index()] = IntPoly::one();
        for &f in factors {
            let tau = g.right_descents(f);
            d = if g.longest(tau) == f {
                self.dense_times_parabolic(&d, tau)
            } else {
                self.dense_mul(&d, &self.schubert_class(f))
            };
        }
        d
    }
}
