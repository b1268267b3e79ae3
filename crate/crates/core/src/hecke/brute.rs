//! Independent fiber counts by enumerating partial flags over a prime field.

use std::collections::HashMap;

use crate::bp::FactorChain;
use crate::coxeter::{CoxeterGroup, Elem, ParabolicSet};
use crate::error::{Error, Result};

/// Linear algebra over `F_q^n` with every vector an index `0..q^n`
/// and every subspace a bit mask over those indices.
struct Field {
    q: usize,
    n: usize,
    add: Vec<Vec<u8>>,
    scale: Vec<Vec<u8>>,
}

impl Field {
    fn new(q: usize, n: usize) -> Self {
        let size = q.pow(n as u32);
        let digits = |mut v: usize| {
            let mut d = vec![0usize; n];
            for x in d.iter_mut() {
                *x = v % q;
                v /= q;
            }
            d
        };
        let pack = |d: &[usize]| d.iter().rev().fold(0usize, |acc, &x| acc * q + x);
        let mut add = vec![vec![0u8; size]; size];
        let mut scale = vec![vec![0u8; size]; q];
        for a in 0..size {
            let da = digits(a);
            for b in 0..size {
                let db = digits(b);
                let s: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % q).collect();
                add[a][b] = pack(&s) as u8;
            }
            for (c, row) in scale.iter_mut().enumerate() {
                let s: Vec<usize> = da.iter().map(|x| x * c % q).collect();
                row[a] = pack(&s) as u8;
            }
        }
        Field { q, n, add, scale }
    }

    fn size(&self) -> usize {
        self.add.len()
    }

    fn basis_vector(&self, i: usize) -> usize {
        self.q.pow(i as u32)
    }

    /// Span of a subspace mask and one more vector.
    fn extend(&self, space: u128, v: usize) -> u128 {
        let mut out = space;
        for a in 0..self.size() {
            if space >> a & 1 == 1 {
                for c in 1..self.q {
                    out |= 1u128 << self.add[a][self.scale[c][v] as usize];
                }
            }
        }
        out
    }

    fn dim(&self, space: u128) -> usize {
        let mut count = space.count_ones() as usize;
        let mut d = 0;
        while count > 1 {
            count /= self.q;
            d += 1;
        }
        d
    }

    /// All subspaces, grouped by dimension.
    fn subspaces(&self) -> Vec<Vec<u128>> {
        let mut by_dim = vec![vec![1u128]];
        for d in 0..self.n {
            let mut next: Vec<u128> = Vec::new();
            let mut seen = std::collections::HashSet::new();
            for &s in &by_dim[d] {
                for v in 0..self.size() {
                    if s >> v & 1 == 0 {
                        let t = self.extend(s, v);
                        if seen.insert(t) {
                            next.push(t);
                        }
                    }
                }
            }
            by_dim.push(next);
        }
        by_dim
    }
}

/// Partial flags with subspaces in the listed dimensions.
fn flags(subspaces: &[Vec<u128>], dims: &[usize]) -> Vec<Vec<u128>> {
    let mut out: Vec<Vec<u128>> = vec![Vec::new()];
    for &d in dims {
        let mut next = Vec::new();
        for f in &out {
            for &s in &subspaces[d] {
                if f.last().is_none_or(|&prev| prev & !s == 0) {
                    let mut g = f.clone();
                    g.push(s);
                    next.push(g);
                }
            }
        }
        out = next;
    }
    out
}

/// Dimensions `d` with `s_d` outside `j`: the steps of a flag of type `j`.
fn flag_dims(n: usize, j: ParabolicSet) -> Vec<usize> {
    (1..n).filter(|&d| !j.contains(d)).collect()
}

/// Rank requirement `r_w(a, b) = #{ i <= b : w(i) <= a }`.
fn rank_table(perm: &[u8]) -> Vec<Vec<usize>> {
    let n = perm.len();
    (0..=n)
        .map(|a| {
            (0..=n)
                .map(|b| perm[..b].iter().filter(|&&x| x as usize <= a).count())
                .collect()
        })
        .collect()
}

fn position_at_most(
    field: &Field,
    from: &[u128],
    from_dims: &[usize],
    to: &[u128],
    to_dims: &[usize],
    rank: &[Vec<usize>],
) -> bool {
    from.iter().zip(from_dims).all(|(&fa, &a)| {
        to.iter()
            .zip(to_dims)
            .all(|(&fb, &b)| field.dim(fa & fb) >= rank[a][b])
    })
}

/// Fiber counts `#mu^{-1}(uB)` over `F_q` for every `u`, by chaining partial flags
/// `E = F_0, F_1, ..., F_m, uE` whose consecutive relative positions are bounded
/// by the chain factors. Type A only, rank at most 3, `q` in `{2, 3}`.
pub fn brute_force_profile(g: &CoxeterGroup, chain: &FactorChain, q: usize) -> Result<Vec<(Elem, i128)>> {
    if !g.is_type_a() {
        return Err(Error::NotTypeA);
    }
    let n = g.rank() + 1;
    if n > 4 || !(q == 2 || q == 3) {
        return Err(Error::InstanceTooLarge(format!("A{} over F_{q}", g.rank())));
    }
    chain.check_links(g)?;
    let field = Field::new(q, n);
    let subspaces = field.subspaces();
    let full_dims: Vec<usize> = (1..n).collect();
    let coordinate_flag = |perm: &[u8]| -> Vec<u128> {
        let mut space = 1u128;
        full_dims
            .iter()
            .map(|&b| {
                space = field.extend(space, field.basis_vector(perm[b - 1] as usize - 1));
                space
            })
            .collect()
    };
    let identity: Vec<u8> = (1..=n as u8).collect();
    let ranks: Vec<Vec<Vec<usize>>> = chain
        .factors
        .iter()
        .map(|&f| rank_table(g.one_line(f).unwrap()))
        .collect();

    let mut layer: HashMap<Vec<u128>, i128> = HashMap::from([(coordinate_flag(&identity), 1)]);
    let mut layer_dims = full_dims.clone();
    for (i, &link) in chain.links.iter().enumerate() {
        let dims = flag_dims(n, link);
        let mut next = HashMap::new();
        for f in flags(&subspaces, &dims) {
            let count: i128 = layer
                .iter()
                .filter(|(prev, _)| position_at_most(&field, prev, &layer_dims, &f, &dims, &ranks[i]))
                .map(|(_, &c)| c)
                .sum();
            if count > 0 {
                next.insert(f, count);
            }
        }
        layer = next;
        layer_dims = dims;
    }
    let last = ranks.last().unwrap();
    let mut out = Vec::new();
    for u in g.elements() {
        let target = coordinate_flag(g.one_line(u).unwrap());
        let count: i128 = layer
            .iter()
            .filter(|(prev, _)| position_at_most(&field, prev, &layer_dims, &target, &full_dims, last))
            .map(|(_, &c)| c)
            .sum();
        if count > 0 {
            out.push((u, count));
        }
    }
    Ok(out)
}
