//! Finite Coxeter/Weyl groups, fully enumerated.
//!
//! Every group is materialised once with left and right multiplication-by-generator
//! tables, so an element is just a [`Elem`] index into its [`CoxeterGroup`].
//! Type A groups additionally keep one-line notation; other finite types are
//! generated from an integral Cartan matrix acting on the root lattice.

mod parabolic;
pub mod pattern;

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

pub use parabolic::ParabolicSet;

use crate::error::{Error, Result};

static NEXT_GROUP_ID: AtomicU32 = AtomicU32::new(1);

/// Largest type A rank we are willing to enumerate (`S_9`).
pub const MAX_TYPE_A_RANK: usize = 8;

/// Handle to an element of a specific [`CoxeterGroup`].
///
/// Equality is equality of group elements: every element has exactly one index.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    group: u32,
    index: u32,
}

impl Elem {
    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn group_id(self) -> u32 {
        self.group
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Elem({}#{})", self.index, self.group)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    G2,
}

impl CartanType {
    pub fn rank(self) -> usize {
        match self {
            CartanType::A(n) | CartanType::B(n) | CartanType::C(n) | CartanType::D(n) => n,
            CartanType::G2 => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            CartanType::A(_) => 'A',
            CartanType::B(_) => 'B',
            CartanType::C(_) => 'C',
            CartanType::D(_) => 'D',
            CartanType::G2 => 'G',
        }
    }

    pub fn from_parts(letter: &str, rank: usize) -> Result<Self> {
        let t = match letter.trim().to_ascii_uppercase().as_str() {
            "A" if rank >= 1 => CartanType::A(rank),
            "B" if rank >= 2 => CartanType::B(rank),
            "C" if rank >= 2 => CartanType::C(rank),
            "D" if rank >= 4 => CartanType::D(rank),
            "G" if rank == 2 => CartanType::G2,
            _ => return Err(Error::UnsupportedType(format!("{letter}{rank}"))),
        };
        Ok(t)
    }

    /// Cartan matrix `a[i][j] = <alpha_i^vee, alpha_j>` (Bourbaki labelling).
    pub fn cartan_matrix(self) -> Vec<Vec<i32>> {
        let n = self.rank();
        let mut a = vec![vec![0i32; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i32>>, upto: usize| {
            for i in 0..upto.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        };
        match self {
            CartanType::A(_) => chain(&mut a, n),
            CartanType::B(_) => {
                chain(&mut a, n);
                a[n - 1][n - 2] = -2;
            }
            CartanType::C(_) => {
                chain(&mut a, n);
                a[n - 2][n - 1] = -2;
            }
            CartanType::D(_) => {
                chain(&mut a, n - 1);
                a[n - 3][n - 1] = -1;
                a[n - 1][n - 3] = -1;
            }
            CartanType::G2 => {
                a[0][1] = -1;
                a[1][0] = -3;
            }
        }
        a
    }

    /// Expected group order.
    pub fn order(self) -> usize {
        let fact = |k: usize| (1..=k).product::<usize>();
        match self {
            CartanType::A(n) => fact(n + 1),
            CartanType::B(n) | CartanType::C(n) => (1 << n) * fact(n),
            CartanType::D(n) => (1 << (n - 1)) * fact(n),
            CartanType::G2 => 12,
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.letter(), self.rank())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (letter, digits) = s.split_at(s.find(|c: char| c.is_ascii_digit()).unwrap_or(s.len()));
        let rank = digits
            .trim_start_matches('_')
            .parse()
            .map_err(|_| Error::UnsupportedType(s.to_string()))?;
        CartanType::from_parts(letter.trim_end_matches('_'), rank)
    }
}

/// A finite Coxeter group with its reflection data and generator tables.
///
/// Built once, immutable afterwards, and `Sync`: all queries are table lookups.
pub struct CoxeterGroup {
    id: u32,
    cartan_type: CartanType,
    rank: usize,
    coxeter: Vec<Vec<u32>>,
    cartan: Vec<Vec<i32>>,
    positive_roots: Vec<Vec<i32>>,
    perms: Option<Vec<Vec<u8>>>,
    right: Vec<u32>,
    left: Vec<u32>,
    length: Vec<u16>,
    inverse: Vec<u32>,
    right_desc: Vec<ParabolicSet>,
    support: Vec<ParabolicSet>,
    longest: Vec<u32>,
}

impl fmt::Debug for CoxeterGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CoxeterGroup")
            .field("type", &self.cartan_type)
            .field("order", &self.order())
            .finish()
    }
}

impl CoxeterGroup {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        match cartan_type {
            CartanType::A(n) => Self::type_a(n),
            other => Self::from_cartan(other),
        }
    }

    /// The symmetric group `S_{rank+1}` in one-line notation.
    pub fn type_a(rank: usize) -> Result<Self> {
        if rank == 0 || rank > MAX_TYPE_A_RANK {
            return Err(Error::UnsupportedType(format!("A{rank}")));
        }
        let n = rank + 1;
        let mut perms = Vec::with_capacity(CartanType::A(rank).order());
        let mut p: Vec<u8> = (1..=n as u8).collect();
        loop {
            perms.push(p.clone());
            if !next_permutation(&mut p) {
                break;
            }
        }
        let size = perms.len();
        let mut right = vec![0u32; size * rank];
        let mut left = vec![0u32; size * rank];
        let mut length = vec![0u16; size];
        let mut inverse = vec![0u32; size];
        let mut buf = vec![0u8; n];
        for (idx, w) in perms.iter().enumerate() {
            length[idx] = inversions(w) as u16;
            for i in 0..rank {
                buf.copy_from_slice(w);
                buf.swap(i, i + 1);
                right[idx * rank + i] = perm_rank(&buf) as u32;
                for (b, &v) in buf.iter_mut().zip(w) {
                    *b = match v as usize {
                        x if x == i + 1 => (i + 2) as u8,
                        x if x == i + 2 => (i + 1) as u8,
                        _ => v,
                    };
                }
                left[idx * rank + i] = perm_rank(&buf) as u32;
            }
            for (pos, &v) in w.iter().enumerate() {
                buf[v as usize - 1] = (pos + 1) as u8;
            }
            inverse[idx] = perm_rank(&buf) as u32;
        }
        let cartan_type = CartanType::A(rank);
        Ok(Self::finish(
            cartan_type,
            cartan_type.cartan_matrix(),
            Some(perms),
            right,
            left,
            length,
            inverse,
        ))
    }

    /// Enumerates the Weyl group of `cartan_type` from its Cartan matrix by
    /// breadth-first search, identifying elements by their action on simple roots.
    pub fn from_cartan(cartan_type: CartanType) -> Result<Self> {
        let cartan = cartan_type.cartan_matrix();
        let n = cartan.len();
        if n == 0 || n > 8 {
            return Err(Error::UnsupportedType(cartan_type.to_string()));
        }
        // key: images of the simple roots, flattened
        let identity: Vec<i32> = (0..n)
            .flat_map(|i| (0..n).map(move |j| i32::from(i == j)))
            .collect();
        let mut index: HashMap<Vec<i32>, u32> = HashMap::new();
        let mut keys = vec![identity.clone()];
        let mut parent: Vec<(u32, usize)> = vec![(0, usize::MAX)];
        index.insert(identity, 0);
        let mut queue = VecDeque::from([0u32]);
        let mut right_pairs: Vec<(u32, usize, Vec<i32>)> = Vec::new();
        while let Some(cur) = queue.pop_front() {
            for i in 0..n {
                let key = right_multiply_key(&keys[cur as usize], &cartan, i);
                if !index.contains_key(&key) {
                    let id = keys.len() as u32;
                    index.insert(key.clone(), id);
                    keys.push(key.clone());
                    parent.push((cur, i));
                    queue.push_back(id);
                }
                right_pairs.push((cur, i, key));
            }
        }
        let size = keys.len();
        if size != cartan_type.order() {
            return Err(Error::Invariant(format!(
                "{cartan_type} enumerated {size} elements, expected {}",
                cartan_type.order()
            )));
        }
        let mut right = vec![0u32; size * n];
        for (cur, i, key) in right_pairs {
            right[cur as usize * n + i] = index[&key];
        }
        let mut left = vec![0u32; size * n];
        for (id, key) in keys.iter().enumerate() {
            for i in 0..n {
                let img: Vec<i32> = key
                    .chunks(n)
                    .flat_map(|beta| reflect(beta, &cartan, i))
                    .collect();
                left[id * n + i] = index[&img];
            }
        }
        let mut length = vec![0u16; size];
        let mut inverse = vec![0u32; size];
        for id in 1..size {
            let (p, i) = parent[id];
            length[id] = length[p as usize] + 1;
            // (p s_i)^{-1} = s_i p^{-1}
            inverse[id] = left[inverse[p as usize] as usize * n + i];
        }
        Ok(Self::finish(cartan_type, cartan, None, right, left, length, inverse))
    }

    fn finish(
        cartan_type: CartanType,
        cartan: Vec<Vec<i32>>,
        perms: Option<Vec<Vec<u8>>>,
        right: Vec<u32>,
        left: Vec<u32>,
        length: Vec<u16>,
        inverse: Vec<u32>,
    ) -> Self {
        let rank = cartan.len();
        let size = length.len();
        let coxeter = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        if i == j {
                            1
                        } else {
                            match cartan[i][j] * cartan[j][i] {
                                0 => 2,
                                1 => 3,
                                2 => 4,
                                3 => 6,
                                _ => unreachable!("non-crystallographic bond"),
                            }
                        }
                    })
                    .collect()
            })
            .collect();
        let positive_roots = positive_roots(&cartan);
        let mut right_desc = vec![ParabolicSet::EMPTY; size];
        for (w, desc) in right_desc.iter_mut().enumerate() {
            for i in 0..rank {
                if length[right[w * rank + i] as usize] < length[w] {
                    desc.insert(i + 1);
                }
            }
        }
        let mut order: Vec<usize> = (0..size).collect();
        order.sort_by_key(|&w| length[w]);
        let mut support = vec![ParabolicSet::EMPTY; size];
        for &w in &order {
            if let Some(i) = right_desc[w].min() {
                let shorter = right[w * rank + i - 1] as usize;
                support[w] = support[shorter].with(i);
            }
        }
        let identity = order[0];
        let mut longest = vec![0u32; 1 << rank];
        for (mask, slot) in longest.iter_mut().enumerate() {
            let mut w = identity;
            'grow: loop {
                for i in 0..rank {
                    if mask & (1 << i) != 0 {
                        let ws = right[w * rank + i] as usize;
                        if length[ws] > length[w] {
                            w = ws;
                            continue 'grow;
                        }
                    }
                }
                break;
            }
            *slot = w as u32;
        }
        CoxeterGroup {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            cartan_type,
            rank,
            coxeter,
            cartan,
            positive_roots,
            perms,
            right,
            left,
            length,
            inverse,
            right_desc,
            support,
            longest,
        }
    }

    fn elem(&self, index: usize) -> Elem {
        Elem {
            group: self.id,
            index: index as u32,
        }
    }

    #[inline]
    fn check(&self, w: Elem) -> usize {
        debug_assert_eq!(w.group, self.id, "element from a different Coxeter system");
        w.index as usize
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn cartan_type(&self) -> CartanType {
        self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.length.len()
    }

    pub fn is_type_a(&self) -> bool {
        self.perms.is_some()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.coxeter.iter().flatten().all(|&m| m <= 3)
    }

    pub fn coxeter_matrix(&self) -> &[Vec<u32>] {
        &self.coxeter
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[Vec<i32>] {
        &self.positive_roots
    }

    /// Whether `e` belongs to this group (as opposed to another instance).
    pub fn owns(&self, e: Elem) -> bool {
        e.group == self.id && (e.index as usize) < self.order()
    }

    pub fn identity(&self) -> Elem {
        self.longest(ParabolicSet::EMPTY)
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.order()).map(|i| self.elem(i))
    }

    pub fn element_at(&self, index: usize) -> Option<Elem> {
        (index < self.order()).then(|| self.elem(index))
    }

    pub fn all_simple(&self) -> ParabolicSet {
        ParabolicSet::full(self.rank)
    }

    /// The simple reflection `s_i` (1-based).
    pub fn simple(&self, i: usize) -> Elem {
        assert!(i >= 1 && i <= self.rank, "simple reflection s_{i} out of range");
        self.right_mul(self.identity(), i)
    }

    /// `w s_i`.
    #[inline]
    pub fn right_mul(&self, w: Elem, i: usize) -> Elem {
        self.elem(self.right[self.check(w) * self.rank + i - 1] as usize)
    }

    /// `s_i w`.
    #[inline]
    pub fn left_mul(&self, w: Elem, i: usize) -> Elem {
        self.elem(self.left[self.check(w) * self.rank + i - 1] as usize)
    }

    #[inline]
    pub fn length(&self, w: Elem) -> usize {
        self.length[self.check(w)] as usize
    }

    #[inline]
    pub fn inverse(&self, w: Elem) -> Elem {
        self.elem(self.inverse[self.check(w)] as usize)
    }

    /// Right descents `tau(w)`.
    #[inline]
    pub fn right_descents(&self, w: Elem) -> ParabolicSet {
        self.right_desc[self.check(w)]
    }

    /// Left descents `tau(w^{-1})`.
    #[inline]
    pub fn left_descents(&self, w: Elem) -> ParabolicSet {
        self.right_desc[self.inverse[self.check(w)] as usize]
    }

    /// Support `sigma(w)`.
    #[inline]
    pub fn support(&self, w: Elem) -> ParabolicSet {
        self.support[self.check(w)]
    }

    /// Boundary: simple reflections outside `sigma(w)` adjacent to it in the Coxeter graph.
    pub fn boundary(&self, w: Elem) -> ParabolicSet {
        self.neighbours(self.support(w))
    }

    /// Simple reflections outside `set` joined by an edge to some member of `set`.
    pub fn neighbours(&self, set: ParabolicSet) -> ParabolicSet {
        let mut out = ParabolicSet::EMPTY;
        for s in 1..=self.rank {
            if !set.contains(s) && set.iter().any(|t| self.coxeter[s - 1][t - 1] >= 3) {
                out.insert(s);
            }
        }
        out
    }

    /// Splits `set` into connected components of the Coxeter graph, ordered by minimum.
    pub fn components(&self, set: ParabolicSet) -> Vec<ParabolicSet> {
        let mut rest = set;
        let mut out = Vec::new();
        while let Some(start) = rest.min() {
            let mut comp = ParabolicSet::singleton(start);
            loop {
                let grown = comp.union(self.neighbours(comp).intersection(set));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Longest element `w_J` of the parabolic subgroup `W_J`.
    #[inline]
    pub fn longest(&self, j: ParabolicSet) -> Elem {
        self.elem(self.longest[j.bits() as usize] as usize)
    }

    /// Lexicographically least reduced word (1-based letters).
    pub fn reduced_word(&self, w: Elem) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while let Some(s) = self.left_descents(cur).min() {
            word.push(s);
            cur = self.left_mul(cur, s);
        }
        word
    }

    pub fn from_word(&self, word: &[usize]) -> Result<Elem> {
        let mut w = self.identity();
        for &s in word {
            if s == 0 || s > self.rank {
                return Err(Error::Parse(format!("letter {s} out of range for rank {}", self.rank)));
            }
            w = self.right_mul(w, s);
        }
        Ok(w)
    }

    pub fn multiply(&self, v: Elem, w: Elem) -> Elem {
        self.reduced_word(w)
            .into_iter()
            .fold(v, |acc, s| self.right_mul(acc, s))
    }

    /// `w * s` in the Demazure monoid.
    #[inline]
    pub fn demazure_simple(&self, w: Elem, s: usize) -> Elem {
        let ws = self.right_mul(w, s);
        if self.length(ws) > self.length(w) {
            ws
        } else {
            w
        }
    }

    /// Demazure product `v * w`: fold a reduced word of `w` into `v` letter by letter.
    pub fn demazure(&self, v: Elem, w: Elem) -> Elem {
        self.demazure_word(v, &self.reduced_word(w))
    }

    pub fn demazure_word(&self, v: Elem, word: &[usize]) -> Elem {
        word.iter().fold(v, |acc, &s| self.demazure_simple(acc, s))
    }

    pub fn demazure_all<I: IntoIterator<Item = Elem>>(&self, factors: I) -> Elem {
        factors
            .into_iter()
            .fold(self.identity(), |acc, f| self.demazure(acc, f))
    }

    /// Parabolic decomposition `w = u0 * u1` with `u1` in `W_J` and `u0` minimal in `wW_J`.
    pub fn coset_decompose(&self, w: Elem, j: ParabolicSet) -> (Elem, Elem) {
        let u0 = self.coset_min(w, j);
        let u1 = self.multiply(self.inverse(u0), w);
        (u0, u1)
    }

    /// Minimal representative of `wW_J`.
    pub fn coset_min(&self, w: Elem, j: ParabolicSet) -> Elem {
        let mut cur = w;
        loop {
            let d = self.right_descents(cur).intersection(j);
            match d.min() {
                Some(s) => cur = self.right_mul(cur, s),
                None => return cur,
            }
        }
    }

    /// All elements of the parabolic subgroup `W_J`.
    pub fn parabolic_subgroup(&self, j: ParabolicSet) -> Vec<Elem> {
        self.lower_interval(self.longest(j))
    }

    /// Bruhat order `v <= w`.
    ///
    /// Type A uses the rank-matrix (tableau) criterion on one-line notation; other
    /// types use the lifting property along right descents.
    pub fn bruhat_leq(&self, v: Elem, w: Elem) -> bool {
        match &self.perms {
            Some(perms) => {
                tableau_leq(&perms[self.check(v)], &perms[self.check(w)])
            }
            None => self.bruhat_leq_lifting(v, w),
        }
    }

    /// Bruhat order via the lifting property, valid in every Coxeter group.
    pub fn bruhat_leq_lifting(&self, v: Elem, w: Elem) -> bool {
        let (mut v, mut w) = (v, w);
        loop {
            let (lv, lw) = (self.length(v), self.length(w));
            if lv == 0 {
                return true;
            }
            if lv >= lw {
                return v == w;
            }
            let s = self.right_descents(w).min().expect("w != e has a descent");
            if self.right_descents(v).contains(s) {
                v = self.right_mul(v, s);
            }
            w = self.right_mul(w, s);
        }
    }

    /// Like [`Self::bruhat_leq`] but rejects elements of other systems.
    pub fn try_bruhat_leq(&self, v: Elem, w: Elem) -> Result<bool> {
        if !self.owns(v) || !self.owns(w) {
            return Err(Error::MixedSystems);
        }
        Ok(self.bruhat_leq(v, w))
    }

    /// The lower interval `[e, w]`, computed as all subword products of a reduced
    /// word of `w`. Sorted by element index.
    pub fn lower_interval(&self, w: Elem) -> Vec<Elem> {
        let mut seen = vec![false; self.order()];
        let mut members = vec![self.identity()];
        seen[self.identity().index()] = true;
        for s in self.reduced_word(w) {
            let n = members.len();
            for k in 0..n {
                let x = self.right_mul(members[k], s);
                if !seen[x.index()] {
                    seen[x.index()] = true;
                    members.push(x);
                }
            }
        }
        members.sort();
        members
    }

    /// The Bruhat interval `[v, w]`.
    pub fn interval(&self, v: Elem, w: Elem) -> Vec<Elem> {
        self.lower_interval(w)
            .into_iter()
            .filter(|&u| self.bruhat_leq(v, u))
            .collect()
    }

    /// `w(beta)` for a root given in simple-root coordinates.
    pub fn act_on_root(&self, w: Elem, beta: &[i32]) -> Vec<i32> {
        let mut out = beta.to_vec();
        for s in self.reduced_word(w).into_iter().rev() {
            out = reflect(&out, &self.cartan, s - 1);
        }
        out
    }

    /// Right inversions `Phi(w) = { beta > 0 : w(beta) < 0 }`.
    pub fn inversion_set(&self, w: Elem) -> Vec<Vec<i32>> {
        self.positive_roots
            .iter()
            .filter(|beta| self.act_on_root(w, beta).iter().any(|&c| c < 0))
            .cloned()
            .collect()
    }

    // ---- type A ----------------------------------------------------------

    /// One-line notation (values `1..=n`), type A only.
    pub fn one_line(&self, w: Elem) -> Option<&[u8]> {
        self.perms.as_ref().map(|p| p[self.check(w)].as_slice())
    }

    pub fn from_one_line(&self, perm: &[u8]) -> Result<Elem> {
        if self.perms.is_none() {
            return Err(Error::NotTypeA);
        }
        let n = self.rank + 1;
        let mut seen = vec![false; n + 1];
        if perm.len() != n
            || perm
                .iter()
                .any(|&v| v == 0 || v as usize > n || std::mem::replace(&mut seen[v as usize], true))
        {
            return Err(Error::Parse(format!(
                "{perm:?} is not a permutation of 1..={n}"
            )));
        }
        Ok(self.elem(perm_rank(perm)))
    }

    /// Serialises an element: one-line `"4 2 3 1"` in type A, a reduced word
    /// such as `"s2s1s2"` (or `"e"`) otherwise.
    pub fn format(&self, w: Elem) -> String {
        match self.one_line(w) {
            Some(p) => p.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
            None => {
                let word = self.reduced_word(w);
                if word.is_empty() {
                    "e".to_string()
                } else {
                    word.iter().map(|s| format!("s{s}")).collect()
                }
            }
        }
    }

    /// Inverse of [`Self::format`]. Type A also accepts `"( 4 2 3 1 )"` and,
    /// for `n <= 9`, the compact form `"4231"`.
    pub fn parse(&self, text: &str) -> Result<Elem> {
        let t = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if self.is_type_a() {
            let tokens: Vec<&str> = t.split(|c: char| c.is_whitespace() || c == ',').filter(|x| !x.is_empty()).collect();
            let values: Vec<u8> = if tokens.len() == 1 && tokens[0].len() > 1 {
                tokens[0]
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as u8))
                    .collect::<Option<_>>()
                    .ok_or_else(|| Error::Parse(format!("bad permutation {text:?}")))?
            } else {
                tokens
                    .iter()
                    .map(|x| x.parse::<u8>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| Error::Parse(format!("bad permutation {text:?}")))?
            };
            return self.from_one_line(&values);
        }
        if t == "e" || t.is_empty() {
            return Ok(self.identity());
        }
        let word: Vec<usize> = t
            .split(|c: char| c == 's' || c.is_whitespace() || c == ',')
            .filter(|x| !x.is_empty())
            .map(|x| x.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Parse(format!("bad reduced word {text:?}")))?;
        let w = self.from_word(&word)?;
        if self.length(w) != word.len() {
            return Err(Error::Parse(format!("{text:?} is not a reduced word")));
        }
        Ok(w)
    }

    /// Pattern containment on one-line notation.
    pub fn contains_pattern(&self, w: Elem, pattern: &[u8]) -> Result<bool> {
        let word = self.one_line(w).ok_or(Error::NotTypeA)?;
        Ok(pattern::contains(word, pattern))
    }
}

fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lexicographic rank of a permutation of `1..=n` (Lehmer code).
fn perm_rank(p: &[u8]) -> usize {
    let n = p.len();
    let mut rank = 0usize;
    for i in 0..n {
        let smaller_after = p[i + 1..].iter().filter(|&&x| x < p[i]).count();
        rank = rank * (n - i) + smaller_after;
    }
    rank
}

fn inversions(p: &[u8]) -> usize {
    (0..p.len())
        .map(|i| p[i + 1..].iter().filter(|&&x| x < p[i]).count())
        .sum()
}

/// `v <= w` iff for every prefix and threshold, `v` has no more large entries than `w`.
fn tableau_leq(v: &[u8], w: &[u8]) -> bool {
    let n = v.len();
    let mut cv = [0u8; 10];
    let mut cw = [0u8; 10];
    for i in 0..n.saturating_sub(1) {
        for k in 1..=v[i] as usize {
            cv[k] += 1;
        }
        for k in 1..=w[i] as usize {
            cw[k] += 1;
        }
        if (1..=n).any(|k| cv[k] > cw[k]) {
            return false;
        }
    }
    true
}

fn reflect(beta: &[i32], cartan: &[Vec<i32>], i: usize) -> Vec<i32> {
    let pairing: i32 = beta.iter().zip(&cartan[i]).map(|(b, a)| b * a).sum();
    let mut out = beta.to_vec();
    out[i] -= pairing;
    out
}

fn right_multiply_key(key: &[i32], cartan: &[Vec<i32>], i: usize) -> Vec<i32> {
    let n = cartan.len();
    // (w s_i)(alpha_j) = w(alpha_j) - a[i][j] w(alpha_i)
    let img_i: Vec<i32> = key[i * n..(i + 1) * n].to_vec();
    let mut out = key.to_vec();
    for j in 0..n {
        let c = cartan[i][j];
        for k in 0..n {
            out[j * n + k] -= c * img_i[k];
        }
    }
    out
}

fn positive_roots(cartan: &[Vec<i32>]) -> Vec<Vec<i32>> {
    let n = cartan.len();
    let mut roots: Vec<Vec<i32>> = (0..n)
        .map(|i| (0..n).map(|j| i32::from(i == j)).collect())
        .collect();
    let mut k = 0;
    while k < roots.len() {
        for i in 0..n {
            let r = reflect(&roots[k], cartan, i);
            if r.iter().all(|&c| c >= 0) && !roots.contains(&r) {
                roots.push(r);
            }
        }
        k += 1;
    }
    roots.sort_by_key(|r| (r.iter().sum::<i32>(), r.clone()));
    roots
}
