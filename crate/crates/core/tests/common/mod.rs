//! Property checks shared by the proptest suites and the acceptance target.
//! Each returns `Err(description)` on the first violated statement.
#![allow(dead_code)]

use itertools::Itertools;

use schubert::bp::{
    bp_isom, complete_bp, is_bp, is_smooth, simply_laced_factorization, simply_laced_tau_check, FactorChain,
    IsoVariant,
};
use schubert::coxeter::pattern::COMPLETE_BP_PATTERNS;
use schubert::hecke::{check_identities, fiber_profile, HeckeAlgebra, HeckeElement, IntPoly};
use schubert::{CoxeterGroup, Elem, ParabolicSet};

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

pub fn elem(g: &CoxeterGroup, i: usize) -> Elem {
    g.element_at(i % g.order()).unwrap()
}

pub fn set(g: &CoxeterGroup, bits: u32) -> ParabolicSet {
    ParabolicSet::from_bits(bits).intersection(g.all_simple())
}

/// Pattern containment by brute force over all position subsets.
pub fn naive_contains(word: &[u8], pattern: &[u8]) -> bool {
    (0..word.len()).combinations(pattern.len()).any(|pos| {
        pos.iter().tuple_combinations().zip(pattern.iter().tuple_combinations()).all(
            |((&i, &j), (&a, &b))| (word[i] < word[j]) == (a < b),
        )
    })
}

pub fn demazure_laws(g: &CoxeterGroup, a: Elem, b: Elem, c: Elem) -> Check {
    let d = |x, y| g.demazure(x, y);
    ensure!(d(d(a, b), c) == d(a, d(b, c)), "associativity fails");
    ensure!(
        g.inverse(d(a, b)) == d(g.inverse(b), g.inverse(a)),
        "inverse is not an anti-automorphism"
    );
    let ab = d(a, b);
    ensure!(
        g.bruhat_leq(a, ab) && g.bruhat_leq(b, ab) && g.bruhat_leq(g.multiply(a, b), ab),
        "a, b, ab not below a*b"
    );
    Ok(())
}

/// Reduced-expression facts for the monoid product.
pub fn monoid_reduced_expressions(g: &CoxeterGroup, v: Elem, w: Elem) -> Check {
    let word = g.reduced_word(v);
    let folded = word.iter().fold(g.identity(), |acc, &s| g.demazure(acc, g.simple(s)));
    ensure!(folded == v, "v is not the product of its reduced word");
    let vw = g.demazure(v, w);
    let (lv, lw, lvw) = (g.length(v), g.length(w), g.length(vw));
    ensure!(lv.max(lw) <= lvw && lvw <= lv + lw, "length bounds fail");
    // v*w has a reduced word starting with one of v
    ensure!(
        g.length(g.multiply(g.inverse(v), vw)) == lvw - lv,
        "v is not a prefix of v*w"
    );
    if lvw == lv + lw {
        ensure!(vw == g.multiply(v, w), "additive length without v*w = vw");
    }
    Ok(())
}

pub fn sigma_facts(g: &CoxeterGroup, v: Elem, w: Elem) -> Check {
    ensure!(g.support(g.inverse(w)) == g.support(w), "(a) fails");
    ensure!(g.support(g.longest(g.support(w))) == g.support(w), "(b) fails");
    if g.bruhat_leq(v, w) {
        ensure!(g.support(v).is_subset(g.support(w)), "(c) fails");
    }
    ensure!(g.right_descents(w).is_subset(g.support(w)), "(d) fails");
    ensure!(
        g.support(g.demazure(v, w)) == g.support(v).union(g.support(w)),
        "(e) fails"
    );
    Ok(())
}

pub fn tau_facts(g: &CoxeterGroup, v: Elem, w: Elem) -> Check {
    let fixed_left =
        ParabolicSet::from_indices(g.all_simple().iter().filter(|&s| g.demazure(g.simple(s), w) == w));
    ensure!(g.left_descents(w) == fixed_left, "(a) fails");
    let roots = g.positive_roots();
    for s in g.all_simple().iter() {
        let simple_root = roots
            .iter()
            .find(|r| r.iter().sum::<i32>() == 1 && r[s - 1] == 1)
            .expect("simple root listed");
        let image = g.act_on_root(w, simple_root);
        let negative = image.iter().all(|&c| c <= 0);
        ensure!(g.right_descents(w).contains(s) == negative, "(b) fails at s{s}");
    }
    ensure!(g.right_descents(w).is_subset(g.right_descents(g.demazure(v, w))), "(c) fails");
    ensure!(g.right_descents(g.longest(g.support(v))) == g.support(v), "(d) fails");
    Ok(())
}

/// `w = w_I` iff `sigma(w) = tau(w) = I`, for every `I`.
pub fn sigma_is_tau(g: &CoxeterGroup, w: Elem, i: ParabolicSet) -> Check {
    let lhs = w == g.longest(i);
    let rhs = g.support(w) == i && g.right_descents(w) == i;
    ensure!(lhs == rhs, "equivalence fails for I = {{{i}}}");
    Ok(())
}

/// `l(vw) = l(v) + l(w)` implies `tau(vw) ⊆ tau(v) ∪ sigma(w)`.
pub fn tau_reduced_decomposition(g: &CoxeterGroup, v: Elem, w: Elem) -> Check {
    let u = g.multiply(v, w);
    if g.length(u) == g.length(v) + g.length(w) {
        ensure!(
            g.right_descents(u).is_subset(g.right_descents(v).union(g.support(w))),
            "tau(vw) escapes tau(v) ∪ sigma(w)"
        );
    }
    Ok(())
}

pub fn parabolic_decomposition(g: &CoxeterGroup, w: Elem, j: ParabolicSet) -> Check {
    let (u0, u1) = g.coset_decompose(w, j);
    ensure!(g.multiply(u0, u1) == w, "u0 u1 != w");
    ensure!(g.length(w) == g.length(u0) + g.length(u1), "lengths not additive");
    ensure!(g.demazure(u0, u1) == w, "u0 * u1 != w");
    ensure!(g.support(u1).is_subset(j), "u1 not in W_J");
    ensure!(g.right_descents(u0).intersection(j).is_empty(), "u0 not minimal");
    ensure!(
        g.right_descents(u0).intersection(g.left_descents(u1)).is_empty(),
        "tau(u0) meets tau(u1^-1)"
    );
    let (v0, v1) = g.coset_decompose(w, g.support(u1));
    ensure!((v0, v1) == (u0, u1), "not parabolic w.r.t. sigma(u1)");
    if j.is_subset(g.right_descents(w)) {
        ensure!(u1 == g.longest(j), "J ⊆ tau(w) without u1 = w_J");
    }
    Ok(())
}

pub fn complete_bp_matches_patterns(g: &CoxeterGroup, w: Elem) -> Check {
    let word = g.one_line(w).expect("type A");
    let avoids = COMPLETE_BP_PATTERNS.iter().all(|p| !naive_contains(word, p));
    ensure!(
        complete_bp(g, w).is_some() == avoids,
        "complete BP existence differs from pattern avoidance for {}",
        g.format(w)
    );
    Ok(())
}

fn isomorphism(h: &HeckeAlgebra<'_>, chain: &FactorChain, what: &str) -> Check {
    let p = fiber_profile(h, chain).map_err(|e| format!("{what}: {e}"))?;
    check_identities(h, &p).map_err(|e| format!("{what}: {e}"))?;
    ensure!(p.is_isomorphism(), "{what} is not an isomorphism");
    Ok(())
}

/// All three chains of a BP decomposition are isomorphisms onto `X_w`.
pub fn bp_isom_certifies(h: &HeckeAlgebra<'_>, w: Elem, j: ParabolicSet) -> Check {
    let g = h.group();
    if is_bp(g, w, j).is_none() {
        return Ok(());
    }
    for v in [IsoVariant::I, IsoVariant::Ii, IsoVariant::Iii] {
        let chain = bp_isom(g, w, j, v).map_err(|e| e.to_string())?;
        ensure!(chain.target(g) == w, "{v:?} misses the target");
        isomorphism(h, &chain, &format!("bp_isom {v:?} of {}", g.format(w)))?;
    }
    Ok(())
}

/// Smooth elements: the factorization is resolution data of an isomorphism, and
/// `tau(w^-1) = tau(w)` iff `tau(w) = sigma(w)`.
pub fn smooth_factorization_certifies(h: &HeckeAlgebra<'_>, w: Elem) -> Check {
    let g = h.group();
    if !is_smooth(g, w) {
        return Ok(());
    }
    let sets = simply_laced_factorization(g, w).map_err(|e| e.to_string())?;
    ensure!(sets.first() == Some(&g.left_descents(w)), "first set is not tau(w^-1)");
    let chain = FactorChain::parabolic(g, &sets).map_err(|e| e.to_string())?;
    ensure!(chain.target(g) == w, "factorization misses the target");
    isomorphism(h, &chain, &format!("factorization of {}", g.format(w)))?;
    ensure!(
        simply_laced_tau_check(g, w) == Ok(true),
        "tau biconditional fails for {}",
        g.format(w)
    );
    Ok(())
}

/// `T_s^2 = (q-1) T_s + q`, and generator products agree with the general product.
pub fn hecke_generators(h: &HeckeAlgebra<'_>, w: Elem) -> Check {
    let g = h.group();
    let q = IntPoly::monomial(1);
    for s in g.all_simple().iter() {
        let ts = HeckeElement::basis(g.simple(s));
        let sq = h.mul(&ts, &ts);
        let want = HeckeElement::from_terms([(g.simple(s), IntPoly::from_coeffs(vec![-1, 1])), (g.identity(), q.clone())]);
        ensure!(sq == want, "quadratic relation fails for s{s}");
        let tw = HeckeElement::basis(w);
        ensure!(h.mul(&tw, &ts) == h.mul_generator_right(&tw, s), "right generator action differs");
        ensure!(h.mul(&ts, &tw) == h.mul_generator_left(s, &tw), "left generator action differs");
    }
    Ok(())
}

/// `x_J^2 = pi_J(q) x_J` and `x_J` is the Schubert class of `w_J`.
pub fn hecke_parabolic_idempotent(h: &HeckeAlgebra<'_>, j: ParabolicSet) -> Check {
    let g = h.group();
    let x = h.parabolic_class(j);
    ensure!(*x == *h.schubert_class(g.longest(j)), "x_J differs from C_(w_J)");
    ensure!(h.mul(&x, &x) == x.scale(&h.poincare(j)), "x_J^2 != pi_J x_J");
    ensure!(h.mul_parabolic(&x, j) == x.scale(&h.poincare(j)), "parabolic fast path differs");
    Ok(())
}

/// Profile identities for the parabolic chain of `sets`.
pub fn profile_consistency(h: &HeckeAlgebra<'_>, sets: &[ParabolicSet]) -> Check {
    let g = h.group();
    let chain = FactorChain::parabolic(g, sets).map_err(|e| e.to_string())?;
    let p = fiber_profile(h, &chain).map_err(|e| e.to_string())?;
    check_identities(h, &p).map_err(|e| e.to_string())
}
