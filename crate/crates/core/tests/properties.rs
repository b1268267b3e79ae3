//! Structural invariants: exhaustive on S4 and small Weyl groups, sampled on S6.

mod common;

use std::sync::OnceLock;

use proptest::prelude::*;
use schubert::hecke::HeckeAlgebra;
use schubert::{CartanType, CoxeterGroup};

use common::*;

fn s6() -> &'static CoxeterGroup {
    static G: OnceLock<CoxeterGroup> = OnceLock::new();
    G.get_or_init(|| CoxeterGroup::type_a(5).unwrap())
}

fn check(r: Check) -> Result<(), TestCaseError> {
    r.map_err(TestCaseError::fail)
}

fn groups() -> Vec<CoxeterGroup> {
    ["A3", "B3", "C2", "D4", "G2"]
        .iter()
        .map(|t| CoxeterGroup::new(t.parse::<CartanType>().unwrap()).unwrap())
        .collect()
}

#[test]
fn exhaustive_pairs_small_groups() {
    for g in groups() {
        let bound = if g.order() > 48 { 48 } else { g.order() };
        for i in 0..g.order() {
            let v = elem(&g, i);
            for k in 0..bound {
                let w = elem(&g, (i * 7 + k * 13) % g.order());
                let c = elem(&g, (i + k) % g.order());
                demazure_laws(&g, v, w, c).unwrap();
                monoid_reduced_expressions(&g, v, w).unwrap();
                sigma_facts(&g, v, w).unwrap();
                tau_facts(&g, v, w).unwrap();
                tau_reduced_decomposition(&g, v, w).unwrap();
            }
        }
    }
}

#[test]
fn exhaustive_sets_small_groups() {
    for g in groups() {
        let h = HeckeAlgebra::new(&g);
        for w in g.elements() {
            for j in g.all_simple().subsets() {
                sigma_is_tau(&g, w, j).unwrap();
                parabolic_decomposition(&g, w, j).unwrap();
                bp_isom_certifies(&h, w, j).unwrap();
            }
            if g.is_simply_laced() {
                smooth_factorization_certifies(&h, w).unwrap();
            }
        }
    }
}

#[test]
fn complete_bp_patterns_s4_to_s6() {
    for rank in 3..=5 {
        let g = CoxeterGroup::type_a(rank).unwrap();
        for w in g.elements() {
            complete_bp_matches_patterns(&g, w).unwrap();
        }
    }
}

#[test]
fn naive_pattern_search_agrees() {
    let g = s6();
    for w in g.elements() {
        let word = g.one_line(w).unwrap();
        for p in [&[2u8, 1][..], &[3, 4, 1, 2], &[4, 2, 3, 1], &[5, 2, 3, 4, 1], &[6, 3, 5, 2, 4, 1]] {
            assert_eq!(
                schubert::coxeter::pattern::contains(word, p),
                naive_contains(word, p),
                "{} vs {p:?}",
                g.format(w)
            );
        }
    }
}

#[test]
fn hecke_relations_exhaustive() {
    for g in groups() {
        let h = HeckeAlgebra::new(&g);
        for j in g.all_simple().subsets() {
            hecke_parabolic_idempotent(&h, j).unwrap();
        }
        for w in g.elements().take(64) {
            hecke_generators(&h, w).unwrap();
        }
    }
}

#[test]
fn profiles_satisfy_identities_s4() {
    let g = CoxeterGroup::type_a(3).unwrap();
    let h = HeckeAlgebra::new(&g);
    let all: Vec<_> = g.all_simple().subsets().filter(|s| !s.is_empty()).collect();
    for &a in &all {
        for &b in &all {
            for &c in &all {
                profile_consistency(&h, &[a, b, c]).unwrap();
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn s6_monoid_sigma_tau(i in 0usize..720, j in 0usize..720, k in 0usize..720, bits in 0u32..32) {
        let g = s6();
        let (v, w, c) = (elem(g, i), elem(g, j), elem(g, k));
        check(demazure_laws(g, v, w, c))?;
        check(monoid_reduced_expressions(g, v, w))?;
        check(sigma_facts(g, v, w))?;
        check(tau_facts(g, v, w))?;
        check(tau_reduced_decomposition(g, v, w))?;
        check(sigma_is_tau(g, w, set(g, bits)))?;
        check(parabolic_decomposition(g, w, set(g, bits)))?;
        check(complete_bp_matches_patterns(g, w))?;
    }

    #[test]
    fn s6_bp_and_factorization(i in 0usize..720, bits in 1u32..32) {
        let g = s6();
        let h = HeckeAlgebra::new(g);
        let w = elem(g, i);
        check(bp_isom_certifies(&h, w, set(g, bits)))?;
        check(smooth_factorization_certifies(&h, w))?;
    }
}
