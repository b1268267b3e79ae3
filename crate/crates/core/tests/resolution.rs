use schubert::hecke::HeckeAlgebra;
use schubert::resolution::tables::expected::TABLE_S5;
use schubert::resolution::{glue, reverse, Route, SearchConfig, Searcher};
use schubert::CoxeterGroup;

#[test]
fn reverse_resolves_635241_from_its_inverse() {
    let g = CoxeterGroup::type_a(5).unwrap();
    let h = HeckeAlgebra::new(&g);
    let s = Searcher::new(&h, SearchConfig::default());
    let w = g.parse("6 3 5 2 4 1").unwrap();
    let inv = g.parse("6 4 2 5 3 1").unwrap();
    assert_eq!(g.inverse(w), inv);
    let r = s.search_small(inv).resolution.unwrap();
    let back = reverse(&h, &r).unwrap();
    assert_eq!(back.data.w, w);
    assert_eq!(back.route, Route::Reverse);
    assert!(back.certificate.is_small());
}

#[test]
fn table_targets_reverse() {
    let g = CoxeterGroup::type_a(4).unwrap();
    let h = HeckeAlgebra::new(&g);
    let s = Searcher::new(&h, SearchConfig::default());
    for row in TABLE_S5 {
        let w = g.parse(row.w).unwrap();
        let r = s.search_small(w).resolution.unwrap();
        let back = reverse(&h, &r).unwrap();
        assert_eq!(back.data.w, g.inverse(w), "{}", row.w);
        assert!(back.certificate.is_small(), "{}", row.w);
    }
}

#[test]
fn zelevinskii_15342() {
    let g = CoxeterGroup::type_a(4).unwrap();
    let h = HeckeAlgebra::new(&g);
    let s = Searcher::new(&h, SearchConfig::default());
    let w = g.parse("1 5 3 4 2").unwrap();
    let r = s.zelevinskii_route(w).unwrap().unwrap();
    assert!(r.certificate.is_small());
    assert_eq!(r.data.first(), g.left_descents(w));
    assert_eq!(r.data.last(), g.right_descents(w));
}

/// Reversing a glued resolution equals gluing the reversed pieces in swapped order.
#[test]
fn glue_then_reverse_is_reverse_then_glue() {
    let g = CoxeterGroup::type_a(4).unwrap();
    let h = HeckeAlgebra::new(&g);
    let s = Searcher::new(&h, SearchConfig::default());
    let mut glued = 0;
    let elems: Vec<_> = g.elements().step_by(7).collect();
    for &v in &elems {
        let Some(a) = s.search_small(v).resolution else { continue };
        for &w in &elems {
            let Some(b) = s.search_small(w).resolution else { continue };
            let Ok(ab) = glue(&h, &a, &b) else { continue };
            let lhs = reverse(&h, &ab).unwrap();
            let rhs = glue(&h, &reverse(&h, &b).unwrap(), &reverse(&h, &a).unwrap()).unwrap();
            assert_eq!(lhs.data, rhs.data, "{} {}", g.format(v), g.format(w));
            glued += 1;
        }
    }
    assert!(glued > 20, "only {glued} glued pairs");
}
