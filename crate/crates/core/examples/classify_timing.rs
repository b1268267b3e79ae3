use std::time::Instant;

use schubert::resolution::{classify, ClassifyConfig};
use schubert::CoxeterGroup;

fn main() {
    let rank: usize = std::env::args().nth(1).map(|s| s.parse().unwrap()).unwrap_or(4);
    let g = CoxeterGroup::type_a(rank).unwrap();
    let t = Instant::now();
    let r = classify(&g, ClassifyConfig { timings: true, ..Default::default() }).unwrap();
    println!("{:?} in {:?}", r.counts, t.elapsed());
    println!("failures: {:?}", r.failures());
    println!("exhausted: {:?}", r.elements.iter().filter_map(|e| e.exhausted).collect::<Vec<_>>());
    let mut hist = std::collections::BTreeMap::new();
    for e in &r.elements { *hist.entry(e.route.clone()).or_insert(0) += 1; }
    println!("{hist:?}");
    let mut slow: Vec<_> = r.elements.iter().map(|e| (e.millis.unwrap(), e.w.clone(), e.route.clone())).collect();
    slow.sort();
    for s in slow.iter().rev().take(8) {
        println!("{s:?}");
    }
}
