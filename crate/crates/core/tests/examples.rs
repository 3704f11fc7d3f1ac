// Every example must run to completion; a few lines of output are pinned.

#[allow(dead_code)]
#[path = "../examples/betti_table.rs"]
mod betti_table;
#[allow(dead_code)]
#[path = "../examples/canonical_module.rs"]
mod canonical_module;
#[allow(dead_code)]
#[path = "../examples/classification.rs"]
mod classification;
#[allow(dead_code)]
#[path = "../examples/divisor_complex.rs"]
mod divisor_complex;
#[allow(dead_code)]
#[path = "../examples/hilbert_series.rs"]
mod hilbert_series;
#[allow(dead_code)]
#[path = "../examples/membership.rs"]
mod membership;
#[allow(dead_code)]
#[path = "../examples/verify_theorems.rs"]
mod verify_theorems;

#[test]
fn membership_runs() {
    let out = membership::run();
    assert!(out.contains(&"(5,1) in H: false".to_string()));
}

#[test]
fn divisor_complex_runs() {
    let out = divisor_complex::run();
    assert!(out[0].contains("homology {3: 1}"));
}

#[test]
fn betti_table_runs() {
    let out = betti_table::run();
    assert!(out.iter().any(|l| l.contains("(certified)")));
}

#[test]
fn hilbert_series_runs() {
    let out = hilbert_series::run();
    assert!(out.iter().any(|l| l.ends_with("1, 4, 7, 10, 13, 16")));
}

#[test]
fn classification_runs() {
    assert_eq!(classification::run().len(), 6);
}

#[test]
fn verify_theorems_runs() {
    assert!(verify_theorems::run()[0].starts_with("PASS"));
}

#[test]
fn canonical_module_runs() {
    assert_eq!(canonical_module::run().len(), 3 * (2 + 5));
}
