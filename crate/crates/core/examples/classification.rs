//! Cohen–Macaulay, Gorenstein and linearity classification, plus the explicit
//! non-CM witness for rings too large for a full table.

use pinched_veronese::betti::{classify, witness_non_cm, BettiEngine};
use pinched_veronese::homology::FieldSpec;
use pinched_veronese::semigroup::PinchConfig;

pub fn run() -> Vec<String> {
    let mut lines = Vec::new();
    for m in [&[5u32, 0][..], &[4, 1], &[2, 3], &[2, 1, 0]] {
        let config = PinchConfig::from_pinch(m).unwrap();
        let table = BettiEngine::new(&config, FieldSpec::DEFAULT).full_table().unwrap();
        let r = classify(&table).unwrap();
        lines.push(format!(
            "{config}: pdim {} depth {} CM {} Gorenstein {} linearity {} regularity {}",
            r.pdim, r.depth, r.is_cm, r.is_gorenstein, r.linearity_index, r.observed_regularity
        ));
    }
    for m in [[3u32, 1, 0], [2, 1, 1]] {
        let config = PinchConfig::from_pinch(&m).unwrap();
        let w = witness_non_cm(&config, FieldSpec::DEFAULT).unwrap();
        lines.push(format!("{config}: beta({}, {}) = {} rules out Cohen-Macaulay", w.i, w.h, w.dim));
    }
    lines
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}
