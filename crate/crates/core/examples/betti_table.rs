//! Graded and multigraded Betti numbers of a two-variable pinched Veronese ring.

use pinched_veronese::betti::{multigraded_betti, BettiEngine};
use pinched_veronese::cli::render::betti_text;
use pinched_veronese::homology::FieldSpec;
use pinched_veronese::semigroup::PinchConfig;

pub fn run() -> Vec<String> {
    let config = PinchConfig::binary(6, 3).unwrap();
    let table = BettiEngine::new(&config, FieldSpec::DEFAULT).full_table().unwrap();
    let mut lines: Vec<String> = betti_text(&table).lines().map(str::to_string).collect();

    let fine = multigraded_betti(&config, FieldSpec::DEFAULT, 2, 4).unwrap();
    lines.push(format!("beta(2, h) with |h| = 24: {fine:?}"));
    assert_eq!(fine.values().sum::<u64>(), table.entry(2, 4));
    lines
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}
