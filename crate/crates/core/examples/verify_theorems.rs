//! Checks computed tables against the closed formulas and structural claims.

use pinched_veronese::cli::render::verification_text;
use pinched_veronese::homology::FieldSpec;
use pinched_veronese::semigroup::PinchConfig;
use pinched_veronese::theorems::verify;

pub fn run() -> Vec<String> {
    let mut lines = Vec::new();
    for (d, i) in [(5, 1), (7, 0), (7, 3), (6, 2)] {
        let report = verify(&PinchConfig::binary(d, i).unwrap(), FieldSpec::DEFAULT).unwrap();
        lines.extend(verification_text(&report, false).lines().map(str::to_string));
        for u in &report.unknown {
            lines.push(format!("  unpredicted beta({},{}) = {}", u.i, u.s, u.value));
        }
    }
    lines
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}
