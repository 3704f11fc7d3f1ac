//! Canonical partners of Veronese modules and the series-level duality check.

use pinched_veronese::series::canonical_series_check;

pub fn run() -> Vec<String> {
    let mut lines = Vec::new();
    for n in 1..=3 {
        for d in [2, 5] {
            for k in 0..d {
                let c = canonical_series_check(n, d, k).unwrap();
                assert!(c.holds);
                lines.push(format!("S_({n},{d},{k}) -> S_({n},{d},{}) shifted by {}", c.partner, c.shift.unwrap()));
            }
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
