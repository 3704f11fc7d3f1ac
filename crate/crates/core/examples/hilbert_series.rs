//! Exact Hilbert series and h-polynomials.

use pinched_veronese::semigroup::PinchConfig;
use pinched_veronese::series::{
    coarse_coefficients, h_polynomial, h_polynomial_formula, hilbert_closed, hilbert_matches_counting,
    veronese_module_series,
};

pub fn run() -> Vec<String> {
    let mut lines = Vec::new();
    for m in [[4u32, 0], [3, 1], [2, 2]] {
        let config = PinchConfig::from_pinch(&m).unwrap();
        let series = hilbert_closed(&config);
        let coeffs = coarse_coefficients(&series, config.d(), 5);
        lines.push(format!("{config}: H(z) = {series}"));
        lines.push(format!(
            "  dims in degrees 0, 4, .., 20: {}",
            coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
        ));
        assert!(hilbert_matches_counting(&config, 8));
        let h = h_polynomial(&config).unwrap();
        assert_eq!(h, h_polynomial_formula(&config).unwrap());
        lines.push(format!("  h(y) = {}", h.to_string().replace('z', "y")));
    }
    let three = PinchConfig::from_pinch(&[1, 1, 1]).unwrap();
    lines.push(format!("{three}: H(z) = {}", hilbert_closed(&three)));
    lines.push(format!("S_(3,2,1)(z) = {}", veronese_module_series(3, 2, 1).unwrap()));
    lines
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}
