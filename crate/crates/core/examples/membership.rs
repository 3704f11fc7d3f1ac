//! Membership in a pinched Veronese semigroup: closed form, brute force, and
//! the bounded normality probe.

use pinched_veronese::semigroup::{
    enumerate_degree, is_member_bruteforce, is_member_closed, normality_probe, Multidegree, PinchConfig,
};

pub fn run() -> Vec<String> {
    let mut lines = Vec::new();
    let config = PinchConfig::from_pinch(&[2, 1]).unwrap();
    lines.push(format!("{config}: generators {:?}", config.generators().as_slice()));

    for h in [[5u32, 1], [4, 2], [2, 4], [0, 0]] {
        let h = Multidegree::new(h.to_vec());
        let closed = is_member_closed(&h, &config).unwrap();
        let brute = is_member_bruteforce(&h, &config, 12).unwrap();
        assert_eq!(closed, brute);
        lines.push(format!("{h} in H: {closed}"));
    }

    let degree_two = enumerate_degree(&config, 2);
    lines.push(format!("{} elements of degree 6: {:?}", degree_two.len(), degree_two));

    for m in [[4u32, 0], [2, 3]] {
        let c = PinchConfig::from_pinch(&m).unwrap();
        match normality_probe(&c, 6, 4) {
            Some(w) => lines.push(format!("{c}: {} * {} lies in H but {} does not", w.multiplier, w.z, w.z)),
            None => lines.push(format!("{c}: no obstruction to normality found")),
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
