//! Squarefree divisor complexes, their homology and Alexander duals.

use pinched_veronese::homology::{
    alexander_dual, alexander_duality_holds, build_divisor_complex, link, reduced_homology, FieldSpec,
};
use pinched_veronese::semigroup::{Multidegree, PinchConfig};

pub fn run() -> Vec<String> {
    let mut lines = Vec::new();
    let config = PinchConfig::binary(5, 2).unwrap();

    // The sum of every degree-5 monomial: its complex is the boundary of a 4-simplex.
    let h = Multidegree::new(vec![15, 15]);
    let c = build_divisor_complex(&h, &config);
    let homology = reduced_homology(&c, FieldSpec::DEFAULT);
    lines.push(format!("{h}: {} faces, homology {:?}", c.num_faces(), homology.dims()));
    let dual = alexander_dual(&c).unwrap();
    lines.push(format!("dual faces: {:?}", dual.face_lists()));
    assert!(alexander_duality_holds(&c, FieldSpec::Rationals).unwrap());

    let h = Multidegree::new(vec![8, 12]);
    let c = build_divisor_complex(&h, &config);
    lines.push(format!("{h}: facets of size {:?}", c.dimension().map(|k| k + 1)));
    lines.push(format!("  homology {:?}", reduced_homology(&c, FieldSpec::DEFAULT).dims()));
    let star = link(&c, 0).unwrap();
    lines.push(format!("  faces meeting vertex 0 from above: {}", star.num_faces()));
    lines
}

#[allow(dead_code)]
fn main() {
    for line in run() {
        println!("{line}");
    }
}
