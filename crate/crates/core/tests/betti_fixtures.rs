use std::collections::BTreeMap;

use pinched_veronese::betti::{classify, multigraded_betti, BettiEngine, BettiTable};
use pinched_veronese::homology::FieldSpec;
use pinched_veronese::semigroup::{Multidegree, PinchConfig};
use pinched_veronese::series::k_polynomial_check;

type Cells = [((usize, usize), u64)];

fn nonzero(table: &BettiTable) -> BTreeMap<(usize, usize), u64> {
    table.nonzero().collect()
}

fn full(config: &PinchConfig, field: FieldSpec) -> BettiTable {
    BettiEngine::new(config, field).full_table().unwrap()
}

fn fixture(entries: &Cells) -> BTreeMap<(usize, usize), u64> {
    entries.iter().copied().collect()
}

#[test]
fn two_variable_fixtures() {
    let cases: [(u32, u32, &Cells); 6] = [
        (5, 2, &[((0, 0), 1), ((1, 2), 4), ((1, 3), 1), ((2, 3), 2), ((2, 4), 6), ((3, 5), 5), ((4, 6), 1)]),
        (5, 1, &[((0, 0), 1), ((1, 2), 5), ((2, 3), 5), ((3, 5), 1)]),
        (5, 0, &[((0, 0), 1), ((1, 2), 6), ((2, 3), 8), ((3, 4), 3)]),
        (4, 2, &[((0, 0), 1), ((1, 2), 1), ((1, 3), 3), ((2, 4), 4), ((3, 5), 1)]),
        (
            6,
            2,
            &[
                ((0, 0), 1),
                ((1, 2), 8),
                ((1, 3), 1),
                ((2, 3), 12),
                ((2, 4), 4),
                ((3, 4), 3),
                ((3, 5), 10),
                ((4, 6), 6),
                ((5, 7), 1),
            ],
        ),
        (
            6,
            3,
            &[((0, 0), 1), ((1, 2), 8), ((2, 3), 11), ((2, 4), 4), ((3, 4), 3), ((3, 5), 10), ((4, 6), 6), ((5, 7), 1)],
        ),
    ];
    for (d, i, expected) in cases {
        let config = PinchConfig::binary(d, i).unwrap();
        let table = full(&config, FieldSpec::DEFAULT);
        assert!(table.is_certified());
        assert_eq!(nonzero(&table), fixture(expected), "{config}");
    }
}

#[test]
fn three_variable_fixtures() {
    let cases: [(&[u32], &Cells); 3] = [
        (&[3, 0, 0], &[((0, 0), 1), ((1, 2), 20), ((2, 3), 64), ((3, 4), 90), ((4, 5), 64), ((5, 6), 20), ((6, 8), 1)]),
        (
            &[2, 1, 0],
            &[
                ((0, 0), 1),
                ((1, 2), 18),
                ((1, 3), 1),
                ((2, 3), 52),
                ((2, 4), 6),
                ((3, 4), 60),
                ((3, 5), 15),
                ((4, 5), 24),
                ((4, 6), 30),
                ((5, 7), 27),
                ((6, 8), 9),
                ((7, 9), 1),
            ],
        ),
        (
            &[1, 1, 1],
            &[
                ((0, 0), 1),
                ((1, 2), 17),
                ((2, 3), 43),
                ((2, 4), 10),
                ((3, 4), 36),
                ((3, 5), 55),
                ((4, 5), 8),
                ((4, 6), 100),
                ((5, 7), 83),
                ((6, 8), 37),
                ((7, 9), 9),
                ((8, 10), 1),
            ],
        ),
    ];
    for (m, expected) in cases {
        let config = PinchConfig::from_pinch(m).unwrap();
        let table = full(&config, FieldSpec::DEFAULT);
        assert_eq!(nonzero(&table), fixture(expected), "{config}");
        assert!(k_polynomial_check(&table, &config).unwrap());
    }
}

#[test]
fn tables_agree_across_fields_and_reversal() {
    for d in 3..=6 {
        for i in 0..=d {
            let config = PinchConfig::binary(d, i).unwrap();
            let reference = full(&config, FieldSpec::DEFAULT);
            assert!(k_polynomial_check(&reference, &config).unwrap(), "{config}");
            for field in [FieldSpec::PrimeField(2), FieldSpec::Rationals] {
                assert_eq!(nonzero(&full(&config, field)), nonzero(&reference), "{config} over {field}");
            }
            assert_eq!(nonzero(&full(&config.reversed(), FieldSpec::DEFAULT)), nonzero(&reference));
        }
    }
}

#[test]
fn fine_grading_sums_to_coarse() {
    let config = PinchConfig::binary(5, 2).unwrap();
    let table = full(&config, FieldSpec::DEFAULT);
    for ((i, s), v) in table.nonzero() {
        let fine = multigraded_betti(&config, FieldSpec::DEFAULT, i, s as u32).unwrap();
        assert_eq!(fine.values().sum::<u64>(), v);
    }
    let top = multigraded_betti(&config, FieldSpec::DEFAULT, 4, 6).unwrap();
    assert_eq!(top.get(&Multidegree::new(vec![15, 15])), Some(&1));
}

#[test]
fn classification_matches_structure() {
    let r = classify(&full(&PinchConfig::binary(5, 1).unwrap(), FieldSpec::DEFAULT)).unwrap();
    assert!(r.is_cm && r.is_gorenstein);
    assert_eq!((r.pdim, r.depth), (3, 2));
    let r = classify(&full(&PinchConfig::binary(5, 2).unwrap(), FieldSpec::DEFAULT)).unwrap();
    assert!(!r.is_cm);
    assert_eq!((r.pdim, r.depth), (4, 1));
}
