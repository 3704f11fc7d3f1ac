// Acceptance suite: one PASS/FAIL line per criterion, details indented below.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::Instant;

use pinched_veronese::betti::{classify, witness_non_cm, BettiEngine, BettiError, BettiTable};
use pinched_veronese::homology::{
    alexander_dual, alexander_dual_over, boundary_matrix, build_divisor_complex, reduced_homology, FieldSpec,
    SquarefreeDivisorComplex,
};
use pinched_veronese::semigroup::{compositions, is_member_closed, BruteForceOracle, Multidegree, PinchConfig};
use pinched_veronese::series::{
    canonical_partner, canonical_series_check, h_polynomial, h_polynomial_formula, hilbert_matches_counting,
    k_polynomial_check,
};
use pinched_veronese::theorems::{expected_cm, expected_for, expected_gorenstein};

const FIELDS: [FieldSpec; 3] = [FieldSpec::PrimeField(2), FieldSpec::PrimeField(32003), FieldSpec::Rationals];
const MAX_DETAILS: usize = 40;

struct Outcome {
    summary: String,
    failures: Vec<String>,
}

impl Outcome {
    fn new() -> Self {
        Self { summary: String::new(), failures: Vec::new() }
    }

    fn fail(&mut self, msg: impl Into<String>) {
        self.failures.push(msg.into());
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.fail(msg());
        }
    }
}

/// Everything computed once and shared between criteria.
struct Corpus {
    /// Two-variable tables, `3 <= d <= 8`, `0 <= i <= ⌈d/2⌉`, over the default field.
    binary: Vec<(PinchConfig, BettiTable)>,
    /// Two-variable tables for the remaining pinches `⌈d/2⌉ < i <= d`, and for `d = 2`.
    binary_rest: Vec<(PinchConfig, BettiTable)>,
    /// Three-variable tables in degree 3.
    ternary: Vec<(PinchConfig, BettiTable)>,
    /// Three-variable degree-4 configurations (witness only).
    ternary_large: Vec<PinchConfig>,
}

fn pinches(n: usize, d: u32) -> Vec<PinchConfig> {
    compositions(n, d).into_iter().filter_map(|m| PinchConfig::new(n, d, m).ok()).collect()
}

fn full_table(config: &PinchConfig, field: FieldSpec) -> BettiTable {
    BettiEngine::new(config, field).full_table().unwrap_or_else(|e| panic!("{config}: {e}"))
}

fn build_corpus() -> Corpus {
    let mut binary = Vec::new();
    let mut binary_rest = Vec::new();
    for d in 3..=8u32 {
        for i in 0..=d {
            let config = PinchConfig::binary(d, i).unwrap();
            let table = full_table(&config, FieldSpec::DEFAULT);
            if i <= d.div_ceil(2) {
                binary.push((config, table));
            } else {
                binary_rest.push((config, table));
            }
        }
    }
    for config in pinches(2, 2) {
        let table = full_table(&config, FieldSpec::DEFAULT);
        binary_rest.push((config, table));
    }
    let ternary = pinches(3, 3).into_iter().map(|c| {
        let t = full_table(&c, FieldSpec::DEFAULT);
        (c, t)
    });
    Corpus { binary, binary_rest, ternary: ternary.collect(), ternary_large: pinches(3, 4) }
}

fn nonzero(table: &BettiTable) -> BTreeMap<(usize, usize), u64> {
    table.nonzero().collect()
}

fn criterion_1(corpus: &Corpus) -> Outcome {
    let mut out = Outcome::new();
    let mut known = 0;
    let mut zero = 0;
    let mut nonzero_claims = 0;
    for (config, table) in &corpus.binary {
        if let Err(e) = table.certification() {
            out.fail(format!("{config}: table not certified: {e}"));
        }
        let expected = match expected_for(config) {
            Ok(e) => e,
            Err(e) => {
                out.fail(format!("{config}: {e}"));
                continue;
            }
        };
        for (&(i, s), e) in &expected.known {
            known += 1;
            let actual = table.get(i, s);
            out.check(actual == Some(e.value), || {
                format!("{config}: {} beta({i},{s}) expected {}, got {actual:?}", e.claim, e.value)
            });
        }
        for defect in &expected.defects {
            let (i, s) = defect.cell;
            known += 1;
            out.fail(format!(
                "{config}: {} beta({i},{s}) formula gives {}, got {}",
                defect.claim,
                defect.value,
                table.entry(i, s)
            ));
        }
        for (&(i, s), claim) in &expected.zero {
            zero += 1;
            let actual = table.get(i, s);
            out.check(actual == Some(0), || format!("{config}: {claim} beta({i},{s}) expected 0, got {actual:?}"));
        }
        for (&(i, s), claim) in &expected.nonzero {
            nonzero_claims += 1;
            let actual = table.entry(i, s);
            out.check(actual != 0, || format!("{config}: {claim} beta({i},{s}) expected nonzero, got 0"));
        }
    }

    let spot = |d, i| &corpus.binary.iter().find(|(c, _)| *c == PinchConfig::binary(d, i).unwrap()).unwrap().1;
    let totals = spot(5, 1).nonzero_totals();
    out.check(totals == [1, 5, 5, 1], || format!("spot d=5, i=1: totals {totals:?}, expected [1, 5, 5, 1]"));
    let t = spot(5, 2);
    for ((i, s), v) in [((1, 2), 4), ((2, 4), 9), ((3, 5), 1), ((4, 6), 1)] {
        out.check(t.entry(i, s) == v, || format!("spot d=5, i=2: beta({i},{s}) expected {v}, got {}", t.entry(i, s)));
    }
    out.summary = format!(
        "{} tables, {known} closed values, {zero} vanishing claims, {nonzero_claims} nonvanishing claims",
        corpus.binary.len()
    );
    out
}

fn criterion_2(corpus: &Corpus) -> Outcome {
    let mut out = Outcome::new();
    let mut gorenstein = 0;
    for (config, table) in corpus.binary.iter().chain(&corpus.binary_rest).chain(&corpus.ternary) {
        let report = match classify(table) {
            Ok(r) => r,
            Err(e) => {
                out.fail(format!("{config}: {e}"));
                continue;
            }
        };
        out.check(report.is_cm == expected_cm(config), || {
            format!("{config}: isCM = {}, expected {}", report.is_cm, expected_cm(config))
        });
        if config.n() == 2 {
            let g = expected_gorenstein(config).unwrap();
            gorenstein += usize::from(report.is_gorenstein);
            out.check(report.is_gorenstein == g, || {
                format!("{config}: isGorenstein = {}, expected {g}", report.is_gorenstein)
            });
        }
    }
    let mut witnesses = 0;
    for config in corpus.ternary.iter().map(|(c, _)| c).chain(&corpus.ternary_large) {
        match witness_non_cm(config, FieldSpec::DEFAULT) {
            Ok(w) => {
                witnesses += 1;
                out.check(!expected_cm(config) && w.dim > 0, || format!("{config}: unexpected witness {w:?}"));
            }
            Err(BettiError::CohenMacaulayClass(_)) => {
                out.check(expected_cm(config), || format!("{config}: no witness for a non-CM class"))
            }
            Err(e) => out.fail(format!("{config}: {e}")),
        }
    }
    out.summary = format!(
        "{} classified tables ({gorenstein} Gorenstein), {witnesses} non-CM witnesses",
        corpus.binary.len() + corpus.binary_rest.len() + corpus.ternary.len()
    );
    out
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::new();
    let mut configs = 0;
    for n in 2..=3 {
        for d in 2..=5 {
            for config in pinches(n, d) {
                configs += 1;
                out.check(hilbert_matches_counting(&config, 12), || {
                    format!("{config}: series disagrees with counting")
                });
            }
        }
    }
    let mut numerators = 0;
    for d in 3..=10 {
        for i in 0..=d {
            let config = PinchConfig::binary(d, i).unwrap();
            numerators += 1;
            let (h, f) = (h_polynomial(&config).unwrap(), h_polynomial_formula(&config).unwrap());
            out.check(h == f, || format!("{config}: numerator {h} vs formula {f}"));
        }
    }
    out.summary = format!("{configs} series checked through degree 12d, {numerators} numerators");
    out
}

fn criterion_4(corpus: &Corpus) -> Outcome {
    let mut out = Outcome::new();
    for (config, table) in &corpus.binary {
        match k_polynomial_check(table, config) {
            Ok(ok) => out.check(ok, || format!("{config}: alternating sum differs from K-polynomial")),
            Err(e) => out.fail(format!("{config}: {e}")),
        }
    }
    out.summary = format!("{} tables", corpus.binary.len());
    out
}

fn chain_complex_failures(h: &Multidegree, c: &SquarefreeDivisorComplex) -> Vec<String> {
    let mut bad = Vec::new();
    let top = c.dimension().unwrap_or(-1);
    for k in 0..=top {
        if !boundary_matrix(c, k).mul(&boundary_matrix(c, k + 1)).is_zero() {
            bad.push(format!("h = {h}: boundary squared nonzero in dimension {k}"));
        }
    }
    let profile = reduced_homology(c, FieldSpec::DEFAULT);
    if profile.euler_characteristic() != c.reduced_euler_characteristic() {
        bad.push(format!("h = {h}: Euler characteristic mismatch"));
    }
    let support = c.vertex_support();
    if c.is_void() || support.is_empty() {
        return bad;
    }
    let dual = alexander_dual(c).expect("non-void");
    let dual_profile = reduced_homology(&dual, FieldSpec::DEFAULT);
    let v = support.len() as i32;
    if (-1..v).any(|k| profile.dim(k) != dual_profile.dim(v - k - 3)) {
        bad.push(format!("h = {h}: Alexander duality fails ({profile:?} vs {dual_profile:?})"));
    }
    if alexander_dual_over(&dual, support).face_lists() != c.face_lists() {
        bad.push(format!("h = {h}: double dual differs"));
    }
    bad
}

/// Every `h` whose complex enters a table: all elements of `H` in the scanned degrees.
fn table_degrees(config: &PinchConfig, table: &BettiTable) -> Vec<Multidegree> {
    (0..=table.s_max() as u32)
        .flat_map(|s| compositions(config.n(), s * config.d()))
        .filter(|h| config.contains_coords(h.coords()))
        .collect()
}

fn criterion_5(corpus: &Corpus) -> Outcome {
    let mut out = Outcome::new();
    let mut complexes = 0;
    for (config, table) in corpus.binary.iter().chain(&corpus.binary_rest).chain(&corpus.ternary) {
        for h in table_degrees(config, table) {
            complexes += 1;
            for f in chain_complex_failures(&h, &build_divisor_complex(&h, config)) {
                out.fail(format!("{config}: {f}"));
            }
        }
    }
    for config in &corpus.ternary_large {
        if let Ok(w) = witness_non_cm(config, FieldSpec::DEFAULT) {
            complexes += 1;
            for f in chain_complex_failures(&w.h, &build_divisor_complex(&w.h, config)) {
                out.fail(format!("{config}: {f}"));
            }
        }
    }
    out.summary = format!("{complexes} complexes");
    out
}

fn criterion_6(corpus: &Corpus) -> Outcome {
    let mut out = Outcome::new();
    let mut tables = 0;
    for (config, reference) in corpus.binary.iter().chain(&corpus.binary_rest).chain(&corpus.ternary) {
        for field in FIELDS.into_iter().filter(|&f| f != reference.field()) {
            tables += 1;
            let other = full_table(config, field);
            if nonzero(&other) == nonzero(reference) {
                continue;
            }
            let a = BettiEngine::new(config, reference.field());
            let b = BettiEngine::new(config, field);
            let offending: Vec<String> = table_degrees(config, reference)
                .into_iter()
                .filter(|h| a.profile(h) != b.profile(h))
                .map(|h| h.to_string())
                .collect();
            out.fail(format!("{config}: {} and {field} disagree at h in {offending:?}", reference.field()));
        }
    }
    for config in &corpus.ternary_large {
        let dims: Vec<_> = FIELDS.iter().map(|&f| witness_non_cm(config, f).ok().map(|w| (w.h, w.i, w.dim))).collect();
        out.check(dims.windows(2).all(|w| w[0] == w[1]), || {
            format!("{config}: witness depends on the field: {dims:?}")
        });
    }
    out.summary = format!("{tables} recomputed tables, {} witness complexes", corpus.ternary_large.len());
    out
}

fn criterion_7() -> Outcome {
    let mut out = Outcome::new();
    let mut checks = 0;
    for n in 1..=3u32 {
        for d in 1..=6u32 {
            for k in 0..d {
                checks += 1;
                match canonical_series_check(n, d, k) {
                    Ok(c) => out.check(c.holds, || format!("n={n}, d={d}, k={k}: quotient is not a monomial")),
                    Err(e) => out.fail(format!("n={n}, d={d}, k={k}: {e}")),
                }
                let t = canonical_partner(n, d, k).unwrap();
                out.check((n + k + t).is_multiple_of(d), || {
                    format!("n={n}, d={d}, k={k}: partner {t} is not -n-k mod d")
                });
                out.check(canonical_partner(n, d, t).unwrap() == k, || {
                    format!("n={n}, d={d}, k={k}: partner is not an involution")
                });
            }
        }
    }
    out.summary = format!("{checks} modules");
    out
}

fn criterion_8() -> Outcome {
    let mut out = Outcome::new();
    let mut points = 0u64;
    let mut configs = 0;
    for n in [2usize, 3] {
        for d in 2..=6u32 {
            for config in pinches(n, d) {
                configs += 1;
                let mut oracle = BruteForceOracle::new(&config, 8 * d);
                for total in 0..=8 * d {
                    for h in compositions(n, total) {
                        points += 1;
                        let closed = is_member_closed(&h, &config);
                        let brute = oracle.contains(&h);
                        out.check(closed.is_ok() && closed == brute, || {
                            format!("{config}: h = {h}: closed {closed:?}, brute force {brute:?}")
                        });
                    }
                }
            }
        }
    }
    out.summary = format!("{configs} configurations, {points} points");
    out
}

fn report(number: usize, title: &str, started: Instant, outcome: Outcome) -> bool {
    let ok = outcome.failures.is_empty();
    let status = if ok { "PASS" } else { "FAIL" };
    println!("{status} criterion {number} ({title}): {} [{:.2}s]", outcome.summary, started.elapsed().as_secs_f64());
    for f in outcome.failures.iter().take(MAX_DETAILS) {
        println!("    {f}");
    }
    if outcome.failures.len() > MAX_DETAILS {
        println!("    ... {} more", outcome.failures.len() - MAX_DETAILS);
    }
    ok
}

fn main() -> ExitCode {
    let started = Instant::now();
    let corpus = build_corpus();
    println!(
        "computed {} tables in {:.2}s",
        corpus.binary.len() + corpus.binary_rest.len() + corpus.ternary.len(),
        started.elapsed().as_secs_f64()
    );

    let mut all = true;
    let t = Instant::now();
    all &= report(1, "closed Betti formulas", t, criterion_1(&corpus));
    let t = Instant::now();
    all &= report(2, "CM and Gorenstein classification", t, criterion_2(&corpus));
    let t = Instant::now();
    all &= report(3, "Hilbert series", t, criterion_3());
    let t = Instant::now();
    all &= report(4, "K-polynomial identity", t, criterion_4(&corpus));
    let t = Instant::now();
    all &= report(5, "chain complexes and duality", t, criterion_5(&corpus));
    let t = Instant::now();
    all &= report(6, "cross-field agreement", t, criterion_6(&corpus));
    let t = Instant::now();
    all &= report(7, "canonical modules", t, criterion_7());
    let t = Instant::now();
    all &= report(8, "membership oracles", t, criterion_8());

    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
