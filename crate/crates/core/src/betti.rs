//! Graded Betti tables from divisor-complex homology, and the invariants read off them.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::homology::{build_divisor_complex_in, fast_reduced_homology, FieldSpec, HomologyProfile};
use crate::semigroup::{compositions, enumerate_degree, Multidegree, PinchClass, PinchConfig, PinchedSemigroup};

/// Default cap on `complexes × 2^{N-1}` for a single run.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BettiError {
    #[error("refusing to run: estimated cost {estimate} exceeds the budget {budget} ({complexes} complexes on {ground} vertices)")]
    ResourceRefused { estimate: u64, budget: u64, complexes: u64, ground: usize },
    #[error("invalid scan range: {0}")]
    Range(String),
    #[error("table cannot be certified: {0}")]
    Uncertified(String),
    #[error("{0} is Cohen-Macaulay; there is no non-CM witness")]
    CohenMacaulayClass(String),
    #[error("thread pool: {0}")]
    Pool(String),
}

/// Storage for homology profiles keyed by the multidegree they were computed for.
pub trait ProfileCache: Sync {
    fn get(&self, h: &Multidegree) -> Option<HomologyProfile>;
    fn put(&self, h: &Multidegree, profile: &HomologyProfile);
}

/// Betti numbers `β_{i,s}` (internal degree `s·d`) for `0 <= i <= i_max`,
/// `0 <= s <= s_max`; zeros inside the range are stored explicitly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    config: PinchConfig,
    field: FieldSpec,
    i_max: usize,
    s_max: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn config(&self) -> &PinchConfig {
        &self.config
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn i_max(&self) -> usize {
        self.i_max
    }

    pub fn s_max(&self) -> usize {
        self.s_max
    }

    pub fn entries(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.entries
    }

    /// `β_{i,s}`; `None` outside the scanned range.
    pub fn get(&self, i: usize, s: usize) -> Option<u64> {
        self.entries.get(&(i, s)).copied()
    }

    /// `β_{i,s}`, zero outside the scanned range.
    pub fn entry(&self, i: usize, s: usize) -> u64 {
        self.get(i, s).unwrap_or(0)
    }

    /// Overwrites one entry inside the scanned range.
    pub fn set_entry(&mut self, i: usize, s: usize, value: u64) {
        assert!(i <= self.i_max && s <= self.s_max, "({i}, {s}) outside the scanned range");
        self.entries.insert((i, s), value);
    }

    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().filter(|(_, &v)| v != 0).map(|(&k, &v)| (k, v))
    }

    /// `β_i = Σ_s β_{i,s}` for `i = 0..=i_max`.
    pub fn totals(&self) -> Vec<u64> {
        let mut t = vec![0; self.i_max + 1];
        for (&(i, _), &v) in &self.entries {
            t[i] += v;
        }
        t
    }

    /// Totals up to the last nonzero one.
    pub fn nonzero_totals(&self) -> Vec<u64> {
        let mut t = self.totals();
        while t.last() == Some(&0) {
            t.pop();
        }
        t
    }

    /// Rows below which every scanned entry must vanish: `s - i >= s_max - i_max`.
    pub fn guard_row(&self) -> usize {
        self.s_max - self.i_max
    }

    /// `Ok` when the scan covers every homological degree that can occur
    /// (`i_max >= N - 2`) and every entry in the guard rows is zero.
    pub fn certification(&self) -> Result<(), String> {
        let top = self.config.veronese_size() - 2;
        if self.i_max < top {
            return Err(format!("scan stops at i = {} but projective dimension can reach {top}", self.i_max));
        }
        let guard = self.guard_row();
        if let Some(((i, s), v)) = self.nonzero().find(|&((i, s), _)| s >= i + guard) {
            return Err(format!("guard entry beta({i},{s}) = {v} is nonzero; raise s_max"));
        }
        Ok(())
    }

    pub fn is_certified(&self) -> bool {
        self.certification().is_ok()
    }

    /// Macaulay-style rows: `rows[r][i] = β_{i, i+r}` for `r = 0..=max row`.
    pub fn macaulay_rows(&self) -> Vec<Vec<u64>> {
        let top = self.nonzero().map(|((i, s), _)| s.saturating_sub(i)).max().unwrap_or(0);
        (0..=top).map(|r| (0..=self.i_max).map(|i| self.entry(i, i + r)).collect()).collect()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Range {
            i_max: usize,
            s_max: usize,
        }
        let entries: Vec<[u64; 3]> = self.entries.iter().map(|(&(i, s), &v)| [i as u64, s as u64, v]).collect();
        let mut st = s.serialize_struct("BettiTable", 6)?;
        st.serialize_field("config", &self.config)?;
        st.serialize_field("field", &self.field)?;
        st.serialize_field("scanned_range", &Range { i_max: self.i_max, s_max: self.s_max })?;
        st.serialize_field("certified", &self.is_certified())?;
        st.serialize_field("totals", &self.totals())?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub pdim: usize,
    pub depth: usize,
    pub krull_dim: usize,
    pub is_cm: bool,
    pub is_gorenstein: bool,
    /// Largest `p <= pdim` with `β_{i,s} = 0` for all `0 < i <= p`, `s != i + 1`.
    pub linearity_index: usize,
    /// First entry off the linear strand, by homological then internal degree.
    pub first_nonlinear: Option<(usize, usize)>,
    pub observed_regularity: usize,
    /// Whether `β_i = β_{pdim - i}` for all `i`.
    pub symmetric_totals: bool,
}

/// Reads projective dimension, depth, CM, Gorenstein and linearity data off a certified table.
pub fn classify(table: &BettiTable) -> Result<ClassificationReport, BettiError> {
    table.certification().map_err(BettiError::Uncertified)?;
    let config = table.config();
    let pdim = table.nonzero().map(|((i, _), _)| i).max().unwrap_or(0);
    let depth = (config.veronese_size() - 1) - pdim;
    let krull_dim = config.n();
    let is_cm = depth == krull_dim;
    let totals = table.totals();
    let symmetric_totals = (0..=pdim).all(|i| totals[i] == totals[pdim - i]);
    let first_nonlinear = table.nonzero().find(|&((i, s), _)| i > 0 && s != i + 1).map(|(k, _)| k);
    let linearity_index = match first_nonlinear {
        Some((i, _)) => (i - 1).min(pdim),
        None => pdim,
    };
    Ok(ClassificationReport {
        pdim,
        depth,
        krull_dim,
        is_cm,
        is_gorenstein: is_cm && totals[pdim] == 1,
        linearity_index,
        first_nonlinear,
        observed_regularity: table.nonzero().map(|((i, s), _)| s.saturating_sub(i)).max().unwrap_or(0),
        symmetric_totals,
    })
}

/// Cost model used by the resource guard: one unit per potential face.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ResourceEstimate {
    pub complexes: u64,
    pub ground: usize,
    pub estimate: u64,
}

pub fn estimate_table(config: &PinchConfig, s_max: usize) -> ResourceEstimate {
    let complexes: u64 = (0..=s_max as u32)
        .map(|s| {
            compositions(config.n(), s * config.d()).iter().filter(|h| config.contains_coords(h.coords())).count()
                as u64
        })
        .sum();
    let ground = config.num_generators();
    let estimate = complexes.saturating_mul(1u64.checked_shl(ground as u32).unwrap_or(u64::MAX));
    ResourceEstimate { complexes, ground, estimate }
}

/// Computes Betti tables, optionally in parallel and through a profile cache.
pub struct BettiEngine<'a> {
    config: PinchConfig,
    semigroup: PinchedSemigroup,
    field: FieldSpec,
    jobs: usize,
    budget: u64,
    cache: Option<&'a dyn ProfileCache>,
}

impl<'a> BettiEngine<'a> {
    pub fn new(config: &PinchConfig, field: FieldSpec) -> Self {
        Self {
            semigroup: config.semigroup(),
            config: config.clone(),
            field,
            jobs: 0,
            budget: DEFAULT_BUDGET,
            cache: None,
        }
    }

    /// Worker threads; `0` uses the global pool.
    pub fn jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs;
        self
    }

    pub fn budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn cache(mut self, cache: &'a dyn ProfileCache) -> Self {
        self.cache = Some(cache);
        self
    }

    pub fn config(&self) -> &PinchConfig {
        &self.config
    }

    /// Reduced homology of `Δ_h`, through the cache when one is attached.
    pub fn profile(&self, h: &Multidegree) -> HomologyProfile {
        if let Some(p) = self.cache.and_then(|c| c.get(h)) {
            return p;
        }
        let complex = build_divisor_complex_in(h, &self.semigroup);
        let p = fast_reduced_homology(&complex, self.field);
        if let Some(c) = self.cache {
            c.put(h, &p);
        }
        p
    }

    fn run<T: Send>(&self, work: impl FnOnce() -> T + Send) -> Result<T, BettiError> {
        if self.jobs == 0 {
            return Ok(work());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.jobs)
            .build()
            .map_err(|e| BettiError::Pool(e.to_string()))?;
        Ok(pool.install(work))
    }

    /// Profiles for every `h` in the given list, in the same order.
    fn profiles(&self, hs: &[Multidegree]) -> Result<Vec<HomologyProfile>, BettiError> {
        self.run(|| hs.par_iter().map(|h| self.profile(h)).collect())
    }

    fn check_budget(&self, s_max: usize) -> Result<(), BettiError> {
        let est = estimate_table(&self.config, s_max);
        if est.estimate > self.budget {
            return Err(BettiError::ResourceRefused {
                estimate: est.estimate,
                budget: self.budget,
                complexes: est.complexes,
                ground: est.ground,
            });
        }
        Ok(())
    }

    /// `β_{i,s} = Σ_{|h| = s d} dim H̃_{i-1}(Δ_h)` over the range `i <= i_max`, `s <= s_max`.
    pub fn graded_betti(&self, i_max: usize, s_max: usize) -> Result<BettiTable, BettiError> {
        let top = self.config.veronese_size() - 2;
        if i_max > top {
            return Err(BettiError::Range(format!("i_max = {i_max} exceeds N - 2 = {top}")));
        }
        if s_max < i_max + 1 {
            return Err(BettiError::Range(format!("s_max = {s_max} must be at least i_max + 1 = {}", i_max + 1)));
        }
        self.check_budget(s_max)?;

        let mut hs = Vec::new();
        let mut degree_of = Vec::new();
        for s in 0..=s_max {
            for h in enumerate_degree(&self.config, s as u32) {
                hs.push(h);
                degree_of.push(s);
            }
        }
        let profiles = self.profiles(&hs)?;

        let mut entries: BTreeMap<(usize, usize), u64> =
            (0..=i_max).flat_map(|i| (0..=s_max).map(move |s| ((i, s), 0))).collect();
        for (s, p) in degree_of.into_iter().zip(&profiles) {
            for (&k, &v) in p.dims() {
                let i = (k + 1) as usize;
                if i <= i_max {
                    *entries.get_mut(&(i, s)).expect("in range") += v;
                }
            }
        }
        Ok(BettiTable { config: self.config.clone(), field: self.field, i_max, s_max, entries })
    }

    /// The full table with `i_max = N - 2` and `s_max = i_max + 3`.
    pub fn full_table(&self) -> Result<BettiTable, BettiError> {
        let i_max = self.config.veronese_size() - 2;
        self.graded_betti(i_max, i_max + 3)
    }

    /// Nonzero `β_{i,h}` for `|h| = t d`.
    pub fn multigraded_betti(&self, i: usize, t: u32) -> Result<BTreeMap<Multidegree, u64>, BettiError> {
        let hs = enumerate_degree(&self.config, t);
        let ground = self.config.num_generators();
        let est = (hs.len() as u64).saturating_mul(1u64.checked_shl(ground as u32).unwrap_or(u64::MAX));
        if est > self.budget {
            return Err(BettiError::ResourceRefused {
                estimate: est,
                budget: self.budget,
                complexes: hs.len() as u64,
                ground,
            });
        }
        let profiles = self.profiles(&hs)?;
        Ok(hs.into_iter().zip(profiles).map(|(h, p)| (h, p.dim(i as i32 - 1))).filter(|&(_, v)| v != 0).collect())
    }
}

/// Betti table over `field` in the given range, with the default engine settings.
pub fn graded_betti(
    config: &PinchConfig,
    field: FieldSpec,
    i_max: usize,
    s_max: usize,
) -> Result<BettiTable, BettiError> {
    BettiEngine::new(config, field).graded_betti(i_max, s_max)
}

/// Per-multidegree Betti numbers `β_{i,h}` with `|h| = t d` (zeros omitted).
pub fn multigraded_betti(
    config: &PinchConfig,
    field: FieldSpec,
    i: usize,
    t: u32,
) -> Result<BTreeMap<Multidegree, u64>, BettiError> {
    BettiEngine::new(config, field).multigraded_betti(i, t)
}

/// A single multidegree whose divisor complex has homology in a degree that
/// forces projective dimension above `N - n - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonCmWitness {
    pub h: Multidegree,
    /// Homological degree `i` with `β_{i,h} = dim H̃_{i-1}(Δ_h) > 0`.
    pub i: usize,
    pub dim: u64,
}

/// The explicit multidegree certifying failure of the Cohen–Macaulay property:
///
/// * `max m = d - 1`, `n > 2`: `h = m + (N - n + 1` generators in descending
///   lexicographic order avoiding the corner next to `m)`, homology at `i = N - n`;
/// * `max m < d - 1`: `h = Σ A_{n,d}`, whose complex is the boundary of a simplex, at `i = N - 2`.
pub fn witness_non_cm(config: &PinchConfig, field: FieldSpec) -> Result<NonCmWitness, BettiError> {
    let n = config.n();
    let big_n = config.veronese_size();
    let gens = config.generators();
    let (h, i) = match config.class() {
        PinchClass::MaxDMinus1 if n > 2 => {
            let (p, _) = config.near_corner_positions().expect("class checked");
            let mut corner = vec![0; n];
            corner[p] = config.d();
            let corner = Multidegree::new(corner);
            let h = gens
                .iter()
                .filter(|a| **a != corner)
                .take(big_n - n + 1)
                .fold(config.pinch().clone(), |acc, a| &acc + a);
            (h, big_n - n)
        }
        PinchClass::Interior => {
            let h = compositions(n, config.d()).iter().fold(Multidegree::zero(n), |acc, a| &acc + a);
            (h, big_n - 2)
        }
        _ => return Err(BettiError::CohenMacaulayClass(config.to_string())),
    };
    let dim = BettiEngine::new(config, field).profile(&h).dim(i as i32 - 1);
    Ok(NonCmWitness { h, i, dim })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(d: u32, i: u32) -> BettiTable {
        BettiEngine::new(&PinchConfig::binary(d, i).unwrap(), FieldSpec::DEFAULT).full_table().unwrap()
    }

    #[test]
    fn small_tables() {
        let t = table(4, 0);
        assert_eq!(t.nonzero_totals(), vec![1, 3, 2]);
        assert_eq!(t.entry(1, 2), 3);
        assert_eq!(t.entry(2, 3), 2);
        assert_eq!(table(5, 1).nonzero_totals(), vec![1, 5, 5, 1]);

        let t = table(5, 2);
        let expected: BTreeMap<(usize, usize), u64> =
            [((0, 0), 1), ((1, 2), 4), ((1, 3), 1), ((2, 3), 2), ((2, 4), 6), ((3, 5), 5), ((4, 6), 1)].into();
        assert_eq!(t.nonzero().collect::<BTreeMap<_, _>>(), expected);
        assert!(t.is_certified());
        assert_eq!(t.get(0, 0), Some(1));
        assert_eq!(t.get(3, 1), Some(0));
    }

    #[test]
    fn classification() {
        let r = classify(&table(5, 1)).unwrap();
        assert!(r.is_cm && r.is_gorenstein);
        assert_eq!((r.pdim, r.depth), (3, 2));
        assert_eq!(r.linearity_index, 2);

        let r = classify(&table(5, 2)).unwrap();
        assert!(!r.is_cm);
        assert_eq!((r.pdim, r.depth), (4, 1));
        assert_eq!(r.first_nonlinear, Some((1, 3)));
        assert_eq!(r.observed_regularity, 2);

        let r = classify(&table(6, 0)).unwrap();
        assert!(r.is_cm && !r.is_gorenstein);
        assert_eq!(r.linearity_index, r.pdim);
        assert_eq!(r.observed_regularity, 1);
    }

    #[test]
    fn certification_catches_short_scans() {
        let config = PinchConfig::binary(5, 2).unwrap();
        let short = graded_betti(&config, FieldSpec::DEFAULT, 3, 6).unwrap();
        assert!(classify(&short).is_err());
        let tight = graded_betti(&config, FieldSpec::DEFAULT, 4, 5).unwrap();
        assert!(matches!(classify(&tight), Err(BettiError::Uncertified(_))));
        assert!(graded_betti(&config, FieldSpec::DEFAULT, 5, 8).is_err());
        assert!(graded_betti(&config, FieldSpec::DEFAULT, 4, 4).is_err());
    }

    #[test]
    fn multigraded_examples() {
        let config = PinchConfig::binary(5, 2).unwrap();
        let m = multigraded_betti(&config, FieldSpec::DEFAULT, 0, 0).unwrap();
        assert_eq!(m, [(Multidegree::zero(2), 1)].into());
        let sum = Multidegree::new(vec![15, 15]);
        let m = multigraded_betti(&config, FieldSpec::DEFAULT, 4, 6).unwrap();
        assert_eq!(m, [(sum, 1)].into());
        let m = multigraded_betti(&config, FieldSpec::DEFAULT, 3, 5).unwrap();
        assert_eq!(m.values().sum::<u64>(), table(5, 2).entry(3, 5));
    }

    #[test]
    fn witnesses() {
        let w = witness_non_cm(&PinchConfig::from_pinch(&[2, 1, 0]).unwrap(), FieldSpec::DEFAULT).unwrap();
        assert_eq!(w.i, 7);
        assert_eq!(w.h.total(), 27);
        assert!(w.dim > 0);
        let w = witness_non_cm(&PinchConfig::binary(6, 3).unwrap(), FieldSpec::DEFAULT).unwrap();
        assert_eq!((w.i, w.dim), (5, 1));
        assert_eq!(w.h, Multidegree::new(vec![21, 21]));
        assert!(witness_non_cm(&PinchConfig::binary(5, 4).unwrap(), FieldSpec::DEFAULT).is_err());
    }

    #[test]
    fn budget_refusal() {
        let config = PinchConfig::from_pinch(&[2, 1, 1]).unwrap();
        let err = BettiEngine::new(&config, FieldSpec::DEFAULT).full_table().unwrap_err();
        assert!(matches!(err, BettiError::ResourceRefused { .. }));
    }
}
