//! Multidegrees, generator sets and membership in pinched Veronese semigroups.
//!
//! The semigroup `H` of a configuration `(n, d, m)` is generated by every exponent
//! vector of total degree `d` in `n` variables except `m`. Membership has a closed
//! form that depends only on how large the biggest coordinate of `m` is; the
//! [`BruteForceOracle`] decides the same question by dynamic programming over
//! sums of generators and is kept independent of the closed form.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("need at least two variables, got n = {0}")]
    TooFewVariables(usize),
    #[error("Veronese degree must be at least 2, got d = {0}")]
    DegreeTooSmall(u32),
    #[error("expected a vector with {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("pinched generator {m} has total degree {total}, expected {d}")]
    WrongDegree { m: Multidegree, total: u32, d: u32 },
    #[error("pinch {0} is degenerate: at d = 2 two coordinates attain d - 1 and the pinched semigroup has no closed membership rule")]
    DegenerateQuadric(Multidegree),
    #[error("pinch index {i} is out of range 0..={d}")]
    PinchIndex { i: u32, d: u32 },
    #[error("total degree {total} exceeds the brute-force bound {bound}")]
    BoundExceeded { total: u32, bound: u32 },
    #[error("cannot parse multidegree from {0:?}")]
    Parse(String),
}

/// An exponent vector in `N^n` together with its total degree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "Vec<u32>", from = "Vec<u32>")]
pub struct Multidegree {
    coords: Vec<u32>,
    total: u32,
}

impl Multidegree {
    pub fn new(coords: Vec<u32>) -> Self {
        let total = coords.iter().sum();
        Self { coords, total }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(vec![0; n])
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn max_coord(&self) -> u32 {
        self.coords.iter().copied().max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.total == 0
    }

    /// Componentwise difference, `None` when a coordinate would go negative.
    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        debug_assert_eq!(self.len(), other.len());
        let coords =
            self.coords.iter().zip(&other.coords).map(|(a, b)| a.checked_sub(*b)).collect::<Option<Vec<_>>>()?;
        Some(Self::new(coords))
    }

    pub fn scaled(&self, k: u32) -> Multidegree {
        Self::new(self.coords.iter().map(|c| c * k).collect())
    }

    /// Reorders coordinates: the `j`-th coordinate of the result is `self[perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Multidegree {
        Self::new(perm.iter().map(|&j| self.coords[j]).collect())
    }

    pub fn reversed(&self) -> Multidegree {
        Self::new(self.coords.iter().rev().copied().collect())
    }
}

impl std::ops::Add for &Multidegree {
    type Output = Multidegree;

    fn add(self, rhs: &Multidegree) -> Multidegree {
        debug_assert_eq!(self.len(), rhs.len());
        Multidegree::new(self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect())
    }
}

impl From<Vec<u32>> for Multidegree {
    fn from(coords: Vec<u32>) -> Self {
        Self::new(coords)
    }
}

impl From<Multidegree> for Vec<u32> {
    fn from(m: Multidegree) -> Self {
        m.coords
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Multidegree {
    type Err = SemigroupError;

    /// Accepts `3,1,0` as well as `(3,1,0)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        if inner.trim().is_empty() {
            return Err(SemigroupError::Parse(s.to_string()));
        }
        inner
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map(Multidegree::new)
            .map_err(|_| SemigroupError::Parse(s.to_string()))
    }
}

/// All compositions of `total` into `n` non-negative parts, in descending
/// lexicographic order (`(total,0,..,0)` first).
pub fn compositions(n: usize, total: u32) -> Vec<Multidegree> {
    fn rec(n: usize, total: u32, prefix: &mut Vec<u32>, out: &mut Vec<Multidegree>) {
        if n == 1 {
            prefix.push(total);
            out.push(Multidegree::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for a in (0..=total).rev() {
            prefix.push(a);
            rec(n - 1, total - a, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if total == 0 {
            out.push(Multidegree::new(Vec::new()));
        }
        return out;
    }
    rec(n, total, &mut Vec::with_capacity(n), &mut out);
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * u128::from(n - j) / u128::from(j + 1);
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Size of the largest coordinate of the pinch relative to `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PinchClass {
    /// `max m = d`.
    MaxD,
    /// `max m = d - 1`.
    MaxDMinus1,
    /// `max m < d - 1`.
    Interior,
}

impl fmt::Display for PinchClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PinchClass::MaxD => "max-d",
            PinchClass::MaxDMinus1 => "max-d-minus-1",
            PinchClass::Interior => "interior",
        })
    }
}

/// The data `(n, d, m)` defining the pinched Veronese ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PinchConfig {
    n: usize,
    d: u32,
    m: Multidegree,
    class: PinchClass,
}

/// Coordinate permutation that sorts the pinch in descending order (ties by index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalization {
    pub perm: Vec<usize>,
    pub pinch: Multidegree,
}

impl Normalization {
    pub fn apply(&self, h: &Multidegree) -> Multidegree {
        h.permuted(&self.perm)
    }
}

impl PinchConfig {
    pub fn new(n: usize, d: u32, m: Multidegree) -> Result<Self, SemigroupError> {
        if n < 2 {
            return Err(SemigroupError::TooFewVariables(n));
        }
        if d < 2 {
            return Err(SemigroupError::DegreeTooSmall(d));
        }
        if m.len() != n {
            return Err(SemigroupError::DimensionMismatch { expected: n, got: m.len() });
        }
        if m.total() != d {
            return Err(SemigroupError::WrongDegree { total: m.total(), m, d });
        }
        let max = m.max_coord();
        let class = if max == d {
            PinchClass::MaxD
        } else if max == d - 1 {
            if m.coords().iter().filter(|&&c| c == d - 1).count() > 1 {
                return Err(SemigroupError::DegenerateQuadric(m));
            }
            PinchClass::MaxDMinus1
        } else {
            PinchClass::Interior
        };
        Ok(Self { n, d, m, class })
    }

    /// Two variables pinched at `m_i = (i, d - i)`.
    pub fn binary(d: u32, i: u32) -> Result<Self, SemigroupError> {
        if i > d {
            return Err(SemigroupError::PinchIndex { i, d });
        }
        Self::new(2, d, Multidegree::new(vec![i, d - i]))
    }

    /// Infers `n` and `d` from the coordinates of the pinch.
    pub fn from_pinch(m: &[u32]) -> Result<Self, SemigroupError> {
        let m = Multidegree::new(m.to_vec());
        Self::new(m.len(), m.total(), m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn pinch(&self) -> &Multidegree {
        &self.m
    }

    pub fn class(&self) -> PinchClass {
        self.class
    }

    /// `N = binom(n + d - 1, d)`, the number of degree-`d` monomials.
    pub fn veronese_size(&self) -> usize {
        binomial(self.n as u64 + u64::from(self.d) - 1, u64::from(self.d)) as usize
    }

    /// Number of generators of the pinched semigroup, `N - 1`.
    pub fn num_generators(&self) -> usize {
        self.veronese_size() - 1
    }

    pub fn normalization(&self) -> Normalization {
        let mut perm: Vec<usize> = (0..self.n).collect();
        perm.sort_by_key(|&j| (std::cmp::Reverse(self.m.coords()[j]), j));
        Normalization { pinch: self.m.permuted(&perm), perm }
    }

    /// The same ring with the coordinate order reversed, `(i, d - i) -> (d - i, i)` for `n = 2`.
    pub fn reversed(&self) -> Self {
        Self { n: self.n, d: self.d, m: self.m.reversed(), class: self.class }
    }

    /// Position of the largest coordinate of `m` (unique except for `Interior`).
    fn top_position(&self) -> usize {
        let max = self.m.max_coord();
        self.m.coords().iter().position(|&c| c == max).expect("non-empty pinch")
    }

    /// For `MaxDMinus1`: positions `(p, r)` with `m_p = d - 1`, `m_r = 1`.
    pub fn near_corner_positions(&self) -> Option<(usize, usize)> {
        if self.class != PinchClass::MaxDMinus1 {
            return None;
        }
        let p = self.top_position();
        let r = self.m.coords().iter().enumerate().position(|(j, &c)| j != p && c == 1)?;
        Some((p, r))
    }

    /// For `MaxD`: the position holding `d`.
    pub fn corner_position(&self) -> Option<usize> {
        (self.class == PinchClass::MaxD).then(|| self.top_position())
    }

    pub fn generators(&self) -> GeneratorSet {
        GeneratorSet::new(self)
    }

    pub fn semigroup(&self) -> PinchedSemigroup {
        PinchedSemigroup { config: self.clone(), generators: self.generators() }
    }

    /// Closed-form membership on raw coordinates; the length must be `n`.
    pub fn contains_coords(&self, h: &[u32]) -> bool {
        debug_assert_eq!(h.len(), self.n);
        let total: u32 = h.iter().sum();
        if total == 0 {
            return true;
        }
        if !total.is_multiple_of(self.d) {
            return false;
        }
        let t = total / self.d;
        match self.class {
            PinchClass::MaxD => {
                let p = self.top_position();
                total - h[p] >= t
            }
            PinchClass::MaxDMinus1 => {
                let (p, r) = self.near_corner_positions().expect("class checked");
                let missing = h.iter().enumerate().all(|(j, &c)| {
                    if j == p {
                        c == total - 1
                    } else if j == r {
                        c == 1
                    } else {
                        c == 0
                    }
                });
                !missing
            }
            PinchClass::Interior => h != self.m.coords(),
        }
    }
}

impl fmt::Display for PinchConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P(n={}, d={}, m={})", self.n, self.d, self.m)
    }
}

impl Serialize for PinchConfig {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PinchConfig", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("d", &self.d)?;
        st.serialize_field("m", &self.m)?;
        st.serialize_field("class", &self.class.to_string())?;
        st.end()
    }
}

/// `A_{n,d}` without the pinch, in descending lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    gens: Vec<Multidegree>,
    veronese_size: usize,
}

impl GeneratorSet {
    fn new(config: &PinchConfig) -> Self {
        let all = compositions(config.n, config.d);
        let veronese_size = all.len();
        let gens = all.into_iter().filter(|a| a != &config.m).collect();
        Self { gens, veronese_size }
    }

    pub fn as_slice(&self) -> &[Multidegree] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn veronese_size(&self) -> usize {
        self.veronese_size
    }

    pub fn index_of(&self, a: &Multidegree) -> Option<usize> {
        self.gens.iter().position(|g| g == a)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Multidegree> {
        self.gens.iter()
    }
}

/// Generates all compositions of `d` except `m` for the given configuration.
pub fn generate_generators(config: &PinchConfig) -> GeneratorSet {
    config.generators()
}

/// A finitely generated subsemigroup of `N^n` with a membership test.
pub trait AffineSemigroup: Sync {
    fn ambient_dim(&self) -> usize;
    fn generators(&self) -> &[Multidegree];
    fn contains(&self, h: &[u32]) -> bool;
}

#[derive(Debug, Clone)]
pub struct PinchedSemigroup {
    config: PinchConfig,
    generators: GeneratorSet,
}

impl PinchedSemigroup {
    pub fn config(&self) -> &PinchConfig {
        &self.config
    }

    pub fn generator_set(&self) -> &GeneratorSet {
        &self.generators
    }
}

impl AffineSemigroup for PinchedSemigroup {
    fn ambient_dim(&self) -> usize {
        self.config.n
    }

    fn generators(&self) -> &[Multidegree] {
        self.generators.as_slice()
    }

    fn contains(&self, h: &[u32]) -> bool {
        self.config.contains_coords(h)
    }
}

/// The full Veronese semigroup generated by `A_{n,d}`.
#[derive(Debug, Clone)]
pub struct VeroneseSemigroup {
    n: usize,
    d: u32,
    gens: Vec<Multidegree>,
}

impl VeroneseSemigroup {
    pub fn new(n: usize, d: u32) -> Self {
        Self { n, d, gens: compositions(n, d) }
    }
}

impl AffineSemigroup for VeroneseSemigroup {
    fn ambient_dim(&self) -> usize {
        self.n
    }

    fn generators(&self) -> &[Multidegree] {
        &self.gens
    }

    fn contains(&self, h: &[u32]) -> bool {
        h.iter().sum::<u32>() % self.d == 0
    }
}

pub fn is_member_closed(h: &Multidegree, config: &PinchConfig) -> Result<bool, SemigroupError> {
    if h.len() != config.n {
        return Err(SemigroupError::DimensionMismatch { expected: config.n, got: h.len() });
    }
    Ok(config.contains_coords(h.coords()))
}

/// Membership by exhaustive decomposition into generators, memoized on the
/// remaining exponent vector. The memo table is owned by the oracle, so reuse
/// one instance across many queries for the same configuration.
#[derive(Debug)]
pub struct BruteForceOracle {
    n: usize,
    d: u32,
    gens: Vec<Vec<u32>>,
    bound: u32,
    memo: HashMap<Vec<u32>, bool>,
}

impl BruteForceOracle {
    /// `bound` caps the total degree of queries.
    pub fn new(config: &PinchConfig, bound: u32) -> Self {
        let gens = config.generators().iter().map(|g| g.coords().to_vec()).collect();
        Self { n: config.n, d: config.d, gens, bound, memo: HashMap::new() }
    }

    pub fn contains(&mut self, h: &Multidegree) -> Result<bool, SemigroupError> {
        if h.len() != self.n {
            return Err(SemigroupError::DimensionMismatch { expected: self.n, got: h.len() });
        }
        if h.total() > self.bound {
            return Err(SemigroupError::BoundExceeded { total: h.total(), bound: self.bound });
        }
        Ok(self.decide(h.coords()))
    }

    fn decide(&mut self, h: &[u32]) -> bool {
        let total: u32 = h.iter().sum();
        if total == 0 {
            return true;
        }
        if !total.is_multiple_of(self.d) {
            return false;
        }
        if let Some(&known) = self.memo.get(h) {
            return known;
        }
        let mut found = false;
        let mut rest = vec![0u32; h.len()];
        for k in 0..self.gens.len() {
            let fits = h.iter().zip(&self.gens[k]).all(|(a, b)| a >= b);
            if !fits {
                continue;
            }
            for (j, slot) in rest.iter_mut().enumerate() {
                *slot = h[j] - self.gens[k][j];
            }
            if self.decide(&rest) {
                found = true;
                break;
            }
        }
        self.memo.insert(h.to_vec(), found);
        found
    }
}

/// One-shot brute-force membership with a fresh memo table.
pub fn is_member_bruteforce(h: &Multidegree, config: &PinchConfig, bound: u32) -> Result<bool, SemigroupError> {
    BruteForceOracle::new(config, bound).contains(h)
}

/// Elements of `H` of total degree `t * d`, in descending lexicographic order.
pub fn enumerate_degree(config: &PinchConfig, t: u32) -> Vec<Multidegree> {
    compositions(config.n, t * config.d).into_iter().filter(|h| config.contains_coords(h.coords())).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormalityWitness {
    pub z: Multidegree,
    pub multiplier: u32,
}

/// Searches for `z` outside `H` with `k z` inside `H`, for `|z| <= degree_bound * d`
/// and `2 <= k <= multiplier_bound`. Only refutes normality: `None` is not a proof.
///
/// Elements of the group generated by `H` with a negative coordinate can never
/// have a multiple in `H`, so only `z` in `N^n` with `|z| = 0 mod d` are visited.
pub fn normality_probe(config: &PinchConfig, degree_bound: u32, multiplier_bound: u32) -> Option<NormalityWitness> {
    for t in 1..=degree_bound {
        for z in compositions(config.n, t * config.d) {
            if config.contains_coords(z.coords()) {
                continue;
            }
            for k in 2..=multiplier_bound {
                if config.contains_coords(z.scaled(k).coords()) {
                    return Some(NormalityWitness { z, multiplier: k });
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(c: &[u32]) -> Multidegree {
        Multidegree::new(c.to_vec())
    }

    fn cfg(m: &[u32]) -> PinchConfig {
        PinchConfig::from_pinch(m).unwrap()
    }

    #[test]
    fn generators_small_cases() {
        let g = cfg(&[3, 0]).generators();
        assert_eq!(g.as_slice(), &[md(&[2, 1]), md(&[1, 2]), md(&[0, 3])]);

        let g = cfg(&[2, 3]).generators();
        assert_eq!(g.len(), 5);
        assert!(g.index_of(&md(&[2, 3])).is_none());

        let g = cfg(&[1, 1, 1]).generators();
        assert_eq!(g.veronese_size(), 10);
        assert_eq!(g.len(), 9);
    }

    #[test]
    fn config_validation() {
        assert!(matches!(PinchConfig::new(2, 3, md(&[2, 2])), Err(SemigroupError::WrongDegree { .. })));
        assert!(matches!(PinchConfig::new(3, 3, md(&[2, 1])), Err(SemigroupError::DimensionMismatch { .. })));
        assert!(matches!(PinchConfig::new(1, 3, md(&[3])), Err(SemigroupError::TooFewVariables(1))));
        assert!(matches!(PinchConfig::new(2, 2, md(&[1, 1])), Err(SemigroupError::DegenerateQuadric(_))));
        assert_eq!(cfg(&[2, 0]).class(), PinchClass::MaxD);
        assert_eq!(cfg(&[4, 1]).class(), PinchClass::MaxDMinus1);
        assert_eq!(cfg(&[2, 3]).class(), PinchClass::Interior);
        assert_eq!(cfg(&[1, 1, 1]).class(), PinchClass::Interior);
    }

    #[test]
    fn closed_membership_examples() {
        assert!(!is_member_closed(&md(&[5, 1]), &cfg(&[2, 1])).unwrap());
        assert!(is_member_closed(&md(&[0, 0]), &cfg(&[2, 1])).unwrap());
        assert!(is_member_closed(&md(&[0, 0, 0]), &cfg(&[1, 1, 1])).unwrap());
        assert!(is_member_closed(&md(&[4, 2]), &cfg(&[3, 0])).unwrap());
        assert!(!is_member_closed(&md(&[5, 1]), &cfg(&[3, 0])).unwrap());
        assert!(!is_member_closed(&md(&[2, 2]), &cfg(&[3, 0])).unwrap());
        assert!(is_member_closed(&md(&[1]), &cfg(&[3, 0])).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        assert!(is_member_bruteforce(&md(&[2, 4]), &cfg(&[1, 2]), 100).unwrap());
        assert!(!is_member_bruteforce(&md(&[3, 0]), &cfg(&[3, 0]), 100).unwrap());
        assert!(matches!(
            is_member_bruteforce(&md(&[30, 3]), &cfg(&[3, 0]), 24),
            Err(SemigroupError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn closed_form_matches_bruteforce_binary() {
        for d in 2..=6u32 {
            for i in 0..=d {
                let Ok(config) = PinchConfig::binary(d, i) else { continue };
                let mut oracle = BruteForceOracle::new(&config, 8 * d);
                for total in 0..=8 * d {
                    for h in compositions(2, total) {
                        assert_eq!(config.contains_coords(h.coords()), oracle.contains(&h).unwrap(), "{config} at {h}");
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_degree_counts() {
        assert_eq!(enumerate_degree(&cfg(&[3, 0]), 1).len(), 3);
        let e = enumerate_degree(&cfg(&[2, 1]), 2);
        assert_eq!(e.len(), 6);
        assert!(!e.contains(&md(&[5, 1])));
        assert_eq!(enumerate_degree(&cfg(&[3, 0]), 2).len(), 5);
        assert_eq!(enumerate_degree(&cfg(&[3, 0]), 0), vec![md(&[0, 0])]);
        let e = enumerate_degree(&cfg(&[1, 1, 1]), 2);
        let mut sorted = e.clone();
        sorted.sort_by(|a, b| b.cmp(a));
        assert_eq!(e, sorted);
    }

    #[test]
    fn normality_probe_examples() {
        assert_eq!(normality_probe(&cfg(&[4, 0]), 6, 4), None);
        assert_eq!(normality_probe(&cfg(&[2, 3]), 6, 4), Some(NormalityWitness { z: md(&[2, 3]), multiplier: 2 }));
        assert_eq!(normality_probe(&cfg(&[3, 1]), 6, 4), Some(NormalityWitness { z: md(&[3, 1]), multiplier: 2 }));
        let mut oracle = BruteForceOracle::new(&cfg(&[2, 3]), 100);
        assert!(!oracle.contains(&md(&[2, 3])).unwrap());
        assert!(oracle.contains(&md(&[4, 6])).unwrap());
    }

    #[test]
    fn normalization_sorts_pinch() {
        let n = cfg(&[0, 1, 2]).normalization();
        assert_eq!(n.pinch, md(&[2, 1, 0]));
        assert_eq!(n.perm, vec![2, 1, 0]);
        assert_eq!(n.apply(&md(&[5, 0, 1])), md(&[1, 0, 5]));
    }

    #[test]
    fn multidegree_parse_and_display() {
        assert_eq!("3,1,0".parse::<Multidegree>().unwrap(), md(&[3, 1, 0]));
        assert_eq!("(2, 3)".parse::<Multidegree>().unwrap(), md(&[2, 3]));
        assert!("a,b".parse::<Multidegree>().is_err());
        assert_eq!(md(&[2, 3]).to_string(), "(2,3)");
    }
}
