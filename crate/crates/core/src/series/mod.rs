//! Exact Hilbert series, h-polynomials and canonical-module partners.

mod poly;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

pub use poly::{Polynomial, RationalFunction};

use crate::betti::BettiTable;
use crate::semigroup::{enumerate_degree, PinchClass, PinchConfig};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("parameter out of range: {0}")]
    ParameterRange(String),
    #[error("this operation needs two variables, got n = {0}")]
    NotBinary(usize),
    #[error("table is not certified: {0}")]
    Uncertified(String),
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `binom(n, k)` extended by zero outside `0 <= k <= n`.
fn binom(n: i64, k: i64) -> i64 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    crate::semigroup::binomial(n as u64, k as u64) as i64
}

/// `1 / (1 - z^d)^q`.
fn inverse_power(d: usize, q: u32) -> RationalFunction {
    RationalFunction::new(Polynomial::one(), Polynomial::one_minus_z_pow(d).pow(q))
}

/// Hilbert series of the Veronese module `S_{n,d,k}`:
/// `1/(n-1)! · (d/dz)^{n-1} [ z^{k+n-1} / (1 - z^d) ]`.
pub fn veronese_module_series(n: u32, d: u32, k: u32) -> Result<RationalFunction, SeriesError> {
    if n < 1 || d < 1 {
        return Err(SeriesError::ParameterRange(format!("need n >= 1 and d >= 1, got n = {n}, d = {d}")));
    }
    if k >= d {
        return Err(SeriesError::ParameterRange(format!("need 0 <= k < d, got k = {k}, d = {d}")));
    }
    let base = RationalFunction::new(Polynomial::z_pow((k + n - 1) as usize), Polynomial::one_minus_z_pow(d as usize));
    let scale = BigRational::from_integer(factorial(n - 1)).recip();
    Ok(base.nth_derivative(n - 1).scale(&scale))
}

/// Closed Hilbert series `S_{n,d,0}(z) - z^d / (1 - z^d)^q`, with `q = n`, `1`
/// or `0` according to whether `max m` is `d`, `d - 1` or smaller.
pub fn hilbert_closed(config: &PinchConfig) -> RationalFunction {
    let (n, d) = (config.n() as u32, config.d());
    let q = match config.class() {
        PinchClass::MaxD => n,
        PinchClass::MaxDMinus1 => 1,
        PinchClass::Interior => 0,
    };
    let veronese = veronese_module_series(n, d, 0).expect("valid configuration");
    let missing = &RationalFunction::from_polynomial(Polynomial::z_pow(d as usize)) * &inverse_power(d as usize, q);
    &veronese - &missing
}

/// Number of elements of `H` in each coarse degree `t = 0..=t_max`, by enumeration.
pub fn lattice_counts(config: &PinchConfig, t_max: u32) -> Vec<u64> {
    (0..=t_max).map(|t| enumerate_degree(config, t).len() as u64).collect()
}

/// Coefficients of `z^{t d}` for `t = 0..=t_max` in the expansion of `series`.
pub fn coarse_coefficients(series: &RationalFunction, d: u32, t_max: u32) -> Vec<BigRational> {
    let all = series.expand((t_max * d) as usize).expect("Hilbert series are regular at zero");
    all.into_iter().step_by(d as usize).collect()
}

/// `true` when the closed series and direct enumeration agree through `z^{t_max d}`,
/// including the vanishing of every coefficient off the multiples of `d`.
pub fn hilbert_matches_counting(config: &PinchConfig, t_max: u32) -> bool {
    let d = config.d() as usize;
    let series = hilbert_closed(config);
    let Some(all) = series.expand(t_max as usize * d) else { return false };
    let counts = lattice_counts(config, t_max);
    all.iter().enumerate().all(|(e, c)| if e % d == 0 { *c == q(counts[e / d] as i64) } else { c.is_zero() })
}

/// The h-polynomial of a two-variable configuration: the numerator of the
/// Hilbert series over `(1 - z^d)^{N-1}`, written in `y = z^d`. Its coefficients
/// are the alternating sums `Σ_i (-1)^i β_{i,s}` of the Betti table.
pub fn h_polynomial(config: &PinchConfig) -> Result<Polynomial, SeriesError> {
    if config.n() != 2 {
        return Err(SeriesError::NotBinary(config.n()));
    }
    Ok(k_polynomial(config))
}

/// `P(z) · (1 - z^d)^{N-1}` in the variable `y = z^d`, for any number of variables.
pub fn k_polynomial(config: &PinchConfig) -> Polynomial {
    let d = config.d() as usize;
    let exponent = (config.veronese_size() - 1) as u32;
    let cleared =
        &hilbert_closed(config) * &RationalFunction::from_polynomial(Polynomial::one_minus_z_pow(d).pow(exponent));
    assert!(cleared.denominator().degree() == Some(0), "denominator divides (1 - z^d)^(N-1)");
    let z_poly = cleared.numerator().scale(&cleared.denominator().coeff(0).recip());
    z_poly.deflate(d).expect("Hilbert series is supported on multiples of d")
}

/// The closed coefficient formulas for the two-variable h-polynomial:
///
/// * `max m = d`: `Σ_i (-1)^{i-1} binom(d-1, i) (i-1) y^i`
/// * `max m = d-1`: `Σ_i (-1)^{i-1} binom(d, i) (i-1)(d-i-1)/(d-1) y^i`
/// * otherwise: `Σ_{i=0}^{d+1} (-1)^{i-1} [(d-1) binom(d-2, i-1) - binom(d, i-1) - binom(d-2, i)] y^i`
pub fn h_polynomial_formula(config: &PinchConfig) -> Result<Polynomial, SeriesError> {
    if config.n() != 2 {
        return Err(SeriesError::NotBinary(config.n()));
    }
    let d = config.d() as i64;
    let sign = |i: i64| if i % 2 == 1 { 1 } else { -1 };
    let coeffs: Vec<BigRational> = match config.class() {
        PinchClass::MaxD => (0..=d).map(|i| q(sign(i) * binom(d - 1, i) * (i - 1))).collect(),
        PinchClass::MaxDMinus1 => (0..=d)
            .map(|i| BigRational::new(BigInt::from(sign(i) * binom(d, i) * (i - 1) * (d - i - 1)), BigInt::from(d - 1)))
            .collect(),
        PinchClass::Interior => (0..=d + 1)
            .map(|i| q(sign(i) * ((d - 1) * binom(d - 2, i - 1) - binom(d, i - 1) - binom(d - 2, i))))
            .collect(),
    };
    Ok(Polynomial::new(coeffs))
}

/// `Σ_{i,s} (-1)^i β_{i,s} y^s` from a Betti table.
pub fn k_polynomial_from_table(table: &BettiTable) -> Polynomial {
    let top = table.entries().keys().map(|&(_, s)| s).max().unwrap_or(0);
    let mut coeffs = vec![0i64; top + 1];
    for (&(i, s), &b) in table.entries() {
        let b = b as i64;
        coeffs[s] += if i % 2 == 0 { b } else { -b };
    }
    Polynomial::from_ints(coeffs)
}

/// Checks `Σ (-1)^i β_{i,s} z^{sd} = P(z) (1 - z^d)^{N-1}` exactly.
pub fn k_polynomial_check(table: &BettiTable, config: &PinchConfig) -> Result<bool, SeriesError> {
    if let Err(reason) = table.certification() {
        return Err(SeriesError::Uncertified(reason));
    }
    Ok(k_polynomial_from_table(table) == k_polynomial(config))
}

/// The residue `t ∈ [0, d)` with `t ≡ -n - k (mod d)`.
pub fn canonical_partner(n: u32, d: u32, k: u32) -> Result<u32, SeriesError> {
    if d == 0 || k >= d {
        return Err(SeriesError::ParameterRange(format!("need 0 <= k < d, got k = {k}, d = {d}")));
    }
    let r = -(i64::from(n) + i64::from(k));
    Ok(r.rem_euclid(i64::from(d)) as u32)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalCheck {
    pub n: u32,
    pub d: u32,
    pub k: u32,
    pub partner: u32,
    /// Whether `(-1)^n S_{n,d,k}(1/z) / S_{n,d,t}(z)` is `±z^shift`.
    pub holds: bool,
    pub shift: Option<i64>,
    /// Sign of the monomial quotient, when it is one.
    pub sign: Option<i8>,
}

/// Compares `(-1)^n S_{n,d,k}(1/z)` with `S_{n,d,t}(z)` for the canonical partner `t`.
pub fn canonical_series_check(n: u32, d: u32, k: u32) -> Result<CanonicalCheck, SeriesError> {
    let partner = canonical_partner(n, d, k)?;
    let s = veronese_module_series(n, d, k)?;
    let mut r = s.at_reciprocal();
    if n % 2 == 1 {
        r = -&r;
    }
    let quotient = &r * &veronese_module_series(n, d, partner)?.recip();
    let mono = quotient.as_monomial().filter(|(c, _)| c.abs().is_one());
    Ok(CanonicalCheck {
        n,
        d,
        k,
        partner,
        holds: mono.is_some(),
        shift: mono.as_ref().map(|(_, e)| *e),
        sign: mono.as_ref().map(|(c, _)| if c.is_negative() { -1 } else { 1 }),
    })
}
