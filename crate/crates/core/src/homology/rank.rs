//! Exact rank of integer matrices over a prime field or over the rationals.

use num_bigint::BigInt;
use num_traits::Zero;

use super::FieldSpec;

/// Sparse integer matrix stored by columns. Boundary matrices only hold `±1`,
/// but the representation does not depend on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(usize, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, columns: Vec<Vec<(usize, i64)>>) -> Self {
        debug_assert!(columns.iter().flatten().all(|&(r, _)| r < rows));
        Self { rows, columns }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, columns: vec![Vec::new(); cols] }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, i64)] {
        &self.columns[j]
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut dense = vec![vec![0i64; self.cols()]; self.rows];
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                dense[i][j] += v;
            }
        }
        dense
    }

    /// `self * rhs` with exact integer arithmetic.
    pub fn mul(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols(), rhs.rows(), "dimension mismatch in product");
        let columns = rhs
            .columns
            .iter()
            .map(|rcol| {
                let mut acc = std::collections::BTreeMap::<usize, i64>::new();
                for &(k, b) in rcol {
                    for &(i, a) in &self.columns[k] {
                        *acc.entry(i).or_default() += a * b;
                    }
                }
                acc.into_iter().filter(|&(_, v)| v != 0).collect()
            })
            .collect();
        SparseMatrix { rows: self.rows, columns }
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().flatten().all(|&(_, v)| v == 0)
    }

    pub fn rank(&self, field: FieldSpec) -> usize {
        if self.rows == 0 || self.cols() == 0 || self.nnz() == 0 {
            return 0;
        }
        match field {
            FieldSpec::PrimeField(p) => rank_sparse_mod_p(&self.columns, p),
            FieldSpec::Rationals => rank_rational(self.to_dense()),
        }
    }
}

fn inverse_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse.
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Column reduction modulo `p` on the sparse representation: each column is
/// reduced against earlier columns sharing its lowest nonzero row.
pub fn rank_sparse_mod_p(columns: &[Vec<(usize, i64)>], p: u64) -> usize {
    let pi = p as i64;
    let rows = columns.iter().flatten().map(|&(r, _)| r + 1).max().unwrap_or(0);
    let mut pivots: Vec<Option<Vec<(usize, u64)>>> = vec![None; rows];
    let mut rank = 0;
    for col in columns {
        let mut v: Vec<(usize, u64)> = {
            let mut acc = std::collections::BTreeMap::<usize, u64>::new();
            for &(r, x) in col {
                let e = acc.entry(r).or_default();
                *e = (*e + x.rem_euclid(pi) as u64) % p;
            }
            acc.into_iter().filter(|&(_, x)| x != 0).collect()
        };
        while let Some(&(low, a)) = v.last() {
            let Some(pc) = &pivots[low] else {
                pivots[low] = Some(v);
                rank += 1;
                break;
            };
            let b = pc.last().expect("pivot columns are nonempty").1;
            let f = a * inverse_mod(b, p) % p;
            v = axpy_mod(&v, pc, p - f, p);
        }
    }
    rank
}

/// `x + f·y` on sorted sparse vectors, dropping zeros.
fn axpy_mod(x: &[(usize, u64)], y: &[(usize, u64)], f: u64, p: u64) -> Vec<(usize, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (r, val) = match (x.get(i), y.get(j)) {
            (Some(&(rx, vx)), Some(&(ry, _))) if rx < ry => {
                i += 1;
                (rx, vx)
            }
            (Some(&(rx, _)), Some(&(ry, vy))) if ry < rx => {
                j += 1;
                (ry, f * vy % p)
            }
            (Some(&(rx, vx)), Some(&(_, vy))) => {
                i += 1;
                j += 1;
                (rx, (vx + f * vy) % p)
            }
            (Some(&(rx, vx)), None) => {
                i += 1;
                (rx, vx)
            }
            (None, Some(&(ry, vy))) => {
                j += 1;
                (ry, f * vy % p)
            }
            (None, None) => unreachable!(),
        };
        if val != 0 {
            out.push((r, val));
        }
    }
    out
}

/// Dense Gaussian elimination modulo a prime `p < 2^32`.
pub fn rank_mod_p(dense: Vec<Vec<i64>>, p: u64) -> usize {
    let pi = p as i64;
    let mut m: Vec<Vec<u64>> =
        dense.into_iter().map(|row| row.into_iter().map(|v| v.rem_euclid(pi) as u64).collect()).collect();
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, pivot);
        let inv = inverse_mod(m[rank][c], p);
        for v in m[rank][c..].iter_mut() {
            *v = *v * inv % p;
        }
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for (x, &y) in row[c..].iter_mut().zip(&prow[c..]) {
                *x = (*x + p - f * y % p) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Fraction-free (Bareiss) elimination over the integers, which gives the rank
/// over `Q`. Runs in `i128` and restarts with big integers on overflow.
pub fn rank_rational(dense: Vec<Vec<i64>>) -> usize {
    let small: Vec<Vec<i128>> = dense.iter().map(|row| row.iter().map(|&v| i128::from(v)).collect()).collect();
    if let Some(r) = bareiss_i128(small) {
        return r;
    }
    let big = dense.into_iter().map(|row| row.into_iter().map(BigInt::from).collect()).collect();
    bareiss_big(big)
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev: i128 = 1;
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[c];
        for row in tail.iter_mut() {
            let f = row[c];
            for j in c + 1..cols {
                let num = pv.checked_mul(row[j])?.checked_sub(f.checked_mul(prow[j])?)?;
                debug_assert_eq!(num % prev, 0, "Bareiss division must be exact");
                row[j] = num / prev;
            }
            row[c] = 0;
        }
        prev = pv;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, pivot);
        let (head, tail) = m.split_at_mut(rank + 1);
        let prow = &head[rank];
        let pv = prow[c].clone();
        for row in tail.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let num = &pv * &row[j] - &f * &prow[j];
                debug_assert!((&num % &prev).is_zero(), "Bareiss division must be exact");
                row[j] = num / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pv;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}
