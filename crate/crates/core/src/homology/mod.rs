//! Simplicial complexes, Alexander duality and reduced homology over exact fields.

mod complex;
mod field;
mod rank;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use complex::{
    alexander_dual, alexander_dual_over, build_divisor_complex, build_divisor_complex_in, decomposition_check, link,
    Face, SquarefreeDivisorComplex, MAX_GROUND,
};
pub use field::FieldSpec;
pub use rank::{rank_mod_p, rank_rational, rank_sparse_mod_p, SparseMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("the void complex has no Alexander dual over its (empty) support")]
    VoidComplex,
    #[error("ground set of size {0} exceeds the supported maximum of 64")]
    GroundTooLarge(usize),
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("unknown field `{0}` (expected QQ or GF(p))")]
    UnknownField(String),
    #[error("face {face:?} uses a vertex outside the ground set of size {ground_size}")]
    VertexOutOfRange { face: Vec<usize>, ground_size: usize },
    #[error("face {face:?} is present but its subset {missing:?} is not")]
    NotClosed { face: Vec<usize>, missing: Vec<usize> },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// Dimensions of reduced homology groups, keyed by degree `k ≥ -1`.
/// Only nonzero dimensions are stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HomologyProfile {
    dims: BTreeMap<i32, u64>,
}

impl HomologyProfile {
    pub fn from_dims<I: IntoIterator<Item = (i32, u64)>>(dims: I) -> Self {
        Self { dims: dims.into_iter().filter(|&(_, v)| v != 0).collect() }
    }

    pub fn dim(&self, k: i32) -> u64 {
        self.dims.get(&k).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<i32, u64> {
        &self.dims
    }

    pub fn total(&self) -> u64 {
        self.dims.values().sum()
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.is_empty()
    }

    /// `Σ (-1)^k dim H̃_k`.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().map(|(&k, &v)| if k.rem_euclid(2) == 0 { v as i64 } else { -(v as i64) }).sum()
    }

    /// Reindexes `k ↦ offset - k`.
    fn reflected(&self, offset: i32) -> Self {
        Self::from_dims(self.dims.iter().map(|(&k, &v)| (offset - k, v)))
    }
}

/// Boundary map `∂_k` from `k`-faces to `(k-1)`-faces of the augmented chain
/// complex. Rows and columns follow the lexicographic face order; removing
/// the vertex in sorted position `j` carries sign `(-1)^j`.
pub fn boundary_matrix(c: &SquarefreeDivisorComplex, k: isize) -> SparseMatrix {
    let sources = c.faces_of_dim(k);
    let targets = c.faces_of_dim(k - 1);
    if k < 0 {
        return SparseMatrix::zero(targets.len(), sources.len());
    }
    let columns = sources
        .iter()
        .map(|f| {
            let mut col: Vec<(usize, i64)> = f
                .vertices()
                .enumerate()
                .map(|(j, v)| {
                    let row = targets.binary_search(&f.without(v)).expect("complex is closed under taking subsets");
                    (row, if j % 2 == 0 { 1 } else { -1 })
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    SparseMatrix::new(targets.len(), columns)
}

/// Reduced homology from boundary ranks: `dim H̃_k = f_k - rank ∂_k - rank ∂_{k+1}`.
///
/// The void complex is acyclic; `{∅}` has `H̃_{-1}` of dimension one.
pub fn reduced_homology(c: &SquarefreeDivisorComplex, field: FieldSpec) -> HomologyProfile {
    let Some(top) = c.dimension() else {
        return HomologyProfile::default();
    };
    let ranks: Vec<usize> = (-1..=top + 1).map(|k| boundary_matrix(c, k).rank(field)).collect();
    HomologyProfile::from_dims((-1..=top).map(|k| {
        let idx = (k + 1) as usize;
        let faces = c.faces_of_dim(k).len();
        (k as i32, (faces - ranks[idx] - ranks[idx + 1]) as u64)
    }))
}

/// Same result as [`reduced_homology`], but short-circuits cones and switches
/// to the Alexander dual when the dual has fewer faces.
pub fn fast_reduced_homology(c: &SquarefreeDivisorComplex, field: FieldSpec) -> HomologyProfile {
    if c.is_void() || c.is_cone() {
        return HomologyProfile::default();
    }
    let support = c.vertex_support();
    let v = support.len();
    if v == 0 || v >= 63 {
        return reduced_homology(c, field);
    }
    let faces = c.num_faces() as u64;
    if (1u64 << v) - faces >= faces {
        return reduced_homology(c, field);
    }
    let dual = alexander_dual_over(c, support);
    reduced_homology(&dual, field).reflected(v as i32 - 3)
}

/// Checks `H̃_{i-2}(Δ*) ≅ H̃_{#V-i-1}(Δ)` over the vertex support `V`, i.e.
/// `dim H̃_k(Δ) = dim H̃_{#V-k-3}(Δ*)` for every `k`.
pub fn alexander_duality_holds(c: &SquarefreeDivisorComplex, field: FieldSpec) -> Result<bool, HomologyError> {
    let support = c.vertex_support();
    if support.is_empty() {
        return Err(HomologyError::Precondition("duality needs a nonempty vertex support".into()));
    }
    let dual = alexander_dual(c)?;
    let h = reduced_homology(c, field);
    let hd = reduced_homology(&dual, field);
    Ok(h == hd.reflected(support.len() as i32 - 3))
}
