use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::HomologyError;
use crate::semigroup::{AffineSemigroup, Multidegree, PinchClass, PinchConfig, VeroneseSemigroup};

/// Largest ground set a [`Face`] bitmask can index.
pub const MAX_GROUND: usize = 64;

/// A finite set of vertex indices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u64) -> Self {
        Face(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        Face(vertices.into_iter().fold(0, |acc, v| acc | (1u64 << v)))
    }

    /// `{0, .., k-1}`.
    pub fn range(k: usize) -> Self {
        if k == 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << k) - 1)
        }
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Dimension `|F| - 1`; the empty face has dimension `-1`.
    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        Face(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        Face(self.0 & !(1 << v))
    }

    pub fn union(self, other: Face) -> Self {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Self {
        Face(self.0 & other.0)
    }

    pub fn minus(self, other: Face) -> Self {
        Face(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn max_vertex(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Vertices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            (bits != 0).then(|| {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                v
            })
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// All subsets of this face, in increasing order of their bitmask.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full { None } else { Some((cur.wrapping_sub(full)) & full) };
            Some(Face(cur))
        })
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.vertices()).finish()
    }
}

impl Ord for Face {
    /// Lexicographic order on the sorted vertex lists.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for Face {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Face {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if v.iter().any(|&x| x >= MAX_GROUND) {
            return Err(serde::de::Error::custom("vertex index out of range"));
        }
        Ok(Face::from_vertices(v))
    }
}

/// A simplicial complex on `{0, .., ground_size - 1}`, faces grouped by cardinality.
///
/// `levels[k]` holds the faces with `k` vertices in lexicographic order. A void
/// complex has no levels at all; the complex `{∅}` has a single level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SquarefreeDivisorComplex {
    ground_size: usize,
    levels: Vec<Vec<Face>>,
    degree: Option<Multidegree>,
}

impl SquarefreeDivisorComplex {
    pub fn void(ground_size: usize) -> Self {
        Self { ground_size, levels: Vec::new(), degree: None }
    }

    /// Builds a complex from an arbitrary collection of faces; the collection
    /// must already be closed under taking subsets.
    pub fn from_faces<I: IntoIterator<Item = Face>>(ground_size: usize, faces: I) -> Result<Self, HomologyError> {
        if ground_size > MAX_GROUND {
            return Err(HomologyError::GroundTooLarge(ground_size));
        }
        let set: HashSet<Face> = faces.into_iter().collect();
        let ground = Face::range(ground_size);
        for &f in &set {
            if !f.is_subset_of(ground) {
                return Err(HomologyError::VertexOutOfRange { face: f.to_vec(), ground_size });
            }
            if let Some(v) = f.vertices().find(|&v| !set.contains(&f.without(v))) {
                return Err(HomologyError::NotClosed { face: f.to_vec(), missing: f.without(v).to_vec() });
            }
        }
        Ok(Self::from_closed_set(ground_size, set))
    }

    fn from_closed_set(ground_size: usize, set: HashSet<Face>) -> Self {
        let top = set.iter().map(|f| f.len()).max();
        let mut levels: Vec<Vec<Face>> = match top {
            Some(t) => vec![Vec::new(); t + 1],
            None => Vec::new(),
        };
        for f in set {
            levels[f.len()].push(f);
        }
        for level in &mut levels {
            level.sort();
        }
        Self { ground_size, levels, degree: None }
    }

    /// The downward closure of the given facets.
    pub fn from_facets<I: IntoIterator<Item = Face>>(ground_size: usize, facets: I) -> Result<Self, HomologyError> {
        let set: HashSet<Face> = facets.into_iter().flat_map(Face::subsets).collect();
        Self::from_faces(ground_size, set)
    }

    /// All subsets of `vertices`.
    pub fn simplex(ground_size: usize, vertices: Face) -> Self {
        Self::from_facets(ground_size, [vertices]).expect("a simplex is closed")
    }

    /// All proper subsets of `vertices`.
    pub fn simplex_boundary(ground_size: usize, vertices: Face) -> Self {
        let set = vertices.subsets().filter(|&f| f != vertices).collect();
        Self::from_closed_set(ground_size, set)
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn degree(&self) -> Option<&Multidegree> {
        self.degree.as_ref()
    }

    pub fn is_void(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn num_faces(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Faces with `k` vertices.
    pub fn faces_of_size(&self, k: usize) -> &[Face] {
        self.levels.get(k).map_or(&[], Vec::as_slice)
    }

    /// Faces of dimension `dim` (`-1` is the empty face).
    pub fn faces_of_dim(&self, dim: isize) -> &[Face] {
        if dim < -1 {
            return &[];
        }
        self.faces_of_size((dim + 1) as usize)
    }

    /// Largest face dimension, `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        (!self.is_void()).then(|| self.levels.len() as isize - 2)
    }

    pub fn faces(&self) -> impl Iterator<Item = Face> + '_ {
        self.levels.iter().flatten().copied()
    }

    pub fn face_set(&self) -> HashSet<Face> {
        self.faces().collect()
    }

    pub fn contains(&self, f: Face) -> bool {
        self.levels.get(f.len()).is_some_and(|level| level.binary_search(&f).is_ok())
    }

    /// Union of all faces.
    pub fn vertex_support(&self) -> Face {
        self.faces_of_size(1).iter().fold(Face::EMPTY, |acc, &f| acc.union(f))
    }

    /// Faces as sorted vertex lists, in order of increasing size.
    pub fn face_lists(&self) -> Vec<Vec<usize>> {
        self.faces().map(Face::to_vec).collect()
    }

    /// Relabels vertex `v` as `map[v]` on a new ground set.
    pub fn relabel(&self, new_ground: usize, map: &[usize]) -> Self {
        let set = self.faces().map(|f| Face::from_vertices(f.vertices().map(|v| map[v]))).collect();
        let mut out = Self::from_closed_set(new_ground, set);
        out.degree = self.degree.clone();
        out
    }

    /// Reduced Euler characteristic `Σ_{k ≥ -1} (-1)^k f_k`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.levels
            .iter()
            .enumerate()
            .map(|(size, level)| {
                let sign = if size % 2 == 1 { 1 } else { -1 };
                sign * level.len() as i64
            })
            .sum()
    }

    /// `true` when some vertex `v` has `F ∪ {v}` in the complex for every face `F`.
    pub fn is_cone(&self) -> bool {
        let total = self.num_faces();
        if total == 0 {
            return false;
        }
        self.vertex_support().vertices().any(|v| {
            let with_v = self.faces().filter(|f| f.contains(v)).count();
            2 * with_v == total
        })
    }
}

/// Builds `Δ_h = { F ⊆ gens : h - ΣF ∈ H }` level by level, only testing
/// candidates all of whose facets are already faces.
pub fn build_divisor_complex_in<S: AffineSemigroup + ?Sized>(
    h: &Multidegree,
    semigroup: &S,
) -> SquarefreeDivisorComplex {
    let gens = semigroup.generators();
    let ground = gens.len();
    assert!(ground <= MAX_GROUND, "ground set of {ground} generators exceeds {MAX_GROUND}");
    let mut complex = SquarefreeDivisorComplex::void(ground);
    complex.degree = Some(h.clone());
    if h.len() != semigroup.ambient_dim() || !semigroup.contains(h.coords()) {
        return complex;
    }

    let mut level: Vec<(Face, Vec<u32>)> = vec![(Face::EMPTY, h.coords().to_vec())];
    let mut residual = vec![0u32; h.len()];
    loop {
        let present: HashSet<Face> = level.iter().map(|(f, _)| *f).collect();
        let mut next = Vec::new();
        for (face, rest) in &level {
            let start = face.max_vertex().map_or(0, |m| m + 1);
            for (v, g) in gens.iter().enumerate().skip(start) {
                let cand = face.with(v);
                if !face.vertices().all(|u| present.contains(&cand.without(u))) {
                    continue;
                }
                let fits = rest.iter().zip(g.coords()).all(|(a, b)| a >= b);
                if !fits {
                    continue;
                }
                for (slot, (a, b)) in residual.iter_mut().zip(rest.iter().zip(g.coords())) {
                    *slot = a - b;
                }
                if semigroup.contains(&residual) {
                    next.push((cand, residual.clone()));
                }
            }
        }
        complex.levels.push(level.into_iter().map(|(f, _)| f).collect());
        if next.is_empty() {
            break;
        }
        level = next;
    }
    complex
}

/// The squarefree divisor complex of `h` for the pinched semigroup of `config`.
pub fn build_divisor_complex(h: &Multidegree, config: &PinchConfig) -> SquarefreeDivisorComplex {
    build_divisor_complex_in(h, &config.semigroup())
}

/// Alexander dual `{ V \ F : F ⊆ V, F ∉ Δ }` over an explicit vertex set `V`.
///
/// Accepts the void complex (its dual is the full simplex on `V`).
pub fn alexander_dual_over(c: &SquarefreeDivisorComplex, vertices: Face) -> SquarefreeDivisorComplex {
    let present = c.face_set();
    let set = vertices.subsets().filter(|f| !present.contains(f)).map(|f| vertices.minus(f)).collect();
    SquarefreeDivisorComplex::from_closed_set(c.ground_size, set)
}

/// Alexander dual over the vertex support of `c`.
pub fn alexander_dual(c: &SquarefreeDivisorComplex) -> Result<SquarefreeDivisorComplex, HomologyError> {
    if c.is_void() {
        return Err(HomologyError::VoidComplex);
    }
    Ok(alexander_dual_over(c, c.vertex_support()))
}

/// Faces `F` such that some face `G ⊇ F` contains `v`; this keeps the faces
/// through `v` as well (a closed star rather than the classical link).
pub fn link(c: &SquarefreeDivisorComplex, v: usize) -> Result<SquarefreeDivisorComplex, HomologyError> {
    if v >= c.ground_size {
        return Err(HomologyError::VertexOutOfRange { face: vec![v], ground_size: c.ground_size });
    }
    let set = c.faces().filter(|f| c.contains(f.with(v))).collect();
    Ok(SquarefreeDivisorComplex::from_closed_set(c.ground_size, set))
}

/// Checks, for two variables and the interior pinch `m_i = (i, d - i)`, that the
/// Veronese complex of `h` is the union of the pinched complex and the link at
/// `m_i`, and that for `|h| = i d` their intersection has no face of dimension
/// `i - 2` or more.
pub fn decomposition_check(h: &Multidegree, d: u32, i: u32) -> Result<bool, HomologyError> {
    let config = PinchConfig::binary(d, i).map_err(|e| HomologyError::Precondition(e.to_string()))?;
    if config.class() != PinchClass::Interior {
        return Err(HomologyError::Precondition(format!("{config} is not an interior pinch")));
    }
    if h.len() != 2 || !h.total().is_multiple_of(d) {
        return Err(HomologyError::Precondition(format!("{h} is not in the Veronese semigroup of degree {d}")));
    }

    let veronese = VeroneseSemigroup::new(2, d);
    let full = build_divisor_complex_in(h, &veronese);
    // A_{2,d} in descending lex order puts (a, d - a) at index d - a.
    let pinch_vertex = (d - i) as usize;
    let map: Vec<usize> = (0..d as usize).map(|j| if j < pinch_vertex { j } else { j + 1 }).collect();
    let pinched = build_divisor_complex(h, &config).relabel(d as usize + 1, &map);
    let star = link(&full, pinch_vertex)?;

    let full_set = full.face_set();
    let pinched_set = pinched.face_set();
    let star_set = star.face_set();
    let union: HashSet<Face> = pinched_set.union(&star_set).copied().collect();
    let mut ok = union == full_set;

    if h.total() == i * d {
        let bound = i as isize - 2;
        ok &= pinched_set.intersection(&star_set).all(|f| f.dim() < bound);
    }
    Ok(ok)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn face(v: &[usize]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn face_basics() {
        let f = face(&[0, 2, 5]);
        assert_eq!(f.len(), 3);
        assert_eq!(f.to_vec(), vec![0, 2, 5]);
        assert_eq!(f.max_vertex(), Some(5));
        assert_eq!(f.subsets().count(), 8);
        assert!(face(&[2]).is_subset_of(f));
        assert!(face(&[0, 1]) < face(&[0, 2]));
        assert!(face(&[0, 5]) < face(&[1]));
        assert_eq!(Face::EMPTY.subsets().collect::<Vec<_>>(), vec![Face::EMPTY]);
    }

    #[test]
    fn single_generator_is_a_point() {
        let config = PinchConfig::binary(5, 2).unwrap();
        let gens = config.generators();
        let g = gens.as_slice()[1].clone();
        let c = build_divisor_complex(&g, &config);
        assert_eq!(c.face_lists(), vec![vec![], vec![1]]);
    }

    #[test]
    fn non_member_gives_void_complex() {
        let config = PinchConfig::binary(5, 2).unwrap();
        assert!(build_divisor_complex(&Multidegree::new(vec![2, 3]), &config).is_void());
        assert!(build_divisor_complex(&Multidegree::new(vec![1, 1]), &config).is_void());
    }

    #[test]
    fn sum_of_all_monomials_gives_simplex_boundary() {
        for m in [vec![2u32, 3], vec![3, 3], vec![1, 1, 1]] {
            let config = PinchConfig::from_pinch(&m).unwrap();
            let n = config.n();
            let total =
                crate::semigroup::compositions(n, config.d()).iter().fold(Multidegree::zero(n), |acc, a| &acc + a);
            let c = build_divisor_complex(&total, &config);
            let ground = config.num_generators();
            let expected = SquarefreeDivisorComplex::simplex_boundary(ground, Face::range(ground));
            assert_eq!(c.face_set(), expected.face_set(), "{config}");
        }
    }

    #[test]
    fn minimal_non_face_below_interior_pinch() {
        // h = m_0 + .. + m_i; F = {m_0, .., m_{i-1}} is a minimal non-face.
        let (d, i) = (7u32, 3u32);
        let config = PinchConfig::binary(d, i).unwrap();
        let gens = config.generators();
        let h = (0..=i).fold(Multidegree::zero(2), |acc, j| &acc + &Multidegree::new(vec![j, d - j]));
        let c = build_divisor_complex(&h, &config);
        let f = Face::from_vertices((0..i).map(|j| gens.index_of(&Multidegree::new(vec![j, d - j])).unwrap()));
        assert!(!c.contains(f));
        for v in f.vertices() {
            assert!(c.contains(f.without(v)));
        }
    }

    #[test]
    fn dual_examples() {
        let b = SquarefreeDivisorComplex::simplex_boundary(5, face(&[0, 1, 2, 3]));
        let dual = alexander_dual(&b).unwrap();
        assert_eq!(dual.face_lists(), vec![Vec::<usize>::new()]);

        let s = SquarefreeDivisorComplex::simplex(5, face(&[1, 3]));
        assert!(alexander_dual(&s).unwrap().is_void());

        assert!(matches!(alexander_dual(&SquarefreeDivisorComplex::void(3)), Err(HomologyError::VoidComplex)));

        let two_points = SquarefreeDivisorComplex::from_facets(2, [face(&[0]), face(&[1])]).unwrap();
        let v = two_points.vertex_support();
        let back = alexander_dual_over(&alexander_dual_over(&two_points, v), v);
        assert_eq!(back, two_points);
    }

    #[test]
    fn link_examples() {
        let s = SquarefreeDivisorComplex::simplex(3, face(&[0, 1, 2]));
        assert_eq!(link(&s, 1).unwrap(), s);

        let tri = SquarefreeDivisorComplex::from_facets(3, [face(&[0, 1]), face(&[0, 2]), face(&[1, 2])]).unwrap();
        let l = link(&tri, 0).unwrap();
        let expected: HashSet<Face> =
            [face(&[]), face(&[0]), face(&[1]), face(&[2]), face(&[0, 1]), face(&[0, 2])].into_iter().collect();
        assert_eq!(l.face_set(), expected);

        let point = SquarefreeDivisorComplex::simplex(3, face(&[2]));
        assert!(link(&point, 0).unwrap().is_void());
        assert!(link(&point, 3).is_err());
    }

    #[test]
    fn from_faces_rejects_open_sets() {
        let err = SquarefreeDivisorComplex::from_faces(3, [Face::EMPTY, face(&[0, 1]), face(&[0])]);
        assert!(matches!(err, Err(HomologyError::NotClosed { .. })));
        assert!(matches!(
            SquarefreeDivisorComplex::from_faces(2, [Face::EMPTY, face(&[3])]),
            Err(HomologyError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn decomposition_examples() {
        for h in crate::semigroup::compositions(2, 10) {
            assert!(decomposition_check(&h, 5, 2).unwrap(), "h = {h}");
        }
        assert!(decomposition_check(&Multidegree::new(vec![4, 4]), 4, 2).unwrap());
        for h in crate::semigroup::compositions(2, 18).into_iter().step_by(3) {
            assert!(decomposition_check(&h, 6, 3).unwrap(), "h = {h}");
        }
        assert!(decomposition_check(&Multidegree::new(vec![4, 4]), 4, 1).is_err());
        assert!(decomposition_check(&Multidegree::new(vec![4, 3]), 4, 2).is_err());
    }

    #[test]
    fn cone_detection() {
        let s = SquarefreeDivisorComplex::simplex(4, face(&[0, 1, 3]));
        assert!(s.is_cone());
        let b = SquarefreeDivisorComplex::simplex_boundary(4, face(&[0, 1, 3]));
        assert!(!b.is_cone());
        let empty_only = SquarefreeDivisorComplex::from_faces(2, [Face::EMPTY]).unwrap();
        assert!(!empty_only.is_cone());
    }
}
