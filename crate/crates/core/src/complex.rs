//! Abstract simplicial complexes on `[m]`, stored by their facets.
//!
//! Vertices are 1-based at every I/O boundary and 0-based bit positions
//! inside [`Face`]. Ghost vertices (elements of `[m]` that are not faces) are
//! allowed everywhere.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default upper bound on the ambient vertex count.
pub const DEFAULT_MAX_M: usize = 24;

/// Hard ceiling even when `TORBORD_MAX_M` is set: Bier spheres live on `2m`
/// vertices and faces are 64-bit masks.
pub const HARD_MAX_M: usize = 32;

/// The active cap on `m`, honoring the `TORBORD_MAX_M` override.
pub fn max_m() -> usize {
    std::env::var("TORBORD_MAX_M")
        .ok()
        .and_then(|s| s.trim().parse::<usize>().ok())
        .map(|v| v.clamp(2, HARD_MAX_M))
        .unwrap_or(DEFAULT_MAX_M)
}

/// A subset of the vertex set, as a bit mask (bit `i` is vertex `i + 1`).
///
/// Ordering is lexicographic on the sorted 1-based vertex sequence, so
/// `{1,2} < {1,2,3} < {1,3} < {2}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Face(u64);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_mask(mask: u64) -> Self {
        Face(mask)
    }

    /// Builds a face from 1-based labels. Labels must be in `1..=64`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(vertices: I) -> Self {
        let mut mask = 0u64;
        for v in vertices {
            debug_assert!((1..=64).contains(&v));
            mask |= 1 << (v - 1);
        }
        Face(mask)
    }

    /// The first `n` vertices, `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            Face(u64::MAX)
        } else {
            Face((1u64 << n) - 1)
        }
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Whether the 1-based vertex `v` belongs to the face.
    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn is_subset(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Face) -> bool {
        self.0 & other.0 == 0
    }

    pub fn union(self, other: Face) -> Face {
        Face(self.0 | other.0)
    }

    pub fn intersection(self, other: Face) -> Face {
        Face(self.0 & other.0)
    }

    pub fn difference(self, other: Face) -> Face {
        Face(self.0 & !other.0)
    }

    pub fn with(self, v: usize) -> Face {
        Face(self.0 | (1 << (v - 1)))
    }

    pub fn without(self, v: usize) -> Face {
        Face(self.0 & !(1 << (v - 1)))
    }

    /// Sorted 1-based vertices.
    pub fn vertices(self) -> Vertices {
        Vertices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.vertices().collect()
    }

    /// All subsets of this face, including the empty face and itself.
    pub fn subsets(self) -> impl Iterator<Item = Face> {
        let full = self.0;
        let mut next = Some(full);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == 0 { None } else { Some((cur - 1) & full) };
            Some(Face(cur))
        })
    }
}

/// Iterator over the sorted 1-based vertices of a [`Face`].
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices().cmp(other.vertices())
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.vertices().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Keeps only inclusion-maximal faces, returned in canonical order.
fn reduce_to_antichain(mut faces: Vec<Face>) -> Vec<Face> {
    faces.sort_by_key(|f| std::cmp::Reverse(f.len()));
    faces.dedup();
    let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
    for f in faces {
        if !kept.iter().any(|k| f.is_subset(*k)) {
            kept.push(f);
        }
    }
    kept.sort();
    kept
}

/// A simplicial complex on `[m]`, different from the full simplex.
///
/// The empty face is always present; the void complex has the single facet
/// `∅`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    m: usize,
    facets: Vec<Face>,
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex({})", self.to_text())
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// JSON wire form `{"m": int, "facets": [[int,...],...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub m: i64,
    pub facets: Vec<Vec<i64>>,
}

impl SimplicialComplex {
    /// Validates and canonicalizes a complex from 1-based facet lists.
    ///
    /// Facets are generating sets: non-maximal entries are absorbed and an
    /// empty list denotes the void complex.
    pub fn parse(m: usize, raw_facets: &[Vec<i64>]) -> Result<Self> {
        check_m(m)?;
        let mut faces = Vec::with_capacity(raw_facets.len());
        for raw in raw_facets {
            let mut face = Face::EMPTY;
            for &v in raw {
                if v < 1 || v as usize > m {
                    return Err(Error::VertexRange { vertex: v, m });
                }
                face = face.with(v as usize);
            }
            faces.push(face);
        }
        Self::from_faces(m, faces)
    }

    /// Builds a complex from generating faces (already bit masks). Only the
    /// 64-bit mask width bounds `m` here; Bier spheres use `2m` labels.
    pub fn from_faces(m: usize, faces: Vec<Face>) -> Result<Self> {
        if m < 2 {
            return Err(Error::MTooSmall { m });
        }
        if m > 64 {
            return Err(Error::MTooLarge { m, cap: 64 });
        }
        let full = Face::full(m);
        if faces.iter().any(|f| !f.is_subset(full)) {
            let bad = faces
                .iter()
                .flat_map(|f| f.vertices())
                .find(|&v| v > m)
                .unwrap_or(m + 1);
            return Err(Error::VertexRange { vertex: bad as i64, m });
        }
        if faces.contains(&full) {
            return Err(Error::FullSimplex { m });
        }
        let mut facets = reduce_to_antichain(faces);
        if facets.is_empty() {
            facets.push(Face::EMPTY);
        }
        Ok(SimplicialComplex { m, facets })
    }

    /// The void complex `{∅}` on `[m]`.
    pub fn void(m: usize) -> Result<Self> {
        Self::from_faces(m, vec![])
    }

    /// The boundary of the simplex on `[m]`.
    pub fn boundary_simplex(m: usize) -> Result<Self> {
        let full = Face::full(m);
        Self::from_faces(m, (1..=m).map(|v| full.without(v)).collect())
    }

    /// `Δ_{[j]} ∗ ∂Δ_{[m−j]}`: the apex block is `{1..j}`, the boundary part
    /// lives on `{j+1..m}`. For `j = m−1` the boundary factor is void.
    pub fn simplex_join_boundary(m: usize, j: usize) -> Result<Self> {
        if j >= m {
            return Err(Error::FullSimplex { m });
        }
        let apex = Face::full(j);
        let rest = Face::full(m).difference(apex);
        let facets = rest.vertices().map(|v| apex.union(rest.without(v))).collect();
        Self::from_faces(m, facets)
    }

    /// `Δ_{[j]} ∗ K`, with `K` shifted onto `{j+1..j+m}`.
    pub fn simplex_join(j: usize, k: &SimplicialComplex) -> Result<Self> {
        let apex = Face::full(j);
        let facets = k
            .facets
            .iter()
            .map(|f| Face::from_mask(f.mask() << j).union(apex))
            .collect();
        Self::from_faces(k.m + j, facets)
    }

    /// The cone `Δ_{[1]} ∗ K`; the apex is vertex 1.
    pub fn cone(&self) -> Result<Self> {
        Self::simplex_join(1, self)
    }

    /// The join `K1 ∗ K2` on `[m1 + m2]`, with `K2` shifted by `m1`.
    pub fn join(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<Self> {
        let mut facets = Vec::with_capacity(k1.facets.len() * k2.facets.len());
        for a in &k1.facets {
            for b in &k2.facets {
                facets.push(a.union(Face::from_mask(b.mask() << k1.m)));
            }
        }
        Self::from_faces(k1.m + k2.m, facets)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Facets in canonical (lexicographic) order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets == [Face::EMPTY]
    }

    pub fn dimension(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn contains_face(&self, s: Face) -> bool {
        self.facets.iter().any(|f| s.is_subset(*f))
    }

    /// Every face, the empty face included, ordered by size then
    /// lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for f in &self.facets {
            for s in f.subsets() {
                seen.insert(s);
            }
        }
        let mut out: Vec<Face> = seen.into_iter().collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `(f_{-1}, f_0, ..., f_{m-2})`.
    pub fn f_vector(&self) -> Vec<i64> {
        let mut f = vec![0i64; self.m];
        for face in self.faces() {
            f[face.len()] += 1;
        }
        f
    }

    /// Non-reduced Euler characteristic (the empty face is not counted).
    pub fn euler_characteristic(&self) -> i64 {
        euler_from_f(&self.f_vector())
    }

    /// `link_K S = {τ : τ ∩ S = ∅, τ ∪ S ∈ K}` on the same ambient `[m]`.
    pub fn link(&self, s: Face) -> Result<Self> {
        if !self.contains_face(s) {
            return Err(Error::NotAFace { face: s.to_string() });
        }
        let faces = self
            .facets
            .iter()
            .filter(|f| s.is_subset(**f))
            .map(|f| f.difference(s))
            .collect();
        Self::from_faces(self.m, faces)
    }

    /// `K ∖ v`: the faces of `K` avoiding `v`.
    pub fn deletion(&self, v: usize) -> Result<Self> {
        let faces = self.facets.iter().map(|f| f.without(v)).collect();
        Self::from_faces(self.m, faces)
    }

    /// Inclusion-minimal subsets of `[m]` that are not faces.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        let faces: HashSet<Face> = self.faces().into_iter().collect();
        let mut out = BTreeSet::new();
        for &f in &faces {
            for v in 1..=self.m {
                if f.contains(v) {
                    continue;
                }
                let cand = f.with(v);
                if faces.contains(&cand) {
                    continue;
                }
                if cand.vertices().all(|w| faces.contains(&cand.without(w))) {
                    out.insert(cand);
                }
            }
        }
        out.into_iter().collect()
    }

    /// The Alexander dual on the same labels: facets are complements of
    /// minimal non-faces.
    pub fn alexander_dual(&self) -> Self {
        let full = Face::full(self.m);
        let facets = self
            .minimal_nonfaces()
            .into_iter()
            .map(|n| full.difference(n))
            .collect();
        Self::from_faces(self.m, facets).expect("dual of a valid complex is valid")
    }

    pub fn real_vertices(&self) -> Vec<usize> {
        (1..=self.m)
            .filter(|&v| self.contains_face(Face::from_vertices([v])))
            .collect()
    }

    pub fn ghost_vertices(&self) -> Vec<usize> {
        (1..=self.m)
            .filter(|&v| !self.contains_face(Face::from_vertices([v])))
            .collect()
    }

    /// Vertices that are ghosts of both `K` and its dual. When one exists the
    /// Bier sphere is the boundary of a cross-polytope and `X_K ≅ (CP¹)^{m−1}`.
    pub fn doubly_ghost_vertices(&self) -> Vec<usize> {
        let dual = self.alexander_dual();
        self.ghost_vertices()
            .into_iter()
            .filter(|&v| !dual.contains_face(Face::from_vertices([v])))
            .collect()
    }

    /// Applies a vertex relabeling; `perm[i]` is the new 1-based label of
    /// vertex `i + 1`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.m);
        let facets = self
            .facets
            .iter()
            .map(|f| Face::from_vertices(f.vertices().map(|v| perm[v - 1])))
            .collect();
        Self::from_faces(self.m, facets).expect("relabeling preserves validity")
    }

    pub fn facet_lists(&self) -> Vec<Vec<i64>> {
        self.facets
            .iter()
            .map(|f| f.vertices().map(|v| v as i64).collect())
            .collect()
    }

    pub fn to_json_value(&self) -> ComplexJson {
        ComplexJson { m: self.m as i64, facets: self.facet_lists() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("plain data serializes")
    }

    /// Compact text form `m: v v v, v v`.
    pub fn to_text(&self) -> String {
        let body = self
            .facets
            .iter()
            .filter(|f| !f.is_empty())
            .map(|f| f.vertices().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join(", ");
        if body.is_empty() {
            format!("{}:", self.m)
        } else {
            format!("{}: {}", self.m, body)
        }
    }

    pub fn from_json_value(value: &ComplexJson) -> Result<Self> {
        if value.m < 2 {
            return Err(Error::MTooSmall { m: value.m.max(0) as usize });
        }
        Self::parse(value.m as usize, &value.facets)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let value: ComplexJson =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&value)
    }

    pub fn from_text(s: &str) -> Result<Self> {
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse("expected `m: facets`".into()))?;
        let m: i64 = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count {:?}", head.trim())))?;
        if m < 2 {
            return Err(Error::MTooSmall { m: m.max(0) as usize });
        }
        let mut facets = Vec::new();
        for chunk in body.split(',') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let facet = chunk
                .split_whitespace()
                .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad vertex {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            facets.push(facet);
        }
        Self::parse(m as usize, &facets)
    }

    /// Accepts either the JSON object or the compact text form.
    pub fn from_str_any(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Self::from_json(s)
        } else {
            Self::from_text(s.trim())
        }
    }
}

fn check_m(m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::MTooSmall { m });
    }
    let cap = max_m();
    if m > cap {
        return Err(Error::MTooLarge { m, cap });
    }
    Ok(())
}

/// `χ = Σ_{i≥0} (−1)^i f_i` from `(f_{-1}, f_0, ...)`.
pub fn euler_from_f(f: &[i64]) -> i64 {
    f.iter()
        .enumerate()
        .skip(1)
        .map(|(i, &n)| if i % 2 == 1 { n } else { -n })
        .sum()
}

/// Small reference complexes used throughout the tests and benchmarks.
pub mod fixtures {
    use super::SimplicialComplex;

    /// Panics on invalid input.
    pub fn k(m: usize, facets: &[&[i64]]) -> SimplicialComplex {
        let raw: Vec<Vec<i64>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::parse(m, &raw).unwrap()
    }

    pub fn e1() -> SimplicialComplex {
        k(4, &[&[1, 2, 3], &[4]])
    }
    pub fn e2() -> SimplicialComplex {
        k(3, &[])
    }
    pub fn e3() -> SimplicialComplex {
        k(3, &[&[1, 2], &[1, 3], &[2, 3]])
    }
    pub fn e4() -> SimplicialComplex {
        k(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4]])
    }
    pub fn e5a() -> SimplicialComplex {
        k(5, &[&[1], &[2, 3], &[3, 4], &[3, 5], &[4, 5]])
    }
    pub fn e5b() -> SimplicialComplex {
        k(5, &[&[1], &[2, 3, 4], &[3, 5], &[4, 5]])
    }
    pub fn e6() -> SimplicialComplex {
        k(3, &[&[1]])
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn face(v: &[usize]) -> Face {
        Face::from_vertices(v.iter().copied())
    }

    #[test]
    fn parse_absorbs_and_validates() {
        let a = SimplicialComplex::parse(4, &[vec![1, 2, 3], vec![1, 2], vec![4]]).unwrap();
        assert_eq!(a, e1());
        assert_eq!(e2().facets(), &[Face::EMPTY]);
        assert!(e2().is_void());
        assert_eq!(
            SimplicialComplex::parse(1, &[]),
            Err(Error::MTooSmall { m: 1 })
        );
        assert_eq!(
            SimplicialComplex::parse(3, &[vec![1, 2, 3]]),
            Err(Error::FullSimplex { m: 3 })
        );
        assert_eq!(
            SimplicialComplex::parse(3, &[vec![0, 1]]),
            Err(Error::VertexRange { vertex: 0, m: 3 })
        );
        assert_eq!(
            SimplicialComplex::parse(3, &[vec![4]]),
            Err(Error::VertexRange { vertex: 4, m: 3 })
        );
    }

    #[test]
    fn face_order_is_lexicographic() {
        let mut v = vec![face(&[2]), face(&[1, 3]), face(&[1, 2, 3]), face(&[1, 2]), Face::EMPTY];
        v.sort();
        assert_eq!(
            v,
            vec![Face::EMPTY, face(&[1, 2]), face(&[1, 2, 3]), face(&[1, 3]), face(&[2])]
        );
    }

    #[test]
    fn contains_face_examples() {
        assert!(e1().contains_face(face(&[1, 2])));
        assert!(!e1().contains_face(face(&[1, 4])));
        assert!(e2().contains_face(Face::EMPTY));
    }

    #[test]
    fn f_vectors() {
        assert_eq!(e1().f_vector(), vec![1, 4, 3, 1]);
        assert_eq!(e2().f_vector(), vec![1, 0, 0]);
        assert_eq!(e3().f_vector(), vec![1, 3, 3]);
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(e1().euler_characteristic(), 2);
        assert_eq!(e2().euler_characteristic(), 0);
        assert_eq!(e4().euler_characteristic(), 1);
        assert_eq!(e5a().euler_characteristic(), 1);
    }

    #[test]
    fn links() {
        assert_eq!(e1().link(face(&[1])).unwrap(), k(4, &[&[2, 3]]));
        assert_eq!(e1().link(Face::EMPTY).unwrap(), e1());
        assert_eq!(e3().link(face(&[1])).unwrap(), k(3, &[&[2], &[3]]));
        assert!(e1().link(face(&[1, 2, 3])).unwrap().is_void());
        assert!(matches!(e1().link(face(&[1, 4])), Err(Error::NotAFace { .. })));
    }

    #[test]
    fn joins_and_cones() {
        let bd3 = SimplicialComplex::boundary_simplex(3).unwrap();
        assert_eq!(bd3, e3());
        assert_eq!(bd3.cone().unwrap(), e4());
        assert_eq!(SimplicialComplex::simplex_join_boundary(4, 1).unwrap(), e4());
        let bd2 = SimplicialComplex::boundary_simplex(2).unwrap();
        let square = SimplicialComplex::join(&bd2, &bd2).unwrap();
        assert_eq!(square, k(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
        // K_{m-1} = Δ_{[m-1]} ∗ ∂Δ_{[1]} has the single facet [m-1].
        assert_eq!(SimplicialComplex::simplex_join_boundary(4, 3).unwrap(), k(4, &[&[1, 2, 3]]));
        assert_eq!(SimplicialComplex::simplex_join_boundary(3, 0).unwrap(), e3());
    }

    #[test]
    fn minimal_nonfaces_examples() {
        assert_eq!(e1().minimal_nonfaces(), vec![face(&[1, 4]), face(&[2, 4]), face(&[3, 4])]);
        assert_eq!(e2().minimal_nonfaces(), vec![face(&[1]), face(&[2]), face(&[3])]);
        assert_eq!(e3().minimal_nonfaces(), vec![face(&[1, 2, 3])]);
    }

    #[test]
    fn alexander_duals() {
        assert_eq!(e2().alexander_dual(), e3());
        assert_eq!(e3().alexander_dual(), e2());
        assert_eq!(e1().alexander_dual(), k(4, &[&[2, 3], &[1, 3], &[1, 2]]));
        assert_eq!(e1().alexander_dual().alexander_dual(), e1());
    }

    #[test]
    fn ghosts() {
        assert_eq!(e6().ghost_vertices(), vec![2, 3]);
        assert_eq!(e6().real_vertices(), vec![1]);
        // {1} on [3]: dual has facets {1,3},{1,2}, so no vertex is doubly ghost.
        assert!(e6().doubly_ghost_vertices().is_empty());
        // ⟨{1}⟩ on [2] is self-dual, so 2 is a ghost of both.
        assert_eq!(k(2, &[&[1]]).doubly_ghost_vertices(), vec![2]);
    }

    #[test]
    fn text_and_json_forms() {
        assert_eq!(e1().to_text(), "4: 1 2 3, 4");
        assert_eq!(e2().to_text(), "3:");
        assert_eq!(SimplicialComplex::from_text("4: 4, 1 2 3").unwrap(), e1());
        assert_eq!(SimplicialComplex::from_text("3:").unwrap(), e2());
        assert_eq!(e1().to_json(), r#"{"m":4,"facets":[[1,2,3],[4]]}"#);
        assert_eq!(SimplicialComplex::from_json(&e2().to_json()).unwrap(), e2());
        assert_eq!(
            SimplicialComplex::from_str_any(r#"{"m":3,"facets":[]}"#).unwrap(),
            e2()
        );
        assert!(matches!(SimplicialComplex::from_json("{\"m\":"), Err(Error::Parse(_))));
        assert!(matches!(SimplicialComplex::from_text("4: 1 x"), Err(Error::Parse(_))));
    }

    #[test]
    fn relabel_round_trip() {
        let k = e5a();
        let perm = [5, 4, 3, 2, 1];
        assert_eq!(k.relabel(&perm).relabel(&perm), k);
    }

    #[test]
    fn deletion_matches_euler_additivity() {
        let k = e5b();
        let chi = k.euler_characteristic();
        for v in k.real_vertices() {
            let del = k.deletion(v).unwrap();
            let lk = k.link(Face::from_vertices([v])).unwrap();
            assert_eq!(del.euler_characteristic() + 1 - lk.euler_characteristic(), chi);
        }
    }

    #[test]
    fn subsets_enumerates_power_set() {
        let f = face(&[1, 3, 4]);
        let subs: Vec<Face> = f.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&Face::EMPTY));
        assert!(subs.contains(&f));
    }
}
