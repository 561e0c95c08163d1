//! Bier spheres `K ∗_δ K^∨`, their f- and h-vectors, and the canonical fan.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::arith::{binom, determinant, sign};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// The Bier sphere of `K`, on `2m` vertices: `1..=m` carry `K`, `m+1..=2m`
/// carry the primed copy holding `K^∨`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BierSphere {
    origin: SimplicialComplex,
    sphere: SimplicialComplex,
}

/// Splits a Bier face into its unprimed part `I` and primed part `J`.
pub fn split_face(face: Face, m: usize) -> (Face, Face) {
    let low = Face::full(m);
    (face.intersection(low), Face::from_mask(face.mask() >> m))
}

fn join_parts(i: Face, j: Face, m: usize) -> Face {
    i.union(Face::from_mask(j.mask() << m))
}

impl BierSphere {
    pub fn new(k: &SimplicialComplex) -> Self {
        let m = k.m();
        let dual = k.alexander_dual();
        let faces_k = k.faces();
        let faces_d = dual.faces();
        let mut facets = Vec::new();
        for &i in &faces_k {
            for &j in &faces_d {
                if !i.is_disjoint(j) {
                    continue;
                }
                let used = i.union(j);
                let extendable = (1..=m).filter(|&v| !used.contains(v)).any(|v| {
                    k.contains_face(i.with(v)) || dual.contains_face(j.with(v))
                });
                if !extendable {
                    facets.push(join_parts(i, j, m));
                }
            }
        }
        let sphere = SimplicialComplex::from_faces(2 * m, facets)
            .expect("Bier sphere is a proper complex on 2m vertices");
        BierSphere { origin: k.clone(), sphere }
    }

    pub fn origin(&self) -> &SimplicialComplex {
        &self.origin
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.sphere
    }

    pub fn facets(&self) -> &[Face] {
        self.sphere.facets()
    }

    /// `(f_{-1}, ..., f_{m-2})` of the sphere; higher entries are zero.
    pub fn f_vector(&self) -> Vec<i64> {
        let mut f = self.sphere.f_vector();
        f.truncate(self.origin.m());
        f
    }

    /// Swaps primed and unprimed labels.
    pub fn swap_halves(&self) -> SimplicialComplex {
        let m = self.origin.m();
        let facets = self
            .facets()
            .iter()
            .map(|&f| {
                let (i, j) = split_face(f, m);
                join_parts(j, i, m)
            })
            .collect();
        SimplicialComplex::from_faces(2 * m, facets).expect("relabeling preserves validity")
    }
}

pub fn bier_sphere(k: &SimplicialComplex) -> BierSphere {
    BierSphere::new(k)
}

/// `Σ_k h_k t^{n−k} = Σ_k f_{n−1−k} (t−1)^k` for `f = (f_{-1}, ..., f_{n-1})`.
pub fn h_vector(f: &[i64], n: usize) -> Vec<i64> {
    assert_eq!(f.len(), n + 1, "f-vector must have length n + 1");
    let mut h = vec![0i64; n + 1];
    for k in 0..=n {
        let coeff = f[n - k];
        for j in 0..=k {
            h[n - j] += coeff * binom(k as i64, j as i64) * sign((k - j) as i64);
        }
    }
    h
}

/// The h-vector of `Bier(K)` from the f-vector of `K`: the lower half from
/// `h_p = 1 + (f_0 + ⋯ + f_{p−1}) − (f_{m−p−1} + ⋯ + f_{m−2})`, the upper half by
/// `h_p = h_{m−1−p}`.
pub fn h_vector_bier(k: &SimplicialComplex) -> Vec<i64> {
    h_vector_bier_from_f(&k.f_vector())
}

pub fn h_vector_bier_from_f(fv: &[i64]) -> Vec<i64> {
    let m = fv.len();
    // fv[i] = f_{i-1}
    let f = |i: usize| fv[i + 1];
    let mut h = vec![0i64; m];
    h[0] = 1;
    for p in 1..=(m - 1) / 2 {
        let low: i64 = (0..p).map(f).sum();
        let high: i64 = (m - p - 1..=m - 2).map(f).sum();
        h[p] = 1 + low - high;
    }
    for p in 0..m {
        if p > (m - 1) / 2 {
            h[p] = h[m - 1 - p];
        }
    }
    h
}

/// The `2m` rays of the canonical fan in `Z^{m−1}`: `−e_1..−e_m` for the
/// unprimed vertices, `e_1..e_m` for the primed ones, with
/// `e_m = −(e_1 + ⋯ + e_{m−1})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanRays {
    m: usize,
    rays: Vec<Vec<i64>>,
}

impl FanRays {
    pub fn new(m: usize) -> Self {
        let basis = |i: usize| -> Vec<i64> {
            if i < m - 1 {
                (0..m - 1).map(|c| i64::from(c == i)).collect()
            } else {
                vec![-1; m - 1]
            }
        };
        let mut rays: Vec<Vec<i64>> =
            (0..m).map(|i| basis(i).into_iter().map(|x| -x).collect()).collect();
        rays.extend((0..m).map(basis));
        FanRays { m, rays }
    }

    /// Ray for the 1-based Bier vertex `v` (`v > m` is primed).
    pub fn ray(&self, v: usize) -> &[i64] {
        &self.rays[v - 1]
    }

    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Determinant of the generators of the cone over a Bier face of size
    /// `m − 1`.
    pub fn cone_determinant(&self, face: Face) -> BigInt {
        let rows: Vec<Vec<i64>> = face.vertices().map(|v| self.ray(v).to_vec()).collect();
        determinant(&rows)
    }
}

pub fn fan_rays(m: usize) -> FanRays {
    FanRays::new(m)
}

/// Checks that every maximal cone of the canonical fan is unimodular.
pub fn facet_cone_check(k: &SimplicialComplex) -> Result<bool> {
    let bier = BierSphere::new(k);
    let rays = FanRays::new(k.m());
    let bad = bier
        .facets()
        .par_iter()
        .map(|&f| (f, rays.cone_determinant(f)))
        .filter(|(f, d)| f.len() != k.m() - 1 || !d.abs().is_one())
        .min_by(|a, b| a.0.cmp(&b.0));
    match bad {
        None => Ok(true),
        Some((f, det)) => Err(Error::NonRegular {
            facet: describe_bier_face(f, k.m()),
            det: det.to_string(),
        }),
    }
}

/// `I ⊔ J′` rendering, e.g. `{1,2}⊔{3}'`.
pub fn describe_bier_face(face: Face, m: usize) -> String {
    let (i, j) = split_face(face, m);
    format!("{i}⊔{j}'")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    #[test]
    fn void_complex_gives_triangle() {
        let b = bier_sphere(&e2());
        assert_eq!(b.facets().len(), 3);
        assert_eq!(b.f_vector(), vec![1, 3, 3]);
        // Vertices 1..3 are ghosts; the sphere is ∂Δ on the primed copy.
        assert!(b.facets().iter().all(|f| split_face(*f, 3).0.is_empty()));
    }

    #[test]
    fn ghost_vertices_give_square() {
        let b = bier_sphere(&e6());
        assert_eq!(b.facets().len(), 4);
        assert_eq!(b.f_vector(), vec![1, 4, 4]);
        assert!(b.complex().facets().iter().all(|f| f.len() == 2));
    }

    #[test]
    fn e1_has_ten_facets() {
        let b = bier_sphere(&e1());
        assert_eq!(b.facets().len(), 10);
        assert!(b.facets().iter().all(|f| f.len() == 3));
        assert_eq!(h_vector(&b.f_vector(), 3), vec![1, 4, 4, 1]);
    }

    #[test]
    fn h_vector_examples() {
        assert_eq!(h_vector(&[1, 3, 3], 2), vec![1, 1, 1]);
        assert_eq!(h_vector(&[1, 0, 0], 2), vec![1, -2, 1]);
    }

    #[test]
    fn h_vector_bier_examples() {
        assert_eq!(h_vector_bier(&e1()), vec![1, 4, 4, 1]);
        assert_eq!(h_vector_bier(&e2()), vec![1, 1, 1]);
        assert_eq!(h_vector_bier(&e5a()), h_vector_bier(&e5b()));
    }

    #[test]
    fn rays() {
        let r = fan_rays(3);
        assert_eq!(r.ray(1), &[-1, 0]);
        assert_eq!(r.ray(3), &[1, 1]);
        assert_eq!(r.ray(4), &[1, 0]);
        assert_eq!(r.ray(6), &[-1, -1]);
        for v in 1..=3 {
            let neg: Vec<i64> = r.ray(v + 3).iter().map(|x| -x).collect();
            assert_eq!(r.ray(v), neg.as_slice());
        }
    }

    #[test]
    fn fans_are_regular() {
        assert_eq!(facet_cone_check(&e2()), Ok(true));
        assert_eq!(facet_cone_check(&e1()), Ok(true));
        assert_eq!(facet_cone_check(&e6()), Ok(true));
        assert_eq!(facet_cone_check(&e5b()), Ok(true));
    }

    #[test]
    fn singular_cone_is_detected() {
        // Two rays pointing the same way are not a lattice basis.
        let rays = fan_rays(3);
        let f = Face::from_vertices([1, 4]);
        assert_eq!(rays.cone_determinant(f), BigInt::from(0));
    }

    #[test]
    fn dual_bier_is_swapped_copy() {
        for k in [e1(), e4(), e5a(), e6()] {
            let b = bier_sphere(&k);
            let bd = bier_sphere(&k.alexander_dual());
            assert_eq!(b.swap_halves(), *bd.complex());
        }
    }

    #[test]
    fn describe() {
        assert_eq!(describe_bier_face(Face::from_vertices([1, 2, 7]), 4), "{1,2}⊔{3}'");
    }
}
