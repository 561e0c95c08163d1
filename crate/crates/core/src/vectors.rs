//! The α- and μ-vectors of a complex and the identities tying them to the
//! f-vector. Each vector is computed by two independent routes that must
//! agree.

use num_bigint::BigInt;

use crate::arith::{binom, factorial};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::symfun::{matrix_a, matrix_b, sign_twist, stirling2};

/// How many routes to run when computing α and μ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    /// Run both routes and require them to agree.
    #[default]
    Checked,
    /// Matrix route only.
    Fast,
}

/// `α_k = Σ_{S ∈ K, |S| = k} (1 − χ(link_K S))`.
pub fn alpha_from_links(k: &SimplicialComplex) -> Vec<i64> {
    let mut alpha = vec![0i64; k.m()];
    for s in k.faces() {
        let link = k.link(s).expect("faces of K have links");
        alpha[s.len()] += 1 - link.euler_characteristic();
    }
    alpha
}

/// `α = B·f̃` from the f-vector alone.
pub fn alpha_from_f_vector(f: &[i64]) -> Vec<i64> {
    matrix_b(f.len()).apply(&sign_twist(f))
}

/// The matrix route, checked against the link route.
pub fn alpha_from_f(k: &SimplicialComplex) -> Result<Vec<i64>> {
    let by_f = alpha_from_f_vector(&k.f_vector());
    let by_links = alpha_from_links(k);
    if by_f != by_links {
        return Err(Error::InternalMismatch {
            what: "alpha-vector",
            detail: format!("B·f = {by_f:?}, links = {by_links:?} for {k}"),
        });
    }
    Ok(by_f)
}

pub fn alpha_vector(k: &SimplicialComplex, mode: Mode) -> Result<Vec<i64>> {
    match mode {
        Mode::Checked => alpha_from_f(k),
        Mode::Fast => Ok(alpha_from_f_vector(&k.f_vector())),
    }
}

/// `μ = A·α`, checked against `α(K^∨)`.
pub fn mu_vector(k: &SimplicialComplex, mode: Mode) -> Result<Vec<i64>> {
    let alpha = alpha_vector(k, mode)?;
    let mu = matrix_a(k.m()).apply(&alpha);
    if mode == Mode::Checked {
        let dual_alpha = alpha_vector(&k.alexander_dual(), Mode::Checked)?;
        if dual_alpha != mu {
            return Err(Error::InternalMismatch {
                what: "mu-vector",
                detail: format!("A·α = {mu:?}, α(K^∨) = {dual_alpha:?} for {k}"),
            });
        }
    }
    Ok(mu)
}

type Poly = Vec<i128>;

fn poly_mul(a: &[i128], b: &[i128]) -> Poly {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn one_plus_z_pow(n: usize) -> Poly {
    (0..=n).map(|k| binom(n as i64, k as i64) as i128).collect()
}

fn poly_add_scaled(acc: &mut Poly, p: &[i128], c: i128) {
    if acc.len() < p.len() {
        acc.resize(p.len(), 0);
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a += c * x;
    }
}

/// The polynomial form of `e^{−ms}E_K(s) + e^{−mt}M_K(t) = 1`: with
/// `z = e^t − 1`,
/// `Σ_j α_j z^{m−j}(1+z)^j + Σ_j μ_j (1+z)^j = (1+z)^m`.
pub fn egf_identity_check(k: &SimplicialComplex) -> Result<bool> {
    let alpha = alpha_vector(k, Mode::Checked)?;
    let mu = mu_vector(k, Mode::Checked)?;
    Ok(egf_identity_holds(&alpha, &mu))
}

pub fn egf_identity_holds(alpha: &[i64], mu: &[i64]) -> bool {
    let m = alpha.len();
    let mut lhs: Poly = vec![0; m + 1];
    for (j, &a) in alpha.iter().enumerate() {
        let mut zpow = vec![0i128; m - j + 1];
        zpow[m - j] = 1;
        poly_add_scaled(&mut lhs, &poly_mul(&zpow, &one_plus_z_pow(j)), a as i128);
    }
    for (j, &u) in mu.iter().enumerate() {
        poly_add_scaled(&mut lhs, &one_plus_z_pow(j), u as i128);
    }
    let rhs = one_plus_z_pow(m);
    lhs.len() == rhs.len() && lhs == rhs
}

/// `Σ_j j^n α_j = Σ_j j! f_{j−1} S(n, j)` for `0 ≤ n ≤ n_max` (with
/// `0^0 = 1`).
pub fn stirling_identity_check(k: &SimplicialComplex, n_max: usize) -> Result<bool> {
    let alpha = alpha_vector(k, Mode::Checked)?;
    Ok(stirling_identity_holds(&alpha, &k.f_vector(), n_max))
}

pub fn stirling_identity_holds(alpha: &[i64], f: &[i64], n_max: usize) -> bool {
    (0..=n_max).all(|n| {
        let lhs: BigInt = alpha
            .iter()
            .enumerate()
            .map(|(j, &a)| BigInt::from(j).pow(n as u32) * a)
            .sum();
        let rhs: BigInt = f
            .iter()
            .enumerate()
            .map(|(j, &fj)| factorial(j) * fj * BigInt::from(stirling2(n, j)))
            .sum();
        lhs == rhs
    })
}

/// `1 − χ(link_K S)` for a face; the value the fundamental class assigns to
/// `x_S u^{m−1−|S|}`.
pub fn link_defect(k: &SimplicialComplex, s: Face) -> Result<i64> {
    Ok(1 - k.link(s)?.euler_characteristic())
}
