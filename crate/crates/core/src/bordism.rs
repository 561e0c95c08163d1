//! Unitary, oriented and unoriented bordism classes of `X_K` and `X_K^R`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rank;
use crate::bier::h_vector_bier;
use crate::charnum::{milnor_divisor, milnor_from_alpha};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::gamma::{gamma_table, GAMMA_MAX_M};
use crate::symfun::matrix_a;
use crate::vectors::{alpha_vector, Mode};

fn same_m(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<usize> {
    if k1.m() != k2.m() {
        return Err(Error::MismatchedM { left: k1.m(), right: k2.m() });
    }
    Ok(k1.m())
}

/// `f_{i−1}(K_1) − f_{i−1}(K_2) = f_{m−i−1}(K_1) − f_{m−i−1}(K_2)` for
/// `1 ≤ i ≤ ⌊(m−1)/2⌋`.
pub fn f_criterion(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<bool> {
    let m = same_m(k1, k2)?;
    let (f1, f2) = (k1.f_vector(), k2.f_vector());
    // f[i] holds f_{i−1}.
    Ok((1..=(m - 1) / 2).all(|i| f1[i] - f2[i] == f1[m - i] - f2[m - i]))
}

/// Equality of the h-vectors of the two Bier spheres.
pub fn h_criterion(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<bool> {
    same_m(k1, k2)?;
    Ok(h_vector_bier(k1) == h_vector_bier(k2))
}

/// Whether `[X_{K_1}] = [X_{K_2}]` in `Ω^U`. Both criteria are evaluated
/// and must agree.
pub fn bordant_unitary(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<bool> {
    let by_f = f_criterion(k1, k2)?;
    let by_h = h_criterion(k1, k2)?;
    if by_f != by_h {
        return Err(Error::InternalMismatch {
            what: "unitary bordism criterion",
            detail: format!("f-criterion {by_f}, h-criterion {by_h} for {k1} and {k2}"),
        });
    }
    Ok(by_f)
}

/// Indices `m−1, m−3, …` of the basis classes `[X_j]`.
pub fn basis_indices(m: usize) -> Vec<usize> {
    (0..=(m - 1) / 2).map(|k| m - 1 - 2 * k).collect()
}

/// `m − rank(Aᵗ − E)`, the rank of the span of `{[X_j]}`.
pub fn span_rank(m: usize) -> usize {
    let a = matrix_a(m);
    let rows: Vec<Vec<i64>> = (0..m)
        .map(|r| (0..m).map(|c| a.get(c, r) - i64::from(r == c)).collect())
        .collect();
    m - rank(&rows)
}

/// `[X_j] = Σ_{k ≥ j} a_{k,j} [X_k]`, as `(k, a_{k,j})` pairs.
pub fn relation(m: usize, j: usize) -> Vec<(usize, i64)> {
    let a = matrix_a(m);
    (j..m).map(|k| (k, a.get(k, j))).filter(|&(_, c)| c != 0).collect()
}

/// Each `[X_j]` written in the basis [`basis_indices`]: row `j` holds the
/// coordinates in basis order.
pub fn basis_expansions(m: usize) -> Result<Vec<Vec<BigInt>>> {
    let basis = basis_indices(m);
    let a = matrix_a(m);
    let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(); m];
    for j in (0..m).rev() {
        if let Some(pos) = basis.iter().position(|&b| b == j) {
            let mut unit = vec![BigInt::zero(); basis.len()];
            unit[pos] = BigInt::one();
            rows[j] = unit;
            continue;
        }
        // a_{j,j} = −1 here, so 2[X_j] = Σ_{k>j} a_{k,j}[X_k].
        let mut twice = vec![BigInt::zero(); basis.len()];
        for k in j + 1..m {
            let c = a.get(k, j);
            if c != 0 {
                for (t, x) in twice.iter_mut().zip(&rows[k]) {
                    *t += x * c;
                }
            }
        }
        if twice.iter().any(|x| x.is_odd()) {
            return Err(Error::NonIntegral { index: j, m });
        }
        rows[j] = twice.into_iter().map(|x| x / 2).collect();
    }
    Ok(rows)
}

/// `[X_K]` over the classes `[X_j]`: raw coordinates `α(K)` and integer
/// coordinates over the basis `{[X_{m−1−2k}]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BordismClass {
    pub m: usize,
    pub raw: Vec<i64>,
    pub basis: Vec<usize>,
    #[serde(with = "crate::serde_big::vec")]
    pub reduced: Vec<BigInt>,
}

fn render(terms: impl Iterator<Item = (usize, BigInt)>) -> String {
    let mut out = String::new();
    for (j, c) in terms.filter(|(_, c)| !c.is_zero()) {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if !abs.is_one() {
            out.push_str(&abs.to_string());
        }
        out.push_str(&format!("[X_{j}]"));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl BordismClass {
    /// `Σ_j α_j [X_j]`.
    pub fn raw_expression(&self) -> String {
        render(self.raw.iter().enumerate().map(|(j, &c)| (j, BigInt::from(c))))
    }

    /// The class in the basis, highest index first.
    pub fn reduced_expression(&self) -> String {
        render(self.basis.iter().copied().zip(self.reduced.iter().cloned()))
    }

    /// The reduced coordinates spread back over all `m` indices.
    pub fn reduced_full(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.m];
        for (&j, c) in self.basis.iter().zip(&self.reduced) {
            v[j] = c.clone();
        }
        v
    }
}

impl fmt::Display for BordismClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.raw_expression(), self.reduced_expression())
    }
}

/// Reduces `α(K)` over the basis and checks the result pairs with every
/// `γ_I` exactly as `α(K)` does.
pub fn decompose(k: &SimplicialComplex) -> Result<BordismClass> {
    let alpha = alpha_vector(k, Mode::Checked)?;
    decompose_alpha(&alpha)
}

pub fn decompose_alpha(alpha: &[i64]) -> Result<BordismClass> {
    let m = alpha.len();
    let basis = basis_indices(m);
    let rank = span_rank(m);
    if rank != basis.len() {
        return Err(Error::InternalMismatch {
            what: "bordism basis",
            detail: format!("span rank {rank}, basis size {} at m = {m}", basis.len()),
        });
    }
    let rows = basis_expansions(m)?;
    let mut reduced = vec![BigInt::zero(); basis.len()];
    for (row, &a) in rows.iter().zip(alpha) {
        for (r, x) in reduced.iter_mut().zip(row) {
            *r += x * a;
        }
    }
    let class = BordismClass { m, raw: alpha.to_vec(), basis, reduced };
    if m <= GAMMA_MAX_M {
        let full = class.reduced_full();
        for g in gamma_table(m)?.entries() {
            let by_raw = g.pair(alpha);
            let by_reduced: BigInt = g.values().iter().zip(&full).map(|(x, y)| x * y).sum();
            if by_raw != by_reduced {
                return Err(Error::InternalMismatch {
                    what: "bordism reduction",
                    detail: format!("c_({}) = {by_raw} raw, {by_reduced} reduced", g.partition()),
                });
            }
        }
    }
    Ok(class)
}

/// Which arithmetic condition makes `X_K` a polynomial generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeneratorCondition {
    /// `m = p` an odd prime and `α_0 = ±1`.
    OddPrime,
    /// `m = 2^k` and `2^{k−1}α_0 + α_1 = ±1`.
    PowerOfTwo,
    /// `m` is neither; `X_K` cannot be a generator.
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorCertificate {
    pub m: usize,
    pub condition: GeneratorCondition,
    /// The quantity that must be `±1` under `condition`.
    pub witness: Option<i64>,
    pub milnor: i64,
    pub milnor_divisor: i64,
    pub is_generator: bool,
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Decides whether `[X_K]` is a polynomial generator of `Ω^U_*`, and checks
/// the verdict against `|s_{m−1}[X_K]| = m_{m−1}`.
pub fn is_polynomial_generator(k: &SimplicialComplex) -> Result<GeneratorCertificate> {
    let alpha = alpha_vector(k, Mode::Checked)?;
    generator_from_alpha(&alpha)
}

pub fn generator_from_alpha(alpha: &[i64]) -> Result<GeneratorCertificate> {
    let m = alpha.len();
    let (condition, witness) = if m % 2 == 1 && is_prime(m) {
        (GeneratorCondition::OddPrime, Some(alpha[0]))
    } else if m.is_power_of_two() {
        let half = (m / 2) as i64;
        (GeneratorCondition::PowerOfTwo, Some(half * alpha[0] + alpha[1]))
    } else {
        (GeneratorCondition::NotApplicable, None)
    };
    let is_generator = witness.is_some_and(|w| w.abs() == 1);
    let milnor = milnor_from_alpha(alpha);
    let divisor = milnor_divisor(m - 1);
    if is_generator != (milnor.abs() == divisor) {
        return Err(Error::InternalMismatch {
            what: "generator criterion",
            detail: format!("condition says {is_generator}, s = {milnor}, m_(m-1) = {divisor}"),
        });
    }
    Ok(GeneratorCertificate {
        m,
        condition,
        witness,
        milnor,
        milnor_divisor: divisor,
        is_generator,
    })
}

/// Whether `X_K^R` bounds: `m` even, or `χ(K)` odd.
pub fn null_bordant_real(k: &SimplicialComplex) -> bool {
    k.m().is_multiple_of(2) || k.euler_characteristic() % 2 != 0
}

/// `w_1(X_K^R) = m·u`, so `X_K^R` is orientable iff `m` is even.
pub fn orientable_real(k: &SimplicialComplex) -> bool {
    k.m().is_multiple_of(2)
}

/// Whether `X_K` bounds an oriented manifold: `m` even, or `χ(K) = 1`.
pub fn null_bordant_oriented_complex(k: &SimplicialComplex) -> bool {
    k.m().is_multiple_of(2) || k.euler_characteristic() == 1
}

/// `[X_K] = c·[CP^{m−1}]` in `Ω^{SO}`: `c = 1 − χ(K)` for odd `m`, else 0.
pub fn oriented_class(k: &SimplicialComplex) -> i64 {
    if k.m() % 2 == 1 {
        1 - k.euler_characteristic()
    } else {
        0
    }
}

/// Whether `X_K` bounds as an unoriented manifold.
pub fn null_bordant_unoriented_complex(k: &SimplicialComplex) -> bool {
    k.m().is_multiple_of(2) || k.euler_characteristic() % 2 != 0
}

/// `[X_K] ≠ 0` in `Ω^{SO}` but vanishes once orientation is forgotten.
pub fn in_forgetful_kernel(k: &SimplicialComplex) -> bool {
    let chi = k.euler_characteristic();
    k.m() % 2 == 1 && chi % 2 != 0 && chi != 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullBordismFlags {
    pub real_null_bordant: bool,
    pub real_orientable: bool,
    pub oriented_null_bordant: bool,
    pub unoriented_null_bordant: bool,
    pub oriented_class: i64,
    pub forgetful_kernel: bool,
}

pub fn null_bordism_flags(k: &SimplicialComplex) -> NullBordismFlags {
    NullBordismFlags {
        real_null_bordant: null_bordant_real(k),
        real_orientable: orientable_real(k),
        oriented_null_bordant: null_bordant_oriented_complex(k),
        unoriented_null_bordant: null_bordant_unoriented_complex(k),
        oriented_class: oriented_class(k),
        forgetful_kernel: in_forgetful_kernel(k),
    }
}
