//! Characteristic numbers and genera of `X_K` and `X_K^R` from closed
//! formulas in the α-vector and Euler characteristic.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::binom;
use crate::bier::{h_vector_bier, BierSphere};
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::gamma::{gamma_table, GAMMA_MAX_M};
use crate::symfun::{format_rational, partitions, todd_coefficients, Partition};
use crate::vectors::{alpha_vector, Mode};

/// Largest `m` for which the Todd polynomial is expanded.
pub const TODD_MAX_M: usize = 8;

fn require_partition(partition: &Partition, n: usize) -> Result<()> {
    if partition.weight() != n {
        return Err(Error::Partition(format!(
            "({partition}) has weight {}, expected {n}",
            partition.weight()
        )));
    }
    Ok(())
}

fn prod_binom(m: usize, partition: &Partition) -> BigInt {
    partition
        .parts()
        .iter()
        .fold(BigInt::one(), |acc, &i| acc * BigInt::from(binom(m as i64, i as i64)))
}

/// `c_I[X_K] = ⟨α(K), γ_I⟩`.
pub fn chern_number(k: &SimplicialComplex, partition: &Partition) -> Result<BigInt> {
    require_partition(partition, k.m() - 1)?;
    let alpha = alpha_vector(k, Mode::Checked)?;
    let table = gamma_table(k.m())?;
    Ok(table.get(partition).expect("table covers every partition").pair(&alpha))
}

/// Every Chern number of `X_K`, in [`partitions`] order.
pub fn all_chern_numbers(k: &SimplicialComplex) -> Result<Vec<(Partition, BigInt)>> {
    let alpha = alpha_vector(k, Mode::Checked)?;
    let table = gamma_table(k.m())?;
    Ok(table
        .entries()
        .iter()
        .map(|g| (g.partition().clone(), g.pair(&alpha)))
        .collect())
}

/// `s_{m−1}[X_K] = m·α_0 + ((−1)^m + 1)·α_1`.
pub fn milnor_number(k: &SimplicialComplex) -> Result<i64> {
    let alpha = alpha_vector(k, Mode::Checked)?;
    Ok(milnor_from_alpha(&alpha))
}

pub fn milnor_from_alpha(alpha: &[i64]) -> i64 {
    let m = alpha.len() as i64;
    let twist = if m % 2 == 0 { 2 } else { 0 };
    m * alpha[0] + twist * alpha[1]
}

/// `m_n`: `p` when `n + 1` is a power of the prime `p`, otherwise 1.
pub fn milnor_divisor(n: usize) -> i64 {
    let mut q = n + 1;
    if q < 2 {
        return 1;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).expect("q >= 2 has a prime factor");
    while q.is_multiple_of(p) {
        q /= p;
    }
    if q == 1 {
        p as i64
    } else {
        1
    }
}

/// `χ_y(X_K)` as a polynomial in `−y`, computed from `α` and from the
/// h-vector of the Bier sphere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiYPolynomial {
    from_alpha: Vec<i64>,
    from_h: Vec<i64>,
}

impl ChiYPolynomial {
    /// Coefficients of `(−y)^p`, `p = 0..m−1`.
    pub fn coefficients(&self) -> &[i64] {
        &self.from_alpha
    }

    pub fn from_alpha(&self) -> &[i64] {
        &self.from_alpha
    }

    pub fn from_h(&self) -> &[i64] {
        &self.from_h
    }

    /// Value at the given `y`.
    pub fn eval(&self, y: i64) -> i64 {
        let z = -y;
        self.from_alpha.iter().rev().fold(0, |acc, &c| acc * z + c)
    }

    /// `χ_{−1} = χ(X_K)`.
    pub fn euler_characteristic(&self) -> i64 {
        self.eval(-1)
    }

    /// `χ_0 = Td(X_K)`.
    pub fn todd(&self) -> i64 {
        self.eval(0)
    }

    /// `χ_1 = sign(X_K)`.
    pub fn signature(&self) -> i64 {
        self.eval(1)
    }

    pub fn is_palindromic(&self) -> bool {
        let c = &self.from_alpha;
        c.iter().eq(c.iter().rev())
    }
}

/// `Σ_k α_k (1+z)^k (1 + z + ⋯ + z^{m−k−1})` with `z = −y`.
pub fn chi_y_from_alpha(alpha: &[i64]) -> Vec<i64> {
    let m = alpha.len();
    let mut out = vec![0i64; m];
    for (k, &a) in alpha.iter().enumerate() {
        for i in 0..m - k {
            for (t, slot) in out.iter_mut().enumerate().skip(i).take(k + 1) {
                *slot += a * binom(k as i64, (t - i) as i64);
            }
        }
    }
    out
}

pub fn chi_y(k: &SimplicialComplex) -> Result<ChiYPolynomial> {
    let alpha = alpha_vector(k, Mode::Checked)?;
    let from_alpha = chi_y_from_alpha(&alpha);
    let from_h = h_vector_bier(k);
    if from_alpha != from_h {
        return Err(Error::InternalMismatch {
            what: "chi_y genus",
            detail: format!("alpha route {from_alpha:?}, h route {from_h:?} for {k}"),
        });
    }
    Ok(ChiYPolynomial { from_alpha, from_h })
}

/// `χ(X_K)`, required to agree across `χ_{−1}`, `Σ α_p 2^p (m−p)` and the
/// facet count of the Bier sphere.
pub fn euler_characteristic_x(k: &SimplicialComplex) -> Result<i64> {
    let chi = chi_y(k)?.euler_characteristic();
    let alpha = alpha_vector(k, Mode::Checked)?;
    let m = k.m() as i64;
    let by_alpha: i64 = alpha
        .iter()
        .enumerate()
        .map(|(p, &a)| a * (1i64 << p) * (m - p as i64))
        .sum();
    let facets = BierSphere::new(k).facets().len() as i64;
    if chi != by_alpha || chi != facets {
        return Err(Error::InternalMismatch {
            what: "Euler characteristic of X_K",
            detail: format!("chi_-1 = {chi}, alpha sum = {by_alpha}, Bier facets = {facets}"),
        });
    }
    Ok(chi)
}

/// `sign(X_K) = χ_1`, which is `1 − χ(K)` for odd `m` and 0 for even `m`.
pub fn signature(k: &SimplicialComplex) -> Result<i64> {
    let sig = chi_y(k)?.signature();
    let expected = if k.m() % 2 == 1 { 1 - k.euler_characteristic() } else { 0 };
    if sig != expected {
        return Err(Error::InternalMismatch {
            what: "signature",
            detail: format!("chi_1 = {sig}, closed form = {expected} for {k}"),
        });
    }
    Ok(sig)
}

/// `ξ_k = Σ_{I ⊢ m−1} τ_I γ_{I,k}` for `k = 0..m−1`.
pub fn xi_values(m: usize) -> Result<Vec<BigRational>> {
    if m > TODD_MAX_M {
        return Err(Error::Dimension { what: "Todd expansion", requirement: "m <= 8", m });
    }
    let table = gamma_table(m)?;
    let taus = todd_coefficients(m - 1);
    Ok((0..m)
        .map(|k| {
            taus.iter()
                .map(|(p, tau)| {
                    let g = table.get(p).expect("table covers every partition").get(k);
                    tau * BigRational::from_integer(g.clone())
                })
                .sum()
        })
        .collect())
}

/// `Td_{m−1}[X_K] = Σ_I τ_I c_I[X_K]`.
pub fn todd_genus(k: &SimplicialComplex) -> Result<BigRational> {
    if k.m() > TODD_MAX_M {
        return Err(Error::Dimension { what: "Todd expansion", requirement: "m <= 8", m: k.m() });
    }
    let chern = all_chern_numbers(k)?;
    let taus = todd_coefficients(k.m() - 1);
    Ok(taus
        .iter()
        .zip(&chern)
        .map(|((_, tau), (_, c))| tau * BigRational::from_integer(c.clone()))
        .sum())
}

pub fn todd_check(k: &SimplicialComplex) -> Result<bool> {
    Ok(todd_genus(k)?.is_one())
}

fn require_odd(k: &SimplicialComplex) -> Result<usize> {
    let m = k.m();
    if m.is_multiple_of(2) {
        return Err(Error::Dimension { what: "Pontryagin numbers", requirement: "odd m", m });
    }
    Ok((m - 1) / 2)
}

/// `p_I[X_K] = (1 − χ(K)) Π_t C(m, i_t)` for odd `m = 2n + 1`, `I ⊢ n`.
pub fn pontryagin_number(k: &SimplicialComplex, partition: &Partition) -> Result<BigInt> {
    let n = require_odd(k)?;
    require_partition(partition, n)?;
    Ok(prod_binom(k.m(), partition) * (1 - k.euler_characteristic()))
}

pub fn all_pontryagin_numbers(k: &SimplicialComplex) -> Result<Vec<(Partition, BigInt)>> {
    let n = require_odd(k)?;
    partitions(n)
        .into_iter()
        .map(|p| pontryagin_number(k, &p).map(|v| (p, v)))
        .collect()
}

fn bit(v: BigInt) -> u8 {
    u8::from(v.is_odd())
}

/// `w_I[X_K^R] = (1 + χ(K)) Π_t C(m, i_t) mod 2`, `I ⊢ m−1`.
pub fn sw_number_real(k: &SimplicialComplex, partition: &Partition) -> Result<u8> {
    require_partition(partition, k.m() - 1)?;
    Ok(bit(prod_binom(k.m(), partition) * (1 + k.euler_characteristic())))
}

/// `w_{2i_1}⋯w_{2i_p}[X_K] = (1 − χ(K)) Π_t C(m, i_t) mod 2`, `I ⊢ m−1`;
/// checked against `c_I[X_K] mod 2` when the γ-table is available.
pub fn sw_number_complex(k: &SimplicialComplex, partition: &Partition) -> Result<u8> {
    require_partition(partition, k.m() - 1)?;
    let closed = bit(prod_binom(k.m(), partition) * (1 - k.euler_characteristic()));
    if k.m() <= GAMMA_MAX_M {
        let by_chern = bit(chern_number(k, partition)?);
        if by_chern != closed {
            return Err(Error::InternalMismatch {
                what: "complex Stiefel-Whitney number",
                detail: format!("({partition}): closed form {closed}, c_I mod 2 = {by_chern}"),
            });
        }
    }
    Ok(closed)
}

pub fn all_sw_numbers_real(k: &SimplicialComplex) -> Result<Vec<(Partition, u8)>> {
    partitions(k.m() - 1)
        .into_iter()
        .map(|p| sw_number_real(k, &p).map(|v| (p, v)))
        .collect()
}

pub fn all_sw_numbers_complex(k: &SimplicialComplex) -> Result<Vec<(Partition, u8)>> {
    partitions(k.m() - 1)
        .into_iter()
        .map(|p| sw_number_complex(k, &p).map(|v| (p, v)))
        .collect()
}

/// The partition `(2^{i_1}, …, 2^{i_p})` of `m − 1` read off its binary
/// expansion.
pub fn binary_partition(m: usize) -> Partition {
    let n = m - 1;
    Partition::new((0..usize::BITS).filter(|b| n >> b & 1 == 1).map(|b| 1usize << b).collect())
}

/// `L_2[X] = (7 p_2 − p_1²)/45` evaluated from Pontryagin numbers.
pub fn l2_signature(p2: &BigInt, p11: &BigInt) -> BigRational {
    BigRational::new(BigInt::from(7) * p2 - p11, BigInt::from(45))
}

/// Immersion obstructions for `X_K^R`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImmersionBounds {
    pub m: usize,
    /// `p` with `2^{p−1} < m ≤ 2^p`.
    pub p: u32,
    pub k_max: usize,
    pub n_real_min: usize,
    pub n_complex_min: usize,
}

pub fn immersion_bounds_for_m(m: usize) -> ImmersionBounds {
    let p = m.next_power_of_two().trailing_zeros();
    let top = (1usize << p) - 1;
    ImmersionBounds { m, p, k_max: top - (m - 1), n_real_min: top, n_complex_min: 2 * top }
}

pub fn immersion_bounds(k: &SimplicialComplex) -> ImmersionBounds {
    immersion_bounds_for_m(k.m())
}

/// `X^R_{K_1} × ⋯ × X^R_{K_t}` of dimension `n`, one factor per binary digit
/// of `n`, which admits no immersion below dimension `2n − α(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharpImmersionFamily {
    n: usize,
    factors: Vec<SimplicialComplex>,
}

impl SharpImmersionFamily {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn factors(&self) -> &[SimplicialComplex] {
        &self.factors
    }

    /// `2n − α(n)`.
    pub fn bound(&self) -> usize {
        2 * self.n - self.n.count_ones() as usize
    }

    /// `n + Σ_j k_max(m_j)`, the bound assembled factor by factor.
    pub fn product_bound(&self) -> usize {
        self.n + self.factors.iter().map(|k| immersion_bounds(k).k_max).sum::<usize>()
    }
}

pub fn sharp_immersion_family(n: usize) -> Result<SharpImmersionFamily> {
    if n < 2 {
        return Err(Error::Dimension { what: "sharp immersion family", requirement: "n >= 2", m: n });
    }
    let factors = (0..usize::BITS)
        .rev()
        .filter(|b| n >> b & 1 == 1)
        .map(|b| SimplicialComplex::boundary_simplex((1usize << b) + 1))
        .collect::<Result<Vec<_>>>()?;
    Ok(SharpImmersionFamily { n, factors })
}

/// One partition-indexed entry of a report table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberEntry {
    pub partition: String,
    #[serde(with = "crate::serde_big")]
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BitEntry {
    pub partition: String,
    pub value: u8,
}

/// Every characteristic number and genus of `X_K` and `X_K^R`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacteristicNumberReport {
    pub m: usize,
    /// Absent when `m` exceeds the γ-expansion range.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub chern: Option<Vec<NumberEntry>>,
    pub pontryagin: Vec<NumberEntry>,
    pub sw_real: Vec<BitEntry>,
    pub sw_complex: Vec<BitEntry>,
    pub chi_y: Vec<i64>,
    pub euler_characteristic: i64,
    pub signature: i64,
    pub todd: i64,
    /// `Σ τ_I c_I[X_K]` as `p/q`, when the Todd expansion is in range.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub todd_from_chern: Option<String>,
    pub milnor: i64,
    pub immersion: ImmersionBounds,
}

fn entries(v: Vec<(Partition, BigInt)>) -> Vec<NumberEntry> {
    v.into_iter()
        .map(|(p, value)| NumberEntry { partition: p.to_string(), value })
        .collect()
}

fn bit_entries(v: Vec<(Partition, u8)>) -> Vec<BitEntry> {
    v.into_iter()
        .map(|(p, value)| BitEntry { partition: p.to_string(), value })
        .collect()
}

pub fn characteristic_report(k: &SimplicialComplex) -> Result<CharacteristicNumberReport> {
    let m = k.m();
    let chi_y = chi_y(k)?;
    let chern = if m <= GAMMA_MAX_M { Some(entries(all_chern_numbers(k)?)) } else { None };
    let todd_from_chern = if m <= TODD_MAX_M {
        let td = todd_genus(k)?;
        if !td.is_one() {
            return Err(Error::InternalMismatch {
                what: "Todd genus",
                detail: format!("sum of tau_I c_I = {}", format_rational(&td)),
            });
        }
        Some(format_rational(&td))
    } else {
        None
    };
    let pontryagin = if m % 2 == 1 { entries(all_pontryagin_numbers(k)?) } else { Vec::new() };
    let todd = chi_y.todd();
    if todd != 1 {
        return Err(Error::InternalMismatch { what: "Todd genus", detail: format!("chi_0 = {todd}") });
    }
    Ok(CharacteristicNumberReport {
        m,
        chern,
        pontryagin,
        sw_real: bit_entries(all_sw_numbers_real(k)?),
        sw_complex: bit_entries(all_sw_numbers_complex(k)?),
        chi_y: chi_y.coefficients().to_vec(),
        euler_characteristic: euler_characteristic_x(k)?,
        signature: signature(k)?,
        todd,
        todd_from_chern,
        milnor: milnor_number(k)?,
        immersion: immersion_bounds(k),
    })
}

/// Whether `Σ_k α_k = 1`, i.e. `χ_0 = 1` read directly off `α`.
pub fn alpha_sums_to_one(alpha: &[i64]) -> bool {
    alpha.iter().sum::<i64>() == 1
}
