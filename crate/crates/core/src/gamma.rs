//! Square-free polynomial arithmetic in `Z[x_1..x_m, u]/(x_i² + u·x_i)` and
//! the universal coefficients `γ_{I,k}` with `c_I = Σ_k γ_{I,k} σ_k u^{m−1−k}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::arith::{binom, multinomial, sign};
use crate::complex::Face;
use crate::error::{Error, Result};
use crate::symfun::{matrix_a, partitions, transition_m, Partition};

/// Largest `m` accepted by the ring expansion of `γ`.
pub const GAMMA_MAX_M: usize = 10;
/// Largest `m` accepted by the partition-sum formula.
pub const PARTITION_FORMULA_MAX_M: usize = 8;

/// A reduced polynomial: a map from `(S, d)` to the coefficient of
/// `x_S u^d`, with `S` a square-free subset of `[m]`. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SquareFreeExpr {
    m: usize,
    terms: BTreeMap<(u64, u32), BigInt>,
}

impl fmt::Debug for SquareFreeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SquareFreeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (&(mask, d), c) in &self.terms {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let abs = c.abs();
            let mut factors: Vec<String> = Face::from_mask(mask)
                .vertices()
                .map(|v| format!("x{v}"))
                .collect();
            match d {
                0 => {}
                1 => factors.push("u".into()),
                _ => factors.push(format!("u^{d}")),
            }
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl SquareFreeExpr {
    pub fn zero(m: usize) -> Self {
        SquareFreeExpr { m, terms: BTreeMap::new() }
    }

    pub fn one(m: usize) -> Self {
        Self::monomial(m, Face::EMPTY, 0, BigInt::one())
    }

    /// `c · x_S u^d`.
    pub fn monomial(m: usize, s: Face, d: u32, c: BigInt) -> Self {
        let mut e = Self::zero(m);
        e.add_term(s, d, c);
        e
    }

    /// The variable `x_i` (1-based).
    pub fn x(m: usize, i: usize) -> Self {
        Self::monomial(m, Face::from_vertices([i]), 0, BigInt::one())
    }

    pub fn u(m: usize) -> Self {
        Self::monomial(m, Face::EMPTY, 1, BigInt::one())
    }

    /// `x′_i = x_i + u`.
    pub fn x_prime(m: usize, i: usize) -> Self {
        Self::x(m, i).add(&Self::u(m))
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(S, d, coefficient)` in key order.
    pub fn terms(&self) -> impl Iterator<Item = (Face, u32, &BigInt)> + '_ {
        self.terms.iter().map(|(&(s, d), c)| (Face::from_mask(s), d, c))
    }

    pub fn coefficient(&self, s: Face, d: u32) -> BigInt {
        self.terms.get(&(s.mask(), d)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, s: Face, d: u32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = (s.mask(), d);
        let entry = self.terms.entry(key).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(s, d), c) in &other.terms {
            out.add_term(Face::from_mask(s), d, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.m);
        }
        SquareFreeExpr {
            m: self.m,
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Product with every `x_i²` rewritten as `−u·x_i`, i.e.
    /// `x_S · x_T = (−u)^{|S∩T|} x_{S∪T}`.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "operands live over different [m]");
        let mut acc: HashMap<(u64, u32), BigInt> = HashMap::new();
        for (&(s, ds), cs) in &self.terms {
            for (&(t, dt), ct) in &other.terms {
                let overlap = (s & t).count_ones();
                let key = (s | t, ds + dt + overlap);
                let prod = cs * ct;
                let entry = acc.entry(key).or_default();
                if overlap % 2 == 0 {
                    *entry += prod;
                } else {
                    *entry -= prod;
                }
            }
        }
        SquareFreeExpr {
            m: self.m,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow(&self, n: usize) -> Self {
        (0..n).fold(Self::one(self.m), |acc, _| acc.multiply(self))
    }

    /// The part of total degree `deg` (with `deg(x_i) = deg(u) = 1`).
    pub fn graded_piece(&self, deg: usize) -> Self {
        SquareFreeExpr {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(&(s, d), _)| s.count_ones() as usize + d as usize == deg)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// `Some(deg)` if every term has total degree `deg`; `None` if mixed.
    /// The zero expression is homogeneous of every degree and reports
    /// `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(|&(s, d)| s.count_ones() as usize + d as usize);
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous_of(&self, deg: usize) -> bool {
        self.is_zero() || self.homogeneous_degree() == Some(deg)
    }

    /// Coefficients reduced modulo 2.
    pub fn mod2(&self) -> Self {
        SquareFreeExpr {
            m: self.m,
            terms: self
                .terms
                .iter()
                .filter(|(_, c)| c.is_odd())
                .map(|(k, _)| (*k, BigInt::one()))
                .collect(),
        }
    }

    /// For a homogeneous symmetric expression of degree `deg`, returns `v`
    /// with `self = Σ_k v[k] σ_k u^{deg−k}`.
    pub fn symmetric_collapse(&self, deg: usize, class: &str) -> Result<Vec<BigInt>> {
        if !self.is_homogeneous_of(deg) {
            return Err(Error::Degree { expected: deg });
        }
        let top = deg.min(self.m);
        let mut seen: Vec<Option<BigInt>> = vec![None; top + 1];
        let mut counts = vec![0u64; top + 1];
        for (&(s, _), c) in &self.terms {
            let k = s.count_ones() as usize;
            counts[k] += 1;
            match &seen[k] {
                None => seen[k] = Some(c.clone()),
                Some(prev) if prev != c => {
                    return Err(Error::Asymmetry { class: class.to_string(), size: k });
                }
                Some(_) => {}
            }
        }
        (0..=top)
            .map(|k| {
                let full = binom(self.m as i64, k as i64) as u64;
                match &seen[k] {
                    None => Ok(BigInt::zero()),
                    Some(c) if counts[k] == full => Ok(c.clone()),
                    Some(_) => Err(Error::Asymmetry { class: class.to_string(), size: k }),
                }
            })
            .collect()
    }
}

/// `σ_k = Σ_{|S|=k} x_S`.
pub fn elementary(m: usize, k: usize) -> SquareFreeExpr {
    let mut e = SquareFreeExpr::zero(m);
    for mask in 0..(1u64 << m) {
        if mask.count_ones() as usize == k {
            e.add_term(Face::from_mask(mask), 0, BigInt::one());
        }
    }
    e
}

/// `c_k`, the degree-`k` part of `Π_i (1 + 2x_i + u)`:
/// `Σ_S 2^{|S|} C(m−|S|, k−|S|) x_S u^{k−|S|}`.
pub fn chern_class(m: usize, k: usize) -> SquareFreeExpr {
    let mut e = SquareFreeExpr::zero(m);
    for mask in 0..(1u64 << m) {
        let s = mask.count_ones() as usize;
        if s <= k {
            let c = BigInt::from(binom((m - s) as i64, (k - s) as i64)) << s;
            e.add_term(Face::from_mask(mask), (k - s) as u32, c);
        }
    }
    e
}

/// `c_I = c_{i_1} ⋯ c_{i_p}` as a reduced expression.
pub fn chern_monomial(m: usize, partition: &Partition) -> SquareFreeExpr {
    partition
        .parts()
        .iter()
        .fold(SquareFreeExpr::one(m), |acc, &i| acc.multiply(&chern_class(m, i)))
}

/// `(γ_{I,0}, …, γ_{I,m−1})` for one partition `I ⊢ m−1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaVector {
    partition: Partition,
    values: Vec<BigInt>,
}

impl GammaVector {
    pub fn new(partition: Partition, values: Vec<BigInt>) -> Self {
        GammaVector { partition, values }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &BigInt {
        &self.values[k]
    }

    /// `⟨v, γ_I⟩`.
    pub fn pair(&self, v: &[i64]) -> BigInt {
        self.values.iter().zip(v).map(|(g, &a)| g * a).sum()
    }
}

fn check_partition(m: usize, partition: &Partition) -> Result<()> {
    if m < 2 {
        return Err(Error::MTooSmall { m });
    }
    if partition.weight() != m - 1 {
        return Err(Error::Partition(format!(
            "({partition}) has weight {} but m - 1 = {}",
            partition.weight(),
            m - 1
        )));
    }
    Ok(())
}

fn check_gamma_range(m: usize) -> Result<()> {
    if m > GAMMA_MAX_M {
        return Err(Error::Dimension { what: "gamma expansion", requirement: "m <= 10", m });
    }
    Ok(())
}

fn gamma_by_ring(m: usize, partition: &Partition) -> Result<Vec<BigInt>> {
    let expr = chern_monomial(m, partition);
    let mut values = expr.symmetric_collapse(m - 1, &format!("c_({partition})"))?;
    values.resize(m, BigInt::zero());
    Ok(values)
}

/// `γ_I` by expanding `c_I` in the reduced ring and reading off the
/// coefficient of `x_S u^{m−1−|S|}`, which must depend on `|S|` only.
pub fn gamma_vector(m: usize, partition: &Partition) -> Result<GammaVector> {
    check_partition(m, partition)?;
    check_gamma_range(m)?;
    let table = gamma_table(m)?;
    Ok(table.get(partition).expect("table covers every partition").clone())
}

/// All `γ_I` for `I ⊢ m−1`, in [`partitions`] order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaTable {
    m: usize,
    entries: Vec<GammaVector>,
}

impl GammaTable {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn entries(&self) -> &[GammaVector] {
        &self.entries
    }

    pub fn get(&self, partition: &Partition) -> Option<&GammaVector> {
        self.entries.iter().find(|g| g.partition() == partition)
    }
}

fn table_cache() -> &'static Mutex<HashMap<usize, Arc<GammaTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<GammaTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The full γ-table for `m`, computed once per process.
pub fn gamma_table(m: usize) -> Result<Arc<GammaTable>> {
    if m < 2 {
        return Err(Error::MTooSmall { m });
    }
    check_gamma_range(m)?;
    if let Some(t) = table_cache().lock().expect("gamma cache poisoned").get(&m) {
        return Ok(Arc::clone(t));
    }
    let entries = partitions(m - 1)
        .into_par_iter()
        .map(|p| gamma_by_ring(m, &p).map(|v| GammaVector::new(p, v)))
        .collect::<Result<Vec<_>>>()?;
    let table = Arc::new(GammaTable { m, entries });
    table_cache()
        .lock()
        .expect("gamma cache poisoned")
        .entry(m)
        .or_insert_with(|| Arc::clone(&table));
    Ok(table)
}

/// `γ_I` by the closed partition sum: over splittings `i_t = r_t + s_t`,
/// `0 ≤ j_t ≤ s_t`, with `λ` the parts `{r_t, j_t}` and `μ ⊢ |λ|`,
/// `Π_t C(m−j_t, s_t−j_t) · M_{λμ} · (−1)^{|μ|−l(μ)} · l(μ)!/Π d_i^μ!`
/// contributes to `γ_{I,l(μ)}`.
pub fn gamma_partition_sum(m: usize, partition: &Partition) -> Result<Vec<BigInt>> {
    check_partition(m, partition)?;
    if m > PARTITION_FORMULA_MAX_M {
        return Err(Error::Dimension {
            what: "partition formula for gamma",
            requirement: "m <= 8",
            m,
        });
    }
    let mut by_weight: Vec<Vec<(Partition, BigInt)>> = Vec::with_capacity(m);
    for w in 0..m {
        by_weight.push(
            partitions(w)
                .into_iter()
                .map(|mu| {
                    let c = multinomial(&mu.multiplicities()) * sign((w - mu.len()) as i64);
                    (mu, c)
                })
                .collect(),
        );
    }
    let mut gamma = vec![BigInt::zero(); m];
    let mut parts = Vec::with_capacity(2 * partition.len());
    splittings(m, partition.parts(), &mut parts, BigInt::one(), &mut |parts, weight| {
        let lambda = Partition::new(parts.to_vec());
        for (mu, c) in &by_weight[lambda.weight()] {
            let count = transition_m(&lambda, mu);
            if count != 0 {
                gamma[mu.len()] += weight * c * BigInt::from(count);
            }
        }
    });
    Ok(gamma)
}

fn splittings(
    m: usize,
    rest: &[usize],
    parts: &mut Vec<usize>,
    weight: BigInt,
    visit: &mut dyn FnMut(&[usize], &BigInt),
) {
    let Some((&i, tail)) = rest.split_first() else {
        visit(parts, &weight);
        return;
    };
    for r in 0..=i {
        let s = i - r;
        for j in 0..=s {
            let b = binom((m - j) as i64, (s - j) as i64);
            if b == 0 {
                continue;
            }
            parts.push(r);
            parts.push(j);
            splittings(m, tail, parts, &weight * b, visit);
            parts.pop();
            parts.pop();
        }
    }
}

/// The partition-sum route, required to agree with [`gamma_vector`].
pub fn gamma_via_partition_formula(m: usize, partition: &Partition) -> Result<GammaVector> {
    let by_sum = gamma_partition_sum(m, partition)?;
    let by_ring = gamma_vector(m, partition)?;
    if by_sum != by_ring.values() {
        return Err(Error::InternalMismatch {
            what: "gamma-vector",
            detail: format!(
                "m = {m}, I = ({partition}): partition sum {by_sum:?}, ring {:?}",
                by_ring.values()
            ),
        });
    }
    Ok(by_ring)
}

/// `c_I[(CP¹)^j × CP^{m−j−1}] = 2^j Σ_{j_1+⋯+j_p = j, j_t ≤ i_t}
/// C(j; j_1..j_p) Π_t C(m−j, i_t−j_t)`.
pub fn product_chern(m: usize, j: usize, partition: &Partition) -> Result<BigInt> {
    check_partition(m, partition)?;
    if j >= m {
        return Err(Error::Dimension { what: "product_chern", requirement: "j <= m - 1", m });
    }
    let parts = partition.parts();
    let mut total = BigInt::zero();
    let mut js = vec![0usize; parts.len()];
    compositions(parts, 0, j, &mut js, &mut |js| {
        let mut term = multinomial(js);
        for (&i, &jt) in parts.iter().zip(js) {
            term *= binom((m - j) as i64, (i - jt) as i64);
        }
        total += term;
    });
    Ok(total << j)
}

fn compositions(
    caps: &[usize],
    t: usize,
    left: usize,
    js: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if t == caps.len() {
        if left == 0 {
            visit(js);
        }
        return;
    }
    for jt in 0..=caps[t].min(left) {
        js[t] = jt;
        compositions(caps, t + 1, left - jt, js, visit);
    }
    js[t] = 0;
}

/// Whether `γ_{I,j} ≡ c_I[(CP¹)^j × CP^{m−j−1}] (mod 2)` for every `j`.
pub fn gamma_mod2_agrees(m: usize, partition: &Partition) -> Result<bool> {
    let gamma = gamma_vector(m, partition)?;
    for j in 0..m {
        let p = product_chern(m, j, partition)?;
        if (gamma.get(j) - p).is_odd() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `Aᵗ γ_I = γ_I`.
pub fn is_eigenvector(gamma: &GammaVector) -> bool {
    let m = gamma.values().len();
    matrix_a(m).transpose_apply_big(gamma.values()) == gamma.values()
}
