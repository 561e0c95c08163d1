//! Partitions, the elementary-to-monomial transition counts, the involutive
//! matrices relating f-, α- and μ-vectors, Stirling numbers and the Todd
//! polynomial in the Chern-class basis.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binom, factorial, sign};
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Sorts the parts into decreasing order and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, `l(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part multiplicities `d_i`, for `i = 1..=max part`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let max = self.0.first().copied().unwrap_or(0);
        let mut d = vec![0; max];
        for &p in &self.0 {
            d[p - 1] += 1;
        }
        d
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::default());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Partition(format!("bad part {:?} in {s:?}", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Partition::new(parts))
    }
}

/// All partitions of `n` in reverse-lexicographic order, e.g.
/// `(3), (2,1), (1,1,1)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn transition_cache() -> &'static Mutex<HashMap<(Partition, Partition), u128>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), u128>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `M_{λμ}`: the number of 0-1 matrices with row sums `λ` and column sums
/// `μ`, i.e. the coefficient of `m_μ` in `e_λ`.
pub fn transition_m(lambda: &Partition, mu: &Partition) -> u128 {
    if lambda.weight() != mu.weight() {
        return 0;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = transition_cache().lock().unwrap().get(&key) {
        return v;
    }
    let mut memo = HashMap::new();
    let v = count_matrices(lambda.parts().to_vec(), mu.parts(), &mut memo);
    transition_cache().lock().unwrap().insert(key, v);
    v
}

/// Gale–Ryser: rows `r` (decreasing) and columns `c` admit a 0-1 matrix iff
/// the sums agree and every prefix of `r` is bounded by `Σ_j min(c_j, k)`.
fn gale_ryser(rows: &[usize], cols: &[usize]) -> bool {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return false;
    }
    let mut prefix = 0;
    for (k, &r) in rows.iter().enumerate() {
        prefix += r;
        let cap: usize = cols.iter().map(|&c| c.min(k + 1)).sum();
        if prefix > cap {
            return false;
        }
    }
    true
}

/// Backtracks over columns; rows with equal remaining capacity are
/// interchangeable, so each column picks a count per capacity class.
fn count_matrices(
    rows: Vec<usize>,
    cols: &[usize],
    memo: &mut HashMap<(usize, Vec<usize>), u128>,
) -> u128 {
    let mut rows = rows;
    rows.retain(|&r| r > 0);
    rows.sort_unstable_by(|a, b| b.cmp(a));
    if cols.is_empty() {
        return u128::from(rows.is_empty());
    }
    if !gale_ryser(&rows, cols) {
        return 0;
    }
    let key = (cols.len(), rows.clone());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    // Capacity classes: (capacity, count).
    let mut classes: Vec<(usize, usize)> = Vec::new();
    for &r in &rows {
        match classes.last_mut() {
            Some((cap, n)) if *cap == r => *n += 1,
            _ => classes.push((r, 1)),
        }
    }
    let need = cols[0];
    let mut total = 0u128;
    let mut picks = vec![0usize; classes.len()];
    fn choose(
        idx: usize,
        left: usize,
        classes: &[(usize, usize)],
        picks: &mut Vec<usize>,
        cols: &[usize],
        memo: &mut HashMap<(usize, Vec<usize>), u128>,
        total: &mut u128,
    ) {
        if idx == classes.len() {
            if left != 0 {
                return;
            }
            let mut weight = 1u128;
            let mut next = Vec::new();
            for (&(cap, n), &k) in classes.iter().zip(picks.iter()) {
                weight *= binom(n as i64, k as i64) as u128;
                next.extend(std::iter::repeat_n(cap - 1, k));
                next.extend(std::iter::repeat_n(cap, n - k));
            }
            *total += weight * count_matrices(next, &cols[1..], memo);
            return;
        }
        let remaining: usize = classes[idx..].iter().map(|c| c.1).sum();
        if remaining < left {
            return;
        }
        for k in 0..=classes[idx].1.min(left) {
            picks[idx] = k;
            choose(idx + 1, left - k, classes, picks, cols, memo, total);
        }
        picks[idx] = 0;
    }
    choose(0, need, &classes, &mut picks, cols, memo, &mut total);
    memo.insert(key, total);
    total
}

/// Which of the two involutions a matrix represents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixRole {
    /// `μ = A·α`.
    A,
    /// `α = B·f̃` on the sign-twisted f-vector `f̃_j = (−1)^j f_{j−1}`.
    B,
}

/// An exact integer `m×m` matrix whose square is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvolutionMatrix {
    role: MatrixRole,
    entries: Vec<Vec<i64>>,
}

impl InvolutionMatrix {
    pub fn role(&self) -> MatrixRole {
        self.role
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row][col]
    }

    pub fn transpose(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n).map(|i| (0..n).map(|j| self.entries[j][i]).collect()).collect()
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn apply_big(&self, v: &[BigInt]) -> Vec<BigInt> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| BigInt::from(*a) * b).sum())
            .collect()
    }

    pub fn transpose_apply_big(&self, v: &[BigInt]) -> Vec<BigInt> {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|k| BigInt::from(self.entries[k][i]) * &v[k]).sum())
            .collect()
    }

    pub fn square(&self) -> Vec<Vec<i64>> {
        let n = self.size();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| self.entries[i][k] * self.entries[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    pub fn is_involution(&self) -> bool {
        let n = self.size();
        let sq = self.square();
        (0..n).all(|i| (0..n).all(|j| sq[i][j] == i64::from(i == j)))
    }
}

/// `a_{k,j} = (−1)^{m−k−1} C(m−j, k−j)`, lower triangular.
pub fn matrix_a(m: usize) -> InvolutionMatrix {
    let mi = m as i64;
    let entries = (0..mi)
        .map(|k| {
            (0..mi)
                .map(|j| if j <= k { sign(mi - k - 1) * binom(mi - j, k - j) } else { 0 })
                .collect()
        })
        .collect();
    InvolutionMatrix { role: MatrixRole::A, entries }
}

/// `b_{k,j} = (−1)^k C(j, k)`, upper triangular; `α = B·f̃` with
/// `f̃_j = (−1)^j f_{j−1}`.
pub fn matrix_b(m: usize) -> InvolutionMatrix {
    let mi = m as i64;
    let entries = (0..mi)
        .map(|k| (0..mi).map(|j| sign(k) * binom(j, k)).collect())
        .collect();
    InvolutionMatrix { role: MatrixRole::B, entries }
}

/// `f̃_j = (−1)^j f_{j−1}`: the vector `B` acts on.
pub fn sign_twist(f: &[i64]) -> Vec<i64> {
    f.iter().enumerate().map(|(j, &x)| sign(j as i64) * x).collect()
}

/// Stirling numbers of the second kind, `S(n, k)`.
pub fn stirling2(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![0u128; n + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=i.min(n)).rev() {
            row[j] = j as u128 * row[j] + row[j - 1];
        }
        row[0] = 0;
    }
    row[k]
}

/// Coefficients of `x/(1 − e^{−x})` up to degree `n`.
fn todd_series(n: usize) -> Vec<BigRational> {
    // g(x) = (1 − e^{−x})/x = Σ (−1)^k x^k/(k+1)!
    let g: Vec<BigRational> = (0..=n)
        .map(|k| {
            let s = BigInt::from(sign(k as i64));
            BigRational::new(s, factorial(k + 1))
        })
        .collect();
    let mut b = vec![BigRational::one()];
    for d in 1..=n {
        let mut acc = BigRational::zero();
        for k in 1..=d {
            acc += &g[k] * &b[d - k];
        }
        b.push(-acc);
    }
    b
}

/// The degree-`n` Todd polynomial as `Σ_I τ_I c_I`, one entry per partition
/// of `n` in [`partitions`] order.
///
/// `Π_i x_i/(1−e^{−x_i})` has monomial-basis coefficient `Π_j b_{λ_j}` at
/// `m_λ`; the elementary basis is recovered by solving
/// `Σ_μ τ_μ M_{μλ} = t_λ` exactly.
pub fn todd_coefficients(n: usize) -> Vec<(Partition, BigRational)> {
    let series = todd_series(n);
    let parts = partitions(n);
    let size = parts.len();
    let target: Vec<BigRational> = parts
        .iter()
        .map(|l| l.parts().iter().fold(BigRational::one(), |acc, &p| acc * &series[p]))
        .collect();
    // Row λ, column μ: M_{μλ}.
    let mut rows: Vec<Vec<BigRational>> = parts
        .iter()
        .zip(&target)
        .map(|(lambda, t)| {
            let mut row: Vec<BigRational> = parts
                .iter()
                .map(|mu| BigRational::from_integer(BigInt::from(transition_m(mu, lambda))))
                .collect();
            row.push(t.clone());
            row
        })
        .collect();
    for col in 0..size {
        let pivot = (col..size)
            .find(|&r| !rows[r][col].is_zero())
            .expect("transition matrix is invertible");
        rows.swap(col, pivot);
        let p = rows[col][col].clone();
        for x in rows[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..size {
            if r != col && !rows[r][col].is_zero() {
                let f = rows[r][col].clone();
                for c in col..=size {
                    let v = &rows[col][c] * &f;
                    rows[r][c] -= v;
                }
            }
        }
    }
    parts.into_iter().zip(rows.into_iter().map(|r| r[size].clone())).collect()
}

/// Renders an exact rational as `p/q` (or `p` when integral).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `c_I[CP^n] = Π_t C(n+1, i_t)`.
pub fn chern_number_projective(n: usize, partition: &Partition) -> BigInt {
    partition
        .parts()
        .iter()
        .fold(BigInt::one(), |acc, &i| acc * BigInt::from(binom(n as i64 + 1, i as i64)))
}

/// Todd genus `Σ τ_I c_I[CP^n]` of projective space.
pub fn todd_genus_projective(n: usize) -> BigRational {
    todd_coefficients(n)
        .iter()
        .map(|(p, t)| t * BigRational::from_integer(chern_number_projective(n, p)))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// All 0-1 matrices with the given margins, by exhaustive enumeration.
    fn brute_transition(rows: &[usize], cols: &[usize]) -> u128 {
        let cells = rows.len() * cols.len();
        if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
            return 0;
        }
        let mut count = 0;
        for mask in 0u64..(1 << cells) {
            let ok_rows = rows.iter().enumerate().all(|(i, &r)| {
                (0..cols.len()).filter(|&j| mask >> (i * cols.len() + j) & 1 == 1).count() == r
            });
            let ok_cols = cols.iter().enumerate().all(|(j, &c)| {
                (0..rows.len()).filter(|&i| mask >> (i * cols.len() + j) & 1 == 1).count() == c
            });
            if ok_rows && ok_cols {
                count += 1;
            }
        }
        count
    }

    /// Set partitions of {0..n} into exactly k blocks, by restricted growth
    /// strings.
    fn brute_stirling(n: usize, k: usize) -> u128 {
        fn rec(i: usize, n: usize, blocks: usize, k: usize) -> u128 {
            if i == n {
                return u128::from(blocks == k);
            }
            let mut total = 0;
            for b in 0..=blocks {
                let nb = if b == blocks { blocks + 1 } else { blocks };
                if nb <= k {
                    total += rec(i + 1, n, nb, k);
                }
            }
            total
        }
        rec(0, n, 0, k)
    }

    #[test]
    fn partition_enumeration() {
        assert_eq!(partitions(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
        assert_eq!(partitions(0), vec![Partition::default()]);
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(10).len(), 42);
        assert_eq!(partitions(30).len(), 5604);
    }

    #[test]
    fn partition_parsing_and_display() {
        let x: Partition = "1,1,2".parse().unwrap();
        assert_eq!(x, p(&[2, 1, 1]));
        assert_eq!(x.to_string(), "2,1,1");
        assert_eq!(x.weight(), 4);
        assert_eq!(x.len(), 3);
        assert_eq!(x.multiplicities(), vec![2, 1]);
        assert_eq!(p(&[3, 0, 1]), p(&[1, 3]));
        assert!("1,a".parse::<Partition>().is_err());
    }

    #[test]
    fn transition_examples_match_brute_force() {
        assert_eq!(brute_transition(&[1, 1], &[2]), 1);
        assert_eq!(transition_m(&p(&[1, 1]), &p(&[2])), 1);
        assert_eq!(brute_transition(&[2], &[1, 1]), 1);
        assert_eq!(transition_m(&p(&[2]), &p(&[1, 1])), 1);
        assert_eq!(transition_m(&p(&[1]), &p(&[2])), 0);
    }

    #[test]
    fn transition_matches_brute_force_up_to_weight_6() {
        for n in 1..=6 {
            for l in partitions(n) {
                for mu in partitions(n) {
                    if l.len() * mu.len() > 20 {
                        continue;
                    }
                    assert_eq!(
                        transition_m(&l, &mu),
                        brute_transition(l.parts(), mu.parts()),
                        "{l:?} {mu:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn transition_is_symmetric() {
        for n in 1..=8 {
            for l in partitions(n) {
                for mu in partitions(n) {
                    assert_eq!(transition_m(&l, &mu), transition_m(&mu, &l));
                }
            }
        }
    }

    #[test]
    fn matrix_a_fixture() {
        let a = matrix_a(4);
        assert_eq!(
            a.transpose(),
            vec![
                vec![-1, 4, -6, 4],
                vec![0, 1, -3, 3],
                vec![0, 0, -1, 2],
                vec![0, 0, 0, 1]
            ]
        );
        assert_eq!(matrix_a(2).rows(), &[vec![-1, 0], vec![2, 1]]);
    }

    #[test]
    fn matrices_are_involutions() {
        for m in 2..=12 {
            assert!(matrix_a(m).is_involution(), "A({m})");
            assert!(matrix_b(m).is_involution(), "B({m})");
        }
    }

    #[test]
    fn matrix_b_on_e1() {
        let f = [1, 4, 3, 1];
        assert_eq!(matrix_b(4).apply(&sign_twist(&f)), vec![-1, 1, 0, 1]);
    }

    #[test]
    fn stirling_values() {
        assert_eq!(brute_stirling(4, 2), 7);
        assert_eq!(stirling2(4, 2), 7);
        for n in 0..=8 {
            for k in 0..=n {
                assert_eq!(stirling2(n, k), brute_stirling(n, k), "S({n},{k})");
            }
        }
        assert_eq!(stirling2(7, 7), 1);
        assert_eq!(stirling2(5, 0), 0);
        assert_eq!(stirling2(0, 0), 1);
    }

    #[test]
    fn stirling_falling_factorial_identity() {
        for x in 0..=8i128 {
            for n in 0..=6usize {
                let rhs: i128 = (0..=n)
                    .map(|k| {
                        let falling: i128 = (0..k as i128).map(|i| x - i).product();
                        stirling2(n, k) as i128 * falling
                    })
                    .sum();
                assert_eq!(x.pow(n as u32), rhs);
            }
        }
    }

    #[test]
    fn todd_tables() {
        let t1 = todd_coefficients(1);
        assert_eq!(t1, vec![(p(&[1]), q(1, 2))]);
        let t2: BTreeMap<_, _> = todd_coefficients(2).into_iter().collect();
        assert_eq!(t2[&p(&[1, 1])], q(1, 12));
        assert_eq!(t2[&p(&[2])], q(1, 12));
        let t3: BTreeMap<_, _> = todd_coefficients(3).into_iter().collect();
        assert_eq!(t3[&p(&[2, 1])], q(1, 24));
        assert_eq!(t3[&p(&[3])], q(0, 1));
        assert_eq!(t3[&p(&[1, 1, 1])], q(0, 1));
    }

    #[test]
    fn todd_genus_of_projective_space_is_one() {
        for n in 1..=6 {
            assert_eq!(todd_genus_projective(n), BigRational::one(), "CP^{n}");
        }
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&q(1, 12)), "1/12");
        assert_eq!(format_rational(&q(-2, 4)), "-1/2");
        assert_eq!(format_rational(&q(0, 5)), "0");
    }
}
