//! Brute-force characteristic numbers: build each class as a polynomial in
//! `x_1..x_m, u` and pair it with the fundamental class face by face.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::charnum;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::gamma::{SquareFreeExpr, GAMMA_MAX_M};
use crate::symfun::{partitions, Partition};

/// Largest `m` the oracle accepts.
pub const ORACLE_MAX_M: usize = GAMMA_MAX_M;

/// Pairs degree-`(m−1)` expressions with `[X_K]` using only
/// `x_S u^{m−1−|S|}[X_K] = 1 − χ(link_K S)` for faces and 0 otherwise.
#[derive(Debug, Clone)]
pub struct PairingEvaluator {
    complex: SimplicialComplex,
    values: HashMap<u64, i64>,
}

impl PairingEvaluator {
    pub fn new(k: &SimplicialComplex) -> Self {
        let values = k
            .faces()
            .into_iter()
            .map(|s| {
                let link = k.link(s).expect("faces of K have links");
                (s.mask(), 1 - link.euler_characteristic())
            })
            .collect();
        PairingEvaluator { complex: k.clone(), values }
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn evaluate(&self, expr: &SquareFreeExpr) -> Result<BigInt> {
        let top = self.complex.m() - 1;
        if !expr.is_homogeneous_of(top) {
            return Err(Error::Degree { expected: top });
        }
        Ok(expr
            .terms()
            .filter_map(|(s, _, c)| self.values.get(&s.mask()).map(|&v| c * v))
            .sum())
    }

    pub fn evaluate_mod2(&self, expr: &SquareFreeExpr) -> Result<u8> {
        Ok(u8::from(self.evaluate(expr)?.is_odd()))
    }
}

pub fn evaluate(k: &SimplicialComplex, expr: &SquareFreeExpr) -> Result<BigInt> {
    PairingEvaluator::new(k).evaluate(expr)
}

/// Degree-`(m−1)` classes that do not depend on `K`, keyed by partition.
#[derive(Debug)]
struct ClassTable {
    chern: HashMap<Partition, SquareFreeExpr>,
    pontryagin: HashMap<Partition, SquareFreeExpr>,
    sw_real: HashMap<Partition, SquareFreeExpr>,
    milnor: SquareFreeExpr,
}

fn total_class(m: usize, factor: impl Fn(usize) -> SquareFreeExpr) -> SquareFreeExpr {
    (1..=m).fold(SquareFreeExpr::one(m), |acc, i| acc.multiply(&factor(i)))
}

fn products(
    pieces: &[SquareFreeExpr],
    n: usize,
    scale: usize,
    reduce: impl Fn(SquareFreeExpr) -> SquareFreeExpr,
) -> HashMap<Partition, SquareFreeExpr> {
    let m = pieces[0].m();
    partitions(n)
        .into_iter()
        .map(|p| {
            let e = p.parts().iter().fold(SquareFreeExpr::one(m), |acc, &i| {
                reduce(acc.multiply(&pieces[i * scale]))
            });
            (p, e)
        })
        .collect()
}

impl ClassTable {
    fn build(m: usize) -> Self {
        let one = SquareFreeExpr::one(m);
        // c = Π(1 + x_i + x′_i) with x′_i = x_i + u.
        let c = total_class(m, |i| {
            one.add(&SquareFreeExpr::x(m, i)).add(&SquareFreeExpr::x_prime(m, i))
        });
        let c_pieces: Vec<_> = (0..=m).map(|k| c.graded_piece(k)).collect();
        // p = Π(1 + x_i² + x′_i²).
        let p = total_class(m, |i| {
            let x = SquareFreeExpr::x(m, i);
            let xp = SquareFreeExpr::x_prime(m, i);
            one.add(&x.multiply(&x)).add(&xp.multiply(&xp))
        });
        let p_pieces: Vec<_> = (0..=2 * m).map(|k| p.graded_piece(k)).collect();
        // w(X^R) = Π(1 + x_i + x′_i) over Z/2.
        let w = total_class(m, |i| {
            one.add(&SquareFreeExpr::x(m, i)).add(&SquareFreeExpr::x_prime(m, i)).mod2()
        })
        .mod2();
        let w_pieces: Vec<_> = (0..=m).map(|k| w.graded_piece(k)).collect();
        let milnor = (1..=m).fold(SquareFreeExpr::zero(m), |acc, i| {
            acc.add(&SquareFreeExpr::x(m, i).pow(m - 1))
                .add(&SquareFreeExpr::x_prime(m, i).pow(m - 1))
        });
        ClassTable {
            chern: products(&c_pieces, m - 1, 1, |e| e),
            pontryagin: if m % 2 == 1 {
                products(&p_pieces, (m - 1) / 2, 2, |e| e)
            } else {
                HashMap::new()
            },
            sw_real: products(&w_pieces, m - 1, 1, |e| e.mod2()),
            milnor,
        }
    }
}

fn class_table(m: usize) -> Result<Arc<ClassTable>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<ClassTable>>>> = OnceLock::new();
    if m < 2 {
        return Err(Error::MTooSmall { m });
    }
    if m > ORACLE_MAX_M {
        return Err(Error::Dimension { what: "cohomology oracle", requirement: "m <= 10", m });
    }
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("oracle cache poisoned").get(&m) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(ClassTable::build(m));
    Ok(Arc::clone(cache.lock().expect("oracle cache poisoned").entry(m).or_insert(table)))
}

fn lookup<'a>(
    map: &'a HashMap<Partition, SquareFreeExpr>,
    partition: &Partition,
    n: usize,
) -> Result<&'a SquareFreeExpr> {
    map.get(partition).ok_or_else(|| {
        Error::Partition(format!("({partition}) is not a partition of {n}"))
    })
}

pub fn oracle_chern(k: &SimplicialComplex, partition: &Partition) -> Result<BigInt> {
    let t = class_table(k.m())?;
    PairingEvaluator::new(k).evaluate(lookup(&t.chern, partition, k.m() - 1)?)
}

/// The power sum `Σ x_i^{m−1} + Σ x′_i^{m−1}` paired with `[X_K]`.
pub fn oracle_milnor(k: &SimplicialComplex) -> Result<BigInt> {
    let t = class_table(k.m())?;
    PairingEvaluator::new(k).evaluate(&t.milnor)
}

pub fn oracle_pontryagin(k: &SimplicialComplex, partition: &Partition) -> Result<BigInt> {
    if k.m().is_multiple_of(2) {
        return Err(Error::Dimension { what: "Pontryagin numbers", requirement: "odd m", m: k.m() });
    }
    let t = class_table(k.m())?;
    PairingEvaluator::new(k).evaluate(lookup(&t.pontryagin, partition, (k.m() - 1) / 2)?)
}

pub fn oracle_sw_real(k: &SimplicialComplex, partition: &Partition) -> Result<u8> {
    let t = class_table(k.m())?;
    PairingEvaluator::new(k).evaluate_mod2(lookup(&t.sw_real, partition, k.m() - 1)?)
}

/// A disagreement between a closed formula and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mismatch {
    pub quantity: String,
    pub partition: Option<String>,
    pub closed_form: String,
    pub oracle: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.partition {
            Some(p) => write!(f, "{}[{}]", self.quantity, p)?,
            None => f.write_str(&self.quantity)?,
        }
        write!(f, ": closed form {}, oracle {}", self.closed_form, self.oracle)
    }
}

/// Which families of numbers [`verify`] compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Checks {
    pub chern: bool,
    pub milnor: bool,
    pub pontryagin: bool,
    pub sw: bool,
}

impl Default for Checks {
    fn default() -> Self {
        Checks { chern: true, milnor: true, pontryagin: true, sw: true }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub compared: usize,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    fn compare(&mut self, quantity: &str, partition: Option<&Partition>, closed: String, oracle: String) {
        self.compared += 1;
        if closed != oracle {
            self.mismatches.push(Mismatch {
                quantity: quantity.to_string(),
                partition: partition.map(|p| p.to_string()),
                closed_form: closed,
                oracle,
            });
        }
    }
}

pub fn verify(k: &SimplicialComplex) -> Result<VerificationReport> {
    verify_with(k, Checks::default())
}

/// Compares every closed-form number in the selected families with the
/// oracle. Mismatches are reported, not raised.
pub fn verify_with(k: &SimplicialComplex, checks: Checks) -> Result<VerificationReport> {
    let m = k.m();
    let t = class_table(m)?;
    let eval = PairingEvaluator::new(k);
    let mut report = VerificationReport::default();
    if checks.chern {
        for (p, closed) in charnum::all_chern_numbers(k)? {
            let oracle = eval.evaluate(lookup(&t.chern, &p, m - 1)?)?;
            report.compare("c", Some(&p), closed.to_string(), oracle.to_string());
        }
    }
    if checks.milnor {
        let closed = charnum::milnor_number(k)?;
        let oracle = eval.evaluate(&t.milnor)?;
        report.compare("s", None, closed.to_string(), oracle.to_string());
    }
    if checks.pontryagin && m % 2 == 1 {
        for (p, closed) in charnum::all_pontryagin_numbers(k)? {
            let oracle = eval.evaluate(lookup(&t.pontryagin, &p, (m - 1) / 2)?)?;
            report.compare("p", Some(&p), closed.to_string(), oracle.to_string());
        }
    }
    if checks.sw {
        for (p, closed) in charnum::all_sw_numbers_real(k)? {
            let oracle = eval.evaluate_mod2(lookup(&t.sw_real, &p, m - 1)?)?;
            report.compare("w_R", Some(&p), closed.to_string(), oracle.to_string());
        }
    }
    Ok(report)
}

/// Whether two complexes on the same `[m]` have identical Chern numbers
/// according to the oracle.
pub fn oracle_chern_equal(k1: &SimplicialComplex, k2: &SimplicialComplex) -> Result<bool> {
    if k1.m() != k2.m() {
        return Err(Error::MismatchedM { left: k1.m(), right: k2.m() });
    }
    let t = class_table(k1.m())?;
    let (e1, e2) = (PairingEvaluator::new(k1), PairingEvaluator::new(k2));
    for p in partitions(k1.m() - 1) {
        let class = lookup(&t.chern, &p, k1.m() - 1)?;
        if e1.evaluate(class)? != e2.evaluate(class)? {
            return Ok(false);
        }
    }
    Ok(true)
}
