//! Batch enumeration of complexes on `[m]`, exhaustive up to relabeling for
//! small `m` and seeded sampling beyond, with JSONL persistence.

use std::collections::{BTreeMap, BTreeSet};
use std::io::{self, Write};

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bier::h_vector_bier;
use crate::bordism::{bordant_unitary, decompose_alpha, generator_from_alpha};
use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::vectors::{alpha_vector, mu_vector, Mode};

/// Largest `m` for exhaustive enumeration.
pub const EXHAUSTIVE_MAX_M: usize = 5;
/// Largest `m` for sampling.
pub const SAMPLE_MAX_M: usize = 7;

/// Every complex on `[m]` with its given labels: all antichains of nonempty
/// proper subsets, the empty antichain standing for the void complex.
pub fn all_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    check_range(m, EXHAUSTIVE_MAX_M)?;
    let subsets: Vec<Face> = (1..(1u64 << m) - 1).map(Face::from_mask).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichains(&subsets, 0, &mut chosen, &mut |facets| {
        out.push(SimplicialComplex::from_faces(m, facets.to_vec()).expect("proper antichain"));
    });
    out.sort_by(|a, b| a.facets().cmp(b.facets()));
    Ok(out)
}

fn antichains(subsets: &[Face], start: usize, chosen: &mut Vec<Face>, visit: &mut dyn FnMut(&[Face])) {
    visit(chosen);
    for i in start..subsets.len() {
        let s = subsets[i];
        if chosen.iter().all(|&c| !c.is_subset(s) && !s.is_subset(c)) {
            chosen.push(s);
            antichains(subsets, i + 1, chosen, visit);
            chosen.pop();
        }
    }
}

fn check_range(m: usize, cap: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::MTooSmall { m });
    }
    if m > cap {
        return Err(Error::MTooLarge { m, cap });
    }
    Ok(())
}

/// Relabels faces under every permutation of `[m]`.
pub struct Relabeler {
    m: usize,
    tables: Vec<Vec<u64>>,
}

impl Relabeler {
    pub fn new(m: usize) -> Self {
        let mut tables = Vec::new();
        let mut perm: Vec<usize> = (0..m).collect();
        loop {
            tables.push(
                (0..1u64 << m)
                    .map(|mask| {
                        (0..m).filter(|&i| mask >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << perm[i])
                    })
                    .collect(),
            );
            if !next_permutation(&mut perm) {
                break;
            }
        }
        Relabeler { m, tables }
    }

    /// The lexicographically least sorted facet list over all relabelings.
    pub fn canonical(&self, k: &SimplicialComplex) -> SimplicialComplex {
        assert_eq!(k.m(), self.m, "relabeler built for a different m");
        let mut best: Option<Vec<Face>> = None;
        let mut buf = Vec::with_capacity(k.facets().len());
        for table in &self.tables {
            buf.clear();
            buf.extend(k.facets().iter().map(|f| Face::from_mask(table[f.mask() as usize])));
            buf.sort();
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        SimplicialComplex::from_faces(self.m, best.expect("at least one permutation"))
            .expect("relabeling preserves validity")
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

pub fn canonical_form(k: &SimplicialComplex) -> SimplicialComplex {
    Relabeler::new(k.m()).canonical(k)
}

/// One representative per relabeling class, in canonical order.
pub fn canonical_complexes(m: usize) -> Result<Vec<SimplicialComplex>> {
    let relabeler = Relabeler::new(m);
    let set: BTreeSet<Vec<Face>> = all_complexes(m)?
        .par_iter()
        .map(|k| relabeler.canonical(k).facets().to_vec())
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(set
        .into_iter()
        .map(|f| SimplicialComplex::from_faces(m, f).expect("canonical forms are valid"))
        .collect())
}

/// `count` distinct random complexes on `[m]`, in canonical order, fully
/// determined by `seed`.
pub fn sample_complexes(m: usize, count: usize, seed: u64) -> Result<Vec<SimplicialComplex>> {
    check_range(m, SAMPLE_MAX_M)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut set: BTreeSet<Vec<Face>> = BTreeSet::new();
    let attempts = count.saturating_mul(50).max(1000);
    for _ in 0..attempts {
        if set.len() >= count {
            break;
        }
        let n_faces = rng.gen_range(0..=2 * m);
        let faces: Vec<Face> = (0..n_faces)
            .map(|_| Face::from_mask(rng.gen_range(1..(1u64 << m) - 1)))
            .collect();
        let k = SimplicialComplex::from_faces(m, faces).expect("proper faces");
        set.insert(k.facets().to_vec());
    }
    Ok(set
        .into_iter()
        .map(|f| SimplicialComplex::from_faces(m, f).expect("sampled complexes are valid"))
        .collect())
}

/// Everything needed to re-verify one complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRecord {
    pub kind: String,
    pub complex: String,
    pub m: usize,
    pub facets: Vec<Vec<i64>>,
    pub f: Vec<i64>,
    pub alpha: Vec<i64>,
    pub mu: Vec<i64>,
    pub h_bier: Vec<i64>,
    #[serde(with = "crate::serde_big::vec")]
    pub reduced: Vec<BigInt>,
    pub generator: bool,
    pub real_null: bool,
    pub oriented_null: bool,
}

impl EnumerationRecord {
    pub fn new(k: &SimplicialComplex) -> Result<Self> {
        let alpha = alpha_vector(k, Mode::Checked)?;
        let class = decompose_alpha(&alpha)?;
        let generator = generator_from_alpha(&alpha)?.is_generator;
        Ok(EnumerationRecord {
            kind: "complex".into(),
            complex: k.to_text(),
            m: k.m(),
            facets: k.facet_lists(),
            f: k.f_vector(),
            mu: mu_vector(k, Mode::Checked)?,
            alpha,
            h_bier: h_vector_bier(k),
            reduced: class.reduced,
            generator,
            real_null: crate::bordism::null_bordant_real(k),
            oriented_null: crate::bordism::null_bordant_oriented_complex(k),
        })
    }

    pub fn complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::parse(self.m, &self.facets)
    }

    /// Recomputes the record from its facets and compares.
    pub fn verify(&self) -> Result<bool> {
        Ok(EnumerationRecord::new(&self.complex()?)? == *self)
    }
}

/// Two complexes with equal unitary bordism classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    pub kind: String,
    pub m: usize,
    pub left: String,
    pub right: String,
    pub f_left: Vec<i64>,
    pub f_right: Vec<i64>,
    pub h_bier: Vec<i64>,
    #[serde(with = "crate::serde_big::vec")]
    pub reduced: Vec<BigInt>,
    pub same_f: bool,
    /// `right` is the Alexander dual of `left` (up to relabeling when
    /// enumerating exhaustively).
    pub dual: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Hit {
    Pair(PairRecord),
    Complex(EnumerationRecord),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Find {
    BordantPairs,
    Generators,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub m: usize,
    pub find: Find,
    pub source: Source,
}

pub fn enumerate(opts: &EnumerateOptions) -> Result<Vec<Hit>> {
    let m = opts.m;
    let (complexes, canonical) = match opts.source {
        Source::Exhaustive => (canonical_complexes(m)?, true),
        Source::Sample { count, seed } => (sample_complexes(m, count, seed)?, false),
    };
    let records = complexes
        .par_iter()
        .map(EnumerationRecord::new)
        .collect::<Result<Vec<_>>>()?;
    match opts.find {
        Find::All => Ok(records.into_iter().map(Hit::Complex).collect()),
        Find::Generators => {
            Ok(records.into_iter().filter(|r| r.generator).map(Hit::Complex).collect())
        }
        Find::BordantPairs => bordant_pairs(&complexes, &records, canonical),
    }
}

fn bordant_pairs(
    complexes: &[SimplicialComplex],
    records: &[EnumerationRecord],
    canonical: bool,
) -> Result<Vec<Hit>> {
    let m = complexes.first().map_or(2, |k| k.m());
    let relabeler = canonical.then(|| Relabeler::new(m));
    let mut groups: BTreeMap<&[BigInt], Vec<usize>> = BTreeMap::new();
    for (i, r) in records.iter().enumerate() {
        groups.entry(&r.reduced).or_default().push(i);
    }
    let pairs: Vec<(usize, usize)> = groups
        .values()
        .flat_map(|ix| {
            ix.iter()
                .enumerate()
                .flat_map(move |(a, &i)| ix[a + 1..].iter().map(move |&j| (i, j)))
        })
        .collect();
    let mut hits = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (k1, k2) = (&complexes[i], &complexes[j]);
            if !bordant_unitary(k1, k2)? {
                return Err(Error::InternalMismatch {
                    what: "bordant pairs",
                    detail: format!("{k1} and {k2} share coordinates but fail the f-criterion"),
                });
            }
            let dual = match &relabeler {
                Some(r) => r.canonical(&k1.alexander_dual()) == *k2,
                None => k1.alexander_dual() == *k2,
            };
            let (a, b) = (&records[i], &records[j]);
            Ok(((i, j), PairRecord {
                kind: "bordant_pair".into(),
                m: k1.m(),
                left: a.complex.clone(),
                right: b.complex.clone(),
                f_left: a.f.clone(),
                f_right: b.f.clone(),
                h_bier: a.h_bier.clone(),
                reduced: a.reduced.clone(),
                same_f: a.f == b.f,
                dual,
            }))
        })
        .collect::<Result<Vec<_>>>()?;
    hits.sort_by_key(|(ij, _)| *ij);
    Ok(hits.into_iter().map(|(_, p)| Hit::Pair(p)).collect())
}

/// One JSON object per line.
pub fn write_jsonl<W: Write>(hits: &[Hit], mut out: W) -> io::Result<()> {
    for h in hits {
        serde_json::to_writer(&mut out, h)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn read_jsonl(s: &str) -> serde_json::Result<Vec<Hit>> {
    s.lines().filter(|l| !l.trim().is_empty()).map(serde_json::from_str).collect()
}
