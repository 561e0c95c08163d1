//! Shared inputs for the benchmarks in `benches/`.

use torbord::enumerate::sample_complexes;
use torbord::SimplicialComplex;

/// A fixed batch of random complexes on `[m]`.
pub fn workload(m: usize, count: usize) -> Vec<SimplicialComplex> {
    sample_complexes(m, count, 0x5eed).expect("m within the sampling range")
}
