//! Exact combinatorial invariants, characteristic numbers and bordism classes
//! of the canonical toric manifolds `X_K` and `X_K^R` attached to a simplicial
//! complex `K` on `[m]`.

pub mod arith;
pub mod bier;
pub mod bordism;
pub mod charnum;
pub mod complex;
pub mod enumerate;
pub mod error;
pub mod gamma;
pub mod oracle;
pub mod report;
pub mod serde_big;
pub mod symfun;
pub mod vectors;

pub use bier::{bier_sphere, BierSphere, FanRays};
pub use bordism::{BordismClass, GeneratorCertificate, NullBordismFlags};
pub use charnum::{ChiYPolynomial, CharacteristicNumberReport, ImmersionBounds};
pub use complex::{Face, SimplicialComplex};
pub use enumerate::{EnumerateOptions, EnumerationRecord, Find, Hit, Source};
pub use error::{Error, Result};
pub use gamma::{GammaVector, SquareFreeExpr};
pub use oracle::{PairingEvaluator, VerificationReport};
pub use report::{analyze, AnalysisReport};
pub use symfun::{partitions, InvolutionMatrix, Partition};
pub use vectors::Mode;
