//! The full invariant bundle of one complex.

use serde::{Deserialize, Serialize};

use crate::bier::{facet_cone_check, h_vector_bier, BierSphere};
use crate::bordism::{decompose_alpha, generator_from_alpha, null_bordism_flags};
use crate::bordism::{BordismClass, GeneratorCertificate, NullBordismFlags};
use crate::charnum::{characteristic_report, CharacteristicNumberReport};
use crate::complex::{ComplexJson, SimplicialComplex};
use crate::error::Result;
use crate::vectors::{alpha_vector, egf_identity_holds, mu_vector, stirling_identity_holds, Mode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BordismReport {
    pub class: BordismClass,
    pub raw_expression: String,
    pub reduced_expression: String,
    pub generator: GeneratorCertificate,
    pub null: NullBordismFlags,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub complex: ComplexJson,
    pub euler_characteristic_k: i64,
    pub ghost_vertices: Vec<usize>,
    pub f: Vec<i64>,
    pub alpha: Vec<i64>,
    pub mu: Vec<i64>,
    pub h_bier: Vec<i64>,
    pub bier_facets: usize,
    pub fan_regular: bool,
    pub egf_identity: bool,
    pub stirling_identity: bool,
    pub characteristic: CharacteristicNumberReport,
    pub bordism: BordismReport,
    pub notes: Vec<String>,
}

pub fn analyze(k: &SimplicialComplex) -> Result<AnalysisReport> {
    let alpha = alpha_vector(k, Mode::Checked)?;
    let mu = mu_vector(k, Mode::Checked)?;
    let f = k.f_vector();
    let class = decompose_alpha(&alpha)?;
    let mut notes = Vec::new();
    let doubly = k.doubly_ghost_vertices();
    if !doubly.is_empty() {
        notes.push(format!(
            "vertices {doubly:?} are ghosts of both K and its dual; \
             Bier(K) is the boundary of the cross-polytope and X_K is (CP^1)^{}",
            k.m() - 1
        ));
    }
    Ok(AnalysisReport {
        complex: k.to_json_value(),
        euler_characteristic_k: k.euler_characteristic(),
        ghost_vertices: k.ghost_vertices(),
        egf_identity: egf_identity_holds(&alpha, &mu),
        stirling_identity: stirling_identity_holds(&alpha, &f, 6),
        h_bier: h_vector_bier(k),
        bier_facets: BierSphere::new(k).facets().len(),
        fan_regular: facet_cone_check(k)?,
        characteristic: characteristic_report(k)?,
        bordism: BordismReport {
            raw_expression: class.raw_expression(),
            reduced_expression: class.reduced_expression(),
            class,
            generator: generator_from_alpha(&alpha)?,
            null: null_bordism_flags(k),
        },
        f,
        alpha,
        mu,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::*;

    #[test]
    fn e1_report() {
        let r = analyze(&e1()).unwrap();
        assert_eq!(r.alpha, vec![-1, 1, 0, 1]);
        assert_eq!(r.h_bier, vec![1, 4, 4, 1]);
        assert_eq!(r.bier_facets, 10);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"alpha\":[-1,1,0,1]"));
        let back: AnalysisReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn doubly_ghost_note() {
        let r = analyze(&k(3, &[&[1, 2]])).unwrap();
        assert_eq!(r.notes.len(), 1);
        assert!(analyze(&e6()).unwrap().notes.is_empty());
        assert!(analyze(&e1()).unwrap().notes.is_empty());
    }
}
