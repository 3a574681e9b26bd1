//! JSON documents for graph representations and residue certificates.
//!
//! Singularity indices count the conical singularities in input order,
//! then the poles. Rationals are written `"num/den"`, complex numbers as
//! `{"re": .., "im": ..}`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use strata_core::residue::{ResidueCertificate, ResidueSystem, VariableClass, VariableKind};
use strata_core::{GraphRepresentation, Multigraph};

use crate::error::CliError;
use crate::notation::{parse_stratum, render};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepDocument {
    pub stratum: String,
    pub vertices: Vec<VertexDocument>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexDocument {
    pub family: Vec<usize>,
    pub weight: u32,
}

impl RepDocument {
    pub fn from_rep(rep: &GraphRepresentation) -> Self {
        RepDocument {
            stratum: render(rep.stratum()),
            vertices: rep
                .families()
                .iter()
                .zip(rep.weights())
                .map(|(f, &w)| VertexDocument {
                    family: f.clone(),
                    weight: w,
                })
                .collect(),
            edges: rep.graph().edges().iter().map(|&(u, v)| [u, v]).collect(),
        }
    }

    /// A structurally well-formed representation; Def-level validity is
    /// checked separately.
    pub fn to_rep(&self) -> Result<GraphRepresentation, CliError> {
        let stratum = parse_stratum(&self.stratum)?;
        let graph = Multigraph::new(
            self.vertices.len(),
            self.edges.iter().map(|&[u, v]| (u, v)).collect(),
        )?;
        Ok(GraphRepresentation::new(
            stratum,
            graph,
            self.vertices.iter().map(|v| v.family.clone()).collect(),
            self.vertices.iter().map(|v| v.weight).collect(),
        )?)
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text)
            .map_err(|e| CliError::Input(format!("invalid representation document: {e}")))
    }
}

pub fn rational(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexDocument {
    pub re: String,
    pub im: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VariableDocument {
    pub name: String,
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub end: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pole: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub waist_curve: Option<bool>,
    pub class: &'static str,
    pub value: ComplexDocument,
    pub nonzero: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateDocument {
    pub stratum: String,
    pub rows: usize,
    pub columns: usize,
    pub seed: u64,
    pub attempts: u32,
    pub sufficient_only: bool,
    pub verified: bool,
    pub variables: Vec<VariableDocument>,
    pub vertex_conditions: Vec<&'static str>,
}

impl CertificateDocument {
    pub fn new(
        system: &ResidueSystem,
        classes: &[VariableClass],
        cert: &ResidueCertificate,
    ) -> Self {
        let stratum = system.rep().stratum();
        let variables = cert
            .variables
            .iter()
            .enumerate()
            .map(|(x, var)| {
                let (edge, end, pole) = match *var {
                    VariableKind::EdgeEnd { edge, end } => (Some(edge), Some(end), None),
                    VariableKind::Pole { pole } => (None, None, Some(pole)),
                };
                VariableDocument {
                    name: var.to_string(),
                    kind: if pole.is_some() { "pole" } else { "edge_end" },
                    edge,
                    end,
                    pole,
                    order: pole.map(|j| stratum.poles()[j]),
                    waist_curve: pole.map(|j| cert.waist_curve_poles[j]),
                    class: match classes[x] {
                        VariableClass::GenericallyNonzero => "generically_nonzero",
                        VariableClass::IdenticallyZero => "identically_zero",
                    },
                    value: ComplexDocument {
                        re: rational(&cert.values[x].re),
                        im: rational(&cert.values[x].im),
                    },
                    nonzero: cert.nonzero[x],
                }
            })
            .collect();
        CertificateDocument {
            stratum: render(stratum),
            rows: system.row_count(),
            columns: system.column_count(),
            seed: cert.seed,
            attempts: cert.attempts,
            sufficient_only: cert.sufficient_only,
            verified: cert.verify(system),
            variables,
            vertex_conditions: cert.vertex_conditions.iter().map(|c| c.as_str()).collect(),
        }
    }
}
