//! Checkable witnesses for yes/no answers.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::{CanonicalCode, Graph, VertexSet};
use crate::hamilton::{check_exhaustion, Cycle, ExhaustionProof, ToughnessCut};
use crate::minors::{k2t_search, StandardModel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    HamiltonCycle {
        cycle: Cycle,
    },
    ToughnessCut {
        cut: VertexSet,
        component_count: usize,
    },
    ExhaustionProof {
        nodes: u64,
        transcript_sha256: String,
        code: CanonicalCode,
    },
    MinorModel {
        model: StandardModel,
    },
    MinorFreeExhaustion {
        t: usize,
        nodes: u64,
        code: CanonicalCode,
    },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::HamiltonCycle { .. } => "HamiltonCycle",
            Certificate::ToughnessCut { .. } => "ToughnessCut",
            Certificate::ExhaustionProof { .. } => "ExhaustionProof",
            Certificate::MinorModel { .. } => "MinorModel",
            Certificate::MinorFreeExhaustion { .. } => "MinorFreeExhaustion",
        }
    }

    /// Checks the certificate against `g`. Exhaustion records are checked
    /// by re-running the deterministic search.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        Ok(match self {
            Certificate::HamiltonCycle { cycle } => cycle.is_hamiltonian_in(g),
            Certificate::ToughnessCut { cut, component_count } => ToughnessCut {
                cut: cut.clone(),
                component_count: *component_count,
            }
            .verify(g),
            Certificate::ExhaustionProof {
                nodes,
                transcript_sha256,
                code,
            } => check_exhaustion(
                g,
                &ExhaustionProof {
                    nodes: *nodes,
                    transcript_sha256: transcript_sha256.clone(),
                    code: code.clone(),
                },
            )?,
            Certificate::MinorModel { model } => model.verify(g),
            Certificate::MinorFreeExhaustion { t, nodes, code } => {
                let run = k2t_search(g, *t)?;
                run.model.is_none() && run.nodes == *nodes && &g.canonical_code() == code
            }
        })
    }
}

impl From<Cycle> for Certificate {
    fn from(cycle: Cycle) -> Self {
        Certificate::HamiltonCycle { cycle }
    }
}

impl From<ToughnessCut> for Certificate {
    fn from(c: ToughnessCut) -> Self {
        Certificate::ToughnessCut {
            cut: c.cut,
            component_count: c.component_count,
        }
    }
}

impl From<ExhaustionProof> for Certificate {
    fn from(p: ExhaustionProof) -> Self {
        Certificate::ExhaustionProof {
            nodes: p.nodes,
            transcript_sha256: p.transcript_sha256,
            code: p.code,
        }
    }
}

/// Certificate for the presence or absence of a K2,t minor.
pub fn minor_certificate(g: &Graph, t: usize) -> Result<Certificate> {
    let run = k2t_search(g, t)?;
    Ok(match run.model {
        Some(model) => Certificate::MinorModel { model },
        None => Certificate::MinorFreeExhaustion {
            t,
            nodes: run.nodes,
            code: g.canonical_code(),
        },
    })
}
