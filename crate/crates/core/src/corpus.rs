//! The completeness derivations shipped with the crate: for each analytic
//! axiom, a proof of its translated inequality in the matching calculus
//! extended by the axiom's structural rule.

use crate::calculus::rules::Calculus;
use crate::correspondence::AxiomId;

#[derive(Clone, Copy, Debug)]
pub struct CorpusEntry {
    pub axiom: AxiomId,
    pub calculus: Calculus,
    pub file_name: &'static str,
    pub text: &'static str,
}

pub const CORPUS: [CorpusEntry; 8] = [
    CorpusEntry {
        axiom: AxiomId::N,
        calculus: Calculus::DmtNabla,
        file_name: "axiom_n.proof",
        text: include_str!("../corpus/axiom_n.proof"),
    },
    CorpusEntry {
        axiom: AxiomId::P,
        calculus: Calculus::DmtNabla,
        file_name: "axiom_p.proof",
        text: include_str!("../corpus/axiom_p.proof"),
    },
    CorpusEntry {
        axiom: AxiomId::C,
        calculus: Calculus::DmtNabla,
        file_name: "axiom_c.proof",
        text: include_str!("../corpus/axiom_c.proof"),
    },
    CorpusEntry {
        axiom: AxiomId::T,
        calculus: Calculus::DmtNabla,
        file_name: "axiom_t.proof",
        text: include_str!("../corpus/axiom_t.proof"),
    },
    CorpusEntry {
        axiom: AxiomId::D,
        calculus: Calculus::DmtNabla,
        file_name: "axiom_d.proof",
        text: include_str!("../corpus/axiom_d.proof"),
    },
    CorpusEntry {
        axiom: AxiomId::ID,
        calculus: Calculus::DmtCond,
        file_name: "axiom_id.proof",
        text: include_str!("../corpus/axiom_id.proof"),
    },
    CorpusEntry {
        axiom: AxiomId::CS,
        calculus: Calculus::DmtCond,
        file_name: "axiom_cs.proof",
        text: include_str!("../corpus/axiom_cs.proof"),
    },
    CorpusEntry {
        axiom: AxiomId::CEM,
        calculus: Calculus::DmtCond,
        file_name: "axiom_cem.proof",
        text: include_str!("../corpus/axiom_cem.proof"),
    },
];
