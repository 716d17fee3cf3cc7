//! The rule sets of the two display calculi: shared propositional base,
//! per-calculus display and logical rules, and the structural rules for
//! the analytic axiomatic extensions.

use super::schema::{FmlPat, MetaVar, Pat, RuleSchema, SequentPat};
use crate::correspondence::AxiomId;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Calculus {
    DmtNabla,
    DmtCond,
}

impl Calculus {
    pub fn name(self) -> &'static str {
        match self {
            Calculus::DmtNabla => "dmt-nabla",
            Calculus::DmtCond => "dmt-cond",
        }
    }

    pub fn from_name(s: &str) -> Option<Calculus> {
        match s {
            "dmt-nabla" => Some(Calculus::DmtNabla),
            "dmt-cond" => Some(Calculus::DmtCond),
            _ => None,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RuleSetError {
    #[error("axiom {0} is not analytic; no structural rule exists for it")]
    UnsupportedExtension(AxiomId),
    #[error("axiom {0} does not extend calculus {1}")]
    WrongCalculus(AxiomId, &'static str),
}

// Metavariable shorthands: X, Y, Z, W for S-structures; G, D, S, P, Q
// (Gamma, Delta, Sigma, Pi, Theta) for N-structures; A, B for S-formulas;
// a, b for N-formulas; p for atoms.
fn xs(n: &'static str) -> Pat {
    Pat::Meta(MetaVar::SStruct(n))
}

fn ns(n: &'static str) -> Pat {
    Pat::Meta(MetaVar::NStruct(n))
}

fn sf(n: &'static str) -> FmlPat {
    FmlPat::Meta(MetaVar::SFormula(n))
}

fn nf(n: &'static str) -> FmlPat {
    FmlPat::Meta(MetaVar::NFormula(n))
}

fn atom(n: &'static str) -> FmlPat {
    FmlPat::Meta(MetaVar::Atom(n))
}

fn fml(f: FmlPat) -> Pat {
    Pat::Fml(f)
}

fn seq(lhs: Pat, rhs: Pat) -> SequentPat {
    SequentPat::new(lhs, rhs)
}

fn rule(
    name: &'static str,
    premises: Vec<SequentPat>,
    conclusion: SequentPat,
) -> RuleSchema {
    RuleSchema {
        name,
        premises,
        conclusion,
        bidirectional: false,
    }
}

fn birule(name: &'static str, premise: SequentPat, conclusion: SequentPat) -> RuleSchema {
    RuleSchema {
        name,
        premises: vec![premise],
        conclusion,
        bidirectional: true,
    }
}

macro_rules! pat {
    (tneg $a:expr) => { Pat::TNeg(Box::new($a)) };
    (tsim $a:expr) => { Pat::TSim(Box::new($a)) };
    (hwedge $a:expr, $b:expr) => { Pat::HWedge(Box::new($a), Box::new($b)) };
    (cvee $a:expr, $b:expr) => { Pat::CVee(Box::new($a), Box::new($b)) };
    (hcap $a:expr, $b:expr) => { Pat::HCap(Box::new($a), Box::new($b)) };
    (ccup $a:expr, $b:expr) => { Pat::CCup(Box::new($a), Box::new($b)) };
    (hnu $a:expr) => { Pat::HNu(Box::new($a)) };
    (cnuc $a:expr) => { Pat::CNuc(Box::new($a)) };
    (hin $a:expr) => { Pat::HIn(Box::new($a)) };
    (cnotin $a:expr) => { Pat::CNotIn(Box::new($a)) };
    (ctri $a:expr, $b:expr) => { Pat::CTri(Box::new($a), Box::new($b)) };
    (hblacktri $a:expr, $b:expr) => { Pat::HBlackTri(Box::new($a), Box::new($b)) };
    (cnotinr $a:expr) => { Pat::CNotInR(Box::new($a)) };
    (cni $a:expr) => { Pat::CNi(Box::new($a)) };
    (hnotni $a:expr) => { Pat::HNotNi(Box::new($a)) };
    (cnuadj $a:expr) => { Pat::CNuAdj(Box::new($a)) };
    (hnucadj $a:expr) => { Pat::HNucAdj(Box::new($a)) };
    (cnotnir $a:expr) => { Pat::CNotNiR(Box::new($a)) };
    (cblacktrir $a:expr, $b:expr) => { Pat::CBlackTriR(Box::new($a), Box::new($b)) };
}

macro_rules! fpat {
    (neg $a:expr) => { FmlPat::Neg(Box::new($a)) };
    (and $a:expr, $b:expr) => { FmlPat::And(Box::new($a), Box::new($b)) };
    (dianu $a:expr) => { FmlPat::DiaNu(Box::new($a)) };
    (boxnuc $a:expr) => { FmlPat::BoxNuc(Box::new($a)) };
    (boxni $a:expr) => { FmlPat::BoxNi(Box::new($a)) };
    (dianotni $a:expr) => { FmlPat::DiaNotNi(Box::new($a)) };
    (boxrnotni $a:expr) => { FmlPat::BoxrNotNi(Box::new($a)) };
    (tri $a:expr, $b:expr) => { FmlPat::Tri(Box::new($a), Box::new($b)) };
    (cap $a:expr, $b:expr) => { FmlPat::Cap(Box::new($a), Box::new($b)) };
}

/// Identity, cut, display postulates, structural and logical rules shared
/// by both calculi.
fn propositional_base() -> Vec<RuleSchema> {
    vec![
        rule("Id_S", vec![], seq(fml(atom("p")), fml(atom("p")))),
        rule(
            "Cut_S",
            vec![seq(xs("X"), fml(sf("A"))), seq(fml(sf("A")), xs("Y"))],
            seq(xs("X"), xs("Y")),
        ),
        rule(
            "Cut_N",
            vec![seq(ns("G"), fml(nf("a"))), seq(fml(nf("a")), ns("D"))],
            seq(ns("G"), ns("D")),
        ),
        // zero-premise display rules for the lattice constants
        rule("Bot", vec![], seq(fml(FmlPat::Bot), Pat::CBot)),
        rule("Top", vec![], seq(Pat::HTop, fml(FmlPat::Top))),
        // pure S-type display rules
        birule(
            "res_S",
            seq(pat!(hwedge xs("X"), xs("Y")), xs("Z")),
            seq(xs("Y"), pat!(cvee pat!(tneg xs("X")), xs("Z"))),
        ),
        birule(
            "res_S",
            seq(xs("X"), pat!(cvee xs("Y"), xs("Z"))),
            seq(pat!(hwedge pat!(tneg xs("Y")), xs("X")), xs("Z")),
        ),
        birule(
            "gal_S",
            seq(pat!(tneg xs("X")), xs("Y")),
            seq(pat!(tneg xs("Y")), xs("X")),
        ),
        birule(
            "gal_S",
            seq(xs("X"), pat!(tneg xs("Y"))),
            seq(xs("Y"), pat!(tneg xs("X"))),
        ),
        // pure N-type display rules
        birule(
            "res_N",
            seq(pat!(hcap ns("G"), ns("D")), ns("S")),
            seq(ns("D"), pat!(ccup pat!(tsim ns("G")), ns("S"))),
        ),
        birule(
            "res_N",
            seq(ns("G"), pat!(ccup ns("D"), ns("S"))),
            seq(pat!(hcap pat!(tsim ns("D")), ns("G")), ns("S")),
        ),
        birule(
            "gal_N",
            seq(pat!(tsim ns("G")), ns("D")),
            seq(pat!(tsim ns("D")), ns("G")),
        ),
        birule(
            "gal_N",
            seq(ns("G"), pat!(tsim ns("D"))),
            seq(ns("D"), pat!(tsim ns("G"))),
        ),
        // pure-type structural rules
        birule(
            "cont_S",
            seq(xs("X"), xs("Y")),
            seq(pat!(tneg xs("Y")), pat!(tneg xs("X"))),
        ),
        birule(
            "hat_top",
            seq(xs("X"), xs("Y")),
            seq(pat!(hwedge xs("X"), Pat::HTop), xs("Y")),
        ),
        birule(
            "check_bot",
            seq(xs("X"), xs("Y")),
            seq(xs("X"), pat!(cvee xs("Y"), Pat::CBot)),
        ),
        birule(
            "cont_N",
            seq(ns("G"), ns("D")),
            seq(pat!(tsim ns("D")), pat!(tsim ns("G"))),
        ),
        birule(
            "hat_one",
            seq(ns("G"), ns("D")),
            seq(pat!(hcap ns("G"), Pat::HOne), ns("D")),
        ),
        birule(
            "check_zero",
            seq(ns("G"), ns("D")),
            seq(ns("G"), pat!(ccup ns("D"), Pat::CZero)),
        ),
        // weakening, contraction, exchange, associativity
        rule(
            "W_S",
            vec![seq(xs("X"), xs("Z"))],
            seq(pat!(hwedge xs("X"), xs("Y")), xs("Z")),
        ),
        rule(
            "W_S",
            vec![seq(xs("X"), xs("Z"))],
            seq(xs("X"), pat!(cvee xs("Z"), xs("Y"))),
        ),
        rule(
            "C_S",
            vec![seq(pat!(hwedge xs("X"), xs("X")), xs("Z"))],
            seq(xs("X"), xs("Z")),
        ),
        rule(
            "C_S",
            vec![seq(xs("X"), pat!(cvee xs("Z"), xs("Z")))],
            seq(xs("X"), xs("Z")),
        ),
        rule(
            "E_S",
            vec![seq(pat!(hwedge xs("X"), xs("Y")), xs("Z"))],
            seq(pat!(hwedge xs("Y"), xs("X")), xs("Z")),
        ),
        rule(
            "E_S",
            vec![seq(xs("X"), pat!(cvee xs("Y"), xs("Z")))],
            seq(xs("X"), pat!(cvee xs("Z"), xs("Y"))),
        ),
        birule(
            "A_S",
            seq(pat!(hwedge xs("X"), pat!(hwedge xs("Y"), xs("Z"))), xs("W")),
            seq(pat!(hwedge pat!(hwedge xs("X"), xs("Y")), xs("Z")), xs("W")),
        ),
        birule(
            "A_S",
            seq(xs("W"), pat!(cvee xs("X"), pat!(cvee xs("Y"), xs("Z")))),
            seq(xs("W"), pat!(cvee pat!(cvee xs("X"), xs("Y")), xs("Z"))),
        ),
        rule(
            "W_N",
            vec![seq(ns("G"), ns("S"))],
            seq(pat!(hcap ns("G"), ns("D")), ns("S")),
        ),
        rule(
            "W_N",
            vec![seq(ns("G"), ns("S"))],
            seq(ns("G"), pat!(ccup ns("S"), ns("D"))),
        ),
        rule(
            "C_N",
            vec![seq(pat!(hcap ns("G"), ns("G")), ns("S"))],
            seq(ns("G"), ns("S")),
        ),
        rule(
            "C_N",
            vec![seq(ns("G"), pat!(ccup ns("S"), ns("S")))],
            seq(ns("G"), ns("S")),
        ),
        rule(
            "E_N",
            vec![seq(pat!(hcap ns("G"), ns("D")), ns("S"))],
            seq(pat!(hcap ns("D"), ns("G")), ns("S")),
        ),
        rule(
            "E_N",
            vec![seq(ns("G"), pat!(ccup ns("D"), ns("S")))],
            seq(ns("G"), pat!(ccup ns("S"), ns("D"))),
        ),
        birule(
            "A_N",
            seq(pat!(hcap ns("G"), pat!(hcap ns("D"), ns("S"))), ns("P")),
            seq(pat!(hcap pat!(hcap ns("G"), ns("D")), ns("S")), ns("P")),
        ),
        birule(
            "A_N",
            seq(ns("P"), pat!(ccup ns("G"), pat!(ccup ns("D"), ns("S")))),
            seq(ns("P"), pat!(ccup pat!(ccup ns("G"), ns("D")), ns("S"))),
        ),
        // pure S-type logical rules
        rule(
            "and_L",
            vec![seq(pat!(hwedge fml(sf("A")), fml(sf("B"))), xs("X"))],
            seq(fml(fpat!(and sf("A"), sf("B"))), xs("X")),
        ),
        rule(
            "and_R",
            vec![seq(xs("X"), fml(sf("A"))), seq(xs("Y"), fml(sf("B")))],
            seq(pat!(hwedge xs("X"), xs("Y")), fml(fpat!(and sf("A"), sf("B")))),
        ),
        rule(
            "neg_L",
            vec![seq(pat!(tneg fml(sf("A"))), xs("X"))],
            seq(fml(fpat!(neg sf("A"))), xs("X")),
        ),
        rule(
            "neg_R",
            vec![seq(xs("X"), pat!(tneg fml(sf("A"))))],
            seq(xs("X"), fml(fpat!(neg sf("A")))),
        ),
    ]
}

/// Display and logical rules specific to the monotone calculus.
fn nabla_rules() -> Vec<RuleSchema> {
    vec![
        birule(
            "d_nu",
            seq(pat!(hnu ns("G")), xs("X")),
            seq(ns("G"), pat!(cnuadj xs("X"))),
        ),
        birule(
            "d_nuc",
            seq(pat!(hnucadj xs("X")), ns("G")),
            seq(xs("X"), pat!(cnuc ns("G"))),
        ),
        birule(
            "d_in",
            seq(pat!(hin ns("G")), xs("X")),
            seq(ns("G"), pat!(cni xs("X"))),
        ),
        birule(
            "d_notni",
            seq(pat!(hnotni xs("X")), ns("G")),
            seq(xs("X"), pat!(cnotin ns("G"))),
        ),
        rule(
            "nu_L",
            vec![seq(pat!(hnu fml(nf("a"))), xs("X"))],
            seq(fml(fpat!(dianu nf("a"))), xs("X")),
        ),
        rule(
            "nu_R",
            vec![seq(ns("G"), fml(nf("a")))],
            seq(pat!(hnu ns("G")), fml(fpat!(dianu nf("a")))),
        ),
        rule(
            "nuc_L",
            vec![seq(fml(nf("a")), ns("G"))],
            seq(fml(fpat!(boxnuc nf("a"))), pat!(cnuc ns("G"))),
        ),
        rule(
            "nuc_R",
            vec![seq(xs("X"), pat!(cnuc fml(nf("a"))))],
            seq(xs("X"), fml(fpat!(boxnuc nf("a")))),
        ),
        rule(
            "notni_L",
            vec![seq(pat!(hnotni fml(sf("A"))), ns("G"))],
            seq(fml(fpat!(dianotni sf("A"))), ns("G")),
        ),
        rule(
            "notni_R",
            vec![seq(xs("X"), fml(sf("A")))],
            seq(pat!(hnotni xs("X")), fml(fpat!(dianotni sf("A")))),
        ),
        rule(
            "ni_L",
            vec![seq(fml(sf("A")), xs("X"))],
            seq(fml(fpat!(boxni sf("A"))), pat!(cni xs("X"))),
        ),
        rule(
            "ni_R",
            vec![seq(ns("G"), pat!(cni fml(sf("A"))))],
            seq(ns("G"), fml(fpat!(boxni sf("A")))),
        ),
    ]
}

/// Display and logical rules specific to the conditional calculus, which
/// also reuses `d_in`, `ni_L` and `ni_R` from the monotone set.
fn cond_rules() -> Vec<RuleSchema> {
    vec![
        birule(
            "d_in",
            seq(pat!(hin ns("G")), xs("X")),
            seq(ns("G"), pat!(cni xs("X"))),
        ),
        birule(
            "d_btri",
            seq(xs("X"), pat!(ctri ns("G"), xs("Y"))),
            seq(pat!(hblacktri ns("G"), xs("X")), xs("Y")),
        ),
        birule(
            "d_btrir",
            seq(ns("G"), pat!(cblacktrir xs("X"), xs("Y"))),
            seq(xs("X"), pat!(ctri ns("G"), xs("Y"))),
        ),
        birule(
            "d_notin",
            seq(xs("X"), pat!(cnotinr ns("G"))),
            seq(ns("G"), pat!(cnotnir xs("X"))),
        ),
        rule(
            "tri_L",
            vec![seq(ns("G"), fml(nf("a"))), seq(fml(sf("A")), xs("X"))],
            seq(
                fml(fpat!(tri nf("a"), sf("A"))),
                pat!(ctri ns("G"), xs("X")),
            ),
        ),
        rule(
            "tri_R",
            vec![seq(xs("X"), pat!(ctri fml(nf("a")), fml(sf("A"))))],
            seq(xs("X"), fml(fpat!(tri nf("a"), sf("A")))),
        ),
        rule(
            "notnir_L",
            vec![seq(xs("X"), fml(sf("A")))],
            seq(fml(fpat!(boxrnotni sf("A"))), pat!(cnotnir xs("X"))),
        ),
        rule(
            "notnir_R",
            vec![seq(ns("G"), pat!(cnotnir fml(sf("A"))))],
            seq(ns("G"), fml(fpat!(boxrnotni sf("A")))),
        ),
        rule(
            "cap_L",
            vec![seq(pat!(hcap fml(nf("a")), fml(nf("b"))), ns("G"))],
            seq(fml(fpat!(cap nf("a"), nf("b"))), ns("G")),
        ),
        rule(
            "cap_R",
            vec![seq(ns("G"), fml(nf("a"))), seq(ns("D"), fml(nf("b")))],
            seq(pat!(hcap ns("G"), ns("D")), fml(fpat!(cap nf("a"), nf("b")))),
        ),
        rule(
            "ni_L",
            vec![seq(fml(sf("A")), xs("X"))],
            seq(fml(fpat!(boxni sf("A"))), pat!(cni xs("X"))),
        ),
        rule(
            "ni_R",
            vec![seq(ns("G"), pat!(cni fml(sf("A"))))],
            seq(ns("G"), fml(fpat!(boxni sf("A")))),
        ),
    ]
}

/// The structural rule of one analytic axiomatic extension.
fn extension_rule(a: AxiomId) -> RuleSchema {
    match a {
        AxiomId::N => rule(
            "N",
            vec![seq(pat!(hnotni Pat::HTop), ns("G"))],
            seq(Pat::HTop, pat!(cnuc ns("G"))),
        ),
        AxiomId::P => rule(
            "P",
            vec![seq(ns("G"), pat!(cni Pat::CBot))],
            seq(Pat::HTop, pat!(tneg pat!(hnu ns("G")))),
        ),
        AxiomId::C => rule(
            "C",
            vec![seq(
                pat!(hnotni pat!(hwedge pat!(hin ns("G")), pat!(hin ns("D")))),
                ns("Q"),
            )],
            seq(
                pat!(hwedge pat!(hnu ns("G")), pat!(hnu ns("D"))),
                pat!(cnuc ns("Q")),
            ),
        ),
        AxiomId::T => rule(
            "T",
            vec![seq(ns("G"), pat!(cni xs("X")))],
            seq(pat!(hnu ns("G")), xs("X")),
        ),
        AxiomId::D => rule(
            "D",
            vec![seq(ns("G"), pat!(cni pat!(tneg pat!(hin ns("D")))))],
            seq(pat!(hnu ns("D")), pat!(tneg pat!(hnu ns("G")))),
        ),
        AxiomId::ID => rule(
            "ID",
            vec![
                seq(ns("D"), pat!(cnotnir pat!(hin ns("G")))),
                seq(pat!(hin ns("G")), xs("X")),
            ],
            seq(Pat::HTop, pat!(ctri pat!(hcap ns("G"), ns("D")), xs("X"))),
        ),
        AxiomId::CS => rule(
            "CS",
            vec![
                seq(ns("G"), pat!(cni pat!(cnotinr ns("D")))),
                seq(xs("X"), pat!(cnotinr ns("D"))),
                seq(xs("Y"), xs("Z")),
            ],
            seq(
                pat!(hwedge xs("X"), xs("Y")),
                pat!(ctri pat!(hcap ns("G"), ns("D")), xs("Z")),
            ),
        ),
        AxiomId::CEM => rule(
            "CEM",
            vec![
                seq(ns("P"), pat!(cnotnir pat!(hin ns("G")))),
                seq(ns("P"), pat!(cnotnir pat!(hin ns("Q")))),
                seq(ns("D"), pat!(cnotnir pat!(hin ns("G")))),
                seq(ns("D"), pat!(cnotnir pat!(hin ns("Q")))),
                seq(xs("Y"), xs("X")),
            ],
            seq(
                Pat::HTop,
                pat!(cvee
                    pat!(ctri pat!(hcap ns("G"), ns("D")), xs("X")),
                    pat!(ctri pat!(hcap ns("Q"), ns("P")), pat!(tneg xs("Y")))),
            ),
        ),
        AxiomId::Four | AxiomId::FourPrime | AxiomId::Five | AxiomId::B => {
            unreachable!("rejected by rule_schemas")
        }
    }
}

fn allowed_extensions(calc: Calculus) -> &'static [AxiomId] {
    match calc {
        Calculus::DmtNabla => &[AxiomId::N, AxiomId::P, AxiomId::C, AxiomId::T, AxiomId::D],
        Calculus::DmtCond => &[AxiomId::ID, AxiomId::CS, AxiomId::CEM],
    }
}

/// The rule set of a calculus with the requested axiomatic extensions.
pub fn rule_schemas(
    calc: Calculus,
    extensions: &[AxiomId],
) -> Result<Vec<RuleSchema>, RuleSetError> {
    let mut rules = propositional_base();
    match calc {
        Calculus::DmtNabla => rules.extend(nabla_rules()),
        Calculus::DmtCond => rules.extend(cond_rules()),
    }
    for &a in extensions {
        if matches!(
            a,
            AxiomId::Four | AxiomId::FourPrime | AxiomId::Five | AxiomId::B
        ) {
            return Err(RuleSetError::UnsupportedExtension(a));
        }
        if !allowed_extensions(calc).contains(&a) {
            return Err(RuleSetError::WrongCalculus(a, calc.name()));
        }
        rules.push(extension_rule(a));
    }
    Ok(rules)
}

/// All rules of a calculus including every extension it supports, for the
/// soundness sweep.
pub fn all_rules_with_extensions(calc: Calculus) -> Vec<RuleSchema> {
    rule_schemas(calc, allowed_extensions(calc)).unwrap()
}

/// Names of the extension rules of a calculus.
pub fn extension_axioms(calc: Calculus) -> &'static [AxiomId] {
    allowed_extensions(calc)
}

/// Premise counts a rule name can take, across both calculi and all
/// extensions; `None` when the name exists in neither. Both orientations
/// of a double-line rule have one premise, so no special casing.
pub fn rule_arities(name: &str) -> Option<Vec<usize>> {
    let mut arities = Vec::new();
    for calc in [Calculus::DmtNabla, Calculus::DmtCond] {
        for r in all_rules_with_extensions(calc) {
            if r.name == name && !arities.contains(&r.premises.len()) {
                arities.push(r.premises.len());
            }
        }
    }
    if arities.is_empty() {
        None
    } else {
        arities.sort_unstable();
        Some(arities)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_rule_sets_build() {
        let nabla = rule_schemas(Calculus::DmtNabla, &[]).unwrap();
        assert!(nabla.iter().any(|r| r.name == "res_S"));
        assert!(nabla.iter().any(|r| r.name == "d_nu"));
        assert!(!nabla.iter().any(|r| r.name == "tri_L"));

        let cond = rule_schemas(Calculus::DmtCond, &[]).unwrap();
        assert!(cond.iter().any(|r| r.name == "d_btri"));
        assert!(cond.iter().any(|r| r.name == "ni_L"));
        assert!(!cond.iter().any(|r| r.name == "nu_L"));
    }

    #[test]
    fn matching_instantiates_extension_conclusions() {
        use super::super::schema::{Binding, MetaVar};
        use super::super::structure::{Sequent, Structure};
        use crate::syntax::MTFormula as M;

        // rule T's conclusion <nu-hat>G |- X against <nu-hat>[ni]a |- a
        let rules = rule_schemas(Calculus::DmtNabla, &[AxiomId::T]).unwrap();
        let t = rules.iter().find(|r| r.name == "T").unwrap();
        let concl = Sequent::new(
            Structure::HNu(Box::new(Structure::Formula(M::box_ni(M::var("a"))))),
            Structure::Formula(M::var("a")),
        );
        let matches = t.match_conclusion(&concl);
        assert_eq!(matches.len(), 1);
        let subst = &matches[0];
        assert_eq!(
            subst[&MetaVar::NStruct("G")],
            Binding::Structure(Structure::Formula(M::box_ni(M::var("a"))))
        );
        assert_eq!(
            subst[&MetaVar::SStruct("X")],
            Binding::Structure(Structure::Formula(M::var("a")))
        );

        // no match for an S-shaped left side
        let bad = Sequent::new(Structure::Formula(M::var("a")), Structure::Formula(M::var("a")));
        assert!(t.match_conclusion(&bad).is_empty());
    }

    #[test]
    fn extensions_validated() {
        assert!(rule_schemas(Calculus::DmtNabla, &[AxiomId::T]).is_ok());
        assert_eq!(
            rule_schemas(Calculus::DmtNabla, &[AxiomId::Four]),
            Err(RuleSetError::UnsupportedExtension(AxiomId::Four))
        );
        assert_eq!(
            rule_schemas(Calculus::DmtNabla, &[AxiomId::ID]),
            Err(RuleSetError::WrongCalculus(AxiomId::ID, "dmt-nabla"))
        );
        let with_cem = rule_schemas(Calculus::DmtCond, &[AxiomId::CEM]).unwrap();
        let cem = with_cem.iter().find(|r| r.name == "CEM").unwrap();
        assert_eq!(cem.premises.len(), 5);
    }
}
