//! Rule schemas and first-order matching of schematic sequents against
//! concrete ones. Matching is rigid: structural connectives match only
//! themselves, and repeated metavariables must match equal subterms.

use super::structure::{Sequent, Structure};
use crate::syntax::MTFormula;
use std::collections::BTreeMap;
use std::fmt;

/// Metavariable kinds. Structure variables stand for arbitrary structures
/// of one sort; formula variables for arbitrary formulas of one sort; atom
/// variables only for propositional variables.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MetaVar {
    SStruct(&'static str),
    NStruct(&'static str),
    SFormula(&'static str),
    NFormula(&'static str),
    Atom(&'static str),
}

impl fmt::Display for MetaVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MetaVar::SStruct(n)
            | MetaVar::NStruct(n)
            | MetaVar::SFormula(n)
            | MetaVar::NFormula(n)
            | MetaVar::Atom(n) => f.write_str(n),
        }
    }
}

/// Schematic formulas: the formula constructors that appear in rules, over
/// formula metavariables.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FmlPat {
    Meta(MetaVar),
    Top,
    Bot,
    Neg(Box<FmlPat>),
    And(Box<FmlPat>, Box<FmlPat>),
    DiaNu(Box<FmlPat>),
    BoxNuc(Box<FmlPat>),
    BoxNi(Box<FmlPat>),
    DiaNotNi(Box<FmlPat>),
    BoxrNotNi(Box<FmlPat>),
    Tri(Box<FmlPat>, Box<FmlPat>),
    Cap(Box<FmlPat>, Box<FmlPat>),
}

/// Schematic structures.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Pat {
    Meta(MetaVar),
    Fml(FmlPat),
    HTop,
    CBot,
    HOne,
    CZero,
    TNeg(Box<Pat>),
    TSim(Box<Pat>),
    HWedge(Box<Pat>, Box<Pat>),
    CVee(Box<Pat>, Box<Pat>),
    HCap(Box<Pat>, Box<Pat>),
    CCup(Box<Pat>, Box<Pat>),
    HNu(Box<Pat>),
    CNuc(Box<Pat>),
    HIn(Box<Pat>),
    CNotIn(Box<Pat>),
    CTri(Box<Pat>, Box<Pat>),
    HBlackTri(Box<Pat>, Box<Pat>),
    CNotInR(Box<Pat>),
    CNi(Box<Pat>),
    HNotNi(Box<Pat>),
    CNuAdj(Box<Pat>),
    HNucAdj(Box<Pat>),
    CNotNiR(Box<Pat>),
    CBlackTriR(Box<Pat>, Box<Pat>),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SequentPat {
    pub lhs: Pat,
    pub rhs: Pat,
}

impl SequentPat {
    pub fn new(lhs: Pat, rhs: Pat) -> SequentPat {
        SequentPat { lhs, rhs }
    }

    pub fn metavars(&self) -> Vec<MetaVar> {
        let mut out = Vec::new();
        collect_pat_vars(&self.lhs, &mut out);
        collect_pat_vars(&self.rhs, &mut out);
        out
    }
}

fn collect_fml_vars(p: &FmlPat, out: &mut Vec<MetaVar>) {
    match p {
        FmlPat::Meta(v) => {
            if !out.contains(v) {
                out.push(*v);
            }
        }
        FmlPat::Top | FmlPat::Bot => {}
        FmlPat::Neg(a)
        | FmlPat::DiaNu(a)
        | FmlPat::BoxNuc(a)
        | FmlPat::BoxNi(a)
        | FmlPat::DiaNotNi(a)
        | FmlPat::BoxrNotNi(a) => collect_fml_vars(a, out),
        FmlPat::And(a, b) | FmlPat::Tri(a, b) | FmlPat::Cap(a, b) => {
            collect_fml_vars(a, out);
            collect_fml_vars(b, out);
        }
    }
}

fn collect_pat_vars(p: &Pat, out: &mut Vec<MetaVar>) {
    match p {
        Pat::Meta(v) => {
            if !out.contains(v) {
                out.push(*v);
            }
        }
        Pat::Fml(f) => collect_fml_vars(f, out),
        Pat::HTop | Pat::CBot | Pat::HOne | Pat::CZero => {}
        Pat::TNeg(a)
        | Pat::TSim(a)
        | Pat::HNu(a)
        | Pat::CNuc(a)
        | Pat::HIn(a)
        | Pat::CNotIn(a)
        | Pat::CNotInR(a)
        | Pat::CNi(a)
        | Pat::HNotNi(a)
        | Pat::CNuAdj(a)
        | Pat::HNucAdj(a)
        | Pat::CNotNiR(a) => collect_pat_vars(a, out),
        Pat::HWedge(a, b)
        | Pat::CVee(a, b)
        | Pat::HCap(a, b)
        | Pat::CCup(a, b)
        | Pat::CTri(a, b)
        | Pat::HBlackTri(a, b)
        | Pat::CBlackTriR(a, b) => {
            collect_pat_vars(a, out);
            collect_pat_vars(b, out);
        }
    }
}

/// What a metavariable is bound to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Binding {
    Structure(Structure),
    Formula(MTFormula),
}

pub type Substitution = BTreeMap<MetaVar, Binding>;

fn bind(
    subst: &mut Substitution,
    var: MetaVar,
    value: Binding,
) -> bool {
    match subst.get(&var) {
        Some(existing) => *existing == value,
        None => {
            subst.insert(var, value);
            true
        }
    }
}

fn match_fml(pat: &FmlPat, f: &MTFormula, subst: &mut Substitution) -> bool {
    use crate::syntax::Sort;
    match (pat, f) {
        (FmlPat::Meta(v @ MetaVar::SFormula(_)), f) => {
            f.sort() == Sort::S && bind(subst, *v, Binding::Formula(f.clone()))
        }
        (FmlPat::Meta(v @ MetaVar::NFormula(_)), f) => {
            f.sort() == Sort::N && bind(subst, *v, Binding::Formula(f.clone()))
        }
        (FmlPat::Meta(v @ MetaVar::Atom(_)), f @ MTFormula::Var(_)) => {
            bind(subst, *v, Binding::Formula(f.clone()))
        }
        (FmlPat::Meta(MetaVar::Atom(_)), _) => false,
        (FmlPat::Meta(_), _) => false,
        (FmlPat::Top, MTFormula::Top) | (FmlPat::Bot, MTFormula::Bot) => true,
        (FmlPat::Neg(a), MTFormula::Neg(x)) => match_fml(a, x, subst),
        (FmlPat::And(a, b), MTFormula::And(x, y)) => {
            match_fml(a, x, subst) && match_fml(b, y, subst)
        }
        (FmlPat::DiaNu(a), MTFormula::DiaNu(x)) => match_fml(a, x, subst),
        (FmlPat::BoxNuc(a), MTFormula::BoxNuc(x)) => match_fml(a, x, subst),
        (FmlPat::BoxNi(a), MTFormula::BoxNi(x)) => match_fml(a, x, subst),
        (FmlPat::DiaNotNi(a), MTFormula::DiaNotNi(x)) => match_fml(a, x, subst),
        (FmlPat::BoxrNotNi(a), MTFormula::BoxrNotNi(x)) => match_fml(a, x, subst),
        (FmlPat::Tri(a, b), MTFormula::Tri(x, y)) => {
            match_fml(a, x, subst) && match_fml(b, y, subst)
        }
        (FmlPat::Cap(a, b), MTFormula::Cap(x, y)) => {
            match_fml(a, x, subst) && match_fml(b, y, subst)
        }
        _ => false,
    }
}

fn match_pat(pat: &Pat, s: &Structure, subst: &mut Substitution) -> bool {
    use crate::syntax::Sort;
    match (pat, s) {
        (Pat::Meta(v @ MetaVar::SStruct(_)), s) => {
            s.sort() == Sort::S && bind(subst, *v, Binding::Structure(s.clone()))
        }
        (Pat::Meta(v @ MetaVar::NStruct(_)), s) => {
            s.sort() == Sort::N && bind(subst, *v, Binding::Structure(s.clone()))
        }
        (Pat::Meta(_), _) => false,
        (Pat::Fml(fp), Structure::Formula(f)) => match_fml(fp, f, subst),
        (Pat::Fml(_), _) => false,
        (Pat::HTop, Structure::HTop)
        | (Pat::CBot, Structure::CBot)
        | (Pat::HOne, Structure::HOne)
        | (Pat::CZero, Structure::CZero) => true,
        (Pat::TNeg(a), Structure::TNeg(x)) => match_pat(a, x, subst),
        (Pat::TSim(a), Structure::TSim(x)) => match_pat(a, x, subst),
        (Pat::HWedge(a, b), Structure::HWedge(x, y))
        | (Pat::CVee(a, b), Structure::CVee(x, y))
        | (Pat::HCap(a, b), Structure::HCap(x, y))
        | (Pat::CCup(a, b), Structure::CCup(x, y))
        | (Pat::CTri(a, b), Structure::CTri(x, y))
        | (Pat::HBlackTri(a, b), Structure::HBlackTri(x, y))
        | (Pat::CBlackTriR(a, b), Structure::CBlackTriR(x, y)) => {
            match_pat(a, x, subst) && match_pat(b, y, subst)
        }
        (Pat::HNu(a), Structure::HNu(x))
        | (Pat::CNuc(a), Structure::CNuc(x))
        | (Pat::HIn(a), Structure::HIn(x))
        | (Pat::CNotIn(a), Structure::CNotIn(x))
        | (Pat::CNotInR(a), Structure::CNotInR(x))
        | (Pat::CNi(a), Structure::CNi(x))
        | (Pat::HNotNi(a), Structure::HNotNi(x))
        | (Pat::CNuAdj(a), Structure::CNuAdj(x))
        | (Pat::HNucAdj(a), Structure::HNucAdj(x))
        | (Pat::CNotNiR(a), Structure::CNotNiR(x)) => match_pat(a, x, subst),
        _ => false,
    }
}

/// Match a schematic sequent against a concrete one, extending `subst`.
/// First-order matching is deterministic, so the result is a yes/no plus
/// the extension; on failure `subst` may hold partial bindings and should
/// be discarded by the caller.
pub fn match_sequent(pat: &SequentPat, seq: &Sequent, subst: &mut Substitution) -> bool {
    match_pat(&pat.lhs, &seq.lhs, subst) && match_pat(&pat.rhs, &seq.rhs, subst)
}

fn instantiate_fml(pat: &FmlPat, subst: &Substitution) -> Option<MTFormula> {
    Some(match pat {
        FmlPat::Meta(v) => match subst.get(v)? {
            Binding::Formula(f) => f.clone(),
            Binding::Structure(_) => return None,
        },
        FmlPat::Top => MTFormula::Top,
        FmlPat::Bot => MTFormula::Bot,
        FmlPat::Neg(a) => MTFormula::neg(instantiate_fml(a, subst)?),
        FmlPat::And(a, b) => {
            MTFormula::and(instantiate_fml(a, subst)?, instantiate_fml(b, subst)?)
        }
        FmlPat::DiaNu(a) => MTFormula::dia_nu(instantiate_fml(a, subst)?),
        FmlPat::BoxNuc(a) => MTFormula::box_nuc(instantiate_fml(a, subst)?),
        FmlPat::BoxNi(a) => MTFormula::box_ni(instantiate_fml(a, subst)?),
        FmlPat::DiaNotNi(a) => MTFormula::dia_notni(instantiate_fml(a, subst)?),
        FmlPat::BoxrNotNi(a) => MTFormula::boxr_notni(instantiate_fml(a, subst)?),
        FmlPat::Tri(a, b) => MTFormula::tri(instantiate_fml(a, subst)?, instantiate_fml(b, subst)?),
        FmlPat::Cap(a, b) => MTFormula::cap(instantiate_fml(a, subst)?, instantiate_fml(b, subst)?),
    })
}

fn instantiate_pat(pat: &Pat, subst: &Substitution) -> Option<Structure> {
    use Structure as S;
    macro_rules! u {
        ($ctor:ident, $a:expr) => {
            S::$ctor(Box::new(instantiate_pat($a, subst)?))
        };
    }
    macro_rules! b {
        ($ctor:ident, $a:expr, $b:expr) => {
            S::$ctor(
                Box::new(instantiate_pat($a, subst)?),
                Box::new(instantiate_pat($b, subst)?),
            )
        };
    }
    Some(match pat {
        Pat::Meta(v) => match subst.get(v)? {
            Binding::Structure(s) => s.clone(),
            Binding::Formula(f) => S::Formula(f.clone()),
        },
        Pat::Fml(f) => S::Formula(instantiate_fml(f, subst)?),
        Pat::HTop => S::HTop,
        Pat::CBot => S::CBot,
        Pat::HOne => S::HOne,
        Pat::CZero => S::CZero,
        Pat::TNeg(a) => u!(TNeg, a),
        Pat::TSim(a) => u!(TSim, a),
        Pat::HWedge(a, b) => b!(HWedge, a, b),
        Pat::CVee(a, b) => b!(CVee, a, b),
        Pat::HCap(a, b) => b!(HCap, a, b),
        Pat::CCup(a, b) => b!(CCup, a, b),
        Pat::HNu(a) => u!(HNu, a),
        Pat::CNuc(a) => u!(CNuc, a),
        Pat::HIn(a) => u!(HIn, a),
        Pat::CNotIn(a) => u!(CNotIn, a),
        Pat::CTri(a, b) => b!(CTri, a, b),
        Pat::HBlackTri(a, b) => b!(HBlackTri, a, b),
        Pat::CNotInR(a) => u!(CNotInR, a),
        Pat::CNi(a) => u!(CNi, a),
        Pat::HNotNi(a) => u!(HNotNi, a),
        Pat::CNuAdj(a) => u!(CNuAdj, a),
        Pat::HNucAdj(a) => u!(HNucAdj, a),
        Pat::CNotNiR(a) => u!(CNotNiR, a),
        Pat::CBlackTriR(a, b) => b!(CBlackTriR, a, b),
    })
}

/// Apply a substitution to a schematic sequent. `None` when some
/// metavariable is unbound (or bound at the wrong kind).
pub fn instantiate_sequent(pat: &SequentPat, subst: &Substitution) -> Option<Sequent> {
    Some(Sequent::new(
        instantiate_pat(&pat.lhs, subst)?,
        instantiate_pat(&pat.rhs, subst)?,
    ))
}

/// A rule schema. Double-line rules are stored once with `bidirectional`
/// set; the checker and search accept both orientations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RuleSchema {
    pub name: &'static str,
    pub premises: Vec<SequentPat>,
    pub conclusion: SequentPat,
    pub bidirectional: bool,
}

impl RuleSchema {
    /// All substitutions matching the conclusion (zero or one: matching is
    /// deterministic).
    pub fn match_conclusion(&self, concl: &Sequent) -> Vec<Substitution> {
        let mut subst = Substitution::new();
        if match_sequent(&self.conclusion, concl, &mut subst) {
            vec![subst]
        } else {
            vec![]
        }
    }

    /// The reversed orientation of a bidirectional one-premise rule.
    pub fn reversed(&self) -> Option<RuleSchema> {
        if !self.bidirectional || self.premises.len() != 1 {
            return None;
        }
        Some(RuleSchema {
            name: self.name,
            premises: vec![self.conclusion.clone()],
            conclusion: self.premises[0].clone(),
            bidirectional: true,
        })
    }
}
