//! Reading structures as formulas. Hatted connectives are interpretable in
//! precedent position, checked ones in succedent position; the tilde
//! negations read as Boolean negation in both positions and flip the
//! position of their child, as do the order-reversing coordinates of the
//! checked conditional connectives. The structural-only connectives read
//! as the adjoint operators of the complex algebra.

use super::structure::{Sequent, Structure};
use crate::syntax::{Inequality, MTFormula};
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Position {
    Precedent,
    Succedent,
}

impl Position {
    pub fn flip(self) -> Position {
        match self {
            Position::Precedent => Position::Succedent,
            Position::Succedent => Position::Precedent,
        }
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("structure connective {connective} is not interpretable in {position:?} position")]
pub struct InterpretError {
    pub connective: &'static str,
    pub position: Position,
}

/// Interpret a structure as a formula relative to its position.
pub fn interpret_structure(s: &Structure, pos: Position) -> Result<MTFormula, InterpretError> {
    use Position::*;
    use Structure::*;
    let fail = |connective| {
        Err(InterpretError {
            connective,
            position: pos,
        })
    };
    match (s, pos) {
        (Formula(f), _) => Ok(f.clone()),
        (TNeg(x), _) => Ok(MTFormula::neg(interpret_structure(x, pos.flip())?)),
        (TSim(x), _) => Ok(MTFormula::sim(interpret_structure(x, pos.flip())?)),
        (HTop, Precedent) => Ok(MTFormula::Top),
        (HTop, Succedent) => fail("htop"),
        (CBot, Succedent) => Ok(MTFormula::Bot),
        (CBot, Precedent) => fail("cbot"),
        (HOne, Precedent) => Ok(MTFormula::One),
        (HOne, Succedent) => fail("hone"),
        (CZero, Succedent) => Ok(MTFormula::Zero),
        (CZero, Precedent) => fail("czero"),
        (HWedge(a, b), Precedent) => Ok(MTFormula::and(
            interpret_structure(a, pos)?,
            interpret_structure(b, pos)?,
        )),
        (HWedge(..), Succedent) => fail("hwedge"),
        (CVee(a, b), Succedent) => Ok(MTFormula::or(
            interpret_structure(a, pos)?,
            interpret_structure(b, pos)?,
        )),
        (CVee(..), Precedent) => fail("cvee"),
        (HCap(a, b), Precedent) => Ok(MTFormula::cap(
            interpret_structure(a, pos)?,
            interpret_structure(b, pos)?,
        )),
        (HCap(..), Succedent) => fail("hcap"),
        (CCup(a, b), Succedent) => Ok(MTFormula::cup(
            interpret_structure(a, pos)?,
            interpret_structure(b, pos)?,
        )),
        (CCup(..), Precedent) => fail("ccup"),
        (HNu(a), Precedent) => Ok(MTFormula::dia_nu(interpret_structure(a, pos)?)),
        (HNu(_), Succedent) => fail("hnu"),
        (CNuc(a), Succedent) => Ok(MTFormula::box_nuc(interpret_structure(a, pos)?)),
        (CNuc(_), Precedent) => fail("cnuc"),
        (HIn(a), Precedent) => Ok(MTFormula::DiaIn(Box::new(interpret_structure(a, pos)?))),
        (HIn(_), Succedent) => fail("hin"),
        (CNotIn(a), Succedent) => Ok(MTFormula::BoxNotIn(Box::new(interpret_structure(a, pos)?))),
        (CNotIn(_), Precedent) => fail("cnotin"),
        // first coordinate of the conditional is order-reversing
        (CTri(a, b), Succedent) => Ok(MTFormula::tri(
            interpret_structure(a, pos.flip())?,
            interpret_structure(b, pos)?,
        )),
        (CTri(..), Precedent) => fail("ctri"),
        (HBlackTri(a, b), Precedent) => Ok(MTFormula::BTri(
            Box::new(interpret_structure(a, pos)?),
            Box::new(interpret_structure(b, pos)?),
        )),
        (HBlackTri(..), Succedent) => fail("hblacktri"),
        (CNotInR(a), Succedent) => Ok(MTFormula::BoxrNotIn(Box::new(interpret_structure(
            a,
            pos.flip(),
        )?))),
        (CNotInR(_), Precedent) => fail("cnotinr"),
        (CNi(a), Succedent) => Ok(MTFormula::box_ni(interpret_structure(a, pos)?)),
        (CNi(_), Precedent) => fail("cni"),
        (HNotNi(a), Precedent) => Ok(MTFormula::dia_notni(interpret_structure(a, pos)?)),
        (HNotNi(_), Succedent) => fail("hnotni"),
        (CNuAdj(a), Succedent) => Ok(MTFormula::BoxNuAdj(Box::new(interpret_structure(a, pos)?))),
        (CNuAdj(_), Precedent) => fail("cnuadj"),
        (HNucAdj(a), Precedent) => Ok(MTFormula::DiaNucAdj(Box::new(interpret_structure(
            a, pos,
        )?))),
        (HNucAdj(_), Succedent) => fail("hnucadj"),
        (CNotNiR(a), Succedent) => Ok(MTFormula::boxr_notni(interpret_structure(a, pos.flip())?)),
        (CNotNiR(_), Precedent) => fail("cnotnir"),
        (CBlackTriR(a, b), Succedent) => Ok(MTFormula::BTriR(
            Box::new(interpret_structure(a, pos.flip())?),
            Box::new(interpret_structure(b, pos)?),
        )),
        (CBlackTriR(..), Precedent) => fail("cblacktrir"),
    }
}

/// Interpret a sequent as the inequality `lhs-reading <= rhs-reading`.
pub fn interpret_sequent(seq: &Sequent) -> Result<Inequality, InterpretError> {
    let lhs = interpret_structure(&seq.lhs, Position::Precedent)?;
    let rhs = interpret_structure(&seq.rhs, Position::Succedent)?;
    Ok(Inequality::new(lhs, rhs).expect("display sequents relate equal sorts"))
}
