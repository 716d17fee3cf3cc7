//! Structural language of the display calculi: trees over hatted
//! (precedent-flavoured) and checked (succedent-flavoured) structural
//! connectives with formula leaves, and sequents between them.

use crate::syntax::{MTFormula, Sort};
use std::fmt;

/// A structure. Naming: `H` = hatted, `C` = checked, `T` = tilde.
/// The comment gives the sort signature.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Structure {
    /// Formula leaf.
    Formula(MTFormula),
    HTop,                                   // S
    CBot,                                   // S
    TNeg(Box<Structure>),                   // S -> S
    HWedge(Box<Structure>, Box<Structure>), // S x S -> S
    CVee(Box<Structure>, Box<Structure>),   // S x S -> S
    HNu(Box<Structure>),                    // N -> S
    CNuc(Box<Structure>),                   // N -> S
    HIn(Box<Structure>),                    // N -> S
    CNotIn(Box<Structure>),                 // N -> S
    CTri(Box<Structure>, Box<Structure>),   // N x S -> S
    HBlackTri(Box<Structure>, Box<Structure>), // N x S -> S
    CNotInR(Box<Structure>),                // N -> S
    HOne,                                   // N
    CZero,                                  // N
    TSim(Box<Structure>),                   // N -> N
    HCap(Box<Structure>, Box<Structure>),   // N x N -> N
    CCup(Box<Structure>, Box<Structure>),   // N x N -> N
    CNi(Box<Structure>),                    // S -> N
    HNotNi(Box<Structure>),                 // S -> N
    CNuAdj(Box<Structure>),                 // S -> N
    HNucAdj(Box<Structure>),                // S -> N
    CNotNiR(Box<Structure>),                // S -> N
    CBlackTriR(Box<Structure>, Box<Structure>), // S x S -> N
}

impl Structure {
    pub fn fml(f: MTFormula) -> Structure {
        Structure::Formula(f)
    }

    pub fn sort(&self) -> Sort {
        use Structure::*;
        match self {
            Formula(f) => f.sort(),
            HTop | CBot | TNeg(_) | HWedge(..) | CVee(..) | HNu(_) | CNuc(_) | HIn(_)
            | CNotIn(_) | CTri(..) | HBlackTri(..) | CNotInR(_) => Sort::S,
            HOne | CZero | TSim(_) | HCap(..) | CCup(..) | CNi(_) | HNotNi(_) | CNuAdj(_)
            | HNucAdj(_) | CNotNiR(_) | CBlackTriR(..) => Sort::N,
        }
    }

    pub fn children_with_expected_sorts(&self) -> Vec<(&Structure, Sort)> {
        use Structure::*;
        match self {
            Formula(_) | HTop | CBot | HOne | CZero => vec![],
            TNeg(a) => vec![(a, Sort::S)],
            HWedge(a, b) | CVee(a, b) => vec![(a, Sort::S), (b, Sort::S)],
            HNu(a) | CNuc(a) | HIn(a) | CNotIn(a) | CNotInR(a) => vec![(a, Sort::N)],
            CTri(a, b) | HBlackTri(a, b) => vec![(a, Sort::N), (b, Sort::S)],
            TSim(a) => vec![(a, Sort::N)],
            HCap(a, b) | CCup(a, b) => vec![(a, Sort::N), (b, Sort::N)],
            CNi(a) | HNotNi(a) | CNuAdj(a) | HNucAdj(a) | CNotNiR(a) => vec![(a, Sort::S)],
            CBlackTriR(a, b) => vec![(a, Sort::S), (b, Sort::S)],
        }
    }

    pub fn well_sorted(&self) -> bool {
        match self {
            Structure::Formula(f) => f.well_sorted(),
            _ => self
                .children_with_expected_sorts()
                .iter()
                .all(|(c, expected)| c.sort() == *expected && c.well_sorted()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Sequent {
    pub lhs: Structure,
    pub rhs: Structure,
}

impl Sequent {
    pub fn new(lhs: Structure, rhs: Structure) -> Sequent {
        Sequent { lhs, rhs }
    }

    pub fn sort_consistent(&self) -> bool {
        self.lhs.sort() == self.rhs.sort()
    }

    pub fn well_sorted(&self) -> bool {
        self.sort_consistent() && self.lhs.well_sorted() && self.rhs.well_sorted()
    }
}

impl fmt::Display for Sequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            crate::text::print_sequent(self)
        )
    }
}

/// A rule-labelled derivation tree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProofTree {
    pub rule: String,
    pub conclusion: Sequent,
    pub children: Vec<ProofTree>,
}

impl ProofTree {
    pub fn leaf(rule: impl Into<String>, conclusion: Sequent) -> ProofTree {
        ProofTree {
            rule: rule.into(),
            conclusion,
            children: Vec::new(),
        }
    }

    pub fn node(
        rule: impl Into<String>,
        conclusion: Sequent,
        children: Vec<ProofTree>,
    ) -> ProofTree {
        ProofTree {
            rule: rule.into(),
            conclusion,
            children,
        }
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(|c| c.size()).sum::<usize>()
    }
}
