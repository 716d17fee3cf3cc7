//! Sorted abstract syntax for the single-type languages (monotone `nabla`
//! and conditional `>`) and the two-sorted languages they translate into.
//!
//! Multi-type formulas carry one of two sorts: `S` (sets of states) and `N`
//! (neighbourhoods). Every connective has a fixed signature; `well_sorted`
//! checks that the children of each node match it. The adjoint connectives
//! (`dia-in`, `box-nu-adj`, ...) have no logical introduction rules in the
//! calculi but exist in every complex algebra, so they are first-class here:
//! structural-language interpretation produces them.

use crate::symbol::Symbol;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sort {
    S,
    N,
}

impl fmt::Display for Sort {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sort::S => write!(f, "S"),
            Sort::N => write!(f, "N"),
        }
    }
}

/// Single-type formulas of the monotone and conditional languages.
///
/// `or`, `imp` and `iff` are surface syntax only; the parser expands them
/// into this normal form. `top` and `bot` stay primitive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum STFormula {
    Var(Symbol),
    Top,
    Bot,
    Neg(Box<STFormula>),
    And(Box<STFormula>, Box<STFormula>),
    Nabla(Box<STFormula>),
    Cond(Box<STFormula>, Box<STFormula>),
}

/// Which modality a single-type formula uses.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StLanguage {
    /// Boolean only: belongs to both languages.
    Pure,
    /// Uses `nabla`.
    Nabla,
    /// Uses `>`.
    Conditional,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SyntaxError {
    #[error("formula mixes the nabla and conditional languages")]
    MixedLanguage,
    #[error("substitution image must be S-sorted, got sort N")]
    SubstituteNSorted,
    #[error("inequality sides have different sorts ({0} vs {1})")]
    UnequalSorts(Sort, Sort),
    #[error("dependency order is not irreflexive: {0} < {0}")]
    ReflexiveDependency(Symbol),
}

impl STFormula {
    pub fn var(name: &str) -> STFormula {
        STFormula::Var(Symbol::new(name))
    }

    pub fn neg(f: STFormula) -> STFormula {
        STFormula::Neg(Box::new(f))
    }

    pub fn and(a: STFormula, b: STFormula) -> STFormula {
        STFormula::And(Box::new(a), Box::new(b))
    }

    /// `a or b`, expanded as `neg (neg a and neg b)`.
    pub fn or(a: STFormula, b: STFormula) -> STFormula {
        STFormula::neg(STFormula::and(STFormula::neg(a), STFormula::neg(b)))
    }

    /// `a -> b`, expanded as `neg (a and neg b)`.
    pub fn imp(a: STFormula, b: STFormula) -> STFormula {
        STFormula::neg(STFormula::and(a, STFormula::neg(b)))
    }

    pub fn nabla(f: STFormula) -> STFormula {
        STFormula::Nabla(Box::new(f))
    }

    pub fn cond(a: STFormula, b: STFormula) -> STFormula {
        STFormula::Cond(Box::new(a), Box::new(b))
    }

    pub fn children(&self) -> Vec<&STFormula> {
        match self {
            STFormula::Var(_) | STFormula::Top | STFormula::Bot => vec![],
            STFormula::Neg(a) | STFormula::Nabla(a) => vec![a],
            STFormula::And(a, b) | STFormula::Cond(a, b) => vec![a, b],
        }
    }

    /// The language a formula belongs to, or an error if it uses both
    /// modalities.
    pub fn language(&self) -> Result<StLanguage, SyntaxError> {
        let mut uses_nabla = false;
        let mut uses_cond = false;
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                STFormula::Nabla(_) => uses_nabla = true,
                STFormula::Cond(_, _) => uses_cond = true,
                _ => {}
            }
            stack.extend(f.children());
        }
        match (uses_nabla, uses_cond) {
            (true, true) => Err(SyntaxError::MixedLanguage),
            (true, false) => Ok(StLanguage::Nabla),
            (false, true) => Ok(StLanguage::Conditional),
            (false, false) => Ok(StLanguage::Pure),
        }
    }

    pub fn variables(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if let STFormula::Var(v) = f {
                out.insert(*v);
            }
            stack.extend(f.children());
        }
        out
    }
}

/// Two-sorted formulas. The first block produces sort `S`, the second
/// sort `N`; the comment on each connective gives its signature.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum MTFormula {
    // S-sorted
    Var(Symbol),
    Top,
    Bot,
    Neg(Box<MTFormula>),              // S -> S
    And(Box<MTFormula>, Box<MTFormula>), // S x S -> S
    Or(Box<MTFormula>, Box<MTFormula>),  // S x S -> S
    DiaNu(Box<MTFormula>),            // N -> S
    BoxNuc(Box<MTFormula>),           // N -> S
    Tri(Box<MTFormula>, Box<MTFormula>), // N x S -> S
    DiaIn(Box<MTFormula>),            // N -> S (adjoint of box-ni)
    BoxNotIn(Box<MTFormula>),         // N -> S (adjoint of dia-notni)
    BoxrNotIn(Box<MTFormula>),        // N -> S (galois partner of boxr-notni)
    BTri(Box<MTFormula>, Box<MTFormula>), // N x S -> S (residual of tri)
    // N-sorted
    One,
    Zero,
    Sim(Box<MTFormula>),              // N -> N
    Cap(Box<MTFormula>, Box<MTFormula>), // N x N -> N
    Cup(Box<MTFormula>, Box<MTFormula>), // N x N -> N
    BoxNi(Box<MTFormula>),            // S -> N
    DiaNotNi(Box<MTFormula>),         // S -> N
    BoxrNotNi(Box<MTFormula>),        // S -> N
    BoxNuAdj(Box<MTFormula>),         // S -> N (adjoint of dia-nu)
    DiaNucAdj(Box<MTFormula>),        // S -> N (adjoint of box-nuc)
    BTriR(Box<MTFormula>, Box<MTFormula>), // S x S -> N (residual of tri)
}

/// Which multi-type language a formula belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MtLanguage {
    /// Booleans and `box-ni` only: belongs to both languages.
    Shared,
    /// Uses `dia-nu`, `box-nuc` or `dia-notni`.
    Nabla,
    /// Uses `tri` or `boxr-notni`.
    Conditional,
    /// Uses adjoint connectives outside both object languages.
    Extended,
}

impl MTFormula {
    pub fn var(name: &str) -> MTFormula {
        MTFormula::Var(Symbol::new(name))
    }

    pub fn neg(f: MTFormula) -> MTFormula {
        MTFormula::Neg(Box::new(f))
    }

    pub fn and(a: MTFormula, b: MTFormula) -> MTFormula {
        MTFormula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: MTFormula, b: MTFormula) -> MTFormula {
        MTFormula::Or(Box::new(a), Box::new(b))
    }

    pub fn dia_nu(f: MTFormula) -> MTFormula {
        MTFormula::DiaNu(Box::new(f))
    }

    pub fn box_nuc(f: MTFormula) -> MTFormula {
        MTFormula::BoxNuc(Box::new(f))
    }

    pub fn tri(a: MTFormula, b: MTFormula) -> MTFormula {
        MTFormula::Tri(Box::new(a), Box::new(b))
    }

    pub fn sim(f: MTFormula) -> MTFormula {
        MTFormula::Sim(Box::new(f))
    }

    pub fn cap(a: MTFormula, b: MTFormula) -> MTFormula {
        MTFormula::Cap(Box::new(a), Box::new(b))
    }

    pub fn cup(a: MTFormula, b: MTFormula) -> MTFormula {
        MTFormula::Cup(Box::new(a), Box::new(b))
    }

    pub fn box_ni(f: MTFormula) -> MTFormula {
        MTFormula::BoxNi(Box::new(f))
    }

    pub fn dia_notni(f: MTFormula) -> MTFormula {
        MTFormula::DiaNotNi(Box::new(f))
    }

    pub fn boxr_notni(f: MTFormula) -> MTFormula {
        MTFormula::BoxrNotNi(Box::new(f))
    }

    /// The sort of the topmost connective. Defined regardless of whether
    /// the formula is well sorted.
    pub fn sort(&self) -> Sort {
        use MTFormula::*;
        match self {
            Var(_) | Top | Bot | Neg(_) | And(..) | Or(..) | DiaNu(_) | BoxNuc(_) | Tri(..)
            | DiaIn(_) | BoxNotIn(_) | BoxrNotIn(_) | BTri(..) => Sort::S,
            One | Zero | Sim(_) | Cap(..) | Cup(..) | BoxNi(_) | DiaNotNi(_) | BoxrNotNi(_)
            | BoxNuAdj(_) | DiaNucAdj(_) | BTriR(..) => Sort::N,
        }
    }

    /// Child formulas paired with the sort the signature demands for them.
    pub fn children_with_expected_sorts(&self) -> Vec<(&MTFormula, Sort)> {
        use MTFormula::*;
        match self {
            Var(_) | Top | Bot | One | Zero => vec![],
            Neg(a) => vec![(a, Sort::S)],
            And(a, b) | Or(a, b) => vec![(a, Sort::S), (b, Sort::S)],
            DiaNu(a) | BoxNuc(a) | DiaIn(a) | BoxNotIn(a) | BoxrNotIn(a) => vec![(a, Sort::N)],
            Tri(a, b) | BTri(a, b) => vec![(a, Sort::N), (b, Sort::S)],
            Sim(a) => vec![(a, Sort::N)],
            Cap(a, b) | Cup(a, b) => vec![(a, Sort::N), (b, Sort::N)],
            BoxNi(a) | DiaNotNi(a) | BoxrNotNi(a) | BoxNuAdj(a) | DiaNucAdj(a) => {
                vec![(a, Sort::S)]
            }
            BTriR(a, b) => vec![(a, Sort::S), (b, Sort::S)],
        }
    }

    pub fn children(&self) -> Vec<&MTFormula> {
        self.children_with_expected_sorts()
            .into_iter()
            .map(|(c, _)| c)
            .collect()
    }

    /// True iff every node's children have the sorts its signature demands.
    pub fn well_sorted(&self) -> bool {
        self.children_with_expected_sorts()
            .iter()
            .all(|(c, expected)| c.sort() == *expected && c.well_sorted())
    }

    /// The multi-type language a (well-sorted) formula belongs to, or an
    /// error when it uses both sets of modal connectives.
    pub fn language(&self) -> Result<MtLanguage, SyntaxError> {
        use MTFormula::*;
        let mut nabla = false;
        let mut cond = false;
        let mut extended = false;
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            match f {
                DiaNu(_) | BoxNuc(_) | DiaNotNi(_) => nabla = true,
                Tri(..) | BoxrNotNi(_) => cond = true,
                DiaIn(_) | BoxNotIn(_) | BoxrNotIn(_) | BTri(..) | BoxNuAdj(_) | DiaNucAdj(_)
                | BTriR(..) => extended = true,
                _ => {}
            }
            stack.extend(f.children());
        }
        match (nabla, cond) {
            (true, true) => Err(SyntaxError::MixedLanguage),
            _ if extended => Ok(MtLanguage::Extended),
            (true, false) => Ok(MtLanguage::Nabla),
            (false, true) => Ok(MtLanguage::Conditional),
            (false, false) => Ok(MtLanguage::Shared),
        }
    }

    pub fn variables(&self) -> BTreeSet<Symbol> {
        let mut out = BTreeSet::new();
        let mut stack = vec![self];
        while let Some(f) = stack.pop() {
            if let MTFormula::Var(v) = f {
                out.insert(*v);
            }
            stack.extend(f.children());
        }
        out
    }

    fn map_children(&self, mut f: impl FnMut(&MTFormula) -> MTFormula) -> MTFormula {
        use MTFormula::*;
        macro_rules! u {
            ($ctor:ident, $a:expr) => {
                $ctor(Box::new(f($a)))
            };
        }
        macro_rules! b {
            ($ctor:ident, $a:expr, $b:expr) => {
                $ctor(Box::new(f($a)), Box::new(f($b)))
            };
        }
        match self {
            Var(v) => Var(*v),
            Top => Top,
            Bot => Bot,
            One => One,
            Zero => Zero,
            Neg(a) => u!(Neg, a),
            And(a, b) => b!(And, a, b),
            Or(a, b) => b!(Or, a, b),
            DiaNu(a) => u!(DiaNu, a),
            BoxNuc(a) => u!(BoxNuc, a),
            Tri(a, b) => b!(Tri, a, b),
            DiaIn(a) => u!(DiaIn, a),
            BoxNotIn(a) => u!(BoxNotIn, a),
            BoxrNotIn(a) => u!(BoxrNotIn, a),
            BTri(a, b) => b!(BTri, a, b),
            Sim(a) => u!(Sim, a),
            Cap(a, b) => b!(Cap, a, b),
            Cup(a, b) => b!(Cup, a, b),
            BoxNi(a) => u!(BoxNi, a),
            DiaNotNi(a) => u!(DiaNotNi, a),
            BoxrNotNi(a) => u!(BoxrNotNi, a),
            BoxNuAdj(a) => u!(BoxNuAdj, a),
            DiaNucAdj(a) => u!(DiaNucAdj, a),
            BTriR(a, b) => b!(BTriR, a, b),
        }
    }
}

/// Replace every occurrence of variable `v` by `g`. `g` must be S-sorted:
/// propositional variables are S-sorted, so an N-sorted image would break
/// well-sortedness.
pub fn substitute(f: &MTFormula, v: Symbol, g: &MTFormula) -> Result<MTFormula, SyntaxError> {
    if g.sort() != Sort::S {
        return Err(SyntaxError::SubstituteNSorted);
    }
    fn go(f: &MTFormula, v: Symbol, g: &MTFormula) -> MTFormula {
        match f {
            MTFormula::Var(w) if *w == v => g.clone(),
            _ => f.map_children(|c| go(c, v, g)),
        }
    }
    Ok(go(f, v, g))
}

/// An inequality between two formulas of equal sort.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Inequality {
    lhs: MTFormula,
    rhs: MTFormula,
}

impl Inequality {
    pub fn new(lhs: MTFormula, rhs: MTFormula) -> Result<Inequality, SyntaxError> {
        if lhs.sort() != rhs.sort() {
            return Err(SyntaxError::UnequalSorts(lhs.sort(), rhs.sort()));
        }
        Ok(Inequality { lhs, rhs })
    }

    pub fn lhs(&self) -> &MTFormula {
        &self.lhs
    }

    pub fn rhs(&self) -> &MTFormula {
        &self.rhs
    }

    pub fn sort(&self) -> Sort {
        self.lhs.sort()
    }

    pub fn well_sorted(&self) -> bool {
        self.lhs.well_sorted() && self.rhs.well_sorted()
    }

    pub fn variables(&self) -> BTreeSet<Symbol> {
        let mut vs = self.lhs.variables();
        vs.extend(self.rhs.variables());
        vs
    }
}

/// Order-type value for one variable: `1` keeps the order, `d` dualizes it.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OrderPolarity {
    One,
    Dual,
}

impl OrderPolarity {
    pub fn opposite(self) -> OrderPolarity {
        match self {
            OrderPolarity::One => OrderPolarity::Dual,
            OrderPolarity::Dual => OrderPolarity::One,
        }
    }
}

impl fmt::Display for OrderPolarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderPolarity::One => write!(f, "1"),
            OrderPolarity::Dual => write!(f, "d"),
        }
    }
}

/// A total order-type over a fixed variable list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrderType {
    entries: Vec<(Symbol, OrderPolarity)>,
}

impl OrderType {
    pub fn new(entries: Vec<(Symbol, OrderPolarity)>) -> OrderType {
        OrderType { entries }
    }

    pub fn get(&self, v: Symbol) -> Option<OrderPolarity> {
        self.entries.iter().find(|(w, _)| *w == v).map(|(_, e)| *e)
    }

    pub fn entries(&self) -> &[(Symbol, OrderPolarity)] {
        &self.entries
    }
}

impl fmt::Display for OrderType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, e) in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}={}", v, e)?;
        }
        Ok(())
    }
}

/// A strict partial order on variables, stored as its transitive closure.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct DependencyOrder {
    edges: BTreeSet<(Symbol, Symbol)>,
}

impl DependencyOrder {
    /// Closes the given edges under transitivity and rejects reflexive pairs.
    pub fn from_edges(
        edges: impl IntoIterator<Item = (Symbol, Symbol)>,
    ) -> Result<DependencyOrder, SyntaxError> {
        let mut closure: BTreeSet<(Symbol, Symbol)> = edges.into_iter().collect();
        loop {
            let mut added = Vec::new();
            for &(a, b) in &closure {
                for &(c, d) in &closure {
                    if b == c && !closure.contains(&(a, d)) {
                        added.push((a, d));
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            closure.extend(added);
        }
        if let Some(&(a, _)) = closure.iter().find(|(a, b)| a == b) {
            return Err(SyntaxError::ReflexiveDependency(a));
        }
        Ok(DependencyOrder { edges: closure })
    }

    pub fn less(&self, a: Symbol, b: Symbol) -> bool {
        self.edges.contains(&(a, b))
    }

    pub fn edges(&self) -> impl Iterator<Item = (Symbol, Symbol)> + '_ {
        self.edges.iter().copied()
    }
}

impl fmt::Display for DependencyOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, b) in &self.edges {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            write!(f, "{}<{}", a, b)?;
        }
        Ok(())
    }
}
