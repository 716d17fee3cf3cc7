//! Signed generation trees and the analytic inductive test.
//!
//! Nodes are classified by (sign, connective) into Skeleton roles
//! (delta-adjoint, SLR) and PIA roles (SRA, SRR). The Boolean connectives
//! carry both a Skeleton and a PIA role; which one applies is decided by
//! the section of the branch the node lies in. A branch (read leaf to
//! root) is good when a PIA section is followed by a Skeleton section;
//! equivalently, no Skeleton-only node sits below a PIA-only node.

use crate::symbol::Symbol;
use crate::syntax::{
    DependencyOrder, Inequality, MTFormula, OrderPolarity, OrderType,
};
use std::fmt;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SkeletonRole {
    DeltaAdjoint,
    Slr,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PiaRole {
    Sra,
    Srr,
}

/// The Table-1 cell of a signed connective: its possible Skeleton role and
/// its possible PIA role. Leaves have neither.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Classification {
    pub skeleton: Option<SkeletonRole>,
    pub pia: Option<PiaRole>,
}

impl Classification {
    fn leaf() -> Classification {
        Classification::default()
    }

    pub fn is_leaf(&self) -> bool {
        self.skeleton.is_none() && self.pia.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct SignedNode {
    /// Display label of the connective, or the variable/constant name.
    pub label: String,
    pub sign: Sign,
    pub classification: Classification,
    /// `Some(v)` iff this is a variable leaf.
    pub variable: Option<Symbol>,
    pub children: Vec<SignedNode>,
}

fn connective_label(f: &MTFormula) -> &'static str {
    use MTFormula::*;
    match f {
        Var(_) => "var",
        Top => "top",
        Bot => "bot",
        One => "one",
        Zero => "zero",
        Neg(_) => "neg",
        And(..) => "and",
        Or(..) => "or",
        Sim(_) => "sim",
        Cap(..) => "cap",
        Cup(..) => "cup",
        DiaNu(_) => "dia-nu",
        BoxNuc(_) => "box-nuc",
        BoxNi(_) => "box-ni",
        DiaNotNi(_) => "dia-notni",
        BoxrNotNi(_) => "boxr-notni",
        Tri(..) => "tri",
        DiaIn(_) => "dia-in",
        BoxNotIn(_) => "box-notin",
        BoxrNotIn(_) => "boxr-notin",
        BTri(..) => "btri",
        BoxNuAdj(_) => "box-nu-adj",
        DiaNucAdj(_) => "dia-nuc-adj",
        BTriR(..) => "btrir",
    }
}

/// Coordinate polarities: `false` marks an order-reversing coordinate,
/// which flips the sign of that child.
fn coordinate_polarities(f: &MTFormula) -> Vec<bool> {
    use MTFormula::*;
    match f {
        Var(_) | Top | Bot | One | Zero => vec![],
        Neg(_) | Sim(_) => vec![false],
        And(..) | Or(..) | Cap(..) | Cup(..) => vec![true, true],
        DiaNu(_) | BoxNuc(_) | BoxNi(_) | DiaNotNi(_) => vec![true],
        BoxrNotNi(_) => vec![false],
        Tri(..) => vec![false, true],
        // adjoint connectives, monotone except the galois partners
        DiaIn(_) | BoxNotIn(_) | BoxNuAdj(_) | DiaNucAdj(_) => vec![true],
        BoxrNotIn(_) => vec![false],
        BTri(..) => vec![true, true],
        BTriR(..) => vec![false, true],
    }
}

/// The Table-1 classification of a signed connective occurrence.
fn classify_connective(f: &MTFormula, sign: Sign) -> Classification {
    use MTFormula::*;
    use PiaRole::*;
    use SkeletonRole::*;
    let both = |s, p| Classification {
        skeleton: Some(s),
        pia: Some(p),
    };
    let skeleton_only = |s| Classification {
        skeleton: Some(s),
        pia: None,
    };
    let pia_only = |p| Classification {
        skeleton: None,
        pia: Some(p),
    };
    match (f, sign) {
        (Var(_) | Top | Bot | One | Zero, _) => Classification::leaf(),
        // lattice connectives appear in both columns
        (And(..) | Cap(..), Sign::Plus) => both(Slr, Sra),
        (And(..) | Cap(..), Sign::Minus) => both(DeltaAdjoint, Srr),
        (Or(..) | Cup(..), Sign::Plus) => both(DeltaAdjoint, Srr),
        (Or(..) | Cup(..), Sign::Minus) => both(Slr, Sra),
        // Boolean negations appear in both columns under both signs
        (Neg(_) | Sim(_), _) => both(Slr, Sra),
        // f-family modal operators: SLR when positive, SRA when negative
        (DiaNu(_) | DiaNotNi(_), Sign::Plus) => skeleton_only(Slr),
        (DiaNu(_) | DiaNotNi(_), Sign::Minus) => pia_only(Sra),
        // g-family modal operators: SRA when positive, SLR when negative
        (BoxNi(_) | BoxNuc(_) | Tri(..) | BoxrNotNi(_), Sign::Plus) => pia_only(Sra),
        (BoxNi(_) | BoxNuc(_) | Tri(..) | BoxrNotNi(_), Sign::Minus) => skeleton_only(Slr),
        // adjoint connectives are outside the object languages
        (
            DiaIn(_) | BoxNotIn(_) | BoxrNotIn(_) | BTri(..) | BoxNuAdj(_) | DiaNucAdj(_)
            | BTriR(..),
            _,
        ) => Classification::leaf(),
    }
}

/// Build the signed generation tree of `f` with root sign `sign`.
pub fn signed_tree(f: &MTFormula, sign: Sign) -> SignedNode {
    let polarities = coordinate_polarities(f);
    let children = f
        .children()
        .into_iter()
        .zip(polarities)
        .map(|(c, keeps)| signed_tree(c, if keeps { sign } else { sign.flip() }))
        .collect();
    SignedNode {
        label: match f {
            MTFormula::Var(v) => v.to_string(),
            _ => connective_label(f).to_string(),
        },
        sign,
        classification: classify_connective(f, sign),
        variable: match f {
            MTFormula::Var(v) => Some(*v),
            _ => None,
        },
        children,
    }
}

/// A leaf-to-root path. `nodes[0]` is the leaf; `nodes` then lists the
/// connective nodes in order, ending at the root.
#[derive(Clone, Debug)]
pub struct Branch {
    /// Signed leaf.
    pub leaf_sign: Sign,
    pub leaf_label: String,
    pub leaf_variable: Option<Symbol>,
    /// Connective nodes from just above the leaf up to the root, with the
    /// index of the child through which the branch passes.
    pub path: Vec<(SignedNode, usize)>,
}

impl Branch {
    pub fn describe(&self) -> String {
        let mut out = format!("{}{}", self.leaf_sign, self.leaf_label);
        for (node, _) in &self.path {
            out.push_str(&format!(" < {}{}", node.sign, node.label));
        }
        out
    }
}

/// All leaf-to-root branches of a signed tree.
pub fn branches(t: &SignedNode) -> Vec<Branch> {
    fn go(t: &SignedNode, out: &mut Vec<Branch>) {
        if t.children.is_empty() {
            out.push(Branch {
                leaf_sign: t.sign,
                leaf_label: t.label.clone(),
                leaf_variable: t.variable,
                path: Vec::new(),
            });
            return;
        }
        for (i, c) in t.children.iter().enumerate() {
            let mut sub = Vec::new();
            go(c, &mut sub);
            for mut b in sub {
                let mut shallow = t.clone();
                shallow.children = t
                    .children
                    .iter()
                    .map(|c| SignedNode {
                        label: c.label.clone(),
                        sign: c.sign,
                        classification: c.classification,
                        variable: c.variable,
                        children: Vec::new(),
                    })
                    .collect();
                b.path.push((shallow, i));
                out.push(b);
            }
        }
    }
    // The recursion above pushes parents leaf-first, which is the order we
    // want; the shallow copies keep reported branches small.
    let mut out = Vec::new();
    go(t, &mut out);
    out
}

/// A leaf `+p` with `eps(p) = 1` or `-p` with `eps(p) = d` is critical.
fn leaf_is_critical(sign: Sign, var: Symbol, eps: &OrderType) -> bool {
    match (sign, eps.get(var)) {
        (Sign::Plus, Some(OrderPolarity::One)) => true,
        (Sign::Minus, Some(OrderPolarity::Dual)) => true,
        _ => false,
    }
}

/// The branches of `t` ending in an epsilon-critical variable leaf.
pub fn critical_branches(t: &SignedNode, eps: &OrderType) -> Vec<Branch> {
    branches(t)
        .into_iter()
        .filter(|b| match b.leaf_variable {
            Some(v) => leaf_is_critical(b.leaf_sign, v, eps),
            None => false,
        })
        .collect()
}

/// Good branch: reading from the leaf, a (possibly empty) run of
/// PIA-capable nodes followed by a (possibly empty) run of
/// Skeleton-capable nodes.
pub fn is_good_branch(branch: &Branch) -> bool {
    let mut in_skeleton_section = false;
    for (node, _) in &branch.path {
        let c = node.classification;
        if in_skeleton_section {
            if c.skeleton.is_none() {
                return false;
            }
        } else if c.pia.is_none() {
            if c.skeleton.is_none() {
                return false;
            }
            in_skeleton_section = true;
        }
    }
    true
}

#[derive(Clone, Debug)]
pub struct ClassificationResult {
    pub analytic: bool,
    pub witness: Option<(OrderType, DependencyOrder)>,
    pub failure_reason: Option<String>,
}

/// Does the signed subtree, with its inherited signs, agree with the
/// opposite order-type: every variable leaf `+p` has `eps(p) = d` and
/// every `-p` has `eps(p) = 1`? (Constant leaves do not count.)
fn agrees_with_opposite(t: &SignedNode, eps: &OrderType) -> bool {
    if let Some(v) = t.variable {
        return match (t.sign, eps.get(v)) {
            (Sign::Plus, Some(OrderPolarity::Dual)) => true,
            (Sign::Minus, Some(OrderPolarity::One)) => true,
            _ => false,
        };
    }
    t.children.iter().all(|c| agrees_with_opposite(c, eps))
}

fn collect_variables(t: &SignedNode, out: &mut Vec<Symbol>) {
    if let Some(v) = t.variable {
        if !out.contains(&v) {
            out.push(v);
        }
    }
    for c in &t.children {
        collect_variables(c, out);
    }
}

/// The side conditions on SRR nodes along the critical branches of one
/// signed tree, for a fixed order-type. On success returns the dependency
/// constraints `p_k < p_i` the tree demands.
///
/// The full (unshallowed) tree is consulted for the sibling subtrees, so
/// this walks the tree directly rather than using `branches`.
fn srr_conditions(
    t: &SignedNode,
    eps: &OrderType,
) -> Result<Vec<(Symbol, Symbol)>, String> {
    // Collect, for every critical leaf, the nodes on its path where the
    // node must be used in its PIA role. A node is forced into the PIA
    // section exactly when some PIA-only node occurs at or above it on the
    // same branch (minimal PIA section; dual-role nodes higher up count as
    // Skeleton).
    fn walk(
        node: &SignedNode,
        eps: &OrderType,
        stack: &mut Vec<(SignedNode, usize)>,
        constraints: &mut Vec<(Symbol, Symbol)>,
    ) -> Result<(), String> {
        if let Some(v) = node.variable {
            if leaf_is_critical(node.sign, v, eps) {
                // Index of the topmost PIA-only node on the path
                // (stack runs root..leaf, so scan from the root end).
                let top_pia_only = stack
                    .iter()
                    .position(|(n, _)| n.classification.skeleton.is_none());
                if let Some(start) = top_pia_only {
                    for (anc, child_idx) in &stack[start..] {
                        if anc.classification.pia == Some(PiaRole::Srr) {
                            // SRR node in the PIA section: binary lattice
                            // node; the branch passes through child_idx,
                            // the sibling is the side subtree.
                            let sibling = &anc.children[1 - child_idx];
                            if !agrees_with_opposite(sibling, eps) {
                                return Err(format!(
                                    "SRR node {}{} has a side subtree not agreeing with the opposite order-type",
                                    anc.sign, anc.label
                                ));
                            }
                            let mut side_vars = Vec::new();
                            collect_variables(sibling, &mut side_vars);
                            for k in side_vars {
                                constraints.push((k, v));
                            }
                        }
                    }
                }
            }
            return Ok(());
        }
        for (i, c) in node.children.iter().enumerate() {
            stack.push((node.clone(), i));
            walk(c, eps, stack, constraints)?;
            stack.pop();
        }
        Ok(())
    }
    let mut constraints = Vec::new();
    let mut stack = Vec::new();
    walk(t, eps, &mut stack, &mut constraints)?;
    Ok(constraints)
}

/// The analytic inductive test: all branches of `+lhs` and `-rhs` must be
/// good, and some order-type must satisfy the SRR side conditions with a
/// strict-partial-order witness.
pub fn is_analytic_inductive(ineq: &Inequality) -> ClassificationResult {
    let plus = signed_tree(ineq.lhs(), Sign::Plus);
    let minus = signed_tree(ineq.rhs(), Sign::Minus);

    for (tree, side) in [(&plus, "+lhs"), (&minus, "-rhs")] {
        for b in branches(tree) {
            if !is_good_branch(&b) {
                return ClassificationResult {
                    analytic: false,
                    witness: None,
                    failure_reason: Some(format!(
                        "branch of {side} is not good (Skeleton node below a PIA node): {}",
                        b.describe()
                    )),
                };
            }
        }
    }

    let vars: Vec<Symbol> = ineq.variables().into_iter().collect();
    let mut last_failure = None;
    for code in 0..(1u32 << vars.len()) {
        let eps = OrderType::new(
            vars.iter()
                .enumerate()
                .map(|(i, &v)| {
                    let e = if code & (1 << i) == 0 {
                        OrderPolarity::One
                    } else {
                        OrderPolarity::Dual
                    };
                    (v, e)
                })
                .collect(),
        );
        let mut constraints = Vec::new();
        let mut failed = None;
        for tree in [&plus, &minus] {
            match srr_conditions(tree, &eps) {
                Ok(mut cs) => constraints.append(&mut cs),
                Err(e) => {
                    failed = Some(e);
                    break;
                }
            }
        }
        if let Some(e) = failed {
            last_failure = Some(format!("order-type [{eps}]: {e}"));
            continue;
        }
        match DependencyOrder::from_edges(constraints) {
            Ok(omega) => {
                return ClassificationResult {
                    analytic: true,
                    witness: Some((eps, omega)),
                    failure_reason: None,
                }
            }
            Err(e) => {
                last_failure = Some(format!("order-type [{eps}]: {e}"));
            }
        }
    }
    ClassificationResult {
        analytic: false,
        witness: None,
        failure_reason: Some(
            last_failure.unwrap_or_else(|| "no order-type satisfies the side conditions".into()),
        ),
    }
}

/// One row of the axiom-table classification.
#[derive(Clone, Debug)]
pub struct AxiomClassification {
    pub axiom: crate::correspondence::AxiomId,
    pub expected_analytic: bool,
    pub result: ClassificationResult,
}

/// Classify all twelve translated axioms and pair each verdict with the
/// table's analytic column.
pub fn classify_axiom_table() -> Vec<AxiomClassification> {
    use crate::correspondence::{axiom_translation, AxiomId, ALL_AXIOMS};
    ALL_AXIOMS
        .iter()
        .map(|&a| {
            let expected = !matches!(
                a,
                AxiomId::Four | AxiomId::FourPrime | AxiomId::Five | AxiomId::B
            );
            AxiomClassification {
                axiom: a,
                expected_analytic: expected,
                result: is_analytic_inductive(&axiom_translation(a)),
            }
        })
        .collect()
}
