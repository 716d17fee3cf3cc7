//! Node-by-node proof checking against a rule set.

use super::rules::{rule_schemas, Calculus, RuleSetError};
use super::schema::{match_sequent, RuleSchema, Substitution};
use super::structure::{ProofTree, Sequent};
use crate::correspondence::AxiomId;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("node {path:?}: unknown rule `{rule}`")]
    UnknownRule { path: Vec<usize>, rule: String },
    #[error(
        "node {path:?}: rule `{rule}` expects {expected} premises, found {found} subproofs"
    )]
    ArityMismatch {
        path: Vec<usize>,
        rule: String,
        expected: usize,
        found: usize,
    },
    #[error("node {path:?}: conclusion does not match any instance of rule `{rule}`")]
    NoMatch { path: Vec<usize>, rule: String },
    #[error("node {path:?}: sequent mixes sorts")]
    IllSorted { path: Vec<usize> },
    #[error(transparent)]
    RuleSet(#[from] RuleSetError),
}

/// Try one schema orientation: match the conclusion, then extend the
/// substitution by matching each premise against the corresponding child
/// conclusion (this also binds premise-only metavariables such as the cut
/// formula).
fn schema_applies(schema: &RuleSchema, concl: &Sequent, children: &[&Sequent]) -> bool {
    if schema.premises.len() != children.len() {
        return false;
    }
    let mut subst = Substitution::new();
    if !match_sequent(&schema.conclusion, concl, &mut subst) {
        return false;
    }
    for (pat, child) in schema.premises.iter().zip(children) {
        if !match_sequent(pat, child, &mut subst) {
            return false;
        }
    }
    true
}

/// All orientations of all schemas named `rule`.
fn candidates<'a>(rules: &'a [RuleSchema], rule: &str) -> Vec<RuleSchema> {
    let mut out = Vec::new();
    for r in rules.iter().filter(|r| r.name == rule) {
        out.push(r.clone());
        if let Some(rev) = r.reversed() {
            out.push(rev);
        }
    }
    out
}

fn check_node(rules: &[RuleSchema], node: &ProofTree, path: &mut Vec<usize>) -> Result<(), CheckError> {
    if !node.conclusion.sort_consistent() {
        return Err(CheckError::IllSorted { path: path.clone() });
    }
    let cands = candidates(rules, &node.rule);
    if cands.is_empty() {
        return Err(CheckError::UnknownRule {
            path: path.clone(),
            rule: node.rule.clone(),
        });
    }
    let children: Vec<&Sequent> = node.children.iter().map(|c| &c.conclusion).collect();
    if !cands.iter().any(|r| r.premises.len() == children.len()) {
        return Err(CheckError::ArityMismatch {
            path: path.clone(),
            rule: node.rule.clone(),
            expected: cands[0].premises.len(),
            found: children.len(),
        });
    }
    if !cands
        .iter()
        .any(|r| schema_applies(r, &node.conclusion, &children))
    {
        return Err(CheckError::NoMatch {
            path: path.clone(),
            rule: node.rule.clone(),
        });
    }
    for (i, child) in node.children.iter().enumerate() {
        path.push(i);
        check_node(rules, child, path)?;
        path.pop();
    }
    Ok(())
}

/// Check a proof tree against the named calculus plus extensions. The
/// error carries the path of child indices from the root to the offending
/// node.
pub fn check_proof(
    proof: &ProofTree,
    calc: Calculus,
    extensions: &[AxiomId],
) -> Result<(), CheckError> {
    let rules = rule_schemas(calc, extensions)?;
    check_node(&rules, proof, &mut Vec::new())
}
