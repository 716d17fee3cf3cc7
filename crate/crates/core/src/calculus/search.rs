//! Bounded backward proof search. Applies every rule orientation whose
//! conclusion matches the goal and recurses on the instantiated premises.
//! Cut is skipped (its premises contain a metavariable the conclusion does
//! not determine); enabling it searches cut formulas among the subformulas
//! of the goal, in line with the subformula property.

use super::rules::{rule_schemas, Calculus, RuleSetError};
use super::schema::{
    instantiate_sequent, Binding, MetaVar, RuleSchema, Substitution,
};
use super::structure::{ProofTree, Sequent, Structure};
use crate::correspondence::AxiomId;
use crate::syntax::{MTFormula, Sort};
use std::collections::HashSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct SearchOptions {
    pub allow_cut: bool,
}

struct Searcher {
    rules: Vec<RuleSchema>,
    allow_cut: bool,
    /// Sequents on the current branch, to break display-rule ping-pong.
    on_path: HashSet<Sequent>,
    /// Goals known unprovable at a given remaining depth.
    failed: HashSet<(Sequent, usize)>,
}

impl Searcher {
    fn prove(&mut self, goal: &Sequent, depth: usize) -> Option<ProofTree> {
        if self.on_path.contains(goal) || self.failed.contains(&(goal.clone(), depth)) {
            return None;
        }
        let orientations: Vec<RuleSchema> = self
            .rules
            .iter()
            .flat_map(|r| {
                let mut v = vec![r.clone()];
                v.extend(r.reversed());
                v
            })
            .collect();
        self.on_path.insert(goal.clone());
        let mut found = None;
        'rules: for schema in &orientations {
            let is_cut = schema.name == "Cut_S" || schema.name == "Cut_N";
            if is_cut && !self.allow_cut {
                continue;
            }
            if !schema.premises.is_empty() && depth == 0 {
                continue;
            }
            for subst in schema.match_conclusion(goal) {
                let candidates: Vec<Substitution> = if is_cut {
                    cut_candidates(schema, &subst, goal)
                } else {
                    vec![subst]
                };
                'cands: for subst in candidates {
                    let mut children = Vec::new();
                    for prem in &schema.premises {
                        let Some(prem_seq) = instantiate_sequent(prem, &subst) else {
                            continue 'cands;
                        };
                        match self.prove(&prem_seq, depth - 1) {
                            Some(proof) => children.push(proof),
                            None => continue 'cands,
                        }
                    }
                    found = Some(ProofTree {
                        rule: schema.name.to_string(),
                        conclusion: goal.clone(),
                        children,
                    });
                    break 'rules;
                }
            }
        }
        self.on_path.remove(goal);
        if found.is_none() {
            self.failed.insert((goal.clone(), depth));
        }
        found
    }
}

/// Extend a cut substitution with each candidate cut formula: the
/// subformulas of the goal of the sort the cut variable expects.
fn cut_candidates(
    schema: &RuleSchema,
    base: &Substitution,
    goal: &Sequent,
) -> Vec<Substitution> {
    let cut_var = schema
        .premises
        .iter()
        .flat_map(|p| p.metavars())
        .find(|v| matches!(v, MetaVar::SFormula(_) | MetaVar::NFormula(_)));
    let Some(cut_var) = cut_var else {
        return vec![base.clone()];
    };
    let want = match cut_var {
        MetaVar::SFormula(_) => Sort::S,
        _ => Sort::N,
    };
    let mut formulas = Vec::new();
    collect_structure_formulas(&goal.lhs, &mut formulas);
    collect_structure_formulas(&goal.rhs, &mut formulas);
    let mut out = Vec::new();
    for f in formulas {
        if f.sort() == want {
            let mut s = base.clone();
            s.insert(cut_var, Binding::Formula(f));
            out.push(s);
        }
    }
    out
}

fn collect_structure_formulas(s: &Structure, out: &mut Vec<MTFormula>) {
    if let Structure::Formula(f) = s {
        collect_subformulas(f, out);
    }
    for (c, _) in s.children_with_expected_sorts() {
        collect_structure_formulas(c, out);
    }
}

fn collect_subformulas(f: &MTFormula, out: &mut Vec<MTFormula>) {
    if !out.contains(f) {
        out.push(f.clone());
    }
    for c in f.children() {
        collect_subformulas(c, out);
    }
}

/// Search for a proof of `goal` of depth at most `depth`.
pub fn search_proof(
    goal: &Sequent,
    depth: usize,
    calc: Calculus,
    extensions: &[AxiomId],
    options: SearchOptions,
) -> Result<Option<ProofTree>, RuleSetError> {
    let rules = rule_schemas(calc, extensions)?;
    // iterative deepening keeps found proofs short
    for d in 0..=depth {
        let mut searcher = Searcher {
            rules: rules.clone(),
            allow_cut: options.allow_cut,
            on_path: HashSet::new(),
            failed: HashSet::new(),
        };
        if let Some(proof) = searcher.prove(goal, d) {
            return Ok(Some(proof));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::check::check_proof;
    use crate::syntax::MTFormula as M;
    use Structure as St;

    fn fml(f: M) -> St {
        St::Formula(f)
    }

    #[test]
    fn identity_goal() {
        let goal = Sequent::new(fml(M::var("p")), fml(M::var("p")));
        let proof = search_proof(&goal, 1, Calculus::DmtNabla, &[], SearchOptions::default())
            .unwrap()
            .expect("p |- p is provable");
        assert_eq!(proof.rule, "Id_S");
        check_proof(&proof, Calculus::DmtNabla, &[]).unwrap();
    }

    #[test]
    fn t_axiom_goal() {
        let goal = Sequent::new(
            St::HNu(Box::new(fml(M::box_ni(M::var("a"))))),
            fml(M::var("a")),
        );
        let proof = search_proof(
            &goal,
            4,
            Calculus::DmtNabla,
            &[AxiomId::T],
            SearchOptions::default(),
        )
        .unwrap()
        .expect("T-translation derivable with extension T");
        check_proof(&proof, Calculus::DmtNabla, &[AxiomId::T]).unwrap();
    }

    #[test]
    fn cut_enabled_search_rechecks() {
        let goal = Sequent::new(fml(M::var("p")), fml(M::var("p")));
        let proof = search_proof(
            &goal,
            2,
            Calculus::DmtNabla,
            &[],
            SearchOptions { allow_cut: true },
        )
        .unwrap()
        .expect("still provable with cut available");
        check_proof(&proof, Calculus::DmtNabla, &[]).unwrap();
    }

    #[test]
    fn unprovable_goal() {
        let goal = Sequent::new(fml(M::var("p")), fml(M::var("q")));
        let res = search_proof(&goal, 3, Calculus::DmtNabla, &[], SearchOptions::default())
            .unwrap();
        assert!(res.is_none());
    }
}
