//! The embeddings of the single-type languages into the two-sorted ones:
//! `tau1`/`tau2` for the monotone language and `tau_cond` for the
//! conditional language, plus sequent translation.
//!
//! `tau1` sends `nabla` to `dia-nu box-ni`, `tau2` to `box-nuc dia-notni`;
//! negation swaps the two. On supported frames the two agree. For the
//! conditional language the antecedent is duplicated under `box-ni` and
//! `boxr-notni` and joined with the N-sort meet: both conjuncts are
//! N-sorted, so the meet is `cap`.

use crate::syntax::{Inequality, MTFormula, STFormula, StLanguage, SyntaxError};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TranslateError {
    #[error("expected a formula of the nabla language")]
    ExpectedNabla,
    #[error("expected a formula of the conditional language")]
    ExpectedConditional,
    #[error("the two sides use different single-type languages")]
    MixedSequent,
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
}

fn require_nabla(phi: &STFormula) -> Result<(), TranslateError> {
    match phi.language()? {
        StLanguage::Nabla | StLanguage::Pure => Ok(()),
        StLanguage::Conditional => Err(TranslateError::ExpectedNabla),
    }
}

fn require_cond(phi: &STFormula) -> Result<(), TranslateError> {
    match phi.language()? {
        StLanguage::Conditional | StLanguage::Pure => Ok(()),
        StLanguage::Nabla => Err(TranslateError::ExpectedConditional),
    }
}

/// First translation of the monotone language.
pub fn tau1(phi: &STFormula) -> Result<MTFormula, TranslateError> {
    require_nabla(phi)?;
    Ok(tau1_unchecked(phi))
}

/// Second translation of the monotone language.
pub fn tau2(phi: &STFormula) -> Result<MTFormula, TranslateError> {
    require_nabla(phi)?;
    Ok(tau2_unchecked(phi))
}

fn tau1_unchecked(phi: &STFormula) -> MTFormula {
    match phi {
        STFormula::Var(p) => MTFormula::Var(*p),
        STFormula::Top => MTFormula::Top,
        STFormula::Bot => MTFormula::Bot,
        STFormula::And(a, b) => MTFormula::and(tau1_unchecked(a), tau1_unchecked(b)),
        STFormula::Neg(a) => MTFormula::neg(tau2_unchecked(a)),
        STFormula::Nabla(a) => MTFormula::dia_nu(MTFormula::box_ni(tau1_unchecked(a))),
        STFormula::Cond(..) => unreachable!("language checked by caller"),
    }
}

fn tau2_unchecked(phi: &STFormula) -> MTFormula {
    match phi {
        STFormula::Var(p) => MTFormula::Var(*p),
        STFormula::Top => MTFormula::Top,
        STFormula::Bot => MTFormula::Bot,
        STFormula::And(a, b) => MTFormula::and(tau2_unchecked(a), tau2_unchecked(b)),
        STFormula::Neg(a) => MTFormula::neg(tau1_unchecked(a)),
        STFormula::Nabla(a) => MTFormula::box_nuc(MTFormula::dia_notni(tau2_unchecked(a))),
        STFormula::Cond(..) => unreachable!("language checked by caller"),
    }
}

/// Translation of the conditional language.
pub fn tau_cond(phi: &STFormula) -> Result<MTFormula, TranslateError> {
    require_cond(phi)?;
    Ok(tau_cond_unchecked(phi))
}

fn tau_cond_unchecked(phi: &STFormula) -> MTFormula {
    match phi {
        STFormula::Var(p) => MTFormula::Var(*p),
        STFormula::Top => MTFormula::Top,
        STFormula::Bot => MTFormula::Bot,
        STFormula::And(a, b) => MTFormula::and(tau_cond_unchecked(a), tau_cond_unchecked(b)),
        STFormula::Neg(a) => MTFormula::neg(tau_cond_unchecked(a)),
        STFormula::Cond(a, b) => {
            let at = tau_cond_unchecked(a);
            MTFormula::tri(
                MTFormula::cap(
                    MTFormula::box_ni(at.clone()),
                    MTFormula::boxr_notni(at),
                ),
                tau_cond_unchecked(b),
            )
        }
        STFormula::Nabla(_) => unreachable!("language checked by caller"),
    }
}

/// Translate the sequent `phi |- psi` into a two-sorted inequality:
/// `tau1(phi) <= tau2(psi)` for the monotone language, `phi^t <= psi^t`
/// for the conditional one. Pure Boolean sequents go through `tau1`/`tau2`.
pub fn translate_sequent(phi: &STFormula, psi: &STFormula) -> Result<Inequality, TranslateError> {
    let l1 = phi.language()?;
    let l2 = psi.language()?;
    let conditional = match (l1, l2) {
        (StLanguage::Nabla, StLanguage::Conditional)
        | (StLanguage::Conditional, StLanguage::Nabla) => return Err(TranslateError::MixedSequent),
        (StLanguage::Conditional, _) | (_, StLanguage::Conditional) => true,
        _ => false,
    };
    let (lhs, rhs) = if conditional {
        (tau_cond_unchecked(phi), tau_cond_unchecked(psi))
    } else {
        (tau1_unchecked(phi), tau2_unchecked(psi))
    };
    Ok(Inequality::new(lhs, rhs)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::MTFormula as M;
    use crate::syntax::STFormula as S;

    #[test]
    fn tau1_clauses() {
        let nabla_p = S::nabla(S::var("p"));
        assert_eq!(
            tau1(&nabla_p).unwrap(),
            M::dia_nu(M::box_ni(M::var("p")))
        );
        assert_eq!(
            tau1(&S::neg(nabla_p)).unwrap(),
            M::neg(M::box_nuc(M::dia_notni(M::var("p"))))
        );
        assert_eq!(tau1(&S::var("p")).unwrap(), M::var("p"));
        assert_eq!(
            tau1(&S::cond(S::var("p"), S::var("q"))),
            Err(TranslateError::ExpectedNabla)
        );
    }

    #[test]
    fn tau2_clauses() {
        let nabla_p = S::nabla(S::var("p"));
        assert_eq!(
            tau2(&nabla_p).unwrap(),
            M::box_nuc(M::dia_notni(M::var("p")))
        );
        assert_eq!(
            tau2(&S::neg(nabla_p)).unwrap(),
            M::neg(M::dia_nu(M::box_ni(M::var("p"))))
        );
        assert_eq!(tau2(&S::Bot).unwrap(), M::Bot);
    }

    #[test]
    fn tau_cond_clauses() {
        let expected = M::tri(
            M::cap(M::box_ni(M::var("p")), M::boxr_notni(M::var("p"))),
            M::var("q"),
        );
        assert_eq!(tau_cond(&S::cond(S::var("p"), S::var("q"))).unwrap(), expected);

        let ppp = S::cond(S::var("p"), S::var("p"));
        assert_eq!(
            tau_cond(&ppp).unwrap(),
            M::tri(
                M::cap(M::box_ni(M::var("p")), M::boxr_notni(M::var("p"))),
                M::var("p"),
            )
        );

        assert_eq!(
            tau_cond(&S::neg(S::cond(S::var("p"), S::var("q")))).unwrap(),
            M::neg(expected)
        );

        assert_eq!(
            tau_cond(&S::nabla(S::var("p"))),
            Err(TranslateError::ExpectedConditional)
        );
    }

    #[test]
    fn sequent_translation() {
        // nabla p |- p
        let ineq = translate_sequent(&S::nabla(S::var("p")), &S::var("p")).unwrap();
        assert_eq!(ineq.lhs(), &M::dia_nu(M::box_ni(M::var("p"))));
        assert_eq!(ineq.rhs(), &M::var("p"));

        // nabla p and nabla q |- nabla (p and q)
        let lhs = S::and(S::nabla(S::var("p")), S::nabla(S::var("q")));
        let rhs = S::nabla(S::and(S::var("p"), S::var("q")));
        let ineq = translate_sequent(&lhs, &rhs).unwrap();
        assert_eq!(
            ineq.lhs(),
            &M::and(
                M::dia_nu(M::box_ni(M::var("p"))),
                M::dia_nu(M::box_ni(M::var("q")))
            )
        );
        assert_eq!(
            ineq.rhs(),
            &M::box_nuc(M::dia_notni(M::and(M::var("p"), M::var("q"))))
        );

        // p |- p
        let ineq = translate_sequent(&S::var("p"), &S::var("p")).unwrap();
        assert_eq!(ineq.lhs(), ineq.rhs());

        // mixed languages are rejected
        assert_eq!(
            translate_sequent(&S::nabla(S::var("p")), &S::cond(S::var("p"), S::var("q"))),
            Err(TranslateError::MixedSequent)
        );
    }

    #[test]
    fn translations_are_well_sorted() {
        let phi = S::neg(S::and(S::nabla(S::var("p")), S::neg(S::nabla(S::var("q")))));
        assert!(tau1(&phi).unwrap().well_sorted());
        assert!(tau2(&phi).unwrap().well_sorted());
        let psi = S::cond(S::and(S::var("p"), S::var("q")), S::neg(S::var("r")));
        assert!(tau_cond(&psi).unwrap().well_sorted());
    }
}
