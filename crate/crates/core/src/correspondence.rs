//! The twelve modal axioms with their first-order frame conditions, and a
//! brute-force harness that verifies axiom-validity against each condition
//! on every frame up to a size bound.

use crate::enumerate::{cframes, monotone_nframes};
use crate::frames::*;
use crate::semantics::{valid_st_sequent, SingleFrame};
use crate::syntax::{Inequality, MTFormula, STFormula};
use crate::translation::{tau2, tau_cond, translate_sequent};
use rayon::prelude::*;
use std::fmt;
use thiserror::Error;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum AxiomId {
    N,
    P,
    C,
    T,
    Four,
    FourPrime,
    Five,
    B,
    D,
    CS,
    CEM,
    ID,
}

pub const ALL_AXIOMS: [AxiomId; 12] = [
    AxiomId::N,
    AxiomId::P,
    AxiomId::C,
    AxiomId::T,
    AxiomId::Four,
    AxiomId::FourPrime,
    AxiomId::Five,
    AxiomId::B,
    AxiomId::D,
    AxiomId::CS,
    AxiomId::CEM,
    AxiomId::ID,
];

impl AxiomId {
    pub fn kind(self) -> FrameKind {
        match self {
            AxiomId::CS | AxiomId::CEM | AxiomId::ID => FrameKind::C,
            _ => FrameKind::N,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::N => "N",
            AxiomId::P => "P",
            AxiomId::C => "C",
            AxiomId::T => "T",
            AxiomId::Four => "4",
            AxiomId::FourPrime => "4'",
            AxiomId::Five => "5",
            AxiomId::B => "B",
            AxiomId::D => "D",
            AxiomId::CS => "CS",
            AxiomId::CEM => "CEM",
            AxiomId::ID => "ID",
        }
    }

    pub fn from_name(name: &str) -> Option<AxiomId> {
        ALL_AXIOMS.iter().copied().find(|a| a.name() == name)
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CorrespondenceError {
    #[error("axiom {0} is a {1}-frame axiom but the frame is {2}-kind")]
    KindMismatch(AxiomId, FrameKind, FrameKind),
}

fn p() -> STFormula {
    STFormula::var("p")
}

fn q() -> STFormula {
    STFormula::var("q")
}

/// The axiom as a pair `(antecedent, succedent)`; plain (non-implication)
/// axioms get antecedent `top`. The axiom formula itself is the
/// implication of the two sides.
pub fn axiom_sequent(a: AxiomId) -> (STFormula, STFormula) {
    use STFormula as S;
    match a {
        AxiomId::N => (S::Top, S::nabla(S::Top)),
        AxiomId::P => (S::Top, S::neg(S::nabla(S::Bot))),
        AxiomId::C => (
            S::and(S::nabla(p()), S::nabla(q())),
            S::nabla(S::and(p(), q())),
        ),
        AxiomId::T => (S::nabla(p()), p()),
        AxiomId::Four => (S::nabla(S::nabla(p())), S::nabla(p())),
        AxiomId::FourPrime => (S::nabla(p()), S::nabla(S::nabla(p()))),
        AxiomId::Five => (
            S::neg(S::nabla(S::neg(p()))),
            S::nabla(S::neg(S::nabla(S::neg(p())))),
        ),
        AxiomId::B => (p(), S::nabla(S::neg(S::nabla(S::neg(p()))))),
        AxiomId::D => (S::nabla(p()), S::neg(S::nabla(S::neg(p())))),
        AxiomId::CS => (S::and(p(), q()), S::cond(p(), q())),
        AxiomId::CEM => (S::Top, S::or(S::cond(p(), q()), S::cond(p(), S::neg(q())))),
        AxiomId::ID => (S::Top, S::cond(p(), p())),
    }
}

/// The axiom as a single formula (`lhs -> rhs`, or just `rhs` when the
/// antecedent is `top`).
pub fn axiom_formula(a: AxiomId) -> STFormula {
    let (lhs, rhs) = axiom_sequent(a);
    if lhs == STFormula::Top {
        rhs
    } else {
        STFormula::imp(lhs, rhs)
    }
}

/// The translated inequality of the axiom, in the exact shape of the axiom
/// table: implications translate to `tau1(lhs) <= tau2(rhs)` (conditional:
/// `lhs^t <= rhs^t`); plain axioms to `top <= tau2(rhs)`; the CEM
/// disjunction stays a primitive join of the two translated disjuncts.
pub fn axiom_translation(a: AxiomId) -> Inequality {
    use STFormula as S;
    if a == AxiomId::CEM {
        let left = tau_cond(&S::cond(p(), q())).unwrap();
        let right = tau_cond(&S::cond(p(), S::neg(q()))).unwrap();
        return Inequality::new(MTFormula::Top, MTFormula::or(left, right)).unwrap();
    }
    let (lhs, rhs) = axiom_sequent(a);
    if lhs == S::Top && a.kind() == FrameKind::N {
        Inequality::new(MTFormula::Top, tau2(&rhs).unwrap()).unwrap()
    } else if lhs == S::Top {
        Inequality::new(MTFormula::Top, tau_cond(&rhs).unwrap()).unwrap()
    } else {
        translate_sequent(&lhs, &rhs).unwrap()
    }
}

/// Axiom validity on a single-type frame, via the sequent form.
pub fn axiom_valid(a: AxiomId, frame: &SingleFrame) -> Result<bool, CorrespondenceError> {
    if a.kind() != frame.kind() {
        return Err(CorrespondenceError::KindMismatch(a, a.kind(), frame.kind()));
    }
    let (lhs, rhs) = axiom_sequent(a);
    Ok(valid_st_sequent(frame, &lhs, &rhs).expect("closed valuation enumeration"))
}

/// The first-order condition of the correspondence theorem, evaluated by
/// direct quantifier enumeration over `W` and `P(W)`.
pub fn fo_condition(a: AxiomId, frame: &SingleFrame) -> Result<bool, CorrespondenceError> {
    if a.kind() != frame.kind() {
        return Err(CorrespondenceError::KindMismatch(a, a.kind(), frame.kind()));
    }
    Ok(match (a, frame) {
        // forall w [W in nu(w)]
        (AxiomId::N, SingleFrame::N(f)) => {
            let w_full = full_set(f.worlds);
            (0..f.worlds).all(|w| family_contains(f.nu[w], w_full))
        }
        // forall w [{} not in nu(w)]
        (AxiomId::P, SingleFrame::N(f)) => (0..f.worlds).all(|w| !family_contains(f.nu[w], 0)),
        // forall w,X,Y [X in nu(w) & Y in nu(w) => X /\ Y in nu(w)]
        (AxiomId::C, SingleFrame::N(f)) => (0..f.worlds).all(|w| {
            subsets(f.worlds).all(|x| {
                subsets(f.worlds).all(|y| {
                    !(family_contains(f.nu[w], x) && family_contains(f.nu[w], y))
                        || family_contains(f.nu[w], x & y)
                })
            })
        }),
        // forall w,X [X in nu(w) => w in X]
        (AxiomId::T, SingleFrame::N(f)) => (0..f.worlds)
            .all(|w| subsets(f.worlds).all(|x| !family_contains(f.nu[w], x) || contains(x, w))),
        // forall w,Y,X [(X in nu(w) & forall x (x in X => Y in nu(x))) => Y in nu(w)]
        (AxiomId::Four, SingleFrame::N(f)) => (0..f.worlds).all(|w| {
            subsets(f.worlds).all(|y| {
                subsets(f.worlds).all(|x| {
                    let premise = family_contains(f.nu[w], x)
                        && elements(x).all(|xe| family_contains(f.nu[xe], y));
                    !premise || family_contains(f.nu[w], y)
                })
            })
        }),
        // forall w,X [X in nu(w) => {y | X in nu(y)} in nu(w)]
        (AxiomId::FourPrime, SingleFrame::N(f)) => (0..f.worlds).all(|w| {
            subsets(f.worlds).all(|x| {
                if !family_contains(f.nu[w], x) {
                    return true;
                }
                let mut m = 0;
                for y in 0..f.worlds {
                    if family_contains(f.nu[y], x) {
                        m |= 1 << y;
                    }
                }
                family_contains(f.nu[w], m)
            })
        }),
        // forall w,X [X not in nu(w) => {y | X in nu(y)}^c in nu(w)]
        (AxiomId::Five, SingleFrame::N(f)) => (0..f.worlds).all(|w| {
            subsets(f.worlds).all(|x| {
                if family_contains(f.nu[w], x) {
                    return true;
                }
                let mut m = 0;
                for y in 0..f.worlds {
                    if family_contains(f.nu[y], x) {
                        m |= 1 << y;
                    }
                }
                family_contains(f.nu[w], complement(m, f.worlds))
            })
        }),
        // forall w,X [w in X => {y | X^c in nu(y)}^c in nu(w)]
        (AxiomId::B, SingleFrame::N(f)) => (0..f.worlds).all(|w| {
            subsets(f.worlds).all(|x| {
                if !contains(x, w) {
                    return true;
                }
                let xc = complement(x, f.worlds);
                let mut m = 0;
                for y in 0..f.worlds {
                    if family_contains(f.nu[y], xc) {
                        m |= 1 << y;
                    }
                }
                family_contains(f.nu[w], complement(m, f.worlds))
            })
        }),
        // forall w,X [X in nu(w) => X^c not in nu(w)]
        (AxiomId::D, SingleFrame::N(f)) => (0..f.worlds).all(|w| {
            subsets(f.worlds).all(|x| {
                !family_contains(f.nu[w], x)
                    || !family_contains(f.nu[w], complement(x, f.worlds))
            })
        }),
        // theorem-table row: forall x,Z [f(x,Z) <= {x}]
        (AxiomId::CS, SingleFrame::C(f)) => (0..f.worlds)
            .all(|x| subsets(f.worlds).all(|z| is_subset(f.select(x, z), singleton(x)))),
        // forall X,y [|f(y,X)| <= 1]
        (AxiomId::CEM, SingleFrame::C(f)) => (0..f.worlds)
            .all(|y| subsets(f.worlds).all(|x| f.select(y, x).count_ones() <= 1)),
        // forall x,Z [f(x,Z) <= Z]
        (AxiomId::ID, SingleFrame::C(f)) => {
            (0..f.worlds).all(|x| subsets(f.worlds).all(|z| is_subset(f.select(x, z), z)))
        }
        _ => unreachable!("kind checked above"),
    })
}

/// Variant of the CS condition produced by the correspondent computation:
/// the constraint is guarded by `x in Z`.
pub fn fo_condition_cs_guarded(frame: &SingleFrame) -> Result<bool, CorrespondenceError> {
    match frame {
        SingleFrame::C(f) => Ok((0..f.worlds).all(|x| {
            subsets(f.worlds)
                .all(|z| !contains(z, x) || is_subset(f.select(x, z), singleton(x)))
        })),
        SingleFrame::N(_) => Err(CorrespondenceError::KindMismatch(
            AxiomId::CS,
            FrameKind::C,
            FrameKind::N,
        )),
    }
}

/// One axiom/condition disagreement. `frame_id` is the frame's position
/// in the deterministic enumeration of its size class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub size: usize,
    pub frame_id: usize,
    pub frame: SingleFrame,
    pub axiom_valid: bool,
    pub condition_holds: bool,
}

#[derive(Clone, Debug, Default)]
pub struct CorrespondenceReport {
    pub axiom: Option<AxiomId>,
    /// `(world count, frames checked at that size)`
    pub per_size: Vec<(usize, u64)>,
    pub frames_checked: u64,
    pub mismatches: Vec<Mismatch>,
    /// For CS only: mismatches of the guarded variant from the
    /// correspondent computation, reported alongside the table row.
    pub guarded_variant_mismatches: Option<Vec<Mismatch>>,
}

impl CorrespondenceReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare axiom validity with the first-order condition on every frame of
/// sizes `1..=max_size` (monotone n-frames or all c-frames, by axiom kind).
pub fn verify_correspondence(a: AxiomId, max_size: usize) -> CorrespondenceReport {
    let mut report = CorrespondenceReport {
        axiom: Some(a),
        ..Default::default()
    };
    for n in 1..=max_size {
        let frames: Vec<SingleFrame> = match a.kind() {
            FrameKind::N => monotone_nframes(n).into_iter().map(SingleFrame::N).collect(),
            FrameKind::C => cframes(n).map(SingleFrame::C).collect(),
        };
        report.per_size.push((n, frames.len() as u64));
        report.frames_checked += frames.len() as u64;
        let mut found: Vec<Mismatch> = frames
            .par_iter()
            .enumerate()
            .filter_map(|(i, frame)| {
                let av = axiom_valid(a, frame).unwrap();
                let fo = fo_condition(a, frame).unwrap();
                if av != fo {
                    Some(Mismatch {
                        size: n,
                        frame_id: i,
                        frame: frame.clone(),
                        axiom_valid: av,
                        condition_holds: fo,
                    })
                } else {
                    None
                }
            })
            .collect();
        found.sort_by_key(|m| m.frame_id);
        report.mismatches.extend(found);
        if a == AxiomId::CS {
            let mut guarded: Vec<Mismatch> = frames
                .par_iter()
                .enumerate()
                .filter_map(|(i, frame)| {
                    let av = axiom_valid(a, frame).unwrap();
                    let fo = fo_condition_cs_guarded(frame).unwrap();
                    if av != fo {
                        Some(Mismatch {
                            size: n,
                            frame_id: i,
                            frame: frame.clone(),
                            axiom_valid: av,
                            condition_holds: fo,
                        })
                    } else {
                        None
                    }
                })
                .collect();
            guarded.sort_by_key(|m| m.frame_id);
            report
                .guarded_variant_mismatches
                .get_or_insert_with(Vec::new)
                .extend(guarded);
        }
    }
    report
}
