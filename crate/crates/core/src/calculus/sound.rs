//! Semantic soundness of rule schemas over finite two-sorted frames.
//!
//! A rule is sound on a frame when every assignment of subsets to its
//! metavariables that makes all premises true (precedent reading included
//! in succedent reading) also makes the conclusion true. Structure and
//! formula metavariables alike range over arbitrary subsets of the carrier
//! of their sort. Premises are evaluated as soon as their variables are
//! bound, which prunes the assignment space hard.

use super::interpret::{InterpretError, Position};
use super::schema::{FmlPat, MetaVar, Pat, RuleSchema, SequentPat};
use crate::frames::{complement, full_set, is_subset, Set, TwoSortedFrame, TwoSortedRels};
use std::collections::HashMap;

/// Assignment of subsets to metavariables; tiny, so linear scan beats a map.
#[derive(Clone, Debug, Default)]
struct Env {
    entries: Vec<(MetaVar, Set)>,
}

impl Env {
    fn get(&self, v: MetaVar) -> Set {
        self.entries
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, s)| *s)
            .expect("assignment covers the rule's metavariables")
    }

    fn set(&mut self, v: MetaVar, s: Set) {
        for (w, old) in self.entries.iter_mut() {
            if *w == v {
                *old = s;
                return;
            }
        }
        self.entries.push((v, s));
    }

    fn remove(&mut self, v: MetaVar) {
        self.entries.retain(|(w, _)| *w != v);
    }
}

fn var_carrier(v: MetaVar, frame: &TwoSortedFrame) -> usize {
    match v {
        MetaVar::SStruct(_) | MetaVar::SFormula(_) | MetaVar::Atom(_) => frame.nx,
        MetaVar::NStruct(_) | MetaVar::NFormula(_) => frame.ny,
    }
}

fn eval_fml_pat(
    pat: &FmlPat,
    frame: &TwoSortedFrame,
    env: &Env,
) -> Result<Set, InterpretError> {
    use FmlPat::*;
    Ok(match pat {
        Meta(v) => env.get(*v),
        Top => full_set(frame.nx),
        Bot => 0,
        Neg(a) => complement(eval_fml_pat(a, frame, env)?, frame.nx),
        And(a, b) => eval_fml_pat(a, frame, env)? & eval_fml_pat(b, frame, env)?,
        DiaNu(a) => frame
            .op_dia_nu(eval_fml_pat(a, frame, env)?)
            .expect("rule tested on matching frame kind"),
        BoxNuc(a) => frame
            .op_box_nuc(eval_fml_pat(a, frame, env)?)
            .expect("rule tested on matching frame kind"),
        BoxNi(a) => frame.op_box_ni(eval_fml_pat(a, frame, env)?),
        DiaNotNi(a) => frame.op_dia_notni(eval_fml_pat(a, frame, env)?),
        BoxrNotNi(a) => frame.op_boxr_notni(eval_fml_pat(a, frame, env)?),
        Tri(a, b) => frame
            .op_tri(eval_fml_pat(a, frame, env)?, eval_fml_pat(b, frame, env)?)
            .expect("rule tested on matching frame kind"),
        Cap(a, b) => eval_fml_pat(a, frame, env)? & eval_fml_pat(b, frame, env)?,
    })
}

fn eval_pat(
    pat: &Pat,
    pos: Position,
    frame: &TwoSortedFrame,
    env: &Env,
) -> Result<Set, InterpretError> {
    use Position::*;
    let fail = |connective: &'static str| {
        Err(InterpretError {
            connective,
            position: pos,
        })
    };
    let kind_ok = |r: Result<Set, crate::frames::FrameError>| {
        Ok(r.expect("rule tested on matching frame kind"))
    };
    match (pat, pos) {
        (Pat::Meta(v), _) => Ok(env.get(*v)),
        (Pat::Fml(f), _) => eval_fml_pat(f, frame, env),
        (Pat::TNeg(a), _) => Ok(complement(
            eval_pat(a, pos.flip(), frame, env)?,
            frame.nx,
        )),
        (Pat::TSim(a), _) => Ok(complement(
            eval_pat(a, pos.flip(), frame, env)?,
            frame.ny,
        )),
        (Pat::HTop, Precedent) => Ok(full_set(frame.nx)),
        (Pat::HTop, Succedent) => fail("htop"),
        (Pat::CBot, Succedent) => Ok(0),
        (Pat::CBot, Precedent) => fail("cbot"),
        (Pat::HOne, Precedent) => Ok(full_set(frame.ny)),
        (Pat::HOne, Succedent) => fail("hone"),
        (Pat::CZero, Succedent) => Ok(0),
        (Pat::CZero, Precedent) => fail("czero"),
        (Pat::HWedge(a, b), Precedent) | (Pat::HCap(a, b), Precedent) => {
            Ok(eval_pat(a, pos, frame, env)? & eval_pat(b, pos, frame, env)?)
        }
        (Pat::HWedge(..), Succedent) => fail("hwedge"),
        (Pat::HCap(..), Succedent) => fail("hcap"),
        (Pat::CVee(a, b), Succedent) | (Pat::CCup(a, b), Succedent) => {
            Ok(eval_pat(a, pos, frame, env)? | eval_pat(b, pos, frame, env)?)
        }
        (Pat::CVee(..), Precedent) => fail("cvee"),
        (Pat::CCup(..), Precedent) => fail("ccup"),
        (Pat::HNu(a), Precedent) => kind_ok(frame.op_dia_nu(eval_pat(a, pos, frame, env)?)),
        (Pat::HNu(_), Succedent) => fail("hnu"),
        (Pat::CNuc(a), Succedent) => kind_ok(frame.op_box_nuc(eval_pat(a, pos, frame, env)?)),
        (Pat::CNuc(_), Precedent) => fail("cnuc"),
        (Pat::HIn(a), Precedent) => Ok(frame.op_dia_in(eval_pat(a, pos, frame, env)?)),
        (Pat::HIn(_), Succedent) => fail("hin"),
        (Pat::CNotIn(a), Succedent) => Ok(frame.op_box_notin(eval_pat(a, pos, frame, env)?)),
        (Pat::CNotIn(_), Precedent) => fail("cnotin"),
        (Pat::CTri(a, b), Succedent) => kind_ok(frame.op_tri(
            eval_pat(a, pos.flip(), frame, env)?,
            eval_pat(b, pos, frame, env)?,
        )),
        (Pat::CTri(..), Precedent) => fail("ctri"),
        (Pat::HBlackTri(a, b), Precedent) => kind_ok(frame.op_btri(
            eval_pat(a, pos, frame, env)?,
            eval_pat(b, pos, frame, env)?,
        )),
        (Pat::HBlackTri(..), Succedent) => fail("hblacktri"),
        (Pat::CNotInR(a), Succedent) => {
            Ok(frame.op_boxr_notin(eval_pat(a, pos.flip(), frame, env)?))
        }
        (Pat::CNotInR(_), Precedent) => fail("cnotinr"),
        (Pat::CNi(a), Succedent) => Ok(frame.op_box_ni(eval_pat(a, pos, frame, env)?)),
        (Pat::CNi(_), Precedent) => fail("cni"),
        (Pat::HNotNi(a), Precedent) => Ok(frame.op_dia_notni(eval_pat(a, pos, frame, env)?)),
        (Pat::HNotNi(_), Succedent) => fail("hnotni"),
        (Pat::CNuAdj(a), Succedent) => kind_ok(frame.op_box_nu_adj(eval_pat(a, pos, frame, env)?)),
        (Pat::CNuAdj(_), Precedent) => fail("cnuadj"),
        (Pat::HNucAdj(a), Precedent) => {
            kind_ok(frame.op_dia_nuc_adj(eval_pat(a, pos, frame, env)?))
        }
        (Pat::HNucAdj(_), Succedent) => fail("hnucadj"),
        (Pat::CNotNiR(a), Succedent) => {
            Ok(frame.op_boxr_notni(eval_pat(a, pos.flip(), frame, env)?))
        }
        (Pat::CNotNiR(_), Precedent) => fail("cnotnir"),
        (Pat::CBlackTriR(a, b), Succedent) => kind_ok(frame.op_btrir(
            eval_pat(a, pos.flip(), frame, env)?,
            eval_pat(b, pos, frame, env)?,
        )),
        (Pat::CBlackTriR(..), Precedent) => fail("cblacktrir"),
    }
}

fn sequent_holds(
    pat: &SequentPat,
    frame: &TwoSortedFrame,
    env: &Env,
) -> Result<bool, InterpretError> {
    let lhs = eval_pat(&pat.lhs, Position::Precedent, frame, env)?;
    let rhs = eval_pat(&pat.rhs, Position::Succedent, frame, env)?;
    Ok(is_subset(lhs, rhs))
}

/// Which frame relations a rule's evaluation reads.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RelUse(u8);

impl RelUse {
    pub const R_NU: RelUse = RelUse(1);
    pub const R_NUC: RelUse = RelUse(2);
    pub const R_NI: RelUse = RelUse(4);
    pub const R_NOTNI: RelUse = RelUse(8);
    pub const T_F: RelUse = RelUse(16);

    pub fn insert(&mut self, other: RelUse) {
        self.0 |= other.0;
    }

    pub fn contains(self, other: RelUse) -> bool {
        self.0 & other.0 == other.0
    }
}

fn fml_pat_rels(p: &FmlPat, out: &mut RelUse) {
    use FmlPat::*;
    match p {
        Meta(_) | Top | Bot => {}
        Neg(a) => fml_pat_rels(a, out),
        And(a, b) | Cap(a, b) => {
            fml_pat_rels(a, out);
            fml_pat_rels(b, out);
        }
        DiaNu(a) => {
            out.insert(RelUse::R_NU);
            fml_pat_rels(a, out);
        }
        BoxNuc(a) => {
            out.insert(RelUse::R_NUC);
            fml_pat_rels(a, out);
        }
        BoxNi(a) => {
            out.insert(RelUse::R_NI);
            fml_pat_rels(a, out);
        }
        DiaNotNi(a) | BoxrNotNi(a) => {
            out.insert(RelUse::R_NOTNI);
            fml_pat_rels(a, out);
        }
        Tri(a, b) => {
            out.insert(RelUse::T_F);
            fml_pat_rels(a, out);
            fml_pat_rels(b, out);
        }
    }
}

fn pat_rels(p: &Pat, out: &mut RelUse) {
    match p {
        Pat::Meta(_) | Pat::HTop | Pat::CBot | Pat::HOne | Pat::CZero => {}
        Pat::Fml(f) => fml_pat_rels(f, out),
        Pat::TNeg(a) | Pat::TSim(a) => pat_rels(a, out),
        Pat::HWedge(a, b) | Pat::CVee(a, b) | Pat::HCap(a, b) | Pat::CCup(a, b) => {
            pat_rels(a, out);
            pat_rels(b, out);
        }
        Pat::HNu(a) | Pat::CNuAdj(a) => {
            out.insert(RelUse::R_NU);
            pat_rels(a, out);
        }
        Pat::CNuc(a) | Pat::HNucAdj(a) => {
            out.insert(RelUse::R_NUC);
            pat_rels(a, out);
        }
        Pat::HIn(a) | Pat::CNi(a) => {
            out.insert(RelUse::R_NI);
            pat_rels(a, out);
        }
        Pat::HNotNi(a) | Pat::CNotIn(a) | Pat::CNotNiR(a) | Pat::CNotInR(a) => {
            out.insert(RelUse::R_NOTNI);
            pat_rels(a, out);
        }
        Pat::CTri(a, b) | Pat::HBlackTri(a, b) | Pat::CBlackTriR(a, b) => {
            out.insert(RelUse::T_F);
            pat_rels(a, out);
            pat_rels(b, out);
        }
    }
}

/// The set of frame relations a rule's evaluation can read.
pub fn rule_relations(rule: &RuleSchema) -> RelUse {
    let mut out = RelUse::default();
    for s in rule.premises.iter().chain(std::iter::once(&rule.conclusion)) {
        pat_rels(&s.lhs, &mut out);
        pat_rels(&s.rhs, &mut out);
    }
    out
}

/// Keep one frame per projection onto the relations the rule reads.
///
/// Rule evaluation only consults the carrier sizes and the relations in
/// `rule_relations`, so a violation on any frame of the stream is a
/// violation on the kept representative with the same projection. This
/// turns sweeps over hundreds of thousands of frames into sweeps over at
/// most a few hundred, without weakening coverage.
pub fn dedup_frames_for_rule<'a>(
    rule: &RuleSchema,
    frames: &'a [TwoSortedFrame],
) -> Vec<&'a TwoSortedFrame> {
    let rels = rule_relations(rule);
    let mut seen: HashMap<Vec<u64>, ()> = HashMap::new();
    let mut out = Vec::new();
    for frame in frames {
        let mut key: Vec<u64> = vec![frame.nx as u64, frame.ny as u64, frame.kind() as u64];
        match &frame.rels {
            TwoSortedRels::N {
                r_ni,
                r_notni,
                r_nu,
                r_nuc,
            } => {
                if rels.contains(RelUse::R_NI) {
                    key.extend(r_ni.iter().map(|&s| s as u64));
                }
                if rels.contains(RelUse::R_NOTNI) {
                    key.extend(r_notni.iter().map(|&s| s as u64));
                }
                if rels.contains(RelUse::R_NU) {
                    key.extend(r_nu.iter().map(|&s| s as u64));
                }
                if rels.contains(RelUse::R_NUC) {
                    key.extend(r_nuc.iter().map(|&s| s as u64));
                }
            }
            TwoSortedRels::C { r_ni, r_notni, t_f } => {
                if rels.contains(RelUse::R_NI) {
                    key.extend(r_ni.iter().map(|&s| s as u64));
                }
                if rels.contains(RelUse::R_NOTNI) {
                    key.extend(r_notni.iter().map(|&s| s as u64));
                }
                if rels.contains(RelUse::T_F) {
                    key.extend(t_f.iter().map(|&s| s as u64));
                }
            }
        }
        if seen.insert(key, ()).is_none() {
            out.push(frame);
        }
    }
    out
}

/// Representative c-kind frames on carriers `(nx, ny)` for a rule that
/// reads only the relations in `rels`: the mentioned relations range over
/// all values, the others stay empty. Every c-frame projects onto exactly
/// one representative, so checking these checks them all.
pub fn c_frame_representatives(nx: usize, ny: usize, rels: RelUse) -> Vec<TwoSortedFrame> {
    let ni_bits = if rels.contains(RelUse::R_NI) { nx * ny } else { 0 };
    let notni_bits = if rels.contains(RelUse::R_NOTNI) { nx * ny } else { 0 };
    let tf_bits = if rels.contains(RelUse::T_F) { nx * ny * nx } else { 0 };
    let bits = ni_bits + notni_bits + tf_bits;
    assert!(bits <= 26, "projection space too large");
    let mut out = Vec::with_capacity(1 << bits);
    for code in 0..(1u64 << bits) {
        let mut pos = 0;
        let mut take = |width: usize| {
            let mask = (1u64 << width) - 1;
            let v = (code >> pos) & mask;
            pos += width;
            v as Set
        };
        let r_ni: Vec<Set> = (0..ny)
            .map(|_| if ni_bits > 0 { take(nx) } else { 0 })
            .collect();
        let r_notni: Vec<Set> = (0..ny)
            .map(|_| if notni_bits > 0 { take(nx) } else { 0 })
            .collect();
        let t_f: Vec<Set> = (0..nx * ny)
            .map(|_| if tf_bits > 0 { take(nx) } else { 0 })
            .collect();
        out.push(TwoSortedFrame::new_c(nx, ny, r_ni, r_notni, t_f));
    }
    out
}

/// `rule_sound` over the deduplicated stream; coverage is identical.
pub fn rule_sound_covering(rule: &RuleSchema, frames: &[TwoSortedFrame]) -> SoundnessReport {
    let reps: Vec<TwoSortedFrame> = dedup_frames_for_rule(rule, frames)
        .into_iter()
        .cloned()
        .collect();
    let mut report = rule_sound(rule, &reps);
    // report coverage in terms of the full stream
    report.frames_checked = frames.len() as u64;
    report
}

#[derive(Clone, Debug)]
pub struct Violation {
    pub rule: &'static str,
    pub frame: TwoSortedFrame,
    pub assignment: Vec<(MetaVar, Set)>,
    /// True when the violated implication was the reversed orientation of
    /// a bidirectional rule.
    pub reversed: bool,
}

#[derive(Clone, Debug, Default)]
pub struct SoundnessReport {
    pub frames_checked: u64,
    pub violations: Vec<Violation>,
}

impl SoundnessReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn merge(&mut self, other: SoundnessReport) {
        self.frames_checked += other.frames_checked;
        self.violations.extend(other.violations);
    }
}

/// Check one rule orientation on one frame over all assignments, premise
/// pruning included. Returns the first violating assignment, if any.
fn orientation_violation(
    premises: &[SequentPat],
    conclusion: &SequentPat,
    frame: &TwoSortedFrame,
) -> Result<Option<Vec<(MetaVar, Set)>>, InterpretError> {
    // variable order: premise variables first (in premise order), then the rest
    let mut vars: Vec<MetaVar> = Vec::new();
    for p in premises {
        for v in p.metavars() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    for v in conclusion.metavars() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    // premise i can be evaluated once vars[0..ready[i]] are bound
    let ready: Vec<usize> = premises
        .iter()
        .map(|p| {
            p.metavars()
                .iter()
                .map(|v| vars.iter().position(|w| w == v).unwrap() + 1)
                .max()
                .unwrap_or(0)
        })
        .collect();

    fn go(
        level: usize,
        vars: &[MetaVar],
        ready: &[usize],
        premises: &[SequentPat],
        conclusion: &SequentPat,
        frame: &TwoSortedFrame,
        env: &mut Env,
    ) -> Result<Option<Vec<(MetaVar, Set)>>, InterpretError> {
        for (i, p) in premises.iter().enumerate() {
            if ready[i] == level && !sequent_holds(p, frame, env)? {
                return Ok(None);
            }
        }
        if level == vars.len() {
            if !sequent_holds(conclusion, frame, env)? {
                return Ok(Some(env.entries.clone()));
            }
            return Ok(None);
        }
        let v = vars[level];
        let carrier = var_carrier(v, frame);
        for value in 0..(1u64 << carrier) {
            env.set(v, value as Set);
            if let Some(hit) = go(level + 1, vars, ready, premises, conclusion, frame, env)? {
                return Ok(Some(hit));
            }
        }
        env.remove(v);
        Ok(None)
    }

    let mut env = Env::default();
    go(0, &vars, &ready, premises, conclusion, frame, &mut env)
}

fn frame_violations(rule: &RuleSchema, frame: &TwoSortedFrame) -> Vec<Violation> {
    let mut out = Vec::new();
    let hit = orientation_violation(&rule.premises, &rule.conclusion, frame)
        .expect("rule is display-type correct");
    if let Some(assignment) = hit {
        out.push(Violation {
            rule: rule.name,
            frame: frame.clone(),
            assignment,
            reversed: false,
        });
    }
    if let Some(rev) = rule.reversed() {
        let hit = orientation_violation(&rev.premises, &rev.conclusion, frame)
            .expect("rule is display-type correct");
        if let Some(assignment) = hit {
            out.push(Violation {
                rule: rule.name,
                frame: frame.clone(),
                assignment,
                reversed: true,
            });
        }
    }
    out
}

/// Check a rule on a batch of frames, partitioned across threads.
/// Bidirectional rules are checked in both orientations; violations come
/// back in frame order. An interpretation error (a rule mentioning a
/// connective in an impossible position) is reported by panicking: the
/// rule table is static and covered by tests.
pub fn rule_sound(rule: &RuleSchema, frames: &[TwoSortedFrame]) -> SoundnessReport {
    use rayon::prelude::*;
    let mut found: Vec<(usize, Violation)> = frames
        .par_iter()
        .enumerate()
        .flat_map_iter(|(i, frame)| {
            frame_violations(rule, frame)
                .into_iter()
                .map(move |v| (i, v))
        })
        .collect();
    found.sort_by_key(|(i, _)| *i);
    SoundnessReport {
        frames_checked: frames.len() as u64,
        violations: found.into_iter().map(|(_, v)| v).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::rules::{rule_schemas, Calculus};
    use crate::enumerate::two_sorted_nframes;

    #[test]
    fn id_and_res_sound_on_small_frames() {
        let frames = two_sorted_nframes(1, 1, false);
        let rules = rule_schemas(Calculus::DmtNabla, &[]).unwrap();
        for name in ["Id_S", "res_S", "gal_S", "cont_S", "and_R", "d_nu"] {
            for r in rules.iter().filter(|r| r.name == name) {
                let report = rule_sound(r, &frames);
                assert!(report.ok(), "{name} violated: {:?}", report.violations);
            }
        }
    }
}
