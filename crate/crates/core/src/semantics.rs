//! Model evaluation on finite frames, frame validity by valuation
//! enumeration, and the passage between single-type frames and two-sorted
//! frames (`star` / `unstar`, supportedness).

use crate::frames::*;
use crate::symbol::Symbol;
use crate::syntax::{MTFormula, STFormula};
use std::collections::BTreeMap;
use thiserror::Error;

pub type Valuation = BTreeMap<Symbol, Set>;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum EvalError {
    #[error("valuation does not cover variable {0}")]
    MissingVariable(Symbol),
    #[error("formula uses {needs} operators but the frame is {got}-kind")]
    KindMismatch { needs: FrameKind, got: FrameKind },
    #[error("nabla formula evaluated on a conditional frame (or vice versa)")]
    SingleKindMismatch,
}

/// A single-type frame of either kind.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SingleFrame {
    N(NFrame),
    C(CFrame),
}

impl SingleFrame {
    pub fn worlds(&self) -> usize {
        match self {
            SingleFrame::N(f) => f.worlds,
            SingleFrame::C(f) => f.worlds,
        }
    }

    pub fn kind(&self) -> FrameKind {
        match self {
            SingleFrame::N(_) => FrameKind::N,
            SingleFrame::C(_) => FrameKind::C,
        }
    }
}

/// Evaluate a single-type formula to the set of worlds where it holds.
pub fn eval_st(frame: &SingleFrame, v: &Valuation, phi: &STFormula) -> Result<Set, EvalError> {
    let n = frame.worlds();
    match phi {
        STFormula::Var(p) => v.get(p).copied().ok_or(EvalError::MissingVariable(*p)),
        STFormula::Top => Ok(full_set(n)),
        STFormula::Bot => Ok(0),
        STFormula::Neg(a) => Ok(complement(eval_st(frame, v, a)?, n)),
        STFormula::And(a, b) => Ok(eval_st(frame, v, a)? & eval_st(frame, v, b)?),
        STFormula::Nabla(a) => match frame {
            SingleFrame::N(nf) => {
                let set = eval_st(frame, v, a)?;
                let mut out = 0;
                for w in 0..n {
                    if family_contains(nf.nu[w], set) {
                        out |= 1 << w;
                    }
                }
                Ok(out)
            }
            SingleFrame::C(_) => Err(EvalError::SingleKindMismatch),
        },
        STFormula::Cond(a, b) => match frame {
            SingleFrame::C(cf) => {
                let sa = eval_st(frame, v, a)?;
                let sb = eval_st(frame, v, b)?;
                let mut out = 0;
                for w in 0..n {
                    if is_subset(cf.select(w, sa), sb) {
                        out |= 1 << w;
                    }
                }
                Ok(out)
            }
            SingleFrame::N(_) => Err(EvalError::SingleKindMismatch),
        },
    }
}

// Complex-algebra operations of a two-sorted frame. The `op_` functions that
// mention `nu` or `t_f` return a kind error on the other kind.
impl TwoSortedFrame {
    /// `<nu> U`: states with an `R_nu`-successor in `U`.
    pub fn op_dia_nu(&self, u: Set) -> Result<Set, FrameError> {
        match &self.rels {
            TwoSortedRels::N { r_nu, .. } => {
                Ok(collect(self.nx, |x| r_nu[x] & u != 0))
            }
            TwoSortedRels::C { .. } => Err(FrameError::ExpectedNKind),
        }
    }

    /// `[nu^c] U`: states all of whose `R_nuc`-successors are in `U`.
    pub fn op_box_nuc(&self, u: Set) -> Result<Set, FrameError> {
        match &self.rels {
            TwoSortedRels::N { r_nuc, .. } => {
                Ok(collect(self.nx, |x| is_subset(r_nuc[x], u)))
            }
            TwoSortedRels::C { .. } => Err(FrameError::ExpectedNKind),
        }
    }

    /// `[ni] D`: neighbourhoods all of whose members are in `D`.
    pub fn op_box_ni(&self, d: Set) -> Set {
        let r_ni = self.r_ni();
        collect(self.ny, |y| is_subset(r_ni[y], d))
    }

    /// `<notni> D`: neighbourhoods with an `R_notni`-successor in `D`.
    pub fn op_dia_notni(&self, d: Set) -> Set {
        let r_notni = self.r_notni();
        collect(self.ny, |y| r_notni[y] & d != 0)
    }

    /// `[notni> D`: neighbourhoods with no `R_notni`-successor in `D`.
    pub fn op_boxr_notni(&self, d: Set) -> Set {
        let r_notni = self.r_notni();
        collect(self.ny, |y| r_notni[y] & d == 0)
    }

    /// `U |> D`: states `x` with `t_f(x, y) <= D` for every `y` in `U`.
    pub fn op_tri(&self, u: Set, d: Set) -> Result<Set, FrameError> {
        match &self.rels {
            TwoSortedRels::C { t_f, .. } => Ok(collect(self.nx, |x| {
                elements(u).all(|y| is_subset(t_f[x * self.ny + y], d))
            })),
            TwoSortedRels::N { .. } => Err(FrameError::ExpectedCKind),
        }
    }

    /// `<in> U`: forward image of `R_ni`, the left adjoint of `[ni]`.
    pub fn op_dia_in(&self, u: Set) -> Set {
        let r_ni = self.r_ni();
        let mut out = 0;
        for y in elements(u) {
            out |= r_ni[y];
        }
        out
    }

    /// `[notin] U`: states whose `R_notni`-predecessors all lie in `U`.
    pub fn op_box_notin(&self, u: Set) -> Set {
        let r_notni = self.r_notni();
        collect(self.nx, |x| {
            (0..self.ny).all(|y| !contains(r_notni[y], x) || contains(u, y))
        })
    }

    /// `[notin> U`: states that are `R_notni`-successors of no `y` in `U`.
    pub fn op_boxr_notin(&self, u: Set) -> Set {
        let r_notni = self.r_notni();
        collect(self.nx, |x| elements(u).all(|y| !contains(r_notni[y], x)))
    }

    /// `[nu-adj] D`: neighbourhoods whose `R_nu`-predecessors all lie in `D`
    /// (right adjoint of `<nu>`).
    pub fn op_box_nu_adj(&self, d: Set) -> Result<Set, FrameError> {
        match &self.rels {
            TwoSortedRels::N { r_nu, .. } => Ok(collect(self.ny, |y| {
                (0..self.nx).all(|x| !contains(r_nu[x], y) || contains(d, x))
            })),
            TwoSortedRels::C { .. } => Err(FrameError::ExpectedNKind),
        }
    }

    /// `<nuc-adj> D`: forward image of `R_nuc` (left adjoint of `[nu^c]`).
    pub fn op_dia_nuc_adj(&self, d: Set) -> Result<Set, FrameError> {
        match &self.rels {
            TwoSortedRels::N { r_nuc, .. } => {
                let mut out = 0;
                for x in elements(d) {
                    out |= r_nuc[x];
                }
                Ok(out)
            }
            TwoSortedRels::C { .. } => Err(FrameError::ExpectedNKind),
        }
    }

    /// `U ^ C`: third components reachable from a first component in `C`
    /// and a second component in `U`.
    pub fn op_btri(&self, u: Set, c: Set) -> Result<Set, FrameError> {
        match &self.rels {
            TwoSortedRels::C { t_f, .. } => {
                let mut out = 0;
                for x in elements(c) {
                    for y in elements(u) {
                        out |= t_f[x * self.ny + y];
                    }
                }
                Ok(out)
            }
            TwoSortedRels::N { .. } => Err(FrameError::ExpectedCKind),
        }
    }

    /// `C |>> D`: neighbourhoods `y` with `t_f(x, y) <= D` for every `x` in `C`.
    pub fn op_btrir(&self, c: Set, d: Set) -> Result<Set, FrameError> {
        match &self.rels {
            TwoSortedRels::C { t_f, .. } => Ok(collect(self.ny, |y| {
                elements(c).all(|x| is_subset(t_f[x * self.ny + y], d))
            })),
            TwoSortedRels::N { .. } => Err(FrameError::ExpectedCKind),
        }
    }
}

fn collect(n: usize, mut pred: impl FnMut(usize) -> bool) -> Set {
    let mut out = 0;
    for i in 0..n {
        if pred(i) {
            out |= 1 << i;
        }
    }
    out
}

fn kind_err(needs: FrameKind, frame: &TwoSortedFrame) -> EvalError {
    EvalError::KindMismatch {
        needs,
        got: frame.kind(),
    }
}

/// Evaluate a multi-type formula on a two-sorted frame; the result is a
/// subset of `X` or of `Y` according to the formula's sort.
pub fn eval_mt(frame: &TwoSortedFrame, v: &Valuation, f: &MTFormula) -> Result<Set, EvalError> {
    use MTFormula::*;
    let nx = frame.nx;
    let ny = frame.ny;
    let n_err = || kind_err(FrameKind::N, frame);
    let c_err = || kind_err(FrameKind::C, frame);
    match f {
        Var(p) => v.get(p).copied().ok_or(EvalError::MissingVariable(*p)),
        Top => Ok(full_set(nx)),
        Bot => Ok(0),
        One => Ok(full_set(ny)),
        Zero => Ok(0),
        Neg(a) => Ok(complement(eval_mt(frame, v, a)?, nx)),
        Sim(a) => Ok(complement(eval_mt(frame, v, a)?, ny)),
        And(a, b) | Cap(a, b) => Ok(eval_mt(frame, v, a)? & eval_mt(frame, v, b)?),
        Or(a, b) | Cup(a, b) => Ok(eval_mt(frame, v, a)? | eval_mt(frame, v, b)?),
        DiaNu(a) => frame.op_dia_nu(eval_mt(frame, v, a)?).map_err(|_| n_err()),
        BoxNuc(a) => frame.op_box_nuc(eval_mt(frame, v, a)?).map_err(|_| n_err()),
        BoxNi(a) => Ok(frame.op_box_ni(eval_mt(frame, v, a)?)),
        DiaNotNi(a) => Ok(frame.op_dia_notni(eval_mt(frame, v, a)?)),
        BoxrNotNi(a) => Ok(frame.op_boxr_notni(eval_mt(frame, v, a)?)),
        Tri(a, b) => {
            let u = eval_mt(frame, v, a)?;
            let d = eval_mt(frame, v, b)?;
            frame.op_tri(u, d).map_err(|_| c_err())
        }
        DiaIn(a) => Ok(frame.op_dia_in(eval_mt(frame, v, a)?)),
        BoxNotIn(a) => Ok(frame.op_box_notin(eval_mt(frame, v, a)?)),
        BoxrNotIn(a) => Ok(frame.op_boxr_notin(eval_mt(frame, v, a)?)),
        BTri(a, b) => {
            let u = eval_mt(frame, v, a)?;
            let c = eval_mt(frame, v, b)?;
            frame.op_btri(u, c).map_err(|_| c_err())
        }
        BoxNuAdj(a) => frame.op_box_nu_adj(eval_mt(frame, v, a)?).map_err(|_| n_err()),
        DiaNucAdj(a) => frame.op_dia_nuc_adj(eval_mt(frame, v, a)?).map_err(|_| n_err()),
        BTriR(a, b) => {
            let c = eval_mt(frame, v, a)?;
            let d = eval_mt(frame, v, b)?;
            frame.op_btrir(c, d).map_err(|_| c_err())
        }
    }
}

/// Iterate over all assignments of subsets of `{0..carrier-1}` to `vars`,
/// calling `body` with each valuation. `body` returns `false` to abort; the
/// return value says whether every call returned `true`.
pub fn for_all_valuations(
    vars: &[Symbol],
    carrier: usize,
    mut body: impl FnMut(&Valuation) -> bool,
) -> bool {
    let count = 1u64 << carrier;
    let mut assignment = vec![0u64; vars.len()];
    let mut v: Valuation = vars.iter().map(|&p| (p, 0)).collect();
    loop {
        for (i, &p) in vars.iter().enumerate() {
            v.insert(p, assignment[i] as Set);
        }
        if !body(&v) {
            return false;
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == vars.len() {
                return true;
            }
            assignment[i] += 1;
            if assignment[i] < count {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Frame validity of a single-type formula: true at every world under every
/// valuation of the formula's variables.
pub fn valid_st(frame: &SingleFrame, phi: &STFormula) -> Result<bool, EvalError> {
    let vars: Vec<Symbol> = phi.variables().into_iter().collect();
    let n = frame.worlds();
    let mut err = None;
    let ok = for_all_valuations(&vars, n, |v| match eval_st(frame, v, phi) {
        Ok(set) => set == full_set(n),
        Err(e) => {
            err = Some(e);
            false
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(ok),
    }
}

/// Frame validity of the sequent `phi |- psi`.
pub fn valid_st_sequent(
    frame: &SingleFrame,
    phi: &STFormula,
    psi: &STFormula,
) -> Result<bool, EvalError> {
    let mut vars = phi.variables();
    vars.extend(psi.variables());
    let vars: Vec<Symbol> = vars.into_iter().collect();
    let n = frame.worlds();
    let mut err = None;
    let ok = for_all_valuations(&vars, n, |v| {
        match (eval_st(frame, v, phi), eval_st(frame, v, psi)) {
            (Ok(a), Ok(b)) => is_subset(a, b),
            (Err(e), _) | (_, Err(e)) => {
                err = Some(e);
                false
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(ok),
    }
}

/// Frame validity of a bare multi-type formula: evaluation yields the full
/// carrier of the formula's sort under every valuation.
pub fn valid_mt_formula(frame: &TwoSortedFrame, f: &MTFormula) -> Result<bool, EvalError> {
    let vars: Vec<Symbol> = f.variables().into_iter().collect();
    let carrier = match f.sort() {
        crate::syntax::Sort::S => frame.nx,
        crate::syntax::Sort::N => frame.ny,
    };
    let mut err = None;
    let ok = for_all_valuations(&vars, frame.nx, |v| match eval_mt(frame, v, f) {
        Ok(set) => set == full_set(carrier),
        Err(e) => {
            err = Some(e);
            false
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(ok),
    }
}

/// Frame validity of a multi-type inequality on a two-sorted frame.
/// Variables are S-sorted, so valuations assign subsets of `X`.
pub fn valid_mt(
    frame: &TwoSortedFrame,
    lhs: &MTFormula,
    rhs: &MTFormula,
) -> Result<bool, EvalError> {
    let mut vars = lhs.variables();
    vars.extend(rhs.variables());
    let vars: Vec<Symbol> = vars.into_iter().collect();
    let mut err = None;
    let ok = for_all_valuations(&vars, frame.nx, |v| {
        match (eval_mt(frame, v, lhs), eval_mt(frame, v, rhs)) {
            (Ok(a), Ok(b)) => is_subset(a, b),
            (Err(e), _) | (_, Err(e)) => {
                err = Some(e);
                false
            }
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(ok),
    }
}

/// The canonical two-sorted frame of a single-type frame: `X = W`,
/// `Y = P(W)` indexed by bitmask.
pub fn star(frame: &SingleFrame) -> TwoSortedFrame {
    match frame {
        SingleFrame::N(nf) => {
            let nx = nf.worlds;
            let ny = 1usize << nx;
            let r_ni: Vec<Set> = subsets(nx).collect();
            let r_notni: Vec<Set> = subsets(nx).map(|z| complement(z, nx)).collect();
            let r_nu: Vec<Set> = (0..nx).map(|x| nf.nu[x] as Set).collect();
            let r_nuc: Vec<Set> = (0..nx)
                .map(|x| complement(nf.nu[x] as Set, ny))
                .collect();
            TwoSortedFrame::new_n(nx, ny, r_ni, r_notni, r_nu, r_nuc)
        }
        SingleFrame::C(cf) => {
            let nx = cf.worlds;
            let ny = 1usize << nx;
            let r_ni: Vec<Set> = subsets(nx).collect();
            let r_notni: Vec<Set> = subsets(nx).map(|z| complement(z, nx)).collect();
            let mut t_f = vec![0; nx * ny];
            for x in 0..nx {
                for z in subsets(nx) {
                    t_f[x * ny + z as usize] = cf.select(x, z);
                }
            }
            TwoSortedFrame::new_c(nx, ny, r_ni, r_notni, t_f)
        }
    }
}

/// Equation (1): `<nu>[ni] D = [nu^c]<notni> D` for every `D <= X`.
/// Only n-kind frames have a notion of supportedness.
pub fn is_supported(frame: &TwoSortedFrame) -> Result<bool, FrameError> {
    match frame.kind() {
        FrameKind::C => Err(FrameError::ExpectedNKind),
        FrameKind::N => {
            for d in subsets(frame.nx) {
                let lhs = frame.op_dia_nu(frame.op_box_ni(d))?;
                let rhs = frame.op_box_nuc(frame.op_dia_notni(d))?;
                if lhs != rhs {
                    return Ok(false);
                }
            }
            Ok(true)
        }
    }
}

/// The single-type frame associated with a two-sorted frame. For n-kind
/// input the frame must be supported; the result's neighbourhood families
/// are `nu(x) = {D | x in <nu>[ni] D}`, which supportedness makes
/// unambiguous. For c-kind input the selection function is recovered as
/// `f(x, D) = image under T_f(x, -) of [ni]D /\ [notni> D`, the value the
/// derived conditional operator forces.
pub fn unstar(frame: &TwoSortedFrame) -> Result<SingleFrame, FrameError> {
    if frame.nx > 5 {
        return Err(FrameError::CarrierTooLarge(frame.nx, 5));
    }
    match frame.kind() {
        FrameKind::N => {
            if !is_supported(frame)? {
                return Err(FrameError::NotSupported);
            }
            let mut nu = vec![0 as Family; frame.nx];
            for d in subsets(frame.nx) {
                let holds = frame.op_dia_nu(frame.op_box_ni(d))?;
                for x in elements(holds) {
                    nu[x] = family_insert(nu[x], d);
                }
            }
            Ok(SingleFrame::N(NFrame::new(frame.nx, nu)))
        }
        FrameKind::C => {
            let nx = frame.nx;
            let mut f = vec![vec![0; 1 << nx]; nx];
            for d in subsets(nx) {
                let antecedent = frame.op_box_ni(d) & frame.op_boxr_notni(d);
                for x in 0..nx {
                    f[x][d as usize] = frame.op_btri(antecedent, singleton(x))?;
                }
            }
            Ok(SingleFrame::C(CFrame::new(nx, f)))
        }
    }
}
