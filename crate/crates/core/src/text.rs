//! Concrete textual syntax. Everything is a single s-expression; parsers
//! and printers form round-trip pairs, with canonical output (single
//! spaces, sets as sorted integer lists, families in bitmask order).

use crate::calculus::structure::{ProofTree, Sequent, Structure};
use crate::frames::*;
use crate::semantics::{SingleFrame, Valuation};
use crate::sexp::{parse_sexp, ParseError, Sexp, SourceSpan};
use crate::symbol::Symbol;
use crate::syntax::{Inequality, MTFormula, STFormula, Sort};

fn err(message: impl Into<String>, span: SourceSpan) -> ParseError {
    ParseError::new(message, span)
}

fn expect_head<'a>(e: &'a Sexp, what: &str) -> Result<(&'a str, &'a [Sexp]), ParseError> {
    e.head()
        .ok_or_else(|| err(format!("expected a ({what} ...) form"), e.span))
}

fn expect_arity<'a>(
    head: &str,
    args: &'a [Sexp],
    n: usize,
    span: SourceSpan,
) -> Result<&'a [Sexp], ParseError> {
    if args.len() != n {
        return Err(err(
            format!("`{head}` takes {n} argument(s), found {}", args.len()),
            span,
        ));
    }
    Ok(args)
}

fn expect_sort(f: &MTFormula, want: Sort, span: SourceSpan) -> Result<(), ParseError> {
    if f.sort() != want {
        return Err(err(
            format!("sort error: expected an {want}-sorted operand, found {}", f.sort()),
            span,
        ));
    }
    Ok(())
}

// ---------------------------------------------------------------------
// multi-type formulas

pub fn parse_mt_formula(text: &str) -> Result<MTFormula, ParseError> {
    mt_formula(&parse_sexp(text)?)
}

pub fn mt_formula(e: &Sexp) -> Result<MTFormula, ParseError> {
    use MTFormula as M;
    if let Some(atom) = e.atom() {
        return match atom {
            "top" => Ok(M::Top),
            "bot" => Ok(M::Bot),
            "one" => Ok(M::One),
            "zero" => Ok(M::Zero),
            _ => Err(err(format!("unknown formula atom `{atom}`"), e.span)),
        };
    }
    let (head, args) = expect_head(e, "formula")?;
    let unary = |want: Sort| -> Result<M, ParseError> {
        let a = expect_arity(head, args, 1, e.span)?;
        let f = mt_formula(&a[0])?;
        expect_sort(&f, want, a[0].span)?;
        Ok(f)
    };
    let binary = |w1: Sort, w2: Sort| -> Result<(M, M), ParseError> {
        let a = expect_arity(head, args, 2, e.span)?;
        let f = mt_formula(&a[0])?;
        expect_sort(&f, w1, a[0].span)?;
        let g = mt_formula(&a[1])?;
        expect_sort(&g, w2, a[1].span)?;
        Ok((f, g))
    };
    Ok(match head {
        "var" => {
            let a = expect_arity(head, args, 1, e.span)?;
            M::Var(Symbol::new(a[0].expect_atom()?))
        }
        "neg" => M::neg(unary(Sort::S)?),
        "and" => {
            let (f, g) = binary(Sort::S, Sort::S)?;
            M::and(f, g)
        }
        "or" => {
            let (f, g) = binary(Sort::S, Sort::S)?;
            M::or(f, g)
        }
        "dia-nu" => M::dia_nu(unary(Sort::N)?),
        "box-nuc" => M::box_nuc(unary(Sort::N)?),
        "tri" => {
            let (f, g) = binary(Sort::N, Sort::S)?;
            M::tri(f, g)
        }
        "dia-in" => M::DiaIn(Box::new(unary(Sort::N)?)),
        "box-notin" => M::BoxNotIn(Box::new(unary(Sort::N)?)),
        "boxr-notin" => M::BoxrNotIn(Box::new(unary(Sort::N)?)),
        "btri" => {
            let (f, g) = binary(Sort::N, Sort::S)?;
            M::BTri(Box::new(f), Box::new(g))
        }
        "sim" => M::sim(unary(Sort::N)?),
        "cap" => {
            let (f, g) = binary(Sort::N, Sort::N)?;
            M::cap(f, g)
        }
        "cup" => {
            let (f, g) = binary(Sort::N, Sort::N)?;
            M::cup(f, g)
        }
        "box-ni" => M::box_ni(unary(Sort::S)?),
        "dia-notni" => M::dia_notni(unary(Sort::S)?),
        "boxr-notni" => M::boxr_notni(unary(Sort::S)?),
        "box-nu-adj" => M::BoxNuAdj(Box::new(unary(Sort::S)?)),
        "dia-nuc-adj" => M::DiaNucAdj(Box::new(unary(Sort::S)?)),
        "btrir" => {
            let (f, g) = binary(Sort::S, Sort::S)?;
            M::BTriR(Box::new(f), Box::new(g))
        }
        _ => return Err(err(format!("unknown formula connective `{head}`"), e.span)),
    })
}

pub fn print_mt_formula(f: &MTFormula) -> String {
    use MTFormula as M;
    match f {
        M::Var(p) => format!("(var {p})"),
        M::Top => "top".into(),
        M::Bot => "bot".into(),
        M::One => "one".into(),
        M::Zero => "zero".into(),
        M::Neg(a) => format!("(neg {})", print_mt_formula(a)),
        M::And(a, b) => format!("(and {} {})", print_mt_formula(a), print_mt_formula(b)),
        M::Or(a, b) => format!("(or {} {})", print_mt_formula(a), print_mt_formula(b)),
        M::DiaNu(a) => format!("(dia-nu {})", print_mt_formula(a)),
        M::BoxNuc(a) => format!("(box-nuc {})", print_mt_formula(a)),
        M::Tri(a, b) => format!("(tri {} {})", print_mt_formula(a), print_mt_formula(b)),
        M::DiaIn(a) => format!("(dia-in {})", print_mt_formula(a)),
        M::BoxNotIn(a) => format!("(box-notin {})", print_mt_formula(a)),
        M::BoxrNotIn(a) => format!("(boxr-notin {})", print_mt_formula(a)),
        M::BTri(a, b) => format!("(btri {} {})", print_mt_formula(a), print_mt_formula(b)),
        M::Sim(a) => format!("(sim {})", print_mt_formula(a)),
        M::Cap(a, b) => format!("(cap {} {})", print_mt_formula(a), print_mt_formula(b)),
        M::Cup(a, b) => format!("(cup {} {})", print_mt_formula(a), print_mt_formula(b)),
        M::BoxNi(a) => format!("(box-ni {})", print_mt_formula(a)),
        M::DiaNotNi(a) => format!("(dia-notni {})", print_mt_formula(a)),
        M::BoxrNotNi(a) => format!("(boxr-notni {})", print_mt_formula(a)),
        M::BoxNuAdj(a) => format!("(box-nu-adj {})", print_mt_formula(a)),
        M::DiaNucAdj(a) => format!("(dia-nuc-adj {})", print_mt_formula(a)),
        M::BTriR(a, b) => format!("(btrir {} {})", print_mt_formula(a), print_mt_formula(b)),
    }
}

// ---------------------------------------------------------------------
// single-type formulas; or/imp/iff are surface forms expanded here

pub fn parse_st_formula(text: &str) -> Result<STFormula, ParseError> {
    let e = parse_sexp(text)?;
    let f = st_formula(&e)?;
    if f.language().is_err() {
        return Err(err(
            "sort error: formula mixes the nabla and conditional languages",
            e.span,
        ));
    }
    Ok(f)
}

pub fn st_formula(e: &Sexp) -> Result<STFormula, ParseError> {
    use STFormula as S;
    if let Some(atom) = e.atom() {
        return match atom {
            "top" => Ok(S::Top),
            "bot" => Ok(S::Bot),
            _ => Err(err(format!("unknown formula atom `{atom}`"), e.span)),
        };
    }
    let (head, args) = expect_head(e, "formula")?;
    Ok(match head {
        "var" => {
            let a = expect_arity(head, args, 1, e.span)?;
            S::Var(Symbol::new(a[0].expect_atom()?))
        }
        "neg" => S::neg(st_formula(&expect_arity(head, args, 1, e.span)?[0])?),
        "nabla" => S::nabla(st_formula(&expect_arity(head, args, 1, e.span)?[0])?),
        "and" | "or" | "imp" | "iff" | "cond" => {
            let a = expect_arity(head, args, 2, e.span)?;
            let f = st_formula(&a[0])?;
            let g = st_formula(&a[1])?;
            match head {
                "and" => S::and(f, g),
                "or" => S::or(f, g),
                "imp" => S::imp(f, g),
                "iff" => S::and(S::imp(f.clone(), g.clone()), S::imp(g, f)),
                _ => S::cond(f, g),
            }
        }
        _ => return Err(err(format!("unknown formula connective `{head}`"), e.span)),
    })
}

pub fn print_st_formula(f: &STFormula) -> String {
    use STFormula as S;
    match f {
        S::Var(p) => format!("(var {p})"),
        S::Top => "top".into(),
        S::Bot => "bot".into(),
        S::Neg(a) => format!("(neg {})", print_st_formula(a)),
        S::And(a, b) => format!("(and {} {})", print_st_formula(a), print_st_formula(b)),
        S::Nabla(a) => format!("(nabla {})", print_st_formula(a)),
        S::Cond(a, b) => format!("(cond {} {})", print_st_formula(a), print_st_formula(b)),
    }
}

/// Either kind of formula, for format-sniffing entry points.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyFormula {
    St(STFormula),
    Mt(MTFormula),
}

fn mentions_st_token(e: &Sexp) -> bool {
    match e.atom() {
        Some(a) => matches!(a, "nabla" | "cond" | "imp" | "iff"),
        None => e.list().map_or(false, |items| items.iter().any(mentions_st_token)),
    }
}

/// Parse a formula of either family: forms mentioning a single-type-only
/// token (`nabla`, `cond`, `imp`, `iff`) parse as single-type, everything
/// else as multi-type.
pub fn parse_formula(text: &str) -> Result<AnyFormula, ParseError> {
    let e = parse_sexp(text)?;
    if mentions_st_token(&e) {
        Ok(AnyFormula::St(st_formula(&e)?))
    } else {
        Ok(AnyFormula::Mt(mt_formula(&e)?))
    }
}

// ---------------------------------------------------------------------
// inequalities

pub fn parse_inequality(text: &str) -> Result<Inequality, ParseError> {
    let e = parse_sexp(text)?;
    inequality(&e)
}

pub fn inequality(e: &Sexp) -> Result<Inequality, ParseError> {
    let (head, args) = expect_head(e, "ineq")?;
    if head != "ineq" {
        return Err(err("expected an (ineq LHS RHS) form", e.span));
    }
    let a = expect_arity(head, args, 2, e.span)?;
    let lhs = mt_formula(&a[0])?;
    let rhs = mt_formula(&a[1])?;
    if lhs.sort() != rhs.sort() {
        return Err(err("sort error: inequality sides have different sorts", e.span));
    }
    Ok(Inequality::new(lhs, rhs).expect("sorts checked"))
}

pub fn print_inequality(ineq: &Inequality) -> String {
    format!(
        "(ineq {} {})",
        print_mt_formula(ineq.lhs()),
        print_mt_formula(ineq.rhs())
    )
}

// ---------------------------------------------------------------------
// structures, sequents, proofs

pub fn parse_structure(text: &str) -> Result<Structure, ParseError> {
    structure(&parse_sexp(text)?)
}

pub fn structure(e: &Sexp) -> Result<Structure, ParseError> {
    use Structure as St;
    if let Some(atom) = e.atom() {
        return match atom {
            "htop" => Ok(St::HTop),
            "cbot" => Ok(St::CBot),
            "hone" => Ok(St::HOne),
            "czero" => Ok(St::CZero),
            _ => Err(err(format!("unknown structure atom `{atom}`"), e.span)),
        };
    }
    let (head, args) = expect_head(e, "structure")?;
    let unary = |want: Sort| -> Result<St, ParseError> {
        let a = expect_arity(head, args, 1, e.span)?;
        let s = structure(&a[0])?;
        if s.sort() != want {
            return Err(err(
                format!("sort error: `{head}` takes an {want}-sorted structure"),
                a[0].span,
            ));
        }
        Ok(s)
    };
    let binary = |w1: Sort, w2: Sort| -> Result<(St, St), ParseError> {
        let a = expect_arity(head, args, 2, e.span)?;
        let s = structure(&a[0])?;
        if s.sort() != w1 {
            return Err(err(
                format!("sort error: first operand of `{head}` must be {w1}-sorted"),
                a[0].span,
            ));
        }
        let t = structure(&a[1])?;
        if t.sort() != w2 {
            return Err(err(
                format!("sort error: second operand of `{head}` must be {w2}-sorted"),
                a[1].span,
            ));
        }
        Ok((s, t))
    };
    macro_rules! u {
        ($ctor:ident, $want:expr) => {
            St::$ctor(Box::new(unary($want)?))
        };
    }
    macro_rules! b {
        ($ctor:ident, $w1:expr, $w2:expr) => {{
            let (s, t) = binary($w1, $w2)?;
            St::$ctor(Box::new(s), Box::new(t))
        }};
    }
    Ok(match head {
        "fml" => {
            let a = expect_arity(head, args, 1, e.span)?;
            St::Formula(mt_formula(&a[0])?)
        }
        "tneg" => u!(TNeg, Sort::S),
        "hwedge" => b!(HWedge, Sort::S, Sort::S),
        "cvee" => b!(CVee, Sort::S, Sort::S),
        "hnu" => u!(HNu, Sort::N),
        "cnuc" => u!(CNuc, Sort::N),
        "hin" => u!(HIn, Sort::N),
        "cnotin" => u!(CNotIn, Sort::N),
        "ctri" => b!(CTri, Sort::N, Sort::S),
        "hblacktri" => b!(HBlackTri, Sort::N, Sort::S),
        "cnotinr" => u!(CNotInR, Sort::N),
        "tsim" => u!(TSim, Sort::N),
        "hcap" => b!(HCap, Sort::N, Sort::N),
        "ccup" => b!(CCup, Sort::N, Sort::N),
        "cni" => u!(CNi, Sort::S),
        "hnotni" => u!(HNotNi, Sort::S),
        "cnu-adj" => u!(CNuAdj, Sort::S),
        "hnuc-adj" => u!(HNucAdj, Sort::S),
        "cnotnir" => u!(CNotNiR, Sort::S),
        "cblacktrir" => b!(CBlackTriR, Sort::S, Sort::S),
        _ => {
            return Err(err(
                format!("unknown structure connective `{head}`"),
                e.span,
            ))
        }
    })
}

pub fn print_structure(s: &Structure) -> String {
    use Structure as St;
    let u = |head: &str, a: &Structure| format!("({head} {})", print_structure(a));
    let b = |head: &str, a: &Structure, c: &Structure| {
        format!("({head} {} {})", print_structure(a), print_structure(c))
    };
    match s {
        St::Formula(f) => format!("(fml {})", print_mt_formula(f)),
        St::HTop => "htop".into(),
        St::CBot => "cbot".into(),
        St::HOne => "hone".into(),
        St::CZero => "czero".into(),
        St::TNeg(a) => u("tneg", a),
        St::TSim(a) => u("tsim", a),
        St::HWedge(a, c) => b("hwedge", a, c),
        St::CVee(a, c) => b("cvee", a, c),
        St::HCap(a, c) => b("hcap", a, c),
        St::CCup(a, c) => b("ccup", a, c),
        St::HNu(a) => u("hnu", a),
        St::CNuc(a) => u("cnuc", a),
        St::HIn(a) => u("hin", a),
        St::CNotIn(a) => u("cnotin", a),
        St::CTri(a, c) => b("ctri", a, c),
        St::HBlackTri(a, c) => b("hblacktri", a, c),
        St::CNotInR(a) => u("cnotinr", a),
        St::CNi(a) => u("cni", a),
        St::HNotNi(a) => u("hnotni", a),
        St::CNuAdj(a) => u("cnu-adj", a),
        St::HNucAdj(a) => u("hnuc-adj", a),
        St::CNotNiR(a) => u("cnotnir", a),
        St::CBlackTriR(a, c) => b("cblacktrir", a, c),
    }
}

pub fn parse_sequent(text: &str) -> Result<Sequent, ParseError> {
    sequent(&parse_sexp(text)?)
}

pub fn sequent(e: &Sexp) -> Result<Sequent, ParseError> {
    let (head, args) = expect_head(e, "seq")?;
    if head != "seq" {
        return Err(err("expected a (seq LHS RHS) form", e.span));
    }
    let a = expect_arity(head, args, 2, e.span)?;
    let lhs = structure(&a[0])?;
    let rhs = structure(&a[1])?;
    if lhs.sort() != rhs.sort() {
        return Err(err("sort error: sequent sides have different sorts", e.span));
    }
    Ok(Sequent::new(lhs, rhs))
}

pub fn print_sequent(s: &Sequent) -> String {
    format!(
        "(seq {} {})",
        print_structure(&s.lhs),
        print_structure(&s.rhs)
    )
}

pub fn parse_proof(text: &str) -> Result<ProofTree, ParseError> {
    proof(&parse_sexp(text)?)
}

pub fn proof(e: &Sexp) -> Result<ProofTree, ParseError> {
    let (head, args) = expect_head(e, "rule")?;
    if head != "rule" {
        return Err(err("expected a (rule NAME (seq ...) SUBPROOF...) form", e.span));
    }
    if args.len() < 2 {
        return Err(err("`rule` takes a name, a sequent and subproofs", e.span));
    }
    let name = args[0].expect_atom()?.to_string();
    let Some(arities) = crate::calculus::rules::rule_arities(&name) else {
        return Err(err(format!("unknown rule `{name}`"), args[0].span));
    };
    let conclusion = sequent(&args[1])?;
    let children = args[2..].iter().map(proof).collect::<Result<Vec<_>, _>>()?;
    if !arities.contains(&children.len()) {
        return Err(err(
            format!(
                "rule `{name}` takes {} premise(s), found {}",
                arities
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(" or "),
                children.len()
            ),
            e.span,
        ));
    }
    Ok(ProofTree {
        rule: name,
        conclusion,
        children,
    })
}

pub fn print_proof(p: &ProofTree) -> String {
    fn go(p: &ProofTree, depth: usize, out: &mut String) {
        let indent = "  ".repeat(depth);
        out.push_str(&format!("{indent}(rule {} {}", p.rule, print_sequent(&p.conclusion)));
        for c in &p.children {
            out.push('\n');
            go(c, depth + 1, out);
        }
        out.push(')');
    }
    let mut out = String::new();
    go(p, 0, &mut out);
    out
}

// ---------------------------------------------------------------------
// frames

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ParsedFrame {
    Single(SingleFrame),
    TwoSorted(TwoSortedFrame),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MonotonicityMode {
    /// Reject non-monotone n-frames.
    Strict,
    /// Accept them and return a warning.
    Lax,
}

fn world_set(e: &Sexp, n: usize) -> Result<Set, ParseError> {
    let items = e
        .list()
        .ok_or_else(|| err("expected a set of worlds (a list)", e.span))?;
    let mut s: Set = 0;
    for item in items {
        let w = item.expect_usize()?;
        if w >= n {
            return Err(err(format!("world {w} outside carrier 0..{n}"), item.span));
        }
        s |= 1 << w;
    }
    Ok(s)
}

fn carrier(e: &Sexp, what: &str) -> Result<usize, ParseError> {
    let (head, args) = expect_head(e, what)?;
    if head != what {
        return Err(err(format!("expected ({what} ...)"), e.span));
    }
    for (i, a) in args.iter().enumerate() {
        if a.expect_usize()? != i {
            return Err(err(
                format!("`{what}` must list 0..n-1 in order"),
                a.span,
            ));
        }
    }
    Ok(args.len())
}

/// Parse any frame form: `(nframe ...)`, `(cframe ...)`, `(tsframe ...)`.
/// Returns an optional warning (lax mode, non-monotone n-frame).
pub fn parse_frame(
    text: &str,
    mode: MonotonicityMode,
) -> Result<(ParsedFrame, Option<String>), ParseError> {
    let e = parse_sexp(text)?;
    frame(&e, mode)
}

pub fn frame(
    e: &Sexp,
    mode: MonotonicityMode,
) -> Result<(ParsedFrame, Option<String>), ParseError> {
    let (head, args) = expect_head(e, "frame")?;
    match head {
        "nframe" => {
            if args.is_empty() {
                return Err(err("nframe needs a (worlds ...) entry", e.span));
            }
            let n = carrier(&args[0], "worlds")?;
            if n > 5 {
                return Err(err("n-frames are limited to 5 worlds", args[0].span));
            }
            let mut nu: Vec<Option<Family>> = vec![None; n];
            for entry in &args[1..] {
                let (h, a) = expect_head(entry, "nu")?;
                if h != "nu" {
                    return Err(err("expected a (nu WORLD (SET ...)) entry", entry.span));
                }
                let a = expect_arity("nu", a, 2, entry.span)?;
                let w = a[0].expect_usize()?;
                if w >= n {
                    return Err(err(format!("world {w} outside carrier"), a[0].span));
                }
                if nu[w].is_some() {
                    return Err(err(format!("duplicate nu entry for world {w}"), entry.span));
                }
                let sets = a[1]
                    .list()
                    .ok_or_else(|| err("expected a list of sets", a[1].span))?;
                let mut fam: Family = 0;
                for s in sets {
                    fam = family_insert(fam, world_set(s, n)?);
                }
                nu[w] = Some(fam);
            }
            let nu: Vec<Family> = nu.into_iter().map(|f| f.unwrap_or(0)).collect();
            let frame = NFrame::new(n, nu);
            let warning = match (frame.monotonicity_violation(), mode) {
                (Some(v), MonotonicityMode::Strict) => {
                    return Err(err(format!("{v}"), e.span));
                }
                (Some(v), MonotonicityMode::Lax) => Some(format!("warning: {v}")),
                (None, _) => None,
            };
            Ok((ParsedFrame::Single(SingleFrame::N(frame)), warning))
        }
        "cframe" => {
            if args.is_empty() {
                return Err(err("cframe needs a (worlds ...) entry", e.span));
            }
            let n = carrier(&args[0], "worlds")?;
            if n > 5 {
                return Err(err("c-frames are limited to 5 worlds", args[0].span));
            }
            let mut f: Vec<Vec<Option<Set>>> = vec![vec![None; 1 << n]; n];
            for entry in &args[1..] {
                let (h, a) = expect_head(entry, "f")?;
                if h != "f" {
                    return Err(err("expected an (f WORLD SET SET) entry", entry.span));
                }
                let a = expect_arity("f", a, 3, entry.span)?;
                let w = a[0].expect_usize()?;
                if w >= n {
                    return Err(err(format!("world {w} outside carrier"), a[0].span));
                }
                let z = world_set(&a[1], n)?;
                let fz = world_set(&a[2], n)?;
                if f[w][z as usize].is_some() {
                    return Err(err("duplicate f entry", entry.span));
                }
                f[w][z as usize] = Some(fz);
            }
            for (w, row) in f.iter().enumerate() {
                if let Some(z) = row.iter().position(|v| v.is_none()) {
                    return Err(err(
                        format!(
                            "selection function must be total: missing (f {w} {} _)",
                            print_world_set(z as Set)
                        ),
                        e.span,
                    ));
                }
            }
            let f = f
                .into_iter()
                .map(|row| row.into_iter().map(|v| v.unwrap()).collect())
                .collect();
            Ok((ParsedFrame::Single(SingleFrame::C(CFrame::new(n, f))), None))
        }
        "tsframe" => {
            if args.len() < 3 {
                return Err(err("tsframe needs a kind, (xs ...) and (ys ...)", e.span));
            }
            let kind = args[0].expect_atom()?;
            let nx = carrier(&args[1], "xs")?;
            let ny = carrier(&args[2], "ys")?;
            if nx > 32 || ny > 32 {
                return Err(err("two-sorted carriers are limited to 32 elements", e.span));
            }
            let mut r_ni = vec![0; ny];
            let mut r_notni = vec![0; ny];
            let mut r_nu = vec![0; nx];
            let mut r_nuc = vec![0; nx];
            let mut t_f = vec![0; nx * ny];
            let mut saw_tf = false;
            for entry in &args[3..] {
                let (h, pairs) = expect_head(entry, "relation")?;
                match h {
                    "rni" | "rnotni" => {
                        for p in pairs {
                            let pa = p
                                .list()
                                .ok_or_else(|| err("expected a (y x) pair", p.span))?;
                            if pa.len() != 2 {
                                return Err(err("expected a (y x) pair", p.span));
                            }
                            let y = pa[0].expect_usize()?;
                            let x = pa[1].expect_usize()?;
                            if y >= ny || x >= nx {
                                return Err(err("relation pair outside carriers", p.span));
                            }
                            if h == "rni" {
                                r_ni[y] |= 1 << x;
                            } else {
                                r_notni[y] |= 1 << x;
                            }
                        }
                    }
                    "rnu" | "rnuc" => {
                        for p in pairs {
                            let pa = p
                                .list()
                                .ok_or_else(|| err("expected an (x y) pair", p.span))?;
                            if pa.len() != 2 {
                                return Err(err("expected an (x y) pair", p.span));
                            }
                            let x = pa[0].expect_usize()?;
                            let y = pa[1].expect_usize()?;
                            if y >= ny || x >= nx {
                                return Err(err("relation pair outside carriers", p.span));
                            }
                            if h == "rnu" {
                                r_nu[x] |= 1 << y;
                            } else {
                                r_nuc[x] |= 1 << y;
                            }
                        }
                    }
                    "tf" => {
                        saw_tf = true;
                        for p in pairs {
                            let pa = p
                                .list()
                                .ok_or_else(|| err("expected an (x y x') triple", p.span))?;
                            if pa.len() != 3 {
                                return Err(err("expected an (x y x') triple", p.span));
                            }
                            let x = pa[0].expect_usize()?;
                            let y = pa[1].expect_usize()?;
                            let x2 = pa[2].expect_usize()?;
                            if x >= nx || y >= ny || x2 >= nx {
                                return Err(err("triple outside carriers", p.span));
                            }
                            t_f[x * ny + y] |= 1 << x2;
                        }
                    }
                    _ => return Err(err(format!("unknown relation `{h}`"), entry.span)),
                }
            }
            let frame = match kind {
                "n" => {
                    if saw_tf {
                        return Err(err("n-kind frame cannot carry tf", e.span));
                    }
                    TwoSortedFrame::new_n(nx, ny, r_ni, r_notni, r_nu, r_nuc)
                }
                "c" => TwoSortedFrame::new_c(nx, ny, r_ni, r_notni, t_f),
                _ => return Err(err("tsframe kind must be `n` or `c`", args[0].span)),
            };
            Ok((ParsedFrame::TwoSorted(frame), None))
        }
        _ => Err(err(format!("unknown frame form `{head}`"), e.span)),
    }
}

fn print_world_set(s: Set) -> String {
    let mut out = String::from("(");
    let mut first = true;
    for w in elements(s) {
        if !first {
            out.push(' ');
        }
        first = false;
        out.push_str(&w.to_string());
    }
    out.push(')');
    out
}

fn print_carrier(head: &str, n: usize) -> String {
    let mut out = format!("({head}");
    for i in 0..n {
        out.push_str(&format!(" {i}"));
    }
    out.push(')');
    out
}

pub fn print_single_frame(f: &SingleFrame) -> String {
    match f {
        SingleFrame::N(nf) => {
            let mut out = format!("(nframe {}", print_carrier("worlds", nf.worlds));
            for w in 0..nf.worlds {
                out.push_str(&format!(" (nu {w} ("));
                let mut first = true;
                for z in subsets(nf.worlds) {
                    if family_contains(nf.nu[w], z) {
                        if !first {
                            out.push(' ');
                        }
                        first = false;
                        out.push_str(&print_world_set(z));
                    }
                }
                out.push_str("))");
            }
            out.push(')');
            out
        }
        SingleFrame::C(cf) => {
            let mut out = format!("(cframe {}", print_carrier("worlds", cf.worlds));
            for w in 0..cf.worlds {
                for z in subsets(cf.worlds) {
                    out.push_str(&format!(
                        " (f {w} {} {})",
                        print_world_set(z),
                        print_world_set(cf.select(w, z))
                    ));
                }
            }
            out.push(')');
            out
        }
    }
}

pub fn print_two_sorted_frame(k: &TwoSortedFrame) -> String {
    let mut out = format!(
        "(tsframe {} {} {}",
        k.kind(),
        print_carrier("xs", k.nx),
        print_carrier("ys", k.ny)
    );
    let print_yx = |name: &str, rows: &[Set]| {
        let mut s = format!(" ({name}");
        for (y, row) in rows.iter().enumerate() {
            for x in elements(*row) {
                s.push_str(&format!(" ({y} {x})"));
            }
        }
        s.push(')');
        s
    };
    out.push_str(&print_yx("rni", k.r_ni()));
    out.push_str(&print_yx("rnotni", k.r_notni()));
    match &k.rels {
        TwoSortedRels::N { r_nu, r_nuc, .. } => {
            let print_xy = |name: &str, rows: &[Set]| {
                let mut s = format!(" ({name}");
                for (x, row) in rows.iter().enumerate() {
                    for y in elements(*row) {
                        s.push_str(&format!(" ({x} {y})"));
                    }
                }
                s.push(')');
                s
            };
            out.push_str(&print_xy("rnu", r_nu));
            out.push_str(&print_xy("rnuc", r_nuc));
        }
        TwoSortedRels::C { t_f, .. } => {
            out.push_str(" (tf");
            for x in 0..k.nx {
                for y in 0..k.ny {
                    for x2 in elements(t_f[x * k.ny + y]) {
                        out.push_str(&format!(" ({x} {y} {x2})"));
                    }
                }
            }
            out.push(')');
        }
    }
    out.push(')');
    out
}

pub fn print_frame(f: &ParsedFrame) -> String {
    match f {
        ParsedFrame::Single(s) => print_single_frame(s),
        ParsedFrame::TwoSorted(k) => print_two_sorted_frame(k),
    }
}

// ---------------------------------------------------------------------
// valuations

pub fn parse_valuation(text: &str, carrier_size: usize) -> Result<Valuation, ParseError> {
    let e = parse_sexp(text)?;
    let (head, args) = expect_head(&e, "valuation")?;
    if head != "valuation" {
        return Err(err("expected a (valuation (VAR WORLD ...) ...) form", e.span));
    }
    let mut v = Valuation::new();
    for entry in args {
        let items = entry
            .list()
            .ok_or_else(|| err("expected a (VAR WORLD ...) entry", entry.span))?;
        if items.is_empty() {
            return Err(err("expected a (VAR WORLD ...) entry", entry.span));
        }
        let name = Symbol::new(items[0].expect_atom()?);
        let mut s: Set = 0;
        for item in &items[1..] {
            let w = item.expect_usize()?;
            if w >= carrier_size {
                return Err(err(
                    format!("world {w} outside carrier 0..{carrier_size}"),
                    item.span,
                ));
            }
            s |= 1 << w;
        }
        v.insert(name, s);
    }
    Ok(v)
}
