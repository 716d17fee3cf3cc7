//! Single binary exposing the toolkit as subcommands.
//!
//! Exit codes: 0 success / property verified; 1 refuted or failed check;
//! 2 usage or parse errors.

use clap::{Parser, Subcommand, ValueEnum};
use mtlogic::calculus::rules::{extension_axioms, rule_schemas, Calculus};
use mtlogic::calculus::search::{search_proof, SearchOptions};
use mtlogic::calculus::sound::{rule_sound_covering, SoundnessReport};
use mtlogic::calculus::{check_proof, interpret_sequent};
use mtlogic::classify::is_analytic_inductive;
use mtlogic::correspondence::{fo_condition, verify_correspondence, AxiomId};
use mtlogic::enumerate::{cframes, monotone_nframes, two_sorted_nframes};
use mtlogic::frames::FrameKind;
use mtlogic::semantics::{eval_mt, eval_st, is_supported, star, unstar, valid_mt, valid_st};
use mtlogic::text::{self, AnyFormula, MonotonicityMode, ParsedFrame};
use mtlogic::{SingleFrame, TwoSortedFrame};
use std::fmt::Display;
use std::fs;
use std::io::Read;
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_REFUTED: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "mtlogic", version, about = "Multi-type analysis of monotone modal and conditional logic", max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format: human-oriented text or tab-separated lines.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Text,
    Lines,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Lang {
    Auto,
    St,
    Mt,
    Ineq,
    Structure,
    Sequent,
    Proof,
    Frame,
    Valuation,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CalcArg {
    DmtNabla,
    DmtCond,
}

impl From<CalcArg> for Calculus {
    fn from(c: CalcArg) -> Calculus {
        match c {
            CalcArg::DmtNabla => Calculus::DmtNabla,
            CalcArg::DmtCond => Calculus::DmtCond,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse an input and reprint it in canonical form.
    Parse {
        /// Input path, or `-` for stdin.
        input: String,
        #[arg(long, value_enum, default_value_t = Lang::Auto)]
        lang: Lang,
        /// Accept non-monotone n-frames (report instead of reject).
        #[arg(long)]
        lax_monotone: bool,
    },
    /// Translate a single-type formula file into the two-sorted language.
    /// Implications become translated sequents; other formulas become
    /// `top |- translation` sequents.
    Translate { input: String },
    /// Evaluate a formula on a frame under a valuation; prints the set of
    /// worlds (or states/neighbourhoods) where it holds.
    Eval {
        frame: String,
        formula: String,
        valuation: String,
        #[arg(long)]
        lax_monotone: bool,
    },
    /// Decide frame validity of a formula (single-type frame) or of an
    /// inequality/sequent (two-sorted frame). Exit 1 when refuted.
    Valid {
        frame: String,
        formula: String,
        #[arg(long)]
        lax_monotone: bool,
    },
    /// Print the canonical two-sorted frame of a single-type frame.
    Star {
        frame: String,
        #[arg(long)]
        lax_monotone: bool,
    },
    /// Print the single-type frame associated with a two-sorted frame.
    Unstar { frame: String },
    /// Check the supportedness equation on an n-kind two-sorted frame.
    Supported { frame: String },
    /// Brute-force check of one axiom's first-order correspondence over
    /// all frames up to the size bound.
    VerifyCorrespondence {
        #[arg(long)]
        axiom: String,
        #[arg(long, default_value_t = 2)]
        max_size: usize,
        /// Frame kind; must agree with the axiom (n for the monotone
        /// axioms, c for CS, CEM, ID).
        #[arg(long)]
        kind: Option<String>,
    },
    /// Classify an inequality file as analytic inductive or not.
    Classify { input: String },
    /// Check a proof file against a calculus and extension set.
    CheckProof {
        input: String,
        #[arg(long, value_enum, default_value_t = CalcArg::DmtNabla)]
        calc: CalcArg,
        /// Comma-separated axiom names, e.g. `T,N`.
        #[arg(long, value_delimiter = ',')]
        ext: Vec<String>,
    },
    /// Bounded backward proof search for a sequent file.
    SearchProof {
        input: String,
        #[arg(long, value_enum, default_value_t = CalcArg::DmtNabla)]
        calc: CalcArg,
        #[arg(long, value_delimiter = ',')]
        ext: Vec<String>,
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long)]
        allow_cut: bool,
    },
    /// Exhaustive semantic soundness of one rule over finite frames.
    RuleSoundness {
        #[arg(long)]
        rule: String,
        #[arg(long, value_enum, default_value_t = CalcArg::DmtNabla)]
        calc: CalcArg,
        /// Largest first-carrier size for the frame sweep.
        #[arg(long, default_value_t = 2)]
        nx: usize,
        /// Largest second-carrier size for the frame sweep.
        #[arg(long, default_value_t = 3)]
        ny: usize,
        /// World bound for extension rules (star images).
        #[arg(long, default_value_t = 2)]
        max_worlds: usize,
    },
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("stdin: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn usage_err(e: impl Display) -> u8 {
    eprintln!("error: {e}");
    EXIT_USAGE
}

fn mode(lax: bool) -> MonotonicityMode {
    if lax {
        MonotonicityMode::Lax
    } else {
        MonotonicityMode::Strict
    }
}

fn parse_axiom(name: &str) -> Result<AxiomId, String> {
    AxiomId::from_name(name).ok_or_else(|| format!("unknown axiom `{name}`"))
}

fn parse_extensions(names: &[String]) -> Result<Vec<AxiomId>, String> {
    names.iter().map(|n| parse_axiom(n)).collect()
}

fn set_to_list(s: mtlogic::frames::Set) -> String {
    let items: Vec<String> = mtlogic::frames::elements(s).map(|w| w.to_string()).collect();
    format!("({})", items.join(" "))
}

fn run() -> u8 {
    let cli = Cli::parse();
    let output = cli.output;
    match cli.command {
        Command::Parse {
            input,
            lang,
            lax_monotone,
        } => {
            let text = match read_input(&input) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let printed = parse_and_print(&text, lang, mode(lax_monotone));
            match printed {
                Ok((canonical, warning)) => {
                    if let Some(w) = warning {
                        eprintln!("{w}");
                    }
                    println!("{canonical}");
                    EXIT_OK
                }
                Err(e) => usage_err(e),
            }
        }
        Command::Translate { input } => {
            let text = match read_input(&input) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            match translate_command(&text) {
                Ok(out) => {
                    println!("{out}");
                    EXIT_OK
                }
                Err(e) => usage_err(e),
            }
        }
        Command::Eval {
            frame,
            formula,
            valuation,
            lax_monotone,
        } => match eval_command(&frame, &formula, &valuation, mode(lax_monotone)) {
            Ok(set) => {
                println!("{set}");
                EXIT_OK
            }
            Err(e) => usage_err(e),
        },
        Command::Valid {
            frame,
            formula,
            lax_monotone,
        } => match valid_command(&frame, &formula, mode(lax_monotone)) {
            Ok(true) => {
                println!("valid");
                EXIT_OK
            }
            Ok(false) => {
                println!("invalid");
                EXIT_REFUTED
            }
            Err(e) => usage_err(e),
        },
        Command::Star {
            frame,
            lax_monotone,
        } => match load_single_frame(&frame, mode(lax_monotone)) {
            Ok(f) => {
                println!("{}", text::print_two_sorted_frame(&star(&f)));
                EXIT_OK
            }
            Err(e) => usage_err(e),
        },
        Command::Unstar { frame } => match load_two_sorted_frame(&frame) {
            Ok(k) => match unstar(&k) {
                Ok(f) => {
                    println!("{}", text::print_single_frame(&f));
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_REFUTED
                }
            },
            Err(e) => usage_err(e),
        },
        Command::Supported { frame } => match load_two_sorted_frame(&frame) {
            Ok(k) => match is_supported(&k) {
                Ok(true) => {
                    println!("supported");
                    EXIT_OK
                }
                Ok(false) => {
                    println!("not-supported");
                    EXIT_REFUTED
                }
                Err(e) => usage_err(e),
            },
            Err(e) => usage_err(e),
        },
        Command::VerifyCorrespondence {
            axiom,
            max_size,
            kind,
        } => {
            let axiom = match parse_axiom(&axiom) {
                Ok(a) => a,
                Err(e) => return usage_err(e),
            };
            if let Some(kind) = kind {
                let expected = axiom.kind().to_string();
                if kind != expected {
                    return usage_err(format!(
                        "axiom {axiom} is an {expected}-frame axiom, not `{kind}`"
                    ));
                }
            }
            let report = verify_correspondence(axiom, max_size);
            for (n, count) in &report.per_size {
                match output {
                    Output::Text => println!("size {n}: {count} frames"),
                    Output::Lines => println!("size\t{n}\t{count}"),
                }
            }
            for m in &report.mismatches {
                let frame = text::print_single_frame(&m.frame);
                match output {
                    Output::Text => println!(
                        "mismatch: frame {}/{} axiom-valid={} condition-holds={} {frame}",
                        m.size, m.frame_id, m.axiom_valid, m.condition_holds
                    ),
                    Output::Lines => println!(
                        "mismatch\t{}-{}\t{}\t{}\t{frame}",
                        m.size, m.frame_id, m.axiom_valid, m.condition_holds
                    ),
                }
            }
            match output {
                Output::Text => println!(
                    "{} frames, {} mismatches",
                    report.frames_checked,
                    report.mismatches.len()
                ),
                Output::Lines => println!(
                    "total\t{}\t{}",
                    report.frames_checked,
                    report.mismatches.len()
                ),
            }
            let mut ok = report.ok();
            if let Some(guarded) = &report.guarded_variant_mismatches {
                match output {
                    Output::Text => println!(
                        "CS variant comparison: theorem-table row disagrees with axiom validity on {} frames; guarded correspondent variant disagrees on {} frames",
                        report.mismatches.len(),
                        guarded.len()
                    ),
                    Output::Lines => println!(
                        "cs-variants\t{}\t{}",
                        report.mismatches.len(),
                        guarded.len()
                    ),
                }
                ok = ok || guarded.is_empty();
            }
            if ok {
                EXIT_OK
            } else {
                EXIT_REFUTED
            }
        }
        Command::Classify { input } => {
            let text_in = match read_input(&input) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let ineq = match parse_ineq_or_sequent(&text_in) {
                Ok(i) => i,
                Err(e) => return usage_err(e),
            };
            let result = is_analytic_inductive(&ineq);
            if result.analytic {
                let (eps, omega) = result.witness.unwrap();
                match output {
                    Output::Text => {
                        println!("analytic-inductive");
                        println!("order-type: {eps}");
                        let edges = omega.edges().map(|(a, b)| format!("{a}<{b}")).collect::<Vec<_>>();
                        println!("dependency-order: {}", if edges.is_empty() { "(empty)".into() } else { edges.join(" ") });
                    }
                    Output::Lines => {
                        println!("analytic\ttrue");
                        println!("order-type\t{eps}");
                        for (a, b) in omega.edges() {
                            println!("omega\t{a}\t{b}");
                        }
                    }
                }
                EXIT_OK
            } else {
                let reason = result.failure_reason.unwrap_or_default();
                match output {
                    Output::Text => {
                        println!("not-analytic-inductive");
                        println!("reason: {reason}");
                    }
                    Output::Lines => {
                        println!("analytic\tfalse");
                        println!("reason\t{reason}");
                    }
                }
                EXIT_REFUTED
            }
        }
        Command::CheckProof { input, calc, ext } => {
            let text_in = match read_input(&input) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let proof = match text::parse_proof(&text_in) {
                Ok(p) => p,
                Err(e) => return usage_err(e),
            };
            let extensions = match parse_extensions(&ext) {
                Ok(x) => x,
                Err(e) => return usage_err(e),
            };
            match check_proof(&proof, calc.into(), &extensions) {
                Ok(()) => {
                    println!("ok");
                    EXIT_OK
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    EXIT_REFUTED
                }
            }
        }
        Command::SearchProof {
            input,
            calc,
            ext,
            depth,
            allow_cut,
        } => {
            let text_in = match read_input(&input) {
                Ok(t) => t,
                Err(e) => return usage_err(e),
            };
            let goal = match text::parse_sequent(&text_in) {
                Ok(s) => s,
                Err(e) => return usage_err(e),
            };
            let extensions = match parse_extensions(&ext) {
                Ok(x) => x,
                Err(e) => return usage_err(e),
            };
            match search_proof(
                &goal,
                depth,
                calc.into(),
                &extensions,
                SearchOptions { allow_cut },
            ) {
                Ok(Some(proof)) => {
                    println!("{}", text::print_proof(&proof));
                    EXIT_OK
                }
                Ok(None) => {
                    println!("no proof found within depth {depth}");
                    EXIT_REFUTED
                }
                Err(e) => usage_err(e),
            }
        }
        Command::RuleSoundness {
            rule,
            calc,
            nx,
            ny,
            max_worlds,
        } => rule_soundness_command(&rule, calc.into(), nx, ny, max_worlds, output),
    }
}

fn parse_and_print(
    text_in: &str,
    lang: Lang,
    mode: MonotonicityMode,
) -> Result<(String, Option<String>), String> {
    let head = sniff_head(text_in);
    let lang = if lang == Lang::Auto {
        match head.as_deref() {
            Some("nframe" | "cframe" | "tsframe") => Lang::Frame,
            Some("seq") => Lang::Sequent,
            Some("rule") => Lang::Proof,
            Some("ineq") => Lang::Ineq,
            Some("valuation") => Lang::Valuation,
            _ => Lang::Auto,
        }
    } else {
        lang
    };
    match lang {
        Lang::St => Ok((
            text::print_st_formula(&text::parse_st_formula(text_in).map_err(|e| e.to_string())?),
            None,
        )),
        Lang::Mt => Ok((
            text::print_mt_formula(&text::parse_mt_formula(text_in).map_err(|e| e.to_string())?),
            None,
        )),
        Lang::Ineq => Ok((
            text::print_inequality(&text::parse_inequality(text_in).map_err(|e| e.to_string())?),
            None,
        )),
        Lang::Structure => Ok((
            text::print_structure(&text::parse_structure(text_in).map_err(|e| e.to_string())?),
            None,
        )),
        Lang::Sequent => Ok((
            text::print_sequent(&text::parse_sequent(text_in).map_err(|e| e.to_string())?),
            None,
        )),
        Lang::Proof => Ok((
            text::print_proof(&text::parse_proof(text_in).map_err(|e| e.to_string())?),
            None,
        )),
        Lang::Frame => {
            let (frame, warning) = text::parse_frame(text_in, mode).map_err(|e| e.to_string())?;
            Ok((text::print_frame(&frame), warning))
        }
        Lang::Valuation => {
            // reprint with a large carrier bound; eval validates properly
            let v = text::parse_valuation(text_in, 32).map_err(|e| e.to_string())?;
            let mut entries: Vec<String> = Vec::new();
            for (name, set) in &v {
                let worlds: Vec<String> =
                    mtlogic::frames::elements(*set).map(|w| w.to_string()).collect();
                if worlds.is_empty() {
                    entries.push(format!("({name})"));
                } else {
                    entries.push(format!("({name} {})", worlds.join(" ")));
                }
            }
            Ok((format!("(valuation {})", entries.join(" ")), None))
        }
        Lang::Auto => match text::parse_formula(text_in) {
            Ok(AnyFormula::St(f)) => Ok((text::print_st_formula(&f), None)),
            Ok(AnyFormula::Mt(f)) => Ok((text::print_mt_formula(&f), None)),
            Err(e) => Err(e.to_string()),
        },
    }
}

fn sniff_head(text_in: &str) -> Option<String> {
    let e = mtlogic::sexp::parse_sexp(text_in).ok()?;
    e.head().map(|(h, _)| h.to_string())
}

/// Surface-level implication detection: `(imp A B)` before expansion.
fn translate_command(text_in: &str) -> Result<String, String> {
    use mtlogic::translation::{tau1, tau2, tau_cond, translate_sequent};
    use mtlogic::syntax::StLanguage;
    let e = mtlogic::sexp::parse_sexp(text_in).map_err(|e| e.to_string())?;
    let as_seq = |lhs: mtlogic::MTFormula, rhs: mtlogic::MTFormula| {
        format!(
            "(seq (fml {}) (fml {}))",
            text::print_mt_formula(&lhs),
            text::print_mt_formula(&rhs)
        )
    };
    if let Some(("imp", args)) = e.head() {
        if args.len() == 2 {
            let lhs = text::st_formula(&args[0]).map_err(|e| e.to_string())?;
            let rhs = text::st_formula(&args[1]).map_err(|e| e.to_string())?;
            let ineq = translate_sequent(&lhs, &rhs).map_err(|e| e.to_string())?;
            return Ok(as_seq(ineq.lhs().clone(), ineq.rhs().clone()));
        }
    }
    let phi = text::st_formula(&e).map_err(|e| e.to_string())?;
    let rhs = match phi.language().map_err(|e| e.to_string())? {
        StLanguage::Conditional => tau_cond(&phi).map_err(|e| e.to_string())?,
        _ => tau2(&phi).map_err(|e| e.to_string())?,
    };
    let _ = tau1(&phi); // both translations exist for nabla-language input
    Ok(as_seq(mtlogic::MTFormula::Top, rhs))
}

fn load_single_frame(path: &str, mode: MonotonicityMode) -> Result<SingleFrame, String> {
    let text_in = read_input(path)?;
    let (frame, warning) = text::parse_frame(&text_in, mode).map_err(|e| e.to_string())?;
    if let Some(w) = warning {
        eprintln!("{w}");
    }
    match frame {
        ParsedFrame::Single(f) => Ok(f),
        ParsedFrame::TwoSorted(_) => Err("expected a single-type frame".into()),
    }
}

fn load_two_sorted_frame(path: &str) -> Result<TwoSortedFrame, String> {
    let text_in = read_input(path)?;
    let (frame, _) =
        text::parse_frame(&text_in, MonotonicityMode::Strict).map_err(|e| e.to_string())?;
    match frame {
        ParsedFrame::TwoSorted(k) => Ok(k),
        ParsedFrame::Single(_) => Err("expected a two-sorted (tsframe ...) frame".into()),
    }
}

fn eval_command(
    frame_path: &str,
    formula_path: &str,
    valuation_path: &str,
    mode: MonotonicityMode,
) -> Result<String, String> {
    let frame_text = read_input(frame_path)?;
    let (frame, warning) = text::parse_frame(&frame_text, mode).map_err(|e| e.to_string())?;
    if let Some(w) = warning {
        eprintln!("{w}");
    }
    let formula_text = read_input(formula_path)?;
    let valuation_text = read_input(valuation_path)?;
    match frame {
        ParsedFrame::Single(f) => {
            let phi = text::parse_st_formula(&formula_text).map_err(|e| e.to_string())?;
            let v = text::parse_valuation(&valuation_text, f.worlds()).map_err(|e| e.to_string())?;
            let set = eval_st(&f, &v, &phi).map_err(|e| e.to_string())?;
            Ok(set_to_list(set))
        }
        ParsedFrame::TwoSorted(k) => {
            let phi = text::parse_mt_formula(&formula_text).map_err(|e| e.to_string())?;
            let v = text::parse_valuation(&valuation_text, k.nx).map_err(|e| e.to_string())?;
            let set = eval_mt(&k, &v, &phi).map_err(|e| e.to_string())?;
            Ok(set_to_list(set))
        }
    }
}

fn valid_command(
    frame_path: &str,
    formula_path: &str,
    mode: MonotonicityMode,
) -> Result<bool, String> {
    let frame_text = read_input(frame_path)?;
    let (frame, warning) = text::parse_frame(&frame_text, mode).map_err(|e| e.to_string())?;
    if let Some(w) = warning {
        eprintln!("{w}");
    }
    let formula_text = read_input(formula_path)?;
    match frame {
        ParsedFrame::Single(f) => {
            let phi = text::parse_st_formula(&formula_text).map_err(|e| e.to_string())?;
            valid_st(&f, &phi).map_err(|e| e.to_string())
        }
        ParsedFrame::TwoSorted(k) => {
            // accept an inequality, a sequent, or a bare formula
            let head = sniff_head(&formula_text);
            if matches!(head.as_deref(), Some("seq" | "ineq")) {
                let ineq = parse_ineq_or_sequent(&formula_text)?;
                valid_mt(&k, ineq.lhs(), ineq.rhs()).map_err(|e| e.to_string())
            } else {
                let f = text::parse_mt_formula(&formula_text).map_err(|e| e.to_string())?;
                mtlogic::semantics::valid_mt_formula(&k, &f).map_err(|e| e.to_string())
            }
        }
    }
}

fn parse_ineq_or_sequent(text_in: &str) -> Result<mtlogic::Inequality, String> {
    let e = mtlogic::sexp::parse_sexp(text_in).map_err(|e| e.to_string())?;
    match e.head() {
        Some(("seq", _)) => {
            let seq = text::sequent(&e).map_err(|e| e.to_string())?;
            interpret_sequent(&seq).map_err(|e| e.to_string())
        }
        _ => text::inequality(&e).map_err(|e| e.to_string()),
    }
}

fn rule_soundness_command(
    rule_name: &str,
    calc: Calculus,
    nx: usize,
    ny: usize,
    max_worlds: usize,
    output: Output,
) -> u8 {
    let all_ext = extension_axioms(calc);
    let rules = match rule_schemas(calc, all_ext) {
        Ok(r) => r,
        Err(e) => return usage_err(e),
    };
    let matching: Vec<_> = rules.iter().filter(|r| r.name == rule_name).collect();
    if matching.is_empty() {
        return usage_err(format!("no rule named `{rule_name}` in {}", calc.name()));
    }
    let extension = AxiomId::from_name(rule_name).filter(|a| all_ext.contains(a));
    let frames: Vec<TwoSortedFrame> = match extension {
        Some(axiom) => {
            // star images of condition-satisfying frames
            let mut out = Vec::new();
            for n in 1..=max_worlds {
                match axiom.kind() {
                    FrameKind::N => {
                        for f in monotone_nframes(n) {
                            let f = SingleFrame::N(f);
                            if fo_condition(axiom, &f).unwrap() {
                                out.push(star(&f));
                            }
                        }
                    }
                    FrameKind::C => {
                        for f in cframes(n) {
                            let f = SingleFrame::C(f);
                            if fo_condition(axiom, &f).unwrap() {
                                out.push(star(&f));
                            }
                        }
                    }
                }
            }
            out
        }
        None => Vec::new(),
    };
    let mut total = SoundnessReport::default();
    for r in matching {
        let report = if extension.is_some() {
            rule_sound_covering(r, &frames)
        } else {
            match calc {
                Calculus::DmtNabla => {
                    let mut rep = SoundnessReport::default();
                    for x in 0..=nx {
                        for y in 0..=ny {
                            if 4 * x * y <= 24 {
                                let batch = two_sorted_nframes(x, y, true);
                                rep.merge(rule_sound_covering(r, &batch));
                            }
                        }
                    }
                    rep
                }
                Calculus::DmtCond => {
                    let rels = mtlogic::calculus::sound::rule_relations(r);
                    let mut rep = SoundnessReport::default();
                    for x in 0..=nx {
                        for y in 0..=ny {
                            let batch =
                                mtlogic::calculus::sound::c_frame_representatives(x, y, rels);
                            rep.merge(rule_sound_covering(r, &batch));
                        }
                    }
                    rep
                }
            }
        };
        total.merge(report);
    }
    for v in &total.violations {
        let frame = text::print_two_sorted_frame(&v.frame);
        let assignment: Vec<String> = v
            .assignment
            .iter()
            .map(|(m, s)| format!("{m}={}", set_to_list(*s)))
            .collect();
        match output {
            Output::Text => println!(
                "violation ({}{}): {} under {}",
                v.rule,
                if v.reversed { ", reversed" } else { "" },
                frame,
                assignment.join(" ")
            ),
            Output::Lines => println!(
                "violation\t{}\t{}\t{}\t{}",
                v.rule,
                v.reversed,
                assignment.join(","),
                frame
            ),
        }
    }
    match output {
        Output::Text => println!(
            "rule {rule_name}: {} frames checked, {} violations",
            total.frames_checked,
            total.violations.len()
        ),
        Output::Lines => println!(
            "total\t{rule_name}\t{}\t{}",
            total.frames_checked,
            total.violations.len()
        ),
    }
    if total.ok() {
        EXIT_OK
    } else {
        EXIT_REFUTED
    }
}

fn main() -> ExitCode {
    ExitCode::from(run())
}
