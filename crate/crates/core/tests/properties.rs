//! Property suites: parser round-trips, sign-flip involution, substitution
//! composition, translation agreement on supported models.

use mtlogic::classify::{signed_tree, Sign, SignedNode};
use mtlogic::semantics::{eval_mt, for_all_valuations, star, SingleFrame};
use mtlogic::symbol::Symbol;
use mtlogic::syntax::{substitute, MTFormula, STFormula, Sort};
use mtlogic::text;
use mtlogic::calculus::structure::{Sequent, Structure};
use proptest::prelude::*;

fn var_name() -> impl Strategy<Value = &'static str> {
    prop_oneof![Just("p"), Just("q"), Just("r")]
}

fn mt_formula(sort: Sort, depth: u32) -> BoxedStrategy<MTFormula> {
    if depth == 0 {
        match sort {
            Sort::S => prop_oneof![
                Just(MTFormula::Top),
                Just(MTFormula::Bot),
                var_name().prop_map(MTFormula::var),
            ]
            .boxed(),
            Sort::N => prop_oneof![Just(MTFormula::One), Just(MTFormula::Zero)].boxed(),
        }
    } else {
        let d = depth - 1;
        match sort {
            Sort::S => prop_oneof![
                var_name().prop_map(MTFormula::var),
                Just(MTFormula::Top),
                mt_formula(Sort::S, d).prop_map(MTFormula::neg),
                (mt_formula(Sort::S, d), mt_formula(Sort::S, d))
                    .prop_map(|(a, b)| MTFormula::and(a, b)),
                (mt_formula(Sort::S, d), mt_formula(Sort::S, d))
                    .prop_map(|(a, b)| MTFormula::or(a, b)),
                mt_formula(Sort::N, d).prop_map(MTFormula::dia_nu),
                mt_formula(Sort::N, d).prop_map(MTFormula::box_nuc),
                (mt_formula(Sort::N, d), mt_formula(Sort::S, d))
                    .prop_map(|(a, b)| MTFormula::tri(a, b)),
                mt_formula(Sort::N, d).prop_map(|a| MTFormula::DiaIn(Box::new(a))),
                mt_formula(Sort::N, d).prop_map(|a| MTFormula::BoxNotIn(Box::new(a))),
                mt_formula(Sort::N, d).prop_map(|a| MTFormula::BoxrNotIn(Box::new(a))),
                (mt_formula(Sort::N, d), mt_formula(Sort::S, d))
                    .prop_map(|(a, b)| MTFormula::BTri(Box::new(a), Box::new(b))),
            ]
            .boxed(),
            Sort::N => prop_oneof![
                Just(MTFormula::One),
                Just(MTFormula::Zero),
                mt_formula(Sort::N, d).prop_map(MTFormula::sim),
                (mt_formula(Sort::N, d), mt_formula(Sort::N, d))
                    .prop_map(|(a, b)| MTFormula::cap(a, b)),
                (mt_formula(Sort::N, d), mt_formula(Sort::N, d))
                    .prop_map(|(a, b)| MTFormula::cup(a, b)),
                mt_formula(Sort::S, d).prop_map(MTFormula::box_ni),
                mt_formula(Sort::S, d).prop_map(MTFormula::dia_notni),
                mt_formula(Sort::S, d).prop_map(MTFormula::boxr_notni),
                mt_formula(Sort::S, d).prop_map(|a| MTFormula::BoxNuAdj(Box::new(a))),
                mt_formula(Sort::S, d).prop_map(|a| MTFormula::DiaNucAdj(Box::new(a))),
                (mt_formula(Sort::S, d), mt_formula(Sort::S, d))
                    .prop_map(|(a, b)| MTFormula::BTriR(Box::new(a), Box::new(b))),
            ]
            .boxed(),
        }
    }
}

fn any_mt_formula(depth: u32) -> BoxedStrategy<MTFormula> {
    prop_oneof![mt_formula(Sort::S, depth), mt_formula(Sort::N, depth)].boxed()
}

fn structure(sort: Sort, depth: u32) -> BoxedStrategy<Structure> {
    let fml_leaf = mt_formula(sort, 1).prop_map(Structure::Formula).boxed();
    if depth == 0 {
        match sort {
            Sort::S => prop_oneof![fml_leaf, Just(Structure::HTop), Just(Structure::CBot)].boxed(),
            Sort::N => prop_oneof![fml_leaf, Just(Structure::HOne), Just(Structure::CZero)].boxed(),
        }
    } else {
        let d = depth - 1;
        match sort {
            Sort::S => prop_oneof![
                fml_leaf,
                structure(Sort::S, d).prop_map(|a| Structure::TNeg(Box::new(a))),
                (structure(Sort::S, d), structure(Sort::S, d))
                    .prop_map(|(a, b)| Structure::HWedge(Box::new(a), Box::new(b))),
                (structure(Sort::S, d), structure(Sort::S, d))
                    .prop_map(|(a, b)| Structure::CVee(Box::new(a), Box::new(b))),
                structure(Sort::N, d).prop_map(|a| Structure::HNu(Box::new(a))),
                structure(Sort::N, d).prop_map(|a| Structure::CNuc(Box::new(a))),
                structure(Sort::N, d).prop_map(|a| Structure::HIn(Box::new(a))),
                structure(Sort::N, d).prop_map(|a| Structure::CNotIn(Box::new(a))),
                (structure(Sort::N, d), structure(Sort::S, d))
                    .prop_map(|(a, b)| Structure::CTri(Box::new(a), Box::new(b))),
                (structure(Sort::N, d), structure(Sort::S, d))
                    .prop_map(|(a, b)| Structure::HBlackTri(Box::new(a), Box::new(b))),
                structure(Sort::N, d).prop_map(|a| Structure::CNotInR(Box::new(a))),
            ]
            .boxed(),
            Sort::N => prop_oneof![
                fml_leaf,
                structure(Sort::N, d).prop_map(|a| Structure::TSim(Box::new(a))),
                (structure(Sort::N, d), structure(Sort::N, d))
                    .prop_map(|(a, b)| Structure::HCap(Box::new(a), Box::new(b))),
                (structure(Sort::N, d), structure(Sort::N, d))
                    .prop_map(|(a, b)| Structure::CCup(Box::new(a), Box::new(b))),
                structure(Sort::S, d).prop_map(|a| Structure::CNi(Box::new(a))),
                structure(Sort::S, d).prop_map(|a| Structure::HNotNi(Box::new(a))),
                structure(Sort::S, d).prop_map(|a| Structure::CNuAdj(Box::new(a))),
                structure(Sort::S, d).prop_map(|a| Structure::HNucAdj(Box::new(a))),
                structure(Sort::S, d).prop_map(|a| Structure::CNotNiR(Box::new(a))),
                (structure(Sort::S, d), structure(Sort::S, d))
                    .prop_map(|(a, b)| Structure::CBlackTriR(Box::new(a), Box::new(b))),
            ]
            .boxed(),
        }
    }
}

/// Pure nabla-language single-type formulas.
fn st_nabla(depth: u32) -> BoxedStrategy<STFormula> {
    if depth == 0 {
        prop_oneof![
            var_name().prop_map(STFormula::var),
            Just(STFormula::Top),
            Just(STFormula::Bot),
        ]
        .boxed()
    } else {
        let d = depth - 1;
        prop_oneof![
            var_name().prop_map(STFormula::var),
            st_nabla(d).prop_map(STFormula::neg),
            (st_nabla(d), st_nabla(d)).prop_map(|(a, b)| STFormula::and(a, b)),
            st_nabla(d).prop_map(STFormula::nabla),
        ]
        .boxed()
    }
}

fn flipped(a: &SignedNode, b: &SignedNode) -> bool {
    a.sign == b.sign.flip()
        && a.label == b.label
        && a.children.len() == b.children.len()
        && a.children.iter().zip(&b.children).all(|(x, y)| flipped(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1100))]

    #[test]
    fn formula_roundtrip(f in any_mt_formula(4)) {
        let printed = text::print_mt_formula(&f);
        let parsed = text::parse_mt_formula(&printed).unwrap();
        prop_assert_eq!(parsed, f);
    }

    #[test]
    fn structure_roundtrip(s in prop_oneof![structure(Sort::S, 3), structure(Sort::N, 3)]) {
        let printed = text::print_structure(&s);
        let parsed = text::parse_structure(&printed).unwrap();
        prop_assert_eq!(parsed, s);
    }

    #[test]
    fn sign_flip_involution(f in any_mt_formula(4)) {
        let plus = signed_tree(&f, Sign::Plus);
        let minus = signed_tree(&f, Sign::Minus);
        prop_assert!(flipped(&plus, &minus));
    }
}

proptest! {
    #[test]
    fn sequent_roundtrip(
        lhs in structure(Sort::S, 2),
        rhs in structure(Sort::S, 2),
    ) {
        let seq = Sequent::new(lhs, rhs);
        let printed = text::print_sequent(&seq);
        let parsed = text::parse_sequent(&printed).unwrap();
        prop_assert_eq!(parsed, seq);
    }

    #[test]
    fn st_roundtrip(f in st_nabla(4)) {
        let printed = text::print_st_formula(&f);
        let parsed = text::parse_st_formula(&printed).unwrap();
        prop_assert_eq!(parsed, f);
    }

    #[test]
    fn substitution_composes(
        f in mt_formula(Sort::S, 3),
        g in mt_formula(Sort::S, 2),
        h in mt_formula(Sort::S, 2),
    ) {
        // substitute(substitute(f,p,g),q,h) == substitute(substitute(f,q,h),p,substitute(g,q,h))
        // requires p not in vars(h), q not in vars(g), p != q; our
        // generators only emit p, q, r, so rename offenders away
        let p = Symbol::new("p");
        let q = Symbol::new("q");
        let g = substitute(&g, q, &MTFormula::var("r")).unwrap();
        let h = substitute(&h, p, &MTFormula::var("r")).unwrap();
        let lhs = substitute(&substitute(&f, p, &g).unwrap(), q, &h).unwrap();
        let rhs = substitute(
            &substitute(&f, q, &h).unwrap(),
            p,
            &substitute(&g, q, &h).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn translations_well_sorted_and_agree_on_supported_models(f in st_nabla(3)) {
        use mtlogic::translation::{tau1, tau2};
        let t1 = tau1(&f).unwrap();
        let t2 = tau2(&f).unwrap();
        prop_assert!(t1.well_sorted());
        prop_assert!(t2.well_sorted());
        prop_assert_eq!(t1.sort(), Sort::S);

        // supported models: star images of the monotone 2-world frames
        let vars: Vec<Symbol> = f.variables().into_iter().collect();
        for nf in mtlogic::enumerate::monotone_nframes(2) {
            let k = star(&SingleFrame::N(nf));
            let ok = for_all_valuations(&vars, k.nx, |v| {
                eval_mt(&k, v, &t1).unwrap() == eval_mt(&k, v, &t2).unwrap()
            });
            prop_assert!(ok, "tau1/tau2 disagree for {:?}", f);
        }
    }

    #[test]
    fn parse_errors_stay_in_bounds(f in any_mt_formula(3), cut in 0usize..40) {
        let printed = text::print_mt_formula(&f);
        let cut = cut.min(printed.len());
        let truncated = &printed[..cut];
        if let Err(e) = text::parse_mt_formula(truncated) {
            prop_assert!(e.span.start <= e.span.end);
            prop_assert!(e.span.end <= truncated.len());
        }
    }

    #[test]
    fn well_sorted_generators(f in any_mt_formula(4)) {
        prop_assert!(f.well_sorted());
    }
}

#[test]
fn display_postulate_inverses() {
    // applying a display rule forward then backward returns the original
    // sequent, for every bidirectional rule, on a sample instance
    use mtlogic::calculus::rules::{rule_schemas, Calculus};
    use mtlogic::calculus::schema::instantiate_sequent;

    for calc in [Calculus::DmtNabla, Calculus::DmtCond] {
        for rule in rule_schemas(calc, &[]).unwrap() {
            let Some(rev) = rule.reversed() else { continue };
            // build a sample instance of the conclusion by substituting
            // concrete formulas for every metavariable
            let mut subst = mtlogic::calculus::schema::Substitution::new();
            for v in rule
                .conclusion
                .metavars()
                .into_iter()
                .chain(rule.premises.iter().flat_map(|p| p.metavars()))
            {
                use mtlogic::calculus::schema::{Binding, MetaVar};
                let value = match v {
                    MetaVar::SStruct(_) | MetaVar::SFormula(_) | MetaVar::Atom(_) => {
                        Binding::Formula(MTFormula::var("p"))
                    }
                    MetaVar::NStruct(_) | MetaVar::NFormula(_) => {
                        Binding::Formula(MTFormula::box_ni(MTFormula::var("p")))
                    }
                };
                subst.entry(v).or_insert(value);
            }
            let concl = instantiate_sequent(&rule.conclusion, &subst).unwrap();
            let premise = instantiate_sequent(&rule.premises[0], &subst).unwrap();
            // forward: premise -> conclusion; backward: conclusion -> premise
            let back = {
                let mut s = mtlogic::calculus::schema::Substitution::new();
                assert!(
                    mtlogic::calculus::schema::match_sequent(&rev.premises[0], &concl, &mut s),
                    "rule {}: reversed premise does not match its own conclusion",
                    rule.name
                );
                instantiate_sequent(&rev.conclusion, &s).unwrap()
            };
            assert_eq!(back, premise, "rule {}: display inverse mismatch", rule.name);
        }
    }
}

#[test]
fn checker_and_search_agree_on_small_goals() {
    use mtlogic::calculus::check::check_proof;
    use mtlogic::calculus::rules::Calculus;
    use mtlogic::calculus::search::{search_proof, SearchOptions};

    // a deterministic battery of goals; every found proof must recheck
    let goals = [
        "(seq (fml (and (var p) (var q))) (fml (and (var q) (var p))))",
        "(seq (fml (neg (var p))) (fml (neg (var p))))",
        "(seq (fml (box-ni (var p))) (fml (box-ni (var p))))",
        "(seq (fml (dia-nu (box-ni (var p)))) (fml (dia-nu (box-ni (var p)))))",
        "(seq htop (fml top))",
        "(seq (fml bot) cbot)",
    ];
    for text_goal in goals {
        let goal = text::parse_sequent(text_goal).unwrap();
        if let Some(p) =
            search_proof(&goal, 5, Calculus::DmtNabla, &[], SearchOptions::default()).unwrap()
        {
            check_proof(&p, Calculus::DmtNabla, &[]).unwrap();
        }
    }
}

#[test]
fn eval_respects_boolean_structure() {
    // a tiny sanity net over the generated-model evaluator: de morgan on
    // a fixed supported frame
    let nf = mtlogic::NFrame::new(2, vec![0b1010, 0b1000]);
    let k = star(&SingleFrame::N(nf));
    let p = MTFormula::var("p");
    let q = MTFormula::var("q");
    let lhs = MTFormula::neg(MTFormula::and(p.clone(), q.clone()));
    let rhs = MTFormula::or(MTFormula::neg(p), MTFormula::neg(q));
    let vars = [Symbol::new("p"), Symbol::new("q")];
    assert!(for_all_valuations(&vars, k.nx, |v| {
        eval_mt(&k, v, &lhs).unwrap() == eval_mt(&k, v, &rhs).unwrap()
    }));
}
