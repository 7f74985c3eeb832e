use std::time::{Duration, Instant};

use pgal_compose::{
    commutation_check, comp_similarity_check, lifting_comparison_check, verify_comp_coincide,
    verify_comp_theorem, CompStar, CompositionInput, SimilarityVariant as CompVariant,
};
use pgal_functor::{builtin_functor, functor_similarity_check, verify_functor_theorem, FunctorDef};
use pgal_funrel::{build_dep_fun_closure, similarity_check, verify_closure_theorem, DepFunClosureInput, SimilarityVariant};
use pgal_galois::{galois_class_check, galois_lemma_suite, EquivalenceRecord, GaloisClass, LemmaSubject};
use pgal_relation::CheckReport;
use pgal_transport::{counterexample_search, parse_rel_expr, transport, SearchBounds, TransportError};

use crate::doc::{parse_document, Command, VerifyArgs};
use crate::error::{CliError, Result};
use crate::load::{load, Limits, Loaded};
use crate::report::{Dump, Entry, RunReport};

/// Theorems accepted by `verify`.
pub const THEOREMS: &[&str] = &[
    "class_hierarchy",
    "galois_lemmas",
    "quotient_lemmas",
    "depfun_closure",
    "depfun_similarity",
    "functor_closure",
    "functor_similarity",
    "comp_closure",
    "comp_coincide",
    "comp_similarity",
    "commutation",
    "lifting_comparison",
];

/// Parses, loads and runs a document. Document-level failures become a
/// single ERROR entry for the pseudo-command `load`.
pub fn run_document(text: &str, limits: Limits) -> RunReport {
    run_document_timed(text, limits).0
}

/// As `run_document`, also returning the time spent on each command.
pub fn run_document_timed(text: &str, limits: Limits) -> (RunReport, Vec<Duration>) {
    let loaded = parse_document(text).and_then(|d| Ok((load(&d, limits)?, d.commands)));
    let (loaded, commands) = match loaded {
        Ok(x) => x,
        Err(e) => return (RunReport::new(vec![Entry::error(0, "load", "document", &e)]), vec![]),
    };
    let mut entries = Vec::with_capacity(commands.len());
    let mut times = Vec::with_capacity(commands.len());
    for (i, c) in commands.iter().enumerate() {
        let start = Instant::now();
        entries.push(run_command(&loaded, i, c));
        times.push(start.elapsed());
    }
    (RunReport::new(entries), times)
}

pub fn run_command(env: &Loaded, index: usize, c: &Command) -> Entry {
    let subject = subject(c);
    let out = match c {
        Command::Check { equivalence, class } => check(env, index, equivalence, class.as_deref()),
        Command::Transport { term, left, right } => run_transport(env, index, term, left, right),
        Command::Verify(args) => verify(env, args).map(|r| Entry::from_report(index, "verify", &subject, &r)),
        Command::Counterexample { claim, dropped, max_size, budget } => {
            let d = SearchBounds::default();
            let bounds = SearchBounds { max_size: max_size.unwrap_or(d.max_size), budget: budget.unwrap_or(d.budget) };
            counterexample_search(claim, dropped, bounds)
                .map(|r| Entry::from_report(index, "counterexample", &subject, &r))
                .map_err(CliError::from)
        }
    };
    out.unwrap_or_else(|e| Entry::error(index, c.name(), &subject, &e))
}

fn subject(c: &Command) -> String {
    match c {
        Command::Check { equivalence, .. } => equivalence.clone(),
        Command::Transport { term, .. } => term.clone(),
        Command::Counterexample { claim, .. } => claim.clone(),
        Command::Verify(a) => {
            let mut args: Vec<&str> = Vec::new();
            for s in [&a.equivalence, &a.quotient, &a.functor, &a.left2, &a.right2, &a.l2, &a.r2].into_iter().flatten() {
                args.push(s);
            }
            for v in [&a.equivalences, &a.quotients].into_iter().flatten() {
                args.extend(v.iter().map(String::as_str));
            }
            format!("{}({})", a.theorem, args.join(","))
        }
    }
}

fn check(env: &Loaded, index: usize, name: &str, class: Option<&str>) -> Result<Entry> {
    let class: GaloisClass = class.unwrap_or("per_equiv").parse()?;
    let r = galois_class_check(class, env.equivalence(name)?);
    Ok(Entry::from_report(index, "check", name, &r))
}

fn render_table(t: &pgal_value::FunTable) -> Vec<(String, String)> {
    t.graph().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

fn run_transport(env: &Loaded, index: usize, term: &str, l: &str, r: &str) -> Result<Entry> {
    let (le, re) = (parse_rel_expr(l)?, parse_rel_expr(r)?);
    match transport(&env.registry, term, &le, &re) {
        Ok(res) => {
            let report = CheckReport::all(
                "transport",
                vec![
                    res.synthesized.certificate().clone(),
                    res.in_dom.clone(),
                    res.relatedness.clone(),
                    res.similarity.clone(),
                ],
            );
            let table = res.term_out_table.as_ref().map(render_table).unwrap_or_default();
            let shown = if table.is_empty() {
                res.term_out.to_string()
            } else {
                let parts: Vec<String> = table.iter().map(|(a, b)| format!("{a}->{b}")).collect();
                format!("{{{}}}", parts.join(","))
            };
            let mut e = Entry::from_report(index, "transport", term, &report);
            if report.verdict() {
                e.property = res.relatedness.property.clone();
                e.detail = Some(format!("out={shown}"));
            }
            e.dump = Some(Dump { term_out: res.term_out.to_string(), table });
            Ok(e)
        }
        Err(err) => {
            let mut e = match err.report() {
                Some(rep) => Entry::from_report(index, "transport", term, rep),
                None => return Err(annotate(env, err)),
            };
            if let TransportError::Rejected { name, .. } = &err {
                e.detail = Some(format!("equivalence {name} rejected"));
            }
            Ok(e)
        }
    }
}

/// Unresolved equivalences that were declared but refused get a clearer message.
fn annotate(env: &Loaded, err: TransportError) -> CliError {
    if let TransportError::Unresolved { name, .. } | TransportError::UnknownId { name, .. } = &err {
        if let Some(rep) = env.rejected.get(name) {
            return CliError::Usage(format!("{err}; declared but not a PER equivalence: {rep}"));
        }
    }
    err.into()
}

fn need<'a, T>(v: &'a Option<T>, theorem: &str, field: &str) -> Result<&'a T> {
    v.as_ref().ok_or_else(|| CliError::Usage(format!("verify {theorem} needs `{field}`")))
}

fn pair<'a>(v: &'a Option<Vec<String>>, theorem: &str, field: &str) -> Result<(&'a str, &'a str)> {
    match need(v, theorem, field)?.as_slice() {
        [a, b] => Ok((a, b)),
        other => Err(CliError::Usage(format!("verify {theorem} needs two {field}, got {}", other.len()))),
    }
}

fn star_class(a: &VerifyArgs, default: GaloisClass) -> Result<GaloisClass> {
    Ok(match &a.star {
        Some(s) => s.parse()?,
        None => default,
    })
}

fn functor(env: &Loaded, name: &str) -> Result<FunctorDef> {
    if let Ok(f) = env.functor(name) {
        return Ok(f.clone());
    }
    let resolve = |n: &str| env.carriers.get(n).cloned();
    builtin_functor(name, env.limits.list_bound, &resolve).map_err(|_| CliError::Unresolved { kind: "functor", name: name.into() })
}

fn components(env: &Loaded, a: &VerifyArgs) -> Result<Vec<EquivalenceRecord>> {
    need(&a.equivalences, &a.theorem, "equivalences")?
        .iter()
        .map(|n| env.equivalence(n).cloned())
        .collect()
}

fn depfun_input(env: &Loaded, a: &VerifyArgs) -> Result<DepFunClosureInput> {
    let t = &a.theorem;
    Ok(DepFunClosureInput::new(
        env.equivalence(need(&a.equivalence, t, "equivalence")?)?.clone(),
        env.dep_relation(need(&a.left2, t, "L2")?)?.clone(),
        env.dep_relation(need(&a.right2, t, "R2")?)?.clone(),
        env.dep_function(need(&a.l2, t, "l2")?)?.clone(),
        env.dep_function(need(&a.r2, t, "r2")?)?.clone(),
        env.limits.cap,
    )?)
}

fn composition(env: &Loaded, a: &VerifyArgs) -> Result<CompositionInput> {
    let (x, y) = pair(&a.equivalences, &a.theorem, "equivalences")?;
    Ok(CompositionInput::new(env.equivalence(x)?.clone(), env.equivalence(y)?.clone())?)
}

/// `strong ⟹ weak` along the class hierarchy; fails only if an implication
/// is violated. The detail lists the classes that hold.
pub fn class_hierarchy(e: &EquivalenceRecord) -> CheckReport {
    use GaloisClass::*;
    let holds = |c| galois_class_check(c, e).verdict();
    let chain = [
        (PerEquiv, GaloisEquiv),
        (PreEquiv, GaloisEquiv),
        (GaloisEquiv, Connection),
        (Connection, GaloisProp),
        (GaloisProp, HalfLeft),
        (GaloisProp, HalfRight),
    ];
    let subs = chain
        .iter()
        .map(|&(s, w)| CheckReport::from_bool(format!("{s}_implies_{w}"), !holds(s) || holds(w)))
        .collect();
    let held: Vec<&str> = GaloisClass::ALL.iter().filter(|&&c| holds(c)).map(|c| c.name()).collect();
    CheckReport::all("class_hierarchy", subs).with_detail(format!("holds=[{}]", held.join(",")))
}

fn verify(env: &Loaded, a: &VerifyArgs) -> Result<CheckReport> {
    let t = a.theorem.as_str();
    Ok(match t {
        "class_hierarchy" => class_hierarchy(env.equivalence(need(&a.equivalence, t, "equivalence")?)?),
        "galois_lemmas" => {
            galois_lemma_suite(LemmaSubject::Record(env.equivalence(need(&a.equivalence, t, "equivalence")?)?))
        }
        "quotient_lemmas" => galois_lemma_suite(LemmaSubject::Quotient(env.quotient(need(&a.quotient, t, "quotient")?)?)),
        "depfun_closure" => verify_closure_theorem(&depfun_input(env, a)?, star_class(a, GaloisClass::PerEquiv)?)?,
        "depfun_similarity" => {
            let input = depfun_input(env, a)?;
            let out = build_dep_fun_closure(&input)?;
            let variant = match a.star.as_deref() {
                None | Some("pre_equiv") => SimilarityVariant::PreEquiv,
                Some("connection") => SimilarityVariant::Connection,
                Some(s) => return Err(CliError::Usage(format!("unknown similarity variant {s:?}"))),
            };
            similarity_check(&input, &out, variant)
        }
        "functor_closure" => {
            let f = functor(env, need(&a.functor, t, "functor")?)?;
            verify_functor_theorem(&f, &components(env, a)?, star_class(a, GaloisClass::PerEquiv)?, env.limits.cap)?
        }
        "functor_similarity" => {
            let f = functor(env, need(&a.functor, t, "functor")?)?;
            functor_similarity_check(&f, &components(env, a)?, env.limits.cap)?
        }
        "comp_closure" => {
            let star = match a.star.as_deref() {
                None | Some("per_equiv") => CompStar::PerEquiv,
                Some("pre_equiv") => CompStar::PreEquiv,
                Some("connection") | Some("galois_connection") => CompStar::Connection,
                Some(s) => return Err(CliError::Usage(format!("unknown composition class {s:?}"))),
            };
            verify_comp_theorem(&composition(env, a)?, star)?
        }
        "comp_coincide" => verify_comp_coincide(&composition(env, a)?, star_class(a, GaloisClass::GaloisEquiv)?)?,
        "comp_similarity" => {
            let variant = match a.star.as_deref() {
                None | Some("pre_equiv") => CompVariant::PreEquiv,
                Some("connection") => CompVariant::Connection,
                Some(s) => return Err(CliError::Usage(format!("unknown similarity variant {s:?}"))),
            };
            comp_similarity_check(&composition(env, a)?, variant)?
        }
        "commutation" => {
            let c = composition(env, a)?;
            commutation_check(c.e1.right(), c.e2.left())?
        }
        "lifting_comparison" => {
            let (x, y) = pair(&a.quotients, t, "quotients")?;
            lifting_comparison_check(env.quotient(x)?, env.quotient(y)?)?
        }
        _ => return Err(CliError::Usage(format!("unknown theorem {t:?}; expected one of {}", THEOREMS.join(", ")))),
    })
}
