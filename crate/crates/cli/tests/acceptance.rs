//! End-to-end acceptance criteria. Each criterion prints one PASS or FAIL
//! line; the test fails if any criterion fails or the run takes too long.
//!
//! The lines go straight to stdout, so they show even when output is
//! captured.

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use pgal_cli::{load, parse_document, parse_report, run_file, Limits, Loaded, Status};
use pgal_compose::{
    build_composition, comp_similarity_check, lifting_comparison_check, verify_comp_coincide,
    verify_comp_theorem, CompStar, CompositionInput,
};
use pgal_fixtures as fx;
use pgal_fixtures::random::{any_record, random_per_equiv, random_record, seeded, small_carrier, Flavour};
use pgal_functor::{functor_similarity_check, verify_functor_theorem, FunctorDef};
use pgal_funrel::examples::{identity_b2, lifted_e, subtraction_inner};
use pgal_funrel::random::random_closure_input;
use pgal_funrel::{build_dep_fun_closure, similarity_check, verify_closure_theorem};
use pgal_galois::{galois_class_check, galois_lemma_suite, EquivalenceRecord, GaloisClass, LemmaSubject, PartialQuotient};
use pgal_relation::{CheckReport, Outcome, Rel};
use pgal_transport::{
    counterexample_search, parse_rel_expr, subtraction_exprs, subtraction_registry, transport, Registry,
    SearchBounds, TransportError, NOTHING,
};
use pgal_value::{Carrier, FunTable, Value};
use rand::Rng;

const CAP: usize = 4096;
const SWEEP: u64 = 200;
const TIME_LIMIT: Duration = Duration::from_secs(60);

type Verdict = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn iv(i: i64) -> Value {
    Value::Int(i)
}

fn expr(s: &str) -> pgal_transport::RelExpr {
    parse_rel_expr(s).unwrap()
}

fn not_fail(what: &str, r: &CheckReport) -> Result<(), String> {
    ensure!(r.outcome != Outcome::Fail, "{what}: {:?}", r.first_failure().map(ToString::to_string));
    Ok(())
}

fn holds(class: GaloisClass, e: &EquivalenceRecord) -> bool {
    galois_class_check(class, e).verdict()
}

// 1 -------------------------------------------------------------------------

/// Implications between the classes, stronger first.
const IMPLIES: &[(GaloisClass, GaloisClass)] = &[
    (GaloisClass::PerEquiv, GaloisClass::PreEquiv),
    (GaloisClass::PreEquiv, GaloisClass::GaloisEquiv),
    (GaloisClass::PreEquiv, GaloisClass::OrderEquiv),
    (GaloisClass::GaloisEquiv, GaloisClass::Connection),
    (GaloisClass::Connection, GaloisClass::GaloisProp),
    (GaloisClass::GaloisProp, GaloisClass::HalfLeft),
    (GaloisClass::GaloisProp, GaloisClass::HalfRight),
];

fn implications_hold(name: &str, e: &EquivalenceRecord) -> Result<(), String> {
    for &(a, b) in IMPLIES {
        ensure!(!holds(a, e) || holds(b, e), "{name}: {} without {}", a.name(), b.name());
    }
    Ok(())
}

fn class_hierarchy() -> Verdict {
    let inner = |i1| build_dep_fun_closure(&subtraction_inner(i1)).map(|o| o.record).map_err(|e| e.to_string());
    let full: Vec<(&str, EquivalenceRecord)> = vec![
        ("identity", fx::identity_record()),
        ("B", fx::record_b()),
        ("C", fx::record_c()),
        ("D small", fx::record_b_small()),
        ("D inner 0", inner(0)?),
        ("D inner 1", inner(1)?),
    ];
    for (name, e) in &full {
        for c in GaloisClass::ALL {
            ensure!(holds(c, e), "{name} is not {}", c.name());
        }
        ensure!(pgal_cli::class_hierarchy(e).verdict(), "{name}: hierarchy report");
    }
    // The synthesised guarded subtraction is certified without a record.
    let reg = subtraction_registry(2).map_err(|e| e.to_string())?;
    let (l, r) = subtraction_exprs(2, true);
    let syn = pgal_transport::elaborate(&reg, &expr(&l), &expr(&r)).map_err(|e| e.to_string())?;
    ensure!(syn.certificate().verdict(), "guarded subtraction certificate");

    // E: halving between ≤ on 0..3 and ≤ on 0..1, l = x/2, r = 2y+1.
    let e = fx::record_e();
    let connection = |x: i64, y: i64| (x <= 2 * y + 1) == (x / 2 <= y);
    let reverse = |x: i64, y: i64| (y <= x / 2) == (2 * y + 1 <= x);
    let is_conn = (0..4).all(|x| (0..2).all(|y| connection(x, y)));
    let is_rev = (0..4).all(|x| (0..2).all(|y| reverse(x, y)));
    ensure!(is_conn && !is_rev, "halving oracle");
    ensure!(holds(GaloisClass::Connection, &e) == is_conn, "E connection");
    ensure!(holds(GaloisClass::GaloisEquiv, &e) == is_rev, "E galois_equiv");
    for c in [GaloisClass::OrderEquiv, GaloisClass::PreEquiv, GaloisClass::PerEquiv] {
        ensure!(!holds(c, &e), "E is {}", c.name());
    }
    let rep = galois_class_check(GaloisClass::GaloisEquiv, &e);
    let leaf = rep.first_failure().ok_or("E galois_equiv has no failure")?;
    ensure!(leaf.property == "reverse_half_galois_left", "E fails {}", leaf.property);
    let w = leaf.witness.clone().ok_or("E failure without witness")?;
    let (a, b) = (fx::int(&w[0]), fx::int(&w[1]));
    ensure!(!reverse(a, b) || !reverse(b, a), "E witness ({a},{b}) is not a violation");

    implications_hold("E", &e)?;
    implications_hold("B broken", &fx::record_b_broken())?;
    let mut rng = seeded(1);
    for _ in 0..SWEEP {
        let (a, b) = (small_carrier("A", rng.gen_range(1..=4)), small_carrier("B", rng.gen_range(1..=4)));
        implications_hold("random", &any_record(&mut rng, &a, &b))?;
    }
    Ok(format!("{} fixtures at every class, E a connection only, witness ({a},{b})", full.len()))
}

// 2 -------------------------------------------------------------------------

fn lemma_suites() -> Verdict {
    let applicable: Vec<(&str, EquivalenceRecord)> = vec![
        ("identity", fx::identity_record()),
        ("B", fx::record_b()),
        ("C", fx::record_c()),
        ("D", fx::record_b_small()),
    ];
    for (name, e) in &applicable {
        let r = galois_lemma_suite(LemmaSubject::Record(e));
        ensure!(r.verdict(), "{name}: {r}");
        for sub in &r.sub_reports {
            ensure!(sub.outcome == Outcome::Pass, "{name}: {} is {}", sub.property, sub.outcome);
        }
    }
    for (name, e) in [("E", fx::record_e()), ("B broken", fx::record_b_broken())] {
        not_fail(name, &galois_lemma_suite(LemmaSubject::Record(&e)))?;
    }
    let quotients: Vec<(&str, PartialQuotient)> = vec![
        ("B", fx::quotient_b()),
        ("C", fx::quotient_c()),
        ("rename", fx::quotient_rename()),
        ("identity", PartialQuotient::identity(fx::nat3())),
    ];
    for (name, q) in &quotients {
        let r = galois_lemma_suite(LemmaSubject::Quotient(q));
        ensure!(r.verdict(), "quotient {name}: {r}");
    }
    // T of B is ZN: i ≥ 0 and n = i.
    let t = fx::quotient_b().t().clone();
    for i in -2..=2 {
        for n in 0..=2 {
            ensure!(t.holds(&iv(i), &iv(n)) == (i >= 0 && n == i), "ZN at ({i},{n})");
        }
    }
    let mut rng = seeded(2);
    for _ in 0..SWEEP {
        let (a, b) = (small_carrier("A", rng.gen_range(1..=4)), small_carrier("B", rng.gen_range(1..=4)));
        let e = any_record(&mut rng, &a, &b);
        not_fail("random record", &galois_lemma_suite(LemmaSubject::Record(&e)))?;
    }
    Ok(format!("{} records and {} quotients", applicable.len(), quotients.len()))
}

// 3 -------------------------------------------------------------------------

fn lists_registry() -> Result<Registry, TransportError> {
    Registry::default()
        .with_carrier("List3", fx::list3())?
        .with_carrier("FSet3", fx::fset3())?
        .with_carrier("Nat3", fx::nat3())?
        .with_relation("LFS_L", fx::lfs_l())?
        .register_equivalence("LFS", fx::record_c())?
        .with_function("max_list", fx::max_list())
}

fn max_of_set(s: &Value) -> Value {
    let items = s.cons_args("fset").expect("a finite set");
    iv(items.iter().map(fx::int).max().unwrap_or(0))
}

fn max_list_transport() -> Verdict {
    let reg = lists_registry().map_err(|e| e.to_string())?;
    let res = transport(&reg, "max_list", &expr("fun(_ _: atom LFS_L) -> eq Nat3"), &expr("fun(_ _: eq FSet3) -> eq Nat3"))
        .map_err(|e| e.to_string())?;
    let t = res.term_out_table.as_ref().ok_or("no table")?;
    ensure!(t.dom().len() == 8, "domain has {} sets", t.dom().len());
    for s in fx::fset3().elements() {
        ensure!(*t.at(s) == max_of_set(s), "max_fset {s} = {}", t.at(s));
    }
    ensure!(res.relatedness.verdict(), "relatedness: {}", res.relatedness);
    ensure!(res.similarity.verdict(), "similarity: {}", res.similarity);
    Ok("all 8 sets agree with the maximum".into())
}

// 4 -------------------------------------------------------------------------

fn subtraction() -> Verdict {
    let reg = subtraction_registry(2).map_err(|e| e.to_string())?;
    let (l, r) = subtraction_exprs(2, true);
    let res = transport(&reg, "minus", &expr(&l), &expr(&r)).map_err(|e| e.to_string())?;
    ensure!(res.relatedness.verdict() && res.similarity.verdict(), "guarded transport checks");
    let outer = res.term_out_table.ok_or("no table")?;
    let at = |n1: i64, n2: i64| {
        let inner = FunTable::from_value(fx::nat3(), fx::nat3(), outer.at(&iv(n1))).unwrap();
        fx::int(inner.at(&iv(n2)))
    };
    for n1 in 0..=2 {
        for n2 in 0..=2 {
            ensure!(at(n1, n2) == (n1 - n2).max(0), "{n1} - {n2} = {}", at(n1, n2));
        }
    }
    // ZN (i₁ − i₂) (n₁ − n₂) whenever i₁ ≥ i₂ and both arguments are ZN-related.
    for i1 in 0..=2 {
        for i2 in 0..=i1 {
            ensure!(at(i1, i2) == i1 - i2, "ZN fails at ({i1},{i2})");
        }
    }
    // Unguarded: the first pair of naturals whose integer difference leaves Zpos.
    let oracle = (-2..=2i64)
        .flat_map(|i1| (-2..=2i64).map(move |i2| (i1, i2)))
        .find(|&(i1, i2)| i1 >= 0 && i2 >= 0 && i1 - i2 < 0)
        .map(|(a, b)| vec![iv(a), iv(b)]);
    let (l, r) = subtraction_exprs(2, false);
    match transport(&reg, "minus", &expr(&l), &expr(&r)) {
        Err(TransportError::NotInDom { report, .. }) => {
            ensure!(report.witness == oracle, "in_dom witness {:?}, expected {oracle:?}", report.witness);
        }
        other => return Err(format!("unguarded transport: {:?}", other.map(|r| r.term_out))),
    }
    Ok("guarded output matches truncated subtraction, unguarded in_dom witness (0,1)".into())
}

// 5 -------------------------------------------------------------------------

fn index_registry() -> Result<Registry, TransportError> {
    Registry::default()
        .with_carrier("Nat3", fx::nat3())?
        .with_relation("S", fx::s_per())?
        .with_condition("in_bounds", fx::in_bounds(fx::list_e()))?
        .with_condition("in_bounds_arr", fx::in_bounds(fx::arr_e()))?
        .register_equivalence("IDX", fx::record_index())?
        .register_equivalence("S", fx::record_s())?
        .with_function("index", fx::list_index())
}

fn indexing() -> Verdict {
    let reg = index_registry().map_err(|e| e.to_string())?;
    let l = "fun(xs _: left IDX) -> fun(i _: eq Nat3 if in_bounds(xs,i)) -> atom S";
    let r = "fun(ys _: right IDX) -> fun(i _: eq Nat3 if in_bounds_arr(ys,i)) -> atom S";
    let res = transport(&reg, "index", &expr(l), &expr(r)).map_err(|e| e.to_string())?;
    ensure!(res.relatedness.verdict() && res.similarity.verdict(), "indexing transport checks");
    let t = res.term_out_table.as_ref().ok_or("no table")?;
    let mut checked = 0;
    for arr in fx::arr_e().elements() {
        let f = FunTable::from_value(fx::nat3(), fx::elems3(), t.at(arr)).unwrap();
        for (i, v) in arr.cons_args("iarr").ok_or("not an array")?.iter().enumerate() {
            let got = f.at(&iv(i as i64));
            ensure!(got == v, "{arr}[{i}] = {got}, expected {v}");
            checked += 1;
        }
    }
    ensure!(checked > 0, "no in-bounds index");
    let syn = &res.synthesized;
    let shifted = FunTable::from_fn(t.dom().clone(), t.cod().clone(), |arr| {
        let f = FunTable::from_value(fx::nat3(), fx::elems3(), t.at(arr)).unwrap();
        let len = arr.cons_args("iarr").unwrap().len() as i64;
        FunTable::from_fn(fx::nat3(), fx::elems3(), |i| {
            if fx::int(i) >= len {
                iv((fx::int(f.at(i)) + 1) % 3)
            } else {
                f.at(i).clone()
            }
        })
        .unwrap()
        .to_value()
    })
    .map_err(|e| e.to_string())?
    .to_value();
    ensure!(shifted != res.term_out, "nothing out of bounds");
    ensure!(syn.right_holds(&res.term_out, &shifted).map_err(|e| e.to_string())?, "out of bounds constrained");
    Ok(format!("{checked} in-bounds lookups, out-of-bounds results free"))
}

// 6 -------------------------------------------------------------------------

#[derive(Default)]
struct Tally {
    runs: usize,
    applicable: usize,
}

impl Tally {
    fn add(&mut self, what: &str, r: &CheckReport) -> Result<(), String> {
        not_fail(what, r)?;
        self.runs += 1;
        self.applicable += usize::from(r.outcome == Outcome::Pass);
        Ok(())
    }
}

fn functors() -> Vec<FunctorDef> {
    vec![
        FunctorDef::identity(),
        FunctorDef::option(),
        FunctorDef::list(2),
        FunctorDef::product(2).unwrap(),
        FunctorDef::sum(3).unwrap(),
        FunctorDef::constant(small_carrier("K", 2)),
        FunctorDef::apply(FunctorDef::option(), vec![FunctorDef::product(2).unwrap()]).unwrap(),
    ]
}

fn components(rng: &mut impl Rng, n: usize) -> Vec<EquivalenceRecord> {
    (0..n)
        .map(|i| {
            let a = small_carrier(&format!("A{i}"), rng.gen_range(1..=3));
            let b = small_carrier(&format!("B{i}"), rng.gen_range(1..=3));
            any_record(rng, &a, &b)
        })
        .collect()
}

fn composition_input(rng: &mut impl Rng) -> CompositionInput {
    let [a, b, c] = ["A", "B", "C"].map(|n| small_carrier(n, rng.gen_range(2..=4)));
    let e1 = if rng.gen_bool(0.7) { random_per_equiv(rng, &a, &b) } else { any_record(rng, &a, &b) };
    let e2 = match rng.gen_range(0..4) {
        0 => e1.flipped(),
        1 => EquivalenceRecord::identity(b.clone()),
        2 => random_record(rng, &b, &c, Flavour::Preorder),
        _ => random_per_equiv(rng, &b, &c),
    };
    CompositionInput::new(e1, e2).expect("shared middle carrier")
}

fn closure_sweeps() -> Verdict {
    let err = |e: pgal_value::Error| e.to_string();
    let mut dep = Tally::default();
    for seed in 0..SWEEP {
        let input = random_closure_input(&mut seeded(seed), CAP);
        for star in [GaloisClass::PreEquiv, GaloisClass::PerEquiv, GaloisClass::Connection] {
            dep.add(&format!("dep-fun {} seed {seed}", star.name()), &verify_closure_theorem(&input, star).map_err(err)?)?;
        }
    }
    let mut fun = Tally::default();
    let fs = functors();
    for f in &fs {
        for seed in 0..SWEEP {
            let mut rng = seeded(seed);
            let comps = components(&mut rng, f.arity());
            for star in [GaloisClass::Connection, GaloisClass::GaloisEquiv, GaloisClass::PreEquiv, GaloisClass::PerEquiv] {
                let r = verify_functor_theorem(f, &comps, star, CAP).map_err(err)?;
                fun.add(&format!("functor {f} {} seed {seed}", star.name()), &r)?;
            }
        }
    }
    let mut comp = Tally::default();
    for seed in 0..SWEEP {
        let input = composition_input(&mut seeded(seed));
        for star in [CompStar::PreEquiv, CompStar::PerEquiv, CompStar::Connection] {
            comp.add(&format!("composition {} seed {seed}", star.name()), &verify_comp_theorem(&input, star).map_err(err)?)?;
        }
        for star in [GaloisClass::Connection, GaloisClass::GaloisEquiv, GaloisClass::PreEquiv, GaloisClass::PerEquiv] {
            let r = verify_comp_coincide(&input, star).map_err(err)?;
            comp.add(&format!("coinciding {} seed {seed}", star.name()), &r)?;
        }
    }
    for (name, t) in [("dep-fun", &dep), ("functor", &fun), ("composition", &comp)] {
        ensure!(t.applicable > 0, "{name}: hypotheses never met");
    }
    Ok(format!(
        "no counterexample; applicable/run dep-fun {}/{} functor {}/{} ({} functors) composition {}/{}",
        dep.applicable, dep.runs, fun.applicable, fun.runs, fs.len(), comp.applicable, comp.runs
    ))
}

// 7 -------------------------------------------------------------------------

fn similarity() -> Verdict {
    let err = |e: pgal_value::Error| e.to_string();
    let fixtures: Vec<(FunctorDef, Vec<EquivalenceRecord>)> = vec![
        (FunctorDef::identity(), vec![fx::record_b()]),
        (FunctorDef::option(), vec![fx::record_b()]),
        (FunctorDef::list(2), vec![fx::record_b()]),
        (FunctorDef::product(2).unwrap(), vec![fx::record_b(), fx::record_rename()]),
        (FunctorDef::sum(2).unwrap(), vec![fx::record_b(), fx::record_e()]),
        (FunctorDef::option(), vec![fx::record_c()]),
    ];
    for (f, comps) in &fixtures {
        let r = functor_similarity_check(f, comps, CAP).map_err(err)?;
        ensure!(r.verdict(), "functor {f}: {r}");
    }
    let mut rng = seeded(7);
    for f in functors() {
        for _ in 0..SWEEP / 4 {
            let comps = components(&mut rng, f.arity());
            let r = functor_similarity_check(&f, &comps, CAP).map_err(err)?;
            ensure!(r.verdict(), "functor {f} on random components: {r}");
        }
    }

    let mut dep = Tally::default();
    let named = [("identity_b2", identity_b2()), ("lifted_e", lifted_e()), ("inner 0", subtraction_inner(0)), ("inner 1", subtraction_inner(1))];
    for (name, input) in &named {
        let out = build_dep_fun_closure(input).map_err(err)?;
        for v in [pgal_funrel::SimilarityVariant::PreEquiv, pgal_funrel::SimilarityVariant::Connection] {
            dep.add(name, &similarity_check(input, &out, v))?;
        }
    }
    for seed in 0..SWEEP {
        let input = random_closure_input(&mut seeded(seed), CAP);
        let out = build_dep_fun_closure(&input).map_err(err)?;
        for v in [pgal_funrel::SimilarityVariant::PreEquiv, pgal_funrel::SimilarityVariant::Connection] {
            dep.add(&format!("random dep-fun seed {seed}"), &similarity_check(&input, &out, v))?;
        }
    }

    let mut comp = Tally::default();
    let fset_id = EquivalenceRecord::identity(fx::fset3());
    let pairs = [
        ("B;rename", CompositionInput::new(fx::record_b(), fx::record_rename()).map_err(err)?),
        ("C;id", CompositionInput::new(fx::record_c(), fset_id).map_err(err)?),
    ];
    for (name, input) in &pairs {
        for v in [pgal_compose::SimilarityVariant::PreEquiv, pgal_compose::SimilarityVariant::Connection] {
            let r = comp_similarity_check(input, v).map_err(err)?;
            ensure!(r.outcome == Outcome::Pass, "{name}: {r}");
            comp.add(name, &r)?;
        }
    }
    for seed in 0..SWEEP {
        let input = composition_input(&mut seeded(seed));
        for v in [pgal_compose::SimilarityVariant::PreEquiv, pgal_compose::SimilarityVariant::Connection] {
            comp.add(&format!("random composition seed {seed}"), &comp_similarity_check(&input, v).map_err(err)?)?;
        }
    }
    ensure!(dep.applicable > 0 && comp.applicable > 0, "similarity hypotheses never met");
    Ok(format!(
        "functor exact on {} fixtures; dep-fun {}/{} and composition {}/{} applicable, none false",
        fixtures.len(),
        dep.applicable,
        dep.runs,
        comp.applicable,
        comp.runs
    ))
}

// 8 -------------------------------------------------------------------------

const COMP_DETAIL: &str = "E1: L={(0,0)} R={(0,0)(0,1)(1,0)(1,1)} l=[0] r=[0,0]; E2: L={(1,1)} R={(1,1)} l=[0,1] r=[0,1]";

fn counterexamples() -> Verdict {
    let err = |e: TransportError| e.to_string();
    let b = SearchBounds::default();
    let comp = counterexample_search("comp_galequiv", "commutation", b).map_err(err)?;
    ensure!(comp.is_fail(), "no composition counterexample: {comp}");
    ensure!(comp.detail.as_deref() == Some(COMP_DETAIL), "instance {:?}", comp.detail);
    ensure!(comp == counterexample_search("comp_galequiv", "commutation", b).map_err(err)?, "search not deterministic");

    // Rebuild the reported instance and check it independently.
    let c1 = Arc::new(Carrier::ints("C1", 0, 0));
    let c2 = Arc::new(Carrier::ints("C2", 0, 1));
    let fun = |dom: &Arc<Carrier>, cod: &Arc<Carrier>, idx: Vec<usize>| FunTable::from_indices(dom.clone(), cod.clone(), idx).unwrap();
    let e1 = EquivalenceRecord::new(
        Rel::from_index_pairs(c1.clone(), c1.clone(), [(0, 0)]),
        Rel::full(c2.clone(), c2.clone()),
        fun(&c1, &c2, vec![0]),
        fun(&c2, &c1, vec![0, 0]),
    )
    .map_err(|e| e.to_string())?;
    let one = Rel::from_index_pairs(c2.clone(), c2.clone(), [(1, 1)]);
    let e2 = EquivalenceRecord::new(one.clone(), one, FunTable::identity(c2.clone()), FunTable::identity(c2.clone()))
        .map_err(|e| e.to_string())?;
    ensure!(holds(GaloisClass::PerEquiv, &e1) && holds(GaloisClass::PerEquiv, &e2), "components are not PER equivalences");
    let input = CompositionInput::new(e1, e2).map_err(|e| e.to_string())?;
    let thm = verify_comp_theorem(&input, CompStar::PerEquiv).map_err(|e| e.to_string())?;
    ensure!(thm.find("commutation").is_some_and(CheckReport::is_fail), "commutation holds");
    let built = build_composition(&input).map_err(|e| e.to_string())?;
    let concl = galois_class_check(GaloisClass::PerEquiv, &built);
    ensure!(!concl.verdict(), "composition is a PER equivalence");
    let witness = concl.first_failure().and_then(|f| f.witness_text());
    ensure!(witness == comp.witness_text(), "witness {witness:?} vs {:?}", comp.witness_text());

    let sub = counterexample_search("subtraction_transport", "dependency_guard", b).map_err(err)?;
    ensure!(sub.is_fail() && sub.witness_text().as_deref() == Some("(0,1)"), "guard: {sub}");
    let sound = counterexample_search("subtraction_transport", NOTHING, b).map_err(err)?;
    ensure!(sound.verdict(), "guarded subtraction refuted: {sound}");
    let comp_sound = counterexample_search("comp_galequiv", NOTHING, SearchBounds { max_size: 2, budget: 3000 }).map_err(err)?;
    ensure!(comp_sound.verdict(), "composition refuted with all hypotheses: {comp_sound}");
    Ok(format!("commutation {}, guard (0,1)", comp.witness_text().unwrap_or_default()))
}

// 9 -------------------------------------------------------------------------

fn lifting() -> Verdict {
    let cases = [
        ("C,FSet3_id", fx::quotient_c(), PartialQuotient::identity(fx::fset3())),
        ("B,rename", fx::quotient_b(), fx::quotient_rename()),
    ];
    for (name, q1, q2) in &cases {
        let r = lifting_comparison_check(q1, q2).map_err(|e| e.to_string())?;
        ensure!(r.outcome == Outcome::Pass, "{name}: {r}");
        for claim in ["inverse_is_galois", "chain_is_galois_chain", "middle_commutes", "composition_left_is_chain"] {
            ensure!(r.find(claim).is_some_and(CheckReport::verdict), "{name}: {claim}");
        }
    }
    Ok("both pairs".into())
}

// 10 ------------------------------------------------------------------------

const DOCS: &[(&str, i32)] = &[
    ("lists_fsets", 0),
    ("subtraction", 0),
    ("subtraction_unguarded", 1),
    ("broken_retraction", 1),
    ("empty", 0),
];

fn doc_path(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(format!("{name}.json"))
}

fn pgal(args: &[&str]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_pgal")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().ok_or("killed")?))
}

fn loaded(name: &str) -> Result<Loaded, String> {
    let text = std::fs::read_to_string(doc_path(name)).map_err(|e| e.to_string())?;
    let doc = parse_document(&text).map_err(|e| e.to_string())?;
    load(&doc, Limits::default()).map_err(|e| e.to_string())
}

type Shape = (Vec<Value>, Vec<Value>, Vec<(Value, Value)>, Vec<(Value, Value)>, Vec<Value>, Vec<Value>);

/// A record by its values, ignoring carrier names.
fn shape(e: &EquivalenceRecord) -> Shape {
    let pairs = |r: &Rel| r.pairs().map(|(a, b)| (a.clone(), b.clone())).collect();
    (
        e.alpha().elements().to_vec(),
        e.beta().elements().to_vec(),
        pairs(e.left()),
        pairs(e.right()),
        e.l().outputs().to_vec(),
        e.r().outputs().to_vec(),
    )
}

fn declarations_match() -> Result<(), String> {
    let rec = |doc: &str, name: &str, expect: EquivalenceRecord| -> Result<(), String> {
        let got = loaded(doc)?.equivalence(name).map_err(|e| e.to_string())?.clone();
        ensure!(shape(&got) == shape(&expect), "{doc}: {name} differs from the fixture");
        Ok(())
    };
    rec("lists_fsets", "LFS", fx::record_c())?;
    rec("subtraction", "ZN", fx::record_b())?;
    rec("broken_retraction", "halving", fx::record_e())?;
    rec("broken_retraction", "zpos_bad", fx::record_b_broken())?;
    let quot = |doc: &str, name: &str, expect: PartialQuotient| -> Result<(), String> {
        let got = loaded(doc)?.quotient(name).map_err(|e| e.to_string())?.as_record();
        ensure!(shape(&got) == shape(&expect.as_record()), "{doc}: quotient {name} differs");
        Ok(())
    };
    quot("lists_fsets", "C", fx::quotient_c())?;
    quot("subtraction", "B", fx::quotient_b())?;
    quot("subtraction", "Rename", fx::quotient_rename())
}

fn cli_contract() -> Verdict {
    declarations_match()?;
    for &(name, code) in DOCS {
        let p = doc_path(name);
        let p = p.to_str().ok_or("path")?;
        for format in ["text", "structured"] {
            let a = pgal(&["--format", format, p])?;
            let b = pgal(&["--format", format, p])?;
            ensure!(a == b, "{name} {format}: output differs between runs");
            ensure!(a.1 == code, "{name}: exit {} expected {code}", a.1);
        }
        let (out, _) = pgal(&["--format", "structured", p])?;
        let report = parse_report(&String::from_utf8(out).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let failing = report.entries.iter().any(|e| matches!(e.status, Status::Fail | Status::Error));
        ensure!(failing == (code != 0), "{name}: exit code disagrees with entries");
        ensure!(report == run_file(Path::new(p), Limits::default()), "{name}: binary and library differ");
    }
    let (_, code) = pgal(&["/nonexistent/document.json"])?;
    ensure!(code == 1, "unreadable document exits {code}");
    Ok(format!("{} documents byte-identical across runs", DOCS.len()))
}

// ---------------------------------------------------------------------------

fn say(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [(&str, fn() -> Verdict); 10] = [
        ("class hierarchy on the fixtures", class_hierarchy),
        ("lemma suites", lemma_suites),
        ("max_list transports to max_fset", max_list_transport),
        ("guarded and unguarded subtraction", subtraction),
        ("guarded indexing", indexing),
        ("closure theorems on random inputs", closure_sweeps),
        ("similarity theorems", similarity),
        ("counterexample search", counterexamples),
        ("lifting comparison", lifting),
        ("CLI determinism and exit codes", cli_contract),
    ];
    let start = Instant::now();
    let mut failed = Vec::new();
    say(String::new());
    for (i, (title, f)) in criteria.into_iter().enumerate() {
        let t = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panicked: {}", msg.unwrap_or_default()))
        });
        let ms = t.elapsed().as_millis();
        match verdict {
            Ok(note) => say(format!("PASS {:>2} {title}: {note} [{ms} ms]", i + 1)),
            Err(why) => {
                say(format!("FAIL {:>2} {title}: {why} [{ms} ms]", i + 1));
                failed.push(i + 1);
            }
        }
    }
    let total = start.elapsed();
    say(format!("total {:.1} s", total.as_secs_f64()));
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
    assert!(total < TIME_LIMIT, "acceptance took {total:?}");
}
