//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measurements (run with `--nocapture` to see them).

use std::time::{Duration, Instant};

use panint::choquet::choquet_pos;
use panint::concave::concave_integral;
use panint::fixtures::{example_52_capacity, example_52_f};
use panint::function::RealFunction;
use panint::generate::{gen_capacity, gen_nonneg_function, gen_signed_function, Family};
use panint::json::report_to_json;
use panint::lp_space::{holder_check, metric_axioms_check, minkowski_check, NormParams};
use panint::pan::{pan_pos, pan_signed};
use panint::space::{FiniteSpace, SubsetIndex};
use panint::value::{Mode, Value};
use panint::verify::{
    check_additivity, check_disjoint_additivity, check_disjoint_superadditivity, check_fatou,
    check_levi, check_linearity, check_lp_duality, check_pan_equals_concave, check_pan_oracle,
    check_singleton_formula, find_additivity_counterexample, reproduce_example_52, SuiteConfig,
};

const SUBADDITIVE_MIX: [Family; 3] = [
    Family::ClippedAdditive,
    Family::MinOfAdditive,
    Family::ConcaveDistortion,
];

fn exact(k: i64) -> Value {
    Value::from_int(k, Mode::Exact)
}

fn pass(criterion: &str, detail: String) {
    println!("criterion {criterion}: PASS ({detail})");
}

#[test]
fn criterion_01_example_52_golden() {
    let start = Instant::now();
    let report = reproduce_example_52(Mode::Exact);
    let by_name = |name: &str| {
        report
            .checks
            .iter()
            .find(|c| c.name.starts_with(name))
            .unwrap()
    };
    assert_eq!(by_name("pan f+").got, exact(4));
    assert_eq!(by_name("pan f-").got, exact(4));
    assert_eq!(by_name("pan f ").got, exact(0));
    assert!(report.all_pass());
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass("01 golden integrals", format!("exact, {elapsed:?}"));
}

#[test]
fn criterion_02_masked_split_golden() {
    let start = Instant::now();
    let mu = example_52_capacity(Mode::Exact);
    let f = example_52_f(Mode::Exact);
    let g = f.mask(SubsetIndex(0b1001));
    let h = f.mask(SubsetIndex(0b0110));
    let int_g = pan_signed(&g, &mu).unwrap().value;
    let int_h = pan_signed(&h, &mu).unwrap().value;
    let int_sum = pan_signed(&g.add(&h).unwrap(), &mu).unwrap().value;
    assert_eq!(int_g, Value::ratio(1, 2, Mode::Exact));
    assert_eq!(int_h, exact(0));
    assert_eq!(int_sum, exact(0));
    // the failure of signed disjoint-support superadditivity: 0 < 0.5
    assert!(int_sum.total_cmp(&(&int_g + &int_h)) == std::cmp::Ordering::Less);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    pass("02 golden masked split", format!("0 < 0.5 confirmed, {elapsed:?}"));
}

#[test]
fn criterion_03_additivity_theorem() {
    let start = Instant::now();
    for mode in [Mode::Exact, Mode::Float] {
        let cfg = SuiteConfig::new(500, 31, 8, Family::ClippedAdditive, mode)
            .with_families(SUBADDITIVE_MIX.to_vec());
        let report = check_additivity(&cfg);
        assert_eq!(
            report.failures, 0,
            "additivity failures in {mode:?}: {:?}",
            report.witnesses.first().map(|w| &w.note)
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    pass(
        "03 additivity under subadditivity",
        format!("500 exact + 500 float trials, 0 failures, {elapsed:?}"),
    );
}

#[test]
fn criterion_04_hypothesis_necessity() {
    let mu = example_52_capacity(Mode::Exact);
    let witness = find_additivity_counterexample(&mu, 10_000, 1, false)
        .unwrap()
        .expect("non-subadditive capacity must yield an additivity violation");
    // re-confirm the witness through the DP directly
    let lhs = pan_pos(&witness.f.add(&witness.g).unwrap(), &mu).unwrap().value;
    let rhs = &pan_pos(&witness.f, &mu).unwrap().value + &pan_pos(&witness.g, &mu).unwrap().value;
    assert_eq!(lhs, witness.lhs);
    assert_eq!(rhs, witness.rhs);
    assert_ne!(lhs, rhs);
    // the documented instance: chi_{x3}, chi_{x4} gives 4 vs 3.5
    let f = RealFunction::indicator(mu.space().clone(), SubsetIndex(0b0100), Mode::Exact);
    let g = RealFunction::indicator(mu.space().clone(), SubsetIndex(0b1000), Mode::Exact);
    let sum = pan_pos(&f.add(&g).unwrap(), &mu).unwrap().value;
    let parts = &pan_pos(&f, &mu).unwrap().value + &pan_pos(&g, &mu).unwrap().value;
    assert_eq!(sum, exact(4));
    assert_eq!(parts, Value::ratio(7, 2, Mode::Exact));
    pass(
        "04 hypothesis necessity",
        format!("witness {} != {} within budget 10^4", witness.lhs, witness.rhs),
    );
}

#[test]
fn criterion_05_disjoint_support_lemmas() {
    // superadditivity on disjoint supports, arbitrary monotone capacities
    let cfg = SuiteConfig::new(500, 41, 8, Family::MonotoneRandom, Mode::Float);
    let superadd = check_disjoint_superadditivity(&cfg);
    assert_eq!(superadd.failures, 0, "{:?}", superadd.witnesses.first());
    // equality on disjoint supports under subadditive families
    let cfg = SuiteConfig::new(500, 42, 8, Family::ClippedAdditive, Mode::Float)
        .with_families(SUBADDITIVE_MIX.to_vec());
    let equal = check_disjoint_additivity(&cfg);
    assert_eq!(equal.failures, 0, "{:?}", equal.witnesses.first());
    pass(
        "05 disjoint-support lemmas",
        "500 superadditivity + 500 equality trials, 0 failures".to_string(),
    );
}

#[test]
fn criterion_06_oracle_equivalence() {
    // pan DP vs partition enumeration, exact, n <= 8
    let cfg = SuiteConfig::new(200, 61, 8, Family::MonotoneRandom, Mode::Exact)
        .with_families(Family::ALL.to_vec());
    let pan_rep = check_pan_oracle(&cfg);
    assert_eq!(pan_rep.failures, 0, "{:?}", pan_rep.witnesses.first());
    // concave simplex vs primal vertex enumeration, n <= 5, 1e-9 relative
    let cfg = SuiteConfig::new(100, 62, 5, Family::MonotoneRandom, Mode::Float)
        .with_families(Family::ALL.to_vec());
    let lp_rep = check_lp_duality(&cfg);
    assert_eq!(lp_rep.failures, 0, "{:?}", lp_rep.witnesses.first());
    pass(
        "06 oracle equivalence",
        "200 exact pan trials + 100 float LP trials, 0 failures".to_string(),
    );
}

#[test]
fn criterion_07_pan_concave_coincidence() {
    // equality on subadditive instances, n <= 6
    let cfg = SuiteConfig::new(200, 71, 6, Family::ClippedAdditive, Mode::Float)
        .with_families(SUBADDITIVE_MIX.to_vec());
    let coincide = check_pan_equals_concave(&cfg);
    assert_eq!(coincide.failures, 0, "{:?}", coincide.witnesses.first());
    // dominance on arbitrary monotone instances
    let cfg = SuiteConfig::new(500, 72, 7, Family::MonotoneRandom, Mode::Float);
    let dominate = check_pan_equals_concave(&cfg);
    assert_eq!(dominate.failures, 0, "{:?}", dominate.witnesses.first());
    // strict dominance happens: the golden instance separates all three
    let mu = example_52_capacity(Mode::Exact);
    let fplus = example_52_f(Mode::Exact).positive_part();
    let con = concave_integral(&fplus, &mu).unwrap().value;
    let pan = pan_pos(&fplus, &mu).unwrap().value;
    let cho = choquet_pos(&fplus, &mu).unwrap().value;
    assert_eq!((con.clone(), pan, cho), (exact(5), exact(4), exact(5)));
    pass(
        "07 pan/concave coincidence",
        "200 equality + 500 dominance trials, 0 failures".to_string(),
    );
}

#[test]
fn criterion_08_singleton_formula() {
    let cfg = SuiteConfig::new(300, 81, 8, Family::ClippedAdditive, Mode::Exact)
        .with_families(SUBADDITIVE_MIX.to_vec());
    let report = check_singleton_formula(&cfg);
    assert_eq!(report.failures, 0, "{:?}", report.witnesses.first());
    pass(
        "08 singleton formula",
        "300 exact subadditive trials, 0 failures".to_string(),
    );
}

#[test]
fn criterion_09_holder_minkowski_metric() {
    // Hoelder and Minkowski on 300 subadditive instances, p in {1, 1.5, 2, 3}
    let exponents = [1.0, 1.5, 2.0, 3.0];
    for trial in 0..300u64 {
        let n = 2 + (trial as usize % 5); // 2..=6
        let space = FiniteSpace::of_size(n).unwrap();
        let family = SUBADDITIVE_MIX[trial as usize % 3];
        let mu = gen_capacity(&space, 900 + trial, family, Mode::Float);
        let f = gen_signed_function(&space, 2 * trial, Mode::Float);
        let g = gen_signed_function(&space, 2 * trial + 1, Mode::Float);
        for p in exponents {
            let holder = holder_check(&f, &g, &mu, NormParams::new(p).unwrap()).unwrap();
            assert!(
                holder.holds && !holder.advisory,
                "Hoelder failed: trial {trial} p {p}: {} > {}",
                holder.lhs,
                holder.rhs
            );
            let minkowski = minkowski_check(&f, &g, &mu, p).unwrap();
            assert!(
                minkowski.holds && !minkowski.advisory,
                "Minkowski failed: trial {trial} p {p}: {} > {}",
                minkowski.lhs,
                minkowski.rhs
            );
        }
    }
    // metric axioms on 200 instances
    for trial in 0..200u64 {
        let n = 2 + (trial as usize % 5);
        let space = FiniteSpace::of_size(n).unwrap();
        let family = SUBADDITIVE_MIX[trial as usize % 3];
        let mu = gen_capacity(&space, 7_000 + trial, family, Mode::Float);
        let report = metric_axioms_check(&mu, 2.0, 3, 9_000 + trial).unwrap();
        assert_eq!(report.failures, 0, "{:?}", report.witnesses.first());
    }
    pass(
        "09 Hoelder/Minkowski/metric",
        "300 instances x 4 exponents + 200 metric instances, 0 failures".to_string(),
    );
}

#[test]
fn criterion_10_levi_fatou() {
    let cfg = SuiteConfig::new(200, 101, 8, Family::MonotoneRandom, Mode::Float)
        .with_families(Family::ALL.to_vec());
    let levi = check_levi(&cfg);
    assert_eq!(levi.failures, 0, "{:?}", levi.witnesses.first());
    let cfg = SuiteConfig::new(200, 102, 8, Family::MonotoneRandom, Mode::Float)
        .with_families(Family::ALL.to_vec());
    let fatou = check_fatou(&cfg);
    assert_eq!(fatou.failures, 0, "{:?}", fatou.witnesses.first());
    pass("10 Levi/Fatou", "200 + 200 trials, 0 failures".to_string());
}

#[test]
fn criterion_11_linearity() {
    let cfg = SuiteConfig::new(500, 111, 8, Family::ClippedAdditive, Mode::Float)
        .with_families(SUBADDITIVE_MIX.to_vec());
    let report = check_linearity(&cfg);
    assert_eq!(report.failures, 0, "{:?}", report.witnesses.first());
    // antisymmetry is exact in rational mode on any capacity
    for seed in 0..50 {
        let n = 2 + (seed as usize % 7);
        let space = FiniteSpace::of_size(n).unwrap();
        let mu = gen_capacity(&space, seed, Family::ALL[seed as usize % 5], Mode::Exact);
        let f = gen_signed_function(&space, seed ^ 0xdead, Mode::Exact);
        let v = pan_signed(&f, &mu).unwrap().value;
        let neg = pan_signed(&f.neg(), &mu).unwrap().value;
        assert_eq!(neg, -v, "antisymmetry seed {seed}");
    }
    pass(
        "11 full linearity",
        "500 float trials + 50 exact antisymmetry checks, 0 failures".to_string(),
    );
}

#[test]
fn criterion_12_determinism() {
    let run = || {
        let cfg = SuiteConfig::new(50, 121, 6, Family::MonotoneRandom, Mode::Float);
        serde_json::to_string(&report_to_json(&check_additivity(&cfg))).unwrap()
    };
    let first = run();
    let second = run();
    assert_eq!(first, second, "same seed must give byte-identical JSON");
    // also across a suite that records witnesses
    let run_fixed = || {
        let cfg = SuiteConfig::new(40, 122, 4, Family::MonotoneRandom, Mode::Float)
            .with_fixed_capacity(example_52_capacity(Mode::Float));
        serde_json::to_string(&report_to_json(&check_additivity(&cfg))).unwrap()
    };
    let a = run_fixed();
    let b = run_fixed();
    assert_eq!(a, b);
    pass("12 determinism", "byte-identical reports on reruns".to_string());
}

// -- supporting checks the criteria reference indirectly ------------------

#[test]
fn supporting_ae_equality_and_nonneg_functions() {
    // a.e.-equality suite: null-additive sources, pairs equal off a null set
    let cfg = SuiteConfig::new(200, 131, 6, Family::Additive, Mode::Exact);
    let report = panint::verify::check_ae_equality(&cfg);
    assert_eq!(report.failures, 0, "{:?}", report.witnesses.first());
    // zero atoms in the function generator keep positive sets proper subsets
    let space = FiniteSpace::of_size(8).unwrap();
    let mut saw_zero = false;
    for seed in 0..50 {
        let f = gen_nonneg_function(&space, seed, Mode::Float);
        if f.positive_set() != space.full_set() {
            saw_zero = true;
        }
    }
    assert!(saw_zero);
}

#[test]
fn supporting_set_additivity_suite() {
    let cfg = SuiteConfig::new(300, 141, 7, Family::ClippedAdditive, Mode::Exact)
        .with_families(SUBADDITIVE_MIX.to_vec());
    let report = panint::verify::check_set_additivity(&cfg);
    assert_eq!(report.failures, 0, "{:?}", report.witnesses.first());
}

#[test]
fn supporting_suites_flag_hypothesis_violations() {
    // the additivity suite must distinguish hypothesis-satisfying from
    // hypothesis-violating capacities: on the golden capacity it fails
    let cfg = SuiteConfig::new(200, 151, 4, Family::MonotoneRandom, Mode::Float)
        .with_fixed_capacity(example_52_capacity(Mode::Float));
    let report = check_additivity(&cfg);
    assert!(
        report.failures > 0,
        "expected additivity violations on the non-subadditive golden capacity"
    );
    assert_eq!(report.failures as usize, report.witnesses.len());
    // a recorded witness re-evaluates to its violation exactly
    let w = &report.witnesses[0];
    let lhs = pan_pos(&w.functions[0].add(&w.functions[1]).unwrap(), &w.capacity)
        .unwrap()
        .value;
    assert_eq!(lhs, w.lhs);
}
