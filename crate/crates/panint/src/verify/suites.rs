//! The randomized theorem suites.

use super::{run_suite, SuiteConfig};
use crate::capacity::Capacity;
use crate::generate;
use crate::lp;
use crate::pan::{pan_on_set, pan_pos, pan_pos_oracle, pan_signed};
use crate::concave::concave_integral;
use crate::report::{VerificationReport, ViolationWitness};
use crate::space::SubsetIndex;
use crate::value::Value;

/// Additivity of the nonnegative pan-integral:
/// pan(f + g) = pan(f) + pan(g). A theorem for subadditive capacities; run
/// against a non-subadditive source to watch it fail.
pub fn check_additivity(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("additivity", cfg, 16, |trial, mu| {
        let space = mu.space();
        let f = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode);
        let g = generate::gen_nonneg_function(space, cfg.lane(trial, 3), cfg.mode);
        let lhs = pan_pos(&f.add(&g).unwrap(), mu).unwrap().value;
        let rhs = &pan_pos(&f, mu).unwrap().value + &pan_pos(&g, mu).unwrap().value;
        if lhs.close_to(&rhs) {
            vec![]
        } else {
            vec![ViolationWitness::new(
                trial,
                mu,
                &[&f, &g],
                lhs,
                rhs,
                "pan(f+g) != pan(f) + pan(g)",
            )]
        }
    })
}

/// Additivity over disjoint sets: integral over A u B splits into the two
/// set integrals (subadditive hypothesis).
pub fn check_set_additivity(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("set-additivity", cfg, 16, |trial, mu| {
        let space = mu.space();
        let f = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode);
        // random disjoint pair: per point, left / right / neither
        let mut rng_mask = cfg.lane(trial, 5);
        let mut a = 0u32;
        let mut b = 0u32;
        for i in 0..space.n() {
            match rng_mask % 3 {
                0 => a |= 1 << i,
                1 => b |= 1 << i,
                _ => {}
            }
            rng_mask /= 3;
        }
        let (a, b) = (SubsetIndex(a), SubsetIndex(b));
        let lhs = pan_on_set(&f, mu, a.union(b)).unwrap().value;
        let rhs =
            &pan_on_set(&f, mu, a).unwrap().value + &pan_on_set(&f, mu, b).unwrap().value;
        if lhs.close_to(&rhs) {
            vec![]
        } else {
            vec![ViolationWitness::new(
                trial,
                mu,
                &[&f],
                lhs,
                rhs,
                &format!("pan over {a} u {b} != sum of parts"),
            )]
        }
    })
}

/// Disjoint positive sets make the pan-integral superadditive for every
/// monotone capacity: pan(f + g) >= pan(f) + pan(g).
pub fn check_disjoint_superadditivity(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("disjoint-superadditivity", cfg, 16, |trial, mu| {
        let (f, g) = disjoint_pair(cfg, trial, mu);
        let lhs = pan_pos(&f.add(&g).unwrap(), mu).unwrap().value;
        let rhs = &pan_pos(&f, mu).unwrap().value + &pan_pos(&g, mu).unwrap().value;
        if lhs.ge_within(&rhs) {
            vec![]
        } else {
            vec![ViolationWitness::new(
                trial,
                mu,
                &[&f, &g],
                lhs,
                rhs,
                "pan(f+g) < pan(f) + pan(g) on disjoint supports",
            )]
        }
    })
}

/// Under subadditivity the disjoint-support inequality is an equality.
pub fn check_disjoint_additivity(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("disjoint-additivity", cfg, 16, |trial, mu| {
        let (f, g) = disjoint_pair(cfg, trial, mu);
        let lhs = pan_pos(&f.add(&g).unwrap(), mu).unwrap().value;
        let rhs = &pan_pos(&f, mu).unwrap().value + &pan_pos(&g, mu).unwrap().value;
        if lhs.close_to(&rhs) {
            vec![]
        } else {
            vec![ViolationWitness::new(
                trial,
                mu,
                &[&f, &g],
                lhs,
                rhs,
                "disjoint-support additivity failed",
            )]
        }
    })
}

fn disjoint_pair(
    cfg: &SuiteConfig,
    trial: u32,
    mu: &Capacity,
) -> (crate::function::RealFunction, crate::function::RealFunction) {
    let space = mu.space();
    let (left, right) = generate::gen_bipartition(space, cfg.lane(trial, 5));
    let f = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode).mask(left);
    let g = generate::gen_nonneg_function(space, cfg.lane(trial, 3), cfg.mode).mask(right);
    (f, g)
}

/// Full linearity of the signed pan-integral under subadditivity:
/// pan(a f + b g) = a pan(f) + b pan(g), plus |pan(f)| <= pan(|f|).
pub fn check_linearity(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("linearity", cfg, 16, |trial, mu| {
        let space = mu.space();
        let f = generate::gen_signed_function(space, cfg.lane(trial, 2), cfg.mode);
        let g = generate::gen_signed_function(space, cfg.lane(trial, 3), cfg.mode);
        let alpha = generate::gen_scalar(cfg.lane(trial, 4), cfg.mode);
        let beta = generate::gen_scalar(cfg.lane(trial, 6), cfg.mode);
        let combo = f.scale(&alpha).add(&g.scale(&beta)).unwrap();
        let lhs = pan_signed(&combo, mu).unwrap().value;
        let int_f = pan_signed(&f, mu).unwrap().value;
        let int_g = pan_signed(&g, mu).unwrap().value;
        let rhs = &(&alpha * &int_f) + &(&beta * &int_g);
        let mut out = Vec::new();
        if !lhs.close_to(&rhs) {
            out.push(ViolationWitness::new(
                trial,
                mu,
                &[&f, &g],
                lhs,
                rhs,
                &format!("pan({alpha} f + {beta} g) != {alpha} pan(f) + {beta} pan(g)"),
            ));
        }
        // triangle consequence of additivity
        let abs_bound = pan_pos(&f.abs(), mu).unwrap().value;
        if !abs_bound.ge_within(&int_f.abs()) {
            out.push(ViolationWitness::new(
                trial,
                mu,
                &[&f],
                int_f.abs(),
                abs_bound,
                "|pan(f)| > pan(|f|)",
            ));
        }
        out
    })
}

/// On a full power set with subadditive mu the pan-integral collapses to the
/// weighted singleton sum, and the minimal atoms are exactly the
/// positive-mass singletons.
pub fn check_singleton_formula(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("singleton-formula", cfg, 16, |trial, mu| {
        let space = mu.space();
        let f = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode);
        let lhs = pan_pos(&f, mu).unwrap().value;
        let rhs = (0..space.n()).fold(Value::zero(cfg.mode), |acc, i| {
            &acc + &(f.value(i) * mu.value(SubsetIndex::singleton(i)))
        });
        let mut out = Vec::new();
        if !lhs.close_to(&rhs) {
            out.push(ViolationWitness::new(
                trial,
                mu,
                &[&f],
                lhs,
                rhs,
                "pan(f) != sum f(x) mu({x})",
            ));
        }
        if mu.minimal_atoms().iter().any(|a| a.len() != 1) {
            out.push(ViolationWitness::new(
                trial,
                mu,
                &[&f],
                Value::zero(cfg.mode),
                Value::zero(cfg.mode),
                "non-singleton minimal atom under subadditivity",
            ));
        }
        out
    })
}

/// Null-additive capacities cannot tell apart functions agreeing off a null
/// set: their pan-integrals coincide.
pub fn check_ae_equality(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("ae-equality", cfg, 16, |trial, mu| {
        // post-filter the family: skip capacities that are not null-additive
        if !mu.is_null_additive().holds {
            return vec![];
        }
        let space = mu.space();
        let f = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode);
        // largest null union of null singletons; empty when mass is everywhere
        let mut null_mask = 0u32;
        for i in 0..space.n() {
            if mu.is_null(SubsetIndex::singleton(i)) {
                null_mask |= 1 << i;
            }
        }
        let null_set = SubsetIndex(null_mask);
        let null_set = if mu.is_null(null_set) {
            null_set
        } else {
            SubsetIndex::EMPTY
        };
        let noise = generate::gen_nonneg_function(space, cfg.lane(trial, 3), cfg.mode);
        let g = f
            .mask(null_set.complement_in(space.n()))
            .add(&noise.mask(null_set))
            .unwrap();
        let lhs = pan_pos(&f, mu).unwrap().value;
        let rhs = pan_pos(&g, mu).unwrap().value;
        if lhs.close_to(&rhs) {
            vec![]
        } else {
            vec![ViolationWitness::new(
                trial,
                mu,
                &[&f, &g],
                lhs,
                rhs,
                "pan differs across mu-a.e. equal functions",
            )]
        }
    })
}

/// Monotone convergence along f_k = f (1 - 2^-k): integrals are
/// nondecreasing and close the gap to pan(f) at the geometric rate.
pub fn check_levi(cfg: &SuiteConfig) -> VerificationReport {
    const K: u32 = 30;
    run_suite("levi", cfg, 16, |trial, mu| {
        let space = mu.space();
        let f = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode);
        let limit = pan_pos(&f, mu).unwrap().value;
        let mut prev = Value::zero(cfg.mode);
        for k in 1..=K {
            let factor = &Value::one(cfg.mode) - &Value::ratio(1, 1i64 << k, cfg.mode);
            let vk = pan_pos(&f.scale(&factor), mu).unwrap().value;
            if !vk.ge_within(&prev) {
                return vec![ViolationWitness::new(
                    trial,
                    mu,
                    &[&f],
                    vk,
                    prev,
                    &format!("pan(f_{k}) decreased"),
                )];
            }
            if k == K {
                let gap = (&limit - &vk).abs();
                let bound = &(&limit * &Value::ratio(2, 1i64 << K, cfg.mode))
                    + &Value::ratio(1, 1_000_000_000, cfg.mode);
                if gap.total_cmp(&bound) == std::cmp::Ordering::Greater {
                    return vec![ViolationWitness::new(
                        trial,
                        mu,
                        &[&f],
                        gap,
                        bound,
                        "limit gap exceeds geometric bound",
                    )];
                }
            }
            prev = vk;
        }
        vec![]
    })
}

/// Fatou along alternating sequences g, h, g, h, ...: the liminf is the
/// pointwise min, so pan(min(g,h)) <= min(pan(g), pan(h)).
pub fn check_fatou(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("fatou", cfg, 16, |trial, mu| {
        let space = mu.space();
        let g = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode);
        let h = generate::gen_nonneg_function(space, cfg.lane(trial, 3), cfg.mode);
        let lhs = pan_pos(&g.pointwise_min(&h).unwrap(), mu).unwrap().value;
        let rhs = pan_pos(&g, mu)
            .unwrap()
            .value
            .min_of(&pan_pos(&h, mu).unwrap().value);
        if rhs.ge_within(&lhs) {
            vec![]
        } else {
            vec![ViolationWitness::new(
                trial,
                mu,
                &[&g, &h],
                lhs,
                rhs,
                "pan(liminf) > liminf pan",
            )]
        }
    })
}

/// Pan/concave coincidence: equality under subadditive sources, dominance
/// (concave >= pan) for arbitrary monotone ones. The concave integral must
/// dominate the Choquet integral in both cases (level chains are feasible
/// combinations).
pub fn check_pan_equals_concave(cfg: &SuiteConfig) -> VerificationReport {
    let subadditive_source = cfg.fixed_capacity.is_none()
        && cfg.families.iter().all(|f| f.subadditive_by_construction());
    run_suite("pan-concave-coincidence", cfg, 16, |trial, mu| {
        let space = mu.space();
        let f = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode);
        let pan = pan_pos(&f, mu).unwrap().value;
        let con = concave_integral(&f, mu).unwrap().value;
        let cho = crate::choquet::choquet_pos(&f, mu).unwrap().value;
        let mut out = Vec::new();
        let pan_ok = if subadditive_source {
            con.close_to(&pan)
        } else {
            con.ge_within(&pan)
        };
        if !pan_ok {
            out.push(ViolationWitness::new(
                trial,
                mu,
                &[&f],
                con.clone(),
                pan,
                if subadditive_source {
                    "concave != pan under subadditivity"
                } else {
                    "concave < pan"
                },
            ));
        }
        if !con.ge_within(&cho) {
            out.push(ViolationWitness::new(
                trial,
                mu,
                &[&f],
                con,
                cho,
                "concave < choquet",
            ));
        }
        out
    })
}

/// Engine-versus-oracle equivalence for the pan DP (partition enumeration).
pub fn check_pan_oracle(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("pan-oracle-equivalence", cfg, 8, |trial, mu| {
        let space = mu.space();
        let f = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode);
        let dp = pan_pos(&f, mu).unwrap().value;
        let oracle = pan_pos_oracle(&f, mu).unwrap();
        if dp.close_to(&oracle) {
            vec![]
        } else {
            vec![ViolationWitness::new(
                trial,
                mu,
                &[&f],
                dp,
                oracle,
                "pan DP != partition enumeration",
            )]
        }
    })
}

/// LP duality: simplex value against the primal vertex-enumeration oracle,
/// dual feasibility, and complementary slackness on the oracle's support.
pub fn check_lp_duality(cfg: &SuiteConfig) -> VerificationReport {
    run_suite("lp-duality", cfg, 5, |trial, mu| {
        let space = mu.space();
        let f = generate::gen_nonneg_function(space, cfg.lane(trial, 2), cfg.mode);
        let sol = lp::solve_concave(&f, mu).unwrap();
        let (oracle, support) = lp::primal_enumeration_witness(&f, mu).unwrap();
        let mut out = Vec::new();
        if !sol.value.close_to(&oracle) {
            out.push(ViolationWitness::new(
                trial,
                mu,
                &[&f],
                sol.value.clone(),
                oracle,
                "simplex != enumeration oracle",
            ));
        }
        if !sol.dual.objective.close_to(&sol.value) {
            out.push(ViolationWitness::new(
                trial,
                mu,
                &[&f],
                sol.dual.objective.clone(),
                sol.value.clone(),
                "strong duality gap",
            ));
        }
        if !sol.dual.is_feasible(mu) {
            out.push(ViolationWitness::new(
                trial,
                mu,
                &[&f],
                Value::zero(cfg.mode),
                Value::zero(cfg.mode),
                "dual certificate infeasible",
            ));
        }
        for (s, _) in support {
            let slack = sol.dual.cover_slack(mu, s);
            if !Value::zero(cfg.mode).ge_within(&slack.abs()) {
                out.push(ViolationWitness::new(
                    trial,
                    mu,
                    &[&f],
                    slack,
                    Value::zero(cfg.mode),
                    &format!("cover constraint not tight at {s}"),
                ));
            }
        }
        out
    })
}
