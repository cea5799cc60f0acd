//! L^p machinery for the pan-integral: norms, the induced metric, and the
//! Hoelder / Minkowski / metric-axiom checks that back the function-space
//! results. The norm is ||f||_{mu,p} = (pan integral of |f|^p)^(1/p); the
//! inequalities are theorems under a subadditive mu, so the checks flag (or
//! reject) capacities violating the hypothesis.

use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::function::RealFunction;
use crate::generate;
use crate::pan::pan_pos;
use crate::report::{InequalityReport, VerificationReport, ViolationWitness};
use crate::value::Value;

/// A Hoelder exponent pair: 1/p + 1/q = 1, with q = infinity when p = 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NormParams {
    pub p: f64,
    pub q: ConjugateExponent,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ConjugateExponent {
    Finite(f64),
    Infinite,
}

impl NormParams {
    /// Derive q from p.
    pub fn new(p: f64) -> Result<Self> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::BadExponent(p));
        }
        let q = if p == 1.0 {
            ConjugateExponent::Infinite
        } else {
            ConjugateExponent::Finite(p / (p - 1.0))
        };
        Ok(NormParams { p, q })
    }

    /// Validate an explicit pair; the conjugacy identity must hold to 1e-12.
    pub fn pair(p: f64, q: f64) -> Result<Self> {
        if !(p >= 1.0) || !p.is_finite() {
            return Err(Error::BadExponent(p));
        }
        if !(q >= 1.0) || !q.is_finite() {
            return Err(Error::BadExponent(q));
        }
        if (1.0 / p + 1.0 / q - 1.0).abs() > 1e-12 {
            return Err(Error::Parse(format!(
                "exponents are not conjugate: 1/{p} + 1/{q} != 1"
            )));
        }
        Ok(NormParams {
            p,
            q: ConjugateExponent::Finite(q),
        })
    }
}

/// ||f||_{mu,p}: nonnegative, zero exactly when {f != 0} is mu-null.
/// Integer p keeps exact inputs exact up to the final root (which stays
/// exact for perfect powers); non-integer p forces float.
pub fn p_norm(f: &RealFunction, mu: &Capacity, p: f64) -> Result<Value> {
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::BadExponent(p));
    }
    let integral = pan_pos(&f.abs_pow(p), mu)?.value;
    if p == 1.0 {
        return Ok(integral);
    }
    if p.fract() == 0.0 && p <= u32::MAX as f64 {
        Ok(integral.root(p as u32))
    } else {
        Ok(integral.powf(1.0 / p))
    }
}

/// mu-essential supremum of |f|: the smallest bound holding off a null set.
pub fn ess_sup(f: &RealFunction, mu: &Capacity) -> Result<Value> {
    mu.check_space(f)?;
    let n = mu.n();
    let g = f.abs();
    let mut best: Option<Value> = None;
    for null_candidate in mu.space().subsets() {
        if !mu.is_null(null_candidate) {
            continue;
        }
        let mut sup = Value::zero(g.mode());
        for p in 0..n {
            if !null_candidate.contains(p) {
                sup = sup.max_of(g.value(p));
            }
        }
        best = Some(match best {
            None => sup,
            Some(b) => b.min_of(&sup),
        });
    }
    Ok(best.expect("the empty set is always null"))
}

/// rho(f, g) = ||f - g||_{mu,p}.
pub fn distance(f: &RealFunction, g: &RealFunction, mu: &Capacity, p: f64) -> Result<Value> {
    p_norm(&f.sub(g)?, mu, p)
}

/// Hoelder: ||f g||_1 <= ||f||_p ||g||_q. Computed for any capacity; the
/// result is flagged advisory when mu is not subadditive (the inequality is
/// only a theorem under that hypothesis).
pub fn holder_check(
    f: &RealFunction,
    g: &RealFunction,
    mu: &Capacity,
    params: NormParams,
) -> Result<InequalityReport> {
    let advisory = !mu.is_subadditive().holds;
    let lhs = p_norm(&f.mul(g)?, mu, 1.0)?;
    let rhs_f = p_norm(f, mu, params.p)?;
    let rhs_g = match params.q {
        ConjugateExponent::Finite(q) => p_norm(g, mu, q)?,
        ConjugateExponent::Infinite => ess_sup(g, mu)?,
    };
    Ok(InequalityReport::le(
        "holder",
        lhs,
        &rhs_f * &rhs_g,
        advisory,
    ))
}

/// Minkowski: ||f + g||_p <= ||f||_p + ||g||_p, advisory off-hypothesis.
pub fn minkowski_check(
    f: &RealFunction,
    g: &RealFunction,
    mu: &Capacity,
    p: f64,
) -> Result<InequalityReport> {
    let advisory = !mu.is_subadditive().holds;
    let lhs = p_norm(&f.add(g)?, mu, p)?;
    let rhs = &p_norm(f, mu, p)? + &p_norm(g, mu, p)?;
    Ok(InequalityReport::le("minkowski", lhs, rhs, advisory))
}

/// Randomized check of the metric axioms for rho on random triples:
/// symmetry, identity (rho = 0 iff f = g off a mu-null set), and the
/// triangle inequality. Subadditivity is a hard requirement here.
pub fn metric_axioms_check(
    mu: &Capacity,
    p: f64,
    trials: u32,
    seed: u64,
) -> Result<VerificationReport> {
    if !mu.is_subadditive().holds {
        return Err(Error::NotSubadditive);
    }
    if !(p >= 1.0) || !p.is_finite() {
        return Err(Error::BadExponent(p));
    }
    let mode = mu.mode();
    let space = mu.space().clone();
    let mut witnesses = Vec::new();
    for trial in 0..trials {
        let s = |lane: u64| generate::derive_seed(seed, trial as u64, lane);
        let f = generate::gen_signed_function(&space, s(0), mode);
        let g = generate::gen_signed_function(&space, s(1), mode);
        let h = generate::gen_signed_function(&space, s(2), mode);
        let fg = distance(&f, &g, mu, p)?;
        let gf = distance(&g, &f, mu, p)?;
        if fg != gf {
            witnesses.push(ViolationWitness::new(
                trial,
                mu,
                &[&f, &g],
                fg.clone(),
                gf,
                "symmetry",
            ));
            continue;
        }
        // identity: rho(f,g) = 0 iff {f != g} is null
        let differs = f.differs_from(&g)?;
        let null_diff = mu.is_null(differs);
        let zero_dist = match &fg {
            Value::Exact(_) => fg.is_zero(),
            Value::Float(x) => x.abs() <= 1e-9,
        };
        if null_diff != zero_dist {
            witnesses.push(ViolationWitness::new(
                trial,
                mu,
                &[&f, &g],
                fg.clone(),
                Value::zero(mode),
                "identity",
            ));
            continue;
        }
        // identity, constructed side: forcing g = f off a null set gives rho = 0
        let nulls = largest_null_set(mu);
        if !nulls.is_empty() {
            let g2 = f
                .mask(nulls.complement_in(space.n()))
                .add(&g.mask(nulls))?;
            let d = distance(&f, &g2, mu, p)?;
            let zero = match &d {
                Value::Exact(_) => d.is_zero(),
                Value::Float(x) => x.abs() <= 1e-9,
            };
            if !zero {
                witnesses.push(ViolationWitness::new(
                    trial,
                    mu,
                    &[&f, &g2],
                    d,
                    Value::zero(mode),
                    "identity-null-set",
                ));
                continue;
            }
        }
        // triangle
        let fh = distance(&f, &h, mu, p)?;
        let sum = &fg + &distance(&g, &h, mu, p)?;
        if !sum.ge_within(&fh) {
            witnesses.push(ViolationWitness::new(
                trial, mu, &[&f, &g, &h], fh, sum, "triangle",
            ));
        }
    }
    Ok(VerificationReport::new("metric-axioms", trials, seed, mode).with_witnesses(witnesses))
}

/// Union of all mu-null singletons; null for subadditive mu.
fn largest_null_set(mu: &Capacity) -> crate::space::SubsetIndex {
    let mut mask = 0u32;
    for i in 0..mu.n() {
        if mu.is_null(crate::space::SubsetIndex::singleton(i)) {
            mask |= 1 << i;
        }
    }
    let set = crate::space::SubsetIndex(mask);
    if mu.is_null(set) {
        set
    } else {
        crate::space::SubsetIndex::EMPTY
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::capacity::validate_capacity;
    use crate::fixtures::{additive4_capacity, example_52_capacity, example_52_f};
    use crate::generate::{gen_capacity, Family};
    use crate::space::{FiniteSpace, SubsetIndex};
    use crate::value::Mode;

    fn exact(k: i64) -> Value {
        Value::from_int(k, Mode::Exact)
    }

    #[test]
    fn norm_golden_values() {
        let mu = example_52_capacity(Mode::Exact);
        let f = example_52_f(Mode::Exact);
        // ||f||_1 = pan(|f|) = pan((2,2,1,1)) = 8: block {x1},{x2},{x3,x4}
        assert_eq!(p_norm(&f, &mu, 1.0).unwrap(), exact(8));
        // zero function has zero norm
        let z = RealFunction::zero(mu.space().clone(), Mode::Exact);
        assert!(p_norm(&z, &mu, 2.0).unwrap().is_zero());
        // chi_X on this capacity: pan(chi_X) = 8 (best partition beats the
        // full block), so the 2-norm is sqrt(8)
        let one = RealFunction::indicator(mu.space().clone(), mu.space().full_set(), Mode::Exact);
        let got = p_norm(&one, &mu, 2.0).unwrap();
        assert!((got.to_f64() - 8f64.sqrt()).abs() < 1e-12);
        // ||chi_X||_p = mu(X)^(1/p) whenever no partition beats mu(X);
        // a perfect square stays exact
        let space = FiniteSpace::of_size(2).unwrap();
        let mu4 = validate_capacity(
            &space,
            &[
                (SubsetIndex(0b01), exact(1)),
                (SubsetIndex(0b10), exact(2)),
                (SubsetIndex(0b11), exact(4)),
            ],
        )
        .unwrap();
        let one2 = RealFunction::indicator(space, SubsetIndex(0b11), Mode::Exact);
        assert_eq!(p_norm(&one2, &mu4, 2.0).unwrap(), exact(2));
    }

    #[test]
    fn bad_exponent() {
        let mu = additive4_capacity(Mode::Exact);
        let f = example_52_f(Mode::Exact);
        assert!(matches!(
            p_norm(&f, &mu, 0.5),
            Err(Error::BadExponent(_))
        ));
        assert!(NormParams::new(0.9).is_err());
        assert!(NormParams::pair(2.0, 3.0).is_err());
        assert_eq!(
            NormParams::new(1.0).unwrap().q,
            ConjugateExponent::Infinite
        );
    }

    #[test]
    fn norm_homogeneity_and_monotonicity() {
        let mu = gen_capacity(
            &FiniteSpace::of_size(4).unwrap(),
            3,
            Family::ClippedAdditive,
            Mode::Exact,
        );
        let space = mu.space().clone();
        for seed in 0..10 {
            let f = generate::gen_signed_function(&space, seed, Mode::Exact);
            for p in [1.0, 2.0, 3.0] {
                let norm_f = p_norm(&f, &mu, p).unwrap();
                let scaled = p_norm(&f.scale(&exact(-3)), &mu, p).unwrap();
                let want = &exact(3) * &norm_f;
                assert!(
                    scaled.clone().into_mode(Mode::Float).close_to(&want.clone().into_mode(Mode::Float)),
                    "homogeneity p={p}"
                );
                // |f| <= |f| + |g| pointwise implies norm monotonicity
                let g = generate::gen_nonneg_function(&space, seed ^ 3, Mode::Exact);
                let bigger = f.abs().add(&g).unwrap();
                let norm_b = p_norm(&bigger, &mu, p).unwrap();
                assert!(norm_b.ge_within(&norm_f));
            }
        }
    }

    #[test]
    fn distance_axioms_basics() {
        let mu = additive4_capacity(Mode::Exact);
        let f = example_52_f(Mode::Exact);
        assert!(distance(&f, &f, &mu, 2.0).unwrap().is_zero());
        let g = f.neg();
        assert_eq!(
            distance(&f, &g, &mu, 1.0).unwrap(),
            distance(&g, &f, &mu, 1.0).unwrap()
        );
    }

    #[test]
    fn null_point_distance_is_zero() {
        // capacity with a zero-mass singleton: functions differing only
        // there are at distance zero
        let space = FiniteSpace::of_size(2).unwrap();
        let mu = validate_capacity(
            &space,
            &[
                (SubsetIndex(0b01), exact(0)),
                (SubsetIndex(0b10), exact(1)),
                (SubsetIndex(0b11), exact(1)),
            ],
        )
        .unwrap();
        assert!(mu.is_subadditive().holds);
        let f = RealFunction::new(space.clone(), vec![exact(5), exact(1)]).unwrap();
        let g = RealFunction::new(space, vec![exact(-7), exact(1)]).unwrap();
        assert!(distance(&f, &g, &mu, 2.0).unwrap().is_zero());
        assert_eq!(ess_sup(&f, &mu).unwrap(), exact(1));
    }

    #[test]
    fn holder_cauchy_schwarz_special_case() {
        // g = chi_X, p = q = 2: ||f||_1 <= ||f||_2 * mu(X)^(1/2)
        let mu = gen_capacity(
            &FiniteSpace::of_size(5).unwrap(),
            11,
            Family::ConcaveDistortion,
            Mode::Exact,
        );
        let space = mu.space().clone();
        let one = RealFunction::indicator(space.clone(), space.full_set(), Mode::Exact);
        for seed in 0..10 {
            let f = generate::gen_signed_function(&space, seed, Mode::Exact);
            let rep = holder_check(&f, &one, &mu, NormParams::new(2.0).unwrap()).unwrap();
            assert!(rep.holds && !rep.advisory, "seed {seed}");
        }
        // f = g = 0: 0 <= 0
        let z = RealFunction::zero(space.clone(), Mode::Exact);
        let rep = holder_check(&z, &z, &mu, NormParams::new(2.0).unwrap()).unwrap();
        assert!(rep.holds);
        assert!(rep.lhs.is_zero() && rep.rhs.is_zero());
    }

    #[test]
    fn holder_advisory_on_non_subadditive() {
        let mu = example_52_capacity(Mode::Exact);
        let f = example_52_f(Mode::Exact);
        let rep = holder_check(&f, &f, &mu, NormParams::new(2.0).unwrap()).unwrap();
        assert!(rep.advisory);
    }

    #[test]
    fn metric_requires_subadditivity() {
        let mu = example_52_capacity(Mode::Exact);
        assert_eq!(
            metric_axioms_check(&mu, 2.0, 5, 1).unwrap_err(),
            Error::NotSubadditive
        );
    }

    #[test]
    fn metric_axioms_hold_on_subadditive_instances() {
        let mu = gen_capacity(
            &FiniteSpace::of_size(4).unwrap(),
            5,
            Family::ClippedAdditive,
            Mode::Float,
        );
        let rep = metric_axioms_check(&mu, 2.0, 50, 7).unwrap();
        assert!(rep.passed(), "violations: {:?}", rep.witnesses.first());
    }

    #[test]
    fn cauchy_sequences_converge_to_their_limit() {
        // f_k = f * (1 - 2^-k) converges to f in rho
        let mu = gen_capacity(
            &FiniteSpace::of_size(4).unwrap(),
            9,
            Family::MinOfAdditive,
            Mode::Exact,
        );
        let f = generate::gen_signed_function(mu.space(), 2, Mode::Exact);
        let norm = p_norm(&f, &mu, 2.0).unwrap();
        let mut prev = None;
        for k in 1..=10u32 {
            let factor = &exact(1) - &Value::ratio(1, 1 << k, Mode::Exact);
            let fk = f.scale(&factor);
            let d = distance(&fk, &f, &mu, 2.0).unwrap();
            // rho(f_k, f) = 2^-k ||f||
            let want = &Value::ratio(1, 1 << k, Mode::Exact) * &norm;
            assert!(d
                .clone()
                .into_mode(Mode::Float)
                .close_to(&want.into_mode(Mode::Float)));
            if let Some(p) = prev {
                assert!(d.total_cmp(&p) != std::cmp::Ordering::Greater);
            }
            prev = Some(d);
        }
    }
}
