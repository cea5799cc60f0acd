//! Budgeted counterexample searches: additivity failures on a given
//! capacity, and comonotone pairs separating the pan-integral from the
//! Choquet integral's comonotonic additivity.

use crate::capacity::Capacity;
use crate::choquet::choquet_pos;
use crate::error::Result;
use crate::function::RealFunction;
use crate::generate;
use crate::pan::{pan_pos, pan_signed};
use crate::space::FiniteSpace;
use crate::value::{Mode, Value};

/// A found violation of pan(f + g) = pan(f) + pan(g).
#[derive(Clone, Debug)]
pub struct SearchWitness {
    pub f: RealFunction,
    pub g: RealFunction,
    /// pan(f + g)
    pub lhs: Value,
    /// pan(f) + pan(g)
    pub rhs: Value,
}

/// Search for an additivity counterexample on `mu`. Structured candidates
/// come first (indicator pairs; in signed mode, pairs of two-valued signed
/// spikes), then seeded random pairs until the budget runs out.
pub fn find_additivity_counterexample(
    mu: &Capacity,
    budget: u64,
    seed: u64,
    signed: bool,
) -> Result<Option<SearchWitness>> {
    let mode = mu.mode();
    let space = mu.space().clone();
    let mut spent = 0u64;

    let try_pair = |f: &RealFunction, g: &RealFunction| -> Result<Option<SearchWitness>> {
        let sum = f.add(g)?;
        let (lhs, int_f, int_g) = if signed {
            (
                pan_signed(&sum, mu)?.value,
                pan_signed(f, mu)?.value,
                pan_signed(g, mu)?.value,
            )
        } else {
            (
                pan_pos(&sum, mu)?.value,
                pan_pos(f, mu)?.value,
                pan_pos(g, mu)?.value,
            )
        };
        let rhs = &int_f + &int_g;
        if lhs.close_to(&rhs) {
            Ok(None)
        } else {
            Ok(Some(SearchWitness {
                f: f.clone(),
                g: g.clone(),
                lhs,
                rhs,
            }))
        }
    };

    if !signed {
        // phase 1: all ordered indicator pairs, lexicographic
        'outer: for a in space.nonempty_subsets() {
            for b in space.nonempty_subsets() {
                if spent >= budget {
                    break 'outer;
                }
                spent += 1;
                let f = RealFunction::indicator(space.clone(), a, mode);
                let g = RealFunction::indicator(space.clone(), b, mode);
                if let Some(w) = try_pair(&f, &g)? {
                    return Ok(Some(w));
                }
            }
        }
    } else {
        // phase 1: pairs of signed spikes c*chi_a - d*chi_b on four distinct
        // points, coefficients in {1, 2}
        let coef = [Value::one(mode), Value::from_int(2, mode)];
        let n = space.n();
        'souter: for a1 in 0..n {
            for b1 in 0..n {
                for a2 in 0..n {
                    for b2 in 0..n {
                        let distinct = a1 != b1
                            && a2 != b2
                            && a1 != a2
                            && a1 != b2
                            && b1 != a2
                            && b1 != b2;
                        if !distinct {
                            continue;
                        }
                        for c1 in &coef {
                            for d1 in &coef {
                                for c2 in &coef {
                                    for d2 in &coef {
                                        if spent >= budget {
                                            break 'souter;
                                        }
                                        spent += 1;
                                        let f = spike(&space, a1, b1, c1, d1, mode);
                                        let g = spike(&space, a2, b2, c2, d2, mode);
                                        if let Some(w) = try_pair(&f, &g)? {
                                            return Ok(Some(w));
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    // phase 2: seeded random pairs
    let mut k = 0u64;
    while spent < budget {
        spent += 1;
        let (f, g) = if signed {
            (
                generate::gen_signed_function(&space, generate::derive_seed(seed, k, 0), mode),
                generate::gen_signed_function(&space, generate::derive_seed(seed, k, 1), mode),
            )
        } else {
            (
                generate::gen_nonneg_function(&space, generate::derive_seed(seed, k, 0), mode),
                generate::gen_nonneg_function(&space, generate::derive_seed(seed, k, 1), mode),
            )
        };
        if let Some(w) = try_pair(&f, &g)? {
            return Ok(Some(w));
        }
        k += 1;
    }
    Ok(None)
}

/// c * chi_{a} - d * chi_{b}.
fn spike(
    space: &FiniteSpace,
    a: usize,
    b: usize,
    c: &Value,
    d: &Value,
    mode: Mode,
) -> RealFunction {
    let values = (0..space.n())
        .map(|i| {
            if i == a {
                c.clone()
            } else if i == b {
                -d
            } else {
                Value::zero(mode)
            }
        })
        .collect();
    RealFunction::new(space.clone(), values).unwrap()
}

/// Search for comonotone nonnegative f, g with pan(f+g) != pan(f) + pan(g).
/// Every examined pair also cross-checks the Choquet integral's comonotonic
/// additivity, which must hold.
pub fn find_comonotone_counterexample(
    mu: &Capacity,
    budget: u64,
    seed: u64,
) -> Result<Option<SearchWitness>> {
    let mode = mu.mode();
    let space = mu.space().clone();
    let mut spent = 0u64;

    let try_pair = |f: &RealFunction, g: &RealFunction| -> Result<Option<SearchWitness>> {
        debug_assert!(comonotone(f, g));
        let sum = f.add(g)?;
        // cross-check: Choquet is comonotonically additive
        let cho_sum = choquet_pos(&sum, mu)?.value;
        let cho_parts = &choquet_pos(f, mu)?.value + &choquet_pos(g, mu)?.value;
        assert!(
            cho_sum.close_to(&cho_parts),
            "Choquet comonotonic additivity violated: {cho_sum} vs {cho_parts}"
        );
        let lhs = pan_pos(&sum, mu)?.value;
        let rhs = &pan_pos(f, mu)?.value + &pan_pos(g, mu)?.value;
        if lhs.close_to(&rhs) {
            Ok(None)
        } else {
            Ok(Some(SearchWitness {
                f: f.clone(),
                g: g.clone(),
                lhs,
                rhs,
            }))
        }
    };

    // phase 1: scaled nested indicator pairs (chi_A, chi_B with A inside B
    // are comonotone)
    let coef = [Value::one(mode), Value::from_int(2, mode)];
    'outer: for a in space.nonempty_subsets() {
        for b in space.nonempty_subsets() {
            if !a.is_subset_of(b) {
                continue;
            }
            for c in &coef {
                for d in &coef {
                    if spent >= budget {
                        break 'outer;
                    }
                    spent += 1;
                    let f = RealFunction::indicator(space.clone(), a, mode).scale(c);
                    let g = RealFunction::indicator(space.clone(), b, mode).scale(d);
                    if let Some(w) = try_pair(&f, &g)? {
                        return Ok(Some(w));
                    }
                }
            }
        }
    }

    // phase 2: random comonotone pairs: draw g and reorder its values to
    // follow f's ordering of the points
    let mut k = 0u64;
    while spent < budget {
        spent += 1;
        let f = generate::gen_nonneg_function(&space, generate::derive_seed(seed, k, 0), mode);
        let raw = generate::gen_nonneg_function(&space, generate::derive_seed(seed, k, 1), mode);
        let mut order: Vec<usize> = (0..space.n()).collect();
        order.sort_by(|&x, &y| f.value(x).total_cmp(f.value(y)).then(x.cmp(&y)));
        let mut draws: Vec<Value> = raw.values().to_vec();
        draws.sort_by(|x, y| x.total_cmp(y));
        let mut values = vec![Value::zero(mode); space.n()];
        for (rank, &point) in order.iter().enumerate() {
            values[point] = draws[rank].clone();
        }
        let g = RealFunction::new(space.clone(), values).unwrap();
        if let Some(w) = try_pair(&f, &g)? {
            return Ok(Some(w));
        }
        k += 1;
    }
    Ok(None)
}

/// No pair of points ordered oppositely by f and g.
pub fn comonotone(f: &RealFunction, g: &RealFunction) -> bool {
    let n = f.space().n();
    for x in 0..n {
        for y in 0..n {
            if f.value(x).total_cmp(f.value(y)) == std::cmp::Ordering::Less
                && g.value(x).total_cmp(g.value(y)) == std::cmp::Ordering::Greater
            {
                return false;
            }
        }
    }
    true
}

/// Drive the comonotone search across generated capacities of one family,
/// splitting the budget evenly; returns the first witness found with its
/// capacity.
pub fn find_comonotone_over_family(
    space: &FiniteSpace,
    family: generate::Family,
    budget: u64,
    seed: u64,
    mode: Mode,
) -> Result<Option<(Capacity, SearchWitness)>> {
    let capacities = 50u64;
    let per = (budget / capacities).max(1);
    for i in 0..capacities {
        let mu = generate::gen_capacity(space, generate::derive_seed(seed, i, 7), family, mode);
        if let Some(w) =
            find_comonotone_counterexample(&mu, per, generate::derive_seed(seed, i, 8))?
        {
            return Ok(Some((mu, w)));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{additive4_capacity, example_52_capacity};
    use crate::generate::Family;
    use crate::space::SubsetIndex;

    #[test]
    fn example_52_nonneg_violation_found_in_indicator_phase() {
        let mu = example_52_capacity(Mode::Exact);
        let w = find_additivity_counterexample(&mu, 10_000, 1, false)
            .unwrap()
            .expect("the golden capacity is not subadditive");
        // first violating indicator pair in lex order: chi_{x1}, chi_{x3}
        assert_eq!(w.f.positive_set(), SubsetIndex(0b0001));
        assert_eq!(w.g.positive_set(), SubsetIndex(0b0100));
        assert_eq!(w.lhs, Value::from_int(4, Mode::Exact));
        assert_eq!(w.rhs, Value::from_int(3, Mode::Exact));
        // the documented pair chi_{x3}, chi_{x4} violates as well: 4 vs 3.5
        let f = RealFunction::indicator(mu.space().clone(), SubsetIndex(0b0100), Mode::Exact);
        let g = RealFunction::indicator(mu.space().clone(), SubsetIndex(0b1000), Mode::Exact);
        let sum = pan_pos(&f.add(&g).unwrap(), &mu).unwrap().value;
        let parts = &pan_pos(&f, &mu).unwrap().value + &pan_pos(&g, &mu).unwrap().value;
        assert_eq!(sum, Value::from_int(4, Mode::Exact));
        assert_eq!(parts, Value::ratio(7, 2, Mode::Exact));
    }

    #[test]
    fn golden_signed_violation_is_a_spike_pair() {
        let mu = example_52_capacity(Mode::Exact);
        let w = find_additivity_counterexample(&mu, 10_000, 1, true)
            .unwrap()
            .expect("signed additivity fails on the golden capacity");
        // witness functions are spikes on disjoint point pairs
        assert!(w.f.positive_set().len() == 1 && w.f.negative_part().positive_set().len() == 1);
        assert!(w.g.positive_set().len() == 1 && w.g.negative_part().positive_set().len() == 1);
        assert!(!w.lhs.close_to(&w.rhs));
        // the canonical failing split: g = f restricted to {x1,x4},
        // h = f restricted to {x2,x3}: 0 < 0.5
        let f = crate::fixtures::example_52_f(Mode::Exact);
        let g = f.mask(SubsetIndex(0b1001));
        let h = f.mask(SubsetIndex(0b0110));
        let lhs = pan_signed(&g.add(&h).unwrap(), &mu).unwrap().value;
        let rhs = &pan_signed(&g, &mu).unwrap().value + &pan_signed(&h, &mu).unwrap().value;
        assert!(lhs.is_zero());
        assert_eq!(rhs, Value::ratio(1, 2, Mode::Exact));
    }

    #[test]
    fn additive_capacity_yields_no_witness() {
        let mu = additive4_capacity(Mode::Exact);
        assert!(find_additivity_counterexample(&mu, 500, 3, false)
            .unwrap()
            .is_none());
        assert!(find_additivity_counterexample(&mu, 500, 3, true)
            .unwrap()
            .is_none());
        assert!(find_comonotone_counterexample(&mu, 500, 3)
            .unwrap()
            .is_none());
        // zero budget finds nothing anywhere
        let ex = example_52_capacity(Mode::Exact);
        assert!(find_additivity_counterexample(&ex, 0, 3, false)
            .unwrap()
            .is_none());
    }

    #[test]
    fn rays_are_never_comonotone_witnesses() {
        // (f, c f) is comonotone and pan-additive by homogeneity
        let mu = example_52_capacity(Mode::Exact);
        let f = crate::fixtures::example_52_f(Mode::Exact).abs();
        let g = f.scale(&Value::from_int(3, Mode::Exact));
        assert!(comonotone(&f, &g));
        let lhs = pan_pos(&f.add(&g).unwrap(), &mu).unwrap().value;
        let rhs = &pan_pos(&f, &mu).unwrap().value + &pan_pos(&g, &mu).unwrap().value;
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn comonotone_search_finds_witness_on_monotone_random() {
        let space = FiniteSpace::of_size(4).unwrap();
        let found = find_comonotone_over_family(&space, Family::MonotoneRandom, 10_000, 1, Mode::Exact)
            .unwrap();
        let (mu, w) = found.expect("pan lacks comonotonic additivity");
        assert!(comonotone(&w.f, &w.g));
        // re-run the witness standalone
        let lhs = pan_pos(&w.f.add(&w.g).unwrap(), &mu).unwrap().value;
        assert_eq!(lhs, w.lhs);
        assert!(!w.lhs.close_to(&w.rhs));
    }
}
