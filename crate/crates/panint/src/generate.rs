//! Seeded generators for capacities and test functions.
//!
//! Every generator draws integers on a 1/1000 grid from a ChaCha stream and
//! builds the table in exact arithmetic first, converting to the requested
//! mode at the end. That keeps the two modes in bit-for-bit agreement (the
//! float table is the rounded exact table) and makes every draw reproducible
//! from `(seed, family, space)` alone.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::function::RealFunction;
use crate::space::{FiniteSpace, SubsetIndex};
use crate::value::{Mode, Value};

/// Capacity families. The first four are subadditive by construction
/// (additive trivially; the others by envelope/concavity arguments noted on
/// each builder); `MonotoneRandom` is merely monotone and is the source of
/// counterexample instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Additive,
    ClippedAdditive,
    MinOfAdditive,
    ConcaveDistortion,
    MonotoneRandom,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Additive,
        Family::ClippedAdditive,
        Family::MinOfAdditive,
        Family::ConcaveDistortion,
        Family::MonotoneRandom,
    ];

    /// The three nontrivial subadditive families plus the additive one.
    pub fn subadditive_by_construction(self) -> bool {
        !matches!(self, Family::MonotoneRandom)
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Additive => "additive",
            Family::ClippedAdditive => "clipped-additive",
            Family::MinOfAdditive => "min-of-additive",
            Family::ConcaveDistortion => "concave-distortion",
            Family::MonotoneRandom => "monotone-random",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown capacity family `{s}`")))
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Mix a base seed with stream coordinates (splitmix64 finalizer), so suites
/// can derive independent per-trial streams.
pub fn derive_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut z = seed ^ a.wrapping_mul(0x9e3779b97f4a7c15) ^ b.wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Grid rational k/1000 with k in [lo, hi].
fn grid(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Value {
    let k = rng.random_range(lo..=hi);
    Value::ratio(k, 1000, Mode::Exact)
}

/// Random positive singleton masses in [0.1, 10].
fn positive_masses(rng: &mut ChaCha8Rng, n: usize) -> Vec<Value> {
    (0..n).map(|_| grid(rng, 100, 10_000)).collect()
}

/// Masses in [0.1, 10] with a 1-in-5 atom at zero; at least one positive.
fn masses_with_zeros(rng: &mut ChaCha8Rng, n: usize) -> Vec<Value> {
    let mut masses: Vec<Value> = (0..n)
        .map(|_| {
            if rng.random_range(0..5) == 0 {
                Value::zero(Mode::Exact)
            } else {
                grid(rng, 100, 10_000)
            }
        })
        .collect();
    if masses.iter().all(Value::is_zero) {
        masses[n - 1] = Value::one(Mode::Exact);
    }
    masses
}

fn additive_table(masses: &[Value], n: usize) -> Vec<Value> {
    (0..(1u32 << n))
        .map(|a| {
            SubsetIndex(a)
                .points()
                .fold(Value::zero(Mode::Exact), |acc, p| &acc + &masses[p])
        })
        .collect()
}

/// Deterministic random capacity from `(seed, family, space)`. The result
/// always validates; the subadditive families really are subadditive.
pub fn gen_capacity(space: &FiniteSpace, seed: u64, family: Family, mode: Mode) -> Capacity {
    let n = space.n();
    let mut rng = rng_for(derive_seed(seed, family as u64, n as u64));
    let exact = match family {
        Family::Additive => additive_table(&masses_with_zeros(&mut rng, n), n),
        Family::ClippedAdditive => {
            // min(nu(A), c): subadditive because min(a+b, c) <= min(a,c) + min(b,c)
            let table = additive_table(&positive_masses(&mut rng, n), n);
            let total = table[(1usize << n) - 1].clone();
            let cap = &total * &grid(&mut rng, 300, 900); // 30%..90% of nu(X)
            table.into_iter().map(|v| v.min_of(&cap)).collect()
        }
        Family::MinOfAdditive => {
            // Upper (max) envelope of two additive measures. The max envelope
            // is subadditive for every pair A, B; the lower (min) envelope is
            // only superadditive on disjoint sets, so the max is the side
            // that earns this family its place among the subadditive ones.
            let t1 = additive_table(&positive_masses(&mut rng, n), n);
            let t2 = additive_table(&positive_masses(&mut rng, n), n);
            t1.into_iter()
                .zip(t2)
                .map(|(a, b)| a.max_of(&b))
                .collect()
        }
        Family::ConcaveDistortion => {
            // h(nu(A)) for a piecewise-linear concave h with h(0) = 0:
            // h = min(a0*t, a1*t + b1, a2*t + b2), all coefficients positive.
            // Concavity plus h(0) = 0 gives h(s+t) <= h(s) + h(t), hence
            // subadditivity on top of the additive nu.
            let table = additive_table(&positive_masses(&mut rng, n), n);
            let a0 = grid(&mut rng, 200, 2_000);
            let a1 = grid(&mut rng, 10, 500);
            let b1 = grid(&mut rng, 100, 5_000);
            let a2 = grid(&mut rng, 10, 500);
            let b2 = grid(&mut rng, 100, 5_000);
            table
                .into_iter()
                .map(|t| {
                    let l0 = &a0 * &t;
                    let l1 = &(&a1 * &t) + &b1;
                    let l2 = &(&a2 * &t) + &b2;
                    l0.min_of(&l1).min_of(&l2)
                })
                .collect()
        }
        Family::MonotoneRandom => {
            // Monotonization of an i.i.d. positive table:
            // mu(A) = max over nonempty B subset A of r(B).
            let raw: Vec<Value> = (0..(1u32 << n)).map(|_| grid(&mut rng, 1, 10_000)).collect();
            let mut table = vec![Value::zero(Mode::Exact); 1 << n];
            for a in 1..(1u32 << n) {
                let mut best = raw[a as usize].clone();
                let mut bits = a;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    best = best.max_of(&table[(a ^ low) as usize]);
                    bits ^= low;
                }
                table[a as usize] = best;
            }
            table
        }
    };
    let values = exact.into_iter().map(|v| v.into_mode(mode)).collect();
    Capacity::from_dense(space.clone(), values).expect("generated table is a valid capacity")
}

/// Random nonnegative function: i.i.d. values uniform on the grid over
/// [0, 10] with a 20% atom at zero, so positive sets stay nontrivial.
pub fn gen_nonneg_function(space: &FiniteSpace, seed: u64, mode: Mode) -> RealFunction {
    let mut rng = rng_for(seed);
    let values: Vec<Value> = (0..space.n())
        .map(|_| {
            if rng.random_range(0..5) == 0 {
                Value::zero(Mode::Exact)
            } else {
                grid(&mut rng, 0, 10_000)
            }
            .into_mode(mode)
        })
        .collect();
    RealFunction::new(space.clone(), values).unwrap()
}

/// Random signed function, uniform grid on [-10, 10].
pub fn gen_signed_function(space: &FiniteSpace, seed: u64, mode: Mode) -> RealFunction {
    let mut rng = rng_for(seed);
    let values: Vec<Value> = (0..space.n())
        .map(|_| grid(&mut rng, -10_000, 10_000).into_mode(mode))
        .collect();
    RealFunction::new(space.clone(), values).unwrap()
}

/// Random scalar on the grid over [-10, 10].
pub fn gen_scalar(seed: u64, mode: Mode) -> Value {
    let mut rng = rng_for(seed);
    grid(&mut rng, -10_000, 10_000).into_mode(mode)
}

/// Split the ground set in two by independent coin flips (either side may be
/// empty); used to build disjoint-support function pairs.
pub fn gen_bipartition(space: &FiniteSpace, seed: u64) -> (SubsetIndex, SubsetIndex) {
    let mut rng = rng_for(seed);
    let mut left = 0u32;
    for i in 0..space.n() {
        if rng.random_range(0..2) == 0 {
            left |= 1 << i;
        }
    }
    let left = SubsetIndex(left);
    (left, left.complement_in(space.n()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space(n: usize) -> FiniteSpace {
        FiniteSpace::of_size(n).unwrap()
    }

    #[test]
    fn deterministic_bit_for_bit() {
        for family in Family::ALL {
            let a = gen_capacity(&space(4), 1, family, Mode::Exact);
            let b = gen_capacity(&space(4), 1, family, Mode::Exact);
            assert_eq!(a, b);
            let c = gen_capacity(&space(4), 2, family, Mode::Exact);
            assert_ne!(a, c, "{family} should vary with the seed");
        }
    }

    #[test]
    fn float_table_is_rounded_exact_table() {
        for family in Family::ALL {
            let e = gen_capacity(&space(5), 7, family, Mode::Exact);
            let f = gen_capacity(&space(5), 7, family, Mode::Float);
            for s in space(5).subsets() {
                assert_eq!(e.value(s).to_f64(), f.value(s).to_f64());
            }
        }
    }

    #[test]
    fn additive_family_is_additive() {
        let mu = gen_capacity(&space(4), 1, Family::Additive, Mode::Exact);
        assert!(mu.is_additive());
        assert!(mu.is_subadditive().holds);
    }

    #[test]
    fn subadditive_families_are_subadditive() {
        for family in [
            Family::ClippedAdditive,
            Family::MinOfAdditive,
            Family::ConcaveDistortion,
        ] {
            for seed in 0..25 {
                for n in 2..=5 {
                    let mu = gen_capacity(&space(n), seed, family, Mode::Exact);
                    assert!(
                        mu.is_subadditive().holds,
                        "{family} seed {seed} n {n} not subadditive"
                    );
                }
            }
        }
    }

    #[test]
    fn predicate_implication_chain() {
        // submodular => subadditive => null-additive on every generated capacity
        for family in Family::ALL {
            for seed in 0..10 {
                let mu = gen_capacity(&space(4), seed, family, Mode::Exact);
                let (sm, sa, na) = (
                    mu.is_submodular().holds,
                    mu.is_subadditive().holds,
                    mu.is_null_additive().holds,
                );
                assert!(!sm || sa, "{family} {seed}: submodular but not subadditive");
                assert!(!sa || na, "{family} {seed}: subadditive but not null-additive");
            }
        }
    }

    #[test]
    fn monotone_random_is_sometimes_non_subadditive() {
        let mut non_subadditive = 0;
        for seed in 0..100 {
            let mu = gen_capacity(&space(4), seed, Family::MonotoneRandom, Mode::Exact);
            if !mu.is_subadditive().holds {
                non_subadditive += 1;
            }
        }
        assert!(non_subadditive > 0, "expected some non-subadditive draws");
    }

    #[test]
    fn function_generators() {
        let f = gen_nonneg_function(&space(8), 3, Mode::Exact);
        assert!(f.is_nonnegative().is_ok());
        assert_eq!(f, gen_nonneg_function(&space(8), 3, Mode::Exact));
        let g = gen_signed_function(&space(8), 3, Mode::Exact);
        assert_eq!(g, gen_signed_function(&space(8), 3, Mode::Exact));
        let (a, b) = gen_bipartition(&space(8), 5);
        assert!(a.is_disjoint_from(b));
        assert_eq!(a.union(b), space(8).full_set());
    }
}
