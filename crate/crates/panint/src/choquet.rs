//! Choquet integrals: the level-set integral and its symmetric and
//! asymmetric extensions to signed functions.

use crate::capacity::Capacity;
use crate::error::Result;
use crate::function::RealFunction;
use crate::pan::{IntegralEngine, IntegralResult, IntegralWitness};
use crate::space::SubsetIndex;
use crate::value::Value;

/// Choquet integral of a nonnegative function: with the distinct positive
/// values 0 < v_1 < ... < v_m of f, the integral is
/// sum_k (v_k - v_{k-1}) * mu({f >= v_k}), v_0 = 0.
pub fn choquet_pos(f: &RealFunction, mu: &Capacity) -> Result<IntegralResult> {
    mu.check_space(f)?;
    f.is_nonnegative()?;
    let mode = mu.mode().join(f.mode());
    let mut levels: Vec<Value> = f
        .values()
        .iter()
        .filter(|v| v.is_positive())
        .cloned()
        .collect();
    levels.sort_by(|a, b| a.total_cmp(b));
    levels.dedup();

    let mut total = Value::zero(mode);
    let mut prev = Value::zero(mode);
    let mut chain = Vec::with_capacity(levels.len());
    for level in levels {
        let mut upper = 0u32;
        for (i, v) in f.values().iter().enumerate() {
            if v.total_cmp(&level) != std::cmp::Ordering::Less {
                upper |= 1 << i;
            }
        }
        let upper = SubsetIndex(upper);
        let increment = &level - &prev;
        total = &total + &(&increment * mu.value(upper));
        chain.push((increment, upper));
        prev = level;
    }
    Ok(IntegralResult {
        value: total,
        engine: IntegralEngine::SortedLevels,
        witness: Some(IntegralWitness::Levels(chain)),
    })
}

/// Asymmetric Choquet integral: integral of f+ against mu minus integral of
/// f- against the conjugate of mu.
pub fn choquet_asymmetric(f: &RealFunction, mu: &Capacity) -> Result<Value> {
    mu.check_space(f)?;
    let plus = choquet_pos(&f.positive_part(), mu)?.value;
    let minus = choquet_pos(&f.negative_part(), &mu.conjugate())?.value;
    Ok(&plus - &minus)
}

/// Symmetric Choquet integral: integral of f+ minus integral of f-, both
/// against mu.
pub fn choquet_symmetric(f: &RealFunction, mu: &Capacity) -> Result<Value> {
    mu.check_space(f)?;
    let plus = choquet_pos(&f.positive_part(), mu)?.value;
    let minus = choquet_pos(&f.negative_part(), mu)?.value;
    Ok(&plus - &minus)
}
