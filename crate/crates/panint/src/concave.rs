//! The concave integral: supremum of sum lambda_S * mu(S) over arbitrary
//! nonnegative combinations of (possibly overlapping) sets with
//! sum lambda_S * chi_S <= f. On a finite space this is a linear program;
//! the optimum dominates both the pan-integral (partitions are feasible
//! combinations) and the Choquet integral (level chains are too).

use crate::capacity::Capacity;
use crate::error::Result;
use crate::function::RealFunction;
use crate::lp;
use crate::pan::{IntegralEngine, IntegralResult, IntegralWitness};

/// Concave integral of a nonnegative function, with the optimal dual
/// certificate as witness.
pub fn concave_integral(f: &RealFunction, mu: &Capacity) -> Result<IntegralResult> {
    let sol = lp::solve_concave(f, mu)?;
    Ok(IntegralResult {
        value: sol.value,
        engine: IntegralEngine::Lp,
        witness: Some(IntegralWitness::Dual(sol.dual)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::choquet::choquet_pos;
    use crate::fixtures::{additive4_capacity, example_52_capacity, example_52_f};
    use crate::generate::{gen_capacity, gen_nonneg_function, Family};
    use crate::pan::pan_pos;
    use crate::space::FiniteSpace;
    use crate::value::{Mode, Value};

    #[test]
    fn additive_measure_weighted_sum() {
        let mu = additive4_capacity(Mode::Exact);
        let f = example_52_f(Mode::Exact).abs();
        let got = concave_integral(&f, &mu).unwrap().value;
        let pan = pan_pos(&f, &mu).unwrap().value;
        assert_eq!(got, pan); // both equal the Lebesgue sum
    }

    #[test]
    fn example_52_dominance() {
        // f+ of the golden instance: pan = 4, Choquet = concave = 5
        let mu = example_52_capacity(Mode::Exact);
        let f = example_52_f(Mode::Exact).positive_part();
        let pan = pan_pos(&f, &mu).unwrap().value;
        let cho = choquet_pos(&f, &mu).unwrap().value;
        let con = concave_integral(&f, &mu).unwrap().value;
        assert_eq!(pan, Value::from_int(4, Mode::Exact));
        assert_eq!(cho, Value::from_int(5, Mode::Exact));
        assert_eq!(con, Value::from_int(5, Mode::Exact));
    }

    #[test]
    fn dominates_pan_and_choquet() {
        for seed in 0..30 {
            let n = 2 + (seed as usize % 4);
            let space = FiniteSpace::of_size(n).unwrap();
            let mu = gen_capacity(&space, seed, Family::ALL[seed as usize % 5], Mode::Exact);
            let f = gen_nonneg_function(&space, seed ^ 0x77, Mode::Exact);
            let con = concave_integral(&f, &mu).unwrap().value;
            let pan = pan_pos(&f, &mu).unwrap().value;
            let cho = choquet_pos(&f, &mu).unwrap().value;
            assert!(con.total_cmp(&pan) != std::cmp::Ordering::Less, "seed {seed}");
            assert!(con.total_cmp(&cho) != std::cmp::Ordering::Less, "seed {seed}");
        }
    }

    #[test]
    fn coincides_with_pan_under_subadditivity() {
        for seed in 0..30 {
            let n = 2 + (seed as usize % 4);
            let space = FiniteSpace::of_size(n).unwrap();
            let family = [
                Family::ClippedAdditive,
                Family::MinOfAdditive,
                Family::ConcaveDistortion,
            ][seed as usize % 3];
            let mu = gen_capacity(&space, seed, family, Mode::Exact);
            let f = gen_nonneg_function(&space, seed ^ 0x3f, Mode::Exact);
            let con = concave_integral(&f, &mu).unwrap().value;
            let pan = pan_pos(&f, &mu).unwrap().value;
            assert_eq!(con, pan, "seed {seed} family {family}");
        }
    }
}
