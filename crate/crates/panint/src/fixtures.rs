//! Built-in golden instances used across tests, the CLI fixtures and the
//! verification suites.

use crate::capacity::{validate_capacity, Capacity};
use crate::function::RealFunction;
use crate::space::{FiniteSpace, SubsetIndex};
use crate::value::{Mode, Value};

/// The four-point capacity with mu(X) = 6.5 whose pan-integral is famously
/// non-additive. Point order: x1, x2, x3, x4 (bits 0..3).
pub fn example_52_capacity(mode: Mode) -> Capacity {
    let space = FiniteSpace::of_size(4).unwrap();
    let half = |k: i64| Value::ratio(k, 2, mode);
    let table = vec![
        (SubsetIndex(0b0001), half(2)),  // {x1} = 1
        (SubsetIndex(0b0010), half(2)),  // {x2} = 1
        (SubsetIndex(0b0100), half(4)),  // {x3} = 2
        (SubsetIndex(0b1000), half(3)),  // {x4} = 1.5
        (SubsetIndex(0b0011), half(3)),  // {x1,x2} = 1.5
        (SubsetIndex(0b0101), half(8)),  // {x1,x3} = 4
        (SubsetIndex(0b1001), half(5)),  // {x1,x4} = 2.5
        (SubsetIndex(0b0110), half(7)),  // {x2,x3} = 3.5
        (SubsetIndex(0b1010), half(8)),  // {x2,x4} = 4
        (SubsetIndex(0b1100), half(8)),  // {x3,x4} = 4
        (SubsetIndex(0b0111), half(10)), // {x1,x2,x3} = 5
        (SubsetIndex(0b1011), half(10)), // {x1,x2,x4} = 5
        (SubsetIndex(0b1101), half(9)),  // {x1,x3,x4} = 4.5
        (SubsetIndex(0b1110), half(12)), // {x2,x3,x4} = 6
        (SubsetIndex(0b1111), half(13)), // X = 6.5
    ];
    validate_capacity(&space, &table).expect("golden capacity is valid")
}

/// The signed function f = (2, -2, 1, -1) paired with the capacity above.
pub fn example_52_f(mode: Mode) -> RealFunction {
    RealFunction::new(
        FiniteSpace::of_size(4).unwrap(),
        vec![
            Value::from_int(2, mode),
            Value::from_int(-2, mode),
            Value::from_int(1, mode),
            Value::from_int(-1, mode),
        ],
    )
    .unwrap()
}

/// Additive capacity on four points with singleton masses 1, 2, 3, 0.5.
pub fn additive4_capacity(mode: Mode) -> Capacity {
    let space = FiniteSpace::of_size(4).unwrap();
    let masses = [
        Value::from_int(1, mode),
        Value::from_int(2, mode),
        Value::from_int(3, mode),
        Value::ratio(1, 2, mode),
    ];
    let values: Vec<Value> = (0..16u32)
        .map(|a| {
            SubsetIndex(a)
                .points()
                .fold(Value::zero(mode), |acc, p| &acc + &masses[p])
        })
        .collect();
    Capacity::from_dense(space, values).unwrap()
}

/// mu(A) = 1 for every nonempty A: subadditive but far from additive.
pub fn constant_one_capacity(n: usize, mode: Mode) -> Capacity {
    let space = FiniteSpace::of_size(n).unwrap();
    let values: Vec<Value> = (0..(1u32 << n))
        .map(|a| {
            if a == 0 {
                Value::zero(mode)
            } else {
                Value::one(mode)
            }
        })
        .collect();
    Capacity::from_dense(space, values).unwrap()
}
