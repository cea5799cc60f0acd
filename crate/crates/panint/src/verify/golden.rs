//! The golden four-point instance, re-derived end to end.

use crate::fixtures::{example_52_capacity, example_52_f};
use crate::pan::{pan_pos, pan_signed};
use crate::space::SubsetIndex;
use crate::value::{Mode, Value};

#[derive(Clone, Debug)]
pub struct GoldenCheck {
    pub name: &'static str,
    pub expected: Value,
    pub got: Value,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct GoldenReport {
    pub checks: Vec<GoldenCheck>,
}

impl GoldenReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Recompute every integral of the golden instance: pan of the positive and
/// negative parts, the signed integral, and the two masked functions whose
/// disjoint supports break signed superadditivity (0 < 0.5).
pub fn reproduce_example_52(mode: Mode) -> GoldenReport {
    let mu = example_52_capacity(mode);
    let f = example_52_f(mode);
    let g = f.mask(SubsetIndex(0b1001)); // f on {x1, x4}
    let h = f.mask(SubsetIndex(0b0110)); // f on {x2, x3}

    let mut checks = Vec::new();
    let mut push = |name: &'static str, expected: Value, got: Value| {
        let pass = match mode {
            Mode::Exact => got == expected,
            Mode::Float => got.close_to(&expected),
        };
        checks.push(GoldenCheck {
            name,
            expected,
            got,
        pass,
        });
    };

    push(
        "pan f+ = 4",
        Value::from_int(4, mode),
        pan_pos(&f.positive_part(), &mu).unwrap().value,
    );
    push(
        "pan f- = 4",
        Value::from_int(4, mode),
        pan_pos(&f.negative_part(), &mu).unwrap().value,
    );
    push(
        "pan f = 0",
        Value::zero(mode),
        pan_signed(&f, &mu).unwrap().value,
    );
    push(
        "pan g = 0.5",
        Value::ratio(1, 2, mode),
        pan_signed(&g, &mu).unwrap().value,
    );
    push(
        "pan h = 0",
        Value::zero(mode),
        pan_signed(&h, &mu).unwrap().value,
    );
    push(
        "pan (g+h) = 0",
        Value::zero(mode),
        pan_signed(&g.add(&h).unwrap(), &mu).unwrap().value,
    );
    GoldenReport { checks }
}
