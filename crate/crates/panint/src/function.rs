//! Real-valued functions on the points of a finite space.

use crate::error::{Error, Result};
use crate::space::{FiniteSpace, SubsetIndex};
use crate::value::{Mode, Value};

/// A function X -> R given by one finite value per point. All entries share
/// one numeric mode; mixing exact and float entries demotes the whole
/// function to float.
#[derive(Clone, Debug, PartialEq)]
pub struct RealFunction {
    space: FiniteSpace,
    values: Vec<Value>,
}

impl RealFunction {
    pub fn new(space: FiniteSpace, values: Vec<Value>) -> Result<Self> {
        if values.len() != space.n() {
            return Err(Error::Parse(format!(
                "function has {} values for a {}-point space",
                values.len(),
                space.n()
            )));
        }
        for (i, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::Parse(format!("non-finite value at point {i}")));
            }
        }
        let mode = values
            .iter()
            .fold(Mode::Exact, |m, v| m.join(v.mode()));
        let values = values.into_iter().map(|v| v.into_mode(mode)).collect();
        Ok(RealFunction { space, values })
    }

    pub fn zero(space: FiniteSpace, mode: Mode) -> Self {
        let values = vec![Value::zero(mode); space.n()];
        RealFunction { space, values }
    }

    pub fn constant(space: FiniteSpace, c: Value) -> Self {
        let values = vec![c; space.n()];
        RealFunction { space, values }
    }

    /// Characteristic function of a set.
    pub fn indicator(space: FiniteSpace, set: SubsetIndex, mode: Mode) -> Self {
        let values = (0..space.n())
            .map(|i| {
                if set.contains(i) {
                    Value::one(mode)
                } else {
                    Value::zero(mode)
                }
            })
            .collect();
        RealFunction { space, values }
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn mode(&self) -> Mode {
        self.values
            .iter()
            .fold(Mode::Exact, |m, v| m.join(v.mode()))
    }

    pub fn value(&self, point: usize) -> &Value {
        &self.values[point]
    }

    pub fn values(&self) -> &[Value] {
        &self.values
    }

    /// Strict positive set {f > 0}.
    pub fn positive_set(&self) -> SubsetIndex {
        let mut mask = 0u32;
        for (i, v) in self.values.iter().enumerate() {
            if v.is_positive() {
                mask |= 1 << i;
            }
        }
        SubsetIndex(mask)
    }

    /// Set {f != g}.
    pub fn differs_from(&self, other: &RealFunction) -> Result<SubsetIndex> {
        self.check_space(other)?;
        let mut mask = 0u32;
        for i in 0..self.values.len() {
            if self.values[i] != other.values[i] {
                mask |= 1 << i;
            }
        }
        Ok(SubsetIndex(mask))
    }

    pub fn is_nonnegative(&self) -> Result<()> {
        for (i, v) in self.values.iter().enumerate() {
            if v.is_negative() {
                return Err(Error::NegativeInput(i));
            }
        }
        Ok(())
    }

    /// f+ = max(f, 0).
    pub fn positive_part(&self) -> RealFunction {
        self.map(|v| {
            if v.is_positive() {
                v.clone()
            } else {
                Value::zero(v.mode())
            }
        })
    }

    /// f- = max(-f, 0).
    pub fn negative_part(&self) -> RealFunction {
        self.map(|v| {
            if v.is_negative() {
                -v
            } else {
                Value::zero(v.mode())
            }
        })
    }

    pub fn abs(&self) -> RealFunction {
        self.map(Value::abs)
    }

    pub fn neg(&self) -> RealFunction {
        self.map(|v| -v)
    }

    /// f * chi_A: zero outside the mask.
    pub fn mask(&self, set: SubsetIndex) -> RealFunction {
        let values = self
            .values
            .iter()
            .enumerate()
            .map(|(i, v)| {
                if set.contains(i) {
                    v.clone()
                } else {
                    Value::zero(v.mode())
                }
            })
            .collect();
        RealFunction {
            space: self.space.clone(),
            values,
        }
    }

    pub fn add(&self, other: &RealFunction) -> Result<RealFunction> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &RealFunction) -> Result<RealFunction> {
        self.zip(other, |a, b| a - b)
    }

    pub fn mul(&self, other: &RealFunction) -> Result<RealFunction> {
        self.zip(other, |a, b| a * b)
    }

    pub fn pointwise_min(&self, other: &RealFunction) -> Result<RealFunction> {
        self.zip(other, Value::min_of)
    }

    pub fn scale(&self, c: &Value) -> RealFunction {
        self.map(|v| v * c)
    }

    /// |f|^p: exact for integer p on exact inputs, float otherwise.
    pub fn abs_pow(&self, p: f64) -> RealFunction {
        if p == 1.0 {
            return self.abs();
        }
        if p.fract() == 0.0 && p >= 0.0 && p <= u32::MAX as f64 {
            self.map(|v| v.abs().pow_int(p as u32))
        } else {
            self.map(|v| v.abs().powf(p))
        }
    }

    /// Pointwise f <= g.
    pub fn le(&self, other: &RealFunction) -> Result<bool> {
        self.check_space(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .all(|(a, b)| a.total_cmp(b) != std::cmp::Ordering::Greater))
    }

    pub fn check_space(&self, other: &RealFunction) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    fn map(&self, f: impl Fn(&Value) -> Value) -> RealFunction {
        RealFunction {
            space: self.space.clone(),
            values: self.values.iter().map(f).collect(),
        }
    }

    fn zip(&self, other: &RealFunction, f: impl Fn(&Value, &Value) -> Value) -> Result<RealFunction> {
        self.check_space(other)?;
        Ok(RealFunction {
            space: self.space.clone(),
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn space4() -> FiniteSpace {
        FiniteSpace::of_size(4).unwrap()
    }

    fn f_ex52(mode: Mode) -> RealFunction {
        RealFunction::new(
            space4(),
            vec![
                Value::from_int(2, mode),
                Value::from_int(-2, mode),
                Value::from_int(1, mode),
                Value::from_int(-1, mode),
            ],
        )
        .unwrap()
    }

    #[test]
    fn parts_and_positive_set() {
        let f = f_ex52(Mode::Exact);
        assert_eq!(f.positive_set(), SubsetIndex(0b0101));
        let plus = f.positive_part();
        let minus = f.negative_part();
        assert_eq!(plus.value(0), &Value::from_int(2, Mode::Exact));
        assert!(plus.value(1).is_zero());
        assert_eq!(minus.value(1), &Value::from_int(2, Mode::Exact));
        assert!(minus.value(0).is_zero());
        // f = f+ - f-
        assert_eq!(plus.sub(&minus).unwrap(), f);
    }

    #[test]
    fn masking() {
        let f = f_ex52(Mode::Exact);
        let g = f.mask(SubsetIndex(0b1001)); // {x1, x4}
        assert_eq!(g.value(0), &Value::from_int(2, Mode::Exact));
        assert!(g.value(1).is_zero());
        assert!(g.value(2).is_zero());
        assert_eq!(g.value(3), &Value::from_int(-1, Mode::Exact));
    }

    #[test]
    fn mixed_modes_demote_to_float() {
        let f = RealFunction::new(
            space4(),
            vec![
                Value::from_int(1, Mode::Exact),
                Value::Float(0.5),
                Value::from_int(0, Mode::Exact),
                Value::from_int(2, Mode::Exact),
            ],
        )
        .unwrap();
        assert_eq!(f.mode(), Mode::Float);
    }

    #[test]
    fn space_mismatch() {
        let f = f_ex52(Mode::Exact);
        let g = RealFunction::zero(FiniteSpace::of_size(3).unwrap(), Mode::Exact);
        assert_eq!(f.add(&g), Err(crate::error::Error::SpaceMismatch));
    }

    #[test]
    fn abs_pow_exactness() {
        let f = f_ex52(Mode::Exact);
        assert_eq!(f.abs_pow(2.0).mode(), Mode::Exact);
        assert_eq!(f.abs_pow(1.5).mode(), Mode::Float);
        assert_eq!(
            f.abs_pow(3.0).value(1),
            &Value::from_int(8, Mode::Exact)
        );
    }
}
