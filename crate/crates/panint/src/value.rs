//! Dual numeric tower: exact rationals and binary64 floats.
//!
//! Every quantity in the engine is a [`Value`], either an arbitrary-precision
//! rational (exact mode) or an `f64` (float mode). Arithmetic between the two
//! promotes to float. Exact mode makes every integral and every verification
//! suite decidable by exact comparison; float mode trades that for speed and
//! uses the tolerance policy below.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Absolute tolerance for capacity predicates (monotonicity, subadditivity,
/// ...) in float mode. Exact mode compares exactly.
pub const PREDICATE_ABS_TOL: f64 = 1e-12;

/// Tolerance for value comparisons in verification suites: relative on
/// magnitudes >= 1, absolute below.
pub const CHECK_REL_TOL: f64 = 1e-9;

/// Feasibility tolerance for float-mode simplex pivoting.
pub const LP_FEAS_TOL: f64 = 1e-12;

/// Numeric representation selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Exact,
    Float,
}

impl Mode {
    /// The mode of a computation combining both operands: exact only if
    /// everything is exact.
    pub fn join(self, other: Mode) -> Mode {
        if self == Mode::Exact && other == Mode::Exact {
            Mode::Exact
        } else {
            Mode::Float
        }
    }
}

/// A finite numeric value, exact or floating.
#[derive(Clone, Debug)]
pub enum Value {
    Exact(BigRational),
    Float(f64),
}

impl Value {
    pub fn zero(mode: Mode) -> Value {
        match mode {
            Mode::Exact => Value::Exact(BigRational::zero()),
            Mode::Float => Value::Float(0.0),
        }
    }

    pub fn one(mode: Mode) -> Value {
        Value::from_int(1, mode)
    }

    pub fn from_int(k: i64, mode: Mode) -> Value {
        match mode {
            Mode::Exact => Value::Exact(BigRational::from_integer(BigInt::from(k))),
            Mode::Float => Value::Float(k as f64),
        }
    }

    /// `num/den` in the requested mode. `den` must be nonzero.
    pub fn ratio(num: i64, den: i64, mode: Mode) -> Value {
        assert!(den != 0, "zero denominator");
        match mode {
            Mode::Exact => Value::Exact(BigRational::new(BigInt::from(num), BigInt::from(den))),
            Mode::Float => Value::Float(num as f64 / den as f64),
        }
    }

    pub fn mode(&self) -> Mode {
        match self {
            Value::Exact(_) => Mode::Exact,
            Value::Float(_) => Mode::Float,
        }
    }

    /// Lossless conversion into the given mode (exact -> float rounds once).
    pub fn into_mode(self, mode: Mode) -> Value {
        match (self, mode) {
            (v @ Value::Exact(_), Mode::Exact) => v,
            (v @ Value::Float(_), Mode::Float) => v,
            (Value::Exact(r), Mode::Float) => Value::Float(rational_to_f64(&r)),
            (Value::Float(x), Mode::Exact) => {
                Value::Exact(BigRational::from_float(x).expect("finite float"))
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Value::Exact(r) => rational_to_f64(r),
            Value::Float(x) => *x,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            Value::Exact(_) => true,
            Value::Float(x) => x.is_finite(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Value::Exact(r) => r.is_zero(),
            Value::Float(x) => *x == 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Value::Exact(r) => r.is_negative(),
            Value::Float(x) => *x < 0.0,
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Value::Exact(r) => r.is_positive(),
            Value::Float(x) => *x > 0.0,
        }
    }

    pub fn abs(&self) -> Value {
        match self {
            Value::Exact(r) => Value::Exact(r.abs()),
            Value::Float(x) => Value::Float(x.abs()),
        }
    }

    /// Total order; values are finite by construction so float comparison
    /// never sees a NaN.
    pub fn total_cmp(&self, other: &Value) -> Ordering {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a.cmp(b),
            _ => self
                .to_f64()
                .partial_cmp(&other.to_f64())
                .expect("finite values"),
        }
    }

    pub fn min_of(&self, other: &Value) -> Value {
        if self.total_cmp(other) == Ordering::Greater {
            other.clone()
        } else {
            self.clone()
        }
    }

    pub fn max_of(&self, other: &Value) -> Value {
        if self.total_cmp(other) == Ordering::Less {
            other.clone()
        } else {
            self.clone()
        }
    }

    /// Exact nonnegative integer power.
    pub fn pow_int(&self, k: u32) -> Value {
        match self {
            Value::Exact(r) => Value::Exact(num_traits::pow::pow(r.clone(), k as usize)),
            Value::Float(x) => Value::Float(x.powi(k as i32)),
        }
    }

    /// `self^p` for real `p`; always leaves exactness (used for non-integer
    /// exponents). `self` must be nonnegative.
    pub fn powf(&self, p: f64) -> Value {
        Value::Float(self.to_f64().powf(p))
    }

    /// `p`-th root of a nonnegative value. Stays exact when numerator and
    /// denominator are perfect `p`-th powers, otherwise falls to float.
    pub fn root(&self, p: u32) -> Value {
        assert!(p >= 1);
        if p == 1 {
            return self.clone();
        }
        match self {
            Value::Exact(r) => {
                if let Some(exact) = exact_root(r, p) {
                    Value::Exact(exact)
                } else {
                    Value::Float(rational_to_f64(r).powf(1.0 / p as f64))
                }
            }
            Value::Float(x) => Value::Float(x.powf(1.0 / p as f64)),
        }
    }

    /// Equality within the suite tolerance policy: exact when both operands
    /// are exact, otherwise 1e-9 relative above 1, absolute below.
    pub fn close_to(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a == b,
            _ => {
                let a = self.to_f64();
                let b = other.to_f64();
                let scale = 1f64.max(a.abs()).max(b.abs());
                (a - b).abs() <= CHECK_REL_TOL * scale
            }
        }
    }

    /// `self >= other` up to the suite tolerance (exact when both exact).
    pub fn ge_within(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a >= b,
            _ => {
                let a = self.to_f64();
                let b = other.to_f64();
                let scale = 1f64.max(a.abs()).max(b.abs());
                a >= b - CHECK_REL_TOL * scale
            }
        }
    }

    /// `self <= other` up to the predicate tolerance (absolute 1e-12 in
    /// float mode, exact otherwise). Used by capacity predicates.
    pub fn le_predicate(&self, other: &Value) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a <= b,
            _ => self.to_f64() <= other.to_f64() + PREDICATE_ABS_TOL,
        }
    }

    /// Parse a decimal or `p/q` string into an exact rational.
    pub fn parse_exact(s: &str) -> Result<Value> {
        parse_rational_str(s).map(Value::Exact)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().expect("rational magnitude fits f64")
}

/// Exact `p`-th root of a nonnegative rational, if it is rational.
fn exact_root(r: &BigRational, p: u32) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(BigRational::zero());
    }
    let num = num_integer::Roots::nth_root(r.numer(), p);
    let den = num_integer::Roots::nth_root(r.denom(), p);
    if &num_traits::pow::pow(num.clone(), p as usize) == r.numer()
        && &num_traits::pow::pow(den.clone(), p as usize) == r.denom()
    {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

fn parse_rational_str(s: &str) -> Result<BigRational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty numeric string".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
        if den.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(BigRational::new(num, den));
    }
    // Decimal with optional exponent: [-]ddd[.ddd][e[-]dd]
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => {
            let exp: i64 = e
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in `{s}`")))?;
            (m, exp)
        }
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(Error::Parse(format!("no digits in `{s}`")));
    }
    let mut all = String::with_capacity(int_part.len() + frac_part.len());
    all.push_str(int_part);
    all.push_str(frac_part);
    let unscaled: BigInt = if all.is_empty() {
        BigInt::zero()
    } else {
        all.parse()
            .map_err(|_| Error::Parse(format!("bad digits in `{s}`")))?
    };
    let scale = frac_part.len() as i64 - exp;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        BigRational::new(unscaled, num_traits::pow::pow(ten, scale as usize))
    } else {
        BigRational::from_integer(unscaled * num_traits::pow::pow(ten, (-scale) as usize))
    };
    Ok(if sign < 0 { -value } else { value })
}

/// Render an exact rational. Finite decimal expansions (denominator
/// 2^a * 5^b) print as decimals, anything else as `p/q`; both forms re-parse
/// bit-identically.
fn exact_to_string(r: &BigRational) -> String {
    let den = r.denom();
    let mut rest = den.clone();
    let two = BigInt::from(2);
    let five = BigInt::from(5);
    let mut twos = 0usize;
    let mut fives = 0usize;
    while rest.is_multiple_of(&two) {
        rest /= &two;
        twos += 1;
    }
    while rest.is_multiple_of(&five) {
        rest /= &five;
        fives += 1;
    }
    if !rest.is_one() {
        return format!("{}/{}", r.numer(), r.denom());
    }
    let k = twos.max(fives);
    // numer * 10^k / den is an integer once den | 10^k
    let scale = num_traits::pow::pow(BigInt::from(2), k - twos)
        * num_traits::pow::pow(BigInt::from(5), k - fives);
    let scaled = r.numer() * scale;
    let neg = scaled.is_negative();
    let digits = scaled.abs().to_string();
    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if k == 0 {
        out.push_str(&digits);
        return out;
    }
    if digits.len() > k {
        let (int_part, frac_part) = digits.split_at(digits.len() - k);
        out.push_str(int_part);
        let frac = frac_part.trim_end_matches('0');
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
    } else {
        out.push_str("0.");
        for _ in 0..(k - digits.len()) {
            out.push('0');
        }
        out.push_str(digits.trim_end_matches('0'));
    }
    out
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(r) => write!(f, "{}", exact_to_string(r)),
            Value::Float(x) => write!(f, "{x}"),
        }
    }
}

impl PartialEq for Value {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => a == b,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl PartialOrd for Value {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.total_cmp(other))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for &Value {
            type Output = Value;
            fn $method(self, rhs: &Value) -> Value {
                match (self, rhs) {
                    (Value::Exact(a), Value::Exact(b)) => Value::Exact(a $op b),
                    _ => Value::Float(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $trait for Value {
            type Output = Value;
            fn $method(self, rhs: Value) -> Value {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);
binop!(Div, div, /);

impl Neg for &Value {
    type Output = Value;
    fn neg(self) -> Value {
        match self {
            Value::Exact(r) => Value::Exact(-r),
            Value::Float(x) => Value::Float(-x),
        }
    }
}

impl Neg for Value {
    type Output = Value;
    fn neg(self) -> Value {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex(s: &str) -> Value {
        Value::parse_exact(s).unwrap()
    }

    #[test]
    fn parse_and_render_decimals() {
        assert_eq!(ex("6.5").to_string(), "6.5");
        assert_eq!(ex("-0.125").to_string(), "-0.125");
        assert_eq!(ex("4").to_string(), "4");
        assert_eq!(ex("2.50").to_string(), "2.5");
        assert_eq!(ex("1e-3").to_string(), "0.001");
        assert_eq!(ex("12.5e2").to_string(), "1250");
        assert_eq!(ex("1/3").to_string(), "1/3");
        assert_eq!(ex("-7/2").to_string(), "-3.5");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Value::parse_exact("").is_err());
        assert!(Value::parse_exact("1/0").is_err());
        assert!(Value::parse_exact("abc").is_err());
        assert!(Value::parse_exact(".").is_err());
    }

    #[test]
    fn arithmetic_promotes_to_float() {
        let a = ex("1.5");
        let b = Value::Float(2.0);
        assert_eq!((&a + &b).mode(), Mode::Float);
        assert_eq!((&a + &ex("2")).mode(), Mode::Exact);
        assert_eq!(&a + &ex("2"), ex("3.5"));
    }

    #[test]
    fn exact_roots() {
        assert_eq!(ex("4").root(2), ex("2"));
        assert_eq!(ex("2.25").root(2), ex("1.5"));
        assert_eq!(ex("27").root(3), ex("3"));
        assert_eq!(ex("2").root(2).mode(), Mode::Float);
        assert!((ex("2").root(2).to_f64() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn tolerance_policy() {
        assert!(Value::Float(1.0).close_to(&Value::Float(1.0 + 5e-10)));
        assert!(!Value::Float(1.0).close_to(&Value::Float(1.0 + 5e-9)));
        // relative above 1
        assert!(Value::Float(1e6).close_to(&Value::Float(1e6 + 1e-4)));
        // exact operands compare exactly
        assert!(!ex("1").close_to(&ex("1.0000000000000001")));
        assert!(ex("0.5").close_to(&ex("0.5")));
    }

    #[test]
    fn display_roundtrip_exact() {
        for s in ["6.5", "0.001", "-3.5", "1/3", "1000", "0"] {
            let v = ex(s);
            assert_eq!(Value::parse_exact(&v.to_string()).unwrap(), v);
        }
    }
}
