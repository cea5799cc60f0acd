//! Monotone measures (capacities) on the full power set of a finite space.

use crate::error::{Error, Result};
use crate::function::RealFunction;
use crate::space::{FiniteSpace, SubsetIndex};
use crate::value::{Mode, Value, PREDICATE_ABS_TOL};

/// A monotone measure: mu(empty) = 0, mu(X) > 0, and mu(A) <= mu(B) whenever
/// A is a subset of B. Values are finite and nonnegative; one table entry per
/// subset, indexed by bitmask.
#[derive(Clone, Debug, PartialEq)]
pub struct Capacity {
    space: FiniteSpace,
    values: Vec<Value>,
}

/// Outcome of one structural predicate (subadditive, submodular, ...).
/// When the predicate fails, `witness` is the lexicographically smallest
/// pair (A, B) violating the defining inequality and `slack` the amount by
/// which it fails.
#[derive(Clone, Debug, PartialEq)]
pub struct PropertyReport {
    pub property: &'static str,
    pub holds: bool,
    pub witness: Option<(SubsetIndex, SubsetIndex)>,
    pub slack: Value,
}

impl PropertyReport {
    fn holds(property: &'static str, mode: Mode) -> Self {
        PropertyReport {
            property,
            holds: true,
            witness: None,
            slack: Value::zero(mode),
        }
    }

    fn violated(property: &'static str, a: SubsetIndex, b: SubsetIndex, slack: Value) -> Self {
        PropertyReport {
            property,
            holds: false,
            witness: Some((a, b)),
            slack,
        }
    }
}

/// Validate a raw subset -> value table as a capacity. Every nonempty subset
/// needs exactly one entry; the empty set may be omitted (implied 0) but must
/// be 0 when present.
pub fn validate_capacity(
    space: &FiniteSpace,
    table: &[(SubsetIndex, Value)],
) -> Result<Capacity> {
    let size = 1usize << space.n();
    let mode = table
        .iter()
        .fold(Mode::Exact, |m, (_, v)| m.join(v.mode()));
    let mut values: Vec<Option<Value>> = vec![None; size];
    values[0] = Some(Value::zero(mode));
    for (set, v) in table {
        if (set.0 as usize) >= size {
            return Err(Error::Parse(format!(
                "set {set} out of range for a {}-point space",
                space.n()
            )));
        }
        if set.is_empty() {
            if !v.is_zero() {
                return Err(Error::Parse("empty set must have value 0".into()));
            }
            continue;
        }
        if !v.is_finite() {
            return Err(Error::NonFinite(*set));
        }
        if v.is_negative() {
            return Err(Error::NegativeValue(*set));
        }
        let slot = &mut values[set.0 as usize];
        if slot.is_some() {
            return Err(Error::Parse(format!("duplicate entry for set {set}")));
        }
        *slot = Some(v.clone().into_mode(mode));
    }
    let mut dense = Vec::with_capacity(size);
    for (idx, slot) in values.into_iter().enumerate() {
        match slot {
            Some(v) => dense.push(v),
            None => return Err(Error::MissingSet(SubsetIndex(idx as u32))),
        }
    }
    Capacity::from_dense(space.clone(), dense)
}

impl Capacity {
    /// Build from a dense table indexed by subset bitmask (length 2^n,
    /// entry 0 is the empty set). Checks all capacity invariants.
    pub fn from_dense(space: FiniteSpace, values: Vec<Value>) -> Result<Capacity> {
        let n = space.n();
        assert_eq!(values.len(), 1 << n, "dense table size");
        let mode = values
            .iter()
            .fold(Mode::Exact, |m, v| m.join(v.mode()));
        let values: Vec<Value> = values.into_iter().map(|v| v.into_mode(mode)).collect();
        if !values[0].is_zero() {
            return Err(Error::Parse("empty set must have value 0".into()));
        }
        for (idx, v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::NonFinite(SubsetIndex(idx as u32)));
            }
            if v.is_negative() {
                return Err(Error::NegativeValue(SubsetIndex(idx as u32)));
            }
        }
        // Monotonicity along single-point extensions is equivalent to
        // monotonicity under inclusion; scan covers first, and only hunt for
        // the lexicographically smallest violating inclusion pair on failure.
        let mut bad = false;
        'outer: for a in 0..(1u32 << n) {
            for i in 0..n {
                if a & (1 << i) == 0 {
                    let b = a | (1 << i);
                    if !values[a as usize].le_predicate(&values[b as usize]) {
                        bad = true;
                        break 'outer;
                    }
                }
            }
        }
        if bad {
            for a in 0..(1u32 << n) {
                for b in (a + 1)..(1u32 << n) {
                    if SubsetIndex(a).is_subset_of(SubsetIndex(b))
                        && !values[a as usize].le_predicate(&values[b as usize])
                    {
                        return Err(Error::NonMonotone {
                            smaller: SubsetIndex(a),
                            larger: SubsetIndex(b),
                        });
                    }
                }
            }
            unreachable!("cover violation implies an inclusion violation");
        }
        if !values[(1usize << n) - 1].is_positive() {
            return Err(Error::ZeroTotal);
        }
        Ok(Capacity { space, values })
    }

    pub fn space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn n(&self) -> usize {
        self.space.n()
    }

    pub fn mode(&self) -> Mode {
        self.values
            .iter()
            .fold(Mode::Exact, |m, v| m.join(v.mode()))
    }

    pub fn value(&self, set: SubsetIndex) -> &Value {
        &self.values[set.0 as usize]
    }

    /// mu(X).
    pub fn total(&self) -> &Value {
        self.value(self.space.full_set())
    }

    pub fn table(&self) -> &[Value] {
        &self.values
    }

    /// Is mu(A) zero (up to the predicate tolerance in float mode)?
    pub fn is_null(&self, set: SubsetIndex) -> bool {
        let v = self.value(set);
        match v {
            Value::Exact(_) => v.is_zero(),
            Value::Float(x) => *x <= PREDICATE_ABS_TOL,
        }
    }

    pub fn check_space(&self, f: &RealFunction) -> Result<()> {
        if &self.space != f.space() {
            return Err(Error::SpaceMismatch);
        }
        Ok(())
    }

    /// Conjugate capacity: mu'(A) = mu(X) - mu(X \ A). An involution that
    /// preserves mu(X).
    pub fn conjugate(&self) -> Capacity {
        let n = self.n();
        let total = self.total().clone();
        let values: Vec<Value> = (0..(1u32 << n))
            .map(|a| &total - self.value(SubsetIndex(a).complement_in(n)))
            .collect();
        Capacity::from_dense(self.space.clone(), values)
            .expect("conjugate of a valid capacity is valid")
    }

    /// mu(A u B) <= mu(A) + mu(B) for all pairs. Exhaustive scan in
    /// lexicographic order; the first violation is the reported witness.
    pub fn is_subadditive(&self) -> PropertyReport {
        self.scan_pairs("subadditive", |mu, a, b| {
            let lhs = mu.value(a.union(b));
            let rhs = mu.value(a) + mu.value(b);
            excess(lhs, &rhs)
        })
    }

    /// mu(A u B) + mu(A n B) <= mu(A) + mu(B) for all pairs.
    pub fn is_submodular(&self) -> PropertyReport {
        self.scan_pairs("submodular", |mu, a, b| {
            let lhs = mu.value(a.union(b)) + mu.value(a.intersection(b));
            let rhs = mu.value(a) + mu.value(b);
            excess(&lhs, &rhs)
        })
    }

    /// mu(A u B) + mu(A n B) >= mu(A) + mu(B) for all pairs.
    pub fn is_supermodular(&self) -> PropertyReport {
        self.scan_pairs("supermodular", |mu, a, b| {
            let lhs = mu.value(a) + mu.value(b);
            let rhs = mu.value(a.union(b)) + mu.value(a.intersection(b));
            excess(&lhs, &rhs)
        })
    }

    /// mu(B) = 0 implies mu(A u B) = mu(A), for all ordered pairs.
    pub fn is_null_additive(&self) -> PropertyReport {
        let n = self.n();
        let mode = self.mode();
        for a in 0..(1u32 << n) {
            for b in 0..(1u32 << n) {
                let (a, b) = (SubsetIndex(a), SubsetIndex(b));
                if !self.is_null(b) {
                    continue;
                }
                // monotonicity gives mu(A u B) >= mu(A); only the excess can fail
                let d = excess(self.value(a.union(b)), self.value(a));
                if let Some(slack) = d {
                    return PropertyReport::violated("null-additive", a, b, slack);
                }
            }
        }
        PropertyReport::holds("null-additive", mode)
    }

    fn scan_pairs(
        &self,
        property: &'static str,
        violation: impl Fn(&Capacity, SubsetIndex, SubsetIndex) -> Option<Value>,
    ) -> PropertyReport {
        let n = self.n();
        for a in 0..(1u32 << n) {
            for b in a..(1u32 << n) {
                if let Some(slack) = violation(self, SubsetIndex(a), SubsetIndex(b)) {
                    return PropertyReport::violated(property, SubsetIndex(a), SubsetIndex(b), slack);
                }
            }
        }
        PropertyReport::holds(property, self.mode())
    }

    /// Additivity over disjoint pairs: mu(A u B) = mu(A) + mu(B).
    pub fn is_additive(&self) -> bool {
        let n = self.n();
        for a in 0..(1u32 << n) {
            for b in a..(1u32 << n) {
                if a & b != 0 {
                    continue;
                }
                let lhs = self.value(SubsetIndex(a | b));
                let rhs = self.value(SubsetIndex(a)) + self.value(SubsetIndex(b));
                let eq = match (lhs, &rhs) {
                    (Value::Exact(x), Value::Exact(y)) => x == y,
                    _ => (lhs.to_f64() - rhs.to_f64()).abs() <= PREDICATE_ABS_TOL,
                };
                if !eq {
                    return false;
                }
            }
        }
        true
    }

    /// Minimal atoms: sets A with mu(A) > 0 whose proper nonempty subsets all
    /// have measure zero. Ascending by subset index, hence duplicate-free.
    pub fn minimal_atoms(&self) -> Vec<SubsetIndex> {
        let n = self.n();
        let mut atoms = Vec::new();
        'sets: for a in 1..(1u32 << n) {
            let a = SubsetIndex(a);
            if self.is_null(a) {
                continue;
            }
            for b in a.subsets() {
                if b.is_empty() || b == a {
                    continue;
                }
                if !self.is_null(b) {
                    continue 'sets;
                }
            }
            atoms.push(a);
        }
        atoms
    }
}

/// Positive violation amount lhs - rhs when lhs exceeds rhs beyond the
/// predicate tolerance, else None.
fn excess(lhs: &Value, rhs: &Value) -> Option<Value> {
    if lhs.le_predicate(rhs) {
        None
    } else {
        Some(lhs - rhs)
    }
}
