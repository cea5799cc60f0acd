//! Report types shared by the verification suites.

use crate::capacity::Capacity;
use crate::function::RealFunction;
use crate::value::{Mode, Value};

/// Outcome of one randomized property suite. `failures` always equals
/// `witnesses.len()`, and each witness can be re-evaluated standalone to
/// reproduce its violation.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub trials: u32,
    pub failures: u32,
    pub tolerance: String,
    pub seed: u64,
    pub witnesses: Vec<ViolationWitness>,
}

impl VerificationReport {
    pub fn new(suite: &str, trials: u32, seed: u64, mode: Mode) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            trials,
            failures: 0,
            tolerance: tolerance_label(mode),
            seed,
            witnesses: Vec::new(),
        }
    }

    pub fn with_witnesses(mut self, witnesses: Vec<ViolationWitness>) -> Self {
        self.failures = witnesses.len() as u32;
        self.witnesses = witnesses;
        self
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

pub fn tolerance_label(mode: Mode) -> String {
    match mode {
        Mode::Exact => "exact".to_string(),
        Mode::Float => "1e-9".to_string(),
    }
}

/// A concrete violating instance: the capacity, the functions involved, and
/// the two sides of the broken (in)equality.
#[derive(Clone, Debug)]
pub struct ViolationWitness {
    pub trial: u32,
    pub capacity: Capacity,
    pub functions: Vec<RealFunction>,
    pub lhs: Value,
    pub rhs: Value,
    pub slack: Value,
    pub note: String,
}

impl ViolationWitness {
    pub fn new(
        trial: u32,
        capacity: &Capacity,
        functions: &[&RealFunction],
        lhs: Value,
        rhs: Value,
        note: &str,
    ) -> Self {
        let slack = &lhs - &rhs;
        ViolationWitness {
            trial,
            capacity: capacity.clone(),
            functions: functions.iter().map(|f| (*f).clone()).collect(),
            lhs,
            rhs,
            slack,
            note: note.to_string(),
        }
    }
}

/// One checked inequality with both sides and the remaining slack.
/// `advisory` marks checks run outside their hypothesis (for example a
/// Hoelder check on a capacity that is not subadditive).
#[derive(Clone, Debug)]
pub struct InequalityReport {
    pub name: String,
    pub lhs: Value,
    pub rhs: Value,
    pub holds: bool,
    pub slack: Value,
    pub advisory: bool,
}

impl InequalityReport {
    /// Check lhs <= rhs under the suite tolerance policy.
    pub fn le(name: &str, lhs: Value, rhs: Value, advisory: bool) -> Self {
        let holds = rhs.ge_within(&lhs);
        let slack = &rhs - &lhs;
        InequalityReport {
            name: name.to_string(),
            lhs,
            rhs,
            holds,
            slack,
            advisory,
        }
    }
}
