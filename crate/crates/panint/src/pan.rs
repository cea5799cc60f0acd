//! The (+,*)-pan-integral on finite spaces.
//!
//! For nonnegative f the integral is the maximum over set partitions of the
//! positive set {f > 0} of sum_{A} (min_A f) * mu(A): restricting to
//! partitions of {f > 0} loses nothing (any block meeting {f = 0} has
//! infimum 0), and within a block the largest feasible coefficient is the
//! block minimum since blocks are disjoint. The maximum is attained, so the
//! engine returns exact values with witnesses.
//!
//! The engine is a subset DP over the positive set; `pan_pos_oracle` is an
//! independent brute-force enumeration of all set partitions kept around to
//! cross-check the DP.

use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::function::RealFunction;
use crate::lp::DualCertificate;
use crate::space::SubsetIndex;
use crate::value::{Mode, Value};

/// Which computation produced an integral value.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntegralEngine {
    Dp,
    Enumeration,
    Lp,
    SortedLevels,
}

impl IntegralEngine {
    pub fn name(self) -> &'static str {
        match self {
            IntegralEngine::Dp => "dp",
            IntegralEngine::Enumeration => "enumeration",
            IntegralEngine::Lp => "lp",
            IntegralEngine::SortedLevels => "sorted-levels",
        }
    }
}

/// A disjoint system of sets with nonnegative coefficients; the optimality
/// witness of a pan-integral. Feasibility means sum_i c_i * chi_{A_i} <= f.
#[derive(Clone, Debug, PartialEq)]
pub struct PartitionValuation {
    pub blocks: Vec<(SubsetIndex, Value)>,
}

impl PartitionValuation {
    pub fn empty() -> Self {
        PartitionValuation { blocks: Vec::new() }
    }

    pub fn blocks_disjoint(&self) -> bool {
        let mut seen = 0u32;
        for (s, _) in &self.blocks {
            if seen & s.0 != 0 {
                return false;
            }
            seen |= s.0;
        }
        true
    }

    /// sum_i c_i * chi_{A_i} <= f pointwise.
    pub fn is_feasible_for(&self, f: &RealFunction) -> bool {
        if !self.blocks_disjoint() {
            return false;
        }
        self.blocks.iter().all(|(s, c)| {
            s.points()
                .all(|p| c.total_cmp(f.value(p)) != std::cmp::Ordering::Greater)
        })
    }

    /// sum_i c_i * mu(A_i).
    pub fn total(&self, mu: &Capacity) -> Value {
        let mut acc = Value::zero(mu.mode());
        for (s, c) in &self.blocks {
            acc = &acc + &(c * mu.value(*s));
        }
        acc
    }
}

/// An integral value with provenance and an optional optimality witness.
#[derive(Clone, Debug)]
pub struct IntegralResult {
    pub value: Value,
    pub engine: IntegralEngine,
    pub witness: Option<IntegralWitness>,
}

#[derive(Clone, Debug)]
pub enum IntegralWitness {
    /// Optimal partition of the positive set (pan).
    Partition(PartitionValuation),
    /// Level increments and upper level sets (Choquet).
    Levels(Vec<(Value, SubsetIndex)>),
    /// Optimal dual point weights (concave).
    Dual(DualCertificate),
    /// Witnesses for the two halves of a signed integral.
    Signed {
        positive: PartitionValuation,
        negative: PartitionValuation,
    },
}

/// Pan-integral of a nonnegative function, by subset dynamic programming
/// over the positive set. g(S) = max over blocks A containing the lowest
/// point of S of (min_A f) * mu(A) + g(S \ A); enumerating only blocks with
/// the lowest set bit visits every partition exactly once.
pub fn pan_pos(f: &RealFunction, mu: &Capacity) -> Result<IntegralResult> {
    mu.check_space(f)?;
    f.is_nonnegative()?;
    let mode = mu.mode().join(f.mode());
    let support = f.positive_set();
    let pts: Vec<usize> = support.points().collect();
    let k = pts.len();
    if k == 0 {
        return Ok(IntegralResult {
            value: Value::zero(mode),
            engine: IntegralEngine::Dp,
            witness: Some(IntegralWitness::Partition(PartitionValuation::empty())),
        });
    }

    // expand[m]: compact mask over the support -> global subset index
    let size = 1usize << k;
    let mut expand = vec![0u32; size];
    for m in 1..size {
        let low = m & m.wrapping_neg();
        let idx = low.trailing_zeros() as usize;
        expand[m] = expand[m ^ low] | (1u32 << pts[idx]);
    }
    // block value: (min of f over the block) * mu(block)
    let mut min_f = vec![Value::zero(mode); size];
    let mut block_val = vec![Value::zero(mode); size];
    for m in 1..size {
        let low = m & m.wrapping_neg();
        let idx = low.trailing_zeros() as usize;
        let v = f.value(pts[idx]);
        min_f[m] = if m == low {
            v.clone()
        } else {
            v.min_of(&min_f[m ^ low])
        };
        block_val[m] = &min_f[m] * mu.value(SubsetIndex(expand[m]));
    }

    let mut best = vec![Value::zero(mode); size];
    let mut choice = vec![0usize; size];
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        // blocks a = low | t for every t subset of rest, descending t
        let mut t = rest;
        let mut best_val: Option<Value> = None;
        let mut best_block = 0usize;
        loop {
            let a = low | t;
            let cand = &block_val[a] + &best[s ^ a];
            let better = match &best_val {
                None => true,
                Some(b) => cand.total_cmp(b) == std::cmp::Ordering::Greater,
            };
            if better {
                best_val = Some(cand);
                best_block = a;
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        best[s] = best_val.expect("at least the singleton block");
        choice[s] = best_block;
    }

    let mut blocks = Vec::new();
    let mut s = size - 1;
    while s != 0 {
        let a = choice[s];
        if !block_val[a].is_zero() || !min_f[a].is_zero() {
            blocks.push((SubsetIndex(expand[a]), min_f[a].clone()));
        }
        s ^= a;
    }
    blocks.reverse();
    Ok(IntegralResult {
        value: best[size - 1].clone(),
        engine: IntegralEngine::Dp,
        witness: Some(IntegralWitness::Partition(PartitionValuation { blocks })),
    })
}

/// Brute-force pan-integral: enumerate every set partition of the positive
/// set and score it directly. Independent of the DP; n is capped at 10
/// (Bell-number growth).
pub fn pan_pos_oracle(f: &RealFunction, mu: &Capacity) -> Result<Value> {
    mu.check_space(f)?;
    f.is_nonnegative()?;
    let n = mu.n();
    if n > 10 {
        return Err(Error::TooLarge { n, max: 10 });
    }
    let mode = mu.mode().join(f.mode());
    let pts: Vec<usize> = f.positive_set().points().collect();
    if pts.is_empty() {
        return Ok(Value::zero(mode));
    }

    fn score(blocks: &[u32], pts: &[usize], f: &RealFunction, mu: &Capacity, mode: Mode) -> Value {
        let mut total = Value::zero(mode);
        for &b in blocks {
            let mut global = 0u32;
            let mut min: Option<Value> = None;
            for (j, &p) in pts.iter().enumerate() {
                if b & (1 << j) != 0 {
                    global |= 1 << p;
                    min = Some(match min {
                        None => f.value(p).clone(),
                        Some(m) => m.min_of(f.value(p)),
                    });
                }
            }
            let min = min.expect("nonempty block");
            total = &total + &(&min * mu.value(SubsetIndex(global)));
        }
        total
    }

    fn recurse(
        next: usize,
        blocks: &mut Vec<u32>,
        pts: &[usize],
        f: &RealFunction,
        mu: &Capacity,
        mode: Mode,
        best: &mut Option<Value>,
    ) {
        if next == pts.len() {
            let s = score(blocks, pts, f, mu, mode);
            let better = match best {
                None => true,
                Some(b) => s.total_cmp(b) == std::cmp::Ordering::Greater,
            };
            if better {
                *best = Some(s);
            }
            return;
        }
        for i in 0..blocks.len() {
            blocks[i] |= 1 << next;
            recurse(next + 1, blocks, pts, f, mu, mode, best);
            blocks[i] &= !(1u32 << next);
        }
        blocks.push(1 << next);
        recurse(next + 1, blocks, pts, f, mu, mode, best);
        blocks.pop();
    }

    let mut best = None;
    recurse(0, &mut Vec::new(), &pts, f, mu, mode, &mut best);
    Ok(best.expect("at least one partition"))
}

/// Pan-integral over a set: the integral of the masked function f * chi_A.
/// Nonnegative integrands use the nonnegative engine, signed ones the
/// symmetric definition.
pub fn pan_on_set(f: &RealFunction, mu: &Capacity, set: SubsetIndex) -> Result<IntegralResult> {
    mu.check_space(f)?;
    let masked = f.mask(set);
    if masked.is_nonnegative().is_ok() {
        pan_pos(&masked, mu)
    } else {
        pan_signed(&masked, mu)
    }
}

/// Symmetric pan-integral of a signed function:
/// integral of f+ minus integral of f-. Both half witnesses are retained.
pub fn pan_signed(f: &RealFunction, mu: &Capacity) -> Result<IntegralResult> {
    mu.check_space(f)?;
    let plus = pan_pos(&f.positive_part(), mu)?;
    let minus = pan_pos(&f.negative_part(), mu)?;
    let take = |r: IntegralResult| match r.witness {
        Some(IntegralWitness::Partition(p)) => p,
        _ => PartitionValuation::empty(),
    };
    Ok(IntegralResult {
        value: &plus.value - &minus.value,
        engine: IntegralEngine::Dp,
        witness: Some(IntegralWitness::Signed {
            positive: take(plus),
            negative: take(minus),
        }),
    })
}
