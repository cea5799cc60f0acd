//! A small dense LP solver specialized to the concave-integral problem.
//!
//! Primal (packing form): maximize sum_S lambda_S * mu(S) over lambda >= 0
//! subject to, for every point x, sum_{S containing x} lambda_S <= f(x).
//! Its dual is the covering problem: minimize sum_x f(x) * y_x over y >= 0
//! with sum_{x in S} y_x >= mu(S) for every nonempty S.
//!
//! The solver runs revised simplex on the primal with an n x n basis; the
//! 2^n - 1 set columns are never materialized, the pricing step scans
//! subsets lazily. Bland's rule (lowest variable id) picks the entering
//! column, which guarantees termination in exact mode; float mode adds a
//! 1e-12 feasibility tolerance and re-solves exactly in the (never observed)
//! event of a pivot-count blowout, so termination is unconditional.

use crate::capacity::Capacity;
use crate::error::{Error, Result};
use crate::function::RealFunction;
use crate::space::SubsetIndex;
use crate::value::{Mode, Value, LP_FEAS_TOL};

/// Nonnegative point weights certifying the concave-integral optimum:
/// sum_{x in S} y_x >= mu(S) for every nonempty S, and the objective
/// sum_x f(x) * y_x equals the primal value (strong duality).
#[derive(Clone, Debug, PartialEq)]
pub struct DualCertificate {
    pub weights: Vec<Value>,
    pub objective: Value,
}

impl DualCertificate {
    /// Check y >= 0 and cover feasibility against `mu` (suite tolerance in
    /// float mode, exact otherwise).
    pub fn is_feasible(&self, mu: &Capacity) -> bool {
        if self.weights.iter().any(Value::is_negative) {
            return false;
        }
        let mode = mu.mode();
        for s in mu.space().nonempty_subsets() {
            let covered = s
                .points()
                .fold(Value::zero(mode), |acc, p| &acc + &self.weights[p]);
            if !covered.ge_within(mu.value(s)) {
                return false;
            }
        }
        true
    }

    /// Slack of the cover constraint for one set: sum_{x in S} y_x - mu(S).
    pub fn cover_slack(&self, mu: &Capacity, s: SubsetIndex) -> Value {
        let covered = s
            .points()
            .fold(Value::zero(mu.mode()), |acc, p| &acc + &self.weights[p]);
        &covered - mu.value(s)
    }
}

/// Full output of one concave-integral solve.
#[derive(Clone, Debug)]
pub struct ConcaveSolution {
    /// Optimal primal value (= dual objective).
    pub value: Value,
    pub dual: DualCertificate,
    /// Sets with nonzero lambda in the optimal basis.
    pub support: Vec<(SubsetIndex, Value)>,
}

const SLACK_BASE: usize = 1 << 17; // var ids: sets first, then slacks

/// Solve the covering dual (and, implicitly, the packing primal). The
/// returned certificate is feasible and optimal.
pub fn solve_cover_dual(f: &RealFunction, mu: &Capacity) -> Result<DualCertificate> {
    Ok(solve_concave(f, mu)?.dual)
}

pub fn solve_concave(f: &RealFunction, mu: &Capacity) -> Result<ConcaveSolution> {
    mu.check_space(f)?;
    f.is_nonnegative()?;
    let mode = mu.mode().join(f.mode());
    match simplex(f, mu, mode) {
        Some(sol) => Ok(sol),
        None => {
            // float-mode pivot blowout: redo exactly, round the results
            let exact_f = to_mode_fn(f, Mode::Exact);
            let exact_mu = to_mode_cap(mu, Mode::Exact);
            let sol = simplex(&exact_f, &exact_mu, Mode::Exact)
                .expect("exact simplex with Bland's rule terminates");
            Ok(ConcaveSolution {
                value: sol.value.into_mode(Mode::Float),
                dual: DualCertificate {
                    weights: sol
                        .dual
                        .weights
                        .into_iter()
                        .map(|v| v.into_mode(Mode::Float))
                        .collect(),
                    objective: sol.dual.objective.into_mode(Mode::Float),
                },
                support: sol
                    .support
                    .into_iter()
                    .map(|(s, v)| (s, v.into_mode(Mode::Float)))
                    .collect(),
            })
        }
    }
}

fn to_mode_fn(f: &RealFunction, mode: Mode) -> RealFunction {
    RealFunction::new(
        f.space().clone(),
        f.values().iter().map(|v| v.clone().into_mode(mode)).collect(),
    )
    .unwrap()
}

fn to_mode_cap(mu: &Capacity, mode: Mode) -> Capacity {
    Capacity::from_dense(
        mu.space().clone(),
        mu.table().iter().map(|v| v.clone().into_mode(mode)).collect(),
    )
    .unwrap()
}

fn simplex(f: &RealFunction, mu: &Capacity, mode: Mode) -> Option<ConcaveSolution> {
    let n = mu.n();
    let nsets = (1usize << n) - 1;
    let zero = Value::zero(mode);
    let tol = |v: &Value| -> bool {
        // strictly positive beyond the pivot tolerance
        match v {
            Value::Exact(_) => v.is_positive(),
            Value::Float(x) => *x > LP_FEAS_TOL,
        }
    };

    // start from the all-slack basis, feasible because f >= 0
    let mut basis: Vec<usize> = (0..n).map(|x| SLACK_BASE + x).collect();
    let mut binv: Vec<Vec<Value>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Value::one(mode) } else { zero.clone() })
                .collect()
        })
        .collect();
    let mut xb: Vec<Value> = (0..n).map(|x| f.value(x).clone()).collect();

    let cost = |var: usize| -> Value {
        if var >= SLACK_BASE {
            zero.clone()
        } else {
            mu.value(SubsetIndex(var as u32)).clone()
        }
    };

    let max_pivots = if mode == Mode::Exact { usize::MAX } else { 20_000 };
    let mut pivots = 0usize;
    loop {
        // dual multipliers y = c_B * B^-1
        let mut y = vec![zero.clone(); n];
        for i in 0..n {
            let c = cost(basis[i]);
            if c.is_zero() {
                continue;
            }
            for j in 0..n {
                y[j] = &y[j] + &(&c * &binv[i][j]);
            }
        }

        // pricing, Bland order: set columns by ascending index, then slacks
        let mut entering = None;
        for s in 1..=nsets {
            let mut rc = mu.value(SubsetIndex(s as u32)).clone();
            for p in SubsetIndex(s as u32).points() {
                rc = &rc - &y[p];
            }
            if tol(&rc) {
                entering = Some(s);
                break;
            }
        }
        if entering.is_none() {
            for (x, yx) in y.iter().enumerate() {
                if tol(&(-yx)) {
                    entering = Some(SLACK_BASE + x);
                    break;
                }
            }
        }
        let Some(var) = entering else {
            // optimal: assemble value, certificate and primal support
            let mut value = zero.clone();
            let mut support = Vec::new();
            for i in 0..n {
                if basis[i] < SLACK_BASE && xb[i].is_positive() {
                    support.push((SubsetIndex(basis[i] as u32), xb[i].clone()));
                    value = &value + &(&cost(basis[i]) * &xb[i]);
                }
            }
            support.sort_by_key(|(s, _)| *s);
            let weights: Vec<Value> = y
                .into_iter()
                .map(|v| if v.is_negative() { zero.clone() } else { v })
                .collect();
            let objective = (0..n).fold(zero.clone(), |acc, x| {
                &acc + &(f.value(x) * &weights[x])
            });
            return Some(ConcaveSolution {
                value,
                dual: DualCertificate { weights, objective },
                support,
            });
        };

        // entering column in basis coordinates: d = B^-1 * a
        let column: Vec<Value> = if var >= SLACK_BASE {
            (0..n)
                .map(|i| {
                    if i == var - SLACK_BASE {
                        Value::one(mode)
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        } else {
            (0..n)
                .map(|i| {
                    if SubsetIndex(var as u32).contains(i) {
                        Value::one(mode)
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        };
        let d: Vec<Value> = (0..n)
            .map(|i| {
                (0..n).fold(zero.clone(), |acc, j| &acc + &(&binv[i][j] * &column[j]))
            })
            .collect();

        // ratio test; ties by lowest basis var id in exact mode (Bland),
        // by larger pivot magnitude in float mode
        let mut leave: Option<usize> = None;
        let mut best_ratio: Option<Value> = None;
        for i in 0..n {
            if !tol(&d[i]) {
                continue;
            }
            let ratio = &xb[i] / &d[i];
            let replace = match &best_ratio {
                None => true,
                Some(b) => match ratio.total_cmp(b) {
                    std::cmp::Ordering::Less => true,
                    std::cmp::Ordering::Greater => false,
                    std::cmp::Ordering::Equal => {
                        let r = leave.unwrap();
                        if mode == Mode::Exact {
                            basis[i] < basis[r]
                        } else {
                            d[i].total_cmp(&d[r]) == std::cmp::Ordering::Greater
                        }
                    }
                },
            };
            if replace {
                best_ratio = Some(ratio);
                leave = Some(i);
            }
        }
        // the packing polytope is bounded, so some d_i must be positive
        let r = leave.expect("concave-integral LP is bounded");

        let theta = best_ratio.unwrap();
        let piv = d[r].clone();
        for j in 0..n {
            binv[r][j] = &binv[r][j] / &piv;
        }
        xb[r] = theta;
        for i in 0..n {
            if i == r || d[i].is_zero() {
                continue;
            }
            for j in 0..n {
                binv[i][j] = &binv[i][j] - &(&d[i] * &binv[r][j]);
            }
            xb[i] = &xb[i] - &(&d[i] * &xb[r]);
            if mode == Mode::Float && xb[i].is_negative() {
                xb[i] = zero.clone(); // rounding dust
            }
        }
        basis[r] = var;

        pivots += 1;
        if pivots >= max_pivots {
            return None;
        }
    }
}

/// Independent primal oracle for n <= 5: enumerate candidate bases (support
/// sets of size k <= n plus k tight rows), solve the induced square systems
/// and keep the best feasible vertex value.
pub fn primal_enumeration_oracle(f: &RealFunction, mu: &Capacity) -> Result<Value> {
    Ok(primal_enumeration_witness(f, mu)?.0)
}

/// Oracle variant that also reports the supporting sets of the best vertex.
pub fn primal_enumeration_witness(
    f: &RealFunction,
    mu: &Capacity,
) -> Result<(Value, Vec<(SubsetIndex, Value)>)> {
    mu.check_space(f)?;
    f.is_nonnegative()?;
    let n = mu.n();
    if n > 5 {
        return Err(Error::TooLarge { n, max: 5 });
    }
    let mode = mu.mode().join(f.mode());
    let zero = Value::zero(mode);
    let nsets = (1u32 << n) - 1;

    let mut best = zero.clone(); // lambda = 0 is always feasible
    let mut best_support: Vec<(SubsetIndex, Value)> = Vec::new();

    let sets: Vec<u32> = (1..=nsets).collect();
    for k in 1..=n {
        let mut support_combo = Combinations::new(sets.len(), k);
        while let Some(support_idx) = support_combo.next() {
            let support: Vec<u32> = support_idx.iter().map(|&i| sets[i]).collect();
            let mut row_combo = Combinations::new(n, k);
            while let Some(rows) = row_combo.next() {
                // solve: for each tight row x, sum over chosen sets containing x of lambda = f(x)
                let mut m: Vec<Vec<Value>> = rows
                    .iter()
                    .map(|&x| {
                        support
                            .iter()
                            .map(|&s| {
                                if SubsetIndex(s).contains(x) {
                                    Value::one(mode)
                                } else {
                                    zero.clone()
                                }
                            })
                            .collect()
                    })
                    .collect();
                let mut rhs: Vec<Value> = rows.iter().map(|&x| f.value(x).clone()).collect();
                let Some(lambda) = solve_square(&mut m, &mut rhs) else {
                    continue;
                };
                // feasibility: lambda >= 0 and every point constraint holds
                let nonneg = lambda.iter().all(|l| match l {
                    Value::Exact(_) => !l.is_negative(),
                    Value::Float(x) => *x >= -1e-9,
                });
                if !nonneg {
                    continue;
                }
                let mut feasible = true;
                for x in 0..n {
                    let mut load = zero.clone();
                    for (j, &s) in support.iter().enumerate() {
                        if SubsetIndex(s).contains(x) {
                            load = &load + &lambda[j];
                        }
                    }
                    if !f.value(x).ge_within(&load) {
                        feasible = false;
                        break;
                    }
                }
                if !feasible {
                    continue;
                }
                let value = support
                    .iter()
                    .zip(&lambda)
                    .fold(zero.clone(), |acc, (&s, l)| {
                        &acc + &(l * mu.value(SubsetIndex(s)))
                    });
                if value.total_cmp(&best) == std::cmp::Ordering::Greater {
                    best = value;
                    best_support = support
                        .iter()
                        .zip(&lambda)
                        .filter(|(_, l)| l.is_positive())
                        .map(|(&s, l)| (SubsetIndex(s), l.clone()))
                        .collect();
                }
            }
        }
    }
    Ok((best, best_support))
}

/// Gaussian elimination with partial pivoting; None when singular.
fn solve_square(m: &mut [Vec<Value>], rhs: &mut [Value]) -> Option<Vec<Value>> {
    let k = rhs.len();
    let singular = |v: &Value| match v {
        Value::Exact(_) => v.is_zero(),
        Value::Float(x) => x.abs() <= LP_FEAS_TOL,
    };
    for col in 0..k {
        let pivot_row = (col..k)
            .filter(|&r| !singular(&m[r][col]))
            .max_by(|&a, &b| {
                m[a][col].abs().total_cmp(&m[b][col].abs())
            })?;
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        let piv = m[col][col].clone();
        for j in col..k {
            m[col][j] = &m[col][j] / &piv;
        }
        rhs[col] = &rhs[col] / &piv;
        for r in 0..k {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for j in col..k {
                m[r][j] = &m[r][j] - &(&factor * &m[col][j]);
            }
            rhs[r] = &rhs[r] - &(&factor * &rhs[col]);
        }
    }
    Some(rhs.to_vec())
}

/// Lexicographic k-combinations of 0..n.
struct Combinations {
    n: usize,
    k: usize,
    state: Option<Vec<usize>>,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        let state = if k <= n {
            Some((0..k).collect())
        } else {
            None
        };
        Combinations { n, k, state }
    }

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.state.clone()?;
        // advance
        let mut next = current.clone();
        let mut i = self.k;
        loop {
            if i == 0 {
                self.state = None;
                break;
            }
            i -= 1;
            if next[i] < self.n - (self.k - i) {
                next[i] += 1;
                for j in (i + 1)..self.k {
                    next[j] = next[j - 1] + 1;
                }
                self.state = Some(next);
                break;
            }
        }
        Some(current)
    }
}
