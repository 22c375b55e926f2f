use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::model::{cup_eval, CohomologyModel};
use crate::exterior::{int, Matrix, Scalar, SymmetricMatrix};
use crate::{Error, Result};

pub const DEFAULT_BOUND: u32 = 16;

/// Cap on the number of lattice points visited by one search. Larger bounds
/// are clipped to the largest shell that fits and reported in `bound_used`.
pub const SEARCH_BUDGET: u64 = 20_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum VerdictStatus {
    Admits,
    No,
    Unknown,
}

impl std::fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            VerdictStatus::Admits => "ADMITS",
            VerdictStatus::No => "NO",
            VerdictStatus::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: VerdictStatus,
    /// `[]` for flag-only criteria, `[e]` for type 4, `[e, f]` for types 1 and 2.
    pub witness: Option<Vec<Vec<i64>>>,
    pub bound_used: u32,
    pub reason: String,
}

impl Verdict {
    fn admits(witness: Vec<Vec<i64>>, bound_used: u32, reason: impl Into<String>) -> Self {
        Self { status: VerdictStatus::Admits, witness: Some(witness), bound_used, reason: reason.into() }
    }

    fn no(bound_used: u32, reason: impl Into<String>) -> Self {
        Self { status: VerdictStatus::No, witness: None, bound_used, reason: reason.into() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Hypothesis(what.into()))
    }
}

/// Decides whether `model` carries a global form of the given type.
pub fn check_type(model: &CohomologyModel, type_id: u8, bound: u32) -> Result<Verdict> {
    model.validate()?;
    match type_id {
        5..=8 => {
            require(model.orientable, "manifold must be orientable")?;
            Ok(if model.spin {
                Verdict::admits(vec![], 0, "orientable and spin")
            } else {
                Verdict::no(0, "not spin")
            })
        }
        3 => {
            require(model.orientable, "manifold must be orientable")?;
            Ok(if model.w3_zero {
                Verdict::admits(vec![], 0, "W3 vanishes")
            } else {
                Verdict::no(0, "W3 does not vanish")
            })
        }
        4 => {
            require(model.orientable, "manifold must be orientable")?;
            if !model.spin {
                return Ok(Verdict::no(0, "not spin"));
            }
            let Some(half) = halve(&model.p1) else {
                return Ok(Verdict::no(0, "p1 is not divisible by 2"));
            };
            let problem = Problem::new(model, 1, half, false);
            Ok(problem.solve(bound, |x| cup_eval(model, x, x).expect("lengths match")))
        }
        2 => {
            require(model.simply_connected, "manifold must be simply connected")?;
            if !model.spin {
                return Ok(Verdict::no(0, "not spin"));
            }
            let Some(half) = halve(&model.p1) else {
                return Ok(Verdict::no(0, "p1 is not divisible by 2"));
            };
            let problem = Problem::new(model, 2, half, false);
            Ok(problem.solve(bound, |x| type2_lhs(model, &x[..model.r2], &x[model.r2..])))
        }
        1 => {
            require(model.simply_connected, "manifold must be simply connected")?;
            let w: Vec<i64> = model.w2.iter().map(|&b| i64::from(b)).collect();
            let ww = cup_eval(model, &w, &w)?;
            if model.p1.iter().zip(&ww).any(|(p, q)| (p - q).rem_euclid(2) != 0) {
                return Ok(Verdict::no(0, "p1 differs from w2^2 mod 2"));
            }
            let problem = Problem::new(model, 2, model.p1.clone(), true);
            Ok(problem.solve(bound, |x| type1_lhs(model, &x[..model.r2], &x[model.r2..])))
        }
        _ => Err(Error::Constraint(format!("type must be in 1..=8, got {type_id}"))),
    }
}

pub fn check_type_default(model: &CohomologyModel, type_id: u8) -> Result<Verdict> {
    check_type(model, type_id, DEFAULT_BOUND)
}

/// Substitutes a witness into the criterion for `type_id`.
pub fn verify_witness(model: &CohomologyModel, type_id: u8, witness: &[Vec<i64>]) -> Result<bool> {
    let r2 = model.r2;
    Ok(match (type_id, witness) {
        (5..=8, []) => model.orientable && model.spin,
        (3, []) => model.w3_zero,
        (4, [e]) => {
            model.spin && cup_eval(model, e, e)?.iter().map(|v| 2 * v).eq(model.p1.iter().copied())
        }
        (2, [e, f]) if e.len() == r2 && f.len() == r2 => {
            model.spin && type2_lhs(model, e, f).iter().map(|v| 2 * v).eq(model.p1.iter().copied())
        }
        (1, [e, f]) if e.len() == r2 && f.len() == r2 => {
            let parity = e.iter().zip(f).zip(&model.w2).all(|((a, b), &w)| (a + b - i64::from(w)).rem_euclid(2) == 0);
            parity && type1_lhs(model, e, f) == model.p1
        }
        _ => false,
    })
}

fn halve(p: &[i64]) -> Option<Vec<i64>> {
    p.iter().map(|v| (v % 2 == 0).then_some(v / 2)).collect()
}

fn type2_lhs(model: &CohomologyModel, e: &[i64], f: &[i64]) -> Vec<i64> {
    let ee = cup_eval(model, e, e).expect("lengths match");
    let ff = cup_eval(model, f, f).expect("lengths match");
    let ef = cup_eval(model, e, f).expect("lengths match");
    (0..model.r4).map(|k| ee[k] + ff[k] + ef[k]).collect()
}

fn type1_lhs(model: &CohomologyModel, e: &[i64], f: &[i64]) -> Vec<i64> {
    let ee = cup_eval(model, e, e).expect("lengths match");
    let ff = cup_eval(model, f, f).expect("lengths match");
    (0..model.r4).map(|k| ee[k] + ff[k]).collect()
}

/// `q_k(x) = target_k` for every component `k`, with `x` in `Z^n`.
struct Problem<'a> {
    model: &'a CohomologyModel,
    n: usize,
    copies: usize,
    target: Vec<i64>,
    /// Gram matrices of the `q_k`.
    grams: Vec<Matrix>,
    parity: bool,
}

impl<'a> Problem<'a> {
    /// `copies` is 1 for `x = e` and 2 for `x = (e, f)`.
    fn new(model: &'a CohomologyModel, copies: usize, target: Vec<i64>, parity: bool) -> Self {
        let r2 = model.r2;
        let n = copies * r2;
        let grams = (0..model.r4)
            .map(|k| {
                Matrix::from_fn(n, n, |a, b| {
                    let (ca, ia) = (a / r2.max(1), a % r2.max(1));
                    let (cb, ib) = (b / r2.max(1), b % r2.max(1));
                    let c = int(model.cup[ia][ib][k]);
                    match (copies, ca == cb, parity) {
                        (1, _, _) | (_, true, _) => c,
                        // e.f enters type 2 once, so the Gram entry is half of it.
                        (_, false, false) => c / int(2),
                        (_, false, true) => Scalar::zero(),
                    }
                })
            })
            .collect();
        Self { model, n, copies, target, grams, parity }
    }

    /// Per-coordinate bounds `|x_i| ≤ B_i` valid for every solution, from a
    /// definite component. `Err` carries a reason when no solution can exist.
    fn box_bounds(&self) -> std::result::Result<Option<Vec<u64>>, String> {
        if self.n == 0 {
            return Ok(Some(vec![]));
        }
        let mut best: Option<Vec<u64>> = None;
        for (k, g) in self.grams.iter().enumerate() {
            let sig = SymmetricMatrix::new(g.clone()).expect("Gram matrix is symmetric").signature();
            let sign = if sig.pos == self.n {
                1
            } else if sig.neg == self.n {
                -1
            } else {
                continue;
            };
            let t = sign * self.target[k];
            if t < 0 {
                return Err(format!("component {k} is definite with target of the wrong sign"));
            }
            let inv = g.inverse().expect("definite matrices are invertible");
            let bounds: Vec<u64> = (0..self.n)
                .map(|i| {
                    let v: Scalar = &inv[(i, i)] * int(sign) * int(t);
                    let floor = v.numer() / v.denom();
                    floor.sqrt().to_u64().unwrap_or(u64::MAX)
                })
                .collect();
            best = Some(match best {
                None => bounds,
                Some(b) => b.iter().zip(&bounds).map(|(x, y)| *x.min(y)).collect(),
            });
        }
        Ok(best)
    }

    fn parity_ok(&self, x: &[i64]) -> bool {
        if !self.parity {
            return true;
        }
        let r2 = self.model.r2;
        (0..r2).all(|i| (x[i] + x[r2 + i] - i64::from(self.model.w2[i])).rem_euclid(2) == 0)
    }

    fn witness(&self, x: &[i64]) -> Vec<Vec<i64>> {
        if self.copies == 1 {
            vec![x.to_vec()]
        } else {
            vec![x[..self.model.r2].to_vec(), x[self.model.r2..].to_vec()]
        }
    }

    fn solve(&self, bound: u32, lhs: impl Fn(&[i64]) -> Vec<i64>) -> Verdict {
        if self.model.r4 == 0 {
            // Every pair solves the equation; pick the smallest parity-compatible one.
            let mut x = vec![0i64; self.n];
            if self.parity {
                for (i, &w) in self.model.w2.iter().enumerate() {
                    x[i] = i64::from(w);
                }
            }
            return Verdict::admits(self.witness(&x), 0, "H4 has rank 0");
        }
        let boxes = match self.box_bounds() {
            Ok(b) => b,
            Err(reason) => return Verdict::no(0, reason),
        };
        let caps: Vec<u64> = boxes.clone().unwrap_or_else(|| vec![u64::MAX; self.n]);
        let effective = effective_bound(self.n, u64::from(bound), &caps);
        let complete = caps.iter().all(|&c| c <= effective);
        let solves = |x: &[i64]| self.parity_ok(x) && lhs(x) == self.target;
        if let Some(x) = Shells::new(self.n, effective, &caps).find(|x| solves(x)) {
            return Verdict::admits(self.witness(&x), effective as u32, "solution found by lattice search");
        }
        if self.n == 0 {
            return Verdict::no(effective as u32, "the only class is zero");
        }
        // A definite component confines every solution to a finite box; when
        // the bound did not cover it, scanning the rest still decides NO.
        let finite = boxes.as_ref().is_some_and(|b| {
            let top = b.iter().copied().max().unwrap_or(0);
            effective_bound(self.n, top, b) == top
        });
        if complete || (finite && !Shells::new(self.n, u64::MAX, &caps).any(|x| solves(&x))) {
            return Verdict::no(effective as u32, "definite form bounds exhausted");
        }
        Verdict {
            status: VerdictStatus::Unknown,
            witness: None,
            bound_used: effective as u32,
            reason: "no solution within the bound".into(),
        }
    }
}

/// Largest `s ≤ bound` for which the clipped box `[-min(s, c_i), min(s, c_i)]`
/// stays within the search budget.
fn effective_bound(n: usize, bound: u64, caps: &[u64]) -> u64 {
    let count = |s: u64| -> u64 {
        caps.iter()
            .take(n)
            .try_fold(1u64, |acc, &c| acc.checked_mul(2 * s.min(c) + 1))
            .unwrap_or(u64::MAX)
    };
    let mut s = bound;
    while s > 0 && count(s) > SEARCH_BUDGET {
        s -= 1;
    }
    s
}

/// Lattice points ordered by `‖x‖∞`, then lexicographically.
struct Shells {
    n: usize,
    max: u64,
    caps: Vec<i64>,
    shell: u64,
    current: Option<Vec<i64>>,
}

impl Shells {
    fn new(n: usize, max: u64, caps: &[u64]) -> Self {
        let caps = caps.iter().map(|&c| c.min(max) as i64).collect();
        let mut s = Self { n, max, caps, shell: 0, current: None };
        s.current = Some(vec![0; n]);
        s
    }

    fn lo(&self, i: usize) -> i64 {
        -self.caps[i].min(self.shell as i64)
    }

    fn first_in_shell(&mut self) -> Option<Vec<i64>> {
        let x: Vec<i64> = (0..self.n).map(|i| self.lo(i)).collect();
        if self.on_shell(&x) {
            Some(x)
        } else {
            self.advance(x)
        }
    }

    fn on_shell(&self, x: &[i64]) -> bool {
        x.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0) == self.shell
    }

    /// Next point after `x` in the current shell.
    fn advance(&self, mut x: Vec<i64>) -> Option<Vec<i64>> {
        loop {
            let mut i = self.n;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                let hi = self.caps[i].min(self.shell as i64);
                if x[i] < hi {
                    x[i] += 1;
                    break;
                }
                x[i] = self.lo(i);
            }
            if self.on_shell(&x) {
                return Some(x);
            }
        }
    }
}

impl Iterator for Shells {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        let out = self.current.take()?;
        let mut next = self.advance(out.clone());
        while next.is_none() {
            self.shell += 1;
            if self.shell > self.max || self.caps.iter().all(|&c| (c as u64) < self.shell) {
                break;
            }
            next = self.first_in_shell();
        }
        self.current = next;
        Some(out)
    }
}
