//! Soft-margin SVM trained by sequential minimal optimization.
//!
//! The dual problem
//!
//! ```text
//! max  W(a) = sum_i a_i - 1/2 sum_ij a_i a_j y_i y_j K(x_i, x_j)
//! s.t. 0 <= a_i <= C,  sum_i a_i y_i = 0
//! ```
//!
//! is solved two multipliers at a time. Each step picks the maximal
//! violating pair: with `F_t = y_t - sum_j a_j y_j K(x_t, x_j)`, the index
//! maximizing `F` over the "can move up" set and the one minimizing it over
//! the "can move down" set. The pair is optimized analytically and clipped
//! to the box. Training stops once the gap between the two is at most `tol`,
//! which bounds every per-sample KKT violation by `tol`.

use log::{debug, warn};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::kernel::Kernel;
use super::scaler::MinMaxScaler;
use crate::error::{Error, Result};
use crate::sample::ClassLabel;

/// Curvature used when the pair direction is flat or non-convex.
const TAU: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SmoParams {
    /// Box constraint.
    pub c: f64,
    pub kernel: Kernel,
    /// Stopping tolerance on the maximal KKT violation.
    pub tol: f64,
    /// Drives tie-breaking order during working-pair selection.
    pub seed: u64,
    /// Iteration cap; `None` uses `max(10_000_000, 100 n)`.
    pub max_iter: Option<usize>,
}

impl Default for SmoParams {
    fn default() -> Self {
        SmoParams {
            c: 1.0,
            kernel: Kernel::default(),
            tol: 1e-3,
            seed: 1,
            max_iter: None,
        }
    }
}

impl SmoParams {
    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "C must be positive, got {}",
                self.c
            )));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "tolerance must be positive, got {}",
                self.tol
            )));
        }
        self.kernel.validate()
    }
}

/// A trained SVM. Support vectors are stored already rescaled.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SvmModel {
    pub kernel: Kernel,
    pub c: f64,
    pub scaler: MinMaxScaler,
    pub support_vectors: Vec<Vec<f64>>,
    /// `a_i * y_i` for each support vector.
    pub dual_coefs: Vec<f64>,
    pub bias: f64,
}

impl SvmModel {
    pub fn dim(&self) -> usize {
        self.scaler.dim()
    }

    /// `sum_i coef_i K(sv_i, scale(x)) + b`.
    pub fn decision(&self, x: &[f64]) -> Result<f64> {
        if x.len() != self.dim() {
            return Err(Error::FeatureDimension {
                expected: self.dim(),
                found: x.len(),
            });
        }
        if x.iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument("non-finite feature value".into()));
        }
        let z = self.scaler.transform(x);
        let sum: f64 = self
            .support_vectors
            .iter()
            .zip(&self.dual_coefs)
            .map(|(sv, &coef)| coef * self.kernel.eval(sv, &z))
            .sum();
        Ok(sum + self.bias)
    }

    /// Positive scores are findings; a score of exactly zero is normal.
    pub fn predict(&self, x: &[f64]) -> Result<(ClassLabel, f64)> {
        let score = self.decision(x)?;
        let label = if score > 0.0 {
            ClassLabel::Finding
        } else {
            ClassLabel::Normal
        };
        Ok((label, score))
    }
}

/// Solver state after training, indexed like the training rows.
#[derive(Debug, Clone, PartialEq)]
pub struct SmoDiagnostics {
    pub alphas: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
    /// Dual objective `W` before the first update and after every update,
    /// accumulated from the exact per-update gains.
    pub objective_trace: Vec<f64>,
    /// Largest per-sample KKT violation, measured on `y f(x)`.
    pub max_kkt_violation: f64,
    /// Per-sample KKT violations.
    pub kkt_violations: Vec<f64>,
}

impl SmoDiagnostics {
    pub fn objective(&self) -> f64 {
        self.objective_trace.last().copied().unwrap_or(0.0)
    }

    /// `sum_i a_i y_i`.
    pub fn balance(&self, labels: &[ClassLabel]) -> f64 {
        self.alphas
            .iter()
            .zip(labels)
            .map(|(a, l)| a * l.sign())
            .sum()
    }
}

/// Trains on raw (unscaled) rows.
pub fn fit(rows: &[Vec<f64>], labels: &[ClassLabel], params: &SmoParams) -> Result<SvmModel> {
    fit_with_diagnostics(rows, labels, params).map(|(m, _)| m)
}

pub fn fit_with_diagnostics(
    rows: &[Vec<f64>],
    labels: &[ClassLabel],
    params: &SmoParams,
) -> Result<(SvmModel, SmoDiagnostics)> {
    params.validate()?;
    if rows.len() != labels.len() {
        return Err(Error::InvalidArgument(format!(
            "{} rows but {} labels",
            rows.len(),
            labels.len()
        )));
    }
    if !labels.iter().any(|l| l.is_positive()) || labels.iter().all(|l| l.is_positive()) {
        return Err(Error::Training(
            "training set must contain both classes".into(),
        ));
    }
    let dim = rows[0].len();
    for (k, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::FeatureDimension {
                expected: dim,
                found: row.len(),
            });
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(Error::NonFinite {
                id: format!("#{k}"),
            });
        }
    }

    let scaler = MinMaxScaler::fit(rows);
    let scaled: Vec<Vec<f64>> = rows.iter().map(|r| scaler.transform(r)).collect();
    let y: Vec<f64> = labels.iter().map(|l| l.sign()).collect();
    let gram = gram_matrix(&scaled, &params.kernel);

    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(params.seed));

    let sol = solve(&gram, &y, params, &order);

    let mut support_vectors = Vec::new();
    let mut dual_coefs = Vec::new();
    for (t, &a) in sol.alphas.iter().enumerate() {
        if a > 0.0 {
            support_vectors.push(scaled[t].clone());
            dual_coefs.push(a * y[t]);
        }
    }
    let model = SvmModel {
        kernel: params.kernel,
        c: params.c,
        scaler,
        support_vectors,
        dual_coefs,
        bias: sol.bias,
    };
    Ok((model, sol.diagnostics()))
}

fn gram_matrix(x: &[Vec<f64>], kernel: &Kernel) -> Vec<f64> {
    let n = x.len();
    let mut k = vec![0.0; n * n];
    for i in 0..n {
        for j in i..n {
            let v = kernel.eval(&x[i], &x[j]);
            k[i * n + j] = v;
            k[j * n + i] = v;
        }
    }
    k
}

struct Solution {
    alphas: Vec<f64>,
    bias: f64,
    iterations: usize,
    converged: bool,
    objective_trace: Vec<f64>,
    kkt_violations: Vec<f64>,
}

impl Solution {
    fn diagnostics(self) -> SmoDiagnostics {
        let max_kkt_violation = self.kkt_violations.iter().copied().fold(0.0, f64::max);
        SmoDiagnostics {
            alphas: self.alphas,
            iterations: self.iterations,
            converged: self.converged,
            objective_trace: self.objective_trace,
            max_kkt_violation,
            kkt_violations: self.kkt_violations,
        }
    }
}

fn can_move_up(a: f64, y: f64, c: f64) -> bool {
    if y > 0.0 {
        a < c
    } else {
        a > 0.0
    }
}

fn can_move_down(a: f64, y: f64, c: f64) -> bool {
    if y > 0.0 {
        a > 0.0
    } else {
        a < c
    }
}

/// `W(a) = -1/2 sum_t a_t (G_t - 1)` where `G = Q a - e`.
fn dual_objective(alpha: &[f64], grad: &[f64]) -> f64 {
    -0.5 * alpha
        .iter()
        .zip(grad)
        .map(|(a, g)| a * (g - 1.0))
        .sum::<f64>()
}

fn solve(gram: &[f64], y: &[f64], params: &SmoParams, order: &[usize]) -> Solution {
    let n = y.len();
    let c = params.c;
    let max_iter = params.max_iter.unwrap_or_else(|| 10_000_000.max(100 * n));
    let kern = |i: usize, j: usize| gram[i * n + j];

    let mut alpha = vec![0.0; n];
    // gradient of 1/2 a'Qa - e'a
    let mut grad = vec![-1.0; n];
    let mut trace: Vec<f64> = vec![0.0];
    let mut iterations = 0;
    let mut converged = false;

    while iterations < max_iter {
        let mut up: Option<(usize, f64)> = None;
        let mut down: Option<(usize, f64)> = None;
        for &t in order {
            let f = -y[t] * grad[t];
            if can_move_up(alpha[t], y[t], c) && up.is_none_or(|(_, best)| f > best) {
                up = Some((t, f));
            }
            if can_move_down(alpha[t], y[t], c) && down.is_none_or(|(_, best)| f < best) {
                down = Some((t, f));
            }
        }
        let (Some((i, f_up)), Some((j, f_down))) = (up, down) else {
            converged = true;
            break;
        };
        let gap = f_up - f_down;
        if gap <= params.tol {
            converged = true;
            break;
        }

        let curvature = kern(i, i) + kern(j, j) - 2.0 * kern(i, j);
        let eta = if curvature > 0.0 { curvature } else { TAU };
        // a_i += y_i t, a_j -= y_j t
        let bound_i = if y[i] > 0.0 { c - alpha[i] } else { alpha[i] };
        let bound_j = if y[j] > 0.0 { alpha[j] } else { c - alpha[j] };
        let step = (gap / eta).min(bound_i).min(bound_j);

        let new_i = if step == bound_i {
            if y[i] > 0.0 {
                c
            } else {
                0.0
            }
        } else {
            alpha[i] + y[i] * step
        };
        let new_j = if step == bound_j {
            if y[j] > 0.0 {
                0.0
            } else {
                c
            }
        } else {
            alpha[j] - y[j] * step
        };
        let delta_i = new_i - alpha[i];
        let delta_j = new_j - alpha[j];
        alpha[i] = new_i;
        alpha[j] = new_j;
        for t in 0..n {
            grad[t] += y[t] * (y[i] * delta_i * kern(t, i) + y[j] * delta_j * kern(t, j));
        }

        // exact change of W along the pair direction; nonnegative because
        // step <= gap / curvature whenever curvature > 0
        let gain = step * (gap - 0.5 * curvature * step);
        let w = trace.last().unwrap() + gain;
        debug_assert!(gain >= 0.0, "dual objective decreased by {}", -gain);
        debug_assert!(
            (w - dual_objective(&alpha, &grad)).abs() <= 1e-8 * w.abs().max(1.0),
            "objective trace drifted from the solver state"
        );
        trace.push(w);
        iterations += 1;
    }
    if !converged {
        warn!(
            "SMO stopped after {iterations} iterations without reaching tolerance {}",
            params.tol
        );
    }
    debug!("SMO finished after {iterations} iterations");

    let bias = compute_bias(&alpha, &grad, y, c);
    let kkt_violations = (0..n)
        .map(|t| {
            // y f(x_t) with f = u + b and u_t = y_t (G_t + 1)
            let margin = (grad[t] + 1.0) + y[t] * bias;
            if alpha[t] <= 0.0 {
                (1.0 - margin).max(0.0)
            } else if alpha[t] >= c {
                (margin - 1.0).max(0.0)
            } else {
                (margin - 1.0).abs()
            }
        })
        .collect();

    Solution {
        alphas: alpha,
        bias,
        iterations,
        converged,
        objective_trace: trace,
        kkt_violations,
    }
}

/// Mean of `F_t` over free multipliers, else the midpoint of the feasible interval.
fn compute_bias(alpha: &[f64], grad: &[f64], y: &[f64], c: f64) -> f64 {
    let mut free_sum = 0.0;
    let mut free_n = 0usize;
    let mut upper = f64::INFINITY;
    let mut lower = f64::NEG_INFINITY;
    for t in 0..alpha.len() {
        let f = -y[t] * grad[t];
        if alpha[t] > 0.0 && alpha[t] < c {
            free_sum += f;
            free_n += 1;
        }
        if can_move_up(alpha[t], y[t], c) {
            lower = lower.max(f);
        }
        if can_move_down(alpha[t], y[t], c) {
            upper = upper.min(f);
        }
    }
    if free_n > 0 {
        free_sum / free_n as f64
    } else if lower.is_finite() && upper.is_finite() {
        (lower + upper) / 2.0
    } else if lower.is_finite() {
        lower
    } else {
        upper
    }
}
