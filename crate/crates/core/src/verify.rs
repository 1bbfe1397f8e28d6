//! Independent numerical checks.
//!
//! An embedded Dormand–Prince 5(4) integrator with PI step control integrates
//! both the radial equation and the critical autonomous equation. Closed forms
//! are checked pointwise through the radial residual and through the first
//! integral recovered from `(z, z′)`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::lane_emden::{self, CriticalCase, PhasePoint, RadialProfile};
use crate::regimes;
use crate::solutions::{grid, ClosedFormSolution, SolutionTrace, Spacing, TraceMeta};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntegratorConfig {
    pub rel_tol: f64,
    pub abs_tol: f64,
    pub max_steps: usize,
    /// Radius at which the regular series start hands over to the integrator.
    pub series_start_radius: f64,
    /// `|state[0]|` above this is reported as a movable singularity.
    pub blow_up: f64,
}

impl Default for IntegratorConfig {
    fn default() -> Self {
        IntegratorConfig {
            rel_tol: 1e-10,
            abs_tol: 1e-12,
            max_steps: 1_000_000,
            series_start_radius: 1e-6,
            blow_up: 1e8,
        }
    }
}

impl IntegratorConfig {
    pub fn with_tolerance(rel_tol: f64, abs_tol: f64) -> Self {
        IntegratorConfig {
            rel_tol,
            abs_tol,
            ..Default::default()
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol <= 1e-3) {
            return domain(format!("rel_tol = {} must lie in (0, 1e-3]", self.rel_tol));
        }
        if !(self.abs_tol >= 0.0) {
            return domain("abs_tol must be non-negative");
        }
        if !(self.series_start_radius > 0.0) {
            return domain("series_start_radius must be positive");
        }
        Ok(())
    }
}

/// Accepted steps of one integration. `states[i] = (u, u′)` at `ts[i]`;
/// `errors[i]` is the normalized local error estimate (≤ 1 when accepted).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NumericTrajectory {
    pub ts: Vec<f64>,
    pub states: Vec<[f64; 2]>,
    pub errors: Vec<f64>,
}

impl NumericTrajectory {
    pub fn last(&self) -> (f64, [f64; 2]) {
        let n = self.ts.len() - 1;
        (self.ts[n], self.states[n])
    }

    pub fn steps(&self) -> usize {
        self.ts.len() - 1
    }

    /// A radial trajectory as an `(x, θ)` trace.
    pub fn radial_trace(&self, d: i64, label: &str) -> SolutionTrace {
        SolutionTrace {
            xs: self.ts.clone(),
            thetas: self.states.iter().map(|s| Some(s[0])).collect(),
            meta: TraceMeta {
                label: label.to_string(),
                d,
                solution: None,
            },
        }
    }

    /// An autonomous trajectory mapped back to `(x, θ)`, ascending in `x`.
    pub fn autonomous_trace(&self, case: &CriticalCase, label: &str) -> SolutionTrace {
        let mut pts: Vec<(f64, f64)> = self
            .ts
            .iter()
            .zip(&self.states)
            .map(|(&y, s)| {
                let (th, x) = lane_emden::from_autonomous(
                    case,
                    &PhasePoint {
                        z: s[0],
                        zp: s[1],
                        y,
                    },
                );
                (x, th)
            })
            .collect();
        pts.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        SolutionTrace {
            xs: pts.iter().map(|p| p.0).collect(),
            thetas: pts.iter().map(|p| Some(p.1)).collect(),
            meta: TraceMeta {
                label: label.to_string(),
                d: case.d(),
                solution: None,
            },
        }
    }
}

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const SAFETY: f64 = 0.9;
const PI_ALPHA: f64 = 0.7 / 5.0;
const PI_BETA: f64 = 0.4 / 5.0;

type State = [f64; 2];

fn axpy(y: &State, h: f64, terms: &[(f64, &State)]) -> State {
    let mut out = *y;
    for &(c, k) in terms {
        out[0] += h * c * k[0];
        out[1] += h * c * k[1];
    }
    out
}

fn error_norm(err: &State, y0: &State, y1: &State, cfg: &IntegratorConfig) -> f64 {
    let mut acc = 0.0;
    for i in 0..2 {
        let sc = cfg.abs_tol + cfg.rel_tol * y0[i].abs().max(y1[i].abs());
        acc += (err[i] / sc).powi(2);
    }
    (acc / 2.0).sqrt()
}

fn initial_step<F: Fn(f64, &State) -> State>(
    f: &F,
    t0: f64,
    y0: &State,
    f0: &State,
    cfg: &IntegratorConfig,
) -> f64 {
    let rms = |v: &State| {
        let mut acc = 0.0;
        for i in 0..2 {
            let sc = cfg.abs_tol + cfg.rel_tol * y0[i].abs();
            acc += (v[i] / sc).powi(2);
        }
        (acc / 2.0).sqrt()
    };
    let d0 = rms(y0);
    let d1 = rms(f0);
    let h0 = if d0 < 1e-5 || d1 < 1e-5 {
        1e-6
    } else {
        0.01 * d0 / d1
    };
    let y1 = axpy(y0, h0, &[(1.0, f0)]);
    let f1 = f(t0 + h0, &y1);
    let diff = [f1[0] - f0[0], f1[1] - f0[1]];
    let d2 = rms(&diff) / h0;
    let h1 = if d1.max(d2) <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / d1.max(d2)).powf(0.2)
    };
    (100.0 * h0).min(h1)
}

/// Integrates `u′ = f(t, u)` from `t0` to `t_end` (either direction).
fn dopri5<F: Fn(f64, &State) -> State>(
    f: F,
    t0: f64,
    y0: State,
    t_end: f64,
    cfg: &IntegratorConfig,
) -> Result<NumericTrajectory> {
    let dir = if t_end >= t0 { 1.0 } else { -1.0 };
    let span = (t_end - t0).abs();
    let mut traj = NumericTrajectory {
        ts: vec![t0],
        states: vec![y0],
        errors: vec![0.0],
    };
    if span == 0.0 {
        return Ok(traj);
    }
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut h = initial_step(&f, t0, &y, &k1, cfg).min(span);
    let mut err_prev: f64 = 1e-4;
    let mut steps = 0usize;

    while (t_end - t) * dir > 0.0 {
        if steps >= cfg.max_steps {
            return Err(Error::StepLimitExceeded { steps, at: t });
        }
        steps += 1;
        let remaining = (t_end - t).abs();
        let last = h >= remaining;
        if last {
            h = remaining;
        }
        if h <= 16.0 * f64::EPSILON * t.abs().max(1.0) {
            if last {
                break;
            }
            return Err(Error::BlowUpDetected { at: t });
        }
        let hs = dir * h;
        let k2 = f(t + C2 * hs, &axpy(&y, hs, &[(A21, &k1)]));
        let k3 = f(t + C3 * hs, &axpy(&y, hs, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(
            t + C4 * hs,
            &axpy(&y, hs, &[(A41, &k1), (A42, &k2), (A43, &k3)]),
        );
        let k5 = f(
            t + C5 * hs,
            &axpy(&y, hs, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let k6 = f(
            t + hs,
            &axpy(
                &y,
                hs,
                &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)],
            ),
        );
        let y_new = axpy(
            &y,
            hs,
            &[(B1, &k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)],
        );
        let k7 = f(t + hs, &y_new);
        let mut e = [0.0; 2];
        for i in 0..2 {
            e[i] =
                hs * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
        }
        let err = error_norm(&e, &y, &y_new, cfg);
        if !err.is_finite() {
            h *= 0.2;
            continue;
        }
        if err <= 1.0 {
            t = if last { t_end } else { t + hs };
            y = y_new;
            k1 = k7;
            traj.ts.push(t);
            traj.states.push(y);
            traj.errors.push(err);
            if !(y[0].abs() <= cfg.blow_up) {
                return Err(Error::BlowUpDetected { at: t });
            }
            let factor = SAFETY * err.max(1e-10).powf(-PI_ALPHA) * err_prev.powf(PI_BETA);
            err_prev = err.max(1e-4);
            h *= factor.clamp(0.2, 10.0);
        } else {
            h *= (SAFETY * err.powf(-0.2)).max(0.2);
        }
    }
    Ok(traj)
}

/// Integrates `θ″ + (d−1)/x·θ′ + θ^p = 0` from `θ(0) = θ0`, `θ′(0) = 0`.
///
/// The origin is a regular singular point, so the integration starts at
/// `series_start_radius` from `θ ≈ θ0 − θ0^p·x²/(2d)`.
pub fn integrate_radial(
    d: i64,
    p: i64,
    theta0: f64,
    x_max: f64,
    cfg: &IntegratorConfig,
) -> Result<NumericTrajectory> {
    cfg.validate()?;
    if !theta0.is_finite() {
        return domain("theta0 must be finite");
    }
    if d < 1 || p < 1 {
        return domain(format!("invalid (d, p) = ({d}, {p})"));
    }
    let r0 = cfg.series_start_radius;
    if !(x_max > r0) {
        return domain(format!(
            "x_max = {x_max} must exceed the series start radius {r0}"
        ));
    }
    let df = d as f64;
    let forcing = theta0.powi(p as i32);
    let start = [theta0 - forcing * r0 * r0 / (2.0 * df), -forcing * r0 / df];
    let pi = p as i32;
    dopri5(
        move |x, s| [s[1], -(df - 1.0) / x * s[1] - s[0].powi(pi)],
        r0,
        start,
        x_max,
        cfg,
    )
}

/// Integrates `z″ = (d−2)²/4·(z − z^p)` over `y_span = (y0, y1)`.
pub fn integrate_autonomous(
    case: &CriticalCase,
    z0: f64,
    zp0: f64,
    y_span: (f64, f64),
    cfg: &IntegratorConfig,
) -> Result<NumericTrajectory> {
    cfg.validate()?;
    if !(z0.is_finite() && zp0.is_finite() && y_span.0.is_finite() && y_span.1.is_finite()) {
        return domain("initial state and span must be finite");
    }
    let rate = case.autonomous_rate();
    let pi = case.p() as i32;
    dopri5(
        move |_, s| [s[1], rate * (s[0] - s[0].powi(pi))],
        y_span.0,
        [z0, zp0],
        y_span.1,
        cfg,
    )
}

/// Residual of the radial equation at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualSample {
    pub x: f64,
    pub residual: f64,
    /// `|θ″| + |(d−1)/x·θ′| + |θ|^p`.
    pub scale: f64,
}

impl ResidualSample {
    pub fn relative(&self) -> f64 {
        if self.scale > 0.0 {
            self.residual.abs() / self.scale
        } else {
            self.residual.abs()
        }
    }
}

/// Finite-difference step used by [`residual_radial`].
///
/// The second-derivative stencil loses about `5ε/h²` to rounding, so `1e-4`
/// would floor the relative residual near `3e-8`; `1e-3` balances that
/// against the `h⁴` truncation term.
pub fn fd_step(x: f64) -> f64 {
    (1e-3 * x.max(1.0)).min(x / 4.0)
}

/// Relative step used by [`check_closed_form`]. The elliptic families depend
/// on `ln(Bx)`, so a step proportional to `x` keeps the stencil a fixed width
/// in the elliptic argument.
pub fn log_fd_step(x: f64) -> f64 {
    1e-4 * x
}

/// `(θ(x), θ′(x), θ″(x))`, analytic derivatives when available, otherwise
/// fourth-order central differences with step [`fd_step`].
pub fn profile_jet<P: RadialProfile + ?Sized>(theta: &P, x: f64) -> Result<(f64, f64, f64)> {
    profile_jet_with_step(theta, x, fd_step(x))
}

pub fn profile_jet_with_step<P: RadialProfile + ?Sized>(
    theta: &P,
    x: f64,
    h: f64,
) -> Result<(f64, f64, f64)> {
    let v = theta.value(x)?;
    if let Some((d1, d2)) = theta.derivatives(x) {
        return Ok((v, d1, d2));
    }
    let fm2 = theta.value(x - 2.0 * h)?;
    let fm1 = theta.value(x - h)?;
    let fp1 = theta.value(x + h)?;
    let fp2 = theta.value(x + 2.0 * h)?;
    let d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    let d2 = (-fm2 + 16.0 * fm1 - 30.0 * v + 16.0 * fp1 - fp2) / (12.0 * h * h);
    Ok((v, d1, d2))
}

fn residual_from_jet(x: f64, jet: (f64, f64, f64), d: i64, p: i64) -> ResidualSample {
    let (v, d1, d2) = jet;
    let nonlinear = v.powi(p as i32);
    let drift = (d as f64 - 1.0) / x * d1;
    ResidualSample {
        x,
        residual: d2 + drift + nonlinear,
        scale: d2.abs() + drift.abs() + nonlinear.abs(),
    }
}

/// `θ″ + (d−1)/x·θ′ + θ^p` at each sample point. Evaluation failures give a
/// non-finite residual for that point.
pub fn residual_radial<P: RadialProfile + ?Sized>(
    theta: &P,
    d: i64,
    p: i64,
    xs: &[f64],
) -> Vec<ResidualSample> {
    xs.iter()
        .map(|&x| match (x > 0.0).then(|| profile_jet(theta, x)) {
            Some(Ok(jet)) => residual_from_jet(x, jet, d, p),
            _ => ResidualSample {
                x,
                residual: f64::NAN,
                scale: f64::NAN,
            },
        })
        .collect()
}

/// Largest relative residual; non-finite samples count as infinite.
pub fn max_relative_residual(samples: &[ResidualSample]) -> f64 {
    samples
        .iter()
        .map(|s| {
            let r = s.relative();
            if r.is_finite() {
                r
            } else {
                f64::INFINITY
            }
        })
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    /// Bound on the relative radial residual.
    pub residual_tol: f64,
    /// `|recovered_C − C| < c_tol·(1 + |C|)`.
    pub c_tol: f64,
    /// Minimum distance of the `℘` argument from a pole.
    pub pole_margin: f64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            residual_tol: 1e-6,
            c_tol: 1e-5,
            pole_margin: 1e-3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub family: String,
    pub d: i64,
    pub expected_c: f64,
    pub recovered_c: f64,
    pub max_residual: f64,
    pub max_first_integral_drift: f64,
    pub points_used: usize,
    pub points_total: usize,
    pub passed: bool,
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Checks a closed form against the radial equation and its own constant.
///
/// Samples `n` log-spaced points on `window`, drops those whose stencil comes
/// too close to a `℘` pole, and requires at least `n/4` survivors.
/// `recovered_c` is the median of the pointwise first-integral constants.
pub fn check_closed_form(
    sol: &ClosedFormSolution,
    window: (f64, f64),
    n: usize,
    cfg: &CheckConfig,
) -> Result<CheckReport> {
    let case = *sol.case();
    let xs = grid(window.0, window.1, n, Spacing::Log)?;
    let mut residuals = Vec::new();
    let mut constants = Vec::new();
    for &x in &xs {
        if let Some((dist, rate)) = sol.pole_distance(x) {
            let stencil = 2.0 * log_fd_step(x) * rate;
            // 4th-order truncation near a double pole grows like (h/dist)⁴
            if dist < cfg.pole_margin.max(50.0 * stencil) {
                continue;
            }
        }
        let Ok((v, d1, d2)) = profile_jet_with_step(sol, x, log_fd_step(x)) else {
            continue;
        };
        if !(v.is_finite() && d1.is_finite() && d2.is_finite()) {
            continue;
        }
        let sample = residual_from_jet(x, (v, d1, d2), case.d(), case.p());
        let pt = lane_emden::to_phase_point(&case, v, d1, x)?;
        let c13 = lane_emden::first_integral(&case, pt.z, pt.zp);
        residuals.push(sample.relative());
        constants.push(regimes::to_polynomial_constant(&case, c13)?);
    }
    let needed = n.div_ceil(4);
    if constants.len() < needed {
        return Err(Error::WindowEmpty {
            needed,
            found: constants.len(),
        });
    }
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    let recovered_c = median(&mut constants.clone());
    let max_first_integral_drift = constants
        .iter()
        .map(|c| (c - recovered_c).abs())
        .fold(0.0, f64::max);
    let expected_c = sol.c();
    let passed = max_residual < cfg.residual_tol
        && (recovered_c - expected_c).abs() < cfg.c_tol * (1.0 + expected_c.abs());
    Ok(CheckReport {
        family: sol.family_name().to_string(),
        d: case.d(),
        expected_c,
        recovered_c,
        max_residual,
        max_first_integral_drift,
        points_used: constants.len(),
        points_total: n,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lane_emden::{critical_case, first_integral};

    #[test]
    fn harmonic_oscillator_is_accurate() {
        // u'' = -u through the same stepper
        let cfg = IntegratorConfig::default();
        let tr = dopri5(|_, s| [s[1], -s[0]], 0.0, [1.0, 0.0], 10.0, &cfg).unwrap();
        let (t, s) = tr.last();
        assert_eq!(t, 10.0);
        assert!((s[0] - 10f64.cos()).abs() < 1e-9);
        assert!(tr.errors.iter().all(|&e| e <= 1.0));
    }

    #[test]
    fn backward_integration() {
        let cfg = IntegratorConfig::default();
        let tr = dopri5(|_, s| [s[1], -s[0]], 0.0, [1.0, 0.0], -3.0, &cfg).unwrap();
        assert!((tr.last().1[0] - 3f64.cos()).abs() < 1e-9);
    }

    #[test]
    fn equilibria_stay_put() {
        let cfg = IntegratorConfig::default();
        let c4 = critical_case(4).unwrap();
        let tr = integrate_autonomous(&c4, 1.0, 0.0, (0.0, 10.0), &cfg).unwrap();
        assert!(tr.states.iter().all(|s| s[0] == 1.0 && s[1] == 0.0));
        let c6 = critical_case(6).unwrap();
        let tr = integrate_autonomous(&c6, 0.0, 0.0, (0.0, 10.0), &cfg).unwrap();
        assert!(tr.states.iter().all(|s| s[0] == 0.0));
    }

    #[test]
    fn oscillation_conserves_first_integral() {
        let cfg = IntegratorConfig::default();
        let c4 = critical_case(4).unwrap();
        let tr = integrate_autonomous(&c4, 0.5, 0.0, (0.0, 20.0), &cfg).unwrap();
        let c0 = first_integral(&c4, 0.5, 0.0);
        let mut crossings = 0;
        for w in tr.states.windows(2) {
            assert!((first_integral(&c4, w[1][0], w[1][1]) - c0).abs() < 1e-8);
            if w[0][1].signum() != w[1][1].signum() {
                crossings += 1;
            }
        }
        assert!(
            crossings >= 2,
            "expected oscillation, got {crossings} turning points"
        );
    }

    #[test]
    fn blow_up_is_reported() {
        let cfg = IntegratorConfig::default();
        let c6 = critical_case(6).unwrap();
        // below the half-line root the amplitude runs off to -inf in finite y
        let r = integrate_autonomous(&c6, -1.0, -1.0, (0.0, 50.0), &cfg);
        assert!(matches!(r, Err(Error::BlowUpDetected { .. })), "{r:?}");
    }

    #[test]
    fn step_limit() {
        let cfg = IntegratorConfig {
            max_steps: 5,
            ..Default::default()
        };
        let c4 = critical_case(4).unwrap();
        let r = integrate_autonomous(&c4, 0.5, 0.0, (0.0, 100.0), &cfg);
        assert!(matches!(r, Err(Error::StepLimitExceeded { .. })));
    }

    #[test]
    fn config_validation() {
        let c4 = critical_case(4).unwrap();
        let bad = IntegratorConfig {
            rel_tol: 0.1,
            ..Default::default()
        };
        assert!(integrate_autonomous(&c4, 0.5, 0.0, (0.0, 1.0), &bad).is_err());
        let bad = IntegratorConfig {
            series_start_radius: 0.0,
            ..Default::default()
        };
        assert!(integrate_radial(4, 3, 1.0, 1.0, &bad).is_err());
    }

    #[test]
    fn residual_negative_control() {
        let xs = grid(0.1, 10.0, 50, Spacing::Log).unwrap();
        let f = |x: f64| (-x).exp();
        let r = residual_radial(&f, 4, 3, &xs);
        assert!(max_relative_residual(&r) > 1e-2);
    }

    #[test]
    fn residual_flags_failures() {
        let c4 = critical_case(4).unwrap();
        let r = residual_radial(&lane_emden::Singular(c4), 4, 3, &[0.0, 1.0]);
        assert!(r[0].residual.is_nan());
        assert!(r[1].relative() < 1e-14);
        assert_eq!(max_relative_residual(&r), f64::INFINITY);
    }

    #[test]
    fn window_empty() {
        let c4 = critical_case(4).unwrap();
        let sol = ClosedFormSolution::Singular {
            case: c4,
            sign: crate::solutions::Sign::Plus,
        };
        assert!(check_closed_form(&sol, (0.1, 10.0), 8, &CheckConfig::default()).is_ok());
        // a window between two poles narrower than the margin
        let c6 = critical_case(6).unwrap();
        let sol = crate::solutions::build(&c6, 2.0, 1.0, Default::default()).unwrap();
        let x_pole = 1.0;
        let r = check_closed_form(
            &sol,
            (x_pole * (1.0 - 1e-6), x_pole * (1.0 + 1e-6)),
            40,
            &CheckConfig::default(),
        );
        assert!(matches!(r, Err(Error::WindowEmpty { .. })), "{r:?}");
    }

    #[test]
    fn median_even_odd() {
        assert_eq!(median(&mut [3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median(&mut [4.0, 1.0, 2.0, 3.0]), 2.5);
    }
}
