//! Data behind the potential-polynomial and solution-family plots.
//!
//! Everything here is plain CSV (comma, `.` decimal, header row, LF, gaps as
//! empty fields) in long format, so one file holds every curve.

use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::lane_emden::CriticalCase;
use crate::regimes::potential;
use crate::solutions::{build, Signs, Spacing};

/// Constants drawn in the potential plots.
pub const POTENTIAL_CS: [f64; 5] = [-2.0, -1.0, -0.5, 0.0, 1.0];
/// Constants drawn in the solution plot (`C = 0` and `C = −1` give the
/// Talenti–Aubin and singular curves).
pub const SOLUTION_CS: [f64; 6] = [-2.0, -1.0, -0.5, 0.0, 1.0, 2.0];
/// `B` used for every solution curve; it only shifts curves along `ln x`.
pub const FIGURE_B: f64 = 1.0;

pub const Z_POINTS: usize = 401;
pub const X_POINTS: usize = 400;
pub const X_RANGE: (f64, f64) = (0.01, 100.0);

/// `z` range shown for each dimension; both are `Z_POINTS` hundredths wide.
pub fn z_range(case: &CriticalCase) -> Result<(f64, f64)> {
    match case.d() {
        4 => Ok((-2.0, 2.0)),
        6 => Ok((-1.5, 2.5)),
        d => Err(Error::UnsupportedCase { d }),
    }
}

/// One sample of a potential polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialRow {
    #[serde(rename = "C")]
    pub c: f64,
    pub z: f64,
    pub w: f64,
}

/// One sample of a solution curve; `theta = None` is a gap.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionRow {
    pub family: String,
    #[serde(rename = "C")]
    pub c: f64,
    pub x: f64,
    pub theta: Option<f64>,
}

pub fn potential_rows(case: &CriticalCase) -> Result<Vec<PotentialRow>> {
    let (lo, _) = z_range(case)?;
    // steps of 0.01 so the printed grid is exact in decimal
    let zs: Vec<f64> = (0..Z_POINTS)
        .map(|i| (lo * 100.0 + i as f64) / 100.0)
        .collect();
    let mut rows = Vec::with_capacity(POTENTIAL_CS.len() * Z_POINTS);
    for &c in &POTENTIAL_CS {
        let w = potential(case, c)?;
        rows.extend(zs.iter().map(|&z| PotentialRow { c, z, w: w.eval(z) }));
    }
    Ok(rows)
}

/// Constants without a real solution are skipped.
pub fn solution_rows(case: &CriticalCase) -> Result<Vec<SolutionRow>> {
    let mut rows = Vec::new();
    for &c in &SOLUTION_CS {
        let sol = match build(case, c, FIGURE_B, Signs::default()) {
            Ok(s) => s,
            Err(Error::NoRealSolution { .. }) => continue,
            Err(e) => return Err(e),
        };
        let tr = sol.trace(X_RANGE.0, X_RANGE.1, X_POINTS, Spacing::Log)?;
        rows.extend(
            tr.xs
                .iter()
                .zip(&tr.thetas)
                .map(|(&x, &theta)| SolutionRow {
                    family: tr.meta.label.clone(),
                    c,
                    x,
                    theta,
                }),
        );
    }
    Ok(rows)
}

/// Columns `C,z,w`.
pub fn potential_csv(case: &CriticalCase) -> Result<String> {
    let mut out = String::from("C,z,w\n");
    for r in potential_rows(case)? {
        writeln!(out, "{},{},{}", r.c, r.z, r.w).unwrap();
    }
    Ok(out)
}

/// Columns `family,C,x,theta`.
pub fn solutions_csv(case: &CriticalCase) -> Result<String> {
    let mut out = String::from("family,C,x,theta\n");
    for r in solution_rows(case)? {
        match r.theta {
            Some(v) => writeln!(out, "{},{},{},{v}", r.family, r.c, r.x).unwrap(),
            None => writeln!(out, "{},{},{},", r.family, r.c, r.x).unwrap(),
        }
    }
    Ok(out)
}
