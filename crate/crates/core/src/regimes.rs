//! Regime classification by the sign structure of the potential polynomial.
//!
//! For `d = 4` the first integral reads `(z′)² = ½·w43(z)` with
//! `w43 = −z⁴ + 2z² + C`; for `d = 6` it reads `(z′)² = (4/3)·w62(z)` with
//! `w62 = −2z³ + 3z² + C`. Real trajectories live where `w ≥ 0`.
//!
//! The constant `C` used here is the per-dimension polynomial constant. It is
//! `4×` (d = 4) or `6×` (d = 6) the value returned by
//! [`crate::lane_emden::first_integral`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lane_emden::CriticalCase;
use crate::poly;

/// `|1 + C|` or `|C|` below this counts as exactly on a bifurcation value.
pub const DEGENERATE_TOL: f64 = 1e-10;

/// Conversion factor from the first-integral constant to the polynomial constant.
pub fn polynomial_constant_factor(case: &CriticalCase) -> Result<f64> {
    match case.d() {
        4 => Ok(4.0),
        6 => Ok(6.0),
        d => Err(Error::UnsupportedCase { d }),
    }
}

pub fn to_polynomial_constant(case: &CriticalCase, first_integral: f64) -> Result<f64> {
    Ok(polynomial_constant_factor(case)? * first_integral)
}

pub fn from_polynomial_constant(case: &CriticalCase, c: f64) -> Result<f64> {
    Ok(c / polynomial_constant_factor(case)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PotentialPolynomial {
    pub case: CriticalCase,
    pub c: f64,
    /// Ascending degree.
    pub coeffs: Vec<f64>,
}

impl PotentialPolynomial {
    pub fn eval(&self, z: f64) -> f64 {
        poly::horner(&self.coeffs, z)
    }

    /// `(z′)²` at amplitude `z` for the trajectory with this constant.
    pub fn zp_squared(&self, z: f64) -> f64 {
        let factor = if self.case.d() == 4 { 0.5 } else { 4.0 / 3.0 };
        factor * self.eval(z)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }
}

pub fn potential(case: &CriticalCase, c: f64) -> Result<PotentialPolynomial> {
    let coeffs = match case.d() {
        4 => vec![c, 0.0, 2.0, 0.0, -1.0],
        6 => vec![c, 0.0, 3.0, -2.0],
        d => return Err(Error::UnsupportedCase { d }),
    };
    Ok(PotentialPolynomial {
        case: *case,
        c,
        coeffs,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Root {
    pub value: f64,
    pub multiplicity: u32,
}

fn root(value: f64, multiplicity: u32) -> Root {
    Root {
        value,
        multiplicity,
    }
}

/// Real roots with multiplicity, ascending.
pub fn real_roots(poly: &PotentialPolynomial) -> Vec<Root> {
    let c = poly.c;
    match poly.case.d() {
        4 => {
            if (1.0 + c).abs() < DEGENERATE_TOL {
                return vec![root(-1.0, 2), root(1.0, 2)];
            }
            if 1.0 + c < 0.0 {
                return vec![];
            }
            if c.abs() < DEGENERATE_TOL {
                let r = 2f64.sqrt();
                return vec![root(-r, 1), root(0.0, 2), root(r, 1)];
            }
            let s = (1.0 + c).sqrt();
            let upper = (1.0 + s).sqrt();
            if c < 0.0 {
                // 1 − √(1+C) without cancellation
                let lower = (-c / (1.0 + s)).sqrt();
                vec![
                    root(-upper, 1),
                    root(-lower, 1),
                    root(lower, 1),
                    root(upper, 1),
                ]
            } else {
                vec![root(-upper, 1), root(upper, 1)]
            }
        }
        6 => {
            if c.abs() < DEGENERATE_TOL {
                return vec![root(0.0, 2), root(1.5, 1)];
            }
            if (1.0 + c).abs() < DEGENERATE_TOL {
                return vec![root(-0.5, 1), root(1.0, 2)];
            }
            poly::real_cubic_roots(-2.0, 3.0, 0.0, c)
                .into_iter()
                .map(|r| root(r, 1))
                .collect()
        }
        _ => vec![],
    }
}

/// A closed interval of `z`; `lo = None` means unbounded below.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: Option<f64>,
    pub hi: f64,
}

impl Interval {
    fn closed(lo: f64, hi: f64) -> Self {
        Interval { lo: Some(lo), hi }
    }
    fn half_line(hi: f64) -> Self {
        Interval { lo: None, hi }
    }
    pub fn point(r: f64) -> Self {
        Interval::closed(r, r)
    }
    pub fn contains(&self, z: f64) -> bool {
        self.lo.is_none_or(|lo| z >= lo) && z <= self.hi
    }
    pub fn is_point(&self) -> bool {
        self.lo == Some(self.hi)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegimeLabel {
    NoRealSolution,
    ConstantOnly,
    TwoBands,
    TalentiAubin,
    UnboundedBelowRoot,
    ThreeRoots,
    SingleRootHalfLine,
    DoubleRootDegenerate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegimeReport {
    pub case: CriticalCase,
    pub c: f64,
    pub label: RegimeLabel,
    pub roots: Vec<Root>,
    pub intervals: Vec<Interval>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl RegimeReport {
    pub fn admits(&self, z: f64) -> bool {
        self.intervals.iter().any(|i| i.contains(z))
    }
}

pub fn classify(case: &CriticalCase, c: f64) -> Result<RegimeReport> {
    let poly = potential(case, c)?;
    let roots = real_roots(&poly);
    let vals: Vec<f64> = roots.iter().map(|r| r.value).collect();
    let mut note = None;
    let (label, intervals) = match case.d() {
        4 => {
            if (1.0 + c).abs() < DEGENERATE_TOL {
                (
                    RegimeLabel::ConstantOnly,
                    vec![Interval::point(-1.0), Interval::point(1.0)],
                )
            } else if c < -1.0 {
                (RegimeLabel::NoRealSolution, vec![])
            } else if c.abs() < DEGENERATE_TOL {
                let r = 2f64.sqrt();
                (RegimeLabel::TalentiAubin, vec![Interval::closed(-r, r)])
            } else if c < 0.0 {
                (
                    RegimeLabel::TwoBands,
                    vec![
                        Interval::closed(vals[0], vals[1]),
                        Interval::closed(vals[2], vals[3]),
                    ],
                )
            } else {
                (
                    RegimeLabel::UnboundedBelowRoot,
                    vec![Interval::closed(vals[0], vals[1])],
                )
            }
        }
        _ => {
            if (1.0 + c).abs() < DEGENERATE_TOL {
                note = Some(
                    "the double root z = 1 occurs at C = -1, since w62(1) = 1 + C".to_string(),
                );
                (
                    RegimeLabel::DoubleRootDegenerate,
                    vec![Interval::half_line(-0.5), Interval::point(1.0)],
                )
            } else if c.abs() < DEGENERATE_TOL {
                (RegimeLabel::TalentiAubin, vec![Interval::half_line(1.5)])
            } else if c > -1.0 && c < 0.0 && vals.len() == 3 {
                (
                    RegimeLabel::ThreeRoots,
                    vec![
                        Interval::half_line(vals[0]),
                        Interval::closed(vals[1], vals[2]),
                    ],
                )
            } else {
                (
                    RegimeLabel::SingleRootHalfLine,
                    vec![Interval::half_line(vals[0])],
                )
            }
        }
    };
    Ok(RegimeReport {
        case: *case,
        c,
        label,
        roots,
        intervals,
        note,
    })
}
