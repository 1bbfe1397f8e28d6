//! Closed-form solution families of the critical equation for `d = 4, 6`.
//!
//! | family               | regime            | closed form                                         |
//! |----------------------|-------------------|-----------------------------------------------------|
//! | `Singular`           | `C = −1`          | `±b∞·x^(−α)`                                        |
//! | `TalentiAubinScaled` | `C = 0`           | `±λ^(−α)(1 + a(x/λ)²)^(−α)`                          |
//! | `JacobiBand`         | d = 4, `−1<C<0`   | `±(A/x)·dn(A·ln(Bx)/√2, k)`, `A² = 1+√(1+C)`         |
//! | `JacobiUnbounded`    | d = 4, `C > 0`    | `±(A/x)·cn(√s·ln(Bx), k)`, `s = √(1+C)`              |
//! | `WeierstrassFamily`  | d = 6, `C ≠ 0,−1` | `4x⁻²(½ − 2℘((2/√3)·ln(Bx); ¾, −(C+½)/4))`           |
//!
//! `dn = √(1 − k²sn²)`, so the band form is the `sn`-radicand expression with
//! the radicand evaluated without cancellation. The unbounded family uses the
//! signed `cn` rather than `√(1 − sn²) = |cn|`, which continues the solution
//! smoothly through its zeros (the exponent is odd).

use serde::{Deserialize, Serialize};
use std::f64::consts::SQRT_2;

use crate::elliptic::{jacobi_sn, weierstrass_p, Modulus, WeierstrassInvariants};
use crate::error::{domain, Error, Result};
use crate::lane_emden::{self, CriticalCase, RadialProfile};
use crate::regimes::DEGENERATE_TOL;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

/// Outer sign of `θ` and sign of the elliptic-function argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signs {
    pub outer: Sign,
    pub arg: Sign,
}

impl Default for Signs {
    fn default() -> Self {
        Signs {
            outer: Sign::Plus,
            arg: Sign::Plus,
        }
    }
}

/// Which component of the admissible set to build on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Branch {
    #[default]
    Principal,
    /// The bounded band `[b, c]` of `w62` for `−1 < C < 0`.
    MiddleBand,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family")]
pub enum ClosedFormSolution {
    Singular {
        case: CriticalCase,
        sign: Sign,
    },
    TalentiAubinScaled {
        case: CriticalCase,
        lambda: f64,
        sign: Sign,
    },
    JacobiBand {
        case: CriticalCase,
        c: f64,
        b: f64,
        sign_outer: Sign,
        sign_arg: Sign,
        k: Modulus,
    },
    JacobiUnbounded {
        case: CriticalCase,
        c: f64,
        b: f64,
        sign_outer: Sign,
        sign_arg: Sign,
        k: Modulus,
    },
    WeierstrassFamily {
        case: CriticalCase,
        c: f64,
        b: f64,
        g: WeierstrassInvariants,
    },
}

/// Modulus of the `d = 4` band family, `k² = 2s/(1+s)`, `s = √(1+C)`.
pub fn band_modulus(c: f64) -> Result<Modulus> {
    let s = (1.0 + c).sqrt();
    Modulus::from_parameter(2.0 * s / (1.0 + s))
}

/// Modulus of the `d = 4` unbounded family, `k² = (1+s)/(2s)`, `s = √(1+C)`.
pub fn unbounded_modulus(c: f64) -> Result<Modulus> {
    let s = (1.0 + c).sqrt();
    Modulus::from_parameter((1.0 + s) / (2.0 * s))
}

/// Invariants of the `d = 6` family: `g2 = 3/4`, `g3 = −(C + ½)/4`.
pub fn weierstrass_invariants(c: f64) -> Result<WeierstrassInvariants> {
    WeierstrassInvariants::new(0.75, -(c + 0.5) / 4.0)
}

/// Builds the principal family for constant `C` and integration constant `B`.
pub fn build(case: &CriticalCase, c: f64, b: f64, signs: Signs) -> Result<ClosedFormSolution> {
    build_branch(case, c, b, signs, Branch::Principal)
}

pub fn build_branch(
    case: &CriticalCase,
    c: f64,
    b: f64,
    signs: Signs,
    branch: Branch,
) -> Result<ClosedFormSolution> {
    if !(b > 0.0) || !b.is_finite() {
        return domain(format!("integration constant B = {b} must be positive"));
    }
    if !c.is_finite() {
        return domain("C must be finite");
    }
    let d = case.d();
    if d != 4 && d != 6 {
        return Err(Error::UnsupportedCase { d });
    }
    let case = *case;
    if branch == Branch::MiddleBand {
        let msg = if d == 6 && c > -1.0 && c < 0.0 {
            "the middle band [b, c] has no real representation on the real axis"
        } else {
            "a middle band exists only for d = 6 with -1 < C < 0"
        };
        return Err(Error::UnsupportedBranch(msg.to_string()));
    }
    if d == 6 && signs.outer == Sign::Minus {
        return domain("for even p the negated profile is not a solution");
    }
    let sign_outer = signs.outer;
    let sign_arg = signs.arg;
    if (1.0 + c).abs() < DEGENERATE_TOL {
        return Ok(ClosedFormSolution::Singular {
            case,
            sign: sign_outer,
        });
    }
    if c.abs() < DEGENERATE_TOL {
        let lambda = match d {
            4 => 1.0 / (2.0 * SQRT_2 * b),
            _ => 1.0 / (2.0 * 3f64.sqrt() * b),
        };
        return Ok(ClosedFormSolution::TalentiAubinScaled {
            case,
            lambda,
            sign: sign_outer,
        });
    }
    if d == 4 {
        if c < -1.0 {
            return Err(Error::NoRealSolution { d, c });
        }
        if c < 0.0 {
            let k = band_modulus(c)?;
            return Ok(ClosedFormSolution::JacobiBand {
                case,
                c,
                b,
                sign_outer,
                sign_arg,
                k,
            });
        }
        let k = unbounded_modulus(c)?;
        return Ok(ClosedFormSolution::JacobiUnbounded {
            case,
            c,
            b,
            sign_outer,
            sign_arg,
            k,
        });
    }
    Ok(ClosedFormSolution::WeierstrassFamily {
        case,
        c,
        b,
        g: weierstrass_invariants(c)?,
    })
}

impl ClosedFormSolution {
    pub fn case(&self) -> &CriticalCase {
        match self {
            ClosedFormSolution::Singular { case, .. }
            | ClosedFormSolution::TalentiAubinScaled { case, .. }
            | ClosedFormSolution::JacobiBand { case, .. }
            | ClosedFormSolution::JacobiUnbounded { case, .. }
            | ClosedFormSolution::WeierstrassFamily { case, .. } => case,
        }
    }

    /// The polynomial constant `C` this family belongs to.
    pub fn c(&self) -> f64 {
        match *self {
            ClosedFormSolution::Singular { .. } => -1.0,
            ClosedFormSolution::TalentiAubinScaled { .. } => 0.0,
            ClosedFormSolution::JacobiBand { c, .. }
            | ClosedFormSolution::JacobiUnbounded { c, .. }
            | ClosedFormSolution::WeierstrassFamily { c, .. } => c,
        }
    }

    pub fn family_name(&self) -> &'static str {
        match self {
            ClosedFormSolution::Singular { .. } => "singular",
            ClosedFormSolution::TalentiAubinScaled { .. } => "talenti_aubin",
            ClosedFormSolution::JacobiBand { .. } => "jacobi_band",
            ClosedFormSolution::JacobiUnbounded { .. } => "jacobi_unbounded",
            ClosedFormSolution::WeierstrassFamily { .. } => "weierstrass",
        }
    }

    /// The same profile with its sign flipped (a solution again only for odd p).
    pub fn negated(&self) -> ClosedFormSolution {
        let flip = |s: Sign| {
            if s == Sign::Plus {
                Sign::Minus
            } else {
                Sign::Plus
            }
        };
        let mut out = *self;
        match &mut out {
            ClosedFormSolution::Singular { sign, .. }
            | ClosedFormSolution::TalentiAubinScaled { sign, .. } => *sign = flip(*sign),
            ClosedFormSolution::JacobiBand { sign_outer, .. }
            | ClosedFormSolution::JacobiUnbounded { sign_outer, .. } => {
                *sign_outer = flip(*sign_outer)
            }
            ClosedFormSolution::WeierstrassFamily { .. } => {}
        }
        out
    }

    /// For the `℘` family: distance of `t = (2/√3)·ln(Bx)` to the nearest pole,
    /// together with `dt/dx`. `None` for families without poles on `x > 0`.
    pub fn pole_distance(&self, x: f64) -> Option<(f64, f64)> {
        match *self {
            ClosedFormSolution::WeierstrassFamily { b, g, .. } => {
                let rate = 2.0 / 3f64.sqrt();
                let t = rate * (b * x).ln();
                Some((g.pole_distance(t), rate / x))
            }
            _ => None,
        }
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x > 0.0) || !x.is_finite() {
            return domain(format!("x = {x} must be positive and finite"));
        }
        match *self {
            ClosedFormSolution::Singular { case, sign } => {
                Ok(sign.value() * lane_emden::singular_solution(&case, x)?)
            }
            ClosedFormSolution::TalentiAubinScaled { case, lambda, sign } => {
                let inner = lane_emden::talenti_aubin(&case, x / lambda)?;
                Ok(sign.value() * lambda.powf(-case.alpha()) * inner)
            }
            ClosedFormSolution::JacobiBand {
                c,
                b,
                sign_outer,
                sign_arg,
                k,
                ..
            } => {
                let amp = (1.0 + (1.0 + c).sqrt()).sqrt();
                let u = sign_arg.value() * amp * (b * x).ln() / SQRT_2;
                let v = jacobi_sn(u, k)?;
                Ok(sign_outer.value() * amp * v.dn / x)
            }
            ClosedFormSolution::JacobiUnbounded {
                c,
                b,
                sign_outer,
                sign_arg,
                k,
                ..
            } => {
                let s = (1.0 + c).sqrt();
                let amp = (1.0 + s).sqrt();
                let u = sign_arg.value() * s.sqrt() * (b * x).ln();
                let v = jacobi_sn(u, k)?;
                Ok(sign_outer.value() * amp * v.cn / x)
            }
            ClosedFormSolution::WeierstrassFamily { case, b, g, .. } => {
                let t = 2.0 / 3f64.sqrt() * (b * x).ln();
                let p = weierstrass_p(t, g)?;
                Ok(case.b_inf() / (x * x) * (0.5 - 2.0 * p))
            }
        }
    }

    /// Samples the solution on a grid; failures become gaps.
    pub fn trace(
        &self,
        x_min: f64,
        x_max: f64,
        n: usize,
        spacing: Spacing,
    ) -> Result<SolutionTrace> {
        let xs = grid(x_min, x_max, n, spacing)?;
        let thetas = xs
            .iter()
            .map(|&x| self.eval(x).ok().filter(|v| v.is_finite()))
            .collect();
        Ok(SolutionTrace {
            xs,
            thetas,
            meta: TraceMeta {
                label: self.family_name().to_string(),
                d: self.case().d(),
                solution: Some(*self),
            },
        })
    }
}

impl RadialProfile for ClosedFormSolution {
    fn value(&self, x: f64) -> Result<f64> {
        self.eval(x)
    }

    fn derivatives(&self, x: f64) -> Option<(f64, f64)> {
        match *self {
            ClosedFormSolution::Singular { case, sign } => {
                let (d1, d2) = lane_emden::Singular(case).derivatives(x)?;
                Some((sign.value() * d1, sign.value() * d2))
            }
            ClosedFormSolution::TalentiAubinScaled { case, lambda, sign } => {
                let scaled =
                    lane_emden::scale_solution(lane_emden::TalentiAubin(case), &case, lambda)
                        .ok()?;
                let (d1, d2) = scaled.derivatives(x)?;
                Some((sign.value() * d1, sign.value() * d2))
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Log,
    Linear,
}

/// `n ≥ 2` points from `x_min` to `x_max` inclusive, both ends exact.
pub fn grid(x_min: f64, x_max: f64, n: usize, spacing: Spacing) -> Result<Vec<f64>> {
    if !(x_min > 0.0 && x_max > x_min && x_max.is_finite()) {
        return domain(format!(
            "grid requires 0 < x_min < x_max (got {x_min}, {x_max})"
        ));
    }
    if n < 2 {
        return domain("grid needs at least 2 points");
    }
    let last = (n - 1) as f64;
    let mut xs: Vec<f64> = (0..n)
        .map(|i| {
            let t = i as f64 / last;
            match spacing {
                Spacing::Log => (x_min.ln() + t * (x_max.ln() - x_min.ln())).exp(),
                Spacing::Linear => x_min + t * (x_max - x_min),
            }
        })
        .collect();
    xs[0] = x_min;
    xs[n - 1] = x_max;
    Ok(xs)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraceMeta {
    pub label: String,
    pub d: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub solution: Option<ClosedFormSolution>,
}

/// Sampled `(x, θ(x))`; `None` marks a gap (pole or failed evaluation).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionTrace {
    pub xs: Vec<f64>,
    pub thetas: Vec<Option<f64>>,
    pub meta: TraceMeta,
}

impl SolutionTrace {
    pub fn gap_count(&self) -> usize {
        self.thetas.iter().filter(|t| t.is_none()).count()
    }

    /// CSV with header `x,theta`; gaps are empty fields.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,theta\n");
        for (x, t) in self.xs.iter().zip(&self.thetas) {
            match t {
                Some(v) => out.push_str(&format!("{x},{v}\n")),
                None => out.push_str(&format!("{x},\n")),
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}
