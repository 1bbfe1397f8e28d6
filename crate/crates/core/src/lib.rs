//! Closed-form solutions of the critical Lane–Emden equation
//! `θ″ + (d−1)/x·θ′ + θ^p = 0`, `p = (d+2)/(d−2)`, for `d = 3, 4, 6`.
//!
//! * [`elliptic`]: Carlson `R_F`, `K`, `F`, Jacobi `sn/cn/dn`, Weierstrass `℘`.
//! * [`lane_emden`]: critical cases, the singular and Talenti–Aubin solutions,
//!   scaling, the Emden substitution and the first integral.
//! * [`regimes`]: potential polynomials and regime classification in `C`.
//! * [`solutions`]: the closed-form families and their evaluation.
//! * [`verify`]: an adaptive Runge–Kutta oracle and residual checks.
//! * [`figures`]: CSV data for the potential and solution plots.

// `!(a > b)` is used on purpose: it also rejects NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod elliptic;
pub mod error;
pub mod figures;
pub mod lane_emden;
pub mod poly;
pub mod regimes;
pub mod solutions;
pub mod verify;

pub use elliptic::{EllipticValue, Modulus, WeierstrassInvariants};
pub use error::{Error, Result};
pub use lane_emden::{critical_case, CriticalCase, PhasePoint, RadialProfile};
pub use regimes::{classify, RegimeLabel, RegimeReport};
pub use solutions::{build, ClosedFormSolution, Sign, Signs, SolutionTrace, Spacing};
pub use verify::{
    check_closed_form, CheckConfig, CheckReport, IntegratorConfig, NumericTrajectory,
};
