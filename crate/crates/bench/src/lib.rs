//! Fixtures shared by the benchmarks.

use le_kit::solutions::grid;
use le_kit::{build, critical_case, ClosedFormSolution, Signs, Spacing};

/// 200 log-spaced points on `[0.05, 20]`, the verification window.
pub fn window() -> Vec<f64> {
    grid(0.05, 20.0, 200, Spacing::Log).expect("valid window")
}

/// One representative of each elliptic family.
pub fn families() -> Vec<(&'static str, ClosedFormSolution)> {
    let d4 = critical_case(4).expect("d = 4");
    let d6 = critical_case(6).expect("d = 6");
    vec![
        ("band", build(&d4, -0.5, 1.0, Signs::default()).unwrap()),
        ("unbounded", build(&d4, 1.0, 1.0, Signs::default()).unwrap()),
        (
            "weierstrass",
            build(&d6, 2.0, 1.0, Signs::default()).unwrap(),
        ),
    ]
}
