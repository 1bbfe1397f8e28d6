//! Oracles shared by the integration tests. Nothing here calls the code
//! under test except to read off polynomial values.

#![allow(dead_code)]

use le_kit::regimes::{potential, PotentialPolynomial};
use le_kit::{classify, critical_case, RegimeLabel};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Real roots by scanning `[-4, 4]` for sign changes and bisecting, plus
/// critical points where `w` itself vanishes (even-multiplicity roots).
pub fn bisection_roots(w: &PotentialPolynomial, critical: &[f64]) -> Vec<f64> {
    let f = |z: f64| w.eval(z);
    let (lo, hi, n) = (-4.0, 4.0, 8000);
    let mut roots = Vec::new();
    for i in 0..n {
        let mut a = lo + (hi - lo) * i as f64 / n as f64;
        let mut b = lo + (hi - lo) * (i + 1) as f64 / n as f64;
        if f(a) == 0.0 {
            roots.push(a);
            continue;
        }
        if f(a) * f(b) >= 0.0 {
            continue;
        }
        for _ in 0..200 {
            let m = 0.5 * (a + b);
            if f(a) * f(m) <= 0.0 {
                b = m;
            } else {
                a = m;
            }
        }
        roots.push(0.5 * (a + b));
    }
    for &z in critical {
        if f(z).abs() < 1e-12 && !roots.iter().any(|r| (r - z).abs() < 1e-6) {
            roots.push(z);
        }
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

/// Zeros of `w′`: `z(1 − z²)` for d = 4, `z(1 − z)` for d = 6.
pub fn critical_points(d: i64) -> Vec<f64> {
    if d == 4 {
        vec![-1.0, 0.0, 1.0]
    } else {
        vec![0.0, 1.0]
    }
}

/// `max |computed − oracle|` over the distinct roots, or an error message.
pub fn root_mismatch(d: i64, c: f64) -> Result<f64, String> {
    let case = critical_case(d).unwrap();
    let w = potential(&case, c).unwrap();
    let got: Vec<f64> = le_kit::regimes::real_roots(&w)
        .iter()
        .map(|r| r.value)
        .collect();
    let want = bisection_roots(&w, &critical_points(d));
    if got.len() != want.len() {
        return Err(format!("d = {d}, C = {c}: {got:?} vs oracle {want:?}"));
    }
    Ok(got
        .iter()
        .zip(&want)
        .map(|(g, o)| (g - o).abs())
        .fold(0.0, f64::max))
}

/// `K(k) = π / (2·agm(1, √(1 − k²)))`.
pub fn agm_k(k: f64) -> f64 {
    let (mut a, mut b) = (1.0f64, (1.0 - k * k).sqrt());
    for _ in 0..64 {
        if (a - b).abs() <= 1e-15 * a {
            break;
        }
        let next = 0.5 * (a + b);
        b = (a * b).sqrt();
        a = next;
    }
    std::f64::consts::PI / (2.0 * a)
}

/// A random state on a bounded orbit: any admissible `C` for `d = 4`, the
/// middle band `[b, c]` of the three-root regime for `d = 6`.
pub fn random_bounded_state(d: i64, rng: &mut ChaCha8Rng) -> (f64, f64) {
    let case = critical_case(d).unwrap();
    loop {
        let c: f64 = if d == 4 {
            rng.gen_range(-0.99..3.0)
        } else {
            rng.gen_range(-0.99..-0.01)
        };
        let report = classify(&case, c).unwrap();
        let iv = match report.label {
            RegimeLabel::TwoBands | RegimeLabel::UnboundedBelowRoot | RegimeLabel::ThreeRoots => {
                *report.intervals.last().unwrap()
            }
            _ => continue,
        };
        let z: f64 = rng.gen_range(iv.lo.unwrap()..iv.hi);
        let w = potential(&case, c).unwrap();
        let speed = w.zp_squared(z).max(0.0).sqrt();
        let zp = if rng.gen_bool(0.5) { speed } else { -speed };
        let z = if d == 4 && rng.gen_bool(0.5) { -z } else { z };
        return (z, zp);
    }
}
