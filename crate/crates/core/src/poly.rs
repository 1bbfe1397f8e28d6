//! Real roots of low-degree polynomials.
//!
//! Cubics are solved in depressed form `t³ + p·t + q = 0`; the trigonometric
//! form is used when three real roots exist and Cardano's formula otherwise.
//! Every root gets a short Newton polish on the original polynomial.

use std::f64::consts::PI;

/// Evaluates a polynomial with coefficients in ascending degree.
pub fn horner(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
}

/// Derivative coefficients, ascending degree.
pub fn derivative(coeffs: &[f64]) -> Vec<f64> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| c * i as f64)
        .collect()
}

/// Discriminant sign helper for `t³ + p·t + q`: `(q/2)² + (p/3)³`.
/// Negative means three distinct real roots.
pub fn depressed_discriminant(p: f64, q: f64) -> f64 {
    (q / 2.0).powi(2) + (p / 3.0).powi(3)
}

/// Three real roots of `t³ + p·t + q` (requires `p ≤ 0`), ascending.
pub fn trig_roots(p: f64, q: f64) -> [f64; 3] {
    if p >= 0.0 {
        let t = -q.cbrt();
        return [t, t, t];
    }
    let r = 2.0 * (-p / 3.0).sqrt();
    let arg = ((3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    let mut roots = [
        r * phi.cos(),
        r * (phi - 2.0 * PI / 3.0).cos(),
        r * (phi - 4.0 * PI / 3.0).cos(),
    ];
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

/// The single real root of `t³ + p·t + q` when the discriminant is positive.
pub fn cardano_root(p: f64, q: f64) -> f64 {
    let disc = depressed_discriminant(p, q).max(0.0);
    let a = -q.signum() * (q.abs() / 2.0 + disc.sqrt()).cbrt();
    if a == 0.0 {
        0.0
    } else {
        a - p / (3.0 * a)
    }
}

/// Newton polish of an approximate root; keeps the original if a step makes
/// the residual worse.
pub fn polish(coeffs: &[f64], mut x: f64) -> f64 {
    let dcoeffs = derivative(coeffs);
    for _ in 0..4 {
        let f = horner(coeffs, x);
        let df = horner(&dcoeffs, x);
        if f == 0.0 || df == 0.0 || !df.is_finite() {
            break;
        }
        let next = x - f / df;
        if horner(coeffs, next).abs() < f.abs() {
            x = next;
        } else {
            break;
        }
    }
    x
}

/// Real roots of `a·z³ + b·z² + c·z + d` (with `a ≠ 0`), ascending, repeated
/// roots listed once per multiplicity when the discriminant says so.
pub fn real_cubic_roots(a: f64, b: f64, c: f64, d: f64) -> Vec<f64> {
    let (b, c, d) = (b / a, c / a, d / a);
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
    let coeffs = [d, c, b, 1.0];
    let mut roots: Vec<f64> = if depressed_discriminant(p, q) > 0.0 {
        vec![cardano_root(p, q) - shift]
    } else {
        trig_roots(p, q).iter().map(|t| t - shift).collect()
    };
    for r in roots.iter_mut() {
        *r = polish(&coeffs, *r);
    }
    roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factored_cubic() {
        // (z - 1)(z - 2)(z + 3) = z³ - 7z + 6
        let r = real_cubic_roots(1.0, 0.0, -7.0, 6.0);
        assert_eq!(r.len(), 3);
        for (got, want) in r.iter().zip([-3.0, 1.0, 2.0]) {
            assert!((got - want).abs() < 1e-13, "{got} vs {want}");
        }
    }

    #[test]
    fn single_real_root() {
        // z³ + z + 1 has one real root near -0.6823278
        let r = real_cubic_roots(1.0, 0.0, 1.0, 1.0);
        assert_eq!(r.len(), 1);
        assert!(horner(&[1.0, 1.0, 0.0, 1.0], r[0]).abs() < 1e-15);
        assert!((r[0] + 0.682_327_803_828_019_3).abs() < 1e-13);
    }

    #[test]
    fn horner_and_derivative() {
        let c = [1.0, -2.0, 0.0, 3.0];
        assert_eq!(horner(&c, 2.0), 1.0 - 4.0 + 24.0);
        assert_eq!(derivative(&c), vec![-2.0, 0.0, 9.0]);
    }
}
