//! The radial Lane–Emden equation `θ″ + (d−1)/x·θ′ + θ^p = 0` at the critical
//! exponent `p = (d+2)/(d−2)`.
//!
//! The modified Emden substitution `θ = b∞·z·x^(−α)`, `y = −ln x` turns the
//! radial equation into `z″ + friction·z′ + force·(z − z^p) = 0`; at the
//! critical exponent the friction vanishes and
//! `(z′)² = ((d−2)²/2)·(z²/2 − z^(p+1)/(p+1) + C)` is conserved.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

type Q = Ratio<i64>;

/// One critical Lane–Emden problem, fixed by the space dimension.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CaseRepr", into = "CaseRepr")]
pub struct CriticalCase {
    d: i64,
    p: i64,
    alpha: f64,
    b_inf: f64,
    a_ta: f64,
}

#[derive(Serialize, Deserialize)]
struct CaseRepr {
    d: i64,
    p: i64,
    alpha: f64,
    b_inf: f64,
    a_ta: f64,
}

impl TryFrom<CaseRepr> for CriticalCase {
    type Error = Error;
    fn try_from(r: CaseRepr) -> Result<Self> {
        let case = critical_case(r.d)?;
        if case.p != r.p {
            return domain(format!("p = {} is not critical for d = {}", r.p, r.d));
        }
        Ok(case)
    }
}

impl From<CriticalCase> for CaseRepr {
    fn from(c: CriticalCase) -> Self {
        CaseRepr {
            d: c.d,
            p: c.p,
            alpha: c.alpha,
            b_inf: c.b_inf,
            a_ta: c.a_ta,
        }
    }
}

impl CriticalCase {
    pub fn d(&self) -> i64 {
        self.d
    }
    pub fn p(&self) -> i64 {
        self.p
    }
    /// `α = 2/(p−1)`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    /// Amplitude of the singular solution `b∞·x^(−α)`.
    pub fn b_inf(&self) -> f64 {
        self.b_inf
    }
    /// Coefficient `a = (p−1)/(4d)` of the Talenti–Aubin solution.
    pub fn a_ta(&self) -> f64 {
        self.a_ta
    }
    pub fn alpha_exact(&self) -> Q {
        Q::new(2, self.p - 1)
    }
    pub fn a_ta_exact(&self) -> Q {
        Q::new(self.p - 1, 4 * self.d)
    }
    /// `(d−2)²/4`, the coefficient in `z″ = (d−2)²/4·(z − z^p)`.
    pub fn autonomous_rate(&self) -> f64 {
        let dm2 = (self.d - 2) as f64;
        dm2 * dm2 / 4.0
    }
    /// `z − z^p`.
    pub fn restoring(&self, z: f64) -> f64 {
        z - z.powi(self.p as i32)
    }
}

/// Builds the critical case for dimension `d ∈ {3, 4, 6}`.
pub fn critical_case(d: i64) -> Result<CriticalCase> {
    if d < 3 {
        return domain(format!("space dimension d = {d} must be at least 3"));
    }
    // p = (d+2)/(d-2) is an integer only when d-2 divides 4.
    if (d + 2) % (d - 2) != 0 {
        return Err(Error::NotCritical { d });
    }
    let p = (d + 2) / (d - 2);
    let base = Q::new(2 * (p * (d - 2) - d), (p - 1) * (p - 1));
    let b_inf = ratio_to_f64(base).powf(1.0 / (p - 1) as f64);
    Ok(CriticalCase {
        d,
        p,
        alpha: ratio_to_f64(Q::new(2, p - 1)),
        b_inf,
        a_ta: ratio_to_f64(Q::new(p - 1, 4 * d)),
    })
}

fn ratio_to_f64(q: Q) -> f64 {
    *q.numer() as f64 / *q.denom() as f64
}

/// Coefficients of the autonomous equation obtained from the modified Emden
/// substitution, `z″ + friction·z′ + force·(z − z^p) = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AutonomousCoefficients {
    pub friction: Q,
    pub force: Q,
}

impl AutonomousCoefficients {
    pub fn friction_f64(&self) -> f64 {
        ratio_to_f64(self.friction)
    }
    pub fn force_f64(&self) -> f64 {
        ratio_to_f64(self.force)
    }
}

/// Exact coefficients for arbitrary `(d, p)`; `friction = 0` iff `p` is critical.
pub fn autonomous_coefficients(d: i64, p: i64) -> Result<AutonomousCoefficients> {
    if d < 3 {
        return domain(format!("space dimension d = {d} must be at least 3"));
    }
    if p < 2 {
        return domain(format!("exponent p = {p} must be at least 2"));
    }
    Ok(AutonomousCoefficients {
        friction: Q::new(2 * p - d * p + d + 2, p - 1),
        force: Q::new(2 * (2 - d) * p + 2 * d, (p - 1) * (p - 1)),
    })
}

/// A radial profile `θ(x)`, optionally with closed-form derivatives.
pub trait RadialProfile {
    fn value(&self, x: f64) -> Result<f64>;

    /// `(θ′(x), θ″(x))` if known analytically.
    fn derivatives(&self, _x: f64) -> Option<(f64, f64)> {
        None
    }
}

impl<F: Fn(f64) -> f64> RadialProfile for F {
    fn value(&self, x: f64) -> Result<f64> {
        Ok(self(x))
    }
}

fn require_positive(x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return domain(format!("x = {x} must be positive and finite"));
    }
    Ok(())
}

/// `b∞·x^(−α)`, singular at the origin.
pub fn singular_solution(case: &CriticalCase, x: f64) -> Result<f64> {
    require_positive(x)?;
    Ok(case.b_inf * x.powf(-case.alpha))
}

/// `(1 + a·x²)^(−α)`, with `θ(0) = 1`, `θ′(0) = 0`.
pub fn talenti_aubin(case: &CriticalCase, x: f64) -> Result<f64> {
    if !(x >= 0.0) || !x.is_finite() {
        return domain(format!("x = {x} must be non-negative and finite"));
    }
    Ok((1.0 + case.a_ta * x * x).powf(-case.alpha))
}

#[derive(Debug, Clone, Copy)]
pub struct Singular(pub CriticalCase);

impl RadialProfile for Singular {
    fn value(&self, x: f64) -> Result<f64> {
        singular_solution(&self.0, x)
    }
    fn derivatives(&self, x: f64) -> Option<(f64, f64)> {
        let (a, b) = (self.0.alpha, self.0.b_inf);
        Some((
            -a * b * x.powf(-a - 1.0),
            a * (a + 1.0) * b * x.powf(-a - 2.0),
        ))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct TalentiAubin(pub CriticalCase);

impl RadialProfile for TalentiAubin {
    fn value(&self, x: f64) -> Result<f64> {
        talenti_aubin(&self.0, x)
    }
    fn derivatives(&self, x: f64) -> Option<(f64, f64)> {
        let (al, a) = (self.0.alpha, self.0.a_ta);
        let w = 1.0 + a * x * x;
        let d1 = -2.0 * a * al * x * w.powf(-al - 1.0);
        let d2 = -2.0 * a * al * w.powf(-al - 1.0)
            + 4.0 * a * a * al * (al + 1.0) * x * x * w.powf(-al - 2.0);
        Some((d1, d2))
    }
}

/// `x ↦ λ^(−α)·θ(x/λ)`.
#[derive(Debug, Clone, Copy)]
pub struct Scaled<P> {
    inner: P,
    alpha: f64,
    lambda: f64,
}

impl<P: RadialProfile> Scaled<P> {
    pub fn lambda(&self) -> f64 {
        self.lambda
    }
}

impl<P: RadialProfile> RadialProfile for Scaled<P> {
    fn value(&self, x: f64) -> Result<f64> {
        Ok(self.lambda.powf(-self.alpha) * self.inner.value(x / self.lambda)?)
    }
    fn derivatives(&self, x: f64) -> Option<(f64, f64)> {
        let (d1, d2) = self.inner.derivatives(x / self.lambda)?;
        let l = self.lambda;
        Some((
            l.powf(-self.alpha - 1.0) * d1,
            l.powf(-self.alpha - 2.0) * d2,
        ))
    }
}

/// Applies the scaling symmetry with factor `λ > 0`.
pub fn scale_solution<P: RadialProfile>(
    theta: P,
    case: &CriticalCase,
    lambda: f64,
) -> Result<Scaled<P>> {
    if !(lambda > 0.0) || !lambda.is_finite() {
        return domain(format!("scale factor λ = {lambda} must be positive"));
    }
    Ok(Scaled {
        inner: theta,
        alpha: case.alpha,
        lambda,
    })
}

/// A point of the autonomous phase plane in logarithmic coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhasePoint {
    pub z: f64,
    pub zp: f64,
    pub y: f64,
}

impl PhasePoint {
    pub fn x(&self) -> f64 {
        (-self.y).exp()
    }
}

/// `z = θ·x^α / b∞`, `y = −ln x`.
pub fn to_autonomous(case: &CriticalCase, theta: f64, x: f64) -> Result<(f64, f64)> {
    require_positive(x)?;
    Ok((theta * x.powf(case.alpha) / case.b_inf, -x.ln()))
}

/// Like [`to_autonomous`], also mapping `θ′` to `z′ = dz/dy`.
pub fn to_phase_point(case: &CriticalCase, theta: f64, dtheta: f64, x: f64) -> Result<PhasePoint> {
    let (z, y) = to_autonomous(case, theta, x)?;
    let xa = x.powf(case.alpha);
    let zp = -(dtheta * xa * x + case.alpha * theta * xa) / case.b_inf;
    Ok(PhasePoint { z, zp, y })
}

/// Inverse substitution: returns `(θ, x)`.
pub fn from_autonomous(case: &CriticalCase, pt: &PhasePoint) -> (f64, f64) {
    let x = (-pt.y).exp();
    (case.b_inf * pt.z * x.powf(-case.alpha), x)
}

/// `C = (2/(d−2)²)·z′² − z²/2 + z^(p+1)/(p+1)`, constant along solutions of
/// the critical autonomous equation. This is the unrescaled constant; see
/// [`crate::regimes::to_polynomial_constant`] for the per-dimension form.
pub fn first_integral(case: &CriticalCase, z: f64, zp: f64) -> f64 {
    let dm2 = (case.d - 2) as f64;
    let p1 = case.p + 1;
    2.0 / (dm2 * dm2) * zp * zp - z * z / 2.0 + z.powi(p1 as i32) / p1 as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_cases() {
        let c3 = critical_case(3).unwrap();
        assert_eq!(
            (c3.p(), c3.alpha_exact(), c3.a_ta_exact()),
            (5, Q::new(1, 2), Q::new(1, 3))
        );
        assert!((c3.b_inf() - 0.25f64.powf(0.25)).abs() < 1e-15);
        let c4 = critical_case(4).unwrap();
        assert_eq!(
            (c4.p(), c4.alpha(), c4.b_inf(), c4.a_ta()),
            (3, 1.0, 1.0, 0.125)
        );
        let c6 = critical_case(6).unwrap();
        assert_eq!((c6.p(), c6.alpha(), c6.b_inf()), (2, 2.0, 4.0));
        assert_eq!(c6.a_ta_exact(), Q::new(1, 24));
        assert_eq!(critical_case(5), Err(Error::NotCritical { d: 5 }));
        assert_eq!(critical_case(7), Err(Error::NotCritical { d: 7 }));
        assert!(matches!(critical_case(2), Err(Error::Domain(_))));
    }

    #[test]
    fn coefficients() {
        let c = autonomous_coefficients(3, 5).unwrap();
        assert_eq!((c.friction, c.force), (Q::from(0), Q::new(-1, 4)));
        let c = autonomous_coefficients(4, 3).unwrap();
        assert_eq!((c.friction, c.force), (Q::from(0), Q::from(-1)));
        let c = autonomous_coefficients(6, 2).unwrap();
        assert_eq!((c.friction, c.force), (Q::from(0), Q::from(-4)));
        let c = autonomous_coefficients(3, 3).unwrap();
        assert_eq!((c.friction, c.force), (Q::from(1), Q::from(0)));
        assert!(autonomous_coefficients(4, 1).is_err());
    }

    #[test]
    fn critical_force_matches_rate() {
        for d in [3, 4, 6] {
            let case = critical_case(d).unwrap();
            let c = autonomous_coefficients(d, case.p()).unwrap();
            assert_eq!(-c.force_f64(), case.autonomous_rate());
        }
    }

    #[test]
    fn simple_profiles() {
        let c4 = critical_case(4).unwrap();
        let c6 = critical_case(6).unwrap();
        let c3 = critical_case(3).unwrap();
        assert_eq!(singular_solution(&c4, 1.0).unwrap(), 1.0);
        assert_eq!(singular_solution(&c6, 2.0).unwrap(), 1.0);
        assert!(singular_solution(&c3, 0.0).is_err());
        assert_eq!(talenti_aubin(&c4, 0.0).unwrap(), 1.0);
        assert!((talenti_aubin(&c3, 3f64.sqrt()).unwrap() - 0.5f64.sqrt()).abs() < 1e-15);
        assert_eq!(talenti_aubin(&c6, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn scaling() {
        let c4 = critical_case(4).unwrap();
        let s = scale_solution(TalentiAubin(c4), &c4, 2.0).unwrap();
        assert!((s.value(2.0).unwrap() - 4.0 / 9.0).abs() < 1e-15);
        let one = scale_solution(TalentiAubin(c4), &c4, 1.0).unwrap();
        for x in [0.1, 1.0, 7.0] {
            assert_eq!(one.value(x).unwrap(), talenti_aubin(&c4, x).unwrap());
        }
        for d in [3, 4, 6] {
            let c = critical_case(d).unwrap();
            let s = scale_solution(Singular(c), &c, 3.7).unwrap();
            for x in [0.2, 1.0, 9.0] {
                let a = s.value(x).unwrap();
                let b = singular_solution(&c, x).unwrap();
                assert!((a - b).abs() < 1e-13 * b);
            }
        }
        assert!(scale_solution(TalentiAubin(c4), &c4, 0.0).is_err());
        assert!(scale_solution(TalentiAubin(c4), &c4, -1.0).is_err());
    }

    #[test]
    fn closures_are_profiles() {
        let f = |x: f64| x * x;
        assert_eq!(f.value(3.0).unwrap(), 9.0);
        assert!(f.derivatives(3.0).is_none());
    }

    #[test]
    fn substitution() {
        let c4 = critical_case(4).unwrap();
        let c6 = critical_case(6).unwrap();
        for x in [0.01, 1.0, 30.0] {
            for c in [c4, c6] {
                let th = singular_solution(&c, x).unwrap();
                let (z, _) = to_autonomous(&c, th, x).unwrap();
                assert!((z - 1.0).abs() < 1e-14);
            }
        }
        assert_eq!(to_autonomous(&c4, 0.0, 2.0).unwrap().0, 0.0);
        assert_eq!(to_autonomous(&c4, 1.0, 1.0).unwrap(), (1.0, 0.0));
        assert!(to_autonomous(&c4, 1.0, 0.0).is_err());
        let (th, x) = from_autonomous(
            &c6,
            &PhasePoint {
                z: 1.0,
                zp: 0.0,
                y: 0.0,
            },
        );
        assert_eq!((th, x), (4.0, 1.0));
        let (th, _) = from_autonomous(
            &c6,
            &PhasePoint {
                z: 0.0,
                zp: 0.0,
                y: 3.0,
            },
        );
        assert_eq!(th, 0.0);
    }

    #[test]
    fn first_integral_values() {
        let c4 = critical_case(4).unwrap();
        let c6 = critical_case(6).unwrap();
        assert_eq!(first_integral(&c4, 0.0, 0.0), 0.0);
        assert!((first_integral(&c4, 1.0, 0.0) + 0.25).abs() < 1e-16);
        assert!((first_integral(&c6, 1.0, 0.0) + 1.0 / 6.0).abs() < 1e-16);
    }

    #[test]
    fn case_serde_round_trip() {
        let c6 = critical_case(6).unwrap();
        let s = serde_json::to_string(&c6).unwrap();
        let back: CriticalCase = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c6);
        assert!(serde_json::from_str::<CriticalCase>(
            r#"{"d":5,"p":2,"alpha":1,"b_inf":1,"a_ta":1}"#
        )
        .is_err());
    }
}
