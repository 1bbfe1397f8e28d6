//! Real-argument elliptic functions.
//!
//! * [`carlson_rf`]: Carlson's symmetric integral `R_F` by duplication.
//! * [`complete_k`], [`incomplete_f`], [`arcsn`]: first-kind integrals built on `R_F`.
//! * [`jacobi_sn`]: `sn`, `cn`, `dn` by descending Landen transformation (AGM).
//! * [`weierstrass_p`]: `℘(z; g2, g3)` for real `z` and real invariants, reduced
//!   to Jacobi functions through the real roots of `4t³ − g2·t − g3`.
//!
//! The modulus convention is `k`, not the parameter `m = k²`.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{domain, Error, Result};
use crate::poly;

/// Duplication stops once every argument is within this relative spread of
/// the mean; the fifth-order tail then leaves an error of order `ERRTOL⁶`.
const RF_ERRTOL: f64 = 0.002_154_434_690_031_884; // (1e-16)^(1/6)
const RF_MAX_ITER: usize = 100;
const AGM_TOL: f64 = 1e-15;
const AGM_MAX_ITER: usize = 40;

/// Arguments closer than this to `z = 0` use the Laurent series for `℘`.
pub const LAURENT_RADIUS: f64 = 1e-3;
/// Reduced Jacobi arguments closer than this to a lattice point are poles.
pub const POLE_TOLERANCE: f64 = 1e-9;
const OVERFLOW_GUARD: f64 = 1e300;

/// Elliptic modulus `k ∈ [0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Modulus(f64);

impl Modulus {
    pub fn new(k: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&k) {
            return domain(format!("modulus k = {k} outside [0, 1]"));
        }
        Ok(Modulus(k))
    }

    /// Builds a modulus from the parameter `m = k²`.
    pub fn from_parameter(m: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&m) {
            return domain(format!("parameter m = {m} outside [0, 1]"));
        }
        Ok(Modulus(m.sqrt()))
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Complementary modulus squared, `1 − k²`, computed without cancellation.
    pub fn complementary_sq(self) -> f64 {
        (1.0 - self.0) * (1.0 + self.0)
    }
}

impl TryFrom<f64> for Modulus {
    type Error = Error;
    fn try_from(k: f64) -> Result<Self> {
        Modulus::new(k)
    }
}

impl From<Modulus> for f64 {
    fn from(k: Modulus) -> f64 {
        k.0
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Values of the three Jacobi functions at one point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipticValue {
    pub sn: f64,
    pub cn: f64,
    pub dn: f64,
    pub k: Modulus,
}

/// Carlson's symmetric elliptic integral of the first kind,
///
/// ```text
/// R_F(x, y, z) = ½ ∫₀^∞ dt / √((t + x)(t + y)(t + z))
/// ```
///
/// All arguments must be non-negative and at most one may vanish.
pub fn carlson_rf(x: f64, y: f64, z: f64) -> Result<f64> {
    if !(x.is_finite() && y.is_finite() && z.is_finite()) {
        return domain("R_F arguments must be finite");
    }
    if x < 0.0 || y < 0.0 || z < 0.0 {
        return domain(format!("R_F({x}, {y}, {z}): negative argument"));
    }
    if [x, y, z].iter().filter(|&&v| v == 0.0).count() > 1 {
        return domain(format!("R_F({x}, {y}, {z}): two or more zero arguments"));
    }
    let (mut x, mut y, mut z) = (x, y, z);
    for _ in 0..RF_MAX_ITER {
        let mean = (x + y + z) / 3.0;
        let dx = (mean - x) / mean;
        let dy = (mean - y) / mean;
        let dz = (mean - z) / mean;
        if dx.abs().max(dy.abs()).max(dz.abs()) < RF_ERRTOL {
            let e2 = dx * dy - dz * dz;
            let e3 = dx * dy * dz;
            let series = 1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0;
            return Ok(series / mean.sqrt());
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lambda = sx * (sy + sz) + sy * sz;
        x = 0.25 * (x + lambda);
        y = 0.25 * (y + lambda);
        z = 0.25 * (z + lambda);
    }
    Err(Error::Convergence(format!(
        "R_F duplication exceeded {RF_MAX_ITER} iterations"
    )))
}

/// Complete elliptic integral of the first kind `K(k)`, for `0 ≤ k < 1`.
pub fn complete_k(k: Modulus) -> Result<f64> {
    if k.value() >= 1.0 {
        return domain("K(k) diverges at k = 1");
    }
    carlson_rf(0.0, k.complementary_sq(), 1.0)
}

/// Incomplete elliptic integral of the first kind `F(φ, k)`, for `0 ≤ k < 1`.
///
/// Amplitudes outside `[−π/2, π/2]` use `F(φ + π, k) = F(φ, k) + 2K(k)`.
pub fn incomplete_f(phi: f64, k: Modulus) -> Result<f64> {
    if !phi.is_finite() {
        return domain("amplitude must be finite");
    }
    if k.value() >= 1.0 {
        return domain("F(φ, k) requires k < 1");
    }
    let turns = (phi / std::f64::consts::PI).round();
    let reduced = phi - turns * std::f64::consts::PI;
    let s = reduced.sin();
    let c = reduced.cos();
    let kk = k.value();
    let principal = s * carlson_rf(c * c, (1.0 - kk * s) * (1.0 + kk * s), 1.0)?;
    if turns == 0.0 {
        Ok(principal)
    } else {
        Ok(principal + 2.0 * turns * complete_k(k)?)
    }
}

/// Inverse of `sn(·, k)` on `[−1, 1]`: returns `u ∈ [−K, K]` with `sn(u, k) = s`.
pub fn arcsn(s: f64, k: Modulus) -> Result<f64> {
    if !(-1.0..=1.0).contains(&s) {
        return domain(format!("arcsn argument {s} outside [-1, 1]"));
    }
    let kk = k.value();
    if kk == 1.0 {
        if s.abs() == 1.0 {
            return domain("arcsn(±1, 1) diverges");
        }
        return Ok(s.atanh());
    }
    Ok(s * carlson_rf((1.0 - s) * (1.0 + s), (1.0 - kk * s) * (1.0 + kk * s), 1.0)?)
}

/// Jacobi elliptic functions `sn`, `cn`, `dn` at real `u`.
///
/// `k = 0` and `k = 1` use the circular and hyperbolic forms exactly. Otherwise
/// the amplitude comes from the descending Landen (AGM) recursion and
/// `dn = √(cn² + k′²·sn²)`, which stays accurate near `u = K`.
pub fn jacobi_sn(u: f64, k: Modulus) -> Result<EllipticValue> {
    if !u.is_finite() {
        return domain("Jacobi argument must be finite");
    }
    let kk = k.value();
    if kk == 0.0 {
        let (sn, cn) = u.sin_cos();
        return Ok(EllipticValue { sn, cn, dn: 1.0, k });
    }
    if kk == 1.0 {
        let sech = 1.0 / u.cosh();
        return Ok(EllipticValue {
            sn: u.tanh(),
            cn: sech,
            dn: sech,
            k,
        });
    }

    let kc2 = k.complementary_sq();
    let mut u = u;
    let quarter = complete_k(k)?;
    let period = 4.0 * quarter;
    if u.abs() > period {
        u -= period * (u / period).round();
    }

    let mut a = [0.0f64; AGM_MAX_ITER + 1];
    let mut c = [0.0f64; AGM_MAX_ITER + 1];
    a[0] = 1.0;
    c[0] = kk;
    let mut b = kc2.sqrt();
    let mut n = 0;
    while c[n].abs() >= AGM_TOL {
        if n == AGM_MAX_ITER {
            return Err(Error::Convergence(format!(
                "AGM failed to contract for k = {kk}"
            )));
        }
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }

    let mut phi = 2f64.powi(n as i32) * a[n] * u;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] * phi.sin() / a[j]).asin());
    }
    let (sn, cn) = phi.sin_cos();
    let dn = (cn * cn + kc2 * sn * sn).sqrt();
    Ok(EllipticValue { sn, cn, dn, k })
}

/// Weierstrass invariants `(g2, g3)` of the cubic `4t³ − g2·t − g3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeierstrassInvariants {
    pub g2: f64,
    pub g3: f64,
}

/// How `℘` maps onto a Jacobi function for a given pair of invariants.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Reduction {
    /// `g2 = g3 = 0`: `℘(z) = z⁻²`.
    Equianharmonic0,
    /// `Δ ≥ 0`, roots `e1 ≥ e2 ≥ e3`:
    /// `℘(z) = e3 + (e1 − e3) / sn²(√(e1 − e3)·z, k)`, `k² = (e2 − e3)/(e1 − e3)`.
    ThreeReal { e3: f64, scale: f64, k: Modulus },
    /// `Δ < 0`, one real root `e2`, `H = √(3e2² − g2/4)`:
    /// `℘(z) = e2 + H·(1 + cn)²/sn²` at `2√H·z`, `k² = ½ − 3e2/(4H)`.
    OneReal {
        e2: f64,
        h: f64,
        scale: f64,
        k: Modulus,
    },
}

impl Reduction {
    /// Real period of the reduced Jacobi argument (`None` when infinite).
    fn reduced_period(&self) -> Option<f64> {
        match *self {
            Reduction::Equianharmonic0 => None,
            Reduction::ThreeReal { k, .. } => complete_k(k).ok().map(|kq| 2.0 * kq),
            Reduction::OneReal { k, .. } => complete_k(k).ok().map(|kq| 4.0 * kq),
        }
    }

    fn scale(&self) -> f64 {
        match *self {
            Reduction::Equianharmonic0 => 1.0,
            Reduction::ThreeReal { scale, .. } | Reduction::OneReal { scale, .. } => scale,
        }
    }
}

impl WeierstrassInvariants {
    pub fn new(g2: f64, g3: f64) -> Result<Self> {
        if !(g2.is_finite() && g3.is_finite()) {
            return domain("Weierstrass invariants must be finite");
        }
        Ok(WeierstrassInvariants { g2, g3 })
    }

    /// `Δ = g2³ − 27·g3²`.
    pub fn discriminant(&self) -> f64 {
        self.g2.powi(3) - 27.0 * self.g3 * self.g3
    }

    /// Real roots of `4t³ − g2·t − g3`, ascending (three when `Δ ≥ 0`).
    pub fn real_roots(&self) -> Vec<f64> {
        let p = -self.g2 / 4.0;
        let q = -self.g3 / 4.0;
        let coeffs = [-self.g3, -self.g2, 0.0, 4.0];
        let raw: Vec<f64> = if self.discriminant() >= 0.0 {
            poly::trig_roots(p, q).to_vec()
        } else {
            vec![poly::cardano_root(p, q)]
        };
        let mut roots: Vec<f64> = raw.into_iter().map(|r| poly::polish(&coeffs, r)).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        roots
    }

    fn reduction(&self) -> Reduction {
        if self.g2 == 0.0 && self.g3 == 0.0 {
            return Reduction::Equianharmonic0;
        }
        let roots = self.real_roots();
        if roots.len() == 3 {
            let (e3, e2, e1) = (roots[0], roots[1], roots[2]);
            let spread = e1 - e3;
            let m = ((e2 - e3) / spread).clamp(0.0, 1.0);
            Reduction::ThreeReal {
                e3,
                scale: spread.sqrt(),
                k: Modulus(m.sqrt()),
            }
        } else {
            let e2 = roots[0];
            let h = (3.0 * e2 * e2 - self.g2 / 4.0).max(0.0).sqrt();
            let m = (0.5 - 3.0 * e2 / (4.0 * h)).clamp(0.0, 1.0);
            Reduction::OneReal {
                e2,
                h,
                scale: 2.0 * h.sqrt(),
                k: Modulus(m.sqrt()),
            }
        }
    }

    /// Real period `2ω` of `℘` along the real axis, `None` if infinite.
    pub fn real_period(&self) -> Option<f64> {
        let r = self.reduction();
        r.reduced_period().map(|p| p / r.scale())
    }

    /// Distance from `z` to the nearest real lattice point (pole of `℘`).
    pub fn pole_distance(&self, z: f64) -> f64 {
        match self.real_period() {
            Some(period) => (z - period * (z / period).round()).abs(),
            None => z.abs(),
        }
    }
}

/// Three-term Laurent expansion `z⁻² + (g2/20)z² + (g3/28)z⁴`.
pub fn weierstrass_laurent(z: f64, inv: WeierstrassInvariants) -> f64 {
    let z2 = z * z;
    1.0 / z2 + inv.g2 / 20.0 * z2 + inv.g3 / 28.0 * z2 * z2
}

/// Weierstrass `℘(z; g2, g3)` for real nonzero `z`.
///
/// Small `|z|` falls back to the Laurent series; otherwise see
/// [`weierstrass_p_jacobi`].
pub fn weierstrass_p(z: f64, inv: WeierstrassInvariants) -> Result<f64> {
    if !(inv.g2.is_finite() && inv.g3.is_finite()) {
        return domain("Weierstrass invariants must be finite");
    }
    if !z.is_finite() {
        return domain("℘ argument must be finite");
    }
    if z.abs() < LAURENT_RADIUS {
        if z.abs() < POLE_TOLERANCE {
            return Err(Error::Pole { at: z });
        }
        return Ok(weierstrass_laurent(z, inv));
    }
    weierstrass_p_jacobi(z, inv)
}

/// `℘` through the Jacobi reduction alone, with no series shortcut near the
/// origin. Poles are reported when the reduced argument lies within
/// [`POLE_TOLERANCE`] of a lattice point.
pub fn weierstrass_p_jacobi(z: f64, inv: WeierstrassInvariants) -> Result<f64> {
    let reduction = inv.reduction();
    let scale = reduction.scale();
    let mut u = scale * z;
    if let Some(period) = reduction.reduced_period() {
        u -= period * (u / period).round();
    }
    if u.abs() < POLE_TOLERANCE {
        return Err(Error::Pole { at: z });
    }
    let value = match reduction {
        Reduction::Equianharmonic0 => 1.0 / (z * z),
        Reduction::ThreeReal { e3, scale, k } => {
            let v = jacobi_sn(u, k)?;
            e3 + scale * scale / (v.sn * v.sn)
        }
        Reduction::OneReal { e2, h, k, .. } => {
            let v = jacobi_sn(u, k)?;
            // (1 + cn)/sn = sn/(1 − cn); pick the side without cancellation
            let r = if v.cn >= 0.0 {
                (1.0 + v.cn) / v.sn
            } else {
                v.sn / (1.0 - v.cn)
            };
            e2 + h * r * r
        }
    };
    if !value.is_finite() || value.abs() > OVERFLOW_GUARD {
        return Err(Error::Pole { at: z });
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn k(v: f64) -> Modulus {
        Modulus::new(v).unwrap()
    }

    #[test]
    fn modulus_rejects_out_of_range() {
        assert!(Modulus::new(-0.1).is_err());
        assert!(Modulus::new(1.0 + 1e-12).is_err());
        assert!(Modulus::new(1.0).is_ok());
        assert!(serde_json::from_str::<Modulus>("1.5").is_err());
    }

    #[test]
    fn rf_trivial_values() {
        assert!((carlson_rf(1.0, 1.0, 1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((carlson_rf(4.0, 4.0, 4.0).unwrap() - 0.5).abs() < 1e-15);
        assert!((carlson_rf(0.0, 1.0, 1.0).unwrap() - FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn rf_domain_errors() {
        assert!(matches!(carlson_rf(0.0, 0.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(carlson_rf(-1.0, 1.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(
            carlson_rf(f64::NAN, 1.0, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn complete_k_edges() {
        assert!((complete_k(k(0.0)).unwrap() - FRAC_PI_2).abs() < 1e-15);
        assert!(matches!(complete_k(k(1.0)), Err(Error::Domain(_))));
    }

    #[test]
    fn incomplete_f_values() {
        assert_eq!(incomplete_f(0.0, k(0.7)).unwrap(), 0.0);
        let f = incomplete_f(FRAC_PI_2, k(0.7)).unwrap();
        assert!((f - complete_k(k(0.7)).unwrap()).abs() < 1e-14);
        assert!((incomplete_f(PI / 6.0, k(0.0)).unwrap() - PI / 6.0).abs() < 1e-15);
        // odd, quasi-periodic
        let a = incomplete_f(0.4, k(0.5)).unwrap();
        assert!((incomplete_f(-0.4, k(0.5)).unwrap() + a).abs() < 1e-15);
        let kq = complete_k(k(0.5)).unwrap();
        assert!((incomplete_f(0.4 + PI, k(0.5)).unwrap() - a - 2.0 * kq).abs() < 1e-13);
        assert!(incomplete_f(0.3, k(1.0)).is_err());
    }

    #[test]
    fn arcsn_values() {
        assert_eq!(arcsn(0.0, k(0.5)).unwrap(), 0.0);
        let kq = complete_k(k(0.5)).unwrap();
        assert!((arcsn(1.0, k(0.5)).unwrap() - kq).abs() < 1e-15);
        assert!((arcsn(0.5, k(0.0)).unwrap() - PI / 6.0).abs() < 1e-15);
        assert!(arcsn(1.5, k(0.5)).is_err());
        assert!((arcsn(0.5, k(1.0)).unwrap() - 0.5f64.atanh()).abs() < 1e-15);
    }

    #[test]
    fn sn_degenerations() {
        let v = jacobi_sn(0.0, k(0.5)).unwrap();
        assert_eq!((v.sn, v.cn, v.dn), (0.0, 1.0, 1.0));
        let v = jacobi_sn(1.0, k(0.0)).unwrap();
        assert!((v.sn - 1f64.sin()).abs() < 1e-16 && (v.cn - 1f64.cos()).abs() < 1e-16);
        let v = jacobi_sn(1.0, k(1.0)).unwrap();
        assert!((v.sn - 0.761_594_155_955_764_9).abs() < 1e-15);
        assert!((v.cn - 0.648_054_273_663_885_4).abs() < 1e-15);
        assert_eq!(v.cn, v.dn);
    }

    #[test]
    fn sn_near_degenerate_moduli_are_continuous() {
        for &u in &[0.3, 1.2, -2.5] {
            let lo = jacobi_sn(u, k(1e-9)).unwrap();
            assert!((lo.sn - u.sin()).abs() < 1e-9);
            let hi = jacobi_sn(u, k(1.0 - 1e-12)).unwrap();
            assert!((hi.sn - u.tanh()).abs() < 1e-9, "{} vs {}", hi.sn, u.tanh());
            assert!((hi.dn - 1.0 / u.cosh()).abs() < 1e-9);
        }
    }

    #[test]
    fn sn_quarter_and_full_period() {
        let m = k(0.6);
        let kq = complete_k(m).unwrap();
        let v = jacobi_sn(kq, m).unwrap();
        assert!((v.sn - 1.0).abs() < 1e-14);
        assert!((v.dn - 0.8).abs() < 1e-14);
        for &u in &[0.1, 0.77, -1.9] {
            let a = jacobi_sn(u, m).unwrap();
            let b = jacobi_sn(u + 4.0 * kq, m).unwrap();
            assert!((a.sn - b.sn).abs() < 1e-13);
            let c = jacobi_sn(u + 2.0 * kq, m).unwrap();
            assert!((a.sn + c.sn).abs() < 1e-13);
        }
    }

    #[test]
    fn weierstrass_laurent_and_evenness() {
        let inv = WeierstrassInvariants::new(0.75, -0.125).unwrap();
        let z = 1e-4;
        let v = weierstrass_p(z, inv).unwrap();
        assert!((v - (1e8 + 0.75 / 20.0 * 1e-8)).abs() < 1e-6);
        let a = weierstrass_p(0.3, inv).unwrap();
        let b = weierstrass_p(-0.3, inv).unwrap();
        assert!((a - b).abs() < 1e-12 * a.abs());
    }

    #[test]
    fn weierstrass_zero_invariants() {
        let inv = WeierstrassInvariants::new(0.0, 0.0).unwrap();
        assert!((weierstrass_p(0.5, inv).unwrap() - 4.0).abs() < 1e-15);
        assert!(inv.real_period().is_none());
    }

    #[test]
    fn weierstrass_pole_reported() {
        for inv in [
            WeierstrassInvariants::new(0.75, -0.375).unwrap(),
            WeierstrassInvariants::new(0.75, 0.0).unwrap(),
        ] {
            let period = inv.real_period().unwrap();
            assert!(matches!(
                weierstrass_p(period, inv),
                Err(Error::Pole { .. })
            ));
            assert!(matches!(weierstrass_p(0.0, inv), Err(Error::Pole { .. })));
            assert!(inv.pole_distance(period * 2.0 + 0.01) < 0.0100001);
        }
        assert!(WeierstrassInvariants::new(f64::NAN, 0.0).is_err());
    }

    #[test]
    fn degenerate_discriminant_matches_hyperbolic_form() {
        // g2 = 3/4, g3 = -1/8: roots -1/2 and 1/4 (double),
        // ℘(z) = 1/4 + (3/4) / sinh²(√3 z / 2).
        let inv = WeierstrassInvariants::new(0.75, -0.125).unwrap();
        assert!(inv.discriminant().abs() < 1e-15);
        for &z in &[0.2, 0.9, 2.5] {
            let s = (3f64.sqrt() * z / 2.0).sinh();
            let want = 0.25 + 0.75 / (s * s);
            let got = weierstrass_p(z, inv).unwrap();
            assert!((got - want).abs() < 1e-9 * want.abs(), "{got} vs {want}");
        }
        // g3 = +1/8: ℘(z) = -1/4 + (3/4) / sin²(√3 z / 2).
        let inv = WeierstrassInvariants::new(0.75, 0.125).unwrap();
        for &z in &[0.2, 0.9, 2.5] {
            let s = (3f64.sqrt() * z / 2.0).sin();
            let want = -0.25 + 0.75 / (s * s);
            let got = weierstrass_p(z, inv).unwrap();
            assert!((got - want).abs() < 1e-9 * want.abs(), "{got} vs {want}");
        }
    }
}
