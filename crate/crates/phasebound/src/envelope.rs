//! Closed-form phase envelopes and their critical points.
//!
//! Seven elementary functions bound the three phase functions computed
//! by [`crate::phase`]:
//!
//! * `theta_upper`, `theta_lower` (and its clamp at `-pi/2`) bound the
//!   Bessel phase from above and below on `(nu, inf)`;
//! * `phi_lower = theta_upper + pi/2` and `phi_upper` (clamped to the
//!   constant `z_star` left of `x_star`) bound the derivative phase;
//! * `psi_lower` bounds the ultraspherical derivative phase from below
//!   beyond the largest root `x_at` of the degree-14 polynomial
//!   `r_poly`.
//!
//! They are the two- and three-term truncations of the uniform (Debye)
//! expansions of the phases; the sign-definiteness of the truncation
//! error is what [`crate::liouville`] verifies.  Everything here is a
//! closed form: the only iterations are the bracketed root searches for
//! `x_star` (a cubic after the substitution `xi = x^2 - nu^2`) and
//! `x_at`.

use crate::dd::horner_dd;
use crate::error::Error;
use crate::Result;
use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

/// Selector for the seven envelope branches.
///
/// `PsiLower` carries the ultraspherical exponent `eta`; the order `nu`
/// is passed separately to [`eval_envelope`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EnvelopeKind {
    /// Upper bound of the Bessel phase; domain `[nu, inf)`, value
    /// `-pi/4` at the left edge.
    ThetaUpper,
    /// Lower bound of the Bessel phase; domain `(nu, inf)`, tends to
    /// `-inf` at the edge.
    ThetaLower,
    /// `max(ThetaLower, -pi/2)`, the form used by zero counting.
    ThetaLowerClamped,
    /// Lower bound of the derivative phase, `ThetaUpper + pi/2`.
    PhiLower,
    /// Upper bound of the derivative phase; monotone only beyond
    /// `x_star`.
    PhiUpper,
    /// `PhiUpper` frozen at the constant `z_star` left of `x_star`.
    PhiUpperClamped,
    /// Lower bound of the ultraspherical derivative phase; domain
    /// `(mu, inf)` with `mu^2 = nu^2 - eta^2`, monotone beyond `x_hash`.
    PsiLower { eta: f64 },
}

impl EnvelopeKind {
    pub(crate) fn name(&self) -> &'static str {
        match self {
            EnvelopeKind::ThetaUpper => "theta_upper",
            EnvelopeKind::ThetaLower => "theta_lower",
            EnvelopeKind::ThetaLowerClamped => "theta_lower_clamped",
            EnvelopeKind::PhiLower => "phi_lower",
            EnvelopeKind::PhiUpper => "phi_upper",
            EnvelopeKind::PhiUpperClamped => "phi_upper_clamped",
            EnvelopeKind::PsiLower { .. } => "psi_lower",
        }
    }
}

/// Critical data of the non-monotone envelopes.
#[derive(Clone, Copy, Debug)]
pub struct CriticalPoints {
    /// Unique root of `p_poly` in `(nu, inf)`; `phi_upper` is increasing
    /// beyond it.
    pub x_star: f64,
    /// `phi_upper(x_star)`, positive and strictly decreasing in `nu`.
    pub z_star: f64,
    /// Zero of the `psi_lower` derivative (closed form); present when
    /// `eta` was supplied.
    pub x_hash: Option<f64>,
    /// Greatest positive real root of `r_poly`; present when `eta` was
    /// supplied.  `psi_lower` bounds the true phase beyond it.
    pub x_at: Option<f64>,
}

#[inline]
fn xi2(nu: f64, x: f64) -> f64 {
    (x - nu) * (x + nu)
}

/// `sin(t) - t cos(t)` for `t = asin(s)`, stable near `s = 0`.
fn sin_minus_tcos(s: f64) -> f64 {
    if s < 1e-2 {
        let t = s.asin();
        let t2 = t * t;
        // t^3/3 - t^5/30 + t^7/840 - t^9/45360
        t * t2 * (1.0 / 3.0 + t2 * (-1.0 / 30.0 + t2 * (1.0 / 840.0 - t2 / 45360.0)))
    } else {
        let t = s.asin();
        s - t * (1.0 - s * s).sqrt()
    }
}

/// `theta_upper = sqrt(x^2-nu^2) - nu arccos(nu/x) - pi/4`, rearranged
/// through `x (sin t - t cos t) - pi/4` with `cos t = nu/x` so the edge
/// region does not cancel.
fn theta_upper(nu: f64, x: f64) -> f64 {
    if nu == 0.0 {
        return x - FRAC_PI_4;
    }
    let s = xi2(nu, x).sqrt() / x;
    x * sin_minus_tcos(s) - FRAC_PI_4
}

fn theta_lower(nu: f64, x: f64) -> f64 {
    let xi = xi2(nu, x);
    theta_upper(nu, x) - (3.0 * x * x + 2.0 * nu * nu) / (24.0 * xi * xi.sqrt())
}

fn phi_upper(nu: f64, x: f64) -> f64 {
    let xi = xi2(nu, x);
    theta_upper(nu, x) + FRAC_PI_2 + (9.0 * x * x - 2.0 * nu * nu) / (24.0 * xi * xi.sqrt())
}

/// `mu = sqrt(nu^2 - eta^2)` computed without cancellation.
pub(crate) fn ultra_mu(nu: f64, eta: f64) -> Result<f64> {
    if !(eta > 0.0) || nu < eta {
        return Err(Error::domain(format!(
            "ultraspherical envelope requires nu >= eta > 0, got nu={nu} eta={eta}"
        )));
    }
    Ok(((nu - eta) * (nu + eta)).sqrt())
}

/// `asin(u)/u` with the removable singularity filled in.
fn asinc(u: f64) -> f64 {
    if u.abs() < 1e-4 {
        1.0 + u * u / 6.0 + 3.0 * u.powi(4) / 40.0
    } else {
        u.asin() / u
    }
}

/// The `psi_lower` envelope in a form that is uniform in `mu -> 0`
/// (i.e. `eta -> nu`): the two `eta^2/mu` terms are combined into
/// `(eta^2/2) asin(mu/x)/mu`, which tends to `eta^2/(2x)`.
fn psi_lower(nu: f64, eta: f64, x: f64) -> f64 {
    let mu = match ultra_mu(nu, eta) {
        Ok(m) => m,
        Err(_) => f64::NAN,
    };
    let g = (x - mu) * (x + mu);
    let sg = g.sqrt();
    // mu - nu = -eta^2 / (mu + nu), exact to rounding even when eta << nu
    let mu_minus_nu = -eta * eta / (mu + nu);
    let u = mu / x;
    sg - mu * u.acos() + eta / sg
        + FRAC_PI_4 * (2.0 * mu_minus_nu + 1.0)
        + 0.5 * eta * eta * asinc(u) / x
}

fn psi_lower_deriv(nu: f64, eta: f64, x: f64) -> f64 {
    let mu = ultra_mu(nu, eta).map(|m| m).unwrap_or(f64::NAN);
    let mu2 = mu * mu;
    let x2 = x * x;
    let num = 2.0 * x2 * x2 - x2 * (eta * (eta + 2.0) + 4.0 * mu2) + mu2 * (eta * eta + 2.0 * mu2);
    let g = (x - mu) * (x + mu);
    num / (2.0 * x * g * g.sqrt())
}

/// Evaluates one envelope branch.  Errors with `Domain` at or below the
/// branch's left edge (the envelopes diverge there; no infinities are
/// returned).
pub fn eval_envelope(kind: EnvelopeKind, nu: f64, x: f64) -> Result<f64> {
    if nu < 0.0 || !nu.is_finite() || !x.is_finite() {
        return Err(Error::domain("envelope requires finite x and nu >= 0"));
    }
    match kind {
        EnvelopeKind::ThetaUpper => {
            if x < nu {
                return Err(Error::domain(format!("theta_upper needs x >= nu (x={x}, nu={nu})")));
            }
            Ok(theta_upper(nu, x))
        }
        EnvelopeKind::ThetaLower => {
            if x <= nu {
                return Err(Error::domain(format!("theta_lower needs x > nu (x={x}, nu={nu})")));
            }
            Ok(theta_lower(nu, x))
        }
        EnvelopeKind::ThetaLowerClamped => {
            if x <= nu {
                return Err(Error::domain(format!("theta_lower needs x > nu (x={x}, nu={nu})")));
            }
            Ok(theta_lower(nu, x).max(-FRAC_PI_2))
        }
        EnvelopeKind::PhiLower => {
            if x < nu {
                return Err(Error::domain(format!("phi_lower needs x >= nu (x={x}, nu={nu})")));
            }
            Ok(theta_upper(nu, x) + FRAC_PI_2)
        }
        EnvelopeKind::PhiUpper => {
            if x <= nu {
                return Err(Error::domain(format!("phi_upper needs x > nu (x={x}, nu={nu})")));
            }
            Ok(phi_upper(nu, x))
        }
        EnvelopeKind::PhiUpperClamped => {
            if x <= nu {
                return Err(Error::domain(format!("phi_upper needs x > nu (x={x}, nu={nu})")));
            }
            let cp = critical_points(nu, None)?;
            if x < cp.x_star {
                Ok(cp.z_star)
            } else {
                Ok(phi_upper(nu, x))
            }
        }
        EnvelopeKind::PsiLower { eta } => {
            let mu = ultra_mu(nu, eta)?;
            if x <= mu {
                return Err(Error::domain(format!("psi_lower needs x > mu (x={x}, mu={mu})")));
            }
            Ok(psi_lower(nu, eta, x))
        }
    }
}

/// Derivative of an envelope branch, in closed form.
pub fn envelope_derivative(kind: EnvelopeKind, nu: f64, x: f64) -> Result<f64> {
    match kind {
        EnvelopeKind::ThetaUpper | EnvelopeKind::PhiLower => {
            if x < nu {
                return Err(Error::domain("derivative outside domain"));
            }
            Ok(xi2(nu, x).sqrt() / x)
        }
        EnvelopeKind::ThetaLower => {
            if x <= nu {
                return Err(Error::domain("derivative outside domain"));
            }
            let x2 = x * x;
            let nu2 = nu * nu;
            let num = horner_dd(
                &[
                    -8.0 * nu2 * nu2 * nu2,
                    4.0 * (6.0 * nu2 * nu2 + nu2),
                    1.0 - 24.0 * nu2,
                    8.0,
                ],
                x2,
            );
            let xi = xi2(nu, x);
            Ok(num / (8.0 * x * xi * xi * xi.sqrt()))
        }
        EnvelopeKind::ThetaLowerClamped => {
            if x <= nu {
                return Err(Error::domain("derivative outside domain"));
            }
            if theta_lower(nu, x) < -FRAC_PI_2 {
                Ok(0.0)
            } else {
                envelope_derivative(EnvelopeKind::ThetaLower, nu, x)
            }
        }
        EnvelopeKind::PhiUpper => {
            if x <= nu {
                return Err(Error::domain("derivative outside domain"));
            }
            let xi = xi2(nu, x);
            Ok(p_poly(nu, x) / (8.0 * x * xi * xi * xi.sqrt()))
        }
        EnvelopeKind::PhiUpperClamped => {
            if x <= nu {
                return Err(Error::domain("derivative outside domain"));
            }
            let cp = critical_points(nu, None)?;
            if x < cp.x_star {
                Ok(0.0)
            } else {
                envelope_derivative(EnvelopeKind::PhiUpper, nu, x)
            }
        }
        EnvelopeKind::PsiLower { eta } => {
            let mu = ultra_mu(nu, eta)?;
            if x <= mu {
                return Err(Error::domain("derivative outside domain"));
            }
            Ok(psi_lower_deriv(nu, eta, x))
        }
    }
}

/// The sextic whose unique root in `(nu, inf)` is `x_star`:
/// `8x^6 - 3(8nu^2+1)x^4 + 4nu^2(6nu^2-1)x^2 - 8nu^6`.
pub fn p_poly(nu: f64, x: f64) -> f64 {
    let nu2 = nu * nu;
    horner_dd(
        &[
            -8.0 * nu2 * nu2 * nu2,
            4.0 * nu2 * (6.0 * nu2 - 1.0),
            -3.0 * (8.0 * nu2 + 1.0),
            8.0,
        ],
        x * x,
    )
}

/// Same polynomial after `x = sqrt(nu^2 + xi)`:
/// `8 xi^3 - 3 xi^2 - 10 nu^2 xi - 7 nu^4`.
fn p_poly_shifted(nu: f64, xi: f64) -> f64 {
    let nu2 = nu * nu;
    horner_dd(&[-7.0 * nu2 * nu2, -10.0 * nu2, -3.0, 8.0], xi)
}

/// The degree-14 polynomial controlling the `psi_lower` comparison,
/// grouped by powers of `x^2` with coefficients in `(mu, eta)`.
pub fn r_poly(mu: f64, eta: f64, x: f64) -> f64 {
    let e = eta;
    let e2 = e * e;
    let m2 = mu * mu;
    let m4 = m2 * m2;
    let m6 = m4 * m2;
    let ep2 = e + 2.0;
    let c7 = 12.0;
    let c6 = -44.0 * m2 + 4.0 * e * (e2 * e + 4.0 * e2 - 5.0 * e - 18.0);
    let c5 = 40.0 * m4 + 8.0 * e * (-3.0 * e2 * e - 10.0 * e2 + 6.0 * e + 5.0) * m2
        - e2 * ep2 * ep2 * (4.0 * e2 + 8.0 * e - 3.0);
    let c4 = 40.0 * m6
        + 4.0 * e * (15.0 * e2 * e + 40.0 * e2 + 2.0 * e + 70.0) * m4
        + e2 * (20.0 * e2 * e2 + 96.0 * e2 * e + 147.0 * e2 + 96.0 * e + 52.0) * m2
        + e2 * e2 * ep2.powi(4);
    let c3 = -100.0 * m4 * m4
        - 8.0 * e * (10.0 * e2 * e + 20.0 * e2 + 14.0 * e + 45.0) * m6
        - e2 * (40.0 * e2 * e2 + 144.0 * e2 * e + 171.0 * e2 + 116.0 * e + 80.0) * m4
        - 4.0 * e2 * e2 * e * ep2.powi(3) * m2;
    let c2 = 68.0 * m4 * m6
        + 4.0 * e * (15.0 * e2 * e + 20.0 * e2 + 27.0 * e + 20.0) * m4 * m4
        + e2 * (40.0 * e2 * e2 + 96.0 * e2 * e + 81.0 * e2 + 24.0 * e + 16.0) * m6
        + 6.0 * e2 * e2 * e2 * ep2 * ep2 * m4;
    let c1 = -16.0 * m6 * m6
        - 8.0 * e * (3.0 * e2 * e + 2.0 * e2 + 4.0 * e - 4.0) * m4 * m6
        - 4.0 * e2 * e * (5.0 * e2 * e + 6.0 * e2 + 3.0 * e - 4.0) * m4 * m4
        - 4.0 * e2 * e2 * e2 * e * ep2 * m6;
    let c0 = 4.0 * e2 * e2 * m6 * m6 + 4.0 * e2 * e2 * e2 * m4 * m6 + e2 * e2 * e2 * e2 * m4 * m4;
    horner_dd(&[c0, c1, c2, c3, c4, c5, c6, c7], x * x)
}

/// Critical points `x_star`, `z_star` of `phi_upper`, and (when `eta`
/// is supplied) `x_hash`, `x_at` of `psi_lower`.
pub fn critical_points(nu: f64, eta: Option<f64>) -> Result<CriticalPoints> {
    if nu < 0.0 || !nu.is_finite() {
        return Err(Error::domain("critical_points requires nu >= 0"));
    }
    let x_star;
    let z_star;
    if nu == 0.0 {
        x_star = (3.0f64 / 8.0).sqrt();
    } else {
        // the shifted cubic is negative at its stationary point and
        // increasing beyond it; bracket and bisect, then polish
        let nu2 = nu * nu;
        let stat = 0.125 + (80.0 * nu2 + 3.0).sqrt() / (8.0 * 3.0f64.sqrt());
        let mut lo = stat;
        let mut hi = stat.max(nu * (7.0 * nu).cbrt()).max(1.0);
        let mut guard = 0;
        while p_poly_shifted(nu, hi) <= 0.0 {
            hi *= 2.0;
            guard += 1;
            if guard > 200 {
                return Err(Error::NoConvergence("x_star bracket"));
            }
        }
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if p_poly_shifted(nu, mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
            if (hi - lo) < 1e-15 * hi {
                break;
            }
        }
        let xi = 0.5 * (lo + hi);
        x_star = (nu * nu + xi).sqrt();
    }
    z_star = phi_upper(nu, x_star);

    let (x_hash, x_at) = match eta {
        None => (None, None),
        Some(eta) => {
            let mu = ultra_mu(nu, eta)?;
            let m2 = mu * mu;
            let rho = (eta * eta * (eta + 2.0) * (eta + 2.0) + 16.0 * m2 * eta).sqrt();
            let xh = 0.5 * (4.0 * m2 + eta * (eta + 2.0) + rho).sqrt();
            let xa = greatest_r_root(mu, eta, xh)?;
            (Some(xh), Some(xa))
        }
    };

    Ok(CriticalPoints { x_star, z_star, x_hash, x_at })
}

/// Locates the greatest positive real root of `r_poly`.  `r` is
/// negative at `x_hash` and has positive leading coefficient, so the
/// root is found by scanning a geometric grid up to a Fujiwara-type
/// root bound, bisecting the last sign change found, and confirming
/// positivity beyond.
fn greatest_r_root(mu: f64, eta: f64, x_hash: f64) -> Result<f64> {
    let r = |x: f64| r_poly(mu, eta, x);
    // Fujiwara bound on the roots of the polynomial in u = x^2
    let e = eta;
    let m2 = mu * mu;
    let coeffs_scale = [
        44.0 * m2 + 4.0 * e * (e * e * e + 4.0 * e * e + 5.0 * e + 18.0),
        40.0 * m2 * m2 + 8.0 * e * (3.0 * e.powi(3) + 10.0 * e * e + 6.0 * e + 5.0) * m2
            + e * e * (e + 2.0) * (e + 2.0) * (4.0 * e * e + 8.0 * e + 3.0),
    ];
    let mut u_bound = 4.0 * x_hash * x_hash;
    for (i, c) in coeffs_scale.iter().enumerate() {
        u_bound = u_bound.max(2.0 * (c.abs() / 12.0).powf(1.0 / (i as f64 + 1.0)));
    }
    // crude but safe extra: the constant-vs-leading ratio
    let c0 = r(0.0).abs().max(1.0);
    u_bound = u_bound.max(2.0 * (c0 / 12.0).powf(1.0 / 7.0));
    let mut x_top = u_bound.sqrt().max(2.0 * x_hash);

    for _attempt in 0..4 {
        // geometric scan for the last sign change below x_top
        let n = 4000;
        let lo = x_hash;
        let ratio = (x_top / lo).powf(1.0 / n as f64);
        let mut last_neg = None;
        let mut prev_x = lo;
        let mut prev_r = r(lo);
        let mut xg = lo;
        for _ in 0..n {
            xg *= ratio;
            let rv = r(xg);
            if prev_r < 0.0 && rv >= 0.0 {
                last_neg = Some((prev_x, xg));
            }
            prev_x = xg;
            prev_r = rv;
        }
        let (mut a, mut b) = match last_neg {
            Some(p) => p,
            None => {
                // r(x_hash) < 0 analytically, so a crossing must exist
                x_top *= 4.0;
                continue;
            }
        };
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if r(mid) < 0.0 {
                a = mid;
            } else {
                b = mid;
            }
            if (b - a) < 1e-15 * b {
                break;
            }
        }
        let cand = 0.5 * (a + b);
        // confirm this really is the greatest root
        let mut all_positive = r(cand * (1.0 + 1e-6)) > 0.0;
        let top = x_top.max(4.0 * cand);
        for i in 1..=128 {
            let t = cand * (1.0 + 1e-6) * (top / (cand * (1.0 + 1e-6))).powf(i as f64 / 128.0);
            if r(t) <= 0.0 {
                all_positive = false;
                break;
            }
        }
        if all_positive {
            return Ok(cand);
        }
        x_top *= 4.0;
    }
    Err(Error::NoConvergence("x_at root search"))
}
