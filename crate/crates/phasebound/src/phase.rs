//! Continuous-branch phase functions and true zeros.
//!
//! The phases are defined by
//!
//! * `theta_nu = Arg(J_nu + i Y_nu)`, starting at `-pi/2` as `x -> 0+`;
//! * `phi_nu = Arg(J'_nu + i Y'_nu)`, starting at `pi/2`;
//! * `psi_{nu,eta} = Arg(U' + i W')` with `U' = x^{-eta-1}(x J' - eta J)`
//!   (the positive prefactor does not move the angle), starting at
//!   `pi/2`.
//!
//! Branches are unwound by marching in `x` with adaptive steps chosen
//! so the raw `atan2` increment per step stays below `pi/2`; marching
//! starts from an anchor where the principal value is known to be the
//! phase itself (`x = nu` for `theta` and `phi`, a point far below `mu`
//! for `psi`).  For `eta = nu` the identity
//! `psi_{nu,nu}(x) = theta_{nu+1}(x) + pi` is used instead
//! (`x J'_nu - nu J_nu = -x J_{nu+1}`).
//!
//! True zeros come from the same marching pass: when the phase crosses
//! `pi (k - 1/2)`-type targets the step interval brackets the k-th zero
//! of the corresponding function, which is then pinned by bisection on
//! the function's sign and one Newton polish.  No envelope data enters
//! here, so the enclosures can be tested against these values.

use crate::error::Error;
use crate::special::{bessel_eval, BesselQuad};
use crate::Result;
use std::f64::consts::{FRAC_PI_2, PI};

/// A phase value on the continuous branch.
#[derive(Clone, Copy, Debug)]
pub struct PhasePoint {
    pub x: f64,
    /// Unwound phase in radians.
    pub value: f64,
    /// Number of full `2 pi` turns between the principal `atan2` value
    /// and the continuous branch.
    pub winding: i64,
    /// Whether any oracle evaluation along the march was outside the
    /// guaranteed-accuracy envelope.
    pub degraded: bool,
}

/// Which zero sequence a query targets.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ZeroFamily {
    /// Zeros of `J_nu`.
    J,
    /// Zeros of `Y_nu`.
    Y,
    /// Zeros of `J_nu cos(pi tau) + Y_nu sin(pi tau)`, `tau` in `(0, 1]`.
    C { tau: f64 },
    /// Zeros of `J'_nu` (with the convention that the first zero for
    /// `nu = 0` is `x = 0`).
    JPrime,
    /// Zeros of `Y'_nu`.
    YPrime,
    /// Zeros of `J'_nu cos(pi tau) + Y'_nu sin(pi tau)`, `tau` in
    /// `[0, 1)`, counted from the first zero of `J'_nu` upward.
    CPrime { tau: f64 },
    /// Zeros of `x J'_nu - eta J_nu`, requires `nu >= eta > 0` (with the
    /// convention that the first zero for `eta = nu` is `x = 0`).
    UPrime { eta: f64 },
    /// Zeros of `x Y'_nu - eta Y_nu`, requires `nu >= eta > 0`.
    WPrime { eta: f64 },
}

impl ZeroFamily {
    /// Phase target whose crossing is the k-th zero.
    pub fn phase_target(&self, k: u64) -> f64 {
        let kf = k as f64;
        match self {
            ZeroFamily::J => PI * (kf - 0.5),
            ZeroFamily::Y => PI * (kf - 1.0),
            ZeroFamily::C { tau } => PI * (tau + kf - 1.5),
            ZeroFamily::JPrime => PI * (kf - 0.5),
            ZeroFamily::YPrime => PI * kf,
            ZeroFamily::CPrime { tau } => PI * (tau + kf - 0.5),
            ZeroFamily::UPrime { .. } => PI * (kf - 0.5),
            ZeroFamily::WPrime { .. } => PI * kf,
        }
    }

    pub(crate) fn validate(&self, nu: f64) -> Result<()> {
        if nu < 0.0 || !nu.is_finite() {
            return Err(Error::domain("zero family requires nu >= 0"));
        }
        match self {
            ZeroFamily::C { tau } => {
                if !(*tau > 0.0 && *tau <= 1.0) {
                    return Err(Error::domain(format!("C family needs tau in (0, 1], got {tau}")));
                }
            }
            ZeroFamily::CPrime { tau } => {
                if !(*tau >= 0.0 && *tau < 1.0) {
                    return Err(Error::domain(format!("C' family needs tau in [0, 1), got {tau}")));
                }
            }
            ZeroFamily::UPrime { eta } | ZeroFamily::WPrime { eta } => {
                if !(*eta > 0.0) || nu < *eta {
                    return Err(Error::domain(format!(
                        "ultraspherical family needs nu >= eta > 0, got nu={nu} eta={eta}"
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }

    fn phase_kind(&self, nu: f64) -> PhaseKind {
        match self {
            ZeroFamily::J | ZeroFamily::Y | ZeroFamily::C { .. } => PhaseKind::Theta { nu },
            ZeroFamily::JPrime | ZeroFamily::YPrime | ZeroFamily::CPrime { .. } => {
                PhaseKind::Phi { nu }
            }
            ZeroFamily::UPrime { eta } | ZeroFamily::WPrime { eta } => {
                PhaseKind::Psi { nu, eta: *eta }
            }
        }
    }

    /// The oscillating function whose sign changes locate the zeros.
    fn function_value(&self, q: &BesselQuad, x: f64) -> f64 {
        match self {
            ZeroFamily::J => q.j,
            ZeroFamily::Y => q.y,
            ZeroFamily::C { tau } => q.j * (PI * tau).cos() + q.y * (PI * tau).sin(),
            ZeroFamily::JPrime => q.jp,
            ZeroFamily::YPrime => q.yp,
            ZeroFamily::CPrime { tau } => q.jp * (PI * tau).cos() + q.yp * (PI * tau).sin(),
            ZeroFamily::UPrime { eta } => x * q.jp - eta * q.j,
            ZeroFamily::WPrime { eta } => x * q.yp - eta * q.y,
        }
    }

    /// x-derivative of [`Self::function_value`], for the Newton polish.
    /// Second derivatives of J, Y come from the Bessel equation
    /// `Z'' = -Z'/x - (1 - nu^2/x^2) Z`.
    fn function_deriv(&self, q: &BesselQuad, x: f64, nu: f64) -> f64 {
        let jpp = -q.jp / x - (1.0 - nu * nu / (x * x)) * q.j;
        let ypp = -q.yp / x - (1.0 - nu * nu / (x * x)) * q.y;
        match self {
            ZeroFamily::J => q.jp,
            ZeroFamily::Y => q.yp,
            ZeroFamily::C { tau } => q.jp * (PI * tau).cos() + q.yp * (PI * tau).sin(),
            ZeroFamily::JPrime => jpp,
            ZeroFamily::YPrime => ypp,
            ZeroFamily::CPrime { tau } => jpp * (PI * tau).cos() + ypp * (PI * tau).sin(),
            ZeroFamily::UPrime { eta } => -eta * q.jp - (x - nu * nu / x) * q.j,
            ZeroFamily::WPrime { eta } => -eta * q.yp - (x - nu * nu / x) * q.y,
        }
    }
}

/// A true zero from the oracle.
#[derive(Clone, Copy, Debug)]
pub struct TrueZero {
    pub x: f64,
    /// Set for the two conventional zeros at `x = 0`.
    pub convention: bool,
    pub degraded: bool,
}

#[derive(Clone, Copy, Debug)]
enum PhaseKind {
    Theta { nu: f64 },
    Phi { nu: f64 },
    Psi { nu: f64, eta: f64 },
}

impl PhaseKind {
    /// The pair whose angle is the phase.
    fn components(&self, x: f64) -> crate::Result<(f64, f64, bool)> {
        match *self {
            PhaseKind::Theta { nu } => {
                let q = bessel_eval(nu, x)?;
                Ok((q.j, q.y, q.degraded))
            }
            PhaseKind::Phi { nu } => {
                let q = bessel_eval(nu, x)?;
                Ok((q.jp, q.yp, q.degraded))
            }
            PhaseKind::Psi { nu, eta } => {
                let q = bessel_eval(nu, x)?;
                Ok((x * q.jp - eta * q.j, x * q.yp - eta * q.y, q.degraded))
            }
        }
    }

    /// Anchor point whose principal `atan2` value is already on the
    /// continuous branch (no accumulated winding).
    fn anchor(&self, x_query: f64) -> f64 {
        match *self {
            PhaseKind::Theta { nu } | PhaseKind::Phi { nu } => {
                if nu > 0.0 {
                    nu.min(x_query)
                } else {
                    x_query.min(1e-3)
                }
            }
            PhaseKind::Psi { nu, eta } => {
                let mu2 = (nu - eta) * (nu + eta);
                let mu = mu2.max(0.0).sqrt();
                let cap = if mu > 0.0 { (mu / 100.0).min(0.01) } else { (nu / 100.0).min(0.01) };
                x_query.min(cap.max(1e-6))
            }
        }
    }
}

fn principal(kind: &PhaseKind, x: f64) -> crate::Result<(f64, bool)> {
    let (a, b, deg) = kind.components(x)?;
    Ok((b.atan2(a), deg))
}

/// Marches the phase forward in `x`, keeping each raw increment below
/// `pi/2` so the continuous branch is unambiguous.
struct Marcher {
    kind: PhaseKind,
    x: f64,
    value: f64,
    degraded: bool,
}

impl Marcher {
    fn start(kind: PhaseKind, x0: f64) -> crate::Result<Self> {
        let (v, deg) = principal(&kind, x0)?;
        Ok(Marcher { kind, x: x0, value: v, degraded: deg })
    }

    /// Advances to `x1`, calling `visit(x_prev, v_prev, x_new, v_new)`
    /// after every accepted step.
    fn advance_to<F: FnMut(f64, f64, f64, f64)>(
        &mut self,
        x1: f64,
        mut visit: F,
    ) -> crate::Result<()> {
        if x1 < self.x {
            return Err(Error::domain("phase marching must move forward"));
        }
        let mut step = 0.05 * self.x.abs().max(1.0);
        let mut guard = 0usize;
        while self.x < x1 {
            let xn = (self.x + step).min(x1);
            let (raw, deg) = principal(&self.kind, xn)?;
            // nearest representative of raw modulo 2 pi
            let turns = ((self.value - raw) / (2.0 * PI)).round();
            let cand = raw + 2.0 * PI * turns;
            let delta = cand - self.value;
            if delta.abs() >= FRAC_PI_2 {
                step *= 0.5;
                guard += 1;
                if guard > 100_000 || step < 1e-12 * self.x.max(1.0) {
                    return Err(Error::NoConvergence("phase marching step control"));
                }
                continue;
            }
            visit(self.x, self.value, xn, cand);
            self.degraded |= deg;
            self.x = xn;
            self.value = cand;
            if delta.abs() < PI / 8.0 {
                step = (step * 1.9).min(16.0);
            }
            guard += 1;
            if guard > 2_000_000 {
                return Err(Error::NoConvergence("phase marching length"));
            }
        }
        Ok(())
    }
}

fn phase_impl(kind: PhaseKind, x: f64) -> crate::Result<PhasePoint> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("phase requires finite x > 0"));
    }
    let anchor = kind.anchor(x);
    let mut m = Marcher::start(kind, anchor)?;
    m.advance_to(x, |_, _, _, _| {})?;
    let (raw, _) = principal(&kind, x)?;
    let winding = ((m.value - raw) / (2.0 * PI)).round() as i64;
    Ok(PhasePoint { x, value: m.value, winding, degraded: m.degraded })
}

/// Continuous-branch Bessel phase `theta_nu(x)`.
pub fn phase_theta(nu: f64, x: f64) -> crate::Result<PhasePoint> {
    if nu < 0.0 {
        return Err(Error::domain("phase_theta requires nu >= 0"));
    }
    phase_impl(PhaseKind::Theta { nu }, x)
}

/// Continuous-branch derivative phase `phi_nu(x)`.
pub fn phase_phi(nu: f64, x: f64) -> crate::Result<PhasePoint> {
    if nu < 0.0 {
        return Err(Error::domain("phase_phi requires nu >= 0"));
    }
    phase_impl(PhaseKind::Phi { nu }, x)
}

/// Continuous-branch ultraspherical derivative phase `psi_{nu,eta}(x)`.
/// For `eta = nu` this reduces to `theta_{nu+1}(x) + pi`.
pub fn phase_psi(nu: f64, eta: f64, x: f64) -> crate::Result<PhasePoint> {
    if !(eta > 0.0) || nu < eta {
        return Err(Error::domain(format!(
            "phase_psi requires nu >= eta > 0, got nu={nu} eta={eta}"
        )));
    }
    if eta == nu {
        let p = phase_theta(nu + 1.0, x)?;
        return Ok(PhasePoint { x, value: p.value + PI, winding: p.winding, degraded: p.degraded });
    }
    phase_impl(PhaseKind::Psi { nu, eta }, x)
}

/// `tau*_nu = theta_nu(nu)/pi + 1/2`, the largest `tau` for which the
/// first `C_{nu,tau}` zero sits at or below `nu`.  Always in `[0, 1/2)`.
pub fn tau_star(nu: f64) -> crate::Result<f64> {
    if nu < 0.0 || !nu.is_finite() {
        return Err(Error::domain("tau_star requires nu >= 0"));
    }
    if nu == 0.0 {
        return Ok(0.0);
    }
    // theta_nu(nu) lies in [-pi/2, 0), where atan2 is already principal
    let q = bessel_eval(nu, nu)?;
    Ok(q.y.atan2(q.j) / PI + 0.5)
}

/// True zeros `1..=k_max` of one family, from a single marching pass.
pub fn true_zeros_upto(family: &ZeroFamily, nu: f64, k_max: u64) -> crate::Result<Vec<TrueZero>> {
    family.validate(nu)?;
    if k_max == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(k_max as usize);
    let mut k_next: u64 = 1;

    // conventional zeros at the origin
    let jprime_like = matches!(family, ZeroFamily::JPrime)
        || matches!(family, ZeroFamily::CPrime { tau } if *tau == 0.0);
    if (jprime_like && nu == 0.0) || matches!(family, ZeroFamily::UPrime { eta } if *eta == nu) {
        out.push(TrueZero { x: 0.0, convention: true, degraded: false });
        if k_max == 1 {
            return Ok(out);
        }
        k_next = 2;
    }

    let kind = family.phase_kind(nu);
    let anchor = kind.anchor(f64::INFINITY);
    let mut m = Marcher::start(kind, anchor)?;
    let last_target = family.phase_target(k_max);

    // march past the last target, collecting the step intervals that
    // cross each pending target
    let mut brackets: Vec<(u64, f64, f64)> = Vec::new();
    let mut limit = anchor.max(nu) + 10.0;
    let mut guard = 0usize;
    while m.value < last_target && k_next <= k_max {
        let k_ref = &mut k_next;
        let br = &mut brackets;
        m.advance_to(limit, |xp, vp, xn, vn| {
            while *k_ref <= k_max {
                let t = family.phase_target(*k_ref);
                if vp < t && t <= vn {
                    br.push((*k_ref, xp, xn));
                    *k_ref += 1;
                } else {
                    break;
                }
            }
        })?;
        limit += 20.0;
        guard += 1;
        if guard > 100_000 {
            return Err(Error::NoConvergence("zero marching"));
        }
    }

    // pin each bracketed zero by bisection on the function's sign
    for (k, lo0, hi0) in brackets {
        let (mut lo, mut hi) = (lo0, hi0);
        let q = bessel_eval(nu, lo)?;
        let mut deg = q.degraded;
        let flo = family.function_value(&q, lo);
        let lo_sign = flo > 0.0;
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            let qm = bessel_eval(nu, mid)?;
            deg |= qm.degraded;
            let fm = family.function_value(&qm, mid);
            if (fm > 0.0) == lo_sign {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo <= 1e-14 * hi {
                break;
            }
        }
        let mut x = 0.5 * (lo + hi);
        let q = bessel_eval(nu, x)?;
        let d = family.function_deriv(&q, x, nu);
        if d != 0.0 {
            let step = family.function_value(&q, x) / d;
            if step.is_finite() && step.abs() <= (hi - lo).max(1e-13 * x) {
                x -= step;
            }
        }
        debug_assert_eq!(k as usize, out.len() + 1);
        out.push(TrueZero { x, convention: false, degraded: deg });
    }
    if out.len() != k_max as usize {
        return Err(Error::NoConvergence("zero bracketing"));
    }
    Ok(out)
}

/// The k-th true zero of a family, per the enumeration conventions.
pub fn true_zero(family: &ZeroFamily, nu: f64, k: u64) -> crate::Result<TrueZero> {
    if k == 0 {
        return Err(Error::domain("zero index k must be >= 1"));
    }
    let all = true_zeros_upto(family, nu, k)?;
    Ok(all[k as usize - 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: f64, b: f64, tol: f64, what: &str) {
        assert!((a - b).abs() <= tol * b.abs().max(1.0), "{what}: {a} vs {b}");
    }

    #[test]
    fn initial_conditions() {
        let p = phase_theta(0.0, 1e-6).unwrap();
        assert!((p.value + FRAC_PI_2).abs() < 1e-3);
        assert_eq!(p.winding, 0);
        let p = phase_phi(0.0, 1e-6).unwrap();
        assert!((p.value - FRAC_PI_2).abs() < 1e-3);
        let p = phase_psi(1.0, 1.0, 1e-6).unwrap();
        assert!((p.value - FRAC_PI_2).abs() < 1e-3);
        let p = phase_psi(2.0, 1.0, 1e-4).unwrap();
        assert!((p.value - FRAC_PI_2).abs() < 1e-2);
    }

    #[test]
    fn theta_at_first_zero_is_half_pi() {
        let j01 = 2.404825557695773;
        let p = phase_theta(0.0, j01).unwrap();
        assert!((p.value - FRAC_PI_2).abs() < 1e-9, "theta(j01) = {}", p.value);
    }

    #[test]
    fn theta_reference_values() {
        // winding-resolved values, mpmath
        let cases = [
            (0.0, 5.0, 4.1900697530920382),
            (1.0, 20.0, 17.662535116106652),
            (2.7, 50.0, 45.04385417013928),
            (5.0, 30.0, 21.773835982940591),
        ];
        for (nu, x, want) in cases {
            let p = phase_theta(nu, x).unwrap();
            assert!((p.value - want).abs() < 1e-9, "theta({nu},{x}) = {} want {want}", p.value);
        }
    }

    #[test]
    fn theta_four_term_asymptotics() {
        // DLMF 10.18.18 truncation at x = 50
        let nu = 2.7f64;
        let x = 50.0f64;
        let nu2 = nu * nu;
        let asym = x - (2.0 * nu + 1.0) * PI / 4.0
            + (4.0 * nu2 - 1.0) / (8.0 * x)
            + (4.0 * nu2 - 1.0) * (4.0 * nu2 - 25.0) / (384.0 * x.powi(3));
        let p = phase_theta(nu, x).unwrap();
        assert!((p.value - asym).abs() < 5e-7, "{} vs {asym}", p.value);
    }

    #[test]
    fn phi_four_term_asymptotics() {
        // DLMF 10.18.21 truncation at x = 40
        let nu = 3.0f64;
        let x = 40.0f64;
        let nu2 = nu * nu;
        let asym = x - (2.0 * nu + 1.0) * PI / 4.0
            + (4.0 * nu2 + 3.0) / (8.0 * x)
            + (16.0 * nu2 * nu2 + 184.0 * nu2 - 63.0) / (384.0 * x.powi(3));
        let p = phase_phi(nu, x).unwrap();
        assert!((p.value - asym).abs() < 5e-7, "{} vs {asym}", p.value);
    }

    #[test]
    fn winding_matches_zero_counts() {
        // theta(x) in (pi(nj - 1/2), pi(nj + 1/2)) and (pi(ny - 1), pi ny)
        for &(nu, x) in &[(0.0, 10.0), (1.0, 20.0), (5.0, 17.0)] {
            let zj = true_zeros_upto(&ZeroFamily::J, nu, 12).unwrap();
            let zy = true_zeros_upto(&ZeroFamily::Y, nu, 12).unwrap();
            let nj = zj.iter().filter(|z| z.x <= x).count() as f64;
            let ny = zy.iter().filter(|z| z.x <= x).count() as f64;
            let th = phase_theta(nu, x).unwrap().value;
            assert_eq!((th / PI + 0.5).floor(), nj, "J count at nu={nu} x={x}");
            assert_eq!((th / PI).floor() + 1.0, ny, "Y count at nu={nu} x={x}");
        }
    }

    #[test]
    fn phi_minimum_near_nu() {
        let nu = 4.0;
        let at_nu = phase_phi(nu, nu).unwrap().value;
        assert!(at_nu > 0.0 && at_nu < FRAC_PI_2);
        for &dx in &[-0.5, 0.5] {
            let v = phase_phi(nu, nu + dx).unwrap().value;
            assert!(v > at_nu, "phi should have its minimum at x = nu");
        }
    }

    #[test]
    fn psi_decreases_then_increases() {
        let (nu, eta) = (3.0, 1.0);
        let mu = ((nu - eta) as f64 * (nu + eta)).sqrt();
        let at_mu = phase_psi(nu, eta, mu).unwrap().value;
        let below = phase_psi(nu, eta, 0.5 * mu).unwrap().value;
        let above = phase_psi(nu, eta, 1.5 * mu).unwrap().value;
        assert!(below > at_mu && above > at_mu);
    }

    #[test]
    fn psi_sign_structure() {
        // estimated psi' negative left of mu, positive right of it
        let (nu, eta) = (5.0, 2.0);
        let mu = ((nu - eta) as f64 * (nu + eta)).sqrt();
        let h = 1e-4;
        for i in 0..100 {
            let x = 0.05 * mu * (mu * 19.0 / (0.05 * mu)).powf(i as f64 / 99.0);
            if (x - mu).abs() < 0.05 * mu {
                continue;
            }
            let d = (phase_psi(nu, eta, x + h).unwrap().value
                - phase_psi(nu, eta, x - h).unwrap().value)
                / (2.0 * h);
            if x < mu {
                assert!(d < 0.0, "psi' should be negative at x={x} < mu={mu}");
            } else {
                assert!(d > 0.0, "psi' should be positive at x={x} > mu={mu}");
            }
        }
    }

    #[test]
    fn first_zeros_match_references() {
        // mpmath besseljzero / besselyzero
        let j = true_zero(&ZeroFamily::J, 0.0, 1).unwrap();
        assert_close(j.x, 2.4048255576957728, 1e-11, "j_{0,1}");
        let j = true_zero(&ZeroFamily::J, 0.0, 3).unwrap();
        assert_close(j.x, 8.6537279129110122, 1e-11, "j_{0,3}");
        let y = true_zero(&ZeroFamily::Y, 0.0, 1).unwrap();
        assert_close(y.x, 0.89357696627916752, 1e-11, "y_{0,1}");
        let j = true_zero(&ZeroFamily::J, 50.0, 1).unwrap();
        assert_close(j.x, 57.116899160119174, 1e-11, "j_{50,1}");
        let j = true_zero(&ZeroFamily::J, 50.0, 50).unwrap();
        assert_close(j.x, 229.36287966855342, 1e-11, "j_{50,50}");
        let jp = true_zero(&ZeroFamily::JPrime, 1.0, 1).unwrap();
        assert_close(jp.x, 1.8411837813406593, 1e-11, "j'_{1,1}");
        let jp = true_zero(&ZeroFamily::JPrime, 2.7, 1).unwrap();
        assert_close(jp.x, 3.8611862614492359, 1e-11, "j'_{2.7,1}");
        let yp = true_zero(&ZeroFamily::YPrime, 0.0, 1).unwrap();
        assert_close(yp.x, 2.197141326031017, 1e-11, "y'_{0,1}");
        let yp = true_zero(&ZeroFamily::YPrime, 0.0, 2).unwrap();
        assert_close(yp.x, 5.4296810407941351, 1e-11, "y'_{0,2}");
    }

    #[test]
    fn jprime_conventions() {
        let z = true_zero(&ZeroFamily::JPrime, 0.0, 1).unwrap();
        assert_eq!(z.x, 0.0);
        assert!(z.convention);
        // j'_{0,2} = j_{1,1} since J'_0 = -J_1
        let z = true_zero(&ZeroFamily::JPrime, 0.0, 2).unwrap();
        assert_close(z.x, 3.8317059702075123, 1e-11, "j'_{0,2}");
        let z = true_zero(&ZeroFamily::UPrime { eta: 2.0 }, 2.0, 1).unwrap();
        assert_eq!((z.x, z.convention), (0.0, true));
    }

    #[test]
    fn ultraspherical_identity_eta_eq_nu() {
        // u'_{nu,nu,k} = j_{nu+1,k-1}; w'_{nu,nu,k} = y_{nu+1,k}
        let u = true_zero(&ZeroFamily::UPrime { eta: 1.0 }, 1.0, 2).unwrap();
        assert_close(u.x, 5.1356223018406826, 1e-11, "u'_{1,1,2} = j_{2,1}");
        let w = true_zero(&ZeroFamily::WPrime { eta: 1.0 }, 1.0, 1).unwrap();
        assert_close(w.x, 2.197141326031017, 1e-11, "w'_{1,1,1} = y_{2,1}");
    }

    #[test]
    fn ultraspherical_zeros_general() {
        // mpmath roots of x J'_2 - J_2
        let z = true_zeros_upto(&ZeroFamily::UPrime { eta: 1.0 }, 2.0, 3).unwrap();
        assert_close(z[0].x, 2.2999103302284109, 1e-10, "u'_{2,1,1}");
        assert_close(z[1].x, 6.5414028262819266, 1e-10, "u'_{2,1,2}");
        assert_close(z[2].x, 9.8647278383412945, 1e-10, "u'_{2,1,3}");
    }

    #[test]
    fn cprime_skips_zeros_below_first_jprime_zero() {
        // c'_{nu,tau,1} must be >= j'_{nu,1}
        for &(nu, tau) in &[(3.0, 0.9), (1.0, 0.75), (0.5, 0.3)] {
            let jp1 = true_zero(&ZeroFamily::JPrime, nu, 1).unwrap().x;
            let c1 = true_zero(&ZeroFamily::CPrime { tau }, nu, 1).unwrap().x;
            assert!(c1 >= jp1, "c'_1 = {c1} below j'_1 = {jp1} at nu={nu} tau={tau}");
        }
    }

    #[test]
    fn interlacing() {
        for &nu in &[0.0, 0.5, 2.7, 10.0] {
            let zj = true_zeros_upto(&ZeroFamily::J, nu, 10).unwrap();
            let zy = true_zeros_upto(&ZeroFamily::Y, nu, 11).unwrap();
            for k in 0..10 {
                assert!(
                    zy[k].x < zj[k].x && zj[k].x < zy[k + 1].x,
                    "J/Y interlacing nu={nu} k={k}"
                );
            }
            let zjp = true_zeros_upto(&ZeroFamily::JPrime, nu, 11).unwrap();
            let zyp = true_zeros_upto(&ZeroFamily::YPrime, nu, 11).unwrap();
            for k in 1..10 {
                // j'_{k} < y'_{k} < j'_{k+1}; index 0 may be the convention
                assert!(
                    zjp[k].x < zyp[k].x && zyp[k].x < zjp[k + 1].x,
                    "J'/Y' interlacing nu={nu} k={k}"
                );
            }
        }
    }

    #[test]
    fn branch_consistency_at_zeros() {
        // the phase hits exactly the k-th target at each returned zero
        for &nu in &[0.5, 2.7] {
            for k in 1..=8u64 {
                let fam = ZeroFamily::C { tau: 0.3 };
                let z = true_zero(&fam, nu, k).unwrap();
                let th = phase_theta(nu, z.x).unwrap().value;
                let resid = (th - fam.phase_target(k)).abs();
                assert!(resid < 1e-8, "phase residual {resid} at nu={nu} k={k}");
            }
        }
    }

    #[test]
    fn tau_star_values() {
        assert_eq!(tau_star(0.0).unwrap(), 0.0);
        // mpmath principal atan2(Y_nu(nu), J_nu(nu))/pi + 1/2
        assert_close(tau_star(0.5).unwrap(), 0.15915494309189534, 1e-10, "tau*_0.5");
        assert_close(tau_star(1.0).unwrap(), 0.16328996603297302, 1e-10, "tau*_1");
        assert_close(tau_star(10.0).unwrap(), 0.16649895821451756, 1e-10, "tau*_10");
        let t = tau_star(10.0).unwrap();
        assert_eq!(t, tau_star(10.0).unwrap());
        assert!(t > 0.0 && t < 0.5);
    }

    #[test]
    fn family_domain_errors() {
        assert!(true_zero(&ZeroFamily::C { tau: 0.0 }, 1.0, 1).is_err());
        assert!(true_zero(&ZeroFamily::C { tau: 1.5 }, 1.0, 1).is_err());
        assert!(true_zero(&ZeroFamily::CPrime { tau: 1.0 }, 1.0, 1).is_err());
        assert!(true_zero(&ZeroFamily::UPrime { eta: 2.0 }, 1.0, 1).is_err());
        assert!(true_zero(&ZeroFamily::UPrime { eta: 0.0 }, 1.0, 1).is_err());
        assert!(true_zero(&ZeroFamily::J, -1.0, 1).is_err());
    }
}
