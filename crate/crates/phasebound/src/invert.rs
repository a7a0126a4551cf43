//! Certified inversion of the monotone envelope branches.
//!
//! Given an envelope kind and a phase target, returns the unique
//! pre-image together with the final bracket that certifies it: the
//! envelope straddles the target across the bracket and the bracket is
//! at most `1e-12 * max(1, x)` wide.
//!
//! Targets below the branch's invertible range raise
//! [`Error::TargetBelowRange`]; the enclosure layer maps that to a
//! `NOT_APPLICABLE` bound.

use crate::envelope::{critical_points, envelope_derivative, eval_envelope, EnvelopeKind};
use crate::error::Error;
use crate::Result;
use std::f64::consts::{FRAC_PI_4, PI};

/// One inversion request.
#[derive(Clone, Copy, Debug)]
pub struct InverseQuery {
    pub kind: EnvelopeKind,
    pub nu: f64,
    /// Phase target in radians.
    pub target: f64,
}

/// Inversion result: the pre-image and its certifying bracket.
#[derive(Clone, Copy, Debug)]
pub struct Inverted {
    pub x: f64,
    /// `envelope(bracket.0) <= target <= envelope(bracket.1)`.
    pub bracket: (f64, f64),
}

const WIDTH_TOL: f64 = 1e-12;
const RESIDUAL_TOL: f64 = 1e-12;

/// Inverts a monotone envelope branch at `query.target`.
pub fn invert(query: &InverseQuery) -> Result<Inverted> {
    let InverseQuery { kind, nu, target } = *query;
    if !target.is_finite() || !nu.is_finite() || nu < 0.0 {
        return Err(Error::domain("invert requires finite target and nu >= 0"));
    }

    // Left edge of the monotone sub-domain and the range minimum there.
    // `edge_closed` marks branches whose inverse is defined at the edge
    // value itself.
    let (edge, range_min, edge_closed) = match kind {
        EnvelopeKind::ThetaUpper => (nu, -FRAC_PI_4, true),
        EnvelopeKind::ThetaLower => (nu, f64::NEG_INFINITY, false),
        EnvelopeKind::PhiLower => (nu, FRAC_PI_4, true),
        EnvelopeKind::PhiUpper => {
            let cp = critical_points(nu, None)?;
            (cp.x_star, cp.z_star, true)
        }
        EnvelopeKind::PsiLower { eta } => {
            let cp = critical_points(nu, Some(eta))?;
            let xa = cp.x_at.expect("x_at present when eta given");
            let psi_at = eval_envelope(kind, nu, xa)?;
            // the bound only holds strictly beyond x_at
            (xa, psi_at, false)
        }
        EnvelopeKind::ThetaLowerClamped | EnvelopeKind::PhiUpperClamped => {
            return Err(Error::domain("clamped envelope branches are not invertible"));
        }
    };

    if target < range_min || (!edge_closed && target == range_min) {
        return Err(Error::TargetBelowRange { target, min: range_min });
    }
    if edge_closed && target == range_min {
        return Ok(Inverted { x: edge, bracket: (edge, edge) });
    }

    // Seed from the leading asymptotic x ~ t + pi(2 nu +- 1)/4 and grow
    // a bracket around the target.
    let offset = match kind {
        EnvelopeKind::ThetaUpper | EnvelopeKind::ThetaLower => PI * (2.0 * nu + 1.0) / 4.0,
        _ => PI * (2.0 * nu - 1.0) / 4.0,
    };
    let f = |x: f64| eval_envelope(kind, nu, x);

    let mut hi = (target + offset).max(edge + 0.5 * edge.abs().max(1.0) * 1e-3);
    let mut guard = 0;
    while f(hi)? < target {
        hi = edge + (hi - edge) * 2.0;
        guard += 1;
        if guard > 300 {
            return Err(Error::NoConvergence("inversion upper bracket"));
        }
    }
    let mut lo;
    if edge_closed {
        lo = edge;
    } else {
        // shrink toward the open edge until below the target
        let mut delta = (hi - edge) * 0.5;
        lo = edge + delta;
        guard = 0;
        while f(lo)? > target {
            delta *= 0.25;
            lo = edge + delta;
            guard += 1;
            if guard > 600 {
                return Err(Error::NoConvergence("inversion lower bracket"));
            }
        }
    }

    // Bisection to ~1e-6 relative, then safeguarded Newton polishing
    // inside the maintained bracket.
    let mut flo = if lo == edge && edge_closed { range_min } else { f(lo)? };
    loop {
        let mid = 0.5 * (lo + hi);
        let fm = f(mid)?;
        if fm < target {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-6 * hi.abs().max(1.0) {
            break;
        }
    }
    let mut x = 0.5 * (lo + hi);
    let mut fx = f(x)?;
    for _ in 0..60 {
        if hi - lo <= WIDTH_TOL * x.abs().max(1.0) {
            break;
        }
        let d = envelope_derivative(kind, nu, x).unwrap_or(0.0);
        let mut x_new = if d > 0.0 { x - (fx - target) / d } else { f64::NAN };
        if !x_new.is_finite() || x_new <= lo || x_new >= hi {
            x_new = 0.5 * (lo + hi);
        }
        let f_new = f(x_new)?;
        if f_new < target {
            lo = x_new;
            flo = f_new;
        } else {
            hi = x_new;
        }
        x = x_new;
        fx = f_new;
        if (fx - target).abs() <= 0.01 * RESIDUAL_TOL * target.abs().max(1.0)
            && hi - lo <= WIDTH_TOL * x.abs().max(1.0)
        {
            break;
        }
    }
    let _ = flo;
    // final representative: whichever endpoint evaluates closest
    let fhi = f(hi)?;
    let flo2 = f(lo)?;
    let x = if (fhi - target).abs() < (flo2 - target).abs() { hi } else { lo };
    let fx = f(x)?;
    if (fx - target).abs() > RESIDUAL_TOL * target.abs().max(1.0) {
        return Err(Error::NoConvergence("inversion residual"));
    }
    Ok(Inverted { x, bracket: (lo, hi) })
}
