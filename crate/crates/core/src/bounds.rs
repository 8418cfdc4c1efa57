//! The eigenvalue lower bounds and the boundary-moment inequality.
//!
//! * `faber_krahn_bound`: λ₁(D) ≥ π j₀,₁² / |D| for any bounded domain.
//! * `pw_bound`: λ₁(D) ≥ [4π⁻¹ α(α+1) 𝓘_α(D)]^{−1/(α+1)} j_{α,1}² for
//!   D ⊂ S_α; equality for the circular sector of angle π/α.
//! * `reflex_bound`: λ₁(D) ≥ [π⁻¹ β(β+2) I_β(D)]^{−2/(β+2)} j_{β/2,1}² for
//!   D ⊂ R_β; equality for the circular sector of angle 2π/β. At β = 2 this
//!   coincides with the α = 1 wedge bound.
//! * `lemma_gap`: the geometric inequality
//!   [(β/π)∫_{∂D} r^β cos²(βθ/2) ds]^{(β+2)/(β+1)} ≥ π⁻¹ β(β+2) I_β(D),
//!   with equality for the same sector.
//! * `annular_root_bound`: the induced lower bound on the first radial root k
//!   of the annular sector, k ≥ (ρ₂^{β+2} − ρ₁^{β+2})^{−1/(β+2)} j_{β/2,1}.
//!
//! A report is only issued when containment is machine-verified; the `force`
//! escape hatch computes anyway but marks the report invalid. All exponent
//! arithmetic runs in log space.

use crate::geometry::{contains_in_wedge, Domain, Pose, WedgeFamily};
use crate::moments::{boundary_moment, moment_pw, moment_reflex, QuadratureResult};
use crate::special::{first_bessel_zero, BesselOrder, ZeroResult};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Which inequality produced a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    Fk,
    Pw,
    Reflex,
}

/// A lower bound on λ₁ with its inputs and verification status.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub formula: Formula,
    /// Lower bound on λ₁, units 1/length².
    pub value: f64,
    /// Wedge parameter (α or β); None for Faber–Krahn.
    pub param: Option<f64>,
    /// Moment used by the wedge/reflex formulas.
    pub moment: Option<QuadratureResult>,
    /// Area used by Faber–Krahn.
    pub area: Option<f64>,
    /// Bessel zero entering the formula.
    pub zero: ZeroResult,
    /// Whether the containment hypothesis was machine-verified.
    pub containment_ok: bool,
    pub pose_used: Pose,
}

/// λ₁(D) ≥ π j₀,₁² / |D|.
pub fn faber_krahn_bound(domain: &Domain) -> Result<BoundReport> {
    let area = domain.area();
    if !(area > 0.0) {
        return Err(Error::InvalidInput(format!("Faber–Krahn needs positive area, got {area}")));
    }
    let zero = first_bessel_zero(BesselOrder::new(0.0)?)?;
    Ok(BoundReport {
        formula: Formula::Fk,
        value: PI * zero.k * zero.k / area,
        param: None,
        moment: None,
        area: Some(area),
        zero,
        containment_ok: true,
        pose_used: Pose::identity(),
    })
}

/// Wedge bound for D ⊂ S_α, evaluated at the given pose.
pub fn pw_bound(domain: &Domain, alpha: f64, pose: &Pose) -> Result<BoundReport> {
    pw_bound_with(domain, alpha, pose, false)
}

pub fn pw_bound_with(domain: &Domain, alpha: f64, pose: &Pose, force: bool) -> Result<BoundReport> {
    let family = WedgeFamily::pw(alpha)?;
    let framed = domain.to_wedge_frame(pose);
    let report = contains_in_wedge(&framed, &family);
    if !report.ok && !force {
        return Err(Error::Containment(report));
    }
    let moment = if report.ok {
        moment_pw(&framed, alpha)?
    } else {
        // forced: compute the moment without the containment gate
        crate::moments::moment_polar(&framed, &family)?
    };
    let zero = first_bessel_zero(BesselOrder::new(alpha)?)?;
    // [4π⁻¹ α(α+1) 𝓘]^{−1/(α+1)} j²
    let ln_norm = (4.0 / PI * alpha * (alpha + 1.0)).ln() + moment.value.ln();
    let value = (2.0 * zero.k.ln() - ln_norm / (alpha + 1.0)).exp();
    Ok(BoundReport {
        formula: Formula::Pw,
        value,
        param: Some(alpha),
        moment: Some(moment),
        area: None,
        zero,
        containment_ok: report.ok,
        pose_used: *pose,
    })
}

/// Reflex-angle bound for D ⊂ R_β, evaluated at the given pose.
pub fn reflex_bound(domain: &Domain, beta: f64, pose: &Pose) -> Result<BoundReport> {
    reflex_bound_with(domain, beta, pose, false)
}

pub fn reflex_bound_with(domain: &Domain, beta: f64, pose: &Pose, force: bool) -> Result<BoundReport> {
    let family = WedgeFamily::reflex(beta)?;
    let framed = domain.to_wedge_frame(pose);
    let report = contains_in_wedge(&framed, &family);
    if !report.ok && !force {
        return Err(Error::Containment(report));
    }
    let moment = if report.ok {
        moment_reflex(&framed, beta)?
    } else {
        crate::moments::moment_polar(&framed, &family)?
    };
    let zero = first_bessel_zero(BesselOrder::new(0.5 * beta)?)?;
    // [π⁻¹ β(β+2) I]^{−2/(β+2)} j²
    let ln_norm = (beta * (beta + 2.0) / PI).ln() + moment.value.ln();
    let value = (2.0 * zero.k.ln() - 2.0 * ln_norm / (beta + 2.0)).exp();
    Ok(BoundReport {
        formula: Formula::Reflex,
        value,
        param: Some(beta),
        moment: Some(moment),
        area: None,
        zero,
        containment_ok: report.ok,
        pose_used: *pose,
    })
}

/// Lower bound on the first radial root k of the annular sector (β, ρ₁, ρ₂):
/// substituting the sector's closed-form moment
/// I_β = (π/β)(ρ₂^{β+2} − ρ₁^{β+2})/(β+2) into the reflex bound and taking a
/// square root gives k ≥ (ρ₂^{β+2} − ρ₁^{β+2})^{−1/(β+2)} j_{β/2,1}.
pub fn annular_root_bound(beta: f64, rho1: f64, rho2: f64) -> Result<f64> {
    annular_root_bound_generic(beta, rho1, rho2, 1.0)
}

/// The same bound with the exponent doubled to −2/(β+2) (an alternative form
/// sometimes quoted for this root). It has the wrong homogeneity in the radii
/// — scaling all lengths by s multiplies it by s^{−2} instead of s^{−1} — so
/// it cannot be a valid lower bound at every scale; audits print both.
pub fn annular_root_bound_printed_exponent(beta: f64, rho1: f64, rho2: f64) -> Result<f64> {
    annular_root_bound_generic(beta, rho1, rho2, 2.0)
}

fn annular_root_bound_generic(beta: f64, rho1: f64, rho2: f64, exp_factor: f64) -> Result<f64> {
    if !(1.0..=2.0).contains(&beta) {
        return Err(Error::InvalidInput(format!("annular bound requires β ∈ [1, 2], got {beta}")));
    }
    if !(rho1 >= 0.0 && rho2 > rho1) {
        return Err(Error::InvalidInput(format!(
            "annular bound requires 0 ≤ rho1 < rho2, got ({rho1}, {rho2})"
        )));
    }
    let zero = first_bessel_zero(BesselOrder::new(0.5 * beta)?)?;
    let p = beta + 2.0;
    let diff = ((p * rho2.ln()).exp() - if rho1 > 0.0 { (p * rho1.ln()).exp() } else { 0.0 }).max(0.0);
    Ok((zero.k.ln() - exp_factor * diff.ln() / p).exp())
}

/// Both sides of the boundary-moment inequality and their gap.
#[derive(Debug, Clone, Copy)]
pub struct LemmaGap {
    /// [(β/π) ∫_{∂D} r^β cos²(βθ/2) ds]^{(β+2)/(β+1)}
    pub lhs: f64,
    /// π⁻¹ β(β+2) I_β(D)
    pub rhs: f64,
    /// lhs − rhs; the inequality asserts gap ≥ −tol.
    pub gap: f64,
    /// Combined quadrature error carried by both sides.
    pub tol: f64,
}

/// Evaluates the boundary-moment inequality for D ⊂ R_β at the given pose.
pub fn lemma_gap(domain: &Domain, beta: f64, pose: &Pose) -> Result<LemmaGap> {
    let family = WedgeFamily::reflex(beta)?;
    let framed = domain.to_wedge_frame(pose);
    let report = contains_in_wedge(&framed, &family);
    if !report.ok {
        return Err(Error::Containment(report));
    }
    let bm = boundary_moment(&framed, beta)?;
    let im = moment_reflex(&framed, beta)?;
    let p = (beta + 2.0) / (beta + 1.0);
    let base = beta / PI * bm.value;
    let lhs = (p * base.ln()).exp();
    let rhs = beta * (beta + 2.0) / PI * im.value;
    // first-order error propagation through both sides
    let tol = p * lhs / bm.value.max(1e-300) * bm.abs_err
        + beta * (beta + 2.0) / PI * im.abs_err
        + 1e-12 * (lhs.abs() + rhs.abs());
    Ok(LemmaGap { lhs, rhs, gap: lhs - rhs, tol })
}
