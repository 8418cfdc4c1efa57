use crate::special::bessel::{j_any, y_any};
use crate::special::BesselOrder;
use crate::{Error, Result};
use std::f64::consts::PI;

/// A located root with its certificate: re-evaluating the defining function at
/// `k` must stay within `residual`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroResult {
    pub nu: f64,
    pub k: f64,
    pub residual: f64,
    pub iterations: u32,
}

/// Smallest positive zero j_{ν,1} of J_ν.
///
/// Sign scan with step 0.1 starting safely below a McMahon-style first-zero
/// estimate, then bisection and a Newton polish. Residual certified ≤ 1e-12.
pub fn first_bessel_zero(order: BesselOrder) -> Result<ZeroResult> {
    let nu = order.get();
    let f = |x: f64| j_any(nu, x);
    // McMahon: j_{ν,1} ≈ b − (μ−1)/(8b), b = (ν/2 + 3/4)π. Overestimates by
    // < 2 on [0, 12]; backing off by 4 (floored at ν, since j_{ν,1} > ν) gives
    // a start where J_ν is still positive.
    let b = (0.5 * nu + 0.75) * PI;
    let mcmahon = b - (4.0 * nu * nu - 1.0) / (8.0 * b);
    let start = (mcmahon - 4.0).max(nu).max(0.05);

    let mut x0 = start;
    let mut f0 = f(x0);
    if f0 <= 0.0 {
        return Err(Error::Numerical(format!(
            "first_bessel_zero: scan start {x0} not below the first zero (ν={nu})"
        )));
    }
    let mut iterations = 0u32;
    let mut bracket = None;
    let mut x = x0;
    while x < 60.0 {
        x += 0.1;
        let fx = f(x);
        iterations += 1;
        if fx <= 0.0 {
            bracket = Some((x0, x));
            break;
        }
        x0 = x;
        f0 = fx;
    }
    let _ = f0;
    let (lo, hi) = bracket.ok_or_else(|| {
        Error::Numerical(format!("first_bessel_zero: no sign change in [0, 60] for ν={nu}"))
    })?;

    let (mut k, it) = bisect(&f, lo, hi, 90);
    iterations += it;
    // Newton polish; J_ν'(x) = (ν/x) J_ν(x) − J_{ν+1}(x)
    for _ in 0..4 {
        let fx = f(k);
        let dfx = nu / k * fx - j_any(nu + 1.0, k);
        if dfx == 0.0 {
            break;
        }
        let step = fx / dfx;
        k -= step;
        iterations += 1;
        if step.abs() < 1e-16 * k {
            break;
        }
    }
    let residual = f(k);
    if residual.abs() > 1e-12 {
        return Err(Error::Numerical(format!(
            "first_bessel_zero: residual {residual:e} exceeds 1e-12 for ν={nu}"
        )));
    }
    Ok(ZeroResult { nu, k, residual, iterations })
}

/// Smallest positive root of the annular cross-product equation
/// J_ν(kρ₁) Y_ν(kρ₂) − J_ν(kρ₂) Y_ν(kρ₁) = 0, characterizing the radial modes
/// that vanish on both circles r = ρ₁ and r = ρ₂.
///
/// Residual certified ≤ 1e-10 in the normalized function.
pub fn cross_product_root(order: BesselOrder, rho1: f64, rho2: f64) -> Result<ZeroResult> {
    check_radii(rho1, rho2)?;
    let nu = order.get();
    let f = |k: f64| {
        j_any(nu, k * rho1) * y_any(nu, k * rho2) - j_any(nu, k * rho2) * y_any(nu, k * rho1)
    };
    // Domain monotonicity (annular sector ⊂ full sector of radius ρ₂) puts the
    // root above j_{ν,1}/ρ₂, where the cross product is strictly positive.
    let j1 = first_bessel_zero(order)?;
    let k0 = j1.k / rho2;
    let step = (0.02 * k0).min(PI / (40.0 * (rho2 - rho1))).max(1e-6 * k0);
    scan_refine(&f, nu, k0, step, k0 + 6.0 * PI / (rho2 - rho1), 1e-10)
}

/// Smallest positive root of the same-radius product equation
/// J_ν(kρ₁) Y_ν(kρ₁) = J_ν(kρ₂) Y_ν(kρ₂), i.e. the annular characteristic
/// equation in its alternative (same argument on each side) form. Kept
/// separate so audits can compare both roots against an eigensolver.
pub fn literal_annular_root(order: BesselOrder, rho1: f64, rho2: f64) -> Result<ZeroResult> {
    check_radii(rho1, rho2)?;
    let nu = order.get();
    let g = |k: f64| {
        j_any(nu, k * rho1) * y_any(nu, k * rho1) - j_any(nu, k * rho2) * y_any(nu, k * rho2)
    };
    // g(0+) → 0: both products tend to −1/(πν); start the scan away from zero.
    let j1 = first_bessel_zero(order)?;
    let start = 0.02 * j1.k / rho2;
    let step = PI / (64.0 * rho2);
    scan_refine(&g, nu, start, step, start + 8.0 * PI / (rho2 - rho1), 1e-9)
}

fn check_radii(rho1: f64, rho2: f64) -> Result<()> {
    if !(rho1 > 0.0 && rho2 > rho1) {
        return Err(Error::InvalidInput(format!(
            "annular radii must satisfy 0 < rho1 < rho2, got ({rho1}, {rho2})"
        )));
    }
    Ok(())
}

fn scan_refine<F: Fn(f64) -> f64>(
    f: &F,
    nu: f64,
    start: f64,
    step: f64,
    kmax: f64,
    residual_bound: f64,
) -> Result<ZeroResult> {
    let mut iterations = 0u32;
    let mut a = start;
    let mut fa = f(a);
    let mut bracket = None;
    let mut k = a;
    while k < kmax {
        k += step;
        let fk = f(k);
        iterations += 1;
        if fa * fk <= 0.0 && fa != 0.0 {
            bracket = Some((a, k));
            break;
        }
        a = k;
        fa = fk;
    }
    let (lo, hi) = bracket.ok_or_else(|| {
        Error::Numerical(format!("root scan found no sign change in [{start}, {kmax}]"))
    })?;
    let (root, it) = bisect(f, lo, hi, 110);
    iterations += it;
    let residual = f(root);
    if residual.abs() > residual_bound {
        return Err(Error::Numerical(format!(
            "root residual {residual:e} exceeds {residual_bound:e} (ν={nu})"
        )));
    }
    Ok(ZeroResult { nu, k: root, residual, iterations })
}

fn bisect<F: Fn(f64) -> f64>(f: &F, mut lo: f64, mut hi: f64, max_iter: u32) -> (f64, u32) {
    let mut flo = f(lo);
    let mut iterations = 0;
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        let fmid = f(mid);
        iterations += 1;
        if fmid == 0.0 {
            return (mid, iterations);
        }
        if flo * fmid < 0.0 {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    (0.5 * (lo + hi), iterations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::BesselOrder;

    fn order(nu: f64) -> BesselOrder {
        BesselOrder::new(nu).unwrap()
    }

    #[test]
    fn j0_first_zero() {
        let z = first_bessel_zero(order(0.0)).unwrap();
        assert!((z.k - 2.4048).abs() < 1e-4, "got {}", z.k);
        assert!((z.k - 2.404825557695773).abs() < 1e-10);
    }

    #[test]
    fn j_half_first_zero_is_pi() {
        let z = first_bessel_zero(order(0.5)).unwrap();
        assert!((z.k - PI).abs() < 1e-10, "got {}", z.k);
    }

    #[test]
    fn j1_first_zero_against_independent_series_oracle() {
        // Independent oracle: plain f64 power series for J_1 (fine for x < 5),
        // sign scan + bisection. Frozen against the located zero.
        let j1_naive = |x: f64| {
            let q = 0.25 * x * x;
            let mut term = 0.5 * x;
            let mut s = term;
            for m in 1..40 {
                term *= -q / (m as f64 * (m as f64 + 1.0));
                s += term;
            }
            s
        };
        let mut a = 0.5;
        let mut b = a;
        while j1_naive(b) > 0.0 {
            a = b;
            b += 0.1;
        }
        for _ in 0..80 {
            let m = 0.5 * (a + b);
            if j1_naive(a) * j1_naive(m) <= 0.0 {
                b = m;
            } else {
                a = m;
            }
        }
        let oracle = 0.5 * (a + b);
        assert!((oracle - 3.8317059702075125).abs() < 1e-9);

        let z = first_bessel_zero(order(1.0)).unwrap();
        assert!((z.k - oracle).abs() < 1e-9, "{} vs oracle {}", z.k, oracle);
    }

    #[test]
    fn zeros_increase_with_order() {
        let mut prev = 0.0;
        let mut nu = 0.0;
        while nu <= 3.0 + 1e-12 {
            let z = first_bessel_zero(order(nu)).unwrap();
            assert!(z.k > prev, "interlacing violated at ν={nu}");
            prev = z.k;
            nu += 0.25;
        }
    }

    #[test]
    fn residual_certificates_hold() {
        for nu in [0.0, 0.5, 1.0, 2.5, 6.0, 12.0] {
            let z = first_bessel_zero(order(nu)).unwrap();
            assert!(crate::special::bessel::j_any(nu, z.k).abs() <= 1e-12);
            assert!(z.k > 0.0);
        }
    }

    #[test]
    fn cross_product_half_integer_reduction() {
        // For ν = 1/2 the cross product reduces to sin(k(ρ₂−ρ₁)) = 0.
        let z = cross_product_root(order(0.5), 1.0, 2.0).unwrap();
        assert!((z.k - PI).abs() < 1e-10, "got {}", z.k);
        let z = cross_product_root(order(0.5), 1.0, 3.0).unwrap();
        assert!((z.k - PI / 2.0).abs() < 1e-10, "got {}", z.k);
    }

    #[test]
    fn cross_product_collapses_to_sector_zero() {
        // ρ₁ → 0⁺: root → j_{ν,1}/ρ₂
        for nu in [0.5, 1.0, 2.0] {
            let rho2 = 2.0;
            let z = cross_product_root(order(nu), 1e-3 * rho2, rho2).unwrap();
            let j = first_bessel_zero(order(nu)).unwrap();
            let rel = (z.k - j.k / rho2).abs() / (j.k / rho2);
            assert!(rel < 1e-2, "ν={nu}: rel={rel}");
        }
    }

    #[test]
    fn literal_root_half_integer() {
        // ν=1/2, ρ=(1,2): 2 sin 2k = sin 4k, smallest positive root k = π/2.
        let z = literal_annular_root(order(0.5), 1.0, 2.0).unwrap();
        assert!((z.k - PI / 2.0).abs() < 1e-8, "got {}", z.k);
    }

    #[test]
    fn bad_radii_rejected() {
        assert!(cross_product_root(order(1.0), 2.0, 1.0).is_err());
        assert!(cross_product_root(order(1.0), 0.0, 1.0).is_err());
    }
}
