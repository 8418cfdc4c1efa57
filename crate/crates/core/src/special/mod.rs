//! Real-order Bessel functions, their first positive zeros, and annular
//! cross-product roots — the spectral constants entering every bound.
//!
//! Orders are capped at 12 (covering wedge parameters α down to aperture π/12
//! and reflex parameters β/2 ∈ [1/2, 1]) and arguments at 100; within that box
//! J is accurate to ~1e-11 absolute and Y to ~1e-10.

mod bessel;
mod gamma;
mod zeros;

pub use gamma::gamma;
pub use zeros::{cross_product_root, first_bessel_zero, literal_annular_root, ZeroResult};

use crate::{Error, Result};

pub(crate) use bessel::{j_any, y_any};

/// Admissible Bessel order: ν ∈ [0, 12].
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct BesselOrder(f64);

impl BesselOrder {
    pub const MAX: f64 = 12.0;

    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() || !(0.0..=Self::MAX).contains(&nu) {
            return Err(Error::InvalidInput(format!(
                "Bessel order must lie in [0, {}], got {nu}",
                Self::MAX
            )));
        }
        Ok(BesselOrder(nu))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }
}

/// J_ν(x) for ν ∈ [0, 12], 0 ≤ x ≤ 100.
pub fn bessel_j(nu: BesselOrder, x: f64) -> Result<f64> {
    if !(0.0..=100.0).contains(&x) {
        return Err(Error::InvalidInput(format!(
            "bessel_j requires 0 ≤ x ≤ 100, got {x}"
        )));
    }
    Ok(j_any(nu.get(), x))
}

/// Y_ν(x) for ν ∈ [0, 12], 0 < x ≤ 100.
pub fn bessel_y(nu: BesselOrder, x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 100.0) {
        return Err(Error::InvalidInput(format!(
            "bessel_y requires 0 < x ≤ 100, got {x}"
        )));
    }
    Ok(y_any(nu.get(), x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn nu(v: f64) -> BesselOrder {
        BesselOrder::new(v).unwrap()
    }

    #[test]
    fn j0_at_zero_is_one() {
        assert_eq!(bessel_j(nu(0.0), 0.0).unwrap(), 1.0);
    }

    #[test]
    fn j_half_at_half_pi() {
        // √(2/(πt))·sin t at t = π/2 gives 2/π
        let v = bessel_j(nu(0.5), PI / 2.0).unwrap();
        assert!((v - 2.0 / PI).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn j0_near_first_zero() {
        let v = bessel_j(nu(0.0), 2.4048).unwrap();
        assert!(v.abs() < 5e-5, "got {v}");
    }

    #[test]
    fn y_half_values() {
        // Y_{1/2}(t) = −√(2/(πt)) cos t: zero at π/2, √(2/π²) at π
        let v = bessel_y(nu(0.5), PI / 2.0).unwrap();
        assert!(v.abs() <= 1e-10, "got {v}");
        let v = bessel_y(nu(0.5), PI).unwrap();
        let expect = (2.0 / (PI * PI)).sqrt();
        assert!((v - expect).abs() < 1e-12, "got {v} vs {expect}");
    }

    #[test]
    fn y1_first_zero_by_independent_bisection() {
        // bracket the first zero of Y_1 by sign change and bisection
        let f = |x: f64| bessel_y(nu(1.0), x).unwrap();
        let (mut a, mut b) = (2.0, 2.4);
        assert!(f(a) < 0.0 && f(b) > 0.0);
        for _ in 0..60 {
            let m = 0.5 * (a + b);
            if f(a) * f(m) <= 0.0 {
                b = m;
            } else {
                a = m;
            }
        }
        let zero = 0.5 * (a + b);
        assert!((zero - 2.197141).abs() < 1e-4, "zero at {zero}");
        assert!(f(2.197141).abs() < 1e-4);
    }

    #[test]
    fn domain_errors() {
        assert!(bessel_j(nu(0.0), -0.1).is_err());
        assert!(bessel_j(nu(0.0), 100.5).is_err());
        assert!(bessel_y(nu(0.0), 0.0).is_err());
        assert!(BesselOrder::new(-0.1).is_err());
        assert!(BesselOrder::new(12.5).is_err());
        assert!(BesselOrder::new(f64::NAN).is_err());
    }
}
