//! The weighted moment integrals normalizing every bound:
//!
//! * reflex moment I_β(D) = ∫_D r^{β+1} cos²(βθ/2) dr dθ,
//! * wedge moment 𝓘_α(D) = ∫_D r^{2α+1} sin²(αθ) dr dθ,
//! * boundary moment ∫_{∂D} r^β cos²(βθ/2) ds (both sides of every slit).
//!
//! Area moments are integrated in polar form: for each direction θ the ray
//! from the frame origin intersects the shape in a set of radial intervals
//! (computed analytically, see `geometry::rays`), the radial factor integrates
//! in closed form on each interval, and only the angular integral is done
//! adaptively, splitting at shape event angles. Canonical discs/sectors have
//! fully closed forms. A triangle-quadrature path and a seeded Monte Carlo
//! oracle provide independent cross-checks.

use crate::exec::{self, ExecMode};
use crate::geometry::{
    boundary_curve, contains_in_wedge, BoundaryPiece, Domain, PieceKind, Point, Shape, SlitSide,
    WedgeFamily,
};
use crate::{Error, Result};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cell::Cell;
use std::f64::consts::PI;

/// How a moment value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadMethod {
    ClosedForm,
    PolarAdaptive,
    TriangleGauss,
    MonteCarlo,
}

/// A moment value with an error estimate and method tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_err: f64,
    pub method: QuadMethod,
    pub samples: u64,
}

/// Integrand family; mirrors [`WedgeFamily`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct Weight {
    family: WedgeFamily,
}

impl Weight {
    pub(crate) fn new(family: WedgeFamily) -> Weight {
        Weight { family }
    }

    /// Angular factor: cos²(βθ/2) or sin²(αθ).
    fn angular(&self, theta: f64) -> f64 {
        match self.family {
            WedgeFamily::Reflex { beta } => {
                let c = (0.5 * beta * theta).cos();
                c * c
            }
            WedgeFamily::Pw { alpha } => {
                let s = (alpha * theta).sin();
                s * s
            }
        }
    }

    /// Antiderivative of the angular factor.
    fn angular_anti(&self, theta: f64) -> f64 {
        match self.family {
            WedgeFamily::Reflex { beta } => 0.5 * theta + (beta * theta).sin() / (2.0 * beta),
            WedgeFamily::Pw { alpha } => 0.5 * theta - (2.0 * alpha * theta).sin() / (4.0 * alpha),
        }
    }

    /// Antiderivative of the radial factor (r^{β+1} or r^{2α+1}).
    fn radial_anti(&self, r: f64) -> f64 {
        match self.family {
            WedgeFamily::Reflex { beta } => r.powf(beta + 2.0) / (beta + 2.0),
            WedgeFamily::Pw { alpha } => r.powf(2.0 * alpha + 2.0) / (2.0 * alpha + 2.0),
        }
    }

    /// Integrand in Cartesian measure dx dy.
    fn cartesian(&self, p: Point) -> f64 {
        let r = p.norm();
        if r == 0.0 {
            return 0.0;
        }
        let theta = p.angle();
        match self.family {
            WedgeFamily::Reflex { beta } => r.powf(beta) * self.angular(theta),
            WedgeFamily::Pw { alpha } => r.powf(2.0 * alpha) * self.angular(theta),
        }
    }

    /// Homogeneity exponent: value(sD) = s^e · value(D).
    pub fn scaling_exponent(&self) -> f64 {
        match self.family {
            WedgeFamily::Reflex { beta } => beta + 2.0,
            WedgeFamily::Pw { alpha } => 2.0 * alpha + 2.0,
        }
    }
}

fn validate_family(family: &WedgeFamily) -> Result<()> {
    match family {
        WedgeFamily::Reflex { beta } if (1.0..=2.0).contains(beta) => Ok(()),
        WedgeFamily::Pw { alpha } if *alpha >= 1.0 => Ok(()),
        WedgeFamily::Reflex { beta } => Err(Error::InvalidInput(format!(
            "reflex moment requires β ∈ [1, 2], got {beta}"
        ))),
        WedgeFamily::Pw { alpha } => {
            Err(Error::InvalidInput(format!("wedge moment requires α ≥ 1, got {alpha}")))
        }
    }
}

/// I_β(D) for a frame-resident domain contained in R_β.
pub fn moment_reflex(domain: &Domain, beta: f64) -> Result<QuadratureResult> {
    let family = WedgeFamily::reflex(beta)?;
    let report = contains_in_wedge(domain, &family);
    if !report.ok {
        return Err(Error::Containment(report));
    }
    moment_auto(domain, &family)
}

/// 𝓘_α(D) for a frame-resident domain contained in S_α.
pub fn moment_pw(domain: &Domain, alpha: f64) -> Result<QuadratureResult> {
    let family = WedgeFamily::pw(alpha)?;
    let report = contains_in_wedge(domain, &family);
    if !report.ok {
        return Err(Error::Containment(report));
    }
    moment_auto(domain, &family)
}

/// Closed form → polar adaptive.
fn moment_auto(domain: &Domain, family: &WedgeFamily) -> Result<QuadratureResult> {
    if let Some(r) = moment_closed_form(domain, family) {
        return Ok(r);
    }
    moment_polar(domain, family)
}

/// Exact value when the shape is a canonical polar box (disc/sector/annular
/// sector attached to the frame origin).
pub fn moment_closed_form(domain: &Domain, family: &WedgeFamily) -> Option<QuadratureResult> {
    validate_family(family).ok()?;
    let w = Weight::new(*family);
    let scale = domain.diameter().max(1e-12);
    let tol = 1e-12 * scale;
    let (r0, r1, t_lo, t_hi) = match domain.shape() {
        Shape::Disc { center, radius } if center.norm() <= tol => (0.0, *radius, -PI, PI),
        Shape::CircularSector { vertex, bisector, radius, aperture } if vertex.norm() <= tol => {
            (0.0, *radius, bisector - 0.5 * aperture, bisector + 0.5 * aperture)
        }
        Shape::AnnularSector { center, bisector, rho1, rho2, aperture } if center.norm() <= tol => {
            (*rho1, *rho2, bisector - 0.5 * aperture, bisector + 0.5 * aperture)
        }
        _ => return None,
    };
    let value = (w.radial_anti(r1) - w.radial_anti(r0)) * (w.angular_anti(t_hi) - w.angular_anti(t_lo));
    Some(QuadratureResult { value, abs_err: 0.0, method: QuadMethod::ClosedForm, samples: 0 })
}

/// Polar-adaptive moment: exact radial integral on ray intervals, adaptive
/// Simpson in θ split at shape event angles.
pub fn moment_polar(domain: &Domain, family: &WedgeFamily) -> Result<QuadratureResult> {
    validate_family(family)?;
    let w = Weight::new(*family);
    let shape = domain.shape();
    let evals = Cell::new(0u64);
    let f = |theta: f64| {
        evals.set(evals.get() + 1);
        let ang = w.angular(theta);
        let radial: f64 = crate::geometry::ray_intervals(shape, theta)
            .iter()
            .map(|&(a, b)| w.radial_anti(b) - w.radial_anti(a))
            .sum();
        ang * radial
    };
    let splits = crate::geometry::shape_event_angles(shape);
    let (value, abs_err) = integrate_split(&f, &splits)?;
    Ok(QuadratureResult {
        value: value.max(0.0),
        abs_err,
        method: QuadMethod::PolarAdaptive,
        samples: evals.get(),
    })
}

/// Triangle-quadrature moment for polygons: ear-clipped fan, 7-point Gauss
/// with adaptive quadrisection; triangles touching the origin subdivide
/// radially (the integrand's angular derivative is unbounded only there).
pub fn moment_triangle(domain: &Domain, family: &WedgeFamily) -> Result<QuadratureResult> {
    moment_triangle_with_mode(domain, family, ExecMode::default_mode())
}

pub fn moment_triangle_with_mode(
    domain: &Domain,
    family: &WedgeFamily,
    mode: ExecMode,
) -> Result<QuadratureResult> {
    validate_family(family)?;
    let poly = domain.polygonalize(512)?;
    let vertices = match poly.shape() {
        Shape::Polygon { vertices } => vertices.clone(),
        _ => unreachable!(),
    };
    let tris = ear_clip(&vertices)
        .ok_or_else(|| Error::Numerical("ear clipping failed on polygon".into()))?;
    let w = Weight::new(*family);
    let total_area: f64 = tris.iter().map(|t| tri_area(t)).sum();
    // coarse pass for the tolerance scale
    let coarse: f64 = tris.iter().map(|t| gauss7(t, &|p| w.cartesian(p))).sum();
    let tol_total = 1e-12 * coarse.abs().max(1e-12);

    let parts = exec::map(mode, &tris, |t| {
        let tol = tol_total * (tri_area(t) / total_area).max(1e-6);
        tri_adaptive(*t, &|p| w.cartesian(p), tol, 0)
    });
    let mut value = 0.0;
    let mut abs_err = 0.0;
    let mut samples = 0u64;
    for (v, e, n) in parts {
        value += v;
        abs_err += e;
        samples += n;
    }
    Ok(QuadratureResult { value: value.max(0.0), abs_err, method: QuadMethod::TriangleGauss, samples })
}

/// Seeded rejection-sampling oracle: uniform samples in the bounding box,
/// value = box_area · mean(integrand · indicator), error reported as three
/// standard errors. Fixed-seed substreams per chunk make the result identical
/// under any degree of parallelism.
pub fn moment_mc_oracle(
    domain: &Domain,
    family: &WedgeFamily,
    n: u64,
    seed: u64,
) -> Result<QuadratureResult> {
    moment_mc_with_mode(domain, family, n, seed, ExecMode::default_mode())
}

const MC_CHUNK: u64 = 1 << 14;

pub fn moment_mc_with_mode(
    domain: &Domain,
    family: &WedgeFamily,
    n: u64,
    seed: u64,
    mode: ExecMode,
) -> Result<QuadratureResult> {
    validate_family(family)?;
    if n < 10_000 {
        return Err(Error::InvalidInput(format!(
            "Monte Carlo oracle requires n ≥ 10000, got {n}"
        )));
    }
    let w = Weight::new(*family);
    let (lo, hi) = domain.bounding_box();
    let (dx, dy) = (hi.x - lo.x, hi.y - lo.y);
    let box_area = dx * dy;
    let shape = domain.shape();

    let n_chunks = n.div_ceil(MC_CHUNK) as usize;
    let chunks = exec::map_range(mode, n_chunks, |ci| {
        let count = MC_CHUNK.min(n - ci as u64 * MC_CHUNK);
        let mut rng = ChaCha8Rng::seed_from_u64(splitmix(seed, ci as u64));
        let mut sum = 0.0f64;
        let mut sum2 = 0.0f64;
        let mut accepted = 0u64;
        for _ in 0..count {
            let x = lo.x + dx * u01(&mut rng);
            let y = lo.y + dy * u01(&mut rng);
            let p = Point::new(x, y);
            if crate::geometry::point_inside_shape(shape, p) {
                let f = w.cartesian(p);
                sum += f;
                sum2 += f * f;
                accepted += 1;
            }
        }
        (sum, sum2, accepted)
    });
    let mut sum = 0.0;
    let mut sum2 = 0.0;
    let mut accepted = 0u64;
    for (s, s2, a) in chunks {
        sum += s;
        sum2 += s2;
        accepted += a;
    }
    if accepted == 0 {
        return Err(Error::Numerical("Monte Carlo oracle: zero acceptance rate".into()));
    }
    let nf = n as f64;
    let mean = sum / nf;
    let var = (sum2 / nf - mean * mean).max(0.0);
    let stderr = (var / nf).sqrt();
    Ok(QuadratureResult {
        value: box_area * mean,
        abs_err: 3.0 * box_area * stderr,
        method: QuadMethod::MonteCarlo,
        samples: n,
    })
}

fn splitmix(seed: u64, idx: u64) -> u64 {
    let mut z = seed.wrapping_add(idx.wrapping_mul(0x9E37_79B9_7F4A_7C15)).wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

fn u01(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
}

/// Boundary moment ∫_{∂D} r^β cos²(βθ/2) ds over the full boundary including
/// both sides of every slit. A slit along the excluded ray contributes zero
/// because the angular factor vanishes at θ = ±π/β.
pub fn boundary_moment(domain: &Domain, beta: f64) -> Result<QuadratureResult> {
    if !(1.0..=2.0).contains(&beta) {
        return Err(Error::InvalidInput(format!(
            "boundary moment requires β ∈ [1, 2], got {beta}"
        )));
    }
    let evals = Cell::new(0u64);
    let weight = |p: Point, side: Option<SlitSide>| {
        evals.set(evals.get() + 1);
        let r = p.norm();
        if r == 0.0 {
            return 0.0;
        }
        let mut theta = p.angle();
        // slit-side angle convention on the cut: upper side θ → +π, lower −π
        if p.y == 0.0 && p.x < 0.0 {
            theta = match side {
                Some(SlitSide::Lower) => -PI,
                _ => PI,
            };
        }
        let c = (0.5 * beta * theta).cos();
        r.powf(beta) * c * c
    };

    let mut value = 0.0;
    let mut abs_err = 0.0;
    for piece in boundary_curve(domain).pieces {
        let (v, e) = integrate_piece(&piece, &|p, s| weight(p, s))?;
        value += v;
        abs_err += e;
    }
    Ok(QuadratureResult {
        value: value.max(0.0),
        abs_err,
        method: QuadMethod::PolarAdaptive,
        samples: evals.get(),
    })
}

fn integrate_piece<F: Fn(Point, Option<SlitSide>) -> f64>(
    piece: &BoundaryPiece,
    weight: &F,
) -> Result<(f64, f64)> {
    let side = piece.slit_side;
    match piece.kind {
        PieceKind::Segment { a, b } => {
            let len = a.dist(b);
            // split where the segment passes closest to the origin (radial kink)
            let e = b.sub(a);
            let t_star = if len > 0.0 { (-a.dot(e) / e.dot(e)).clamp(0.0, 1.0) } else { 0.0 };
            let f = |t: f64| weight(a.add(e.scale(t)), side) * len;
            let mut cuts = vec![0.0, 1.0];
            if t_star > 1e-9 && t_star < 1.0 - 1e-9 {
                cuts.insert(1, t_star);
            }
            let mut val = 0.0;
            let mut err = 0.0;
            for wdw in cuts.windows(2) {
                let (v, er) = adaptive_simpson(&f, wdw[0], wdw[1], 1e-13, 40)?;
                val += v;
                err += er;
            }
            Ok((val, err))
        }
        PieceKind::Arc { center, radius, t0, t1 } => {
            let f = |phi: f64| weight(center.add(Point::dir(phi).scale(radius)), side) * radius;
            // split at the ±π crossing of the point angle (weight kink) by
            // subdividing into 8 panels before adapting
            let mut val = 0.0;
            let mut err = 0.0;
            for i in 0..8 {
                let a = t0 + (t1 - t0) * i as f64 / 8.0;
                let b = t0 + (t1 - t0) * (i + 1) as f64 / 8.0;
                let (v, er) = adaptive_simpson(&f, a.min(b), a.max(b), 1e-13, 40)?;
                let sgn = if t1 >= t0 { 1.0 } else { 1.0 }; // arclength measure, orientation-free
                val += sgn * v;
                err += er;
            }
            Ok((val, err))
        }
    }
}

/// Adaptive Simpson over the union of segments delimited by sorted split
/// angles, covering (−π, π].
fn integrate_split<F: Fn(f64) -> f64>(f: &F, splits: &[f64]) -> Result<(f64, f64)> {
    let mut pts: Vec<f64> = splits.to_vec();
    if pts.first().map_or(true, |&a| a > -PI + 1e-12) {
        pts.insert(0, -PI);
    }
    if pts.last().map_or(true, |&b| b < PI - 1e-12) {
        pts.push(PI);
    }
    // coarse total for the tolerance scale
    let mut coarse = 0.0;
    for w in pts.windows(2) {
        coarse += simpson_fixed(f, w[0], w[1], 16);
    }
    let tol_total = 1e-13 * coarse.abs().max(1e-10);
    let per = tol_total / (pts.len() - 1) as f64;
    let mut val = 0.0;
    let mut err = 0.0;
    for w in pts.windows(2) {
        if w[1] - w[0] < 1e-14 {
            continue;
        }
        let (v, e) = adaptive_simpson(f, w[0], w[1], per, 48)?;
        val += v;
        err += e;
    }
    Ok((val, err))
}

fn simpson_fixed<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        let x = a + i as f64 * h;
        s += if i % 2 == 1 { 4.0 } else { 2.0 } * f(x);
    }
    s * h / 3.0
}

/// Classic recursive adaptive Simpson; returns (value, error estimate).
pub(crate) fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    eps: f64,
    max_depth: u32,
) -> Result<(f64, f64)> {
    let fa = f(a);
    let fb = f(b);
    let m = 0.5 * (a + b);
    let fm = f(m);
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    Ok(simpson_recurse(f, a, b, fa, fm, fb, whole, eps, max_depth))
}

#[allow(clippy::too_many_arguments)]
fn simpson_recurse<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> (f64, f64) {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * eps {
        (left + right + delta / 15.0, delta.abs() / 15.0)
    } else {
        let (lv, le) = simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * eps, depth - 1);
        let (rv, re) = simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
        (lv + rv, le + re)
    }
}

// ---- triangle quadrature -------------------------------------------------

type Tri = [Point; 3];

fn tri_area(t: &Tri) -> f64 {
    0.5 * (t[1].sub(t[0]).cross(t[2].sub(t[0]))).abs()
}

/// 7-point degree-5 rule.
fn gauss7<F: Fn(Point) -> f64>(t: &Tri, f: &F) -> f64 {
    const A1: f64 = 0.059_715_871_789_770;
    const B1: f64 = 0.470_142_064_105_115;
    const W1: f64 = 0.132_394_152_788_506;
    const A2: f64 = 0.797_426_985_353_087;
    const B2: f64 = 0.101_286_507_323_456;
    const W2: f64 = 0.125_939_180_544_827;
    let pts_w: [(f64, f64, f64, f64); 7] = [
        (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0, 0.225),
        (A1, B1, B1, W1),
        (B1, A1, B1, W1),
        (B1, B1, A1, W1),
        (A2, B2, B2, W2),
        (B2, A2, B2, W2),
        (B2, B2, A2, W2),
    ];
    let area = tri_area(t);
    let mut s = 0.0;
    for (l0, l1, l2, w) in pts_w {
        let p = Point::new(
            l0 * t[0].x + l1 * t[1].x + l2 * t[2].x,
            l0 * t[0].y + l1 * t[1].y + l2 * t[2].y,
        );
        s += w * f(p);
    }
    s * area
}

fn subdivide(t: &Tri) -> Vec<Tri> {
    let scale = t[0].norm().max(t[1].norm()).max(t[2].norm()).max(1e-12);
    // radial split when a vertex sits at the origin: children cluster
    // geometrically toward the singular point
    for i in 0..3 {
        if t[i].norm() <= 1e-12 * scale {
            let (o, a, b) = (t[i], t[(i + 1) % 3], t[(i + 2) % 3]);
            let a2 = a.scale(0.5);
            let b2 = b.scale(0.5);
            return vec![[o, a2, b2], [a2, a, b], [a2, b, b2]];
        }
    }
    let m01 = t[0].add(t[1]).scale(0.5);
    let m12 = t[1].add(t[2]).scale(0.5);
    let m20 = t[2].add(t[0]).scale(0.5);
    vec![[t[0], m01, m20], [m01, t[1], m12], [m20, m12, t[2]], [m01, m12, m20]]
}

fn tri_adaptive<F: Fn(Point) -> f64>(t: Tri, f: &F, tol: f64, depth: u32) -> (f64, f64, u64) {
    let q1 = gauss7(&t, f);
    let children = subdivide(&t);
    let q2: f64 = children.iter().map(|c| gauss7(c, f)).sum();
    let delta = q2 - q1;
    let samples = 7 * (1 + children.len() as u64);
    if delta.abs() <= tol || depth >= 26 {
        return (q2 + delta / 15.0, delta.abs() / 15.0, samples);
    }
    let mut v = 0.0;
    let mut e = 0.0;
    let mut n = samples;
    let child_tol = tol / children.len() as f64;
    for c in children {
        let (cv, ce, cn) = tri_adaptive(c, f, child_tol, depth + 1);
        v += cv;
        e += ce;
        n += cn;
    }
    (v, e, n)
}

/// Ear-clipping triangulation of a simple CCW polygon.
fn ear_clip(vertices: &[Point]) -> Option<Vec<Tri>> {
    let n = vertices.len();
    if n < 3 {
        return None;
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut tris = Vec::with_capacity(n - 2);
    let mut guard = 0usize;
    while idx.len() > 3 {
        let m = idx.len();
        let mut clipped = false;
        for i in 0..m {
            let (ip, ic, inx) = (idx[(i + m - 1) % m], idx[i], idx[(i + 1) % m]);
            let (a, b, c) = (vertices[ip], vertices[ic], vertices[inx]);
            if b.sub(a).cross(c.sub(b)) <= 1e-14 {
                continue; // reflex or degenerate corner
            }
            let mut ear = true;
            for &j in &idx {
                if j == ip || j == ic || j == inx {
                    continue;
                }
                if point_in_tri(vertices[j], a, b, c) {
                    ear = false;
                    break;
                }
            }
            if ear {
                tris.push([a, b, c]);
                idx.remove(i);
                clipped = true;
                break;
            }
        }
        if !clipped {
            guard += 1;
            if guard > 2 {
                return None;
            }
        }
    }
    tris.push([vertices[idx[0]], vertices[idx[1]], vertices[idx[2]]]);
    Some(tris)
}

fn point_in_tri(p: Point, a: Point, b: Point, c: Point) -> bool {
    let d1 = b.sub(a).cross(p.sub(a));
    let d2 = c.sub(b).cross(p.sub(b));
    let d3 = a.sub(c).cross(p.sub(c));
    d1 >= -1e-14 && d2 >= -1e-14 && d3 >= -1e-14
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::SlitChain;

    fn d1_square() -> Domain {
        Domain::polygon(
            vec![
                Point::new(-1.0, -1.0),
                Point::new(1.0, -1.0),
                Point::new(1.0, 1.0),
                Point::new(-1.0, 1.0),
            ],
            vec![SlitChain::new(vec![Point::new(-1.0, 0.0), Point::ORIGIN]).unwrap()],
        )
        .unwrap()
    }

    /// I₁ of the side-2 square: (2/3)(√2 + ln(1+√2)); the x-part of the
    /// Cartesian integrand (r+x)/2 vanishes by symmetry.
    fn d1_moment_exact() -> f64 {
        let s = 2f64.sqrt();
        (2.0 / 3.0) * (s + (1.0 + s).ln())
    }

    /// Boundary moment of the slit square: 2(√2 + ln(1+√2)); the slit lies on
    /// the excluded ray and contributes zero.
    fn d1_boundary_exact() -> f64 {
        let s = 2f64.sqrt();
        2.0 * (s + (1.0 + s).ln())
    }

    #[test]
    fn half_disc_pw_moment() {
        // α = 1 half-disc radius ρ: ∫₀^ρ r³ dr ∫₀^π sin²θ dθ = πρ⁴/8
        for rho in [0.5, 1.0, 2.0] {
            let d = Domain::circular_sector(rho, PI).unwrap();
            // canonical PW frame: rotate the symmetric sector so it spans (0, π)
            let posed = d.to_wedge_frame(&crate::geometry::Pose::new(Point::ORIGIN, -PI / 2.0));
            let m = moment_pw(&posed, 1.0).unwrap();
            let expect = PI * rho.powi(4) / 8.0;
            assert!(
                ((m.value - expect) / expect).abs() < 1e-12,
                "ρ={rho}: {} vs {expect}",
                m.value
            );
            assert_eq!(m.method, QuadMethod::ClosedForm);
        }
    }

    #[test]
    fn pw_sector_closed_form_general_alpha() {
        // sector aperture π/α radius ρ: 𝓘_α = ρ^{2α+2}·π/(2α(2α+2))
        for alpha in [1.0, 1.5, 2.0, 3.0] {
            let rho = 1.3;
            let ap = PI / alpha;
            let d = Domain::circular_sector(rho, ap).unwrap();
            let posed = d.to_wedge_frame(&crate::geometry::Pose::new(Point::ORIGIN, -0.5 * ap));
            let m = moment_pw(&posed, alpha).unwrap();
            let expect = rho.powf(2.0 * alpha + 2.0) * PI / (2.0 * alpha * (2.0 * alpha + 2.0));
            assert!(((m.value - expect) / expect).abs() < 1e-12, "α={alpha}");
        }
    }

    #[test]
    fn reflex_sector_closed_form() {
        // sector aperture 2π/β radius ρ: I_β = πρ^{β+2}/(β(β+2))
        for beta in [1.0, 1.25, 1.5, 1.75, 2.0] {
            for rho in [0.5, 1.0, 2.0] {
                let d = Domain::circular_sector(rho, 2.0 * PI / beta).unwrap();
                let m = moment_reflex(&d, beta).unwrap();
                let expect = PI * rho.powf(beta + 2.0) / (beta * (beta + 2.0));
                assert!(
                    ((m.value - expect) / expect).abs() < 1e-12,
                    "β={beta} ρ={rho}: {} vs {expect}",
                    m.value
                );
            }
        }
    }

    #[test]
    fn cut_disc_moment_is_pi_thirds() {
        let d = Domain::cut_disc(1.0).unwrap();
        let m = moment_reflex(&d, 1.0).unwrap();
        assert!((m.value - PI / 3.0).abs() < 1e-13, "got {}", m.value);
    }

    #[test]
    fn d1_moment_three_ways() {
        let d = d1_square();
        let family = WedgeFamily::reflex(1.0).unwrap();
        let exact = d1_moment_exact();

        let polar = moment_polar(&d, &family).unwrap();
        assert!(
            ((polar.value - exact) / exact).abs() < 1e-10,
            "polar {} vs exact {exact}",
            polar.value
        );

        let tri = moment_triangle(&d, &family).unwrap();
        assert!(
            ((tri.value - exact) / exact).abs() < 1e-8,
            "triangle {} vs exact {exact}",
            tri.value
        );

        let mc = moment_mc_oracle(&d, &family, 400_000, 7).unwrap();
        assert!(
            (mc.value - exact).abs() <= mc.abs_err.max(1e-3),
            "mc {} ± {} vs exact {exact}",
            mc.value,
            mc.abs_err
        );
    }

    #[test]
    fn mc_is_deterministic_and_mode_independent() {
        let d = d1_square();
        let family = WedgeFamily::reflex(1.0).unwrap();
        let a = moment_mc_with_mode(&d, &family, 50_000, 42, ExecMode::Sequential).unwrap();
        let b = moment_mc_with_mode(&d, &family, 50_000, 42, ExecMode::Parallel).unwrap();
        assert_eq!(a.value.to_bits(), b.value.to_bits());
        assert_eq!(a.abs_err.to_bits(), b.abs_err.to_bits());
        let c = moment_mc_oracle(&d, &family, 50_000, 43).unwrap();
        assert_ne!(a.value.to_bits(), c.value.to_bits());
    }

    #[test]
    fn mc_rejects_tiny_n() {
        let d = d1_square();
        let family = WedgeFamily::reflex(1.0).unwrap();
        assert!(moment_mc_oracle(&d, &family, 0, 1).is_err());
        assert!(moment_mc_oracle(&d, &family, 9_999, 1).is_err());
    }

    #[test]
    fn slit_invisibility() {
        // zero-area slits do not change area moments
        let plain = Domain::polygon(
            vec![
                Point::new(0.1, -0.4),
                Point::new(1.2, -0.5),
                Point::new(1.4, 0.6),
                Point::new(0.2, 0.5),
            ],
            vec![],
        )
        .unwrap();
        let slit = plain
            .clone()
            .with_slits(vec![SlitChain::new(vec![Point::new(0.5, 0.0), Point::new(1.0, 0.1)]).unwrap()])
            .unwrap();
        let family = WedgeFamily::reflex(1.5).unwrap();
        let a = moment_polar(&plain, &family).unwrap();
        let b = moment_polar(&slit, &family).unwrap();
        assert!(((a.value - b.value) / a.value).abs() < 1e-10);
    }

    #[test]
    fn scaling_covariance() {
        let d = d1_square();
        for (family, expo) in [
            (WedgeFamily::reflex(1.0).unwrap(), 3.0),
            (WedgeFamily::reflex(1.7).unwrap(), 3.7),
            (WedgeFamily::pw(2.0).unwrap(), 6.0),
        ] {
            let base = moment_polar(&d, &family).unwrap().value;
            for s in [0.5, 2.0, 3.0] {
                let scaled = moment_polar(&d.scaled(s), &family).unwrap().value;
                let rel = (scaled - s.powf(expo) * base).abs() / (s.powf(expo) * base);
                assert!(rel < 1e-9, "s={s}: rel={rel:e}");
            }
        }
    }

    #[test]
    fn boundary_moment_sector_closed_form() {
        // arc contributes ρ^{β+1}·π/β, the straight edges vanish
        for beta in [1.0, 1.5, 2.0] {
            for rho in [0.5, 1.0, 2.0] {
                let d = Domain::circular_sector(rho, 2.0 * PI / beta).unwrap();
                let m = boundary_moment(&d, beta).unwrap();
                let expect = PI * rho.powf(beta + 1.0) / beta;
                assert!(
                    ((m.value - expect) / expect).abs() < 1e-9,
                    "β={beta} ρ={rho}: {} vs {expect}",
                    m.value
                );
            }
        }
    }

    #[test]
    fn boundary_moment_d1() {
        let d = d1_square();
        let m = boundary_moment(&d, 1.0).unwrap();
        let exact = d1_boundary_exact();
        assert!(
            ((m.value - exact) / exact).abs() < 1e-9,
            "{} vs exact {exact}",
            m.value
        );
        assert!((m.value - 4.5912).abs() < 1e-3);
    }

    #[test]
    fn boundary_moment_scales() {
        let d = d1_square();
        let beta = 1.4;
        let base = boundary_moment(&d, beta).unwrap().value;
        let scaled = boundary_moment(&d.scaled(2.0), beta).unwrap().value;
        let rel = (scaled - 2f64.powf(beta + 1.0) * base).abs() / scaled;
        assert!(rel < 1e-9);
    }

    #[test]
    fn moment_refuses_uncontained_domain() {
        let plain_square = Domain::polygon(
            vec![
                Point::new(-1.0, -1.0),
                Point::new(1.0, -1.0),
                Point::new(1.0, 1.0),
                Point::new(-1.0, 1.0),
            ],
            vec![],
        )
        .unwrap();
        match moment_reflex(&plain_square, 1.0) {
            Err(Error::Containment(rep)) => assert!(!rep.ok),
            other => panic!("expected containment refusal, got {other:?}"),
        }
    }

    #[test]
    fn sector_mc_agrees_with_closed_form() {
        let beta = 1.5;
        let d = Domain::circular_sector(1.0, 2.0 * PI / beta).unwrap();
        let family = WedgeFamily::reflex(beta).unwrap();
        let exact = moment_closed_form(&d, &family).unwrap().value;
        let mc = moment_mc_oracle(&d, &family, 600_000, 11).unwrap();
        assert!(
            (mc.value - exact).abs() <= mc.abs_err.max(2e-3),
            "mc {} ± {} vs {exact}",
            mc.value,
            mc.abs_err
        );
    }
}
