//! Machine verification of the theorems' hypothesis D ⊂ S_α / D ⊂ R_β.
//!
//! The domain must already be in the wedge frame. Touching the wedge boundary
//! is admissible (the equality-case sector has its straight edges on the
//! boundary rays); entering the open excluded set is not. For β = 1 the
//! excluded set is the single ray θ = π, which a slit along the ray can cover
//! — that is exactly the cut-membrane configuration — so the interior portion
//! of that ray must be covered by declared collinear slits. For β > 1 (and for
//! every S_α) the excluded set has positive measure and no slit can fix a
//! violation.

use super::rays::{angle_in_range, distance_to_shape_boundary, point_inside_shape, ray_intervals};
use super::{normalize_angle, Domain, Point, Shape, WedgeFamily};
use std::f64::consts::PI;

const ANG_TOL: f64 = 1e-9;

/// Result of a containment check; `violation` is a witness point in or near
/// the excluded set when `ok` is false.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContainmentReport {
    pub ok: bool,
    pub violation: Option<Point>,
}

impl ContainmentReport {
    fn ok() -> Self {
        ContainmentReport { ok: true, violation: None }
    }
    fn bad(p: Point) -> Self {
        ContainmentReport { ok: false, violation: Some(p) }
    }
}

/// Checks that the (frame-resident) domain lies in the wedge.
pub fn contains_in_wedge(domain: &Domain, wedge: &WedgeFamily) -> ContainmentReport {
    let cut_plane = matches!(wedge, WedgeFamily::Reflex { beta } if (*beta - 1.0).abs() < 1e-12);
    if cut_plane {
        return check_cut_plane(domain);
    }
    match domain.shape() {
        Shape::Polygon { vertices } => check_polygon(domain, vertices, wedge),
        Shape::Disc { center, radius } => check_disc(*center, *radius, wedge),
        Shape::CircularSector { vertex, bisector, aperture, .. } => {
            if vertex.norm() <= ANG_TOL {
                check_angular_span(bisector - 0.5 * aperture, bisector + 0.5 * aperture, wedge)
            } else {
                polygonalized_check(domain, wedge)
            }
        }
        Shape::AnnularSector { center, bisector, aperture, rho1, .. } => {
            if center.norm() <= ANG_TOL {
                let rep = check_angular_span(bisector - 0.5 * aperture, bisector + 0.5 * aperture, wedge);
                // an annular sector of full aperture 2π closes around the
                // origin; that is only admissible in the cut plane
                if rep.ok && *aperture >= 2.0 * PI - ANG_TOL && *rho1 <= ANG_TOL {
                    return ContainmentReport::bad(Point::dir(excluded_direction(wedge)).scale(*rho1 + ANG_TOL));
                }
                rep
            } else {
                polygonalized_check(domain, wedge)
            }
        }
    }
}

fn excluded_direction(wedge: &WedgeFamily) -> f64 {
    match wedge {
        WedgeFamily::Reflex { .. } => PI,
        WedgeFamily::Pw { .. } => -PI / 2.0,
    }
}

/// Angular span [lo_s, hi_s] (possibly unwrapped beyond ±π) within the wedge
/// interval, modulo 2π shifts.
fn check_angular_span(lo_s: f64, hi_s: f64, wedge: &WedgeFamily) -> ContainmentReport {
    let (lo, hi) = wedge.angular_interval();
    for shift in [-2.0 * PI, 0.0, 2.0 * PI] {
        if lo_s + shift >= lo - ANG_TOL && hi_s + shift <= hi + ANG_TOL {
            return ContainmentReport::ok();
        }
    }
    // witness: unit point at the worse extreme
    let wit = if hi_s - hi > lo - lo_s { hi_s } else { lo_s };
    ContainmentReport::bad(Point::dir(normalize_angle(wit)))
}

fn check_disc(center: Point, radius: f64, wedge: &WedgeFamily) -> ContainmentReport {
    let d = center.norm();
    if d >= radius - ANG_TOL {
        let delta = (radius / d).min(1.0).asin();
        let tc = center.angle();
        let rep = check_angular_span(tc - delta, tc + delta, wedge);
        if rep.ok {
            return rep;
        }
        // tangency-point witness
        let tang = (d * d - radius * radius).max(0.0).sqrt();
        let side = {
            let (lo, hi) = wedge.angular_interval();
            if tc + delta > hi { tc + delta } else { lo.min(tc - delta) }
        };
        return ContainmentReport::bad(Point::dir(normalize_angle(side)).scale(tang.max(ANG_TOL)));
    }
    // origin strictly inside the disc: a neighbourhood of the origin meets the
    // (positive-measure) excluded sector
    ContainmentReport::bad(Point::dir(excluded_direction(wedge)).scale(0.5 * (radius - d)))
}

fn check_polygon(domain: &Domain, vertices: &[Point], wedge: &WedgeFamily) -> ContainmentReport {
    let (lo, hi) = wedge.angular_interval();
    let scale = domain.diameter().max(1e-9);
    let tol_len = 1e-9 * scale;

    for &v in vertices {
        if v.norm() <= tol_len {
            continue; // the wedge vertex itself is admissible closure
        }
        if !angle_in_range(v.angle(), lo, hi, ANG_TOL) {
            return ContainmentReport::bad(v);
        }
    }

    // strict transversal crossings of either boundary ray at positive radius
    for ray_angle in [lo, hi] {
        let d = Point::dir(ray_angle);
        let n = vertices.len();
        for i in 0..n {
            let p = vertices[i];
            let q = vertices[(i + 1) % n];
            let cp = d.cross(p);
            let cq = d.cross(q);
            if cp > tol_len && cq < -tol_len || cp < -tol_len && cq > tol_len {
                let t = cp / (cp - cq);
                let x = p.add(q.sub(p).scale(t));
                let s = x.dot(d);
                if s > tol_len {
                    return ContainmentReport::bad(x);
                }
            }
        }
    }

    // origin strictly interior: excluded directions start immediately
    if point_inside_shape(domain.shape(), Point::ORIGIN)
        && distance_to_shape_boundary(domain.shape(), Point::ORIGIN) > tol_len
    {
        return ContainmentReport::bad(Point::dir(excluded_direction(wedge)).scale(2.0 * tol_len));
    }

    ContainmentReport::ok()
}

/// β = 1 cut plane: every direction except the ray θ = π is admissible, so the
/// only requirement is that the interior part of that ray be covered by slits
/// declared along it.
fn check_cut_plane(domain: &Domain) -> ContainmentReport {
    let scale = domain.diameter().max(1e-9);
    let tol = 1e-9 * scale;

    // interior intervals of the ray θ = π, as distances t from the origin
    let mut needed: Vec<(f64, f64)> = Vec::new();
    for (a, b) in ray_intervals(domain.shape(), PI) {
        // trim portions that merely run along the boundary
        let probe = |t: f64| {
            let p = Point::new(-t, 0.0);
            point_inside_shape(domain.shape(), p)
                && distance_to_shape_boundary(domain.shape(), p) > tol
        };
        // sample check: the interval is interior unless it hugs the boundary
        let mid = 0.5 * (a + b);
        if probe(mid) || probe(a + 0.25 * (b - a)) || probe(a + 0.75 * (b - a)) {
            needed.push((a, b));
        }
    }
    if needed.is_empty() {
        return ContainmentReport::ok();
    }

    // covering slit intervals: slit segments collinear with the negative x-axis
    let mut cover: Vec<(f64, f64)> = Vec::new();
    for chain in domain.slits() {
        for (p, q) in chain.segments() {
            if p.y.abs() <= tol && q.y.abs() <= tol && p.x <= tol && q.x <= tol {
                let (t0, t1) = (-p.x, -q.x);
                cover.push((t0.min(t1).max(0.0), t0.max(t1)));
            }
        }
    }
    cover.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for (a, b) in cover {
        match merged.last_mut() {
            Some(last) if a <= last.1 + tol => last.1 = last.1.max(b),
            _ => merged.push((a, b)),
        }
    }

    for (a, b) in needed {
        let (lo, hi) = (a + tol, b - tol);
        if hi <= lo {
            continue;
        }
        let covered = merged.iter().any(|&(c0, c1)| c0 <= lo + tol && c1 >= hi - tol);
        if !covered {
            // witness: midpoint of the first uncovered stretch
            let mut t = lo;
            for &(c0, c1) in &merged {
                if c0 > t + tol {
                    break;
                }
                t = t.max(c1);
            }
            let wit_t = 0.5 * (t + hi.max(t + tol));
            return ContainmentReport::bad(Point::new(-wit_t, 0.0));
        }
    }
    ContainmentReport::ok()
}

/// Non-canonical curved shapes: inscribed-polygon check (documented
/// approximation, resolution 720 arc points).
fn polygonalized_check(domain: &Domain, wedge: &WedgeFamily) -> ContainmentReport {
    match domain.polygonalize(720) {
        Ok(poly) => match poly.shape() {
            Shape::Polygon { vertices } => check_polygon(&poly, vertices, wedge),
            _ => unreachable!(),
        },
        Err(_) => ContainmentReport::bad(Point::ORIGIN),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Domain, SlitChain};

    fn square_with(slits: Vec<SlitChain>) -> Domain {
        Domain::polygon(
            vec![
                Point::new(-1.0, -1.0),
                Point::new(1.0, -1.0),
                Point::new(1.0, 1.0),
                Point::new(-1.0, 1.0),
            ],
            slits,
        )
        .unwrap()
    }

    #[test]
    fn plain_disc_fails_cut_plane() {
        let d = Domain::disc(Point::ORIGIN, 1.0).unwrap();
        let rep = contains_in_wedge(&d, &WedgeFamily::reflex(1.0).unwrap());
        assert!(!rep.ok);
        let w = rep.violation.unwrap();
        assert!(w.x < 0.0 && w.y.abs() < 1e-9, "witness ({}, {})", w.x, w.y);
    }

    #[test]
    fn cut_disc_passes_cut_plane() {
        let d = Domain::cut_disc(1.0).unwrap();
        assert!(contains_in_wedge(&d, &WedgeFamily::reflex(1.0).unwrap()).ok);
    }

    #[test]
    fn slit_square_passes_cut_plane() {
        let d = square_with(vec![SlitChain::new(vec![Point::new(-1.0, 0.0), Point::ORIGIN]).unwrap()]);
        assert!(contains_in_wedge(&d, &WedgeFamily::reflex(1.0).unwrap()).ok);
        // and without the slit it fails
        let d = square_with(vec![]);
        assert!(!contains_in_wedge(&d, &WedgeFamily::reflex(1.0).unwrap()).ok);
    }

    #[test]
    fn partial_slit_fails() {
        // slit stops short of the boundary: the stretch [-1, -0.5] stays uncut
        let d = square_with(vec![SlitChain::new(vec![Point::new(-0.5, 0.0), Point::ORIGIN]).unwrap()]);
        assert!(!contains_in_wedge(&d, &WedgeFamily::reflex(1.0).unwrap()).ok);
    }

    #[test]
    fn equality_sector_tolerances() {
        for beta in [1.25, 1.5, 2.0] {
            let wedge = WedgeFamily::reflex(beta).unwrap();
            let d = Domain::circular_sector(1.0, 2.0 * PI / beta).unwrap();
            assert!(contains_in_wedge(&d, &wedge).ok, "β={beta}");
            let wide = Domain::circular_sector(1.0, 2.0 * PI / beta + 1e-6).unwrap();
            assert!(!contains_in_wedge(&wide, &wedge).ok, "β={beta} widened");
        }
    }

    #[test]
    fn pw_polygon_in_upper_halfplane() {
        let wedge = WedgeFamily::pw(1.0).unwrap();
        let d = Domain::polygon(
            vec![Point::new(0.2, 0.1), Point::new(1.0, 0.5), Point::new(0.4, 1.0)],
            vec![],
        )
        .unwrap();
        assert!(contains_in_wedge(&d, &wedge).ok);
        let below = Domain::polygon(
            vec![Point::new(0.2, -0.1), Point::new(1.0, 0.5), Point::new(0.4, 1.0)],
            vec![],
        )
        .unwrap();
        assert!(!contains_in_wedge(&below, &wedge).ok);
    }

    #[test]
    fn reflex_beta2_halfplane() {
        let wedge = WedgeFamily::reflex(2.0).unwrap();
        let d = Domain::disc(Point::new(1.0, 0.0), 1.0).unwrap();
        // tangent to the y-axis from the right: admissible (touching)
        assert!(contains_in_wedge(&d, &wedge).ok);
        let d = Domain::disc(Point::new(0.9, 0.0), 1.0).unwrap();
        assert!(!contains_in_wedge(&d, &wedge).ok);
    }

    #[test]
    fn fan_polygon_with_origin_vertex() {
        let wedge = WedgeFamily::reflex(1.5).unwrap();
        let d = Domain::polygon(
            vec![
                Point::ORIGIN,
                Point::new(1.0, -0.8),
                Point::new(1.2, 0.0),
                Point::new(1.0, 0.8),
            ],
            vec![],
        )
        .unwrap();
        assert!(contains_in_wedge(&d, &wedge).ok);
    }

    #[test]
    fn polygon_dipping_into_excluded_sector() {
        let wedge = WedgeFamily::reflex(2.0).unwrap();
        // triangle poking through the y-axis
        let d = Domain::polygon(
            vec![Point::new(-0.2, 0.5), Point::new(1.0, 0.2), Point::new(1.0, 0.8)],
            vec![],
        )
        .unwrap();
        let rep = contains_in_wedge(&d, &wedge);
        assert!(!rep.ok);
    }
}
