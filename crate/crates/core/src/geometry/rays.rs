//! Ray–shape intersection machinery. Everything polar (moments, star-shape
//! tests, slit coverage) reduces to: given a direction θ, which radial
//! intervals of the ray from the frame origin lie inside the shape? Crossing
//! radii are computed analytically per shape and the inside/outside parity is
//! decided by midpoint membership tests, which is robust against grazing hits.

use super::{normalize_angle, Domain, Point, Shape, GEOM_TOL};
use crate::{Error, Result};
use std::f64::consts::PI;

/// Sorted positive radii at which the ray from the origin in direction θ
/// crosses the shape boundary.
pub(crate) fn shape_ray_crossings(shape: &Shape, theta: f64) -> Vec<f64> {
    let d = Point::dir(theta);
    let mut rs = Vec::new();
    match shape {
        Shape::Disc { center, radius } => circle_ray_roots(d, *center, *radius, &mut rs),
        Shape::CircularSector { vertex, bisector, radius, aperture } => {
            let lo = bisector - 0.5 * aperture;
            let hi = bisector + 0.5 * aperture;
            arc_ray_roots(d, *vertex, *radius, lo, hi, &mut rs);
            segment_ray_root(d, *vertex, vertex.add(Point::dir(lo).scale(*radius)), &mut rs);
            segment_ray_root(d, *vertex, vertex.add(Point::dir(hi).scale(*radius)), &mut rs);
        }
        Shape::AnnularSector { center, bisector, rho1, rho2, aperture } => {
            let lo = bisector - 0.5 * aperture;
            let hi = bisector + 0.5 * aperture;
            arc_ray_roots(d, *center, *rho2, lo, hi, &mut rs);
            if *rho1 > 0.0 {
                arc_ray_roots(d, *center, *rho1, lo, hi, &mut rs);
            }
            for t in [lo, hi] {
                segment_ray_root(
                    d,
                    center.add(Point::dir(t).scale(*rho1)),
                    center.add(Point::dir(t).scale(*rho2)),
                    &mut rs,
                );
            }
        }
        Shape::Polygon { vertices } => {
            let n = vertices.len();
            for i in 0..n {
                segment_ray_root(d, vertices[i], vertices[(i + 1) % n], &mut rs);
            }
        }
    }
    rs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    rs.dedup_by(|a, b| (*a - *b).abs() <= 1e-12 * (1.0 + b.abs()));
    rs
}

fn circle_ray_roots(d: Point, center: Point, radius: f64, out: &mut Vec<f64>) {
    // |s·d − c|² = R²,  |d| = 1
    let b = d.dot(center);
    let c = center.dot(center) - radius * radius;
    let disc = b * b - c;
    if disc <= 0.0 {
        return;
    }
    let sq = disc.sqrt();
    for s in [b - sq, b + sq] {
        if s > 1e-14 {
            out.push(s);
        }
    }
}

fn arc_ray_roots(d: Point, center: Point, radius: f64, t_lo: f64, t_hi: f64, out: &mut Vec<f64>) {
    let mut roots = Vec::new();
    circle_ray_roots(d, center, radius, &mut roots);
    for s in roots {
        let p = d.scale(s).sub(center);
        if angle_in_range(p.angle(), t_lo, t_hi, 1e-12) {
            out.push(s);
        }
    }
}

/// Is angle φ within [lo, hi] (an interval of width ≤ 2π, possibly reaching
/// outside (−π, π])?
pub(crate) fn angle_in_range(phi: f64, lo: f64, hi: f64, tol: f64) -> bool {
    let phi = normalize_angle(phi);
    for shift in [-2.0 * PI, 0.0, 2.0 * PI] {
        let p = phi + shift;
        if p >= lo - tol && p <= hi + tol {
            return true;
        }
    }
    false
}

fn segment_ray_root(d: Point, a: Point, b: Point, out: &mut Vec<f64>) {
    // a + t (b − a) = s d
    let e = b.sub(a);
    let denom = d.cross(e);
    if denom.abs() <= 1e-15 * (1.0 + e.norm()) {
        return; // parallel or collinear: grazing contact, parity handled by midpoint tests
    }
    let t = d.cross(a) / -denom;
    if !(-1e-12..=1.0 + 1e-12).contains(&t) {
        return;
    }
    let p = a.add(e.scale(t));
    let s = p.dot(d);
    if s > 1e-14 {
        out.push(s);
    }
}

/// Strict interior test (boundary points may land on either side).
pub(crate) fn point_inside_shape(shape: &Shape, p: Point) -> bool {
    match shape {
        Shape::Disc { center, radius } => p.dist(*center) < *radius,
        Shape::CircularSector { vertex, bisector, radius, aperture } => {
            let q = p.sub(*vertex);
            let r = q.norm();
            r > 0.0
                && r < *radius
                && angle_in_range(q.angle(), bisector - 0.5 * aperture, bisector + 0.5 * aperture, 0.0)
        }
        Shape::AnnularSector { center, bisector, rho1, rho2, aperture } => {
            let q = p.sub(*center);
            let r = q.norm();
            r > *rho1
                && r < *rho2
                && angle_in_range(q.angle(), bisector - 0.5 * aperture, bisector + 0.5 * aperture, 0.0)
        }
        Shape::Polygon { vertices } => {
            // even-odd crossing number
            let n = vertices.len();
            let mut inside = false;
            let mut j = n - 1;
            for i in 0..n {
                let (vi, vj) = (vertices[i], vertices[j]);
                if ((vi.y > p.y) != (vj.y > p.y))
                    && (p.x < (vj.x - vi.x) * (p.y - vi.y) / (vj.y - vi.y) + vi.x)
                {
                    inside = !inside;
                }
                j = i;
            }
            inside
        }
    }
}

/// Distance from p to the shape boundary (not the slits).
pub(crate) fn distance_to_shape_boundary(shape: &Shape, p: Point) -> f64 {
    match shape {
        Shape::Disc { center, radius } => (p.dist(*center) - radius).abs(),
        Shape::Polygon { vertices } => {
            let n = vertices.len();
            let mut best = f64::INFINITY;
            for i in 0..n {
                best = best.min(dist_point_segment(p, vertices[i], vertices[(i + 1) % n]));
            }
            best
        }
        _ => {
            // sectors: distance via boundary pieces of a canonical curve
            let mut best = f64::INFINITY;
            match shape {
                Shape::CircularSector { vertex, bisector, radius, aperture } => {
                    let lo = bisector - 0.5 * aperture;
                    let hi = bisector + 0.5 * aperture;
                    let q = p.sub(*vertex);
                    if angle_in_range(q.angle(), lo, hi, 0.0) {
                        best = best.min((q.norm() - radius).abs());
                    }
                    for t in [lo, hi] {
                        best = best.min(dist_point_segment(
                            p,
                            *vertex,
                            vertex.add(Point::dir(t).scale(*radius)),
                        ));
                    }
                    best = best.min(p.dist(vertex.add(Point::dir(lo).scale(*radius))));
                    best = best.min(p.dist(vertex.add(Point::dir(hi).scale(*radius))));
                }
                Shape::AnnularSector { center, bisector, rho1, rho2, aperture } => {
                    let lo = bisector - 0.5 * aperture;
                    let hi = bisector + 0.5 * aperture;
                    let q = p.sub(*center);
                    if angle_in_range(q.angle(), lo, hi, 0.0) {
                        best = best.min((q.norm() - rho2).abs());
                        best = best.min((q.norm() - rho1).abs());
                    }
                    for t in [lo, hi] {
                        best = best.min(dist_point_segment(
                            p,
                            center.add(Point::dir(t).scale(*rho1)),
                            center.add(Point::dir(t).scale(*rho2)),
                        ));
                    }
                }
                _ => unreachable!(),
            }
            best
        }
    }
}

pub(crate) fn dist_point_segment(p: Point, a: Point, b: Point) -> f64 {
    let e = b.sub(a);
    let len2 = e.dot(e);
    if len2 == 0.0 {
        return p.dist(a);
    }
    let t = (p.sub(a).dot(e) / len2).clamp(0.0, 1.0);
    p.dist(a.add(e.scale(t)))
}

/// Radial intervals of the ray from the origin in direction θ that lie inside
/// the shape. Intervals are disjoint and sorted.
pub(crate) fn ray_intervals(shape: &Shape, theta: f64) -> Vec<(f64, f64)> {
    let crossings = shape_ray_crossings(shape, theta);
    if crossings.is_empty() {
        return Vec::new();
    }
    let d = Point::dir(theta);
    let mut cuts = Vec::with_capacity(crossings.len() + 1);
    cuts.push(0.0);
    cuts.extend(crossings);
    let mut intervals: Vec<(f64, f64)> = Vec::new();
    for w in cuts.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b - a <= 1e-13 * (1.0 + b) {
            continue;
        }
        let mid = 0.5 * (a + b);
        if point_inside_shape(shape, d.scale(mid)) {
            match intervals.last_mut() {
                Some(last) if (last.1 - a).abs() <= 1e-12 * (1.0 + a) => last.1 = b,
                _ => intervals.push((a, b)),
            }
        }
    }
    intervals
}

/// Radial extent R(θ) from the origin for star-shaped-from-origin domains.
///
/// Returns 0 when the ray leaves the domain immediately (the origin on the
/// boundary, pointing outside the angular support); errors when the ray meets
/// the interior in a detached interval or more than once, i.e. the domain is
/// not star-shaped with respect to the origin.
pub fn ray_cast(domain: &Domain, theta: f64) -> Result<f64> {
    let scale = domain.diameter();
    let intervals = ray_intervals(domain.shape(), theta);
    match intervals.len() {
        0 => Ok(0.0),
        1 => {
            let (a, b) = intervals[0];
            if a <= 1e-9 * scale {
                Ok(b)
            } else {
                Err(Error::Numerical(format!(
                    "domain is not star-shaped from the origin: ray θ={theta} enters at r={a}"
                )))
            }
        }
        _ => Err(Error::Numerical(format!(
            "domain is not star-shaped from the origin: ray θ={theta} crosses the interior {} times",
            intervals.len()
        ))),
    }
}

/// Star-shapedness certificate: 720 uniformly spaced rays, each of which must
/// meet the boundary at most once going outward. Conservative; quadrature
/// falls back to triangulation when this fails.
pub fn is_star_shaped(domain: &Domain) -> bool {
    let n = 720;
    for i in 0..n {
        let theta = -PI + 2.0 * PI * (i as f64 + 0.5) / n as f64;
        if ray_cast(domain, theta).is_err() {
            return false;
        }
    }
    true
}

/// Angles (in (−π, π]) at which the radial profile of the shape can have
/// kinks: polygon vertices, sector corners, circle tangency directions.
/// Quadrature in θ splits at these.
pub(crate) fn shape_event_angles(shape: &Shape) -> Vec<f64> {
    let mut angles = vec![-PI, 0.0, PI];
    let mut push_point = |p: Point, angles: &mut Vec<f64>| {
        if p.norm() > GEOM_TOL {
            angles.push(p.angle());
        }
    };
    match shape {
        Shape::Disc { center, radius } => {
            let d = center.norm();
            if d > *radius + GEOM_TOL {
                let delta = (radius / d).asin();
                let tc = center.angle();
                angles.push(normalize_angle(tc - delta));
                angles.push(normalize_angle(tc + delta));
            } else {
                // origin inside or on the circle: extremal-radius directions
                push_point(*center, &mut angles);
                push_point(center.scale(-1.0), &mut angles);
            }
        }
        Shape::CircularSector { vertex, bisector, radius, aperture } => {
            let lo = bisector - 0.5 * aperture;
            let hi = bisector + 0.5 * aperture;
            push_point(*vertex, &mut angles);
            for t in [lo, hi] {
                push_point(vertex.add(Point::dir(t).scale(*radius)), &mut angles);
            }
            tangency_angles(*vertex, *radius, &mut angles);
        }
        Shape::AnnularSector { center, bisector, rho1, rho2, aperture } => {
            let lo = bisector - 0.5 * aperture;
            let hi = bisector + 0.5 * aperture;
            for t in [lo, hi] {
                push_point(center.add(Point::dir(t).scale(*rho1)), &mut angles);
                push_point(center.add(Point::dir(t).scale(*rho2)), &mut angles);
            }
            tangency_angles(*center, *rho1, &mut angles);
            tangency_angles(*center, *rho2, &mut angles);
        }
        Shape::Polygon { vertices } => {
            for &v in vertices {
                push_point(v, &mut angles);
            }
        }
    }
    angles.iter_mut().for_each(|a| *a = normalize_angle(*a));
    angles.sort_by(|a, b| a.partial_cmp(b).unwrap());
    angles.dedup_by(|a, b| (*a - *b).abs() <= 1e-13);
    angles
}

fn tangency_angles(center: Point, radius: f64, angles: &mut Vec<f64>) {
    let d = center.norm();
    if d > radius + GEOM_TOL && radius > 0.0 {
        let delta = (radius / d).asin();
        let tc = center.angle();
        angles.push(normalize_angle(tc - delta));
        angles.push(normalize_angle(tc + delta));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{Domain, Point};
    use std::f64::consts::PI;

    #[test]
    fn unit_disc_ray_cast_is_one() {
        let d = Domain::disc(Point::ORIGIN, 1.0).unwrap();
        for theta in [-3.0, -1.0, 0.0, 0.5, 2.9] {
            assert!((ray_cast(&d, theta).unwrap() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn square_ray_cast() {
        let d = Domain::polygon(
            vec![
                Point::new(-1.0, -1.0),
                Point::new(1.0, -1.0),
                Point::new(1.0, 1.0),
                Point::new(-1.0, 1.0),
            ],
            vec![],
        )
        .unwrap();
        assert!((ray_cast(&d, 0.0).unwrap() - 1.0).abs() < 1e-12);
        assert!((ray_cast(&d, PI / 4.0).unwrap() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn diamond_vertex_distance() {
        // vertices on the axes at distance √2
        let s = 2f64.sqrt();
        let d = Domain::polygon(
            vec![Point::new(s, 0.0), Point::new(0.0, s), Point::new(-s, 0.0), Point::new(0.0, -s)],
            vec![],
        )
        .unwrap();
        assert!((ray_cast(&d, 0.0).unwrap() - s).abs() < 1e-12);
    }

    #[test]
    fn offset_disc_intervals() {
        // disc centered at (2, 0) radius 1: ray θ=0 inside on (1, 3)
        let d = Shape::Disc { center: Point::new(2.0, 0.0), radius: 1.0 };
        let iv = ray_intervals(&d, 0.0);
        assert_eq!(iv.len(), 1);
        assert!((iv[0].0 - 1.0).abs() < 1e-12 && (iv[0].1 - 3.0).abs() < 1e-12);
        assert!(ray_intervals(&d, PI / 2.0).is_empty());
    }

    #[test]
    fn star_shaped_classification() {
        let disc = Domain::disc(Point::ORIGIN, 1.0).unwrap();
        assert!(is_star_shaped(&disc));
        let offset = Domain::disc(Point::new(3.0, 0.0), 1.0).unwrap();
        assert!(!is_star_shaped(&offset));
    }

    #[test]
    fn annular_sector_not_star_shaped_from_origin() {
        let d = Domain::annular_sector(1.0, 2.0, PI).unwrap();
        assert!(!is_star_shaped(&d));
        let iv = ray_intervals(d.shape(), 0.3);
        assert_eq!(iv.len(), 1);
        assert!((iv[0].0 - 1.0).abs() < 1e-12 && (iv[0].1 - 2.0).abs() < 1e-12);
    }
}
