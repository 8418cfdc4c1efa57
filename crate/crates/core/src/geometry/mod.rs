//! Shape and pose model for membranes: discs, circular/annular sectors and
//! simple polygons, optional slit chains (zero-area cuts carrying a Dirichlet
//! condition from both sides), and the pose that places a domain in a wedge
//! frame.
//!
//! Frame conventions, fixed once and used everywhere:
//! * the wedge vertex sits at the frame origin;
//! * a reflex wedge `R_β` occupies θ ∈ (−π/β, π/β) (bisector along +x);
//! * a wedge `S_α` occupies θ ∈ (0, π/α) (lower edge along +x);
//! * `to_wedge_frame` maps world point p to R(−rotation)·(p − origin), so a
//!   pose rotation of π/2 sends the world point (1, 0) to (0, −1) in frame.

mod containment;
mod rays;

pub use containment::{contains_in_wedge, ContainmentReport};
pub use rays::{is_star_shaped, ray_cast};

pub(crate) use rays::{distance_to_shape_boundary, point_inside_shape, ray_intervals, shape_event_angles};

use crate::{Error, Result};
use std::f64::consts::PI;

pub const GEOM_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const ORIGIN: Point = Point { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Point {
        Point { x, y }
    }

    pub fn add(self, o: Point) -> Point {
        Point::new(self.x + o.x, self.y + o.y)
    }

    pub fn sub(self, o: Point) -> Point {
        Point::new(self.x - o.x, self.y - o.y)
    }

    pub fn scale(self, s: f64) -> Point {
        Point::new(s * self.x, s * self.y)
    }

    pub fn dot(self, o: Point) -> f64 {
        self.x * o.x + self.y * o.y
    }

    /// z-component of the cross product self × o.
    pub fn cross(self, o: Point) -> f64 {
        self.x * o.y - self.y * o.x
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn dist(self, o: Point) -> f64 {
        self.sub(o).norm()
    }

    /// Polar angle in (−π, π].
    pub fn angle(self) -> f64 {
        self.y.atan2(self.x)
    }

    pub fn rotate(self, theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    pub fn dir(theta: f64) -> Point {
        let (s, c) = theta.sin_cos();
        Point::new(c, s)
    }
}

/// Placement of the wedge relative to world coordinates: the wedge vertex sits
/// at `origin` and the wedge frame is rotated by `rotation` (normalized to
/// (−π, π]).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Pose {
    origin: Point,
    rotation: f64,
}

impl Pose {
    pub fn new(origin: Point, rotation: f64) -> Pose {
        Pose { origin, rotation: normalize_angle(rotation) }
    }

    pub fn identity() -> Pose {
        Pose { origin: Point::ORIGIN, rotation: 0.0 }
    }

    pub fn origin(&self) -> Point {
        self.origin
    }

    pub fn rotation(&self) -> f64 {
        self.rotation
    }

    /// World → wedge frame.
    pub fn to_frame(&self, p: Point) -> Point {
        p.sub(self.origin).rotate(-self.rotation)
    }

    /// Wedge frame → world.
    pub fn from_frame(&self, p: Point) -> Point {
        p.rotate(self.rotation).add(self.origin)
    }
}

/// Normalizes an angle to (−π, π].
pub fn normalize_angle(theta: f64) -> f64 {
    let mut t = theta.rem_euclid(2.0 * PI);
    if t > PI {
        t -= 2.0 * PI;
    }
    if t == -PI {
        t = PI;
    }
    t
}

/// The containing family: a wedge S_α of aperture π/α ≤ π, or a reflex angle
/// R_β of aperture 2π/β ∈ [π, 2π] (β = 1 is the plane cut along the negative
/// x-axis, β = 2 the half-plane x > 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum WedgeFamily {
    Pw { alpha: f64 },
    Reflex { beta: f64 },
}

impl WedgeFamily {
    pub fn pw(alpha: f64) -> Result<Self> {
        if !(alpha >= 1.0 && alpha.is_finite()) {
            return Err(Error::InvalidInput(format!("wedge parameter must satisfy α ≥ 1, got {alpha}")));
        }
        Ok(WedgeFamily::Pw { alpha })
    }

    pub fn reflex(beta: f64) -> Result<Self> {
        if !(1.0..=2.0).contains(&beta) {
            return Err(Error::InvalidInput(format!("reflex parameter must satisfy 1 ≤ β ≤ 2, got {beta}")));
        }
        Ok(WedgeFamily::Reflex { beta })
    }

    pub fn param(&self) -> f64 {
        match *self {
            WedgeFamily::Pw { alpha } => alpha,
            WedgeFamily::Reflex { beta } => beta,
        }
    }

    /// Admissible angular interval (lo, hi) in the wedge frame.
    pub fn angular_interval(&self) -> (f64, f64) {
        match *self {
            WedgeFamily::Pw { alpha } => (0.0, PI / alpha),
            WedgeFamily::Reflex { beta } => (-PI / beta, PI / beta),
        }
    }
}

/// A slit: an open polyline of positive length and zero area along which the
/// membrane is cut (Dirichlet condition from both sides).
#[derive(Debug, Clone, PartialEq)]
pub struct SlitChain {
    points: Vec<Point>,
}

impl SlitChain {
    pub fn new(points: Vec<Point>) -> Result<SlitChain> {
        if points.len() < 2 {
            return Err(Error::Validation("slit chain needs at least 2 points".into()));
        }
        for w in points.windows(2) {
            if w[0].dist(w[1]) <= GEOM_TOL {
                return Err(Error::Validation("slit chain has a zero-length segment".into()));
            }
        }
        Ok(SlitChain { points })
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn segments(&self) -> impl Iterator<Item = (Point, Point)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Planar shapes. Sectors carry an explicit placement (vertex/center and
/// bisector direction) so they survive rigid motions; the canonical
/// construction puts the vertex at the origin with the bisector along +x.
#[derive(Debug, Clone, PartialEq)]
pub enum Shape {
    Disc { center: Point, radius: f64 },
    CircularSector { vertex: Point, bisector: f64, radius: f64, aperture: f64 },
    AnnularSector { center: Point, bisector: f64, rho1: f64, rho2: f64, aperture: f64 },
    Polygon { vertices: Vec<Point> },
}

/// A membrane: a shape, optional slit chains, and the pose placing it in a
/// wedge frame.
#[derive(Debug, Clone, PartialEq)]
pub struct Domain {
    shape: Shape,
    slits: Vec<SlitChain>,
    pose: Pose,
}

impl Domain {
    pub fn new(shape: Shape, slits: Vec<SlitChain>, pose: Pose) -> Result<Domain> {
        validate_shape(&shape)?;
        let shape = canonicalize(shape);
        let d = Domain { shape, slits, pose };
        d.validate_slits()?;
        Ok(d)
    }

    pub fn disc(center: Point, radius: f64) -> Result<Domain> {
        Domain::new(Shape::Disc { center, radius }, Vec::new(), Pose::identity())
    }

    /// Disc of radius ρ centred at the origin, cut along the negative x-axis.
    pub fn cut_disc(radius: f64) -> Result<Domain> {
        Domain::new(
            Shape::Disc { center: Point::ORIGIN, radius },
            vec![SlitChain::new(vec![Point::new(-radius, 0.0), Point::ORIGIN])?],
            Pose::identity(),
        )
    }

    /// Circular sector with vertex at the origin, bisector along +x.
    pub fn circular_sector(radius: f64, aperture: f64) -> Result<Domain> {
        Domain::new(
            Shape::CircularSector { vertex: Point::ORIGIN, bisector: 0.0, radius, aperture },
            Vec::new(),
            Pose::identity(),
        )
    }

    /// Annular sector centred at the origin, bisector along +x.
    pub fn annular_sector(rho1: f64, rho2: f64, aperture: f64) -> Result<Domain> {
        Domain::new(
            Shape::AnnularSector { center: Point::ORIGIN, bisector: 0.0, rho1, rho2, aperture },
            Vec::new(),
            Pose::identity(),
        )
    }

    pub fn polygon(vertices: Vec<Point>, slits: Vec<SlitChain>) -> Result<Domain> {
        Domain::new(Shape::Polygon { vertices }, slits, Pose::identity())
    }

    pub fn with_pose(mut self, pose: Pose) -> Domain {
        self.pose = pose;
        self
    }

    pub fn with_slits(mut self, slits: Vec<SlitChain>) -> Result<Domain> {
        self.slits = slits;
        self.validate_slits()?;
        Ok(self)
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn slits(&self) -> &[SlitChain] {
        &self.slits
    }

    pub fn pose(&self) -> &Pose {
        &self.pose
    }

    /// Expresses the domain in the wedge frame defined by `pose`: the wedge
    /// vertex moves to the origin and the frame axes align with the wedge.
    /// The returned domain carries the identity pose.
    pub fn to_wedge_frame(&self, pose: &Pose) -> Domain {
        let map = |p: Point| pose.to_frame(p);
        let shape = match &self.shape {
            Shape::Disc { center, radius } => Shape::Disc { center: map(*center), radius: *radius },
            Shape::CircularSector { vertex, bisector, radius, aperture } => Shape::CircularSector {
                vertex: map(*vertex),
                bisector: normalize_angle(bisector - pose.rotation()),
                radius: *radius,
                aperture: *aperture,
            },
            Shape::AnnularSector { center, bisector, rho1, rho2, aperture } => Shape::AnnularSector {
                center: map(*center),
                bisector: normalize_angle(bisector - pose.rotation()),
                rho1: *rho1,
                rho2: *rho2,
                aperture: *aperture,
            },
            Shape::Polygon { vertices } => {
                Shape::Polygon { vertices: vertices.iter().map(|&v| map(v)).collect() }
            }
        };
        let slits = self
            .slits
            .iter()
            .map(|c| SlitChain { points: c.points.iter().map(|&p| map(p)).collect() })
            .collect();
        Domain { shape, slits, pose: Pose::identity() }
    }

    /// Area of the shape; slits have zero area and do not contribute.
    pub fn area(&self) -> f64 {
        match &self.shape {
            Shape::Disc { radius, .. } => PI * radius * radius,
            Shape::CircularSector { radius, aperture, .. } => 0.5 * radius * radius * aperture,
            Shape::AnnularSector { rho1, rho2, aperture, .. } => {
                0.5 * (rho2 * rho2 - rho1 * rho1) * aperture
            }
            Shape::Polygon { vertices } => polygon_area(vertices),
        }
    }

    /// Uniform scaling about the frame origin (shape, slits and pose origin).
    pub fn scaled(&self, s: f64) -> Domain {
        let map = |p: Point| p.scale(s);
        let shape = match &self.shape {
            Shape::Disc { center, radius } => Shape::Disc { center: map(*center), radius: s * radius },
            Shape::CircularSector { vertex, bisector, radius, aperture } => Shape::CircularSector {
                vertex: map(*vertex),
                bisector: *bisector,
                radius: s * radius,
                aperture: *aperture,
            },
            Shape::AnnularSector { center, bisector, rho1, rho2, aperture } => Shape::AnnularSector {
                center: map(*center),
                bisector: *bisector,
                rho1: s * rho1,
                rho2: s * rho2,
                aperture: *aperture,
            },
            Shape::Polygon { vertices } => {
                Shape::Polygon { vertices: vertices.iter().map(|&v| map(v)).collect() }
            }
        };
        let slits = self
            .slits
            .iter()
            .map(|c| SlitChain { points: c.points.iter().map(|&p| map(p)).collect() })
            .collect();
        Domain { shape, slits, pose: Pose::new(self.pose.origin().scale(s), self.pose.rotation()) }
    }

    pub fn bounding_box(&self) -> (Point, Point) {
        match &self.shape {
            Shape::Disc { center, radius } => (
                Point::new(center.x - radius, center.y - radius),
                Point::new(center.x + radius, center.y + radius),
            ),
            Shape::Polygon { vertices } => bbox_of(vertices),
            _ => bbox_of(&self.sample_boundary(256)),
        }
    }

    pub fn diameter(&self) -> f64 {
        let (lo, hi) = self.bounding_box();
        hi.sub(lo).norm()
    }

    /// Points along the shape boundary (no slits), used for bounding boxes and
    /// polygonal fallbacks.
    pub(crate) fn sample_boundary(&self, n: usize) -> Vec<Point> {
        let mut pts = Vec::new();
        for piece in boundary_curve(self).pieces {
            if piece.slit_side.is_some() {
                continue;
            }
            for i in 0..n {
                pts.push(piece.point_at(i as f64 / n as f64));
            }
        }
        pts
    }

    /// Inscribed-polygon approximation (arc pieces sampled with `arc_n`
    /// points), carrying the slits over. Polygons are returned unchanged.
    pub fn polygonalize(&self, arc_n: usize) -> Result<Domain> {
        let verts = match &self.shape {
            Shape::Polygon { .. } => return Ok(self.clone()),
            Shape::Disc { center, radius } => (0..arc_n)
                .map(|i| {
                    let t = -PI + 2.0 * PI * i as f64 / arc_n as f64;
                    center.add(Point::dir(t).scale(*radius))
                })
                .collect::<Vec<_>>(),
            Shape::CircularSector { vertex, bisector, radius, aperture } => {
                let mut v = vec![*vertex];
                let lo = bisector - 0.5 * aperture;
                for i in 0..=arc_n {
                    let t = lo + aperture * i as f64 / arc_n as f64;
                    v.push(vertex.add(Point::dir(t).scale(*radius)));
                }
                v
            }
            Shape::AnnularSector { center, bisector, rho1, rho2, aperture } => {
                let lo = bisector - 0.5 * aperture;
                let mut v = Vec::new();
                for i in 0..=arc_n {
                    let t = lo + aperture * i as f64 / arc_n as f64;
                    v.push(center.add(Point::dir(t).scale(*rho2)));
                }
                for i in (0..=arc_n).rev() {
                    let t = lo + aperture * i as f64 / arc_n as f64;
                    v.push(center.add(Point::dir(t).scale(*rho1)));
                }
                v
            }
        };
        Domain::new(Shape::Polygon { vertices: verts }, self.slits.clone(), self.pose)
    }

    /// Area centroid of the shape.
    pub fn centroid(&self) -> Point {
        match &self.shape {
            Shape::Disc { center, .. } => *center,
            Shape::CircularSector { vertex, bisector, radius, aperture } => {
                // centroid at 4R sin(a/2) / (3a) along the bisector
                let d = 4.0 * radius * (0.5 * aperture).sin() / (3.0 * aperture);
                vertex.add(Point::dir(*bisector).scale(d))
            }
            Shape::AnnularSector { center, bisector, rho1, rho2, aperture } => {
                let num = 4.0 * (rho2.powi(3) - rho1.powi(3)) * (0.5 * aperture).sin();
                let den = 3.0 * aperture * (rho2 * rho2 - rho1 * rho1);
                center.add(Point::dir(*bisector).scale(num / den))
            }
            Shape::Polygon { vertices } => polygon_centroid(vertices),
        }
    }

    fn validate_slits(&self) -> Result<()> {
        let scale = self.diameter().max(1e-6);
        for chain in &self.slits {
            for (a, b) in chain.segments() {
                for t in [0.0, 0.25, 0.5, 0.75, 1.0] {
                    let p = a.add(b.sub(a).scale(t));
                    let inside = point_inside_shape(&self.shape, p);
                    let on_boundary = distance_to_shape_boundary(&self.shape, p) <= 1e-7 * scale;
                    if !inside && !on_boundary {
                        return Err(Error::Validation(format!(
                            "slit point ({}, {}) lies outside the domain closure",
                            p.x, p.y
                        )));
                    }
                    // interior samples may only touch the boundary at chain endpoints
                    if (t != 0.0 && t != 1.0) && !inside && on_boundary {
                        let is_chain_end = p.dist(chain.points[0]) <= 1e-7 * scale
                            || p.dist(*chain.points.last().unwrap()) <= 1e-7 * scale;
                        if !is_chain_end {
                            return Err(Error::Validation(
                                "slit crosses the domain boundary away from its endpoints".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn validate_shape(shape: &Shape) -> Result<()> {
    match shape {
        Shape::Disc { radius, .. } => {
            if !(*radius > 0.0) {
                return Err(Error::Validation(format!("disc radius must be positive, got {radius}")));
            }
        }
        Shape::CircularSector { radius, aperture, .. } => {
            if !(*radius > 0.0) {
                return Err(Error::Validation("sector radius must be positive".into()));
            }
            if !(*aperture > 0.0 && *aperture <= 2.0 * PI + GEOM_TOL) {
                return Err(Error::Validation(format!("sector aperture must lie in (0, 2π], got {aperture}")));
            }
        }
        Shape::AnnularSector { rho1, rho2, aperture, .. } => {
            if !(*rho1 >= 0.0 && *rho2 > *rho1) {
                return Err(Error::Validation(format!(
                    "annular radii must satisfy 0 ≤ rho1 < rho2, got ({rho1}, {rho2})"
                )));
            }
            if !(*aperture > 0.0 && *aperture <= 2.0 * PI + GEOM_TOL) {
                return Err(Error::Validation("annular aperture must lie in (0, 2π]".into()));
            }
        }
        Shape::Polygon { vertices } => {
            if vertices.len() < 3 {
                return Err(Error::Validation("polygon needs at least 3 vertices".into()));
            }
            let scale = bbox_scale(vertices);
            for (i, w) in vertices.windows(2).enumerate() {
                if w[0].dist(w[1]) <= 1e-12 * scale {
                    return Err(Error::Validation(format!("polygon has duplicate vertices at index {i}")));
                }
            }
            if vertices[0].dist(*vertices.last().unwrap()) <= 1e-12 * scale {
                return Err(Error::Validation("polygon repeats its first vertex".into()));
            }
            if !polygon_is_simple(vertices, scale) {
                return Err(Error::Validation("polygon is self-intersecting".into()));
            }
        }
    }
    Ok(())
}

/// Enforces counterclockwise polygon orientation (one canonical form).
fn canonicalize(shape: Shape) -> Shape {
    match shape {
        Shape::Polygon { mut vertices } => {
            if signed_area(&vertices) < 0.0 {
                vertices.reverse();
            }
            Shape::Polygon { vertices }
        }
        other => other,
    }
}

fn signed_area(vertices: &[Point]) -> f64 {
    let n = vertices.len();
    let mut s = 0.0;
    for i in 0..n {
        s += vertices[i].cross(vertices[(i + 1) % n]);
    }
    0.5 * s
}

fn polygon_area(vertices: &[Point]) -> f64 {
    signed_area(vertices).abs()
}

fn polygon_centroid(vertices: &[Point]) -> Point {
    let n = vertices.len();
    let mut cx = 0.0;
    let mut cy = 0.0;
    let mut a = 0.0;
    for i in 0..n {
        let p = vertices[i];
        let q = vertices[(i + 1) % n];
        let w = p.cross(q);
        a += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    Point::new(cx / (3.0 * a), cy / (3.0 * a))
}

fn bbox_of(pts: &[Point]) -> (Point, Point) {
    let mut lo = Point::new(f64::INFINITY, f64::INFINITY);
    let mut hi = Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
    for p in pts {
        lo.x = lo.x.min(p.x);
        lo.y = lo.y.min(p.y);
        hi.x = hi.x.max(p.x);
        hi.y = hi.y.max(p.y);
    }
    (lo, hi)
}

fn bbox_scale(pts: &[Point]) -> f64 {
    let (lo, hi) = bbox_of(pts);
    hi.sub(lo).norm().max(1e-12)
}

fn polygon_is_simple(vertices: &[Point], scale: f64) -> bool {
    let n = vertices.len();
    let tol = 1e-12 * scale * scale;
    for i in 0..n {
        let (a1, a2) = (vertices[i], vertices[(i + 1) % n]);
        for j in (i + 1)..n {
            // skip adjacent edges (they share a vertex)
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue;
            }
            let (b1, b2) = (vertices[j], vertices[(j + 1) % n]);
            let d1 = a2.sub(a1);
            let d2 = b2.sub(b1);
            let denom = d1.cross(d2);
            if denom.abs() <= tol {
                continue;
            }
            let t = b1.sub(a1).cross(d2) / denom;
            let u = b1.sub(a1).cross(d1) / denom;
            let eps = 1e-12;
            if t > eps && t < 1.0 - eps && u > eps && u < 1.0 - eps {
                return false;
            }
        }
    }
    true
}

/// Proof-device conformal-power map (r, θ) ↦ (r^{(β+1)/3} cos(βθ/2),
/// r^{(β+1)/3} sin(βθ/2)); sends the reflex angle R_β into the right
/// half-plane {x₁ > 0}.
pub fn proof_map(r: f64, theta: f64, beta: f64) -> Result<(f64, f64)> {
    if !(1.0..=2.0).contains(&beta) {
        return Err(Error::InvalidInput(format!("proof_map requires β ∈ [1, 2], got {beta}")));
    }
    if !(r >= 0.0) {
        return Err(Error::InvalidInput(format!("proof_map requires r ≥ 0, got {r}")));
    }
    if theta.abs() >= PI / beta {
        return Err(Error::InvalidInput(format!(
            "proof_map requires |θ| < π/β, got θ={theta}, β={beta}"
        )));
    }
    let rad = r.powf((beta + 1.0) / 3.0);
    let half = 0.5 * beta * theta;
    Ok((rad * half.cos(), rad * half.sin()))
}

/// One smooth piece of a boundary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PieceKind {
    Segment { a: Point, b: Point },
    /// Counterclockwise arc from angle t0 to t1 (t1 > t0) when traversed
    /// forward; construct with t1 < t0 for clockwise traversal.
    Arc { center: Point, radius: f64, t0: f64, t1: f64 },
}

/// Which side of a slit a doubled piece represents. On the negative x-axis the
/// upper side carries θ → +π and the lower side θ → −π.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SlitSide {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryPiece {
    pub kind: PieceKind,
    pub slit_side: Option<SlitSide>,
}

impl BoundaryPiece {
    pub fn length(&self) -> f64 {
        match self.kind {
            PieceKind::Segment { a, b } => a.dist(b),
            PieceKind::Arc { radius, t0, t1, .. } => radius * (t1 - t0).abs(),
        }
    }

    /// Point at parameter t ∈ [0, 1] along the piece.
    pub fn point_at(&self, t: f64) -> Point {
        match self.kind {
            PieceKind::Segment { a, b } => a.add(b.sub(a).scale(t)),
            PieceKind::Arc { center, radius, t0, t1 } => {
                center.add(Point::dir(t0 + t * (t1 - t0)).scale(radius))
            }
        }
    }
}

/// Piecewise-smooth boundary parametrization; slit pieces appear twice, once
/// per side with opposite orientation.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryCurve {
    pub pieces: Vec<BoundaryPiece>,
}

impl BoundaryCurve {
    pub fn total_length(&self) -> f64 {
        self.pieces.iter().map(|p| p.length()).sum()
    }
}

/// Boundary of a domain including both sides of every slit.
pub fn boundary_curve(domain: &Domain) -> BoundaryCurve {
    let mut pieces = Vec::new();
    match domain.shape() {
        Shape::Disc { center, radius } => {
            pieces.push(BoundaryPiece {
                kind: PieceKind::Arc { center: *center, radius: *radius, t0: -PI, t1: PI },
                slit_side: None,
            });
        }
        Shape::CircularSector { vertex, bisector, radius, aperture } => {
            let lo = bisector - 0.5 * aperture;
            let hi = bisector + 0.5 * aperture;
            let a0 = vertex.add(Point::dir(lo).scale(*radius));
            let a1 = vertex.add(Point::dir(hi).scale(*radius));
            pieces.push(BoundaryPiece { kind: PieceKind::Segment { a: *vertex, b: a0 }, slit_side: None });
            pieces.push(BoundaryPiece {
                kind: PieceKind::Arc { center: *vertex, radius: *radius, t0: lo, t1: hi },
                slit_side: None,
            });
            pieces.push(BoundaryPiece { kind: PieceKind::Segment { a: a1, b: *vertex }, slit_side: None });
        }
        Shape::AnnularSector { center, bisector, rho1, rho2, aperture } => {
            let lo = bisector - 0.5 * aperture;
            let hi = bisector + 0.5 * aperture;
            pieces.push(BoundaryPiece {
                kind: PieceKind::Segment {
                    a: center.add(Point::dir(lo).scale(*rho1)),
                    b: center.add(Point::dir(lo).scale(*rho2)),
                },
                slit_side: None,
            });
            pieces.push(BoundaryPiece {
                kind: PieceKind::Arc { center: *center, radius: *rho2, t0: lo, t1: hi },
                slit_side: None,
            });
            pieces.push(BoundaryPiece {
                kind: PieceKind::Segment {
                    a: center.add(Point::dir(hi).scale(*rho2)),
                    b: center.add(Point::dir(hi).scale(*rho1)),
                },
                slit_side: None,
            });
            pieces.push(BoundaryPiece {
                kind: PieceKind::Arc { center: *center, radius: *rho1, t0: hi, t1: lo },
                slit_side: None,
            });
        }
        Shape::Polygon { vertices } => {
            let n = vertices.len();
            for i in 0..n {
                pieces.push(BoundaryPiece {
                    kind: PieceKind::Segment { a: vertices[i], b: vertices[(i + 1) % n] },
                    slit_side: None,
                });
            }
        }
    }
    for chain in domain.slits() {
        for (a, b) in chain.segments() {
            pieces.push(BoundaryPiece { kind: PieceKind::Segment { a, b }, slit_side: Some(SlitSide::Upper) });
            pieces.push(BoundaryPiece { kind: PieceKind::Segment { a: b, b: a }, slit_side: Some(SlitSide::Lower) });
        }
    }
    BoundaryCurve { pieces }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square2() -> Domain {
        Domain::polygon(
            vec![
                Point::new(-1.0, -1.0),
                Point::new(1.0, -1.0),
                Point::new(1.0, 1.0),
                Point::new(-1.0, 1.0),
            ],
            vec![],
        )
        .unwrap()
    }

    #[test]
    fn identity_pose_is_noop() {
        let d = square2();
        let f = d.to_wedge_frame(&Pose::identity());
        assert_eq!(d.shape(), f.shape());
    }

    #[test]
    fn translation_moves_disc_opposite() {
        let d = Domain::disc(Point::ORIGIN, 1.0).unwrap();
        let f = d.to_wedge_frame(&Pose::new(Point::new(1.0, 0.0), 0.0));
        match f.shape() {
            Shape::Disc { center, .. } => {
                assert!((center.x + 1.0).abs() < 1e-15 && center.y.abs() < 1e-15)
            }
            _ => panic!(),
        }
    }

    #[test]
    fn rotation_convention_fixed_by_example() {
        // rotation π/2 applied to world point (1, 0) gives (0, −1) in frame
        let pose = Pose::new(Point::ORIGIN, PI / 2.0);
        let p = pose.to_frame(Point::new(1.0, 0.0));
        assert!((p.x - 0.0).abs() < 1e-15 && (p.y + 1.0).abs() < 1e-15, "got ({}, {})", p.x, p.y);
    }

    #[test]
    fn frame_roundtrip_identity() {
        let pose = Pose::new(Point::new(0.3, -0.7), 1.234);
        for p in [Point::new(1.0, 2.0), Point::new(-3.0, 0.1), Point::new(0.0, 0.0)] {
            let q = pose.from_frame(pose.to_frame(p));
            assert!(q.dist(p) < 1e-12);
        }
    }

    #[test]
    fn areas() {
        assert!((Domain::disc(Point::ORIGIN, 1.0).unwrap().area() - PI).abs() < 1e-15);
        assert!((square2().area() - 4.0).abs() < 1e-15);
        assert!(
            (Domain::annular_sector(1.0, 2.0, 2.0 * PI).unwrap().area() - 3.0 * PI).abs() < 1e-12
        );
    }

    #[test]
    fn area_invariant_under_pose() {
        let d = square2();
        let f = d.to_wedge_frame(&Pose::new(Point::new(2.0, -1.0), 0.77));
        assert!((d.area() - f.area()).abs() < 1e-12 * d.area());
    }

    #[test]
    fn polygon_orientation_enforced() {
        // clockwise input gets reversed
        let d = Domain::polygon(
            vec![
                Point::new(-1.0, 1.0),
                Point::new(1.0, 1.0),
                Point::new(1.0, -1.0),
                Point::new(-1.0, -1.0),
            ],
            vec![],
        )
        .unwrap();
        match d.shape() {
            Shape::Polygon { vertices } => assert!(signed_area(vertices) > 0.0),
            _ => panic!(),
        }
    }

    #[test]
    fn self_intersection_rejected() {
        let r = Domain::polygon(
            vec![
                Point::new(0.0, 0.0),
                Point::new(1.0, 1.0),
                Point::new(1.0, 0.0),
                Point::new(0.0, 1.0),
            ],
            vec![],
        );
        assert!(r.is_err());
    }

    #[test]
    fn slit_outside_rejected() {
        let r = square2().with_slits(vec![SlitChain::new(vec![
            Point::new(0.0, 0.0),
            Point::new(3.0, 0.0),
        ])
        .unwrap()]);
        assert!(r.is_err());
    }

    #[test]
    fn proof_map_examples() {
        let (x, y) = proof_map(1.0, 0.0, 1.0).unwrap();
        assert!((x - 1.0).abs() < 1e-15 && y.abs() < 1e-15);
        let (x, y) = proof_map(0.0, 0.3, 1.5).unwrap();
        assert!(x == 0.0 && y == 0.0);
        let (x, y) = proof_map(4.0, PI / 2.0, 1.0).unwrap();
        let expect = 4.0f64.powf(2.0 / 3.0) * (PI / 4.0).cos();
        assert!((x - expect).abs() < 1e-12 && (y - expect).abs() < 1e-12, "({x}, {y})");
        assert!(proof_map(1.0, PI, 1.0).is_err());
    }

    #[test]
    fn boundary_doubles_slits() {
        let d = Domain::cut_disc(1.0).unwrap();
        let curve = boundary_curve(&d);
        let slit_pieces: Vec<_> = curve.pieces.iter().filter(|p| p.slit_side.is_some()).collect();
        assert_eq!(slit_pieces.len(), 2);
        assert!(curve.total_length() > 0.0);
        // opposite orientation
        match (slit_pieces[0].kind, slit_pieces[1].kind) {
            (PieceKind::Segment { a: a0, b: b0 }, PieceKind::Segment { a: a1, b: b1 }) => {
                assert!(a0.dist(b1) < 1e-15 && b0.dist(a1) < 1e-15);
            }
            _ => panic!(),
        }
    }

    #[test]
    fn scaling_scales_area_quadratically() {
        let d = square2();
        let s = d.scaled(3.0);
        assert!((s.area() - 9.0 * d.area()).abs() < 1e-10);
    }
}
