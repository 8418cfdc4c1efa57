//! Conforming P1 triangulations of slit domains.
//!
//! Three builders, dispatched by shape:
//! * axis-aligned rectangles with grid-aligned slits get a structured grid
//!   (each cell split into two triangles);
//! * canonical annular/circular sectors get a structured polar grid (chords,
//!   i.e. the inscribed polygon of the curved boundary);
//! * everything else (polygons, polygonalized discs) goes through constrained
//!   Delaunay triangulation with quality refinement, honoring slit chains as
//!   constraint edges.
//!
//! Slits are meshed as constrained interior edges whose nodes are Dirichlet
//! (u = 0 on both sides, which is exact for the slit-domain condition and
//! needs no dual-node bookkeeping). Refinement for the Richardson ladder is
//! uniform quadrisection, so each level halves h exactly and constraint edges
//! propagate to their sub-edges.

use crate::geometry::{Domain, Point, Shape};
use crate::{Error, Result};
use spade::{ConstrainedDelaunayTriangulation, Point2, RefinementParameters, Triangulation};
use std::collections::{HashMap, HashSet};
use std::f64::consts::PI;

/// Triangle mesh with Dirichlet markers and constraint-edge bookkeeping.
#[derive(Debug, Clone)]
pub struct SlitMesh {
    pub nodes: Vec<Point>,
    /// CCW vertex index triples.
    pub elements: Vec<[usize; 3]>,
    /// Dirichlet flag per node (outer boundary and slit nodes).
    pub dirichlet: Vec<bool>,
    /// Nominal element size.
    pub h: f64,
    /// Boundary/slit edges as sorted index pairs; midpoints inherit Dirichlet
    /// status on refinement.
    constrained: HashSet<(usize, usize)>,
}

impl SlitMesh {
    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn dirichlet_nodes(&self) -> Vec<usize> {
        (0..self.nodes.len()).filter(|&i| self.dirichlet[i]).collect()
    }

    pub fn num_free(&self) -> usize {
        self.dirichlet.iter().filter(|d| !**d).count()
    }

    /// Uniform quadrisection: every triangle splits into four via edge
    /// midpoints; h halves exactly.
    pub fn refined(&self) -> SlitMesh {
        let mut nodes = self.nodes.clone();
        let mut dirichlet = self.dirichlet.clone();
        let mut midpoints: HashMap<(usize, usize), usize> = HashMap::new();
        let mut constrained = HashSet::new();
        let mut elements = Vec::with_capacity(4 * self.elements.len());

        let mut midpoint = |a: usize,
                            b: usize,
                            nodes: &mut Vec<Point>,
                            dirichlet: &mut Vec<bool>,
                            constrained: &mut HashSet<(usize, usize)>|
         -> usize {
            let key = sorted(a, b);
            if let Some(&m) = midpoints.get(&key) {
                return m;
            }
            let m = nodes.len();
            nodes.push(nodes[a].add(nodes[b]).scale(0.5));
            let on_constraint = self.constrained.contains(&key);
            dirichlet.push(on_constraint && self.dirichlet[a] && self.dirichlet[b]);
            if on_constraint {
                constrained.insert(sorted(a, m));
                constrained.insert(sorted(m, b));
            }
            midpoints.insert(key, m);
            m
        };

        for &[a, b, c] in &self.elements {
            let mab = midpoint(a, b, &mut nodes, &mut dirichlet, &mut constrained);
            let mbc = midpoint(b, c, &mut nodes, &mut dirichlet, &mut constrained);
            let mca = midpoint(c, a, &mut nodes, &mut dirichlet, &mut constrained);
            elements.push([a, mab, mca]);
            elements.push([mab, b, mbc]);
            elements.push([mca, mbc, c]);
            elements.push([mab, mbc, mca]);
        }
        // constraint edges with no midpoint requested cannot occur: every
        // constrained edge borders at least one element
        SlitMesh { nodes, elements, dirichlet, h: 0.5 * self.h, constrained }
    }

    fn orient_ccw(&mut self) {
        for tri in &mut self.elements {
            let [a, b, c] = *tri;
            let area2 = self.nodes[b].sub(self.nodes[a]).cross(self.nodes[c].sub(self.nodes[a]));
            if area2 < 0.0 {
                tri.swap(1, 2);
            }
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dirichlet_nodes().is_empty() {
            return Err(Error::Mesh("mesh has no Dirichlet nodes".into()));
        }
        for &[a, b, c] in &self.elements {
            let area2 = self.nodes[b].sub(self.nodes[a]).cross(self.nodes[c].sub(self.nodes[a]));
            if !(area2 > 0.0) {
                return Err(Error::Mesh(format!("degenerate element ({a}, {b}, {c})")));
            }
        }
        Ok(())
    }
}

fn sorted(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Builds a conforming triangulation of the domain with target element size h.
pub fn build_slit_mesh(domain: &Domain, h: f64) -> Result<SlitMesh> {
    if !(h > 0.0) {
        return Err(Error::InvalidInput(format!("mesh size must be positive, got {h}")));
    }
    let mut mesh = match domain.shape() {
        Shape::Polygon { vertices } => {
            if let Some(rect) = as_axis_rect(vertices) {
                if slits_grid_aligned(domain, &rect, h) {
                    structured_rectangle(&rect, h, domain)?
                } else {
                    cdt_mesh(vertices, domain, h)?
                }
            } else {
                cdt_mesh(vertices, domain, h)?
            }
        }
        Shape::AnnularSector { center, bisector, rho1, rho2, aperture } if center.norm() <= 1e-12 => {
            structured_polar(*bisector, *rho1, *rho2, *aperture, h)?
        }
        Shape::CircularSector { vertex, bisector, radius, aperture } if vertex.norm() <= 1e-12 => {
            structured_polar(*bisector, 0.0, *radius, *aperture, h)?
        }
        _ => {
            let poly = domain.polygonalize(512)?;
            match poly.shape() {
                Shape::Polygon { vertices } => cdt_mesh(vertices, &poly, h)?,
                _ => unreachable!(),
            }
        }
    };
    mesh.orient_ccw();
    mesh.validate()?;
    Ok(mesh)
}

struct Rect {
    x0: f64,
    y0: f64,
    x1: f64,
    y1: f64,
}

fn as_axis_rect(vertices: &[Point]) -> Option<Rect> {
    if vertices.len() != 4 {
        return None;
    }
    let xs: Vec<f64> = vertices.iter().map(|p| p.x).collect();
    let ys: Vec<f64> = vertices.iter().map(|p| p.y).collect();
    let (x0, x1) = (xs.iter().cloned().fold(f64::INFINITY, f64::min), xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
    let (y0, y1) = (ys.iter().cloned().fold(f64::INFINITY, f64::min), ys.iter().cloned().fold(f64::NEG_INFINITY, f64::max));
    let tol = 1e-12 * ((x1 - x0).abs() + (y1 - y0).abs());
    for p in vertices {
        let on_x = (p.x - x0).abs() <= tol || (p.x - x1).abs() <= tol;
        let on_y = (p.y - y0).abs() <= tol || (p.y - y1).abs() <= tol;
        if !(on_x && on_y) {
            return None;
        }
    }
    Some(Rect { x0, y0, x1, y1 })
}

fn slits_grid_aligned(domain: &Domain, rect: &Rect, h: f64) -> bool {
    let nx = (((rect.x1 - rect.x0) / h).round() as usize).max(1);
    let ny = (((rect.y1 - rect.y0) / h).round() as usize).max(1);
    let hx = (rect.x1 - rect.x0) / nx as f64;
    let hy = (rect.y1 - rect.y0) / ny as f64;
    let tol = 1e-9 * (hx + hy);
    let on_grid = |p: Point| {
        let gx = (p.x - rect.x0) / hx;
        let gy = (p.y - rect.y0) / hy;
        (gx - gx.round()).abs() * hx <= tol && (gy - gy.round()).abs() * hy <= tol
    };
    domain.slits().iter().all(|chain| {
        chain.segments().all(|(a, b)| {
            on_grid(a) && on_grid(b) && ((a.x - b.x).abs() <= tol || (a.y - b.y).abs() <= tol)
        })
    })
}

fn structured_rectangle(rect: &Rect, h: f64, domain: &Domain) -> Result<SlitMesh> {
    let nx = (((rect.x1 - rect.x0) / h).round() as usize).max(1);
    let ny = (((rect.y1 - rect.y0) / h).round() as usize).max(1);
    let hx = (rect.x1 - rect.x0) / nx as f64;
    let hy = (rect.y1 - rect.y0) / ny as f64;
    let idx = |i: usize, j: usize| j * (nx + 1) + i;

    let mut nodes = Vec::with_capacity((nx + 1) * (ny + 1));
    for j in 0..=ny {
        for i in 0..=nx {
            nodes.push(Point::new(rect.x0 + i as f64 * hx, rect.y0 + j as f64 * hy));
        }
    }
    let mut elements = Vec::with_capacity(2 * nx * ny);
    for j in 0..ny {
        for i in 0..nx {
            let (a, b, c, d) = (idx(i, j), idx(i + 1, j), idx(i + 1, j + 1), idx(i, j + 1));
            elements.push([a, b, c]);
            elements.push([a, c, d]);
        }
    }

    let on_slit = |p: Point| {
        domain.slits().iter().any(|chain| {
            chain
                .segments()
                .any(|(a, b)| crate::geometry::dist_point_segment(p, a, b) <= 1e-9 * (hx + hy))
        })
    };
    let mut dirichlet = vec![false; nodes.len()];
    for j in 0..=ny {
        for i in 0..=nx {
            let k = idx(i, j);
            if i == 0 || i == nx || j == 0 || j == ny || on_slit(nodes[k]) {
                dirichlet[k] = true;
            }
        }
    }

    let mut constrained = HashSet::new();
    let mut mark = |a: usize, b: usize| {
        constrained.insert(sorted(a, b));
    };
    for i in 0..nx {
        mark(idx(i, 0), idx(i + 1, 0));
        mark(idx(i, ny), idx(i + 1, ny));
    }
    for j in 0..ny {
        mark(idx(0, j), idx(0, j + 1));
        mark(idx(nx, j), idx(nx, j + 1));
    }
    // grid edges lying on slit segments
    for j in 0..=ny {
        for i in 0..nx {
            let (a, b) = (idx(i, j), idx(i + 1, j));
            let mid = nodes[a].add(nodes[b]).scale(0.5);
            if dirichlet[a] && dirichlet[b] && on_slit(mid) && on_slit(nodes[a]) && on_slit(nodes[b]) {
                constrained.insert(sorted(a, b));
            }
        }
    }
    for i in 0..=nx {
        for j in 0..ny {
            let (a, b) = (idx(i, j), idx(i, j + 1));
            let mid = nodes[a].add(nodes[b]).scale(0.5);
            if dirichlet[a] && dirichlet[b] && on_slit(mid) && on_slit(nodes[a]) && on_slit(nodes[b]) {
                constrained.insert(sorted(a, b));
            }
        }
    }

    Ok(SlitMesh { nodes, elements, dirichlet, h: hx.max(hy), constrained })
}

/// Structured polar grid for a canonical annular/circular sector; the angular
/// edges at θ = bisector ± aperture/2 are Dirichlet (for aperture = 2π they
/// are the two coincident sides of the cut).
fn structured_polar(bisector: f64, rho1: f64, rho2: f64, aperture: f64, h: f64) -> Result<SlitMesh> {
    let n_r = (((rho2 - rho1) / h).ceil() as usize).max(2);
    let n_t = ((aperture * rho2 / h).ceil() as usize).max(4);
    let dr = (rho2 - rho1) / n_r as f64;
    let t_lo = bisector - 0.5 * aperture;
    let dt = aperture / n_t as f64;

    let mut nodes = Vec::new();
    let mut dirichlet = Vec::new();
    let mut constrained = HashSet::new();
    let mut elements = Vec::new();

    let has_center = rho1 == 0.0;
    let ring0 = if has_center { 1 } else { 0 };
    let center_node = if has_center {
        nodes.push(Point::ORIGIN);
        dirichlet.push(true);
        Some(0usize)
    } else {
        None
    };
    let idx = |j: usize, i: usize| -> usize {
        // ring j (j starts at ring0), angular index i
        (j - ring0) * (n_t + 1) + i + if has_center { 1 } else { 0 }
    };
    for j in ring0..=n_r {
        let r = rho1 + j as f64 * dr;
        for i in 0..=n_t {
            let t = t_lo + i as f64 * dt;
            let mut p = Point::dir(t).scale(r);
            if p.x.abs() < 1e-14 * r {
                p.x = 0.0;
            }
            if p.y.abs() < 1e-14 * r {
                p.y = 0.0;
            }
            nodes.push(p);
            dirichlet.push(j == n_r || (!has_center && j == ring0) || i == 0 || i == n_t);
        }
    }
    // fan around the center
    if let Some(c) = center_node {
        for i in 0..n_t {
            elements.push([c, idx(1, i), idx(1, i + 1)]);
        }
        constrained.insert(sorted(c, idx(1, 0)));
        constrained.insert(sorted(c, idx(1, n_t)));
    }
    for j in ring0.max(1)..n_r {
        for i in 0..n_t {
            let (a, b, c, d) = (idx(j, i), idx(j, i + 1), idx(j + 1, i + 1), idx(j + 1, i));
            elements.push([a, b, c]);
            elements.push([a, c, d]);
        }
    }
    // constraint edges: outer/inner rings and the two angular sides
    for i in 0..n_t {
        constrained.insert(sorted(idx(n_r, i), idx(n_r, i + 1)));
        if !has_center {
            constrained.insert(sorted(idx(ring0, i), idx(ring0, i + 1)));
        }
    }
    for j in ring0.max(1)..n_r {
        constrained.insert(sorted(idx(j, 0), idx(j + 1, 0)));
        constrained.insert(sorted(idx(j, n_t), idx(j + 1, n_t)));
    }
    if has_center && n_r >= 1 {
        for j in 1..n_r {
            constrained.insert(sorted(idx(j, 0), idx(j + 1, 0)));
            constrained.insert(sorted(idx(j, n_t), idx(j + 1, n_t)));
        }
    }

    Ok(SlitMesh { nodes, elements, dirichlet, h: dr.max(rho2 * dt), constrained })
}

/// Constrained Delaunay triangulation with Ruppert-style refinement; the
/// polygon boundary (split at slit endpoints that land on it) and every slit
/// segment become constraint edges.
fn cdt_mesh(vertices: &[Point], domain: &Domain, h: f64) -> Result<SlitMesh> {
    let scale = domain.diameter().max(1e-9);
    let tol = 1e-9 * scale;

    // boundary loop with slit endpoints inserted into the edges they touch
    let n = vertices.len();
    let mut loop_pts: Vec<Point> = Vec::new();
    for i in 0..n {
        let (a, b) = (vertices[i], vertices[(i + 1) % n]);
        loop_pts.push(a);
        let mut on_edge: Vec<(f64, Point)> = Vec::new();
        for chain in domain.slits() {
            for &p in chain.points() {
                if p.dist(a) > tol
                    && p.dist(b) > tol
                    && crate::geometry::dist_point_segment(p, a, b) <= tol
                {
                    let t = p.sub(a).dot(b.sub(a)) / b.sub(a).dot(b.sub(a));
                    on_edge.push((t, p));
                }
            }
        }
        on_edge.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        loop_pts.extend(on_edge.into_iter().map(|(_, p)| p));
    }

    let mut cdt: ConstrainedDelaunayTriangulation<Point2<f64>> =
        ConstrainedDelaunayTriangulation::new();
    let ins = |cdt: &mut ConstrainedDelaunayTriangulation<Point2<f64>>, p: Point| {
        cdt.insert(Point2::new(p.x, p.y))
            .map_err(|e| Error::Mesh(format!("vertex insertion failed: {e:?}")))
    };
    let mut loop_handles = Vec::with_capacity(loop_pts.len());
    for &p in &loop_pts {
        loop_handles.push(ins(&mut cdt, p)?);
    }
    let m = loop_handles.len();
    for i in 0..m {
        let (a, b) = (loop_handles[i], loop_handles[(i + 1) % m]);
        if a != b {
            cdt.add_constraint(a, b);
        }
    }
    for chain in domain.slits() {
        let mut handles = Vec::new();
        for &p in chain.points() {
            handles.push(ins(&mut cdt, p)?);
        }
        for w in handles.windows(2) {
            if w[0] != w[1] {
                cdt.add_constraint(w[0], w[1]);
            }
        }
    }

    let params = RefinementParameters::<f64>::new()
        .exclude_outer_faces(true)
        .with_max_allowed_area(0.5 * h * h)
        .with_max_additional_vertices(400_000);
    cdt.refine(params);

    let nodes: Vec<Point> =
        cdt.vertices().map(|v| Point::new(v.position().x, v.position().y)).collect();
    let shape = domain.shape();
    let mut elements = Vec::new();
    for face in cdt.inner_faces() {
        let [va, vb, vc] = face.vertices();
        let (a, b, c) = (va.index(), vb.index(), vc.index());
        let centroid = nodes[a].add(nodes[b]).add(nodes[c]).scale(1.0 / 3.0);
        if crate::geometry::point_inside_shape(shape, centroid) {
            elements.push([a, b, c]);
        }
    }
    if elements.is_empty() {
        return Err(Error::Mesh("no interior elements produced".into()));
    }

    let mut constrained = HashSet::new();
    let mut dirichlet = vec![false; nodes.len()];
    for edge in cdt.undirected_edges() {
        if edge.is_constraint_edge() {
            let [va, vb] = edge.vertices();
            constrained.insert(sorted(va.index(), vb.index()));
            dirichlet[va.index()] = true;
            dirichlet[vb.index()] = true;
        }
    }

    // nodes introduced on the boundary by refinement are already covered by
    // constraint-edge splitting; unreferenced exterior nodes stay Dirichlet-free
    Ok(SlitMesh { nodes, elements, dirichlet, h, constrained })
}
