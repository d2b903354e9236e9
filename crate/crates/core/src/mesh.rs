// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Polygonization of the zero set of a cyclide on a regular grid.
//!
//! Cells are processed face by face: every face contributes one or two
//! segments joining sign changes on its edges, and the segments of a cell
//! close into loops that are fanned into triangles. Faces with four sign
//! changes are split according to the sign of the bilinear interpolant at
//! its saddle, so neighbouring cells always agree on shared faces.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::coefficients::CircleFamilyVector;
use crate::error::{CyclideError, Result};
use crate::polynomial::FloatPolynomial;

/// Triangles thinner than this area are dropped.
pub const MIN_TRIANGLE_AREA: f64 = 1e-12;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct TriangleMesh {
    pub vertices: Vec<[f64; 3]>,
    pub triangles: Vec<[usize; 3]>,
}

impl TriangleMesh {
    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundingBox {
    pub min: [f64; 3],
    pub max: [f64; 3],
}

impl BoundingBox {
    pub fn new(min: [f64; 3], max: [f64; 3]) -> Result<Self> {
        if (0..3).all(|a| min[a] < max[a] && min[a].is_finite() && max[a].is_finite()) {
            Ok(Self { min, max })
        } else {
            Err(CyclideError::Precondition("bounding box must have min < max on every axis".into()))
        }
    }

    /// `[−half, half]³`.
    pub fn cube(half: f64) -> Result<Self> {
        Self::new([-half; 3], [half; 3])
    }

    pub fn diagonal(&self) -> f64 {
        (0..3).map(|a| (self.max[a] - self.min[a]).powi(2)).sum::<f64>().sqrt()
    }
}

/// Radius of a ball centred at the origin that contains every real point
/// of the surface. `None` for cubics.
///
/// On the sphere `|p| = ρ` the equation is bounded below by
/// `|u0|(ρ² − r²)² − 2(ρ² + r²)(|u'|ρ + |u4|) − 2ρ(|v'|ρ + |v4|)`, with
/// `u' = (u1, u2, u3)` and `v' = (v1, v2, v3)`; the radius is its largest
/// positive root, located numerically.
pub fn bounding_radius(v: &CircleFamilyVector) -> Option<f64> {
    let f = |c: &crate::Scalar| crate::scalar::to_f64(c).abs();
    let [u0, u1, u2, u3, u4] = v.u().each_ref().map(f);
    let [v1, v2, v3, v4] = v.v().each_ref().map(f);
    if u0 == 0.0 {
        return None;
    }
    let r2 = crate::scalar::to_f64(v.r()).powi(2);
    let a = (u1 * u1 + u2 * u2 + u3 * u3).sqrt();
    let b = (v1 * v1 + v2 * v2 + v3 * v3).sqrt();
    let g = |rho: f64| {
        let s = rho * rho;
        u0 * (s - r2).powi(2) - 2.0 * (s + r2) * (a * rho + u4) - 2.0 * rho * (b * rho + v4)
    };
    // Cauchy bound for g written as a quartic in ρ
    let coeffs = [2.0 * a, 2.0 * (r2 * u0 + u4 + b), 2.0 * (a * r2 + v4), r2 * r2 * u0 + 2.0 * r2 * u4];
    let mut hi = 1.0 + coeffs.iter().fold(0.0f64, |m, c| m.max(c.abs() / u0));
    let steps = 4096;
    let dh = hi / steps as f64;
    let mut lo = hi;
    while lo > 0.0 && g(lo) > 0.0 {
        hi = lo;
        lo -= dh;
    }
    if lo <= 0.0 {
        return Some(hi);
    }
    for _ in 0..60 {
        let mid = 0.5 * (lo + hi);
        if g(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Some(hi)
}

/// One Newton step toward the zero set: `p − F ∇F / |∇F|²`.
pub fn project(poly: &FloatPolynomial, p: [f64; 3]) -> [f64; 3] {
    let f = poly.evaluate(p);
    let g = poly.gradient(p);
    let n2 = dot(g, g);
    if n2 == 0.0 {
        return p;
    }
    let s = f / n2;
    [p[0] - s * g[0], p[1] - s * g[1], p[2] - s * g[2]]
}

/// Meshes the expanded polynomial of `v`.
pub fn mesh(v: &CircleFamilyVector, bbox: &BoundingBox, resolution: usize) -> Result<TriangleMesh> {
    mesh_polynomial(&v.polynomial().to_float(), bbox, resolution)
}

pub fn mesh_polynomial(poly: &FloatPolynomial, bbox: &BoundingBox, resolution: usize) -> Result<TriangleMesh> {
    if resolution < 8 {
        return Err(CyclideError::Precondition(format!("resolution must be at least 8, got {resolution}")));
    }
    let grid = Grid::sample(poly, bbox, resolution);
    if grid.values.iter().all(|&f| f < 0.0) || grid.values.iter().all(|&f| f >= 0.0) {
        return Err(CyclideError::EmptySurface);
    }
    let slabs: Vec<Vec<[EdgeKey; 3]>> = (0..resolution).into_par_iter().map(|k| grid.slab(poly, k)).collect();

    let mut mesh = TriangleMesh::default();
    let mut index = HashMap::new();
    for tri in slabs.into_iter().flatten() {
        let ids = tri.map(|key| {
            *index.entry(key).or_insert_with(|| {
                mesh.vertices.push(grid.crossing(key));
                mesh.vertices.len() - 1
            })
        });
        mesh.triangles.push(ids);
    }
    if mesh.is_empty() {
        return Err(CyclideError::EmptySurface);
    }
    Ok(mesh)
}

/// Grid edge: axis and the lower endpoint.
type EdgeKey = (u8, usize, usize, usize);

struct Grid {
    n: usize,
    min: [f64; 3],
    step: [f64; 3],
    values: Vec<f64>,
}

// corner c of a cell sits at offset (c & 1, c >> 1 & 1, c >> 2 & 1)
const FACES: [[usize; 4]; 6] = [
    [0, 2, 6, 4],
    [1, 3, 7, 5],
    [0, 4, 5, 1],
    [2, 6, 7, 3],
    [0, 1, 3, 2],
    [4, 5, 7, 6],
];

fn offset(c: usize) -> [usize; 3] {
    [c & 1, c >> 1 & 1, c >> 2 & 1]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

impl Grid {
    fn sample(poly: &FloatPolynomial, bbox: &BoundingBox, n: usize) -> Self {
        let step = [0, 1, 2].map(|a| (bbox.max[a] - bbox.min[a]) / n as f64);
        let m = n + 1;
        let mut grid = Grid { n, min: bbox.min, step, values: Vec::new() };
        grid.values = (0..m * m * m)
            .into_par_iter()
            .map(|idx| poly.evaluate(grid.point([idx % m, idx / m % m, idx / (m * m)])))
            .collect();
        grid
    }

    fn point(&self, g: [usize; 3]) -> [f64; 3] {
        [0, 1, 2].map(|a| self.min[a] + self.step[a] * g[a] as f64)
    }

    fn value(&self, g: [usize; 3]) -> f64 {
        let m = self.n + 1;
        self.values[(g[2] * m + g[1]) * m + g[0]]
    }

    fn crossing(&self, (axis, i, j, k): EdgeKey) -> [f64; 3] {
        let a = [i, j, k];
        let mut b = a;
        b[axis as usize] += 1;
        let (fa, fb) = (self.value(a), self.value(b));
        let t = fa / (fa - fb);
        let (pa, pb) = (self.point(a), self.point(b));
        [0, 1, 2].map(|c| pa[c] + t * (pb[c] - pa[c]))
    }

    fn slab(&self, poly: &FloatPolynomial, k: usize) -> Vec<[EdgeKey; 3]> {
        let mut out = Vec::new();
        for j in 0..self.n {
            for i in 0..self.n {
                self.cell(poly, [i, j, k], &mut out);
            }
        }
        out
    }

    fn cell(&self, poly: &FloatPolynomial, base: [usize; 3], out: &mut Vec<[EdgeKey; 3]>) {
        let corner = |c: usize| {
            let o = offset(c);
            [base[0] + o[0], base[1] + o[1], base[2] + o[2]]
        };
        let f: [f64; 8] = std::array::from_fn(|c| self.value(corner(c)));
        let inside = f.map(|x| x < 0.0);
        if inside.iter().all(|&s| s == inside[0]) {
            return;
        }
        let edge = |a: usize, b: usize| -> EdgeKey {
            let (lo, hi) = (a.min(b), a.max(b));
            let axis = (hi ^ lo).trailing_zeros() as u8;
            let g = corner(lo);
            (axis, g[0], g[1], g[2])
        };

        let mut links: HashMap<EdgeKey, Vec<EdgeKey>> = HashMap::new();
        let mut link = |a: EdgeKey, b: EdgeKey| {
            links.entry(a).or_default().push(b);
            links.entry(b).or_default().push(a);
        };
        for face in FACES {
            let e: [EdgeKey; 4] = std::array::from_fn(|m| edge(face[m], face[(m + 1) % 4]));
            let changes: Vec<usize> = (0..4).filter(|&m| inside[face[m]] != inside[face[(m + 1) % 4]]).collect();
            match changes.len() {
                2 => link(e[changes[0]], e[changes[1]]),
                4 => {
                    let v = face.map(|c| f[c]);
                    let den = v[0] + v[2] - v[1] - v[3];
                    let saddle = if den == 0.0 {
                        v.iter().sum::<f64>() / 4.0
                    } else {
                        (v[0] * v[2] - v[1] * v[3]) / den
                    };
                    let saddle_inside = saddle < 0.0;
                    for m in 0..4 {
                        if inside[face[m]] != saddle_inside {
                            link(e[(m + 3) % 4], e[m]);
                        }
                    }
                }
                _ => {}
            }
        }

        let mut starts: Vec<EdgeKey> = links.keys().copied().collect();
        starts.sort_unstable();
        let mut seen = std::collections::HashSet::new();
        for start in starts {
            if !seen.insert(start) {
                continue;
            }
            let mut cycle = vec![start];
            let (mut prev, mut cur) = (start, links[&start][0]);
            while cur != start {
                seen.insert(cur);
                cycle.push(cur);
                let next = links[&cur].iter().copied().find(|&x| x != prev).unwrap_or(start);
                prev = cur;
                cur = next;
            }
            for w in 1..cycle.len().saturating_sub(1) {
                self.emit(poly, [cycle[0], cycle[w], cycle[w + 1]], out);
            }
        }
    }

    fn emit(&self, poly: &FloatPolynomial, mut tri: [EdgeKey; 3], out: &mut Vec<[EdgeKey; 3]>) {
        let p = tri.map(|key| self.crossing(key));
        let normal = cross(sub(p[1], p[0]), sub(p[2], p[0]));
        if 0.5 * dot(normal, normal).sqrt() <= MIN_TRIANGLE_AREA {
            return;
        }
        let centroid = [0, 1, 2].map(|a| (p[0][a] + p[1][a] + p[2][a]) / 3.0);
        if dot(normal, poly.gradient(centroid)) < 0.0 {
            tri.swap(1, 2);
        }
        out.push(tri);
    }
}
