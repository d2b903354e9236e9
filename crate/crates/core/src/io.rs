// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact points of `Γ`, vector files and OBJ export.

use std::fs;
use std::io::Write;
use std::path::Path;

use num_traits::One;

use crate::coefficients::CircleFamilyVector;
use crate::error::{CyclideError, Result};
use crate::mesh::TriangleMesh;
use crate::scalar::{frac, int, square, Scalar};

/// Point of `Γ` with rational half-angle parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalCirclePoint {
    /// `None` for the point `(0, −r, 0)` reached as `t → ∞`.
    pub t: Option<Scalar>,
    pub point: [Scalar; 3],
}

/// `(0, r(1 − t²)/(1 + t²), 2rt/(1 + t²))`.
pub fn circle_point(r: &Scalar, t: &Scalar) -> RationalCirclePoint {
    let t2 = square(t);
    let den = Scalar::one() + &t2;
    RationalCirclePoint {
        t: Some(t.clone()),
        point: [int(0), r * (Scalar::one() - &t2) / &den, int(2) * r * t / &den],
    }
}

/// Points for `t = k/n`, `k = −n..=n`, optionally followed by `(0, −r, 0)`.
pub fn sample_circle(r: &Scalar, n: u32, include_far_point: bool) -> Result<Vec<RationalCirclePoint>> {
    if n == 0 {
        return Err(CyclideError::Precondition("n must be at least 1".into()));
    }
    let n = i64::from(n);
    let mut out: Vec<_> = (-n..=n).map(|k| circle_point(r, &frac(k, n))).collect();
    if include_far_point {
        out.push(RationalCirclePoint { t: None, point: [int(0), -r.clone(), int(0)] });
    }
    Ok(out)
}

fn io_error(path: &Path) -> impl FnOnce(std::io::Error) -> CyclideError + '_ {
    move |source| CyclideError::Io { path: path.to_path_buf(), source }
}

pub fn read_vector_json(path: &Path) -> Result<CircleFamilyVector> {
    let text = fs::read_to_string(path).map_err(io_error(path))?;
    CircleFamilyVector::from_json(&text).map_err(|e| match e {
        CyclideError::Parse(msg) => CyclideError::Parse(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn write_vector_json(path: &Path, v: &CircleFamilyVector) -> Result<()> {
    fs::write(path, v.to_json() + "\n").map_err(io_error(path))
}

/// Writes OBJ text with one group per named mesh.
pub fn write_obj<W: Write>(out: &mut W, meshes: &[(&str, &TriangleMesh)]) -> std::io::Result<()> {
    writeln!(out, "# cyclide mesh export, {} group(s)", meshes.len())?;
    let mut base = 1;
    for (name, mesh) in meshes {
        writeln!(out, "g {name}")?;
        for p in &mesh.vertices {
            writeln!(out, "v {} {} {}", p[0], p[1], p[2])?;
        }
        for t in &mesh.triangles {
            writeln!(out, "f {} {} {}", t[0] + base, t[1] + base, t[2] + base)?;
        }
        base += mesh.vertices.len();
    }
    Ok(())
}

pub fn export_obj(meshes: &[(&str, &TriangleMesh)], path: &Path) -> Result<()> {
    let file = fs::File::create(path).map_err(io_error(path))?;
    let mut out = std::io::BufWriter::new(file);
    write_obj(&mut out, meshes).and_then(|_| out.flush()).map_err(io_error(path))
}
