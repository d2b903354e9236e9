// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! `cyclide` command line. Every verb prints one JSON document on stdout.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error.

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use cyclide::blending::TorusCase;
use cyclide::io::{export_obj, read_vector_json, write_vector_json};
use cyclide::mesh::{bounding_radius, BoundingBox};
use cyclide::scalar::{format_scalar, int, parse_scalar, to_f64};
use cyclide::*;
use serde_json::{json, Value};

mod demo;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "cyclide", version, about = "Exact Dupin cyclides through the circle x = 0, y² + z² = r²")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn scalar(text: &str) -> Result<Scalar, String> {
    parse_scalar(text).map_err(|e| e.to_string())
}

#[derive(Args, Debug)]
struct Input {
    /// Vector file in the `{"r", "u", "v"}` format.
    #[arg(long = "in")]
    input: PathBuf,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Component verdict with all witnesses.
    Classify(Input),
    /// Dupin conditions on the Darboux form (quartic or cubic path).
    CheckDupin(Input),
    /// Whether two surfaces share tangent planes along the circle.
    BlendCheck {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
    },
    /// Member tangent to a cone along the circle.
    SolveCone {
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        r: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        lambda: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u0: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u1: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u2: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u3: Scalar,
    },
    /// Members tangent to the cylinder through the circle.
    SolveCylinder {
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        r: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u0: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u2: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u3: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u4: Scalar,
    },
    /// Member tangent to the plane of the circle.
    SolvePlane {
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        r: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u0: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u1: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        v2: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        v3: Scalar,
    },
    /// Completes u0..u4 to Villarceau-component vectors.
    VillarceauComplete {
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        r: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u0: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u1: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u2: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u3: Scalar,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        u4: Scalar,
    },
    /// Moves a Villarceau member along its blending pencil.
    Pencil {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = scalar, allow_hyphen_values = true)]
        t: Scalar,
    },
    /// Detects tori among principal-component members.
    RecognizeTorus(Input),
    /// Möbius invariant J0 and smoothness class.
    Invariant(Input),
    /// Triangulates the surface into an OBJ file.
    Mesh {
        #[command(flatten)]
        input: Input,
        /// `min,max` for a cube or `xmin,xmax,ymin,ymax,zmin,zmax`; defaults
        /// to a box containing the whole surface.
        #[arg(long, allow_hyphen_values = true)]
        bbox: Option<String>,
        #[arg(long, default_value_t = 48)]
        res: usize,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Re-derives the six blended demo pairs.
    DemoFig2 {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 48)]
        res: usize,
    },
}

/// Domain failure with the residuals that caused it.
#[derive(Debug)]
pub struct Failure {
    error: CyclideError,
    residuals: Value,
}

impl From<CyclideError> for Failure {
    fn from(error: CyclideError) -> Self {
        let residuals = match &error {
            CyclideError::NoRealSolution { discriminant } | CyclideError::NonRationalSolution { discriminant } => {
                json!({"discriminant": format_scalar(discriminant)})
            }
            _ => json!({}),
        };
        Failure { error, residuals }
    }
}

impl Failure {
    fn with_witness(error: CyclideError, v: &CircleFamilyVector) -> Self {
        let mut f = Failure::from(error);
        f.residuals["classification"] = classify(v).to_json();
        f
    }

    fn with_inputs(error: CyclideError, inputs: &[(&str, &Scalar)]) -> Self {
        let mut f = Failure::from(error);
        for (name, value) in inputs {
            f.residuals["inputs"][*name] = Value::String(format_scalar(value));
        }
        f
    }

    pub fn new(error: CyclideError, residuals: Value) -> Self {
        Failure { error, residuals }
    }

    fn to_json(&self) -> Value {
        json!({"error": {
            "kind": self.error.kind(),
            "message": self.error.to_string(),
            "residuals": self.residuals,
        }})
    }
}

type Outcome = Result<Value, Failure>;

/// Runs one command line; returns the exit code and the text for stdout.
pub fn run<I, T>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    (EXIT_OK, e.to_string().trim_end().to_string())
                }
                _ => {
                    let body = json!({"error": {"kind": "UsageError", "message": e.to_string().trim_end()}});
                    (EXIT_USAGE, body.to_string())
                }
            };
        }
    };
    match execute(cli.command) {
        Ok(value) => (EXIT_OK, value.to_string()),
        Err(f) => (EXIT_DOMAIN, f.to_json().to_string()),
    }
}

pub(crate) fn vector_json(v: &CircleFamilyVector) -> Value {
    serde_json::to_value(v).expect("vectors always serialize")
}

fn vectors_json(vs: &[CircleFamilyVector]) -> Value {
    Value::Array(vs.iter().map(vector_json).collect())
}

fn read(input: &Path) -> Result<CircleFamilyVector, Failure> {
    Ok(read_vector_json(input)?)
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Classify(i) => Ok(classify(&read(&i.input)?).to_json()),
        Command::CheckDupin(i) => check_dupin(&read(&i.input)?),
        Command::BlendCheck { a, b } => {
            let (a, b) = (read(&a)?, read(&b)?);
            Ok(json!({"blend": blend_check(&a, &b)?}))
        }
        Command::SolveCone { r, lambda, u0, u1, u2, u3 } => {
            let inputs = [("r", &r), ("lambda", &lambda), ("u0", &u0), ("u1", &u1), ("u2", &u2), ("u3", &u3)];
            let v = cone_family_solve(&r, &lambda, &u0, &u1, &u2, &u3).map_err(|e| Failure::with_inputs(e, &inputs))?;
            Ok(json!({"vector": vector_json(&v)}))
        }
        Command::SolveCylinder { r, u0, u2, u3, u4 } => {
            let inputs = [("r", &r), ("u0", &u0), ("u2", &u2), ("u3", &u3), ("u4", &u4)];
            let vs = cylinder_family_solve(&r, &u0, &u2, &u3, &u4).map_err(|e| Failure::with_inputs(e, &inputs))?;
            Ok(json!({"vectors": vectors_json(&vs)}))
        }
        Command::SolvePlane { r, u0, u1, v2, v3 } => {
            let inputs = [("r", &r), ("u0", &u0), ("u1", &u1), ("v2", &v2), ("v3", &v3)];
            let v = plane_family_solve(&r, &u0, &u1, &v2, &v3).map_err(|e| Failure::with_inputs(e, &inputs))?;
            Ok(json!({"vector": vector_json(&v)}))
        }
        Command::VillarceauComplete { r, u0, u1, u2, u3, u4 } => {
            let inputs = [("r", &r), ("u0", &u0), ("u1", &u1), ("u2", &u2), ("u3", &u3), ("u4", &u4)];
            let u = [u0.clone(), u1.clone(), u2.clone(), u3.clone(), u4.clone()];
            let vs = villarceau_complete(&r, &u).map_err(|e| Failure::with_inputs(e, &inputs))?;
            Ok(json!({"vectors": vectors_json(&vs)}))
        }
        Command::Pencil { input, t } => {
            let v = read(&input.input)?;
            let out = villarceau_pencil(&v, &t).map_err(|e| Failure::with_witness(e, &v))?;
            Ok(json!({"vector": vector_json(&out)}))
        }
        Command::RecognizeTorus(i) => {
            let v = read(&i.input)?;
            let case = torus_recognize(&v).map_err(|e| Failure::with_witness(e, &v))?;
            Ok(match case {
                None => json!({"torus": null}),
                Some(TorusCase::AroundTube) => json!({"torus": "aroundTube"}),
                Some(TorusCase::AroundHole(l)) => json!({"torus": "aroundHole", "lambda": format_scalar(&l)}),
            })
        }
        Command::Invariant(i) => {
            let v = read(&i.input)?;
            Ok(j0(&v).map_err(|e| Failure::with_witness(e, &v))?.to_json())
        }
        Command::Mesh { input, bbox, res, out, threads } => {
            let v = read(&input.input)?;
            let bbox = match bbox {
                Some(text) => parse_bbox(&text)?,
                None => default_bbox(&[&v])?,
            };
            let build = || mesh(&v, &bbox, res);
            let m = match threads {
                Some(n) => rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build()
                    .map_err(|e| Failure::from(CyclideError::Precondition(e.to_string())))?
                    .install(build)?,
                None => build()?,
            };
            export_obj(&[("surface", &m)], &out)?;
            Ok(json!({
                "out": out.display().to_string(),
                "triangles": m.triangles.len(),
                "vertices": m.vertices.len(),
            }))
        }
        Command::DemoFig2 { out, res } => demo::run(&out, res),
    }
}

fn check_dupin(v: &CircleFamilyVector) -> Outcome {
    let residuals = |pairs: Vec<(String, &Scalar)>| {
        Value::Object(pairs.into_iter().map(|(k, s)| (k, Value::String(format_scalar(s)))).collect())
    };
    if v.u()[0] == int(0) {
        let report = cubic_dupin_conditions(&expand(v))?;
        Ok(json!({"path": "cubic", "allVanish": report.all_vanish, "residuals": residuals(report.residuals())}))
    } else {
        let report = quartic_dupin_conditions(&to_intermediate(v)?);
        Ok(json!({"path": "quartic", "allVanish": report.all_vanish, "residuals": residuals(report.residuals())}))
    }
}

fn parse_bbox(text: &str) -> Result<BoundingBox, Failure> {
    let values = text
        .split(',')
        .map(|s| parse_scalar(s.trim()).map(|q| to_f64(&q)))
        .collect::<cyclide::Result<Vec<f64>>>()?;
    let bbox = match values[..] {
        [lo, hi] => BoundingBox::new([lo; 3], [hi; 3]),
        [x0, x1, y0, y1, z0, z1] => BoundingBox::new([x0, y0, z0], [x1, y1, z1]),
        _ => Err(CyclideError::Parse(format!("bbox needs 2 or 6 values, got {}", values.len()))),
    };
    Ok(bbox?)
}

/// Cube around the origin holding every listed surface, with a 5% margin.
pub(crate) fn default_bbox(vs: &[&CircleFamilyVector]) -> Result<BoundingBox, Failure> {
    let mut half = 0.0f64;
    for v in vs {
        let rho = bounding_radius(v).ok_or_else(|| {
            Failure::from(CyclideError::Precondition("cubic surfaces are unbounded; pass --bbox".into()))
        })?;
        half = half.max(rho);
    }
    Ok(BoundingBox::cube(1.05 * half)?)
}

pub(crate) fn save_vector(path: &Path, v: &CircleFamilyVector) -> Result<(), Failure> {
    Ok(write_vector_json(path, v)?)
}
