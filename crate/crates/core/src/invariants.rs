// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! The Möbius invariant `J0` of Dupin cyclides through `Γ`.
//!
//! Smooth cyclides have `0 < J0 ≤ 1/4`, horn cyclides `J0 = 0`, and the
//! remaining singular ones `J0 < 0`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::blending::{tangency_constant, ConeParameter};
use crate::components::{classify, principal_test, Verdict};
use crate::coefficients::CircleFamilyVector;
use crate::error::{CyclideError, Result};
use crate::scalar::{format_scalar, frac, int, square, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    Smooth,
    Horn,
    Singular,
}

impl fmt::Display for Smoothness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Smoothness::Smooth => "smooth",
            Smoothness::Horn => "horn",
            Smoothness::Singular => "singular",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct J0Value {
    pub value: Scalar,
    pub smoothness: Smoothness,
}

impl J0Value {
    pub fn new(value: Scalar) -> Self {
        let smoothness = if value.is_positive() {
            Smoothness::Smooth
        } else if value.is_zero() {
            Smoothness::Horn
        } else {
            Smoothness::Singular
        };
        Self { value, smoothness }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({"J0": format_scalar(&self.value), "class": self.smoothness.to_string()})
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorusParams {
    major: Scalar,
    minor: Scalar,
}

impl TorusParams {
    pub fn new(major: Scalar, minor: Scalar) -> Result<Self> {
        if !(major.is_positive() && minor.is_positive()) {
            return Err(CyclideError::Precondition("torus radii must be positive".into()));
        }
        Ok(Self { major, minor })
    }

    pub fn major(&self) -> &Scalar {
        &self.major
    }

    pub fn minor(&self) -> &Scalar {
        &self.minor
    }
}

/// `(r/R)² (1 − (r/R)²)`.
pub fn j0_torus(p: &TorusParams) -> J0Value {
    let q = square(&(&p.minor / &p.major));
    J0Value::new(&q * (Scalar::one() - &q))
}

fn ratio(num: Scalar, den: Scalar, what: &str) -> Result<Scalar> {
    if den.is_zero() {
        Err(CyclideError::UndefinedInvariant(format!("{what}: denominator vanishes")))
    } else {
        Ok(num / den)
    }
}

fn require(v: &CircleFamilyVector, allowed: &[Verdict]) -> Result<Verdict> {
    let verdict = classify(v).verdict;
    if allowed.contains(&verdict) {
        Ok(verdict)
    } else {
        Err(CyclideError::ComponentMismatch { verdict: verdict.to_string() })
    }
}

fn villarceau_value(v: &CircleFamilyVector) -> Result<Scalar> {
    let [v1, v2, v3, v4] = v.v();
    let r2 = square(v.r());
    let den = int(4) * (&r2 * (square(v1) + square(v2) + square(v3)) - square(v4));
    Ok(frac(1, 4) - ratio(&r2 * square(v1), den, "Villarceau invariant")?)
}

/// The equivalent form `4g / (16g + 4v1²)` with
/// `g = r²(u2² + u3²) − u4²`, valid on the Villarceau component.
pub fn j0_villarceau_gap_form(v: &CircleFamilyVector) -> Result<Scalar> {
    let [_, _, u2, u3, u4] = v.u();
    let g = square(v.r()) * (square(u2) + square(u3)) - square(u4);
    ratio(int(4) * &g, int(16) * &g + int(4) * square(&v.v()[0]), "Villarceau invariant")
}

pub fn j0_villarceau(v: &CircleFamilyVector) -> Result<J0Value> {
    require(v, &[Verdict::VillarceauDupin, Verdict::HornBoundary])?;
    let value = villarceau_value(v)?;
    if let Ok(other) = j0_villarceau_gap_form(v) {
        if other != value {
            return Err(CyclideError::UndefinedInvariant(format!(
                "Villarceau forms disagree: {} vs {}",
                format_scalar(&value),
                format_scalar(&other)
            )));
        }
    }
    Ok(J0Value::new(value))
}

/// `J0` of a principal-component member, routed by the cone parameter.
pub fn j0_principal(v: &CircleFamilyVector) -> Result<J0Value> {
    if !principal_test(v).is_member() {
        return Err(CyclideError::ComponentMismatch { verdict: classify(v).verdict.to_string() });
    }
    let [u0, u1, _, _, u4] = v.u();
    let v1 = &v.v()[0];
    let r2 = square(v.r());
    let r4 = square(&r2);
    let quarter = frac(1, 4);
    let value = match tangency_constant(v) {
        ConeParameter::Finite(l) if l.is_zero() => {
            let num = square(&(int(4) * &r2 * u0 - int(4) * u4 - int(3) * v1));
            quarter - ratio(num, int(4) * square(v1), "cylinder invariant")?
        }
        ConeParameter::Finite(l) => {
            let l2 = square(&l);
            let num = int(4) * &r4 * &l * u0 - int(2) * &r2 * (&l2 + int(6) * &r2) * u1
                + &l * (&l2 + int(2) * &r2) * u4;
            let den = int(2) * &r2 * &l * u0 - int(2) * &r2 * u1 - &l * u4;
            quarter - ratio(square(&num), int(16) * &r4 * square(&den), "cone invariant")?
        }
        ConeParameter::Infinite => {
            let num = square(&(int(3) * &r2 * u0 - v1));
            quarter - ratio(num, int(4) * &r4 * square(u0), "plane invariant")?
        }
        ConeParameter::NonConstant | ConeParameter::Indeterminate => {
            return Err(CyclideError::ComponentMismatch { verdict: classify(v).verdict.to_string() })
        }
    };
    Ok(J0Value::new(value))
}

/// Dispatches on the component. Horn-boundary vectors are evaluated by both
/// formulas, which must agree.
pub fn j0(v: &CircleFamilyVector) -> Result<J0Value> {
    let verdict = require(v, &[Verdict::VillarceauDupin, Verdict::PrincipalDupin, Verdict::HornBoundary])?;
    match verdict {
        Verdict::VillarceauDupin => j0_villarceau(v),
        Verdict::PrincipalDupin => j0_principal(v),
        _ => match (j0_villarceau(v), j0_principal(v)) {
            (Ok(a), Ok(b)) if a != b => Err(CyclideError::UndefinedInvariant(format!(
                "horn routes disagree: {} vs {}",
                format_scalar(&a.value),
                format_scalar(&b.value)
            ))),
            (Ok(a), _) => Ok(a),
            (Err(_), Ok(b)) => Ok(b),
            (Err(e), Err(_)) => Err(e),
        },
    }
}
