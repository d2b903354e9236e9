// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Smooth blending along `Γ` and the solvers for each blending family.
//!
//! Along `Γ` the gradient of a cyclide is proportional to
//! `(𝓕, y, z)` scaled, where
//! `𝓕 = (v2 y + v3 z + v4) / (u2 y + u3 z + u4)`; two cyclides through `Γ`
//! join smoothly exactly when their `𝓕` agree on `Γ`.

use num_traits::{One, Signed, Zero};

use crate::components::{classify, principal_test, Verdict};
use crate::coefficients::CircleFamilyVector;
use crate::error::{CyclideError, Result};
use crate::polynomial::TrivariatePolynomial;
use crate::scalar::{format_scalar, int, rational_sqrt, square, Scalar};

/// `𝓕 = (v2 y + v3 z + v4) / (u2 y + u3 z + u4)` restricted to `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangencyFunction {
    pub numerator: [Scalar; 3],
    pub denominator: [Scalar; 3],
}

impl TangencyFunction {
    /// `None` when both triples vanish: `Γ` is then singular on the surface.
    pub fn of(v: &CircleFamilyVector) -> Option<Self> {
        let [_, _, u2, u3, u4] = v.u();
        let [_, v2, v3, v4] = v.v();
        let f = Self { numerator: [v2.clone(), v3.clone(), v4.clone()], denominator: [u2.clone(), u3.clone(), u4.clone()] };
        if f.numerator.iter().chain(&f.denominator).all(Zero::is_zero) {
            None
        } else {
            Some(f)
        }
    }

    /// Whether `self` and `other` agree as rational functions on the circle
    /// of radius `r`.
    pub fn agrees_with(&self, other: &Self, r: &Scalar) -> bool {
        let lhs = product_on_circle(&self.numerator, &other.denominator, r);
        let rhs = product_on_circle(&other.numerator, &self.denominator, r);
        lhs == rhs
    }
}

/// `(a1 y + a2 z + a3)(b1 y + b2 z + b3)` reduced by `z² = r² − y²`, as
/// coefficients of `y², yz, y, z, 1`.
fn product_on_circle(a: &[Scalar; 3], b: &[Scalar; 3], r: &Scalar) -> [Scalar; 5] {
    let zz = &a[1] * &b[1];
    [
        &a[0] * &b[0] - &zz,
        &a[0] * &b[1] + &a[1] * &b[0],
        &a[0] * &b[2] + &a[2] * &b[0],
        &a[1] * &b[2] + &a[2] * &b[1],
        &a[2] * &b[2] + square(r) * zz,
    ]
}

/// Whether `a` and `b` are joined with common tangent planes along `Γ`.
///
/// If exactly one side is singular along `Γ` (both of its triples vanish)
/// the answer is `false`.
pub fn blend_check(a: &CircleFamilyVector, b: &CircleFamilyVector) -> Result<bool> {
    if a.r() != b.r() {
        return Err(CyclideError::Precondition(format!(
            "radii differ: {} vs {}",
            format_scalar(a.r()),
            format_scalar(b.r())
        )));
    }
    match (TangencyFunction::of(a), TangencyFunction::of(b)) {
        (None, None) => Err(CyclideError::BothSidesDegenerate),
        (Some(fa), Some(fb)) => Ok(fa.agrees_with(&fb, a.r())),
        _ => Ok(false),
    }
}

/// Value of `𝓕` when it is constant along `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConeParameter {
    Finite(Scalar),
    /// Denominator triple zero, numerator nonzero.
    Infinite,
    NonConstant,
    /// Both triples zero.
    Indeterminate,
}

pub fn tangency_constant(v: &CircleFamilyVector) -> ConeParameter {
    let Some(f) = TangencyFunction::of(v) else {
        return ConeParameter::Indeterminate;
    };
    let Some(i) = f.denominator.iter().position(|c| !c.is_zero()) else {
        return ConeParameter::Infinite;
    };
    let lambda = &f.numerator[i] / &f.denominator[i];
    if (0..3).all(|k| f.numerator[k] == &lambda * &f.denominator[k]) {
        ConeParameter::Finite(lambda)
    } else {
        ConeParameter::NonConstant
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnvelopeKind {
    Cone(Scalar),
    Cylinder,
    Plane,
    /// Non-constant `𝓕`: the tangent planes envelope a quartic, not modelled.
    Quartic,
    /// Tangent planes undefined along `Γ`.
    Degenerate,
}

/// Envelope of the tangent planes of a cyclide along `Γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeSurface {
    pub r: Scalar,
    pub kind: EnvelopeKind,
}

impl EnvelopeSurface {
    /// Implicit equation `y² + z² − (r − λx/(2r))²`; the plane is `x`.
    pub fn implicit(&self) -> Option<TrivariatePolynomial> {
        let lambda = match &self.kind {
            EnvelopeKind::Cone(l) => l.clone(),
            EnvelopeKind::Cylinder => Scalar::zero(),
            EnvelopeKind::Plane => return Some(TrivariatePolynomial::x()),
            EnvelopeKind::Quartic | EnvelopeKind::Degenerate => return None,
        };
        let (y, z) = (TrivariatePolynomial::y(), TrivariatePolynomial::z());
        let line = &TrivariatePolynomial::constant(self.r.clone())
            - &TrivariatePolynomial::x().scale(&(lambda / (int(2) * &self.r)));
        Some(&(&(&y * &y) + &(&z * &z)) - &(&line * &line))
    }
}

pub fn envelope(v: &CircleFamilyVector) -> EnvelopeSurface {
    let kind = match tangency_constant(v) {
        ConeParameter::Finite(l) if l.is_zero() => EnvelopeKind::Cylinder,
        ConeParameter::Finite(l) => EnvelopeKind::Cone(l),
        ConeParameter::Infinite => EnvelopeKind::Plane,
        ConeParameter::NonConstant => EnvelopeKind::Quartic,
        ConeParameter::Indeterminate => EnvelopeKind::Degenerate,
    };
    EnvelopeSurface { r: v.r().clone(), kind }
}

/// Member of the principal component tangent to the cone with parameter
/// `λ` along `Γ`; `u4` and `v1` are solved from the free data.
pub fn cone_family_solve(
    r: &Scalar,
    lambda: &Scalar,
    u0: &Scalar,
    u1: &Scalar,
    u2: &Scalar,
    u3: &Scalar,
) -> Result<CircleFamilyVector> {
    if lambda.is_zero() || u0.is_zero() {
        return Err(CyclideError::Precondition("cone family needs λ ≠ 0 and u0 ≠ 0".into()));
    }
    let r2 = square(r);
    let l2 = square(lambda);
    let n2 = square(u2) + square(u3);
    let gap = lambda * u0 - u1;
    let u4 = (int(4) * &r2 * u1 * &gap + &l2 * &n2) / (int(2) * &l2 * u0);
    let v1 = (int(16) * square(&r2) * square(&gap) + int(4) * &l2 * &r2 * square(u1)
        - &l2 * (&l2 + int(4) * &r2) * &n2)
        / (int(8) * &l2 * &r2 * u0);
    let v = [v1, lambda * u2, lambda * u3, lambda * &u4];
    CircleFamilyVector::new(r.clone(), [u0.clone(), u1.clone(), u2.clone(), u3.clone(), u4], v)
}

/// Residual of the fourth cone-family equation
/// `4r²u1(λu0 − u1) + λ²(u2² + u3²) − 2λ²u0u4`.
pub fn cone_fourth_residual(v: &CircleFamilyVector, lambda: &Scalar) -> Scalar {
    let [u0, u1, u2, u3, u4] = v.u();
    let l2 = square(lambda);
    int(4) * square(v.r()) * u1 * (lambda * u0 - u1) + &l2 * (square(u2) + square(u3)) - int(2) * l2 * u0 * u4
}

/// Members tangent to the cylinder `y² + z² = r²` along `Γ`: the roots `v1` of
/// `2r²u0v1 + r²(u2² + u3²) − (v1 + u4)² = 0`, larger root first.
pub fn cylinder_family_solve(
    r: &Scalar,
    u0: &Scalar,
    u2: &Scalar,
    u3: &Scalar,
    u4: &Scalar,
) -> Result<Vec<CircleFamilyVector>> {
    let r2 = square(r);
    let centre = &r2 * u0 - u4;
    let quarter = square(&centre) + &r2 * (square(u2) + square(u3)) - square(u4);
    let discriminant = int(4) * &quarter;
    if quarter.is_negative() {
        return Err(CyclideError::NoRealSolution { discriminant });
    }
    let root = rational_sqrt(&quarter).ok_or(CyclideError::NonRationalSolution { discriminant })?;
    let roots = if root.is_zero() { vec![centre] } else { vec![&centre + &root, &centre - &root] };
    let zero = Scalar::zero;
    roots
        .into_iter()
        .map(|v1| {
            CircleFamilyVector::new(
                r.clone(),
                [u0.clone(), zero(), u2.clone(), u3.clone(), u4.clone()],
                [v1, zero(), zero(), zero()],
            )
        })
        .collect()
}

/// Member tangent to the plane `x = 0` along `Γ`.
pub fn plane_family_solve(r: &Scalar, u0: &Scalar, u1: &Scalar, v2: &Scalar, v3: &Scalar) -> Result<CircleFamilyVector> {
    if u0.is_zero() {
        return Err(CyclideError::Precondition("plane family needs u0 ≠ 0".into()));
    }
    let r2 = square(r);
    let v1 = (int(16) * square(&r2) * square(u0) + int(4) * &r2 * square(u1) - square(v2) - square(v3))
        / (int(8) * &r2 * u0);
    let zero = Scalar::zero;
    CircleFamilyVector::new(
        r.clone(),
        [u0.clone(), u1.clone(), zero(), zero(), zero()],
        [v1, v2.clone(), v3.clone(), int(2) * r2 * u1],
    )
}

/// How `Γ` sits on a torus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorusCase {
    /// `Γ` wraps around the tube.
    AroundTube,
    /// `Γ` wraps around the hole; carries `λ`.
    AroundHole(Scalar),
}

/// Recognizes tori among principal-component members, after scaling to
/// `u0 = 1`.
pub fn torus_recognize(v: &CircleFamilyVector) -> Result<Option<TorusCase>> {
    if !principal_test(v).is_member() {
        return Err(CyclideError::Precondition("vector is not in the principal component".into()));
    }
    let u0 = &v.u()[0];
    if u0.is_zero() {
        return Ok(None);
    }
    let w = v.scaled(&(Scalar::one() / u0))?;
    let [_, u1, u2, u3, u4] = w.u();
    let [v1, v2, v3, v4] = w.v();
    let r2 = square(w.r());
    if square(u2) + square(u3) == int(2) * u4 && *v1 == -u4 && [v2, v3, v4].iter().all(|c| c.is_zero()) {
        return Ok(Some(TorusCase::AroundTube));
    }
    if ![u2, u3, v2, v3].iter().all(|c| c.is_zero()) {
        return Ok(None);
    }
    let ConeParameter::Finite(lambda) = tangency_constant(&w) else {
        return Ok(None);
    };
    if lambda.is_zero() {
        return Ok(None);
    }
    let l2 = square(&lambda);
    let gap = &lambda - u1;
    let want_u4 = int(2) * &r2 * u1 * &gap / &l2;
    let want_v1 = (&l2 * square(u1) + int(4) * &r2 * square(&gap)) / (int(2) * &l2);
    if *u4 == want_u4 && *v1 == want_v1 && *v4 == &lambda * u4 {
        Ok(Some(TorusCase::AroundHole(lambda)))
    } else {
        Ok(None)
    }
}

/// Moves along the pencil spanned by `v` and
/// `(x² + y² + z² − r²)² + 4r²x²`.
pub fn villarceau_pencil(v: &CircleFamilyVector, t: &Scalar) -> Result<CircleFamilyVector> {
    let verdict = classify(v).verdict;
    if verdict != Verdict::VillarceauDupin {
        return Err(CyclideError::ComponentMismatch { verdict: verdict.to_string() });
    }
    let mut u = v.u().clone();
    let mut w = v.v().clone();
    u[0] += t;
    w[0] += int(2) * square(v.r()) * t;
    CircleFamilyVector::new(v.r().clone(), u, w)
}
