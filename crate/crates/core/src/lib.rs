// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact arithmetic for Dupin cyclides that contain a fixed circle
//! `Γ: x = 0, y² + z² = r²`.
//!
//! Vectors of the circle family are classified into the Villarceau and
//! principal components ([`components`]), joined smoothly along `Γ`
//! ([`blending`]), and measured by the Möbius invariant `J0`
//! ([`invariants`]). Everything upstream of the mesher is exact.

pub mod blending;
pub mod coefficients;
pub mod components;
pub mod conditions;
pub mod error;
pub mod invariants;
pub mod io;
pub mod mesh;
pub mod polynomial;
pub mod scalar;

pub use blending::{
    blend_check, cone_family_solve, cylinder_family_solve, envelope, plane_family_solve, tangency_constant,
    torus_recognize, villarceau_pencil, ConeParameter, EnvelopeKind, EnvelopeSurface, TangencyFunction, TorusCase,
};
pub use components::{
    classify, degenerate_test, principal_test, representative_principal_torus, representative_villarceau_torus,
    villarceau_complete, villarceau_test, ComponentVerdict, Verdict,
};
pub use conditions::{cubic_dupin_conditions, quartic_dupin_conditions};
pub use coefficients::{contains_circle, expand, to_intermediate, CircleFamilyVector, DarbouxQuartic, IntermediateDarboux};
pub use error::{CyclideError, Result};
pub use invariants::{j0, j0_principal, j0_torus, j0_villarceau, J0Value, Smoothness, TorusParams};
pub use mesh::{mesh, BoundingBox, TriangleMesh};
pub use polynomial::{FloatPolynomial, TrivariatePolynomial};
pub use scalar::Scalar;
