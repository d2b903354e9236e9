// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Classification of circle-family vectors into the Villarceau component,
//! the principal component, and the degenerate loci.
//!
//! Rank conditions are decided from exhaustive exact 2×2 minors. Minors of
//! `M` formed only within rows 1–3 or only within rows 7–9 are skipped:
//! they are multiples of the minors of `N`.

use std::fmt;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::coefficients::CircleFamilyVector;
use crate::error::{CyclideError, Result};
use crate::scalar::{format_scalar, int, rational_sqrt, square, Scalar};

/// A two-column matrix stored row by row.
pub type TwoColumn<const ROWS: usize> = [[Scalar; 2]; ROWS];

/// One 2×2 minor, rows numbered from 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub rows: (usize, usize),
    pub value: Scalar,
}

fn minor(a: &[Scalar; 2], b: &[Scalar; 2]) -> Scalar {
    &a[0] * &b[1] - &b[0] * &a[1]
}

fn all_minors<const ROWS: usize>(m: &TwoColumn<ROWS>, skip: impl Fn(usize, usize) -> bool) -> Vec<Minor> {
    let mut out = Vec::new();
    for i in 0..ROWS {
        for j in i + 1..ROWS {
            if skip(i, j) {
                continue;
            }
            out.push(Minor { rows: (i + 1, j + 1), value: minor(&m[i], &m[j]) });
        }
    }
    out
}

/// Rank (0, 1 or 2) of a two-column matrix from its entries and minors.
pub fn rank_by_minors<const ROWS: usize>(m: &TwoColumn<ROWS>) -> u8 {
    if m.iter().flatten().all(Zero::is_zero) {
        0
    } else if all_minors(m, |_, _| false).iter().all(|x| x.value.is_zero()) {
        1
    } else {
        2
    }
}

/// The 3×2 matrix `N` with columns `(u2, u3, u4)` and `(v2, v3, v4)`.
pub fn n_matrix(v: &CircleFamilyVector) -> TwoColumn<3> {
    let [_, _, u2, u3, u4] = v.u();
    let [_, v2, v3, v4] = v.v();
    [[u2.clone(), v2.clone()], [u3.clone(), v3.clone()], [u4.clone(), v4.clone()]]
}

/// The 9×2 matrix `M` of the principal-circle rank condition.
pub fn m_matrix(v: &CircleFamilyVector) -> TwoColumn<9> {
    let [u0, u1, u2, u3, u4] = v.u();
    let [v1, v2, v3, v4] = v.v();
    let r2 = square(v.r());
    let r4 = square(&r2);
    let (two, four, eight) = (int(2), int(4), int(8));
    let q = v4 - &two * &r2 * u1;
    let w = v1 + u4 - &two * &r2 * u0;
    let tail = |ui: &Scalar, vi: &Scalar| -(&eight * &r4 * u1 * ui) - &four * &r2 * vi * &w;
    [
        [u2.clone(), v2 * &q],
        [u3.clone(), v3 * &q],
        [u4.clone(), v4 * &q],
        [&two * u0, square(v2) + square(v3) - &four * &r2 * square(u1)],
        [
            u1.clone(),
            &four * &r2 * u0 * v4 - &two * &r2 * (u2 * v2 + u3 * v3) - &four * &r2 * u1 * (v1 + u4),
        ],
        [
            v1.clone(),
            &four * &r4 * (square(u2) + square(u3) + &two * u0 * v1) - &four * &r2 * square(&(v1 + u4)) - square(&q),
        ],
        [v2.clone(), tail(u2, v2)],
        [v3.clone(), tail(u3, v3)],
        [v4.clone(), tail(u4, v4)],
    ]
}

/// The 6×2 matrix `L` describing touching-sphere degenerations.
pub fn l_matrix(v: &CircleFamilyVector) -> TwoColumn<6> {
    let [u0, u1, u2, u3, u4] = v.u();
    let [v1, v2, v3, v4] = v.v();
    let two = int(2);
    let row = |ui: &Scalar, vi: &Scalar| [u0 * vi, &two * (u1 * vi - ui * v1)];
    [
        [u2.clone(), v2.clone()],
        [u3.clone(), v3.clone()],
        [u4.clone(), v4.clone()],
        row(u2, v2),
        row(u3, v3),
        row(u4, v4),
    ]
}

/// Residuals of the Villarceau-component equations and the strict
/// inequality slack `gap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VillarceauWitness {
    pub r1: Scalar,
    pub r2: Scalar,
    pub r3: Scalar,
    pub r4: Scalar,
    pub gap: Scalar,
}

impl VillarceauWitness {
    pub fn equalities_hold(&self) -> bool {
        [&self.r1, &self.r2, &self.r3, &self.r4].iter().all(|x| x.is_zero())
    }

    pub fn is_member(&self) -> bool {
        self.equalities_hold() && self.gap.is_positive()
    }

    pub fn is_horn_boundary(&self) -> bool {
        self.equalities_hold() && self.gap.is_zero()
    }
}

pub fn villarceau_test(v: &CircleFamilyVector) -> VillarceauWitness {
    let [u0, u1, u2, u3, u4] = v.u();
    let [v1, v2, v3, v4] = v.v();
    let r2 = square(v.r());
    let (two, four) = (int(2), int(4));
    VillarceauWitness {
        r1: v4 - &two * &r2 * u1,
        r2: v1 + &two * u4 - &two * &r2 * u0,
        r3: u2 * v2 + u3 * v3 - &two * u1 * u4,
        r4: &four * &r2 * (square(u1) + square(u2) + square(u3)) - &four * square(u4) - square(v2) - square(v3),
        gap: &r2 * (square(u2) + square(u3)) - square(u4),
    }
}

/// Minors of `N` and the retained minors of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalWitness {
    pub t2: Scalar,
    pub t3: Scalar,
    pub t4: Scalar,
    pub minors_m: Vec<Minor>,
    pub big_u0: Scalar,
}

impl PrincipalWitness {
    pub fn is_member(&self) -> bool {
        [&self.t2, &self.t3, &self.t4].iter().all(|x| x.is_zero()) && self.minors_m.iter().all(|m| m.value.is_zero())
    }
}

pub fn principal_test(v: &CircleFamilyVector) -> PrincipalWitness {
    let [_, u1, u2, u3, u4] = v.u();
    let [_, v2, v3, v4] = v.v();
    let m = m_matrix(v);
    PrincipalWitness {
        t2: u3 * v4 - u4 * v3,
        t3: u2 * v4 - u4 * v2,
        t4: u2 * v3 - u3 * v2,
        minors_m: all_minors(&m, |i, j| (i < 3 && j < 3) || (i >= 6 && j >= 6)),
        big_u0: square(u1) + square(u2) + square(u3),
    }
}

/// Touching-sphere and circle degenerations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegenerateWitness {
    pub minors_l: Vec<Minor>,
    pub touch_residual: Scalar,
    pub rank_l: u8,
    /// `u1 = 0`
    pub u1_vanishes: bool,
    /// `v1 − 2r²u0 = 0`
    pub v1_on_circle: bool,
}

impl DegenerateWitness {
    pub fn is_touching_spheres(&self) -> bool {
        self.rank_l <= 1 && self.touch_residual.is_zero()
    }

    pub fn is_circle(&self) -> bool {
        self.rank_l == 0 && self.u1_vanishes && self.v1_on_circle
    }
}

pub fn degenerate_test(v: &CircleFamilyVector) -> DegenerateWitness {
    let [u0, u1, u2, u3, u4] = v.u();
    let [v1, v2, v3, v4] = v.v();
    let r2 = square(v.r());
    let (two, four, eight) = (int(2), int(4), int(8));
    let l = l_matrix(v);
    DegenerateWitness {
        minors_l: all_minors(&l, |_, _| false),
        touch_residual: &four * &r2 * (square(u1) + square(u2) + square(u3)) + square(v2) + square(v3)
            - &eight * v1 * (&r2 * u0 - u4)
            - &four * v4 * u1
            - &four * square(u4),
        rank_l: rank_by_minors(&l),
        u1_vanishes: u1.is_zero(),
        v1_on_circle: (v1 - &two * &r2 * u0).is_zero(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    VillarceauDupin,
    PrincipalDupin,
    HornBoundary,
    TouchingSpheresDegenerate,
    CircleDegenerate,
    DoubleSphereDegenerate,
    Outside,
}

impl Verdict {
    /// Verdicts for which an invariant is defined.
    pub fn is_dupin(self) -> bool {
        matches!(self, Verdict::VillarceauDupin | Verdict::PrincipalDupin | Verdict::HornBoundary)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentVerdict {
    pub verdict: Verdict,
    pub villarceau: VillarceauWitness,
    pub principal: PrincipalWitness,
    pub degenerate: DegenerateWitness,
}

impl ComponentVerdict {
    /// JSON audit record with every witness residual as an exact string.
    pub fn to_json(&self) -> serde_json::Value {
        let s = format_scalar;
        let minors = |ms: &[Minor]| {
            ms.iter()
                .map(|m| serde_json::json!({"rows": [m.rows.0, m.rows.1], "value": s(&m.value)}))
                .collect::<Vec<_>>()
        };
        let vw = &self.villarceau;
        let pw = &self.principal;
        let dw = &self.degenerate;
        serde_json::json!({
            "verdict": self.verdict.to_string(),
            "villarceau": {
                "r1": s(&vw.r1), "r2": s(&vw.r2), "r3": s(&vw.r3), "r4": s(&vw.r4), "gap": s(&vw.gap),
                "member": vw.is_member(),
            },
            "principal": {
                "T2": s(&pw.t2), "T3": s(&pw.t3), "T4": s(&pw.t4), "U0": s(&pw.big_u0),
                "minorsM": minors(&pw.minors_m),
                "member": pw.is_member(),
            },
            "degenerate": {
                "minorsL": minors(&dw.minors_l),
                "touchResidual": s(&dw.touch_residual),
                "rankL": dw.rank_l,
                "u1Zero": dw.u1_vanishes,
                "v1OnCircle": dw.v1_on_circle,
            },
        })
    }
}

/// Classifies a vector. Overlaps between loci are resolved in the order
/// circle, double sphere, touching spheres, Villarceau, horn boundary,
/// principal.
pub fn classify(v: &CircleFamilyVector) -> ComponentVerdict {
    let villarceau = villarceau_test(v);
    let principal = principal_test(v);
    let degenerate = degenerate_test(v);
    let verdict = if degenerate.is_circle() {
        Verdict::CircleDegenerate
    } else if degenerate.rank_l == 0 && principal.is_member() {
        Verdict::DoubleSphereDegenerate
    } else if degenerate.is_touching_spheres() {
        Verdict::TouchingSpheresDegenerate
    } else if villarceau.is_member() {
        Verdict::VillarceauDupin
    } else if villarceau.is_horn_boundary() {
        Verdict::HornBoundary
    } else if principal.is_member() && degenerate.rank_l == 2 {
        Verdict::PrincipalDupin
    } else {
        Verdict::Outside
    };
    ComponentVerdict { verdict, villarceau, principal, degenerate }
}

/// Completes `(u0, …, u4)` to every rational Villarceau-component vector.
///
/// `v4` and `v1` are forced; `(v2, v3)` is the intersection of the line
/// `u2 v2 + u3 v3 = 2 u1 u4` with the circle
/// `v2² + v3² = 4r²(u1² + u2² + u3²) − 4u4²`. The discriminant of that
/// intersection is `4 · gap · (u1² + u2² + u3²)`.
pub fn villarceau_complete(r: &Scalar, u: &[Scalar; 5]) -> Result<Vec<CircleFamilyVector>> {
    let [u0, u1, u2, u3, u4] = u;
    let n2 = square(u2) + square(u3);
    if n2.is_zero() {
        return Err(CyclideError::Precondition("(u2, u3) must not both vanish".into()));
    }
    let r2 = square(r);
    let (two, four) = (int(2), int(4));
    let v4 = &two * &r2 * u1;
    let v1 = &two * &r2 * u0 - &two * u4;
    let along = &two * u1 * u4;
    let radius2 = &four * &r2 * (square(u1) + &n2) - &four * square(u4);
    let discriminant = &radius2 * &n2 - square(&along);
    if discriminant.is_negative() {
        return Err(CyclideError::NoRealSolution { discriminant });
    }
    let root = rational_sqrt(&discriminant).ok_or_else(|| CyclideError::NonRationalSolution {
        discriminant: discriminant.clone(),
    })?;
    let foot = [&along * u2 / &n2, &along * u3 / &n2];
    let step = &root / &n2;
    let signs: &[i64] = if root.is_zero() { &[1] } else { &[1, -1] };
    signs
        .iter()
        .map(|&sign| {
            let s = &step * int(sign);
            let v2 = &foot[0] - &s * u3;
            let v3 = &foot[1] + &s * u2;
            CircleFamilyVector::new(r.clone(), u.clone(), [v1.clone(), v2, v3, v4.clone()])
        })
        .collect()
}

/// Torus with minor radius `r` (the circle) and major radius `major`, placed
/// so that `Γ` is one of its meridian circles.
pub fn representative_principal_torus(r: &Scalar, major: &Scalar) -> Result<CircleFamilyVector> {
    if !(r.is_positive() && r < major) {
        return Err(CyclideError::Precondition("need 0 < r < R".into()));
    }
    let two = int(2);
    let zero = Scalar::zero;
    CircleFamilyVector::new(
        r.clone(),
        [int(1), zero(), -(&two * major), zero(), &two * square(major)],
        [-(&two * square(major)), zero(), zero(), zero()],
    )
}

/// Torus with major radius `r` and minor radius `b`, placed so that `Γ` is
/// one of its Villarceau circles. Needs `r² − b²` to be a rational square.
pub fn representative_villarceau_torus(r: &Scalar, b: &Scalar) -> Result<CircleFamilyVector> {
    if !(b.is_positive() && b < r) {
        return Err(CyclideError::Precondition("need 0 < b < r".into()));
    }
    let w2 = square(r) - square(b);
    let w = rational_sqrt(&w2).ok_or(CyclideError::NonRationalSolution { discriminant: w2 })?;
    let (two, four) = (int(2), int(4));
    let zero = Scalar::zero;
    CircleFamilyVector::new(
        r.clone(),
        [int(1), zero(), -(&two * b), zero(), &two * square(b)],
        [&two * square(r) - &four * square(b), zero(), -(&four * b * w), zero()],
    )
}
