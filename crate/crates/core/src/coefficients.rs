// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Coefficient types for Darboux cyclides and the conversions between them.
//!
//! The circle `Γ` is fixed as `x = 0, y² + z² = r²`. Every Darboux cyclide
//! through `Γ` has an equation
//!
//! ```text
//! u0 (S − r²)² + 2 (S − r²)(u1 x + u2 y + u3 z + u4) + 2x (v1 x + v2 y + v3 z + v4) = 0,
//! ```
//!
//! with `S = x² + y² + z²`, so it is described by a projective point
//! `[u0, …, u4; v1, …, v4]` together with the radius `r`
//! ([`CircleFamilyVector`]). The general Darboux form is
//! [`DarbouxQuartic`]; after scaling to `a0 = 1` and translating away the
//! cubic terms it becomes an [`IntermediateDarboux`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CyclideError, Result};
use crate::polynomial::TrivariatePolynomial;
use crate::scalar::{format_scalar, int, parse_scalar, square, Scalar};

/// Projective coefficient vector of a Darboux cyclide through `Γ`.
///
/// `u[k]` holds `u_k` for `k = 0..=4`, `v[k]` holds `v_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "VectorRecord", into = "VectorRecord")]
pub struct CircleFamilyVector {
    r: Scalar,
    u: [Scalar; 5],
    v: [Scalar; 4],
}

impl CircleFamilyVector {
    pub fn new(r: Scalar, u: [Scalar; 5], v: [Scalar; 4]) -> Result<Self> {
        if !r.is_positive() {
            return Err(CyclideError::InvalidVector(format!(
                "radius must be positive, got {}",
                format_scalar(&r)
            )));
        }
        if u.iter().chain(v.iter()).all(Zero::is_zero) {
            return Err(CyclideError::InvalidVector("all coordinates are zero".into()));
        }
        Ok(Self { r, u, v })
    }

    /// Builds a vector from small integer fractions `(num, den)`; handy in tests.
    pub fn from_fractions(r: (i64, i64), u: [(i64, i64); 5], v: [(i64, i64); 4]) -> Result<Self> {
        let f = |(n, d): (i64, i64)| crate::scalar::frac(n, d);
        Self::new(f(r), u.map(f), v.map(f))
    }

    pub fn r(&self) -> &Scalar {
        &self.r
    }

    pub fn u(&self) -> &[Scalar; 5] {
        &self.u
    }

    pub fn v(&self) -> &[Scalar; 4] {
        &self.v
    }

    /// The nine projective coordinates `u0..u4, v1..v4` in order.
    pub fn coordinates(&self) -> impl Iterator<Item = &Scalar> {
        self.u.iter().chain(self.v.iter())
    }

    /// `s · v`; `s` must be nonzero.
    pub fn scaled(&self, s: &Scalar) -> Result<Self> {
        Self::new(self.r.clone(), self.u.clone().map(|c| c * s), self.v.clone().map(|c| c * s))
    }

    /// Rotation about the x-axis by the rational rotation `(cos, sin)`,
    /// acting on the pairs `(u2, u3)` and `(v2, v3)`.
    pub fn rotated_about_x(&self, cos: &Scalar, sin: &Scalar) -> Result<Self> {
        if square(cos) + square(sin) != Scalar::one() {
            return Err(CyclideError::Precondition("cos² + sin² must equal 1".into()));
        }
        let turn = |a: &Scalar, b: &Scalar| (cos * a - sin * b, sin * a + cos * b);
        let mut out = self.clone();
        let (u2, u3) = turn(&self.u[2], &self.u[3]);
        let (v2, v3) = turn(&self.v[1], &self.v[2]);
        out.u[2] = u2;
        out.u[3] = u3;
        out.v[1] = v2;
        out.v[2] = v3;
        Ok(out)
    }

    /// Canonical projective representative: integer coordinates with content 1
    /// and a positive first nonzero coordinate. The radius is unchanged.
    pub fn normalize(&self) -> Self {
        let denominators = self.coordinates().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut ints: Vec<BigInt> = self
            .coordinates()
            .map(|c| (c * Scalar::from_integer(denominators.clone())).to_integer())
            .collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        let leading_negative = ints.iter().find(|n| !n.is_zero()).is_some_and(Signed::is_negative);
        for n in &mut ints {
            *n = &*n / &content;
            if leading_negative {
                *n = -&*n;
            }
        }
        let as_scalar = |n: &BigInt| Scalar::from_integer(n.clone());
        Self {
            r: self.r.clone(),
            u: std::array::from_fn(|k| as_scalar(&ints[k])),
            v: std::array::from_fn(|k| as_scalar(&ints[5 + k])),
        }
    }

    /// True when `self` and `other` are the same projective point with the
    /// same radius.
    pub fn projectively_equal(&self, other: &Self) -> bool {
        self.r == other.r && self.normalize() == other.normalize()
    }

    pub fn to_darboux(&self) -> DarbouxQuartic {
        expand(self)
    }

    pub fn polynomial(&self) -> TrivariatePolynomial {
        expand(self).polynomial()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("vector serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CyclideError::Parse(e.to_string()))
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorRecord {
    r: String,
    u: [String; 5],
    v: [String; 4],
}

impl From<CircleFamilyVector> for VectorRecord {
    fn from(vector: CircleFamilyVector) -> Self {
        VectorRecord {
            r: format_scalar(&vector.r),
            u: vector.u.each_ref().map(format_scalar),
            v: vector.v.each_ref().map(format_scalar),
        }
    }
}

impl TryFrom<VectorRecord> for CircleFamilyVector {
    type Error = CyclideError;

    fn try_from(record: VectorRecord) -> Result<Self> {
        let parse_all = |items: &[String]| items.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>>>();
        let u = parse_all(&record.u)?;
        let v = parse_all(&record.v)?;
        CircleFamilyVector::new(
            parse_scalar(&record.r)?,
            u.try_into().expect("five entries"),
            v.try_into().expect("four entries"),
        )
    }
}

/// Coefficients of the general Darboux form
///
/// ```text
/// a0 S² + 2(b1 x + b2 y + b3 z) S + c1 x² + c2 y² + c3 z²
///   + 2 d1 yz + 2 d2 xz + 2 d3 xy + 2(e1 x + e2 y + e3 z) + f0 = 0.
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxQuartic {
    pub a0: Scalar,
    pub b: [Scalar; 3],
    pub c: [Scalar; 3],
    pub d: [Scalar; 3],
    pub e: [Scalar; 3],
    pub f0: Scalar,
}

impl DarbouxQuartic {
    pub fn is_zero(&self) -> bool {
        self.a0.is_zero()
            && self.f0.is_zero()
            && [&self.b, &self.c, &self.d, &self.e].iter().all(|t| t.iter().all(Zero::is_zero))
    }

    /// Reads the Darboux coefficients off a polynomial. Returns `None` when the
    /// polynomial is not of Darboux shape.
    pub fn from_polynomial(p: &TrivariatePolynomial) -> Option<Self> {
        let half = |m| p.coeff(m) / int(2);
        let q = DarbouxQuartic {
            a0: p.coeff([4, 0, 0]),
            b: [half([3, 0, 0]), half([0, 3, 0]), half([0, 0, 3])],
            c: [p.coeff([2, 0, 0]), p.coeff([0, 2, 0]), p.coeff([0, 0, 2])],
            d: [half([0, 1, 1]), half([1, 0, 1]), half([1, 1, 0])],
            e: [half([1, 0, 0]), half([0, 1, 0]), half([0, 0, 1])],
            f0: p.coeff([0, 0, 0]),
        };
        (q.polynomial() == *p).then_some(q)
    }

    pub fn polynomial(&self) -> TrivariatePolynomial {
        let mut p = TrivariatePolynomial::zero();
        let two = int(2);
        // a0 S² = a0 (x⁴ + y⁴ + z⁴ + 2x²y² + 2x²z² + 2y²z²)
        for (m, k) in [
            ([4, 0, 0], 1),
            ([0, 4, 0], 1),
            ([0, 0, 4], 1),
            ([2, 2, 0], 2),
            ([2, 0, 2], 2),
            ([0, 2, 2], 2),
        ] {
            p.add_term(m, &self.a0 * int(k));
        }
        // 2 b_i x_i S
        let unit = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (i, bi) in self.b.iter().enumerate() {
            for j in 0..3 {
                let mut m = unit[i];
                m[j] += 2;
                p.add_term(m, bi * &two);
            }
        }
        p.add_term([2, 0, 0], self.c[0].clone());
        p.add_term([0, 2, 0], self.c[1].clone());
        p.add_term([0, 0, 2], self.c[2].clone());
        p.add_term([0, 1, 1], &self.d[0] * &two);
        p.add_term([1, 0, 1], &self.d[1] * &two);
        p.add_term([1, 1, 0], &self.d[2] * &two);
        for (i, ei) in self.e.iter().enumerate() {
            p.add_term(unit[i], ei * &two);
        }
        p.add_term([0, 0, 0], self.f0.clone());
        p
    }

    /// Scales to `a0 = 1` and translates by `−b/2`, which removes the cubic
    /// terms.
    pub fn to_intermediate(&self) -> Result<IntermediateDarboux> {
        if self.a0.is_zero() {
            return Err(CyclideError::CubicInput);
        }
        let inv = self.a0.recip();
        let sc = |t: &[Scalar; 3]| t.clone().map(|x| x * &inv);
        let (c, d, e, f0) = (sc(&self.c), sc(&self.d), sc(&self.e), &self.f0 * &inv);
        let h = sc(&self.b).map(|x| x / int(2));
        let hh: Scalar = h.iter().map(square).sum();
        let two = int(2);
        let four = int(4);
        // symmetric matrix of the quadratic part
        let m = [
            [&c[0], &d[2], &d[1]],
            [&d[2], &c[1], &d[0]],
            [&d[1], &d[0], &c[2]],
        ];
        let mh: [Scalar; 3] = std::array::from_fn(|i| (0..3).map(|j| m[i][j] * &h[j]).sum());
        let h_m_h: Scalar = (0..3).map(|i| &h[i] * &mh[i]).sum();
        let e_h: Scalar = (0..3).map(|i| &e[i] * &h[i]).sum();
        Ok(IntermediateDarboux {
            c: std::array::from_fn(|i| &c[i] - &two * &hh - &four * square(&h[i])),
            d: [
                &d[0] - &four * &h[1] * &h[2],
                &d[1] - &four * &h[0] * &h[2],
                &d[2] - &four * &h[0] * &h[1],
            ],
            e: std::array::from_fn(|i| &e[i] - &mh[i] + &four * &hh * &h[i]),
            f0: f0 - int(3) * square(&hh) + h_m_h - two * e_h,
        })
    }
}

/// Quartic with leading part `S²` and no cubic terms:
///
/// ```text
/// S² + c1 x² + c2 y² + c3 z² + 2 d1 yz + 2 d2 xz + 2 d3 xy + 2(e1 x + e2 y + e3 z) + f0 = 0.
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntermediateDarboux {
    pub c: [Scalar; 3],
    pub d: [Scalar; 3],
    pub e: [Scalar; 3],
    pub f0: Scalar,
}

impl IntermediateDarboux {
    pub fn to_darboux(&self) -> DarbouxQuartic {
        let zero = || Scalar::zero();
        DarbouxQuartic {
            a0: Scalar::one(),
            b: [zero(), zero(), zero()],
            c: self.c.clone(),
            d: self.d.clone(),
            e: self.e.clone(),
            f0: self.f0.clone(),
        }
    }

    pub fn polynomial(&self) -> TrivariatePolynomial {
        self.to_darboux().polynomial()
    }
}

/// Expands the circle-family equation into general Darboux coefficients.
pub fn expand(vector: &CircleFamilyVector) -> DarbouxQuartic {
    let [u0, u1, u2, u3, u4] = vector.u();
    let [v1, v2, v3, v4] = vector.v();
    let r2 = square(vector.r());
    let two = int(2);
    let base = &two * u4 - &two * &r2 * u0;
    DarbouxQuartic {
        a0: u0.clone(),
        b: [u1.clone(), u2.clone(), u3.clone()],
        c: [&base + &two * v1, base.clone(), base],
        d: [Scalar::zero(), v3.clone(), v2.clone()],
        e: [v4 - &r2 * u1, -(&r2 * u2), -(&r2 * u3)],
        f0: square(&r2) * u0 - &two * &r2 * u4,
    }
}

/// Whether the quartic vanishes on the circle `x = 0, y² + z² = r²`.
///
/// Sets `x = 0`, rewrites `z² = r² − y²` and checks that the normal form
/// `p(y) + z q(y)` is zero.
pub fn contains_circle(q: &DarbouxQuartic, r: &Scalar) -> bool {
    let y = TrivariatePolynomial::y();
    let z = TrivariatePolynomial::z();
    let z_squared = &TrivariatePolynomial::constant(square(r)) - &(&y * &y);
    let mut reduced = TrivariatePolynomial::zero();
    for (m, c) in q.polynomial().terms() {
        if m[0] != 0 {
            continue;
        }
        let mut term = TrivariatePolynomial::term([0, m[1], 0], c.clone());
        if m[2] % 2 == 1 {
            term = &term * &z;
        }
        term = &term * &z_squared.pow(m[2] / 2);
        reduced = &reduced + &term;
    }
    reduced.is_zero()
}

/// Intermediate form of the cyclide, via the closed-form shift of the
/// circle-family coefficients (after dividing by `u0`).
pub fn to_intermediate(vector: &CircleFamilyVector) -> Result<IntermediateDarboux> {
    let u0 = &vector.u()[0];
    if u0.is_zero() {
        return Err(CyclideError::CubicInput);
    }
    let [_, u1, u2, u3, u4] = vector.u().clone().map(|c| c / u0);
    let [v1, v2, v3, v4] = vector.v().clone().map(|c| c / u0);
    let r2 = square(vector.r());
    let (two, half) = (int(2), crate::scalar::frac(1, 2));
    let big_u = square(&u1) + square(&u2) + square(&u3);
    let half_u = &big_u * &half;
    let lin = &big_u - &two * &u4;
    let uv = &u2 * &v2 + &u3 * &v3;
    Ok(IntermediateDarboux {
        c: [
            &two * (&u4 + &v1 - &r2) - square(&u1) - &half_u,
            &two * (&u4 - &r2) - square(&u2) - &half_u,
            &two * (&u4 - &r2) - square(&u3) - &half_u,
        ],
        d: [-(&u2 * &u3), &v3 - &u1 * &u3, &v2 - &u1 * &u2],
        e: [
            -(&two * &u1 * &v1 + &uv - &two * &v4 - &u1 * &lin) * &half,
            -(&u1 * &v2 - &u2 * &lin) * &half,
            -(&u1 * &v3 - &u3 * &lin) * &half,
        ],
        f0: -(int(3) * square(&big_u)) / int(16)
            + (&big_u * (&u4 + &r2) + &u1 * (&u1 * &v1 + &uv - &two * &v4)) * &half
            - &two * &r2 * &u4
            + square(&r2),
    })
}
