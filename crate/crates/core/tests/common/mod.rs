// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Seeded generators of component members shared by the integration tests.
#![allow(dead_code)]

use cyclide::scalar::{frac, int, square};
use cyclide::{CircleFamilyVector, Scalar};
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn q(n: i64, d: i64) -> Scalar {
    frac(n, d)
}

pub fn vector(r: (i64, i64), u: [(i64, i64); 5], v: [(i64, i64); 4]) -> CircleFamilyVector {
    CircleFamilyVector::from_fractions(r, u, v).unwrap()
}

const Z: (i64, i64) = (0, 1);

/// The twelve vectors of the six blended pairs, `r = 1`, as
/// `(panel, first, second)`.
pub fn demo_pairs() -> Vec<(&'static str, CircleFamilyVector, CircleFamilyVector)> {
    let one = (1, 1);
    let cyl = vector(one, [one, Z, (-3, 1), Z, (9, 2)], [(-9, 2), Z, Z, Z]);
    let e = |a: (i64, i64)| {
        let a = q(a.0, a.1);
        CircleFamilyVector::new(
            int(1),
            [int(1), a.clone(), int(0), int(0), int(0)],
            [(int(4) * square(&a) + int(15)) / int(8), int(1), int(0), int(2) * a],
        )
        .unwrap()
    };
    let f = |t: Scalar| {
        CircleFamilyVector::new(
            int(1),
            [int(1) + &t, int(0), int(1), int(0), q(12, 13)],
            [q(2, 13) + int(2) * &t, int(0), q(-10, 13), int(0)],
        )
        .unwrap()
    };
    vec![
        (
            "a",
            vector(one, [one, (-49, 30), Z, (76, 15), (323, 30)], [(-1669, 120), Z, (-76, 15), (-323, 30)]),
            vector(one, [one, (-2, 1), (-5, 1), Z, (17, 2)], [(-93, 8), (5, 1), Z, (-17, 2)]),
        ),
        ("b", cyl.clone(), vector(one, [one, Z, Z, (76, 15), (323, 30)], [(-361, 30), Z, Z, Z])),
        ("c", vector(one, [(17, 15), Z, (17, 3), Z, (85, 6)], [(-85, 6), Z, Z, Z]), cyl.clone()),
        ("d", vector(one, [one, Z, Z, Z, (-4, 1)], [(8, 1), Z, Z, Z]), cyl),
        ("e", e((1, 1)), e((9, 5))),
        ("f", f(int(0)), f(q(2, 5))),
    ]
}

/// Rational with numerator in `−num..=num` and denominator in `1..=den`.
pub fn rational<R: Rng>(rng: &mut R, num: i64, den: i64) -> Scalar {
    q(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn nonzero<R: Rng>(rng: &mut R, num: i64, den: i64) -> Scalar {
    loop {
        let x = rational(rng, num, den);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn positive<R: Rng>(rng: &mut R, num: i64, den: i64) -> Scalar {
    q(rng.gen_range(1..=num), rng.gen_range(1..=den))
}

/// `((1 − s²)/(1 + s²), 2s/(1 + s²))`, a rational point on the unit circle.
pub fn unit<R: Rng>(rng: &mut R) -> (Scalar, Scalar) {
    let s = rational(rng, 9, 7);
    let den = Scalar::one() + square(&s);
    ((Scalar::one() - square(&s)) / &den, int(2) * s / den)
}

pub fn rotate(v: &CircleFamilyVector, (c, s): &(Scalar, Scalar)) -> CircleFamilyVector {
    v.rotated_about_x(c, s).unwrap()
}

pub fn cone_member<R: Rng>(rng: &mut R, r: &Scalar, lambda: &Scalar) -> CircleFamilyVector {
    let u0 = nonzero(rng, 9, 5);
    let (u1, u2, u3) = (rational(rng, 9, 5), rational(rng, 9, 5), rational(rng, 9, 5));
    cyclide::cone_family_solve(r, lambda, &u0, &u1, &u2, &u3).unwrap()
}

/// Cylinder-family member with `v1` chosen first and `u0` solved
/// linearly; `cubic` forces `u0 = 0`.
pub fn cylinder_member<R: Rng>(rng: &mut R, r: &Scalar, cubic: bool) -> CircleFamilyVector {
    let r2 = square(r);
    if cubic {
        let (c, s) = unit(rng);
        let m = nonzero(rng, 9, 5);
        let (u2, u3) = (&m * c, &m * s);
        let u4 = rational(rng, 9, 5);
        let sign = if rng.gen_bool(0.5) { int(1) } else { int(-1) };
        // u2² + u3² = m², so v1 = −u4 ± r·m solves the quadratic at u0 = 0
        let v1 = -&u4 + sign * r * &m;
        return CircleFamilyVector::new(r.clone(), [int(0), int(0), u2, u3, u4], [v1, int(0), int(0), int(0)])
            .unwrap();
    }
    loop {
        let (u2, u3, u4) = (rational(rng, 9, 5), rational(rng, 9, 5), rational(rng, 9, 5));
        let v1 = nonzero(rng, 9, 5);
        let u0 = (square(&(&v1 + &u4)) - &r2 * (square(&u2) + square(&u3))) / (int(2) * &r2 * &v1);
        if !u0.is_zero() {
            return CircleFamilyVector::new(r.clone(), [u0, int(0), u2, u3, u4], [v1, int(0), int(0), int(0)])
                .unwrap();
        }
    }
}

pub fn plane_member<R: Rng>(rng: &mut R, r: &Scalar) -> CircleFamilyVector {
    let u0 = nonzero(rng, 9, 5);
    let (u1, v2, v3) = (rational(rng, 9, 5), rational(rng, 9, 5), rational(rng, 9, 5));
    cyclide::plane_family_solve(r, &u0, &u1, &v2, &v3).unwrap()
}

/// Villarceau-component member built from rational parametrizations of the
/// circle and line conditions, then rotated about the x-axis.
pub fn villarceau_member<R: Rng>(rng: &mut R, r: &Scalar, cubic: bool) -> CircleFamilyVector {
    let w = nonzero(rng, 9, 7);
    villarceau_like(rng, r, cubic, w)
}

/// Same construction with `gap = 0`.
pub fn horn_member<R: Rng>(rng: &mut R, r: &Scalar, cubic: bool) -> CircleFamilyVector {
    villarceau_like(rng, r, cubic, int(0))
}

fn villarceau_like<R: Rng>(rng: &mut R, r: &Scalar, cubic: bool, w: Scalar) -> CircleFamilyVector {
    let r2 = square(r);
    let m = nonzero(rng, 9, 5);
    let s = nonzero(rng, 9, 7);
    let one = Scalar::one();
    let a = (&one - square(&s)) / (int(2) * &s);
    let hyp = (&one + square(&s)) / (int(2) * &s);
    let wd = &one + square(&w);
    let u1 = &m * &a;
    let u4 = r * &m * (&one - square(&w)) / &wd;
    let root_gap = r * &m * int(2) * &w / &wd;
    let v2 = int(2) * &u1 * &u4 / &m;
    let v3 = int(2) * root_gap * hyp;
    let u0 = if cubic { int(0) } else { nonzero(rng, 9, 5) };
    let v1 = int(2) * &r2 * &u0 - int(2) * &u4;
    let v4 = int(2) * &r2 * &u1;
    let base = CircleFamilyVector::new(r.clone(), [u0, u1, m, int(0), u4], [v1, v2, v3, v4]).unwrap();
    rotate(&base, &unit(rng))
}

/// One of the principal generators, chosen uniformly.
pub fn principal_member<R: Rng>(rng: &mut R, r: &Scalar) -> CircleFamilyVector {
    match rng.gen_range(0..4) {
        0 | 1 => {
            let lambda = nonzero(rng, 9, 5);
            cone_member(rng, r, &lambda)
        }
        2 => {
            let cubic = rng.gen_bool(0.2);
            cylinder_member(rng, r, cubic)
        }
        _ => plane_member(rng, r),
    }
}

pub fn arbitrary_vector<R: Rng>(rng: &mut R, r: &Scalar) -> CircleFamilyVector {
    loop {
        let u = std::array::from_fn(|_| if rng.gen_bool(0.2) { int(0) } else { rational(rng, 9, 5) });
        let v = std::array::from_fn(|_| if rng.gen_bool(0.2) { int(0) } else { rational(rng, 9, 5) });
        if let Ok(x) = CircleFamilyVector::new(r.clone(), u, v) {
            return x;
        }
    }
}

/// `(S − r² + 2αx)²` up to the scale `k`.
pub fn double_sphere<R: Rng>(rng: &mut R, r: &Scalar) -> CircleFamilyVector {
    let alpha = rational(rng, 9, 5);
    let k = nonzero(rng, 9, 5);
    CircleFamilyVector::new(
        r.clone(),
        [k.clone(), int(2) * &alpha * &k, int(0), int(0), int(0)],
        [int(2) * square(&alpha) * &k, int(0), int(0), int(0)],
    )
    .unwrap()
}

/// Product of the sphere `S − r² + 2αx` (through `Γ`) with the sphere
/// `S + 2p·x + q`.
pub fn sphere_product(r: &Scalar, alpha: &Scalar, p: &[Scalar; 3], qc: &Scalar) -> CircleFamilyVector {
    let r2 = square(r);
    let half = (qc + &r2) / int(2);
    CircleFamilyVector::new(
        r.clone(),
        [int(1), &p[0] + alpha, p[1].clone(), p[2].clone(), half.clone()],
        [int(2) * alpha * &p[0], int(2) * alpha * &p[1], int(2) * alpha * &p[2], int(2) * alpha * half],
    )
    .unwrap()
}

/// Sphere through `Γ` times a sphere tangent to it.
pub fn touching_spheres<R: Rng>(rng: &mut R, r: &Scalar) -> CircleFamilyVector {
    let one = Scalar::one();
    let s = nonzero(rng, 9, 7);
    // r² + α² = ρ1² with ρ1 rational
    let alpha = r * (&one - square(&s)) / (int(2) * &s);
    let rho1 = r * (&one + square(&s)) / (int(2) * &s);
    let rho1 = if rho1 < Scalar::zero() { -rho1 } else { rho1 };
    let (a, b) = (rational(rng, 9, 7), rational(rng, 9, 7));
    let den = &one + square(&a) + square(&b);
    let d = [(&one - square(&a) - square(&b)) / &den, int(2) * &a / &den, int(2) * &b / &den];
    let rho2 = positive(rng, 9, 5);
    let dist = if rng.gen_bool(0.5) { &rho1 + &rho2 } else { &rho1 - &rho2 };
    // centre of the first sphere is (−α, 0, 0)
    let c2 = [-&alpha + &dist * &d[0], &dist * &d[1], &dist * &d[2]];
    let p = c2.clone().map(|c| -c);
    let qc = c2.iter().map(square).fold(Scalar::zero(), |a, b| a + b) - square(&rho2);
    sphere_product(r, &alpha, &p, &qc)
}
