// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Necessary conditions for a Darboux cyclide to be a Dupin cyclide.
//!
//! The quartic test works on the intermediate form (no cubic terms, leading
//! coefficient 1) and evaluates twelve polynomials; the cubic test works on
//! the general form with `a0 = 0`. Both return every residual so callers can
//! see which relation fails. Vanishing is necessary, not sufficient.

use num_traits::Zero;

use crate::coefficients::{DarbouxQuartic, IntermediateDarboux};
use crate::error::{CyclideError, Result};
use crate::scalar::{int, square, Scalar};

/// Index permutation applied simultaneously to `b, c, d, e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Swap {
    Identity,
    /// Exchanges indices 1 and 2.
    OneTwo,
    /// Exchanges indices 1 and 3.
    OneThree,
}

impl Swap {
    pub fn apply(self, t: &[Scalar; 3]) -> [Scalar; 3] {
        let [a, b, c] = t.clone();
        match self {
            Swap::Identity => [a, b, c],
            Swap::OneTwo => [b, a, c],
            Swap::OneThree => [c, b, a],
        }
    }

    pub fn apply_quartic(self, q: &DarbouxQuartic) -> DarbouxQuartic {
        DarbouxQuartic {
            a0: q.a0.clone(),
            b: self.apply(&q.b),
            c: self.apply(&q.c),
            d: self.apply(&q.d),
            e: self.apply(&q.e),
            f0: q.f0.clone(),
        }
    }

    pub fn apply_intermediate(self, q: &IntermediateDarboux) -> IntermediateDarboux {
        IntermediateDarboux {
            c: self.apply(&q.c),
            d: self.apply(&q.d),
            e: self.apply(&q.e),
            f0: q.f0.clone(),
        }
    }
}

/// Symmetric expressions in the Darboux coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Aggregates {
    pub b0: Scalar,
    pub c0: Scalar,
    pub e0: Scalar,
    pub w1: Scalar,
    pub w2: Scalar,
    pub w3: Scalar,
    pub w4: Scalar,
}

impl Aggregates {
    pub fn of(q: &DarbouxQuartic) -> Self {
        let [b1, b2, b3] = &q.b;
        let [c1, c2, c3] = &q.c;
        let [d1, d2, d3] = &q.d;
        let [e1, e2, e3] = &q.e;
        let two = int(2);
        Aggregates {
            b0: square(b1) + square(b2) + square(b3),
            c0: c1 + c2 + c3,
            e0: square(e1) + square(e2) + square(e3),
            w1: c1 * c2 + c1 * c3 + c2 * c3 - square(d1) - square(d2) - square(d3),
            w2: c1 * c2 * c3 + &two * d1 * d2 * d3 - c1 * square(d1) - c2 * square(d2) - c3 * square(d3),
            w3: square(b1) * c1
                + square(b2) * c2
                + square(b3) * c3
                + &two * b2 * b3 * d1
                + &two * b1 * b3 * d2
                + &two * b1 * b2 * d3,
            w4: c1 * square(e1)
                + c2 * square(e2)
                + c3 * square(e3)
                + &two * d1 * e2 * e3
                + &two * d2 * e1 * e3
                + &two * d3 * e1 * e2,
        }
    }

    pub fn of_intermediate(q: &IntermediateDarboux) -> Self {
        Self::of(&q.to_darboux())
    }
}

/// Residuals of the twelve quartic relations. Index 0 of `k`, `l`, `m` is
/// the base polynomial, index 1 its image under [`Swap::OneTwo`], index 2
/// under [`Swap::OneThree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticConditionReport {
    pub k: [Scalar; 3],
    pub l: [Scalar; 3],
    pub m: [Scalar; 3],
    pub n: [Scalar; 3],
    pub all_vanish: bool,
}

impl QuarticConditionReport {
    /// `(name, residual)` pairs in a fixed order.
    pub fn residuals(&self) -> Vec<(String, &Scalar)> {
        let mut out = Vec::with_capacity(12);
        for (name, group) in [("K", &self.k), ("L", &self.l), ("M", &self.m), ("N", &self.n)] {
            for (i, value) in group.iter().enumerate() {
                out.push((format!("{name}{}", i + 1), value));
            }
        }
        out
    }
}

fn klm(q: &IntermediateDarboux, agg: &Aggregates, f0: &Scalar) -> [Scalar; 3] {
    let [c1, c2, c3] = &q.c;
    let [d1, d2, d3] = &q.d;
    let [e1, e2, e3] = &q.e;
    let (c0, w1, w2, e0) = (&agg.c0, &agg.w1, &agg.w2, &agg.e0);
    let two = int(2);
    let four = int(4);
    let w1f = w1 + &four * f0;
    let k = (c3 - c2) * e2 * e3 + d1 * (square(e2) - square(e3)) + (d2 * e2 - d3 * e3) * e1;
    let l = (&w1f - square(&(c2 + c3)) - square(d2) - square(d3)) * e1
        + (c0 * d3 + c3 * d3 - d1 * d2) * e2
        + (c0 * d2 + c2 * d2 - d1 * d3) * e3;
    let m = &two * (c1 * e1 + d3 * e2 + d2 * e3) * &w1f + e1 * (w2 - c0 * w1 - &four * e0);
    [k, l, m]
}

pub fn quartic_dupin_conditions(q: &IntermediateDarboux) -> QuarticConditionReport {
    let agg = Aggregates::of_intermediate(q);
    let f0 = &q.f0;
    let (c0, w1, w2, w4, e0) = (&agg.c0, &agg.w1, &agg.w2, &agg.w4, &agg.e0);
    let (two, three, four, six, eight, twelve) = (int(2), int(3), int(4), int(6), int(8), int(12));
    let w1f = w1 + &four * f0;
    let shared = w2 + c0 * w1 + &eight * c0 * f0 - &four * e0;
    let n1 = (&four * w1 + &twelve * f0 - &three * square(c0)) * &w1f - &two * c0 * (w2 - c0 * w1 - &six * e0) - &four * w4;
    let n2 = &four * (w2 - c0 * w1 - &two * e0) * &w1f + (square(c0) - &four * f0) * &shared;
    let n3 = square(&shared) - &four * &w1f * &w1f * &w1f;

    let mut k: [Scalar; 3] = Default::default();
    let mut l: [Scalar; 3] = Default::default();
    let mut m: [Scalar; 3] = Default::default();
    for (i, swap) in [Swap::Identity, Swap::OneTwo, Swap::OneThree].into_iter().enumerate() {
        // the aggregates are symmetric, so they can be shared across swaps
        let [ki, li, mi] = klm(&swap.apply_intermediate(q), &agg, f0);
        k[i] = ki;
        l[i] = li;
        m[i] = mi;
    }
    let n = [n1, n2, n3];
    let all_vanish = k.iter().chain(&l).chain(&m).chain(&n).all(Zero::is_zero);
    QuarticConditionReport { k, l, m, n, all_vanish }
}

/// Residuals of the cubic relations, multiplied through by `4 B0³` (for the
/// `e` relations) and `4 B0⁴` (for `f0`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicConditionReport {
    pub e_residuals: [Scalar; 3],
    pub f0_residual: Scalar,
    pub all_vanish: bool,
}

impl CubicConditionReport {
    pub fn residuals(&self) -> Vec<(String, &Scalar)> {
        let mut out: Vec<(String, &Scalar)> =
            self.e_residuals.iter().enumerate().map(|(i, v)| (format!("e{}", i + 1), v)).collect();
        out.push(("f0".to_string(), &self.f0_residual));
        out
    }
}

/// `B0³ · E1`, the denominator-free numerator of `E1`.
fn e1_numerator(q: &DarbouxQuartic, b0: &Scalar, w3: &Scalar) -> Scalar {
    let [b1, b2, b3] = &q.b;
    let [c1, c2, c3] = &q.c;
    let [d1, d2, d3] = &q.d;
    let two = int(2);
    let four = int(4);
    let cross = b3 * d2 + b2 * d3;
    let head = -(b1 * square(&(w3 - b0 * (c2 + c3))));
    let middle = &two * square(b1) * (b3 * c3 * d2 + b2 * c2 * d3) - &four * b1 * square(&cross)
        + &two * &cross * (square(b2) * c1 + square(b3) * c1 - &two * b2 * b3 * d1)
        - &two * b2 * b3 * (c2 - c3) * (b2 * d2 - b3 * d3);
    let tail = b1 * ((c1 - c2) * (c1 - c3) - square(d1) + square(d2) + square(d3)) + &two * d1 * (b2 * d2 + b3 * d3);
    head + b0 * middle + square(b0) * tail
}

pub fn cubic_dupin_conditions(q: &DarbouxQuartic) -> Result<CubicConditionReport> {
    if !q.a0.is_zero() {
        return Err(CyclideError::Precondition("cubic conditions need a0 = 0".into()));
    }
    let agg = Aggregates::of(q);
    if agg.b0.is_zero() {
        return Err(CyclideError::NotACubicCyclide);
    }
    let b0 = &agg.b0;
    let four = int(4);
    let b0_cubed = b0 * b0 * b0;
    let e_residuals = [Swap::Identity, Swap::OneTwo, Swap::OneThree].map(|swap| {
        let permuted = swap.apply_quartic(q);
        let w3 = Aggregates::of(&permuted).w3;
        &four * &b0_cubed * &permuted.e[0] - e1_numerator(&permuted, b0, &w3)
    });
    let (c0, w1, w2, w3) = (&agg.c0, &agg.w1, &agg.w2, &agg.w3);
    let f0_residual = &four * &b0_cubed * b0 * &q.f0
        - w3 * square(&(w3 - c0 * b0))
        - w3 * w1 * square(b0)
        - (w2 - c0 * w1) * &b0_cubed;
    let all_vanish = e_residuals.iter().all(Zero::is_zero) && f0_residual.is_zero();
    Ok(CubicConditionReport { e_residuals, f0_residual, all_vanish })
}
