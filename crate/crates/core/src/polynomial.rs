// Copyright 2026 the Cyclide Authors
// SPDX-License-Identifier: Apache-2.0

//! Sparse trivariate polynomials over the rationals, plus a floated copy for
//! the mesher.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{to_f64, Scalar};

/// Exponents of `x^a y^b z^c`.
pub type Monomial = [u32; 3];

/// Sparse polynomial in `x, y, z`. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrivariatePolynomial {
    terms: BTreeMap<Monomial, Scalar>,
}

impl TrivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::term([0, 0, 0], c)
    }

    pub fn term(exponents: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(exponents, c);
        p
    }

    pub fn x() -> Self {
        Self::term([1, 0, 0], Scalar::one())
    }

    pub fn y() -> Self {
        Self::term([0, 1, 0], Scalar::one())
    }

    pub fn z() -> Self {
        Self::term([0, 0, 1], Scalar::one())
    }

    pub fn add_term(&mut self, exponents: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponents).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exponents);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: Monomial) -> Scalar {
        self.terms.get(&exponents).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().sum()).max()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::constant(Scalar::one()), |acc, _| &acc * self)
    }

    pub fn evaluate(&self, point: &[Scalar; 3]) -> Scalar {
        let mut total = Scalar::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (base, &e) in point.iter().zip(m) {
                for _ in 0..e {
                    value *= base;
                }
            }
            total += value;
        }
        total
    }

    /// Formal partial derivative with respect to variable `axis` (0 = x).
    pub fn derivative(&self, axis: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m[axis];
            if e == 0 {
                continue;
            }
            let mut lowered = *m;
            lowered[axis] -= 1;
            out.add_term(lowered, c * Scalar::from_integer(e.into()));
        }
        out
    }

    pub fn gradient(&self, point: &[Scalar; 3]) -> [Scalar; 3] {
        [0, 1, 2].map(|axis| self.derivative(axis).evaluate(point))
    }

    /// Replaces `x, y, z` by the given polynomials.
    pub fn substitute(&self, images: &[TrivariatePolynomial; 3]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut product = Self::constant(c.clone());
            for (image, &e) in images.iter().zip(m) {
                if e > 0 {
                    product = &product * &image.pow(e);
                }
            }
            out = &out + &product;
        }
        out
    }

    pub fn to_float(&self) -> FloatPolynomial {
        FloatPolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, to_f64(c))).collect(),
        }
    }
}

impl Add for &TrivariatePolynomial {
    type Output = TrivariatePolynomial;

    fn add(self, rhs: Self) -> TrivariatePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &TrivariatePolynomial {
    type Output = TrivariatePolynomial;

    fn sub(self, rhs: Self) -> TrivariatePolynomial {
        self + &(-rhs)
    }
}

impl Neg for &TrivariatePolynomial {
    type Output = TrivariatePolynomial;

    fn neg(self) -> TrivariatePolynomial {
        TrivariatePolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &TrivariatePolynomial {
    type Output = TrivariatePolynomial;

    fn mul(self, rhs: Self) -> TrivariatePolynomial {
        let mut out = TrivariatePolynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term([ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]], ca * cb);
            }
        }
        out
    }
}

/// Double-precision copy of a polynomial, used only by the mesher.
#[derive(Clone, Debug)]
pub struct FloatPolynomial {
    terms: Vec<(Monomial, f64)>,
}

impl FloatPolynomial {
    pub fn evaluate(&self, p: [f64; 3]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| c * p[0].powi(m[0] as i32) * p[1].powi(m[1] as i32) * p[2].powi(m[2] as i32))
            .sum()
    }

    pub fn gradient(&self, p: [f64; 3]) -> [f64; 3] {
        let mut g = [0.0; 3];
        for (m, c) in &self.terms {
            for axis in 0..3 {
                if m[axis] == 0 {
                    continue;
                }
                let mut term = c * f64::from(m[axis]);
                for other in 0..3 {
                    let e = if other == axis { m[other] - 1 } else { m[other] };
                    term *= p[other].powi(e as i32);
                }
                g[axis] += term;
            }
        }
        g
    }
}
