//! Dense 2×2 complex matrices.

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeSeq, Serializer};

pub type C64 = Complex64;

pub const ZERO: C64 = C64::new(0.0, 0.0);
pub const ONE: C64 = C64::new(1.0, 0.0);
pub const I: C64 = C64::new(0.0, 1.0);

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Principal power `z^w = exp(w Log z)`.
pub fn cpow(z: C64, w: C64) -> C64 {
    (w * z.ln()).exp()
}

/// A 2×2 complex matrix stored row-major; `m[(i, j)]` is row `i`, column `j`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2 {
    pub m: [[C64; 2]; 2],
}

impl ComplexMatrix2 {
    pub const fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Self { m: [[a, b], [c, d]] }
    }

    pub fn from_real(rows: [[f64; 2]; 2]) -> Self {
        Self::new(
            C64::new(rows[0][0], 0.0),
            C64::new(rows[0][1], 0.0),
            C64::new(rows[1][0], 0.0),
            C64::new(rows[1][1], 0.0),
        )
    }

    pub fn identity() -> Self {
        Self::new(ONE, ZERO, ZERO, ONE)
    }

    pub fn zero() -> Self {
        Self::new(ZERO, ZERO, ZERO, ZERO)
    }

    pub fn antidiagonal(v: C64) -> Self {
        Self::new(ZERO, v, v, ZERO)
    }

    pub fn transpose(&self) -> Self {
        Self::new(self.m[0][0], self.m[1][0], self.m[0][1], self.m[1][1])
    }

    pub fn det(&self) -> C64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn inverse(&self) -> Option<Self> {
        let det = self.det();
        if det.norm() == 0.0 || !det.is_finite() {
            return None;
        }
        let inv = det.inv();
        Some(Self::new(
            self.m[1][1] * inv,
            -self.m[0][1] * inv,
            -self.m[1][0] * inv,
            self.m[0][0] * inv,
        ))
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        for row in out.m.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        out
    }

    pub fn apply(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.m[0][0] * v[0] + self.m[0][1] * v[1],
            self.m[1][0] * v[0] + self.m[1][1] * v[1],
        ]
    }

    /// Eigenvalues from the characteristic polynomial, ordered with the
    /// larger modulus first.
    pub fn eigenvalues(&self) -> [C64; 2] {
        let tr = self.trace();
        let disc = (tr * tr - 4.0 * self.det()).sqrt();
        // Avoid cancellation: compute the larger root directly, the other
        // from the product.
        let big = if (tr + disc).norm() >= (tr - disc).norm() {
            (tr + disc) * 0.5
        } else {
            (tr - disc) * 0.5
        };
        let small = if big.norm() == 0.0 { ZERO } else { self.det() / big };
        [big, small]
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.m.iter().flatten().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Condition number in the Frobenius norm; infinite for singular input.
    pub fn condition_number(&self) -> f64 {
        match self.inverse() {
            Some(inv) => self.norm() * inv.norm(),
            None => f64::INFINITY,
        }
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (*self - *other)
            .m
            .iter()
            .flatten()
            .map(|v| v.norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.m.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.m.iter().flatten().all(|v| v.is_finite())
    }
}

impl Index<(usize, usize)> for ComplexMatrix2 {
    type Output = C64;
    fn index(&self, (i, j): (usize, usize)) -> &C64 {
        &self.m[i][j]
    }
}

impl IndexMut<(usize, usize)> for ComplexMatrix2 {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C64 {
        &mut self.m[i][j]
    }
}

impl Mul for ComplexMatrix2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] = self.m[i][0] * rhs.m[0][j] + self.m[i][1] * rhs.m[1][j];
            }
        }
        out
    }
}

impl Add for ComplexMatrix2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] += rhs.m[i][j];
            }
        }
        out
    }
}

impl Sub for ComplexMatrix2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let mut out = self;
        for i in 0..2 {
            for j in 0..2 {
                out.m[i][j] -= rhs.m[i][j];
            }
        }
        out
    }
}

/// JSON-facing complex number, `{"re": .., "im": ..}`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct JsonComplex {
    pub re: f64,
    pub im: f64,
}

impl From<C64> for JsonComplex {
    fn from(z: C64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl Serialize for ComplexMatrix2 {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut rows = serializer.serialize_seq(Some(2))?;
        for row in &self.m {
            let r: [JsonComplex; 2] = [row[0].into(), row[1].into()];
            rows.serialize_element(&r)?;
        }
        rows.end()
    }
}
