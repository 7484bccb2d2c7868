//! The generalized root system of the ℓ-Kronecker quiver.
//!
//! Lattice vectors are written in the simple-root basis `(α₁, α₂)` and use
//! arbitrary-width integers: Coxeter powers grow like `ρⁿ` and overflow
//! 64 bits quickly for larger `ℓ`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Number of arrows `ℓ` of the Kronecker quiver, always at least 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct QuiverParams {
    ell: u32,
}

impl QuiverParams {
    pub fn new(ell: i64) -> Result<Self> {
        if ell < 3 || ell > u32::MAX as i64 {
            return Err(Error::EllTooSmall(ell));
        }
        Ok(Self { ell: ell as u32 })
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    fn ell_big(&self) -> BigInt {
        BigInt::from(self.ell)
    }
}

/// One of the two simple roots / simple reflections.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SimpleIndex {
    One,
    Two,
}

impl SimpleIndex {
    pub const ALL: [SimpleIndex; 2] = [SimpleIndex::One, SimpleIndex::Two];
}

impl TryFrom<i64> for SimpleIndex {
    type Error = Error;
    fn try_from(i: i64) -> Result<Self> {
        match i {
            1 => Ok(SimpleIndex::One),
            2 => Ok(SimpleIndex::Two),
            other => Err(Error::InvalidIndex(other)),
        }
    }
}

/// An element `a1·α₁ + a2·α₂` of the root lattice.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    pub a1: BigInt,
    pub a2: BigInt,
}

impl RootVector {
    pub fn new(a1: impl Into<BigInt>, a2: impl Into<BigInt>) -> Self {
        Self {
            a1: a1.into(),
            a2: a2.into(),
        }
    }

    pub fn simple(i: SimpleIndex) -> Self {
        match i {
            SimpleIndex::One => Self::new(1, 0),
            SimpleIndex::Two => Self::new(0, 1),
        }
    }

    pub fn zero() -> Self {
        Self::new(0, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.a1.is_zero() && self.a2.is_zero()
    }

    /// `a1 + a2`.
    pub fn height(&self) -> BigInt {
        &self.a1 + &self.a2
    }

    /// True when both coefficients are non-negative (the vector lies in L₊).
    pub fn is_nonnegative(&self) -> bool {
        !self.a1.is_negative() && !self.a2.is_negative()
    }

    fn l1_norm(&self) -> BigInt {
        self.a1.abs() + self.a2.abs()
    }

    fn is_plus_minus_simple(&self) -> bool {
        (self.a1.abs().is_one() && self.a2.is_zero()) || (self.a1.is_zero() && self.a2.abs().is_one())
    }

    /// The coefficients as machine integers, if they fit.
    pub fn to_i64_pair(&self) -> Option<(i64, i64)> {
        Some((i64::try_from(&self.a1).ok()?, i64::try_from(&self.a2).ok()?))
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a1, self.a2)
    }
}

/// Integer 2×2 matrix acting on column vectors of simple-root coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix2 {
    pub m: [[BigInt; 2]; 2],
}

impl IntegerMatrix2 {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self {
            m: [[a.into(), b.into()], [c.into(), d.into()]],
        }
    }

    pub fn identity() -> Self {
        Self::new(1, 0, 0, 1)
    }

    pub fn det(&self) -> BigInt {
        &self.m[0][0] * &self.m[1][1] - &self.m[0][1] * &self.m[1][0]
    }

    pub fn trace(&self) -> BigInt {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let e = |i: usize, j: usize| &self.m[i][0] * &rhs.m[0][j] + &self.m[i][1] * &rhs.m[1][j];
        Self {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }

    pub fn apply(&self, v: &RootVector) -> RootVector {
        RootVector {
            a1: &self.m[0][0] * &v.a1 + &self.m[0][1] * &v.a2,
            a2: &self.m[1][0] * &v.a1 + &self.m[1][1] * &v.a2,
        }
    }

    pub fn to_i64(&self) -> Option<[[i64; 2]; 2]> {
        let e = |i: usize, j: usize| i64::try_from(&self.m[i][j]).ok();
        Some([[e(0, 0)?, e(0, 1)?], [e(1, 0)?, e(1, 1)?]])
    }

    pub fn to_f64(&self) -> [[f64; 2]; 2] {
        use num_traits::ToPrimitive;
        let e = |i: usize, j: usize| self.m[i][j].to_f64().unwrap_or(f64::NAN);
        [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
    }
}

impl QuiverParams {
    /// `[[2, −ℓ], [−ℓ, 2]]`.
    pub fn cartan_matrix(&self) -> IntegerMatrix2 {
        let l = -self.ell_big();
        IntegerMatrix2::new(2, l.clone(), l, 2)
    }

    /// The symmetric form `I(u, v) = uᵀ A v`.
    pub fn bilinear(&self, u: &RootVector, v: &RootVector) -> BigInt {
        let l = self.ell_big();
        BigInt::from(2) * (&u.a1 * &v.a1 + &u.a2 * &v.a2) - l * (&u.a1 * &v.a2 + &u.a2 * &v.a1)
    }

    /// `r_i(v) = v − I(v, α_i) α_i`.
    pub fn reflect(&self, i: SimpleIndex, v: &RootVector) -> RootVector {
        let pairing = self.bilinear(v, &RootVector::simple(i));
        match i {
            SimpleIndex::One => RootVector {
                a1: &v.a1 - pairing,
                a2: v.a2.clone(),
            },
            SimpleIndex::Two => RootVector {
                a1: v.a1.clone(),
                a2: &v.a2 - pairing,
            },
        }
    }

    pub fn reflection_matrix(&self, i: SimpleIndex) -> IntegerMatrix2 {
        let l = self.ell_big();
        match i {
            SimpleIndex::One => IntegerMatrix2::new(-1, l, 0, 1),
            SimpleIndex::Two => IntegerMatrix2::new(1, 0, l, -1),
        }
    }

    /// Matrix of `c = r₁ r₂`: `[[ℓ²−1, −ℓ], [ℓ, −1]]`.
    pub fn coxeter_matrix(&self) -> IntegerMatrix2 {
        let l = self.ell_big();
        IntegerMatrix2::new(&l * &l - 1, -l.clone(), l, -1)
    }

    /// `cⁿ` by repeated squaring.
    pub fn coxeter_power(&self, mut n: u32) -> IntegerMatrix2 {
        let mut base = self.coxeter_matrix();
        let mut acc = IntegerMatrix2::identity();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            n >>= 1;
        }
        acc
    }

    /// Apply height-decreasing simple reflections until none decreases
    /// `|a1| + |a2|`. Returns the terminal vector.
    pub fn reduce_by_reflections(&self, v: &RootVector) -> RootVector {
        let mut cur = v.clone();
        loop {
            if cur.is_plus_minus_simple() {
                return cur;
            }
            let norm = cur.l1_norm();
            let next = SimpleIndex::ALL
                .iter()
                .map(|&i| self.reflect(i, &cur))
                .find(|w| w.l1_norm() < norm);
            match next {
                Some(w) => cur = w,
                None => return cur,
            }
        }
    }

    /// Membership in `Δ^re = W{α₁, α₂}`: the norm condition `I(v,v) = 2`
    /// together with reducibility to a (signed) simple root.
    pub fn is_real_root(&self, v: &RootVector) -> bool {
        self.bilinear(v, v) == BigInt::from(2) && self.reduce_by_reflections(v).is_plus_minus_simple()
    }

    /// Positive real roots of height at most `max_height`, sorted by height
    /// and then lexicographically.
    ///
    /// In rank two every positive real root lies on one of the two chains
    /// `α₁, r₂α₁, r₁r₂α₁, …` and `α₂, r₁α₂, r₂r₁α₂, …`, along which the
    /// height strictly increases.
    pub fn enumerate_positive_real_roots(&self, max_height: u64) -> Result<Vec<RootVector>> {
        if max_height < 1 {
            return Err(Error::InvalidHeight);
        }
        let limit = BigInt::from(max_height);
        let mut roots = Vec::new();
        for start in SimpleIndex::ALL {
            let mut cur = RootVector::simple(start);
            let mut next_reflection = match start {
                SimpleIndex::One => SimpleIndex::Two,
                SimpleIndex::Two => SimpleIndex::One,
            };
            while cur.height() <= limit {
                let next = self.reflect(next_reflection, &cur);
                debug_assert!(next.height() > cur.height());
                roots.push(cur);
                cur = next;
                next_reflection = match next_reflection {
                    SimpleIndex::One => SimpleIndex::Two,
                    SimpleIndex::Two => SimpleIndex::One,
                };
            }
        }
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        Ok(roots)
    }

    /// Is `v` in the fundamental set `K = {λ ∈ L₊∖0 : I(λ, α_i) ≤ 0}`?
    pub fn in_fundamental_set(&self, v: &RootVector) -> bool {
        v.is_nonnegative()
            && !v.is_zero()
            && SimpleIndex::ALL
                .iter()
                .all(|&i| !self.bilinear(v, &RootVector::simple(i)).is_positive())
    }

    /// Membership in `Δ^im₊ = W(K)`.
    ///
    /// While some `I(v, α_i) > 0`, apply `r_i`; each such step strictly
    /// lowers the height, so the walk either leaves `L₊` (reject) or stops
    /// at a vector that is tested against `K`.
    pub fn is_positive_imaginary_root(&self, v: &RootVector) -> bool {
        let mut cur = v.clone();
        loop {
            if !cur.is_nonnegative() || cur.is_zero() {
                return false;
            }
            let step = SimpleIndex::ALL
                .iter()
                .copied()
                .find(|&i| self.bilinear(&cur, &RootVector::simple(i)).is_positive());
            match step {
                Some(i) => cur = self.reflect(i, &cur),
                None => return self.in_fundamental_set(&cur),
            }
        }
    }

    /// Membership of `z₁α₁ + z₂α₂` in the imaginary cone 𝕀.
    pub fn in_imaginary_cone(&self, z1: f64, z2: f64) -> bool {
        let l = self.ell as f64;
        z1 >= 0.0 && z2 >= 0.0 && z1 * z1 - l * z1 * z2 + z2 * z2 <= 0.0
    }

    /// Exact version of [`Self::in_imaginary_cone`] for lattice points.
    pub fn in_imaginary_cone_exact(&self, v: &RootVector) -> bool {
        v.is_nonnegative() && !self.bilinear(v, v).is_positive()
    }
}
