//! Coordinate charts on `X`, its universal cover `X̃`, and the quotient
//! `X̃⫽W ≅ 𝔼 × ℂ`.
//!
//! * x-chart: linear coordinates `(x¹, x²)` on the Cartan subalgebra in the
//!   dual β-basis.
//! * y-chart: `X̃ = {|Im(y¹ − y²)| < π}` with covering map `x = exp(y)`.
//! * s-chart: the W-invariant coordinates `s¹ = 2 sinh(h(y¹−y²)/2)`,
//!   `s² = y¹ + y²`.
//! * t-chart: flat coordinates, see [`crate::frobenius`].

use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{JsonComplex, C64};
use crate::root_lattice::SimpleIndex;
use crate::spectral_frame::SpectralFrame;

/// Relative width of the numerical band around measure-zero walls.
pub const WALL_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Chart {
    #[serde(rename = "x")]
    X,
    #[serde(rename = "y")]
    Cover,
    #[serde(rename = "s")]
    Quotient,
    #[serde(rename = "t")]
    Flat,
}

impl Chart {
    pub fn name(&self) -> &'static str {
        match self {
            Chart::X => "x",
            Chart::Cover => "y",
            Chart::Quotient => "s",
            Chart::Flat => "t",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(Chart::X),
            "y" => Ok(Chart::Cover),
            "s" => Ok(Chart::Quotient),
            "t" => Ok(Chart::Flat),
            _ => Err(Error::Parse {
                what: "chart",
                input: s.to_string(),
            }),
        }
    }
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A point given by two complex coordinates in a named chart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChartPoint {
    pub chart: Chart,
    pub c1: C64,
    pub c2: C64,
}

impl ChartPoint {
    pub fn new(chart: Chart, c1: C64, c2: C64) -> Self {
        Self { chart, c1, c2 }
    }

    pub fn coords(&self) -> [C64; 2] {
        [self.c1, self.c2]
    }
}

impl Serialize for ChartPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ChartPoint", 2)?;
        st.serialize_field("chart", &self.chart)?;
        st.serialize_field("coords", &[JsonComplex::from(self.c1), JsonComplex::from(self.c2)])?;
        st.end()
    }
}

fn near_nonpositive_real(z: C64) -> bool {
    z.im.abs() <= WALL_TOLERANCE * z.norm() && z.re <= 0.0
}

fn strip_gap(y1: C64, y2: C64) -> f64 {
    (y1 - y2).im.abs()
}

pub fn in_strip(y1: C64, y2: C64) -> bool {
    strip_gap(y1, y2) < PI
}

fn require_strip(y1: C64, y2: C64) -> Result<()> {
    let gap = strip_gap(y1, y2);
    if gap < PI {
        Ok(())
    } else {
        Err(Error::OutsideStrip(gap))
    }
}

/// `X = ℂ² ∖ ⋃_{0≤λ≤∞} {x¹ = −λx²}`: both coordinates non-zero and
/// `x¹/x²` not a non-positive real.
pub fn in_x(x1: C64, x2: C64) -> bool {
    if x1 == C64::new(0.0, 0.0) || x2 == C64::new(0.0, 0.0) {
        return false;
    }
    !near_nonpositive_real(x1 / x2)
}

/// `X_reg`: points of `X` off the real-root walls `x² = ν^{2k+1} x¹`.
pub fn in_x_reg(frame: &SpectralFrame, x1: C64, x2: C64) -> bool {
    if !in_x(x1, x2) {
        return false;
    }
    let ratio = x2 / x1;
    let positive_real = ratio.im.abs() <= WALL_TOLERANCE * ratio.norm() && ratio.re > 0.0;
    if !positive_real {
        return true;
    }
    let k = ratio.norm().ln() / frame.log_nu;
    let nearest = k.round();
    let on_wall = (k - nearest).abs() <= WALL_TOLERANCE * nearest.abs().max(1.0) && (nearest as i64).rem_euclid(2) == 1;
    !on_wall
}

/// `π_X(y) = (e^{y¹}, e^{y²})`.
pub fn covering_map(y1: C64, y2: C64) -> Result<ChartPoint> {
    require_strip(y1, y2)?;
    Ok(ChartPoint::new(Chart::X, y1.exp(), y2.exp()))
}

/// The preimage of `x` under `π_X` with `y¹ = Log x¹` and `|Im(y¹−y²)| < π`.
pub fn lift_point(x1: C64, x2: C64) -> Result<ChartPoint> {
    if !in_x(x1, x2) {
        return Err(Error::NotInX(format!("{x1}, {x2}")));
    }
    let y1 = x1.ln();
    let y2 = y1 - (x1 / x2).ln();
    Ok(ChartPoint::new(Chart::Cover, y1, y2))
}

/// The lifted reflections
/// `R₁·y = (y² − log ν, y¹ + log ν)` and `R₂·y = (y² + log ν, y¹ − log ν)`.
pub fn weyl_action_cover(frame: &SpectralFrame, i: SimpleIndex, y1: C64, y2: C64) -> Result<(C64, C64)> {
    require_strip(y1, y2)?;
    let l = frame.log_nu;
    Ok(match i {
        SimpleIndex::One => (y2 - l, y1 + l),
        SimpleIndex::Two => (y2 + l, y1 - l),
    })
}

/// Deck transformation `γⁿ·y = y + 2πin (1, 1)`.
pub fn deck_transform(n: i64, y1: C64, y2: C64) -> (C64, C64) {
    let shift = C64::new(0.0, 2.0 * PI * n as f64);
    (y1 + shift, y2 + shift)
}

/// `Ũ = {y ∈ X̃ : |Re(y¹ − y²)| ≤ log ν}`.
pub fn in_fundamental_domain(frame: &SpectralFrame, y1: C64, y2: C64) -> bool {
    in_strip(y1, y2) && (y1 - y2).re.abs() <= frame.log_nu
}

/// The W-invariant map `φ(y) = (2 sinh(h(y¹−y²)/2), y¹ + y²)`.
pub fn invariant_chart(frame: &SpectralFrame, y1: C64, y2: C64) -> Result<ChartPoint> {
    require_strip(y1, y2)?;
    let s1 = 2.0 * (frame.h * (y1 - y2) * 0.5).sinh();
    Ok(ChartPoint::new(Chart::Quotient, s1, y1 + y2))
}

/// Principal inverse hyperbolic sine, evaluated through the half-plane
/// `Re z ≥ 0` to avoid cancellation in `z + √(z²+1)`.
pub(crate) fn asinh_principal(z: C64) -> C64 {
    let one = C64::new(1.0, 0.0);
    if z.re < 0.0 {
        -asinh_principal(-z)
    } else {
        (z + (z * z + one).sqrt()).ln()
    }
}

/// Inverse of [`invariant_chart`] landing in the fundamental domain `Ũ`:
/// `d = 2 asinh(s¹/2)/h`, `y = ((s² + d)/2, (s² − d)/2)`.
pub fn inverse_chart(frame: &SpectralFrame, s1: C64, s2: C64) -> Result<ChartPoint> {
    if !in_ellipse(frame, s1) {
        return Err(Error::OutsideEllipse(s1.to_string()));
    }
    let w = asinh_principal(s1 * 0.5);
    let d = 2.0 * w / frame.h;
    // s1 ∈ 𝔼 keeps |Im d| < π up to rounding at the very edge.
    require_strip(d, C64::new(0.0, 0.0))?;
    Ok(ChartPoint::new(Chart::Cover, (s2 + d) * 0.5, (s2 - d) * 0.5))
}

/// Strict membership in the ellipse 𝔼.
pub fn in_ellipse(frame: &SpectralFrame, z: C64) -> bool {
    let (a, b) = frame.ellipse_axes();
    (z.re / a).powi(2) + (z.im / b).powi(2) < 1.0
}
