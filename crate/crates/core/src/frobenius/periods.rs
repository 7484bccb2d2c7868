//! Periods of the intersection form and their monodromy.
//!
//! With `R = √((s¹)²+4)` on the branch that is cut along `[−2i, 2i]` and
//! behaves like `s¹` at infinity, and `w = Log((s¹+R)/2)`,
//!
//! ```text
//! x¹ = e^{s²/2 + w/h},   x² = e^{s²/2 − w/h}.
//! ```
//!
//! The principal `Log` adds a second cut along the negative real `s¹` axis,
//! across which the periods jump by a Coxeter element. Continuation along a
//! path ([`PeriodContinuation`]) tracks `R` and `w` and has no cuts.

use std::f64::consts::PI;

use serde::Serialize;

use super::{Tensor2, Variance};
use crate::charts::{in_ellipse, Chart};
use crate::error::{Error, Result};
use crate::linalg::{c, ComplexMatrix2, C64, I};
use crate::spectral_frame::SpectralFrame;

pub const DEFAULT_LOOP_RADIUS: f64 = 0.5;
pub const DEFAULT_LOOP_STEPS: usize = 4096;
const CUT_BAND: f64 = 1e-12;
const MAX_CONDITION: f64 = 1e8;

/// A pair of periods with the logarithms they were built from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Periods {
    pub x1: C64,
    pub x2: C64,
    pub log_x1: C64,
    pub log_x2: C64,
}

impl Periods {
    fn from_w(frame: &SpectralFrame, s2: C64, w: C64) -> Self {
        let log_x1 = s2 * 0.5 + w / frame.h;
        let log_x2 = s2 * 0.5 - w / frame.h;
        Self {
            x1: log_x1.exp(),
            x2: log_x2.exp(),
            log_x1,
            log_x2,
        }
    }

    /// `(x¹)^h − (x²)^h` and `x¹x²` on the branch carried by the logs.
    pub fn flat_coords(&self, frame: &SpectralFrame) -> [C64; 2] {
        let h = frame.h;
        [
            (h * self.log_x1).exp() - (h * self.log_x2).exp(),
            (self.log_x1 + self.log_x2).exp(),
        ]
    }

    pub fn as_array(&self) -> [C64; 2] {
        [self.x1, self.x2]
    }
}

fn on_cut(s1: C64) -> bool {
    s1.re.abs() <= CUT_BAND && s1.im.abs() <= 2.0
}

fn outer_root(s1: C64) -> C64 {
    s1 * (1.0 + 4.0 / (s1 * s1)).sqrt()
}

/// Periods at a single point via the outer branch of the square root.
pub fn periods(frame: &SpectralFrame, s1: C64, s2: C64) -> Result<Periods> {
    if on_cut(s1) {
        return Err(Error::OnBranchCut(s1.to_string()));
    }
    let w = ((s1 + outer_root(s1)) * 0.5).ln();
    Ok(Periods::from_w(frame, s2, w))
}

/// Analytic continuation of the periods along a path in the s-chart.
///
/// Each step picks the root of `(s¹)²+4` nearest the previous one and
/// accumulates `w` by the principal log of a ratio close to one, so steps
/// must be small compared with the distance to `±2i`.
#[derive(Debug, Clone)]
pub struct PeriodContinuation {
    frame: SpectralFrame,
    root: C64,
    base: C64,
    w: C64,
}

impl PeriodContinuation {
    pub fn start(frame: &SpectralFrame, s1: C64, s2: C64) -> Result<Self> {
        periods(frame, s1, s2)?;
        let root = outer_root(s1);
        let base = (s1 + root) * 0.5;
        Ok(Self {
            frame: *frame,
            root,
            base,
            w: base.ln(),
        })
    }

    pub fn advance(&mut self, s1: C64, s2: C64) -> Periods {
        let r = (s1 * s1 + 4.0).sqrt();
        let root = if (r - self.root).norm() <= (r + self.root).norm() {
            r
        } else {
            -r
        };
        let base = (s1 + root) * 0.5;
        self.w += (base / self.base).ln();
        self.root = root;
        self.base = base;
        Periods::from_w(&self.frame, s2, self.w)
    }

    /// The accumulated `w = log((s¹+R)/2)`.
    pub fn w(&self) -> C64 {
        self.w
    }
}

/// The two points of the discriminant in the s¹-plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Puncture {
    /// `s¹ = 2i`, the image of the wall `y¹ − y² = log ν`.
    Plus,
    /// `s¹ = −2i`.
    Minus,
}

impl Puncture {
    pub fn center(&self) -> C64 {
        match self {
            Puncture::Plus => 2.0 * I,
            Puncture::Minus => -2.0 * I,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    CounterClockwise,
    Clockwise,
}

/// Monodromy of the period vector `(x¹, x²)` around one puncture.
///
/// The loop is the circle of the given radius starting at `center + r`,
/// with `s² = 0`. Continued periods `x'` satisfy `x' = M x`; `M` is found
/// from two base points a quarter turn apart.
pub fn monodromy_matrix(
    frame: &SpectralFrame,
    puncture: Puncture,
    radius: f64,
    steps: usize,
    orientation: Orientation,
) -> Result<Tensor2> {
    if steps < 8 {
        return Err(Error::TooFewSteps(steps));
    }
    if !(radius > 0.0 && radius < 4.0) {
        return Err(Error::LoopLeavesDomain(radius));
    }
    let center = puncture.center();
    let sign = match orientation {
        Orientation::CounterClockwise => 1.0,
        Orientation::Clockwise => -1.0,
    };
    let point = |k: usize| center + radius * c(0.0, sign * 2.0 * PI * k as f64 / steps as f64).exp();
    let quarter = steps / 4;
    if (0..steps).any(|k| !in_ellipse(frame, point(k))) {
        return Err(Error::LoopLeavesDomain(radius));
    }

    let s2 = C64::new(0.0, 0.0);
    let mut cont = PeriodContinuation::start(frame, point(0), s2)?;
    let mut base = [[C64::new(0.0, 0.0); 2]; 2];
    let mut moved = base;
    for k in 0..=steps + quarter {
        let p = if k == 0 {
            periods(frame, point(0), s2)?
        } else {
            cont.advance(point(k), s2)
        };
        let slot = match k {
            0 => Some((&mut base, 0)),
            k if k == quarter => Some((&mut base, 1)),
            k if k == steps => Some((&mut moved, 0)),
            k if k == steps + quarter => Some((&mut moved, 1)),
            _ => None,
        };
        if let Some((target, col)) = slot {
            target[0][col] = p.x1;
            target[1][col] = p.x2;
        }
    }
    let x = ComplexMatrix2 { m: base };
    let x_moved = ComplexMatrix2 { m: moved };
    let cond = x.condition_number();
    if cond.is_nan() || cond > MAX_CONDITION {
        return Err(Error::IllConditioned(cond));
    }
    let inv = x.inverse().ok_or(Error::IllConditioned(f64::INFINITY))?;
    Ok(Tensor2::new(x_moved * inv, Chart::X, Variance::Mixed))
}

/// Counter-clockwise monodromies `(M₁, M₂)` around `s¹ = 2i` and `s¹ = −2i`.
pub fn monodromy_matrices(frame: &SpectralFrame, radius: f64, steps: usize) -> Result<(Tensor2, Tensor2)> {
    Ok((
        monodromy_matrix(frame, Puncture::Plus, radius, steps, Orientation::CounterClockwise)?,
        monodromy_matrix(frame, Puncture::Minus, radius, steps, Orientation::CounterClockwise)?,
    ))
}
