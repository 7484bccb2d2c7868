//! Central finite differences with Richardson extrapolation.
//!
//! All stencils used here have an error expansion in even powers of the
//! step, so each extrapolation level combines steps `h` and `h/2` with
//! weights `(4ʲ, −1)/(4ʲ − 1)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix2, C64};

/// Finite-difference settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FdConfig {
    /// Step for first derivatives, relative to `max(1, |coordinate|)`.
    /// Higher orders use `base_step^(2/(order+1))`.
    pub base_step: f64,
    pub richardson_levels: u32,
    /// Samples with `|Δ|` below this are skipped.
    pub min_discriminant: f64,
}

impl Default for FdConfig {
    fn default() -> Self {
        Self {
            base_step: 1e-5,
            richardson_levels: 1,
            min_discriminant: 1e-3,
        }
    }
}

impl FdConfig {
    pub fn new(base_step: f64, richardson_levels: u32, min_discriminant: f64) -> Result<Self> {
        let cfg = Self {
            base_step,
            richardson_levels,
            min_discriminant,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(1e-9..=1e-2).contains(&self.base_step) {
            return Err(Error::InvalidStep(self.base_step));
        }
        Ok(())
    }

    /// Step used for a derivative of the given order at a coordinate of
    /// modulus `scale`.
    pub fn step_for(&self, order: u32, scale: f64) -> f64 {
        let exponent = 2.0 / (order as f64 + 1.0);
        self.base_step.powf(exponent) * scale.max(1.0)
    }
}

/// Values that can be combined linearly by a stencil.
pub trait FdValue: Clone {
    fn zeroed(&self) -> Self;
    fn add_scaled(&mut self, other: &Self, weight: f64);
}

impl FdValue for C64 {
    fn zeroed(&self) -> Self {
        C64::new(0.0, 0.0)
    }
    fn add_scaled(&mut self, other: &Self, weight: f64) {
        *self += other * weight;
    }
}

impl FdValue for ComplexMatrix2 {
    fn zeroed(&self) -> Self {
        ComplexMatrix2::zero()
    }
    fn add_scaled(&mut self, other: &Self, weight: f64) {
        for i in 0..2 {
            for j in 0..2 {
                self.m[i][j] += other.m[i][j] * weight;
            }
        }
    }
}

impl<const N: usize> FdValue for [C64; N] {
    fn zeroed(&self) -> Self {
        [C64::new(0.0, 0.0); N]
    }
    fn add_scaled(&mut self, other: &Self, weight: f64) {
        for (a, b) in self.iter_mut().zip(other) {
            *a += b * weight;
        }
    }
}

impl FdValue for Vec<C64> {
    fn zeroed(&self) -> Self {
        vec![C64::new(0.0, 0.0); self.len()]
    }
    fn add_scaled(&mut self, other: &Self, weight: f64) {
        for (a, b) in self.iter_mut().zip(other) {
            *a += b * weight;
        }
    }
}

fn combine<V: FdValue>(terms: &[(f64, V)], scale: f64) -> V {
    let mut acc = terms[0].1.zeroed();
    for (w, v) in terms {
        acc.add_scaled(v, w * scale);
    }
    acc
}

fn stencil<V: FdValue>(g: &impl Fn(f64) -> Result<V>, order: u32, h: f64) -> Result<V> {
    let terms: Vec<(f64, V)> = match order {
        1 => vec![(1.0, g(h)?), (-1.0, g(-h)?)],
        2 => vec![(1.0, g(h)?), (-2.0, g(0.0)?), (1.0, g(-h)?)],
        3 => vec![(1.0, g(2.0 * h)?), (-2.0, g(h)?), (2.0, g(-h)?), (-1.0, g(-2.0 * h)?)],
        4 => vec![
            (1.0, g(2.0 * h)?),
            (-4.0, g(h)?),
            (6.0, g(0.0)?),
            (-4.0, g(-h)?),
            (1.0, g(-2.0 * h)?),
        ],
        _ => unreachable!("stencil order checked by caller"),
    };
    let denom = match order {
        1 => 2.0 * h,
        2 => h * h,
        3 => 2.0 * h * h * h,
        _ => h.powi(4),
    };
    Ok(combine(&terms, 1.0 / denom))
}

fn richardson<V: FdValue>(estimate: impl Fn(f64) -> Result<V>, h: f64, levels: u32) -> Result<V> {
    let mut table: Vec<V> = Vec::with_capacity(levels as usize + 1);
    let mut step = h;
    for _ in 0..=levels {
        table.push(estimate(step)?);
        step *= 0.5;
    }
    for level in 1..=levels as usize {
        let factor = 4f64.powi(level as i32);
        for k in (level..table.len()).rev() {
            let mut v = table[k].zeroed();
            v.add_scaled(&table[k], factor / (factor - 1.0));
            v.add_scaled(&table[k - 1], -1.0 / (factor - 1.0));
            table[k] = v;
        }
    }
    Ok(table.pop().expect("non-empty table"))
}

/// Derivative of order 1–4 of `g` at `0`, where `g(ε)` evaluates the
/// function a real distance `ε` along some direction.
pub fn derivative_1d<V: FdValue>(g: impl Fn(f64) -> Result<V>, order: u32, h: f64, levels: u32) -> Result<V> {
    assert!((1..=4).contains(&order), "unsupported derivative order {order}");
    richardson(|step| stencil(&g, order, step), h, levels)
}

/// Mixed second derivative `∂²g/∂ε₁∂ε₂` at the origin.
pub fn mixed_2d<V: FdValue>(g: impl Fn(f64, f64) -> Result<V>, h1: f64, h2: f64, levels: u32) -> Result<V> {
    let estimate = |scale: f64| -> Result<V> {
        let (a, b) = (h1 * scale, h2 * scale);
        let terms = vec![(1.0, g(a, b)?), (-1.0, g(a, -b)?), (-1.0, g(-a, b)?), (1.0, g(-a, -b)?)];
        Ok(combine(&terms, 1.0 / (4.0 * a * b)))
    };
    richardson(estimate, 1.0, levels)
}

fn shifted(point: [C64; 2], direction: usize, eps: f64) -> [C64; 2] {
    let mut p = point;
    p[direction] += eps;
    p
}

/// Partial derivative `∂ⁿf/∂(zᵈ)ⁿ` of a holomorphic function on a chart,
/// using real steps along coordinate `direction` (0 or 1).
pub fn fd_partial<V: FdValue>(
    f: impl Fn([C64; 2]) -> Result<V>,
    point: [C64; 2],
    direction: usize,
    order: u32,
    cfg: &FdConfig,
) -> Result<V> {
    cfg.validate()?;
    let h = cfg.step_for(order, point[direction].norm());
    derivative_1d(|eps| f(shifted(point, direction, eps)), order, h, cfg.richardson_levels)
}

/// Second partial derivative `∂²f/∂zᵃ∂zᵇ`, including the mixed case.
pub fn fd_second<V: FdValue>(
    f: impl Fn([C64; 2]) -> Result<V>,
    point: [C64; 2],
    a: usize,
    b: usize,
    cfg: &FdConfig,
) -> Result<V> {
    if a == b {
        return fd_partial(f, point, a, 2, cfg);
    }
    cfg.validate()?;
    let ha = cfg.step_for(2, point[a].norm());
    let hb = cfg.step_for(2, point[b].norm());
    mixed_2d(
        |ea, eb| f(shifted(shifted(point, a, ea), b, eb)),
        ha,
        hb,
        cfg.richardson_levels,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::c;

    fn cfg() -> FdConfig {
        FdConfig::default()
    }

    #[test]
    fn linear_function_first_derivative() {
        let d = fd_partial(|t: [C64; 2]| Ok(t[0]), [c(0.3, 0.2), c(1.0, 0.0)], 0, 1, &cfg()).unwrap();
        assert!((d - c(1.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn constant_has_zero_derivatives() {
        for order in 1..=3 {
            let d = fd_partial(
                |_t: [C64; 2]| Ok(c(2.5, -1.0)),
                [c(1.0, 0.0), c(2.0, 1.0)],
                1,
                order,
                &cfg(),
            )
            .unwrap();
            assert!(d.norm() < 1e-10, "order {order}: {d}");
        }
    }

    #[test]
    fn fourth_derivative_of_quartic() {
        let d = fd_partial(|t: [C64; 2]| Ok(t[0].powi(4)), [c(0.5, 0.5), c(0.0, 0.0)], 0, 4, &cfg()).unwrap();
        assert!((d - c(24.0, 0.0)).norm() < 1e-4, "{d}");
    }

    #[test]
    fn exponential_orders() {
        let p = [c(0.2, 0.1), c(0.0, 0.0)];
        let f = |t: [C64; 2]| Ok(t[0].exp());
        for order in 1..=3 {
            let d = fd_partial(f, p, 0, order, &cfg()).unwrap();
            let err = (d - p[0].exp()).norm();
            assert!(err < [1e-10, 1e-8, 1e-7][order as usize - 1], "order {order}: {err:e}");
        }
    }

    #[test]
    fn mixed_partial_of_product() {
        let f = |t: [C64; 2]| Ok(t[0] * t[0] * t[1].exp());
        let p = [c(0.7, -0.3), c(0.1, 0.4)];
        let d = fd_second(f, p, 0, 1, &cfg()).unwrap();
        let exact = 2.0 * p[0] * p[1].exp();
        assert!((d - exact).norm() < 1e-7, "{d} vs {exact}");
    }

    #[test]
    fn richardson_improves_accuracy() {
        let f = |t: [C64; 2]| Ok(t[0].sin());
        let p = [c(0.4, 0.0), c(0.0, 0.0)];
        let coarse = FdConfig::new(1e-2, 0, 1e-3).unwrap();
        let fine = FdConfig::new(1e-2, 2, 1e-3).unwrap();
        let exact = p[0].cos();
        let e0 = (fd_partial(f, p, 0, 1, &coarse).unwrap() - exact).norm();
        let e2 = (fd_partial(f, p, 0, 1, &fine).unwrap() - exact).norm();
        assert!(e2 < e0 * 1e-3, "{e0} {e2}");
    }

    #[test]
    fn step_bounds_enforced() {
        assert_eq!(FdConfig::new(1e-1, 1, 1e-3), Err(Error::InvalidStep(1e-1)));
        assert!(FdConfig::new(1e-10, 1, 1e-3).is_err());
        assert!(FdConfig::new(1e-9, 0, 1e-3).is_ok());
        assert!(FdConfig::new(1e-2, 0, 1e-3).is_ok());
    }

    #[test]
    fn evaluation_failure_propagates() {
        let f = |t: [C64; 2]| if t[0].re > 1.0 { Err(Error::ZeroT2) } else { Ok(t[0]) };
        assert_eq!(
            fd_partial(f, [c(1.0, 0.0), c(0.0, 0.0)], 0, 1, &cfg()),
            Err(Error::ZeroT2)
        );
    }
}
