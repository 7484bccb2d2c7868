//! The Frobenius structure on `X̃⫽W`.
//!
//! Flat coordinates are `t¹ = e^{h s²/2} s¹`, `t² = e^{s²}`. In them the
//! metric is `η = [[0, −1/h], [−1/h, 0]]`, the unit is `e = ∂/∂t¹`, the
//! Euler field is `E = t¹∂₁ + (2/h) t²∂₂`, and the potential is
//!
//! ```text
//! F = −(t¹)² t² / (2h) + (t²)^{h+1} / (h² − 1).
//! ```
//!
//! Complex powers at a single point use the principal logarithm, so the
//! t-chart formulas agree with the s-chart ones for `|Im s²| < π`.

mod periods;
mod reconstruction;

pub use periods::{
    monodromy_matrices, monodromy_matrix, periods, Orientation, PeriodContinuation, Periods, Puncture,
    DEFAULT_LOOP_RADIUS, DEFAULT_LOOP_STEPS,
};
pub use reconstruction::{
    christoffel, contravariant_christoffel, cubic_form_from_intersection_form, product_from_intersection_form,
};

use serde::Serialize;

use crate::charts::{Chart, ChartPoint};
use crate::error::{Error, Result};
use crate::linalg::{cpow, ComplexMatrix2, JsonComplex, C64, I, ONE, ZERO};
use crate::spectral_frame::SpectralFrame;
use crate::verification::fd::{derivative_1d, fd_partial, FdConfig};

/// Index placement of a [`Tensor2`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variance {
    /// Components on vectors, `T(∂ᵢ, ∂ⱼ)`.
    Covariant,
    /// Components on 1-forms, `T(dzⁱ, dzʲ)`.
    Contravariant,
    /// An endomorphism; column `j` holds the image of `∂ⱼ`.
    Mixed,
}

/// A 2×2 complex tensor in a named chart.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Tensor2 {
    pub matrix: ComplexMatrix2,
    pub chart: Chart,
    pub variance: Variance,
}

impl Tensor2 {
    pub fn new(matrix: ComplexMatrix2, chart: Chart, variance: Variance) -> Self {
        Self {
            matrix,
            chart,
            variance,
        }
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.matrix.max_abs_diff(&self.matrix.transpose()) <= tol * self.matrix.max_abs().max(1.0)
    }
}

/// Components of a vector field at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorField2 {
    pub chart: Chart,
    pub components: [C64; 2],
}

impl Serialize for VectorField2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("VectorField2", 2)?;
        st.serialize_field("chart", &self.chart)?;
        st.serialize_field(
            "components",
            &[
                JsonComplex::from(self.components[0]),
                JsonComplex::from(self.components[1]),
            ],
        )?;
        st.end()
    }
}

/// `F = q (t¹)² t² + c (t²)^{h+1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Potential {
    pub quadratic: C64,
    pub power: C64,
    pub h: C64,
}

impl Potential {
    pub fn canonical(h: C64) -> Self {
        Self {
            quadratic: -ONE / (2.0 * h),
            power: ONE / (h * h - 1.0),
            h,
        }
    }

    pub fn value(&self, t: [C64; 2]) -> Result<C64> {
        let [t1, t2] = nonzero_t2(t)?;
        Ok(self.quadratic * t1 * t1 * t2 + self.power * cpow(t2, self.h + 1.0))
    }

    /// Closed-form Hessian `∂ᵢ∂ⱼF`.
    pub fn hessian(&self, t: [C64; 2]) -> Result<ComplexMatrix2> {
        let [t1, t2] = nonzero_t2(t)?;
        let h = self.h;
        let f11 = 2.0 * self.quadratic * t2;
        let f12 = 2.0 * self.quadratic * t1;
        let f22 = self.power * (h + 1.0) * h * cpow(t2, h - 1.0);
        Ok(ComplexMatrix2::new(f11, f12, f12, f22))
    }

    /// Closed-form third derivatives; `out[a][b][c] = ∂ₐ∂_b∂_cF`.
    pub fn third_derivatives(&self, t: [C64; 2]) -> Result<[[[C64; 2]; 2]; 2]> {
        let [_, t2] = nonzero_t2(t)?;
        let h = self.h;
        let mut out = [[[ZERO; 2]; 2]; 2];
        let f112 = 2.0 * self.quadratic;
        out[0][0][1] = f112;
        out[0][1][0] = f112;
        out[1][0][0] = f112;
        out[1][1][1] = self.power * (h + 1.0) * h * (h - 1.0) * cpow(t2, h - 2.0);
        Ok(out)
    }
}

fn nonzero_t2(t: [C64; 2]) -> Result<[C64; 2]> {
    if t[1] == ZERO || !t[1].is_finite() {
        Err(Error::ZeroT2)
    } else {
        Ok(t)
    }
}

/// Structure constants `C[i][j][k]` with `∂ᵢ∘∂ⱼ = Σₖ C[i][j][k] ∂ₖ`
/// (indices 0-based).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StructureConstants(pub [[[C64; 2]; 2]; 2]);

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize, k: usize) -> C64 {
        self.0[i][j][k]
    }

    pub fn product(&self, u: [C64; 2], v: [C64; 2]) -> [C64; 2] {
        let mut out = [ZERO; 2];
        for i in 0..2 {
            for j in 0..2 {
                for (k, o) in out.iter_mut().enumerate() {
                    *o += u[i] * v[j] * self.0[i][j][k];
                }
            }
        }
        out
    }

    /// Matrix of `v ↦ u∘v`; column `j` is `u∘∂ⱼ`.
    pub fn multiplication_by(&self, u: [C64; 2]) -> ComplexMatrix2 {
        let mut m = ComplexMatrix2::zero();
        for j in 0..2 {
            let mut e = [ZERO; 2];
            e[j] = ONE;
            let col = self.product(u, e);
            m.m[0][j] = col[0];
            m.m[1][j] = col[1];
        }
        m
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }
}

/// The Frobenius data `(η, ∘, e, E)` for a fixed `ℓ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrobeniusData {
    pub frame: SpectralFrame,
    /// `d = 1 − 2/h`.
    pub dimension: C64,
    /// `(d₁, d₂) = (1, 2/h)`, the E-degrees of `t¹, t²`.
    pub degrees: [C64; 2],
    /// `η(dtⁱ, dtʲ) = [[0, −h], [−h, 0]]`.
    pub eta_co: ComplexMatrix2,
    /// `η(∂ᵢ, ∂ⱼ) = [[0, −1/h], [−1/h, 0]]`.
    pub eta: ComplexMatrix2,
    pub potential: Potential,
}

impl FrobeniusData {
    pub fn new(frame: SpectralFrame) -> Self {
        let h = frame.h;
        Self {
            frame,
            dimension: ONE - 2.0 / h,
            degrees: [ONE, 2.0 / h],
            eta_co: ComplexMatrix2::antidiagonal(-h),
            eta: ComplexMatrix2::antidiagonal(-ONE / h),
            potential: Potential::canonical(h),
        }
    }

    pub fn with_potential(frame: SpectralFrame, potential: Potential) -> Self {
        Self {
            potential,
            ..Self::new(frame)
        }
    }

    pub fn h(&self) -> C64 {
        self.frame.h
    }

    /// `(t¹, t²) = (e^{h s²/2} s¹, e^{s²})`.
    pub fn flat_coords(&self, s1: C64, s2: C64) -> [C64; 2] {
        [(self.h() * s2 * 0.5).exp() * s1, s2.exp()]
    }

    /// Inverse of [`Self::flat_coords`] with `s² = Log t²`.
    pub fn quotient_coords(&self, t1: C64, t2: C64) -> Result<[C64; 2]> {
        let [t1, t2] = nonzero_t2([t1, t2])?;
        let s2 = t2.ln();
        Ok([t1 * (-self.h() * s2 * 0.5).exp(), s2])
    }

    /// Jacobian `∂tⁱ/∂sʲ`.
    pub fn flat_jacobian(&self, s1: C64, s2: C64) -> ComplexMatrix2 {
        let h = self.h();
        let e = (h * s2 * 0.5).exp();
        ComplexMatrix2::new(e, h * 0.5 * e * s1, ZERO, s2.exp())
    }

    pub fn potential(&self, t1: C64, t2: C64) -> Result<C64> {
        self.potential.value([t1, t2])
    }

    /// The intersection form `g` on 1-forms in any chart.
    pub fn g_cometric(&self, point: ChartPoint) -> Result<Tensor2> {
        let h = self.h();
        let [a, b] = point.coords();
        let m = match point.chart {
            Chart::X => ComplexMatrix2::antidiagonal(-ONE),
            Chart::Cover => ComplexMatrix2::antidiagonal(-(-(a + b)).exp()),
            Chart::Quotient => {
                let e = (-b).exp();
                ComplexMatrix2::new(h * h * (4.0 + a * a) * 0.5 * e, ZERO, ZERO, -2.0 * e)
            }
            Chart::Flat => {
                let [t1, t2] = nonzero_t2([a, b])?;
                ComplexMatrix2::new(2.0 * h * h * cpow(t2, h - 1.0), -h * t1, -h * t1, -2.0 * t2)
            }
        };
        Ok(Tensor2::new(m, point.chart, Variance::Contravariant))
    }

    pub fn g_flat(&self, t: [C64; 2]) -> Result<ComplexMatrix2> {
        Ok(self.g_cometric(ChartPoint::new(Chart::Flat, t[0], t[1]))?.matrix)
    }

    /// `η = Lie_e g` by a central difference in `t¹` with the given step.
    pub fn eta_from_lie(&self, t1: C64, t2: C64, fd_step: f64) -> Result<Tensor2> {
        if !(1e-9..=1e-2).contains(&fd_step) {
            return Err(Error::InvalidStep(fd_step));
        }
        nonzero_t2([t1, t2])?;
        let h = fd_step * t1.norm().max(1.0);
        let m = derivative_1d(|eps| self.g_flat([t1 + eps, t2]), 1, h, 1)?;
        Ok(Tensor2::new(m, Chart::Flat, Variance::Contravariant))
    }

    /// `Lie_e g` as the unit-step difference `g(t¹+1, t²) − g(t¹, t²)`,
    /// exact because `g` is affine in `t¹`.
    pub fn eta_from_lie_exact(&self, t2: C64) -> Result<Tensor2> {
        let m = self.g_flat([ONE, t2])? - self.g_flat([ZERO, t2])?;
        Ok(Tensor2::new(m, Chart::Flat, Variance::Contravariant))
    }

    /// `C_ij^k = Σₐ η^{ka} ∂ₐ∂ᵢ∂ⱼF`.
    pub fn structure_constants(&self, t1: C64, t2: C64) -> Result<StructureConstants> {
        let third = self.potential.third_derivatives([t1, t2])?;
        let mut out = [[[ZERO; 2]; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    out[i][j][k] = (0..2).map(|a| self.eta_co.m[k][a] * third[a][i][j]).sum();
                }
            }
        }
        Ok(StructureConstants(out))
    }

    pub fn unit_field(&self) -> VectorField2 {
        VectorField2 {
            chart: Chart::Flat,
            components: [ONE, ZERO],
        }
    }

    /// `E = t¹∂₁ + (2/h) t²∂₂`, written with the stored degrees.
    pub fn euler_field(&self, t1: C64, t2: C64) -> VectorField2 {
        VectorField2 {
            chart: Chart::Flat,
            components: [self.degrees[0] * t1, self.degrees[1] * t2],
        }
    }

    /// The endomorphism `C_E: v ↦ E∘v` in the basis `(∂₁, ∂₂)`.
    pub fn euler_multiplication(&self, t1: C64, t2: C64) -> Result<Tensor2> {
        let c = self.structure_constants(t1, t2)?;
        let m = c.multiplication_by(self.euler_field(t1, t2).components);
        Ok(Tensor2::new(m, Chart::Flat, Variance::Mixed))
    }

    /// `Δ = det C_E`: `(t¹)² + 4(t²)^h` in the t-chart and
    /// `e^{h s²}((s¹)² + 4)` in the s-chart.
    pub fn discriminant(&self, point: ChartPoint) -> Result<C64> {
        let h = self.h();
        match point.chart {
            Chart::Flat => {
                let [t1, t2] = nonzero_t2(point.coords())?;
                Ok(t1 * t1 + 4.0 * cpow(t2, h))
            }
            Chart::Quotient => Ok((h * point.c2).exp() * (point.c1 * point.c1 + 4.0)),
            other => Err(Error::UnsupportedChart(other.name())),
        }
    }

    /// Canonical coordinates `u± = e^{h s²/2}(s¹ ± 2i)`, the eigenvalues of
    /// `C_E`.
    pub fn canonical_coords(&self, s1: C64, s2: C64) -> (C64, C64) {
        let e = (self.h() * s2 * 0.5).exp();
        (e * (s1 + 2.0 * I), e * (s1 - 2.0 * I))
    }

    /// `Σ g(∂/∂xⁱ, ∂/∂xʲ) xⁱxʲ = −2x¹x²` evaluated on the periods.
    pub fn flat_function_from_periods(&self, s1: C64, s2: C64) -> Result<C64> {
        let p = periods(&self.frame, s1, s2)?;
        Ok(-2.0 * p.x1 * p.x2)
    }

    /// The intersection form rebuilt from the potential,
    /// `g^{ij} = Σ η^{ia} η^{jb} E(∂ₐ∂_bF)`, with `E` applied by a finite
    /// difference along its flow.
    pub fn intersection_form_from_potential(&self, t: [C64; 2], cfg: &FdConfig) -> Result<ComplexMatrix2> {
        cfg.validate()?;
        let flow = |eps: f64| -> [C64; 2] {
            [
                t[0] * (self.degrees[0] * eps).exp(),
                t[1] * (self.degrees[1] * eps).exp(),
            ]
        };
        let e_hess = derivative_1d(
            |eps| self.potential.hessian(flow(eps)),
            1,
            cfg.base_step,
            cfg.richardson_levels,
        )?;
        Ok(self.eta_co * e_hess * self.eta_co.transpose())
    }

    /// The intersection form transported to the x-chart through the period
    /// map. Equals `[[0, −1], [−1, 0]] = PᵀAP`.
    pub fn cartan_pullback(&self, s1: C64, s2: C64, cfg: &FdConfig) -> Result<Tensor2> {
        let start = PeriodContinuation::start(&self.frame, s1, s2)?;
        let mut jac_xs = ComplexMatrix2::zero();
        for k in 0..2 {
            let col = fd_partial(
                |s: [C64; 2]| {
                    let mut c = start.clone();
                    let p = c.advance(s[0], s[1]);
                    Ok([p.x1, p.x2])
                },
                [s1, s2],
                k,
                1,
                cfg,
            )?;
            jac_xs.m[0][k] = col[0];
            jac_xs.m[1][k] = col[1];
        }
        let jac_ts = self.flat_jacobian(s1, s2);
        let jac_xt = jac_xs * jac_ts.inverse().ok_or(Error::ZeroT2)?;
        let t = self.flat_coords(s1, s2);
        let g_t = self.g_flat(t)?;
        let m = jac_xt * g_t * jac_xt.transpose();
        Ok(Tensor2::new(m, Chart::X, Variance::Contravariant))
    }
}
