//! Spectral constants of the Coxeter transformation and the basis in which
//! the Cartan form becomes antidiagonal.

use std::f64::consts::PI;

use serde::Serialize;

use crate::linalg::{c, ComplexMatrix2, C64};
use crate::root_lattice::{QuiverParams, SimpleIndex};

/// Derived constants for a fixed `ℓ`.
///
/// `ν = (ℓ + √(ℓ²−4))/2`, `ρ = ν²` is the spectral radius of the Coxeter
/// transformation, and `h = 2πi / log ρ` plays the role of the Coxeter
/// number. `p` is the basis change `(β₁, β₂) = (α₁, α₂) P`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralFrame {
    pub params: QuiverParams,
    pub nu: f64,
    pub rho: f64,
    pub log_rho: f64,
    pub log_nu: f64,
    #[serde(serialize_with = "ser_complex")]
    pub h: C64,
    pub p: [[f64; 2]; 2],
    pub p_inv: [[f64; 2]; 2],
}

fn ser_complex<S: serde::Serializer>(z: &C64, s: S) -> Result<S::Ok, S::Error> {
    crate::linalg::JsonComplex::from(*z).serialize(s)
}

impl SpectralFrame {
    pub fn new(params: QuiverParams) -> Self {
        let l = params.ell() as f64;
        let nu = (l + (l * l - 4.0).sqrt()) / 2.0;
        let rho = (l * l - 2.0 + (l.powi(4) - 4.0 * l * l).sqrt()) / 2.0;
        let log_rho = rho.ln();
        let h = c(0.0, 2.0 * PI / log_rho);
        let k = 1.0 / ((l * l - 4.0) * nu).sqrt();
        let p = [[nu * k, k], [k, nu * k]];
        let det = p[0][0] * p[1][1] - p[0][1] * p[1][0];
        let p_inv = [[p[1][1] / det, -p[0][1] / det], [-p[1][0] / det, p[0][0] / det]];
        Self {
            params,
            nu,
            rho,
            log_rho,
            log_nu: nu.ln(),
            h,
            p,
            p_inv,
        }
    }

    pub fn ell(&self) -> u32 {
        self.params.ell()
    }

    pub fn p_matrix(&self) -> ComplexMatrix2 {
        ComplexMatrix2::from_real(self.p)
    }

    pub fn p_inv_matrix(&self) -> ComplexMatrix2 {
        ComplexMatrix2::from_real(self.p_inv)
    }

    /// `R₁ = [[0, ν], [ν⁻¹, 0]]`, `R₂ = [[0, ν⁻¹], [ν, 0]]`.
    pub fn transformed_reflections(&self) -> (ComplexMatrix2, ComplexMatrix2) {
        let nu = self.nu;
        (
            ComplexMatrix2::from_real([[0.0, nu], [1.0 / nu, 0.0]]),
            ComplexMatrix2::from_real([[0.0, 1.0 / nu], [nu, 0.0]]),
        )
    }

    /// `P⁻¹ r_i P` computed from the integer reflection matrices.
    pub fn conjugated_reflection(&self, i: SimpleIndex) -> ComplexMatrix2 {
        let r = ComplexMatrix2::from_real(self.params.reflection_matrix(i).to_f64());
        self.p_inv_matrix() * r * self.p_matrix()
    }

    /// `Pᵀ A P`, which is `[[0, −1], [−1, 0]]`.
    pub fn gram_in_beta(&self) -> ComplexMatrix2 {
        let a = ComplexMatrix2::from_real(self.params.cartan_matrix().to_f64());
        self.p_matrix().transpose() * a * self.p_matrix()
    }

    /// Recover the Cartan matrix from a Gram matrix in the β-basis:
    /// `(Pᵀ)⁻¹ G P⁻¹`.
    pub fn cartan_from_beta_gram(&self, gram: &ComplexMatrix2) -> ComplexMatrix2 {
        self.p_inv_matrix().transpose() * *gram * self.p_inv_matrix()
    }

    /// Semi-axes `(a, b)` of the ellipse 𝔼: `a = 2 sinh(π²/log ρ)` along the
    /// real axis and `b = 2 cosh(π²/log ρ)` along the imaginary axis.
    pub fn ellipse_axes(&self) -> (f64, f64) {
        let q = PI * PI / self.log_rho;
        (q.exp() - (-q).exp(), q.exp() + (-q).exp())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ZERO;

    fn frame(ell: i64) -> SpectralFrame {
        SpectralFrame::new(QuiverParams::new(ell).unwrap())
    }

    #[test]
    fn ell_three_constants() {
        let f = frame(3);
        assert!((f.nu - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-15);
        assert!((f.nu - 2.618033988750).abs() < 1e-12);
        assert!((f.rho - 6.854101966250).abs() < 1e-11);
        assert!((f.nu * f.nu - f.rho).abs() < 1e-12 * f.rho);
        assert!((f.log_rho - 1.924847300).abs() < 1e-9);
        assert!(f.h.re == 0.0);
        // 2π / 1.9248473002384139
        assert!((f.h.im - 3.2642513026).abs() < 1e-9);
        assert!((f.log_nu - 0.9624236501).abs() < 1e-10);
    }

    #[test]
    fn spectral_identities_sweep() {
        for ell in 3..=12 {
            let f = frame(ell);
            let l2 = (ell * ell) as f64;
            assert!((f.nu * f.nu - f.rho).abs() <= 1e-12 * f.rho);
            assert!((f.rho + 1.0 / f.rho - (l2 - 2.0)).abs() <= 1e-12 * l2);
            let back = (c(0.0, 2.0 * PI) / f.h).exp();
            assert!((back - c(f.rho, 0.0)).norm() <= 1e-10);
        }
    }

    #[test]
    fn r1_numeric_entries() {
        let (r1, r2) = frame(3).transformed_reflections();
        assert!((r1[(0, 1)].re - 2.6180339887).abs() < 1e-9);
        assert!((r1[(1, 0)].re - 0.3819660112).abs() < 1e-9);
        assert_eq!(r1[(0, 0)], ZERO);
        assert!((r1 * r1).max_abs_diff(&ComplexMatrix2::identity()) < 1e-12);
        assert!((r2 * r2).max_abs_diff(&ComplexMatrix2::identity()) < 1e-12);
    }

    #[test]
    fn closed_form_reflections_equal_conjugates() {
        for ell in 3..=12 {
            let f = frame(ell);
            let (r1, r2) = f.transformed_reflections();
            assert!(r1.max_abs_diff(&f.conjugated_reflection(SimpleIndex::One)) < 1e-12 * f.nu);
            assert!(r2.max_abs_diff(&f.conjugated_reflection(SimpleIndex::Two)) < 1e-12 * f.nu);
        }
    }

    #[test]
    fn coxeter_eigenvalues_are_rho_pair() {
        for ell in [3, 5, 9] {
            let f = frame(ell);
            let (r1, r2) = f.transformed_reflections();
            let [big, small] = (r1 * r2).eigenvalues();
            assert!((big - c(f.rho, 0.0)).norm() < 1e-10 * f.rho);
            assert!((small - c(1.0 / f.rho, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn gram_in_beta_is_antidiagonal() {
        let target = ComplexMatrix2::from_real([[0.0, -1.0], [-1.0, 0.0]]);
        for ell in [3, 7] {
            let f = frame(ell);
            let g = f.gram_in_beta();
            assert!(g.max_abs_diff(&target) < 1e-12);
            assert!(g.max_abs_diff(&g.transpose()) == 0.0);
            let a = ComplexMatrix2::from_real(f.params.cartan_matrix().to_f64());
            assert!(f.cartan_from_beta_gram(&g).max_abs_diff(&a) < 1e-10);
        }
    }

    #[test]
    fn dual_action_of_reflections() {
        // (R_iᵀ)⁻¹ acts on x-coordinates as (x¹,x²) ↦ (ν^∓1 x², ν^±1 x¹).
        let f = frame(4);
        let (r1, r2) = f.transformed_reflections();
        let x = [c(0.3, -1.2), c(2.0, 0.5)];
        let a1 = r1.transpose().inverse().unwrap().apply(x);
        let a2 = r2.transpose().inverse().unwrap().apply(x);
        assert!((a1[0] - x[1] / f.nu).norm() < 1e-12 && (a1[1] - x[0] * f.nu).norm() < 1e-12);
        assert!((a2[0] - x[1] * f.nu).norm() < 1e-12 && (a2[1] - x[0] / f.nu).norm() < 1e-12);
    }
}
