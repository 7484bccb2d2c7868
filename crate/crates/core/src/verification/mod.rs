//! Numerical verification of the Frobenius structure.
//!
//! Every check evaluates a residual at deterministic random samples and
//! keeps the maximum. Residuals are relative to the reference value when
//! that exceeds one in modulus and absolute otherwise.

pub mod fd;
mod geometry;

pub use geometry::curvature_residual;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::charts::{Chart, ChartPoint};
use crate::error::{Error, Result};
use crate::frobenius::{
    contravariant_christoffel, cubic_form_from_intersection_form, monodromy_matrices, FrobeniusData,
    DEFAULT_LOOP_RADIUS, DEFAULT_LOOP_STEPS,
};
use crate::linalg::{ComplexMatrix2, JsonComplex, C64, I, ONE, ZERO};
use crate::spectral_frame::SpectralFrame;
use fd::{derivative_1d, fd_partial, FdConfig};

pub const SCHEMA_VERSION: u32 = 1;

/// Radius of the sampling disc in the s¹-plane, before clipping to 𝔼.
pub const SAMPLE_DISC_RADIUS: f64 = 5.0;
/// Samples closer than this to `s¹ = ±2i` are redrawn.
pub const PUNCTURE_EXCLUSION: f64 = 0.3;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub samples: usize,
    pub skipped: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckRecord {
    pub fn new(name: &str, samples: usize, skipped: usize, max_residual: f64, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            samples,
            skipped,
            max_residual,
            tolerance,
            pass: samples > 0 && max_residual <= tolerance,
        }
    }
}

/// Monodromy matrices next to their expected values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonodromyRecord {
    pub m1: ComplexMatrix2,
    pub m2: ComplexMatrix2,
    pub r1: ComplexMatrix2,
    pub r2: ComplexMatrix2,
    pub coxeter_eigenvalues: [JsonComplex; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub ell: u32,
    pub seed: u64,
    pub suite: String,
    pub pass: bool,
    pub checks: Vec<CheckRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monodromy: Option<MonodromyRecord>,
}

impl VerificationReport {
    pub fn new(ell: u32, seed: u64, suite: &str, checks: Vec<CheckRecord>) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            ell,
            seed,
            suite: suite.to_string(),
            pass: checks.iter().all(|c| c.pass),
            checks,
            monodromy: None,
        }
    }

    /// Concatenate reports; the result passes iff all parts pass.
    pub fn merge(suite: &str, parts: Vec<VerificationReport>) -> Self {
        let ell = parts.first().map_or(0, |p| p.ell);
        let seed = parts.first().map_or(0, |p| p.seed);
        let monodromy = parts.iter().find_map(|p| p.monodromy.clone());
        let checks = parts.into_iter().flat_map(|p| p.checks).collect();
        Self {
            monodromy,
            ..Self::new(ell, seed, suite, checks)
        }
    }

    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// `|value − reference| / max(1, |reference|)`.
pub fn residual(value: C64, reference: C64) -> f64 {
    (value - reference).norm() / reference.norm().max(1.0)
}

fn matrix_residual(value: &ComplexMatrix2, reference: &ComplexMatrix2) -> f64 {
    value.max_abs_diff(reference) / reference.max_abs().max(1.0)
}

/// NaN-safe maximum; NaN counts as an infinite residual.
fn worst(a: f64, b: f64) -> f64 {
    if a.is_nan() || b.is_nan() {
        f64::INFINITY
    } else {
        a.max(b)
    }
}

/// The `index`-th sample `(s¹, s²)` of the stream for `seed`.
pub fn sample_point(frame: &SpectralFrame, seed: u64, index: u64) -> [C64; 2] {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let (a, b) = frame.ellipse_axes();
    let radius = SAMPLE_DISC_RADIUS.min(0.95 * a).min(0.95 * b);
    loop {
        let r = radius * rng.random::<f64>().sqrt();
        let theta = rng.random_range(0.0..std::f64::consts::TAU);
        let s1 = C64::from_polar(r, theta);
        if (s1 - 2.0 * I).norm() < PUNCTURE_EXCLUSION || (s1 + 2.0 * I).norm() < PUNCTURE_EXCLUSION {
            continue;
        }
        let s2 = C64::new(rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0));
        return [s1, s2];
    }
}

/// A sample in both the s-chart and the t-chart.
#[derive(Debug, Clone, Copy)]
pub struct Sample {
    pub s: [C64; 2],
    pub t: [C64; 2],
}

type Evaluator<'a> = dyn Fn(&Sample) -> Result<Vec<f64>> + Sync + 'a;

/// Evaluate residual vectors at the given s-chart points, skipping those
/// with `|Δ| < cfg.min_discriminant`, and reduce by maximum.
fn sweep_points(
    data: &FrobeniusData,
    points: &[[C64; 2]],
    cfg: &FdConfig,
    checks: &[(&str, f64)],
    eval: &Evaluator<'_>,
) -> Vec<CheckRecord> {
    let n = checks.len();
    let (used, skipped, maxima) = points
        .par_iter()
        .map(|s| {
            let t = data.flat_coords(s[0], s[1]);
            let disc = data
                .discriminant(ChartPoint::new(Chart::Flat, t[0], t[1]))
                .map(|d| d.norm())
                .unwrap_or(0.0);
            if disc < cfg.min_discriminant {
                return (0usize, 1usize, vec![0.0; n]);
            }
            let r = eval(&Sample { s: *s, t }).unwrap_or_else(|_| vec![f64::INFINITY; n]);
            (1, 0, r)
        })
        .reduce(
            || (0, 0, vec![0.0; n]),
            |a, b| {
                (
                    a.0 + b.0,
                    a.1 + b.1,
                    a.2.iter().zip(&b.2).map(|(x, y)| worst(*x, *y)).collect(),
                )
            },
        );
    checks
        .iter()
        .zip(maxima)
        .map(|((name, tol), m)| CheckRecord::new(name, used, skipped, m, *tol))
        .collect()
}

fn sweep(
    data: &FrobeniusData,
    n_samples: usize,
    seed: u64,
    cfg: &FdConfig,
    checks: &[(&str, f64)],
    eval: &Evaluator<'_>,
) -> Result<Vec<CheckRecord>> {
    if n_samples == 0 {
        return Err(Error::InvalidSampleCount);
    }
    cfg.validate()?;
    let points: Vec<[C64; 2]> = (0..n_samples as u64)
        .map(|i| sample_point(&data.frame, seed, i))
        .collect();
    Ok(sweep_points(data, &points, cfg, checks, eval))
}

fn eta_pair(data: &FrobeniusData, u: [C64; 2], v: [C64; 2]) -> C64 {
    let mut s = ZERO;
    for p in 0..2 {
        for q in 0..2 {
            s += u[p] * data.eta.m[p][q] * v[q];
        }
    }
    s
}

fn basis(i: usize) -> [C64; 2] {
    let mut e = [ZERO; 2];
    e[i] = ONE;
    e
}

/// `c_ijk = η(∂ᵢ∘∂ⱼ, ∂ₖ)` from the structure constants.
fn lowered_product(data: &FrobeniusData, t: [C64; 2]) -> Result<[C64; 8]> {
    let c = data.structure_constants(t[0], t[1])?;
    let mut out = [ZERO; 8];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                out[4 * i + 2 * j + k] = eta_pair(data, c.product(basis(i), basis(j)), basis(k));
            }
        }
    }
    Ok(out)
}

pub const TOL_ALGEBRA: f64 = 1e-9;
pub const TOL_SELF_ADJOINT: f64 = 1e-10;
pub const TOL_POTENTIAL: f64 = 1e-10;
pub const TOL_FD: f64 = 1e-6;
pub const TOL_DISCRIMINANT: f64 = 1e-10;
pub const TOL_CANONICAL_EIGEN: f64 = 1e-8;
pub const TOL_CANONICAL_PRODUCT: f64 = 1e-9;
pub const TOL_INTERSECTION: f64 = 1e-8;
pub const TOL_DUBROVIN: f64 = 1e-5;
pub const TOL_CURVATURE: f64 = 1e-4;
pub const TOL_MONODROMY: f64 = 1e-5;
pub const TOL_CARTAN: f64 = 1e-7;

/// Axioms (i)–(v) of a Frobenius manifold plus the named identities
/// around them.
pub fn check_axioms(frame: &SpectralFrame, n_samples: usize, seed: u64, cfg: &FdConfig) -> Result<VerificationReport> {
    check_axioms_with(&FrobeniusData::new(*frame), n_samples, seed, cfg)
}

pub fn check_axioms_with(
    data: &FrobeniusData,
    n_samples: usize,
    seed: u64,
    cfg: &FdConfig,
) -> Result<VerificationReport> {
    let checks = [
        ("commutative", TOL_ALGEBRA),
        ("associative", TOL_ALGEBRA),
        ("unit", TOL_ALGEBRA),
        ("axiom_i_self_adjoint", TOL_SELF_ADJOINT),
        ("axiom_ii_eta_flat", TOL_FD),
        ("axiom_iii_product_flat", TOL_FD),
        ("axiom_iv_unit_flat", TOL_FD),
        ("axiom_v_eta_homogeneity", TOL_FD),
        ("axiom_v_product_homogeneity", TOL_FD),
        ("potential_consistency", TOL_POTENTIAL),
        ("euler_discriminant", TOL_DISCRIMINANT),
        ("canonical_eigenvalues", TOL_CANONICAL_EIGEN),
        ("canonical_product", TOL_CANONICAL_PRODUCT),
    ];
    let eval = |p: &Sample| -> Result<Vec<f64>> {
        let t = p.t;
        let c = data.structure_constants(t[0], t[1])?;
        let scale = c.max_abs().max(1.0);
        let mut comm: f64 = 0.0;
        let mut assoc: f64 = 0.0;
        let mut unit: f64 = 0.0;
        let mut adjoint: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    comm = comm.max((c.get(i, j, k) - c.get(j, i, k)).norm() / scale);
                    let (ei, ej, ek) = (basis(i), basis(j), basis(k));
                    let left = c.product(c.product(ei, ej), ek);
                    let right = c.product(ei, c.product(ej, ek));
                    for m in 0..2 {
                        assoc = assoc.max((left[m] - right[m]).norm() / (scale * scale));
                    }
                    let a = eta_pair(data, c.product(ei, ej), ek);
                    let b = eta_pair(data, ei, c.product(ej, ek));
                    adjoint = adjoint.max(residual(a, b));
                }
                let delta = if i == j { ONE } else { ZERO };
                unit = unit.max((c.get(0, i, j) - delta).norm());
            }
        }

        // (ii): η = Lie_e g is constant in the t-chart.
        let eta_fd = data.eta_from_lie(t[0], t[1], cfg.base_step)?;
        let eta_flat = matrix_residual(&eta_fd.matrix, &data.eta_co);

        // (iii): ∇c = 0, i.e. ∂ₗc_ijk is totally symmetric.
        let dc = [
            fd_partial(|q| Ok(lowered_product(data, q)?.to_vec()), t, 0, 1, cfg)?,
            fd_partial(|q| Ok(lowered_product(data, q)?.to_vec()), t, 1, 1, cfg)?,
        ];
        let mut product_flat: f64 = 0.0;
        for l in 0..2 {
            for i in 0..2 {
                for j in 0..2 {
                    for k in 0..2 {
                        let a = dc[l][4 * i + 2 * j + k];
                        let b = dc[i][4 * l + 2 * j + k];
                        product_flat = product_flat.max(residual(a, b));
                    }
                }
            }
        }

        // (iv): the unit recovered from the product is ∂₁ and has vanishing
        // derivatives.
        let unit_of = |q: [C64; 2]| -> Result<[C64; 2]> {
            let c = data.structure_constants(q[0], q[1])?;
            let l = c.multiplication_by(basis(1));
            Ok(l.inverse().ok_or(Error::ZeroT2)?.apply(basis(1)))
        };
        let e0 = unit_of(t)?;
        let mut unit_flat = (e0[0] - ONE).norm().max(e0[1].norm());
        for l in 0..2 {
            let de = fd_partial(unit_of, t, l, 1, cfg)?;
            unit_flat = unit_flat.max(de[0].norm()).max(de[1].norm());
        }

        // (v): pull η and ∘ back along the flow of E.
        let flow_jac = |eps: f64| [(data.degrees[0] * eps).exp(), (data.degrees[1] * eps).exp()];
        let flow = |eps: f64| {
            let j = flow_jac(eps);
            [t[0] * j[0], t[1] * j[1]]
        };
        let eta_pull = |eps: f64| -> Result<ComplexMatrix2> {
            let j = flow_jac(eps);
            let eta_at = data
                .eta_from_lie_exact(flow(eps)[1])?
                .matrix
                .inverse()
                .ok_or(Error::ZeroT2)?;
            let jm = ComplexMatrix2::new(j[0], ZERO, ZERO, j[1]);
            Ok(jm.transpose() * eta_at * jm)
        };
        let lie_eta = derivative_1d(eta_pull, 1, cfg.step_for(1, 1.0), cfg.richardson_levels)?;
        let two_minus_d = 2.0 - data.dimension;
        let eta_homog = matrix_residual(&lie_eta, &data.eta.scale(two_minus_d));

        let product_pull = |eps: f64| -> Result<Vec<C64>> {
            let j = flow_jac(eps);
            let q = flow(eps);
            let c = data.structure_constants(q[0], q[1])?;
            let mut out = vec![ZERO; 8];
            for i in 0..2 {
                for jj in 0..2 {
                    for k in 0..2 {
                        out[4 * i + 2 * jj + k] = c.get(i, jj, k) * j[i] * j[jj] / j[k];
                    }
                }
            }
            Ok(out)
        };
        let lie_c = derivative_1d(product_pull, 1, cfg.step_for(1, 1.0), cfg.richardson_levels)?;
        let mut product_homog: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    product_homog = product_homog.max(residual(lie_c[4 * i + 2 * j + k], c.get(i, j, k)));
                }
            }
        }

        // η(∂ᵢ∘∂ⱼ, ∂ₖ) rebuilt from g, e and E against 𝓕's third derivatives.
        let cubic = cubic_form_from_intersection_form(data, t)?;
        let third = data.potential.third_derivatives(t)?;
        let mut consistency: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    consistency = consistency.max(residual(cubic[i][j][k], third[i][j][k]));
                }
            }
        }

        let ce = data.euler_multiplication(t[0], t[1])?.matrix;
        let disc = data.discriminant(ChartPoint::new(Chart::Flat, t[0], t[1]))?;
        let euler_disc = residual(ce.det(), disc);
        let (u1, u2) = data.canonical_coords(p.s[0], p.s[1]);
        let [l1, l2] = ce.eigenvalues();
        let direct = residual(l1, u1).max(residual(l2, u2));
        let swapped = residual(l1, u2).max(residual(l2, u1));
        let canonical_eigen = direct.min(swapped);
        let canonical_product = residual(u1 * u2, disc);

        Ok(vec![
            comm,
            assoc,
            unit,
            adjoint,
            eta_flat,
            product_flat,
            unit_flat,
            eta_homog,
            product_homog,
            consistency,
            euler_disc,
            canonical_eigen,
            canonical_product,
        ])
    };
    let mut records = sweep(data, n_samples, seed, cfg, &checks, &eval)?;
    let nondeg = matrix_residual(&(data.eta * data.eta_co), &ComplexMatrix2::identity());
    let det_ok = data.eta_co.det().norm() > 0.0;
    records.push(CheckRecord::new(
        "eta_nondegenerate",
        1,
        0,
        if det_ok { nondeg } else { f64::INFINITY },
        1e-12,
    ));
    Ok(VerificationReport::new(data.frame.ell(), seed, "axioms", records))
}

/// `η = Lie_e g`, the intersection form from the potential, and the
/// Dubrovin identity for all eight index triples.
pub fn check_dubrovin(
    frame: &SpectralFrame,
    n_samples: usize,
    seed: u64,
    cfg: &FdConfig,
) -> Result<VerificationReport> {
    check_dubrovin_with(&FrobeniusData::new(*frame), n_samples, seed, cfg)
}

pub fn check_dubrovin_with(
    data: &FrobeniusData,
    n_samples: usize,
    seed: u64,
    cfg: &FdConfig,
) -> Result<VerificationReport> {
    let checks = [
        ("eta_lie_fd", TOL_FD),
        ("eta_lie_closed_form", 0.0),
        ("intersection_form_reconstruction", TOL_INTERSECTION),
        ("dubrovin_identity", TOL_DUBROVIN),
    ];
    let eval = |p: &Sample| -> Result<Vec<f64>> {
        let t = p.t;
        let eta_fd = data.eta_from_lie(t[0], t[1], cfg.base_step)?.matrix;
        let eta_exact = data.eta_from_lie_exact(t[1])?.matrix;
        let g_rec = data.intersection_form_from_potential(t, cfg)?;
        let g = data.g_flat(t)?;

        let gamma = contravariant_christoffel(data, t, cfg)?;
        let third = data.potential.third_derivatives(t)?;
        let shift = (data.dimension - 1.0) * 0.5;
        let mut dubrovin: f64 = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    let mut rhs = ZERO;
                    for a in 0..2 {
                        for b in 0..2 {
                            rhs += data.eta_co.m[i][a] * data.eta_co.m[j][b] * third[k][a][b];
                        }
                    }
                    rhs *= shift + data.degrees[j];
                    dubrovin = dubrovin.max(residual(gamma[i][j][k], rhs));
                }
            }
        }
        Ok(vec![
            matrix_residual(&eta_fd, &data.eta_co),
            eta_exact.max_abs_diff(&data.eta_co),
            matrix_residual(&g_rec, &g),
            dubrovin,
        ])
    };
    let records = sweep(data, n_samples, seed, cfg, &checks, &eval)?;
    Ok(VerificationReport::new(data.frame.ell(), seed, "dubrovin", records))
}

/// Flatness of the Levi-Civita connection of `g` in the t-chart.
pub fn check_second_connection_flat(
    frame: &SpectralFrame,
    n_samples: usize,
    seed: u64,
    cfg: &FdConfig,
) -> Result<VerificationReport> {
    if n_samples == 0 {
        return Err(Error::InvalidSampleCount);
    }
    let points: Vec<[C64; 2]> = (0..n_samples as u64).map(|i| sample_point(frame, seed, i)).collect();
    check_second_connection_flat_at(frame, &points, seed, cfg)
}

/// As [`check_second_connection_flat`] at explicit s-chart points.
pub fn check_second_connection_flat_at(
    frame: &SpectralFrame,
    points: &[[C64; 2]],
    seed: u64,
    cfg: &FdConfig,
) -> Result<VerificationReport> {
    cfg.validate()?;
    let data = FrobeniusData::new(*frame);
    let checks = [("second_connection_curvature", TOL_CURVATURE)];
    let eval = |p: &Sample| -> Result<Vec<f64>> {
        let metric = |q: [C64; 2]| data.g_flat(q)?.inverse().ok_or(Error::ZeroT2);
        Ok(vec![curvature_residual(metric, p.t, cfg)?])
    };
    let mut records = sweep_points(&data, points, cfg, &checks, &eval);
    let x_metric = |_: [C64; 2]| -> Result<ComplexMatrix2> {
        let g = data.g_cometric(ChartPoint::new(Chart::X, ONE, ONE))?.matrix;
        g.inverse().ok_or(Error::ZeroT2)
    };
    let x_curv = curvature_residual(x_metric, [C64::new(0.7, 0.2), C64::new(1.1, -0.4)], cfg)?;
    records.push(CheckRecord::new("x_chart_constant_metric", 1, 0, x_curv, 0.0));
    Ok(VerificationReport::new(frame.ell(), seed, "connection", records))
}

/// Monodromy of the periods around `s¹ = ±2i` against the reflections
/// `R₁, R₂`.
pub fn check_monodromy_group(frame: &SpectralFrame, cfg: &FdConfig) -> Result<VerificationReport> {
    cfg.validate()?;
    let (m1, m2) = monodromy_matrices(frame, DEFAULT_LOOP_RADIUS, DEFAULT_LOOP_STEPS)?;
    let (r1, r2) = frame.transformed_reflections();
    let (m1, m2) = (m1.matrix, m2.matrix);
    let id = ComplexMatrix2::identity();
    let [big, small] = (m1 * m2).eigenvalues();
    let rho = C64::new(frame.rho, 0.0);
    let eig = ((big - rho).norm() / frame.rho).max((small - 1.0 / rho).norm());
    let checks = vec![
        CheckRecord::new("monodromy_m1", 1, 0, m1.max_abs_diff(&r1), TOL_MONODROMY),
        CheckRecord::new("monodromy_m2", 1, 0, m2.max_abs_diff(&r2), TOL_MONODROMY),
        CheckRecord::new(
            "monodromy_m1_involution",
            1,
            0,
            (m1 * m1).max_abs_diff(&id),
            TOL_MONODROMY,
        ),
        CheckRecord::new(
            "monodromy_m2_involution",
            1,
            0,
            (m2 * m2).max_abs_diff(&id),
            TOL_MONODROMY,
        ),
        CheckRecord::new("monodromy_coxeter_eigenvalues", 1, 0, eig, TOL_MONODROMY),
    ];
    let mut report = VerificationReport::new(frame.ell(), 0, "monodromy", checks);
    report.monodromy = Some(MonodromyRecord {
        m1,
        m2,
        r1,
        r2,
        coxeter_eigenvalues: [big.into(), small.into()],
    });
    Ok(report)
}

/// The t-chart intersection form pushed to the x-chart through the period
/// map equals `[[0, −1], [−1, 0]]`, and `(Pᵀ)⁻¹ · P⁻¹` of it is the Cartan
/// matrix.
pub fn check_cartan_pullback(
    frame: &SpectralFrame,
    n_samples: usize,
    seed: u64,
    cfg: &FdConfig,
) -> Result<VerificationReport> {
    let data = FrobeniusData::new(*frame);
    let target = ComplexMatrix2::antidiagonal(-ONE);
    let cartan = ComplexMatrix2::from_real(frame.params.cartan_matrix().to_f64());
    let checks = [("cartan_pullback", TOL_CARTAN), ("cartan_matrix_recovered", TOL_CARTAN)];
    let eval = |p: &Sample| -> Result<Vec<f64>> {
        let g = data.cartan_pullback(p.s[0], p.s[1], cfg)?.matrix;
        let a = frame.cartan_from_beta_gram(&g);
        Ok(vec![matrix_residual(&g, &target), matrix_residual(&a, &cartan)])
    };
    // Samples on the period cut segment would fail the single-point formula;
    // the disc sampler never lands there with positive probability.
    let records = sweep(&data, n_samples, seed, cfg, &checks, &eval)?;
    Ok(VerificationReport::new(frame.ell(), seed, "cartan", records))
}

/// Which checks `cmd verify` runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Axioms,
    Dubrovin,
    Monodromy,
    Connection,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Axioms => "axioms",
            Suite::Dubrovin => "dubrovin",
            Suite::Monodromy => "monodromy",
            Suite::Connection => "connection",
        }
    }
}

/// Run a suite. The monodromy suite includes the Cartan pullback.
pub fn run_suite(
    frame: &SpectralFrame,
    suite: Suite,
    n_samples: usize,
    seed: u64,
    cfg: &FdConfig,
) -> Result<VerificationReport> {
    let mut parts = Vec::new();
    if matches!(suite, Suite::All | Suite::Axioms) {
        parts.push(check_axioms(frame, n_samples, seed, cfg)?);
    }
    if matches!(suite, Suite::All | Suite::Dubrovin) {
        parts.push(check_dubrovin(frame, n_samples, seed, cfg)?);
    }
    if matches!(suite, Suite::All | Suite::Connection) {
        parts.push(check_second_connection_flat(frame, n_samples, seed, cfg)?);
    }
    if matches!(suite, Suite::All | Suite::Monodromy) {
        parts.push(check_monodromy_group(frame, cfg)?);
        parts.push(check_cartan_pullback(frame, n_samples, seed, cfg)?);
    }
    let mut report = VerificationReport::merge(suite.name(), parts);
    report.seed = seed;
    report.ell = frame.ell();
    Ok(report)
}
