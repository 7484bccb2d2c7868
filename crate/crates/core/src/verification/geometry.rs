//! Curvature of a metric given in a chart, by finite differences.

use crate::error::{Error, Result};
use crate::frobenius::christoffel;
use crate::linalg::{ComplexMatrix2, C64};

use super::fd::{fd_second, FdConfig};

/// Largest component of the Riemann tensor `R_abcd` of a covariant
/// metric, relative to `max(1, size of the largest term)`.
pub fn curvature_residual(
    metric: impl Fn([C64; 2]) -> Result<ComplexMatrix2>,
    point: [C64; 2],
    cfg: &FdConfig,
) -> Result<f64> {
    let g = metric(point)?;
    if !g.is_finite() || g.det().norm() == 0.0 {
        return Err(Error::ZeroT2);
    }
    let gamma = christoffel(&metric, point, cfg)?;
    // d2[a][b] = ∂ₐ∂_b g
    let mut d2 = [[ComplexMatrix2::zero(); 2]; 2];
    for a in 0..2 {
        for b in a..2 {
            let v = fd_second(&metric, point, a, b, cfg)?;
            d2[a][b] = v;
            d2[b][a] = v;
        }
    }
    let mut worst: f64 = 0.0;
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    let second = 0.5 * (d2[b][c].m[a][d] + d2[a][d].m[b][c] - d2[a][c].m[b][d] - d2[b][d].m[a][c]);
                    let mut quad = C64::new(0.0, 0.0);
                    let mut scale = second.norm();
                    for e in 0..2 {
                        for f in 0..2 {
                            let t1 = g.m[e][f] * gamma[e][b][c] * gamma[f][a][d];
                            let t2 = g.m[e][f] * gamma[e][b][d] * gamma[f][a][c];
                            scale = scale.max(t1.norm()).max(t2.norm());
                            quad += t1 - t2;
                        }
                    }
                    let r = (second + quad).norm() / scale.max(1.0);
                    worst = worst.max(r);
                }
            }
        }
    }
    Ok(worst)
}
