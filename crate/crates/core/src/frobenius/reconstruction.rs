//! The product recovered from the intersection form alone.
//!
//! In flat coordinates the Levi-Civita connection of `g` satisfies
//! `g(dtⁱ, ∇ₖdtʲ) = ((d−1)/2 + dⱼ) Σ η^{ia}η^{jb} ∂ₖ∂ₐ∂_b𝓕`, so the
//! Christoffel symbols of `g` determine the structure constants. This gives
//! a route to `∘` that never touches the potential.

use super::{FrobeniusData, StructureConstants};
use crate::error::Result;
use crate::linalg::{ComplexMatrix2, C64, ZERO};
use crate::verification::fd::{fd_partial, FdConfig};

/// `Γ[a][b][c] = Γᵃ_{bc}` of a covariant metric, by finite differences.
pub fn christoffel(
    metric: impl Fn([C64; 2]) -> Result<ComplexMatrix2>,
    point: [C64; 2],
    cfg: &FdConfig,
) -> Result<[[[C64; 2]; 2]; 2]> {
    let g = metric(point)?;
    let g_inv = g.inverse().ok_or(crate::error::Error::ZeroT2)?;
    let dg = [
        fd_partial(&metric, point, 0, 1, cfg)?,
        fd_partial(&metric, point, 1, 1, cfg)?,
    ];
    // lowered[e][b][c] = ½(∂_b g_ec + ∂_c g_eb − ∂_e g_bc)
    let mut lowered = [[[ZERO; 2]; 2]; 2];
    for e in 0..2 {
        for b in 0..2 {
            for cc in 0..2 {
                lowered[e][b][cc] = 0.5 * (dg[b].m[e][cc] + dg[cc].m[e][b] - dg[e].m[b][cc]);
            }
        }
    }
    let mut out = [[[ZERO; 2]; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            for cc in 0..2 {
                out[a][b][cc] = (0..2).map(|e| g_inv.m[a][e] * lowered[e][b][cc]).sum();
            }
        }
    }
    Ok(out)
}

/// `Γ^{ij}_k = g(dtⁱ, ∇ₖdtʲ) = −Σ_b g^{ib} Γʲ_{kb}` in the t-chart;
/// `out[i][j][k]`.
pub fn contravariant_christoffel(data: &FrobeniusData, t: [C64; 2], cfg: &FdConfig) -> Result<[[[C64; 2]; 2]; 2]> {
    let g_co = data.g_flat(t)?;
    let gamma = christoffel(|p| data.g_flat(p)?.inverse().ok_or(crate::error::Error::ZeroT2), t, cfg)?;
    let mut out = [[[ZERO; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                out[i][j][k] = -(0..2).map(|b| g_co.m[i][b] * gamma[j][k][b]).sum::<C64>();
            }
        }
    }
    Ok(out)
}

/// `C_ij^k = Σₐ η_{ia} Γ^{ak}_j / ((d−1)/2 + d_k)`, using the degrees
/// stored in `data`.
pub fn product_from_intersection_form(data: &FrobeniusData, t: [C64; 2], cfg: &FdConfig) -> Result<StructureConstants> {
    let gamma = contravariant_christoffel(data, t, cfg)?;
    let shift = (data.dimension - 1.0) * 0.5;
    let mut out = [[[ZERO; 2]; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                let s: C64 = (0..2).map(|a| data.eta.m[i][a] * gamma[a][k][j]).sum();
                out[i][j][k] = s / (shift + data.degrees[k]);
            }
        }
    }
    Ok(StructureConstants(out))
}

/// `c_{kab} = η(∂ₖ∘∂ₐ, ∂_b)` from `g` in closed form.
///
/// Lowering both indices of `g^{ij} = Σₖ Eᵏ c_k^{ij}` gives
/// `(ηgη)_{ab} = E¹c_{1ab} + E²c_{2ab}`; the unit fixes `c_{1ab} = η_{ab}`
/// and the remaining components follow by division by `E²`.
pub fn cubic_form_from_intersection_form(data: &FrobeniusData, t: [C64; 2]) -> Result<[[[C64; 2]; 2]; 2]> {
    let g = data.g_flat(t)?;
    let lowered = data.eta * g * data.eta;
    let e = data.euler_field(t[0], t[1]).components;
    let mut out = [[[ZERO; 2]; 2]; 2];
    for a in 0..2 {
        for b in 0..2 {
            out[0][a][b] = data.eta.m[a][b];
            out[1][a][b] = (lowered.m[a][b] - e[0] * data.eta.m[a][b]) / e[1];
        }
    }
    Ok(out)
}
