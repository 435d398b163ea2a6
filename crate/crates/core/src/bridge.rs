//! Correspondence between split-complex Hermitian matrices and the real
//! Ginibre ensemble.
//!
//! For `N = 2` a fixed orthogonal `O` block-diagonalizes the 4×4 real
//! embedding of `H = [[Λ₁, δ − jγ], [δ + jγ, Λ₂]]` into two copies of the
//! real matrix `[[a, b], [d, c]] = [[Λ₂, δ − γ], [δ + γ, Λ₁]]`.
//!
//! For general `N`, writing `H = X + jY` (X symmetric, Y antisymmetric), the
//! embedding `[[X, Y], [Y, X]]` is conjugated by `(1/√2)[[I, I], [I, −I]]`
//! into `diag(X + Y, X − Y)`, and `X − Y = (X + Y)ᵀ`.

use std::f64::consts::FRAC_1_SQRT_2;

use nalgebra::{DMatrix, Matrix4};

use crate::error::{domain, Error, Result};
use crate::matrix::{MatrixKind, SplitMatrix};

/// Signed permutation `S` with `embed4(H) = S · Re(rep(H)) · S`, mapping the
/// Kronecker layout of the complex representation to the 4×4 layout used
/// here. Negating the second basis vector of each 2-block flips `σ_x`.
pub const LAYOUT_SIGNS: [f64; 4] = [1.0, -1.0, 1.0, -1.0];

#[derive(Clone, Debug, PartialEq)]
pub struct BridgeResult {
    pub ginibre_block: DMatrix<f64>,
    pub residual: f64,
}

/// `(Λ₁, Λ₂, δ, γ)` of a 2×2 split-complex Hermitian matrix.
pub fn gsce_2x2_params(h: &SplitMatrix) -> Result<(f64, f64, f64, f64)> {
    if h.n() != 2 || h.kind() != MatrixKind::SplitComplexHermitian {
        return Err(domain("expected a 2x2 split-complex Hermitian matrix"));
    }
    let h12 = h.get(0, 1);
    Ok((h.get(0, 0).p0, h.get(1, 1).p0, h12.p0, -h12.p2))
}

/// The fixed orthogonal matrix `(1/√2)[[0,1,0,−1],[0,1,0,1],[1,0,−1,0],[1,0,1,0]]`.
pub fn bridge_orthogonal() -> Matrix4<f64> {
    Matrix4::new(
        0.0, 1.0, 0.0, -1.0, //
        0.0, 1.0, 0.0, 1.0, //
        1.0, 0.0, -1.0, 0.0, //
        1.0, 0.0, 1.0, 0.0,
    ) * FRAC_1_SQRT_2
}

/// Real 4×4 embedding
/// `[[Λ₁,0,δ,γ],[0,Λ₁,γ,δ],[δ,−γ,Λ₂,0],[−γ,δ,0,Λ₂]]`.
pub fn embed4(h: &SplitMatrix) -> Result<Matrix4<f64>> {
    let (l1, l2, d, g) = gsce_2x2_params(h)?;
    Ok(Matrix4::new(
        l1, 0.0, d, g, //
        0.0, l1, g, d, //
        d, -g, l2, 0.0, //
        -g, d, 0.0, l2,
    ))
}

/// The 2×2 real Ginibre block `[[Λ₂, δ − γ], [δ + γ, Λ₁]]` and the max-abs
/// defect of `Oᵀ embed4(H) O = diag([[a, b], [d, c]], [[a, d], [b, c]])`.
pub fn ginibre_equivalent(h: &SplitMatrix) -> Result<BridgeResult> {
    let (l1, l2, d, g) = gsce_2x2_params(h)?;
    let (a, b, dd, c) = (l2, d - g, d + g, l1);
    let o = bridge_orthogonal();
    let conj = o.transpose() * embed4(h)? * o;
    let want = Matrix4::new(
        a, b, 0.0, 0.0, //
        dd, c, 0.0, 0.0, //
        0.0, 0.0, a, dd, //
        0.0, 0.0, b, c,
    );
    let residual = (conj - want).amax();
    let scale = h.max_abs().max(1.0);
    if residual > 1e-10 * scale {
        return Err(Error::Consistency(format!("bridge residual {residual:e}")));
    }
    Ok(BridgeResult { ginibre_block: DMatrix::from_row_slice(2, 2, &[a, b, dd, c]), residual })
}

/// General-`N` bridge: returns `A = X + Y` and the defect of the similarity
/// `W [[X, Y], [Y, X]] W = diag(X + Y, X − Y)` with `W = (1/√2)[[I, I], [I, −I]]`.
pub fn block_similarity(h: &SplitMatrix) -> Result<BridgeResult> {
    if h.kind() != MatrixKind::SplitComplexHermitian {
        return Err(domain("expected a split-complex Hermitian matrix"));
    }
    let n = h.n();
    let x = DMatrix::from_fn(n, n, |r, c| h.get(r, c).p0);
    let y = DMatrix::from_fn(n, n, |r, c| h.get(r, c).p2);
    let mut emb = DMatrix::zeros(2 * n, 2 * n);
    emb.view_mut((0, 0), (n, n)).copy_from(&x);
    emb.view_mut((n, n), (n, n)).copy_from(&x);
    emb.view_mut((0, n), (n, n)).copy_from(&y);
    emb.view_mut((n, 0), (n, n)).copy_from(&y);
    let mut w = DMatrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        w[(i, i)] = FRAC_1_SQRT_2;
        w[(i, n + i)] = FRAC_1_SQRT_2;
        w[(n + i, i)] = FRAC_1_SQRT_2;
        w[(n + i, n + i)] = -FRAC_1_SQRT_2;
    }
    let a = &x + &y;
    let mut want = DMatrix::zeros(2 * n, 2 * n);
    want.view_mut((0, 0), (n, n)).copy_from(&a);
    want.view_mut((n, n), (n, n)).copy_from(&(&x - &y));
    let residual = (w.transpose() * emb * &w - want).amax();
    Ok(BridgeResult { ginibre_block: a, residual })
}
