//! Dense complex linear algebra used by the spectral code: characteristic
//! polynomials, eigenvalues and null vectors (via nalgebra), and the
//! pairing of doubly degenerate eigenvalues.
//!
//! Matrices are `nalgebra::DMatrix<Complex64>`; polynomials are coefficient
//! vectors in ascending powers (`c[k]` multiplies `λ^k`).

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{numerical, Error, Result};

pub type CMatrix = DMatrix<Complex64>;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };
const ONE: Complex64 = Complex64 { re: 1.0, im: 0.0 };

/// Characteristic polynomial `det(λI - A)` by the Faddeev–LeVerrier
/// recursion. Returns `n + 1` ascending coefficients, the last being 1.
pub fn faddeev_leverrier(a: &CMatrix) -> Vec<Complex64> {
    let n = a.nrows();
    assert_eq!(n, a.ncols(), "square matrix required");
    let mut coeffs = vec![ZERO; n + 1];
    coeffs[n] = ONE;
    // M_1 = I, c_{n-1} = -tr(A); M_k = A M_{k-1} + c_{n-k+1} I.
    let mut m = CMatrix::identity(n, n);
    for k in 1..=n {
        let am = a * &m;
        let c = -am.trace() / k as f64;
        coeffs[n - k] = c;
        if k < n {
            m = am;
            for i in 0..n {
                m[(i, i)] += c;
            }
        }
    }
    coeffs
}

/// Monic polynomial from its roots, ascending coefficients.
pub fn poly_from_roots(roots: &[Complex64]) -> Vec<Complex64> {
    let mut c = vec![ONE];
    for &r in roots {
        let mut next = vec![ZERO; c.len() + 1];
        for (k, &ck) in c.iter().enumerate() {
            next[k + 1] += ck;
            next[k] -= ck * r;
        }
        c = next;
    }
    c
}

pub fn frobenius(a: &CMatrix) -> f64 {
    a.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Eigenvalues of a general complex square matrix, from the diagonal of
/// nalgebra's complex Schur form.
pub fn eigenvalues(a: &CMatrix) -> Result<Vec<Complex64>> {
    let n = a.nrows();
    if n != a.ncols() {
        return Err(Error::Dimension { expected: n, found: a.ncols() });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    if a.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(numerical("non-finite matrix entry"));
    }
    let schur = a
        .clone()
        .try_schur(f64::EPSILON, 100 * n.max(4))
        .ok_or_else(|| numerical("Schur iteration did not converge"))?;
    let (_, t) = schur.unpack();
    Ok((0..n).map(|i| t[(i, i)]).collect())
}

/// Unit vector approximately spanning the kernel of `A - λI`: the right
/// singular vector of the smallest singular value. Returns the vector and
/// its residual norm `‖(A - λI) w‖`.
pub fn null_vector(a: &CMatrix, lambda: Complex64) -> (Vec<Complex64>, f64) {
    let n = a.nrows();
    let mut shifted = a.clone();
    for i in 0..n {
        shifted[(i, i)] -= lambda;
    }
    let svd = shifted.clone().svd(false, true);
    let v_t = svd.v_t.expect("right singular vectors requested");
    let k = svd.singular_values.imin();
    let w: Vec<Complex64> = v_t.row(k).iter().map(|z| z.conj()).collect();
    let residual = (&shifted * CMatrix::from_column_slice(n, 1, &w)).norm();
    (w, residual)
}

/// Sort lexicographically by (Re, Im).
pub fn sort_lex(values: &mut [Complex64]) {
    values.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Greedy nearest matching between two equally sized multisets. Returns
/// the largest matched distance.
pub fn multiset_distance(a: &[Complex64], b: &[Complex64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Dimension { expected: a.len(), found: b.len() });
    }
    let mut a = a.to_vec();
    sort_lex(&mut a);
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for x in &a {
        let (best, d) = b
            .iter()
            .enumerate()
            .filter(|(i, _)| !used[*i])
            .map(|(i, y)| (i, (x - y).norm()))
            .fold((usize::MAX, f64::INFINITY), |acc, it| if it.1 < acc.1 { it } else { acc });
        used[best] = true;
        worst = worst.max(d);
    }
    Ok(worst)
}

/// Pairs doubly degenerate eigenvalues: sort by (Re, Im), then pair each
/// unpaired value with its nearest unpaired neighbour. Returns the pair
/// means and the largest pair distance divided by the spectral radius.
/// Fails when that relative distance exceeds `rel_tol`.
pub fn pair_degenerate(values: &[Complex64], rel_tol: f64) -> Result<(Vec<Complex64>, f64)> {
    if values.len() % 2 != 0 {
        return Err(numerical("odd number of eigenvalues cannot pair"));
    }
    let mut v = values.to_vec();
    sort_lex(&mut v);
    let radius = v.iter().map(|z| z.norm()).fold(0.0f64, f64::max).max(f64::MIN_POSITIVE);
    let mut used = vec![false; v.len()];
    let mut means = Vec::with_capacity(v.len() / 2);
    let mut worst = 0.0f64;
    for i in 0..v.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let (j, d) = (i + 1..v.len())
            .filter(|j| !used[*j])
            .map(|j| (j, (v[i] - v[j]).norm()))
            .fold((usize::MAX, f64::INFINITY), |acc, it| if it.1 < acc.1 { it } else { acc });
        used[j] = true;
        worst = worst.max(d / radius);
        means.push((v[i] + v[j]) * 0.5);
    }
    if worst > rel_tol {
        return Err(numerical(format!(
            "degeneracy pairing failed: relative pair distance {worst:e} > {rel_tol:e}"
        )));
    }
    Ok((means, worst))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> CMatrix {
        CMatrix::from_fn(n, n, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
    }

    fn eval(coeffs: &[Complex64], x: Complex64) -> Complex64 {
        coeffs.iter().rev().fold(ZERO, |acc, &ck| acc * x + ck)
    }

    #[test]
    fn eigenvalues_are_charpoly_roots() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let a = random_matrix(6, &mut rng);
        let p = faddeev_leverrier(&a);
        for l in eigenvalues(&a).unwrap() {
            assert!(eval(&p, l).norm() < 1e-10, "{l}");
        }
    }

    #[test]
    fn charpoly_small_cases() {
        let id = CMatrix::identity(2, 2);
        assert_eq!(faddeev_leverrier(&id), vec![ONE, c(-2.0, 0.0), ONE]);
        let a = CMatrix::from_row_slice(2, 2, &[c(0.0, 1.0), ZERO, ZERO, c(0.0, -1.0)]);
        assert_eq!(faddeev_leverrier(&a), vec![ONE, ZERO, ONE]);
    }

    #[test]
    fn charpoly_matches_roots_on_triangular() {
        let roots = [c(1.0, 2.0), c(-0.5, 0.0), c(3.0, -1.0), c(0.25, 0.75)];
        let mut a = CMatrix::zeros(4, 4);
        for i in 0..4 {
            a[(i, i)] = roots[i];
            for j in i + 1..4 {
                a[(i, j)] = c(0.3 * j as f64, -0.2 * i as f64);
            }
        }
        let got = faddeev_leverrier(&a);
        let want = poly_from_roots(&roots);
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).norm() < 1e-12);
        }
    }

    #[test]
    fn eigenvalues_of_rotation_and_companion() {
        let rot = CMatrix::from_row_slice(2, 2, &[ZERO, c(-1.0, 0.0), ONE, ZERO]);
        let ev = eigenvalues(&rot).unwrap();
        assert!(multiset_distance(&ev, &[c(0.0, 1.0), c(0.0, -1.0)]).unwrap() < 1e-14);

        // companion of (λ-1)(λ-2)(λ-3)(λ+4)
        let roots = [c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0), c(-4.0, 0.0)];
        let p = poly_from_roots(&roots);
        let n = 4;
        let mut comp = CMatrix::zeros(n, n);
        for i in 1..n {
            comp[(i, i - 1)] = ONE;
        }
        for i in 0..n {
            comp[(i, n - 1)] = -p[i];
        }
        let ev = eigenvalues(&comp).unwrap();
        assert!(multiset_distance(&ev, &roots).unwrap() < 1e-10);
    }

    #[test]
    fn eigenvalues_random_satisfy_charpoly() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [1, 2, 3, 5, 8, 16, 40] {
            for _ in 0..5 {
                let a = random_matrix(n, &mut rng);
                let ev = eigenvalues(&a).unwrap();
                let tr: Complex64 = ev.iter().sum();
                assert!((tr - a.trace()).norm() < 1e-10 * n as f64, "trace n={n}");
                let sq: Complex64 = ev.iter().map(|z| z * z).sum();
                assert!(((&a * &a).trace() - sq).norm() < 1e-9 * n as f64);
                // each eigenvalue is a near-singular shift
                for &l in &ev {
                    let (_, res) = null_vector(&a, l);
                    assert!(res < 1e-10 * frobenius(&a), "residual {res} n={n}");
                }
            }
        }
    }

    #[test]
    fn eigenvalues_handle_zero_and_diagonal() {
        let z = CMatrix::zeros(5, 5);
        assert!(eigenvalues(&z).unwrap().iter().all(|v| v.norm() == 0.0));
        let d = CMatrix::from_diagonal(&nalgebra::DVector::from_vec(vec![c(3.0, 0.0), c(-1.0, 2.0), c(0.5, 0.0)]));
        let ev = eigenvalues(&d).unwrap();
        assert!(multiset_distance(&ev, &[c(3.0, 0.0), c(-1.0, 2.0), c(0.5, 0.0)]).unwrap() == 0.0);
    }

    #[test]
    fn pairing() {
        let vals = [c(1.0, 0.0), c(2.0, 1.0), c(1.0 + 1e-12, 0.0), c(2.0, 1.0 - 1e-12)];
        let (means, d) = pair_degenerate(&vals, 1e-8).unwrap();
        assert_eq!(means.len(), 2);
        assert!(d < 1e-11);
        assert!(pair_degenerate(&[c(0.0, 0.0), c(1.0, 0.0)], 1e-6).is_err());
        assert!(pair_degenerate(&[c(0.0, 0.0)], 1e-6).is_err());
    }
}
