//! Explicit constructions: the `κ > λ` family and random isometries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::fullconn::{field_ext_full_space, GeneralMatrixSpace};
use super::space::{elementary, AltMatrixSpace};
use crate::error::{Error, Result};
use crate::gf::{Field, Matrix, Subspace};

/// The space on `F^{s+t}` spanned by
/// `A_i = [0 B_i; -B_i^t 0]`, the elementary alternating matrices of the
/// first `s` coordinates, and those of the last `t` coordinates.
///
/// Requires `ℬ ≤ M(s x t)` fully connected with `dim ℬ < s + t - 1`. The
/// result is fully connected, so `κ = s + t - 1`, while dropping the `A_i`
/// leaves a space split by the coordinate blocks, so `λ <= dim ℬ`.
pub fn kappa_gt_lambda_from(b: &GeneralMatrixSpace) -> Result<AltMatrixSpace> {
    let (s, t) = b.shape();
    let n = s + t;
    let d = b.dim();
    if d + 1 >= n {
        return Err(Error::InvalidArgument(format!(
            "need dim B = {d} < s + t - 1 = {}",
            n.saturating_sub(1)
        )));
    }
    if !b.is_fully_connected() {
        return Err(Error::InvalidArgument("B is not fully connected".into()));
    }
    let field = b.field();
    let mut mats = Vec::new();
    for bi in b.basis() {
        let mut a = Matrix::zeros(field, n, n);
        for r in 0..s {
            for c in 0..t {
                let x = bi.get(r, c);
                a.set(r, s + c, x);
                a.set(s + c, r, field.neg(x));
            }
        }
        mats.push(a);
    }
    for i in 0..s {
        for j in i + 1..s {
            mats.push(elementary(field, n, i, j));
        }
    }
    for i in 0..t {
        for j in i + 1..t {
            mats.push(elementary(field, n, s + i, s + j));
        }
    }
    AltMatrixSpace::span(field, n, &mats)
}

/// Fully connected `ℬ ≤ M(s x t)`: the field-extension space of size
/// `max(s, t)`, cut down to its leading `s x t` block.
pub fn full_block_space(s: usize, t: usize, field: Field) -> Result<GeneralMatrixSpace> {
    let big = field_ext_full_space(s.max(t), field)?;
    let blocks: Vec<Matrix> = big.space.basis().iter().map(|b| b.block(0, s, 0, t)).collect();
    GeneralMatrixSpace::span(field, s, t, &blocks)
}

/// The `κ > λ` instance on `F^{s+t}` built from [`full_block_space`].
pub fn kappa_gt_lambda_instance(s: usize, t: usize, field: Field) -> Result<AltMatrixSpace> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidArgument("s and t must be positive".into()));
    }
    kappa_gt_lambda_from(&full_block_space(s, t, field)?)
}

/// The coordinate split `F^s ⊕ F^t` used by the construction.
pub fn block_split(s: usize, t: usize, field: Field) -> (Subspace, Subspace) {
    let n = s + t;
    (
        Subspace::coordinate(field, n, &(0..s).collect::<Vec<_>>()),
        Subspace::coordinate(field, n, &(s..n).collect::<Vec<_>>()),
    )
}

/// A uniformly random invertible matrix, by rejection.
pub fn random_invertible<R: Rng>(field: Field, n: usize, rng: &mut R) -> Matrix {
    loop {
        let data: Vec<u8> = (0..n * n).map(|_| rng.gen_range(0..field.q()) as u8).collect();
        let t = Matrix::from_data(field, n, n, data).expect("sizes");
        if t.is_invertible() {
            return t;
        }
    }
}

/// `T^t 𝒜 T` for a random invertible `T` drawn from `seed`, with `T`.
pub fn random_isometry(space: &AltMatrixSpace, seed: u64) -> (AltMatrixSpace, Matrix) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = random_invertible(space.field(), space.n(), &mut rng);
    let image = space.transform(&t).expect("square transform");
    (image, t)
}

/// `T^t 𝒜 T` for a random invertible `T` drawn from `seed`.
pub fn random_isometry_image(space: &AltMatrixSpace, seed: u64) -> AltMatrixSpace {
    random_isometry(space, seed).0
}

/// A random `m`-dimensional subspace of `Λ(n, F_q)`, `m <= n(n-1)/2`.
pub fn random_space<R: Rng>(field: Field, n: usize, m: usize, rng: &mut R) -> Result<AltMatrixSpace> {
    let w = n * n.saturating_sub(1) / 2;
    if m > w {
        return Err(Error::InvalidArgument(format!("Λ({n}) has dimension {w} < {m}")));
    }
    loop {
        let mats: Vec<Matrix> = (0..m)
            .map(|_| {
                let upper: Vec<u8> = (0..w).map(|_| rng.gen_range(0..field.q()) as u8).collect();
                Matrix::alternating_from_upper(field, n, &upper)
            })
            .collect();
        let s = AltMatrixSpace::span(field, n, &mats)?;
        if s.dim() == m {
            return Ok(s);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::altspace::decompose::{is_orth_decomposable, is_orth_witness, OrthWitness};
    use crate::altspace::fullconn::is_fully_connected;
    use crate::altspace::lambda::cut_dim;
    use crate::graph::Graph;

    fn f(q: u32) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn instance_shape() {
        let a = kappa_gt_lambda_instance(2, 2, f(3)).unwrap();
        assert_eq!((a.n(), a.dim()), (4, 4));
        assert!(is_fully_connected(&a));
        let (u, v) = block_split(2, 2, f(3));
        assert!(cut_dim(&a, &u, &v).unwrap() <= 2);
    }

    #[test]
    fn block_part_splits() {
        let n = 4;
        let c = elementary(f(3), n, 0, 1);
        let d = elementary(f(3), n, 2, 3);
        let sub = AltMatrixSpace::span(f(3), n, &[c, d]).unwrap();
        let (u, v) = block_split(2, 2, f(3));
        assert!(is_orth_witness(&sub, &OrthWitness { u, v }));
        assert!(is_orth_decomposable(&sub).0);
    }

    #[test]
    fn rejects_large_b() {
        assert!(kappa_gt_lambda_instance(1, 1, f(3)).is_err());
        assert!(kappa_gt_lambda_instance(1, 3, f(3)).is_err());
        assert!(kappa_gt_lambda_instance(2, 3, f(3)).is_ok());
    }

    #[test]
    fn identity_isometry_and_dims() {
        let s = AltMatrixSpace::from_graph(&Graph::cycle(4), f(3));
        assert_eq!(s.transform(&Matrix::identity(f(3), 4)).unwrap(), s);
        for seed in 0..5 {
            let (img, t) = random_isometry(&s, seed);
            assert!(t.is_invertible());
            assert_eq!(img.dim(), s.dim());
        }
        assert_eq!(random_isometry_image(&s, 7), random_isometry_image(&s, 7));
    }
}
