use std::fmt;

use super::field::Field;
use super::matrix::{kernel_slice, rank_capped, rref_slice, Matrix};
use crate::error::{Error, Result};

/// A subspace of `F_q^n`, stored as the unique RREF of any spanning set.
///
/// Two values compare equal exactly when they are the same subspace, so
/// `Subspace` can key hash sets during searches.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    /// `dim x ambient`, RREF, no zero rows.
    basis: Vec<u8>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::from_rref_unchecked(field, ambient, Matrix::identity(field, ambient).data().to_vec())
    }

    /// Span of standard basis vectors `e_i`, `i` in `coords` (0-indexed).
    pub fn coordinate(field: Field, ambient: usize, coords: &[usize]) -> Subspace {
        let vecs: Vec<Vec<u8>> = coords
            .iter()
            .map(|&i| {
                let mut v = vec![0; ambient];
                v[i] = 1;
                v
            })
            .collect();
        Subspace::span(field, ambient, &vecs)
    }

    pub fn span(field: Field, ambient: usize, vectors: &[Vec<u8>]) -> Subspace {
        let mut data = Vec::with_capacity(vectors.len() * ambient);
        for v in vectors {
            assert_eq!(v.len(), ambient, "vector length vs ambient dimension");
            data.extend_from_slice(v);
        }
        Subspace::from_data(field, ambient, data)
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Subspace {
        Subspace::from_data(m.field(), m.cols(), m.data().to_vec())
    }

    fn from_data(field: Field, ambient: usize, mut data: Vec<u8>) -> Subspace {
        let rows = data.len().checked_div(ambient).unwrap_or(0);
        let pivots = rref_slice(field, &mut data, rows, ambient);
        data.truncate(pivots.len() * ambient);
        Subspace {
            field,
            ambient,
            basis: data,
            pivots,
        }
    }

    /// Caller guarantees `data` is already a reduced echelon basis.
    pub(crate) fn from_rref_unchecked(field: Field, ambient: usize, data: Vec<u8>) -> Subspace {
        let rows = data.len().checked_div(ambient).unwrap_or(0);
        let pivots = (0..rows)
            .map(|r| {
                (0..ambient)
                    .find(|&c| data[r * ambient + c] != 0)
                    .expect("zero row in rref basis")
            })
            .collect();
        let s = Subspace {
            field,
            ambient,
            basis: data,
            pivots,
        };
        debug_assert_eq!(s, Subspace::from_data(field, ambient, s.basis.clone()));
        s
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_row(&self, i: usize) -> &[u8] {
        &self.basis[i * self.ambient..(i + 1) * self.ambient]
    }

    pub fn basis(&self) -> Vec<Vec<u8>> {
        (0..self.dim()).map(|i| self.basis_row(i).to_vec()).collect()
    }

    /// Basis as a `dim x ambient` matrix (rows are basis vectors).
    pub fn basis_matrix(&self) -> Matrix {
        Matrix::from_data(self.field, self.dim(), self.ambient, self.basis.clone()).expect("reduced")
    }

    /// Basis vectors as columns: the `ambient x dim` matrix `T` used for
    /// restrictions `T^t A T`.
    pub fn column_matrix(&self) -> Matrix {
        self.basis_matrix().transpose()
    }

    pub fn basis_i64(&self) -> Vec<Vec<i64>> {
        self.basis_matrix().to_rows_i64()
    }

    fn check_same(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient || self.field != other.field {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of {}^{} and {}^{}",
                self.field, self.ambient, other.field, other.ambient
            )));
        }
        Ok(())
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // Reduce v against the RREF basis using pivot coordinates.
        let f = self.field;
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (j, x) in w.iter_mut().enumerate() {
                *x = f.mul_add(*x, neg, self.basis[r * self.ambient + j]);
            }
        }
        w.iter().all(|&x| x == 0)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && (0..self.dim()).all(|i| other.contains(self.basis_row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        let mut data = self.basis.clone();
        data.extend_from_slice(&other.basis);
        Ok(Subspace::from_data(self.field, self.ambient, data))
    }

    /// `{w : <s, w> = 0 for all s}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        let mut d = self.basis.clone();
        let ker = kernel_slice(self.field, &mut d, self.dim(), self.ambient);
        Subspace::span(self.field, self.ambient, &ker)
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same(other)?;
        Ok(self.annihilator().sum(&other.annihilator())?.annihilator())
    }

    /// A complement `C` of `self` inside `sup`: `self + C = sup`, `self ∩ C = 0`.
    ///
    /// Greedy: basis vectors of `sup` are appended in order whenever they
    /// raise the rank, so the result is deterministic.
    pub fn complement_in(&self, sup: &Subspace) -> Result<Subspace> {
        self.check_same(sup)?;
        if !self.is_subspace_of(sup) {
            return Err(Error::InvalidArgument(
                "complement_in: not a subspace of the superspace".into(),
            ));
        }
        let n = self.ambient;
        let mut acc = self.basis.clone();
        let mut rank = self.dim();
        let mut picked = Vec::new();
        for i in 0..sup.dim() {
            if rank == sup.dim() {
                break;
            }
            let row = sup.basis_row(i);
            let mut trial = acc.clone();
            trial.extend_from_slice(row);
            let r = rank_capped(self.field, &mut trial, rank + 1, n, usize::MAX);
            if r > rank {
                acc.extend_from_slice(row);
                rank = r;
                picked.push(row.to_vec());
            }
        }
        Ok(Subspace::span(self.field, n, &picked))
    }

    pub fn complement(&self) -> Subspace {
        self.complement_in(&Subspace::full(self.field, self.ambient))
            .expect("full space contains everything")
    }

    /// Coordinates of `v` in this basis, or `None` if `v` is not in the span.
    pub fn coordinates(&self, v: &[u8]) -> Option<Vec<u8>> {
        if !self.contains(v) {
            return None;
        }
        // With an RREF basis the coordinates are the pivot entries.
        Some(self.pivots.iter().map(|&p| v[p]).collect())
    }

    /// `sum_i coeffs[i] * basis_i`.
    pub fn combine(&self, coeffs: &[u8]) -> Vec<u8> {
        assert_eq!(coeffs.len(), self.dim());
        let f = self.field;
        let mut out = vec![0u8; self.ambient];
        for (r, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (j, x) in out.iter_mut().enumerate() {
                *x = f.mul_add(*x, c, self.basis[r * self.ambient + j]);
            }
        }
        out
    }

    /// Whether `self ⊕ other` equals the full ambient space.
    pub fn is_direct_complement(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient
            && self.dim() + other.dim() == self.ambient
            && self.sum(other).map(|s| s.is_full()).unwrap_or(false)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{:?}>", self.basis_i64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> Field {
        Field::new(3).unwrap()
    }

    fn e(n: usize, i: usize) -> Vec<u8> {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    }

    #[test]
    fn sum_of_axes_is_full() {
        let a = Subspace::span(f3(), 2, &[e(2, 0)]);
        let b = Subspace::span(f3(), 2, &[e(2, 1)]);
        assert!(a.sum(&b).unwrap().is_full());
    }

    #[test]
    fn intersect_idempotent() {
        let a = Subspace::span(f3(), 2, &[e(2, 0)]);
        assert_eq!(a.intersect(&a).unwrap(), a);
    }

    #[test]
    fn complement_of_diagonal() {
        let d = Subspace::span(f3(), 2, &[vec![1, 1]]);
        let c = d.complement();
        assert_eq!(c.dim(), 1);
        // Stacked bases have full rank.
        let mut stacked = d.basis();
        stacked.extend(c.basis());
        assert_eq!(Matrix::from_vectors(f3(), 2, &stacked).rank(), 2);
        assert!(d.intersect(&c).unwrap().is_zero());
    }

    #[test]
    fn canonical_equality() {
        let a = Subspace::span(f3(), 3, &[vec![1, 1, 0], vec![0, 1, 1]]);
        let b = Subspace::span(f3(), 3, &[vec![1, 2, 1], vec![2, 0, 1], vec![1, 1, 0]]);
        assert_eq!(a, b);
        assert!(a.contains(&[1, 0, 2]));
        assert!(!a.contains(&[1, 0, 0]));
    }

    #[test]
    fn mismatched_ambient_errors() {
        let a = Subspace::zero(f3(), 2);
        let b = Subspace::zero(f3(), 3);
        assert!(matches!(a.sum(&b), Err(Error::DimensionMismatch(_))));
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn complement_in_requires_containment() {
        let a = Subspace::span(f3(), 3, &[e(3, 0)]);
        let b = Subspace::span(f3(), 3, &[e(3, 1), e(3, 2)]);
        assert!(a.complement_in(&b).is_err());
        let c = b.complement_in(&Subspace::full(f3(), 3)).unwrap();
        assert!(b.is_direct_complement(&c));
    }

    #[test]
    fn coordinates_round_trip() {
        let a = Subspace::span(f3(), 4, &[vec![1, 2, 0, 1], vec![0, 0, 1, 2]]);
        let v = a.combine(&[2, 1]);
        assert_eq!(a.coordinates(&v), Some(vec![2, 1]));
        assert_eq!(a.coordinates(&[0, 1, 0, 0]), None);
    }
}
