use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::{rref_slice, Field, Matrix, Subspace};
use crate::graph::Graph;

/// A subspace of `Λ(n, F_q)`, the alternating `n x n` matrices.
///
/// The stored basis is canonical: the strict upper triangles, read row-major
/// and stacked, form a matrix in reduced row echelon form. Since the lower
/// triangle is the negated upper one this is the same as the RREF of the
/// full row-major vectorizations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AltMatrixSpace {
    field: Field,
    n: usize,
    basis: Vec<Matrix>,
}

/// The elementary alternating matrix `e_i e_j^t - e_j e_i^t` (0-indexed).
pub fn elementary(field: Field, n: usize, i: usize, j: usize) -> Matrix {
    let mut a = Matrix::zeros(field, n, n);
    a.set(i, j, 1);
    a.set(j, i, field.neg(1));
    a
}

/// Canonical basis of the span of some alternating matrices.
fn canonical_basis(field: Field, n: usize, mats: &[Matrix]) -> Vec<Matrix> {
    let w = n * n.saturating_sub(1) / 2;
    let mut data = Vec::with_capacity(mats.len() * w);
    for a in mats {
        data.extend(a.upper_entries());
    }
    let pivots = rref_slice(field, &mut data, mats.len(), w);
    (0..pivots.len())
        .map(|r| Matrix::alternating_from_upper(field, n, &data[r * w..(r + 1) * w]))
        .collect()
}

fn check_alternating(n: usize, mats: &[Matrix]) -> Result<()> {
    for (index, a) in mats.iter().enumerate() {
        if a.rows() != n || a.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "matrix {index} is {}x{}, expected {n}x{n}",
                a.rows(),
                a.cols()
            )));
        }
        if !a.is_alternating() {
            return Err(Error::NotAlternating { index });
        }
    }
    Ok(())
}

impl AltMatrixSpace {
    /// Span of the given alternating matrices. Dependent lists are fine.
    pub fn span(field: Field, n: usize, mats: &[Matrix]) -> Result<AltMatrixSpace> {
        check_alternating(n, mats)?;
        if let Some(a) = mats.iter().find(|a| a.field() != field) {
            return Err(Error::InvalidArgument(format!(
                "matrix over {} in a space over {field}",
                a.field()
            )));
        }
        Ok(AltMatrixSpace {
            field,
            n,
            basis: canonical_basis(field, n, mats),
        })
    }

    /// Like [`AltMatrixSpace::span`] but rejects linearly dependent input.
    pub fn from_basis(field: Field, n: usize, mats: &[Matrix]) -> Result<AltMatrixSpace> {
        let s = AltMatrixSpace::span(field, n, mats)?;
        if s.dim() != mats.len() {
            return Err(Error::Dependent);
        }
        Ok(s)
    }

    pub fn zero(field: Field, n: usize) -> AltMatrixSpace {
        AltMatrixSpace {
            field,
            n,
            basis: Vec::new(),
        }
    }

    /// All of `Λ(n, F_q)`.
    pub fn full(field: Field, n: usize) -> AltMatrixSpace {
        let mats: Vec<_> = crate::graph::all_pairs(n)
            .into_iter()
            .map(|(i, j)| elementary(field, n, i, j))
            .collect();
        AltMatrixSpace::span(field, n, &mats).expect("elementary matrices are alternating")
    }

    /// `𝒜_G = span{A_{i,j} : {i,j} ∈ E}`.
    pub fn from_graph(g: &Graph, field: Field) -> AltMatrixSpace {
        let mats: Vec<_> = g.edges().iter().map(|&(i, j)| elementary(field, g.n(), i, j)).collect();
        AltMatrixSpace::span(field, g.n(), &mats).expect("elementary matrices are alternating")
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    /// Ambient dimension `n`.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `m = dim 𝒜`.
    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, a: &Matrix) -> bool {
        a.rows() == self.n
            && a.cols() == self.n
            && a.is_alternating()
            && canonical_basis(self.field, self.n, &[self.basis.clone(), vec![a.clone()]].concat()).len() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &AltMatrixSpace) -> bool {
        self.n == other.n && self.basis.iter().all(|a| other.contains(a))
    }

    /// `{T^t A T : A ∈ 𝒜}` for an `n x d` matrix `T`.
    pub fn transform(&self, t: &Matrix) -> Result<AltMatrixSpace> {
        if t.rows() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "transform has {} rows, space has n = {}",
                t.rows(),
                self.n
            )));
        }
        let tt = t.transpose();
        let mats: Vec<_> = self.basis.iter().map(|a| tt.mul(a).mul(t)).collect();
        AltMatrixSpace::span(self.field, t.cols(), &mats)
    }

    /// `𝒜|_W = {T^t A T}` with `T` the columns of the canonical basis of `W`.
    pub fn restrict(&self, w: &Subspace) -> Result<AltMatrixSpace> {
        if w.ambient() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F^{} for a space on F^{}",
                w.ambient(),
                self.n
            )));
        }
        if w.is_zero() {
            return Err(Error::InvalidArgument("restriction to the zero subspace".into()));
        }
        self.transform(&w.column_matrix())
    }

    /// Matrix-space JSON, canonical basis.
    pub fn to_json(&self) -> SpaceJson {
        SpaceJson {
            q: self.field.q(),
            n: self.n,
            matrices: self.basis.iter().map(|a| a.to_rows_i64()).collect(),
        }
    }

    pub fn from_json(j: &SpaceJson) -> Result<AltMatrixSpace> {
        let field = Field::new(j.q)?;
        let mats = parse_matrices(field, j.n, &j.matrices)?;
        AltMatrixSpace::span(field, j.n, &mats)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("plain data")
    }

    pub fn from_json_str(s: &str) -> Result<AltMatrixSpace> {
        AltMatrixSpace::from_json(&serde_json::from_str(s)?)
    }
}

/// Entries must already be residues in `[0, q)`.
pub(crate) fn parse_matrices(field: Field, n: usize, raw: &[Vec<Vec<i64>>]) -> Result<Vec<Matrix>> {
    let q = field.q() as i64;
    raw.iter()
        .enumerate()
        .map(|(idx, rows)| {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(Error::DimensionMismatch(format!("matrix {idx} is not {n}x{n}")));
            }
            if rows.iter().flatten().any(|&x| !(0..q).contains(&x)) {
                return Err(Error::InvalidArgument(format!(
                    "matrix {idx} has an entry outside [0, {q})"
                )));
            }
            Matrix::from_rows(field, rows)
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceJson {
    pub q: u32,
    pub n: usize,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

impl fmt::Debug for AltMatrixSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AltMatrixSpace({}, n={}, [", self.field, self.n)?;
        for (i, a) in self.basis.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{:?}", a.upper_entries())?;
        }
        write!(f, "])")
    }
}
