//! Alternating bilinear maps `φ_𝐀(v, u) = (v^t A_1 u, ..., v^t A_m u)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::altspace::{decomposable_mats, kappa_of_mats, parse_matrices, AltMatrixSpace};
use crate::error::{Error, Result};
use crate::gf::{Field, Matrix, Subspace, SubspaceEnumerator};
use crate::limits::Limits;

/// A map stored as its ordered matrix tuple `𝐀 = (A_1, ..., A_m)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct AltBilinearMap {
    field: Field,
    n: usize,
    mats: Vec<Matrix>,
}

impl AltBilinearMap {
    /// Any tuple of alternating `n x n` matrices; need not be independent.
    pub fn new(field: Field, n: usize, mats: Vec<Matrix>) -> Result<AltBilinearMap> {
        for (index, a) in mats.iter().enumerate() {
            if a.rows() != n || a.cols() != n || a.field() != field {
                return Err(Error::DimensionMismatch(format!(
                    "matrix {index} is not {n}x{n} over {field}"
                )));
            }
            if !a.is_alternating() {
                return Err(Error::NotAlternating { index });
            }
        }
        Ok(AltBilinearMap { field, n, mats })
    }

    /// `φ_𝒜` for the canonical basis, or for `order` if given, which must be
    /// a basis of `𝒜`.
    pub fn from_space(space: &AltMatrixSpace, order: Option<&[Matrix]>) -> Result<AltBilinearMap> {
        if space.is_zero() {
            return Err(Error::InvalidArgument("the zero space gives a map with m = 0".into()));
        }
        let mats = match order {
            None => space.basis().to_vec(),
            Some(order) => {
                let other = AltMatrixSpace::from_basis(space.field(), space.n(), order)?;
                if other != *space {
                    return Err(Error::InvalidArgument("supplied matrices do not span the space".into()));
                }
                order.to_vec()
            }
        };
        AltBilinearMap::new(space.field(), space.n(), mats)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Domain dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Codomain dimension.
    pub fn m(&self) -> usize {
        self.mats.len()
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.mats
    }

    /// The span of the matrix tuple.
    pub fn space(&self) -> AltMatrixSpace {
        AltMatrixSpace::span(self.field, self.n, &self.mats).expect("validated on construction")
    }

    pub fn eval(&self, v: &[u8], u: &[u8]) -> Vec<u8> {
        self.mats.iter().map(|a| a.bilinear(v, u)).collect()
    }

    /// Whether `span{φ(e_i, e_j)} = F^m`, i.e. the tuple is independent.
    pub fn is_surjective(&self) -> bool {
        let vecs: Vec<Vec<u8>> = crate::graph::all_pairs(self.n)
            .into_iter()
            .map(|(i, j)| self.mats.iter().map(|a| a.get(i, j)).collect())
            .collect();
        Matrix::from_vectors(self.field, self.m(), &vecs).rank() == self.m()
    }

    pub fn is_zero(&self) -> bool {
        self.mats.iter().all(|a| a.is_zero())
    }

    /// `φ|_U` in the coordinates of `U`'s canonical basis.
    pub fn restrict(&self, u: &Subspace) -> Result<AltBilinearMap> {
        if u.ambient() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F^{} for n = {}",
                u.ambient(),
                self.n
            )));
        }
        if u.is_zero() {
            return Err(Error::InvalidArgument("restriction to the zero subspace".into()));
        }
        AltBilinearMap::new(self.field, u.dim(), crate::altspace::restrict_mats(&self.mats, u))
    }

    /// `φ/_X`: compose with the projection `F^m -> F^m / X`. The codomain
    /// basis is a complement of `X` followed by the basis of `X`; the
    /// trailing `dim X` coordinates are dropped.
    pub fn quotient(&self, x: &Subspace) -> Result<AltBilinearMap> {
        if x.ambient() != self.m() {
            return Err(Error::DimensionMismatch(format!(
                "subspace of F^{} for m = {}",
                x.ambient(),
                self.m()
            )));
        }
        let c = x.complement();
        let mut cols = c.basis();
        cols.extend(x.basis());
        let w = Matrix::from_vectors(self.field, self.m(), &cols).transpose();
        let winv = w.inverse().expect("complement plus basis is a basis");
        let mats = (0..c.dim())
            .map(|i| Matrix::combination(self.field, self.n, self.n, winv.row(i), &self.mats))
            .collect();
        AltBilinearMap::new(self.field, self.n, mats)
    }

    pub fn to_json(&self) -> MapJson {
        MapJson {
            q: self.field.q(),
            n: self.n,
            codomain_dim: self.m(),
            matrices: self.mats.iter().map(|a| a.to_rows_i64()).collect(),
        }
    }

    pub fn from_json(j: &MapJson) -> Result<AltBilinearMap> {
        let field = Field::new(j.q)?;
        if j.matrices.len() != j.codomain_dim {
            return Err(Error::DimensionMismatch(format!(
                "codomain_dim {} but {} matrices",
                j.codomain_dim,
                j.matrices.len()
            )));
        }
        AltBilinearMap::new(field, j.n, parse_matrices(field, j.n, &j.matrices)?)
    }
}

/// Matrix-space JSON plus the codomain dimension; matrices keep their order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub q: u32,
    pub n: usize,
    pub codomain_dim: usize,
    pub matrices: Vec<Vec<Vec<i64>>>,
}

/// Decomposability of `φ` with the space-level conventions: the zero map
/// decomposes for every `n`.
pub fn is_decomposable_map(phi: &AltBilinearMap) -> bool {
    decomposable_mats(phi.field, phi.n, &phi.mats)
}

/// `κ(φ)` with the first witnessing `U` of dimension `n - κ`.
pub fn kappa_map(phi: &AltBilinearMap, limits: &Limits) -> Result<(usize, Subspace)> {
    limits.check_n("kappa of a map", phi.n)?;
    if phi.n == 0 {
        return Err(Error::InvalidArgument("kappa needs n >= 1".into()));
    }
    Ok(kappa_of_mats(phi.field, phi.n, &phi.mats))
}

/// `λ(φ)`: the least `c` such that `φ/_X` decomposes for some `c`-dimensional
/// `X ≤ F^m`, with the first such `X`.
pub fn lambda_map(phi: &AltBilinearMap, limits: &Limits) -> Result<(usize, Subspace)> {
    limits.check_n("lambda of a map", phi.n)?;
    limits.check_m("lambda of a map", phi.m())?;
    let m = phi.m();
    for c in 0..=m {
        let e = SubspaceEnumerator::new(phi.field, m, c).expect("c <= m");
        let hit = (0..e.len() as usize)
            .into_par_iter()
            .find_first(|&i| is_decomposable_map(&phi.quotient(&e.get(i as u64)).expect("ambient m")));
        if let Some(i) = hit {
            return Ok((c, e.get(i as u64)));
        }
    }
    unreachable!("the quotient by F^m is the zero map")
}
