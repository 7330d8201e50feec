use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::decompose::{decomposable_mats, is_orth_decomposable, OrthWitness};
use super::space::AltMatrixSpace;
use crate::error::Result;
use crate::gf::{Field, Matrix, Subspace, SubspaceEnumerator};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaResult {
    pub kappa: usize,
    /// The first `(n - κ)`-dimensional `W` in enumeration order whose
    /// restriction decomposes.
    pub w: Subspace,
    /// A decomposition of `𝒜|_W` in the coordinates of `W`'s basis, when one
    /// exists literally (absent for the one-dimensional convention).
    pub split: Option<OrthWitness>,
}

impl KappaResult {
    pub fn to_json(&self) -> KappaWitnessJson {
        KappaWitnessJson {
            kappa: self.kappa,
            w: self.w.basis_i64(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaWitnessJson {
    pub kappa: usize,
    #[serde(rename = "W")]
    pub w: Vec<Vec<i64>>,
}

/// `{T^t A T}` for the basis columns `T` of `w`.
pub(crate) fn restrict_mats(mats: &[Matrix], w: &Subspace) -> Vec<Matrix> {
    let t = w.column_matrix();
    let tt = w.basis_matrix();
    mats.iter().map(|a| tt.mul(a).mul(&t)).collect()
}

/// Smallest `c` such that some `(n - c)`-dimensional `W` has a decomposable
/// restriction, with the first such `W`. Works on any spanning list.
pub(crate) fn kappa_of_mats(field: Field, n: usize, mats: &[Matrix]) -> (usize, Subspace) {
    for c in 0..n {
        let k = n - c;
        let e = SubspaceEnumerator::new(field, n, k).expect("k <= n");
        if k == 1 {
            // Restrictions to lines are zero spaces in Λ(1).
            return (c, e.get(0));
        }
        let found = (0..e.len() as usize)
            .into_par_iter()
            .find_first(|&i| decomposable_mats(field, k, &restrict_mats(mats, &e.get(i as u64))));
        if let Some(i) = found {
            return (c, e.get(i as u64));
        }
    }
    // n = 0 never reaches here with a subspace; n = 1 returns at c = 0.
    unreachable!("the loop returns by c = n - 1")
}

/// `κ(𝒜)`, the restriction-orthogonal number.
pub fn kappa_space(space: &AltMatrixSpace, limits: &Limits) -> Result<KappaResult> {
    limits.check_n("kappa", space.n())?;
    let (kappa, w) = kappa_of_mats(space.field(), space.n(), space.basis());
    let restricted = space.restrict(&w)?;
    let (_, split) = is_orth_decomposable(&restricted);
    Ok(KappaResult { kappa, w, split })
}
