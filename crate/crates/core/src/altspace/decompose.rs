//! Orthogonal decompositions `F^d = U ⊕ V` with `u^t A v = 0` throughout.
//!
//! The search runs over single subspaces `U` with `0 < dim U <= d/2`: such a
//! `U` extends to a decomposition iff `U + U^⊥ = F^d`, where `U^⊥` is the
//! common kernel of the rows `u^t A`. In that case `V` is any complement of
//! `U ∩ U^⊥` inside `U^⊥`.

use serde::{Deserialize, Serialize};

use super::space::AltMatrixSpace;
use crate::gf::{enumerate_complements, rank_capped, Field, Matrix, Subspace, SubspaceEnumerator};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthWitness {
    pub u: Subspace,
    pub v: Subspace,
}

impl OrthWitness {
    pub fn to_json(&self, lambda: usize) -> LambdaWitnessJson {
        LambdaWitnessJson {
            lambda,
            u: self.u.basis_i64(),
            v: self.v.basis_i64(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LambdaWitnessJson {
    pub lambda: usize,
    #[serde(rename = "U")]
    pub u: Vec<Vec<i64>>,
    #[serde(rename = "V")]
    pub v: Vec<Vec<i64>>,
}

/// Rows `u_i^t A_j` for every basis row `u_i` of `u` and every matrix, as a
/// `(dim U * mats) x d` block.
fn perp_rows(field: Field, d: usize, mats: &[Matrix], u: &Subspace, out: &mut Vec<u8>) {
    out.clear();
    for a in mats {
        let ad = a.data();
        for i in 0..u.dim() {
            let ui = u.basis_row(i);
            for c in 0..d {
                let mut acc = 0u32;
                for (r, &x) in ui.iter().enumerate() {
                    if x != 0 {
                        acc += x as u32 * ad[r * d + c] as u32;
                    }
                }
                out.push((acc % field.q()) as u8);
            }
        }
    }
}

/// Scratch buffers reused across many candidate subspaces.
#[derive(Default)]
pub(crate) struct Scratch {
    rows: Vec<u8>,
    work: Vec<u8>,
    restricted: Vec<u8>,
}

/// Whether `U + U^⊥ = F^d`, i.e. `rank(R) = rank(R T)` with `R` the perp
/// rows and `T` the basis columns of `U`.
fn extends_to_split(field: Field, d: usize, mats: &[Matrix], u: &Subspace, s: &mut Scratch) -> bool {
    let k = u.dim();
    perp_rows(field, d, mats, u, &mut s.rows);
    let nrows = s.rows.len() / d;
    s.work.clear();
    s.work.extend_from_slice(&s.rows);
    let rank_r = rank_capped(field, &mut s.work, nrows, d, k + 1);
    if rank_r > k {
        return false;
    }
    s.restricted.clear();
    for r in 0..nrows {
        let row = &s.rows[r * d..(r + 1) * d];
        for l in 0..k {
            let ul = u.basis_row(l);
            let mut acc = 0u32;
            for (x, y) in row.iter().zip(ul) {
                acc += *x as u32 * *y as u32;
            }
            s.restricted.push((acc % field.q()) as u8);
        }
    }
    let rank_rt = rank_capped(field, &mut s.restricted, nrows, k, k);
    rank_rt == rank_r
}

fn witness_from(field: Field, d: usize, mats: &[Matrix], u: &Subspace) -> OrthWitness {
    let mut rows = Vec::new();
    perp_rows(field, d, mats, u, &mut rows);
    let nrows = rows.len() / d;
    let perp_basis = crate::gf::kernel_slice(field, &mut rows, nrows, d);
    let perp = Subspace::span(field, d, &perp_basis);
    let radical = u.intersect(&perp).expect("same ambient");
    let v = radical.complement_in(&perp).expect("radical lies in the perp");
    debug_assert!(u.is_direct_complement(&v));
    OrthWitness { u: u.clone(), v }
}

/// First `U` in enumeration order (dimension ascending) that extends to an
/// orthogonal decomposition, with the resulting witness. Ignores the
/// degenerate conventions.
pub(crate) fn find_split(field: Field, d: usize, mats: &[Matrix]) -> Option<OrthWitness> {
    let mut scratch = Scratch::default();
    for k in 1..=d / 2 {
        let e = SubspaceEnumerator::new(field, d, k).expect("k <= d");
        for idx in 0..e.len() {
            let u = e.get(idx);
            if extends_to_split(field, d, mats, &u, &mut scratch) {
                return Some(witness_from(field, d, mats, &u));
            }
        }
    }
    None
}

/// Decomposability of the span of `mats` (any spanning list of alternating
/// `d x d` matrices), with the conventions: the zero space decomposes for
/// every `d`, including `d = 1`.
pub(crate) fn decomposable_mats(field: Field, d: usize, mats: &[Matrix]) -> bool {
    let nonzero: Vec<Matrix> = mats.iter().filter(|a| !a.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return true;
    }
    // A nonzero alternating 2x2 pairs every two independent vectors.
    if d <= 2 {
        return false;
    }
    let mut scratch = Scratch::default();
    for k in 1..=d / 2 {
        let e = SubspaceEnumerator::new(field, d, k).expect("k <= d");
        for idx in 0..e.len() {
            if extends_to_split(field, d, &nonzero, &e.get(idx), &mut scratch) {
                return true;
            }
        }
    }
    false
}

/// Whether `𝒜` admits an orthogonal decomposition, with a witness whenever
/// a genuine nontrivial `U ⊕ V` exists.
///
/// The zero space counts as decomposable for every `n`; for `n = 1` there is
/// no witness. A one-dimensional space with `n > 2` always decomposes.
pub fn is_orth_decomposable(space: &AltMatrixSpace) -> (bool, Option<OrthWitness>) {
    let (field, n) = (space.field(), space.n());
    if space.is_zero() {
        if n < 2 {
            return (true, None);
        }
        let u = Subspace::coordinate(field, n, &[0]);
        let v = Subspace::coordinate(field, n, &(1..n).collect::<Vec<_>>());
        return (true, Some(OrthWitness { u, v }));
    }
    if n <= 2 {
        return (false, None);
    }
    match find_split(field, n, space.basis()) {
        Some(w) => (true, Some(w)),
        None => (false, None),
    }
}

/// Checks the defining property of a witness.
pub fn is_orth_witness(space: &AltMatrixSpace, w: &OrthWitness) -> bool {
    if w.u.is_zero() || w.v.is_zero() || !w.u.is_direct_complement(&w.v) || w.u.ambient() != space.n() {
        return false;
    }
    space
        .basis()
        .iter()
        .all(|a| (0..w.u.dim()).all(|i| (0..w.v.dim()).all(|j| a.bilinear(w.u.basis_row(i), w.v.basis_row(j)) == 0)))
}

/// Reference check by enumerating every pair `(U, V)` with `U ⊕ V = F^n`.
/// Same conventions as [`is_orth_decomposable`].
pub fn is_orth_decomposable_naive(space: &AltMatrixSpace) -> bool {
    let (field, n) = (space.field(), space.n());
    if space.is_zero() {
        return true;
    }
    for k in 1..n {
        let e = SubspaceEnumerator::new(field, n, k).expect("k < n");
        for u in e.iter() {
            for v in enumerate_complements(&u).expect("proper nontrivial") {
                if is_orth_witness(space, &OrthWitness { u: u.clone(), v }) {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::SubspaceEnumerator;
    use crate::graph::Graph;

    fn f3() -> Field {
        Field::new(3).unwrap()
    }

    #[test]
    fn k2_indecomposable() {
        let s = AltMatrixSpace::from_graph(&Graph::complete(2), f3());
        assert_eq!(is_orth_decomposable(&s), (false, None));
        assert!(!is_orth_decomposable_naive(&s));
    }

    #[test]
    fn zero_space_conventions() {
        for n in 1..=4 {
            let (ok, w) = is_orth_decomposable(&AltMatrixSpace::zero(f3(), n));
            assert!(ok);
            assert_eq!(w.is_some(), n >= 2);
        }
    }

    #[test]
    fn two_disjoint_edges_split_on_blocks() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let s = AltMatrixSpace::from_graph(&g, f3());
        let (ok, w) = is_orth_decomposable(&s);
        assert!(ok);
        let w = w.unwrap();
        assert!(is_orth_witness(&s, &w));
        let blocks = OrthWitness {
            u: Subspace::coordinate(f3(), 4, &[0, 1]),
            v: Subspace::coordinate(f3(), 4, &[2, 3]),
        };
        assert!(is_orth_witness(&s, &blocks));
    }

    #[test]
    fn one_dimensional_spaces_decompose_above_two() {
        for n in 3..=5 {
            let full_rank = AltMatrixSpace::span(
                f3(),
                n,
                &[(0..n / 2)
                    .map(|i| super::super::space::elementary(f3(), n, 2 * i, 2 * i + 1))
                    .fold(Matrix::zeros(f3(), n, n), |acc, a| acc.add(&a))],
            )
            .unwrap();
            assert_eq!(full_rank.dim(), 1);
            assert!(is_orth_decomposable(&full_rank).0, "n = {n}");
        }
    }

    #[test]
    fn single_subspace_search_matches_pair_enumeration() {
        // Every subspace of Λ(d, F_3) for d <= 3; Λ(3) is 3-dimensional.
        for d in 2..=3usize {
            let full = AltMatrixSpace::full(f3(), d);
            let w = full.dim();
            for k in 0..=w {
                for coeffs in SubspaceEnumerator::new(f3(), w, k).unwrap().iter() {
                    let mats: Vec<Matrix> = coeffs
                        .basis()
                        .iter()
                        .map(|c| Matrix::combination(f3(), d, d, c, full.basis()))
                        .collect();
                    let s = AltMatrixSpace::span(f3(), d, &mats).unwrap();
                    let (fast, wit) = is_orth_decomposable(&s);
                    assert_eq!(fast, is_orth_decomposable_naive(&s), "{s:?}");
                    if let Some(wit) = wit {
                        assert!(is_orth_witness(&s, &wit));
                    }
                }
            }
        }
    }
}
