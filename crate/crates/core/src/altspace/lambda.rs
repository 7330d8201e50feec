//! `λ(𝒜)` as the minimum cut dimension over decompositions `U ⊕ V`.
//!
//! Fix `U` with RREF basis `T_1` (`k` rows) and write every complement as
//! `V = span{e_j + sum_l L[j][l] u_l : j non-pivot}`. With `E` the non-pivot
//! unit columns the cut image of `A` is
//!
//! ```text
//! T_1^t A T_2 = X_A + Y_A L^t,   X_A = T_1^t A E,   Y_A = T_1^t A T_1.
//! ```
//!
//! On `𝒦_U = {A : Y_A = 0}` the cut does not depend on `V`, which gives the
//! lower bound `rank X(𝒦_U)`; the remaining `r = dim 𝒜 - dim 𝒦_U` directions
//! add at most `r`, and `r <= k(k-1)/2`.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use super::decompose::{decomposable_mats, OrthWitness};
use super::space::AltMatrixSpace;
use crate::error::{Error, Result};
use crate::gf::{
    kernel_slice, rank_capped, rref_slice, ComplementEnumerator, Field, Matrix, Subspace, SubspaceEnumerator,
};
use crate::limits::Limits;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaResult {
    pub lambda: usize,
    /// First `(U, V)` in enumeration order attaining the minimum.
    pub witness: OrthWitness,
    /// `𝒜' = {A : T_1^t A T_2 = 0}`, of dimension `m - λ`; it decomposes
    /// along the witness.
    pub sub: AltMatrixSpace,
}

/// Cut data for one `U`, independent of the complement.
struct CutProfile {
    field: Field,
    k: usize,
    nk: usize,
    lb: usize,
    /// RREF rows spanning the `V`-independent part of the cut space.
    fixed: Vec<u8>,
    fixed_piv: Vec<usize>,
    /// For the other `r` basis directions: `X` part and full `k x k` `Y`.
    var_x: Vec<u8>,
    var_y: Vec<u8>,
    r: usize,
}

impl CutProfile {
    fn new(field: Field, n: usize, mats: &[Matrix], u: &Subspace) -> CutProfile {
        let k = u.dim();
        let nk = n - k;
        let ky = k * (k - 1) / 2;
        let w = k * nk;
        let width = ky + w;
        let nonpiv: Vec<usize> = (0..n).filter(|c| !u.pivots().contains(c)).collect();
        let q = field.q();

        let mut m = Vec::with_capacity(mats.len() * width);
        let mut ua = vec![0u8; n];
        for a in mats {
            let ad = a.data();
            let mut row_y = vec![0u8; ky];
            let mut row_x = vec![0u8; w];
            let mut yi = 0;
            for i in 0..k {
                let ui = u.basis_row(i);
                for (c, slot) in ua.iter_mut().enumerate() {
                    let mut acc = 0u32;
                    for (r, &x) in ui.iter().enumerate() {
                        acc += x as u32 * ad[r * n + c] as u32;
                    }
                    *slot = (acc % q) as u8;
                }
                for l in i + 1..k {
                    let ul = u.basis_row(l);
                    let acc: u32 = ua.iter().zip(ul).map(|(&x, &y)| x as u32 * y as u32).sum();
                    row_y[yi] = (acc % q) as u8;
                    yi += 1;
                }
                for (j, &col) in nonpiv.iter().enumerate() {
                    row_x[i * nk + j] = ua[col];
                }
            }
            m.extend(row_y);
            m.extend(row_x);
        }
        let pivots = rref_slice(field, &mut m, mats.len(), width);
        let r = pivots.iter().filter(|&&p| p < ky).count();
        let lb = pivots.len() - r;

        let mut fixed = Vec::with_capacity(lb * w);
        let mut fixed_piv = Vec::with_capacity(lb);
        for (row, &p) in pivots.iter().enumerate().skip(r) {
            fixed.extend_from_slice(&m[row * width + ky..(row + 1) * width]);
            fixed_piv.push(p - ky);
        }
        let mut var_x = Vec::with_capacity(r * w);
        let mut var_y = Vec::with_capacity(r * k * k);
        for row in 0..r {
            let yu = &m[row * width..row * width + ky];
            var_y.extend_from_slice(Matrix::alternating_from_upper(field, k, yu).data());
            var_x.extend_from_slice(&m[row * width + ky..(row + 1) * width]);
        }
        CutProfile {
            field,
            k,
            nk,
            lb,
            fixed,
            fixed_piv,
            var_x,
            var_y,
            r,
        }
    }

    fn w(&self) -> usize {
        self.k * self.nk
    }

    /// Reduce `v` modulo the fixed rows.
    fn reduce(&self, v: &mut [u8]) {
        let w = self.w();
        let f = self.field;
        for (p, &col) in self.fixed_piv.iter().enumerate() {
            let c = v[col];
            if c != 0 {
                let neg = f.neg(c);
                for (x, &y) in v.iter_mut().zip(&self.fixed[p * w..(p + 1) * w]) {
                    *x = f.mul_add(*x, neg, y);
                }
            }
        }
    }

    /// Cut dimension for the complement with coefficients `l`, capped at `cap`.
    fn cut_for(&self, l: &[u8], cap: usize, buf: &mut Vec<u8>) -> usize {
        let (k, nk, w, f) = (self.k, self.nk, self.w(), self.field);
        buf.clear();
        for c in 0..self.r {
            let y = &self.var_y[c * k * k..(c + 1) * k * k];
            let start = buf.len();
            buf.extend_from_slice(&self.var_x[c * w..(c + 1) * w]);
            for i in 0..k {
                for j in 0..nk {
                    let mut acc = buf[start + i * nk + j] as u32;
                    for t in 0..k {
                        acc += y[i * k + t] as u32 * l[j * k + t] as u32;
                    }
                    buf[start + i * nk + j] = (acc % f.q()) as u8;
                }
            }
            self.reduce(&mut buf[start..start + w]);
        }
        let extra_cap = cap.saturating_sub(self.lb);
        self.lb + rank_capped(f, buf, self.r, w, extra_cap)
    }

    /// Whether some complement makes every variable direction vanish modulo
    /// the fixed rows, i.e. attains the lower bound. Solved as an affine
    /// system in the entries of `L`.
    fn lower_bound_attainable(&self) -> bool {
        if self.r == 0 {
            return true;
        }
        let (k, nk, w, f) = (self.k, self.nk, self.w(), self.field);
        let unknowns = nk * k;
        let cols = unknowns + 1;
        let rows = self.r * w;
        let mut sys = vec![0u8; rows * cols];
        let mut g = vec![0u8; w];
        for c in 0..self.r {
            let y = &self.var_y[c * k * k..(c + 1) * k * k];
            for j in 0..nk {
                for t in 0..k {
                    // Contribution of L[j][t]: entries (i, j) get Y[i][t].
                    g.iter_mut().for_each(|x| *x = 0);
                    for i in 0..k {
                        g[i * nk + j] = y[i * k + t];
                    }
                    self.reduce(&mut g);
                    for (e, &x) in g.iter().enumerate() {
                        sys[(c * w + e) * cols + j * k + t] = x;
                    }
                }
            }
            let mut rhs = self.var_x[c * w..(c + 1) * w].to_vec();
            self.reduce(&mut rhs);
            for (e, &x) in rhs.iter().enumerate() {
                sys[(c * w + e) * cols + unknowns] = f.neg(x);
            }
        }
        let pivots = rref_slice(f, &mut sys, rows, cols);
        !pivots.contains(&unknowns)
    }

    /// Minimum cut over all complements, or `None` when it cannot be below `cap`.
    fn min_cut(&self, cap: usize) -> Option<usize> {
        if self.lb >= cap {
            return None;
        }
        if self.lower_bound_attainable() {
            return Some(self.lb);
        }
        if self.lb + 1 >= cap {
            return None;
        }
        if self.r == 1 {
            return Some(self.lb + 1);
        }
        // Only reachable for dim U >= 3: scan the complements.
        let count = self.field.count_pow(self.nk * self.k).expect("guarded sizes");
        let q = self.field.q() as u64;
        let mut best = (self.lb + self.r).min(cap);
        let mut l = vec![0u8; self.nk * self.k];
        let mut buf = Vec::new();
        for idx in 0..count {
            let mut rem = idx;
            for x in l.iter_mut().rev() {
                *x = (rem % q) as u8;
                rem /= q;
            }
            let c = self.cut_for(&l, best, &mut buf);
            if c < best {
                best = c;
                if best == self.lb + 1 {
                    break;
                }
            }
        }
        (best < cap).then_some(best)
    }
}

/// `λ` of the span of `mats` in `Λ(n)`, `n >= 2`.
pub(crate) fn lambda_value(field: Field, n: usize, mats: &[Matrix]) -> usize {
    let best = AtomicUsize::new(mats.len());
    for k in 1..=n / 2 {
        let e = SubspaceEnumerator::new(field, n, k).expect("k <= n");
        (0..e.len() as usize).into_par_iter().for_each(|i| {
            let cap = best.load(Ordering::Relaxed);
            if cap == 0 {
                return;
            }
            let p = CutProfile::new(field, n, mats, &e.get(i as u64));
            if let Some(c) = p.min_cut(cap) {
                best.fetch_min(c, Ordering::Relaxed);
            }
        });
    }
    best.into_inner()
}

/// First `(U, V)` in enumeration order with cut dimension exactly `lambda`.
fn first_witness(field: Field, n: usize, mats: &[Matrix], lambda: usize) -> OrthWitness {
    for k in 1..=n / 2 {
        let e = SubspaceEnumerator::new(field, n, k).expect("k <= n");
        let hit = (0..e.len() as usize)
            .into_par_iter()
            .find_first(|&i| CutProfile::new(field, n, mats, &e.get(i as u64)).min_cut(lambda + 1) == Some(lambda));
        if let Some(i) = hit {
            let u = e.get(i as u64);
            let p = CutProfile::new(field, n, mats, &u);
            let comps = ComplementEnumerator::new(&u).expect("proper nontrivial");
            let mut buf = Vec::new();
            let idx = (0..comps.len())
                .find(|&j| p.cut_for(&comps.coefficients(j), lambda + 1, &mut buf) == lambda)
                .expect("min_cut reported an attaining complement");
            return OrthWitness { v: comps.get(idx), u };
        }
    }
    unreachable!("lambda is attained by some decomposition")
}

/// Basis rows of `T_1^t A T_2`, vectorized, one per matrix.
fn cut_vectors(mats: &[Matrix], u: &Subspace, v: &Subspace) -> Vec<Vec<u8>> {
    let t1t = u.basis_matrix();
    let t2 = v.column_matrix();
    mats.iter().map(|a| t1t.mul(a).mul(&t2).vectorize()).collect()
}

/// `dim 𝒞_{U,V}(𝒜) = dim{T_1^t A T_2 : A ∈ 𝒜}`.
pub fn cut_dim(space: &AltMatrixSpace, u: &Subspace, v: &Subspace) -> Result<usize> {
    if u.ambient() != space.n() || v.ambient() != space.n() {
        return Err(Error::DimensionMismatch(
            "cut subspaces live in another ambient space".into(),
        ));
    }
    if u.is_zero() || v.is_zero() || !u.is_direct_complement(v) {
        return Err(Error::InvalidArgument(
            "U and V must be nontrivial with U ⊕ V = F^n".into(),
        ));
    }
    let vecs = cut_vectors(space.basis(), u, v);
    let w = u.dim() * v.dim();
    Ok(Matrix::from_vectors(space.field(), w, &vecs).rank())
}

/// `λ(𝒜)`, the subspace-orthogonal number, with a witnessing decomposition.
pub fn lambda_space(space: &AltMatrixSpace, limits: &Limits) -> Result<LambdaResult> {
    let (field, n) = (space.field(), space.n());
    if n < 2 {
        return Err(Error::InvalidArgument("lambda needs n >= 2".into()));
    }
    limits.check_n("lambda", n)?;
    let lambda = lambda_value(field, n, space.basis());
    let witness = first_witness(field, n, space.basis(), lambda);

    // 𝒜' is the kernel of A ↦ cut(A), taken in coordinates of the basis.
    let vecs = cut_vectors(space.basis(), &witness.u, &witness.v);
    let m = space.dim();
    let w = witness.u.dim() * witness.v.dim();
    let mut t = vec![0u8; w * m];
    for (a, vec) in vecs.iter().enumerate() {
        for (e, &x) in vec.iter().enumerate() {
            t[e * m + a] = x;
        }
    }
    let coeffs = kernel_slice(field, &mut t, w, m);
    let mats: Vec<Matrix> = coeffs
        .iter()
        .map(|c| Matrix::combination(field, n, n, c, space.basis()))
        .collect();
    let sub = AltMatrixSpace::span(field, n, &mats)?;
    debug_assert_eq!(sub.dim() + lambda, m);
    Ok(LambdaResult { lambda, witness, sub })
}

/// `λ(𝒜)` straight from the definition: the least `c` such that some
/// `(m - c)`-dimensional subspace of `𝒜` decomposes.
pub fn lambda_space_oracle(space: &AltMatrixSpace, limits: &Limits) -> Result<usize> {
    let (field, n, m) = (space.field(), space.n(), space.dim());
    limits.check_m("lambda oracle", m)?;
    limits.check_n("lambda oracle", n)?;
    for c in 0..=m {
        let e = SubspaceEnumerator::new(field, m, m - c).expect("c <= m");
        let hit = (0..e.len() as usize).into_par_iter().find_first(|&i| {
            let coeffs = e.get(i as u64);
            let mats: Vec<Matrix> = coeffs
                .basis()
                .iter()
                .map(|c| Matrix::combination(field, n, n, c, space.basis()))
                .collect();
            decomposable_mats(field, n, &mats)
        });
        if hit.is_some() {
            return Ok(c);
        }
    }
    unreachable!("the zero subspace decomposes")
}

/// Minimum of [`cut_dim`] over every pair `(U, V)`; a slow reference.
pub fn lambda_space_naive(space: &AltMatrixSpace) -> usize {
    let (field, n) = (space.field(), space.n());
    let mut best = space.dim();
    for k in 1..n {
        for u in SubspaceEnumerator::new(field, n, k).expect("k < n").iter() {
            for v in ComplementEnumerator::new(&u).expect("proper").iter() {
                best = best.min(cut_dim(space, &u, &v).expect("direct sum"));
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::altspace::decompose::{is_orth_decomposable, is_orth_witness};
    use crate::graph::{edge_connectivity, Graph};

    fn f3() -> Field {
        Field::new(3).unwrap()
    }

    fn space(g: &Graph) -> AltMatrixSpace {
        AltMatrixSpace::from_graph(g, f3())
    }

    #[test]
    fn cut_dims() {
        let e1 = Subspace::coordinate(f3(), 2, &[0]);
        let e2 = Subspace::coordinate(f3(), 2, &[1]);
        assert_eq!(cut_dim(&space(&Graph::complete(2)), &e1, &e2).unwrap(), 1);

        let u = Subspace::coordinate(f3(), 4, &[0, 1]);
        let v = Subspace::coordinate(f3(), 4, &[2, 3]);
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(cut_dim(&space(&two_k2), &u, &v).unwrap(), 0);
        assert_eq!(cut_dim(&space(&Graph::cycle(4)), &u, &v).unwrap(), 2);

        assert!(cut_dim(&space(&Graph::cycle(4)), &u, &u).is_err());
    }

    #[test]
    fn small_values() {
        let l = |g: &Graph| lambda_space(&space(g), &Limits::default()).unwrap().lambda;
        assert_eq!(l(&Graph::complete(2)), 1);
        assert_eq!(l(&Graph::cycle(4)), 2);
        assert_eq!(l(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap()), 0);
        assert_eq!(l(&Graph::complete(5)), 4);
    }

    #[test]
    fn witness_and_subspace() {
        for g in [Graph::cycle(5), Graph::complete(4), Graph::star(3)] {
            let s = space(&g);
            let r = lambda_space(&s, &Limits::default()).unwrap();
            assert_eq!(cut_dim(&s, &r.witness.u, &r.witness.v).unwrap(), r.lambda);
            assert_eq!(r.sub.dim(), s.dim() - r.lambda);
            assert!(r.sub.is_subspace_of(&s));
            assert!(is_orth_witness(&r.sub, &r.witness));
            assert!(is_orth_decomposable(&r.sub).0);
        }
    }

    #[test]
    fn matches_naive_and_oracle_on_four_vertices() {
        for g in crate::graph::all_labeled_graphs(4) {
            let s = space(&g);
            let fast = lambda_space(&s, &Limits::default()).unwrap().lambda;
            assert_eq!(fast, edge_connectivity(&g).lambda, "{g:?}");
            assert_eq!(fast, lambda_space_naive(&s), "{g:?}");
            assert_eq!(fast, lambda_space_oracle(&s, &Limits::default()).unwrap(), "{g:?}");
        }
    }

    #[test]
    fn oracle_zero_space_and_guard() {
        assert_eq!(
            lambda_space_oracle(&AltMatrixSpace::zero(f3(), 3), &Limits::default()).unwrap(),
            0
        );
        let k5 = space(&Graph::complete(5));
        assert!(matches!(
            lambda_space_oracle(&k5, &Limits::default()),
            Err(Error::GuardExceeded(_))
        ));
    }

    #[test]
    fn profile_min_cut_matches_complement_scan() {
        // n = 6 reaches dim U = 3, where up to three directions vary with V.
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3), (0, 5)]).unwrap();
        let mut mats = space(&g).basis().to_vec();
        mats.push(Matrix::alternating_from_upper(
            f3(),
            6,
            &[1, 0, 2, 0, 1, 1, 0, 0, 2, 1, 0, 1, 2, 0, 1],
        ));
        let s = AltMatrixSpace::span(f3(), 6, &mats).unwrap();
        for (k, idx) in [(2usize, 0u64), (2, 700), (3, 0), (3, 5000), (3, 33000)] {
            let u = SubspaceEnumerator::new(f3(), 6, k).unwrap().get(idx);
            let scan = ComplementEnumerator::new(&u)
                .unwrap()
                .iter()
                .map(|v| cut_dim(&s, &u, &v).unwrap())
                .min()
                .unwrap();
            let p = CutProfile::new(f3(), 6, s.basis(), &u);
            assert_eq!(p.min_cut(usize::MAX), Some(scan), "k = {k}, index {idx}");
        }
    }

    #[test]
    fn bridge_between_triangles() {
        let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]).unwrap();
        assert_eq!(lambda_space(&space(&g), &Limits::default()).unwrap().lambda, 1);
    }
}
