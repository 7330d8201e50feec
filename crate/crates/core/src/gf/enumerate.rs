//! Canonical enumeration of subspaces and of complements.
//!
//! Both enumerators are random access: `get(i)` builds the `i`-th item
//! directly, so a range `0..len()` can be cut into disjoint chunks and
//! handed to parallel workers while keeping a fixed global order.

use super::field::Field;
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Gaussian binomial `[n choose k]_q`, the number of `k`-dimensional
/// subspaces of `F_q^n`, by the product formula.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1;
        den *= q.pow((i + 1) as u32) - 1;
    }
    num / den
}

#[derive(Clone, Debug)]
struct Pattern {
    pivots: Vec<usize>,
    /// `(row, col)` of every free entry, row-major.
    free: Vec<(usize, usize)>,
}

/// All `k`-dimensional subspaces of `F_q^n` in a fixed order: pivot
/// patterns lexicographically, then free entries lexicographically with the
/// first free entry most significant.
#[derive(Clone, Debug)]
pub struct SubspaceEnumerator {
    field: Field,
    n: usize,
    k: usize,
    patterns: Vec<Pattern>,
    /// Exclusive prefix sums of pattern counts.
    offsets: Vec<u64>,
    total: u64,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl SubspaceEnumerator {
    pub fn new(field: Field, n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidArgument(format!(
                "subspace dimension {k} exceeds ambient {n}"
            )));
        }
        let q = field.q() as u64;
        let mut patterns = Vec::new();
        let mut offsets = Vec::new();
        let mut total: u64 = 0;
        for pivots in combinations(n, k) {
            let mut free = Vec::new();
            for (r, &p) in pivots.iter().enumerate() {
                for c in p + 1..n {
                    if !pivots.contains(&c) {
                        free.push((r, c));
                    }
                }
            }
            let count = q
                .checked_pow(free.len() as u32)
                .ok_or_else(|| Error::GuardExceeded(format!("too many subspaces of F_{q}^{n}")))?;
            offsets.push(total);
            total = total
                .checked_add(count)
                .ok_or_else(|| Error::GuardExceeded(format!("too many subspaces of F_{q}^{n}")))?;
            patterns.push(Pattern { pivots, free });
        }
        Ok(SubspaceEnumerator {
            field,
            n,
            k,
            patterns,
            offsets,
            total,
        })
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn get(&self, index: u64) -> Subspace {
        assert!(index < self.total, "subspace index out of range");
        let pi = match self.offsets.binary_search(&index) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let pat = &self.patterns[pi];
        let mut local = index - self.offsets[pi];
        let q = self.field.q() as u64;
        let n = self.n;
        let mut data = vec![0u8; self.k * n];
        for (r, &p) in pat.pivots.iter().enumerate() {
            data[r * n + p] = 1;
        }
        for &(r, c) in pat.free.iter().rev() {
            data[r * n + c] = (local % q) as u8;
            local /= q;
        }
        Subspace::from_rref_unchecked(self.field, n, data)
    }

    pub fn iter(&self) -> impl Iterator<Item = Subspace> + '_ {
        (0..self.total).map(move |i| self.get(i))
    }
}

/// Stream of all `k`-dimensional subspaces of `F_q^n`.
pub fn enumerate_subspaces(field: Field, n: usize, k: usize) -> Result<impl Iterator<Item = Subspace>> {
    let e = SubspaceEnumerator::new(field, n, k)?;
    Ok((0..e.len()).map(move |i| e.get(i)))
}

/// Every subspace of `F_q^n`, by dimension ascending.
pub fn all_subspaces(field: Field, n: usize) -> Vec<Subspace> {
    (0..=n)
        .flat_map(|k| {
            SubspaceEnumerator::new(field, n, k)
                .expect("k <= n")
                .iter()
                .collect::<Vec<_>>()
        })
        .collect()
}

/// All complements `V` of a fixed `U` in `F_q^n`.
///
/// With `U` in RREF with pivot set `P`, each complement is uniquely
/// `span{ e_j + sum_i L[j][i] u_i : j not in P }` for a coefficient matrix
/// `L`. Items are ordered by `L` read row-major, first entry most significant.
#[derive(Clone, Debug)]
pub struct ComplementEnumerator {
    u: Subspace,
    nonpivots: Vec<usize>,
    total: u64,
}

impl ComplementEnumerator {
    pub fn new(u: &Subspace) -> Result<Self> {
        let n = u.ambient();
        let k = u.dim();
        if k == 0 || k == n {
            return Err(Error::InvalidArgument(
                "complements are enumerated only for proper nontrivial subspaces".into(),
            ));
        }
        let nonpivots: Vec<usize> = (0..n).filter(|c| !u.pivots().contains(c)).collect();
        let total = u
            .field()
            .count_pow(k * (n - k))
            .ok_or_else(|| Error::GuardExceeded("too many complements".into()))?;
        Ok(ComplementEnumerator {
            u: u.clone(),
            nonpivots,
            total,
        })
    }

    pub fn len(&self) -> u64 {
        self.total
    }

    pub fn is_empty(&self) -> bool {
        self.total == 0
    }

    /// Coefficient matrix `L` (`(n-k) x k`, row-major) of the `index`-th complement.
    pub fn coefficients(&self, index: u64) -> Vec<u8> {
        let k = self.u.dim();
        let c = self.nonpivots.len();
        let q = self.u.field().q() as u64;
        let mut l = vec![0u8; c * k];
        let mut rem = index;
        for x in l.iter_mut().rev() {
            *x = (rem % q) as u8;
            rem /= q;
        }
        l
    }

    /// Spanning vectors `e_j + sum_i L[j][i] u_i`, in nonpivot order.
    pub fn spanning_vectors(&self, coeffs: &[u8]) -> Vec<Vec<u8>> {
        let k = self.u.dim();
        let f = self.u.field();
        self.nonpivots
            .iter()
            .enumerate()
            .map(|(j, &col)| {
                let mut v = self.u.combine(&coeffs[j * k..(j + 1) * k]);
                v[col] = f.add(v[col], 1);
                v
            })
            .collect()
    }

    pub fn get(&self, index: u64) -> Subspace {
        assert!(index < self.total, "complement index out of range");
        let vecs = self.spanning_vectors(&self.coefficients(index));
        Subspace::span(self.u.field(), self.u.ambient(), &vecs)
    }

    pub fn nonpivots(&self) -> &[usize] {
        &self.nonpivots
    }

    pub fn iter(&self) -> impl Iterator<Item = Subspace> + '_ {
        (0..self.total).map(move |i| self.get(i))
    }
}

/// Stream of every `V` with `U ⊕ V = F_q^n`.
pub fn enumerate_complements(u: &Subspace) -> Result<impl Iterator<Item = Subspace>> {
    let e = ComplementEnumerator::new(u)?;
    Ok((0..e.len()).map(move |i| e.get(i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn f(q: u32) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn lines_in_plane_over_f3() {
        let subs: Vec<_> = enumerate_subspaces(f(3), 2, 1).unwrap().collect();
        assert_eq!(subs.len(), 4);
        // (3^2 - 1) / (3 - 1)
        assert_eq!(gaussian_binomial(2, 1, 3), 4);
    }

    #[test]
    fn zero_dimensional_is_single_zero_space() {
        let subs: Vec<_> = enumerate_subspaces(f(5), 4, 0).unwrap().collect();
        assert_eq!(subs, vec![Subspace::zero(f(5), 4)]);
    }

    #[test]
    fn planes_in_f3_4() {
        let subs: Vec<_> = enumerate_subspaces(f(3), 4, 2).unwrap().collect();
        assert_eq!(subs.len(), 130);
        assert_eq!(gaussian_binomial(4, 2, 3), 130);
        let set: HashSet<_> = subs.iter().cloned().collect();
        assert_eq!(set.len(), 130);
    }

    #[test]
    fn k_greater_than_n_errors() {
        assert!(enumerate_subspaces(f(3), 2, 3).is_err());
    }

    #[test]
    fn first_line_is_e1() {
        let e = SubspaceEnumerator::new(f(3), 3, 1).unwrap();
        assert_eq!(e.get(0), Subspace::coordinate(f(3), 3, &[0]));
    }

    #[test]
    fn complements_of_axis() {
        let u = Subspace::coordinate(f(3), 2, &[0]);
        let comps: Vec<_> = enumerate_complements(&u).unwrap().collect();
        assert_eq!(comps.len(), 3);
        let expected: HashSet<_> = [vec![0u8, 1], vec![1, 1], vec![2, 1]]
            .into_iter()
            .map(|v| Subspace::span(f(3), 2, &[v]))
            .collect();
        assert_eq!(comps.into_iter().collect::<HashSet<_>>(), expected);
    }

    #[test]
    fn complements_of_hyperplane() {
        for q in [3, 5] {
            let u = Subspace::coordinate(f(q), 3, &[0, 2]);
            let comps: Vec<_> = enumerate_complements(&u).unwrap().collect();
            assert_eq!(comps.len() as u64, (q as u64).pow(2));
            let set: HashSet<_> = comps.iter().cloned().collect();
            assert_eq!(set.len(), comps.len());
            for v in &comps {
                assert!(u.intersect(v).unwrap().is_zero());
                assert!(u.sum(v).unwrap().is_full());
            }
        }
    }

    #[test]
    fn complements_reject_trivial() {
        assert!(enumerate_complements(&Subspace::zero(f(3), 2)).is_err());
        assert!(enumerate_complements(&Subspace::full(f(3), 2)).is_err());
    }

    #[test]
    fn complements_are_exhaustive_brute_force() {
        // Every 2-dim complement of a generic line in F_3^3 shows up once.
        let u = Subspace::span(f(3), 3, &[vec![1, 2, 1]]);
        let got: HashSet<_> = enumerate_complements(&u).unwrap().collect();
        let want: HashSet<_> = enumerate_subspaces(f(3), 3, 2)
            .unwrap()
            .filter(|v| u.intersect(v).unwrap().is_zero())
            .collect();
        assert_eq!(got, want);
        assert_eq!(got.len(), 9);
    }
}
