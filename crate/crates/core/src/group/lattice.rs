//! `κ(P)` and `λ(P)` straight from the group-theoretic definitions, by
//! listing every subgroup. Only for groups of order at most 128, where a
//! subgroup fits in a `u128` bitmask; meant to validate the structured
//! search.

use std::collections::{HashMap, HashSet};

use super::baer::{BaerGroup, GroupElement};
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Debug)]
struct Sub {
    mask: u128,
    gens: Vec<usize>,
}

struct Lattice<'a> {
    g: &'a BaerGroup,
    elems: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    subs: Vec<Sub>,
}

/// Values computed by [`literal_kappa_lambda`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeReport {
    pub subgroups: usize,
    /// Over all regular subgroups.
    pub kappa: usize,
    /// Over all central subgroups `N`.
    pub lambda: usize,
    /// Over central subgroups `N ≤ [P, P]` only.
    pub lambda_derived: usize,
}

impl<'a> Lattice<'a> {
    fn new(g: &'a BaerGroup) -> Lattice<'a> {
        let total = g.order().expect("small group");
        let elems: Vec<GroupElement> = (0..total).map(|i| g.element_at(i)).collect();
        let index = elems.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut lat = Lattice {
            g,
            elems,
            index,
            subs: Vec::new(),
        };
        lat.enumerate();
        lat
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.g.mul(&self.elems[a], &self.elems[b])]
    }

    fn comm(&self, a: usize, b: usize) -> usize {
        self.index[&self.g.comm(&self.elems[a], &self.elems[b])]
    }

    fn closure(&self, gens: &[usize]) -> u128 {
        let id = self.index[&self.g.identity()];
        let mut mask = 1u128 << id;
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if mask >> y & 1 == 0 {
                    mask |= 1 << y;
                    stack.push(y);
                }
            }
        }
        mask
    }

    fn enumerate(&mut self) {
        let trivial = Sub {
            mask: self.closure(&[]),
            gens: Vec::new(),
        };
        let mut seen = HashSet::from([trivial.mask]);
        let mut subs = vec![trivial];
        let mut i = 0;
        while i < subs.len() {
            let s = subs[i].clone();
            for x in 0..self.elems.len() {
                if s.mask >> x & 1 == 1 {
                    continue;
                }
                let mut gens = s.gens.clone();
                gens.push(x);
                let mask = self.closure(&gens);
                if seen.insert(mask) {
                    subs.push(Sub { mask, gens });
                }
            }
            i += 1;
        }
        self.subs = subs;
    }

    fn exp(&self, mask: u128) -> usize {
        let mut c = mask.count_ones() as usize;
        let mut e = 0;
        while c > 1 {
            c /= self.g.p() as usize;
            e += 1;
        }
        e
    }

    /// `[S, S]`, generated by commutators of generators in class 2.
    fn derived(&self, s: &Sub) -> u128 {
        let mut cs = Vec::new();
        for &a in &s.gens {
            for &b in &s.gens {
                cs.push(self.comm(a, b));
            }
        }
        self.closure(&cs)
    }

    fn commute_mod(&self, j: &Sub, k: &Sub, n: u128) -> bool {
        j.gens
            .iter()
            .all(|&a| k.gens.iter().all(|&b| n >> self.comm(a, b) & 1 == 1))
    }

    fn abelian_mod(&self, s: &Sub, n: u128) -> bool {
        self.commute_mod(s, s, n)
    }

    /// Whether `S/N` is a central product of two proper nontrivial subgroups
    /// (cyclic of order `p` counting as decomposable).
    fn decomposable(&self, s: &Sub, n: u128) -> bool {
        let quotient_exp = self.exp(s.mask) - self.exp(n);
        if quotient_exp <= 1 && self.abelian_mod(s, n) {
            return true;
        }
        let between: Vec<&Sub> = self
            .subs
            .iter()
            .filter(|j| j.mask & n == n && j.mask & s.mask == j.mask && j.mask != n && j.mask != s.mask)
            .collect();
        let target = s.mask.count_ones();
        for (a, j) in between.iter().enumerate() {
            for k in &between[a..] {
                let prod =
                    j.mask.count_ones() as u64 * k.mask.count_ones() as u64 / (j.mask & k.mask).count_ones() as u64;
                if prod == target as u64 && self.commute_mod(j, k, n) {
                    return true;
                }
            }
        }
        false
    }
}

/// `κ(P)`, `λ(P)` and the restricted `λ(P)` from the full subgroup lattice.
pub fn literal_kappa_lambda(g: &BaerGroup, limits: &Limits) -> Result<LatticeReport> {
    limits.check_group("subgroup lattice", g.p(), g.order_exp())?;
    if g.order().is_none_or(|o| o > 128) {
        return Err(Error::GuardExceeded(format!(
            "subgroup lattice needs |P| <= 128, have {}^{}",
            g.p(),
            g.order_exp()
        )));
    }
    let lat = Lattice::new(g);
    let whole = lat
        .subs
        .iter()
        .find(|s| s.mask.count_ones() as usize == lat.elems.len())
        .expect("P is among its subgroups")
        .clone();
    let derived_p = lat.derived(&whole);
    let center: u128 = (0..lat.elems.len())
        .filter(|&x| whole.gens.iter().all(|&y| lat.comm(x, y) == lat.index[&g.identity()]))
        .fold(0, |acc, x| acc | 1 << x);
    let trivial = lat.closure(&[]);

    let mut kappa = usize::MAX;
    for s in &lat.subs {
        if s.mask == trivial {
            continue;
        }
        let ds = lat.derived(s);
        if ds != s.mask & derived_p {
            continue;
        }
        let abel = lat.exp(s.mask) - lat.exp(ds);
        if abel > g.n() {
            continue;
        }
        let sv = g.n() - abel;
        if sv < kappa && lat.decomposable(s, trivial) {
            kappa = sv;
        }
    }

    let mut lambda = usize::MAX;
    let mut lambda_derived = usize::MAX;
    for nsub in &lat.subs {
        if nsub.mask & center != nsub.mask {
            continue;
        }
        let e = lat.exp(nsub.mask);
        let inside = nsub.mask & derived_p == nsub.mask;
        if e >= lambda && (!inside || e >= lambda_derived) {
            continue;
        }
        if lat.decomposable(&whole, nsub.mask) {
            lambda = lambda.min(e);
            if inside {
                lambda_derived = lambda_derived.min(e);
            }
        }
    }
    Ok(LatticeReport {
        subgroups: lat.subs.len(),
        kappa,
        lambda,
        lambda_derived,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k2_lattice() {
        let g = BaerGroup::from_graph(&Graph::complete(2), 3).unwrap();
        let r = literal_kappa_lambda(&g, &Limits::default()).unwrap();
        // Heisenberg group of order 27: trivial, 13 of order 3, 4 of order 9, P.
        assert_eq!(r.subgroups, 19);
        assert_eq!((r.kappa, r.lambda, r.lambda_derived), (1, 1, 1));
    }

    #[test]
    fn guard() {
        let g = BaerGroup::from_graph(&Graph::path(3), 3).unwrap();
        assert!(literal_kappa_lambda(&g, &Limits::default()).is_err());
    }
}
