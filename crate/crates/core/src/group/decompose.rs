//! Central decompositions of sections `S/N` of a Baer group, where
//! `S = {(v, u) : v ∈ U, u ∈ Y}` and `N = {(0, u) : u ∈ X}` with
//! `φ(U, U) + X ≤ Y`.
//!
//! Any central decomposition `JK` can be enlarged so that both factors
//! contain the derived subgroup, so the factors searched here have the form
//! `{(v, u) : v ∈ U_J, u ∈ Y}` with `U_J` proper and nonzero in `U`. The
//! condition `[J, K] ≤ N` is tested with group commutators of generators.

use rayon::prelude::*;

use super::baer::{BaerGroup, GroupElement};
use super::subgroup::{phi_span, SubgroupDescriptor};
use crate::bilinear::{kappa_map, lambda_map};
use crate::error::{Error, Result};
use crate::gf::{all_subspaces, Subspace, SubspaceEnumerator};
use crate::limits::Limits;

/// A section `S/N` given by `U ≤ F^n` and `X ≤ Y ≤ F^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub u: Subspace,
    pub y: Subspace,
    pub x: Subspace,
}

impl Section {
    /// `P` itself.
    pub fn whole(g: &BaerGroup) -> Section {
        Section {
            u: Subspace::full(g.field(), g.n()),
            y: Subspace::full(g.field(), g.m()),
            x: Subspace::zero(g.field(), g.m()),
        }
    }

    /// `S_U` with trivial `N`.
    pub fn regular(g: &BaerGroup, u: &Subspace) -> Section {
        Section {
            u: u.clone(),
            y: phi_span(g, u, u),
            x: Subspace::zero(g.field(), g.m()),
        }
    }

    /// `P / N_X`.
    pub fn quotient(g: &BaerGroup, x: &Subspace) -> Section {
        Section {
            u: Subspace::full(g.field(), g.n()),
            y: Subspace::full(g.field(), g.m()),
            x: x.clone(),
        }
    }

    /// `log_p |S/N|`.
    pub fn order_exp(&self) -> usize {
        self.u.dim() + self.y.dim() - self.x.dim()
    }
}

/// Outcome of [`central_decomposition`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralDecomposition {
    /// Preimages `J, K` of the two factors.
    Split(SubgroupDescriptor, SubgroupDescriptor),
    /// Cyclic of order `p`: decomposable by convention, mirroring the zero
    /// space in `Λ(1)`, with no literal factors.
    Conventional,
    Indecomposable,
}

impl CentralDecomposition {
    pub fn is_decomposable(&self) -> bool {
        !matches!(self, CentralDecomposition::Indecomposable)
    }
}

fn generator(g: &BaerGroup, v: &[u8]) -> GroupElement {
    GroupElement::new(v.to_vec(), vec![0; g.m()])
}

/// Whether `[J, K] ≤ N` for `J, K` generated over `Y` by `a`, `b`.
fn factors_commute(g: &BaerGroup, a: &Subspace, b: &Subspace, x: &Subspace) -> bool {
    (0..a.dim()).all(|i| {
        let gi = generator(g, a.basis_row(i));
        (0..b.dim()).all(|j| {
            let c = g.comm(&gi, &generator(g, b.basis_row(j)));
            c.v.iter().all(|&t| t == 0) && x.contains(&c.u)
        })
    })
}

/// Proper nonzero subspaces of `U` in the ambient coordinates, ordered by
/// dimension then enumeration order inside `F^{dim U}`.
fn proper_subspaces(u: &Subspace) -> Vec<Subspace> {
    let (f, d) = (u.field(), u.dim());
    all_subspaces(f, d)
        .into_iter()
        .filter(|c| !c.is_zero() && !c.is_full())
        .map(|c| {
            Subspace::span(
                f,
                u.ambient(),
                &c.basis().iter().map(|r| u.combine(r)).collect::<Vec<_>>(),
            )
        })
        .collect()
}

fn all_pairs_split(g: &BaerGroup, s: &Section, direct_only: bool) -> Option<(Subspace, Subspace)> {
    let d = s.u.dim();
    let subs = proper_subspaces(&s.u);
    for (i, a) in subs.iter().enumerate() {
        for b in &subs[i..] {
            let dims = a.dim() + b.dim();
            if dims < d || (direct_only && dims != d) {
                continue;
            }
            // Both lie in U, so spanning U is a dimension check.
            if a.sum(b).expect("same ambient").dim() != d {
                continue;
            }
            if factors_commute(g, a, b, &s.x) {
                return Some((a.clone(), b.clone()));
            }
        }
    }
    None
}

/// Searches for a central decomposition of `S/N` over all unordered pairs
/// `(U_J, U_K)` of proper nonzero subspaces of `U` with `U_J + U_K = U`.
pub fn central_decomposition(g: &BaerGroup, s: &Section) -> CentralDecomposition {
    let abelian = phi_span(g, &s.u, &s.u).is_subspace_of(&s.x);
    let split = |a: Subspace, b: Subspace| {
        CentralDecomposition::Split(
            SubgroupDescriptor::Structured { u: a, x: s.y.clone() },
            SubgroupDescriptor::Structured { u: b, x: s.y.clone() },
        )
    };
    if abelian && s.order_exp() <= 1 {
        return CentralDecomposition::Conventional;
    }
    if abelian && s.u.dim() == 1 {
        // (U, X) times (0, Y): both proper since X < Y here.
        return CentralDecomposition::Split(
            SubgroupDescriptor::Structured {
                u: s.u.clone(),
                x: s.x.clone(),
            },
            SubgroupDescriptor::Structured {
                u: Subspace::zero(g.field(), g.n()),
                x: s.y.clone(),
            },
        );
    }
    match all_pairs_split(g, s, false) {
        Some((a, b)) => split(a, b),
        None => CentralDecomposition::Indecomposable,
    }
}

/// Like [`central_decomposition`] but only over direct sums
/// `U_J ⊕ U_K = U`; used to check that directness can be assumed.
pub fn has_direct_decomposition(g: &BaerGroup, s: &Section) -> bool {
    match central_decomposition(g, s) {
        CentralDecomposition::Indecomposable => false,
        CentralDecomposition::Conventional => true,
        CentralDecomposition::Split(..) => {
            phi_span(g, &s.u, &s.u).is_subspace_of(&s.x) || all_pairs_split(g, s, true).is_some()
        }
    }
}

/// Whether `P` (or `P/N_X` when `x` is given) is centrally decomposable.
pub fn is_centrally_decomposable(g: &BaerGroup, x: Option<&Subspace>, limits: &Limits) -> Result<CentralDecomposition> {
    limits.check_group("central decomposition", g.p(), g.order_exp())?;
    let s = match x {
        Some(x) => {
            if x.ambient() != g.m() {
                return Err(Error::DimensionMismatch(format!(
                    "X ≤ F^{} for m = {}",
                    x.ambient(),
                    g.m()
                )));
            }
            Section::quotient(g, x)
        }
        None => Section::whole(g),
    };
    Ok(central_decomposition(g, &s))
}

/// `κ(P)` over regular subgroups `S_U`, with the first witnessing `U`.
pub fn kappa_group(g: &BaerGroup, limits: &Limits) -> Result<(usize, Subspace)> {
    limits.check_group("kappa of a group", g.p(), g.order_exp())?;
    let (f, n) = (g.field(), g.n());
    for s in 0..n {
        let e = SubspaceEnumerator::new(f, n, n - s).expect("s < n");
        let hit = (0..e.len() as usize).into_par_iter().find_first(|&i| {
            let u = e.get(i as u64);
            central_decomposition(g, &Section::regular(g, &u)).is_decomposable()
        });
        if let Some(i) = hit {
            return Ok((s, e.get(i as u64)));
        }
    }
    unreachable!("cyclic S_U of order p decompose by convention")
}

/// `λ(P)` over central subgroups `N_X ≤ [P, P]`, with the first witnessing `X`.
pub fn lambda_group(g: &BaerGroup, limits: &Limits) -> Result<(usize, Subspace)> {
    limits.check_group("lambda of a group", g.p(), g.order_exp())?;
    let (f, m) = (g.field(), g.m());
    for s in 0..=m {
        let e = SubspaceEnumerator::new(f, m, s).expect("s <= m");
        let hit = (0..e.len() as usize).into_par_iter().find_first(|&i| {
            let x = e.get(i as u64);
            central_decomposition(g, &Section::quotient(g, &x)).is_decomposable()
        });
        if let Some(i) = hit {
            return Ok((s, e.get(i as u64)));
        }
    }
    unreachable!("P/[P,P] is elementary abelian of rank n >= 2")
}

/// `κ(P)` through the commutator map.
pub fn kappa_group_fast(g: &BaerGroup, limits: &Limits) -> Result<usize> {
    Ok(kappa_map(&g.commutator_map(), limits)?.0)
}

/// `λ(P)` through the commutator map.
pub fn lambda_group_fast(g: &BaerGroup, limits: &Limits) -> Result<usize> {
    Ok(lambda_map(&g.commutator_map(), limits)?.0)
}
