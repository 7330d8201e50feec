use std::collections::HashSet;

use super::baer::{closure, BaerGroup, GroupElement};
use crate::error::{Error, Result};
use crate::gf::{rank_capped, Subspace, SubspaceEnumerator};
use crate::limits::Limits;

/// A subgroup, either listed or as `{(v, u) : v ∈ U, u ∈ X}`.
///
/// The structured form is a subgroup exactly when `φ(U, U) ≤ X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubgroupDescriptor {
    Explicit(Vec<GroupElement>),
    Structured { u: Subspace, x: Subspace },
}

impl SubgroupDescriptor {
    /// `log_p` of the order.
    pub fn order_exp(&self, g: &BaerGroup) -> usize {
        match self {
            SubgroupDescriptor::Structured { u, x } => u.dim() + x.dim(),
            SubgroupDescriptor::Explicit(elems) => {
                let mut c = elems.len();
                let mut e = 0;
                while c > 1 {
                    c /= g.p() as usize;
                    e += 1;
                }
                e
            }
        }
    }

    pub fn contains(&self, h: &GroupElement) -> bool {
        match self {
            SubgroupDescriptor::Structured { u, x } => u.contains(&h.v) && x.contains(&h.u),
            SubgroupDescriptor::Explicit(elems) => elems.contains(h),
        }
    }

    /// Closure under the product (and hence inverses, the group being finite).
    pub fn is_closed(&self, g: &BaerGroup) -> bool {
        match self {
            SubgroupDescriptor::Structured { u, x } => phi_span(g, u, u).is_subspace_of(x),
            SubgroupDescriptor::Explicit(elems) => {
                let set: HashSet<&GroupElement> = elems.iter().collect();
                set.contains(&g.identity()) && elems.iter().all(|a| elems.iter().all(|b| set.contains(&g.mul(a, b))))
            }
        }
    }

    /// All elements, subject to the scan guard.
    pub fn elements(&self, g: &BaerGroup, limits: &Limits) -> Result<Vec<GroupElement>> {
        match self {
            SubgroupDescriptor::Explicit(elems) => Ok(elems.clone()),
            SubgroupDescriptor::Structured { u, x } => {
                limits.check_group("subgroup listing", g.p(), u.dim() + x.dim())?;
                let p = g.p() as u64;
                let total = p.pow((u.dim() + x.dim()) as u32);
                Ok((0..total)
                    .map(|mut idx| {
                        let mut coeffs = |k: usize| {
                            (0..k)
                                .map(|_| {
                                    let d = (idx % p) as u8;
                                    idx /= p;
                                    d
                                })
                                .collect::<Vec<u8>>()
                        };
                        let cu = coeffs(u.dim());
                        let cx = coeffs(x.dim());
                        GroupElement::new(u.combine(&cu), x.combine(&cx))
                    })
                    .collect())
            }
        }
    }
}

/// `span φ(A, B)` inside `F^m`.
pub(crate) fn phi_span(g: &BaerGroup, a: &Subspace, b: &Subspace) -> Subspace {
    let mut vecs = Vec::with_capacity(a.dim() * b.dim());
    for i in 0..a.dim() {
        for j in 0..b.dim() {
            vecs.push(g.phi().eval(a.basis_row(i), b.basis_row(j)));
        }
    }
    Subspace::span(g.field(), g.m(), &vecs)
}

/// `Z(P) = {(v, u) : φ(v, ·) = 0}`.
pub fn center(g: &BaerGroup) -> SubgroupDescriptor {
    let (n, f) = (g.n(), g.field());
    let mut rows: Vec<u8> = g.phi().matrices().iter().flat_map(|a| a.vectorize()).collect();
    let radical = crate::gf::kernel_slice(f, &mut rows, n * g.m(), n);
    SubgroupDescriptor::Structured {
        u: Subspace::span(f, n, &radical),
        x: Subspace::full(f, g.m()),
    }
}

/// `[P, P] = {(0, u)}`.
pub fn commutator_subgroup(g: &BaerGroup) -> SubgroupDescriptor {
    SubgroupDescriptor::Structured {
        u: Subspace::zero(g.field(), g.n()),
        x: Subspace::full(g.field(), g.m()),
    }
}

/// `S_U = {(v, u) : v ∈ U, u ∈ span φ(U, U)}`, the smallest subgroup whose
/// image in `P/[P,P]` is `U` among those meeting `[P,P]` only in `[S,S]`.
pub fn regular_subgroup(g: &BaerGroup, u: &Subspace) -> Result<SubgroupDescriptor> {
    if u.ambient() != g.n() {
        return Err(Error::DimensionMismatch(format!(
            "U ≤ F^{} for n = {}",
            u.ambient(),
            g.n()
        )));
    }
    Ok(SubgroupDescriptor::Structured {
        u: u.clone(),
        x: phi_span(g, u, u),
    })
}

/// `N_X = {(0, u) : u ∈ X}`.
pub fn central_subgroup(g: &BaerGroup, x: &Subspace) -> Result<SubgroupDescriptor> {
    if x.ambient() != g.m() {
        return Err(Error::DimensionMismatch(format!(
            "X ≤ F^{} for m = {}",
            x.ambient(),
            g.m()
        )));
    }
    Ok(SubgroupDescriptor::Structured {
        u: Subspace::zero(g.field(), g.n()),
        x: x.clone(),
    })
}

/// `[S, S] = S ∩ [P, P]`.
pub fn is_regular(g: &BaerGroup, s: &SubgroupDescriptor) -> bool {
    match s {
        SubgroupDescriptor::Structured { u, x } => phi_span(g, u, u) == *x,
        SubgroupDescriptor::Explicit(elems) => {
            let comms: Vec<GroupElement> = elems
                .iter()
                .flat_map(|a| elems.iter().map(move |b| (a, b)))
                .map(|(a, b)| g.comm(a, b))
                .collect();
            let derived = closure(g, &comms);
            let meet: HashSet<GroupElement> = elems.iter().filter(|h| h.v.iter().all(|&x| x == 0)).cloned().collect();
            derived == meet
        }
    }
}

/// `deg(g) = n + m - log_p |C_P(g)|`. Since `C_P((v, u)) = {(w, u') : φ(v, w) = 0}`
/// this is the rank of `w ↦ φ(v, w)`.
pub fn deg_element(g: &BaerGroup, h: &GroupElement) -> usize {
    let n = g.n();
    let mut rows: Vec<u8> = g.phi().matrices().iter().flat_map(|a| a.mul_vec(&h.v)).collect();
    rank_capped(g.field(), &mut rows, g.m(), n, n)
}

/// [`deg_element`] by counting the centralizer element by element.
pub fn deg_element_scan(g: &BaerGroup, h: &GroupElement, limits: &Limits) -> Result<usize> {
    let elems = g.elements(limits)?;
    let count = elems.iter().filter(|x| g.commutes(h, x)).count();
    let mut d = 0;
    let mut c = count;
    while c > 1 {
        c /= g.p() as usize;
        d += 1;
    }
    Ok(g.order_exp() - d)
}

/// `δ(P)`: minimum degree over `P ∖ [P, P]`. The degree of `(v, u)` depends
/// only on the line of `v`.
pub fn delta_group(g: &BaerGroup) -> usize {
    SubspaceEnumerator::new(g.field(), g.n(), 1)
        .expect("n >= 1")
        .iter()
        .map(|l| deg_element(g, &GroupElement::new(l.basis_row(0).to_vec(), vec![0; g.m()])))
        .min()
        .expect("n >= 1")
}

/// `δ(P)` and the largest degree, both from centralizer scans of every element.
pub fn degree_scan(g: &BaerGroup, limits: &Limits) -> Result<(usize, usize)> {
    let elems = g.elements(limits)?;
    let p = g.p() as usize;
    let mut min = usize::MAX;
    let mut max = 0;
    for h in &elems {
        let count = elems.iter().filter(|x| g.commutes(h, x)).count();
        let mut d = 0;
        let mut c = count;
        while c > 1 {
            c /= p;
            d += 1;
        }
        let deg = g.order_exp() - d;
        max = max.max(deg);
        if h.v.iter().any(|&x| x != 0) {
            min = min.min(deg);
        }
    }
    Ok((min, max))
}
