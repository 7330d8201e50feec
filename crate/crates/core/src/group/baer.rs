use std::collections::HashSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::altspace::{parse_matrices, AltMatrixSpace};
use crate::bilinear::AltBilinearMap;
use crate::error::{Error, Result};
use crate::gf::{Field, Matrix};
use crate::graph::Graph;
use crate::limits::Limits;

/// An element `(v, u) ∈ F_p^n ⊕ F_p^m`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub v: Vec<u8>,
    pub u: Vec<u8>,
}

impl GroupElement {
    pub fn new(v: Vec<u8>, u: Vec<u8>) -> GroupElement {
        GroupElement { v, u }
    }

    /// Parses `"v1,v2,...;u1,u2,..."`; integers are reduced mod `p`.
    pub fn parse(text: &str, field: Field, n: usize, m: usize) -> Result<GroupElement> {
        let (vs, us) = text
            .split_once(';')
            .ok_or_else(|| Error::InvalidArgument(format!("element {text:?} needs the form v1,...;u1,...")))?;
        let parse_part = |part: &str, len: usize, what: &str| -> Result<Vec<u8>> {
            let part = part.trim();
            let vals: Vec<u8> = if part.is_empty() {
                Vec::new()
            } else {
                part.split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<i64>()
                            .map(|x| field.reduce(x))
                            .map_err(|e| Error::InvalidArgument(format!("{what} entry {t:?}: {e}")))
                    })
                    .collect::<Result<_>>()?
            };
            if vals.len() != len {
                return Err(Error::DimensionMismatch(format!(
                    "{what} has {} entries, expected {len}",
                    vals.len()
                )));
            }
            Ok(vals)
        };
        Ok(GroupElement {
            v: parse_part(vs, n, "v")?,
            u: parse_part(us, m, "u")?,
        })
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |x: &[u8]| x.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{};{}", join(&self.v), join(&self.u))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// The group `P_φ` on `F_p^n ⊕ F_p^m` with
/// `(v1, u1) ∘ (v2, u2) = (v1 + v2, u1 + u2 + ½ φ(v1, v2))`.
///
/// Elements are computed pairs; nothing is tabulated.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BaerGroup {
    phi: AltBilinearMap,
}

impl BaerGroup {
    /// Requires `p` odd, equal to the field of `φ`, and `φ` surjective.
    pub fn new(phi: AltBilinearMap, p: u32) -> Result<BaerGroup> {
        let field = Field::new(p)?;
        if field != phi.field() {
            return Err(Error::InvalidArgument(format!(
                "p = {p} but the map is over {}",
                phi.field()
            )));
        }
        if phi.m() == 0 || !phi.is_surjective() {
            return Err(Error::NotSurjective);
        }
        Ok(BaerGroup { phi })
    }

    /// `P_G`: the group of `φ_{𝒜_G}` over `F_p`.
    pub fn from_graph(g: &Graph, p: u32) -> Result<BaerGroup> {
        let field = Field::new(p)?;
        let phi = AltBilinearMap::from_space(&AltMatrixSpace::from_graph(g, field), None)?;
        BaerGroup::new(phi, p)
    }

    pub fn field(&self) -> Field {
        self.phi.field()
    }

    pub fn p(&self) -> u32 {
        self.phi.field().q()
    }

    pub fn n(&self) -> usize {
        self.phi.n()
    }

    pub fn m(&self) -> usize {
        self.phi.m()
    }

    pub fn phi(&self) -> &AltBilinearMap {
        &self.phi
    }

    /// `log_p |P| = n + m`.
    pub fn order_exp(&self) -> usize {
        self.n() + self.m()
    }

    /// `|P|`, if it fits.
    pub fn order(&self) -> Option<u64> {
        self.field().count_pow(self.order_exp())
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::new(vec![0; self.n()], vec![0; self.m()])
    }

    fn check(&self, g: &GroupElement) -> Result<()> {
        if g.v.len() != self.n() || g.u.len() != self.m() {
            return Err(Error::DimensionMismatch(format!(
                "element ({}, {}) in a group with (n, m) = ({}, {})",
                g.v.len(),
                g.u.len(),
                self.n(),
                self.m()
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul(g, h))
    }

    pub(crate) fn mul(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let f = self.field();
        let half = f.half();
        let v = g.v.iter().zip(&h.v).map(|(&a, &b)| f.add(a, b)).collect();
        let phi = self.phi.eval(&g.v, &h.v);
        let u =
            g.u.iter()
                .zip(&h.u)
                .zip(phi)
                .map(|((&a, &b), c)| f.mul_add(f.add(a, b), half, c))
                .collect();
        GroupElement { v, u }
    }

    /// `(v, u)^{-1} = (-v, -u)`.
    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        Ok(self.inv(g))
    }

    pub(crate) fn inv(&self, g: &GroupElement) -> GroupElement {
        let f = self.field();
        GroupElement {
            v: g.v.iter().map(|&a| f.neg(a)).collect(),
            u: g.u.iter().map(|&a| f.neg(a)).collect(),
        }
    }

    /// `g^k` by repeated squaring of the group product.
    pub fn power(&self, g: &GroupElement, mut k: u64) -> Result<GroupElement> {
        self.check(g)?;
        let mut acc = self.identity();
        let mut base = g.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        Ok(acc)
    }

    /// `[g, h] = g ∘ h ∘ g^{-1} ∘ h^{-1}`, evaluated as that word.
    pub fn commutator(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.comm(g, h))
    }

    pub(crate) fn comm(&self, g: &GroupElement, h: &GroupElement) -> GroupElement {
        let gh = self.mul(g, h);
        let ghg = self.mul(&gh, &self.inv(g));
        self.mul(&ghg, &self.inv(h))
    }

    pub(crate) fn commutes(&self, g: &GroupElement, h: &GroupElement) -> bool {
        self.mul(g, h) == self.mul(h, g)
    }

    /// The `idx`-th element: base-`p` digits of `idx` fill `v` then `u`.
    pub fn element_at(&self, mut idx: u64) -> GroupElement {
        let p = self.p() as u64;
        let mut digit = || {
            let d = (idx % p) as u8;
            idx /= p;
            d
        };
        let v = (0..self.n()).map(|_| digit()).collect();
        let u = (0..self.m()).map(|_| digit()).collect();
        GroupElement { v, u }
    }

    /// Every element, after checking the scan guard.
    pub fn elements(&self, limits: &Limits) -> Result<Vec<GroupElement>> {
        limits.check_group("element scan", self.p(), self.order_exp())?;
        let total = self
            .order()
            .ok_or_else(|| Error::GuardExceeded("group order overflows".into()))?;
        Ok((0..total).map(|i| self.element_at(i)).collect())
    }

    /// A uniformly random element.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> GroupElement {
        let p = self.p();
        let mut draw = |len: usize| (0..len).map(|_| rng.gen_range(0..p) as u8).collect::<Vec<u8>>();
        let v = draw(self.n());
        let u = draw(self.m());
        GroupElement { v, u }
    }

    /// The commutator map `φ_P : P/[P,P] × P/[P,P] -> [P,P]`, read off from
    /// group commutators of the generators `(e_i, 0)` in the coordinates
    /// `(0, e_k)` of `[P,P]`.
    pub fn commutator_map(&self) -> AltBilinearMap {
        let (n, m, f) = (self.n(), self.m(), self.field());
        let mut mats = vec![Matrix::zeros(f, n, n); m];
        let gen = |i: usize| {
            let mut v = vec![0; n];
            v[i] = 1;
            GroupElement::new(v, vec![0; m])
        };
        for i in 0..n {
            for j in i + 1..n {
                let c = self.comm(&gen(i), &gen(j));
                debug_assert!(c.v.iter().all(|&x| x == 0));
                for (k, &x) in c.u.iter().enumerate() {
                    mats[k].set(i, j, x);
                    mats[k].set(j, i, f.neg(x));
                }
            }
        }
        AltBilinearMap::new(f, n, mats).expect("commutators are alternating")
    }

    pub fn to_json(&self) -> GroupJson {
        GroupJson {
            p: self.p(),
            n: self.n(),
            m: self.m(),
            phi: self.phi.matrices().iter().map(|a| a.to_rows_i64()).collect(),
        }
    }

    pub fn from_json(j: &GroupJson) -> Result<BaerGroup> {
        let field = Field::new(j.p)?;
        if j.phi.len() != j.m {
            return Err(Error::DimensionMismatch(format!(
                "m = {} but {} matrices",
                j.m,
                j.phi.len()
            )));
        }
        let phi = AltBilinearMap::new(field, j.n, parse_matrices(field, j.n, &j.phi)?)?;
        BaerGroup::new(phi, j.p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupJson {
    pub p: u32,
    pub n: usize,
    pub m: usize,
    pub phi: Vec<Vec<Vec<i64>>>,
}

/// Results of exhaustive and sampled checks of the group structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SanityReport {
    /// `None` when the group is too large for the exhaustive triple scan.
    pub associative_exhaustive: Option<bool>,
    pub associative_sampled: bool,
    pub samples: usize,
    pub identity_and_inverses: bool,
    pub exponent_p: bool,
    pub derived_in_center: bool,
    /// `log_p |P/[P,P]|`.
    pub abelianization_exp: usize,
    /// `log_p |[P,P]|`.
    pub derived_exp: usize,
    pub center_exp: usize,
}

impl SanityReport {
    pub fn holds(&self, g: &BaerGroup) -> bool {
        self.associative_exhaustive != Some(false)
            && self.associative_sampled
            && self.identity_and_inverses
            && self.exponent_p
            && self.derived_in_center
            && self.abelianization_exp == g.n()
            && self.derived_exp == g.m()
    }
}

fn exp_of(count: usize, p: u32) -> usize {
    let mut e = 0;
    let mut c = count;
    while c > 1 {
        assert_eq!(c % p as usize, 0, "subgroup order is a power of p");
        c /= p as usize;
        e += 1;
    }
    e
}

/// Closure of a set under the group product (finite, so this is the
/// generated subgroup).
pub(crate) fn closure(g: &BaerGroup, gens: &[GroupElement]) -> HashSet<GroupElement> {
    let mut set: HashSet<GroupElement> = HashSet::from([g.identity()]);
    let mut frontier = vec![g.identity()];
    while let Some(x) = frontier.pop() {
        for s in gens {
            let y = g.mul(&x, s);
            if set.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    set
}

/// Literal checks: associativity (exhaustive when `|P| <= exhaustive_limit`,
/// plus `samples` random triples), identity and inverses, `g^p = 1`,
/// `[P,P] ≤ Z(P)` and the orders of `P/[P,P]` and `[P,P]`.
pub fn sanity_check(
    g: &BaerGroup,
    limits: &Limits,
    exhaustive_limit: u64,
    samples: usize,
    seed: u64,
) -> Result<SanityReport> {
    let elems = g.elements(limits)?;
    let total = elems.len() as u64;
    let e = g.identity();

    let associative_exhaustive = (total <= exhaustive_limit).then(|| {
        elems.iter().all(|a| {
            elems.iter().all(|b| {
                let ab = g.mul(a, b);
                elems.iter().all(|c| g.mul(&ab, c) == g.mul(a, &g.mul(b, c)))
            })
        })
    });
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let associative_sampled = (0..samples).all(|_| {
        let (a, b, c) = (
            g.random_element(&mut rng),
            g.random_element(&mut rng),
            g.random_element(&mut rng),
        );
        g.mul(&g.mul(&a, &b), &c) == g.mul(&a, &g.mul(&b, &c))
    });
    let identity_and_inverses = elems
        .iter()
        .all(|a| g.mul(a, &e) == *a && g.mul(&e, a) == *a && g.mul(a, &g.inv(a)) == e);
    let p = g.p() as u64;
    let exponent_p = elems.iter().all(|a| g.power(a, p).expect("own element") == e);

    let center: Vec<&GroupElement> = elems
        .iter()
        .filter(|a| elems.iter().all(|b| g.commutes(a, b)))
        .collect();
    let center_set: HashSet<&GroupElement> = center.iter().copied().collect();
    let mut comms: HashSet<GroupElement> = HashSet::new();
    for a in &elems {
        for b in &elems {
            comms.insert(g.comm(a, b));
        }
    }
    let gens: Vec<GroupElement> = comms.into_iter().collect();
    let derived = closure(g, &gens);
    let derived_in_center = derived.iter().all(|d| center_set.contains(d));
    let derived_exp = exp_of(derived.len(), g.p());
    Ok(SanityReport {
        associative_exhaustive,
        associative_sampled,
        samples,
        identity_and_inverses,
        exponent_p,
        derived_in_center,
        abelianization_exp: g.order_exp() - derived_exp,
        derived_exp,
        center_exp: exp_of(center.len(), g.p()),
    })
}
