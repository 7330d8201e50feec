//! Fully connected matrix spaces and the field-extension construction.

use std::fmt;

use super::space::AltMatrixSpace;
use crate::error::{Error, Result};
use crate::gf::{rref_slice, Field, Matrix, SubspaceEnumerator};

/// A subspace of `M(s x t, F_q)`, canonical basis as for alternating spaces
/// but over the full row-major vectorization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GeneralMatrixSpace {
    field: Field,
    rows: usize,
    cols: usize,
    basis: Vec<Matrix>,
}

impl GeneralMatrixSpace {
    pub fn span(field: Field, rows: usize, cols: usize, mats: &[Matrix]) -> Result<GeneralMatrixSpace> {
        if let Some(a) = mats.iter().find(|a| a.rows() != rows || a.cols() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix in a space of {rows}x{cols} matrices",
                a.rows(),
                a.cols()
            )));
        }
        let w = rows * cols;
        let mut data: Vec<u8> = mats.iter().flat_map(|a| a.vectorize()).collect();
        let piv = rref_slice(field, &mut data, mats.len(), w);
        let basis = (0..piv.len())
            .map(|r| Matrix::from_data(field, rows, cols, data[r * w..(r + 1) * w].to_vec()).expect("sizes"))
            .collect();
        Ok(GeneralMatrixSpace {
            field,
            rows,
            cols,
            basis,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Matrix] {
        &self.basis
    }

    /// For all nonzero `u ∈ F^s`, `v ∈ F^t` some `B` has `u^t B v != 0`.
    /// Checked on line representatives.
    pub fn is_fully_connected(&self) -> bool {
        if self.rows == 0 || self.cols == 0 {
            return true;
        }
        let us: Vec<Vec<u8>> = lines(self.field, self.rows);
        let vs: Vec<Vec<u8>> = lines(self.field, self.cols);
        us.iter()
            .all(|u| vs.iter().all(|v| self.basis.iter().any(|b| b.bilinear(u, v) != 0)))
    }
}

impl fmt::Debug for GeneralMatrixSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GeneralMatrixSpace({}, {}x{}, {:?})",
            self.field, self.rows, self.cols, self.basis
        )
    }
}

fn lines(field: Field, n: usize) -> Vec<Vec<u8>> {
    SubspaceEnumerator::new(field, n, 1)
        .expect("n >= 1")
        .iter()
        .map(|l| l.basis_row(0).to_vec())
        .collect()
}

/// For all linearly independent `u, v ∈ F^n` some `A ∈ 𝒜` has `u^t A v != 0`.
/// Checked on pairs of distinct lines.
pub fn is_fully_connected(space: &AltMatrixSpace) -> bool {
    let ls = lines(space.field(), space.n());
    for (i, u) in ls.iter().enumerate() {
        for v in &ls[i + 1..] {
            if space.basis().iter().all(|a| a.bilinear(u, v) == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `a` modulo the monic `b`; coefficients low degree first.
fn poly_rem(field: Field, a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db {
        let lead = *r.last().expect("nonempty");
        let shift = r.len() - 1 - db;
        if lead != 0 {
            for (i, &c) in b.iter().enumerate() {
                r[shift + i] = field.sub(r[shift + i], field.mul(lead, c));
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomial of degree `s` from `a_0..a_{s-1}` (low first).
fn monic(coeffs: &[u8]) -> Vec<u8> {
    let mut p = coeffs.to_vec();
    p.push(1);
    p
}

/// `coeffs` are `a_0..a_{s-1}` of `x^s + a_{s-1} x^{s-1} + ... + a_0`.
pub fn is_irreducible(field: Field, coeffs: &[u8]) -> bool {
    let s = coeffs.len();
    if s == 0 {
        return false;
    }
    let p = monic(coeffs);
    let q = field.q() as u64;
    for d in 1..=s / 2 {
        for idx in 0..q.pow(d as u32) {
            let mut low = vec![0u8; d];
            let mut rem = idx;
            for x in low.iter_mut() {
                *x = (rem % q) as u8;
                rem /= q;
            }
            if poly_rem(field, &p, &monic(&low)).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

/// The lexicographically least monic irreducible of degree `s`, ordering by
/// `(a_{s-1}, ..., a_0)`. Returned as `a_0..a_{s-1}`.
pub fn least_irreducible(field: Field, s: usize) -> Vec<u8> {
    let q = field.q() as u64;
    let total = q.checked_pow(s as u32).expect("small degree");
    for idx in 0..total {
        // idx written in base q with a_{s-1} most significant.
        let mut coeffs = vec![0u8; s];
        let mut rem = idx;
        for x in coeffs.iter_mut() {
            *x = (rem % q) as u8;
            rem /= q;
        }
        if is_irreducible(field, &coeffs) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Companion matrix: `C e_i = e_{i+1}` and `C e_s = -(a_0, ..., a_{s-1})`.
pub fn companion(field: Field, coeffs: &[u8]) -> Matrix {
    let s = coeffs.len();
    let mut c = Matrix::zeros(field, s, s);
    for i in 0..s.saturating_sub(1) {
        c.set(i + 1, i, 1);
    }
    for (r, &a) in coeffs.iter().enumerate() {
        c.set(r, s - 1, field.neg(a));
    }
    c
}

/// Output of [`field_ext_full_space`].
#[derive(Clone, Debug)]
pub struct FieldExtSpace {
    /// `a_0..a_{s-1}` of the defining polynomial.
    pub poly: Vec<u8>,
    /// `C_1, ..., C_s` with `C_j = C^{j-1}`; their span is a copy of `F_{q^s}`.
    pub regular: Vec<Matrix>,
    /// `span{B_1, ..., B_s}`, `B_i = [C_1 e_i | ... | C_s e_i]`.
    pub space: GeneralMatrixSpace,
}

impl FieldExtSpace {
    pub fn poly_string(&self) -> String {
        let s = self.poly.len();
        let mut terms = vec![format!("x^{s}")];
        for d in (0..s).rev() {
            let a = self.poly[d];
            if a == 0 {
                continue;
            }
            let coef = if a == 1 && d > 0 { String::new() } else { a.to_string() };
            terms.push(match d {
                0 => a.to_string(),
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{d}"),
            });
        }
        terms.join(" + ")
    }
}

/// A dimension-`s` fully connected subspace of `M(s, F_q)` from the regular
/// representation of `F_{q^s}`.
pub fn field_ext_full_space(s: usize, field: Field) -> Result<FieldExtSpace> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be at least 1".into()));
    }
    let poly = least_irreducible(field, s);
    let c = companion(field, &poly);
    let mut regular = vec![Matrix::identity(field, s)];
    for j in 1..s {
        regular.push(regular[j - 1].mul(&c));
    }
    let bs: Vec<Matrix> = (0..s)
        .map(|i| {
            let mut b = Matrix::zeros(field, s, s);
            for (j, cj) in regular.iter().enumerate() {
                for r in 0..s {
                    b.set(r, j, cj.get(r, i));
                }
            }
            b
        })
        .collect();
    let space = GeneralMatrixSpace::span(field, s, s, &bs)?;
    Ok(FieldExtSpace { poly, regular, space })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn f(q: u32) -> Field {
        Field::new(q).unwrap()
    }

    #[test]
    fn least_irreducibles() {
        assert_eq!(least_irreducible(f(3), 2), vec![1, 0]); // x^2 + 1
        assert_eq!(least_irreducible(f(5), 2), vec![2, 0]); // x^2 + 2
        assert_eq!(least_irreducible(f(3), 3), vec![1, 2, 0]); // x^3 + 2x + 1
        assert_eq!(least_irreducible(f(3), 1), vec![0]); // x
    }

    #[test]
    fn irreducibility() {
        assert!(!is_irreducible(f(3), &[2, 0])); // x^2 - 1
        assert!(!is_irreducible(f(5), &[1, 0])); // x^2 + 1 = (x - 2)(x + 2)
        assert!(is_irreducible(f(3), &[2, 1])); // x^2 + x + 2
    }

    #[test]
    fn fully_connected_alternating() {
        assert!(is_fully_connected(&AltMatrixSpace::full(f(3), 3)));
        assert!(!is_fully_connected(&AltMatrixSpace::from_graph(&Graph::path(3), f(3))));
    }

    #[test]
    fn field_extension_spaces() {
        let s1 = field_ext_full_space(1, f(3)).unwrap();
        assert_eq!(s1.space.dim(), 1);
        assert!(s1.space.is_fully_connected());
        for (s, q) in [(2, 3), (3, 3), (2, 5)] {
            let fe = field_ext_full_space(s, f(q)).unwrap();
            assert_eq!(fe.space.dim(), s);
            assert!(fe.space.is_fully_connected(), "s = {s}, q = {q}");
        }
        assert_eq!(field_ext_full_space(2, f(3)).unwrap().poly_string(), "x^2 + 1");
        assert_eq!(field_ext_full_space(3, f(3)).unwrap().poly_string(), "x^3 + 2x + 1");
    }

    #[test]
    fn non_full_space() {
        let e11 = Matrix::from_rows(f(3), &[[1, 0], [0, 0]]).unwrap();
        let sp = GeneralMatrixSpace::span(f(3), 2, 2, &[e11]).unwrap();
        assert!(!sp.is_fully_connected());
    }
}
