use super::space::AltMatrixSpace;
use crate::error::{Error, Result};
use crate::gf::{rank_capped, SubspaceEnumerator};

/// `deg(v) = dim 𝒜v = dim span{A v : A ∈ 𝒜}`.
pub fn degree_vector(space: &AltMatrixSpace, v: &[u8]) -> Result<usize> {
    if v.len() != space.n() {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for n = {}",
            v.len(),
            space.n()
        )));
    }
    if v.iter().all(|&x| x == 0) {
        return Err(Error::InvalidArgument("degree of the zero vector".into()));
    }
    Ok(degree_unchecked(space, v))
}

fn degree_unchecked(space: &AltMatrixSpace, v: &[u8]) -> usize {
    let n = space.n();
    let mut data: Vec<u8> = space.basis().iter().flat_map(|a| a.mul_vec(v)).collect();
    rank_capped(space.field(), &mut data, space.dim(), n, n)
}

/// `δ(𝒜)` together with the first line (in enumeration order) attaining it.
/// Degrees are constant on lines, so lines suffice.
pub fn delta_space_with_witness(space: &AltMatrixSpace) -> (usize, Vec<u8>) {
    let e = SubspaceEnumerator::new(space.field(), space.n(), 1).expect("n >= 1");
    let mut best: Option<(usize, Vec<u8>)> = None;
    for line in e.iter() {
        let v = line.basis_row(0).to_vec();
        let d = degree_unchecked(space, &v);
        if best.as_ref().is_none_or(|b| d < b.0) {
            best = Some((d, v));
            if d == 0 {
                break;
            }
        }
    }
    best.expect("n >= 1 gives at least one line")
}

/// `δ(𝒜)`, the minimum degree over nonzero vectors.
pub fn delta_space(space: &AltMatrixSpace) -> usize {
    delta_space_with_witness(space).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::{unit_vector, Field};
    use crate::graph::{all_labeled_graphs, min_degree, Graph};

    fn f3() -> Field {
        Field::new(3).unwrap()
    }

    #[test]
    fn star_degrees() {
        let s = AltMatrixSpace::from_graph(&Graph::star(3), f3());
        assert_eq!(degree_vector(&s, &unit_vector(4, 0)).unwrap(), 3);
        assert_eq!(degree_vector(&s, &unit_vector(4, 2)).unwrap(), 1);
        assert!(degree_vector(&s, &[0, 0, 0, 0]).is_err());
        assert_eq!(delta_space(&s), 1);
    }

    #[test]
    fn zero_space_has_degree_zero() {
        let s = AltMatrixSpace::zero(f3(), 3);
        assert_eq!(degree_vector(&s, &[1, 2, 0]).unwrap(), 0);
        assert_eq!(delta_space(&s), 0);
    }

    #[test]
    fn unit_vector_degree_is_graph_degree() {
        for n in 2..=5 {
            for g in all_labeled_graphs(n) {
                let s = AltMatrixSpace::from_graph(&g, f3());
                for v in 0..n {
                    assert_eq!(degree_vector(&s, &unit_vector(n, v)).unwrap(), g.degree(v));
                }
                assert!(delta_space(&s) <= min_degree(&g));
            }
        }
    }
}
