use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use blt::altspace::{
    delta_space, is_orth_decomposable, is_orth_decomposable_naive, is_orth_witness, kappa_space, lambda_space,
    lambda_space_oracle, random_isometry, random_space, AltMatrixSpace,
};
use blt::bilinear::AltBilinearMap;
use blt::gf::{Field, Matrix, Subspace};
use blt::graph::{
    edge_connectivity, edge_connectivity_brute, min_degree, vertex_connectivity, vertex_connectivity_brute, Graph,
};
use blt::group::{center, deg_element, BaerGroup, GroupElement};
use blt::Limits;

fn field() -> impl Strategy<Value = Field> {
    prop::sample::select(vec![3u32, 5, 7]).prop_map(|q| Field::new(q).unwrap())
}

prop_compose! {
    fn matrix(max: usize)(f in field(), rows in 1..=max, cols in 1..=max)
        (data in prop::collection::vec(any::<u8>(), rows * cols), f in Just(f), rows in Just(rows), cols in Just(cols))
        -> Matrix {
        let data = data.into_iter().map(|x| x % f.q() as u8).collect();
        Matrix::from_data(f, rows, cols, data).unwrap()
    }
}

prop_compose! {
    /// A random space given by its dimensions and a seed.
    fn space(max_n: usize, max_m: usize)(f in field(), n in 2..=max_n, seed in any::<u64>())
        (m in 1..=(n * (n - 1) / 2).min(max_m), f in Just(f), n in Just(n), seed in Just(seed)) -> AltMatrixSpace {
        random_space(f, n, m, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap()
    }
}

prop_compose! {
    fn graph(max_n: usize)(n in 2..=max_n)(n in Just(n), mask in 1u64..(1u64 << (n * (n - 1) / 2))) -> Graph {
        Graph::from_mask(n, mask).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_of_transpose(m in matrix(6)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank() + m.kernel().len(), m.cols());
        for k in m.kernel() {
            prop_assert!(m.mul_vec(&k).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn inverse_when_invertible(m in matrix(5)) {
        if m.is_square() {
            match m.inverse() {
                Some(inv) => prop_assert_eq!(m.mul(&inv), Matrix::identity(m.field(), m.rows())),
                None => prop_assert!(m.rank() < m.rows()),
            }
        }
    }

    #[test]
    fn subspace_dimension_formula(a in matrix(5), b in matrix(5)) {
        if a.cols() == b.cols() && a.field() == b.field() {
            let (u, v) = (Subspace::row_space(&a), Subspace::row_space(&b));
            let s = u.sum(&v).unwrap();
            let i = u.intersect(&v).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
            prop_assert!(i.is_subspace_of(&u) && i.is_subspace_of(&v));
            prop_assert!(u.is_direct_complement(&u.complement()));
        }
    }

    #[test]
    fn graph_inequalities(g in graph(6)) {
        let k = vertex_connectivity(&g).kappa;
        let l = edge_connectivity(&g).lambda;
        prop_assert!(k <= l && l <= min_degree(&g));
        prop_assert_eq!(k, vertex_connectivity_brute(&g).kappa);
        prop_assert_eq!(l, edge_connectivity_brute(&g).lambda);
        let cut = edge_connectivity(&g).cut;
        prop_assert!(cut.len() == l && (l == 0 || g.edge_cut_disconnects(&cut)));
    }

    #[test]
    fn space_degree_bounds(s in space(4, 5)) {
        let l = Limits::default();
        let d = delta_space(&s);
        prop_assert!(kappa_space(&s, &l).unwrap().kappa <= d);
        prop_assert!(lambda_space(&s, &l).unwrap().lambda <= d);
        prop_assert!(d < s.n());
    }

    #[test]
    fn lambda_definitions_agree(s in space(4, 4)) {
        let l = Limits::default();
        prop_assert_eq!(lambda_space(&s, &l).unwrap().lambda, lambda_space_oracle(&s, &l).unwrap());
    }

    #[test]
    fn decomposition_witnesses(s in space(4, 3)) {
        let (dec, w) = is_orth_decomposable(&s);
        prop_assert_eq!(dec, is_orth_decomposable_naive(&s));
        if let Some(w) = w {
            prop_assert!(is_orth_witness(&s, &w));
        }
    }

    #[test]
    fn isometries_preserve_parameters(s in space(4, 4), seed in any::<u64>()) {
        let l = Limits::default();
        let (img, t) = random_isometry(&s, seed);
        prop_assert!(t.is_invertible());
        prop_assert_eq!(img.dim(), s.dim());
        prop_assert_eq!(kappa_space(&img, &l).unwrap().kappa, kappa_space(&s, &l).unwrap().kappa);
        prop_assert_eq!(lambda_space(&img, &l).unwrap().lambda, lambda_space(&s, &l).unwrap().lambda);
        prop_assert_eq!(delta_space(&img), delta_space(&s));
    }

    #[test]
    fn json_round_trips(s in space(5, 6)) {
        prop_assert_eq!(AltMatrixSpace::from_json_str(&s.to_json_string()).unwrap(), s.clone());
        let phi = AltBilinearMap::from_space(&s, None).unwrap();
        prop_assert_eq!(AltBilinearMap::from_json(&phi.to_json()).unwrap(), phi.clone());
        if s.field().q() == 3 || s.field().q() == 5 {
            let g = BaerGroup::new(phi, s.field().q()).unwrap();
            prop_assert_eq!(BaerGroup::from_json(&g.to_json()).unwrap(), g);
        }
    }

    #[test]
    fn quotient_codomain(s in space(4, 5), pick in any::<u64>()) {
        let phi = AltBilinearMap::from_space(&s, None).unwrap();
        let e = blt::gf::SubspaceEnumerator::new(s.field(), phi.m(), (pick % (phi.m() as u64 + 1)) as usize).unwrap();
        let x = e.get(pick % e.len());
        let q = phi.quotient(&x).unwrap();
        prop_assert_eq!(q.m(), phi.m() - x.dim());
        prop_assert!(q.is_surjective());
    }

    #[test]
    fn group_laws(s in space(4, 4), seed in any::<u64>()) {
        let p = s.field().q();
        let g = BaerGroup::new(AltBilinearMap::from_space(&s, None).unwrap(), p).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (g.random_element(&mut rng), g.random_element(&mut rng), g.random_element(&mut rng));
        let ab = g.multiply(&a, &b).unwrap();
        prop_assert_eq!(g.multiply(&ab, &c).unwrap(), g.multiply(&a, &g.multiply(&b, &c).unwrap()).unwrap());
        prop_assert_eq!(g.power(&a, p as u64).unwrap(), g.identity());
        let comm = g.commutator(&a, &b).unwrap();
        prop_assert!(comm.v.iter().all(|&x| x == 0));
        prop_assert!(center(&g).contains(&comm));
        prop_assert_eq!(comm.u, g.phi().eval(&a.v, &b.v));
        prop_assert_eq!(&g.commutator_map(), g.phi());
    }

    #[test]
    fn degree_of_elements(s in space(4, 4), seed in any::<u64>()) {
        let p = s.field().q();
        let g = BaerGroup::new(AltBilinearMap::from_space(&s, None).unwrap(), p).unwrap();
        let h = g.random_element(&mut ChaCha8Rng::seed_from_u64(seed));
        let d = deg_element(&g, &h);
        prop_assert!(d < g.n());
        prop_assert_eq!(d == 0, center(&g).contains(&h));
        let text = h.to_string();
        prop_assert_eq!(GroupElement::parse(&text, g.field(), g.n(), g.m()).unwrap(), h);
    }
}
