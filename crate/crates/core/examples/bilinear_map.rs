//! Alternating bilinear maps: evaluation, restriction, quotients and the
//! map-level κ and λ, including a basis reordering that leaves them fixed.
//!
//! ```text
//! cargo run --release --example bilinear_map
//! ```

use blt::altspace::AltMatrixSpace;
use blt::bilinear::{is_decomposable_map, kappa_map, lambda_map, AltBilinearMap};
use blt::gf::{Field, Subspace};
use blt::graph::Graph;
use blt::Limits;

fn main() -> blt::Result<()> {
    let f = Field::new(5)?;
    let limits = Limits::default();
    let space = AltMatrixSpace::from_graph(&Graph::cycle(4), f);
    let phi = AltBilinearMap::from_space(&space, None)?;
    println!("phi: F_5^{} x F_5^{} -> F_5^{}", phi.n(), phi.n(), phi.m());
    println!("phi(e1 + e3, e2) = {:?}", phi.eval(&[1, 0, 1, 0], &[0, 1, 0, 0]));
    println!("surjective: {}", phi.is_surjective());

    let (k, u) = kappa_map(&phi, &limits)?;
    let (l, x) = lambda_map(&phi, &limits)?;
    println!("kappa(phi) = {k}, restriction to U = {u:?} decomposes");
    println!("lambda(phi) = {l}, quotient by X = {x:?} decomposes");

    let q = phi.quotient(&x)?;
    println!(
        "phi/X has codomain F_5^{} and decomposes: {}",
        q.m(),
        is_decomposable_map(&q)
    );
    let r = phi.restrict(&u)?;
    println!(
        "phi|U has domain F_5^{} and decomposes: {}",
        r.n(),
        is_decomposable_map(&r)
    );

    // Same space, different ordered basis: an isometric map.
    let mut order = space.basis().to_vec();
    order.reverse();
    let psi = AltBilinearMap::from_space(&space, Some(&order))?;
    assert_eq!(kappa_map(&psi, &limits)?.0, k);
    assert_eq!(lambda_map(&psi, &limits)?.0, l);
    println!("reversed basis: same kappa and lambda");

    let half = Subspace::coordinate(f, 4, &[0, 1]);
    println!("phi restricted to <e1, e2> = {:?}", phi.restrict(&half)?.matrices());
    Ok(())
}
