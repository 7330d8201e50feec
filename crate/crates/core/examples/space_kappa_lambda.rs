//! The alternating matrix space of a graph and its κ, λ and δ with the
//! witnesses the solvers return.
//!
//! ```text
//! cargo run --release --example space_kappa_lambda
//! ```

use blt::altspace::{delta_space_with_witness, kappa_space, lambda_space, AltMatrixSpace};
use blt::gf::Field;
use blt::graph::{edge_connectivity, vertex_connectivity, Graph};
use blt::Limits;

fn main() -> blt::Result<()> {
    let f = Field::new(3)?;
    let limits = Limits::default();
    let g = Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])?;
    let space = AltMatrixSpace::from_graph(&g, f);
    println!("{g:?}");
    println!("A_G has dimension {} inside Λ(5)", space.dim());
    println!("{}", space.to_json_string());

    let k = kappa_space(&space, &limits)?;
    println!("kappa(A_G) = {}  (graph: {})", k.kappa, vertex_connectivity(&g).kappa);
    println!("  restriction to W = {:?} decomposes", k.w);
    println!("  {}", serde_json::to_string(&k.to_json())?);

    let l = lambda_space(&space, &limits)?;
    println!("lambda(A_G) = {}  (graph: {})", l.lambda, edge_connectivity(&g).lambda);
    println!("  {}", serde_json::to_string(&l.witness.to_json(l.lambda))?);
    println!("  the decomposable subspace has dimension {}", l.sub.dim());

    let (delta, v) = delta_space_with_witness(&space);
    println!("delta(A_G) = {delta}, attained at v = {v:?}");
    Ok(())
}
