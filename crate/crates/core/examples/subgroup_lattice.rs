//! Computes κ(P) and λ(P) from the full subgroup lattice for the small
//! graph groups and compares with the structured search.
//!
//! ```text
//! cargo run --release --example subgroup_lattice
//! ```

use blt::graph::Graph;
use blt::group::{kappa_group, lambda_group, literal_kappa_lambda, BaerGroup};
use blt::Limits;

fn main() -> blt::Result<()> {
    let limits = Limits::default();
    // The lattice search is limited to |P| <= 128.
    let cases = [
        (Graph::complete(2), 3),
        (Graph::complete(2), 5),
        (Graph::new(3, &[(0, 1)])?, 3),
    ];
    for (g, prime) in cases {
        let p = BaerGroup::from_graph(&g, prime)?;
        let lat = literal_kappa_lambda(&p, &limits)?;
        let k = kappa_group(&p, &limits)?.0;
        let l = lambda_group(&p, &limits)?.0;
        println!(
            "{g:?}: |P| = {prime}^{}, {} subgroups; lattice kappa={} lambda={} (N <= [P,P]: {}); structured kappa={k} lambda={l}",
            p.order_exp(),
            lat.subgroups,
            lat.kappa,
            lat.lambda,
            lat.lambda_derived
        );
    }
    Ok(())
}
