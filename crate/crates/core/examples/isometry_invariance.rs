//! κ, λ and δ do not change under random isometries `A -> T^t A T`.
//!
//! ```text
//! cargo run --release --example isometry_invariance
//! ```

use blt::altspace::{delta_space, kappa_space, lambda_space, random_isometry, AltMatrixSpace};
use blt::gf::Field;
use blt::graph::Graph;
use blt::Limits;

fn main() -> blt::Result<()> {
    let f = Field::new(3)?;
    let limits = Limits::default();
    for g in [Graph::path(4), Graph::cycle(4), Graph::star(3), Graph::complete(4)] {
        let space = AltMatrixSpace::from_graph(&g, f);
        let base = (
            kappa_space(&space, &limits)?.kappa,
            lambda_space(&space, &limits)?.lambda,
            delta_space(&space),
        );
        for seed in 0..5 {
            let (image, t) = random_isometry(&space, seed);
            let got = (
                kappa_space(&image, &limits)?.kappa,
                lambda_space(&image, &limits)?.lambda,
                delta_space(&image),
            );
            assert_eq!(got, base);
            if seed == 0 {
                println!("{g:?}: (kappa, lambda, delta) = {base:?}; one T =\n{t}");
            }
        }
    }
    println!("all images agree");
    Ok(())
}
