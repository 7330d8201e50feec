//! The Baer group of K_2 (the Heisenberg group of order p^3) and of two
//! disjoint edges: arithmetic, literal sanity checks, central
//! decompositions and the group-level κ, λ, δ.
//!
//! ```text
//! cargo run --release --example baer_group
//! ```

use blt::graph::Graph;
use blt::group::{
    center, central_decomposition, delta_group, kappa_group, lambda_group, sanity_check, BaerGroup,
    CentralDecomposition, GroupElement, Section,
};
use blt::Limits;

fn main() -> blt::Result<()> {
    let limits = Limits::default();
    let h = BaerGroup::from_graph(&Graph::complete(2), 3)?;
    println!("P(K_2): |P| = {:?}, n = {}, m = {}", h.order(), h.n(), h.m());

    let a = GroupElement::parse("1,0;0", h.field(), 2, 1)?;
    let b = GroupElement::parse("0,1;0", h.field(), 2, 1)?;
    println!("a = {a}, b = {b}");
    println!("a b = {}", h.multiply(&a, &b)?);
    println!("b a = {}", h.multiply(&b, &a)?);
    println!("[a, b] = {}", h.commutator(&a, &b)?);
    println!("a^3 = {}", h.power(&a, 3)?);
    println!("center has order 3^{}", center(&h).order_exp(&h));

    let report = sanity_check(&h, &limits, 81, 10_000, 7)?;
    println!("sanity: {report:?}");
    assert!(report.holds(&h));

    println!(
        "kappa = {}, lambda = {}, delta = {}",
        kappa_group(&h, &limits)?.0,
        lambda_group(&h, &limits)?.0,
        delta_group(&h)
    );

    let two = BaerGroup::from_graph(&Graph::new(4, &[(0, 1), (2, 3)])?, 3)?;
    match central_decomposition(&two, &Section::whole(&two)) {
        CentralDecomposition::Split(j, k) => println!("P(2K_2) = J K with\n  J = {j:?}\n  K = {k:?}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
