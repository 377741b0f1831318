//! Antipode orders of the transformed Hopf algebras across the built-in
//! fixtures: 2p in the non-unimodular cases, 2 in the unimodular one, and 1
//! for the zero Lie algebra.
//!
//! Run with: cargo run --example antipode_orders

use hopf_galois::endo::EndoTransform;
use hopf_galois::fixtures;
use hopf_galois::galois::GaloisContext;
use hopf_galois::hopf::{adjoint_module_algebra, u0_hopf};
use hopf_galois::lie::{LinearForm, RestrictedLie};

fn order_for(g: &RestrictedLie, xi: &LinearForm) -> Result<usize, Box<dyn std::error::Error>> {
    let zero = LinearForm { xi: vec![0; g.n] };
    let u0 = g.reduced_enveloping(&zero)?;
    let h = u0_hopf(g, &u0)?;
    let u = g.reduced_enveloping(xi)?;
    let act = adjoint_module_algebra(g, &h, &u0, &u)?;
    let ctx = GaloisContext::build(act)?;
    let tr = EndoTransform::compute(&ctx)?;
    Ok(tr.antipode_order()?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for p in [2u16, 3, 5] {
        let g = fixtures::example1(p);
        let ord = order_for(&g, &fixtures::example1_xi(p))?;
        println!("two-dim fixture, p = {p}: antipode order {ord} (expected {})", 2 * p);
    }
    let g = fixtures::example2(2, 1, 0)?;
    let ord = order_for(&g, &fixtures::example2_xi(2))?;
    println!("four-dim fixture, p = 2 (unimodular): antipode order {ord} (expected 2)");

    let g = fixtures::zero(5);
    let ord = order_for(&g, &LinearForm { xi: vec![] })?;
    println!("zero Lie algebra: antipode order {ord} (expected 1)");
    Ok(())
}
