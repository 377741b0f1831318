//! Hopf-algebra plumbing on display: axiom checking, integrals, the modular
//! function, grouplikes, duals, and quasitriangular structures.
//!
//! Run with: cargo run --example hopf_axioms

use hopf_galois::fixtures;
use hopf_galois::hopf::{check_quasitriangular, u0_hopf, MultCheckMode, QTElement};
use hopf_galois::lie::LinearForm;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = 3u16;
    let g = fixtures::example1(p);
    let u0 = g.reduced_enveloping(&LinearForm { xi: vec![0, 0] })?;
    let h = u0_hopf(&g, &u0)?;

    let rep = h.check(MultCheckMode::AllPairs);
    println!("enveloping Hopf algebra, dim {}:", h.dim());
    println!("  coassociative:        {}", rep.coassociative);
    println!("  counit law:           {}", rep.counit_law);
    println!("  coproduct is algebra map: {}", rep.delta_multiplicative);
    println!("  antipode law:         {}", rep.antipode_law);
    println!("  cocommutative:        {}", h.is_cocommutative());

    let integral = h.left_integral()?;
    println!("left integral: {:?}", integral.data);
    let alpha = h.modular_function(&integral)?;
    println!("modular function on the basis: {:?}", alpha);
    println!("unimodular: {}", alpha == h.counit);

    let grouplikes = h.grouplikes()?;
    println!("grouplikes: {}", grouplikes.len());

    // the trivial structure is triangular on a cocommutative Hopf algebra
    let r = QTElement::unit_tensor_unit(&h);
    let qt = check_quasitriangular(&h, &r);
    println!(
        "unit structure: quasitriangular {} / triangular {} / rank {}",
        qt.quasitriangular(),
        qt.triangular,
        qt.rank
    );

    // the dual is commutative but no longer cocommutative
    let dual = h.dual()?;
    println!(
        "dual: axioms pass {}, cocommutative {}",
        dual.check(MultCheckMode::AllPairs).pass(),
        dual.is_cocommutative()
    );
    Ok(())
}
