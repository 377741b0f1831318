//! The symmetry between the acting Hopf algebra and its transform: the
//! equivariant endomorphisms of the transform recover the original action,
//! the transport of the triangular structure reverses to the trivial one,
//! and twisting the algebra by the transported structure changes nothing.
//!
//! Run with: cargo run --example roundtrip

use hopf_galois::algebra::same_span;
use hopf_galois::endo::EndoTransform;
use hopf_galois::fixtures;
use hopf_galois::galois::GaloisContext;
use hopf_galois::hopf::{adjoint_module_algebra, u0_hopf, QTElement};
use hopf_galois::lie::LinearForm;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let p = 3u16;
    let g = fixtures::example1(p);
    let zero = LinearForm { xi: vec![0, 0] };
    let u0 = g.reduced_enveloping(&zero)?;
    let h = u0_hopf(&g, &u0)?;
    let u = g.reduced_enveloping(&fixtures::example1_xi(p))?;
    let act = adjoint_module_algebra(&g, &h, &u0, &u)?;
    let ctx = GaloisContext::build(act)?;
    let tr = EndoTransform::compute(&ctx)?;

    // double commutant: End_E A is the image of H
    let end_e = tr.end_e_a();
    let lhs: Vec<Vec<u8>> = end_e.iter().map(|m| m.data.clone()).collect();
    let rhs: Vec<Vec<u8>> = ctx.act.action.iter().map(|m| m.data.clone()).collect();
    println!("End over the transform equals the image of H: {}", same_span(p, &lhs, &rhs));

    // the reverse transport takes the transported structure back to 1 (x) 1
    let back = tr.reverse_correspondence(&ctx)?;
    let unit = QTElement::unit_tensor_unit(&h);
    println!("reverse transport returns the unit structure: {}", back == unit);

    // twisting by the transported structure reproduces the multiplication
    let twisted = tr.twist_by_e_structure(&u.algebra, &tr.rtilde)?;
    let same = (0..u.dim())
        .all(|i| (0..u.dim()).all(|j| twisted.mult_row(i, j) == u.algebra.mult_row(i, j)));
    println!("twist by the transported structure is the identity: {same}");

    // rank bookkeeping
    println!(
        "rank of the transported structure: {} = dim A = {}",
        tr.rtilde.rank(),
        u.dim()
    );
    Ok(())
}
