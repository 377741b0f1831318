//! The quantum Lie algebra carried by the coadjoint Hom-space: dual bases,
//! bracket table, braiding table, and the quadratic relations satisfied by
//! the generator images in the endomorphism algebra.
//!
//! Run with: cargo run --example quantum_lie_tables

use hopf_galois::endo::EndoTransform;
use hopf_galois::fixtures;
use hopf_galois::fp::FpMatrix;
use hopf_galois::galois::GaloisContext;
use hopf_galois::hopf::{adjoint_module_algebra, u0_hopf};
use hopf_galois::lie::{basis_vec, LinearForm};
use hopf_galois::qlie::{self, Calculus};
use hopf_galois::report::lincomb_string;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (p, a, b) = (2u16, 1u8, 0u8);
    let g = fixtures::example2(p, a, b)?;
    let xi = fixtures::example2_xi(p);
    let u = g.reduced_enveloping(&xi)?;
    let zero = LinearForm { xi: vec![0; 4] };
    let u0 = g.reduced_enveloping(&zero)?;
    let h = u0_hopf(&g, &u0)?;
    let act = adjoint_module_algebra(&g, &h, &u0, &u)?;
    let ctx = GaloisContext::build(act)?;
    let tr = EndoTransform::compute(&ctx)?;

    let v_mats: Vec<FpMatrix> = (0..4).map(|i| g.ad_matrix(&basis_vec(4, i))).collect();
    let pair = qlie::dual_pair(&ctx, &v_mats)?;
    let calc = Calculus::build(&tr, &ctx, pair)?;
    let q = calc.quantum_bracket(&tr, &ctx, &g)?;

    println!("bracket table of the quantum Lie algebra (p = {p}, a = {a}, b = {b}):");
    let m = q.dim;
    for i in 0..m {
        for j in 0..m {
            let coeffs = &q.bracket[(i * m + j) * m..(i * m + j + 1) * m];
            println!("  [tau_{i}, tau_{j}] = {}", lincomb_string(coeffs, "tau_"));
        }
    }
    println!("ordinary Lie algebra: {}", q.is_ordinary(p));

    // generator images and the quadratic relations they satisfy
    let iota = qlie::canonical_inclusion(&ctx, &u);
    let mut phi_images = Vec::new();
    for i in 0..m {
        let (c, _) = qlie::phi_op(&tr, &ctx, &calc.pair.tau[i], &iota)?;
        phi_images.push(c);
    }
    qlie::quadratic_relations(&tr, &q, &phi_images)?;
    println!("quadratic relations hold for the operator images");
    qlie::generation_checks(&tr, &ctx, &calc, &u)?;
    println!("generator images generate the endomorphism algebra and its dual");
    Ok(())
}
