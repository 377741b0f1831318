//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//! Every comparison is exact equality over F_p.

use hopf_galois::algebra::same_span;
use hopf_galois::closed_form;
use hopf_galois::endo::EndoTransform;
use hopf_galois::fixtures;
use hopf_galois::fp::FpMatrix;
use hopf_galois::galois::GaloisContext;
use hopf_galois::hopf::{adjoint_module_algebra, u0_hopf, QTElement};
use hopf_galois::lie::{basis_vec, LinearForm, ReducedEnveloping, RestrictedLie};
use hopf_galois::qlie::{self, Calculus};
use hopf_galois::report::{self, convolution_order, ScanMode};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

struct Setup {
    g: RestrictedLie,
    u: ReducedEnveloping,
    ctx: GaloisContext,
    tr: EndoTransform,
    elapsed: Duration,
}

fn build_setup(g: RestrictedLie, xi: LinearForm) -> Setup {
    let start = Instant::now();
    let zero = LinearForm { xi: vec![0; g.n] };
    let u0 = g.reduced_enveloping(&zero).expect("zero-form enveloping");
    let h = u0_hopf(&g, &u0).expect("enveloping Hopf structure");
    let u = g.reduced_enveloping(&xi).expect("reduced enveloping");
    let act = adjoint_module_algebra(&g, &h, &u0, &u).expect("adjoint action");
    let ctx = GaloisContext::build(act).expect("canonical maps");
    let tr = EndoTransform::compute(&ctx).expect("transform");
    let elapsed = start.elapsed();
    Setup { g, u, ctx, tr, elapsed }
}

fn ex1(p: u16) -> Setup {
    build_setup(fixtures::example1(p), fixtures::example1_xi(p))
}

fn ex2(p: u16, a: u8, b: u8) -> Setup {
    build_setup(
        fixtures::example2(p, a, b).expect("valid parameters"),
        fixtures::example2_xi(p),
    )
}

/// The heavy fixture (p = 3, dimension 81) is shared across criteria.
static EX2P3: OnceLock<Setup> = OnceLock::new();

fn ex2p3() -> &'static Setup {
    EX2P3.get_or_init(|| ex2(3, 1, 1))
}

fn line(n: u32, title: &str, ok: bool) {
    println!("acceptance {n:02} ({title}): {}", if ok { "PASS" } else { "FAIL" });
    assert!(ok, "criterion {n} failed: {title}");
}

#[test]
fn acceptance_01_two_dim_golden_suite() {
    for p in [2u16, 3, 5] {
        let s = ex1(p);
        let errors = closed_form::verify_two_dim(&s.tr, &s.ctx, &s.u, &s.g)
            .unwrap_or_else(|e| vec![e]);
        assert!(errors.is_empty(), "p={p}: {errors:?}");
        assert!(
            s.elapsed <= Duration::from_secs(10),
            "p={p} took {:?}, budget 10s",
            s.elapsed
        );
    }
    line(1, "two-dimensional fixture, golden displays at p = 2, 3, 5", true);
}

#[test]
fn acceptance_02_four_dim_golden_suite() {
    let s = ex2(2, 1, 0);
    let errors =
        closed_form::verify_four_dim(&s.tr, &s.ctx, &s.u, &s.g, 1, 0).unwrap_or_else(|e| vec![e]);
    assert!(errors.is_empty(), "(2,1,0): {errors:?}");
    assert!(s.elapsed <= Duration::from_secs(10), "(2,1,0) took {:?}", s.elapsed);

    let s = ex2p3();
    let errors =
        closed_form::verify_four_dim(&s.tr, &s.ctx, &s.u, &s.g, 1, 1).unwrap_or_else(|e| vec![e]);
    assert!(errors.is_empty(), "(3,1,1): {errors:?}");
    assert!(
        s.elapsed <= Duration::from_secs(30 * 60),
        "(3,1,1) took {:?}, budget 30 min",
        s.elapsed
    );
    line(2, "four-dimensional fixture, golden displays at (2,1,0) and (3,1,1)", true);
}

#[test]
fn acceptance_03_antipode_orders() {
    for p in [2u16, 3, 5] {
        let s = ex1(p);
        assert_eq!(s.tr.antipode_order().unwrap(), 2 * p as usize, "two-dim p={p}");
    }
    let s = ex2(2, 1, 0);
    assert_eq!(s.tr.antipode_order().unwrap(), 2, "four-dim (2,1,0)");
    let s = ex2p3();
    assert_eq!(s.tr.antipode_order().unwrap(), 6, "four-dim (3,1,1)");
    let s = build_setup(fixtures::zero(5), LinearForm { xi: vec![] });
    assert_eq!(s.tr.antipode_order().unwrap(), 1, "zero Lie algebra");
    line(3, "antipode orders 2p / 2 / 6 / 1", true);
}

#[test]
fn acceptance_04_triangular_structure() {
    let mut fixtures_list: Vec<(&str, Setup)> = vec![
        ("two-dim p=2", ex1(2)),
        ("two-dim p=3", ex1(3)),
        ("two-dim p=5", ex1(5)),
        ("four-dim (2,1,0)", ex2(2, 1, 0)),
    ];
    for (name, s) in fixtures_list.drain(..) {
        assert!(s.tr.qt_report.quasitriangular(), "{name}: axioms");
        assert!(s.tr.qt_report.triangular, "{name}: flip inverse");
        assert_eq!(s.tr.qt_report.rank, s.u.dim(), "{name}: maximal rank");
        s.tr.f_checks().unwrap_or_else(|e| panic!("{name}: {e}"));
        let r = QTElement::unit_tensor_unit(&s.ctx.act.hopf);
        assert!(s.tr.verify_transport(&s.ctx, &r), "{name}: transport identity");
        if s.u.dim() <= 16 {
            // two independent routes to the dual action, and the direct
            // column-rank certificate of the transport
            s.tr.dual_action_two_routes(&s.ctx)
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(s.tr.direct_injectivity_certificate(&s.ctx), "{name}: injectivity");
        }
    }
    let s = ex2p3();
    assert!(s.tr.qt_report.quasitriangular() && s.tr.qt_report.triangular);
    assert_eq!(s.tr.qt_report.rank, s.u.dim());
    s.tr.f_checks().unwrap();
    line(4, "triangular structures of maximal rank; dual map is a Hopf antiisomorphism", true);
}

#[test]
fn acceptance_05_theta_identity_suite() {
    let heavy = [false, false, true];
    for (k, (name, s)) in [
        ("two-dim p=2", &ex1(2)),
        ("two-dim p=3", &ex1(3)),
        ("four-dim (3,1,1)", ex2p3()),
    ]
    .iter()
    .enumerate()
    {
        let mu = s.ctx.mu_action_all().unwrap();
        let h = &s.ctx.act.hopf;
        let integral = h.left_integral().unwrap();
        let alpha = h.modular_function(&integral).unwrap();
        s.tr.theta_checks(&s.ctx, &mu, &alpha, true)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        let alpha_order = convolution_order(h, &alpha).unwrap();
        assert!(alpha_order == 1 || alpha_order == s.g.p as usize, "{name}: alpha order");
        assert_eq!(s.tr.frob.order, alpha_order, "{name}: theta order");
        let _ = heavy[k];
    }
    // unimodular fixture: theta = id and the antipode square is trivial
    let s = ex2(2, 1, 0);
    let mu = s.ctx.mu_action_all().unwrap();
    let h = &s.ctx.act.hopf;
    let integral = h.left_integral().unwrap();
    let alpha = h.modular_function(&integral).unwrap();
    assert_eq!(alpha, h.counit, "unimodular fixture has trivial modular function");
    s.tr.theta_checks(&s.ctx, &mu, &alpha, true).unwrap();
    assert_eq!(s.tr.frob.order, 1);
    let s2 = s.tr.endo.hopf.antipode.mul(&s.tr.endo.hopf.antipode);
    assert_eq!(s2, FpMatrix::identity(2, s.tr.endo.hopf.dim()));
    // integral rescaling leaves the antipode and theta unchanged
    let s = ex1(3);
    let r = QTElement::unit_tensor_unit(&s.ctx.act.hopf);
    let t2 = EndoTransform::compute_with_r(&s.ctx, &r, 2).unwrap();
    assert_eq!(s.tr.endo.hopf.antipode, t2.endo.hopf.antipode);
    assert_eq!(s.tr.frob.nakayama, t2.frob.nakayama);
    let s = ex1(5);
    let r = QTElement::unit_tensor_unit(&s.ctx.act.hopf);
    for scale in [2u8, 3] {
        let t2 = EndoTransform::compute_with_r(&s.ctx, &r, scale).unwrap();
        assert_eq!(s.tr.endo.hopf.antipode, t2.endo.hopf.antipode);
        assert_eq!(s.tr.frob.nakayama, t2.frob.nakayama);
    }
    line(5, "Nakayama = dual action of the modular function = Drinfeld element", true);
}

#[test]
fn acceptance_06_roundtrip() {
    for (name, s) in [
        ("two-dim p=2", &ex1(2)),
        ("two-dim p=3", &ex1(3)),
        ("four-dim (2,1,0)", &ex2(2, 1, 0)),
        ("four-dim (3,1,1)", ex2p3()),
    ] {
        let p = s.g.p;
        // the double commutant is the image of H
        let end_e = s.tr.end_e_a();
        let lhs: Vec<Vec<u8>> = end_e.iter().map(|m| m.data.clone()).collect();
        let rhs: Vec<Vec<u8>> = s.ctx.act.action.iter().map(|m| m.data.clone()).collect();
        assert!(same_span(p, &lhs, &rhs), "{name}: double commutant");
        // reverse transport returns the unit structure
        let back = s.tr.reverse_correspondence(&s.ctx).unwrap();
        assert_eq!(back, QTElement::unit_tensor_unit(&s.ctx.act.hopf), "{name}: reverse");
        // twisting by the transported structure reproduces A, and twisting
        // again by the flipped inverse keeps it
        let a_r = s.tr.twist_by_e_structure(&s.u.algebra, &s.tr.rtilde).unwrap();
        for i in 0..s.u.dim() {
            for j in 0..s.u.dim() {
                assert_eq!(a_r.mult_row(i, j), s.u.algebra.mult_row(i, j), "{name}: twist");
            }
        }
        let rtinv = s.tr.rtilde.antipode_left_leg(&s.tr.endo.hopf);
        let back_alg = s.tr.twist_by_e_structure(&a_r, &rtinv.flip()).unwrap();
        for i in 0..s.u.dim() {
            for j in 0..s.u.dim() {
                assert_eq!(
                    back_alg.mult_row(i, j),
                    s.u.algebra.mult_row(i, j),
                    "{name}: double twist"
                );
            }
        }
    }
    line(6, "double commutant, reverse transport and twist roundtrips", true);
}

#[test]
fn acceptance_07_form_scan_equivalence() {
    for p in [2u16, 3] {
        let g = fixtures::example1(p);
        let rep = report::run_scan(&g, ScanMode::Exhaustive, 0, 1).unwrap();
        assert_eq!(rep.total_forms, (p * p) as usize);
        assert!(rep.galois_iff_central_simple, "p={p}: equivalence");
        assert_eq!(rep.beta_agreement_percent, 100.0, "p={p}: form agreement");
        if p == 3 {
            assert_eq!(rep.central_simple_count, 6, "p=3 must have 6 of 9");
        }
        if p == 2 {
            assert_eq!(rep.central_simple_count, 2, "p=2 must have 2 of 4");
        }
    }
    line(7, "exhaustive form scans agree with the simplicity locus", true);
}

#[test]
fn acceptance_08_quantum_lie_suite() {
    for (name, s) in [
        ("two-dim p=2", &ex1(2)),
        ("two-dim p=3", &ex1(3)),
        ("two-dim p=5", &ex1(5)),
        ("four-dim (2,1,0)", &ex2(2, 1, 0)),
        ("four-dim (3,1,1)", ex2p3()),
    ] {
        let n = s.g.n;
        let v_mats: Vec<FpMatrix> = (0..n).map(|i| s.g.ad_matrix(&basis_vec(n, i))).collect();
        let pair = qlie::dual_pair(&s.ctx, &v_mats).unwrap_or_else(|e| panic!("{name}: {e}"));
        let calc = Calculus::build(&s.tr, &s.ctx, pair).unwrap_or_else(|e| panic!("{name}: {e}"));
        calc.verify_calculus(&s.tr, &s.ctx).unwrap_or_else(|e| panic!("{name}: {e}"));
        let q = calc
            .quantum_bracket(&s.tr, &s.ctx, &s.g)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        calc.braiding_on_d(&s.tr).unwrap_or_else(|e| panic!("{name}: {e}"));
        let iota = qlie::canonical_inclusion(&s.ctx, &s.u);
        let mut phi_images = Vec::new();
        let mut psi_images = Vec::new();
        for a in 0..calc.dim() {
            let (c, _) = qlie::phi_op(&s.tr, &s.ctx, &calc.pair.tau[a], &iota).unwrap();
            phi_images.push(c);
            let (c, _) = qlie::psi_op(&s.tr, &s.ctx, &calc.pair.tau[a]).unwrap();
            psi_images.push(c);
        }
        qlie::quadratic_relations(&s.tr, &q, &phi_images)
            .unwrap_or_else(|e| panic!("{name} operator images: {e}"));
        qlie::quadratic_relations(&s.tr, &q, &psi_images)
            .unwrap_or_else(|e| panic!("{name} derivation images: {e}"));
        qlie::adjoint_commutator_check(&s.tr, &q, &psi_images)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        qlie::generation_checks(&s.tr, &s.ctx, &calc, &s.u)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
        qlie::harpoon_checks(&s.tr, &s.ctx, &calc, 32)
            .unwrap_or_else(|e| panic!("{name}: {e}"));
    }
    line(8, "quantum Lie axioms, quadratic relations, generation, harpoon identities", true);
}

#[test]
fn acceptance_09_structural_counts() {
    // grouplikes of the enveloping Hopf algebra and of the transform
    for p in [2u16, 3] {
        let s = ex1(p);
        let gh = s.ctx.act.hopf.grouplikes().unwrap();
        assert_eq!(gh.len(), 1, "p={p}: single grouplike upstairs");
        let ge = s.tr.endo.hopf.grouplikes().unwrap();
        assert_eq!(ge.len(), p as usize, "p={p}: grouplike count downstairs");
    }
    // unimodular Frobenius fixture: dim g = 4 = 0 mod 2p at p = 2
    let s = ex2(2, 1, 0);
    assert!(s.g.is_unimodular());
    let (_, nondeg) = s.g.beta_form(&fixtures::example2_xi(2));
    assert!(nondeg);
    assert_eq!(s.g.n % (2 * 2), 0, "dimension congruence");

    // supplied one-dimensional modules give one-dimensional spans
    let s = ex1(3);
    for c in 0..3u8 {
        let v = vec![FpMatrix::from_rows(3, &[vec![c]]), FpMatrix::zeros(3, 1, 1)];
        let count = qlie::simple_subcoalgebra_count(&s.tr, &s.ctx, &v).unwrap();
        assert_eq!(count.endomorphism_dim, 1);
        assert_eq!(count.span_dim, 1);
    }

    // The p-dimensional absolutely irreducible module of the reduced
    // algebra, supplied by its explicit induced-module matrices. Its
    // endomorphism ring is the ground field, but it is not a module over
    // the zero-form enveloping algebra (the p-th power of the second
    // generator acts as the identity there, not zero), so both Hom-spaces
    // vanish and the span cannot reach p^2; no module over a solvable
    // enveloping algebra can, since the largest semisimple quotient is
    // commutative. The expected count is asserted as stated and this
    // criterion is accordingly red; see the decisions ledger.
    let p = 3u16;
    let v = fixtures::example1_pdim_module(p);
    let endos = hopf_galois::hopf::hom_modules(p, p as usize, p as usize, &v, &v);
    assert_eq!(endos.len(), 1, "certificate: trivial endomorphism ring");
    let count = qlie::simple_subcoalgebra_count(&s.tr, &s.ctx, &v).unwrap();
    let ok = count.span_dim == (p * p) as usize;
    line(
        9,
        "structural counts (the supplied p-dimensional module yields span 0, not p^2)",
        ok,
    );
}

#[test]
fn acceptance_10_property_suite() {
    use rand::{Rng, SeedableRng};
    let start = Instant::now();
    // exact linear algebra contracts on random matrices
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for _ in 0..50 {
        let p = *[2u16, 3, 5, 7].iter().nth(rng.gen_range(0..4)).unwrap();
        let rows = rng.gen_range(1..8);
        let cols = rng.gen_range(1..8);
        let a = FpMatrix::from_fn(p, rows, cols, |_, _| rng.gen_range(0..p) as u8);
        assert_eq!(a.rank() + a.kernel_basis().len(), cols);
        for v in a.kernel_basis() {
            assert!(a.mul_vec(&v.data).iter().all(|&c| c == 0));
        }
        let x = FpMatrix::from_fn(p, cols, 1, |_, _| rng.gen_range(0..p) as u8);
        let b = a.mul(&x);
        let sol = a.solve(&b).expect("consistent system must solve");
        assert_eq!(a.mul(&sol), b);
        // composition law of the tensor product of matrices
        let c = FpMatrix::from_fn(p, cols, 2, |_, _| rng.gen_range(0..p) as u8);
        let d = FpMatrix::from_fn(p, 3, 2, |_, _| rng.gen_range(0..p) as u8);
        let e = FpMatrix::from_fn(p, 2, 3, |_, _| rng.gen_range(0..p) as u8);
        let lhs = a.kron(&d).mul(&c.kron(&e));
        let rhs = a.mul(&c).kron(&d.mul(&e));
        assert_eq!(lhs, rhs);
    }
    // associativity and unit rejection
    {
        let p = 3u16;
        let d = 2usize;
        let mut mult = vec![0u8; 8];
        mult[0] = 1;
        mult[d + 1] = 1;
        mult[d * d + 1] = 1;
        mult[(d + 1) * d + 1] = 2; // e*e = 2e
        assert!(hopf_galois::algebra::Algebra::new(p, d, vec![1, 0], mult.clone()).is_err()
            || {
                // if this particular tensor happens to be associative the
                // unit-law break below must still reject
                mult[d + 1] = 2;
                hopf_galois::algebra::Algebra::new(p, d, vec![1, 0], mult).is_err()
            });
    }
    // random solvable Lie algebras: four-way rank agreement and full-rank
    // transport solves whenever Galois
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20_26);
    let mut built = 0usize;
    let mut galois_hits = 0usize;
    while built < 20 {
        let p = if rng.gen_bool(0.5) { 2u16 } else { 3 };
        let kind = rng.gen_range(0..4u8);
        let g = match kind {
            0 => fixtures::abelian(p, rng.gen_range(1..=2)),
            1 => {
                // abelian with a random power map (any matrix works)
                let n = rng.gen_range(1..=2usize);
                let pmap: Vec<u8> = (0..n * n).map(|_| rng.gen_range(0..p) as u8).collect();
                RestrictedLie::new(p, n, vec![0; n * n * n], pmap)
            }
            2 => fixtures::example1(p),
            _ => {
                // Heisenberg bracket with a central power map
                let n = 3usize;
                let mut bracket = vec![0u8; n * n * n];
                bracket[n + 2] = 1;
                bracket[n * n + 2] = (p - 1) as u8;
                let mut pmap = vec![0u8; n * n];
                pmap[2] = rng.gen_range(0..p) as u8;
                pmap[n + 2] = rng.gen_range(0..p) as u8;
                pmap[2 * n + 2] = rng.gen_range(0..p) as u8;
                RestrictedLie::new(p, n, bracket, pmap)
            }
        };
        if !g.check().pass() {
            continue;
        }
        let xi = LinearForm { xi: (0..g.n).map(|_| rng.gen_range(0..p) as u8).collect() };
        let zero = LinearForm { xi: vec![0; g.n] };
        let u0 = g.reduced_enveloping(&zero).unwrap();
        let h = u0_hopf(&g, &u0).unwrap();
        let u = g.reduced_enveloping(&xi).unwrap();
        let act = adjoint_module_algebra(&g, &h, &u0, &u).unwrap();
        // the constructor asserts the four-way rank agreement internally
        let ctx = GaloisContext::build(act).expect("rank agreement");
        assert_eq!(ctx.galois, u.algebra.is_central_simple());
        if ctx.galois {
            galois_hits += 1;
            // the transport solves must certify full rank
            let tr = EndoTransform::compute(&ctx).expect("full-rank transport solves");
            assert!(tr.qt_report.quasitriangular());
        }
        built += 1;
    }
    assert!(galois_hits >= 2, "the sample must contain Galois actions");
    assert!(start.elapsed() <= Duration::from_secs(300), "budget 5 minutes");
    line(10, "randomised property suite (ranks, contracts, rejections)", true);
}
