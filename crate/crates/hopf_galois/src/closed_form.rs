//! Closed-form dual bases, brackets, braiding/action tables and generator
//! relations for the two built-in solvable fixtures, and the verification
//! routines that compare the computed structures against them entry by
//! entry. These tables are the golden references of the test suites.

use crate::algebra::Algebra;
use crate::endo::EndoTransform;
use crate::fixtures;
use crate::fp::{Fp, FpMatrix, FpVector};
use crate::galois::GaloisContext;
use crate::lie::ReducedEnveloping;
use crate::qlie::{self, Calculus, DualBasisPair};

/// Element calculator for a reduced enveloping algebra.
pub struct Elements<'a> {
    pub u: &'a ReducedEnveloping,
}

impl<'a> Elements<'a> {
    pub fn new(u: &'a ReducedEnveloping) -> Self {
        Elements { u }
    }

    pub fn one(&self) -> FpVector {
        self.u.algebra.unit_element()
    }

    pub fn gen(&self, i: usize) -> FpVector {
        self.u.lie_embedding[i].clone()
    }

    pub fn mul(&self, x: &FpVector, y: &FpVector) -> FpVector {
        self.u.algebra.multiply(x, y).expect("element product")
    }

    pub fn inv(&self, x: &FpVector) -> FpVector {
        self.u.algebra.element_inverse(x).expect("invertible element")
    }

    /// Integer power with negative exponents through the inverse.
    pub fn pow(&self, x: &FpVector, k: i64) -> FpVector {
        let base = if k < 0 { self.inv(x) } else { x.clone() };
        let e = k.unsigned_abs();
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    pub fn scale(&self, c: i64, x: &FpVector) -> FpVector {
        let f = Fp::new(self.u.p).expect("checked modulus");
        let cc = f.reduce_i64(c);
        FpVector::from_vec(self.u.p, x.data.iter().map(|&v| f.mul(cc, v)).collect())
    }

    pub fn add(&self, x: &FpVector, y: &FpVector) -> FpVector {
        let f = Fp::new(self.u.p).expect("checked modulus");
        FpVector::from_vec(
            self.u.p,
            x.data.iter().zip(y.data.iter()).map(|(&a, &b)| f.add(a, b)).collect(),
        )
    }

    pub fn sub(&self, x: &FpVector, y: &FpVector) -> FpVector {
        let f = Fp::new(self.u.p).expect("checked modulus");
        FpVector::from_vec(
            self.u.p,
            x.data.iter().zip(y.data.iter()).map(|(&a, &b)| f.sub(a, b)).collect(),
        )
    }

    pub fn zero(&self) -> FpVector {
        FpVector::zeros(self.u.p, self.u.dim())
    }
}

/// Assemble a map V* -> A (or V -> A) from its images of the basis vectors.
pub fn map_from_columns(p: u16, cols: &[FpVector]) -> FpMatrix {
    let d = cols[0].dim();
    let mut m = FpMatrix::zeros(p, d, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (r, &v) in c.data.iter().enumerate() {
            m.set(r, j, v);
        }
    }
    m
}

/// The closed-form tables of the two-dimensional fixture: dual bases,
/// bracket table, action table and braiding table.
pub struct TwoDimTables {
    pub tau: Vec<FpMatrix>,
    pub sigma: Vec<FpMatrix>,
    /// bracket[(a*2 + b)*2 + l] of [tau_a, tau_b] in the tau basis.
    pub bracket: Vec<u8>,
    /// action[i][j] = coordinates of phi_i . tau_j in the tau basis.
    pub action: Vec<Vec<Vec<u8>>>,
    /// braiding as a 4 x 4 matrix on pair indices.
    pub braiding: FpMatrix,
}

/// Closed-form data for the two-dimensional fixture at any prime.
pub fn two_dim_tables(u: &ReducedEnveloping) -> TwoDimTables {
    let p = u.p;
    let el = Elements::new(u);
    let e0 = el.gen(0);
    let e1 = el.gen(1);
    let e1_inv = el.inv(&e1);
    // tau_0: e0* -> 1, e1* -> -e0 e1^{-1}; tau_1: e0* -> 0, e1* -> e1^{-1}
    let tau0 = map_from_columns(p, &[el.one(), el.scale(-1, &el.mul(&e0, &e1_inv))]);
    let tau1 = map_from_columns(p, &[el.zero(), e1_inv.clone()]);
    // sigma_0: e0 -> 1, e1 -> 0; sigma_1 = canonical inclusion
    let sigma0 = map_from_columns(p, &[el.one(), el.zero()]);
    let sigma1 = map_from_columns(p, &[e0.clone(), e1.clone()]);
    let f = Fp::new(p).expect("checked modulus");
    let neg1 = f.neg(1);
    // bracket: [t0,t0] = 0, [t0,t1] = -t1, [t1,t0] = t1, [t1,t1] = 0
    let mut bracket = vec![0u8; 8];
    bracket[1 * 2 + 1] = neg1;
    bracket[2 * 2 + 1] = 1;
    // action of phi_i = Phi_{tau_i sigma_1}: phi_0: t0 -> 0, t1 -> t1;
    // phi_1: t0 -> t0 - t1, t1 -> t1
    let action = vec![
        vec![vec![0, 0], vec![0, 1]],
        vec![vec![1, neg1], vec![0, 1]],
    ];
    // braiding: t0 (x) t0 -> itself; t0 (x) t1 -> t1 (x) (t0 + t1);
    // t1 (x) t0 -> (t0 - t1) (x) t1; t1 (x) t1 -> itself
    let mut braiding = FpMatrix::zeros(p, 4, 4);
    braiding.set(0, 0, 1); // 00 -> 00
    braiding.set(2, 1, 1); // 01 -> 10
    braiding.set(3, 1, 1); //       + 11
    braiding.set(1, 2, 1); // 10 -> 01
    braiding.set(3, 2, neg1); //    - 11
    braiding.set(3, 3, 1); // 11 -> 11
    TwoDimTables { tau: vec![tau0, tau1], sigma: vec![sigma0, sigma1], bracket, action, braiding }
}

/// The closed-form tables of the four-dimensional fixture.
pub struct FourDimTables {
    pub tau: Vec<FpMatrix>,
    pub sigma: Vec<FpMatrix>,
    pub bracket: Vec<u8>,
    pub c: u8,
    pub d: u8,
}

pub fn four_dim_tables(u: &ReducedEnveloping, a: u8, b: u8) -> FourDimTables {
    let p = u.p;
    let (c, d) = fixtures::example2_cd(p, a, b);
    let el = Elements::new(u);
    let e0 = el.gen(0);
    let e1 = el.gen(1);
    let e2 = el.gen(2);
    let e3 = el.gen(3);
    let ai = a as i64;
    let bi = b as i64;
    let ci = c as i64;
    let di = d as i64;
    let e3p = |k: i64| el.pow(&e3, k);
    // tau_0 columns on e0*, e1*, e2*, e3*
    let tau0 = map_from_columns(
        p,
        &[
            el.one(),
            el.scale(ai, &el.mul(&e2, &e3p(-1))),
            el.scale(-bi, &el.mul(&e1, &e3p(-1))),
            {
                let t1 = el.scale(bi, &el.mul(&e1, &e2));
                let t2 = el.scale(-ai, &el.mul(&e2, &e1));
                let t3 = el.scale(-1, &el.mul(&e0, &e3));
                el.mul(&el.add(&el.add(&t1, &t2), &t3), &e3p(-2))
            },
        ],
    );
    let tau1 = map_from_columns(
        p,
        &[
            el.zero(),
            e3p(di),
            el.zero(),
            el.scale(-1, &el.mul(&e1, &e3p(di - 1))),
        ],
    );
    let tau2 = map_from_columns(
        p,
        &[
            el.zero(),
            el.zero(),
            e3p(ci),
            el.scale(-1, &el.mul(&e2, &e3p(ci - 1))),
        ],
    );
    let tau3 = map_from_columns(p, &[el.zero(), el.zero(), el.zero(), e3p(-1)]);
    let sigma0 = map_from_columns(p, &[el.one(), el.zero(), el.zero(), el.zero()]);
    let sigma1 = map_from_columns(
        p,
        &[
            el.scale(-ai, &el.mul(&e2, &e3p(ci))),
            e3p(ci + 1),
            el.zero(),
            el.zero(),
        ],
    );
    let sigma2 = map_from_columns(
        p,
        &[
            el.scale(bi, &el.mul(&e1, &e3p(di))),
            el.zero(),
            e3p(di + 1),
            el.zero(),
        ],
    );
    let sigma3 = map_from_columns(p, &[e0.clone(), e1.clone(), e2.clone(), e3.clone()]);
    // bracket table rows [tau_a, tau_b]
    let f = Fp::new(p).expect("checked modulus");
    let m = 4usize;
    let mut bracket = vec![0u8; m * m * m];
    let mut set = |x: usize, y: usize, l: usize, v: i64| {
        bracket[(x * m + y) * m + l] = f.reduce_i64(v);
    };
    let s = (a as i64) + (b as i64);
    set(0, 0, 3, -(ai * bi));
    set(0, 1, 1, -ai);
    set(0, 2, 2, -bi);
    set(0, 3, 3, -s);
    set(1, 0, 1, ai);
    set(1, 2, 3, -1);
    set(2, 0, 2, bi);
    set(2, 1, 3, 1);
    set(3, 0, 3, s);
    FourDimTables { tau: vec![tau0, tau1, tau2, tau3], sigma: vec![sigma0, sigma1, sigma2, sigma3], bracket, c, d }
}

/// Expected generator relations, shared shape for both fixtures: an element
/// calculator on the computed endomorphism algebra.
pub struct EAlg<'a> {
    pub e: &'a Algebra,
}

impl<'a> EAlg<'a> {
    pub fn mul(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        self.e
            .multiply(
                &FpVector::from_vec(self.e.p, x.to_vec()),
                &FpVector::from_vec(self.e.p, y.to_vec()),
            )
            .expect("relation product")
            .data
    }

    pub fn pow(&self, x: &[u8], k: i64) -> Vec<u8> {
        let base = if k < 0 {
            self.e
                .element_inverse(&FpVector::from_vec(self.e.p, x.to_vec()))
                .expect("invertible element")
                .data
        } else {
            x.to_vec()
        };
        let mut acc = self.e.unit.clone();
        for _ in 0..k.unsigned_abs() {
            acc = self.mul(&acc, &base);
        }
        acc
    }

    pub fn add(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let f = Fp::new(self.e.p).expect("checked modulus");
        x.iter().zip(y.iter()).map(|(&a, &b)| f.add(a, b)).collect()
    }

    pub fn sub(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let f = Fp::new(self.e.p).expect("checked modulus");
        x.iter().zip(y.iter()).map(|(&a, &b)| f.sub(a, b)).collect()
    }

    pub fn scale(&self, c: i64, x: &[u8]) -> Vec<u8> {
        let f = Fp::new(self.e.p).expect("checked modulus");
        let cc = f.reduce_i64(c);
        x.iter().map(|&v| f.mul(cc, v)).collect()
    }

    pub fn commutator(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        self.sub(&self.mul(x, y), &self.mul(y, x))
    }
}

fn outer_grid(p: u16, x: &[u8], y: &[u8]) -> FpMatrix {
    let f = Fp::new(p).expect("checked modulus");
    let d = x.len();
    let mut g = FpMatrix::zeros(p, d, d);
    for (i, &a) in x.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in y.iter().enumerate() {
            if b != 0 {
                g.set(i, j, f.mul(a, b));
            }
        }
    }
    g
}

fn grids_sum(p: u16, grids: &[FpMatrix]) -> FpMatrix {
    let mut out = FpMatrix::zeros(p, grids[0].rows, grids[0].cols);
    let f = Fp::new(p).expect("checked modulus");
    for g in grids {
        for t in 0..out.data.len() {
            out.data[t] = f.add(out.data[t], g.data[t]);
        }
    }
    out
}

fn expect(cond: bool, what: &str, errors: &mut Vec<String>) {
    if !cond {
        errors.push(what.to_string());
    }
}

/// Verify every display of the two-dimensional fixture against the computed
/// transform: dual-basis tables, bracket, action and braiding tables, the
/// commutator relation, p-th powers, coproducts, counits and antipodes.
/// Returns the list of failed items (empty = all good).
pub fn verify_two_dim(
    tr: &EndoTransform,
    ctx: &GaloisContext,
    u: &ReducedEnveloping,
    g: &crate::lie::RestrictedLie,
) -> Result<Vec<String>, String> {
    let p = u.p;
    let mut errors = Vec::new();
    let tables = two_dim_tables(u);
    // tables are genuine equivariant maps forming dual bases
    qlie::verify_dual_pair(&u.algebra, &tables.tau, &tables.sigma)
        .map_err(|e| format!("dual-basis tables: {e}"))?;
    let pair = DualBasisPair {
        v_mats: (0..2).map(|i| g.ad_matrix(&crate::lie::basis_vec(2, i))).collect(),
        vstar_mats: qlie::dual_generator_mats(
            &(0..2).map(|i| g.ad_matrix(&crate::lie::basis_vec(2, i))).collect::<Vec<_>>(),
        ),
        sigma: tables.sigma.clone(),
        tau: tables.tau.clone(),
    };
    // the table entries must be equivariant maps; Calculus::build recomputes
    // all operators from them
    let calc = Calculus::build(tr, ctx, pair).map_err(|e| format!("calculus: {e}"))?;
    // Phi_{tau_0 sigma_0} = id and Phi_{tau_1 sigma_0} = 0
    let (c00, _) = qlie::phi_op(tr, ctx, &calc.pair.tau[0], &calc.pair.sigma[0])
        .map_err(|e| e.to_string())?;
    expect(c00 == tr.endo.identity_coords(), "Phi(tau0, sigma0) = id", &mut errors);
    let (c10, _) = qlie::phi_op(tr, ctx, &calc.pair.tau[1], &calc.pair.sigma[0])
        .map_err(|e| e.to_string())?;
    expect(c10.iter().all(|&c| c == 0), "Phi(tau1, sigma0) = 0", &mut errors);
    // bracket table
    let qb = calc
        .quantum_bracket(tr, ctx, g)
        .map_err(|e| format!("bracket: {e}"))?;
    expect(qb.bracket == tables.bracket, "bracket table", &mut errors);
    // the bracket is an ordinary Lie algebra matching the fixture
    expect(qb.is_ordinary(p), "bracket is ordinary", &mut errors);
    // explicit isomorphism with the fixture: tau_0 |-> -e_0, tau_1 |-> e_1
    {
        let f = Fp::new(p).expect("checked modulus");
        let neg = f.neg(1);
        // images of the basis under the map, as coordinate rows
        let img = [vec![neg, 0], vec![0, 1]];
        let mut iso_ok = true;
        for a in 0..2usize {
            for b in 0..2usize {
                // [img(tau_a), img(tau_b)] in the fixture
                let mut lie_side = vec![0u8; 2];
                for (i, &ci) in img[a].iter().enumerate() {
                    for (j, &cj) in img[b].iter().enumerate() {
                        let c = f.mul(ci, cj);
                        if c == 0 {
                            continue;
                        }
                        for (l, &v) in g.bracket_row(i, j).iter().enumerate() {
                            lie_side[l] = f.add(lie_side[l], f.mul(c, v));
                        }
                    }
                }
                // img([tau_a, tau_b]) from the computed constants
                let mut q_side = vec![0u8; 2];
                for l in 0..2usize {
                    let c = qb.bracket[(a * 2 + b) * 2 + l];
                    if c == 0 {
                        continue;
                    }
                    for (t, &v) in img[l].iter().enumerate() {
                        q_side[t] = f.add(q_side[t], f.mul(c, v));
                    }
                }
                if lie_side != q_side {
                    iso_ok = false;
                }
            }
        }
        expect(iso_ok, "bracket is isomorphic to the fixture", &mut errors);
    }
    // action table of phi_i = Phi_{tau_i sigma_1} on tau_j
    let phi: Vec<Vec<u8>> = (0..2)
        .map(|i| calc.phi_coords[i][1].clone())
        .collect();
    for i in 0..2 {
        let op = tr.endo.operator_of(&phi[i]);
        for j in 0..2 {
            let img = op.mul(&calc.pair.tau[j]);
            let coords = calc.tau_coords(&img);
            expect(
                coords.as_deref() == Some(&tables.action[i][j][..]),
                &format!("action table at ({i},{j})"),
                &mut errors,
            );
        }
    }
    // braiding table
    let braid = calc
        .braiding_on_dual(tr)
        .map_err(|e| format!("braiding: {e}"))?;
    expect(braid == tables.braiding, "braiding table", &mut errors);
    // generator relations in E
    let ea = EAlg { e: &tr.endo.hopf.algebra };
    let phi0 = &phi[0];
    let phi1 = &phi[1];
    // [phi0, phi1] = phi1^2 - phi1
    let lhs = ea.commutator(phi0, phi1);
    let rhs = ea.sub(&ea.mul(phi1, phi1), phi1);
    expect(lhs == rhs, "[phi0, phi1] = phi1^2 - phi1", &mut errors);
    // quadratic relation phi0 phi1 - phi1 (phi0 + phi1) = -phi1
    let lhs = ea.sub(&ea.mul(phi0, phi1), &ea.mul(phi1, &ea.add(phi0, phi1)));
    expect(lhs == ea.scale(-1, phi1), "phi0 phi1 - phi1 (phi0 + phi1) = -phi1", &mut errors);
    // p-th powers
    expect(ea.pow(phi0, p as i64) == *phi0, "phi0^p = phi0", &mut errors);
    expect(ea.pow(phi1, p as i64) == tr.endo.hopf.algebra.unit, "phi1^p = 1", &mut errors);
    // coproducts
    let id = tr.endo.identity_coords();
    let want = grids_sum(p, &[outer_grid(p, &id, phi0), outer_grid(p, phi0, phi1)]);
    expect(tr.endo.hopf.delta_of(phi0) == want, "Delta(phi0)", &mut errors);
    let want = outer_grid(p, phi1, phi1);
    expect(tr.endo.hopf.delta_of(phi1) == want, "Delta(phi1)", &mut errors);
    // counits
    expect(tr.endo.hopf.eps_of(phi0) == 0, "eps(phi0) = 0", &mut errors);
    expect(tr.endo.hopf.eps_of(phi1) == 1, "eps(phi1) = 1", &mut errors);
    // antipodes: S(phi0) = -phi0 phi1^{-1}, S(phi1) = phi1^{-1}
    let phi1_inv = ea.pow(phi1, -1);
    expect(
        tr.endo.hopf.antipode_of(phi0) == ea.scale(-1, &ea.mul(phi0, &phi1_inv)),
        "S(phi0) = -phi0 phi1^{-1}",
        &mut errors,
    );
    expect(tr.endo.hopf.antipode_of(phi1) == phi1_inv, "S(phi1) = phi1^{-1}", &mut errors);
    Ok(errors)
}

/// Verify the listed relations of the four-dimensional fixture: dual-basis
/// tables, bracket table, commutators, p-th powers, coproducts, counits and
/// antipode formulas with the derived exponents c, d.
pub fn verify_four_dim(
    tr: &EndoTransform,
    ctx: &GaloisContext,
    u: &ReducedEnveloping,
    g: &crate::lie::RestrictedLie,
    a: u8,
    b: u8,
) -> Result<Vec<String>, String> {
    let p = u.p;
    let mut errors = Vec::new();
    let tables = four_dim_tables(u, a, b);
    qlie::verify_dual_pair(&u.algebra, &tables.tau, &tables.sigma)
        .map_err(|e| format!("dual-basis tables: {e}"))?;
    let v_mats: Vec<FpMatrix> =
        (0..4).map(|i| g.ad_matrix(&crate::lie::basis_vec(4, i))).collect();
    let pair = DualBasisPair {
        vstar_mats: qlie::dual_generator_mats(&v_mats),
        v_mats,
        sigma: tables.sigma.clone(),
        tau: tables.tau.clone(),
    };
    let calc = Calculus::build(tr, ctx, pair).map_err(|e| format!("calculus: {e}"))?;
    let qb = calc
        .quantum_bracket(tr, ctx, g)
        .map_err(|e| format!("bracket: {e}"))?;
    expect(qb.bracket == tables.bracket, "bracket table", &mut errors);
    // the bracket is not anticommutative in the ordinary sense: the square
    // of tau_0 is -ab tau_3, nonzero whenever ab != 0
    let f = Fp::new(p).expect("checked modulus");
    if f.mul(a, b) != 0 {
        expect(!qb.is_ordinary(p), "bracket is genuinely quantum", &mut errors);
    }
    // generators phi_i = Phi_{tau_i sigma_3}
    let phi: Vec<Vec<u8>> = (0..4).map(|i| calc.phi_coords[i][3].clone()).collect();
    let ea = EAlg { e: &tr.endo.hopf.algebra };
    let (c, d) = (tables.c as i64, tables.d as i64);
    let (ai, bi) = (a as i64, b as i64);
    let s = ai + bi;
    let one = tr.endo.hopf.algebra.unit.clone();
    let two_phi3_minus_1 = ea.sub(&ea.scale(2, &phi[3]), &one);
    // commutators
    let lhs = ea.commutator(&phi[0], &phi[1]);
    let rhs = ea.scale(ai, &ea.mul(&phi[1], &two_phi3_minus_1));
    expect(lhs == rhs, "[phi0, phi1] = a phi1 (2 phi3 - 1)", &mut errors);
    let lhs = ea.commutator(&phi[0], &phi[2]);
    let rhs = ea.scale(bi, &ea.mul(&phi[2], &two_phi3_minus_1));
    expect(lhs == rhs, "[phi0, phi2] = b phi2 (2 phi3 - 1)", &mut errors);
    let lhs = ea.commutator(&phi[0], &phi[3]);
    let rhs = ea.scale(s, &ea.sub(&ea.mul(&phi[3], &phi[3]), &phi[3]));
    expect(lhs == rhs, "[phi0, phi3] = (a+b)(phi3^2 - phi3)", &mut errors);
    let lhs = ea.commutator(&phi[1], &phi[2]);
    let rhs = ea.sub(&ea.mul(&phi[3], &phi[3]), &phi[3]);
    expect(lhs == rhs, "[phi1, phi2] = phi3^2 - phi3", &mut errors);
    expect(
        ea.commutator(&phi[1], &phi[3]).iter().all(|&v| v == 0),
        "[phi1, phi3] = 0",
        &mut errors,
    );
    expect(
        ea.commutator(&phi[2], &phi[3]).iter().all(|&v| v == 0),
        "[phi2, phi3] = 0",
        &mut errors,
    );
    // p-th powers
    expect(ea.pow(&phi[0], p as i64) == phi[0], "phi0^p = phi0", &mut errors);
    expect(ea.pow(&phi[1], p as i64).iter().all(|&v| v == 0), "phi1^p = 0", &mut errors);
    expect(ea.pow(&phi[2], p as i64).iter().all(|&v| v == 0), "phi2^p = 0", &mut errors);
    expect(ea.pow(&phi[3], p as i64) == one, "phi3^p = 1", &mut errors);
    // coproducts
    let id = tr.endo.identity_coords();
    let phi3c = ea.pow(&phi[3], c);
    let phi3d = ea.pow(&phi[3], d);
    let want = grids_sum(
        p,
        &[
            outer_grid(p, &id, &phi[0]),
            outer_grid(p, &ea.scale(-ai, &ea.mul(&phi[2], &phi3c)), &phi[1]),
            outer_grid(p, &ea.scale(bi, &ea.mul(&phi[1], &phi3d)), &phi[2]),
            outer_grid(p, &phi[0], &phi[3]),
        ],
    );
    expect(tr.endo.hopf.delta_of(&phi[0]) == want, "Delta(phi0)", &mut errors);
    let want = grids_sum(
        p,
        &[
            outer_grid(p, &ea.pow(&phi[3], -d), &phi[1]),
            outer_grid(p, &phi[1], &phi[3]),
        ],
    );
    expect(tr.endo.hopf.delta_of(&phi[1]) == want, "Delta(phi1)", &mut errors);
    let want = grids_sum(
        p,
        &[
            outer_grid(p, &ea.pow(&phi[3], -c), &phi[2]),
            outer_grid(p, &phi[2], &phi[3]),
        ],
    );
    expect(tr.endo.hopf.delta_of(&phi[2]) == want, "Delta(phi2)", &mut errors);
    let want = outer_grid(p, &phi[3], &phi[3]);
    expect(tr.endo.hopf.delta_of(&phi[3]) == want, "Delta(phi3)", &mut errors);
    // counits
    for i in 0..3 {
        expect(tr.endo.hopf.eps_of(&phi[i]) == 0, &format!("eps(phi{i}) = 0"), &mut errors);
    }
    expect(tr.endo.hopf.eps_of(&phi[3]) == 1, "eps(phi3) = 1", &mut errors);
    // antipodes
    let want = {
        let t1 = ea.scale(bi, &ea.mul(&phi[1], &phi[2]));
        let t2 = ea.scale(-ai, &ea.mul(&phi[2], &phi[1]));
        let t3 = ea.scale(-1, &ea.mul(&phi[0], &phi[3]));
        ea.mul(&ea.add(&ea.add(&t1, &t2), &t3), &ea.pow(&phi[3], -2))
    };
    expect(
        tr.endo.hopf.antipode_of(&phi[0]) == want,
        "S(phi0) = (b phi1 phi2 - a phi2 phi1 - phi0 phi3) phi3^{-2}",
        &mut errors,
    );
    let want = ea.scale(-1, &ea.mul(&phi[1], &ea.pow(&phi[3], d - 1)));
    expect(tr.endo.hopf.antipode_of(&phi[1]) == want, "S(phi1) = -phi1 phi3^{d-1}", &mut errors);
    let want = ea.scale(-1, &ea.mul(&phi[2], &ea.pow(&phi[3], c - 1)));
    expect(tr.endo.hopf.antipode_of(&phi[2]) == want, "S(phi2) = -phi2 phi3^{c-1}", &mut errors);
    let want = ea.pow(&phi[3], -1);
    expect(tr.endo.hopf.antipode_of(&phi[3]) == want, "S(phi3) = phi3^{-1}", &mut errors);
    Ok(errors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{adjoint_module_algebra, u0_hopf};
    use crate::lie::LinearForm;

    fn transform_for(
        g: &crate::lie::RestrictedLie,
        xi: &LinearForm,
    ) -> (ReducedEnveloping, GaloisContext, EndoTransform) {
        let zero = LinearForm { xi: vec![0; g.n] };
        let u0 = g.reduced_enveloping(&zero).unwrap();
        let h = u0_hopf(g, &u0).unwrap();
        let u = g.reduced_enveloping(xi).unwrap();
        let act = adjoint_module_algebra(g, &h, &u0, &u).unwrap();
        let ctx = GaloisContext::build(act).unwrap();
        let tr = EndoTransform::compute(&ctx).unwrap();
        (u, ctx, tr)
    }

    #[test]
    fn two_dim_golden_p2_p3() {
        for p in [2u16, 3] {
            let g = fixtures::example1(p);
            let (u, ctx, tr) = transform_for(&g, &fixtures::example1_xi(p));
            let errors = verify_two_dim(&tr, &ctx, &u, &g).unwrap();
            assert!(errors.is_empty(), "p={p}: {errors:?}");
        }
    }

    #[test]
    fn two_dim_golden_p5() {
        let p = 5u16;
        let g = fixtures::example1(p);
        let (u, ctx, tr) = transform_for(&g, &fixtures::example1_xi(p));
        let errors = verify_two_dim(&tr, &ctx, &u, &g).unwrap();
        assert!(errors.is_empty(), "p={p}: {errors:?}");
    }

    #[test]
    fn four_dim_golden_p2() {
        let (p, a, b) = (2u16, 1u8, 0u8);
        let g = fixtures::example2(p, a, b).unwrap();
        let (u, ctx, tr) = transform_for(&g, &fixtures::example2_xi(p));
        let errors = verify_four_dim(&tr, &ctx, &u, &g, a, b).unwrap();
        assert!(errors.is_empty(), "{errors:?}");
    }
}
