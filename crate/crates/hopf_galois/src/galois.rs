//! The four canonical maps attached to a module-algebra action, the
//! Galois decision, the normal-basis generator, and the Miyashita-Ulbrich
//! action of the dual.
//!
//! For an action of H on A the four maps are
//!   pi    (a (x) h)(b) = a (h b)
//!   pi'   (a (x) h)(b) = (h b) a
//!   gamma (a (x) b)(h) = a (h b)
//!   gamma'(a (x) b)(h) = (h a) b
//! All four are materialised as explicit matrices and their ranks are
//! computed independently; the ranks must agree, and the action is Galois
//! exactly when they are full. The pi' and gamma matrices are kept for the
//! solves downstream (coproduct transport and the dual action).

use crate::algebra::same_span;
use crate::fp::{Fp, FpMatrix, FpVector};
use crate::hopf::{grid_legs, ModuleAlgebraAction};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GaloisError {
    #[error("the action is not Galois (rank {rank} of {full})")]
    NotGalois { rank: usize, full: usize },
    #[error("the four canonical maps disagree in rank: {0:?}")]
    RankDisagreement([usize; 4]),
    #[error("no normal basis generator found")]
    NoGenerator,
    #[error("dual-action solve is inconsistent")]
    DualSolveInconsistent,
    #[error("exchange law fails at basis element {0}")]
    ExchangeLaw(usize),
    #[error(transparent)]
    Algebra(#[from] crate::algebra::AlgebraError),
}

/// Ranks of the four canonical maps, in the order pi, pi', gamma, gamma'.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaloisRanks {
    pub pi: usize,
    pub pi_prime: usize,
    pub gamma: usize,
    pub gamma_prime: usize,
}

/// A module-algebra action together with the Galois data of its four maps.
pub struct GaloisContext {
    pub act: ModuleAlgebraAction,
    pub ranks: GaloisRanks,
    pub galois: bool,
    /// Matrix of pi' (kept for transport solves).
    pi_prime_mat: FpMatrix,
    /// Matrix of gamma (kept for dual-action solves).
    gamma_mat: FpMatrix,
}

/// The Miyashita-Ulbrich action of every dual-basis functional of H on A,
/// verified against the exchange law on all basis pairs.
pub struct MuAction {
    /// matrices[j] is the action of the j-th dual basis functional.
    pub matrices: Vec<FpMatrix>,
}

impl GaloisContext {
    pub fn build(act: ModuleAlgebraAction) -> Result<Self, GaloisError> {
        let da = act.algebra.dim;
        let dh = act.hopf.dim();
        let p = act.algebra.p;
        // all products L_i rho_j and R_i rho_j
        let lmats: Vec<FpMatrix> = (0..da).map(|i| act.algebra.left_mult_basis(i)).collect();
        let rmats: Vec<FpMatrix> = (0..da).map(|i| act.algebra.right_mult_basis(i)).collect();
        let mut p1: Vec<FpMatrix> = Vec::with_capacity(da * dh);
        let mut p2: Vec<FpMatrix> = Vec::with_capacity(da * dh);
        for i in 0..da {
            for j in 0..dh {
                p1.push(lmats[i].mul(&act.action[j]));
                p2.push(rmats[i].mul(&act.action[j]));
            }
        }
        drop(lmats);
        drop(rmats);

        let rank_pi = {
            let mut m = FpMatrix::zeros(p, da * da, da * dh);
            for i in 0..da {
                for j in 0..dh {
                    let blk = &p1[i * dh + j];
                    let col = i * dh + j;
                    for r in 0..da * da {
                        m.data[r * (da * dh) + col] = blk.data[r];
                    }
                }
            }
            m.rank()
        };
        let pi_prime_mat = {
            let mut m = FpMatrix::zeros(p, da * da, da * dh);
            for i in 0..da {
                for j in 0..dh {
                    let blk = &p2[i * dh + j];
                    let col = i * dh + j;
                    for r in 0..da * da {
                        m.data[r * (da * dh) + col] = blk.data[r];
                    }
                }
            }
            m
        };
        let rank_pi_prime = pi_prime_mat.rank();
        let gamma_mat = {
            let mut m = FpMatrix::zeros(p, da * dh, da * da);
            for i in 0..da {
                for j in 0..dh {
                    let blk = &p1[i * dh + j];
                    for s in 0..da {
                        for t in 0..da {
                            m.data[(s * dh + j) * (da * da) + (i * da + t)] = blk.get(s, t);
                        }
                    }
                }
            }
            m
        };
        let rank_gamma = gamma_mat.rank();
        let rank_gamma_prime = {
            let mut m = FpMatrix::zeros(p, da * dh, da * da);
            for t in 0..da {
                for j in 0..dh {
                    let blk = &p2[t * dh + j];
                    for s in 0..da {
                        for i in 0..da {
                            m.data[(s * dh + j) * (da * da) + (i * da + t)] = blk.get(s, i);
                        }
                    }
                }
            }
            m.rank()
        };
        let ranks = GaloisRanks {
            pi: rank_pi,
            pi_prime: rank_pi_prime,
            gamma: rank_gamma,
            gamma_prime: rank_gamma_prime,
        };
        if !(rank_pi == rank_pi_prime && rank_pi == rank_gamma && rank_pi == rank_gamma_prime) {
            return Err(GaloisError::RankDisagreement([
                rank_pi,
                rank_pi_prime,
                rank_gamma,
                rank_gamma_prime,
            ]));
        }
        let galois = da == dh && rank_pi == da * da;
        Ok(GaloisContext { act, ranks, galois, pi_prime_mat, gamma_mat })
    }

    pub fn dim_a(&self) -> usize {
        self.act.algebra.dim
    }

    pub fn dim_h(&self) -> usize {
        self.act.hopf.dim()
    }

    fn ensure_galois(&self) -> Result<(), GaloisError> {
        if self.galois {
            Ok(())
        } else {
            Err(GaloisError::NotGalois { rank: self.ranks.pi, full: self.dim_a() * self.dim_a() })
        }
    }

    /// Solve pi'(X) = T for blocks of endomorphisms T given as flattened
    /// columns; the result columns are elements of A (x) H.
    pub fn pi_prime_solve(&self, rhs: &FpMatrix) -> Result<FpMatrix, GaloisError> {
        self.ensure_galois()?;
        self.pi_prime_mat
            .solve(rhs)
            .ok_or(GaloisError::DualSolveInconsistent)
    }

    /// Element a of A for which h |-> h a is bijective H -> A. Deterministic
    /// search: basis vectors, then sums of two and three basis vectors, then
    /// seeded pseudorandom elements. Returns the generator and the bijection
    /// matrix whose j-th column is (h_j a).
    pub fn normal_basis_generator(&self) -> Result<(FpVector, FpMatrix), GaloisError> {
        self.ensure_galois()?;
        let da = self.dim_a();
        let p = self.act.algebra.p;
        let eval = |a: &[u8]| -> FpMatrix {
            let mut m = FpMatrix::zeros(p, da, da);
            for j in 0..da {
                let col = self.act.action[j].mul_vec(a);
                for s in 0..da {
                    m.set(s, j, col[s]);
                }
            }
            m
        };
        let try_vec = |v: Vec<u8>| -> Option<(FpVector, FpMatrix)> {
            let m = eval(&v);
            if m.rank() == da {
                Some((FpVector::from_vec(p, v), m))
            } else {
                None
            }
        };
        for i in 0..da {
            let mut v = vec![0u8; da];
            v[i] = 1;
            if let Some(hit) = try_vec(v) {
                return Ok(hit);
            }
        }
        for i in 0..da {
            for j in i + 1..da {
                let mut v = vec![0u8; da];
                v[i] = 1;
                v[j] = 1;
                if let Some(hit) = try_vec(v) {
                    return Ok(hit);
                }
            }
        }
        for i in 0..da {
            for j in i + 1..da {
                for k in j + 1..da {
                    let mut v = vec![0u8; da];
                    v[i] = 1;
                    v[j] = 1;
                    v[k] = 1;
                    if let Some(hit) = try_vec(v) {
                        return Ok(hit);
                    }
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
        for _ in 0..4096 {
            let v: Vec<u8> = (0..da).map(|_| rng.gen_range(0..p) as u8).collect();
            if v.iter().all(|&c| c == 0) {
                continue;
            }
            if let Some(hit) = try_vec(v) {
                return Ok(hit);
            }
        }
        Err(GaloisError::NoGenerator)
    }

    /// The Miyashita-Ulbrich action of all dual-basis functionals at once,
    /// with the exchange law b a = sum_i (h_i a)(b . h_i*) verified on all
    /// basis pairs and the invariants matched against the centre.
    pub fn mu_action_all(&self) -> Result<MuAction, GaloisError> {
        self.ensure_galois()?;
        let da = self.dim_a();
        let dh = self.dim_h();
        let p = self.act.algebra.p;
        // gamma z = 1 (x) xi_j for every dual functional xi_j
        let mut rhs = FpMatrix::zeros(p, da * dh, dh);
        for j in 0..dh {
            for s in 0..da {
                let u = self.act.algebra.unit[s];
                if u != 0 {
                    rhs.set(s * dh + j, j, u);
                }
            }
        }
        let sol = self
            .gamma_mat
            .solve(&rhs)
            .ok_or(GaloisError::DualSolveInconsistent)?;
        let f = Fp::new(p).expect("checked modulus");
        let mut matrices = Vec::with_capacity(dh);
        for j in 0..dh {
            let grid = FpMatrix { p, rows: da, cols: da, data: sol.col(j) };
            let (lefts, rights) = grid_legs(&grid);
            let mut m = FpMatrix::zeros(p, da, da);
            for (u, w) in lefts.iter().zip(rights.iter()) {
                let lu = self
                    .act
                    .algebra
                    .left_mult_matrix(&FpVector::from_vec(p, u.clone()));
                let rw = self
                    .act
                    .algebra
                    .right_mult_matrix(&FpVector::from_vec(p, w.clone()));
                let prod = lu.mul(&rw);
                for t in 0..da * da {
                    m.data[t] = f.add(m.data[t], prod.data[t]);
                }
            }
            matrices.push(m);
        }
        // exchange law on every basis element b (as an identity of operators
        // acting on a)
        for b in 0..da {
            let lb = self.act.algebra.left_mult_basis(b);
            let mut total = FpMatrix::zeros(p, da, da);
            for j in 0..dh {
                // a |-> (h_j a)(b . h_j*)
                let bj = matrices[j].col(b);
                let rbj = self
                    .act
                    .algebra
                    .right_mult_matrix(&FpVector::from_vec(p, bj));
                let term = rbj.mul(&self.act.action[j]);
                for t in 0..da * da {
                    total.data[t] = f.add(total.data[t], term.data[t]);
                }
            }
            if total != lb {
                return Err(GaloisError::ExchangeLaw(b));
            }
        }
        // right-action law: b (xi eta) = (b xi) eta, i.e. the matrix of a
        // convolution product is the composition in the reverse order
        for i in 0..dh {
            for j in 0..dh {
                // (xi_i xi_j)(b_k) is the (i, j) coefficient of the coproduct
                let mut conv = FpMatrix::zeros(p, da, da);
                for k in 0..dh {
                    let c = self
                        .act
                        .hopf
                        .delta_row(k)
                        .iter()
                        .find(|&&(a, b, _)| a as usize == i && b as usize == j)
                        .map(|&(_, _, c)| c)
                        .unwrap_or(0);
                    if c == 0 {
                        continue;
                    }
                    for t in 0..da * da {
                        conv.data[t] = f.add(conv.data[t], f.mul(c, matrices[k].data[t]));
                    }
                }
                if conv != matrices[j].mul(&matrices[i]) {
                    return Err(GaloisError::DualSolveInconsistent);
                }
            }
        }
        // invariants of the dual action = centre of A
        let unit_h = &self.act.hopf.algebra.unit;
        let mats: Vec<(FpMatrix, u8)> = matrices
            .iter()
            .enumerate()
            .map(|(j, m)| (m.clone(), unit_h[j]))
            .collect();
        let inv = crate::hopf::invariants(p, da, &mats);
        let inv_rows: Vec<Vec<u8>> = (0..inv.cols).map(|c| inv.col(c)).collect();
        let cen_rows: Vec<Vec<u8>> = self
            .act
            .algebra
            .center_basis()
            .iter()
            .map(|v| v.data.clone())
            .collect();
        if !same_span(p, &inv_rows, &cen_rows) {
            return Err(GaloisError::DualSolveInconsistent);
        }
        Ok(MuAction { matrices })
    }

    /// Action matrix of an arbitrary functional xi under the dual action.
    pub fn mu_action(&self, mu: &MuAction, xi: &[u8]) -> FpMatrix {
        let da = self.dim_a();
        let p = self.act.algebra.p;
        let f = Fp::new(p).expect("checked modulus");
        let mut m = FpMatrix::zeros(p, da, da);
        for (j, &c) in xi.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for t in 0..da * da {
                m.data[t] = f.add(m.data[t], f.mul(c, mu.matrices[j].data[t]));
            }
        }
        m
    }

    /// The three computable conditions of the simplicity criterion: central
    /// simplicity of A, bijectivity of the flipped-side map
    /// a # xi |-> a (b . xi), and triviality of the dual-action invariants.
    pub fn simplicity_criterion(&self, mu: &MuAction) -> (bool, bool, bool) {
        let da = self.dim_a();
        let dh = self.dim_h();
        let p = self.act.algebra.p;
        let central_simple = self.act.algebra.is_central_simple();
        let mut m = FpMatrix::zeros(p, da * da, da * dh);
        for i in 0..da {
            let li = self.act.algebra.left_mult_basis(i);
            for j in 0..dh {
                let blk = li.mul(&mu.matrices[j]);
                let col = i * dh + j;
                for r in 0..da * da {
                    m.data[r * (da * dh) + col] = blk.data[r];
                }
            }
        }
        let flipped_galois = da == dh && m.rank() == da * da;
        let unit_h = &self.act.hopf.algebra.unit;
        let mats: Vec<(FpMatrix, u8)> = mu
            .matrices
            .iter()
            .enumerate()
            .map(|(j, mm)| (mm.clone(), unit_h[j]))
            .collect();
        let inv = crate::hopf::invariants(p, da, &mats);
        let invariants_trivial = inv.cols == 1;
        (central_simple, flipped_galois, invariants_trivial)
    }

    /// Is the evaluation map A (x) Hom_H(V, A) -> Hom(V, A) bijective?
    /// `v_mats` are the generator action matrices on V.
    pub fn freeness_check(&self, v_mats: &[FpMatrix]) -> Result<bool, GaloisError> {
        self.ensure_galois()?;
        let da = self.dim_a();
        let p = self.act.algebra.p;
        let m = if v_mats.is_empty() { 1 } else { v_mats[0].rows };
        let gen_idx = self.generator_indices();
        let a_gens: Vec<FpMatrix> = gen_idx.iter().map(|&g| self.act.action[g].clone()).collect();
        let homs = crate::hopf::hom_modules(p, m, da, v_mats, &a_gens);
        if homs.len() != m {
            return Ok(false);
        }
        // eval: (i, s) column is vec(L_{b_i} sigma_s)
        let mut mat = FpMatrix::zeros(p, da * m, da * homs.len());
        for i in 0..da {
            let li = self.act.algebra.left_mult_basis(i);
            for (s, sig) in homs.iter().enumerate() {
                let blk = li.mul(sig);
                let col = i * homs.len() + s;
                for r in 0..da * m {
                    mat.data[r * (da * homs.len()) + col] = blk.data[r];
                }
            }
        }
        Ok(mat.rank() == da * m)
    }

    /// Indices of the H-basis elements that are Lie generators when H is an
    /// enveloping algebra on the monomial basis; falls back to all basis
    /// elements otherwise. Used wherever equivariance over generators
    /// suffices.
    pub fn generator_indices(&self) -> Vec<usize> {
        let dh = self.dim_h();
        let p = self.act.hopf.p() as usize;
        let mut n = 0usize;
        let mut t = 1usize;
        while t < dh {
            t *= p;
            n += 1;
        }
        if t != dh {
            return (0..dh).collect();
        }
        (0..n).map(|i| p.pow((n - 1 - i) as u32)).collect()
    }
}
