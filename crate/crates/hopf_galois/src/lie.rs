//! Restricted Lie algebras over F_p and their reduced enveloping algebras.
//!
//! A restricted Lie algebra is given by a bracket tensor and a [p]-map on
//! basis elements. `check` verifies antisymmetry, the Jacobi identity,
//! compatibility ad(x^{[p]}) = (ad x)^p, and Jacobson additivity of the
//! [p]-map (exhaustively below a size gate, sampled above it).
//!
//! `reduced_enveloping` builds the p^n-dimensional algebra U_xi(g) on the
//! monomial basis e_1^{a_1} ... e_n^{a_n}, 0 <= a_i < p, by straightening:
//! a generator is commuted past smaller-indexed generators with
//! e_i e_j = e_j e_i + [e_i, e_j] and p-th powers are reduced through
//! e_i^p = e_i^{[p]} + xi(e_i)^p. The resulting structure tensor is
//! re-verified for associativity by the algebra constructor.

use crate::algebra::{Algebra, AlgebraError};
use crate::fp::{Fp, FpMatrix, FpVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Size gate (number of pairs) below which identity checks run exhaustively.
const EXHAUSTIVE_PAIR_GATE: u64 = 1 << 20;
const SAMPLED_PAIRS: usize = 10_000;

#[derive(Debug, Error)]
pub enum LieError {
    #[error("restricted Lie axioms fail: {0}")]
    AxiomFailure(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Restricted Lie algebra data: bracket tensor gamma[(i*n + j)*n + l] and
/// [p]-map rows pmap[i*n + l].
#[derive(Debug, Clone)]
pub struct RestrictedLie {
    pub p: u16,
    pub n: usize,
    bracket: Vec<u8>,
    pmap: Vec<u8>,
}

/// Linear form on the Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm {
    pub xi: Vec<u8>,
}

/// Per-axiom outcome of the restricted-Lie check.
#[derive(Debug, Clone)]
pub struct LieCheckReport {
    pub antisymmetry: bool,
    pub jacobi: bool,
    pub pmap_ad_compatible: bool,
    pub jacobson_additivity: bool,
    pub jacobson_pairs_checked: usize,
    pub jacobson_exhaustive: bool,
}

impl LieCheckReport {
    pub fn pass(&self) -> bool {
        self.antisymmetry && self.jacobi && self.pmap_ad_compatible && self.jacobson_additivity
    }
}

impl RestrictedLie {
    pub fn new(p: u16, n: usize, bracket: Vec<u8>, pmap: Vec<u8>) -> Self {
        assert_eq!(bracket.len(), n * n * n);
        assert_eq!(pmap.len(), n * n);
        RestrictedLie { p, n, bracket, pmap }
    }

    /// Bracket [e_i, e_j] as a coordinate slice.
    #[inline]
    pub fn bracket_row(&self, i: usize, j: usize) -> &[u8] {
        &self.bracket[(i * self.n + j) * self.n..(i * self.n + j + 1) * self.n]
    }

    #[inline]
    pub fn pmap_row(&self, i: usize) -> &[u8] {
        &self.pmap[i * self.n..(i + 1) * self.n]
    }

    pub fn bracket_of(&self, x: &[u8], y: &[u8]) -> Vec<u8> {
        let p = self.p as u64;
        let mut acc = vec![0u64; self.n];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = (xi as u64 * yj as u64) % p;
                for (a, &g) in acc.iter_mut().zip(self.bracket_row(i, j).iter()) {
                    *a += c * g as u64;
                }
            }
        }
        acc.into_iter().map(|v| (v % p) as u8).collect()
    }

    /// Matrix of ad(x): y |-> [x, y].
    pub fn ad_matrix(&self, x: &[u8]) -> FpMatrix {
        let f = Fp::new(self.p).expect("checked modulus");
        let mut m = FpMatrix::zeros(self.p, self.n, self.n);
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for j in 0..self.n {
                let row = self.bracket_row(i, j);
                for l in 0..self.n {
                    if row[l] != 0 {
                        m.set(l, j, f.add(m.get(l, j), f.mul(xi, row[l])));
                    }
                }
            }
        }
        m
    }

    /// Jacobson summands: i * s_i(x, y) is the t^{i-1} coefficient of
    /// (ad(tx + y))^{p-1}(x). Returns s_1, ..., s_{p-1}.
    pub fn jacobson_terms(&self, x: &[u8], y: &[u8]) -> Vec<Vec<u8>> {
        let p = self.p as usize;
        let f = Fp::new(self.p).expect("checked modulus");
        let adx = self.ad_matrix(x);
        let ady = self.ad_matrix(y);
        // poly[k] = coefficient matrix of t^k in (t adx + ady)^(p-1)
        let mut poly: Vec<FpMatrix> = vec![FpMatrix::identity(self.p, self.n)];
        for _ in 0..p - 1 {
            let mut next: Vec<FpMatrix> = vec![FpMatrix::zeros(self.p, self.n, self.n); poly.len() + 1];
            for (k, m) in poly.iter().enumerate() {
                next[k] = next[k].add(&ady.mul(m));
                next[k + 1] = next[k + 1].add(&adx.mul(m));
            }
            poly = next;
        }
        let mut out = Vec::with_capacity(p - 1);
        for i in 1..p {
            let coeff = poly[i - 1].mul_vec(x);
            let inv_i = f.inv((i % p) as u8);
            out.push(coeff.into_iter().map(|c| f.mul(inv_i, c)).collect());
        }
        out
    }

    /// [p]-map extended to arbitrary elements through p-semilinearity and
    /// Jacobson additivity, splitting off the lowest nonzero coordinate.
    pub fn pmap_of(&self, x: &[u8]) -> Vec<u8> {
        let f = Fp::new(self.p).expect("checked modulus");
        let Some(j) = x.iter().position(|&c| c != 0) else {
            return vec![0; self.n];
        };
        let c = x[j];
        let mut rest = x.to_vec();
        rest[j] = 0;
        if rest.iter().all(|&v| v == 0) {
            // (c e_j)^{[p]} = c^p e_j^{[p]} and c^p = c in F_p
            return self.pmap_row(j).iter().map(|&v| f.mul(c, v)).collect();
        }
        let mut head = vec![0u8; self.n];
        head[j] = c;
        let mut out: Vec<u8> = self
            .pmap_row(j)
            .iter()
            .zip(self.pmap_of(&rest))
            .map(|(&a, b)| f.add(f.mul(c, a), b))
            .collect();
        for s in self.jacobson_terms(&head, &rest) {
            for (o, &v) in out.iter_mut().zip(s.iter()) {
                *o = f.add(*o, v);
            }
        }
        out
    }

    /// Verify the restricted-Lie axioms.
    pub fn check(&self) -> LieCheckReport {
        self.check_seeded(0xC0FFEE)
    }

    pub fn check_seeded(&self, seed: u64) -> LieCheckReport {
        let f = Fp::new(self.p).expect("checked modulus");
        let n = self.n;
        let mut antisymmetry = true;
        for i in 0..n {
            if self.bracket_row(i, i).iter().any(|&c| c != 0) {
                antisymmetry = false;
            }
            for j in 0..n {
                let ij = self.bracket_row(i, j);
                let ji = self.bracket_row(j, i);
                if ij.iter().zip(ji.iter()).any(|(&a, &b)| f.add(a, b) != 0) {
                    antisymmetry = false;
                }
            }
        }
        let mut jacobi = true;
        'outer: for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let ei = basis_vec(n, i);
                    let ej = basis_vec(n, j);
                    let ek = basis_vec(n, k);
                    let t1 = self.bracket_of(&self.bracket_of(&ei, &ej), &ek);
                    let t2 = self.bracket_of(&self.bracket_of(&ej, &ek), &ei);
                    let t3 = self.bracket_of(&self.bracket_of(&ek, &ei), &ej);
                    for l in 0..n {
                        if f.add(f.add(t1[l], t2[l]), t3[l]) != 0 {
                            jacobi = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
        let mut pmap_ad_compatible = true;
        for i in 0..n {
            let ad_i = self.ad_matrix(&basis_vec(n, i));
            let mut ad_pow = ad_i.clone();
            for _ in 1..self.p {
                ad_pow = ad_pow.mul(&ad_i);
            }
            let ad_pmap = self.ad_matrix(self.pmap_row(i));
            if ad_pow != ad_pmap {
                pmap_ad_compatible = false;
            }
        }
        // Jacobson additivity, exhaustive below the gate
        let total_pairs = (self.p as u64)
            .checked_pow(2 * n as u32)
            .unwrap_or(u64::MAX);
        let exhaustive = total_pairs <= EXHAUSTIVE_PAIR_GATE;
        let mut jacobson_additivity = true;
        let mut checked = 0usize;
        let check_pair = |x: &[u8], y: &[u8]| -> bool {
            let f = Fp::new(self.p).expect("checked modulus");
            let sum: Vec<u8> = x.iter().zip(y.iter()).map(|(&a, &b)| f.add(a, b)).collect();
            let lhs = self.pmap_of(&sum);
            let mut rhs: Vec<u8> = self
                .pmap_of(x)
                .iter()
                .zip(self.pmap_of(y))
                .map(|(&a, b)| f.add(a, b))
                .collect();
            for s in self.jacobson_terms(x, y) {
                for (o, &v) in rhs.iter_mut().zip(s.iter()) {
                    *o = f.add(*o, v);
                }
            }
            lhs == rhs
        };
        if n == 0 {
            // nothing to check
        } else if exhaustive {
            let m = (self.p as u64).pow(n as u32);
            for xi in 0..m {
                let x = decode_vec(self.p, n, xi);
                for yi in 0..m {
                    let y = decode_vec(self.p, n, yi);
                    checked += 1;
                    if !check_pair(&x, &y) {
                        jacobson_additivity = false;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..SAMPLED_PAIRS {
                let x: Vec<u8> = (0..n).map(|_| rng.gen_range(0..self.p) as u8).collect();
                let y: Vec<u8> = (0..n).map(|_| rng.gen_range(0..self.p) as u8).collect();
                checked += 1;
                if !check_pair(&x, &y) {
                    jacobson_additivity = false;
                }
            }
        }
        LieCheckReport {
            antisymmetry,
            jacobi,
            pmap_ad_compatible,
            jacobson_additivity,
            jacobson_pairs_checked: checked,
            jacobson_exhaustive: exhaustive,
        }
    }

    /// Alternating matrix beta[i][j] = xi([e_i, e_j]) and its nondegeneracy.
    pub fn beta_form(&self, xi: &LinearForm) -> (FpMatrix, bool) {
        assert_eq!(xi.xi.len(), self.n);
        let p = self.p as u64;
        let m = FpMatrix::from_fn(self.p, self.n, self.n, |i, j| {
            let row = self.bracket_row(i, j);
            let mut acc = 0u64;
            for (l, &c) in row.iter().enumerate() {
                acc += c as u64 * xi.xi[l] as u64;
            }
            (acc % p) as u8
        });
        let nondeg = m.rank() == self.n;
        (m, nondeg)
    }

    /// Trace character alpha(e_i) = tr(ad e_i).
    pub fn modular_character(&self) -> LinearForm {
        let f = Fp::new(self.p).expect("checked modulus");
        let xi = (0..self.n)
            .map(|i| {
                let ad = self.ad_matrix(&basis_vec(self.n, i));
                let mut tr = 0u8;
                for t in 0..self.n {
                    tr = f.add(tr, ad.get(t, t));
                }
                tr
            })
            .collect();
        LinearForm { xi }
    }

    pub fn is_unimodular(&self) -> bool {
        self.modular_character().xi.iter().all(|&c| c == 0)
    }

    /// Basis of the derived subspace [g, g].
    pub fn derived_subspace(&self) -> Vec<Vec<u8>> {
        let mut rows = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                rows.push(self.bracket_row(i, j).to_vec());
            }
        }
        crate::algebra::canonical_rows(self.p, &rows)
    }

    /// Does every element of [g, g] vanish under n iterations of the [p]-map?
    pub fn derived_pnilpotent(&self) -> bool {
        let basis = self.derived_subspace();
        let k = basis.len();
        if k == 0 {
            return true;
        }
        let f = Fp::new(self.p).expect("checked modulus");
        let total = (self.p as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
        let nilpotent = |x: &[u8]| -> bool {
            let mut v = x.to_vec();
            for _ in 0..self.n {
                v = self.pmap_of(&v);
            }
            v.iter().all(|&c| c == 0)
        };
        let element = |combo: &[u8]| -> Vec<u8> {
            let mut x = vec![0u8; self.n];
            for (c, b) in combo.iter().zip(basis.iter()) {
                for (xv, &bv) in x.iter_mut().zip(b.iter()) {
                    *xv = f.add(*xv, f.mul(*c, bv));
                }
            }
            x
        };
        if total <= EXHAUSTIVE_PAIR_GATE {
            for idx in 0..total {
                let combo = decode_vec(self.p, k, idx);
                if !nilpotent(&element(&combo)) {
                    return false;
                }
            }
            true
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0xBADA55);
            for _ in 0..SAMPLED_PAIRS {
                let combo: Vec<u8> = (0..k).map(|_| rng.gen_range(0..self.p) as u8).collect();
                if !nilpotent(&element(&combo)) {
                    return false;
                }
            }
            true
        }
    }

    /// Reduced enveloping algebra for the linear form xi.
    pub fn reduced_enveloping(&self, xi: &LinearForm) -> Result<ReducedEnveloping, LieError> {
        let report = self.check();
        if !report.pass() {
            return Err(LieError::AxiomFailure(format!("{report:?}")));
        }
        ReducedEnveloping::build(self, xi)
    }
}

/// Reduced enveloping algebra U_xi(g) on the monomial basis, together with
/// the embedding of the Lie generators.
#[derive(Debug, Clone)]
pub struct ReducedEnveloping {
    pub p: u16,
    pub n: usize,
    pub xi: LinearForm,
    pub algebra: Algebra,
    /// Generator e_i as an element of the algebra.
    pub lie_embedding: Vec<FpVector>,
    /// Matrices of left multiplication by each basis monomial.
    gen_left: Vec<FpMatrix>,
}

impl ReducedEnveloping {
    /// Flat index of the exponent tuple (a_1, ..., a_n), lexicographic.
    pub fn monomial_index(&self, exps: &[u8]) -> usize {
        index_of(self.p, self.n, exps)
    }

    pub fn exponents_of(&self, idx: usize) -> Vec<u8> {
        exps_of(self.p, self.n, idx)
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    fn build(g: &RestrictedLie, xi: &LinearForm) -> Result<Self, LieError> {
        assert_eq!(xi.xi.len(), g.n);
        let p = g.p;
        let pu = p as usize;
        let n = g.n;
        let d = pu.checked_pow(n as u32).expect("dimension p^n overflows usize");
        let f = Fp::new(p).expect("checked modulus");

        // memoised straightening of generator-times-monomial
        struct Straighten<'a> {
            g: &'a RestrictedLie,
            xi: &'a [u8],
            d: usize,
            n: usize,
            pu: usize,
            memo: Vec<Vec<Option<Vec<u8>>>>,
        }
        impl Straighten<'_> {
            fn lmul_gen(&mut self, i: usize, m: usize) -> Vec<u8> {
                if let Some(v) = &self.memo[i][m] {
                    return v.clone();
                }
                let p = self.g.p;
                let f = Fp::new(p).expect("checked modulus");
                let exps = exps_of(p, self.n, m);
                let j = exps.iter().position(|&a| a > 0);
                let result: Vec<u8> = match j {
                    None => {
                        // e_i * 1
                        let mut v = vec![0u8; self.d];
                        let mut e = vec![0u8; self.n];
                        e[i] = 1;
                        v[index_of(p, self.n, &e)] = 1;
                        v
                    }
                    Some(j) if i <= j => {
                        if exps[i] + 1 < p as u8 {
                            let mut e = exps.clone();
                            e[i] += 1;
                            let mut v = vec![0u8; self.d];
                            v[index_of(p, self.n, &e)] = 1;
                            v
                        } else {
                            // e_i^p * rest = (e_i^{[p]} + xi(e_i)) * rest
                            debug_assert_eq!(i, j);
                            let mut rest = exps.clone();
                            rest[i] = 0;
                            let rest_idx = index_of(p, self.n, &rest);
                            let mut acc = vec![0u8; self.d];
                            let pmrow = self.g.pmap_row(i).to_vec();
                            for (l, &c) in pmrow.iter().enumerate() {
                                if c == 0 {
                                    continue;
                                }
                                let w = self.lmul_gen(l, rest_idx);
                                for (a, &b) in acc.iter_mut().zip(w.iter()) {
                                    *a = f.add(*a, f.mul(c, b));
                                }
                            }
                            let scal = self.xi[i]; // xi(e_i)^p = xi(e_i)
                            if scal != 0 {
                                acc[rest_idx] = f.add(acc[rest_idx], scal);
                            }
                            acc
                        }
                    }
                    Some(j) => {
                        // commute: e_i e_j m' = e_j (e_i m') + [e_i, e_j] m'
                        let mut mprime = exps.clone();
                        mprime[j] -= 1;
                        let mp_idx = index_of(p, self.n, &mprime);
                        let inner = self.lmul_gen(i, mp_idx);
                        let mut acc = vec![0u8; self.d];
                        for (w, c) in inner.iter().copied().enumerate().filter(|(_, c)| *c != 0) {
                            let v = self.lmul_gen(j, w);
                            for (a, &b) in acc.iter_mut().zip(v.iter()) {
                                *a = f.add(*a, f.mul(c, b));
                            }
                        }
                        let brow = self.g.bracket_row(i, j).to_vec();
                        for (l, &c) in brow.iter().enumerate() {
                            if c == 0 {
                                continue;
                            }
                            let v = self.lmul_gen(l, mp_idx);
                            for (a, &b) in acc.iter_mut().zip(v.iter()) {
                                *a = f.add(*a, f.mul(c, b));
                            }
                        }
                        acc
                    }
                };
                self.memo[i][m] = Some(result.clone());
                result
            }
        }

        let mut st = Straighten {
            g,
            xi: &xi.xi,
            d,
            n,
            pu,
            memo: vec![vec![None; d]; n.max(1)],
        };
        let _ = st.pu;

        // generator left-multiplication matrices
        let mut gen_left = Vec::with_capacity(n);
        for i in 0..n {
            let mut m = FpMatrix::zeros(p, d, d);
            for b in 0..d {
                let col = st.lmul_gen(i, b);
                for (k, &c) in col.iter().enumerate() {
                    if c != 0 {
                        m.set(k, b, c);
                    }
                }
            }
            gen_left.push(m);
        }

        // left multiplication by every basis monomial, built by composition
        let mut lmats: Vec<FpMatrix> = Vec::with_capacity(d);
        lmats.push(FpMatrix::identity(p, d));
        for idx in 1..d {
            let exps = exps_of(p, n, idx);
            let j = exps.iter().position(|&a| a > 0).expect("nonunit monomial");
            let prev = idx - pu.pow((n - 1 - j) as u32);
            lmats.push(gen_left[j].mul(&lmats[prev]));
        }

        let mut mult = vec![0u8; d * d * d];
        for a in 0..d {
            for b in 0..d {
                for k in 0..d {
                    mult[(a * d + b) * d + k] = lmats[a].get(k, b);
                }
            }
        }
        let mut unit = vec![0u8; d];
        unit[0] = 1;
        let algebra = Algebra::new(p, d, unit, mult)?;

        let lie_embedding: Vec<FpVector> = (0..n)
            .map(|i| {
                let mut e = vec![0u8; n];
                e[i] = 1;
                let mut v = vec![0u8; d];
                v[index_of(p, n, &e)] = 1;
                FpVector::from_vec(p, v)
            })
            .collect();

        let u = ReducedEnveloping { p, n, xi: xi.clone(), algebra, lie_embedding, gen_left };

        // embedding respects the bracket: e_i e_j - e_j e_i = [e_i, e_j]
        for i in 0..n {
            for j in 0..n {
                let ei = &u.lie_embedding[i];
                let ej = &u.lie_embedding[j];
                let comm = {
                    let xy = u.algebra.multiply(ei, ej)?;
                    let yx = u.algebra.multiply(ej, ei)?;
                    FpVector::from_vec(
                        p,
                        xy.data.iter().zip(yx.data.iter()).map(|(&a, &b)| f.sub(a, b)).collect(),
                    )
                };
                let br = g.bracket_row(i, j);
                let mut want = vec![0u8; d];
                for (l, &c) in br.iter().enumerate() {
                    if c != 0 {
                        want[index_of(p, n, &basis_vec(n, l))] = c;
                    }
                }
                if comm.data != want {
                    return Err(LieError::AxiomFailure(format!(
                        "embedded bracket mismatch at ({i},{j})"
                    )));
                }
            }
        }
        // defining relation e_i^p = e_i^{[p]} + xi(e_i)
        for i in 0..n {
            let pow = u.algebra.power(&u.lie_embedding[i], p as u64)?;
            let mut want = vec![0u8; d];
            for (l, &c) in g.pmap_row(i).iter().enumerate() {
                if c != 0 {
                    want[index_of(p, n, &basis_vec(n, l))] = c;
                }
            }
            want[0] = f.add(want[0], xi.xi[i]);
            if pow.data != want {
                return Err(LieError::AxiomFailure(format!(
                    "p-th power relation fails for generator {i}"
                )));
            }
        }
        Ok(u)
    }

    /// Adjoint action matrices rho(e_i) = L_{e_i} - R_{e_i}; each satisfies
    /// rho(e_i)^p = rho(e_i^{[p]}) and the derivation law on basis pairs.
    pub fn adjoint_action(&self, g: &RestrictedLie) -> Result<Vec<FpMatrix>, LieError> {
        let d = self.dim();
        let f = Fp::new(self.p).expect("checked modulus");
        let mats: Vec<FpMatrix> = (0..self.n)
            .map(|i| {
                let l = self.algebra.left_mult_matrix(&self.lie_embedding[i]);
                let r = self.algebra.right_mult_matrix(&self.lie_embedding[i]);
                l.sub(&r)
            })
            .collect();
        for i in 0..self.n {
            let mut pow = mats[i].clone();
            for _ in 1..self.p {
                pow = pow.mul(&mats[i]);
            }
            let mut want = FpMatrix::zeros(self.p, d, d);
            for (l, &c) in g.pmap_row(i).iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for t in 0..d * d {
                    want.data[t] = f.add(want.data[t], f.mul(c, mats[l].data[t]));
                }
            }
            if pow != want {
                return Err(LieError::AxiomFailure(format!(
                    "adjoint action does not factor through the restricted quotient at generator {i}"
                )));
            }
        }
        // derivation law on basis pairs
        for i in 0..self.n {
            for a in 0..d {
                let ea = self.algebra.basis_element(a);
                let rho_a = FpVector::from_vec(self.p, mats[i].col(a));
                for b in 0..d {
                    let eb = self.algebra.basis_element(b);
                    let rho_b = FpVector::from_vec(self.p, mats[i].col(b));
                    let prod = self.algebra.multiply(&ea, &eb)?;
                    let lhs = mats[i].mul_vec(&prod.data);
                    let t1 = self.algebra.multiply(&rho_a, &eb)?;
                    let t2 = self.algebra.multiply(&ea, &rho_b)?;
                    let rhs: Vec<u8> = t1
                        .data
                        .iter()
                        .zip(t2.data.iter())
                        .map(|(&x, &y)| f.add(x, y))
                        .collect();
                    if lhs != rhs {
                        return Err(LieError::AxiomFailure(format!(
                            "derivation law fails for generator {i} at pair ({a},{b})"
                        )));
                    }
                }
            }
        }
        Ok(mats)
    }

    /// Left multiplication matrix of the basis monomial with index `idx` in
    /// the generator order (used to extend the Lie action to all of U_0).
    pub fn generator_left(&self, i: usize) -> &FpMatrix {
        &self.gen_left[i]
    }
}

pub fn basis_vec(n: usize, i: usize) -> Vec<u8> {
    let mut v = vec![0u8; n];
    v[i] = 1;
    v
}

fn index_of(p: u16, n: usize, exps: &[u8]) -> usize {
    let mut idx = 0usize;
    for &a in exps.iter() {
        idx = idx * p as usize + a as usize;
    }
    let _ = n;
    idx
}

fn exps_of(p: u16, n: usize, mut idx: usize) -> Vec<u8> {
    let mut e = vec![0u8; n];
    for i in (0..n).rev() {
        e[i] = (idx % p as usize) as u8;
        idx /= p as usize;
    }
    e
}

fn decode_vec(p: u16, n: usize, mut idx: u64) -> Vec<u8> {
    let mut v = vec![0u8; n];
    for i in (0..n).rev() {
        v[i] = (idx % p as u64) as u8;
        idx /= p as u64;
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn abelian_passes_and_is_unimodular() {
        let g = fixtures::abelian(3, 2);
        assert!(g.check().pass());
        assert!(g.is_unimodular());
        let (beta, nondeg) = g.beta_form(&LinearForm { xi: vec![1, 2] });
        assert!(beta.is_zero());
        assert!(!nondeg);
    }

    #[test]
    fn example1_axioms_and_characters() {
        for p in [2u16, 3, 5] {
            let g = fixtures::example1(p);
            let r = g.check();
            assert!(r.pass(), "axioms fail at p={p}: {r:?}");
            assert!(r.jacobson_exhaustive);
            assert_eq!(g.modular_character().xi, vec![1, 0]);
            assert!(!g.is_unimodular());
            let (beta, nondeg) = g.beta_form(&LinearForm { xi: vec![0, 1] });
            assert!(nondeg);
            assert_eq!(beta.get(0, 1), 1);
            assert_eq!(beta.get(1, 0), (p - 1) as u8);
            let (_, nd0) = g.beta_form(&LinearForm { xi: vec![0, 0] });
            assert!(!nd0);
            assert!(g.derived_pnilpotent());
        }
    }

    #[test]
    fn example1_broken_pmap_fails() {
        // with e_0^{[p]} = 0 the compatibility ad(e_0^{[p]}) = (ad e_0)^p breaks
        let p = 3u16;
        let n = 2usize;
        let mut bracket = vec![0u8; 8];
        bracket[n + 1] = 1;
        bracket[n * n + 1] = p as u8 - 1;
        let pmap = vec![0, 0, 0, 0];
        let g = RestrictedLie::new(p, n, bracket, pmap);
        let r = g.check();
        assert!(!r.pmap_ad_compatible);
        assert!(!r.pass());
    }

    #[test]
    fn heisenberg_with_pfixed_centre_not_derived_pnilpotent() {
        // [e_0, e_1] = e_2 central with e_2^{[p]} = e_2: the derived
        // subalgebra contains a fixed point of the [p]-map
        let p = 3u16;
        let n = 3usize;
        let mut bracket = vec![0u8; n * n * n];
        bracket[n + 2] = 1;
        bracket[n * n + 2] = p as u8 - 1;
        let mut pmap = vec![0u8; n * n];
        pmap[2 * n + 2] = 1;
        let g = RestrictedLie::new(p, n, bracket, pmap);
        assert!(g.check().pass());
        assert!(!g.derived_pnilpotent());
        // the zero-pmap Heisenberg algebra is derived-p-nilpotent
        let g0 = RestrictedLie::new(
            p,
            n,
            {
                let mut b = vec![0u8; n * n * n];
                b[n + 2] = 1;
                b[n * n + 2] = p as u8 - 1;
                b
            },
            vec![0; n * n],
        );
        assert!(g0.check().pass());
        assert!(g0.derived_pnilpotent());
    }

    #[test]
    fn example2_axioms() {
        for (p, a, b) in [(2u16, 1u8, 0u8), (3, 1, 1), (5, 2, 1)] {
            let g = fixtures::example2(p, a, b).unwrap();
            let r = g.check();
            assert!(r.pass(), "axioms fail at p={p}: {r:?}");
            assert!(g.derived_pnilpotent());
            let uni = g.is_unimodular();
            assert_eq!(uni, p == 2, "unimodular exactly at p = 2");
        }
    }

    #[test]
    fn zero_dimensional_case() {
        let g = fixtures::zero(5);
        assert!(g.check().pass());
        let u = g.reduced_enveloping(&LinearForm { xi: vec![] }).unwrap();
        assert_eq!(u.dim(), 1);
    }

    #[test]
    fn truncated_polynomial_case() {
        let g = fixtures::abelian(3, 1);
        let u = g.reduced_enveloping(&LinearForm { xi: vec![0] }).unwrap();
        assert_eq!(u.dim(), 3);
        // commutative: e * e^{p-1} = 0
        let e = &u.lie_embedding[0];
        let top = u.algebra.power(e, 2).unwrap();
        assert!(u.algebra.multiply(e, &top).unwrap().is_zero());
    }

    #[test]
    fn example1_enveloping_relations() {
        let p = 3u16;
        let g = fixtures::example1(p);
        let u = g.reduced_enveloping(&LinearForm { xi: vec![0, 1] }).unwrap();
        assert_eq!(u.dim(), 9);
        let e0 = &u.lie_embedding[0];
        let e1 = &u.lie_embedding[1];
        // e_0^p = e_0 and e_1^p = 1
        assert_eq!(&u.algebra.power(e0, 3).unwrap(), e0);
        assert_eq!(u.algebra.power(e1, 3).unwrap(), u.algebra.unit_element());
        // e_1 * e_1^2 = 1 and e_1^{-1} = e_1^2
        let sq = u.algebra.multiply(e1, e1).unwrap();
        assert_eq!(u.algebra.multiply(e1, &sq).unwrap(), u.algebra.unit_element());
        assert_eq!(u.algebra.element_inverse(e1).unwrap(), sq);
        // U_xi is central simple here, and generated by the Lie generators
        assert!(u.algebra.is_central_simple());
        let closure = u.algebra.subalgebra_closure(&[e0.clone(), e1.clone()]);
        assert_eq!(closure.len(), 9);
    }

    #[test]
    fn example1_adjoint_action() {
        let p = 3u16;
        let g = fixtures::example1(p);
        let u = g.reduced_enveloping(&LinearForm { xi: vec![0, 1] }).unwrap();
        let rho = u.adjoint_action(&g).unwrap();
        // rho(e_0) e_1 = e_1, rho(e_1) e_0 = -e_1, rho(e_i) 1 = 0
        let e1_idx = u.monomial_index(&[0, 1]);
        let e0_idx = u.monomial_index(&[1, 0]);
        let col = rho[0].col(e1_idx);
        let mut want = vec![0u8; u.dim()];
        want[e1_idx] = 1;
        assert_eq!(col, want);
        let col = rho[1].col(e0_idx);
        let mut want = vec![0u8; u.dim()];
        want[e1_idx] = p as u8 - 1;
        assert_eq!(col, want);
        for m in &rho {
            assert!(m.col(0).iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn abelian_adjoint_is_zero() {
        let g = fixtures::abelian(2, 2);
        let u = g.reduced_enveloping(&LinearForm { xi: vec![0, 0] }).unwrap();
        let rho = u.adjoint_action(&g).unwrap();
        assert!(rho.iter().all(|m| m.is_zero()));
    }
}
