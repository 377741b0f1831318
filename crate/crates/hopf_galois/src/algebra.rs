//! Finite-dimensional unital associative algebras over F_p presented by
//! structure constants, with the predicates needed downstream: central
//! simplicity, Frobenius form data, Nakayama automorphism, subalgebra
//! closure.
//!
//! The multiplication tensor is stored flat: `mult[(i*d + j)*d + k]` is the
//! coefficient of b_k in the product b_i * b_j. Construction verifies the
//! unit law and associativity on all basis triples, so everything downstream
//! may assume a genuine algebra.

use crate::fp::{Fp, FpMatrix, FpVector, SpanBasis};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("associativity fails at basis pair (i={0}, j={1})")]
    NotAssociative(usize, usize),
    #[error("unit law fails at basis index {0}")]
    UnitLaw(usize),
    #[error("element does not belong to this algebra (dim {expected}, got {got})")]
    ParentMismatch { expected: usize, got: usize },
    #[error("element is not invertible")]
    NotInvertible,
    #[error("bilinear form of the given linear function is degenerate")]
    DegenerateForm,
    #[error("tensor algebra of dimension {0} exceeds the dense-storage gate")]
    TensorTooLarge(usize),
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u16, u16),
    #[error("automorphism order exceeded the cap {0}")]
    OrderCapExceeded(usize),
}

pub type AlgebraElement = FpVector;

/// Unital associative algebra given by structure constants.
#[derive(Debug, Clone)]
pub struct Algebra {
    pub p: u16,
    pub dim: usize,
    pub unit: Vec<u8>,
    mult: Vec<u8>,
}

/// Frobenius form data for a linear function chi with invertible Gram matrix.
#[derive(Debug, Clone)]
pub struct FrobeniusFormData {
    pub chi: Vec<u8>,
    pub gram: FpMatrix,
    /// Nakayama automorphism theta with chi(b a) = chi(a * theta(b)).
    pub nakayama: FpMatrix,
    /// Multiplicative order of theta.
    pub order: usize,
}

impl Algebra {
    /// Build and verify an algebra. `mult` is the flat structure tensor.
    pub fn new(p: u16, dim: usize, unit: Vec<u8>, mult: Vec<u8>) -> Result<Self, AlgebraError> {
        assert_eq!(unit.len(), dim);
        assert_eq!(mult.len(), dim * dim * dim);
        let a = Algebra { p, dim, unit, mult };
        a.verify()?;
        Ok(a)
    }

    /// The one-dimensional algebra F_p.
    pub fn ground_field(p: u16) -> Self {
        Algebra { p, dim: 1, unit: vec![1], mult: vec![1] }
    }

    fn verify(&self) -> Result<(), AlgebraError> {
        let d = self.dim;
        // unit law on basis vectors
        for i in 0..d {
            let e = self.basis_element(i);
            let u = FpVector::from_vec(self.p, self.unit.clone());
            if self.multiply(&u, &e)? != e || self.multiply(&e, &u)? != e {
                return Err(AlgebraError::UnitLaw(i));
            }
        }
        // associativity via L_{b_i} L_{b_j} = L_{b_i b_j}
        let lmats: Vec<FpMatrix> = (0..d).map(|i| self.left_mult_basis(i)).collect();
        let f = Fp::new(self.p).expect("checked modulus");
        for i in 0..d {
            for j in 0..d {
                let prod = lmats[i].mul(&lmats[j]);
                let mut comb = FpMatrix::zeros(self.p, d, d);
                for k in 0..d {
                    let c = self.mult_coeff(i, j, k);
                    if c == 0 {
                        continue;
                    }
                    for t in 0..d * d {
                        comb.data[t] = f.add(comb.data[t], f.mul(c, lmats[k].data[t]));
                    }
                }
                if prod != comb {
                    return Err(AlgebraError::NotAssociative(i, j));
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> u8 {
        self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Product b_i * b_j as a coordinate slice.
    #[inline]
    pub fn mult_row(&self, i: usize, j: usize) -> &[u8] {
        let d = self.dim;
        &self.mult[(i * d + j) * d..(i * d + j + 1) * d]
    }

    pub fn basis_element(&self, i: usize) -> AlgebraElement {
        let mut v = vec![0u8; self.dim];
        v[i] = 1;
        FpVector::from_vec(self.p, v)
    }

    pub fn unit_element(&self) -> AlgebraElement {
        FpVector::from_vec(self.p, self.unit.clone())
    }

    pub fn element(&self, coords: Vec<u8>) -> AlgebraElement {
        assert_eq!(coords.len(), self.dim);
        FpVector::from_vec(self.p, coords)
    }

    fn check_parent(&self, x: &AlgebraElement) -> Result<(), AlgebraError> {
        if x.dim() != self.dim {
            return Err(AlgebraError::ParentMismatch { expected: self.dim, got: x.dim() });
        }
        if x.p != self.p {
            return Err(AlgebraError::ModulusMismatch(self.p, x.p));
        }
        Ok(())
    }

    /// Bilinear extension of the structure tensor.
    pub fn multiply(
        &self,
        x: &AlgebraElement,
        y: &AlgebraElement,
    ) -> Result<AlgebraElement, AlgebraError> {
        self.check_parent(x)?;
        self.check_parent(y)?;
        let d = self.dim;
        let p = self.p as u64;
        let mut acc = vec![0u64; d];
        for (i, &xi) in x.data.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.data.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = (xi as u64 * yj as u64) % p;
                if c == 0 {
                    continue;
                }
                let row = self.mult_row(i, j);
                for (a, &m) in acc.iter_mut().zip(row.iter()) {
                    *a += c * m as u64;
                }
            }
        }
        Ok(FpVector::from_vec(
            self.p,
            acc.into_iter().map(|v| (v % p) as u8).collect(),
        ))
    }

    /// Matrix of left multiplication by the basis element b_i.
    pub fn left_mult_basis(&self, i: usize) -> FpMatrix {
        let d = self.dim;
        FpMatrix::from_fn(self.p, d, d, |k, j| self.mult_coeff(i, j, k))
    }

    /// Matrix of right multiplication by the basis element b_j.
    pub fn right_mult_basis(&self, j: usize) -> FpMatrix {
        let d = self.dim;
        FpMatrix::from_fn(self.p, d, d, |k, i| self.mult_coeff(i, j, k))
    }

    /// Matrix of b |-> x b.
    pub fn left_mult_matrix(&self, x: &AlgebraElement) -> FpMatrix {
        let d = self.dim;
        let f = Fp::new(self.p).expect("checked modulus");
        let mut m = FpMatrix::zeros(self.p, d, d);
        for (i, &xi) in x.data.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for j in 0..d {
                let row = self.mult_row(i, j);
                for k in 0..d {
                    if row[k] != 0 {
                        m.set(k, j, f.add(m.get(k, j), f.mul(xi, row[k])));
                    }
                }
            }
        }
        m
    }

    /// Matrix of b |-> b x.
    pub fn right_mult_matrix(&self, x: &AlgebraElement) -> FpMatrix {
        let d = self.dim;
        let f = Fp::new(self.p).expect("checked modulus");
        let mut m = FpMatrix::zeros(self.p, d, d);
        for (j, &xj) in x.data.iter().enumerate() {
            if xj == 0 {
                continue;
            }
            for i in 0..d {
                let row = self.mult_row(i, j);
                for k in 0..d {
                    if row[k] != 0 {
                        m.set(k, i, f.add(m.get(k, i), f.mul(xj, row[k])));
                    }
                }
            }
        }
        m
    }

    /// Two-sided inverse, found by solving L_x y = 1 and verifying y x = 1.
    pub fn element_inverse(&self, x: &AlgebraElement) -> Result<AlgebraElement, AlgebraError> {
        self.check_parent(x)?;
        let lx = self.left_mult_matrix(x);
        let rhs = FpMatrix::column_vec(self.p, &self.unit);
        let y = lx.solve(&rhs).ok_or(AlgebraError::NotInvertible)?;
        let y = FpVector::from_vec(self.p, y.col(0));
        if self.multiply(&y, x)?.data != self.unit {
            return Err(AlgebraError::NotInvertible);
        }
        Ok(y)
    }

    pub fn power(&self, x: &AlgebraElement, e: u64) -> Result<AlgebraElement, AlgebraError> {
        let mut acc = self.unit_element();
        for _ in 0..e {
            acc = self.multiply(&acc, x)?;
        }
        Ok(acc)
    }

    /// Basis of the centre, as the joint kernel of the commutator operators.
    pub fn center_basis(&self) -> Vec<FpVector> {
        let d = self.dim;
        let mut cur = FpMatrix::identity(self.p, d);
        for i in 0..d {
            if cur.cols == 0 {
                break;
            }
            let c = self.left_mult_basis(i).sub(&self.right_mult_basis(i));
            let restricted = c.mul(&cur);
            let ker = restricted.kernel_basis();
            let mut cols = FpMatrix::zeros(self.p, cur.cols, ker.len());
            for (t, v) in ker.iter().enumerate() {
                for r in 0..cur.cols {
                    cols.set(r, t, v.data[r]);
                }
            }
            cur = cur.mul(&cols);
        }
        (0..cur.cols)
            .map(|t| FpVector::from_vec(self.p, cur.col(t)))
            .collect()
    }

    /// True iff x tensor y |-> L_x R_y has full rank d^2 on End(A).
    /// When true, the centre is independently recomputed and must be the
    /// scalars.
    pub fn is_central_simple(&self) -> bool {
        let d = self.dim;
        let dd = d * d;
        let lmats: Vec<FpMatrix> = (0..d).map(|i| self.left_mult_basis(i)).collect();
        let rmats: Vec<FpMatrix> = (0..d).map(|j| self.right_mult_basis(j)).collect();
        let mut big = FpMatrix::zeros(self.p, dd, dd);
        for i in 0..d {
            for j in 0..d {
                let prod = lmats[i].mul(&rmats[j]);
                let colidx = i * d + j;
                for r in 0..dd {
                    big.data[r * dd + colidx] = prod.data[r];
                }
            }
        }
        let full = big.rank() == dd;
        if full {
            assert_eq!(
                self.center_basis().len(),
                1,
                "full-rank multiplication map with centre larger than the scalars"
            );
        }
        full
    }

    /// Same structure constants with the two factors swapped.
    pub fn opposite(&self) -> Algebra {
        let d = self.dim;
        let mut mult = vec![0u8; d * d * d];
        for i in 0..d {
            for j in 0..d {
                let row = self.mult_row(j, i);
                mult[(i * d + j) * d..(i * d + j + 1) * d].copy_from_slice(row);
            }
        }
        Algebra { p: self.p, dim: d, unit: self.unit.clone(), mult }
    }

    /// Tensor product algebra with the project-wide pairing convention.
    /// Dense storage gates the product dimension.
    pub fn tensor_algebra(&self, other: &Algebra) -> Result<Algebra, AlgebraError> {
        if self.p != other.p {
            return Err(AlgebraError::ModulusMismatch(self.p, other.p));
        }
        let da = self.dim;
        let db = other.dim;
        let d = da * db;
        if d > 512 {
            return Err(AlgebraError::TensorTooLarge(d));
        }
        let f = Fp::new(self.p).expect("checked modulus");
        let mut mult = vec![0u8; d * d * d];
        for i1 in 0..da {
            for i2 in 0..db {
                for j1 in 0..da {
                    for j2 in 0..db {
                        let ra = self.mult_row(i1, j1);
                        let rb = other.mult_row(i2, j2);
                        let dst = ((i1 * db + i2) * d + (j1 * db + j2)) * d;
                        for k1 in 0..da {
                            if ra[k1] == 0 {
                                continue;
                            }
                            for k2 in 0..db {
                                if rb[k2] == 0 {
                                    continue;
                                }
                                mult[dst + k1 * db + k2] = f.mul(ra[k1], rb[k2]);
                            }
                        }
                    }
                }
            }
        }
        let mut unit = vec![0u8; d];
        for k1 in 0..da {
            for k2 in 0..db {
                unit[k1 * db + k2] = f.mul(self.unit[k1], other.unit[k2]);
            }
        }
        // constituents are associative, so the product tensor is as well
        Ok(Algebra { p: self.p, dim: d, unit, mult })
    }

    /// Gram matrix, Nakayama automorphism and its order for the linear
    /// function chi, or `DegenerateForm` when the Gram matrix is singular.
    pub fn frobenius_data(&self, chi: &[u8]) -> Result<FrobeniusFormData, AlgebraError> {
        assert_eq!(chi.len(), self.dim);
        let d = self.dim;
        let p = self.p as u64;
        let gram = FpMatrix::from_fn(self.p, d, d, |s, t| {
            let row = self.mult_row(s, t);
            let mut acc = 0u64;
            for (u, &c) in row.iter().enumerate() {
                acc += c as u64 * chi[u] as u64;
            }
            (acc % p) as u8
        });
        let gram_inv = gram.inverse().ok_or(AlgebraError::DegenerateForm)?;
        let nakayama = gram_inv.mul(&gram.transpose());
        // defining identity chi(b a) = chi(a * theta(b)) on all basis pairs
        let f = Fp::new(self.p).expect("checked modulus");
        for s in 0..d {
            let theta_bs = FpVector::from_vec(self.p, nakayama.col(s));
            for t in 0..d {
                let lhs = {
                    let row = self.mult_row(s, t);
                    let mut acc = 0u64;
                    for (u, &c) in row.iter().enumerate() {
                        acc += c as u64 * chi[u] as u64;
                    }
                    (acc % p) as u8
                };
                let bt = self.basis_element(t);
                let prod = self.multiply(&bt, &theta_bs)?;
                let mut rhs = 0u8;
                for (u, &c) in prod.data.iter().enumerate() {
                    rhs = f.add(rhs, f.mul(c, chi[u]));
                }
                assert_eq!(lhs, rhs, "Nakayama identity violated at ({s},{t})");
            }
        }
        // chi is theta-invariant (specialise the identity at a = 1)
        let chi_theta: Vec<u8> = {
            let cm = FpMatrix::from_rows(self.p, &[chi.to_vec()]);
            cm.mul(&nakayama).row(0).to_vec()
        };
        assert_eq!(chi_theta, chi, "chi must be invariant under theta");
        let cap = 4 * (self.p as usize) * (self.p as usize);
        let order = matrix_order(&nakayama, cap).ok_or(AlgebraError::OrderCapExceeded(cap))?;
        Ok(FrobeniusFormData { chi: chi.to_vec(), gram, nakayama, order })
    }

    /// Smallest unital subspace containing `gens` and closed under
    /// multiplication, by iterated span growth. Returns canonical basis rows.
    pub fn subalgebra_closure(&self, gens: &[AlgebraElement]) -> Vec<Vec<u8>> {
        let d = self.dim;
        let mut rows: Vec<Vec<u8>> = vec![self.unit.clone()];
        rows.extend(gens.iter().map(|g| g.data.clone()));
        let mut basis = canonical_rows(self.p, &rows);
        loop {
            let k = basis.len();
            let mut next = basis.clone();
            for x in &basis {
                let xv = FpVector::from_vec(self.p, x.clone());
                for y in &basis {
                    let yv = FpVector::from_vec(self.p, y.clone());
                    let prod = self.multiply(&xv, &yv).expect("closure products");
                    next.push(prod.data);
                }
            }
            let nb = canonical_rows(self.p, &next);
            if nb.len() == k {
                return nb;
            }
            basis = nb;
            if basis.len() == d {
                return basis;
            }
        }
    }

    /// Sum of the traces of left multiplications, i.e. the regular character
    /// evaluated on each basis element.
    pub fn regular_character(&self) -> Vec<u8> {
        let f = Fp::new(self.p).expect("checked modulus");
        (0..self.dim)
            .map(|i| {
                let mut tr = 0u8;
                for j in 0..self.dim {
                    tr = f.add(tr, self.mult_coeff(i, j, j));
                }
                tr
            })
            .collect()
    }

    /// Weak basis-independent fingerprint: dimension, centre dimension,
    /// dimension of the commutator span, and the ranks of the two trace
    /// forms tr(L_x L_y) and tr(L_x R_y). Equal fingerprints do not decide
    /// isomorphism; unequal ones refute it.
    pub fn fingerprint(&self) -> (usize, usize, usize, usize, usize) {
        let d = self.dim;
        let f = Fp::new(self.p).expect("checked modulus");
        let center = self.center_basis().len();
        let mut comm_rows = Vec::new();
        for i in 0..d {
            for j in 0..d {
                let xy = self.mult_row(i, j);
                let yx = self.mult_row(j, i);
                comm_rows.push(
                    xy.iter().zip(yx.iter()).map(|(&a, &b)| f.sub(a, b)).collect::<Vec<u8>>(),
                );
            }
        }
        let comm_dim = FpMatrix::from_rows(self.p, &comm_rows).rank();
        let lmats: Vec<FpMatrix> = (0..d).map(|i| self.left_mult_basis(i)).collect();
        let rmats: Vec<FpMatrix> = (0..d).map(|i| self.right_mult_basis(i)).collect();
        let trace = |m: &FpMatrix| -> u8 {
            let mut t = 0u8;
            for i in 0..d {
                t = f.add(t, m.get(i, i));
            }
            t
        };
        let ll = FpMatrix::from_fn(self.p, d, d, |i, j| trace(&lmats[i].mul(&lmats[j])));
        let lr = FpMatrix::from_fn(self.p, d, d, |i, j| trace(&lmats[i].mul(&rmats[j])));
        (d, center, comm_dim, ll.rank(), lr.rank())
    }

    /// Span basis over the flattened operators of the basis left-multiplications.
    pub fn left_regular_span(&self) -> SpanBasis {
        let d = self.dim;
        let cols = FpMatrix::from_fn(self.p, d * d, d, |r, i| {
            let (k, j) = (r / d, r % d);
            self.mult_coeff(i, j, k)
        });
        SpanBasis::new(cols).expect("left regular representation is faithful")
    }
}

/// Multiplicative order of an invertible matrix, up to `cap`.
pub fn matrix_order(m: &FpMatrix, cap: usize) -> Option<usize> {
    let id = FpMatrix::identity(m.p, m.rows);
    let mut acc = m.clone();
    for k in 1..=cap {
        if acc == id {
            return Some(k);
        }
        acc = acc.mul(m);
    }
    None
}

/// Canonical (RREF) basis rows spanning the same subspace as `rows`.
pub fn canonical_rows(p: u16, rows: &[Vec<u8>]) -> Vec<Vec<u8>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let m = FpMatrix::from_rows(p, rows);
    let ech = m.rref_augmented(0);
    (0..ech.rank).map(|r| ech.rref.row(r).to_vec()).collect()
}

/// Do two row families span the same subspace?
pub fn same_span(p: u16, a: &[Vec<u8>], b: &[Vec<u8>]) -> bool {
    canonical_rows(p, a) == canonical_rows(p, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// k[e]/(e^n) with basis 1, e, ..., e^{n-1}.
    pub fn truncated_poly(p: u16, n: usize) -> Algebra {
        let mut mult = vec![0u8; n * n * n];
        for i in 0..n {
            for j in 0..n {
                if i + j < n {
                    mult[(i * n + j) * n + (i + j)] = 1;
                }
            }
        }
        let mut unit = vec![0u8; n];
        unit[0] = 1;
        Algebra::new(p, n, unit, mult).unwrap()
    }

    /// Full matrix algebra Mat_n(F_p) with basis E_{rc} at index r*n + c.
    pub fn matrix_algebra(p: u16, n: usize) -> Algebra {
        let d = n * n;
        let mut mult = vec![0u8; d * d * d];
        for r in 0..n {
            for c in 0..n {
                for r2 in 0..n {
                    for c2 in 0..n {
                        if c == r2 {
                            let i = r * n + c;
                            let j = r2 * n + c2;
                            let k = r * n + c2;
                            mult[(i * d + j) * d + k] = 1;
                        }
                    }
                }
            }
        }
        let mut unit = vec![0u8; d];
        for r in 0..n {
            unit[r * n + r] = 1;
        }
        Algebra::new(p, d, unit, mult).unwrap()
    }

    #[test]
    fn ground_field_is_central_simple() {
        assert!(Algebra::ground_field(5).is_central_simple());
    }

    #[test]
    fn truncated_polynomials_are_not_central_simple() {
        let a = truncated_poly(3, 3);
        assert!(!a.is_central_simple());
        // e is nilpotent, hence not invertible
        let e = a.basis_element(1);
        assert!(matches!(a.element_inverse(&e), Err(AlgebraError::NotInvertible)));
        // e^{p-1} * e = 0
        let top = a.basis_element(2);
        assert!(a.multiply(&top, &e).unwrap().is_zero());
    }

    #[test]
    fn matrix_algebra_is_central_simple() {
        assert!(matrix_algebra(2, 2).is_central_simple());
        assert!(matrix_algebra(3, 2).is_central_simple());
    }

    #[test]
    fn unit_multiplication_is_identity() {
        let a = matrix_algebra(3, 2);
        let u = a.unit_element();
        for i in 0..a.dim {
            let b = a.basis_element(i);
            assert_eq!(a.multiply(&u, &b).unwrap(), b);
            assert_eq!(a.multiply(&b, &u).unwrap(), b);
        }
        assert_eq!(a.left_mult_matrix(&u), FpMatrix::identity(3, a.dim));
    }

    #[test]
    fn opposite_is_involutive_and_transposes() {
        let a = matrix_algebra(2, 2);
        let op = a.opposite();
        for i in 0..a.dim {
            for j in 0..a.dim {
                for k in 0..a.dim {
                    assert_eq!(op.mult_coeff(i, j, k), a.mult_coeff(j, i, k));
                }
            }
        }
        let opop = op.opposite();
        for i in 0..a.dim {
            for j in 0..a.dim {
                assert_eq!(opop.mult_row(i, j), a.mult_row(i, j));
            }
        }
        // commutative algebras are fixed by opposite
        let c = truncated_poly(5, 3);
        let cop = c.opposite();
        for i in 0..c.dim {
            for j in 0..c.dim {
                assert_eq!(cop.mult_row(i, j), c.mult_row(i, j));
            }
        }
    }

    #[test]
    fn constructor_rejects_broken_tensors() {
        // break associativity in a 2-dim algebra: b1*b1 = b1, but set b1*b0
        // inconsistently under the unit law
        let p = 3;
        let d = 2;
        let mut mult = vec![0u8; 8];
        // 1*1 = 1, 1*e = e, e*1 = e, e*e = 1 + e (this one is associative)
        mult[0] = 1; // 1 * 1 = 1
        mult[d + 1] = 1;
        mult[d * d + 1] = 1;
        mult[(d + 1) * d] = 1;
        mult[(d + 1) * d + 1] = 1;
        assert!(Algebra::new(p, d, vec![1, 0], mult.clone()).is_ok());
        // now violate the unit law
        mult[d + 1] = 2;
        assert!(matches!(
            Algebra::new(p, d, vec![1, 0], mult),
            Err(AlgebraError::UnitLaw(_)) | Err(AlgebraError::NotAssociative(..))
        ));
    }

    #[test]
    fn tensor_algebra_dimensions_and_unit() {
        let a = truncated_poly(2, 2);
        let g = Algebra::ground_field(2);
        let t = a.tensor_algebra(&g).unwrap();
        assert_eq!(t.dim, a.dim);
        for i in 0..a.dim {
            for j in 0..a.dim {
                assert_eq!(t.mult_row(i, j), a.mult_row(i, j));
            }
        }
        let m = matrix_algebra(2, 2);
        let mm = m.tensor_algebra(&m.opposite()).unwrap();
        assert_eq!(mm.dim, 16);
        assert!(mm.is_central_simple());
    }

    #[test]
    fn regular_character_matches_left_traces() {
        let a = matrix_algebra(3, 2);
        let ch = a.regular_character();
        let f = Fp::new(3).unwrap();
        for i in 0..a.dim {
            let l = a.left_mult_basis(i);
            let mut tr = 0u8;
            for t in 0..a.dim {
                tr = f.add(tr, l.get(t, t));
            }
            assert_eq!(ch[i], tr);
        }
    }

    #[test]
    fn frobenius_data_on_group_like_symmetric_form() {
        // k[e]/(e^2 - 1) at p=3: basis 1, e with e^2 = 1; chi = coefficient
        // of e gives a symmetric nondegenerate form, so theta = id
        let p = 3;
        let d = 2;
        let mut mult = vec![0u8; 8];
        mult[0] = 1; // 1 * 1 = 1
        mult[d + 1] = 1;
        mult[d * d + 1] = 1;
        mult[(d + 1) * d] = 1;
        let a = Algebra::new(p, d, vec![1, 0], mult).unwrap();
        let fd = a.frobenius_data(&[0, 1]).unwrap();
        assert_eq!(fd.nakayama, FpMatrix::identity(p, d));
        assert_eq!(fd.order, 1);
    }

    #[test]
    fn degenerate_chi_rejected() {
        let a = truncated_poly(3, 3);
        // chi = dual of 1 has chi(e^2 * e) = 0 for the whole e-row: singular
        assert!(matches!(
            a.frobenius_data(&[1, 0, 0]),
            Err(AlgebraError::DegenerateForm)
        ));
        // chi = dual of the socle e^{p-1} is a Frobenius form
        assert!(a.frobenius_data(&[0, 0, 1]).is_ok());
    }

    #[test]
    fn closure_of_unit_and_empty() {
        let a = matrix_algebra(2, 2);
        let c = a.subalgebra_closure(&[a.unit_element()]);
        assert_eq!(c.len(), 1);
        let c = a.subalgebra_closure(&[]);
        assert_eq!(c.len(), 1);
        // E_{01} and E_{10} generate the whole matrix algebra
        let c = a.subalgebra_closure(&[a.basis_element(1), a.basis_element(2)]);
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn commutative_left_equals_right() {
        let a = truncated_poly(5, 4);
        for i in 0..a.dim {
            assert_eq!(a.left_mult_basis(i), a.right_mult_basis(i));
        }
    }
}
