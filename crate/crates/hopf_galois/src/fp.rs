//! Exact dense linear algebra over the prime field F_p, 2 <= p <= 251.
//!
//! Entries are canonical residues stored as `u8`. The elimination and
//! multiplication kernels accumulate in `u32` and reduce lazily: with
//! entries below p <= 251 a single update contributes at most 250*250,
//! so up to ~68000 updates fit in a `u32` before a reduction sweep is
//! needed. All pivoting is deterministic (first nonzero entry in column
//! order), so kernels, solutions and echelon forms are reproducible.
//!
//! Tensor index convention, fixed project-wide: the pair (i, j) with
//! i < dim_a, j < dim_b maps to the flat index `i * dim_b + j`. The
//! Kronecker product, vectorisation of matrices (row-major) and every
//! tensor-product basis in this crate follow it.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FpError {
    #[error("modulus {0} is not a prime in 2..=251")]
    NotPrime(u16),
    #[error("dimension mismatch: {0}")]
    Shape(String),
    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u16, u16),
}

fn is_prime(p: u16) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u16;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic context for F_p. Cheap to copy; checked prime at creation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u16,
}

impl Fp {
    pub fn new(p: u16) -> Result<Self, FpError> {
        if p < 2 || p > 251 || !is_prime(p) {
            return Err(FpError::NotPrime(p));
        }
        Ok(Fp { p })
    }

    #[inline]
    pub fn p(&self) -> u16 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a as u16 + b as u16;
        (if s >= self.p { s - self.p } else { s }) as u8
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        let s = a as i16 - b as i16;
        (if s < 0 { s + self.p as i16 } else { s }) as u8
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            (self.p - a as u16) as u8
        }
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.p as u32) as u8
    }

    pub fn pow(&self, a: u8, mut e: u64) -> u8 {
        let mut base = a % self.p as u8;
        let mut acc = 1u8;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: u8) -> u8 {
        assert!(a % self.p as u8 != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p as u64 - 2)
    }

    /// Canonical residue of a signed integer.
    #[inline]
    pub fn reduce_i64(&self, v: i64) -> u8 {
        let m = v.rem_euclid(self.p as i64);
        m as u8
    }
}

/// Scalar in F_p, kept as a canonical residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpScalar {
    pub value: u8,
}

/// Dense vector over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpVector {
    pub p: u16,
    pub data: Vec<u8>,
}

impl FpVector {
    pub fn zeros(p: u16, dim: usize) -> Self {
        FpVector { p, data: vec![0; dim] }
    }

    pub fn from_vec(p: u16, data: Vec<u8>) -> Self {
        debug_assert!(data.iter().all(|&x| (x as u16) < p));
        FpVector { p, data }
    }

    pub fn dim(&self) -> usize {
        self.data.len()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// v += c * w
    pub fn axpy(&mut self, c: u8, w: &FpVector) {
        let f = Fp { p: self.p };
        for (a, &b) in self.data.iter_mut().zip(w.data.iter()) {
            *a = f.add(*a, f.mul(c, b));
        }
    }
}

/// Dense row-major matrix over F_p.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    pub p: u16,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u8>,
}

/// Result of a (reduced) row echelon computation.
#[derive(Debug, Clone)]
pub struct Echelon {
    /// Reduced row echelon form of the input (or of [input | augment]).
    pub rref: FpMatrix,
    /// Pivot column indices in increasing order.
    pub pivot_cols: Vec<usize>,
    /// Rank of the non-augmented part.
    pub rank: usize,
}

impl FpMatrix {
    pub fn zeros(p: u16, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u16, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(p: u16, rows: &[Vec<u8>]) -> Self {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend_from_slice(row);
        }
        debug_assert!(data.iter().all(|&x| (x as u16) < p));
        FpMatrix { p, rows: r, cols: c, data }
    }

    pub fn from_fn(p: u16, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u8) -> Self {
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    /// Column vector from a slice.
    pub fn column_vec(p: u16, v: &[u8]) -> Self {
        FpMatrix { p, rows: v.len(), cols: 1, data: v.to_vec() }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = v;
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FpMatrix {
        let mut t = FpMatrix::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = Fp { p: self.p };
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = Fp { p: self.p };
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u8) -> FpMatrix {
        let f = Fp { p: self.p };
        let data = self.data.iter().map(|&a| f.mul(c, a)).collect();
        FpMatrix { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    /// Matrix product, u32-accumulated with lazy reduction.
    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "matmul shape mismatch");
        assert_eq!(self.p, other.p);
        let p = self.p as u32;
        let (m, _k, n) = (self.rows, self.cols, other.cols);
        let mut out = FpMatrix::zeros(self.p, m, n);
        // number of accumulations that fit in u32 without overflow
        let budget = (u32::MAX / ((p - 1) * (p - 1)).max(1)) as usize;
        let mut acc: Vec<u32> = vec![0; n];
        for i in 0..m {
            acc.iter_mut().for_each(|x| *x = 0);
            let arow = self.row(i);
            let mut used = 0usize;
            for (kk, &a) in arow.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let av = a as u32;
                let brow = &other.data[kk * n..(kk + 1) * n];
                for (x, &b) in acc.iter_mut().zip(brow.iter()) {
                    *x = x.wrapping_add(av * b as u32);
                }
                used += 1;
                if used >= budget {
                    acc.iter_mut().for_each(|x| *x %= p);
                    used = 0;
                }
            }
            let orow = &mut out.data[i * n..(i + 1) * n];
            for (o, &x) in orow.iter_mut().zip(acc.iter()) {
                *o = (x % p) as u8;
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u32;
        let mut out = vec![0u8; self.rows];
        for i in 0..self.rows {
            let mut acc: u64 = 0;
            for (a, &b) in self.row(i).iter().zip(v.iter()) {
                acc += *a as u64 * b as u64;
            }
            out[i] = (acc % p as u64) as u8;
        }
        out
    }

    /// Kronecker product with the (i, j) -> i*dim_b + j index convention.
    pub fn kron(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.p, other.p);
        let f = Fp { p: self.p };
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = FpMatrix::zeros(self.p, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for r in 0..other.rows {
                    for c in 0..other.cols {
                        let b = other.get(r, c);
                        if b == 0 {
                            continue;
                        }
                        out.set(i * other.rows + r, j * other.cols + c, f.mul(a, b));
                    }
                }
            }
        }
        out
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        FpMatrix { p: self.p, rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows);
        let mut out = FpMatrix::zeros(self.p, self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            let dst = &mut out.data[i * out.cols..i * out.cols + self.cols];
            dst.copy_from_slice(self.row(i));
            let dst = &mut out.data[i * out.cols + self.cols..(i + 1) * out.cols];
            dst.copy_from_slice(other.row(i));
        }
        out
    }

    /// Reduced row echelon form; `aug` marks how many trailing columns are an
    /// augmented block excluded from pivot selection.
    pub fn rref_augmented(&self, aug: usize) -> Echelon {
        let p = self.p as u32;
        let f = Fp { p: self.p };
        let ncols = self.cols;
        let lim = ncols - aug;
        // u32 working copy, lazy reduction
        let mut w: Vec<u32> = self.data.iter().map(|&x| x as u32).collect();
        let nrows = self.rows;
        let growth = ((p - 1) * (p - 1)).max(1);
        let budget = (u32::MAX / growth) as usize;
        let mut updates_since_reduce = 0usize;
        let mut pivot_cols = Vec::new();
        let mut rank = 0usize;
        for col in 0..lim {
            // first row at or below `rank` with a nonzero entry in this column
            let mut sel = None;
            for r in rank..nrows {
                if w[r * ncols + col] % p != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(r) = sel else { continue };
            wry_swap(&mut w, ncols, rank, r);
            // normalise pivot row to canonical residues with leading 1
            {
                let prow = &mut w[rank * ncols..(rank + 1) * ncols];
                let pivval = (prow[col] % p) as u8;
                let inv = f.inv(pivval) as u32;
                for x in prow.iter_mut() {
                    *x = (*x % p * inv) % p;
                }
            }
            let (before, rest) = w.split_at_mut(rank * ncols);
            let (prow, after) = rest.split_at_mut(ncols);
            // eliminate below
            for rr in 0..(nrows - rank - 1) {
                let row = &mut after[rr * ncols..(rr + 1) * ncols];
                let v = row[col] % p;
                if v == 0 {
                    continue;
                }
                let fmul = p - v;
                axpy_u32(&mut row[col..], &prow[col..], fmul);
            }
            // eliminate above (Jordan), rows are kept reduced lazily as well
            for rr in 0..rank {
                let row = &mut before[rr * ncols..(rr + 1) * ncols];
                let v = row[col] % p;
                if v == 0 {
                    continue;
                }
                let fmul = p - v;
                axpy_u32(&mut row[col..], &prow[col..], fmul);
            }
            updates_since_reduce += 1;
            if updates_since_reduce >= budget {
                w.iter_mut().for_each(|x| *x %= p);
                updates_since_reduce = 0;
            }
            pivot_cols.push(col);
            rank += 1;
            if rank == nrows {
                break;
            }
        }
        let data: Vec<u8> = w.into_iter().map(|x| (x % p) as u8).collect();
        Echelon {
            rref: FpMatrix { p: self.p, rows: nrows, cols: ncols, data },
            pivot_cols,
            rank,
        }
    }

    /// Row rank by forward elimination only (cheaper than full RREF).
    pub fn rank(&self) -> usize {
        let p = self.p as u32;
        let f = Fp { p: self.p };
        let ncols = self.cols;
        let nrows = self.rows;
        let mut w: Vec<u32> = self.data.iter().map(|&x| x as u32).collect();
        let growth = ((p - 1) * (p - 1)).max(1);
        let budget = (u32::MAX / growth) as usize;
        let mut updates = 0usize;
        let mut rank = 0usize;
        for col in 0..ncols {
            let mut sel = None;
            for r in rank..nrows {
                if w[r * ncols + col] % p != 0 {
                    sel = Some(r);
                    break;
                }
            }
            let Some(r) = sel else { continue };
            wry_swap(&mut w, ncols, rank, r);
            {
                let prow = &mut w[rank * ncols + col..(rank + 1) * ncols];
                let inv = f.inv((prow[0] % p) as u8) as u32;
                for x in prow.iter_mut() {
                    *x = (*x % p * inv) % p;
                }
            }
            let (rest0, after) = w.split_at_mut((rank + 1) * ncols);
            let prow = &rest0[rank * ncols + col..];
            for rr in 0..(nrows - rank - 1) {
                let row = &mut after[rr * ncols..(rr + 1) * ncols];
                let v = row[col] % p;
                if v == 0 {
                    continue;
                }
                axpy_u32(&mut row[col..], prow, p - v);
            }
            updates += 1;
            if updates >= budget {
                w.iter_mut().for_each(|x| *x %= p);
                updates = 0;
            }
            rank += 1;
            if rank == nrows {
                break;
            }
        }
        rank
    }

    /// Solve self * X = b for any solution X (free variables zero, echelon
    /// order). Returns `None` when the system is inconsistent.
    pub fn solve(&self, b: &FpMatrix) -> Option<FpMatrix> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        assert_eq!(self.p, b.p);
        let aug = self.hstack(b);
        let ech = aug.rref_augmented(b.cols);
        // consistency: rows beyond rank must have a zero augmented part
        for r in ech.rank..self.rows {
            for c in self.cols..aug.cols {
                if ech.rref.get(r, c) != 0 {
                    return None;
                }
            }
        }
        let mut x = FpMatrix::zeros(self.p, self.cols, b.cols);
        for (r, &pc) in ech.pivot_cols.iter().enumerate() {
            for c in 0..b.cols {
                x.set(pc, c, ech.rref.get(r, self.cols + c));
            }
        }
        Some(x)
    }

    /// Basis of the right kernel {x : self x = 0}, ordered by the index of
    /// the pivot-free column each vector normalises.
    pub fn kernel_basis(&self) -> Vec<FpVector> {
        let ech = self.rref_augmented(0);
        let f = Fp { p: self.p };
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivot_cols {
            is_pivot[c] = true;
        }
        let mut basis = Vec::with_capacity(self.cols - ech.rank);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut v = vec![0u8; self.cols];
            v[free] = 1;
            for (r, &pc) in ech.pivot_cols.iter().enumerate() {
                v[pc] = f.neg(ech.rref.get(r, free));
            }
            basis.push(FpVector::from_vec(self.p, v));
        }
        basis
    }

    /// Exact inverse, or `None` when singular. Panics on non-square input.
    pub fn inverse(&self) -> Option<FpMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of non-square matrix");
        let n = self.rows;
        let aug = self.hstack(&FpMatrix::identity(self.p, n));
        let ech = aug.rref_augmented(n);
        if ech.rank < n {
            return None;
        }
        let mut inv = FpMatrix::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, ech.rref.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Flatten row-major into a vector (the project-wide vec convention).
    pub fn vec_flat(&self) -> Vec<u8> {
        self.data.clone()
    }
}

#[inline]
fn wry_swap(w: &mut [u32], ncols: usize, a: usize, b: usize) {
    if a == b {
        return;
    }
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let (first, second) = w.split_at_mut(hi * ncols);
    first[lo * ncols..(lo + 1) * ncols].swap_with_slice(&mut second[..ncols]);
}

#[inline]
fn axpy_u32(dst: &mut [u32], src: &[u32], f: u32) {
    // src rows are normalised (< p); dst accumulates lazily
    for (d, &s) in dst.iter_mut().zip(src.iter()) {
        *d = d.wrapping_add(f * s);
    }
}

/// Full-column-rank spanning set with fast membership / coordinate queries.
///
/// Columns of `cols` are the spanning vectors. `coords` finds the unique
/// coefficient vector expressing `v` in them, or `None` if `v` lies outside
/// the span.
#[derive(Debug, Clone)]
pub struct SpanBasis {
    pub cols: FpMatrix,
    sel_rows: Vec<usize>,
    inv_sel: FpMatrix,
}

impl SpanBasis {
    /// Build from column vectors; fails if they are linearly dependent.
    pub fn new(cols: FpMatrix) -> Result<Self, FpError> {
        let k = cols.cols;
        let ech = cols.transpose().rref_augmented(0);
        if ech.rank < k {
            return Err(FpError::Shape(format!(
                "span basis: {} columns of rank {}",
                k, ech.rank
            )));
        }
        let sel_rows = ech.pivot_cols.clone();
        let mut sel = FpMatrix::zeros(cols.p, k, k);
        for (i, &r) in sel_rows.iter().enumerate() {
            for j in 0..k {
                sel.set(i, j, cols.get(r, j));
            }
        }
        let inv_sel = sel.inverse().expect("pivot rows form an invertible block");
        Ok(SpanBasis { cols, sel_rows, inv_sel })
    }

    pub fn dim(&self) -> usize {
        self.cols.cols
    }

    pub fn ambient_dim(&self) -> usize {
        self.cols.rows
    }

    /// Coordinates of `v` in the spanning columns, if `v` is in the span.
    pub fn coords(&self, v: &[u8]) -> Option<Vec<u8>> {
        assert_eq!(v.len(), self.cols.rows);
        let rhs: Vec<u8> = self.sel_rows.iter().map(|&r| v[r]).collect();
        let c = self.inv_sel.mul_vec(&rhs);
        let back = self.cols.mul_vec(&c);
        if back == v {
            Some(c)
        } else {
            None
        }
    }

    pub fn contains(&self, v: &[u8]) -> bool {
        self.coords(v).is_some()
    }
}

/// Canonical form (RREF rows) of the span of the given row vectors; two
/// subspaces are equal iff their canonical forms are equal.
pub fn row_space_canonical(m: &FpMatrix) -> FpMatrix {
    let ech = m.rref_augmented(0);
    let mut rows = Vec::with_capacity(ech.rank);
    for r in 0..ech.rank {
        rows.push(ech.rref.row(r).to_vec());
    }
    FpMatrix::from_rows(m.p, &rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u16, rows: &[&[u8]]) -> FpMatrix {
        FpMatrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn primes_accepted_and_rejected() {
        assert!(Fp::new(2).is_ok());
        assert!(Fp::new(251).is_ok());
        assert_eq!(Fp::new(4).unwrap_err(), FpError::NotPrime(4));
        assert_eq!(Fp::new(1).unwrap_err(), FpError::NotPrime(1));
        assert_eq!(Fp::new(255).unwrap_err(), FpError::NotPrime(255));
    }

    #[test]
    fn rank_identity_zero_and_dependent_rows() {
        assert_eq!(FpMatrix::identity(3, 2).rank(), 2);
        assert_eq!(FpMatrix::zeros(2, 3, 3).rank(), 0);
        // second row is twice the first mod 5
        assert_eq!(m(5, &[&[1, 2], &[2, 4]]).rank(), 1);
    }

    #[test]
    fn solve_identity_inconsistent_and_degenerate() {
        let a = FpMatrix::identity(3, 2);
        let b = m(3, &[&[1], &[2]]);
        assert_eq!(a.solve(&b).unwrap(), b);

        let a = m(3, &[&[1, 1], &[2, 2]]);
        let b = m(3, &[&[0], &[1]]);
        assert!(a.solve(&b).is_none());

        let a = m(2, &[&[0]]);
        let b = m(2, &[&[0]]);
        assert_eq!(a.solve(&b).unwrap(), m(2, &[&[0]]));
    }

    #[test]
    fn kernels() {
        assert!(FpMatrix::identity(5, 2).kernel_basis().is_empty());
        let z = FpMatrix::zeros(2, 1, 3);
        let k = z.kernel_basis();
        assert_eq!(k.len(), 3);
        assert_eq!(k[0].data, vec![1, 0, 0]);
        assert_eq!(k[1].data, vec![0, 1, 0]);
        assert_eq!(k[2].data, vec![0, 0, 1]);
        // x0 + 2 x1 = 0 mod 3 has basis (1, 1)
        let k = m(3, &[&[1, 2]]).kernel_basis();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].data, vec![1, 1]);
    }

    #[test]
    fn inverses() {
        let i4 = FpMatrix::identity(7, 4);
        assert_eq!(i4.inverse().unwrap(), i4);
        // 2 * 3 = 6 = 1 mod 5
        assert_eq!(m(5, &[&[2]]).inverse().unwrap(), m(5, &[&[3]]));
        assert!(m(2, &[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn kron_cases() {
        let i2 = FpMatrix::identity(3, 2);
        let i3 = FpMatrix::identity(3, 3);
        assert_eq!(i2.kron(&i3), FpMatrix::identity(3, 6));
        let a = m(3, &[&[0, 1], &[0, 0]]);
        let s = m(3, &[&[2]]);
        assert_eq!(s.kron(&a), a.scale(2));
        assert_eq!(a.kron(&s), m(3, &[&[0, 2], &[0, 0]]));
    }

    #[test]
    fn rank_plus_nullity() {
        let a = m(5, &[&[1, 2, 3], &[2, 4, 1], &[0, 0, 4]]);
        assert_eq!(a.rank() + a.kernel_basis().len(), a.cols);
    }

    #[test]
    fn solve_consistency_checked_exactly() {
        let a = m(7, &[&[1, 2, 3], &[2, 4, 6]]);
        let b = m(7, &[&[1], &[2]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul(&x), b);
    }

    #[test]
    fn span_basis_coords() {
        let cols = m(5, &[&[1, 0], &[2, 1], &[0, 3]]);
        let sb = SpanBasis::new(cols).unwrap();
        assert_eq!(sb.coords(&[1, 2, 0]).unwrap(), vec![1, 0]);
        assert_eq!(sb.coords(&[2, 0, 1]), None);
        // 3*(1,2,0) + 1*(0,1,3) = (3, 2, 3) mod 5
        let c = sb.coords(&[3, 2, 3]).unwrap();
        assert_eq!(c, vec![3, 1]);
        let back = sb.cols.mul_vec(&c);
        assert_eq!(back, vec![3, 2, 3]);
    }

    #[test]
    fn lazy_reduction_survives_many_updates() {
        // 300x300 over p=251 exercises the budget-based reduction sweeps
        let p = 251u16;
        let n = 300usize;
        let mut a = FpMatrix::zeros(p, n, n);
        let mut s = 17u64;
        for v in a.data.iter_mut() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            *v = ((s >> 33) % p as u64) as u8;
        }
        let r = a.rank();
        // almost surely full rank; at minimum the inverse agrees when it exists
        if r == n {
            let inv = a.inverse().unwrap();
            assert_eq!(a.mul(&inv), FpMatrix::identity(p, n));
        } else {
            assert_eq!(r + a.kernel_basis().len(), n);
        }
    }
}
