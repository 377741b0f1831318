//! Built-in Lie algebra fixtures used by the CLI, the examples and the
//! test suites.

use crate::fp::FpMatrix;
use crate::lie::{LinearForm, RestrictedLie};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture name `{0}`")]
    UnknownName(String),
    #[error("parameter constraint violated: {0}")]
    Constraint(String),
}

/// Zero Lie algebra.
pub fn zero(p: u16) -> RestrictedLie {
    RestrictedLie::new(p, 0, vec![], vec![])
}

/// Abelian Lie algebra with zero [p]-map.
pub fn abelian(p: u16, n: usize) -> RestrictedLie {
    RestrictedLie::new(p, n, vec![0; n * n * n], vec![0; n * n])
}

/// Two-dimensional algebra with [e_0, e_1] = e_1, e_0^{[p]} = e_0,
/// e_1^{[p]} = 0. Its standard form is xi = (0, 1).
pub fn example1(p: u16) -> RestrictedLie {
    let n = 2usize;
    let mut bracket = vec![0u8; n * n * n];
    bracket[n + 1] = 1;
    bracket[n * n + 1] = (p - 1) as u8;
    let mut pmap = vec![0u8; n * n];
    pmap[0] = 1;
    RestrictedLie::new(p, n, bracket, pmap)
}

pub fn example1_xi(p: u16) -> LinearForm {
    let _ = p;
    LinearForm { xi: vec![0, 1] }
}

/// Four-dimensional algebra with [e_0,e_1] = a e_1, [e_0,e_2] = b e_2,
/// [e_0,e_3] = (a+b) e_3, [e_1,e_2] = e_3, e_0^{[p]} = e_0 and all other
/// [p]-images zero. Requires a + b != 0 mod p. Standard form: xi = (0,0,0,1).
pub fn example2(p: u16, a: u8, b: u8) -> Result<RestrictedLie, FixtureError> {
    let a = (a as u16 % p) as u8;
    let b = (b as u16 % p) as u8;
    if (a as u16 + b as u16) % p == 0 {
        return Err(FixtureError::Constraint(format!(
            "a + b = {} + {} vanishes mod {p}",
            a, b
        )));
    }
    let n = 4usize;
    let neg = |v: u8| if v == 0 { 0 } else { (p - v as u16) as u8 };
    let mut bracket = vec![0u8; n * n * n];
    let mut set = |i: usize, j: usize, l: usize, c: u8| {
        bracket[(i * n + j) * n + l] = c;
        bracket[(j * n + i) * n + l] = neg(c);
    };
    set(0, 1, 1, a);
    set(0, 2, 2, b);
    set(0, 3, 3, ((a as u16 + b as u16) % p) as u8);
    set(1, 2, 3, 1);
    let mut pmap = vec![0u8; n * n];
    pmap[0] = 1;
    Ok(RestrictedLie::new(p, n, bracket, pmap))
}

pub fn example2_xi(p: u16) -> LinearForm {
    let _ = p;
    LinearForm { xi: vec![0, 0, 0, 1] }
}

/// The exponents c, d with b + c(a+b) = 0 and a + d(a+b) = 0 mod p used by
/// the closed-form tables for the four-dimensional fixture.
pub fn example2_cd(p: u16, a: u8, b: u8) -> (u8, u8) {
    let f = crate::fp::Fp::new(p).expect("prime modulus");
    let s = f.add(a, b);
    let sinv = f.inv(s);
    let c = f.neg(f.mul(b, sinv));
    let d = f.neg(f.mul(a, sinv));
    debug_assert_eq!(f.add(f.add(c, d), 1), 0, "c + d + 1 = 0 mod p");
    (c, d)
}

/// The p-dimensional irreducible module of U_xi(g) for the two-dimensional
/// fixture with xi = (0, 1), induced from the one-dimensional module of the
/// subalgebra spanned by e_1 on which e_1 acts as 1. Basis w_i = e_0^i (x) 1:
/// e_0 shifts w_i -> w_{i+1} with w_{p-1} -> w_1 (since e_0^p = e_0), and
/// e_1 w_i = (e_0 - 1)^i (x) 1 expands binomially.
pub fn example1_pdim_module(p: u16) -> Vec<FpMatrix> {
    let f = crate::fp::Fp::new(p).expect("prime modulus");
    let m = p as usize;
    let mut rho0 = FpMatrix::zeros(p, m, m);
    for i in 0..m {
        let target = if i + 1 < m { i + 1 } else { 1 };
        rho0.set(target, i, 1);
    }
    // binomial coefficients mod p
    let mut binom = vec![vec![0u8; m]; m];
    for i in 0..m {
        binom[i][0] = 1;
        for j in 1..=i {
            binom[i][j] = f.add(binom[i - 1][j - 1], if j <= i - 1 { binom[i - 1][j] } else { 0 });
        }
    }
    let mut rho1 = FpMatrix::zeros(p, m, m);
    for i in 0..m {
        for j in 0..=i {
            // (e_0 - 1)^i = sum_j C(i,j) (-1)^{i-j} e_0^j
            let sign = if (i - j) % 2 == 0 { 1u8 } else { (p - 1) as u8 };
            rho1.set(j, i, f.mul(binom[i][j], sign));
        }
    }
    vec![rho0, rho1]
}

/// Resolve a fixture by name with optional parameters.
pub fn by_name(
    name: &str,
    p: u16,
    a: Option<u8>,
    b: Option<u8>,
    dim: Option<usize>,
) -> Result<(RestrictedLie, LinearForm), FixtureError> {
    match name {
        "example1" => Ok((example1(p), example1_xi(p))),
        "example2" => {
            let a = a.ok_or_else(|| FixtureError::Constraint("example2 needs --a".into()))?;
            let b = b.ok_or_else(|| FixtureError::Constraint("example2 needs --b".into()))?;
            Ok((example2(p, a, b)?, example2_xi(p)))
        }
        "abelian" => {
            let n = dim.unwrap_or(1);
            Ok((abelian(p, n), LinearForm { xi: vec![0; n] }))
        }
        "zero" => Ok((zero(p), LinearForm { xi: vec![] })),
        other => Err(FixtureError::UnknownName(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example2_rejects_degenerate_parameters() {
        assert!(example2(3, 1, 2).is_err());
        assert!(example2(2, 1, 1).is_err());
        assert!(example2(3, 1, 1).is_ok());
        assert!(example2(2, 1, 0).is_ok());
    }

    #[test]
    fn example2_cd_values() {
        assert_eq!(example2_cd(2, 1, 0), (0, 1));
        assert_eq!(example2_cd(3, 1, 1), (1, 1));
    }

    #[test]
    fn pdim_module_satisfies_uxi_relations() {
        for p in [2u16, 3, 5] {
            let rho = example1_pdim_module(p);
            let m = p as usize;
            // [rho0, rho1] = rho1
            let comm = rho[0].mul(&rho[1]).sub(&rho[1].mul(&rho[0]));
            assert_eq!(comm, rho[1], "bracket fails at p={p}");
            // rho0^p = rho0 (e_0^p = e_0) and rho1^p = 1 (e_1^p = 1)
            let mut a = rho[0].clone();
            for _ in 1..p {
                a = a.mul(&rho[0]);
            }
            assert_eq!(a, rho[0]);
            let mut b = rho[1].clone();
            for _ in 1..p {
                b = b.mul(&rho[1]);
            }
            assert_eq!(b, FpMatrix::identity(p, m));
        }
    }
}
