//! Property-based checks of the exact linear algebra substrate.

use hopf_galois::fp::FpMatrix;
use proptest::prelude::*;

fn arb_matrix(p: u16, max: usize) -> impl Strategy<Value = FpMatrix> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        proptest::collection::vec(0..p as u8, r * c)
            .prop_map(move |data| FpMatrix { p, rows: r, cols: c, data })
    })
}

fn primes() -> impl Strategy<Value = u16> {
    prop_oneof![Just(2u16), Just(3), Just(5), Just(7), Just(251)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_plus_nullity_is_width(p in primes(), seed in any::<u64>()) {
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1); (s >> 33) as usize };
        let rows = next() % 6 + 1;
        let cols = next() % 6 + 1;
        let m = FpMatrix::from_fn(p, rows, cols, |_, _| (next() % p as usize) as u8);
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), cols);
    }

    #[test]
    fn solve_is_exact_on_consistent_systems(p in primes(), a in (2u16..8).prop_flat_map(|_| Just(())), seed in any::<u64>()) {
        let _ = a;
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(2862933555777941757).wrapping_add(3037000493); (s >> 33) as usize };
        let rows = next() % 5 + 1;
        let cols = next() % 5 + 1;
        let m = FpMatrix::from_fn(p, rows, cols, |_, _| (next() % p as usize) as u8);
        let x = FpMatrix::from_fn(p, cols, 2, |_, _| (next() % p as usize) as u8);
        let b = m.mul(&x);
        let sol = m.solve(&b).expect("consistent");
        prop_assert_eq!(m.mul(&sol), b);
    }

    #[test]
    fn inverse_is_two_sided(m in arb_matrix(5, 5)) {
        if m.rows == m.cols {
            if let Some(inv) = m.inverse() {
                prop_assert_eq!(m.mul(&inv), FpMatrix::identity(5, m.rows));
                prop_assert_eq!(inv.mul(&m), FpMatrix::identity(5, m.rows));
            }
        }
    }

    #[test]
    fn kron_respects_composition(seed in any::<u64>(), p in primes()) {
        let mut s = seed;
        let mut next = || { s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); (s >> 33) as usize };
        let (m, k, n) = (next() % 3 + 1, next() % 3 + 1, next() % 3 + 1);
        let (q, r, t) = (next() % 3 + 1, next() % 3 + 1, next() % 3 + 1);
        let a = FpMatrix::from_fn(p, m, k, |_, _| (next() % p as usize) as u8);
        let c = FpMatrix::from_fn(p, k, n, |_, _| (next() % p as usize) as u8);
        let b = FpMatrix::from_fn(p, q, r, |_, _| (next() % p as usize) as u8);
        let d = FpMatrix::from_fn(p, r, t, |_, _| (next() % p as usize) as u8);
        prop_assert_eq!(a.kron(&b).mul(&c.kron(&d)), a.mul(&c).kron(&b.mul(&d)));
    }

    #[test]
    fn kernel_vectors_annihilate(m in arb_matrix(3, 6)) {
        for v in m.kernel_basis() {
            prop_assert!(m.mul_vec(&v.data).iter().all(|&c| c == 0));
        }
    }
}
