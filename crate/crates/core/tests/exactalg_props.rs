mod common;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use walkspec::exactalg::{
    det, factorize, inverse_rational, is_prime_u64, level, rank_mod_p, smith_normal_form, IntMatrix, ModMatrix,
};

use common::{laplace_det, random_rows, rng, to_matrix};

const PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

/// 1000 random non-singular matrices of order 1..=6 with entries in [-9, 9].
fn corpus() -> Vec<Vec<Vec<i64>>> {
    let mut r = rng(0x5eed);
    let mut out = Vec::new();
    while out.len() < 1000 {
        let n = 1 + out.len() % 6;
        let rows = random_rows(&mut r, n, -9, 9);
        if !laplace_det(&rows).is_zero() {
            out.push(rows);
        }
    }
    out
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    for rows in corpus() {
        let m = to_matrix(&rows);
        assert_eq!(det(&m).unwrap(), laplace_det(&rows), "{rows:?}");
    }
    // singular matrices too
    let mut r = rng(7);
    for n in 1..=5 {
        for _ in 0..50 {
            let mut rows = random_rows(&mut r, n, -2, 2);
            if n > 1 {
                rows[n - 1] = rows[0].iter().zip(&rows[1]).map(|(a, b)| 2 * a - b).collect();
            }
            assert_eq!(det(&to_matrix(&rows)).unwrap(), laplace_det(&rows));
        }
    }
}

#[test]
fn smith_form_invariants() {
    for rows in corpus() {
        let m = to_matrix(&rows);
        let snf = smith_normal_form(&m).unwrap();
        let d = &snf.invariants;
        assert!(d.iter().all(|x| x.is_positive()));
        for w in d.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]), "divisibility chain broken: {d:?}");
        }
        let product: BigInt = d.iter().product();
        assert_eq!(product, laplace_det(&rows).abs());
        assert_eq!(snf.reconstruct(), m);
        assert_eq!(snf.left.mul(&snf.diagonal()).unwrap().mul(&snf.right).unwrap(), m);
        assert_eq!(laplace_det(&rows_of(&snf.left)).abs(), BigInt::one());
        assert_eq!(laplace_det(&rows_of(&snf.right)).abs(), BigInt::one());
    }
}

fn rows_of(m: &IntMatrix) -> Vec<Vec<i64>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|x| i64::try_from(x).unwrap()).collect()).collect()
}

#[test]
fn rank_mod_p_counts_invariant_factors() {
    for rows in corpus() {
        let m = to_matrix(&rows);
        let snf = smith_normal_form(&m).unwrap();
        for p in PRIMES {
            let pb = BigInt::from(p);
            let expected = m.rows() - snf.invariants.iter().filter(|d| d.is_multiple_of(&pb)).count();
            assert_eq!(rank_mod_p(&m, p), expected, "p = {p}, {rows:?}");
        }
    }
}

#[test]
fn inverse_and_level() {
    for rows in corpus() {
        let m = to_matrix(&rows);
        let inv = inverse_rational(&m).unwrap();
        assert!(m.to_rational().mul(&inv).unwrap().is_identity());
        assert!(inv.mul(&m.to_rational()).unwrap().is_identity());
        // the denominators of M^-1 have lcm equal to the last invariant factor
        let snf = smith_normal_form(&m).unwrap();
        assert_eq!(&level(&inv), snf.last());
        assert!(inv.scaled_to_integer(snf.last()).is_some());
    }
}

#[test]
fn kernel_vectors_annihilate() {
    let mut r = rng(99);
    for _ in 0..200 {
        let rows = random_rows(&mut r, 5, 0, 12);
        let m = to_matrix(&rows);
        for p in PRIMES {
            let mm = ModMatrix::reduce(&m, p);
            let kernel = mm.kernel();
            assert_eq!(kernel.len() + mm.rank(), 5);
            for v in kernel {
                for row in &rows {
                    let s: i64 = row.iter().zip(&v).map(|(a, &b)| a * b as i64).sum();
                    assert_eq!(s.rem_euclid(p as i64), 0);
                }
            }
        }
    }
}

#[test]
fn primality_matches_sieve() {
    let limit = 20_000usize;
    let mut sieve = vec![true; limit];
    sieve[0] = false;
    sieve[1] = false;
    for i in 2..limit {
        if sieve[i] {
            for j in (i * i..limit).step_by(i) {
                sieve[j] = false;
            }
        }
    }
    for (n, &is_p) in sieve.iter().enumerate() {
        assert_eq!(is_prime_u64(n as u64), is_p, "{n}");
    }
}

proptest! {
    #[test]
    fn factorization_multiplies_back(n in 1u64..=u64::MAX) {
        let f = factorize(&BigUint::from(n));
        prop_assert_eq!(f.value(), BigUint::from(n));
        for p in f.primes() {
            prop_assert!(walkspec::exactalg::is_prime(p));
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in prop::collection::vec(-5i64..=5, 16), b in prop::collection::vec(-5i64..=5, 16)) {
        let ma = IntMatrix::new(4, 4, a.into_iter().map(BigInt::from).collect()).unwrap();
        let mb = IntMatrix::new(4, 4, b.into_iter().map(BigInt::from).collect()).unwrap();
        prop_assert_eq!(det(&ma.mul(&mb).unwrap()).unwrap(), det(&ma).unwrap() * det(&mb).unwrap());
    }
}
