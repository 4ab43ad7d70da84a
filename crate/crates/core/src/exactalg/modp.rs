//! Linear algebra over the prime field F_p.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::matrix::IntMatrix;
use super::primes::is_prime_u64;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Least non-negative residue of `x` modulo `p`.
pub fn residue(x: &BigInt, p: u64) -> u64 {
    x.mod_floor(&BigInt::from(p)).to_u64().expect("residue fits in u64")
}

/// Dense matrix reduced modulo a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModMatrix {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl ModMatrix {
    pub fn reduce(m: &IntMatrix, p: u64) -> Self {
        debug_assert!(is_prime_u64(p), "{p} is not prime");
        Self { p, rows: m.rows(), cols: m.cols(), data: m.entries().iter().map(|x| residue(x, p)).collect() }
    }

    fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(&mut self) -> Vec<usize> {
        let p = self.p;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.at(i, c) != 0) else { continue };
            for j in 0..self.cols {
                self.data.swap(r * self.cols + j, pr * self.cols + j);
            }
            let inv = inv_mod(self.at(r, c), p);
            for j in 0..self.cols {
                self.data[r * self.cols + j] = mul_mod(self.data[r * self.cols + j], inv, p);
            }
            for i in 0..self.rows {
                let f = self.at(i, c);
                if i == r || f == 0 {
                    continue;
                }
                for j in 0..self.cols {
                    let sub = mul_mod(f, self.data[r * self.cols + j], p);
                    let x = &mut self.data[i * self.cols + j];
                    *x = (*x + p - sub) % p;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().row_reduce().len()
    }

    /// Basis of the right null space `{x : M x = 0}` over F_p.
    pub fn kernel(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut red = self.clone();
        let pivots = red.row_reduce();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; self.cols];
                v[f] = 1;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = (p - red.at(r, f)) % p;
                }
                v
            })
            .collect()
    }
}

/// Rank of `m` reduced entrywise modulo the prime `p`.
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    ModMatrix::reduce(m, p).rank()
}

/// Rank modulo a prime of any size; machine-word primes take the fast path.
pub fn rank_mod_prime(m: &IntMatrix, p: &BigUint) -> usize {
    if let Some(small) = p.to_u64() {
        return rank_mod_p(m, small);
    }
    let p = BigInt::from(p.clone());
    let exp = &p - 2;
    let mut a: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| m.row(i).iter().map(|x| x.mod_floor(&p)).collect()).collect();
    let mut rank = 0;
    for c in 0..m.cols() {
        let Some(pr) = (rank..a.len()).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(rank, pr);
        let inv = a[rank][c].modpow(&exp, &p);
        for i in rank + 1..a.len() {
            if a[i][c].is_zero() {
                continue;
            }
            let f = (&a[i][c] * &inv).mod_floor(&p);
            for j in c..m.cols() {
                let v = (&a[i][j] - &f * &a[rank][j]).mod_floor(&p);
                a[i][j] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// True when two integer vectors span the same line over F_p (both non-zero
/// modulo `p`): every 2x2 cross product vanishes.
pub fn same_line_mod_p(a: &[BigInt], b: &[BigInt], p: u64) -> bool {
    let a: Vec<u64> = a.iter().map(|x| residue(x, p)).collect();
    let b: Vec<u64> = b.iter().map(|x| residue(x, p)).collect();
    if a.len() != b.len() || a.iter().all(|&x| x == 0) || b.iter().all(|&x| x == 0) {
        return false;
    }
    let i = a.iter().position(|&x| x != 0).unwrap();
    (0..a.len()).all(|j| mul_mod(a[i], b[j], p) == mul_mod(a[j], b[i], p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_rank() {
        assert_eq!(rank_mod_p(&IntMatrix::identity(9), 11), 9);
    }

    #[test]
    fn rank_drops_modulo_divisors_of_det() {
        let m = IntMatrix::diagonal(&[1, 3, 9]);
        assert_eq!(rank_mod_p(&m, 3), 1);
        assert_eq!(rank_mod_p(&m, 2), 3);
        let m = IntMatrix::from_rows(&[[1, 2], [3, 4]]).unwrap();
        assert_eq!(rank_mod_p(&m, 2), 1);
        assert_eq!(rank_mod_p(&m, 5), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6], [1, 0, 1]]).unwrap();
        let mm = ModMatrix::reduce(&m, 7);
        let ker = mm.kernel();
        assert_eq!(ker.len(), 3 - mm.rank());
        for v in ker {
            for i in 0..3 {
                let s: u64 = (0..3).map(|j| mm.at(i, j) * v[j]).sum::<u64>() % 7;
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn big_prime_rank_matches_word_path() {
        let m = IntMatrix::from_rows(&[[1, 2, 3], [4, 5, 6], [7, 8, 10]]).unwrap();
        for p in [2u64, 3, 5, 7] {
            assert_eq!(rank_mod_prime(&m, &BigUint::from(p)), rank_mod_p(&m, p));
        }
        let huge = (BigUint::from(1u32) << 127u32) - 1u32;
        assert_eq!(rank_mod_prime(&m, &huge), 3);
        let scaled = m.scale(&BigInt::from(huge.clone()));
        assert_eq!(rank_mod_prime(&scaled, &huge), 0);
    }

    #[test]
    fn lines_modulo_p() {
        let a: Vec<BigInt> = [1, 2, 0].iter().map(|&x| BigInt::from(x)).collect();
        let b: Vec<BigInt> = [2, 4, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert!(same_line_mod_p(&a, &b, 3));
        assert!(!same_line_mod_p(&a, &b, 5));
        let zero = vec![BigInt::from(0); 3];
        assert!(!same_line_mod_p(&a, &zero, 3));
    }
}
