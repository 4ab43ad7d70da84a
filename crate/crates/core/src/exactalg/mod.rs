//! Exact integer and rational dense linear algebra.
//!
//! Nothing in this module ever rounds: integers are arbitrary precision and
//! rationals are kept in lowest terms.

mod det;
mod matrix;
pub mod modp;
pub mod primes;
mod smith;

pub use det::{det, inverse_rational};
pub use matrix::{permutation_matrix, IntMatrix, RatMatrix};
pub use modp::{rank_mod_p, rank_mod_prime, same_line_mod_p, ModMatrix};
pub use primes::{factorize, factorize_int, is_prime, is_prime_u64, Factorization};
pub use smith::{last_invariant_factor, smith_normal_form, SmithForm};

use num_bigint::BigInt;

/// Smallest positive integer scaling `q` to an integral matrix.
pub fn level(q: &RatMatrix) -> BigInt {
    q.level()
}

/// Exponent of the largest power of two dividing a non-zero integer.
pub fn two_adic_valuation(x: &BigInt) -> Option<u64> {
    x.trailing_zeros()
}
