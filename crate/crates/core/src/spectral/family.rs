use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::walk::WalkMatrixInfo;
use crate::error::{Error, Result};
use crate::exactalg::{rank_mod_p, rank_mod_prime};

/// Rank of the walk matrix modulo one odd prime dividing its determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRank {
    pub prime: BigUint,
    /// Exponent of the prime in `det W`.
    pub exponent: u32,
    pub rank: usize,
    /// `rank == n - 1`.
    pub satisfied: bool,
}

/// Membership of a graph in the two arithmetic families and the resulting
/// bound on its generalized cospectral mates.
///
/// The larger family asks that `2^{-⌊n/2⌋} det W` be odd and cube-free with
/// `rank_p W = n - 1` for every odd prime `p | det W`; the smaller one asks
/// for the shape `p² b` (`b` odd, square-free) with `rank_p W = n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyClassification {
    pub in_hn: bool,
    pub in_fn: bool,
    /// Distinct odd primes whose square divides `det W`.
    pub k: u32,
    /// Distinct odd primes whose square divides the last invariant factor of `W`.
    pub k_last_invariant: u32,
    /// `2^k - 1` when `in_fn`.
    pub mate_bound: Option<u64>,
    pub per_prime_ranks: Vec<PrimeRank>,
    /// `2^⌊n/2⌋` divides `det W` exactly.
    pub two_adic_exact: bool,
    /// The 2-adic valuation of `det W` exceeds `⌊n/2⌋`.
    pub two_adic_excess: bool,
}

impl FamilyClassification {
    /// Odd primes contributing to `k`.
    pub fn squared_primes(&self) -> impl Iterator<Item = &BigUint> {
        self.per_prime_ranks.iter().filter(|r| r.exponent >= 2).map(|r| &r.prime)
    }

    pub fn k_counts_differ(&self) -> bool {
        self.k != self.k_last_invariant
    }
}

pub const MATE_BOUND_MAX_K: u32 = 62;

/// `2^k - 1`, the most non-isomorphic generalized cospectral mates a graph of
/// the larger family can have.
pub fn mate_bound(k: u32) -> Result<u64> {
    if k > MATE_BOUND_MAX_K {
        return Err(Error::InvalidArgument(format!("k = {k} exceeds {MATE_BOUND_MAX_K}")));
    }
    Ok((1u64 << k) - 1)
}

fn rank_at(info: &WalkMatrixInfo, p: &BigUint) -> usize {
    match p.to_u64() {
        Some(small) => rank_mod_p(&info.walk_matrix, small),
        None => rank_mod_prime(&info.walk_matrix, p),
    }
}

pub fn classify_family(info: &WalkMatrixInfo) -> FamilyClassification {
    let n = info.order;
    let not_member = FamilyClassification {
        in_hn: false,
        in_fn: false,
        k: 0,
        k_last_invariant: 0,
        mate_bound: None,
        per_prime_ranks: Vec::new(),
        two_adic_exact: false,
        two_adic_excess: false,
    };
    let Some(det_f) = info.det_factorization() else {
        return not_member;
    };

    let two_adic_exact = info.two_adic_exact();
    let two_adic_excess = info.two_adic_valuation.is_some_and(|v| v > info.expected_two_power());
    let two = BigUint::from(2u32);

    let per_prime_ranks: Vec<PrimeRank> = det_f
        .factors
        .iter()
        .filter(|(p, _)| *p != two)
        .map(|(p, e)| {
            let rank = rank_at(info, p);
            PrimeRank { prime: p.clone(), exponent: *e, rank, satisfied: rank + 1 == n }
        })
        .collect();

    let k = per_prime_ranks.iter().filter(|r| r.exponent >= 2).count() as u32;
    let last = info.last_invariant().expect("controllable graphs have a Smith form");
    let k_last_invariant = per_prime_ranks
        .iter()
        .filter(|r| {
            let p = BigInt::from(r.prime.clone());
            last.is_multiple_of(&(&p * &p))
        })
        .count() as u32;

    let cube_free = per_prime_ranks.iter().all(|r| r.exponent <= 2);
    let ranks_ok = per_prime_ranks.iter().all(|r| r.satisfied);
    let in_fn = two_adic_exact && cube_free && ranks_ok;

    let squared: Vec<&PrimeRank> = per_prime_ranks.iter().filter(|r| r.exponent >= 2).collect();
    let in_hn = two_adic_exact
        && squared.len() == 1
        && squared[0].exponent == 2
        && squared[0].satisfied
        && per_prime_ranks.iter().all(|r| r.exponent <= 2);

    FamilyClassification {
        in_hn,
        in_fn,
        k,
        k_last_invariant,
        mate_bound: if in_fn { mate_bound(k).ok() } else { None },
        per_prime_ranks,
        two_adic_exact,
        two_adic_excess,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::samples;
    use crate::spectral::walk_matrix;

    #[test]
    fn bound_values() {
        assert_eq!(mate_bound(0).unwrap(), 0);
        assert_eq!(mate_bound(1).unwrap(), 1);
        assert_eq!(mate_bound(3).unwrap(), 7);
        assert_eq!(mate_bound(62).unwrap(), (1u64 << 62) - 1);
        assert!(mate_bound(63).is_err());
    }

    #[test]
    fn level11_graph_is_in_both_families() {
        let c = classify_family(&walk_matrix(&samples::level11_g()));
        assert!(c.in_hn && c.in_fn);
        assert_eq!(c.k, 1);
        assert_eq!(c.mate_bound, Some(1));
        assert_eq!(c.per_prime_ranks.len(), 1);
        assert_eq!(c.per_prime_ranks[0].prime, BigUint::from(11u32));
        assert_eq!(c.per_prime_ranks[0].rank, 8);
    }

    #[test]
    fn level3_graph() {
        let c = classify_family(&walk_matrix(&samples::level3_n()));
        assert!(c.in_fn);
        assert!(c.in_hn);
        assert_eq!(c.k, 1);
        assert_eq!(c.mate_bound, Some(1));
        let r3 = c.per_prime_ranks.iter().find(|r| r.prime == BigUint::from(3u32)).unwrap();
        assert_eq!(r3.rank, 8);
    }

    #[test]
    fn regular_graph_is_in_neither() {
        let c = classify_family(&walk_matrix(&Graph::cycle(5).unwrap()));
        assert!(!c.in_fn && !c.in_hn);
        assert_eq!(c.mate_bound, None);
    }
}
