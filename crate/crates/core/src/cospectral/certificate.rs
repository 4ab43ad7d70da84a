use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::{factorize_int, inverse_rational, rank_mod_prime, RatMatrix};
use crate::graph::Graph;
use crate::spectral::{generalized_spectrum_key, walk_matrix};

/// Checks on the level that hold for every matrix joining generalized
/// cospectral graphs whose walk matrices satisfy the respective hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelConstraints {
    /// The level divides `gcd(d_n(W(G)), d_n(W(H)))`.
    pub divides_last_invariant_gcd: bool,
    pub odd: bool,
    pub square_free: bool,
}

/// Rank of `ℓ(Q)·Q` modulo one prime dividing the level.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelPrimeRank {
    pub prime: BigUint,
    pub rank: usize,
}

/// Everything exact arithmetic can say about the matrix `Q = W(G) W(H)^{-1}`
/// joining two generalized cospectral graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcmCertificate {
    pub graph_g: Graph,
    pub graph_h: Graph,
    pub q: RatMatrix,
    pub level: BigInt,
    /// `Q e = e`.
    pub is_regular: bool,
    /// `Qᵀ Q = I`.
    pub is_orthogonal: bool,
    /// `Qᵀ A(G) Q = A(H)`.
    pub conjugation_holds: bool,
    pub is_permutation: bool,
    pub is_primitive: bool,
    pub per_prime_ranks: Vec<LevelPrimeRank>,
    pub level_constraints: LevelConstraints,
}

impl GcmCertificate {
    pub fn is_valid(&self) -> bool {
        self.is_regular && self.is_orthogonal && self.conjugation_holds
    }

    /// A valid certificate whose graphs are not isomorphic.
    pub fn is_mate(&self) -> bool {
        self.is_valid() && !self.is_permutation
    }

    /// The integral matrix `ℓ(Q)·Q`.
    pub fn scaled_q(&self) -> crate::exactalg::IntMatrix {
        self.q.scaled_to_integer(&self.level).expect("the level clears every denominator")
    }

    pub fn level_primes(&self) -> impl Iterator<Item = &BigUint> {
        self.per_prime_ranks.iter().map(|r| &r.prime)
    }
}

/// `Q = W(G) W(H)^{-1}`, the only regular rational orthogonal matrix with
/// `Qᵀ A(G) Q = A(H)` when `G` is controllable.
pub fn reconstruct_q(g: &Graph, h: &Graph) -> Result<RatMatrix> {
    if g.order() != h.order() {
        return Err(Error::Dimension(format!("graphs have orders {} and {}", g.order(), h.order())));
    }
    if generalized_spectrum_key(g) != generalized_spectrum_key(h) {
        return Err(Error::NotCospectral);
    }
    let wg = walk_matrix(g);
    if !wg.controllable {
        return Err(Error::SingularWalkMatrix { which: "G" });
    }
    let wh = walk_matrix(h);
    let wh_inv = inverse_rational(&wh.walk_matrix).map_err(|_| Error::SingularWalkMatrix { which: "H" })?;
    wg.walk_matrix.to_rational().mul(&wh_inv)
}

fn ones(n: usize) -> Vec<BigRational> {
    vec![BigRational::one(); n]
}

/// `Q e = e` and `Qᵀ Q = I`.
pub fn is_regular_orthogonal(q: &RatMatrix) -> bool {
    q.is_square()
        && q.mat_vec(&ones(q.rows())).is_ok_and(|v| v == ones(q.rows()))
        && q.transpose().mul(q).is_ok_and(|m| m.is_identity())
}

/// Rank of `ℓ(Q)·Q` modulo each prime dividing `ℓ(Q)`.
pub fn level_prime_ranks(q: &RatMatrix) -> Vec<LevelPrimeRank> {
    let level = q.level();
    let scaled = q.scaled_to_integer(&level).expect("the level clears every denominator");
    factorize_int(&level)
        .factors
        .into_iter()
        .map(|(prime, _)| LevelPrimeRank { rank: rank_mod_prime(&scaled, &prime), prime })
        .collect()
}

/// Regular rational orthogonal with odd level and `rank_p(ℓ(Q)·Q) = 1` for
/// every prime `p` dividing the level.
pub fn is_primitive(q: &RatMatrix) -> bool {
    is_regular_orthogonal(q) && q.level().is_odd() && level_prime_ranks(q).iter().all(|r| r.rank == 1)
}

/// Rebuilds `Q` for the pair and evaluates every predicate exactly.
pub fn verify_pair(g: &Graph, h: &Graph) -> Result<GcmCertificate> {
    let q = reconstruct_q(g, h)?;
    evaluate(g, h, q)
}

/// Evaluates every predicate for a given `q`, which need not come from the
/// walk matrices (a stored certificate is re-checked this way).
pub(crate) fn evaluate(g: &Graph, h: &Graph, q: RatMatrix) -> Result<GcmCertificate> {
    let n = g.order();
    if q.rows() != n || q.cols() != n || h.order() != n {
        return Err(Error::Dimension(format!("Q must be {n}x{n}")));
    }
    let level = q.level();

    let is_regular = q.mat_vec(&ones(n))? == ones(n);
    let qt = q.transpose();
    let is_orthogonal = qt.mul(&q)?.is_identity();
    let conjugated = qt.mul_int(&g.adjacency_matrix())?.mul(&q)?;
    let conjugation_holds = conjugated == h.adjacency_matrix().to_rational();
    let is_permutation = q.is_permutation();

    let dn_g = walk_matrix(g).last_invariant().cloned().ok_or(Error::SingularWalkMatrix { which: "G" })?;
    let dn_h = walk_matrix(h).last_invariant().cloned().ok_or(Error::SingularWalkMatrix { which: "H" })?;
    let level_f = factorize_int(&level);
    let level_constraints = LevelConstraints {
        divides_last_invariant_gcd: dn_g.gcd(&dn_h).is_multiple_of(&level),
        odd: level.is_odd(),
        square_free: level_f.is_square_free(),
    };

    let per_prime_ranks = level_prime_ranks(&q);
    let is_primitive =
        is_regular && is_orthogonal && level_constraints.odd && per_prime_ranks.iter().all(|r| r.rank == 1);

    Ok(GcmCertificate {
        graph_g: g.clone(),
        graph_h: h.clone(),
        q,
        level,
        is_regular,
        is_orthogonal,
        conjugation_holds,
        is_permutation,
        is_primitive,
        per_prime_ranks,
        level_constraints,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::permutation_matrix;
    use crate::samples;

    #[test]
    fn self_pair_gives_identity() {
        let g = samples::level11_g();
        assert!(reconstruct_q(&g, &g).unwrap().is_identity());
    }

    #[test]
    fn relabeling_gives_its_permutation_matrix() {
        let g = samples::level3_n();
        let perm = [3, 8, 0, 1, 7, 2, 6, 4, 5];
        let h = g.permuted(&perm).unwrap();
        let q = reconstruct_q(&g, &h).unwrap();
        assert_eq!(q, permutation_matrix(&perm).to_rational());
        let cert = verify_pair(&g, &h).unwrap();
        assert!(cert.is_valid() && cert.is_permutation && !cert.is_mate());
        assert_eq!(cert.level, BigInt::one());
        assert!(cert.per_prime_ranks.is_empty());
    }

    #[test]
    fn level11_pair() {
        let cert = verify_pair(&samples::level11_g(), &samples::level11_h()).unwrap();
        assert!(cert.is_valid());
        assert!(cert.is_mate());
        assert_eq!(cert.level, BigInt::from(11));
        assert!(cert.is_primitive);
        assert_eq!(cert.per_prime_ranks, vec![LevelPrimeRank { prime: BigUint::from(11u32), rank: 1 }]);
        assert_eq!(
            cert.level_constraints,
            LevelConstraints { divides_last_invariant_gcd: true, odd: true, square_free: true }
        );
        assert!(is_primitive(&cert.q));
    }

    #[test]
    fn errors() {
        let k3 = Graph::complete(3).unwrap();
        let p3 = Graph::path(3).unwrap();
        assert_eq!(reconstruct_q(&k3, &p3), Err(Error::NotCospectral));
        assert!(matches!(reconstruct_q(&k3, &Graph::path(4).unwrap()), Err(Error::Dimension(_))));
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(reconstruct_q(&c5, &c5), Err(Error::SingularWalkMatrix { which: "G" }));
    }
}
