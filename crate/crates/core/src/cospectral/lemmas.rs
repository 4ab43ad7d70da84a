//! Executable forms of the structural facts about primitive matrices. Each
//! check reports whether its hypotheses were met before judging the
//! conclusion, so a vacuous pass is never mistaken for a verified one.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::certificate::{is_primitive, level_prime_ranks};
use crate::exactalg::{factorize_int, same_line_mod_p, IntMatrix, ModMatrix, RatMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LemmaOutcome {
    /// Hypotheses hold and so does the conclusion.
    Holds,
    /// Hypotheses hold but the conclusion does not: a counterexample.
    Fails,
    /// Some hypothesis is false; nothing was checked.
    NotApplicable,
}

impl LemmaOutcome {
    pub fn from_conclusion(ok: bool) -> Self {
        if ok { LemmaOutcome::Holds } else { LemmaOutcome::Fails }
    }

    pub fn is_counterexample(self) -> bool {
        self == LemmaOutcome::Fails
    }
}

/// For a primitive `q` with `x·q` integral and `≡ 0 (mod k)`: the level of
/// `q` divides `x / k`.
pub fn check_level_mod(q: &RatMatrix, x: &BigInt, k: &BigInt) -> LemmaOutcome {
    if x <= &BigInt::zero() || k <= &BigInt::zero() {
        return LemmaOutcome::NotApplicable;
    }
    let Some(scaled) = q.scaled_to_integer(x) else {
        return LemmaOutcome::NotApplicable;
    };
    // primitivity needs ranks mod every level prime, so it is tested last
    if !scaled.is_zero_mod(k) || !is_primitive(q) {
        return LemmaOutcome::NotApplicable;
    }
    let (quotient, rem) = x.div_rem(k);
    LemmaOutcome::from_conclusion(rem.is_zero() && quotient.is_multiple_of(&q.level()))
}

fn dot(u: &[BigInt], v: &[BigInt]) -> BigInt {
    u.iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Two integer vectors, both non-zero mod the odd prime `p`, linearly
/// dependent over F_p, with `uᵀu = vᵀv ≡ 0 (mod p²)`, satisfy
/// `uᵀv ≡ 0 (mod p²)`.
pub fn check_uv(u: &[BigInt], v: &[BigInt], p: u64) -> LemmaOutcome {
    if u.len() != v.len() || u.is_empty() || p < 3 || !crate::exactalg::is_prime_u64(p) {
        return LemmaOutcome::NotApplicable;
    }
    let pb = BigInt::from(p);
    let p2 = &pb * &pb;
    let nonzero = |w: &[BigInt]| w.iter().any(|x| !x.is_multiple_of(&pb));
    if !nonzero(u) || !nonzero(v) {
        return LemmaOutcome::NotApplicable;
    }
    // both are non-zero mod p, so dependence means spanning the same line
    if !same_line_mod_p(u, v, p) {
        return LemmaOutcome::NotApplicable;
    }
    let uu = dot(u, u);
    if uu != dot(v, v) || !uu.is_multiple_of(&p2) {
        return LemmaOutcome::NotApplicable;
    }
    LemmaOutcome::from_conclusion(dot(u, v).is_multiple_of(&p2))
}

/// Small-integer convenience wrapper around [`check_uv`].
pub fn check_uv_i64(u: &[i64], v: &[i64], p: u64) -> LemmaOutcome {
    let u: Vec<BigInt> = u.iter().map(|&x| x.into()).collect();
    let v: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
    check_uv(&u, &v, p)
}

/// Whether the column spaces of two integer matrices coincide over F_p.
/// Rank-one inputs are compared through a single non-zero column each.
pub fn same_column_space_mod_p(a: &IntMatrix, b: &IntMatrix, p: u64) -> bool {
    let ra = ModMatrix::reduce(a, p).rank();
    let rb = ModMatrix::reduce(b, p).rank();
    if ra != rb {
        return false;
    }
    if ra == 0 {
        return true;
    }
    if ra == 1 {
        let pick = |m: &IntMatrix| {
            (0..m.cols()).map(|j| m.column(j)).find(|c| c.iter().any(|x| !x.is_multiple_of(&BigInt::from(p))))
        };
        return match (pick(a), pick(b)) {
            (Some(x), Some(y)) => same_line_mod_p(&x, &y, p),
            _ => false,
        };
    }
    let joined = IntMatrix::from_fn(a.rows(), a.cols() + b.cols(), |i, j| {
        if j < a.cols() { a.get(i, j).clone() } else { b.get(i, j - a.cols()).clone() }
    });
    ModMatrix::reduce(&joined, p).rank() == ra
}

/// Two primitive matrices of the same square-free level whose scaled column
/// spaces agree modulo every prime of the level: `q1ᵀ q2` is a permutation
/// matrix.
pub fn check_same_level_permutation(q1: &RatMatrix, q2: &RatMatrix) -> LemmaOutcome {
    if q1.rows() != q2.rows() || !is_primitive(q1) || !is_primitive(q2) {
        return LemmaOutcome::NotApplicable;
    }
    let level = q1.level();
    if level != q2.level() || !factorize_int(&level).is_square_free() {
        return LemmaOutcome::NotApplicable;
    }
    let s1 = q1.scaled_to_integer(&level).expect("level clears denominators");
    let s2 = q2.scaled_to_integer(&level).expect("level clears denominators");
    for r in level_prime_ranks(q1) {
        let Some(p) = r.prime.to_u64() else {
            return LemmaOutcome::NotApplicable;
        };
        if !same_column_space_mod_p(&s1, &s2, p) {
            return LemmaOutcome::NotApplicable;
        }
    }
    let product = q1.transpose().mul(q2).expect("same order");
    LemmaOutcome::from_conclusion(product.is_permutation())
}

/// For odd `p` with `p^k ∥ det W(G)` and `rank_p W(G) = n - 1`, the level of
/// any `Q` joining `G` to a mate is not divisible by `p^k`.
pub fn check_prime_power_excluded(level: &BigInt, p: &BigUint, exponent: u32, rank_ok: bool) -> LemmaOutcome {
    if !rank_ok || exponent == 0 || p.is_even() {
        return LemmaOutcome::NotApplicable;
    }
    let pk = BigInt::from(p.pow(exponent));
    LemmaOutcome::from_conclusion(!level.is_multiple_of(&pk))
}
