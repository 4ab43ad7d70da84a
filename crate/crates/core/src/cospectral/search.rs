//! Finds the generalized cospectral mates `H` of a controllable graph `G`
//! reachable through a matrix `Q` of prime level `p`.
//!
//! Every column `x` of `p·Q` is an integer vector with `xᵀx = p²`,
//! `xᵀe = p` and `xᵀW(G) ≡ 0 (mod p)`, and `xᵀW(G)/p` is a row of `W(H)`, so
//! it has non-negative entries. The search lists those columns (lifting each
//! vector of the left null space of `W(G)` over F_p into `[-p, p]^n`), then
//! looks for `n` mutually orthogonal ones and keeps each set whose
//! conjugate `Qᵀ A(G) Q` is an adjacency matrix.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{is_prime_u64, IntMatrix, ModMatrix, RatMatrix};
use crate::graph::{canonical_form, CanonicalForm, Graph};
use crate::spectral::walk_matrix;

/// Upper bound on the F_p null-space size the search will enumerate.
pub const MAX_NULL_SPACE: u64 = 1 << 20;

#[derive(Clone, Debug)]
pub struct LevelMate {
    pub mate: Graph,
    /// A matrix with `qᵀ A(G) q = A(mate)`.
    pub q: RatMatrix,
}

#[derive(Clone, Debug)]
pub struct LevelSearchReport {
    pub level: u64,
    /// Dimension of `{x : xᵀ W(G) ≡ 0 (mod p)}`.
    pub null_space_dim: usize,
    /// Admissible columns of `p·Q`.
    pub candidate_columns: usize,
    /// Orthogonal column sets examined.
    pub frames: usize,
    /// Pairwise non-isomorphic mates, none isomorphic to `G`.
    pub mates: Vec<LevelMate>,
}

fn lift_options(residue: u64, p: i64) -> Vec<i64> {
    let r = residue as i64;
    if r == 0 { vec![-p, 0, p] } else { vec![r - p, r] }
}

fn lifts(residues: &[u64], p: i64, out: &mut Vec<Vec<i64>>) {
    let n = residues.len();
    let options: Vec<Vec<i64>> = residues.iter().map(|&r| lift_options(r, p)).collect();
    let target_norm = p * p;
    let mut current = vec![0i64; n];

    fn walk(
        i: usize,
        norm: i64,
        sum: i64,
        options: &[Vec<i64>],
        target: i64,
        p: i64,
        current: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if norm > target {
            return;
        }
        if i == options.len() {
            if norm == target && sum == p {
                out.push(current.clone());
            }
            return;
        }
        for &v in &options[i] {
            current[i] = v;
            walk(i + 1, norm + v * v, sum + v, options, target, p, current, out);
        }
    }
    walk(0, 0, 0, &options, target_norm, p, &mut current, out);
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// All orthonormal frames (as sets of candidate indices) whose columns sum to `p·e`.
fn frames(cands: &[Vec<i64>], n: usize, p: i64, limit: usize) -> Vec<Vec<usize>> {
    let m = cands.len();
    let words = m.div_ceil(64).max(1);
    let mut compat = vec![vec![0u64; words]; m];
    for i in 0..m {
        for j in i + 1..m {
            if dot(&cands[i], &cands[j]) == 0 {
                compat[i][j / 64] |= 1 << (j % 64);
                compat[j][i / 64] |= 1 << (i % 64);
            }
        }
    }

    struct Ctx<'a> {
        cands: &'a [Vec<i64>],
        compat: &'a [Vec<u64>],
        n: usize,
        p: i64,
        limit: usize,
        found: Vec<Vec<usize>>,
    }

    fn members(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
        set.iter().enumerate().flat_map(|(w, &bits)| {
            (0..64).filter(move |b| bits >> b & 1 == 1).map(move |b| w * 64 + b)
        })
    }

    fn extend(ctx: &mut Ctx, chosen: &mut Vec<usize>, allowed: Vec<u64>) {
        if ctx.found.len() >= ctx.limit {
            return;
        }
        if chosen.len() == ctx.n {
            let n = ctx.cands[0].len();
            let ok = (0..n).all(|r| chosen.iter().map(|&c| ctx.cands[c][r]).sum::<i64>() == ctx.p);
            if ok {
                ctx.found.push(chosen.clone());
            }
            return;
        }
        let available: Vec<usize> = members(&allowed).collect();
        if chosen.len() + available.len() < ctx.n {
            return;
        }
        for (idx, &c) in available.iter().enumerate() {
            if chosen.len() + (available.len() - idx) < ctx.n {
                return;
            }
            // only later candidates, so every frame is produced once
            let mut next = allowed.clone();
            for (w, word) in next.iter_mut().enumerate() {
                *word &= ctx.compat[c][w];
                let lo = w * 64;
                if c + 1 > lo {
                    let keep_from = (c + 1 - lo).min(64);
                    *word &= if keep_from == 64 { 0 } else { u64::MAX << keep_from };
                }
            }
            chosen.push(c);
            extend(ctx, chosen, next);
            chosen.pop();
        }
    }

    let mut all = vec![u64::MAX; words];
    if !m.is_multiple_of(64) {
        all[words - 1] = (1u64 << (m % 64)) - 1;
    }
    if m == 0 {
        all[0] = 0;
    }
    let mut ctx = Ctx { cands, compat: &compat, n, p, limit, found: Vec::new() };
    extend(&mut ctx, &mut Vec::new(), all);
    ctx.found
}

/// Searches for mates of `g` joined by a matrix of level exactly `p`.
///
/// `frame_limit` caps the number of orthonormal frames examined.
pub fn mates_at_prime_level(g: &Graph, p: u64, frame_limit: usize) -> Result<LevelSearchReport> {
    if p < 3 || !is_prime_u64(p) || p > 1 << 20 {
        return Err(Error::InvalidArgument(format!("level {p} is not a supported odd prime")));
    }
    let info = walk_matrix(g);
    if !info.controllable {
        return Err(Error::SingularWalkMatrix { which: "G" });
    }
    let n = g.order();
    let w = &info.walk_matrix;
    let kernel = ModMatrix::reduce(&w.transpose(), p).kernel();
    let dim = kernel.len();
    let space = (p as u128).checked_pow(dim as u32).unwrap_or(u128::MAX);
    if space > MAX_NULL_SPACE as u128 {
        return Err(Error::InvalidArgument(format!("null space of size {p}^{dim} is too large to enumerate")));
    }

    let pi = p as i64;
    let mut columns: Vec<Vec<i64>> = Vec::new();
    let mut coeffs = vec![0u64; dim];
    loop {
        let residues: Vec<u64> = (0..n)
            .map(|i| kernel.iter().zip(&coeffs).fold(0u64, |acc, (v, &c)| (acc + v[i] * c) % p))
            .collect();
        lifts(&residues, pi, &mut columns);
        // next coefficient vector in base p
        let mut k = 0;
        while k < dim {
            coeffs[k] += 1;
            if coeffs[k] < p {
                break;
            }
            coeffs[k] = 0;
            k += 1;
        }
        if k == dim {
            break;
        }
    }

    // xᵀW / p must be a walk-matrix row: integral (by construction) and non-negative.
    let pb = BigInt::from(p);
    let candidates: Vec<Vec<i64>> = columns
        .into_iter()
        .filter(|x| {
            (0..n).all(|j| {
                let s: BigInt = (0..n).map(|i| w.get(i, j) * x[i]).sum();
                debug_assert!((&s % &pb).is_zero());
                !s.is_negative()
            })
        })
        .collect();

    let found = frames(&candidates, n, pi, frame_limit);
    let a = g.adjacency_matrix().to_rational();
    let own = canonical_form(g)?;
    let mut mates: BTreeMap<CanonicalForm, LevelMate> = BTreeMap::new();
    for frame in &found {
        let scaled = IntMatrix::from_fn(n, n, |i, j| BigInt::from(candidates[frame[j]][i]));
        let q = RatMatrix::from_scaled(&scaled, &pb)?;
        if q.level() != pb {
            continue;
        }
        let conj = q.transpose().mul(&a)?.mul(&q)?;
        let Some(adj) = conj.to_integer() else { continue };
        let Ok(h) = Graph::from_adjacency(&adj) else { continue };
        let form = canonical_form(&h)?;
        if form != own {
            mates.entry(form).or_insert(LevelMate { mate: h, q });
        }
    }

    Ok(LevelSearchReport {
        level: p,
        null_space_dim: dim,
        candidate_columns: candidates.len(),
        frames: found.len(),
        mates: mates.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use crate::samples;

    #[test]
    fn finds_the_level11_mate() {
        let report = mates_at_prime_level(&samples::level11_g(), 11, 10_000).unwrap();
        assert_eq!(report.null_space_dim, 1);
        assert_eq!(report.mates.len(), 1);
        assert!(is_isomorphic(&report.mates[0].mate, &samples::level11_h()).unwrap());
    }

    #[test]
    fn rejects_bad_levels() {
        let g = samples::level11_g();
        assert!(mates_at_prime_level(&g, 2, 10).is_err());
        assert!(mates_at_prime_level(&g, 9, 10).is_err());
        assert_eq!(
            mates_at_prime_level(&Graph::cycle(5).unwrap(), 3, 10).unwrap_err(),
            Error::SingularWalkMatrix { which: "G" }
        );
    }
}
