mod common;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use walkspec::exactalg::{rank_mod_p, smith_normal_form};
use walkspec::graph::{isomorphism_classes, Graph};
use walkspec::spectral::{
    analyze, char_poly, eval_poly, generalized_spectrum_key, mate_bound, walk_matrix, MATE_BOUND_MAX_K,
};

use common::{laplace_det, random_graph, random_permutation, rng};

fn adjacency_rows(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.order();
    (0..n).map(|i| (0..n).map(|j| g.has_edge(i, j) as i64).collect()).collect()
}

/// `W` built with machine integers straight from the definition.
fn naive_walk(g: &Graph) -> Vec<Vec<i64>> {
    let a = adjacency_rows(g);
    let n = g.order();
    let mut cols = vec![vec![1i64; n]];
    for _ in 1..n {
        let prev = cols.last().unwrap();
        cols.push((0..n).map(|i| (0..n).map(|j| a[i][j] * prev[j]).sum()).collect());
    }
    (0..n).map(|i| (0..n).map(|j| cols[j][i]).collect()).collect()
}

fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn sample_graphs() -> Vec<Graph> {
    let mut r = rng(2024);
    let mut out = Vec::new();
    for i in 0..400 {
        let n = 2 + i % 9;
        out.push(random_graph(&mut r, n, 0.3 + 0.4 * ((i / 9) % 2) as f64));
    }
    out
}

#[test]
fn char_poly_matches_cofactor_determinant() {
    for g in sample_graphs().into_iter().filter(|g| g.order() <= 7) {
        let poly = char_poly(&g.adjacency_matrix()).unwrap();
        assert_eq!(poly.len(), g.order() + 1);
        let a = adjacency_rows(&g);
        for x in -2i64..=2 {
            let shifted: Vec<Vec<i64>> = (0..g.order())
                .map(|i| (0..g.order()).map(|j| if i == j { x - a[i][j] } else { -a[i][j] }).collect())
                .collect();
            assert_eq!(eval_poly(&poly, &BigInt::from(x)), laplace_det(&shifted), "x = {x}");
        }
    }
}

#[test]
fn walk_matrix_follows_definition() {
    for g in sample_graphs() {
        let info = walk_matrix(&g);
        let naive = naive_walk(&g);
        for (i, row) in naive.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                assert_eq!(info.walk_matrix.get(i, j), &BigInt::from(v));
            }
        }
        if g.order() <= 7 {
            assert_eq!(info.determinant, laplace_det(&naive));
        }
        assert_eq!(info.controllable, !info.determinant.is_zero());
    }
}

#[test]
fn forced_power_of_two_divides_det() {
    let mut graphs = sample_graphs();
    for n in 1..=6 {
        graphs.extend(isomorphism_classes(n).unwrap());
    }
    for g in graphs {
        let info = walk_matrix(&g);
        let forced = BigInt::from(1u64 << (g.order() / 2));
        assert!(info.determinant.is_multiple_of(&forced), "{g:?}");
    }
}

#[test]
fn family_membership_from_first_principles() {
    let mut members = 0;
    for g in sample_graphs() {
        let (info, class) = analyze(&g);
        assert!(!class.in_hn || class.in_fn, "H_n member outside F_n");
        if !info.controllable {
            assert!(!class.in_fn && !class.in_hn && class.mate_bound.is_none());
            continue;
        }
        let n = g.order();
        let det = info.determinant.abs().to_u64().expect("small determinant");
        let half = 1u64 << (n / 2);
        let exact_two = det % half == 0 && (det / half) % 2 == 1;
        let odd = trial_factor(if exact_two { det / half } else { 1 });
        let naive = naive_walk(&g);
        let w = common::to_matrix(&naive);
        let ranks_ok = odd.iter().all(|&(p, _)| rank_mod_p(&w, p) == n - 1);
        let expected_fn = exact_two && odd.iter().all(|&(_, e)| e <= 2) && ranks_ok;
        assert_eq!(class.in_fn, expected_fn, "{g:?}");
        let squared = odd.iter().filter(|&&(_, e)| e == 2).count();
        assert_eq!(class.in_hn, expected_fn && squared == 1, "{g:?}");
        if expected_fn {
            members += 1;
            assert_eq!(class.k as usize, squared);
            assert_eq!(class.mate_bound, Some((1u64 << squared) - 1));
        }
    }
    assert!(members > 10, "only {members} family members sampled");
}

#[test]
fn prime_ranks_agree_with_smith_form() {
    for g in sample_graphs() {
        let (info, class) = analyze(&g);
        let Ok(snf) = smith_normal_form(&info.walk_matrix) else { continue };
        for r in &class.per_prime_ranks {
            let p = BigInt::from(r.prime.clone());
            assert_eq!(r.rank, g.order() - snf.invariants.iter().filter(|d| d.is_multiple_of(&p)).count());
        }
        let last = snf.last();
        let by_last = class
            .per_prime_ranks
            .iter()
            .filter(|r| last.is_multiple_of(&BigInt::from(&r.prime * &r.prime)))
            .count();
        assert_eq!(class.k_last_invariant as usize, by_last);
    }
}

#[test]
fn spectrum_key_is_a_graph_invariant() {
    let mut r = rng(77);
    for g in sample_graphs() {
        let key = generalized_spectrum_key(&g);
        let h = g.permuted(&random_permutation(&mut r, g.order())).unwrap();
        assert_eq!(generalized_spectrum_key(&h), key);
        let swapped = generalized_spectrum_key(&g.complement());
        assert_eq!(swapped.char_poly, key.char_poly_complement);
        assert_eq!(swapped.char_poly_complement, key.char_poly);
        // walk-matrix data are invariant up to sign
        assert_eq!(walk_matrix(&h).determinant.abs(), walk_matrix(&g).determinant.abs());
    }
}

#[test]
fn bound_guard() {
    assert_eq!(mate_bound(0).unwrap(), 0);
    assert_eq!(mate_bound(3).unwrap(), 7);
    assert_eq!(mate_bound(MATE_BOUND_MAX_K).unwrap(), (1u64 << 62) - 1);
    assert!(mate_bound(MATE_BOUND_MAX_K + 1).is_err());
}
