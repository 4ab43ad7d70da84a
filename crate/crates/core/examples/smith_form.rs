//! Smith normal form, determinant, ranks modulo small primes and the level
//! of the inverse, for a matrix given as rows of integers.
//!
//! ```text
//! cargo run --example smith_form -- "2 4 4" "-6 6 12" "10 -4 -16"
//! ```

use walkspec::exactalg::{det, factorize_int, inverse_rational, rank_mod_p, smith_normal_form, IntMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut rows: Vec<Vec<i64>> = std::env::args()
        .skip(1)
        .map(|r| r.split_whitespace().map(str::parse).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    if rows.is_empty() {
        rows = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]];
    }
    let m = IntMatrix::from_rows(&rows)?;
    println!("M =\n{m}");
    let d = det(&m)?;
    println!("det M = {d}  (|det| = {})", factorize_int(&d));

    let snf = smith_normal_form(&m)?;
    println!("invariant factors: {:?}", snf.invariants.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("V1 =\n{}V2 =\n{}", snf.left, snf.right);
    assert_eq!(snf.reconstruct(), m);
    println!("V1 · diag · V2 reproduces M");

    for p in [2u64, 3, 5, 7, 11, 13] {
        println!("rank over F_{p}: {}", rank_mod_p(&m, p));
    }
    let inv = inverse_rational(&m)?;
    println!("M^-1 =\n{inv}level of M^-1 = {} (the last invariant factor)", inv.level());
    Ok(())
}
