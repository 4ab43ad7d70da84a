//! Walk-matrix analysis of one graph given in graph6 (defaults to the bundled
//! level-11 sample).
//!
//! ```text
//! cargo run --example analyze_graph -- 'HCZJ}z{'
//! ```

use walkspec::graph::{encode_graph6, parse_graph6};
use walkspec::samples;
use walkspec::spectral::{analyze, format_poly, generalized_spectrum_key};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = match std::env::args().nth(1) {
        Some(text) => parse_graph6(&text)?,
        None => samples::level11_g(),
    };
    let (info, class) = analyze(&g);
    let key = generalized_spectrum_key(&g);
    println!("graph {} on {} vertices, {} edges", encode_graph6(&g), g.order(), g.edge_count());
    println!("char poly of A:          {}", format_poly(&key.char_poly));
    println!("char poly of complement: {}", format_poly(&key.char_poly_complement));
    println!("walk matrix W:\n{}", info.walk_matrix);
    if !info.controllable {
        println!("det W = 0: the graph is not controllable");
        return Ok(());
    }
    println!("det W = {}  (|det W| = {})", info.determinant, info.det_factorization().unwrap());
    if let Some(snf) = &info.snf {
        let d: Vec<String> = snf.invariants.iter().map(ToString::to_string).collect();
        println!("Smith invariants of W: {}", d.join(", "));
    }
    for r in &class.per_prime_ranks {
        println!("  p = {}: exponent {}, rank_p W = {}", r.prime, r.exponent, r.rank);
    }
    println!("in F_n: {}, in H_n: {}, k = {}", class.in_fn, class.in_hn, class.k);
    match class.mate_bound {
        Some(b) => println!("at most {b} non-isomorphic generalized cospectral mate(s)"),
        None => println!("outside F_n: no bound from the squared-prime count"),
    }
    Ok(())
}
