//! Searches for generalized cospectral mates reachable through a matrix of
//! a given prime level, then certifies each one found.
//!
//! ```text
//! cargo run --release --example find_mates -- 'HEhbT~{' 3
//! ```
//! With no arguments it searches both bundled 9-vertex samples.

use walkspec::cospectral::{mates_at_prime_level, verify_pair};
use walkspec::graph::{encode_graph6, parse_graph6, Graph};
use walkspec::samples;
use walkspec::spectral::{analyze, walk_matrix};

fn search(g: &Graph, p: u64) -> Result<(), Box<dyn std::error::Error>> {
    let (info, class) = analyze(g);
    println!("G = {}  det W = {}  squared odd primes {}", encode_graph6(g), info.determinant, class.k);
    let report = mates_at_prime_level(g, p, 100_000)?;
    println!(
        "level {p}: null space dim {}, {} candidate columns, {} frames, {} mate(s)",
        report.null_space_dim,
        report.candidate_columns,
        report.frames,
        report.mates.len()
    );
    for m in &report.mates {
        let w = walk_matrix(&m.mate);
        let rank = walkspec::exactalg::rank_mod_p(&w.walk_matrix, p);
        let cert = verify_pair(g, &m.mate)?;
        println!(
            "  mate {}  det W = {}  rank_{p} W = {rank}  certificate valid: {}  level {}",
            encode_graph6(&m.mate),
            w.determinant,
            cert.is_mate(),
            cert.level
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [g6, p] = args.as_slice() {
        return search(&parse_graph6(g6)?, p.parse()?);
    }
    search(&samples::level11_g(), 11)?;
    search(&samples::level3_n(), 3)
}
