//! Reads graph6 lines from stdin (or uses a few built-in ones), prints each
//! graph's canonical representative and writes it back as graph6.
//!
//! ```text
//! printf 'DQc\nD~{\n' | cargo run --example graph6_io -- -
//! ```

use std::io::Read;

use walkspec::graph::{canonical_graph, encode_graph6, parse_graph6_lines, GRAPH6_HEADER};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut text = String::new();
    if std::env::args().nth(1).as_deref() == Some("-") {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = format!("{GRAPH6_HEADER}DQc\nA_\nHCZJ}}z{{\nnot graph6\n");
    }
    for (i, parsed) in parse_graph6_lines(&text).into_iter().enumerate() {
        match parsed {
            Ok(g) => {
                let edges: Vec<(usize, usize)> = g.edges().collect();
                println!("#{i}: n = {}, edges {edges:?}", g.order());
                println!("    re-encoded {}", encode_graph6(&g));
                if g.order() <= walkspec::graph::CANON_MAX_ORDER {
                    println!("    canonical  {}", encode_graph6(&canonical_graph(&g)?));
                }
            }
            Err(e) => println!("#{i}: {e}"),
        }
    }
    Ok(())
}
