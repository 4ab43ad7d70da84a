//! Certifies a pair of graphs by computing `Q = W(G) W(H)^-1` and checking
//! every predicate; prints the certificate as JSON and reads it back.
//!
//! ```text
//! cargo run --example certify_pair -- 'HCZJ}z{' 'HMMz[^L'
//! ```

use walkspec::cospectral::{certificate_from_json, certificate_to_json, verify_pair};
use walkspec::graph::parse_graph6;
use walkspec::samples;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (g, h) = match args.as_slice() {
        [a, b] => (parse_graph6(a)?, parse_graph6(b)?),
        _ => (samples::level11_g(), samples::level11_h()),
    };
    let cert = match verify_pair(&g, &h) {
        Ok(cert) => cert,
        Err(e) => {
            println!("no certificate: {e}");
            return Ok(());
        }
    };
    println!("level {}", cert.level);
    println!("Q =\n{}", cert.q);
    println!(
        "regular {}, orthogonal {}, conjugates A(G) to A(H) {}, permutation {}, primitive {}",
        cert.is_regular, cert.is_orthogonal, cert.conjugation_holds, cert.is_permutation, cert.is_primitive
    );
    println!("non-isomorphic mates: {}", cert.is_mate());

    let text = certificate_to_json(&cert);
    println!("{text}");
    let back = certificate_from_json(&text)?;
    assert_eq!(back, cert);
    println!("document round trip is exact");
    Ok(())
}
