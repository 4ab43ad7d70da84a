//! Groups every graph of one order by generalized spectrum and lists the
//! groups holding more than one isomorphism class.
//!
//! ```text
//! cargo run --release --example group_mates -- 7
//! ```

use walkspec::cospectral::group_by_generalized_spectrum;
use walkspec::graph::{encode_graph6, isomorphism_classes};
use walkspec::spectral::format_poly;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).as_deref().unwrap_or("7").parse()?;
    let classes = isomorphism_classes(n)?;
    let total = classes.len();
    let groups = group_by_generalized_spectrum(classes)?;
    let shared: Vec<_> = groups.iter().filter(|g| g.len() > 1).collect();
    println!("order {n}: {total} classes, {} spectra, {} shared", groups.len(), shared.len());
    for group in shared {
        println!("{}  |  {}", format_poly(&group.key.char_poly), format_poly(&group.key.char_poly_complement));
        for (g, w) in group.members.iter().zip(&group.walk_info) {
            println!("    {:<10} det W = {}", encode_graph6(g), w.determinant);
        }
        if group.uncertified() {
            println!("    (a walk matrix is singular, so the pair cannot be certified)");
        }
    }
    Ok(())
}
