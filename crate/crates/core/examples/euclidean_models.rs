//! Quotient models of line and wallpaper groups and their nullification verdicts.
//!
//! ```bash
//! cargo run --release --example euclidean_models -- 4
//! ```

use properclass::euclidean::{bbar_model, catalogue_examples, catalogue_group, nullification_report};
use properclass::Limits;

fn main() -> properclass::Result<()> {
    let k: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let limits = Limits::default();
    for name in catalogue_examples() {
        let spec = catalogue_group(&name)?;
        let model = bbar_model(&spec, k)?;
        let report = nullification_report(&spec, k, 2, &limits)?;
        println!(
            "{name:>8}: |P| = {:>2}, torus on {:>3} vertices, quotient {:>4} simplices, H {}",
            spec.point_group.len(),
            model.torus_vertices,
            model.complex.total_count(),
            report.homology
        );
        println!("          {}", report.verdict);
    }
    Ok(())
}
