//! Localizing the simplex category and the homology of overcategories.
//!
//! ```bash
//! cargo run --release --example comma -- rp2
//! ```

use properclass::comma::{check_contractible_overcategory, localize_simplex_category, DEFAULT_TRUNCATION};
use properclass::simplicial::fixtures::fixture;
use properclass::Limits;

fn main() -> properclass::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "rp2".into());
    let x = fixture(&name).ok_or_else(|| properclass::Error::InvalidInput(format!("no fixture {name}")))?;
    let limits = Limits::default();
    let l = localize_simplex_category(&x, limits.max_order, &limits)?;
    l.check_associativity(500, 1)?;
    println!("{name}: {} objects, pi1 of order {} ({})", l.num_objects(), l.order(), l.presentation);
    for sigma in [0, x.total_count() - 1] {
        let r = check_contractible_overcategory(&x, sigma, DEFAULT_TRUNCATION, &limits)?;
        println!(
            "  L / {}: {} objects, {} morphisms, cells {:?}, H {} (acyclic: {})",
            r.sigma_label, r.objects, r.morphisms, r.cell_counts, r.homology, r.acyclic
        );
    }
    Ok(())
}
