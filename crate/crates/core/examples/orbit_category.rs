//! The orbit category over finite subgroups, the Grothendieck construction
//! of the coset functor, and fixed points under the group action.
//!
//! ```bash
//! cargo run --example orbit_category -- S3
//! ```

use properclass::category::{coset_grothendieck, fixed_subcategory, orbit_category, quotient_category, standard_action};
use properclass::group::{finite_family, finite_group};
use properclass::homology::Coefficients;
use properclass::simplicial::homology_of_nerve;
use properclass::Limits;

fn main() -> properclass::Result<()> {
    let name = std::env::args().nth(1).unwrap_or_else(|| "S3".into());
    let limits = Limits::default();
    let g = finite_group(&name)?;
    let family = finite_family(&g, &limits)?;
    let oc = orbit_category(&g, &family, &limits)?;
    let gr = coset_grothendieck(&g, &oc, &limits)?;
    println!(
        "O_F({name}): {} objects, {} morphisms; terminal {:?}",
        oc.category.num_objects(),
        oc.category.num_morphisms(),
        oc.category.has_terminal_object().map(|t| oc.category.object_label(t))
    );
    println!("Gr(R): {} objects, {} morphisms", gr.category.num_objects(), gr.category.num_morphisms());
    println!("H_*(N Gr(R)) = {}", homology_of_nerve(&gr.category, 4, Coefficients::Integers, &limits)?);

    let action = standard_action(&g, &oc, &gr);
    let q = quotient_category(&gr.category, &action)?;
    println!("Gr(R)/G has {} objects", q.category.num_objects());
    for k in &oc.subgroups {
        let (fixed, _) = fixed_subcategory(&gr.category, &action, k);
        println!(
            "  K = {:<24} fixed objects {:>2}, initial object {}",
            k.describe(&g),
            fixed.num_objects(),
            fixed.has_initial_object().is_some()
        );
    }
    Ok(())
}
