//! Subgroup lattices, families and torsion-generated quotients.
//!
//! ```bash
//! cargo run --example groups
//! ```

use properclass::group::{all_subgroups, finite_family, finite_group, torsion_generated_subgroup, GroupSpec, FINITE_GROUP_NAMES};
use properclass::euclidean::catalogue_group;
use properclass::Limits;

fn main() -> properclass::Result<()> {
    let limits = Limits::default();
    for name in FINITE_GROUP_NAMES {
        let g = finite_group(name)?;
        let subs = all_subgroups(&g, &limits)?;
        let family = finite_family(&g, &limits)?;
        println!("{name:>4}: order {:>2}, {:>2} subgroups, {:>2} conjugacy classes", g.order(), subs.len(), family.len());
    }

    // The torsion-generated normal subgroup of a crystallographic group.
    for name in ["pmm", "p3", "p3m1", "ZxZp(5)"] {
        let tq = torsion_generated_subgroup(&GroupSpec::Euclidean(catalogue_group(name)?))?;
        println!("{name}: G/T has abelianization {}", tq.quotient.abelianization());
    }
    Ok(())
}
