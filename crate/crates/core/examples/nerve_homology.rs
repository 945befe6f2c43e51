//! Homology of complexes and of truncated nerves, over Z and F_p.
//!
//! ```bash
//! cargo run --example nerve_homology
//! ```

use properclass::homology::{smith_normal_form, Coefficients, IntMatrix};
use properclass::simplicial::fixtures::{fixture, FIXTURE_NAMES};
use properclass::simplicial::{homology_of_nerve, simplex_category};
use properclass::Limits;

fn main() -> properclass::Result<()> {
    for name in FIXTURE_NAMES {
        let x = fixture(name).expect("listed");
        let z = x.homology(Coefficients::Integers)?;
        let f2 = x.homology(Coefficients::Prime(2))?;
        println!("{name:>9}: chi {:>2}  H(Z) {z}  betti mod 2 {:?}", x.euler_characteristic(), f2.betti);
    }

    // The nerve of the face poset is the barycentric subdivision.
    let rp2 = fixture("rp2").expect("fixture");
    let gamma = simplex_category(&rp2, Limits::default().max_morphisms)?;
    println!("N(face poset of RP^2): {}", homology_of_nerve(&gamma, 4, Coefficients::Integers, &Limits::default())?);

    let m = IntMatrix::from_rows(&[[2, 4, 4], [-6, 6, 12], [10, -4, -16]]);
    println!("invariant factors {:?}", smith_normal_form(&m).invariant_factors());
    Ok(())
}
