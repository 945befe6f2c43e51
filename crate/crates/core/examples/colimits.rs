//! Products, wedges, pushouts and telescopes.
//!
//! ```bash
//! cargo run --example colimits
//! ```

use properclass::homology::Coefficients;
use properclass::simplicial::fixtures::{circle, interval, point, sphere};
use properclass::simplicial::{product, pushout, telescope, wedge, SimplicialComplex, SimplicialMap};

fn show(label: &str, x: &SimplicialComplex) -> properclass::Result<()> {
    println!("{label:<22} {:>4} simplices  H {}", x.total_count(), x.homology(Coefficients::Integers)?);
    Ok(())
}

fn main() -> properclass::Result<()> {
    show("S1 x S1", &product(&circle(), &circle()))?;
    show("S2 v S1", &wedge(&sphere(), 0, &circle(), 0)?)?;

    // Two intervals glued along their endpoints (as a homotopy pushout): a circle.
    let ends = SimplicialComplex::from_facets(2, &[vec![0], vec![1]])?;
    let both = SimplicialMap::new(vec![0, 1]);
    show("I u_{0,1} I", &pushout(&ends, &interval(), &both, &interval(), &both)?)?;
    show("S2 u_pt pt", &pushout(&point(), &sphere(), &SimplicialMap::new(vec![0]), &point(), &SimplicialMap::new(vec![0]))?)?;

    let x = circle();
    let maps = vec![SimplicialMap::identity(x.num_vertices()); 3];
    show("tel(S1 = S1 = ...)", &telescope(&vec![x; 4], &maps)?)?;
    Ok(())
}
