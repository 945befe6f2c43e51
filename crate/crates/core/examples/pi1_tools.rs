//! Edge-path presentations, Tietze simplification and coset enumeration.
//!
//! ```bash
//! cargo run --example pi1_tools
//! ```

use properclass::pi1::{edge_path_presentation, group_order, tietze_simplify, Presentation};
use properclass::simplicial::fixtures::{fixture, FIXTURE_NAMES};
use properclass::Limits;

fn main() -> properclass::Result<()> {
    let limits = Limits::default();
    for name in FIXTURE_NAMES {
        let x = fixture(name).expect("listed");
        let raw = edge_path_presentation(&x, 0)?;
        let p = tietze_simplify(&raw, limits.tietze_budget);
        let order = group_order(&p, limits.max_cosets).map_or("infinite or unknown".to_string(), |n| n.to_string());
        println!("{name:>9}: {} -> {p}  (abelian {}, order {order})", raw.num_generators(), p.abelianization());
    }

    let s3 = Presentation::parse("gens: a b; rel: a^3, b^2, abab")?;
    println!("<a, b | a^3, b^2, (ab)^2> has order {:?}", group_order(&s3, 1000));
    Ok(())
}
