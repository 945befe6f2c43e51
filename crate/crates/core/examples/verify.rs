//! The full verification battery, one line per item.
//!
//! ```bash
//! cargo run --release --example verify
//! ```

use properclass::verify::{run_suite, SuiteConfig};

fn main() -> properclass::Result<()> {
    let cfg = SuiteConfig::default();
    for r in run_suite(&cfg, 4)? {
        println!("{:>3} {:<12} {:>6} ms  {}", r.id, format!("{:?}", r.verdict), r.wall_ms, r.claim);
        if let Some(detail) = &r.detail {
            println!("      {detail}");
        }
    }
    Ok(())
}
