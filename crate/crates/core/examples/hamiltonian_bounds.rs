//! Regularity bounds from Hamiltonian paths and cycles with a chord.
//!
//! ```text
//! cargo run --example hamiltonian_bounds
//! ```

use edgereg::invariants::{hamiltonian_cycle_report, hamiltonian_path_report, power_lower_bound, quotient_regularity};
use edgereg::{BettiEngine, Graph};

fn main() -> Result<(), edgereg::Error> {
    let engine = BettiEngine::default();
    let graphs = [
        Graph::path(7)?,
        Graph::cycle(7)?,
        Graph::from_descriptor("6:1-2,2-3,3-4,4-5,5-6,1-6,1-4")?,
        Graph::complete(5)?,
        Graph::star(4)?,
    ];
    for g in &graphs {
        let reg = quotient_regularity(&engine, g)? + 1;
        println!("{g}: reg I = {reg}, lower bound {}", power_lower_bound(g, 1)?);
        match hamiltonian_path_report(g) {
            Ok(r) => println!("  path bound {} ({})", r.bound, r.hypothesis),
            Err(e) => println!("  path bound n/a: {e}"),
        }
        match hamiltonian_cycle_report(g) {
            Ok(r) => println!("  cycle bound {} ({})", r.bound, r.hypothesis),
            Err(e) => println!("  cycle bound n/a: {e}"),
        }
    }
    Ok(())
}
