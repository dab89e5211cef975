//! Inductive regularity inequalities and the forest decomposition bound.
//!
//! ```text
//! cargo run --example induction_bounds
//! ```

use edgereg::invariants::{decomposition_check, induction_bound_check};
use edgereg::{BettiEngine, Graph};

fn main() -> Result<(), edgereg::Error> {
    let engine = BettiEngine::default();
    for desc in ["cycle:6", "path:6", "5:1-2,2-3,3-1,3-4,4-5", "complete:4"] {
        let g = Graph::from_descriptor(desc)?;
        let report = induction_bound_check(&engine, &g)?;
        println!("{desc}: reg R/I = {}, {} inequalities, {} violations", report.regularity, report.checks, report.violations.len());
    }

    let tree = Graph::from_descriptor("6:1-2,2-3,3-4,2-5,5-6")?;
    for s in 1..=2 {
        let (splits, bad) = decomposition_check(&engine, &tree, s)?;
        println!("{tree}, s = {s}: {splits} splits into I(H) + I(G)^s, {} over the bound", bad.len());
    }
    Ok(())
}
