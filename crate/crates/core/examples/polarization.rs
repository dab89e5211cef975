//! Polarization and normalization of monomial ideals.
//!
//! ```text
//! cargo run --example polarization
//! ```

use edgereg::{BettiEngine, MonomialIdeal};

fn main() -> Result<(), edgereg::Error> {
    let engine = BettiEngine::default();
    let ideal = MonomialIdeal::parse_text("x1^2*x2\nx2^3\nx1*x3", None)?;
    let polar = ideal.polarize();
    println!("I      = {ideal}");
    println!("pol(I) = {}", polar.render_target());
    for (k, slot) in polar.slots.iter().enumerate() {
        println!("  {} stands for copy {} of x{}", polar.variable_name(ideal.nvars() + k + 1), slot.occurrence, slot.base);
    }
    println!("reg I = {}, reg pol(I) = {}", engine.regularity(&ideal)?, engine.regularity(&polar.target)?);

    let messy = MonomialIdeal::parse_text("x2\nx3*x5\nx5*x6", Some(7))?;
    let norm = messy.normalize();
    println!("{messy} normalizes to {} over variables {:?}", norm.ideal, norm.kept_vars);
    println!("linear {:?}, unused {:?}", norm.linear_vars, norm.dropped_vars);
    print!("machine form:\n{}", ideal.to_machine());
    Ok(())
}
