//! Even-connected vertex pairs and the colon ideals (I^{s+1} : M).
//!
//! ```text
//! cargo run --example even_connection
//! ```

use edgereg::even::{brute_colon, colon_generators, cycle_square_criterion, even_connected};
use edgereg::{EdgeProduct, Graph};

fn main() -> Result<(), edgereg::Error> {
    let c6 = Graph::cycle(6)?;
    let m = EdgeProduct::parse(&c6, "2-3,5-6")?;
    println!("G = {c6}, M = {m}");

    for u in 1..=6 {
        for v in u..=6 {
            if c6.has_edge(u, v) {
                continue;
            }
            if let Some(cert) = even_connected(&c6, &m, u, v) {
                cert.verify(&c6, &m).expect("certificate checks out");
                println!("  x{u}x{v}: {}", cert.render());
            }
        }
    }

    let colon = colon_generators(&c6, &m)?;
    assert_eq!(colon, brute_colon(&c6, &m)?);
    println!("(I^3 : M) = {colon}");

    // x_a^2 lies in the colon exactly when the walk can return to a.
    let c7 = Graph::cycle(7)?;
    for text in ["1-2", "1-2,3-4", "1-2,3-4,5-6", "1-2,1-2,1-2"] {
        let m = EdgeProduct::parse(&c7, text)?;
        match cycle_square_criterion(7, &m)? {
            Some(w) => println!("C7, M = {m}: x{}^2 in colon (l = {})", w.apex, w.l),
            None => println!("C7, M = {m}: no squares in colon"),
        }
    }
    Ok(())
}
