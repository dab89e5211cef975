//! Graded Betti tables and regularity of edge ideals and their powers.
//!
//! ```text
//! cargo run --example betti_tables
//! ```

use edgereg::{BettiEngine, EngineConfig, Graph, MonomialIdeal};

fn main() -> Result<(), edgereg::Error> {
    let engine = BettiEngine::default();

    let p3 = MonomialIdeal::edge_ideal(&Graph::path(3)?);
    let table = engine.betti_table(&p3)?;
    println!("I(P3) = {p3}");
    print!("{}", table.render_grid());
    print!("{}", table.to_csv(false));
    println!("{}", table.to_json(true));

    let c5 = MonomialIdeal::edge_ideal(&Graph::cycle(5)?);
    for s in 1..=3 {
        let power = c5.power(s)?;
        let table = engine.betti_table(&power)?;
        println!(
            "I(C5)^{s}: {} generators, reg = {}, pd = {}",
            power.generators().len(),
            table.regularity().unwrap_or(0),
            table.projective_dimension().unwrap_or(0)
        );
    }
    print!("{}", engine.betti_table(&c5.power(2)?)?.render_grid());

    // Computing over GF(2) and Q side by side records any disagreement.
    let checked = BettiEngine::new(EngineConfig { cross_check: true, ..EngineConfig::default() });
    let k5 = MonomialIdeal::edge_ideal(&Graph::complete(5)?);
    println!("reg I(K5) = {}", checked.regularity(&k5)?);
    println!("cross-check findings: {}", checked.findings().len());
    let stats = checked.stats();
    println!("{} multidegrees, {} complexes computed, {} memo hits", stats.multidegrees, stats.complexes_computed, stats.complex_memo_hits);
    Ok(())
}
