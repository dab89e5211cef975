//! Closed-form regularity of powers for forests, cycles and complete
//! intersections, compared against the homology engine.
//!
//! ```text
//! cargo run --example power_formulas
//! ```

use edgereg::invariants::{
    complete_intersection_power_regularity, cycle_power_regularity, forest_power_regularity, induced_matching_number,
    maximum_induced_matching, oracle_power_regularity, stabilization_probe,
};
use edgereg::{BettiEngine, Graph, MonomialIdeal};

fn main() -> Result<(), edgereg::Error> {
    let engine = BettiEngine::default();

    println!("forests: reg(I^s) = 2s + nu - 1");
    for seed in 0..4 {
        let g = Graph::random_forest(7, seed)?;
        if g.edge_count() == 0 {
            continue;
        }
        let matching: Vec<String> = maximum_induced_matching(&g).iter().map(|e| e.to_string()).collect();
        print!("  {g}  nu = {} via {{{}}}:", induced_matching_number(&g), matching.join(", "));
        for s in 1..=3 {
            let oracle = oracle_power_regularity(&engine, &g, s)?;
            print!("  s={s} {}/{oracle}", forest_power_regularity(&g, s)?);
        }
        println!();
    }

    println!("cycles: formula / engine");
    for n in 3..=8 {
        let c = Graph::cycle(n)?;
        let row: Vec<String> = (1..=3)
            .map(|s| Ok(format!("{}/{}", cycle_power_regularity(n, s)?, oracle_power_regularity(&engine, &c, s)?)))
            .collect::<Result<_, edgereg::Error>>()?;
        println!("  C{n}: {}", row.join("  "));
    }

    let probe = stabilization_probe(&engine, &Graph::cycle(5)?, 4)?;
    println!(
        "C5 values {:?}: reg = {}s + {} from s = {} on",
        probe.values, probe.slope, probe.intercept, probe.onset
    );

    let cubics = MonomialIdeal::parse_text("x1*x2*x3\nx4*x5*x6", Some(6))?;
    for s in 1..=3 {
        println!(
            "(x1x2x3, x4x5x6)^{s}: formula {} engine {}",
            complete_intersection_power_regularity(3, 2, s)?,
            engine.regularity(&cubics.power(s)?)?
        );
    }
    Ok(())
}
