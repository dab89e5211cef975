//! On-disk cache of Betti tables keyed by ideal, field and tool version.
//!
//! ```text
//! cargo run --example result_cache -- /tmp/edgereg-cache
//! ```

use std::env;
use std::time::Instant;

use edgereg::{BettiCache, BettiEngine, Field, Graph, MonomialIdeal};

fn main() -> Result<(), edgereg::Error> {
    let dir = env::args().nth(1).unwrap_or_else(|| env::temp_dir().join("edgereg-cache").display().to_string());
    let cache = BettiCache::open(&dir)?;
    let engine = BettiEngine::default();
    let ideal = MonomialIdeal::edge_ideal(&Graph::cycle(7)?).power(2)?;
    println!("cache dir {dir}, key {}", cache.key(&ideal, Field::Gf2));

    for round in 1..=2 {
        let start = Instant::now();
        let (table, hit) = cache.get_or_compute(&engine, &ideal, Field::Gf2)?;
        println!(
            "round {round}: reg = {} ({}, {:.1} ms)",
            table.regularity().unwrap_or(0),
            if hit { "cache hit" } else { "computed" },
            start.elapsed().as_secs_f64() * 1e3
        );
    }
    Ok(())
}
