//! Matching invariants and the closed-form regularity formulas and bounds for
//! powers of edge ideals.
//!
//! The evaluators here are pure arithmetic on graph invariants. The `*_check`
//! and probe functions compare them against a [`BettiEngine`].

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexSet};
use crate::homology::{BettiEngine, HomologyError};
use crate::monomial::{IdealError, MonomialIdeal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("graph is not a forest")]
    NotForest,
    #[error("graph has no edges")]
    Edgeless,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("hypothesis not established: {0}")]
    HypothesisNotEstablished(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// `β(G)`: the size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    fn go(g: &Graph, free: u64, size: usize, best: &mut usize) {
        if size + free.count_ones() as usize / 2 <= *best {
            return;
        }
        // lowest free vertex with a free neighbor
        let mut rest = free;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            let nbrs = g.neighbors(v).mask() & free;
            if nbrs == 0 {
                continue;
            }
            let without = free & !(1u64 << (v - 1));
            let mut m = nbrs;
            while m != 0 {
                let w = m.trailing_zeros() as usize;
                m &= m - 1;
                go(g, without & !(1u64 << w), size + 1, best);
            }
            go(g, without, size, best);
            return;
        }
        *best = (*best).max(size);
    }
    let mut best = 0;
    go(g, g.vertices().mask(), 0, &mut best);
    best
}

/// A maximum induced matching, edges in increasing order.
pub fn maximum_induced_matching(g: &Graph) -> Vec<Edge> {
    fn go(g: &Graph, live: u64, chosen: &mut Vec<Edge>, best: &mut Vec<Edge>) {
        if chosen.len() + live.count_ones() as usize / 2 <= best.len() {
            return;
        }
        let mut rest = live;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize + 1;
            rest &= rest - 1;
            let nbrs = g.neighbors(v).mask() & live;
            if nbrs == 0 {
                continue;
            }
            let mut m = nbrs;
            while m != 0 {
                let w = m.trailing_zeros() as usize + 1;
                m &= m - 1;
                // both closed neighborhoods leave the pool
                let blocked = g.closed_neighborhood(v).mask() | g.closed_neighborhood(w).mask();
                chosen.push(Edge::new(v, w));
                go(g, live & !blocked, chosen, best);
                chosen.pop();
            }
            go(g, live & !(1u64 << (v - 1)), chosen, best);
            return;
        }
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
    }
    let mut best = Vec::new();
    go(g, g.vertices().mask(), &mut Vec::new(), &mut best);
    best.sort();
    best
}

/// `ν(G)`: the size of a maximum induced matching.
pub fn induced_matching_number(g: &Graph) -> usize {
    maximum_induced_matching(g).len()
}

pub fn is_induced_matching(g: &Graph, edges: &[Edge]) -> bool {
    let mut covered = VertexSet::empty();
    for e in edges {
        if !g.has_edge(e.0, e.1) || covered.contains(e.0) || covered.contains(e.1) {
            return false;
        }
        covered.insert(e.0);
        covered.insert(e.1);
    }
    g.edges().iter().filter(|e| covered.contains(e.0) && covered.contains(e.1)).count() == edges.len()
}

fn require_power(s: usize) -> Result<(), InvariantError> {
    if s == 0 {
        return Err(InvariantError::InvalidParameter("power s must be at least 1".into()));
    }
    Ok(())
}

/// `reg(I(G)^s) = 2s + ν(G) - 1` for a forest with at least one edge.
pub fn forest_power_regularity(g: &Graph, s: usize) -> Result<usize, InvariantError> {
    require_power(s)?;
    if !g.is_forest() {
        return Err(InvariantError::NotForest);
    }
    if g.edge_count() == 0 {
        return Err(InvariantError::Edgeless);
    }
    Ok(2 * s + induced_matching_number(g) - 1)
}

/// `reg(I(C_n)^s)`: `ν+1` or `ν+2` at `s = 1` depending on `n mod 3`, and
/// `2s + ν - 1` from `s = 2` on, with `ν = ⌊n/3⌋`.
pub fn cycle_power_regularity(n: usize, s: usize) -> Result<usize, InvariantError> {
    require_power(s)?;
    if n < 3 {
        return Err(InvariantError::InvalidParameter(format!("a cycle needs at least 3 vertices (got {n})")));
    }
    let nu = n / 3;
    Ok(match (s, n % 3) {
        (1, 2) => nu + 2,
        (1, _) => nu + 1,
        _ => 2 * s + nu - 1,
    })
}

/// `reg(I^s) = ds + (d-1)(r-1)` for a complete intersection of `r` forms of
/// degree `d`.
pub fn complete_intersection_power_regularity(d: usize, r: usize, s: usize) -> Result<usize, InvariantError> {
    require_power(s)?;
    if d == 0 || r == 0 {
        return Err(InvariantError::InvalidParameter("degree and length must be at least 1".into()));
    }
    Ok(d * s + (d - 1) * (r - 1))
}

/// `2s + ν(G) - 1`, a lower bound for `reg(I(G)^s)`.
pub fn power_lower_bound(g: &Graph, s: usize) -> Result<usize, InvariantError> {
    require_power(s)?;
    if g.edge_count() == 0 {
        return Err(InvariantError::Edgeless);
    }
    Ok(2 * s + induced_matching_number(g) - 1)
}

/// `⌊(n+1)/3⌋ + 1`.
pub fn hamiltonian_path_bound(n: usize) -> usize {
    (n + 1) / 3 + 1
}

/// `⌊n/3⌋ + 1`.
pub fn hamiltonian_cycle_bound(n: usize) -> usize {
    n / 3 + 1
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    HamiltonianPath,
    HamiltonianCycleWithChord,
}

/// A regularity upper bound together with the structure that makes it apply.
/// Vertices in `witness` and `chord` are original labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub bound: usize,
    pub hypothesis: String,
    pub witness: Vec<usize>,
    pub chord: Option<Edge>,
}

/// The Hamiltonian-path bound, if `g` has a Hamiltonian path.
pub fn hamiltonian_path_report(g: &Graph) -> Result<BoundReport, InvariantError> {
    let path = g
        .hamiltonian_path()
        .ok_or_else(|| InvariantError::HypothesisNotEstablished("no Hamiltonian path".into()))?;
    let witness: Vec<usize> = path.iter().map(|&v| g.label(v)).collect();
    Ok(BoundReport {
        kind: BoundKind::HamiltonianPath,
        bound: hamiltonian_path_bound(g.vertex_count()),
        hypothesis: format!("Hamiltonian path {}", join(&witness)),
        witness,
        chord: None,
    })
}

/// The Hamiltonian-cycle bound, if some Hamiltonian cycle `x_1..x_n` of `g`
/// has an edge `{x_{t-1}, x_{t+2}}` that is not a cycle edge.
pub fn hamiltonian_cycle_report(g: &Graph) -> Result<BoundReport, InvariantError> {
    let (cycle, chord) = g
        .hamiltonian_cycle_with_chord()
        .ok_or_else(|| InvariantError::HypothesisNotEstablished("no Hamiltonian cycle with a chord {x_{t-1}, x_{t+2}}".into()))?;
    let witness: Vec<usize> = cycle.iter().map(|&v| g.label(v)).collect();
    let chord = Edge::new(g.label(chord.0), g.label(chord.1));
    Ok(BoundReport {
        kind: BoundKind::HamiltonianCycleWithChord,
        bound: hamiltonian_cycle_bound(g.vertex_count()),
        hypothesis: format!("Hamiltonian cycle {} with chord {chord}", join(&witness)),
        witness,
        chord: Some(chord),
    })
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// `reg(I(G)^s)` through the engine.
pub fn oracle_power_regularity(engine: &BettiEngine, g: &Graph, s: usize) -> Result<usize, InvariantError> {
    require_power(s)?;
    if g.edge_count() == 0 {
        return Err(InvariantError::Edgeless);
    }
    let ideal = MonomialIdeal::edge_ideal(g).power(s)?;
    Ok(engine.regularity(&ideal)?)
}

/// `reg(R/I(G))`, taken to be 0 for an edgeless graph.
pub fn quotient_regularity(engine: &BettiEngine, g: &Graph) -> Result<usize, InvariantError> {
    if g.edge_count() == 0 {
        return Ok(0);
    }
    Ok(engine.regularity(&MonomialIdeal::edge_ideal(g))? - 1)
}

/// One failed inequality from the inductive bounds. Regularities are of
/// `R/I`, vertices are original labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "item", rename_all = "snake_case")]
pub enum InductionViolation {
    InducedSubgraph { vertices: Vec<usize>, sub: usize, whole: usize },
    Vertex { x: usize, whole: usize, deleted: usize, neighborhood_deleted: usize },
    Edge { e: Edge, whole: usize, deleted: usize, neighborhood_deleted: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InductionReport {
    pub graph: String,
    pub regularity: usize,
    pub checks: usize,
    pub violations: Vec<InductionViolation>,
}

/// Checks, with engine regularities, that for `r = reg(R/I(-))`:
///
/// 1. `r(H) <= r(G)` for every induced subgraph `H`;
/// 2. `r(G) <= max(r(G \ x), r(G \ N[x]) + 1)` for every vertex `x`;
/// 3. `r(G) <= max(1, r(G \ e), r(G_e) + 1)` for every edge `e`.
///
/// On the quotient side an edgeless graph has regularity 0, so no term ever
/// needs the regularity of the zero ideal.
pub fn induction_bound_check(engine: &BettiEngine, g: &Graph) -> Result<InductionReport, InvariantError> {
    let whole = quotient_regularity(engine, g)?;
    let mut violations = Vec::new();
    let mut checks = 0;
    let n = g.vertex_count();
    for mask in 0..(1u64 << n) {
        let w = VertexSet::from_mask(mask);
        let h = g.induced_subgraph(&w)?;
        let sub = quotient_regularity(engine, &h)?;
        checks += 1;
        if sub > whole {
            violations.push(InductionViolation::InducedSubgraph { vertices: w.iter().map(|v| g.label(v)).collect(), sub, whole });
        }
    }
    for x in 1..=n {
        let deleted = quotient_regularity(engine, &g.delete_vertex(x)?)?;
        let neighborhood_deleted = quotient_regularity(engine, &g.delete_closed_neighborhood(x)?)?;
        checks += 1;
        if whole > deleted.max(neighborhood_deleted + 1) {
            violations.push(InductionViolation::Vertex { x: g.label(x), whole, deleted, neighborhood_deleted });
        }
    }
    for e in g.edges() {
        let deleted = quotient_regularity(engine, &g.delete_edge(e)?)?;
        let neighborhood_deleted = quotient_regularity(engine, &g.neighborhood_deleted_subgraph(e)?)?;
        checks += 1;
        if whole > 1.max(deleted).max(neighborhood_deleted + 1) {
            violations.push(InductionViolation::Edge { e: Edge::new(g.label(e.0), g.label(e.1)), whole, deleted, neighborhood_deleted });
        }
    }
    Ok(InductionReport { graph: g.to_string(), regularity: whole, checks, violations })
}

/// Checks `reg(I(H) + I(G)^s) <= 2s + ν(K) - 1` for every split of the edges
/// of the forest `K` into two vertex sets inducing disjoint edge sets that
/// together cover `E_K`. Returns the number of splits checked and the
/// offending `(H vertices, G vertices, reg, bound)` tuples.
pub fn decomposition_check(
    engine: &BettiEngine,
    k: &Graph,
    s: usize,
) -> Result<(usize, Vec<(Vec<usize>, Vec<usize>, usize, usize)>), InvariantError> {
    require_power(s)?;
    if !k.is_forest() {
        return Err(InvariantError::NotForest);
    }
    let n = k.vertex_count();
    let edges = k.edges();
    let bound = 2 * s + induced_matching_number(k) - 1;
    let mut checked = 0;
    let mut bad = Vec::new();
    for hm in 0..(1u64 << n) {
        let h_edges: Vec<Edge> = edges.iter().copied().filter(|e| hm >> (e.0 - 1) & 1 == 1 && hm >> (e.1 - 1) & 1 == 1).collect();
        let rest: Vec<Edge> = edges.iter().copied().filter(|e| !h_edges.contains(e)).collect();
        // G must induce exactly the remaining edges; take its vertex set to be
        // their endpoints (adding vertices can only add edges or isolated ones)
        let gm = rest.iter().fold(0u64, |m, e| m | 1 << (e.0 - 1) | 1 << (e.1 - 1));
        let g_induced = edges.iter().filter(|e| gm >> (e.0 - 1) & 1 == 1 && gm >> (e.1 - 1) & 1 == 1).count();
        if g_induced != rest.len() {
            continue;
        }
        // skip vertex sets of H that differ only by isolated vertices
        let h_span = h_edges.iter().fold(0u64, |m, e| m | 1 << (e.0 - 1) | 1 << (e.1 - 1));
        if h_span != hm {
            continue;
        }
        let pairs = |es: &[Edge]| es.iter().map(|e| (e.0, e.1)).collect::<Vec<_>>();
        let ih = MonomialIdeal::edge_ideal(&Graph::from_edges(n, &pairs(&h_edges))?);
        let ig = MonomialIdeal::edge_ideal(&Graph::from_edges(n, &pairs(&rest))?).power(s)?;
        let sum = ih.sum(&ig)?;
        checked += 1;
        if sum.is_zero() {
            continue;
        }
        let reg = engine.regularity(&sum)?;
        if reg > bound {
            let labels = |m: u64| (1..=n).filter(|v| m >> (v - 1) & 1 == 1).map(|v| k.label(v)).collect::<Vec<_>>();
            bad.push((labels(hm), labels(gm), reg, bound));
        }
    }
    Ok((checked, bad))
}

/// `reg(I^s) = 2s + b` observed on `s0..=s_max`. Nothing beyond `s_max` is
/// certified, hence `apparent`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityForm {
    pub slope: usize,
    pub intercept: i64,
    pub onset: usize,
    pub s_max: usize,
    pub values: Vec<usize>,
    pub apparent: bool,
}

/// Computes `reg(I(G)^s)` for `s = 1..=s_max` and reports the longest suffix
/// on which `reg(I^s) - 2s` is constant.
pub fn stabilization_probe(engine: &BettiEngine, g: &Graph, s_max: usize) -> Result<RegularityForm, InvariantError> {
    require_power(s_max)?;
    let values = (1..=s_max).map(|s| oracle_power_regularity(engine, g, s)).collect::<Result<Vec<_>, _>>()?;
    let offsets: Vec<i64> = values.iter().enumerate().map(|(i, &r)| r as i64 - 2 * (i as i64 + 1)).collect();
    let last = *offsets.last().unwrap();
    let onset = offsets.iter().rposition(|&b| b != last).map_or(1, |i| i + 2);
    Ok(RegularityForm { slope: 2, intercept: last, onset, s_max, values, apparent: true })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive search over edge subsets.
    fn brute(g: &Graph, induced: bool) -> usize {
        let edges = g.edges();
        let mut best = 0;
        for mask in 0u32..(1 << edges.len()) {
            let chosen: Vec<Edge> = (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
            let ok = if induced {
                is_induced_matching(g, &chosen)
            } else {
                let mut seen = VertexSet::empty();
                chosen.iter().all(|e| {
                    let fresh = !seen.contains(e.0) && !seen.contains(e.1);
                    seen.insert(e.0);
                    seen.insert(e.1);
                    fresh
                })
            };
            if ok {
                best = best.max(chosen.len());
            }
        }
        best
    }

    fn dense_hexagon() -> Graph {
        // 6-cycle x1..x6 with chords 1-4, 2-5, 2-6, 3-6: perfect matching, ν = 1
        Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4), (2, 5), (2, 6), (3, 6)]).unwrap()
    }

    #[test]
    fn matching_examples() {
        assert_eq!(matching_number(&dense_hexagon()), 3);
        assert_eq!(induced_matching_number(&dense_hexagon()), 1);
        assert_eq!(matching_number(&Graph::path(2).unwrap()), 1);
        assert_eq!(matching_number(&Graph::cycle(7).unwrap()), 3);
        assert_eq!(brute(&Graph::cycle(7).unwrap(), false), 3);
        assert_eq!(induced_matching_number(&Graph::path(5).unwrap()), 2);
        assert_eq!(induced_matching_number(&Graph::cycle(6).unwrap()), 2);
        assert_eq!(induced_matching_number(&Graph::path(2).unwrap()), 1);
        assert_eq!(induced_matching_number(&Graph::empty(4).unwrap()), 0);
    }

    #[test]
    fn path_and_cycle_families() {
        for n in 3..=12 {
            let p = Graph::path(n).unwrap();
            let c = Graph::cycle(n).unwrap();
            assert_eq!(induced_matching_number(&p), (n + 1) / 3, "P{n}");
            assert_eq!(brute(&p, true), (n + 1) / 3, "P{n}");
            assert_eq!(induced_matching_number(&c), n / 3, "C{n}");
            assert_eq!(brute(&c, true), n / 3, "C{n}");
        }
    }

    #[test]
    fn matchings_agree_with_brute_force_on_small_graphs() {
        for n in 1..=6 {
            for g in crate::graph::sample_graphs(n, 60, 11, crate::graph::GraphClass::All).unwrap() {
                let beta = matching_number(&g);
                let nu = induced_matching_number(&g);
                assert_eq!(beta, brute(&g, false), "{g}");
                assert_eq!(nu, brute(&g, true), "{g}");
                assert!(nu <= beta);
                assert!(is_induced_matching(&g, &maximum_induced_matching(&g)));
            }
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(forest_power_regularity(&Graph::star(3).unwrap(), 2), Ok(4));
        assert_eq!(forest_power_regularity(&Graph::path(6).unwrap(), 1), Ok(3));
        assert_eq!(forest_power_regularity(&Graph::matching(2).unwrap(), 3), Ok(7));
        assert_eq!(forest_power_regularity(&Graph::cycle(3).unwrap(), 1), Err(InvariantError::NotForest));
        assert_eq!(cycle_power_regularity(5, 1), Ok(3));
        assert_eq!(cycle_power_regularity(5, 2), Ok(4));
        assert_eq!(cycle_power_regularity(6, 3), Ok(7));
        assert!(cycle_power_regularity(2, 1).is_err());
        assert_eq!(complete_intersection_power_regularity(2, 2, 2), Ok(5));
        assert_eq!(complete_intersection_power_regularity(3, 1, 4), Ok(12));
        assert_eq!(complete_intersection_power_regularity(2, 3, 1), Ok(4));
        assert_eq!(power_lower_bound(&Graph::cycle(5).unwrap(), 3), Ok(6));
        assert_eq!(power_lower_bound(&Graph::path(2).unwrap(), 1), Ok(2));
        assert_eq!(power_lower_bound(&Graph::empty(3).unwrap(), 1), Err(InvariantError::Edgeless));
        assert_eq!(hamiltonian_path_bound(10), 4);
        assert_eq!(hamiltonian_cycle_bound(9), 4);
        assert_eq!(hamiltonian_path_bound(2), 2);
    }

    #[test]
    fn petersen_lower_bound() {
        let outer = (0..5).map(|i| (i + 1, (i + 1) % 5 + 1));
        let spokes = (0..5).map(|i| (i + 1, i + 6));
        let inner = (0..5).map(|i| (i + 6, (i + 2) % 5 + 6));
        let edges: Vec<_> = outer.chain(spokes).chain(inner).collect();
        let g = Graph::from_edges(10, &edges).unwrap();
        let nu = brute(&g, true);
        assert_eq!(nu, 3);
        assert_eq!(power_lower_bound(&g, 1), Ok(4));
    }

    #[test]
    fn bound_reports() {
        let r = hamiltonian_path_report(&Graph::path(4).unwrap()).unwrap();
        assert_eq!(r.bound, 2);
        assert_eq!(r.witness.len(), 4);
        assert!(hamiltonian_path_report(&Graph::star(3).unwrap()).is_err());
        let c6 = Graph::cycle(6).unwrap();
        assert!(hamiltonian_cycle_report(&c6).is_err());
        let chorded = c6.add_edge(Edge::new(1, 4)).unwrap();
        let r = hamiltonian_cycle_report(&chorded).unwrap();
        assert_eq!(r.bound, 3);
        assert!(r.chord.is_some());
    }

    #[test]
    fn induction_checks() {
        let engine = BettiEngine::default();
        for g in [Graph::cycle(5).unwrap(), Graph::path(6).unwrap(), Graph::path(2).unwrap(), dense_hexagon()] {
            let report = induction_bound_check(&engine, &g).unwrap();
            assert!(report.violations.is_empty(), "{report:?}");
        }
        let report = induction_bound_check(&engine, &Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(report.regularity, 2);
    }

    #[test]
    fn decomposition_on_small_forests() {
        let engine = BettiEngine::default();
        for k in [Graph::path(5).unwrap(), Graph::star(3).unwrap(), Graph::matching(2).unwrap()] {
            for s in 1..=2 {
                let (checked, bad) = decomposition_check(&engine, &k, s).unwrap();
                assert!(checked > 0);
                assert!(bad.is_empty(), "{k} s={s}: {bad:?}");
            }
        }
    }

    #[test]
    fn stabilization() {
        let engine = BettiEngine::default();
        let c5 = stabilization_probe(&engine, &Graph::cycle(5).unwrap(), 3).unwrap();
        assert_eq!((c5.intercept, c5.onset, c5.values.clone()), (0, 2, vec![3, 4, 6]));
        let p4 = stabilization_probe(&engine, &Graph::path(4).unwrap(), 3).unwrap();
        assert_eq!((p4.intercept, p4.onset), (0, 1));
        let e = stabilization_probe(&engine, &Graph::path(2).unwrap(), 3).unwrap();
        assert_eq!((e.intercept, e.onset), (0, 1));
        assert!(e.apparent);
    }
}
