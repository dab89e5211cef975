//! Even-connected vertex pairs and the degree-two generators of
//! `(I(G)^{s+1} : M)` for an `s`-fold edge product `M`.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{cycle_chord, Edge, Graph, GraphError};
use crate::homology::{BettiEngine, HomologyError};
use crate::monomial::{IdealError, Monomial, MonomialIdeal};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EvenError {
    #[error("{0} is not an edge of the host graph")]
    NotAnEdge(Edge),
    #[error("cannot parse edge product `{0}` (expected `u-v,u-v,...`)")]
    Parse(String),
    #[error("host graph is not the standard cycle C_{0}")]
    WrongHost(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

/// An ordered multiset of edges `e_1, ..., e_s` of a host graph, standing for
/// `M = x^{e_1} ... x^{e_s}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EdgeProduct {
    edges: Vec<Edge>,
}

impl EdgeProduct {
    pub fn new(g: &Graph, edges: Vec<Edge>) -> Result<Self, EvenError> {
        if let Some(&e) = edges.iter().find(|e| !g.has_edge(e.0, e.1)) {
            return Err(EvenError::NotAnEdge(e));
        }
        Ok(EdgeProduct { edges })
    }

    /// The empty product, `M = 1`.
    pub fn unit() -> Self {
        EdgeProduct { edges: Vec::new() }
    }

    /// Parses `"2-3,1-2"` (vertex indices of `g`).
    pub fn parse(g: &Graph, text: &str) -> Result<Self, EvenError> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(EdgeProduct::unit());
        }
        let edges = text
            .split(',')
            .map(|part| {
                let (u, v) = part.trim().split_once('-').ok_or_else(|| EvenError::Parse(text.into()))?;
                let u: usize = u.trim().parse().map_err(|_| EvenError::Parse(text.into()))?;
                let v: usize = v.trim().parse().map_err(|_| EvenError::Parse(text.into()))?;
                if u == 0 || v == 0 || u == v {
                    return Err(EvenError::Parse(text.into()));
                }
                Ok(Edge::new(u, v))
            })
            .collect::<Result<Vec<_>, _>>()?;
        EdgeProduct::new(g, edges)
    }

    /// Every `s`-fold product of edges of `g`, as multisets in increasing order.
    pub fn all(g: &Graph, s: usize) -> Vec<EdgeProduct> {
        fn go(edges: &[Edge], start: usize, left: usize, cur: &mut Vec<Edge>, out: &mut Vec<EdgeProduct>) {
            if left == 0 {
                out.push(EdgeProduct { edges: cur.clone() });
                return;
            }
            for i in start..edges.len() {
                cur.push(edges[i]);
                go(edges, i, left - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&g.edges(), 0, s, &mut Vec::new(), &mut out);
        out
    }

    pub fn s(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn multiplicity(&self, e: Edge) -> usize {
        self.edges.iter().filter(|&&f| f == e).count()
    }

    pub fn monomial(&self, nvars: usize) -> Result<Monomial, IdealError> {
        self.edges.iter().try_fold(Monomial::unit(nvars), |m, e| m.mul(&Monomial::from_vars(nvars, &[e.0, e.1])?))
    }

    /// Distinct edges with their multiplicities.
    fn budget(&self) -> Vec<(Edge, usize)> {
        let mut counts: BTreeMap<Edge, usize> = BTreeMap::new();
        for &e in &self.edges {
            *counts.entry(e).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }
}

impl fmt::Display for EdgeProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.edges.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.edges.iter().map(|e| format!("x{}x{}", e.0, e.1)).collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// A walk `p_0, ..., p_{2l+1}` in which every pair `{p_{2j+1}, p_{2j+2}}` is
/// the factor `e_{assignment[j]}` of `M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenConnectionCertificate {
    pub path: Vec<usize>,
    pub assignment: Vec<usize>,
}

impl EvenConnectionCertificate {
    pub fn l(&self) -> usize {
        self.path.len() / 2 - 1
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.path[0], *self.path.last().unwrap())
    }

    /// Re-checks the three defining conditions from scratch.
    pub fn verify(&self, g: &Graph, m: &EdgeProduct) -> Result<(), String> {
        let p = &self.path;
        if p.len() < 4 || p.len() % 2 != 0 {
            return Err(format!("walk has {} vertices; need 2l+2 with l >= 1", p.len()));
        }
        let l = self.l();
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(format!("{}-{} is not an edge", w[0], w[1]));
            }
        }
        if self.assignment.len() != l {
            return Err(format!("{} assignments for l = {l}", self.assignment.len()));
        }
        let mut used: BTreeMap<Edge, usize> = BTreeMap::new();
        for (j, &i) in self.assignment.iter().enumerate() {
            let pair = Edge::new(p[2 * j + 1], p[2 * j + 2]);
            match m.edges.get(i) {
                Some(&e) if e == pair => *used.entry(pair).or_insert(0) += 1,
                _ => return Err(format!("pair {pair} at j = {j} is not the factor e_{}", i + 1)),
            }
        }
        for (e, k) in used {
            if k > m.multiplicity(e) {
                return Err(format!("{e} used {k} times but has multiplicity {}", m.multiplicity(e)));
            }
        }
        Ok(())
    }

    pub fn render(&self) -> String {
        let walk: Vec<String> = self.path.iter().map(|v| format!("x{v}")).collect();
        let pairs: Vec<String> = self
            .assignment
            .iter()
            .enumerate()
            .map(|(j, &i)| format!("{{x{},x{}}}=e{}", self.path[2 * j + 1], self.path[2 * j + 2], i + 1))
            .collect();
        format!("{} [{}]", walk.join(","), pairs.join(" "))
    }
}

/// A shortest even-connecting walk from `u` to `v` (`u == v` allowed), or
/// `None`. Walks may revisit vertices; each factor of `M` is used at most as
/// often as it occurs, which bounds `l` by `s`.
pub fn even_connected(g: &Graph, m: &EdgeProduct, u: usize, v: usize) -> Option<EvenConnectionCertificate> {
    let budget = m.budget();
    (1..=m.s()).find_map(|l| {
        let mut left: Vec<usize> = budget.iter().map(|&(_, k)| k).collect();
        let mut path = vec![u];
        let mut pick = Vec::new();
        walk(g, &budget, &mut left, l, v, &mut path, &mut pick).then(|| EvenConnectionCertificate {
            path,
            assignment: pick.iter().map(|&b| m.edges.iter().position(|&e| e == budget[b].0).unwrap()).collect(),
        })
    })
}

/// Extends `path` (currently ending at some `p_{2j}`) by a free step and a
/// factor step, `l` more times, then a final free step to `target`.
fn walk(
    g: &Graph,
    budget: &[(Edge, usize)],
    left: &mut [usize],
    l: usize,
    target: usize,
    path: &mut Vec<usize>,
    pick: &mut Vec<usize>,
) -> bool {
    let here = *path.last().unwrap();
    if pick.len() == l {
        if g.has_edge(here, target) {
            path.push(target);
            return true;
        }
        return false;
    }
    for a in g.neighbors(here).iter() {
        for b in 0..budget.len() {
            let (e, _) = budget[b];
            if left[b] == 0 {
                continue;
            }
            let Some(next) = e.other(a) else { continue };
            left[b] -= 1;
            path.push(a);
            path.push(next);
            pick.push(b);
            if walk(g, budget, left, l, target, path, pick) {
                return true;
            }
            pick.pop();
            path.truncate(path.len() - 2);
            left[b] += 1;
        }
    }
    false
}

/// `I(G) + (x_u x_v : u, v even-connected w.r.t. M)`, minimalized.
pub fn colon_generators(g: &Graph, m: &EdgeProduct) -> Result<MonomialIdeal, EvenError> {
    if let Some(&e) = m.edges.iter().find(|e| !g.has_edge(e.0, e.1)) {
        return Err(EvenError::NotAnEdge(e));
    }
    let n = g.vertex_count();
    let mut gens = MonomialIdeal::edge_ideal(g).generators().to_vec();
    for u in 1..=n {
        for v in u..=n {
            if !g.has_edge(u, v) && even_connected(g, m, u, v).is_some() {
                let mut exps = vec![0u8; n];
                exps[u - 1] += 1;
                exps[v - 1] += 1;
                gens.push(Monomial::from_exponents(exps));
            }
        }
    }
    Ok(MonomialIdeal::new(n, gens)?)
}

/// `(I(G)^{s+1} : M)` by direct monomial division.
pub fn brute_colon(g: &Graph, m: &EdgeProduct) -> Result<MonomialIdeal, EvenError> {
    let n = g.vertex_count();
    let power = MonomialIdeal::edge_ideal(g).power(m.s() + 1)?;
    Ok(power.colon_by_monomial(&m.monomial(n)?)?)
}

/// `M = (x_{a+1} x_{a+2}) ... (x_{a+2l-1} x_{a+2l}) N` for apex `x_a`, indices
/// mod `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareWitness {
    pub apex: usize,
    pub l: usize,
    pub alternating: Vec<Edge>,
    pub rest: Vec<Edge>,
}

/// Whether `x_n^2 ∈ (I(C_n)^{s+1} : M)` by the factorization criterion for
/// cycles, with the witness when it holds.
pub fn cycle_square_criterion(n: usize, m: &EdgeProduct) -> Result<Option<SquareWitness>, EvenError> {
    cycle_square_criterion_at(n, m, n)
}

/// Same as [`cycle_square_criterion`] with `x_apex` in the role of `x_n`.
pub fn cycle_square_criterion_at(n: usize, m: &EdgeProduct, apex: usize) -> Result<Option<SquareWitness>, EvenError> {
    let c = Graph::cycle(n).map_err(|_| EvenError::WrongHost(n))?;
    EdgeProduct::new(&c, m.edges.clone()).map_err(|_| EvenError::WrongHost(n))?;
    if apex == 0 || apex > n {
        return Err(EvenError::Graph(GraphError::VertexOutOfRange { vertex: apex, n }));
    }
    if n % 2 == 0 || (n - 1) / 2 > m.s() {
        return Ok(None);
    }
    let l = (n - 1) / 2;
    let at = |k: usize| (apex - 1 + k) % n + 1;
    let alternating: Vec<Edge> = (1..=l).map(|j| Edge::new(at(2 * j - 1), at(2 * j))).collect();
    // the alternating edges are pairwise distinct, so one copy of each suffices
    let mut rest = m.edges.clone();
    for e in &alternating {
        match rest.iter().position(|f| f == e) {
            Some(i) => {
                rest.remove(i);
            }
            None => return Ok(None),
        }
    }
    rest.sort();
    Ok(Some(SquareWitness { apex, l, alternating, rest }))
}

/// One generator `M` of `I(C_n)^s` in the colon-regularity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonRecord {
    pub product: EdgeProduct,
    pub colon: String,
    pub regularity: usize,
    pub polarized_regularity: usize,
    pub bound: usize,
    /// `C_n` is a Hamiltonian cycle of the colon's graph.
    pub hamiltonian_cycle: bool,
    /// A chord `{x_{t-1}, x_{t+2}}` of that cycle, required for `n >= 5`.
    pub chord: Option<Edge>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonBoundReport {
    pub n: usize,
    pub s: usize,
    pub records: Vec<ColonRecord>,
}

impl ColonBoundReport {
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }
}

/// For each minimal generator `M` of `I(C_n)^s`: `reg(I^{s+1} : M)` and the
/// regularity of its polarization agree and are at most `⌊n/3⌋ + 1`, and the
/// graph of the squarefree part contains `C_n` and, for `n >= 5`, a chord
/// `{x_{t-1}, x_{t+2}}` of it.
pub fn colon_regularity_bound_check(engine: &BettiEngine, n: usize, s: usize) -> Result<ColonBoundReport, EvenError> {
    let c = Graph::cycle(n)?;
    let bound = n / 3 + 1;
    // one product per distinct monomial
    let mut seen = std::collections::HashSet::new();
    let products: Vec<EdgeProduct> = EdgeProduct::all(&c, s).into_iter().filter(|m| seen.insert(m.monomial(n).unwrap())).collect();
    let cycle: Vec<usize> = (1..=n).collect();
    let records = products
        .into_par_iter()
        .map(|m| {
            let colon = brute_colon(&c, &m)?;
            let regularity = engine.regularity(&colon)?;
            let polarized_regularity = engine.regularity(&colon.polarize().target)?;
            let squarefree: Vec<(usize, usize)> = colon
                .generators()
                .iter()
                .filter(|g| g.is_squarefree())
                .map(|g| {
                    let sup = g.support();
                    (sup[0], sup[1])
                })
                .collect();
            let graph = Graph::from_edges(n, &squarefree)?;
            let hamiltonian_cycle = c.edges().iter().all(|e| graph.has_edge(e.0, e.1));
            let chord = cycle_chord(&graph, &cycle);
            let passed = regularity == polarized_regularity && regularity <= bound && hamiltonian_cycle && (n < 5 || chord.is_some());
            Ok(ColonRecord { product: m, colon: colon.to_string(), regularity, polarized_regularity, bound, hamiltonian_cycle, chord, passed })
        })
        .collect::<Result<Vec<_>, EvenError>>()?;
    Ok(ColonBoundReport { n, s, records })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn product(g: &Graph, text: &str) -> EdgeProduct {
        EdgeProduct::parse(g, text).unwrap()
    }

    #[test]
    fn certificates_for_known_pairs() {
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4), (2, 5), (2, 6), (3, 6)]).unwrap();
        let m = product(&g, "2-6");
        let cert = even_connected(&g, &m, 3, 5).unwrap();
        assert_eq!(cert.path.len(), 4);
        cert.verify(&g, &m).unwrap();

        let c5 = Graph::cycle(5).unwrap();
        let m = product(&c5, "2-3");
        let cert = even_connected(&c5, &m, 1, 4).unwrap();
        assert_eq!(cert.path, vec![1, 2, 3, 4]);
        assert_eq!(cert.render(), "x1,x2,x3,x4 [{x2,x3}=e1]");
        assert!(even_connected(&c5, &product(&c5, "1-2"), 5, 5).is_none());
    }

    #[test]
    fn verify_rejects_bad_certificates() {
        let c5 = Graph::cycle(5).unwrap();
        let m = product(&c5, "2-3");
        let good = EvenConnectionCertificate { path: vec![1, 2, 3, 4], assignment: vec![0] };
        assert!(good.verify(&c5, &m).is_ok());
        let not_walk = EvenConnectionCertificate { path: vec![1, 3, 2, 4], assignment: vec![0] };
        assert!(not_walk.verify(&c5, &m).is_err());
        let overused = EvenConnectionCertificate { path: vec![1, 2, 3, 2, 3, 4], assignment: vec![0, 0] };
        assert!(overused.verify(&c5, &m).is_err());
        let odd = EvenConnectionCertificate { path: vec![1, 2, 3], assignment: vec![] };
        assert!(odd.verify(&c5, &m).is_err());
    }

    #[test]
    fn colon_examples() {
        let c5 = Graph::cycle(5).unwrap();
        let m = product(&c5, "2-3");
        let colon = colon_generators(&c5, &m).unwrap();
        assert_eq!(colon, brute_colon(&c5, &m).unwrap());
        assert!(colon.contains(&Monomial::from_vars(5, &[1, 4]).unwrap()));
        assert_eq!(colon.generators().len(), 6);

        let c3 = Graph::cycle(3).unwrap();
        let colon = colon_generators(&c3, &product(&c3, "1-2")).unwrap();
        assert!(colon.contains(&Monomial::from_vars(3, &[3, 3]).unwrap()));
        assert_eq!(colon, brute_colon(&c3, &product(&c3, "1-2")).unwrap());

        let p4 = Graph::path(4).unwrap();
        assert_eq!(colon_generators(&p4, &EdgeProduct::unit()).unwrap(), MonomialIdeal::edge_ideal(&p4));
        assert!(matches!(EdgeProduct::parse(&p4, "1-3"), Err(EvenError::NotAnEdge(_))));
    }

    #[test]
    fn symmetric_and_valid_on_samples() {
        for g in crate::graph::sample_graphs(6, 25, 3, crate::graph::GraphClass::NonEmpty).unwrap() {
            for m in EdgeProduct::all(&g, 2) {
                for u in 1..=6 {
                    for v in 1..=6 {
                        let c = even_connected(&g, &m, u, v);
                        if let Some(cert) = &c {
                            cert.verify(&g, &m).unwrap();
                            assert_eq!(cert.endpoints(), (u, v));
                        }
                        assert_eq!(c.is_some(), even_connected(&g, &m, v, u).is_some());
                    }
                }
            }
        }
    }

    #[test]
    fn square_criterion_examples() {
        let c3 = Graph::cycle(3).unwrap();
        let w = cycle_square_criterion(3, &product(&c3, "1-2")).unwrap().unwrap();
        assert_eq!((w.l, w.rest.len()), (1, 0));
        let c4 = Graph::cycle(4).unwrap();
        for m in EdgeProduct::all(&c4, 2) {
            assert!(cycle_square_criterion(4, &m).unwrap().is_none());
        }
        let c5 = Graph::cycle(5).unwrap();
        let w = cycle_square_criterion(5, &product(&c5, "1-2,3-4")).unwrap().unwrap();
        assert_eq!(w.l, 2);
        assert!(cycle_square_criterion(5, &product(&c5, "1-2")).unwrap().is_none());
        assert!(matches!(cycle_square_criterion(5, &product(&c3, "1-3")), Err(EvenError::WrongHost(5))));
    }

    #[test]
    fn colon_bound_examples() {
        let engine = BettiEngine::default();
        for (n, s, count) in [(5, 1, 5), (6, 1, 6), (3, 2, 6)] {
            let report = colon_regularity_bound_check(&engine, n, s).unwrap();
            assert_eq!(report.records.len(), count);
            assert!(report.passed(), "{report:?}");
        }
    }
}
