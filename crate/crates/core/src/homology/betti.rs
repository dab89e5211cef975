use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Mutex, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::complex::{SimplicialComplex, TorsionFactor};
use super::packed::{Packed, MAX_PACKED_EXPONENT, MAX_PACKED_VARS};
use super::{Field, HomologyError};
use crate::monomial::{Monomial, MonomialIdeal};

/// Lattices whose bounding box has at most this many points are found by
/// scanning the box instead of closing the generators under lcm.
const BOX_SCAN_LIMIT: u64 = 4096;

pub const BETTI_SCHEMA: &str = "edgereg.betti/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub field: Field,
    /// Also compute every complex over the other field and record any
    /// disagreement as a [`Finding`].
    pub cross_check: bool,
    /// Largest number of faces enumerated for one upper-Koszul complex.
    pub max_faces: usize,
    /// Largest lcm lattice accepted for one ideal.
    pub max_multidegrees: usize,
    /// Lattices at least this large are processed on the rayon pool.
    pub parallel_threshold: usize,
    /// Remember `reg` per ideal. Worth turning off for sweeps over millions
    /// of distinct ideals.
    pub memoize_ideals: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig { field: Field::Gf2, cross_check: false, max_faces: 1 << 14, max_multidegrees: 1 << 20, parallel_threshold: 512, memoize_ideals: true }
    }
}

/// Something the engine noticed that is not an error: torsion in integral
/// homology, or a complex whose GF(2) and rational ranks differ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Finding {
    FieldDisagreement { vertex_count: usize, facets: Vec<u32>, gf2: Vec<u64>, rational: Vec<u64> },
    Torsion { vertex_count: usize, facets: Vec<u32>, factors: Vec<TorsionFactor> },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct EngineStats {
    pub multidegrees: u64,
    pub complexes_computed: u64,
    pub complex_memo_hits: u64,
    pub ideal_memo_hits: u64,
}

#[derive(Default)]
struct Counters {
    multidegrees: AtomicU64,
    complexes_computed: AtomicU64,
    complex_memo_hits: AtomicU64,
    ideal_memo_hits: AtomicU64,
}

#[derive(Default, Clone)]
struct MemoEntry {
    gf2: Option<Vec<u64>>,
    rational: Option<Vec<u64>>,
}

impl MemoEntry {
    fn get(&self, field: Field) -> Option<&Vec<u64>> {
        match field {
            Field::Gf2 => self.gf2.as_ref(),
            Field::Rational => self.rational.as_ref(),
        }
    }

    fn set(&mut self, field: Field, ranks: Vec<u64>) {
        match field {
            Field::Gf2 => self.gf2 = Some(ranks),
            Field::Rational => self.rational = Some(ranks),
        }
    }
}

/// Computes Betti tables, memoizing the homology of every upper-Koszul
/// complex it meets. One engine is meant to be shared across a whole sweep;
/// it is `Sync`, and the memo only ever stores values that are a function of
/// the complex (or the ideal) used as key.
pub struct BettiEngine {
    config: EngineConfig,
    complexes: RwLock<HashMap<SimplicialComplex, MemoEntry>>,
    ideals: RwLock<HashMap<(Field, MonomialIdeal), usize>>,
    findings: Mutex<Vec<Finding>>,
    counters: Counters,
}

impl Default for BettiEngine {
    fn default() -> Self {
        BettiEngine::new(EngineConfig::default())
    }
}

impl BettiEngine {
    pub fn new(config: EngineConfig) -> Self {
        BettiEngine {
            config,
            complexes: RwLock::new(HashMap::new()),
            ideals: RwLock::new(HashMap::new()),
            findings: Mutex::new(Vec::new()),
            counters: Counters::default(),
        }
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn field(&self) -> Field {
        self.config.field
    }

    pub fn findings(&self) -> Vec<Finding> {
        self.findings.lock().unwrap().clone()
    }

    pub fn stats(&self) -> EngineStats {
        let c = &self.counters;
        EngineStats {
            multidegrees: c.multidegrees.load(Ordering::Relaxed),
            complexes_computed: c.complexes_computed.load(Ordering::Relaxed),
            complex_memo_hits: c.complex_memo_hits.load(Ordering::Relaxed),
            ideal_memo_hits: c.ideal_memo_hits.load(Ordering::Relaxed),
        }
    }

    pub fn betti_table(&self, ideal: &MonomialIdeal) -> Result<BettiTable, HomologyError> {
        self.betti_table_in(ideal, self.config.field)
    }

    pub fn betti_table_in(&self, ideal: &MonomialIdeal, field: Field) -> Result<BettiTable, HomologyError> {
        if ideal.is_zero() {
            return Err(HomologyError::ZeroIdeal);
        }
        let gens = pack_generators(ideal)?;
        let lattice = self.lcm_lattice(&gens)?;
        self.counters.multidegrees.fetch_add(lattice.len() as u64, Ordering::Relaxed);

        let at = |&alpha: &Packed| -> Result<Vec<BettiEntry>, HomologyError> {
            let ranks = self.ranks(local_complex(&gens, alpha), field)?;
            let exps = alpha.to_monomial(ideal.nvars()).exponents().to_vec();
            Ok(ranks
                .iter()
                .enumerate()
                .filter(|(_, &r)| r > 0)
                .map(|(i, &beta)| BettiEntry { i, alpha: exps.clone(), beta })
                .collect())
        };
        let per_alpha: Vec<Vec<BettiEntry>> = if lattice.len() >= self.config.parallel_threshold {
            lattice.par_iter().map(at).collect::<Result<_, _>>()?
        } else {
            lattice.iter().map(at).collect::<Result<_, _>>()?
        };
        let mut entries: Vec<BettiEntry> = per_alpha.into_iter().flatten().collect();
        entries.sort_by(|a, b| a.i.cmp(&b.i).then(a.degree().cmp(&b.degree())).then(b.alpha.cmp(&a.alpha)));
        let table = BettiTable { field, nvars: ideal.nvars(), entries };
        check_generators(&table, ideal)?;
        Ok(table)
    }

    /// `reg(I)`, memoized per ideal (with unused variables dropped).
    pub fn regularity(&self, ideal: &MonomialIdeal) -> Result<usize, HomologyError> {
        self.regularity_in(ideal, self.config.field)
    }

    pub fn regularity_in(&self, ideal: &MonomialIdeal, field: Field) -> Result<usize, HomologyError> {
        if ideal.is_zero() {
            return Err(HomologyError::ZeroIdeal);
        }
        if ideal.is_unit() {
            return Err(HomologyError::UnitIdeal);
        }
        if !self.config.memoize_ideals {
            return Ok(self.betti_table_in(ideal, field)?.regularity().expect("nonzero ideal has a nonzero Betti number"));
        }
        let key = (field, compact(ideal));
        if let Some(&r) = self.ideals.read().unwrap().get(&key) {
            self.counters.ideal_memo_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(r);
        }
        let reg = self.betti_table_in(&key.1, field)?.regularity().expect("nonzero ideal has a nonzero Betti number");
        self.ideals.write().unwrap().insert(key, reg);
        Ok(reg)
    }

    /// All `α` with `x^α` the lcm of some nonempty set of generators.
    fn lcm_lattice(&self, gens: &[Packed]) -> Result<Vec<Packed>, HomologyError> {
        let top = gens.iter().fold(Packed(0), |acc, &g| acc.lcm(g));
        let nibbles: Vec<(usize, u8)> = (0..MAX_PACKED_VARS).map(|i| (i, top.exponent(i))).filter(|&(_, e)| e > 0).collect();
        let box_size = nibbles.iter().fold(1u64, |acc, &(_, e)| acc.saturating_mul(e as u64 + 1));
        let budget = self.config.max_multidegrees;
        let mut out = Vec::new();
        if box_size <= BOX_SCAN_LIMIT {
            let mut digits = vec![0u8; nibbles.len()];
            loop {
                let alpha = Packed(digits.iter().zip(&nibbles).fold(0u128, |w, (&d, &(i, _))| w | (d as u128) << (4 * i)));
                let below = gens.iter().filter(|g| g.divides(alpha)).fold(None, |acc: Option<Packed>, &g| Some(acc.map_or(g, |a| a.lcm(g))));
                if below == Some(alpha) {
                    out.push(alpha);
                }
                // odometer increment
                let mut k = 0;
                while k < digits.len() && digits[k] == nibbles[k].1 {
                    digits[k] = 0;
                    k += 1;
                }
                if k == digits.len() {
                    break;
                }
                digits[k] += 1;
            }
        } else {
            let mut seen: HashSet<Packed> = gens.iter().copied().collect();
            let mut frontier: Vec<Packed> = seen.iter().copied().collect();
            while let Some(x) = frontier.pop() {
                for &g in gens {
                    let y = x.lcm(g);
                    if seen.insert(y) {
                        if seen.len() > budget {
                            return Err(HomologyError::MultidegreeBudget { budget });
                        }
                        frontier.push(y);
                    }
                }
            }
            out = seen.into_iter().collect();
        }
        if out.len() > budget {
            return Err(HomologyError::MultidegreeBudget { budget });
        }
        out.sort_by_key(|a| (a.degree(), a.0));
        Ok(out)
    }

    fn ranks(&self, complex: SimplicialComplex, field: Field) -> Result<Vec<u64>, HomologyError> {
        if let Some(r) = self.complexes.read().unwrap().get(&complex).and_then(|e| e.get(field)) {
            self.counters.complex_memo_hits.fetch_add(1, Ordering::Relaxed);
            return Ok(r.clone());
        }
        self.counters.complexes_computed.fetch_add(1, Ordering::Relaxed);
        let mut entry = MemoEntry::default();
        let mut fields = vec![field];
        if self.config.cross_check {
            fields.push(field.other());
        }
        for f in fields {
            let h = complex.reduced_homology(f, self.config.max_faces)?;
            if !h.torsion.is_empty() {
                self.findings.lock().unwrap().push(Finding::Torsion {
                    vertex_count: complex.vertex_count(),
                    facets: complex.facets().to_vec(),
                    factors: h.torsion.clone(),
                });
            }
            entry.set(f, trim(h.ranks));
        }
        if let (Some(a), Some(b)) = (&entry.gf2, &entry.rational) {
            if a != b {
                self.findings.lock().unwrap().push(Finding::FieldDisagreement {
                    vertex_count: complex.vertex_count(),
                    facets: complex.facets().to_vec(),
                    gf2: a.clone(),
                    rational: b.clone(),
                });
            }
        }
        let ranks = entry.get(field).cloned().expect("requested field computed");
        let mut memo = self.complexes.write().unwrap();
        let slot = memo.entry(complex).or_default();
        if let Some(r) = entry.gf2 {
            slot.gf2.get_or_insert(r);
        }
        if let Some(r) = entry.rational {
            slot.rational.get_or_insert(r);
        }
        Ok(ranks)
    }
}

fn trim(mut ranks: Vec<u64>) -> Vec<u64> {
    while ranks.last() == Some(&0) {
        ranks.pop();
    }
    ranks
}

fn pack_generators(ideal: &MonomialIdeal) -> Result<Vec<Packed>, HomologyError> {
    if ideal.nvars() > MAX_PACKED_VARS {
        return Err(HomologyError::TooManyVariables(ideal.nvars()));
    }
    ideal
        .generators()
        .iter()
        .map(|g| {
            Packed::from_monomial(g).ok_or_else(|| {
                HomologyError::ExponentTooLarge(*g.exponents().iter().filter(|&&e| e > MAX_PACKED_EXPONENT).max().unwrap())
            })
        })
        .collect()
}

/// `K^α(I)` on the support of `α`, from the generators dividing `x^α`.
fn local_complex(gens: &[Packed], alpha: Packed) -> SimplicialComplex {
    let support = alpha.support_guards();
    let mut positions = [0u32; MAX_PACKED_VARS];
    let mut k = 0;
    let mut s = support;
    while s != 0 {
        positions[k] = s.trailing_zeros();
        k += 1;
        s &= s - 1;
    }
    let positions = &positions[..k];
    let facets = gens.iter().filter(|g| g.divides(alpha)).map(|g| {
        let lt = g.lt_guards(alpha);
        positions.iter().enumerate().fold(0u32, |m, (j, &p)| m | ((lt >> p) as u32 & 1) << j)
    });
    SimplicialComplex::from_generators(k, facets)
}

/// Restriction to the variables that occur in some generator.
fn compact(ideal: &MonomialIdeal) -> MonomialIdeal {
    let used: Vec<usize> = (1..=ideal.nvars()).filter(|&v| ideal.generators().iter().any(|g| g.exponent(v) > 0)).collect();
    if used.len() == ideal.nvars() {
        return ideal.clone();
    }
    let gens = ideal.generators().iter().map(|g| Monomial::from_exponents(used.iter().map(|&v| g.exponent(v)).collect()));
    MonomialIdeal::new(used.len(), gens).expect("same ambient")
}

/// `β_{0,α} = 1` exactly at the minimal generators.
fn check_generators(table: &BettiTable, ideal: &MonomialIdeal) -> Result<(), HomologyError> {
    let zeroth: BTreeSet<&[u8]> = table.entries.iter().filter(|e| e.i == 0).map(|e| e.alpha.as_slice()).collect();
    let gens: BTreeSet<&[u8]> = ideal.generators().iter().map(|g| g.exponents()).collect();
    if zeroth != gens || table.entries.iter().any(|e| e.i == 0 && e.beta != 1) {
        return Err(HomologyError::SelfCheck(format!("β_0 does not match the minimal generators of {ideal}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub alpha: Vec<u8>,
    pub beta: u64,
}

impl BettiEntry {
    pub fn degree(&self) -> usize {
        self.alpha.iter().map(|&a| a as usize).sum()
    }
}

/// Nonzero multigraded Betti numbers `β_{i,α}` of an ideal, in a fixed order
/// (by `i`, then `|α|`, then `α` descending).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiTable {
    pub field: Field,
    pub nvars: usize,
    pub entries: Vec<BettiEntry>,
}

#[derive(Serialize)]
struct CoarseRecord {
    i: usize,
    j: usize,
    beta: u64,
}

#[derive(Serialize)]
struct BettiDocument<'a> {
    schema: &'static str,
    field: Field,
    nvars: usize,
    regularity: Option<usize>,
    coarse: Vec<CoarseRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multigraded: Option<&'a [BettiEntry]>,
}

impl BettiTable {
    /// `β_{i,j} = Σ_{|α| = j} β_{i,α}`.
    pub fn coarse(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for e in &self.entries {
            *out.entry((e.i, e.degree())).or_insert(0) += e.beta;
        }
        out
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.iter().filter(|e| e.i == i && e.degree() == j).map(|e| e.beta).sum()
    }

    pub fn get_multigraded(&self, i: usize, alpha: &[u8]) -> u64 {
        self.entries.iter().find(|e| e.i == i && e.alpha == alpha).map_or(0, |e| e.beta)
    }

    pub fn regularity(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.degree() - e.i).max()
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.iter().map(|e| e.i).max()
    }

    /// Coarse table of `R/I`: `β_{0,0} = 1` and `β_{i+1,j}(R/I) = β_{i,j}(I)`.
    pub fn quotient_coarse(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out: BTreeMap<(usize, usize), u64> = self.coarse().into_iter().map(|((i, j), b)| ((i + 1, j), b)).collect();
        out.insert((0, 0), 1);
        out
    }

    /// `reg(R/I)`, read off [`BettiTable::quotient_coarse`].
    pub fn quotient_regularity(&self) -> usize {
        self.quotient_coarse().keys().map(|&(i, j)| j - i).max().unwrap_or(0)
    }

    pub fn to_csv(&self, multigraded: bool) -> String {
        let mut out = String::new();
        if multigraded {
            out.push_str("i,alpha,beta\n");
            for e in &self.entries {
                let alpha: Vec<String> = e.alpha.iter().map(|a| a.to_string()).collect();
                let _ = writeln!(out, "{},{},{}", e.i, alpha.join(" "), e.beta);
            }
        } else {
            out.push_str("i,j,beta\n");
            for ((i, j), b) in self.coarse() {
                let _ = writeln!(out, "{i},{j},{b}");
            }
        }
        out
    }

    pub fn to_json(&self, multigraded: bool) -> String {
        let doc = BettiDocument {
            schema: BETTI_SCHEMA,
            field: self.field,
            nvars: self.nvars,
            regularity: self.regularity(),
            coarse: self.coarse().into_iter().map(|((i, j), beta)| CoarseRecord { i, j, beta }).collect(),
            multigraded: multigraded.then_some(self.entries.as_slice()),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    /// The usual grid: column `i`, row `j - i`.
    pub fn render_grid(&self) -> String {
        let coarse = self.coarse();
        let Some(pd) = self.projective_dimension() else {
            return "(zero table)\n".to_string();
        };
        let reg = self.regularity().unwrap_or(0);
        let low = coarse.keys().map(|&(i, j)| j - i).min().unwrap_or(0);
        let width = coarse.values().map(|b| b.to_string().len()).max().unwrap_or(1).max(2);
        let mut out = format!("{:>4}:", "");
        for i in 0..=pd {
            let _ = write!(out, " {i:>width$}");
        }
        out.push('\n');
        for row in low..=reg {
            let _ = write!(out, "{row:>4}:");
            for i in 0..=pd {
                match coarse.get(&(i, i + row)) {
                    Some(b) => {
                        let _ = write!(out, " {b:>width$}");
                    }
                    None => {
                        let _ = write!(out, " {:>width$}", ".");
                    }
                }
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::homology::UpperKoszulComplex;

    fn edge(g: &Graph) -> MonomialIdeal {
        MonomialIdeal::edge_ideal(g)
    }

    #[test]
    fn path_and_principal_tables() {
        let engine = BettiEngine::default();
        let t = engine.betti_table(&edge(&Graph::path(3).unwrap())).unwrap();
        let coarse: Vec<_> = t.coarse().into_iter().collect();
        assert_eq!(coarse, vec![((0, 2), 2), ((1, 3), 1)]);
        assert_eq!(t.get_multigraded(1, &[1, 1, 1]), 1);
        let principal = MonomialIdeal::parse_text("x1*x2", Some(2)).unwrap();
        let t = engine.betti_table(&principal).unwrap();
        assert_eq!(t.coarse().into_iter().collect::<Vec<_>>(), vec![((0, 2), 1)]);
        assert_eq!(t.regularity(), Some(2));
        assert_eq!(t.quotient_regularity(), 1);
    }

    #[test]
    fn regularity_examples() {
        let engine = BettiEngine::default();
        assert_eq!(engine.regularity(&edge(&Graph::path(4).unwrap())).unwrap(), 2);
        let c5 = edge(&Graph::cycle(5).unwrap());
        assert_eq!(engine.regularity(&c5).unwrap(), 3);
        assert_eq!(engine.regularity(&c5.power(2).unwrap()).unwrap(), 4);
        assert_eq!(engine.regularity(&MonomialIdeal::zero(3)), Err(HomologyError::ZeroIdeal));
        assert_eq!(engine.regularity(&MonomialIdeal::unit(3)), Err(HomologyError::UnitIdeal));
    }

    #[test]
    fn unit_ideal_table() {
        let t = BettiEngine::default().betti_table(&MonomialIdeal::unit(2)).unwrap();
        assert_eq!(t.entries, vec![BettiEntry { i: 0, alpha: vec![0, 0], beta: 1 }]);
    }

    #[test]
    fn packed_complex_matches_generic() {
        let ideal = MonomialIdeal::parse_text("x1^2*x2\nx2*x3^2\nx1*x3\nx2^3*x4", Some(4)).unwrap();
        let gens = pack_generators(&ideal).unwrap();
        for code in 0..256u32 {
            let exps: Vec<u8> = (0..4).map(|i| (code >> (2 * i) & 3) as u8).collect();
            let alpha = Monomial::from_exponents(exps);
            let generic = UpperKoszulComplex::new(&ideal, &alpha).unwrap().complex;
            let fast = local_complex(&gens, Packed::from_monomial(&alpha).unwrap());
            assert_eq!(fast, generic, "{alpha}");
        }
    }

    #[test]
    fn lattice_routes_agree() {
        // the same ideal through the box scan and through lcm closure
        let ideal = edge(&Graph::cycle(5).unwrap()).power(2).unwrap();
        let gens = pack_generators(&ideal).unwrap();
        let engine = BettiEngine::default();
        let scanned = engine.lcm_lattice(&gens).unwrap();
        let mut closed: HashSet<Packed> = gens.iter().copied().collect();
        loop {
            let next: HashSet<Packed> = closed.iter().flat_map(|&a| closed.iter().map(move |&b| a.lcm(b))).collect();
            if next.len() == closed.len() {
                break;
            }
            closed = next;
        }
        let mut closed: Vec<Packed> = closed.into_iter().collect();
        closed.sort_by_key(|a| (a.degree(), a.0));
        assert_eq!(scanned, closed);
    }

    #[test]
    fn budget_errors() {
        let engine = BettiEngine::new(EngineConfig { max_multidegrees: 3, ..EngineConfig::default() });
        let c5 = edge(&Graph::cycle(5).unwrap());
        assert_eq!(engine.betti_table(&c5), Err(HomologyError::MultidegreeBudget { budget: 3 }));
        let wide = MonomialIdeal::parse_text("x1^8", Some(1)).unwrap();
        assert_eq!(BettiEngine::default().betti_table(&wide), Err(HomologyError::ExponentTooLarge(8)));
    }

    #[test]
    fn renderings_are_stable() {
        let t = BettiEngine::default().betti_table(&edge(&Graph::path(3).unwrap())).unwrap();
        assert_eq!(t.to_csv(false), "i,j,beta\n0,2,2\n1,3,1\n");
        assert_eq!(t.to_csv(true), "i,alpha,beta\n0,1 1 0,1\n0,0 1 1,1\n1,1 1 1,1\n");
        assert_eq!(t.render_grid(), "    :  0  1\n   2:  2  1\n");
        let json: serde_json::Value = serde_json::from_str(&t.to_json(true)).unwrap();
        assert_eq!(json["schema"], BETTI_SCHEMA);
        assert_eq!(json["regularity"], 2);
        assert_eq!(json["multigraded"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn cross_check_runs_both_fields() {
        let engine = BettiEngine::new(EngineConfig { cross_check: true, ..EngineConfig::default() });
        let c6 = edge(&Graph::cycle(6).unwrap());
        let gf2 = engine.betti_table_in(&c6, Field::Gf2).unwrap();
        let computed = engine.stats().complexes_computed;
        let q = engine.betti_table_in(&c6, Field::Rational).unwrap();
        // the rational pass is served entirely from the memo
        assert_eq!(engine.stats().complexes_computed, computed);
        assert_eq!(gf2.entries, q.entries);
        assert!(engine.findings().is_empty());
    }
}
