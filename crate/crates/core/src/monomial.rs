//! Monomials and monomial ideals with exact, canonical generator sets.
//!
//! A [`MonomialIdeal`] always stores its minimal generators, sorted in
//! descending lexicographic order of exponent vectors (so `x1x2` precedes
//! `x2x3`). Two ideals are equal exactly when their generator lists are.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("ambient variable counts differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("exponent overflow in variable x{0}")]
    ExponentOverflow(usize),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("variable x{var} outside ambient ring of {nvars} variables")]
    VariableOutOfRange { var: usize, nvars: usize },
    #[error("{0} does not divide {1}")]
    NotDivisible(String, String),
}

/// `x^a` for an exponent vector `a`; variable `i` (1-indexed) is `exps[i-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u8>,
}

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial { exps: vec![0; nvars] }
    }

    /// `x_i` (1-indexed).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Monomial::unit(nvars);
        m.exps[i - 1] = 1;
        m
    }

    pub fn from_exponents(exps: Vec<u8>) -> Self {
        Monomial { exps }
    }

    /// Squarefree product of the listed (1-indexed) variables.
    pub fn from_vars(nvars: usize, vars: &[usize]) -> Result<Self, IdealError> {
        let mut m = Monomial::unit(nvars);
        for &v in vars {
            if v == 0 || v > nvars {
                return Err(IdealError::VariableOutOfRange { var: v, nvars });
            }
            m.exps[v - 1] = m.exps[v - 1].checked_add(1).ok_or(IdealError::ExponentOverflow(v))?;
        }
        Ok(m)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u8] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u8 {
        self.exps[i - 1]
    }

    pub fn degree(&self) -> usize {
        self.exps.iter().map(|&e| e as usize).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Variables (1-indexed) with nonzero exponent.
    pub fn support(&self) -> Vec<usize> {
        self.exps.iter().enumerate().filter(|(_, &e)| e > 0).map(|(i, _)| i + 1).collect()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, IdealError> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .enumerate()
            .map(|(i, (&a, &b))| a.checked_add(b).ok_or(IdealError::ExponentOverflow(i + 1)))
            .collect::<Result<_, _>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.max(b)).collect() }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.min(b)).collect() }
    }

    /// `self / other`, which must divide.
    pub fn div(&self, other: &Monomial) -> Result<Monomial, IdealError> {
        self.check_ambient(other)?;
        if !other.divides(self) {
            return Err(IdealError::NotDivisible(other.to_string(), self.to_string()));
        }
        Ok(Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a - b).collect() })
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial { exps: self.exps.iter().zip(&other.exps).map(|(&a, &b)| a.saturating_sub(b)).collect() }
    }

    /// Same exponents in a ring with `nvars` variables (extra ones are zero).
    pub fn extend(&self, nvars: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(nvars, 0);
        Monomial { exps }
    }

    fn check_ambient(&self, other: &Monomial) -> Result<(), IdealError> {
        if self.nvars() != other.nvars() {
            return Err(IdealError::AmbientMismatch(self.nvars(), other.nvars()));
        }
        Ok(())
    }

    /// Parses `x1^2*x3` (or `1`) in a ring with `nvars` variables.
    pub fn parse(s: &str, nvars: usize) -> Result<Monomial, String> {
        let s = s.trim();
        let mut m = Monomial::unit(nvars);
        if s == "1" {
            return Ok(m);
        }
        for factor in s.split('*') {
            let factor = factor.trim();
            let body = factor.strip_prefix('x').ok_or_else(|| format!("bad factor `{factor}`"))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<u8>().map_err(|_| format!("bad exponent in `{factor}`"))?),
                None => (body, 1),
            };
            let i: usize = idx.parse().map_err(|_| format!("bad variable index in `{factor}`"))?;
            if i == 0 || i > nvars {
                return Err(format!("variable x{i} outside 1..={nvars}"));
            }
            m.exps[i - 1] = m.exps[i - 1].checked_add(exp).ok_or_else(|| format!("exponent overflow in `{factor}`"))?;
        }
        Ok(m)
    }

    /// Renders with a custom variable namer; exponent 1 is elided.
    pub fn render_with(&self, name: impl Fn(usize) -> String) -> String {
        let factors: Vec<String> = self
            .exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { name(i + 1) } else { format!("{}^{}", name(i + 1), e) })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|i| format!("x{i}")))
    }
}

/// Keeps exactly the divisibility-minimal elements, deduplicated and sorted
/// in the canonical order.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Vec<Monomial> {
    let mut all: Vec<Monomial> = gens.into_iter().collect::<HashSet<_>>().into_iter().collect();
    all.sort_by_key(|m| m.degree());
    let mut kept: Vec<Monomial> = Vec::new();
    for m in all {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

/// A monomial ideal in `k[x_1..x_n]`, held by its minimal generators.
///
/// The zero ideal has no generators; the unit ideal has the single
/// generator `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    nvars: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self, IdealError> {
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.nvars() != nvars) {
            return Err(IdealError::AmbientMismatch(nvars, g.nvars()));
        }
        Ok(MonomialIdeal { nvars, gens: minimalize(gens) })
    }

    pub fn zero(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: Vec::new() }
    }

    pub fn unit(nvars: usize) -> Self {
        MonomialIdeal { nvars, gens: vec![Monomial::unit(nvars)] }
    }

    /// `I(G)`: one squarefree quadric per edge.
    pub fn edge_ideal(g: &Graph) -> Self {
        let n = g.vertex_count();
        let gens = g.edges().into_iter().map(|e| {
            let mut m = Monomial::unit(n);
            m.exps[e.0 - 1] = 1;
            m.exps[e.1 - 1] = 1;
            m
        });
        MonomialIdeal { nvars: n, gens: minimalize(gens) }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    fn check_ambient(&self, other: &MonomialIdeal) -> Result<(), IdealError> {
        if self.nvars != other.nvars {
            return Err(IdealError::AmbientMismatch(self.nvars, other.nvars));
        }
        Ok(())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ambient(other)?;
        Ok(MonomialIdeal { nvars: self.nvars, gens: minimalize(self.gens.iter().chain(&other.gens).cloned()) })
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal, IdealError> {
        self.check_ambient(other)?;
        let mut prods = HashSet::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.insert(a.mul(b)?);
            }
        }
        Ok(MonomialIdeal { nvars: self.nvars, gens: minimalize(prods) })
    }

    /// `I^s`; `s = 0` gives the unit ideal.
    pub fn power(&self, s: usize) -> Result<MonomialIdeal, IdealError> {
        let mut acc = MonomialIdeal::unit(self.nvars);
        for _ in 0..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(I : m)`, generated by `g / gcd(g, m)` over the generators `g`.
    pub fn colon_by_monomial(&self, m: &Monomial) -> Result<MonomialIdeal, IdealError> {
        if m.nvars() != self.nvars {
            return Err(IdealError::AmbientMismatch(self.nvars, m.nvars()));
        }
        Ok(MonomialIdeal { nvars: self.nvars, gens: minimalize(self.gens.iter().map(|g| g.colon(m))) })
    }

    /// Same generators in a ring with more variables.
    pub fn extend(&self, nvars: usize) -> MonomialIdeal {
        assert!(nvars >= self.nvars);
        MonomialIdeal { nvars, gens: self.gens.iter().map(|g| g.extend(nvars)).collect() }
    }

    /// Largest exponent of each variable among the generators.
    pub fn max_exponents(&self) -> Vec<u8> {
        let mut out = vec![0u8; self.nvars];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    /// One generator per line in the `x<i>^<e>` notation.
    pub fn to_text(&self) -> String {
        self.gens.iter().map(|g| format!("{g}\n")).collect()
    }

    /// Parses the text format. With `nvars = None` the ambient ring is the
    /// smallest one containing every variable mentioned.
    pub fn parse_text(text: &str, nvars: Option<usize>) -> Result<MonomialIdeal, IdealError> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let n = match nvars {
            Some(n) => n,
            None => {
                let mut max = 0;
                for &(line, l) in &lines {
                    for factor in l.split('*') {
                        let body = factor.trim().trim_start_matches('x');
                        let idx = body.split('^').next().unwrap_or("");
                        if idx == "1" && !factor.contains('x') {
                            continue;
                        }
                        let i: usize = idx
                            .parse()
                            .map_err(|_| IdealError::Parse { line, msg: format!("bad factor `{}`", factor.trim()) })?;
                        max = max.max(i);
                    }
                }
                max
            }
        };
        let gens = lines
            .iter()
            .map(|&(line, l)| Monomial::parse(l, n).map_err(|msg| IdealError::Parse { line, msg }))
            .collect::<Result<Vec<_>, _>>()?;
        MonomialIdeal::new(n, gens)
    }

    /// `vars <n>` header, then one whitespace-separated exponent vector per line.
    pub fn to_machine(&self) -> String {
        let mut out = format!("vars {}\n", self.nvars);
        for g in &self.gens {
            let row: Vec<String> = g.exponents().iter().map(|e| e.to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn parse_machine(text: &str) -> Result<MonomialIdeal, IdealError> {
        let mut nvars = None;
        let mut gens = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let l = raw.trim();
            if l.is_empty() {
                continue;
            }
            let perr = |msg: &str| IdealError::Parse { line, msg: msg.to_string() };
            match nvars {
                None => {
                    let n = l
                        .strip_prefix("vars")
                        .and_then(|r| r.trim().parse::<usize>().ok())
                        .ok_or_else(|| perr("expected `vars <n>` header"))?;
                    nvars = Some(n);
                }
                Some(n) => {
                    let exps = l
                        .split_whitespace()
                        .map(|t| t.parse::<u8>().map_err(|_| perr("bad exponent")))
                        .collect::<Result<Vec<_>, _>>()?;
                    if exps.len() != n {
                        return Err(perr("exponent vector length differs from `vars`"));
                    }
                    gens.push(Monomial::from_exponents(exps));
                }
            }
        }
        MonomialIdeal::new(nvars.ok_or(IdealError::Parse { line: 1, msg: "empty input".into() })?, gens)
    }

    /// Standard polarization: `x_i^k` becomes `x_i y_{i,1} .. y_{i,k-1}`.
    pub fn polarize(&self) -> PolarizationMap {
        let maxes = self.max_exponents();
        let mut slots = Vec::new();
        let mut slot_start = vec![0usize; self.nvars];
        for (i, &e) in maxes.iter().enumerate() {
            slot_start[i] = self.nvars + slots.len();
            for k in 1..e.max(1) {
                slots.push(PolarSlot { base: i + 1, occurrence: k as usize });
            }
        }
        let total = self.nvars + slots.len();
        let gens = self.gens.iter().map(|g| {
            let mut exps = vec![0u8; total];
            for (i, &e) in g.exponents().iter().enumerate() {
                if e > 0 {
                    exps[i] = 1;
                    for k in 1..e as usize {
                        exps[slot_start[i] + k - 1] = 1;
                    }
                }
            }
            Monomial::from_exponents(exps)
        });
        let target = MonomialIdeal { nvars: total, gens: minimalize(gens) };
        PolarizationMap { source: self.clone(), target, slots }
    }

    /// Drops unused variables and splits off degree-one generators; neither
    /// changes the regularity of the remaining part.
    pub fn normalize(&self) -> NormalizedIdeal {
        let linear: Vec<usize> = self.gens.iter().filter(|g| g.degree() == 1).map(|g| g.support()[0]).collect();
        let rest: Vec<&Monomial> = self.gens.iter().filter(|g| g.degree() != 1).collect();
        let mut used = vec![false; self.nvars];
        for g in &rest {
            for v in g.support() {
                used[v - 1] = true;
            }
        }
        let kept: Vec<usize> = (1..=self.nvars).filter(|&v| used[v - 1]).collect();
        let gens = rest.iter().map(|g| Monomial::from_exponents(kept.iter().map(|&v| g.exponent(v)).collect()));
        let ideal = MonomialIdeal { nvars: kept.len(), gens: minimalize(gens) };
        let dropped = (1..=self.nvars).filter(|v| !used[v - 1] && !linear.contains(v)).collect();
        NormalizedIdeal { ideal, kept_vars: kept, linear_vars: linear, dropped_vars: dropped }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", gens.join(", "))
    }
}

/// New variable `y_{base,occurrence}` introduced by polarization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PolarSlot {
    pub base: usize,
    pub occurrence: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolarizationMap {
    pub source: MonomialIdeal,
    /// Squarefree ideal over `source.nvars() + slots.len()` variables.
    pub target: MonomialIdeal,
    /// `slots[k]` is variable `source.nvars() + k + 1` of the target ring.
    pub slots: Vec<PolarSlot>,
}

impl PolarizationMap {
    pub fn is_identity(&self) -> bool {
        self.slots.is_empty()
    }

    /// Base variable of target variable `v`.
    pub fn base_of(&self, v: usize) -> usize {
        let n = self.source.nvars();
        if v <= n {
            v
        } else {
            self.slots[v - n - 1].base
        }
    }

    /// Substitutes every new variable back to its base variable.
    pub fn depolarize(&self, m: &Monomial) -> Monomial {
        let mut exps = vec![0u8; self.source.nvars()];
        for (i, &e) in m.exponents().iter().enumerate() {
            exps[self.base_of(i + 1) - 1] += e;
        }
        Monomial::from_exponents(exps)
    }

    /// Name of target variable `v`: `x<i>`, or `y<i>` / `y<i>_<k>`.
    pub fn variable_name(&self, v: usize) -> String {
        let n = self.source.nvars();
        if v <= n {
            return format!("x{v}");
        }
        let slot = self.slots[v - n - 1];
        if slot.occurrence == 1 {
            format!("y{}", slot.base)
        } else {
            format!("y{}_{}", slot.base, slot.occurrence)
        }
    }

    pub fn render_target(&self) -> String {
        let gens: Vec<String> = self.target.generators().iter().map(|g| g.render_with(|v| self.variable_name(v))).collect();
        format!("({})", gens.join(", "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalizedIdeal {
    /// The reduced ideal, over `kept_vars.len()` variables.
    pub ideal: MonomialIdeal,
    /// Original index of each variable of the reduced ring.
    pub kept_vars: Vec<usize>,
    /// Variables that were generators of the original ideal.
    pub linear_vars: Vec<usize>,
    /// Variables that appear in no generator.
    pub dropped_vars: Vec<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn ideal(n: usize, text: &str) -> MonomialIdeal {
        MonomialIdeal::parse_text(text, Some(n)).unwrap()
    }

    fn mono(n: usize, s: &str) -> Monomial {
        Monomial::parse(s, n).unwrap()
    }

    #[test]
    fn edge_ideals() {
        let p3 = MonomialIdeal::edge_ideal(&Graph::path(3).unwrap());
        assert_eq!(p3.to_string(), "(x1*x2, x2*x3)");
        let c3 = MonomialIdeal::edge_ideal(&Graph::cycle(3).unwrap());
        assert_eq!(c3.generators().len(), 3);
        assert!(c3.contains(&mono(3, "x1*x3")));
        assert!(MonomialIdeal::edge_ideal(&Graph::empty(4).unwrap()).is_zero());
    }

    #[test]
    fn powers() {
        let p3 = MonomialIdeal::edge_ideal(&Graph::path(3).unwrap());
        assert_eq!(p3.power(2).unwrap(), ideal(3, "x1^2*x2^2\nx1*x2^2*x3\nx2^2*x3^2"));
        assert_eq!(p3.power(1).unwrap(), p3);
        assert!(p3.power(0).unwrap().is_unit());
        let c3 = MonomialIdeal::edge_ideal(&Graph::cycle(3).unwrap());
        let sq = c3.power(2).unwrap();
        assert_eq!(sq.generators().len(), 6);
        assert!(sq.generators().iter().all(|g| g.degree() == 4));
        let big = MonomialIdeal::new(1, [Monomial::from_exponents(vec![200])]).unwrap();
        assert_eq!(big.power(2), Err(IdealError::ExponentOverflow(1)));
    }

    #[test]
    fn colon_and_sum() {
        let c5 = MonomialIdeal::edge_ideal(&Graph::cycle(5).unwrap());
        let col = c5.power(2).unwrap().colon_by_monomial(&mono(5, "x2*x3")).unwrap();
        assert!(col.generators().contains(&mono(5, "x1*x4")));
        assert_eq!(c5.colon_by_monomial(&Monomial::unit(5)).unwrap(), c5);
        let c3 = MonomialIdeal::edge_ideal(&Graph::cycle(3).unwrap());
        let col3 = c3.power(2).unwrap().colon_by_monomial(&mono(3, "x1*x2")).unwrap();
        assert!(col3.generators().contains(&mono(3, "x3^2")));
        assert_eq!(c5.sum(&c3), Err(IdealError::AmbientMismatch(5, 3)));
        let s = ideal(3, "x1*x2").sum(&ideal(3, "x1\nx3^2")).unwrap();
        assert_eq!(s, ideal(3, "x1\nx3^2"));
    }

    #[test]
    fn minimalize_keeps_antichain() {
        assert_eq!(minimalize([mono(2, "x1*x2"), mono(2, "x1^2*x2")]), vec![mono(2, "x1*x2")]);
        assert_eq!(minimalize([mono(2, "x1"), mono(2, "x2"), mono(2, "x1*x2")]), vec![mono(2, "x1"), mono(2, "x2")]);
        let anti = vec![mono(3, "x1*x2"), mono(3, "x2*x3")];
        assert_eq!(minimalize(anti.clone()), anti);
    }

    #[test]
    fn polarization() {
        let p = ideal(1, "x1^2").polarize();
        assert_eq!(p.render_target(), "(x1*y1)");
        let p = ideal(2, "x1^2\nx1*x2").polarize();
        assert_eq!(p.render_target(), "(x1*x2, x1*y1)");
        assert!(p.target.is_squarefree());
        let sf = ideal(3, "x1*x2\nx2*x3").polarize();
        assert!(sf.is_identity());
        assert_eq!(sf.target, sf.source);
        let p = ideal(2, "x1^3*x2^2").polarize();
        assert_eq!(p.render_target(), "(x1*x2*y1*y1_2*y2)");
        let back = minimalize(p.target.generators().iter().map(|g| p.depolarize(g)));
        assert_eq!(back, p.source.generators());
    }

    #[test]
    fn normalization() {
        let g = Graph::from_edges(4, &[(1, 2), (2, 4)]).unwrap();
        let norm = MonomialIdeal::edge_ideal(&g).normalize();
        assert_eq!(norm.ideal.nvars(), 3);
        assert_eq!(norm.kept_vars, vec![1, 2, 4]);
        assert_eq!(norm.dropped_vars, vec![3]);
        let norm = ideal(3, "x1*x2\nx3").normalize();
        assert_eq!(norm.ideal, ideal(2, "x1*x2"));
        assert_eq!(norm.linear_vars, vec![3]);
        let full = ideal(2, "x1*x2");
        assert_eq!(full.normalize().ideal, full);
    }

    #[test]
    fn text_formats() {
        let i = ideal(4, "x1^2*x3\nx2*x4\n");
        assert_eq!(i.to_text(), "x1^2*x3\nx2*x4\n");
        assert_eq!(MonomialIdeal::parse_text(&i.to_text(), None).unwrap(), i);
        assert_eq!(i.to_machine(), "vars 4\n2 0 1 0\n0 1 0 1\n");
        assert_eq!(MonomialIdeal::parse_machine(&i.to_machine()).unwrap(), i);
        assert!(matches!(MonomialIdeal::parse_text("x1*y2", Some(2)), Err(IdealError::Parse { line: 1, .. })));
        assert!(matches!(MonomialIdeal::parse_machine("vars 2\n1 0 1"), Err(IdealError::Parse { line: 2, .. })));
    }
}
