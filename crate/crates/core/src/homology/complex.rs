//! Finite simplicial complexes on at most 32 vertices and their reduced
//! homology, plus the upper-Koszul complex `K^α(I)` of a monomial ideal.

use std::collections::HashSet;

use super::gf2::BitMatrix;
use super::smith::invariant_factors;
use super::{Field, HomologyError};
use crate::monomial::{Monomial, MonomialIdeal};

/// A simplicial complex given by its facets (faces are `u32` vertex masks).
///
/// No facets at all is the void complex; the single facet `0` is the complex
/// `{∅}` whose only face is the empty set. The two are different: the first
/// has no reduced homology, the second has `H̃_{-1} = k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertex_count: usize,
    facets: Vec<u32>,
}

impl SimplicialComplex {
    pub fn void(vertex_count: usize) -> Self {
        SimplicialComplex { vertex_count, facets: Vec::new() }
    }

    /// Builds the complex generated by `generators`, keeping only the
    /// inclusion-maximal ones.
    pub fn from_generators(vertex_count: usize, generators: impl IntoIterator<Item = u32>) -> Self {
        assert!(vertex_count <= 32);
        SimplicialComplex { vertex_count, facets: maximal_sets(generators.into_iter().collect()) }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Maximal faces, sorted by size (largest first) then mask.
    pub fn facets(&self) -> &[u32] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn contains(&self, face: u32) -> bool {
        self.facets.iter().any(|&f| face & !f == 0)
    }

    /// Dimension of the largest face (`-1` for `{∅}`, `None` when void).
    pub fn dimension(&self) -> Option<i32> {
        self.facets.first().map(|f| f.count_ones() as i32 - 1)
    }

    /// Every face, sorted by dimension and then mask. Fails once more than
    /// `budget` faces have been produced.
    pub fn faces(&self, budget: usize) -> Result<Vec<u32>, HomologyError> {
        let mut out: Vec<u32> = if self.vertex_count <= 20 {
            let mut seen = vec![0u64; (1usize << self.vertex_count).div_ceil(64)];
            let mut out = Vec::new();
            for &f in &self.facets {
                let mut sub = f;
                loop {
                    let (w, b) = (sub as usize / 64, sub as usize % 64);
                    if seen[w] >> b & 1 == 0 {
                        seen[w] |= 1 << b;
                        out.push(sub);
                        if out.len() > budget {
                            return Err(HomologyError::FaceBudget { budget });
                        }
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & f;
                }
            }
            out
        } else {
            let mut seen = HashSet::new();
            for &f in &self.facets {
                let mut sub = f;
                loop {
                    if seen.insert(sub) && seen.len() > budget {
                        return Err(HomologyError::FaceBudget { budget });
                    }
                    if sub == 0 {
                        break;
                    }
                    sub = (sub - 1) & f;
                }
            }
            seen.into_iter().collect()
        };
        out.sort_by_key(|&f| (f.count_ones(), f));
        Ok(out)
    }

    /// `f_{-1}, f_0, f_1, ...`: the number of faces of each dimension.
    pub fn f_vector(&self, budget: usize) -> Result<Vec<u64>, HomologyError> {
        let faces = self.faces(budget)?;
        let mut f = Vec::new();
        for face in faces {
            let d = face.count_ones() as usize;
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        Ok(f)
    }

    /// Reduced homology ranks and the Euler-characteristic self-check.
    pub fn reduced_homology(&self, field: Field, budget: usize) -> Result<ReducedHomology, HomologyError> {
        if self.is_void() {
            return Ok(ReducedHomology { field, ranks: Vec::new(), torsion: Vec::new() });
        }
        let faces = self.faces(budget)?;
        let top = faces.last().map_or(0, |f| f.count_ones() as usize);
        let mut by_dim: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        for f in faces {
            by_dim[f.count_ones() as usize].push(f);
        }
        // boundary_rank[d] = rank of the map from faces of size d to size d-1
        let mut boundary_rank = vec![0u64; top + 2];
        let mut torsion = Vec::new();
        for size in 1..=top {
            let (rank, tors) = boundary_rank_of(&by_dim[size], &by_dim[size - 1], field)?;
            boundary_rank[size] = rank;
            // torsion in the cokernel of the map out of size `size` lands in
            // H̃ of dimension size - 2
            torsion.extend(tors.into_iter().map(|t| TorsionFactor { dimension: size as i32 - 2, factor: t }));
        }
        let ranks: Vec<u64> = (0..=top).map(|size| by_dim[size].len() as u64 - boundary_rank[size] - boundary_rank[size + 1]).collect();
        let h = ReducedHomology { field, ranks, torsion };

        let chi_faces: i64 = by_dim.iter().enumerate().map(|(size, fs)| sign(size) * fs.len() as i64).sum();
        let chi_homology: i64 = h.ranks.iter().enumerate().map(|(size, &r)| sign(size) * r as i64).sum();
        if chi_faces != chi_homology {
            return Err(HomologyError::SelfCheck(format!(
                "Euler characteristic mismatch: faces give {chi_faces}, homology gives {chi_homology} for facets {:?}",
                self.facets
            )));
        }
        Ok(h)
    }
}

/// `(-1)^(size-1)`, i.e. the sign of a face of dimension `size - 1`.
fn sign(size: usize) -> i64 {
    if size % 2 == 1 {
        1
    } else {
        -1
    }
}

fn maximal_sets(mut sets: Vec<u32>) -> Vec<u32> {
    sets.sort_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    sets.dedup();
    let mut kept: Vec<u32> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| s & !k == 0) {
            kept.push(s);
        }
    }
    kept
}

/// Rank of the boundary map from `upper` faces to `lower` faces (one size
/// smaller, both sorted). Over the rationals also returns the invariant
/// factors greater than one.
fn boundary_rank_of(upper: &[u32], lower: &[u32], field: Field) -> Result<(u64, Vec<i64>), HomologyError> {
    let index = |f: u32| lower.binary_search(&f).expect("subcomplex closed under faces");
    match field {
        Field::Gf2 => {
            let mut m = BitMatrix::zeros(upper.len(), lower.len());
            for (r, &f) in upper.iter().enumerate() {
                let mut bits = f;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    m.set(r, index(f & !low));
                    bits &= bits - 1;
                }
            }
            Ok((m.rank() as u64, Vec::new()))
        }
        Field::Rational => {
            let mut m = vec![vec![0i64; lower.len()]; upper.len()];
            for (r, &f) in upper.iter().enumerate() {
                let mut bits = f;
                let mut pos = 0;
                while bits != 0 {
                    let low = bits & bits.wrapping_neg();
                    m[r][index(f & !low)] = if pos % 2 == 0 { 1 } else { -1 };
                    pos += 1;
                    bits &= bits - 1;
                }
            }
            let factors = invariant_factors(m)?;
            let torsion = factors.iter().copied().filter(|&d| d > 1).collect();
            Ok((factors.len() as u64, torsion))
        }
    }
}

/// A torsion coefficient of integral reduced homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TorsionFactor {
    pub dimension: i32,
    pub factor: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedHomology {
    pub field: Field,
    /// `ranks[i]` is the rank of `H̃_{i-1}`; empty for the void complex.
    pub ranks: Vec<u64>,
    /// Integral torsion found while computing over the rationals.
    pub torsion: Vec<TorsionFactor>,
}

impl ReducedHomology {
    /// Rank of `H̃_dim` for `dim >= -1`.
    pub fn rank(&self, dim: i32) -> u64 {
        self.ranks.get((dim + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// `K^α(I)`: faces are the sets `W` of variables with `x^α / ∏_{u∈W} u ∈ I`.
///
/// Vertices are the variables in the support of `α`, renumbered `0..k` in
/// increasing order (`variables` maps them back). Variables outside the
/// support can never lie in a face.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UpperKoszulComplex {
    pub alpha: Monomial,
    /// 1-indexed ring variable of each local vertex.
    pub variables: Vec<usize>,
    pub complex: SimplicialComplex,
}

impl UpperKoszulComplex {
    /// Builds the complex from its facet description: for each generator `g`
    /// dividing `x^α`, the set `{i : g_i < α_i}` is a face, and every face
    /// lies in one of these.
    pub fn new(ideal: &MonomialIdeal, alpha: &Monomial) -> Result<Self, HomologyError> {
        if alpha.nvars() != ideal.nvars() {
            return Err(HomologyError::AmbientMismatch(ideal.nvars(), alpha.nvars()));
        }
        let variables = alpha.support();
        if variables.len() > 32 {
            return Err(HomologyError::TooManyVariables(variables.len()));
        }
        let generators = ideal.generators().iter().filter(|g| g.divides(alpha)).map(|g| {
            let mut mask = 0u32;
            for (local, &v) in variables.iter().enumerate() {
                if g.exponent(v) < alpha.exponent(v) {
                    mask |= 1 << local;
                }
            }
            mask
        });
        let complex = SimplicialComplex::from_generators(variables.len(), generators);
        Ok(UpperKoszulComplex { alpha: alpha.clone(), variables, complex })
    }

    /// The defining condition, checked directly: `W` (a set of ring
    /// variables) is a face iff `x^α / ∏ W` is a monomial lying in `I`.
    pub fn defining_condition(ideal: &MonomialIdeal, alpha: &Monomial, w: &[usize]) -> bool {
        let Ok(divisor) = Monomial::from_vars(alpha.nvars(), w) else {
            return false;
        };
        match alpha.div(&divisor) {
            Ok(q) => ideal.contains(&q),
            Err(_) => false,
        }
    }

    /// Whether the ring variables `w` form a face.
    pub fn is_face(&self, w: &[usize]) -> bool {
        let mut mask = 0u32;
        for v in w {
            match self.variables.iter().position(|x| x == v) {
                Some(local) => mask |= 1 << local,
                None => return false,
            }
        }
        self.complex.contains(mask)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BUDGET: usize = 1 << 14;

    fn ranks(c: &SimplicialComplex, field: Field) -> Vec<u64> {
        c.reduced_homology(field, BUDGET).unwrap().ranks
    }

    #[test]
    fn spheres_and_points() {
        let two_points = SimplicialComplex::from_generators(2, [0b01, 0b10]);
        assert_eq!(ranks(&two_points, Field::Gf2), vec![0, 1]);
        let empty_face = SimplicialComplex::from_generators(0, [0]);
        assert_eq!(ranks(&empty_face, Field::Gf2), vec![1]);
        assert_eq!(empty_face.dimension(), Some(-1));
        let void = SimplicialComplex::void(3);
        assert!(ranks(&void, Field::Gf2).is_empty());
        assert_eq!(void.dimension(), None);
        let hollow = SimplicialComplex::from_generators(3, [0b011, 0b101, 0b110]);
        assert_eq!(ranks(&hollow, Field::Gf2), vec![0, 0, 1]);
        assert_eq!(ranks(&hollow, Field::Rational), vec![0, 0, 1]);
        let solid = SimplicialComplex::from_generators(3, [0b111, 0b011]);
        assert_eq!(solid.facets(), &[0b111]);
        assert!(solid.reduced_homology(Field::Gf2, BUDGET).unwrap().is_acyclic());
    }

    #[test]
    fn projective_plane_sees_characteristic() {
        // six-vertex triangulation of RP^2
        let tris = [[0, 1, 3], [0, 1, 5], [0, 2, 4], [0, 2, 5], [0, 3, 4], [1, 2, 3], [1, 2, 4], [1, 4, 5], [2, 3, 5], [3, 4, 5]];
        let gens = tris.iter().map(|t| t.iter().fold(0u32, |m, &v| m | 1 << v));
        let rp2 = SimplicialComplex::from_generators(6, gens);
        let gf2 = rp2.reduced_homology(Field::Gf2, BUDGET).unwrap();
        let q = rp2.reduced_homology(Field::Rational, BUDGET).unwrap();
        assert_eq!(gf2.rank(1), 1);
        assert_eq!(gf2.rank(2), 1);
        assert!(q.is_acyclic());
        assert_eq!(q.torsion, vec![TorsionFactor { dimension: 1, factor: 2 }]);
    }

    #[test]
    fn face_budget() {
        let simplex = SimplicialComplex::from_generators(10, [0x3ff]);
        assert_eq!(simplex.faces(1 << 10).unwrap().len(), 1024);
        assert_eq!(simplex.faces(1000), Err(HomologyError::FaceBudget { budget: 1000 }));
        let big = SimplicialComplex::from_generators(24, [0xff, 0xff_0000]);
        assert_eq!(big.f_vector(BUDGET).unwrap()[1], 16);
    }

    #[test]
    fn upper_koszul_examples() {
        let i = MonomialIdeal::parse_text("x1*x2", Some(2)).unwrap();
        let k = UpperKoszulComplex::new(&i, &Monomial::parse("x1*x2", 2).unwrap()).unwrap();
        assert_eq!(k.complex.facets(), &[0]);

        let p3 = MonomialIdeal::parse_text("x1*x2\nx2*x3", Some(3)).unwrap();
        let k = UpperKoszulComplex::new(&p3, &Monomial::parse("x1*x2*x3", 3).unwrap()).unwrap();
        let faces = k.complex.faces(BUDGET).unwrap();
        assert_eq!(faces, vec![0, 0b001, 0b100]);
        assert!(k.is_face(&[1]) && k.is_face(&[3]) && !k.is_face(&[2]) && !k.is_face(&[1, 3]));

        let k = UpperKoszulComplex::new(&p3, &Monomial::unit(3)).unwrap();
        assert!(k.complex.is_void());
    }

    #[test]
    fn facet_description_matches_definition() {
        let i = MonomialIdeal::parse_text("x1^2*x2\nx2*x3^2\nx1*x3\nx2^3", Some(3)).unwrap();
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    let alpha = Monomial::from_exponents(vec![a, b, c]);
                    let k = UpperKoszulComplex::new(&i, &alpha).unwrap();
                    for w in 0..8u32 {
                        let vars: Vec<usize> = (1..=3).filter(|v| w >> (v - 1) & 1 == 1).collect();
                        assert_eq!(k.is_face(&vars), UpperKoszulComplex::defining_condition(&i, &alpha, &vars), "{alpha} {vars:?}");
                    }
                }
            }
        }
    }
}
