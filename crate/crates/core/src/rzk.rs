use crate::chain::{BettiTable, ChainComplex};
use crate::field::FieldSpec;
use crate::lambda::LambdaMap;
use crate::simplicial::SimplicialComplex;
use crate::subset::VertexSet;
use crate::{Error, Result};
use std::collections::HashMap;

/// Default ceiling on the number of cells of the cube model (the CLI can
/// override it through TORIC_SPLIT_MAX_CELLS).
pub const DEFAULT_MAX_CELLS: usize = 2_000_000;

/// Hard encoding limit: 3 bits per coordinate in a u64, and the geometric
/// pipeline is not meant to go anywhere near this wide anyway.
pub const MAX_GEOMETRY_VERTICES: u32 = 21;

/// One factor of a subdivided-interval cell: the endpoints {0}, {1}, the
/// midpoint {1/2}, and the half-intervals [0,1/2], [1/2,1]. The midpoint
/// subdivision is what makes setwise-fixed cells pointwise fixed, so the
/// orbit cells of any subgroup of the coordinate flips form a CW structure.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Factor {
    P0,
    P1,
    PH,
    L,
    U,
}

impl Factor {
    fn code(self) -> u64 {
        match self {
            Factor::P0 => 0,
            Factor::P1 => 1,
            Factor::PH => 2,
            Factor::L => 3,
            Factor::U => 4,
        }
    }

    fn from_code(c: u64) -> Factor {
        match c {
            0 => Factor::P0,
            1 => Factor::P1,
            2 => Factor::PH,
            3 => Factor::L,
            4 => Factor::U,
            _ => unreachable!("invalid factor code"),
        }
    }

    fn is_interval(self) -> bool {
        matches!(self, Factor::L | Factor::U)
    }
}

/// A product cell of the subdivided cube [0,1]^m, encoded 3 bits per
/// coordinate with coordinate 1 in the most significant slot, so the numeric
/// order on codes is the lexicographic order on factor tuples.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CubeCell(pub u64);

impl CubeCell {
    pub fn from_factors(fs: &[Factor]) -> CubeCell {
        let mut code = 0u64;
        for f in fs {
            code = code << 3 | f.code();
        }
        CubeCell(code)
    }

    pub fn factor(self, i: u32, m: u32) -> Factor {
        Factor::from_code(self.0 >> (3 * (m - i)) & 0b111)
    }

    pub fn with_factor(self, i: u32, m: u32, f: Factor) -> CubeCell {
        let shift = 3 * (m - i);
        CubeCell(self.0 & !(0b111 << shift) | f.code() << shift)
    }

    /// Support τ: coordinates with factor in {PH, L, U}.
    pub fn support(self, m: u32) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for i in 1..=m {
            if !matches!(self.factor(i, m), Factor::P0 | Factor::P1) {
                s = s.insert(i);
            }
        }
        s
    }

    pub fn dim(self, m: u32) -> u32 {
        (1..=m).filter(|i| self.factor(*i, m).is_interval()).count() as u32
    }

    pub fn describe(self, m: u32) -> String {
        (1..=m)
            .map(|i| match self.factor(i, m) {
                Factor::P0 => "0",
                Factor::P1 => "1",
                Factor::PH => "h",
                Factor::L => "L",
                Factor::U => "U",
            })
            .collect()
    }
}

/// The coordinate-flip action: at each i ∈ g swap 0↔1 and [0,1/2]↔[1/2,1]
/// (fixing the midpoint); each interval flip reverses orientation.
pub fn act(g: VertexSet, c: CubeCell, m: u32) -> (CubeCell, i64) {
    let mut out = c;
    let mut sign = 1i64;
    for i in g.vertices() {
        let f = c.factor(i, m);
        let nf = match f {
            Factor::P0 => Factor::P1,
            Factor::P1 => Factor::P0,
            Factor::PH => Factor::PH,
            Factor::L => {
                sign = -sign;
                Factor::U
            }
            Factor::U => {
                sign = -sign;
                Factor::L
            }
        };
        out = out.with_factor(i, m, nf);
    }
    (out, sign)
}

/// Cellular boundary with the product orientation: interval coordinates
/// i_1 < … < i_d contribute ∂c = Σ_k (−1)^{k−1}(c[i_k→upper] − c[i_k→lower]),
/// where L = [0,1/2] has endpoints P0, PH and U = [1/2,1] has PH, P1.
pub fn boundary(c: CubeCell, m: u32) -> Vec<(i64, CubeCell)> {
    let mut out = Vec::new();
    let mut sign = 1i64;
    for i in 1..=m {
        let f = c.factor(i, m);
        if !f.is_interval() {
            continue;
        }
        let (lower, upper) = match f {
            Factor::L => (Factor::P0, Factor::PH),
            Factor::U => (Factor::PH, Factor::P1),
            _ => unreachable!(),
        };
        out.push((sign, c.with_factor(i, m, upper)));
        out.push((-sign, c.with_factor(i, m, lower)));
        sign = -sign;
    }
    out
}

/// The subdivided cubical model of the real moment-angle complex: all cells
/// whose support is a face of K, graded by dimension, together with the
/// acting group (trivial until a quotient equips it with ker λ).
pub struct GCWComplex {
    m: u32,
    cells_by_dim: Vec<Vec<CubeCell>>,
    group: Vec<VertexSet>,
}

/// Number of model cells: Σ_{τ∈K} 3^{|τ|}·2^{m−|τ|}.
pub fn cell_count(k: &SimplicialComplex) -> u128 {
    let m = k.m();
    k.faces()
        .iter()
        .map(|t| 3u128.pow(t.len()) * 2u128.pow(m - t.len()))
        .sum()
}

pub fn build_rzk(k: &SimplicialComplex, max_cells: usize) -> Result<GCWComplex> {
    let m = k.m();
    if m > MAX_GEOMETRY_VERTICES {
        return Err(Error::capacity(format!(
            "m = {m} exceeds the geometric bound {MAX_GEOMETRY_VERTICES}"
        )));
    }
    let count = cell_count(k);
    if count > max_cells as u128 {
        return Err(Error::capacity(format!(
            "cube model would have {count} cells (limit {max_cells}; \
             raise TORIC_SPLIT_MAX_CELLS to override)"
        )));
    }
    let mut cells_by_dim: Vec<Vec<CubeCell>> = Vec::new();
    for tau in k.faces() {
        let rest = VertexSet::full(m).minus(tau);
        let mut stack = vec![(CubeCell(0), 1u32)];
        // fill coordinates in order 1..=m
        while let Some((cell, i)) = stack.pop() {
            if i > m {
                let d = cell.dim(m) as usize;
                while cells_by_dim.len() <= d {
                    cells_by_dim.push(Vec::new());
                }
                cells_by_dim[d].push(cell);
                continue;
            }
            let opts: &[Factor] = if tau.contains(i) {
                &[Factor::PH, Factor::L, Factor::U]
            } else {
                debug_assert!(rest.contains(i));
                &[Factor::P0, Factor::P1]
            };
            for f in opts {
                stack.push((cell.with_factor(i, m, *f), i + 1));
            }
        }
    }
    for cells in &mut cells_by_dim {
        cells.sort();
    }
    Ok(GCWComplex {
        m,
        cells_by_dim,
        group: vec![VertexSet::EMPTY],
    })
}

impl GCWComplex {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn cells_by_dim(&self) -> &[Vec<CubeCell>] {
        &self.cells_by_dim
    }

    pub fn total_cells(&self) -> usize {
        self.cells_by_dim.iter().map(|v| v.len()).sum()
    }

    pub fn group(&self) -> &[VertexSet] {
        &self.group
    }

    /// Equips the complex with an acting group (the kernel of a λ-map). The
    /// group must permute the stored cells; this is rechecked during orbit
    /// construction.
    pub fn with_group(mut self, group: Vec<VertexSet>) -> GCWComplex {
        self.group = if group.is_empty() {
            vec![VertexSet::EMPTY]
        } else {
            group
        };
        self
    }

    pub fn chain_complex(&self) -> ChainComplex {
        let dims: Vec<usize> = self.cells_by_dim.iter().map(|v| v.len()).collect();
        let mut boundaries = vec![Vec::new(); dims.len()];
        for d in 1..self.cells_by_dim.len() {
            let below = &self.cells_by_dim[d - 1];
            let mut triples = Vec::new();
            for (col, c) in self.cells_by_dim[d].iter().enumerate() {
                for (s, f) in boundary(*c, self.m) {
                    let row = below
                        .binary_search(&f)
                        .expect("boundary cell missing from model");
                    triples.push((row as u32, col as u32, s));
                }
            }
            boundaries[d] = triples;
        }
        ChainComplex {
            min_degree: 0,
            dims,
            boundaries,
        }
    }

    pub fn betti(&self, spec: FieldSpec) -> Result<BettiTable> {
        self.chain_complex().betti_numbers(spec)
    }

    /// Collapses the stored group action to orbit cells with transported
    /// boundary signs.
    pub fn quotient(&self) -> Result<QuotientComplex> {
        let m = self.m;
        let mut reps_by_dim: Vec<Vec<CubeCell>> = Vec::with_capacity(self.cells_by_dim.len());
        let mut transport: HashMap<CubeCell, (CubeCell, i64)> = HashMap::new();
        let mut orbit_sizes: Vec<usize> = Vec::new();
        for cells in &self.cells_by_dim {
            let cell_set: std::collections::HashSet<CubeCell> = cells.iter().copied().collect();
            let mut reps = Vec::new();
            for &c in cells {
                if transport.contains_key(&c) {
                    continue;
                }
                // BFS over the orbit, carrying orientation signs relative to c.
                let mut orbit: HashMap<CubeCell, i64> = HashMap::from([(c, 1)]);
                let mut frontier = vec![c];
                while let Some(x) = frontier.pop() {
                    let sx = orbit[&x];
                    for g in &self.group {
                        let (y, s) = act(*g, x, m);
                        if !cell_set.contains(&y) {
                            return Err(Error::ComplexIntegrity(format!(
                                "group element {g} maps a model cell outside the model"
                            )));
                        }
                        match orbit.get(&y) {
                            None => {
                                orbit.insert(y, sx * s);
                                frontier.push(y);
                            }
                            Some(prev) => {
                                if *prev != sx * s {
                                    return Err(Error::ComplexIntegrity(
                                        "inconsistent orientation transport in an orbit".into(),
                                    ));
                                }
                            }
                        }
                        // Midpoint subdivision guarantee: setwise fixed ⟹
                        // pointwise fixed, with orientation preserved.
                        if y == x && s != 1 {
                            return Err(Error::ComplexIntegrity(
                                "setwise-fixed cell with reversed orientation".into(),
                            ));
                        }
                    }
                }
                let rep = *orbit.keys().min().unwrap();
                let base = orbit[&rep];
                orbit_sizes.push(orbit.len());
                for (y, s) in &orbit {
                    transport.insert(*y, (rep, s * base));
                }
                reps.push(rep);
            }
            reps.sort();
            reps_by_dim.push(reps);
        }
        // boundary on orbit representatives, faces transported to their reps
        let dims: Vec<usize> = reps_by_dim.iter().map(|v| v.len()).collect();
        let mut boundaries = vec![Vec::new(); dims.len()];
        for d in 1..reps_by_dim.len() {
            let below = &reps_by_dim[d - 1];
            let mut triples = Vec::new();
            for (col, r) in reps_by_dim[d].iter().enumerate() {
                let mut acc: HashMap<u32, i64> = HashMap::new();
                for (s, f) in boundary(*r, m) {
                    let (fr, fs) = transport[&f];
                    let row = below.binary_search(&fr).expect("orbit rep missing") as u32;
                    *acc.entry(row).or_insert(0) += s * fs;
                }
                for (row, v) in acc {
                    if v != 0 {
                        triples.push((row, col as u32, v));
                    }
                }
            }
            boundaries[d] = triples;
        }
        Ok(QuotientComplex {
            m,
            reps_by_dim,
            orbit_sizes,
            complex: ChainComplex {
                min_degree: 0,
                dims,
                boundaries,
            },
        })
    }
}

/// Orbit-cell model of the quotient ℝZ_K / ker λ.
pub struct QuotientComplex {
    m: u32,
    reps_by_dim: Vec<Vec<CubeCell>>,
    orbit_sizes: Vec<usize>,
    complex: ChainComplex,
}

impl QuotientComplex {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn orbit_cell_count(&self) -> usize {
        self.reps_by_dim.iter().map(|v| v.len()).sum()
    }

    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    pub fn reps_by_dim(&self) -> &[Vec<CubeCell>] {
        &self.reps_by_dim
    }

    pub fn chain_complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn betti(&self, spec: FieldSpec) -> Result<BettiTable> {
        self.complex.betti_numbers(spec)
    }
}

/// Builds the quotient model of M(K,λ) = ℝZ_K / ker λ. Valid for every λ,
/// free action or not, thanks to the midpoint subdivision.
pub fn quotient_complex(
    k: &SimplicialComplex,
    l: &LambdaMap,
    max_cells: usize,
) -> Result<QuotientComplex> {
    if l.m() != k.m() {
        return Err(Error::input(format!(
            "lambda has m = {} but the complex has m = {}",
            l.m(),
            k.m()
        )));
    }
    let kernel = l.kernel_elements()?;
    build_rzk(k, max_cells)?.with_group(kernel).quotient()
}

/// Betti numbers of M(K,λ) over the chosen field.
pub fn quotient_betti(
    k: &SimplicialComplex,
    l: &LambdaMap,
    spec: FieldSpec,
    max_cells: usize,
) -> Result<BettiTable> {
    quotient_complex(k, l, max_cells)?.betti(spec)
}

/// Betti numbers of ℝZ_K itself.
pub fn rzk_betti(k: &SimplicialComplex, spec: FieldSpec, max_cells: usize) -> Result<BettiTable> {
    build_rzk(k, max_cells)?.betti(spec)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::rp2_lambda;

    fn vs(v: &[u32], m: u32) -> VertexSet {
        VertexSet::from_vertices(v, m).unwrap()
    }

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, &[vs(&[1, 2], 3), vs(&[2, 3], 3), vs(&[1, 3], 3)])
            .unwrap()
    }

    #[test]
    fn cell_counts() {
        let k = triangle();
        assert_eq!(cell_count(&k), 98);
        let z = build_rzk(&k, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(z.total_cells(), 98);
        // by dimension: 26 vertices, 48 edges, 24 squares
        assert_eq!(
            z.cells_by_dim().iter().map(|v| v.len()).collect::<Vec<_>>(),
            vec![26, 48, 24]
        );
    }

    #[test]
    fn capacity_guard() {
        let k = triangle();
        assert!(matches!(
            build_rzk(&k, 97),
            Err(Error::Capacity(_))
        ));
    }

    #[test]
    fn sphere_betti_from_triangle_boundary() {
        let k = triangle();
        for spec in [FieldSpec::Rational, FieldSpec::Prime(2), FieldSpec::Prime(5)] {
            let b = rzk_betti(&k, spec, DEFAULT_MAX_CELLS).unwrap();
            assert_eq!(b.nonzero_pairs(), vec![(0, 1), (2, 1)], "field {spec}");
        }
    }

    #[test]
    fn degenerate_models() {
        // K = {∅} on one vertex: two points
        let k = SimplicialComplex::from_facets(1, &[]).unwrap();
        let z = build_rzk(&k, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(z.total_cells(), 2);
        let b = z.betti(FieldSpec::Rational).unwrap();
        assert_eq!(b.nonzero_pairs(), vec![(0, 2)]);
        // one vertex on m = 1: the subdivided interval
        let k = SimplicialComplex::from_facets(1, &[VertexSet::singleton(1)]).unwrap();
        let z = build_rzk(&k, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(z.total_cells(), 5);
        let b = z.betti(FieldSpec::Prime(3)).unwrap();
        assert_eq!(b.nonzero_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn action_signs() {
        let m = 1;
        let l = CubeCell::from_factors(&[Factor::L]);
        let (u, s) = act(VertexSet::singleton(1), l, m);
        assert_eq!(u, CubeCell::from_factors(&[Factor::U]));
        assert_eq!(s, -1);
        let c = CubeCell::from_factors(&[Factor::P0, Factor::PH]);
        let (c2, s2) = act(vs(&[1, 2], 2), c, 2);
        assert_eq!(c2, CubeCell::from_factors(&[Factor::P1, Factor::PH]));
        assert_eq!(s2, 1);
        let (same, s3) = act(VertexSet::EMPTY, l, m);
        assert_eq!((same, s3), (l, 1));
    }

    #[test]
    fn projective_plane_quotient() {
        let k = triangle();
        let l = rp2_lambda();
        let q = quotient_complex(&k, &l, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(q.orbit_cell_count(), 49);
        // free action: every orbit has full size
        assert!(q.orbit_sizes().iter().all(|s| *s == 2));
        for (spec, expect) in [
            (FieldSpec::Rational, vec![(0, 1)]),
            (FieldSpec::Prime(3), vec![(0, 1)]),
            (FieldSpec::Prime(5), vec![(0, 1)]),
            (FieldSpec::Prime(2), vec![(0, 1), (1, 1), (2, 1)]),
        ] {
            let b = q.betti(spec).unwrap();
            assert_eq!(b.nonzero_pairs(), expect, "field {spec}");
        }
    }

    #[test]
    fn circle_quotient_is_circle() {
        let k = SimplicialComplex::from_facets(
            2,
            &[VertexSet::singleton(1), VertexSet::singleton(2)],
        )
        .unwrap();
        let l = LambdaMap::from_bit_rows(&[vec![1, 1]]).unwrap();
        let b = quotient_betti(&k, &l, FieldSpec::Rational, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(b.nonzero_pairs(), vec![(0, 1), (1, 1)]);
        let b2 = quotient_betti(&k, &l, FieldSpec::Prime(2), DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(b2.nonzero_pairs(), vec![(0, 1), (1, 1)]);
    }

    #[test]
    fn identity_lambda_gives_rzk_itself() {
        let k = triangle();
        let l = LambdaMap::identity(3);
        let b = quotient_betti(&k, &l, FieldSpec::Prime(3), DEFAULT_MAX_CELLS).unwrap();
        let z = rzk_betti(&k, FieldSpec::Prime(3), DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(b, z);
    }

    #[test]
    fn zero_lambda_gives_a_cone() {
        let k = triangle();
        let l = LambdaMap::zero(1, 3);
        let b = quotient_betti(&k, &l, FieldSpec::Rational, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(b.nonzero_pairs(), vec![(0, 1)]);
        let b3 = quotient_betti(&k, &l, FieldSpec::Prime(3), DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(b3.nonzero_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn nonfree_quotient_still_works() {
        // K = edge on two vertices, λ = [1 1]: the flip fixes the midpoint
        // cell; quotient of the square boundary… here ℝZ = D¹×S⁰ ∪ S⁰×D¹.
        let k = SimplicialComplex::from_facets(2, &[vs(&[1, 2], 2)]).unwrap();
        let l = LambdaMap::from_bit_rows(&[vec![1, 1]]).unwrap();
        assert!(!l.free_action_violations(&k).unwrap().is_empty());
        // ℝZ_K for the full edge is the whole square [0,1]²: contractible.
        let b = quotient_betti(&k, &l, FieldSpec::Rational, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(b.nonzero_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn euler_characteristic_matches_orbit_count() {
        let k = triangle();
        let q = quotient_complex(&k, &rp2_lambda(), DEFAULT_MAX_CELLS).unwrap();
        let chi_cells = q.chain_complex().euler_characteristic();
        let chi_betti = q
            .betti(FieldSpec::Rational)
            .unwrap()
            .euler_characteristic();
        assert_eq!(chi_cells, 1); // ℝP²
        assert_eq!(chi_betti, 1);
    }
}
