use crate::simplicial::SimplicialComplex;
use crate::subset::VertexSet;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Hard bound on enumerating kernels/row spaces (2^dim elements).
const MAX_SPAN: u32 = 22;

/// A linear map λ: F_2^m → F_2^n, stored as n row bitmasks over the m
/// columns; column i is λ(e_i). No relation between n and m is required.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaMap {
    n: u32,
    m: u32,
    rows: Vec<u32>,
}

impl LambdaMap {
    pub fn new(n: u32, m: u32, rows: Vec<u32>) -> Result<Self> {
        if m == 0 || m > 32 || n > 32 {
            return Err(Error::input(format!("unsupported shape {n}x{m}")));
        }
        if rows.len() != n as usize {
            return Err(Error::input("row count does not match n"));
        }
        let full = VertexSet::full(m).mask();
        if rows.iter().any(|r| r & !full != 0) {
            return Err(Error::input("row has bits beyond column count"));
        }
        Ok(LambdaMap { n, m, rows })
    }

    pub fn from_bit_rows(rows: &[Vec<u8>]) -> Result<Self> {
        let n = rows.len() as u32;
        let m = rows.first().map(|r| r.len()).unwrap_or(0) as u32;
        let mut masks = Vec::with_capacity(rows.len());
        for row in rows {
            if row.len() as u32 != m {
                return Err(Error::input("ragged rows"));
            }
            let mut mask = 0u32;
            for (i, b) in row.iter().enumerate() {
                match b {
                    0 => {}
                    1 => mask |= 1 << i,
                    _ => return Err(Error::input(format!("matrix entry {b} is not a bit"))),
                }
            }
            masks.push(mask);
        }
        LambdaMap::new(n, m, masks)
    }

    pub fn identity(m: u32) -> Self {
        LambdaMap {
            n: m,
            m,
            rows: (0..m).map(|i| 1u32 << i).collect(),
        }
    }

    pub fn zero(n: u32, m: u32) -> Self {
        LambdaMap {
            n,
            m,
            rows: vec![0; n as usize],
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let input: LambdaInput = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("malformed lambda JSON: {e}")))?;
        input.build()
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn m(&self) -> u32 {
        self.m
    }
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Column i (1-based) as an n-bit mask.
    pub fn column(&self, i: u32) -> u32 {
        let mut c = 0u32;
        for (j, r) in self.rows.iter().enumerate() {
            c |= (r >> (i - 1) & 1) << j;
        }
        c
    }

    /// λ applied to a vector g ∈ F_2^m (as a subset): XOR of the columns of g.
    pub fn apply(&self, g: VertexSet) -> u32 {
        let mut acc = 0u32;
        for i in g.vertices() {
            acc ^= self.column(i);
        }
        acc
    }

    pub fn rank(&self) -> u32 {
        f2_rank(self.rows.iter().copied())
    }

    /// A basis of ker λ ⊆ F_2^m, found by tracking column combinations
    /// through elimination.
    pub fn kernel_basis(&self) -> Vec<VertexSet> {
        let mut pivots = F2Basis::new(); // over (column value, combination) pairs
        let mut combos: Vec<u32> = Vec::new();
        let mut basis = Vec::new();
        for i in 1..=self.m {
            let mut v = self.column(i);
            let mut c = 1u32 << (i - 1);
            for (k, pv) in pivots.vectors().iter().enumerate() {
                if v >> lead_bit(*pv) & 1 == 1 {
                    v ^= pv;
                    c ^= combos[k];
                }
            }
            if v == 0 {
                basis.push(VertexSet::from_mask(c));
            } else {
                // back-reduce existing pivots to keep reduction order-free
                for (k, pv) in pivots.vectors_mut().iter_mut().enumerate() {
                    if *pv >> lead_bit(v) & 1 == 1 {
                        *pv ^= v;
                        combos[k] ^= c;
                    }
                }
                pivots.push_reduced(v);
                combos.push(c);
            }
        }
        basis
    }

    /// All of ker λ (size 2^{m − rank}), ascending by mask, ∅ first.
    pub fn kernel_elements(&self) -> Result<Vec<VertexSet>> {
        span(&self.kernel_basis())
    }

    /// Row(λ): the span of the rows, each vector identified with its support.
    pub fn row_space(&self) -> Result<RowSpace> {
        let mut basis = F2Basis::new();
        for r in &self.rows {
            basis.insert(*r);
        }
        let basis: Vec<VertexSet> = basis
            .vectors()
            .iter()
            .map(|v| VertexSet::from_mask(*v))
            .collect();
        Ok(RowSpace {
            m: self.m,
            elements: span(&basis)?,
        })
    }

    /// The characteristic condition: columns indexed by each face of K are
    /// linearly independent (checked on facets; subsets inherit).
    pub fn is_characteristic(&self, k: &SimplicialComplex) -> bool {
        k.facets().iter().all(|f| self.columns_independent(*f))
    }

    pub fn columns_independent(&self, s: VertexSet) -> bool {
        f2_rank(s.vertices().map(|i| self.column(i))) == s.len()
    }

    /// Nonzero kernel vectors whose support is a face of K: exactly the
    /// elements with fixed points on the cube model, so the ker λ-action is
    /// free iff this list is empty.
    pub fn free_action_violations(&self, k: &SimplicialComplex) -> Result<Vec<VertexSet>> {
        Ok(self
            .kernel_elements()?
            .into_iter()
            .filter(|g| !g.is_empty() && k.contains(*g))
            .collect())
    }

    pub fn to_input(&self) -> LambdaInput {
        LambdaInput {
            n: self.n,
            m: self.m,
            rows: self
                .rows
                .iter()
                .map(|r| (0..self.m).map(|i| (r >> i & 1) as u8).collect())
                .collect(),
        }
    }
}

fn lead_bit(v: u32) -> u32 {
    31 - v.leading_zeros()
}

/// An F_2 vector basis kept in reduced row-echelon form: every stored vector
/// has a unique leading bit that occurs in no other stored vector, so a
/// single reduction pass is order-independent.
#[derive(Default)]
pub struct F2Basis {
    vecs: Vec<u32>,
}

impl F2Basis {
    pub fn new() -> Self {
        F2Basis::default()
    }

    pub fn vectors(&self) -> &[u32] {
        &self.vecs
    }

    fn vectors_mut(&mut self) -> &mut Vec<u32> {
        &mut self.vecs
    }

    fn push_reduced(&mut self, v: u32) {
        debug_assert!(v != 0);
        self.vecs.push(v);
    }

    pub fn reduce(&self, mut v: u32) -> u32 {
        for b in &self.vecs {
            if v >> lead_bit(*b) & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    /// Inserts v; returns false when v was already in the span.
    pub fn insert(&mut self, v: u32) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        for b in &mut self.vecs {
            if *b >> lead_bit(r) & 1 == 1 {
                *b ^= r;
            }
        }
        self.vecs.push(r);
        true
    }

    pub fn rank(&self) -> u32 {
        self.vecs.len() as u32
    }
}

/// Rank of a list of F_2 vectors given as bitmasks.
pub fn f2_rank(vectors: impl Iterator<Item = u32>) -> u32 {
    let mut basis = F2Basis::new();
    for v in vectors {
        basis.insert(v);
    }
    basis.rank()
}

fn span(basis: &[VertexSet]) -> Result<Vec<VertexSet>> {
    if basis.len() as u32 > MAX_SPAN {
        return Err(Error::capacity(format!(
            "span of dimension {} is too large to enumerate",
            basis.len()
        )));
    }
    let mut out = Vec::with_capacity(1 << basis.len());
    for pick in 0u32..1 << basis.len() {
        let mut acc = VertexSet::EMPTY;
        for (j, b) in basis.iter().enumerate() {
            if pick >> j & 1 == 1 {
                acc = acc.symdiff(*b);
            }
        }
        out.push(acc);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// The F_2-span of the rows of a λ-map, as support subsets of [m].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowSpace {
    m: u32,
    elements: Vec<VertexSet>,
}

impl RowSpace {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn elements(&self) -> &[VertexSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false // always contains ∅
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        self.elements.binary_search(&s).is_ok()
    }
}

/// JSON schema: {"n": int, "m": int, "rows": [[0/1,...],...]}.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct LambdaInput {
    pub n: u32,
    pub m: u32,
    pub rows: Vec<Vec<u8>>,
}

impl LambdaInput {
    pub fn build(&self) -> Result<LambdaMap> {
        let lm = LambdaMap::from_bit_rows(&self.rows)?;
        if lm.n() != self.n || lm.m() != self.m {
            return Err(Error::input(format!(
                "declared shape {}x{} does not match rows ({}x{})",
                self.n,
                self.m,
                lm.n(),
                lm.m()
            )));
        }
        Ok(lm)
    }
}

/// The projective-plane instance: λ = [[1,0,1],[0,1,1]] on m = 3.
pub fn rp2_lambda() -> LambdaMap {
    LambdaMap::from_bit_rows(&[vec![1, 0, 1], vec![0, 1, 1]]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::SimplicialComplex;

    fn vs(vs: &[u32], m: u32) -> VertexSet {
        VertexSet::from_vertices(vs, m).unwrap()
    }

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, &[vs(&[1, 2], 3), vs(&[2, 3], 3), vs(&[1, 3], 3)])
            .unwrap()
    }

    #[test]
    fn kernel_of_rp2_map() {
        let l = rp2_lambda();
        assert_eq!(l.rank(), 2);
        let ker = l.kernel_elements().unwrap();
        assert_eq!(ker, vec![VertexSet::EMPTY, vs(&[1, 2, 3], 3)]);
    }

    #[test]
    fn kernel_of_identity_and_zero() {
        assert_eq!(
            LambdaMap::identity(3).kernel_elements().unwrap(),
            vec![VertexSet::EMPTY]
        );
        let z = LambdaMap::zero(1, 2);
        let ker = z.kernel_elements().unwrap();
        assert_eq!(ker.len(), 4);
    }

    #[test]
    fn row_space_enumeration() {
        let l = rp2_lambda();
        let rs = l.row_space().unwrap();
        assert_eq!(rs.len(), 4);
        assert!(rs.contains(VertexSet::EMPTY));
        assert!(rs.contains(vs(&[1, 3], 3)));
        assert!(rs.contains(vs(&[2, 3], 3)));
        assert!(rs.contains(vs(&[1, 2], 3)));
        assert_eq!(LambdaMap::identity(3).row_space().unwrap().len(), 8);
        assert_eq!(LambdaMap::zero(2, 3).row_space().unwrap().len(), 1);
    }

    #[test]
    fn row_space_times_kernel_covers_everything() {
        for rows in [
            vec![vec![1, 0, 1], vec![0, 1, 1]],
            vec![vec![1, 1, 1]],
            vec![vec![0, 0, 0], vec![1, 1, 0]],
        ] {
            let l = LambdaMap::from_bit_rows(&rows).unwrap();
            let rs = l.row_space().unwrap();
            let ker = l.kernel_elements().unwrap();
            assert_eq!(rs.len() * ker.len(), 1 << l.m());
            // orthogonality: I ∈ Row(λ) ⟺ |I ∩ g| even for every kernel g
            for mask in 0..1u32 << l.m() {
                let s = VertexSet::from_mask(mask);
                let orthogonal = ker
                    .iter()
                    .all(|g| s.intersect(*g).len() % 2 == 0);
                assert_eq!(rs.contains(s), orthogonal);
            }
        }
    }

    #[test]
    fn characteristic_condition() {
        let k = triangle();
        assert!(rp2_lambda().is_characteristic(&k));
        assert!(LambdaMap::identity(3).is_characteristic(&k));
        assert!(!LambdaMap::zero(2, 3).is_characteristic(&k));
    }

    #[test]
    fn free_action_violations_examples() {
        let k = triangle();
        assert!(rp2_lambda().free_action_violations(&k).unwrap().is_empty());

        let edge = SimplicialComplex::from_facets(2, &[vs(&[1, 2], 2)]).unwrap();
        let l = LambdaMap::from_bit_rows(&[vec![1, 1]]).unwrap();
        assert_eq!(
            l.free_action_violations(&edge).unwrap(),
            vec![vs(&[1, 2], 2)]
        );

        assert!(LambdaMap::identity(3)
            .free_action_violations(&k)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn json_round_trip_and_validation() {
        let l = LambdaMap::from_json(r#"{"n":2,"m":3,"rows":[[1,0,1],[0,1,1]]}"#).unwrap();
        assert_eq!(l, rp2_lambda());
        let text = serde_json::to_string(&l.to_input()).unwrap();
        assert_eq!(LambdaMap::from_json(&text).unwrap(), l);
        assert!(LambdaMap::from_json(r#"{"n":1,"m":2,"rows":[[1,0,1]]}"#).is_err());
        assert!(LambdaMap::from_json(r#"{"n":1,"m":3,"rows":[[1,0,2]]}"#).is_err());
    }
}
