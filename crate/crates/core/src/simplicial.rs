use crate::chain::{BettiTable, ChainComplex};
use crate::field::FieldSpec;
use crate::subset::VertexSet;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

/// Largest vertex universe for which the full 2^m membership table is kept.
pub const MAX_COMPLEX_VERTICES: u32 = 24;

/// A simplicial complex on the vertex universe [m]: a downward-closed face
/// family always containing ∅. Vertices i with {i} ∉ K ("ghosts") are
/// permitted; full subcomplexes keep the ambient universe so that nested
/// restriction is literal equality.
#[derive(Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    m: u32,
    member: Vec<bool>,
    facets: Vec<VertexSet>,
}

impl SimplicialComplex {
    /// Downward closure of a facet list; redundant facets are absorbed.
    pub fn from_facets(m: u32, facets: &[VertexSet]) -> Result<Self> {
        if m > MAX_COMPLEX_VERTICES {
            return Err(Error::capacity(format!(
                "m = {m} exceeds the face-table bound {MAX_COMPLEX_VERTICES}"
            )));
        }
        let full = VertexSet::full(m);
        let mut member = vec![false; 1usize << m];
        member[0] = true;
        for f in facets {
            if !f.is_subset_of(full) {
                return Err(Error::input(format!(
                    "facet {f} is not contained in the vertex universe [{m}]"
                )));
            }
            for s in f.subsets() {
                member[s.mask() as usize] = true;
            }
        }
        Ok(Self::from_member_table(m, member))
    }

    pub(crate) fn from_member_table(m: u32, member: Vec<bool>) -> Self {
        let mut facets = Vec::new();
        for mask in 0..member.len() {
            if !member[mask] {
                continue;
            }
            let s = VertexSet::from_mask(mask as u32);
            let maximal = (1..=m)
                .filter(|v| !s.contains(*v))
                .all(|v| !member[s.insert(v).mask() as usize]);
            if maximal {
                facets.push(s);
            }
        }
        SimplicialComplex { m, member, facets }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let input: ComplexInput = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("malformed complex JSON: {e}")))?;
        input.build()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn contains(&self, s: VertexSet) -> bool {
        s.is_subset_of(VertexSet::full(self.m)) && self.member[s.mask() as usize]
    }

    /// Maximal faces in ascending bitmask order.
    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    /// All faces (including ∅) in ascending bitmask order.
    pub fn faces(&self) -> Vec<VertexSet> {
        (0..self.member.len())
            .filter(|mask| self.member[*mask])
            .map(|mask| VertexSet::from_mask(mask as u32))
            .collect()
    }

    pub fn face_count(&self) -> usize {
        self.member.iter().filter(|b| **b).count()
    }

    /// faces_by_card()[k] lists the faces with k vertices.
    pub fn faces_by_card(&self) -> Vec<Vec<VertexSet>> {
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0) as usize;
        let mut out = vec![Vec::new(); top + 1];
        for f in self.faces() {
            out[f.len() as usize].push(f);
        }
        out
    }

    /// Face counts by cardinality, starting at |∅| = 0.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_card().iter().map(|v| v.len()).collect()
    }

    /// Dimension of the complex; −1 for {∅}.
    pub fn dim(&self) -> i32 {
        self.facets.iter().map(|f| f.len() as i32 - 1).max().unwrap_or(-1)
    }

    /// Vertices of the universe that are not faces.
    pub fn ghost_vertices(&self) -> Vec<u32> {
        (1..=self.m)
            .filter(|v| !self.member[VertexSet::singleton(*v).mask() as usize])
            .collect()
    }

    /// The full subcomplex K_I = {σ ∈ K : σ ⊆ I}, kept on the ambient
    /// universe [m] (vertices outside I become ghosts).
    pub fn full_subcomplex(&self, i: VertexSet) -> SimplicialComplex {
        let mut member = vec![false; self.member.len()];
        for s in i.intersect(VertexSet::full(self.m)).subsets() {
            member[s.mask() as usize] = self.member[s.mask() as usize];
        }
        member[0] = true;
        Self::from_member_table(self.m, member)
    }

    /// Augmented simplicial chain complex (degree window from −1 up).
    pub fn chain_complex(&self) -> ChainComplex {
        let by_card = self.faces_by_card();
        let dims: Vec<usize> = by_card.iter().map(|v| v.len()).collect();
        let mut index = std::collections::HashMap::new();
        for faces in &by_card {
            for (i, f) in faces.iter().enumerate() {
                index.insert(*f, i as u32);
            }
        }
        let mut boundaries = vec![Vec::new(); by_card.len()];
        for (card, faces) in by_card.iter().enumerate().skip(1) {
            let mut triples = Vec::new();
            for (col, f) in faces.iter().enumerate() {
                for (k, v) in f.vertices().enumerate() {
                    let sub = f.remove(v);
                    let row = index[&sub];
                    let sign = if k % 2 == 0 { 1 } else { -1 };
                    triples.push((row, col as u32, sign));
                }
            }
            boundaries[card] = triples;
        }
        ChainComplex {
            min_degree: -1,
            dims,
            boundaries,
        }
    }

    /// Reduced Betti numbers b̃_q(|K|; field); for K = {∅} this is b̃_{−1} = 1.
    pub fn reduced_betti(&self, spec: FieldSpec) -> Result<BettiTable> {
        self.chain_complex().betti_numbers(spec)
    }

    pub fn to_input(&self) -> ComplexInput {
        ComplexInput {
            m: self.m,
            facets: self.facets.iter().map(|f| f.to_vec()).collect(),
        }
    }
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "K(m={}; facets=", self.m)?;
        f.debug_list().entries(self.facets.iter()).finish()?;
        write!(f, ")")
    }
}

/// JSON schema: {"m": int, "facets": [[int,...],...]} with 1-based vertices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexInput {
    pub m: u32,
    pub facets: Vec<Vec<u32>>,
}

impl ComplexInput {
    pub fn build(&self) -> Result<SimplicialComplex> {
        let facets = self
            .facets
            .iter()
            .map(|f| VertexSet::from_vertices(f, self.m))
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::from_facets(self.m, &facets)
    }
}
