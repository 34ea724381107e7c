//! Instance generators for the verification suites: exhaustive enumeration of
//! small complexes and maps (grouped so each row space is tested once), and
//! seeded random sampling for larger universes.

use crate::lambda::LambdaMap;
use crate::simplicial::SimplicialComplex;
use crate::subset::VertexSet;
use rand::Rng;
use std::collections::BTreeMap;

/// Every simplicial complex on the universe [m]: downward-closed face
/// families containing ∅. Counts for m = 1, 2, 3, 4: 2, 5, 19, 167.
pub fn all_complexes(m: u32) -> Vec<SimplicialComplex> {
    assert!(m <= 4, "exhaustive complex enumeration is for m ≤ 4");
    let faces = 1usize << m;
    let mut out = Vec::new();
    'candidate: for table in 0u32..(1 << faces) {
        if table & 1 == 0 {
            continue; // ∅ must be a face
        }
        for s in 1..faces {
            if table >> s & 1 == 0 {
                continue;
            }
            let set = VertexSet::from_mask(s as u32);
            for v in set.vertices() {
                if table >> set.remove(v).mask() & 1 == 0 {
                    continue 'candidate;
                }
            }
        }
        let member: Vec<bool> = (0..faces).map(|s| table >> s & 1 == 1).collect();
        out.push(SimplicialComplex::from_member_table(m, member));
    }
    out
}

/// One equivalence class of maps λ with a common row space; the splitting
/// statement depends on λ only through Row(λ), so each class is verified
/// once, with the class size kept for accounting.
pub struct RowSpaceClass {
    pub representative: LambdaMap,
    pub row_space: Vec<VertexSet>,
    pub members: usize,
}

/// Groups every n×m bit matrix, 1 ≤ n ≤ m, by its row space. The class
/// count is the number of subspaces of F_2^m: 2, 5, 16, 67 for m = 1..4.
pub fn lambda_classes(m: u32) -> Vec<RowSpaceClass> {
    assert!((1..=4).contains(&m), "exhaustive λ enumeration is for m ≤ 4");
    let mut classes: BTreeMap<Vec<VertexSet>, (LambdaMap, usize)> = BTreeMap::new();
    for n in 1..=m {
        let bits = n * m;
        for code in 0u64..(1u64 << bits) {
            let rows: Vec<u32> = (0..n)
                .map(|r| (code >> (r * m) & ((1 << m) - 1)) as u32)
                .collect();
            let l = LambdaMap::new(n, m, rows).unwrap();
            let key = l.row_space().unwrap().elements().to_vec();
            classes
                .entry(key)
                .and_modify(|(_, count)| *count += 1)
                .or_insert((l, 1));
        }
    }
    classes
        .into_iter()
        .map(|(row_space, (representative, members))| RowSpaceClass {
            representative,
            row_space,
            members,
        })
        .collect()
}

/// Total number of matrices fed to `lambda_classes`: Σ_{n=1}^{m} 2^{nm}.
pub fn lambda_matrix_count(m: u32) -> u64 {
    (1..=m).map(|n| 1u64 << (n * m)).sum()
}

/// A random complex on [m]: facets drawn as uniform nonempty subsets, then
/// closed downward. Ghost vertices arise naturally when a vertex misses
/// every draw.
pub fn random_complex<R: Rng>(rng: &mut R, m: u32, max_facets: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=max_facets.max(1));
    let full = VertexSet::full(m).mask();
    let mut facets = Vec::with_capacity(count);
    for _ in 0..count {
        let mut mask = rng.gen_range(0..=full);
        if mask == 0 {
            mask = 1 << rng.gen_range(0..m);
        }
        facets.push(VertexSet::from_mask(mask));
    }
    SimplicialComplex::from_facets(m, &facets).unwrap()
}

/// A uniform random n×m bit matrix.
pub fn random_lambda<R: Rng>(rng: &mut R, n: u32, m: u32) -> LambdaMap {
    let full = (1u64 << m) as u32 - 1;
    let rows = (0..n).map(|_| rng.gen_range(0..=full)).collect();
    LambdaMap::new(n, m, rows).unwrap()
}
