//! Randomized structural laws, exercised through proptest with seeded
//! shrinking. These complement the acceptance suite with invariances that
//! hold for every input, not just the curated families.

use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use toric_split::{
    bbcg_check, dga_betti, rhs_betti, rzk_betti, verify_main, FieldSpec, LambdaMap,
    SimplicialComplex, SparseMatrix, Verdict, VertexSet, DEFAULT_MAX_CELLS,
};

fn arb_complex(max_m: u32) -> impl Strategy<Value = SimplicialComplex> {
    (1..=max_m).prop_flat_map(|m| {
        prop::collection::vec(1u32..(1u32 << m), 1..=(m as usize + 1)).prop_map(move |masks| {
            let facets: Vec<VertexSet> = masks.into_iter().map(VertexSet::from_mask).collect();
            SimplicialComplex::from_facets(m, &facets).expect("masks are in range")
        })
    })
}

fn arb_pair(max_m: u32) -> impl Strategy<Value = (SimplicialComplex, LambdaMap)> {
    arb_complex(max_m).prop_flat_map(|k| {
        let m = k.m();
        (
            Just(k),
            (1..=m).prop_flat_map(move |n| {
                prop::collection::vec(0u32..(1u32 << m), n as usize)
                    .prop_map(move |rows| LambdaMap::new(n, m, rows).expect("rows in range"))
            }),
        )
    })
}

fn permuted_complex(k: &SimplicialComplex, perm: &[u32]) -> SimplicialComplex {
    let m = k.m();
    let facets: Vec<VertexSet> = k
        .facets()
        .iter()
        .map(|f| {
            let vs: Vec<u32> = f.vertices().map(|v| perm[(v - 1) as usize]).collect();
            VertexSet::from_vertices(&vs, m).unwrap()
        })
        .collect();
    SimplicialComplex::from_facets(m, &facets).unwrap()
}

fn permuted_lambda(l: &LambdaMap, perm: &[u32]) -> LambdaMap {
    let m = l.m();
    let rows: Vec<u32> = l
        .rows()
        .iter()
        .map(|&r| {
            let mut out = 0u32;
            for i in 1..=m {
                if r & (1 << (i - 1)) != 0 {
                    out |= 1 << (perm[(i - 1) as usize] - 1);
                }
            }
            out
        })
        .collect();
    LambdaMap::new(l.n(), m, rows).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    /// Alternating Betti sum equals the cellular Euler characteristic over
    /// every field.
    #[test]
    fn euler_characteristic_is_field_independent(k in arb_complex(5)) {
        let chi = k.chain_complex().euler_characteristic();
        for spec in [FieldSpec::Rational, FieldSpec::Prime(2), FieldSpec::Prime(3)] {
            let b = k.chain_complex().betti_numbers(spec).unwrap();
            prop_assert_eq!(b.euler_characteristic(), chi, "field {}", spec);
        }
    }

    /// The cochain algebra computes the same Betti numbers as the cube model.
    #[test]
    fn cochain_algebra_matches_cube_model(k in arb_complex(5)) {
        for spec in [FieldSpec::Rational, FieldSpec::Prime(2), FieldSpec::Prime(5)] {
            let a = dga_betti(&k, spec).unwrap();
            let b = rzk_betti(&k, spec, DEFAULT_MAX_CELLS).unwrap();
            prop_assert_eq!(a, b, "field {}", spec);
        }
    }

    /// A cone is contractible: joining a fresh apex to every facet kills all
    /// reduced homology.
    #[test]
    fn cones_are_acyclic(k in arb_complex(5)) {
        let m = k.m();
        let apex = m + 1;
        let coned: Vec<VertexSet> = k
            .facets()
            .iter()
            .map(|f| {
                let mut vs: Vec<u32> = f.vertices().collect();
                vs.push(apex);
                VertexSet::from_vertices(&vs, m + 1).unwrap()
            })
            .collect();
        let cone = SimplicialComplex::from_facets(m + 1, &coned).unwrap();
        for spec in [FieldSpec::Rational, FieldSpec::Prime(2)] {
            let b = cone.reduced_betti(spec).unwrap();
            prop_assert!(b.nonzero_pairs().is_empty(), "field {}: {}", spec, b);
        }
    }

    /// Rank is invariant under transposition.
    #[test]
    fn rank_of_transpose(entries in prop::collection::vec(
        (0u32..8, 0u32..8, -4i64..=4), 0..24)
    ) {
        let mut dedup = std::collections::BTreeMap::new();
        for (r, c, v) in entries {
            if v != 0 {
                dedup.insert((r, c), v);
            }
        }
        let filtered: Vec<(u32, u32, i64)> =
            dedup.into_iter().map(|((r, c), v)| (r, c, v)).collect();
        let a = SparseMatrix::from_int_entries(8, 8, &filtered).unwrap();
        for spec in [FieldSpec::Rational, FieldSpec::Prime(3)] {
            prop_assert_eq!(
                a.rank(spec).unwrap(),
                a.transpose().rank(spec).unwrap(),
                "field {}", spec
            );
        }
    }

    /// Relabeling the vertices of K and the columns of λ together changes
    /// nothing observable.
    #[test]
    fn verification_is_label_invariant((k, l) in arb_pair(5), seed in any::<u64>()) {
        let m = k.m();
        let mut perm: Vec<u32> = (1..=m).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        perm.shuffle(&mut rng);
        let k2 = permuted_complex(&k, &perm);
        let l2 = permuted_lambda(&l, &perm);
        let spec = FieldSpec::Prime(3);
        let a = verify_main(&k, &l, spec, DEFAULT_MAX_CELLS).unwrap();
        let b = verify_main(&k2, &l2, spec, DEFAULT_MAX_CELLS).unwrap();
        prop_assert_eq!(a.verdict, b.verdict);
        prop_assert_eq!(a.quotient, b.quotient);
        prop_assert_eq!(a.rhs, b.rhs);
        prop_assert_eq!(a.invariant, b.invariant);
    }

    /// The identity behind the verifier, on arbitrary seeded inputs.
    #[test]
    fn main_identity_on_random_pairs((k, l) in arb_pair(5)) {
        for spec in [FieldSpec::Rational, FieldSpec::Prime(7)] {
            let r = verify_main(&k, &l, spec, DEFAULT_MAX_CELLS).unwrap();
            prop_assert_eq!(r.verdict, Verdict::Pass, "field {}", spec);
        }
    }

    /// The unquotiented splitting holds over characteristic 2 as well.
    #[test]
    fn full_splitting_on_random_complexes(k in arb_complex(6)) {
        let r = bbcg_check(&k, FieldSpec::Prime(2), DEFAULT_MAX_CELLS).unwrap();
        prop_assert_eq!(r.verdict, Verdict::Pass);
    }

    /// Row space and kernel are orthogonal complements.
    #[test]
    fn row_space_kernel_duality((_k, l) in arb_pair(6)) {
        let row = l.row_space().unwrap();
        let kernel = l.kernel_elements().unwrap();
        prop_assert_eq!(row.len() * kernel.len(), 1usize << l.m());
        for i in row.elements() {
            for g in &kernel {
                prop_assert_eq!(i.intersect(*g).len() % 2, 0, "⟨{}, {}⟩ ≠ 0", i, g);
            }
        }
    }

    /// Quotient Betti numbers never exceed those of the covering space in
    /// total dimension over Q (transfer: the quotient is a retract).
    #[test]
    fn quotient_total_betti_bounded((k, l) in arb_pair(5)) {
        let free = rzk_betti(&k, FieldSpec::Rational, DEFAULT_MAX_CELLS).unwrap();
        let quot = rhs_betti(&k, &l, FieldSpec::Rational).unwrap();
        prop_assert!(quot.total() <= free.total());
    }

    /// JSON round-trips reproduce the complex and the λ-map exactly.
    #[test]
    fn json_round_trips((k, l) in arb_pair(6)) {
        let kj = serde_json::to_string(&k.to_input()).unwrap();
        let k2 = SimplicialComplex::from_json(&kj).unwrap();
        prop_assert_eq!(k.facets(), k2.facets());
        prop_assert_eq!(k.m(), k2.m());
        let lj = serde_json::to_string(&l.to_input()).unwrap();
        let l2 = LambdaMap::from_json(&lj).unwrap();
        prop_assert_eq!(l.rows(), l2.rows());
        prop_assert_eq!(l.n(), l2.n());
    }
}
