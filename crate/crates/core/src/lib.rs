//! Exact verification of stable splittings of real toric spaces.
//!
//! The library computes, with exact arithmetic only, the Betti numbers of a
//! real toric space M(K,λ) = ℝZ_K / ker λ in three independent ways (a
//! geometric orbit-cell model, the invariant subcomplex of a differential
//! graded algebra, and a Row(λ)-indexed sum of reduced Betti numbers of full
//! subcomplexes) and checks that they agree over ℚ and F_p for odd p (and
//! documents the standard failure at p = 2). A graph-associahedron pipeline
//! produces matching instances from connected simple graphs.

pub mod chain;
pub mod dga;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod field;
pub mod graph;
pub mod lambda;
pub mod matrix;
pub mod rzk;
pub mod simplicial;
pub mod subset;

pub use chain::{BettiTable, ChainComplex};
pub use decomposition::{
    bbcg_check, rhs_betti, subcomplex_summands, verify_fields, verify_main, BbcgReport,
    Verdict, VerifyReport,
};
pub use dga::{
    act_dga, check_relations, dga_betti, differential, fixed_subspace_dimension,
    invariant_basis, invariant_betti, monomial_basis, multiply, phi, phi_inverse, reynolds,
    DgaElement, Monomial,
};
pub use error::{Error, Result};
pub use field::{Field, FieldSpec, PrimeField, Rationals};
pub use graph::{
    a_numbers, compare_graphs, verify_graph_corollary, CompareReport, GraphInput, GraphReport,
    SimpleGraph,
};
pub use lambda::{LambdaInput, LambdaMap, RowSpace};
pub use matrix::SparseMatrix;
pub use rzk::{build_rzk, quotient_betti, rzk_betti, GCWComplex, QuotientComplex, DEFAULT_MAX_CELLS};
pub use simplicial::{ComplexInput, SimplicialComplex};
pub use subset::VertexSet;
