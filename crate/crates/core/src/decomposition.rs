//! The splitting identities. Away from characteristic 2 the Betti numbers of
//! the quotient M(K,λ) equal the Row(λ)-indexed sum of reduced Betti numbers
//! of full subcomplexes, shifted up one degree; the same sum over all of
//! 2^[m] equals the Betti numbers of the unquotiented space over every
//! field, characteristic 2 included.

use crate::chain::BettiTable;
use crate::dga::invariant_betti;
use crate::field::FieldSpec;
use crate::lambda::LambdaMap;
use crate::rzk::{quotient_complex, rzk_betti, QuotientComplex};
use crate::simplicial::SimplicialComplex;
use crate::subset::VertexSet;
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Outcome of a verification run. `ExpectedFail` is reserved for the one
/// documented breakdown: characteristic 2 with a nontrivial kernel, where
/// quotient and sum may legitimately disagree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    ExpectedFail,
    Fail,
}

impl Verdict {
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Pass | Verdict::ExpectedFail => 0,
            Verdict::Fail => 1,
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Pass => write!(f, "PASS"),
            Verdict::ExpectedFail => write!(f, "EXPECTED-FAIL"),
            Verdict::Fail => write!(f, "FAIL"),
        }
    }
}

/// Reduced Betti numbers of each K_I, unshifted (so the table of K_I = {∅}
/// is b̃_{−1} = 1), computed in parallel across index sets.
pub fn subcomplex_summands(
    k: &SimplicialComplex,
    index_sets: &[VertexSet],
    spec: FieldSpec,
) -> Result<Vec<(VertexSet, BettiTable)>> {
    index_sets
        .par_iter()
        .map(|i| Ok((*i, k.full_subcomplex(*i).reduced_betti(spec)?)))
        .collect()
}

/// Σ_I b̃_{q−1}(K_I) as a table in q. The I = ∅ summand contributes exactly
/// 1 to q = 0, which is the constant-component term of the identities.
pub fn summed_subcomplex_betti(
    k: &SimplicialComplex,
    index_sets: &[VertexSet],
    spec: FieldSpec,
) -> Result<BettiTable> {
    let summands = subcomplex_summands(k, index_sets, spec)?;
    let mut out = BettiTable::zero();
    out.add(0, 0);
    for (_, table) in summands {
        for (q, v) in table.nonzero_pairs() {
            out.add(q + 1, v);
        }
    }
    Ok(out)
}

/// The predicted Betti numbers of M(K,λ):
/// b_q = [q = 0] + Σ_{∅ ≠ I ∈ Row(λ)} b̃_{q−1}(K_I).
pub fn rhs_betti(k: &SimplicialComplex, l: &LambdaMap, spec: FieldSpec) -> Result<BettiTable> {
    if l.m() != k.m() {
        return Err(Error::input(format!(
            "λ has {} columns but the complex has {} vertices",
            l.m(),
            k.m()
        )));
    }
    let row = l.row_space()?;
    summed_subcomplex_betti(k, row.elements(), spec)
}

/// One verification of the main identity over one field, with every pipeline
/// that is defined there.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub field: FieldSpec,
    pub m: u32,
    pub row_space_size: usize,
    pub kernel_order: usize,
    pub characteristic_map: bool,
    /// Betti numbers of the quotient cell model.
    pub quotient: BettiTable,
    /// The subcomplex sum over Row(λ).
    pub rhs: BettiTable,
    /// Cohomology of the invariant subcomplex of the cochain algebra;
    /// absent in characteristic 2 with a nontrivial kernel.
    pub invariant: Option<BettiTable>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl VerifyReport {
    pub fn exit_code(&self) -> i32 {
        self.verdict.exit_code()
    }
}

impl std::fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(
            f,
            "field {}  |Row(λ)| = {}  |ker λ| = {}  characteristic map: {}",
            self.field,
            self.row_space_size,
            self.kernel_order,
            if self.characteristic_map { "yes" } else { "no" }
        )?;
        writeln!(f, "  quotient Betti:  {}", self.quotient)?;
        writeln!(f, "  subcomplex sum:  {}", self.rhs)?;
        match &self.invariant {
            Some(t) => writeln!(f, "  invariant Betti: {t}")?,
            None => writeln!(f, "  invariant Betti: (not defined in characteristic 2)")?,
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        write!(f, "  verdict: {}", self.verdict)
    }
}

/// Runs every applicable pipeline and compares:
///  - quotient Betti numbers of the cell model,
///  - the Row(λ)-indexed subcomplex sum,
///  - cohomology of the invariant subcomplex (characteristic ≠ 2 or trivial
///    kernel only).
/// All defined pipelines must agree for PASS; in characteristic 2 with a
/// nontrivial kernel a quotient/sum mismatch is the documented failure mode
/// and reports EXPECTED-FAIL.
pub fn verify_main(
    k: &SimplicialComplex,
    l: &LambdaMap,
    spec: FieldSpec,
    max_cells: usize,
) -> Result<VerifyReport> {
    Ok(verify_fields(k, l, &[spec], max_cells)?.pop().expect("one field"))
}

/// `verify_main` over several fields at once. The quotient cell model is
/// field independent and is built once; only the linear algebra is redone.
pub fn verify_fields(
    k: &SimplicialComplex,
    l: &LambdaMap,
    specs: &[FieldSpec],
    max_cells: usize,
) -> Result<Vec<VerifyReport>> {
    if l.m() != k.m() {
        return Err(Error::input(format!(
            "λ has {} columns but the complex has {} vertices",
            l.m(),
            k.m()
        )));
    }
    let qc = quotient_complex(k, l, max_cells)?;
    specs
        .iter()
        .map(|&spec| verify_one_field(k, l, spec, &qc))
        .collect()
}

fn verify_one_field(
    k: &SimplicialComplex,
    l: &LambdaMap,
    spec: FieldSpec,
    qc: &QuotientComplex,
) -> Result<VerifyReport> {
    let kernel_order = l.kernel_elements()?.len();
    let char_two_obstructed = spec.characteristic() == 2 && kernel_order > 1;
    let quotient = qc.betti(spec)?;
    let rhs = rhs_betti(k, l, spec)?;
    let invariant = if char_two_obstructed {
        None
    } else {
        Some(invariant_betti(k, l, spec)?)
    };
    let mut notes = Vec::new();
    let quotient_matches = quotient == rhs;
    if !quotient_matches {
        notes.push(format!(
            "quotient {} differs from subcomplex sum {}",
            quotient, rhs
        ));
    }
    let invariant_matches = match &invariant {
        Some(t) => {
            let ok = *t == quotient && *t == rhs;
            if !ok {
                notes.push(format!("invariant cohomology {t} differs"));
            }
            ok
        }
        None => {
            notes.push(
                "characteristic 2 with a nontrivial kernel: the averaging \
                 projection does not exist, invariant pipeline skipped"
                    .to_string(),
            );
            true
        }
    };
    let verdict = if quotient_matches && invariant_matches {
        Verdict::Pass
    } else if char_two_obstructed {
        notes.push("disagreement in characteristic 2 is the documented breakdown".to_string());
        Verdict::ExpectedFail
    } else {
        Verdict::Fail
    };
    Ok(VerifyReport {
        field: spec,
        m: k.m(),
        row_space_size: l.row_space()?.elements().len(),
        kernel_order,
        characteristic_map: l.is_characteristic(k),
        quotient,
        rhs,
        invariant,
        verdict,
        notes,
    })
}

/// The unconditioned splitting: Betti numbers of the unquotiented space ℝZ_K
/// against the subcomplex sum over all of 2^[m]. Holds over every field.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BbcgReport {
    pub field: FieldSpec,
    pub m: u32,
    pub space: BettiTable,
    pub rhs: BettiTable,
    pub verdict: Verdict,
}

impl std::fmt::Display for BbcgReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "field {}", self.field)?;
        writeln!(f, "  space Betti:    {}", self.space)?;
        writeln!(f, "  subcomplex sum: {}", self.rhs)?;
        write!(f, "  verdict: {}", self.verdict)
    }
}

pub fn bbcg_check(k: &SimplicialComplex, spec: FieldSpec, max_cells: usize) -> Result<BbcgReport> {
    let space = rzk_betti(k, spec, max_cells)?;
    let all: Vec<VertexSet> = VertexSet::full(k.m()).subsets().collect();
    let rhs = summed_subcomplex_betti(k, &all, spec)?;
    let verdict = if space == rhs {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(BbcgReport {
        field: spec,
        m: k.m(),
        space,
        rhs,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::rp2_lambda;
    use crate::rzk::DEFAULT_MAX_CELLS;

    fn vs(v: &[u32], m: u32) -> VertexSet {
        VertexSet::from_vertices(v, m).unwrap()
    }

    fn triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, &[vs(&[1, 2], 3), vs(&[2, 3], 3), vs(&[1, 3], 3)])
            .unwrap()
    }

    #[test]
    fn rhs_for_projective_plane() {
        let k = triangle();
        let l = rp2_lambda();
        let rhs = rhs_betti(&k, &l, FieldSpec::Rational).unwrap();
        assert_eq!(rhs.nonzero_pairs(), vec![(0, 1)]);
        let rhs2 = rhs_betti(&k, &l, FieldSpec::Prime(2)).unwrap();
        assert_eq!(rhs2.nonzero_pairs(), vec![(0, 1)]);
    }

    #[test]
    fn verify_passes_away_from_two() {
        let k = triangle();
        let l = rp2_lambda();
        for spec in [FieldSpec::Rational, FieldSpec::Prime(3), FieldSpec::Prime(5)] {
            let r = verify_main(&k, &l, spec, DEFAULT_MAX_CELLS).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{r}");
            assert_eq!(r.quotient.nonzero_pairs(), vec![(0, 1)]);
            assert!(r.invariant.is_some());
            assert_eq!(r.exit_code(), 0);
        }
    }

    #[test]
    fn verify_expected_fail_at_two() {
        let k = triangle();
        let l = rp2_lambda();
        let r = verify_main(&k, &l, FieldSpec::Prime(2), DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(r.verdict, Verdict::ExpectedFail);
        assert_eq!(r.quotient.nonzero_pairs(), vec![(0, 1), (1, 1), (2, 1)]);
        assert_eq!(r.rhs.nonzero_pairs(), vec![(0, 1)]);
        assert!(r.invariant.is_none());
        assert_eq!(r.exit_code(), 0);
        assert!(!r.notes.is_empty());
    }

    #[test]
    fn verify_with_trivial_kernel_runs_all_pipelines_at_two() {
        let k = triangle();
        let l = LambdaMap::identity(3);
        let r = verify_main(&k, &l, FieldSpec::Prime(2), DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert!(r.invariant.is_some());
        // identity λ: the quotient is ℝZ_K itself, a torus-like circle bundle
        // (here: ∂Δ² gives Betti (1,0,1) in every characteristic)
        assert_eq!(r.quotient.nonzero_pairs(), vec![(0, 1), (2, 1)]);
    }

    #[test]
    fn bbcg_for_triangle_all_fields() {
        let k = triangle();
        for spec in [
            FieldSpec::Rational,
            FieldSpec::Prime(2),
            FieldSpec::Prime(3),
        ] {
            let r = bbcg_check(&k, spec, DEFAULT_MAX_CELLS).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "field {spec}");
            assert_eq!(r.space.nonzero_pairs(), vec![(0, 1), (2, 1)]);
        }
    }

    #[test]
    fn two_points_circle_quotient() {
        let k = SimplicialComplex::from_facets(
            2,
            &[VertexSet::singleton(1), VertexSet::singleton(2)],
        )
        .unwrap();
        let l = LambdaMap::from_bit_rows(&[vec![1, 1]]).unwrap();
        for spec in [
            FieldSpec::Rational,
            FieldSpec::Prime(2),
            FieldSpec::Prime(3),
        ] {
            let r = verify_main(&k, &l, spec, DEFAULT_MAX_CELLS).unwrap();
            // free action on a circle: quotient is a circle, and the identity
            // holds even at p = 2 (EXPECTED-FAIL is only for disagreement)
            assert_eq!(r.quotient.nonzero_pairs(), vec![(0, 1), (1, 1)]);
            assert_eq!(r.verdict, Verdict::Pass, "field {spec}");
        }
    }

    #[test]
    fn ghost_vertex_disconnects_quotient() {
        // K = {∅, {1}} on universe {1, 2}: ℝZ_K is D¹ × S⁰, two segments;
        // λ = [1 1] identifies them into one, λ = id keeps both.
        let k = SimplicialComplex::from_facets(2, &[VertexSet::singleton(1)]).unwrap();
        let l = LambdaMap::from_bit_rows(&[vec![1, 1]]).unwrap();
        let r = verify_main(&k, &l, FieldSpec::Rational, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.quotient.nonzero_pairs(), vec![(0, 1)]);
        let id = LambdaMap::identity(2);
        let r2 = verify_main(&k, &id, FieldSpec::Rational, DEFAULT_MAX_CELLS).unwrap();
        assert_eq!(r2.verdict, Verdict::Pass);
        assert_eq!(r2.quotient.nonzero_pairs(), vec![(0, 2)]);
    }

    #[test]
    fn report_serialization_round_trip() {
        let k = triangle();
        let l = rp2_lambda();
        let r = verify_main(&k, &l, FieldSpec::Prime(3), DEFAULT_MAX_CELLS).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        let back: VerifyReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back.verdict, r.verdict);
        assert_eq!(back.quotient, r.quotient);
    }

    #[test]
    fn mismatched_universes_are_rejected() {
        let k = triangle();
        let l = LambdaMap::from_bit_rows(&[vec![1, 1]]).unwrap();
        assert!(matches!(
            verify_main(&k, &l, FieldSpec::Rational, DEFAULT_MAX_CELLS),
            Err(Error::Input(_))
        ));
        assert!(matches!(
            rhs_betti(&k, &l, FieldSpec::Rational),
            Err(Error::Input(_))
        ));
    }
}
