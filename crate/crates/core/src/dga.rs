//! The cochain algebra R_K: generators u_i (degree 1) and t_i (degree 0)
//! with d(t_i) = u_i, subject to u_i² = 0, u_iu_j = −u_ju_i, u_it_i = u_i,
//! t_iu_i = 0, t_iu_j = u_jt_i (i≠j), t_i² = t_i, t_it_j = t_jt_i, and
//! u_σ = 0 for σ ∉ K. Its cohomology computes the Betti numbers of the cube
//! model, and the invariant subcomplex under the coordinate-flip action of
//! ker λ computes those of the quotient.

use crate::chain::{cochain_betti_from_triples, BettiTable};
use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::lambda::LambdaMap;
use crate::matrix::{rank_rows, rows_from_triples};
use crate::simplicial::SimplicialComplex;
use crate::subset::VertexSet;
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Normal-form basis monomial u_σ t_S with σ ∩ S = ∅ (and u_σ legal only
/// for σ ∈ K; constructors of elements enforce disjointness, membership is
/// the concern of the algebra operations).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub sigma: VertexSet,
    pub t: VertexSet,
}

impl Monomial {
    pub fn new(sigma: VertexSet, t: VertexSet) -> Result<Monomial> {
        if !sigma.intersect(t).is_empty() {
            return Err(Error::input(format!(
                "monomial indices overlap: u{sigma} t{t}"
            )));
        }
        Ok(Monomial { sigma, t })
    }

    pub fn one() -> Monomial {
        Monomial {
            sigma: VertexSet::EMPTY,
            t: VertexSet::EMPTY,
        }
    }

    /// The index set I = σ ∪ S; the monomial lives in the summand R_{K_I}.
    pub fn index_set(&self) -> VertexSet {
        self.sigma.union(self.t)
    }

    /// Cohomological degree |σ|.
    pub fn degree(&self) -> u32 {
        self.sigma.len()
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.sigma.is_empty() && self.t.is_empty() {
            return write!(f, "1");
        }
        if !self.sigma.is_empty() {
            write!(f, "u{}", self.sigma)?;
        }
        if !self.t.is_empty() {
            write!(f, "t{}", self.t)?;
        }
        Ok(())
    }
}

/// A finite linear combination of normal-form monomials; no zero
/// coefficients are stored, so data equality is element equality.
pub struct DgaElement<F: Field> {
    terms: BTreeMap<Monomial, F::Elem>,
}

impl<F: Field> Clone for DgaElement<F> {
    fn clone(&self) -> Self {
        DgaElement {
            terms: self.terms.clone(),
        }
    }
}

impl<F: Field> PartialEq for DgaElement<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> std::fmt::Debug for DgaElement<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

impl<F: Field> DgaElement<F> {
    pub fn zero() -> Self {
        DgaElement {
            terms: BTreeMap::new(),
        }
    }

    pub fn one(f: &F) -> Self {
        Self::from_monomial(f, Monomial::one())
    }

    pub fn from_monomial(f: &F, m: Monomial) -> Self {
        let mut e = Self::zero();
        e.add_term(f, m, f.one());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms.get(m)
    }

    pub fn add_term(&mut self, f: &F, m: Monomial, c: F::Elem) {
        if f.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = f.add(e.get(), &c);
                if f.is_zero(&s) {
                    e.remove();
                } else {
                    e.insert(s);
                }
            }
        }
    }

    pub fn add(&self, f: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(f, *m, c.clone());
        }
        out
    }

    pub fn sub(&self, f: &F, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(f, *m, f.neg(c));
        }
        out
    }

    pub fn scale(&self, f: &F, c: &F::Elem) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(f, *m, f.mul(v, c));
        }
        out
    }

    /// A term whose index set is maximal under containment (ties broken by
    /// the numeric order on (|I|, I, σ), which refines containment).
    pub fn max_index_term(&self) -> Option<(Monomial, F::Elem)> {
        self.terms
            .iter()
            .max_by_key(|(m, _)| {
                let i = m.index_set();
                (i.len(), i.mask(), m.sigma.mask())
            })
            .map(|(m, c)| (*m, c.clone()))
    }
}

impl<F: Field> std::fmt::Display for DgaElement<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c:?}·{m}")?;
        }
        Ok(())
    }
}

/// All normal-form basis monomials of R_K, grouped by cohomological degree.
pub fn monomial_basis(k: &SimplicialComplex) -> Vec<Vec<Monomial>> {
    let full = VertexSet::full(k.m());
    let top = k.facets().iter().map(|f| f.len()).max().unwrap_or(0) as usize;
    let mut out = vec![Vec::new(); top + 1];
    for sigma in k.faces() {
        for t in full.minus(sigma).subsets() {
            out[sigma.len() as usize].push(Monomial { sigma, t });
        }
    }
    for level in &mut out {
        level.sort();
    }
    out
}

/// The monomials of the summand R_{K_I}: {u_σ t_{I∖σ} : σ ∈ K, σ ⊆ I}.
/// The union over all I ⊆ [m] partitions the monomial basis.
pub fn submodule_basis(k: &SimplicialComplex, i: VertexSet) -> Vec<Monomial> {
    k.full_subcomplex(i)
        .faces()
        .into_iter()
        .map(|sigma| Monomial {
            sigma,
            t: i.minus(sigma),
        })
        .collect()
}

fn koszul_sign<F: Field>(f: &F, sigma: VertexSet, tau: VertexSet) -> F::Elem {
    let mut inversions = 0u32;
    for b in tau.vertices() {
        inversions += sigma.count_above(b);
    }
    if inversions % 2 == 0 {
        f.one()
    } else {
        f.neg(&f.one())
    }
}

/// Product of R_K: bilinear extension of
/// (u_σ t_S)(u_τ t_T) = ε·u_{σ∪τ} t_{(S∪T)∖(σ∪τ)}, vanishing when σ ∩ τ ≠ ∅,
/// S ∩ τ ≠ ∅, or σ ∪ τ ∉ K; ε is the Koszul sign of interleaving σ and τ.
pub fn multiply<F: Field>(
    f: &F,
    k: &SimplicialComplex,
    x: &DgaElement<F>,
    y: &DgaElement<F>,
) -> DgaElement<F> {
    let mut out = DgaElement::zero();
    for (mx, cx) in x.terms() {
        for (my, cy) in y.terms() {
            let sigma = mx.sigma;
            let tau = my.sigma;
            if !sigma.intersect(tau).is_empty() || !mx.t.intersect(tau).is_empty() {
                continue;
            }
            let st = sigma.union(tau);
            if !k.contains(st) {
                continue;
            }
            let eps = koszul_sign(f, sigma, tau);
            let t = mx.t.union(my.t).minus(st);
            let c = f.mul(&f.mul(cx, cy), &eps);
            out.add_term(f, Monomial { sigma: st, t }, c);
        }
    }
    out
}

/// The differential: the degree +1 derivation extending d(t_i) = u_i,
/// d(u_i) = 0. On normal forms,
/// d(u_σ t_S) = (−1)^{|σ|} Σ_{i∈S, σ∪{i}∈K} (−1)^{#{j∈σ: j>i}} u_{σ∪{i}} t_{S∖{i}}.
pub fn differential<F: Field>(
    f: &F,
    k: &SimplicialComplex,
    x: &DgaElement<F>,
) -> DgaElement<F> {
    let mut out = DgaElement::zero();
    for (m, c) in x.terms() {
        for i in m.t.vertices() {
            let bigger = m.sigma.insert(i);
            if !k.contains(bigger) {
                continue;
            }
            let flips = m.sigma.len() + m.sigma.count_above(i);
            let coeff = if flips % 2 == 0 {
                c.clone()
            } else {
                f.neg(c)
            };
            out.add_term(
                f,
                Monomial {
                    sigma: bigger,
                    t: m.t.remove(i),
                },
                coeff,
            );
        }
    }
    out
}

/// The flip action of g ∈ F_2^m: for i ∈ g, t_i ↦ 1 − t_i and u_i ↦ −u_i;
/// everything else fixed. An algebra automorphism commuting with d.
pub fn act_dga<F: Field>(f: &F, g: VertexSet, x: &DgaElement<F>) -> DgaElement<F> {
    let mut out = DgaElement::zero();
    for (m, c) in x.terms() {
        let base = if m.sigma.intersect(g).len() % 2 == 0 {
            c.clone()
        } else {
            f.neg(c)
        };
        let moving = m.t.intersect(g);
        let keep = m.t.minus(g);
        for a in moving.subsets() {
            let coeff = if a.len() % 2 == 0 {
                base.clone()
            } else {
                f.neg(&base)
            };
            out.add_term(
                f,
                Monomial {
                    sigma: m.sigma,
                    t: keep.union(a),
                },
                coeff,
            );
        }
    }
    out
}

/// The Reynolds projection N(x) = 1/|G| Σ_{g∈G} g·x onto the invariants.
pub fn reynolds<F: Field>(
    f: &F,
    kernel: &[VertexSet],
    x: &DgaElement<F>,
) -> Result<DgaElement<F>> {
    let n = kernel.len().max(1);
    let n_elem = f.from_i64(n as i64);
    if f.is_zero(&n_elem) {
        return Err(Error::CoefficientDomain(format!(
            "field characteristic {} divides the group order {n}",
            f.characteristic()
        )));
    }
    let inv_n = f.inv(&n_elem);
    let mut acc = DgaElement::zero();
    for g in kernel {
        acc = acc.add(f, &act_dga(f, *g, x));
    }
    Ok(acc.scale(f, &inv_n))
}

/// Projection Φ onto ⊕_{I ∈ Row(λ)} R_{K_I}: deletes every monomial whose
/// index set lies outside Row(λ). Restricted to the ker λ-invariants it is a
/// ring isomorphism; non-invariant input is rejected.
pub fn phi<F: Field>(f: &F, l: &LambdaMap, x: &DgaElement<F>) -> Result<DgaElement<F>> {
    for g in l.kernel_basis() {
        if &act_dga(f, g, x) != x {
            return Err(Error::NonInvariant(format!(
                "element moves under kernel generator {g}"
            )));
        }
    }
    let rs = l.row_space()?;
    let mut out = DgaElement::zero();
    for (m, c) in x.terms() {
        if rs.contains(m.index_set()) {
            out.add_term(f, *m, c.clone());
        }
    }
    Ok(out)
}

/// Inverse of Φ on the span of Row(λ)-indexed monomials: peels the maximal
/// term m, subtracts its coefficient times Φ(N(m)), and repeats. Each step
/// replaces the maximal term by terms with strictly smaller index sets, so
/// the peeling terminates and the output is the unique invariant preimage.
pub fn phi_inverse<F: Field>(
    f: &F,
    k: &SimplicialComplex,
    l: &LambdaMap,
    x: &DgaElement<F>,
) -> Result<DgaElement<F>> {
    if l.m() != k.m() {
        return Err(Error::input(format!(
            "λ has {} columns but the complex has {} vertices",
            l.m(),
            k.m()
        )));
    }
    let rs = l.row_space()?;
    for (m, _) in x.terms() {
        if !rs.contains(m.index_set()) {
            return Err(Error::input(format!(
                "term {m} has index set outside Row(λ)"
            )));
        }
        if !k.contains(m.sigma) {
            return Err(Error::input(format!("term {m} has a face outside K")));
        }
    }
    let kernel = l.kernel_elements()?;
    let mut rest = x.clone();
    let mut out = DgaElement::zero();
    while let Some((m, c)) = rest.max_index_term() {
        if !rs.contains(m.index_set()) {
            return Err(Error::NonInvariant(format!(
                "peeling produced a term {m} outside Row(λ)"
            )));
        }
        let n = reynolds(f, &kernel, &DgaElement::from_monomial(f, m))?;
        out = out.add(f, &n.scale(f, &c));
        let mut projected = DgaElement::zero();
        for (mm, cc) in n.terms() {
            if rs.contains(mm.index_set()) {
                projected.add_term(f, *mm, cc.clone());
            }
        }
        rest = rest.sub(f, &projected.scale(f, &c));
    }
    Ok(out)
}

/// Cohomology dimensions of (R_K, d) over the field; agrees with the Betti
/// numbers of the cube model of ℝZ_K.
pub fn dga_betti(k: &SimplicialComplex, spec: FieldSpec) -> Result<BettiTable> {
    let basis = monomial_basis(k);
    let dims: Vec<usize> = basis.iter().map(|v| v.len()).collect();
    let mut index = std::collections::HashMap::new();
    for level in &basis {
        for (i, m) in level.iter().enumerate() {
            index.insert(*m, i as u32);
        }
    }
    // integer differential matrices, reduced into the field afterwards
    let mut d_mats: Vec<Vec<(u32, u32, i64)>> = vec![Vec::new(); dims.len()];
    for (q, level) in basis.iter().enumerate() {
        if q + 1 == dims.len() {
            break;
        }
        for (col, m) in level.iter().enumerate() {
            for i in m.t.vertices() {
                let bigger = m.sigma.insert(i);
                if !k.contains(bigger) {
                    continue;
                }
                let flips = m.sigma.len() + m.sigma.count_above(i);
                let sign = if flips % 2 == 0 { 1 } else { -1 };
                let target = Monomial {
                    sigma: bigger,
                    t: m.t.remove(i),
                };
                d_mats[q].push((index[&target], col as u32, sign));
            }
        }
    }
    match spec {
        FieldSpec::Rational => {
            let f = Rationals;
            let mats = crate::chain::map_boundaries(&f, &d_mats);
            cochain_betti_from_triples(&f, 0, &dims, &mats)
        }
        FieldSpec::Prime(p) => {
            let f = PrimeField::new(p)?;
            let mats = crate::chain::map_boundaries(&f, &d_mats);
            cochain_betti_from_triples(&f, 0, &dims, &mats)
        }
    }
}

/// Where a basis monomial lands in the augmented simplicial cochain complex
/// of K_I under u_σ t_{I∖σ} ↦ σ*. The intertwining sign is +1 in every
/// degree with this differential convention (checked by
/// `cochain_intertwining_signs`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CochainImage {
    pub index_set: VertexSet,
    pub simplex: VertexSet,
    /// Cochain degree |σ| − 1; the empty σ maps to the augmentation dual.
    pub degree: i32,
    pub sign: i64,
}

pub fn to_simplicial_cochain(m: &Monomial) -> CochainImage {
    CochainImage {
        index_set: m.index_set(),
        simplex: m.sigma,
        degree: m.sigma.len() as i32 - 1,
        sign: 1,
    }
}

/// Verifies, entry by entry, that the DGA differential on R_{K_I} equals the
/// augmented simplicial coboundary of K_I under u_σ t_{I∖σ} ↦ σ*, and
/// returns the per-degree sign making them agree (always +1 here; any other
/// discrepancy is an integrity error).
pub fn cochain_intertwining_signs(
    k: &SimplicialComplex,
    i: VertexSet,
) -> Result<Vec<(i32, i64)>> {
    let f = Rationals;
    let ki = k.full_subcomplex(i);
    let mut signs = Vec::new();
    for m in submodule_basis(k, i) {
        // d in the DGA, pushed through the labelling
        let dm = differential(&f, k, &DgaElement::from_monomial(&f, m));
        let mut dga_side: Vec<(VertexSet, i64)> = dm
            .terms()
            .map(|(t, c)| {
                debug_assert_eq!(t.index_set(), i);
                let v = if *c == f.one() { 1 } else { -1 };
                (t.sigma, v)
            })
            .collect();
        dga_side.sort();
        // simplicial coboundary of σ* in the augmented complex of K_I:
        // δ(σ*) = Σ_{v: σ∪{v} ∈ K_I} (−1)^{#{j∈σ: j<v}} (σ∪{v})*
        let mut simp_side: Vec<(VertexSet, i64)> = Vec::new();
        for v in i.minus(m.sigma).vertices() {
            let up = m.sigma.insert(v);
            if !ki.contains(up) {
                continue;
            }
            let sign = if m.sigma.count_below(v) % 2 == 0 {
                1
            } else {
                -1
            };
            simp_side.push((up, sign));
        }
        simp_side.sort();
        if dga_side != simp_side {
            return Err(Error::ComplexIntegrity(format!(
                "cochain intertwining fails at {m} (index set {i})"
            )));
        }
        signs.push((m.degree() as i32, 1));
    }
    signs.sort();
    signs.dedup();
    Ok(signs)
}

/// The invariant basis {N(u_σ t_{I∖σ}) : I ∈ Row(λ), σ ∈ K_I}, keyed by the
/// leading monomial (whose coefficient is 1).
pub fn invariant_basis<F: Field>(
    f: &F,
    k: &SimplicialComplex,
    l: &LambdaMap,
) -> Result<Vec<(Monomial, DgaElement<F>)>> {
    if l.m() != k.m() {
        return Err(Error::input(format!(
            "λ has {} columns but the complex has {} vertices",
            l.m(),
            k.m()
        )));
    }
    let kernel = l.kernel_elements()?;
    let mut out = Vec::new();
    for i in l.row_space()?.elements() {
        for m in submodule_basis(k, *i) {
            let n = reynolds(f, &kernel, &DgaElement::from_monomial(f, m))?;
            out.push((m, n));
        }
    }
    Ok(out)
}

/// Expands an invariant element in the invariant basis by repeatedly peeling
/// its maximal-index-set term; a maximal term outside Row(λ) means the
/// element is not in the invariant span and is reported, never patched.
fn expand_in_invariant_basis<F: Field>(
    f: &F,
    basis_index: &std::collections::HashMap<Monomial, usize>,
    basis: &[(Monomial, DgaElement<F>)],
    y: &DgaElement<F>,
) -> Result<Vec<(usize, F::Elem)>> {
    let mut rest = y.clone();
    let mut coords = Vec::new();
    while let Some((m, c)) = rest.max_index_term() {
        let Some(&idx) = basis_index.get(&m) else {
            return Err(Error::NonInvariant(format!(
                "maximal term {m} is not a leading monomial of the invariant basis"
            )));
        };
        rest = rest.sub(f, &basis[idx].1.scale(f, &c));
        coords.push((idx, c));
    }
    Ok(coords)
}

/// Cohomology of the subcomplex of ker λ-invariants of (R_K, d); equals the
/// Betti numbers of the quotient space.
pub fn invariant_betti(
    k: &SimplicialComplex,
    l: &LambdaMap,
    spec: FieldSpec,
) -> Result<BettiTable> {
    match spec {
        FieldSpec::Rational => invariant_betti_over(&Rationals, k, l),
        FieldSpec::Prime(p) => invariant_betti_over(&PrimeField::new(p)?, k, l),
    }
}

fn invariant_betti_over<F: Field>(
    f: &F,
    k: &SimplicialComplex,
    l: &LambdaMap,
) -> Result<BettiTable> {
    let basis = invariant_basis(f, k, l)?;
    let top = basis.iter().map(|(m, _)| m.degree()).max().unwrap_or(0) as usize;
    // degree-graded indexing of the basis
    let mut by_degree: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    let mut position = vec![0u32; basis.len()];
    for (idx, (m, _)) in basis.iter().enumerate() {
        let level = &mut by_degree[m.degree() as usize];
        position[idx] = level.len() as u32;
        level.push(idx);
    }
    let mut basis_index = std::collections::HashMap::new();
    for (idx, (m, _)) in basis.iter().enumerate() {
        basis_index.insert(*m, idx);
    }
    let dims: Vec<usize> = by_degree.iter().map(|v| v.len()).collect();
    let mut d_mats: Vec<Vec<(u32, u32, F::Elem)>> = vec![Vec::new(); dims.len()];
    for (q, level) in by_degree.iter().enumerate() {
        for (col, &idx) in level.iter().enumerate() {
            let dn = differential(f, k, &basis[idx].1);
            if dn.is_zero() {
                continue;
            }
            if q + 1 > top {
                return Err(Error::ComplexIntegrity(
                    "differential escapes the degree window".into(),
                ));
            }
            for (target, c) in expand_in_invariant_basis(f, &basis_index, &basis, &dn)? {
                d_mats[q].push((position[target], col as u32, c));
            }
        }
    }
    cochain_betti_from_triples(f, 0, &dims, &d_mats)
}

/// Dimension of the fixed subspace of the kernel action on all of R_K,
/// computed directly as dim − rank of the stacked (A_g − id): the
/// independent check that the Reynolds basis spans everything invariant.
pub fn fixed_subspace_dimension(
    k: &SimplicialComplex,
    l: &LambdaMap,
    spec: FieldSpec,
) -> Result<usize> {
    match spec {
        FieldSpec::Rational => fixed_dim_over(&Rationals, k, l),
        FieldSpec::Prime(p) => fixed_dim_over(&PrimeField::new(p)?, k, l),
    }
}

fn fixed_dim_over<F: Field>(f: &F, k: &SimplicialComplex, l: &LambdaMap) -> Result<usize> {
    if l.m() != k.m() {
        return Err(Error::input(format!(
            "λ has {} columns but the complex has {} vertices",
            l.m(),
            k.m()
        )));
    }
    let basis: Vec<Monomial> = monomial_basis(k).into_iter().flatten().collect();
    let mut index = std::collections::HashMap::new();
    for (i, m) in basis.iter().enumerate() {
        index.insert(*m, i as u32);
    }
    let gens = l.kernel_basis();
    let mut triples: Vec<(u32, u32, F::Elem)> = Vec::new();
    let mut row_base = 0u32;
    for g in &gens {
        for (col, m) in basis.iter().enumerate() {
            let mut moved = act_dga(f, *g, &DgaElement::from_monomial(f, *m));
            moved.add_term(f, *m, f.neg(&f.one()));
            for (t, c) in moved.terms() {
                triples.push((row_base + index[t], col as u32, c.clone()));
            }
        }
        row_base += basis.len() as u32;
    }
    let rows = rows_from_triples(
        (gens.len() * basis.len()).max(1),
        triples.into_iter(),
    );
    Ok(basis.len() - rank_rows(f, basis.len(), rows))
}

/// The eight defining relations, checked as identities of normalized
/// elements over the given field for every pair of vertices.
pub fn check_relations(k: &SimplicialComplex, spec: FieldSpec) -> Result<()> {
    match spec {
        FieldSpec::Rational => check_relations_over(&Rationals, k),
        FieldSpec::Prime(p) => check_relations_over(&PrimeField::new(p)?, k),
    }
}

fn check_relations_over<F: Field>(f: &F, k: &SimplicialComplex) -> Result<()> {
    let m = k.m();
    let u = |i: u32| -> DgaElement<F> {
        DgaElement::from_monomial(
            f,
            Monomial {
                sigma: VertexSet::singleton(i),
                t: VertexSet::EMPTY,
            },
        )
    };
    let t = |i: u32| -> DgaElement<F> {
        DgaElement::from_monomial(
            f,
            Monomial {
                sigma: VertexSet::EMPTY,
                t: VertexSet::singleton(i),
            },
        )
    };
    let fail = |what: &str| Err(Error::ComplexIntegrity(format!("relation failed: {what}")));
    for i in 1..=m {
        if !k.contains(VertexSet::singleton(i)) {
            // u_i = 0 for ghost vertices: the σ ∉ K relation at σ = {i}
            if !multiply(f, k, &u(i), &DgaElement::one(f)).is_zero() {
                return fail("u_i with {i} ∉ K");
            }
            continue;
        }
        if !multiply(f, k, &u(i), &u(i)).is_zero() {
            return fail("u_i u_i");
        }
        if multiply(f, k, &u(i), &t(i)) != u(i) {
            return fail("u_i t_i − u_i");
        }
        if !multiply(f, k, &t(i), &u(i)).is_zero() {
            return fail("t_i u_i");
        }
        if multiply(f, k, &t(i), &t(i)) != t(i) {
            return fail("t_i t_i − t_i");
        }
        for j in 1..=m {
            if j == i {
                continue;
            }
            let uij = multiply(f, k, &u(i), &u(j));
            let uji = multiply(f, k, &u(j), &u(i));
            if !uij.add(f, &uji).is_zero() {
                return fail("u_i u_j + u_j u_i");
            }
            if !k.contains(VertexSet::singleton(i).union(VertexSet::singleton(j)))
                && !uij.is_zero()
            {
                return fail("u_σ with σ ∉ K");
            }
            if k.contains(VertexSet::singleton(j)) {
                if multiply(f, k, &t(i), &u(j)) != multiply(f, k, &u(j), &t(i)) {
                    return fail("t_i u_j − u_j t_i");
                }
                if multiply(f, k, &t(i), &t(j)) != multiply(f, k, &t(j), &t(i)) {
                    return fail("t_i t_j − t_j t_i");
                }
            }
        }
    }
    Ok(())
}
