use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::matrix::{compose_triples, rank_rows, rows_from_triples};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Per-degree homology dimensions on a finite degree window; degrees outside
/// the window are zero. Equality ignores window padding.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BettiTable {
    min_degree: i32,
    values: Vec<usize>,
}

impl BettiTable {
    pub fn new(min_degree: i32, values: Vec<usize>) -> Self {
        BettiTable { min_degree, values }
    }

    pub fn zero() -> Self {
        BettiTable {
            min_degree: 0,
            values: Vec::new(),
        }
    }

    pub fn from_pairs(pairs: &[(i32, usize)]) -> Self {
        let mut t = BettiTable::zero();
        for &(q, v) in pairs {
            t.add(q, v);
        }
        t
    }

    pub fn get(&self, q: i32) -> usize {
        let idx = q - self.min_degree;
        if idx < 0 || idx as usize >= self.values.len() {
            0
        } else {
            self.values[idx as usize]
        }
    }

    pub fn add(&mut self, q: i32, v: usize) {
        if v == 0 {
            return;
        }
        if self.values.is_empty() {
            self.min_degree = q;
            self.values.push(v);
            return;
        }
        while q < self.min_degree {
            self.values.insert(0, 0);
            self.min_degree -= 1;
        }
        let idx = (q - self.min_degree) as usize;
        while idx >= self.values.len() {
            self.values.push(0);
        }
        self.values[idx] += v;
    }

    /// Nonzero entries, ascending by degree.
    pub fn nonzero_pairs(&self) -> Vec<(i32, usize)> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(i, v)| (self.min_degree + i as i32, *v))
            .collect()
    }

    pub fn total(&self) -> usize {
        self.values.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let q = self.min_degree + i as i32;
                if q.rem_euclid(2) == 0 {
                    *v as i64
                } else {
                    -(*v as i64)
                }
            })
            .sum()
    }

    /// Maximum degree with a nonzero value, if any.
    pub fn top_degree(&self) -> Option<i32> {
        self.nonzero_pairs().last().map(|(q, _)| *q)
    }
}

impl PartialEq for BettiTable {
    fn eq(&self, other: &Self) -> bool {
        self.nonzero_pairs() == other.nonzero_pairs()
    }
}
impl Eq for BettiTable {}

impl std::fmt::Display for BettiTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let pairs = self.nonzero_pairs();
        if pairs.is_empty() {
            return write!(f, "0");
        }
        for (k, (q, v)) in pairs.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "b[{q}]={v}")?;
        }
        Ok(())
    }
}

/// A finite graded chain complex with integer boundary matrices (stored as
/// triples). `boundaries[k]` is ∂: C_{min+k} → C_{min+k−1}; the lowest one
/// maps to the zero space outside the window and must be empty.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub min_degree: i32,
    pub dims: Vec<usize>,
    pub boundaries: Vec<Vec<(u32, u32, i64)>>,
}

impl ChainComplex {
    pub fn validate_shapes(&self) -> Result<()> {
        if self.boundaries.len() != self.dims.len() {
            return Err(Error::input("boundary count must match degree count"));
        }
        for (k, b) in self.boundaries.iter().enumerate() {
            let ncols = self.dims[k];
            let nrows = if k == 0 { 0 } else { self.dims[k - 1] };
            for (r, c, _) in b {
                if *r as usize >= nrows || *c as usize >= ncols {
                    return Err(Error::input(format!(
                        "boundary entry ({r},{c}) out of shape {nrows}x{ncols} at window index {k}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn total_cells(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.dims
            .iter()
            .enumerate()
            .map(|(k, d)| {
                let q = self.min_degree + k as i32;
                if q.rem_euclid(2) == 0 {
                    *d as i64
                } else {
                    -(*d as i64)
                }
            })
            .sum()
    }

    /// Homology dimensions over the chosen field (b_q = dim C_q − rank ∂_q −
    /// rank ∂_{q+1}), after checking ∂∘∂ = 0 over that field.
    pub fn betti_numbers(&self, spec: FieldSpec) -> Result<BettiTable> {
        self.validate_shapes()?;
        match spec {
            FieldSpec::Rational => betti_from_triples(
                &Rationals,
                self.min_degree,
                &self.dims,
                &map_boundaries(&Rationals, &self.boundaries),
            ),
            FieldSpec::Prime(p) => {
                let f = PrimeField::new(p)?;
                betti_from_triples(
                    &f,
                    self.min_degree,
                    &self.dims,
                    &map_boundaries(&f, &self.boundaries),
                )
            }
        }
    }

    /// Homology of the complex with all arrows transposed; computes cochain
    /// Betti numbers when `self.boundaries[k]` stores the differential
    /// d: C^{min+k−1} → C^{min+k} as its transpose.
    pub fn betti_of_transpose(&self, spec: FieldSpec) -> Result<BettiTable> {
        self.betti_numbers(spec)
    }
}

pub fn map_boundaries<F: Field>(
    f: &F,
    boundaries: &[Vec<(u32, u32, i64)>],
) -> Vec<Vec<(u32, u32, F::Elem)>> {
    boundaries
        .iter()
        .map(|b| {
            b.iter()
                .filter_map(|(r, c, v)| {
                    let e = f.from_i64(*v);
                    if f.is_zero(&e) {
                        None
                    } else {
                        Some((*r, *c, e))
                    }
                })
                .collect()
        })
        .collect()
}

/// Field-generic Betti computation from boundary triples, including the
/// ∂∘∂ = 0 integrity gate. Ranks for distinct degrees run in parallel.
pub fn betti_from_triples<F: Field>(
    f: &F,
    min_degree: i32,
    dims: &[usize],
    boundaries: &[Vec<(u32, u32, F::Elem)>],
) -> Result<BettiTable> {
    for k in 1..boundaries.len() {
        let prod = compose_triples(f, &boundaries[k - 1], &boundaries[k]);
        if !prod.is_empty() {
            return Err(Error::ComplexIntegrity(format!(
                "boundary squared is nonzero between degrees {} and {}",
                min_degree + k as i32,
                min_degree + k as i32 - 2
            )));
        }
    }
    let ranks: Vec<usize> = boundaries
        .par_iter()
        .enumerate()
        .map(|(k, b)| {
            let nrows = if k == 0 { 0 } else { dims[k - 1] };
            let rows = rows_from_triples(nrows, b.iter().map(|(r, c, v)| (*r, *c, v.clone())));
            rank_rows(f, dims[k], rows)
        })
        .collect();
    let mut values = Vec::with_capacity(dims.len());
    for k in 0..dims.len() {
        let up = if k + 1 < ranks.len() { ranks[k + 1] } else { 0 };
        let b = dims[k]
            .checked_sub(ranks[k] + up)
            .ok_or_else(|| Error::ComplexIntegrity("rank exceeds dimension".into()))?;
        values.push(b);
    }
    Ok(BettiTable::new(min_degree, values))
}

/// Cochain Betti numbers: `d[k]` is the differential C^{min+k} → C^{min+k+1}
/// (the top one maps out of the window and must be empty); ranks are
/// transpose-invariant, so this feeds the transposed triples to the chain
/// machinery.
pub fn cochain_betti_from_triples<F: Field>(
    f: &F,
    min_degree: i32,
    dims: &[usize],
    d: &[Vec<(u32, u32, F::Elem)>],
) -> Result<BettiTable> {
    if d.len() != dims.len() {
        return Err(Error::input("differential count must match degree count"));
    }
    let mut boundaries: Vec<Vec<(u32, u32, F::Elem)>> = vec![Vec::new(); dims.len()];
    for (k, dk) in d.iter().enumerate() {
        if k + 1 == dims.len() {
            if !dk.is_empty() {
                return Err(Error::input("top differential must vanish"));
            }
            continue;
        }
        boundaries[k + 1] = dk.iter().map(|(r, c, v)| (*c, *r, v.clone())).collect();
    }
    betti_from_triples(f, min_degree, dims, &boundaries)
}
