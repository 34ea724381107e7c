use crate::field::{Field, FieldSpec, PrimeField, Rationals};
use crate::{Error, Result};
use num::{BigInt, BigRational};
use num::{Signed, Zero};

/// Sparse matrix with exact rational entries (the user-facing coefficient
/// type; residues arise by reduction at rank time).
#[derive(Clone, Debug)]
pub struct SparseMatrix {
    pub nrows: usize,
    pub ncols: usize,
    entries: Vec<(u32, u32, BigRational)>,
}

impl SparseMatrix {
    pub fn new(nrows: usize, ncols: usize, entries: Vec<(u32, u32, BigRational)>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for (r, c, v) in &entries {
            if *r as usize >= nrows || *c as usize >= ncols {
                return Err(Error::input(format!("entry ({r},{c}) out of bounds")));
            }
            if v.is_zero() {
                return Err(Error::input("stored zero entry"));
            }
            if !seen.insert((*r, *c)) {
                return Err(Error::input(format!("duplicate entry at ({r},{c})")));
            }
        }
        Ok(SparseMatrix {
            nrows,
            ncols,
            entries,
        })
    }

    pub fn from_int_entries(
        nrows: usize,
        ncols: usize,
        entries: &[(u32, u32, i64)],
    ) -> Result<Self> {
        SparseMatrix::new(
            nrows,
            ncols,
            entries
                .iter()
                .filter(|(_, _, v)| *v != 0)
                .map(|&(r, c, v)| (r, c, BigRational::from_integer(v.into())))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[(u32, u32, BigRational)] {
        &self.entries
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            entries: self
                .entries
                .iter()
                .map(|(r, c, v)| (*c, *r, v.clone()))
                .collect(),
        }
    }

    /// Rank over the chosen field; rational entries whose denominator dies in
    /// F_p are not reducible and raise a coefficient-domain error.
    pub fn rank(&self, spec: FieldSpec) -> Result<usize> {
        match spec {
            FieldSpec::Rational => {
                let f = Rationals;
                let rows = rows_from_triples(
                    self.nrows,
                    self.entries.iter().map(|(r, c, v)| (*r, *c, v.clone())),
                );
                Ok(rank_rows(&f, self.ncols, rows))
            }
            FieldSpec::Prime(p) => {
                let f = PrimeField::new(p)?;
                let mut triples = Vec::with_capacity(self.entries.len());
                for (r, c, v) in &self.entries {
                    let e = reduce_rational(&f, v)?;
                    if !f.is_zero(&e) {
                        triples.push((*r, *c, e));
                    }
                }
                let rows = rows_from_triples(self.nrows, triples.into_iter());
                Ok(rank_rows(&f, self.ncols, rows))
            }
        }
    }
}

/// Reduces an exact rational into F_p; errors when p divides the denominator.
pub fn reduce_rational(f: &PrimeField, v: &BigRational) -> Result<u64> {
    let p = BigInt::from(f.p());
    let dm = mod_to_u64(&(v.denom() % &p), f.p());
    if dm == 0 {
        return Err(Error::CoefficientDomain(format!(
            "denominator of {v} vanishes in F_{}",
            f.p()
        )));
    }
    let nm = mod_to_u64(&(v.numer() % &p), f.p());
    Ok(f.mul(&nm, &f.inv(&dm)))
}

fn mod_to_u64(r: &BigInt, p: u64) -> u64 {
    use num::ToPrimitive;
    let m = if r.is_negative() {
        r + BigInt::from(p)
    } else {
        r.clone()
    };
    m.to_u64().expect("residue fits in u64")
}

pub fn rows_from_triples<E>(
    nrows: usize,
    triples: impl Iterator<Item = (u32, u32, E)>,
) -> Vec<Vec<(u32, E)>> {
    let mut rows: Vec<Vec<(u32, E)>> = (0..nrows).map(|_| Vec::new()).collect();
    for (r, c, v) in triples {
        rows[r as usize].push((c, v));
    }
    for row in &mut rows {
        row.sort_by_key(|(c, _)| *c);
    }
    rows
}

/// Exact Gaussian elimination on sparse rows (sorted by column). Pivots are
/// chosen sparsest-row-first, then sparsest-column within that row, which
/// keeps fill-in tolerable on boundary matrices with ~10⁴ cells.
pub fn rank_rows<F: Field>(f: &F, ncols: usize, rows: Vec<Vec<(u32, F::Elem)>>) -> usize {
    let mut rows: Vec<Vec<(u32, F::Elem)>> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    let mut active: Vec<bool> = vec![true; rows.len()];
    let mut col_count = vec![0usize; ncols];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); ncols];
    for (i, row) in rows.iter().enumerate() {
        for (c, _) in row {
            col_count[*c as usize] += 1;
            col_rows[*c as usize].push(i);
        }
    }
    let mut rank = 0usize;
    loop {
        let mut best: Option<(usize, usize)> = None;
        for (i, row) in rows.iter().enumerate() {
            if active[i] && !row.is_empty() {
                let nnz = row.len();
                if best.map_or(true, |(_, b)| nnz < b) {
                    best = Some((i, nnz));
                    if nnz == 1 {
                        break;
                    }
                }
            }
        }
        let Some((pi, _)) = best else { break };
        let pc = rows[pi]
            .iter()
            .map(|(c, _)| *c)
            .min_by_key(|c| col_count[*c as usize])
            .unwrap();
        rank += 1;
        active[pi] = false;
        let pivot_row = std::mem::take(&mut rows[pi]);
        for (c, _) in &pivot_row {
            col_count[*c as usize] -= 1;
        }
        let pv = &pivot_row.iter().find(|(c, _)| *c == pc).unwrap().1;
        let pv_inv = f.inv(pv);
        let victims = std::mem::take(&mut col_rows[pc as usize]);
        for vi in victims {
            if !active[vi] {
                continue;
            }
            let Some(pos) = rows[vi].iter().position(|(c, _)| *c == pc) else {
                continue; // stale index: the entry got cancelled earlier
            };
            let factor = f.mul(&rows[vi][pos].1, &pv_inv);
            let merged = row_sub_scaled(f, &rows[vi], &pivot_row, &factor);
            for (c, _) in &rows[vi] {
                col_count[*c as usize] -= 1;
            }
            for (c, _) in &merged {
                col_count[*c as usize] += 1;
                if *c != pc {
                    col_rows[*c as usize].push(vi);
                }
            }
            rows[vi] = merged;
        }
    }
    rank
}

/// row − factor·pivot on sorted sparse rows.
fn row_sub_scaled<F: Field>(
    f: &F,
    row: &[(u32, F::Elem)],
    pivot: &[(u32, F::Elem)],
    factor: &F::Elem,
) -> Vec<(u32, F::Elem)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < row.len() || j < pivot.len() {
        if j >= pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i >= row.len() || pivot[j].0 < row[i].0 {
            let v = f.neg(&f.mul(factor, &pivot[j].1));
            if !f.is_zero(&v) {
                out.push((pivot[j].0, v));
            }
            j += 1;
        } else {
            let v = f.sub(&row[i].1, &f.mul(factor, &pivot[j].1));
            if !f.is_zero(&v) {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Sparse product b∘a of triple lists (a: mid→rows? no: a maps C→C', b: C'→C''),
/// given as (row, col, coeff) with b.cols = a.rows.
pub fn compose_triples<F: Field>(
    f: &F,
    b: &[(u32, u32, F::Elem)],
    a: &[(u32, u32, F::Elem)],
) -> Vec<(u32, u32, F::Elem)> {
    use std::collections::HashMap;
    let mut b_by_col: HashMap<u32, Vec<(u32, F::Elem)>> = HashMap::new();
    for (r, c, v) in b {
        b_by_col.entry(*c).or_default().push((*r, v.clone()));
    }
    let mut acc: HashMap<(u32, u32), F::Elem> = HashMap::new();
    for (r, c, v) in a {
        if let Some(hits) = b_by_col.get(r) {
            for (br, bv) in hits {
                let e = acc.entry((*br, *c)).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(bv, v));
            }
        }
    }
    acc.into_iter()
        .filter(|(_, v)| !f.is_zero(v))
        .map(|((r, c), v)| (r, c, v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(nrows: usize, ncols: usize, dense: &[&[i64]]) -> SparseMatrix {
        let mut entries = Vec::new();
        for (r, row) in dense.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                if *v != 0 {
                    entries.push((r as u32, c as u32, *v));
                }
            }
        }
        SparseMatrix::from_int_entries(nrows, ncols, &entries).unwrap()
    }

    #[test]
    fn rank_identity_and_zero() {
        let id = mat(2, 2, &[&[1, 0], &[0, 1]]);
        assert_eq!(id.rank(FieldSpec::Prime(3)).unwrap(), 2);
        let z = SparseMatrix::from_int_entries(3, 4, &[]).unwrap();
        assert_eq!(z.rank(FieldSpec::Rational).unwrap(), 0);
    }

    #[test]
    fn rank_depends_on_field() {
        let m = mat(3, 3, &[&[1, 0, 1], &[0, 1, 1], &[1, 1, 0]]);
        assert_eq!(m.rank(FieldSpec::Prime(2)).unwrap(), 2);
        assert_eq!(m.rank(FieldSpec::Rational).unwrap(), 3);
        assert_eq!(m.rank(FieldSpec::Prime(3)).unwrap(), 3);
    }

    #[test]
    fn rank_equals_transpose_rank() {
        let m = mat(3, 4, &[&[2, 0, -1, 3], &[4, 0, -2, 6], &[0, 5, 0, 1]]);
        for spec in [FieldSpec::Rational, FieldSpec::Prime(2), FieldSpec::Prime(5)] {
            assert_eq!(m.rank(spec).unwrap(), m.transpose().rank(spec).unwrap());
        }
    }

    #[test]
    fn modular_rank_never_exceeds_rational_rank() {
        let m = mat(3, 3, &[&[6, 2, 0], &[3, 1, 0], &[0, 0, 10]]);
        let rq = m.rank(FieldSpec::Rational).unwrap();
        for p in [2u64, 3, 5, 7] {
            assert!(m.rank(FieldSpec::Prime(p)).unwrap() <= rq);
        }
    }

    #[test]
    fn rational_entries_reduce_or_error() {
        let half = BigRational::new(1.into(), 2.into());
        let m = SparseMatrix::new(1, 1, vec![(0, 0, half)]).unwrap();
        assert_eq!(m.rank(FieldSpec::Prime(3)).unwrap(), 1);
        assert!(matches!(
            m.rank(FieldSpec::Prime(2)),
            Err(Error::CoefficientDomain(_))
        ));
    }

    #[test]
    fn composition_of_triples() {
        let q = Rationals;
        let one = || BigRational::from_integer(1.into());
        // b: 1x2, a: 2x1, b∘a = [[2]]
        let b = vec![(0, 0, one()), (0, 1, one())];
        let a = vec![(0, 0, one()), (1, 0, one())];
        let prod = compose_triples(&q, &b, &a);
        assert_eq!(prod.len(), 1);
        assert_eq!(prod[0], (0, 0, BigRational::from_integer(2.into())));
    }
}
