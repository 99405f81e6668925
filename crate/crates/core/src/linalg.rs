//! Exact linear algebra over the rationals: ranks, kernels, images,
//! cohomology of a two-step complex, and membership-in-image tests.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar; always stored reduced with positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// A sparse matrix over the rationals. Stored entries are nonzero.
///
/// A matrix with `rows` rows and `cols` columns represents a linear map from
/// a `cols`-dimensional space to a `rows`-dimensional one.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: usize) -> Self {
        SparseMatrix { rows, cols, entries: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = SparseMatrix::new(n, n);
        for i in 0..n {
            m.set(i, i, rat(1));
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, delta: &Rational) {
        let current = self.get(row, col);
        self.set(row, col, current + delta);
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries.get(&(row, col)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Rational::zero(); self.rows];
        for (&(r, c), val) in &self.entries {
            if !v[c].is_zero() {
                out[r] += val * &v[c];
            }
        }
        out
    }

    pub fn multiply(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut rhs_rows: Vec<Vec<(usize, &Rational)>> = vec![Vec::new(); rhs.rows];
        for (&(r, c), v) in &rhs.entries {
            rhs_rows[r].push((c, v));
        }
        let mut out = SparseMatrix::new(self.rows, rhs.cols);
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &rhs_rows[k] {
                out.add_to(i, j, &(a * b));
            }
        }
        Ok(out)
    }

    fn sparse_rows(&self) -> Vec<Vec<(usize, Rational)>> {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.rows];
        for (&(r, c), v) in &self.entries {
            rows[r].push((c, v.clone()));
        }
        rows
    }

    /// Exact rank over the rationals.
    ///
    /// Sparse elimination with a fill-reducing pivot choice (smallest row,
    /// then sparsest column); fully deterministic.
    pub fn rank(&self) -> usize {
        let mut live: Vec<Vec<(usize, Rational)>> =
            self.sparse_rows().into_iter().filter(|r| !r.is_empty()).collect();
        let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); self.cols];
        for (i, row) in live.iter().enumerate() {
            for &(c, _) in row {
                col_rows[c].insert(i);
            }
        }
        let mut retired = vec![false; live.len()];
        let mut rank = 0;
        loop {
            // pivot row: fewest entries, then lowest index
            let mut best: Option<(usize, usize)> = None;
            for (i, row) in live.iter().enumerate() {
                if retired[i] || row.is_empty() {
                    continue;
                }
                if best.map_or(true, |(nnz, _)| row.len() < nnz) {
                    best = Some((row.len(), i));
                }
            }
            let Some((_, pi)) = best else { break };
            // pivot column: fewest live occurrences, then lowest index
            let (pc, _) = live[pi]
                .iter()
                .map(|&(c, _)| (c, col_rows[c].len()))
                .min_by_key(|&(c, n)| (n, c))
                .expect("pivot row is nonempty");
            rank += 1;
            retired[pi] = true;
            let pivot_row = live[pi].clone();
            let pivot_val = pivot_row.iter().find(|&&(c, _)| c == pc).unwrap().1.clone();
            for &(c, _) in &pivot_row {
                col_rows[c].remove(&pi);
            }
            let targets: Vec<usize> = col_rows[pc].iter().copied().collect();
            for ti in targets {
                if retired[ti] {
                    continue;
                }
                let factor = {
                    let val = live[ti].iter().find(|&&(c, _)| c == pc).unwrap().1.clone();
                    val / &pivot_val
                };
                for &(c, _) in &live[ti] {
                    col_rows[c].remove(&ti);
                }
                live[ti] = row_subtract(&live[ti], &pivot_row, &factor);
                for &(c, _) in &live[ti] {
                    col_rows[c].insert(ti);
                }
            }
        }
        rank
    }

    /// Reduced row echelon form with the simplest deterministic pivoting:
    /// columns left to right, pivot in the first row with a nonzero entry.
    /// Returns the reduced dense rows and the pivot columns.
    fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut m: Vec<Vec<Rational>> = (0..self.rows).map(|_| vec![Rational::zero(); self.cols]).collect();
        for (&(r, c), v) in &self.entries {
            m[r][c] = v.clone();
        }
        let mut pivots = Vec::new();
        let mut next_row = 0;
        for col in 0..self.cols {
            let Some(pr) = (next_row..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(next_row, pr);
            let inv = m[next_row][col].clone();
            for x in m[next_row].iter_mut() {
                if !x.is_zero() {
                    *x /= &inv;
                }
            }
            for r in 0..self.rows {
                if r != next_row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    let pivot_row = m[next_row].clone();
                    for (x, p) in m[r].iter_mut().zip(pivot_row.iter()) {
                        if !p.is_zero() {
                            *x -= &f * p;
                        }
                    }
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == self.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Basis of the kernel, one vector per free column, in column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (m, pivots) = self.rref();
        let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = rat(1);
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][free].clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Basis of the column span: the original columns sitting at pivot
    /// positions of the reduced form.
    pub fn image_basis(&self) -> Vec<Vec<Rational>> {
        let (_, pivots) = self.rref();
        pivots
            .into_iter()
            .map(|c| {
                let mut v = vec![Rational::zero(); self.rows];
                for (&(r, cc), val) in &self.entries {
                    if cc == c {
                        v[r] = val.clone();
                    }
                }
                v
            })
            .collect()
    }

    /// Whether `v` lies in the column span.
    pub fn in_image(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.rows, "vector length must equal row count");
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        let mut aug = SparseMatrix::new(self.rows, self.cols + 1);
        for (&(r, c), val) in &self.entries {
            aug.set(r, c, val.clone());
        }
        for (r, x) in v.iter().enumerate() {
            if !x.is_zero() {
                aug.set(r, self.cols, x.clone());
            }
        }
        aug.rank() == self.rank()
    }
}

fn row_subtract(
    row: &[(usize, Rational)],
    pivot: &[(usize, Rational)],
    factor: &Rational,
) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(row.len() + pivot.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < pivot.len() {
        if j == pivot.len() || (i < row.len() && row[i].0 < pivot[j].0) {
            out.push(row[i].clone());
            i += 1;
        } else if i == row.len() || pivot[j].0 < row[i].0 {
            let v = -factor * &pivot[j].1;
            if !v.is_zero() {
                out.push((pivot[j].0, v));
            }
            j += 1;
        } else {
            let v = &row[i].1 - factor * &pivot[j].1;
            if !v.is_zero() {
                out.push((row[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Cohomology of the two-step complex `· --d_in--> · --d_out--> ·` at the
/// middle spot: dimension and representative cocycles (kernel vectors
/// completing an image basis).
pub fn cohomology_at(
    d_in: &SparseMatrix,
    d_out: &SparseMatrix,
) -> Result<(usize, Vec<Vec<Rational>>)> {
    if d_in.rows() != d_out.cols() {
        return Err(Error::DimensionMismatch(format!(
            "d_in maps into dimension {} but d_out consumes dimension {}",
            d_in.rows(),
            d_out.cols()
        )));
    }
    let composite = d_out.multiply(d_in)?;
    if let Some((&(row, col), _)) = composite.entries().next() {
        return Err(Error::NotAComplex { row, col });
    }

    let kernel = d_out.kernel_basis();
    let mut reducer = EchelonReducer::new(d_in.rows());
    for col in d_in.image_basis() {
        reducer.insert(col);
    }
    let mut reps = Vec::new();
    for k in &kernel {
        if reducer.insert(k.clone()) {
            reps.push(k.clone());
        }
    }
    let dimension = kernel.len() - d_in.rank();
    debug_assert_eq!(reps.len(), dimension);
    Ok((dimension, reps))
}

/// Incremental echelon form used to extend a basis deterministically.
struct EchelonReducer {
    dim: usize,
    rows: Vec<(usize, Vec<Rational>)>,
}

impl EchelonReducer {
    fn new(dim: usize) -> Self {
        EchelonReducer { dim, rows: Vec::new() }
    }

    /// Reduces `v` against the current rows; if a nonzero residual remains it
    /// joins the echelon and `true` is returned.
    fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.dim);
        for (lead, row) in &self.rows {
            if !v[*lead].is_zero() {
                let f = v[*lead].clone();
                for (x, r) in v.iter_mut().zip(row.iter()) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[lead].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &inv;
            }
        }
        self.rows.push((lead, v));
        true
    }
}

/// Pretty-printer for rationals in reports.
pub fn rational_to_string(x: &Rational) -> String {
    if x.denom() == &num::BigInt::from(1) {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn is_negative(x: &Rational) -> bool {
    x.is_negative()
}
