use std::collections::BTreeMap;

use super::ring::{RingSpec, Scalar};
use crate::error::{Error, Result};

/// An immutable sparse matrix over a [`RingSpec`], stored column by column.
///
/// Each column is a list of `(row, value)` pairs sorted by row, with no
/// stored zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    ring: RingSpec,
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize, ring: RingSpec) -> Self {
        SparseMatrix {
            rows,
            cols,
            ring,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize, ring: RingSpec) -> Self {
        let columns = (0..n).map(|i| vec![(i, ring.one())]).collect();
        SparseMatrix {
            rows: n,
            cols: n,
            ring,
            columns,
        }
    }

    /// Builds a matrix from `(row, col, value)` triples. Repeated positions
    /// are summed; zero results are dropped.
    pub fn from_entries<I>(rows: usize, cols: usize, ring: RingSpec, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Scalar)>,
    {
        let mut acc: Vec<BTreeMap<usize, Scalar>> = vec![BTreeMap::new(); cols];
        for (r, c, v) in entries {
            if r >= rows || c >= cols {
                return Err(Error::IndexOutOfRange {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            if v.ring() != ring {
                return Err(Error::RingMismatch(v.ring(), ring));
            }
            let slot = acc[c].entry(r).or_insert_with(|| ring.zero());
            *slot = &*slot + &v;
        }
        let columns = acc
            .into_iter()
            .map(|col| col.into_iter().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        Ok(SparseMatrix {
            rows,
            cols,
            ring,
            columns,
        })
    }

    /// Builds a matrix from prepared columns. Each column may list a row more
    /// than once; duplicates are summed and zeros dropped.
    pub fn from_columns(
        rows: usize,
        ring: RingSpec,
        columns: Vec<Vec<(usize, Scalar)>>,
    ) -> Result<Self> {
        let cols = columns.len();
        let mut out = Vec::with_capacity(cols);
        for (c, mut col) in columns.into_iter().enumerate() {
            col.sort_by_key(|(r, _)| *r);
            let mut merged: Vec<(usize, Scalar)> = Vec::with_capacity(col.len());
            for (r, v) in col {
                if r >= rows {
                    return Err(Error::IndexOutOfRange {
                        row: r,
                        col: c,
                        rows,
                        cols,
                    });
                }
                if v.ring() != ring {
                    return Err(Error::RingMismatch(v.ring(), ring));
                }
                match merged.last_mut() {
                    Some((lr, lv)) if *lr == r => *lv = &*lv + &v,
                    _ => merged.push((r, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            out.push(merged);
        }
        Ok(SparseMatrix {
            rows,
            cols,
            ring,
            columns: out,
        })
    }

    /// Integer convenience constructor from dense rows.
    pub fn from_dense(ring: RingSpec, dense: &[Vec<i64>]) -> Result<Self> {
        let rows = dense.len();
        let cols = dense.first().map_or(0, |r| r.len());
        if dense.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged dense matrix".into()));
        }
        Self::from_entries(
            rows,
            cols,
            ring,
            dense.iter().enumerate().flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .map(move |(c, &v)| (r, c, ring.from_i64(v)))
            }),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> RingSpec {
        self.ring
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(usize, Scalar)] {
        &self.columns[c]
    }

    pub fn columns(&self) -> &[Vec<(usize, Scalar)>] {
        &self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        self.columns[c]
            .binary_search_by_key(&r, |(rr, _)| *rr)
            .map(|i| self.columns[c][i].1.clone())
            .unwrap_or_else(|_| self.ring.zero())
    }

    /// Iterates over `(row, col, value)` in column-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut columns: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.entries() {
            columns[r].push((c, v.clone()));
        }
        SparseMatrix {
            rows: self.cols,
            cols: self.rows,
            ring: self.ring,
            columns,
        }
    }

    /// The product `self · rhs`.
    pub fn mul(&self, rhs: &SparseMatrix) -> Result<SparseMatrix> {
        if self.ring != rhs.ring {
            return Err(Error::RingMismatch(self.ring, rhs.ring));
        }
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (k, b) in col {
                    for (r, a) in &self.columns[*k] {
                        let term = a * b;
                        acc.entry(*r)
                            .and_modify(|s| *s = &*s + &term)
                            .or_insert(term);
                    }
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Ok(SparseMatrix {
            rows: self.rows,
            cols: rhs.cols,
            ring: self.ring,
            columns,
        })
    }
}
