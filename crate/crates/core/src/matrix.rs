//! Dense matrices over a [`Field`].
//!
//! Index sets throughout the crate are zero-based and strictly increasing.
//! Exhaustive minor scans walk subsets by size, then lexicographically, so
//! any reported witness is the first one in that order.

use std::fmt;

use itertools::Itertools;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, Notation};

/// Default largest order accepted by exhaustive minor enumeration.
pub const DEFAULT_MINOR_CAP: usize = 8;

/// A k×n matrix over a finite field, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

/// A singular square submatrix: zero-based row and column index sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Minor {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Number of singular t×t minors for each t = 1..=n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCensus {
    pub singular_by_size: Vec<usize>,
    pub total_by_size: Vec<usize>,
}

impl MinorCensus {
    pub fn all_nonsingular(&self) -> bool {
        self.singular_by_size.iter().all(|&c| c == 0)
    }
}

impl FieldMatrix {
    pub fn new(field: &Field, rows: usize, cols: usize, data: Vec<Elem>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::DimensionMismatch("matrices must be at least 1x1".into()));
        }
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!("{} entries for a {rows}x{cols} matrix", data.len())));
        }
        for &e in &data {
            field.check(e)?;
        }
        Ok(FieldMatrix { field: field.clone(), rows, cols, data })
    }

    pub fn from_rows(field: &Field, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let k = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Self::new(field, k, n, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Elem) -> Self {
        assert!(rows > 0 && cols > 0, "matrices must be at least 1x1");
        let data = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).map(|(i, j)| f(i, j)).collect();
        FieldMatrix { field: field.clone(), rows, cols, data }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        Self::from_fn(field, n, n, |i, j| if i == j { Elem::ONE } else { Elem::ZERO })
    }

    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Self::from_fn(field, rows, cols, |_, _| Elem::ZERO)
    }

    pub fn diagonal(field: &Field, diag: &[Elem]) -> Self {
        Self::from_fn(field, diag.len(), diag.len(), |i, j| if i == j { diag[i] } else { Elem::ZERO })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    fn same_field(&self, other: &Self) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        Ok(Self::from_fn(f, self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Elem::ZERO, |acc, t| f.add(acc, f.mul(self.get(i, t), other.get(t, j))))
        }))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch("shapes differ".into()));
        }
        let f = &self.field;
        Ok(Self::from_fn(f, self.rows, self.cols, |i, j| f.add(self.get(i, j), other.get(i, j))))
    }

    pub fn scale(&self, c: Elem) -> Self {
        let f = &self.field;
        Self::from_fn(f, self.rows, self.cols, |i, j| f.mul(c, self.get(i, j)))
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self::from_fn(f, self.rows, self.cols, |i, j| f.neg(self.get(i, j)))
    }

    /// A^e for e >= 0 by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let mut result = Self::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(result)
    }

    /// [self | other].
    pub fn hstack(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("row counts differ".into()));
        }
        Ok(Self::from_fn(&self.field, self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                other.get(i, j - self.cols)
            }
        }))
    }

    /// self stacked above other.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("column counts differ".into()));
        }
        Ok(Self::from_fn(&self.field, self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.get(i, j)
            } else {
                other.get(i - self.rows, j)
            }
        }))
    }

    fn check_index_set(set: &[usize], bound: usize, what: &str) -> Result<()> {
        if set.is_empty() {
            return Err(Error::IndexOutOfRange(format!("empty {what} set")));
        }
        if set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::IndexOutOfRange(format!("{what} set {set:?} not strictly increasing")));
        }
        if set[set.len() - 1] >= bound {
            return Err(Error::IndexOutOfRange(format!("{what} set {set:?} exceeds {bound}")));
        }
        Ok(())
    }

    pub fn submatrix(&self, rowset: &[usize], colset: &[usize]) -> Result<Self> {
        Self::check_index_set(rowset, self.rows, "row")?;
        Self::check_index_set(colset, self.cols, "column")?;
        Ok(self.minor_unchecked(rowset, colset))
    }

    pub(crate) fn minor_unchecked(&self, rowset: &[usize], colset: &[usize]) -> Self {
        Self::from_fn(&self.field, rowset.len(), colset.len(), |i, j| self.get(rowset[i], colset[j]))
    }

    /// All rows, the given columns.
    pub fn select_columns(&self, colset: &[usize]) -> Result<Self> {
        Self::check_index_set(colset, self.cols, "column")?;
        let rows: Vec<usize> = (0..self.rows).collect();
        Ok(self.minor_unchecked(&rows, colset))
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, r);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in 0..m.cols {
                let v = f.mul(inv, m.get(r, j));
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.field, self.data.clone(), self.rows, self.cols)
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Elem> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(det_of(&self.field, self.data.clone(), self.rows))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        let aug = self.hstack(&Self::identity(&self.field, n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::Singular);
        }
        Ok(Self::from_fn(&self.field, n, n, |i, j| r.get(i, n + j)))
    }

    /// Basis of the right null space {v : self·v = 0}, one vector per row of
    /// the result; None when the null space is trivial.
    pub fn null_space(&self) -> Option<Self> {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        if free.is_empty() {
            return None;
        }
        let mut basis = Self::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, Elem::ONE);
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(pr, fc)));
            }
        }
        Some(basis)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..self.cols).all(|j| self.get(i, j) == if i == j { Elem::ONE } else { Elem::ZERO }))
    }

    /// A·A = I.
    pub fn is_involutory(&self) -> bool {
        self.is_square() && self.mul(self).map(|m| m.is_identity()).unwrap_or(false)
    }

    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j).is_zero()))
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if !self.is_square() {
            return Err(Error::NotSquare { rows: self.rows, cols: self.cols });
        }
        if self.rows > cap {
            return Err(Error::OrderTooLarge { order: self.rows, cap });
        }
        Ok(())
    }

    /// Whether every square submatrix is nonsingular. Returns the first
    /// singular minor (by size, then row set, then column set) on failure.
    pub fn all_square_submatrices_nonsingular(&self, cap: usize) -> Result<Option<Minor>> {
        self.check_cap(cap)?;
        let n = self.rows;
        for t in 1..=n {
            for rows in (0..n).combinations(t) {
                for cols in (0..n).combinations(t) {
                    if self.minor_det(&rows, &cols).is_zero() {
                        return Ok(Some(Minor { rows, cols }));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Full scan counting singular minors of every size.
    pub fn minor_census(&self, cap: usize) -> Result<MinorCensus> {
        self.check_cap(cap)?;
        let n = self.rows;
        let mut census = MinorCensus { singular_by_size: vec![0; n], total_by_size: vec![0; n] };
        for t in 1..=n {
            for rows in (0..n).combinations(t) {
                for cols in (0..n).combinations(t) {
                    census.total_by_size[t - 1] += 1;
                    if self.minor_det(&rows, &cols).is_zero() {
                        census.singular_by_size[t - 1] += 1;
                    }
                }
            }
        }
        Ok(census)
    }

    fn minor_det(&self, rows: &[usize], cols: &[usize]) -> Elem {
        let t = rows.len();
        let data = rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j))).collect();
        det_of(&self.field, data, t)
    }

    /// Rank of the submatrix made of the given columns (unchecked indices).
    pub(crate) fn column_rank(&self, cols: &[usize]) -> usize {
        let data = (0..self.rows).flat_map(|i| cols.iter().map(move |&j| self.get(i, j))).collect();
        rank_of(&self.field, data, self.rows, cols.len())
    }

    /// One row per line, entries whitespace-separated.
    pub fn to_text(&self, notation: Notation) -> String {
        let mut out = String::new();
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|&e| self.field.format(e, notation)).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the line-per-row text form, or a JSON array of arrays of
    /// element strings when the input starts with `[`.
    pub fn parse(field: &Field, text: &str) -> Result<Self> {
        let t = text.trim_start();
        if t.starts_with('[') {
            let v: Value = serde_json::from_str(t).map_err(|e| Error::Parse(e.to_string()))?;
            return Self::from_json(field, &v);
        }
        let rows = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| l.split_whitespace().map(|s| field.parse_element(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        if rows.is_empty() {
            return Err(Error::Parse("empty matrix".into()));
        }
        Self::from_rows(field, rows).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self, notation: Notation) -> Value {
        Value::Array(
            (0..self.rows)
                .map(|i| {
                    Value::Array(self.row(i).iter().map(|&e| Value::String(self.field.format(e, notation))).collect())
                })
                .collect(),
        )
    }

    pub fn from_json(field: &Field, v: &Value) -> Result<Self> {
        let bad = || Error::Parse("expected a JSON array of arrays of element strings".into());
        let rows = v
            .as_array()
            .ok_or_else(bad)?
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|e| field.parse_element(e.as_str().ok_or_else(bad)?))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(field, rows).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Debug for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FieldMatrix {}x{} over {}", self.rows, self.cols, self.field)?;
        write!(f, "{}", self.to_text(Notation::Power))
    }
}

fn det_of(f: &Field, mut m: Vec<Elem>, n: usize) -> Elem {
    let mut det = Elem::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i * n + c].is_zero()) else {
            return Elem::ZERO;
        };
        if p != c {
            for j in 0..n {
                m.swap(p * n + j, c * n + j);
            }
            det = f.neg(det);
        }
        let pivot = m[c * n + c];
        det = f.mul(det, pivot);
        let inv = f.inv(pivot).expect("pivot is nonzero");
        for i in c + 1..n {
            let factor = f.mul(m[i * n + c], inv);
            if factor.is_zero() {
                continue;
            }
            for j in c..n {
                m[i * n + j] = f.sub(m[i * n + j], f.mul(factor, m[c * n + j]));
            }
        }
    }
    det
}

fn rank_of(f: &Field, mut m: Vec<Elem>, rows: usize, cols: usize) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                m.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = f.inv(m[r * cols + c]).expect("pivot is nonzero");
        for i in r + 1..rows {
            let factor = f.mul(m[i * cols + c], inv);
            if factor.is_zero() {
                continue;
            }
            for j in c..cols {
                m[i * cols + j] = f.sub(m[i * cols + j], f.mul(factor, m[r * cols + j]));
            }
        }
        r += 1;
    }
    r
}
