//! Exact rational matrices, dense and sparse.
//!
//! Everything here works over `BigRational`. Ranks are computed by
//! fraction-free (Bareiss) elimination on integer rows obtained by clearing
//! denominators; ordinary rational Gaussian elimination is kept alongside as an
//! independent route.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a rational as `p` or `p/q`.
pub fn fraction_string(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn parse_fraction(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Serializes a rational vector as a list of fraction strings.
pub fn serialize_fractions<S: serde::Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(fraction_string))
}

/// Scales a nonzero vector to coprime integer entries with positive leading entry.
pub fn normalize_integral(v: &mut [Q]) {
    let Some(lead) = v.iter().find(|x| !x.is_zero()).cloned() else {
        return;
    };
    let mut den = BigInt::one();
    for x in v.iter() {
        den = den.lcm(x.denom());
    }
    let mut g = BigInt::zero();
    for x in v.iter() {
        let n = x.numer() * (&den / x.denom());
        g = g.gcd(&n);
    }
    let mut factor = Q::new(den, g);
    if lead.is_negative() {
        factor = -factor;
    }
    for x in v.iter_mut() {
        *x = &*x * &factor;
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Q::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Q::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Q {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Q) {
        self.data[r * self.cols + c] = x;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn scale(&self, s: &Q) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: &Q, other: &QMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if s.is_zero() {
            return;
        }
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            if !y.is_zero() {
                *x += s * y;
            }
        }
    }

    /// Nonzero entries as `(row, col, value)`.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(k, x)| (k / self.cols, k % self.cols, x))
    }

    /// Rank over the rationals, fraction-free elimination.
    pub fn rank(&self) -> usize {
        rank_bareiss(self)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
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
            let inv = m.get(r, c).recip();
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in c..m.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &factor * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right kernel, each vector normalized to coprime integers.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Q::zero(); self.cols];
            v[free] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(row, free).clone();
            }
            normalize_integral(&mut v);
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Q::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

impl Index<(usize, usize)> for QMatrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        self.get(r, c)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(fraction_string).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl Add for &QMatrix {
    type Output = QMatrix;
    fn add(self, rhs: &QMatrix) -> QMatrix {
        let mut out = self.clone();
        out.add_scaled(&Q::one(), rhs);
        out
    }
}

impl Sub for &QMatrix {
    type Output = QMatrix;
    fn sub(self, rhs: &QMatrix) -> QMatrix {
        let mut out = self.clone();
        out.add_scaled(&-Q::one(), rhs);
        out
    }
}

impl Neg for &QMatrix {
    type Output = QMatrix;
    fn neg(self) -> QMatrix {
        self.scale(&-Q::one())
    }
}

impl Mul for &QMatrix {
    type Output = QMatrix;
    fn mul(self, rhs: &QMatrix) -> QMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = QMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        *out.entry_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }
}

/// Clears denominators row by row.
fn integer_rows(m: &QMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|r| {
            let row = m.row(r);
            let den = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter().map(|x| x.numer() * (&den / x.denom())).collect()
        })
        .collect()
}

/// Rank by fraction-free Bareiss elimination with row pivoting.
///
/// Every division below is exact: after each step the active entries are
/// minors of the integer matrix.
pub fn rank_bareiss(m: &QMatrix) -> usize {
    let mut a = integer_rows(m);
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pivot = &pivot_row[col];
        for row in rest.iter_mut() {
            let lead = std::mem::take(&mut row[col]);
            for c in col + 1..cols {
                let v = pivot * &row[c] - &lead * &pivot_row[c];
                row[c] = if prev.is_one() { v } else { v / &prev };
            }
        }
        prev = pivot.clone();
        rank += 1;
    }
    rank
}

/// Rank by ordinary Gaussian elimination over the rationals.
pub fn rank_gauss(m: &QMatrix) -> usize {
    let mut a: Vec<Vec<Q>> = (0..m.rows()).map(|r| m.row(r).to_vec()).collect();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(p, rank);
        let inv = a[rank][col].recip();
        for r in rank + 1..rows {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] * &inv;
            for c in col..cols {
                let v = &a[r][c] - &factor * &a[rank][c];
                a[r][c] = v;
            }
        }
        rank += 1;
    }
    rank
}

/// Sparse matrix stored by columns; column `j` is the image of basis vector `j`.
///
/// Entries in a column are sorted by row and never zero, so derived equality
/// is equality of matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    cols: Vec<Vec<(usize, Q)>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self {
            nrows,
            cols: vec![Vec::new(); ncols],
        }
    }

    /// Builds from columns given as arbitrary `(row, value)` lists; duplicates
    /// are summed and zeros dropped.
    pub fn from_columns(nrows: usize, cols: Vec<Vec<(usize, Q)>>) -> Self {
        let cols = cols
            .into_iter()
            .map(|col| {
                let mut acc: BTreeMap<usize, Q> = BTreeMap::new();
                for (r, v) in col {
                    assert!(r < nrows, "row index out of range");
                    *acc.entry(r).or_insert_with(Q::zero) += v;
                }
                acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
            })
            .collect();
        Self { nrows, cols }
    }

    pub fn from_dense(m: &QMatrix) -> Self {
        let mut cols = vec![Vec::new(); m.cols()];
        for (r, c, v) in m.nonzero_entries() {
            cols[c].push((r, v.clone()));
        }
        Self {
            nrows: m.rows(),
            cols,
        }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[(usize, Q)] {
        &self.cols[j]
    }

    pub fn get(&self, r: usize, c: usize) -> Q {
        self.cols[c]
            .binary_search_by_key(&r, |(row, _)| *row)
            .map(|k| self.cols[c][k].1.clone())
            .unwrap_or_else(|_| Q::zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut cols = vec![Vec::new(); self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        Self {
            nrows: self.ncols(),
            cols,
        }
    }

    pub fn scale(&self, s: &Q) -> Self {
        if s.is_zero() {
            return Self::zeros(self.nrows, self.ncols());
        }
        Self {
            nrows: self.nrows,
            cols: self
                .cols
                .iter()
                .map(|col| col.iter().map(|(r, v)| (*r, v * s)).collect())
                .collect(),
        }
    }

    pub fn mul_sparse(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), rhs.nrows, "dimension mismatch in product");
        let cols = rhs
            .cols
            .iter()
            .map(|col| {
                let mut acc: Vec<(usize, Q)> = Vec::new();
                for (k, b) in col {
                    for (i, a) in &self.cols[*k] {
                        acc.push((*i, a * b));
                    }
                }
                acc
            })
            .collect();
        SparseMatrix::from_columns(self.nrows, cols)
    }

    pub fn sub_sparse(&self, rhs: &SparseMatrix) -> SparseMatrix {
        assert_eq!((self.nrows, self.ncols()), (rhs.nrows, rhs.ncols()));
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| {
                a.iter()
                    .cloned()
                    .chain(b.iter().map(|(r, v)| (*r, -v.clone())))
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(self.nrows, cols)
    }

    /// `self * v` for a dense vector.
    pub fn apply(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(v.len(), self.ncols());
        let mut out = vec![Q::zero(); self.nrows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (r, a) in &self.cols[c] {
                out[*r] += a * x;
            }
        }
        out
    }

    /// `self * m`
    pub fn mul_dense(&self, m: &QMatrix) -> QMatrix {
        assert_eq!(self.ncols(), m.rows());
        let mut out = QMatrix::zeros(self.nrows, m.cols());
        for (k, col) in self.cols.iter().enumerate() {
            for (i, a) in col {
                for j in 0..m.cols() {
                    let b = m.get(k, j);
                    if !b.is_zero() {
                        *out.entry_mut(*i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    /// `m * self`
    pub fn left_mul_dense(&self, m: &QMatrix) -> QMatrix {
        assert_eq!(m.cols(), self.nrows);
        let mut out = QMatrix::zeros(m.rows(), self.ncols());
        for (j, col) in self.cols.iter().enumerate() {
            for (k, b) in col {
                for i in 0..m.rows() {
                    let a = m.get(i, *k);
                    if !a.is_zero() {
                        *out.entry_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn to_dense(&self) -> QMatrix {
        let mut m = QMatrix::zeros(self.nrows, self.ncols());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col {
                m.set(*r, c, v.clone());
            }
        }
        m
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Q)> {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    /// True iff the matrix is diagonal with the given diagonal.
    pub fn is_diagonal_with(&self, diag: &[Q]) -> bool {
        self.ncols() == diag.len()
            && self.cols.iter().enumerate().all(|(c, col)| match col.as_slice() {
                [] => diag[c].is_zero(),
                [(r, v)] => *r == c && *v == diag[c],
                _ => false,
            })
    }
}
