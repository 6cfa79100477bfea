//! Exact sparse linear algebra over the rationals.
//!
//! Rank and membership use fraction-free elimination on primitive integer
//! rows: each incoming row is cleared of denominators, reduced against the
//! stored pivots by cross-multiplication, and divided by the gcd of its
//! entries. When two rows compete for the same pivot column the sparser one
//! keeps the slot. Kernels, solves and subspace canonical forms go through
//! the reduced row echelon form derived from that integer echelon.

mod subspace;

pub use subspace::Subspace;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::{to_compact, Rational};

/// Sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self { entries: vec![(i, Rational::one())] }
    }

    /// Builds from arbitrary pairs; duplicate indices are summed.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut map: BTreeMap<usize, Rational> = BTreeMap::new();
        for (i, v) in pairs {
            *map.entry(i).or_insert_with(Rational::zero) += v;
        }
        Self {
            entries: map.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
        }
    }

    pub fn from_dense(values: &[Rational]) -> Self {
        Self {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }

    pub fn get(&self, i: usize) -> Rational {
        match self.entries.binary_search_by_key(&i, |(j, _)| *j) {
            Ok(pos) => self.entries[pos].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(i, v)| (*i, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(i, _)| *i)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self {
            entries: self.entries.iter().map(|(i, v)| (*i, v * c)).collect(),
        }
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &Self, c: &Rational) -> Self {
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        let (mut a, mut b) = (self.entries.iter().peekable(), other.entries.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((i, x)), Some((j, y))) => {
                    if i < j {
                        out.push((*i, x.clone()));
                        a.next();
                    } else if j < i {
                        out.push((*j, y * c));
                        b.next();
                    } else {
                        let s = x + y * c;
                        if !s.is_zero() {
                            out.push((*i, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((i, x)), None) => {
                    out.push((*i, x.clone()));
                    a.next();
                }
                (None, Some((j, y))) => {
                    out.push((*j, y * c));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Self { entries: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_scaled(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_scaled(other, &-Rational::one())
    }

    pub fn dot(&self, other: &Self) -> Rational {
        let mut acc = Rational::zero();
        for (i, v) in &self.entries {
            let w = other.get(*i);
            if !w.is_zero() {
                acc += v * w;
            }
        }
        acc
    }

    /// Keeps only entries whose index passes `keep`.
    pub fn filter(&self, keep: impl Fn(usize) -> bool) -> Self {
        Self {
            entries: self.entries.iter().filter(|(i, _)| keep(*i)).cloned().collect(),
        }
    }

    /// Relabels indices through `map` (must be strictly increasing on the support).
    pub fn remap(&self, map: impl Fn(usize) -> Option<usize>) -> Self {
        Self::from_pairs(
            self.entries
                .iter()
                .filter_map(|(i, v)| map(*i).map(|j| (j, v.clone()))),
        )
    }
}

/// Sparse matrix stored column by column.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        Self { nrows, ncols, cols: vec![SparseVec::new(); ncols] }
    }

    pub fn identity(n: usize) -> Self {
        Self { nrows: n, ncols: n, cols: (0..n).map(SparseVec::unit).collect() }
    }

    pub fn from_columns(nrows: usize, cols: Vec<SparseVec>) -> Self {
        debug_assert!(cols.iter().all(|c| c.max_index().is_none_or(|i| i < nrows)));
        Self { nrows, ncols: cols.len(), cols }
    }

    pub fn from_triplets<I>(nrows: usize, ncols: usize, triplets: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut per_col: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); ncols];
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "triplet ({r},{c}) out of bounds");
            per_col[c].push((r, v));
        }
        Self {
            nrows,
            ncols,
            cols: per_col.into_iter().map(SparseVec::from_pairs).collect(),
        }
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        Self::from_triplets(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(r, row)| {
                row.iter().enumerate().map(move |(c, v)| (r, c, v.clone()))
            }),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        self.cols[c].get(r)
    }

    pub fn column(&self, c: usize) -> &SparseVec {
        &self.cols[c]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); self.nrows];
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col.iter() {
                rows[r].push((c, v.clone()));
            }
        }
        Self {
            nrows: self.ncols,
            ncols: self.nrows,
            cols: rows.into_iter().map(|e| SparseVec { entries: e }).collect(),
        }
    }

    /// Row vectors (length `ncols`).
    pub fn rows(&self) -> Vec<SparseVec> {
        self.transpose().cols
    }

    pub fn mul_vec(&self, x: &SparseVec) -> SparseVec {
        let mut acc = SparseVec::new();
        for (c, v) in x.iter() {
            acc = acc.add_scaled(&self.cols[c], v);
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.ncols, other.nrows, "inner dimensions differ");
        Self {
            nrows: self.nrows,
            ncols: other.ncols,
            cols: other.cols.iter().map(|c| self.mul_vec(c)).collect(),
        }
    }

    /// Columns restricted to the given row subset, renumbered in order.
    pub fn select_rows(&self, keep: &[usize]) -> Self {
        let mut map = vec![None; self.nrows];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        Self {
            nrows: keep.len(),
            ncols: self.ncols,
            cols: self.cols.iter().map(|c| c.remap(|i| map[i])).collect(),
        }
    }

    pub fn select_columns(&self, keep: &[usize]) -> Self {
        Self {
            nrows: self.nrows,
            ncols: keep.len(),
            cols: keep.iter().map(|&c| self.cols[c].clone()).collect(),
        }
    }

    /// Matrix-market style coordinate dump, for debugging.
    pub fn to_matrix_market(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "%%MatrixMarket matrix coordinate rational general");
        let _ = writeln!(out, "{} {} {}", self.nrows, self.ncols, self.nnz());
        for (c, col) in self.cols.iter().enumerate() {
            for (r, v) in col.iter() {
                let _ = writeln!(out, "{} {} {}", r + 1, c + 1, to_compact(v));
            }
        }
        out
    }
}

type IntRow = Vec<(usize, BigInt)>;

fn primitive(mut row: IntRow) -> IntRow {
    let mut g = BigInt::zero();
    for (_, v) in &row {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if row.first().is_some_and(|(_, v)| v.is_negative()) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
    row
}

fn to_int_row(v: &SparseVec) -> IntRow {
    let mut lcm = BigInt::one();
    for (_, x) in v.iter() {
        lcm = lcm.lcm(x.denom());
    }
    primitive(
        v.iter()
            .map(|(i, x)| (i, (x.numer() * &lcm) / x.denom()))
            .collect(),
    )
}

/// `a_lead * b - b_lead * a`, which clears the shared leading column.
fn eliminate(pivot: &IntRow, row: &IntRow) -> IntRow {
    let p = &pivot[0].1;
    let r = &row[0].1;
    let mut out = Vec::with_capacity(pivot.len() + row.len());
    let (mut a, mut b) = (pivot.iter().skip(1).peekable(), row.iter().skip(1).peekable());
    loop {
        match (a.peek(), b.peek()) {
            (Some((i, x)), Some((j, y))) => {
                if i < j {
                    out.push((*i, -(r * x)));
                    a.next();
                } else if j < i {
                    out.push((*j, p * y));
                    b.next();
                } else {
                    let s = p * y - r * x;
                    if !s.is_zero() {
                        out.push((*i, s));
                    }
                    a.next();
                    b.next();
                }
            }
            (Some((i, x)), None) => {
                out.push((*i, -(r * x)));
                a.next();
            }
            (None, Some((j, y))) => {
                out.push((*j, p * y));
                b.next();
            }
            (None, None) => break,
        }
    }
    primitive(out)
}

/// Incremental fraction-free row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    ambient: usize,
    pivots: BTreeMap<usize, IntRow>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Self { ambient, pivots: BTreeMap::new() }
    }

    pub fn from_vectors<'a, I: IntoIterator<Item = &'a SparseVec>>(ambient: usize, vectors: I) -> Self {
        let mut rows: Vec<IntRow> = vectors.into_iter().map(to_int_row).collect();
        // sparse rows first: they make better pivots
        rows.sort_by_key(Vec::len);
        let mut e = Self::new(ambient);
        for r in rows {
            e.insert_int(r);
        }
        e
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    /// Returns true when the vector was independent of the rows so far.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        debug_assert!(v.max_index().is_none_or(|i| i < self.ambient));
        self.insert_int(to_int_row(v))
    }

    fn insert_int(&mut self, mut row: IntRow) -> bool {
        while let Some(&(lead, _)) = row.first() {
            match self.pivots.get_mut(&lead) {
                Some(pivot) => {
                    if row.len() < pivot.len() {
                        std::mem::swap(pivot, &mut row);
                    }
                    row = eliminate(pivot, &row);
                }
                None => {
                    self.pivots.insert(lead, row);
                    return true;
                }
            }
        }
        false
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        let mut row = to_int_row(v);
        while let Some(&(lead, _)) = row.first() {
            match self.pivots.get(&lead) {
                Some(pivot) => row = eliminate(pivot, &row),
                None => return false,
            }
        }
        true
    }

    /// Reduced row echelon basis: leading entry 1, pivot columns cleared elsewhere.
    pub fn rref(&self) -> Vec<SparseVec> {
        let mut rows: Vec<(usize, SparseVec)> = self
            .pivots
            .iter()
            .map(|(&c, row)| {
                let lead = Rational::from_integer(row[0].1.clone());
                let v = SparseVec {
                    entries: row
                        .iter()
                        .map(|(i, x)| (*i, Rational::from_integer(x.clone()) / &lead))
                        .collect(),
                };
                (c, v)
            })
            .collect();
        for i in (0..rows.len()).rev() {
            let (c, pivot_row) = (rows[i].0, rows[i].1.clone());
            for row in rows.iter_mut().take(i) {
                let x = row.1.get(c);
                if !x.is_zero() {
                    row.1 = row.1.add_scaled(&pivot_row, &-x);
                }
            }
        }
        rows.into_iter().map(|(_, v)| v).collect()
    }
}

pub fn rank(m: &SparseMatrix) -> usize {
    // column rank; columns are vectors of length nrows
    Echelon::from_vectors(m.nrows(), m.columns()).rank()
}

/// Canonical (reduced echelon, leading-1) basis of the null space.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVec> {
    let n = m.ncols();
    let rows = m.rows();
    let rref = Echelon::from_vectors(n, &rows).rref();
    let pivot_cols: Vec<usize> = rref.iter().map(|r| r.leading().unwrap().0).collect();
    let mut is_pivot = vec![false; n];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let raw: Vec<SparseVec> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut pairs = vec![(f, Rational::one())];
            for (row, &pc) in rref.iter().zip(&pivot_cols) {
                let x = row.get(f);
                if !x.is_zero() {
                    pairs.push((pc, -x));
                }
            }
            SparseVec::from_pairs(pairs)
        })
        .collect();
    Echelon::from_vectors(n, &raw).rref()
}

/// Some `x` with `m x = b`, verified by substitution, or `None` if inconsistent.
pub fn solve(m: &SparseMatrix, b: &SparseVec) -> Option<SparseVec> {
    let n = m.ncols();
    if b.max_index().is_some_and(|i| i >= m.nrows()) {
        return None;
    }
    let mut rows = m.rows();
    for (r, v) in b.iter() {
        rows[r] = rows[r].add(&SparseVec { entries: vec![(n, v.clone())] });
    }
    let rref = Echelon::from_vectors(n + 1, &rows).rref();
    let mut x = Vec::new();
    for row in &rref {
        let (lead, _) = row.leading().unwrap();
        if lead == n {
            return None;
        }
        let rhs = row.get(n);
        if !rhs.is_zero() {
            x.push((lead, rhs));
        }
    }
    let x = SparseVec::from_pairs(x);
    (m.mul_vec(&x) == *b).then_some(x)
}
