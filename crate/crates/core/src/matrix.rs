//! Exact dense matrices, the structured builders (Hankel, Toeplitz,
//! circulant, transposed Vandermonde), exact determinants and minors.
//!
//! Public index conventions follow the mathematics: row and column indices in
//! [`IndexTuple`]s are 1-based, sequence indices are arbitrary integers.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{format_ratio, IndexTuple, IntTuple, Ratio};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Ratio>,
}

impl ExactMatrix {
    /// Row-major construction.
    pub fn new(rows: usize, cols: usize, entries: Vec<Ratio>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::contract(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Ratio) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Ratio>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::contract("ragged rows"));
        }
        let n = rows.len();
        Ok(ExactMatrix {
            rows: n,
            cols,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Ratio::from_integer(v.into())).collect())
                .collect(),
        )
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| Ratio::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Ratio::one() } else { Ratio::zero() })
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

    pub fn entries(&self) -> &[Ratio] {
        &self.entries
    }

    /// 0-based access.
    pub fn get(&self, row: usize, col: usize) -> &Ratio {
        assert!(row < self.rows && col < self.cols, "({row},{col}) outside {}x{}", self.rows, self.cols);
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Ratio) {
        assert!(row < self.rows && col < self.cols);
        self.entries[row * self.cols + col] = value;
    }

    pub fn row(&self, row: usize) -> &[Ratio] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    /// Submatrix from 0-based row and column lists (any order, repeats allowed).
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        ExactMatrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Submatrix from 1-based index tuples, bounds-checked.
    pub fn submatrix(&self, rows: &IndexTuple, cols: &IndexTuple) -> Result<ExactMatrix> {
        check_within(rows, self.rows, "row")?;
        check_within(cols, self.cols, "column")?;
        let r: Vec<usize> = rows.indices().iter().map(|i| i - 1).collect();
        let c: Vec<usize> = cols.indices().iter().map(|j| j - 1).collect();
        Ok(self.select(&r, &c))
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn reverse_columns(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, self.cols - 1 - j).clone())
    }

    pub fn mul(&self, other: &ExactMatrix) -> Result<ExactMatrix> {
        if self.cols != other.rows {
            return Err(Error::contract(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(ExactMatrix::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols).fold(Ratio::zero(), |acc, l| acc + self.get(i, l) * other.get(l, j))
        }))
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<ExactMatrix> {
        if !self.is_square() {
            return Err(Error::contract("only square matrices have inverses"));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = ExactMatrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or_else(|| Error::Singular(format!("no pivot in column {}", col + 1)))?;
            a.swap_rows(col, pivot);
            inv.swap_rows(col, pivot);
            let scale = a.get(col, col).recip();
            a.scale_row(col, &scale);
            inv.scale_row(col, &scale);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let factor = a.get(r, col).clone();
                    a.sub_row_multiple(r, col, &factor);
                    inv.sub_row_multiple(r, col, &factor);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn scale_row(&mut self, row: usize, factor: &Ratio) {
        for j in 0..self.cols {
            let v = self.get(row, j) * factor;
            self.set(row, j, v);
        }
    }

    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Ratio) {
        for j in 0..self.cols {
            let v = self.get(target, j) - self.get(source, j) * factor;
            self.set(target, j, v);
        }
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_ratio).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn check_within(t: &IndexTuple, bound: usize, what: &str) -> Result<()> {
    match t.last() {
        Some(last) if last > bound => Err(Error::out_of_range(
            last as i64,
            format!("{what} index exceeds {bound}"),
        )),
        _ => Ok(()),
    }
}

/// Read access to a bi-infinite sequence that may only be defined on part of ℤ.
pub trait Sequence {
    fn value(&self, t: i64) -> Option<&Ratio>;

    /// The value at `t`, or an out-of-range error naming `t`.
    fn at(&self, t: i64) -> Result<&Ratio> {
        self.value(t)
            .ok_or_else(|| Error::out_of_range(t, "sequence index not covered by the supplied window"))
    }

    /// Checks that every index in `lo..=hi` is defined.
    fn require(&self, lo: i64, hi: i64) -> Result<()> {
        for t in lo..=hi {
            self.at(t)?;
        }
        Ok(())
    }
}

/// A finite stretch `g_offset, …, g_{offset+len-1}` of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceWindow {
    offset: i64,
    values: Vec<Ratio>,
}

impl SequenceWindow {
    pub fn new(offset: i64, values: Vec<Ratio>) -> Self {
        SequenceWindow { offset, values }
    }

    /// Window starting at index 1.
    pub fn from_one(values: Vec<Ratio>) -> Self {
        Self::new(1, values)
    }

    pub fn from_fn(offset: i64, len: usize, mut f: impl FnMut(i64) -> Ratio) -> Self {
        Self::new(offset, (0..len as i64).map(|i| f(offset + i)).collect())
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn values(&self) -> &[Ratio] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Last defined index.
    pub fn end(&self) -> i64 {
        self.offset + self.values.len() as i64 - 1
    }
}

impl Sequence for SequenceWindow {
    fn value(&self, t: i64) -> Option<&Ratio> {
        let i = t.checked_sub(self.offset)?;
        usize::try_from(i).ok().and_then(|i| self.values.get(i))
    }
}

/// A `T`-periodic sequence stored as `g_0, …, g_{T-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicSequence {
    values: Vec<Ratio>,
}

impl PeriodicSequence {
    pub fn new(values: Vec<Ratio>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::contract("period must be positive"));
        }
        Ok(PeriodicSequence { values })
    }

    pub fn period(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Ratio] {
        &self.values
    }

    /// The window `g_offset, …, g_{offset+len-1}` of the periodic extension.
    pub fn window(&self, offset: i64, len: usize) -> SequenceWindow {
        SequenceWindow::from_fn(offset, len, |t| self.value(t).unwrap().clone())
    }
}

impl Sequence for PeriodicSequence {
    fn value(&self, t: i64) -> Option<&Ratio> {
        let period = self.values.len() as i64;
        self.values.get(t.rem_euclid(period) as usize)
    }
}

/// `H^g(t, m, n)`: entry `(i, j)` (1-based) is `g_{t+i+j-2}`.
pub fn build_hankel<S: Sequence + ?Sized>(g: &S, t: i64, m: usize, n: usize) -> Result<ExactMatrix> {
    if m > 0 && n > 0 {
        g.require(t, t + (m + n) as i64 - 2)?;
    }
    Ok(ExactMatrix::from_fn(m, n, |i, j| g.value(t + (i + j) as i64).unwrap().clone()))
}

/// `T^g(t, m, n)`: entry `(i, j)` (1-based) is `g_{t+i-j}`.
pub fn build_toeplitz<S: Sequence + ?Sized>(g: &S, t: i64, m: usize, n: usize) -> Result<ExactMatrix> {
    if m > 0 && n > 0 {
        g.require(t - n as i64 + 1, t + m as i64 - 1)?;
    }
    Ok(ExactMatrix::from_fn(m, n, |i, j| g.value(t + i as i64 - j as i64).unwrap().clone()))
}

/// `C^g = T^g(0, T, T)`: entry `(i, j)` is `g_{(i-j) mod T}`.
pub fn build_circulant(g: &PeriodicSequence) -> ExactMatrix {
    let period = g.period();
    build_toeplitz(g, 0, period, period).expect("periodic sequences are defined everywhere")
}

/// Transposed Vandermonde matrix: `M x n`, entry `(i, j)` is `x_j^{i-1}`.
pub fn build_vandermonde(x: &[Ratio], m: usize) -> Result<ExactMatrix> {
    if m == 0 {
        return Err(Error::contract("Vandermonde length must be at least 1"));
    }
    Ok(ExactMatrix::from_fn(m, x.len(), |i, j| num_traits::pow(x[j].clone(), i)))
}

/// Exact determinant. Orders up to 3 use cofactor formulas; larger orders
/// clear row denominators and run fraction-free Bareiss elimination.
pub fn det_exact(x: &ExactMatrix) -> Result<Ratio> {
    if !x.is_square() {
        return Err(Error::contract(format!(
            "determinant of non-square {}x{} matrix",
            x.rows, x.cols
        )));
    }
    let e = |i: usize, j: usize| x.get(i, j);
    Ok(match x.rows {
        0 => Ratio::one(),
        1 => e(0, 0).clone(),
        2 => e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0),
        3 => {
            e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
                + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0))
        }
        _ => bareiss(x),
    })
}

fn bareiss(x: &ExactMatrix) -> Ratio {
    let n = x.rows;
    let mut scale = BigInt::one();
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let lcm = x.row(i).iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
            scale *= &lcm;
            x.row(i).iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
        })
        .collect();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ratio::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let det = Ratio::new(a[n - 1][n - 1].clone(), scale);
    if negate {
        -det
    } else {
        det
    }
}

/// `|X_{(rows, cols)}|` for 1-based index tuples of equal length.
pub fn minor(x: &ExactMatrix, rows: &IndexTuple, cols: &IndexTuple) -> Result<Ratio> {
    if rows.len() != cols.len() {
        return Err(Error::contract("row and column tuples differ in length"));
    }
    det_exact(&x.submatrix(rows, cols)?)
}

/// Determinant whose `j`-th column is `A[p_j+1 ..= p_j+r, q_j]`.
pub fn row_consecutive_minor(a: &ExactMatrix, p: &IntTuple, q: &IndexTuple) -> Result<Ratio> {
    let r = q.len();
    if p.len() != r {
        return Err(Error::contract("shift and column tuples differ in length"));
    }
    check_within(q, a.cols, "column")?;
    for &shift in p.values() {
        if shift < 0 {
            return Err(Error::out_of_range(shift + 1, "row block starts before row 1"));
        }
        if shift as usize + r > a.rows {
            return Err(Error::out_of_range(
                shift + r as i64,
                format!("row block exceeds {} rows", a.rows),
            ));
        }
    }
    let block = ExactMatrix::from_fn(r, r, |i, j| a.get(p.values()[j] as usize + i, q.indices()[j] - 1).clone());
    det_exact(&block)
}

/// `b^g_{(i_1, …, i_k)}`: the `k x k` determinant with entry `(row, j)` equal
/// to `g_{i_j + row - 1}`. Indices may be in any order.
pub fn consecutive_row_minor<S: Sequence + ?Sized>(g: &S, indices: &[i64]) -> Result<Ratio> {
    let k = indices.len();
    for &i in indices {
        g.require(i, i + k as i64 - 1)?;
    }
    let block = ExactMatrix::from_fn(k, k, |row, j| g.value(indices[j] + row as i64).unwrap().clone());
    det_exact(&block)
}

/// Lexicographic iterator over the strictly increasing `r`-tuples on `1..=n`.
#[derive(Debug, Clone)]
pub struct IndexTuples {
    n: usize,
    current: Option<Vec<usize>>,
}

impl IndexTuples {
    pub fn new(n: usize, r: usize) -> Result<Self> {
        if r > n {
            return Err(Error::contract(format!("cannot choose {r} of {n} indices")));
        }
        Ok(IndexTuples {
            n,
            current: Some((1..=r).collect()),
        })
    }
}

impl Iterator for IndexTuples {
    type Item = IndexTuple;

    fn next(&mut self) -> Option<IndexTuple> {
        let current = self.current.as_mut()?;
        let out = IndexTuple::new(current.clone()).expect("strictly increasing");
        let r = current.len();
        let mut i = r;
        loop {
            if i == 0 {
                self.current = None;
                break;
            }
            i -= 1;
            if current[i] < self.n - (r - 1 - i) {
                current[i] += 1;
                for l in i + 1..r {
                    current[l] = current[l - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// All `C(n, r)` strictly increasing `r`-tuples on `1..=n`, lexicographically.
pub fn enumerate_index_tuples(n: usize, r: usize) -> Result<Vec<IndexTuple>> {
    Ok(IndexTuples::new(n, r)?.collect())
}

pub fn binomial(n: usize, r: usize) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    (0..r).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, ratio};

    fn laplace(x: &ExactMatrix) -> Ratio {
        let n = x.rows();
        if n == 0 {
            return Ratio::one();
        }
        (0..n).fold(Ratio::zero(), |acc, j| {
            let rest: Vec<usize> = (0..n).filter(|&c| c != j).collect();
            let sub = x.select(&(1..n).collect::<Vec<_>>(), &rest);
            let term = x.get(0, j) * laplace(&sub);
            if j % 2 == 0 {
                acc + term
            } else {
                acc - term
            }
        })
    }

    #[test]
    fn hankel_builder() {
        let g = SequenceWindow::from_one(vec![int(1), int(2), int(3)]);
        assert_eq!(build_hankel(&g, 1, 2, 2).unwrap(), ExactMatrix::from_i64(&[&[1, 2], &[2, 3]]).unwrap());
        let g = SequenceWindow::from_one((1..=5).map(int).collect());
        let h = build_hankel(&g, 1, 2, 4).unwrap();
        assert_eq!(h, ExactMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 3, 4, 5]]).unwrap());
        let g = SequenceWindow::from_one(vec![int(-2), ratio(-1, 2), ratio(1, 4)]);
        let h = build_hankel(&g, 1, 2, 2).unwrap();
        assert_eq!(h.row(0), &[int(-2), ratio(-1, 2)]);
        assert_eq!(h.row(1), &[ratio(-1, 2), ratio(1, 4)]);
    }

    #[test]
    fn hankel_builder_reports_missing_index() {
        let g = SequenceWindow::from_one(vec![int(1), int(2), int(3)]);
        assert_eq!(
            build_hankel(&g, 1, 2, 3).unwrap_err(),
            Error::out_of_range(4, "sequence index not covered by the supplied window")
        );
        assert!(matches!(build_hankel(&g, 0, 1, 1), Err(Error::OutOfRange { index: 0, .. })));
    }

    #[test]
    fn toeplitz_builder() {
        // g_{-1} = 7, g_0 = 8, g_1 = 9
        let g = SequenceWindow::new(-1, vec![int(7), int(8), int(9)]);
        assert_eq!(build_toeplitz(&g, 0, 2, 2).unwrap(), ExactMatrix::from_i64(&[&[8, 7], &[9, 8]]).unwrap());
        assert!(build_toeplitz(&g, 1, 2, 2).is_err());
    }

    #[test]
    fn toeplitz_reversal_is_hankel() {
        let g = SequenceWindow::from_fn(-6, 20, |t| int(t * t - 3 * t + 1));
        let t = build_toeplitz(&g, 2, 3, 5).unwrap();
        assert_eq!(t.reverse_columns(), build_hankel(&g, 2 - 5 + 1, 3, 5).unwrap());
    }

    #[test]
    fn periodic_toeplitz_matches_display() {
        // g_0..g_3 = 10, 11, 12, 13 and g_4 = g_0.
        let g = PeriodicSequence::new((10..14).map(int).collect()).unwrap();
        let b = build_toeplitz(&g, 1, 3, 5).unwrap();
        let expect = ExactMatrix::from_i64(&[&[11, 10, 13, 12, 11], &[12, 11, 10, 13, 12], &[13, 12, 11, 10, 13]]).unwrap();
        assert_eq!(b, expect);
    }

    #[test]
    fn circulant_builder() {
        let g = PeriodicSequence::new(vec![int(5), int(6), int(7)]).unwrap();
        let c = build_circulant(&g);
        assert_eq!(c, ExactMatrix::from_i64(&[&[5, 7, 6], &[6, 5, 7], &[7, 6, 5]]).unwrap());
        assert_eq!(c, build_toeplitz(&g, 0, 3, 3).unwrap());
        let flat = PeriodicSequence::new(vec![ratio(2, 3), ratio(2, 3)]).unwrap();
        assert!(build_circulant(&flat).entries().iter().all(|v| *v == ratio(2, 3)));
    }

    #[test]
    fn vandermonde_builder() {
        let v = build_vandermonde(&[int(2)], 3).unwrap();
        assert_eq!(v, ExactMatrix::from_i64(&[&[1], &[2], &[4]]).unwrap());
        assert_eq!(build_vandermonde(&[int(1), int(1)], 2).unwrap(), ExactMatrix::from_i64(&[&[1, 1], &[1, 1]]).unwrap());
        let v = build_vandermonde(&[int(1), int(2), int(3)], 3).unwrap();
        assert_eq!(laplace(&v), int(2));
        assert_eq!(det_exact(&v).unwrap(), int(2));
        assert!(build_vandermonde(&[int(1)], 0).is_err());
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(det_exact(&ExactMatrix::from_i64(&[&[1, 2], &[3, 4]]).unwrap()).unwrap(), int(-2));
        assert_eq!(det_exact(&ExactMatrix::identity(4)).unwrap(), int(1));
        let m = ExactMatrix::from_rows(vec![vec![int(-2), ratio(-1, 2)], vec![ratio(-1, 2), ratio(1, 4)]]).unwrap();
        // ad - bc = -1/2 - 1/4
        assert_eq!(det_exact(&m).unwrap(), ratio(-3, 4));
        assert!(det_exact(&ExactMatrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn bareiss_needs_pivoting() {
        let m = ExactMatrix::from_i64(&[&[0, 1, 2, 3], &[1, 0, 4, 1], &[2, 3, 0, 5], &[1, 1, 1, 0]]).unwrap();
        assert_eq!(det_exact(&m).unwrap(), laplace(&m));
        let singular = ExactMatrix::from_i64(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, 0, 1], &[3, 0, 1, 1]]).unwrap();
        assert_eq!(det_exact(&singular).unwrap(), int(0));
    }

    #[test]
    fn minor_examples() {
        let x = ExactMatrix::from_i64(&[&[4, 2], &[3, 1]]).unwrap();
        let one = IndexTuple::run(1, 1);
        assert_eq!(minor(&x, &one, &one).unwrap(), int(4));
        // 3x3 circulant with g = (g0, g1, g2) = (2, 3, 5)
        let (g0, g1, g2) = (2, 3, 5);
        let c = build_circulant(&PeriodicSequence::new(vec![int(g0), int(g1), int(g2)]).unwrap());
        assert_eq!(minor(&c, &IndexTuple::run(1, 2), &IndexTuple::run(2, 2)).unwrap(), int(g2 * g2 - g0 * g1));
        assert_eq!(minor(&c, &IndexTuple::run(2, 2), &IndexTuple::run(1, 2)).unwrap(), int(g1 * g1 - g0 * g2));
        assert!(minor(&c, &IndexTuple::run(3, 2), &IndexTuple::run(1, 2)).is_err());
    }

    #[test]
    fn row_consecutive_minor_examples() {
        let a = ExactMatrix::from_fn(6, 3, |i, j| int((i * i + 3 * j + i * j) as i64 % 7 - 3));
        let zero = IntTuple(vec![0, 0, 0]);
        let cols = IndexTuple::run(1, 3);
        assert_eq!(row_consecutive_minor(&a, &zero, &cols).unwrap(), minor(&a, &cols, &cols).unwrap());
        assert!(row_consecutive_minor(&a, &IntTuple(vec![4, 0, 0]), &cols).is_err());
        assert!(row_consecutive_minor(&a, &IntTuple(vec![-1, 0, 0]), &cols).is_err());

        // On a Hankel matrix the row-consecutive minor is b^g of the shifted columns.
        let g = SequenceWindow::from_fn(1, 12, |t| int((t * t * 3 + t) % 11 - 5));
        let h = build_hankel(&g, 1, 6, 5).unwrap();
        let p = IntTuple(vec![2, 0, 1]);
        let q = IndexTuple::new(vec![1, 3, 4]).unwrap();
        let shifted = p.add(&q.to_int_tuple());
        assert_eq!(row_consecutive_minor(&h, &p, &q).unwrap(), consecutive_row_minor(&g, shifted.values()).unwrap());
    }

    #[test]
    fn index_tuple_enumeration() {
        let t = |v: &[usize]| IndexTuple::new(v.to_vec()).unwrap();
        assert_eq!(enumerate_index_tuples(3, 2).unwrap(), vec![t(&[1, 2]), t(&[1, 3]), t(&[2, 3])]);
        assert_eq!(enumerate_index_tuples(4, 4).unwrap(), vec![t(&[1, 2, 3, 4])]);
        assert_eq!(enumerate_index_tuples(5, 1).unwrap().len(), 5);
        assert_eq!(enumerate_index_tuples(3, 0).unwrap(), vec![t(&[])]);
        assert!(enumerate_index_tuples(2, 3).is_err());
        assert_eq!(enumerate_index_tuples(7, 3).unwrap().len() as u64, binomial(7, 3));
    }

    #[test]
    fn inverse_round_trip() {
        let m = ExactMatrix::from_rows(vec![
            vec![int(0), int(2), ratio(1, 3)],
            vec![int(1), int(-1), int(4)],
            vec![ratio(5, 2), int(0), int(1)],
        ])
        .unwrap();
        assert_eq!(m.mul(&m.inverse().unwrap()).unwrap(), ExactMatrix::identity(3));
        assert!(matches!(ExactMatrix::from_i64(&[&[1, 2], &[2, 4]]).unwrap().inverse(), Err(Error::Singular(_))));
    }
}
