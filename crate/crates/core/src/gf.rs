//! Prime-field arithmetic and dense matrices over `F_q`.
//!
//! Matrices store raw residues (`u16`) in row-major order together with the
//! field they live in. Row reduction always produces the unique reduced row
//! echelon form with zero rows stripped, so two matrices span the same row
//! space exactly when their reduced forms compare equal.
//!
//! Over `F_2` reduction runs on bit-packed rows; the result is identical to
//! the generic path.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A prime field `F_q` with `q < 2^16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeField {
    q: u16,
}

impl PrimeField {
    pub const BINARY: PrimeField = PrimeField { q: 2 };

    pub fn new(q: u64) -> Result<Self> {
        if q >= 1 << 16 || !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q: q as u16 })
    }

    pub fn order(&self) -> u16 {
        self.q
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        self.check(value)?;
        Ok(FieldElement {
            value: value as u16,
            field: *self,
        })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement {
            value: 0,
            field: *self,
        }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement {
            value: 1,
            field: *self,
        }
    }

    pub(crate) fn check(&self, value: u64) -> Result<()> {
        if value < self.q as u64 {
            Ok(())
        } else {
            Err(Error::EntryOutOfRange {
                value,
                modulus: self.q,
            })
        }
    }

    #[inline]
    pub(crate) fn add(&self, a: u16, b: u16) -> u16 {
        ((a as u32 + b as u32) % self.q as u32) as u16
    }

    #[inline]
    pub(crate) fn sub(&self, a: u16, b: u16) -> u16 {
        ((a as u32 + self.q as u32 - b as u32) % self.q as u32) as u16
    }

    #[inline]
    pub(crate) fn mul(&self, a: u16, b: u16) -> u16 {
        ((a as u32 * b as u32) % self.q as u32) as u16
    }

    #[inline]
    pub(crate) fn neg(&self, a: u16) -> u16 {
        self.sub(0, a)
    }

    /// Multiplicative inverse by Fermat's little theorem. `a` must be nonzero.
    pub(crate) fn inv(&self, a: u16) -> u16 {
        debug_assert!(a != 0);
        let q = self.q as u64;
        let mut base = a as u64 % q;
        let mut exp = q - 2;
        let mut acc = 1u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base % q;
            }
            base = base * base % q;
            exp >>= 1;
        }
        acc as u16
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.q)
    }
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a prime field. Mixing elements of different fields panics.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u16,
    field: PrimeField,
}

impl FieldElement {
    pub fn value(&self) -> u16 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn inverse(&self) -> Option<FieldElement> {
        (!self.is_zero()).then(|| FieldElement {
            value: self.field.inv(self.value),
            field: self.field,
        })
    }

    fn same_field(&self, other: &FieldElement) -> PrimeField {
        assert_eq!(self.field, other.field, "field elements from different fields");
        self.field
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        let field = self.same_field(&rhs);
        FieldElement {
            value: field.add(self.value, rhs.value),
            field,
        }
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        let field = self.same_field(&rhs);
        FieldElement {
            value: field.sub(self.value, rhs.value),
            field,
        }
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        let field = self.same_field(&rhs);
        FieldElement {
            value: field.mul(self.value, rhs.value),
            field,
        }
    }
}

impl Div for FieldElement {
    type Output = FieldElement;
    /// Panics on division by zero.
    fn div(self, rhs: Self) -> Self {
        let inv = rhs.inverse().expect("division by zero in prime field");
        self * inv
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> Self {
        FieldElement {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix<{}>({}x{})[", self.field, self.rows, self.cols)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for (c, v) in self.row(r).iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
        }
        write!(f, "]")
    }
}

impl Matrix {
    /// Builds a matrix from integer rows, each of length `cols`, with every
    /// entry in `[0, q)`.
    pub fn new<R, T>(field: PrimeField, cols: usize, rows: R) -> Result<Self>
    where
        R: IntoIterator<Item = T>,
        T: AsRef<[u64]>,
    {
        let mut data = Vec::new();
        let mut count = 0;
        for (r, row) in rows.into_iter().enumerate() {
            let row = row.as_ref();
            if row.len() != cols {
                return Err(Error::RaggedRow {
                    row: r,
                    expected: cols,
                    found: row.len(),
                });
            }
            for &v in row {
                field.check(v)?;
                data.push(v as u16);
            }
            count += 1;
        }
        Ok(Matrix {
            field,
            rows: count,
            cols,
            data,
        })
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub(crate) fn from_raw_rows(field: PrimeField, cols: usize, rows: &[Vec<u16>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            debug_assert_eq!(row.len(), cols);
            data.extend_from_slice(row);
        }
        Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[u16] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        FieldElement {
            value: self.data[r * self.cols + c],
            field: self.field,
        }
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u16]> + '_ {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        self.row_iter()
            .map(|row| row.iter().map(|&v| v as u64).collect())
            .collect()
    }

    /// Vertical concatenation `[self; other]`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.q,
                right: other.field.q,
            });
        }
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Reduced row echelon form with zero rows removed, and the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let reduced = if self.field.q == 2 {
            rref_binary(self)
        } else {
            rref_generic(self)
        };
        let rank = reduced.rows;
        (reduced, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Pivot columns of a matrix already in reduced row echelon form.
    pub(crate) fn pivot_columns(&self) -> Vec<usize> {
        self.row_iter()
            .filter_map(|row| row.iter().position(|&v| v != 0))
            .collect()
    }
}

/// Free-function form of [`Matrix::rref`].
pub fn rref(m: &Matrix) -> (Matrix, usize) {
    m.rref()
}

/// Rank of the vertical concatenation of `a` and `b`, i.e. the dimension of
/// the sum of their row spaces.
pub fn stack_rank(a: &Matrix, b: &Matrix) -> Result<usize> {
    Ok(a.stack(b)?.rank())
}

pub(crate) fn rref_generic(m: &Matrix) -> Matrix {
    let field = m.field;
    let cols = m.cols;
    let mut rows: Vec<Vec<u16>> = m.row_iter().map(|r| r.to_vec()).collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for v in rows[rank].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let factor = row[col];
            for (v, &p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *v = field.sub(*v, field.mul(factor, p));
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    Matrix::from_raw_rows(field, cols, &rows)
}

fn rref_binary(m: &Matrix) -> Matrix {
    let cols = m.cols;
    let words = cols.div_ceil(64).max(1);
    let mut rows: Vec<Vec<u64>> = m
        .row_iter()
        .map(|row| {
            let mut bits = vec![0u64; words];
            for (c, &v) in row.iter().enumerate() {
                if v != 0 {
                    bits[c / 64] |= 1 << (c % 64);
                }
            }
            bits
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let (w, mask) = (col / 64, 1u64 << (col % 64));
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][w] & mask != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] & mask != 0 {
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a ^= b;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    let unpacked: Vec<Vec<u16>> = rows
        .iter()
        .map(|bits| {
            (0..cols)
                .map(|c| ((bits[c / 64] >> (c % 64)) & 1) as u16)
                .collect()
        })
        .collect();
    Matrix::from_raw_rows(m.field, cols, &unpacked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f2() -> PrimeField {
        PrimeField::BINARY
    }

    fn unit(n: usize, i: usize) -> Vec<u64> {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        v
    }

    #[test]
    fn field_construction() {
        assert!(PrimeField::new(2).is_ok());
        assert!(PrimeField::new(65521).is_ok());
        assert_eq!(PrimeField::new(4), Err(Error::NotPrime(4)));
        assert_eq!(PrimeField::new(1), Err(Error::NotPrime(1)));
        assert_eq!(PrimeField::new(65537), Err(Error::NotPrime(65537)));
    }

    #[test]
    fn element_arithmetic() {
        let f7 = PrimeField::new(7).unwrap();
        let a = f7.element(3).unwrap();
        let b = f7.element(5).unwrap();
        assert_eq!((a + b).value(), 1);
        assert_eq!((a - b).value(), 5);
        assert_eq!((a * b).value(), 1);
        assert_eq!((a / b).value(), 2);
        assert_eq!((-a).value(), 4);
        assert_eq!(f7.zero().inverse(), None);
        for v in 1..7 {
            let x = f7.element(v).unwrap();
            assert_eq!(x * x.inverse().unwrap(), f7.one());
        }
        assert!(f7.element(7).is_err());
    }

    #[test]
    fn rref_identity() {
        let id = Matrix::identity(f2(), 3);
        let (r, rank) = rref(&id);
        assert_eq!(r, id);
        assert_eq!(rank, 3);
    }

    #[test]
    fn rref_duplicate_row() {
        let m = Matrix::new(f2(), 4, [unit(4, 1), unit(4, 1)]).unwrap();
        let (r, rank) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::new(f2(), 4, [unit(4, 1)]).unwrap());
    }

    #[test]
    fn rref_hand_elimination() {
        let m = Matrix::new(f2(), 3, [[1u64, 1, 0], [0, 1, 0]]).unwrap();
        let (r, rank) = rref(&m);
        assert_eq!(rank, 2);
        assert_eq!(r, Matrix::new(f2(), 3, [unit(3, 1), unit(3, 2)]).unwrap());
    }

    #[test]
    fn rref_empty() {
        let m = Matrix::zeros(f2(), 0, 5);
        assert_eq!(rref(&m).1, 0);
        let z = Matrix::zeros(PrimeField::new(3).unwrap(), 4, 5);
        let (r, rank) = rref(&z);
        assert_eq!(rank, 0);
        assert_eq!(r.rows(), 0);
    }

    #[test]
    fn rref_over_f5() {
        let f5 = PrimeField::new(5).unwrap();
        let m = Matrix::new(f5, 3, [[2u64, 4, 1], [1, 2, 3]]).unwrap();
        let (r, rank) = rref(&m);
        // 2*(1,2,3) = (2,4,1), so the rows are dependent.
        assert_eq!(rank, 1);
        assert_eq!(r, Matrix::new(f5, 3, [[1u64, 2, 3]]).unwrap());
    }

    #[test]
    fn stack_rank_examples() {
        let id = Matrix::identity(f2(), 2);
        assert_eq!(stack_rank(&id, &id).unwrap(), 2);
        let a = Matrix::new(f2(), 4, [unit(4, 1)]).unwrap();
        let b = Matrix::new(f2(), 4, [unit(4, 2)]).unwrap();
        assert_eq!(stack_rank(&a, &b).unwrap(), 2);
        let a = Matrix::new(f2(), 6, [unit(6, 1), unit(6, 2), unit(6, 3)]).unwrap();
        let b = Matrix::new(f2(), 6, [unit(6, 4), unit(6, 5), unit(6, 6)]).unwrap();
        assert_eq!(stack_rank(&a, &b).unwrap(), 6);
    }

    #[test]
    fn stack_rank_mismatch() {
        let a = Matrix::identity(f2(), 2);
        let b = Matrix::identity(f2(), 3);
        assert_eq!(
            stack_rank(&a, &b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        );
        let c = Matrix::identity(PrimeField::new(3).unwrap(), 2);
        assert!(matches!(
            stack_rank(&a, &c),
            Err(Error::FieldMismatch { .. })
        ));
    }

    #[test]
    fn ragged_input_rejected() {
        let err = Matrix::new(f2(), 3, [vec![1u64, 0, 0], vec![1, 0]]).unwrap_err();
        assert_eq!(
            err,
            Error::RaggedRow {
                row: 1,
                expected: 3,
                found: 2
            }
        );
    }

    fn matrix_strategy() -> impl Strategy<Value = Matrix> {
        (prop::sample::select(vec![2u64, 3, 5, 7]), 0usize..6, 1usize..7).prop_flat_map(
            |(q, rows, cols)| {
                prop::collection::vec(prop::collection::vec(0..q, cols), rows).prop_map(
                    move |data| Matrix::new(PrimeField::new(q).unwrap(), cols, data).unwrap(),
                )
            },
        )
    }

    fn binary_matrix_strategy() -> impl Strategy<Value = Matrix> {
        (0usize..8, 1usize..70).prop_flat_map(|(rows, cols)| {
            prop::collection::vec(prop::collection::vec(0..2u64, cols), rows)
                .prop_map(move |data| Matrix::new(f2(), cols, data).unwrap())
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in matrix_strategy()) {
            let (r, rank) = rref(&m);
            let (rr, rank2) = rref(&r);
            prop_assert_eq!(&rr, &r);
            prop_assert_eq!(rank, rank2);
            prop_assert!(rank <= m.rows().min(m.cols()));
        }

        #[test]
        fn rank_invariant_under_row_ops(m in matrix_strategy(), scale in 1u64..7) {
            let field = m.field();
            let s = (scale % field.order() as u64).max(1) as u16;
            let mut rows: Vec<Vec<u64>> = m.to_rows();
            rows.reverse();
            if let Some(first) = rows.first_mut() {
                for v in first.iter_mut() {
                    *v = field.mul(*v as u16, s) as u64;
                }
            }
            let permuted = Matrix::new(field, m.cols(), rows).unwrap();
            prop_assert_eq!(rref(&permuted), rref(&m));
        }

        #[test]
        fn stack_rank_bounds(a in matrix_strategy(), extra in prop::collection::vec(0u64..2, 0..30)) {
            let cols = a.cols();
            let rows: Vec<Vec<u64>> = extra
                .chunks(cols)
                .filter(|c| c.len() == cols)
                .map(|c| c.to_vec())
                .collect();
            let b = Matrix::new(a.field(), cols, rows).unwrap();
            let s = stack_rank(&a, &b).unwrap();
            prop_assert!(s >= a.rank().max(b.rank()));
            prop_assert!(s <= a.rank() + b.rank());
        }

        #[test]
        fn binary_fast_path_matches_generic(m in binary_matrix_strategy()) {
            prop_assert_eq!(rref_binary(&m), rref_generic(&m));
        }
    }
}
