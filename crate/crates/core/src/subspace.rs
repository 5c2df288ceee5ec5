//! Subspaces of `F_q^n` and the injection / subspace metrics.

use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::gf::{Matrix, PrimeField};

/// A subspace of `F_q^n`, stored as its reduced row echelon basis.
///
/// Two subspaces are equal exactly when they are the same set of vectors.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}^{}) ", self.dim(), self.field(), self.ambient())?;
        fmt::Debug::fmt(&self.basis, f)
    }
}

impl Subspace {
    /// Row space of `m`.
    pub fn from_matrix(m: &Matrix) -> Self {
        Subspace { basis: m.rref().0 }
    }

    /// Span of the given integer rows in `F_q^n`.
    pub fn span<R, T>(field: PrimeField, n: usize, rows: R) -> Result<Self>
    where
        R: IntoIterator<Item = T>,
        T: AsRef<[u64]>,
    {
        Ok(Self::from_matrix(&Matrix::new(field, n, rows)?))
    }

    pub fn zero(field: PrimeField, n: usize) -> Self {
        Subspace {
            basis: Matrix::zeros(field, 0, n),
        }
    }

    pub fn whole(field: PrimeField, n: usize) -> Self {
        Subspace {
            basis: Matrix::identity(field, n),
        }
    }

    /// Span of the standard basis vectors `e_i` for the given 1-based indices.
    pub fn standard(field: PrimeField, n: usize, indices: &[usize]) -> Result<Self> {
        let rows = indices
            .iter()
            .map(|&i| {
                if i == 0 || i > n {
                    return Err(Error::DimensionMismatch { left: n, right: i });
                }
                let mut v = vec![0u64; n];
                v[i - 1] = 1;
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::span(field, n, rows)
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> PrimeField {
        self.basis.field()
    }

    fn compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                left: self.field().order(),
                right: other.field().order(),
            });
        }
        if self.ambient() != other.ambient() {
            return Err(Error::DimensionMismatch {
                left: self.ambient(),
                right: other.ambient(),
            });
        }
        Ok(())
    }

    /// `U + V`.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        self.compatible(other)?;
        Ok(Self::from_matrix(&self.basis.stack(&other.basis)?))
    }

    /// `U + <v>` for a single vector of raw residues.
    pub fn extend(&self, v: &[u16]) -> Subspace {
        let row = Matrix::from_raw_rows(self.field(), self.ambient(), &[v.to_vec()]);
        Self::from_matrix(&self.basis.stack(&row).expect("same field and ambient"))
    }

    /// Whether the vector (raw residues, length `n`) lies in the subspace.
    pub fn contains_vector(&self, v: &[u16]) -> bool {
        debug_assert_eq!(v.len(), self.ambient());
        let field = self.field();
        let mut rest = v.to_vec();
        for (row, col) in self.basis.row_iter().zip(self.basis.pivot_columns()) {
            let c = rest[col];
            if c == 0 {
                continue;
            }
            for (x, &b) in rest.iter_mut().zip(row) {
                *x = field.sub(*x, field.mul(c, b));
            }
        }
        rest.iter().all(|&x| x == 0)
    }

    /// Whether `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.compatible(other)?;
        Ok(self.basis.row_iter().all(|row| other.contains_vector(row)))
    }

    /// Enumerates the Grassmannian of `k`-dimensional subspaces of `F_q^n`
    /// by walking every reduced row echelon shape.
    pub fn grassmannian(field: PrimeField, k: usize, n: usize) -> Vec<Subspace> {
        let q = field.order();
        let mut out = Vec::new();
        for pivots in (0..n).combinations(k) {
            // Free positions: row r, column c > pivots[r], c not a pivot.
            let free: Vec<(usize, usize)> = (0..k)
                .flat_map(|r| {
                    let pivots = &pivots;
                    (pivots[r] + 1..n)
                        .filter(move |c| !pivots.contains(c))
                        .map(move |c| (r, c))
                })
                .collect();
            let mut values = vec![0u16; free.len()];
            loop {
                let mut rows = vec![vec![0u16; n]; k];
                for (r, &p) in pivots.iter().enumerate() {
                    rows[r][p] = 1;
                }
                for (&(r, c), &v) in free.iter().zip(&values) {
                    rows[r][c] = v;
                }
                out.push(Subspace {
                    basis: Matrix::from_raw_rows(field, n, &rows),
                });
                // Odometer increment over the free entries.
                let mut i = 0;
                while i < values.len() {
                    values[i] += 1;
                    if values[i] < q {
                        break;
                    }
                    values[i] = 0;
                    i += 1;
                }
                if i == values.len() {
                    break;
                }
            }
        }
        out
    }
}

/// `dim(U + V)`.
pub fn dim_sum(u: &Subspace, v: &Subspace) -> Result<usize> {
    u.compatible(v)?;
    crate::gf::stack_rank(&u.basis, &v.basis)
}

/// `dim(U ∩ V)` by the modular law.
pub fn dim_intersection(u: &Subspace, v: &Subspace) -> Result<usize> {
    Ok(u.dim() + v.dim() - dim_sum(u, v)?)
}

/// `max(dim U, dim V) - dim(U ∩ V)`.
pub fn injection_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    Ok(u.dim().max(v.dim()) - dim_intersection(u, v)?)
}

/// `dim(U + V) - dim(U ∩ V)`.
pub fn subspace_distance(u: &Subspace, v: &Subspace) -> Result<usize> {
    let sum = dim_sum(u, v)?;
    Ok(sum - (u.dim() + v.dim() - sum))
}
