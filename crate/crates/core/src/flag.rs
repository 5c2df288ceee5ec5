//! Flags of constant type, the flag distance, and distance vectors.
//!
//! Positions inside a flag are 1-based throughout the public API: the
//! `i`-th subspace of a flag is `flag.subspace(i)`, distance-vector
//! components are `δ_1, …, δ_r`, and collapse points are reported as
//! 1-based indices.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::bijection::validate_distance_vector;
use crate::error::{Error, Result};
use crate::gf::{Matrix, PrimeField};
use crate::subspace::{injection_distance, Subspace};

/// Strictly increasing list of dimensions `0 < t_1 < … < t_r < n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TypeVector {
    dims: Vec<usize>,
    ambient: usize,
}

impl TypeVector {
    pub fn new(dims: Vec<usize>, ambient: usize) -> Result<Self> {
        let invalid = |reason| Error::InvalidType {
            dims: dims.clone(),
            ambient,
            reason,
        };
        if dims.is_empty() {
            return Err(invalid("a flag needs at least one subspace"));
        }
        if dims[0] == 0 {
            return Err(invalid("dimensions must be positive"));
        }
        if *dims.last().unwrap() >= ambient {
            return Err(invalid("dimensions must be below the ambient dimension"));
        }
        if dims.windows(2).any(|w| w[0] >= w[1]) {
            return Err(invalid("dimensions must be strictly increasing"));
        }
        Ok(TypeVector { dims, ambient })
    }

    /// The full type `(1, 2, …, n − 1)`; needs `n ≥ 2`.
    pub fn full(n: usize) -> Result<Self> {
        Self::new((1..n).collect(), n)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dims.len() + 1 == self.ambient
    }
}

impl fmt::Display for TypeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// A flag `F_1 ⊊ F_2 ⊊ … ⊊ F_r` of subspaces of `F_q^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flag {
    type_vector: TypeVector,
    subspaces: Vec<Subspace>,
}

impl Flag {
    /// Checks dimensions against `type_vector` and strict nesting.
    pub fn new(type_vector: TypeVector, subspaces: Vec<Subspace>) -> Result<Self> {
        if subspaces.len() != type_vector.len() {
            return Err(Error::TypeMismatch {
                left: type_vector.dims().to_vec(),
                right: subspaces.iter().map(Subspace::dim).collect(),
            });
        }
        let field = subspaces[0].field();
        for (i, (s, &t)) in subspaces.iter().zip(type_vector.dims()).enumerate() {
            if s.ambient() != type_vector.ambient() {
                return Err(Error::DimensionMismatch {
                    left: type_vector.ambient(),
                    right: s.ambient(),
                });
            }
            if s.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.order(),
                    right: s.field().order(),
                });
            }
            if s.dim() != t {
                return Err(Error::WrongDimension {
                    index: i + 1,
                    expected: t,
                    found: s.dim(),
                });
            }
        }
        for (i, pair) in subspaces.windows(2).enumerate() {
            if !pair[0].is_subspace_of(&pair[1])? {
                return Err(Error::NotNested { index: i + 1 });
            }
        }
        Ok(Flag {
            type_vector,
            subspaces,
        })
    }

    /// Infers the type from the subspace dimensions.
    pub fn from_subspaces(subspaces: Vec<Subspace>) -> Result<Self> {
        let n = subspaces.first().map(Subspace::ambient).unwrap_or(0);
        let tv = TypeVector::new(subspaces.iter().map(Subspace::dim).collect(), n)?;
        Self::new(tv, subspaces)
    }

    /// Full flag whose `i`-th subspace is spanned by the first `i` rows of an
    /// `(n − 1) × n` matrix.
    pub fn from_adapted_basis(basis: &Matrix) -> Result<Self> {
        let n = basis.cols();
        let tv = TypeVector::full(n)?;
        if basis.rows() != n - 1 {
            return Err(Error::WrongDimension {
                index: n - 1,
                expected: n - 1,
                found: basis.rows(),
            });
        }
        let rows: Vec<Vec<u64>> = basis.to_rows();
        let subspaces = (1..n)
            .map(|i| Subspace::span(basis.field(), n, &rows[..i]))
            .collect::<Result<Vec<_>>>()?;
        Self::new(tv, subspaces)
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.type_vector
    }

    pub fn subspaces(&self) -> &[Subspace] {
        &self.subspaces
    }

    /// The `i`-th subspace, 1-based.
    pub fn subspace(&self, i: usize) -> &Subspace {
        &self.subspaces[i - 1]
    }

    pub fn ambient(&self) -> usize {
        self.type_vector.ambient()
    }

    pub fn field(&self) -> PrimeField {
        self.subspaces[0].field()
    }

    pub fn is_full(&self) -> bool {
        self.type_vector.is_full()
    }

    /// All full flags of `F_q^n`. Grows like the `q`-factorial of `n`; meant
    /// for brute-force checks at tiny sizes.
    pub fn enumerate_full(field: PrimeField, n: usize) -> Result<Vec<Flag>> {
        let tv = TypeVector::full(n)?;
        let points = Subspace::grassmannian(field, 1, n);
        let mut chains: Vec<Vec<Subspace>> = vec![vec![]];
        for _ in 1..n {
            let mut next = Vec::new();
            for chain in chains {
                let last = chain.last().cloned().unwrap_or_else(|| Subspace::zero(field, n));
                let mut seen = HashSet::new();
                for p in &points {
                    let v = p.basis().row(0);
                    if last.contains_vector(v) {
                        continue;
                    }
                    let grown = last.extend(v);
                    if seen.insert(grown.clone()) {
                        let mut c = chain.clone();
                        c.push(grown);
                        next.push(c);
                    }
                }
            }
            chains = next;
        }
        chains
            .into_iter()
            .map(|c| Flag::new(tv.clone(), c))
            .collect()
    }
}

/// A distance vector `(δ_1, …, δ_{n−1})` of a pair of full flags on `F_q^n`.
///
/// With `δ_0 = δ_n = 0`, consecutive entries differ by at most one. Build
/// one with [`DistanceVector::new`] or
/// [`validate_distance_vector`](crate::bijection::validate_distance_vector).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DistanceVector {
    n: usize,
    components: Vec<usize>,
}

impl DistanceVector {
    pub fn new(components: &[i64], n: usize) -> Result<Self> {
        validate_distance_vector(components, n)
    }

    pub(crate) fn from_checked(components: Vec<usize>, n: usize) -> Self {
        DistanceVector { n, components }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[usize] {
        &self.components
    }

    /// The flag distance `Σ δ_i`.
    pub fn total(&self) -> usize {
        self.components.iter().sum()
    }

    pub fn is_zero_free(&self) -> bool {
        self.components.iter().all(|&d| d > 0)
    }

    /// `δ_i` with the boundary convention `δ_0 = δ_n = 0`.
    pub fn get(&self, i: usize) -> usize {
        if i == 0 || i >= self.n {
            0
        } else {
            self.components[i - 1]
        }
    }
}

impl fmt::Display for DistanceVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_components(f, &self.components)
    }
}

pub(crate) fn write_components(f: &mut impl fmt::Write, components: &[usize]) -> fmt::Result {
    for (i, d) in components.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{d}")?;
    }
    Ok(())
}

fn check_same_type(f: &Flag, g: &Flag) -> Result<()> {
    if f.type_vector != g.type_vector {
        return Err(Error::TypeMismatch {
            left: f.type_vector.dims().to_vec(),
            right: g.type_vector.dims().to_vec(),
        });
    }
    if f.field() != g.field() {
        return Err(Error::FieldMismatch {
            left: f.field().order(),
            right: g.field().order(),
        });
    }
    Ok(())
}

/// Per-position injection distances `(d_I(F_1, G_1), …, d_I(F_r, G_r))`.
pub fn distance_vector(f: &Flag, g: &Flag) -> Result<Vec<usize>> {
    check_same_type(f, g)?;
    f.subspaces
        .iter()
        .zip(&g.subspaces)
        .map(|(a, b)| injection_distance(a, b))
        .collect()
}

/// Distance vector of two full flags, checked against the unit-step
/// characterization.
pub fn full_distance_vector(f: &Flag, g: &Flag) -> Result<DistanceVector> {
    if !f.is_full() {
        return Err(Error::InvalidType {
            dims: f.type_vector.dims().to_vec(),
            ambient: f.ambient(),
            reason: "not a full flag",
        });
    }
    let comps: Vec<i64> = distance_vector(f, g)?.into_iter().map(|d| d as i64).collect();
    validate_distance_vector(&comps, f.ambient())
}

/// `Σ_i d_I(F_i, G_i)`.
pub fn flag_distance(f: &Flag, g: &Flag) -> Result<usize> {
    Ok(distance_vector(f, g)?.iter().sum())
}

/// 1-based positions where the two flags share their subspace.
pub fn collapse_points(f: &Flag, g: &Flag) -> Result<BTreeSet<usize>> {
    check_same_type(f, g)?;
    Ok(f.subspaces
        .iter()
        .zip(&g.subspaces)
        .enumerate()
        .filter(|(_, (a, b))| a == b)
        .map(|(i, _)| i + 1)
        .collect())
}

/// Largest flag distance possible for the type:
/// `Σ_{t_i ≤ ⌊n/2⌋} t_i + Σ_{t_i > ⌊n/2⌋} (n − t_i)`.
pub fn max_flag_distance(t: &TypeVector) -> usize {
    let n = t.ambient();
    t.dims()
        .iter()
        .map(|&ti| if ti <= n / 2 { ti } else { n - ti })
        .sum()
}
