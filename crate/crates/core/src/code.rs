//! Flag codes: minimum distance, distance-vector sets, projected codes and
//! the lattice-path counts of potential distance vectors.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::flag::{distance_vector, max_flag_distance, Flag, TypeVector};
use crate::gf::PrimeField;
use crate::motzkin::area_count;

/// A nonempty set of distinct flags sharing one type, ambient space and field.
#[derive(Clone, Debug)]
pub struct FlagCode {
    type_vector: TypeVector,
    field: PrimeField,
    flags: Vec<Flag>,
}

/// Distance data for one unordered pair of codewords (0-based indices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairDistance {
    pub first: usize,
    pub second: usize,
    pub vector: Vec<usize>,
    pub distance: usize,
}

impl FlagCode {
    /// Rejects empty input, mixed types or fields, and repeated flags.
    pub fn new(flags: Vec<Flag>) -> Result<Self> {
        let first = flags.first().ok_or(Error::EmptyCode)?;
        let type_vector = first.type_vector().clone();
        let field = first.field();
        for f in &flags[1..] {
            if f.type_vector() != &type_vector {
                return Err(Error::TypeMismatch {
                    left: type_vector.dims().to_vec(),
                    right: f.type_vector().dims().to_vec(),
                });
            }
            if f.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.order(),
                    right: f.field().order(),
                });
            }
        }
        for (j, f) in flags.iter().enumerate() {
            if let Some(i) = flags[..j].iter().position(|g| g == f) {
                return Err(Error::DuplicateFlag { first: i, second: j });
            }
        }
        Ok(FlagCode {
            type_vector,
            field,
            flags,
        })
    }

    pub fn flags(&self) -> &[Flag] {
        &self.flags
    }

    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn type_vector(&self) -> &TypeVector {
        &self.type_vector
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn ambient(&self) -> usize {
        self.type_vector.ambient()
    }

    pub fn is_full(&self) -> bool {
        self.type_vector.is_full()
    }

    /// Every unordered pair, in lexicographic order of indices.
    pub fn pairwise(&self) -> Vec<PairDistance> {
        let mut out = Vec::new();
        for i in 0..self.flags.len() {
            for j in i + 1..self.flags.len() {
                let vector = distance_vector(&self.flags[i], &self.flags[j])
                    .expect("codewords share a type");
                let distance = vector.iter().sum();
                out.push(PairDistance {
                    first: i,
                    second: j,
                    vector,
                    distance,
                });
            }
        }
        out
    }

    /// Minimum flag distance between distinct codewords; 0 for a single flag.
    pub fn min_distance(&self) -> usize {
        self.pairwise().iter().map(|p| p.distance).min().unwrap_or(0)
    }

    /// Distance vectors of the pairs attaining the minimum distance.
    pub fn distance_vector_set(&self) -> Result<BTreeSet<Vec<usize>>> {
        if self.flags.len() < 2 {
            return Err(Error::SingletonCode);
        }
        let pairs = self.pairwise();
        let min = pairs.iter().map(|p| p.distance).min().unwrap_or(0);
        Ok(pairs
            .into_iter()
            .filter(|p| p.distance == min)
            .map(|p| p.vector)
            .collect())
    }

    /// `|C_i|` for each position of the type vector.
    pub fn projected_sizes(&self) -> Vec<usize> {
        (0..self.type_vector.len())
            .map(|i| {
                self.flags
                    .iter()
                    .map(|f| &f.subspaces()[i])
                    .collect::<HashSet<_>>()
                    .len()
            })
            .collect()
    }

    /// No two codewords share a subspace at any position.
    pub fn is_disjoint(&self) -> bool {
        self.projected_sizes().iter().all(|&s| s == self.flags.len())
    }

    pub fn max_distance_bound(&self) -> usize {
        max_flag_distance(&self.type_vector)
    }
}

/// `T(n, d)`: distance vectors of full flags on `F_q^n` with flag distance `d`.
pub fn potential_vector_count(n: usize, d: usize) -> BigUint {
    area_count(n, d)
}

/// `T(n − 2, d − n + 1)`: zero-free distance vectors with flag distance `d`,
/// i.e. the candidates for a disjoint full flag code. Zero when `d < n − 1`.
pub fn disjoint_vector_count(n: usize, d: usize) -> BigUint {
    if n < 2 || d + 1 < n {
        return BigUint::zero();
    }
    area_count(n - 2, d + 1 - n)
}
