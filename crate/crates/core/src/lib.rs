//! Distance vectors of flag codes over prime fields and their correspondence
//! with Motzkin paths.
//!
//! The distance vectors of pairs of full flags on `F_q^n` are exactly the
//! sequences `(δ_1, …, δ_{n−1})` that move by unit steps between zeros at
//! both ends. Reading them as lattice heights gives a bijection with the
//! Motzkin words of length `n` that turns the flag distance into the area
//! under the path. This crate provides:
//!
//! * [`gf`]: prime-field arithmetic and row reduction,
//! * [`subspace`]: subspaces with the injection and subspace distances,
//! * [`flag`]: flags, flag distance and distance vectors,
//! * [`motzkin`]: Motzkin words, enumeration and exact counting,
//! * [`bijection`]: the maps between vectors and words, strips and levels,
//! * [`construct`]: explicit flag pairs realizing a given distance vector,
//! * [`code`]: flag-code statistics.

pub mod bijection;
pub mod code;
pub mod construct;
pub mod error;
pub mod flag;
pub mod gf;
pub mod motzkin;
pub mod subspace;

pub use bijection::{
    elevated_factorization, level_decomposition, phi, psi, strip_decomposition,
    validate_distance_vector, LevelDecomposition, StripDecomposition,
};
pub use code::{disjoint_vector_count, potential_vector_count, FlagCode, PairDistance};
pub use construct::{realize, verify_pair, FlagPair};
pub use error::{Error, Result};
pub use flag::{
    collapse_points, distance_vector, flag_distance, full_distance_vector, max_flag_distance,
    DistanceVector, Flag, TypeVector,
};
pub use gf::{rref, stack_rank, FieldElement, Matrix, PrimeField};
pub use motzkin::{
    area_count, area_distribution, catalan_number, elevated_number, enumerate_paths,
    motzkin_number, riordan_number, validate_word, Classification, MotzkinWord, PathClass, Step,
};
pub use subspace::{
    dim_intersection, dim_sum, injection_distance, subspace_distance, Subspace,
};
