//! The correspondence between distance vectors of full flags and Motzkin
//! words, plus the strip and level decompositions of the area.
//!
//! `psi` reads a distance vector as the interior heights of a lattice path
//! (step `i` is `U`, `H` or `D` as `δ_i − δ_{i−1}` is `+1`, `0` or `−1`);
//! `phi` reads the heights back off a word. The two are mutually inverse and
//! carry the flag distance `Σ δ_i` to the area under the path.

use crate::error::{Error, Result};
use crate::flag::DistanceVector;
use crate::motzkin::{MotzkinWord, Step};

/// Accepts `(δ_1, …, δ_{n−1})` iff every entry is non-negative and, with
/// `δ_0 = δ_n = 0`, consecutive entries differ by at most one.
///
/// Error indices are the 1-based component positions; a failing final step
/// back to `δ_n = 0` is reported at index `n`.
pub fn validate_distance_vector(components: &[i64], n: usize) -> Result<DistanceVector> {
    let expected = n.saturating_sub(1);
    if components.len() != expected {
        return Err(Error::Length {
            n,
            expected,
            found: components.len(),
        });
    }
    if let Some((i, &value)) = components.iter().enumerate().find(|(_, &v)| v < 0) {
        return Err(Error::Negative {
            index: i + 1,
            value,
        });
    }
    let mut previous = 0i64;
    for (i, &value) in components.iter().chain(std::iter::once(&0)).enumerate() {
        if n == 0 {
            break;
        }
        if (value - previous).abs() > 1 {
            return Err(Error::NotADistanceVector {
                index: i + 1,
                previous,
                value,
            });
        }
        previous = value;
    }
    Ok(DistanceVector::from_checked(
        components.iter().map(|&v| v as usize).collect(),
        n,
    ))
}

/// Distance vector to Motzkin word.
pub fn psi(v: &DistanceVector) -> MotzkinWord {
    let steps = (1..=v.n())
        .map(|i| match v.get(i) as i64 - v.get(i - 1) as i64 {
            1 => Step::U,
            0 => Step::H,
            -1 => Step::D,
            _ => unreachable!("validated distance vectors move by unit steps"),
        })
        .collect();
    MotzkinWord::from_steps_unchecked(steps)
}

/// Motzkin word to distance vector: component `i` is `u_i − d_i`, the
/// number of `U` minus the number of `D` among the first `i` letters.
pub fn phi(w: &MotzkinWord) -> DistanceVector {
    let n = w.len();
    let mut comps = Vec::with_capacity(n.saturating_sub(1));
    let (mut ups, mut downs) = (0usize, 0usize);
    for s in w.steps().iter().take(n.saturating_sub(1)) {
        match s {
            Step::U => ups += 1,
            Step::D => downs += 1,
            Step::H => {}
        }
        comps.push(ups - downs);
    }
    DistanceVector::from_checked(comps, n)
}

/// Matched `U`/`D` pairs of a word, each spanning a horizontal strip of
/// height one under the path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StripDecomposition {
    pairs: Vec<(usize, usize)>,
}

impl StripDecomposition {
    /// 1-based `(i, j)` with `p_i = U` matched to `p_j = D`, sorted by `i`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// `j − i` for each pair, in the order of [`pairs`](Self::pairs).
    pub fn areas(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(i, j)| j - i).collect()
    }

    pub fn total_area(&self) -> usize {
        self.pairs.iter().map(|&(i, j)| j - i).sum()
    }
}

/// Pairs `U` and `D` letters as a balanced parenthesization.
pub fn strip_decomposition(w: &MotzkinWord) -> StripDecomposition {
    let mut open = Vec::new();
    let mut pairs = Vec::new();
    for (idx, s) in w.steps().iter().enumerate() {
        match s {
            Step::U => open.push(idx + 1),
            Step::D => {
                let i = open.pop().expect("Motzkin words are balanced");
                pairs.push((i, idx + 1));
            }
            Step::H => {}
        }
    }
    pairs.sort_unstable();
    StripDecomposition { pairs }
}

/// `Σ_{p_j = D} j − Σ_{p_i = U} i`, with 1-based positions.
pub fn strip_area_formula(w: &MotzkinWord) -> usize {
    let (mut downs, mut ups) = (0usize, 0usize);
    for (idx, s) in w.steps().iter().enumerate() {
        match s {
            Step::U => ups += idx + 1,
            Step::D => downs += idx + 1,
            Step::H => {}
        }
    }
    downs - ups
}

/// Horizontal slicing of a zero-free distance vector into 0/1 levels:
/// `levels[k − 1][i − 1] = 1` iff `δ_i ≥ k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelDecomposition {
    levels: Vec<Vec<u8>>,
}

impl LevelDecomposition {
    pub fn levels(&self) -> &[Vec<u8>] {
        &self.levels
    }

    /// Number of levels, `max δ_i`.
    pub fn height(&self) -> usize {
        self.levels.len()
    }

    /// Row sums `ρ_k`.
    pub fn row_sums(&self) -> Vec<usize> {
        self.levels
            .iter()
            .map(|l| l.iter().map(|&b| b as usize).sum())
            .collect()
    }

    /// Column sums, which recover the original vector.
    pub fn column_sums(&self) -> Vec<usize> {
        let width = self.levels.first().map_or(0, Vec::len);
        (0..width)
            .map(|i| self.levels.iter().map(|l| l[i] as usize).sum())
            .collect()
    }
}

pub fn level_decomposition(v: &DistanceVector) -> Result<LevelDecomposition> {
    if let Some(i) = v.components().iter().position(|&d| d == 0) {
        return Err(Error::NotDisjoint { index: i + 1 });
    }
    let r = v.components().iter().copied().max().unwrap_or(0);
    let levels = (1..=r)
        .map(|k| v.components().iter().map(|&d| u8::from(d >= k)).collect())
        .collect();
    Ok(LevelDecomposition { levels })
}

/// Splits a word at its returns into elevated factors, dropping the `H`
/// steps that run along the axis.
pub fn elevated_factorization(w: &MotzkinWord) -> Vec<MotzkinWord> {
    let mut factors = Vec::new();
    let mut current = Vec::new();
    let mut height = 0i64;
    for &s in w.steps() {
        if height == 0 && s == Step::H {
            continue;
        }
        current.push(s);
        height += s.delta();
        if height == 0 {
            factors.push(MotzkinWord::from_steps_unchecked(std::mem::take(&mut current)));
        }
    }
    factors
}
