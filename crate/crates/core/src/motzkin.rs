//! Motzkin words and the counting sequences built on them.
//!
//! A Motzkin word is a word over `{U, H, D}` whose lattice path, starting at
//! height 0 and moving by `+1 / 0 / −1`, never drops below the axis and ends
//! at height 0. Counts are exact (`BigUint`). Areas are handled internally
//! as doubled areas so every trapezoid contributes an integer.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    H,
    D,
}

impl Step {
    pub const ALL: [Step; 3] = [Step::U, Step::H, Step::D];

    pub fn delta(self) -> i64 {
        match self {
            Step::U => 1,
            Step::H => 0,
            Step::D => -1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::H => 'H',
            Step::D => 'D',
        }
    }

    fn from_letter(c: char) -> Option<Step> {
        match c {
            'U' => Some(Step::U),
            'H' => Some(Step::H),
            'D' => Some(Step::D),
            _ => None,
        }
    }
}

/// A valid Motzkin word. Only constructible through validation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinWord {
    steps: Vec<Step>,
}

/// Parses and validates a word over `{U, H, D}`. Indices in errors are
/// 0-based positions in the input.
pub fn validate_word(s: &str) -> Result<MotzkinWord> {
    let steps = s
        .chars()
        .enumerate()
        .map(|(i, c)| Step::from_letter(c).ok_or(Error::Alphabet { index: i, letter: c }))
        .collect::<Result<Vec<_>>>()?;
    MotzkinWord::from_steps(steps)
}

impl MotzkinWord {
    pub fn from_steps(steps: Vec<Step>) -> Result<Self> {
        let mut height = 0i64;
        let mut ups = 0;
        let mut downs = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::U => ups += 1,
                Step::D => downs += 1,
                Step::H => {}
            }
            height += s.delta();
            if height < 0 {
                return Err(Error::NotAPath { index: i });
            }
        }
        if ups != downs {
            return Err(Error::Imbalance { ups, downs });
        }
        Ok(MotzkinWord { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        MotzkinWord { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Lattice heights `h_0, …, h_n` with `h_0 = h_n = 0`.
    pub fn heights(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut h = 0i64;
        out.push(0);
        for s in &self.steps {
            h += s.delta();
            out.push(h as usize);
        }
        out
    }

    /// Area between the path and the axis.
    pub fn area(&self) -> usize {
        let h = self.heights();
        let doubled: usize = h.windows(2).map(|w| w[0] + w[1]).sum();
        doubled / 2
    }

    /// Interior x-coordinates where the path touches the axis.
    pub fn returns(&self) -> BTreeSet<usize> {
        let h = self.heights();
        let n = self.steps.len();
        (1..n).filter(|&i| h[i] == 0).collect()
    }

    pub fn classify(&self) -> Classification {
        let n = self.steps.len();
        let h = self.heights();
        let elevated = n >= 2 && (1..n).all(|i| h[i] > 0);
        let riordan = self
            .steps
            .iter()
            .zip(&h)
            .all(|(s, &before)| !(*s == Step::H && before == 0));
        Classification { elevated, riordan }
    }

    pub fn is_elevated(&self) -> bool {
        self.classify().elevated
    }

    pub fn is_riordan(&self) -> bool {
        self.classify().riordan
    }

    pub fn is_dyck(&self) -> bool {
        !self.steps.contains(&Step::H)
    }

    pub fn is_in(&self, class: PathClass) -> bool {
        match class {
            PathClass::All => true,
            PathClass::Elevated => self.is_elevated(),
            PathClass::Riordan => self.is_riordan(),
        }
    }
}

/// Free-function form of [`MotzkinWord::heights`].
pub fn heights(w: &MotzkinWord) -> Vec<usize> {
    w.heights()
}

/// Free-function form of [`MotzkinWord::area`].
pub fn area(w: &MotzkinWord) -> usize {
    w.area()
}

/// Free-function form of [`MotzkinWord::returns`].
pub fn returns(w: &MotzkinWord) -> BTreeSet<usize> {
    w.returns()
}

/// Free-function form of [`MotzkinWord::classify`].
pub fn classify(w: &MotzkinWord) -> Classification {
    w.classify()
}

impl fmt::Display for MotzkinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        validate_word(s)
    }
}

/// Elevated: length at least 2 and no returns (so `E_0 = E_1 = 0`).
/// Riordan: no `H` step on the axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub elevated: bool,
    pub riordan: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum PathClass {
    #[default]
    All,
    Elevated,
    Riordan,
}

impl FromStr for PathClass {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "all" => Ok(PathClass::All),
            "elevated" => Ok(PathClass::Elevated),
            "riordan" => Ok(PathClass::Riordan),
            other => Err(format!("unknown path class {other:?} (expected all, elevated, riordan)")),
        }
    }
}

/// Whether `step` may be taken from height `h` when arriving at position
/// `next_pos` of a length-`n` path in the given class.
fn step_allowed(class: PathClass, n: usize, h: usize, step: Step, next_pos: usize) -> Option<usize> {
    let next = h as i64 + step.delta();
    if next < 0 {
        return None;
    }
    let next = next as usize;
    match class {
        PathClass::All => {}
        PathClass::Riordan => {
            if step == Step::H && h == 0 {
                return None;
            }
        }
        PathClass::Elevated => {
            if n < 2 || (next_pos < n && next == 0) {
                return None;
            }
        }
    }
    Some(next)
}

/// For a fixed length and class: `reach[r][h]` is the set of doubled areas
/// a suffix of `r` remaining steps can add when starting at height `h`.
struct Reachability {
    reach: Vec<Vec<Vec<bool>>>,
}

impl Reachability {
    fn new(n: usize, class: PathClass) -> Self {
        let max2 = n * n / 2 + 1;
        let mut reach = vec![vec![vec![false; max2 + 1]; n + 2]; n + 1];
        if !(class == PathClass::Elevated && n < 2) {
            reach[0][0][0] = true;
        }
        for r in 1..=n {
            let pos = n - r;
            for h in 0..=r.min(n) {
                let mut cell = vec![false; max2 + 1];
                for step in Step::ALL {
                    let Some(next) = step_allowed(class, n, h, step, pos + 1) else {
                        continue;
                    };
                    if next > r - 1 {
                        continue;
                    }
                    let add = h + next;
                    for (a, &ok) in reach[r - 1][next].iter().enumerate() {
                        if ok && a + add <= max2 {
                            cell[a + add] = true;
                        }
                    }
                }
                reach[r][h] = cell;
            }
        }
        Reachability { reach }
    }

    fn feasible(&self, remaining: usize, h: usize, target2: Option<usize>) -> bool {
        if h > remaining {
            return false;
        }
        let cell = &self.reach[remaining][h];
        match target2 {
            None => cell.iter().any(|&b| b),
            Some(t) => cell.get(t).copied().unwrap_or(false),
        }
    }
}

/// Lexicographic (`U < H < D`) stream of the Motzkin words of length `n` in
/// `class`, optionally restricted to area `area`.
pub struct PathIter {
    n: usize,
    class: PathClass,
    target2: Option<usize>,
    table: Reachability,
    steps: Vec<Step>,
    heights: Vec<usize>,
    area2: Vec<usize>,
    started: bool,
    done: bool,
}

/// Streams every qualifying word exactly once, in lexicographic order.
pub fn enumerate_paths(n: usize, class: PathClass, area_filter: Option<usize>) -> PathIter {
    PathIter {
        n,
        class,
        target2: area_filter.map(|a| 2 * a),
        table: Reachability::new(n, class),
        steps: Vec::with_capacity(n),
        heights: vec![0],
        area2: vec![0],
        started: false,
        done: false,
    }
}

impl PathIter {
    fn remaining_target(&self, area2: usize) -> Option<Option<usize>> {
        match self.target2 {
            None => Some(None),
            Some(t) => t.checked_sub(area2).map(Some),
        }
    }

    fn try_push(&mut self, step: Step) -> bool {
        let pos = self.steps.len();
        let h = *self.heights.last().unwrap();
        let Some(next) = step_allowed(self.class, self.n, h, step, pos + 1) else {
            return false;
        };
        let area2 = self.area2.last().unwrap() + h + next;
        let Some(rest) = self.remaining_target(area2) else {
            return false;
        };
        if !self.table.feasible(self.n - pos - 1, next, rest) {
            return false;
        }
        self.steps.push(step);
        self.heights.push(next);
        self.area2.push(area2);
        true
    }

    /// Extends the current prefix with the smallest feasible steps.
    fn fill(&mut self) {
        while self.steps.len() < self.n {
            let pushed = Step::ALL.into_iter().any(|s| self.try_push(s));
            debug_assert!(pushed, "feasible prefix must extend");
        }
    }

    /// Replaces the deepest step that has a larger feasible alternative.
    fn advance(&mut self) -> bool {
        while let Some(last) = self.steps.pop() {
            self.heights.pop();
            self.area2.pop();
            let larger = Step::ALL.into_iter().filter(|&s| s > last);
            for s in larger {
                if self.try_push(s) {
                    return true;
                }
            }
        }
        false
    }
}

impl Iterator for PathIter {
    type Item = MotzkinWord;

    fn next(&mut self) -> Option<MotzkinWord> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            let rest = self.remaining_target(0).flatten();
            if !self.table.feasible(self.n, 0, rest) {
                self.done = true;
                return None;
            }
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        self.fill();
        Some(MotzkinWord::from_steps_unchecked(self.steps.clone()))
    }
}

/// `M_n` by `M_n = M_{n−1} + Σ_{k=0}^{n−2} M_k M_{n−k−2}`.
pub fn motzkin_number(n: usize) -> BigUint {
    motzkin_numbers(n).pop().unwrap()
}

/// `M_0, …, M_n`.
pub fn motzkin_numbers(n: usize) -> Vec<BigUint> {
    let mut m: Vec<BigUint> = vec![BigUint::one()];
    for i in 1..=n {
        let mut next = m[i - 1].clone();
        for k in 0..i.saturating_sub(1) {
            next += &m[k] * &m[i - k - 2];
        }
        m.push(next);
    }
    m
}

/// `C_n` by `C_n = Σ_{k=0}^{n−1} C_k C_{n−k−1}`.
pub fn catalan_number(n: usize) -> BigUint {
    let mut c: Vec<BigUint> = vec![BigUint::one()];
    for i in 1..=n {
        let next = (0..i).fold(BigUint::zero(), |acc, k| acc + &c[k] * &c[i - k - 1]);
        c.push(next);
    }
    c.pop().unwrap()
}

/// `E_n`: 0 for `n < 2`, `M_{n−2}` otherwise.
pub fn elevated_number(n: usize) -> BigUint {
    if n < 2 {
        BigUint::zero()
    } else {
        motzkin_number(n - 2)
    }
}

/// `R_n`: Motzkin words of length `n` with no `H` on the axis, by a
/// height DP.
pub fn riordan_number(n: usize) -> BigUint {
    let mut ways = vec![BigUint::zero(); n + 2];
    ways[0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); n + 2];
        for h in 0..=n {
            if ways[h].is_zero() {
                continue;
            }
            next[h + 1] += &ways[h];
            if h > 0 {
                next[h] += &ways[h];
                next[h - 1] += &ways[h];
            }
        }
        ways = next;
    }
    ways.swap_remove(0)
}

/// The full area distribution of `M_n`: entry `k` is `T(n, k)` for
/// `k = 0..=⌊n²/4⌋`.
pub fn area_distribution(n: usize) -> Vec<BigUint> {
    let max2 = n * n / 2;
    // ways[h][a2]: prefixes ending at height h with doubled area a2.
    let mut ways = vec![vec![BigUint::zero(); max2 + 1]; n + 2];
    ways[0][0] = BigUint::one();
    for pos in 0..n {
        let remaining = n - pos;
        let mut next = vec![vec![BigUint::zero(); max2 + 1]; n + 2];
        for h in 0..=remaining.min(n) {
            for a2 in 0..=max2 {
                if ways[h][a2].is_zero() {
                    continue;
                }
                for step in Step::ALL {
                    let nh = h as i64 + step.delta();
                    if nh < 0 || nh as usize > remaining - 1 {
                        continue;
                    }
                    let nh = nh as usize;
                    let na = a2 + h + nh;
                    if na <= max2 {
                        let w = ways[h][a2].clone();
                        next[nh][na] += w;
                    }
                }
            }
        }
        ways = next;
    }
    ways[0].iter().step_by(2).cloned().collect()
}

/// `T(n, k)`: number of length-`n` Motzkin paths with area `k`.
pub fn area_count(n: usize, k: usize) -> BigUint {
    if k > n * n / 4 {
        return BigUint::zero();
    }
    area_distribution(n).swap_remove(k)
}
