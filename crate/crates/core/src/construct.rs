//! Explicit pairs of full flags realizing a prescribed distance vector.
//!
//! The flags are grown one dimension at a time. Writing `S = F_i + F'_i`,
//! the next vectors `u` (for `F`) and `u'` (for `F'`) are picked as follows:
//!
//! * `δ_{i+1} = δ_i = 0`: `u ∉ S`, and `F'_{i+1} = F_{i+1}`.
//! * `δ_{i+1} = δ_i > 0`: `u ∉ S`, `u' ∈ S ∖ F'_i`.
//! * `δ_{i+1} = δ_i + 1`: `u ∉ S`, `u' ∉ S + ⟨u⟩`.
//! * `δ_{i+1} = δ_i − 1`: `u ∈ F'_i ∖ F_i`, `u' ∈ F_i ∖ F'_i`.
//!
//! Each vector is the first one, in lexicographic order of coordinates over
//! `F_q^n`, that meets its membership conditions, so the output depends only
//! on the vector and the field.

use crate::error::Result;
use crate::flag::{DistanceVector, Flag, TypeVector};
use crate::gf::PrimeField;
use crate::subspace::{injection_distance, Subspace};

/// Two full flags on the same `F_q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagPair {
    pub first: Flag,
    pub second: Flag,
}

impl FlagPair {
    pub fn ambient(&self) -> usize {
        self.first.ambient()
    }

    pub fn field(&self) -> PrimeField {
        self.first.field()
    }
}

/// Nonzero vectors of `F_q^n` in lexicographic order, first coordinate most
/// significant.
struct LexVectors {
    q: u16,
    current: Vec<u16>,
    done: bool,
}

impl LexVectors {
    fn new(field: PrimeField, n: usize) -> Self {
        LexVectors {
            q: field.order(),
            current: vec![0; n],
            done: n == 0,
        }
    }
}

impl Iterator for LexVectors {
    type Item = Vec<u16>;
    fn next(&mut self) -> Option<Vec<u16>> {
        if self.done {
            return None;
        }
        for i in (0..self.current.len()).rev() {
            self.current[i] += 1;
            if self.current[i] < self.q {
                return Some(self.current.clone());
            }
            self.current[i] = 0;
        }
        self.done = true;
        None
    }
}

fn first_vector(field: PrimeField, n: usize, accept: impl Fn(&[u16]) -> bool) -> Vec<u16> {
    LexVectors::new(field, n)
        .find(|v| accept(v))
        .expect("a valid distance vector always leaves room for the next vector")
}

/// Builds full flags `F, F'` on `F_q^n` with distance vector `v`.
pub fn realize(v: &DistanceVector, field: PrimeField) -> Result<FlagPair> {
    let n = v.n();
    let tv = TypeVector::full(n)?;
    let mut first: Vec<Subspace> = Vec::with_capacity(n - 1);
    let mut second: Vec<Subspace> = Vec::with_capacity(n - 1);
    let zero = Subspace::zero(field, n);
    for i in 0..n - 1 {
        let f = first.last().unwrap_or(&zero);
        let g = second.last().unwrap_or(&zero);
        let sum = f.join(g)?;
        let (now, next) = (v.get(i), v.get(i + 1));
        let (nf, ng) = if next == now {
            let u = first_vector(field, n, |x| !sum.contains_vector(x));
            let nf = f.extend(&u);
            if now == 0 {
                (nf.clone(), nf)
            } else {
                let u2 = first_vector(field, n, |x| sum.contains_vector(x) && !g.contains_vector(x));
                (nf, g.extend(&u2))
            }
        } else if next == now + 1 {
            let u = first_vector(field, n, |x| !sum.contains_vector(x));
            let grown = sum.extend(&u);
            let u2 = first_vector(field, n, |x| !grown.contains_vector(x));
            (f.extend(&u), g.extend(&u2))
        } else {
            let u = first_vector(field, n, |x| g.contains_vector(x) && !f.contains_vector(x));
            let u2 = first_vector(field, n, |x| f.contains_vector(x) && !g.contains_vector(x));
            (f.extend(&u), g.extend(&u2))
        };
        first.push(nf);
        second.push(ng);
    }
    Ok(FlagPair {
        first: Flag::new(tv.clone(), first)?,
        second: Flag::new(tv, second)?,
    })
}

/// Parses, validates and realizes raw components.
pub fn realize_components(components: &[i64], n: usize, field: PrimeField) -> Result<FlagPair> {
    let v = crate::bijection::validate_distance_vector(components, n)?;
    realize(&v, field)
}

/// Recomputes the distance vector of `p` subspace by subspace and compares
/// it with `v`.
pub fn verify_pair(p: &FlagPair, v: &DistanceVector) -> bool {
    if p.first.ambient() != v.n() || p.second.ambient() != v.n() {
        return false;
    }
    let (a, b) = (p.first.subspaces(), p.second.subspaces());
    if a.len() != v.components().len() || b.len() != a.len() {
        return false;
    }
    a.iter()
        .zip(b)
        .zip(v.components())
        .all(|((x, y), &d)| injection_distance(x, y).ok() == Some(d))
}
