//! T-paths with respect to a dissection and the expansion they define.
//!
//! A T-path from `a` to `b` is a vertex tuple `(π₁, …, π_p)` with `π₁ = a`,
//! `π_p = b` such that
//!
//! 1. the steps `{π_i, π_{i+1}}` are pairwise different diagonals,
//! 2. no step crosses a dissection diagonal,
//! 3. the even steps `{π_{2j}, π_{2j+1}}` are dissection diagonals crossing
//!    `{a, b}` at points that strictly progress from `a` towards `b`.
//!
//! [`is_tpath`] checks these conditions literally. [`enumerate_tpaths`] finds
//! the same set by depth-first search; the two are kept independent so each
//! can serve as the other's oracle.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{FriezeError, Result};
use crate::frieze::DiagonalMap;
use crate::polygon::{Diagonal, Dissection, Polygon, Vertex};
use crate::semifield::Semifield;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPath {
    vertices: Vec<Vertex>,
}

impl TPath {
    /// Validates `vertices` as a T-path between its first and last entries.
    pub fn new(polygon: &Polygon, dissection: &Dissection, vertices: Vec<Vertex>) -> Result<Option<Self>> {
        let (Some(&from), Some(&to)) = (vertices.first(), vertices.last()) else {
            return Ok(None);
        };
        if is_tpath(polygon, dissection, &vertices, from, to)? {
            Ok(Some(TPath { vertices }))
        } else {
            Ok(None)
        }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    /// Number of vertices `p`; always even.
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn from(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn to(&self) -> Vertex {
        self.vertices[self.vertices.len() - 1]
    }

    /// Steps `{π_i, π_{i+1}}` in order; step `k` (0-based) is an odd step in
    /// the 1-based convention when `k` is even.
    pub fn steps(&self) -> impl Iterator<Item = Diagonal> + '_ {
        self.vertices.windows(2).map(|w| Diagonal::new(w[0], w[1]))
    }

    /// The same path walked backwards: a T-path from `to()` to `from()`.
    pub fn reverse(&self) -> TPath {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        TPath { vertices }
    }
}

impl fmt::Display for TPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.vertices.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

fn check_endpoints(polygon: &Polygon, from: Vertex, to: Vertex) -> Result<()> {
    polygon.check_vertex(from)?;
    polygon.check_vertex(to)?;
    if from == to {
        return Err(FriezeError::SameEndpoints(from));
    }
    Ok(())
}

/// Literal check of the T-path conditions for `seq` from `from` to `to`.
pub fn is_tpath(polygon: &Polygon, dissection: &Dissection, seq: &[Vertex], from: Vertex, to: Vertex) -> Result<bool> {
    check_endpoints(polygon, from, to)?;
    for &v in seq {
        polygon.check_vertex(v)?;
    }
    if seq.len() < 2 || seq[0] != from || seq[seq.len() - 1] != to {
        return Ok(false);
    }

    // (i) steps are diagonals, pairwise different
    if seq.windows(2).any(|w| w[0] == w[1]) {
        return Ok(false);
    }
    let steps: Vec<Diagonal> = seq.windows(2).map(|w| Diagonal::new(w[0], w[1])).collect();
    for (k, s) in steps.iter().enumerate() {
        if steps[k + 1..].contains(s) {
            return Ok(false);
        }
    }

    // (ii) no step crosses the dissection
    if steps.iter().any(|s| dissection.crosses_any(*s)) {
        return Ok(false);
    }

    // (iii) even steps (1-based) lie in D, cross the base, progress strictly
    let base = Diagonal::new(from, to);
    let even: Vec<Diagonal> = steps.iter().skip(1).step_by(2).copied().collect();
    for s in &even {
        if !dissection.contains(*s) || !s.crosses(&base) {
            return Ok(false);
        }
    }
    for pair in even.windows(2) {
        if polygon.crossing_order_unchecked(from, to, pair[0], pair[1]) != Ordering::Less {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All T-paths from `from` to `to`, sorted lexicographically.
pub fn enumerate_tpaths(polygon: &Polygon, dissection: &Dissection, from: Vertex, to: Vertex) -> Result<Vec<TPath>> {
    check_endpoints(polygon, from, to)?;
    let base = Diagonal::new(from, to);
    let crossing: Vec<Diagonal> = dissection.crossing(base).collect();
    let mut search = Search {
        polygon,
        dissection,
        from,
        to,
        crossing: &crossing,
        path: vec![from],
        used: Vec::new(),
        found: Vec::new(),
    };
    search.odd_step(None);
    let mut found = search.found;
    found.sort();
    debug_assert!(found.iter().all(|p| p.len() % 2 == 0));
    Ok(found)
}

struct Search<'a> {
    polygon: &'a Polygon,
    dissection: &'a Dissection,
    from: Vertex,
    to: Vertex,
    /// dissection diagonals crossing the base
    crossing: &'a [Diagonal],
    path: Vec<Vertex>,
    used: Vec<Diagonal>,
    found: Vec<TPath>,
}

impl Search<'_> {
    /// Extends by a step that need not lie in D. `last_even` is the most
    /// recent even step, which later even steps must strictly follow.
    fn odd_step(&mut self, last_even: Option<Diagonal>) {
        let v = *self.path.last().unwrap();
        for w in self.polygon.vertices() {
            if w == v {
                continue;
            }
            let step = Diagonal::new(v, w);
            if self.used.contains(&step) || self.dissection.crosses_any(step) {
                continue;
            }
            if w == self.to {
                let mut vertices = self.path.clone();
                vertices.push(w);
                self.found.push(TPath { vertices });
                continue;
            }
            // w must start a further even step
            if !self.crossing.iter().any(|e| e.has_endpoint(w) && self.follows(last_even, *e)) {
                continue;
            }
            self.push(w, step);
            self.even_step(last_even);
            self.pop();
        }
    }

    fn even_step(&mut self, last_even: Option<Diagonal>) {
        let v = *self.path.last().unwrap();
        for &e in self.crossing {
            if !e.has_endpoint(v) || self.used.contains(&e) || !self.follows(last_even, e) {
                continue;
            }
            self.push(e.other(v), e);
            self.odd_step(Some(e));
            self.pop();
        }
    }

    fn follows(&self, last_even: Option<Diagonal>, e: Diagonal) -> bool {
        match last_even {
            None => true,
            Some(prev) => self.polygon.crossing_order_unchecked(self.from, self.to, prev, e) == Ordering::Less,
        }
    }

    fn push(&mut self, w: Vertex, step: Diagonal) {
        self.path.push(w);
        self.used.push(step);
    }

    fn pop(&mut self) {
        self.path.pop();
        self.used.pop();
    }
}

/// One positional constraint of a restricted T-path set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixConstraint {
    Is(Vertex),
    IsNot(Vertex),
}

impl PrefixConstraint {
    pub fn admits(&self, v: Vertex) -> bool {
        match *self {
            PrefixConstraint::Is(w) => v == w,
            PrefixConstraint::IsNot(w) => v != w,
        }
    }
}

/// T-paths whose first entries satisfy `prefix` position by position. Paths
/// shorter than the prefix are excluded.
pub fn tpaths_with_prefix(
    polygon: &Polygon,
    dissection: &Dissection,
    from: Vertex,
    to: Vertex,
    prefix: &[PrefixConstraint],
) -> Result<Vec<TPath>> {
    Ok(enumerate_tpaths(polygon, dissection, from, to)?
        .into_iter()
        .filter(|p| matches_prefix(p, prefix))
        .collect())
}

pub fn matches_prefix(path: &TPath, prefix: &[PrefixConstraint]) -> bool {
    path.len() >= prefix.len() && prefix.iter().zip(path.vertices()).all(|(c, v)| c.admits(*v))
}

/// Odd-step values multiplied, divided by the product of even-step values.
pub fn tpath_weight<K: Semifield>(f: &DiagonalMap<K>, path: &TPath) -> K {
    let mut numer = K::one();
    let mut denom = K::one();
    for (k, step) in path.steps().enumerate() {
        if k % 2 == 0 {
            numer = numer.mul(f.get(step));
        } else {
            denom = denom.mul(f.get(step));
        }
    }
    numer.div(&denom)
}

/// Sum of [`tpath_weight`] over all T-paths from `from` to `to`.
pub fn tpath_sum<K: Semifield>(f: &DiagonalMap<K>, dissection: &Dissection, from: Vertex, to: Vertex) -> Result<K> {
    let paths = enumerate_tpaths(&f.polygon(), dissection, from, to)?;
    Ok(sum_weights(f, &paths))
}

pub(crate) fn sum_weights<K: Semifield>(f: &DiagonalMap<K>, paths: &[TPath]) -> K {
    let weights: Vec<K> = paths.iter().map(|p| tpath_weight(f, p)).collect();
    K::sum(&weights).expect("the T-path set is never empty")
}
