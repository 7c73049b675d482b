//! Polygons as cyclic vertex orders, their diagonals, and dissections.
//!
//! Vertices of an `n`-gon are labelled `0..n` anticlockwise. All notions here
//! are combinatorial; no coordinates are involved.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{FriezeError, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Polygon {
    n: usize,
}

/// An unordered pair of distinct vertices, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    lo: Vertex,
    hi: Vertex,
}

impl Diagonal {
    /// Normalizes the endpoint order. Panics if `a == b`; use
    /// [`Polygon::diagonal`] for checked construction.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        assert_ne!(a, b, "a diagonal needs two distinct endpoints");
        Diagonal { lo: a.min(b), hi: a.max(b) }
    }

    pub fn lo(&self) -> Vertex {
        self.lo
    }

    pub fn hi(&self) -> Vertex {
        self.hi
    }

    pub fn endpoints(&self) -> [Vertex; 2] {
        [self.lo, self.hi]
    }

    pub fn has_endpoint(&self, v: Vertex) -> bool {
        self.lo == v || self.hi == v
    }

    pub fn shares_endpoint(&self, other: &Diagonal) -> bool {
        self.has_endpoint(other.lo) || self.has_endpoint(other.hi)
    }

    /// The endpoint that is not `v`. `v` must be an endpoint.
    pub fn other(&self, v: Vertex) -> Vertex {
        debug_assert!(self.has_endpoint(v));
        if self.lo == v {
            self.hi
        } else {
            self.lo
        }
    }

    /// Whether the four endpoints are distinct and interleave in the cyclic
    /// order. This does not depend on the polygon size.
    pub fn crosses(&self, other: &Diagonal) -> bool {
        if self.shares_endpoint(other) {
            return false;
        }
        let inside = |v: Vertex| self.lo < v && v < self.hi;
        inside(other.lo) != inside(other.hi)
    }

    /// `"i-j"` key used in JSON value files.
    pub fn key(&self) -> String {
        format!("{}-{}", self.lo, self.hi)
    }

    pub fn parse_key(key: &str) -> Result<Self> {
        let bad = || FriezeError::BadKey(key.to_string());
        let (a, b) = key.split_once('-').ok_or_else(bad)?;
        let a: Vertex = a.trim().parse().map_err(|_| bad())?;
        let b: Vertex = b.trim().parse().map_err(|_| bad())?;
        if a == b {
            return Err(FriezeError::DegenerateDiagonal(a));
        }
        Ok(Diagonal::new(a, b))
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

impl Polygon {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(FriezeError::PolygonTooSmall(n));
        }
        Ok(Polygon { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn succ(&self, v: Vertex) -> Vertex {
        (v + 1) % self.n
    }

    pub fn pred(&self, v: Vertex) -> Vertex {
        (v + self.n - 1) % self.n
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<Vertex> {
        if v < self.n {
            Ok(v)
        } else {
            Err(FriezeError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_diagonal(&self, d: Diagonal) -> Result<Diagonal> {
        self.check_vertex(d.hi)?;
        Ok(d)
    }

    pub fn diagonal(&self, a: Vertex, b: Vertex) -> Result<Diagonal> {
        self.check_vertex(a)?;
        self.check_vertex(b)?;
        if a == b {
            return Err(FriezeError::DegenerateDiagonal(a));
        }
        Ok(Diagonal::new(a, b))
    }

    pub fn diagonal_count(&self) -> usize {
        self.n * (self.n - 1) / 2
    }

    /// All `n(n-1)/2` diagonals (edges included) in lexicographic order.
    pub fn diagonals(&self) -> impl Iterator<Item = Diagonal> + '_ {
        let n = self.n;
        (0..n).flat_map(move |lo| (lo + 1..n).map(move |hi| Diagonal { lo, hi }))
    }

    pub fn internal_diagonals(&self) -> impl Iterator<Item = Diagonal> + '_ {
        self.diagonals().filter(move |d| !self.is_edge(*d))
    }

    pub fn edges(&self) -> impl Iterator<Item = Diagonal> + '_ {
        self.vertices().map(move |v| Diagonal::new(v, self.succ(v)))
    }

    pub fn is_edge(&self, d: Diagonal) -> bool {
        d.hi == d.lo + 1 || (d.lo == 0 && d.hi == self.n - 1)
    }

    /// Dense index of a diagonal, matching the order of [`Polygon::diagonals`].
    pub fn index_of(&self, d: Diagonal) -> usize {
        debug_assert!(d.hi < self.n);
        d.lo * self.n - d.lo * (d.lo + 1) / 2 + (d.hi - d.lo - 1)
    }

    pub fn crosses(&self, d1: Diagonal, d2: Diagonal) -> Result<bool> {
        self.check_diagonal(d1)?;
        self.check_diagonal(d2)?;
        Ok(d1.crosses(&d2))
    }

    /// Position of `v` when walking anticlockwise from `start` (`start` itself is 0).
    pub fn arc_position(&self, start: Vertex, v: Vertex) -> usize {
        (v + self.n - start) % self.n
    }

    /// Whether `v` lies strictly inside the anticlockwise arc from `a` to `b`.
    pub fn in_open_arc(&self, v: Vertex, a: Vertex, b: Vertex) -> bool {
        let pos = self.arc_position(a, v);
        pos > 0 && pos < self.arc_position(a, b)
    }

    /// Whether `v` lies on the closed anticlockwise arc from `a` to `b`.
    pub fn in_closed_arc(&self, v: Vertex, a: Vertex, b: Vertex) -> bool {
        self.arc_position(a, v) <= self.arc_position(a, b)
    }

    /// The vertices strictly between `a` and `b`, walking anticlockwise.
    pub fn open_arc(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let len = self.arc_position(a, b);
        (1..len).map(|k| (a + k) % self.n).collect()
    }

    /// The vertices from `a` to `b` inclusive, walking anticlockwise.
    pub fn closed_arc(&self, a: Vertex, b: Vertex) -> Vec<Vertex> {
        let len = self.arc_position(a, b);
        (0..=len).map(|k| (a + k) % self.n).collect()
    }

    /// Orders where `e1` and `e2` cross the base diagonal directed from `from`
    /// to `to`: `Less` means `e1` crosses closer to `from`.
    ///
    /// Both diagonals must cross the base and must not cross each other.
    pub fn crossing_order(&self, from: Vertex, to: Vertex, e1: Diagonal, e2: Diagonal) -> Result<Ordering> {
        self.check_vertex(from)?;
        self.check_vertex(to)?;
        self.check_diagonal(e1)?;
        self.check_diagonal(e2)?;
        if from == to {
            return Err(FriezeError::SameEndpoints(from));
        }
        let base = Diagonal::new(from, to);
        for e in [e1, e2] {
            if !e.crosses(&base) {
                return Err(FriezeError::NotCrossing(e, base));
            }
        }
        if e1.crosses(&e2) {
            return Err(FriezeError::CrossingDiagonals(e1, e2));
        }
        Ok(self.crossing_order_unchecked(from, to, e1, e2))
    }

    /// [`Polygon::crossing_order`] without precondition checks.
    ///
    /// Each crossing diagonal has one endpoint on the anticlockwise arc
    /// `from → to` and one on the arc `to → from`. Of two non-crossing such
    /// diagonals, the one reaching the first arc earlier and the second arc
    /// later is closer to `from`; a shared endpoint defers to the other one.
    pub(crate) fn crossing_order_unchecked(&self, from: Vertex, to: Vertex, e1: Diagonal, e2: Diagonal) -> Ordering {
        let split = |e: Diagonal| {
            let [a, b] = e.endpoints();
            if self.in_open_arc(a, from, to) {
                (a, b)
            } else {
                (b, a)
            }
        };
        let (near1, far1) = split(e1);
        let (near2, far2) = split(e2);
        self.arc_position(from, near1)
            .cmp(&self.arc_position(from, near2))
            .then_with(|| self.arc_position(to, far2).cmp(&self.arc_position(to, far1)))
    }

    /// Every dissection of the polygon, in a deterministic order.
    pub fn dissections(&self) -> Vec<Dissection> {
        self.dissections_up_to(self.n.saturating_sub(3))
    }

    /// Every dissection with at most `max_size` diagonals.
    pub fn dissections_up_to(&self, max_size: usize) -> Vec<Dissection> {
        let internal: Vec<Diagonal> = self.internal_diagonals().collect();
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.extend_dissections(&internal, 0, max_size, &mut chosen, &mut out);
        out
    }

    fn extend_dissections(
        &self,
        internal: &[Diagonal],
        start: usize,
        max_size: usize,
        chosen: &mut Vec<Diagonal>,
        out: &mut Vec<Dissection>,
    ) {
        out.push(Dissection { n: self.n, diagonals: chosen.clone() });
        if chosen.len() == max_size {
            return;
        }
        for (k, &d) in internal.iter().enumerate().skip(start) {
            if chosen.iter().any(|c| c.crosses(&d)) {
                continue;
            }
            chosen.push(d);
            self.extend_dissections(internal, k + 1, max_size, chosen, out);
            chosen.pop();
        }
    }

    /// Every triangulation (dissection with `n - 3` diagonals).
    pub fn triangulations(&self) -> Vec<Dissection> {
        let full = self.n - 3;
        self.dissections()
            .into_iter()
            .filter(|d| d.len() == full)
            .collect()
    }
}

/// A set of pairwise non-crossing internal diagonals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dissection {
    n: usize,
    diagonals: Vec<Diagonal>,
}

impl Dissection {
    pub fn empty(polygon: &Polygon) -> Self {
        Dissection { n: polygon.n, diagonals: Vec::new() }
    }

    /// Validates the input, reporting the first offending member or pair in
    /// input order. Duplicates are rejected.
    pub fn new(polygon: &Polygon, diagonals: impl IntoIterator<Item = Diagonal>) -> Result<Self> {
        let mut accepted: Vec<Diagonal> = Vec::new();
        for d in diagonals {
            polygon.check_diagonal(d)?;
            if polygon.is_edge(d) {
                return Err(FriezeError::EdgeInDissection(d));
            }
            if accepted.contains(&d) {
                return Err(FriezeError::DuplicateDiagonal(d));
            }
            if let Some(&c) = accepted.iter().find(|c| c.crosses(&d)) {
                return Err(FriezeError::CrossingDiagonals(c, d));
            }
            accepted.push(d);
        }
        accepted.sort();
        Ok(Dissection { n: polygon.n, diagonals: accepted })
    }

    /// Builds from raw endpoint pairs in either order.
    pub fn from_pairs(polygon: &Polygon, pairs: &[(Vertex, Vertex)]) -> Result<Self> {
        let diagonals = pairs
            .iter()
            .map(|&(a, b)| polygon.diagonal(a, b))
            .collect::<Result<Vec<_>>>()?;
        Dissection::new(polygon, diagonals)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn polygon(&self) -> Polygon {
        Polygon { n: self.n }
    }

    /// Members in sorted order.
    pub fn diagonals(&self) -> &[Diagonal] {
        &self.diagonals
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn contains(&self, d: Diagonal) -> bool {
        self.diagonals.binary_search(&d).is_ok()
    }

    /// Members crossing `d`.
    pub fn crossing(&self, d: Diagonal) -> impl Iterator<Item = Diagonal> + '_ {
        self.diagonals.iter().copied().filter(move |e| e.crosses(&d))
    }

    pub fn crosses_any(&self, d: Diagonal) -> bool {
        self.diagonals.iter().any(|e| e.crosses(&d))
    }

    /// The subpolygons cut out by the dissection: exactly `len() + 1` of
    /// them, each listed in ambient cyclic order from its smallest label, and
    /// the list sorted.
    pub fn cells(&self) -> Vec<Subpolygon> {
        let mut cells: Vec<Vec<Vertex>> = vec![(0..self.n).collect()];
        for d in &self.diagonals {
            let (k, cell) = cells
                .iter()
                .enumerate()
                .find(|(_, c)| c.contains(&d.lo) && c.contains(&d.hi) && !Subpolygon::adjacent_in(c, *d))
                .map(|(k, c)| (k, c.clone()))
                .expect("a dissection diagonal always splits exactly one current cell");
            // cells are kept sorted, so splitting at lo and hi is a range split
            let i = cell.binary_search(&d.lo).unwrap();
            let j = cell.binary_search(&d.hi).unwrap();
            let inner: Vec<Vertex> = cell[i..=j].to_vec();
            let outer: Vec<Vertex> = cell[..=i].iter().chain(&cell[j..]).copied().collect();
            cells[k] = inner;
            cells.push(outer);
        }
        let mut out: Vec<Subpolygon> = cells.into_iter().map(|mut v| {
            v.sort_unstable();
            Subpolygon { vertices: v }
        }).collect();
        out.sort();
        out
    }

    /// The dissection with one member removed.
    pub fn without(&self, d: Diagonal) -> Dissection {
        Dissection { n: self.n, diagonals: self.diagonals.iter().copied().filter(|e| *e != d).collect() }
    }
}

/// Three or more vertices of an ambient polygon with the induced cyclic
/// order. Stored sorted, i.e. in cyclic order starting at the smallest label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subpolygon {
    vertices: Vec<Vertex>,
}

impl Subpolygon {
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self> {
        let raw: Vec<Vertex> = vertices.into_iter().collect();
        let set: BTreeSet<Vertex> = raw.iter().copied().collect();
        if set.len() != raw.len() || set.len() < 3 {
            return Err(FriezeError::NotSubpolygon(raw));
        }
        Ok(Subpolygon { vertices: set.into_iter().collect() })
    }

    pub fn whole(polygon: &Polygon) -> Self {
        Subpolygon { vertices: polygon.vertices().collect() }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn contains_diagonal(&self, d: Diagonal) -> bool {
        self.contains(d.lo) && self.contains(d.hi)
    }

    /// All diagonals between vertices of the subpolygon, lexicographic.
    pub fn diagonals(&self) -> impl Iterator<Item = Diagonal> + '_ {
        let v = &self.vertices;
        (0..v.len()).flat_map(move |a| (a + 1..v.len()).map(move |b| Diagonal { lo: v[a], hi: v[b] }))
    }

    /// Whether `d` joins cyclic neighbours of the subpolygon.
    pub fn is_edge(&self, d: Diagonal) -> bool {
        Self::adjacent_in(&self.vertices, d)
    }

    pub fn edges(&self) -> impl Iterator<Item = Diagonal> + '_ {
        let v = &self.vertices;
        (0..v.len()).map(move |k| Diagonal::new(v[k], v[(k + 1) % v.len()]))
    }

    fn adjacent_in(sorted: &[Vertex], d: Diagonal) -> bool {
        let (Ok(i), Ok(j)) = (sorted.binary_search(&d.lo), sorted.binary_search(&d.hi)) else {
            return false;
        };
        j == i + 1 || (i == 0 && j == sorted.len() - 1)
    }

    /// The subpolygon as a standalone polygon on labels `0..len()`.
    pub fn as_polygon(&self) -> Polygon {
        Polygon { n: self.vertices.len() }
    }

    /// Local label of an ambient vertex.
    pub fn local(&self, v: Vertex) -> Option<Vertex> {
        self.vertices.binary_search(&v).ok()
    }

    /// Ambient label of a local vertex.
    pub fn ambient(&self, local: Vertex) -> Vertex {
        self.vertices[local]
    }

    pub fn local_diagonal(&self, d: Diagonal) -> Option<Diagonal> {
        Some(Diagonal::new(self.local(d.lo)?, self.local(d.hi)?))
    }

    pub fn ambient_diagonal(&self, d: Diagonal) -> Diagonal {
        Diagonal::new(self.ambient(d.lo), self.ambient(d.hi))
    }
}

impl fmt::Display for Subpolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vertices)
    }
}
