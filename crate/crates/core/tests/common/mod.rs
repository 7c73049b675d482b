#![allow(dead_code)]

use std::collections::BTreeSet;

use frieze_core::tpath::{is_tpath, tpaths_with_prefix, PrefixConstraint::*};
use frieze_core::{enumerate_tpaths, tpath_weight, Semifield};
use frieze_core::{glue_many, DiagonalMap, Diagonal, Dissection, Piece, Polygon, PositiveRational, Subpolygon, TPath, TropicalInt, Vertex};

pub type Q = PositiveRational;
pub type T = TropicalInt;

pub fn q(p: u64, d: u64) -> Q {
    Q::new(p, d).unwrap()
}

pub fn t(v: i64) -> T {
    T::new(v)
}

/// The 9-gon with `D = {{1,6},{2,5}}` and the weak frieze glued from trivial
/// pieces.
pub fn nine_gon() -> (Polygon, Dissection, DiagonalMap<Q>) {
    let p = Polygon::new(9).unwrap();
    let d = Dissection::from_pairs(&p, &[(1, 6), (2, 5)]).unwrap();
    let pieces: Vec<Piece<Q>> = d.cells().into_iter().map(Piece::trivial).collect();
    let f = glue_many(&p, &d, &pieces).unwrap();
    (p, d, f)
}

pub fn crossing_count(d: &Dissection, from: Vertex, to: Vertex) -> usize {
    d.crossing(Diagonal::new(from, to)).count()
}

/// Every vertex sequence `(from, …, to)` with at most `2k + 2` entries, where
/// `k` counts the dissection diagonals crossing `{from, to}`, filtered through
/// the literal validator.
pub fn brute_force_tpaths(p: &Polygon, d: &Dissection, from: Vertex, to: Vertex) -> Vec<Vec<Vertex>> {
    let n = p.n();
    let max_len = 2 * crossing_count(d, from, to) + 2;
    let mut out = Vec::new();
    for len in 2..=max_len {
        let inner = len - 2;
        let mut seq = vec![from; len];
        seq[len - 1] = to;
        let mut digits = vec![0usize; inner];
        loop {
            seq[1..len - 1].copy_from_slice(&digits);
            if is_tpath(p, d, &seq, from, to).unwrap() {
                out.push(seq.clone());
            }
            // odometer over n^inner interior choices
            let mut k = 0;
            while k < inner {
                digits[k] += 1;
                if digits[k] < n {
                    break;
                }
                digits[k] = 0;
                k += 1;
            }
            if k == inner {
                break;
            }
        }
    }
    out.sort();
    out
}

pub fn vertex_lists(paths: &[TPath]) -> Vec<Vec<Vertex>> {
    paths.iter().map(|p| p.vertices().to_vec()).collect()
}

/// An ear: a cell with exactly one dissection diagonal `{ζ, η}` on its
/// boundary, whose vertices run anticlockwise from `ζ` to `η`.
#[derive(Debug, Clone)]
pub struct Ear {
    pub zeta: Vertex,
    pub eta: Vertex,
    /// `V₁`, the ear itself.
    pub ear: Subpolygon,
    /// `V₂`, the rest of the polygon.
    pub far: Subpolygon,
    /// `D₂`: the dissection without `{ζ, η}`, as diagonals of the ambient
    /// polygon.
    pub rest: Dissection,
}

impl Ear {
    pub fn d(&self) -> Diagonal {
        Diagonal::new(self.zeta, self.eta)
    }

    /// `U₁ = {ε | ζ < ε < η}`
    pub fn u1(&self, p: &Polygon) -> Vec<Vertex> {
        p.open_arc(self.zeta, self.eta)
    }

    /// `U₂ = {ε | η < ε < ζ}`
    pub fn u2(&self, p: &Polygon) -> Vec<Vertex> {
        p.open_arc(self.eta, self.zeta)
    }

    /// `D₂` in the local labels of `V₂`.
    pub fn local_rest(&self) -> Dissection {
        let local = self.far.as_polygon();
        let diagonals = self.rest.diagonals().iter().map(|d| self.far.local_diagonal(*d).expect("D₂ lies in V₂"));
        Dissection::new(&local, diagonals).unwrap()
    }
}

pub fn ears(p: &Polygon, d: &Dissection) -> Vec<Ear> {
    let mut out = Vec::new();
    for cell in d.cells() {
        let sides: Vec<Diagonal> = cell.edges().filter(|e| d.contains(*e)).collect();
        if sides.len() != 1 {
            continue;
        }
        let side = sides[0];
        let (zeta, eta) = if cell.vertices() == p.closed_arc(side.lo(), side.hi()).as_slice() {
            (side.lo(), side.hi())
        } else {
            (side.hi(), side.lo())
        };
        let mut arc = p.closed_arc(zeta, eta);
        arc.sort();
        assert_eq!(cell.vertices(), arc.as_slice(), "ear spans the arc from ζ to η");
        out.push(Ear {
            zeta,
            eta,
            ear: cell,
            far: Subpolygon::new(p.closed_arc(eta, zeta)).unwrap(),
            rest: d.without(side),
        });
    }
    out
}

/// `R(α, ζ, π₃, …) = (η, ζ, π₃, …)`
pub fn r_map(ear: &Ear, path: &[Vertex]) -> Vec<Vertex> {
    let mut out = path.to_vec();
    out[0] = ear.eta;
    out
}

/// `S(α, ζ, η, π₄, …) = (η, π₄, …)`
pub fn s_map(path: &[Vertex]) -> Vec<Vertex> {
    path[2..].to_vec()
}

pub fn set(paths: &[TPath]) -> BTreeSet<Vec<Vertex>> {
    paths.iter().map(|p| p.vertices().to_vec()).collect()
}

/// Checks every ear lemma on one configuration and returns the number of
/// `(α, β)` pairs examined.
pub fn check_ear<K: Semifield>(p: &Polygon, d: &Dissection, ear: &Ear, f: &DiagonalMap<K>) -> usize {
    let (zeta, eta) = (ear.zeta, ear.eta);
    let mut pairs = 0;
    for &alpha in &ear.u1(p) {
        for &beta in &ear.u2(p) {
            pairs += 1;
            let all = enumerate_tpaths(p, d, alpha, beta).unwrap();
            assert!(all.iter().all(|t| t.vertices()[1] == zeta || t.vertices()[1] == eta));

            let r_domain = tpaths_with_prefix(p, d, alpha, beta, &[Is(alpha), Is(zeta), IsNot(eta)]).unwrap();
            for t in &r_domain {
                assert!(t.vertices()[1..].iter().all(|&v| p.in_open_arc(v, eta, zeta) || v == zeta));
            }

            let r_range = tpaths_with_prefix(p, d, eta, beta, &[Is(eta), Is(zeta)]).unwrap();
            let image: BTreeSet<Vec<Vertex>> = r_domain.iter().map(|t| r_map(ear, t.vertices())).collect();
            assert_eq!(image.len(), r_domain.len());
            assert_eq!(image, set(&r_range));
            let r_factor = f.at(alpha, zeta).div(f.at(eta, zeta));
            for t in &r_domain {
                let image = TPath::new(p, d, r_map(ear, t.vertices())).unwrap().unwrap();
                assert_eq!(r_factor.mul(&tpath_weight(f, &image)), tpath_weight(f, t));
            }

            let s_domain = tpaths_with_prefix(p, d, alpha, beta, &[Is(alpha), Is(zeta), Is(eta)]).unwrap();
            let s_range = tpaths_with_prefix(p, d, eta, beta, &[Is(eta), IsNot(zeta)]).unwrap();
            let image: BTreeSet<Vec<Vertex>> = s_domain.iter().map(|t| s_map(t.vertices())).collect();
            assert_eq!(image.len(), s_domain.len());
            assert_eq!(image, set(&s_range));
            let s_factor = f.at(alpha, zeta).div(f.at(zeta, eta));
            for t in &s_domain {
                let image = TPath::new(p, d, s_map(t.vertices())).unwrap().unwrap();
                assert_eq!(s_factor.mul(&tpath_weight(f, &image)), tpath_weight(f, t));
            }
        }
    }
    pairs
}

/// T-paths between vertices of `V₂` are those of `(P₂, D₂)`.
pub fn check_far_side(p: &Polygon, d: &Dissection, ear: &Ear) {
    let local = ear.far.as_polygon();
    let local_d = ear.local_rest();
    for a in local.vertices() {
        for b in local.vertices().filter(|b| *b != a) {
            let inside: BTreeSet<Vec<Vertex>> = enumerate_tpaths(&local, &local_d, a, b)
                .unwrap()
                .iter()
                .map(|t| t.vertices().iter().map(|&v| ear.far.ambient(v)).collect())
                .collect();
            let outside = enumerate_tpaths(p, d, ear.far.ambient(a), ear.far.ambient(b)).unwrap();
            assert_eq!(set(&outside), inside);
        }
    }
}

