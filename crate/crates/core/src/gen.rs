//! Seeded random instances for property campaigns.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::frieze::{glue_many, DiagonalMap, Piece};
use crate::polygon::{Diagonal, Dissection, Polygon, Subpolygon};
use crate::semifield::{PositiveRational, Semifield, TropicalInt};

/// A uniformly shuffled greedy dissection with `size` diagonals, capped at
/// `n - 3`.
pub fn random_dissection<R: Rng + ?Sized>(polygon: &Polygon, size: usize, rng: &mut R) -> Dissection {
    let mut pool: Vec<Diagonal> = polygon.internal_diagonals().collect();
    pool.shuffle(rng);
    let mut chosen: Vec<Diagonal> = Vec::new();
    for d in pool {
        if chosen.len() == size {
            break;
        }
        if !chosen.iter().any(|c| c.crosses(&d)) {
            chosen.push(d);
        }
    }
    Dissection::new(polygon, chosen).expect("pairwise non-crossing internal diagonals")
}

/// A maximal greedy dissection is always a triangulation.
pub fn random_triangulation<R: Rng + ?Sized>(polygon: &Polygon, rng: &mut R) -> Dissection {
    random_dissection(polygon, polygon.n().saturating_sub(3), rng)
}

/// `p/q` with `1 <= p, q <= max`.
pub fn random_rational<R: Rng + ?Sized>(rng: &mut R, max: u64) -> PositiveRational {
    PositiveRational::new(rng.gen_range(1..=max), rng.gen_range(1..=max)).expect("positive")
}

pub fn random_tropical<R: Rng + ?Sized>(rng: &mut R, radius: i64) -> TropicalInt {
    TropicalInt::new(rng.gen_range(-radius..=radius))
}

/// Independent values on every diagonal of `cell`.
pub fn random_piece<K: Semifield, R: Rng + ?Sized>(
    cell: &Subpolygon,
    rng: &mut R,
    mut value: impl FnMut(&mut R) -> K,
) -> Piece<K> {
    Piece::from_fn(cell.clone(), |_| value(rng))
}

/// Random pieces on the cells of `dissection`, agreeing on shared diagonals:
/// the restrictions of one map with independent values.
pub fn random_pieces<K: Semifield, R: Rng + ?Sized>(
    dissection: &Dissection,
    rng: &mut R,
    mut value: impl FnMut(&mut R) -> K,
) -> Vec<Piece<K>> {
    let seed = DiagonalMap::from_fn(dissection.polygon(), |_| value(rng));
    dissection.cells().iter().map(|c| seed.restrict(c)).collect()
}

/// A frieze on `cell`, glued from triangles along a random triangulation of
/// the cell. Edges and triangulation diagonals take their values from `seed`.
fn frieze_piece_from<K: Semifield, R: Rng + ?Sized>(cell: &Subpolygon, seed: &DiagonalMap<K>, rng: &mut R) -> Piece<K> {
    let local = cell.as_polygon();
    let triangulation = random_triangulation(&local, rng);
    let local_seed = DiagonalMap::from_fn(local, |d| seed.get(cell.ambient_diagonal(d)).clone());
    let triangles: Vec<Piece<K>> = triangulation.cells().iter().map(|t| local_seed.restrict(t)).collect();
    let f = glue_many(&local, &triangulation, &triangles).expect("triangles always glue");
    Piece::new(cell.clone(), f.iter().map(|(d, v)| (cell.ambient_diagonal(d), v.clone())))
        .expect("covers the cell")
}

/// A random frieze on `cell`.
pub fn random_frieze_piece<K: Semifield, R: Rng + ?Sized>(
    cell: &Subpolygon,
    rng: &mut R,
    mut value: impl FnMut(&mut R) -> K,
) -> Piece<K> {
    let ambient = Polygon::new(cell.vertices()[cell.len() - 1] + 1).expect("three or more vertices");
    let seed = DiagonalMap::from_fn(ambient, |_| value(rng));
    frieze_piece_from(cell, &seed, rng)
}

/// One random frieze per cell of `dissection`, agreeing on shared diagonals.
pub fn random_frieze_pieces<K: Semifield, R: Rng + ?Sized>(
    dissection: &Dissection,
    rng: &mut R,
    mut value: impl FnMut(&mut R) -> K,
) -> Vec<Piece<K>> {
    let seed = DiagonalMap::from_fn(dissection.polygon(), |_| value(rng));
    dissection.cells().iter().map(|c| frieze_piece_from(c, &seed, rng)).collect()
}
