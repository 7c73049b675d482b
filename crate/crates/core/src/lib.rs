//! Friezes and weak friezes on dissected polygons over an arbitrary semifield,
//! the T-path formula, gluing along dissection diagonals, and frieze patterns.
//!
//! ```
//! use frieze_core::{cc_frieze, enumerate_tpaths, Dissection, Polygon, PositiveRational};
//!
//! let p = Polygon::new(5).unwrap();
//! let fan = Dissection::from_pairs(&p, &[(0, 2), (0, 3)]).unwrap();
//! let f = cc_frieze::<PositiveRational>(&p, &fan).unwrap();
//! assert_eq!(f.at(1, 4).to_string(), "3");
//! assert_eq!(enumerate_tpaths(&p, &fan, 1, 4).unwrap().len(), 3);
//! ```

pub mod error;
pub mod format;
pub mod frieze;
pub mod gen;
pub mod pattern;
pub mod polygon;
pub mod semifield;
pub mod tpath;

pub use error::{FriezeError, Result};
pub use frieze::{
    cc_frieze, glue_many, glue_many_in_order, glue_pair, is_frieze, is_weak_frieze, propagate, satisfies_tpath_formula,
    trivial_map, verify_theorem_a, DiagonalMap, Piece, TheoremAReport,
};
pub use pattern::{check_unimodular, render_pattern, PatternGrid};
pub use polygon::{Diagonal, Dissection, Polygon, Subpolygon, Vertex};
pub use semifield::{PositiveRational, Semifield, TropicalInt};
pub use tpath::{enumerate_tpaths, is_tpath, tpath_sum, tpath_weight, TPath};
