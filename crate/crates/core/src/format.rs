//! JSON documents.
//!
//! ```json
//! {
//!   "n": 9,
//!   "semifield": "rational",
//!   "dissection": [[1, 6], [2, 5]],
//!   "values": {"0-1": "1", "0-2": "1", "…": "…"},
//!   "pieces": [{"vertices": [2, 3, 4, 5], "values": {"2-3": "1", "…": "…"}}],
//!   "from": 4,
//!   "to": 0
//! }
//! ```
//!
//! Only `n` is required. Dissection pairs may be given in either order. A piece
//! is either `{"vertices": [...], "values": {...}}` or a bare values object, in
//! which case its cell is the set of endpoints of its keys.

use serde::Deserialize;
use serde_json::{Map, Value};

use crate::error::{FriezeError, Result};
use crate::frieze::{DiagonalMap, Piece};
use crate::polygon::{Diagonal, Dissection, Polygon, Subpolygon, Vertex};
use crate::semifield::{PositiveRational, Semifield, TropicalInt};

pub const SEMIFIELDS: [&str; 2] = [PositiveRational::NAME, TropicalInt::NAME];

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Raw {
    n: usize,
    semifield: Option<String>,
    #[serde(default)]
    dissection: Vec<(Vertex, Vertex)>,
    values: Option<Map<String, Value>>,
    pieces: Option<Vec<Value>>,
    from: Option<Vertex>,
    to: Option<Vertex>,
}

/// A validated input document. Values stay as raw JSON until a semifield is
/// chosen.
#[derive(Debug, Clone)]
pub struct Document {
    pub polygon: Polygon,
    pub dissection: Dissection,
    semifield: Option<String>,
    values: Option<Map<String, Value>>,
    pieces: Option<Vec<Value>>,
    pub from: Option<Vertex>,
    pub to: Option<Vertex>,
}

impl Document {
    pub fn parse(text: &str) -> Result<Self> {
        let raw: Raw = serde_json::from_str(text).map_err(|e| FriezeError::Schema(e.to_string()))?;
        let polygon = Polygon::new(raw.n)?;
        let dissection = Dissection::from_pairs(&polygon, &raw.dissection)?;
        if let Some(name) = &raw.semifield {
            if !SEMIFIELDS.contains(&name.as_str()) {
                return Err(FriezeError::Schema(format!(
                    "unknown semifield {name:?}, expected one of {SEMIFIELDS:?}"
                )));
            }
        }
        for v in [raw.from, raw.to].into_iter().flatten() {
            polygon.check_vertex(v)?;
        }
        Ok(Document {
            polygon,
            dissection,
            semifield: raw.semifield,
            values: raw.values,
            pieces: raw.pieces,
            from: raw.from,
            to: raw.to,
        })
    }

    /// The declared semifield, `"rational"` when absent.
    pub fn semifield(&self) -> &str {
        self.semifield.as_deref().unwrap_or(PositiveRational::NAME)
    }

    pub fn has_values(&self) -> bool {
        self.values.is_some()
    }

    pub fn has_pieces(&self) -> bool {
        self.pieces.is_some()
    }

    fn expect_semifield<K: Semifield>(&self) -> Result<()> {
        if self.semifield() != K::NAME {
            return Err(FriezeError::SemifieldMismatch {
                expected: K::NAME.to_string(),
                found: self.semifield().to_string(),
            });
        }
        Ok(())
    }

    /// The full map under `"values"`, if present.
    pub fn values<K: Semifield>(&self) -> Result<Option<DiagonalMap<K>>> {
        self.expect_semifield::<K>()?;
        let Some(values) = &self.values else { return Ok(None) };
        let pairs = parse_values::<K>(&self.polygon, values)?;
        DiagonalMap::from_values(self.polygon, pairs).map(Some)
    }

    /// The pieces under `"pieces"`, if present.
    pub fn pieces<K: Semifield>(&self) -> Result<Option<Vec<Piece<K>>>> {
        self.expect_semifield::<K>()?;
        let Some(pieces) = &self.pieces else { return Ok(None) };
        pieces.iter().map(|p| parse_piece(&self.polygon, p)).collect::<Result<Vec<_>>>().map(Some)
    }
}

fn parse_values<K: Semifield>(polygon: &Polygon, values: &Map<String, Value>) -> Result<Vec<(Diagonal, K)>> {
    values
        .iter()
        .map(|(key, value)| {
            let d = polygon.check_diagonal(Diagonal::parse_key(key)?)?;
            let v = K::from_json(value).map_err(|e| match e {
                FriezeError::InvalidValue(msg) => FriezeError::InvalidValue(format!("{key}: {msg}")),
                other => other,
            })?;
            Ok((d, v))
        })
        .collect()
}

fn parse_piece<K: Semifield>(polygon: &Polygon, piece: &Value) -> Result<Piece<K>> {
    let schema = |msg: &str| FriezeError::Schema(format!("piece: {msg}"));
    let obj = piece.as_object().ok_or_else(|| schema("expected an object"))?;
    if let Some(values) = obj.get("values") {
        if let Some(key) = obj.keys().find(|k| *k != "values" && *k != "vertices") {
            return Err(schema(&format!("unknown field {key:?}")));
        }
        let values = values.as_object().ok_or_else(|| schema("\"values\" must be an object"))?;
        let pairs = parse_values::<K>(polygon, values)?;
        match obj.get("vertices") {
            Some(vertices) => {
                let vertices: Vec<Vertex> = serde_json::from_value(vertices.clone())
                    .map_err(|_| schema("\"vertices\" must be an array of vertex numbers"))?;
                for &v in &vertices {
                    polygon.check_vertex(v)?;
                }
                Piece::new(Subpolygon::new(vertices)?, pairs)
            }
            None => Piece::from_values(pairs),
        }
    } else {
        Piece::from_values(parse_values::<K>(polygon, obj)?)
    }
}

fn dissection_json(dissection: &Dissection) -> Value {
    dissection.diagonals().iter().map(|d| Value::from(vec![d.lo(), d.hi()])).collect()
}

fn values_json<'a, K: Semifield>(values: impl Iterator<Item = (Diagonal, &'a K)>) -> Value {
    Value::Object(values.map(|(d, v)| (d.key(), v.to_json())).collect())
}

/// `{"n", "semifield", "dissection", "values"}` with every key present, in
/// lexicographic order of `(i, j)`.
pub fn map_to_json<K: Semifield>(f: &DiagonalMap<K>, dissection: &Dissection) -> Value {
    let mut out = Map::new();
    out.insert("n".into(), Value::from(f.polygon().n()));
    out.insert("semifield".into(), Value::from(K::NAME));
    out.insert("dissection".into(), dissection_json(dissection));
    out.insert("values".into(), values_json(f.iter()));
    Value::Object(out)
}

pub fn piece_to_json<K: Semifield>(piece: &Piece<K>) -> Value {
    let mut out = Map::new();
    out.insert("vertices".into(), Value::from(piece.cell().vertices().to_vec()));
    out.insert("values".into(), values_json(piece.iter()));
    Value::Object(out)
}

/// A glue input document.
pub fn pieces_to_json<K: Semifield>(polygon: &Polygon, dissection: &Dissection, pieces: &[Piece<K>]) -> Value {
    let mut out = Map::new();
    out.insert("n".into(), Value::from(polygon.n()));
    out.insert("semifield".into(), Value::from(K::NAME));
    out.insert("dissection".into(), dissection_json(dissection));
    out.insert("pieces".into(), pieces.iter().map(piece_to_json).collect());
    Value::Object(out)
}
