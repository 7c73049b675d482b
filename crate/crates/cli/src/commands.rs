use std::fmt::Write as _;
use std::io::Read as _;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rayon::ThreadPool;
use serde_json::{json, Map, Value};

use frieze_core::format::{map_to_json, Document};
use frieze_core::frieze::{frieze_violation, weak_frieze_violation};
use frieze_core::gen::{random_dissection, random_pieces, random_rational, random_tropical};
use frieze_core::pattern::{emit_json, emit_svg, emit_text, unimodular_violation, SvgOverlay};
use frieze_core::{
    cc_frieze, enumerate_tpaths, glue_many, render_pattern, tpath_sum, tpath_weight, DiagonalMap, Diagonal,
    Dissection, FriezeError, PositiveRational, Semifield, TropicalInt, Vertex,
};

use crate::{CheckArgs, CommonArgs, Failure, Format, FuzzArgs, PatternArgs, SemifieldName, TpathsArgs};

type Outcome = Result<String, Failure>;

fn read_document(path: &Path) -> Result<Document, Failure> {
    let io = |e: std::io::Error| Failure::Io { path: path.to_path_buf(), message: e.to_string() };
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(io)?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(io)?
    };
    Ok(Document::parse(&text)?)
}

/// `--jobs 0` uses every core.
fn pool(jobs: usize) -> Result<ThreadPool, Failure> {
    rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| Failure::Usage(e.to_string()))
}

fn compact(value: &Value) -> String {
    value.to_string() + "\n"
}

macro_rules! by_semifield {
    ($doc:expr, $run:ident($($arg:expr),*)) => {
        match $doc.semifield() {
            "tropical" => $run::<TropicalInt>($($arg),*),
            _ => $run::<PositiveRational>($($arg),*),
        }
    };
}

fn require<T>(value: Option<T>, what: &str) -> Result<T, Failure> {
    value.ok_or_else(|| FriezeError::Schema(format!("the document has no {what:?}")).into())
}

/// Full values, or the gluing of the pieces when only pieces are given.
fn values_or_glued<K: Semifield>(doc: &Document) -> Result<DiagonalMap<K>, Failure> {
    if let Some(f) = doc.values::<K>()? {
        return Ok(f);
    }
    let pieces = require(doc.pieces::<K>()?, "values")?;
    Ok(glue_many(&doc.polygon, &doc.dissection, &pieces)?)
}

fn pair(d: Diagonal) -> Value {
    json!([d.lo(), d.hi()])
}

fn render_map<K: Semifield>(f: &DiagonalMap<K>, d: &Dissection, format: Format, repeat: usize) -> String {
    match format {
        Format::Json => compact(&map_to_json(f, d)),
        Format::Text => emit_text(&render_pattern(f), repeat),
        Format::Svg => emit_svg(&f.polygon(), d, &SvgOverlay { values: Some(f), ..Default::default() }),
    }
}

pub fn tpaths(args: &TpathsArgs) -> Outcome {
    let doc = read_document(&args.common.input)?;
    let values = match &args.values {
        Some(path) => {
            let other = read_document(path)?;
            if other.polygon != doc.polygon {
                return Err(FriezeError::Schema(format!(
                    "values document is for a {}-gon, input for a {}-gon",
                    other.polygon.n(),
                    doc.polygon.n()
                ))
                .into());
            }
            Some(other)
        }
        None => None,
    };
    let source = values.as_ref().unwrap_or(&doc);
    by_semifield!(source, tpaths_in(args, &doc, source))
}

fn tpaths_in<K: Semifield>(args: &TpathsArgs, doc: &Document, source: &Document) -> Outcome {
    let from = require(args.from.or(doc.from), "from")?;
    let to = require(args.to.or(doc.to), "to")?;
    let (p, d) = (&doc.polygon, &doc.dissection);
    p.check_vertex(from)?;
    p.check_vertex(to)?;
    let f = source.values::<K>()?;
    let paths = enumerate_tpaths(p, d, from, to)?;
    let weights: Option<Vec<K>> = f.as_ref().map(|f| paths.iter().map(|t| tpath_weight(f, t)).collect());
    let sum = weights.as_ref().map(|w| K::sum(w).expect("at least one T-path"));

    match args.common.format {
        Format::Json => {
            let mut out = Map::new();
            out.insert("from".into(), json!(from));
            out.insert("to".into(), json!(to));
            out.insert("paths".into(), paths.iter().map(|t| json!(t.vertices())).collect());
            out.insert("count".into(), json!(paths.len()));
            if let (Some(weights), Some(sum)) = (&weights, &sum) {
                out.insert("semifield".into(), json!(K::NAME));
                out.insert("weights".into(), weights.iter().map(K::to_json).collect());
                out.insert("sum".into(), sum.to_json());
            }
            Ok(compact(&Value::Object(out)))
        }
        Format::Text => {
            let mut out = String::new();
            for (k, t) in paths.iter().enumerate() {
                match &weights {
                    Some(w) => writeln!(out, "{t} {}", w[k]),
                    None => writeln!(out, "{t}"),
                }
                .expect("writing to a string");
            }
            writeln!(out, "count {}", paths.len()).expect("writing to a string");
            if let Some(sum) = sum {
                writeln!(out, "sum {sum}").expect("writing to a string");
            }
            Ok(out)
        }
        Format::Svg => {
            let overlay = SvgOverlay { values: f.as_ref(), query: Some(Diagonal::new(from, to)), paths: &paths };
            Ok(emit_svg(p, d, &overlay))
        }
    }
}

pub fn glue(args: &CommonArgs) -> Outcome {
    let doc = read_document(&args.input)?;
    by_semifield!(doc, glue_in(args, &doc))
}

fn glue_in<K: Semifield>(args: &CommonArgs, doc: &Document) -> Outcome {
    let pieces = require(doc.pieces::<K>()?, "pieces")?;
    let f = glue_many(&doc.polygon, &doc.dissection, &pieces)?;
    Ok(render_map(&f, &doc.dissection, args.format, 1))
}

/// First ordered pair whose value differs from its T-path sum, searched in
/// parallel but reported in the sequential order.
fn tpath_witness<K: Semifield>(f: &DiagonalMap<K>, d: &Dissection, pool: &ThreadPool) -> Option<(Vertex, Vertex, K, K)> {
    let p = f.polygon();
    let pairs: Vec<(Vertex, Vertex)> =
        p.vertices().flat_map(|a| p.vertices().filter(move |b| *b != a).map(move |b| (a, b))).collect();
    pool.install(|| {
        pairs
            .par_iter()
            .filter_map(|&(a, b)| {
                let sum = tpath_sum(f, d, a, b).expect("valid pair");
                (sum != *f.at(a, b)).then(|| (a, b, f.at(a, b).clone(), sum))
            })
            .find_first(|_| true)
    })
}

fn diagonal_check(violation: Option<(Diagonal, Diagonal)>) -> Value {
    match violation {
        None => json!({ "holds": true }),
        Some((x, y)) => json!({ "holds": false, "witness": [pair(x), pair(y)] }),
    }
}

pub fn check(args: &CheckArgs) -> Outcome {
    let doc = read_document(&args.common.input)?;
    by_semifield!(doc, check_in(args, &doc))
}

fn check_in<K: Semifield>(args: &CheckArgs, doc: &Document) -> Outcome {
    let f = require(doc.values::<K>()?, "values")?;
    let d = &doc.dissection;
    let pool = pool(args.common.jobs)?;
    let any = args.weak || args.frieze || args.tpath || args.theorem_a || args.unimodular;
    let (weak, frieze, tpath) = if any { (args.weak, args.frieze, args.tpath) } else { (true, true, true) };

    let mut report = Map::new();
    report.insert("n".into(), json!(f.polygon().n()));
    report.insert("semifield".into(), json!(K::NAME));
    if weak {
        report.insert("weak".into(), diagonal_check(weak_frieze_violation(&f, d)));
    }
    if frieze {
        report.insert("frieze".into(), diagonal_check(frieze_violation(&f)));
    }
    let witness = (tpath || args.theorem_a).then(|| tpath_witness(&f, d, &pool));
    if tpath {
        let value = match witness.as_ref().expect("computed above") {
            None => json!({ "holds": true }),
            Some((a, b, value, sum)) => json!({
                "holds": false,
                "witness": { "from": a, "to": b, "value": value.to_json(), "sum": sum.to_json() }
            }),
        };
        report.insert("tpath".into(), value);
    }
    if args.theorem_a {
        let weak = weak_frieze_violation(&f, d).is_none();
        let tpath = witness.as_ref().expect("computed above").is_none();
        report.insert("theorem_a".into(), json!({ "weak": weak, "tpath": tpath, "agree": weak == tpath }));
    }
    if args.unimodular {
        let value = match unimodular_violation(&f)? {
            None => json!({ "holds": true }),
            Some((i, j)) => json!({ "holds": false, "witness": [i, j] }),
        };
        report.insert("unimodular".into(), value);
    }

    match args.common.format {
        Format::Json => Ok(compact(&Value::Object(report))),
        Format::Text => {
            let mut out = String::new();
            for (name, value) in report.iter().skip(2) {
                let line = match value.get("holds") {
                    Some(holds) => match value.get("witness") {
                        Some(w) => format!("{name}: {holds} {w}"),
                        None => format!("{name}: {holds}"),
                    },
                    None => format!("{name}: {value}"),
                };
                out.push_str(&line);
                out.push('\n');
            }
            Ok(out)
        }
        Format::Svg => Err(Failure::Usage("check has no SVG output".into())),
    }
}

pub fn pattern(args: &PatternArgs) -> Outcome {
    let doc = read_document(&args.common.input)?;
    by_semifield!(doc, pattern_in(args, &doc))
}

fn pattern_in<K: Semifield>(args: &PatternArgs, doc: &Document) -> Outcome {
    let f = values_or_glued::<K>(doc)?;
    Ok(match args.common.format {
        Format::Json => compact(&emit_json(&render_pattern(&f))),
        format => render_map(&f, &doc.dissection, format, args.repeat_columns),
    })
}

pub fn cc(args: &PatternArgs) -> Outcome {
    let doc = read_document(&args.common.input)?;
    by_semifield!(doc, cc_in(args, &doc))
}

fn cc_in<K: Semifield>(args: &PatternArgs, doc: &Document) -> Outcome {
    let f = cc_frieze::<K>(&doc.polygon, &doc.dissection)?;
    Ok(render_map(&f, &doc.dissection, args.common.format, args.repeat_columns))
}

pub fn fuzz(args: &FuzzArgs) -> Outcome {
    if args.max_n < 3 {
        return Err(Failure::Usage(format!("--max-n must be at least 3, got {}", args.max_n)));
    }
    match args.semifield {
        SemifieldName::Rational => fuzz_in(args, |r| random_rational(r, 6), |v| v.add(&PositiveRational::one())),
        SemifieldName::Tropical => fuzz_in(args, |r| random_tropical(r, 6), |v| TropicalInt::new(v.value() + 1)),
    }
}

/// Instances alternate between glued weak friezes and copies with one value
/// changed on a diagonal that crosses the dissection.
fn fuzz_in<K: Semifield>(
    args: &FuzzArgs,
    mut value: impl FnMut(&mut ChaCha8Rng) -> K,
    perturb: impl Fn(&K) -> K,
) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let mut instances = Vec::with_capacity(args.count);
    for k in 0..args.count {
        let n = rng.gen_range(3..=args.max_n);
        let p = frieze_core::Polygon::new(n)?;
        let d = random_dissection(&p, rng.gen_range(0..=n - 3), &mut rng);
        let pieces = random_pieces(&d, &mut rng, &mut value);
        let mut f = glue_many(&p, &d, &pieces)?;
        let mut perturbed = None;
        if k % 2 == 1 {
            let forced: Vec<Diagonal> = p.internal_diagonals().filter(|x| d.crosses_any(*x)).collect();
            if let Some(&x) = forced.choose(&mut rng) {
                f.set(x, perturb(f.get(x)));
                perturbed = Some(x);
            }
        }
        instances.push((d, f, perturbed));
    }

    let pool = pool(args.jobs)?;
    let reports: Vec<_> = pool.install(|| {
        instances.par_iter().map(|(d, f, _)| frieze_core::verify_theorem_a(f, d)).collect()
    });
    let weak = reports.iter().filter(|r| r.weak).count();
    let disagreements: Vec<Value> = instances
        .iter()
        .zip(&reports)
        .enumerate()
        .filter(|(_, (_, r))| !r.agree)
        .map(|(k, ((d, f, x), r))| {
            json!({
                "index": k,
                "n": f.polygon().n(),
                "dissection": d.diagonals().iter().map(|e| pair(*e)).collect::<Vec<_>>(),
                "perturbed": x.map(pair),
                "report": r,
            })
        })
        .collect();
    Ok(compact(&json!({
        "seed": args.seed,
        "count": args.count,
        "semifield": K::NAME,
        "max_n": args.max_n,
        "weak": weak,
        "not_weak": args.count - weak,
        "agree": args.count - disagreements.len(),
        "disagreements": disagreements,
    })))
}
