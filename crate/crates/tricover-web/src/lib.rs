//! Browser bindings for the demo page in `www/`. Every export takes and
//! returns strings: instance text in the command-line file format, results as
//! JSON.

use num_traits::ToPrimitive;
use serde_json::{json, Value};
use tricover::cover3::{solve_report, Variant};
use tricover::geom::fmt_rational;
use tricover::io::{self, Document};
use tricover::kcenter::{rect_d3c_optimize, RadiusSearch};
use tricover::oracles::OracleBudget;
use tricover::reductions::{self, ReductionKind, Source};
use tricover::{gen, ExtScalar, Rational};
use wasm_bindgen::prelude::*;

fn err(msg: impl ToString) -> String {
    json!({ "status": "error", "error": msg.to_string() }).to_string()
}

fn f(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn ext(s: &ExtScalar) -> Value {
    match s {
        ExtScalar::Finite(r) => json!(f(r)),
        ExtScalar::NegInf => json!("-inf"),
        ExtScalar::PosInf => json!("inf"),
    }
}

/// Random planar instance as file text. `kind` is `rects`,
/// `weighted-rects`, `unit-squares` or `weighted-unit-squares`.
#[wasm_bindgen]
pub fn generate(kind: &str, n: usize, seed: u64) -> String {
    let mut rng = gen::rng(seed);
    let side = (n as i64).max(4);
    let inst = match kind {
        "rects" => gen::random_rects(&mut rng, n, false, 4 * side),
        "weighted-rects" => gen::random_rects(&mut rng, n, true, 4 * side),
        "unit-squares" => gen::random_unit_squares(&mut rng, n, false, side),
        "weighted-unit-squares" => gen::random_unit_squares(&mut rng, n, true, side),
        _ => return format!("# unknown kind {kind}\n"),
    };
    let weighted = inst.rects.iter().any(|r| r.weight.is_some());
    io::print_document(&Document { points: Some((2, inst.points)), ranges: Some((2, weighted, inst.rects)), ..Default::default() })
}

/// Planar points and rectangles of an instance as floats for drawing.
#[wasm_bindgen]
pub fn shapes(text: &str) -> String {
    let doc = match io::parse_document(text) {
        Ok(d) => d,
        Err(e) => return err(e),
    };
    let points: Vec<Value> = doc
        .points
        .iter()
        .flat_map(|p| p.1.iter())
        .filter(|p| p.dim() == 2)
        .map(|p| json!([f(&p.coords[0]), f(&p.coords[1])]))
        .collect();
    let rects: Vec<Value> = doc
        .ranges
        .iter()
        .flat_map(|r| r.2.iter())
        .filter(|r| r.sides.len() == 2)
        .map(|r| {
            json!({
                "id": r.id,
                "x": [ext(&r.sides[0].lo), ext(&r.sides[0].hi)],
                "y": [ext(&r.sides[1].lo), ext(&r.sides[1].hi)],
                "weight": r.weight.as_ref().map(fmt_rational),
            })
        })
        .collect();
    json!({ "status": "ok", "points": points, "rects": rects }).to_string()
}

/// Minimum-weight three-rectangle cover of the instance.
#[wasm_bindgen]
pub fn solve_cover3(text: &str, variant: &str) -> String {
    let doc = match io::parse_document(text) {
        Ok(d) => d,
        Err(e) => return err(e),
    };
    let Some((_, points)) = &doc.points else { return err("no points section") };
    let rects = doc.ranges.as_ref().map(|r| r.2.as_slice()).unwrap_or(&[]);
    let variant: Variant = match variant.parse() {
        Ok(v) => v,
        Err(e) => return err(e),
    };
    match solve_report(points, rects, variant, None) {
        Ok(rep) => {
            let stats = json!({ "variant": rep.variant.name(), "g": rep.g, "guesses": rep.guesses });
            match rep.solution {
                Some(s) => json!({
                    "status": "ok",
                    "weight": fmt_rational(&s.weight),
                    "witness": s.ids,
                    "provenance": s.provenance.name(),
                    "stats": stats,
                }),
                None => json!({ "status": "infeasible", "weight": null, "witness": [], "stats": stats }),
            }
            .to_string()
        }
        Err(e) => err(e),
    }
}

/// Optimal rectilinear discrete 3-center of the instance's points.
#[wasm_bindgen]
pub fn solve_d3c(text: &str) -> String {
    let doc = match io::parse_document(text) {
        Ok(d) => d,
        Err(e) => return err(e),
    };
    let Some((_, points)) = &doc.points else { return err("no points section") };
    if points.is_empty() {
        return err("no points");
    }
    match rect_d3c_optimize(points, None, RadiusSearch::SortedMatrix) {
        Ok(s) => json!({ "status": "ok", "radius": fmt_rational(&s.value), "witness": s.centers }).to_string(),
        Err(e) => err(e),
    }
}

/// Builds the `kind` reduction from a graph or hypergraph in file text and
/// checks it against both brute-force oracles.
#[wasm_bindgen]
pub fn verify_reduction(kind: &str, source_text: &str) -> String {
    let run = || -> tricover::Result<Value> {
        let doc = io::parse_document(source_text)?;
        let src = match (doc.graph, doc.hypergraph) {
            (Some(g), None) => Source::Graph(g),
            (None, Some(h)) => Source::Hypergraph(h),
            _ => return Err(tricover::Error::Invalid("need one graph or hypergraph section".into())),
        };
        let kind = ReductionKind::parse(kind, 2)?;
        let inst = reductions::generate(kind, &src)?;
        let budget = OracleBudget { max_subsets: 50_000_000, wall_clock: None, ..Default::default() };
        let rep = reductions::verify_reduction(&src, &inst, &budget)?;
        Ok(json!({
            "status": "ok",
            "agree": rep.agree,
            "source": rep.source_yes,
            "geometry": rep.geometry_yes,
            "points": inst.num_points(),
            "ranges": inst.ranges.len(),
        }))
    };
    match run() {
        Ok(v) => v.to_string(),
        Err(e) => err(e),
    }
}
