//! Command-line front end. `run` parses arguments, executes one command and
//! returns the exit code with the text for standard output.
//!
//! Exit codes: 0 success, 2 infeasible, 1 error.

use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::bench::{self, BenchConfig, CSV_HEADER};
use crate::cover3::{solve_report, Variant};
use crate::error::{Error, Result};
use crate::gen;
use crate::geom::{fmt_rational, parse_rational, PointD};
use crate::io::{self, Document};
use crate::kcenter::{rect_d3c_decide, rect_d3c_optimize, Metric, RadiusSearch};
use crate::oracles::{brute_cover_k, brute_discrete_kcenter, brute_maxcov, OracleBudget};
use crate::reductions::{self, pad_parts, ReductionInstance, ReductionKind, Source};
use crate::Rational;

/// Environment variable holding the default oracle budget in milliseconds.
pub const BUDGET_ENV: &str = "TRICOVER_BUDGET_MS";

#[derive(Parser, Debug)]
#[command(name = "tricover", version, about = "Exact size-3 rectangle cover, rectilinear 3-center and reduction workbench")]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Worker threads for the parallel solvers.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Wall-clock limit for brute-force oracles.
    #[arg(long, global = true)]
    budget_ms: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Minimum-weight cover by three rectangles.
    Cover3 {
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        variant: String,
        /// Grid parameter g.
        #[arg(long)]
        grid: Option<usize>,
        /// Also run the brute-force oracle and compare.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Rectilinear discrete 3-center in the plane.
    D3c {
        file: PathBuf,
        /// Candidate centers; defaults to the input points.
        #[arg(long)]
        supply: Option<PathBuf>,
        /// Decide this radius instead of optimizing.
        #[arg(long)]
        radius: Option<String>,
        /// sorted-matrix or sort-all.
        #[arg(long, default_value = "sorted-matrix")]
        search: String,
        #[arg(long)]
        oracle_check: bool,
    },
    /// Write a random instance or a reduction instance.
    Gen {
        #[arg(long)]
        kind: String,
        /// Source graph or hypergraph for reduction kinds.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 2)]
        kappa: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a reduction instance against its source with both oracles.
    Verify {
        #[arg(long)]
        kind: Option<String>,
        #[arg(long)]
        source: PathBuf,
        /// Instance written by `gen`; regenerated from the source when absent.
        #[arg(long)]
        instance: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        kappa: usize,
    },
    /// Brute-force reference solvers.
    Oracle {
        file: PathBuf,
        /// cover, kcenter or maxcov.
        #[arg(long, default_value = "cover")]
        problem: String,
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// linf or l2.
        #[arg(long, default_value = "linf")]
        metric: String,
    },
    /// Time a solver on seeded instances and print CSV.
    Bench {
        #[arg(long, default_value = "unit-unw")]
        variant: String,
        #[arg(long, value_delimiter = ',', default_value = "1024,2048,4096")]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        grid: Option<usize>,
        #[arg(long)]
        oracle_check: bool,
        /// Write the CSV here and print a JSON summary instead.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn ok(v: Value) -> Outcome {
    Outcome { code: 0, stdout: v.to_string() }
}

fn error_outcome(msg: String) -> Outcome {
    Outcome { code: 1, stdout: json!({ "status": "error", "error": msg }).to_string() }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { code: 0, stdout: e.to_string() };
            }
            return error_outcome(e.to_string());
        }
    };
    if let Some(t) = cli.threads {
        // Fails only when a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global();
    }
    let budget = budget(cli.budget_ms);
    match dispatch(cli.cmd, &budget) {
        Ok(o) => o,
        Err(e) => error_outcome(e.to_string()),
    }
}

fn budget(ms: Option<u64>) -> OracleBudget {
    let ms = ms.or_else(|| std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok()));
    OracleBudget {
        max_subsets: u128::MAX,
        wall_clock: ms.map(Duration::from_millis).or(OracleBudget::default().wall_clock),
        ..OracleBudget::default()
    }
}

fn read_doc(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))?;
    io::parse_document(&text)
}

fn write_out(path: &Path, text: &str) -> Result<()> {
    // Write to a sibling file first so readers never see a partial file.
    let tmp = path.with_extension("tmp~");
    std::fs::write(&tmp, text).map_err(|e| Error::Invalid(format!("{}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn points_of(doc: &Document) -> Result<&[PointD]> {
    doc.points.as_ref().map(|p| p.1.as_slice()).ok_or_else(|| Error::Invalid("file has no points section".into()))
}

fn rat_str(r: &Rational) -> Value {
    Value::String(fmt_rational(r))
}

fn dispatch(cmd: Cmd, budget: &OracleBudget) -> Result<Outcome> {
    match cmd {
        Cmd::Cover3 { file, variant, grid, oracle_check } => {
            let doc = read_doc(&file)?;
            let points = points_of(&doc)?;
            let rects = doc.ranges.as_ref().map(|r| r.2.as_slice()).unwrap_or(&[]);
            let variant: Variant = variant.parse()?;
            let rep = solve_report(points, rects, variant, grid)?;
            let mut stats = json!({
                "variant": rep.variant.name(),
                "g": rep.g,
                "guesses": rep.guesses,
                "unclassified": rep.unclassified,
                "pair_queries": rep.pair_queries,
            });
            let mut mismatch = false;
            if oracle_check {
                let weighted = rects.iter().any(|r| r.weight.is_some());
                let o = brute_cover_k(points, rects, 3, weighted, budget)?;
                let ow = o.as_ref().map(|x| x.1.clone());
                mismatch = ow != rep.solution.as_ref().map(|s| s.weight.clone());
                stats["oracle_weight"] = ow.as_ref().map_or(Value::Null, rat_str);
                stats["oracle_agree"] = Value::Bool(!mismatch);
            }
            let mut out = match &rep.solution {
                Some(s) => json!({
                    "status": "ok",
                    "weight": rat_str(&s.weight),
                    "witness": s.ids,
                    "provenance": s.provenance.name(),
                }),
                None => json!({ "status": "infeasible", "weight": Value::Null, "witness": [], "provenance": Value::Null }),
            };
            out["stats"] = stats;
            let code = if mismatch {
                out["status"] = json!("mismatch");
                1
            } else if rep.solution.is_none() {
                2
            } else {
                0
            };
            Ok(Outcome { code, stdout: out.to_string() })
        }
        Cmd::D3c { file, supply, radius, search, oracle_check } => {
            let doc = read_doc(&file)?;
            let demand = points_of(&doc)?;
            let sup_doc = supply.as_deref().map(read_doc).transpose()?;
            let sup = sup_doc.as_ref().map(points_of).transpose()?;
            let search = match search.as_str() {
                "sorted-matrix" => RadiusSearch::SortedMatrix,
                "sort-all" => RadiusSearch::SortAll,
                s => return Err(Error::Invalid(format!("unknown search '{s}'"))),
            };
            if let Some(r) = radius {
                let r = parse_rational(&r).ok_or_else(|| Error::Invalid(format!("'{r}' is not a rational")))?;
                let res = rect_d3c_decide(demand, sup, &r)?;
                return Ok(match res {
                    Some(c) => ok(json!({ "status": "ok", "radius": rat_str(&r), "witness": c, "provenance": "decide", "stats": {} })),
                    None => Outcome {
                        code: 2,
                        stdout: json!({ "status": "infeasible", "radius": rat_str(&r), "witness": [], "provenance": "decide", "stats": {} })
                            .to_string(),
                    },
                });
            }
            if demand.is_empty() {
                return Ok(ok(json!({ "status": "ok", "radius": "0", "witness": [], "provenance": "empty", "stats": {} })));
            }
            let sol = rect_d3c_optimize(demand, sup, search)?;
            let mut stats = json!({ "search": format!("{search:?}") });
            let mut code = 0;
            let mut status = "ok";
            if oracle_check && sup.is_none() {
                let o = brute_discrete_kcenter(demand, 3.min(demand.len()), Metric::Linf, budget)?;
                stats["oracle_radius"] = rat_str(&o.value);
                stats["oracle_agree"] = Value::Bool(o.value == sol.value);
                if o.value != sol.value {
                    code = 1;
                    status = "mismatch";
                }
            }
            Ok(Outcome {
                code,
                stdout: json!({
                    "status": status,
                    "radius": rat_str(&sol.value),
                    "witness": sol.centers,
                    "provenance": "optimize",
                    "stats": stats,
                })
                .to_string(),
            })
        }
        Cmd::Gen { kind, input, seed, n, kappa, out } => {
            let text = gen_text(&kind, input.as_deref(), seed, n, kappa)?;
            match out {
                Some(p) => {
                    write_out(&p, &text)?;
                    Ok(ok(json!({ "status": "ok", "kind": kind, "out": p.display().to_string() })))
                }
                None => Ok(Outcome { code: 0, stdout: text.trim_end().to_string() }),
            }
        }
        Cmd::Verify { kind, source, instance, kappa } => {
            let sdoc = read_doc(&source)?;
            let src = source_of(&sdoc)?;
            let idoc = instance.as_deref().map(read_doc).transpose()?;
            let kind_name = kind
                .or_else(|| idoc.as_ref().and_then(|d| d.meta("reduction").map(str::to_string)))
                .ok_or_else(|| Error::Invalid("no --kind and no reduction named in the instance".into()))?;
            let kappa = idoc.as_ref().and_then(|d| d.meta("kappa")).and_then(|k| k.parse().ok()).unwrap_or(kappa);
            let kind = ReductionKind::parse(&kind_name, kappa)?;
            let inst = match &idoc {
                Some(d) => instance_from_doc(kind, d)?,
                None => reductions::generate(kind, &src)?,
            };
            let rep = reductions::verify_reduction(&src, &inst, budget)?;
            let gv = match (&rep.geometry_value, &rep.geometry_ring_value) {
                (Some(v), _) => rat_str(v),
                (None, Some(q)) => Value::String(q.to_string()),
                _ => Value::Null,
            };
            Ok(ok(json!({
                "status": "ok",
                "agree": rep.agree,
                "kind": kind.name(),
                "source": rep.source_yes,
                "source_value": rep.source_value.as_ref().map_or(Value::Null, rat_str),
                "geometry": rep.geometry_yes,
                "geometry_value": gv,
                "threshold": rat_str(&inst.threshold),
                "stats": { "points": inst.num_points(), "ranges": inst.ranges.len() },
            })))
        }
        Cmd::Oracle { file, problem, k, metric } => {
            let doc = read_doc(&file)?;
            let points = points_of(&doc)?;
            let rects = doc.ranges.as_ref().map(|r| r.2.as_slice()).unwrap_or(&[]);
            match problem.as_str() {
                "cover" => {
                    let weighted = rects.iter().any(|r| r.weight.is_some());
                    Ok(match brute_cover_k(points, rects, k, weighted, budget)? {
                        Some((ids, w)) => ok(json!({ "status": "ok", "weight": rat_str(&w), "witness": ids, "provenance": "oracle", "stats": {} })),
                        None => Outcome {
                            code: 2,
                            stdout: json!({ "status": "infeasible", "weight": Value::Null, "witness": [], "provenance": "oracle", "stats": {} })
                                .to_string(),
                        },
                    })
                }
                "kcenter" => {
                    let metric = match metric.as_str() {
                        "linf" => Metric::Linf,
                        "l2" => Metric::L2,
                        m => return Err(Error::Invalid(format!("unknown metric '{m}'"))),
                    };
                    let s = brute_discrete_kcenter(points, k, metric, budget)?;
                    let key = if metric == Metric::L2 { "radius_squared" } else { "radius" };
                    let mut v = json!({ "status": "ok", "witness": s.centers, "provenance": "oracle", "stats": {} });
                    v["radius"] = rat_str(&s.value);
                    v["stats"]["value_kind"] = json!(key);
                    Ok(ok(v))
                }
                "maxcov" => {
                    let best = brute_maxcov(points, rects, budget)?;
                    Ok(match best {
                        Some(((a, b), c)) => ok(json!({ "status": "ok", "count": c, "witness": [a, b], "provenance": "oracle", "stats": {} })),
                        None => Outcome {
                            code: 2,
                            stdout: json!({ "status": "infeasible", "count": 0, "witness": [], "provenance": "oracle", "stats": {} }).to_string(),
                        },
                    })
                }
                p => Err(Error::Invalid(format!("unknown problem '{p}'"))),
            }
        }
        Cmd::Bench { variant, sizes, reps, seed, grid, oracle_check, out } => {
            let cfg = BenchConfig { variant: variant.parse()?, sizes, reps: reps.max(1), seed, g: grid, oracle: oracle_check };
            let recs = bench::run(&cfg, |_| {})?;
            let mut csv = String::from(CSV_HEADER);
            csv.push('\n');
            for r in &recs {
                csv.push_str(&r.csv());
                csv.push('\n');
            }
            let mismatches = recs.iter().filter(|r| r.oracle_weight.as_ref().is_some_and(|o| *o != r.weight)).count();
            match out {
                Some(p) => {
                    write_out(&p, &csv)?;
                    let medians: Vec<Value> = cfg
                        .sizes
                        .iter()
                        .map(|&n| json!({ "n": n, "median_seconds": bench::median_seconds(&recs, n) }))
                        .collect();
                    Ok(Outcome {
                        code: (mismatches > 0) as i32,
                        stdout: json!({ "status": if mismatches > 0 { "mismatch" } else { "ok" }, "out": p.display().to_string(), "stats": { "medians": medians, "oracle_mismatches": mismatches } })
                            .to_string(),
                    })
                }
                None => Ok(Outcome { code: (mismatches > 0) as i32, stdout: csv.trim_end().to_string() }),
            }
        }
    }
}

fn source_of(doc: &Document) -> Result<Source> {
    match (&doc.graph, &doc.hypergraph) {
        (Some(g), None) => Ok(Source::Graph(g.clone())),
        (None, Some(h)) => Ok(Source::Hypergraph(h.clone())),
        _ => Err(Error::Invalid("source file needs exactly one graph or hypergraph section".into())),
    }
}

fn instance_from_doc(kind: ReductionKind, doc: &Document) -> Result<ReductionInstance> {
    let threshold = doc
        .meta("threshold")
        .and_then(parse_rational)
        .ok_or_else(|| Error::Invalid("instance lacks a threshold".into()))?;
    Ok(ReductionInstance {
        kind,
        points: doc.points.as_ref().map(|p| p.1.clone()).unwrap_or_default(),
        ring_points: doc.ring_points.as_ref().map(|p| p.1.clone()).unwrap_or_default(),
        roles: Vec::new(),
        ranges: doc.ranges.as_ref().map(|r| r.2.clone()).unwrap_or_default(),
        threshold,
    })
}

/// Text of the instance document for `kind`.
pub fn instance_document(inst: &ReductionInstance) -> Document {
    let mut doc = Document::default();
    doc.meta.push(("reduction".into(), inst.kind.name().into()));
    if let ReductionKind::HypercliqueDkc { kappa } = inst.kind {
        doc.meta.push(("kappa".into(), kappa.to_string()));
    }
    doc.meta.push(("threshold".into(), fmt_rational(&inst.threshold)));
    let d = inst.kind.dim();
    if inst.ring_points.is_empty() {
        doc.points = Some((d, inst.points.clone()));
    } else {
        doc.ring_points = Some((d, inst.ring_points.clone()));
    }
    if !inst.ranges.is_empty() {
        let weighted = inst.ranges.iter().any(|r| r.weight.is_some());
        doc.ranges = Some((d, weighted, inst.ranges.clone()));
    }
    doc
}

fn gen_text(kind: &str, input: Option<&Path>, seed: u64, n: usize, kappa: usize) -> Result<String> {
    let mut rng = gen::rng(seed);
    let side = (n as i64).max(4);
    let plain = |inst: gen::Instance| {
        let weighted = inst.rects.iter().any(|r| r.weight.is_some());
        io::print_document(&Document { points: Some((2, inst.points)), ranges: Some((2, weighted, inst.rects)), ..Default::default() })
    };
    match kind {
        "rects" => return Ok(plain(gen::random_rects(&mut rng, n, false, 4 * side))),
        "weighted-rects" => return Ok(plain(gen::random_rects(&mut rng, n, true, 4 * side))),
        "unit-squares" => return Ok(plain(gen::random_unit_squares(&mut rng, n, false, side))),
        "weighted-unit-squares" => return Ok(plain(gen::random_unit_squares(&mut rng, n, true, side))),
        "unit-scaling" => return Ok(plain(gen::scaling_unit_squares(&mut rng, n))),
        "planar-points" => {
            let inst = gen::random_rects(&mut rng, n, false, 4 * side);
            return Ok(io::print_document(&Document { points: Some((2, inst.points)), ..Default::default() }));
        }
        "graph" => {
            let g = gen::random_weighted_graph(&mut rng, n.max(2), 0.6, false);
            return Ok(io::print_document(&Document { graph: Some(g), ..Default::default() }));
        }
        "hypergraph" => {
            let h = gen::random_hypergraph(&mut rng, 6, n.clamp(1, 3), 0.85, seed % 2 == 0);
            return Ok(io::print_document(&Document { hypergraph: Some(h), ..Default::default() }));
        }
        _ => {}
    }
    let rk = ReductionKind::parse(kind, kappa)
        .map_err(|_| Error::Invalid(format!("unknown kind '{kind}'")))?;
    let src = match input {
        Some(p) => source_of(&read_doc(p)?)?,
        None if rk.takes_hypergraph() => {
            let parts = match rk {
                ReductionKind::HypercliqueDkc { kappa } => 3 * kappa,
                _ => 6,
            };
            let h = gen::random_hypergraph(&mut rng, parts, 2, 0.85, seed % 2 == 0);
            Source::Hypergraph(if rk == ReductionKind::MaxCov2R12 { pad_parts(&h)? } else { h })
        }
        None => {
            let weighted = matches!(rk, ReductionKind::WeightedTriangleR2 | ReductionKind::FourCliqueCover6R2);
            let mut g = gen::random_weighted_graph(&mut rng, n.clamp(2, 8), 0.6, rk == ReductionKind::FourCliqueCover6R2);
            if !weighted {
                g.edges.iter_mut().for_each(|e| e.2 = None);
            }
            Source::Graph(g)
        }
    };
    let inst = reductions::generate(rk, &src)?;
    Ok(io::print_document(&instance_document(&inst)))
}
