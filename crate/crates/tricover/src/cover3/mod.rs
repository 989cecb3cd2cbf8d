//! Minimum-weight cover of a planar point set by three rectangles.

mod ctx;
pub mod engine;
mod step3;
mod unit;
mod weighted;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::Ordering;

use crate::error::{Error, Result};
use crate::geom::{ExtRect, PointD, Rational};
use crate::grid::maximal_indices;
use crate::oracles::{brute_cover_k, OracleBudget};
use crate::planar::Planar;
use ctx::{merge, Cand, Ctx};
pub use engine::{classify, Block, CellAssignment, CellType, Desc, GuessConfig, Rel};
pub use step3::count_all_configs;

/// Which part of a solver produced the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Step1,
    Step2,
    Step3,
    CaseI,
    CaseII,
    CaseIII,
    UnitCaseII,
    UnitCaseIII,
    Oracle,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Step1 => "step1",
            Provenance::Step2 => "step2",
            Provenance::Step3 => "step3",
            Provenance::CaseI => "case1",
            Provenance::CaseII => "case2",
            Provenance::CaseIII => "case3",
            Provenance::UnitCaseII => "unit-case2",
            Provenance::UnitCaseIII => "unit-case3",
            Provenance::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Auto,
    Basic,
    Unweighted,
    WeightedRect,
    UnitW,
    UnitUnw,
    Oracle,
}

impl Variant {
    pub const ALL: [Variant; 7] =
        [Variant::Auto, Variant::Basic, Variant::Unweighted, Variant::WeightedRect, Variant::UnitW, Variant::UnitUnw, Variant::Oracle];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Auto => "auto",
            Variant::Basic => "basic",
            Variant::Unweighted => "unweighted",
            Variant::WeightedRect => "weighted-rect",
            Variant::UnitW => "unit-w",
            Variant::UnitUnw => "unit-unw",
            Variant::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    /// Accepts the names above, with `_` for `-`, plus the long forms
    /// `weighted-rectangles`, `unit-weighted` and `unit-unweighted`.
    fn from_str(s: &str) -> Result<Variant> {
        let t = s.replace('_', "-");
        let t = match t.as_str() {
            "weighted-rectangles" | "weighted" => "weighted-rect",
            "unit-weighted" => "unit-w",
            "unit-unweighted" => "unit-unw",
            other => other,
        };
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == t)
            .ok_or_else(|| Error::Invalid(format!("unknown variant {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover3Solution {
    /// Rectangle ids, increasing.
    pub ids: [usize; 3],
    pub weight: Rational,
    pub provenance: Provenance,
}

/// Solution together with the work counters of the run.
#[derive(Clone, Debug)]
pub struct SolveReport {
    pub solution: Option<Cover3Solution>,
    pub variant: Variant,
    pub g: usize,
    /// Guessed arrangements evaluated.
    pub guesses: u64,
    /// Boundary cells left unassigned by the walk rule.
    pub unclassified: u64,
    pub pair_queries: u64,
}

/// Default grid parameter for `variant` on an instance of size `n`.
pub fn default_g(variant: Variant, n: usize) -> usize {
    let e = match variant {
        Variant::Basic => 2.0 / 9.0,
        Variant::Unweighted => 1.0 / 3.0,
        Variant::WeightedRect => 0.25,
        Variant::UnitW => 0.4,
        Variant::UnitUnw => 0.5,
        Variant::Auto | Variant::Oracle => return 1,
    };
    ((n.max(1) as f64).powf(e).ceil() as usize).max(1)
}

fn is_unit_square(r: &ExtRect) -> bool {
    r.dim() == 2
        && r.is_closed()
        && r.sides.iter().all(|s| match (s.lo.finite(), s.hi.finite()) {
            (Some(a), Some(b)) => b - a == Rational::from_integer(1.into()),
            _ => false,
        })
}

fn check_unit(rects: &[ExtRect]) -> Result<()> {
    match rects.iter().find(|r| !is_unit_square(r)) {
        Some(r) => Err(Error::NotUnitSquare(r.id)),
        None => Ok(()),
    }
}

/// Picks the variant matching the input: unit squares or general
/// rectangles, weighted or not.
pub fn auto_variant(rects: &[ExtRect]) -> Variant {
    let weighted = rects.iter().any(|r| r.weight.is_some());
    let unit = !rects.is_empty() && rects.iter().all(is_unit_square);
    match (unit, weighted) {
        (true, true) => Variant::UnitW,
        (true, false) => Variant::UnitUnw,
        (false, true) => Variant::WeightedRect,
        (false, false) => Variant::Unweighted,
    }
}

fn to_solution(pl: &Planar, ctx: &Ctx, c: Option<Cand>) -> Option<Cover3Solution> {
    let c = c?;
    let mut ids = c.ids.map(|i| pl.ids[ctx.members[i as usize] as usize]);
    ids.sort_unstable();
    Some(Cover3Solution { ids, weight: pl.weight_value(c.w), provenance: c.prov })
}

fn report(pl: &Planar, ctx: &Ctx, c: Option<Cand>, variant: Variant, g: usize) -> SolveReport {
    SolveReport {
        solution: to_solution(pl, ctx, c),
        variant,
        g,
        guesses: ctx.stats.guesses.load(Ordering::Relaxed),
        unclassified: ctx.stats.unclassified.load(Ordering::Relaxed),
        pair_queries: ctx.stats.pair_queries.load(Ordering::Relaxed),
    }
}

fn empty_report(variant: Variant, g: usize) -> SolveReport {
    SolveReport { solution: None, variant, g, guesses: 0, unclassified: 0, pair_queries: 0 }
}

/// Runs `variant` and returns the answer with work counters. `g` overrides
/// the default grid parameter.
pub fn solve_report(points: &[PointD], rects: &[ExtRect], variant: Variant, g: Option<usize>) -> Result<SolveReport> {
    let variant = if variant == Variant::Auto { auto_variant(rects) } else { variant };
    let pl = Planar::new(points, rects)?;
    let n = pl.n_points().max(pl.n_rects());
    let g = g.unwrap_or_else(|| default_g(variant, n)).max(1);
    if matches!(variant, Variant::UnitW | Variant::UnitUnw) {
        check_unit(rects)?;
    }
    if matches!(variant, Variant::Unweighted | Variant::UnitUnw) && pl.weighted {
        return Err(Error::WeightedInput);
    }
    if variant == Variant::Oracle {
        let budget = OracleBudget { max_subsets: u128::MAX, ..OracleBudget::default() };
        let sol = brute_cover_k(points, rects, 3, pl.weighted, &budget)?;
        return Ok(SolveReport {
            solution: sol.map(|(ids, w)| Cover3Solution { ids: [ids[0], ids[1], ids[2]], weight: w, provenance: Provenance::Oracle }),
            ..empty_report(variant, g)
        });
    }
    if pl.n_rects() < 3 {
        return Ok(empty_report(variant, g));
    }
    let ext = pl.extended();
    let mut members: Vec<u32> = (0..pl.n_rects() as u32).collect();
    if matches!(variant, Variant::Unweighted | Variant::UnitUnw) {
        // Only maximal rectangles matter; keep three members so that a cover
        // using a repeated maximal rectangle can still be reported.
        let keep = maximal_indices(&ext);
        if keep.len() >= 3 {
            members = keep.into_iter().map(|i| i as u32).collect();
        } else {
            let mut m: Vec<u32> = keep.iter().map(|&i| i as u32).collect();
            for i in 0..pl.n_rects() as u32 {
                if m.len() == 3 {
                    break;
                }
                if !m.contains(&i) {
                    m.push(i);
                }
            }
            m.sort_unstable();
            members = m;
        }
    }
    let ctx = Ctx::new(&pl, &ext, members, g);
    let mut best = merge(ctx.step1(), ctx.step2());
    match variant {
        Variant::Basic => best = merge(best, step3::run_all(&ctx)),
        Variant::Unweighted => best = merge(best, step3::run_realized(&ctx)),
        Variant::WeightedRect => {
            best = merge(best, weighted::case1(&ctx));
            best = merge(best, weighted::case2(&ctx));
            best = merge(best, weighted::case3(&ctx));
        }
        Variant::UnitW | Variant::UnitUnw => {
            best = merge(best, weighted::case1(&ctx));
            let all_quadrants = variant == Variant::UnitW;
            for s in unit::Sym::all() {
                let t = unit::transformed(&ctx, &pl.pts, s, g);
                best = merge(best, unit::staircase(&t));
                best = merge(best, unit::peak(&t, all_quadrants));
                ctx::Stats::add(&ctx.stats.guesses, t.stats.guesses.load(Ordering::Relaxed));
                ctx::Stats::add(&ctx.stats.unclassified, t.stats.unclassified.load(Ordering::Relaxed));
                ctx::Stats::add(&ctx.stats.pair_queries, t.stats.pair_queries.load(Ordering::Relaxed));
            }
        }
        Variant::Auto | Variant::Oracle => unreachable!(),
    }
    Ok(report(&pl, &ctx, best, variant, g))
}

pub fn solve(points: &[PointD], rects: &[ExtRect], variant: Variant, g: Option<usize>) -> Result<Option<Cover3Solution>> {
    solve_report(points, rects, variant, g).map(|r| r.solution)
}

/// Exhaustive arrangements over a grid of about `n^(2/9)` slabs.
pub fn solve_basic(points: &[PointD], rects: &[ExtRect]) -> Result<Option<Cover3Solution>> {
    solve(points, rects, Variant::Basic, None)
}

/// Unweighted rectangles; arrangements drawn from maximal rectangles.
pub fn solve_unweighted(points: &[PointD], rects: &[ExtRect]) -> Result<Option<Cover3Solution>> {
    solve(points, rects, Variant::Unweighted, None)
}

pub fn solve_weighted_rect(points: &[PointD], rects: &[ExtRect]) -> Result<Option<Cover3Solution>> {
    solve(points, rects, Variant::WeightedRect, None)
}

pub fn solve_unit_squares_weighted(points: &[PointD], rects: &[ExtRect]) -> Result<Option<Cover3Solution>> {
    solve(points, rects, Variant::UnitW, None)
}

pub fn solve_unit_squares_unweighted(points: &[PointD], rects: &[ExtRect]) -> Result<Option<Cover3Solution>> {
    solve(points, rects, Variant::UnitUnw, None)
}

/// Classifies the cells of an `ncols × nrows` grid against `cfg`.
pub fn classify_cells(cfg: &GuessConfig, ncols: usize, nrows: usize) -> Result<CellAssignment> {
    cfg.validate(ncols, nrows)?;
    Ok(classify(cfg, ncols, nrows))
}
