//! Timing harness behind `tricover bench`: seeded instances, repeated runs,
//! and one CSV row per run.

use std::time::Instant;

use crate::cover3::{solve_report, Variant};
use crate::error::Result;
use crate::gen::{self, Instance};
use crate::geom::fmt_rational;
use crate::oracles::{brute_cover_k, OracleBudget};

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRecord {
    pub variant: Variant,
    pub n: usize,
    pub g: usize,
    pub rep: usize,
    pub seconds: f64,
    pub guesses: u64,
    pub unclassified: u64,
    pub pair_queries: u64,
    /// Exact weight of the answer, or "none".
    pub weight: String,
    /// Oracle weight when requested.
    pub oracle_weight: Option<String>,
}

pub const CSV_HEADER: &str = "variant,n,g,rep,seconds,guesses,unclassified,pair_queries,weight,oracle_weight";

impl BenchRecord {
    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{:.6},{},{},{},{},{}",
            self.variant,
            self.n,
            self.g,
            self.rep,
            self.seconds,
            self.guesses,
            self.unclassified,
            self.pair_queries,
            self.weight,
            self.oracle_weight.as_deref().unwrap_or("")
        )
    }
}

/// Constant `c` in the checked guess bounds `c·g⁸` (basic) and `c·g⁵` (unweighted).
pub const GUESS_BOUND_C: f64 = 32.0;

/// Upper bound on the guess count of `variant` at grid size `g`, if one is checked.
pub fn guess_bound(variant: Variant, g: usize) -> Option<f64> {
    let e = match variant {
        Variant::Basic => 8,
        Variant::Unweighted => 5,
        _ => return None,
    };
    Some(GUESS_BOUND_C * (g as f64).powi(e))
}

/// Instance family used for `variant` at size `n`.
pub fn instance_for(variant: Variant, n: usize, seed: u64) -> Instance {
    let mut rng = gen::rng(seed);
    match variant {
        Variant::UnitUnw => gen::scaling_unit_squares(&mut rng, n),
        Variant::UnitW => gen::random_unit_squares(&mut rng, n, true, (n as f64).sqrt().ceil() as i64 + 2),
        Variant::Unweighted => gen::random_rects(&mut rng, n, false, 4 * n as i64),
        _ => gen::random_rects(&mut rng, n, true, 4 * n as i64),
    }
}

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub variant: Variant,
    pub sizes: Vec<usize>,
    pub reps: usize,
    pub seed: u64,
    pub g: Option<usize>,
    pub oracle: bool,
}

/// Runs every size `reps` times; instance `(n, rep)` uses seed `seed + rep`.
pub fn run(cfg: &BenchConfig, mut each: impl FnMut(&BenchRecord)) -> Result<Vec<BenchRecord>> {
    let mut out = Vec::new();
    for &n in &cfg.sizes {
        for rep in 0..cfg.reps {
            let inst = instance_for(cfg.variant, n, cfg.seed.wrapping_add(rep as u64));
            let t = Instant::now();
            let r = solve_report(&inst.points, &inst.rects, cfg.variant, cfg.g)?;
            let seconds = t.elapsed().as_secs_f64();
            let weight = r.solution.as_ref().map_or("none".to_string(), |s| fmt_rational(&s.weight));
            let oracle_weight = if cfg.oracle {
                let b = OracleBudget { max_subsets: u128::MAX, ..Default::default() };
                let weighted = inst.rects.iter().any(|r| r.weight.is_some());
                let w = brute_cover_k(&inst.points, &inst.rects, 3, weighted, &b)?;
                Some(w.map_or("none".to_string(), |s| fmt_rational(&s.1)))
            } else {
                None
            };
            let rec = BenchRecord {
                variant: cfg.variant,
                n,
                g: r.g,
                rep,
                seconds,
                guesses: r.guesses,
                unclassified: r.unclassified,
                pair_queries: r.pair_queries,
                weight,
                oracle_weight,
            };
            each(&rec);
            out.push(rec);
        }
    }
    Ok(out)
}

/// Median of the per-size run times.
pub fn median_seconds(records: &[BenchRecord], n: usize) -> Option<f64> {
    let mut t: Vec<f64> = records.iter().filter(|r| r.n == n).map(|r| r.seconds).collect();
    if t.is_empty() {
        return None;
    }
    t.sort_by(f64::total_cmp);
    Some(t[t.len() / 2])
}
