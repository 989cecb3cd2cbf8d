//! Double-oracle checks: the graph-side answer against the geometry-side answer.

use super::build::{ReductionInstance, ReductionKind};
use super::graph::{PartiteHypergraph3, WeightedGraph};
use super::ring::{dist2_q39, Q39};
use crate::error::{Error, Result};
use crate::geom::int;
use crate::kcenter::Metric;
use crate::oracles::{
    brute_cover_k, brute_discrete_kcenter, brute_maxcov, graph_has_triangle, graph_min_4clique, graph_min_triangle,
    hyperclique, kcenter_on_matrix, OracleBudget,
};
use crate::Rational;

/// Input a construction was built from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Graph(WeightedGraph),
    Hypergraph(PartiteHypergraph3),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub kind: ReductionKind,
    /// Triangle, 4-clique or hyperclique found.
    pub source_yes: bool,
    /// Minimum triangle or 4-clique weight, when the kind is weighted.
    pub source_value: Option<Rational>,
    /// Threshold test passed on the geometry side.
    pub geometry_yes: bool,
    /// Optimal cover weight, radius, squared radius or count. For the ring
    /// construction this is `None` and `geometry_ring_value` is set.
    pub geometry_value: Option<Rational>,
    pub geometry_ring_value: Option<Q39>,
    pub agree: bool,
}

fn graph(src: &Source) -> Result<&WeightedGraph> {
    match src {
        Source::Graph(g) => Ok(g),
        Source::Hypergraph(_) => Err(Error::Invalid("construction expects a graph".into())),
    }
}

fn hgraph(src: &Source) -> Result<&PartiteHypergraph3> {
    match src {
        Source::Hypergraph(h) => Ok(h),
        Source::Graph(_) => Err(Error::Invalid("construction expects a hypergraph".into())),
    }
}

/// Discrete `k`-center over points with coordinates in the √39 extension;
/// returns the squared radius.
pub fn dkc_brute_q39(points: &[Vec<Q39>], k: usize, budget: &OracleBudget) -> Result<(Q39, Vec<usize>)> {
    let d: Vec<Vec<Q39>> = points.iter().map(|a| points.iter().map(|b| dist2_q39(a, b)).collect()).collect();
    kcenter_on_matrix(&d, k, budget)
}

pub fn verify_reduction(src: &Source, inst: &ReductionInstance, budget: &OracleBudget) -> Result<VerificationReport> {
    let kind = inst.kind;
    let mut rep = VerificationReport {
        kind,
        source_yes: false,
        source_value: None,
        geometry_yes: false,
        geometry_value: None,
        geometry_ring_value: None,
        agree: false,
    };
    match kind {
        ReductionKind::WeightedTriangleR2 | ReductionKind::FourCliqueCover6R2 => {
            let g = graph(src)?;
            let (k, best) = if kind == ReductionKind::WeightedTriangleR2 {
                (3, graph_min_triangle(g).map(|t| t.1))
            } else {
                (6, graph_min_4clique(g).map(|t| t.1))
            };
            let cover = brute_cover_k(&inst.points, &inst.ranges, k, true, budget)?;
            rep.source_yes = best.is_some();
            rep.source_value = best.clone();
            rep.geometry_value = cover.map(|c| c.1);
            rep.geometry_yes = rep.geometry_value.as_ref().is_some_and(|w| *w < &inst.threshold + int(1));
            rep.agree = match (&best, &rep.geometry_value) {
                (Some(w), Some(c)) => *c == &inst.threshold + w,
                (None, None) => true,
                // Without a clique a cover may still exist, but only at weight ≥ threshold + 1.
                (None, Some(_)) => !rep.geometry_yes,
                (Some(_), None) => false,
            };
        }
        ReductionKind::TriangleBoxesR3 | ReductionKind::TriangleOrthantsR4 => {
            let g = graph(src)?;
            rep.source_yes = graph_has_triangle(g);
            let cover = brute_cover_k(&inst.points, &inst.ranges, 3, false, budget)?;
            rep.geometry_yes = cover.is_some();
            rep.geometry_value = cover.map(|c| c.1);
            rep.agree = rep.source_yes == rep.geometry_yes;
        }
        ReductionKind::D3cR4 => {
            let g = graph(src)?;
            rep.source_yes = graph_has_triangle(g);
            let sol = brute_discrete_kcenter(&inst.points, 3, Metric::Linf, budget)?;
            rep.geometry_yes = sol.value <= inst.threshold;
            rep.geometry_value = Some(sol.value);
            rep.agree = rep.source_yes == rep.geometry_yes;
        }
        ReductionKind::HypercliqueD2cR13 => {
            let h = hgraph(src)?;
            rep.source_yes = hyperclique(h, 6);
            let sol = brute_discrete_kcenter(&inst.points, 2, Metric::L2, budget)?;
            rep.geometry_yes = sol.value < inst.threshold;
            rep.geometry_value = Some(sol.value);
            rep.agree = rep.source_yes == rep.geometry_yes;
        }
        ReductionKind::HypercliqueDkc { kappa } => {
            let h = hgraph(src)?;
            rep.source_yes = hyperclique(h, 3 * kappa);
            let (v, _) = dkc_brute_q39(&inst.ring_points, kappa, budget)?;
            rep.geometry_yes = v < Q39::rational(inst.threshold.clone());
            rep.geometry_ring_value = Some(v);
            rep.agree = rep.source_yes == rep.geometry_yes;
        }
        ReductionKind::MaxCov2R12 => {
            let h = hgraph(src)?;
            rep.source_yes = hyperclique(h, 6);
            let best = brute_maxcov(&inst.points, &inst.ranges, budget)?;
            let count = best.map_or(0, |b| b.1);
            rep.geometry_yes = int(count as i64) >= inst.threshold;
            rep.geometry_value = Some(int(count as i64));
            rep.agree = rep.source_yes == rep.geometry_yes;
        }
    }
    Ok(rep)
}
