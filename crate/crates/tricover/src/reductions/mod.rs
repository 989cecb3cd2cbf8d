//! Generators for the hardness constructions and verifiers that compare the
//! source-side answer with the geometry-side answer.

mod build;
mod enumerate;
mod graph;
mod ring;
mod verify;

pub use build::{
    dkc_constants, embed_unit_circle, gen_4clique_cover6_r2, gen_d3c_r4, gen_d3c_r4_open_shift, gen_hyperclique_d2c_r13, gen_hyperclique_dkc,
    gen_maxcov2_r12, gen_maxcov2_r12_balanced, gen_triangle_boxes_r3, gen_triangle_orthants_r4, gen_weighted_triangle_r2, maxcov_triples,
    pad_parts, PointRole, ReductionInstance, ReductionKind, TripleFamily, SENTINEL,
};
pub use enumerate::{all_graphs, graph_classes, spread_labels};
pub use graph::{normalize, HVertex, PartiteHypergraph3, WeightedGraph};
pub use ring::{dist2_q39, Q39};
pub use verify::{dkc_brute_q39, verify_reduction, Source, VerificationReport};

use crate::error::Result;

/// Runs the generator for `kind` on `src`.
pub fn generate(kind: ReductionKind, src: &Source) -> Result<ReductionInstance> {
    let g = || match src {
        Source::Graph(g) => Ok(g),
        Source::Hypergraph(_) => Err(crate::Error::Invalid(format!("{} expects a graph", kind.name()))),
    };
    let h = || match src {
        Source::Hypergraph(h) => Ok(h),
        Source::Graph(_) => Err(crate::Error::Invalid(format!("{} expects a hypergraph", kind.name()))),
    };
    match kind {
        ReductionKind::WeightedTriangleR2 => gen_weighted_triangle_r2(g()?),
        ReductionKind::TriangleBoxesR3 => gen_triangle_boxes_r3(g()?),
        ReductionKind::TriangleOrthantsR4 => gen_triangle_orthants_r4(g()?),
        ReductionKind::D3cR4 => gen_d3c_r4(g()?),
        ReductionKind::FourCliqueCover6R2 => gen_4clique_cover6_r2(g()?),
        ReductionKind::HypercliqueD2cR13 => gen_hyperclique_d2c_r13(h()?),
        ReductionKind::HypercliqueDkc { kappa } => gen_hyperclique_dkc(h()?, kappa),
        ReductionKind::MaxCov2R12 => gen_maxcov2_r12(h()?),
    }
}
