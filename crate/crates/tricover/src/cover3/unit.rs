//! Guess spaces for unit squares, run under all eight axis symmetries.

use rayon::prelude::*;

use super::ctx::{merge, Cand, Ctx, Stats};
use super::engine::{Desc, GuessConfig};
use super::step3::{best_combo, desc_of, Evaluator};
use super::weighted::outside_in;
use super::Provenance;
use crate::pair_oracle::ANY;
use crate::planar::KRect;

/// One of the eight symmetries of the square acting on keys: optional
/// transpose, then optional negation of each axis.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Sym {
    pub swap: bool,
    pub fx: bool,
    pub fy: bool,
}

impl Sym {
    pub fn all() -> impl Iterator<Item = Sym> {
        (0..8).map(|m| Sym { swap: m & 1 == 1, fx: m & 2 == 2, fy: m & 4 == 4 })
    }

    pub fn point(&self, (x, y): (i64, i64)) -> (i64, i64) {
        let (x, y) = if self.swap { (y, x) } else { (x, y) };
        (if self.fx { -x } else { x }, if self.fy { -y } else { y })
    }

    pub fn rect(&self, r: &KRect) -> KRect {
        let (xl, xh, yl, yh) = if self.swap { (r.yl, r.yh, r.xl, r.xh) } else { (r.xl, r.xh, r.yl, r.yh) };
        let (xl, xh) = if self.fx { (-xh, -xl) } else { (xl, xh) };
        let (yl, yh) = if self.fy { (-yh, -yl) } else { (yl, yh) };
        KRect { xl, xh, yl, yh }
    }
}

/// Context of `base` seen through `s`; rectangle indices are unchanged.
pub(crate) fn transformed(base: &Ctx, pts: &[(i64, i64)], s: Sym, g: usize) -> Ctx {
    let p: Vec<(i64, i64)> = pts.iter().map(|&q| s.point(q)).collect();
    let r: Vec<KRect> = base.rects.iter().map(|q| s.rect(q)).collect();
    Ctx::from_parts(&p, r, base.w.clone(), base.members.clone(), g)
}

/// Centers rising from left to right: the lowest square is recovered from
/// the points below and left of the middle square's upper-right corner.
pub(crate) fn staircase(ctx: &Ctx) -> Option<Cand> {
    (0..ctx.n() as u32)
        .into_par_iter()
        .map(|b| {
            let rb = ctx.rects[b as usize];
            let hat = KRect { xh: rb.xh, yh: rb.yh, ..KRect::ALL };
            let q = outside_in(ctx, &hat, &rb).unwrap_or(ANY);
            let (_, a) = ctx.po.eidx.best(&q, &[b])?;
            ctx.pair(a, b, Provenance::UnitCaseII)
        })
        .reduce(|| None, merge)
}

/// The middle square is highest. After extension the left square is a
/// lower-left quadrant, the middle one a vertical slab and the right one a
/// horizontal slab, the slabs' fourth sides being hidden.
pub(crate) fn peak(ctx: &Ctx, all_quadrants: bool) -> Option<Cand> {
    let (nc, nr) = (ctx.grid.ncols() as u16, ctx.grid.nrows() as u16);
    let mut quads: Vec<(u16, u16)> = Vec::new();
    let mut slabs_v: Vec<(u16, u16)> = Vec::new();
    let mut slabs_h: Vec<(u16, u16)> = Vec::new();
    for r in &ctx.rects {
        let d = desc_of(ctx, r);
        if let (None, Some(c), None, Some(w)) = (d.xl, d.xh, d.yl, d.yh) {
            quads.push((c, w));
        }
        if let (Some(a), Some(b), None) = (d.xl, d.xh, d.yh) {
            slabs_v.push((a, b));
        }
        if let (Some(a), Some(b), None) = (d.yl, d.yh, d.xh) {
            slabs_h.push((a, b));
        }
    }
    if all_quadrants {
        quads = (0..nc).flat_map(|c| (0..nr).map(move |w| (c, w))).collect();
    }
    for v in [&mut quads, &mut slabs_v, &mut slabs_h] {
        v.sort_unstable();
        v.dedup();
    }
    quads
        .par_iter()
        .map_init(
            || Evaluator::new(ctx),
            |ev, &(c1, w1)| {
                let mut best = None;
                let d1 = Desc { xh: Some(c1), yh: Some(w1), ..Desc::FREE };
                for &(a, b) in &slabs_v {
                    let d2 = Desc { xl: Some(a), xh: Some(b), ..Desc::FREE };
                    if !GuessConfig::new([d1, d2, Desc::FREE]).separated() {
                        continue;
                    }
                    for &(s, t) in &slabs_h {
                        let d3 = Desc { yl: Some(s), yh: Some(t), ..Desc::FREE };
                        let mut cfg = GuessConfig::new([d1, d2, d3]);
                        if !cfg.separated() {
                            continue;
                        }
                        cfg.inside_from = [(0, 0), (0, w1), (c1, 0)];
                        Stats::add(&ctx.stats.guesses, 1);
                        let Some(boxes) = ev.regions(&cfg, true) else { continue };
                        let lists = [ev.top3(boxes[0]), ev.top3(boxes[1]), ev.top3(boxes[2])];
                        best = merge(best, best_combo(ctx, [&lists[0], &lists[1], &lists[2]], Provenance::UnitCaseIII));
                    }
                }
                best
            },
        )
        .reduce(|| None, merge)
}
