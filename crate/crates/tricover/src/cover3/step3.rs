//! Guess enumeration over combinatorial arrangements and region-based
//! candidate recovery.

use std::collections::HashMap;

use rayon::prelude::*;

use super::ctx::{merge, Cand, Ctx, Stats};
use super::engine::{classify, CellType, Desc, GuessConfig};
use super::Provenance;
use crate::planar::KRect;
use crate::range_index::Rank;

/// Per-worker cache of enclosure answers keyed by query box.
pub(crate) struct Evaluator<'a> {
    pub ctx: &'a Ctx,
    cache: HashMap<Option<KRect>, Vec<Rank>>,
    buf: Vec<Rank>,
}

impl<'a> Evaluator<'a> {
    pub fn new(ctx: &'a Ctx) -> Self {
        Evaluator { ctx, cache: HashMap::new(), buf: Vec::with_capacity(3) }
    }

    /// Three cheapest enclosers of `b`, or of nothing when `b` is absent.
    pub fn top3(&mut self, b: Option<KRect>) -> Vec<Rank> {
        if let Some(v) = self.cache.get(&b) {
            return v.clone();
        }
        let q = b.unwrap_or(crate::pair_oracle::ANY);
        self.ctx.po.eidx.top_k(&q, 3, &[], &mut self.buf);
        if self.cache.len() > 1 << 16 {
            self.cache.clear();
        }
        self.cache.insert(b, self.buf.clone());
        self.buf.clone()
    }

    /// Bounding boxes of the points in each rectangle's assigned region, or
    /// `None` when `prune` is set and a cell outside all three holds a point.
    pub fn regions(&self, cfg: &GuessConfig, prune: bool) -> Option<[Option<KRect>; 3]> {
        let g = &self.ctx.grid;
        let ca = classify(cfg, g.ncols(), g.nrows());
        if ca.unclassified > 0 {
            Stats::add(&self.ctx.stats.unclassified, ca.unclassified as u64);
        }
        let pidx = &self.ctx.po.pidx;
        let mut boxes: [Option<KRect>; 3] = [None; 3];
        // Emptiness checks first: they reject most wrong guesses cheaply.
        for b in ca.blocks.iter().filter(|_| prune) {
            if b.ty == CellType::Empty && pidx.count(&g.block(b.c0 as usize, b.c1 as usize, b.r0 as usize, b.r1 as usize)) > 0 {
                return None;
            }
        }
        for b in &ca.blocks {
            if b.mask == 0 {
                continue;
            }
            let Some(e) = pidx.extremes(&g.block(b.c0 as usize, b.c1 as usize, b.r0 as usize, b.r1 as usize)) else {
                continue;
            };
            for (j, bx) in boxes.iter_mut().enumerate() {
                if b.mask >> j & 1 == 1 {
                    *bx = Some(bx.map_or(e, |h| h.hull(&e)));
                }
            }
        }
        Some(boxes)
    }

    pub fn eval(&mut self, cfg: &GuessConfig, prov: Provenance) -> Option<Cand> {
        Stats::add(&self.ctx.stats.guesses, 1);
        let boxes = self.regions(cfg, true)?;
        let lists = [self.top3(boxes[0]), self.top3(boxes[1]), self.top3(boxes[2])];
        best_combo(self.ctx, [&lists[0], &lists[1], &lists[2]], prov)
    }
}

/// Cheapest covering triple of distinct rectangles taking one from each list.
pub(crate) fn best_combo(ctx: &Ctx, lists: [&[Rank]; 3], prov: Provenance) -> Option<Cand> {
    let mut combos: Vec<Cand> = Vec::with_capacity(27);
    for a in lists[0] {
        for b in lists[1] {
            if b.1 == a.1 {
                continue;
            }
            for c in lists[2] {
                if c.1 == a.1 || c.1 == b.1 {
                    continue;
                }
                combos.push(Cand::new(a.0 as i128 + b.0 as i128 + c.0 as i128, [a.1, b.1, c.1], prov));
            }
        }
    }
    combos.sort_unstable_by_key(|c| (c.w, c.ids));
    combos.dedup_by_key(|c| c.ids);
    combos.into_iter().find(|c| ctx.covers3(c.ids[0], c.ids[1], c.ids[2]))
}

type Part = (Option<u16>, Option<u16>);

/// Side placements of one rectangle along one axis of an `n`-slab grid.
fn parts(n: usize) -> Vec<Part> {
    let n = n as u16;
    let mut v = vec![(None, None)];
    for c in 0..n {
        v.push((Some(c), None));
        v.push((None, Some(c)));
        for d in c..n {
            v.push((Some(c), Some(d)));
        }
    }
    v
}

fn part_slabs(p: &Part) -> impl Iterator<Item = u16> {
    p.0.into_iter().chain(p.1)
}

/// Ordered placements for three rectangles: different rectangles use
/// different slabs and each direction is left open by one of them.
pub(crate) fn part_triples(n: usize) -> Vec<[Part; 3]> {
    let ps = parts(n);
    let disjoint = |a: &Part, b: &Part| part_slabs(a).all(|x| part_slabs(b).all(|y| x != y));
    let mut out = Vec::new();
    for a in &ps {
        for b in &ps {
            if !disjoint(a, b) {
                continue;
            }
            for c in &ps {
                if !disjoint(a, c) || !disjoint(b, c) {
                    continue;
                }
                let t = [*a, *b, *c];
                if t.iter().any(|p| p.0.is_none()) && t.iter().any(|p| p.1.is_none()) {
                    out.push(t);
                }
            }
        }
    }
    out
}

fn desc(x: Part, y: Part) -> Desc {
    Desc { xl: x.0, xh: x.1, yl: y.0, yh: y.1 }
}

/// All arrangements with sides on an `ncols × nrows` grid, one per unordered triple.
pub(crate) fn all_configs(ncols: usize, nrows: usize) -> (Vec<[Part; 3]>, Vec<[Part; 3]>) {
    (part_triples(ncols), part_triples(nrows))
}

pub(crate) fn run_all(ctx: &Ctx) -> Option<Cand> {
    let (xt, yt) = all_configs(ctx.grid.ncols(), ctx.grid.nrows());
    xt.par_iter()
        .map_init(
            || Evaluator::new(ctx),
            |ev, x| {
                let mut best = None;
                for y in &yt {
                    let d = [desc(x[0], y[0]), desc(x[1], y[1]), desc(x[2], y[2])];
                    if d[0] > d[1] || d[1] > d[2] {
                        continue;
                    }
                    best = merge(best, ev.eval(&GuessConfig::new(d), Provenance::Step3));
                }
                best
            },
        )
        .reduce(|| None, merge)
}

/// Number of arrangements `run_all` evaluates.
pub fn count_all_configs(ncols: usize, nrows: usize) -> u64 {
    let (xt, yt) = all_configs(ncols, nrows);
    let mut n = 0;
    for x in &xt {
        for y in &yt {
            let d = [desc(x[0], y[0]), desc(x[1], y[1]), desc(x[2], y[2])];
            if d[0] <= d[1] && d[1] <= d[2] {
                n += 1;
            }
        }
    }
    n
}

/// Descriptor of an actual rectangle on the context grid.
pub(crate) fn desc_of(ctx: &Ctx, r: &KRect) -> Desc {
    let g = &ctx.grid;
    Desc {
        xl: g.side_col(r.xl).map(|c| c as u16),
        xh: g.side_col(r.xh).map(|c| c as u16),
        yl: g.side_row(r.yl).map(|c| c as u16),
        yh: g.side_row(r.yh).map(|c| c as u16),
    }
}

/// Arrangements built only from descriptors realized by rectangles of the family.
pub(crate) fn run_realized(ctx: &Ctx) -> Option<Cand> {
    let mut ds: Vec<Desc> = ctx.rects.iter().map(|r| desc_of(ctx, r)).collect();
    ds.sort_unstable();
    ds.dedup();
    let m = ds.len();
    (0..m)
        .into_par_iter()
        .map_init(
            || Evaluator::new(ctx),
            |ev, i| {
                let mut best = None;
                for j in i..m {
                    let pair = GuessConfig::new([ds[i], ds[j], Desc::FREE]);
                    if !pair.separated() {
                        continue;
                    }
                    for k in j..m {
                        let cfg = GuessConfig::new([ds[i], ds[j], ds[k]]);
                        if cfg.reaches_all_directions() && cfg.separated() {
                            best = merge(best, ev.eval(&cfg, Provenance::Step3));
                        }
                    }
                }
                best
            },
        )
        .reduce(|| None, merge)
}
